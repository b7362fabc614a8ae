//! Branching solver for the partial 3-way separator problem.
//!
//! A node first discards instances with adjacent terminals or `alpha(S0) > k`
//! and closes each terminal set under reachability in `G - (R ∪ S0)`. While
//! the free region `R \ N(V1 ∪ V2 ∪ V3)` still holds an independent set of
//! size `2k`, the lexicographically least one is branched on as a whole
//! (`4^{2k}` children). Afterwards single free vertices are branched on, and
//! once the free region is empty the LP rounding finishes the node.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha, alpha_at_least, least_independent_subset};
use crate::instance::{SeparatorInstance, SeparatorResult};
use crate::lp::{lp_separator, normalize, Normalized};
use crate::td::{ensure_valid, prune, TreeDecomposition};
use crate::vertex_set::VertexSet;

/// The four instances that put `v` into `V1`, `V2`, `V3` or `S0`.
pub fn branch_on<'g>(inst: &SeparatorInstance<'g>, v: usize) -> Result<[SeparatorInstance<'g>; 4]> {
    if !inst.r.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is not in r")));
    }
    Ok([0, 1, 2, 3].map(|slot| inst.moved(v, slot)))
}

/// `R \ N(V1 ∪ V2 ∪ V3)`.
pub fn free_region(inst: &SeparatorInstance<'_>) -> VertexSet {
    inst.r.difference(&inst.terminal_neighborhood())
}

/// `alpha(R \ N(V1 ∪ V2 ∪ V3))`.
pub fn measure(inst: &SeparatorInstance<'_>) -> usize {
    alpha(inst.g, &free_region(inst))
}

type Key = [VertexSet; 5];

/// Memoised search state; one per top-level query.
#[derive(Default)]
struct Search {
    memo: HashMap<Key, SeparatorResult>,
    // bound on the number of group-branching levels, checked in debug builds
    depth_cap: usize,
}

impl Search {
    fn run(&mut self, inst: &SeparatorInstance<'_>) -> Result<SeparatorResult> {
        if inst.k == 0 {
            return Ok(solve_zero(inst));
        }
        if cfg!(debug_assertions) {
            self.depth_cap = alpha(inst.g, &inst.r) / inst.k + 1;
        }
        let out = self.node(inst, 0, 0)?;
        if let SeparatorResult::Found(s) = &out {
            debug_assert!(inst.is_solution(s, 2 * inst.k));
        }
        Ok(out)
    }

    fn node(&mut self, inst: &SeparatorInstance<'_>, depth: usize, moves: usize) -> Result<SeparatorResult> {
        if inst.trivially_infeasible() {
            return Ok(SeparatorResult::NoWitness);
        }
        let mut inst = match normalize(inst) {
            Normalized::Infeasible => return Ok(SeparatorResult::NoWitness),
            Normalized::Instance(n) => n,
        };
        let forced = forced_vertices(&inst);
        if !forced.is_empty() {
            inst.r.difference_with(&forced);
            inst.s0.union_with(&forced);
            if alpha_at_least(inst.g, &inst.s0, inst.k + 1) {
                return Ok(SeparatorResult::NoWitness);
            }
        }
        let key: Key = [
            inst.r.clone(),
            inst.s0.clone(),
            inst.terminals[0].clone(),
            inst.terminals[1].clone(),
            inst.terminals[2].clone(),
        ];
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let k = inst.k;
        let free = free_region(&inst);
        let result = if free.is_empty() {
            lp_separator(&inst)?
        } else if alpha_at_least(inst.g, &free, 2 * k) {
            debug_assert!(depth < self.depth_cap, "group branching deeper than alpha(r)/k + 1");
            let group = least_independent_subset(inst.g, &free, 2 * k)
                .expect("alpha checked")
                .to_vec();
            let mut out = SeparatorResult::NoWitness;
            for slots in (0..group.len()).map(|_| 0..4usize).multi_cartesian_product() {
                let mut child = inst.clone();
                for (&v, &slot) in group.iter().zip(&slots) {
                    child = child.moved(v, slot);
                }
                out = self.node(&child, depth + 1, 0)?;
                if out.is_found() {
                    break;
                }
            }
            out
        } else {
            debug_assert!(moves <= 2 * k, "too many terminal moves below the group phase");
            let v = free.first().expect("nonempty");
            let mut out = SeparatorResult::NoWitness;
            for (slot, child) in branch_on(&inst, v)?.iter().enumerate() {
                out = self.node(child, depth, moves + usize::from(slot < 3))?;
                if out.is_found() {
                    break;
                }
            }
            out
        };
        if let SeparatorResult::Found(s) = &result {
            debug_assert!(inst.is_solution(s, 2 * k));
        }
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// Vertices of `R` adjacent to two different terminal sets. Every solution
/// contains them, since putting one on either side joins two terminal sets.
fn forced_vertices(inst: &SeparatorInstance<'_>) -> VertexSet {
    let g = inst.g;
    let n: Vec<VertexSet> = inst.terminals.iter().map(|t| g.neighborhood(t)).collect();
    let mut out = n[0].intersection(&n[1]);
    out.union_with(&n[0].intersection(&n[2]));
    out.union_with(&n[1].intersection(&n[2]));
    out.intersect_with(&inst.r);
    out
}

/// With `k = 0` the only candidate is the empty set.
fn solve_zero(inst: &SeparatorInstance<'_>) -> SeparatorResult {
    let empty = inst.g.empty_set();
    if inst.s0.is_empty() && inst.g.is_separator(&empty, &inst.terminals) {
        SeparatorResult::Found(empty)
    } else {
        SeparatorResult::NoWitness
    }
}

/// `Found(s)` has `alpha(s) <= 2k`; `NoWitness` means no solution with
/// `alpha <= k` exists.
pub fn solve_bounded(inst: &SeparatorInstance<'_>) -> Result<SeparatorResult> {
    Search::default().run(inst)
}

/// Searches for a `(V1, V2, V3)`-separator with `alpha <= k` using `td` to
/// bound where it can live: such a separator is covered by at most `2k - 1`
/// bags, so every union of that many bags is tried as `R`.
pub fn solve_with_decomposition(
    g: &Graph,
    k: usize,
    td: &TreeDecomposition,
    terminals: [VertexSet; 3],
) -> Result<SeparatorResult> {
    solve_with_decomposition_s0(g, k, td, terminals, g.empty_set())
}

/// As [`solve_with_decomposition`], with a set `s0` that must be part of
/// the separator. Bag unions missing `s0` are skipped.
pub fn solve_with_decomposition_s0(
    g: &Graph,
    k: usize,
    td: &TreeDecomposition,
    terminals: [VertexSet; 3],
    s0: VertexSet,
) -> Result<SeparatorResult> {
    ensure_valid(g, td)?;
    let probe = SeparatorInstance::new(g, terminals, s0, g.empty_set(), k)?;
    if probe.terminals_adjacent() {
        return Ok(SeparatorResult::NoWitness);
    }
    if k == 0 {
        return Ok(solve_zero(&probe));
    }
    let td = prune(td);
    let blocked = probe.terminal_union().union(&probe.s0);
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut search = Search::default();
    for size in 1..=(2 * k - 1).min(td.num_nodes()) {
        for nodes in (0..td.num_nodes()).combinations(size) {
            let mut union = g.empty_set();
            for &t in &nodes {
                union.union_with(td.bag(t));
            }
            if !probe.s0.is_subset(&union) {
                continue;
            }
            let r = union.difference(&blocked);
            if !seen.insert(r.clone()) {
                continue;
            }
            let mut inst = probe.clone();
            inst.r = r;
            let out = search.run(&inst)?;
            if out.is_found() {
                return Ok(out);
            }
        }
    }
    Ok(SeparatorResult::NoWitness)
}
