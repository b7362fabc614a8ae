//! Balanced separators, the recursive decomposition builder and the
//! iterative-compression driver.
//!
//! [`decompose`] grows the graph one vertex at a time. Each prefix gets the
//! previous decomposition with the new vertex added to every bag, which is a
//! valid decomposition of independence number at most `8k + 1`, and then a
//! fresh one from [`decompose_rec`] that uses the old one only to guide
//! separator search.

use rayon::prelude::*;

use crate::branch::solve_with_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha, alpha_at_least, least_independent_subset};
use crate::instance::SeparatorResult;
use crate::split::BalancedSplit;
use crate::td::{ensure_valid, extend_with_vertex, restrict, td_alpha, TreeDecomposition};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeResult {
    Decomposition(TreeDecomposition),
    /// Every tree decomposition has a bag with independence number above `k`.
    TooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    Split(BalancedSplit),
    TooLarge,
}

/// Everything known about one balanced split found by [`balanced_separator`].
pub struct SplitEvent<'a> {
    pub g: &'a Graph,
    pub k: usize,
    pub td_in: &'a TreeDecomposition,
    pub w: &'a VertexSet,
    pub i_set: &'a VertexSet,
    pub split: &'a BalancedSplit,
}

/// Hook called on every split the decomposer produces.
pub trait SplitObserver: Sync {
    fn on_split(&self, event: &SplitEvent<'_>);
}

#[derive(Clone, Copy, Default)]
pub struct DecomposeOptions<'a> {
    /// Number of separator queries solved concurrently; 0 or 1 is sequential.
    /// The result does not depend on this value.
    pub parallel: usize,
    pub observer: Option<&'a dyn SplitObserver>,
}

/// Upper bound on the node count of any decomposition built here.
pub fn node_budget(n: usize) -> usize {
    4 * n * n + 4 * n + 4
}

/// Postconditions of a balanced split of `w` with `alpha(w) = 6k`; returns
/// the first one that fails.
pub fn check_balanced_split(event: &SplitEvent<'_>) -> std::result::Result<(), String> {
    let SplitEvent {
        g, k, w, i_set, split, ..
    } = *event;
    if !split.is_partition(g) {
        return Err("not a partition of V(G)".into());
    }
    if !split.separates(g) {
        return Err("S does not separate the parts".into());
    }
    let a = alpha(g, &split.s);
    if a > 2 * k {
        return Err(format!("alpha(S) = {a} > {}", 2 * k));
    }
    let m = split.max_part_alpha_within(g, w);
    if m > 4 * k {
        return Err(format!("alpha(W ∩ C_i) = {m} > {}", 4 * k));
    }
    let share = split.min_pair_share(i_set);
    if share < 2 * k {
        return Err(format!("a pair of parts holds {share} < {} of I", 2 * k));
    }
    if split.empty_parts() > 1 {
        return Err("more than one empty part".into());
    }
    Ok(())
}

type Guess = [u64; 3];

/// Terminal assignments for the `6k` reference vertices, one per class of
/// assignments equal up to permuting the three parts. Vertices left out go
/// to the separator side. Ordered by the number of terminals, then by the
/// chosen subset, then by restricted-growth string; only assignments where
/// every two parts hold at least `2k` terminals are produced.
fn canonical_guesses(k: usize) -> Vec<Guess> {
    use itertools::Itertools;
    let size = 6 * k;
    let mut out = Vec::new();
    for t in 3 * k..=size {
        for subset in (0..size).combinations(t) {
            let mut labels = vec![0usize; t];
            partitions(&subset, &mut labels, 0, 0, k, &mut out);
        }
    }
    out
}

fn partitions(subset: &[usize], labels: &mut [usize], at: usize, used: usize, k: usize, out: &mut Vec<Guess>) {
    if at == subset.len() {
        let mut g = [0u64; 3];
        for (&v, &l) in subset.iter().zip(labels.iter()) {
            g[l] |= 1 << v;
        }
        let max = g.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        if subset.len() - max >= 2 * k {
            out.push(g);
        }
        return;
    }
    for l in 0..=used.min(2) {
        labels[at] = l;
        partitions(subset, labels, at + 1, used.max(l + 1), k, out);
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `guess` asks for at least as much separation as some refuted guess.
fn subsumed(guess: &Guess, refuted: &[Guess]) -> bool {
    refuted
        .iter()
        .any(|n| PERMS.iter().any(|p| (0..3).all(|i| n[i] & !guess[p[i]] == 0)))
}

/// Finds `(S, C1, C2, C3)` with `alpha(S) <= 2k`, `alpha(W ∩ C_i) <= 4k`
/// and at most one empty part, or reports that the tree-independence number
/// of `g` exceeds `k`. Requires `alpha(w) = 6k`.
pub fn balanced_separator(
    g: &Graph,
    k: usize,
    td_in: &TreeDecomposition,
    w: &VertexSet,
    opts: &DecomposeOptions<'_>,
) -> Result<SplitResult> {
    if k == 0 || 6 * k > 64 {
        return Err(Error::Precondition(format!("k = {k} is outside 1..=10")));
    }
    if alpha(g, w) != 6 * k {
        return Err(Error::Precondition(format!("alpha(W) must be exactly {}", 6 * k)));
    }
    ensure_valid(g, td_in)?;
    let i_set = least_independent_subset(g, w, 6 * k).expect("alpha checked");
    let members = i_set.to_vec();
    let as_sets = |guess: &Guess| -> [VertexSet; 3] {
        guess.map(|m| {
            g.set(
                members
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| m >> b & 1 == 1)
                    .map(|(_, &v)| v),
            )
        })
    };
    let solve = |guess: &Guess| solve_with_decomposition(g, k, td_in, as_sets(guess));

    let guesses = canonical_guesses(k);
    let batch = opts.parallel.max(1);
    let mut refuted: Vec<Guess> = Vec::new();
    let mut next = 0;
    while next < guesses.len() {
        // the next `batch` guesses not yet ruled out
        let mut picked = Vec::with_capacity(batch);
        while next < guesses.len() && picked.len() < batch {
            if !subsumed(&guesses[next], &refuted) {
                picked.push(guesses[next]);
            }
            next += 1;
        }
        let results: Vec<Result<SeparatorResult>> = if batch == 1 {
            picked.iter().map(solve).collect()
        } else {
            picked.par_iter().map(solve).collect()
        };
        for (guess, res) in picked.iter().zip(results) {
            // a guess refuted earlier in this batch would have been skipped
            if subsumed(guess, &refuted) {
                continue;
            }
            match res? {
                SeparatorResult::NoWitness => refuted.push(*guess),
                SeparatorResult::Found(s) => {
                    let split = split_from_separator(g, s, &as_sets(guess));
                    let event = SplitEvent {
                        g,
                        k,
                        td_in,
                        w,
                        i_set: &i_set,
                        split: &split,
                    };
                    debug_assert_eq!(check_balanced_split(&event), Ok(()));
                    if let Some(obs) = opts.observer {
                        obs.on_split(&event);
                    }
                    return Ok(SplitResult::Split(split));
                }
            }
        }
    }
    Ok(SplitResult::TooLarge)
}

/// Groups the components of `G - s` by the terminal set they meet;
/// terminal-free components join the first part.
fn split_from_separator(g: &Graph, s: VertexSet, terminals: &[VertexSet; 3]) -> BalancedSplit {
    let mut parts = [g.empty_set(), g.empty_set(), g.empty_set()];
    for comp in g.components(&g.vertices().difference(&s)) {
        let slot = (0..3).find(|&i| comp.intersects(&terminals[i])).unwrap_or(0);
        parts[slot].union_with(&comp);
    }
    BalancedSplit { s, parts }
}

/// A rooted decomposition of `g` with independence number at most `8k` whose
/// root bag contains `w`, or `TooLarge`. Requires `alpha(w) <= 6k`.
pub fn decompose_rec(
    g: &Graph,
    k: usize,
    td_in: &TreeDecomposition,
    w: &VertexSet,
    opts: &DecomposeOptions<'_>,
) -> Result<DecomposeResult> {
    if alpha_at_least(g, w, 6 * k + 1) {
        return Err(Error::Precondition(format!("alpha(W) exceeds {}", 6 * k)));
    }
    ensure_valid(g, td_in)?;
    rec(g, k, td_in, w, opts)
}

fn rec(
    g: &Graph,
    k: usize,
    td_in: &TreeDecomposition,
    w: &VertexSet,
    opts: &DecomposeOptions<'_>,
) -> Result<DecomposeResult> {
    let all = g.vertices();
    if !alpha_at_least(g, &all, 6 * k + 1) {
        return Ok(DecomposeResult::Decomposition(
            TreeDecomposition::single(all).with_root(0),
        ));
    }
    let mut w = w.clone();
    let mut a = alpha(g, &w);
    for v in all.iter() {
        if a == 6 * k {
            break;
        }
        if w.insert(v) {
            a = alpha(g, &w);
        }
    }
    let split = match balanced_separator(g, k, td_in, &w, opts)? {
        SplitResult::TooLarge => return Ok(DecomposeResult::TooLarge),
        SplitResult::Split(split) => split,
    };
    let s = &split.s;
    let root_bag = s.union(&w);
    let mut bags = vec![root_bag.clone()];
    let mut edges = Vec::new();
    for part in split.parts.iter().filter(|p| !p.is_empty()) {
        let x = part.union(s);
        debug_assert!(x.len() < g.n());
        let (sub, old) = g.induced(&x);
        let map = g.forward_map(&x);
        let w_sub = part.intersection(&w).union(s).remap(&map, sub.n());
        let td_sub = restrict(td_in, &x, &map);
        debug_assert!(td_alpha(&sub, &td_sub) <= td_alpha(g, td_in));
        let child = match rec(&sub, k, &td_sub, &w_sub, opts)? {
            DecomposeResult::TooLarge => return Ok(DecomposeResult::TooLarge),
            DecomposeResult::Decomposition(td) => td,
        };
        let offset = bags.len();
        let child_root = child.root().expect("rooted");
        debug_assert!(s.is_subset(&VertexSet::from_iter(
            g.n(),
            child.bag(child_root).iter().map(|v| old[v])
        )));
        bags.extend(
            child
                .bags()
                .iter()
                .map(|b| VertexSet::from_iter(g.n(), b.iter().map(|v| old[v]))),
        );
        edges.extend(child.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        edges.push((0, offset + child_root));
    }
    let td = TreeDecomposition::new(g.n(), bags, edges, Some(0))?;
    debug_assert!(w.is_subset(td.bag(0)));
    debug_assert!(crate::td::validate(g, &td).map(|r| r.ok()).unwrap_or(false));
    Ok(DecomposeResult::Decomposition(td))
}

/// A decomposition of `g` with independence number at most `8k`, or
/// `TooLarge` when the tree-independence number of `g` exceeds `k`.
pub fn decompose(g: &Graph, k: usize) -> Result<DecomposeResult> {
    decompose_with(g, k, &DecomposeOptions::default())
}

pub fn decompose_with(g: &Graph, k: usize, opts: &DecomposeOptions<'_>) -> Result<DecomposeResult> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::Precondition("the graph has no vertices".into()));
    }
    let mut td = TreeDecomposition::single(VertexSet::singleton(1, 0));
    for i in 1..=g.n() {
        let prefix = g.induced(&g.set(0..i)).0;
        let start = if i == 1 {
            td.clone()
        } else {
            extend_with_vertex(&td, i - 1)
        };
        match rec(&prefix, k, &start, &prefix.empty_set(), opts)? {
            DecomposeResult::TooLarge => return Ok(DecomposeResult::TooLarge),
            DecomposeResult::Decomposition(next) => td = next,
        }
    }
    debug_assert!(td.num_nodes() <= node_budget(g.n()));
    debug_assert!(td_alpha(g, &td) <= 8 * k);
    Ok(DecomposeResult::Decomposition(td))
}
