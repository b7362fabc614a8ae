//! Brute-force ground truth for small inputs. Kept deliberately simple and
//! independent of the solvers they check.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::independence::alpha;
use crate::instance::SeparatorInstance;
use crate::vertex_set::VertexSet;

pub const TREE_ALPHA_CAP: usize = 9;
pub const SUPERGRAPH_CAP: usize = 6;
pub const SEPARATOR_CAP: usize = 20;
pub const MWIS_CAP: usize = 24;

fn cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::OracleCap { size, cap });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// `alpha` of every vertex subset, indexed by bitmask.
fn alpha_table(adj: &[u32]) -> Vec<u8> {
    let n = adj.len();
    let mut t = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let with = without & !(adj[v] as usize);
        t[mask] = t[without].max(1 + t[with]);
    }
    t
}

/// Minimum over tree decompositions of the largest bag independence number,
/// via elimination orderings: eliminating `v` creates the bag `{v} ∪ N(v)`
/// in the current fill graph, and the cost of an ordering is the largest
/// `alpha_G` of such a bag.
pub fn exact_tree_alpha(g: &Graph) -> Result<usize> {
    let n = g.n();
    cap(n, TREE_ALPHA_CAP)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let table = alpha_table(&adj);
    let full = (1u32 << n) - 1;
    let mut best = table[full as usize];
    let mut seen: HashMap<u32, u8> = HashMap::new();
    eliminate(&adj, full, 0, &table, &mut best, &mut seen);
    Ok(best as usize)
}

fn eliminate(fill: &[u32], left: u32, cost: u8, table: &[u8], best: &mut u8, seen: &mut HashMap<u32, u8>) {
    if left == 0 {
        *best = (*best).min(cost);
        return;
    }
    // the fill graph on `left` depends only on which vertices are gone
    match seen.get(&left) {
        Some(&c) if c <= cost => return,
        _ => {
            seen.insert(left, cost);
        }
    }
    let mut rest = left;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nb = fill[v] & left & !(1 << v);
        let c = cost.max(table[(nb | 1 << v) as usize]);
        if c >= *best {
            continue;
        }
        let mut next = fill.to_vec();
        let mut it = nb;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            next[u] |= nb & !(1 << u);
        }
        eliminate(&next, left & !(1 << v), c, table, best, seen);
    }
}

/// The same quantity by enumerating every chordal supergraph of `g` and
/// taking the largest `alpha_G` over its maximal cliques.
pub fn exact_tree_alpha_supergraphs(g: &Graph) -> Result<usize> {
    let n = g.n();
    cap(n, SUPERGRAPH_CAP)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let table = alpha_table(&adj);
    let missing: Vec<(usize, usize)> = g.complement().edges().collect();
    let mut best = usize::MAX;
    for pick in 0u32..1 << missing.len() {
        let mut b = GraphBuilder::new(n);
        for (u, v) in g.edges() {
            b.add_edge(u, v);
        }
        for (i, &(u, v)) in missing.iter().enumerate() {
            if pick >> i & 1 == 1 {
                b.add_edge(u, v);
            }
        }
        let h = b.build();
        if !h.is_chordal() {
            continue;
        }
        // every maximal clique is some vertex plus its later neighbours in a
        // perfect elimination ordering
        let peo: Vec<usize> = h.mcs_order().into_iter().rev().collect();
        let mut pos = vec![0; n];
        for (i, &v) in peo.iter().enumerate() {
            pos[v] = i;
        }
        let cost = peo
            .iter()
            .map(|&v| {
                let clique = h
                    .neighbors(v)
                    .iter()
                    .filter(|&u| pos[u] > pos[v])
                    .fold(1u32 << v, |m, u| m | 1 << u);
                table[clique as usize] as usize
            })
            .max()
            .unwrap_or(0);
        best = best.min(cost);
    }
    Ok(best)
}

/// A solution `S0 ⊆ S ⊆ S0 ∪ R` of least `alpha(S)` (first in subset order
/// among ties), or `None` when no separator lies in that range.
pub fn exact_separator(inst: &SeparatorInstance<'_>) -> Result<Option<VertexSet>> {
    let free = inst.r.to_vec();
    cap(free.len(), SEPARATOR_CAP)?;
    let mut best: Option<(usize, VertexSet)> = None;
    for pick in 0u32..1 << free.len() {
        let mut s = inst.s0.clone();
        for (i, &v) in free.iter().enumerate() {
            if pick >> i & 1 == 1 {
                s.insert(v);
            }
        }
        if !inst.g.is_separator(&s, &inst.terminals) {
            continue;
        }
        let a = alpha(inst.g, &s);
        if best.as_ref().is_none_or(|(b, _)| a < *b) {
            best = Some((a, s));
        }
    }
    Ok(best.map(|(_, s)| s))
}

/// A maximum-weight independent set; among those of equal weight the
/// lexicographically least (as sorted sequences).
pub fn exact_mwis(g: &Graph, weights: &[i64]) -> Result<VertexSet> {
    let n = g.n();
    cap(n, MWIS_CAP)?;
    if weights.len() != n {
        return Err(Error::Precondition(format!(
            "{} weights for {n} vertices",
            weights.len()
        )));
    }
    let adj = masks(g);
    let mut best = (0i64, 0u32);
    mwis_dfs(&adj, weights, 0, 0, 0, &mut best);
    Ok(VertexSet::from_iter(n, (0..n).filter(|&v| best.1 >> v & 1 == 1)))
}

fn lex_less(a: u32, b: u32) -> bool {
    // compare as sorted sequences: the first differing member decides, and a
    // proper prefix is smaller
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let low = diff.trailing_zeros();
    if a >> low & 1 == 1 {
        // a has the smaller element unless b ran out (b ⊂ prefix of a)
        b >> low != 0
    } else {
        a >> low == 0
    }
}

fn mwis_dfs(adj: &[u32], w: &[i64], v: usize, chosen: u32, weight: i64, best: &mut (i64, u32)) {
    let n = adj.len();
    if v == n {
        if weight > best.0 || (weight == best.0 && lex_less(chosen, best.1)) {
            *best = (weight, chosen);
        }
        return;
    }
    let bound: i64 = weight
        + (v..n)
            .filter(|&u| adj[u] & chosen == 0)
            .map(|u| w[u].max(0))
            .sum::<i64>();
    if bound < best.0 {
        return;
    }
    if adj[v] & chosen == 0 {
        mwis_dfs(adj, w, v + 1, chosen | 1 << v, weight + w[v], best);
    }
    mwis_dfs(adj, w, v + 1, chosen, weight, best);
}
