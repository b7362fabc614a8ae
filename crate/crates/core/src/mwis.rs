//! Maximum-weight independent set by dynamic programming over a tree
//! decomposition, with tables indexed by the independent subsets of each
//! bag. Running time is about `n * (bag size)^(max alpha of a bag)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::td::{validate, TreeDecomposition};
use crate::vertex_set::VertexSet;

fn weight(s: &VertexSet, w: &[i64]) -> i64 {
    s.iter().map(|v| w[v]).sum()
}

/// Independent subsets of `bag` in lexicographic order, the empty set first.
fn independent_subsets(g: &Graph, bag: &VertexSet) -> Vec<VertexSet> {
    fn grow(g: &Graph, cand: &[usize], cur: &mut VertexSet, out: &mut Vec<VertexSet>) {
        out.push(cur.clone());
        for (i, &v) in cand.iter().enumerate() {
            if g.neighbors(v).is_disjoint(cur) {
                cur.insert(v);
                grow(g, &cand[i + 1..], cur, out);
                cur.remove(v);
            }
        }
    }
    let mut out = Vec::new();
    grow(g, &bag.to_vec(), &mut VertexSet::empty(g.n()), &mut out);
    out
}

/// Weight and members of a maximum-weight independent set of `g`, rooting
/// `td` at its root or at node 0.
pub fn mwis_dp(g: &Graph, td: &TreeDecomposition, weights: &[i64]) -> Result<(i64, VertexSet)> {
    if weights.len() != g.n() {
        return Err(Error::Precondition(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    let report = validate(g, td)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(format!("{v:?}")));
    }
    let t = td.num_nodes();
    let adj = td.adjacency();
    let root = td.root().unwrap_or(0);
    let mut parent = vec![None; t];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let a = order[i];
        i += 1;
        for &b in &adj[a] {
            if Some(b) != parent[a] {
                parent[b] = Some(a);
                order.push(b);
            }
        }
    }
    let mut children = vec![Vec::new(); t];
    for &b in &order[1..] {
        children[parent[b].expect("non-root")].push(b);
    }

    let mut subsets: Vec<Vec<VertexSet>> = vec![Vec::new(); t];
    let mut value: Vec<Vec<i64>> = vec![Vec::new(); t];
    // best extension of a node's subtree given its intersection with the
    // parent bag, net of the weight of that intersection
    let mut up: Vec<HashMap<VertexSet, (i64, usize)>> = vec![HashMap::new(); t];
    for &a in order.iter().rev() {
        let bag = td.bag(a);
        let subs = independent_subsets(g, bag);
        let vals: Vec<i64> = subs
            .iter()
            .map(|s| {
                weight(s, weights)
                    + children[a]
                        .iter()
                        .map(|&c| up[c][&s.intersection(td.bag(c))].0)
                        .sum::<i64>()
            })
            .collect();
        if let Some(p) = parent[a] {
            let pbag = td.bag(p);
            let map = &mut up[a];
            for (j, (s, &val)) in subs.iter().zip(&vals).enumerate() {
                let key = s.intersection(pbag);
                let net = val - weight(&key, weights);
                match map.get(&key) {
                    Some(&(best, _)) if best >= net => {}
                    _ => {
                        map.insert(key, (net, j));
                    }
                }
            }
        }
        subsets[a] = subs;
        value[a] = vals;
    }

    let mut pick = 0;
    for (j, &v) in value[root].iter().enumerate() {
        if v > value[root][pick] {
            pick = j;
        }
    }
    let best = value[root][pick];
    let mut set = VertexSet::empty(g.n());
    let mut stack = vec![(root, pick)];
    while let Some((a, j)) = stack.pop() {
        let s = &subsets[a][j];
        set.union_with(s);
        for &c in &children[a] {
            stack.push((c, up[c][&s.intersection(td.bag(c))].1));
        }
    }
    debug_assert!(g.is_independent(&set) && weight(&set, weights) == best);
    Ok((best, set))
}
