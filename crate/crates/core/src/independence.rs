//! Exact independence number and vertex cover number on vertex subsets.
//!
//! `alpha` is a branch-and-bound over bitmasks: degree-0/1 vertices are taken
//! greedily (always safe), a greedy clique cover bounds the remainder from
//! above, and the search branches on a maximum-degree vertex.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Independence number of `G[x]`.
pub fn alpha(g: &Graph, x: &VertexSet) -> usize {
    if x.is_empty() {
        return 0;
    }
    let mut best = greedy_independent(g, x).len();
    search(g, x.clone(), 0, &mut best);
    best
}

/// Vertex cover number of `G[x]`, via `tau = |x| - alpha`.
pub fn tau(g: &Graph, x: &VertexSet) -> usize {
    x.len() - alpha(g, x)
}

/// Whether `G[x]` has an independent set of size `k` (early exit).
pub fn alpha_at_least(g: &Graph, x: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if x.len() < k {
        return false;
    }
    let mut best = greedy_independent(g, x).len();
    if best >= k {
        return true;
    }
    // searching for size >= k is the same as beating k - 1
    best = best.max(k - 1);
    search(g, x.clone(), 0, &mut best);
    best >= k
}

/// Min-degree greedy independent set, used as the initial lower bound.
pub fn greedy_independent(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut p = x.clone();
    let mut out = g.empty_set();
    while !p.is_empty() {
        let v = p
            .iter()
            .min_by_key(|&v| g.neighbors(v).intersection_len(&p))
            .expect("nonempty");
        out.insert(v);
        p.remove(v);
        p.difference_with(g.neighbors(v));
    }
    out
}

/// Number of cliques in a first-fit clique cover of `G[p]`.
fn clique_cover_bound(g: &Graph, p: &VertexSet) -> usize {
    // common neighbourhood of each open clique
    let mut commons: Vec<VertexSet> = Vec::new();
    'outer: for v in p {
        for c in commons.iter_mut() {
            if c.contains(v) {
                c.intersect_with(g.neighbors(v));
                continue 'outer;
            }
        }
        commons.push(g.neighbors(v).intersection(p));
    }
    commons.len()
}

fn search(g: &Graph, mut p: VertexSet, mut size: usize, best: &mut usize) {
    loop {
        let low = p.iter().find(|&v| g.neighbors(v).intersection_len(&p) <= 1);
        match low {
            Some(v) => {
                size += 1;
                p.remove(v);
                p.difference_with(g.neighbors(v));
            }
            None => break,
        }
    }
    if p.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(g, &p) <= *best {
        return;
    }
    let v = p
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection_len(&p), usize::MAX - v))
        .expect("nonempty");
    let mut with = p.clone();
    with.remove(v);
    with.difference_with(g.neighbors(v));
    search(g, with, size + 1, best);
    p.remove(v);
    search(g, p, size, best);
}

/// Lexicographically least independent subset of `x` with exactly `size`
/// members, if one exists.
pub fn least_independent_subset(g: &Graph, x: &VertexSet, size: usize) -> Option<VertexSet> {
    if !alpha_at_least(g, x, size) {
        return None;
    }
    let mut chosen = g.empty_set();
    let mut cand = x.clone();
    while chosen.len() < size {
        // every step succeeds: the candidate pool always retains enough room
        let v = cand
            .iter()
            .find(|&v| {
                let mut rest = cand.clone();
                rest.difference_with(g.neighbors(v));
                drop_through(&mut rest, v);
                alpha_at_least(g, &rest, size - chosen.len() - 1)
            })
            .expect("pool shrank below the required size");
        chosen.insert(v);
        cand.difference_with(g.neighbors(v));
        drop_through(&mut cand, v);
    }
    Some(chosen)
}

/// Removes every member `<= v`.
fn drop_through(s: &mut VertexSet, v: usize) {
    let below: Vec<usize> = s.iter().take_while(|&u| u <= v).collect();
    for u in below {
        s.remove(u);
    }
}

/// All independent subsets of `x` with exactly `size` members, in
/// lexicographic order.
pub fn independent_subsets_of_size(g: &Graph, x: &VertexSet, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let verts = x.to_vec();
    let mut stack = Vec::with_capacity(size);
    extend_independent(g, &verts, 0, size, &mut stack, &mut out);
    out
}

fn extend_independent(
    g: &Graph,
    verts: &[usize],
    from: usize,
    size: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if stack.len() == size {
        out.push(g.set(stack.iter().copied()));
        return;
    }
    let need = size - stack.len();
    for i in from..verts.len() {
        if verts.len() - i < need {
            break;
        }
        let v = verts[i];
        if stack.iter().any(|&u| g.adjacent(u, v)) {
            continue;
        }
        stack.push(v);
        extend_independent(g, verts, i + 1, size, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph, x: &VertexSet) -> usize {
        let v = x.to_vec();
        (0u32..1 << v.len())
            .filter_map(|mask| {
                let s = g.set((0..v.len()).filter(|i| mask >> i & 1 == 1).map(|i| v[i]));
                g.is_independent(&s).then_some(s.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn alpha_examples() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(alpha(&p4, &p4.vertices()), 2);
        assert_eq!(alpha(&p4, &p4.empty_set()), 0);
        let pg = petersen();
        assert_eq!(brute_alpha(&pg, &pg.vertices()), 4);
        assert_eq!(alpha(&pg, &pg.vertices()), 4);
    }

    #[test]
    fn tau_examples() {
        let g = Graph::edgeless(4);
        assert_eq!(tau(&g, &g.vertices()), 0);
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(tau(&e, &e.vertices()), 1);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(tau(&c5, &c5.vertices()), 3);
    }

    #[test]
    fn least_subset_is_lexicographic() {
        // C5: the lex-least independent pair is {0, 2}
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            least_independent_subset(&c5, &c5.vertices(), 2).unwrap().to_vec(),
            vec![0, 2]
        );
        assert!(least_independent_subset(&c5, &c5.vertices(), 3).is_none());
        let all = independent_subsets_of_size(&c5, &c5.vertices(), 2);
        assert_eq!(all.len(), 5);
        assert_eq!(all[0].to_vec(), vec![0, 2]);
        assert!(all.windows(2).all(|w| w[0].lex_cmp(&w[1]).is_lt()));
    }
}
