//! Undirected simple graphs with bitmask adjacency.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Hard cap on the vertex count accepted by constructors and parsers.
pub const MAX_VERTICES: usize = 10_000;

/// An immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental edge collector; repeated edges are merged.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds `u-v`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Makes every vertex of `a` adjacent to every vertex of `b` (except itself).
    pub fn join(&mut self, a: &[usize], b: &[usize]) -> &mut Self {
        for &u in a {
            for &v in b {
                self.add_edge(u, v);
            }
        }
        self
    }

    pub fn build(self) -> Graph {
        let m = self.adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { adj: self.adj, m }
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if b.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn edgeless(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter(self.n(), it)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Closed neighbourhood `N[X]`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Open neighbourhood `N(X) = N[X] \ X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood(x);
        out.difference_with(x);
        out
    }

    /// Whether some vertex of `a` is adjacent to some vertex of `b`.
    pub fn sets_adjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().any(|v| self.adj[v].intersects(b))
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| !self.adj[v].intersects(x))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| {
            let mut rest = x.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.difference_with(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect::<Vec<_>>();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Subgraph induced by `x`, renumbered in increasing id order.
    /// Returns the graph and the table new id -> old id.
    pub fn induced(&self, x: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = x.to_vec();
        let map = self.forward_map(x);
        let k = old.len();
        let adj = old.iter().map(|&v| self.adj[v].remap(&map, k)).collect::<Vec<_>>();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        (Graph { adj, m }, old)
    }

    /// Table old id -> new id for the renumbering used by [`Graph::induced`].
    pub fn forward_map(&self, x: &VertexSet) -> Vec<Option<usize>> {
        let mut map = vec![None; self.n()];
        for (i, v) in x.iter().enumerate() {
            map[v] = Some(i);
        }
        map
    }

    /// Vertices of `x` reachable from `sources` inside `G[x]` (sources outside
    /// `x` are still used as starting points but not reported unless in `x`).
    pub fn reach_within(&self, sources: &VertexSet, x: &VertexSet) -> VertexSet {
        let mut seen = sources.intersection(x);
        let mut frontier = sources.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(x);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[x]`, ordered by smallest member.
    pub fn components(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut left = x.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = self.empty_set();
            comp.insert(s);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].intersection(&left).iter() {
                    if comp.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(&self.vertices()).len() <= 1
    }

    /// Maximum cardinality search visit order, ties to the lowest id. Its
    /// reverse is a perfect elimination ordering exactly when `G` is chordal.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut done = self.empty_set();
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !done.contains(v))
                .max_by_key(|&v| (weight[v], usize::MAX - v))
                .expect("vertices left");
            done.insert(v);
            order.push(v);
            for u in self.adj[v].iter() {
                if !done.contains(u) {
                    weight[u] += 1;
                }
            }
        }
        order
    }

    /// No induced cycle of length four or more.
    pub fn is_chordal(&self) -> bool {
        let order = self.mcs_order();
        let mut pos = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order.iter().all(|&v| {
            let earlier: Vec<usize> = self.adj[v].iter().filter(|&u| pos[u] < pos[v]).collect();
            match earlier.iter().max_by_key(|&&u| pos[u]) {
                None => true,
                Some(&p) => earlier.iter().all(|&u| u == p || self.adj[p].contains(u)),
            }
        })
    }

    /// Whether `s` is a separator for `parts`: disjoint from each part and no
    /// path in `G \ s` joins two distinct parts.
    pub fn is_separator(&self, s: &VertexSet, parts: &[VertexSet]) -> bool {
        if parts.iter().any(|p| p.intersects(s)) {
            return false;
        }
        let rest = self.vertices().difference(s);
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            let reach = self.reach_within(p, &rest);
            if parts[i + 1..].iter().any(|q| reach.intersects(q)) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn components_examples() {
        let g = path(4);
        assert_eq!(g.components(&g.vertices()), vec![g.vertices()]);
        assert!(g.components(&g.empty_set()).is_empty());
        // C4 minus the opposite pair {0, 2}
        let c4 = cycle(4);
        let parts = c4.components(&c4.set([1, 3]));
        assert_eq!(parts, vec![c4.set([1]), c4.set([3])]);
    }

    #[test]
    fn separator_examples() {
        // a - c - b with a = 0, c = 1, b = 2
        let g = path(3);
        assert!(g.is_separator(&g.set([1]), &[g.set([0]), g.set([2])]));
        let e = path(2);
        assert!(!e.is_separator(&e.empty_set(), &[e.set([0]), e.set([1])]));
        // K_{2,3}: side {0,1}, side {2,3,4}
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(k23.is_separator(&k23.set([2, 3, 4]), &[k23.set([0]), k23.set([1])]));
        assert!(!k23.is_separator(&k23.set([2, 3]), &[k23.set([0]), k23.set([1])]));
        // separator may not meet a part
        assert!(!g.is_separator(&g.set([0, 1]), &[g.set([0]), g.set([2])]));
    }

    #[test]
    fn complement_and_induced() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.complement(), Graph::edgeless(3));
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let (p, map) = c5.induced(&c5.set([1, 2, 3]));
        assert_eq!(p, path(3));
        assert_eq!(map, vec![1, 2, 3]);
    }

    #[test]
    fn chordality() {
        assert!(path(6).is_chordal());
        assert!(!cycle(4).is_chordal());
        assert!(!cycle(5).is_chordal());
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend([(0, 2), (0, 3)]);
        assert!(Graph::from_edges(5, &e).unwrap().is_chordal());
        assert!(Graph::edgeless(3).is_chordal());
    }

    #[test]
    fn neighborhoods() {
        let g = path(5);
        let x = g.set([1, 2]);
        assert_eq!(g.neighborhood(&x).to_vec(), vec![0, 3]);
        assert_eq!(g.closed_neighborhood(&x).to_vec(), vec![0, 1, 2, 3]);
    }
}
