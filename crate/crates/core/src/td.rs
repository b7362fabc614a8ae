//! Tree decompositions: the data model, validation, independence number,
//! bag covers of vertex sets, balanced splits read off a decomposition, and
//! the small rewrites (vertex extension, pruning, restriction) used by the
//! decomposer.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha;
use crate::split::BalancedSplit;
use crate::vertex_set::VertexSet;

/// A tree of bags. The tree structure is checked on construction; the three
/// decomposition conditions are checked against a graph by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    universe: usize,
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    root: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    VertexMissing(usize),
    EdgeUncovered(usize, usize),
    DisconnectedTrace(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl TreeDecomposition {
    /// Builds a decomposition over vertex ids `0..universe`. Fails if the
    /// edges do not form a tree on the `bags.len()` nodes or a bag has a
    /// different universe.
    pub fn new(universe: usize, bags: Vec<VertexSet>, edges: Vec<(usize, usize)>, root: Option<usize>) -> Result<Self> {
        let t = bags.len();
        if t == 0 {
            return Err(Error::MalformedTree("no nodes".into()));
        }
        if let Some(b) = bags.iter().position(|b| b.universe() != universe) {
            return Err(Error::MalformedTree(format!(
                "bag {b} is over a universe of {} vertices, expected {universe}",
                bags[b].universe()
            )));
        }
        if edges.len() != t - 1 {
            return Err(Error::MalformedTree(format!("{} edges for {t} nodes", edges.len())));
        }
        if let Some(r) = root {
            if r >= t {
                return Err(Error::MalformedTree(format!("root {r} out of range")));
            }
        }
        let mut adj = vec![Vec::new(); t];
        for &(a, b) in &edges {
            if a >= t || b >= t || a == b {
                return Err(Error::MalformedTree(format!("bad tree edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; t];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    queue.push_back(b);
                }
            }
        }
        if count != t {
            // t - 1 edges and disconnected means a cycle somewhere
            return Err(Error::MalformedTree("tree edges are not connected".into()));
        }
        Ok(TreeDecomposition {
            universe,
            bags,
            edges,
            root,
        })
    }

    /// A single node holding `bag`.
    pub fn single(bag: VertexSet) -> Self {
        TreeDecomposition {
            universe: bag.universe(),
            bags: vec![bag],
            edges: Vec::new(),
            root: Some(0),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        &self.bags[node]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: usize) -> Self {
        assert!(root < self.num_nodes());
        self.root = Some(root);
        self
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Union of all bags.
    pub fn covered(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.universe);
        for b in &self.bags {
            s.union_with(b);
        }
        s
    }

    /// Node order of a BFS from `root` (or node 0) with parent links.
    fn bfs_order(&self) -> (Vec<usize>, Vec<Option<usize>>) {
        let adj = self.adjacency();
        let start = self.root.unwrap_or(0);
        let mut parent = vec![None; self.num_nodes()];
        let mut seen = vec![false; self.num_nodes()];
        let mut order = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            i += 1;
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = Some(a);
                    order.push(b);
                }
            }
        }
        (order, parent)
    }
}

/// Checks vertex coverage, edge coverage and connectivity of every vertex's
/// trace, reporting every violation found.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> Result<ValidationReport> {
    if td.universe != g.n() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition is over {} vertices, graph has {}",
            td.universe,
            g.n()
        )));
    }
    let mut violations = Vec::new();
    let covered = td.covered();
    for v in 0..g.n() {
        if !covered.contains(v) {
            violations.push(Violation::VertexMissing(v));
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            violations.push(Violation::EdgeUncovered(u, v));
        }
    }
    let adj = td.adjacency();
    for v in covered.iter() {
        let holders: Vec<usize> = (0..td.num_nodes()).filter(|&t| td.bags[t].contains(v)).collect();
        let mut seen = vec![false; td.num_nodes()];
        let mut stack = vec![holders[0]];
        seen[holders[0]] = true;
        let mut reached = 1;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] && td.bags[b].contains(v) {
                    seen[b] = true;
                    reached += 1;
                    stack.push(b);
                }
            }
        }
        if reached != holders.len() {
            violations.push(Violation::DisconnectedTrace(v));
        }
    }
    violations.sort();
    Ok(ValidationReport { violations })
}

pub(crate) fn ensure_valid(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    let report = validate(g, td)?;
    if report.ok() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(format!("{:?}", report.violations)))
    }
}

/// Independence number of the decomposition: the largest `alpha` of a bag.
pub fn td_alpha(g: &Graph, td: &TreeDecomposition) -> usize {
    td.bags.iter().map(|b| alpha(g, b)).max().unwrap_or(0)
}

/// For a tree edge `a-b`, the vertices outside `X_a ∩ X_b` that live in bags
/// on `a`'s side (`side_a`) and on `b`'s side (`side_b`).
#[derive(Clone, Debug)]
pub(crate) struct EdgeSides {
    pub a: usize,
    pub b: usize,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Side sets for every tree edge, in the order of `td.edges()`.
pub(crate) fn edge_sides(td: &TreeDecomposition) -> Vec<EdgeSides> {
    let t = td.num_nodes();
    let (order, parent) = td.bfs_order();
    let mut subtree: Vec<VertexSet> = td.bags.clone();
    for &a in order.iter().rev() {
        if let Some(p) = parent[a] {
            let s = subtree[a].clone();
            subtree[p].union_with(&s);
        }
    }
    let mut children = vec![Vec::new(); t];
    for (a, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(a);
        }
    }
    // outer[a]: union of bags outside a's subtree
    let mut outer = vec![VertexSet::empty(td.universe); t];
    for &a in &order {
        for &c in &children[a] {
            let mut o = outer[a].clone();
            o.union_with(&td.bags[a]);
            for &d in &children[a] {
                if d != c {
                    o.union_with(&subtree[d]);
                }
            }
            outer[c] = o;
        }
    }
    td.edges
        .iter()
        .map(|&(a, b)| {
            let (p, c) = if parent[b] == Some(a) { (a, b) } else { (b, a) };
            let sep = td.bags[a].intersection(&td.bags[b]);
            let side_c = subtree[c].difference(&sep);
            let side_p = outer[c].difference(&sep);
            if p == a {
                EdgeSides {
                    a,
                    b,
                    side_a: side_p,
                    side_b: side_c,
                }
            } else {
                EdgeSides {
                    a,
                    b,
                    side_a: side_c,
                    side_b: side_p,
                }
            }
        })
        .collect()
}

/// Node ids whose bags jointly cover the nonempty set `w`; at most
/// `2 alpha(w) - 1` of them.
pub fn cover_by_bags(g: &Graph, td: &TreeDecomposition, w: &VertexSet) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::Precondition("cannot cover an empty set".into()));
    }
    ensure_valid(g, td)?;
    let sides = edge_sides(td);
    let mut out = BTreeSet::new();
    cover_rec(td, &sides, w, &mut out);
    let out: Vec<usize> = out.into_iter().collect();
    debug_assert!(out.len() < 2 * alpha(g, w));
    Ok(out)
}

fn cover_rec(td: &TreeDecomposition, sides: &[EdgeSides], w: &VertexSet, out: &mut BTreeSet<usize>) {
    let t = td.num_nodes();
    // an edge with W on both sides splits the problem in two
    for e in sides {
        let wa = e.side_a.intersection(w);
        let wb = e.side_b.intersection(w);
        if !wa.is_empty() && !wb.is_empty() {
            cover_rec(td, sides, &wa, out);
            cover_rec(td, sides, &wb, out);
            out.insert(e.a);
            return;
        }
    }
    let mut outgoing = vec![0usize; t];
    for e in sides {
        let a_has = e.side_a.intersects(w);
        let b_has = e.side_b.intersects(w);
        if !a_has && !b_has {
            // W sits inside X_a ∩ X_b
            out.insert(e.a);
            return;
        }
        if b_has {
            outgoing[e.a] += 1;
        } else {
            outgoing[e.b] += 1;
        }
    }
    let sink = (0..t).find(|&x| outgoing[x] == 0).expect("an oriented tree has a sink");
    debug_assert!(w.is_subset(&td.bags[sink]));
    out.insert(sink);
}

/// Reads a balanced split off a decomposition: the node whose every incident
/// edge points at it (an edge points at the side holding more than half of
/// `i_set`; ties point at the lower node id) gives `S`, and the components of
/// `G - S` are merged smallest-first down to three parts.
pub fn existential_split(g: &Graph, td: &TreeDecomposition, i_set: &VertexSet) -> Result<BalancedSplit> {
    if !g.is_independent(i_set) {
        return Err(Error::Precondition("the reference set is not independent".into()));
    }
    ensure_valid(g, td)?;
    let t = td.num_nodes();
    let size = i_set.len();
    let mut outgoing = vec![0usize; t];
    for e in edge_sides(td) {
        let toward_b = if 2 * e.side_b.intersection_len(i_set) > size {
            true
        } else if 2 * e.side_a.intersection_len(i_set) > size {
            false
        } else {
            e.b < e.a
        };
        if toward_b {
            outgoing[e.a] += 1;
        } else {
            outgoing[e.b] += 1;
        }
    }
    let node = (0..t).find(|&x| outgoing[x] == 0).expect("an oriented tree has a sink");
    let s = td.bags[node].clone();
    let mut comps = g.components(&g.vertices().difference(&s));
    while comps.len() > 3 {
        comps.sort_by(|x, y| {
            x.intersection_len(i_set)
                .cmp(&y.intersection_len(i_set))
                .then(x.first().cmp(&y.first()))
        });
        let a = comps.remove(0);
        comps[0].union_with(&a);
    }
    comps.sort_by_key(VertexSet::first);
    while comps.len() < 3 {
        comps.push(g.empty_set());
    }
    let parts: [VertexSet; 3] = comps.try_into().expect("three parts");
    let split = BalancedSplit { s, parts };
    debug_assert!(split.is_partition(g) && split.separates(g));
    Ok(split)
}

/// Adds `v` to every bag, growing the universe to cover `v` if needed.
pub fn extend_with_vertex(td: &TreeDecomposition, v: usize) -> TreeDecomposition {
    let universe = td.universe.max(v + 1);
    let bags = td
        .bags
        .iter()
        .map(|b| {
            let mut nb = VertexSet::from_iter(universe, b.iter());
            nb.insert(v);
            nb
        })
        .collect();
    TreeDecomposition {
        universe,
        bags,
        edges: td.edges.clone(),
        root: td.root,
    }
}

/// Contracts tree edges whose one bag contains the other until none is left.
/// The surviving node keeps the larger bag; a contracted root passes its role
/// to the survivor.
pub fn prune(td: &TreeDecomposition) -> TreeDecomposition {
    let mut bags: Vec<Option<VertexSet>> = td.bags.iter().cloned().map(Some).collect();
    let mut adj: Vec<BTreeSet<usize>> = td.adjacency().into_iter().map(|l| l.into_iter().collect()).collect();
    let mut root = td.root;
    loop {
        let mut found = None;
        'scan: for a in 0..bags.len() {
            let Some(ba) = &bags[a] else { continue };
            for &b in &adj[a] {
                let bb = bags[b].as_ref().expect("live neighbour");
                if ba.is_subset(bb) {
                    found = Some((a, b));
                    break 'scan;
                }
            }
        }
        let Some((gone, keep)) = found else { break };
        let nbrs: Vec<usize> = adj[gone].iter().copied().collect();
        for x in nbrs {
            adj[x].remove(&gone);
            if x != keep {
                adj[x].insert(keep);
                adj[keep].insert(x);
            }
        }
        adj[gone].clear();
        bags[gone] = None;
        if root == Some(gone) {
            root = Some(keep);
        }
    }
    let mut index = vec![None; bags.len()];
    let mut new_bags = Vec::new();
    for (i, b) in bags.iter().enumerate() {
        if let Some(b) = b {
            index[i] = Some(new_bags.len());
            new_bags.push(b.clone());
        }
    }
    let mut edges = Vec::new();
    for a in 0..bags.len() {
        for &b in &adj[a] {
            if a < b {
                edges.push((index[a].unwrap(), index[b].unwrap()));
            }
        }
    }
    TreeDecomposition {
        universe: td.universe,
        bags: new_bags,
        edges,
        root: root.map(|r| index[r].unwrap()),
    }
}

/// Intersects every bag with `x`, renumbers through `map` (old id -> new id)
/// into a universe of `x.len()` vertices and prunes.
pub fn restrict(td: &TreeDecomposition, x: &VertexSet, map: &[Option<usize>]) -> TreeDecomposition {
    let universe = x.len();
    let bags = td.bags.iter().map(|b| b.intersection(x).remap(map, universe)).collect();
    prune(&TreeDecomposition {
        universe,
        bags,
        edges: td.edges.clone(),
        root: td.root,
    })
}

/// The decomposition of an elimination ordering: eliminating `v` creates the
/// bag of `v` and its remaining neighbours in the fill graph, attached to the
/// bag of the first of those neighbours to be eliminated. For a perfect
/// elimination ordering of a chordal graph the bags are cliques.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("the graph has no vertices".into()));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::Precondition("not an ordering of the vertices".into()));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::Precondition("not an ordering of the vertices".into()));
    }
    let mut fill: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = fill[v].iter().filter(|&u| pos[u] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    fill[a].insert(b);
                }
            }
        }
        let mut bag = VertexSet::from_iter(n, later.iter().copied());
        bag.insert(v);
        bags.push(bag);
        if i + 1 < n {
            // components of the graph are chained through their last bags
            let next = later.iter().map(|&u| pos[u]).min().unwrap_or(i + 1);
            edges.push((i, next));
        }
    }
    TreeDecomposition::new(n, bags, edges, Some(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn path_td(g: &Graph, bags: &[&[usize]]) -> TreeDecomposition {
        let bags: Vec<VertexSet> = bags.iter().map(|b| g.set(b.iter().copied())).collect();
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(g.n(), bags, edges, None).unwrap()
    }

    #[test]
    fn structural_errors() {
        let g = p4();
        let b = vec![g.vertices(), g.vertices(), g.vertices()];
        assert!(matches!(
            TreeDecomposition::new(4, b.clone(), vec![(0, 1)], None),
            Err(Error::MalformedTree(_))
        ));
        assert!(matches!(
            TreeDecomposition::new(4, b.clone(), vec![(0, 1), (1, 0)], None),
            Err(Error::MalformedTree(_))
        ));
        assert!(matches!(
            TreeDecomposition::new(4, b, vec![(0, 1), (1, 1)], None),
            Err(Error::MalformedTree(_))
        ));
    }

    #[test]
    fn validate_examples() {
        let g = p4();
        assert!(validate(&g, &TreeDecomposition::single(g.vertices())).unwrap().ok());
        assert!(validate(&g, &path_td(&g, &[&[0, 1], &[1, 2], &[2, 3]])).unwrap().ok());
        // middle bag {1,2} becomes {2}; vertex 1 also sits in a far bag
        let bad = path_td(&g, &[&[0, 1], &[2], &[2, 3], &[1, 3]]);
        let r = validate(&g, &bad).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation::EdgeUncovered(1, 2), Violation::DisconnectedTrace(1)]
        );
        let bad2 = path_td(&g, &[&[0, 1], &[2], &[2, 3]]);
        let r2 = validate(&g, &bad2).unwrap();
        assert_eq!(r2.violations, vec![Violation::EdgeUncovered(1, 2)]);
        let missing = path_td(&g, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            validate(&g, &missing).unwrap().violations,
            vec![Violation::VertexMissing(3), Violation::EdgeUncovered(2, 3)]
        );
    }

    #[test]
    fn td_alpha_examples() {
        let g = p4();
        assert_eq!(td_alpha(&g, &TreeDecomposition::single(g.vertices())), 2);
        // C4 0-1-2-3-0 with bags {0,1,3}, {1,2,3}
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let td = path_td(&c4, &[&[0, 1, 3], &[1, 2, 3]]);
        assert!(validate(&c4, &td).unwrap().ok());
        assert_eq!(td_alpha(&c4, &td), 2);
        // clique tree of a chordal graph
        let pt = path_td(&g, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(td_alpha(&g, &pt), 1);
    }

    #[test]
    fn cover_examples() {
        let g = p4();
        let td = path_td(&g, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(cover_by_bags(&g, &td, &g.set([1, 2])).unwrap().len(), 1);
        assert_eq!(cover_by_bags(&g, &td, &g.set([2])).unwrap().len(), 1);
        let c = cover_by_bags(&g, &td, &g.set([0, 3])).unwrap();
        assert!(c.len() <= 3);
        assert!(cover_by_bags(&g, &td, &g.empty_set()).is_err());
    }

    #[test]
    fn split_examples() {
        let g = p4();
        let single = TreeDecomposition::single(g.vertices());
        let s = existential_split(&g, &single, &g.set([0, 3])).unwrap();
        assert_eq!(s.s, g.vertices());
        assert_eq!(s.empty_parts(), 3);
        assert!(existential_split(&g, &single, &g.set([0, 1])).is_err());

        // star K_{1,6}: centre 0
        let star = Graph::from_edges(7, &(1..7).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let bags: Vec<VertexSet> = (1..7).map(|i| star.set([0, i])).collect();
        let edges = (1..6).map(|i| (0, i)).collect();
        let td = TreeDecomposition::new(7, bags, edges, None).unwrap();
        let leaves = star.set(1..7);
        let sp = existential_split(&star, &td, &leaves).unwrap();
        assert!(sp.s.contains(0));
        assert!(sp.min_pair_share(&leaves) >= 2);
    }

    #[test]
    fn extend_examples() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let (sub, _) = g.induced(&g.set([0, 1]));
        let td = TreeDecomposition::single(sub.vertices());
        let ext = extend_with_vertex(&td, 2);
        assert_eq!(ext.bag(0), &g.vertices());
        assert_eq!(td_alpha(&g, &ext), td_alpha(&sub, &td) + 1);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let ext = extend_with_vertex(&TreeDecomposition::single(sub.vertices()), 2);
        assert_eq!(td_alpha(&k3, &ext), 1);
    }

    #[test]
    fn prune_examples() {
        let g = p4();
        let dup = path_td(&g, &[&[0, 1], &[0, 1], &[1, 2, 3]]);
        let p = prune(&dup);
        assert_eq!(p.num_nodes(), 2);
        assert!(validate(&g, &p).unwrap().ok());
        let free = path_td(&g, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(prune(&free), free);
        let nested = path_td(&g, &[&[0], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3]]);
        assert_eq!(prune(&nested).num_nodes(), 1);
    }

    #[test]
    fn elimination_orders() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let td = from_elimination_order(&c4, &[0, 1, 2, 3]).unwrap();
        assert!(validate(&c4, &td).unwrap().ok());
        assert_eq!(td_alpha(&c4, &td), 2);
        // two components and an isolated vertex
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let td = from_elimination_order(&g, &[4, 0, 2, 1, 3]).unwrap();
        assert!(validate(&g, &td).unwrap().ok());
        assert_eq!(td_alpha(&g, &td), 1);
        assert!(from_elimination_order(&g, &[0, 1, 2, 3]).is_err());
        assert!(from_elimination_order(&g, &[0, 1, 2, 3, 3]).is_err());
    }
}
