//! The partial 3-way separator problem shared by the LP, branching and
//! decomposition layers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha;
use crate::vertex_set::VertexSet;

/// `(G, (V1, V2, V3), S0, R, k)`: find a `(V1, V2, V3)`-separator `S` with
/// `S0 ⊆ S ⊆ S0 ∪ R` and small `alpha(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInstance<'g> {
    pub g: &'g Graph,
    pub terminals: [VertexSet; 3],
    pub s0: VertexSet,
    pub r: VertexSet,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorResult {
    Found(VertexSet),
    NoWitness,
}

impl SeparatorResult {
    pub fn is_found(&self) -> bool {
        matches!(self, SeparatorResult::Found(_))
    }
}

impl<'g> SeparatorInstance<'g> {
    /// Checks that the five sets live on `g` and are pairwise disjoint.
    pub fn new(g: &'g Graph, terminals: [VertexSet; 3], s0: VertexSet, r: VertexSet, k: usize) -> Result<Self> {
        let sets = [&terminals[0], &terminals[1], &terminals[2], &s0, &r];
        if sets.iter().any(|s| s.universe() != g.n()) {
            return Err(Error::Precondition("instance set over the wrong universe".into()));
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i].intersects(sets[j]) {
                    return Err(Error::Precondition(
                        "terminal sets, s0 and r must be pairwise disjoint".into(),
                    ));
                }
            }
        }
        Ok(SeparatorInstance { g, terminals, s0, r, k })
    }

    pub fn terminal_union(&self) -> VertexSet {
        let mut u = self.terminals[0].union(&self.terminals[1]);
        u.union_with(&self.terminals[2]);
        u
    }

    /// `N(V1 ∪ V2 ∪ V3)`.
    pub fn terminal_neighborhood(&self) -> VertexSet {
        self.g.neighborhood(&self.terminal_union())
    }

    /// Some two terminal sets touch, so no separator exists.
    pub fn terminals_adjacent(&self) -> bool {
        (0..3).any(|i| (i + 1..3).any(|j| self.g.sets_adjacent(&self.terminals[i], &self.terminals[j])))
    }

    /// `r ⊆ N(V1 ∪ V2 ∪ V3)`.
    pub fn in_base_case(&self) -> bool {
        self.r.is_subset(&self.terminal_neighborhood())
    }

    /// The two cheap certificates that no solution with `alpha <= k` exists.
    pub fn trivially_infeasible(&self) -> bool {
        self.terminals_adjacent() || alpha(self.g, &self.s0) > self.k
    }

    /// `s` is a separator within the allowed range with `alpha(s) <= bound`.
    pub fn is_solution(&self, s: &VertexSet, bound: usize) -> bool {
        self.s0.is_subset(s)
            && s.is_subset(&self.s0.union(&self.r))
            && self.g.is_separator(s, &self.terminals)
            && alpha(self.g, s) <= bound
    }

    /// The instance with `v` moved out of `r` into terminal set `slot`
    /// (`0..3`) or, for `slot == 3`, into `s0`.
    pub fn moved(&self, v: usize, slot: usize) -> SeparatorInstance<'g> {
        let mut next = self.clone();
        next.r.remove(v);
        if slot == 3 {
            next.s0.insert(v);
        } else {
            next.terminals[slot].insert(v);
        }
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_overlap() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let e = g.empty_set();
        let err = SeparatorInstance::new(&g, [g.set([0]), g.set([0]), e.clone()], e.clone(), e, 1);
        assert!(err.is_err());
    }

    #[test]
    fn solution_check() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let e = g.empty_set();
        let inst = SeparatorInstance::new(&g, [g.set([0]), g.set([2]), e.clone()], e.clone(), g.set([1]), 1).unwrap();
        assert!(inst.is_solution(&g.set([1]), 1));
        assert!(!inst.is_solution(&e, 1));
        assert!(inst.in_base_case());
        assert!(!inst.trivially_infeasible());
        let moved = inst.moved(1, 0);
        assert!(moved.terminals_adjacent());
    }
}
