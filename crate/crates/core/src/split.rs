use crate::graph::Graph;
use crate::independence::alpha;
use crate::vertex_set::VertexSet;

/// A partition `(S, C1, C2, C3)` of the vertex set where `S` separates the
/// three parts pairwise. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedSplit {
    pub s: VertexSet,
    pub parts: [VertexSet; 3],
}

impl BalancedSplit {
    /// `S` and the parts are pairwise disjoint and cover `V(G)`.
    pub fn is_partition(&self, g: &Graph) -> bool {
        let mut seen = self.s.clone();
        for p in &self.parts {
            if p.intersects(&seen) {
                return false;
            }
            seen.union_with(p);
        }
        seen == g.vertices()
    }

    pub fn separates(&self, g: &Graph) -> bool {
        g.is_separator(&self.s, &self.parts)
    }

    /// `min over i < j of |I ∩ (C_i ∪ C_j)|`.
    pub fn min_pair_share(&self, i_set: &VertexSet) -> usize {
        let c: Vec<usize> = self.parts.iter().map(|p| p.intersection_len(i_set)).collect();
        (c[0] + c[1]).min(c[0] + c[2]).min(c[1] + c[2])
    }

    pub fn max_part_alpha_within(&self, g: &Graph, w: &VertexSet) -> usize {
        self.parts
            .iter()
            .map(|p| alpha(g, &p.intersection(w)))
            .max()
            .unwrap_or(0)
    }

    pub fn empty_parts(&self) -> usize {
        self.parts.iter().filter(|p| p.is_empty()).count()
    }
}
