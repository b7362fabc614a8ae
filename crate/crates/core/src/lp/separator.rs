//! LP relaxation and rounding for instances with `R ⊆ N(V1 ∪ V2 ∪ V3)`.
//!
//! Each terminal set is first closed under reachability in `G - (R ∪ S0)`.
//! The program has one variable per vertex of `R ∪ S0`:
//!
//! * `x_v = 1` for `v ∈ S0`;
//! * `x_c + x_d >= 1` for every connected pair `c ∈ N(V_i)`, `d ∈ N(V_j)`,
//!   `i != j`, joined by a path whose interior avoids `R ∪ S0` (`x_c >= 1`
//!   when `c = d`);
//! * `sum x_v <= k` over every independent `(2k+1)`-subset of `R ∪ S0`;
//! * `0 <= x_v <= 1`, minimising `sum x_v`.
//!
//! Rounding every `x_v >= 1/2` up gives a separator with `alpha <= 2k`.

use super::simplex::{int, rat, simplex_solve, LinearProgram, LpOutcome, Relation};
use crate::error::{Error, Result};
use crate::independence::{alpha, independent_subsets_of_size};
use crate::instance::{SeparatorInstance, SeparatorResult};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized<'g> {
    Instance(SeparatorInstance<'g>),
    Infeasible,
}

/// Replaces every terminal set by everything it reaches in `G - (R ∪ S0)`,
/// or reports that two terminal sets reach each other there.
pub fn normalize<'g>(inst: &SeparatorInstance<'g>) -> Normalized<'g> {
    let g = inst.g;
    let open = g.vertices().difference(&inst.r.union(&inst.s0));
    let closures: Vec<VertexSet> = inst.terminals.iter().map(|t| g.reach_within(t, &open)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if closures[i].intersects(&closures[j]) {
                return Normalized::Infeasible;
            }
        }
    }
    let mut out = inst.clone();
    out.terminals = closures.try_into().expect("three closures");
    Normalized::Instance(out)
}

/// Connected pairs `(c, d)` with `c <= d`, in lexicographic order.
fn connected_pairs(inst: &SeparatorInstance<'_>) -> Vec<(usize, usize)> {
    let g = inst.g;
    let candidates = inst.r.union(&inst.s0);
    let open = g.vertices().difference(&candidates);
    let nbhd: Vec<VertexSet> = inst
        .terminals
        .iter()
        .map(|t| g.neighborhood(t).intersection(&candidates))
        .collect();
    let labels = |v: usize| -> u8 { (0..3).filter(|&i| nbhd[i].contains(v)).fold(0, |m, i| m | 1 << i) };
    // c and d are split across terminal sets if their label masks allow i != j
    let crosses = |a: u8, b: u8| a != 0 && b != 0 && !(a == b && a.count_ones() == 1);
    let mut boundary = nbhd[0].union(&nbhd[1]);
    boundary.union_with(&nbhd[2]);
    let mut pairs = Vec::new();
    for c in &boundary {
        let lc = labels(c);
        let start = VertexSet::singleton(g.n(), c);
        let mut reach = g.reach_within(&start, &open);
        reach.insert(c);
        let mut touched = g.neighborhood(&reach);
        touched.insert(c);
        touched.intersect_with(&boundary);
        for d in touched.iter().filter(|&d| d >= c) {
            let ok = if d == c {
                lc.count_ones() >= 2
            } else {
                crosses(lc, labels(d))
            };
            if ok {
                pairs.push((c, d));
            }
        }
    }
    pairs
}

/// The separator program of a normalized instance. Variable `j` stands for
/// the `j`-th smallest vertex of `R ∪ S0`; `labels` records the vertex ids.
pub fn build_lp(inst: &SeparatorInstance<'_>) -> LinearProgram {
    let g = inst.g;
    let domain = inst.r.union(&inst.s0);
    let vars = domain.to_vec();
    let index = g.forward_map(&domain);
    let col = |v: usize| index[v].expect("vertex of r ∪ s0");
    let mut lp = LinearProgram::new(vars.len());
    lp.labels = vars.clone();
    lp.objective = vec![int(1); vars.len()];
    for v in &inst.s0 {
        lp.add(vec![(col(v), int(1))], Relation::Eq, int(1));
    }
    for (c, d) in connected_pairs(inst) {
        if c == d {
            lp.add(vec![(col(c), int(1))], Relation::Ge, int(1));
        } else {
            lp.add(vec![(col(c), int(1)), (col(d), int(1))], Relation::Ge, int(1));
        }
    }
    let k = inst.k;
    for set in independent_subsets_of_size(g, &domain, 2 * k + 1) {
        let coeffs = set.iter().map(|v| (col(v), int(1))).collect();
        lp.add(coeffs, Relation::Le, int(k as i64));
    }
    for j in 0..vars.len() {
        lp.add(vec![(j, int(1))], Relation::Le, int(1));
    }
    lp
}

/// Solves an instance with `R ⊆ N(V1 ∪ V2 ∪ V3)`.
///
/// `Found(s)` has `alpha(s) <= 2k`; `NoWitness` means no solution with
/// `alpha <= k` exists.
pub fn lp_separator(inst: &SeparatorInstance<'_>) -> Result<SeparatorResult> {
    if inst.trivially_infeasible() {
        return Ok(SeparatorResult::NoWitness);
    }
    let norm = match normalize(inst) {
        Normalized::Infeasible => return Ok(SeparatorResult::NoWitness),
        Normalized::Instance(n) => n,
    };
    if !norm.in_base_case() {
        return Err(Error::Precondition(
            "r must lie in the neighbourhood of the terminal sets".into(),
        ));
    }
    let lp = build_lp(&norm);
    let values = match simplex_solve(&lp)? {
        LpOutcome::Infeasible => return Ok(SeparatorResult::NoWitness),
        LpOutcome::Optimal { values, .. } => values,
    };
    let half = rat(1, 2);
    let s = VertexSet::from_iter(
        inst.g.n(),
        lp.labels
            .iter()
            .zip(&values)
            .filter(|(_, x)| **x >= half)
            .map(|(v, _)| *v),
    );
    debug_assert!(inst.is_solution(&s, 2 * inst.k), "rounded set is not a valid separator");
    debug_assert!(alpha(inst.g, &s) <= 2 * inst.k);
    Ok(SeparatorResult::Found(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn inst<'g>(g: &'g Graph, v1: &[usize], v2: &[usize], r: &[usize], k: usize) -> SeparatorInstance<'g> {
        SeparatorInstance::new(
            g,
            [g.set(v1.iter().copied()), g.set(v2.iter().copied()), g.empty_set()],
            g.empty_set(),
            g.set(r.iter().copied()),
            k,
        )
        .unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    // a = 0 and b = 1 with three pairwise nonadjacent common neighbours
    fn three_common() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g = path(3);
        let i = inst(&g, &[0], &[2], &[1], 1);
        assert_eq!(normalize(&i), Normalized::Instance(i.clone()));

        let e = path(2);
        assert_eq!(normalize(&inst(&e, &[0], &[1], &[], 1)), Normalized::Infeasible);

        // a - x - c - b with r = {c}: x joins a's side
        let p = path(4);
        let Normalized::Instance(n) = normalize(&inst(&p, &[0], &[3], &[2], 1)) else {
            panic!("feasible")
        };
        assert_eq!(n.terminals[0].to_vec(), vec![0, 1]);
        assert_eq!(n.terminals[1].to_vec(), vec![3]);
    }

    #[test]
    fn zero_budget_forbids_every_vertex() {
        let g = path(3);
        let lp = build_lp(&inst(&g, &[0], &[2], &[1], 0));
        assert!(lp
            .constraints
            .iter()
            .any(|c| c.relation == Relation::Le && c.rhs == int(0) && c.coeffs == vec![(0, int(1))]));
    }

    #[test]
    fn common_neighbours_program() {
        let g = three_common();
        let lp = build_lp(&inst(&g, &[0], &[1], &[2, 3, 4], 1));
        let forced: Vec<_> = lp
            .constraints
            .iter()
            .filter(|c| c.relation == Relation::Ge && c.coeffs.len() == 1)
            .map(|c| c.coeffs.clone())
            .collect();
        assert_eq!(forced, vec![vec![(0, int(1))], vec![(1, int(1))], vec![(2, int(1))]]);
        let packing: Vec<_> = lp
            .constraints
            .iter()
            .filter(|c| c.relation == Relation::Le && c.coeffs.len() == 3)
            .collect();
        assert_eq!(packing.len(), 1);
        assert_eq!(packing[0].rhs, int(1));
        assert_eq!(simplex_solve(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn path_program_has_one_pair() {
        let g = path(4);
        let lp = build_lp(&inst(&g, &[0], &[3], &[1, 2], 1));
        let ge: Vec<_> = lp.constraints.iter().filter(|c| c.relation == Relation::Ge).collect();
        assert_eq!(ge.len(), 1);
        assert_eq!(ge[0].coeffs, vec![(0, int(1)), (1, int(1))]);
        assert!(lp.constraints.iter().all(|c| c.coeffs.len() <= 2));
    }

    #[test]
    fn separator_examples() {
        let g = path(3);
        assert_eq!(
            lp_separator(&inst(&g, &[0], &[2], &[1], 1)).unwrap(),
            SeparatorResult::Found(g.set([1]))
        );

        let p = path(4);
        let i = inst(&p, &[0], &[3], &[1, 2], 1);
        let SeparatorResult::Found(s) = lp_separator(&i).unwrap() else {
            panic!("a separator exists")
        };
        assert!(i.is_solution(&s, 2));
        assert!(!s.is_empty() && s.is_subset(&p.set([1, 2])));

        let t = three_common();
        assert_eq!(
            lp_separator(&inst(&t, &[0], &[1], &[2, 3, 4], 1)).unwrap(),
            SeparatorResult::NoWitness
        );
    }

    #[test]
    fn rejects_far_vertices() {
        let g = path(5);
        let i = inst(&g, &[0], &[4], &[1, 2, 3], 1);
        assert!(lp_separator(&i).is_err());
    }

    #[test]
    fn debug_dump_layout() {
        let g = path(3);
        let text = build_lp(&inst(&g, &[0], &[2], &[1], 1)).to_string();
        assert_eq!(text, "min\n  1 x1\nst\n  1 x1 >= 1\n  1 x1 <= 1\nbounds\n  x1 >= 0\n");
    }
}
