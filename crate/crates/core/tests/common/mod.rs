//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tia_core::lp::{LinearProgram, Relation};
use tia_core::td::from_elimination_order;
use tia_core::{Graph, TreeDecomposition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graphs on at most 7 vertices as adjacency masks.
type Adj = Vec<u8>;

fn to_graph(adj: &Adj) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest upper-triangle code over relabellings that list vertices by
/// non-increasing degree.
fn canonical(adj: &Adj) -> u32 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut best = u32::MAX;
    for p in (0..n).permutations(n) {
        if p.windows(2).any(|w| deg[w[0]] < deg[w[1]]) {
            continue;
        }
        let mut code = 0u32;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[p[i]] >> p[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    best
}

/// One representative of every isomorphism class of connected graphs on
/// `1..=max_n` vertices. Every connected graph is a connected graph plus a
/// vertex with at least one neighbour (remove a leaf of a spanning tree).
pub fn connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 7);
    let mut levels: Vec<Vec<Adj>> = vec![vec![vec![0]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &levels[n - 2] {
            for nb in 1u8..1 << (n - 1) {
                let mut a = adj.clone();
                a.push(nb);
                for (u, m) in a.iter_mut().enumerate().take(n - 1) {
                    if nb >> u & 1 == 1 {
                        *m |= 1 << (n - 1);
                    }
                }
                if seen.insert(canonical(&a)) {
                    next.push(a);
                }
            }
        }
        levels.push(next);
    }
    levels.iter().map(|l| l.iter().map(to_graph).collect()).collect()
}

/// Every labelled graph on exactly `n` vertices.
pub fn labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u32..1 << pairs.len())
        .map(|pick| {
            let e: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &e).unwrap()
        })
        .collect()
}

/// A decomposition from a uniformly random elimination ordering.
pub fn random_td(g: &Graph, r: &mut ChaCha8Rng) -> TreeDecomposition {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(r);
    from_elimination_order(g, &order).unwrap()
}

/// The clique tree of a chordal graph.
pub fn clique_tree(g: &Graph) -> TreeDecomposition {
    let peo: Vec<usize> = g.mcs_order().into_iter().rev().collect();
    from_elimination_order(g, &peo).unwrap()
}

/// A bounded LP: small integer data, every variable also capped from above.
pub fn random_lp(r: &mut ChaCha8Rng) -> LinearProgram {
    let nv = r.gen_range(1..=6);
    let mut lp = LinearProgram::new(nv);
    lp.objective = (0..nv)
        .map(|_| BigRational::from_integer(r.gen_range(-3..=3).into()))
        .collect();
    for _ in 0..r.gen_range(1..=4) {
        let mut coeffs = Vec::new();
        for j in 0..nv {
            if r.gen_bool(0.7) {
                coeffs.push((j, BigRational::from_integer(r.gen_range(-3..=3).into())));
            }
        }
        let relation = match r.gen_range(0..5) {
            0 => Relation::Eq,
            1 | 2 => Relation::Le,
            _ => Relation::Ge,
        };
        lp.add(coeffs, relation, BigRational::from_integer(r.gen_range(-4..=8).into()));
    }
    for j in 0..nv {
        lp.add(
            vec![(j, BigRational::one())],
            Relation::Le,
            BigRational::from_integer(r.gen_range(1..=5).into()),
        );
    }
    lp
}

type Q = Ratio<i128>;

/// Solves the square system `a x = b`; `None` when singular.
fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col] / a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= f * p;
                }
                let d = f * b[col];
                b[i] -= d;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

fn to_big(q: &Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Least objective over basic feasible solutions (the optimum of a bounded
/// program), or `None` when there is none. Every choice of `n` tight rows
/// among the constraints and `x >= 0` is tried.
pub fn lp_by_vertex_enumeration(lp: &LinearProgram) -> Option<BigRational> {
    let nv = lp.num_vars();
    let small = |x: &BigRational| -> Q {
        use num_traits::ToPrimitive;
        Q::new(x.numer().to_i128().unwrap(), x.denom().to_i128().unwrap())
    };
    let mut rows: Vec<(Vec<Q>, Q)> = lp
        .constraints
        .iter()
        .map(|c| {
            let mut a = vec![Q::zero(); nv];
            for (j, v) in &c.coeffs {
                a[*j] += small(v);
            }
            (a, small(&c.rhs))
        })
        .collect();
    for j in 0..nv {
        let mut a = vec![Q::zero(); nv];
        a[j] = Q::one();
        rows.push((a, Q::zero()));
    }
    let mut best: Option<BigRational> = None;
    for pick in (0..rows.len()).combinations(nv) {
        let a = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b = pick.iter().map(|&i| rows[i].1).collect();
        let Some(x) = solve_square(a, b) else { continue };
        if x.iter().any(|v| v.is_negative()) {
            continue;
        }
        let xb: Vec<BigRational> = x.iter().map(to_big).collect();
        if !lp.is_feasible(&xb) {
            continue;
        }
        let val = lp.value(&xb);
        if best.as_ref().is_none_or(|b| val < *b) {
            best = Some(val);
        }
    }
    best
}
