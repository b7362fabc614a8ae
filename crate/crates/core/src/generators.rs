//! Instance generators: seeded random and chordal graphs, a few named
//! graphs, and the hardness constructions.
//!
//! Composite constructions lay out vertex ids as copies of the input first,
//! then gadget vertices in construction order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// Each pair `u < v`, in lexicographic order, is an edge with probability
/// `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_size(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// A connected chordal graph: every new vertex is attached to a clique of
/// one to three earlier vertices grown from a random anchor.
pub fn gen_chordal(n: usize, seed: u64) -> Result<Graph> {
    check_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        let size = rng.gen_range(1..=3);
        let mut clique = vec![rng.gen_range(0..v)];
        while clique.len() < size {
            let cands: Vec<usize> = (0..v)
                .filter(|&c| !clique.contains(&c) && clique.iter().all(|&x| b.has_edge(x, c)))
                .collect();
            match cands.choose(&mut rng) {
                Some(&c) => clique.push(c),
                None => break,
            }
        }
        for c in clique {
            b.add_edge(v, c);
        }
    }
    let g = b.build();
    debug_assert!(g.is_chordal());
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v);
    }
    b.build()
}

pub fn cycle(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    if n >= 3 {
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
    }
    b.build()
}

pub fn complete(n: usize) -> Graph {
    Graph::edgeless(n).complement()
}

pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    b.build()
}

/// Copies `g` onto `b` at offset `at`.
fn copy_into(b: &mut GraphBuilder, g: &Graph, at: usize) {
    for (u, v) in g.edges() {
        b.add_edge(at + u, at + v);
    }
}

/// Two copies of `g` (ids `0..n` and `n..2n`) with every cross pair joined.
pub fn gen_blowup(g: &Graph) -> Result<Graph> {
    let n = g.n();
    check_size(2 * n)?;
    let mut b = GraphBuilder::new(2 * n);
    copy_into(&mut b, g, 0);
    copy_into(&mut b, g, n);
    let (a, c): (Vec<usize>, Vec<usize>) = ((0..n).collect(), (n..2 * n).collect());
    b.join(&a, &c);
    Ok(b.build())
}

pub fn has_k4(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        common.iter().any(|w| g.neighbors(w).intersects(&common))
    })
}

/// Complement copies `G1` (ids `0..n`) and `G2` (`n..2n`) joined by the
/// matching `i ~ n + i`; then `k + 1` vertices `x` joined to `G1`, `k + 1`
/// vertices `y` joined to `G2` and, for `k >= 5`, `k - 4` vertices `z`
/// joined to every `x` and `y`. Requires `k >= 4` and no `K4` in `g`.
pub fn gen_npc_gadget(g: &Graph, k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::Precondition("the gadget needs k >= 4".into()));
    }
    if has_k4(g) {
        return Err(Error::Precondition("the input graph contains a K4".into()));
    }
    let n = g.n();
    let total = 2 * n + 2 * (k + 1) + k.saturating_sub(4);
    check_size(total)?;
    let comp = g.complement();
    let mut b = GraphBuilder::new(total);
    copy_into(&mut b, &comp, 0);
    copy_into(&mut b, &comp, n);
    for i in 0..n {
        b.add_edge(i, n + i);
    }
    let g1: Vec<usize> = (0..n).collect();
    let g2: Vec<usize> = (n..2 * n).collect();
    let xs: Vec<usize> = (2 * n..2 * n + k + 1).collect();
    let ys: Vec<usize> = (2 * n + k + 1..2 * n + 2 * (k + 1)).collect();
    let zs: Vec<usize> = (2 * n + 2 * (k + 1)..total).collect();
    b.join(&xs, &g1);
    b.join(&ys, &g2);
    b.join(&zs, &xs);
    b.join(&zs, &ys);
    Ok(b.build())
}

/// Adds a vertex `w_uv` adjacent to both ends of every edge `uv` (edges in
/// lexicographic order), then two disjoint 5-wheels, each laid out as its
/// rim `c0..c4` followed by the hub.
pub fn gen_triangle_gadget(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let m = g.m();
    let total = n + m + 12;
    check_size(total)?;
    let mut b = GraphBuilder::new(total);
    copy_into(&mut b, g, 0);
    for (i, (u, v)) in g.edges().enumerate() {
        b.add_edge(n + i, u);
        b.add_edge(n + i, v);
    }
    for wheel in 0..2 {
        let at = n + m + 6 * wheel;
        for c in 0..5 {
            b.add_edge(at + c, at + (c + 1) % 5);
            b.add_edge(at + 5, at + c);
        }
    }
    Ok(b.build())
}

/// Which `J`-graphs make up the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JChain {
    /// All `n^2` pairs `(i, j)`, lexicographically.
    All,
    /// The single `J`-graph for one pair, for small experiments.
    Single(usize, usize),
}

/// Vertex ids of one `J`-graph inside the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JLayout {
    pub i: usize,
    pub j: usize,
    pub left_g: Vec<usize>,
    pub right_g: Vec<usize>,
    pub z_left: Vec<usize>,
    pub z_right: Vec<usize>,
}

impl JLayout {
    pub fn left(&self) -> Vec<usize> {
        [self.left_g.as_slice(), self.z_left.as_slice()].concat()
    }
}

#[derive(Clone, Debug)]
pub struct SepHardness {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    pub w: Vec<usize>,
    pub chain: Vec<JLayout>,
}

/// The chain of `J`-graphs of `g` between terminals `u` and `v`, with
/// `k - 3` extra common neighbours of `u` and `v`. Each `J`-graph occupies
/// `2n + 6` consecutive ids: `G_L`, `G_R`, `Z_L`, `Z_R`. Then come `u`, `v`
/// and the extra vertices.
pub fn gen_sep_hardness(g: &Graph, k: usize, chain: JChain) -> Result<SepHardness> {
    if k < 3 {
        return Err(Error::Precondition("the construction needs k >= 3".into()));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("the input graph has no vertices".into()));
    }
    let pairs: Vec<(usize, usize)> = match chain {
        JChain::All => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
        JChain::Single(i, j) => {
            if i >= n || j >= n {
                return Err(Error::VertexOutOfRange { vertex: i.max(j), n });
            }
            vec![(i, j)]
        }
    };
    let block = 2 * n + 6;
    let total = pairs.len() * block + 2 + (k - 3);
    check_size(total)?;
    let comp = g.complement();
    let mut b = GraphBuilder::new(total);
    let mut layouts = Vec::with_capacity(pairs.len());
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let at = idx * block;
        let lay = JLayout {
            i,
            j,
            left_g: (at..at + n).collect(),
            right_g: (at + n..at + 2 * n).collect(),
            z_left: (at + 2 * n..at + 2 * n + 3).collect(),
            z_right: (at + 2 * n + 3..at + block).collect(),
        };
        copy_into(&mut b, &comp, at);
        copy_into(&mut b, &comp, at + n);
        for p in 0..n {
            b.add_edge(lay.left_g[p], lay.right_g[p]);
        }
        let right_side = [lay.right_g.as_slice(), lay.z_right.as_slice()].concat();
        b.join(&[lay.left_g[i]], &right_side);
        b.join(&[lay.right_g[j]], &lay.left());
        layouts.push(lay);
    }
    for pair in layouts.windows(2) {
        b.join(&pair[0].right_g, &pair[1].left());
    }
    let u = pairs.len() * block;
    let v = u + 1;
    let w: Vec<usize> = (v + 1..total).collect();
    b.join(&[u], &layouts[0].left());
    b.join(&[v], &layouts[layouts.len() - 1].right_g);
    b.join(&[u, v], &w);
    Ok(SepHardness {
        graph: b.build(),
        u,
        v,
        w,
        chain: layouts,
    })
}
