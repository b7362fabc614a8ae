//! Dense two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Problems are `minimize c·x` subject to linear rows and `x >= 0`. Every
//! variable index below `num_vars` is structural; the solver adds slack,
//! surplus and artificial columns internally.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().map(|(j, a)| a * &x[*j]).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// `minimize objective·x` over `x >= 0` subject to `constraints`.
///
/// `labels[j]` names variable `j` (a vertex id for separator programs).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub labels: Vec<usize>,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            labels: (0..num_vars).collect(),
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&mut self, coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) {
        debug_assert!(coeffs.iter().all(|(j, _)| *j < self.num_vars()));
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Plain-text dump: `min`, one row per constraint under `st`, then `bounds`.
impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |a: &Rational, j: usize| format!("{a} x{}", self.labels[j]);
        let obj: Vec<String> = self
            .objective
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| term(a, j))
            .collect();
        writeln!(f, "min")?;
        writeln!(f, "  {}", if obj.is_empty() { "0".into() } else { obj.join(" + ") })?;
        writeln!(f, "st")?;
        for c in &self.constraints {
            let lhs: Vec<String> = c.coeffs.iter().map(|(j, a)| term(a, *j)).collect();
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Ge => ">=",
                Relation::Eq => "=",
            };
            writeln!(f, "  {} {rel} {}", lhs.join(" + "), c.rhs)?;
        }
        writeln!(f, "bounds")?;
        for l in &self.labels {
            writeln!(f, "  x{l} >= 0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { values: Vec<Rational>, objective: Rational },
    Infeasible,
}

struct Tableau {
    // rows[i] has `cols` coefficients followed by the right-hand side
    rows: Vec<Vec<Rational>>,
    // reduced costs followed by minus the objective value
    cost: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let nz: Vec<usize> = (0..=self.cols).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `< allowed`. Returns `false` when
    /// unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.cols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Exact optimum of `lp`, or `Infeasible`. Unbounded programs are reported
/// as [`Error::UnboundedLp`].
pub fn simplex_solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.num_vars();
    let m = lp.constraints.len();
    let mut rels = Vec::with_capacity(m);
    let mut dense: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(m);
    for c in &lp.constraints {
        let mut row = vec![Rational::zero(); n];
        for (j, a) in &c.coeffs {
            row[*j] += a;
        }
        let (mut rel, mut rhs) = (c.relation, c.rhs.clone());
        if rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            rhs = -rhs;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rels.push(rel);
        dense.push((row, rhs));
    }
    let n_slack = rels.iter().filter(|r| **r != Relation::Eq).count();
    let n_art = rels.iter().filter(|r| **r != Relation::Le).count();
    let art_start = n + n_slack;
    let cols = art_start + n_art;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (n, art_start);
    for ((coef, rhs), rel) in dense.into_iter().zip(&rels) {
        let mut row = coef;
        row.resize(cols + 1, Rational::zero());
        row[cols] = rhs;
        match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }

    // phase 1: minimise the sum of artificials
    let mut cost = vec![Rational::zero(); cols + 1];
    for c in cost.iter_mut().take(cols).skip(art_start) {
        *c = Rational::one();
    }
    for (i, row) in rows.iter().enumerate() {
        if basis[i] >= art_start {
            for (c, a) in cost.iter_mut().zip(row) {
                *c -= a;
            }
        }
    }
    let mut tab = Tableau {
        rows,
        cost,
        basis,
        cols,
    };
    if !tab.optimize(cols) {
        return Err(Error::UnboundedLp);
    }
    if !tab.cost[cols].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    // drive zero-level artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= art_start {
            match (0..art_start).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => {
                    tab.pivot(i, j);
                    i += 1;
                }
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // phase 2
    let mut cost = vec![Rational::zero(); cols + 1];
    cost[..n].clone_from_slice(&lp.objective);
    for (i, row) in tab.rows.iter().enumerate() {
        let b = tab.basis[i];
        if b < n && !lp.objective[b].is_zero() {
            let cb = lp.objective[b].clone();
            for (c, a) in cost.iter_mut().zip(row) {
                if !a.is_zero() {
                    *c -= &cb * a;
                }
            }
        }
    }
    tab.cost = cost;
    if !tab.optimize(art_start) {
        return Err(Error::UnboundedLp);
    }
    let mut values = vec![Rational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            values[b] = tab.rows[i][cols].clone();
        }
    }
    let objective = lp.value(&values);
    debug_assert!(lp.is_feasible(&values));
    Ok(LpOutcome::Optimal { values, objective })
}
