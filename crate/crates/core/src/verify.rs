//! Independent replay of elementary certificates.
//!
//! Only base polynomial arithmetic is shared with the engines; the checks on
//! ops and the replay loop are written out here again.

use std::fmt;

use crate::algebra::{Ambient, Mat};
use crate::cert::ElemCert;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};

/// What a certificate is applied to: a row, or a matrix from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Row(Vec<Poly>),
    Matrix(Mat),
}

impl Subject {
    fn grid(&self) -> Vec<Vec<Poly>> {
        match self {
            Subject::Row(r) => vec![r.clone()],
            Subject::Matrix(m) => m.rows(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff {
    /// 0-based `(row, column)`.
    pub position: (usize, usize),
    pub found: Poly,
    pub expected: Poly,
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): found {}, expected {}",
            self.position.0 + 1,
            self.position.1 + 1,
            self.found,
            self.expected
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub diff: Option<Diff>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.diff.is_none()
    }
}

fn admissible(amb: &Ambient, f: &Poly) -> bool {
    match amb {
        Ambient::Poly { ring, var } => f.ring() == *ring && f.var() == *var,
        Ambient::Rees(ctx) => {
            f.ring() == ctx.ring()
                && f.var() == Var::T
                && f.coeffs()
                    .iter()
                    .enumerate()
                    .all(|(k, c)| k % 2 == 0 || ctx.ideal().contains(c))
        }
    }
}

/// Replays `cert` on `start` and compares with `expected` entry by entry.
pub fn verify_certificate(cert: &ElemCert, start: &Subject, expected: &Subject) -> Result<Verdict> {
    let amb = cert.ambient();
    let n = cert.size();
    for (k, op) in cert.ops().iter().enumerate() {
        if op.i >= n || op.j >= n || op.i == op.j {
            return Err(Error::MalformedCertificate(format!(
                "op {}: indices ({}, {}) with n = {n}",
                k + 1,
                op.i + 1,
                op.j + 1
            )));
        }
        if !admissible(amb, &op.lambda) {
            return Err(Error::MalformedCertificate(format!(
                "op {}: multiplier {} is not in {amb}",
                k + 1,
                op.lambda
            )));
        }
    }
    let mut grid = start.grid();
    let target = expected.grid();
    if grid.len() != target.len() {
        return Err(Error::LengthMismatch(grid.len(), target.len()));
    }
    for (row, want) in grid.iter().zip(&target) {
        if row.len() != n {
            return Err(Error::LengthMismatch(row.len(), n));
        }
        if want.len() != n {
            return Err(Error::LengthMismatch(want.len(), n));
        }
        if let Some(bad) = row.iter().chain(want).find(|f| !admissible(amb, f)) {
            return Err(Error::RingMismatch(format!("entry {bad} is not in {amb}")));
        }
    }
    for op in cert.ops() {
        for row in grid.iter_mut() {
            let add = row[op.i].mul(&op.lambda);
            row[op.j] = row[op.j].add(&add);
        }
    }
    for (r, (got, want)) in grid.iter().zip(&target).enumerate() {
        for (c, (x, y)) in got.iter().zip(want).enumerate() {
            if x != y {
                let diff = Diff {
                    position: (r, c),
                    found: x.clone(),
                    expected: y.clone(),
                };
                return Ok(Verdict { diff: Some(diff) });
            }
        }
    }
    Ok(Verdict { diff: None })
}
