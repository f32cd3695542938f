//! Elementary certificates: ordered products `e_{i1 j1}(l1) e_{i2 j2}(l2) ...`
//! of elementary matrices over an ambient algebra.
//!
//! Rows are acted on from the right: `(v e_ij(l))_j = v_j + l v_i`.
//! Indices are 0-based in memory and 1-based in the text format.

use std::fmt;

use crate::algebra::{Ambient, Mat};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemOp {
    pub i: usize,
    pub j: usize,
    pub lambda: Poly,
}

impl ElemOp {
    pub fn new(i: usize, j: usize, lambda: Poly) -> Self {
        debug_assert_ne!(i, j);
        ElemOp { i, j, lambda }
    }

    pub fn inverse(&self) -> ElemOp {
        ElemOp {
            i: self.i,
            j: self.j,
            lambda: self.lambda.neg(),
        }
    }

    /// Applies the op to a row in place.
    pub fn act_on_row(&self, row: &mut [Poly]) {
        row[self.j] = row[self.j].add(&self.lambda.mul(&row[self.i]));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemCert {
    ambient: Ambient,
    n: usize,
    ops: Vec<ElemOp>,
}

impl ElemCert {
    pub fn empty(ambient: Ambient, n: usize) -> Self {
        ElemCert {
            ambient,
            n,
            ops: Vec::new(),
        }
    }

    /// Builds a certificate, checking indices and that every multiplier is an
    /// element of the ambient.
    pub fn new(ambient: Ambient, n: usize, ops: Vec<ElemOp>) -> Result<Self> {
        let cert = ElemCert { ambient, n, ops };
        cert.validate()?;
        Ok(cert)
    }

    /// Builds a certificate without any checks, for handing untrusted data
    /// to the verifier.
    pub fn unchecked(ambient: Ambient, n: usize, ops: Vec<ElemOp>) -> Self {
        ElemCert { ambient, n, ops }
    }

    pub fn validate(&self) -> Result<()> {
        for (k, op) in self.ops.iter().enumerate() {
            if op.i >= self.n || op.j >= self.n || op.i == op.j {
                return Err(Error::MalformedCertificate(format!(
                    "op {}: bad indices ({}, {}) for n = {}",
                    k + 1,
                    op.i + 1,
                    op.j + 1,
                    self.n
                )));
            }
            self.ambient
                .check(&op.lambda)
                .map_err(|e| Error::MalformedCertificate(format!("op {}: {e}", k + 1)))?;
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[ElemOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Appends `e_ij(lambda)` unless `lambda` is zero.
    pub fn push(&mut self, i: usize, j: usize, lambda: Poly) {
        debug_assert!(self.ambient.contains(&lambda), "{lambda} not in {}", self.ambient);
        if !lambda.is_zero() {
            self.ops.push(ElemOp::new(i, j, lambda));
        }
    }

    /// `self` followed by `other`.
    pub fn then(mut self, other: &ElemCert) -> ElemCert {
        assert_eq!(self.n, other.n);
        self.ops.extend(other.ops.iter().cloned());
        self
    }

    /// Product of the ops, left to right.
    pub fn replay(&self) -> Mat {
        let mut m = Mat::identity(&self.ambient, self.n);
        for op in &self.ops {
            m.right_elementary(op.i, op.j, &op.lambda);
        }
        m
    }

    pub fn apply_to_row(&self, row: &[Poly]) -> Vec<Poly> {
        let mut v = row.to_vec();
        for op in &self.ops {
            op.act_on_row(&mut v);
        }
        v
    }

    /// Certificate of the inverse matrix.
    pub fn inverse(&self) -> ElemCert {
        ElemCert {
            ambient: self.ambient.clone(),
            n: self.n,
            ops: self.ops.iter().rev().map(ElemOp::inverse).collect(),
        }
    }

    /// Applies `f` to every multiplier, re-homing the certificate.
    pub fn map(&self, ambient: Ambient, f: impl Fn(&Poly) -> Poly) -> ElemCert {
        let ops = self
            .ops
            .iter()
            .map(|op| ElemOp {
                i: op.i,
                j: op.j,
                lambda: f(&op.lambda),
            })
            .filter(|op| !op.lambda.is_zero())
            .collect();
        ElemCert {
            ambient,
            n: self.n,
            ops,
        }
    }

    /// Renames indices through `perm` (conjugation by a permutation).
    pub fn relabel(&self, perm: &[usize]) -> ElemCert {
        let ops = self
            .ops
            .iter()
            .map(|op| ElemOp {
                i: perm[op.i],
                j: perm[op.j],
                lambda: op.lambda.clone(),
            })
            .collect();
        ElemCert {
            ambient: self.ambient.clone(),
            n: self.n,
            ops,
        }
    }

    /// Same ops acting on the leading block of a size-`n` matrix.
    pub fn embed(&self, n: usize) -> ElemCert {
        assert!(n >= self.n);
        ElemCert {
            ambient: self.ambient.clone(),
            n,
            ops: self.ops.clone(),
        }
    }

    /// Reinterprets the certificate over another ambient with the same
    /// elements (e.g. `R[t]` as `A` when `a = R`).
    pub fn rehome(&self, ambient: Ambient) -> Result<ElemCert> {
        ElemCert::new(ambient, self.n, self.ops.clone())
    }
}

impl fmt::Display for ElemCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cert ambient={} n={}", self.ambient, self.n)?;
        for op in &self.ops {
            writeln!(f, "E {} {} {}", op.i + 1, op.j + 1, op.lambda)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::ring::RingCtx;

    fn f2() -> Ambient {
        Ambient::poly(RingCtx::prime_field(2).unwrap(), Var::T)
    }

    #[test]
    fn hand_replay() {
        let amb = f2();
        let p = |s: &str| amb.parse_elem(s).unwrap();
        let cert = ElemCert::new(
            amb.clone(),
            2,
            vec![ElemOp::new(1, 0, p("1")), ElemOp::new(0, 1, p("1 + t"))],
        )
        .unwrap();
        let out = cert.apply_to_row(&[p("t"), p("1 + t")]);
        assert_eq!(out, amb.unit_vector(2, 0));
        assert_eq!(cert.replay().left_apply(&[p("t"), p("1 + t")]), out);
    }

    #[test]
    fn inverse_replays_to_identity() {
        let amb = f2();
        let p = |s: &str| amb.parse_elem(s).unwrap();
        let cert = ElemCert::new(
            amb.clone(),
            3,
            vec![
                ElemOp::new(0, 1, p("t^2")),
                ElemOp::new(2, 0, p("t")),
                ElemOp::new(1, 2, p("1 + t")),
            ],
        )
        .unwrap();
        assert!(cert.replay().mul(&cert.inverse().replay()).is_identity());
        assert!(cert.clone().then(&cert.inverse()).replay().is_identity());
    }

    #[test]
    fn rejects_bad_ops() {
        let amb = f2();
        let one = amb.one();
        assert!(ElemCert::new(
            amb.clone(),
            2,
            vec![ElemOp {
                i: 0,
                j: 0,
                lambda: one.clone()
            }]
        )
        .is_err());
        assert!(ElemCert::new(
            amb.clone(),
            2,
            vec![ElemOp {
                i: 0,
                j: 2,
                lambda: one
            }]
        )
        .is_err());
    }

    #[test]
    fn text_form() {
        let amb = f2();
        let cert = ElemCert::new(amb.clone(), 2, vec![ElemOp::new(1, 0, amb.one())]).unwrap();
        assert_eq!(cert.to_string(), "cert ambient=Fp:2[t] n=2\nE 2 1 1\n");
    }
}
