//! The conductor square
//!
//! ```text
//!   A = R[at, t^2] --i1--> R[t]
//!        | eta1              | eta2
//!        v                   v
//!   (R/a)[u]     ----i2--> (R/a)[t]        (u = t^2)
//! ```
//!
//! and the registered surjections along which certificates can be lifted.

use crate::algebra::{Ambient, Mat};
use crate::cert::ElemCert;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Poly, Var};
use crate::rees::ReesCtx;
use crate::ring::{CoeffMap, RingCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorSquare {
    ctx: ReesCtx,
    quotient: RingCtx,
}

impl ConductorSquare {
    pub fn new(ctx: ReesCtx) -> Self {
        let quotient = ctx.quotient_ring();
        ConductorSquare { ctx, quotient }
    }

    pub fn ctx(&self) -> &ReesCtx {
        &self.ctx
    }

    /// `R/a`.
    pub fn quotient_ring(&self) -> RingCtx {
        self.quotient
    }

    fn reduce(&self) -> CoeffMap {
        CoeffMap::Reduce {
            from: self.ctx.ring(),
            to: self.quotient,
        }
    }

    /// `A`.
    pub fn apex(&self) -> Ambient {
        Ambient::Rees(self.ctx.clone())
    }

    /// `R[t]`.
    pub fn corner1(&self) -> Ambient {
        Ambient::poly(self.ctx.ring(), Var::T)
    }

    /// `(R/a)[u]`.
    pub fn corner2(&self) -> Ambient {
        Ambient::poly(self.quotient, Var::U)
    }

    /// `(R/a)[t]`.
    pub fn base(&self) -> Ambient {
        Ambient::poly(self.quotient, Var::T)
    }

    pub fn i1(&self, f: &Poly) -> Poly {
        debug_assert!(self.ctx.contains(f));
        f.clone()
    }

    pub fn eta1(&self, f: &Poly) -> Poly {
        debug_assert!(self.ctx.contains(f));
        f.map_coeffs(self.reduce()).even_part_halved(Var::U)
    }

    pub fn i2(&self, g: &Poly) -> Poly {
        debug_assert_eq!(g.var(), Var::U);
        g.double_degrees(Var::T)
    }

    pub fn eta2(&self, f: &Poly) -> Poly {
        debug_assert_eq!(f.var(), Var::T);
        f.map_coeffs(self.reduce())
    }

    /// The surjection `A -> (R/a)[u]`.
    pub fn eta1_map(&self) -> Surjection {
        Surjection {
            domain: self.apex(),
            codomain: self.corner2(),
            coeff: self.reduce(),
            halve: true,
        }
    }

    /// The surjection `R[t] -> (R/a)[t]`.
    pub fn eta2_map(&self) -> Surjection {
        Surjection {
            domain: self.corner1(),
            codomain: self.base(),
            coeff: self.reduce(),
            halve: false,
        }
    }
}

/// A surjective ring map between ambients that acts on coefficients, and
/// optionally sends `t^(2k) -> u^k` (dropping odd degrees, which the map
/// kills anyway). Comes with the canonical set-theoretic lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    domain: Ambient,
    codomain: Ambient,
    coeff: CoeffMap,
    halve: bool,
}

impl Surjection {
    /// `R[x] -> (R/b)[x]`.
    pub fn mod_ideal(var: Var, b: &Ideal) -> Surjection {
        let from = b.ring();
        let to = b.quotient_ring();
        Surjection {
            domain: Ambient::poly(from, var),
            codomain: Ambient::poly(to, var),
            coeff: CoeffMap::Reduce { from, to },
            halve: false,
        }
    }

    /// Reduction of an ambient over a local artinian ring `Z/p^k` (or a field)
    /// modulo its nilradical. For `A = S[at, t^2]` the target is `F[t]` when
    /// `a` is the unit ideal and `F[u]` otherwise.
    pub fn nil_reduction(domain: &Ambient, field: RingCtx) -> Result<Surjection> {
        let from = domain.ring();
        let coeff = CoeffMap::Reduce { from, to: field };
        match domain {
            Ambient::Poly { var, .. } => Ok(Surjection {
                domain: domain.clone(),
                codomain: Ambient::poly(field, *var),
                coeff,
                halve: false,
            }),
            Ambient::Rees(ctx) => {
                let (var, halve) = if ctx.a_is_unit() {
                    (Var::T, false)
                } else if ctx.a_is_nil() {
                    (Var::U, true)
                } else {
                    return Err(Error::UnsupportedRing(format!("{domain} is not over a local ring")));
                };
                Ok(Surjection {
                    domain: domain.clone(),
                    codomain: Ambient::poly(field, var),
                    coeff,
                    halve,
                })
            }
        }
    }

    pub fn domain(&self) -> &Ambient {
        &self.domain
    }

    pub fn codomain(&self) -> &Ambient {
        &self.codomain
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let g = f.map_coeffs(self.coeff);
        if self.halve {
            g.even_part_halved(self.codomain.var())
        } else {
            g.with_var(self.codomain.var())
        }
    }

    /// Canonical preimage: coefficients lifted to `[0, m)`, and `u^k -> t^(2k)`.
    pub fn lift(&self, g: &Poly) -> Poly {
        let f = g.map_coeffs(self.coeff.inverse_section());
        let f = if self.halve {
            f.double_degrees(self.domain.var())
        } else {
            f.with_var(self.domain.var())
        };
        debug_assert!(self.domain.contains(&f), "lift {f} left {}", self.domain);
        f
    }

    pub fn apply_row(&self, row: &[Poly]) -> Vec<Poly> {
        row.iter().map(|f| self.apply(f)).collect()
    }

    pub fn apply_mat(&self, m: &Mat) -> Mat {
        m.map(|f| self.apply(f))
    }

    pub fn apply_cert(&self, cert: &ElemCert) -> ElemCert {
        cert.map(self.codomain.clone(), |f| self.apply(f))
    }

    /// Lifts every generator `e_ij(l)` to `e_ij(lift(l))`; the lifted product
    /// maps onto the original product exactly.
    pub fn lift_cert(&self, cert: &ElemCert) -> Result<ElemCert> {
        if cert.ambient() != &self.codomain {
            return Err(Error::RingMismatch(format!(
                "certificate over {}, map into {}",
                cert.ambient(),
                self.codomain
            )));
        }
        let lifted = cert.map(self.domain.clone(), |f| self.lift(f));
        lifted.validate()?;
        Ok(lifted)
    }
}
