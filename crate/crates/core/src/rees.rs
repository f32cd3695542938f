//! The Rees-like algebra `A = R[at, t^2] = R + at + Rt^2 + at^3 + ...`,
//! realized as the graded subring of `R[t]` whose odd-degree coefficients
//! lie in `a`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{nilpotency_index, nilradical, primary_components, Ideal};
use crate::poly::{Poly, Var};
use crate::ring::{factor_u64, CoeffMap, RingCtx, RingElem, RingTag};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesCtx {
    ring: RingCtx,
    a: Ideal,
}

impl ReesCtx {
    pub fn new(ring: RingCtx, a: Ideal) -> Result<Self> {
        if a.ring() != ring {
            return Err(Error::RingMismatch(format!("ideal over {} for base {ring}", a.ring())));
        }
        Ok(ReesCtx { ring, a })
    }

    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.a
    }

    /// Krull dimension of `A`, always `dim R + 1`.
    pub fn dim(&self) -> usize {
        self.ring.dim() + 1
    }

    /// `a = 0`: `A` is `R[t^2]`.
    pub fn a_is_zero(&self) -> bool {
        self.a.is_zero()
    }

    /// `a = R`: `A` is all of `R[t]`.
    pub fn a_is_unit(&self) -> bool {
        self.a.is_unit()
    }

    /// `a ⊆ nil(R)`, i.e. the kernel of `A -> (R/a)[t^2]` is nilpotent.
    pub fn a_is_nil(&self) -> bool {
        self.a.is_subset_of(&nilradical(self.ring))
    }

    /// `R/a`.
    pub fn quotient_ring(&self) -> RingCtx {
        self.a.quotient_ring()
    }

    /// Every odd-degree coefficient of `f` lies in `a`.
    pub fn contains(&self, f: &Poly) -> bool {
        self.first_violation(f).is_none()
    }

    fn first_violation(&self, f: &Poly) -> Option<usize> {
        if f.ring() != self.ring || f.var() != Var::T {
            return Some(0);
        }
        f.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .step_by(2)
            .find(|(_, c)| !self.a.contains(c))
            .map(|(i, _)| i)
    }

    pub fn elem(&self, f: Poly) -> Result<ReesElem> {
        if f.ring() != self.ring || f.var() != Var::T {
            return Err(Error::RingMismatch(format!(
                "{}[{}] vs {}[t]",
                f.ring(),
                f.var(),
                self.ring
            )));
        }
        if let Some(degree) = self.first_violation(&f) {
            return Err(Error::NotInAlgebra { degree });
        }
        Ok(ReesElem {
            ctx: self.clone(),
            poly: f,
        })
    }

    pub fn parse_elem(&self, text: &str) -> Result<ReesElem> {
        self.elem(Poly::parse(self.ring, Var::T, text)?)
    }

    pub fn zero(&self) -> ReesElem {
        ReesElem {
            ctx: self.clone(),
            poly: Poly::zero(self.ring, Var::T),
        }
    }

    pub fn one(&self) -> ReesElem {
        ReesElem {
            ctx: self.clone(),
            poly: Poly::one(self.ring, Var::T),
        }
    }

    /// Context of `(R/b)[a' t, t^2]` where `a'` is the image of `a`.
    pub fn quotient_ctx(&self, b: &Ideal) -> Result<ReesCtx> {
        if b.ring() != self.ring {
            return Err(Error::RingMismatch(format!(
                "ideal over {} for base {}",
                b.ring(),
                self.ring
            )));
        }
        let to = b.quotient_ring();
        let image = self.a.image(CoeffMap::Reduce { from: self.ring, to })?;
        ReesCtx::new(to, image)
    }

    /// `f ∈ bA`: even coefficients in `b`, odd coefficients in `ab`.
    pub fn extended_ideal_contains(&self, f: &ReesElem, b: &Ideal) -> Result<bool> {
        let ab = self.a.product(b)?;
        Ok(f.poly
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| if i % 2 == 0 { b.contains(c) } else { ab.contains(c) }))
    }

    /// `f/s^k` lies in the localization `S^-1 A`, `S = {s^m}`.
    ///
    /// Decided by saturation: each odd coefficient `c` must satisfy
    /// `c s^m ∈ a` for some `m`, and over `Z` the needed `m` never exceeds
    /// the largest exponent in the factorization of the generator of `a`.
    pub fn localized_membership(&self, f: &Poly, s: &RingElem, _k: u32) -> Result<bool> {
        if f.ring() != self.ring || f.var() != Var::T {
            return Err(Error::RingMismatch(format!(
                "{}[{}] vs {}[t]",
                f.ring(),
                f.var(),
                self.ring
            )));
        }
        if self.ring.is_zero(s) {
            return Err(Error::PreconditionFailed("localizing at zero".into()));
        }
        match self.ring.tag() {
            RingTag::Integers => {
                let g = match self.a.generator() {
                    RingElem::Int(g) => g.clone(),
                    _ => unreachable!(),
                };
                let bound = if g.is_zero() {
                    0
                } else {
                    let g = g
                        .to_u64()
                        .ok_or_else(|| Error::PreconditionFailed(format!("ideal generator {g} exceeds 2^64")))?;
                    factor_u64(g).iter().map(|(_, k)| *k).max().unwrap_or(0)
                };
                let s = match s {
                    RingElem::Int(s) => s.clone(),
                    _ => unreachable!(),
                };
                let mut powers = Vec::new();
                let mut acc = BigInt::from(1);
                for _ in 0..=bound {
                    powers.push(acc.clone());
                    acc *= &s;
                }
                Ok(f.coeffs().iter().skip(1).step_by(2).all(|c| {
                    let RingElem::Int(c) = c else { unreachable!() };
                    powers.iter().any(|p| {
                        let v = c * p;
                        if g.is_zero() {
                            v.is_zero()
                        } else {
                            v.abs().is_multiple_of(&g)
                        }
                    })
                }))
            }
            // s is a unit, so S^-1 A = A.
            RingTag::RationalField | RingTag::PrimeField(_) => Ok(self.contains(f)),
            _ => Err(Error::UnsupportedRing(format!("localization over {}", self.ring))),
        }
    }
}

impl fmt::Display for ReesCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rees{{ring={},a={}}}", self.ring, self.a)
    }
}

/// An element of `A`; the parity invariant holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesElem {
    ctx: ReesCtx,
    poly: Poly,
}

impl ReesElem {
    pub fn ctx(&self) -> &ReesCtx {
        &self.ctx
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    fn closed(&self, poly: Poly, op: &str) -> ReesElem {
        if let Some(d) = self.ctx.first_violation(&poly) {
            panic!("{}", Error::ClosureViolation(format!("{op} left A at degree {d}")));
        }
        ReesElem {
            ctx: self.ctx.clone(),
            poly,
        }
    }

    fn same_ctx(&self, other: &ReesElem) {
        assert_eq!(self.ctx, other.ctx, "elements of different Rees-like algebras mixed");
    }

    pub fn add(&self, other: &ReesElem) -> ReesElem {
        self.same_ctx(other);
        self.closed(self.poly.add(&other.poly), "addition")
    }

    pub fn sub(&self, other: &ReesElem) -> ReesElem {
        self.same_ctx(other);
        self.closed(self.poly.sub(&other.poly), "subtraction")
    }

    pub fn mul(&self, other: &ReesElem) -> ReesElem {
        self.same_ctx(other);
        self.closed(self.poly.mul(&other.poly), "multiplication")
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Image under coefficientwise reduction into `(R/b)[a' t, t^2]`.
    pub fn quotient_image(&self, b: &Ideal) -> Result<ReesElem> {
        let qctx = self.ctx.quotient_ctx(b)?;
        let map = CoeffMap::Reduce {
            from: self.ctx.ring,
            to: qctx.ring,
        };
        let poly = self.poly.map_coeffs(map);
        qctx.elem(poly)
            .map_err(|e| Error::ClosureViolation(format!("quotient image: {e}")))
    }

    /// Nilpotent iff every coefficient is in `nil(R)`.
    pub fn is_nilpotent(&self) -> bool {
        let nil = nilradical(self.ctx.ring);
        self.poly.coeffs().iter().all(|c| nil.contains(c))
    }

    /// `f ∈ b* = bR[t] ∩ A`: every coefficient lies in `b`.
    pub fn star_membership(&self, b: &Ideal) -> bool {
        b.ring() == self.ctx.ring && self.poly.coeffs().iter().all(|c| b.contains(c))
    }
}

impl fmt::Display for ReesElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Upper bound on the nilpotency index of a nilpotent element of degree `deg`.
pub fn nilpotency_bound(ring: RingCtx, deg: usize) -> u32 {
    nilpotency_index(ring) * (deg as u32 + 1)
}

/// Primary components `(p, (p^k))` of `b = (m)` over `Z`; `b* = ∩ q*`.
pub fn star_primary_components(b: &Ideal) -> Result<Vec<(u64, Ideal)>> {
    primary_components(b)
}

/// Membership of `f` in the star ideal of every component.
pub fn star_membership_by_components(f: &ReesElem, b: &Ideal) -> Result<bool> {
    Ok(star_primary_components(b)?.iter().all(|(_, q)| f.star_membership(q)))
}
