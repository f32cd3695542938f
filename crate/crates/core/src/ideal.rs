//! Finitely generated ideals of the base rings, kept in single-generator
//! normal form, together with CRT splitting and nilradicals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{factor_u64, ideal_divisor, mod_inverse, CoeffMap, RingCtx, RingElem, RingTag};

/// An ideal `(g1, ..., gk)` of a base ring.
///
/// Every supported base ring is a principal ideal ring, so the ideal is
/// normalized to one generator: the non-negative gcd over `Z`, the divisor
/// `d | n` (stored as the residue `d mod n`) over `Z/n`, and `0` or `1` over
/// a field. The original generators are kept for display.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingCtx,
    gens: Vec<RingElem>,
    generator: RingElem,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generator == other.generator
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: RingCtx, gens: Vec<RingElem>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| !ring.owns(g)) {
            return Err(Error::RingMismatch(format!("{bad} is not an element of {ring}")));
        }
        let generator = normalize(ring, &gens);
        Ok(Ideal { ring, gens, generator })
    }

    pub fn principal(ring: RingCtx, g: RingElem) -> Result<Self> {
        Self::new(ring, vec![g])
    }

    pub fn zero(ring: RingCtx) -> Self {
        Ideal {
            ring,
            gens: vec![],
            generator: ring.zero(),
        }
    }

    pub fn unit(ring: RingCtx) -> Self {
        Self::new(ring, vec![ring.one()]).unwrap()
    }

    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn gens(&self) -> &[RingElem] {
        &self.gens
    }

    pub fn generator(&self) -> &RingElem {
        &self.generator
    }

    /// The same ideal with the normal generator as its only listed generator.
    pub fn normalized(&self) -> Self {
        Ideal {
            ring: self.ring,
            gens: if self.is_zero() {
                vec![]
            } else {
                vec![self.generator.clone()]
            },
            generator: self.generator.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.generator)
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.generator)
    }

    pub fn contains(&self, x: &RingElem) -> bool {
        debug_assert!(self.ring.owns(x));
        match self.ring.tag() {
            RingTag::Integers => {
                let (RingElem::Int(g), RingElem::Int(x)) = (&self.generator, x) else {
                    unreachable!()
                };
                if g.is_zero() {
                    x.is_zero()
                } else {
                    x.is_multiple_of(g)
                }
            }
            RingTag::ModularRing(n) => {
                let d = ideal_divisor(&self.generator, n);
                let RingElem::Res(x) = x else { unreachable!() };
                x % d == 0
            }
            RingTag::Zero => true,
            RingTag::RationalField | RingTag::PrimeField(_) => self.is_unit() || self.ring.is_zero(x),
        }
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let g = match self.ring.tag() {
            RingTag::Integers => {
                let (a, b) = (self.int_gen(), other.int_gen());
                RingElem::Int(a.lcm(&b))
            }
            RingTag::ModularRing(n) => {
                let a = ideal_divisor(&self.generator, n);
                let b = ideal_divisor(&other.generator, n);
                RingElem::Res(a.lcm(&b) % n)
            }
            RingTag::Zero => self.ring.zero(),
            _ => {
                if self.is_unit() && other.is_unit() {
                    self.ring.one()
                } else {
                    self.ring.zero()
                }
            }
        };
        Ideal::principal(self.ring, g)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ideal::new(self.ring, vec![self.generator.clone(), other.generator.clone()])
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ideal::principal(self.ring, self.ring.mul(&self.generator, &other.generator))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        other.contains(&self.generator)
    }

    /// The quotient ring `R/I`.
    pub fn quotient_ring(&self) -> RingCtx {
        self.ring.quotient_by(&self.generator)
    }

    /// Image of this ideal under a coefficient map (e.g. `a` in `R/b`).
    pub fn image(&self, map: CoeffMap) -> Result<Ideal> {
        if map.domain() != self.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", map.domain(), self.ring)));
        }
        Ideal::new(map.codomain(), self.gens.iter().map(|g| map.apply(g)).collect())
    }

    fn int_gen(&self) -> BigInt {
        match &self.generator {
            RingElem::Int(g) => g.clone(),
            _ => unreachable!(),
        }
    }
}

fn normalize(ring: RingCtx, gens: &[RingElem]) -> RingElem {
    match ring.tag() {
        RingTag::Integers => {
            let g = gens.iter().fold(BigInt::zero(), |acc, x| match x {
                RingElem::Int(v) => acc.gcd(v),
                _ => unreachable!(),
            });
            RingElem::Int(g.abs())
        }
        RingTag::ModularRing(n) => {
            let d = gens.iter().fold(n, |acc, x| match x {
                RingElem::Res(v) => acc.gcd(v),
                _ => unreachable!(),
            });
            RingElem::Res(d % n)
        }
        RingTag::Zero => ring.zero(),
        RingTag::RationalField | RingTag::PrimeField(_) => {
            if gens.iter().any(|g| !ring.is_zero(g)) {
                ring.one()
            } else {
                ring.zero()
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal[")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// The nilradical of a base ring: `(0)` for domains, `(p1 ... pk)` for `Z/n`.
pub fn nilradical(ring: RingCtx) -> Ideal {
    match ring.tag() {
        RingTag::ModularRing(n) => {
            let rad: u64 = factor_u64(n).iter().map(|(p, _)| p).product();
            Ideal::principal(ring, RingElem::Res(rad % n)).unwrap()
        }
        _ => Ideal::zero(ring),
    }
}

/// Smallest `e` with `nil(R)^e = 0` (1 for reduced rings).
pub fn nilpotency_index(ring: RingCtx) -> u32 {
    match ring.tag() {
        RingTag::ModularRing(n) => factor_u64(n).iter().map(|(_, k)| *k).max().unwrap_or(1),
        _ => 1,
    }
}

/// One local factor `Z/p^k` of a CRT decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFactor {
    pub prime: u64,
    pub exponent: u32,
    pub ring: RingCtx,
    idempotent: u64,
}

impl SplitFactor {
    pub fn modulus(&self) -> u64 {
        self.prime.pow(self.exponent)
    }

    pub fn residue_field(&self) -> RingCtx {
        RingCtx::prime_field(self.prime).unwrap()
    }
}

/// `Z/n = Z/p1^k1 x ... x Z/pr^kr`.
#[derive(Clone, Debug)]
pub struct ArtinianSplit {
    ring: RingCtx,
    factors: Vec<SplitFactor>,
}

impl ArtinianSplit {
    pub fn new(ring: RingCtx) -> Result<Self> {
        let RingTag::ModularRing(n) = ring.tag() else {
            return Err(Error::UnsupportedRing(format!("artinian split needs Z/n, got {ring}")));
        };
        let factors = factor_u64(n)
            .into_iter()
            .map(|(p, k)| {
                let q = p.pow(k);
                let cofactor = n / q;
                let inv = mod_inverse(cofactor % q, q).unwrap_or(0);
                let idempotent = ((cofactor as u128 * inv as u128) % n as u128) as u64;
                SplitFactor {
                    prime: p,
                    exponent: k,
                    ring: RingCtx::modular(q).unwrap(),
                    idempotent,
                }
            })
            .collect();
        Ok(ArtinianSplit { ring, factors })
    }

    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn factors(&self) -> &[SplitFactor] {
        &self.factors
    }

    pub fn forward_map(&self, i: usize) -> CoeffMap {
        CoeffMap::Reduce {
            from: self.ring,
            to: self.factors[i].ring,
        }
    }

    pub fn forward(&self, x: &RingElem) -> Vec<RingElem> {
        (0..self.factors.len()).map(|i| self.forward_map(i).apply(x)).collect()
    }

    /// CRT inverse of [`forward`](Self::forward).
    pub fn reconstruct(&self, parts: &[RingElem]) -> RingElem {
        assert_eq!(parts.len(), self.factors.len());
        parts
            .iter()
            .enumerate()
            .fold(self.ring.zero(), |acc, (i, x)| self.ring.add(&acc, &self.embed(i, x)))
    }

    /// The element that is `x` in factor `i` and zero in every other factor.
    pub fn embed(&self, i: usize, x: &RingElem) -> RingElem {
        let RingElem::Res(r) = x else {
            panic!("residue expected")
        };
        let e = RingElem::Res(self.factors[i].idempotent);
        self.ring.mul(&self.ring.from_bigint(&BigInt::from(*r)), &e)
    }
}

/// `(p, p^k)` for each prime power exactly dividing `m`; the primary
/// components of `(m)` in `Z`.
pub fn primary_components(b: &Ideal) -> Result<Vec<(u64, Ideal)>> {
    if b.ring().tag() != RingTag::Integers {
        return Err(Error::UnsupportedRing(format!(
            "primary components need Z, got {}",
            b.ring()
        )));
    }
    let m = b.int_gen();
    let m = m
        .to_u64()
        .filter(|m| *m >= 2)
        .ok_or_else(|| Error::PreconditionFailed(format!("generator {m} must be in [2, 2^64)")))?;
    Ok(factor_u64(m)
        .into_iter()
        .map(|(p, k)| {
            (
                p,
                Ideal::principal(b.ring(), RingCtx::INTEGERS.from_i64(p.pow(k) as i64)).unwrap(),
            )
        })
        .collect())
}
