//! Exact base rings: the rationals, prime fields, the integers and the
//! residue rings `Z/n`, plus the zero ring that appears as `R/(1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which ring a [`RingCtx`] denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    RationalField,
    PrimeField(u64),
    Integers,
    ModularRing(u64),
    /// `R/(1)`. Only ever produced as a quotient.
    Zero,
}

/// A base ring together with its capability metadata.
///
/// `dim`, `is_field` and `is_artinian` are functions of the tag, so the
/// invariants between them cannot be broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    tag: RingTag,
}

/// A canonical element of some [`RingCtx`]. Which variant is used is fixed by
/// the ring: `Int` for `Z`, `Rat` for `Q`, `Res` for `F_p`, `Z/n` and the
/// zero ring (residue in `[0, n)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElem {
    Int(BigInt),
    Rat(BigRational),
    Res(u64),
}

impl RingCtx {
    pub const RATIONALS: RingCtx = RingCtx {
        tag: RingTag::RationalField,
    };
    pub const INTEGERS: RingCtx = RingCtx { tag: RingTag::Integers };
    pub const ZERO: RingCtx = RingCtx { tag: RingTag::Zero };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn integers() -> Self {
        Self::INTEGERS
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(RingCtx {
            tag: RingTag::PrimeField(p),
        })
    }

    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("modulus {n} must be at least 2")));
        }
        Ok(RingCtx {
            tag: RingTag::ModularRing(n),
        })
    }

    /// `Z/n` for any `n >= 1`, with `Z/1` being the zero ring.
    pub(crate) fn residues(n: u64) -> Self {
        match n {
            0 => Self::INTEGERS,
            1 => Self::ZERO,
            n => RingCtx {
                tag: RingTag::ModularRing(n),
            },
        }
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    /// Krull dimension, stored as metadata: 1 for `Z`, 0 otherwise.
    pub fn dim(&self) -> usize {
        match self.tag {
            RingTag::Integers => 1,
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.tag, RingTag::RationalField | RingTag::PrimeField(_))
    }

    pub fn is_artinian(&self) -> bool {
        !matches!(self.tag, RingTag::Integers)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.tag == RingTag::Zero
    }

    /// Modulus of a residue ring (`p`, `n`, or 1 for the zero ring).
    pub fn modulus(&self) -> Option<u64> {
        match self.tag {
            RingTag::PrimeField(p) => Some(p),
            RingTag::ModularRing(n) => Some(n),
            RingTag::Zero => Some(1),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElem {
        match self.tag {
            RingTag::RationalField => RingElem::Rat(BigRational::zero()),
            RingTag::Integers => RingElem::Int(BigInt::zero()),
            _ => RingElem::Res(0),
        }
    }

    pub fn one(&self) -> RingElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> RingElem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElem {
        match self.tag {
            RingTag::RationalField => RingElem::Rat(BigRational::from_integer(v.clone())),
            RingTag::Integers => RingElem::Int(v.clone()),
            _ => {
                let m = BigInt::from(self.modulus().unwrap());
                RingElem::Res(v.mod_floor(&m).to_u64().unwrap())
            }
        }
    }

    /// Canonical element for the fraction `num/den`.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<RingElem> {
        if den.is_zero() {
            return Err(Error::MalformedElement(format!("{num}/{den}: zero denominator")));
        }
        match self.tag {
            RingTag::RationalField => Ok(RingElem::Rat(BigRational::new(num.clone(), den.clone()))),
            RingTag::Integers => {
                let (q, r) = num.div_rem(den);
                if !r.is_zero() {
                    return Err(Error::MalformedElement(format!("{num}/{den} is not an integer")));
                }
                Ok(RingElem::Int(q))
            }
            _ => {
                let d = self.from_bigint(den);
                let inv = self
                    .inverse(&d)
                    .ok_or_else(|| Error::MalformedElement(format!("{den} is not invertible in {self}")))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
        }
    }

    /// Parses a decimal integer or `a/b` fraction into canonical form.
    pub fn parse_elem(&self, raw: &str) -> Result<RingElem> {
        let raw = raw.trim();
        let bad = || Error::MalformedElement(raw.to_string());
        match raw.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                self.from_fraction(&n, &d)
            }
            None => Ok(self.from_bigint(&BigInt::from_str(raw).map_err(|_| bad())?)),
        }
    }

    /// Checks that `x` is a canonical element of this ring.
    pub fn owns(&self, x: &RingElem) -> bool {
        match (self.tag, x) {
            (RingTag::RationalField, RingElem::Rat(_)) => true,
            (RingTag::Integers, RingElem::Int(_)) => true,
            (_, RingElem::Res(r)) => self.modulus().is_some_and(|m| *r < m),
            _ => false,
        }
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x + y),
            (RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x + y),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap() as u128;
                RingElem::Res(((*x as u128 + *y as u128) % m) as u64)
            }
            _ => panic!("mixed ring elements in {self}"),
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) => RingElem::Int(-x),
            RingElem::Rat(x) => RingElem::Rat(-x),
            RingElem::Res(x) => {
                let m = self.modulus().unwrap();
                RingElem::Res(if *x == 0 { 0 } else { m - x })
            }
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x * y),
            (RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x * y),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap() as u128;
                RingElem::Res(((*x as u128 * *y as u128) % m) as u64)
            }
            _ => panic!("mixed ring elements in {self}"),
        }
    }

    pub fn pow(&self, a: &RingElem, mut e: u64) -> RingElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        match a {
            RingElem::Int(x) => x.is_zero(),
            RingElem::Rat(x) => x.is_zero(),
            RingElem::Res(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &RingElem) -> bool {
        *a == self.one()
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inverse(&self, a: &RingElem) -> Option<RingElem> {
        match a {
            RingElem::Int(x) => {
                if x.abs().is_one() {
                    Some(RingElem::Int(x.clone()))
                } else {
                    None
                }
            }
            RingElem::Rat(x) => (!x.is_zero()).then(|| RingElem::Rat(x.recip())),
            RingElem::Res(x) => {
                let m = self.modulus().unwrap();
                if m == 1 {
                    return Some(RingElem::Res(0));
                }
                mod_inverse(*x, m).map(RingElem::Res)
            }
        }
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        self.inverse(a).is_some()
    }

    /// Integer representative: the value over `Z`, the residue in `[0, n)`
    /// otherwise. `None` for non-integral rationals.
    pub fn lift_to_int(&self, a: &RingElem) -> Option<BigInt> {
        match a {
            RingElem::Int(x) => Some(x.clone()),
            RingElem::Rat(x) => x.is_integer().then(|| x.to_integer()),
            RingElem::Res(x) => Some(BigInt::from(*x)),
        }
    }

    /// Quotient `R/(g)` for a normal generator `g` of an ideal of this ring.
    pub(crate) fn quotient_by(&self, g: &RingElem) -> RingCtx {
        match self.tag {
            RingTag::Integers => {
                let g = self.lift_to_int(g).unwrap().abs();
                match g.to_u64() {
                    Some(v) => RingCtx::residues(v),
                    None => panic!("quotient modulus {g} exceeds the supported range"),
                }
            }
            RingTag::ModularRing(n) => {
                let d = ideal_divisor(g, n);
                if d == n {
                    *self
                } else {
                    RingCtx::residues(d)
                }
            }
            RingTag::RationalField | RingTag::PrimeField(_) => {
                if self.is_zero(g) {
                    *self
                } else {
                    RingCtx::ZERO
                }
            }
            RingTag::Zero => *self,
        }
    }
}

/// For a residue `g` of `Z/n`, the divisor `d | n` with `(g) = (d)`.
pub(crate) fn ideal_divisor(g: &RingElem, n: u64) -> u64 {
    match g {
        RingElem::Res(0) => n,
        RingElem::Res(r) => r.gcd(&n),
        _ => unreachable!("residue expected"),
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            RingTag::RationalField => write!(f, "Q"),
            RingTag::PrimeField(p) => write!(f, "Fp:{p}"),
            RingTag::Integers => write!(f, "Z"),
            RingTag::ModularRing(n) => write!(f, "Zn:{n}"),
            RingTag::Zero => write!(f, "Zn:1"),
        }
    }
}

impl FromStr for RingCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad ring descriptor `{s}`")))
        };
        match s {
            "Q" => Ok(RingCtx::RATIONALS),
            "Z" => Ok(RingCtx::INTEGERS),
            _ => {
                if let Some(p) = s.strip_prefix("Fp:") {
                    RingCtx::prime_field(num(p)?)
                } else if let Some(n) = s.strip_prefix("Zn:") {
                    match num(n)? {
                        1 => Ok(RingCtx::ZERO),
                        n => RingCtx::modular(n),
                    }
                } else {
                    Err(Error::Parse(format!("bad ring descriptor `{s}`")))
                }
            }
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Int(x) => write!(f, "{x}"),
            RingElem::Rat(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            RingElem::Res(x) => write!(f, "{x}"),
        }
    }
}

impl RingElem {
    /// True for negative integers and rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            RingElem::Int(x) => x.is_negative(),
            RingElem::Rat(x) => x.is_negative(),
            RingElem::Res(_) => false,
        }
    }
}

/// A registered coefficient homomorphism between base rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffMap {
    /// The natural surjection `from -> to` (reduction modulo an ideal).
    Reduce { from: RingCtx, to: RingCtx },
    /// Canonical set-theoretic section of a reduction: residues lift to
    /// their representative in `[0, m)`.
    Lift { from: RingCtx, to: RingCtx },
}

impl CoeffMap {
    pub fn domain(&self) -> RingCtx {
        match self {
            CoeffMap::Reduce { from, .. } | CoeffMap::Lift { from, .. } => *from,
        }
    }

    pub fn codomain(&self) -> RingCtx {
        match self {
            CoeffMap::Reduce { to, .. } | CoeffMap::Lift { to, .. } => *to,
        }
    }

    pub fn inverse_section(&self) -> CoeffMap {
        match *self {
            CoeffMap::Reduce { from, to } => CoeffMap::Lift { from: to, to: from },
            CoeffMap::Lift { from, to } => CoeffMap::Reduce { from: to, to: from },
        }
    }

    pub fn apply(&self, x: &RingElem) -> RingElem {
        match *self {
            CoeffMap::Reduce { from, to } => {
                if from == to {
                    return x.clone();
                }
                if to.is_zero_ring() {
                    return to.zero();
                }
                match x {
                    RingElem::Int(v) => to.from_bigint(v),
                    RingElem::Res(r) => to.from_bigint(&BigInt::from(*r)),
                    RingElem::Rat(_) => panic!("no reduction out of Q except to itself or zero"),
                }
            }
            CoeffMap::Lift { from, to } => {
                if from == to {
                    return x.clone();
                }
                if from.is_zero_ring() {
                    return to.zero();
                }
                match x {
                    RingElem::Res(r) => to.from_bigint(&BigInt::from(*r)),
                    _ => panic!("lift expects a residue"),
                }
            }
        }
    }
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, ascending primes.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        let z4 = RingCtx::modular(4).unwrap();
        assert_eq!(z4.parse_elem("7").unwrap(), RingElem::Res(3));
        assert_eq!(z4.parse_elem("-1").unwrap(), RingElem::Res(3));
        let q = RingCtx::rationals();
        assert_eq!(q.parse_elem("6/4").unwrap().to_string(), "3/2");
        assert_eq!(
            RingCtx::integers().parse_elem("0").unwrap(),
            RingElem::Int(BigInt::zero())
        );
    }

    #[test]
    fn malformed_elements() {
        assert!(matches!(
            RingCtx::rationals().parse_elem("1/0"),
            Err(Error::MalformedElement(_))
        ));
        assert!(RingCtx::integers().parse_elem("abc").is_err());
        assert!(RingCtx::integers().parse_elem("3/2").is_err());
        assert!(RingCtx::modular(4).unwrap().parse_elem("1/2").is_err());
        assert_eq!(
            RingCtx::modular(5).unwrap().parse_elem("1/2").unwrap(),
            RingElem::Res(3)
        );
    }

    #[test]
    fn ring_constructors_validate() {
        assert!(RingCtx::prime_field(6).is_err());
        assert!(RingCtx::modular(1).is_err());
        let z = RingCtx::integers();
        assert_eq!(z.dim(), 1);
        assert!(!z.is_field());
        assert!(RingCtx::prime_field(5).unwrap().is_field());
        assert!(!RingCtx::modular(5).unwrap().is_field());
        assert_eq!(RingCtx::modular(12).unwrap().dim(), 0);
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Q", "Z", "Fp:5", "Zn:12", "Zn:1"] {
            assert_eq!(s.parse::<RingCtx>().unwrap().to_string(), s);
        }
        assert!("Fp:4".parse::<RingCtx>().is_err());
        assert!("R".parse::<RingCtx>().is_err());
    }

    #[test]
    fn inverses() {
        let z12 = RingCtx::modular(12).unwrap();
        assert_eq!(z12.inverse(&RingElem::Res(5)), Some(RingElem::Res(5)));
        assert_eq!(z12.inverse(&RingElem::Res(6)), None);
        assert_eq!(
            RingCtx::integers().inverse(&RingElem::Int((-1).into())),
            Some(RingElem::Int((-1).into()))
        );
    }

    #[test]
    fn factorization() {
        assert_eq!(factor_u64(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
        assert_eq!(factor_u64(1), vec![]);
    }

    fn rings() -> Vec<RingCtx> {
        vec![
            RingCtx::integers(),
            RingCtx::rationals(),
            RingCtx::prime_field(7).unwrap(),
            RingCtx::modular(12).unwrap(),
            RingCtx::modular(64).unwrap(),
        ]
    }

    fn elem(ring: RingCtx, a: i64, b: i64) -> RingElem {
        match ring.tag() {
            RingTag::RationalField => ring.from_fraction(&a.into(), &(b.rem_euclid(9) + 1).into()).unwrap(),
            _ => ring.from_i64(a),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(idx in 0usize..5, a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 0i64..9) {
            let r = rings()[idx];
            let (x, y, z) = (elem(r, a, d), elem(r, b, d + 1), elem(r, c, d + 2));
            prop_assert_eq!(r.add(&r.add(&x, &y), &z), r.add(&x, &r.add(&y, &z)));
            prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
            prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
            prop_assert_eq!(r.add(&x, &r.neg(&x)), r.zero());
            prop_assert_eq!(r.mul(&x, &r.one()), x.clone());
            prop_assert!(r.owns(&r.mul(&x, &y)));
        }
    }
}
