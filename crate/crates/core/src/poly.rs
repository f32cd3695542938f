//! Dense univariate polynomials over a [`RingCtx`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::nilradical;
use crate::ring::{CoeffMap, RingCtx, RingElem};

/// Polynomial variable. `U` stands for `t^2` and only labels the corner
/// `(R/a)[t^2]`, which is handled as an ordinary polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    T,
    U,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::U => 'u',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Dense polynomial, coefficients indexed by degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingCtx,
    var: Var,
    coeffs: Vec<RingElem>,
}

impl Poly {
    pub fn new(ring: RingCtx, var: Var, coeffs: Vec<RingElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| ring.owns(c)));
        let mut p = Poly { ring, var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(ring: RingCtx, var: Var, coeffs: &[i64]) -> Self {
        Self::new(ring, var, coeffs.iter().map(|c| ring.from_i64(*c)).collect())
    }

    pub fn zero(ring: RingCtx, var: Var) -> Self {
        Poly {
            ring,
            var,
            coeffs: vec![],
        }
    }

    pub fn one(ring: RingCtx, var: Var) -> Self {
        Self::constant(ring, var, ring.one())
    }

    pub fn constant(ring: RingCtx, var: Var, c: RingElem) -> Self {
        Self::new(ring, var, vec![c])
    }

    pub fn monomial(ring: RingCtx, var: Var, c: RingElem, degree: usize) -> Self {
        let mut coeffs = vec![ring.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(ring, var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Coefficient of `var^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Poly::one(self.ring, self.var)
    }

    pub fn leading(&self) -> Option<&RingElem> {
        self.coeffs.last()
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn same_space(&self, other: &Poly) {
        assert!(
            self.ring == other.ring && self.var == other.var,
            "polynomials over {}[{}] and {}[{}] mixed",
            self.ring,
            self.var,
            other.ring,
            other.var
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_space(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.add(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(self.ring, self.var, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(
            self.ring,
            self.var,
            self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_space(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring, self.var);
        }
        let r = self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        Poly::new(r, self.var, out)
    }

    pub fn scale(&self, c: &RingElem) -> Poly {
        Poly::new(
            self.ring,
            self.var,
            self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.ring, self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_space(divisor);
        let lead = divisor.leading().ok_or(Error::NonUnitLeadingCoeff)?;
        let inv = self.ring.inverse(lead).ok_or(Error::NonUnitLeadingCoeff)?;
        let r = self.ring;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![r.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = r.mul(rem.last().unwrap(), &inv);
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = r.sub(&rem[k + i], &r.mul(&c, d));
            }
            quot[k] = c;
            while rem.last().is_some_and(|x| r.is_zero(x)) {
                rem.pop();
            }
        }
        let q = Poly::new(r, self.var, quot);
        let rem = Poly::new(r, self.var, rem);
        assert_eq!(q.mul(divisor).add(&rem), *self, "divmod reconstruction failed");
        Ok((q, rem))
    }

    /// Applies a coefficient homomorphism and trims.
    pub fn map_coeffs(&self, map: CoeffMap) -> Poly {
        assert_eq!(map.domain(), self.ring, "coefficient map applied to the wrong ring");
        Poly::new(
            map.codomain(),
            self.var,
            self.coeffs.iter().map(|c| map.apply(c)).collect(),
        )
    }

    /// `u -> t^2`: coefficient of `u^k` moves to `t^(2k)`.
    pub fn double_degrees(&self, var: Var) -> Poly {
        let r = self.ring;
        let mut coeffs = vec![r.zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Poly::new(r, var, coeffs)
    }

    /// Keeps even-degree coefficients, `t^(2k) -> u^k`.
    pub fn even_part_halved(&self, var: Var) -> Poly {
        Poly::new(self.ring, var, self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Inverse of a unit, if `self` is one. Units of `R[x]` for the supported
    /// rings are `c + nu` with `c` a unit and `nu` nilpotent.
    pub fn unit_inverse(&self) -> Option<Poly> {
        let r = self.ring;
        let c0 = self.coeff(0);
        let c_inv = r.inverse(&c0)?;
        if self.degree().unwrap_or(0) == 0 {
            return Some(Poly::constant(r, self.var, c_inv));
        }
        let nil = nilradical(r);
        if !self.coeffs[1..].iter().all(|c| nil.contains(c)) {
            return None;
        }
        // self = c0 (1 + nu); inverse = c0^-1 * sum (-nu)^k, finite since nu is nilpotent
        let nu = self.scale(&c_inv).sub(&Poly::one(r, self.var));
        let minus_nu = nu.neg();
        let mut term = Poly::one(r, self.var);
        let mut acc = Poly::zero(r, self.var);
        for _ in 0..=64 {
            if term.is_zero() {
                let inv = acc.scale(&c_inv);
                debug_assert!(inv.mul(self).is_one());
                return Some(inv);
            }
            acc = acc.add(&term);
            term = term.mul(&minus_nu);
        }
        None
    }

    /// Parses `2 + 3*t + t^2`, `1 - u`, `3/2*t^3`. The variable must be `var`.
    pub fn parse(ring: RingCtx, var: Var, text: &str) -> Result<Poly> {
        let bad = |msg: &str| Error::Parse(format!("polynomial `{text}`: {msg}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && cur.ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((negative, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        terms.push((negative, cur));

        let mut acc = Poly::zero(ring, var);
        for (neg, term) in terms {
            let (coef, degree) = match term.find(|c: char| c.is_ascii_alphabetic()) {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let (head, tail) = term.split_at(pos);
                    let mut chars = tail.chars();
                    let v = chars.next().unwrap();
                    if v != var.symbol() {
                        return Err(bad(&format!("unexpected variable `{v}`, expected `{var}`")));
                    }
                    let rest = chars.as_str();
                    let degree = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| bad("bad exponent"))?
                    };
                    let head = if head.is_empty() {
                        "1"
                    } else {
                        head.strip_suffix('*')
                            .ok_or_else(|| bad("expected `*` before variable"))?
                    };
                    (head, degree)
                }
            };
            if coef.is_empty() || coef.contains('*') {
                return Err(bad("bad coefficient"));
            }
            let mut c = ring.parse_elem(coef)?;
            if neg {
                c = ring.neg(&c);
            }
            acc = acc.add(&Poly::monomial(ring, var, c, degree));
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let negative = c.is_negative();
            let abs = if negative { self.ring.neg(c) } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit_coeff = abs == self.ring.one();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit_coeff {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(ring: RingCtx, s: &str) -> Poly {
        Poly::parse(ring, Var::T, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let z4 = RingCtx::modular(4).unwrap();
        assert!(p(z4, "1 + 2*t").mul(&p(z4, "1 - 2*t")).is_one());
        let f5 = RingCtx::prime_field(5).unwrap();
        assert_eq!(p(f5, "t + 2").mul(&p(f5, "t + 3")), p(f5, "t^2 + 1"));
        let f = p(RingCtx::integers(), "3 - t + 4*t^5");
        assert_eq!(f.add(&Poly::zero(RingCtx::integers(), Var::T)), f);
    }

    #[test]
    fn division() {
        let f5 = RingCtx::prime_field(5).unwrap();
        let (q, r) = p(f5, "t^2 + 1").divmod(&p(f5, "t + 2")).unwrap();
        assert_eq!(q, p(f5, "t + 3"));
        assert!(r.is_zero());
        let z = RingCtx::integers();
        let f = p(z, "7 + t^3");
        assert_eq!(
            f.divmod(&Poly::one(z, Var::T)).unwrap(),
            (f.clone(), Poly::zero(z, Var::T))
        );
        assert_eq!(p(z, "t^2").divmod(&p(z, "2*t")), Err(Error::NonUnitLeadingCoeff));
        assert_eq!(f.divmod(&Poly::zero(z, Var::T)), Err(Error::NonUnitLeadingCoeff));
    }

    #[test]
    fn coefficient_maps() {
        let z = RingCtx::integers();
        let z3 = RingCtx::modular(3).unwrap();
        let red = CoeffMap::Reduce { from: z, to: z3 };
        let img = p(z, "2 + 3*t + t^2").map_coeffs(red);
        assert_eq!(img, p(z3, "2 + t^2"));
        assert!(Poly::zero(z, Var::T).map_coeffs(red).is_zero());
        assert_eq!(img.map_coeffs(red.inverse_section()), p(z, "2 + t^2"));
    }

    #[test]
    fn degree_doubling() {
        let z = RingCtx::integers();
        let g = Poly::parse(z, Var::U, "2 + u").unwrap();
        assert_eq!(g.double_degrees(Var::T), p(z, "2 + t^2"));
        assert_eq!(p(z, "2 + 5*t + t^2").even_part_halved(Var::U), g);
    }

    #[test]
    fn unit_inverses() {
        let z4 = RingCtx::modular(4).unwrap();
        assert_eq!(p(z4, "1 + 2*t").unit_inverse().unwrap(), p(z4, "1 + 2*t"));
        assert_eq!(p(z4, "3").unit_inverse().unwrap(), p(z4, "3"));
        assert!(p(z4, "1 + t").unit_inverse().is_none());
        assert!(p(z4, "2").unit_inverse().is_none());
        let z8 = RingCtx::modular(8).unwrap();
        let u = p(z8, "3 + 2*t + 4*t^3");
        assert!(u.mul(&u.unit_inverse().unwrap()).is_one());
        assert!(p(RingCtx::integers(), "1 + t").unit_inverse().is_none());
    }

    #[test]
    fn text_round_trip() {
        let z = RingCtx::integers();
        for s in ["2 + 3*t + t^2", "-t", "0", "1 - 2*t^3", "-5 + t"] {
            assert_eq!(p(z, s).to_string(), s);
        }
        let q = RingCtx::rationals();
        assert_eq!(p(q, "3/2*t - 1/3").to_string(), "-1/3 + 3/2*t");
        assert_eq!(Poly::parse(z, Var::U, "1 + u").unwrap().to_string(), "1 + u");
        assert!(Poly::parse(z, Var::T, "1 + u").is_err());
        assert!(Poly::parse(z, Var::T, "1 +").is_err());
        assert!(Poly::parse(z, Var::T, "2t").is_err());
        assert_eq!(p(z, "t + t").to_string(), "2*t");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn degree_is_additive_over_fields(a in prop::collection::vec(0u64..7, 1..8), b in prop::collection::vec(0u64..7, 1..8)) {
            let f7 = RingCtx::prime_field(7).unwrap();
            let f = Poly::new(f7, Var::T, a.into_iter().map(RingElem::Res).collect());
            let g = Poly::new(f7, Var::T, b.into_iter().map(RingElem::Res).collect());
            if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
                prop_assert_eq!(f.mul(&g).degree(), Some(df + dg));
            }
        }

        #[test]
        fn divmod_reconstructs(a in prop::collection::vec(-30i64..30, 0..10), b in prop::collection::vec(-30i64..30, 1..5)) {
            let f11 = RingCtx::prime_field(11).unwrap();
            let f = Poly::from_i64s(f11, Var::T, &a);
            let g = Poly::from_i64s(f11, Var::T, &b);
            if !g.is_zero() {
                let (q, r) = f.divmod(&g).unwrap();
                prop_assert_eq!(q.mul(&g).add(&r), f);
                prop_assert!(r.degree() < g.degree());
            }
        }

        #[test]
        fn reduce_after_lift_is_identity(a in prop::collection::vec(0u64..9, 0..10)) {
            let z9 = RingCtx::modular(9).unwrap();
            let f = Poly::new(z9, Var::U, a.into_iter().map(RingElem::Res).collect());
            let lift = CoeffMap::Lift { from: z9, to: RingCtx::integers() };
            prop_assert_eq!(f.map_coeffs(lift).map_coeffs(lift.inverse_section()), f);
        }

        #[test]
        fn print_parse_round_trip(a in prop::collection::vec(-20i64..20, 0..8)) {
            let z = RingCtx::integers();
            let f = Poly::from_i64s(z, Var::T, &a);
            prop_assert_eq!(Poly::parse(z, Var::T, &f.to_string()).unwrap(), f);
        }
    }
}
