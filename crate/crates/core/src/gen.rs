//! Seeded random elements, unimodular rows and elementary products.

use num_bigint::BigInt;
use rand::Rng;

use crate::algebra::Ambient;
use crate::cert::{ElemCert, ElemOp};
use crate::ideal::Ideal;
use crate::patching::UmRow;
use crate::poly::{Poly, Var};
use crate::rees::ReesCtx;
use crate::ring::{RingCtx, RingElem, RingTag};

/// Bound on integer coefficients drawn over `Z` and `Q`.
pub const COEFF_BOUND: i64 = 9;

pub fn ring_elem<G: Rng + ?Sized>(ring: RingCtx, rng: &mut G) -> RingElem {
    match ring.tag() {
        RingTag::Integers => ring.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)),
        RingTag::RationalField => {
            let num = BigInt::from(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND));
            let den = BigInt::from(rng.gen_range(1..=4));
            ring.from_fraction(&num, &den).unwrap()
        }
        RingTag::PrimeField(m) | RingTag::ModularRing(m) => RingElem::Res(rng.gen_range(0..m)),
        RingTag::Zero => ring.zero(),
    }
}

pub fn ideal_elem<G: Rng + ?Sized>(ideal: &Ideal, rng: &mut G) -> RingElem {
    let ring = ideal.ring();
    ring.mul(ideal.generator(), &ring_elem(ring, rng))
}

pub fn poly<G: Rng + ?Sized>(ring: RingCtx, var: Var, max_deg: usize, rng: &mut G) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new(ring, var, (0..=deg).map(|_| ring_elem(ring, rng)).collect())
}

/// Random element of `A`, odd coefficients drawn from `a`.
pub fn rees_poly<G: Rng + ?Sized>(ctx: &ReesCtx, max_deg: usize, rng: &mut G) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|k| {
            if k % 2 == 0 {
                ring_elem(ctx.ring(), rng)
            } else {
                ideal_elem(ctx.ideal(), rng)
            }
        })
        .collect();
    Poly::new(ctx.ring(), Var::T, coeffs)
}

pub fn elem<G: Rng + ?Sized>(amb: &Ambient, max_deg: usize, rng: &mut G) -> Poly {
    match amb {
        Ambient::Poly { ring, var } => poly(*ring, *var, max_deg, rng),
        Ambient::Rees(ctx) => rees_poly(ctx, max_deg, rng),
    }
}

/// Random ideal of `ring`: `(m)` with `0 <= m <= 30` over `Z`, a divisor of
/// `n` over `Z/n`, `0` or `1` over a field.
pub fn ideal<G: Rng + ?Sized>(ring: RingCtx, rng: &mut G) -> Ideal {
    let g = match ring.tag() {
        RingTag::Integers => ring.from_i64(rng.gen_range(0..=30)),
        RingTag::ModularRing(n) => {
            let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            ring.from_i64(divisors[rng.gen_range(0..divisors.len())] as i64)
        }
        _ => ring.from_i64(rng.gen_range(0..=1)),
    };
    Ideal::principal(ring, g).unwrap()
}

pub fn op<G: Rng + ?Sized>(amb: &Ambient, n: usize, max_deg: usize, rng: &mut G) -> ElemOp {
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    ElemOp::new(i, j, elem(amb, max_deg, rng))
}

/// Product of `len` random elementary generators.
pub fn elementary_product<G: Rng + ?Sized>(
    amb: &Ambient,
    n: usize,
    len: usize,
    max_deg: usize,
    rng: &mut G,
) -> ElemCert {
    let mut cert = ElemCert::empty(amb.clone(), n);
    for _ in 0..len {
        let o = op(amb, n, max_deg, rng);
        cert.push(o.i, o.j, o.lambda);
    }
    cert
}

/// `e1` pushed through 5 to 30 random ops of degree at most 3, with the dual
/// `e1` transported alongside.
pub fn unimodular_row<G: Rng + ?Sized>(amb: &Ambient, n: usize, rng: &mut G) -> UmRow {
    let mut v = amb.unit_vector(n, 0);
    let mut w = amb.unit_vector(n, 0);
    for _ in 0..rng.gen_range(5..=30) {
        let o = op(amb, n, 3, rng);
        o.act_on_row(&mut v);
        w[o.i] = w[o.i].sub(&o.lambda.mul(&w[o.j]));
    }
    UmRow::new(amb.clone(), v, w).expect("transported dual pairs to 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dot;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rows_are_unimodular_and_stay_in_a() {
        let z = RingCtx::integers();
        let ctx = ReesCtx::new(z, Ideal::principal(z, z.from_i64(6)).unwrap()).unwrap();
        let amb = Ambient::Rees(ctx.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..5 {
            let row = unimodular_row(&amb, n, &mut rng);
            assert!(dot(row.entries(), row.dual()).is_one());
            assert!(row.entries().iter().chain(row.dual()).all(|f| ctx.contains(f)));
        }
    }

    #[test]
    fn same_seed_same_draws() {
        let amb = Ambient::poly(RingCtx::rationals(), Var::T);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| elem(&amb, 4, &mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draw(9), draw(9));
        assert_ne!(draw(9), draw(10));
    }
}
