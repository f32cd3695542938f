//! Pullback patching across the conductor square: elements, units,
//! unimodular rows and invertible matrices, plus lifting of elementary
//! certificates and the factorization of `1 + nilpotent` matrices.

use std::fmt;

use crate::algebra::{dot, format_row, Ambient, Mat};
use crate::cert::{ElemCert, ElemOp};
use crate::error::{Error, Result};
use crate::ideal::nilradical;
use crate::poly::Poly;
use crate::rees::ReesElem;
use crate::square::{ConductorSquare, Surjection};

/// How strongly a matrix (or reduction) over `A` has been certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertLevel {
    Failed,
    /// Certificates over both corners plus a patched invertible matrix.
    CornerCertified,
    /// An elementary certificate over `A` itself.
    FullyElementary,
}

impl fmt::Display for CertLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertLevel::Failed => "Failed",
            CertLevel::CornerCertified => "CornerCertified",
            CertLevel::FullyElementary => "FullyElementary",
        };
        write!(f, "{s}")
    }
}

/// First degree where `eta2(f)` and `i2(g)` differ.
fn first_mismatch(sq: &ConductorSquare, f: &Poly, g: &Poly) -> Option<usize> {
    let left = sq.eta2(f);
    let right = sq.i2(g);
    if left == right {
        return None;
    }
    let top = left.coeffs().len().max(right.coeffs().len());
    (0..top).find(|&k| left.coeff(k) != right.coeff(k))
}

fn check_operands(sq: &ConductorSquare, f: &Poly, g: &Poly) -> Result<()> {
    sq.corner1().check(f)?;
    sq.corner2().check(g)
}

/// The unique `h ∈ A` with `i1(h) = f` and `eta1(h) = g`.
pub fn patch_element(sq: &ConductorSquare, f: &Poly, g: &Poly) -> Result<ReesElem> {
    check_operands(sq, f, g)?;
    if let Some(degree) = first_mismatch(sq, f, g) {
        return Err(Error::ImageMismatch { index: None, degree });
    }
    let h = sq
        .ctx()
        .elem(f.clone())
        .map_err(|e| Error::ClosureViolation(format!("patched element: {e}")))?;
    debug_assert_eq!(&sq.eta1(h.poly()), g);
    Ok(h)
}

/// Patches a pair of units with their inverses into a unit of `A` and its
/// inverse.
pub fn patch_unit(sq: &ConductorSquare, u1: (&Poly, &Poly), u2: (&Poly, &Poly)) -> Result<(ReesElem, ReesElem)> {
    for (u, inv) in [u1, u2] {
        if !u.mul(inv).is_one() {
            return Err(Error::NotAUnit(format!("({u}) * ({inv}) != 1")));
        }
    }
    let c = patch_element(sq, u1.0, u2.0)?;
    let c_inv = patch_element(sq, u1.1, u2.1)?;
    if !c.mul(&c_inv).poly().is_one() {
        return Err(Error::NotAUnit(format!("patched ({c}) * ({c_inv}) != 1")));
    }
    Ok((c, c_inv))
}

/// A unimodular row with a witness `dual`, `sum entries_i dual_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmRow {
    ambient: Ambient,
    entries: Vec<Poly>,
    dual: Vec<Poly>,
}

impl UmRow {
    pub fn new(ambient: Ambient, entries: Vec<Poly>, dual: Vec<Poly>) -> Result<Self> {
        if entries.len() != dual.len() {
            return Err(Error::LengthMismatch(entries.len(), dual.len()));
        }
        if entries.is_empty() {
            return Err(Error::PreconditionFailed("empty row".into()));
        }
        for f in entries.iter().chain(&dual) {
            ambient.check(f)?;
        }
        if !dot(&entries, &dual).is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(UmRow { ambient, entries, dual })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn dual(&self) -> &[Poly] {
        &self.dual
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for UmRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "row {}", format_row(&self.entries))?;
        writeln!(f, "dual {}", format_row(&self.dual))
    }
}

/// Patches unimodular rows over `R[t]` and `(R/a)[u]` into one over `A`,
/// patching the duals componentwise as well.
pub fn patch_row(sq: &ConductorSquare, r1: &UmRow, r2: &UmRow) -> Result<UmRow> {
    if r1.ambient() != &sq.corner1() || r2.ambient() != &sq.corner2() {
        return Err(Error::RingMismatch(format!(
            "rows over {} and {}",
            r1.ambient(),
            r2.ambient()
        )));
    }
    if r1.len() != r2.len() {
        return Err(Error::LengthMismatch(r1.len(), r2.len()));
    }
    let mut entries = Vec::with_capacity(r1.len());
    for (k, (f, g)) in r1.entries().iter().zip(r2.entries()).enumerate() {
        if let Some(degree) = first_mismatch(sq, f, g) {
            return Err(Error::ImageMismatch { index: Some(k), degree });
        }
        entries.push(patch_element(sq, f, g)?.into_poly());
    }
    let mut dual = Vec::with_capacity(r1.len());
    for (k, (f, g)) in r1.dual().iter().zip(r2.dual()).enumerate() {
        if first_mismatch(sq, f, g).is_some() {
            return Err(Error::DualMismatch(format!(
                "dual entries {} have different images",
                k + 1
            )));
        }
        dual.push(patch_element(sq, f, g)?.into_poly());
    }
    if !dot(&entries, &dual).is_one() {
        return Err(Error::DualMismatch("patched dual does not pair to 1".into()));
    }
    UmRow::new(sq.apex(), entries, dual)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatchMode {
    Gl,
    Sl,
    E,
}

/// An invertible matrix over one corner with its inverse and, for `E`
/// mode, an elementary certificate.
#[derive(Clone, Debug)]
pub struct CornerMatrix {
    pub mat: Mat,
    pub inverse: Mat,
    pub cert: Option<ElemCert>,
}

impl CornerMatrix {
    pub fn from_cert(cert: ElemCert) -> Self {
        CornerMatrix {
            mat: cert.replay(),
            inverse: cert.inverse().replay(),
            cert: Some(cert),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PatchedMatrix {
    pub mat: Mat,
    pub inverse: Mat,
    /// Certification outcome, only in `E` mode.
    pub level: Option<CertLevel>,
    pub cert: Option<ElemCert>,
}

fn patch_entries(sq: &ConductorSquare, m1: &Mat, m2: &Mat) -> Result<Mat> {
    let n = m1.ncols();
    let mut rows = Vec::with_capacity(m1.nrows());
    for i in 0..m1.nrows() {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let (f, g) = (m1.get(i, j), m2.get(i, j));
            check_operands(sq, f, g)?;
            if let Some(degree) = first_mismatch(sq, f, g) {
                return Err(Error::ImageMismatch {
                    index: Some(i * n + j),
                    degree,
                });
            }
            row.push(patch_element(sq, f, g)?.into_poly());
        }
        rows.push(row);
    }
    Mat::from_rows(rows)
}

pub fn patch_matrix(
    sq: &ConductorSquare,
    c1: &CornerMatrix,
    c2: &CornerMatrix,
    mode: PatchMode,
) -> Result<PatchedMatrix> {
    let n = c1.mat.nrows();
    for m in [&c1.mat, &c1.inverse, &c2.mat, &c2.inverse] {
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::LengthMismatch(m.nrows(), n));
        }
    }
    if !c1.mat.mul(&c1.inverse).is_identity() || !c2.mat.mul(&c2.inverse).is_identity() {
        return Err(Error::NotAUnit("supplied matrix inverse does not verify".into()));
    }
    if mode == PatchMode::Sl {
        for (m, name) in [(&c1.mat, "R[t]"), (&c2.mat, "(R/a)[u]")] {
            let d = m.det();
            if !d.is_one() {
                return Err(Error::DeterminantMismatch(format!("det over {name} is {d}")));
            }
        }
    }
    let mat = patch_entries(sq, &c1.mat, &c2.mat)?;
    let inverse = patch_entries(sq, &c1.inverse, &c2.inverse)?;
    if !mat.mul(&inverse).is_identity() {
        return Err(Error::ClosureViolation(
            "patched matrix times patched inverse is not I".into(),
        ));
    }
    if mode == PatchMode::Sl && !mat.det().is_one() {
        return Err(Error::ClosureViolation("patched matrix lost determinant 1".into()));
    }
    let (level, cert) = if mode == PatchMode::E {
        let (Some(cert1), Some(cert2)) = (&c1.cert, &c2.cert) else {
            return Err(Error::PreconditionFailed(
                "E mode needs certificates on both corners".into(),
            ));
        };
        if cert1.replay() != c1.mat || cert2.replay() != c2.mat {
            return Err(Error::PreconditionFailed(
                "corner certificate does not replay to its matrix".into(),
            ));
        }
        let (level, cert) = certify_elementary(sq, &mat, cert1, cert2)?;
        (Some(level), cert)
    } else {
        (None, None)
    };
    Ok(PatchedMatrix {
        mat,
        inverse,
        level,
        cert,
    })
}

/// Tries to turn corner certificates of a patched matrix `m` into an
/// elementary certificate over `A`.
///
/// When `a ⊆ nil(R)`, lift the second corner certificate along `eta1`; the
/// remaining discrepancy is `1 + nilpotent` with determinant 1. Otherwise
/// the first corner certificate is used as is if all its multipliers lie in
/// `A` (always the case for `a = R`), and the matrix stays corner-certified
/// if they do not.
pub fn certify_elementary(
    sq: &ConductorSquare,
    m: &Mat,
    cert1: &ElemCert,
    cert2: &ElemCert,
) -> Result<(CertLevel, Option<ElemCert>)> {
    let ctx = sq.ctx();
    let cert = if ctx.a_is_nil() && !ctx.a_is_unit() {
        let lifted = lift_e_certificate(cert2, &sq.eta1_map())?;
        let discrepancy = lifted.inverse().replay().mul(m);
        lifted.then(&factor_one_plus_nilpotent(&sq.apex(), &discrepancy)?)
    } else if let Ok(direct) = cert1.rehome(sq.apex()) {
        direct
    } else {
        return Ok((CertLevel::CornerCertified, None));
    };
    if &cert.replay() != m {
        return Err(Error::ClosureViolation(
            "certificate over A does not replay to the patched matrix".into(),
        ));
    }
    Ok((CertLevel::FullyElementary, Some(cert)))
}

/// Lifts a certificate over the codomain of `along` to its domain and checks
/// that the lifted product maps back onto the original product.
pub fn lift_e_certificate(cert: &ElemCert, along: &Surjection) -> Result<ElemCert> {
    let lifted = along.lift_cert(cert)?;
    if along.apply_mat(&lifted.replay()) != cert.replay() {
        return Err(Error::ClosureViolation(
            "lifted certificate does not map onto the original".into(),
        ));
    }
    Ok(lifted)
}

/// Certificate for `diag(u_1, ..., u_n)` with `prod u_i = 1`, as a product of
/// Whitehead factors `diag(v, v^-1)` on adjacent pairs.
pub fn diagonal_certificate(amb: &Ambient, diag: &[Poly]) -> Result<ElemCert> {
    let n = diag.len();
    let mut cert = ElemCert::empty(amb.clone(), n);
    let mut v = amb.one();
    for (k, d) in diag.iter().enumerate().take(n.saturating_sub(1)) {
        v = v.mul(d);
        if v.is_one() {
            continue;
        }
        let v_inv = amb
            .unit_inverse(&v)
            .ok_or_else(|| Error::PreconditionFailed(format!("diagonal product {v} is not a unit")))?;
        let one = amb.one();
        // diag(v, v^-1) = e12(v) e21(-v^-1) e12(v - 1) e21(1) e12(-1)
        cert.push(k, k + 1, v.clone());
        cert.push(k + 1, k, v_inv.neg());
        cert.push(k, k + 1, v.sub(&one));
        cert.push(k + 1, k, one.clone());
        cert.push(k, k + 1, one.neg());
    }
    Ok(cert)
}

/// Elementary certificate for a matrix `D ≡ I` modulo nilpotents with
/// `det D = 1`: clear off-diagonal entries with unit pivots (the multipliers
/// are nilpotent), then factor the remaining diagonal.
pub fn factor_one_plus_nilpotent(amb: &Ambient, d: &Mat) -> Result<ElemCert> {
    let n = d.nrows();
    if d.ncols() != n {
        return Err(Error::PreconditionFailed("matrix is not square".into()));
    }
    let nil = nilradical(amb.ring());
    for i in 0..n {
        for j in 0..n {
            let e = d.get(i, j);
            amb.check(e).map_err(|e| Error::PreconditionFailed(e.to_string()))?;
            let off = if i == j { e.sub(&amb.one()) } else { e.clone() };
            if !off.coeffs().iter().all(|c| nil.contains(c)) {
                return Err(Error::PreconditionFailed(format!(
                    "entry ({}, {}) is not congruent to the identity modulo nilpotents",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if !d.det().is_one() {
        return Err(Error::PreconditionFailed(format!("determinant is {}", d.det())));
    }

    let mut work = d.clone();
    let mut undo: Vec<ElemOp> = Vec::new();
    for k in 0..n {
        let pivot_inv = amb
            .unit_inverse(work.get(k, k))
            .ok_or_else(|| Error::ClosureViolation("diagonal entry lost invertibility".into()))?;
        for i in 0..n {
            if i == k || work.get(i, k).is_zero() {
                continue;
            }
            let c = work.get(i, k).mul(&pivot_inv);
            work.left_elementary(i, k, &c.neg());
            undo.push(ElemOp::new(i, k, c));
        }
    }
    let diag: Vec<Poly> = (0..n).map(|k| work.get(k, k).clone()).collect();
    let mut cert = ElemCert::new(amb.clone(), n, undo)?;
    cert = cert.then(&diagonal_certificate(amb, &diag)?);
    if &cert.replay() != d {
        return Err(Error::ClosureViolation("factorization does not replay".into()));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::poly::Var;
    use crate::rees::ReesCtx;
    use crate::ring::RingCtx;

    fn square(ring: RingCtx, a: i64) -> ConductorSquare {
        ConductorSquare::new(ReesCtx::new(ring, Ideal::principal(ring, ring.from_i64(a)).unwrap()).unwrap())
    }

    fn z() -> RingCtx {
        RingCtx::integers()
    }

    #[test]
    fn element_patching() {
        let sq = square(z(), 3);
        let f = sq.corner1().parse_elem("2 + 3*t + t^2").unwrap();
        let g = sq.corner2().parse_elem("2 + u").unwrap();
        assert_eq!(patch_element(&sq, &f, &g).unwrap().poly(), &f);
        let bad = sq.corner1().parse_elem("2 + t + t^2").unwrap();
        assert_eq!(
            patch_element(&sq, &bad, &g),
            Err(Error::ImageMismatch { index: None, degree: 1 })
        );
        let zero = patch_element(&sq, &sq.corner1().zero(), &sq.corner2().zero()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn unit_patching() {
        let sq = square(RingCtx::modular(4).unwrap(), 2);
        let p1 = |s: &str| sq.corner1().parse_elem(s).unwrap();
        let one2 = sq.corner2().one();
        let (c, c_inv) = patch_unit(&sq, (&p1("1 + 2*t"), &p1("1 - 2*t")), (&one2, &one2)).unwrap();
        assert_eq!(c.to_string(), "1 + 2*t");
        assert!(c.mul(&c_inv).poly().is_one());
        let (one, _) = patch_unit(&sq, (&p1("1"), &p1("1")), (&one2, &one2)).unwrap();
        assert!(one.poly().is_one());
        let m1 = p1("-1");
        let m2 = sq.corner2().parse_elem("-1").unwrap();
        let (neg, _) = patch_unit(&sq, (&m1, &m1), (&m2, &m2)).unwrap();
        assert_eq!(neg.poly(), &m1);
        assert!(matches!(
            patch_unit(&sq, (&p1("1 + t"), &p1("1")), (&one2, &one2)),
            Err(Error::NotAUnit(_))
        ));
    }

    #[test]
    fn row_patching() {
        let sq = square(z(), 2);
        let c1 = sq.corner1();
        let c2 = sq.corner2();
        let p1 = |s: &str| c1.parse_elem(s).unwrap();
        // (1 + 2t)(1 - 2t + 4t^2) + 2t * (-4t^2) = 1 + 8t^3 - 8t^3
        let r1 = UmRow::new(
            c1.clone(),
            vec![p1("1 + 2*t"), p1("2*t")],
            vec![p1("1 - 2*t + 4*t^2"), p1("-4*t^2")],
        )
        .unwrap();
        let r2 = UmRow::new(c2.clone(), vec![c2.one(), c2.zero()], vec![c2.one(), c2.zero()]).unwrap();
        let patched = patch_row(&sq, &r1, &r2).unwrap();
        assert_eq!(patched.entries(), r1.entries());
        assert!(dot(patched.entries(), patched.dual()).is_one());

        let e1 = UmRow::new(c1.clone(), c1.unit_vector(2, 0), c1.unit_vector(2, 0)).unwrap();
        let e2 = UmRow::new(c2.clone(), c2.unit_vector(2, 0), c2.unit_vector(2, 0)).unwrap();
        assert_eq!(
            patch_row(&sq, &e1, &e2).unwrap().entries(),
            sq.apex().unit_vector(2, 0).as_slice()
        );

        let short = UmRow::new(c2.clone(), vec![c2.one()], vec![c2.one()]).unwrap();
        assert_eq!(patch_row(&sq, &e1, &short), Err(Error::LengthMismatch(2, 1)));

        // dual images disagree: (1, 0) with dual (1, 1+t^2) vs (1, 0) with dual (1, 0)
        let odd = UmRow::new(c1.clone(), c1.unit_vector(2, 0), vec![p1("1"), p1("1 + t^2")]).unwrap();
        assert!(matches!(patch_row(&sq, &odd, &e2), Err(Error::DualMismatch(_))));
    }

    #[test]
    fn matrix_patching_modes() {
        let sq = square(z(), 2);
        let c1 = sq.corner1();
        let c2 = sq.corner2();
        let id1 = CornerMatrix::from_cert(ElemCert::empty(c1.clone(), 2));
        let id2 = CornerMatrix::from_cert(ElemCert::empty(c2.clone(), 2));
        let out = patch_matrix(&sq, &id1, &id2, PatchMode::E).unwrap();
        assert!(out.mat.is_identity());
        assert_eq!(out.level, Some(CertLevel::FullyElementary));
        assert!(out.cert.unwrap().is_empty());

        let mut cert = ElemCert::empty(c1.clone(), 2);
        cert.push(0, 1, c1.parse_elem("2*t").unwrap());
        let m1 = CornerMatrix::from_cert(cert);
        let out = patch_matrix(&sq, &m1, &id2, PatchMode::Gl).unwrap();
        assert_eq!(out.mat.get(0, 1).to_string(), "2*t");
        assert!(out.mat.mul(&out.inverse).is_identity());
        let out = patch_matrix(&sq, &m1, &id2, PatchMode::E).unwrap();
        assert_eq!(out.level, Some(CertLevel::FullyElementary));

        // e12(2t) written as e12(t) e12(t): the multipliers leave A
        let mut odd = ElemCert::empty(c1.clone(), 2);
        odd.push(0, 1, c1.parse_elem("t").unwrap());
        odd.push(0, 1, c1.parse_elem("t").unwrap());
        let out = patch_matrix(&sq, &CornerMatrix::from_cert(odd), &id2, PatchMode::E).unwrap();
        assert_eq!(out.level, Some(CertLevel::CornerCertified));

        let diag = |amb: &Ambient| {
            Mat::from_rows(vec![vec![amb.one(), amb.zero()], vec![amb.zero(), amb.one().neg()]]).unwrap()
        };
        let d1 = CornerMatrix {
            mat: diag(&c1),
            inverse: diag(&c1),
            cert: None,
        };
        let d2 = CornerMatrix {
            mat: diag(&c2),
            inverse: diag(&c2),
            cert: None,
        };
        assert!(matches!(
            patch_matrix(&sq, &d1, &d2, PatchMode::Sl),
            Err(Error::DeterminantMismatch(_))
        ));
        assert!(patch_matrix(&sq, &d1, &d2, PatchMode::Gl).is_ok());
    }

    #[test]
    fn e_mode_is_fully_elementary_over_nil_ideals() {
        let sq = square(RingCtx::modular(4).unwrap(), 2);
        let mut cert2 = ElemCert::empty(sq.corner2(), 2);
        cert2.push(0, 1, sq.corner2().parse_elem("1 + u").unwrap());
        let mut cert1 = sq.eta2_map().lift_cert(&cert2.map(sq.base(), |g| sq.i2(g))).unwrap();
        cert1.push(1, 0, sq.corner1().parse_elem("2*t").unwrap());
        let out = patch_matrix(
            &sq,
            &CornerMatrix::from_cert(cert1),
            &CornerMatrix::from_cert(cert2),
            PatchMode::E,
        )
        .unwrap();
        assert_eq!(out.level, Some(CertLevel::FullyElementary));
        assert_eq!(out.cert.unwrap().replay(), out.mat);
    }

    #[test]
    fn certificate_lifting() {
        let sq = square(z(), 2);
        assert!(lift_e_certificate(&ElemCert::empty(sq.corner2(), 2), &sq.eta1_map())
            .unwrap()
            .is_empty());
        let mut c = ElemCert::empty(sq.corner2(), 2);
        c.push(0, 1, sq.corner2().parse_elem("1 + u").unwrap());
        let lifted = lift_e_certificate(&c, &sq.eta1_map()).unwrap();
        assert_eq!(
            lifted.to_string(),
            "cert ambient=rees{ring=Z,a=ideal[2]} n=2\nE 1 2 1 + t^2\n"
        );

        let z3 = square(z(), 3);
        let mut c = ElemCert::empty(z3.base(), 2);
        c.push(1, 0, z3.base().parse_elem("t").unwrap());
        let lifted = lift_e_certificate(&c, &z3.eta2_map()).unwrap();
        assert_eq!(lifted.ops()[0].lambda.to_string(), "t");
        assert_eq!(lifted.ambient(), &z3.corner1());
    }

    #[test]
    fn nilpotent_factorization() {
        let amb = square(RingCtx::modular(4).unwrap(), 2).apex();
        let p = |s: &str| amb.parse_elem(s).unwrap();
        assert!(factor_one_plus_nilpotent(&amb, &Mat::identity(&amb, 3))
            .unwrap()
            .is_empty());

        let single = Mat::from_rows(vec![vec![p("1"), p("2*t")], vec![p("0"), p("1")]]).unwrap();
        let cert = factor_one_plus_nilpotent(&amb, &single).unwrap();
        assert_eq!(cert.ops(), &[ElemOp::new(0, 1, p("2*t"))]);

        let d = Mat::from_rows(vec![vec![p("1 + 2*t"), p("2")], vec![p("2*t"), p("1 + 2*t")]]).unwrap();
        let cert = factor_one_plus_nilpotent(&amb, &d).unwrap();
        assert!(cert.len() <= 10);
        assert_eq!(cert.replay(), d);

        let not_nil = Mat::from_rows(vec![vec![p("1"), p("1")], vec![p("0"), p("1")]]).unwrap();
        assert!(matches!(
            factor_one_plus_nilpotent(&amb, &not_nil),
            Err(Error::PreconditionFailed(_))
        ));
        let bad_det = Mat::from_rows(vec![vec![p("3"), p("0")], vec![p("0"), p("1")]]).unwrap();
        assert!(matches!(
            factor_one_plus_nilpotent(&amb, &bad_det),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn whitehead_diagonal() {
        let amb = Ambient::poly(RingCtx::prime_field(5).unwrap(), Var::T);
        let p = |s: &str| amb.parse_elem(s).unwrap();
        let diag = [p("2"), p("3"), p("1")];
        let cert = diagonal_certificate(&amb, &diag).unwrap();
        let m = cert.replay();
        for (i, d) in diag.iter().enumerate() {
            for j in 0..3 {
                assert_eq!(m.get(i, j), &if i == j { d.clone() } else { amb.zero() });
            }
        }
    }
}
