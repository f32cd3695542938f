//! Certificate-producing reduction of unimodular rows to `e1`: a Euclidean
//! engine over `F[x]`, an artinian engine (CRT split, reduction modulo the
//! nilradical, lift and unit cleanup), the patched pipeline over `A`, and
//! K1-representative size reduction.

use std::fmt;

use crate::algebra::{dot, format_row, Ambient, Mat};
use crate::cert::{ElemCert, ElemOp};
use crate::error::{Error, Result};
use crate::ideal::ArtinianSplit;
use crate::patching::{diagonal_certificate, lift_e_certificate, patch_matrix, CertLevel, CornerMatrix, PatchMode};
use crate::poly::Poly;
use crate::rees::ReesCtx;
use crate::ring::{CoeffMap, RingCtx};
use crate::square::{ConductorSquare, Surjection};

fn check_row(amb: &Ambient, row: &[Poly]) -> Result<()> {
    if row.len() < 2 {
        return Err(Error::PreconditionFailed(format!(
            "rows of length {} cannot be reduced elementarily",
            row.len()
        )));
    }
    row.iter().try_for_each(|f| amb.check(f))
}

fn apply_op(cert: &mut ElemCert, v: &mut [Poly], i: usize, j: usize, lambda: Poly) {
    if lambda.is_zero() {
        return;
    }
    let op = ElemOp::new(i, j, lambda);
    op.act_on_row(v);
    cert.push(op.i, op.j, op.lambda);
}

/// Sends `(u, 0, ..., 0)` with `u` a unit to `e1`:
/// `r2 += u^-1 (1 - u) r1; r1 += r2; r2 -= (1 - u) r1`.
fn normalize_unit_pivot(amb: &Ambient, v: &mut [Poly], cert: &mut ElemCert) -> Result<()> {
    let u = v[0].clone();
    if u.is_one() {
        return Ok(());
    }
    let u_inv = amb.unit_inverse(&u).ok_or(Error::NotUnimodular)?;
    let one_minus_u = amb.one().sub(&u);
    apply_op(cert, v, 0, 1, u_inv.mul(&one_minus_u));
    apply_op(cert, v, 1, 0, amb.one());
    apply_op(cert, v, 0, 1, one_minus_u.neg());
    Ok(())
}

/// Reduces a row over `F[x]` to `e1` by repeated division by the entry of
/// least degree.
pub fn reduce_row_euclidean(amb: &Ambient, row: &[Poly]) -> Result<ElemCert> {
    check_row(amb, row)?;
    let n = row.len();
    let mut cert = ElemCert::empty(amb.clone(), n);
    if amb.ring().is_zero_ring() {
        return Ok(cert);
    }
    if !matches!(amb, Ambient::Poly { .. }) || !amb.ring().is_field() {
        return Err(Error::UnsupportedRing(format!("Euclidean reduction over {amb}")));
    }
    let mut v = row.to_vec();
    let mut last_degree: Option<usize> = None;
    let pivot = loop {
        let p = (0..n)
            .filter(|&k| !v[k].is_zero())
            .min_by_key(|&k| (v[k].degree(), k))
            .ok_or(Error::NotUnimodular)?;
        if (0..n).all(|k| k == p || v[k].is_zero()) {
            break p;
        }
        let deg = v[p].degree().unwrap();
        assert!(last_degree.is_none_or(|d| deg < d), "pivot degree did not decrease");
        last_degree = Some(deg);
        for k in 0..n {
            if k != p && !v[k].is_zero() {
                let (q, _) = v[k].divmod(&v[p])?;
                apply_op(&mut cert, &mut v, p, k, q.neg());
            }
        }
    };
    if v[pivot].degree() != Some(0) {
        return Err(Error::NotUnimodular);
    }
    if pivot != 0 {
        apply_op(&mut cert, &mut v, pivot, 0, amb.one());
        apply_op(&mut cert, &mut v, 0, pivot, amb.one().neg());
    }
    normalize_unit_pivot(amb, &mut v, &mut cert)?;
    debug_assert_eq!(v, amb.unit_vector(n, 0));
    Ok(cert)
}

/// Clears `w_j` against a unit `w_0` and normalizes, for rows congruent to
/// `e1` modulo nilpotents.
fn unit_cleanup(amb: &Ambient, w: &[Poly]) -> Result<ElemCert> {
    let mut v = w.to_vec();
    let mut cert = ElemCert::empty(amb.clone(), w.len());
    let w0_inv = amb.unit_inverse(&v[0]).ok_or(Error::NotUnimodular)?;
    for j in 1..v.len() {
        let lambda = v[j].mul(&w0_inv).neg();
        apply_op(&mut cert, &mut v, 0, j, lambda);
    }
    normalize_unit_pivot(amb, &mut v, &mut cert)?;
    Ok(cert)
}

/// One local factor: reduce modulo the nilradical, solve over the residue
/// field, lift, clean up.
fn reduce_local(amb: &Ambient, row: &[Poly], field: RingCtx) -> Result<ElemCert> {
    let red = Surjection::nil_reduction(amb, field)?;
    let image = red.apply_row(row);
    let lifted = red.lift_cert(&reduce_row_euclidean(red.codomain(), &image)?)?;
    let w = lifted.apply_to_row(row);
    Ok(lifted.then(&unit_cleanup(amb, &w)?))
}

fn local_ambient(amb: &Ambient, ring: RingCtx, map: CoeffMap) -> Result<Ambient> {
    Ok(match amb {
        Ambient::Poly { var, .. } => Ambient::poly(ring, *var),
        Ambient::Rees(ctx) => Ambient::Rees(ReesCtx::new(ring, ctx.ideal().image(map)?)?),
    })
}

/// Reduces a row over `S[x]` or `S[at, t^2]` with `S` a field or `Z/n`.
pub fn reduce_row_artinian(amb: &Ambient, row: &[Poly]) -> Result<ElemCert> {
    check_row(amb, row)?;
    let n = row.len();
    let ring = amb.ring();
    if ring.is_zero_ring() {
        return Ok(ElemCert::empty(amb.clone(), n));
    }
    if ring.is_field() {
        return reduce_local(amb, row, ring);
    }
    let split = ArtinianSplit::new(ring)?;
    let mut cert = ElemCert::empty(amb.clone(), n);
    for (i, factor) in split.factors().iter().enumerate() {
        let map = split.forward_map(i);
        let local_amb = local_ambient(amb, factor.ring, map)?;
        let local_row: Vec<Poly> = row.iter().map(|f| f.map_coeffs(map)).collect();
        let local = reduce_local(&local_amb, &local_row, factor.residue_field())?;
        let embedded = local.map(amb.clone(), |l| {
            Poly::new(ring, l.var(), l.coeffs().iter().map(|c| split.embed(i, c)).collect())
        });
        cert = cert.then(&embedded);
    }
    cert.validate()?;
    Ok(cert)
}

/// A row solver for some class of ambients.
pub trait CornerSolver: Send + Sync {
    fn name(&self) -> &str;
    fn supports(&self, amb: &Ambient) -> bool;
    fn reduce(&self, amb: &Ambient, row: &[Poly]) -> Result<ElemCert>;
}

pub struct EuclideanSolver;

impl CornerSolver for EuclideanSolver {
    fn name(&self) -> &str {
        "euclidean"
    }

    fn supports(&self, amb: &Ambient) -> bool {
        matches!(amb, Ambient::Poly { .. }) && (amb.ring().is_field() || amb.ring().is_zero_ring())
    }

    fn reduce(&self, amb: &Ambient, row: &[Poly]) -> Result<ElemCert> {
        reduce_row_euclidean(amb, row)
    }
}

pub struct ArtinianSolver;

impl CornerSolver for ArtinianSolver {
    fn name(&self) -> &str {
        "artinian"
    }

    fn supports(&self, amb: &Ambient) -> bool {
        amb.ring().is_artinian()
    }

    fn reduce(&self, amb: &Ambient, row: &[Poly]) -> Result<ElemCert> {
        reduce_row_artinian(amb, row)
    }
}

/// Row solvers tried in registration order.
pub struct SolverRegistry {
    solvers: Vec<Box<dyn CornerSolver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        let mut reg = SolverRegistry::empty();
        reg.register(Box::new(EuclideanSolver));
        reg.register(Box::new(ArtinianSolver));
        reg
    }
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry { solvers: Vec::new() }
    }

    pub fn register(&mut self, solver: Box<dyn CornerSolver>) {
        self.solvers.push(solver);
    }

    pub fn find(&self, amb: &Ambient) -> Option<&dyn CornerSolver> {
        self.solvers.iter().find(|s| s.supports(amb)).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.solvers.iter().map(|s| s.name()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub status: CertLevel,
    pub cert_a: Option<ElemCert>,
    pub cert_corner1: Option<ElemCert>,
    pub cert_corner2: Option<ElemCert>,
    /// The patched matrix over `A`, when one was built.
    pub matrix: Option<Mat>,
    pub final_row: Vec<Poly>,
    pub log: Vec<Stage>,
}

impl ReductionReport {
    /// Report for a single certificate produced directly over the ambient.
    pub fn direct(row: &[Poly], cert: ElemCert) -> Self {
        let final_row = cert.apply_to_row(row);
        let ok = final_row == cert.ambient().unit_vector(row.len(), 0);
        ReductionReport {
            status: if ok {
                CertLevel::FullyElementary
            } else {
                CertLevel::Failed
            },
            cert_a: Some(cert),
            cert_corner1: None,
            cert_corner2: None,
            matrix: None,
            final_row,
            log: vec![Stage {
                name: "direct".into(),
                ok,
            }],
        }
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stage in &self.log {
            writeln!(f, "stage={} ok={}", stage.name, stage.ok)?;
        }
        writeln!(f, "status={}", self.status)?;
        writeln!(f, "final_row {}", format_row(&self.final_row))?;
        let blocks = [
            ("cert_A", &self.cert_a),
            ("cert_corner1", &self.cert_corner1),
            ("cert_corner2", &self.cert_corner2),
        ];
        for (label, cert) in blocks {
            if let Some(cert) = cert {
                writeln!(f, "block {label}")?;
                write!(f, "{cert}")?;
                writeln!(f, "end")?;
            }
        }
        if let Some(m) = &self.matrix {
            writeln!(f, "block matrix")?;
            writeln!(f, "matrix")?;
            write!(f, "{m}")?;
            writeln!(f, "end")?;
        }
        Ok(())
    }
}

/// Reduces a unimodular row over `A` by solving over both corners of the
/// conductor square and patching.
///
/// When `a ⊆ nil(R)` the second corner certificate is lifted to `R[t]` and
/// the leftover `e1 + beta` (with `beta` over `aR[t]`) is cleaned up by ops
/// whose product maps to the identity, so the corners agree exactly and the
/// patched matrix factors into elementary matrices over `A`. For other
/// ideals the correction `phi'` is lifted entrywise and the result is at
/// best corner-certified.
pub fn reduce_row_rees_patched(ctx: &ReesCtx, row: &[Poly], solvers: &SolverRegistry) -> Result<ReductionReport> {
    let sq = ConductorSquare::new(ctx.clone());
    let apex = sq.apex();
    row.iter().try_for_each(|f| apex.check(f))?;
    let r = row.len();
    let d = ctx.ring().dim();
    if r < (d + 2).max(2) {
        return Err(Error::BoundViolation(format!(
            "row length {r} is below dim(R) + 2 = {}",
            (d + 2).max(2)
        )));
    }
    let (c1, c2, base) = (sq.corner1(), sq.corner2(), sq.base());
    let s1 = solvers.find(&c1).ok_or_else(|| Error::NoCornerSolver(c1.to_string()))?;
    let s2 = solvers.find(&c2).ok_or_else(|| Error::NoCornerSolver(c2.to_string()))?;
    let mut log = Vec::new();
    let mut stage = |name: &str, ok: bool| log.push(Stage { name: name.into(), ok });

    let row1: Vec<Poly> = row.iter().map(|f| sq.i1(f)).collect();
    let row2: Vec<Poly> = row.iter().map(|f| sq.eta1(f)).collect();
    let sigma1 = s1.reduce(&c1, &row1)?;
    stage("corner1", sigma1.apply_to_row(&row1) == c1.unit_vector(r, 0));
    let sigma2 = s2.reduce(&c2, &row2)?;
    stage("corner2", sigma2.apply_to_row(&row2) == c2.unit_vector(r, 0));

    let eta2 = sq.eta2_map();
    let sigma2_t = sigma2.map(base.clone(), |g| sq.i2(g));
    let phi_prime = eta2.apply_cert(&sigma1).inverse().then(&sigma2_t);
    let e1 = base.unit_vector(r, 0);
    stage("phi-fixes-e1", phi_prime.apply_to_row(&e1) == e1);

    let failed = |log: Vec<Stage>, sigma1: ElemCert, sigma2: ElemCert| ReductionReport {
        status: CertLevel::Failed,
        cert_a: None,
        cert_corner1: Some(sigma1),
        cert_corner2: Some(sigma2),
        matrix: None,
        final_row: row.to_vec(),
        log,
    };

    if ctx.a_is_unit() {
        let cert = sigma1.rehome(apex.clone())?;
        let final_row = cert.apply_to_row(row);
        let ok = final_row == apex.unit_vector(r, 0);
        log.push(Stage {
            name: "rehome".into(),
            ok,
        });
        return Ok(ReductionReport {
            status: if ok {
                CertLevel::FullyElementary
            } else {
                CertLevel::Failed
            },
            cert_a: Some(cert),
            cert_corner1: Some(sigma1),
            cert_corner2: Some(sigma2),
            matrix: None,
            final_row,
            log,
        });
    }

    let (m1, m2, mode) = if ctx.a_is_nil() {
        let psi = lift_e_certificate(&sigma2_t, &eta2)?;
        let w = psi.apply_to_row(&row1);
        let cleanup = nil_correction(&c1, &w)?;
        log.push(Stage {
            name: "nil-correction".into(),
            ok: eta2.apply_mat(&cleanup.replay()).is_identity(),
        });
        let psi = psi.then(&cleanup);
        log.push(Stage {
            name: "corner-agreement".into(),
            ok: psi.apply_to_row(&row1) == c1.unit_vector(r, 0),
        });
        (
            CornerMatrix::from_cert(psi),
            CornerMatrix::from_cert(sigma2.clone()),
            PatchMode::E,
        )
    } else {
        let mut phi = phi_prime.replay().map(|g| eta2.lift(g));
        for j in 0..r {
            phi.set(0, j, if j == 0 { c1.one() } else { c1.zero() });
        }
        let Some(phi_inv) = phi.inverse(&c1) else {
            log.push(Stage {
                name: "phi-lift".into(),
                ok: false,
            });
            return Ok(failed(log, sigma1, sigma2));
        };
        log.push(Stage {
            name: "phi-lift".into(),
            ok: true,
        });
        let m1 = CornerMatrix {
            mat: sigma1.replay().mul(&phi),
            inverse: phi_inv.mul(&sigma1.inverse().replay()),
            cert: None,
        };
        (m1, CornerMatrix::from_cert(sigma2.clone()), PatchMode::Gl)
    };

    let patched = patch_matrix(&sq, &m1, &m2, mode)?;
    log.push(Stage {
        name: "patch".into(),
        ok: true,
    });
    let final_row = patched.mat.left_apply(row);
    let reached = final_row == apex.unit_vector(r, 0);
    let (status, cert_a) = match (patched.level, patched.cert) {
        (Some(CertLevel::FullyElementary), Some(cert)) => {
            let ok = cert.apply_to_row(row) == apex.unit_vector(r, 0);
            log.push(Stage {
                name: "certify".into(),
                ok,
            });
            (
                if ok && reached {
                    CertLevel::FullyElementary
                } else {
                    CertLevel::Failed
                },
                Some(cert),
            )
        }
        _ => {
            log.push(Stage {
                name: "certify".into(),
                ok: false,
            });
            (
                if reached {
                    CertLevel::CornerCertified
                } else {
                    CertLevel::Failed
                },
                None,
            )
        }
    };
    let corner1 = m1.cert.unwrap_or(sigma1);
    Ok(ReductionReport {
        status,
        cert_a,
        cert_corner1: Some(corner1),
        cert_corner2: Some(sigma2),
        matrix: Some(patched.mat),
        final_row,
        log,
    })
}

/// Ops sending `w = e1 + beta`, `beta` nilpotent, to `e1` with product
/// congruent to the identity modulo the nilradical.
fn nil_correction(amb: &Ambient, w: &[Poly]) -> Result<ElemCert> {
    let n = w.len();
    let mut v = w.to_vec();
    let mut cert = ElemCert::empty(amb.clone(), n);
    let u = v[0].clone();
    let u_inv = amb.unit_inverse(&u).ok_or(Error::NotUnimodular)?;
    for j in 1..n {
        let lambda = v[j].mul(&u_inv).neg();
        apply_op(&mut cert, &mut v, 0, j, lambda);
    }
    let mut diag = vec![amb.one(); n];
    diag[0] = u_inv;
    diag[1] = u;
    Ok(cert.then(&diagonal_certificate(amb, &diag)?))
}

/// Result of [`k1_reduce`]: `replay(sigma2) * M * replay(sigma1) =
/// diag(reduced, I)`.
#[derive(Clone, Debug)]
pub struct K1Reduction {
    pub reduced: Mat,
    pub sigma1: ElemCert,
    pub sigma2: ElemCert,
}

/// Peels an invertible `n x n` matrix down to size `r` by elementary row
/// and column operations.
pub fn k1_reduce(amb: &Ambient, m: &Mat, m_inv: &Mat, r: usize, solvers: &SolverRegistry) -> Result<K1Reduction> {
    let n = m.nrows();
    if m.ncols() != n || m_inv.nrows() != n || m_inv.ncols() != n {
        return Err(Error::PreconditionFailed(
            "matrix and inverse must be square of the same size".into(),
        ));
    }
    m.entries()
        .iter()
        .chain(m_inv.entries())
        .try_for_each(|f| amb.check(f))?;
    if !m.mul(m_inv).is_identity() {
        return Err(Error::NotAUnit("supplied inverse does not verify".into()));
    }
    let floor = (amb.base_dim() + 2).max(3);
    if r < floor {
        return Err(Error::BoundViolation(format!(
            "target size {r} is below max(3, d + 2) = {floor}"
        )));
    }
    if n < r {
        return Err(Error::BoundViolation(format!(
            "matrix size {n} is below target size {r}"
        )));
    }
    let mut sigma1 = ElemCert::empty(amb.clone(), n);
    if n == r {
        return Ok(K1Reduction {
            reduced: m.clone(),
            sigma2: sigma1.clone(),
            sigma1,
        });
    }
    let solver = solvers.find(amb).ok_or_else(|| Error::NoRowSolver(amb.to_string()))?;
    let mut cur = m.clone();
    let mut inv = m_inv.clone();
    let mut peels = Vec::new();
    for size in (r + 1..=n).rev() {
        let last = size - 1;
        let row: Vec<Poly> = (0..size).map(|j| cur.get(last, j).clone()).collect();
        debug_assert!(dot(&row, &(0..size).map(|i| inv.get(i, last).clone()).collect::<Vec<_>>()).is_one());
        let reversed: Vec<Poly> = row.iter().rev().cloned().collect();
        let perm: Vec<usize> = (0..size).rev().collect();
        let tau = solver.reduce(amb, &reversed)?.relabel(&perm).embed(n);
        for op in tau.ops() {
            cur.right_elementary(op.i, op.j, &op.lambda);
            inv.left_elementary(op.i, op.j, &op.lambda.neg());
        }
        let mut clear = ElemCert::empty(amb.clone(), n);
        for i in 0..last {
            clear.push(i, last, cur.get(i, last).neg());
        }
        for op in clear.ops() {
            cur.left_elementary(op.i, op.j, &op.lambda);
            inv.right_elementary(op.i, op.j, &op.lambda.neg());
        }
        sigma1 = sigma1.then(&tau);
        peels.push(clear);
    }
    let sigma2 = peels
        .iter()
        .rev()
        .fold(ElemCert::empty(amb.clone(), n), |acc, c| acc.then(c));
    let reduced = cur.leading_block(r);
    if reduced.embed(amb, n) != cur {
        return Err(Error::ClosureViolation("peeled matrix is not block diagonal".into()));
    }
    Ok(K1Reduction {
        reduced,
        sigma1,
        sigma2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::poly::Var;

    fn rees(ring: RingCtx, a: i64) -> ReesCtx {
        ReesCtx::new(ring, Ideal::principal(ring, ring.from_i64(a)).unwrap()).unwrap()
    }

    fn f2t() -> Ambient {
        Ambient::poly(RingCtx::prime_field(2).unwrap(), Var::T)
    }

    fn row(amb: &Ambient, items: &[&str]) -> Vec<Poly> {
        items.iter().map(|s| amb.parse_elem(s).unwrap()).collect()
    }

    #[test]
    fn euclidean_examples() {
        let amb = f2t();
        let v = row(&amb, &["t", "1 + t"]);
        let cert = reduce_row_euclidean(&amb, &v).unwrap();
        assert_eq!(cert.apply_to_row(&v), amb.unit_vector(2, 0));
        assert!(reduce_row_euclidean(&amb, &row(&amb, &["1", "0", "0"]))
            .unwrap()
            .is_empty());
        assert_eq!(
            reduce_row_euclidean(&amb, &row(&amb, &["t", "t^2"])),
            Err(Error::NotUnimodular)
        );
        assert_eq!(
            reduce_row_euclidean(&amb, &row(&amb, &["0", "0"])),
            Err(Error::NotUnimodular)
        );

        let q = Ambient::poly(RingCtx::rationals(), Var::U);
        let v = row(&q, &["2 + u^2", "3*u", "u^3 - 1"]);
        assert_eq!(
            reduce_row_euclidean(&q, &v).unwrap().apply_to_row(&v),
            q.unit_vector(3, 0)
        );
    }

    #[test]
    fn artinian_examples() {
        let z4 = RingCtx::modular(4).unwrap();
        let amb = Ambient::Rees(rees(z4, 2));
        let v = row(&amb, &["1 + 2*t", "2*t"]);
        let cert = reduce_row_artinian(&amb, &v).unwrap();
        assert_eq!(cert.len(), 4);
        assert_eq!(cert.apply_to_row(&v), amb.unit_vector(2, 0));
        let short = reduce_row_artinian(&amb, &row(&amb, &["1", "2 + 2*t^2"])).unwrap();
        assert!(short.len() <= 1);
        assert_eq!(
            reduce_row_artinian(&amb, &row(&amb, &["2", "2*t"])),
            Err(Error::NotUnimodular)
        );

        let z12 = RingCtx::modular(12).unwrap();
        for amb in [
            Ambient::Rees(rees(z12, 6)),
            Ambient::Rees(rees(z12, 2)),
            Ambient::poly(z12, Var::T),
        ] {
            let v = row(&amb, &["5 + 6*t^2", "6*t^3", "4"]);
            let cert = reduce_row_artinian(&amb, &v).unwrap();
            assert_eq!(cert.apply_to_row(&v), amb.unit_vector(3, 0), "{amb}");
        }
    }

    #[test]
    fn patched_pipeline_examples() {
        let reg = SolverRegistry::default();
        let f3 = RingCtx::prime_field(3).unwrap();
        let ctx = rees(f3, 1);
        let v = row(&Ambient::Rees(ctx.clone()), &["t", "1 + t", "t^2"]);
        let rep = reduce_row_rees_patched(&ctx, &v, &reg).unwrap();
        assert_eq!(rep.status, CertLevel::FullyElementary);
        assert_eq!(rep.cert_a.unwrap().apply_to_row(&v), rep.final_row);

        let ctx = rees(RingCtx::modular(4).unwrap(), 2);
        let amb = Ambient::Rees(ctx.clone());
        let v = row(&amb, &["1 + 2*t", "2*t"]);
        let rep = reduce_row_rees_patched(&ctx, &v, &reg).unwrap();
        assert_eq!(rep.status, CertLevel::FullyElementary);
        assert_eq!(rep.final_row, amb.unit_vector(2, 0));
        assert!(rep.log.iter().all(|s| s.ok), "{rep}");

        let z = rees(RingCtx::integers(), 2);
        let v = row(&Ambient::Rees(z.clone()), &["1", "0", "0"]);
        assert!(matches!(
            reduce_row_rees_patched(&z, &v, &reg),
            Err(Error::NoCornerSolver(_))
        ));
        assert!(matches!(
            reduce_row_rees_patched(&z, &v[..2], &reg),
            Err(Error::BoundViolation(_))
        ));
    }

    #[test]
    fn pipeline_outside_nil_case() {
        let reg = SolverRegistry::default();
        let ctx = rees(RingCtx::modular(12).unwrap(), 2);
        let amb = Ambient::Rees(ctx.clone());
        let v = row(&amb, &["1 + 2*t", "2*t"]);
        let rep = reduce_row_rees_patched(&ctx, &v, &reg).unwrap();
        assert!(rep.status >= CertLevel::CornerCertified, "{rep}");
        assert_eq!(rep.final_row, amb.unit_vector(2, 0));
    }

    #[test]
    fn k1_examples() {
        let reg = SolverRegistry::default();
        let amb = Ambient::Rees(rees(RingCtx::prime_field(2).unwrap(), 1));
        let id = Mat::identity(&amb, 4);
        let out = k1_reduce(&amb, &id, &id, 3, &reg).unwrap();
        assert!(out.reduced.is_identity() && out.sigma1.is_empty() && out.sigma2.is_empty());

        let mut cert = ElemCert::empty(amb.clone(), 4);
        cert.push(0, 1, amb.parse_elem("t^2").unwrap());
        cert.push(2, 0, amb.parse_elem("t").unwrap());
        let m = cert.replay();
        let out = k1_reduce(&amb, &m, &cert.inverse().replay(), 3, &reg).unwrap();
        assert_eq!(out.reduced.nrows(), 3);
        assert_eq!(
            out.sigma2.replay().mul(&m).mul(&out.sigma1.replay()),
            out.reduced.embed(&amb, 4)
        );

        let same = k1_reduce(&amb, &m, &cert.inverse().replay(), 4, &reg).unwrap();
        assert_eq!(same.reduced, m);
        assert!(matches!(k1_reduce(&amb, &m, &m, 3, &reg), Err(Error::NotAUnit(_))));
        assert!(matches!(
            k1_reduce(&amb, &id, &id, 2, &reg),
            Err(Error::BoundViolation(_))
        ));

        let zt = Ambient::poly(RingCtx::integers(), Var::T);
        let idz = Mat::identity(&zt, 4);
        assert!(matches!(
            k1_reduce(&zt, &idz, &idz, 3, &reg),
            Err(Error::NoRowSolver(_))
        ));
    }

    #[test]
    fn registry_lookup() {
        let reg = SolverRegistry::default();
        assert_eq!(reg.names(), vec!["euclidean", "artinian"]);
        assert_eq!(reg.find(&f2t()).unwrap().name(), "euclidean");
        let z4 = Ambient::poly(RingCtx::modular(4).unwrap(), Var::T);
        assert_eq!(reg.find(&z4).unwrap().name(), "artinian");
        assert!(reg.find(&Ambient::poly(RingCtx::integers(), Var::T)).is_none());
        assert!(SolverRegistry::empty().find(&f2t()).is_none());
    }
}
