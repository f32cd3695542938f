//! Seeded property suites with counterexample shrinking.
//!
//! Every trial draws a [`Case`] from its own generator stream and checks it
//! with a pure property function, so a case can be replayed and shrunk
//! without the generator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::Rng;

use crate::algebra::{dot, format_row, Mat};
use crate::cert::{ElemCert, ElemOp};
use crate::error::{Error, Result};
use crate::exec::{map_trials, trial_rng, ExecMode};
use crate::gen;
use crate::ideal::{nilradical, Ideal};
use crate::patching::{patch_element, patch_matrix, patch_row, CertLevel, CornerMatrix, PatchMode, UmRow};
use crate::poly::{Poly, Var};
use crate::reduction::{k1_reduce, reduce_row_artinian, reduce_row_rees_patched, SolverRegistry};
use crate::rees::{nilpotency_bound, star_membership_by_components, ReesCtx};
use crate::ring::{RingCtx, RingElem, RingTag};
use crate::square::ConductorSquare;
use crate::verify::{verify_certificate, Subject};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Square,
    NilStructure,
    StarIdeals,
    PatchRow,
    PatchMatrix,
    Reduce,
    K1,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Square,
        Suite::NilStructure,
        Suite::StarIdeals,
        Suite::PatchRow,
        Suite::PatchMatrix,
        Suite::Reduce,
        Suite::K1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Square => "square",
            Suite::NilStructure => "prop38",
            Suite::StarIdeals => "prop39",
            Suite::PatchRow => "patch-row",
            Suite::PatchMatrix => "patch-matrix",
            Suite::Reduce => "reduce",
            Suite::K1 => "k1",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generated input: polynomials plus small integers describing how to
/// read them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub polys: Vec<Poly>,
    pub shape: Vec<usize>,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape: Vec<String> = self.shape.iter().map(|x| x.to_string()).collect();
        write!(f, "shape=[{}] polys={}", shape.join(", "), format_row(&self.polys))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The case violates a precondition (shrinking produced nonsense).
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub trial: u64,
    pub case: Case,
    pub message: String,
    pub shrink_steps: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub ctx: ReesCtx,
    pub seed: u64,
    pub trials: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite={} ctx={} seed={} trials={}",
            self.suite, self.ctx, self.seed, self.trials
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "fail trial={} shrink_steps={} msg={}",
                fail.trial, fail.shrink_steps, fail.message
            )?;
            writeln!(f, "  case {}", fail.case)?;
        }
        writeln!(
            f,
            "passed={} failed={}",
            self.trials - self.failures.len() as u64,
            self.failures.len()
        )
    }
}

/// Cap on accepted shrink steps per failure.
const MAX_SHRINK_STEPS: usize = 200;

pub fn run_suite(suite: Suite, ctx: &ReesCtx, seed: u64, trials: u64, mode: ExecMode) -> Result<SuiteReport> {
    let prop = Property::new(suite, ctx)?;
    let results = map_trials(mode, trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let case = prop.generate(&mut rng);
        match prop.check(&case) {
            Outcome::Pass => None,
            Outcome::Invalid => Some(Failure {
                trial,
                case,
                message: "generator produced an invalid case".into(),
                shrink_steps: 0,
            }),
            Outcome::Fail(message) => {
                let (case, message, shrink_steps) = prop.shrink(case, message);
                Some(Failure {
                    trial,
                    case,
                    message,
                    shrink_steps,
                })
            }
        }
    });
    Ok(SuiteReport {
        suite,
        ctx: ctx.clone(),
        seed,
        trials,
        failures: results.into_iter().flatten().collect(),
    })
}

/// A suite bound to a context.
pub struct Property {
    suite: Suite,
    sq: ConductorSquare,
    solvers: SolverRegistry,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Outcome::Fail(format!($($msg)*));
        }
    };
}

impl Property {
    pub fn new(suite: Suite, ctx: &ReesCtx) -> Result<Self> {
        let sq = ConductorSquare::new(ctx.clone());
        let solvers = SolverRegistry::default();
        match suite {
            Suite::Reduce => {
                for amb in [sq.corner1(), sq.corner2()] {
                    if solvers.find(&amb).is_none() {
                        return Err(Error::NoCornerSolver(amb.to_string()));
                    }
                }
            }
            Suite::K1 if solvers.find(&sq.apex()).is_none() => {
                return Err(Error::NoRowSolver(sq.apex().to_string()));
            }
            _ => {}
        }
        Ok(Property { suite, sq, solvers })
    }

    fn ctx(&self) -> &ReesCtx {
        self.sq.ctx()
    }

    fn ring(&self) -> RingCtx {
        self.ctx().ring()
    }

    fn row_len(&self) -> usize {
        (self.ring().dim() + 2).max(2)
    }

    pub fn generate<G: Rng + ?Sized>(&self, rng: &mut G) -> Case {
        let ctx = self.ctx();
        let apex = self.sq.apex();
        match self.suite {
            Suite::Square => {
                let f = gen::rees_poly(ctx, 6, rng);
                Case {
                    polys: vec![f],
                    shape: vec![rng.gen_range(0..=3)],
                }
            }
            Suite::NilStructure => {
                let b = ideal_code(&gen::ideal(self.ring(), rng));
                Case {
                    polys: vec![gen::rees_poly(ctx, 8, rng), gen::rees_poly(ctx, 8, rng)],
                    shape: vec![b],
                }
            }
            Suite::StarIdeals => {
                let b1 = ideal_code(&gen::ideal(self.ring(), rng));
                let b2 = ideal_code(&gen::ideal(self.ring(), rng));
                let p = [2, 3, 5][rng.gen_range(0..3)];
                let shape = vec![
                    b1,
                    b2,
                    p,
                    rng.gen_range(1..=3),
                    rng.gen_range(0..=3),
                    rng.gen_range(0..=3),
                ];
                Case {
                    polys: vec![gen::rees_poly(ctx, 6, rng), gen::rees_poly(ctx, 6, rng)],
                    shape,
                }
            }
            Suite::PatchRow | Suite::Reduce => {
                let n = if self.suite == Suite::Reduce {
                    self.row_len()
                } else {
                    rng.gen_range(2..=4)
                };
                let row = gen::unimodular_row(&apex, n, rng);
                Case {
                    polys: [row.entries(), row.dual()].concat(),
                    shape: vec![n],
                }
            }
            Suite::PatchMatrix => {
                let n = rng.gen_range(2..=3);
                let len = rng.gen_range(1..=6);
                cert_case(vec![n], &gen::elementary_product(&apex, n, len, 3, rng))
            }
            Suite::K1 => {
                let n = rng.gen_range(4..=6);
                let r = (ctx.ring().dim() + 2).max(3);
                let len = rng.gen_range(4..=10);
                cert_case(vec![n, r], &gen::elementary_product(&apex, n, len, 2, rng))
            }
        }
    }

    pub fn check(&self, case: &Case) -> Outcome {
        match self.suite {
            Suite::Square => self.check_square(case),
            Suite::NilStructure => self.check_nil_structure(case),
            Suite::StarIdeals => self.check_star_ideals(case),
            Suite::PatchRow => self.check_patch_row(case),
            Suite::PatchMatrix => self.check_patch_matrix(case),
            Suite::Reduce => self.check_reduce(case),
            Suite::K1 => self.check_k1(case),
        }
    }

    fn elems(&self, case: &Case, count: usize) -> Option<Vec<Poly>> {
        (case.polys.len() == count && case.polys.iter().all(|f| self.ctx().contains(f))).then(|| case.polys.clone())
    }

    fn check_square(&self, case: &Case) -> Outcome {
        let (Some(fs), [k]) = (self.elems(case, 1), case.shape.as_slice()) else {
            return Outcome::Invalid;
        };
        let sq = &self.sq;
        let f = &fs[0];
        let g = sq.eta1(f);
        ensure!(sq.eta2(&sq.i1(f)) == sq.i2(&g), "eta2(i1(f)) != i2(eta1(f))");
        match patch_element(sq, f, &g) {
            Ok(h) => ensure!(h.poly() == f, "patched element {h} differs from {f}"),
            Err(e) => return Outcome::Fail(format!("matched pair rejected: {e}")),
        }
        let in_star = self.ctx().elem(f.clone()).unwrap().star_membership(self.ctx().ideal());
        ensure!(g.is_zero() == in_star, "eta1 kernel disagrees with star membership");
        let q = sq.quotient_ring();
        if !q.is_zero_ring() {
            let bumped = g.add(&Poly::monomial(q, Var::U, q.one(), *k));
            let got = patch_element(sq, f, &bumped);
            ensure!(
                matches!(got, Err(Error::ImageMismatch { .. })),
                "mismatched pair accepted: {got:?}"
            );
        }
        Outcome::Pass
    }

    fn check_nil_structure(&self, case: &Case) -> Outcome {
        let (Some(fs), [b]) = (self.elems(case, 2), case.shape.as_slice()) else {
            return Outcome::Invalid;
        };
        let ctx = self.ctx();
        let ring = self.ring();
        let Some(b) = decode_ideal(ring, *b) else {
            return Outcome::Invalid;
        };
        let f = ctx.elem(fs[0].clone()).unwrap();
        let g = ctx.elem(fs[1].clone()).unwrap();

        for x in [&f, &g] {
            let bound = nilpotency_bound(ring, x.poly().degree().unwrap_or(0));
            let mut power = x.poly().clone();
            let mut powered = power.is_zero();
            for _ in 1..bound {
                if powered {
                    break;
                }
                power = power.mul(x.poly());
                powered = power.is_zero();
            }
            ensure!(
                x.is_nilpotent() == powered,
                "is_nilpotent({x}) = {} but powering says {powered}",
                x.is_nilpotent()
            );
        }
        if f.is_nilpotent() && g.is_nilpotent() {
            ensure!(f.add(&g).is_nilpotent(), "sum of nilpotents is not nilpotent");
        }
        if f.is_nilpotent() || g.is_nilpotent() {
            ensure!(f.mul(&g).is_nilpotent(), "nilpotent times element is not nilpotent");
        }
        let nil = nilradical(ring);
        match f.quotient_image(&nil) {
            Ok(img) => ensure!(
                img.is_zero() == f.is_nilpotent(),
                "reduction modulo nil(R) disagrees with is_nilpotent"
            ),
            Err(e) => return Outcome::Fail(format!("quotient by nil(R): {e}")),
        }

        let img = |x: &crate::rees::ReesElem| x.quotient_image(&b);
        match (img(&f), img(&g), img(&f.mul(&g)), img(&f.add(&g))) {
            (Ok(fi), Ok(gi), Ok(prod), Ok(sum)) => {
                ensure!(prod == fi.mul(&gi), "quotient image is not multiplicative");
                ensure!(sum == fi.add(&gi), "quotient image is not additive");
                ensure!(
                    fi.is_zero() == f.star_membership(&b),
                    "quotient kernel is not the star ideal"
                );
            }
            _ => return Outcome::Fail("quotient image failed".into()),
        }
        Outcome::Pass
    }

    fn check_star_ideals(&self, case: &Case) -> Outcome {
        let (Some(fs), [b1, b2, p, k, i, j]) = (self.elems(case, 2), case.shape.as_slice()) else {
            return Outcome::Invalid;
        };
        let ctx = self.ctx();
        let ring = self.ring();
        let (Some(b1), Some(b2)) = (decode_ideal(ring, *b1), decode_ideal(ring, *b2)) else {
            return Outcome::Invalid;
        };
        let f = ctx.elem(fs[0].clone()).unwrap();
        let g = ctx.elem(fs[1].clone()).unwrap();
        let meet = b1.intersect(&b2).unwrap();
        for x in [&f, &g] {
            ensure!(
                x.star_membership(&meet) == (x.star_membership(&b1) && x.star_membership(&b2)),
                "star membership of {x} in {meet} differs from the intersection of memberships"
            );
        }
        if ring.tag() != RingTag::Integers {
            return Outcome::Pass;
        }
        if !b1.is_zero() && !b1.is_unit() {
            match star_membership_by_components(&f, &b1) {
                Ok(by_parts) => ensure!(by_parts == f.star_membership(&b1), "primary components disagree on {f}"),
                Err(e) => return Outcome::Fail(format!("primary components: {e}")),
            }
        }
        let prime = ring.from_i64(*p as i64);
        let pi = Ideal::principal(ring, prime.clone()).unwrap();
        let qi = Ideal::principal(ring, ring.pow(&prime, *k as u64)).unwrap();
        let scale =
            |x: &crate::rees::ReesElem, e: usize| ctx.elem(x.poly().scale(&ring.pow(&prime, e as u64))).unwrap();
        let (f, g) = (scale(&f, *i), scale(&g, *j));
        let fg = f.mul(&g);
        if fg.star_membership(&pi) {
            ensure!(
                f.star_membership(&pi) || g.star_membership(&pi),
                "p* is not prime: {f} * {g}"
            );
        }
        if fg.star_membership(&qi) && !f.star_membership(&qi) {
            ensure!(g.star_membership(&pi), "q* is not p*-primary: {f} * {g}");
        }
        Outcome::Pass
    }

    fn um_row(&self, case: &Case) -> Option<UmRow> {
        let [n] = case.shape.as_slice() else { return None };
        let n = *n;
        if n < 2 || case.polys.len() != 2 * n {
            return None;
        }
        let polys = self.elems(case, 2 * n)?;
        UmRow::new(self.sq.apex(), polys[..n].to_vec(), polys[n..].to_vec()).ok()
    }

    fn check_patch_row(&self, case: &Case) -> Outcome {
        let Some(row) = self.um_row(case) else {
            return Outcome::Invalid;
        };
        let sq = &self.sq;
        let map = |v: &[Poly], f: &dyn Fn(&Poly) -> Poly| v.iter().map(f).collect::<Vec<_>>();
        let r1 = UmRow::new(
            sq.corner1(),
            map(row.entries(), &|x| sq.i1(x)),
            map(row.dual(), &|x| sq.i1(x)),
        );
        let r2 = UmRow::new(
            sq.corner2(),
            map(row.entries(), &|x| sq.eta1(x)),
            map(row.dual(), &|x| sq.eta1(x)),
        );
        let (Ok(r1), Ok(r2)) = (r1, r2) else {
            return Outcome::Fail("corner images are not unimodular".into());
        };
        match patch_row(sq, &r1, &r2) {
            Ok(p) => {
                ensure!(dot(p.entries(), p.dual()).is_one(), "patched dual does not pair to 1");
                ensure!(
                    p.entries() == row.entries() && p.dual() == row.dual(),
                    "patched row differs from the source"
                );
            }
            Err(e) => return Outcome::Fail(format!("patch_row: {e}")),
        }
        Outcome::Pass
    }

    fn check_patch_matrix(&self, case: &Case) -> Outcome {
        let Some((n, cert)) = self.cert_from_case(case, 1) else {
            return Outcome::Invalid;
        };
        let sq = &self.sq;
        let m = cert.replay();
        let m_inv = cert.inverse().replay();
        let eta1 = sq.eta1_map();
        let Ok(cert1) = cert.rehome(sq.corner1()) else {
            return Outcome::Invalid;
        };
        let c1 = CornerMatrix {
            mat: m.clone(),
            inverse: m_inv.clone(),
            cert: Some(cert1),
        };
        let c2 = CornerMatrix {
            mat: eta1.apply_mat(&m),
            inverse: eta1.apply_mat(&m_inv),
            cert: Some(eta1.apply_cert(&cert)),
        };
        for mode in [PatchMode::Gl, PatchMode::Sl, PatchMode::E] {
            let out = match patch_matrix(sq, &c1, &c2, mode) {
                Ok(out) => out,
                Err(e) => return Outcome::Fail(format!("{mode:?}: {e}")),
            };
            ensure!(out.mat == m, "{mode:?}: patched matrix differs from the source");
            ensure!(out.mat.mul(&out.inverse).is_identity(), "{mode:?}: M * M^-1 != I");
            if mode == PatchMode::Sl {
                ensure!(out.mat.det().is_one(), "SL: det != 1");
            }
            if mode == PatchMode::E {
                ensure!(
                    out.level == Some(CertLevel::FullyElementary),
                    "E: level {:?}",
                    out.level
                );
                let Some(c) = out.cert else {
                    return Outcome::Fail("E: no certificate".into());
                };
                let id = Subject::Matrix(Mat::identity(&sq.apex(), n));
                match verify_certificate(&c, &id, &Subject::Matrix(m.clone())) {
                    Ok(v) if v.ok() => {}
                    other => return Outcome::Fail(format!("E: certificate does not verify: {other:?}")),
                }
            }
        }
        Outcome::Pass
    }

    fn check_reduce(&self, case: &Case) -> Outcome {
        let Some(row) = self.um_row(case) else {
            return Outcome::Invalid;
        };
        let ctx = self.ctx();
        let sq = &self.sq;
        let apex = sq.apex();
        let n = row.len();
        let e1 = Subject::Row(apex.unit_vector(n, 0));
        let start = Subject::Row(row.entries().to_vec());
        let rep = match reduce_row_rees_patched(ctx, row.entries(), &self.solvers) {
            Ok(rep) => rep,
            Err(e) => return Outcome::Fail(format!("patched pipeline: {e}")),
        };
        ensure!(rep.status >= CertLevel::CornerCertified, "status {}", rep.status);
        ensure!(
            rep.final_row == apex.unit_vector(n, 0),
            "final row {}",
            format_row(&rep.final_row)
        );
        if ctx.a_is_nil() || ctx.a_is_unit() {
            ensure!(
                rep.status == CertLevel::FullyElementary,
                "status {} for a nil or unit ideal",
                rep.status
            );
        }
        if let Some(c) = &rep.cert_a {
            ensure!(verifies(c, &start, &e1), "cert_A does not verify");
        }
        let corners = [
            (
                &rep.cert_corner1,
                sq.corner1(),
                row.entries().iter().map(|f| sq.i1(f)).collect::<Vec<_>>(),
            ),
            (
                &rep.cert_corner2,
                sq.corner2(),
                row.entries().iter().map(|f| sq.eta1(f)).collect::<Vec<_>>(),
            ),
        ];
        for (k, (cert, amb, image)) in corners.into_iter().enumerate() {
            let Some(cert) = cert else {
                return Outcome::Fail(format!("corner {} certificate missing", k + 1));
            };
            ensure!(
                verifies(cert, &Subject::Row(image), &Subject::Row(amb.unit_vector(n, 0))),
                "corner {} certificate does not verify",
                k + 1
            );
        }
        if rep.status == CertLevel::CornerCertified {
            let Some(m) = &rep.matrix else {
                return Outcome::Fail("patched matrix missing".into());
            };
            ensure!(
                m.left_apply(row.entries()) == apex.unit_vector(n, 0),
                "patched matrix does not reach e1"
            );
        }
        match reduce_row_artinian(&apex, row.entries()) {
            Ok(c) => ensure!(verifies(&c, &start, &e1), "direct certificate does not verify"),
            Err(e) => return Outcome::Fail(format!("direct engine: {e}")),
        }
        Outcome::Pass
    }

    fn check_k1(&self, case: &Case) -> Outcome {
        let Some((n, cert)) = self.cert_from_case(case, 2) else {
            return Outcome::Invalid;
        };
        let r = case.shape[1];
        let apex = self.sq.apex();
        let m = cert.replay();
        let out = match k1_reduce(&apex, &m, &cert.inverse().replay(), r, &self.solvers) {
            Ok(out) => out,
            Err(e) => return Outcome::Fail(format!("k1_reduce: {e}")),
        };
        ensure!(out.reduced.nrows() == r, "reduced size {} != {r}", out.reduced.nrows());
        let id = Subject::Matrix(Mat::identity(&apex, n));
        let s2 = out.sigma2.replay();
        ensure!(
            verifies(&out.sigma2, &id, &Subject::Matrix(s2.clone())),
            "sigma2 does not replay"
        );
        let block = out.reduced.embed(&apex, n);
        ensure!(
            verifies(
                &out.sigma1,
                &Subject::Matrix(s2.mul(&m)),
                &Subject::Matrix(block.clone())
            ),
            "replay(sigma2) * M * replay(sigma1) != diag(M', I)"
        );
        let back = out
            .sigma2
            .inverse()
            .replay()
            .mul(&block)
            .mul(&out.sigma1.inverse().replay());
        ensure!(back == m, "undoing the certificates does not recover M");
        ensure!(apex.unit_inverse(&out.reduced.det()).is_some(), "det M' is not a unit");
        Outcome::Pass
    }

    /// Reads `shape = [n, <skip - 1 extra>, i1, j1, i2, j2, ...]` and one
    /// multiplier per op.
    fn cert_from_case(&self, case: &Case, skip: usize) -> Option<(usize, ElemCert)> {
        let n = *case.shape.first()?;
        let pairs = case.shape.get(skip..)?;
        if pairs.len() != 2 * case.polys.len() || n < 2 {
            return None;
        }
        let ops = pairs
            .chunks(2)
            .zip(&case.polys)
            .map(|(ij, l)| ElemOp {
                i: ij[0],
                j: ij[1],
                lambda: l.clone(),
            })
            .collect();
        Some((n, ElemCert::new(self.sq.apex(), n, ops).ok()?))
    }

    pub fn shrink(&self, case: Case, message: String) -> (Case, String, usize) {
        shrink_with(case, message, |c| self.check(c))
    }
}

/// Greedy shrinking: take the first candidate that still fails, until none
/// does or the step cap is hit.
pub fn shrink_with(mut case: Case, mut message: String, check: impl Fn(&Case) -> Outcome) -> (Case, String, usize) {
    let mut steps = 0;
    'outer: while steps < MAX_SHRINK_STEPS {
        for cand in candidates(&case) {
            if let Outcome::Fail(m) = check(&cand) {
                case = cand;
                message = m;
                steps += 1;
                continue 'outer;
            }
        }
        break;
    }
    (case, message, steps)
}

fn cert_case(mut shape: Vec<usize>, cert: &ElemCert) -> Case {
    for op in cert.ops() {
        shape.extend([op.i, op.j]);
    }
    Case {
        polys: cert.ops().iter().map(|op| op.lambda.clone()).collect(),
        shape,
    }
}

fn verifies(cert: &ElemCert, start: &Subject, expected: &Subject) -> bool {
    matches!(verify_certificate(cert, start, expected), Ok(v) if v.ok())
}

/// Ideals travel in the shape vector as the integer value of their normal
/// generator.
fn ideal_code(b: &Ideal) -> usize {
    let ring = b.ring();
    ring.lift_to_int(b.generator())
        .and_then(|g| usize::try_from(g).ok())
        .unwrap_or(0)
}

fn decode_ideal(ring: RingCtx, code: usize) -> Option<Ideal> {
    Ideal::principal(ring, ring.from_i64(i64::try_from(code).ok()?)).ok()
}

/// Smaller versions of a case: trailing coefficients dropped first, then
/// single coefficients zeroed or halved.
fn candidates(case: &Case) -> Vec<Case> {
    let mut out = Vec::new();
    let with = |k: usize, f: Poly| {
        let mut c = case.clone();
        c.polys[k] = f;
        c
    };
    for (k, f) in case.polys.iter().enumerate() {
        if let Some(d) = f.degree() {
            out.push(with(k, Poly::new(f.ring(), f.var(), f.coeffs()[..d].to_vec())));
        }
    }
    for (k, f) in case.polys.iter().enumerate() {
        for (idx, c) in f.coeffs().iter().enumerate() {
            if f.ring().is_zero(c) {
                continue;
            }
            let mut coeffs = f.coeffs().to_vec();
            coeffs[idx] = f.ring().zero();
            out.push(with(k, Poly::new(f.ring(), f.var(), coeffs.clone())));
            if let Some(h) = halve(f.ring(), c) {
                coeffs[idx] = h;
                out.push(with(k, Poly::new(f.ring(), f.var(), coeffs)));
            }
        }
    }
    out
}

fn halve(ring: RingCtx, c: &RingElem) -> Option<RingElem> {
    let h = match c {
        RingElem::Int(x) => RingElem::Int(x / 2),
        RingElem::Rat(x) => {
            let num = x.numer() / 2;
            RingElem::Rat(BigRational::new(num, x.denom().clone()))
        }
        RingElem::Res(x) => ring.from_bigint(&BigInt::from(x.div_floor(&2))),
    };
    (!ring.is_zero(&h) && &h != c).then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rees(ring: RingCtx, a: i64) -> ReesCtx {
        ReesCtx::new(ring, Ideal::principal(ring, ring.from_i64(a)).unwrap()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("prop40".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_a_few_trials() {
        let ctxs = [
            rees(RingCtx::modular(4).unwrap(), 2),
            rees(RingCtx::prime_field(5).unwrap(), 0),
        ];
        for ctx in &ctxs {
            for suite in Suite::ALL {
                let rep = run_suite(suite, ctx, 11, 5, ExecMode::Sequential).unwrap();
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn integer_contexts_lack_solvers() {
        let ctx = rees(RingCtx::integers(), 2);
        assert!(matches!(
            run_suite(Suite::Reduce, &ctx, 1, 1, ExecMode::Sequential),
            Err(Error::NoCornerSolver(_))
        ));
        assert!(matches!(
            run_suite(Suite::K1, &ctx, 1, 1, ExecMode::Sequential),
            Err(Error::NoRowSolver(_))
        ));
        assert!(run_suite(Suite::StarIdeals, &ctx, 1, 20, ExecMode::Sequential)
            .unwrap()
            .passed());
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let rep = run_suite(Suite::Square, &rees(RingCtx::integers(), 2), 0, 0, ExecMode::Parallel).unwrap();
        assert!(rep.passed());
        assert_eq!(
            rep.to_string(),
            "suite=square ctx=rees{ring=Z,a=ideal[2]} seed=0 trials=0\npassed=0 failed=0\n"
        );
    }

    #[test]
    fn shrinking_minimizes_a_planted_failure() {
        let z = RingCtx::integers();
        let planted = |c: &Case| {
            if c.polys[0].is_zero() {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("{} is nonzero", c.polys[0]))
            }
        };
        let case = Case {
            polys: vec![Poly::from_i64s(z, Var::T, &[8, 6, 4, 2])],
            shape: vec![],
        };
        let (small, msg, steps) = shrink_with(case, String::new(), planted);
        assert_eq!(small.polys[0].to_string(), "1");
        assert_eq!(msg, "1 is nonzero");
        assert_eq!(steps, 6);
    }

    #[test]
    fn invalid_candidates_are_skipped() {
        let ctx = rees(RingCtx::integers(), 2);
        let prop = Property::new(Suite::Square, &ctx).unwrap();
        let z = RingCtx::integers();
        // halving 2t gives t, which is not in A; the property must call it invalid
        let odd = Case {
            polys: vec![Poly::from_i64s(z, Var::T, &[0, 1])],
            shape: vec![0],
        };
        assert_eq!(prop.check(&odd), Outcome::Invalid);
        let ok = Case {
            polys: vec![Poly::from_i64s(z, Var::T, &[3, 2])],
            shape: vec![1],
        };
        assert_eq!(prop.check(&ok), Outcome::Pass);
    }
}
