use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use reeslike::algebra::{dot, Ambient};
use reeslike::error::Error;
use reeslike::exec::ExecMode;
use reeslike::patching::{patch_matrix, patch_row, CertLevel, CornerMatrix, PatchMode, UmRow};
use reeslike::reduction::{
    k1_reduce, reduce_row_artinian, reduce_row_euclidean, reduce_row_rees_patched, ReductionReport, SolverRegistry,
};
use reeslike::rees::ReesCtx;
use reeslike::square::ConductorSquare;
use reeslike::suites::{run_suite, Suite};
use reeslike::text;
use reeslike::verify::verify_certificate;

const DEFAULT_CTX: &str = "rees{ring=Z,a=ideal[2]}";

#[derive(Parser)]
#[command(
    name = "rees",
    version,
    about = "Exact computations in Rees-like algebras R[at, t^2]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded property suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = DEFAULT_CTX)]
        ctx: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// `parallel` or `sequential`.
        #[arg(long, default_value = "parallel")]
        exec: String,
    },
    /// Patch a pair of corner rows or matrices into one over A.
    Patch {
        #[arg(long)]
        ctx: String,
        #[arg(long, value_enum, default_value_t = PatchArg::Row)]
        mode: PatchArg,
        /// Over R[t]: a row file with dual, a matrix file with inverse, or a certificate in `e` mode.
        corner1: PathBuf,
        /// Over (R/a)[u], same format as `corner1`.
        corner2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a unimodular row to e1 with an elementary certificate.
    Reduce {
        /// A context, or `<ring>[t]` in direct mode.
        #[arg(long)]
        ctx: String,
        #[arg(long, value_enum, default_value_t = ReduceArg::Direct)]
        mode: ReduceArg,
        row: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shrink an invertible matrix to a smaller representative of its K1 class.
    K1 {
        /// A context or `<ring>[t]`.
        #[arg(long)]
        ctx: String,
        #[arg(long, default_value_t = 3)]
        target: usize,
        /// Matrix file with an `inverse` section.
        matrix: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate on a start row or matrix and compare.
    Verify {
        cert: PathBuf,
        start: PathBuf,
        expected: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PatchArg {
    Row,
    Gl,
    Sl,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceArg {
    Direct,
    Patched,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClosureViolation(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn level_code(level: CertLevel) -> u8 {
    match level {
        CertLevel::FullyElementary => 0,
        CertLevel::CornerCertified => 3,
        CertLevel::Failed => 1,
    }
}

fn parse_ctx(s: &str) -> Result<ReesCtx, Failure> {
    Ok(text::parse_ctx(s)?)
}

fn check(suite: &str, ctx: &str, seed: u64, trials: u64, exec: &str) -> Result<u8, Failure> {
    let suite: Suite = suite.parse()?;
    let mode: ExecMode = exec.parse()?;
    let report = run_suite(suite, &parse_ctx(ctx)?, seed, trials, mode)?;
    print!("{report}");
    Ok(if report.passed() { 0 } else { 1 })
}

fn read_um_row(amb: &Ambient, path: &Path) -> Result<UmRow, Failure> {
    let file = text::parse_row_file(amb, &read(path)?)?;
    let dual = file
        .dual
        .ok_or_else(|| Failure::Input(format!("{}: patching rows needs a dual", path.display())))?;
    Ok(UmRow::new(amb.clone(), file.row, dual)?)
}

fn read_corner(amb: &Ambient, path: &Path, with_cert: bool) -> Result<CornerMatrix, Failure> {
    let body = read(path)?;
    if with_cert {
        let cert = text::parse_cert(&body)?;
        if cert.ambient() != amb {
            return Err(Failure::Input(format!(
                "{}: certificate is over {}, expected {amb}",
                path.display(),
                cert.ambient()
            )));
        }
        return Ok(CornerMatrix::from_cert(cert));
    }
    let file = text::parse_matrix_file(amb, &body)?;
    let inverse = file
        .inverse
        .ok_or_else(|| Failure::Input(format!("{}: patching matrices needs an inverse", path.display())))?;
    Ok(CornerMatrix {
        mat: file.mat,
        inverse,
        cert: None,
    })
}

fn patch(ctx: &str, mode: PatchArg, c1: &Path, c2: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let sq = ConductorSquare::new(parse_ctx(ctx)?);
    if let PatchArg::Row = mode {
        let r1 = read_um_row(&sq.corner1(), c1)?;
        let r2 = read_um_row(&sq.corner2(), c2)?;
        let patched = patch_row(&sq, &r1, &r2)?;
        emit(out, &text::format_row_file(patched.entries(), Some(patched.dual())))?;
        return Ok(0);
    }
    let (mode, with_cert) = match mode {
        PatchArg::Gl => (PatchMode::Gl, false),
        PatchArg::Sl => (PatchMode::Sl, false),
        _ => (PatchMode::E, true),
    };
    let m1 = read_corner(&sq.corner1(), c1, with_cert)?;
    let m2 = read_corner(&sq.corner2(), c2, with_cert)?;
    let patched = patch_matrix(&sq, &m1, &m2, mode)?;
    let mut body = String::new();
    if let Some(level) = patched.level {
        body.push_str(&format!("status={level}\n"));
    }
    body.push_str(&text::format_matrix_file(&patched.mat, Some(&patched.inverse)));
    if let Some(cert) = &patched.cert {
        body.push_str(&format!("block cert_A\n{cert}end\n"));
    }
    emit(out, &body)?;
    Ok(patched.level.map_or(0, level_code))
}

fn reduce(ctx: &str, mode: ReduceArg, row: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let amb = text::parse_ambient(ctx)?;
    let file = text::parse_row_file(&amb, &read(row)?)?;
    if let Some(dual) = &file.dual {
        if !dot(&file.row, dual).is_one() {
            return Err(Error::NotUnimodular.into());
        }
    }
    let report = match mode {
        ReduceArg::Direct => {
            let cert = if matches!(amb, Ambient::Poly { .. }) && amb.ring().is_field() {
                reduce_row_euclidean(&amb, &file.row)?
            } else if amb.ring().is_artinian() {
                reduce_row_artinian(&amb, &file.row)?
            } else {
                return Err(Error::NoCornerSolver(amb.to_string()).into());
            };
            ReductionReport::direct(&file.row, cert)
        }
        ReduceArg::Patched => {
            let Ambient::Rees(rc) = &amb else {
                return Err(Failure::Input(format!(
                    "patched mode needs a rees{{..}} context, got {amb}"
                )));
            };
            reduce_row_rees_patched(rc, &file.row, &SolverRegistry::default())?
        }
    };
    emit(out, &report.to_string())?;
    Ok(level_code(report.status))
}

fn k1(ctx: &str, target: usize, matrix: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let amb = text::parse_ambient(ctx)?;
    let file = text::parse_matrix_file(&amb, &read(matrix)?)?;
    let inverse = file
        .inverse
        .ok_or_else(|| Failure::Input(format!("{}: k1 needs an inverse section", matrix.display())))?;
    let red = k1_reduce(&amb, &file.mat, &inverse, target, &SolverRegistry::default())?;
    let body = format!(
        "size={} target={target}\nblock reduced\nmatrix\n{}end\nblock sigma1\n{}end\nblock sigma2\n{}end\n",
        file.mat.nrows(),
        red.reduced,
        red.sigma1,
        red.sigma2
    );
    emit(out, &body)?;
    Ok(0)
}

fn verify(cert: &Path, start: &Path, expected: &Path) -> Result<u8, Failure> {
    let cert = text::parse_cert_unchecked(&read(cert)?)?;
    let amb = cert.ambient().clone();
    let start = text::parse_subject(&amb, &read(start)?)?;
    let expected = text::parse_subject(&amb, &read(expected)?)?;
    let verdict = verify_certificate(&cert, &start, &expected)?;
    match verdict.diff {
        None => {
            println!("ok ops={}", cert.len());
            Ok(0)
        }
        Some(diff) => {
            println!("mismatch {diff}");
            Ok(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check {
            suite,
            ctx,
            seed,
            trials,
            exec,
        } => check(suite, ctx, *seed, *trials, exec),
        Command::Patch {
            ctx,
            mode,
            corner1,
            corner2,
            out,
        } => patch(ctx, *mode, corner1, corner2, out.as_deref()),
        Command::Reduce { ctx, mode, row, out } => reduce(ctx, *mode, row, out.as_deref()),
        Command::K1 {
            ctx,
            target,
            matrix,
            out,
        } => k1(ctx, *target, matrix, out.as_deref()),
        Command::Verify { cert, start, expected } => verify(cert, start, expected),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
