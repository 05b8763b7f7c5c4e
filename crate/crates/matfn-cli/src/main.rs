//! Command line front end for the matfn library.
//!
//! Reads a dense real matrix from a file or stdin, runs one of the
//! eigenvalue / Jordan / matrix-function commands, and reports results in
//! plain text or JSON.
//!
//! Exit codes: 0 on success, 1 for usage and input problems, 2 when the
//! requested object does not exist (no real logarithm, singular input,
//! negative eigenvalue for a principal branch, ...), 3 when the numerics
//! fail to converge or to certify a structure.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use matfn::{
    eigenvalues, expm, has_real_log, has_real_sqrt, iss_log, jordan_structure, principal_log,
    principal_root, principal_sqrt, real_jordan_form, real_log, real_sqrt, residual, Branch,
    Error, ExistenceVerdict, FnResult, RealBlockSpec, RealMatrix, ResidualKind, Tolerances,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "matfn",
    version,
    about = "Real matrix functions: eigenvalues, Jordan forms, logarithms, square roots and p-th roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues with multiplicities after clustering
    Eig(CommonArgs),
    /// Complex Jordan block structure as (eigenvalue, size, count) groups
    Jordan(CommonArgs),
    /// Real Jordan form: block list, basis matrix and reconstruction residual
    RealJordan(CommonArgs),
    /// Decide whether a real logarithm exists
    CheckLog(CommonArgs),
    /// Decide whether a real square root exists
    CheckSqrt(CommonArgs),
    /// Matrix logarithm on the chosen branch
    Log(BranchedArgs),
    /// Matrix square root on the chosen branch
    Sqrt(BranchedArgs),
    /// Principal p-th root
    Root(RootArgs),
    /// Matrix exponential
    Exp(CommonArgs),
    /// Principal logarithm by inverse scaling and squaring
    IssLog(CommonArgs),
    /// Check a candidate X against A: exp(X) = A, X^2 = A or X^p = A
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file with the matrix; "-" or omitted reads stdin
    file: Option<PathBuf>,

    /// Override the eigenvalue clustering tolerance
    #[arg(long, value_name = "TOL")]
    tol_cluster: Option<f64>,

    /// Override the rank decision tolerance
    #[arg(long, value_name = "TOL")]
    tol_rank: Option<f64>,

    /// Residual acceptance threshold
    #[arg(long, value_name = "TOL", default_value = "1e-10")]
    tol_residual: f64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result matrix to this file as dense text
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BranchedArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Which branch to compute
    #[arg(long, value_enum, default_value_t = BranchArg::Principal)]
    branch: BranchArg,
}

#[derive(Args)]
struct RootArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Root order (at least 2)
    #[arg(short, long, value_name = "P")]
    p: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// File with the original matrix A
    a: PathBuf,

    /// File with the candidate function value X
    x: PathBuf,

    /// Which equation to check
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Root order when --kind root
    #[arg(short, long, value_name = "P", default_value_t = 2)]
    p: u32,

    /// Residual acceptance threshold
    #[arg(long, value_name = "TOL", default_value = "1e-10")]
    tol_residual: f64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    /// Unique branch with spectrum in the principal domain
    Principal,
    /// Any real branch; handles paired negative eigenvalues
    Any,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Log,
    Sqrt,
    Root,
}

// ---------------------------------------------------------------------------
// Error handling and exit codes.

enum CliError {
    Usage(String),
    Math(Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(e) => match e {
                Error::NoRealLog { .. }
                | Error::NoRealSqrt { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::ParityViolation { .. }
                | Error::Singular
                | Error::NotUnipotent { .. } => 2,
                Error::NonConvergence { .. }
                | Error::StructureInconsistent { .. }
                | Error::ChainFailure
                | Error::BudgetExceeded { .. } => 3,
                Error::NotFinite | Error::ShapeMismatch { .. } => 1,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eig(args) => cmd_eig(&args),
        Command::Jordan(args) => cmd_jordan(&args),
        Command::RealJordan(args) => cmd_real_jordan(&args),
        Command::CheckLog(args) => cmd_check(&args, true),
        Command::CheckSqrt(args) => cmd_check(&args, false),
        Command::Log(args) => cmd_log(&args),
        Command::Sqrt(args) => cmd_sqrt(&args),
        Command::Root(args) => cmd_root(&args),
        Command::Exp(args) => cmd_exp(&args),
        Command::IssLog(args) => cmd_iss_log(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

// ---------------------------------------------------------------------------
// Input and output plumbing.

fn read_matrix(file: Option<&Path>) -> Result<RealMatrix, CliError> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_matrix(&text)
}

/// Accepts dense text (`n` followed by `n * n` numbers in row-major order)
/// or a JSON object `{"n": ..., "rows": [[...], ...]}`.
fn parse_matrix(text: &str) -> Result<RealMatrix, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| CliError::Usage(format!("invalid JSON matrix: {e}")))?;
        let n = v
            .get("n")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| CliError::Usage("JSON matrix needs an integer \"n\"".into()))?
            as usize;
        let rows = v
            .get("rows")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| CliError::Usage("JSON matrix needs an array \"rows\"".into()))?;
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| CliError::Usage("each row must be an array".into()))?;
            for e in row {
                data.push(e.as_f64().ok_or_else(|| {
                    CliError::Usage(format!("non-numeric matrix entry: {e}"))
                })?);
            }
        }
        if rows.len() != n || data.len() != n * n {
            return Err(CliError::Usage(format!(
                "JSON matrix claims n={n} but rows do not match"
            )));
        }
        return RealMatrix::try_square(n, &data).map_err(CliError::Math);
    }

    let mut tokens = trimmed.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| CliError::Usage("empty input".into()))?
        .parse()
        .map_err(|_| CliError::Usage("first token must be the dimension n".into()))?;
    let data: Vec<f64> = tokens
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("invalid number: {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    if data.len() != n * n {
        return Err(CliError::Usage(format!(
            "expected {} entries for n={n}, found {}",
            n * n,
            data.len()
        )));
    }
    RealMatrix::try_square(n, &data).map_err(CliError::Math)
}

/// Dense text form: dimension line, then one row per line at full precision.
fn dense_text(m: &RealMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.n());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:.16e}", m[(i, j)])).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

fn write_output(path: &Path, m: &RealMatrix) -> Result<(), CliError> {
    fs::write(path, dense_text(m))
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn matrix_rows_json(m: &RealMatrix) -> serde_json::Value {
    let rows: Vec<Vec<f64>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)]).collect())
        .collect();
    json!(rows)
}

fn fmt_complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:.16e}")
    } else if im < 0.0 {
        format!("{re:.16e}-{:.16e}i", -im)
    } else {
        format!("{re:.16e}+{im:.16e}i")
    }
}

fn tolerances(args: &CommonArgs) -> Tolerances<f64> {
    let mut t = Tolerances::default().with_residual(args.tol_residual);
    if let Some(c) = args.tol_cluster {
        t = t.with_cluster(c);
    }
    if let Some(r) = args.tol_rank {
        t = t.with_rank(r);
    }
    t
}

fn print_matrix(m: &RealMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:.16e}", m[(i, j)])).collect();
        println!("{}", row.join(" "));
    }
}

// ---------------------------------------------------------------------------
// Commands.

fn cmd_eig(args: &CommonArgs) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let tol = tolerances(args);
    let start = Instant::now();
    let eigs = eigenvalues(&a, &tol)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;

    match args.format {
        Format::Text => {
            println!("matfn eig n={}", a.n());
            for e in &eigs {
                println!(
                    "lambda = {}  multiplicity = {}",
                    fmt_complex(e.value.re, e.value.im),
                    e.multiplicity
                );
            }
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            let list: Vec<_> = eigs
                .iter()
                .map(|e| json!({"re": e.value.re, "im": e.value.im, "multiplicity": e.multiplicity}))
                .collect();
            print_json(json!({
                "command": "eig", "n": a.n(), "eigenvalues": list, "time_ms": ms
            }));
        }
    }
    Ok(())
}

fn cmd_jordan(args: &CommonArgs) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let tol = tolerances(args);
    let start = Instant::now();
    let s = jordan_structure(&a, &tol)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let groups = s.grouped();

    match args.format {
        Format::Text => {
            println!("matfn jordan n={}", a.n());
            for (value, size, count) in &groups {
                println!("({}, {}, {})", fmt_complex(value.re, value.im), size, count);
            }
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            let list: Vec<_> = groups
                .iter()
                .map(|(v, size, count)| {
                    json!({"re": v.re, "im": v.im, "size": size, "count": count})
                })
                .collect();
            print_json(json!({
                "command": "jordan", "n": a.n(), "blocks": list, "time_ms": ms
            }));
        }
    }
    Ok(())
}

fn cmd_real_jordan(args: &CommonArgs) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let tol = tolerances(args);
    let start = Instant::now();
    let form = real_jordan_form(&a, &tol)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;

    match args.format {
        Format::Text => {
            println!("matfn real-jordan n={}", a.n());
            for b in &form.structure.blocks {
                match *b {
                    RealBlockSpec::Single { eigenvalue, size } => {
                        println!("single lambda = {eigenvalue:.16e}  size = {size}");
                    }
                    RealBlockSpec::Pair { lambda, mu, half } => {
                        println!("pair lambda = {lambda:.16e}  mu = {mu:.16e}  half = {half}");
                    }
                }
            }
            println!("residual = {:.3e}", form.residual);
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            let list: Vec<_> = form
                .structure
                .blocks
                .iter()
                .map(|b| match *b {
                    RealBlockSpec::Single { eigenvalue, size } => {
                        json!({"type": "single", "lambda": eigenvalue, "size": size})
                    }
                    RealBlockSpec::Pair { lambda, mu, half } => {
                        json!({"type": "pair", "lambda": lambda, "mu": mu, "half": half})
                    }
                })
                .collect();
            print_json(json!({
                "command": "real-jordan", "n": a.n(), "blocks": list,
                "residual": form.residual,
                "p": matrix_rows_json(&form.p),
                "time_ms": ms
            }));
        }
    }
    // The transformation matrix is the computed artifact worth exporting.
    if let Some(path) = &args.output {
        write_output(path, &form.p)?;
    }
    Ok(())
}

fn verdict_word(v: &ExistenceVerdict) -> &'static str {
    if v.exists {
        "yes"
    } else if v.undecided {
        "undecided"
    } else {
        "no"
    }
}

fn cmd_check(args: &CommonArgs, log: bool) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let tol = tolerances(args);
    let start = Instant::now();
    let v = if log { has_real_log(&a, &tol)? } else { has_real_sqrt(&a, &tol)? };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let name = if log { "check-log" } else { "check-sqrt" };

    match args.format {
        Format::Text => {
            println!("matfn {name} n={}", a.n());
            println!("verdict = {}", verdict_word(&v));
            println!("invertible = {}", v.invertible);
            for ob in &v.offending {
                println!("offending {ob}");
            }
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            let offending: Vec<_> = v
                .offending
                .iter()
                .map(|ob| json!({"eigenvalue": ob.eigenvalue, "size": ob.size, "count": ob.count}))
                .collect();
            print_json(json!({
                "command": name, "n": a.n(),
                "verdict": verdict_word(&v),
                "exists": v.exists,
                "invertible": v.invertible,
                "undecided": v.undecided,
                "offending": offending,
                "time_ms": ms
            }));
        }
    }
    Ok(())
}

fn domain_name(kind: ResidualKind) -> &'static str {
    match kind {
        ResidualKind::Log => "strip",
        ResidualKind::Sqrt => "half-plane",
        ResidualKind::Root(_) => "sector",
    }
}

/// Shared reporting for log / sqrt / root results.
fn report_fn_result(
    args: &CommonArgs,
    command: &str,
    n: usize,
    res: &FnResult<f64>,
    kind: ResidualKind,
    ms: f64,
) -> Result<(), CliError> {
    let branch = match res.branch {
        Branch::Principal => "principal",
        Branch::Constructed => "constructed",
    };
    match args.format {
        Format::Text => {
            println!("matfn {command} n={n}");
            println!("branch = {branch}");
            println!("domain = {}  domain_ok = {}", domain_name(kind), res.domain_ok);
            println!("residual = {:.3e}", res.residual);
            if res.residual > args.tol_residual {
                println!("warning = residual-above-tolerance");
            }
            if res.near_branch_cut {
                println!("warning = near-branch-cut");
            }
            print_matrix(&res.value);
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            print_json(json!({
                "command": command, "n": n,
                "branch": branch,
                "domain": domain_name(kind),
                "domain_ok": res.domain_ok,
                "residual": res.residual,
                "residual_ok": res.residual <= args.tol_residual,
                "near_branch_cut": res.near_branch_cut,
                "value": matrix_rows_json(&res.value),
                "time_ms": ms
            }));
        }
    }
    if let Some(path) = &args.output {
        write_output(path, &res.value)?;
    }
    Ok(())
}

fn cmd_log(args: &BranchedArgs) -> Result<(), CliError> {
    let a = read_matrix(args.common.file.as_deref())?;
    let tol = tolerances(&args.common);
    let start = Instant::now();
    let res = match args.branch {
        BranchArg::Principal => principal_log(&a, &tol)?,
        BranchArg::Any => real_log(&a, &tol)?,
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    report_fn_result(&args.common, "log", a.n(), &res, ResidualKind::Log, ms)
}

fn cmd_sqrt(args: &BranchedArgs) -> Result<(), CliError> {
    let a = read_matrix(args.common.file.as_deref())?;
    let tol = tolerances(&args.common);
    let start = Instant::now();
    let res = match args.branch {
        BranchArg::Principal => principal_sqrt(&a, &tol)?,
        BranchArg::Any => real_sqrt(&a, &tol)?,
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    report_fn_result(&args.common, "sqrt", a.n(), &res, ResidualKind::Sqrt, ms)
}

fn cmd_root(args: &RootArgs) -> Result<(), CliError> {
    if args.p < 2 {
        return Err(CliError::Usage("root order -p must be at least 2".into()));
    }
    let a = read_matrix(args.common.file.as_deref())?;
    let tol = tolerances(&args.common);
    let start = Instant::now();
    let res = principal_root(&a, args.p, &tol)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    report_fn_result(&args.common, "root", a.n(), &res, ResidualKind::Root(args.p), ms)
}

fn cmd_exp(args: &CommonArgs) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let start = Instant::now();
    let e = expm(&a);
    let ms = start.elapsed().as_secs_f64() * 1e3;

    match args.format {
        Format::Text => {
            println!("matfn exp n={}", a.n());
            print_matrix(&e);
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            print_json(json!({
                "command": "exp", "n": a.n(), "value": matrix_rows_json(&e), "time_ms": ms
            }));
        }
    }
    if let Some(path) = &args.output {
        write_output(path, &e)?;
    }
    Ok(())
}

fn cmd_iss_log(args: &CommonArgs) -> Result<(), CliError> {
    let a = read_matrix(args.file.as_deref())?;
    let tol = tolerances(args);
    let start = Instant::now();
    let report = iss_log(&a, 40, &tol)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let res = residual(&a, &report.value, ResidualKind::Log);

    match args.format {
        Format::Text => {
            println!("matfn iss-log n={}", a.n());
            println!("square_roots = {}", report.k);
            println!("series_terms = {}", report.series_terms);
            println!("closeness = {:.3e}", report.final_closeness);
            println!("residual = {res:.3e}");
            if res > args.tol_residual {
                println!("warning = residual-above-tolerance");
            }
            print_matrix(&report.value);
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            print_json(json!({
                "command": "iss-log", "n": a.n(),
                "square_roots": report.k,
                "series_terms": report.series_terms,
                "closeness": report.final_closeness,
                "residual": res,
                "residual_ok": res <= args.tol_residual,
                "value": matrix_rows_json(&report.value),
                "time_ms": ms
            }));
        }
    }
    if let Some(path) = &args.output {
        write_output(path, &report.value)?;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    if args.kind == KindArg::Root && args.p < 2 {
        return Err(CliError::Usage("root order -p must be at least 2".into()));
    }
    let a = read_matrix(Some(args.a.as_path()))?;
    let x = read_matrix(Some(args.x.as_path()))?;
    if a.n() != x.n() {
        return Err(CliError::Usage(format!(
            "dimension mismatch: A is {}x{} but X is {}x{}",
            a.n(),
            a.n(),
            x.n(),
            x.n()
        )));
    }
    let kind = match args.kind {
        KindArg::Log => ResidualKind::Log,
        KindArg::Sqrt => ResidualKind::Sqrt,
        KindArg::Root => ResidualKind::Root(args.p),
    };
    let start = Instant::now();
    let res = residual(&a, &x, kind);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let pass = res <= args.tol_residual;

    match args.format {
        Format::Text => {
            println!("matfn verify n={}", a.n());
            println!("residual = {res:.3e}");
            println!("verdict = {}", if pass { "pass" } else { "fail" });
            println!("time_ms = {ms:.3}");
        }
        Format::Json => {
            print_json(json!({
                "command": "verify", "n": a.n(),
                "residual": res,
                "verdict": if pass { "pass" } else { "fail" },
                "time_ms": ms
            }));
        }
    }
    if pass {
        Ok(())
    } else {
        // A failed verification is a mathematical "no", not a crash.
        std::process::exit(2);
    }
}

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("JSON serialization"));
}
