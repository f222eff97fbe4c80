use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramyip::algebra::{parse_polyx, EvalPoint, ParamRat, PolyX};
use ramyip::delta::check_delta_specialization;
use ramyip::groupcheck::{phi_c_ball, translation_lengths, walk_bijection, Lemma};
use ramyip::hecke::check_operator_identities;
use ramyip::parallel::Exec;
use ramyip::ramyip::{RYSystem, SystemKind, DEFAULT_WALK_BUDGET};
use ramyip::relations::check_relations;
use ramyip::roots::SubsystemTag;
use ramyip::tables::{spec_rule, RyType};
use ramyip::verify::{eigencheck_system, mu_box, verify_ry_proposition, with_point, Mode};
use ramyip::weyl::GroupTag;
use serde_json::{json, Value};

mod job;

use job::{parse_mu, Failure};

#[derive(Parser)]
#[command(name = "ramyip", version, about = "Exact non-symmetric Koornwinder and Ram-Yip polynomials")]
struct Cli {
    /// Worker threads (overrides RAMYIP_WORKERS; 1 runs sequentially).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute E_mu by the alcove-walk sum.
    Compute(ComputeArgs),
    /// Apply a named specialization rule to a polynomial file.
    Specialize(SpecializeArgs),
    /// Check a proposition over a set of weights.
    Verify(VerifyArgs),
    /// Check the weight-function specializations.
    DeltaCheck(DeltaArgs),
    /// Run a small battery of checks.
    Selftest(FormatArg),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ModeArg {
    Exact,
    Eval,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EvalOpts {
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Seed of the evaluation points (required in eval mode).
    #[arg(long)]
    seed: Option<u64>,
    /// Number of evaluation points.
    #[arg(long, default_value_t = 3)]
    points: usize,
}

impl EvalOpts {
    fn mode(&self) -> Result<Mode, Failure> {
        match (self.mode, self.seed) {
            (ModeArg::Exact, _) => Ok(Mode::Exact),
            (ModeArg::Eval, Some(seed)) if self.points > 0 => Ok(Mode::Eval { points: self.points, seed }),
            (ModeArg::Eval, Some(_)) => Err(Failure::domain("--points must be positive")),
            (ModeArg::Eval, None) => Err(Failure::domain("eval mode needs --seed")),
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// cc, c-ry, b-ry or d-ry.
    #[arg(long)]
    system: SystemKind,
    #[arg(long)]
    n: usize,
    /// Comma-separated integer coordinates; missing trailing coordinates are 0.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Specialization rule applied to the parameters before summing (Table 1 or 2 name).
    #[arg(long)]
    rule: Option<String>,
    #[command(flatten)]
    eval: EvalOpts,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Longest reduced word accepted.
    #[arg(long, default_value_t = DEFAULT_WALK_BUDGET)]
    budget: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpecializeArgs {
    #[arg(long)]
    rule: String,
    /// Polynomial JSON file, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Prop {
    RyB,
    RyC,
    RyD,
    /// E_mu of --system is a common eigenvector of the Y operators.
    Eigen,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    prop: Prop,
    /// System for `--prop eigen`.
    #[arg(long, default_value = "cc")]
    system: SystemKind,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "mu_box")]
    mu: Option<String>,
    /// Check every mu with coordinates in -B..B.
    #[arg(long)]
    mu_box: Option<i32>,
    #[command(flatten)]
    eval: EvalOpts,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct DeltaArgs {
    /// A Table 1 subsystem (B, Bv, C, Cv, BC, D, BC_C, Cv_BC, Bv_B) or `all`.
    #[arg(long, default_value = "all")]
    subsystem: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    cutoff: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// One line of a sweep: a label and its JSON report.
struct Line {
    check: String,
    passed: bool,
    report: Value,
}

fn line<T: serde::Serialize>(check: impl Into<String>, passed: bool, report: &T) -> Line {
    Line { check: check.into(), passed, report: serde_json::to_value(report).expect("reports serialize") }
}

fn summary(lines: &[Line]) -> String {
    let mut rows: Vec<(String, usize, usize)> = Vec::new();
    for l in lines {
        match rows.iter_mut().find(|r| r.0 == l.check) {
            Some(r) => {
                r.1 += 1;
                r.2 += l.passed as usize;
            }
            None => rows.push((l.check.clone(), 1, l.passed as usize)),
        }
    }
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(5).max(5);
    let mut s = format!("{:<width$}  {:>6}  {:>6}  {:>6}\n", "check", "total", "pass", "fail");
    for (c, t, p) in &rows {
        let _ = writeln!(s, "{c:<width$}  {t:>6}  {p:>6}  {:>6}", t - p);
    }
    s
}

fn emit(lines: &[Line], format: Format) -> Result<bool, Failure> {
    let mut out = io::stdout().lock();
    if format == Format::Json {
        for l in lines {
            writeln!(out, "{}", l.report).map_err(Failure::io)?;
        }
        eprint!("{}", summary(lines));
    } else {
        write!(out, "{}", summary(lines)).map_err(Failure::io)?;
    }
    Ok(lines.iter().all(|l| l.passed))
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(Failure::io),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(Failure::io),
    }
}

fn system(kind: SystemKind, n: usize, rule: Option<&str>) -> Result<RYSystem, Failure> {
    if n < 2 {
        return Err(Failure::domain("rank n must be at least 2"));
    }
    Ok(match rule {
        Some(r) => RYSystem::specialized(kind, n, &spec_rule(r)?),
        None => RYSystem::new(kind, n),
    })
}

fn compute(a: &ComputeArgs, exec: &Exec) -> Result<bool, Failure> {
    let mode = a.eval.mode()?;
    let mu = parse_mu(&a.mu, a.n)?;
    let sys = system(a.system, a.n, a.rule.as_deref())?;
    let mut text = String::new();
    match mode {
        Mode::Exact => {
            let e = sys.nonsymmetric_poly(&mu, a.budget, exec)?;
            match a.format {
                Format::Text => {
                    let _ = writeln!(text, "{}", e.poly);
                }
                Format::Json => {
                    let v = json!({
                        "system": e.system.name(),
                        "rule": e.rule,
                        "n": a.n,
                        "mu": e.mu,
                        "word": e.word.to_string(),
                        "poly": e.poly,
                    });
                    let _ = writeln!(text, "{v}");
                }
            }
        }
        Mode::Eval { points, seed } => {
            for k in 0..points {
                let (pt, p) = with_point(seed, k, |pt: &EvalPoint| {
                    Ok((pt.clone(), sys.nonsymmetric_poly_eval(&mu, pt, a.budget, exec)?))
                })?;
                match a.format {
                    Format::Text => {
                        let _ = writeln!(text, "point {k}: {p}");
                    }
                    Format::Json => {
                        let v = json!({ "seed": seed, "point": k, "params": pt.to_string(), "value": p });
                        let _ = writeln!(text, "{v}");
                    }
                }
            }
        }
    }
    write_output(&a.out, &text)?;
    Ok(true)
}

/// Accepts a bare polynomial or a `compute --format json` record.
fn read_polynomial(path: &PathBuf) -> Result<PolyX<ParamRat>, Failure> {
    let mut raw = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut raw).map_err(Failure::io)?;
    } else {
        raw = std::fs::read_to_string(path).map_err(Failure::io)?;
    }
    let v: Value = serde_json::from_str(&raw).map_err(|e| Failure::domain(format!("input is not JSON: {e}")))?;
    let poly = match v.get("poly") {
        Some(p) => p.to_string(),
        None => raw,
    };
    Ok(parse_polyx(&poly)?)
}

fn specialize(a: &SpecializeArgs) -> Result<bool, Failure> {
    let rule = spec_rule(&a.rule)?;
    let p = read_polynomial(&a.input)?.substitute_params(&rule.images())?;
    let text = match a.format {
        Format::Json => format!("{}\n", serde_json::to_string(&p).expect("polynomials serialize")),
        Format::Text => format!("{p}\n"),
    };
    write_output(&a.out, &text)?;
    Ok(true)
}

fn weights(n: usize, mu: &Option<String>, mu_box_b: Option<i32>) -> Result<Vec<Vec<i32>>, Failure> {
    if n < 2 {
        return Err(Failure::domain("rank n must be at least 2"));
    }
    match (mu, mu_box_b) {
        (Some(m), None) => Ok(vec![parse_mu(m, n)?]),
        (None, Some(b)) if b >= 0 => Ok(mu_box(n, b)),
        (None, Some(_)) => Err(Failure::domain("--mu-box must be non-negative")),
        _ => Err(Failure::domain("give --mu or --mu-box")),
    }
}

fn verify(a: &VerifyArgs, exec: &Exec) -> Result<bool, Failure> {
    let mode = a.eval.mode()?;
    let mus = weights(a.n, &a.mu, a.mu_box)?;
    let mut lines = Vec::with_capacity(mus.len());
    for mu in &mus {
        let l = match a.prop {
            Prop::RyB | Prop::RyC | Prop::RyD => {
                let ty = match a.prop {
                    Prop::RyB => RyType::B,
                    Prop::RyC => RyType::C,
                    _ => RyType::D,
                };
                let r = verify_ry_proposition(ty, a.n, mu, mode, exec)?;
                line(format!("ry-{}", ty.name().to_lowercase()), r.passed(), &r)
            }
            Prop::Eigen => {
                let sys = system(a.system, a.n, None)?;
                let r = eigencheck_system(&sys, mu, mode, exec)?;
                line(format!("eigen {}", a.system.name()), r.status == "pass", &r)
            }
        };
        lines.push(l);
    }
    emit(&lines, a.format)
}

fn delta_check(a: &DeltaArgs, exec: &Exec) -> Result<bool, Failure> {
    let tags: Vec<SubsystemTag> = if a.subsystem.eq_ignore_ascii_case("all") {
        SubsystemTag::TABLE.to_vec()
    } else {
        let t = SubsystemTag::from_name(&a.subsystem)
            .filter(|t| SubsystemTag::TABLE.contains(t))
            .ok_or_else(|| Failure::domain(format!("unknown subsystem {:?}", a.subsystem)))?;
        vec![t]
    };
    if a.n < 2 {
        return Err(Failure::domain("rank n must be at least 2"));
    }
    let mut lines = Vec::new();
    for t in tags {
        let r = check_delta_specialization(t, a.n, a.cutoff, exec)?;
        lines.push(line("delta", r.passed(), &r));
    }
    emit(&lines, a.format)
}

fn selftest(a: &FormatArg, exec: &Exec) -> Result<bool, Failure> {
    let mut lines = Vec::new();
    for ty in RyType::ALL {
        for mu in mu_box(2, 1) {
            let r = verify_ry_proposition(ty, 2, &mu, Mode::Exact, exec)?;
            lines.push(line(format!("ry-{}", ty.name().to_lowercase()), r.passed(), &r));
        }
    }
    for t in SubsystemTag::TABLE {
        let r = check_delta_specialization(t, 2, 1, exec)?;
        lines.push(line("delta", r.passed(), &r));
    }
    let sys = RYSystem::new(SystemKind::CC, 2);
    for mu in [[1, 0], [0, 1], [-1, 0]] {
        let r = eigencheck_system(&sys, &mu, Mode::Eval { points: 1, seed: 1 }, exec)?;
        lines.push(line("eigen cc", r.status == "pass", &r));
    }
    let r = check_operator_identities(2, 1)?;
    lines.push(line("hecke", r.passed(), &r));
    let r = check_relations(GroupTag::W, 2)?;
    lines.push(line("relations W", r.passed(), &r));
    for tag in [GroupTag::CvRY, GroupTag::BvRY] {
        let r = check_relations(tag, 2)?;
        lines.push(line("relations errata", r.errata_consistent(), &r));
    }
    let r = phi_c_ball(2, 4)?;
    lines.push(line("phi^C", r.passed(), &r));
    for r in translation_lengths(2)? {
        lines.push(line("t(e_i) words", r.passed(), &r));
    }
    for mu in mu_box(2, 1) {
        let r = walk_bijection(Lemma::C, 2, &mu)?;
        lines.push(line("walk map C", r.passed(), &r));
    }
    emit(&lines, a.format)
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let exec = match cli.workers {
        Some(k) => Exec::with_workers(k),
        None => Exec::from_env(),
    };
    match &cli.cmd {
        Cmd::Compute(a) => compute(a, &exec),
        Cmd::Specialize(a) => specialize(a),
        Cmd::Verify(a) => verify(a, &exec),
        Cmd::DeltaCheck(a) => delta_check(a, &exec),
        Cmd::Selftest(a) => selftest(a, &exec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            ExitCode::from(2)
        }
    }
}
