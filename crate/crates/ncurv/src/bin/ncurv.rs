//! Command-line front end: compute invariants for a representation spec,
//! run the verification suites, sweep parameters, and inspect the catalog.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncurv::catalog::{self, CatalogEntry};
use ncurv::cpmap::{defect_rank, defect_trace};
use ncurv::densify::densify;
use ncurv::error::Error;
use ncurv::invariants::{curvature, euler, hierarchy_report, pure_rank, InvConfig};
use ncurv::operators::spec::parse_spec_value;
use ncurv::operators::RowContraction;
use ncurv::random::{random_contraction, seeded_rng};
use ncurv::report::{
    compute_report, csv_rows, verify_entry_out, BackendChoice, OutputFormat, Report,
    RunConfig, VerifyEntryOut, VerifyReport, SCHEMA_VERSION,
};
use ncurv::word::Word;
use ncurv::{Backend, Exact, F64};
use rand::Rng;

#[derive(Parser)]
#[command(
    name = "ncurv",
    version,
    about = "Curvature and Euler-characteristic invariants of row contractions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Largest defect level k to compute.
    #[arg(long, global = true, default_value_t = 12)]
    kmax: usize,

    /// Arithmetic backend.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,

    /// Float-backend rank tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Convergence threshold on consecutive normalized values.
    #[arg(long, global = true, default_value_t = 1e-6)]
    gap: f64,

    /// Basis cap (overrides the NCURV_BASIS_CAP environment variable).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for compute reports and sweeps.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the defect sequence and invariant estimates for a spec file.
    Compute { spec: PathBuf },
    /// Run a verification suite: catalog closed forms, the hierarchy
    /// property, or oracle cross-checks.
    Verify { suite: SuiteArg },
    /// Sweep an entry parameter and emit one CSV row per grid point.
    Sweep {
        entry: String,
        /// Comma-separated grid values; each entry has a default grid.
        #[arg(long)]
        grid: Option<String>,
    },
    /// List or show catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Paper,
    Hierarchy,
    Oracle,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { name: String },
}

fn exit_code_of(e: &Error) -> u8 {
    match e {
        Error::Spec(_) => 2,
        Error::ResourceCap { .. } | Error::Overflow(_) => 4,
        _ => 3,
    }
}

fn resolve_cap(cli: &Cli) -> usize {
    if let Some(c) = cli.cap {
        return c;
    }
    if let Ok(v) = std::env::var("NCURV_BASIS_CAP") {
        if let Ok(c) = v.parse::<usize>() {
            return c;
        }
    }
    200_000
}

fn run_config(cli: &Cli) -> RunConfig {
    RunConfig {
        k_max: cli.kmax.max(1),
        backend: match cli.backend {
            BackendArg::Exact => BackendChoice::Exact,
            BackendArg::Float => BackendChoice::Float,
        },
        rank_tolerance: cli.tol,
        convergence_gap: cli.gap,
        basis_cap: resolve_cap(cli),
        format: match cli.format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        },
        seed: cli.seed,
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.backend {
        BackendArg::Exact => run::<Exact>(&cli),
        BackendArg::Float => run::<F64>(&cli),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_of(&e))
        }
    }
}

fn run<S: Backend>(cli: &Cli) -> Result<u8, Error> {
    let rc = run_config(cli);
    let cfg = rc.inv_config();
    match &cli.cmd {
        Cmd::Compute { spec } => cmd_compute::<S>(cli, &rc, &cfg, spec),
        Cmd::Verify { suite } => cmd_verify::<S>(cli, &rc, &cfg, *suite),
        Cmd::Sweep { entry, grid } => cmd_sweep::<S>(cli, &rc, &cfg, entry, grid.as_deref()),
        Cmd::Catalog { action } => cmd_catalog::<S>(cli, action),
    }
}

fn cmd_compute<S: Backend>(
    cli: &Cli,
    rc: &RunConfig,
    _cfg: &InvConfig,
    spec: &PathBuf,
) -> Result<u8, Error> {
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Spec(format!("cannot read {}: {e}", spec.display())))?;
    let doc: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Spec(format!("invalid JSON: {e}")))?;
    let a: RowContraction<S> = parse_spec_value(&doc, cli.tol)?;
    if let RowContraction::Dense(d) = &a {
        d.require_contractive(cli.tol)?;
    }
    let report = compute_report(doc, &a, rc)?;
    emit(cli, &render_report(&report, cli.format)?)?;
    Ok(0)
}

fn render_report(report: &Report, format: FormatArg) -> Result<String, Error> {
    match format {
        FormatArg::Json => serde_json::to_string_pretty(report)
            .map_err(|e| Error::InvalidParameter(format!("serialization: {e}"))),
        FormatArg::Csv => {
            let rows: Vec<Vec<String>> = report
                .levels
                .iter()
                .map(|l| {
                    vec![
                        l.k.to_string(),
                        l.trace.repr.clone(),
                        format!("{}", l.trace.re),
                        l.rank.to_string(),
                    ]
                })
                .collect();
            Ok(csv_rows(&["k", "trace", "trace_float", "rank"], &rows))
        }
    }
}

fn cmd_verify<S: Backend>(
    cli: &Cli,
    rc: &RunConfig,
    cfg: &InvConfig,
    suite: SuiteArg,
) -> Result<u8, Error> {
    let start = std::time::Instant::now();
    let (suite_name, entries) = match suite {
        SuiteArg::Paper => ("paper", verify_paper::<S>(cfg)?),
        SuiteArg::Hierarchy => ("hierarchy", verify_hierarchy::<S>(cfg, rc.seed)?),
        SuiteArg::Oracle => ("oracle", verify_oracle::<S>(cfg)?),
    };
    let mut ok = true;
    for e in &entries {
        match e.status.as_str() {
            "pass" => println!("[PASS] {}", e.name),
            "skipped" => println!("[SKIP] {} (not realizable on this backend)", e.name),
            _ => {
                ok = false;
                println!("[FAIL] {}", e.name);
                for c in &e.checks {
                    if !c.pass {
                        println!(
                            "       {}: expected {} got [{}, {}]",
                            c.label, c.expected, c.computed, c.upper_bound
                        );
                    }
                }
            }
        }
    }
    if let Some(_) = &cli.out {
        let report = VerifyReport {
            schema_version: SCHEMA_VERSION,
            suite: suite_name.into(),
            backend: S::TAG.into(),
            entries,
            ok,
            timing_ms: start.elapsed().as_secs_f64() * 1e3,
        };
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| Error::InvalidParameter(format!("serialization: {e}")))?;
        emit(cli, &text)?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn verify_paper<S: Backend>(cfg: &InvConfig) -> Result<Vec<VerifyEntryOut>, Error> {
    let results = catalog::verify_catalog::<S>(cfg)?;
    Ok(results
        .into_iter()
        .map(|(name, v)| match v {
            Some(v) => verify_entry_out(&v),
            None => VerifyEntryOut { name, status: "skipped".into(), checks: vec![] },
        })
        .collect())
}

fn verify_hierarchy<S: Backend>(
    cfg: &InvConfig,
    seed: u64,
) -> Result<Vec<VerifyEntryOut>, Error> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::new();
    for t in 0..50u32 {
        let n: u8 = if rng.gen::<bool>() { 2 } else { 3 };
        let dim = rng.gen_range(2..=5usize);
        let tuple = RowContraction::Dense(random_contraction::<S, _>(&mut rng, n, dim));
        let rep = hierarchy_report(&tuple, 6, cfg)?;
        out.push(VerifyEntryOut {
            name: format!("random tuple #{t} (n={n}, dim={dim})"),
            status: if rep.hierarchy_ok { "pass" } else { "fail" }.into(),
            checks: vec![],
        });
    }
    Ok(out)
}

fn oracle_case<S: Backend>(
    name: &str,
    a: &RowContraction<S>,
    depth: usize,
    cfg: &InvConfig,
    traces_only: bool,
) -> Result<VerifyEntryOut, Error> {
    let dense = match densify(a, depth) {
        Ok(d) => RowContraction::Dense(d),
        Err(Error::Unsupported(_)) => {
            return Ok(VerifyEntryOut {
                name: name.into(),
                status: "skipped".into(),
                checks: vec![],
            })
        }
        Err(e) => return Err(e),
    };
    let mut ok = true;
    for k in 1..depth {
        let t_fast = defect_trace(a, k, &cfg.cp)?;
        let t_dense = defect_trace(&dense, k, &cfg.cp)?;
        let close = if S::EXACT {
            t_fast == t_dense
        } else {
            (t_fast.re_f64() - t_dense.re_f64()).abs() < 1e-9
        };
        ok &= close;
        if !traces_only {
            ok &= defect_rank(a, k, &cfg.cp)? == defect_rank(&dense, k, &cfg.cp)?;
        }
    }
    Ok(VerifyEntryOut {
        name: name.into(),
        status: if ok { "pass" } else { "fail" }.into(),
        checks: vec![],
    })
}

fn verify_oracle<S: Backend>(cfg: &InvConfig) -> Result<Vec<VerifyEntryOut>, Error> {
    let mut out = Vec::new();
    out.push(oracle_case(
        "left regular vs densified",
        &RowContraction::<S>::LeftRegular { n: 2, alpha: 1 },
        5,
        cfg,
        false,
    )?);
    out.push(oracle_case(
        "restricted left regular vs densified",
        &RowContraction::<S>::LeftRegularRestricted { n: 2, min_len: 1 },
        5,
        cfg,
        false,
    )?);
    let atomic = ncurv::operators::DecayingAtomicRep::<S>::new(
        2,
        Word::letter(1),
        vec![S::from_ratio(1, 2)],
    )?;
    out.push(oracle_case(
        "atomic ring vs densified",
        &RowContraction::DecayingAtomic(atomic),
        5,
        cfg,
        false,
    )?);
    let chain = ncurv::operators::CompressionRep::<S>::monomial(
        2,
        ncurv::operators::WordSet::Chain { letter: 1 },
    )?;
    out.push(oracle_case(
        "monomial compression vs densified",
        &RowContraction::Compression(chain),
        5,
        cfg,
        false,
    )?);
    // the geometric-eigenvector compression must match the one-node atomic
    // level by level
    let eig = catalog::entry_eigenvector::<S>(2, S::from_ratio(1, 2))?;
    let dec = catalog::entry_decaying_lambda::<S>(2, Word::letter(1), vec![S::from_ratio(1, 2)])?;
    let (ea, da) = (eig.tuple.unwrap(), dec.tuple.unwrap());
    let mut ok = true;
    for k in 1..=8usize {
        let a = defect_trace(&ea, k, &cfg.cp)?;
        let b = defect_trace(&da, k, &cfg.cp)?;
        ok &= if S::EXACT {
            a == b
        } else {
            (a.re_f64() - b.re_f64()).abs() < 1e-10
        };
    }
    out.push(VerifyEntryOut {
        name: "eigenvector compression vs atomic ring".into(),
        status: if ok { "pass" } else { "fail" }.into(),
        checks: vec![],
    });
    Ok(out)
}

fn parse_grid(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidParameter(format!("bad grid value {t:?}: {e}")))
        })
        .collect()
}

fn dyadic_bits(r: f64) -> Result<Vec<bool>, Error> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidParameter("dyadic value must lie in [0, 1]".into()));
    }
    let mut bits = Vec::new();
    let mut x = r;
    for _ in 0..62 {
        if x == 0.0 {
            return Ok(bits);
        }
        x *= 2.0;
        let bit = x >= 1.0;
        if bit {
            x -= 1.0;
        }
        bits.push(bit);
    }
    Err(Error::InvalidParameter(format!("{r} is not a short dyadic rational")))
}

fn cmd_sweep<S: Backend>(
    cli: &Cli,
    rc: &RunConfig,
    cfg: &InvConfig,
    entry: &str,
    grid: Option<&str>,
) -> Result<u8, Error> {
    let k_max = rc.k_max;
    let default_grid: &[f64] = match entry {
        "decaying" | "decaying-atomic" => &[0.0, 0.25, 0.5, 0.75, 0.9, 1.0],
        "curvature-range" => &[0.0, 0.1, 1.0 / 3.0, 0.5],
        "binary-expansion" => &[0.5, 0.625, 0.75, 0.875],
        other => {
            return Err(Error::InvalidParameter(format!(
                "entry {other} has no sweep parameter; try decaying, \
                 curvature-range, or binary-expansion"
            )))
        }
    };
    let grid = match grid {
        Some(text) => parse_grid(text)?,
        None => default_grid.to_vec(),
    };
    let mut rows = Vec::new();
    for &x in &grid {
        let tuple = match entry {
            "decaying" | "decaying-atomic" => {
                let lambda = S::from_f64(x, 0.0).ok_or_else(|| {
                    Error::InvalidParameter(format!("bad parameter {x}"))
                })?;
                catalog::entry_decaying_lambda::<S>(2, Word::letter(1), vec![lambda])?
                    .tuple
                    .unwrap()
            }
            "curvature-range" => {
                let r = S::from_f64(x, 0.0).ok_or_else(|| {
                    Error::InvalidParameter(format!("bad parameter {x}"))
                })?;
                catalog::entry_curvature_range::<S>(r)?.tuple.unwrap()
            }
            _ => catalog::entry_binary_expansion::<S>(dyadic_bits(x)?)?.tuple.unwrap(),
        };
        let k_est = curvature(&tuple, k_max, cfg)?;
        let x_est = euler(&tuple, k_max, cfg)?;
        let p = pure_rank(&tuple, cfg)?;
        rows.push(vec![
            format!("{x}"),
            format!("{}", k_est.value.re_f64()),
            format!("{}", k_est.upper_bound.re_f64()),
            format!("{}", x_est.value.re_f64()),
            p.to_string(),
        ]);
    }
    let text = csv_rows(
        &["parameter", "curvature", "curvature_upper_bound", "euler", "pure_rank"],
        &rows,
    );
    emit(cli, &text)?;
    Ok(0)
}

fn show_entry<S: Backend>(e: &CatalogEntry<S>) -> String {
    let mut s = format!("{}\n  {}\n", e.name, e.description);
    let fmt = |v: &Option<S>| match v {
        Some(v) => format!("{}", v.re_f64()),
        None => "computed numerically".into(),
    };
    s.push_str(&format!("  expected curvature: {}\n", fmt(&e.expected.curvature)));
    s.push_str(&format!("  expected euler characteristic: {}\n", fmt(&e.expected.euler)));
    if let Some(p) = e.expected.pure_rank {
        s.push_str(&format!("  expected pure rank: {p}\n"));
    }
    if e.expected.tilde.is_some() {
        s.push_str(&format!(
            "  expected subspace value: {}\n",
            fmt(&e.expected.tilde)
        ));
    }
    s.push_str(&format!("  default k_max: {}\n", e.default_k_max));
    for note in &e.notes {
        s.push_str(&format!("  note: {note}\n"));
    }
    s
}

fn cmd_catalog<S: Backend>(cli: &Cli, action: &CatalogCmd) -> Result<u8, Error> {
    match action {
        CatalogCmd::List => {
            let mut text = String::new();
            for name in catalog::ENTRY_NAMES {
                // descriptions need no irrational coefficients, so build on
                // the float backend unconditionally
                let entry = catalog::build_default::<F64>(name)?;
                text.push_str(&format!("{:<24} {}\n", name, entry.description));
            }
            emit(cli, text.trim_end())?;
            Ok(0)
        }
        CatalogCmd::Show { name } => {
            let entry = catalog::build_default::<F64>(name)?;
            emit(cli, show_entry(&entry).trim_end())?;
            Ok(0)
        }
    }
}
