use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use homforge_core::chaincx::{homology_dims, Complex};
use homforge_core::constructions::{
    build_Ci, koszul_complex, make_zeta, minimal_resolution, quasi_iso_to_u, u_factor, verify_with, CheckLevel,
    Construction, CounterexampleConfig, Verdict, VerifyOptions, ZetaSpec,
};
use homforge_core::exterior::{predicted_cone_homology, theta_element, THETA_PAIRS};
use homforge_core::modrep::GroupAlgebraContext;
use homforge_core::FieldPrime;
use log::info;
use serde_json::json;

const EXIT_COUNTEREXAMPLE: u8 = 0;
const EXIT_NONE: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "homforge", version, about = "Free complexes over elementary abelian p-groups with small total homology")]
struct Cli {
    /// Worker threads; defaults to all cores. Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Log filter such as `info` or `homforge_core=debug`.
    #[arg(long, global = true, env = "HOMFORGE_LOG", default_value = "warn")]
    log_level: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predict the cone homology over θ from the exterior-algebra model.
    Exterior {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: usize,
    },
    /// Build a construction, run its checks and write the report.
    Verify(VerifyArgs),
    /// Write a complex as JSON.
    Dump(DumpArgs),
    /// Read a complex, re-verify it and print a summary.
    Load(LoadArgs),
    /// Check the quasi-isomorphism C^i -> U^i for one factor at n = 2.
    QuasiIso {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: usize,
        /// Factor index, 0-based.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Koszul,
    Pushout,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaArg {
    Standard,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Full,
    Kunneth,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long, value_enum, default_value = "standard")]
    zeta: ZetaArg,
    /// Seed for `--zeta random`.
    #[arg(long)]
    seed: Option<u64>,
}

impl ZetaArgs {
    fn spec(&self) -> Result<ZetaSpec> {
        match (self.zeta, self.seed) {
            (ZetaArg::Standard, None) => Ok(ZetaSpec::Standard),
            (ZetaArg::Standard, Some(_)) => bail!("--seed only applies to --zeta random"),
            (ZetaArg::Random, Some(seed)) => Ok(ZetaSpec::Random { seed }),
            (ZetaArg::Random, None) => bail!("--zeta random needs --seed"),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 2)]
    n: i32,
    #[arg(long, value_enum, default_value = "koszul")]
    construction: ConstructionArg,
    #[command(flatten)]
    zeta: ZetaArgs,
    #[arg(long, value_enum, default_value = "kunneth")]
    check_level: LevelArg,
    /// Allow p = 2, where no counterexample exists.
    #[arg(long)]
    contrast: bool,
    /// Record per-stage wall times in the report.
    #[arg(long)]
    timings: bool,
    /// Report path; standard output if absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    /// The two-term factor U^i.
    U,
    /// The Koszul complex U^1 ⊗ .. ⊗ U^r.
    Koszul,
    /// The minimal resolution truncated at n.
    Resolution,
    /// The factor C^i built from L_ζ.
    Pushout,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum)]
    complex: ComplexArg,
    /// Factor index for `u` and `pushout`, 0-based.
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long, default_value_t = 2)]
    n: i32,
    #[command(flatten)]
    zeta: ZetaArgs,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LoadArgs {
    #[arg(long)]
    input: PathBuf,
    /// Also compute homology dimensions.
    #[arg(long)]
    homology: bool,
    /// Write the loaded complex back out.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").context("writing to standard output")
        }
    }
}

fn cmd_exterior(p: u32, r: usize) -> Result<u8> {
    let field = FieldPrime::new(p)?;
    if r < 8 {
        bail!("θ needs r >= 8, got {r}");
    }
    let theta = theta_element(field, r, &THETA_PAIRS)?;
    let total = predicted_cone_homology(field, r)?;
    let bound = 1usize << r;
    let verdict = if p != 2 && total < bound {
        Verdict::Counterexample
    } else {
        Verdict::NoCounterexample
    };
    let out = json!({
        "p": p,
        "r": r,
        "theta_rank": theta.left_mult_rank(),
        "total_HD": total,
        "bound": bound,
        "verdict": verdict,
    });
    emit(None, &out.to_string())?;
    Ok(if verdict == Verdict::Counterexample { EXIT_COUNTEREXAMPLE } else { EXIT_NONE })
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8> {
    let config = CounterexampleConfig {
        p: a.p,
        r: a.r,
        n: a.n,
        construction: match a.construction {
            ConstructionArg::Koszul => Construction::Koszul,
            ConstructionArg::Pushout => Construction::Pushout,
        },
        zeta: a.zeta.spec()?,
        check_level: match a.check_level {
            LevelArg::Full => CheckLevel::Full,
            LevelArg::Kunneth => CheckLevel::Kunneth,
        },
        contrast: a.contrast,
    };
    config.validate()?;
    let opts = VerifyOptions {
        timings: a.timings,
        ..VerifyOptions::default()
    };
    let report = verify_with(&config, &opts)?;
    emit(a.output.as_deref(), &report.to_json_pretty()?)?;
    info!("verdict {:?}, totals {:?}", report.verdict, report.totals);
    if report.checks.any_failed() {
        for (name, c) in report.checks.iter() {
            if c.status == homforge_core::constructions::CheckStatus::Fail {
                eprintln!("check {name} failed: {}", c.detail);
            }
        }
        return Ok(EXIT_ERROR);
    }
    Ok(match report.verdict {
        Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
        _ => EXIT_NONE,
    })
}

fn build_complex(a: &DumpArgs) -> Result<Arc<Complex>> {
    let ctx = GroupAlgebraContext::with_prime(a.p, a.r)?;
    let spec = a.zeta.spec()?;
    if !matches!(a.complex, ComplexArg::Pushout) && spec != ZetaSpec::Standard {
        bail!("--zeta applies to --complex pushout only");
    }
    Ok(match a.complex {
        ComplexArg::U => u_factor(ctx, a.index)?,
        ComplexArg::Koszul => koszul_complex(ctx)?.complex().clone(),
        ComplexArg::Resolution => minimal_resolution(ctx, a.n)?.complex().clone(),
        ComplexArg::Pushout => {
            let res = minimal_resolution(ctx, a.n)?;
            let z = make_zeta(&res, a.n, spec, a.index)?;
            build_Ci(&res, &z)?.0.complex
        }
    })
}

fn cmd_dump(a: &DumpArgs) -> Result<u8> {
    let c = build_complex(a)?;
    emit(a.output.as_deref(), &c.to_json_string()?)?;
    Ok(0)
}

fn cmd_load(a: &LoadArgs) -> Result<u8> {
    let text = fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let c = Complex::from_json_str(&text).with_context(|| format!("loading {}", a.input.display()))?;
    let dims: Vec<_> = c.degrees().map(|i| json!({"degree": i, "dim": c.dim(i)})).collect();
    let mut out = json!({
        "p": c.ctx().p(),
        "r": c.ctx().r(),
        "degrees": dims,
    });
    if a.homology {
        let h: Vec<_> = homology_dims(&c)?
            .into_iter()
            .map(|(degree, dim)| json!({"degree": degree, "dim": dim}))
            .collect();
        out["homology"] = json!(h);
    }
    if let Some(path) = &a.output {
        emit(Some(path), &c.to_json_string()?)?;
    }
    emit(None, &out.to_string())?;
    Ok(0)
}

fn cmd_quasi_iso(p: u32, r: usize, index: usize) -> Result<u8> {
    let ctx = GroupAlgebraContext::with_prime(p, r)?;
    if index >= r {
        bail!("--index {index} is out of range for r = {r}");
    }
    let res = minimal_resolution(ctx, 2)?;
    let check = quasi_iso_to_u(&res, index)?.check()?;
    let out = json!({
        "p": p,
        "r": r,
        "index": index,
        "quasi_iso": check.quasi_iso,
        "homology_commutes": check.homology_commutes,
        "strict_commutes": check.strict_commutes,
    });
    emit(None, &out.to_string())?;
    Ok(if check.quasi_iso && check.homology_commutes { 0 } else { EXIT_ERROR })
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match &cli.command {
        Command::Exterior { p, r } => cmd_exterior(*p, *r),
        Command::Verify(a) => cmd_verify(a),
        Command::Dump(a) => cmd_dump(a),
        Command::Load(a) => cmd_load(a),
        Command::QuasiIso { p, r, index } => cmd_quasi_iso(*p, *r, *index),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new().parse_filters(&cli.log_level).init();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
