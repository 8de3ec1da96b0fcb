mod cache;
mod checks;
mod config;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use hook_specht::specht::Generator;
use hook_specht::{Field, HookSpechtModule, Params, PrimeField, Rationals};
use rayon::prelude::*;

use cache::{module_fingerprints, Cache};
use config::{parse_range, FieldSpec, Format, Kappa, KappaSelector, MSelector, RunConfig, DEFAULT_MAX_N};
use report::ReportRecord;

#[derive(Parser)]
#[command(name = "hook-specht", version, about = "Exact computations with hook Specht modules of level-2 KLR algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// `rational` or `fp:<p>`.
    #[arg(long, default_value = "rational")]
    field: FieldSpec,
    /// Seeds the random irreducibility oracle.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Directory for matrix fingerprints.
    #[arg(long, env = "SPECHT_CACHE_DIR")]
    cache: Option<PathBuf>,
    /// Largest n accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Args, Clone)]
struct Point {
    #[arg(long)]
    e: u32,
    /// `k1,k2`, reduced mod e.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Kappa,
    #[arg(long)]
    n: usize,
    /// Leg length.
    #[arg(long)]
    m: usize,
}

#[derive(Args, Clone)]
struct Family {
    #[arg(long)]
    e: u32,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Kappa,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux (as leg sets) with residue sequences.
    Basis {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        common: Common,
    },
    /// Emit one generator matrix, e.g. `--gen psi3`, `--gen y1`, `--gen 'e(0,1,2)'`.
    Matrix {
        #[command(flatten)]
        point: Point,
        #[arg(long = "gen")]
        generator: Generator,
        #[command(flatten)]
        common: Common,
    },
    /// Check every KLR relation on the generator matrices.
    VerifyKlr {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        common: Common,
    },
    /// Check the maps between hook Specht modules for all leg lengths.
    VerifyHoms {
        #[command(flatten)]
        family: Family,
        #[command(flatten)]
        common: Common,
    },
    /// Build and check the composition series.
    CompSeries {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        common: Common,
    },
    /// Run every check over a grid of parameters.
    Sweep {
        /// Comma-separated list.
        #[arg(long, value_delimiter = ',', required = true)]
        e: Vec<u32>,
        /// `all`, or repeat `--kappa k1,k2`.
        #[arg(long, allow_hyphen_values = true, default_value = "all")]
        kappa: Vec<String>,
        /// `a..b`, `a-b` or a single value.
        #[arg(long)]
        n: String,
        /// `all` or a comma-separated list.
        #[arg(long, default_value = "all")]
        m: String,
        #[command(flatten)]
        common: Common,
    },
    /// Replay a worked example by name.
    Example {
        #[arg(value_parser = checks::EXAMPLES)]
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

fn config(common: &Common, e: Vec<u32>, kappa: KappaSelector, n: (usize, usize), m: MSelector) -> RunConfig {
    RunConfig {
        e_list: e,
        kappa_list: kappa,
        n_range: n,
        m_selector: m,
        field: common.field,
        seed: common.seed,
        output: common.output.clone(),
        format: common.format,
        cache: common.cache.clone(),
        max_n: common.max_n,
    }
}

fn point_config(p: &Point, common: &Common) -> RunConfig {
    config(common, vec![p.e], KappaSelector::List(vec![p.kappa]), (p.n, p.n), MSelector::List(vec![p.m]))
}

fn point_params(p: &Point) -> anyhow::Result<Params> {
    Ok(Params::new(p.e, (p.kappa.0, p.kappa.1), p.n, p.m)?)
}

fn parse_m(s: &str) -> anyhow::Result<MSelector> {
    if s == "all" {
        return Ok(MSelector::All);
    }
    let ms = s.split(',').map(|x| x.trim().parse()).collect::<Result<Vec<usize>, _>>();
    Ok(MSelector::List(ms.with_context(|| format!("bad --m `{s}`"))?))
}

fn parse_kappas(v: &[String]) -> anyhow::Result<KappaSelector> {
    if v.iter().any(|s| s == "all") {
        return Ok(KappaSelector::All);
    }
    let ks = v.iter().map(|s| s.parse::<Kappa>()).collect::<Result<Vec<_>, _>>();
    Ok(KappaSelector::List(ks.map_err(anyhow::Error::msg)?))
}

/// What to compute once the field is fixed.
enum Job {
    Basis(Params),
    Matrix(Params, Generator),
    Klr(Params),
    Homs(Params),
    Series(Params),
    Sweep(Vec<Params>),
    Example(String),
}

type Fingerprints = Vec<(Params, BTreeMap<String, String>)>;

fn run_job<F: Field>(field: &F, job: &Job, seed: u64, fingerprint: bool) -> (Vec<ReportRecord>, Fingerprints) {
    let prints = |p: &Params| -> Fingerprints {
        if fingerprint {
            vec![(*p, module_fingerprints(&HookSpechtModule::new(field.clone(), *p)))]
        } else {
            Vec::new()
        }
    };
    match job {
        Job::Basis(p) => (checks::basis(field, p), prints(p)),
        Job::Matrix(p, g) => (vec![checks::matrix(field, p, g)], prints(p)),
        Job::Klr(p) => (checks::klr(field, p), prints(p)),
        Job::Homs(p) => (checks::homs(field, p), Vec::new()),
        Job::Series(p) => (vec![checks::series(field, p, seed)], prints(p)),
        Job::Sweep(grid) => {
            // Tasks are pure; results come back in grid order.
            let parts: Vec<(Vec<ReportRecord>, Fingerprints)> =
                grid.par_iter().map(|p| (checks::sweep_point(field, p, seed), prints(p))).collect();
            let mut records = Vec::new();
            let mut fps = Vec::new();
            for (r, f) in parts {
                records.extend(r);
                fps.extend(f);
            }
            (records, fps)
        }
        Job::Example(name) => (checks::example(field, name, seed).expect("name validated by clap"), Vec::new()),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let (command, cfg, job) = match cli.command {
        Command::Basis { point, common } => ("basis", point_config(&point, &common), Job::Basis(point_params(&point)?)),
        Command::Matrix { point, generator, common } => {
            ("matrix", point_config(&point, &common), Job::Matrix(point_params(&point)?, generator))
        }
        Command::VerifyKlr { point, common } => {
            ("verify-klr", point_config(&point, &common), Job::Klr(point_params(&point)?))
        }
        Command::CompSeries { point, common } => {
            ("comp-series", point_config(&point, &common), Job::Series(point_params(&point)?))
        }
        Command::VerifyHoms { family: f, common } => {
            let cfg = config(&common, vec![f.e], KappaSelector::List(vec![f.kappa]), (f.n, f.n), MSelector::All);
            let p = Params::new(f.e, (f.kappa.0, f.kappa.1), f.n, 0)?;
            ("verify-homs", cfg, Job::Homs(p))
        }
        Command::Sweep { e, kappa, n, m, common } => {
            let n = parse_range(&n).map_err(anyhow::Error::msg)?;
            let cfg = config(&common, e, parse_kappas(&kappa)?, n, parse_m(&m)?);
            cfg.validate()?;
            let grid = cfg.grid()?;
            if grid.is_empty() {
                bail!("the sweep grid is empty");
            }
            ("sweep", cfg, Job::Sweep(grid))
        }
        Command::Example { name, common } => {
            let cfg = config(&common, vec![3], KappaSelector::List(Vec::new()), (1, 1), MSelector::All);
            ("example", cfg, Job::Example(name))
        }
    };
    cfg.validate()?;

    let mut cache = cfg.cache.as_deref().map(Cache::open).transpose()?;
    let (mut records, fps) = match cfg.field {
        FieldSpec::Rational => run_job(&Rationals, &job, cfg.seed, cache.is_some()),
        FieldSpec::Prime(p) => run_job(&PrimeField::new(p).context("fp:<p> needs a prime p")?, &job, cfg.seed, cache.is_some()),
    };
    if let Some(cache) = cache.as_mut() {
        let label = cfg.field.to_string();
        for (p, f) in fps {
            records.extend(cache.check(&p, &label, f)?);
        }
        let s = &cache.stats;
        eprintln!("cache: {} hits, {} misses, {} mismatches", s.hits, s.misses, s.mismatches);
    }

    report::emit(command, &cfg, &records)?;
    let failed = records.iter().filter(|r| r.failed()).count();
    if let Some(first) = records.iter().find(|r| r.failed()) {
        eprintln!(
            "{failed} failing record(s); first: {} at e={} kappa=({},{}) n={}{}: {}",
            first.check,
            first.params.e,
            first.params.kappa[0],
            first.params.kappa[1],
            first.params.n,
            first.params.m.map_or(String::new(), |m| format!(" m={m}")),
            first.details
        );
    }
    Ok(failed == 0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
