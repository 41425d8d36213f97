//! Thin command-line front end over the `kdyck` library.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid paths, size
//! guards, failed verification), 2 on usage errors (malformed flags).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kdyck::verify::{run_suites, Suite};
use kdyck::{
    c_lambda, enumerate_paths, filling_tableau, inverse_sweep, ranking_tableau, statistics,
    sweep_map, symmetry_defect, Composition, KDyckPath, Limits, Partition, StatisticPair,
};

#[derive(Parser)]
#[command(
    name = "kdyck",
    version,
    about = "Dyck paths with long up steps: enumeration, statistics, the sweep map, and q,t-polynomials",
    after_help = "Size caps can be overridden with the environment variables \
                  KDYCK_MAX_STEPS (largest path size enumerated, default 24) and \
                  KDYCK_MAX_PATHS (largest polynomial aggregation, default 1000000)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every path for an up-step composition, one per line
    Paths {
        /// Comma-separated up-step lengths, e.g. 3,1,4,1,1
        #[arg(long, value_name = "K1,K2,...")]
        k: String,
        /// Print only the number of paths
        #[arg(long)]
        count: bool,
        /// Emit one JSON document per line
        #[arg(long)]
        json: bool,
    },
    /// Area, dinv, and bounce of one path
    Stats {
        /// Path in token form, e.g. "S3 W S1 W W W"
        #[arg(long)]
        path: String,
        /// Emit a single JSON document
        #[arg(long)]
        json: bool,
    },
    /// Apply the sweep map
    Sweep {
        #[arg(long)]
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply the inverse sweep map
    Unsweep {
        #[arg(long)]
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Filling and ranking tableaux of a path
    Tableau {
        #[arg(long)]
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Family polynomial of a partition, or its symmetry defect
    Poly {
        /// Comma-separated partition parts; sorted decreasingly if needed
        #[arg(long, value_name = "L1,L2,...")]
        lambda: String,
        /// Statistic pair weighting each path
        #[arg(long, value_enum, default_value_t = PairArg::DinvArea)]
        pair: PairArg,
        /// Print the symmetry defect C(q,t) - C(t,q) instead
        #[arg(long)]
        defect: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive verification suites
    Verify {
        /// Largest path size (steps) to sweep
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        /// Which suite to run
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairArg {
    /// q^dinv t^area
    DinvArea,
    /// q^area t^bounce
    AreaBounce,
}

impl From<PairArg> for StatisticPair {
    fn from(arg: PairArg) -> Self {
        match arg {
            PairArg::DinvArea => StatisticPair::DinvArea,
            PairArg::AreaBounce => StatisticPair::AreaBounce,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theorem,
    Tableau,
    Inverse,
    Symmetry,
    Conjecture,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Theorem => vec![Suite::Theorem],
            SuiteArg::Tableau => vec![Suite::Tableau],
            SuiteArg::Inverse => vec![Suite::Inverse],
            SuiteArg::Symmetry => vec![Suite::Symmetry],
            SuiteArg::Conjecture => vec![Suite::Conjecture],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// Usage errors exit 2, domain errors exit 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn domain(err: impl std::fmt::Display) -> Self {
        Failure::Domain(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let limits = limits_from_env()?;
    match cli.command {
        Command::Paths { k, count, json } => {
            let k = parse_composition(&k)?;
            let paths = enumerate_paths(&k, &limits).map_err(Failure::domain)?;
            if count {
                let total = paths.count();
                if json {
                    println!("{}", json!({ "count": total }));
                } else {
                    println!("{total}");
                }
            } else {
                for path in paths {
                    if json {
                        println!("{}", json!({ "path": path.render() }));
                    } else {
                        println!("{path}");
                    }
                }
            }
        }
        Command::Stats { path, json } => {
            let path = parse_path(&path)?;
            let stats = statistics(&path);
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&stats).expect("statistics serialize")
                );
            } else {
                println!("area: {}", stats.area);
                println!(
                    "dinv: {} (sweep {}, red {})",
                    stats.dinv.total, stats.dinv.sweep, stats.dinv.red
                );
                println!(
                    "bounce: {} (v {:?}, h {:?})",
                    stats.bounce.value, stats.bounce.v, stats.bounce.h
                );
            }
        }
        Command::Sweep { path, json } => {
            let image = sweep_map(&parse_path(&path)?);
            print_path(&image, json);
        }
        Command::Unsweep { path, json } => {
            let preimage = inverse_sweep(&parse_path(&path)?);
            print_path(&preimage, json);
        }
        Command::Tableau { path, json } => {
            let path = parse_path(&path)?;
            let filling = filling_tableau(&path);
            let ranking = ranking_tableau(&filling);
            if json {
                println!("{}", json!({ "filling": filling, "ranking": ranking }));
            } else {
                println!("filling: {:?}", filling.columns());
                println!("ranking: {:?}", ranking.columns());
            }
        }
        Command::Poly {
            lambda,
            pair,
            defect,
            json,
        } => {
            let lambda = parse_partition(&lambda)?;
            let poly = if defect {
                symmetry_defect(&lambda, &limits).map_err(Failure::domain)?
            } else {
                c_lambda(&lambda, pair.into(), &limits).map_err(Failure::domain)?
            };
            if json {
                println!("{}", serde_json::to_string(&poly).expect("poly serialize"));
            } else {
                println!("{poly}");
            }
        }
        Command::Verify {
            max_size,
            suite,
            json,
        } => {
            if max_size > limits.max_steps {
                return Err(Failure::Usage(format!(
                    "--max-size {max_size} exceeds the step limit {}",
                    limits.max_steps
                )));
            }
            let report = run_suites(&suite.suites(), max_size, &limits).map_err(Failure::domain)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serialize")
                );
            } else {
                println!("{report}");
                for finding in report.findings() {
                    println!(
                        "finding: {} has {} nonzero case(s)",
                        finding.name, finding.failures
                    );
                }
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_path(path: &KDyckPath, json: bool) {
    if json {
        println!("{}", json!({ "path": path.render() }));
    } else {
        println!("{path}");
    }
}

fn parse_path(text: &str) -> Result<KDyckPath, Failure> {
    KDyckPath::parse(text).map_err(Failure::domain)
}

fn parse_composition(text: &str) -> Result<Composition, Failure> {
    let parts = parse_int_list(text)?;
    Composition::new(parts).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    let parts = parse_int_list(text)?;
    let sorted =
        Partition::from_unsorted(parts.clone()).map_err(|e| Failure::Usage(e.to_string()))?;
    if sorted.parts() != parts.as_slice() {
        eprintln!("note: partition parts reordered to {sorted}");
    }
    Ok(sorted)
}

fn parse_int_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad integer list entry {piece:?}")))
        })
        .collect()
}

fn limits_from_env() -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(value) = std::env::var("KDYCK_MAX_STEPS") {
        limits.max_steps = value
            .parse()
            .map_err(|_| Failure::Usage(format!("bad KDYCK_MAX_STEPS value {value:?}")))?;
    }
    if let Ok(value) = std::env::var("KDYCK_MAX_PATHS") {
        limits.max_paths = value
            .parse()
            .map_err(|_| Failure::Usage(format!("bad KDYCK_MAX_PATHS value {value:?}")))?;
    }
    Ok(limits)
}
