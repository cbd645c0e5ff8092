use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use delseq_cli::table::{Format, Table};
use delseq_cli::verify::{self, Config, DEFAULT_SEED, SUITES};
use delseq_cli::{commands, exit_code};
use delseq_core::entropy::EntropyMeasure;
use delseq_core::superspace::DEFAULT_MAX_BITS;
use delseq_core::{BitString, Error, Rle};

const VERIFY_HELP: &str = "\
Suites:
  rle               round trip, g on run counts, complement symmetry
  embeddings        enumeration = DP = run formula, symmetries, bound, block-map partition
  superspace        |Υ|, Σω = μ, weight-class sums, E_t(n)
  clusters          closed form = stars and bars = recurrence = census, maximal initials, canonical masks
  singletons        ρ formula = census, extremization by constant/alternating strings
  entropy           H0 ≥ H ≥ H2 ≥ Hmin, complement/reversal invariance, closed minima
  g-chain           entropy drop under g at one and two deletions, Rényi orders 0.5, 2, 4
  extremization     argmin/argmax of H over x; general deletion counts are reported as findings
  deletion-classes  class generators against identities and censuses
  hws               κ² symmetries and maximum, Ω moments at m = 1, (8,5) ordering
  moment-estimate   moment-based entropy estimate within its remainder bound";

#[derive(Parser)]
#[command(
    name = "delseq",
    version,
    about = "Exact combinatorics of the binary deletion channel"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Largest n for which all 2^n strings may be enumerated.
    #[arg(long, global = true, env = "DELSEQ_MAX_BITS", default_value_t = DEFAULT_MAX_BITS)]
    max_bits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every y in the uncertainty set with ω_x(y) and P_x(y), then a total row.
    Posterior {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
    },
    /// Entropy measures for every x of length m at output length n.
    EntropyScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated: shannon, renyi<α>, min, hartley.
        #[arg(long, value_delimiter = ',', default_value = "shannon,renyi2,min")]
        measures: Vec<EntropyMeasure>,
    },
    /// κ² for every x of length m, largest first; --n adds Shannon entropy.
    Kappa {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Hamming-cluster sizes, maximal initials and masks per cluster.
    Clusters {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
    },
    /// Singleton count from ρ against a census.
    Singletons {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
    },
    /// Weight classes after one or two deletions, with identity checks.
    Classes {
        /// Run lengths, e.g. `2,1,3` or `s=0:2,1,3`.
        #[arg(long)]
        x_rle: Rle,
        #[arg(long)]
        deletions: usize,
    },
    /// Entropy along x, g(x), g²(x), ... down to a single run.
    Gchain {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "shannon")]
        measure: EntropyMeasure,
    },
    /// Exact Shannon entropy against its moment-based estimate.
    Estimate {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
    },
    /// Run-based decomposition of ω_x(y) with DP and enumeration totals.
    Embed {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        y: BitString,
    },
    /// Run the oracle and property suites.
    #[command(after_help = VERIFY_HELP)]
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Run only these suites (repeatable).
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn emit(t: &Table, format: Format) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(t.render(format).as_bytes());
}

fn run_verify(max_n: usize, suites: &[String], seed: u64, max_bits: usize, format: Format) -> Result<bool, Error> {
    let names: Vec<&str> = if suites.is_empty() {
        SUITES.to_vec()
    } else {
        suites.iter().map(String::as_str).collect()
    };
    let cfg = Config { max_n, max_bits, seed };
    let mut t = Table::new("verify", &["suite", "checks", "failures", "findings", "status"])
        .param("max_n", max_n)
        .param("seed", seed);
    let mut ok = true;
    for name in names {
        let r = verify::run_suite(name, &cfg)?;
        for f in &r.findings {
            eprintln!("[{name}] finding: {f}");
        }
        for d in &r.details {
            eprintln!("[{name}] FAIL: {d}");
        }
        ok &= r.passed();
        let status = if r.passed() { "ok" } else { "FAIL" };
        t.push(vec![
            name.into(),
            r.checks.into(),
            r.failures.into(),
            r.findings.len().into(),
            status.into(),
        ]);
    }
    emit(&t, format);
    Ok(ok)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mb = cli.max_bits;
    let table = match cli.command {
        Command::Posterior { x, n } => commands::posterior(&x, n, mb)?,
        Command::EntropyScan { n, m, measures } => commands::entropy_scan(n, m, &measures, mb)?,
        Command::Kappa { m, n } => commands::kappa(m, n, mb)?,
        Command::Clusters { x, n } => commands::clusters(&x, n, mb)?,
        Command::Singletons { x, n } => commands::singletons(&x, n, mb)?,
        Command::Classes { x_rle, deletions } => commands::classes(&x_rle, deletions, mb)?,
        Command::Gchain { x, n, measure } => commands::gchain(&x, n, measure, mb)?,
        Command::Estimate { x, n } => commands::estimate(&x, n, mb)?,
        Command::Embed { x, y } => commands::embed(&x, &y, mb)?,
        Command::Verify { max_n, suite, seed } => {
            let ok = run_verify(max_n, &suite, seed, mb, cli.format)?;
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(&table, cli.format);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("delseq: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
