use clap::{Parser, Subcommand};
use congruence_lab_cli::commands::{cmd_compute, cmd_giuga, cmd_oeis, cmd_verify, GlobalOpts};
use congruence_lab_cli::report::OutputFormat;
use congruence_lab_cli::sweep::Range;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact-arithmetic sequence engine and congruence-based primality
/// characterization checker.
#[derive(Parser)]
#[command(name = "congruence-lab", version, max_term_width = 100)]
struct Cli {
    /// Worker count for sweeps (default: all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Report format for --out / stdout serialization
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<OutputFormat>,

    /// Write the full report to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Persistent sequence-value cache file (loaded before, saved after)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Never touch the network (OEIS data comes from the local cache only)
    #[arg(long, global = true)]
    offline: bool,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::parse(s).ok_or_else(|| format!("unknown format {s:?} (expected json or csv)"))
}

fn parse_range(s: &str) -> Result<Range, String> {
    Range::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print exact values of a sequence family: `compute cauchy-first 0 7`
    Compute {
        /// Family name (e.g. bernoulli, cauchy-first, norlund, motzkin) or
        /// an ingested OEIS identifier such as A064062
        sequence: String,
        from: u64,
        to: u64,
        /// Parameter for parameterized families (poly-bernoulli order k)
        #[arg(long)]
        k: Option<i64>,
    },
    /// Sweep one statement over parameter ranges and report counterexamples
    Verify {
        /// c1..c11, giuga, wolstenholme, even-counterexample, or s10-<id>
        /// (s10-motzkin, s10-catalan, s10-a002105, s10-a064062, ...)
        conjecture: String,
        /// Primary index range `A..B` (the statement's p, n or rank)
        #[arg(long, value_parser = parse_range)]
        p: Option<Range>,
        /// Exponent multiplier range for the q-parameterized statements
        #[arg(long, value_parser = parse_range)]
        q: Option<Range>,
        /// Poly-Bernoulli order range (c2 only)
        #[arg(long, value_parser = parse_range)]
        k: Option<Range>,
        /// Power-of-two exponent range (c3 only)
        #[arg(long, value_parser = parse_range)]
        m: Option<Range>,
        /// c9 variant (1, 2 or 3; default: all three)
        #[arg(long)]
        variant: Option<i64>,
        /// Numerator family for c3/c4/c5/c7: cauchy-first, bernoulli-second
        /// or both (default: both)
        #[arg(long)]
        family: Option<String>,
    },
    /// List all Giuga numbers up to a bound
    Giuga { bound: u64 },
    /// List Giuga numbers and verify both mod-4 divisor properties on each
    Mod4 { bound: u64 },
    /// Manage OEIS b-file data: ingest <id> <path>, fetch <id>, check <id>
    Oeis {
        action: String,
        id: String,
        path: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = GlobalOpts {
        jobs: cli.jobs,
        format: cli.format,
        out: cli.out,
        cache: cli.cache,
        offline: cli.offline,
    };
    let code = match &cli.command {
        Command::Compute {
            sequence,
            from,
            to,
            k,
        } => cmd_compute(sequence, *from, *to, *k, &opts),
        Command::Verify {
            conjecture,
            p,
            q,
            k,
            m,
            variant,
            family,
        } => cmd_verify(
            conjecture,
            *p,
            *q,
            *k,
            *m,
            *variant,
            family.as_deref(),
            &opts,
        ),
        Command::Giuga { bound } => cmd_giuga(*bound, false, &opts),
        Command::Mod4 { bound } => cmd_giuga(*bound, true, &opts),
        Command::Oeis { action, id, path } => {
            cmd_oeis(action, id, path.as_deref(), &opts)
        }
    };
    ExitCode::from(code as u8)
}
