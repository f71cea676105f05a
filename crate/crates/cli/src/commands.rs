//! Command implementations. Each returns the process exit code:
//! 0 = success / all consistent, 1 = counterexample found, 2 = usage or
//! data error.

use crate::cache_file;
use crate::report::{render_human, write_report, OutputFormat};
use crate::sweep::{run_sweep, Range, SweepError, SweepSpec};
use congruence_lab::conjectures::{check_s9_mod4, giuga_search};
use congruence_lab::oeis::{cross_check, known_sequence, OeisCache, OeisError};
use congruence_lab::rational::format_exact;
use congruence_lab::zoo::{Family, SequenceCache, SequenceId};
use std::path::{Path, PathBuf};

pub struct GlobalOpts {
    pub jobs: usize,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub offline: bool,
}

fn load_cache_file(zoo: &SequenceCache, opts: &GlobalOpts) {
    if let Some(path) = opts.cache.as_deref() {
        if path.is_file() {
            match cache_file::load_into(path, zoo) {
                Ok(outcome) => {
                    for notice in outcome.notices {
                        eprintln!("cache: {notice}");
                    }
                }
                Err(e) => eprintln!("cache: ignoring {}: {e}", path.display()),
            }
        }
    }
}

fn save_cache_file(zoo: &SequenceCache, opts: &GlobalOpts) {
    if let Some(path) = opts.cache.as_deref() {
        match cache_file::save_from(path, zoo) {
            Ok(n) => eprintln!("cache: wrote {n} values to {}", path.display()),
            Err(e) => eprintln!("cache: failed to write {}: {e}", path.display()),
        }
    }
}

/// `compute <sequence> <from> <to>`: one `n<TAB>numerator/denominator` row
/// per index. Stirling triangles print whole rows; `A`-identifiers read the
/// ingested b-file.
pub fn cmd_compute(
    sequence: &str,
    from: u64,
    to: u64,
    k: Option<i64>,
    opts: &GlobalOpts,
) -> i32 {
    if from > to {
        eprintln!("error: empty index range {from}..{to}");
        return 2;
    }
    // OEIS identifier: serve values from the b-file cache.
    if sequence.starts_with('A') && sequence.len() == 7 {
        let oeis = OeisCache::from_env(opts.offline);
        return match oeis.load(sequence) {
            Ok(table) => {
                for n in from..=to {
                    match table.entry(n as i64) {
                        Some(v) => println!("{n}\t{v}/1"),
                        None => println!("{n}\t(no data)"),
                    }
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        };
    }

    let Some(family) = Family::from_token(sequence) else {
        eprintln!(
            "error: unknown sequence {sequence:?}; expected one of bernoulli, poly-bernoulli, \
             cauchy-first, bernoulli-second, norlund, sech-tanh, tangent, reduced-tangent, \
             stirling1, stirling2, motzkin, catalan, euler-updown, springer-a001586, \
             complementary-bell, or an A—identifier"
        );
        return 2;
    };

    let zoo = SequenceCache::new();
    load_cache_file(&zoo, opts);

    // triangles print one row per line
    if matches!(family, Family::Stirling1 | Family::Stirling2) {
        for n in from..=to {
            let row: Vec<String> = (0..=n)
                .map(|j| {
                    let v = match family {
                        Family::Stirling1 => zoo.stirling1_signed(n, j),
                        _ => zoo.stirling2(n, j),
                    };
                    v.expect("j <= n").to_string()
                })
                .collect();
            println!("{n}\t{}", row.join(" "));
        }
        return 0;
    }

    let id = match SequenceId::new(family, k) {
        Ok(id) => id,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    // warm at the top index so the memo grows once
    if zoo.value(&id, to).is_err() {
        // fall through; the per-index loop reports the error
    }
    for n in from..=to {
        match zoo.value(&id, n) {
            Ok(v) => println!("{n}\t{}", format_exact(&v)),
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        }
    }
    save_cache_file(&zoo, opts);
    0
}

/// `verify <conjecture> [ranges]`: run the sweep, print the human summary,
/// optionally serialize the full report.
#[allow(clippy::too_many_arguments)]
pub fn cmd_verify(
    conjecture: &str,
    p: Option<Range>,
    q: Option<Range>,
    k: Option<Range>,
    m: Option<Range>,
    variant: Option<i64>,
    family: Option<&str>,
    opts: &GlobalOpts,
) -> i32 {
    let (target, spec) =
        match SweepSpec::resolve(conjecture, p, q, k, m, variant, family, opts.jobs) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };

    let zoo = SequenceCache::new();
    load_cache_file(&zoo, opts);

    let table = match target.oeis_backed() {
        Some(id) => {
            let oeis = OeisCache::from_env(opts.offline);
            match oeis.load(id) {
                Ok(t) => Some(t),
                Err(e) => {
                    eprintln!("error: data unavailable: {e}");
                    return 2;
                }
            }
        }
        None => None,
    };

    let report = match run_sweep(target, &spec, &zoo, table.as_ref()) {
        Ok(r) => r,
        Err(e @ SweepError::DataUnavailable(_)) => {
            eprintln!("error: {e}");
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    match (opts.format, opts.out.as_deref()) {
        (None, None) => print!("{}", render_human(&report)),
        (format, out) => {
            let format = format.unwrap_or(OutputFormat::Json);
            if let Err(e) = write_report(&report, format, out) {
                eprintln!("error: writing report: {e}");
                return 2;
            }
            if out.is_some() {
                print!("{}", render_human(&report));
            }
        }
    }
    save_cache_file(&zoo, opts);
    report.exit_code()
}

/// `giuga <bound>` / `mod4 <bound>`: list Giuga numbers, optionally with the
/// per-divisor mod-4 structure checks.
pub fn cmd_giuga(bound: u64, with_mod4: bool, opts: &GlobalOpts) -> i32 {
    if bound < 2 {
        eprintln!("error: bound must be at least 2");
        return 2;
    }
    let witnesses = giuga_search(bound);
    let ns: Vec<u64> = witnesses.iter().map(|w| w.n).collect();
    println!(
        "giuga numbers <= {bound}: {}",
        if ns.is_empty() {
            "none".to_string()
        } else {
            ns.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        }
    );
    let mut all_consistent = true;
    if with_mod4 {
        for w in &witnesses {
            let record = check_s9_mod4(w).expect("search returns Giuga witnesses");
            let primes: Vec<String> = w
                .prime_divisors
                .iter()
                .map(|(p, _)| format!("{p} (≡ {} mod 4)", p % 4))
                .collect();
            println!("  {}: prime divisors {}", w.n, primes.join(", "));
            for (p, p_class, q_class) in &w.mod4_classes {
                println!(
                    "    P = {p}: (n/P - 1)/P ≡ {q_class} (mod 4), P ≡ {p_class} (mod 4): {}",
                    if p_class == q_class { "same class" } else { "DIFFERENT class" }
                );
            }
            println!(
                "    both properties: {}",
                if record.consistent { "hold" } else { "VIOLATED" }
            );
            all_consistent &= record.consistent;
        }
    }
    if let Some(out) = opts.out.as_deref() {
        let payload = serde_json::to_string_pretty(&witnesses).expect("witnesses serialize");
        if let Err(e) = std::fs::write(out, payload) {
            eprintln!("error: writing {}: {e}", out.display());
            return 2;
        }
    }
    if all_consistent {
        0
    } else {
        1
    }
}

/// `oeis <ingest|fetch|check> <id> [path]`.
pub fn cmd_oeis(action: &str, id: &str, path: Option<&Path>, opts: &GlobalOpts) -> i32 {
    let oeis = OeisCache::from_env(opts.offline);
    let outcome: Result<String, OeisError> = match action {
        "ingest" => {
            let Some(path) = path else {
                eprintln!("error: oeis ingest needs a local b-file path");
                return 2;
            };
            oeis.ingest(id, path).map(|t| {
                format!(
                    "cached {} entries for {} (indices {}..{})",
                    t.len(),
                    id,
                    t.offset(),
                    t.last_index()
                )
            })
        }
        "fetch" => oeis.fetch(id).map(|t| {
            format!(
                "fetched {} entries for {} (indices {}..{})",
                t.len(),
                id,
                t.offset(),
                t.last_index()
            )
        }),
        "check" => {
            if known_sequence(id).is_none() {
                println!("{id}: no native generator; ingestion-only family");
                return 0;
            }
            match oeis.load(id) {
                Ok(table) => {
                    let zoo = SequenceCache::new();
                    load_cache_file(&zoo, opts);
                    let n_max = table.last_index().max(0) as u64;
                    match cross_check(&zoo, &table, n_max) {
                        Ok(mismatches) if mismatches.is_empty() => {
                            Ok(format!("{id}: 0 mismatches over {} entries", table.len()))
                        }
                        Ok(mismatches) => {
                            for m in &mismatches {
                                println!(
                                    "{id}: index {}: native {} vs file {}",
                                    m.index, m.native, m.file
                                );
                            }
                            println!("{id}: {} mismatches", mismatches.len());
                            return 1;
                        }
                        Err(e) => Err(e),
                    }
                }
                Err(e) => Err(e),
            }
        }
        other => {
            eprintln!("error: unknown oeis action {other:?} (expected ingest, fetch or check)");
            return 2;
        }
    };
    match outcome {
        Ok(message) => {
            println!("{message}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
