//! Report rendering: JSON (serde, round-trippable), CSV (one row per
//! record), and the human console summary.

use crate::sweep::SweepReport;
use congruence_lab::conjectures::{CheckRecord, CongruenceSide};
use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            _ => None,
        }
    }
}

fn verdict_word(side: &CongruenceSide) -> &'static str {
    if side.undefined() {
        "UNDEFINED"
    } else if side.holds() {
        "HOLDS"
    } else {
        "FAILS"
    }
}

/// CSV schema: conjecture_id, one column per named parameter (union over the
/// records, sorted), verdict, residue, arithmetic_side, consistent.
pub fn render_csv(records: &[CheckRecord]) -> String {
    let param_names: BTreeSet<&str> = records
        .iter()
        .flat_map(|r| r.params.keys().map(String::as_str))
        .collect();
    let mut out = String::from("conjecture_id");
    for name in &param_names {
        out.push(',');
        out.push_str(name);
    }
    out.push_str(",verdict,residue,arithmetic_side,consistent\n");
    for rec in records {
        out.push_str(rec.conjecture.as_str());
        for name in &param_names {
            out.push(',');
            if let Some(v) = rec.params.get(*name) {
                out.push_str(&v.to_string());
            }
        }
        out.push(',');
        out.push_str(verdict_word(&rec.congruence_side));
        out.push(',');
        if let Some(r) = rec.congruence_side.residue() {
            out.push_str(&r.to_string());
        }
        out.push_str(if rec.arithmetic_side { ",true" } else { ",false" });
        out.push_str(if rec.consistent { ",true\n" } else { ",false\n" });
    }
    out
}

pub fn render_json(report: &SweepReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

fn describe_record(rec: &CheckRecord) -> String {
    let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let side = match &rec.congruence_side {
        CongruenceSide::Residue(v) => v.render(),
        CongruenceSide::Divisibility(d) => format!(
            "{}^{} {} | N (next power: {})",
            d.divisor,
            d.exponent,
            if d.divides { "divides" } else { "does not divide" },
            d.divides_next
        ),
        CongruenceSide::Structure(s) => s.detail.clone(),
    };
    format!(
        "{} [{}] {} {}; arithmetic side {}",
        rec.conjecture,
        params.join(", "),
        verdict_word(&rec.congruence_side),
        side,
        rec.arithmetic_side
    )
}

/// Console summary: totals, the anomaly table when the rule has one, and
/// every counterexample verbatim.
pub fn render_human(report: &SweepReport) -> String {
    let s = &report.summary;
    let mut out = String::new();
    out.push_str(&format!(
        "sweep {}: p {} ({} records) in {:.2}s\n",
        report.spec.conjecture, report.spec.p_range, s.records, report.elapsed_seconds
    ));
    out.push_str(&format!(
        "  verdicts: {} HOLDS, {} FAILS, {} UNDEFINED\n",
        s.holds, s.fails, s.undefined
    ));
    out.push_str(&format!(
        "  consistency: {} consistent, {} inconsistent\n",
        s.consistent, s.inconsistent
    ));
    if let Some(threshold) = s.anomaly_threshold {
        if s.anomalies.is_empty() {
            out.push_str("  known-anomaly table: empty\n");
        } else {
            out.push_str(&format!(
                "  known-anomaly table (tabulated, not counted as counterexamples): {:?}\n",
                s.anomalies
            ));
        }
        out.push_str(&format!(
            "  no anomaly at or above {threshold} in the swept range\n"
        ));
    }
    if report.counterexamples.is_empty() {
        out.push_str("  counterexamples: none\n");
    } else {
        out.push_str(&format!(
            "  counterexamples ({}):\n",
            report.counterexamples.len()
        ));
        for rec in &report.counterexamples {
            out.push_str(&format!("    {}\n", describe_record(rec)));
        }
    }
    out
}

/// Serialize the report in `format` to `out` (a path, or stdout when None).
pub fn write_report(
    report: &SweepReport,
    format: OutputFormat,
    out: Option<&Path>,
) -> std::io::Result<()> {
    let payload = match format {
        OutputFormat::Json => render_json(report),
        OutputFormat::Csv => render_csv(&report.records),
    };
    match out {
        Some(path) => std::fs::write(path, payload),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(payload.as_bytes())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::{run_sweep, Range, SweepSpec};
    use congruence_lab::zoo::SequenceCache;

    #[test]
    fn json_round_trips() {
        let zoo = SequenceCache::new();
        let (t, spec) = SweepSpec::resolve(
            "c9",
            Some(Range::new(2, 20)),
            None,
            None,
            None,
            Some(1),
            None,
            0,
        )
        .unwrap();
        let report = run_sweep(t, &spec, &zoo, None).unwrap();
        let json = render_json(&report);
        let back: SweepReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn csv_schema() {
        let zoo = SequenceCache::new();
        let (t, spec) = SweepSpec::resolve(
            "c1",
            Some(Range::new(3, 9)),
            Some(Range::new(1, 1)),
            None,
            None,
            None,
            None,
            0,
        )
        .unwrap();
        let report = run_sweep(t, &spec, &zoo, None).unwrap();
        let csv = render_csv(&report.records);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "conjecture_id,p,q,verdict,residue,arithmetic_side,consistent"
        );
        // p = 3, 5, 7 prime rows hold; p = 9 fails with residue 6
        assert!(csv.contains("C1,9,1,FAILS,6,false,true"));
        assert!(csv.contains("C1,3,1,HOLDS,2,true,true"));
        assert_eq!(lines.count(), 4);
    }
}
