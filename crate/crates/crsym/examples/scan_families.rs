//! Scan every monomial model up to a degree bound and aggregate the theorem
//! verdicts — the universally quantified statements, checked exhaustively at
//! desk scale.
//!
//! ```bash
//! cargo run --release --example scan_families [degree_bound]
//! ```

use crsym::cli::{run_scan, ScanConfig};
use std::collections::BTreeMap;

fn main() {
    let bound: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let mut cfg = ScanConfig::new(bound);
    cfg.dedupe = true;
    let outcome = run_scan(&cfg);

    println!(
        "analyzed {} nondegenerate models with d <= {} (canonical representatives)",
        outcome.records.len(),
        bound
    );

    // Distribution of total dimensions and of normal-form families.
    let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
    let mut families: BTreeMap<String, usize> = BTreeMap::new();
    let mut gc_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for rec in &outcome.records {
        *totals.entry(rec.analysis.report.total_dimension).or_default() += 1;
        *gc_hist.entry(rec.analysis.report.gc_dimension).or_default() += 1;
        let fam = format!(
            "{:?}",
            rec.analysis.prediction.as_ref().unwrap().normal_form.family
        );
        *families.entry(fam).or_default() += 1;
    }
    println!("\ntotal-dimension histogram:");
    for (dim, count) in &totals {
        println!("  dim {:>2}: {:>5} models", dim, count);
    }
    println!("\ndim g_c histogram:");
    for (dim, count) in &gc_hist {
        println!("  g_c {:>2}: {:>5} models", dim, count);
    }
    println!("\nnormal-form families:");
    for (fam, count) in &families {
        println!("  {:>12}: {:>5} models", fam, count);
    }
    println!("\ndiscrepancies: {}", outcome.discrepancy_total);
    for r in &outcome.atlas.summary.component_ranges {
        println!("  {:>9} ranges over {}..={}", r.component, r.min, r.max);
    }
}
