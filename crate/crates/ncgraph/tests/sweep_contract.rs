//! The zero-discrepancy contract: over every cyclic instance with
//! n <= 200, the only prediction/oracle disagreement the sweep may produce
//! is the paper-Δ value on disconnected instances.

use ncgraph::harness::{sweep_cyclic, Agreement, SweepConfig};

#[test]
fn full_range_sweep_has_only_paper_delta_discrepancies() {
    let cfg = SweepConfig::new(200);
    let report = sweep_cyclic(&cfg).unwrap();
    let allow = ["max_degree_paper".to_string()];
    let unexpected: Vec<_> = report.unexpected_discrepancies(&allow).collect();
    assert!(
        unexpected.is_empty(),
        "unexpected discrepancies: {:#?}",
        &unexpected[..unexpected.len().min(25)]
    );
    // no oracle was silently skipped in this range
    assert_eq!(
        report
            .rows
            .iter()
            .filter(|r| r.agree == Agreement::Skipped)
            .count(),
        0
    );
    // every paper-Δ discrepancy sits on a disconnected instance, off by one
    for d in &report.discrepancies {
        let p: i64 = d.predicted.parse().unwrap();
        let o: i64 = d.oracle.parse().unwrap();
        assert_eq!(p - o, 1, "{d:?}");
    }
}
