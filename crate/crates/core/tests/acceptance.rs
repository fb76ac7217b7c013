//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use rspin_core::moduli::{
    chi, deformation_dimension, enumerate_assignments, Chi, DualGraph, Vertex,
};
use rspin_core::suites::{self, SuiteReport};

const PRIME: u64 = 13;

/// (g, n, r, m, chi, 3g - 3 + n); `None` marks a non-integral numerator.
const CLOSED_FORMS: [(u32, u32, u32, &[i64], Option<i64>, i64); 50] = [
    (0, 4, 2, &[0, 0, 0, 0], Some(2), 1),
    (2, 1, 2, &[1], Some(0), 4),
    (1, 1, 3, &[0], None, 1),
    (2, 1, 2, &[0], None, 4),
    (5, 0, 3, &[], None, 12),
    (0, 4, 4, &[-1, 1, 3, -1], Some(1), 1),
    (4, 1, 6, &[-1], None, 10),
    (0, 3, 2, &[0, -1, -1], None, 0),
    (0, 4, 3, &[2, -1, -1, 0], None, 1),
    (5, 5, 4, &[3, -1, 3, 3, 2], None, 17),
    (0, 4, 6, &[5, 0, 1, 2], Some(0), 1),
    (1, 4, 2, &[-1, 1, 0, 1], None, 4),
    (5, 1, 3, &[-1], None, 13),
    (4, 4, 4, &[0, 1, -1, 3], None, 13),
    (5, 0, 6, &[], None, 12),
    (4, 0, 2, &[], Some(0), 9),
    (4, 1, 3, &[2], None, 10),
    (5, 4, 4, &[2, 1, 2, 3], Some(-3), 16),
    (3, 2, 6, &[1, 0], None, 8),
    (1, 5, 2, &[-1, -1, 1, 0, 1], None, 5),
    (3, 2, 3, &[2, 1], Some(-1), 8),
    (4, 0, 4, &[], None, 9),
    (0, 4, 6, &[2, 0, 5, 1], Some(0), 1),
    (1, 3, 2, &[0, -1, 1], None, 3),
    (0, 4, 3, &[1, 1, 1, 2], Some(0), 1),
    (4, 3, 4, &[-1, -1, 1], None, 12),
    (3, 5, 6, &[4, -1, -1, 4, 4], None, 11),
    (2, 5, 2, &[1, 1, 0, 0, 1], Some(1), 8),
    (3, 5, 3, &[1, -1, 2, 1, 0], Some(0), 11),
    (3, 0, 4, &[], Some(-1), 6),
    (1, 2, 6, &[0, 4], None, 2),
    (1, 3, 2, &[0, 0, -1], Some(2), 3),
    (1, 3, 3, &[2, 1, 0], Some(0), 3),
    (3, 4, 4, &[1, 2, 1, 2], None, 10),
    (1, 1, 6, &[-1], None, 1),
    (1, 1, 2, &[-1], Some(1), 1),
    (3, 4, 3, &[0, 1, 1, -1], None, 10),
    (1, 3, 4, &[3, 1, 3], Some(-1), 3),
    (4, 2, 6, &[0, 4], None, 11),
    (4, 4, 2, &[1, 1, 1, -1], Some(1), 13),
    (3, 5, 3, &[2, 2, 2, 2, -1], None, 11),
    (3, 5, 4, &[2, -1, 0, -1, 0], None, 11),
    (3, 1, 6, &[-1], Some(-1), 7),
    (2, 4, 2, &[-1, -1, -1, 1], Some(3), 7),
    (1, 4, 3, &[-1, 1, -1, -1], Some(2), 4),
    (1, 4, 4, &[2, 0, 1, 1], Some(0), 4),
    (4, 2, 6, &[2, -1], None, 11),
    (0, 3, 2, &[0, 0, 0], None, 0),
    (5, 1, 6, &[3], Some(-3), 13),
    (4, 0, 3, &[], Some(-1), 9),
];

fn closed_forms() -> SuiteReport {
    let mut failures = Vec::new();
    for &(g, n, r, m, expected, dim) in &CLOSED_FORMS {
        let got = chi(g, n, r, m);
        let ok = match (&got, expected) {
            (Ok(Chi::Integral(c)), Some(e)) => *c == e,
            (Ok(Chi::NonIntegral { .. }), None) => true,
            _ => false,
        };
        if !ok {
            failures.push(format!(
                "chi({g}, {n}, {r}, {m:?}) = {got:?}, expected {expected:?}"
            ));
        }
        if deformation_dimension(g, n, 0) != Ok(dim) {
            failures.push(format!("dimension({g}, {n}, 0) != {dim}"));
        }
        if dim > 0 && deformation_dimension(g, n, 1) != Ok(dim - 1) {
            failures.push(format!("dimension({g}, {n}, 1) != {}", dim - 1));
        }
    }
    for (g, n) in [(0, 0), (0, 1), (0, 2), (1, 0)] {
        if chi(g, n, 2, &vec![0; n as usize]).is_ok() || deformation_dimension(g, n, 0).is_ok() {
            failures.push(format!("unstable ({g}, {n}) accepted"));
        }
    }
    SuiteReport {
        name: "closed-form values",
        cases: CLOSED_FORMS.len() + 4,
        failures,
    }
}

fn enumeration() -> SuiteReport {
    let mut report = suites::enumeration_oracle(6);
    let graph = DualGraph::new(
        vec![Vertex {
            id: "a".into(),
            genus: 0,
        }],
        &[("a", "a")],
        &[("a", 1)],
    )
    .expect("loop graph");
    let odd = enumerate_assignments(&graph, 2, &[1]).map(|v| v.len());
    let even = enumerate_assignments(&graph, 2, &[0]).map(|v| v.len());
    if odd != Ok(2) || even != Ok(0) {
        report.failures.push(format!(
            "loop graph: {odd:?} and {even:?} assignments, expected 2 and 0"
        ));
    }
    report.cases += 2;
    report
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> SuiteReport>)> = vec![
        (
            "well-definedness of products, l <= 10",
            Box::new(|| suites::well_definedness(10, PRIME)),
        ),
        (
            "commutativity and associativity, l <= 6",
            Box::new(|| {
                let mut c = suites::commutativity(6, PRIME);
                let a = suites::associativity(6, PRIME);
                c.cases += a.cases;
                c.failures.extend(a.failures);
                c
            }),
        ),
        (
            "power-map coherence, r <= 12",
            Box::new(|| suites::power_coherence(12, PRIME)),
        ),
        (
            "cokernel lengths at t = 0, r <= 12",
            Box::new(|| suites::cokernel_lengths(12, PRIME)),
        ),
        (
            "localized agreement, l <= 10",
            Box::new(|| suites::localization(10, PRIME)),
        ),
        (
            "automorphism orders, e | r <= 12",
            Box::new(|| suites::automorphism_orders(12, PRIME)),
        ),
        (
            "duality pairing, l <= 10",
            Box::new(|| suites::duality(10, PRIME)),
        ),
        (
            "resolution exactness, D <= 8",
            Box::new(|| suites::resolution(8, PRIME)),
        ),
        (
            "stratum enumeration vs brute force, r <= 6",
            Box::new(enumeration),
        ),
        (
            "closed-form chi and dimension table",
            Box::new(closed_forms),
        ),
        (
            "monomial oracle agreement, l <= 10, r <= 12",
            Box::new(|| suites::oracle_agreement(10, 12, PRIME)),
        ),
    ];
    let mut all = true;
    for (n, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let report = check();
        let secs = start.elapsed().as_secs_f64();
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {:>2}. {label} ({} cases, {secs:.2}s)",
            n + 1,
            report.cases
        );
        for f in report.failures.iter().take(5) {
            println!("        {f}");
        }
        all &= report.passed();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
