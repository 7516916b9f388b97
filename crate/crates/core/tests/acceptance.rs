//! The ten headline acceptance criteria, each at its stated tolerance and
//! time budget. Prints one line per criterion; run with `--nocapture` to see
//! them live.

use std::time::{Duration, Instant};

use k3theta::exactnum::RationalExponent;
use k3theta::theta::{Locus, TruncationSpec};
use k3theta::verify::*;
use k3theta::Result;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Vec<VerificationReport>,
}

const SEED: u64 = 0;
const POINTS: usize = 20;

fn tr() -> TruncationSpec {
    TruncationSpec::default()
}

fn one(id: &str, tol: f64, f: impl FnOnce() -> Result<(f64, String)>) -> VerificationReport {
    run_check(id, tol, f)
}

fn restriction() -> Vec<VerificationReport> {
    vec![
        one("z=w", 1e-9, || check_restriction(Locus::Diagonal, SEED, POINTS, &tr())),
        one("z=-w", 1e-9, || check_restriction(Locus::Antidiagonal, SEED, POINTS, &tr())),
    ]
}

fn t18_vanishing() -> Vec<VerificationReport> {
    vec![one("t18", 1e-8, || check_t18_diagonal(SEED, POINTS, &tr()))]
}

fn d90_vanishing() -> Vec<VerificationReport> {
    vec![one("d90", 1e-5, || check_d90_antidiagonal(SEED, POINTS, &tr()))]
}

fn bridge() -> Vec<VerificationReport> {
    vec![one("bridge", 1e-8, || check_igusa_bridge(SEED, POINTS, &tr()))]
}

fn transform() -> Vec<VerificationReport> {
    vec![one("psi", 1e-8, || check_theta_transform(SEED, 10, &tr()))]
}

fn group() -> Vec<VerificationReport> {
    let g = burkhardt_closure().expect("closure is finite");
    vec![
        one("order", 0.0, || check_group_order(&g)),
        one("molien", 0.0, || check_group_molien(&g, 20)),
    ]
}

fn fourier() -> Vec<VerificationReport> {
    vec![
        one("siegel thetas", 0.0, check_qexp_siegel_thetas),
        one("igusa", 0.0, check_qexp_igusa),
        one("dk thetas", 0.0, check_qexp_dk_thetas),
        one("burkhardt", 0.0, check_qexp_burkhardt),
        one("B18 on z=w", 0.0, || check_qexp_b18_diagonal(RationalExponent::integer(2))),
        one("leading points", 0.0, check_qexp_leading_points),
    ]
}

fn lattice() -> Vec<VerificationReport> {
    vec![
        one("discriminant", 0.0, check_lattice_discriminant),
        one("base change", 0.0, check_lattice_base_change),
        one("orthogonal images", 0.0, check_lattice_orth_images),
        one("monodromy", 0.0, check_lattice_monodromy),
    ]
}

fn transcription() -> Vec<VerificationReport> {
    vec![
        one("d90 weights", 0.0, check_d90_static),
        one("burkhardt invariance", 1e-9, || check_burkhardt_invariance(SEED, POINTS)),
    ]
}

fn fibration() -> Vec<VerificationReport> {
    vec![
        one("inventory", 0.0, || check_fibration_inventory(SEED, 10)),
        one("reference variant", 0.0, || check_reference_variant(0.01)),
    ]
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "restriction identity", budget: Duration::from_secs(10), run: restriction },
    Criterion { id: 2, name: "t18 vanishes on z=w", budget: Duration::from_secs(5), run: t18_vanishing },
    Criterion { id: 3, name: "d90 vanishes on z=-w", budget: Duration::from_secs(20), run: d90_vanishing },
    Criterion { id: 4, name: "Igusa-Burkhardt bridge", budget: Duration::from_secs(20), run: bridge },
    Criterion { id: 5, name: "modular equivariance", budget: Duration::from_secs(30), run: transform },
    Criterion { id: 6, name: "group order and Molien", budget: Duration::from_secs(60), run: group },
    Criterion { id: 7, name: "exact Fourier reproduction", budget: Duration::from_secs(10), run: fourier },
    Criterion { id: 8, name: "lattice suite", budget: Duration::from_secs(1), run: lattice },
    Criterion { id: 9, name: "transcription validators", budget: Duration::from_secs(5), run: transcription },
    Criterion { id: 10, name: "fibration inventory", budget: Duration::from_secs(5), run: fibration },
];

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let reports = (c.run)();
        let elapsed = start.elapsed();
        let correct = reports.iter().all(VerificationReport::passed);
        let in_time = elapsed <= c.budget;
        let verdict = if correct && in_time { "PASS" } else { "FAIL" };
        let parts: Vec<String> = reports
            .iter()
            .map(|r| format!("{} {:.1e}<={:.0e}", r.check_id, r.residual, r.tolerance))
            .collect();
        println!(
            "criterion {:>2} {verdict} {} [{:.2}s of {}s] {}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            parts.join("; ")
        );
        for r in reports.iter().filter(|r| !r.passed()) {
            println!("    {}: {}", r.check_id, r.details);
        }
        if verdict == "FAIL" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
