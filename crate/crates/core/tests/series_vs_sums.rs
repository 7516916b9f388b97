//! The exact Fourier expansions, evaluated numerically, against direct
//! lattice sums at points where the truncated tail is negligible.

use num_complex::Complex64;
use proptest::prelude::*;

use k3theta::exactnum::RationalExponent;
use k3theta::qseries::{qexp_dk_theta, qexp_siegel_theta, SeriesLocus};
use k3theta::theta::{hermitian_theta, dk_char, siegel_char, siegel_theta, HermitianPoint, SiegelPoint, TruncationSpec};

const ORDER: i64 = 3;

fn point() -> impl Strategy<Value = (Complex64, Complex64, Complex64)> {
    // Im τ, Im τ′ ≥ 1.5 keeps |q|³ below 1e-12
    (-0.5..0.5f64, 1.5..2.5f64, -0.5..0.5f64, 1.5..2.5f64, -0.2..0.2f64, -0.2..0.2f64).prop_map(
        |(a, b, c, d, e, f)| (Complex64::new(a, b), Complex64::new(c, d), Complex64::new(e, f)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn siegel_series((tau, tau_prime, z) in point(), j in 0usize..10) {
        let s = qexp_siegel_theta(j, RationalExponent::integer(ORDER)).unwrap();
        let w = SiegelPoint::new(tau, z, tau_prime).unwrap();
        let direct = siegel_theta(&siegel_char(j).unwrap(), &w, &TruncationSpec::default()).unwrap();
        prop_assert!((s.eval(tau, tau_prime, z) - direct).norm() < 1e-9, "j = {}", j);
    }

    #[test]
    fn hermitian_series_on_both_loci((tau, tau_prime, z) in point(), k in 0usize..5) {
        let tr = TruncationSpec::default();
        let ch = dk_char(k).unwrap();
        let order = RationalExponent::integer(ORDER);
        let on_diag = HermitianPoint::on_diagonal(tau, z, tau_prime).unwrap();
        let s = qexp_dk_theta(k, SeriesLocus::Diagonal, order).unwrap();
        prop_assert!((s.eval(tau, tau_prime, z) - hermitian_theta(&ch, &on_diag, &tr).unwrap()).norm() < 1e-9);
        let on_anti = HermitianPoint::on_antidiagonal(tau, z, tau_prime).unwrap();
        let s = qexp_dk_theta(k, SeriesLocus::Antidiagonal, order).unwrap();
        prop_assert!((s.eval(tau, tau_prime, z) - hermitian_theta(&ch, &on_anti, &tr).unwrap()).norm() < 1e-9);
    }
}
