use std::sync::Arc;

use proptest::prelude::*;

use rfh_core::hermite::{gauss_hermite_rule, hermite_poly, HermiteBasis, WeightConvention};
use rfh_core::integral::{riemann_stieltjes, riemann_stieltjes_window, TestFunction};
use rfh_core::rfh::{random_phases, randomized_rft, unit_phase, EigenMode, RfhExpansion, SeriesScaling};
use rfh_core::rng::derive_seed;
use rfh_core::stable::{simulate_path, uniform_grid};
use rfh_core::stats::{wilson_interval, Z99};
use rfh_core::verify::{estimate_mean_error, estimate_prob_exceed, Sequential};

fn modes() -> impl Strategy<Value = EigenMode> {
    prop_oneof![
        Just(EigenMode::None),
        Just(EigenMode::Paper),
        any::<u64>().prop_map(|seed| EigenMode::Randomized { seed }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_parity(n in 0usize..60, t in -8.0f64..8.0) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert_eq!(hermite_poly(n, -t), sign * hermite_poly(n, t));
    }

    #[test]
    fn phases_have_unit_modulus(r in 0.0f64..1.0) {
        prop_assert!((unit_phase(r).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn wilson_brackets_the_proportion(n in 1usize..5000, frac in 0.0f64..=1.0) {
        let k = ((n as f64) * frac).floor() as usize;
        let (lo, hi) = wilson_interval(k, n, Z99);
        let p = k as f64 / n as f64;
        prop_assert!(0.0 <= lo && lo <= p + 1e-12 && p <= hi + 1e-12 && hi <= 1.0);
    }

    #[test]
    fn seeds_are_reproducible(master in any::<u64>(), k in 0u64..1_000_000) {
        prop_assert_eq!(derive_seed(master, k), derive_seed(master, k));
        prop_assert_ne!(derive_seed(master, k), derive_seed(master, k + 1));
    }

    #[test]
    fn window_sums_add_up(seed in any::<u64>(), cut in -1.5f64..1.5) {
        let grid = uniform_grid(2.0, 0.05).unwrap();
        let cut = (cut / 0.05).round() * 0.05;
        let path = simulate_path(grid, 1.8, seed).unwrap();
        let f = TestFunction::gaussian();
        let whole = riemann_stieltjes(&f, &path).unwrap();
        let left = riemann_stieltjes_window(&f, &path, -2.0, cut).unwrap();
        let right = riemann_stieltjes_window(&f, &path, cut, 2.0).unwrap();
        prop_assert!((whole - left - right).abs() < 1e-12);
    }

    #[test]
    fn rft_is_an_isometry(seed in any::<u64>(), n in 0usize..64) {
        let basis = HermiteBasis::new(64, WeightConvention::PaperLiteral);
        let rule = gauss_hermite_rule(96).unwrap();
        let rft = randomized_rft(&TestFunction::gaussian(), n, &random_phases(seed, n), &basis, &rule).unwrap();
        let (before, after) = rft.energies();
        prop_assert!((before - after).abs() < 1e-12);
        let back = rft.inverse_coeffs(&rft.transformed_coeffs());
        for (b, c) in back.iter().zip(rft.coeffs()) {
            prop_assert!((b.re - c).abs() < 1e-12 && b.im.abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn estimators_stay_in_range(seed in any::<u64>(), eps in 0.01f64..3.0, shift in -1.0f64..1.0) {
        let sampler = |s: u64| Ok(((s % 1000) as f64 / 500.0 - 1.0 + shift, 0.0));
        let p = estimate_prob_exceed(&Sequential, sampler, eps, 100, seed).unwrap();
        prop_assert!((0.0..=1.0).contains(&p.prob) && p.ci_halfwidth >= 0.0);
        let m = estimate_mean_error(&Sequential, sampler, 100, seed).unwrap();
        prop_assert!(m.mean >= 0.0 && m.ci_halfwidth >= 0.0);
    }

    #[test]
    fn partial_sum_equals_kernel_integral(
        seed in any::<u64>(),
        y in -2.0f64..2.0,
        n in 0usize..=32,
        mode in modes(),
        literal in any::<bool>(),
    ) {
        let basis = Arc::new(HermiteBasis::new(32, WeightConvention::PaperLiteral));
        let rule = gauss_hermite_rule(48).unwrap();
        let path = simulate_path(uniform_grid(6.0, 0.02).unwrap(), 2.0, seed).unwrap();
        let scaling = if literal { SeriesScaling::Literal } else { SeriesScaling::Orthonormal };
        let e = RfhExpansion::build(&TestFunction::cauchy_kernel(), basis, &rule, 32, &path, mode, scaling).unwrap();
        let s = e.partial_sum(y, n).unwrap();
        let target = e.target_integral(y, n, &path).unwrap();
        prop_assert!((s - target).norm() <= 1e-9 * (1.0 + s.norm()));
    }
}
