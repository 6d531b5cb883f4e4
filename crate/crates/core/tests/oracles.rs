use std::f64::consts::PI;
use std::sync::Arc;

use rfh_core::hermite::{
    gauss_hermite_rule, hermite_poly, weighted_inner_product, HermiteBasis, WeightConvention,
};
use rfh_core::integral::{exact_integral_sampler, riemann_stieltjes, TestFunction};
use rfh_core::quad;
use rfh_core::rfh::{coefficients, projection_coeffs, random_coeffs, weighted_energy, EigenMode, RfhExpansion, SeriesScaling};
use rfh_core::rng::{derive_seed, rng_from_seed};
use rfh_core::stable::{simulate_path, uniform_grid};
use rfh_core::stats::ks_two_sample;

/// `c_{2j} = ∫ e^{−t²} H_{2j}(t) e^{−t²} dt / ‖H_{2j}‖
///         = √(π/2) (2j)! (−1/2)^j / (j! ‖H_{2j}‖)`, odd coefficients vanish.
fn gaussian_coeff(basis: &HermiteBasis, k: usize) -> f64 {
    if !k.is_multiple_of(2) {
        return 0.0;
    }
    let j = k / 2;
    let log = 0.5 * (PI / 2.0).ln() + libm::lgamma(k as f64 + 1.0)
        - j as f64 * 2f64.ln()
        - libm::lgamma(j as f64 + 1.0)
        - basis.log_norm(k).unwrap();
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * log.exp()
}

#[test]
fn normalized_recurrence_matches_raw_polynomials() {
    let basis = HermiteBasis::new(40, WeightConvention::HalfWeight);
    let mut phi = vec![0.0; 41];
    for t in [-3.7, -1.0, 0.0, 0.25, 2.5, 5.0] {
        basis.phi_all(t, &mut phi).unwrap();
        for (n, &got) in phi.iter().enumerate() {
            let want = hermite_poly(n, t) * (-0.5 * t * t).exp() / basis.norm(n).unwrap();
            assert!((got - want).abs() <= 1e-12 * want.abs().max(1e-3), "n={n} t={t}: {got} vs {want}");
        }
    }
}

#[test]
fn orthonormal_functions_are_orthonormal_on_the_line() {
    // ∫ φ_m φ_n dt under the half-weight convention, by Gauss-Hermite after
    // factoring out e^{−t²}
    let basis = HermiteBasis::new(30, WeightConvention::HalfWeight);
    let rule = gauss_hermite_rule(64).unwrap();
    let mut phi = vec![0.0; 31];
    let mut gram = vec![0.0; 31 * 31];
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        basis.phi_all(x, &mut phi).unwrap();
        let back = (x * x).exp();
        for m in 0..=30 {
            for n in 0..=30 {
                gram[m * 31 + n] += w * back * phi[m] * phi[n];
            }
        }
    }
    for m in 0..=30 {
        for n in 0..=30 {
            let want = if m == n { 1.0 } else { 0.0 };
            assert!((gram[m * 31 + n] - want).abs() < 1e-12, "({m},{n}) {}", gram[m * 31 + n]);
        }
    }
}

#[test]
fn symmetric_orthogonality_holds_to_double_precision() {
    let rule = gauss_hermite_rule(32).unwrap();
    let basis = HermiteBasis::new(20, WeightConvention::PaperLiteral);
    for m in 0..=20 {
        for n in 0..=20 {
            let g = |t: f64| hermite_poly(m, t);
            let h = |t: f64| hermite_poly(n, t);
            let ip = weighted_inner_product(g, h, &rule).unwrap();
            let scale = basis.norm(m).unwrap() * basis.norm(n).unwrap();
            let want = if m == n { 1.0 } else { 0.0 };
            assert!((ip / scale - want).abs() < 1e-12, "({m},{n})");
        }
    }
}

#[test]
fn gaussian_coefficients_match_closed_form() {
    let basis = HermiteBasis::new(128, WeightConvention::PaperLiteral);
    let rule = gauss_hermite_rule(144).unwrap();
    let c = coefficients(&TestFunction::gaussian(), 128, &basis, &rule).unwrap();
    for (k, &got) in c.iter().enumerate() {
        let want = gaussian_coeff(&basis, k);
        assert!((got - want).abs() < 1e-14, "k={k}: {got} vs {want}");
    }
    assert!((c[0] - 0.941_396_263_776_714_8).abs() < 1e-15);
    assert!(c[64].abs() < 1e-10);
    // the non-vanishing (even) coefficients decay monotonically until they
    // reach the quadrature noise floor; past order 64 all stay below 1e-10
    let even: Vec<f64> = c[..=64].iter().step_by(2).map(|v| v.abs()).collect();
    assert!(even.windows(2).all(|w| w[1] < w[0]));
    assert!(c[64..].iter().all(|v| v.abs() < 1e-10));
}

fn oracle_expansion(scaling: SeriesScaling) -> RfhExpansion {
    let basis = Arc::new(HermiteBasis::new(128, WeightConvention::PaperLiteral));
    let c: Vec<f64> = (0..=128).map(|k| gaussian_coeff(&basis, k)).collect();
    RfhExpansion::new(basis, c, vec![0.0; 129], EigenMode::None, scaling, 0).unwrap()
}

#[test]
fn reference_kernel_orthonormal_vs_literal() {
    let k = oracle_expansion(SeriesScaling::Orthonormal).kernel_fn(0.0, 0.0, 128).unwrap();
    assert!((k - 0.459_464_544_253_495_5).abs() < 1e-13, "{k}");
    // the literal series multiplies each term by ‖H_k‖ and blows up
    let k = oracle_expansion(SeriesScaling::Literal).kernel_fn(0.0, 0.0, 128).unwrap();
    assert!((k / 8.135e105 - 1.0).abs() < 1e-3, "{k}");
}

#[test]
fn parseval_for_catalog() {
    let basis = HermiteBasis::new(64, WeightConvention::PaperLiteral);
    let rule = gauss_hermite_rule(200).unwrap();
    for f in TestFunction::catalog() {
        let energy = weighted_energy(&f, &rule);
        let a = projection_coeffs(&f, 64, &basis, &rule).unwrap();
        let mut partial = 0.0;
        for v in &a {
            partial += v * v;
            assert!(partial <= energy + 1e-10, "{}", f.name());
        }
    }
}

#[test]
fn fourier_eigenrelation_for_half_weight_functions() {
    // (1/√(2π)) ∫ φ_n(t) e^{−iωt} dt = (−i)^n φ_n(ω)
    let basis = HermiteBasis::new(8, WeightConvention::HalfWeight);
    let cuts: Vec<f64> = (-12..=12).map(f64::from).collect();
    for n in 0..=8 {
        for w in [-1.5, -0.3, 0.0, 0.7, 2.0] {
            let re = quad::integrate_piecewise(|t| basis.phi(n, t).unwrap() * (w * t).cos(), -12.0, 12.0, &cuts).unwrap();
            let im = quad::integrate_piecewise(|t| -basis.phi(n, t).unwrap() * (w * t).sin(), -12.0, 12.0, &cuts).unwrap();
            let s = (2.0 * PI).sqrt();
            let (re, im) = (re / s, im / s);
            let target = basis.phi(n, w).unwrap();
            // (−i)^n cycles through 1, −i, −1, i
            let (want_re, want_im) = match n % 4 {
                0 => (target, 0.0),
                1 => (0.0, -target),
                2 => (-target, 0.0),
                _ => (0.0, target),
            };
            assert!((re - want_re).abs() < 1e-6 && (im - want_im).abs() < 1e-6, "n={n} ω={w}");
        }
    }
}

#[test]
fn random_coefficient_second_moments() {
    // Var A_0 = 2∫φ_0² = √2, Cov(A_0, A_2) = 2∫φ_0 φ_2 = −1/2, Cov(A_0, A_1) = 0
    let basis = HermiteBasis::new(2, WeightConvention::PaperLiteral);
    let grid: Arc<[f64]> = uniform_grid(6.0, 0.01).unwrap().into();
    let n = 6000;
    let (mut s00, mut s01, mut s02) = (0.0, 0.0, 0.0);
    for k in 0..n {
        let path = simulate_path(Arc::clone(&grid), 2.0, derive_seed(77, k)).unwrap();
        let a = random_coeffs(&basis, 2, &path).unwrap();
        s00 += a[0] * a[0];
        s01 += a[0] * a[1];
        s02 += a[0] * a[2];
    }
    let nf = n as f64;
    let (v00, c01, c02) = (s00 / nf, s01 / nf, s02 / nf);
    // four standard errors
    assert!((v00 - 2f64.sqrt()).abs() < 4.0 * 2f64.sqrt() * (2.0 / nf).sqrt(), "{v00}");
    assert!(c01.abs() < 4.0 * (2f64.sqrt() * 2f64.sqrt() / nf).sqrt(), "{c01}");
    assert!((c02 + 0.5).abs() < 4.0 * (2.0 / nf).sqrt() * 1.5, "{c02}");
}

#[test]
fn stochastic_integral_is_linear_on_a_path() {
    let grid = uniform_grid(6.0, 0.01).unwrap();
    let f = TestFunction::gaussian();
    let g = TestFunction::cauchy_kernel();
    let combo = TestFunction::linear_combination(2.5, &f, -0.75, &g);
    for seed in 0..5 {
        let path = simulate_path(grid.clone(), 1.6, seed).unwrap();
        let lhs = riemann_stieltjes(&combo, &path).unwrap();
        let rhs = 2.5 * riemann_stieltjes(&f, &path).unwrap() - 0.75 * riemann_stieltjes(&g, &path).unwrap();
        assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()));
    }
}

#[test]
fn riemann_stieltjes_agrees_with_exact_law() {
    let grid: Arc<[f64]> = uniform_grid(6.0, 0.01).unwrap().into();
    for (f, alpha) in [(TestFunction::gaussian(), 1.5), (TestFunction::t_gaussian(), 2.0)] {
        let n = 1500;
        let sums: Vec<f64> = (0..n)
            .map(|k| riemann_stieltjes(&f, &simulate_path(Arc::clone(&grid), alpha, derive_seed(3, k)).unwrap()).unwrap())
            .collect();
        let mut rng = rng_from_seed(4);
        let exact: Vec<f64> = (0..n).map(|_| exact_integral_sampler(&f, alpha, &mut rng).unwrap()).collect();
        let ks = ks_two_sample(&sums, &exact);
        assert!(ks.p_value > 0.01, "{} α={alpha}: {ks:?}", f.name());
    }
}
