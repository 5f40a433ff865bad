//! Structural invariants of the production function, exercised over random
//! and gridded inputs.

use growth_core::{check_homogeneity, CobbDouglas, Tolerances};
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = f64> {
    // open-low, closed-high (0, 1]
    (1u32..=1000).prop_map(|i| i as f64 / 1000.0)
}

fn positive_quantity() -> impl Strategy<Value = f64> {
    // log-uniform over about twelve decades
    (-6.0f64..6.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    // ln F(lam K, lam L) = n ln lam + ln F(K, L) holds to round-off.
    #[test]
    fn log_space_homogeneity(
        alpha in exponent(),
        beta in exponent(),
        capital in positive_quantity(),
        labor in positive_quantity(),
        scale in positive_quantity(),
    ) {
        let p = CobbDouglas::new(alpha, beta).unwrap();
        let lhs = p.log_output(scale * capital, scale * labor).unwrap();
        let rhs = p.degree() * scale.ln() + p.log_output(capital, labor).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12, "lhs={lhs}, rhs={rhs}");
    }

    // f(K/L) = L^{-n} F(K, L), compared in log space.
    #[test]
    fn intensive_form_identity(
        alpha in exponent(),
        beta in exponent(),
        capital in positive_quantity(),
        labor in positive_quantity(),
    ) {
        let p = CobbDouglas::new(alpha, beta).unwrap();
        let lhs = p.intensive(capital / labor).unwrap().ln();
        let rhs = p.log_output(capital, labor).unwrap() - p.degree() * labor.ln();
        prop_assert!((lhs - rhs).abs() < 1e-12, "lhs={lhs}, rhs={rhs}");
    }

    #[test]
    fn homogeneity_check_passes_everywhere(
        alpha in exponent(),
        beta in exponent(),
        capital in positive_quantity(),
        labor in positive_quantity(),
        scale in positive_quantity(),
    ) {
        let p = CobbDouglas::new(alpha, beta).unwrap();
        let check = check_homogeneity(&p, capital, labor, scale, &Tolerances::default()).unwrap();
        prop_assert!(check.passed, "residual = {}", check.residual);
    }
}

#[test]
fn intensive_agrees_with_two_argument_form_on_log_grid() {
    let p = CobbDouglas::new(0.7, 0.4).unwrap();
    for i in 0..=60 {
        let k = 10f64.powf(-3.0 + 0.1 * i as f64);
        let a = p.intensive(k).unwrap();
        let b = p.evaluate(k, 1.0).unwrap();
        assert!(
            (a - b).abs() <= 1e-14 * b.abs(),
            "k={k}: intensive={a}, evaluate={b}"
        );
    }
}
