//! The two-factor ratio family `(1-x1-..-xn)^R / (1-x1-..-xN)^S`.
//!
//! Builds the hypergeometric parameters, reduces them, and cross-checks the
//! series against the family's independent closed-form coefficients.

use hyperdiag::arith::{int, rat};
use hyperdiag::builders::{ratio_diag_coeff, ratio_params, RatioSpec};
use hyperdiag::hyperseries::Series;

fn main() {
    let specs = [
        (
            "cube-root numerator",
            RatioSpec::new(rat(1, 3), int(1), 2, 3).unwrap(),
        ),
        (
            "square-root numerator",
            RatioSpec::new(rat(1, 2), int(1), 2, 3).unwrap(),
        ),
        (
            "pure geometric",
            RatioSpec::new(int(0), int(1), 0, 2).unwrap(),
        ),
        (
            "five variables",
            RatioSpec::new(rat(-1, 2), rat(1, 3), 2, 5).unwrap(),
        ),
    ];
    for (label, spec) in specs {
        println!(
            "{label}: R = {}, S = {}, widths ({}, {})",
            spec.inner_exp(),
            spec.outer_pow(),
            spec.inner_width(),
            spec.n_vars()
        );
        match ratio_params(&spec) {
            Ok(params) => {
                println!("  params:  {params}");
                println!("  reduced: {}", params.reduce());
                let series = params.series(8);
                let closed = Series::new((0..=8).map(|k| ratio_diag_coeff(&spec, k)).collect());
                assert_eq!(series, closed, "pFq must match the closed form");
                println!("  series:  {series}");
            }
            Err(e) => println!("  builder refused: {e}"),
        }
        println!();
    }

    // a refusal: R = 5, S = 1 puts the nonpositive integer -4 on the bottom
    let degenerate = RatioSpec::new(int(5), int(1), 2, 3).unwrap();
    println!("degenerate: {:?}", ratio_params(&degenerate).err());
    let closed = Series::new((0..=6).map(|k| ratio_diag_coeff(&degenerate, k)).collect());
    println!("closed form still works: {closed}");
}
