//! Products with one doubled-variable factor
//! `(1-x1-..-x_{N-2}-2x_{N-1})^b`, available when `b_{N-1}+b_N = -1`.
//!
//! The doubled factor contributes `4^k C((b-1)/2, k)` to the diagonal; the
//! variable coefficient 2 is the only value that admits such a closed form.

use hyperdiag::arith::{int, rat};
use hyperdiag::builders::doubled_params;
use hyperdiag::linform::{doubled_kernel_coeff, parse_product, Sign};

fn main() {
    // (1-x-2y)^{2/3}/(1-x-y-z) and (1-x-2y)^{1/3}/(1-x-y-z): after the sign
    // flip t -> -t these are 3F2s at argument 27t
    for b in [rat(2, 3), rat(1, 3)] {
        let params = doubled_params(&[int(0), int(0), int(-1)], &b).unwrap();
        // minus convention: scale picks up (-1)^3
        let minus = params.with_scale(-params.scale().clone());
        println!("doubled exponent {b}: {}", minus.reduce());
    }

    // the same machinery through the textual product syntax
    let product = parse_product("dbl(2)^{2/3} * lin(3)^{-1}", Sign::Minus).unwrap();
    println!("diagonal of {product}: {}", product.diag_series(6));

    // the kernel itself: [x^k] (1+2x)^b / (1+x)^(k+1)
    let b = rat(1, 3);
    let kernel: Vec<String> = (0..6)
        .map(|k| doubled_kernel_coeff(&b, k).to_string())
        .collect();
    println!("kernel coefficients for b = {b}: [{}]", kernel.join(", "));

    // violating b_{N-1} + b_N = -1 is rejected
    let err = doubled_params(&[int(0), rat(-1, 2)], &rat(1, 3)).unwrap_err();
    println!("constraint violation: {err}");
}
