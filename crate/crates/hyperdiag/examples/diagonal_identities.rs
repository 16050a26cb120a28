//! Multi-route verification of diagonal identities.
//!
//! Every identity is checked along independent routes: the product's
//! closed-form coefficients, the constructed pFq, and the brute-force
//! multivariate oracle. Run with `cargo run --example diagonal_identities`.

use hyperdiag::linform::{parse_product, Sign};
use hyperdiag::verifier::verify_identity;

fn main() {
    let products = [
        "lin(2)^{1/3} * lin(3)^{-1}", // a 3F2 with tops 2/9, 5/9, 8/9
        "lin(2)^{2/3} * lin(3)^{-1}", // a 3F2 with tops 1/9, 4/9, 7/9
        "lin(2)^{-1}",                // central binomial coefficients
        "lin(1)^{1/2} * lin(2)^{-2}", // bivariate, integer outer exponent
        "dbl(2)^{2/3} * lin(3)^{-1}", // doubled-variable factor
    ];
    for text in products {
        let product = parse_product(text, Sign::Minus).unwrap();
        let report = verify_identity(&product, 20, 5);
        print!("{report}");
        println!();
    }
}
