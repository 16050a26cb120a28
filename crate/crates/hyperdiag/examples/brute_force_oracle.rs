//! The brute-force oracle: multinomial expansion, truncated products, and
//! diagonal extraction, independent of every closed form.
//!
//! Includes the four-variable rational function `1/(1-(1+w)(x+y+z))`, whose
//! diagonal 1 + 18t + 1350t^2 + ... is hypergeometric without being of the
//! nested linear-form shape.

use hyperdiag::arith::{int, rat, Rational};
use hyperdiag::hyperseries::PFQParams;
use hyperdiag::linform::{parse_product, Sign};
use hyperdiag::oracle::{
    expand_geometric, expand_linear_power, extract_diag, multiply, oracle_diag, Polynomial,
};
use num_traits::One;

fn main() {
    // (1+x+y)^{1/3} to total degree 2
    let s = expand_linear_power(&[int(1), int(1)], &rat(1, 3), 2);
    println!(
        "(1+x+y)^(1/3) has {} terms to total degree 2:",
        s.num_terms()
    );
    for (idx, c) in s.terms() {
        println!("  x^{idx}: {c}");
    }

    // multiplying two powers of the same form adds exponents
    let a = expand_linear_power(&[int(1), int(1)], &rat(1, 3), 4);
    let b = expand_linear_power(&[int(1), int(1)], &rat(2, 3), 4);
    assert_eq!(
        multiply(&a, &b, 4).unwrap(),
        expand_linear_power(&[int(1), int(1)], &int(1), 4)
    );

    // oracle vs closed form on a three-variable product
    let product = parse_product("lin(2)^{1/3} * lin(3)^{-1}", Sign::Minus).unwrap();
    let brute = oracle_diag(&product, 4);
    assert_eq!(brute, product.diag_series(4));
    println!("oracle diagonal of {product}: {brute}");

    // 1/(1-(1+w)(x+y+z)) in the variables (w, x, y, z)
    let seed = Polynomial::new(
        4,
        vec![
            (vec![0, 1, 0, 0], Rational::one()),
            (vec![0, 0, 1, 0], Rational::one()),
            (vec![0, 0, 0, 1], Rational::one()),
            (vec![1, 1, 0, 0], Rational::one()),
            (vec![1, 0, 1, 0], Rational::one()),
            (vec![1, 0, 0, 1], Rational::one()),
        ],
    )
    .unwrap();
    let expansion = expand_geometric(&seed, 12).unwrap();
    let diagonal = extract_diag(&expansion, 3).unwrap();
    println!("diag 1/(1-(1+w)(x+y+z)) = {diagonal}");

    let params = PFQParams::new(
        vec![rat(1, 3), rat(1, 3), rat(2, 3), rat(2, 3)],
        vec![int(1), int(1), rat(1, 2)],
        rat(729, 4),
    )
    .unwrap();
    assert_eq!(diagonal, params.series(3));
    println!("matches {params}");
}
