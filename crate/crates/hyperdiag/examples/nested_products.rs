//! Diagonals of nested products `(1+x1)^{b1} ... (1+x1+..+xN)^{bN}`.
//!
//! For N = 3 the construction yields a 6F5; putting -1 on the widest form
//! cancels a parameter pair and leaves a 5F4.

use hyperdiag::arith::{int, rat};
use hyperdiag::builders::nested_params;
use hyperdiag::linform::{LinearFormProduct, Sign};

fn main() {
    let six_f_five = nested_params(&[rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap();
    println!("three general exponents:");
    println!("  {six_f_five}");

    let five_f_four = nested_params(&[rat(1, 2), rat(1, 3), int(-1)]).unwrap();
    println!("widest exponent -1 (one cancellation):");
    println!("  raw:     {five_f_four}");
    println!("  reduced: {}", five_f_four.reduce());

    // the parameter series equals the product's closed-form diagonal
    let product =
        LinearFormProduct::plain(vec![rat(1, 2), rat(1, 3), int(-1)], Sign::Plus).unwrap();
    let lhs = five_f_four.series(10);
    let rhs = product.diag_series(10);
    assert_eq!(lhs, rhs);
    println!("  diagonal: {lhs}");

    // interior zero exponents encode absent factors
    let sparse = nested_params(&[int(0), int(0), rat(1, 2)]).unwrap();
    println!("single width-3 factor at exponent 1/2:");
    println!("  reduced: {}", sparse.reduce());
}
