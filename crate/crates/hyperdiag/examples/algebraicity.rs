//! Algebraicity analysis: weight screen, interlacing criterion, and the
//! shape rule for linear-form products.

use hyperdiag::arith::{int, rat};
use hyperdiag::classify::{classify_product, interlacing_check, weight_screen};
use hyperdiag::hyperseries::PFQParams;
use hyperdiag::linform::{parse_product, Sign};

fn main() {
    let cases = [
        ("Schwarz 2F1", vec![rat(1, 6), rat(5, 6)], vec![rat(1, 2)]),
        (
            "arithmetic-progression 3F2, bottom 1/2",
            vec![rat(2, 9), rat(5, 9), rat(8, 9)],
            vec![rat(1, 2), rat(2, 3)],
        ),
        (
            "open 3F2",
            vec![rat(1, 9), rat(4, 9), rat(5, 9)],
            vec![int(1), rat(1, 3)],
        ),
    ];
    for (label, top, bottom) in cases {
        let params = PFQParams::new(top, bottom, int(1)).unwrap().reduce();
        println!("{label}: {params}");
        println!("  weight screen: {}", weight_screen(&params));
        println!("  interlacing:   {}", interlacing_check(&params));
        println!();
    }

    // products classify by shape: algebraic iff univariate, or bivariate
    // with an integer outermost exponent
    for text in [
        "lin(1)^{1/3}",
        "lin(1)^{1/2} * lin(2)^{-1}",
        "lin(2)^{1/2}",
        "lin(2)^{1/3} * lin(3)^{-1}",
    ] {
        let product = parse_product(text, Sign::Minus).unwrap();
        println!("{product}: {}", classify_product(&product).unwrap());
    }
}
