//! Master cross-check of the closed-form coefficient machinery against the
//! brute-force oracle, over the standard exponent set
//! {±1, ±1/2, ±1/3, 2/3, 2}.
//!
//! Exhaustive for one and two variables (both sign conventions, full
//! coefficient tables to total degree 6, diagonals to order 4); seeded
//! random samples for three and four variables, where exhaustion is out of
//! reach.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use hyperdiag::arith::{int, rat, MultiIndex, Rational};
use hyperdiag::linform::{LinearFormProduct, Sign};
use hyperdiag::oracle::{expand_linear_power, multiply, oracle_diag, TruncatedMultiSeries};

fn exponent_set() -> Vec<Rational> {
    vec![
        int(1),
        int(-1),
        rat(1, 2),
        rat(-1, 2),
        rat(1, 3),
        rat(-1, 3),
        rat(2, 3),
        int(2),
    ]
}

/// Full truncated expansion of a plain product, assembled from the public
/// oracle primitives.
fn full_expansion(product: &LinearFormProduct, bound: usize) -> TruncatedMultiSeries {
    let n = product.n_vars();
    let unit = product.sign().unit();
    let mut acc = TruncatedMultiSeries::one(n, bound);
    for (j, b) in product.exponents().iter().enumerate() {
        if b == &int(0) {
            continue;
        }
        let mut coeffs = vec![unit.clone(); j + 1];
        coeffs.resize(n, int(0));
        acc = multiply(&acc, &expand_linear_power(&coeffs, b, bound), bound).unwrap();
    }
    acc
}

fn indices_up_to(n_vars: usize, degree: usize) -> Vec<MultiIndex> {
    fn rec(prefix: &mut Vec<usize>, left: usize, n_vars: usize, out: &mut Vec<MultiIndex>) {
        if prefix.len() == n_vars {
            out.push(MultiIndex::new(prefix.clone()));
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(prefix, left - k, n_vars, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), degree, n_vars, &mut out);
    out
}

fn check_product(product: &LinearFormProduct) {
    let expansion = full_expansion(product, 6);
    for idx in indices_up_to(product.n_vars(), 6) {
        assert_eq!(
            product.coeff(&idx).unwrap(),
            expansion.coeff(&idx),
            "coefficient at {idx} of {product}"
        );
    }
    assert_eq!(
        product.diag_series(4),
        oracle_diag(product, 4),
        "diagonal of {product}"
    );
}

#[test]
fn exhaustive_one_and_two_variables() {
    let set = exponent_set();
    let mut count = 0usize;
    for sign in [Sign::Plus, Sign::Minus] {
        for b1 in &set {
            check_product(&LinearFormProduct::plain(vec![b1.clone()], sign).unwrap());
            count += 1;
        }
        for b1 in set.iter().chain(std::iter::once(&int(0))) {
            for b2 in &set {
                check_product(
                    &LinearFormProduct::plain(vec![b1.clone(), b2.clone()], sign).unwrap(),
                );
                count += 1;
            }
        }
    }
    println!("checked {count} products exhaustively");
}

#[test]
fn sampled_three_and_four_variables() {
    let set = exponent_set();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..18 {
        let n_vars = *[3usize, 4].choose(&mut rng).unwrap();
        let mut exponents: Vec<Rational> = (0..n_vars)
            .map(|_| {
                if rng.gen_bool(0.25) {
                    int(0) // interior zeros encode absent factors
                } else {
                    set.choose(&mut rng).unwrap().clone()
                }
            })
            .collect();
        let last = set.choose(&mut rng).unwrap().clone();
        exponents[n_vars - 1] = last;
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        check_product(&LinearFormProduct::plain(exponents, sign).unwrap());
    }
}

#[test]
fn sampled_doubled_diagonals() {
    let set = exponent_set();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..16 {
        let n_vars = *[2usize, 3, 4].choose(&mut rng).unwrap();
        let mut exponents: Vec<Rational> = (0..n_vars)
            .map(|_| set.choose(&mut rng).unwrap().clone())
            .collect();
        let last = set.choose(&mut rng).unwrap().clone();
        exponents[n_vars - 2] = -int(1) - &last;
        exponents[n_vars - 1] = last;
        let doubled = set.choose(&mut rng).unwrap().clone();
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let product = LinearFormProduct::new(exponents, Some(doubled), sign).unwrap();
        let order = if n_vars == 4 { 3 } else { 4 };
        assert_eq!(
            product.diag_series(order),
            oracle_diag(&product, order),
            "diagonal of {product}"
        );
    }
}
