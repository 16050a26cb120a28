//! Grade-2 decomposition search: writing a transcendental 3F2 as
//! (algebraic 3F2) hadamard (1-t)^(-c), which certifies it is a diagonal.

use hyperdiag::arith::{int, rat};
use hyperdiag::classify::grade2_search;
use hyperdiag::hyperseries::{binomial_series, PFQParams};

fn main() {
    let tuples = [
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(2, 3)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(1, 3)),
        (rat(1, 4), rat(3, 8), rat(7, 8), rat(1, 3)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(1, 2)),
    ];
    for (a, b, c, d) in tuples {
        let params = PFQParams::new(vec![a, b, c], vec![int(1), d], int(1)).unwrap();
        match grade2_search(&params, 6).unwrap() {
            Some(dec) => {
                println!("{params}");
                println!(
                    "  = ({}) hadamard (1-t)^(-{})",
                    dec.algebraic_params, dec.hadamard_factor
                );
                println!("  partner: {}", dec.verdict);
                // the decomposition is an exact series identity
                let lhs = params.series(20);
                let rhs = dec
                    .algebraic_params
                    .series(20)
                    .hadamard(&binomial_series(&dec.hadamard_factor, 20));
                assert_eq!(lhs, rhs);
            }
            None => println!("{params}: no decomposition up to denominator 6"),
        }
        println!();
    }

    // the search is exhaustive over bounded denominators, so a None is
    // meaningful: no bounded swap makes this one algebraic
    let open = PFQParams::new(
        vec![rat(1, 9), rat(4, 9), rat(5, 9)],
        vec![int(1), rat(1, 3)],
        int(1),
    )
    .unwrap();
    println!("{open}: {:?}", grade2_search(&open, 12).unwrap());
}
