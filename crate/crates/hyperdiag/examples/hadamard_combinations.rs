//! Hadamard products of pFq series: the bottom-swap identity and the two
//! non-symmetric combinations it enables.
//!
//! Term-wise multiplication breaks the arithmetic-progression symmetry of
//! single identities: combining two progression-type functions yields
//! hypergeometric functions whose parameters are not a union of
//! progressions.

use hyperdiag::arith::{int, rat};
use hyperdiag::hyperseries::{binomial_series, PFQParams};
use hyperdiag::verifier::{hadamard_combination, scenario, ScenarioArgs};

fn main() {
    // bottom swap: replacing a bottom 1 by c costs a factor (c)_k / k!,
    // which is exactly the Hadamard factor (1-t)^(-c)
    let original = PFQParams::new(vec![rat(1, 6), rat(5, 6)], vec![int(1)], int(1)).unwrap();
    let partner = PFQParams::new(vec![rat(1, 6), rat(5, 6)], vec![rat(1, 2)], int(1)).unwrap();
    let lhs = partner
        .series(12)
        .hadamard(&binomial_series(&rat(1, 2), 12));
    assert_eq!(lhs, original.series(12));
    println!("({partner}) hadamard (1-t)^(-1/2) = {original}");
    println!();

    // the same check through the report machinery
    let half = PFQParams::new(vec![rat(1, 2)], vec![], int(1)).unwrap();
    let report = hadamard_combination(&partner, &half, &original, 20);
    print!("{report}");
    println!();

    // the two scripted non-symmetric combinations
    for name in ["hadamard-asym-1", "hadamard-asym-2"] {
        let report = scenario(name, &ScenarioArgs::new().with("Q", rat(1, 2)), Some(15)).unwrap();
        print!("{report}");
        println!();
    }
}
