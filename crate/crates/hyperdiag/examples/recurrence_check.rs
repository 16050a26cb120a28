//! Recurrence verification for coefficient sequences.
//!
//! The diagonal of `(1-a*x)^(1/3)/(1-x-y)` satisfies an order-2 recurrence
//! with polynomial coefficients for every `a`; only for `a` in {0, 1, 2}
//! does it collapse to a hypergeometric (order-1) sequence.

use hyperdiag::arith::{int, rat};
use hyperdiag::hyperseries::{check_recurrence, Recurrence, RecurrenceCheck, Series};
use hyperdiag::verifier::{scenario, ScenarioArgs};

fn main() {
    // central binomial coefficients: (n+1) u_{n+1} = 2 (2n+1) u_n
    let central = Series::new(vec![int(1), int(2), int(6), int(20), int(70)]);
    let rec = Recurrence::new(vec![vec![int(-2), int(-4)], vec![int(1), int(1)]]).unwrap();
    match check_recurrence(&central, &rec) {
        RecurrenceCheck::Holds { through } => {
            println!("central binomials satisfy the order-1 recurrence for n = 0..={through}")
        }
        RecurrenceCheck::FailsAt { n, residual } => {
            println!("fails at {n} with residual {residual}")
        }
    }

    // a failing check pinpoints the first bad index
    let broken = Series::new(vec![int(1), int(1), int(2)]);
    let constant = Recurrence::new(vec![vec![int(-1)], vec![int(1)]]).unwrap();
    println!(
        "u_{{n+1}} = u_n on [1, 1, 2]: {:?}",
        check_recurrence(&broken, &constant)
    );

    // the full scripted family
    for a in [int(0), int(1), int(2), int(3), int(5)] {
        let report = scenario("recurrence-U", &ScenarioArgs::new().with("a", a), Some(20)).unwrap();
        print!("{report}");
        println!();
    }

    // a = 1/2 also satisfies the order-2 recurrence (any rational a does)
    let report = scenario(
        "recurrence-U",
        &ScenarioArgs::new().with("a", rat(1, 2)),
        Some(20),
    )
    .unwrap();
    print!("{report}");
}
