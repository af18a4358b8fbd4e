//! Measured additions and multiplications per algorithm, next to the
//! predicted operation bounds, on one rectangular shape.
//!
//! The counting wrapper delegates every ring operation to the base algebra
//! and tallies it, so the numbers below are the real costs of the runs that
//! produced the (identical) values.
//!
//! ```bash
//! cargo run --example count_operations
//! ```

use permanent::algebra::{make_counting, BigIntAlg};
use permanent::matrix::Matrix;
use permanent::perm::{
    per_dp_columns, per_dp_rows, per_ryser, per_ryser_split, per_ryser_transposed, Algorithm,
    Variant,
};
use permanent::rng::SplitMix64;

fn main() {
    let (m, n) = (6, 14);
    println!("shape {m} x {n} over bigint\n");
    println!(
        "{:<12} {:>10} {:>10} {:>12} {:>14}",
        "algorithm", "adds", "muls", "adds+muls", "bound"
    );

    let mut value = None;
    for algo in [
        Algorithm::DpColumns,
        Algorithm::DpRows,
        Algorithm::Ryser,
        Algorithm::RyserSplit,
        Algorithm::RyserTransposed,
    ] {
        let (alg, _counter) = make_counting(BigIntAlg);
        let mut rng = SplitMix64::new(2024);
        let a = Matrix::random(alg, m, n, &mut rng);
        let report = match algo {
            Algorithm::DpColumns => per_dp_columns(&a),
            Algorithm::DpRows => per_dp_rows(&a, Variant::Per),
            Algorithm::Ryser => per_ryser(&a),
            Algorithm::RyserSplit => per_ryser_split(&a),
            Algorithm::RyserTransposed => per_ryser_transposed(&a, Variant::Per),
            Algorithm::Brute => unreachable!(),
        }
        .unwrap();
        println!(
            "{:<12} {:>10} {:>10} {:>12} {:>14}",
            algo.to_string(),
            report.adds,
            report.muls,
            report.ops_total(),
            report.predicted_bound
        );
        match &value {
            None => value = Some(report.value),
            Some(v) => assert_eq!(*v, report.value, "{algo} disagreed"),
        }
    }
    println!("\nall five runs computed the same value: {}", value.unwrap());
    println!("(dp-col's bound is its exact multiplication count, not a total-ops cap)");
}
