//! Parse a matrix, pick an algorithm automatically, and compare every
//! applicable evaluation path on the same input.
//!
//! ```bash
//! cargo run --example compute_permanent
//! ```

use permanent::algebra::{Algebra, BigIntAlg};
use permanent::cli::{algo_auto_select, applicable};
use permanent::matrix::parse_matrix;
use permanent::perm::{
    per_bruteforce, per_dp_columns, per_dp_rows, per_ryser, per_ryser_split,
    per_ryser_transposed, Algorithm, Variant,
};

fn main() {
    let text = "\
# a 3x5 integer matrix; comment lines are skipped
3 5
1 2 3 4 5
6 7 8 9 10
11 12 13 14 15
";
    let alg = BigIntAlg;
    let a = parse_matrix(text, alg).expect("well-formed matrix text");
    let (m, n) = (a.rows(), a.cols());
    println!("matrix: {m} x {n} over {}", alg.name());

    let oracle = per_bruteforce(&a).expect("shape is valid");
    println!("brute-force oracle: {oracle}");

    let auto = algo_auto_select(alg.is_commutative(), alg.has_negation(), m, n, Variant::Per);
    println!("auto-selected algorithm: {auto}");

    for algo in [
        Algorithm::DpColumns,
        Algorithm::DpRows,
        Algorithm::Ryser,
        Algorithm::RyserSplit,
        Algorithm::RyserTransposed,
    ] {
        if !applicable(algo, Variant::Per, alg.is_commutative(), alg.has_negation()) {
            continue;
        }
        let report = match algo {
            Algorithm::DpColumns => per_dp_columns(&a),
            Algorithm::DpRows => per_dp_rows(&a, Variant::Per),
            Algorithm::Ryser => per_ryser(&a),
            Algorithm::RyserSplit => per_ryser_split(&a),
            Algorithm::RyserTransposed => per_ryser_transposed(&a, Variant::Per),
            Algorithm::Brute => unreachable!(),
        }
        .expect("applicable algorithm");
        let marker = if algo == auto { "  <- auto" } else { "" };
        println!("{algo:12} -> {}{marker}", report.value);
        assert_eq!(report.value, oracle);
    }
}
