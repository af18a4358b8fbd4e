//! Tour of the six shipped algebras: capabilities, element text forms, and
//! a seeded axiom check for each.
//!
//! ```bash
//! cargo run --example algebra_tour
//! ```

use permanent::algebra::{
    law_check, Algebra, BigIntAlg, Int64, Mat2Int, Mat2Nat, ModP, Tropical,
};

fn tour<A: Algebra>(alg: A, sample_texts: &[&str]) {
    let report = law_check(&alg, 1, 200);
    let commut = if alg.is_commutative() { "commutative" } else { "noncommutative" };
    let ring = if alg.has_negation() { "ring" } else { "semiring" };
    println!("{:10} {commut} {ring}", alg.name());
    println!("  zero = {}, one = {}", alg.render_elem(&alg.zero()), alg.render_elem(&alg.one()));
    for text in sample_texts {
        let x = alg.parse_elem(text).expect("canonical form");
        let doubled = alg.add(&x, &x);
        let squared = alg.mul(&x, &x);
        println!(
            "  x = {text}: x+x = {}, x*x = {}",
            alg.render_elem(&doubled),
            alg.render_elem(&squared)
        );
    }
    let status = if report.all_hold() { "all axioms hold" } else { "AXIOM VIOLATION" };
    println!("  law check over {} samples: {status}", report.trials);
    for entry in report.violations() {
        println!("    violated: {} at {:?}", entry.law, entry.witness);
    }
    if !alg.is_commutative() {
        let witness = report
            .entries
            .iter()
            .find(|e| e.law == "noncommutativity witness found")
            .and_then(|e| e.witness.clone());
        println!("  multiplication really is order-sensitive: {}", witness.unwrap());
    }
    println!();
}

fn main() {
    tour(Int64, &["7", "-3"]);
    tour(BigIntAlg, &["123456789012345678901234567890"]);
    tour(ModP::new(97).unwrap(), &["95", "-1"]);
    tour(Tropical, &["4", "inf"]);
    tour(Mat2Nat, &["0,1,0,0", "1,2,3,4"]);
    tour(Mat2Int, &["0,-1,1,0"]);
}
