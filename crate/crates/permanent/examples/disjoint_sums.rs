//! The trimmed disjoint-summation engine on its own: superset transforms
//! over down-closures and the signed pair sum, checked against the literal
//! double loop.
//!
//! ```bash
//! cargo run --example disjoint_sums
//! ```

use permanent::algebra::{make_counting, Algebra, Int64};
use permanent::disjoint::{direct_disjoint_sum, disjoint_pair_sum, TrimmedTable};
use permanent::rng::SplitMix64;
use permanent::subsets::{binomial, binsum, enumerate_k_subsets, SubsetMask};

fn main() {
    // Superset sums of the constant-1 function on the 2-subsets of {1,2,3}:
    // the empty set sees all three, each singleton sees two.
    let f = TrimmedTable::from_top_layer(3, 2, vec![1i64; 3]);
    let z = permanent::disjoint::trimmed_superset_zeta(&Int64, &f).unwrap();
    println!("superset sums of 1 on the 2-subsets of {{1,2,3}}:");
    for k in 0..=2 {
        for x in enumerate_k_subsets(3, k) {
            println!("  z({x}) = {}", z.get(x).copied().unwrap_or(0));
        }
    }

    // Ordered disjoint singleton pairs over {1,2,3}: 3 * 2 = 6.
    let singles = TrimmedTable::from_top_layer(3, 1, vec![1i64; 3]);
    let fast = disjoint_pair_sum(&Int64, &singles, &singles).unwrap();
    let slow = direct_disjoint_sum(&Int64, &singles, &singles).unwrap();
    println!("\nordered disjoint singleton pairs over a 3-set: fast {fast}, direct {slow}");
    assert_eq!(fast, slow);

    // Random tables: the signed transform identity is exact, and the
    // transform pays one addition per down-closure merge instead of a
    // quadratic pass over pairs.
    let mut rng = SplitMix64::new(99);
    for (u, kf, kg) in [(8, 3, 2), (10, 5, 4), (12, 4, 4)] {
        let f_layer: Vec<i64> = (0..binomial(u, kf)).map(|_| Int64.sample(&mut rng)).collect();
        let g_layer: Vec<i64> = (0..binomial(u, kg)).map(|_| Int64.sample(&mut rng)).collect();
        let f = TrimmedTable::from_top_layer(u, kf, f_layer);
        let g = TrimmedTable::from_top_layer(u, kg, g_layer);

        let (counted, counter) = make_counting(Int64);
        let fast = disjoint_pair_sum(&counted, &f, &g).unwrap();
        let fast_ops = counter.total();
        counter.reset();
        let slow = direct_disjoint_sum(&counted, &f, &g).unwrap();
        let slow_ops = counter.total();
        assert_eq!(fast, slow);
        println!(
            "u={u:2} |S|={kf} |T|={kg}: value {fast:>12}, ops {fast_ops:>6} (transform) vs {slow_ops:>7} (direct), \
             tables hold {} + {} entries",
            binsum(u, kf),
            binsum(u, kg)
        );
    }

    // The transform reads only the down-closures; values below the top
    // layer violate the contract and are rejected.
    let mut bad = TrimmedTable::from_top_layer(4, 2, vec![1i64; 6]);
    bad.set(SubsetMask::from_elements(&[1]), 7);
    assert!(permanent::disjoint::trimmed_superset_zeta(&Int64, &bad).is_err());
    println!("\ntables with mass below their top layer are rejected, as they must be");
}
