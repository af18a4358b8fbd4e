//! Growth curves: measured operation totals for the four fast families as
//! the column count grows at fixed row count, illustrating where the
//! rectangular-matrix algorithms pull ahead.
//!
//! ```bash
//! cargo run --release --example bench_curves
//! ```

use permanent::algebra::{make_counting, ModP};
use permanent::matrix::Matrix;
use permanent::perm::{
    per_dp_columns, per_dp_rows, per_ryser, per_ryser_split, per_ryser_transposed, Algorithm,
    Variant,
};
use permanent::rng::SplitMix64;

fn main() {
    let m = 8;
    println!("total ring operations at m = {m}, growing n (mod:1000000007 entries)\n");
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "n", "dp-col", "dp-row", "ryser", "ryser-split", "ryser-t"
    );
    for n in [8, 10, 12, 14, 16, 18, 20, 22, 24] {
        let mut row = format!("{n:>3}");
        for algo in [
            Algorithm::DpColumns,
            Algorithm::DpRows,
            Algorithm::Ryser,
            Algorithm::RyserSplit,
            Algorithm::RyserTransposed,
        ] {
            let (alg, counter) = make_counting(ModP::new(1_000_000_007).unwrap());
            let mut rng = SplitMix64::stream(3, n as u64);
            let a = Matrix::random(alg, m, n, &mut rng);
            match algo {
                Algorithm::DpColumns => per_dp_columns(&a).map(|_| ()),
                Algorithm::DpRows => per_dp_rows(&a, Variant::Per).map(|_| ()),
                Algorithm::Ryser => per_ryser(&a).map(|_| ()),
                Algorithm::RyserSplit => per_ryser_split(&a).map(|_| ()),
                Algorithm::RyserTransposed => per_ryser_transposed(&a, Variant::Per).map(|_| ()),
                Algorithm::Brute => unreachable!(),
            }
            .unwrap();
            row.push_str(&format!(" {:>12}", counter.total()));
        }
        println!("{row}");
    }

    println!("\nsquare matrices for contrast (n = m):\n");
    println!("{:>3} {:>12} {:>12} {:>12} {:>12} {:>12}", "m", "dp-col", "dp-row", "ryser", "ryser-split", "ryser-t");
    for m in [4, 6, 8, 10, 12, 14] {
        let mut row = format!("{m:>3}");
        for algo in [
            Algorithm::DpColumns,
            Algorithm::DpRows,
            Algorithm::Ryser,
            Algorithm::RyserSplit,
            Algorithm::RyserTransposed,
        ] {
            let (alg, counter) = make_counting(ModP::new(1_000_000_007).unwrap());
            let mut rng = SplitMix64::stream(4, m as u64);
            let a = Matrix::random(alg, m, m, &mut rng);
            match algo {
                Algorithm::DpColumns => per_dp_columns(&a).map(|_| ()),
                Algorithm::DpRows => per_dp_rows(&a, Variant::Per).map(|_| ()),
                Algorithm::Ryser => per_ryser(&a).map(|_| ()),
                Algorithm::RyserSplit => per_ryser_split(&a).map(|_| ()),
                Algorithm::RyserTransposed => per_ryser_transposed(&a, Variant::Per).map(|_| ()),
                Algorithm::Brute => unreachable!(),
            }
            .unwrap();
            row.push_str(&format!(" {:>12}", counter.total()));
        }
        println!("{row}");
    }
    println!("\nfor CSV output with wall times: perm bench --algebras mod:1000000007 --m 2..8 --n 2..16");
}
