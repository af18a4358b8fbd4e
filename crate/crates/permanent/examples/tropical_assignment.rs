//! Minimum-cost assignment as a tropical permanent.
//!
//! In the min-plus semiring, "addition" is min and "multiplication" is
//! numeric addition, so the permanent of a cost matrix is the minimum over
//! all ways to assign each row to a distinct column of the summed cost.
//! The dynamic programs run unchanged; the inclusion-exclusion algorithms
//! do not apply (min has no inverse) and say so.
//!
//! ```bash
//! cargo run --example tropical_assignment
//! ```

use permanent::algebra::{Algebra, Trop, Tropical};
use permanent::matrix::{parse_matrix, Matrix};
use permanent::perm::{per_dp_columns, per_dp_rows, per_ryser, Variant};
use permanent::rng::SplitMix64;

fn main() {
    // Three workers, five tasks.
    let text = "\
3 5
4 1 3 9 2
2 0 5 8 3
3 2 2 7 6
";
    let a = parse_matrix(text, Tropical).unwrap();
    let report = per_dp_columns(&a).unwrap();
    println!("cost matrix (3 workers x 5 tasks):");
    for i in 0..a.rows() {
        let row: Vec<String> = (0..a.cols()).map(|j| Tropical.render_elem(a.entry(i, j))).collect();
        println!("  {}", row.join(" "));
    }
    println!("cheapest assignment cost = {}", Tropical.render_elem(&report.value));
    // workers take tasks (5, 2, 3): 2 + 0 + 2
    assert_eq!(report.value, Trop::Fin(4));
    println!();

    // Unreachable tasks are +inf entries; they are simply never picked.
    let b = parse_matrix("2 3\n1 inf 5\ninf 2 4", Tropical).unwrap();
    let r = per_dp_rows(&b, Variant::Per).unwrap();
    println!("with unreachable cells marked inf: cheapest = {}", Tropical.render_elem(&r.value));
    assert_eq!(r.value, Trop::Fin(3));

    // A matrix with an all-inf row has no feasible assignment at all.
    let c = parse_matrix("2 2\ninf inf\n1 2", Tropical).unwrap();
    let r = per_dp_columns(&c).unwrap();
    println!("with one unassignable worker: cheapest = {}", Tropical.render_elem(&r.value));
    assert_eq!(r.value, Trop::Inf);

    // Inclusion-exclusion needs subtraction, which min-plus lacks.
    let err = per_ryser(&a).unwrap_err();
    println!("ryser over tropical: {err}");

    // Random spot check against explicit minimization.
    let mut rng = SplitMix64::new(11);
    let d = Matrix::random(Tropical, 4, 6, &mut rng);
    let fast = per_dp_columns(&d).unwrap().value;
    let mut best = i64::MAX;
    let costs: Vec<Vec<i64>> = (0..4)
        .map(|i| {
            (0..6)
                .map(|j| match d.entry(i, j) {
                    Trop::Fin(v) => *v,
                    Trop::Inf => i64::MAX / 2,
                })
                .collect()
        })
        .collect();
    fn explore(costs: &[Vec<i64>], row: usize, used: u64, acc: i64, best: &mut i64) {
        if row == costs.len() {
            *best = (*best).min(acc);
            return;
        }
        for col in 0..costs[0].len() {
            if used >> col & 1 == 0 {
                explore(costs, row + 1, used | 1 << col, acc + costs[row][col], best);
            }
        }
    }
    explore(&costs, 0, 0, 0, &mut best);
    assert_eq!(fast, Trop::Fin(best));
    println!("random 4x6 spot check agrees with explicit minimization: {best}");
}
