//! Where the permanent and the transposed permanent part ways.
//!
//! Over a commutative carrier the two are the same number. Over 2x2 matrix
//! entries they differ: each term of the permanent multiplies entries in row
//! order, the transposed permanent reorders every term by ascending column.
//! The matrix [[0, E12], [E21, 0]] of matrix units separates them cleanly,
//! because E21 * E12 = E22 while E12 * E21 = E11.
//!
//! ```bash
//! cargo run --example noncommutative_transposed
//! ```

use permanent::algebra::{Algebra, Mat2Int};
use permanent::matrix::parse_matrix;
use permanent::perm::{
    per_bruteforce, per_dp_columns, per_dp_rows, per_ryser_split, per_ryser_transposed,
    per_transposed_bruteforce, Variant,
};

fn main() {
    let alg = Mat2Int;
    let a = parse_matrix("2 2\n0,0,0,0 0,1,0,0\n0,0,1,0 0,0,0,0", alg).unwrap();

    let per = per_bruteforce(&a).unwrap();
    let per_t = per_transposed_bruteforce(&a).unwrap();
    println!("entries are 2x2 matrix units: a12 = E12, a21 = E21");
    println!("per   (row-ordered products)    = {}   (= E12*E21 = E11)", alg.render_elem(&per));
    println!("per-t (column-ordered products) = {}   (= E21*E12 = E22)", alg.render_elem(&per_t));
    assert_ne!(per, per_t);

    // Row-order-preserving algorithms reproduce per without commutativity.
    let dp_col = per_dp_columns(&a).unwrap().value;
    let split = per_ryser_split(&a).unwrap().value;
    assert_eq!(dp_col, per);
    assert_eq!(split, per);
    println!("\ncolumn-subset DP and the split algorithm agree with per:");
    println!("  dp-col      -> {}", alg.render_elem(&dp_col));
    println!("  ryser-split -> {}", alg.render_elem(&split));

    // Column-ordered algorithms reproduce per-t in any ring or semiring.
    let dp_row = per_dp_rows(&a, Variant::PerTransposed).unwrap().value;
    let ryser_t = per_ryser_transposed(&a, Variant::PerTransposed).unwrap().value;
    assert_eq!(dp_row, per_t);
    assert_eq!(ryser_t, per_t);
    println!("row-subset DP and transposed inclusion-exclusion agree with per-t:");
    println!("  dp-row  per-t -> {}", alg.render_elem(&dp_row));
    println!("  ryser-t per-t -> {}", alg.render_elem(&ryser_t));

    // Asking those two for plain per over a noncommutative carrier is an
    // error, not a silently different number.
    assert!(per_dp_rows(&a, Variant::Per).is_err());
    assert!(per_ryser_transposed(&a, Variant::Per).is_err());
    println!("\nrequesting per from the column-ordered algorithms errors out, as it must");
}
