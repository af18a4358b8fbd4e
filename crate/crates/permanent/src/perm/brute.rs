//! Brute-force oracles: direct summation over all injections.
//!
//! These fix the reference semantics every fast algorithm is tested against.
//! Injections are enumerated lexicographically, so the summation order (and
//! with it the exact value in any semiring) is deterministic.

use crate::algebra::Algebra;
use crate::matrix::Matrix;

use super::{require_shape, PermError};

/// Visits every injection of `{0..m}` into `{0..n}` in lexicographic order
/// of the image sequence `(sigma(0), ..., sigma(m-1))`.
fn for_each_injection(m: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    let mut sigma = vec![0usize; m];
    fn descend(
        depth: usize,
        m: usize,
        n: usize,
        used: &mut u64,
        sigma: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if depth == m {
            visit(sigma);
            return;
        }
        for j in 0..n {
            if *used >> j & 1 == 0 {
                *used |= 1 << j;
                sigma[depth] = j;
                descend(depth + 1, m, n, used, sigma, visit);
                *used &= !(1 << j);
            }
        }
    }
    let mut used = 0u64;
    descend(0, m, n, &mut used, &mut sigma, &mut visit);
}

/// The permanent by definition: for each injection, the product of the
/// picked entries multiplied in row order, summed over all injections.
/// An empty matrix (0 rows) contributes the single empty product, one.
pub fn per_bruteforce<A: Algebra>(a: &Matrix<A>) -> Result<A::Elem, PermError> {
    require_shape(a)?;
    let alg = a.algebra();
    let (m, n) = (a.rows(), a.cols());
    if m == 0 {
        return Ok(alg.one());
    }
    let mut acc: Option<A::Elem> = None;
    for_each_injection(m, n, |sigma| {
        let mut prod = a.entry(0, sigma[0]).clone();
        for (i, &j) in sigma.iter().enumerate().skip(1) {
            prod = alg.mul(&prod, a.entry(i, j));
        }
        acc = Some(match acc.take() {
            None => prod,
            Some(s) => alg.add(&s, &prod),
        });
    });
    Ok(acc.expect("at least one injection when m <= n"))
}

/// The transposed permanent: the same terms, but each product is reordered
/// by ascending column index before multiplying. Equals [`per_bruteforce`]
/// whenever multiplication commutes.
pub fn per_transposed_bruteforce<A: Algebra>(a: &Matrix<A>) -> Result<A::Elem, PermError> {
    require_shape(a)?;
    let alg = a.algebra();
    let (m, n) = (a.rows(), a.cols());
    if m == 0 {
        return Ok(alg.one());
    }
    let mut acc: Option<A::Elem> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    for_each_injection(m, n, |sigma| {
        pairs.clear();
        pairs.extend(sigma.iter().enumerate().map(|(row, &col)| (col, row)));
        pairs.sort_unstable();
        let mut prod = a.entry(pairs[0].1, pairs[0].0).clone();
        for &(col, row) in &pairs[1..] {
            prod = alg.mul(&prod, a.entry(row, col));
        }
        acc = Some(match acc.take() {
            None => prod,
            Some(s) => alg.add(&s, &prod),
        });
    });
    Ok(acc.expect("at least one injection when m <= n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Int64, Mat2Nat};
    use crate::matrix::parse_matrix;

    #[test]
    fn single_entry() {
        let a = parse_matrix("1 1\n7", Int64).unwrap();
        assert_eq!(per_bruteforce(&a).unwrap(), 7);
        assert_eq!(per_transposed_bruteforce(&a).unwrap(), 7);
    }

    #[test]
    fn two_by_two() {
        let a = parse_matrix("2 2\n1 2\n3 4", Int64).unwrap();
        assert_eq!(per_bruteforce(&a).unwrap(), 10);
    }

    #[test]
    fn two_by_three_enumerates_all_six_injections() {
        let a = parse_matrix("2 3\n1 2 3\n4 5 6", Int64).unwrap();
        assert_eq!(per_bruteforce(&a).unwrap(), 58);
    }

    #[test]
    fn zero_rows_is_one_and_wide_shapes_rejected() {
        let empty = parse_matrix("0 3\n", Int64).unwrap();
        assert_eq!(per_bruteforce(&empty).unwrap(), 1);
        assert_eq!(per_transposed_bruteforce(&empty).unwrap(), 1);
        let tall = parse_matrix("2 1\n1\n2", Int64).unwrap();
        assert!(matches!(per_bruteforce(&tall), Err(PermError::Shape { m: 2, n: 1 })));
    }

    #[test]
    fn matrix_unit_witness_separates_the_two_definitions() {
        let alg = Mat2Nat;
        let text = "2 2\n0,0,0,0 0,1,0,0\n0,0,1,0 0,0,0,0";
        let a = parse_matrix(text, alg).unwrap();
        let per = per_bruteforce(&a).unwrap();
        let per_t = per_transposed_bruteforce(&a).unwrap();
        assert_eq!(alg.render_elem(&per), "1,0,0,0");
        assert_eq!(alg.render_elem(&per_t), "0,0,0,1");
        assert_ne!(per, per_t);
    }
}
