//! Inclusion-exclusion over row subsets: Gray-code traversal maintaining
//! partial column sums, with a degree-windowed elementary-symmetric inner
//! accumulation per subset.

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::subsets::gray_sequence;

#[cfg(debug_assertions)]
use super::with_counter_paused;
use super::{
    counter_delta, counter_snapshot, report_bound, require_shape, Algorithm, AlgoReport,
    PermError, Variant,
};

/// The degree-`m` elementary symmetric accumulation of `values`: the sum
/// over all size-`m` index subsets of the product of the chosen values in
/// ascending index order. Degree zero is the empty product, one.
///
/// Evaluated by the rolling recurrence `e(j, k) = e(j-1, k) +
/// e(j-1, k-1) * v_j`, restricted to the window `m - (n - j) <= k <=
/// min(j, m)`: smaller `k` can never grow to degree `m` with the values
/// remaining, larger `k` overshoots. Multiplying by `v_j` on the right is
/// what keeps the products index-ordered.
pub fn esym_accumulate<A: Algebra>(
    alg: &A,
    values: &[A::Elem],
    degree: usize,
) -> Result<A::Elem, PermError> {
    let n = values.len();
    if degree > n {
        return Err(PermError::DegreeTooLarge { degree, len: n });
    }
    if degree == 0 {
        return Ok(alg.one());
    }
    let m = degree;
    let mut prev: Vec<Option<A::Elem>> = vec![None; m + 1];
    let mut cur: Vec<Option<A::Elem>> = vec![None; m + 1];
    for j in 1..=n {
        let lo = 1.max(m.saturating_sub(n - j));
        let hi = j.min(m);
        cur[..=hi].fill(None);
        for (k, slot) in cur.iter_mut().enumerate().take(hi + 1).skip(lo) {
            // e(j-1, k-1) * v_j; the k = 1 row multiplies the implicit
            // e(j-1, 0) = one, so the value passes through untouched.
            let grown = if k == 1 {
                values[j - 1].clone()
            } else {
                alg.mul(prev[k - 1].as_ref().expect("window keeps k-1 alive"), &values[j - 1])
            };
            *slot = Some(match prev[k].as_ref() {
                None => grown,
                Some(kept) => alg.add(kept, &grown),
            });
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[m].take().expect("degree column is filled at j = n"))
}

/// Partial column sums `c_j = sum_{i in X} a[i][j]` maintained across a
/// Gray walk of the row subsets: each step adds or subtracts one matrix row.
struct ColSumState<'a, A: Algebra> {
    a: &'a Matrix<A>,
    sums: Vec<A::Elem>,
}

impl<'a, A: Algebra> ColSumState<'a, A> {
    fn new(a: &'a Matrix<A>) -> Self {
        let alg = a.algebra();
        ColSumState { a, sums: vec![alg.zero(); a.cols()] }
    }

    /// One Gray flip: row `row` enters or leaves the subset. Costs `n`
    /// additions; removal adds the (free) negation of each entry.
    fn flip(&mut self, row: usize, added: bool) {
        let alg = self.a.algebra();
        for j in 0..self.a.cols() {
            let delta = if added {
                self.a.entry(row, j).clone()
            } else {
                alg.neg(self.a.entry(row, j))
            };
            self.sums[j] = alg.add(&self.sums[j], &delta);
        }
    }

    /// Debug-mode invariant: the incremental sums equal direct summation
    /// over the current subset, without touching the operation tally.
    #[cfg(debug_assertions)]
    fn check_against_direct(&self, rows_mask: u64) {
        let a = self.a;
        if a.rows() * a.cols() > 256 {
            return;
        }
        with_counter_paused(a.algebra(), || {
            let alg = a.algebra();
            for j in 0..a.cols() {
                let mut expect = alg.zero();
                for i in 0..a.rows() {
                    if rows_mask >> i & 1 == 1 {
                        expect = alg.add(&expect, a.entry(i, j));
                    }
                }
                debug_assert!(
                    expect == self.sums[j],
                    "stale partial column sum at column {j} for rows {rows_mask:b}"
                );
            }
        });
    }
}

/// Permanent (or transposed permanent) by transposed inclusion-exclusion:
/// for each row subset `X`, the degree-`m` elementary symmetric accumulation
/// of the partial column sums, signed by `(-1)^(m - |X|)`.
///
/// Expanding each term gives one index-ordered product per way of charging
/// `m` chosen columns to rows of `X`; charges that miss a row of `X` cancel
/// between even and odd supersets, leaving exactly the injections. Column
/// order makes the raw result the transposed permanent in any ring;
/// requesting [`Variant::Per`] requires commutativity, which collapses the
/// two flavors. The subset walk is a Gray code, so maintaining the column
/// sums costs `n` additions per subset, and the empty subset's term is
/// skipped outright (its column sums are all zero).
pub fn per_ryser_transposed<A: Algebra>(
    a: &Matrix<A>,
    variant: Variant,
) -> Result<AlgoReport<A::Elem>, PermError> {
    require_shape(a)?;
    let alg = a.algebra().clone();
    if !alg.has_negation() {
        return Err(PermError::MissingNegation { algorithm: Algorithm::RyserTransposed });
    }
    if variant == Variant::Per && !alg.is_commutative() {
        return Err(PermError::RequiresCommutative { algorithm: Algorithm::RyserTransposed });
    }
    let (m, n) = (a.rows(), a.cols());
    let start = counter_snapshot(&alg);

    let value = if m == 0 {
        alg.one()
    } else {
        let mut state = ColSumState::new(a);
        let mut acc: Option<A::Elem> = None;
        for step in gray_sequence(m) {
            let Some((element, added)) = step.flip else {
                continue; // empty subset: all column sums zero, term vanishes
            };
            state.flip(element - 1, added);
            #[cfg(debug_assertions)]
            state.check_against_direct(step.mask.0);

            let mut term = esym_accumulate(&alg, &state.sums, m)?;
            if (m - step.mask.card()) % 2 == 1 {
                term = alg.neg(&term);
            }
            acc = Some(match acc.take() {
                None => term,
                Some(s) => alg.add(&s, &term),
            });
        }
        acc.expect("m >= 1 visits nonempty subsets")
    };

    let (adds, muls) = counter_delta(&alg, start);
    Ok(AlgoReport {
        algorithm: Algorithm::RyserTransposed,
        variant,
        m,
        n,
        value,
        adds,
        muls,
        predicted_bound: report_bound(Algorithm::RyserTransposed, m, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Int64, Mat2Int, Tropical};
    use crate::matrix::{parse_matrix, Matrix};
    use crate::perm::per_transposed_bruteforce;

    #[test]
    fn esym_examples() {
        assert_eq!(esym_accumulate(&Int64, &[5], 1).unwrap(), 5);
        assert_eq!(esym_accumulate(&Int64, &[1, 2, 3], 2).unwrap(), 11);
        assert_eq!(esym_accumulate(&Int64, &[4, 9], 0).unwrap(), 1);
        assert!(matches!(
            esym_accumulate(&Int64, &[1, 2], 3),
            Err(PermError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn esym_matches_subset_enumeration() {
        // Brute-force oracle: enumerate subsets, multiply ascending.
        fn brute<A: Algebra>(alg: &A, values: &[A::Elem], m: usize) -> A::Elem {
            let n = values.len();
            let mut acc = if m == 0 { Some(alg.one()) } else { None };
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize != m || m == 0 {
                    continue;
                }
                let mut prod: Option<A::Elem> = None;
                for (j, v) in values.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        prod = Some(match prod.take() {
                            None => v.clone(),
                            Some(p) => alg.mul(&p, v),
                        });
                    }
                }
                let prod = prod.expect("nonempty subset");
                acc = Some(match acc.take() {
                    None => prod,
                    Some(s) => alg.add(&s, &prod),
                });
            }
            acc.expect("some subset exists")
        }

        let mut rng = crate::rng::SplitMix64::new(3);
        for n in 0..=6usize {
            for m in 0..=n {
                let ints: Vec<i64> = (0..n).map(|_| Int64.sample(&mut rng)).collect();
                assert_eq!(
                    esym_accumulate(&Int64, &ints, m).unwrap(),
                    brute(&Int64, &ints, m),
                    "int64 n={n} m={m}"
                );
                let mats: Vec<_> = (0..n).map(|_| Mat2Int.sample(&mut rng)).collect();
                assert_eq!(
                    esym_accumulate(&Mat2Int, &mats, m).unwrap(),
                    brute(&Mat2Int, &mats, m),
                    "mat2z n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn transposed_ryser_examples() {
        let a = parse_matrix("2 2\n1 2\n3 4", Int64).unwrap();
        assert_eq!(per_ryser_transposed(&a, Variant::Per).unwrap().value, 10);

        let ones = Matrix::all_ones(Int64, 2, 4);
        assert_eq!(per_ryser_transposed(&ones, Variant::Per).unwrap().value, 12);
    }

    #[test]
    fn transposed_ryser_matches_the_transposed_oracle_noncommutatively() {
        let text = "2 2\n0,0,0,0 0,1,0,0\n0,0,1,0 0,0,0,0";
        let a = parse_matrix(text, Mat2Int).unwrap();
        assert!(matches!(
            per_ryser_transposed(&a, Variant::Per),
            Err(PermError::RequiresCommutative { .. })
        ));
        let report = per_ryser_transposed(&a, Variant::PerTransposed).unwrap();
        assert_eq!(report.value, per_transposed_bruteforce(&a).unwrap());
        assert_eq!(Mat2Int.render_elem(&report.value), "0,0,0,1");
    }

    #[test]
    fn transposed_ryser_needs_negation() {
        let a = parse_matrix("2 2\n1 2\n3 4", Tropical).unwrap();
        assert!(matches!(
            per_ryser_transposed(&a, Variant::Per),
            Err(PermError::MissingNegation { .. })
        ));
    }
}
