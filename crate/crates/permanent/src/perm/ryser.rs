//! Inclusion-exclusion over column subsets (Ryser), and the row-splitting
//! variant that recombines two half-permanent tables through the signed
//! disjoint-pair summation.

use crate::algebra::{scalar_mul, Algebra};
use crate::disjoint::{disjoint_pair_sum, TrimmedTable};
use crate::matrix::{Matrix, SplitPlan};
use crate::subsets::binomial;

use super::dp::dp_column_final_layer;
#[cfg(debug_assertions)]
use super::with_counter_paused;
use super::{
    counter_delta, counter_snapshot, report_bound, require_shape, Algorithm, AlgoReport,
    PermError, Variant,
};

/// Partial row sums `r_i = sum_{j in X} a[i][j]` for the subset on the
/// current depth-first path, kept as a stack of snapshots so that backing
/// out of a column costs no ring operations.
struct RowSumState<'a, A: Algebra> {
    a: &'a Matrix<A>,
    /// `stack[d]` is the row-sum vector after the first `d + 1` chosen
    /// columns; the live prefix tracks the DFS path.
    stack: Vec<Vec<A::Elem>>,
    /// Per-cardinality accumulators for the products `r_1 r_2 ... r_m`.
    layer_sums: Vec<Option<A::Elem>>,
}

impl<'a, A: Algebra> RowSumState<'a, A> {
    fn new(a: &'a Matrix<A>) -> Self {
        RowSumState { a, stack: Vec::new(), layer_sums: vec![None; a.rows() + 1] }
    }

    /// Extends the path by column `col`: the first column is the column
    /// itself, deeper ones add entrywise onto the parent snapshot.
    fn enter(&mut self, depth: usize, col: usize) {
        let alg = self.a.algebra();
        let m = self.a.rows();
        let sums = if depth == 0 {
            (0..m).map(|i| self.a.entry(i, col).clone()).collect()
        } else {
            let parent = &self.stack[depth - 1];
            (0..m).map(|i| alg.add(&parent[i], self.a.entry(i, col))).collect()
        };
        self.stack.truncate(depth);
        self.stack.push(sums);
    }

    /// Row product of the top snapshot, multiplied in row order, folded into
    /// the accumulator for the current subset size.
    fn accumulate_product(&mut self, depth: usize) {
        let alg = self.a.algebra();
        let top = &self.stack[depth];
        let mut prod = top[0].clone();
        for r in &top[1..] {
            prod = alg.mul(&prod, r);
        }
        let slot = &mut self.layer_sums[depth + 1];
        *slot = Some(match slot.take() {
            None => prod,
            Some(s) => alg.add(&s, &prod),
        });
    }

    /// Debug-mode invariant: the live snapshot equals the direct partial row
    /// sums of the columns on the path. Checked arithmetic stays off the
    /// operation tally.
    #[cfg(debug_assertions)]
    fn check_against_direct(&self, path: &[usize], depth: usize) {
        let a = self.a;
        if a.rows() * a.cols() > 256 {
            return;
        }
        with_counter_paused(a.algebra(), || {
            let alg = a.algebra();
            for i in 0..a.rows() {
                let mut expect = alg.zero();
                for &c in &path[..=depth] {
                    expect = alg.add(&expect, a.entry(i, c));
                }
                debug_assert!(
                    expect == self.stack[depth][i],
                    "stale partial row sum at row {i} for path {path:?}"
                );
            }
        });
    }
}

/// Permanent by inclusion-exclusion over column subsets of size at most `m`:
/// the signed, binomially weighted sum of products of partial row sums.
/// Requires negation; applies in any ring because both the partial sums and
/// the products respect row order throughout.
///
/// The subsets are visited depth-first (children extend a subset by a larger
/// column), so each subset costs `m` additions for its row sums and `m - 1`
/// multiplications for its product. Products are bucketed per subset size;
/// the binomial weight `C(n-k, m-k)` and the sign `(-1)^(m-k)` are applied
/// once per bucket at the end, the weight via doubling ([`scalar_mul`]) and
/// the sign as a parity-driven negation, never as a `-1` carrier element.
pub fn per_ryser<A: Algebra>(a: &Matrix<A>) -> Result<AlgoReport<A::Elem>, PermError> {
    require_shape(a)?;
    let alg = a.algebra().clone();
    if !alg.has_negation() {
        return Err(PermError::MissingNegation { algorithm: Algorithm::Ryser });
    }
    let (m, n) = (a.rows(), a.cols());
    let start = counter_snapshot(&alg);

    let value = if m == 0 {
        alg.one()
    } else {
        let mut state = RowSumState::new(a);
        let mut path = vec![0usize; m];
        descend(a, &mut state, &mut path, 0, 0);

        let mut acc: Option<A::Elem> = None;
        for k in 1..=m {
            let bucket = state.layer_sums[k].take().expect("every layer is populated");
            let mut term = scalar_mul(&alg, binomial(n - k, m - k), &bucket);
            if (m - k) % 2 == 1 {
                term = alg.neg(&term);
            }
            acc = Some(match acc.take() {
                None => term,
                Some(s) => alg.add(&s, &term),
            });
        }
        acc.expect("m >= 1")
    };

    let (adds, muls) = counter_delta(&alg, start);
    return Ok(AlgoReport {
        algorithm: Algorithm::Ryser,
        variant: Variant::Per,
        m,
        n,
        value,
        adds,
        muls,
        predicted_bound: report_bound(Algorithm::Ryser, m, n),
    });

    fn descend<A: Algebra>(
        a: &Matrix<A>,
        state: &mut RowSumState<A>,
        path: &mut Vec<usize>,
        depth: usize,
        first_col: usize,
    ) {
        for col in first_col..a.cols() {
            path[depth] = col;
            state.enter(depth, col);
            #[cfg(debug_assertions)]
            state.check_against_direct(path, depth);
            state.accumulate_product(depth);
            if depth + 1 < a.rows() {
                descend(a, state, path, depth + 1, col + 1);
            }
        }
    }
}

/// Permanent by row splitting: the permanent equals the sum of
/// `per(top half x P) * per(bottom half x Q)` over disjoint column subsets
/// `P, Q` of sizes `ceil(m/2)` and `floor(m/2)`. Each half-table comes from
/// one column-subset DP run keeping its full final layer; the signed
/// disjoint-pair summation recombines them with the top half as the left
/// factor, preserving row order, so the result is the permanent in any ring.
pub fn per_ryser_split<A: Algebra>(a: &Matrix<A>) -> Result<AlgoReport<A::Elem>, PermError> {
    require_shape(a)?;
    let alg = a.algebra().clone();
    if !alg.has_negation() {
        return Err(PermError::MissingNegation { algorithm: Algorithm::RyserSplit });
    }
    let (m, n) = (a.rows(), a.cols());
    if m == 0 {
        return Ok(AlgoReport {
            algorithm: Algorithm::RyserSplit,
            variant: Variant::Per,
            m,
            n,
            value: alg.one(),
            adds: 0,
            muls: 0,
            predicted_bound: 0,
        });
    }
    let start = counter_snapshot(&alg);

    let plan = SplitPlan::for_rows(m);
    let top_rows: Vec<usize> = (0..plan.k1).collect();
    let bottom_rows: Vec<usize> = (plan.k1..m).collect();

    let f = TrimmedTable::from_top_layer(n, plan.k1, dp_column_final_layer(a, &top_rows));
    let g = TrimmedTable::from_top_layer(n, plan.k2, dp_column_final_layer(a, &bottom_rows));
    let value = disjoint_pair_sum(&alg, &f, &g)?;

    let (adds, muls) = counter_delta(&alg, start);
    Ok(AlgoReport {
        algorithm: Algorithm::RyserSplit,
        variant: Variant::Per,
        m,
        n,
        value,
        adds,
        muls,
        predicted_bound: report_bound(Algorithm::RyserSplit, m, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_counting, BigIntAlg, Int64, ModP, Tropical};
    use crate::matrix::{parse_matrix, Matrix};
    use crate::perm::per_bruteforce;
    use crate::rng::SplitMix64;
    use num_bigint::BigInt;

    #[test]
    fn identity_matrix_has_unit_permanent() {
        let a = parse_matrix("2 2\n1 0\n0 1", Int64).unwrap();
        assert_eq!(per_ryser(&a).unwrap().value, 1);
    }

    #[test]
    fn all_ones_counts_injections() {
        let a = Matrix::all_ones(Int64, 3, 3);
        assert_eq!(per_ryser(&a).unwrap().value, 6);
        let b = Matrix::all_ones(BigIntAlg, 12, 12);
        assert_eq!(per_ryser(&b).unwrap().value, BigInt::from(479_001_600u64));
    }

    #[test]
    fn ryser_rejects_semirings_without_negation() {
        let a = parse_matrix("2 2\n1 2\n3 4", Tropical).unwrap();
        assert!(matches!(per_ryser(&a), Err(PermError::MissingNegation { .. })));
        assert!(matches!(per_ryser_split(&a), Err(PermError::MissingNegation { .. })));
    }

    #[test]
    fn split_examples() {
        let a = parse_matrix("2 2\n1 2\n3 4", Int64).unwrap();
        assert_eq!(per_ryser_split(&a).unwrap().value, 10);

        let ones = Matrix::all_ones(BigIntAlg, 4, 8);
        assert_eq!(per_ryser_split(&ones).unwrap().value, BigInt::from(1680));
    }

    #[test]
    fn split_matches_brute_force_on_random_modular_matrices() {
        let alg = ModP::new(1_000_000_007).unwrap();
        for trial in 0..10u64 {
            let mut rng = SplitMix64::stream(77, trial);
            let a = Matrix::random(alg, 3, 4, &mut rng);
            assert_eq!(per_ryser_split(&a).unwrap().value, per_bruteforce(&a).unwrap());
        }
    }

    #[test]
    fn ryser_operation_count_stays_within_budget() {
        let (alg, counter) = make_counting(ModP::new(97).unwrap());
        for (m, n) in [(1, 1), (2, 2), (2, 12), (3, 7), (5, 9)] {
            counter.reset();
            let mut rng = SplitMix64::stream(5, (m * 100 + n) as u64);
            let a = Matrix::random(alg.clone(), m, n, &mut rng);
            let report = per_ryser(&a).unwrap();
            assert!(
                (report.ops_total() as u128) <= report.predicted_bound,
                "({m},{n}): {} > {}",
                report.ops_total(),
                report.predicted_bound
            );
        }
    }
}
