//! The two dynamic programs: over column subsets (any semiring) and over row
//! subsets with a cardinality window (transposed products).

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::subsets::{binomial, enumerate_k_subsets};

use super::{
    counter_delta, counter_snapshot, report_bound, require_shape, Algorithm, AlgoReport,
    PermError, Variant,
};

/// Runs the column-subset recurrence for the given rows (in the given order)
/// over all columns of `a`, and returns the final layer: the permanent of
/// the chosen rows against every column subset of size `rows.len()`, indexed
/// by colexicographic rank.
///
/// Layer 1 is the first row itself (no multiplications); layer `i` entry `J`
/// sums, over `j in J`, the layer `i-1` entry for `J \ {j}` multiplied on
/// the right by the row-`i` entry in column `j`. Right multiplication keeps
/// every product in row order, which is what makes the result the permanent
/// in noncommutative carriers too. Only two layers are ever live.
pub(crate) fn dp_column_final_layer<A: Algebra>(a: &Matrix<A>, rows: &[usize]) -> Vec<A::Elem> {
    let alg = a.algebra();
    let n = a.cols();
    let k = rows.len();
    if k == 0 {
        return vec![alg.one()];
    }

    let mut prev: Vec<A::Elem> = a.row(rows[0]).to_vec();
    let mut positions: Vec<usize> = Vec::with_capacity(k);
    for i in 2..=k {
        let row = rows[i - 1];
        let mut cur: Vec<A::Elem> = Vec::with_capacity(binomial(n, i) as usize);
        for subset in enumerate_k_subsets(n, i) {
            positions.clear();
            positions.extend(subset.bit_positions());
            // Rank of J \ {p_s} in the previous layer: prefix terms keep
            // their index within the subset, suffix terms drop by one.
            let mut suffix: u64 = positions
                .iter()
                .enumerate()
                .skip(1)
                .map(|(t, &p)| binomial(p, t))
                .sum();
            let mut prefix: u64 = 0;
            let mut acc: Option<A::Elem> = None;
            for (s, &p) in positions.iter().enumerate() {
                let term = alg.mul(&prev[(prefix + suffix) as usize], a.entry(row, p));
                acc = Some(match acc.take() {
                    None => term,
                    Some(v) => alg.add(&v, &term),
                });
                prefix += binomial(p, s + 1);
                if s + 1 < positions.len() {
                    suffix -= binomial(positions[s + 1], s + 1);
                }
            }
            cur.push(acc.expect("nonempty subset"));
        }
        prev = cur;
    }
    prev
}

/// Permanent via dynamic programming over column subsets. Applies in any
/// semiring; multiplication count is exactly `sum_{i=2..m} i * C(n, i)`.
pub fn per_dp_columns<A: Algebra>(a: &Matrix<A>) -> Result<AlgoReport<A::Elem>, PermError> {
    require_shape(a)?;
    let alg = a.algebra().clone();
    let (m, n) = (a.rows(), a.cols());
    let start = counter_snapshot(&alg);

    let rows: Vec<usize> = (0..m).collect();
    let layer = dp_column_final_layer(a, &rows);
    let mut acc: Option<A::Elem> = None;
    for v in &layer {
        acc = Some(match acc.take() {
            None => v.clone(),
            Some(s) => alg.add(&s, v),
        });
    }
    let value = acc.expect("final layer is nonempty");

    let (adds, muls) = counter_delta(&alg, start);
    Ok(AlgoReport {
        algorithm: Algorithm::DpColumns,
        variant: Variant::Per,
        m,
        n,
        value,
        adds,
        muls,
        predicted_bound: report_bound(Algorithm::DpColumns, m, n),
    })
}

/// Permanent (or transposed permanent) via dynamic programming over row
/// subsets, scanning columns left to right.
///
/// State `alpha(I, j)` is the permanent of rows `I` against columns
/// `1..=j`, with products ordered by ascending column. It is computed only
/// inside the window `|I| <= j <= n - m + |I|`: fewer columns cannot fit the
/// rows, and later states can no longer reach `alpha(M, n)`. Two arrays of
/// `2^m` entries roll along `j`.
///
/// Column-ordered products mean the raw result is the transposed permanent
/// in any semiring; requesting [`Variant::Per`] therefore demands a
/// commutative carrier, where the two flavors coincide.
pub fn per_dp_rows<A: Algebra>(
    a: &Matrix<A>,
    variant: Variant,
) -> Result<AlgoReport<A::Elem>, PermError> {
    require_shape(a)?;
    let alg = a.algebra().clone();
    if variant == Variant::Per && !alg.is_commutative() {
        return Err(PermError::RequiresCommutative { algorithm: Algorithm::DpRows });
    }
    let (m, n) = (a.rows(), a.cols());
    let start = counter_snapshot(&alg);

    let value = if m == 0 {
        alg.one()
    } else {
        let size = 1usize << m;
        let mut prev: Vec<A::Elem> = vec![alg.zero(); size];
        let mut cur: Vec<A::Elem> = vec![alg.zero(); size];
        prev[0] = alg.one();

        let slack = n - m;
        for j in 1..=n {
            let lo = j.saturating_sub(slack);
            let hi = j.min(m);
            for s in lo..=hi {
                for subset in enumerate_k_subsets(m, s) {
                    let mask = subset.0 as usize;
                    // alpha(I, j-1) exists only once j-1 columns can hold I.
                    let mut acc: Option<A::Elem> =
                        if s < j { Some(prev[mask].clone()) } else { None };
                    for i in subset.bit_positions() {
                        let term = alg.mul(&prev[mask ^ (1 << i)], a.entry(i, j - 1));
                        acc = Some(match acc.take() {
                            None => term,
                            Some(v) => alg.add(&v, &term),
                        });
                    }
                    cur[mask] = acc.expect("window states are reachable");
                }
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        prev[size - 1].clone()
    };

    let (adds, muls) = counter_delta(&alg, start);
    Ok(AlgoReport {
        algorithm: Algorithm::DpRows,
        variant,
        m,
        n,
        value,
        adds,
        muls,
        predicted_bound: report_bound(Algorithm::DpRows, m, n),
    })
}
