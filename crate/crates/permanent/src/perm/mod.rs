//! Permanent evaluation.
//!
//! Two brute-force oracles fix the semantics: [`per_bruteforce`] sums the
//! row-ordered entry product over all injections of rows into columns, and
//! [`per_transposed_bruteforce`] sums the same terms with factors reordered
//! by ascending column index. The two coincide exactly when multiplication
//! commutes.
//!
//! Four algorithm families evaluate these sums at exponentially lower cost:
//!
//! * [`per_dp_columns`]: dynamic programming over column subsets, layer by
//!   layer. Works in any semiring and preserves row order, so it computes
//!   the permanent even noncommutatively.
//! * [`per_dp_rows`]: the transposed recurrence over row subsets, walking
//!   columns left to right with a cardinality window. Its products are
//!   column-ordered: in any semiring it yields the transposed permanent,
//!   which equals the permanent whenever the carrier commutes.
//! * [`per_ryser`]: the inclusion-exclusion formula over column subsets with
//!   binomially weighted partial row sums; needs a ring. [`per_ryser_split`]
//!   halves the rows and recombines the two half-permanent tables through a
//!   signed disjoint-pair summation, which wins once the matrix is wide.
//! * [`per_ryser_transposed`]: inclusion-exclusion over row subsets, with a
//!   degree-windowed elementary-symmetric inner accumulation over partial
//!   column sums; needs a ring, and column order makes it the transposed
//!   permanent noncommutatively.
//!
//! Every evaluator returns an [`AlgoReport`] carrying the value, measured
//! operation counts (when the matrix algebra counts), and the predicted
//! operation bound for its shape.

mod brute;
mod dp;
mod ryser;
mod transposed;

pub use brute::{per_bruteforce, per_transposed_bruteforce};
pub use dp::{per_dp_columns, per_dp_rows};
pub use ryser::{per_ryser, per_ryser_split};
pub use transposed::{esym_accumulate, per_ryser_transposed};

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::subsets::{binomial, binsum, MAX_GROUND_SET};

/// Which of the two permanent flavors an evaluation produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Row-ordered products.
    Per,
    /// Column-ordered products.
    PerTransposed,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Per => write!(f, "per"),
            Variant::PerTransposed => write!(f, "per-t"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per" => Ok(Variant::Per),
            "per-t" => Ok(Variant::PerTransposed),
            other => Err(format!("unknown variant `{other}` (expected per|per-t)")),
        }
    }
}

/// Algorithm selectors shared by the library, the CLI and the bench output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    DpColumns,
    DpRows,
    Ryser,
    RyserSplit,
    RyserTransposed,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Brute,
        Algorithm::DpColumns,
        Algorithm::DpRows,
        Algorithm::Ryser,
        Algorithm::RyserSplit,
        Algorithm::RyserTransposed,
    ];
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Algorithm::Brute => "brute",
            Algorithm::DpColumns => "dp-col",
            Algorithm::DpRows => "dp-row",
            Algorithm::Ryser => "ryser",
            Algorithm::RyserSplit => "ryser-split",
            Algorithm::RyserTransposed => "ryser-t",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Algorithm::Brute),
            "dp-col" => Ok(Algorithm::DpColumns),
            "dp-row" => Ok(Algorithm::DpRows),
            "ryser" => Ok(Algorithm::Ryser),
            "ryser-split" => Ok(Algorithm::RyserSplit),
            "ryser-t" => Ok(Algorithm::RyserTransposed),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// Failure modes of the permanent evaluators and the disjoint-sum engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    /// More rows than columns.
    Shape { m: usize, n: usize },
    /// The algorithm needs additive inverses the algebra lacks.
    MissingNegation { algorithm: Algorithm },
    /// The requested variant needs commutative multiplication.
    RequiresCommutative { algorithm: Algorithm },
    /// The algorithm cannot produce the requested variant at all.
    VariantUnsupported { algorithm: Algorithm, variant: Variant },
    /// Elementary-symmetric degree exceeds the number of values.
    DegreeTooLarge { degree: usize, len: usize },
    /// Disjoint-sum tables over different ground sets.
    GroundSetMismatch { left: usize, right: usize },
    /// Ground set too large for the requested brute-force oracle.
    GroundSetTooLarge { u: usize, max: usize },
    /// A trimmed table carried values below its top layer.
    SupportViolation { rank: u64 },
    /// Parameters outside the supported range.
    OutOfRange(String),
}

impl std::fmt::Display for PermError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PermError::Shape { m, n } => {
                write!(f, "matrix has more rows than columns ({m} > {n})")
            }
            PermError::MissingNegation { algorithm } => {
                write!(f, "algebra lacks negation (required by {algorithm})")
            }
            PermError::RequiresCommutative { algorithm } => {
                write!(f, "algebra is not commutative (required by {algorithm} for per)")
            }
            PermError::VariantUnsupported { algorithm, variant } => {
                write!(f, "{algorithm} does not compute {variant}")
            }
            PermError::DegreeTooLarge { degree, len } => {
                write!(f, "degree {degree} exceeds value count {len}")
            }
            PermError::GroundSetMismatch { left, right } => {
                write!(f, "ground sets differ ({left} vs {right})")
            }
            PermError::GroundSetTooLarge { u, max } => {
                write!(f, "ground set {u} exceeds brute-force cap {max}")
            }
            PermError::SupportViolation { rank } => {
                write!(f, "table value below the top layer (rank {rank})")
            }
            PermError::OutOfRange(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for PermError {}

/// One evaluation: the value, the measured ring-operation tallies (zero when
/// no counter was attached), and the predicted bound for the shape.
#[derive(Clone, Debug)]
pub struct AlgoReport<E> {
    pub algorithm: Algorithm,
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub value: E,
    pub adds: u64,
    pub muls: u64,
    pub predicted_bound: u128,
}

impl<E> AlgoReport<E> {
    pub fn ops_total(&self) -> u64 {
        self.adds + self.muls
    }
}

/// Predicted operation budget for one algorithm at shape `m x n`.
///
/// For `dp-col` this is the exact multiplication count
/// `sum_{i=2..m} i * C(n, i)`; a counting run reproduces it to the
/// operation. The others are upper bounds on total operations:
/// `m(n-m+1)2^m` for `dp-row`, `2m * binsum(n, m)` for `ryser`,
/// `2m * binsum(n, ceil(m/2))` for `ryser-split`,
/// `(mn - m^2 + n + m) 2^m` for `ryser-t`, and rows-times-injections for
/// the brute-force oracle.
pub fn predict_ops(algo: Algorithm, m: usize, n: usize) -> Result<u128, PermError> {
    if m < 1 || m > n || n > MAX_GROUND_SET {
        return Err(PermError::OutOfRange(format!(
            "predict_ops needs 1 <= m <= n <= {MAX_GROUND_SET}, got m={m} n={n}"
        )));
    }
    let (m128, n128) = (m as u128, n as u128);
    Ok(match algo {
        Algorithm::Brute => {
            let mut injections: u128 = 1;
            for t in 0..m128 {
                injections = injections.saturating_mul(n128 - t);
            }
            injections.saturating_mul(m128)
        }
        Algorithm::DpColumns => {
            (2..=m).map(|i| i as u128 * binomial(n, i) as u128).sum()
        }
        Algorithm::DpRows => m128 * (n128 - m128 + 1) * (1u128 << m),
        Algorithm::Ryser => 2 * m128 * binsum(n, m) as u128,
        Algorithm::RyserSplit => 2 * m128 * binsum(n, m.div_ceil(2)) as u128,
        Algorithm::RyserTransposed => (m128 * n128 - m128 * m128 + n128 + m128) * (1u128 << m),
    })
}

/// Bound for [`AlgoReport::predicted_bound`], tolerating the degenerate
/// zero-row shape that the evaluators accept but the predictor does not.
pub(crate) fn report_bound(algo: Algorithm, m: usize, n: usize) -> u128 {
    if m == 0 {
        0
    } else {
        predict_ops(algo, m, n).expect("shape validated by caller")
    }
}

/// Snapshot of the algebra's counter, if any.
pub(crate) fn counter_snapshot<A: Algebra>(alg: &A) -> (u64, u64) {
    alg.counter().map_or((0, 0), |c| (c.adds(), c.muls()))
}

/// Counter delta since `start` as `(adds, muls)`.
pub(crate) fn counter_delta<A: Algebra>(alg: &A, start: (u64, u64)) -> (u64, u64) {
    let end = counter_snapshot(alg);
    (end.0 - start.0, end.1 - start.1)
}

/// Runs `f` without letting its arithmetic touch the tally; used by the
/// debug-mode consistency checks that re-derive incremental state.
#[cfg(debug_assertions)]
pub(crate) fn with_counter_paused<A: Algebra, R>(alg: &A, f: impl FnOnce() -> R) -> R {
    let saved = alg.counter().map(|c| c.save());
    let result = f();
    if let Some(s) = saved {
        alg.counter().expect("counter vanished").restore(s);
    }
    result
}

/// Shape gate shared by all evaluators.
pub(crate) fn require_shape<A: Algebra>(a: &Matrix<A>) -> Result<(), PermError> {
    if a.rows() > a.cols() {
        Err(PermError::Shape { m: a.rows(), n: a.cols() })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predict_examples() {
        assert_eq!(predict_ops(Algorithm::DpColumns, 2, 3).unwrap(), 6);
        assert_eq!(predict_ops(Algorithm::DpColumns, 1, 9).unwrap(), 0);
        assert_eq!(predict_ops(Algorithm::Ryser, 2, 2).unwrap(), 16);
        assert_eq!(predict_ops(Algorithm::DpRows, 2, 2).unwrap(), 8);
        assert_eq!(
            predict_ops(Algorithm::Ryser, 12, 12).unwrap(),
            2 * 12 * (1u128 << 12)
        );
        assert!(predict_ops(Algorithm::DpColumns, 3, 2).is_err());
        assert!(predict_ops(Algorithm::DpColumns, 0, 2).is_err());
    }

    #[test]
    fn selector_strings_roundtrip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.to_string().parse::<Algorithm>().unwrap(), algo);
        }
        assert_eq!("per".parse::<Variant>().unwrap(), Variant::Per);
        assert_eq!("per-t".parse::<Variant>().unwrap(), Variant::PerTransposed);
        assert!("qper".parse::<Variant>().is_err());
    }
}
