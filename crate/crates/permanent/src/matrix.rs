//! Dense rectangular matrices over an algebra, their text format, and the
//! row-splitting plan used by the disjoint-summation algorithm.
//!
//! Text format: UTF-8; lines starting with `#` are comments; the first
//! non-comment line is `<m> <n>` in decimal; then exactly `m` non-comment
//! lines, each carrying exactly `n` whitespace-separated entry tokens in the
//! algebra's element form. Trailing newline optional.

use crate::algebra::Algebra;
use crate::rng::SplitMix64;
use crate::subsets::{SubsetMask, MAX_GROUND_SET};

/// Errors raised while reading the matrix text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixParseError {
    MissingDimensions,
    BadDimensions(String),
    TooManyColumns { n: usize },
    WrongRowCount { expected: usize, found: usize },
    WrongEntryCount { row: usize, expected: usize, found: usize },
    BadEntry { row: usize, col: usize, reason: String },
}

impl std::fmt::Display for MatrixParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixParseError::MissingDimensions => write!(f, "missing dimension line"),
            MatrixParseError::BadDimensions(line) => {
                write!(f, "dimension line must be `<m> <n>`, got `{line}`")
            }
            MatrixParseError::TooManyColumns { n } => {
                write!(f, "{n} columns exceed the supported maximum of {MAX_GROUND_SET}")
            }
            MatrixParseError::WrongRowCount { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            MatrixParseError::WrongEntryCount { row, expected, found } => {
                write!(f, "row {row}: expected {expected} entries, found {found}")
            }
            MatrixParseError::BadEntry { row, col, reason } => {
                write!(f, "entry ({row},{col}): {reason}")
            }
        }
    }
}

impl std::error::Error for MatrixParseError {}

/// A dense `m x n` matrix over one algebra, row-major.
///
/// `m <= n` is deliberately not an invariant here: shape is a precondition
/// of the permanent operations, which reject wide-to-tall inputs themselves.
/// Transposing on the caller's behalf would silently change the answer in
/// noncommutative carriers.
#[derive(Clone, Debug)]
pub struct Matrix<A: Algebra> {
    algebra: A,
    m: usize,
    n: usize,
    entries: Vec<A::Elem>,
}

impl<A: Algebra> Matrix<A> {
    pub fn new(algebra: A, m: usize, n: usize, entries: Vec<A::Elem>) -> Self {
        assert!(n <= MAX_GROUND_SET, "column count {n} out of range");
        assert_eq!(entries.len(), m * n, "entry count must be m*n");
        Matrix { algebra, m, n, entries }
    }

    pub fn from_rows(algebra: A, rows: Vec<Vec<A::Elem>>) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged rows");
        Matrix::new(algebra, m, n, rows.into_iter().flatten().collect())
    }

    /// `m x n` matrix of multiplicative ones.
    pub fn all_ones(algebra: A, m: usize, n: usize) -> Self {
        let one = algebra.one();
        Matrix::new(algebra, m, n, vec![one; m * n])
    }

    /// Seeded random matrix; entries are drawn row-major from the algebra's
    /// sampling range, consuming exactly `m * n` draws.
    pub fn random(algebra: A, m: usize, n: usize, rng: &mut SplitMix64) -> Self {
        let entries = (0..m * n).map(|_| algebra.sample(rng)).collect();
        Matrix::new(algebra, m, n, entries)
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &A::Elem {
        debug_assert!(i < self.m && j < self.n);
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[A::Elem] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Rebinds the entries to another algebra over the same carrier, e.g. to
    /// attach or detach an operation counter.
    pub fn with_algebra<B>(&self, algebra: B) -> Matrix<B>
    where
        B: Algebra<Elem = A::Elem>,
    {
        Matrix::new(algebra, self.m, self.n, self.entries.clone())
    }

    /// The submatrix picked out by 1-based row and column masks, both kept
    /// in ascending original order.
    pub fn submatrix(&self, rows: SubsetMask, cols: SubsetMask) -> Matrix<A> {
        let row_idx: Vec<usize> = rows.bit_positions().filter(|&i| i < self.m).collect();
        let col_idx: Vec<usize> = cols.bit_positions().filter(|&j| j < self.n).collect();
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in &row_idx {
            for &j in &col_idx {
                entries.push(self.entry(i, j).clone());
            }
        }
        Matrix::new(self.algebra.clone(), row_idx.len(), col_idx.len(), entries)
    }

    /// Canonical text form: dimension line then one line per row.
    pub fn render(&self) -> String {
        let mut out = format!("{} {}", self.m, self.n);
        for i in 0..self.m {
            out.push('\n');
            let row: Vec<String> =
                self.row(i).iter().map(|e| self.algebra.render_elem(e)).collect();
            out.push_str(&row.join(" "));
        }
        out.push('\n');
        out
    }
}

/// Parses the matrix text format against the given algebra.
pub fn parse_matrix<A: Algebra>(text: &str, algebra: A) -> Result<Matrix<A>, MatrixParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let dims = lines.next().ok_or(MatrixParseError::MissingDimensions)?;
    let mut parts = dims.split_whitespace();
    let (m, n) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => {
            let m = a.parse().map_err(|_| MatrixParseError::BadDimensions(dims.into()))?;
            let n = b.parse().map_err(|_| MatrixParseError::BadDimensions(dims.into()))?;
            (m, n)
        }
        _ => return Err(MatrixParseError::BadDimensions(dims.into())),
    };
    if n > MAX_GROUND_SET {
        return Err(MatrixParseError::TooManyColumns { n });
    }

    let mut entries = Vec::with_capacity(m * n);
    let mut rows_seen = 0usize;
    for line in lines {
        if rows_seen == m {
            rows_seen += 1;
            break;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != n {
            return Err(MatrixParseError::WrongEntryCount {
                row: rows_seen + 1,
                expected: n,
                found: tokens.len(),
            });
        }
        for (j, tok) in tokens.iter().enumerate() {
            let e = algebra.parse_elem(tok).map_err(|reason| MatrixParseError::BadEntry {
                row: rows_seen + 1,
                col: j + 1,
                reason,
            })?;
            entries.push(e);
        }
        rows_seen += 1;
    }
    if rows_seen != m {
        return Err(MatrixParseError::WrongRowCount { expected: m, found: rows_seen.min(m + 1) });
    }
    Ok(Matrix::new(algebra, m, n, entries))
}

/// How the row-splitting algorithm divides `{1..m}`: the top half takes the
/// first `ceil(m/2)` rows, the bottom half the remaining `floor(m/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitPlan {
    pub k1: usize,
    pub k2: usize,
}

impl SplitPlan {
    pub fn for_rows(m: usize) -> Self {
        SplitPlan { k1: m.div_ceil(2), k2: m / 2 }
    }

    /// Mask of the top-half rows `{1..k1}`.
    pub fn top_rows(&self) -> SubsetMask {
        SubsetMask::full(self.k1)
    }

    /// Mask of the bottom-half rows `{k1+1..m}`.
    pub fn bottom_rows(&self) -> SubsetMask {
        SubsetMask(SubsetMask::full(self.k1 + self.k2).0 ^ self.top_rows().0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigIntAlg, Int64, Mat2Nat, Mat2Int, ModP, Tropical};

    #[test]
    fn parses_the_basic_form() {
        let m = parse_matrix("2 2\n1 2\n3 4", Int64).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(*m.entry(0, 1), 2);
        assert_eq!(*m.entry(1, 0), 3);
    }

    #[test]
    fn parses_matrix_unit_entries() {
        let m = parse_matrix("1 2\n0,1,0,0 0,0,1,0", Mat2Nat).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(m.algebra().render_elem(m.entry(0, 0)), "0,1,0,0");
        assert_eq!(m.algebra().render_elem(m.entry(0, 1)), "0,0,1,0");
    }

    #[test]
    fn tall_matrices_parse_shape_checked_later() {
        let m = parse_matrix("2 1\n1\n2", Int64).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# cost matrix\n\n2 2\n# row one\n1 2\n3 4\n";
        let m = parse_matrix(text, Int64).unwrap();
        assert_eq!(*m.entry(1, 1), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix("", Int64), Err(MatrixParseError::MissingDimensions)));
        assert!(matches!(
            parse_matrix("2\n1 2", Int64),
            Err(MatrixParseError::BadDimensions(_))
        ));
        assert!(matches!(
            parse_matrix("1 63\n1", Int64),
            Err(MatrixParseError::TooManyColumns { n: 63 })
        ));
        assert!(matches!(
            parse_matrix("2 2\n1 2 3\n4 5", Int64),
            Err(MatrixParseError::WrongEntryCount { row: 1, expected: 2, found: 3 })
        ));
        assert!(matches!(
            parse_matrix("2 2\n1 2", Int64),
            Err(MatrixParseError::WrongRowCount { .. })
        ));
        assert!(matches!(
            parse_matrix("1 1\nx", Int64),
            Err(MatrixParseError::BadEntry { row: 1, col: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("2 2\n1 2\n3 4\n5 6", Int64),
            Err(MatrixParseError::WrongRowCount { .. })
        ));
    }

    #[test]
    fn submatrix_examples() {
        let a = parse_matrix("2 2\n1 2\n3 4", Int64).unwrap();
        let full = a.submatrix(SubsetMask::full(2), SubsetMask::full(2));
        assert_eq!(full.render(), a.render());

        let single = a.submatrix(SubsetMask::from_elements(&[1]), SubsetMask::from_elements(&[2]));
        assert_eq!((single.rows(), single.cols()), (1, 1));
        assert_eq!(*single.entry(0, 0), 2);

        let b = parse_matrix("2 3\n1 2 3\n4 5 6", Int64).unwrap();
        let s = b.submatrix(SubsetMask::from_elements(&[2]), SubsetMask::from_elements(&[1, 3]));
        assert_eq!((s.rows(), s.cols()), (1, 2));
        assert_eq!((*s.entry(0, 0), *s.entry(0, 1)), (4, 6));
    }

    #[test]
    fn submatrix_index_composition() {
        let mut rng = SplitMix64::new(5);
        let a = Matrix::random(Int64, 5, 7, &mut rng);
        let rows = SubsetMask::from_elements(&[2, 4, 5]);
        let cols = SubsetMask::from_elements(&[1, 3, 6, 7]);
        let s = a.submatrix(rows, cols);
        let ri: Vec<usize> = rows.bit_positions().collect();
        let ci: Vec<usize> = cols.bit_positions().collect();
        for (i, &orig_i) in ri.iter().enumerate() {
            for (j, &orig_j) in ci.iter().enumerate() {
                assert_eq!(s.entry(i, j), a.entry(orig_i, orig_j));
            }
        }
    }

    #[test]
    fn parse_render_roundtrip_over_every_instance() {
        fn roundtrip<A: Algebra>(alg: A, seed: u64) {
            for trial in 0..100u64 {
                let mut rng = SplitMix64::stream(seed, trial);
                let m = 1 + (rng.next_u64() % 8) as usize;
                let n = 1 + (rng.next_u64() % 8) as usize;
                let a = Matrix::random(alg.clone(), m, n, &mut rng);
                let text = a.render();
                let b = parse_matrix(&text, alg.clone()).unwrap();
                assert_eq!(b.render(), text, "{}", alg.name());
                for i in 0..m {
                    for j in 0..n {
                        assert_eq!(a.entry(i, j), b.entry(i, j));
                    }
                }
            }
        }
        roundtrip(Int64, 11);
        roundtrip(BigIntAlg, 12);
        roundtrip(ModP::new(97).unwrap(), 13);
        roundtrip(Tropical, 14);
        roundtrip(Mat2Nat, 15);
        roundtrip(Mat2Int, 16);
    }

    #[test]
    fn split_plan_covers_rows() {
        for m in 1..=12 {
            let plan = SplitPlan::for_rows(m);
            assert_eq!(plan.k1 + plan.k2, m);
            assert!(plan.k1 == plan.k2 || plan.k1 == plan.k2 + 1);
            assert!(plan.top_rows().is_disjoint(plan.bottom_rows()));
            assert_eq!(plan.top_rows().union(plan.bottom_rows()), SubsetMask::full(m));
        }
    }
}
