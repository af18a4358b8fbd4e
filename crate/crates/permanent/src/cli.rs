//! Command implementations behind the `perm` binary: compute one permanent,
//! verify the fast algorithms against the brute-force oracles on seeded
//! random matrices, and emit benchmark CSV with measured operation counts
//! against predicted bounds.
//!
//! Everything here returns strings and exit codes instead of printing, so
//! the commands are directly testable. Exit codes: 0 success, 1 verification
//! mismatch, 2 parse/usage error, 3 capability mismatch, 4 shape error,
//! 5 arithmetic overflow.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use crate::algebra::{
    make_counting, Algebra, ArithmeticOverflow, BigIntAlg, Int64, Mat2Int, Mat2Nat, ModP,
    Tropical,
};
use crate::matrix::{parse_matrix, Matrix};
use crate::perm::{
    per_bruteforce, per_dp_columns, per_dp_rows, per_ryser, per_ryser_split,
    per_ryser_transposed, per_transposed_bruteforce, predict_ops, Algorithm, AlgoReport,
    PermError, Variant,
};
use crate::rng::SplitMix64;

/// Exit code classes for the binary.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;
pub const EXIT_SHAPE: i32 = 4;
pub const EXIT_OVERFLOW: i32 = 5;

/// A command failure: the message goes to stderr, the code to the shell.
#[derive(Clone, Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: EXIT_PARSE }
    }

    fn from_perm(err: PermError) -> Self {
        let code = match err {
            PermError::Shape { .. } => EXIT_SHAPE,
            PermError::MissingNegation { .. }
            | PermError::RequiresCommutative { .. }
            | PermError::VariantUnsupported { .. } => EXIT_CAPABILITY,
            _ => EXIT_PARSE,
        };
        CliError { message: err.to_string(), code }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

/// Algebra selector: `int64`, `bigint`, `mod:<p>`, `tropical`, `mat2`,
/// `mat2z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraSel {
    Int64,
    BigInt,
    Mod(u64),
    Tropical,
    Mat2,
    Mat2z,
}

impl AlgebraSel {
    pub fn is_commutative(self) -> bool {
        !matches!(self, AlgebraSel::Mat2 | AlgebraSel::Mat2z)
    }

    pub fn has_negation(self) -> bool {
        !matches!(self, AlgebraSel::Tropical | AlgebraSel::Mat2)
    }
}

impl std::str::FromStr for AlgebraSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "int64" => Ok(AlgebraSel::Int64),
            "bigint" => Ok(AlgebraSel::BigInt),
            "tropical" => Ok(AlgebraSel::Tropical),
            "mat2" => Ok(AlgebraSel::Mat2),
            "mat2z" => Ok(AlgebraSel::Mat2z),
            other => match other.strip_prefix("mod:") {
                Some(p) => {
                    let p: u64 =
                        p.parse().map_err(|e| format!("bad modulus in `{other}`: {e}"))?;
                    ModP::new(p)?;
                    Ok(AlgebraSel::Mod(p))
                }
                None => Err(format!(
                    "unknown algebra `{other}` (expected int64|bigint|mod:<p>|tropical|mat2|mat2z)"
                )),
            },
        }
    }
}

impl std::fmt::Display for AlgebraSel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraSel::Int64 => write!(f, "int64"),
            AlgebraSel::BigInt => write!(f, "bigint"),
            AlgebraSel::Mod(p) => write!(f, "mod:{p}"),
            AlgebraSel::Tropical => write!(f, "tropical"),
            AlgebraSel::Mat2 => write!(f, "mat2"),
            AlgebraSel::Mat2z => write!(f, "mat2z"),
        }
    }
}

/// Runs `f` against the concrete algebra instance behind a selector.
macro_rules! with_algebra {
    ($sel:expr, $alg:ident, $body:expr) => {
        match $sel {
            AlgebraSel::Int64 => {
                let $alg = Int64;
                $body
            }
            AlgebraSel::BigInt => {
                let $alg = BigIntAlg;
                $body
            }
            AlgebraSel::Mod(p) => {
                let $alg = ModP::new(p).expect("selector validated");
                $body
            }
            AlgebraSel::Tropical => {
                let $alg = Tropical;
                $body
            }
            AlgebraSel::Mat2 => {
                let $alg = Mat2Nat;
                $body
            }
            AlgebraSel::Mat2z => {
                let $alg = Mat2Int;
                $body
            }
        }
    };
}

/// Algorithm selector including `auto`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoSel {
    Auto,
    Fixed(Algorithm),
}

impl std::str::FromStr for AlgoSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            Ok(AlgoSel::Auto)
        } else {
            s.parse::<Algorithm>().map(AlgoSel::Fixed)
        }
    }
}

/// Whether `algo` can produce `variant` over an algebra with the given
/// capabilities.
pub fn applicable(algo: Algorithm, variant: Variant, commutative: bool, negation: bool) -> bool {
    match (algo, variant) {
        (Algorithm::Brute, _) => true,
        (Algorithm::DpColumns, Variant::Per) => true,
        (Algorithm::DpColumns, Variant::PerTransposed) => false,
        (Algorithm::DpRows, Variant::Per) => commutative,
        (Algorithm::DpRows, Variant::PerTransposed) => true,
        (Algorithm::Ryser | Algorithm::RyserSplit, Variant::Per) => negation,
        (Algorithm::Ryser | Algorithm::RyserSplit, Variant::PerTransposed) => false,
        (Algorithm::RyserTransposed, Variant::Per) => negation && commutative,
        (Algorithm::RyserTransposed, Variant::PerTransposed) => negation,
    }
}

/// Picks the applicable algorithm minimizing [`predict_ops`] for the shape;
/// ties break by the fixed precedence dp-row, ryser-t, ryser-split, ryser,
/// dp-col. The brute-force oracle is never auto-selected. A dynamic program
/// is applicable to every capability cell, so this cannot fail.
pub fn algo_auto_select(
    commutative: bool,
    negation: bool,
    m: usize,
    n: usize,
    variant: Variant,
) -> Algorithm {
    const PRECEDENCE: [Algorithm; 5] = [
        Algorithm::DpRows,
        Algorithm::RyserTransposed,
        Algorithm::RyserSplit,
        Algorithm::Ryser,
        Algorithm::DpColumns,
    ];
    let fallback = match variant {
        Variant::Per => Algorithm::DpColumns,
        Variant::PerTransposed => Algorithm::DpRows,
    };
    if m == 0 {
        return fallback;
    }
    let mut best: Option<(u128, Algorithm)> = None;
    for algo in PRECEDENCE {
        if !applicable(algo, variant, commutative, negation) {
            continue;
        }
        let cost = predict_ops(algo, m, n).expect("caller validated shape");
        if best.is_none_or(|(c, _)| cost < c) {
            best = Some((cost, algo));
        }
    }
    best.map(|(_, a)| a).unwrap_or(fallback)
}

fn run_algorithm<A: Algebra>(
    algo: Algorithm,
    variant: Variant,
    matrix: &Matrix<A>,
) -> Result<AlgoReport<A::Elem>, PermError> {
    match (algo, variant) {
        (Algorithm::Brute, _) => {
            let alg = matrix.algebra();
            let start = alg.counter().map_or((0, 0), |c| (c.adds(), c.muls()));
            let value = match variant {
                Variant::Per => per_bruteforce(matrix)?,
                Variant::PerTransposed => per_transposed_bruteforce(matrix)?,
            };
            let end = alg.counter().map_or((0, 0), |c| (c.adds(), c.muls()));
            let (m, n) = (matrix.rows(), matrix.cols());
            Ok(AlgoReport {
                algorithm: algo,
                variant,
                m,
                n,
                value,
                adds: end.0 - start.0,
                muls: end.1 - start.1,
                predicted_bound: if m == 0 {
                    0
                } else {
                    predict_ops(algo, m, n).unwrap_or(u128::MAX)
                },
            })
        }
        (Algorithm::DpColumns, Variant::Per) => per_dp_columns(matrix),
        (Algorithm::DpRows, variant) => per_dp_rows(matrix, variant),
        (Algorithm::Ryser, Variant::Per) => per_ryser(matrix),
        (Algorithm::RyserSplit, Variant::Per) => per_ryser_split(matrix),
        (Algorithm::RyserTransposed, variant) => per_ryser_transposed(matrix, variant),
        (algo, variant) => Err(PermError::VariantUnsupported { algorithm: algo, variant }),
    }
}

fn catch_overflow<R>(f: impl FnOnce() -> R) -> Result<R, CliError> {
    catch_unwind(AssertUnwindSafe(f)).map_err(|payload| {
        if let Some(o) = payload.downcast_ref::<ArithmeticOverflow>() {
            CliError { message: format!("arithmetic overflow in {}", o.0), code: EXIT_OVERFLOW }
        } else {
            std::panic::resume_unwind(payload)
        }
    })
}

/// `perm compute`: one matrix, one algorithm (or `auto`), the rendered value
/// and optionally an `ops adds=<a> muls=<u> bound=<b>` line.
#[allow(clippy::clone_on_copy)] // macro body serves Copy and non-Copy algebras alike
pub fn cmd_compute(
    algebra: AlgebraSel,
    algo: AlgoSel,
    variant: Variant,
    count_ops: bool,
    input: &str,
) -> Result<String, CliError> {
    with_algebra!(algebra, alg, {
        let matrix = parse_matrix(input, alg).map_err(|e| CliError::parse(e.to_string()))?;
        let (m, n) = (matrix.rows(), matrix.cols());
        if m > n {
            return Err(CliError::from_perm(PermError::Shape { m, n }));
        }
        let chosen = match algo {
            AlgoSel::Auto => algo_auto_select(
                algebra.is_commutative(),
                algebra.has_negation(),
                m,
                n,
                variant,
            ),
            AlgoSel::Fixed(a) => a,
        };
        if !applicable(chosen, variant, algebra.is_commutative(), algebra.has_negation()) {
            let err = if !algebra.has_negation()
                && matches!(
                    chosen,
                    Algorithm::Ryser | Algorithm::RyserSplit | Algorithm::RyserTransposed
                ) {
                PermError::MissingNegation { algorithm: chosen }
            } else if variant == Variant::Per && !algebra.is_commutative() {
                PermError::RequiresCommutative { algorithm: chosen }
            } else {
                PermError::VariantUnsupported { algorithm: chosen, variant }
            };
            return Err(CliError::from_perm(err));
        }

        if count_ops {
            let (counting, _counter) = make_counting(matrix.algebra().clone());
            let counted = matrix.with_algebra(counting);
            let report = catch_overflow(|| run_algorithm(chosen, variant, &counted))?
                .map_err(CliError::from_perm)?;
            let rendered = counted.algebra().render_elem(&report.value);
            Ok(format!(
                "{rendered}\nops adds={} muls={} bound={}\n",
                report.adds, report.muls, report.predicted_bound
            ))
        } else {
            let report = catch_overflow(|| run_algorithm(chosen, variant, &matrix))?
                .map_err(CliError::from_perm)?;
            Ok(format!("{}\n", matrix.algebra().render_elem(&report.value)))
        }
    })
}

/// `perm verify`: seeded random matrices on every shape up to
/// `max_m x max_n`, every applicable algorithm checked against the
/// brute-force oracles. Output is byte-stable for a fixed seed; the first
/// mismatch reports the offending matrix in the input text format.
#[allow(clippy::clone_on_copy)] // macro body serves Copy and non-Copy algebras alike
pub fn cmd_verify(
    algebra: AlgebraSel,
    max_m: usize,
    max_n: usize,
    trials: usize,
    seed: u64,
) -> Result<String, CliError> {
    if max_m < 1 || max_m > max_n {
        return Err(CliError::parse(format!(
            "need 1 <= max-m <= max-n, got max-m={max_m} max-n={max_n}"
        )));
    }
    if max_n > 9 {
        return Err(CliError::parse(format!(
            "max-n={max_n} exceeds the oracle-feasible cap of 9"
        )));
    }
    if trials < 1 {
        return Err(CliError::parse("need at least one trial"));
    }

    let commutative = algebra.is_commutative();
    let negation = algebra.has_negation();
    let plans: Vec<(Algorithm, Variant)> = Algorithm::ALL
        .into_iter()
        .filter(|a| *a != Algorithm::Brute)
        .flat_map(|a| [(a, Variant::Per), (a, Variant::PerTransposed)])
        .filter(|&(a, v)| applicable(a, v, commutative, negation))
        .collect();

    with_algebra!(algebra, alg, {
        let mut out = String::new();
        let mut total = 0usize;
        for m in 1..=max_m {
            for n in m..=max_n {
                let mut cell_checks = 0usize;
                for trial in 0..trials {
                    let mut rng = SplitMix64::stream(seed, trial as u64);
                    let matrix = Matrix::random(alg.clone(), m, n, &mut rng);
                    let per_oracle = per_bruteforce(&matrix).map_err(CliError::from_perm)?;
                    let per_t_oracle =
                        per_transposed_bruteforce(&matrix).map_err(CliError::from_perm)?;
                    for &(algo, variant) in &plans {
                        let report =
                            run_algorithm(algo, variant, &matrix).map_err(CliError::from_perm)?;
                        let expected = match variant {
                            Variant::Per => &per_oracle,
                            Variant::PerTransposed => &per_t_oracle,
                        };
                        if report.value != *expected {
                            let mut msg = format!(
                                "MISMATCH algebra={} algo={algo} variant={variant} m={m} n={n} \
                                 trial={trial} seed={seed}\n",
                                alg.name()
                            );
                            msg.push_str(&format!(
                                "got {}, oracle {}\ncounterexample:\n{}",
                                alg.render_elem(&report.value),
                                alg.render_elem(expected),
                                matrix.render()
                            ));
                            return Err(CliError { message: msg, code: EXIT_MISMATCH });
                        }
                        cell_checks += 1;
                    }
                }
                total += cell_checks;
                out.push_str(&format!("m={m} n={n} checks={cell_checks} pass={cell_checks}\n"));
            }
        }
        out.push_str(&format!(
            "verified {total} checks over {} ({} algorithm/variant paths): all pass\n",
            alg.name(),
            plans.len()
        ));
        Ok(out)
    })
}

/// Inclusive `a..b` range syntax for the bench grid.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("range `{text}` must look like `a..b`"))?;
    let a: usize = a.parse().map_err(|e| format!("bad range start `{a}`: {e}"))?;
    let b: usize = b.parse().map_err(|e| format!("bad range end `{b}`: {e}"))?;
    if a < 1 || b < a {
        return Err(format!("range `{text}` must satisfy 1 <= a <= b"));
    }
    Ok(a..=b)
}

/// `perm bench`: one CSV row per (algorithm, algebra, m, n) cell with
/// measured operation counts, the predicted bound, and wall time. Counts are
/// deterministic; wall time is not. Cells the algorithm cannot serve (wide
/// shapes or missing capabilities) are skipped.
pub fn cmd_bench(
    algebras: &[AlgebraSel],
    algos: &[Algorithm],
    m_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Result<String, CliError> {
    if *n_range.end() > 30 || *m_range.end() > 30 {
        return Err(CliError::parse(format!(
            "bench grid capped at 30, got m up to {} and n up to {}",
            m_range.end(),
            n_range.end()
        )));
    }
    let mut out = String::from("algo,algebra,m,n,adds,muls,bound,wall_ns\n");
    for &algebra in algebras {
        for &algo in algos {
            for m in m_range.clone() {
                for n in n_range.clone() {
                    if m > n || !applicable(algo, Variant::Per, algebra.is_commutative(), algebra.has_negation()) {
                        continue;
                    }
                    with_algebra!(algebra, alg, {
                        let (counting, _counter) = make_counting(alg);
                        let mut rng = SplitMix64::stream(seed, (m * 64 + n) as u64);
                        let matrix = Matrix::random(counting, m, n, &mut rng);
                        let started = Instant::now();
                        let report = catch_overflow(|| run_algorithm(algo, Variant::Per, &matrix))?
                            .map_err(CliError::from_perm)?;
                        let wall_ns = started.elapsed().as_nanos();
                        out.push_str(&format!(
                            "{algo},{algebra},{m},{n},{},{},{},{wall_ns}\n",
                            report.adds, report.muls, report.predicted_bound
                        ));
                    });
                }
            }
        }
    }
    Ok(out)
}
