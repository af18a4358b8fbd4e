//! Cross-algorithm equivalence on wider grids than the acceptance suite,
//! plus counting transparency and the incremental-state debug checks.

use permanent::algebra::{
    make_counting, Algebra, BigIntAlg, Int64, Mat2Int, Mat2Nat, ModP, Tropical,
};
use permanent::matrix::Matrix;
use permanent::perm::{
    per_bruteforce, per_dp_columns, per_dp_rows, per_ryser, per_ryser_split,
    per_ryser_transposed, per_transposed_bruteforce, Variant,
};
use permanent::rng::SplitMix64;

/// Row-ordered permanents over the noncommutative ring mat2z: the column DP,
/// plain inclusion-exclusion and the split algorithm all preserve operand
/// order, so all three must match the definition without commutativity.
#[test]
fn noncommutative_per_paths_match_the_oracle_up_to_7() {
    for m in 1..=7usize {
        for n in m..=7 {
            let trials = if n >= 6 { 5 } else { 20 };
            for trial in 0..trials {
                let mut rng = SplitMix64::stream(0xA1, trial);
                let a = Matrix::random(Mat2Int, m, n, &mut rng);
                let oracle = per_bruteforce(&a).unwrap();
                assert_eq!(per_dp_columns(&a).unwrap().value, oracle, "dp-col {m}x{n}");
                assert_eq!(per_ryser(&a).unwrap().value, oracle, "ryser {m}x{n}");
                assert_eq!(per_ryser_split(&a).unwrap().value, oracle, "split {m}x{n}");
            }
        }
    }
}

/// Transposed permanents: the row DP works in the mat2 semiring, the
/// transposed inclusion-exclusion needs the mat2z ring.
#[test]
fn transposed_paths_match_the_oracle_up_to_7() {
    for m in 1..=7usize {
        for n in m..=7 {
            let trials = if n >= 6 { 5 } else { 20 };
            for trial in 0..trials {
                let mut rng = SplitMix64::stream(0xA2, trial);
                let a = Matrix::random(Mat2Nat, m, n, &mut rng);
                assert_eq!(
                    per_dp_rows(&a, Variant::PerTransposed).unwrap().value,
                    per_transposed_bruteforce(&a).unwrap(),
                    "dp-row per-t over mat2 {m}x{n}"
                );

                let mut rng = SplitMix64::stream(0xA3, trial);
                let b = Matrix::random(Mat2Int, m, n, &mut rng);
                assert_eq!(
                    per_ryser_transposed(&b, Variant::PerTransposed).unwrap().value,
                    per_transposed_bruteforce(&b).unwrap(),
                    "ryser-t per-t over mat2z {m}x{n}"
                );
            }
        }
    }
}

/// In commutative carriers the two permanent flavors collapse.
#[test]
fn commutative_collapse_on_fifty_matrices_per_instance() {
    fn check<A: Algebra>(alg: A, seed: u64) {
        for trial in 0..50u64 {
            let mut rng = SplitMix64::stream(seed, trial);
            let m = 1 + (rng.next_u64() % 5) as usize;
            let n = m + (rng.next_u64() % (6 - m as u64)) as usize;
            let a = Matrix::random(alg.clone(), m, n, &mut rng);
            assert_eq!(
                per_bruteforce(&a).unwrap(),
                per_transposed_bruteforce(&a).unwrap(),
                "{} {m}x{n} trial={trial}",
                alg.name()
            );
        }
    }
    check(Int64, 0xB1);
    check(BigIntAlg, 0xB2);
    check(ModP::new(97).unwrap(), 0xB3);
    check(Tropical, 0xB4);
}

/// Attaching the counting wrapper never changes any computed value.
#[test]
fn counting_wrapper_is_value_transparent() {
    fn check<A: Algebra + Copy>(alg: A, seed: u64) {
        let mut rng = SplitMix64::new(seed);
        let plain = Matrix::random(alg, 4, 6, &mut rng);
        let (counting, counter) = make_counting(alg);
        let counted = plain.with_algebra(counting);

        assert_eq!(per_bruteforce(&plain).unwrap(), per_bruteforce(&counted).unwrap());
        assert_eq!(
            per_dp_columns(&plain).unwrap().value,
            per_dp_columns(&counted).unwrap().value
        );
        if alg.is_commutative() {
            assert_eq!(
                per_dp_rows(&plain, Variant::Per).unwrap().value,
                per_dp_rows(&counted, Variant::Per).unwrap().value
            );
        } else {
            assert_eq!(
                per_dp_rows(&plain, Variant::PerTransposed).unwrap().value,
                per_dp_rows(&counted, Variant::PerTransposed).unwrap().value
            );
        }
        if alg.has_negation() {
            assert_eq!(per_ryser(&plain).unwrap().value, per_ryser(&counted).unwrap().value);
            assert_eq!(
                per_ryser_split(&plain).unwrap().value,
                per_ryser_split(&counted).unwrap().value
            );
        }
        assert!(counter.total() > 0, "{}: counted run must tally", alg.name());

        let uncounted = per_dp_columns(&plain).unwrap();
        assert_eq!((uncounted.adds, uncounted.muls), (0, 0), "no counter, no tally");
    }
    check(Int64, 0xD1);
    check(ModP::new(97).unwrap(), 0xD2);
    check(Tropical, 0xD3);
    check(Mat2Int, 0xD4);
}

/// Measured multiplications never exceed the predicted bound, for every
/// algorithm on the whole small grid (the per-report invariant; total-ops
/// compliance is the acceptance suite's concern).
#[test]
fn measured_multiplications_stay_within_the_predicted_bound() {
    use permanent::perm::predict_ops;
    for m in 1..=12usize {
        for n in m..=12 {
            let (alg, _counter) = make_counting(ModP::new(97).unwrap());
            let mut rng = SplitMix64::stream(0xF1, (m * 16 + n) as u64);
            let a = Matrix::random(alg, m, n, &mut rng);
            let reports = [
                per_dp_columns(&a).unwrap(),
                per_dp_rows(&a, Variant::Per).unwrap(),
                per_ryser(&a).unwrap(),
                per_ryser_split(&a).unwrap(),
                per_ryser_transposed(&a, Variant::Per).unwrap(),
            ];
            for r in reports {
                let bound = predict_ops(r.algorithm, m, n).unwrap();
                assert_eq!(r.predicted_bound, bound);
                assert!(
                    (r.muls as u128) <= bound,
                    "{} at {m}x{n}: {} muls > bound {bound}",
                    r.algorithm,
                    r.muls
                );
            }
        }
    }
}

/// Runs the incremental-state algorithms across every shape up to 8x8 in a
/// counting context; the debug-mode checks inside compare row/column sums
/// against direct summation on every visited subset (and must not leak into
/// the tallies, which stay equal to the uncounted baseline).
#[test]
fn incremental_state_checks_pass_up_to_8() {
    for m in 1..=8usize {
        for n in m..=8 {
            let (alg, counter) = make_counting(Int64);
            let mut rng = SplitMix64::stream(0xE1, (m * 16 + n) as u64);
            let a = Matrix::random(alg, m, n, &mut rng);
            let r1 = per_ryser(&a).unwrap();
            let mid = counter.total();
            assert_eq!(mid, r1.ops_total(), "pause leak in ryser at {m}x{n}");
            let r2 = per_ryser_transposed(&a, Variant::Per).unwrap();
            assert_eq!(counter.total() - mid, r2.ops_total(), "pause leak in ryser-t at {m}x{n}");
            assert_eq!(r1.value, r2.value, "{m}x{n}");
        }
    }
}
