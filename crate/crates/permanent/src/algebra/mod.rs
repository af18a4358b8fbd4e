//! The algebraic contract every permanent algorithm is generic over, the
//! shipped carrier instances, and the operation-counting wrapper.
//!
//! An [`Algebra`] is a semiring: addition is associative and commutative
//! with identity `zero`, multiplication is associative with identity `one`
//! and distributes over addition on both sides, and `zero` annihilates.
//! Multiplication need not commute and additive inverses need not exist;
//! the two capability flags tell callers which extras an instance offers.

mod counting;
mod instances;
mod laws;

pub use counting::{make_counting, Counting, OpCounter};
pub use instances::{BigIntAlg, Int64, Mat2, Mat2Nat, Mat2Int, ModP, Tropical, Trop};
pub use laws::{law_check, LawEntry, LawReport};

use crate::rng::SplitMix64;

/// Carrier raised when checked fixed-width arithmetic overflows; callers at
/// process boundaries catch it and report an overflow failure.
#[derive(Debug, Clone, Copy)]
pub struct ArithmeticOverflow(pub &'static str);

/// An algebraic structure: carrier type, the two operations with their
/// identities, optional negation, and capability flags.
pub trait Algebra: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    /// Selector-style name, e.g. `int64` or `mod:97`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Additive inverse. Callers must gate on [`Algebra::has_negation`];
    /// instances without one panic.
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_commutative(&self) -> bool;
    fn has_negation(&self) -> bool;

    /// Parses the canonical text form of an element.
    fn parse_elem(&self, text: &str) -> Result<Self::Elem, String>;

    /// Renders an element in its canonical text form.
    fn render_elem(&self, a: &Self::Elem) -> String;

    /// Draws an element from the instance's documented sampling range.
    fn sample(&self, rng: &mut SplitMix64) -> Self::Elem;

    /// The attached operation counter, when this algebra counts.
    fn counter(&self) -> Option<&OpCounter> {
        None
    }
}

/// The `c`-fold sum `x + x + ... + x`, computed by binary doubling.
///
/// Costs at most `2*floor(log2 c) + 1` additions for `c >= 1` and none for
/// `c <= 1`; `c == 0` yields `zero`. This is how integer weights such as
/// binomial coefficients act on carrier elements: the weight itself is never
/// materialized as a carrier value.
pub fn scalar_mul<A: Algebra>(alg: &A, c: u64, x: &A::Elem) -> A::Elem {
    if c == 0 {
        return alg.zero();
    }
    let top = 63 - c.leading_zeros();
    let mut acc = x.clone();
    for i in (0..top).rev() {
        acc = alg.add(&acc, &acc);
        if c >> i & 1 == 1 {
            acc = alg.add(&acc, x);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_mul_base_cases() {
        let alg = Int64;
        assert_eq!(scalar_mul(&alg, 0, &7), 0);
        assert_eq!(scalar_mul(&alg, 1, &7), 7);
        assert_eq!(scalar_mul(&alg, 3, &5), 15);
    }

    #[test]
    fn scalar_mul_matches_explicit_folds() {
        let alg = Int64;
        let mut rng = SplitMix64::new(9);
        for _ in 0..50 {
            let x = alg.sample(&mut rng);
            for c in 0..=64u64 {
                let mut folded = alg.zero();
                for _ in 0..c {
                    folded = alg.add(&folded, &x);
                }
                assert_eq!(scalar_mul(&alg, c, &x), folded, "c={c} x={x}");
            }
        }
    }

    #[test]
    fn scalar_mul_addition_budget() {
        let (alg, counter) = make_counting(Int64);
        for c in 1..=1000u64 {
            counter.reset();
            let _ = scalar_mul(&alg, c, &3);
            let cap = 2 * (63 - c.leading_zeros() as u64) + 1;
            assert!(counter.adds() <= cap, "c={c}: {} > {cap}", counter.adds());
            assert_eq!(counter.muls(), 0);
        }
    }
}
