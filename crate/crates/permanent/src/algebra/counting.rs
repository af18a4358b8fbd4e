//! Operation counting: a transparent wrapper whose `add`/`mul` delegate to a
//! base algebra and bump shared counters. Values are identical to the base;
//! only the tally is new. Negation, identities, parsing and flags pass
//! through uncounted.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::Algebra;
use crate::rng::SplitMix64;

#[derive(Debug, Default)]
struct Counts {
    adds: AtomicU64,
    muls: AtomicU64,
}

/// Shared tally of additions and multiplications performed through one
/// counting algebra. Clones observe the same counts; each evaluation context
/// should own a distinct counter.
#[derive(Clone, Debug, Default)]
pub struct OpCounter {
    inner: Arc<Counts>,
}

impl OpCounter {
    pub fn new() -> Self {
        OpCounter::default()
    }

    pub fn adds(&self) -> u64 {
        self.inner.adds.load(Ordering::Relaxed)
    }

    pub fn muls(&self) -> u64 {
        self.inner.muls.load(Ordering::Relaxed)
    }

    pub fn total(&self) -> u64 {
        self.adds() + self.muls()
    }

    /// Counts are monotone during an evaluation; resetting is explicit.
    pub fn reset(&self) {
        self.inner.adds.store(0, Ordering::Relaxed);
        self.inner.muls.store(0, Ordering::Relaxed);
    }

    fn bump_add(&self) {
        self.inner.adds.fetch_add(1, Ordering::Relaxed);
    }

    fn bump_mul(&self) {
        self.inner.muls.fetch_add(1, Ordering::Relaxed);
    }

    /// Snapshot for sections whose arithmetic must not show up in the tally
    /// (consistency checks re-deriving values the algorithm already holds).
    #[cfg(debug_assertions)]
    pub(crate) fn save(&self) -> (u64, u64) {
        (self.adds(), self.muls())
    }

    #[cfg(debug_assertions)]
    pub(crate) fn restore(&self, saved: (u64, u64)) {
        self.inner.adds.store(saved.0, Ordering::Relaxed);
        self.inner.muls.store(saved.1, Ordering::Relaxed);
    }
}

/// A base algebra plus an [`OpCounter`].
#[derive(Clone)]
pub struct Counting<A: Algebra> {
    base: A,
    counter: OpCounter,
}

impl<A: Algebra> Counting<A> {
    pub fn base(&self) -> &A {
        &self.base
    }
}

/// Wraps `base` so that every `add`/`mul` is tallied on the returned counter.
pub fn make_counting<A: Algebra>(base: A) -> (Counting<A>, OpCounter) {
    let counter = OpCounter::new();
    let wrapped = Counting { base, counter: counter.clone() };
    (wrapped, counter)
}

impl<A: Algebra> Algebra for Counting<A> {
    type Elem = A::Elem;

    fn name(&self) -> String {
        self.base.name()
    }

    fn zero(&self) -> Self::Elem {
        self.base.zero()
    }

    fn one(&self) -> Self::Elem {
        self.base.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.counter.bump_add();
        self.base.add(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.counter.bump_mul();
        self.base.mul(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.base.neg(a)
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn has_negation(&self) -> bool {
        self.base.has_negation()
    }

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, String> {
        self.base.parse_elem(text)
    }

    fn render_elem(&self, a: &Self::Elem) -> String {
        self.base.render_elem(a)
    }

    fn sample(&self, rng: &mut SplitMix64) -> Self::Elem {
        self.base.sample(rng)
    }

    fn counter(&self) -> Option<&OpCounter> {
        Some(&self.counter)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Int64, Tropical, Trop};
    use super::*;

    #[test]
    fn delegated_ops_count_and_match_base() {
        let (alg, counter) = make_counting(Int64);
        assert_eq!(alg.add(&2, &3), 5);
        assert_eq!(counter.adds(), 1);
        assert_eq!(counter.muls(), 0);

        counter.reset();
        let lhs = alg.mul(&2, &3);
        let rhs = alg.mul(&4, &5);
        assert_eq!(alg.add(&lhs, &rhs), 26);
        assert_eq!((counter.adds(), counter.muls()), (1, 2));
    }

    #[test]
    fn tropical_mul_counts_as_mul() {
        let (alg, counter) = make_counting(Tropical);
        assert_eq!(alg.mul(&Trop::Fin(1), &Trop::Fin(4)), Trop::Fin(5));
        assert_eq!(counter.muls(), 1);
        assert_eq!(counter.adds(), 0);
    }

    #[test]
    fn flags_and_identities_pass_through() {
        let (alg, _) = make_counting(Int64);
        assert!(alg.is_commutative() && alg.has_negation());
        assert_eq!(alg.zero(), 0);
        assert_eq!(alg.one(), 1);
        assert_eq!(alg.neg(&4), -4);
    }
}
