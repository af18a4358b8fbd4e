//! Signed disjoint-pair summation over k-uniform set functions.
//!
//! For `f` supported on the size-`kf` subsets of `{1..u}` and `g` on the
//! size-`kg` subsets, the sum of `f(S) * g(T)` over disjoint pairs `(S, T)`
//! equals the signed sum over all `X` of `(-1)^|X| fhat(X) ghat(X)`, where
//! `fhat(X)` adds `f` over the supersets of `X`: subsets of `S` and `T`
//! with `X` inside both survive with coefficient `sum (-1)^|X| = [S cap T
//! empty]`. Everything lives on the down-closures of the two supports, so
//! tables hold `binsum(u, k)` entries instead of `2^u`.
//!
//! This is what turns the row-split reduction of the permanent into an
//! algorithm: two half-permanent tables in, one ring element out.

use crate::algebra::Algebra;
use crate::perm::PermError;
use crate::subsets::{binomial, binsum, downset_rank, enumerate_k_subsets, SubsetMask};

/// Cap for the literal double-loop oracle.
pub const DIRECT_SUM_MAX_GROUND_SET: usize = 12;

/// A set function on the cardinality-at-most-`kmax` down-closure of
/// `{1..u}`, dense over `downset_rank`. `None` marks a structural zero, so
/// transforms can skip vacuous ring work; readers treat it as `zero`.
#[derive(Clone, Debug)]
pub struct TrimmedTable<E> {
    u: usize,
    kmax: usize,
    values: Vec<Option<E>>,
}

impl<E: Clone> TrimmedTable<E> {
    pub fn new_empty(u: usize, kmax: usize) -> Self {
        assert!(kmax <= u);
        TrimmedTable { u, kmax, values: vec![None; binsum(u, kmax) as usize] }
    }

    /// Builds a table supported on its top layer from the colex-ordered
    /// values of the size-`kmax` subsets.
    pub fn from_top_layer(u: usize, kmax: usize, layer: Vec<E>) -> Self {
        assert_eq!(layer.len() as u64, binomial(u, kmax), "top layer size mismatch");
        let mut table = TrimmedTable::new_empty(u, kmax);
        let offset = if kmax == 0 { 0 } else { binsum(u, kmax - 1) } as usize;
        for (i, v) in layer.into_iter().enumerate() {
            table.values[offset + i] = Some(v);
        }
        table
    }

    pub fn ground_set(&self) -> usize {
        self.u
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, x: SubsetMask, value: E) {
        let r = downset_rank(x, self.u, self.kmax) as usize;
        self.values[r] = Some(value);
    }

    /// Value at `x`, `None` meaning a structural zero.
    pub fn get(&self, x: SubsetMask) -> Option<&E> {
        let r = downset_rank(x, self.u, self.kmax) as usize;
        self.values[r].as_ref()
    }

    fn rank(&self, x: SubsetMask) -> usize {
        downset_rank(x, self.u, self.kmax) as usize
    }

    fn require_top_supported(&self) -> Result<(), PermError> {
        let top_start = if self.kmax == 0 { 0 } else { binsum(self.u, self.kmax - 1) } as usize;
        match self.values[..top_start].iter().position(Option::is_some) {
            Some(r) => Err(PermError::SupportViolation { rank: r as u64 }),
            None => Ok(()),
        }
    }
}

/// Superset sums of a top-layer-supported table: returns `z` with
/// `z(X) = sum of f(S) over S containing X with |S| = kmax`, for every `X`
/// in the down-closure.
///
/// Computed in place over an owned copy by `u` coordinate passes: pass `j`
/// updates every `X` with `j` not in `X` and `|X| < kmax` by
/// `z(X) += z(X + {j})`. After pass `j`, `z(X)` sums the top-layer supersets
/// whose extra elements all lie in `{1..j}`. Entries on the top layer are
/// never written, which is exactly what confines the work to the
/// down-closure; additions never exceed `u * binsum(u, kmax)`, and merges
/// with a structurally zero side cost nothing.
pub fn trimmed_superset_zeta<A: Algebra>(
    alg: &A,
    f: &TrimmedTable<A::Elem>,
) -> Result<TrimmedTable<A::Elem>, PermError> {
    f.require_top_supported()?;
    let (u, kmax) = (f.ground_set(), f.kmax());
    let mut z = f.clone();
    for j in 1..=u {
        for size in 0..kmax {
            for x in enumerate_k_subsets(u, size) {
                if x.contains(j) {
                    continue;
                }
                let src_rank = z.rank(x.insert(j));
                let dst_rank = z.rank(x);
                match (&z.values[dst_rank], &z.values[src_rank]) {
                    (_, None) => {}
                    (None, Some(s)) => z.values[dst_rank] = Some(s.clone()),
                    (Some(d), Some(s)) => z.values[dst_rank] = Some(alg.add(d, s)),
                }
            }
        }
    }
    Ok(z)
}

/// The signed disjoint-pair sum `sum_{S cap T = empty} f(S) * g(T)`,
/// evaluated as `sum_X (-1)^|X| fhat(X) ghat(X)` over the down-closure of
/// the smaller support, `fhat` always the left factor. One multiplication
/// per `X` plus the two superset transforms; requires negation.
pub fn disjoint_pair_sum<A: Algebra>(
    alg: &A,
    f: &TrimmedTable<A::Elem>,
    g: &TrimmedTable<A::Elem>,
) -> Result<A::Elem, PermError> {
    if f.ground_set() != g.ground_set() {
        return Err(PermError::GroundSetMismatch { left: f.ground_set(), right: g.ground_set() });
    }
    if !alg.has_negation() {
        return Err(PermError::MissingNegation { algorithm: crate::perm::Algorithm::RyserSplit });
    }
    let u = f.ground_set();
    let fz = trimmed_superset_zeta(alg, f)?;
    let gz = trimmed_superset_zeta(alg, g)?;

    let mut acc: Option<A::Elem> = None;
    for size in 0..=f.kmax().min(g.kmax()) {
        for x in enumerate_k_subsets(u, size) {
            let (Some(fv), Some(gv)) = (fz.get(x), gz.get(x)) else {
                continue;
            };
            let mut term = alg.mul(fv, gv);
            if size % 2 == 1 {
                term = alg.neg(&term);
            }
            acc = Some(match acc.take() {
                None => term,
                Some(s) => alg.add(&s, &term),
            });
        }
    }
    Ok(acc.unwrap_or_else(|| alg.zero()))
}

/// Literal oracle: loops over both supported layers and skips intersecting
/// pairs, multiplying `f(S)` on the left. Ground sets are capped so the
/// quadratic loop stays a test-scale tool.
pub fn direct_disjoint_sum<A: Algebra>(
    alg: &A,
    f: &TrimmedTable<A::Elem>,
    g: &TrimmedTable<A::Elem>,
) -> Result<A::Elem, PermError> {
    if f.ground_set() != g.ground_set() {
        return Err(PermError::GroundSetMismatch { left: f.ground_set(), right: g.ground_set() });
    }
    let u = f.ground_set();
    if u > DIRECT_SUM_MAX_GROUND_SET {
        return Err(PermError::GroundSetTooLarge { u, max: DIRECT_SUM_MAX_GROUND_SET });
    }
    let mut acc: Option<A::Elem> = None;
    for s in enumerate_k_subsets(u, f.kmax()) {
        let Some(fv) = f.get(s) else { continue };
        for t in enumerate_k_subsets(u, g.kmax()) {
            if !s.is_disjoint(t) {
                continue;
            }
            let Some(gv) = g.get(t) else { continue };
            let term = alg.mul(fv, gv);
            acc = Some(match acc.take() {
                None => term,
                Some(v) => alg.add(&v, &term),
            });
        }
    }
    Ok(acc.unwrap_or_else(|| alg.zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_counting, Int64};
    use crate::subsets::binsum;

    fn ones_layer(u: usize, k: usize) -> TrimmedTable<i64> {
        TrimmedTable::from_top_layer(u, k, vec![1; binomial(u, k) as usize])
    }

    #[test]
    fn zeta_single_element_ground_set() {
        let f = ones_layer(1, 1);
        let z = trimmed_superset_zeta(&Int64, &f).unwrap();
        assert_eq!(z.get(SubsetMask::EMPTY), Some(&1));
        assert_eq!(z.get(SubsetMask::from_elements(&[1])), Some(&1));
    }

    #[test]
    fn zeta_counts_supersets_of_each_subset() {
        let f = ones_layer(3, 2);
        let z = trimmed_superset_zeta(&Int64, &f).unwrap();
        assert_eq!(z.get(SubsetMask::EMPTY), Some(&3));
        for e in 1..=3 {
            assert_eq!(z.get(SubsetMask::from_elements(&[e])), Some(&2));
        }
        for x in enumerate_k_subsets(3, 2) {
            assert_eq!(z.get(x), Some(&1));
        }
    }

    #[test]
    fn zeta_on_empty_support_stays_empty() {
        let f: TrimmedTable<i64> = TrimmedTable::new_empty(4, 2);
        let z = trimmed_superset_zeta(&Int64, &f).unwrap();
        assert!(z.get(SubsetMask::EMPTY).is_none());
    }

    #[test]
    fn zeta_rejects_values_below_the_top_layer() {
        let mut f = ones_layer(3, 2);
        f.set(SubsetMask::from_elements(&[1]), 5);
        assert!(matches!(
            trimmed_superset_zeta(&Int64, &f),
            Err(PermError::SupportViolation { .. })
        ));
    }

    #[test]
    fn zeta_matches_direct_superset_summation() {
        for u in 0..=10 {
            for kmax in 0..=u {
                let mut table = TrimmedTable::new_empty(u, kmax);
                for (i, s) in enumerate_k_subsets(u, kmax).enumerate() {
                    table.set(s, (i as i64 % 5) + 1);
                }
                let z = trimmed_superset_zeta(&Int64, &table).unwrap();
                for k in 0..=kmax {
                    for x in enumerate_k_subsets(u, k) {
                        let mut expect = 0i64;
                        for s in enumerate_k_subsets(u, kmax) {
                            if s.intersection(x) == x {
                                expect += table.get(s).copied().unwrap_or(0);
                            }
                        }
                        let got = z.get(x).copied().unwrap_or(0);
                        assert_eq!(got, expect, "u={u} kmax={kmax} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_addition_budget() {
        for u in 1..=10 {
            for kmax in 0..=u {
                let (alg, counter) = make_counting(Int64);
                let table = TrimmedTable::from_top_layer(
                    u,
                    kmax,
                    vec![1i64; binomial(u, kmax) as usize],
                );
                trimmed_superset_zeta(&alg, &table).unwrap();
                let cap = u as u64 * binsum(u, kmax);
                assert!(counter.adds() <= cap, "u={u} kmax={kmax}: {} > {cap}", counter.adds());
                assert_eq!(counter.muls(), 0);
            }
        }
    }

    #[test]
    fn pair_sum_examples() {
        // Two copies of the same singleton function on {1}: nothing is
        // disjoint, the signed sum cancels to zero.
        let f = ones_layer(1, 1);
        assert_eq!(disjoint_pair_sum(&Int64, &f, &f).unwrap(), 0);
        assert_eq!(direct_disjoint_sum(&Int64, &f, &f).unwrap(), 0);

        // Empty support annihilates.
        let empty: TrimmedTable<i64> = TrimmedTable::new_empty(3, 1);
        let g = ones_layer(3, 1);
        assert_eq!(disjoint_pair_sum(&Int64, &empty, &g).unwrap(), 0);

        // Ordered disjoint singleton pairs over {1,2,3}: 3 * 2.
        let h = ones_layer(3, 1);
        assert_eq!(disjoint_pair_sum(&Int64, &h, &h).unwrap(), 6);
        assert_eq!(direct_disjoint_sum(&Int64, &h, &h).unwrap(), 6);

        // Over {1,2}: the pairs ({1},{2}) and ({2},{1}).
        let two = ones_layer(2, 1);
        assert_eq!(disjoint_pair_sum(&Int64, &two, &two).unwrap(), 2);

        // Nothing is disjoint from the full set except functions on empty.
        let full = ones_layer(4, 4);
        let nonempty = ones_layer(4, 2);
        assert_eq!(disjoint_pair_sum(&Int64, &full, &nonempty).unwrap(), 0);
        assert_eq!(direct_disjoint_sum(&Int64, &full, &nonempty).unwrap(), 0);
    }

    #[test]
    fn mismatched_ground_sets_are_rejected() {
        let f = ones_layer(3, 1);
        let g = ones_layer(4, 1);
        assert!(matches!(
            disjoint_pair_sum(&Int64, &f, &g),
            Err(PermError::GroundSetMismatch { .. })
        ));
    }

    #[test]
    fn direct_sum_caps_the_ground_set() {
        let f = ones_layer(13, 1);
        assert!(matches!(
            direct_disjoint_sum(&Int64, &f, &f),
            Err(PermError::GroundSetTooLarge { .. })
        ));
    }
}
