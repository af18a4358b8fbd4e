//! Subset combinatorics over word-sized ground sets.
//!
//! Ground sets are `{1, ..., u}` with `u <= 62`; element `i` lives in bit
//! `i - 1` of a single `u64`. With that layout, colexicographic order on
//! k-subsets (compare the largest differing element) coincides with numeric
//! order of the masks, so enumeration is Gosper's hack and ranking is a sum
//! of binomial coefficients.

/// Largest supported ground-set size. Keeps every mask in one word and every
/// binomial row sum within `u64`.
pub const MAX_GROUND_SET: usize = 62;

const TABLE_ROWS: usize = MAX_GROUND_SET + 1;

const fn build_binomial() -> [[u64; TABLE_ROWS]; TABLE_ROWS] {
    let mut c = [[0u64; TABLE_ROWS]; TABLE_ROWS];
    let mut q = 0;
    while q < TABLE_ROWS {
        c[q][0] = 1;
        let mut r = 1;
        while r <= q {
            c[q][r] = c[q - 1][r - 1] + c[q - 1][r];
            r += 1;
        }
        q += 1;
    }
    c
}

const fn build_binsum() -> [[u64; TABLE_ROWS]; TABLE_ROWS] {
    let c = build_binomial();
    let mut s = [[0u64; TABLE_ROWS]; TABLE_ROWS];
    let mut q = 0;
    while q < TABLE_ROWS {
        let mut r = 0;
        let mut acc = 0u64;
        while r < TABLE_ROWS {
            if r <= q {
                acc += c[q][r];
            }
            s[q][r] = acc;
            r += 1;
        }
        q += 1;
    }
    s
}

static BINOMIAL: [[u64; TABLE_ROWS]; TABLE_ROWS] = build_binomial();
static BINSUM: [[u64; TABLE_ROWS]; TABLE_ROWS] = build_binsum();

/// `C(q, r)`, exact; zero when `r > q`. Panics when `q > 62`.
pub fn binomial(q: usize, r: usize) -> u64 {
    assert!(q <= MAX_GROUND_SET, "binomial row {q} out of range");
    if r > q {
        0
    } else {
        BINOMIAL[q][r]
    }
}

/// `C(q,0) + C(q,1) + ... + C(q,r)`, the size of the cardinality-at-most-r
/// down-closure over a q-element ground set. `binsum(q, q) == 2^q`.
pub fn binsum(q: usize, r: usize) -> u64 {
    assert!(q <= MAX_GROUND_SET, "binsum row {q} out of range");
    BINSUM[q][r.min(q)]
}

/// A subset of `{1, ..., u}` stored as a bitmask; element `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Full set `{1, ..., u}`.
    pub fn full(u: usize) -> Self {
        assert!(u <= MAX_GROUND_SET);
        if u == 0 {
            SubsetMask(0)
        } else {
            SubsetMask(u64::MAX >> (64 - u))
        }
    }

    /// Builds a mask from 1-based elements.
    pub fn from_elements(elems: &[usize]) -> Self {
        let mut bits = 0u64;
        for &e in elems {
            assert!((1..=MAX_GROUND_SET).contains(&e), "element {e} out of range");
            bits |= 1 << (e - 1);
        }
        SubsetMask(bits)
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Membership of the 1-based element `e`.
    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND_SET).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn insert(self, e: usize) -> Self {
        assert!((1..=MAX_GROUND_SET).contains(&e));
        SubsetMask(self.0 | 1 << (e - 1))
    }

    pub fn remove(self, e: usize) -> Self {
        assert!((1..=MAX_GROUND_SET).contains(&e));
        SubsetMask(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p + 1)
            }
        })
    }

    /// Ascending 0-based bit positions.
    pub fn bit_positions(self) -> impl Iterator<Item = usize> {
        self.elements().map(|e| e - 1)
    }
}

impl std::fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All `C(u, k)` subsets of `{1..u}` with cardinality `k`, in colexicographic
/// order (equivalently, ascending mask value), via Gosper's hack.
pub fn enumerate_k_subsets(u: usize, k: usize) -> impl Iterator<Item = SubsetMask> {
    assert!(u <= MAX_GROUND_SET && k <= u, "k-subset range: k={k} u={u}");
    let first = if k == 0 { 0u64 } else { (1u64 << k) - 1 };
    let limit = 1u64 << u;
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let x = cur?;
        cur = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let next = (((r ^ x) >> 2) / c) | r;
            (next < limit).then_some(next)
        };
        Some(SubsetMask(x))
    })
}

/// Position of `s` in the colexicographic enumeration of its own layer:
/// the sum of `C(p_t, t+1)` over the ascending bit positions `p_t`.
pub fn colex_rank(s: SubsetMask, u: usize, k: usize) -> u64 {
    assert!(u <= MAX_GROUND_SET && k <= u);
    assert_eq!(s.card(), k, "cardinality mismatch: {s} is not a {k}-subset");
    debug_assert!(s.0 < (1u64 << u));
    s.bit_positions()
        .enumerate()
        .map(|(t, p)| binomial(p, t + 1))
        .sum()
}

/// Inverse of [`colex_rank`].
pub fn colex_unrank(rank: u64, u: usize, k: usize) -> SubsetMask {
    assert!(u <= MAX_GROUND_SET && k <= u);
    assert!(rank < binomial(u, k), "rank {rank} out of range for C({u},{k})");
    let mut r = rank;
    let mut bits = 0u64;
    let mut hi = u;
    for t in (1..=k).rev() {
        // largest position p < hi with C(p, t) <= r
        let mut p = hi - 1;
        while binomial(p, t) > r {
            p -= 1;
        }
        bits |= 1 << p;
        r -= binomial(p, t);
        hi = p;
    }
    SubsetMask(bits)
}

/// Rank of `x` inside the cardinality-at-most-`kmax` down-closure, layered by
/// cardinality and colexicographic within each layer.
pub fn downset_rank(x: SubsetMask, u: usize, kmax: usize) -> u64 {
    let k = x.card();
    assert!(k <= kmax, "|{x}| exceeds layer cap {kmax}");
    let below = if k == 0 { 0 } else { binsum(u, k - 1) };
    below + colex_rank(x, u, k)
}

/// Inverse of [`downset_rank`].
pub fn downset_unrank(rank: u64, u: usize, kmax: usize) -> SubsetMask {
    assert!(rank < binsum(u, kmax), "rank {rank} out of range");
    let mut k = 0;
    while binsum(u, k) <= rank {
        k += 1;
    }
    let below = if k == 0 { 0 } else { binsum(u, k - 1) };
    colex_unrank(rank - below, u, k)
}

/// One step of the binary-reflected Gray walk: the subset reached, and the
/// single element flipped to reach it (`None` for the initial empty set).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayStep {
    pub mask: SubsetMask,
    /// `(element, added)`; `added == false` means the element was removed.
    pub flip: Option<(usize, bool)>,
}

/// All `2^u` subsets starting from the empty set, consecutive masks differing
/// in exactly one element.
pub fn gray_sequence(u: usize) -> impl Iterator<Item = GrayStep> {
    assert!(u <= MAX_GROUND_SET);
    let count: u64 = 1u64 << u;
    let mut t = 0u64;
    std::iter::from_fn(move || {
        if t == count {
            return None;
        }
        let mask = SubsetMask(t ^ (t >> 1));
        let flip = if t == 0 {
            None
        } else {
            let bit = t.trailing_zeros() as usize;
            Some((bit + 1, mask.contains(bit + 1)))
        };
        t += 1;
        Some(GrayStep { mask, flip })
    })
}
