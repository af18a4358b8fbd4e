//! The shipped carrier instances.
//!
//! | selector   | carrier                          | structure               |
//! |------------|----------------------------------|-------------------------|
//! | `int64`    | checked 64-bit integers          | commutative ring        |
//! | `bigint`   | arbitrary-precision integers     | commutative ring        |
//! | `mod:<p>`  | integers modulo `p >= 2`         | commutative ring        |
//! | `tropical` | min-plus over integers with +inf | commutative semiring    |
//! | `mat2`     | 2x2 matrices over nonneg bigints | noncommutative semiring |
//! | `mat2z`    | 2x2 matrices over bigints        | noncommutative ring     |
//!
//! `int64` and `tropical` use checked arithmetic: silent wraparound would
//! corrupt oracle comparisons, so overflow panics with
//! [`ArithmeticOverflow`] and is surfaced as an error at the CLI boundary.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Algebra, ArithmeticOverflow};
use crate::rng::SplitMix64;

fn overflow(op: &'static str) -> ! {
    std::panic::panic_any(ArithmeticOverflow(op))
}

/// Checked 64-bit integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Int64;

impl Algebra for Int64 {
    type Elem = i64;

    fn name(&self) -> String {
        "int64".into()
    }

    fn zero(&self) -> i64 {
        0
    }

    fn one(&self) -> i64 {
        1
    }

    fn add(&self, a: &i64, b: &i64) -> i64 {
        a.checked_add(*b).unwrap_or_else(|| overflow("int64 add"))
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a.checked_mul(*b).unwrap_or_else(|| overflow("int64 mul"))
    }

    fn neg(&self, a: &i64) -> i64 {
        a.checked_neg().unwrap_or_else(|| overflow("int64 neg"))
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn has_negation(&self) -> bool {
        true
    }

    fn parse_elem(&self, text: &str) -> Result<i64, String> {
        text.parse().map_err(|e| format!("bad int64 `{text}`: {e}"))
    }

    fn render_elem(&self, a: &i64) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut SplitMix64) -> i64 {
        rng.below_inclusive(10) as i64
    }
}

/// Arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct BigIntAlg;

impl Algebra for BigIntAlg {
    type Elem = BigInt;

    fn name(&self) -> String {
        "bigint".into()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn has_negation(&self) -> bool {
        true
    }

    fn parse_elem(&self, text: &str) -> Result<BigInt, String> {
        text.parse().map_err(|e| format!("bad bigint `{text}`: {e}"))
    }

    fn render_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut SplitMix64) -> BigInt {
        BigInt::from(rng.below_inclusive(10))
    }
}

/// Integers modulo `p` for any `p >= 2`; primality is not required, only
/// ring structure is used. Elements are kept reduced into `[0, p)`.
#[derive(Clone, Copy, Debug)]
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Result<Self, String> {
        if p < 2 {
            return Err(format!("modulus must be at least 2, got {p}"));
        }
        Ok(ModP { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Algebra for ModP {
    type Elem = u64;

    fn name(&self) -> String {
        format!("mod:{}", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn has_negation(&self) -> bool {
        true
    }

    fn parse_elem(&self, text: &str) -> Result<u64, String> {
        let v: i128 = text.parse().map_err(|e| format!("bad residue `{text}`: {e}"))?;
        Ok(v.rem_euclid(self.p as i128) as u64)
    }

    fn render_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut SplitMix64) -> u64 {
        rng.below_inclusive(10) % self.p
    }
}

/// A min-plus value: a finite cost or the absorbing +infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Trop {
    Inf,
    Fin(i64),
}

/// Min-plus semiring: `add` is min with +infinity as identity, `mul` is
/// numeric addition with 0 as identity. No negation exists, so only the
/// dynamic-programming algorithms apply; the permanent of a cost matrix is
/// then the cheapest assignment of rows to distinct columns.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tropical;

impl Algebra for Tropical {
    type Elem = Trop;

    fn name(&self) -> String {
        "tropical".into()
    }

    fn zero(&self) -> Trop {
        Trop::Inf
    }

    fn one(&self) -> Trop {
        Trop::Fin(0)
    }

    fn add(&self, a: &Trop, b: &Trop) -> Trop {
        match (a, b) {
            (Trop::Inf, x) | (x, Trop::Inf) => *x,
            (Trop::Fin(x), Trop::Fin(y)) => Trop::Fin(*x.min(y)),
        }
    }

    fn mul(&self, a: &Trop, b: &Trop) -> Trop {
        match (a, b) {
            (Trop::Inf, _) | (_, Trop::Inf) => Trop::Inf,
            (Trop::Fin(x), Trop::Fin(y)) => {
                Trop::Fin(x.checked_add(*y).unwrap_or_else(|| overflow("tropical mul")))
            }
        }
    }

    fn neg(&self, _: &Trop) -> Trop {
        panic!("tropical semiring has no negation");
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn has_negation(&self) -> bool {
        false
    }

    fn parse_elem(&self, text: &str) -> Result<Trop, String> {
        if text == "inf" {
            Ok(Trop::Inf)
        } else {
            text.parse()
                .map(Trop::Fin)
                .map_err(|e| format!("bad tropical value `{text}`: {e}"))
        }
    }

    fn render_elem(&self, a: &Trop) -> String {
        match a {
            Trop::Inf => "inf".into(),
            Trop::Fin(v) => v.to_string(),
        }
    }

    fn sample(&self, rng: &mut SplitMix64) -> Trop {
        Trop::Fin(rng.below_inclusive(100) as i64)
    }
}

/// A dense 2x2 matrix `[[a, b], [c, d]]`, the carrier of the two
/// noncommutative instances. Text form is `a,b,c,d` row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }
}

macro_rules! mat2_algebra {
    ($outer:ident, $scalar:ty, $name:literal, $has_neg:literal, $negation:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Copy, Debug, Default)]
        pub struct $outer;

        impl Algebra for $outer {
            type Elem = Mat2<$scalar>;

            fn name(&self) -> String {
                $name.into()
            }

            fn zero(&self) -> Self::Elem {
                Mat2::new(
                    <$scalar>::zero(),
                    <$scalar>::zero(),
                    <$scalar>::zero(),
                    <$scalar>::zero(),
                )
            }

            fn one(&self) -> Self::Elem {
                Mat2::new(
                    <$scalar>::one(),
                    <$scalar>::zero(),
                    <$scalar>::zero(),
                    <$scalar>::one(),
                )
            }

            fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
                Mat2::new(&x.a + &y.a, &x.b + &y.b, &x.c + &y.c, &x.d + &y.d)
            }

            fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
                Mat2::new(
                    &x.a * &y.a + &x.b * &y.c,
                    &x.a * &y.b + &x.b * &y.d,
                    &x.c * &y.a + &x.d * &y.c,
                    &x.c * &y.b + &x.d * &y.d,
                )
            }

            fn neg(&self, x: &Self::Elem) -> Self::Elem {
                let negate: fn(&$scalar) -> $scalar = $negation;
                Mat2::new(negate(&x.a), negate(&x.b), negate(&x.c), negate(&x.d))
            }

            fn is_commutative(&self) -> bool {
                false
            }

            fn has_negation(&self) -> bool {
                $has_neg
            }

            fn parse_elem(&self, text: &str) -> Result<Self::Elem, String> {
                let parts: Vec<&str> = text.split(',').collect();
                if parts.len() != 4 {
                    return Err(format!("expected `a,b,c,d`, got `{text}`"));
                }
                let cell = |s: &str| -> Result<$scalar, String> {
                    s.parse().map_err(|e| format!("bad {} cell `{s}`: {e}", $name))
                };
                Ok(Mat2::new(cell(parts[0])?, cell(parts[1])?, cell(parts[2])?, cell(parts[3])?))
            }

            fn render_elem(&self, x: &Self::Elem) -> String {
                format!("{},{},{},{}", x.a, x.b, x.c, x.d)
            }

            fn sample(&self, rng: &mut SplitMix64) -> Self::Elem {
                let mut cell = || <$scalar>::from(rng.below_inclusive(3) as u32);
                let (a, b, c, d) = (cell(), cell(), cell(), cell());
                Mat2::new(a, b, c, d)
            }
        }
    };
}

mat2_algebra!(
    Mat2Nat,
    BigUint,
    "mat2",
    false,
    |_x| panic!("mat2 semiring has no negation"),
    "2x2 matrices over nonnegative arbitrary-precision integers: a \
     noncommutative semiring without negation."
);

mat2_algebra!(
    Mat2Int,
    BigInt,
    "mat2z",
    true,
    |x: &BigInt| -x,
    "2x2 matrices over arbitrary-precision integers: a noncommutative ring."
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int64_overflow_panics() {
        let caught = std::panic::catch_unwind(|| Int64.add(&i64::MAX, &1));
        let payload = caught.expect_err("overflow must not wrap");
        assert!(payload.downcast_ref::<ArithmeticOverflow>().is_some());
    }

    #[test]
    fn modp_reduces_and_negates() {
        let alg = ModP::new(7).unwrap();
        assert_eq!(alg.parse_elem("-1").unwrap(), 6);
        assert_eq!(alg.add(&5, &4), 2);
        assert_eq!(alg.mul(&5, &4), 6);
        assert_eq!(alg.add(&3, &alg.neg(&3)), 0);
        assert!(ModP::new(1).is_err());
    }

    #[test]
    fn tropical_identities_absorb() {
        let t = Tropical;
        let x = Trop::Fin(4);
        assert_eq!(t.add(&t.zero(), &x), x);
        assert_eq!(t.mul(&t.zero(), &x), Trop::Inf);
        assert_eq!(t.mul(&t.one(), &x), x);
        assert_eq!(t.add(&Trop::Fin(2), &Trop::Fin(9)), Trop::Fin(2));
        assert_eq!(t.parse_elem("inf").unwrap(), Trop::Inf);
        assert_eq!(t.render_elem(&Trop::Inf), "inf");
    }

    #[test]
    fn matrix_units_do_not_commute() {
        let alg = Mat2Nat;
        let e12 = alg.parse_elem("0,1,0,0").unwrap();
        let e21 = alg.parse_elem("0,0,1,0").unwrap();
        let e11 = alg.parse_elem("1,0,0,0").unwrap();
        let e22 = alg.parse_elem("0,0,0,1").unwrap();
        assert_eq!(alg.mul(&e12, &e21), e11);
        assert_eq!(alg.mul(&e21, &e12), e22);
        assert_ne!(alg.mul(&e12, &e21), alg.mul(&e21, &e12));
    }

    #[test]
    fn mat2_rejects_negative_cells() {
        assert!(Mat2Nat.parse_elem("0,-1,0,0").is_err());
        assert!(Mat2Int.parse_elem("0,-1,0,0").is_ok());
    }

    #[test]
    fn render_parse_roundtrip() {
        let alg = Mat2Int;
        let x = alg.parse_elem("1,-2,3,-4").unwrap();
        assert_eq!(alg.parse_elem(&alg.render_elem(&x)).unwrap(), x);
    }
}
