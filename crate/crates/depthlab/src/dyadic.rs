//! Exact nonnegative dyadic rationals `num / 2^exp`.
//!
//! Martingale fairness is checked with exact equality, so all betting
//! arithmetic runs on these instead of floats. Values are kept normalized
//! (odd numerator, or zero with exponent zero) so structural equality is
//! value equality.

use num_bigint::BigUint;
use std::cmp::Ordering;
use std::fmt;

use crate::bits::BitString;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigUint,
    exp: u32,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { num: BigUint::ZERO, exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigUint::from(1u32), exp: 0 }
    }

    pub fn from_u64(v: u64) -> Self {
        Dyadic { num: BigUint::from(v), exp: 0 }
    }

    /// `num / 2^exp`, normalizing.
    pub fn from_parts(num: BigUint, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_ratio(num: u64, exp: u32) -> Self {
        Self::from_parts(BigUint::from(num), exp)
    }

    /// The fraction `0.b₁b₂…` named by a bit string.
    pub fn from_fraction_bits(bits: &BitString) -> Self {
        let mut num = BigUint::ZERO;
        for b in bits.iter() {
            num = num << 1 | BigUint::from(b as u8);
        }
        Self::from_parts(num, bits.len() as u32)
    }

    fn normalize(&mut self) {
        if self.num == BigUint::ZERO {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp as u64) as u32;
        if tz > 0 {
            self.num >>= tz;
            self.exp -= tz;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == BigUint::ZERO
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as u64;
        let b = &other.num << (exp - other.exp) as u64;
        Dyadic::from_parts(a + b, exp)
    }

    /// Saturating subtraction (zero when `other` exceeds `self`).
    pub fn sub_sat(&self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as u64;
        let b = &other.num << (exp - other.exp) as u64;
        if b >= a {
            Dyadic::zero()
        } else {
            Dyadic::from_parts(a - b, exp)
        }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::from_parts(&self.num * &other.num, self.exp + other.exp)
    }

    /// Multiply by 2^k (k may be negative).
    pub fn scale_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        if k >= 0 {
            Dyadic::from_parts(&self.num << k as u64, self.exp)
        } else {
            Dyadic::from_parts(self.num.clone(), self.exp + (-k) as u32)
        }
    }

    pub fn double(&self) -> Dyadic {
        self.scale_pow2(1)
    }

    pub fn half(&self) -> Dyadic {
        self.scale_pow2(-1)
    }

    /// ⌊log₂ value⌋, or `None` for zero.
    pub fn floor_log2(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.bits() as i64 - 1 - self.exp as i64)
    }

    /// ⌈log₂ value⌉, or `None` for zero.
    pub fn ceil_log2(&self) -> Option<i64> {
        let f = self.floor_log2()?;
        if self.num.count_ones() == 1 {
            Some(f) // exact power of two
        } else {
            Some(f + 1)
        }
    }

    pub fn ge_one(&self) -> bool {
        self >= &Dyadic::one()
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as u64;
        let b = &other.num << (exp - other.exp) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_arithmetic() {
        let half = Dyadic::from_ratio(1, 1);
        let quarter = Dyadic::from_ratio(1, 2);
        assert_eq!(half.add(&quarter), Dyadic::from_ratio(3, 2));
        assert_eq!(half.mul(&half), quarter);
        assert_eq!(half.double(), Dyadic::one());
        assert!(quarter < half);
        assert_eq!(Dyadic::from_ratio(6, 1), Dyadic::from_u64(3));
    }

    #[test]
    fn logs() {
        assert_eq!(Dyadic::one().floor_log2(), Some(0));
        assert_eq!(Dyadic::from_u64(5).floor_log2(), Some(2));
        assert_eq!(Dyadic::from_u64(5).ceil_log2(), Some(3));
        assert_eq!(Dyadic::from_ratio(1, 3).floor_log2(), Some(-3));
        assert_eq!(Dyadic::from_ratio(3, 2).floor_log2(), Some(-1));
        assert_eq!(Dyadic::zero().floor_log2(), None);
    }

    proptest! {
        #[test]
        fn prop_add_commutes(a in 0u64..1000, ea in 0u32..12, b in 0u64..1000, eb in 0u32..12) {
            let x = Dyadic::from_ratio(a, ea);
            let y = Dyadic::from_ratio(b, eb);
            prop_assert_eq!(x.add(&y), y.add(&x));
        }

        #[test]
        fn prop_halving_doubles_back(a in 0u64..10_000, e in 0u32..20) {
            let x = Dyadic::from_ratio(a, e);
            prop_assert_eq!(x.half().double(), x);
        }
    }
}
