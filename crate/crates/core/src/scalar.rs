//! Coefficient rings for Schubert cycle sums.
//!
//! Everything in [`crate::schubert`] is written against [`Coefficient`]; the
//! crate root fixes the arbitrary-precision instance used by the engine.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Num, ToPrimitive};

/// Exact commutative coefficient ring usable in a [`crate::CycleSum`].
///
/// Primitive integers satisfy this too, but they overflow silently in
/// release builds once products reach Catalan-sized coefficients; the
/// engine only ever instantiates [`num_bigint::BigInt`].
pub trait Coefficient:
    Num + Clone + PartialOrd + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Embed a multiplicity coming out of Pieri's rule.
    fn from_count(count: u64) -> Self {
        let mut acc = Self::zero();
        let mut unit = Self::one();
        let mut rem = count;
        // binary expansion so that types without `From<u64>` still work
        while rem > 0 {
            if rem & 1 == 1 {
                acc = acc + unit.clone();
            }
            unit = unit.clone() + unit;
            rem >>= 1;
        }
        acc
    }
}

impl<T> Coefficient for T where
    T: Num + Clone + PartialOrd + Debug + Display + FromStr + Send + Sync + 'static
{
}

/// Narrow an exact coefficient to `i64`, reporting overflow instead of wrapping.
pub fn to_i64<C: Coefficient + ToPrimitive>(value: &C) -> crate::Result<i64> {
    value
        .to_i64()
        .ok_or_else(|| crate::ScrollError::Overflow(value.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn from_count_matches_native_conversion() {
        for k in [0u64, 1, 2, 3, 7, 64, 1000, 123_456] {
            assert_eq!(<i64 as Coefficient>::from_count(k), k as i64);
            assert_eq!(<BigInt as Coefficient>::from_count(k), BigInt::from(k));
        }
    }

    #[test]
    fn narrowing_reports_overflow() {
        let big: BigInt = BigInt::from(i64::MAX) + 1;
        assert!(to_i64(&big).is_err());
        assert_eq!(to_i64(&BigInt::from(-5)).unwrap(), -5);
    }
}
