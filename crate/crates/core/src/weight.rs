use core::fmt;
use core::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::Zero;

/// A nonnegative weight, stored as the numerator over the denominator of the
/// forest it belongs to.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledWeight(BigUint);

impl ScaledWeight {
    pub fn new(numerator: impl Into<BigUint>) -> Self {
        ScaledWeight(numerator.into())
    }

    pub fn zero() -> Self {
        ScaledWeight(BigUint::zero())
    }

    pub fn numerator(&self) -> &BigUint {
        &self.0
    }

    pub fn into_numerator(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Same rational value over a denominator `factor` times larger.
    pub fn rescaled(&self, factor: u32) -> Self {
        ScaledWeight(&self.0 * factor)
    }
}

impl From<u64> for ScaledWeight {
    fn from(v: u64) -> Self {
        ScaledWeight(BigUint::from(v))
    }
}

impl From<BigUint> for ScaledWeight {
    fn from(v: BigUint) -> Self {
        ScaledWeight(v)
    }
}

impl Add for ScaledWeight {
    type Output = ScaledWeight;
    fn add(self, rhs: ScaledWeight) -> ScaledWeight {
        ScaledWeight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ScaledWeight> for &'a ScaledWeight {
    type Output = ScaledWeight;
    fn add(self, rhs: &'a ScaledWeight) -> ScaledWeight {
        ScaledWeight(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ScaledWeight> for ScaledWeight {
    fn add_assign(&mut self, rhs: &ScaledWeight) {
        self.0 += &rhs.0;
    }
}

impl core::iter::Sum for ScaledWeight {
    fn sum<I: Iterator<Item = ScaledWeight>>(iter: I) -> Self {
        iter.fold(ScaledWeight::zero(), |a, b| a + b)
    }
}

impl<'a> core::iter::Sum<&'a ScaledWeight> for ScaledWeight {
    fn sum<I: Iterator<Item = &'a ScaledWeight>>(iter: I) -> Self {
        let mut acc = ScaledWeight::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl fmt::Display for ScaledWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
