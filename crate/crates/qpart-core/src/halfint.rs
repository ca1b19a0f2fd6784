use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Element of `ℤ + ½`, stored as its odd double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Result<Self> {
        if twice.rem_euclid(2) != 1 {
            return Err(Error::InvalidParameter(format!("{twice}/2 is not a half-integer")));
        }
        Ok(Self { twice })
    }

    /// `n + ½`.
    #[inline]
    pub const fn above(n: i64) -> Self {
        Self { twice: 2 * n + 1 }
    }

    /// `n − ½`.
    #[inline]
    pub const fn below(n: i64) -> Self {
        Self { twice: 2 * n - 1 }
    }

    #[inline]
    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// `r + ½`, an integer.
    #[inline]
    pub const fn ceil(self) -> i64 {
        (self.twice + 1) / 2
    }

    /// `r − ½`, an integer.
    #[inline]
    pub const fn floor(self) -> i64 {
        (self.twice - 1).div_euclid(2)
    }

    /// Nearest half-integer to `x`; ties go up.
    pub fn nearest<T: Real>(x: T) -> Self {
        let b = (x - T::half()).floor().to_i64().expect("finite coordinate");
        let lo = Self::above(b);
        let hi = Self::above(b + 1);
        if (x - lo.value::<T>()).abs() <= (hi.value::<T>() - x).abs() {
            lo
        } else {
            hi
        }
    }

    #[inline]
    pub fn value<T: Real>(self) -> T {
        T::of_i64(self.twice) * T::half()
    }

    /// Half-integers `lo, lo+1, …, hi` (inclusive).
    pub fn range(lo: Self, hi: Self) -> impl Iterator<Item = Self> {
        (lo.twice..=hi.twice).step_by(2).map(|twice| Self { twice })
    }
}

impl Ord for HalfInteger {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl PartialOrd for HalfInteger {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<i64> for HalfInteger {
    type Output = Self;
    fn add(self, n: i64) -> Self {
        Self { twice: self.twice + 2 * n }
    }
}

impl Sub<i64> for HalfInteger {
    type Output = Self;
    fn sub(self, n: i64) -> Self {
        Self { twice: self.twice - 2 * n }
    }
}

/// Integer distance `r − s`.
impl Sub for HalfInteger {
    type Output = i64;
    fn sub(self, other: Self) -> i64 {
        (self.twice - other.twice) / 2
    }
}

impl Neg for HalfInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self { twice: -self.twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice)
    }
}
