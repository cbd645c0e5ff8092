//! Exact nonnegative integers and binomial coefficients.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision count. Subtraction saturates at zero only in
/// [`BigCount::saturating_sub`]; plain `-` panics on underflow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn pow2(e: usize) -> Self {
        BigCount(BigUint::one() << e)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// `log2` of the value, accurate even beyond the `f64` range.
    pub fn log2(&self) -> f64 {
        let bits = self.0.bits();
        if bits <= 1000 {
            return self.to_f64().log2();
        }
        let shift = bits - 64;
        (&self.0 >> shift).to_f64().unwrap().log2() + shift as f64
    }

    /// `self / other` when the division is exact.
    pub fn exact_div(&self, other: &BigCount) -> Option<BigCount> {
        if other.is_zero() || !(&self.0 % &other.0).is_zero() {
            return None;
        }
        Some(BigCount(&self.0 / &other.0))
    }

    pub fn saturating_sub(&self, other: &BigCount) -> BigCount {
        if self.0 >= other.0 {
            BigCount(&self.0 - &other.0)
        } else {
            BigCount::zero()
        }
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for BigCount {
            fn from(v: $t) -> Self {
                BigCount(BigUint::from(v))
            }
        }
    )*};
}
from_prim!(u8, u32, u64, u128, usize);

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl AddAssign for BigCount {
    fn add_assign(&mut self, rhs: BigCount) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl Sub for BigCount {
    type Output = BigCount;
    fn sub(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 - rhs.0)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> BigCount {
        iter.fold(BigCount::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a BigCount> for BigCount {
    fn sum<I: Iterator<Item = &'a BigCount>>(iter: I) -> BigCount {
        iter.fold(BigCount::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

/// `C(n, k)`, zero when `k < 0` or `k > n >= 0`.
///
/// `C(n, 0) = 1` for every `n`, negative included. Several closed forms
/// reach `C(-1, 0)` at their boundary and rely on this.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if k < 0 {
        return BigCount::zero();
    }
    if k == 0 {
        return BigCount::one();
    }
    if n < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigCount(acc)
}

/// `C(n, k)` in machine arithmetic for hot loops; `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        let g = gcd(acc, (i + 1) as u128);
        let num = (n - i) as u128 / ((i + 1) as u128 / g);
        acc = (acc / g).checked_mul(num)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 3), BigCount::from(10u32));
        assert_eq!(binomial(4, 7), BigCount::zero());
        assert_eq!(binomial(9, 5), BigCount::from(126u32));
        assert_eq!(binomial(0, 0), BigCount::one());
        assert_eq!(binomial(3, -1), BigCount::zero());
        assert_eq!(binomial(-1, 0), BigCount::one());
        assert_eq!(binomial(-1, 2), BigCount::zero());
    }

    #[test]
    fn matches_pascal_triangle() {
        let mut row = vec![BigCount::one()];
        for n in 1..=80i64 {
            let mut next = vec![BigCount::one()];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigCount::one());
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v, "C({n},{k})");
            }
            row = next;
        }
    }

    #[test]
    fn machine_binomial_agrees() {
        for n in 0..=120u64 {
            for k in 0..=n + 1 {
                let exact = binomial(n as i64, k as i64).to_u128().unwrap();
                assert_eq!(binomial_u128(n, k), Some(exact));
            }
        }
        assert_eq!(binomial_u128(200, 100), None);
    }

    #[test]
    fn log2_of_large_counts() {
        let big = BigCount::pow2(3000) * BigCount::from(3u32);
        assert!((big.log2() - (3000.0 + 3f64.log2())).abs() < 1e-9);
        assert_eq!(BigCount::from(8u32).log2(), 3.0);
    }
}
