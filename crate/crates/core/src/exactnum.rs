//! Exact arithmetic: the integer scalar abstraction, rationals and the field Q(√2).
//!
//! Every Binet-style expression in the crate is evaluated here symbolically.
//! A [`QuadSurd`] is stored as two canonical rationals `a + b√2`; since √2 is
//! irrational that representation is unique, so structural equality is value
//! equality.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer type usable as the scalar of every generator in the crate.
///
/// Implemented for the fixed-width signed integers and for [`BigInt`]. The
/// fixed-width instances overflow quickly (neo balcobalancing terms pass
/// `i64::MAX` around index 13) and are meant for fast scans and tests on
/// small ranges.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Number of significant bits of `|self|`; zero for zero.
    fn bit_len(&self) -> u64;

    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("small constant fits every scalar")
    }
}

macro_rules! fixed_width_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn bit_len(&self) -> u64 {
                u64::from(<$t>::BITS - self.unsigned_abs().leading_zeros())
            }
        }
    )*};
}

fixed_width_scalar!(i32, i64, i128);

impl Scalar for BigInt {
    fn bit_len(&self) -> u64 {
        self.bits()
    }
}

/// Divides `num` by `den`, failing if there is a remainder.
pub fn exact_div<T: Scalar>(num: &T, den: &T) -> Result<T> {
    if den.is_zero() {
        return Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: den.to_string(),
        })
    }
}

/// Floor of the square root, by integer Newton iteration.
///
/// The seed `2^ceil(bits/2)` is never below the root, so the iterates
/// decrease monotonically until they stop at `floor(√n)`.
pub fn isqrt<T: Scalar>(n: &T) -> Result<T> {
    if n.is_negative() {
        return Err(Error::domain("isqrt", format!("negative argument {n}")));
    }
    if n.is_zero() {
        return Ok(T::zero());
    }
    let two = T::from_small(2);
    let half_bits = n.bit_len().div_ceil(2);
    let mut x = num_traits::pow(two.clone(), half_bits as usize);
    loop {
        let y = (x.clone() + n.clone() / x.clone()) / two.clone();
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

/// The nonnegative square root of `n` if `n` is a perfect square.
pub fn as_perfect_square<T: Scalar>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n).ok()?;
    if r.clone() * r.clone() == *n {
        Some(r)
    } else {
        None
    }
}

/// An exact element `a + b√2` of Q(√2).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadSurd<T: Scalar> {
    a: Ratio<T>,
    b: Ratio<T>,
}

impl<T: Scalar> QuadSurd<T> {
    pub fn new(a: Ratio<T>, b: Ratio<T>) -> Self {
        QuadSurd { a, b }
    }

    /// `a + b√2` with integer coefficients.
    pub fn integral(a: T, b: T) -> Self {
        QuadSurd::new(Ratio::from_integer(a), Ratio::from_integer(b))
    }

    pub fn from_ratio(a: Ratio<T>) -> Self {
        QuadSurd::new(a, Ratio::zero())
    }

    pub fn from_int(a: T) -> Self {
        QuadSurd::integral(a, T::zero())
    }

    pub fn zero() -> Self {
        QuadSurd::from_int(T::zero())
    }

    pub fn one() -> Self {
        QuadSurd::from_int(T::one())
    }

    /// α = 1 + √2.
    pub fn alpha() -> Self {
        QuadSurd::integral(T::one(), T::one())
    }

    /// β = 1 − √2.
    pub fn beta() -> Self {
        QuadSurd::integral(T::one(), -T::one())
    }

    pub fn sqrt2() -> Self {
        QuadSurd::integral(T::zero(), T::one())
    }

    /// Rational part.
    pub fn rational_part(&self) -> &Ratio<T> {
        &self.a
    }

    /// Coefficient of √2.
    pub fn surd_part(&self) -> &Ratio<T> {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a − b√2`.
    pub fn conj(&self) -> Self {
        QuadSurd::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Ratio<T> {
        let two = Ratio::from_integer(T::from_small(2));
        self.a.clone() * self.a.clone() - two * self.b.clone() * self.b.clone()
    }

    pub fn scale(&self, k: &Ratio<T>) -> Self {
        QuadSurd::new(self.a.clone() * k.clone(), self.b.clone() * k.clone())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Ratio::from_integer(T::from_small(k)))
    }

    /// Divides by √2: `(a + b√2)/√2 = b + (a/2)√2`.
    pub fn div_sqrt2(&self) -> Self {
        let two = Ratio::from_integer(T::from_small(2));
        QuadSurd::new(self.b.clone(), self.a.clone() / two)
    }

    /// Both coefficients are integers, i.e. the value lies in Z[√2].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    fn is_unit(&self) -> bool {
        self.is_integral() && self.norm().abs().is_one()
    }

    /// Inverse of a unit of Z[√2] (norm ±1). General inversion is not offered.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let n = self.norm();
        Ok(self.conj().scale(&n.recip()))
    }

    /// `self^k` by repeated squaring; negative `k` only for units.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 {
            self.unit_inverse()?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = QuadSurd::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Collapses to an integer when `b = 0` and `a` has denominator 1.
    pub fn to_integer(&self) -> Result<T> {
        if self.b.is_zero() && self.a.is_integer() {
            Ok(self.a.to_integer())
        } else {
            Err(Error::NotAnInteger(self.to_string()))
        }
    }
}

impl<T: Scalar> Debug for QuadSurd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadSurd({self})")
    }
}

impl<T: Scalar> Display for QuadSurd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√2", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}√2", self.a, self.b)
        }
    }
}

impl<T: Scalar> Add for &QuadSurd<T> {
    type Output = QuadSurd<T>;
    fn add(self, rhs: Self) -> QuadSurd<T> {
        QuadSurd::new(
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
        )
    }
}

impl<T: Scalar> Sub for &QuadSurd<T> {
    type Output = QuadSurd<T>;
    fn sub(self, rhs: Self) -> QuadSurd<T> {
        QuadSurd::new(
            self.a.clone() - rhs.a.clone(),
            self.b.clone() - rhs.b.clone(),
        )
    }
}

impl<T: Scalar> Mul for &QuadSurd<T> {
    type Output = QuadSurd<T>;
    fn mul(self, rhs: Self) -> QuadSurd<T> {
        if self.is_integral() && rhs.is_integral() {
            let (a1, b1) = (self.a.numer(), self.b.numer());
            let (a2, b2) = (rhs.a.numer(), rhs.b.numer());
            let a = a1.clone() * a2.clone() + T::from_small(2) * b1.clone() * b2.clone();
            let b = a1.clone() * b2.clone() + a2.clone() * b1.clone();
            return QuadSurd::integral(a, b);
        }
        let two = Ratio::from_integer(T::from_small(2));
        let a = self.a.clone() * rhs.a.clone() + two * self.b.clone() * rhs.b.clone();
        let b = self.a.clone() * rhs.b.clone() + rhs.a.clone() * self.b.clone();
        QuadSurd::new(a, b)
    }
}

impl<T: Scalar> Neg for &QuadSurd<T> {
    type Output = QuadSurd<T>;
    fn neg(self) -> QuadSurd<T> {
        QuadSurd::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for QuadSurd<T> {
            type Output = QuadSurd<T>;
            fn $m(self, rhs: Self) -> QuadSurd<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for QuadSurd<T> {
    type Output = QuadSurd<T>;
    fn neg(self) -> QuadSurd<T> {
        -&self
    }
}

/// `α^k + β^k`, always an integer surd.
pub fn alpha_beta_sum<T: Scalar>(k: i64) -> Result<QuadSurd<T>> {
    Ok(QuadSurd::alpha().pow(k)? + QuadSurd::beta().pow(k)?)
}

/// `α^k − β^k`, always an integer multiple of √2.
pub fn alpha_beta_diff<T: Scalar>(k: i64) -> Result<QuadSurd<T>> {
    Ok(QuadSurd::alpha().pow(k)? - QuadSurd::beta().pow(k)?)
}
