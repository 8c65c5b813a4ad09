//! Scalar backends: exact complex rationals and complex double precision.
//!
//! Every computation declares its backend up front through the generic
//! parameter and never mixes backends. The exact backend supports decidable
//! equality and exact rank computations; the float backend uses fixed
//! deterministic summation orders so results are reproducible bit-for-bit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complex scalar usable as the coefficient field for Fock vectors,
/// matrices and invariant estimates.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True for the exact rational backend.
    const EXACT: bool;

    /// Short backend tag used in reports ("exact" or "float").
    const TAG: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// num/den as a real scalar; den must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact conversion from machine floats (every finite f64 is a dyadic
    /// rational); `None` on NaN/infinity.
    fn from_f64(re: f64, im: f64) -> Option<Self>;
    /// The imaginary unit.
    fn i() -> Self;

    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// |z|^2 = z * conj(z), always real and non-negative.
    fn abs_sq(&self) -> Self {
        self.clone() * self.conj()
    }
    /// Field division; `None` when dividing by zero.
    fn div(&self, rhs: &Self) -> Option<Self>;
    /// Principal square root. The exact backend returns `Some` only for
    /// non-negative reals whose square root is again rational.
    fn sqrt(&self) -> Option<Self>;

    /// Approximate value for reporting and float-tolerance comparisons.
    fn to_f64(&self) -> (f64, f64);

    fn re_f64(&self) -> f64 {
        self.to_f64().0
    }

    /// Compare two scalars as real numbers; `None` if either has a
    /// non-negligible imaginary part.
    fn cmp_real(&self, rhs: &Self) -> Option<Ordering>;

    fn is_real(&self) -> bool;

    fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Exact complex rational scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Exact {
    pub re: BigRational,
    pub im: BigRational,
}

impl Exact {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Exact { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Exact { re, im: BigRational::zero() }
    }

    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        Exact::real(BigRational::new(num, den))
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

impl Add for Exact {
    type Output = Exact;
    fn add(self, rhs: Exact) -> Exact {
        Exact { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Exact {
    type Output = Exact;
    fn sub(self, rhs: Exact) -> Exact {
        Exact { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for Exact {
    type Output = Exact;
    fn mul(self, rhs: Exact) -> Exact {
        Exact {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact { re: -self.re, im: -self.im }
    }
}

impl Scalar for Exact {
    const EXACT: bool = true;
    const TAG: &'static str = "exact";

    fn zero() -> Self {
        Exact::real(BigRational::zero())
    }

    fn one() -> Self {
        Exact::real(BigRational::one())
    }

    fn from_int(v: i64) -> Self {
        Exact::real(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(Exact {
            re: BigRational::from_float(re)?,
            im: if im == 0.0 {
                BigRational::zero()
            } else {
                BigRational::from_float(im)?
            },
        })
    }

    fn i() -> Self {
        Exact { re: BigRational::zero(), im: BigRational::one() }
    }

    fn conj(&self) -> Self {
        Exact { re: self.re.clone(), im: -self.im.clone() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        let d = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        if d.is_zero() {
            return None;
        }
        let num = self.clone() * rhs.conj();
        Some(Exact { re: num.re / &d, im: num.im / &d })
    }

    fn sqrt(&self) -> Option<Self> {
        if !self.im.is_zero() {
            return None;
        }
        rational_sqrt(&self.re).map(Exact::real)
    }

    fn to_f64(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn cmp_real(&self, rhs: &Self) -> Option<Ordering> {
        if self.im.is_zero() && rhs.im.is_zero() {
            self.re.partial_cmp(&rhs.re)
        } else {
            None
        }
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Complex double-precision scalar.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct F64 {
    pub re: f64,
    pub im: f64,
}

impl F64 {
    pub fn new(re: f64, im: f64) -> Self {
        F64 { re, im }
    }

    pub fn real(re: f64) -> Self {
        F64 { re, im: 0.0 }
    }
}

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

impl Add for F64 {
    type Output = F64;
    fn add(self, rhs: F64) -> F64 {
        F64 { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for F64 {
    type Output = F64;
    fn sub(self, rhs: F64) -> F64 {
        F64 { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for F64 {
    type Output = F64;
    fn mul(self, rhs: F64) -> F64 {
        F64 {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for F64 {
    type Output = F64;
    fn neg(self) -> F64 {
        F64 { re: -self.re, im: -self.im }
    }
}

/// Tolerance used when the float backend decides "is this real/zero".
const REAL_EPS: f64 = 1e-12;

impl Scalar for F64 {
    const EXACT: bool = false;
    const TAG: &'static str = "float";

    fn zero() -> Self {
        F64::real(0.0)
    }

    fn one() -> Self {
        F64::real(1.0)
    }

    fn from_int(v: i64) -> Self {
        F64::real(v as f64)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        F64::real(num as f64 / den as f64)
    }

    fn from_f64(re: f64, im: f64) -> Option<Self> {
        if re.is_finite() && im.is_finite() {
            Some(F64 { re, im })
        } else {
            None
        }
    }

    fn i() -> Self {
        F64 { re: 0.0, im: 1.0 }
    }

    fn conj(&self) -> Self {
        F64 { re: self.re, im: -self.im }
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        let d = rhs.re * rhs.re + rhs.im * rhs.im;
        if d == 0.0 {
            return None;
        }
        let num = *self * rhs.conj();
        Some(F64 { re: num.re / d, im: num.im / d })
    }

    fn sqrt(&self) -> Option<Self> {
        let c = num_complex::Complex64::new(self.re, self.im).sqrt();
        Some(F64 { re: c.re, im: c.im })
    }

    fn to_f64(&self) -> (f64, f64) {
        (self.re, self.im)
    }

    fn cmp_real(&self, rhs: &Self) -> Option<Ordering> {
        if self.im.abs() <= REAL_EPS && rhs.im.abs() <= REAL_EPS {
            self.re.partial_cmp(&rhs.re)
        } else {
            None
        }
    }

    fn is_real(&self) -> bool {
        self.im.abs() <= REAL_EPS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_is_exact() {
        let third = Exact::from_ratio(1, 3);
        let sum = third.clone() + third.clone() + third.clone();
        assert_eq!(sum, Exact::one());
    }

    #[test]
    fn exact_sqrt_only_on_rational_squares() {
        assert_eq!(
            Exact::from_ratio(9, 4).sqrt(),
            Some(Exact::from_ratio(3, 2))
        );
        assert_eq!(Exact::from_ratio(1, 2).sqrt(), None);
        assert_eq!(Exact::from_int(-1).sqrt(), None);
    }

    #[test]
    fn complex_division_round_trips() {
        let z = Exact::from_int(3) + Exact::i() * Exact::from_int(4);
        let w = Exact::from_int(1) - Exact::i() * Exact::from_int(2);
        let q = z.div(&w).unwrap();
        assert_eq!(q * w, z);
    }

    #[test]
    fn float_abs_sq_is_real() {
        let z = F64::new(0.3, -0.4);
        let a = z.abs_sq();
        assert!(a.is_real());
        assert!((a.re - 0.25).abs() < 1e-15);
    }
}
