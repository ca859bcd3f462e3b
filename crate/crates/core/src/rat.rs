//! Exact rational and complex-rational scalars.
//!
//! Everything algebraic in this crate is computed over `BigRational`; floats
//! appear only in the resonance tolerance path and in report approximations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical display form: `"0"`, `"2"`, `"-3/2"`.
pub fn rat_str(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"p"`, `"p/q"` or a plain decimal like `"0.5"` into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['+', '-']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) || int_digits.is_empty() {
            return None;
        }
        let joined: BigInt = format!("{int_digits}{frac_part}").parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let q = Rat::new(joined, scale);
        return Some(if negative { -q } else { q });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Exact rational approximation to f64, for report output only.
pub fn rat_to_f64(q: &Rat) -> f64 {
    let digits = 17usize;
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (q.numer() * &scale) / q.denom();
    let approx: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    approx / 1e17
}

/// Complex number with exact rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn zero() -> Self {
        CRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn from_rat(re: Rat) -> Self {
        CRat { re, im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CRat { re: &self.re * q, im: &self.im * q }
    }
}

impl Add for CRat {
    type Output = CRat;
    fn add(self, rhs: CRat) -> CRat {
        CRat { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for CRat {
    type Output = CRat;
    fn sub(self, rhs: CRat) -> CRat {
        CRat { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for CRat {
    type Output = CRat;
    fn mul(self, rhs: CRat) -> CRat {
        CRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rat_str(&self.re))
        } else if self.im.is_negative() {
            write!(f, "{}{}i", rat_str(&self.re), rat_str(&self.im))
        } else {
            write!(f, "{}+{}i", rat_str(&self.re), rat_str(&self.im))
        }
    }
}
