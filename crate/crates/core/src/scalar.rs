//! Scalar rings used by the exterior algebra.
//!
//! Everything outside `normal_form` is exact.  The default scalar is
//! [`Rat`] (arbitrary-precision rationals).  The quadratic extension
//! [`Sqrt3`] represents numbers `a + b*sqrt(3)` exactly; it exists so the
//! su(3) structure constants (which contain sqrt(3)/2 in the Gell-Mann
//! normalization) can be handled without leaving exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Field operations required of a coefficient scalar.
///
/// Implementations must be exact: `is_zero` decides equality with zero
/// precisely, which the simplicity and relation checks rely on.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Embed an exact rational.
    fn from_rat(r: &Rat) -> Self;
    /// Approximate magnitude, used only for reporting.
    fn abs_f64(&self) -> f64;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn abs_f64(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
}

/// Build a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rint(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parse a rational from a decimal-integer or `num/den` string.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|e| format!("bad denominator {d:?}: {e}"))?,
        None => One::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Format a rational as the CLI/file syntax (`-2/3`, `5`).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Element `a + b*sqrt(3)` of the real quadratic field Q(sqrt 3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sqrt3 {
    pub a: Rat,
    pub b: Rat,
}

impl Sqrt3 {
    pub fn new(a: Rat, b: Rat) -> Self {
        Sqrt3 { a, b }
    }
    pub fn rational(a: Rat) -> Self {
        Sqrt3 {
            a,
            b: Scalar::zero(),
        }
    }
    /// `b * sqrt(3)`.
    pub fn sqrt3_times(b: Rat) -> Self {
        Sqrt3 {
            a: Scalar::zero(),
            b,
        }
    }
    /// Field norm `a^2 - 3 b^2`; zero only at zero since 3 is not a
    /// rational square.
    fn norm(&self) -> Rat {
        self.a.clone() * self.a.clone() - rint(3) * self.b.clone() * self.b.clone()
    }
}

impl fmt::Display for Sqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", format_rat(&self.a))
        } else if Zero::is_zero(&self.a) {
            write!(f, "{}*sqrt3", format_rat(&self.b))
        } else {
            write!(f, "{}+{}*sqrt3", format_rat(&self.a), format_rat(&self.b))
        }
    }
}

impl Add for Sqrt3 {
    type Output = Sqrt3;
    fn add(self, rhs: Sqrt3) -> Sqrt3 {
        Sqrt3::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Sqrt3 {
    type Output = Sqrt3;
    fn sub(self, rhs: Sqrt3) -> Sqrt3 {
        Sqrt3::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Sqrt3 {
    type Output = Sqrt3;
    fn mul(self, rhs: Sqrt3) -> Sqrt3 {
        // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s,  s^2 = 3.
        let a = self.a.clone() * rhs.a.clone() + rint(3) * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        Sqrt3::new(a, b)
    }
}

impl Neg for Sqrt3 {
    type Output = Sqrt3;
    fn neg(self) -> Sqrt3 {
        Sqrt3::new(-self.a, -self.b)
    }
}

impl Div for Sqrt3 {
    type Output = Sqrt3;
    fn div(self, rhs: Sqrt3) -> Sqrt3 {
        // Multiply by the conjugate: 1/(c + d s) = (c - d s)/(c^2 - 3 d^2).
        let n = rhs.norm();
        assert!(!Zero::is_zero(&n), "division by zero in Q(sqrt 3)");
        let conj = Sqrt3::new(rhs.a.clone() / n.clone(), -(rhs.b.clone() / n));
        self * conj
    }
}

impl Scalar for Sqrt3 {
    fn zero() -> Self {
        Sqrt3::rational(Scalar::zero())
    }
    fn one() -> Self {
        Sqrt3::rational(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn from_rat(r: &Rat) -> Self {
        Sqrt3::rational(r.clone())
    }
    fn abs_f64(&self) -> f64 {
        (self.a.to_f64().unwrap_or(f64::INFINITY) + 3f64.sqrt() * self.b.to_f64().unwrap_or(0.0))
            .abs()
    }
}

/// Continued-fraction rationalization of a float, with bounded denominator.
///
/// Returns the best convergent whose denominator does not exceed
/// `max_den`.  Used only by the float normal-form bridge; every snapped
/// value is re-verified exactly by the caller.
pub fn rationalize(x: f64, max_den: u64) -> Rat {
    if !x.is_finite() {
        return Scalar::zero();
    }
    let neg = x < 0.0;
    let mut x = x.abs();
    // Convergents p/q of the continued fraction of |x|.
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::from(1), BigInt::from(0), BigInt::from(x.floor() as i64), BigInt::from(1));
    x -= x.floor();
    for _ in 0..64 {
        if x.abs() < 1e-15 {
            break;
        }
        x = 1.0 / x;
        let a = x.floor();
        if a >= 1e18 {
            break;
        }
        x -= a;
        let a = BigInt::from(a as i64);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > BigInt::from(max_den) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let r = Rat::new(p1, q1);
    if neg {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format_round_trip() {
        for s in ["0", "5", "-2/3", "7/2", "-11"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
    }

    #[test]
    fn sqrt3_field_axioms_spot_checks() {
        let s = Sqrt3::sqrt3_times(rint(1));
        assert_eq!(s.clone() * s.clone(), Sqrt3::rational(rint(3)));
        let x = Sqrt3::new(rat(1, 2), rat(-3, 4));
        let y = x.clone() / x.clone();
        assert_eq!(y, Scalar::one());
        let z = (x.clone() * Sqrt3::new(rint(2), rint(5))) / Sqrt3::new(rint(2), rint(5));
        assert_eq!(z, x);
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(0.5, 1_000_000), rat(1, 2));
        assert_eq!(rationalize(-2.0 / 3.0, 1_000_000), rat(-2, 3));
        assert_eq!(rationalize(3.0, 1_000_000), rint(3));
        assert_eq!(rationalize(0.0, 1_000_000), rint(0));
        let x = 355.0 / 113.0;
        assert_eq!(rationalize(x, 1_000_000), rat(355, 113));
    }
}
