//! Scalars of the form a + b*sqrt(d) with exact rational a, b.
//!
//! One square-free d per analysis context; d = 1 means plain rationals.
//! Canonical form: fractions reduced, and b == 0 forces d == 1, so structural
//! equality is value equality and derived Hash agrees with Eq.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rat,
    b: Rat,
    d: u64,
}

impl QuadElem {
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        assert!(d >= 1, "field discriminant must be positive");
        if d == 1 {
            // sqrt(1) collapses into the rational part.
            QuadElem { a: a + b, b: Rat::zero(), d: 1 }
        } else if b.is_zero() {
            QuadElem { a, b, d: 1 }
        } else {
            QuadElem { a, b, d }
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadElem { a, b: Rat::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rat(rat(n, d))
    }

    /// sqrt(d) itself, scaled by b.
    pub fn root_part(b: Rat, d: u64) -> Self {
        assert!(d > 1);
        QuadElem::new(Rat::zero(), b, d)
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn root_coeff(&self) -> &Rat {
        &self.b
    }

    pub fn field_d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rational value if b == 0.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    fn unified_d(&self, other: &Self) -> u64 {
        match (self.d, other.d) {
            (1, d) | (d, 1) => d,
            (d1, d2) => {
                assert_eq!(d1, d2, "mixed quadratic fields: sqrt({d1}) vs sqrt({d2})");
                d1
            }
        }
    }

    /// Exact sign: -1, 0, or +1.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 against b^2 d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rat::from_integer(BigInt::from(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if self.b.is_zero() {
            return Self::from_rat(self.a.recip());
        }
        // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
        let denom = &self.a * &self.a - &self.b * &self.b * Rat::from_integer(BigInt::from(self.d));
        QuadElem::new(&self.a / &denom, -(&self.b / &denom), self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let mut v = self.a.to_f64().unwrap_or_else(|| rat_to_f64_slow(&self.a));
        if !self.b.is_zero() {
            let bf = self.b.to_f64().unwrap_or_else(|| rat_to_f64_slow(&self.b));
            v += bf * (self.d as f64).sqrt();
        }
        v
    }

    /// Exact floor.
    pub fn floor_int(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // Bracket b*sqrt(d) between rationals within 2^-64, then confirm the
        // boundary integer exactly if the bracket straddles one.
        let (lo, hi) = root_term_bounds(&self.b, self.d);
        let vlo = (&self.a + lo).floor().to_integer();
        let vhi = (&self.a + hi).floor().to_integer();
        if vlo == vhi {
            return vlo;
        }
        // The bracket crosses vhi; compare exactly against it.
        let k = QuadElem::from_rat(Rat::from_integer(vhi.clone()));
        if (self - &k).sign() >= 0 {
            vhi
        } else {
            vlo
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -(-self).floor_int()
    }

    /// Nearest integer; exact halves round toward negative infinity.
    pub fn round_half_down(&self) -> BigInt {
        (-(Self::from_frac(1, 2) - self)).ceil_int()
    }

    /// Exact square root if it exists in the same field, preferring the
    /// rational root and falling back to r*sqrt(d).
    pub fn sqrt_exact(&self) -> Option<QuadElem> {
        let a = self.as_rat()?;
        match a.cmp(&Rat::zero()) {
            Ordering::Less => return None,
            Ordering::Equal => return Some(QuadElem::zero()),
            Ordering::Greater => {}
        }
        if let Some(r) = rat_sqrt_exact(a) {
            return Some(QuadElem::from_rat(r));
        }
        None
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_to_f64_slow(r: &Rat) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::MAX);
    let d = r.denom().to_f64().unwrap_or(f64::MAX);
    n / d
}

/// Floor of the integer square root; input must be nonnegative.
pub fn isqrt_floor(x: &BigInt) -> BigInt {
    assert!(!x.is_negative(), "isqrt of negative");
    x.sqrt()
}

/// Exact rational square root if the value is a perfect square.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = isqrt_floor(r.numer());
    let sd = isqrt_floor(r.denom());
    if &sn * &sn == *r.numer() && &sd * &sd == *r.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Rational bracket (lo, hi) with lo <= b*sqrt(d) <= hi and hi - lo <= 2^-64.
fn root_term_bounds(b: &Rat, d: u64) -> (Rat, Rat) {
    // sqrt(p/q) in [isqrt(p*q*M^2)/(q*M), (isqrt(p*q*M^2)+1)/(q*M)] for the
    // magnitude, with M = 2^96 swamping the 2^-64 target.
    let t = b * b * Rat::from_integer(BigInt::from(d));
    let m: BigInt = BigInt::one() << 96;
    let scaled = t.numer() * t.denom() * &m * &m;
    let s = isqrt_floor(&scaled);
    let denom = t.denom() * &m;
    let lo_mag = Rat::new(s.clone(), denom.clone());
    let hi_mag = Rat::new(s + 1, denom);
    if b.is_negative() {
        (-hi_mag, -lo_mag)
    } else {
        (lo_mag, hi_mag)
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exactmath::fmt_scalar(self))
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exactmath::fmt_scalar(self))
    }
}

impl PartialOrd for QuadElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Add<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        let d = self.unified_d(rhs);
        QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        let d = self.unified_d(rhs);
        QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let d = self.unified_d(rhs);
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadElem::from_rat(&self.a * &rhs.a);
        }
        let a = &self.a * &rhs.a
            + &self.b * &rhs.b * Rat::from_integer(BigInt::from(d));
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadElem::new(a, b, d)
    }
}

impl Div<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn div(self, rhs: &QuadElem) -> QuadElem {
        if self.b.is_zero() && rhs.b.is_zero() {
            assert!(!rhs.a.is_zero(), "division by zero");
            return QuadElem::from_rat(&self.a / &rhs.a);
        }
        self * &rhs.inv()
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -&self.a, b: -&self.b, d: self.d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt3() -> QuadElem {
        QuadElem::root_part(Rat::one(), 3)
    }

    #[test]
    fn sqrt3_squares_to_3() {
        let s = sqrt3();
        assert_eq!(s.square(), QuadElem::from_int(3));
    }

    #[test]
    fn sign_agrees_near_sqrt3() {
        // 362/209 is barely above sqrt(3): 362^2 = 131044, 3*209^2 = 131043.
        let above = QuadElem::from_frac(362, 209) - sqrt3();
        assert_eq!(above.sign(), 1);
        let below = QuadElem::from_frac(1351, 780) - sqrt3(); // 1351^2=1825201, 3*780^2=1825200
        assert_eq!(below.sign(), 1);
        let under = QuadElem::from_frac(265, 153) - sqrt3(); // 265^2=70225, 3*153^2=70227
        assert_eq!(under.sign(), -1);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QuadElem::new(rat(5, 7), rat(-3, 11), 3);
        assert_eq!(&x * &x.inv(), QuadElem::one());
    }

    #[test]
    fn mixed_d_with_rational_is_fine() {
        let x = QuadElem::from_frac(1, 2);
        let y = QuadElem::root_part(Rat::one(), 3);
        assert_eq!((&x * &y).field_d(), 3);
    }

    #[test]
    fn floor_exact_cases() {
        assert_eq!(sqrt3().floor_int(), BigInt::from(1));
        assert_eq!((-sqrt3()).floor_int(), BigInt::from(-2));
        let x = QuadElem::from_int(2) * sqrt3(); // 3.46...
        assert_eq!(x.floor_int(), BigInt::from(3));
        assert_eq!(QuadElem::from_frac(7, 2).floor_int(), BigInt::from(3));
        assert_eq!(QuadElem::from_frac(-7, 2).floor_int(), BigInt::from(-4));
        assert_eq!(QuadElem::from_int(4).floor_int(), BigInt::from(4));
    }

    #[test]
    fn round_half_down_cases() {
        assert_eq!(QuadElem::from_frac(1, 2).round_half_down(), BigInt::from(0));
        assert_eq!(QuadElem::from_frac(3, 2).round_half_down(), BigInt::from(1));
        assert_eq!(QuadElem::from_frac(-1, 2).round_half_down(), BigInt::from(-1));
        assert_eq!(QuadElem::from_frac(2, 5).round_half_down(), BigInt::from(0));
        assert_eq!(QuadElem::from_frac(3, 5).round_half_down(), BigInt::from(1));
        assert_eq!(QuadElem::from_frac(-2, 5).round_half_down(), BigInt::from(0));
    }

    #[test]
    fn ordering_is_by_value() {
        let a = QuadElem::from_frac(26, 15); // 1.7333 > sqrt3
        assert!(a > sqrt3());
        assert!(sqrt3() > QuadElem::from_frac(17, 10));
        let halves = QuadElem::new(rat(1, 2), rat(1, 2), 3); // ~1.366
        assert!(halves < sqrt3());
        assert!(halves > QuadElem::one());
    }
}
