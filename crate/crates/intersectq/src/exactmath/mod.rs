//! Exact scalar and matrix arithmetic: rationals extended by one square root,
//! dense exact linear algebra, integer HNF, and the canonical scalar string
//! format used by lattice files and reports.
//!
//! Scalar strings: "p", "p/q", "r/s*w", "p/q+r/s*w", "p/q-r/s*w" where w is
//! sqrt(field_d). Decimal literals like "0.35" parse as exact rationals.
//! Formatting then parsing is the identity.

mod int;
mod mat;
mod product;
mod quad;

pub use int::IntMat;
pub use mat::{
    dot, norm2, row_times_mat, vec_add, vec_neg, vec_scale, vec_sub, FieldMat,
};
pub use product::ExactProduct;
pub use quad::{isqrt_floor, rat, rat_int, rat_sqrt_exact, QuadElem, Rat};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_root_term(b: &Rat) -> String {
    format!("{}*w", fmt_rat(b))
}

/// Canonical exact string for a scalar.
pub fn fmt_scalar(x: &QuadElem) -> String {
    let a = x.rational_part();
    let b = x.root_coeff();
    if b.is_zero() {
        return fmt_rat(a);
    }
    if a.is_zero() {
        return fmt_root_term(b);
    }
    if b.is_negative() {
        format!("{}-{}", fmt_rat(a), fmt_root_term(&-b))
    } else {
        format!("{}+{}", fmt_rat(a), fmt_root_term(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "scalar parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// Parse "p/q", a decimal literal, or an integer as an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt =
            num.trim().parse().map_err(|_| ParseError(format!("bad numerator in '{s}'")))?;
        let d: BigInt =
            den.trim().parse().map_err(|_| ParseError(format!("bad denominator in '{s}'")))?;
        if d.is_zero() {
            return Err(ParseError(format!("zero denominator in '{s}'")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| ParseError(format!("bad decimal '{s}'")))?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError(format!("bad decimal '{s}'")));
        }
        let f: BigInt = frac_part.parse().unwrap();
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = i.abs() * &scale + f;
        let signed = if neg { -mag } else { mag };
        return Ok(Rat::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| ParseError(format!("bad integer '{s}'")))?;
    Ok(Rat::from_integer(n))
}

/// Parse a canonical scalar string in the field Q(sqrt d).
pub fn parse_scalar(s: &str, d: u64) -> Result<QuadElem, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError("empty scalar".into()));
    }
    // Split an "a+b*w" / "a-b*w" composite after the leading sign.
    let bytes = s.as_bytes();
    let mut split = None;
    for i in 1..bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            split = Some(i);
            break;
        }
    }
    let (rat_str, root_str) = match split {
        Some(i) if s.ends_with('w') => (&s[..i], &s[i..]),
        _ => {
            if s.ends_with('w') {
                ("", s)
            } else {
                (s, "")
            }
        }
    };
    let a = if rat_str.is_empty() { Rat::zero() } else { parse_rat(rat_str)? };
    let b = if root_str.is_empty() {
        Rat::zero()
    } else {
        let t = root_str.strip_suffix('w').unwrap();
        let t = t.strip_suffix('*').unwrap_or(t);
        let t = t.trim();
        match t {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            other => {
                let other = other.strip_prefix('+').unwrap_or(other);
                parse_rat(other)?
            }
        }
    };
    if !b.is_zero() && d <= 1 {
        return Err(ParseError(format!("'{s}' has a w term but field_d is {d}")));
    }
    Ok(QuadElem::new(a, b, d.max(1)))
}
