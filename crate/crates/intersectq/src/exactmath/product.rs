//! Products of a field scalar with rational powers of small primes.
//!
//! Figures of merit take the shape c * p1^(e1) * p2^(e2) with c in Q(sqrt d)
//! and rational exponents. The canonical form keeps every exponent in [0,1):
//! integer parts fold into the coefficient, and a half-integer power of the
//! field discriminant folds into the sqrt part of the coefficient.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

use super::{fmt_rat, rat, rat_int, QuadElem, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactProduct {
    coeff: QuadElem,
    factors: BTreeMap<u64, Rat>,
}

impl ExactProduct {
    pub fn from_coeff(coeff: QuadElem) -> ExactProduct {
        ExactProduct { coeff, factors: BTreeMap::new() }
    }

    pub fn coeff(&self) -> &QuadElem {
        &self.coeff
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.factors.iter().map(|(p, e)| (*p, e))
    }

    pub fn mul_coeff(&mut self, c: &QuadElem) {
        self.coeff = &self.coeff * c;
    }

    /// Multiply by base^exp for a positive rational base.
    pub fn mul_pow(&mut self, base: &Rat, exp: &Rat) {
        assert!(base.is_positive(), "power base must be positive");
        if exp.is_zero() {
            return;
        }
        for (p, k) in factorize(base.numer()) {
            let e = self.factors.entry(p).or_insert_with(Rat::zero);
            *e += exp * Rat::from_integer(BigInt::from(k));
        }
        for (p, k) in factorize(base.denom()) {
            let e = self.factors.entry(p).or_insert_with(Rat::zero);
            *e -= exp * Rat::from_integer(BigInt::from(k));
        }
    }

    /// Canonical form: exponents in [0,1), integer parts folded into the
    /// coefficient, and p^(1/2) folded into the sqrt part when p = d.
    pub fn normalized(mut self, d: u64) -> ExactProduct {
        let mut coeff = self.coeff;
        let mut out: BTreeMap<u64, Rat> = BTreeMap::new();
        let half = rat(1, 2);
        for (p, e) in std::mem::take(&mut self.factors) {
            if e.is_zero() {
                continue;
            }
            let f = e.floor();
            let mut rem = e - &f;
            let fi = f.to_integer().to_i64().expect("exponent in range");
            if fi != 0 {
                let base = Rat::from_integer(BigInt::from(p));
                coeff = coeff * QuadElem::from_rat(base.pow(fi as i32));
            }
            if rem == half && p == d && d > 1 {
                coeff = coeff * QuadElem::root_part(rat_int(1), d);
                rem = Rat::zero();
            }
            if !rem.is_zero() {
                out.insert(p, rem);
            }
        }
        ExactProduct { coeff, factors: out }
    }

    pub fn value(&self) -> f64 {
        let mut v = self.coeff.to_f64();
        for (p, e) in &self.factors {
            v *= (*p as f64).powf(rat_to_f64(e));
        }
        v
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

impl std::fmt::Display for ExactProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::exactmath::fmt_scalar(&self.coeff))?;
        for (p, e) in &self.factors {
            write!(f, " * {}^({})", p, fmt_rat(e))?;
        }
        Ok(())
    }
}

fn factorize(n: &BigInt) -> Vec<(u64, u32)> {
    let mut m = n
        .abs()
        .to_u64()
        .expect("factor base fits in 64 bits");
    assert!(m > 0, "cannot factorize zero");
    let mut out = Vec::new();
    let mut push = |p: u64, k: u32| {
        if k > 0 {
            out.push((p, k));
        }
    };
    let mut k = 0;
    while m % 2 == 0 {
        m /= 2;
        k += 1;
    }
    push(2, k);
    let mut p = 3u64;
    while p * p <= m {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        push(p, k);
        p += 2;
    }
    if m > 1 {
        push(m, 1);
    }
    out
}
