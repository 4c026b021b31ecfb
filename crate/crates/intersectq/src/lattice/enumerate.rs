//! Exact short-vector enumeration.
//!
//! The positive definite Gram form is factored as G = U D U^T with U unit
//! upper triangular, so the squared norm of integer coefficients y splits as
//! sum_k D_k (y_k + c_k)^2 where c_k depends only on y_0..y_{k-1}. Assigning
//! coordinates left to right therefore yields candidates in lexicographic
//! order, and each level has an exact integer interval computed by comparing
//! squares (no floating point decides anything; floats only seed a guess
//! that is then verified exactly).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;

use super::Lattice;
use crate::exactmath::{QuadElem, Rat};

fn int_to_quad(v: &BigInt) -> QuadElem {
    QuadElem::from_rat(Rat::from_integer(v.clone()))
}

/// Gram factorization prepared for ordered enumeration.
pub struct QForm {
    n: usize,
    /// ucol[k][i] = U_{i,k} for i < k (column above the unit diagonal).
    ucol: Vec<Vec<QuadElem>>,
    diag: Vec<QuadElem>,
}

impl QForm {
    pub fn new(lat: &Lattice) -> QForm {
        QForm::from_gram(lat.gram())
    }

    pub fn from_gram(gram: &crate::exactmath::FieldMat) -> QForm {
        let n = gram.nrows();
        // LDL^T of the index-reversed Gram, then map back: reversing both
        // axes turns unit lower triangular into unit upper triangular.
        let g = |i: usize, j: usize| gram.at(n - 1 - i, n - 1 - j).clone();
        let mut l = vec![vec![QuadElem::zero(); n]; n];
        let mut d = vec![QuadElem::zero(); n];
        for k in 0..n {
            let mut dk = g(k, k);
            for j in 0..k {
                dk = dk - &(&l[k][j] * &l[k][j]) * &d[j];
            }
            assert!(dk.sign() > 0, "Gram matrix must be positive definite");
            let lk = l[k].clone();
            for (i, li) in l.iter_mut().enumerate().skip(k + 1) {
                let mut s = g(i, k);
                for j in 0..k {
                    s = s - &(&li[j] * &lk[j]) * &d[j];
                }
                li[k] = &s / &dk;
            }
            d[k] = dk;
        }
        let mut ucol = Vec::with_capacity(n);
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            let mut col = Vec::with_capacity(k);
            for i in 0..k {
                col.push(l[n - 1 - i][n - 1 - k].clone());
            }
            ucol.push(col);
            diag.push(d[n - 1 - k].clone());
        }
        QForm { n, ucol, diag }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn diag(&self, k: usize) -> &QuadElem {
        &self.diag[k]
    }

    /// Offset c_k determined by the assigned prefix y_0..y_{k-1}.
    pub fn offset(&self, k: usize, y: &[BigInt]) -> QuadElem {
        let mut c = QuadElem::zero();
        for (i, u) in self.ucol[k].iter().enumerate() {
            if !y[i].is_zero() {
                c = c + int_to_quad(&y[i]) * u;
            }
        }
        c
    }

    /// Same offset for a prefix that is already scalar (used by quantizers,
    /// where the deviation from a fractional target is enumerated).
    pub fn offset_scalar(&self, k: usize, y: &[QuadElem]) -> QuadElem {
        let mut c = QuadElem::zero();
        for (i, u) in self.ucol[k].iter().enumerate() {
            c = c + &y[i] * u;
        }
        c
    }
}

/// t <= sqrt(rad2), decided exactly (rad2 >= 0).
fn leq_sqrt(t: &QuadElem, rad2: &QuadElem) -> bool {
    t.sign() <= 0 || &t.square() <= rad2
}

/// floor(x + sqrt(rad2)) for rad2 >= 0: float guess, exact verification.
pub(crate) fn floor_plus_sqrt(x: &QuadElem, rad2: &QuadElem) -> BigInt {
    debug_assert!(rad2.sign() >= 0);
    let guess = (x.to_f64() + rad2.to_f64().max(0.0).sqrt()).floor();
    let mut k = BigInt::from(guess as i64);
    // k <= x + sqrt(rad2)  <=>  k - x <= sqrt(rad2)
    while !leq_sqrt(&(int_to_quad(&k) - x), rad2) {
        k -= 1;
    }
    loop {
        let next = &k + 1;
        if leq_sqrt(&(int_to_quad(&next) - x), rad2) {
            k = next;
        } else {
            return k;
        }
    }
}

/// ceil(x - sqrt(rad2)) for rad2 >= 0.
pub(crate) fn ceil_minus_sqrt(x: &QuadElem, rad2: &QuadElem) -> BigInt {
    // ceil(x - s) = -floor(-x + s)
    -floor_plus_sqrt(&-x.clone(), rad2)
}

struct Walk<'a> {
    form: &'a QForm,
    cap: QuadElem,
    parity: Option<&'a [u8]>,
}

impl<'a> Walk<'a> {
    fn run(&self, visit: &mut impl FnMut(&[BigInt], &QuadElem)) {
        if self.cap.sign() < 0 {
            return;
        }
        let mut y: Vec<BigInt> = Vec::with_capacity(self.form.n);
        self.rec(0, &QuadElem::zero(), &mut y, visit);
    }

    fn rec(
        &self,
        k: usize,
        partial: &QuadElem,
        y: &mut Vec<BigInt>,
        visit: &mut impl FnMut(&[BigInt], &QuadElem),
    ) {
        if k == self.form.n {
            visit(y, partial);
            return;
        }
        let c = self.form.offset(k, y);
        let rem = &self.cap - partial;
        let rad2 = &rem / self.form.diag(k);
        let neg_c = -c.clone();
        let mut v = ceil_minus_sqrt(&neg_c, &rad2);
        let hi = floor_plus_sqrt(&neg_c, &rad2);
        let step;
        if let Some(par) = self.parity {
            let want = BigInt::from(par[k]);
            if v.mod_floor(&BigInt::from(2)) != want.mod_floor(&BigInt::from(2)) {
                v += 1;
            }
            step = BigInt::from(2);
        } else {
            step = BigInt::from(1);
        }
        while v <= hi {
            let t = int_to_quad(&v) + &c;
            let new_partial = partial + &(&t.square() * self.form.diag(k));
            debug_assert!(new_partial <= self.cap);
            y.push(v.clone());
            self.rec(k + 1, &new_partial, y, visit);
            y.pop();
            v += &step;
        }
    }
}

/// All coefficient vectors with squared norm <= cap, lexicographically
/// ordered, each paired with its exact squared norm.
pub fn enumerate_up_to(
    lat: &Lattice,
    cap: &QuadElem,
    include_zero: bool,
) -> Vec<(Vec<BigInt>, QuadElem)> {
    let form = QForm::new(lat);
    let mut out = Vec::new();
    let walk = Walk { form: &form, cap: cap.clone(), parity: None };
    walk.run(&mut |y, norm| {
        if include_zero || !norm.is_zero() {
            out.push((y.to_vec(), norm.clone()));
        }
    });
    out
}

/// Squared minimum norm over nonzero vectors.
pub fn min_norm(lat: &Lattice) -> QuadElem {
    let cap = (0..lat.dim())
        .map(|i| lat.gram().at(i, i).clone())
        .min()
        .expect("nonempty diagonal");
    enumerate_up_to(lat, &cap, false)
        .into_iter()
        .map(|(_, n)| n)
        .min()
        .expect("a basis vector attains the diagonal bound")
}

/// Coefficient vectors of exact squared norm m, lexicographic order.
pub fn vectors_of_norm(lat: &Lattice, m: &QuadElem) -> Vec<Vec<BigInt>> {
    enumerate_up_to(lat, m, false)
        .into_iter()
        .filter(|(_, n)| n == m)
        .map(|(y, _)| y)
        .collect()
}

/// Norm histogram (norm, count) for 0 < norm <= cap, ascending.
pub fn theta_prefix(lat: &Lattice, cap: &QuadElem) -> Vec<(QuadElem, u64)> {
    let mut hist: BTreeMap<QuadElem, u64> = BTreeMap::new();
    for (_, n) in enumerate_up_to(lat, cap, false) {
        *hist.entry(n).or_insert(0) += 1;
    }
    hist.into_iter().collect()
}

/// Minimum squared norm over the coset (parity + 2Z^n) of coefficients,
/// together with every coefficient vector attaining it (lex order).
pub fn coset_min_vectors(lat: &Lattice, parity: &[u8]) -> (QuadElem, Vec<Vec<BigInt>>) {
    assert_eq!(parity.len(), lat.dim());
    if parity.iter().all(|&p| p == 0) {
        return (QuadElem::zero(), vec![vec![BigInt::zero(); lat.dim()]]);
    }
    let form = QForm::new(lat);
    let rep: Vec<BigInt> = parity.iter().map(|&p| BigInt::from(p)).collect();
    let mut best = norm_of_coeffs(lat, &rep);
    // Pass 1: tighten the bound to the exact coset minimum.
    shrink_min(&form, parity, 0, &QuadElem::zero(), &mut Vec::new(), &mut best);
    // Pass 2: collect every achiever at the exact bound.
    let mut out = Vec::new();
    let walk = Walk { form: &form, cap: best.clone(), parity: Some(parity) };
    walk.run(&mut |y, norm| {
        if *norm == best {
            out.push(y.to_vec());
        }
    });
    (best, out)
}

fn shrink_min(
    form: &QForm,
    parity: &[u8],
    k: usize,
    partial: &QuadElem,
    y: &mut Vec<BigInt>,
    best: &mut QuadElem,
) {
    if k == form.n {
        if partial < best {
            *best = partial.clone();
        }
        return;
    }
    let c = form.offset(k, y);
    let rem = &*best - partial;
    if rem.sign() < 0 {
        return;
    }
    let rad2 = &rem / form.diag(k);
    let neg_c = -c.clone();
    let mut v = ceil_minus_sqrt(&neg_c, &rad2);
    let hi = floor_plus_sqrt(&neg_c, &rad2);
    let want = BigInt::from(parity[k]);
    if v.mod_floor(&BigInt::from(2)) != want.mod_floor(&BigInt::from(2)) {
        v += 1;
    }
    while v <= hi {
        let t = int_to_quad(&v) + &c;
        let new_partial = partial + &(&t.square() * form.diag(k));
        if new_partial <= *best {
            y.push(v.clone());
            shrink_min(form, parity, k + 1, &new_partial, y, best);
            y.pop();
        }
        v += BigInt::from(2);
    }
}

pub fn norm_of_coeffs(lat: &Lattice, y: &[BigInt]) -> QuadElem {
    let g = lat.gram();
    let n = lat.dim();
    let mut total = QuadElem::zero();
    for i in 0..n {
        if y[i].is_zero() {
            continue;
        }
        let mut row = QuadElem::zero();
        for j in 0..n {
            if !y[j].is_zero() {
                row = row + g.at(i, j) * &int_to_quad(&y[j]);
            }
        }
        total = total + int_to_quad(&y[i]) * row;
    }
    total
}

#[derive(Debug, Clone)]
pub struct CosetProfileEntry {
    pub parity: Vec<u8>,
    pub min_norm: QuadElem,
    pub vectors: Vec<Vec<BigInt>>,
}

/// Minimum-vector profile of every coset of 2L in L (2^n entries, parity in
/// binary counting order).
pub fn coset_min_profile(lat: &Lattice) -> Vec<CosetProfileEntry> {
    let n = lat.dim();
    assert!(n <= 16, "coset profile enumerates 2^n cosets");
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1u32 << n) {
        let parity: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        let (min_norm, vectors) = coset_min_vectors(lat, &parity);
        out.push(CosetProfileEntry { parity, min_norm, vectors });
    }
    out
}

/// Vectors relevant to the origin cell of the nearest-point partition: the
/// +-pairs that are the unique minima of their coset of 2L. Ambient
/// coordinates, ordered by coefficient vector.
pub fn relevant_vectors(lat: &Lattice) -> Vec<Vec<QuadElem>> {
    let mut coeffs: Vec<Vec<BigInt>> = Vec::new();
    for entry in coset_min_profile(lat) {
        if entry.parity.iter().all(|&p| p == 0) {
            continue;
        }
        if entry.vectors.len() == 2 {
            let neg: Vec<BigInt> = entry.vectors[1].iter().map(|v| -v).collect();
            assert_eq!(entry.vectors[0], neg, "coset minima pair must be opposite");
            coeffs.extend(entry.vectors);
        }
    }
    coeffs.sort();
    coeffs.iter().map(|y| lat.point(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, FieldMat};

    fn hex() -> Lattice {
        let z = QuadElem::zero;
        Lattice::from_gen(
            FieldMat::from_rows(vec![
                vec![QuadElem::root_part(rat(1, 1), 3), QuadElem::one()],
                vec![z(), QuadElem::from_int(2)],
            ]),
            3,
        )
        .unwrap()
    }

    fn d4() -> Lattice {
        Lattice::from_int_rows(&[
            &[1, -1, 0, 0],
            &[0, 1, -1, 0],
            &[0, 0, 1, -1],
            &[0, 0, 1, 1],
        ])
    }

    fn e8() -> Lattice {
        // D8 (doubled first axis plus consecutive differences) and the
        // all-halves glue vector.
        let mut rows: Vec<Vec<QuadElem>> = Vec::new();
        let mut first = vec![QuadElem::zero(); 8];
        first[0] = QuadElem::from_int(2);
        rows.push(first);
        for i in 0..6 {
            let mut r = vec![QuadElem::zero(); 8];
            r[i] = -QuadElem::one();
            r[i + 1] = QuadElem::one();
            rows.push(r);
        }
        rows.push(vec![QuadElem::from_frac(1, 2); 8]);
        Lattice::from_gen(FieldMat::from_rows(rows), 1).unwrap()
    }

    #[test]
    fn hexagonal_minimum_and_kissing() {
        let l = hex();
        assert_eq!(min_norm(&l), QuadElem::from_int(4));
        assert_eq!(vectors_of_norm(&l, &QuadElem::from_int(4)).len(), 6);
        let theta = theta_prefix(&l, &QuadElem::from_int(16));
        assert_eq!(
            theta,
            vec![
                (QuadElem::from_int(4), 6),
                (QuadElem::from_int(12), 6),
                (QuadElem::from_int(16), 6),
            ]
        );
    }

    #[test]
    fn d4_minimum_vectors() {
        let l = d4();
        assert_eq!(min_norm(&l), QuadElem::from_int(2));
        assert_eq!(vectors_of_norm(&l, &QuadElem::from_int(2)).len(), 24);
        assert_eq!(vectors_of_norm(&l, &QuadElem::from_int(4)).len(), 24);
    }

    #[test]
    fn e8_minimum_vectors_and_cosets() {
        let l = e8();
        assert_eq!(l.det_abs(), &QuadElem::one());
        assert_eq!(min_norm(&l), QuadElem::from_int(2));
        assert_eq!(vectors_of_norm(&l, &QuadElem::from_int(2)).len(), 240);
        // Coset minima split 2^8 = 1 + 240/2 + 2160/16.
        let profile = coset_min_profile(&l);
        assert_eq!(profile.len(), 256);
        let pairs = profile.iter().filter(|e| e.vectors.len() == 2).count();
        let sixteens = profile.iter().filter(|e| e.vectors.len() == 16).count();
        assert_eq!(pairs, 120);
        assert_eq!(sixteens, 135);
        for e in &profile {
            if e.vectors.len() == 16 {
                assert_eq!(e.min_norm, QuadElem::from_int(4));
            }
        }
    }

    #[test]
    fn relevant_vectors_counts() {
        // Square lattice: 4 facet vectors (the corners fail the pair test).
        let z2 = Lattice::from_int_rows(&[&[1, 0], &[0, 1]]);
        assert_eq!(relevant_vectors(&z2).len(), 4);
        // Hexagonal: all 6 minima are relevant.
        assert_eq!(relevant_vectors(&hex()).len(), 6);
        // D4: 24.
        let rel = relevant_vectors(&d4());
        assert_eq!(rel.len(), 24);
        // Closed under negation.
        let set: std::collections::BTreeSet<Vec<QuadElem>> = rel.iter().cloned().collect();
        for v in &rel {
            let neg: Vec<QuadElem> = v.iter().map(|x| -x.clone()).collect();
            assert!(set.contains(&neg));
        }
    }

    #[test]
    fn enumeration_is_lex_sorted_and_complete() {
        let l = hex();
        let all = enumerate_up_to(&l, &QuadElem::from_int(20), true);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(all, sorted);
        // Independent boxed check against direct Gram evaluation.
        let mut brute = Vec::new();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let y = vec![BigInt::from(a), BigInt::from(b)];
                let n = norm_of_coeffs(&l, &y);
                if n <= QuadElem::from_int(20) {
                    brute.push((y, n));
                }
            }
        }
        brute.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(all, brute);
    }

    #[test]
    fn exact_sqrt_bounds() {
        // floor(0 + sqrt(3)) = 1, ceil(0 - sqrt(3)) = -1
        let three = QuadElem::from_int(3);
        assert_eq!(floor_plus_sqrt(&QuadElem::zero(), &three), BigInt::from(1));
        assert_eq!(ceil_minus_sqrt(&QuadElem::zero(), &three), BigInt::from(-1));
        // Exact boundary: floor(1 + sqrt(4)) = 3.
        let four = QuadElem::from_int(4);
        assert_eq!(floor_plus_sqrt(&QuadElem::one(), &four), BigInt::from(3));
        // Irrational center: floor(sqrt(3) + sqrt(1/4)) = floor(2.23) = 2.
        let s3 = QuadElem::root_part(rat(1, 1), 3);
        assert_eq!(
            floor_plus_sqrt(&s3, &QuadElem::from_frac(1, 4)),
            BigInt::from(2)
        );
    }
}
