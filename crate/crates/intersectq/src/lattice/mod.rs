//! Full-rank lattices in R^n with exact generator matrices over Q(sqrt d).
//!
//! Rows of the generator span the lattice. Sums stack generators and reduce
//! by HNF over a denominator-cleared integer flattening (each coordinate
//! a + b*sqrt(d) becomes two integer columns). Intersections go through the
//! duality identity: the intersection of lattices is the dual of the sum of
//! their duals. Lattice equality is HNF equality on a common denominator,
//! so it is exact and independent of the generators chosen.

mod enumerate;
mod frames;

pub use enumerate::{
    coset_min_profile, coset_min_vectors, enumerate_up_to, min_norm, relevant_vectors,
    theta_prefix, vectors_of_norm, CosetProfileEntry, QForm,
};
pub(crate) use enumerate::{ceil_minus_sqrt, floor_plus_sqrt};
pub use frames::{
    bw_frame_count, check_norm_doubling, class_counting_sum, color_partition_search,
    construction_a, derive_counting_terms, intersect_codes, verify_frame_partition, BinaryCode,
    BwSource, ClassCountingTerm, FrameCheckReport, FrameKind, FramePartition,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{
    fmt_scalar, parse_scalar, rat_sqrt_exact, row_times_mat, FieldMat, IntMat, QuadElem, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeError(pub String);

impl std::fmt::Display for LatticeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lattice error: {}", self.0)
    }
}

impl std::error::Error for LatticeError {}

#[derive(Clone)]
pub struct Lattice {
    gen: FieldMat,
    inv: FieldMat,
    gram: FieldMat,
    det_abs: QuadElem,
    field_d: u64,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice(dim {}, d {}, det {}) {:?}", self.dim(), self.field_d, self.det_abs, self.gen)
    }
}

impl Lattice {
    pub fn from_gen(gen: FieldMat, field_d: u64) -> Result<Lattice, LatticeError> {
        if gen.nrows() != gen.ncols() {
            return Err(LatticeError(format!(
                "generator must be square, got {}x{}",
                gen.nrows(),
                gen.ncols()
            )));
        }
        for i in 0..gen.nrows() {
            for j in 0..gen.ncols() {
                let ed = gen.at(i, j).field_d();
                if ed != 1 && ed != field_d {
                    return Err(LatticeError(format!(
                        "entry ({i},{j}) lives in Q(sqrt {ed}) but the lattice declares field_d {field_d}"
                    )));
                }
            }
        }
        let det = gen.det();
        if det.is_zero() {
            return Err(LatticeError("generator matrix is singular".into()));
        }
        let inv = gen.inverse().expect("nonzero det implies invertible");
        let gram = gen.gram();
        let det_abs = det.abs();
        Ok(Lattice { gen, inv, gram, det_abs, field_d })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Lattice {
        Lattice::from_gen(FieldMat::from_int_rows(rows), 1).expect("integer generator")
    }

    pub fn dim(&self) -> usize {
        self.gen.nrows()
    }

    pub fn field_d(&self) -> u64 {
        self.field_d
    }

    pub fn gen(&self) -> &FieldMat {
        &self.gen
    }

    pub fn gen_inv(&self) -> &FieldMat {
        &self.inv
    }

    pub fn gram(&self) -> &FieldMat {
        &self.gram
    }

    pub fn det_abs(&self) -> &QuadElem {
        &self.det_abs
    }

    /// Lattice point with the given integer coefficients.
    pub fn point(&self, coeffs: &[BigInt]) -> Vec<QuadElem> {
        let row: Vec<QuadElem> = coeffs
            .iter()
            .map(|c| QuadElem::from_rat(Rat::from_integer(c.clone())))
            .collect();
        row_times_mat(&row, &self.gen)
    }

    /// Exact generator-basis coordinates of an ambient point.
    pub fn coords_of(&self, x: &[QuadElem]) -> Vec<QuadElem> {
        row_times_mat(x, &self.inv)
    }

    pub fn contains(&self, x: &[QuadElem]) -> bool {
        self.coords_of(x).iter().all(is_integer_scalar)
    }

    pub fn dual(&self) -> Lattice {
        let gen = self.inv.transpose();
        Lattice::from_gen(gen, self.field_d).expect("dual of full-rank lattice")
    }

    pub fn scale(&self, s: &QuadElem) -> Lattice {
        Lattice::from_gen(self.gen.scale(s), self.field_d.max(s.field_d()))
            .expect("nonzero scale")
    }

    /// Smallest lattice containing all inputs.
    pub fn sum(lats: &[&Lattice]) -> Result<Lattice, LatticeError> {
        let (n, d) = check_family(lats)?;
        let all_rows: Vec<&FieldMat> = lats.iter().map(|l| &l.gen).collect();
        let (stack, den) = flatten_to_int(&all_rows, d);
        let h = stack.hnf();
        if h.nrows() != n {
            return Err(LatticeError(format!(
                "sum has rank {} but dimension is {n}",
                h.nrows()
            )));
        }
        let gen = unflatten(&h, &den, d);
        Lattice::from_gen(gen, d)
    }

    /// Intersection via duality: meet(L_i) = dual(join(dual(L_i))).
    pub fn intersect(lats: &[&Lattice]) -> Result<Lattice, LatticeError> {
        check_family(lats)?;
        let duals: Vec<Lattice> = lats.iter().map(|l| l.dual()).collect();
        let dual_refs: Vec<&Lattice> = duals.iter().collect();
        Ok(Lattice::sum(&dual_refs)?.dual())
    }

    /// Exact equality of the point sets.
    pub fn eq_lattice(&self, other: &Lattice) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let d = if self.field_d == 1 { other.field_d } else { self.field_d };
        if other.field_d != 1 && other.field_d != d {
            return false;
        }
        let (a, da) = flatten_to_int(&[&self.gen], d);
        let (b, db) = flatten_to_int(&[&other.gen], d);
        // Rescale onto the common denominator lcm(da, db).
        let l = da.lcm(&db);
        let a = scale_int_mat(&a, &(&l / &da));
        let b = scale_int_mat(&b, &(&l / &db));
        a.hnf() == b.hnf()
    }

    /// Is every point of `self` also in `other`?
    pub fn subset_of(&self, other: &Lattice) -> bool {
        (0..self.dim()).all(|i| other.contains(self.gen.row(i)))
    }

    /// Norm scale s (norms of self = s * norms of other) certified by equal
    /// determinant ratio and matching theta-series prefix up to four times
    /// the minimum norm. Err carries the first mismatch.
    pub fn similar_to(&self, other: &Lattice) -> Result<QuadElem, LatticeError> {
        if self.dim() != other.dim() {
            return Err(LatticeError("dimension mismatch".into()));
        }
        let n = self.dim();
        let ratio = self.det_abs() / other.det_abs();
        let scale = exact_kth_root(&ratio.square(), n as u32, self.field_d.max(other.field_d))
            .ok_or_else(|| {
                LatticeError(format!(
                    "determinant ratio {ratio} admits no exact norm scale for dimension {n}"
                ))
            })?;
        let min_other = min_norm(other);
        let min_self = min_norm(self);
        let expect_min = &min_other * &scale;
        if min_self != expect_min {
            return Err(LatticeError(format!(
                "minimum norm {min_self} differs from scaled reference {expect_min}"
            )));
        }
        let cap_other = &min_other * &QuadElem::from_int(4);
        let cap_self = &expect_min * &QuadElem::from_int(4);
        let t_other = theta_prefix(other, &cap_other);
        let t_self = theta_prefix(self, &cap_self);
        if t_other.len() != t_self.len() {
            return Err(LatticeError(format!(
                "theta prefix length mismatch: {} vs {}",
                t_self.len(),
                t_other.len()
            )));
        }
        for ((ns, cs), (no, co)) in t_self.iter().zip(t_other.iter()) {
            if *ns != no * &scale || cs != co {
                return Err(LatticeError(format!(
                    "theta prefix mismatch at norm {ns}: count {cs} vs reference norm {no} count {co}"
                )));
            }
        }
        Ok(scale)
    }
}

pub fn is_integer_scalar(x: &QuadElem) -> bool {
    match x.as_rat() {
        Some(r) => r.denom().is_one(),
        None => false,
    }
}

fn check_family(lats: &[&Lattice]) -> Result<(usize, u64), LatticeError> {
    if lats.is_empty() {
        return Err(LatticeError("empty lattice family".into()));
    }
    let n = lats[0].dim();
    let mut d = 1;
    for l in lats {
        if l.dim() != n {
            return Err(LatticeError("dimension mismatch in family".into()));
        }
        if l.field_d != 1 {
            if d != 1 && d != l.field_d {
                return Err(LatticeError("mixed quadratic fields in family".into()));
            }
            d = l.field_d;
        }
    }
    Ok((n, d))
}

/// Stack matrices and flatten each coordinate to two integer columns (a, b)
/// of a + b*sqrt(d), scaled by the collective denominator lcm.
fn flatten_to_int(mats: &[&FieldMat], _d: u64) -> (IntMat, BigInt) {
    let mut den = BigInt::one();
    for m in mats {
        for i in 0..m.nrows() {
            for x in m.row(i) {
                den = den.lcm(x.rational_part().denom());
                den = den.lcm(x.root_coeff().denom());
            }
        }
    }
    let mut rows = Vec::new();
    for m in mats {
        for i in 0..m.nrows() {
            let mut row = Vec::with_capacity(m.ncols() * 2);
            for x in m.row(i) {
                let a = x.rational_part();
                let b = x.root_coeff();
                row.push(a.numer() * (&den / a.denom()));
                row.push(b.numer() * (&den / b.denom()));
            }
            rows.push(row);
        }
    }
    (IntMat::from_rows(rows), den)
}

fn scale_int_mat(m: &IntMat, s: &BigInt) -> IntMat {
    let rows: Vec<Vec<BigInt>> = (0..m.nrows())
        .map(|i| m.row(i).iter().map(|x| x * s).collect())
        .collect();
    IntMat::from_rows(rows)
}

fn unflatten(h: &IntMat, den: &BigInt, d: u64) -> FieldMat {
    let n = h.nrows();
    assert_eq!(h.ncols(), 2 * n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let a = Rat::new(h.at(i, 2 * j).clone(), den.clone());
            let b = Rat::new(h.at(i, 2 * j + 1).clone(), den.clone());
            row.push(QuadElem::new(a, b, d));
        }
        rows.push(row);
    }
    FieldMat::from_rows(rows)
}

/// Positive k-th root within Q(sqrt d), if one exists.
pub fn exact_kth_root(q: &QuadElem, k: u32, d: u64) -> Option<QuadElem> {
    assert!(k >= 1);
    if q.sign() <= 0 {
        return None;
    }
    if let Some(r) = q.as_rat() {
        if let Some(x) = rat_kth_root(r, k) {
            return Some(QuadElem::from_rat(x));
        }
        // Try x = r * sqrt(d) for even k: x^k = r^k d^{k/2}.
        if d > 1 && k % 2 == 0 {
            let dk = Rat::from_integer(BigInt::from(d)).pow((k / 2) as i32);
            if let Some(x) = rat_kth_root(&(r / dk), k) {
                return Some(QuadElem::root_part(x, d));
            }
        }
        return None;
    }
    // q = c*sqrt(d): odd k admits x = r*sqrt(d) with r^k = c / d^{(k-1)/2}.
    if q.rational_part().is_zero() && k % 2 == 1 && d > 1 {
        let c = q.root_coeff();
        let dk = Rat::from_integer(BigInt::from(d)).pow(((k - 1) / 2) as i32);
        if let Some(x) = rat_kth_root(&(c / dk), k) {
            return Some(QuadElem::root_part(x, d));
        }
    }
    None
}

fn rat_kth_root(r: &Rat, k: u32) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    if &n.pow(k) == r.numer() && &d.pow(k) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Exact square root of a nonnegative scalar if it stays in Q(sqrt d):
/// rational, or rational * sqrt(d).
pub fn sqrt_in_field(q: &QuadElem, d: u64) -> Option<QuadElem> {
    match q.sign() {
        s if s < 0 => None,
        0 => Some(QuadElem::zero()),
        _ => {
            if let Some(r) = q.as_rat() {
                if let Some(x) = rat_sqrt_exact(r) {
                    return Some(QuadElem::from_rat(x));
                }
                if d > 1 {
                    let rd = r / Rat::from_integer(BigInt::from(d));
                    if let Some(x) = rat_sqrt_exact(&rd) {
                        return Some(QuadElem::root_part(x, d));
                    }
                }
                None
            } else {
                None
            }
        }
    }
}

/// On-disk lattice document. Scalars use the canonical exact string format
/// with w standing for sqrt(field_d).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeFile {
    pub dim: usize,
    pub field_d: u64,
    pub rows: Vec<Vec<String>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &Lattice) -> LatticeFile {
        LatticeFile {
            dim: l.dim(),
            field_d: l.field_d(),
            rows: (0..l.dim())
                .map(|i| l.gen().row(i).iter().map(fmt_scalar).collect())
                .collect(),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice, LatticeError> {
        if self.rows.len() != self.dim || self.rows.iter().any(|r| r.len() != self.dim) {
            return Err(LatticeError(format!(
                "rows must form a {0}x{0} matrix",
                self.dim
            )));
        }
        let mut rows = Vec::with_capacity(self.dim);
        for r in &self.rows {
            let mut row = Vec::with_capacity(self.dim);
            for s in r {
                row.push(
                    parse_scalar(s, self.field_d)
                        .map_err(|e| LatticeError(e.to_string()))?,
                );
            }
            rows.push(row);
        }
        Lattice::from_gen(FieldMat::from_rows(rows), self.field_d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice file serializes")
    }

    pub fn from_json(s: &str) -> Result<LatticeFile, LatticeError> {
        serde_json::from_str(s).map_err(|e| LatticeError(format!("bad lattice file: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    fn sqrt3() -> QuadElem {
        QuadElem::root_part(rat_int(1), 3)
    }

    fn hex_components() -> Vec<Lattice> {
        // Three rectangular lattices whose intersection is hexagonal.
        let z = QuadElem::zero;
        let l1 = FieldMat::from_rows(vec![
            vec![sqrt3(), z()],
            vec![z(), QuadElem::one()],
        ]);
        let l2 = FieldMat::from_rows(vec![
            vec![QuadElem::root_part(rat(1, 2), 3), QuadElem::from_frac(1, 2)],
            vec![QuadElem::root_part(rat(-1, 2), 3), QuadElem::from_frac(3, 2)],
        ]);
        let l3 = FieldMat::from_rows(vec![
            vec![QuadElem::root_part(rat(-1, 2), 3), QuadElem::from_frac(1, 2)],
            vec![QuadElem::root_part(rat(1, 2), 3), QuadElem::from_frac(3, 2)],
        ]);
        vec![
            Lattice::from_gen(l1, 3).unwrap(),
            Lattice::from_gen(l2, 3).unwrap(),
            Lattice::from_gen(l3, 3).unwrap(),
        ]
    }

    fn hex_intersection_expected() -> Lattice {
        let z = QuadElem::zero;
        Lattice::from_gen(
            FieldMat::from_rows(vec![
                vec![sqrt3(), QuadElem::one()],
                vec![z(), QuadElem::from_int(2)],
            ]),
            3,
        )
        .unwrap()
    }

    #[test]
    fn hexagonal_intersection_matches_expected() {
        let comps = hex_components();
        let refs: Vec<&Lattice> = comps.iter().collect();
        let meet = Lattice::intersect(&refs).unwrap();
        let expected = hex_intersection_expected();
        assert!(meet.eq_lattice(&expected));
        for c in &comps {
            assert!(meet.subset_of(c));
        }
        // Index check: det 2*sqrt3 vs component det sqrt3.
        assert_eq!(meet.det_abs(), &(QuadElem::from_int(2) * sqrt3()));
    }

    #[test]
    fn bcc_intersection_matches_expected() {
        let l1 = Lattice::from_int_rows(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]);
        let l2 = Lattice::from_int_rows(&[&[0, 1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let l3 = Lattice::from_int_rows(&[&[0, 0, 1], &[1, 1, 0], &[1, -1, 0]]);
        let meet = Lattice::intersect(&[&l1, &l2, &l3]).unwrap();
        let expected = Lattice::from_int_rows(&[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        assert!(meet.eq_lattice(&expected));
        assert_eq!(meet.det_abs(), &QuadElem::from_int(4));
    }

    #[test]
    fn dual_involution_exact() {
        let comps = hex_components();
        for l in &comps {
            assert!(l.dual().dual().eq_lattice(l));
            // Duality inverts determinants.
            let prod = l.det_abs() * l.dual().det_abs();
            assert_eq!(prod, QuadElem::one());
        }
    }

    #[test]
    fn sum_of_dilations() {
        let z4 = Lattice::from_int_rows(&[&[1, 0], &[0, 1]]);
        let half = z4.scale(&QuadElem::from_frac(1, 2));
        let s = Lattice::sum(&[&z4, &half]).unwrap();
        assert!(s.eq_lattice(&half));
        let m = Lattice::intersect(&[&z4, &half]).unwrap();
        assert!(m.eq_lattice(&z4));
    }

    #[test]
    fn membership_and_coords() {
        let l = hex_intersection_expected();
        let p = l.point(&[BigInt::from(2), BigInt::from(-1)]);
        assert!(l.contains(&p));
        let q = vec![sqrt3(), QuadElem::zero()];
        assert!(!l.contains(&q));
    }

    #[test]
    fn lattice_file_roundtrip() {
        for l in hex_components().iter().chain([hex_intersection_expected()].iter()) {
            let f = LatticeFile::from_lattice(l);
            let json = f.to_json();
            let back = LatticeFile::from_json(&json).unwrap().to_lattice().unwrap();
            assert_eq!(back.gen(), l.gen());
        }
    }

    #[test]
    fn kth_root_cases() {
        assert_eq!(
            exact_kth_root(&QuadElem::from_int(256), 8, 1),
            Some(QuadElem::from_int(2))
        );
        assert_eq!(
            exact_kth_root(&QuadElem::from_int(27), 3, 3),
            Some(QuadElem::from_int(3))
        );
        let s3 = QuadElem::root_part(rat_int(27), 3); // 27*sqrt(3) = sqrt(3)^7
        assert_eq!(
            exact_kth_root(&s3, 7, 3),
            Some(QuadElem::root_part(rat_int(1), 3))
        );
        assert_eq!(
            exact_kth_root(&QuadElem::from_int(12), 2, 3),
            Some(QuadElem::root_part(rat_int(2), 3))
        );
        assert_eq!(exact_kth_root(&QuadElem::from_int(12), 2, 1), None);
        assert_eq!(
            sqrt_in_field(&QuadElem::from_int(12), 3),
            Some(QuadElem::root_part(rat_int(2), 3))
        );
    }
}
