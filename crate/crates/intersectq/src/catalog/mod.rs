//! Stored decompositions of named lattices into intersections of simpler
//! component lattices, together with the frame partitions, theta tables, and
//! congruence-class counting identities that justify them, and a one-shot
//! [`verify_all`] routine that recomputes every claim from the stored data.
//!
//! Two stored claims are knowingly wrong and are carried with a discrepancy
//! flag rather than silently corrected: the Coxeter-Todd counting identity
//! as stated sums to 6112 instead of 2^12 (a divisor of 2 on the 4032 term
//! fixes it), and the closed-form Barnes-Wall frame-count product (2^j - 1)
//! conflicts with the stored per-lattice counts 3, 15, 135, which follow
//! the product of (2^j + 1) instead. [`verify_all`] reports both as warnings.

mod data;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactmath::{rat, FieldMat, QuadElem, Rat};
use crate::lattice::{
    bw_frame_count, check_norm_doubling, class_counting_sum, color_partition_search,
    construction_a, coset_min_profile, derive_counting_terms, intersect_codes, min_norm,
    theta_prefix, vectors_of_norm, verify_frame_partition, BinaryCode, ClassCountingTerm,
    FrameKind, FramePartition, Lattice, LatticeFile,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogError(pub String);

impl std::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "catalog error: {}", self.0)
    }
}

impl std::error::Error for CatalogError {}

/// One stored decomposition: a named lattice as the intersection of
/// component lattices, with the expected intersection in generator form.
#[derive(Clone)]
pub struct Decomposition {
    pub name: &'static str,
    pub field_d: u64,
    pub components: Vec<FieldMat>,
    pub expected_intersection: FieldMat,
    pub expected_intersection_name: &'static str,
    pub notes: &'static str,
}

impl Decomposition {
    pub fn component_lattices(&self) -> Vec<Lattice> {
        self.components
            .iter()
            .map(|m| Lattice::from_gen(m.clone(), self.field_d).expect("stored component"))
            .collect()
    }

    pub fn expected_lattice(&self) -> Lattice {
        Lattice::from_gen(self.expected_intersection.clone(), self.field_d)
            .expect("stored expectation")
    }
}

pub const NAMES: [&str; 10] = [
    "hexagonal3",
    "bcc3",
    "fcc4",
    "d4_3",
    "e6star4",
    "e8_15",
    "e8_10",
    "e8_5",
    "e8_2",
    "constructiona",
];

fn mat_int(rows: &[&[i64]]) -> FieldMat {
    FieldMat::from_int_rows(rows)
}

// Entries are numerators over 2.
fn mat_halves<const R: usize, const C: usize>(rows: &[[i64; C]; R]) -> FieldMat {
    FieldMat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| QuadElem::from_frac(x, 2)).collect())
            .collect(),
    )
}

// Entries are (rational, sqrt d) numerator pairs over 2.
fn mat_mixed<const R: usize, const C: usize>(rows: &[[(i64, i64); C]; R], d: u64) -> FieldMat {
    FieldMat::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, b)| QuadElem::new(rat(a, 2), rat(b, 2), d))
                    .collect()
            })
            .collect(),
    )
}

fn hexagonal_components() -> Vec<FieldMat> {
    let m = |rows: &[[(i64, i64); 2]; 2]| mat_mixed(rows, 3);
    vec![
        m(&[[(0, 2), (0, 0)], [(0, 0), (2, 0)]]),
        m(&[[(0, 1), (1, 0)], [(0, -1), (3, 0)]]),
        m(&[[(0, -1), (1, 0)], [(0, 1), (3, 0)]]),
    ]
}

fn d4_components() -> Vec<FieldMat> {
    vec![
        mat_int(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]),
        mat_int(&[&[1, 1, 1, 1], &[1, -1, 1, -1], &[1, -1, -1, 1], &[1, 1, -1, -1]]),
        mat_int(&[&[-1, 1, 1, 1], &[-1, -1, 1, -1], &[-1, -1, -1, 1], &[-1, 1, -1, -1]]),
    ]
}

fn construction_a_codes() -> (BinaryCode, BinaryCode) {
    let c1 = BinaryCode::new(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    let c2 = BinaryCode::new(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
    (c1, c2)
}

/// Stored decomposition by name. Names are listed in [`NAMES`].
pub fn get(name: &str) -> Result<Decomposition, CatalogError> {
    match name {
        "hexagonal3" => Ok(Decomposition {
            name: "hexagonal3",
            field_d: 3,
            components: hexagonal_components(),
            expected_intersection: mat_mixed(&[[(0, 2), (2, 0)], [(0, 0), (4, 0)]], 3),
            expected_intersection_name: "hexagonal (minimal norm 4)",
            notes: "Three rectangular lattices spanned by a norm-1 and an \
                    orthogonal norm-3 hexagonal minimal vector; rotating by \
                    120 degrees maps each component to the next.",
        }),
        "bcc3" => Ok(Decomposition {
            name: "bcc3",
            field_d: 1,
            components: vec![
                mat_int(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]),
                mat_int(&[&[0, 1, 0], &[1, 0, 1], &[1, 0, -1]]),
                mat_int(&[&[0, 0, 1], &[1, 1, 0], &[1, -1, 0]]),
            ],
            expected_intersection: mat_int(&[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]),
            expected_intersection_name: "bcc (minimal norm 3)",
            notes: "Each component pairs one cubic axis with the two face \
                    diagonals orthogonal to it: a square prism lattice.",
        }),
        "fcc4" => Ok(Decomposition {
            name: "fcc4",
            field_d: 1,
            components: vec![
                mat_int(&[&[2, 1, 1], &[1, 2, -1], &[-2, 2, 2]]),
                mat_int(&[&[1, 2, 1], &[-1, 1, 2], &[2, -2, 2]]),
                mat_int(&[&[1, 1, 2], &[2, -1, 1], &[2, 2, -2]]),
                mat_int(&[&[2, -1, -1], &[-1, 2, -1], &[2, 2, 2]]),
            ],
            expected_intersection: mat_int(&[&[3, 3, 0], &[3, -3, 0], &[0, 3, -3]]),
            expected_intersection_name: "fcc (minimal norm 18)",
            notes: "Each component is a hexagonal prism lattice spanned by \
                    two norm-6 vectors at 60 degrees and an orthogonal \
                    norm-12 body diagonal.",
        }),
        "d4_3" => Ok(Decomposition {
            name: "d4_3",
            field_d: 1,
            components: d4_components(),
            expected_intersection: mat_int(&[
                &[4, 0, 0, 0],
                &[2, 2, 0, 0],
                &[2, 0, 2, 0],
                &[2, 0, 0, 2],
            ]),
            expected_intersection_name: "D4 (minimal norm 8)",
            notes: "Three cubic lattices whose minimal vectors are the three \
                    coordinate frames inside the 24 minimal vectors of the \
                    norm-4 D4; the first two alone already intersect in the \
                    same lattice. See d4_s3_generators for the S3 symmetry \
                    permuting the components.",
        }),
        "e6star4" => Ok(Decomposition {
            name: "e6star4",
            field_d: 3,
            components: data::E6STAR4_COMPONENTS
                .iter()
                .map(|m| mat_mixed(m, 3))
                .collect(),
            expected_intersection: mat_mixed(&data::E6STAR4_EXPECTED[0], 3),
            expected_intersection_name: "E6* (similar; canonical form)",
            notes: "Real expansions of four rank-3 modules over the ring of \
                    integers a+bw, w = exp(2*pi*i/3): generator rows \
                    [t,0,0; 0,t,0; 0,0,t], [1,1,1; 1,w,v; 1,v,w], \
                    [1,1,w; 1,w,1; 1,v,v], [1,1,v; 1,w,w; 1,v,1] with \
                    v = conj(w), t = w - v; a+bw embeds as \
                    (a - b/2, b*sqrt3/2) and each module row g expands to \
                    real rows g and w*g. The intersection is stated only up \
                    to similarity; the stored matrix is its canonical form, \
                    with 54 minimal vectors and similar to the dual of the \
                    component join at norm ratio 27/4.",
        }),
        "e8_15" => Ok(Decomposition {
            name: "e8_15",
            field_d: 1,
            components: data::E8_15_COMPONENTS.iter().map(|m| mat_halves(m)).collect(),
            expected_intersection: mat_halves(&data::E8_15_EXPECTED[0]),
            expected_intersection_name: "E8 (norm ratio 4; canonical form)",
            notes: "The 15 cubic lattices spanned by the 15 coordinate \
                    frames of E8 minimal vectors: 7 frames pair the \
                    coordinates (sums and differences of coordinate pairs \
                    along a one-factorization of the 8 positions) and 8 are \
                    halved sign matrices. The frames are the minimal vectors \
                    of the nonzero translates u + T E8 for the stored \
                    norm-doubling map T (e8_norm_doubling_map), which is how \
                    the list was completed from its two representative \
                    shapes.",
        }),
        "e8_10" => Ok(Decomposition {
            name: "e8_10",
            field_d: 3,
            components: data::E8_10_COMPONENTS
                .iter()
                .map(|m| mat_mixed(m, 3))
                .collect(),
            expected_intersection: mat_mixed(&data::E8_10_EXPECTED[0], 3),
            expected_intersection_name: "t times the rank-4 module host of E8",
            notes: "Real expansions of ten rank-4 modules over the ring of \
                    integers a+bw (embedding as in e6star4); the stored \
                    rows 1-6 are, symbolically, [t,0,0,0; 0,t,0,0; 0,0,t,0; \
                    0,0,0,t], [0,1,-1,1; 1,0,-1,-1; 1,-1,0,1; 1,1,1,0], \
                    [0,1,-1,w; 1,0,-w,-v; 1,-w,0,v; 1,w,w,0], [0,1,-w,w; \
                    1,0,-w,-w; 1,-1,0,w; 1,1,w,0], [0,1,-w,v; 1,0,-v,-1; \
                    1,-w,0,1; 1,w,v,0], [0,1,-w,1; 1,0,-1,-v; 1,-v,0,v; \
                    1,v,1,0], and rows 7-10 are the complex conjugates of \
                    rows 3-6. The intersection equals t times the host \
                    module exactly; the first two components alone already \
                    intersect in it.",
        }),
        "e8_5" => Ok(Decomposition {
            name: "e8_5",
            field_d: 1,
            components: data::E8_5_COMPONENTS.iter().map(|m| mat_halves(m)).collect(),
            expected_intersection: mat_halves(&data::E8_5_EXPECTED[0]),
            expected_intersection_name: "E8 (norm ratio 2; canonical form)",
            notes: "Real expansions of five rank-2 modules over the Hurwitz \
                    quaternion order (basis 1, i, j, (1+i+j+k)/2 acting on \
                    the left; a+bi+cj+dk embeds as (a,b,c,d)): generator \
                    rows [1+i,0; 0,1+i], [1,1; 1,-1], [1,i; 1,-i], \
                    [1,j; 1,-j], [1,k; 1,-k]. Each component is a product \
                    of two D4-like planes pairs; the intersection is stated \
                    only up to similarity and the stored matrix is its \
                    canonical form.",
        }),
        "e8_2" => Ok(Decomposition {
            name: "e8_2",
            field_d: 1,
            components: vec![
                mat_int(&[
                    &[2, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 2, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 2, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 2, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 2, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 2, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 2, 0],
                    &[0, 0, 0, 0, 0, 0, 0, 2],
                ]),
                mat_int(&[
                    &[1, 1, 1, 1, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 1, 1, 1, 1],
                    &[1, -1, 0, 0, 1, -1, 0, 0],
                    &[0, 0, 1, -1, 0, 0, 1, -1],
                    &[1, 0, -1, 0, -1, 0, 1, 0],
                    &[0, 1, 0, -1, 0, -1, 0, 1],
                    &[1, 0, 0, -1, 0, 1, -1, 0],
                    &[0, 1, -1, 0, 1, 0, 0, -1],
                ]),
            ],
            expected_intersection: mat_halves(&data::E8_2_EXPECTED[0]),
            expected_intersection_name: "E8 (norm ratio 8; canonical form)",
            notes: "Two-lattice form: a doubled cubic lattice and a rotated \
                    copy of it (the second generator matrix has Gram 4I). \
                    Their intersection is similar to E8 but the \
                    representation is not canonical.",
        }),
        "constructiona" => {
            let (c1, c2) = construction_a_codes();
            let l1 = construction_a(&c1);
            let l2 = construction_a(&c2);
            let c = intersect_codes(&[&c1, &c2]);
            let expected = construction_a(&c);
            Ok(Decomposition {
                name: "constructiona",
                field_d: 1,
                components: vec![l1.gen().clone(), l2.gen().clone()],
                expected_intersection: expected.gen().clone(),
                expected_intersection_name: "mod-2 lift of the code intersection",
                notes: "Code-level demonstration: the mod-2 lift of a binary \
                        code intersection equals the intersection of the \
                        lifts. Components lift the length-4 codes {0000, \
                        1100, 0011, 1111} and {0000, 1010, 0101, 1111}; the \
                        intersection lifts their common subcode {0000, 1111}.",
            })
        }
        _ => Err(CatalogError(format!("unknown catalog name '{name}'"))),
    }
}

/// Reference lattices that similarity certificates point at.
pub fn reference_lattice(name: &str) -> Option<Lattice> {
    let l = match name {
        "a2" => Lattice::from_gen(
            mat_mixed(&[[(0, 0), (2, 0)], [(0, -1), (1, 0)]], 3),
            3,
        ),
        "bcc" => Lattice::from_gen(
            mat_halves(&[[2, 0, 0], [0, 2, 0], [1, 1, 1]]),
            1,
        ),
        "fcc" => Lattice::from_gen(mat_int(&[&[1, 1, 0], &[1, -1, 0], &[0, 1, -1]]), 1),
        "d4" => Lattice::from_gen(
            mat_int(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[1, 1, 1, 1]]),
            1,
        ),
        "e8" => {
            let mut rows = vec![[0i64; 8]; 8];
            rows[0][0] = 4;
            for i in 1..7 {
                rows[i][i - 1] = -2;
                rows[i][i] = 2;
            }
            rows[7] = [1; 8];
            let rows: [[i64; 8]; 8] = rows.try_into().expect("8 rows");
            Lattice::from_gen(mat_halves(&rows), 1)
        }
        _ => return None,
    };
    Some(l.expect("stored reference"))
}

/// Similarity certificate for a stored decomposition: reference name and the
/// exact norm ratio expected(x) = ratio * reference(x). The e6star4
/// certificate points at the dual of the component join instead of a stored
/// reference.
pub fn similarity_certificate(name: &str) -> Option<(&'static str, Lattice, QuadElem)> {
    let (r, num, den) = match name {
        "hexagonal3" => ("a2", 4, 1),
        "bcc3" => ("bcc", 4, 1),
        "fcc4" => ("fcc", 9, 1),
        "d4_3" => ("d4", 2, 1),
        "e8_15" => ("e8", 4, 1),
        "e8_10" => ("e8", 9, 2),
        "e8_5" => ("e8", 2, 1),
        "e8_2" => ("e8", 8, 1),
        "e6star4" => {
            let comps = get("e6star4").ok()?.component_lattices();
            let refs: Vec<&Lattice> = comps.iter().collect();
            let host = Lattice::sum(&refs).ok()?;
            return Some((
                "dual of the component join",
                host.dual(),
                QuadElem::from_frac(27, 4),
            ));
        }
        _ => return None,
    };
    Some((r, reference_lattice(r).expect("named reference"), QuadElem::from_frac(num, den)))
}

/// The norm-doubling map used to complete the 15-frame list: block diagonal
/// sum of four [[1,1],[1,-1]] blocks, acting on row vectors from the right.
pub fn e8_norm_doubling_map() -> FieldMat {
    let mut rows = vec![vec![QuadElem::zero(); 8]; 8];
    for b in 0..4 {
        rows[2 * b][2 * b] = QuadElem::one();
        rows[2 * b][2 * b + 1] = QuadElem::one();
        rows[2 * b + 1][2 * b] = QuadElem::one();
        rows[2 * b + 1][2 * b + 1] = QuadElem::from_int(-1);
    }
    FieldMat::from_rows(rows)
}

/// Generators of the S3 symmetry of the d4_3 decomposition: R (half the
/// second component matrix) swaps components 1 and 2 and fixes component 3;
/// D = diag(-1,1,1,1) swaps components 2 and 3 and fixes component 1. Both
/// fix the intersection.
pub fn d4_s3_generators() -> [FieldMat; 2] {
    let h = d4_components()[1].clone();
    let r = h.scale(&QuadElem::from_frac(1, 2));
    let d = mat_int(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    [r, d]
}

// Unit orbits of the generator rows of a real-expanded module matrix: rows
// come in pairs (g, w*g), and the six unit multiples of g are +-g, +-w*g,
// +-(g + w*g) since the conjugate unit is -1-w.
fn unit_orbit_frames(m: &FieldMat) -> Vec<Vec<QuadElem>> {
    let mut out = Vec::new();
    for p in 0..m.nrows() / 2 {
        let a = m.row(2 * p).to_vec();
        let b = m.row(2 * p + 1).to_vec();
        let c: Vec<QuadElem> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        for v in [a, b, c] {
            let n: Vec<QuadElem> = v.iter().map(|x| -x).collect();
            out.push(v);
            out.push(n);
        }
    }
    out
}

fn signed_row_frames(m: &FieldMat) -> Vec<Vec<QuadElem>> {
    let mut out = Vec::new();
    for i in 0..m.nrows() {
        let v = m.row(i).to_vec();
        let n: Vec<QuadElem> = v.iter().map(|x| -x).collect();
        out.push(v);
        out.push(n);
    }
    out
}

/// Host lattice and stored frame partition of its minimal vectors, for the
/// decompositions that carry one.
pub fn frame_partition(name: &str) -> Option<(Lattice, FramePartition)> {
    let dec = get(name).ok()?;
    match name {
        "d4_3" => {
            let host = reference_lattice("d4").expect("d4 reference");
            let parts = dec.components.iter().map(signed_row_frames).collect();
            Some((host, FramePartition { kind: FrameKind::Coordinate, parts }))
        }
        "e8_15" => {
            let host = reference_lattice("e8").expect("e8 reference");
            let parts = dec.components.iter().map(signed_row_frames).collect();
            Some((host, FramePartition { kind: FrameKind::Coordinate, parts }))
        }
        "e8_10" => {
            let host =
                Lattice::from_gen(mat_mixed(&data::E8_10_HOST[0], 3), 3).expect("stored host");
            let parts = dec.components.iter().map(unit_orbit_frames).collect();
            Some((host, FramePartition { kind: FrameKind::Triangular, parts }))
        }
        "e6star4" => {
            let comps = dec.component_lattices();
            let refs: Vec<&Lattice> = comps.iter().collect();
            let host = Lattice::sum(&refs).ok()?;
            let parts = dec.components.iter().map(unit_orbit_frames).collect();
            Some((host, FramePartition { kind: FrameKind::Triangular, parts }))
        }
        _ => None,
    }
}

/// Stored frame-count bookkeeping: minimal vectors, vectors per frame, and
/// number of frames for each lattice with a stated decomposition count.
#[derive(Clone, Copy, Debug)]
pub struct FrameConstants {
    pub lattice: &'static str,
    pub min_vectors: u64,
    pub frame_size: u64,
    pub frames: u64,
    pub kind: FrameKind,
}

pub fn frame_constants() -> Vec<FrameConstants> {
    vec![
        FrameConstants {
            lattice: "D4",
            min_vectors: 24,
            frame_size: 8,
            frames: 3,
            kind: FrameKind::Coordinate,
        },
        FrameConstants {
            lattice: "E6",
            min_vectors: 72,
            frame_size: 18,
            frames: 4,
            kind: FrameKind::Triangular,
        },
        FrameConstants {
            lattice: "E8",
            min_vectors: 240,
            frame_size: 16,
            frames: 15,
            kind: FrameKind::Coordinate,
        },
        FrameConstants {
            lattice: "E8",
            min_vectors: 240,
            frame_size: 24,
            frames: 10,
            kind: FrameKind::Triangular,
        },
        FrameConstants {
            lattice: "K12",
            min_vectors: 756,
            frame_size: 36,
            frames: 21,
            kind: FrameKind::Triangular,
        },
        FrameConstants {
            lattice: "BW16",
            min_vectors: 4320,
            frame_size: 32,
            frames: 135,
            kind: FrameKind::Coordinate,
        },
        FrameConstants {
            lattice: "Leech",
            min_vectors: 196560,
            frame_size: 48,
            frames: 4095,
            kind: FrameKind::Coordinate,
        },
    ]
}

/// Stored theta-series prefix of the reference bcc lattice.
pub fn bcc_theta_table() -> Vec<(QuadElem, u64)> {
    vec![
        (QuadElem::from_frac(3, 4), 8),
        (QuadElem::one(), 6),
        (QuadElem::from_int(2), 12),
    ]
}

/// Stored theta-series prefix of the reference fcc lattice.
pub fn fcc_theta_table() -> Vec<(QuadElem, u64)> {
    [(2, 12), (4, 6), (6, 24), (8, 12), (10, 24), (12, 8)]
        .iter()
        .map(|&(n, c)| (QuadElem::from_int(n), c))
        .collect()
}

/// A congruence-class counting identity: sum of count/divisor terms over the
/// norm shells that carry minimal vectors of classes mod 2, equal to 2^dim.
#[derive(Clone, Debug)]
pub struct CountingIdentity {
    pub lattice: &'static str,
    pub dimension: u32,
    /// Terms exactly as stated.
    pub terms: Vec<ClassCountingTerm>,
    /// Whether the stated terms reach 2^dim.
    pub holds_as_stated: bool,
    /// Corrected terms when the stated ones do not reach 2^dim.
    pub corrected: Option<Vec<ClassCountingTerm>>,
}

pub fn counting_identities() -> Vec<CountingIdentity> {
    let t = ClassCountingTerm::new;
    vec![
        CountingIdentity {
            lattice: "E8",
            dimension: 8,
            terms: vec![t(1, 1), t(240, 2), t(2160, 16)],
            holds_as_stated: true,
            corrected: None,
        },
        CountingIdentity {
            lattice: "K12",
            dimension: 12,
            terms: vec![t(1, 1), t(756, 2), t(4032, 1), t(20412, 12)],
            holds_as_stated: false,
            corrected: Some(vec![t(1, 1), t(756, 2), t(4032, 2), t(20412, 12)]),
        },
        CountingIdentity {
            lattice: "Leech",
            dimension: 24,
            terms: vec![t(1, 1), t(196560, 2), t(16773120, 2), t(398034000, 48)],
            holds_as_stated: true,
            corrected: None,
        },
    ]
}

/// Catalog entry serialized to the lattice file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogDump {
    pub name: String,
    pub expected_intersection_name: String,
    pub notes: String,
    pub components: Vec<LatticeFile>,
    pub expected_intersection: LatticeFile,
}

pub fn dump(name: &str) -> Result<CatalogDump, CatalogError> {
    let dec = get(name)?;
    Ok(CatalogDump {
        name: dec.name.to_string(),
        expected_intersection_name: dec.expected_intersection_name.to_string(),
        notes: dec.notes.to_string(),
        components: dec
            .component_lattices()
            .iter()
            .map(LatticeFile::from_lattice)
            .collect(),
        expected_intersection: LatticeFile::from_lattice(&dec.expected_lattice()),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub item: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub checks: Vec<CheckResult>,
}

impl CatalogReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    /// (pass, warn, fail) counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for r in &self.checks {
            match r.status {
                CheckStatus::Pass => c.0 += 1,
                CheckStatus::Warn => c.1 += 1,
                CheckStatus::Fail => c.2 += 1,
            }
        }
        c
    }

    fn push(&mut self, item: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            item: item.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        });
    }

    fn warn(&mut self, item: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            item: item.into(),
            status: CheckStatus::Warn,
            detail: detail.into(),
        });
    }
}

fn real_min_vectors(lat: &Lattice) -> Vec<Vec<QuadElem>> {
    let m = min_norm(lat);
    vectors_of_norm(lat, &m).iter().map(|c| lat.point(c)).collect()
}

/// Recompute every stored claim: containments, intersections, similarity
/// certificates, frame partitions, symmetry action, counting identities,
/// theta tables, frame-count bookkeeping, and the coloring-search demos.
pub fn verify_all() -> CatalogReport {
    let mut rep = CatalogReport::default();
    for name in NAMES {
        let dec = get(name).expect("listed name");
        let comps = dec.component_lattices();
        let expected = dec.expected_lattice();
        let inside = (0..comps.len()).filter(|&i| expected.subset_of(&comps[i])).count();
        rep.push(
            format!("{name}: expected intersection inside every component"),
            inside == comps.len(),
            format!("{inside} of {} containments hold", comps.len()),
        );
        let refs: Vec<&Lattice> = comps.iter().collect();
        match Lattice::intersect(&refs) {
            Ok(inter) => rep.push(
                format!("{name}: intersection equals stored expectation"),
                inter.eq_lattice(&expected),
                "generator Hermite forms compared exactly",
            ),
            Err(e) => rep.push(format!("{name}: intersection computed"), false, e.to_string()),
        }
        if let Some((ref_name, ref_lat, ratio)) = similarity_certificate(name) {
            let got = expected.similar_to(&ref_lat);
            rep.push(
                format!("{name}: expected intersection similar to {ref_name}"),
                got.as_ref() == Ok(&ratio),
                match got {
                    Ok(r) => format!("norm ratio {r} (stored {ratio})"),
                    Err(e) => e.to_string(),
                },
            );
        }
        if let Some((host, part)) = frame_partition(name) {
            let mv = real_min_vectors(&host);
            let check = verify_frame_partition(&mv, &part);
            rep.push(
                format!("{name}: stored frames partition the {} host minimal vectors", mv.len()),
                check.ok,
                if check.ok { String::from("every frame checks") } else { check.failures.join("; ") },
            );
        }
        match name {
            "d4_3" => {
                let two = Lattice::intersect(&[&comps[0], &comps[1]]).expect("2 of 3");
                rep.push(
                    "d4_3: first two components already intersect in the expectation",
                    two.eq_lattice(&expected),
                    "two-lattice form",
                );
                // S3 action: R swaps 1,2 and fixes 3; D swaps 2,3 and fixes
                // 1; both fix the intersection.
                let [r, d] = d4_s3_generators();
                let image = |l: &Lattice, g: &FieldMat| {
                    Lattice::from_gen(l.gen().matmul(g), 1).expect("image lattice")
                };
                let perm_ok = |g: &FieldMat, want: [usize; 3]| {
                    (0..3).all(|i| image(&comps[i], g).eq_lattice(&comps[want[i]]))
                };
                let sym_ok = perm_ok(&r, [1, 0, 2])
                    && perm_ok(&d, [0, 2, 1])
                    && image(&expected, &r).eq_lattice(&expected)
                    && image(&expected, &d).eq_lattice(&expected);
                rep.push(
                    "d4_3: stored S3 generators permute the components and fix the intersection",
                    sym_ok,
                    "R acts as the transposition (1 2), D as (2 3)",
                );
            }
            "e8_10" => {
                let two = Lattice::intersect(&[&comps[0], &comps[1]]).expect("2 of 10");
                rep.push(
                    "e8_10: first two components already intersect in the expectation",
                    two.eq_lattice(&expected),
                    "two-lattice form",
                );
                let joined = Lattice::sum(&refs).expect("component join");
                let host = Lattice::from_gen(mat_mixed(&data::E8_10_HOST[0], 3), 3)
                    .expect("stored host");
                rep.push(
                    "e8_10: component join equals the stored module host",
                    joined.eq_lattice(&host),
                    "join generated by all frame vectors",
                );
            }
            "e8_15" => {
                let host = reference_lattice("e8").expect("e8 reference");
                let t = e8_norm_doubling_map();
                let ok = check_norm_doubling(&host, &t).is_ok();
                rep.push(
                    "e8_15: stored norm-doubling map doubles norms and nests the host",
                    ok,
                    "frames are the minimal vectors of the nonzero translates of the image",
                );
            }
            "e8_2" => {
                let g = dec.components[1].gram();
                let mut ok = true;
                for i in 0..8 {
                    for j in 0..8 {
                        let want =
                            if i == j { QuadElem::from_int(4) } else { QuadElem::zero() };
                        ok &= *g.at(i, j) == want;
                    }
                }
                rep.push(
                    "e8_2: second component has Gram 4I (a rotated doubled cubic lattice)",
                    ok,
                    "64 inner products checked",
                );
            }
            "constructiona" => {
                let (c1, c2) = construction_a_codes();
                let c = intersect_codes(&[&c1, &c2]);
                let via_codes = construction_a(&c);
                rep.push(
                    "constructiona: code-intersection route gives the same lattice",
                    via_codes.eq_lattice(&expected),
                    format!("common subcode has dimension {}", c.dim()),
                );
            }
            _ => {}
        }
    }

    for id in counting_identities() {
        let total = class_counting_sum(&id.terms);
        let want = Rat::from_integer(BigInt::from(1u64) << id.dimension);
        let stated_ok = total == want;
        rep.push(
            format!("{}: counting identity self-consistent with its flag", id.lattice),
            stated_ok == id.holds_as_stated,
            format!("stated terms sum to {total}, target {want}"),
        );
        if let Some(corr) = &id.corrected {
            let fixed = class_counting_sum(corr);
            if fixed == want && !stated_ok {
                rep.warn(
                    format!("{}: counting identity holds only after correction", id.lattice),
                    format!(
                        "stated sum {total} misses {want}; halving the norm-4 shell term \
                         restores it"
                    ),
                );
            } else {
                rep.push(
                    format!("{}: corrected terms reach the target", id.lattice),
                    false,
                    format!("corrected sum {fixed}"),
                );
            }
        }
    }
    // The E8 identity re-derived from first principles: minimal vectors per
    // class mod 2 of the reference E8.
    let e8 = reference_lattice("e8").expect("e8 reference");
    let derived = derive_counting_terms(&coset_min_profile(&e8));
    let stated = counting_identities().remove(0).terms;
    rep.push(
        "E8: counting terms re-derived from classes mod 2",
        derived == stated,
        format!("{} shells derived", derived.len()),
    );

    let bcc = reference_lattice("bcc").expect("bcc reference");
    rep.push(
        "bcc: stored theta prefix matches enumeration",
        theta_prefix(&bcc, &QuadElem::from_int(2)) == bcc_theta_table(),
        "norms up to 2",
    );
    let fcc = reference_lattice("fcc").expect("fcc reference");
    rep.push(
        "fcc: stored theta prefix matches enumeration",
        theta_prefix(&fcc, &QuadElem::from_int(12)) == fcc_theta_table(),
        "norms up to 12",
    );

    for fc in frame_constants() {
        rep.push(
            format!(
                "{}: {} minimal vectors split into {} frames of {}",
                fc.lattice, fc.min_vectors, fc.frames, fc.frame_size
            ),
            fc.min_vectors == fc.frames * fc.frame_size,
            "count bookkeeping",
        );
    }
    let (bw16, _) = bw_frame_count(4);
    rep.push(
        "BW16: stored frame count matches the per-lattice table",
        bw16 == BigInt::from(135),
        "4320 minimal vectors in coordinate frames of 32",
    );
    // The closed-form product (2^j - 1) disagrees with the stored counts.
    let closed: Vec<BigInt> = (2u32..=4)
        .map(|m| {
            let mut p = BigInt::from(1);
            for j in 1..m {
                p *= (BigInt::from(1) << j) - 1;
            }
            p
        })
        .collect();
    rep.warn(
        "BW: closed-form frame-count product carried with a discrepancy flag",
        format!(
            "product of (2^j - 1) gives {}, {}, {} for dimensions 4, 8, 16 but the stored \
             counts are 3, 15, 135, the product of (2^j + 1)",
            closed[0], closed[1], closed[2]
        ),
    );

    // Coloring-search demos: recover a frame partition from scratch.
    let d4 = reference_lattice("d4").expect("d4 reference");
    let mv = real_min_vectors(&d4);
    let found = color_partition_search(&mv, FrameKind::Coordinate, 3, 1_000_000);
    rep.push(
        "D4: coloring search recovers a 3-frame partition",
        found.map(|p| verify_frame_partition(&mv, &p).ok).unwrap_or(false),
        "24 minimal vectors, coordinate frames",
    );
    if let Some((host, _)) = frame_partition("e6star4") {
        let mv = real_min_vectors(&host);
        let found = color_partition_search(&mv, FrameKind::Triangular, 4, 1_000_000);
        rep.push(
            "E6: coloring search recovers a 4-frame partition",
            found.map(|p| verify_frame_partition(&mv, &p).ok).unwrap_or(false),
            "72 minimal vectors, triangular frames",
        );
    }
    rep
}
