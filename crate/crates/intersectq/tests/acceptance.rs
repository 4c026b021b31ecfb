//! Acceptance gate: twelve numbered end-to-end checks over the whole crate.
//!
//! Each test prints one `criterion N: PASS|FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`). PASS means every recorded
//! reference constant for that check is reproduced by exact recomputation.
//! FAIL means some recorded constant is not reproducible; the line names the
//! computed replacement. Either way the assertions pin the computed truth
//! exactly, so any regression in the library turns the test red.
//!
//! Tolerances: exact values compare with `==` (zero tolerance); floating
//! summaries of exact values must sit within 1e-12 of the exact figure;
//! recorded decimals are audited at the tolerance named in each check.

use std::sync::LazyLock;
use std::time::Instant;

use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};

use intersectq::catalog::{
    self, counting_identities, d4_s3_generators, frame_partition, similarity_certificate,
};
use intersectq::exactmath::{
    dot, norm2, rat, row_times_mat, vec_sub, ExactProduct, FieldMat, QuadElem, Rat,
};
use intersectq::honeycomb::{
    analyze, plane_slice, render_svg, HoneycombAnalysis, HoneycombFamily, Window,
};
use intersectq::lattice::{
    class_counting_sum, min_norm, vectors_of_norm, verify_frame_partition, FrameKind, Lattice,
};
use intersectq::mcverify::{corroborate, sample_coeffs, McConfig};
use intersectq::quantize::{nearest_point_oracle, voronoi_halfspaces, QuantizerSpec};

struct Setup {
    family: HoneycombFamily,
    analysis: HoneycombAnalysis,
    analyze_secs: f64,
}

fn setup(name: &str) -> Setup {
    let dec = catalog::get(name).expect("catalog name");
    let family = HoneycombFamily::new(dec.component_lattices()).expect("family");
    let t0 = Instant::now();
    let analysis = analyze(&family, 1_000_000).expect("analysis");
    Setup { family, analysis, analyze_secs: t0.elapsed().as_secs_f64() }
}

static HEX: LazyLock<Setup> = LazyLock::new(|| setup("hexagonal3"));
static BCC: LazyLock<Setup> = LazyLock::new(|| setup("bcc3"));
static FCC: LazyLock<Setup> = LazyLock::new(|| setup("fcc4"));
static D4: LazyLock<Setup> = LazyLock::new(|| setup("d4_3"));

fn line(n: u32, pass: bool, msg: &str) {
    println!("criterion {n}: {} - {msg}", if pass { "PASS" } else { "FAIL" });
}

fn q(n: i64, d: i64) -> QuadElem {
    QuadElem::from_rat(rat(n, d))
}

/// (n/d) * sqrt(3).
fn q3(n: i64, d: i64) -> QuadElem {
    QuadElem::root_part(rat(n, d), 3)
}

fn product(coeff: QuadElem, powers: &[(i64, i64, i64)], d: u64) -> ExactProduct {
    let mut p = ExactProduct::from_coeff(coeff);
    for &(base, en, ed) in powers {
        p.mul_pow(&rat(base, 1), &rat(en, ed));
    }
    p.normalized(d)
}

/// Exactly one class carries the (volume, second moment, count) signature.
fn class_with(a: &HoneycombAnalysis, v: &QuadElem, u: &QuadElem, n: u64) -> usize {
    let hits: Vec<usize> = (0..a.classes.len())
        .filter(|&k| {
            let c = &a.classes[k];
            &c.volume == v && &c.second_moment == u && c.count == n
        })
        .collect();
    assert_eq!(hits.len(), 1, "signature V={v} U={u} N={n} not unique");
    hits[0]
}

fn no_class_with(a: &HoneycombAnalysis, v: &QuadElem, u: &QuadElem) -> bool {
    a.classes.iter().all(|c| !(&c.volume == v && &c.second_moment == u))
}

#[test]
fn criterion_01_intersection_identities() {
    for (name, ratio) in
        [("hexagonal3", 4), ("bcc3", 4), ("d4_3", 2), ("fcc4", 9)]
    {
        let dec = catalog::get(name).unwrap();
        let comps = dec.component_lattices();
        let refs: Vec<&Lattice> = comps.iter().collect();
        let inter = Lattice::intersect(&refs).unwrap();
        let expected = dec.expected_lattice();
        assert!(inter.eq_lattice(&expected), "{name}: intersection mismatch");
        let (_, ref_lat, stored) = similarity_certificate(name).unwrap();
        assert_eq!(stored, QuadElem::from_int(ratio), "{name}: certificate ratio");
        assert_eq!(expected.similar_to(&ref_lat).unwrap(), stored, "{name}: similarity");
    }
    // Two of the three components already cut out the same intersection.
    let dec = catalog::get("d4_3").unwrap();
    let comps = dec.component_lattices();
    let two = Lattice::intersect(&[&comps[0], &comps[1]]).unwrap();
    assert!(two.eq_lattice(&dec.expected_lattice()), "d4_3 two-lattice variant");
    // The quadruple intersection in explicit generator form.
    let fcc = Lattice::from_int_rows(&[&[3, 3, 0], &[3, -3, 0], &[0, 3, -3]]);
    assert!(catalog::get("fcc4").unwrap().expected_lattice().eq_lattice(&fcc));
    line(1, true, "all four intersections match their recorded lattices exactly (Hermite forms equal), including the d4 two-lattice variant");
}

#[test]
fn criterion_02_frame_partitions() {
    let t0 = Instant::now();
    for (name, parts, kind) in [
        ("d4_3", 3, FrameKind::Coordinate),
        ("e8_15", 15, FrameKind::Coordinate),
        ("e8_10", 10, FrameKind::Triangular),
        ("e6star4", 4, FrameKind::Triangular),
    ] {
        let (host, part) = frame_partition(name).expect("stored partition");
        assert_eq!(part.kind, kind, "{name}: frame kind");
        assert_eq!(part.parts.len(), parts, "{name}: part count");
        let m = min_norm(&host);
        let mv: Vec<Vec<QuadElem>> =
            vectors_of_norm(&host, &m).iter().map(|c| host.point(c)).collect();
        let used: usize = part.parts.iter().map(|p| p.len()).sum();
        assert_eq!(used, mv.len(), "{name}: partition covers every minimal vector");
        let check = verify_frame_partition(&mv, &part);
        assert!(check.ok, "{name}: {:?}", check.failures);
    }
    let secs = t0.elapsed().as_secs_f64();
    assert!(secs < 60.0, "frame partitions took {secs:.1}s");
    line(2, true, &format!("coordinate frames 3/15 and triangular frames 10/4 all verify against recomputed minimal vectors in {secs:.1}s (< 60s)"));
}

#[test]
fn criterion_03_class_counting_identities() {
    let ids = counting_identities();
    let find = |name: &str| ids.iter().find(|i| i.lattice == name).unwrap();
    let e8 = find("E8");
    assert!(e8.holds_as_stated);
    assert_eq!(class_counting_sum(&e8.terms), rat(256, 1));
    let leech = find("Leech");
    assert!(leech.holds_as_stated);
    assert_eq!(class_counting_sum(&leech.terms), rat(1 << 24, 1));
    let k12 = find("K12");
    assert!(!k12.holds_as_stated);
    assert_eq!(class_counting_sum(&k12.terms), rat(6112, 1));
    let fixed = k12.corrected.as_ref().unwrap();
    assert_eq!(class_counting_sum(fixed), rat(4096, 1));
    line(3, true, "Leech and E8 sums hit 2^24 and 2^8 exactly; the K12 sum as recorded stops at 6112 and reaches 4096 once the 4032-vector term is halved - both facts asserted");
}

#[test]
fn criterion_04_hexagonal_honeycomb() {
    let a = &HEX.analysis;
    assert_eq!(a.classes.len(), 4);
    assert_eq!(a.tile_volume, q3(2, 1));
    class_with(a, &q3(1, 2), &q3(5, 72), 1);
    class_with(a, &q3(1, 12), &q3(1, 432), 6);
    class_with(a, &q3(1, 12), &q3(5, 1296), 6);
    class_with(a, &q3(1, 4), &q3(1, 48), 2);
    for c in &a.classes {
        assert_eq!(c.p, rat(1, 4));
    }
    let g = product(q(1, 27), &[(2, 7, 4)], 3);
    assert_eq!(a.merit.g, g);
    let gf = a.merit.g_float;
    assert!((gf - 2f64.powf(7.0 / 4.0) / 27.0).abs() < 1e-12);
    // The recorded nine-digit decimal does not match the exact value.
    let gap = (gf - 0.124577093).abs();
    assert!(gap > 1e-9 && gap < 1e-6, "decimal gap {gap:e}");
    line(4, false, "classes {(sqrt3/2, 5sqrt3/72), (sqrt3/12, sqrt3/432)x6, (sqrt3/12, 5sqrt3/1296)x6, (sqrt3/4, sqrt3/48)x2}, p_i = 1/4, and G = 2^(7/4)/27 all exact; but G = 0.1245772467..., not within 1e-9 of the recorded decimal 0.124577093 (off by 1.5e-7)");
}

#[test]
fn criterion_05_bcc_honeycomb() {
    let a = &BCC.analysis;
    assert_eq!(a.classes.len(), 4);
    assert_eq!(a.tile_volume, q(4, 1));
    // Computed cell table; two recorded second moments are not reproducible.
    class_with(a, &q(1, 1), &q(1, 4), 1);
    class_with(a, &q(1, 6), &q(7, 384), 6);
    class_with(a, &q(1, 24), &q(1, 512), 24);
    class_with(a, &q(1, 12), &q(7, 1536), 12);
    assert!(no_class_with(a, &q(1, 6), &q(11, 600)));
    assert!(no_class_with(a, &q(1, 12), &q(1, 192)));
    // Volume closure 4 = 1 + 1 + 1 + 1, one unit per class, so p_i = 1/4.
    for c in &a.classes {
        assert_eq!(&QuadElem::from_int(c.count as i64) * &c.volume, q(1, 1));
        assert_eq!(c.p, rat(1, 4));
    }
    let g = product(q(59, 768), &[(3, 1, 2)], 1);
    assert_eq!(a.merit.g, g);
    assert_ne!(a.merit.g, product(q(751, 9600), &[(3, 1, 2)], 1));
    let gf = a.merit.g_float;
    assert!((gf - 59.0 * 3f64.sqrt() / 768.0).abs() < 1e-12);
    assert!((gf - 0.135496).abs() > 2e-3, "recorded decimal unexpectedly close");
    line(5, false, "volumes, counts (1,6,24,12), closure 4=1+1+1+1, and U = 1/4, 1/512 reproduce; but U_2 = 7/384 (recorded 11/600), U_4 = 7/1536 (recorded 1/192), and G = 59*sqrt3/768 = 0.133061 (recorded 751*sqrt3/9600 = 0.135496)");
}

#[test]
fn criterion_06_d4_honeycomb_table() {
    let s = &*D4;
    let a = &s.analysis;
    assert_eq!(a.classes.len(), 4);
    assert_eq!(a.tile_volume, q(32, 1));
    // Recorded rows in their original order: (v, f, N, V, U). Row 2's
    // second moment is the one entry exact recomputation contradicts.
    let rows: [(usize, usize, u64, QuadElem, QuadElem, Option<QuadElem>); 4] = [
        (24, 24, 1, q(8, 1), q(104, 15), None),
        (7, 9, 24, q(1, 3), q(17, 225), Some(q(8, 105))),
        (5, 5, 96, q(1, 12), q(11, 900), None),
        (6, 9, 32, q(1, 4), q(1, 20), None),
    ];
    for (v, f, n, vol, u_true, u_recorded) in rows {
        let k = class_with(a, &vol, &u_true, n);
        let fp = &a.classes[k].fingerprint;
        assert_eq!(fp.vertices, v);
        assert_eq!(fp.facets, f);
        assert_eq!(fp.edges, None, "edge counts are not tracked in 4-D");
        assert_eq!(a.classes[k].p, rat(1, 4));
        if let Some(bad) = u_recorded {
            assert_ne!(a.classes[k].second_moment, bad);
        }
    }
    let g = product(q(9, 100), &[(2, 1, 8), (3, 1, 4)], 1);
    assert_eq!(a.merit.g, g);
    assert_ne!(a.merit.g, product(q(757, 8400), &[(2, 1, 8), (3, 1, 4)], 1));
    let gf = a.merit.g_float;
    let expect = 0.09 * 2f64.powf(0.125) * 3f64.powf(0.25);
    assert!((gf - expect).abs() < 1e-12);
    assert!((gf - 0.129338).abs() > 1e-4, "recorded decimal unexpectedly close");
    assert!(s.analyze_secs < 180.0, "analysis took {:.1}s", s.analyze_secs);
    line(6, false, &format!("all (v, f, N, V, p) columns and three of four U values reproduce (24-cell has 24 vertices); but U_2 = 17/225 (recorded 8/105) and G = (9/100)*2^(1/8)*3^(1/4) = 0.129167 (recorded (757/8400)*... = 0.129338); analyzed in {:.1}s (< 180s)", s.analyze_secs));
}

#[test]
fn criterion_07_fcc_honeycomb_table() {
    let s = &*FCC;
    let a = &s.analysis;
    assert_eq!(a.classes.len(), 12);
    assert_eq!(a.tile_volume, q(54, 1));
    // Recorded rows in their original order: (v, e, f, N, V, p, U_true,
    // U_recorded when it differs). Five of twelve second moments
    // reproduce; seven do not.
    struct Row {
        v: usize,
        e: usize,
        f: usize,
        n: u64,
        vol: QuadElem,
        p: Rat,
        u_true: QuadElem,
        u_recorded: Option<QuadElem>,
    }
    let row = |v, e, f, n, vol, p, u_true, u_recorded| Row { v, e, f, n, vol, p, u_true, u_recorded };
    let rows = [
        row(26, 48, 24, 1, q(9, 1), rat(1, 6), q(1449, 160), None),
        row(6, 12, 8, 24, q(1, 4), rat(1, 9), q(9, 320), None),
        row(5, 9, 6, 24, q(1, 10), rat(2, 45), q(2707, 320000), Some(q(427, 50000))),
        row(4, 6, 4, 48, q(1, 40), rat(1, 45), q(443, 320000), None),
        row(10, 18, 10, 8, q(27, 40), rat(1, 10), q(328099, 1280000), Some(q(41013, 160000))),
        row(6, 12, 8, 6, q(1, 1), rat(1, 9), q(83, 320), Some(q(47, 180))),
        row(5, 9, 6, 8, q(3, 8), rat(1, 18), q(119, 2048), Some(q(189, 3200))),
        row(4, 6, 4, 24, q(1, 40), rat(1, 90), q(1897, 1280000), None),
        row(5, 8, 5, 24, q(3, 40), rat(1, 30), q(7011, 1280000), Some(q(2319, 400000))),
        row(22, 36, 16, 2, q(63, 10), rat(7, 30), q(213597, 40000), None),
    ];
    for r in &rows {
        let k = class_with(a, &r.vol, &r.u_true, r.n);
        let fp = &a.classes[k].fingerprint;
        assert_eq!((fp.vertices, fp.edges, fp.facets), (r.v, Some(r.e), r.f));
        assert_eq!(a.classes[k].p, r.p);
        if let Some(bad) = &r.u_recorded {
            assert_ne!(&a.classes[k].second_moment, bad);
        }
    }
    // Two mirror-image kite-pyramid classes share one row shape, recorded
    // twice: both computed moments are 129/10240, and the recorded
    // 41/3200 matches neither.
    let kites: Vec<_> = a
        .classes
        .iter()
        .filter(|c| c.volume == q(1, 8) && c.count == 24)
        .collect();
    assert_eq!(kites.len(), 2);
    for k in kites {
        let fp = &k.fingerprint;
        assert_eq!((fp.vertices, fp.edges, fp.facets), (5, Some(8), 5));
        assert_eq!(k.p, rat(1, 18));
        assert_eq!(k.second_moment, q(129, 10240));
        assert_ne!(k.second_moment, q(41, 3200));
    }
    // Volume closure over all twelve classes.
    let mut total = QuadElem::zero();
    for c in &a.classes {
        total = &total + &(&QuadElem::from_int(c.count as i64) * &c.volume);
    }
    assert_eq!(total, q(54, 1));
    let g = product(q(709, 47250), &[(3, 28, 135), (5, 8, 27), (7, 38, 45)], 1);
    assert_eq!(a.merit.g, g);
    assert_ne!(
        a.merit.g,
        product(q(12269777, 816480000), &[(3, 28, 135), (5, 8, 27), (7, 38, 45)], 1)
    );
    let gf = a.merit.g_float;
    let expect = (709.0 / 47250.0)
        * 3f64.powf(28.0 / 135.0)
        * 5f64.powf(8.0 / 27.0)
        * 7f64.powf(38.0 / 45.0);
    assert!((gf - expect).abs() < 1e-12);
    let gap = (gf - 0.1572).abs();
    assert!(gap > 1e-4 && gap < 3e-4, "recorded decimal gap {gap:e}");
    assert!(s.analyze_secs < 300.0, "analysis took {:.1}s", s.analyze_secs);
    line(7, false, &format!("all 12 rows of (v, e, f, N, V, p) and the closure sum 54 reproduce; five of twelve U values match, seven do not (e.g. kite pyramids 129/10240 vs recorded 41/3200), and G = (709/47250)*3^(28/135)*5^(8/27)*7^(38/45) = 0.157016, 1.8e-4 from the recorded 0.1572 (> 1e-4); analyzed in {:.1}s (< 300s)", s.analyze_secs));
}

/// Class index by (volume, count) signature.
fn class_by_shape(a: &HoneycombAnalysis, vol: &QuadElem, n: u64) -> usize {
    let hits: Vec<usize> =
        (0..a.classes.len()).filter(|&k| &a.classes[k].volume == vol && a.classes[k].count == n).collect();
    assert_eq!(hits.len(), 1);
    hits[0]
}

#[test]
fn criterion_08_incidence_adjacencies() {
    // Class indices by shape, in the recorded row order of each table.
    let b = &BCC.analysis;
    let (b1, b2, b3, b4) = (
        class_by_shape(b, &q(1, 1), 1),
        class_by_shape(b, &q(1, 6), 6),
        class_by_shape(b, &q(1, 24), 24),
        class_by_shape(b, &q(1, 12), 12),
    );
    assert_eq!(b.incidence[b1][b2], 6, "cube meets six pyramids");
    // Recorded claim: eight tetrahedra around each pyramid. A square
    // pyramid has four triangular side faces, and the computed incidence
    // agrees with four.
    assert_eq!(b.incidence[b2][b3], 4);
    assert_eq!(b.incidence[b2][b1], 1);
    assert_eq!(b.incidence[b3][b4], 3, "three tetrahedron faces reach quarter-octahedra");
    let row4 = &b.incidence[b4];
    assert_eq!(row4[b3] as usize, b.classes[b4].fingerprint.facets, "every quarter-octahedron facet meets a tetrahedron");
    assert_eq!(row4[b1] + row4[b2] + row4[b4], 0);

    let d = &D4.analysis;
    let (d1, d2, d3, d4c) = (
        class_by_shape(d, &q(8, 1), 1),
        class_by_shape(d, &q(1, 3), 24),
        class_by_shape(d, &q(1, 12), 96),
        class_by_shape(d, &q(1, 4), 32),
    );
    assert_eq!(d.incidence[d1][d2], 24, "24-cell meets 24 pyramids");
    assert_eq!(d.incidence[d2][d3], 8, "eight simplex faces around each pyramid");
    assert_eq!(d.incidence[d3][d4c], 3, "three of five simplex faces reach triangle products");
    // The shared pyramid facets really are octahedra: every facet of the
    // 24-cell instance carries six vertices.
    let rep = &d.cells[d.classes[d1].members[0]];
    let inst = D4.family.build_cell(&rep.id).unwrap();
    assert_eq!(inst.poly.facets.len(), 24);
    for f in &inst.poly.facets {
        assert_eq!(f.verts.len(), 6);
    }
    // Double counting: directed facet counts agree between every class pair.
    for (name, a) in [("hexagonal", &HEX.analysis), ("bcc", b), ("fcc", &FCC.analysis), ("d4", d)] {
        for i in 0..a.classes.len() {
            for j in 0..a.classes.len() {
                assert_eq!(
                    a.classes[i].count * a.incidence[i][j],
                    a.classes[j].count * a.incidence[j][i],
                    "{name}: classes {i},{j}"
                );
            }
        }
    }
    line(8, false, "every adjacency claim holds except one: the bcc square pyramid meets 4 tetrahedra (a pyramid has four triangular side faces), not the recorded 8; double-counting N_i*s_ij = N_j*s_ji holds across all four honeycombs");
}

#[test]
fn criterion_09_quantizer_oracle_equivalence() {
    let t0 = Instant::now();
    let mut low = 0u64;
    let mut high = 0u64;
    for name in catalog::NAMES {
        let dec = catalog::get(name).unwrap();
        for (ci, lat) in dec.component_lattices().into_iter().enumerate() {
            let n = lat.dim();
            let spec = QuantizerSpec::with_default_radius(lat.clone());
            // In five or more dimensions the exhaustive box is too large,
            // so the independent check is the Voronoi inequality system:
            // the returned point is nearest iff the residual satisfies
            // every relevant-vector halfspace.
            let cell = if n > 4 { Some(voronoi_halfspaces(spec.lattice())) } else { None };
            for k in 0..500u64 {
                let u = sample_coeffs(0xC9, k, n);
                let coeffs: Vec<QuadElem> = u
                    .iter()
                    .map(|ui| QuadElem::from_rat((ui - rat(1, 2)) * rat(3, 1)))
                    .collect();
                let x = row_times_mat(&coeffs, spec.lattice().gen());
                let got = spec.nearest_point(&x);
                assert_eq!(norm2(&vec_sub(&x, &got.point)), got.dist2, "{name}#{ci}");
                match &cell {
                    None => {
                        let want = nearest_point_oracle(spec.lattice(), &x, 2);
                        assert_eq!(got, want, "{name}#{ci} point {k}");
                        low += 1;
                    }
                    Some(hs) => {
                        let diff = vec_sub(&x, &got.point);
                        for (w, rhs) in hs {
                            assert!(dot(&diff, w) <= *rhs, "{name}#{ci} point {k}");
                        }
                        high += 1;
                    }
                }
            }
        }
    }
    let secs = t0.elapsed().as_secs_f64();
    line(9, true, &format!("zero mismatches on 500 points per component lattice: {low} checked against the exhaustive box oracle (dim <= 4), {high} certified by the relevant-vector halfspace system (dim > 4), in {secs:.0}s"));
}

#[test]
fn criterion_10_monte_carlo_concordance() {
    let cfg = McConfig { seed: 1, samples: 100_000 };
    let mut msgs = Vec::new();
    for (name, s) in [("hexagonal", &*HEX), ("bcc", &*BCC), ("d4", &*D4)] {
        let rep = corroborate(&s.family, &s.analysis, &cfg).expect("no orphans");
        let hits: u64 = rep.probabilities.classes.iter().map(|c| c.hits).sum();
        assert_eq!(hits, cfg.samples, "{name}: every sample classified");
        assert!(rep.probabilities.max_abs_z <= 3.0, "{name}: class frequency z");
        assert!(rep.mse.z.abs() <= 3.0, "{name}: mse z");
        let p_total: Rat = s.analysis.classes.iter().map(|c| c.p.clone()).sum();
        assert_eq!(p_total, rat(1, 1));
        msgs.push(format!(
            "{name} max|z|={:.2}, mse z={:+.2}",
            rep.probabilities.max_abs_z, rep.mse.z
        ));
    }
    line(10, true, &format!("10^5 samples each, all class frequencies and mean squared errors within 3 standard errors, zero orphans ({})", msgs.join("; ")));
}

#[test]
fn criterion_11_property_suites() {
    // Volume closure, exact, for all four honeycombs.
    for (s, tile) in [(&*HEX, q3(2, 1)), (&*BCC, q(4, 1)), (&*FCC, q(54, 1)), (&*D4, q(32, 1))] {
        let mut total = QuadElem::zero();
        for c in &s.analysis.classes {
            total = &total + &(&QuadElem::from_int(c.count as i64) * &c.volume);
        }
        assert_eq!(total, tile);
        assert_eq!(s.analysis.tile_volume, tile);
    }

    // Neighbor involution: crossing a facet and crossing back is the
    // identity, on a thousand randomly chosen facets.
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
    for (s, trials) in [(&*HEX, 300u32), (&*BCC, 400), (&*FCC, 300)] {
        for _ in 0..trials {
            let ci = rng.next_u32() as usize % s.analysis.cells.len();
            let inst = s.family.build_cell(&s.analysis.cells[ci].id).unwrap();
            let fi = rng.next_u32() as usize % inst.poly.facets.len();
            let (nid, shift) = s.family.neighbor(&inst, fi);
            let back = s.family.build_cell(&nid).unwrap();
            let neg: Vec<BigInt> = shift.iter().map(|x| -x.clone()).collect();
            let returns = (0..back.poly.facets.len())
                .filter(|&fj| {
                    let (rid, rshift) = s.family.neighbor(&back, fj);
                    rid == inst.id && rshift == neg
                })
                .count();
            assert_eq!(returns, 1, "facet crossing must invert uniquely");
        }
    }

    // The stored three-fold symmetry permutes the components and fixes
    // every cell class of the d4 honeycomb.
    let comps = D4.family.components();
    for g in d4_s3_generators() {
        for l in comps {
            let image = Lattice::from_gen(l.gen().matmul(&g), 1).unwrap();
            assert!(comps.iter().any(|c| image.eq_lattice(c)), "symmetry permutes components");
        }
        for (k, class) in D4.analysis.classes.iter().enumerate() {
            let rep = &D4.analysis.cells[class.members[0]];
            let moved = row_times_mat(&rep.centroid, &g);
            let hit = D4.analysis.classify(&D4.family, &moved).expect("image classified");
            assert_eq!(hit.class, k, "class preserved under symmetry");
            assert_eq!(
                D4.analysis.classes[hit.class].fingerprint,
                class.fingerprint
            );
        }
    }

    // Dual involution and canonical-form idempotence on random lattices.
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(12);
    let mut produced = 0u32;
    while produced < 60 {
        let dim = 2 + (rng.next_u32() as usize % 3);
        let d = [1u64, 2, 3, 5][rng.next_u32() as usize % 4];
        let mut rows = Vec::with_capacity(dim);
        for _ in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for _ in 0..dim {
                let a = rat(rng.next_u32() as i64 % 9 - 4, 1 + rng.next_u32() as i64 % 3);
                let b = if d == 1 {
                    Rat::from_integer(0.into())
                } else {
                    rat(rng.next_u32() as i64 % 5 - 2, 1 + rng.next_u32() as i64 % 2)
                };
                row.push(&QuadElem::from_rat(a) + &QuadElem::root_part(b, d));
            }
            rows.push(row);
        }
        let Ok(lat) = Lattice::from_gen(FieldMat::from_rows(rows), d) else {
            continue;
        };
        produced += 1;
        assert!(lat.dual().dual().eq_lattice(&lat), "dual is an involution");
        let again = Lattice::from_gen(lat.gen().clone(), d).unwrap();
        assert_eq!(again.gen(), lat.gen(), "canonical form is idempotent");
    }
    line(11, true, "volume closures exact for all four honeycombs; neighbor crossing inverts uniquely on 1000 random facets; the stored 3-fold symmetry permutes components and fixes every d4 class; dual involution and canonical-form idempotence hold on 60 random lattices");
}

#[test]
fn criterion_12_slice_reproduction() {
    let s = &*FCC;
    let window = Window { x0: rat(-3, 1), x1: rat(9, 1), y0: rat(-6, 1), y1: rat(6, 1) };
    let z0 = rat(0, 1);
    let polys = plane_slice(&s.family, &s.analysis, &z0, &window).unwrap();
    let mut seen: Vec<usize> = polys.iter().map(|p| p.class).collect();
    seen.sort_unstable();
    seen.dedup();

    // Shape signatures of the recorded figure: the octagon cell, the
    // small kite, and the large dart, located from their published
    // coordinates. The kite is a section of the 24-per-tile octahedron
    // class and the dart a section of the 6-per-tile octahedron class;
    // the recorded caption instead names the kite-pyramid and capped
    // tetrahedron classes, which only touch this plane along edges.
    let octagon = class_by_shape(&s.analysis, &q(9, 1), 1);
    let kite = class_by_shape(&s.analysis, &q(1, 4), 24);
    let dart = class_by_shape(&s.analysis, &q(1, 1), 6);
    assert_eq!(seen, {
        let mut want = vec![octagon, kite, dart];
        want.sort_unstable();
        want
    });
    let has_polygon = |class: usize, verts: &[(QuadElem, QuadElem)]| {
        polys.iter().any(|p| {
            p.class == class
                && p.verts.len() == verts.len()
                && verts.iter().all(|v| p.verts.contains(v))
        })
    };
    let pt = |xn: i64, xd: i64, yn: i64, yd: i64| (q(xn, xd), q(yn, yd));
    assert!(has_polygon(
        octagon,
        &[
            pt(3, 2, 0, 1),
            pt(-3, 2, 0, 1),
            pt(0, 1, 3, 2),
            pt(0, 1, -3, 2),
            pt(1, 1, 1, 1),
            pt(1, 1, -1, 1),
            pt(-1, 1, 1, 1),
            pt(-1, 1, -1, 1),
        ]
    ));
    assert!(has_polygon(kite, &[pt(3, 2, 0, 1), pt(1, 1, 1, 1), pt(3, 2, 3, 2), pt(2, 1, 1, 1)]));
    assert!(has_polygon(dart, &[pt(3, 2, 0, 1), pt(2, 1, 1, 1), pt(3, 1, 0, 1), pt(2, 1, -1, 1)]));

    let svg = render_svg(&polys, &window);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("<polygon"));

    let z35 = rat(7, 20);
    let polys35 = plane_slice(&s.family, &s.analysis, &z35, &window).unwrap();
    let mut seen35: Vec<usize> = polys35.iter().map(|p| p.class).collect();
    seen35.sort_unstable();
    seen35.dedup();
    assert_eq!(seen35, (0..12usize).collect::<Vec<_>>());
    line(12, false, "z=0 shows exactly three classes whose sections match the recorded drawing (octagon, small kite, large dart), but they are table rows {1, 3, 8}, not the recorded {1, 2, 9}: the recorded pair touches z=0 only along edges, while the published row-3 and row-8 octahedron coordinates straddle it; z=7/20 shows all 12 classes");
}
