//! Planar cross sections of 3-D honeycombs and their SVG rendering.
//!
//! A slice fixes z to an exact rational and substitutes it into every cell
//! wall, producing one 2-D polytope per cell translate that meets the
//! requested window. Zero-area intersections are discarded.

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::{dot, norm2, vec_sub, QuadElem, Rat};

use super::poly::{CellPoly, Halfspace};
use super::{HoneycombAnalysis, HoneycombError, HoneycombFamily};

/// One polygon of the slice, tagged with its cell class.
pub struct SlicePolygon {
    pub class: usize,
    pub cell: usize,
    /// Vertices in counterclockwise cyclic order.
    pub verts: Vec<(QuadElem, QuadElem)>,
}

/// Rectangular window x0 <= x <= x1, y0 <= y <= y1.
#[derive(Debug, Clone)]
pub struct Window {
    pub x0: Rat,
    pub x1: Rat,
    pub y0: Rat,
    pub y1: Rat,
}

pub fn plane_slice(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    z: &Rat,
    window: &Window,
) -> Result<Vec<SlicePolygon>, HoneycombError> {
    if family.dim() != 3 {
        return Err(HoneycombError("plane slices need a 3-D honeycomb".into()));
    }
    if window.x0 >= window.x1 || window.y0 >= window.y1 {
        return Err(HoneycombError("empty slice window".into()));
    }
    let zq = QuadElem::from_rat(z.clone());
    let instances: Vec<_> = analysis
        .cells
        .iter()
        .map(|c| family.build_cell(&c.id).expect("known cell"))
        .collect();
    // Per-axis vertex extents, so translates that cannot meet the plane or
    // the window are rejected before any halfspace work.
    let extents: Vec<[QuadElem; 6]> = instances
        .iter()
        .map(|inst| {
            let mut e: Option<[QuadElem; 6]> = None;
            for v in &inst.poly.vertices {
                e = Some(match e {
                    None => [
                        v[0].clone(),
                        v[0].clone(),
                        v[1].clone(),
                        v[1].clone(),
                        v[2].clone(),
                        v[2].clone(),
                    ],
                    Some([x0, x1, y0, y1, z0, z1]) => [
                        x0.min(v[0].clone()),
                        x1.max(v[0].clone()),
                        y0.min(v[1].clone()),
                        y1.max(v[1].clone()),
                        z0.min(v[2].clone()),
                        z1.max(v[2].clone()),
                    ],
                });
            }
            e.expect("cells have vertices")
        })
        .collect();

    // Joint-coordinate extent of all cell vertices, and of the window slab.
    let joint = family.joint();
    let mut lo: Option<Vec<QuadElem>> = None;
    let mut hi: Option<Vec<QuadElem>> = None;
    for inst in &instances {
        for v in &inst.poly.vertices {
            let c = joint.coords_of(v);
            lo = Some(match lo {
                None => c.clone(),
                Some(l) => l.into_iter().zip(&c).map(|(a, b)| a.min(b.clone())).collect(),
            });
            hi = Some(match hi {
                None => c,
                Some(h) => h.into_iter().zip(&c).map(|(a, b)| a.max(b.clone())).collect(),
            });
        }
    }
    let (lo, hi) = (lo.unwrap(), hi.unwrap());
    let corners = [
        (&window.x0, &window.y0),
        (&window.x0, &window.y1),
        (&window.x1, &window.y0),
        (&window.x1, &window.y1),
    ];
    let mut wlo: Option<Vec<QuadElem>> = None;
    let mut whi: Option<Vec<QuadElem>> = None;
    for (x, y) in corners {
        let p = vec![
            QuadElem::from_rat(x.clone()),
            QuadElem::from_rat(y.clone()),
            zq.clone(),
        ];
        let c = joint.coords_of(&p);
        wlo = Some(match wlo {
            None => c.clone(),
            Some(l) => l.into_iter().zip(&c).map(|(a, b)| a.min(b.clone())).collect(),
        });
        whi = Some(match whi {
            None => c,
            Some(h) => h.into_iter().zip(&c).map(|(a, b)| a.max(b.clone())).collect(),
        });
    }
    let (wlo, whi) = (wlo.unwrap(), whi.unwrap());
    // Translate t reaches the window iff wlo - hi <= t <= whi - lo.
    let tlo: Vec<BigInt> =
        wlo.iter().zip(&hi).map(|(w, h)| (w - h).floor_int()).collect();
    let thi: Vec<BigInt> =
        whi.iter().zip(&lo).map(|(w, l)| -(l - w).floor_int()).collect();

    let wx0 = QuadElem::from_rat(window.x0.clone());
    let wx1 = QuadElem::from_rat(window.x1.clone());
    let wy0 = QuadElem::from_rat(window.y0.clone());
    let wy1 = QuadElem::from_rat(window.y1.clone());

    let mut out = Vec::new();
    let mut t = tlo.clone();
    'translates: loop {
        let tv = joint.point(&t);
        for (ci, inst) in instances.iter().enumerate() {
            let [ex0, ex1, ey0, ey1, ez0, ez1] = &extents[ci];
            if &zq < &(ez0 + &tv[2]) || &zq > &(ez1 + &tv[2]) {
                continue;
            }
            if &(ex1 + &tv[0]) <= &wx0
                || &(ex0 + &tv[0]) >= &wx1
                || &(ey1 + &tv[1]) <= &wy0
                || &(ey0 + &tv[1]) >= &wy1
            {
                continue;
            }
            let hs2: Vec<Halfspace> = inst
                .poly
                .halfspaces
                .iter()
                .map(|h| {
                    let shift = dot(&h.w, &tv);
                    let rhs = &(&h.rhs + &shift) - &(&h.w[2] * &zq);
                    Halfspace::new(vec![h.w[0].clone(), h.w[1].clone()], rhs)
                })
                .collect();
            if let Some(poly) = CellPoly::from_halfspaces(2, hs2) {
                // Keep polygons that overlap the window.
                let xs: Vec<&QuadElem> = poly.vertices.iter().map(|v| &v[0]).collect();
                let ys: Vec<&QuadElem> = poly.vertices.iter().map(|v| &v[1]).collect();
                let xmin = xs.iter().min().unwrap();
                let xmax = xs.iter().max().unwrap();
                let ymin = ys.iter().min().unwrap();
                let ymax = ys.iter().max().unwrap();
                if **xmax <= wx0 || **xmin >= wx1 || **ymax <= wy0 || **ymin >= wy1 {
                    continue;
                }
                out.push(SlicePolygon {
                    class: analysis.cells[ci].class,
                    cell: ci,
                    verts: cyclic_order(&poly.vertices),
                });
            }
        }
        // Odometer over the integer box [tlo, thi].
        for k in 0..t.len() {
            t[k] += BigInt::one();
            if t[k] <= thi[k] {
                continue 'translates;
            }
            t[k] = tlo[k].clone();
        }
        break;
    }
    Ok(out)
}

/// Sort polygon vertices counterclockwise around their centroid, exactly.
fn cyclic_order(verts: &[Vec<QuadElem>]) -> Vec<(QuadElem, QuadElem)> {
    let k = QuadElem::from_int(verts.len() as i64);
    let mut cx = QuadElem::zero();
    let mut cy = QuadElem::zero();
    for v in verts {
        cx = &cx + &v[0];
        cy = &cy + &v[1];
    }
    cx = &cx / &k;
    cy = &cy / &k;
    let mut keyed: Vec<(Vec<QuadElem>, usize)> = verts
        .iter()
        .map(|v| {
            let d = vec_sub(v, &[cx.clone(), cy.clone()]);
            (d, 0usize)
        })
        .collect();
    for (d, half) in keyed.iter_mut() {
        // Lower half-plane (and the negative x-axis) sorts second.
        let s = d[1].sign();
        *half = if s < 0 || (s == 0 && d[0].sign() < 0) { 1 } else { 0 };
    }
    let mut order: Vec<usize> = (0..verts.len()).collect();
    order.sort_by(|&i, &j| {
        let (di, hi) = &keyed[i];
        let (dj, hj) = &keyed[j];
        hi.cmp(hj).then_with(|| {
            let cross = &(&di[0] * &dj[1]) - &(&di[1] * &dj[0]);
            // di before dj when the turn from di to dj is counterclockwise.
            match cross.sign() {
                1 => std::cmp::Ordering::Less,
                -1 => std::cmp::Ordering::Greater,
                _ => norm2(di).cmp(&norm2(dj)),
            }
        })
    });
    order
        .into_iter()
        .map(|i| (verts[i][0].clone(), verts[i][1].clone()))
        .collect()
}

const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
];

/// Render a slice to a standalone SVG at 60 px per unit, y up.
pub fn render_svg(polys: &[SlicePolygon], window: &Window) -> String {
    let px = 60.0;
    let x0 = super::rat_f64(&window.x0) * px;
    let y1 = super::rat_f64(&window.y1) * px;
    let w = (super::rat_f64(&window.x1) - super::rat_f64(&window.x0)) * px;
    let h = (super::rat_f64(&window.y1) - super::rat_f64(&window.y0)) * px;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">\n",
        x0, -y1, w, h
    ));
    svg.push_str(&format!(
        "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"white\"/>\n",
        x0, -y1, w, h
    ));
    for p in polys {
        let pts: Vec<String> = p
            .verts
            .iter()
            .map(|(x, y)| format!("{:.4},{:.4}", x.to_f64() * px, -y.to_f64() * px))
            .collect();
        svg.push_str(&format!(
            "<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.75\" stroke=\"#333\" stroke-width=\"1\"/>\n",
            pts.join(" "),
            PALETTE[p.class % PALETTE.len()]
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
