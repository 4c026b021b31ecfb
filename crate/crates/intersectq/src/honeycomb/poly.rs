//! Exact convex polytopes from bounding halfspaces.
//!
//! Vertices come from solving every n-subset of the bounding hyperplanes and
//! keeping the feasible solutions; an incremental row echelon prunes dependent
//! subsets early. Faces are identified by their vertex sets. Volume and second
//! moments integrate over a cone triangulation: apex at the vertex centroid,
//! each facet fanned recursively from its lexicographically first vertex.

use std::collections::BTreeSet;

use crate::exactmath::{dot, norm2, vec_add, vec_sub, FieldMat, QuadElem, Rat};

/// One bounding constraint w . x <= rhs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub w: Vec<QuadElem>,
    pub rhs: QuadElem,
}

impl Halfspace {
    pub fn new(w: Vec<QuadElem>, rhs: QuadElem) -> Halfspace {
        Halfspace { w, rhs }
    }

    pub fn satisfied_by(&self, x: &[QuadElem]) -> bool {
        dot(&self.w, x) <= self.rhs
    }

    pub fn tight_at(&self, x: &[QuadElem]) -> bool {
        dot(&self.w, x) == self.rhs
    }
}

#[derive(Debug, Clone)]
pub struct Facet {
    /// Index into the halfspace list.
    pub halfspace: usize,
    /// Sorted vertex indices on the facet.
    pub verts: Vec<usize>,
}

/// A bounded full-dimensional polytope with its face lattice entry points.
#[derive(Debug, Clone)]
pub struct CellPoly {
    pub n: usize,
    pub halfspaces: Vec<Halfspace>,
    /// Lex-sorted vertex coordinates.
    pub vertices: Vec<Vec<QuadElem>>,
    /// tight[v] = sorted indices of halfspaces exactly met at vertex v.
    pub tight: Vec<Vec<usize>>,
    pub facets: Vec<Facet>,
}

struct EchRow {
    coef: Vec<QuadElem>,
    rhs: QuadElem,
    pivot: usize,
}

/// Reduce (w, rhs) against the echelon rows; None when dependent.
fn reduce_row(hs: &Halfspace, rows: &[EchRow]) -> Option<EchRow> {
    let mut coef = hs.w.clone();
    let mut rhs = hs.rhs.clone();
    for r in rows {
        let f = coef[r.pivot].clone();
        if f.is_zero() {
            continue;
        }
        for c in 0..coef.len() {
            coef[c] = &coef[c] - &(&f * &r.coef[c]);
        }
        rhs = &rhs - &(&f * &r.rhs);
    }
    let pivot = coef.iter().position(|c| !c.is_zero())?;
    let lead = coef[pivot].clone();
    for c in coef.iter_mut() {
        *c = &*c / &lead;
    }
    rhs = &rhs / &lead;
    Some(EchRow { coef, rhs, pivot })
}

/// Back-substitute a full-rank echelon system into a point.
fn solve_rows(rows: &[EchRow], n: usize) -> Vec<QuadElem> {
    let mut x = vec![QuadElem::zero(); n];
    for k in (0..rows.len()).rev() {
        let r = &rows[k];
        let mut v = r.rhs.clone();
        for later in &rows[k + 1..] {
            let c = &r.coef[later.pivot];
            if !c.is_zero() {
                v = &v - &(c * &x[later.pivot]);
            }
        }
        x[r.pivot] = v;
    }
    x
}

/// All vertices of the intersection of the halfspaces, lex sorted.
pub fn enumerate_vertices(n: usize, halfspaces: &[Halfspace]) -> Vec<Vec<QuadElem>> {
    let all: Vec<usize> = (0..halfspaces.len()).collect();
    enumerate_vertices_pruned(n, halfspaces, &all)
}

/// Vertex enumeration restricted to n-subsets of `cands`, with feasibility
/// still checked against the full list. Sound whenever every hyperplane that
/// can be tight somewhere on the body is in `cands`.
pub fn enumerate_vertices_pruned(
    n: usize,
    halfspaces: &[Halfspace],
    cands: &[usize],
) -> Vec<Vec<QuadElem>> {
    let mut out: BTreeSet<Vec<QuadElem>> = BTreeSet::new();
    let mut rows: Vec<EchRow> = Vec::new();
    rec_vertices(n, halfspaces, cands, 0, &mut rows, &mut out);
    out.into_iter().collect()
}

fn rec_vertices(
    n: usize,
    hs: &[Halfspace],
    cands: &[usize],
    start: usize,
    rows: &mut Vec<EchRow>,
    out: &mut BTreeSet<Vec<QuadElem>>,
) {
    if rows.len() == n {
        let x = solve_rows(rows, n);
        if hs.iter().all(|h| h.satisfied_by(&x)) {
            out.insert(x);
        }
        return;
    }
    let need = n - rows.len();
    let mut j = start;
    while j + need <= cands.len() {
        if let Some(row) = reduce_row(&hs[cands[j]], rows) {
            rows.push(row);
            rec_vertices(n, hs, cands, j + 1, rows, out);
            rows.pop();
        }
        j += 1;
    }
}

/// Dimension of the affine hull of a point set (0 for a single point).
pub fn affine_dim(points: &[&Vec<QuadElem>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<QuadElem>> =
        points[1..].iter().map(|p| vec_sub(p, points[0])).collect();
    FieldMat::from_rows(rows).rank()
}

impl CellPoly {
    /// None when the intersection is empty or not full-dimensional.
    pub fn from_halfspaces(n: usize, halfspaces: Vec<Halfspace>) -> Option<CellPoly> {
        let all: Vec<usize> = (0..halfspaces.len()).collect();
        CellPoly::from_halfspaces_pruned(n, halfspaces, &all)
    }

    /// As `from_halfspaces`, but vertex subsets are drawn only from `cands`.
    pub fn from_halfspaces_pruned(
        n: usize,
        halfspaces: Vec<Halfspace>,
        cands: &[usize],
    ) -> Option<CellPoly> {
        let vertices = enumerate_vertices_pruned(n, &halfspaces, cands);
        if vertices.len() < n + 1 {
            return None;
        }
        let refs: Vec<&Vec<QuadElem>> = vertices.iter().collect();
        if affine_dim(&refs) < n {
            return None;
        }
        let tight: Vec<Vec<usize>> = vertices
            .iter()
            .map(|v| {
                (0..halfspaces.len())
                    .filter(|&h| halfspaces[h].tight_at(v))
                    .collect()
            })
            .collect();
        let mut facets = Vec::new();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for h in 0..halfspaces.len() {
            let verts: Vec<usize> =
                (0..vertices.len()).filter(|&v| tight[v].contains(&h)).collect();
            let pts: Vec<&Vec<QuadElem>> = verts.iter().map(|&v| &vertices[v]).collect();
            if !pts.is_empty() && affine_dim(&pts) == n - 1 && seen.insert(verts.clone()) {
                facets.push(Facet { halfspace: h, verts });
            }
        }
        Some(CellPoly { n, halfspaces, vertices, tight, facets })
    }

    /// Faces of dimension d-1 inside the face with the given vertex set.
    fn subfaces(&self, verts: &[usize], d: usize) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for h in 0..self.halfspaces.len() {
            let s: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&v| self.tight[v].contains(&h))
                .collect();
            if s.len() == verts.len() || s.is_empty() {
                continue;
            }
            let pts: Vec<&Vec<QuadElem>> = s.iter().map(|&v| &self.vertices[v]).collect();
            if affine_dim(&pts) + 1 == d {
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    /// Fan a face of dimension d from its first vertex; returns vertex index
    /// lists of d-simplices.
    fn fan_face(&self, verts: &[usize], d: usize) -> Vec<Vec<usize>> {
        if verts.len() == d + 1 {
            return vec![verts.to_vec()];
        }
        let v0 = verts[0];
        let mut out = Vec::new();
        for sub in self.subfaces(verts, d) {
            if sub.contains(&v0) {
                continue;
            }
            for mut simplex in self.fan_face(&sub, d - 1) {
                simplex.insert(0, v0);
                out.push(simplex);
            }
        }
        out
    }

    /// Cone triangulation: apex at the vertex centroid over fanned facets.
    /// Each simplex is n+1 points.
    pub fn triangulate(&self) -> Vec<Vec<Vec<QuadElem>>> {
        let apex = self.vertex_centroid();
        let mut out = Vec::new();
        for f in &self.facets {
            for simplex in self.fan_face(&f.verts, self.n - 1) {
                let mut pts = Vec::with_capacity(self.n + 1);
                pts.push(apex.clone());
                for v in simplex {
                    pts.push(self.vertices[v].clone());
                }
                out.push(pts);
            }
        }
        out
    }

    pub fn vertex_centroid(&self) -> Vec<QuadElem> {
        let mut c = vec![QuadElem::zero(); self.n];
        for v in &self.vertices {
            c = vec_add(&c, v);
        }
        let k = QuadElem::from_int(self.vertices.len() as i64);
        c.into_iter().map(|x| &x / &k).collect()
    }

    /// (volume, first moment, second moment about the origin), all exact.
    pub fn moments(&self) -> PolyMoments {
        let n = self.n;
        let mut volume = QuadElem::zero();
        let mut m1 = vec![QuadElem::zero(); n];
        let mut m2 = QuadElem::zero();
        let nfact = QuadElem::from_rat(factorial(n));
        let c1 = QuadElem::from_int((n + 1) as i64);
        let c2 = QuadElem::from_int(((n + 1) * (n + 2)) as i64);
        for simplex in self.triangulate() {
            let base = &simplex[0];
            let rows: Vec<Vec<QuadElem>> =
                simplex[1..].iter().map(|p| vec_sub(p, base)).collect();
            let vs = &FieldMat::from_rows(rows).det().abs() / &nfact;
            if vs.is_zero() {
                continue;
            }
            let mut sum = vec![QuadElem::zero(); n];
            let mut sq = QuadElem::zero();
            for p in &simplex {
                sum = vec_add(&sum, p);
                sq = &sq + &norm2(p);
            }
            volume = &volume + &vs;
            let scaled: Vec<QuadElem> = sum.iter().map(|x| &(x * &vs) / &c1).collect();
            m1 = vec_add(&m1, &scaled);
            let inner = &sq + &norm2(&sum);
            m2 = &m2 + &(&(&vs * &inner) / &c2);
        }
        PolyMoments { volume, m1, m2 }
    }

    /// Edge set as sorted vertex index pairs; None in dimensions above 3.
    pub fn edges(&self) -> Option<Vec<(usize, usize)>> {
        let mut out: BTreeSet<(usize, usize)> = BTreeSet::new();
        match self.n {
            1 => {}
            2 => {
                for f in &self.facets {
                    debug_assert_eq!(f.verts.len(), 2);
                    out.insert((f.verts[0], f.verts[1]));
                }
            }
            3 => {
                for f in &self.facets {
                    for s in self.subfaces(&f.verts, 2) {
                        debug_assert_eq!(s.len(), 2);
                        out.insert((s[0], s[1]));
                    }
                }
            }
            _ => return None,
        }
        Some(out.into_iter().collect())
    }

    /// Squared edge lengths, sorted; None in dimensions above 3.
    pub fn edge_len2(&self) -> Option<Vec<QuadElem>> {
        let mut out: Vec<QuadElem> = self
            .edges()?
            .into_iter()
            .map(|(a, b)| norm2(&vec_sub(&self.vertices[a], &self.vertices[b])))
            .collect();
        out.sort();
        Some(out)
    }
}

#[derive(Debug, Clone)]
pub struct PolyMoments {
    pub volume: QuadElem,
    pub m1: Vec<QuadElem>,
    pub m2: QuadElem,
}

impl PolyMoments {
    pub fn centroid(&self) -> Vec<QuadElem> {
        self.m1.iter().map(|x| x / &self.volume).collect()
    }

    /// Second moment about the centroid.
    pub fn central_second_moment(&self) -> QuadElem {
        &self.m2 - &(&norm2(&self.m1) / &self.volume)
    }
}

fn factorial(n: usize) -> Rat {
    let mut f = Rat::from_integer(1.into());
    for k in 2..=n {
        f *= Rat::from_integer(k.into());
    }
    f
}

/// Counts per dimension for a quick face audit: (vertices, edges, facets).
pub fn face_counts(poly: &CellPoly) -> (usize, Option<usize>, usize) {
    (poly.vertices.len(), poly.edges().map(|e| e.len()), poly.facets.len())
}
