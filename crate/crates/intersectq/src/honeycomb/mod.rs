//! Cells of the common refinement of several Voronoi partitions.
//!
//! A family of component lattices induces a partition of space into cells:
//! each cell is the set of points sharing a full tuple of nearest component
//! points. Cells are identified by that tuple, canonicalized by translating
//! the first point into the fundamental parallelepiped of the joint lattice
//! (the intersection of the components). A breadth-first walk across facets
//! enumerates every translation class exactly once.
//!
//! Congruence classes are keyed by an exact geometric fingerprint and then
//! refined by color propagation over the facet-adjacency multigraph, so that
//! congruent-but-inequivalent cells (which a fingerprint alone cannot
//! separate) end up in distinct classes. Identifying classes by fingerprint
//! plus adjacency refinement, rather than by a full congruence test, is a
//! documented limitation.

mod poly;
pub mod slice;

pub use poly::{
    affine_dim, enumerate_vertices, enumerate_vertices_pruned, face_counts, CellPoly,
    Facet, Halfspace, PolyMoments,
};
pub use slice::{plane_slice, render_svg, SlicePolygon, Window};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::exactmath::{
    dot, norm2, vec_add, vec_scale, vec_sub, ExactProduct, QuadElem, Rat,
};
use crate::lattice::{relevant_vectors, Lattice, LatticeError};
use crate::quantize::QuantizerSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoneycombError(pub String);

impl std::fmt::Display for HoneycombError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "honeycomb error: {}", self.0)
    }
}

impl std::error::Error for HoneycombError {}

impl From<LatticeError> for HoneycombError {
    fn from(e: LatticeError) -> Self {
        HoneycombError(e.to_string())
    }
}

fn err<T>(msg: impl Into<String>) -> Result<T, HoneycombError> {
    Err(HoneycombError(msg.into()))
}

/// A tuple of component lattices with the derived data needed to build cells.
pub struct HoneycombFamily {
    components: Vec<Lattice>,
    quantizers: Vec<QuantizerSpec>,
    joint: Lattice,
    /// Per component: the walls of its origin Voronoi cell.
    relevant: Vec<Vec<Vec<QuadElem>>>,
    /// Per component: exact squared circumradius of its Voronoi cell.
    cover2: Vec<QuadElem>,
    n: usize,
}

/// A cell identifier: integer coordinates of the nearest lattice point in
/// each component. Canonical when the first point's joint coordinates lie in
/// [0,1)^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CellId {
    pub coords: Vec<Vec<BigInt>>,
}

/// A built cell: its defining points, deduplicated walls with crossing tags,
/// and the polytope.
pub struct CellInstance {
    pub id: CellId,
    pub points: Vec<Vec<QuadElem>>,
    /// tags[h] = the (component, wall vector) pairs merged into halfspace h;
    /// crossing h updates every tagged component at once.
    pub tags: Vec<Vec<(usize, Vec<QuadElem>)>>,
    pub poly: CellPoly,
}

impl HoneycombFamily {
    pub fn new(components: Vec<Lattice>) -> Result<HoneycombFamily, HoneycombError> {
        if components.is_empty() {
            return err("at least one component lattice is required");
        }
        let n = components[0].dim();
        if components.iter().any(|l| l.dim() != n) {
            return err("component lattices must share a dimension");
        }
        let refs: Vec<&Lattice> = components.iter().collect();
        let joint = Lattice::intersect(&refs)?;
        let mut relevant = Vec::new();
        let mut cover2 = Vec::new();
        for lat in &components {
            let rel = relevant_vectors(lat);
            let hs: Vec<Halfspace> = rel
                .iter()
                .map(|w| {
                    Halfspace::new(w.clone(), &norm2(w) / &QuadElem::from_int(2))
                })
                .collect();
            let cell = CellPoly::from_halfspaces(n, hs)
                .ok_or_else(|| HoneycombError("degenerate Voronoi cell".into()))?;
            let rho2 = cell
                .vertices
                .iter()
                .map(|v| norm2(v))
                .max()
                .expect("Voronoi cell has vertices");
            relevant.push(rel);
            cover2.push(rho2);
        }
        let quantizers = components
            .iter()
            .map(|l| QuantizerSpec::with_default_radius(l.clone()))
            .collect();
        Ok(HoneycombFamily { components, quantizers, joint, relevant, cover2, n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Lattice] {
        &self.components
    }

    pub fn joint(&self) -> &Lattice {
        &self.joint
    }

    pub fn quantizer(&self, i: usize) -> &QuantizerSpec {
        &self.quantizers[i]
    }

    /// Canonicalize a tuple of component points; also returns the joint
    /// translation (as joint coordinates) that was subtracted.
    pub fn canonical_id_with_shift(
        &self,
        points: &[Vec<QuadElem>],
    ) -> (CellId, Vec<BigInt>) {
        assert_eq!(points.len(), self.components.len());
        let c1 = self.joint.coords_of(&points[0]);
        let shift: Vec<BigInt> = c1.iter().map(|x| x.floor_int()).collect();
        let t = self.joint.point(&shift);
        let mut coords = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            let q = vec_sub(p, &t);
            coords.push(int_coords(&self.components[i], &q));
        }
        (CellId { coords }, shift)
    }

    pub fn canonical_id(&self, points: &[Vec<QuadElem>]) -> CellId {
        self.canonical_id_with_shift(points).0
    }

    /// The component points named by an identifier.
    pub fn id_points(&self, id: &CellId) -> Vec<Vec<QuadElem>> {
        id.coords
            .iter()
            .zip(&self.components)
            .map(|(c, l)| l.point(c))
            .collect()
    }

    /// Build the cell of points whose nearest tuple is `id`; None when that
    /// region is empty or lower-dimensional.
    pub fn build_cell(&self, id: &CellId) -> Option<CellInstance> {
        let points = self.id_points(id);
        let two = QuadElem::from_int(2);
        // Deduplicate coincident walls by their positively-scaled normal form,
        // merging tags.
        let mut walls: BTreeMap<(Vec<QuadElem>, QuadElem), Vec<(usize, Vec<QuadElem>)>> =
            BTreeMap::new();
        for (i, rel) in self.relevant.iter().enumerate() {
            for w in rel {
                let rhs = &dot(w, &points[i]) + &(&norm2(w) / &two);
                let scale = w
                    .iter()
                    .find(|c| !c.is_zero())
                    .expect("nonzero wall normal")
                    .abs();
                let wn: Vec<QuadElem> = w.iter().map(|c| c / &scale).collect();
                let rhsn = &rhs / &scale;
                walls.entry((wn, rhsn)).or_default().push((i, w.clone()));
            }
        }
        let mut halfspaces = Vec::with_capacity(walls.len());
        let mut tags = Vec::with_capacity(walls.len());
        for ((w, rhs), tag) in walls {
            halfspaces.push(Halfspace::new(w, rhs));
            tags.push(tag);
        }
        // A wall strictly outside some component's circumscribed ball can
        // never be tight on the cell: skip it when hunting vertex subsets.
        let cands: Vec<usize> = (0..halfspaces.len())
            .filter(|&h| {
                let hs = &halfspaces[h];
                let ww = norm2(&hs.w);
                !(0..self.components.len()).any(|i| {
                    let diff = &hs.rhs - &dot(&hs.w, &points[i]);
                    diff.sign() > 0 && diff.square() > &ww * &self.cover2[i]
                })
            })
            .collect();
        let poly = CellPoly::from_halfspaces_pruned(self.n, halfspaces, &cands)?;
        Some(CellInstance { id: id.clone(), points, tags, poly })
    }

    /// The identifier across a facet, canonicalized; also returns the joint
    /// shift applied by canonicalization.
    pub fn neighbor(&self, cell: &CellInstance, facet: usize) -> (CellId, Vec<BigInt>) {
        let h = cell.poly.facets[facet].halfspace;
        let mut points = cell.points.clone();
        for (comp, w) in &cell.tags[h] {
            points[*comp] = vec_add(&points[*comp], w);
        }
        self.canonical_id_with_shift(&points)
    }
}

fn int_coords(lat: &Lattice, x: &[QuadElem]) -> Vec<BigInt> {
    lat.coords_of(x)
        .iter()
        .map(|c| {
            let r = c.as_rat().expect("lattice point has rational coordinates");
            assert!(r.is_integer(), "lattice point has integer coordinates");
            r.to_integer()
        })
        .collect()
}

/// Exact congruence invariants of a cell. Equal fingerprints do not prove
/// congruence, and congruent cells can still lie in different classes; the
/// adjacency refinement in `analyze` settles the final partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dim: usize,
    pub vertices: usize,
    pub edges: Option<usize>,
    pub facets: usize,
    pub volume: QuadElem,
    /// Sorted squared vertex distances from the centroid.
    pub centroid_dist2: Vec<QuadElem>,
    /// Sorted squared edge lengths (dimensions up to 3).
    pub edge_len2: Option<Vec<QuadElem>>,
}

fn fingerprint_of(poly: &CellPoly, m: &PolyMoments) -> Fingerprint {
    let centroid = m.centroid();
    let mut cd: Vec<QuadElem> =
        poly.vertices.iter().map(|v| norm2(&vec_sub(v, &centroid))).collect();
    cd.sort();
    Fingerprint {
        dim: poly.n,
        vertices: poly.vertices.len(),
        edges: poly.edges().map(|e| e.len()),
        facets: poly.facets.len(),
        volume: m.volume.clone(),
        centroid_dist2: cd,
        edge_len2: poly.edge_len2(),
    }
}

/// One canonical cell of the analyzed honeycomb.
pub struct CellData {
    pub id: CellId,
    pub class: usize,
    pub volume: QuadElem,
    /// First moment about the origin.
    pub m1: Vec<QuadElem>,
    /// Second moment about the origin.
    pub m2: QuadElem,
    pub centroid: Vec<QuadElem>,
    /// Neighbor cell index per facet.
    pub neighbors: Vec<usize>,
}

pub struct CellClass {
    /// Cell indices, ascending.
    pub members: Vec<usize>,
    pub count: u64,
    pub volume: QuadElem,
    /// Second moment about the centroid.
    pub second_moment: QuadElem,
    pub p: Rat,
    pub fingerprint: Fingerprint,
}

pub struct MeritReport {
    pub g: ExactProduct,
    pub g_float: f64,
    /// Rate reduction versus a single-lattice baseline, in bits.
    pub rate_reduction: f64,
    /// Entropy of the class distribution, in bits.
    pub entropy: f64,
    /// Mean second moment per tile (sum of N_i U_i).
    pub mean_second_moment: QuadElem,
}

pub struct HoneycombAnalysis {
    pub n: usize,
    pub field_d: u64,
    pub tile_volume: QuadElem,
    pub cells: Vec<CellData>,
    pub index: BTreeMap<CellId, usize>,
    pub classes: Vec<CellClass>,
    /// incidence[i][j] = facets of any class-i cell shared with class-j cells.
    pub incidence: Vec<Vec<u64>>,
    pub merit: MeritReport,
}

pub const DEFAULT_CELL_BUDGET: usize = 1_000_000;

/// Enumerate every canonical cell, classify, and compute the figure of merit.
pub fn analyze(
    family: &HoneycombFamily,
    budget: usize,
) -> Result<HoneycombAnalysis, HoneycombError> {
    let n = family.n;
    let origin: Vec<Vec<QuadElem>> =
        family.components.iter().map(|_| vec![QuadElem::zero(); n]).collect();
    let id0 = family.canonical_id(&origin);
    let mut index: BTreeMap<CellId, usize> = BTreeMap::new();
    let mut instances: Vec<CellInstance> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let cell0 = family
        .build_cell(&id0)
        .ok_or_else(|| HoneycombError("origin cell is degenerate".into()))?;
    index.insert(id0, 0);
    instances.push(cell0);
    queue.push_back(0);
    let mut neighbors: Vec<Vec<usize>> = Vec::new();
    while let Some(ci) = queue.pop_front() {
        let nfacets = instances[ci].poly.facets.len();
        let mut nbrs = Vec::with_capacity(nfacets);
        for f in 0..nfacets {
            let (nid, _) = family.neighbor(&instances[ci], f);
            let idx = match index.get(&nid) {
                Some(&i) => i,
                None => {
                    if instances.len() >= budget {
                        return err(format!("cell budget of {budget} exceeded"));
                    }
                    let inst = family.build_cell(&nid).ok_or_else(|| {
                        HoneycombError("facet neighbor is degenerate".into())
                    })?;
                    let i = instances.len();
                    index.insert(nid, i);
                    instances.push(inst);
                    queue.push_back(i);
                    i
                }
            };
            nbrs.push(idx);
        }
        neighbors.push(nbrs);
        debug_assert_eq!(neighbors.len() - 1, ci);
    }

    // Exact invariants, then color refinement over the facet multigraph.
    let moments: Vec<PolyMoments> = instances.iter().map(|c| c.poly.moments()).collect();
    let prints: Vec<Fingerprint> = instances
        .iter()
        .zip(&moments)
        .map(|(c, m)| fingerprint_of(&c.poly, m))
        .collect();
    let mut colors = rank_by_key(&prints);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..instances.len())
            .map(|i| {
                let mut nb: Vec<usize> = neighbors[i].iter().map(|&j| colors[j]).collect();
                nb.sort_unstable();
                (colors[i], nb)
            })
            .collect();
        let next = rank_by_key(&keys);
        if next == colors {
            break;
        }
        colors = next;
    }

    // Group into classes and order them: largest cells first, then by
    // fingerprint, then by smallest member identifier.
    let ncolors = colors.iter().max().map_or(0, |c| c + 1);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); ncolors];
    for (i, &c) in colors.iter().enumerate() {
        groups[c].push(i);
    }
    let ids: Vec<&CellId> = {
        let mut v: Vec<&CellId> = vec![&instances[0].id; instances.len()];
        for (id, &i) in &index {
            v[i] = id;
        }
        v
    };
    groups.sort_by(|a, b| {
        let (ra, rb) = (a[0], b[0]);
        prints[rb]
            .volume
            .cmp(&prints[ra].volume)
            .then_with(|| prints[ra].cmp(&prints[rb]))
            .then_with(|| ids[a[0]].cmp(ids[b[0]]))
    });

    let tile_volume = family.joint.det_abs().clone();
    let mut classes = Vec::with_capacity(groups.len());
    let mut class_of = vec![0usize; instances.len()];
    for (k, members) in groups.iter().enumerate() {
        let rep = members[0];
        for &m in members {
            if prints[m] != prints[rep] {
                return err("refinement split a class across fingerprints");
            }
            class_of[m] = k;
        }
        let u = moments[rep].central_second_moment();
        for &m in members {
            if moments[m].central_second_moment() != u {
                return err("class members disagree on the second moment");
            }
        }
        let count = members.len() as u64;
        let volume = prints[rep].volume.clone();
        let pv = &(&volume * &QuadElem::from_int(count as i64)) / &tile_volume;
        let p = match pv.as_rat() {
            Some(r) if r.is_positive() => r.clone(),
            _ => return err("class probability is not a positive rational"),
        };
        classes.push(CellClass {
            members: members.clone(),
            count,
            volume,
            second_moment: u,
            p,
            fingerprint: prints[rep].clone(),
        });
    }

    // Tile accounting: the cells must fill the fundamental domain exactly.
    let mut nv = QuadElem::zero();
    for c in &classes {
        nv = &nv + &(&c.volume * &QuadElem::from_int(c.count as i64));
    }
    if nv != tile_volume {
        return err("cell volumes do not sum to the tile volume");
    }
    let psum: Rat = classes.iter().map(|c| c.p.clone()).sum();
    if !psum.is_one() {
        return err("class probabilities do not sum to one");
    }

    // Incidence: every member of a class must see the same class profile.
    let nc = classes.len();
    let mut incidence = vec![vec![0u64; nc]; nc];
    for (i, class) in classes.iter().enumerate() {
        let profile_of = |cell: usize| -> Vec<u64> {
            let mut row = vec![0u64; nc];
            for &nb in &neighbors[cell] {
                row[class_of[nb]] += 1;
            }
            row
        };
        let row = profile_of(class.members[0]);
        for &m in &class.members[1..] {
            if profile_of(m) != row {
                return err("class members disagree on facet incidence");
            }
        }
        incidence[i] = row;
    }
    for i in 0..nc {
        for j in 0..nc {
            if classes[i].count * incidence[i][j] != classes[j].count * incidence[j][i] {
                return err("incidence double counting failed");
            }
        }
    }

    let merit = figure_of_merit(n, family.joint.field_d(), &tile_volume, &classes)?;

    let cells: Vec<CellData> = (0..instances.len())
        .map(|i| CellData {
            id: instances[i].id.clone(),
            class: class_of[i],
            volume: moments[i].volume.clone(),
            m1: moments[i].m1.clone(),
            m2: moments[i].m2.clone(),
            centroid: moments[i].centroid(),
            neighbors: neighbors[i].clone(),
        })
        .collect();

    Ok(HoneycombAnalysis {
        n,
        field_d: family.joint.field_d(),
        tile_volume,
        cells,
        index,
        classes,
        incidence,
        merit,
    })
}

fn rank_by_key<K: Ord>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present"))
        .collect()
}

/// Normalized second moment of the class mixture, with the exact rate and
/// entropy companions.
pub fn figure_of_merit(
    n: usize,
    field_d: u64,
    tile_volume: &QuadElem,
    classes: &[CellClass],
) -> Result<MeritReport, HoneycombError> {
    let mut u_total = QuadElem::zero();
    for c in classes {
        u_total = &u_total + &(&c.second_moment * &QuadElem::from_int(c.count as i64));
    }
    let a = &u_total / tile_volume;
    let nq = QuadElem::from_int(n as i64);
    let mut g = ExactProduct::from_coeff(&a / &nq);
    let nr = Rat::from_integer(BigInt::from(n as i64));
    for c in classes {
        let v2 = c
            .volume
            .square()
            .as_rat()
            .cloned()
            .ok_or_else(|| HoneycombError("squared cell volume is irrational".into()))?;
        g.mul_pow(&v2, &(-&c.p / &nr));
    }
    let g = g.normalized(field_d);
    let g_float = g.value();
    let mut rate = tile_volume.to_f64().log2();
    let mut entropy = 0.0;
    for c in classes {
        let p = rat_f64(&c.p);
        rate -= p * c.volume.to_f64().log2();
        entropy -= p * p.log2();
    }
    rate /= n as f64;
    Ok(MeritReport {
        g,
        g_float,
        rate_reduction: rate,
        entropy,
        mean_second_moment: u_total,
    })
}

pub fn rat_f64(r: &Rat) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// A point classified into a cell of the analyzed honeycomb.
pub struct ClassifiedPoint {
    pub cell: usize,
    pub class: usize,
    /// Centroid of the actual cell instance containing the point.
    pub centroid: Vec<QuadElem>,
}

impl HoneycombAnalysis {
    /// Classify a point by its nearest tuple; None when the tuple names a
    /// cell outside the enumerated set (an orphan).
    pub fn classify(
        &self,
        family: &HoneycombFamily,
        x: &[QuadElem],
    ) -> Option<ClassifiedPoint> {
        let points: Vec<Vec<QuadElem>> =
            family.quantizers.iter().map(|q| q.nearest_point(x).point).collect();
        let (id, shift) = family.canonical_id_with_shift(&points);
        let cell = *self.index.get(&id)?;
        let t = family.joint.point(&shift);
        Some(ClassifiedPoint {
            cell,
            class: self.cells[cell].class,
            centroid: vec_add(&self.cells[cell].centroid, &t),
        })
    }
}

/// One merged cell class after amalgamation.
pub struct MergedClass {
    /// Original class index per member cell, sorted.
    pub member_classes: Vec<usize>,
    pub count: u64,
    pub volume: QuadElem,
    pub second_moment: QuadElem,
    pub p: Rat,
}

pub struct AmalgamatedReport {
    pub merged: (usize, usize),
    /// Surviving classes by original index.
    pub kept: Vec<usize>,
    pub classes: Vec<MergedClass>,
    pub merit: MeritReport,
}

/// Merge two adjacent cell classes: every facet-connected component of
/// class-a and class-b cells becomes one cell of the new honeycomb.
pub fn amalgamate(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    a: usize,
    b: usize,
) -> Result<AmalgamatedReport, HoneycombError> {
    let nc = analysis.classes.len();
    if a >= nc || b >= nc || a == b {
        return err("amalgamation needs two distinct class indices");
    }
    if analysis.incidence[a][b] == 0 {
        return err("classes are not adjacent; nothing to merge");
    }
    let in_merge = |cell: usize| {
        let c = analysis.cells[cell].class;
        c == a || c == b
    };

    // Walk facet-connected components in real space: members are (cell,
    // joint translation) pairs. Each component is counted once, via the
    // instance anchored at its least member.
    let seeds: Vec<usize> = analysis.classes[a]
        .members
        .iter()
        .chain(&analysis.classes[b].members)
        .copied()
        .collect();
    let mut real_neighbors: BTreeMap<usize, Vec<(usize, Vec<BigInt>)>> = BTreeMap::new();
    for &s in &seeds {
        let inst = family.build_cell(&analysis.cells[s].id).expect("known cell");
        let nbrs = (0..inst.poly.facets.len())
            .map(|f| {
                let (nid, shift) = family.neighbor(&inst, f);
                (*analysis.index.get(&nid).expect("neighbor enumerated"), shift)
            })
            .collect();
        real_neighbors.insert(s, nbrs);
    }
    // Key: the member-class multiset with the exact volume and second moment.
    type MergeKey = (Vec<usize>, QuadElem, QuadElem);
    let mut groups: BTreeMap<MergeKey, u64> = BTreeMap::new();
    for &seed in &seeds {
        let zero = vec![BigInt::zero(); family.n];
        let mut seen: BTreeSet<(usize, Vec<BigInt>)> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert((seed, zero.clone()));
        queue.push_back((seed, zero));
        while let Some((c, t)) = queue.pop_front() {
            for (nb, shift) in &real_neighbors[&c] {
                if !in_merge(*nb) {
                    continue;
                }
                let nt: Vec<BigInt> = shift.iter().zip(&t).map(|(s, t)| s + t).collect();
                if seen.insert((*nb, nt.clone())) {
                    queue.push_back((*nb, nt));
                }
            }
        }
        let members: Vec<(usize, Vec<BigInt>)> = seen.into_iter().collect();
        // Anchor: the least member must be the seed at zero offset, otherwise
        // this component is a translate of one counted elsewhere.
        let anchor = members.iter().min().expect("component has members");
        if *anchor != (seed, vec![BigInt::zero(); family.n]) {
            continue;
        }
        {
            let mut cells_seen = BTreeSet::new();
            for (c, _) in &members {
                if !cells_seen.insert(*c) {
                    return err("merged component revisits a translation class");
                }
            }
        }
        // Exact additive moments under translation.
        let mut vol = QuadElem::zero();
        let mut m1 = vec![QuadElem::zero(); family.n];
        let mut m2 = QuadElem::zero();
        for (c, t) in &members {
            let cd = &analysis.cells[*c];
            let tv = family.joint.point(t);
            vol = &vol + &cd.volume;
            m1 = vec_add(&m1, &vec_add(&cd.m1, &vec_scale(&tv, &cd.volume)));
            let cross = dot(&tv, &cd.m1);
            m2 = &m2
                + &(&(&cd.m2 + &(&cross + &cross)) + &(&cd.volume * &norm2(&tv)));
        }
        let u = &m2 - &(&norm2(&m1) / &vol);
        let mut mcls: Vec<usize> =
            members.iter().map(|(c, _)| analysis.cells[*c].class).collect();
        mcls.sort_unstable();
        *groups.entry((mcls, vol, u)).or_insert(0) += 1;
    }

    // Assemble the merged class list: untouched classes plus the new groups.
    let kept: Vec<usize> = (0..nc).filter(|&k| k != a && k != b).collect();
    let mut classes: Vec<MergedClass> = Vec::new();
    for &k in &kept {
        let c = &analysis.classes[k];
        classes.push(MergedClass {
            member_classes: vec![k],
            count: c.count,
            volume: c.volume.clone(),
            second_moment: c.second_moment.clone(),
            p: c.p.clone(),
        });
    }
    let mut merged_nv = QuadElem::zero();
    for ((mcls, vol, u), count) in &groups {
        let pv = &(vol * &QuadElem::from_int(*count as i64)) / &analysis.tile_volume;
        let p = pv
            .as_rat()
            .cloned()
            .ok_or_else(|| HoneycombError("merged probability is irrational".into()))?;
        merged_nv = &merged_nv + &(vol * &QuadElem::from_int(*count as i64));
        classes.push(MergedClass {
            member_classes: mcls.clone(),
            count: *count,
            volume: vol.clone(),
            second_moment: u.clone(),
            p,
        });
    }
    // The merged cells must account exactly for the area the two classes had.
    let mut expect = QuadElem::zero();
    for &k in &[a, b] {
        let c = &analysis.classes[k];
        expect = &expect + &(&c.volume * &QuadElem::from_int(c.count as i64));
    }
    if merged_nv != expect {
        return err("merged volumes do not match the original classes");
    }

    // Recompute the figure of merit on the merged mixture.
    let as_cell_classes: Vec<CellClass> = classes
        .iter()
        .map(|c| CellClass {
            members: Vec::new(),
            count: c.count,
            volume: c.volume.clone(),
            second_moment: c.second_moment.clone(),
            p: c.p.clone(),
            fingerprint: Fingerprint {
                dim: analysis.n,
                vertices: 0,
                edges: None,
                facets: 0,
                volume: c.volume.clone(),
                centroid_dist2: Vec::new(),
                edge_len2: None,
            },
        })
        .collect();
    let merit = figure_of_merit(
        analysis.n,
        analysis.field_d,
        &analysis.tile_volume,
        &as_cell_classes,
    )?;
    Ok(AmalgamatedReport { merged: (a, b), kept, classes, merit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int, FieldMat};

    fn sqrt3(n: i64, d: i64) -> QuadElem {
        QuadElem::root_part(rat(n, d), 3)
    }

    fn hex_family() -> HoneycombFamily {
        let z = QuadElem::zero;
        let l1 = FieldMat::from_rows(vec![
            vec![sqrt3(1, 1), z()],
            vec![z(), QuadElem::one()],
        ]);
        let l2 = FieldMat::from_rows(vec![
            vec![sqrt3(1, 2), QuadElem::from_frac(1, 2)],
            vec![sqrt3(-1, 2), QuadElem::from_frac(3, 2)],
        ]);
        let l3 = FieldMat::from_rows(vec![
            vec![sqrt3(-1, 2), QuadElem::from_frac(1, 2)],
            vec![sqrt3(1, 2), QuadElem::from_frac(3, 2)],
        ]);
        HoneycombFamily::new(vec![
            Lattice::from_gen(l1, 3).unwrap(),
            Lattice::from_gen(l2, 3).unwrap(),
            Lattice::from_gen(l3, 3).unwrap(),
        ])
        .unwrap()
    }

    fn bcc_family() -> HoneycombFamily {
        HoneycombFamily::new(vec![
            Lattice::from_int_rows(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]),
            Lattice::from_int_rows(&[&[0, 1, 0], &[1, 0, 1], &[1, 0, -1]]),
            Lattice::from_int_rows(&[&[0, 0, 1], &[1, 1, 0], &[1, -1, 0]]),
        ])
        .unwrap()
    }

    fn class_by_vu<'a>(
        an: &'a HoneycombAnalysis,
        v: &QuadElem,
        u: &QuadElem,
    ) -> (usize, &'a CellClass) {
        let hits: Vec<usize> = an
            .classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.volume == *v && c.second_moment == *u)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hits.len(), 1, "class with volume/moment not unique");
        (hits[0], &an.classes[hits[0]])
    }

    #[test]
    fn hexagonal_honeycomb_class_table() {
        let fam = hex_family();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(an.cells.len(), 15);
        assert_eq!(an.classes.len(), 4);
        assert_eq!(an.tile_volume, sqrt3(2, 1));
        // (volume, central second moment, count) for all four classes.
        let expected = [
            (sqrt3(1, 2), sqrt3(5, 72), 1u64),
            (sqrt3(1, 4), sqrt3(1, 48), 2),
            (sqrt3(1, 12), sqrt3(1, 432), 6),
            (sqrt3(1, 12), sqrt3(5, 1296), 6),
        ];
        for (v, u, n) in &expected {
            let (_, c) = class_by_vu(&an, v, u);
            assert_eq!(c.count, *n);
            assert_eq!(c.p, rat(1, 4));
        }
        // Largest cell first: the hexagon.
        assert_eq!(an.classes[0].volume, sqrt3(1, 2));
        assert_eq!(an.classes[0].fingerprint.vertices, 6);
        // Figure of merit: 2^(7/4)/27 in canonical form, entropy 2 bits.
        let mut g = ExactProduct::from_coeff(QuadElem::from_frac(1, 27));
        g.mul_pow(&rat_int(2), &rat(7, 4));
        assert_eq!(an.merit.g, g.normalized(3));
        assert!((an.merit.g_float - 2f64.powf(1.75) / 27.0).abs() < 1e-14);
        assert!((an.merit.entropy - 2.0).abs() < 1e-12);
        let r_expected = (11.0 / 4.0 + 0.5 * 3f64.log2()) / 2.0;
        assert!((an.merit.rate_reduction - r_expected).abs() < 1e-12);
    }

    #[test]
    fn bcc_honeycomb_class_table() {
        let fam = bcc_family();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(an.cells.len(), 43);
        assert_eq!(an.classes.len(), 4);
        assert_eq!(an.tile_volume, QuadElem::from_int(4));
        // Pyramid and quarter-octahedron moments match the direct-integration
        // oracles in poly.rs (7/384 and 7/1536).
        let expected = [
            (QuadElem::one(), QuadElem::from_frac(1, 4), 1u64),
            (QuadElem::from_frac(1, 6), QuadElem::from_frac(7, 384), 6),
            (QuadElem::from_frac(1, 12), QuadElem::from_frac(7, 1536), 12),
            (QuadElem::from_frac(1, 24), QuadElem::from_frac(1, 512), 24),
        ];
        for (v, u, n) in &expected {
            let (_, c) = class_by_vu(&an, v, u);
            assert_eq!(c.count, *n);
            assert_eq!(c.p, rat(1, 4));
        }
        // The unit cube leads; it touches six of the square-pyramid cells.
        let (cube, _) =
            class_by_vu(&an, &QuadElem::one(), &QuadElem::from_frac(1, 4));
        assert_eq!(cube, 0);
        let (pyr, _) = class_by_vu(
            &an,
            &QuadElem::from_frac(1, 6),
            &QuadElem::from_frac(7, 384),
        );
        assert_eq!(an.incidence[cube][pyr], 6);
        assert_eq!(an.incidence[cube][cube], 0);
        // Each pyramid rests on the cube and meets a tetrahedron across each
        // of its four slant faces.
        assert_eq!(an.incidence[pyr], vec![1, 0, 0, 4]);
        // Every facet of a quarter-octahedron leads to a tetrahedron, and the
        // contact counts balance: 12*6 == 24*3.
        let (qoct, _) = class_by_vu(
            &an,
            &QuadElem::from_frac(1, 12),
            &QuadElem::from_frac(7, 1536),
        );
        let (tet, _) = class_by_vu(
            &an,
            &QuadElem::from_frac(1, 24),
            &QuadElem::from_frac(1, 512),
        );
        assert_eq!(an.incidence[qoct], vec![0, 0, 0, 6]);
        assert_eq!(an.incidence[tet][qoct], 3);
        assert_eq!(an.incidence[tet][pyr], 1);
        // Mean squared error per tile 59/128; figure of merit 59*sqrt(3)/768.
        assert_eq!(an.merit.mean_second_moment, QuadElem::from_frac(59, 128));
        assert_eq!(an.merit.g.coeff(), &QuadElem::from_frac(59, 768));
        let fs: Vec<(u64, Rat)> =
            an.merit.g.factors().map(|(p, e)| (p, e.clone())).collect();
        assert_eq!(fs, vec![(3, rat(1, 2))]);
        assert!((an.merit.g_float - 59.0 * 3f64.sqrt() / 768.0).abs() < 1e-14);
    }

    // Partitions refine each component's Voronoi partition, so summing the
    // exact integral of |x - p_i|^2 over all cells must reproduce the tile's
    // share of that component's Voronoi second moment.
    fn check_component_moment_identity(fam: &HoneycombFamily, an: &HoneycombAnalysis) {
        for (i, lat) in fam.components().iter().enumerate() {
            let rel = relevant_vectors(lat);
            let hs: Vec<Halfspace> = rel
                .iter()
                .map(|w| Halfspace::new(w.clone(), &norm2(w) / &QuadElem::from_int(2)))
                .collect();
            let vor = CellPoly::from_halfspaces(fam.dim(), hs).unwrap();
            let vm = vor.moments();
            let expected = &(&an.tile_volume / &vm.volume) * &vm.m2;
            let mut total = QuadElem::zero();
            for cd in &an.cells {
                let p = &fam.id_points(&cd.id)[i];
                let cross = dot(p, &cd.m1);
                total = &total
                    + &(&(&cd.m2 - &(&cross + &cross)) + &(&cd.volume * &norm2(p)));
            }
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn cell_moments_reproduce_component_voronoi_moments() {
        for fam in [hex_family(), bcc_family()] {
            let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
            check_component_moment_identity(&fam, &an);
        }
    }

    #[test]
    fn bcc_cube_facet_leads_to_pyramid_apex() {
        let fam = bcc_family();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        let origin: Vec<Vec<QuadElem>> =
            (0..3).map(|_| vec![QuadElem::zero(); 3]).collect();
        let id0 = fam.canonical_id(&origin);
        let cube = fam.build_cell(&id0).unwrap();
        // Find the facet on x = 1/2 with outward normal (1,0,0).
        let target_w =
            vec![QuadElem::one(), QuadElem::zero(), QuadElem::zero()];
        let f = (0..cube.poly.facets.len())
            .find(|&f| {
                let h = &cube.poly.halfspaces[cube.poly.facets[f].halfspace];
                h.w == target_w && h.rhs == QuadElem::from_frac(1, 2)
            })
            .expect("cube facet at x = 1/2");
        let (nid, _) = fam.neighbor(&cube, f);
        let idx = an.index[&nid];
        let nb = &an.cells[idx];
        assert_eq!(an.classes[nb.class].volume, QuadElem::from_frac(1, 6));
        // The square pyramid's apex is the crossed lattice point (1,0,0).
        let apex = vec![QuadElem::one(), QuadElem::zero(), QuadElem::zero()];
        let inst = fam.build_cell(&nid).unwrap();
        assert!(inst.poly.vertices.contains(&apex));
        // Crossing back returns to the cube.
        let back = (0..inst.poly.facets.len())
            .find(|&f| fam.neighbor(&inst, f).0 == id0)
            .expect("return facet");
        let _ = back;
    }

    #[test]
    fn amalgamating_hexagonal_triangles_recovers_hexagons() {
        let fam = hex_family();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        let (big, _) = class_by_vu(&an, &sqrt3(1, 4), &sqrt3(1, 48));
        let (iso, _) = class_by_vu(&an, &sqrt3(1, 12), &sqrt3(5, 1296));
        let merged = amalgamate(&fam, &an, big, iso).unwrap();
        assert_eq!(merged.kept.len(), 2);
        assert_eq!(merged.classes.len(), 3);
        // The merged cells are hexagons congruent to the original class.
        let m = merged
            .classes
            .iter()
            .find(|c| c.member_classes.len() > 1)
            .unwrap();
        assert_eq!(m.count, 2);
        assert_eq!(m.volume, sqrt3(1, 2));
        assert_eq!(m.second_moment, sqrt3(5, 72));
        assert_eq!(m.p, rat(1, 2));
        assert_eq!(m.member_classes, vec![big, iso, iso, iso]);
        // Merging improves the figure of merit: 2^(1/4) 3^(3/4) / 27.
        let mut g = ExactProduct::from_coeff(QuadElem::from_frac(1, 18));
        g.mul_pow(&rat_int(2), &rat(5, 4));
        g.mul_pow(&rat_int(3), &rat(-1, 4));
        assert_eq!(merged.merit.g, g.normalized(3));
        assert!(merged.merit.g_float < an.merit.g_float);
        // Merge preconditions: distinct, in-range, adjacent.
        assert!(amalgamate(&fam, &an, big, big).is_err());
        assert!(amalgamate(&fam, &an, 0, 99).is_err());
    }

    #[test]
    fn single_lattice_family_reduces_to_voronoi_cell() {
        let gen = FieldMat::from_rows(vec![
            vec![sqrt3(1, 1), QuadElem::one()],
            vec![QuadElem::zero(), QuadElem::from_int(2)],
        ]);
        let fam =
            HoneycombFamily::new(vec![Lattice::from_gen(gen, 3).unwrap()]).unwrap();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(an.classes.len(), 1);
        assert_eq!(an.classes[0].count, 1);
        assert_eq!(an.classes[0].volume, sqrt3(2, 1));
        assert_eq!(an.classes[0].fingerprint.vertices, 6);
        assert_eq!(an.merit.entropy, 0.0);
        // G collapses to the single-cell form U/(n V^(1+2/n)): 5*sqrt(3)/108.
        assert_eq!(an.merit.g.coeff(), &sqrt3(5, 108));
        assert_eq!(an.merit.g.factors().count(), 0);
    }

    #[test]
    fn classify_locates_points_and_flags_strays() {
        let fam = hex_family();
        let an = analyze(&fam, DEFAULT_CELL_BUDGET).unwrap();
        let x = vec![QuadElem::from_frac(1, 100), QuadElem::from_frac(1, 50)];
        let hit = an.classify(&fam, &x).unwrap();
        assert_eq!(an.classes[hit.class].volume, sqrt3(1, 2));
        // A far away point still lands in some canonical translate.
        let y = vec![QuadElem::from_int(50), QuadElem::from_frac(-201, 7)];
        let hit = an.classify(&fam, &y).unwrap();
        let d2 = norm2(&vec_sub(&y, &hit.centroid));
        // Its distance to the instance centroid is small, not tile-sized.
        assert!(d2 < QuadElem::from_int(2));
        // Classifying against a mismatched analysis reports an orphan.
        let bcc = bcc_family();
        let an3 = analyze(&bcc, DEFAULT_CELL_BUDGET).unwrap();
        let z = vec![
            QuadElem::from_frac(1, 3),
            QuadElem::from_frac(1, 5),
            QuadElem::from_frac(1, 7),
        ];
        let hit3 = an3.classify(&bcc, &z).unwrap();
        assert!(an3.classes[hit3.class].volume >= QuadElem::from_frac(1, 24));
    }
}
