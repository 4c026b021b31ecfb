//! Exact nearest-lattice-point quantizers.
//!
//! The search enumerates coefficient candidates in lexicographic order with
//! exact ellipsoid pruning, seeded by the componentwise rounded coefficient
//! vector. Ties in squared distance are resolved toward the
//! lexicographically smallest coefficient vector; pruning keeps ties alive
//! (strict bound) so the winner is identical to exhaustive search with the
//! same rule. A deliberately naive boxed oracle double-checks results.

use num_bigint::BigInt;

use crate::exactmath::{dot, norm2, row_times_mat, vec_sub, QuadElem, Rat};
use crate::lattice::{relevant_vectors, Lattice, LatticeError, QForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearestResult {
    pub coeffs: Vec<BigInt>,
    pub point: Vec<QuadElem>,
    pub dist2: QuadElem,
}

pub const DEFAULT_SEARCH_RADIUS: u32 = 2;

pub struct QuantizerSpec {
    lattice: Lattice,
    search_radius: u32,
    form: QForm,
}

impl QuantizerSpec {
    pub fn new(lattice: Lattice, search_radius: u32) -> Result<QuantizerSpec, LatticeError> {
        if search_radius == 0 {
            return Err(LatticeError("search radius must be at least 1".into()));
        }
        let form = QForm::new(&lattice);
        Ok(QuantizerSpec { lattice, search_radius, form })
    }

    pub fn with_default_radius(lattice: Lattice) -> QuantizerSpec {
        QuantizerSpec::new(lattice, DEFAULT_SEARCH_RADIUS).expect("radius 2 is valid")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn search_radius(&self) -> u32 {
        self.search_radius
    }

    /// Nearest lattice point to x, lexicographically smallest coefficients
    /// on ties. Complete: the rounded seed bounds the search ellipsoid, so
    /// no candidate is silently truncated.
    pub fn nearest_point(&self, x: &[QuadElem]) -> NearestResult {
        assert_eq!(x.len(), self.lattice.dim());
        let e = self.lattice.coords_of(x);
        let seed: Vec<BigInt> = e.iter().map(|c| c.round_half_down()).collect();
        let seed_dist = self.dist2_of(&e, &seed);
        let mut state = Search {
            bound: seed_dist,
            best: None,
            ys: Vec::with_capacity(e.len()),
            ts: Vec::with_capacity(e.len()),
        };
        self.descend(&e, &QuadElem::zero(), &mut state);
        let (dist2, coeffs) = state
            .best
            .unwrap_or_else(|| (state.bound.clone(), seed));
        let point = self.lattice.point(&coeffs);
        NearestResult { coeffs, point, dist2 }
    }

    fn dist2_of(&self, e: &[QuadElem], y: &[BigInt]) -> QuadElem {
        let t: Vec<QuadElem> = e
            .iter()
            .zip(y)
            .map(|(c, v)| c - &QuadElem::from_rat(Rat::from_integer(v.clone())))
            .collect();
        let tg = row_times_mat(&t, self.lattice.gram());
        dot(&t, &tg)
    }

    fn descend(&self, e: &[QuadElem], partial: &QuadElem, state: &mut Search) {
        let k = state.ys.len();
        if k == e.len() {
            if state.best.as_ref().map_or(true, |(b, _)| partial < b) {
                state.bound = partial.clone();
                state.best = Some((partial.clone(), state.ys.clone()));
            }
            return;
        }
        let c = self.form.offset_scalar(k, &state.ts);
        let center = &e[k] + &c;
        let rem = &state.bound - partial;
        if rem.sign() < 0 {
            return;
        }
        let rad2 = &rem / self.form.diag(k);
        let mut v = crate::lattice::ceil_minus_sqrt(&center, &rad2);
        let hi = crate::lattice::floor_plus_sqrt(&center, &rad2);
        while v <= hi {
            let t = &e[k] - &QuadElem::from_rat(Rat::from_integer(v.clone()));
            let dev = &t + &c;
            let new_partial = partial + &(&dev.square() * self.form.diag(k));
            // Keep ties alive: only strictly worse partials are pruned.
            if new_partial <= state.bound {
                state.ys.push(v.clone());
                state.ts.push(t);
                self.descend(e, &new_partial, state);
                state.ts.pop();
                state.ys.pop();
            }
            v += 1;
        }
    }
}

struct Search {
    bound: QuadElem,
    best: Option<(QuadElem, Vec<BigInt>)>,
    ys: Vec<BigInt>,
    ts: Vec<QuadElem>,
}

/// Independent audit quantizer: exhaustive box of half-width `radius`
/// around the rounded coefficients, full distance per candidate, same tie
/// rule. No shared search code with the production path.
pub fn nearest_point_oracle(lat: &Lattice, x: &[QuadElem], radius: u32) -> NearestResult {
    assert_eq!(x.len(), lat.dim());
    let e = lat.coords_of(x);
    let center: Vec<BigInt> = e.iter().map(|c| c.round_half_down()).collect();
    let n = lat.dim();
    let r = BigInt::from(radius);
    let mut best: Option<(QuadElem, Vec<BigInt>)> = None;
    let mut y: Vec<BigInt> = center.iter().map(|c| c - &r).collect();
    loop {
        let point = lat.point(&y);
        let diff = vec_sub(x, &point);
        let d2 = norm2(&diff);
        if best.as_ref().map_or(true, |(b, _)| &d2 < b) {
            best = Some((d2, y.clone()));
        }
        // Odometer increment in lexicographic order.
        let mut i = n;
        loop {
            if i == 0 {
                let (dist2, coeffs) = best.unwrap();
                let point = lat.point(&coeffs);
                return NearestResult { coeffs, point, dist2 };
            }
            i -= 1;
            if y[i] < &center[i] + &r {
                y[i] += 1;
                for j in (i + 1)..n {
                    y[j] = &center[j] - &r;
                }
                break;
            }
        }
    }
}

/// Halfspace description x.w <= (w.w)/2 of the origin nearest-point cell.
pub fn voronoi_halfspaces(lat: &Lattice) -> Vec<(Vec<QuadElem>, QuadElem)> {
    relevant_vectors(lat)
        .into_iter()
        .map(|w| {
            let rhs = &norm2(&w) / &QuadElem::from_int(2);
            (w, rhs)
        })
        .collect()
}

/// A bank of component quantizers plus their common refinement, the
/// intersection lattice.
pub struct MDQuantizer {
    components: Vec<QuantizerSpec>,
    joint: Lattice,
}

impl MDQuantizer {
    pub fn new(components: Vec<Lattice>, search_radius: u32) -> Result<MDQuantizer, LatticeError> {
        if components.is_empty() {
            return Err(LatticeError("need at least one component lattice".into()));
        }
        let refs: Vec<&Lattice> = components.iter().collect();
        let joint = Lattice::intersect(&refs)?;
        let components = components
            .into_iter()
            .map(|l| QuantizerSpec::new(l, search_radius))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MDQuantizer { components, joint })
    }

    pub fn components(&self) -> &[QuantizerSpec] {
        &self.components
    }

    pub fn joint(&self) -> &Lattice {
        &self.joint
    }

    /// One description per component: the nearest point in each lattice.
    pub fn md_quantize(&self, x: &[QuadElem]) -> Vec<NearestResult> {
        self.components.iter().map(|q| q.nearest_point(x)).collect()
    }
}
