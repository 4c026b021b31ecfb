//! Seeded Monte Carlo corroboration of the exact honeycomb statistics.
//!
//! Points are drawn uniformly from the fundamental parallelepiped of the
//! joint lattice: x = sum of u_i b_i over the generator rows b_i, with each
//! u_i an exact rational k/2^32 and k a 32-bit draw. Every sample gets its
//! own ChaCha12 stream (seed fixed, stream = sample index), so results are
//! byte-identical for a given seed no matter how many threads run the
//! sampling; only the final reduction is sequential.
//!
//! Classification is exact: a sample either lands in an enumerated cell or
//! the run fails hard, since an orphan means the cell enumeration missed
//! part of the tile.

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::exactmath::{norm2, rat_int, row_times_mat, vec_sub, QuadElem, Rat};
use crate::honeycomb::{rat_f64, HoneycombAnalysis, HoneycombFamily};
use crate::lattice::Lattice;

/// RNG contract: fixed seed, one dedicated ChaCha12 stream per sample index.
pub const RNG_NAME: &str = "chacha12/stream-per-sample";

#[derive(Clone, Copy, Debug)]
pub struct McConfig {
    pub seed: u64,
    pub samples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McError(pub String);

impl std::fmt::Display for McError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "monte carlo error: {}", self.0)
    }
}

impl std::error::Error for McError {}

/// The sample coordinates u in [0,1)^n for one sample index: exact rationals
/// with denominator 2^32.
pub fn sample_coeffs(seed: u64, index: u64, n: usize) -> Vec<Rat> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(index);
    (0..n)
        .map(|_| Rat::new(BigInt::from(rng.next_u32()), BigInt::from(1u64 << 32)))
        .collect()
}

/// One uniform sample in the fundamental parallelepiped of `joint`.
pub fn sample_point(joint: &Lattice, seed: u64, index: u64) -> Vec<QuadElem> {
    let u: Vec<QuadElem> = sample_coeffs(seed, index, joint.dim())
        .into_iter()
        .map(QuadElem::from_rat)
        .collect();
    row_times_mat(&u, joint.gen())
}

struct Outcome {
    class: usize,
    /// Squared distance to the centroid of the containing cell.
    dist2: QuadElem,
}

fn run_samples(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    cfg: &McConfig,
) -> Result<Vec<Outcome>, McError> {
    if cfg.samples == 0 {
        return Err(McError("sample count must be positive".into()));
    }
    let joint = family.joint();
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let x = sample_point(joint, cfg.seed, i);
            let hit = analysis.classify(family, &x).ok_or_else(|| {
                McError(format!("sample {i} fell in a cell missing from the enumeration"))
            })?;
            let d = vec_sub(&x, &hit.centroid);
            Ok(Outcome { class: hit.class, dist2: norm2(&d) })
        })
        .collect()
}

/// One class-probability estimate against its exact value.
#[derive(Clone, Debug)]
pub struct ClassEstimate {
    pub class: usize,
    pub hits: u64,
    pub estimate: f64,
    /// Binomial standard error of the estimate.
    pub std_error: f64,
    pub exact: Rat,
    pub exact_float: f64,
    /// (estimate - exact) / std_error; 0 when the error vanishes.
    pub z: f64,
}

#[derive(Clone, Debug)]
pub struct ProbabilityReport {
    pub seed: u64,
    pub samples: u64,
    pub rng: &'static str,
    pub classes: Vec<ClassEstimate>,
    pub max_abs_z: f64,
}

/// Estimate every class probability and compare against the exact values.
pub fn estimate_probabilities(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    cfg: &McConfig,
) -> Result<ProbabilityReport, McError> {
    let outcomes = run_samples(family, analysis, cfg)?;
    Ok(probability_report(analysis, cfg, &outcomes))
}

fn probability_report(
    analysis: &HoneycombAnalysis,
    cfg: &McConfig,
    outcomes: &[Outcome],
) -> ProbabilityReport {
    let mut hits = vec![0u64; analysis.classes.len()];
    for o in outcomes {
        hits[o.class] += 1;
    }
    let n = cfg.samples as f64;
    let mut classes = Vec::with_capacity(hits.len());
    let mut max_abs_z: f64 = 0.0;
    for (class, &h) in hits.iter().enumerate() {
        let est = h as f64 / n;
        let se = (est * (1.0 - est) / n).sqrt();
        let exact = analysis.classes[class].p.clone();
        let exact_float = rat_f64(&exact);
        let z = if se > 0.0 { (est - exact_float) / se } else { 0.0 };
        max_abs_z = max_abs_z.max(z.abs());
        classes.push(ClassEstimate {
            class,
            hits: h,
            estimate: est,
            std_error: se,
            exact,
            exact_float,
            z,
        });
    }
    ProbabilityReport { seed: cfg.seed, samples: cfg.samples, rng: RNG_NAME, classes, max_abs_z }
}

/// Per-dimension mean squared error estimate against the exact value.
#[derive(Clone, Debug)]
pub struct MseReport {
    pub seed: u64,
    pub samples: u64,
    pub rng: &'static str,
    /// Mean of |x - centroid|^2 / n over the samples, exact.
    pub estimate: QuadElem,
    pub estimate_float: f64,
    /// Sample standard error of the estimate.
    pub std_error: f64,
    /// Sum of count_i * U_i over classes, divided by n times the tile volume.
    pub exact: QuadElem,
    pub exact_float: f64,
    pub z: f64,
}

/// Estimate the per-dimension mean squared error and compare it against the
/// exact moment totals.
pub fn estimate_mse(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    cfg: &McConfig,
) -> Result<MseReport, McError> {
    let outcomes = run_samples(family, analysis, cfg)?;
    Ok(mse_report(analysis, cfg, &outcomes))
}

fn mse_report(analysis: &HoneycombAnalysis, cfg: &McConfig, outcomes: &[Outcome]) -> MseReport {
    let n = QuadElem::from_int(analysis.n as i64);
    let mut total = QuadElem::zero();
    let mut fsum = 0.0;
    let mut fsumsq = 0.0;
    for o in outcomes {
        let per_dim = &o.dist2 / &n;
        let f = per_dim.to_f64();
        fsum += f;
        fsumsq += f * f;
        total = &total + &per_dim;
    }
    let count = cfg.samples as f64;
    let estimate = &total / &QuadElem::from_rat(rat_int(cfg.samples as i64));
    let mean = fsum / count;
    let var = (fsumsq / count - mean * mean).max(0.0);
    let se = (var / count).sqrt();
    let exact = &(&analysis.merit.mean_second_moment / &analysis.tile_volume) / &n;
    let exact_float = exact.to_f64();
    let estimate_float = estimate.to_f64();
    let z = if se > 0.0 { (estimate_float - exact_float) / se } else { 0.0 };
    MseReport {
        seed: cfg.seed,
        samples: cfg.samples,
        rng: RNG_NAME,
        estimate,
        estimate_float,
        std_error: se,
        exact,
        exact_float,
        z,
    }
}

#[derive(Clone, Debug)]
pub struct McReport {
    pub probabilities: ProbabilityReport,
    pub mse: MseReport,
}

/// Both estimates from a single sampling pass.
pub fn corroborate(
    family: &HoneycombFamily,
    analysis: &HoneycombAnalysis,
    cfg: &McConfig,
) -> Result<McReport, McError> {
    let outcomes = run_samples(family, analysis, cfg)?;
    Ok(McReport {
        probabilities: probability_report(analysis, cfg, &outcomes),
        mse: mse_report(analysis, cfg, &outcomes),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::honeycomb::analyze;

    fn hex_setup() -> (HoneycombFamily, HoneycombAnalysis) {
        let dec = catalog::get("hexagonal3").unwrap();
        let family = HoneycombFamily::new(dec.component_lattices()).unwrap();
        let analysis = analyze(&family, 10_000).unwrap();
        (family, analysis)
    }

    #[test]
    fn zero_samples_rejected() {
        let (family, analysis) = hex_setup();
        let cfg = McConfig { seed: 1, samples: 0 };
        assert!(estimate_probabilities(&family, &analysis, &cfg).is_err());
    }

    #[test]
    fn sample_coeffs_deterministic_and_in_range() {
        let a = sample_coeffs(7, 3, 4);
        let b = sample_coeffs(7, 3, 4);
        assert_eq!(a, b);
        let c = sample_coeffs(7, 4, 4);
        assert_ne!(a, c);
        for u in &a {
            assert!(*u >= rat_int(0) && *u < rat_int(1));
            assert_eq!(u.denom().bits() <= 33, true);
        }
    }

    #[test]
    fn hexagonal_probabilities_near_quarter() {
        let (family, analysis) = hex_setup();
        let cfg = McConfig { seed: 2024, samples: 4000 };
        let rep = estimate_probabilities(&family, &analysis, &cfg).unwrap();
        assert_eq!(rep.classes.len(), 4);
        let total: u64 = rep.classes.iter().map(|c| c.hits).sum();
        assert_eq!(total, 4000);
        for c in &rep.classes {
            assert_eq!(c.exact, Rat::new(BigInt::from(1), BigInt::from(4)));
            assert!(c.z.abs() < 4.0, "class {} z = {}", c.class, c.z);
        }
    }

    #[test]
    fn hexagonal_mse_matches_exact_within_three_sigma() {
        let (family, analysis) = hex_setup();
        let cfg = McConfig { seed: 5, samples: 4000 };
        let rep = estimate_mse(&family, &analysis, &cfg).unwrap();
        assert!(rep.std_error > 0.0);
        assert!(rep.z.abs() < 3.0, "z = {}", rep.z);
    }

    #[test]
    fn single_lattice_hexagonal_merit_corroborated() {
        // One-component family: the cells are the Voronoi regions of the
        // hexagonal lattice itself and the dimensionless merit is 0.080188.
        let a2 = catalog::reference_lattice("a2").unwrap();
        let family = HoneycombFamily::new(vec![a2]).unwrap();
        let analysis = analyze(&family, 100).unwrap();
        assert_eq!(analysis.classes.len(), 1);
        assert!((analysis.merit.g_float - 0.080188).abs() < 5e-6);
        let cfg = McConfig { seed: 9, samples: 4000 };
        let rep = estimate_mse(&family, &analysis, &cfg).unwrap();
        let v = analysis.tile_volume.to_f64();
        let scale = v.powf(-2.0 / analysis.n as f64);
        let g_mc = rep.estimate_float * scale;
        assert!((g_mc - 0.080188).abs() < 3.0 * rep.std_error * scale, "g_mc = {g_mc}");
    }

    #[test]
    fn corroborate_reuses_one_pass() {
        let (family, analysis) = hex_setup();
        let cfg = McConfig { seed: 11, samples: 500 };
        let both = corroborate(&family, &analysis, &cfg).unwrap();
        let probs = estimate_probabilities(&family, &analysis, &cfg).unwrap();
        let mse = estimate_mse(&family, &analysis, &cfg).unwrap();
        let hits_a: Vec<u64> = both.probabilities.classes.iter().map(|c| c.hits).collect();
        let hits_b: Vec<u64> = probs.classes.iter().map(|c| c.hits).collect();
        assert_eq!(hits_a, hits_b);
        assert_eq!(both.mse.estimate, mse.estimate);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let (family, analysis) = hex_setup();
        let cfg = McConfig { seed: 42, samples: 800 };
        let here = estimate_mse(&family, &analysis, &cfg).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let single = pool.install(|| estimate_mse(&family, &analysis, &cfg).unwrap());
        assert_eq!(here.estimate, single.estimate);
        assert_eq!(here.std_error.to_bits(), single.std_error.to_bits());
    }
}
