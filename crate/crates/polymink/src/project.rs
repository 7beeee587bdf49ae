//! Heuristic indecomposability testing in higher dimensions via random
//! integral projections.
//!
//! A point set `S` in `Z^n` is projected to the plane by two random integer
//! vectors `u, v`: point `p` maps to `(u.p, v.p)`. If every vertex of the
//! shadow polygon has exactly one preimage in `S` and the shadow is
//! indecomposable, the polytope `conv(S)` is indecomposable. A decomposable
//! polytope can never pass, so "Indecomposable" answers are proofs; the
//! other direction only ever reports failure.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::decomp::{poly_decomp, DecompVerdict};
use crate::lattice::{convex_hull_2d, edge_sequence_of, EdgeSequence, LatticePoint};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjectError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point cloud needs at least one point of dimension >= 2")]
    DegenerateCloud,
}

/// A nonempty finite set of distinct integral points of common dimension
/// `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCloud {
    points: Vec<LatticePoint>,
    dim: usize,
}

impl PointCloud {
    /// Deduplicates, keeps input order of first occurrences.
    pub fn new(points: Vec<LatticePoint>) -> Result<Self, ProjectError> {
        let mut seen = Vec::new();
        for p in points {
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        if seen.is_empty() {
            return Err(ProjectError::DegenerateCloud);
        }
        let dim = seen[0].dim();
        if dim < 2 {
            return Err(ProjectError::DegenerateCloud);
        }
        if let Some(p) = seen.iter().find(|p| p.dim() != dim) {
            return Err(ProjectError::DimensionMismatch(p.dim(), dim));
        }
        Ok(PointCloud { points: seen, dim })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Knobs for [`polytope_decomp`].
#[derive(Clone, Debug)]
pub struct ProjectionConfig {
    /// Projection entries are drawn from `{-k_radius, ..., k_radius}`;
    /// `None` means the square of the cloud size, which already gives a
    /// distinct-image probability of at least 3/4 per trial.
    pub k_radius: Option<u64>,
    pub trials: u32,
    /// Trials whose shadow would contain more lattice points than this
    /// (computed by Pick's formula before any enumeration) are abandoned.
    pub shadow_point_cap: u64,
    pub seed: u64,
}

impl Default for ProjectionConfig {
    fn default() -> Self {
        ProjectionConfig {
            k_radius: None,
            trials: 5,
            shadow_point_cap: 10_000_000,
            seed: 0,
        }
    }
}

/// What happened in one projection trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Indecomposable,
    FailureVertexCollision,
    FailureShadowDecomposable,
    FailureShadowTooLarge,
}

/// Full record of one trial: the projection pair, the verdict, and the
/// shadow polygon when one was computed.
#[derive(Clone, Debug)]
pub struct TrialReport {
    pub u: LatticePoint,
    pub v: LatticePoint,
    pub outcome: TrialOutcome,
    pub shadow: Option<EdgeSequence>,
}

/// Overall verdict with per-trial diagnostics; `Indecomposable` is a proof,
/// `Failure` decides nothing.
#[derive(Clone, Debug)]
pub enum PolytopeVerdict {
    Indecomposable(Vec<TrialReport>),
    Failure(Vec<TrialReport>),
}

impl PolytopeVerdict {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, PolytopeVerdict::Indecomposable(_))
    }

    pub fn trials(&self) -> &[TrialReport] {
        match self {
            PolytopeVerdict::Indecomposable(t) | PolytopeVerdict::Failure(t) => t,
        }
    }
}

/// Images `(u.p, v.p)` of every cloud point, order preserved, duplicates
/// kept.
pub fn project(
    s: &PointCloud,
    u: &LatticePoint,
    v: &LatticePoint,
) -> Result<Vec<LatticePoint>, ProjectError> {
    if u.dim() != s.dim() {
        return Err(ProjectError::DimensionMismatch(u.dim(), s.dim()));
    }
    if v.dim() != s.dim() {
        return Err(ProjectError::DimensionMismatch(v.dim(), s.dim()));
    }
    Ok(s.points()
        .iter()
        .map(|p| LatticePoint::new(vec![u.dot(p), v.dot(p)]))
        .collect())
}

/// Lower bound `1 - l(l-1)/(2k)` on the probability that `l` distinct
/// points keep distinct images under one random projection vector drawn
/// from a set of `k` integers. May be negative; callers clamp for display.
pub fn collision_probability_bound(l: u64, k: u64) -> BigRational {
    assert!(k >= 1);
    BigRational::one()
        - BigRational::new(
            BigInt::from(l) * BigInt::from(l.saturating_sub(1)),
            BigInt::from(2 * k),
        )
}

fn trial_seed(master: u64, index: u32) -> u64 {
    // splitmix64 over (master, index) so trials are independent streams.
    let mut z = master ^ (0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize, radius: u64) -> LatticePoint {
    let r = radius as i128;
    LatticePoint::new(
        (0..dim)
            .map(|_| BigInt::from(rng.gen_range(-r..=r)))
            .collect(),
    )
}

/// One projection trial with the given `u, v`.
pub fn run_trial(
    s: &PointCloud,
    u: LatticePoint,
    v: LatticePoint,
    shadow_point_cap: u64,
) -> TrialReport {
    let images = project(s, &u, &v).expect("vectors drawn with cloud dimension");
    let hull = convex_hull_2d(images.iter()).expect("cloud is nonempty");
    if hull.vertex_count() < 2 {
        return TrialReport {
            u,
            v,
            outcome: TrialOutcome::FailureVertexCollision,
            shadow: None,
        };
    }
    for vertex in hull.vertices() {
        let preimages = images.iter().filter(|&img| img == vertex).count();
        if preimages > 1 {
            return TrialReport {
                u,
                v,
                outcome: TrialOutcome::FailureVertexCollision,
                shadow: None,
            };
        }
    }
    let shadow = edge_sequence_of(&hull).expect("hull has >= 2 vertices");
    if shadow.lattice_point_count() > BigUint::from(shadow_point_cap) {
        return TrialReport {
            u,
            v,
            outcome: TrialOutcome::FailureShadowTooLarge,
            shadow: Some(shadow),
        };
    }
    let outcome = match poly_decomp(&shadow) {
        Ok(DecompVerdict::Indecomposable) => TrialOutcome::Indecomposable,
        Ok(DecompVerdict::Decomposable(_)) => TrialOutcome::FailureShadowDecomposable,
        // The cap keeps the lattice-point count sane, but a sliver shadow
        // can still be too wide for the raster.
        Err(_) => TrialOutcome::FailureShadowTooLarge,
    };
    TrialReport {
        u,
        v,
        outcome,
        shadow: Some(shadow),
    }
}

/// Runs up to `cfg.trials` independent random projection trials; the first
/// trial that proves indecomposability short-circuits. Identical seed and
/// config reproduce identical reports.
pub fn polytope_decomp(s: &PointCloud, cfg: &ProjectionConfig) -> PolytopeVerdict {
    let l = s.len() as u64;
    let radius = cfg.k_radius.unwrap_or(l * l).max(1);
    let mut reports = Vec::new();
    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, trial));
        let u = random_vector(&mut rng, s.dim(), radius);
        let v = random_vector(&mut rng, s.dim(), radius);
        let report = run_trial(s, u, v, cfg.shadow_point_cap);
        let won = report.outcome == TrialOutcome::Indecomposable;
        reports.push(report);
        if won {
            return PolytopeVerdict::Indecomposable(reports);
        }
    }
    PolytopeVerdict::Failure(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud(pts: &[&[i64]]) -> PointCloud {
        PointCloud::new(pts.iter().map(|c| LatticePoint::from_i64(c)).collect()).unwrap()
    }

    fn cube() -> PointCloud {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(LatticePoint::from_i64(&[x, y, z]));
                }
            }
        }
        PointCloud::new(pts).unwrap()
    }

    #[test]
    fn axis_projection_of_cube() {
        let s = cube();
        let u = LatticePoint::from_i64(&[1, 0, 0]);
        let v = LatticePoint::from_i64(&[0, 1, 0]);
        let images = project(&s, &u, &v).unwrap();
        assert_eq!(images.len(), 8);
        for corner in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let c = LatticePoint::from_i64(&corner);
            assert_eq!(images.iter().filter(|&i| i == &c).count(), 2);
        }
        // Forced axis projection: every shadow corner has two preimages.
        let r = run_trial(&s, u, v, 1_000_000);
        assert_eq!(r.outcome, TrialOutcome::FailureVertexCollision);
    }

    #[test]
    fn degenerate_rank_one_projection() {
        let s = cloud(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let u = LatticePoint::from_i64(&[1, 2, 4]);
        let images = project(&s, &u, &u).unwrap();
        assert!(images.iter().all(|p| p.x() == p.y()));
    }

    #[test]
    fn simplex_dot_products() {
        let s = cloud(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let u = LatticePoint::from_i64(&[1, 2, 4]);
        let v = LatticePoint::from_i64(&[3, 1, 5]);
        let images = project(&s, &u, &v).unwrap();
        let expect: Vec<LatticePoint> = [[0, 0], [1, 3], [2, 1], [4, 5]]
            .iter()
            .map(|c| LatticePoint::from_i64(c))
            .collect();
        assert_eq!(images, expect);
    }

    #[test]
    fn projection_is_linear() {
        let u = LatticePoint::from_i64(&[3, -2, 7]);
        let p = LatticePoint::from_i64(&[1, 4, -2]);
        let q = LatticePoint::from_i64(&[-5, 0, 3]);
        assert_eq!(u.dot(&p.add(&q)), u.dot(&p) + u.dot(&q));
    }

    #[test]
    fn simplex_usually_proved_indecomposable() {
        let s = cloud(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let cfg = ProjectionConfig {
            seed: 7,
            ..Default::default()
        };
        let verdict = polytope_decomp(&s, &cfg);
        assert!(verdict.is_indecomposable());
        // Every winning trial's shadow must itself be indecomposable.
        for t in verdict.trials() {
            if t.outcome == TrialOutcome::Indecomposable {
                let shadow = t.shadow.as_ref().unwrap();
                assert!(!poly_decomp(shadow).unwrap().is_decomposable());
            }
        }
    }

    #[test]
    fn deterministic_reports() {
        let s = cube();
        let cfg = ProjectionConfig {
            seed: 42,
            trials: 3,
            ..Default::default()
        };
        let a = polytope_decomp(&s, &cfg);
        let b = polytope_decomp(&s, &cfg);
        assert_eq!(a.trials().len(), b.trials().len());
        for (x, y) in a.trials().iter().zip(b.trials()) {
            assert_eq!(x.u, y.u);
            assert_eq!(x.v, y.v);
            assert_eq!(x.outcome, y.outcome);
        }
    }

    #[test]
    fn bound_examples() {
        assert_eq!(
            collision_probability_bound(8, 129),
            BigRational::one() - BigRational::new(28.into(), 129.into())
        );
        assert_eq!(
            collision_probability_bound(2, 9),
            BigRational::one() - BigRational::new(1.into(), 9.into())
        );
        for l in 2u64..30 {
            let k = 2 * l * l + 1;
            assert!(
                collision_probability_bound(l, k)
                    >= BigRational::new(3.into(), 4.into())
            );
        }
    }
}
