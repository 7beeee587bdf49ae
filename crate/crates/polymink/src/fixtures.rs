//! Deterministic generators for test and benchmark instances: named polygon
//! families with known summand counts, random convex polygons, decomposable
//! point clouds, and random sparse polynomials.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use crate::lattice::{
    clockwise_dir_cmp, convex_hull_2d, edge_sequence_of, EdgeSequence, EdgeVector, LatticePoint,
};
use crate::newton::SparsePoly;
use crate::project::PointCloud;

/// The polygon with edges (1,1), (2,1), ..., (m,1) of multiplicity one,
/// m copies of (0,-1) and m(m+1)/2 copies of (-1,0). It has exactly 2^m
/// integral summands: each slanted edge can be taken or left freely.
pub fn twopow_family(m: u32) -> EdgeSequence {
    assert!(m >= 1);
    let t = (m as u64) * (m as u64 + 1) / 2;
    let mut edges = vec![
        EdgeVector::new(BigUint::from(m), LatticePoint::xy(0, -1)).unwrap(),
        EdgeVector::new(BigUint::from(t), LatticePoint::xy(-1, 0)).unwrap(),
    ];
    for i in 1..=m {
        edges.push(EdgeVector::new(BigUint::one(), LatticePoint::xy(i as i64, 1)).unwrap());
    }
    edges.sort_by(|a, b| clockwise_dir_cmp(a.direction(), b.direction()));
    EdgeSequence::new(LatticePoint::xy(0, 0), edges).expect("family closes by construction")
}

/// Axis-aligned rectangle [0,n] x [0,m]; it has (n+1)(m+1) integral
/// summands, the sub-rectangles.
pub fn rectangle(n: u64, m: u64) -> EdgeSequence {
    assert!(n >= 1 && m >= 1);
    let mut edges = vec![
        EdgeVector::new(BigUint::from(m), LatticePoint::xy(0, 1)).unwrap(),
        EdgeVector::new(BigUint::from(n), LatticePoint::xy(1, 0)).unwrap(),
        EdgeVector::new(BigUint::from(m), LatticePoint::xy(0, -1)).unwrap(),
        EdgeVector::new(BigUint::from(n), LatticePoint::xy(-1, 0)).unwrap(),
    ];
    edges.sort_by(|a, b| clockwise_dir_cmp(a.direction(), b.direction()));
    EdgeSequence::new(LatticePoint::xy(0, 0), edges).expect("rectangle closes")
}

/// The dilate c.P: multiplicities and anchor scaled by c.
pub fn dilate(es: &EdgeSequence, c: u64) -> EdgeSequence {
    assert!(c >= 1);
    let edges = es
        .edges()
        .iter()
        .map(|e| {
            EdgeVector::new(e.multiplicity() * BigUint::from(c), e.direction().clone()).unwrap()
        })
        .collect();
    EdgeSequence::new(es.anchor().scaled(&BigInt::from(c)), edges)
        .expect("dilation preserves convexity and closure")
}

/// Random convex lattice polygon with at least 3 vertices, coordinates in
/// [-coord_bound, coord_bound], and brute-force search space (the product
/// of n_i + 1 over the edges) at most `space_cap`. Retries until one fits.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, coord_bound: i64, space_cap: u64) -> EdgeSequence {
    assert!(coord_bound >= 1);
    loop {
        let count = rng.gen_range(3..=10);
        let pts: Vec<LatticePoint> = (0..count)
            .map(|_| {
                LatticePoint::xy(
                    rng.gen_range(-coord_bound..=coord_bound),
                    rng.gen_range(-coord_bound..=coord_bound),
                )
            })
            .collect();
        let hull = convex_hull_2d(pts.iter()).unwrap();
        if hull.vertex_count() < 3 {
            continue;
        }
        let es = edge_sequence_of(&hull).unwrap();
        let mut space = BigUint::one();
        for e in es.edges() {
            space *= e.multiplicity() + BigUint::one();
        }
        if space <= BigUint::from(space_cap) {
            return es;
        }
    }
}

fn random_point_set<R: Rng>(rng: &mut R, dim: usize, bound: i64, count: usize) -> Vec<LatticePoint> {
    loop {
        let pts: Vec<LatticePoint> = (0..count)
            .map(|_| {
                LatticePoint::new(
                    (0..dim)
                        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                        .collect(),
                )
            })
            .collect();
        // At least two distinct points, so the convex hull is not a point.
        if pts.iter().any(|p| p != &pts[0]) {
            return pts;
        }
    }
}

/// A point cloud whose hull is decomposable by construction: the pairwise
/// sum set A + B of two random sets whose hulls are both full-blown (not
/// points), in the given dimension.
pub fn random_decomposable_cloud<R: Rng>(rng: &mut R, dim: usize) -> PointCloud {
    assert!((3..=5).contains(&dim));
    let count_a = rng.gen_range(2..=4);
    let count_b = rng.gen_range(2..=4);
    let a = random_point_set(rng, dim, 3, count_a);
    let b = random_point_set(rng, dim, 3, count_b);
    let mut sums = Vec::new();
    for p in &a {
        for q in &b {
            sums.push(p.add(q));
        }
    }
    PointCloud::new(sums).expect("sum set has distinct points")
}

/// Random bivariate polynomial with up to `max_terms` terms of degree at
/// most `max_deg` per variable and small nonzero coefficients.
pub fn random_bivariate_poly<R: Rng>(rng: &mut R, max_terms: usize, max_deg: u64) -> SparsePoly {
    assert!(max_terms >= 1);
    loop {
        let count = rng.gen_range(1..=max_terms);
        let mut terms = BTreeMap::new();
        for _ in 0..count {
            let e = LatticePoint::xy(
                rng.gen_range(0..=max_deg) as i64,
                rng.gen_range(0..=max_deg) as i64,
            );
            let mut c = BigInt::from(rng.gen_range(-9i64..=9));
            if c.is_zero() {
                c = BigInt::one();
            }
            terms.insert(e, c);
        }
        let f = SparsePoly::new(vec!["x".into(), "y".into()], terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Like [`random_bivariate_poly`] but guaranteed to have at least two terms
/// and no variable dividing it, the shape needed to build reducible inputs
/// the pretest must not misjudge.
pub fn random_reduced_factor<R: Rng>(rng: &mut R, max_terms: usize, max_deg: u64) -> SparsePoly {
    loop {
        let f = random_bivariate_poly(rng, max_terms, max_deg);
        if f.terms().len() < 2 {
            continue;
        }
        let no_var_factor = (0..2).all(|slot| {
            f.terms()
                .keys()
                .any(|e| e.coords()[slot].is_zero())
        });
        if no_var_factor {
            return f;
        }
    }
}
