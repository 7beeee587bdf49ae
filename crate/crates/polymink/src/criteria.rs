//! Closed-form indecomposability criteria and hard-instance generation.
//!
//! For a cone `conv(v, Q)` over a polytope `Q` lying in a hyperplane that
//! misses the apex `v`, integral indecomposability is equivalent to
//! `gcd(v - v_1, ..., v - v_k) = 1` over the base vertices. Segments and
//! triangles are the low-dimensional specializations. The module also
//! builds the polygon family that encodes Partition instances, which is
//! what makes the general decision problem NP-complete.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{
    clockwise_dir_cmp, gcd_vec, gcd_vecs, EdgeSequence, EdgeVector, LatticePoint,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("base vertices do not lie in a common hyperplane")]
    NotCoplanar,
    #[error("apex lies in the hyperplane spanned by the base")]
    ApexInHyperplane,
    #[error("base list contains a non-extreme point")]
    NonExtremeBase,
    #[error("partition total is odd")]
    OddTotal,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("base must contain at least one vertex")]
    EmptyBase,
}

/// A cone `conv(apex, base)`: the base vertices are claimed to span a
/// hyperplane (or less) that misses the apex. The claim is verified, not
/// trusted.
#[derive(Clone, Debug)]
pub struct ConeInstance {
    pub apex: LatticePoint,
    pub base_vertices: Vec<LatticePoint>,
}

/// Tests `conv(apex, base)` for integral indecomposability: true iff the
/// gcd over all coordinates of all `apex - v_i` equals 1.
///
/// The preconditions are checked exactly over the integers: the base must
/// admit a hyperplane that misses the apex, and every listed base point
/// must be a vertex of the base's hull (non-extreme points are rejected
/// rather than silently hulled away).
pub fn cone_indecomposable(c: &ConeInstance) -> Result<bool, CriteriaError> {
    let base = &c.base_vertices;
    if base.is_empty() {
        return Err(CriteriaError::EmptyBase);
    }
    let n = c.apex.dim();
    if base.iter().any(|v| v.dim() != n) {
        return Err(CriteriaError::DimensionMismatch);
    }
    let diffs: Vec<LatticePoint> = base[1..].iter().map(|v| v.sub(&base[0])).collect();
    let base_rank = rank(diffs.iter().map(|d| d.coords().to_vec()).collect());
    if base_rank == n {
        return Err(CriteriaError::NotCoplanar);
    }
    let apex_diff = c.apex.sub(&base[0]);
    let mut with_apex: Vec<Vec<BigInt>> =
        diffs.iter().map(|d| d.coords().to_vec()).collect();
    with_apex.push(apex_diff.coords().to_vec());
    if rank(with_apex) == base_rank {
        return Err(CriteriaError::ApexInHyperplane);
    }
    for (i, v) in base.iter().enumerate() {
        let others: Vec<&LatticePoint> = base
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p)
            .collect();
        if !others.is_empty() && in_convex_hull(v, &others) {
            return Err(CriteriaError::NonExtremeBase);
        }
    }
    let g = gcd_vecs(base.iter().map(|v| c.apex.sub(v)).collect::<Vec<_>>().iter());
    Ok(g == BigUint::one())
}

/// An integral segment `conv(a, b)`, `a != b`, is indecomposable iff
/// `gcd(a - b) = 1`.
pub fn segment_indecomposable(a: &LatticePoint, b: &LatticePoint) -> bool {
    assert_ne!(a, b, "segment needs two distinct endpoints");
    gcd_vec(&a.sub(b)) == BigUint::one()
}

/// An integral triangle `conv(v0, v1, v2)` (any ambient dimension) is
/// indecomposable iff `gcd(v0 - v1, v0 - v2) = 1`. Collinear triples
/// delegate to the segment rule on their hull.
pub fn triangle_indecomposable(
    v0: &LatticePoint,
    v1: &LatticePoint,
    v2: &LatticePoint,
) -> bool {
    assert!(
        !(v0 == v1 && v1 == v2),
        "triangle needs at least two distinct points"
    );
    let d1 = v1.sub(v0);
    let d2 = v2.sub(v0);
    let r = rank(vec![d1.coords().to_vec(), d2.coords().to_vec()]);
    if r <= 1 {
        let mut pts = [v0, v1, v2];
        pts.sort();
        return segment_indecomposable(pts[0], pts[2]);
    }
    gcd_vecs([d1, d2].iter()) == BigUint::one()
}

/// A Partition instance: positive integers `s_1 <= ... <= s_m`.
#[derive(Clone, Debug)]
pub struct PartitionInstance {
    s: Vec<u64>,
}

impl PartitionInstance {
    /// Values are sorted into non-decreasing order; zeros are rejected.
    pub fn new(mut s: Vec<u64>) -> Option<Self> {
        if s.is_empty() || s.contains(&0) {
            return None;
        }
        s.sort_unstable();
        Some(PartitionInstance { s })
    }

    pub fn values(&self) -> &[u64] {
        &self.s
    }

    pub fn total(&self) -> u128 {
        self.s.iter().map(|&v| v as u128).sum()
    }
}

/// The reduction polygon: edge sequence
/// `(s_1,1), ..., (s_m,1), m*(0,-1), (-t/2,-1), (-t/2,1)`, with equal
/// `(s_i, 1)` directions merged into one edge of higher multiplicity. The
/// polygon is integrally decomposable iff some subsequence of `s` sums to
/// `t/2`.
pub fn partition_to_polygon(p: &PartitionInstance) -> Result<EdgeSequence, CriteriaError> {
    let t = p.total();
    if t % 2 != 0 {
        return Err(CriteriaError::OddTotal);
    }
    let half = BigInt::from(t / 2);
    let m = p.s.len();
    let mut edges: Vec<EdgeVector> = Vec::new();
    let mut i = 0;
    while i < m {
        let mut run = 1usize;
        while i + run < m && p.s[i + run] == p.s[i] {
            run += 1;
        }
        edges.push(
            EdgeVector::new(
                BigUint::from(run),
                LatticePoint::xy(BigInt::from(p.s[i]), BigInt::one()),
            )
            .unwrap(),
        );
        i += run;
    }
    edges.push(EdgeVector::new(BigUint::from(m), LatticePoint::xy(0, -1)).unwrap());
    edges.push(EdgeVector::new(BigUint::one(), LatticePoint::xy(-half.clone(), -BigInt::one())).unwrap());
    edges.push(EdgeVector::new(BigUint::one(), LatticePoint::xy(-half, BigInt::one())).unwrap());
    edges.sort_by(|a, b| clockwise_dir_cmp(a.direction(), b.direction()));
    Ok(EdgeSequence::new(LatticePoint::origin(2), edges)
        .expect("the reduction sequence is polygonal"))
}

/// Rank of an integer matrix (rows as vectors), exact, by fraction-free
/// elimination.
pub(crate) fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| !r.is_empty());
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let pv = rows[r][col].clone();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..ncols {
                let v = &rows[i][j] * &pv - &rows[r][j] * &f;
                rows[i][j] = v;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Exact convex-hull membership: is `p` a convex combination of `pts`?
/// Phase-I simplex over rationals with Bland's rule.
pub(crate) fn in_convex_hull(p: &LatticePoint, pts: &[&LatticePoint]) -> bool {
    let n = p.dim();
    let k = pts.len();
    // Constraints: sum lambda_j * pts_j = p, sum lambda_j = 1, lambda >= 0.
    let rows = n + 1;
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k]; rows];
    let mut b: Vec<BigRational> = Vec::with_capacity(rows);
    for i in 0..n {
        for (j, q) in pts.iter().enumerate() {
            a[i][j] = BigRational::from(q.coords()[i].clone());
        }
        b.push(BigRational::from(p.coords()[i].clone()));
    }
    for j in 0..k {
        a[n][j] = BigRational::one();
    }
    b.push(BigRational::one());
    lp_feasible(a, b)
}

/// Feasibility of `{A x = b, x >= 0}` by phase-I simplex, exact arithmetic.
fn lp_feasible(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> bool {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    for i in 0..rows {
        if b[i].is_negative() {
            for v in &mut a[i] {
                *v = -v.clone();
            }
            b[i] = -b[i].clone();
        }
    }
    // Tableau columns: original vars, artificial vars, rhs.
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        row[..cols].clone_from_slice(&a[i]);
        row[cols + i] = BigRational::one();
        row[width - 1] = b[i].clone();
        t.push(row);
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // Phase-I objective: minimize the sum of artificials. Reduced cost of
    // column j is -(sum of column j over rows with artificial basis).
    loop {
        let mut entering = None;
        for j in 0..cols + rows {
            if basis.contains(&j) {
                continue;
            }
            let mut red = BigRational::zero();
            for i in 0..rows {
                if basis[i] >= cols {
                    red -= &t[i][j];
                }
            }
            if red.is_negative() {
                entering = Some(j);
                break; // Bland: smallest index
            }
        }
        let Some(j) = entering else { break };
        let mut leaving: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..rows {
            if t[i][j].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leaving.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leaving = Some(i);
                }
            }
        }
        let Some(li) = leaving else { break }; // unbounded cannot happen here
        let pivot = t[li][j].clone();
        for v in &mut t[li] {
            *v = &*v / &pivot;
        }
        for i in 0..rows {
            if i != li && !t[i][j].is_zero() {
                let f = t[i][j].clone();
                for c in 0..width {
                    let delta = &f * &t[li][c];
                    t[i][c] -= delta;
                }
            }
        }
        basis[li] = j;
    }
    let mut infeasibility = BigRational::zero();
    for i in 0..rows {
        if basis[i] >= cols {
            infeasibility += &t[i][width - 1];
        }
    }
    infeasibility.is_zero()
}
