//! Exact integer lattice geometry in the plane.
//!
//! Everything here works on arbitrary-precision integers; there is no
//! floating point anywhere. Convex polygons are canonically encoded as
//! [`EdgeSequence`]s: a clockwise cyclic list of `n_i * e_i` edge vectors
//! (`e_i` primitive) anchored at the lexicographically smallest vertex.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("the zero vector has no primitive decomposition")]
    ZeroVector,
    #[error("a single point has no edge sequence")]
    SinglePoint,
    #[error("empty point set")]
    EmptySet,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid edge sequence: {0}")]
    InvalidSequence(String),
}

/// An integer vector in `Z^n`, `n >= 1`.
///
/// Ordering is lexicographic (first coordinate, then the next, ...), which
/// is the order used for anchor normalization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    // Dimension 0 is allowed: it is the exponent vector of a constant
    // polynomial. Geometry functions all demand dimension 2 or more.
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// 2-D convenience constructor.
    pub fn xy(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint(vec![x.into(), y.into()])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn x(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn y(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub(crate) fn to_i64_pair(&self) -> Option<(i64, i64)> {
        if self.dim() != 2 {
            return None;
        }
        Some((self.x().to_i64()?, self.y().to_i64()?))
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// 2-D cross product `a.x * b.y - a.y * b.x`.
pub fn cross(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    debug_assert_eq!(a.dim(), 2);
    debug_assert_eq!(b.dim(), 2);
    a.x() * b.y() - a.y() * b.x()
}

/// gcd of the absolute values of all coordinates; 0 only for the zero vector.
pub fn gcd_vec(v: &LatticePoint) -> BigUint {
    let mut g = BigUint::zero();
    for c in v.coords() {
        g = g.gcd(&c.magnitude().clone());
    }
    g
}

/// gcd over the coordinates of a whole collection of vectors.
pub fn gcd_vecs<'a>(vs: impl IntoIterator<Item = &'a LatticePoint>) -> BigUint {
    let mut g = BigUint::zero();
    for v in vs {
        g = g.gcd(&gcd_vec(v));
    }
    g
}

/// Splits a nonzero 2-D vector `E` into `n * e` with `e` primitive and
/// `n = gcd_vec(E)`.
pub fn primitive_decompose(e: &LatticePoint) -> Result<(BigUint, LatticePoint), LatticeError> {
    if e.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let n = gcd_vec(e);
    let bn = BigInt::from(n.clone());
    let prim = LatticePoint::new(e.coords().iter().map(|c| c / &bn).collect());
    Ok((n, prim))
}

/// One maximal edge of a polygon: a primitive direction taken `multiplicity`
/// times, so the edge contains `multiplicity + 1` lattice points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    multiplicity: BigUint,
    direction: LatticePoint,
}

impl EdgeVector {
    pub fn new(multiplicity: BigUint, direction: LatticePoint) -> Result<Self, LatticeError> {
        if multiplicity.is_zero() {
            return Err(LatticeError::InvalidSequence(
                "edge multiplicity must be positive".into(),
            ));
        }
        if direction.dim() != 2 {
            return Err(LatticeError::DimensionMismatch(direction.dim(), 2));
        }
        if gcd_vec(&direction) != BigUint::one() {
            return Err(LatticeError::InvalidSequence(format!(
                "direction {direction} is not primitive"
            )));
        }
        Ok(EdgeVector {
            multiplicity,
            direction,
        })
    }

    pub fn multiplicity(&self) -> &BigUint {
        &self.multiplicity
    }

    pub fn direction(&self) -> &LatticePoint {
        &self.direction
    }

    /// The full edge vector `n * e`.
    pub fn vector(&self) -> LatticePoint {
        self.direction.scaled(&BigInt::from(self.multiplicity.clone()))
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{:?}", self.multiplicity, self.direction)
    }
}

/// Clockwise angular order on primitive directions, starting at `(0, 1)`.
///
/// A canonical clockwise boundary walk that starts at the lexicographically
/// smallest vertex lists its edge directions in exactly this order.
pub fn clockwise_dir_cmp(a: &LatticePoint, b: &LatticePoint) -> Ordering {
    fn half(v: &LatticePoint) -> u8 {
        // 0: x > 0, or straight up; 1: x < 0, or straight down.
        if v.x().is_positive() || (v.x().is_zero() && v.y().is_positive()) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_negative() {
            Ordering::Less
        } else if c.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Canonical edge-sequence encoding of a convex lattice polygon.
///
/// Invariants (enforced on construction):
/// - every direction is primitive, multiplicities are positive;
/// - the signed edge vectors sum to zero (the boundary closes);
/// - directions are strictly sorted in clockwise angular order, so the walk
///   from `anchor` is a strictly convex clockwise boundary;
/// - a degenerate segment is exactly two antiparallel edges of equal
///   multiplicity; a single point has no edges at all.
///
/// Because the directions are in canonical order, `anchor` is always the
/// lexicographically smallest vertex of the polygon.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSequence {
    anchor: LatticePoint,
    edges: Vec<EdgeVector>,
}

impl EdgeSequence {
    pub fn new(anchor: LatticePoint, edges: Vec<EdgeVector>) -> Result<Self, LatticeError> {
        if anchor.dim() != 2 {
            return Err(LatticeError::DimensionMismatch(anchor.dim(), 2));
        }
        match edges.len() {
            0 => {}
            1 => {
                return Err(LatticeError::InvalidSequence(
                    "one edge cannot close a boundary".into(),
                ))
            }
            2 => {
                if edges[0].direction() != &edges[1].direction().neg() {
                    return Err(LatticeError::InvalidSequence(
                        "a two-edge sequence must be antiparallel".into(),
                    ));
                }
                if edges[0].multiplicity() != edges[1].multiplicity() {
                    return Err(LatticeError::InvalidSequence(
                        "antiparallel edges must have equal multiplicity".into(),
                    ));
                }
                if clockwise_dir_cmp(edges[0].direction(), edges[1].direction())
                    != Ordering::Less
                {
                    return Err(LatticeError::InvalidSequence(
                        "segment edges out of canonical order".into(),
                    ));
                }
            }
            _ => {
                for w in edges.windows(2) {
                    if clockwise_dir_cmp(w[0].direction(), w[1].direction()) != Ordering::Less {
                        return Err(LatticeError::InvalidSequence(
                            "directions not in strict clockwise order".into(),
                        ));
                    }
                }
                let mut sum = LatticePoint::origin(2);
                for e in &edges {
                    sum = sum.add(&e.vector());
                }
                if !sum.is_zero() {
                    return Err(LatticeError::InvalidSequence(
                        "edge vectors do not sum to zero".into(),
                    ));
                }
            }
        }
        Ok(EdgeSequence { anchor, edges })
    }

    /// A single-point "polygon".
    pub fn point(anchor: LatticePoint) -> Self {
        assert_eq!(anchor.dim(), 2);
        EdgeSequence {
            anchor,
            edges: Vec::new(),
        }
    }

    pub fn anchor(&self) -> &LatticePoint {
        &self.anchor
    }

    pub fn edges(&self) -> &[EdgeVector] {
        &self.edges
    }

    /// Number of edges `m`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `N`: the largest edge multiplicity (0 for a point).
    pub fn max_multiplicity(&self) -> BigUint {
        self.edges
            .iter()
            .map(|e| e.multiplicity().clone())
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn is_point(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_segment(&self) -> bool {
        self.edges.len() == 2
    }

    /// Vertices of the boundary walk, clockwise from the anchor.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        if self.is_point() {
            return vec![self.anchor.clone()];
        }
        if self.is_segment() {
            return vec![self.anchor.clone(), self.anchor.add(&self.edges[0].vector())];
        }
        let mut out = Vec::with_capacity(self.edges.len());
        let mut v = self.anchor.clone();
        for e in &self.edges {
            out.push(v.clone());
            v = v.add(&e.vector());
        }
        debug_assert_eq!(v, self.anchor);
        out
    }

    pub fn translated(&self, delta: &LatticePoint) -> EdgeSequence {
        EdgeSequence {
            anchor: self.anchor.add(delta),
            edges: self.edges.clone(),
        }
    }

    /// The same polygon translated so its anchor sits at the origin.
    pub fn translated_to_origin(&self) -> EdgeSequence {
        self.translated(&self.anchor.neg())
    }

    /// Twice the (unsigned) area, by the shoelace formula.
    pub fn double_area(&self) -> BigUint {
        let vs = self.vertices();
        if vs.len() < 3 {
            return BigUint::zero();
        }
        let mut s = BigInt::zero();
        for i in 0..vs.len() {
            let a = &vs[i];
            let b = &vs[(i + 1) % vs.len()];
            s += a.x() * b.y() - b.x() * a.y();
        }
        s.magnitude().clone()
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_point_count(&self) -> BigUint {
        match self.edges.len() {
            0 => BigUint::one(),
            2 => self.edges[0].multiplicity() + BigUint::one(),
            _ => self.edges.iter().map(|e| e.multiplicity().clone()).sum(),
        }
    }

    /// Exact number of lattice points in the closed polygon, via Pick's
    /// formula; does not enumerate anything.
    pub fn lattice_point_count(&self) -> BigUint {
        // t = A + B/2 + 1, i.e. 2t = 2A + B + 2.
        let two_t = self.double_area() + self.boundary_point_count() + BigUint::from(2u32);
        two_t / BigUint::from(2u32)
    }
}

impl fmt::Debug for EdgeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSequence{{anchor: {:?}, edges: {:?}}}", self.anchor, self.edges)
    }
}

/// A convex lattice polygon stored as its extreme points, clockwise,
/// starting at the lexicographically smallest vertex. A segment has two
/// vertices, a point one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polygon {
    vertices: Vec<LatticePoint>,
}

impl Polygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Convex hull of a nonempty set of points in `Z^2`: clockwise extreme
/// points starting at the lexicographically smallest vertex. Collinear
/// non-extreme points are dropped; a singleton or collinear input yields a
/// one- or two-vertex polygon.
pub fn convex_hull_2d<'a>(
    points: impl IntoIterator<Item = &'a LatticePoint>,
) -> Result<Polygon, LatticeError> {
    let mut pts: Vec<&LatticePoint> = points.into_iter().collect();
    if pts.is_empty() {
        return Err(LatticeError::EmptySet);
    }
    if let Some(p) = pts.iter().find(|p| p.dim() != 2) {
        return Err(LatticeError::DimensionMismatch(p.dim(), 2));
    }
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(Polygon {
            vertices: vec![pts[0].clone()],
        });
    }
    // Monotone chain, keeping only strict clockwise turns.
    fn chain<'a>(iter: impl Iterator<Item = &'a LatticePoint>) -> Vec<&'a LatticePoint> {
        let mut out: Vec<&LatticePoint> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if cross(&b.sub(a), &p.sub(b)).is_negative() {
                    break;
                }
                out.pop();
            }
            out.push(p);
        }
        out
    }
    let upper = chain(pts.iter().copied());
    let lower = chain(pts.iter().rev().copied());
    let mut vertices: Vec<LatticePoint> = upper.into_iter().cloned().collect();
    for p in lower.into_iter().skip(1).take(pts.len()) {
        if p != &vertices[0] {
            vertices.push(p.clone());
        }
    }
    Ok(Polygon { vertices })
}

/// Edge sequence of a polygon with at least two vertices. A segment becomes
/// two antiparallel edges.
pub fn edge_sequence_of(p: &Polygon) -> Result<EdgeSequence, LatticeError> {
    let vs = p.vertices();
    match vs.len() {
        0 => Err(LatticeError::EmptySet),
        1 => Err(LatticeError::SinglePoint),
        2 => {
            let (n, e) = primitive_decompose(&vs[1].sub(&vs[0]))?;
            let fwd = EdgeVector::new(n.clone(), e.clone())?;
            let back = EdgeVector::new(n, e.neg())?;
            EdgeSequence::new(vs[0].clone(), vec![fwd, back])
        }
        _ => {
            let mut edges = Vec::with_capacity(vs.len());
            for i in 0..vs.len() {
                let next = &vs[(i + 1) % vs.len()];
                let (n, e) = primitive_decompose(&next.sub(&vs[i]))?;
                edges.push(EdgeVector::new(n, e)?);
            }
            EdgeSequence::new(vs[0].clone(), edges)
        }
    }
}

/// Inverse of [`edge_sequence_of`]: the vertex list reconstructed from the
/// boundary walk.
pub fn polygon_of_edge_sequence(e: &EdgeSequence) -> Polygon {
    Polygon {
        vertices: e.vertices(),
    }
}

/// Per-column lattice ranges of the closed polygon: `(x, y_lo, y_hi)` for
/// every column that contains at least one lattice point, in increasing `x`.
pub(crate) fn column_ranges(es: &EdgeSequence) -> Vec<(BigInt, BigInt, BigInt)> {
    if es.is_point() {
        let a = es.anchor();
        return vec![(a.x().clone(), a.y().clone(), a.y().clone())];
    }
    if es.is_segment() {
        // Lattice points are anchor + k*e; collect per column.
        let e = es.edges()[0].direction();
        let n = es.edges()[0].multiplicity().clone();
        let mut cols: Vec<(BigInt, BigInt, BigInt)> = Vec::new();
        let mut p = es.anchor().clone();
        let mut k = BigUint::zero();
        loop {
            match cols.iter_mut().find(|(x, _, _)| x == p.x()) {
                Some((_, lo, hi)) => {
                    if p.y() < lo {
                        *lo = p.y().clone();
                    }
                    if p.y() > hi {
                        *hi = p.y().clone();
                    }
                }
                None => cols.push((p.x().clone(), p.y().clone(), p.y().clone())),
            }
            if k == n {
                break;
            }
            k += BigUint::one();
            p = p.add(e);
        }
        cols.sort();
        return cols;
    }
    let vs = es.vertices();
    let xmin = vs.iter().map(|v| v.x()).min().unwrap().clone();
    let xmax = vs.iter().map(|v| v.x()).max().unwrap().clone();
    let width = (&xmax - &xmin)
        .to_usize()
        .expect("polygon too wide to enumerate");
    let mut lo: Vec<Option<BigInt>> = vec![None; width + 1];
    let mut hi: Vec<Option<BigInt>> = vec![None; width + 1];
    let mut update = |x: &BigInt, y_floor: BigInt, y_ceil: BigInt| {
        let i = (x - &xmin).to_usize().unwrap();
        match &mut hi[i] {
            Some(h) => {
                if y_floor > *h {
                    *h = y_floor;
                }
            }
            slot => *slot = Some(y_floor),
        }
        match &mut lo[i] {
            Some(l) => {
                if y_ceil < *l {
                    *l = y_ceil;
                }
            }
            slot => *slot = Some(y_ceil),
        }
    };
    for i in 0..vs.len() {
        let a = &vs[i];
        let b = &vs[(i + 1) % vs.len()];
        if a.x() == b.x() {
            let (ylo, yhi) = if a.y() <= b.y() { (a.y(), b.y()) } else { (b.y(), a.y()) };
            update(a.x(), yhi.clone(), ylo.clone());
            continue;
        }
        let (p, q) = if a.x() < b.x() { (a, b) } else { (b, a) };
        let dx = q.x() - p.x();
        let dy = q.y() - p.y();
        let mut x = p.x().clone();
        while x <= *q.x() {
            // y = p.y + dy*(x - p.x)/dx, exactly.
            let num = &dy * (&x - p.x());
            let fl = p.y() + num.div_floor(&dx);
            let ce = p.y() + (&dy * (&x - p.x())).div_ceil(&dx);
            update(&x, fl, ce);
            x += 1;
        }
    }
    let mut out = Vec::new();
    for i in 0..=width {
        if let (Some(l), Some(h)) = (&lo[i], &hi[i]) {
            if l <= h {
                out.push((&xmin + BigInt::from(i), l.clone(), h.clone()));
            }
        }
    }
    out
}

/// All lattice points of the closed polygon (boundary and interior),
/// sorted lexicographically, without duplicates.
pub fn integral_points(es: &EdgeSequence) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for (x, lo, hi) in column_ranges(es) {
        let mut y = lo;
        while y <= hi {
            out.push(LatticePoint::new(vec![x.clone(), y.clone()]));
            y += 1;
        }
    }
    out
}

/// Edge sequence of the Minkowski sum `A + B`: the angular merge of the two
/// edge lists, with equal primitive directions combined by adding
/// multiplicities. The anchor is the sum of the anchors, which is again the
/// lexicographically smallest vertex of the sum.
pub fn minkowski_merge(a: &EdgeSequence, b: &EdgeSequence) -> EdgeSequence {
    let mut merged: Vec<EdgeVector> = Vec::with_capacity(a.edge_count() + b.edge_count());
    for e in a.edges().iter().chain(b.edges()) {
        merged.push(e.clone());
    }
    merged.sort_by(|p, q| clockwise_dir_cmp(p.direction(), q.direction()));
    let mut combined: Vec<EdgeVector> = Vec::new();
    for e in merged {
        match combined.last_mut() {
            Some(last) if last.direction() == e.direction() => {
                let n = last.multiplicity() + e.multiplicity();
                *last = EdgeVector::new(n, e.direction().clone()).unwrap();
            }
            _ => combined.push(e),
        }
    }
    let anchor = a.anchor().add(b.anchor());
    if combined.is_empty() {
        return EdgeSequence::point(anchor);
    }
    EdgeSequence::new(anchor, combined).expect("merge of valid sequences is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::xy(x, y)
    }

    fn hull(pts: &[(i64, i64)]) -> Polygon {
        let v: Vec<LatticePoint> = pts.iter().map(|&(x, y)| p(x, y)).collect();
        convex_hull_2d(v.iter()).unwrap()
    }

    #[test]
    fn gcd_vec_examples() {
        assert_eq!(gcd_vec(&p(4, 6)), BigUint::from(2u32));
        assert_eq!(gcd_vec(&p(0, 5)), BigUint::from(5u32));
        assert_eq!(gcd_vec(&p(0, 0)), BigUint::zero());
    }

    #[test]
    fn primitive_decompose_examples() {
        let (n, e) = primitive_decompose(&p(4, 6)).unwrap();
        assert_eq!((n, e), (BigUint::from(2u32), p(2, 3)));
        let (n, e) = primitive_decompose(&p(0, -3)).unwrap();
        assert_eq!((n, e), (BigUint::from(3u32), p(0, -1)));
        let (n, e) = primitive_decompose(&p(1, 1)).unwrap();
        assert_eq!((n, e), (BigUint::one(), p(1, 1)));
        assert_eq!(primitive_decompose(&p(0, 0)), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn hull_examples() {
        let h = hull(&[(0, 0), (1, 1), (2, 0), (1, -1), (1, 0)]);
        assert_eq!(h.vertices(), &[p(0, 0), p(1, 1), p(2, 0), p(1, -1)]);

        let h = hull(&[(0, 0)]);
        assert_eq!(h.vertices(), &[p(0, 0)]);

        let h = hull(&[(0, 0), (2, 2), (1, 1)]);
        assert_eq!(h.vertices(), &[p(0, 0), p(2, 2)]);
    }

    #[test]
    fn edge_sequence_examples() {
        // Unit square.
        let es = edge_sequence_of(&hull(&[(0, 0), (0, 1), (1, 1), (1, 0)])).unwrap();
        assert_eq!(es.anchor(), &p(0, 0));
        let dirs: Vec<_> = es.edges().iter().map(|e| e.direction().clone()).collect();
        assert_eq!(dirs, vec![p(0, 1), p(1, 0), p(0, -1), p(-1, 0)]);
        assert!(es.edges().iter().all(|e| e.multiplicity() == &BigUint::one()));

        // Triangle (0,0),(0,2),(3,0).
        let es = edge_sequence_of(&hull(&[(0, 0), (0, 2), (3, 0)])).unwrap();
        assert_eq!(es.anchor(), &p(0, 0));
        let parts: Vec<_> = es
            .edges()
            .iter()
            .map(|e| (e.multiplicity().clone(), e.direction().clone()))
            .collect();
        assert_eq!(
            parts,
            vec![
                (BigUint::from(2u32), p(0, 1)),
                (BigUint::one(), p(3, -2)),
                (BigUint::from(3u32), p(-1, 0)),
            ]
        );

        // Segment.
        let es = edge_sequence_of(&hull(&[(0, 0), (2, 2)])).unwrap();
        let parts: Vec<_> = es
            .edges()
            .iter()
            .map(|e| (e.multiplicity().clone(), e.direction().clone()))
            .collect();
        assert_eq!(
            parts,
            vec![
                (BigUint::from(2u32), p(1, 1)),
                (BigUint::from(2u32), p(-1, -1)),
            ]
        );

        let single = hull(&[(5, 7)]);
        assert_eq!(edge_sequence_of(&single), Err(LatticeError::SinglePoint));
    }

    #[test]
    fn integral_points_examples() {
        let tri = edge_sequence_of(&hull(&[(0, 0), (2, 0), (0, 2)])).unwrap();
        let pts = integral_points(&tri);
        assert_eq!(pts.len(), 6);
        assert!(pts.contains(&p(1, 1)));
        assert_eq!(tri.lattice_point_count(), BigUint::from(6u32));

        let sq = edge_sequence_of(&hull(&[(0, 0), (0, 1), (1, 1), (1, 0)])).unwrap();
        assert_eq!(integral_points(&sq).len(), 4);

        let seg = edge_sequence_of(&hull(&[(0, 0), (2, 2)])).unwrap();
        assert_eq!(integral_points(&seg).len(), 3);
    }

    #[test]
    fn sparse_columns_in_thin_polygons() {
        // Triangle (0,0),(5,2),(5,1): some columns have no lattice points.
        let tri = edge_sequence_of(&hull(&[(0, 0), (5, 2), (5, 1)])).unwrap();
        let pts = integral_points(&tri);
        assert_eq!(
            BigUint::from(pts.len()),
            tri.lattice_point_count(),
            "scanline must agree with Pick's formula"
        );
    }

    #[test]
    fn merge_examples() {
        let h = edge_sequence_of(&hull(&[(0, 0), (1, 0)])).unwrap();
        let v = edge_sequence_of(&hull(&[(0, 0), (0, 1)])).unwrap();
        let sq = edge_sequence_of(&hull(&[(0, 0), (0, 1), (1, 1), (1, 0)])).unwrap();
        assert_eq!(minkowski_merge(&h, &v), sq);
        assert_eq!(minkowski_merge(&v, &h), sq);

        let pt = EdgeSequence::point(p(3, -2));
        let shifted = minkowski_merge(&sq, &pt);
        assert_eq!(shifted.anchor(), &p(3, -2));
        assert_eq!(shifted.edges(), sq.edges());
    }

    #[test]
    fn roundtrip_polygon_edge_sequence() {
        let h = hull(&[(0, 0), (4, 1), (5, 5), (1, 4), (2, 2)]);
        let es = edge_sequence_of(&h).unwrap();
        assert_eq!(polygon_of_edge_sequence(&es), h);
    }
}
