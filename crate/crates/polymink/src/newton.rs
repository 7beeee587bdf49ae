//! Sparse polynomials, their Newton polytopes, and the absolute-irreducibility
//! pretest.
//!
//! The pretest rests on two facts. The Newton polytope of a product is the
//! Minkowski sum of the factors' polytopes, so a polynomial not divisible by
//! any variable whose Newton polytope is integrally indecomposable cannot
//! split over any field extension. Only the support matters: coefficients
//! are stored as integers for convenience, but nothing beyond their being
//! nonzero is ever used, so the verdict applies over every coefficient
//! field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::decomp::{poly_decomp, DecompVerdict, SummandVector};
use crate::lattice::{
    convex_hull_2d, edge_sequence_of, integral_points, EdgeSequence, LatticePoint, Polygon,
};
use crate::project::{polytope_decomp, PointCloud, ProjectionConfig};
use crate::summands::{count_summands, enumerate_summands, summand_to_polygon};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NewtonError {
    #[error("syntax error at byte {0}")]
    SyntaxError(usize),
    #[error("negative exponent at byte {0}")]
    NegativeExponent(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("operation requires exactly two variables, found {0}")]
    NotBivariate(usize),
    #[error("decomposition failed: {0}")]
    Decomp(#[from] crate::decomp::DecompError),
}

/// A multivariate polynomial stored as a support map: exponent vector to
/// nonzero integer coefficient. Variables keep their order of first
/// appearance in the source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<LatticePoint, BigInt>,
}

impl SparsePoly {
    /// Drops zero coefficients; exponent vectors must all match the
    /// variable count.
    pub fn new(vars: Vec<String>, terms: BTreeMap<LatticePoint, BigInt>) -> Self {
        let dim = vars.len();
        let terms: BTreeMap<_, _> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for e in terms.keys() {
            assert_eq!(e.dim(), dim, "exponent dimension must match variable count");
            assert!(
                e.coords().iter().all(|c| !c.is_negative()),
                "exponents must be nonnegative"
            );
        }
        SparsePoly { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.coords().iter().all(Zero::is_zero))
    }

    /// Support vectors in exponent order.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().cloned().collect()
    }
}

fn is_var_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_var_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap()
    }

    fn variable(&mut self) -> String {
        let start = self.pos;
        self.pos += 1;
        while self.pos < self.src.len() && is_var_continue(self.src[self.pos] as char) {
            self.pos += 1;
        }
        String::from_utf8(self.src[start..self.pos].to_vec()).unwrap()
    }

    /// One term: optional integer, then '*'-separated variable powers.
    /// Exponents are recorded per variable name; the caller maps names to
    /// slots once the whole expression is read.
    fn term(&mut self) -> Result<(BigInt, Vec<(String, u64)>), NewtonError> {
        let mut coeff = BigInt::one();
        let mut powers: Vec<(String, u64)> = Vec::new();
        let mut saw_any = false;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.integer();
                saw_any = true;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else if !matches!(self.peek(), Some(c) if is_var_start(c as char)) {
                    return Ok((coeff, powers));
                }
            }
            _ => {}
        }
        loop {
            match self.peek() {
                Some(c) if is_var_start(c as char) => {
                    let name = self.variable();
                    let mut exp = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        match self.peek() {
                            Some(b'-') => return Err(NewtonError::NegativeExponent(self.pos)),
                            Some(c) if c.is_ascii_digit() => {
                                exp = self
                                    .integer()
                                    .try_into()
                                    .map_err(|_| NewtonError::SyntaxError(self.pos))?;
                            }
                            _ => return Err(NewtonError::SyntaxError(self.pos)),
                        }
                    }
                    powers.push((name, exp));
                    saw_any = true;
                    if self.peek() == Some(b'*') {
                        self.pos += 1;
                        continue;
                    }
                    break;
                }
                _ if saw_any => break,
                _ => return Err(NewtonError::SyntaxError(self.pos)),
            }
        }
        Ok((coeff, powers))
    }
}

/// Parses the textual grammar: terms joined by `+`/`-`, each an optional
/// integer coefficient times `*`-separated variable powers like `x^3`.
/// Like terms combine; a full cancellation yields the zero polynomial.
pub fn parse_poly(text: &str) -> Result<SparsePoly, NewtonError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    // (sign, coeff, powers) per term; variable slots assigned afterwards.
    let mut raw: Vec<(BigInt, Vec<(String, u64)>)> = Vec::new();
    let mut vars: Vec<String> = Vec::new();
    let mut sign = BigInt::one();
    if p.peek() == Some(b'-') {
        p.pos += 1;
        sign = -sign;
    } else if p.peek() == Some(b'+') {
        p.pos += 1;
    }
    loop {
        let (coeff, powers) = p.term()?;
        for (name, _) in &powers {
            if !vars.contains(name) {
                vars.push(name.clone());
            }
        }
        raw.push((sign * coeff, powers));
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                sign = BigInt::one();
            }
            Some(b'-') => {
                p.pos += 1;
                sign = -BigInt::one();
            }
            Some(_) => return Err(NewtonError::SyntaxError(p.pos)),
        }
    }
    let dim = vars.len();
    let mut terms: BTreeMap<LatticePoint, BigInt> = BTreeMap::new();
    for (coeff, powers) in raw {
        let mut e = vec![BigInt::zero(); dim];
        for (name, exp) in powers {
            let slot = vars.iter().position(|v| v == &name).unwrap();
            e[slot] += BigInt::from(exp);
        }
        *terms.entry(LatticePoint::new(e)).or_insert_with(BigInt::zero) += coeff;
    }
    terms.retain(|_, c| !c.is_zero());
    // Variables whose every occurrence canceled are dropped, so the stored
    // polynomial mentions exactly the variables it uses.
    let used: Vec<usize> = (0..dim)
        .filter(|&slot| terms.keys().any(|e| !e.coords()[slot].is_zero()))
        .collect();
    if used.len() < dim {
        let vars: Vec<String> = used.iter().map(|&s| vars[s].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(e, c)| {
                (
                    LatticePoint::new(used.iter().map(|&s| e.coords()[s].clone()).collect()),
                    c,
                )
            })
            .collect();
        return Ok(SparsePoly { vars, terms });
    }
    Ok(SparsePoly { vars, terms })
}

/// Term order for printing: variables must make their first appearance in
/// the stored order, or reparsing the text would renumber them. At each
/// step any term whose yet-unseen variables extend the seen set to a longer
/// prefix of the variable list is safe to print; one always exists when the
/// polynomial came from a parse.
fn print_order<'a>(
    terms: &'a BTreeMap<LatticePoint, BigInt>,
) -> Vec<(&'a LatticePoint, &'a BigInt)> {
    let mut remaining: Vec<(&LatticePoint, &BigInt)> = terms.iter().collect();
    let mut ordered = Vec::with_capacity(remaining.len());
    let mut prefix = 0usize;
    while !remaining.is_empty() {
        let pos = remaining.iter().position(|(e, _)| {
            e.coords()
                .iter()
                .enumerate()
                .filter(|(slot, c)| *slot >= prefix && !c.is_zero())
                .enumerate()
                .all(|(idx, (slot, _))| slot == prefix + idx)
        });
        match pos {
            Some(p) => {
                let (e, c) = remaining.remove(p);
                let bound = prefix;
                let introduced = e
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(slot, c)| *slot >= bound && !c.is_zero())
                    .count();
                prefix += introduced;
                ordered.push((e, c));
            }
            None => {
                ordered.append(&mut remaining);
            }
        }
    }
    ordered
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in print_order(&self.terms).into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || e.coords().iter().all(Zero::is_zero) {
                pieces.push(mag.to_string());
            }
            for (slot, exp) in e.coords().iter().enumerate() {
                if exp.is_zero() {
                    continue;
                }
                if exp.is_one() {
                    pieces.push(self.vars[slot].clone());
                } else {
                    pieces.push(format!("{}^{}", self.vars[slot], exp));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    /// Product over the union of the two variable lists, left operand's
    /// order first.
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut vars = self.vars.clone();
        for v in &rhs.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let embed = |p: &SparsePoly, e: &LatticePoint| {
            let mut out = vec![BigInt::zero(); vars.len()];
            for (slot, name) in p.vars.iter().enumerate() {
                let target = vars.iter().position(|v| v == name).unwrap();
                out[target] = e.coords()[slot].clone();
            }
            LatticePoint::new(out)
        };
        let mut terms: BTreeMap<LatticePoint, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = embed(self, ea).add(&embed(rhs, eb));
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly { vars, terms }
    }
}

/// Newton polytope: a plane polygon for up to two variables, the raw
/// support cloud for three or more (its hull is never needed explicitly;
/// the projection trials see only shadows).
#[derive(Clone, Debug)]
pub enum NewtonPolytope {
    Polygon(Polygon),
    Cloud(PointCloud),
}

/// Supports with fewer than two variables are embedded into the plane:
/// exponent `e` of the single variable becomes `(e, 0)`, a constant becomes
/// the origin.
pub fn newton_polytope(f: &SparsePoly) -> Result<NewtonPolytope, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if f.vars.len() <= 2 {
        let pts: Vec<LatticePoint> = f
            .terms
            .keys()
            .map(|e| match e.dim() {
                0 => LatticePoint::xy(0, 0),
                1 => LatticePoint::xy(e.coords()[0].clone(), 0),
                _ => e.clone(),
            })
            .collect();
        Ok(NewtonPolytope::Polygon(
            convex_hull_2d(pts.iter()).expect("support is nonempty"),
        ))
    } else {
        Ok(NewtonPolytope::Cloud(
            PointCloud::new(f.support()).expect("support is nonempty with dimension >= 3"),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PretestStatus {
    AbsolutelyIrreducible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// The named variable divides every term.
    VariableFactor(String),
    /// The Newton polygon has a proper integral summand.
    PolytopeDecomposable,
    /// No projection trial proved indecomposability.
    ProjectionFailure,
    /// The support is too small to say anything.
    TooFewTerms,
}

#[derive(Clone, Debug)]
pub struct PretestVerdict {
    pub status: PretestStatus,
    pub reason: Option<InconclusiveReason>,
    /// For `PolytopeDecomposable`: a proper summand of the Newton polygon.
    pub witness: Option<SummandVector>,
}

impl PretestVerdict {
    fn irreducible() -> Self {
        PretestVerdict {
            status: PretestStatus::AbsolutelyIrreducible,
            reason: None,
            witness: None,
        }
    }

    fn inconclusive(reason: InconclusiveReason) -> Self {
        PretestVerdict {
            status: PretestStatus::Inconclusive,
            reason: Some(reason),
            witness: None,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.status == PretestStatus::AbsolutelyIrreducible
    }
}

/// Absolute-irreducibility pretest. `AbsolutelyIrreducible` is a proof
/// valid over every field; `Inconclusive` decides nothing. Up to two
/// variables run the exact polygon decision; three or more fall back to
/// randomized projection governed by `cfg`.
pub fn pretest(f: &SparsePoly, cfg: &ProjectionConfig) -> Result<PretestVerdict, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(NewtonError::ConstantPolynomial);
    }
    for (slot, name) in f.vars.iter().enumerate() {
        if f.terms.keys().all(|e| e.coords()[slot].is_positive()) {
            return Ok(PretestVerdict::inconclusive(
                InconclusiveReason::VariableFactor(name.clone()),
            ));
        }
    }
    match newton_polytope(f)? {
        NewtonPolytope::Polygon(hull) => {
            if hull.vertex_count() < 2 {
                // A one-point support with no variable factor cannot occur
                // for a nonconstant polynomial, but keep the arm total.
                return Ok(PretestVerdict::inconclusive(
                    InconclusiveReason::TooFewTerms,
                ));
            }
            let es = edge_sequence_of(&hull).expect("hull has >= 2 vertices");
            match poly_decomp(&es)? {
                DecompVerdict::Indecomposable => Ok(PretestVerdict::irreducible()),
                DecompVerdict::Decomposable(w) => Ok(PretestVerdict {
                    status: PretestStatus::Inconclusive,
                    reason: Some(InconclusiveReason::PolytopeDecomposable),
                    witness: Some(w),
                }),
            }
        }
        NewtonPolytope::Cloud(cloud) => {
            if polytope_decomp(&cloud, cfg).is_indecomposable() {
                Ok(PretestVerdict::irreducible())
            } else {
                Ok(PretestVerdict::inconclusive(
                    InconclusiveReason::ProjectionFailure,
                ))
            }
        }
    }
}

/// One candidate split of the support: any factorization f = g·h must have
/// `Supp(g)` inside some emitted `q_points` and `Supp(h)` inside the paired
/// `r_points`, after the translation that puts each factor's minimum
/// exponent at 0 per axis. Most candidates correspond to no factor at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCandidate {
    pub q_points: Vec<LatticePoint>,
    pub r_points: Vec<LatticePoint>,
}

fn normalized_points(es: &EdgeSequence) -> Vec<LatticePoint> {
    let pts = integral_points(es);
    let min_x = pts.iter().map(|p| p.x().clone()).min().unwrap();
    let min_y = pts.iter().map(|p| p.y().clone()).min().unwrap();
    let shift = LatticePoint::new(vec![-min_x, -min_y]);
    pts.iter().map(|p| p.add(&shift)).collect()
}

/// Enumerates up to `limit` proper summand pairs (Q, P - Q) of the Newton
/// polygon of a bivariate `f`, each as its full set of lattice points,
/// translated so every axis attains minimum 0. Both orders of a pair are
/// emitted, matching the enumeration order of the summands.
pub fn candidate_factor_supports(
    f: &SparsePoly,
    limit: usize,
) -> Result<Vec<FactorCandidate>, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if f.vars.len() != 2 {
        return Err(NewtonError::NotBivariate(f.vars.len()));
    }
    let hull = convex_hull_2d(f.terms.keys()).expect("support is nonempty");
    if hull.vertex_count() < 2 {
        return Ok(Vec::new());
    }
    let es = edge_sequence_of(&hull).expect("hull has >= 2 vertices");
    let (_, table) = count_summands(&es)?;
    let mut out = Vec::new();
    for ks in enumerate_summands(&table, &es, false)? {
        if out.len() >= limit {
            break;
        }
        let q = summand_to_polygon(&ks, &es);
        let r = summand_to_polygon(&ks.complement(&es), &es);
        out.push(FactorCandidate {
            q_points: normalized_points(&q),
            r_points: normalized_points(&r),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::minkowski_merge;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::xy(x, y)
    }

    #[test]
    fn parse_basic() {
        let f = parse_poly("y^2 - x^3 - 1").unwrap();
        assert_eq!(f.vars(), ["y", "x"]);
        let mut expect = BTreeMap::new();
        expect.insert(pt(2, 0), BigInt::from(1));
        expect.insert(pt(0, 3), BigInt::from(-1));
        expect.insert(pt(0, 0), BigInt::from(-1));
        assert_eq!(f.terms(), &expect);
    }

    #[test]
    fn parse_combines_like_terms() {
        let f = parse_poly("x*y + x*y").unwrap();
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.terms()[&pt(1, 1)], BigInt::from(2));
        let z = parse_poly("x - x").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn parse_coefficients_and_powers() {
        let f = parse_poly("3*x^2*y - 2x + 7").unwrap();
        assert_eq!(f.terms()[&pt(2, 1)], BigInt::from(3));
        assert_eq!(f.terms()[&pt(1, 0)], BigInt::from(-2));
        assert_eq!(f.terms()[&pt(0, 0)], BigInt::from(7));
        // Repeated variable in one term multiplies out.
        let g = parse_poly("x*x^2").unwrap();
        assert_eq!(g.terms()[&LatticePoint::from_i64(&[3])], BigInt::one());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poly("x^-2"),
            Err(NewtonError::NegativeExponent(_))
        ));
        assert!(matches!(parse_poly(""), Err(NewtonError::SyntaxError(_))));
        assert!(matches!(
            parse_poly("x +"),
            Err(NewtonError::SyntaxError(_))
        ));
        assert!(matches!(
            parse_poly("x $ y"),
            Err(NewtonError::SyntaxError(_))
        ));
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "y^2 - x^3 - 1",
            "3*x^2*y - 2*x + 7",
            "-x + y",
            "5",
            "x_1^4*x_2 + 11",
        ] {
            let f = parse_poly(src).unwrap();
            let back = parse_poly(&f.to_string()).unwrap();
            assert_eq!(f.terms(), back.terms(), "{src} -> {f}");
        }
    }

    #[test]
    fn newton_polytope_examples() {
        let f = parse_poly("y^2 - x^3 - 1").unwrap();
        match newton_polytope(&f).unwrap() {
            NewtonPolytope::Polygon(p) => {
                // Variables ordered (y, x): vertices in that coordinate frame.
                let vs: Vec<_> = p.vertices().to_vec();
                assert_eq!(vs.len(), 3);
                assert!(vs.contains(&pt(0, 0)));
                assert!(vs.contains(&pt(2, 0)));
                assert!(vs.contains(&pt(0, 3)));
            }
            _ => panic!("bivariate input must give a polygon"),
        }
        let r = parse_poly("1 + x^2 + y^3 + x^2*y^3").unwrap();
        match newton_polytope(&r).unwrap() {
            NewtonPolytope::Polygon(p) => assert_eq!(p.vertex_count(), 4),
            _ => panic!(),
        }
        let m = parse_poly("x^2*y").unwrap();
        match newton_polytope(&m).unwrap() {
            NewtonPolytope::Polygon(p) => assert_eq!(p.vertex_count(), 1),
            _ => panic!(),
        }
        assert_eq!(
            newton_polytope(&parse_poly("x - x").unwrap()),
            Err(NewtonError::ZeroPolynomial)
        );
    }

    impl PartialEq for NewtonPolytope {
        fn eq(&self, other: &Self) -> bool {
            match (self, other) {
                (NewtonPolytope::Polygon(a), NewtonPolytope::Polygon(b)) => {
                    a.vertices() == b.vertices()
                }
                (NewtonPolytope::Cloud(a), NewtonPolytope::Cloud(b)) => a == b,
                _ => false,
            }
        }
    }

    #[test]
    fn pretest_examples() {
        let cfg = ProjectionConfig::default();
        let v = pretest(&parse_poly("y^2 - x^3 - 1").unwrap(), &cfg).unwrap();
        assert!(v.is_irreducible());

        let v = pretest(&parse_poly("x^2 + 2*x*y + y^2").unwrap(), &cfg).unwrap();
        assert_eq!(v.status, PretestStatus::Inconclusive);
        assert_eq!(v.reason, Some(InconclusiveReason::PolytopeDecomposable));
        assert!(v.witness.is_some());

        let v = pretest(&parse_poly("x*y + x").unwrap(), &cfg).unwrap();
        assert_eq!(
            v.reason,
            Some(InconclusiveReason::VariableFactor("x".into()))
        );

        assert_eq!(
            pretest(&parse_poly("0").unwrap(), &cfg),
            Err(NewtonError::ZeroPolynomial)
        );
        assert_eq!(
            pretest(&parse_poly("7").unwrap(), &cfg),
            Err(NewtonError::ConstantPolynomial)
        );
    }

    impl PartialEq for PretestVerdict {
        fn eq(&self, other: &Self) -> bool {
            self.status == other.status && self.reason == other.reason
        }
    }

    #[test]
    fn pretest_trivariate_paths() {
        let cfg = ProjectionConfig {
            seed: 3,
            ..Default::default()
        };
        // Trivariate simplex support: proven irreducible by projection.
        let f = parse_poly("1 + x + y + z").unwrap();
        let v = pretest(&f, &cfg).unwrap();
        assert!(v.is_irreducible());
        // A cube support is a Minkowski sum of segments; no projection can
        // prove it indecomposable.
        let gx = parse_poly("1 + x").unwrap();
        let gy = parse_poly("1 + y").unwrap();
        let gz = parse_poly("1 + z").unwrap();
        let g = &(&gx * &gy) * &gz;
        let v = pretest(&g, &cfg).unwrap();
        assert_eq!(v.reason, Some(InconclusiveReason::ProjectionFailure));
    }

    #[test]
    fn product_polytope_is_merge_of_factors() {
        let g = parse_poly("x^2*y + 3*x + 1").unwrap();
        let h = parse_poly("y^3 + x*y + 2").unwrap();
        let gh = &g * &h;
        let hull_of = |f: &SparsePoly| match newton_polytope(f).unwrap() {
            NewtonPolytope::Polygon(p) => edge_sequence_of(&p).unwrap(),
            _ => panic!(),
        };
        // The product's variables come out ordered (x, y); rewrite h in that
        // frame before merging, since h itself orders them (y, x).
        let merged = minkowski_merge(
            &hull_of(&g),
            &hull_of(&parse_poly("x*y + y^3 + 2").unwrap()),
        );
        assert_eq!(hull_of(&gh), merged);
    }

    #[test]
    fn square_candidates() {
        let f = parse_poly("1 + 2*x + 3*y + 4*x*y").unwrap();
        let cands = candidate_factor_supports(&f, 100).unwrap();
        assert_eq!(cands.len(), 2);
        let horiz = vec![pt(0, 0), pt(1, 0)];
        let vert = vec![pt(0, 0), pt(0, 1)];
        assert!(cands.contains(&FactorCandidate {
            q_points: horiz.clone(),
            r_points: vert.clone(),
        }));
        assert!(cands.contains(&FactorCandidate {
            q_points: vert,
            r_points: horiz,
        }));
    }

    #[test]
    fn rectangle_candidate_count() {
        // [0,3] x [0,2] rectangle: 12 summands, 10 proper pairs.
        let f = parse_poly("1 + x^3 + y^2 + x^3*y^2").unwrap();
        let cands = candidate_factor_supports(&f, 100).unwrap();
        assert_eq!(cands.len(), 10);
    }

    #[test]
    fn candidates_on_indecomposable_polytope() {
        let f = parse_poly("y^2 - x^3 - 1").unwrap();
        assert!(candidate_factor_supports(&f, 100).unwrap().is_empty());
        let g = parse_poly("1 + x + y + z").unwrap();
        assert_eq!(
            candidate_factor_supports(&g, 10),
            Err(NewtonError::NotBivariate(3))
        );
    }

    #[test]
    fn candidate_containment_for_true_factor() {
        let g = parse_poly("x + y + 1").unwrap();
        let h = parse_poly("x*y + 2").unwrap();
        let gh = &g * &h;
        let cands = candidate_factor_supports(&gh, 1000).unwrap();
        let supp_g = g.support();
        let found = cands.iter().any(|c| {
            supp_g.iter().all(|p| c.q_points.contains(p))
        });
        assert!(found, "some candidate must contain the true factor support");
    }
}
