//! Deciding integral decomposability of a convex lattice polygon.
//!
//! A polygon with edge sequence `{n_i e_i}` has an integral summand exactly
//! when some `(k_1, ..., k_m)` with `0 <= k_i <= n_i` and `sum k_i e_i = 0`
//! is neither all-zero nor all-`n`. [`poly_decomp`] decides this by a
//! reachability sweep over the polygon's lattice points, in `O(t m N)`
//! vector operations (`t` lattice points, `m` edges, `N` largest edge
//! multiplicity), and extracts one witness. [`brute_force_summands`] is the
//! exhaustive oracle used to cross-check it.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::lattice::{EdgeSequence, LatticeError, LatticePoint};
use crate::raster::{BitSet, Raster};

/// Default bound on the exhaustive oracle's search space `prod (n_i + 1)`.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("invalid edge sequence: {0}")]
    InvalidSequence(String),
    #[error("polygon too large for the pseudo-polynomial sweep")]
    TooLarge,
    #[error("oracle search space exceeds the configured cap")]
    CapExceeded,
    #[error("count table was built from a different edge sequence")]
    TableMismatch,
}

impl From<LatticeError> for DecompError {
    fn from(e: LatticeError) -> Self {
        DecompError::InvalidSequence(e.to_string())
    }
}

/// One integral summand of a polygon, encoded against its edge sequence:
/// the summand's edges are `k_i e_i`, `0 <= k_i <= n_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SummandVector {
    ks: Vec<BigUint>,
}

impl SummandVector {
    pub fn new(ks: Vec<BigUint>) -> Self {
        SummandVector { ks }
    }

    pub fn from_u64(ks: &[u64]) -> Self {
        SummandVector {
            ks: ks.iter().map(|&k| BigUint::from(k)).collect(),
        }
    }

    pub fn ks(&self) -> &[BigUint] {
        &self.ks
    }

    pub fn is_zero(&self) -> bool {
        self.ks.iter().all(|k| k.to_u64() == Some(0))
    }

    /// True when this is the whole polygon (`k_i = n_i` for all `i`).
    pub fn is_full(&self, es: &EdgeSequence) -> bool {
        self.ks.len() == es.edge_count()
            && self
                .ks
                .iter()
                .zip(es.edges())
                .all(|(k, e)| k == e.multiplicity())
    }

    /// A proper summand is neither the single point nor the polygon itself.
    pub fn is_proper(&self, es: &EdgeSequence) -> bool {
        !self.is_zero() && !self.is_full(es)
    }

    /// Bounds and closure: `k_i <= n_i` and `sum k_i e_i = 0`.
    pub fn is_valid_for(&self, es: &EdgeSequence) -> bool {
        if self.ks.len() != es.edge_count() {
            return false;
        }
        let mut sum = LatticePoint::origin(2);
        for (k, e) in self.ks.iter().zip(es.edges()) {
            if k > e.multiplicity() {
                return false;
            }
            sum = sum.add(&e.direction().scaled(&BigInt::from(k.clone())));
        }
        sum.is_zero()
    }

    /// The complementary summand `(n_1 - k_1, ..., n_m - k_m)`.
    pub fn complement(&self, es: &EdgeSequence) -> SummandVector {
        assert_eq!(self.ks.len(), es.edge_count());
        SummandVector {
            ks: self
                .ks
                .iter()
                .zip(es.edges())
                .map(|(k, e)| e.multiplicity() - k)
                .collect(),
        }
    }
}

/// Outcome of [`poly_decomp`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecompVerdict {
    Indecomposable,
    Decomposable(SummandVector),
}

impl DecompVerdict {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, DecompVerdict::Decomposable(_))
    }
}

fn require_closed(es: &EdgeSequence) -> Result<(), DecompError> {
    if es.edge_count() < 2 {
        return Err(DecompError::InvalidSequence(
            "need at least two edges".into(),
        ));
    }
    Ok(())
}

/// Decides integral decomposability and, in the decomposable case, returns
/// one proper summand with `k_m < n_m` and some `k_i > 0`, `i < m`.
pub fn poly_decomp(es: &EdgeSequence) -> Result<DecompVerdict, DecompError> {
    require_closed(es)?;
    if es.is_segment() {
        // A segment of n + 1 lattice points splits iff n >= 2.
        let n = es.edges()[0].multiplicity();
        return Ok(if n > &BigUint::one() {
            DecompVerdict::Decomposable(SummandVector::from_u64(&[1, 1]))
        } else {
            DecompVerdict::Indecomposable
        });
    }
    let (raster, edges, v0) = Raster::build(es)?;
    let m = edges.len();
    let t = raster.total;

    // entry[slot] = (stage, k) of the first time the slot was reached, with
    // k > 0; the predecessor is slot - k * e_stage.
    const NONE: (u32, u32) = (u32::MAX, 0);
    let mut entry = vec![NONE; t];
    let mut prev = BitSet::new(t); // A_0 = empty

    for (stage, &(n_i, ex, ey)) in edges.iter().take(m - 1).enumerate() {
        let i = (stage + 1) as u32;
        let mut cur = prev.clone();
        // Fresh starts from the anchor: v0 + k e_i for 0 < k <= n_i. The
        // polygon is convex, so the in-polygon prefix is contiguous.
        let (mut x, mut y) = v0;
        for k in 1..=n_i {
            x += ex;
            y += ey;
            match raster.index(x, y) {
                Some(slot) => {
                    if !cur.get(slot) {
                        cur.set(slot);
                        if entry[slot] == NONE {
                            entry[slot] = (i, k as u32);
                        }
                    }
                }
                None => break,
            }
        }
        // Extend everything reachable so far.
        for base in prev.iter_ones() {
            let (mut x, mut y) = raster.point(base);
            for k in 1..=n_i {
                x += ex;
                y += ey;
                match raster.index(x, y) {
                    Some(slot) => {
                        if !cur.get(slot) {
                            cur.set(slot);
                            if entry[slot] == NONE {
                                entry[slot] = (i, k as u32);
                            }
                        }
                    }
                    None => break,
                }
            }
        }
        prev = cur;
    }

    // Closing stage: v0 must be reached with k_m < n_m.
    let (n_m, ex, ey) = edges[m - 1];
    for k in 0..n_m {
        let x = v0.0 - ex * k as i64;
        let y = v0.1 - ey * k as i64;
        if let Some(slot) = raster.index(x, y) {
            if prev.get(slot) {
                let witness = reconstruct(&raster, &edges, v0, &entry, k, m);
                debug_assert!(witness.is_valid_for(es) && witness.is_proper(es));
                return Ok(DecompVerdict::Decomposable(witness));
            }
        }
    }
    Ok(DecompVerdict::Indecomposable)
}

fn reconstruct(
    raster: &Raster,
    edges: &[(usize, i64, i64)],
    v0: (i64, i64),
    entry: &[(u32, u32)],
    k_m: usize,
    m: usize,
) -> SummandVector {
    let mut ks = vec![0u64; m];
    ks[m - 1] = k_m as u64;
    let (_, ex, ey) = edges[m - 1];
    let mut cur = (v0.0 - ex * k_m as i64, v0.1 - ey * k_m as i64);
    let mut first = true;
    while cur != v0 || (first && k_m == 0) {
        first = false;
        let slot = raster.index(cur.0, cur.1).expect("walk stays inside IP");
        let (stage, k) = entry[slot];
        debug_assert_ne!(stage, u32::MAX, "reached slot must have an entry");
        let idx = (stage - 1) as usize;
        debug_assert_eq!(ks[idx], 0, "stages strictly decrease along the walk");
        ks[idx] = k as u64;
        let (_, ex, ey) = edges[idx];
        cur = (cur.0 - ex * k as i64, cur.1 - ey * k as i64);
    }
    SummandVector::from_u64(&ks)
}

/// Exhaustive oracle: every `(k_1, ..., k_m)` with `sum k_i e_i = 0`,
/// including the two trivial ones, in lexicographic order. Fails with
/// `CapExceeded` when `prod (n_i + 1)` exceeds [`DEFAULT_ORACLE_CAP`].
pub fn brute_force_summands(es: &EdgeSequence) -> Result<Vec<SummandVector>, DecompError> {
    brute_force_summands_capped(es, DEFAULT_ORACLE_CAP)
}

/// [`brute_force_summands`] with an explicit cap on `prod (n_i + 1)`.
pub fn brute_force_summands_capped(
    es: &EdgeSequence,
    cap: u64,
) -> Result<Vec<SummandVector>, DecompError> {
    require_closed(es)?;
    let mut space = BigUint::one();
    for e in es.edges() {
        space *= e.multiplicity() + BigUint::one();
    }
    if space > BigUint::from(cap) {
        return Err(DecompError::CapExceeded);
    }
    let mut edges: Vec<(u64, i64, i64)> = Vec::with_capacity(es.edge_count());
    for e in es.edges() {
        let n = e.multiplicity().to_u64().ok_or(DecompError::TooLarge)?;
        let (ex, ey) = e.direction().to_i64_pair().ok_or(DecompError::TooLarge)?;
        edges.push((n, ex, ey));
    }
    // How far the remaining suffix of edges can still move each coordinate;
    // used to prune partial sums that cannot return to the origin.
    let m = edges.len();
    let mut reach_x = vec![0i128; m + 1];
    let mut reach_y = vec![0i128; m + 1];
    for i in (0..m).rev() {
        reach_x[i] = reach_x[i + 1] + edges[i].0 as i128 * (edges[i].1 as i128).abs();
        reach_y[i] = reach_y[i + 1] + edges[i].0 as i128 * (edges[i].2 as i128).abs();
    }
    let mut out = Vec::new();
    let mut ks = vec![0u64; m];
    fn recurse(
        edges: &[(u64, i64, i64)],
        reach_x: &[i128],
        reach_y: &[i128],
        i: usize,
        sx: i128,
        sy: i128,
        ks: &mut Vec<u64>,
        out: &mut Vec<SummandVector>,
    ) {
        if sx.abs() > reach_x[i] || sy.abs() > reach_y[i] {
            return;
        }
        if i == edges.len() {
            if sx == 0 && sy == 0 {
                out.push(SummandVector::from_u64(ks));
            }
            return;
        }
        let (n, ex, ey) = edges[i];
        for k in 0..=n {
            ks[i] = k;
            recurse(
                edges,
                reach_x,
                reach_y,
                i + 1,
                sx + k as i128 * ex as i128,
                sy + k as i128 * ey as i128,
                ks,
                out,
            );
        }
        ks[i] = 0;
    }
    recurse(&edges, &reach_x, &reach_y, 0, 0, 0, &mut ks, &mut out);
    Ok(out)
}
