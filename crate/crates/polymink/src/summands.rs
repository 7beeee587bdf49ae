//! Counting and enumerating all integral summands of a polygon.
//!
//! [`count_summands`] runs the counting variant of the decomposability
//! sweep: each lattice point carries an unbounded path count `u` and a set
//! `S` of back edges `(k, i)`, meaning some path reaches the point with last
//! edge `k * e_i`. The count at the anchor is the total number of integral
//! summands, trivial ones included. [`enumerate_summands`] then streams every
//! summand exactly once by walking the back edges with strictly decreasing
//! edge indices, linear time per summand.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::decomp::{DecompError, SummandVector};
use crate::lattice::{clockwise_dir_cmp, EdgeSequence, EdgeVector, LatticePoint};
use crate::raster::{Raster, SmallEdges};

/// One cell of the final count table: the number of paths from the anchor
/// to this point, and every `(k, i)` a path can end with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountCell {
    pub count: BigUint,
    /// Back edges as `(k, i)` with `1 <= k <= n_i`, `i` 1-based.
    pub back_edges: Vec<(u64, usize)>,
}

/// Final array of the counting sweep, indexed by the polygon's lattice
/// points. Produced by [`count_summands`], consumed by
/// [`enumerate_summands`].
pub struct CountTable {
    raster: Raster,
    edges: SmallEdges,
    v0: (i64, i64),
    counts: Vec<BigUint>,
    /// back[slot], sorted by edge index descending then k ascending.
    back: Vec<Vec<(u32, u32)>>,
    source: EdgeSequence,
}

impl CountTable {
    /// Cell lookup by lattice point; `None` outside the polygon.
    pub fn cell(&self, p: &LatticePoint) -> Option<CountCell> {
        let (x, y) = p.to_i64_pair()?;
        let slot = self.raster.index(x, y)?;
        Some(CountCell {
            count: self.counts[slot].clone(),
            back_edges: self.back[slot]
                .iter()
                .map(|&(k, i)| (k as u64, i as usize))
                .collect(),
        })
    }

    /// Total number of integral summands (the count at the anchor).
    pub fn total(&self) -> &BigUint {
        let slot = self.raster.index(self.v0.0, self.v0.1).unwrap();
        &self.counts[slot]
    }
}

/// Counts all integral summands of the polygon, trivial ones included, and
/// returns the table needed to enumerate them.
pub fn count_summands(es: &EdgeSequence) -> Result<(BigUint, CountTable), DecompError> {
    if es.edge_count() < 2 {
        return Err(DecompError::InvalidSequence(
            "need at least two edges".into(),
        ));
    }
    let (raster, edges, v0) = Raster::build(es)?;
    let t = raster.total;
    let v0_slot = raster.index(v0.0, v0.1).expect("anchor is a lattice point");

    let mut prev: Vec<BigUint> = vec![BigUint::zero(); t];
    prev[v0_slot] = BigUint::one();
    let mut back: Vec<Vec<(u32, u32)>> = vec![Vec::new(); t];

    for (stage, &(n_i, ex, ey)) in edges.iter().enumerate() {
        let i = (stage + 1) as u32;
        let mut cur = prev.clone(); // k = 0 keeps every path
        for slot in 0..t {
            if prev[slot].is_zero() {
                continue;
            }
            let (mut x, mut y) = raster.point(slot);
            for k in 1..=n_i {
                x += ex;
                y += ey;
                match raster.index(x, y) {
                    Some(dst) => {
                        let add = prev[slot].clone();
                        cur[dst] += add;
                        // For a fixed destination and stage, each k has a
                        // unique source, so (k, i) tags never repeat.
                        back[dst].push((k as u32, i));
                    }
                    None => break,
                }
            }
        }
        prev = cur;
    }
    for list in &mut back {
        list.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    }
    let total = prev[v0_slot].clone();
    Ok((
        total.clone(),
        CountTable {
            raster,
            edges,
            v0,
            counts: prev,
            back,
            source: es.clone(),
        },
    ))
}

/// Streams every integral summand of `es` exactly once, depth-first with
/// descending edge index and ascending `k`. With `include_trivial` the
/// single point comes first and the full polygon appears in its natural
/// position; without it both are skipped.
pub fn enumerate_summands<'t>(
    table: &'t CountTable,
    es: &EdgeSequence,
    include_trivial: bool,
) -> Result<SummandIter<'t>, DecompError> {
    if &table.source != es {
        return Err(DecompError::TableMismatch);
    }
    let m = table.edges.len();
    let full: Vec<u64> = table.edges.iter().map(|e| e.0 as u64).collect();
    Ok(SummandIter {
        table,
        ks: vec![0; m],
        full,
        stack: Vec::new(),
        include_trivial,
        started: false,
    })
}

struct Frame {
    slot: usize,
    pos: usize,
    /// Only back edges with index strictly below this may be taken next.
    bound: u32,
    /// The (k, i) pick that led into this frame, undone when popping.
    via: Option<(u32, u32)>,
}

/// Iterator over [`SummandVector`]s; see [`enumerate_summands`].
pub struct SummandIter<'t> {
    table: &'t CountTable,
    ks: Vec<u64>,
    full: Vec<u64>,
    stack: Vec<Frame>,
    include_trivial: bool,
    started: bool,
}

impl<'t> SummandIter<'t> {
    fn v0_slot(&self) -> usize {
        self.table
            .raster
            .index(self.table.v0.0, self.table.v0.1)
            .unwrap()
    }

    fn emit(&self) -> SummandVector {
        SummandVector::new(self.ks.iter().map(|&k| BigUint::from(k)).collect())
    }
}

impl<'t> Iterator for SummandIter<'t> {
    type Item = SummandVector;

    fn next(&mut self) -> Option<SummandVector> {
        let v0 = self.v0_slot();
        if !self.started {
            self.started = true;
            self.stack.push(Frame {
                slot: v0,
                pos: 0,
                bound: self.table.edges.len() as u32 + 1,
                via: None,
            });
            if self.include_trivial {
                return Some(self.emit()); // the single point, all k_i = 0
            }
        }
        loop {
            let Some(frame) = self.stack.last_mut() else {
                return None;
            };
            let list = &self.table.back[frame.slot];
            // Lists are sorted by index descending; skip entries at or above
            // the bound.
            while frame.pos < list.len() && list[frame.pos].1 >= frame.bound {
                frame.pos += 1;
            }
            if frame.pos >= list.len() {
                let done = self.stack.pop().unwrap();
                if let Some((k, i)) = done.via {
                    self.ks[(i - 1) as usize] = 0;
                    let _ = k;
                }
                continue;
            }
            let (k, i) = list[frame.pos];
            frame.pos += 1;
            let (cx, cy) = self.table.raster.point(frame.slot);
            let (_, ex, ey) = self.table.edges[(i - 1) as usize];
            let nx = cx - ex * k as i64;
            let ny = cy - ey * k as i64;
            let nslot = self
                .table
                .raster
                .index(nx, ny)
                .expect("back edge stays inside the polygon");
            self.ks[(i - 1) as usize] = k as u64;
            self.stack.push(Frame {
                slot: nslot,
                pos: 0,
                bound: i,
                via: Some((k, i)),
            });
            if nslot == v0 {
                // Closing here (all remaining k = 0) is one complete summand;
                // deeper picks from this frame give the rest.
                if self.include_trivial || self.ks != self.full {
                    return Some(self.emit());
                }
            }
        }
    }
}

/// The polygon (or segment, or point) formed by a summand vector: edges
/// `k_i e_i` with the zero multiplicities dropped, anchored at the origin,
/// which is its lexicographically smallest vertex.
///
/// Panics if the vector violates its bounds or does not close.
pub fn summand_to_polygon(ks: &SummandVector, es: &EdgeSequence) -> EdgeSequence {
    assert!(
        ks.is_valid_for(es),
        "summand vector is out of bounds or not closed for this edge sequence"
    );
    let kept: Vec<EdgeVector> = ks
        .ks()
        .iter()
        .zip(es.edges())
        .filter(|(k, _)| !k.is_zero())
        .map(|(k, e)| EdgeVector::new(k.clone(), e.direction().clone()).unwrap())
        .collect();
    let origin = LatticePoint::origin(2);
    if kept.is_empty() {
        return EdgeSequence::point(origin);
    }
    debug_assert!(kept
        .windows(2)
        .all(|w| clockwise_dir_cmp(w[0].direction(), w[1].direction()).is_lt()));
    EdgeSequence::new(origin, kept).expect("a closed subsequence is a valid edge sequence")
}

/// Direct recomputation of the count recurrence at one point and stage:
/// `u_i(v) = sum over 0 <= k <= n_i of u_{i-1}(v - k e_i)`. Exposed for
/// spot checks in tests.
pub fn recount_cell(
    es: &EdgeSequence,
    point: &LatticePoint,
    stage: usize,
) -> Result<BigUint, DecompError> {
    if stage == 0 {
        return Ok(if point == es.anchor() {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    let e = &es.edges()[stage - 1];
    let mut total = BigUint::zero();
    let mut k = BigUint::zero();
    loop {
        let shifted = point.sub(&e.direction().scaled(&BigInt::from(k.clone())));
        total += recount_cell(es, &shifted, stage - 1)?;
        if &k == e.multiplicity() {
            break;
        }
        k += BigUint::one();
    }
    Ok(total)
}
