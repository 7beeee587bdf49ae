//! Internal dense indexing of a polygon's lattice points.
//!
//! The decomposition DP needs O(1) membership tests and O(1) point-to-slot
//! mapping over the set IP of lattice points. A convex polygon meets every
//! vertical line in an interval, so IP is stored as one `(y_lo, y_hi)` range
//! per column plus prefix offsets; slot indices are compact in `0..t`.

use num_traits::ToPrimitive;

use crate::decomp::DecompError;
use crate::lattice::{column_ranges, EdgeSequence};

/// Columns wider than this would need more memory than is reasonable; the
/// polygon is then rejected as too large for the pseudo-polynomial DP.
const MAX_COLUMNS: usize = 100_000_000;

#[derive(Clone)]
pub(crate) struct RasterCol {
    pub x: i64,
    pub y_lo: i64,
    pub y_hi: i64,
    pub start: usize,
}

/// Compact index over the lattice points of one polygon.
pub(crate) struct Raster {
    cols: Vec<RasterCol>,
    x_min: i64,
    /// col_of[x - x_min] = column slot, or usize::MAX for empty columns.
    col_of: Vec<usize>,
    pub total: usize,
}

/// Edge list of the same polygon in machine integers: `(n_i, ex, ey)`.
pub(crate) type SmallEdges = Vec<(usize, i64, i64)>;

impl Raster {
    /// Builds the raster plus machine-width edges and anchor. Fails with
    /// `TooLarge` when coordinates, multiplicities, or the lattice-point
    /// count do not fit.
    pub fn build(es: &EdgeSequence) -> Result<(Raster, SmallEdges, (i64, i64)), DecompError> {
        let too_large = || DecompError::TooLarge;
        let v0 = es.anchor().to_i64_pair().ok_or_else(too_large)?;
        let mut edges: SmallEdges = Vec::with_capacity(es.edge_count());
        for e in es.edges() {
            let n = e.multiplicity().to_usize().ok_or_else(too_large)?;
            let (ex, ey) = e.direction().to_i64_pair().ok_or_else(too_large)?;
            edges.push((n, ex, ey));
        }
        let ranges = column_ranges(es);
        let mut cols = Vec::with_capacity(ranges.len());
        let mut total: usize = 0;
        for (x, lo, hi) in &ranges {
            let x = x.to_i64().ok_or_else(too_large)?;
            let y_lo = lo.to_i64().ok_or_else(too_large)?;
            let y_hi = hi.to_i64().ok_or_else(too_large)?;
            let count = usize::try_from(y_hi - y_lo).map_err(|_| too_large())? + 1;
            cols.push(RasterCol {
                x,
                y_lo,
                y_hi,
                start: total,
            });
            total = total.checked_add(count).ok_or_else(too_large)?;
        }
        let x_min = cols.first().map(|c| c.x).unwrap_or(0);
        let x_max = cols.last().map(|c| c.x).unwrap_or(0);
        let width = usize::try_from(x_max - x_min).map_err(|_| too_large())? + 1;
        if width > MAX_COLUMNS {
            return Err(too_large());
        }
        let mut col_of = vec![usize::MAX; width];
        for (i, c) in cols.iter().enumerate() {
            col_of[(c.x - x_min) as usize] = i;
        }
        Ok((
            Raster {
                cols,
                x_min,
                col_of,
                total,
            },
            edges,
            v0,
        ))
    }

    /// Slot of `(x, y)` if it is a lattice point of the polygon.
    #[inline]
    pub fn index(&self, x: i64, y: i64) -> Option<usize> {
        let off = x.checked_sub(self.x_min)?;
        if off < 0 || off as usize >= self.col_of.len() {
            return None;
        }
        let ci = self.col_of[off as usize];
        if ci == usize::MAX {
            return None;
        }
        let c = &self.cols[ci];
        if y < c.y_lo || y > c.y_hi {
            return None;
        }
        Some(c.start + (y - c.y_lo) as usize)
    }

    /// Inverse of [`Raster::index`].
    pub fn point(&self, idx: usize) -> (i64, i64) {
        let ci = match self.cols.binary_search_by(|c| c.start.cmp(&idx)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let c = &self.cols[ci];
        (c.x, c.y_lo + (idx - c.start) as i64)
    }
}

/// Plain bit set over raster slots.
#[derive(Clone)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}
