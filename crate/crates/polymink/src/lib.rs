//! Exact Minkowski decomposition of integral convex polytopes.
//!
//! The library decides whether a convex lattice polygon is integrally
//! decomposable, counts and enumerates all of its integral summands,
//! tests higher-dimensional lattice polytopes heuristically through random
//! integral projections to the plane, and applies all of this to an
//! absolute-irreducibility pretest for sparse multivariate polynomials via
//! their Newton polytopes.
//!
//! See the book under `book/` for a guided tour; `polymink --help` for the
//! command-line front end.

pub mod criteria;
pub mod decomp;
pub mod fixtures;
pub mod json;
pub mod lattice;
pub mod newton;
pub mod project;
pub mod summands;

mod raster;

pub use decomp::{brute_force_summands, poly_decomp, DecompVerdict, SummandVector};
pub use lattice::{
    convex_hull_2d, edge_sequence_of, gcd_vec, integral_points, minkowski_merge,
    polygon_of_edge_sequence, primitive_decompose, EdgeSequence, EdgeVector, LatticePoint,
    Polygon,
};
pub use newton::{newton_polytope, parse_poly, pretest, PretestVerdict, SparsePoly};
pub use project::{polytope_decomp, PointCloud, ProjectionConfig};
pub use summands::{count_summands, enumerate_summands, summand_to_polygon, CountTable};

// The book's code snippets double as tests; each chapter is compiled and
// run by `cargo test` through these hidden doc attachments.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(edge_sequences, "../../../book/src/edge-sequences.md");
    chapter!(deciding, "../../../book/src/deciding-decomposability.md");
    chapter!(counting, "../../../book/src/counting-summands.md");
    chapter!(criteria, "../../../book/src/criteria-and-hard-instances.md");
    chapter!(projections, "../../../book/src/projections.md");
    chapter!(polynomials, "../../../book/src/polynomials.md");
}
