//! Finite irreducible Coxeter groups (A, B, D, I2(m), H3, F4, E6), their
//! strong Bruhat orders, the Gamma diagnostic graphs attached to signed
//! permutations, and discrete Bakry-Emery Ricci curvature of the Hasse
//! diagrams.
//!
//! Everything is exact until the curvature layer: group elements are
//! enumerated by BFS over the Cayley graph (lengths are BFS depths), cover
//! relations are `w -> t*w` with a length gap of exactly one, and the
//! curvature of a graph at a vertex is the least eigenvalue of a small
//! dense matrix assembled from the radius-2 ball.

pub mod curvature;
pub mod error;
pub mod family;
pub mod groups;
pub mod hasse;
pub mod io;
pub mod verify;

pub use error::{CacheError, CurvatureError, GroupError};
pub use family::{Family, GroupSpec};
pub use groups::table::{Budget, GroupTable};
pub use groups::window::Window;
pub use hasse::graph::HasseGraph;
