//! Covering paths and covering trees for planar point sets.
//!
//! Everything runs on exact rational arithmetic: predicates are exact signs,
//! constructions produce rational coordinates, and the verification oracles
//! re-check coverage and the noncrossing property without tolerances.

pub mod bicolored;
pub mod caps_cups;
pub mod covering_path;
pub mod covering_tree;
pub mod geom;
pub mod instances;
pub mod io;
pub mod noncrossing;
pub mod reduction;
pub mod region;
pub mod svg;
pub mod verify;

pub use caps_cups::{Chain, ChainKind, Convexity, PartitionResult};
pub use covering_path::{PolyPath, VertexTag};
pub use covering_tree::PlaneTree;
pub use geom::{Orientation, Point, Scalar, Segment, ShearTransform};
