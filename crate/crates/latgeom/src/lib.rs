pub mod atoms;
pub mod bruhat;
pub mod cdindex;
pub mod corpus;
pub mod eardecomp;
pub mod error;
pub mod io;
pub mod lattice;
pub mod matroid;
pub mod report;

pub use atoms::{AtomOrder, AtomSet, RankSet};
pub use error::{LatgeomError, Result};
pub use lattice::{build_lattice, GeometricLattice};
pub use matroid::Matroid;
