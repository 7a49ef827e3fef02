//! Path spaces of finitely aligned higher-rank graphs.

pub mod degree;
pub mod error;
pub mod fixtures;
pub mod groupoid;
pub mod kgraph;
pub mod paths;
pub mod symbolic;
pub mod topology;
pub mod tychonoff;

pub use degree::{Degree, DegreeError, ExtCoord, ExtDegree};
pub use error::{Error, Result};
pub use kgraph::{Edge, FinitePath, KGraph, Morphism, VertexId};
pub use paths::{InfinitePath, Path};
pub use groupoid::{BasisSet, GroupoidElement};
pub use topology::{Cylinder, Distance, Encoding, LemmaVerdict, SubcoverVerdict, SymbolicPath, Window};
pub use tychonoff::{APoint, Coord, ProductSpace, WPoint};
