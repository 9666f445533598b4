//! Exact analysis of Kochen-Specker-type contextual sets written as MMP
//! hypergraphs: contextuality decision, structural edits, master-set
//! generation from vector components, canonical forms and containment.

pub mod canon;
pub mod catalog;
pub mod codec;
pub mod coloring;
pub mod containment;
pub mod coords;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod layout;
pub mod ring;
pub mod structure;

pub use codec::{parse_mmph, serialize_mmph};
pub use coords::Coordinatization;
pub use error::{Error, Result};
pub use hypergraph::{Mmph, Stats, Symbol, Vertex};
pub use ring::{Ray, RayVector, Ring, Scalar};
