//! Exact cocycle computations for categorical extensions and biextensions
//! over finite abelian groups.

pub mod absgroup;
pub mod biext;
pub mod catbiext;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod group;
pub mod json;
pub mod lattice;
pub mod linsys;
pub mod par;
pub mod pcohom;
pub mod picard;
pub mod qcomplex;
pub mod report;
pub mod snf;
pub mod table;

pub use error::{Error, Limits, Result};
pub use group::{FinAbGroup, Homomorphism, InvariantFactors};
