//! Plane trees, 2-Motzkin paths and exact checks of the Catalan/Narayana
//! identities that a weighted tree-to-path bijection explains.
//!
//! * [`poly`]: integer polynomials, the weight ring.
//! * [`tree`], [`path`]: the combinatorial objects and their text encodings.
//! * [`enumeration`]: exhaustive streams used as ground truth.
//! * [`bijection`]: edge classification and the tree-to-path map.
//! * [`weights`]: weightings, weight totals and weight-preserving reductions.
//! * [`identities`]: closed forms and identity reports.

pub mod bijection;
pub mod enumeration;
pub mod error;
pub mod identities;
pub mod path;
pub mod poly;
pub mod tree;
pub mod weights;

pub use bijection::{
    category_census, classify_edges, phi, phi_inverse, CategoryCensus, EdgeCategory,
};
pub use enumeration::{count_only, Family};
pub use error::{Error, Result};
pub use identities::{IdentityId, IdentityReport};
pub use path::{
    parse_path, AnyPath, DyckPath, DyckStep, MotzkinPath, MotzkinStep, MultipleDyckPath, PathKind,
    Run, TwoMotzkinPath, TwoMotzkinStep,
};
pub use poly::{binomial, Poly};
pub use tree::PlaneTree;
pub use weights::{EdgeWeighting, MotzkinWeighting, StepWeighting};
