//! Finite comma categories of graphs.
//!
//! Quivers, set-system hypergraphs and incidence hypergraphs are presented
//! as comma objects `(A, f, B)` over finite sets. Simple objects (monic
//! `f`) form a reflective subcategory, cosimple ones (epic `f`) a
//! coreflective one, and both are equivalent to relation-style "spaces"
//! such as digraphs and set systems. The [`verify`] module checks these
//! universal properties by exhaustive enumeration on small instances.

pub mod comma;
pub mod coreflectors;
pub mod error;
pub mod finset;
pub mod graphs;
pub mod label;
pub mod limits;
pub mod reflectors;
pub mod spaces;
pub mod verify;

pub use comma::{CommaMorphism, CommaObject, Foot, FootMap, Presentation, Presented};
pub use error::{Error, Result};
pub use finset::{FinMap, FinSet};
pub use verify::{LawReport, Verdict};
