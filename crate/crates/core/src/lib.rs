//! Graph-factor laboratory.
//!
//! Exact toughness and isolated toughness, Tutte/Lovász factor criteria with
//! constructive finders, spanning-tree packing and tree-connected components,
//! and an audit engine that checks factor theorems on small graph corpora
//! with replayable certificates.

pub mod budget;
pub mod constructions;
pub mod error;
pub mod factors;
pub mod graph;
pub mod independent;
pub mod rational;
pub mod resilience;
pub mod theorems;
pub mod treeconn;
pub mod witness;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{ComponentStats, MultiGraph, VertexFn, VertexSet};
pub use rational::{ExtQ, Q};
pub use witness::{Check, CriterionWitness};
