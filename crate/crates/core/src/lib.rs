//! Permutation groups, finite group constructions, Haar and bi-Cayley
//! graphs, graph automorphisms and Cayley recognition.

pub mod atlas;
pub mod aut;
pub mod error;
pub mod graph;
pub mod group;
pub mod haar;
pub mod perm;
pub mod permgroup;
pub mod symmetry;

pub use atlas::{atlas, GroupAutomorphism};
pub use aut::{automorphism_group, find_isomorphism, oracle_automorphisms, ColoredPartition};
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{Elem, FiniteGroup};
pub use haar::{bicayley_graph, cayley_graph, haar_graph, BiGraph, ConnectionSet, Role};
pub use perm::Permutation;
pub use permgroup::PermGroup;
pub use symmetry::{
    haar_verdict, is_cayley, is_ghrr, is_vertex_transitive, CayleyStatus, CayleyVerdict,
};
