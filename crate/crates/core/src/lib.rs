//! Constructions and certificates for bipartite directed 2-factorizations of
//! complete symmetric digraphs `K*_n` with `n ≡ 2 (mod 4)`.

pub mod checker;
pub mod error;
pub mod format;
pub mod graph;
pub mod hosts;
pub mod hstar;
pub mod jmachine;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{
    concat, cycle_type_of, reverse_cycle, shift, Arc, CycleType, Digraph, DirectedCycle,
    DirectedPath, Shift, Side, TwoRegularDigraph, Vertex, Walk,
};

/// Result of a search that may prove nonexistence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Nonexistent,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            Outcome::Nonexistent => None,
        }
    }
}
