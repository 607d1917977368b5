//! Left caps, right caps, centre pieces and admissible decompositions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cycle_type_of, CycleType, DirectedCycle, DirectedPath, TwoRegularDigraph, Vertex};

use super::pattern::{external_pattern, ExternalPattern, InternalPatternEntry, SEAM};

fn unshift(v: Vertex, by: u32) -> Vertex {
    v.shifted(-i64::from(by))
        .expect("cap endpoints sit at or beyond the cap length")
}

/// Nine paths in `J*_2l` covering every arc except `x_l y_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftCap {
    pub ell: u32,
    pub paths: Vec<DirectedPath>,
}

impl LeftCap {
    pub fn internal_pattern(&self, i: usize) -> InternalPatternEntry {
        let l = &self.paths[i];
        let ell = self.ell;
        let window = [
            Vertex::x(ell),
            Vertex::x(ell + 1),
            Vertex::y(ell),
            Vertex::y(ell + 1),
        ];
        let absent = l
            .internal_vertices()
            .iter()
            .filter(|v| window.contains(v))
            .map(|&v| unshift(v, ell))
            .collect();
        InternalPatternEntry {
            first: unshift(l.source(), ell),
            second: unshift(l.terminal(), ell),
            absent,
        }
    }

    pub fn internal_patterns(&self) -> Vec<InternalPatternEntry> {
        (0..self.paths.len()).map(|i| self.internal_pattern(i)).collect()
    }

    pub fn external_patterns(&self) -> Vec<ExternalPattern> {
        self.paths
            .iter()
            .map(|p| {
                ExternalPattern::new(SEAM.iter().copied().filter(|&v| p.contains(v)))
                    .expect("seam subset")
            })
            .collect()
    }
}

/// One element of a right cap: a path together with disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightCapElement {
    pub path: DirectedPath,
    pub cycles: Vec<DirectedCycle>,
}

impl RightCapElement {
    pub fn contains(&self, v: Vertex) -> bool {
        self.path.contains(v) || self.cycles.iter().any(|c| c.contains(v))
    }
}

/// Nine elements over `J*_2r ∪ {x0 y0}`; every element carries cycles of
/// lengths `cycle_lengths` next to its path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightCap {
    pub r: u32,
    pub cycle_lengths: CycleType,
    pub elements: Vec<RightCapElement>,
}

impl RightCap {
    /// Number of extra cycles per element.
    pub fn t(&self) -> usize {
        self.cycle_lengths.lengths().len()
    }

    pub fn internal_pattern(&self, i: usize) -> InternalPatternEntry {
        let e = &self.elements[i];
        InternalPatternEntry {
            first: e.path.terminal(),
            second: e.path.source(),
            absent: SEAM.iter().copied().filter(|&v| !e.contains(v)).collect(),
        }
    }

    pub fn internal_patterns(&self) -> Vec<InternalPatternEntry> {
        (0..self.elements.len()).map(|i| self.internal_pattern(i)).collect()
    }

    /// The pattern forced by the right-hand boundary: `u` is in `E_i` iff
    /// `σ^r(u)` is missing from the element.
    pub fn external_patterns(&self) -> Vec<ExternalPattern> {
        self.elements
            .iter()
            .map(|e| {
                let r = i64::from(self.r);
                ExternalPattern::new(
                    SEAM.iter()
                        .copied()
                        .filter(|u| !e.contains(u.shifted(r).expect("non-negative"))),
                )
                .expect("seam subset")
            })
            .collect()
    }
}

/// Nine pairs `(Q, U)` of vertex-disjoint paths of total length `2c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentrePiece {
    pub c: u32,
    pub pairs: Vec<(DirectedPath, DirectedPath)>,
}

impl CentrePiece {
    pub fn internal_pattern(&self, i: usize) -> InternalPatternEntry {
        let (q, u) = &self.pairs[i];
        InternalPatternEntry {
            first: u.terminal(),
            second: q.source(),
            absent: SEAM
                .iter()
                .copied()
                .filter(|&v| !q.contains(v) && !u.contains(v))
                .collect(),
        }
    }

    pub fn internal_patterns(&self) -> Vec<InternalPatternEntry> {
        (0..self.pairs.len()).map(|i| self.internal_pattern(i)).collect()
    }
}

/// Any of the three piece kinds, for [`internal_pattern`].
#[derive(Copy, Clone, Debug)]
pub enum Piece<'a> {
    Left(&'a LeftCap),
    Right(&'a RightCap),
    Centre(&'a CentrePiece),
}

/// Internal pattern of element `i`, counted from 1.
pub fn internal_pattern(piece: Piece<'_>, i: usize) -> Result<InternalPatternEntry> {
    let len = match piece {
        Piece::Left(l) => l.paths.len(),
        Piece::Right(r) => r.elements.len(),
        Piece::Centre(c) => c.pairs.len(),
    };
    if i == 0 || i > len {
        return Err(Error::Domain(format!("element {i} is outside 1..={len}")));
    }
    Ok(match piece {
        Piece::Left(l) => l.internal_pattern(i - 1),
        Piece::Right(r) => r.internal_pattern(i - 1),
        Piece::Centre(c) => c.internal_pattern(i - 1),
    })
}

/// Nine 2-regular subdigraphs of `J*_2m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDecomposition {
    pub m: u32,
    pub factors: Vec<TwoRegularDigraph>,
}

impl AdmissibleDecomposition {
    pub fn new(m: u32, factors: Vec<TwoRegularDigraph>) -> Self {
        AdmissibleDecomposition { m, factors }
    }

    pub fn patterns(&self) -> Vec<ExternalPattern> {
        self.factors.iter().map(external_pattern).collect()
    }

    /// Cycle type of the first factor.
    pub fn cycle_type(&self) -> CycleType {
        self.factors.first().map(cycle_type_of).unwrap_or_default()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.factors.iter().flat_map(|f| f.vertices()).collect()
    }
}
