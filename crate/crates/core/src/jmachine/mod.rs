//! Admissible decompositions of the opened circulant blowup `J*_2m`: patterns,
//! caps and centre pieces, splicing, assembly, the brick tables and the
//! recursion that combines them.

pub mod assemble;
pub mod pattern;
pub mod pieces;
pub mod recursion;
pub mod search;
pub mod tables;

pub use pattern::{external_pattern, is_admissible, pattern_x, ExternalPattern, InternalPatternEntry, SEAM};
pub use pieces::{
    internal_pattern, AdmissibleDecomposition, CentrePiece, LeftCap, Piece, RightCap,
    RightCapElement,
};
