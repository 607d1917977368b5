//! Brick data: the shared left cap and centre piece, the sixteen right caps,
//! the twelve small decompositions plus the drawn `[4,8]` one, and one
//! supplementary `[2,4^2]` decomposition found by search.
//!
//! Everything is kept in the text forms of [`crate::graph`] and parsed on
//! demand, so a typo here fails loudly in `tables --check` instead of
//! producing a wrong factor.

use serde::{Deserialize, Serialize};

use crate::checker::{verify_admissible_decomposition, verify_cap_complementarity, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{CycleType, DirectedCycle, DirectedPath, TwoRegularDigraph};

use super::pattern::pattern_x;
use super::pieces::{AdmissibleDecomposition, CentrePiece, LeftCap, RightCap, RightCapElement};

/// Length of the shared left cap.
pub const ELL: u32 = 2;
/// Length of the shared centre piece.
pub const CENTRE_LEN: u32 = 4;

/// The four families with a long cycle of arbitrary length.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `[2s]`
    Long,
    /// `[2s,2]`
    LongTwo,
    /// `[2s,2^2]`
    LongTwoTwo,
    /// `[2s,4]`
    LongFour,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Long, Family::LongTwo, Family::LongTwoTwo, Family::LongFour];

    /// The short cycles every factor carries next to the long one.
    pub fn extra(self) -> &'static [u32] {
        match self {
            Family::Long => &[],
            Family::LongTwo => &[2],
            Family::LongTwoTwo => &[2, 2],
            Family::LongFour => &[4],
        }
    }

    pub fn min_s(self) -> u32 {
        match self {
            Family::LongFour => 5,
            _ => 4,
        }
    }

    /// The base values `s0`, one per residue class mod 4.
    pub fn base_values(self) -> std::ops::RangeInclusive<u32> {
        self.min_s()..=self.min_s() + 3
    }

    /// Length of the right cap for base value `s0`.
    pub fn right_len(self, s0: u32) -> u32 {
        match self {
            Family::Long => s0 - 2,
            Family::LongTwo => s0 - 1,
            Family::LongTwoTwo | Family::LongFour => s0,
        }
    }

    /// Which family `ty` belongs to, with its `s`.
    pub fn classify(ty: &CycleType) -> Option<(Family, u32)> {
        let l = ty.lengths();
        let long = *l.last()?;
        if long % 2 != 0 {
            return None;
        }
        let s = long / 2;
        let family = match &l[..l.len() - 1] {
            [] => Family::Long,
            [2] => Family::LongTwo,
            [2, 2] => Family::LongTwoTwo,
            [4] => Family::LongFour,
            _ => return None,
        };
        (s >= family.min_s()).then_some((family, s))
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Long => "[2s]",
            Family::LongTwo => "[2s,2]",
            Family::LongTwoTwo => "[2s,2^2]",
            Family::LongFour => "[2s,4]",
        }
    }
}

pub const LEFT_CAP: [&str; 9] = [
    "<y2,y1,x2>",
    "<y2,x0,y1,x1,x3>",
    "<x3,y1,y0,x1,y2>",
    "<x3,x1,x0,y2,x2,y0,y1,y3>",
    "<x2,y1,y2>",
    "<y2,y0,x2,x0,x1,y3>",
    "<y3,x1,y1,x3>",
    "<y2,x1,x2>",
    "<y3,y1,x0,x2,x1,y0,y2>",
];

pub const CENTRE: [(&str, &str); 9] = [
    ("<x0,y2,x2,x1,y3,x4>", "<y4,x3,y1,y0>"),
    ("<x1,x0,x2,x3,x5>", "<y4,y3,y1,y2,y0>"),
    ("<y0,y2,y1,y3,y4>", "<x5,x3,x2,x0,x1>"),
    ("<y1,x2,y4,x4,x3,y5>", "<x5,y3,y2,x1>"),
    ("<y0,x1,y2,x3,y4>", "<x4,y3,x2,y1,x0>"),
    ("<y1,x1,x3,y3,y5>", "<y4,y2,x4,x2,y0>"),
    ("<x1,x2,y3,x5>", "<y5,x3,y2,x0,y0,y1>"),
    ("<x0,y1,x3,x4>", "<y4,x2,y2,y3,x1,y0>"),
    ("<y0,x2,x4,y2,y4>", "<y5,y3,x3,x1,y1>"),
];

pub const RIGHT_CAPS: &[(Family, u32, [&str; 9])] = &[
    (
        Family::Long,
        4,
        [
            "<x0,y1,x3,x1,x2,y2,y0>",
            "<x1,x0,y2,y1,y0>",
            "<y0,y1,x0,x2,x1>",
            "<y1,x1>",
            "<y0,y2,x1,x3,y1,x2,x0>",
            "<y1,y3,x1,y0>",
            "<x1,y2,x0,y0,x2,y1>",
            "<x0,x1,y3,y1,y2,x2,y0>",
            "<y0,x1,y1>",
        ],
    ),
    (
        Family::Long,
        5,
        [
            "<x0,x1,y1,x3,y3,x2,x4,y2,y0>",
            "<x1,y2,y3,y1,x0,x2,y0>",
            "<y0,x2,x3,y2,x0,y1,x1>",
            "<y1,y2,x2,x1>",
            "<y0,y2,x4,x2,y1,y3,x3,x1,x0>",
            "<y1,x2,y4,y2,x1,y0>",
            "<x1,y3,y2,x3,x2,x0,y0,y1>",
            "<x0,y2,y4,x2,y3,x1,x3,y1,y0>",
            "<y0,x1,x2,y2,y1>",
        ],
    ),
    (
        Family::Long,
        6,
        [
            "<x0,x1,y1,x2,x3,x5,y3,x4,y4,y2,y0>",
            "<x1,x0,y1,y2,y3,x3,y4,x2,y0>",
            "<y0,y2,x0,x2,x4,x3,y3,y1,x1>",
            "<y1,y3,y2,x3,x2,x1>",
            "<y0,x1,y2,x4,x2,y4,y3,x5,x3,y1,x0>",
            "<y1,x3,y5,y3,x2,y2,x1,y0>",
            "<x1,y3,y4,x3,x4,y2,x2,x0,y0,y1>",
            "<x0,y2,y4,x4,y3,y5,x3,x1,x2,y1,y0>",
            "<y0,x2,y3,x1,x3,y2,y1>",
        ],
    ),
    (
        Family::Long,
        7,
        [
            "<x0,x1,y1,x2,x3,y3,x5,y5,x4,x6,y4,y2,y0>",
            "<x1,x0,y1,y2,x3,x4,y3,y5,y4,x2,y0>",
            "<y0,y1,x0,x2,y2,y3,x4,x5,y4,x3,x1>",
            "<y1,x3,y4,x4,y2,x2,y3,x1>",
            "<y0,x2,y4,x6,x4,y5,x5,y3,x3,y1,x1,y2,x0>",
            "<y1,y3,y2,y4,y6,x4,x3,x2,x1,y0>",
            "<x1,y3,y4,y5,x3,x5,x4,x2,x0,y0,y2,y1>",
            "<x0,y2,x1,x2,x4,y6,y4,x5,x3,y5,y3,y1,y0>",
            "<y0,x1,x3,y2,x4,y4,y3,x2,y1>",
        ],
    ),
    (
        Family::LongTwo,
        4,
        [
            "<x0,y1,x3,y3,x1,x2,y0> (y2,x4)",
            "<x1,y1,x0,y2,y0> (x2,y3)",
            "<y0,y1,y2,x3,x1> (x0,x2)",
            "<y1,x1> (x2,y2)",
            "<y0,x1,x3,y1,y3,y2,x0> (x2,x4)",
            "<y1,x2,x1,y0> (y2,y4)",
            "<x1,x0,y0,y2,y3,y1> (x2,x3)",
            "<x0,x1,y3,x3,y2,y1,y0> (x2,y4)",
            "<y0,x2,y1> (x1,y2)",
        ],
    ),
    (
        Family::LongTwo,
        5,
        [
            "<x0,x1,y1,x2,x3,x4,y4,y2,y0> (y3,x5)",
            "<x1,x0,y1,y3,y2,x2,y0> (x3,y4)",
            "<y0,x2,x4,x3,y3,y1,x1> (x0,y2)",
            "<y1,y2,x3,x1> (x2,y3)",
            "<y0,x1,y3,x4,y2,y4,x2,y1,x0> (x3,x5)",
            "<y1,x3,x2,y2,x1,y0> (y3,y5)",
            "<x1,x3,y2,x4,x2,x0,y0,y1> (y3,y4)",
            "<x0,x2,y4,x4,y3,x1,y2,y1,y0> (x3,y5)",
            "<y0,y2,y3,x3,y1> (x1,x2)",
        ],
    ),
    (
        Family::LongTwo,
        6,
        [
            "<x0,x1,y1,x2,x3,y3,x4,x6,y4,y2,y0> (x5,y5)",
            "<x1,x0,y1,y2,x3,x4,y3,x2,y0> (y4,y5)",
            "<y0,y1,x0,y2,x2,y3,x5,x3,x1> (x4,y4)",
            "<y1,x3,x2,y4,y3,x1> (y2,x4)",
            "<y0,y2,y4,x6,x4,x5,y3,y1,x1,x2,x0> (x3,y5)",
            "<y1,y3,x3,y4,x2,y2,x1,y0> (x4,y6)",
            "<x1,y3,y5,x4,x3,y2,x0,y0,x2,y1> (y4,x5)",
            "<x0,x2,x1,x3,x5,x4,y5,y3,y2,y1,y0> (y4,y6)",
            "<y0,x1,y2,y3,y4,x3,y1> (x2,x4)",
        ],
    ),
    (
        Family::LongTwo,
        7,
        [
            "<x0,x1,y1,x2,x3,y3,x4,x5,x6,y6,y4,y2,y0> (y5,x7)",
            "<x1,x0,y1,y2,x3,x4,y3,x5,y4,x2,y0> (y5,y6)",
            "<y0,y1,x0,x2,y2,y3,y4,x5,x4,x3,x1> (y5,x6)",
            "<y1,x3,y2,y4,x4,x2,y3,x1> (x5,y5)",
            "<y0,y2,y1,x1,x3,y5,x4,y6,x6,y4,y3,x2,x0> (x5,x7)",
            "<y1,y3,y2,x4,y5,y4,x3,x2,x1,y0> (x5,y7)",
            "<x1,y3,y5,x3,y4,x6,x4,y2,x0,y0,x2,y1> (x5,y6)",
            "<x0,y2,x1,x2,y4,y6,x4,x6,x5,y3,x3,y1,y0> (y5,y7)",
            "<y0,x1,y2,x2,x4,y4,y5,y3,y1> (x3,x5)",
        ],
    ),
    (
        Family::LongTwoTwo,
        4,
        [
            "<x0,x1,y1,x2,x4,y2,y0> (x3,y4) (y3,x5)",
            "<x1,x0,y2,y1,y0> (x2,x3) (y3,y4)",
            "<y0,y2,x4,y3,x1> (x0,x2) (y1,x3)",
            "<y1,x1> (x2,y3) (y2,x3)",
            "<y0,x1,x2,y2,y3,y1,x0> (x3,x5) (x4,y4)",
            "<y1,y2,x2,y0> (x1,x3) (y3,y5)",
            "<x1,y3,y2,x0,y0,y1> (x2,y4) (x3,x4)",
            "<x0,y1,y3,x4,x2,x1,y0> (y2,y4) (x3,y5)",
            "<y0,x2,y1> (x1,y2) (x3,y3)",
        ],
    ),
    (
        Family::LongTwoTwo,
        5,
        [
            "<x0,x2,y3,y5,x4,x6,y4,y2,y0> (x1,y1) (x3,x5)",
            "<x1,y3,x4,y5,y4,x2,y0> (x0,y1) (y2,x3)",
            "<y0,y1,x2,x0,y2,y3,x1> (x3,x4) (y4,x5)",
            "<y1,y3,x2,x1> (y2,x4) (x3,y4)",
            "<y0,x2,y4,x6,x4,y3,y1,y2,x0> (x1,x3) (x5,y5)",
            "<y1,x3,x2,y2,x1,y0> (y3,y4) (x4,y6)",
            "<x1,x0,y0,y2,y4,y5,x3,y1> (x2,x4) (y3,x5)",
            "<x0,x1,x2,x3,y5,y3,y2,y1,y0> (x4,x5) (y4,y6)",
            "<y0,x1,y2,x2,y1> (x3,y3) (x4,y4)",
        ],
    ),
    (
        Family::LongTwoTwo,
        6,
        [
            "<x0,x2,x4,x5,x7,y5,x6,y6,y4,y2,y0> (x1,y1) (x3,y3)",
            "<x1,y3,x4,y5,y6,x5,y4,x2,y0> (x0,y1) (y2,x3)",
            "<y0,x2,y4,x5,x4,x6,y5,x3,x1> (x0,y2) (y1,y3)",
            "<y1,y2,x4,y3,x2,x1> (x3,x5) (y4,y5)",
            "<y0,y1,x3,x4,y6,y5,x7,x5,y3,x1,x0> (x2,y2) (y4,x6)",
            "<y1,x2,x3,y5,x4,y2,x1,y0> (y3,y4) (x5,y7)",
            "<x1,x2,x0,y0,y2,y4,y6,x4,x3,y1> (y3,y5) (x5,x6)",
            "<x0,x1,y2,y3,x5,y6,x6,x4,x2,y1,y0> (x3,y4) (y5,y7)",
            "<y0,x1,x3,x2,y3,y2,y1> (x4,y4) (x5,y5)",
        ],
    ),
    (
        Family::LongTwoTwo,
        7,
        [
            "<x0,x2,x4,x5,y5,x7,y7,x6,x8,y6,y4,y2,y0> (x1,y1) (x3,y3)",
            "<x1,y3,x4,y5,x5,y7,y6,x6,y4,x2,y0> (x0,y1) (y2,x3)",
            "<y0,x2,y4,x4,y6,x5,x7,x6,y5,y3,x1> (x0,y2) (y1,x3)",
            "<y1,y2,y4,x6,x4,y3,x2,x1> (x3,x5) (y5,y6)",
            "<y0,y1,y3,y4,y6,x8,x6,x7,x5,x4,x3,x2,x0> (x1,y2) (y5,y7)",
            "<y1,x2,y2,x4,y4,y3,y5,x3,x1,y0> (x5,x6) (y6,y8)",
            "<x1,x0,y0,y2,x2,x3,x4,x6,y7,x5,y3,y1> (y4,y5) (y6,x7)",
            "<x0,x1,x2,y3,x5,y6,y7,x7,y5,x4,y2,y1,y0> (x3,y4) (x6,y8)",
            "<y0,x1,x3,y5,x6,y6,x4,x2,y1> (y2,y3) (y4,x5)",
        ],
    ),
    (
        Family::LongFour,
        5,
        [
            "<x0,x1,y1,x2,x3,x5,y3,y2,y0> (x4,y5,y4,x6)",
            "<x1,x0,y1,y2,y4,x2,y0> (x3,y3,y5,x4)",
            "<y0,y2,x0,x2,y3,y1,x1> (x3,x4,x5,y4)",
            "<y1,y3,x3,x1> (x2,y4,x4,y2)",
            "<y0,x2,x1,y3,x5,y5,x3,y1,x0> (y2,x4,x6,y4)",
            "<y1,x3,x2,y2,x1,y0> (y3,y4,y6,x4)",
            "<x1,y2,y3,x4,x2,x0,y0,y1> (x3,y4,y5,x5)",
            "<x0,y2,x3,y5,y3,x1,x2,y1,y0> (x4,y6,y4,x5)",
            "<y0,x1,x3,y2,y1> (x2,x4,y4,y3)",
        ],
    ),
    (
        Family::LongFour,
        6,
        [
            "<x0,x1,y1,x2,x3,y3,x4,x6,y4,y2,y0> (x5,y6,y5,x7)",
            "<x1,x0,y1,y2,x3,x4,y3,x2,y0> (y4,x5,y5,y6)",
            "<y0,y1,x0,x2,y2,x4,y4,y3,x1> (x3,y5,x6,x5)",
            "<y1,x3,x5,x4,y2,x1> (x2,y3,y5,y4)",
            "<y0,y2,y1,x1,x3,y4,x6,y6,x4,x2,x0> (y3,x5,x7,y5)",
            "<y1,y3,y4,x3,y2,x2,x1,y0> (x4,x5,y7,y5)",
            "<x1,y3,y2,x0,y0,x2,y4,y5,x3,y1> (x4,y6,x5,x6)",
            "<x0,y2,y4,y6,x6,y5,y7,x5,y3,y1,y0> (x1,x2,x4,x3)",
            "<y0,x1,y2,y3,x3,x2,y1> (x4,y5,x5,y4)",
        ],
    ),
    (
        Family::LongFour,
        7,
        [
            "<x0,x1,y1,x2,x3,y3,x4,x5,x7,y5,y4,y2,y0> (x6,y7,y6,x8)",
            "<x1,x0,y1,y2,x3,x4,y3,x5,y4,x2,y0> (y5,x6,y6,y7)",
            "<y0,y1,x0,x2,y3,y4,x5,y5,x3,y2,x1> (x4,x6,x7,y6)",
            "<y1,y3,y2,x2,x4,y4,x3,x1> (x5,x6,y5,y6)",
            "<y0,y2,y1,x1,y3,y5,x7,y7,x5,x4,x3,x2,x0> (y4,x6,x8,y6)",
            "<y1,x3,y4,y5,x4,y2,y3,x2,x1,y0> (x5,y6,y8,x6)",
            "<x1,x3,x5,y7,x7,x6,y4,x4,y6,y5,y3,y1> (x0,y0,x2,y2)",
            "<x0,y2,x4,y5,y7,x6,y8,y6,x7,x5,x3,y1,y0> (x1,x2,y4,y3)",
            "<y0,x1,y2,y4,y6,x6,x4,x2,y1> (x3,y5,x5,y3)",
        ],
    ),
    (
        Family::LongFour,
        8,
        [
            "<x0,x1,y1,x2,x3,y3,x4,x5,y5,x6,x8,y6,y4,y2,y0> (x7,y8,y7,x9)",
            "<x1,x0,y1,y2,x3,x4,y3,x5,x6,y5,y4,x2,y0> (y6,x7,y7,y8)",
            "<y0,y1,x0,x2,y2,y3,y4,x4,x6,y6,x5,x3,x1> (y5,x7,x8,y7)",
            "<y1,x3,y4,x5,y6,x4,x2,y3,y2,x1> (y5,y7,x6,x7)",
            "<y0,x2,y4,y5,y6,y8,x7,x9,y7,x8,x6,x5,x4,y2,x0> (x1,y3,x3,y1)",
            "<y1,y3,y5,x5,y4,x6,x4,x3,y2,x2,x1,y0> (y6,y7,y9,x7)",
            "<x1,x3,x5,y7,y6,y5,x4,y4,y3,x2,x0,y0,y2,y1> (x6,y8,x8,x7)",
            "<x0,y2,x4,y6,x8,y8,x6,y4,x3,y5,y3,x1,x2,y1,y0> (x5,x7,y9,y7)",
            "<y0,x1,y2,y4,y6,x6,y7,x7,x5,y3,y1> (x2,x4,y5,x3)",
        ],
    ),
];

pub const SMALL: &[(&str, [&str; 9])] = &[
    (
        "[2,4]",
        [
            "(y1,x3) (x2,y3,y2,x4)",
            "(x0,y1) (x1,x2,y2,y3)",
            "(y0,y1) (x1,y2,x2,x3)",
            "(x0,x2) (y0,x1,y1,y2)",
            "(y1,y3) (x2,x4,y2,x3)",
            "(x2,y4) (x0,x1,y0,y2)",
            "(y1,x2) (x1,y3,x3,y2)",
            "(y2,y4) (x1,x3,y3,x2)",
            "(y0,x2) (x0,y2,y1,x1)",
        ],
    ),
    (
        "[2,6]",
        [
            "(y1,x2) (y2,x3,x5,y3,x4,y4)",
            "(x0,x1) (y1,y2,x2,x3,y4,y3)",
            "(y1,x3) (y0,x2,x4,y3,x1,y2)",
            "(x0,y1) (y0,y2,y3,x3,x2,x1)",
            "(x2,y4) (y1,y3,x5,x3,x4,y2)",
            "(x3,y5) (x0,x2,y0,x1,y3,y2)",
            "(x1,y1) (x2,y3,y4,x3,y2,x4)",
            "(y3,y5) (x1,x2,y2,y4,x4,x3)",
            "(y0,y1) (x0,y2,x1,x3,y3,x2)",
        ],
    ),
    (
        "[2^2,4]",
        [
            "(y3,x5) (x4,y4) (y1,x2,y2,x3)",
            "(x2,y3) (x3,y4) (x0,x1,y2,y1)",
            "(x1,y1) (y3,x4) (y0,x2,x3,y2)",
            "(y0,x1) (y2,y3) (x0,y1,x3,x2)",
            "(x3,x5) (y3,y4) (y1,y2,x4,x2)",
            "(x1,y3) (x3,y5) (x0,x2,y0,y2)",
            "(y1,y3) (y2,y4) (x1,x2,x4,x3)",
            "(x2,y4) (y3,y5) (x1,x3,x4,y2)",
            "(y0,y1) (x3,y3) (x0,y2,x2,x1)",
        ],
    ),
    (
        "[2^2,6]",
        [
            "(y1,x2) (y2,x3) (y3,x4,x6,y4,x5,y5)",
            "(x0,x1) (y1,y2) (x2,x3,y3,y4,y5,x4)",
            "(y0,y1) (x1,x2) (y2,y3,x5,x4,x3,y4)",
            "(x0,y1) (x1,x3) (y0,y2,y4,x4,y3,x2)",
            "(y1,y3) (x2,y2) (x3,y5,y4,x6,x4,x5)",
            "(x0,x2) (y4,y6) (y0,x1,y3,x3,x4,y2)",
            "(x1,y1) (x2,y4) (y2,x4,y5,x3,x5,y3)",
            "(x1,y2) (x4,y6) (x2,y3,y5,x5,y4,x3)",
            "(x0,y2) (y1,x3) (y0,x2,x4,y4,y3,x1)",
        ],
    ),
    (
        "[2^2,4^2]",
        [
            "(y1,x2) (y2,x3) (y3,x4,x6,y4) (x5,y6,y5,x7)",
            "(x0,x1) (y1,y2) (x2,x3,y3,y4) (x4,x5,y5,y6)",
            "(y0,x1) (y1,x3) (x2,x4,y3,y2) (y4,x6,y5,x5)",
            "(x1,x2) (x3,y4) (x0,y1,y0,y2) (y3,x5,x4,y5)",
            "(y1,y3) (y4,y6) (x2,y2,x4,x3) (x5,x7,y5,x6)",
            "(x1,x3) (x4,y4) (x0,y2,y0,x2) (y3,y5,y7,x5)",
            "(x1,y1) (x3,y5) (x2,y4,y2,y3) (x4,y6,x5,x6)",
            "(x1,y2) (x6,y6) (x2,y3,x3,x4) (y4,x5,y7,y5)",
            "(x1,y3) (x3,x5) (x0,x2,y0,y1) (y2,y4,y5,x4)",
        ],
    ),
    (
        "[2^3]",
        [
            "(y1,x2) (y2,x4) (x3,y3)",
            "(x0,y1) (x1,x2) (y2,y3)",
            "(y0,x1) (y1,y2) (x2,x3)",
            "(x0,x2) (y0,y1) (x1,y2)",
            "(y1,y3) (x2,x4) (y2,x3)",
            "(x0,x1) (y0,y2) (x2,y4)",
            "(x1,y3) (y1,x3) (x2,y2)",
            "(x1,x3) (x2,y3) (y2,y4)",
            "(x0,y2) (y0,x2) (x1,y1)",
        ],
    ),
    (
        "[2^3,4]",
        [
            "(y1,x2) (y2,x3) (y3,x5) (x4,y5,y4,x6)",
            "(x0,x1) (y1,y2) (x2,x3) (y3,x4,y4,y5)",
            "(y0,x1) (y1,x3) (x2,y3) (y2,x4,x5,y4)",
            "(x0,y1) (y0,x2) (x3,x4) (x1,y2,y4,y3)",
            "(y1,y3) (x2,y2) (x3,y5) (x4,x6,y4,x5)",
            "(x0,x2) (y0,y2) (x4,y6) (x1,y3,y4,x3)",
            "(x1,y1) (x2,y4) (x3,x5) (y2,y3,y5,x4)",
            "(x2,x4) (y4,y6) (x5,y5) (x1,x3,y3,y2)",
            "(x0,y2) (y0,y1) (x1,x2) (x3,y4,x4,y3)",
        ],
    ),
    (
        "[4^2]",
        [
            "(y1,x2,x4,y2) (x3,y4,y3,x5)",
            "(x0,y2,x2,x1) (y1,y3,y4,x3)",
            "(y0,x1,y1,y2) (x2,x3,y3,x4)",
            "(x0,x1,y0,y1) (x2,y3,y2,x3)",
            "(y1,x3,x5,y3) (x2,y2,x4,y4)",
            "(x0,x2,y0,y2) (x1,x3,y5,y3)",
            "(x1,y3,x2,y1) (y2,y4,x4,x3)",
            "(x1,x2,y4,y2) (x3,x4,y3,y5)",
            "(x0,y1,y0,x2) (x1,y2,y3,x3)",
        ],
    ),
    (
        "[4^3]",
        [
            "(y1,x2,y2,x3) (y3,x4,x6,y4) (x5,y6,y5,x7)",
            "(x0,x1,y2,y1) (x2,y3,y4,x4) (x3,y5,y6,x5)",
            "(y0,y1,y3,x1) (x2,x3,x4,y2) (y4,x6,x5,y5)",
            "(x0,y1,y0,y2) (x1,x2,y4,x3) (y3,y5,x5,x4)",
            "(y1,y2,y3,x2) (x3,x5,x7,y5) (x4,y4,y6,x6)",
            "(x0,x2,y0,x1) (y2,x4,x3,y4) (y3,x5,y7,y5)",
            "(x1,y1,x3,x2) (y2,y4,x5,y3) (x4,y5,x6,y6)",
            "(x1,y3,x3,y2) (x2,x4,y6,y4) (x5,x6,y5,y7)",
            "(x0,y2,y0,x2) (x1,x3,y3,y1) (x4,x5,y4,y5)",
        ],
    ),
    (
        "[4,6]",
        [
            "(y1,x2,y2,x3) (y3,x4,x6,y4,x5,y5)",
            "(x0,x1,y1,y2) (x2,x3,y3,y4,y5,x4)",
            "(y0,x2,y3,y1) (x1,x3,x4,x5,y4,y2)",
            "(x0,y1,x3,x2) (y0,y2,y4,x4,y3,x1)",
            "(x4,y5,y4,x6) (y1,y3,x5,x3,y2,x2)",
            "(x0,x2,y0,x1) (y2,y3,x3,y4,y6,x4)",
            "(x3,y5,x5,x4) (x1,x2,y4,y3,y2,y1)",
            "(x3,x5,y3,y5) (x1,y2,x4,y6,y4,x2)",
            "(x0,y2,y0,y1) (x1,y3,x2,x4,y4,x3)",
        ],
    ),
    (
        "[4,8]",
        [
            "(y1,x2,y2,x3) (y3,x4,y4,x6,y6,x5,x7,y5)",
            "(x0,x1,y1,y2) (x2,x3,y3,y4,x5,y5,y6,x4)",
            "(y0,x1,x2,y1) (y2,y3,x5,x4,x6,y5,y4,x3)",
            "(x0,x2,y0,y1) (x1,x3,y5,x4,x5,y4,y3,y2)",
            "(y1,x3,x2,y3) (y2,y4,y6,y5,x7,x5,x6,x4)",
            "(y3,y5,y7,x5) (x0,y2,y0,x2,y4,x4,x3,x1)",
            "(x1,y2,y1,y3) (x2,x4,y5,x3,x5,y6,x6,y4)",
            "(x5,y7,y5,x6) (x1,y3,x3,x4,y6,y4,y2,x2)",
            "(x3,y4,y5,x5) (x0,y1,x1,y0,y2,x4,y3,x2)",
        ],
    ),
    (
        "[6]",
        [
            "(y1,x2,x4,y2,x3,y3)",
            "(x0,x2,y3,x1,y2,y1)",
            "(y0,x1,y1,x3,x2,y2)",
            "(x0,y1,y0,y2,x1,x2)",
            "(y1,y3,x3,y2,x4,x2)",
            "(x0,x1,y0,x2,y4,y2)",
            "(x1,x3,y1,y2,y3,x2)",
            "(x1,y3,y2,y4,x2,x3)",
            "(x0,y2,x2,y0,y1,x1)",
        ],
    ),
];

/// A `[2,4^2]`-decomposition of `J*_10` with the shared pattern. No
/// combination of the other bricks reaches this type, so it was found by the
/// exact-cover search in [`super::search`].
pub const SUPPLEMENTARY: &[(&str, [&str; 9])] = &[(
    "[2,4^2]",
    [
        "(x2,x3,y5,y3) (x4,x6,y4,x5) (y1,y2)",
        "(x0,x2,y1,x1) (x3,y3) (x4,y5,y4,y2)",
        "(x1,y1,x2,y0) (x3,y2,y3,x5) (x4,y4)",
        "(x0,y1) (x1,x3,y4,y3) (x2,x4,y2,y0)",
        "(x2,y4,x6,x4) (x3,y1,y3,y2) (x5,y5)",
        "(x0,x1,y0,y2) (x2,y3,x4,x3) (y4,y6)",
        "(x1,y3,y1,x3) (x2,y2) (x4,x5,y4,y5)",
        "(x1,y2,y4,x2) (x3,x5,y3,y5) (x4,y6)",
        "(x0,y2,x1,x2) (x3,x4,y3,y4) (y0,y1)",
    ],
)];

/// The drawn `[4,8]`-decomposition of `J*_12`, in the JSON factorization format.
pub const DRAWN_FOUR_EIGHT: &str = include_str!("../../fixtures/four_eight_j12.json");

fn parse_factor(s: &str) -> Result<TwoRegularDigraph> {
    let cycles = s
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<DirectedCycle>>>()?;
    TwoRegularDigraph::new(cycles)
}

fn parse_element(s: &str) -> Result<RightCapElement> {
    let mut parts = s.split_whitespace();
    let path: DirectedPath = parts
        .next()
        .ok_or_else(|| Error::ParseWalk(s.to_string()))?
        .parse()?;
    let cycles = parts.map(str::parse).collect::<Result<Vec<DirectedCycle>>>()?;
    Ok(RightCapElement { path, cycles })
}

pub fn left_cap() -> Result<LeftCap> {
    let paths = LEFT_CAP.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
    Ok(LeftCap { ell: ELL, paths })
}

pub fn centre_piece() -> Result<CentrePiece> {
    let pairs = CENTRE
        .iter()
        .map(|(q, u)| Ok((q.parse()?, u.parse()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentrePiece {
        c: CENTRE_LEN,
        pairs,
    })
}

/// All `(family, s0)` rows, in table order.
pub fn right_cap_rows() -> Vec<(Family, u32)> {
    RIGHT_CAPS.iter().map(|(f, s0, _)| (*f, *s0)).collect()
}

pub fn right_cap(family: Family, s0: u32) -> Result<RightCap> {
    let (_, _, rows) = RIGHT_CAPS
        .iter()
        .find(|(f, s, _)| *f == family && *s == s0)
        .ok_or_else(|| Error::Domain(format!("no right cap for {} with s0 = {s0}", family.label())))?;
    let elements = rows.iter().map(|s| parse_element(s)).collect::<Result<Vec<_>>>()?;
    Ok(RightCap {
        r: family.right_len(s0),
        cycle_lengths: CycleType::new(family.extra().to_vec())?,
        elements,
    })
}

fn decomposition(ty: &str, rows: &[&str; 9]) -> Result<(CycleType, AdmissibleDecomposition)> {
    let ty: CycleType = ty.parse()?;
    let factors = rows.iter().map(|s| parse_factor(s)).collect::<Result<Vec<_>>>()?;
    let m = ty.order() / 2;
    Ok((ty, AdmissibleDecomposition::new(m, factors)))
}

/// The twelve listed small decompositions, in table order.
pub fn small_decompositions() -> Result<Vec<(CycleType, AdmissibleDecomposition)>> {
    SMALL.iter().map(|(ty, rows)| decomposition(ty, rows)).collect()
}

pub fn supplementary_decompositions() -> Result<Vec<(CycleType, AdmissibleDecomposition)>> {
    SUPPLEMENTARY.iter().map(|(ty, rows)| decomposition(ty, rows)).collect()
}

/// The drawn `[4,8]` decomposition, read from its JSON form.
pub fn drawn_four_eight() -> Result<AdmissibleDecomposition> {
    #[derive(Deserialize)]
    struct Doc {
        host: crate::hosts::HostDescriptor,
        factors: Vec<TwoRegularDigraph>,
    }
    let doc: Doc = serde_json::from_str(DRAWN_FOUR_EIGHT).map_err(|e| Error::Io(e.to_string()))?;
    Ok(AdmissibleDecomposition::new(doc.host.m, doc.factors))
}

/// One audited table object.
#[derive(Clone, Debug)]
pub struct AuditRow {
    pub name: String,
    pub report: VerificationReport,
}

/// Checks every cap row (left cap, centre piece, right cap) for
/// complementarity with `m0 = 2 s0`, and every small decomposition plus the
/// drawn `[4,8]` one for admissibility with pattern list `𝒳` and uniform type.
pub fn audit() -> Result<Vec<AuditRow>> {
    let left = left_cap()?;
    let centre = centre_piece()?;
    let x = pattern_x();
    let mut rows = Vec::new();
    for (family, s0) in right_cap_rows() {
        let right = right_cap(family, s0)?;
        let mut report = verify_cap_complementarity(&left, &right, Some(&centre), Some(&x));
        let got = report.check("m0").map(|c| c.detail.clone()).unwrap_or_default();
        let want = format!("m0 = {}", 2 * s0);
        report.record("m0_value", if got == want { Ok(want) } else { Err(format!("{got}, expected {want}")) });
        rows.push(AuditRow {
            name: format!("cap {} s0={s0}", family.label()),
            report,
        });
    }
    let mut decs = small_decompositions()?;
    decs.push(("[4,8]".parse()?, drawn_four_eight()?));
    for (ty, dec) in decs {
        let mut report = verify_admissible_decomposition(ty.order() / 2, &dec, Some(&x));
        let bad = dec.factors.iter().position(|f| f.cycle_type() != ty);
        report.record(
            "factor_type",
            bad.map_or(Ok(format!("every factor is {ty}")), |i| {
                Err(format!("factor {} is {}, expected {ty}", i + 1, dec.factors[i].cycle_type()))
            }),
        );
        rows.push(AuditRow {
            name: format!("small {ty}"),
            report,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census() {
        assert_eq!(RIGHT_CAPS.len(), 16);
        assert_eq!(SMALL.len(), 12);
        for f in Family::ALL {
            let s0s: Vec<u32> = RIGHT_CAPS.iter().filter(|r| r.0 == f).map(|r| r.1).collect();
            assert_eq!(s0s, f.base_values().collect::<Vec<_>>());
        }
    }

    #[test]
    fn every_cap_row_is_complementary() {
        let left = left_cap().unwrap();
        let centre = centre_piece().unwrap();
        let x = pattern_x();
        for (f, s0) in right_cap_rows() {
            let right = right_cap(f, s0).unwrap();
            let report = verify_cap_complementarity(&left, &right, Some(&centre), Some(&x));
            assert!(report.passed, "{} s0={s0}\n{report}", f.label());
            let m0 = report.check("m0").unwrap().detail.clone();
            assert_eq!(m0, format!("m0 = {}", 2 * s0), "{} s0={s0}", f.label());
        }
    }

    #[test]
    fn every_small_brick_is_admissible() {
        let x = pattern_x();
        let mut all = small_decompositions().unwrap();
        all.extend(supplementary_decompositions().unwrap());
        let drawn = drawn_four_eight().unwrap();
        all.push(("[4,8]".parse().unwrap(), drawn));
        for (ty, dec) in &all {
            let report = verify_admissible_decomposition(ty.order() / 2, dec, Some(&x));
            assert!(report.passed, "{ty}\n{report}");
            assert!(dec.factors.iter().all(|f| crate::graph::cycle_type_of(f) == *ty), "{ty}");
        }
    }

    #[test]
    fn audit_counts_and_passes() {
        let rows = audit().unwrap();
        assert_eq!(rows.len(), 16 + 13);
        for r in &rows {
            assert!(r.report.passed, "{}\n{}", r.name, r.report);
        }
    }

    #[test]
    fn classify_families() {
        let c = |s: &str| Family::classify(&s.parse().unwrap());
        assert_eq!(c("[8]"), Some((Family::Long, 4)));
        assert_eq!(c("[2,10]"), Some((Family::LongTwo, 5)));
        assert_eq!(c("[2,2,12]"), Some((Family::LongTwoTwo, 6)));
        assert_eq!(c("[4,10]"), Some((Family::LongFour, 5)));
        assert_eq!(c("[4,8]"), None);
        assert_eq!(c("[6]"), None);
        assert_eq!(c("[2,4,8]"), None);
    }
}
