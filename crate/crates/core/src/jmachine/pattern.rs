//! External and internal patterns, and the admissibility predicate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{TwoRegularDigraph, Vertex};

/// The four seam vertices `x0, x1, y0, y1`.
pub const SEAM: [Vertex; 4] = [Vertex::x(0), Vertex::x(1), Vertex::y(0), Vertex::y(1)];

/// A subset of the seam vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct ExternalPattern(BTreeSet<Vertex>);

impl ExternalPattern {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        if let Some(v) = set.iter().find(|v| !SEAM.contains(v)) {
            return Err(Error::Domain(format!("{v} is not a seam vertex")));
        }
        Ok(ExternalPattern(set))
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }
}

impl TryFrom<Vec<Vertex>> for ExternalPattern {
    type Error = Error;

    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        ExternalPattern::new(v)
    }
}

impl From<ExternalPattern> for Vec<Vertex> {
    fn from(p: ExternalPattern) -> Self {
        p.0.into_iter().collect()
    }
}

impl fmt::Display for ExternalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.0)
    }
}

impl FromStr for ExternalPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExternalPattern::new(parse_set(s)?)
    }
}

pub(crate) fn write_set(f: &mut fmt::Formatter<'_>, set: &BTreeSet<Vertex>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "}}")
}

fn parse_set(s: &str) -> Result<Vec<Vertex>> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::ParseWalk(s.to_string()))?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(str::parse).collect()
}

/// The nine-entry external pattern every brick in this crate shares.
pub fn pattern_x() -> Vec<ExternalPattern> {
    [
        "{y1}",
        "{x0,x1,y1}",
        "{x1,y0,y1}",
        "{x0,x1,y0,y1}",
        "{y1}",
        "{x0,x1,y0}",
        "{x1,y1}",
        "{x1}",
        "{x0,x1,y0,y1}",
    ]
    .iter()
    .map(|s| s.parse().expect("constant pattern"))
    .collect()
}

pub fn external_pattern(d: &TwoRegularDigraph) -> ExternalPattern {
    ExternalPattern(SEAM.iter().copied().filter(|&v| d.contains(v)).collect())
}

/// Order `2m`, exactly one vertex of each boundary pair, middle blocks saturated.
pub fn is_admissible(d: &TwoRegularDigraph, m: u32) -> bool {
    let vs = d.vertices();
    if vs.len() != 2 * m as usize {
        return false;
    }
    if vs.iter().any(|v| v.index > m + 1) {
        return false;
    }
    for j in 0..2 {
        for side in [Vertex::x, Vertex::y] {
            if vs.contains(&side(j)) == vs.contains(&side(m + j)) {
                return false;
            }
        }
    }
    (2..m).all(|i| vs.contains(&Vertex::x(i)) && vs.contains(&Vertex::y(i)))
}

/// `(first, second, S)`: how a cap or centre element meets the seam.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InternalPatternEntry {
    pub first: Vertex,
    pub second: Vertex,
    pub absent: BTreeSet<Vertex>,
}

impl fmt::Display for InternalPatternEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, ", self.first, self.second)?;
        if self.absent.is_empty() {
            write!(f, "∅")?;
        } else {
            write_set(f, &self.absent)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_two_patterns() {
        let a: TwoRegularDigraph = "{(x0,x1),(y1,y2,x2,x3,y4,y3)}".parse().unwrap();
        let b: TwoRegularDigraph = "{(x0,x2,y3,x1,y2,y1)}".parse().unwrap();
        let want: ExternalPattern = "{x0,x1,y1}".parse().unwrap();
        assert_eq!(external_pattern(&a), want);
        assert_eq!(external_pattern(&b), want);
        assert!(is_admissible(&a, 4));
        assert!(is_admissible(&b, 3));
    }

    #[test]
    fn empty_and_full_patterns() {
        let d: TwoRegularDigraph = "{(x2,y3)}".parse().unwrap();
        assert!(external_pattern(&d).vertices().is_empty());
        assert_eq!(pattern_x()[3].to_string(), "{x0,x1,y0,y1}");
        assert_eq!(pattern_x().len(), 9);
    }

    #[test]
    fn boundary_pair_violation() {
        // adding x5 (= x_{m+1} for m = 4) next to x1
        let d: TwoRegularDigraph = "{(x0,x1),(y1,y2,x2,x3,y4,y3),(x4,x5)}".parse().unwrap();
        assert!(!is_admissible(&d, 4));
        let d: TwoRegularDigraph = "{(x0,x1),(y1,y2,x2,x3,y4,y3,x5,x4)}".parse().unwrap();
        assert!(!is_admissible(&d, 4));
    }

    #[test]
    fn pattern_rejects_non_seam() {
        assert!("{x2}".parse::<ExternalPattern>().is_err());
        let p: ExternalPattern = "{y1,x0}".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["x0","y1"]"#);
    }
}
