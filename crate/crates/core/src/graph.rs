//! Graph kernel: labelled vertices, arcs, directed paths and cycles, 2-regular
//! digraphs and cycle types, together with the shift and concatenation algebra
//! the constructions are written in.
//!
//! Every vertex lives in a *block* `i` and on a *side* `x` or `y`, written
//! `x3`, `y11`. Cycles print as `(x0,x1,y2)` and paths as `<x0,y1>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

/// A vertex `x_i` or `y_i`. Ordered by side first (`X < Y`), then index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: u32,
}

impl Vertex {
    pub const fn new(side: Side, index: u32) -> Self {
        Vertex { side, index }
    }

    pub const fn x(index: u32) -> Self {
        Vertex::new(Side::X, index)
    }

    pub const fn y(index: u32) -> Self {
        Vertex::new(Side::Y, index)
    }

    /// The same side, `by` blocks further along. Indices are absolute.
    pub fn shifted(self, by: i64) -> Result<Vertex> {
        let index = i64::from(self.index) + by;
        u32::try_from(index)
            .map(|index| Vertex { index, ..self })
            .map_err(|_| Error::IndexOutOfRange { vertex: self, by })
    }

    /// Index reduced modulo `m`.
    pub fn folded(self, m: u32) -> Vertex {
        Vertex {
            index: self.index % m,
            ..self
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::X => 'x',
            Side::Y => 'y',
        };
        write!(f, "{}{}", side, self.index)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseVertex(s.to_string());
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('x') => Side::X,
            Some('y') => Side::Y,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        Ok(Vertex { side, index })
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A directed arc `tail -> head`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub const fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Arc {
        Arc::new(self.head, self.tail)
    }

    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> Arc {
        Arc::new(f(self.tail), f(self.head))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tail, self.head)
    }
}

/// Shift by `k` blocks, without wraparound.
pub trait Shift: Sized {
    fn shift(&self, k: i64) -> Result<Self>;
}

impl Shift for Vertex {
    fn shift(&self, k: i64) -> Result<Self> {
        self.shifted(k)
    }
}

impl Shift for Arc {
    fn shift(&self, k: i64) -> Result<Self> {
        Ok(Arc::new(self.tail.shifted(k)?, self.head.shifted(k)?))
    }
}

/// A simple digraph: a vertex set and an arc set over it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    vertices: BTreeSet<Vertex>,
    arcs: BTreeSet<Arc>,
}

impl Digraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for arc in arcs {
            if arc.tail == arc.head {
                return Err(Error::Domain(format!("loop at {}", arc.tail)));
            }
            for v in [arc.tail, arc.head] {
                if !vertices.contains(&v) {
                    return Err(Error::Domain(format!("arc {arc} leaves the vertex set at {v}")));
                }
            }
            set.insert(arc);
        }
        Ok(Digraph {
            vertices,
            arcs: set,
        })
    }

    /// The digraph spanned by the endpoints of `arcs`.
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        let vertices = arcs.iter().flat_map(|a| [a.tail, a.head]);
        Digraph::new(vertices.collect::<Vec<_>>(), arcs)
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_arc(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    /// Relabel every vertex. Arcs that collide are merged.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Digraph> {
        Digraph::new(
            self.vertices.iter().map(|&v| f(v)).collect::<Vec<_>>(),
            self.arcs.iter().map(|a| a.map(&f)).collect::<Vec<_>>(),
        )
    }
}

impl Shift for Digraph {
    fn shift(&self, k: i64) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.shifted(k))
            .collect::<Result<Vec<_>>>()?;
        let arcs = self
            .arcs
            .iter()
            .map(|a| a.shift(k))
            .collect::<Result<Vec<_>>>()?;
        Digraph::new(vertices, arcs)
    }
}

fn check_distinct(vertices: &[Vertex]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if !seen.insert(v) {
            return Err(Error::RepeatedVertex(v));
        }
    }
    Ok(())
}

/// A directed path `<v0, v1, ..., vk>` of length `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct DirectedPath {
    vertices: Vec<Vertex>,
}

impl DirectedPath {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::TooShort {
                kind: "path",
                min: 1,
                got: 0,
            });
        }
        check_distinct(&vertices)?;
        Ok(DirectedPath { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn terminal(&self) -> Vertex {
        *self.vertices.last().expect("paths are non-empty")
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn internal_vertices(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.vertices.windows(2).map(|w| Arc::new(w[0], w[1]))
    }
}

impl Shift for DirectedPath {
    fn shift(&self, k: i64) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.shifted(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(DirectedPath { vertices })
    }
}

impl fmt::Display for DirectedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '<', '>', &self.vertices)
    }
}

impl FromStr for DirectedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DirectedPath::new(parse_list(s, '<', '>')?)
    }
}

/// A directed cycle, stored rotated so the least vertex comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct DirectedCycle {
    vertices: Vec<Vertex>,
}

impl DirectedCycle {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooShort {
                kind: "cycle",
                min: 2,
                got: vertices.len(),
            });
        }
        check_distinct(&vertices)?;
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        Ok(DirectedCycle { vertices })
    }

    /// Vertices in canonical rotation.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Arc::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// The same cycle traversed backwards.
    pub fn reversed(&self) -> DirectedCycle {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        DirectedCycle::new(vertices).expect("reversal keeps vertices distinct")
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Result<DirectedCycle> {
        DirectedCycle::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

pub fn reverse_cycle(c: &DirectedCycle) -> DirectedCycle {
    c.reversed()
}

impl Shift for DirectedCycle {
    fn shift(&self, k: i64) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.shifted(k))
            .collect::<Result<Vec<_>>>()?;
        // a uniform shift preserves the rotation order
        Ok(DirectedCycle { vertices })
    }
}

impl fmt::Display for DirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '(', ')', &self.vertices)
    }
}

impl FromStr for DirectedCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DirectedCycle::new(parse_list(s, '(', ')')?)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, open: char, close: char, vs: &[Vertex]) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "{close}")
}

fn parse_list(s: &str, open: char, close: char) -> Result<Vec<Vertex>> {
    let inner = s
        .trim()
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::ParseWalk(s.to_string()))?;
    inner
        .split(',')
        .map(|part| part.parse())
        .collect::<Result<Vec<_>>>()
}

/// Result of joining two paths end to start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Walk {
    Path(DirectedPath),
    Cycle(DirectedCycle),
}

impl Walk {
    pub fn len(&self) -> usize {
        match self {
            Walk::Path(p) => p.len(),
            Walk::Cycle(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn into_path(self) -> Result<DirectedPath> {
        match self {
            Walk::Path(p) => Ok(p),
            Walk::Cycle(c) => Err(Error::Domain(format!("expected a path, closed cycle {c}"))),
        }
    }

    pub fn into_cycle(self) -> Result<DirectedCycle> {
        match self {
            Walk::Cycle(c) => Ok(c),
            Walk::Path(p) => Err(Error::Domain(format!("expected a cycle, got open path {p}"))),
        }
    }
}

/// `p + q`. A path when the two share only `t(p) = s(q)`; a cycle when
/// additionally `s(p) = t(q)` and no internal vertex is shared.
pub fn concat(p: &DirectedPath, q: &DirectedPath) -> Result<Walk> {
    if p.terminal() != q.source() {
        return Err(Error::EndpointMismatch {
            terminal: p.terminal(),
            source_vertex: q.source(),
        });
    }
    let closes = p.source() == q.terminal() && p.len() + q.len() >= 2;
    let head: BTreeSet<Vertex> = p.vertices().iter().copied().collect();
    let tail_end = if closes {
        q.vertices().len() - 1
    } else {
        q.vertices().len()
    };
    for &v in &q.vertices()[1..tail_end] {
        if head.contains(&v) {
            return Err(Error::SharedVertex(v));
        }
    }
    let mut vertices = p.vertices().to_vec();
    vertices.extend_from_slice(&q.vertices()[1..tail_end]);
    if closes {
        Ok(Walk::Cycle(DirectedCycle::new(vertices)?))
    } else {
        Ok(Walk::Path(DirectedPath::new(vertices)?))
    }
}

/// Multiset of cycle lengths, kept in non-decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut lengths: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = lengths.iter().find(|&&l| l < 2) {
            return Err(Error::ParseCycleType(
                format!("{lengths:?}"),
                format!("cycle length {bad} is below 2"),
            ));
        }
        lengths.sort_unstable();
        Ok(CycleType(lengths))
    }

    pub fn lengths(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the lengths.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.0.iter().all(|l| l % 2 == 0)
    }

    pub fn count(&self, length: u32) -> usize {
        self.0.iter().filter(|&&l| l == length).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(length, multiplicity)` pairs in increasing length order.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &l in &self.0 {
            match out.last_mut() {
                Some((len, count)) if *len == l => *count += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Multiset union.
    pub fn union(&self, other: &CycleType) -> CycleType {
        let mut lengths = self.0.clone();
        lengths.extend_from_slice(&other.0);
        lengths.sort_unstable();
        CycleType(lengths)
    }

    /// Multiset difference; `None` if `other` is not contained in `self`.
    pub fn without(&self, other: &[u32]) -> Option<CycleType> {
        let mut lengths = self.0.clone();
        for l in other {
            let at = lengths.iter().position(|x| x == l)?;
            lengths.remove(at);
        }
        Some(CycleType(lengths))
    }

    /// Every type of the given order with all lengths even, in lexicographic
    /// order of the sorted length lists.
    pub fn bipartite_types(order: u32) -> Vec<CycleType> {
        fn go(left: u32, min: u32, acc: &mut Vec<u32>, out: &mut Vec<CycleType>) {
            if left == 0 {
                out.push(CycleType(acc.clone()));
                return;
            }
            let mut l = min;
            while l <= left {
                acc.push(l);
                go(left - l, l, acc, out);
                acc.pop();
                l += 2;
            }
        }
        let mut out = Vec::new();
        if order > 0 && order.is_multiple_of(2) {
            go(order, 2, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (len, count)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if count == 1 {
                write!(f, "{len}")?;
            } else {
                write!(f, "{len}^{count}")?;
            }
        }
        write!(f, "]")
    }
}

/// Parses `[2^3,4]`, `[2,2,2,4]` or `[]`.
impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::ParseCycleType(s.to_string(), why.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected brackets"))?
            .trim();
        let mut lengths = Vec::new();
        if inner.is_empty() {
            return Ok(CycleType(lengths));
        }
        for term in inner.split(',') {
            let term = term.trim();
            let (len, exp) = match term.split_once('^') {
                Some((l, e)) => (l.trim(), e.trim()),
                None => (term, "1"),
            };
            let len: u32 = len.parse().map_err(|_| bad("length is not an integer"))?;
            let exp: usize = exp.parse().map_err(|_| bad("exponent is not an integer"))?;
            if len < 2 {
                return Err(bad("cycle lengths must be at least 2"));
            }
            if exp < 1 {
                return Err(bad("exponents must be at least 1"));
            }
            lengths.extend(std::iter::repeat_n(len, exp));
        }
        CycleType::new(lengths)
    }
}

/// Vertex-disjoint union of directed cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<DirectedCycle>", into = "Vec<DirectedCycle>")]
pub struct TwoRegularDigraph {
    cycles: Vec<DirectedCycle>,
}

impl TwoRegularDigraph {
    pub fn new(mut cycles: Vec<DirectedCycle>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &cycles {
            for &v in c.vertices() {
                if !seen.insert(v) {
                    return Err(Error::NotDisjoint(v));
                }
            }
        }
        cycles.sort();
        Ok(TwoRegularDigraph { cycles })
    }

    /// Splits an arc set with in- and out-degree one at every endpoint.
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut succ: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut heads = BTreeSet::new();
        for a in arcs {
            if succ.insert(a.tail, a.head).is_some() {
                return Err(Error::NotTwoRegular(a.tail));
            }
            if !heads.insert(a.head) {
                return Err(Error::NotTwoRegular(a.head));
            }
        }
        if let Some(v) = succ.keys().find(|v| !heads.contains(v)) {
            return Err(Error::NotTwoRegular(*v));
        }
        if let Some(v) = heads.iter().find(|v| !succ.contains_key(v)) {
            return Err(Error::NotTwoRegular(*v));
        }
        let mut visited = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in succ.keys() {
            if visited.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut v = start;
            while visited.insert(v) {
                walk.push(v);
                v = succ[&v];
            }
            cycles.push(DirectedCycle::new(walk)?);
        }
        TwoRegularDigraph::new(cycles)
    }

    pub fn cycles(&self) -> &[DirectedCycle] {
        &self.cycles
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.cycles
            .iter()
            .flat_map(|c| c.vertices().iter().copied())
            .collect()
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.cycles.iter().flat_map(|c| c.arcs()).collect()
    }

    /// Number of saturated vertices (equal to the number of arcs).
    pub fn order(&self) -> usize {
        self.cycles.iter().map(DirectedCycle::len).sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.cycles.iter().any(|c| c.contains(v))
    }

    pub fn cycle_type(&self) -> CycleType {
        cycle_type_of(self)
    }

    /// `self ⊕ other`; fails if the two share a vertex.
    pub fn union(&self, other: &TwoRegularDigraph) -> Result<TwoRegularDigraph> {
        let mut cycles = self.cycles.clone();
        cycles.extend(other.cycles.iter().cloned());
        TwoRegularDigraph::new(cycles)
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Result<TwoRegularDigraph> {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.map_vertices(&f))
            .collect::<Result<Vec<_>>>()?;
        TwoRegularDigraph::new(cycles)
    }
}

impl Shift for TwoRegularDigraph {
    fn shift(&self, k: i64) -> Result<Self> {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.shift(k))
            .collect::<Result<Vec<_>>>()?;
        TwoRegularDigraph::new(cycles)
    }
}

impl fmt::Display for TwoRegularDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.cycles.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Parses `{(x0,x1), (y0,y1,y2)}`; the braces are optional.
impl FromStr for TwoRegularDigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(t);
        let mut cycles = Vec::new();
        let mut rest = t.trim();
        while !rest.is_empty() {
            let close = rest.find(')').ok_or_else(|| Error::ParseWalk(s.to_string()))?;
            cycles.push(rest[..=close].trim().parse()?);
            rest = rest[close + 1..].trim_start_matches([',', ' ', ';', '\n', '\t']);
        }
        TwoRegularDigraph::new(cycles)
    }
}

pub fn cycle_type_of(d: &TwoRegularDigraph) -> CycleType {
    CycleType(d.cycles.iter().map(|c| c.len() as u32).collect::<Vec<_>>()).sorted()
}

impl CycleType {
    fn sorted(mut self) -> Self {
        self.0.sort_unstable();
        self
    }
}

macro_rules! vec_conversions {
    ($ty:ty, $item:ty, $field:tt, $ctor:path) => {
        impl TryFrom<Vec<$item>> for $ty {
            type Error = Error;

            fn try_from(v: Vec<$item>) -> Result<Self> {
                $ctor(v)
            }
        }

        impl From<$ty> for Vec<$item> {
            fn from(x: $ty) -> Self {
                x.$field
            }
        }
    };
}

vec_conversions!(DirectedPath, Vertex, vertices, DirectedPath::new);
vec_conversions!(DirectedCycle, Vertex, vertices, DirectedCycle::new);
vec_conversions!(CycleType, u32, 0, CycleType::new);
vec_conversions!(TwoRegularDigraph, DirectedCycle, cycles, TwoRegularDigraph::new);

/// Generic entry point mirroring the `σ^k` notation.
pub fn shift<T: Shift>(g: &T, k: i64) -> Result<T> {
    g.shift(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str) -> DirectedCycle {
        s.parse().unwrap()
    }

    fn path(s: &str) -> DirectedPath {
        s.parse().unwrap()
    }

    #[test]
    fn vertex_text_round_trip() {
        for s in ["x0", "y11", "x123"] {
            assert_eq!(s.parse::<Vertex>().unwrap().to_string(), s);
        }
        for s in ["z1", "x", "x-1", "X1", "y1a"] {
            assert!(s.parse::<Vertex>().is_err(), "{s}");
        }
    }

    #[test]
    fn vertex_order_is_side_then_index() {
        assert!(Vertex::x(10) < Vertex::y(0));
        assert!(Vertex::x(1) < Vertex::x(2));
    }

    #[test]
    fn cycle_type_examples() {
        let d: TwoRegularDigraph = "{(x0,x2,y3,x1,y2,y1)}".parse().unwrap();
        assert_eq!(cycle_type_of(&d).lengths(), &[6]);
        assert!(cycle_type_of(&TwoRegularDigraph::default()).is_empty());
        let d: TwoRegularDigraph = "{(x0,x1),(y0,y1),(x2,y3,x3,y2)}".parse().unwrap();
        assert_eq!(cycle_type_of(&d).lengths(), &[2, 2, 4]);
    }

    #[test]
    fn shift_examples() {
        let c = cyc("(x0,x2,y3,x1,y2,y1)");
        assert_eq!(shift(&c, 1).unwrap(), cyc("(x1,x3,y4,x2,y3,y2)"));
        let p = path("<x0,y1>");
        assert_eq!(shift(&p, 0).unwrap(), p);
        assert_eq!(shift(&p, 2).unwrap(), path("<x2,y3>"));
        assert!(matches!(
            shift(&p, -1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn reverse_examples() {
        let c = cyc("(x0,x1,y2)");
        assert_eq!(reverse_cycle(&c), cyc("(y2,x1,x0)"));
        assert_eq!(reverse_cycle(&reverse_cycle(&c)), c);
        let arcs: BTreeSet<Arc> = c.reversed().arcs().collect();
        let flipped: BTreeSet<Arc> = c.arcs().map(Arc::reversed).collect();
        assert_eq!(arcs, flipped);
    }

    #[test]
    fn canonical_rotation() {
        let c = cyc("(y2,x1,x0)");
        assert_eq!(c.vertices()[0], Vertex::x(0));
        assert_eq!(c.to_string(), "(x0,y2,x1)");
    }

    #[test]
    fn concat_examples() {
        let w = concat(&path("<x0,x1>"), &path("<x1,x2>")).unwrap();
        assert_eq!(w, Walk::Path(path("<x0,x1,x2>")));
        let w = concat(&path("<x0,y1>"), &path("<y1,x0>")).unwrap();
        assert_eq!(w, Walk::Cycle(cyc("(x0,y1)")));
        assert!(matches!(
            concat(&path("<x0,x1>"), &path("<x2,x3>")),
            Err(Error::EndpointMismatch { .. })
        ));
        assert!(matches!(
            concat(&path("<x0,x1,x2>"), &path("<x2,x1>")),
            Err(Error::SharedVertex(_))
        ));
        // closing back onto the source through a shared internal vertex
        assert!(matches!(
            concat(&path("<x0,x1,x2>"), &path("<x2,x1,x0>")),
            Err(Error::SharedVertex(_))
        ));
    }

    #[test]
    fn concat_lengths_add() {
        let p = path("<y2,x0,y1,x1,x3>");
        let q = path("<x3,y4,y5,y3,x2,x4,y2>");
        let w = concat(&p, &q).unwrap();
        assert_eq!(w.len(), p.len() + q.len());
        assert_eq!(w.len(), 10);
    }

    #[test]
    fn cycle_type_parse_and_display() {
        let t: CycleType = "[2^3,4]".parse().unwrap();
        assert_eq!(t.lengths(), &[2, 2, 2, 4]);
        assert_eq!(t, "[4,2,2,2]".parse().unwrap());
        assert_eq!(t.to_string(), "[2^3,4]");
        assert!("[1,3]".parse::<CycleType>().is_err());
        assert!("[2^0]".parse::<CycleType>().is_err());
        assert!("2,4".parse::<CycleType>().is_err());
        assert_eq!("[]".parse::<CycleType>().unwrap().order(), 0);
    }

    #[test]
    fn two_regular_from_arcs_round_trip() {
        let d: TwoRegularDigraph = "{(x0,x1),(y0,y1,y2)}".parse().unwrap();
        let back = TwoRegularDigraph::from_arcs(d.arcs()).unwrap();
        assert_eq!(back, d);
        let broken = [
            Arc::new(Vertex::x(0), Vertex::x(1)),
            Arc::new(Vertex::x(0), Vertex::x(2)),
        ];
        assert!(TwoRegularDigraph::from_arcs(broken).is_err());
    }

    #[test]
    fn overlapping_cycles_rejected() {
        assert!("{(x0,x1),(x1,y1)}".parse::<TwoRegularDigraph>().is_err());
    }
}
