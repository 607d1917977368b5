//! Host digraphs: the complete symmetric digraph `K*_n`, the cycle blowup
//! `H*_2m`, the circulant blowup `W*_2m` and its opened form `J*_2m`, plus the
//! fold `J*_2m -> W*_2m`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Arc, Digraph, TwoRegularDigraph, Vertex};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HostKind {
    CompleteSymmetric,
    HStar,
    WStar,
    JStar,
}

/// Names a host. For `CompleteSymmetric` the size parameter is the order `n`;
/// for the other kinds it is the block count `m`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HostDescriptor {
    pub kind: HostKind,
    pub m: u32,
}

impl HostDescriptor {
    pub fn complete_symmetric(n: u32) -> Self {
        HostDescriptor {
            kind: HostKind::CompleteSymmetric,
            m: n,
        }
    }

    pub fn build(&self) -> Result<Digraph> {
        match self.kind {
            HostKind::CompleteSymmetric => complete_symmetric(self.m),
            HostKind::HStar => h_star(self.m),
            HostKind::WStar => w_star(self.m),
            HostKind::JStar => j_star(self.m),
        }
    }
}

impl fmt::Display for HostDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HostKind::CompleteSymmetric => write!(f, "K*_{}", self.m),
            HostKind::HStar => write!(f, "H*_{}", 2 * self.m),
            HostKind::WStar => write!(f, "W*_{}", 2 * self.m),
            HostKind::JStar => write!(f, "J*_{}", 2 * self.m),
        }
    }
}

fn both_ways(u: Vertex, v: Vertex, out: &mut BTreeSet<Arc>) {
    out.insert(Arc::new(u, v));
    out.insert(Arc::new(v, u));
}

/// All four `x/y` combinations between blocks `i` and `j`, in both directions.
fn join_blocks(i: u32, j: u32, out: &mut BTreeSet<Arc>) {
    for u in [Vertex::x(i), Vertex::y(i)] {
        for v in [Vertex::x(j), Vertex::y(j)] {
            both_ways(u, v, out);
        }
    }
}

fn block_vertices(blocks: impl Iterator<Item = u32>) -> Vec<Vertex> {
    blocks.flat_map(|i| [Vertex::x(i), Vertex::y(i)]).collect()
}

/// Vertices of `K*_n`: `x_i` for `i < ceil(n/2)` and `y_i` for `i < floor(n/2)`.
pub fn complete_symmetric_vertices(n: u32) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = (0..n.div_ceil(2)).map(Vertex::x).collect();
    vs.extend((0..n / 2).map(Vertex::y));
    vs
}

pub fn complete_symmetric(n: u32) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::Domain(format!("K*_n needs n >= 2, got {n}")));
    }
    let vs = complete_symmetric_vertices(n);
    let mut arcs = BTreeSet::new();
    for (a, &u) in vs.iter().enumerate() {
        for &v in &vs[a + 1..] {
            both_ways(u, v, &mut arcs);
        }
    }
    Digraph::new(vs, arcs)
}

/// `H*_2m`. For `m = 2` the two junctions coincide and the result is the
/// symmetric 4-cycle `K*_{2,2}`, which is 2-out-regular.
pub fn h_star(m: u32) -> Result<Digraph> {
    if m < 2 {
        return Err(Error::Domain(format!("H*_2m needs m >= 2, got {m}")));
    }
    let mut arcs = BTreeSet::new();
    for i in 0..m {
        join_blocks(i, (i + 1) % m, &mut arcs);
    }
    Digraph::new(block_vertices(0..m), arcs)
}

/// Arc multiset of `W*_2m` as the fold image of `A(J*_2m)`. For `m >= 5` this
/// is a set; at `m = 4` the distance-2 junctions occur twice.
pub fn w_star_arc_list(m: u32) -> Result<Vec<Arc>> {
    if m < 4 {
        return Err(Error::Domain(format!("W*_2m needs m >= 4, got {m}")));
    }
    Ok(j_star_arcs(m).into_iter().map(|a| a.map(|v| v.folded(m))).collect())
}

pub fn w_star(m: u32) -> Result<Digraph> {
    if m < 5 {
        return Err(Error::Domain(format!("W*_2m needs m >= 5, got {m}")));
    }
    let mut arcs = BTreeSet::new();
    for i in 0..m {
        both_ways(Vertex::x(i), Vertex::y(i), &mut arcs);
        join_blocks(i, (i + 1) % m, &mut arcs);
        join_blocks(i, (i + 2) % m, &mut arcs);
    }
    Digraph::new(block_vertices(0..m), arcs)
}

/// Arcs of `J*_2m` for any `m >= 1`; the caps live on small `J*` ranges.
pub fn j_star_arcs(m: u32) -> BTreeSet<Arc> {
    let mut arcs = BTreeSet::new();
    for i in 1..=m {
        both_ways(Vertex::x(i), Vertex::y(i), &mut arcs);
    }
    for i in 0..m {
        join_blocks(i, i + 1, &mut arcs);
        join_blocks(i, i + 2, &mut arcs);
    }
    arcs
}

pub fn j_star_vertices(m: u32) -> Vec<Vertex> {
    block_vertices(0..m + 2)
}

pub fn j_star(m: u32) -> Result<Digraph> {
    if m < 3 {
        return Err(Error::Domain(format!("J*_2m needs m >= 3, got {m}")));
    }
    Digraph::new(j_star_vertices(m), j_star_arcs(m))
}

/// The fold `i -> i mod m`, applied to a digraph or a factor over `J*_2m`.
pub trait Fold: Sized {
    fn fold(&self, m: u32) -> Result<Self>;
}

fn check_fold_image(arcs: impl IntoIterator<Item = Arc>, m: u32) -> Result<()> {
    let image: BTreeSet<Arc> = w_star_arc_list(m)?.into_iter().collect();
    for a in arcs {
        if !image.contains(&a) {
            return Err(Error::ForeignArc(a));
        }
    }
    Ok(())
}

impl Fold for Digraph {
    fn fold(&self, m: u32) -> Result<Self> {
        let folded = self.map_vertices(|v| v.folded(m))?;
        check_fold_image(folded.arcs().iter().copied(), m)?;
        Ok(folded)
    }
}

impl Fold for TwoRegularDigraph {
    fn fold(&self, m: u32) -> Result<Self> {
        let folded = self.map_vertices(|v| v.folded(m))?;
        check_fold_image(folded.arcs(), m)?;
        Ok(folded)
    }
}

pub fn fold<T: Fold>(g: &T, m: u32) -> Result<T> {
    g.fold(m)
}
