//! Factorizations of `H*_2m` into four directed 2-factors of a bipartite type.
//!
//! Without 2-cycles, an undirected factorization of `H_2m` into two 2-factors
//! is directed both ways. With `s >= 2` two-cycles, the undirected
//! factorization carries a `2s`-cycle that is split into two matchings of
//! 2-cycles. With exactly one 2-cycle, the explicit chain construction below
//! is used.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::checker::verify_factorization;
use crate::error::{Error, Result};
use crate::graph::{CycleType, DirectedCycle, TwoRegularDigraph, Vertex};
use crate::hosts::h_star;

/// Four (two when `m = 2`) factors of `H*_2m` of one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStarFactorization {
    pub m: u32,
    pub factors: Vec<TwoRegularDigraph>,
}

fn cycle(vs: Vec<Vertex>) -> Result<DirectedCycle> {
    DirectedCycle::new(vs)
}

/// The four 2-cycles on the junction between blocks `m-1` and `0`.
pub fn two_cycle_gadgets(m: u32) -> Result<[DirectedCycle; 4]> {
    if m < 3 {
        return Err(Error::Domain(format!("gadgets need m >= 3, got {m}")));
    }
    let (x, y) = (Vertex::x, Vertex::y);
    Ok([
        cycle(vec![x(0), x(m - 1)])?,
        cycle(vec![y(0), x(m - 1)])?,
        cycle(vec![y(0), y(m - 1)])?,
        cycle(vec![x(0), y(m - 1)])?,
    ])
}

/// Where a chain sits in the one-2-cycle construction.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ChainPosition {
    /// The chain right after the 2-cycle, starting at block 0.
    Second,
    /// Any later chain, starting at its offset.
    Later,
}

fn side(odd: bool, when_odd: fn(u32) -> Vertex, when_even: fn(u32) -> Vertex) -> fn(u32) -> Vertex {
    if odd {
        when_odd
    } else {
        when_even
    }
}

/// Four directed `2k`-cycles over blocks `a..=a+k`, one for each factor.
pub fn chain_cycles(position: ChainPosition, a: u32, k: u32) -> Result<[DirectedCycle; 4]> {
    if k < 2 {
        return Err(Error::Domain(format!("chains need k >= 2, got {k}")));
    }
    let (x, y) = (Vertex::x, Vertex::y);
    let even = k.is_multiple_of(2);
    match position {
        ChainPosition::Second => {
            if a != 0 {
                return Err(Error::Domain("the second chain starts at block 0".into()));
            }
            let c0: Vec<Vertex> = (0..=k).map(y).chain((1..k).rev().map(x)).collect();
            let (c1, c2, c3);
            if even {
                c1 = std::iter::once(x(0))
                    .chain((1..=k).map(|j| side(j % 2 == 1, x, y)(j)))
                    .chain((1..k).rev().map(|j| side(j % 2 == 1, y, x)(j)))
                    .collect::<Vec<_>>();
                c2 = [x(0), y(1)]
                    .into_iter()
                    .chain((2..=k).map(x))
                    .chain((2..k).rev().map(y))
                    .chain(std::iter::once(x(1)))
                    .collect::<Vec<_>>();
                c3 = [y(0), x(1)]
                    .into_iter()
                    .chain((2..=k).map(|j| side(j % 2 == 0, x, y)(j)))
                    .chain((2..k).rev().map(|j| side(j % 2 == 1, x, y)(j)))
                    .chain(std::iter::once(y(1)))
                    .collect::<Vec<_>>();
            } else {
                c1 = std::iter::once(x(0))
                    .chain((1..k).map(x))
                    .chain((1..=k).rev().map(y))
                    .collect::<Vec<_>>();
                c2 = std::iter::once(x(0))
                    .chain((1..k).map(|j| side(j % 2 == 1, y, x)(j)))
                    .chain(std::iter::once(x(k)))
                    .chain((1..k).rev().map(|j| side(j % 2 == 0, y, x)(j)))
                    .collect::<Vec<_>>();
                c3 = std::iter::once(y(0))
                    .chain((1..k).map(|j| side(j % 2 == 1, x, y)(j)))
                    .chain(std::iter::once(x(k)))
                    .chain((1..k).rev().map(|j| side(j % 2 == 0, x, y)(j)))
                    .collect::<Vec<_>>();
            }
            Ok([cycle(c0)?, cycle(c1)?, cycle(c2)?, cycle(c3)?])
        }
        ChainPosition::Later => {
            let (c0, c2): (Vec<Vertex>, Vec<Vertex>);
            if even {
                c0 = (0..k).map(|j| x(a + j)).chain((1..=k).rev().map(|j| y(a + j))).collect();
                c2 = (0..k)
                    .map(|j| side(j % 2 == 1, x, y)(a + j))
                    .chain(std::iter::once(x(a + k)))
                    .chain((1..k).rev().map(|j| side(j % 2 == 1, y, x)(a + j)))
                    .collect();
            } else {
                c0 = std::iter::once(x(a))
                    .chain((1..k).map(|j| side(j % 2 == 1, x, y)(a + j)))
                    .chain(std::iter::once(y(a + k)))
                    .chain((1..k).rev().map(|j| side(j % 2 == 0, x, y)(a + j)))
                    .collect();
                c2 = std::iter::once(y(a))
                    .chain((1..=k).map(|j| x(a + j)))
                    .chain((1..k).rev().map(|j| y(a + j)))
                    .collect();
            }
            let c0 = cycle(c0)?;
            let c2 = cycle(c2)?;
            Ok([c0.clone(), c0.reversed(), c2.clone(), c2.reversed()])
        }
    }
}

/// An undirected cycle, as its vertex sequence.
pub type UndirectedCycle = Vec<Vertex>;

/// Two edge-disjoint undirected 2-factors of `H_2m`, each of type `f`,
/// together covering every edge.
pub fn haggkvist_undirected(f: &CycleType, m: u32) -> Result<[Vec<UndirectedCycle>; 2]> {
    check_type(f, m)?;
    if let Some(&l) = f.lengths().iter().find(|&&l| l < 4) {
        return Err(Error::Domain(format!("undirected cycles need length >= 4, got {l}")));
    }
    if m < 3 {
        return Err(Error::Domain(format!("H_2m needs m >= 3, got {m}")));
    }
    let pair = segment_factors(f, m);
    if undirected_check(&pair, f, m).is_ok() {
        return Ok(pair);
    }
    haggkvist_search(f, m, 2_000_000)
}

/// Segments of `k = l/2` consecutive blocks: factor A runs along the x side
/// and back along the y side, factor B zigzags across the same blocks.
fn segment_factors(f: &CycleType, m: u32) -> [Vec<UndirectedCycle>; 2] {
    let (x, y) = (|i: u32| Vertex::x(i % m), |i: u32| Vertex::y(i % m));
    let mut a_side = Vec::new();
    let mut b_side = Vec::new();
    let mut a = 0;
    for &l in f.lengths() {
        let k = l / 2;
        a_side.push((0..k).map(|j| x(a + j)).chain((1..=k).rev().map(|j| y(a + j))).collect());
        let up: Vec<Vertex> = (1..k)
            .map(|j| if j % 2 == 1 { x(a + j) } else { y(a + j) })
            .collect();
        let down: Vec<Vertex> = (1..k)
            .map(|j| if j % 2 == 1 { y(a + j) } else { x(a + j) })
            .collect();
        b_side.push(
            std::iter::once(y(a))
                .chain(up)
                .chain(std::iter::once(x(a + k)))
                .chain(down.into_iter().rev())
                .collect(),
        );
        a += k;
    }
    [a_side, b_side]
}

type Edge = (Vertex, Vertex);

fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn h_edges(m: u32) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for i in 0..m {
        let j = (i + 1) % m;
        for u in [Vertex::x(i), Vertex::y(i)] {
            for v in [Vertex::x(j), Vertex::y(j)] {
                out.insert(edge(u, v));
            }
        }
    }
    out
}

fn undirected_check(pair: &[Vec<UndirectedCycle>; 2], f: &CycleType, m: u32) -> Result<()> {
    let host = h_edges(m);
    let mut seen = BTreeSet::new();
    for factor in pair {
        let mut lens = Vec::new();
        let mut vs = BTreeSet::new();
        for c in factor {
            lens.push(c.len() as u32);
            for (i, &u) in c.iter().enumerate() {
                let v = c[(i + 1) % c.len()];
                let e = edge(u, v);
                if !host.contains(&e) || !seen.insert(e) {
                    return Err(Error::Verification(format!("edge {}{} reused or foreign", e.0, e.1)));
                }
                if !vs.insert(u) {
                    return Err(Error::Verification(format!("{u} repeated")));
                }
            }
        }
        if CycleType::new(lens)? != *f || vs.len() != 2 * m as usize {
            return Err(Error::Verification("wrong cycle type".into()));
        }
    }
    if seen.len() != host.len() {
        return Err(Error::Verification("edges left over".into()));
    }
    Ok(())
}

fn components(adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Vec<UndirectedCycle> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut c = vec![start];
        seen.insert(start);
        let mut prev = start;
        let mut cur = adj[&start][0];
        while cur != start {
            seen.insert(cur);
            c.push(cur);
            let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
            prev = cur;
            cur = next;
        }
        out.push(c);
    }
    out
}

/// Exhaustive split of the edges of `H_2m` into two 2-factors of type `f`.
pub fn haggkvist_search(f: &CycleType, m: u32, max_nodes: u64) -> Result<[Vec<UndirectedCycle>; 2]> {
    check_type(f, m)?;
    let edges: Vec<Edge> = h_edges(m).into_iter().collect();
    let mut deg: BTreeMap<Vertex, [u8; 2]> = BTreeMap::new();
    for &(u, v) in &edges {
        deg.entry(u).or_default();
        deg.entry(v).or_default();
    }
    let mut side = vec![0u8; edges.len()];
    let mut nodes = 0u64;

    fn finish(edges: &[Edge], side: &[u8], s: u8) -> Vec<UndirectedCycle> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for (e, _) in edges.iter().zip(side).filter(|(_, &t)| t == s) {
            adj.entry(e.0).or_default().push(e.1);
            adj.entry(e.1).or_default().push(e.0);
        }
        components(&adj)
    }

    fn go(
        i: usize,
        edges: &[Edge],
        side: &mut Vec<u8>,
        deg: &mut BTreeMap<Vertex, [u8; 2]>,
        f: &CycleType,
        nodes: &mut u64,
        max_nodes: u64,
    ) -> Result<bool> {
        *nodes += 1;
        if *nodes > max_nodes {
            return Err(Error::BudgetExceeded);
        }
        if i == edges.len() {
            for s in 0..2 {
                let lens = finish(edges, side, s).iter().map(|c| c.len() as u32).collect();
                if CycleType::new(lens)? != *f {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let (u, v) = edges[i];
        for s in 0..2u8 {
            let si = s as usize;
            if deg[&u][si] == 2 || deg[&v][si] == 2 {
                continue;
            }
            if i == 0 && s == 1 {
                // the two factors are interchangeable
                break;
            }
            side[i] = s;
            deg.get_mut(&u).expect("vertex")[si] += 1;
            deg.get_mut(&v).expect("vertex")[si] += 1;
            if go(i + 1, edges, side, deg, f, nodes, max_nodes)? {
                return Ok(true);
            }
            deg.get_mut(&u).expect("vertex")[si] -= 1;
            deg.get_mut(&v).expect("vertex")[si] -= 1;
        }
        Ok(false)
    }

    if go(0, &edges, &mut side, &mut deg, f, &mut nodes, max_nodes)? {
        let pair = [finish(&edges, &side, 0), finish(&edges, &side, 1)];
        undirected_check(&pair, f, m)?;
        Ok(pair)
    } else {
        Err(Error::SearchExhausted)
    }
}

fn check_type(f: &CycleType, m: u32) -> Result<()> {
    if let Some(&odd) = f.lengths().iter().find(|&&l| l % 2 != 0) {
        return Err(Error::OddLength(odd));
    }
    if f.order() != 2 * m {
        return Err(Error::OrderMismatch {
            ty: f.clone(),
            got: f.order(),
            expected: 2 * m,
        });
    }
    Ok(())
}

fn both_ways(c: &UndirectedCycle) -> Result<(DirectedCycle, DirectedCycle)> {
    let d = DirectedCycle::new(c.clone())?;
    let r = d.reversed();
    Ok((d, r))
}

/// Four verified `f`-factors of `H*_2m` (two when `m = 2`).
pub fn factorize_h_star(f: &CycleType, m: u32) -> Result<HStarFactorization> {
    check_type(f, m)?;
    if m < 2 {
        return Err(Error::Domain(format!("H*_2m needs m >= 2, got {m}")));
    }
    let s = f.count(2);
    let (x, y) = (Vertex::x, Vertex::y);
    let factors: Vec<TwoRegularDigraph> = if m == 2 {
        let pairs: [[Vec<Vertex>; 2]; 2] = if s == 0 {
            [[vec![x(0), x(1), y(0), y(1)], vec![]], [vec![x(0), y(1), y(0), x(1)], vec![]]]
        } else {
            [[vec![x(0), x(1)], vec![y(0), y(1)]], [vec![x(0), y(1)], vec![y(0), x(1)]]]
        };
        pairs
            .into_iter()
            .map(|cs| {
                TwoRegularDigraph::new(
                    cs.into_iter()
                        .filter(|c| !c.is_empty())
                        .map(DirectedCycle::new)
                        .collect::<Result<Vec<_>>>()?,
                )
            })
            .collect::<Result<_>>()?
    } else if s == 0 {
        let pair = haggkvist_undirected(f, m)?;
        let mut out = Vec::new();
        for factor in &pair {
            let (mut fwd, mut back) = (Vec::new(), Vec::new());
            for c in factor {
                let (d, r) = both_ways(c)?;
                fwd.push(d);
                back.push(r);
            }
            out.push(TwoRegularDigraph::new(fwd)?);
            out.push(TwoRegularDigraph::new(back)?);
        }
        out
    } else if s >= 2 {
        let mut merged = vec![2 * s as u32];
        merged.extend(f.lengths().iter().filter(|&&l| l != 2));
        let merged = CycleType::new(merged)?;
        let pair = haggkvist_undirected(&merged, m)?;
        let mut out = Vec::new();
        for factor in &pair {
            let long = factor
                .iter()
                .position(|c| c.len() == 2 * s)
                .expect("the merged cycle is present");
            let (mut fwd, mut back) = (Vec::new(), Vec::new());
            for (i, c) in factor.iter().enumerate() {
                if i == long {
                    for (j, &u) in c.iter().enumerate() {
                        let two = DirectedCycle::new(vec![u, c[(j + 1) % c.len()]])?;
                        if j % 2 == 0 {
                            fwd.push(two);
                        } else {
                            back.push(two);
                        }
                    }
                } else {
                    let (d, r) = both_ways(c)?;
                    fwd.push(d);
                    back.push(r);
                }
            }
            out.push(TwoRegularDigraph::new(fwd)?);
            out.push(TwoRegularDigraph::new(back)?);
        }
        out
    } else {
        let chains: Vec<u32> = f.lengths()[1..].iter().map(|&l| l / 2).collect();
        let mut parts: [Vec<DirectedCycle>; 4] = two_cycle_gadgets(m)?.map(|c| vec![c]);
        let mut a = 0;
        for (i, &k) in chains.iter().enumerate() {
            let pos = if i == 0 { ChainPosition::Second } else { ChainPosition::Later };
            for (part, c) in parts.iter_mut().zip(chain_cycles(pos, a, k)?) {
                part.push(c);
            }
            a += k;
        }
        parts.into_iter().map(TwoRegularDigraph::new).collect::<Result<_>>()?
    };
    verify_factorization(&h_star(m)?, &factors, f).into_result()?;
    Ok(HStarFactorization { m, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn gadgets_at_seven() {
        let g = two_cycle_gadgets(7).unwrap();
        assert_eq!(g[0].to_string(), "(x0,x6)");
        let arcs: BTreeSet<_> = g.iter().flat_map(|c| c.arcs()).collect();
        assert_eq!(arcs.len(), 8);
    }

    #[test]
    fn second_chain_k2() {
        let c = chain_cycles(ChainPosition::Second, 0, 2).unwrap();
        assert_eq!(c[0], "(y0,y1,y2,x1)".parse().unwrap());
    }

    #[test]
    fn chains_are_arc_disjoint() {
        for k in 2..=5 {
            for (pos, a) in [(ChainPosition::Second, 0), (ChainPosition::Later, 3)] {
                let cs = chain_cycles(pos, a, k).unwrap();
                let arcs: BTreeSet<_> = cs.iter().flat_map(|c| c.arcs()).collect();
                assert_eq!(arcs.len(), 8 * k as usize, "k={k} {pos:?}");
                assert!(cs.iter().all(|c| c.len() == 2 * k as usize));
            }
            let cs = chain_cycles(ChainPosition::Later, 1, k).unwrap();
            assert_eq!(cs[1], cs[0].reversed());
            assert_eq!(cs[3], cs[2].reversed());
        }
    }

    #[test]
    fn two_four_at_three() {
        let h = factorize_h_star(&t("[2,4]"), 3).unwrap();
        assert_eq!(h.factors[0], "{(x0,x2),(y0,y1,y2,x1)}".parse().unwrap());
    }

    #[test]
    fn small_cases() {
        assert_eq!(factorize_h_star(&t("[10]"), 5).unwrap().factors.len(), 4);
        assert_eq!(factorize_h_star(&t("[2^4]"), 4).unwrap().factors.len(), 4);
        assert_eq!(factorize_h_star(&t("[4]"), 2).unwrap().factors.len(), 2);
        assert_eq!(factorize_h_star(&t("[2,2]"), 2).unwrap().factors.len(), 2);
    }

    #[test]
    fn undirected_examples() {
        for (f, m) in [("[10]", 5), ("[4,6]", 5), ("[6]", 3)] {
            let pair = haggkvist_undirected(&t(f), m).unwrap();
            undirected_check(&pair, &t(f), m).unwrap();
        }
    }

    #[test]
    fn segments_need_no_fallback() {
        for m in 3..=10u32 {
            for f in CycleType::bipartite_types(2 * m) {
                if f.count(2) == 0 {
                    undirected_check(&segment_factors(&f, m), &f, m).unwrap();
                }
            }
        }
    }

    #[test]
    fn search_fallback_finds_six() {
        let pair = haggkvist_search(&t("[6]"), 3, 1_000_000).unwrap();
        undirected_check(&pair, &t("[6]"), 3).unwrap();
        let pair = haggkvist_search(&t("[4,4]"), 4, 1_000_000).unwrap();
        undirected_check(&pair, &t("[4,4]"), 4).unwrap();
    }

    #[test]
    fn every_type_up_to_m_10() {
        for m in 2..=10u32 {
            for f in CycleType::bipartite_types(2 * m) {
                let h = factorize_h_star(&f, m).unwrap_or_else(|e| panic!("{f}: {e}"));
                assert_eq!(h.factors.len(), if m == 2 { 2 } else { 4 });
            }
        }
    }
}
