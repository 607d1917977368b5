//! Exact-cover search for admissible decompositions with a prescribed
//! external pattern list. Used to produce bricks the tables lack.
//!
//! For each pattern the vertex set of an admissible factor is fixed, so every
//! slot gets the list of its 2-regular candidates of the wanted type; the
//! search then picks one candidate per slot with pairwise disjoint arc sets,
//! always branching on the slot with the fewest live candidates.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, TwoRegularDigraph, Vertex};
use crate::hosts::j_star_arcs;
use crate::Outcome;

use super::pattern::ExternalPattern;
use super::pieces::AdmissibleDecomposition;

/// Vertex set of an admissible factor of `J*_2m` with pattern `p`.
pub fn admissible_vertex_set(p: &ExternalPattern, m: u32) -> Vec<Vertex> {
    let mut vs = Vec::new();
    for side in [Vertex::x as fn(u32) -> Vertex, Vertex::y] {
        for j in 0..2 {
            vs.push(if p.contains(side(j)) { side(j) } else { side(m + j) });
        }
    }
    for i in 2..m {
        vs.push(Vertex::x(i));
        vs.push(Vertex::y(i));
    }
    vs.sort();
    vs
}

type Bits = Vec<u64>;

fn disjoint(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// All 2-regular digraphs of type `ty` on `vs` using arcs of `host`.
fn candidates(vs: &[Vertex], host: &BTreeMap<Arc, usize>, ty: &CycleType, limit: usize) -> Result<Vec<Vec<Arc>>> {
    let n = vs.len();
    let out: Vec<Vec<usize>> = vs
        .iter()
        .map(|&u| (0..n).filter(|&j| host.contains_key(&Arc::new(u, vs[j]))).collect())
        .collect();
    let lengths: Vec<usize> = ty.lengths().iter().map(|&l| l as usize).collect();
    let mut succ = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    let mut res = Vec::new();

    fn closes(succ: &[usize], v: usize) -> Option<usize> {
        let mut len = 1;
        let mut u = succ[v];
        while u != v {
            if succ[u] == usize::MAX {
                return None;
            }
            u = succ[u];
            len += 1;
        }
        Some(len)
    }

    fn cycle_lengths(succ: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; succ.len()];
        let mut out = Vec::new();
        for v in 0..succ.len() {
            if seen[v] {
                continue;
            }
            let mut len = 0;
            let mut u = v;
            while !seen[u] {
                seen[u] = true;
                u = succ[u];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        vs: &[Vertex],
        out: &[Vec<usize>],
        lengths: &[usize],
        succ: &mut Vec<usize>,
        taken: &mut Vec<bool>,
        res: &mut Vec<Vec<Arc>>,
        limit: usize,
    ) -> Result<()> {
        if k == vs.len() {
            if cycle_lengths(succ) == lengths {
                res.push((0..vs.len()).map(|v| Arc::new(vs[v], vs[succ[v]])).collect());
                if res.len() > limit {
                    return Err(Error::BudgetExceeded);
                }
            }
            return Ok(());
        }
        for &w in &out[k] {
            if taken[w] {
                continue;
            }
            succ[k] = w;
            taken[w] = true;
            let ok = closes(succ, k).is_none_or(|l| lengths.contains(&l));
            if ok {
                rec(k + 1, vs, out, lengths, succ, taken, res, limit)?;
            }
            succ[k] = usize::MAX;
            taken[w] = false;
        }
        Ok(())
    }

    rec(0, vs, &out, &lengths, &mut succ, &mut taken, &mut res, limit)?;
    Ok(res)
}

/// Limits for [`search_admissible`].
#[derive(Copy, Clone, Debug)]
pub struct SearchBudget {
    /// Candidates per slot before giving up.
    pub max_candidates: usize,
    /// Exact-cover nodes before giving up.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: 200_000,
            max_nodes: 5_000_000,
        }
    }
}

struct Cover {
    cands: Vec<Vec<Bits>>,
    used: Bits,
    pick: Vec<Option<usize>>,
    rng: ChaCha8Rng,
    nodes: u64,
    budget: u64,
}

impl Cover {
    fn go(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded);
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for slot in 0..self.cands.len() {
            if self.pick[slot].is_some() {
                continue;
            }
            let live: Vec<usize> = (0..self.cands[slot].len())
                .filter(|&c| disjoint(&self.cands[slot][c], &self.used))
                .collect();
            if live.is_empty() {
                return Ok(false);
            }
            if best.as_ref().is_none_or(|(_, b)| live.len() < b.len()) {
                best = Some((slot, live));
            }
        }
        let Some((slot, mut live)) = best else { return Ok(true) };
        live.shuffle(&mut self.rng);
        for c in live {
            for (u, b) in self.used.iter_mut().zip(&self.cands[slot][c]) {
                *u |= b;
            }
            self.pick[slot] = Some(c);
            if self.go()? {
                return Ok(true);
            }
            self.pick[slot] = None;
            for (u, b) in self.used.iter_mut().zip(&self.cands[slot][c]) {
                *u &= !b;
            }
        }
        Ok(false)
    }
}

/// An admissible `ty`-decomposition of `J*_2m` whose factors have the given
/// external patterns, or `Nonexistent` once the search space is exhausted.
pub fn search_admissible(
    ty: &CycleType,
    patterns: &[ExternalPattern],
    seed: u64,
    budget: SearchBudget,
) -> Result<Outcome<AdmissibleDecomposition>> {
    if !ty.order().is_multiple_of(2) {
        return Err(Error::Domain(format!("{ty} has odd order")));
    }
    let m = ty.order() / 2;
    if m < 3 {
        return Err(Error::Domain(format!("{ty} is too small for J*")));
    }
    let host: BTreeMap<Arc, usize> = j_star_arcs(m).into_iter().enumerate().map(|(i, a)| (a, i)).collect();
    let words = host.len().div_ceil(64);
    let mut cands = Vec::with_capacity(patterns.len());
    let mut raw = Vec::with_capacity(patterns.len());
    for p in patterns {
        let list = candidates(&admissible_vertex_set(p, m), &host, ty, budget.max_candidates)?;
        cands.push(
            list.iter()
                .map(|arcs| {
                    let mut b = vec![0u64; words];
                    for a in arcs {
                        let i = host[a];
                        b[i / 64] |= 1 << (i % 64);
                    }
                    b
                })
                .collect(),
        );
        raw.push(list);
    }
    let mut cover = Cover {
        cands,
        used: vec![0; words],
        pick: vec![None; patterns.len()],
        rng: ChaCha8Rng::seed_from_u64(seed),
        nodes: 0,
        budget: budget.max_nodes,
    };
    if !cover.go()? {
        return Ok(Outcome::Nonexistent);
    }
    let factors = cover
        .pick
        .iter()
        .enumerate()
        .map(|(slot, c)| TwoRegularDigraph::from_arcs(raw[slot][c.expect("complete")].iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::Found(AdmissibleDecomposition::new(m, factors)))
}
