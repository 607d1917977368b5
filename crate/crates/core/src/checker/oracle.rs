//! Exhaustive search for tiny hosts, used as an oracle for existence claims.
//!
//! Factors are filled in like the rows of a Latin square: every vertex hands
//! each of its out-arcs to a different factor, and no factor may receive two
//! arcs into the same vertex. The row of the least vertex is fixed, which
//! removes the factor-permutation symmetry.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, Digraph, TwoRegularDigraph, Vertex};
use crate::Outcome;

#[derive(Copy, Clone, Debug)]
pub struct OracleBudget {
    /// Largest host order accepted.
    pub max_vertices: usize,
    /// Search nodes visited before giving up.
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 10,
            max_nodes: 50_000_000,
        }
    }
}

const NONE: usize = usize::MAX;

struct Search {
    n: usize,
    d: usize,
    out: Vec<Vec<usize>>,
    // per factor successor / predecessor tables
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    // per factor, how many cycles of each length are still to be closed
    remaining: Vec<BTreeMap<usize, usize>>,
    // whether out-arc k of vertex v is already handed out
    used: Vec<Vec<bool>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn max_remaining(&self, f: usize) -> usize {
        self.remaining[f]
            .iter()
            .rev()
            .find(|(_, &c)| c > 0)
            .map_or(0, |(&l, _)| l)
    }

    /// After setting `u -> w` in factor `f`: `Some(len)` if a cycle closed,
    /// otherwise `None` together with the vertex count of the open path.
    fn segment(&self, f: usize, u: usize, w: usize) -> (Option<usize>, usize) {
        let mut len = 1;
        let mut v = w;
        while v != u {
            let s = self.succ[f][v];
            if s == NONE {
                break;
            }
            len += 1;
            v = s;
        }
        if v == u {
            return (Some(len), len);
        }
        let mut back = 0;
        let mut v = u;
        while self.pred[f][v] != NONE {
            back += 1;
            v = self.pred[f][v];
        }
        (None, len + 1 + back)
    }

    fn go(&mut self, cell: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded);
        }
        if cell == self.n * self.d {
            return Ok(true);
        }
        let (u, f) = (cell / self.d, cell % self.d);
        let fixed = u == 0;
        for k in 0..self.out[u].len() {
            if self.used[u][k] || (fixed && k != f) {
                continue;
            }
            let w = self.out[u][k];
            if self.pred[f][w] != NONE {
                continue;
            }
            let (closed, open_len) = self.segment(f, u, w);
            match closed {
                Some(len) => {
                    let Some(c) = self.remaining[f].get_mut(&len) else { continue };
                    if *c == 0 {
                        continue;
                    }
                    *c -= 1;
                }
                None => {
                    if open_len > self.max_remaining(f) {
                        continue;
                    }
                }
            }
            self.succ[f][u] = w;
            self.pred[f][w] = u;
            self.used[u][k] = true;
            if self.go(cell + 1)? {
                return Ok(true);
            }
            self.succ[f][u] = NONE;
            self.pred[f][w] = NONE;
            self.used[u][k] = false;
            if let Some(len) = closed {
                *self.remaining[f].get_mut(&len).expect("present") += 1;
            }
        }
        Ok(false)
    }
}

/// Finds an `F`-factorization of `host` or proves there is none.
pub fn brute_force_factorization(
    host: &Digraph,
    ty: &CycleType,
    budget: OracleBudget,
) -> Result<Outcome<Vec<TwoRegularDigraph>>> {
    let vs: Vec<Vertex> = host.vertices().iter().copied().collect();
    let n = vs.len();
    if n > budget.max_vertices {
        return Err(Error::Domain(format!(
            "oracle is capped at {} vertices, host has {n}",
            budget.max_vertices
        )));
    }
    if ty.order() as usize != n || n == 0 {
        return Ok(Outcome::Nonexistent);
    }
    let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut out = vec![Vec::new(); n];
    let mut indeg = vec![0; n];
    for a in host.arcs() {
        out[index[&a.tail]].push(index[&a.head]);
        indeg[index[&a.head]] += 1;
    }
    let d = out[0].len();
    if out.iter().any(|o| o.len() != d) || indeg.iter().any(|&k| k != d) || d == 0 {
        return Ok(Outcome::Nonexistent);
    }
    let mut want = BTreeMap::new();
    for &l in ty.lengths() {
        *want.entry(l as usize).or_insert(0) += 1;
    }
    let mut s = Search {
        n,
        d,
        out,
        succ: vec![vec![NONE; n]; d],
        pred: vec![vec![NONE; n]; d],
        remaining: vec![want; d],
        used: vec![vec![false; d]; n],
        nodes: 0,
        budget: budget.max_nodes,
    };
    if !s.go(0)? {
        return Ok(Outcome::Nonexistent);
    }
    let mut factors = Vec::with_capacity(d);
    for f in 0..d {
        let arcs = (0..n).map(|u| Arc::new(vs[u], vs[s.succ[f][u]]));
        factors.push(TwoRegularDigraph::from_arcs(arcs)?);
    }
    Ok(Outcome::Found(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify_factorization;
    use crate::hosts::complete_symmetric;

    fn run(n: u32, ty: &str) -> Outcome<Vec<TwoRegularDigraph>> {
        let host = complete_symmetric(n).unwrap();
        let ty: CycleType = ty.parse().unwrap();
        let out = brute_force_factorization(&host, &ty, OracleBudget::default()).unwrap();
        if let Outcome::Found(fs) = &out {
            let r = verify_factorization(&host, fs, &ty);
            assert!(r.passed, "{r}");
        }
        out
    }

    #[test]
    fn k2() {
        assert!(matches!(run(2, "[2]"), Outcome::Found(f) if f.len() == 1));
    }

    #[test]
    fn k6_types() {
        assert!(matches!(run(6, "[2,2,2]"), Outcome::Found(f) if f.len() == 5));
        assert!(matches!(run(6, "[2,4]"), Outcome::Found(f) if f.len() == 5));
        assert!(matches!(run(6, "[6]"), Outcome::Nonexistent));
    }

    #[test]
    fn budget_is_distinct_from_nonexistence() {
        let host = complete_symmetric(6).unwrap();
        let tiny = OracleBudget {
            max_vertices: 10,
            max_nodes: 10,
        };
        assert!(matches!(
            brute_force_factorization(&host, &"[6]".parse().unwrap(), tiny),
            Err(Error::BudgetExceeded)
        ));
    }
}
