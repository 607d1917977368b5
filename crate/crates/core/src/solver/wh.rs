//! Splitting `K*_2m` (m odd, m >= 7) into one `W*_2m` and `(m-5)/2` copies
//! of `H*_2m`.
//!
//! `W*_2m` keeps the rungs and the block differences ±1, ±2. The remaining
//! differences ±3, …, ±(m-1)/2 form a circulant on the blocks, which is split
//! into Hamiltonian cycles; blowing each cycle up gives a copy of `H*_2m`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{TwoRegularDigraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WHDecomposition {
    pub m: u32,
    /// Block sequences of the Hamiltonian cycles; `x_j` of `H*_2m` goes to
    /// `x_{b_j}` and likewise for `y`.
    pub h_embeddings: Vec<Vec<u32>>,
}

impl WHDecomposition {
    /// Relabel a factor of `H*_2m` through embedding `i`.
    pub fn embed(&self, i: usize, f: &TwoRegularDigraph) -> Result<TwoRegularDigraph> {
        let b = &self.h_embeddings[i];
        f.map_vertices(|v| Vertex {
            side: v.side,
            index: b[v.index as usize],
        })
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn step_cycle(m: u32, d: u32) -> Vec<u32> {
    (0..m).map(|j| (j * d) % m).collect()
}

/// Splits `Circ(m, {±d1, ±d2})` into two Hamiltonian cycles.
fn split_pair(m: u32, d1: u32, d2: u32, rng: &mut ChaCha8Rng, max_nodes: u64) -> Result<[Vec<u32>; 2]> {
    let n = m as usize;
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            [d1, d2, m - d1, m - d2]
                .iter()
                .map(|&d| (v + d as usize) % n)
                .collect()
        })
        .collect();
    let mut spent = 0u64;
    // restarts with a fresh random order keep one bad prefix from eating the budget
    let per_try = 10_000 * u64::from(m);
    while spent < max_nodes {
        let mut path = vec![0usize];
        let mut on = vec![false; n];
        on[0] = true;
        let mut nodes = 0;
        let found = ham_dfs(&nbrs, &mut path, &mut on, rng, &mut nodes, per_try)?;
        spent += nodes;
        if let Some(h) = found {
            return Ok(h);
        }
    }
    Err(Error::SearchExhausted)
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn complement_cycle(nbrs: &[Vec<usize>], path: &[usize]) -> Option<Vec<usize>> {
    let n = nbrs.len();
    let mut used = std::collections::BTreeSet::new();
    for i in 0..n {
        used.insert(edge_key(path[i], path[(i + 1) % n]));
    }
    let rest: Vec<Vec<usize>> = (0..n)
        .map(|v| nbrs[v].iter().copied().filter(|&w| !used.contains(&edge_key(v, w))).collect())
        .collect();
    let mut cyc = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    loop {
        let next = *rest[cur].iter().find(|&&w| w != prev)?;
        if next == 0 {
            break;
        }
        prev = cur;
        cur = next;
        cyc.push(cur);
        if cyc.len() > n {
            return None;
        }
    }
    (cyc.len() == n).then_some(cyc)
}

fn ham_dfs(
    nbrs: &[Vec<usize>],
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    rng: &mut ChaCha8Rng,
    nodes: &mut u64,
    max_nodes: u64,
) -> Result<Option<[Vec<u32>; 2]>> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Ok(None);
    }
    let n = nbrs.len();
    let last = *path.last().expect("non-empty");
    if path.len() == n {
        if nbrs[last].contains(&0) {
            if let Some(c) = complement_cycle(nbrs, path) {
                let a = path.iter().map(|&v| v as u32).collect();
                let b = c.into_iter().map(|v| v as u32).collect();
                return Ok(Some([a, b]));
            }
        }
        return Ok(None);
    }
    let mut next = nbrs[last].clone();
    next.shuffle(rng);
    for w in next {
        if on[w] {
            continue;
        }
        on[w] = true;
        path.push(w);
        if let Some(h) = ham_dfs(nbrs, path, on, rng, nodes, max_nodes)? {
            return Ok(Some(h));
        }
        path.pop();
        on[w] = false;
    }
    Ok(None)
}

/// Pairs every step not coprime to `m` with a partner so that each pair
/// generates `Z_m`; the remaining coprime steps stay single.
fn group_steps(m: u32) -> Option<Vec<Vec<u32>>> {
    let steps: Vec<u32> = (3..=(m - 1) / 2).collect();
    let mut single: Vec<u32> = steps.iter().copied().filter(|&d| gcd(d, m) == 1).collect();
    let mut bad: Vec<u32> = steps.iter().copied().filter(|&d| gcd(d, m) != 1).collect();
    let mut groups = Vec::new();
    while let Some(d) = bad.pop() {
        let ok = |e: u32| gcd(gcd(d, e), m) == 1;
        if let Some(i) = bad.iter().position(|&e| ok(e)) {
            groups.push(vec![d, bad.remove(i)]);
        } else {
            let i = single.iter().position(|&e| ok(e))?;
            groups.push(vec![d, single.remove(i)]);
        }
    }
    groups.extend(single.into_iter().map(|d| vec![d]));
    groups.sort();
    Some(groups)
}

/// The W/H split of `K*_2m`.
pub fn wh_decompose(m: u32) -> Result<WHDecomposition> {
    if m < 7 || m.is_multiple_of(2) {
        return Err(Error::Domain(format!("the W/H split needs odd m >= 7, got {m}")));
    }
    let groups = group_steps(m).ok_or(Error::SearchExhausted)?;
    let mut rng = ChaCha8Rng::seed_from_u64(u64::from(m));
    let mut h = Vec::new();
    for g in groups {
        match g[..] {
            [d] => h.push(step_cycle(m, d)),
            [d1, d2] => h.extend(split_pair(m, d1, d2, &mut rng, 50_000_000)?),
            _ => unreachable!("groups have one or two steps"),
        }
    }
    Ok(WHDecomposition { m, h_embeddings: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Every block difference outside ±1, ±2 used exactly once.
    fn check(d: &WHDecomposition) {
        let m = d.m;
        let mut seen = BTreeSet::new();
        for b in &d.h_embeddings {
            assert_eq!(b.iter().collect::<BTreeSet<_>>().len(), m as usize);
            for j in 0..m as usize {
                let (u, v) = (b[j], b[(j + 1) % m as usize]);
                let diff = (v + m - u) % m;
                assert!((3..=m - 3).contains(&diff), "difference {diff}");
                assert!(seen.insert((u.min(v), u.max(v))));
            }
        }
        let want = (m * (m - 1) / 2 - 2 * m) as usize;
        assert_eq!(seen.len(), want);
        // arc accounting over K*_2m
        let arcs = 18 * m + 8 * m * (m - 5) / 2;
        assert_eq!(arcs, 2 * m * (2 * m - 1));
    }

    #[test]
    fn seven_is_one_step_cycle() {
        let d = wh_decompose(7).unwrap();
        assert_eq!(d.h_embeddings, vec![vec![0, 3, 6, 2, 5, 1, 4]]);
        check(&d);
    }

    #[test]
    fn eleven_uses_steps_three_to_five() {
        let d = wh_decompose(11).unwrap();
        assert_eq!(d.h_embeddings.len(), 3);
        for (b, step) in d.h_embeddings.iter().zip([3, 4, 5]) {
            assert_eq!(b[1], step);
        }
        check(&d);
    }

    #[test]
    fn composite_orders_need_search() {
        for m in [9, 15, 21, 25] {
            let d = wh_decompose(m).unwrap();
            assert_eq!(d.h_embeddings.len(), ((m - 5) / 2) as usize);
            check(&d);
        }
    }

    #[test]
    fn rejects_even_and_small() {
        assert!(wh_decompose(8).is_err());
        assert!(wh_decompose(5).is_err());
    }
}
