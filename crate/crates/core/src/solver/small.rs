//! The uniform `[2^{n/2}]` case and the small orders 6 and 10.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, DirectedCycle, TwoRegularDigraph};
use crate::hosts::complete_symmetric_vertices;
use crate::Outcome;

/// Circle-method 1-factorization of `K_n` with every edge doubled into a
/// directed 2-cycle: `n - 1` factors of type `[2^{n/2}]`.
pub fn round_robin_two_cycles(n: u32) -> Result<Vec<TwoRegularDigraph>> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!("round robin needs even n >= 2, got {n}")));
    }
    let vs = complete_symmetric_vertices(n);
    let r = n - 1;
    (0..r)
        .map(|round| {
            let mut cycles = vec![DirectedCycle::new(vec![
                vs[(n - 1) as usize],
                vs[round as usize],
            ])?];
            for i in 1..n / 2 {
                let a = (round + i) % r;
                let b = (round + r - i) % r;
                cycles.push(DirectedCycle::new(vec![vs[a as usize], vs[b as usize]])?);
            }
            TwoRegularDigraph::new(cycles)
        })
        .collect()
}

struct Extract {
    n: usize,
    avail: Vec<Vec<bool>>,
    want: BTreeMap<usize, usize>,
    max_len: usize,
    rng: ChaCha8Rng,
    nodes: u64,
    cap: u64,
    started: Instant,
    deadline: Option<Duration>,
    factors: Vec<Vec<usize>>,
}

enum Stop {
    Cap,
    Time,
}

impl Extract {
    fn tick(&mut self) -> std::result::Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Stop::Cap);
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if self.started.elapsed() > d {
                    return Err(Stop::Time);
                }
            }
        }
        Ok(())
    }

    /// Extracts factors until none are left to find; `Ok(true)` on success.
    fn level(&mut self) -> std::result::Result<bool, Stop> {
        if self.factors.len() == self.n - 1 {
            return Ok(true);
        }
        let mut succ = vec![usize::MAX; self.n];
        let mut pred = vec![usize::MAX; self.n];
        let mut remaining = self.want.clone();
        self.vertex(0, &mut succ, &mut pred, &mut remaining)
    }

    fn vertex(
        &mut self,
        u: usize,
        succ: &mut Vec<usize>,
        pred: &mut Vec<usize>,
        remaining: &mut BTreeMap<usize, usize>,
    ) -> std::result::Result<bool, Stop> {
        self.tick()?;
        if u == self.n {
            for (a, &b) in succ.iter().enumerate() {
                self.avail[a][b] = false;
            }
            self.factors.push(succ.clone());
            if self.level()? {
                return Ok(true);
            }
            let f = self.factors.pop().expect("pushed above");
            for (a, &b) in f.iter().enumerate() {
                self.avail[a][b] = true;
            }
            return Ok(false);
        }
        let mut cands: Vec<usize> = (0..self.n).filter(|&w| self.avail[u][w] && pred[w] == usize::MAX).collect();
        if u == 0 {
            // factors are unordered: the next factor takes the least free arc out of vertex 0
            cands.truncate(1);
        } else {
            cands.shuffle(&mut self.rng);
        }
        for w in cands {
            let mut len = 1;
            let mut v = w;
            while v != u && succ[v] != usize::MAX {
                v = succ[v];
                len += 1;
            }
            let closed = v == u;
            if closed {
                match remaining.get_mut(&len) {
                    Some(c) if *c > 0 => *c -= 1,
                    _ => continue,
                }
            } else {
                let mut back = 0;
                let mut p = u;
                while pred[p] != usize::MAX {
                    p = pred[p];
                    back += 1;
                }
                if len + 1 + back > self.max_len {
                    continue;
                }
            }
            succ[u] = w;
            pred[w] = u;
            if self.vertex(u + 1, succ, pred, remaining)? {
                return Ok(true);
            }
            succ[u] = usize::MAX;
            pred[w] = usize::MAX;
            if closed {
                *remaining.get_mut(&len).expect("present") += 1;
            }
        }
        Ok(false)
    }
}

/// Sequential extraction search over `K*_n`: pull one `f`-factor at a time
/// out of the remaining arcs, backtracking when stuck. Restarts with a fresh
/// random order and a doubled node cap; `Nonexistent` only when one pass
/// finishes under its cap.
pub fn small_order_search(
    n: u32,
    f: &CycleType,
    seed: u64,
    timeout: Option<Duration>,
) -> Result<Outcome<Vec<TwoRegularDigraph>>> {
    if f.order() != n {
        return Err(Error::OrderMismatch {
            ty: f.clone(),
            got: f.order(),
            expected: n,
        });
    }
    let vs = complete_symmetric_vertices(n);
    let size = n as usize;
    let mut want = BTreeMap::new();
    for &l in f.lengths() {
        *want.entry(l as usize).or_insert(0) += 1;
    }
    let started = Instant::now();
    let mut cap = 1_000_000u64;
    for attempt in 0u64.. {
        let mut ex = Extract {
            n: size,
            avail: (0..size).map(|u| (0..size).map(|v| u != v).collect()).collect(),
            want: want.clone(),
            max_len: f.lengths().last().copied().unwrap_or(0) as usize,
            rng: ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt)),
            nodes: 0,
            cap,
            started,
            deadline: timeout,
            factors: Vec::new(),
        };
        match ex.level() {
            Ok(true) => {
                let factors = ex
                    .factors
                    .iter()
                    .map(|s| TwoRegularDigraph::from_arcs(s.iter().enumerate().map(|(a, &b)| Arc::new(vs[a], vs[b]))))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(Outcome::Found(factors));
            }
            Ok(false) => return Ok(Outcome::Nonexistent),
            Err(Stop::Time) => {
                return Err(Error::Timeout(timeout.map_or(0, |d| d.as_millis() as u64)));
            }
            Err(Stop::Cap) => cap = cap.saturating_mul(2),
        }
    }
    unreachable!("the attempt loop only exits by returning")
}

fn cache_key(n: u32, f: &CycleType) -> String {
    format!("{n} {f}")
}

type Cache = BTreeMap<String, Vec<TwoRegularDigraph>>;

fn read_cache(path: &Path) -> Cache {
    std::fs::read_to_string(path)
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok())
        .unwrap_or_default()
}

pub fn cached(path: &Path, n: u32, f: &CycleType) -> Option<Vec<TwoRegularDigraph>> {
    read_cache(path).remove(&cache_key(n, f))
}

pub fn store(path: &Path, n: u32, f: &CycleType, factors: &[TwoRegularDigraph]) -> Result<()> {
    let mut cache = read_cache(path);
    cache.insert(cache_key(n, f), factors.to_vec());
    let text = serde_json::to_string(&cache).map_err(|e| Error::Io(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify_factorization;
    use crate::hosts::complete_symmetric;

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn round_robin_small() {
        let f = round_robin_two_cycles(2).unwrap();
        assert_eq!(f, vec!["{(x0,y0)}".parse().unwrap()]);
        for n in [6, 10, 14] {
            let f = round_robin_two_cycles(n).unwrap();
            let want = CycleType::new(vec![2; n as usize / 2]).unwrap();
            assert!(verify_factorization(&complete_symmetric(n).unwrap(), &f, &want).passed);
        }
    }

    #[test]
    fn order_six() {
        assert_eq!(small_order_search(6, &t("[6]"), 0, None).unwrap(), Outcome::Nonexistent);
        for ty in ["[2,4]", "[2^3]"] {
            let Outcome::Found(f) = small_order_search(6, &t(ty), 0, None).unwrap() else {
                panic!("{ty} not found");
            };
            assert!(verify_factorization(&complete_symmetric(6).unwrap(), &f, &t(ty)).passed);
        }
    }

    #[test]
    fn order_ten_by_search() {
        let ty = t("[4,6]");
        let out = small_order_search(10, &ty, 0, Some(Duration::from_secs(120))).unwrap();
        let Outcome::Found(f) = out else { panic!("not found") };
        let r = verify_factorization(&complete_symmetric(10).unwrap(), &f, &ty);
        assert!(r.passed, "{r}");
    }

    #[test]
    fn search_is_deterministic() {
        let a = small_order_search(6, &t("[2,4]"), 7, None).unwrap();
        let b = small_order_search(6, &t("[2,4]"), 7, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let f = round_robin_two_cycles(6).unwrap();
        assert!(cached(&path, 6, &t("[2^3]")).is_none());
        store(&path, 6, &t("[2^3]"), &f).unwrap();
        assert_eq!(cached(&path, 6, &t("[2^3]")).unwrap(), f);
    }
}
