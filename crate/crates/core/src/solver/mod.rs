//! Top-level dispatch: given `n ≡ 2 (mod 4)` and a bipartite type `F` of
//! order `n`, produce and verify `n - 1` factors of `K*_n`.
//!
//! - `[2^{n/2}]`: round robin.
//! - `n = 6`: sequential extraction search, which also proves `[6]` impossible.
//! - `n = 10`: `K*_10` is `W*_10`, so the folded J-decomposition is used, with
//!   search as a fallback.
//! - `n >= 14`: one `W*_n` from the folded J-decomposition and `(m-5)/2`
//!   copies of `H*_n`, each carrying four factors.

pub mod small;
pub mod wh;

use std::path::PathBuf;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::checker::{verify_factorization, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{CycleType, TwoRegularDigraph};
use crate::hosts::complete_symmetric;
use crate::hstar::factorize_h_star;
use crate::jmachine::recursion::w_star_factorization;
use crate::Outcome;

pub use small::{round_robin_two_cycles, small_order_search};
pub use wh::{wh_decompose, WHDecomposition};

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub seed: u64,
    /// Applies to the small-order search only.
    pub timeout: Option<Duration>,
    /// Cache file for small-order search results.
    pub cache: Option<PathBuf>,
}

/// Which construction produced a factorization.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    RoundRobin,
    SmallSearch,
    WStar,
    WStarPlusHStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: u32,
    pub ty: CycleType,
    pub factors: Vec<TwoRegularDigraph>,
    pub route: Route,
    pub report: VerificationReport,
}

/// Checks `n ≡ 2 (mod 4)`, even lengths and `Σ F = n`.
pub fn check_domain(n: u32, f: &CycleType) -> Result<()> {
    if n % 4 != 2 {
        return Err(Error::Domain(format!("n = {n} is not 2 mod 4")));
    }
    if let Some(&odd) = f.lengths().iter().find(|&&l| l % 2 != 0) {
        return Err(Error::OddLength(odd));
    }
    if f.order() != n {
        return Err(Error::OrderMismatch {
            ty: f.clone(),
            got: f.order(),
            expected: n,
        });
    }
    Ok(())
}

/// `K*_6` and `K*_10`.
pub fn small_order_solve(n: u32, f: &CycleType, opts: &SolveOptions) -> Result<Outcome<Vec<TwoRegularDigraph>>> {
    check_domain(n, f)?;
    if n != 6 && n != 10 {
        return Err(Error::Domain(format!("small orders are 6 and 10, got {n}")));
    }
    if n == 10 {
        if let Ok(fs) = w_star_factorization(f) {
            return Ok(Outcome::Found(fs));
        }
    }
    if let Some(path) = &opts.cache {
        if let Some(fs) = small::cached(path, n, f) {
            if verify_factorization(&complete_symmetric(n)?, &fs, f).passed {
                return Ok(Outcome::Found(fs));
            }
        }
    }
    let out = small_order_search(n, f, opts.seed, opts.timeout)?;
    if let (Outcome::Found(fs), Some(path)) = (&out, &opts.cache) {
        small::store(path, n, f, fs)?;
    }
    Ok(out)
}

/// A verified `F`-factorization of `K*_n`, or `Nonexistent`.
pub fn solve(n: u32, f: &CycleType, opts: &SolveOptions) -> Result<Outcome<Factorization>> {
    check_domain(n, f)?;
    let m = n / 2;
    let (factors, route) = if f.count(2) == m as usize {
        (round_robin_two_cycles(n)?, Route::RoundRobin)
    } else if n == 6 || n == 10 {
        let route = if n == 10 && w_star_factorization(f).is_ok() {
            Route::WStar
        } else {
            Route::SmallSearch
        };
        match small_order_solve(n, f, opts)? {
            Outcome::Found(fs) => (fs, route),
            Outcome::Nonexistent => return Ok(Outcome::Nonexistent),
        }
    } else {
        let wh = wh_decompose(m)?;
        let mut factors = w_star_factorization(f)?;
        let h = factorize_h_star(f, m)?;
        for i in 0..wh.h_embeddings.len() {
            for g in &h.factors {
                factors.push(wh.embed(i, g)?);
            }
        }
        (factors, Route::WStarPlusHStar)
    };
    let report = verify_factorization(&complete_symmetric(n)?, &factors, f);
    if !report.passed {
        return Err(Error::Verification(report.to_string()));
    }
    Ok(Outcome::Found(Factorization {
        n,
        ty: f.clone(),
        factors,
        route,
        report,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn run(n: u32, f: &str) -> Outcome<Factorization> {
        solve(n, &t(f), &SolveOptions::default()).unwrap()
    }

    #[test]
    fn six() {
        assert_eq!(run(6, "[6]"), Outcome::Nonexistent);
        let Outcome::Found(s) = run(6, "[2,4]") else { panic!() };
        assert_eq!(s.factors.len(), 5);
        assert_eq!(run(6, "[2^3]").found().unwrap().route, Route::RoundRobin);
    }

    #[test]
    fn fourteen_hamiltonian() {
        let s = run(14, "[14]").found().unwrap();
        assert_eq!(s.factors.len(), 13);
        assert_eq!(s.route, Route::WStarPlusHStar);
    }

    #[test]
    fn eighteen() {
        let s = run(18, "[2,4,4,8]").found().unwrap();
        assert_eq!(s.factors.len(), 17);
    }

    #[test]
    fn ten_goes_through_w_star() {
        let s = run(10, "[4,6]").found().unwrap();
        assert_eq!(s.route, Route::WStar);
        assert_eq!(s.factors.len(), 9);
    }

    #[test]
    fn domain_errors() {
        let o = SolveOptions::default();
        assert!(matches!(solve(12, &t("[12]"), &o), Err(Error::Domain(_))));
        assert!(matches!(solve(14, &t("[3,11]"), &o), Err(Error::OddLength(3))));
        assert!(matches!(solve(14, &t("[4,8]"), &o), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn deterministic() {
        let a = run(22, "[2,2,6,12]");
        let b = run(22, "[2,2,6,12]");
        assert_eq!(a, b);
    }
}
