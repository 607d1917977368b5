//! Admissible `F`-decompositions of `J*_2m` for every bipartite `F ≠ [2^m]`,
//! and their folds onto `W*_2m`.
//!
//! A plan is a list of brick types spliced left to right. Bricks come from
//! the small table, the four long-cycle families, or the supplementary table.

use crate::checker::verify_arc_factorization;
use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, TwoRegularDigraph};
use crate::hosts::{complete_symmetric_vertices, w_star_arc_list, Fold};

use super::assemble::{general_factor, small_factor, splice_all};
use super::pieces::AdmissibleDecomposition;
use super::tables::{self, Family};

fn ty(lengths: &[u32]) -> CycleType {
    CycleType::new(lengths.to_vec()).expect("lengths are at least 2")
}

/// The brick of type `t`, from whichever table holds it.
pub fn brick(t: &CycleType) -> Result<AdmissibleDecomposition> {
    if Family::classify(t).is_some() {
        return general_factor(t);
    }
    if let Ok(d) = small_factor(t) {
        return Ok(d);
    }
    tables::supplementary_decompositions()?
        .into_iter()
        .find(|(s, _)| s == t)
        .map(|(_, d)| d)
        .ok_or_else(|| Error::Unsupported(t.clone()))
}

fn check_input(f: &CycleType) -> Result<u32> {
    if let Some(&odd) = f.lengths().iter().find(|&&l| l % 2 != 0) {
        return Err(Error::OddLength(odd));
    }
    let m = f.order() / 2;
    if m < 4 {
        return Err(Error::Domain(format!("{f} has order {}, need at least 8", f.order())));
    }
    if f.lengths().iter().all(|&l| l == 2) {
        return Err(Error::Domain(format!("{f} is uniform in 2-cycles")));
    }
    Ok(m)
}

/// One single-cycle brick per length; every length is at least 6.
fn singles(rest: &[u32], plan: &mut Vec<CycleType>) {
    plan.extend(rest.iter().map(|&l| ty(&[l])));
}

/// Plan for a type whose shortest cycle has length at least 4.
fn plan_no_twos(lengths: &[u32], plan: &mut Vec<CycleType>) -> Result<()> {
    let Some(&m1) = lengths.first() else { return Ok(()) };
    if m1 >= 6 {
        singles(lengths, plan);
        return Ok(());
    }
    let a1 = lengths.iter().take_while(|&&l| l == 4).count();
    let rest = &lengths[a1..];
    if a1 >= 2 {
        let (beta, gamma) = if a1 % 2 == 0 { (a1 / 2, 0) } else { ((a1 - 3) / 2, 1) };
        plan.extend(std::iter::repeat_n(ty(&[4, 4]), beta));
        plan.extend(std::iter::repeat_n(ty(&[4, 4, 4]), gamma));
        singles(rest, plan);
        return Ok(());
    }
    let Some((&m2, rest)) = rest.split_first() else {
        return Err(Error::Unsupported(ty(lengths)));
    };
    plan.push(ty(&[4, m2]));
    singles(rest, plan);
    Ok(())
}

/// The brick types for `f`, in splice order.
pub fn plan(f: &CycleType) -> Result<Vec<CycleType>> {
    check_input(f)?;
    let l = f.lengths();
    let a1 = f.count(2);
    let rest = &l[a1..];
    let triples = |n: usize| std::iter::repeat_n(ty(&[2, 2, 2]), n);
    let mut plan = Vec::new();
    if a1 == 0 {
        plan_no_twos(l, &mut plan)?;
        return Ok(plan);
    }
    match a1 % 3 {
        0 => {
            if rest == [4] {
                // no brick for a lone 4-cycle: fold it into the last triple
                plan.extend(triples(a1 / 3 - 1));
                plan.push(ty(&[2, 2, 2, 4]));
            } else {
                plan.extend(triples(a1 / 3));
                plan_no_twos(rest, &mut plan)?;
            }
        }
        1 => {
            let (&m2, after) = rest.split_first().expect("not uniform");
            if after == [4] {
                if a1 == 1 {
                    plan.push(ty(&[2, 4, 4]));
                } else {
                    plan.push(ty(&[2, 4]));
                    plan.push(ty(&[2, 2, 2, 4]));
                    plan.extend(triples((a1 - 4) / 3));
                }
            } else {
                plan.push(ty(&[2, m2]));
                plan.extend(triples((a1 - 1) / 3));
                plan_no_twos(after, &mut plan)?;
            }
        }
        _ => {
            let (&m2, after) = rest.split_first().expect("not uniform");
            if after == [4] {
                plan.push(ty(&[2, 2, 4, 4]));
                plan.extend(triples((a1 - 2) / 3));
            } else {
                plan.push(ty(&[2, 2, m2]));
                plan.extend(triples((a1 - 2) / 3));
                plan_no_twos(after, &mut plan)?;
            }
        }
    }
    Ok(plan)
}

/// An admissible `F`-decomposition of `J*_2m` with the shared pattern.
pub fn j_decompose(f: &CycleType) -> Result<AdmissibleDecomposition> {
    let parts = plan(f)?
        .iter()
        .map(brick)
        .collect::<Result<Vec<_>>>()?;
    let d = splice_all(&parts)?;
    if let Some(i) = d.factors.iter().position(|g| g.cycle_type() != *f) {
        return Err(Error::Verification(format!(
            "factor {} has type {}, expected {f}",
            i + 1,
            d.factors[i].cycle_type()
        )));
    }
    Ok(d)
}

/// Nine `F`-factors of `W*_2m`: the fold of [`j_decompose`], checked against
/// the arc multiset of `W*_2m`.
pub fn w_star_factorization(f: &CycleType) -> Result<Vec<TwoRegularDigraph>> {
    let d = j_decompose(f)?;
    let factors = d
        .factors
        .iter()
        .map(|g| g.fold(d.m))
        .collect::<Result<Vec<_>>>()?;
    let vertices = complete_symmetric_vertices(2 * d.m).into_iter().collect();
    let raw: Vec<Vec<Arc>> = factors.iter().map(TwoRegularDigraph::arcs).collect();
    verify_arc_factorization(&vertices, &w_star_arc_list(d.m)?, &raw, f).into_result()?;
    Ok(factors)
}


#[cfg(test)]
mod sweep {
    use super::*;
    use crate::checker::verify_admissible_decomposition;
    use crate::jmachine::pattern_x;

    #[test]
    fn every_type_up_to_m_13() {
        for m in 4..=13u32 {
            for f in CycleType::bipartite_types(2 * m) {
                if f.count(2) == m as usize {
                    continue;
                }
                let d = j_decompose(&f).unwrap_or_else(|e| panic!("{f}: {e}"));
                let r = verify_admissible_decomposition(m, &d, Some(&pattern_x()));
                assert!(r.passed, "{f}\n{r}");
                w_star_factorization(&f).unwrap_or_else(|e| panic!("{f}: {e}"));
            }
        }
    }
}
