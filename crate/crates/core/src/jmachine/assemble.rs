//! Splicing admissible decompositions and assembling caps into bricks.

use crate::error::{Error, Result};
use crate::graph::{concat, shift, CycleType, DirectedPath, TwoRegularDigraph};

use super::pattern::is_admissible;
use super::pieces::{AdmissibleDecomposition, CentrePiece, LeftCap, RightCap};
use super::tables::{self, Family};

fn check_admissible(factors: &[TwoRegularDigraph], m: u32) -> Result<()> {
    match factors.iter().position(|f| !is_admissible(f, m)) {
        Some(i) => Err(Error::Verification(format!(
            "factor {} is not admissible in J*_{}",
            i + 1,
            2 * m
        ))),
        None => Ok(()),
    }
}

/// `F_j ⊕ σ^{m_a}(F'_j)` for every j. The two pattern lists must agree.
pub fn splice(a: &AdmissibleDecomposition, b: &AdmissibleDecomposition) -> Result<AdmissibleDecomposition> {
    if a.factors.len() != b.factors.len() {
        return Err(Error::Incompatible(a.factors.len().min(b.factors.len())));
    }
    if let Some(i) = a.patterns().iter().zip(b.patterns()).position(|(p, q)| *p != q) {
        return Err(Error::Incompatible(i + 1));
    }
    let m = a.m + b.m;
    let factors = a
        .factors
        .iter()
        .zip(&b.factors)
        .map(|(f, g)| f.union(&shift(g, i64::from(a.m))?))
        .collect::<Result<Vec<_>>>()?;
    check_admissible(&factors, m)?;
    Ok(AdmissibleDecomposition::new(m, factors))
}

/// Left fold of [`splice`] over `parts`.
pub fn splice_all(parts: &[AdmissibleDecomposition]) -> Result<AdmissibleDecomposition> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::Domain("nothing to splice".into()))?;
    rest.iter().try_fold(first.clone(), |acc, d| splice(&acc, d))
}

fn join(p: &DirectedPath, q: &DirectedPath) -> Result<DirectedPath> {
    concat(p, q)?.into_path()
}

/// `k` shifted copies of a length-4 centre piece laid end to end:
/// `Q' = Q^0 + … + Q^{k-1}` and `U' = U^{k-1} + … + U^0`.
pub fn concat_centre(c: &CentrePiece, k: u32) -> Result<CentrePiece> {
    if c.c != tables::CENTRE_LEN {
        return Err(Error::Domain(format!("centre piece has length {}, expected 4", c.c)));
    }
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let pairs = c
        .pairs
        .iter()
        .map(|(q, u)| {
            let mut q_all = q.clone();
            let mut u_all = u.clone();
            for j in 1..k {
                let by = i64::from(c.c * j);
                q_all = join(&q_all, &shift(q, by)?)?;
                u_all = join(&shift(u, by)?, &u_all)?;
            }
            Ok((q_all, u_all))
        })
        .collect::<Result<Vec<_>>>()?;
    let out = CentrePiece { c: c.c * k, pairs };
    crate::checker::verify_centre_piece(&out).into_result()?;
    Ok(out)
}

/// `D_i = L_i + σ^ℓ(Q'_i) + σ^{ℓ+4k}(P_i) + σ^ℓ(U'_i)` together with the
/// cycles of `R_i` shifted by `ℓ+4k`. With `k = 0` the centre is skipped.
pub fn assemble(
    left: &LeftCap,
    centre: Option<&CentrePiece>,
    k: u32,
    right: &RightCap,
) -> Result<AdmissibleDecomposition> {
    if left.paths.len() != right.elements.len() {
        return Err(Error::Incompatible(left.paths.len().min(right.elements.len())));
    }
    if let Some(i) = (0..left.paths.len()).find(|&i| left.internal_pattern(i) != right.internal_pattern(i)) {
        return Err(Error::Incompatible(i + 1));
    }
    if left.external_patterns() != right.external_patterns() {
        return Err(Error::Verification("left and right caps have different external patterns".into()));
    }
    let long = match (k, centre) {
        (0, _) => None,
        (_, Some(c)) => Some(concat_centre(c, k)?),
        (_, None) => return Err(Error::Domain(format!("k = {k} needs a centre piece"))),
    };
    let ell = i64::from(left.ell);
    let far = ell + 4 * i64::from(k);
    let m = left.ell + 4 * k + right.r;
    let factors = left
        .paths
        .iter()
        .zip(&right.elements)
        .enumerate()
        .map(|(i, (l, r))| {
            let p = shift(&r.path, far)?;
            let cycle = match &long {
                None => concat(l, &p)?.into_cycle()?,
                Some(c) => {
                    let (q, u) = &c.pairs[i];
                    let w = join(l, &shift(q, ell)?)?;
                    let w = join(&w, &p)?;
                    concat(&w, &shift(u, ell)?)?.into_cycle()?
                }
            };
            let mut cycles = vec![cycle];
            for c in &r.cycles {
                cycles.push(shift(c, far)?);
            }
            TwoRegularDigraph::new(cycles)
        })
        .collect::<Result<Vec<_>>>()?;
    check_admissible(&factors, m)?;
    Ok(AdmissibleDecomposition::new(m, factors))
}

/// The brick for one of the four long-cycle families, built from the shared
/// left cap, `k` centre blocks and the matching right cap.
pub fn general_factor(ty: &CycleType) -> Result<AdmissibleDecomposition> {
    let (family, s) = Family::classify(ty).ok_or_else(|| Error::Unsupported(ty.clone()))?;
    let s0 = family
        .base_values()
        .find(|s0| s0 % 4 == s % 4)
        .expect("four consecutive base values");
    let k = (s - s0) / 4;
    let left = tables::left_cap()?;
    let centre = tables::centre_piece()?;
    let right = tables::right_cap(family, s0)?;
    assemble(&left, Some(&centre), k, &right)
}

/// One of the twelve tabulated small bricks.
pub fn small_factor(ty: &CycleType) -> Result<AdmissibleDecomposition> {
    tables::small_decompositions()?
        .into_iter()
        .find(|(t, _)| t == ty)
        .map(|(_, d)| d)
        .ok_or_else(|| Error::Unsupported(ty.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify_admissible_decomposition;
    use crate::graph::{cycle_type_of, DirectedCycle};
    use crate::jmachine::pattern_x;

    fn ty(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn assert_brick(d: &AdmissibleDecomposition, want: &CycleType) {
        let r = verify_admissible_decomposition(want.order() / 2, d, Some(&pattern_x()));
        assert!(r.passed, "{want}\n{r}");
        for f in &d.factors {
            assert_eq!(&cycle_type_of(f), want);
        }
    }

    #[test]
    fn splice_two_six_with_six() {
        let d = splice(&small_factor(&ty("[2,6]")).unwrap(), &small_factor(&ty("[6]")).unwrap()).unwrap();
        assert_eq!(d.m, 7);
        assert_brick(&d, &ty("[2,6,6]"));
    }

    #[test]
    fn splice_two_cubed_with_itself() {
        let b = small_factor(&ty("[2^3]")).unwrap();
        let d = splice(&b, &b).unwrap();
        assert_brick(&d, &ty("[2^6]"));
    }

    #[test]
    fn splice_rejects_mismatched_patterns() {
        let b = small_factor(&ty("[6]")).unwrap();
        let mut c = b.clone();
        c.factors.swap(0, 1);
        assert!(matches!(splice(&b, &c), Err(Error::Incompatible(1))));
    }

    #[test]
    fn concat_centre_lengths() {
        let c = tables::centre_piece().unwrap();
        assert_eq!(concat_centre(&c, 1).unwrap(), c);
        let c2 = concat_centre(&c, 2).unwrap();
        for (q, u) in &c2.pairs {
            assert_eq!(q.len() + u.len(), 16);
        }
        let c3 = concat_centre(&c, 3).unwrap();
        assert!(crate::checker::verify_centre_piece(&c3).passed);
        assert_eq!(c3.internal_patterns(), c.internal_patterns());
    }

    #[test]
    fn assemble_long_base() {
        let d = assemble(
            &tables::left_cap().unwrap(),
            None,
            0,
            &tables::right_cap(Family::Long, 4).unwrap(),
        )
        .unwrap();
        assert_eq!(d.m, 4);
        assert_brick(&d, &ty("[8]"));
    }

    #[test]
    fn general_factor_every_family_row() {
        for f in Family::ALL {
            for s in f.min_s()..f.min_s() + 12 {
                let mut lens = f.extra().to_vec();
                lens.push(2 * s);
                let want = CycleType::new(lens).unwrap();
                let d = general_factor(&want).unwrap();
                assert_eq!(d.m, want.order() / 2);
                assert_brick(&d, &want);
            }
        }
    }

    #[test]
    fn general_four_ten_carries_the_tabled_four_cycle() {
        let d = general_factor(&ty("[4,10]")).unwrap();
        let c: DirectedCycle = "(x6,y7,y6,x8)".parse().unwrap();
        assert!(d.factors[0].cycles().contains(&c));
    }

    #[test]
    fn small_factor_six_first_factor() {
        let d = small_factor(&ty("[6]")).unwrap();
        assert_eq!(d.factors[0], "{(y1,x2,x4,y2,x3,y3)}".parse().unwrap());
        assert!(small_factor(&ty("[2,4,4]")).is_err());
    }
}
