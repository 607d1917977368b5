use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::sample::Index;

use oberwolfach::checker::verify_factorization;
use oberwolfach::format::Certificate;
use oberwolfach::hosts::{complete_symmetric, h_star, HostDescriptor};
use oberwolfach::hstar::factorize_h_star;
use oberwolfach::solver::{round_robin_two_cycles, solve, SolveOptions};
use oberwolfach::{Arc, CycleType, DirectedCycle, Shift, TwoRegularDigraph, Vertex};

fn pick(order: u32, i: &Index) -> CycleType {
    let all = CycleType::bipartite_types(order);
    all[i.index(all.len())].clone()
}

/// Independent factorization check: every host arc exactly once, every factor
/// a permutation of the host vertices whose orbits have the wanted lengths.
fn oracle(n: u32, factors: &[TwoRegularDigraph], ty: &CycleType) -> bool {
    let vs: BTreeSet<Vertex> = (0..n.div_ceil(2)).map(Vertex::x).chain((0..n / 2).map(Vertex::y)).collect();
    let mut seen = BTreeSet::new();
    for f in factors {
        let succ: BTreeMap<Vertex, Vertex> = f.arcs().into_iter().map(|a| (a.tail, a.head)).collect();
        if succ.keys().copied().collect::<BTreeSet<_>>() != vs {
            return false;
        }
        let mut lens = Vec::new();
        let mut done = BTreeSet::new();
        for &v in &vs {
            let mut len = 0;
            let mut u = v;
            while done.insert(u) {
                len += 1;
                u = succ[&u];
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        if lens != ty.lengths() {
            return false;
        }
        for (&u, &w) in &succ {
            if u == w || !seen.insert((u, w)) {
                return false;
            }
        }
    }
    seen.len() == (n * (n - 1)) as usize
}

fn vertex() -> impl Strategy<Value = Vertex> {
    (any::<bool>(), 0u32..40).prop_map(|(x, i)| if x { Vertex::x(i) } else { Vertex::y(i) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cycle_type_text_round_trips(parts in prop::collection::vec(1u32..8, 1..8)) {
        let ty = CycleType::new(parts.iter().map(|p| 2 * p).collect()).unwrap();
        let back: CycleType = ty.to_string().parse().unwrap();
        prop_assert_eq!(&back, &ty);
        let spelled = format!("[{}]", parts.iter().map(|p| (2 * p).to_string()).collect::<Vec<_>>().join(","));
        prop_assert_eq!(spelled.parse::<CycleType>().unwrap(), ty);
    }

    #[test]
    fn cycles_are_rotation_invariant(vs in prop::collection::btree_set(vertex(), 2..10), r in 0usize..10) {
        let vs: Vec<Vertex> = vs.into_iter().collect();
        let mut rot = vs.clone();
        rot.rotate_left(r % vs.len());
        prop_assert_eq!(DirectedCycle::new(vs).unwrap(), DirectedCycle::new(rot).unwrap());
    }

    #[test]
    fn shift_is_invertible(vs in prop::collection::btree_set(vertex(), 2..10), k in 0i64..20) {
        let c = DirectedCycle::new(vs.into_iter().collect()).unwrap();
        let there = c.shift(k).unwrap();
        prop_assert_eq!(there.shift(-k).unwrap(), c.clone());
        let arcs: Vec<Arc> = c.arcs().collect();
        let moved: Vec<Arc> = there.arcs().collect();
        for (a, b) in arcs.iter().zip(&moved) {
            prop_assert_eq!(i64::from(b.tail.index) - i64::from(a.tail.index), k);
        }
    }

    #[test]
    fn solve_beyond_the_acceptance_range(n in prop::sample::select(vec![30u32, 34, 38]), i in any::<Index>()) {
        let ty = pick(n, &i);
        let s = solve(n, &ty, &SolveOptions::default()).unwrap().found().unwrap();
        prop_assert_eq!(s.factors.len(), n as usize - 1);
        prop_assert!(oracle(n, &s.factors, &ty), "{} {}", n, ty);
    }

    #[test]
    fn certificates_round_trip(n in prop::sample::select(vec![6u32, 10, 14, 18]), i in any::<Index>(), seed in 0u64..100) {
        let ty = pick(n, &i);
        prop_assume!(!(n == 6 && ty.lengths() == [6]));
        let s = solve(n, &ty, &SolveOptions { seed, ..Default::default() }).unwrap().found().unwrap();
        let mut cert = Certificate::new(HostDescriptor::complete_symmetric(n), ty, &s.factors, seed);
        cert.verified = true;
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(back.verify().unwrap().passed);
    }

    #[test]
    fn h_star_factors_for_larger_m(m in 11u32..18, i in any::<Index>()) {
        let ty = pick(2 * m, &i);
        let h = factorize_h_star(&ty, m).unwrap();
        prop_assert_eq!(h.factors.len(), 4);
        prop_assert!(verify_factorization(&h_star(m).unwrap(), &h.factors, &ty).passed);
    }

    #[test]
    fn round_robin_is_a_factorization(half in 1u32..20) {
        let n = 2 * half;
        let f = round_robin_two_cycles(n).unwrap();
        let ty = CycleType::new(vec![2; half as usize]).unwrap();
        prop_assert!(oracle(n, &f, &ty));
        prop_assert!(verify_factorization(&complete_symmetric(n).unwrap(), &f, &ty).passed);
    }
}
