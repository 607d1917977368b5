//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines come out in order and unbuffered.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use oberwolfach::checker::{
    brute_force_factorization, verify_admissible_arcs, verify_admissible_decomposition, verify_arc_factorization,
    verify_factorization, OracleBudget,
};
use oberwolfach::hosts::{complete_symmetric, h_star, j_star_arcs, w_star_arc_list};
use oberwolfach::hstar::factorize_h_star;
use oberwolfach::jmachine::assemble::general_factor;
use oberwolfach::jmachine::recursion::{j_decompose, w_star_factorization};
use oberwolfach::jmachine::tables::{self, Family};
use oberwolfach::jmachine::{external_pattern, is_admissible, pattern_x, ExternalPattern};
use oberwolfach::solver::{solve, SolveOptions};
use oberwolfach::{concat, Arc, CycleType, DirectedCycle, DirectedPath, Outcome, Shift, TwoRegularDigraph, Vertex};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn every_type() -> Verdict {
    let mut total = 0;
    for n in [6u32, 10, 14, 18, 22, 26] {
        for ty in CycleType::bipartite_types(n) {
            total += 1;
            let out = solve(n, &ty, &SolveOptions::default()).map_err(|e| format!("n={n} {ty}: {e}"))?;
            match out {
                Outcome::Nonexistent => ensure(n == 6 && ty.lengths() == [6], || format!("n={n} {ty}: no factorization"))?,
                Outcome::Found(s) => {
                    ensure(!(n == 6 && ty.lengths() == [6]), || "found a [6]-factorization of K*_6".into())?;
                    ensure(s.factors.len() == n as usize - 1, || format!("n={n} {ty}: {} factors", s.factors.len()))?;
                    let r = verify_factorization(&complete_symmetric(n).unwrap(), &s.factors, &ty);
                    ensure(r.passed, || format!("n={n} {ty}:\n{r}"))?;
                }
            }
        }
    }
    Ok(format!("{total} types over n in 6..=26, (6,[6]) nonexistent"))
}

fn table_audit() -> Verdict {
    let rows = tables::audit().map_err(|e| e.to_string())?;
    let caps = rows.iter().filter(|r| r.name.starts_with("cap")).count();
    let small = rows.len() - caps;
    ensure(caps == 16 && small == 13, || format!("{caps} cap rows and {small} decomposition rows"))?;
    for r in &rows {
        ensure(r.report.passed, || format!("{}:\n{}", r.name, r.report))?;
    }
    // constant m0 = 2 s0 per row, recomputed from the path lengths
    let left = tables::left_cap().map_err(|e| e.to_string())?;
    for (f, s0) in tables::right_cap_rows() {
        let right = tables::right_cap(f, s0).map_err(|e| e.to_string())?;
        for (i, (l, e)) in left.paths.iter().zip(&right.elements).enumerate() {
            let m0 = l.len() + e.path.len();
            ensure(m0 == 2 * s0 as usize, || format!("{} s0={s0} element {}: m0 = {m0}", f.label(), i + 1))?;
            let lens: Vec<u32> = e.cycles.iter().map(|c| c.len() as u32).collect();
            ensure(CycleType::new(lens).unwrap().lengths() == f.extra(), || {
                format!("{} s0={s0} element {}: wrong cycles", f.label(), i + 1)
            })?;
        }
    }
    Ok("16 cap rows and 13 small decompositions".into())
}

fn h_star_suite() -> Verdict {
    let mut total = 0;
    for m in 2..=10u32 {
        let host = h_star(m).unwrap();
        for ty in CycleType::bipartite_types(2 * m) {
            total += 1;
            let h = factorize_h_star(&ty, m).map_err(|e| format!("m={m} {ty}: {e}"))?;
            let want = if m == 2 { 2 } else { 4 };
            ensure(h.factors.len() == want, || format!("m={m} {ty}: {} factors", h.factors.len()))?;
            let r = verify_factorization(&host, &h.factors, &ty);
            ensure(r.passed, || format!("m={m} {ty}:\n{r}"))?;
        }
    }
    Ok(format!("{total} types over 2 <= m <= 10"))
}

fn w_j_suite() -> Verdict {
    let x = pattern_x();
    let mut total = 0;
    for m in 4..=13u32 {
        let arcs = w_star_arc_list(m).unwrap();
        let vs: BTreeSet<Vertex> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
        for ty in CycleType::bipartite_types(2 * m) {
            if ty.count(2) == m as usize {
                continue;
            }
            total += 1;
            let dec = j_decompose(&ty).map_err(|e| format!("m={m} {ty}: {e}"))?;
            let r = verify_admissible_decomposition(m, &dec, Some(&x));
            ensure(r.passed, || format!("J* m={m} {ty}:\n{r}"))?;
            ensure(dec.factors.iter().all(|f| f.cycle_type() == ty), || format!("J* m={m} {ty}: wrong type"))?;
            let w = w_star_factorization(&ty).map_err(|e| format!("m={m} {ty}: {e}"))?;
            ensure(w.len() == 9, || format!("W* m={m} {ty}: {} factors", w.len()))?;
            let raw: Vec<Vec<Arc>> = w.iter().map(|f| f.arcs()).collect();
            let r = verify_arc_factorization(&vs, &arcs, &raw, &ty);
            ensure(r.passed, || format!("W* m={m} {ty}:\n{r}"))?;
        }
    }
    Ok(format!("{total} types over 4 <= m <= 13"))
}

#[derive(Deserialize)]
struct PieceRow {
    element: usize,
    external: Vec<Vertex>,
    internal: (Vertex, Vertex, Vec<Vertex>),
    left: Vec<(Vertex, Vertex)>,
    centre: Vec<(Vertex, Vertex)>,
    right: Vec<(Vertex, Vertex)>,
}

fn arc_set(pairs: &[(Vertex, Vertex)], by: i64) -> BTreeSet<Arc> {
    pairs
        .iter()
        .map(|&(u, v)| Arc::new(u.shifted(by).unwrap(), v.shifted(by).unwrap()))
        .collect()
}

fn micro_examples() -> Verdict {
    let parse_c = |s: &str| s.parse::<DirectedCycle>().unwrap();

    let d = parse_c("(x0,x2,y3,x1,y2,y1)").shift(1).unwrap();
    ensure(d == parse_c("(x1,x3,y4,x2,y3,y2)"), || format!("sigma gave {d}"))?;

    let f: TwoRegularDigraph = "{(x0,x1),(y1,y2,x2,x3,y4,y3)}".parse().unwrap();
    let f2: TwoRegularDigraph = "{(x0,x2,y3,x1,y2,y1)}".parse().unwrap();
    let spliced = f.union(&f2.shift(4).unwrap()).map_err(|e| e.to_string())?;
    let want: ExternalPattern = "{x0,x1,y1}".parse().unwrap();
    ensure(spliced.cycle_type().to_string() == "[2,6^2]", || format!("splice type {}", spliced.cycle_type()))?;
    ensure(is_admissible(&spliced, 7), || "splice is not admissible in J*_14".into())?;
    ensure(external_pattern(&spliced) == want, || format!("splice pattern {}", external_pattern(&spliced)))?;
    let j14 = j_star_arcs(7);
    ensure(spliced.arcs().iter().all(|a| j14.contains(a)), || "splice leaves J*_14".into())?;

    let l: DirectedPath = "<y2,x0,y1,x1,x3>".parse().unwrap();
    let r: DirectedPath = "<x1,y2,y3,y1,x0,x2,y0>".parse().unwrap();
    let c = concat(&l, &r.shift(2).unwrap())
        .and_then(|w| w.into_cycle())
        .map_err(|e| e.to_string())?;
    ensure(c.len() == 10, || format!("L+sigma^2(R) has length {}", c.len()))?;
    ensure(c == parse_c("(y2,x0,y1,x1,x3,y4,y5,y3,x2,x4)"), || format!("L+sigma^2(R) = {c}"))?;
    let j10 = j_star_arcs(5);
    ensure(c.arcs().all(|a| j10.contains(&a)), || "L+sigma^2(R) leaves J*_10".into())?;

    // [4,18] on J*_22 from the drawn pieces: L, sigma^2(C), sigma^6(R)
    let rows: Vec<PieceRow> =
        serde_json::from_str(include_str!("../fixtures/four_eighteen_pieces.json")).map_err(|e| e.to_string())?;
    let left = tables::left_cap().unwrap();
    let centre = tables::centre_piece().unwrap();
    let right = tables::right_cap(Family::LongFour, 5).unwrap();
    let x = pattern_x();
    let mut drawn = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        ensure(row.element == i + 1, || format!("row {} out of order", row.element))?;
        let ext = ExternalPattern::new(row.external.iter().copied()).unwrap();
        ensure(ext == x[i], || format!("element {}: external {ext}", i + 1))?;
        let ip = left.internal_pattern(i);
        let got = (ip.first, ip.second, ip.absent.iter().copied().collect::<Vec<_>>());
        ensure(got == row.internal, || format!("element {}: left internal pattern {ip}", i + 1))?;
        ensure(right.internal_pattern(i) == ip, || format!("element {}: right internal pattern", i + 1))?;
        let l: BTreeSet<Arc> = left.paths[i].arcs().collect();
        ensure(l == arc_set(&row.left, 0), || format!("element {}: left cap differs", i + 1))?;
        let (q, u) = &centre.pairs[i];
        let cen: BTreeSet<Arc> = q.arcs().chain(u.arcs()).collect();
        ensure(cen == arc_set(&row.centre, 0), || format!("element {}: centre differs", i + 1))?;
        let e = &right.elements[i];
        let rc: BTreeSet<Arc> = e.path.arcs().chain(e.cycles.iter().flat_map(|c| c.arcs())).collect();
        ensure(rc == arc_set(&row.right, 0), || format!("element {}: right cap differs", i + 1))?;
        let mut all = arc_set(&row.left, 0);
        all.extend(arc_set(&row.centre, 2));
        all.extend(arc_set(&row.right, 6));
        drawn.push(all.into_iter().collect::<Vec<_>>());
    }
    let ty: CycleType = "[4,18]".parse().unwrap();
    let r = verify_admissible_arcs(11, &drawn, Some(&x), Some(&ty));
    ensure(r.passed, || format!("drawn [4,18] pieces:\n{r}"))?;
    let built = general_factor(&ty).map_err(|e| e.to_string())?;
    for (i, (f, d)) in built.factors.iter().zip(&drawn).enumerate() {
        let a: BTreeSet<Arc> = f.arcs().into_iter().collect();
        let b: BTreeSet<Arc> = d.iter().copied().collect();
        ensure(a == b, || format!("assembled factor {} differs from the drawn one", i + 1))?;
    }
    Ok("sigma, [2,6^2] splice, 10-cycle, [4,18] on J*_22".into())
}

fn oracle_cross_check() -> Verdict {
    let host = complete_symmetric(6).unwrap();
    let mut seen = Vec::new();
    for ty in CycleType::bipartite_types(6) {
        let oracle = brute_force_factorization(&host, &ty, OracleBudget::default()).map_err(|e| format!("{ty}: {e}"))?;
        let solved = solve(6, &ty, &SolveOptions::default()).map_err(|e| format!("{ty}: {e}"))?;
        let (a, b) = (matches!(oracle, Outcome::Found(_)), matches!(solved, Outcome::Found(_)));
        ensure(a == b, || format!("{ty}: oracle says {a}, solve says {b}"))?;
        if let Outcome::Found(fs) = &oracle {
            let r = verify_factorization(&host, fs, &ty);
            ensure(r.passed, || format!("oracle {ty}:\n{r}"))?;
        }
        ensure((ty.lengths() == [6]) != a, || format!("{ty}: unexpected existence {a}"))?;
        seen.push(format!("{ty}:{}", if a { "yes" } else { "no" }));
    }
    Ok(seen.join(" "))
}

fn mutate(factors: &mut [Vec<Arc>], vertices: &[Vertex], rng: &mut ChaCha8Rng) -> &'static str {
    let i = rng.gen_range(0..factors.len());
    let k = rng.gen_range(0..factors[i].len());
    match rng.gen_range(0..3) {
        0 => {
            factors[i].remove(k);
            "delete"
        }
        1 => {
            let mut j = rng.gen_range(0..factors.len() - 1);
            if j >= i {
                j += 1;
            }
            let a = factors[i][k];
            factors[j].push(a);
            "duplicate"
        }
        _ => {
            let a = factors[i][k];
            let w = loop {
                let w = vertices[rng.gen_range(0..vertices.len())];
                if w != a.head && w != a.tail {
                    break w;
                }
            };
            factors[i][k] = Arc::new(a.tail, w);
            "retarget"
        }
    }
}

fn mutation_robustness() -> Verdict {
    let mut certs = Vec::new();
    for (n, ty) in [(6, "[2,4]"), (10, "[4,6]"), (14, "[2,4,8]"), (18, "[18]"), (22, "[2^3,4^2,8]")] {
        let ty: CycleType = ty.parse().unwrap();
        let s = solve(n, &ty, &SolveOptions::default()).unwrap().found().unwrap();
        let host = complete_symmetric(n).unwrap();
        certs.push((host, ty, s.factors));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut kinds = [0usize; 3];
    for t in 0..1000 {
        let (host, ty, factors) = &certs[t % certs.len()];
        let mut raw: Vec<Vec<Arc>> = factors.iter().map(|f| f.arcs()).collect();
        let arcs: Vec<Arc> = host.arcs().iter().copied().collect();
        ensure(verify_arc_factorization(host.vertices(), &arcs, &raw, ty).passed, || "baseline fails".into())?;
        let vs: Vec<Vertex> = host.vertices().iter().copied().collect();
        let kind = mutate(&mut raw, &vs, &mut rng);
        kinds[["delete", "duplicate", "retarget"].iter().position(|&k| k == kind).unwrap()] += 1;
        let r = verify_arc_factorization(host.vertices(), &arcs, &raw, ty);
        ensure(!r.passed, || format!("mutation {t} ({kind}) of {ty} still passes"))?;
    }
    Ok(format!(
        "1000 mutations rejected ({} delete, {} duplicate, {} retarget)",
        kinds[0], kinds[1], kinds[2]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("every even type, n up to 26", every_type),
        ("table audit", table_audit),
        ("H* suite", h_star_suite),
        ("W*/J* suite", w_j_suite),
        ("micro-examples", micro_examples),
        ("oracle cross-check", oracle_cross_check),
        ("mutation robustness", mutation_robustness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let verdict = run();
        let secs = started.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
