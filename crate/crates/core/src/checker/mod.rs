//! Independent verification of factorizations, admissible decompositions and
//! cap tables.
//!
//! Everything here works from raw arc lists and vertex lists. Cycle types,
//! patterns and seam conditions are recomputed locally rather than taken from
//! the construction code, so a bug there cannot hide itself.

pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, Digraph, DirectedPath, TwoRegularDigraph, Vertex};
use crate::hosts::j_star_arcs;
use crate::jmachine::{AdmissibleDecomposition, CentrePiece, ExternalPattern, LeftCap, RightCap};

pub use oracle::{brute_force_factorization, OracleBudget};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            passed: true,
            checks: Vec::new(),
        }
    }

    /// Records one check. `outcome` carries the detail either way.
    pub fn record(&mut self, name: &str, outcome: std::result::Result<String, String>) {
        let (status, detail) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.passed &= status == Status::Pass;
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail,
        });
    }

    /// Appends another report's checks under `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            self.passed &= c.status == Status::Pass;
            self.checks.push(Check {
                name: format!("{prefix}.{}", c.name),
                ..c
            });
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Ok` if every check passed, otherwise the first failure as an error.
    pub fn into_result(self) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(Error::Verification(format!("{}: {}", c.name, c.detail))),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        write!(f, "{}", if self.passed { "verified" } else { "NOT verified" })
    }
}

type Outcome = std::result::Result<String, String>;

/// Successor map of a raw arc list, if it is 2-regular on its endpoints.
fn successor_map(arcs: &[Arc]) -> std::result::Result<BTreeMap<Vertex, Vertex>, String> {
    let mut succ = BTreeMap::new();
    let mut pred = BTreeMap::new();
    for a in arcs {
        if a.tail == a.head {
            return Err(format!("loop at {}", a.tail));
        }
        if succ.insert(a.tail, a.head).is_some() {
            return Err(format!("out-degree above 1 at {}", a.tail));
        }
        if pred.insert(a.head, a.tail).is_some() {
            return Err(format!("in-degree above 1 at {}", a.head));
        }
    }
    for v in succ.keys() {
        if !pred.contains_key(v) {
            return Err(format!("in-degree 0 at {v}"));
        }
    }
    for v in pred.keys() {
        if !succ.contains_key(v) {
            return Err(format!("out-degree 0 at {v}"));
        }
    }
    Ok(succ)
}

/// Cycle lengths of a 2-regular successor map, sorted.
fn cycle_lengths(succ: &BTreeMap<Vertex, Vertex>) -> Vec<u32> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in succ.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while seen.insert(v) {
            len += 1;
            v = succ[&v];
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn count(arcs: impl IntoIterator<Item = Arc>) -> BTreeMap<Arc, usize> {
    let mut m = BTreeMap::new();
    for a in arcs {
        *m.entry(a).or_insert(0) += 1;
    }
    m
}

fn show(vs: &BTreeSet<Vertex>) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks shared by host factorizations and admissible decompositions: the
/// factors are 2-regular, stay inside the host, and use each host arc exactly
/// as often as the host has it.
fn decomposition_checks(
    report: &mut VerificationReport,
    host_arcs: &[Arc],
    factors: &[Vec<Arc>],
) -> Vec<Option<BTreeMap<Vertex, Vertex>>> {
    let host = count(host_arcs.iter().copied());

    let mut bad = None;
    'outer: for (i, f) in factors.iter().enumerate() {
        for a in f {
            if !host.contains_key(a) {
                bad = Some(format!("factor {}: arc {a} is not in the host", i + 1));
                break 'outer;
            }
        }
    }
    report.record(
        "within_host",
        bad.map_or_else(|| Ok("every arc lies in the host".into()), Err),
    );

    let maps: Vec<_> = factors.iter().map(|f| successor_map(f)).collect();
    let bad = maps
        .iter()
        .enumerate()
        .find_map(|(i, m)| m.as_ref().err().map(|e| format!("factor {}: {e}", i + 1)));
    report.record(
        "two_regular",
        bad.map_or_else(|| Ok("in = out = 1 on every saturated vertex".into()), Err),
    );

    let used = count(factors.iter().flatten().copied());
    let over = used
        .iter()
        .find(|(a, &n)| n > host.get(a).copied().unwrap_or(0) && host.contains_key(a));
    report.record(
        "arc_disjoint",
        match over {
            None => Ok("no arc is used twice".into()),
            Some((a, n)) => {
                let owners: Vec<String> = factors
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(a))
                    .map(|(i, _)| (i + 1).to_string())
                    .collect();
                Err(format!(
                    "arc {a} used {n} times, by factors {}",
                    owners.join(",")
                ))
            }
        },
    );

    let missing = host
        .iter()
        .find(|(a, &n)| used.get(a).copied().unwrap_or(0) < n);
    report.record(
        "coverage",
        match missing {
            None => Ok(format!("all {} host arcs covered", host_arcs.len())),
            Some((a, _)) => Err(format!("host arc {a} is not covered")),
        },
    );

    maps.into_iter().map(|m| m.ok()).collect()
}

/// Verifies a factorization given as raw arc lists against a host given as a
/// vertex set and an arc multiset.
pub fn verify_arc_factorization(
    vertices: &BTreeSet<Vertex>,
    host_arcs: &[Arc],
    factors: &[Vec<Arc>],
    expected: &CycleType,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let want = vertices.len().checked_mul(factors.len());
    report.record(
        "factor_count",
        if want == Some(host_arcs.len()) && !vertices.is_empty() {
            Ok(format!("{} factors", factors.len()))
        } else {
            Err(format!(
                "{} factors of order {} cannot cover {} arcs",
                factors.len(),
                vertices.len(),
                host_arcs.len()
            ))
        },
    );
    let maps = decomposition_checks(&mut report, host_arcs, factors);

    let bad = maps.iter().enumerate().find_map(|(i, m)| {
        let m = m.as_ref()?;
        let vs: BTreeSet<Vertex> = m.keys().copied().collect();
        (vs != *vertices).then(|| {
            let miss: BTreeSet<Vertex> = vertices.difference(&vs).copied().collect();
            format!("factor {} misses {}", i + 1, show(&miss))
        })
    });
    report.record(
        "spanning",
        bad.map_or_else(|| Ok(format!("each factor spans {} vertices", vertices.len())), Err),
    );

    report.record("cycle_type", check_types(&maps, Some(expected)));
    report
}

fn check_types(maps: &[Option<BTreeMap<Vertex, Vertex>>], expected: Option<&CycleType>) -> Outcome {
    let mut first: Option<Vec<u32>> = expected.map(|t| t.lengths().to_vec());
    for (i, m) in maps.iter().enumerate() {
        let Some(m) = m else {
            return Err(format!("factor {} is not 2-regular", i + 1));
        };
        let got = cycle_lengths(m);
        match &first {
            None => first = Some(got),
            Some(want) if *want != got => {
                return Err(format!(
                    "factor {} has cycle lengths {got:?}, expected {want:?}",
                    i + 1
                ))
            }
            _ => {}
        }
    }
    Ok(format!("every factor has cycle lengths {:?}", first.unwrap_or_default()))
}

pub fn verify_factorization(
    host: &Digraph,
    factors: &[TwoRegularDigraph],
    expected: &CycleType,
) -> VerificationReport {
    let arcs: Vec<Arc> = host.arcs().iter().copied().collect();
    let raw: Vec<Vec<Arc>> = factors.iter().map(|f| f.arcs()).collect();
    verify_arc_factorization(host.vertices(), &arcs, &raw, expected)
}

/// Admissible decomposition checks on raw arc lists over `J*_2m`.
pub fn verify_admissible_arcs(
    m: u32,
    factors: &[Vec<Arc>],
    expected_patterns: Option<&[ExternalPattern]>,
    expected_type: Option<&CycleType>,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.record(
        "factor_count",
        if factors.len() == 9 {
            Ok("9 factors".into())
        } else {
            Err(format!("{} factors, expected 9", factors.len()))
        },
    );
    let host: Vec<Arc> = j_star_arcs(m).into_iter().collect();
    let maps = decomposition_checks(&mut report, &host, factors);
    let vsets: Vec<Option<BTreeSet<Vertex>>> = maps
        .iter()
        .map(|m| m.as_ref().map(|m| m.keys().copied().collect()))
        .collect();

    let mut order = Ok(format!("each factor has order {}", 2 * m));
    let mut pairs = Ok("one vertex of each boundary pair".to_string());
    let mut middle = Ok(format!("blocks 2..{} saturated", m.saturating_sub(1)));
    for (i, vs) in vsets.iter().enumerate() {
        let Some(vs) = vs else {
            order = Err(format!("factor {} is not 2-regular", i + 1));
            continue;
        };
        if vs.len() != 2 * m as usize && order.is_ok() {
            order = Err(format!("factor {} has order {}", i + 1, vs.len()));
        }
        for j in 0..2 {
            for (name, side) in [("x", Vertex::x as fn(u32) -> Vertex), ("y", Vertex::y)] {
                let a = vs.contains(&side(j));
                let b = vs.contains(&side(m + j));
                if a == b && pairs.is_ok() {
                    pairs = Err(format!(
                        "factor {} has {} of {name}{j}, {name}{}",
                        i + 1,
                        if a { "both" } else { "neither" },
                        m + j
                    ));
                }
            }
        }
        for b in 2..m {
            for v in [Vertex::x(b), Vertex::y(b)] {
                if !vs.contains(&v) && middle.is_ok() {
                    middle = Err(format!("factor {} misses {v}", i + 1));
                }
            }
        }
    }
    report.record("order", order);
    report.record("boundary_pairs", pairs);
    report.record("middle_saturated", middle);
    report.record("cycle_type", check_types(&maps, expected_type));

    if let Some(want) = expected_patterns {
        let seam = [Vertex::x(0), Vertex::x(1), Vertex::y(0), Vertex::y(1)];
        let mut outcome = Ok("external patterns match".to_string());
        if want.len() != vsets.len() {
            outcome = Err(format!("{} patterns for {} factors", want.len(), vsets.len()));
        }
        for (i, (vs, w)) in vsets.iter().zip(want).enumerate() {
            let got: BTreeSet<Vertex> = match vs {
                Some(vs) => seam.iter().copied().filter(|v| vs.contains(v)).collect(),
                None => continue,
            };
            if &got != w.vertices() && outcome.is_ok() {
                outcome = Err(format!(
                    "factor {} has pattern {}, expected {w}",
                    i + 1,
                    show(&got)
                ));
            }
        }
        report.record("external_pattern", outcome);
    }
    report
}

pub fn verify_admissible_decomposition(
    m: u32,
    dec: &AdmissibleDecomposition,
    expected: Option<&[ExternalPattern]>,
) -> VerificationReport {
    let raw: Vec<Vec<Arc>> = dec.factors.iter().map(|f| f.arcs()).collect();
    let mut report = VerificationReport::new();
    report.record(
        "block_count",
        if dec.m == m {
            Ok(format!("m = {m}"))
        } else {
            Err(format!("decomposition is over m = {}, expected {m}", dec.m))
        },
    );
    for c in verify_admissible_arcs(m, &raw, expected, None).checks {
        report.record(&c.name, if c.status == Status::Pass { Ok(c.detail) } else { Err(c.detail) });
    }
    report
}

fn shifted(v: Vertex, by: i64) -> Option<Vertex> {
    v.shifted(by).ok()
}

fn seam() -> [Vertex; 4] {
    [Vertex::x(0), Vertex::x(1), Vertex::y(0), Vertex::y(1)]
}

fn window(at: u32) -> [Vertex; 4] {
    [Vertex::x(at), Vertex::x(at + 1), Vertex::y(at), Vertex::y(at + 1)]
}

fn path_arcs(p: &DirectedPath) -> Vec<Arc> {
    p.vertices().windows(2).map(|w| Arc::new(w[0], w[1])).collect()
}

fn distinct(vs: &[Vertex]) -> bool {
    vs.iter().collect::<BTreeSet<_>>().len() == vs.len()
}

/// Exact arc-set equality with pairwise disjointness, reported as one check.
fn exact_union(pieces: &[Vec<Arc>], want: &BTreeSet<Arc>) -> Outcome {
    let mut seen: BTreeMap<Arc, usize> = BTreeMap::new();
    for (i, arcs) in pieces.iter().enumerate() {
        for &a in arcs {
            if let Some(j) = seen.insert(a, i) {
                if j != i {
                    return Err(format!("arc {a} in elements {} and {}", j + 1, i + 1));
                }
                return Err(format!("arc {a} repeated in element {}", i + 1));
            }
            if !want.contains(&a) {
                return Err(format!("element {}: arc {a} is outside the piece", i + 1));
            }
        }
    }
    match want.iter().find(|a| !seen.contains_key(a)) {
        Some(a) => Err(format!("arc {a} is not covered")),
        None => Ok(format!("{} arcs, pairwise disjoint", want.len())),
    }
}

type Triple = (Vertex, Vertex, BTreeSet<Vertex>);

fn show_triple(t: &Triple) -> String {
    format!("({}, {}, {})", t.0, t.1, show(&t.2))
}

fn first_mismatch(name: &str, a: &[Triple], b: &[Triple]) -> Outcome {
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            return Err(format!(
                "element {}: left {} vs {name} {}",
                i + 1,
                show_triple(x),
                show_triple(y)
            ));
        }
    }
    Ok("internal patterns agree".into())
}

fn collect_checks(report: &mut VerificationReport, name: &str, fails: Vec<String>, ok: &str) {
    report.record(name, fails.into_iter().next().map_or_else(|| Ok(ok.to_string()), Err));
}

/// Every clause of the left cap, right cap and (optionally) centre piece
/// definitions, pattern agreement across the three, and constancy of
/// `len(L_i) + len(P_i)`.
pub fn verify_cap_complementarity(
    left: &LeftCap,
    right: &RightCap,
    centre: Option<&CentrePiece>,
    expected: Option<&[ExternalPattern]>,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let ell = left.ell;
    let r = right.r;

    // left cap
    report.record(
        "left.count",
        if left.paths.len() == 9 { Ok("9 paths".into()) } else { Err(format!("{} paths", left.paths.len())) },
    );
    let mut want: BTreeSet<Arc> = j_star_arcs(ell);
    want.remove(&Arc::new(Vertex::x(ell), Vertex::y(ell)));
    let pieces: Vec<Vec<Arc>> = left.paths.iter().map(path_arcs).collect();
    report.record("left.arcs", exact_union(&pieces, &want));

    let left_e: Vec<BTreeSet<Vertex>> = left
        .paths
        .iter()
        .map(|p| seam().into_iter().filter(|v| p.vertices().contains(v)).collect())
        .collect();
    let mut fails = Vec::new();
    for (i, p) in left.paths.iter().enumerate() {
        if !distinct(p.vertices()) {
            fails.push(format!("L{} repeats a vertex", i + 1));
        }
        for b in 2..ell {
            for v in [Vertex::x(b), Vertex::y(b)] {
                if !p.vertices().contains(&v) {
                    fails.push(format!("L{} misses {v}", i + 1));
                }
            }
        }
        for end in [p.source(), p.terminal()] {
            if !window(ell).contains(&end) {
                fails.push(format!("L{} has endpoint {end} outside the seam", i + 1));
            }
        }
    }
    collect_checks(&mut report, "left.elements", fails, "paths, middle blocks, endpoints");

    let left_i: Vec<Triple> = left
        .paths
        .iter()
        .map(|p| {
            let back = |v: Vertex| shifted(v, -i64::from(ell)).unwrap_or(v);
            let vs = p.vertices();
            let inner = &vs[1..vs.len().saturating_sub(1).max(1)];
            let s = inner
                .iter()
                .filter(|v| window(ell).contains(v))
                .map(|&v| back(v))
                .collect();
            (back(p.source()), back(p.terminal()), s)
        })
        .collect();

    // right cap
    report.record(
        "right.count",
        if right.elements.len() == 9 {
            Ok("9 elements".into())
        } else {
            Err(format!("{} elements", right.elements.len()))
        },
    );
    let mut want = j_star_arcs(r);
    want.insert(Arc::new(Vertex::x(0), Vertex::y(0)));
    let pieces: Vec<Vec<Arc>> = right
        .elements
        .iter()
        .map(|e| {
            let mut arcs = path_arcs(&e.path);
            for c in &e.cycles {
                arcs.extend(c.arcs());
            }
            arcs
        })
        .collect();
    report.record("right.arcs", exact_union(&pieces, &want));

    let mut fails = Vec::new();
    let mut right_i = Vec::new();
    let mut right_e = Vec::new();
    for (i, e) in right.elements.iter().enumerate() {
        let mut all: Vec<Vertex> = e.path.vertices().to_vec();
        let mut lens: Vec<u32> = Vec::new();
        for c in &e.cycles {
            all.extend_from_slice(c.vertices());
            lens.push(c.vertices().len() as u32);
        }
        lens.sort_unstable();
        if !distinct(&all) {
            fails.push(format!("R{}: path and cycles share a vertex", i + 1));
        }
        if lens != right.cycle_lengths.lengths() {
            fails.push(format!(
                "R{}: cycle lengths {lens:?}, declared {:?}",
                i + 1,
                right.cycle_lengths.lengths()
            ));
        }
        let vs: BTreeSet<Vertex> = all.iter().copied().collect();
        let e_i: BTreeSet<Vertex> = seam()
            .into_iter()
            .filter(|u| !vs.contains(&shifted(*u, i64::from(r)).expect("non-negative")))
            .collect();
        if let Some(le) = left_e.get(i) {
            if *le != e_i {
                fails.push(format!(
                    "R{}: boundary blocks give pattern {}, left cap has {}",
                    i + 1,
                    show(&e_i),
                    show(le)
                ));
            }
        }
        for b in 2..r {
            for v in [Vertex::x(b), Vertex::y(b)] {
                if !vs.contains(&v) {
                    fails.push(format!("R{} misses {v}", i + 1));
                }
            }
        }
        for end in [e.path.vertices()[0], *e.path.vertices().last().unwrap()] {
            if !seam().contains(&end) {
                fails.push(format!("R{} has path endpoint {end} outside the seam", i + 1));
            }
        }
        let absent = seam().into_iter().filter(|v| !vs.contains(v)).collect();
        right_i.push((*e.path.vertices().last().unwrap(), e.path.vertices()[0], absent));
        right_e.push(e_i);
    }
    collect_checks(&mut report, "right.elements", fails, "path + cycles, boundary, middle blocks, endpoints");

    report.record("internal_pattern.left_right", first_mismatch("right", &left_i, &right_i));

    if let Some(want) = expected {
        let mut outcome = Ok("external patterns match".to_string());
        for (i, w) in want.iter().enumerate() {
            let got = left_e.get(i);
            if got != Some(w.vertices()) {
                outcome = Err(format!(
                    "element {}: left cap pattern {}, expected {w}",
                    i + 1,
                    got.map(show).unwrap_or_default()
                ));
                break;
            }
        }
        report.record("external_pattern", outcome);
    }

    let lens: Vec<usize> = left
        .paths
        .iter()
        .zip(&right.elements)
        .map(|(l, e)| l.vertices().len() + e.path.vertices().len() - 2)
        .collect();
    report.record(
        "m0",
        match lens.first() {
            Some(&m0) if lens.iter().all(|&x| x == m0) => Ok(format!("m0 = {m0}")),
            _ => Err(format!("len(L_i) + len(P_i) varies: {lens:?}")),
        },
    );

    if let Some(c) = centre {
        verify_centre(&mut report, c, Some(&left_i));
    }
    report
}

/// The centre-piece clauses on their own, without a left cap to compare against.
pub fn verify_centre_piece(centre: &CentrePiece) -> VerificationReport {
    let mut report = VerificationReport::new();
    verify_centre(&mut report, centre, None);
    report
}

fn verify_centre(report: &mut VerificationReport, centre: &CentrePiece, left_i: Option<&[Triple]>) {
    let c = centre.c;
    report.record(
        "centre.count",
        if centre.pairs.len() == 9 { Ok("9 pairs".into()) } else { Err(format!("{} pairs", centre.pairs.len())) },
    );
    let mut want = j_star_arcs(c);
    want.insert(Arc::new(Vertex::x(0), Vertex::y(0)));
    // the rung removed at the right end is x_c y_c, the one the next piece supplies as x0 y0
    want.remove(&Arc::new(Vertex::x(c), Vertex::y(c)));
    let pieces: Vec<Vec<Arc>> = centre
        .pairs
        .iter()
        .map(|(q, u)| {
            let mut a = path_arcs(q);
            a.extend(path_arcs(u));
            a
        })
        .collect();
    report.record("centre.arcs", exact_union(&pieces, &want));

    let ci = i64::from(c);
    let mut fails = Vec::new();
    let mut centre_i = Vec::new();
    for (i, (q, u)) in centre.pairs.iter().enumerate() {
        let n = i + 1;
        let mut all = q.vertices().to_vec();
        all.extend_from_slice(u.vertices());
        if !distinct(&all) {
            fails.push(format!("C{n}: Q and U share a vertex"));
        }
        let total = q.vertices().len() + u.vertices().len() - 2;
        if total != 2 * c as usize {
            fails.push(format!("C{n}: len(Q) + len(U) = {total}, expected {}", 2 * c));
        }
        let (sq, tq) = (q.vertices()[0], *q.vertices().last().unwrap());
        let (su, tu) = (u.vertices()[0], *u.vertices().last().unwrap());
        if !seam().contains(&sq) {
            fails.push(format!("C{n}: s(Q) = {sq} outside the seam"));
        }
        if shifted(sq, ci) != Some(tq) {
            fails.push(format!("C{n}: t(Q) = {tq} is not σ^{c}(s(Q))"));
        }
        if !window(c).contains(&su) {
            fails.push(format!("C{n}: s(U) = {su} outside the far seam"));
        }
        if shifted(su, -ci) != Some(tu) {
            fails.push(format!("C{n}: t(U) = {tu} is not σ^-{c}(s(U))"));
        }
        let vs: BTreeSet<Vertex> = all.iter().copied().collect();
        for w in seam() {
            if w == sq || w == tu {
                continue;
            }
            let here = vs.contains(&w);
            let there = vs.contains(&shifted(w, ci).expect("non-negative"));
            if here == there {
                fails.push(format!("C{n}: {w} and its shift are both {}", if here { "present" } else { "absent" }));
            }
        }
        for b in 2..c {
            for v in [Vertex::x(b), Vertex::y(b)] {
                if !vs.contains(&v) {
                    fails.push(format!("C{n} misses {v}"));
                }
            }
        }
        let absent = seam().into_iter().filter(|v| !vs.contains(v)).collect();
        centre_i.push((tu, sq, absent));
    }
    collect_checks(report, "centre.elements", fails, "lengths, endpoints, seam and middle coverage");
    if let Some(left_i) = left_i {
        report.record("internal_pattern.left_centre", first_mismatch("centre", left_i, &centre_i));
    }
}
