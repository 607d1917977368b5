//! The JSON certificate format and the plain-text exports.
//!
//! A certificate is one compact JSON object:
//! `{"n":14,"factor_type":[2,4,8],"host":{"kind":"complete_symmetric","m":14},
//! "factors":[[["x0","x1"],...],...],"verified":true,"seed":0}`.
//! Factors are read back as raw vertex lists, so a damaged file still reaches
//! the checker and fails a named check instead of a parse error.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::checker::{verify_admissible_arcs, verify_arc_factorization, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{Arc, CycleType, TwoRegularDigraph, Vertex};
use crate::hosts::{w_star_arc_list, HostDescriptor, HostKind};
use crate::jmachine::pattern_x;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u32,
    pub factor_type: CycleType,
    pub host: HostDescriptor,
    pub factors: Vec<Vec<Vec<Vertex>>>,
    pub verified: bool,
    pub seed: u64,
}

impl Certificate {
    pub fn new(host: HostDescriptor, factor_type: CycleType, factors: &[TwoRegularDigraph], seed: u64) -> Self {
        Certificate {
            n: factor_type.order(),
            factor_type,
            host,
            factors: factors
                .iter()
                .map(|f| f.cycles().iter().map(|c| c.vertices().to_vec()).collect())
                .collect(),
            verified: false,
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificates always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Io(format!("malformed certificate: {e}")))
    }

    /// Arcs of each factor, closing every vertex list into a cycle.
    pub fn arcs(&self) -> Vec<Vec<Arc>> {
        self.factors
            .iter()
            .map(|f| {
                f.iter()
                    .flat_map(|c| (0..c.len()).map(move |i| Arc::new(c[i], c[(i + 1) % c.len()])))
                    .collect()
            })
            .collect()
    }

    /// Re-runs the checker against the declared host. `verified` is ignored.
    pub fn verify(&self) -> Result<VerificationReport> {
        let raw = self.arcs();
        let m = self.host.m;
        let mut report = match self.host.kind {
            HostKind::JStar => verify_admissible_arcs(m, &raw, Some(&pattern_x()), Some(&self.factor_type)),
            HostKind::WStar => {
                let arcs = w_star_arc_list(m)?;
                let vs: BTreeSet<Vertex> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
                verify_arc_factorization(&vs, &arcs, &raw, &self.factor_type)
            }
            HostKind::CompleteSymmetric | HostKind::HStar => {
                let host = self.host.build()?;
                let arcs: Vec<Arc> = host.arcs().iter().copied().collect();
                verify_arc_factorization(host.vertices(), &arcs, &raw, &self.factor_type)
            }
        };
        let order = match self.host.kind {
            HostKind::CompleteSymmetric => m,
            _ => 2 * m,
        };
        report.record(
            "declared_order",
            if self.n == order && self.factor_type.order() == order {
                Ok(format!("n = {order}"))
            } else {
                Err(format!(
                    "n = {} and type order {} do not match host order {order}",
                    self.n,
                    self.factor_type.order()
                ))
            },
        );
        Ok(report)
    }
}

/// One line per arc: `factor tail head`, factors numbered from 1.
pub fn edges(cert: &Certificate) -> String {
    let mut out = String::new();
    for (i, arcs) in cert.arcs().iter().enumerate() {
        for a in arcs {
            let _ = writeln!(out, "{} {} {}", i + 1, a.tail, a.head);
        }
    }
    out
}

/// Graphviz digraph with one edge statement per arc, labelled by factor.
pub fn dot(cert: &Certificate) -> String {
    let mut out = String::from("digraph factorization {\n");
    let _ = writeln!(out, "  label=\"{} {}\";", cert.host, cert.factor_type);
    for (i, arcs) in cert.arcs().iter().enumerate() {
        for a in arcs {
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", a.tail, a.head, i + 1);
        }
    }
    out.push_str("}\n");
    out
}

/// Human-readable listing, one factor per line.
pub fn text(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} factor type {}: {} factors{}",
        cert.host,
        cert.factor_type,
        cert.factors.len(),
        if cert.verified { ", verified" } else { "" }
    );
    for (i, f) in cert.factors.iter().enumerate() {
        let cycles: Vec<String> = f
            .iter()
            .map(|c| format!("({})", c.iter().map(Vertex::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        let _ = writeln!(out, "F{}: {}", i + 1, cycles.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jmachine::tables::DRAWN_FOUR_EIGHT;
    use crate::solver::round_robin_two_cycles;

    fn rr6() -> Certificate {
        let fs = round_robin_two_cycles(6).unwrap();
        Certificate::new(HostDescriptor::complete_symmetric(6), "[2^3]".parse().unwrap(), &fs, 3)
    }

    #[test]
    fn json_shape() {
        let c = rr6();
        let s = c.to_json();
        assert!(s.starts_with(r#"{"n":6,"factor_type":[2,2,2],"host":{"kind":"complete_symmetric","m":6},"factors":[[["#));
        assert!(s.ends_with("\"verified\":false,\"seed\":3}\n"));
    }

    #[test]
    fn drawn_fixture_round_trips_and_verifies() {
        let c = Certificate::from_json(DRAWN_FOUR_EIGHT).unwrap();
        assert_eq!(c.to_json(), DRAWN_FOUR_EIGHT);
        let r = c.verify().unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn dot_has_one_edge_per_arc() {
        let c = rr6();
        let d = dot(&c);
        assert_eq!(d.matches(" -> ").count(), 30);
        assert_eq!(edges(&c).lines().count(), 30);
    }

    #[test]
    fn damaged_factor_is_a_failed_check() {
        let mut c = rr6();
        c.factors[0][0].swap(0, 1);
        c.factors[1][0][0] = c.factors[1][1][0];
        let r = c.verify().unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn text_lists_factors() {
        let t = text(&rr6());
        assert_eq!(t.lines().count(), 6);
        assert!(t.starts_with("K*_6 factor type [2^3]: 5 factors"));
    }
}
