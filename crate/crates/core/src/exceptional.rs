//! Embedded minimal special degeneration graphs of the exceptional algebras
//! (and of D_4 modulo its triality group), with their `d_LS` tables.
//!
//! Nodes use ASCII Bala–Carter names: `~A1` for a short-root A_1, `A5''`
//! for the second class of A_5, `D4(a1)+A1` and so on. The D_4 graph uses
//! partitions instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::context::{Algebra, OrbitContext};
use crate::duality::dual_compatible;
use crate::error::{Error, Result};
use crate::label::{Kind, SingularityLabel};
use crate::orbits::orbit_dimension;
use crate::partition::Partition;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalAlgebra {
    G2,
    F4,
    E6,
    E7,
    E8,
    /// so_8 with the outer action of S_3.
    #[serde(rename = "D4_S3")]
    D4S3,
}

impl ExceptionalAlgebra {
    pub const ALL: [ExceptionalAlgebra; 6] =
        [Self::G2, Self::F4, Self::E6, Self::E7, Self::E8, Self::D4S3];

    pub fn name(&self) -> &'static str {
        match self {
            Self::G2 => "G2",
            Self::F4 => "F4",
            Self::E6 => "E6",
            Self::E7 => "E7",
            Self::E8 => "E8",
            Self::D4S3 => "D4_S3",
        }
    }

    fn source(&self) -> &'static str {
        match self {
            Self::G2 => include_str!("../data/g2.json"),
            Self::F4 => include_str!("../data/f4.json"),
            Self::E6 => include_str!("../data/e6.json"),
            Self::E7 => include_str!("../data/e7.json"),
            Self::E8 => include_str!("../data/e8.json"),
            Self::D4S3 => include_str!("../data/d4_s3.json"),
        }
    }
}

impl fmt::Display for ExceptionalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalAlgebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace(['-', ' '], "_");
        Self::ALL
            .into_iter()
            .find(|a| a.name() == key || (key == "D4S3" && *a == Self::D4S3))
            .ok_or_else(|| Error::Parse(format!("unknown exceptional algebra {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalNode {
    pub name: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalEdge {
    pub above: String,
    pub below: String,
    /// Label text in the canonical grammar.
    pub label: String,
}

impl ExceptionalEdge {
    pub fn parsed_label(&self) -> Result<SingularityLabel> {
        self.label.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalGraph {
    pub algebra: ExceptionalAlgebra,
    /// Nodes in figure order (top to bottom).
    pub nodes: Vec<ExceptionalNode>,
    pub edges: Vec<ExceptionalEdge>,
    /// `d_LS` as unordered pairs; fixed points appear as `[x, x]`.
    pub dls: Vec<(String, String)>,
    /// Orbits where the kernel of the map to the canonical quotient is nontrivial.
    pub nontrivial_kernel: Vec<String>,
}

impl ExceptionalGraph {
    pub fn dim_of(&self, name: &str) -> Option<usize> {
        self.nodes.iter().find(|n| n.name == name).map(|n| n.dim)
    }

    /// `d_LS` as a map on node names.
    pub fn dls_map(&self) -> Result<BTreeMap<String, String>> {
        let mut map = BTreeMap::new();
        for (a, b) in &self.dls {
            for (x, y) in [(a, b), (b, a)] {
                if let Some(prev) = map.insert(x.clone(), y.clone()) {
                    if &prev != y {
                        return Err(Error::Parse(format!("{}: {x} has two duals", self.algebra)));
                    }
                }
            }
        }
        Ok(map)
    }
}

/// The embedded graph for `algebra`.
pub fn graph(algebra: ExceptionalAlgebra) -> Result<ExceptionalGraph> {
    let g: ExceptionalGraph = serde_json::from_str(algebra.source())
        .map_err(|e| Error::Parse(format!("{algebra} data: {e}")))?;
    if g.algebra != algebra {
        return Err(Error::Parse(format!(
            "data file for {algebra} declares {}",
            g.algebra
        )));
    }
    Ok(g)
}

/// How many edges of `g` carry a label of the given kind.
pub fn count_kind(g: &ExceptionalGraph, kind: Kind) -> Result<usize> {
    let mut n = 0;
    for e in &g.edges {
        if e.parsed_label()?.kind == kind {
            n += 1;
        }
    }
    Ok(n)
}

/// Structural checks on one embedded graph: unique nodes, known endpoints,
/// labels that parse and re-render identically, dimension drops equal to
/// label codimensions, and the placement of starred labels.
pub fn consistency_check(algebra: ExceptionalAlgebra) -> Result<Report> {
    let g = graph(algebra)?;
    let mut report = Report::new(format!("consistency {algebra}"));
    let names: BTreeSet<&str> = g.nodes.iter().map(|n| n.name.as_str()).collect();
    report.record(names.len() == g.nodes.len(), || {
        "duplicate node names".into()
    });

    for e in &g.edges {
        let ends = (g.dim_of(&e.above), g.dim_of(&e.below));
        let (Some(hi), Some(lo)) = ends else {
            report.record(false, || {
                format!("edge {} > {} has an unknown endpoint", e.above, e.below)
            });
            continue;
        };
        match e.parsed_label() {
            Ok(label) => {
                report.record(label.canonical() == e.label, || {
                    format!("label {} re-renders as {}", e.label, label.canonical())
                });
                report.record(hi > lo && hi - lo == label.codim(), || {
                    format!(
                        "{} > {}: dims {hi} -> {lo} but {} has codim {}",
                        e.above,
                        e.below,
                        e.label,
                        label.codim()
                    )
                });
            }
            Err(err) => report.record(false, || format!("{} > {}: {err}", e.above, e.below)),
        }
    }

    if algebra == ExceptionalAlgebra::D4S3 {
        let ctx = OrbitContext::all(Algebra::D, 4)?;
        for n in &g.nodes {
            let dim = n
                .name
                .parse::<Partition>()
                .and_then(|p| orbit_dimension(&p, &ctx));
            report.record(dim.as_ref().is_ok_and(|&d| d == n.dim), || {
                format!("{} has dim {} but computes {dim:?}", n.name, n.dim)
            });
        }
    }

    // Starred labels land only on orbits with nontrivial kernel, and each
    // such orbit is reached by a starred edge or by μ or d_4/S_4.
    let kernel: BTreeSet<&str> = g.nontrivial_kernel.iter().map(String::as_str).collect();
    for e in &g.edges {
        if let Ok(label) = e.parsed_label() {
            if label.star {
                report.record(kernel.contains(e.below.as_str()), || {
                    format!(
                        "starred {} lands on {}, which has trivial kernel",
                        e.label, e.below
                    )
                });
            }
        }
    }
    for orbit in &kernel {
        let incoming: Vec<&ExceptionalEdge> =
            g.edges.iter().filter(|e| e.below == *orbit).collect();
        let ok = incoming.iter().any(|e| {
            e.parsed_label()
                .is_ok_and(|l| l.star || matches!(l.kind, Kind::Mu | Kind::QuotD4S4))
        });
        report.record(ok, || {
            format!("no incoming edge of {orbit} is starred or of type mu or d_4/S_4")
        });
    }
    Ok(report)
}

/// Checks the embedded `d_LS` table: an involution on the nodes that
/// carries edges to reversed edges, with interchanging labels.
pub fn verify_exceptional_duality(algebra: ExceptionalAlgebra) -> Result<Report> {
    let g = graph(algebra)?;
    let mut report = Report::new(format!("duality {algebra}"));
    let map = g.dls_map()?;
    let names: BTreeSet<&String> = g.nodes.iter().map(|n| &n.name).collect();
    let keys: BTreeSet<&String> = map.keys().collect();
    report.record(keys == names, || {
        "d_LS table does not cover exactly the nodes".into()
    });
    for (x, y) in &map {
        report.record(map.get(y) == Some(x), || {
            format!("d_LS is not an involution at {x}")
        });
    }
    let by_pair: BTreeMap<(&str, &str), &ExceptionalEdge> = g
        .edges
        .iter()
        .map(|e| ((e.above.as_str(), e.below.as_str()), e))
        .collect();
    for e in &g.edges {
        let (Some(dhi), Some(dlo)) = (map.get(&e.below), map.get(&e.above)) else {
            report.record(false, || format!("{} > {} has no dual", e.above, e.below));
            continue;
        };
        let Some(dual) = by_pair.get(&(dhi.as_str(), dlo.as_str())) else {
            report.record(false, || {
                format!(
                    "dual of {} > {} would be {dhi} > {dlo}, not an edge",
                    e.above, e.below
                )
            });
            continue;
        };
        let ok = match (e.parsed_label(), dual.parsed_label()) {
            (Ok(a), Ok(b)) => dual_compatible(&a, &b),
            _ => false,
        };
        report.record(ok, || {
            format!(
                "{} > {} {} vs {dhi} > {dlo} {}",
                e.above, e.below, e.label, dual.label
            )
        });
    }
    Ok(report)
}
