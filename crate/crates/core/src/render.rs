//! Deterministic DOT, JSON and text renderings of labelled Hasse diagrams,
//! plus the embedded classical figure transcriptions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::context::{Algebra, Family, GroupForm, OrbitContext};
use crate::degeneration::classify;
use crate::error::{Error, Result};
use crate::exceptional::{self, ExceptionalAlgebra};
use crate::label::{SingularityLabel, Style};
use crate::orbits::{is_special, OrbitPoset};
use crate::partition::Partition;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedNode {
    /// Compact partition (or Bala–Carter name) without the tag.
    pub partition: String,
    /// `I` or `II` for the two orbits of a very even partition.
    pub tag: Option<String>,
    pub dim: usize,
    pub special: bool,
}

impl RenderedNode {
    /// Node identity: the display string plus `:I` / `:II`.
    pub fn id(&self) -> String {
        match &self.tag {
            Some(t) => format!("{}:{t}", self.partition),
            None => self.partition.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedEdge {
    pub above: String,
    pub below: String,
    pub label: String,
    pub star: bool,
    pub branches: usize,
    pub codim: usize,
    pub uncertain_normalization: bool,
}

impl RenderedEdge {
    fn new(above: String, below: String, label: &SingularityLabel, style: Style) -> Self {
        RenderedEdge {
            above,
            below,
            label: label.render(style),
            star: label.star,
            branches: label.branches,
            codim: label.codim(),
            uncertain_normalization: label.uncertain,
        }
    }
}

/// A labelled Hasse diagram ready for output. Nodes are sorted by
/// descending dimension, then descending partition; edges follow the order
/// of their endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedGraph {
    #[serde(skip)]
    pub name: String,
    pub algebra: String,
    pub rank: usize,
    pub family: String,
    pub form: String,
    pub nodes: Vec<RenderedNode>,
    pub edges: Vec<RenderedEdge>,
}

impl RenderedGraph {
    /// Labelled covers of the family poset of `ctx`.
    pub fn from_context(ctx: &OrbitContext, style: Style) -> Result<Self> {
        let poset = OrbitPoset::build(ctx)?;
        let nodes = poset
            .orbits
            .iter()
            .zip(&poset.dims)
            .map(|(o, &dim)| {
                Ok(RenderedNode {
                    partition: o.partition.compact(),
                    tag: match o.tag.suffix() {
                        "" => None,
                        s => Some(s.trim_start_matches(':').to_string()),
                    },
                    dim,
                    special: is_special(&o.partition, ctx)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(poset.covers.len());
        for &(hi, lo) in &poset.covers {
            let (a, b) = (&poset.orbits[hi], &poset.orbits[lo]);
            let label = classify(a, b, ctx)?;
            edges.push(RenderedEdge::new(a.id(), b.id(), &label, style));
        }
        let mut g = RenderedGraph {
            name: ctx.name(),
            algebra: format!("{:?}", ctx.algebra),
            rank: ctx.rank,
            family: family_key(ctx.family).into(),
            form: form_key(ctx.form).into(),
            nodes,
            edges,
        };
        g.sort(|a, b| {
            let (pa, pb) = (a.parse::<Partition>(), b.parse::<Partition>());
            match (pa, pb) {
                (Ok(x), Ok(y)) => y.cmp(&x),
                _ => b.cmp(a),
            }
        });
        Ok(g)
    }

    /// One of the embedded exceptional graphs. Nodes keep figure order
    /// within a dimension.
    pub fn from_exceptional(algebra: ExceptionalAlgebra, style: Style) -> Result<Self> {
        let data = exceptional::graph(algebra)?;
        let nodes = data
            .nodes
            .iter()
            .map(|n| RenderedNode {
                partition: n.name.clone(),
                tag: None,
                dim: n.dim,
                special: true,
            })
            .collect();
        let edges = data
            .edges
            .iter()
            .map(|e| {
                Ok(RenderedEdge::new(
                    e.above.clone(),
                    e.below.clone(),
                    &e.parsed_label()?,
                    style,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let rank = match algebra {
            ExceptionalAlgebra::G2 => 2,
            ExceptionalAlgebra::F4 | ExceptionalAlgebra::D4S3 => 4,
            ExceptionalAlgebra::E6 => 6,
            ExceptionalAlgebra::E7 => 7,
            ExceptionalAlgebra::E8 => 8,
        };
        let mut g = RenderedGraph {
            name: algebra.name().into(),
            algebra: algebra.name().into(),
            rank,
            family: "special".into(),
            form: "full".into(),
            nodes,
            edges,
        };
        g.sort(|_, _| std::cmp::Ordering::Equal);
        Ok(g)
    }

    /// Stable sort of nodes by descending dimension (ties broken by
    /// `tie`), then of edges by endpoint positions and label.
    fn sort(&mut self, tie: impl Fn(&str, &str) -> std::cmp::Ordering) {
        self.nodes.sort_by(|a, b| {
            b.dim
                .cmp(&a.dim)
                .then_with(|| tie(&a.partition, &b.partition))
                .then_with(|| a.tag.cmp(&b.tag))
        });
        let pos = |id: &str| {
            self.nodes
                .iter()
                .position(|n| n.id() == id)
                .unwrap_or(usize::MAX)
        };
        let mut keyed: Vec<_> = self
            .edges
            .drain(..)
            .map(|e| ((pos(&e.above), pos(&e.below)), e))
            .collect();
        keyed.sort_by(|(ka, a), (kb, b)| ka.cmp(kb).then_with(|| a.label.cmp(&b.label)));
        self.edges = keyed.into_iter().map(|(_, e)| e).collect();
    }

    /// Edge multiset as sorted `(above, below, label)` triples.
    pub fn edge_set(&self) -> BTreeSet<(String, String, String)> {
        self.edges
            .iter()
            .map(|e| (e.above.clone(), e.below.clone(), e.label.clone()))
            .collect()
    }
}

fn family_key(f: Family) -> &'static str {
    match f {
        Family::All => "all",
        Family::Special => "special",
        Family::AltSpecial => "alt",
    }
}

fn form_key(f: GroupForm) -> &'static str {
    match f {
        GroupForm::Full => "full",
        GroupForm::Connected => "connected",
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz DOT, one `rank=same` subgraph per dimension.
pub fn emit_dot(g: &RenderedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(&g.name));
    out.push_str("  rankdir=TB;\n  node [shape=plaintext];\n");
    let mut i = 0;
    while i < g.nodes.len() {
        let dim = g.nodes[i].dim;
        let _ = writeln!(out, "  {{ rank=same; // dim {dim}");
        while i < g.nodes.len() && g.nodes[i].dim == dim {
            let _ = writeln!(out, "    \"{}\";", dot_escape(&g.nodes[i].id()));
            i += 1;
        }
        out.push_str("  }\n");
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            dot_escape(&e.above),
            dot_escape(&e.below),
            dot_escape(&e.label)
        );
    }
    out.push_str("}\n");
    out
}

/// JSON with fields in declaration order.
pub fn emit_json(g: &RenderedGraph, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(g)
    } else {
        serde_json::to_string(g)
    }
    .expect("rendered graphs always serialize");
    s.push('\n');
    s
}

/// Plain text: a node list then `above > below : label` lines.
pub fn emit_text(g: &RenderedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} {} {}", g.name, g.family, g.form);
    for n in &g.nodes {
        let mark = if n.special { "" } else { " (non-special)" };
        let _ = writeln!(out, "node {} dim {}{mark}", n.id(), n.dim);
    }
    for e in &g.edges {
        let _ = writeln!(out, "edge {} > {} : {}", e.above, e.below, e.label);
    }
    out
}

/// Names of the embedded classical figure transcriptions.
pub const CLASSICAL_FIGURES: [&str; 8] = [
    "d4_special",
    "c4_alt",
    "b4_special",
    "c4_special",
    "b6_special",
    "c6_special",
    "d5_special",
    "c5_alt",
];

fn figure_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "d4_special" => include_str!("../data/figures/d4_special.txt"),
        "c4_alt" => include_str!("../data/figures/c4_alt.txt"),
        "b4_special" => include_str!("../data/figures/b4_special.txt"),
        "c4_special" => include_str!("../data/figures/c4_special.txt"),
        "b6_special" => include_str!("../data/figures/b6_special.txt"),
        "c6_special" => include_str!("../data/figures/c6_special.txt"),
        "d5_special" => include_str!("../data/figures/d5_special.txt"),
        "c5_alt" => include_str!("../data/figures/c5_alt.txt"),
        _ => return None,
    })
}

/// A transcribed classical figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub name: String,
    pub ctx: OrbitContext,
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<(String, String, String)>,
}

fn node_id(s: &str) -> Result<String> {
    let (p, tag) = match s.split_once(':') {
        Some((p, t)) => (p, format!(":{t}")),
        None => (s, String::new()),
    };
    Ok(format!("{}{tag}", p.trim().parse::<Partition>()?.compact()))
}

/// Parses the line format `context A r family form` / `node p` /
/// `edge p > q : label`.
pub fn parse_figure(name: &str, text: &str) -> Result<Figure> {
    let bad = |line: &str| Error::Parse(format!("{name}: bad line {line:?}"));
    let mut ctx = None;
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (kw, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
        match kw {
            "context" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                let [a, r, fam, form] = f[..] else {
                    return Err(bad(line));
                };
                let rank = r.parse().map_err(|_| bad(line))?;
                ctx = Some(OrbitContext::new(
                    a.parse::<Algebra>()?,
                    rank,
                    fam.parse()?,
                    form.parse()?,
                )?);
            }
            "node" => {
                nodes.insert(node_id(rest)?);
            }
            "edge" => {
                let (pair, label) = rest.split_once(" : ").ok_or_else(|| bad(line))?;
                let (hi, lo) = pair.split_once(" > ").ok_or_else(|| bad(line))?;
                edges.insert((node_id(hi)?, node_id(lo)?, label.trim().to_string()));
            }
            _ => return Err(bad(line)),
        }
    }
    Ok(Figure {
        name: name.into(),
        ctx: ctx.ok_or_else(|| Error::Parse(format!("{name}: missing context line")))?,
        nodes,
        edges,
    })
}

/// The embedded figure with this name.
pub fn figure(name: &str) -> Result<Figure> {
    let src =
        figure_source(name).ok_or_else(|| Error::Parse(format!("no figure named {name:?}")))?;
    parse_figure(name, src)
}

/// Regenerates every classical figure and compares node and labelled edge
/// sets with the transcription.
pub fn verify_figures() -> Result<Report> {
    let mut report = Report::new("figures");
    for name in CLASSICAL_FIGURES {
        let fig = figure(name)?;
        let g = RenderedGraph::from_context(&fig.ctx, Style::Canonical)?;
        let nodes: BTreeSet<String> = g.nodes.iter().map(RenderedNode::id).collect();
        let edges = g.edge_set();
        report.record(nodes == fig.nodes, || {
            format!(
                "{name}: nodes differ, missing {:?}, extra {:?}",
                fig.nodes.difference(&nodes).collect::<Vec<_>>(),
                nodes.difference(&fig.nodes).collect::<Vec<_>>()
            )
        });
        report.record(edges == fig.edges, || {
            format!(
                "{name}: edges differ, missing {:?}, extra {:?}",
                fig.edges.difference(&edges).collect::<Vec<_>>(),
                edges.difference(&fig.edges).collect::<Vec<_>>()
            )
        });
    }
    Ok(report)
}
