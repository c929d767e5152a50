//! DOT and JSON renderings of the graphs.

use std::fmt::Write;

use bigon_core::assembly::{build_mt, build_surface_s, AssemblyError, MtModel, SurfaceAssembly};
use bigon_core::cutmodel::build_standard_cut_model;
use bigon_core::fatgraph::{EmbeddedGraph, Sign};
use serde_json::{json, Value};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Gts,
    Gs,
    Mt,
}

impl Subject {
    pub fn name(self) -> &'static str {
        match self {
            Subject::Gts => "gts",
            Subject::Gs => "gs",
            Subject::Mt => "mt",
        }
    }
}

/// Undirected multigraph; edges coloured by parallelism class, negative
/// edges dashed.
pub fn to_dot(name: &str, g: &EmbeddedGraph) -> String {
    let classes = g.parallelism_classes().unwrap_or_else(|_| g.edge_ids().map(|e| vec![e]).collect());
    let class_of = |e| classes.iter().position(|c| c.contains(&e)).unwrap_or(0);
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for v in 1..=g.vertex_count() {
        writeln!(s, "  v{v} [label=\"{v}\"];").unwrap();
    }
    for e in g.edges() {
        let k = class_of(e.id);
        let style = if e.sign == Some(Sign::Negative) { ", style=dashed" } else { "" };
        writeln!(
            s,
            "  v{} -- v{} [label=\"e{}\", color=\"{}\", class={k}{style}];",
            e.tail,
            e.head,
            e.id,
            PALETTE[k % PALETTE.len()]
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}

fn sizes(g: &EmbeddedGraph) -> Value {
    match g.reduced_graph() {
        Ok(r) => {
            let mut v = r.sizes();
            v.sort_unstable_by(|a, b| b.cmp(a));
            json!(v)
        }
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn surface(t: usize) -> Result<(MtModel, SurfaceAssembly), AssemblyError> {
    let mt = build_mt(t)?;
    let s = build_surface_s(&mt)?;
    Ok((mt, s))
}

/// Graph shown for a subject: `G_{T,S}`, `G_S`, or the completed T graph of `M_t`.
pub fn graph_for(subject: Subject, t: usize) -> Result<EmbeddedGraph, AssemblyError> {
    let (mt, s) = surface(t)?;
    Ok(match subject {
        Subject::Gts => s.gts,
        Subject::Gs => s.gs,
        Subject::Mt => mt.completion.top,
    })
}

pub fn json_for(subject: Subject, t: usize) -> Result<Value, AssemblyError> {
    let (mt, s) = surface(t)?;
    Ok(match subject {
        Subject::Gts => json!({
            "subject": "gts",
            "t": t,
            "class_sizes": sizes(&s.gts),
            "graph": s.gts,
        }),
        Subject::Gs => json!({
            "subject": "gs",
            "t": t,
            "class_sizes": sizes(&s.gs),
            "graph": s.gs,
        }),
        Subject::Mt => json!({
            "subject": "mt",
            "t": t,
            "cut_model": build_standard_cut_model(t, 1)?,
            "mt": mt,
        }),
    })
}
