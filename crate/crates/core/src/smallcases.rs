//! The annulus cases t = 2, 3 and the degree count behind the bound on
//! parallel families when the slopes are far apart.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::assembly::{delta_by_degree, graph_gs, trace_boundary, two_color_faces, AssemblyError, Color};
use crate::cutmodel::{
    build_standard_cut_model, enumerate_completions, same_face_pairs, transfer_along_strings,
    wrap, CornerMap, CutError, IntervalSpec,
};
use crate::fatgraph::{Dart, Edge, EdgeId, EmbeddedGraph, GraphError, Sign};
use crate::pairing::GraphPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmallCaseError {
    #[error("small cases exist for t = 2, 3 only (got {0})")]
    BadT(usize),
    #[error("no realization passes the filters")]
    NoRealization,
    #[error("no non-slidable completion")]
    NoCompletion,
    #[error("edge joining v{0} and v{1} is missing or not unique")]
    NoParallelEdge(usize, usize),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
}

/// One face of `G_{T,A}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    pub length: usize,
    pub side: Color,
    pub scharlemann: bool,
}

/// A candidate rotation system for the six-edge graph at t = 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub graph: EmbeddedGraph,
    pub face_lengths: Vec<usize>,
    pub order_preserving: bool,
    /// Set when the realization fails a filter and needs a second look.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnulusCase {
    pub t: usize,
    /// `(G_A, G_{T,A})`.
    pub pair: GraphPair,
    pub faces: Vec<FaceRecord>,
    /// Face length -> count.
    pub catalog: BTreeMap<usize, usize>,
    pub boundary_components: usize,
    pub delta: usize,
    /// Quoted, not computed.
    pub seifert: &'static str,
    pub realizations: Vec<Realization>,
}

fn non_slidable_top(t: usize) -> Result<EmbeddedGraph, SmallCaseError> {
    let m = build_standard_cut_model(t, 1)?;
    enumerate_completions(&m)?
        .into_iter()
        .find(|c| !c.slidable)
        .map(|c| c.top)
        .ok_or(SmallCaseError::NoCompletion)
}

/// `(e_j, s) -> (e_{j+1}, s)` with indices mod `n`.
fn cyclic_corners(n: usize) -> CornerMap {
    CornerMap::new((1..=n).flat_map(|j| {
        let k = j % n + 1;
        [(Dart::tail(j), Dart::tail(k)), (Dart::head(j), Dart::head(k))]
    }))
}

/// Every way to add `e_6` from `v3` to `v1` to the non-slidable t = 3 graph
/// giving a cellular torus graph without bigons.
pub fn t3_realizations() -> Result<Vec<Realization>, SmallCaseError> {
    let base = non_slidable_top(3)?;
    let corners = cyclic_corners(6);
    let mut out = Vec::new();
    for i in 0..base.degree(3) {
        for j in 0..base.degree(1) {
            let g = base.with_edge(Edge::new(6, 3, 1), i, j)?;
            if !g.is_toroidal_cellular() {
                continue;
            }
            let face_lengths = g.faces().lengths();
            if face_lengths.contains(&2) {
                continue;
            }
            let order_preserving = corners.is_order_preserving(&g, &g);
            out.push(Realization { graph: g, face_lengths, order_preserving, flagged: !order_preserving });
        }
    }
    Ok(out)
}

/// A face is a Scharlemann cycle when every edge on it is crossed from the
/// same label to the same other label, so all its corners sit in one gap
/// between consecutive labels.
pub fn detect_scharlemann_cycles(p: &GraphPair) -> Vec<usize> {
    let g = &p.g2;
    let label = |d: Dart| {
        g.edge(d.edge)
            .and_then(|e| e.labels)
            .map(|(a, b)| if d.end == 0 { (a, b) } else { (b, a) })
    };
    g.faces()
        .circuits
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let first = label(c[0]);
            matches!(first, Some((a, b)) if a != b) && c.iter().all(|&d| label(d) == first)
        })
        .map(|(i, _)| i)
        .collect()
}

pub fn build_annulus_case(t: usize) -> Result<AnnulusCase, SmallCaseError> {
    let (graph, realizations, seifert) = match t {
        2 => (non_slidable_top(2)?, Vec::new(), "(+0,1;-1/4,-1/4)"),
        3 => {
            let all = t3_realizations()?;
            let g = all
                .iter()
                .find(|r| r.order_preserving)
                .map(|r| r.graph.clone())
                .ok_or(SmallCaseError::NoRealization)?;
            (g, all, "(+0,1;-1/3,-1/6)")
        }
        _ => return Err(SmallCaseError::BadT(t)),
    };
    let n = graph.edge_count();
    let corners = cyclic_corners(n);
    if !corners.is_order_preserving(&graph, &graph) {
        return Err(AssemblyError::NotOrderPreserving.into());
    }
    let boundary = trace_boundary(&corners);
    // the capped annulus is a sphere: two vertices, n edges, n faces
    let ga = graph_gs(&graph, &boundary, n)?;
    let circuit_of = |d: Dart| boundary.iter().position(|c| c.contains(&d)).map(|i| i + 1);
    let edges: Vec<Edge> = graph
        .edges()
        .map(|e| Edge {
            sign: Some(Sign::Positive),
            labels: circuit_of(Dart::tail(e.id)).zip(circuit_of(Dart::head(e.id))),
            ..e.clone()
        })
        .collect();
    let gta = EmbeddedGraph::new(graph.vertex_count(), edges, graph.rotations().to_vec())?;
    let coloring = two_color_faces(&gta).map_err(AssemblyError::NotBipartite)?;
    let delta = delta_by_degree(&gta, boundary.len())?;
    let pair = GraphPair::identity(ga, gta).map_err(|_| SmallCaseError::NoRealization)?;
    let flagged = detect_scharlemann_cycles(&pair);
    let faces: Vec<FaceRecord> = pair
        .g2
        .faces()
        .circuits
        .iter()
        .enumerate()
        .map(|(i, c)| FaceRecord { length: c.len(), side: coloring[i], scharlemann: flagged.contains(&i) })
        .collect();
    let mut catalog = BTreeMap::new();
    for f in &faces {
        *catalog.entry(f.length).or_insert(0) += 1;
    }
    Ok(AnnulusCase {
        t,
        pair,
        faces,
        catalog,
        boundary_components: boundary.len(),
        delta,
        seifert,
        realizations,
    })
}

/// Solutions `(n, t, delta)` of `6t <= delta * t <= n (t + 2)` with
/// `delta >= delta_min` and `1 <= n <= n_max`.
pub fn corr2_scan(t_range: RangeInclusive<usize>, n_max: usize, delta_min: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for t in t_range.filter(|&t| t > 0) {
        for n in 1..=n_max {
            let top = n * (t + 2) / t;
            for delta in delta_min.max(6)..=top {
                out.push((n, t, delta));
            }
        }
    }
    out
}

/// Outcome of placing `a_i` in the t = 4, Δ = 6 configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corr2Certificate {
    /// Second-family shift: `x -> x + beta`.
    pub beta: i64,
    /// Whether `a_i` may be parallel to the existing edge between its ends.
    pub relaxed: bool,
    /// Cellular placements of `a_i`.
    pub embeddings: usize,
    /// For each placement, the number of same-face corner pairs available to
    /// `a_{i-1}` between the two transferred intervals.
    pub placements: Vec<usize>,
    /// The transferred intervals of the first placement.
    pub intervals: Option<[IntervalSpec; 2]>,
}

impl Corr2Certificate {
    pub fn is_empty(&self) -> bool {
        self.placements.iter().all(|&p| p == 0)
    }
}

/// Places the second-family edge `a_i` (i = 2) from `v_{i+2}` to
/// `v_{i+2+beta}` in the non-slidable t = 4 graph, in every face-compatible
/// way giving a torus graph, then counts where `a_{i-1}` could go: its ends
/// are carried along the strings from those of `a_i`.
pub fn corr2_t4_case(beta: i64, relaxed: bool) -> Result<Corr2Certificate, SmallCaseError> {
    let t = 4;
    let g = non_slidable_top(t)?;
    let i = 2i64;
    let (vt, vh) = (wrap(i + 2, t), wrap(i + 2 + beta, t));
    let mut same: Vec<EdgeId> =
        g.edges().filter(|e| [e.tail, e.head] == [vt, vh] || [e.tail, e.head] == [vh, vt]).map(|e| e.id).collect();
    if same.len() != 1 {
        return Err(SmallCaseError::NoParallelEdge(vt, vh));
    }
    let existing = same.remove(0);
    let a = g.edge_count() + 1;
    let faces = g.faces();
    let rt = g.rotation(vt);
    let rh = g.rotation(vh);
    let mut embeddings = 0;
    let mut placements = Vec::new();
    let mut intervals = None;
    for (ti, _) in rt.iter().enumerate() {
        for (hi, _) in rh.iter().enumerate() {
            let ft = faces.face_of(rt[(ti + 1) % rt.len()]);
            let fh = faces.face_of(rh[(hi + 1) % rh.len()]);
            if ft != fh {
                continue;
            }
            let h = g.with_edge(Edge::new(a, vt, vh), ti, hi)?;
            if h.genus()? != 1 {
                continue;
            }
            let bigon = h.faces().circuits.iter().any(|c| {
                let mut es: Vec<EdgeId> = c.iter().map(|d| d.edge).collect();
                es.sort_unstable();
                es == [existing, a]
            });
            if bigon && !relaxed {
                continue;
            }
            embeddings += 1;
            let anchors = |e: EdgeId| (2..=t + 2).contains(&e);
            let carry = |d| transfer_along_strings(&h, d, anchors, -1, &h);
            let (Some(x), Some(y)) = (carry(Dart::tail(a)), carry(Dart::head(a))) else {
                placements.push(0);
                continue;
            };
            placements.push(same_face_pairs(&h, &x, &y));
            intervals.get_or_insert([x, y]);
        }
    }
    Ok(Corr2Certificate { beta, relaxed, embeddings, placements, intervals })
}

/// Both second-family shifts under the strict hypothesis.
pub fn corr2_t4_contradiction() -> Result<[Corr2Certificate; 2], SmallCaseError> {
    Ok([corr2_t4_case(-1, false)?, corr2_t4_case(1, false)?])
}
