//! The manifold `M_t` built from the non-slidable completion, and the
//! twice-punctured torus `S` assembled from disk faces in the cut model.
//!
//! Edges of `G_{T,S}` are copies `e_j`, `e'_j`, `e''_j` of the family edges;
//! copy `c` of `e_j` has id `c * (t + 2) + j`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::cutmodel::{
    build_standard_cut_model, enumerate_completions, BoundaryComplex, Completion, CornerMap,
    CutError, DiskFace, FaceKind, Level,
};
use crate::fatgraph::{Dart, Edge, EdgeId, EmbeddedGraph, GraphError, Sign};
use crate::freegroup::Word;
use crate::pairing::GraphPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("t = {0} is below 4; use the small cases")]
    TooSmall(usize),
    #[error("no non-slidable completion for t = {0}")]
    NoCompletion(usize),
    #[error("corners do not preserve the order along the strings")]
    NotOrderPreserving,
    #[error("vertex degrees are not uniform")]
    NonUniformDegree,
    #[error("degree {degree} is not divisible by {boundary} boundary components")]
    Indivisible { degree: usize, boundary: usize },
    #[error("faces admit no proper 2-colouring; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("designated face {0} not found")]
    MissingFace(&'static str),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn copy_id(t: usize, j: usize, c: usize) -> EdgeId {
    c * (t + 2) + j
}

/// Inverse of [`copy_id`]: (family index, copy).
pub fn copy_of(t: usize, id: EdgeId) -> (usize, usize) {
    ((id - 1) % (t + 2) + 1, (id - 1) / (t + 2))
}

/// Copies of `e_j` present in `G_{T,S}`.
pub fn copies(t: usize, j: usize) -> &'static [usize] {
    if j == 1 || j == t + 2 {
        &[0]
    } else if j == 2 || j == t + 1 {
        &[0, 1]
    } else {
        &[0, 1, 2]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MtModel {
    pub t: usize,
    pub completion: Completion,
    /// Strings in the order met along the boundary after gluing.
    pub boundary: Vec<Vec<usize>>,
}

impl MtModel {
    pub fn boundary_is_single_circuit(&self) -> bool {
        self.boundary.len() == 1 && self.boundary[0].len() == self.t
    }
}

pub fn build_mt(t: usize) -> Result<MtModel, AssemblyError> {
    if t < 4 {
        return Err(AssemblyError::TooSmall(t));
    }
    let m = build_standard_cut_model(t, 1)?;
    let completion = enumerate_completions(&m)?
        .into_iter()
        .find(|c| !c.slidable)
        .ok_or(AssemblyError::NoCompletion(t))?;
    // string k runs from v¹_k to v²_{k+1}, which the gluing identifies with v¹_{k+1}
    let start: HashMap<usize, usize> = m.strings.iter().map(|s| (s.from, s.id)).collect();
    let mut seen = vec![false; t + 1];
    let mut boundary = Vec::new();
    for s in &m.strings {
        if seen[s.id] {
            continue;
        }
        let mut circuit = Vec::new();
        let mut k = s.id;
        while !seen[k] {
            seen[k] = true;
            circuit.push(k);
            k = start[&m.strings[k - 1].to];
        }
        boundary.push(circuit);
    }
    Ok(MtModel { t, completion, boundary })
}

/// `G_{T,S}`: each family edge replaced by its copies, inserted in copy order
/// at the tail and reversed at the head. Every edge is positive.
pub fn gts_graph(mt: &MtModel) -> Result<EmbeddedGraph, AssemblyError> {
    let t = mt.t;
    let base = &mt.completion.top;
    let mut edges = Vec::new();
    for e in base.edges() {
        for &c in copies(t, e.id) {
            edges.push(Edge::new(copy_id(t, e.id, c), e.tail, e.head).with_sign(Sign::Positive));
        }
    }
    let rotations = (1..=t)
        .map(|v| {
            base.rotation(v)
                .iter()
                .flat_map(|d| {
                    let mut ids: Vec<EdgeId> = copies(t, d.edge).iter().map(|&c| copy_id(t, d.edge, c)).collect();
                    if d.end == 1 {
                        ids.reverse();
                    }
                    ids.into_iter().map(move |id| Dart { edge: id, end: d.end })
                })
                .collect()
        })
        .collect();
    Ok(EmbeddedGraph::new(t, edges, rotations)?)
}

/// Corners of the faces of S, from T¹ ends to T² ends: the bigons `F'_j`,
/// their parallel copies, and the hexagon.
pub fn surface_corners(t: usize) -> CornerMap {
    let id = |j, c| copy_id(t, j, c);
    let mut pairs = Vec::new();
    let mut shift = |c: usize, range: std::ops::RangeInclusive<usize>| {
        for j in range {
            for end in 0..2 {
                pairs.push((Dart { edge: id(j, c), end }, Dart { edge: id(j + 1, c), end }));
            }
        }
    };
    shift(0, 1..=t + 1);
    shift(1, 2..=t);
    shift(2, 3..=t - 1);
    let hex = [
        ((t + 1, 1, 0), (1, 0, 1)),
        ((t + 1, 1, 1), (3, 2, 0)),
        ((t + 2, 0, 1), (3, 2, 1)),
        ((t + 2, 0, 0), (2, 1, 1)),
        ((t, 2, 1), (2, 1, 0)),
        ((t, 2, 0), (1, 0, 0)),
    ];
    for ((j, c, s), (k, d, r)) in hex {
        pairs.push((Dart { edge: id(j, c), end: s }, Dart { edge: id(k, d), end: r }));
    }
    CornerMap::new(pairs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceAssembly {
    pub t: usize,
    pub gts: EmbeddedGraph,
    pub corners: CornerMap,
    pub faces: Vec<DiskFace>,
    /// The boundary circuits of S as sequences of edge ends.
    pub boundary: Vec<Vec<Dart>>,
    /// Colour of each face of `G_{T,S}`, indexed as in `gts.faces()`.
    pub coloring: Vec<Color>,
    pub gs: EmbeddedGraph,
}

pub fn build_surface_s(mt: &MtModel) -> Result<SurfaceAssembly, AssemblyError> {
    let t = mt.t;
    let gts = gts_graph(mt)?;
    let corners = surface_corners(t);
    if !corners.is_order_preserving(&gts, &gts) {
        return Err(AssemblyError::NotOrderPreserving);
    }
    let faces = corners.trace_disks(&gts);
    let boundary = trace_boundary(&corners);
    let coloring = two_color_faces(&gts).map_err(AssemblyError::NotBipartite)?;
    let gs = graph_gs(&gts, &boundary, faces.len())?;
    Ok(SurfaceAssembly { t, gts, corners, faces, boundary, coloring, gs })
}

/// Cycles of the corner map, reading each T² end as the same end on T.
pub fn trace_boundary(corners: &CornerMap) -> Vec<Vec<Dart>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &p in corners.forward.keys() {
        if seen.contains(&p) {
            continue;
        }
        let mut c = Vec::new();
        let mut x = p;
        while seen.insert(x) {
            c.push(x);
            x = corners.forward[&x];
        }
        out.push(c);
    }
    out
}

/// `G_S`: one vertex per boundary circuit, the rotation running along the
/// circuit or against it. The circuit orientations are the ones whose faces
/// are the disks of S; an edge is negative when its ends see opposite
/// orientations.
pub fn graph_gs(
    gts: &EmbeddedGraph,
    boundary: &[Vec<Dart>],
    disk_count: usize,
) -> Result<EmbeddedGraph, AssemblyError> {
    let n = boundary.len();
    let circuit: HashMap<Dart, usize> = boundary
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |&d| (d, i + 1)))
        .collect();
    let mut fallback = None;
    for mask in 0..(1u32 << n) {
        if mask & 1 == 1 {
            continue;
        }
        let flip = |i: usize| mask >> (i - 1) & 1 == 1;
        let rotations = boundary
            .iter()
            .enumerate()
            .map(|(i, c)| if flip(i + 1) { c.iter().rev().copied().collect() } else { c.clone() })
            .collect();
        let edges = gts
            .edges()
            .map(|e| {
                let (a, b) = (circuit[&Dart::tail(e.id)], circuit[&Dart::head(e.id)]);
                Edge {
                    id: e.id,
                    tail: a,
                    head: b,
                    sign: Some(if flip(a) == flip(b) { Sign::Positive } else { Sign::Negative }),
                    labels: Some((e.tail, e.head)),
                }
            })
            .collect();
        let g = EmbeddedGraph::new(n, edges, rotations)?;
        if g.faces().len() == disk_count {
            return Ok(g);
        }
        fallback.get_or_insert(g);
    }
    fallback.ok_or(AssemblyError::MissingFace("boundary"))
}

/// V - E + F for the capped surface, with the circuits as vertices.
pub fn euler_of_assembly(a: &SurfaceAssembly) -> i64 {
    a.boundary.len() as i64 - a.gts.edge_count() as i64 + a.faces.len() as i64
}

/// Intersection number of the boundary slopes, read off from a uniform
/// vertex degree: each vertex of the graph meets every boundary circuit of
/// the other surface the same number of times.
pub fn delta_by_degree(g: &EmbeddedGraph, boundary_components: usize) -> Result<usize, AssemblyError> {
    let d = g.degree(1);
    if (1..=g.vertex_count()).any(|v| g.degree(v) != d) {
        return Err(AssemblyError::NonUniformDegree);
    }
    if boundary_components == 0 || !d.is_multiple_of(boundary_components) {
        return Err(AssemblyError::Indivisible { degree: d, boundary: boundary_components });
    }
    Ok(d / boundary_components)
}

pub fn compute_delta_s_t(a: &SurfaceAssembly) -> Result<usize, AssemblyError> {
    delta_by_degree(&a.gts, a.boundary.len())
}

/// Proper 2-colouring of a graph given by adjacency pairs, or an odd cycle.
pub fn two_color(n: usize, adjacent: &[(usize, usize)]) -> Result<Vec<Color>, Vec<usize>> {
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in adjacent {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Color::Black);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &y in &nbrs[x] {
                match color[y] {
                    None => {
                        color[y] = Some(if cx == Color::Black { Color::White } else { Color::Black });
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return Err(odd_cycle(&parent, x, y)),
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

fn odd_cycle(parent: &[usize], x: usize, y: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let (px, py) = (path(x), path(y));
    let common = px.iter().find(|v| py.contains(v)).copied().unwrap_or(x);
    let mut cycle: Vec<usize> = px.iter().take_while(|&&v| v != common).copied().collect();
    cycle.push(common);
    let back: Vec<usize> = py.iter().take_while(|&&v| v != common).copied().collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

/// Colours the faces of a graph on T so that faces meeting along an edge
/// differ.
pub fn two_color_faces(g: &EmbeddedGraph) -> Result<Vec<Color>, Vec<usize>> {
    let faces = g.faces();
    let adj: Vec<(usize, usize)> = g
        .edge_ids()
        .map(|e| (faces.face_of(Dart::tail(e)), faces.face_of(Dart::head(e))))
        .collect();
    two_color(faces.len(), &adj)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Separation {
    /// Components of the complement of S.
    pub components: usize,
    /// Disks with the same region on both sides.
    pub one_sided: usize,
}

/// Complementary regions of S: cut the boundary of the handlebody along the
/// disk boundaries, glue the two copies of each face of `G_{T,S}`, and join
/// the regions along either side of each disk.
pub fn separation(a: &SurfaceAssembly) -> Separation {
    let cx = BoundaryComplex::new(&a.gts, &a.gts, &a.corners);
    let curves = cx.curves(&a.faces);
    let mut regions = cx.regions(&curves);
    for e in a.gts.edge_ids() {
        for d in [Dart::tail(e), Dart::head(e)] {
            let h1 = cx.graph_half_edge(Level::Bottom, d);
            let h2 = cx.graph_half_edge(Level::Top, d);
            let (f1, f2) = (cx.face_of_half_edge(h1), cx.face_of_half_edge(h2 ^ 1));
            regions.union(f1, f2);
        }
    }
    let mut sides = Vec::new();
    for c in &curves {
        let left: Vec<usize> = c.iter().map(|&h| cx.face_of_half_edge(h)).collect();
        let right: Vec<usize> = c.iter().map(|&h| cx.face_of_half_edge(h ^ 1)).collect();
        for w in left.windows(2) {
            regions.union(w[0], w[1]);
        }
        for w in right.windows(2) {
            regions.union(w[0], w[1]);
        }
        sides.push((left[0], right[0]));
    }
    let one_sided = sides.iter().filter(|&&(l, r)| regions.find(l) == regions.find(r)).count();
    Separation { components: regions.count(), one_sided }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    B,
    W,
}

/// The designated disks of one side: the faces of `G_{T,S}` playing the roles
/// of the generators `a` and `b`.
pub fn designated_faces(a: &SurfaceAssembly, side: Side) -> Result<(usize, usize), AssemblyError> {
    let t = a.t;
    let faces = a.gts.faces();
    let has = |f: &Vec<Dart>, id: EdgeId| f.iter().any(|d| d.edge == id);
    let find = |name, pred: &dyn Fn(usize, &Vec<Dart>) -> bool| {
        let hits: Vec<usize> =
            faces.circuits.iter().enumerate().filter(|(i, f)| pred(*i, f)).map(|(i, _)| i).collect();
        match hits[..] {
            [i] => Ok(i),
            _ => Err(AssemblyError::MissingFace(name)),
        }
    };
    let x = find("x", &|_, f| f.len() == 2 && has(f, copy_id(t, 2, 0)))?;
    let black = a.coloring[x];
    let last = copy_id(t, t + 2, 0);
    match side {
        Side::B => {
            let y = find("y", &|i, f| f.len() == t && has(f, last) && a.coloring[i] == black)?;
            Ok((x, y))
        }
        Side::W => {
            let xw = find("X", &|i, f| {
                let mut vs: Vec<usize> = f.iter().map(|d| a.gts.vertex_of(*d)).collect();
                vs.sort_unstable();
                f.len() == 2 && a.coloring[i] != black && vs == [3, 4]
            })?;
            let yw = find("Y", &|i, f| f.len() == t + 4 && has(f, last) && a.coloring[i] != black)?;
            Ok((xw, yw))
        }
    }
}

/// Reads the designated disks met along the first boundary circuit: `a` for
/// the bigon, `b` for the other disk, inverted when the circuit crosses
/// against the side's orientation.
pub fn boundary_word(a: &SurfaceAssembly, side: Side) -> Result<Word, AssemblyError> {
    let (fa, fb) = designated_faces(a, side)?;
    let faces = a.gts.faces();
    let orient: i8 = match side {
        Side::B => -1,
        Side::W => 1,
    };
    let mut letters = Vec::new();
    for &p in &a.boundary[0] {
        for (d, s) in [(p, 1i8), (p.opposite(), -1)] {
            let f = faces.face_of(d);
            let g = if f == fa {
                1
            } else if f == fb {
                2
            } else {
                continue;
            };
            letters.push(g * s * orient);
        }
    }
    Ok(Word::new(&letters))
}

/// Expected boundary words: `(ba)^2 b^(t-2)` and `b^(t+3) aba`.
pub fn expected_word(t: usize, side: Side) -> Word {
    let s = match side {
        Side::B => format!("baba{}", "b".repeat(t - 2)),
        Side::W => format!("{}aba", "b".repeat(t + 3)),
    };
    s.parse().expect("letters are valid")
}

/// Copy index of each end along a circuit, with runs collapsed.
pub fn class_order(t: usize, circuit: &[Dart]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for d in circuit {
        let c = copy_of(t, d.edge).1;
        if out.last() != Some(&c) {
            out.push(c);
        }
    }
    out
}

/// The pair `(G_S, G_{T,S})` sharing edge ids.
pub fn surface_pair(a: &SurfaceAssembly) -> GraphPair {
    GraphPair::identity(a.gs.clone(), a.gts.clone()).expect("both graphs carry the same edges")
}

/// Sizes of the parallelism classes of `G_S`, largest first.
pub fn gs_class_sizes(a: &SurfaceAssembly) -> Result<Vec<usize>, AssemblyError> {
    let mut s = a.gs.reduced_graph()?.sizes();
    s.sort_unstable_by(|x, y| y.cmp(x));
    Ok(s)
}

pub fn hexagon_count(a: &SurfaceAssembly) -> usize {
    a.faces.iter().filter(|f| f.kind == FaceKind::Hexagon).count()
}

/// Per-face summary of S for reports.
pub fn face_catalog(a: &SurfaceAssembly) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for f in &a.faces {
        *m.entry(f.sides.len()).or_insert(0) += 1;
    }
    m
}
