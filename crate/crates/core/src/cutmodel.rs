//! The cut-open product `M_T = T x I` as a combinatorial object: two copies
//! T¹ (bottom) and T² (top) of the torus graph, joined by strings running
//! from `v¹_k` to `v²_{k+1}`, and disk faces glued in along corners.
//!
//! Edge `e_j` on T¹ cobounds the bigon `F'_j` with `e_{j+1}` on T². The
//! standard model carries `e_1..e_{t+1}` on T¹ and `e_2..e_{t+2}` on T²; the
//! position of `e²_1` is what [`enumerate_completions`] searches for.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{
    cyclic_eq, delta, gcd, Dart, Edge, EdgeId, EmbeddedGraph, GraphError, UnionFind,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("gcd({t}, {alpha}) != 1")]
    GcdViolation { t: usize, alpha: usize },
    #[error("t = {0} is outside the supported range")]
    BadT(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `k` reduced into `1..=t`.
pub fn wrap(k: i64, t: usize) -> usize {
    ((k - 1).rem_euclid(t as i64) + 1) as usize
}

fn check_params(t: usize, alpha: usize) -> Result<(), CutError> {
    if t < 2 {
        return Err(CutError::BadT(t));
    }
    if alpha == 0 || alpha >= t || gcd(t as u64, alpha as u64) != 1 {
        return Err(CutError::GcdViolation { t, alpha });
    }
    Ok(())
}

/// The graph in T carrying the parallel family `a_1..a_{t+1}`, where `a_j`
/// runs from `u_j` to `u_{j+alpha}` and `a_{t+1}` is parallel to `a_1`.
pub fn family_graph(t: usize, alpha: usize) -> Result<EmbeddedGraph, CutError> {
    check_params(t, alpha)?;
    let a = alpha as i64;
    let w = |k: i64| wrap(k, t);
    let mut edges: Vec<Edge> = (1..=t).map(|j| Edge::new(j, j, w(j as i64 + a))).collect();
    edges.push(Edge::new(t + 1, 1, w(1 + a)));
    let mut rot: Vec<Vec<Dart>> = (1..=t)
        .map(|k| vec![Dart::tail(k), Dart::head(w(k as i64 - a))])
        .collect();
    let top = w(1 + a);
    if t == 2 {
        rot[0] = vec![Dart::tail(3), Dart::tail(1), Dart::head(2)];
        rot[1] = vec![Dart::head(3), Dart::head(1), Dart::tail(2)];
    } else {
        rot[0] = vec![Dart::tail(t + 1), Dart::tail(1), Dart::head(w(1 - a))];
        rot[top - 1] = vec![Dart::head(t + 1), Dart::head(1), Dart::tail(top)];
    }
    Ok(EmbeddedGraph::new(t, edges, rot)?)
}

/// Relabels edges by `+de` and vertices by `+dv` (vertices taken mod `t`).
pub fn shift_graph(g: &EmbeddedGraph, de: i64, dv: i64) -> EmbeddedGraph {
    let t = g.vertex_count();
    let edges = g
        .edges()
        .map(|e| Edge {
            id: (e.id as i64 + de) as usize,
            tail: wrap(e.tail as i64 + dv, t),
            head: wrap(e.head as i64 + dv, t),
            sign: e.sign,
            labels: e.labels,
        })
        .collect();
    let mut rot = vec![Vec::new(); t];
    for v in 1..=t {
        rot[wrap(v as i64 + dv, t) - 1] = g
            .rotation(v)
            .iter()
            .map(|d| Dart { edge: (d.edge as i64 + de) as usize, end: d.end })
            .collect();
    }
    EmbeddedGraph::new(t, edges, rot).expect("relabelling keeps the rotation system valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Bottom,
    Top,
}

/// An open interval `(left, right)` on a vertex, read in the rotation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalSpec {
    pub vertex: usize,
    pub left: Dart,
    pub right: Dart,
}

/// A corner of a disk face: a subarc of the string at `bottom`'s vertex
/// joining the T¹ end `bottom` to the T² end `top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub string: usize,
    pub position: usize,
    pub bottom: Dart,
    pub top: Dart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FaceSide {
    pub level: Level,
    pub edge: EdgeId,
    /// Corner reached at the far end of this side.
    pub corner: Corner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Bigon,
    Hexagon,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiskFace {
    pub kind: FaceKind,
    pub sides: Vec<FaceSide>,
}

impl DiskFace {
    pub fn edge_count(&self) -> usize {
        self.sides.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringArc {
    pub id: usize,
    pub from: usize,
    pub to: usize,
    /// Corners in order along the string.
    pub corners: Vec<(Dart, Dart)>,
}

/// Corner map from T¹ ends to T² ends. The string through a corner joins
/// `v¹_k` to `v²_{k+1}`, so the image of an end at `v¹_k` sits at `v²_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerMap {
    #[serde(serialize_with = "pairs")]
    pub forward: BTreeMap<Dart, Dart>,
    #[serde(skip)]
    pub backward: BTreeMap<Dart, Dart>,
}

fn pairs<S: serde::Serializer>(m: &BTreeMap<Dart, Dart>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(m.iter())
}

impl CornerMap {
    pub fn new(pairs: impl IntoIterator<Item = (Dart, Dart)>) -> Self {
        let forward: BTreeMap<Dart, Dart> = pairs.into_iter().collect();
        let backward = forward.iter().map(|(&a, &b)| (b, a)).collect();
        CornerMap { forward, backward }
    }

    /// Checks that along every string the corners keep the rotation order:
    /// pushing the rotation at `v¹_k` through the map gives the rotation at
    /// `v²_{k+1}`.
    pub fn is_order_preserving(&self, bottom: &EmbeddedGraph, top: &EmbeddedGraph) -> bool {
        let t = bottom.vertex_count();
        (1..=t).all(|k| {
            let img: Option<Vec<Dart>> =
                bottom.rotation(k).iter().map(|d| self.forward.get(d).copied()).collect();
            img.is_some_and(|img| cyclic_eq(&img, top.rotation(wrap(k as i64 + 1, t))))
        })
    }

    /// Disk faces traced from the corners: follow a T¹ edge, cross a corner
    /// up, follow a T² edge, cross a corner down, and repeat.
    pub fn trace_disks(&self, bottom: &EmbeddedGraph) -> Vec<DiskFace> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for e in bottom.edge_ids() {
            let start = Dart::tail(e);
            if seen.contains(&start) || !self.forward.contains_key(&start) {
                continue;
            }
            let mut sides = Vec::new();
            let mut p = start;
            loop {
                seen.insert(p);
                seen.insert(p.opposite());
                let far = p.opposite();
                let q = self.forward[&far];
                sides.push(FaceSide { level: Level::Bottom, edge: p.edge, corner: self.corner(bottom, far) });
                let back = q.opposite();
                let r = self.backward[&back];
                sides.push(FaceSide { level: Level::Top, edge: q.edge, corner: self.corner(bottom, r) });
                p = r;
                if p == start {
                    break;
                }
            }
            let kind = match sides.len() {
                2 => FaceKind::Bigon,
                6 => FaceKind::Hexagon,
                _ => FaceKind::Other,
            };
            out.push(DiskFace { kind, sides });
        }
        out
    }

    fn corner(&self, bottom: &EmbeddedGraph, b: Dart) -> Corner {
        let (v, i) = bottom.position(b);
        Corner { string: v, position: i, bottom: b, top: self.forward[&b] }
    }

    pub fn strings(&self, bottom: &EmbeddedGraph) -> Vec<StringArc> {
        let t = bottom.vertex_count();
        (1..=t)
            .map(|k| StringArc {
                id: k,
                from: k,
                to: wrap(k as i64 + 1, t),
                corners: bottom
                    .rotation(k)
                    .iter()
                    .filter_map(|d| self.forward.get(d).map(|&q| (*d, q)))
                    .collect(),
            })
            .collect()
    }
}

/// Bigon corners `(e_j, s) -> (e_{j+1}, s)` for `j` in `range`.
pub fn bigon_corners(range: std::ops::RangeInclusive<EdgeId>) -> CornerMap {
    CornerMap::new(range.flat_map(|j| {
        [(Dart::tail(j), Dart::tail(j + 1)), (Dart::head(j), Dart::head(j + 1))]
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutModel {
    pub t: usize,
    pub alpha: usize,
    /// T¹
    pub g_bot: EmbeddedGraph,
    /// T²
    pub g_top: EmbeddedGraph,
    pub corners: CornerMap,
    pub strings: Vec<StringArc>,
    pub faces: Vec<DiskFace>,
}

impl CutModel {
    /// Vertex and edge indices are preserved by the gluing, so the image of
    /// `e¹_j` is `e²_j` whenever both exist.
    pub fn psi_edge(&self, j: EdgeId) -> Option<EdgeId> {
        (self.g_bot.has_edge(j) && self.g_top.has_edge(j)).then_some(j)
    }

    pub fn without_face(&self, index: usize) -> CutModel {
        let mut m = self.clone();
        m.faces.remove(index);
        m
    }
}

pub fn build_standard_cut_model(t: usize, alpha: usize) -> Result<CutModel, CutError> {
    let g_bot = family_graph(t, alpha)?;
    let g_top = shift_graph(&g_bot, 1, 1);
    let corners = bigon_corners(1..=t + 1);
    let strings = corners.strings(&g_bot);
    let faces = corners.trace_disks(&g_bot);
    Ok(CutModel { t, alpha, g_bot, g_top, corners, strings, faces })
}

/// Nearest darts on either side of `d` (excluding `d`) whose edges satisfy
/// `keep`.
pub fn bounding_darts(g: &EmbeddedGraph, d: Dart, keep: impl Fn(EdgeId) -> bool) -> Option<(Dart, Dart)> {
    let mut left = g.pred(d);
    while !keep(left.edge) || left == d {
        left = g.pred(left);
        if left == d {
            return None;
        }
    }
    let mut right = g.succ(d);
    while !keep(right.edge) || right == d {
        right = g.succ(right);
        if right == d {
            return None;
        }
    }
    Some((left, right))
}

/// Insertion slots strictly inside `(left, right)`: a slot `i` means "just
/// after position `i`" of the rotation.
pub fn slots_in(g: &EmbeddedGraph, iv: &IntervalSpec) -> Vec<usize> {
    let r = g.rotation(iv.vertex);
    let (_, mut i) = g.position(iv.left);
    let mut out = Vec::new();
    loop {
        out.push(i);
        i = (i + 1) % r.len();
        if r[i] == iv.right {
            break;
        }
    }
    out
}

/// Corners strictly inside `(left, right)`, each named by the dart that
/// follows it; the face through that corner is the face of that dart.
pub fn corners_in(g: &EmbeddedGraph, iv: &IntervalSpec) -> Vec<Dart> {
    let mut out = Vec::new();
    let mut x = iv.left;
    loop {
        x = g.succ(x);
        out.push(x);
        if x == iv.right {
            break;
        }
    }
    out
}

/// Intervals that the ends of `edge` (present in the graph at `from`) pin down
/// in the graph at the other level: the gluing preserves indices, so each end
/// must sit between the nearest ends of edges present on both levels.
pub fn transfer_constraints(
    m: &CutModel,
    edge: EdgeId,
    from: Level,
) -> Result<Vec<IntervalSpec>, CutError> {
    let (src, dst) = match from {
        Level::Bottom => (&m.g_bot, &m.g_top),
        Level::Top => (&m.g_top, &m.g_bot),
    };
    transfer_between(src, dst, edge)
}

fn transfer_between(
    src: &EmbeddedGraph,
    dst: &EmbeddedGraph,
    edge: EdgeId,
) -> Result<Vec<IntervalSpec>, CutError> {
    if !src.has_edge(edge) {
        return Err(GraphError::UnknownEdge(edge).into());
    }
    let mut out = Vec::new();
    for d in [Dart::tail(edge), Dart::head(edge)] {
        let (left, right) = bounding_darts(src, d, |e| e != edge && dst.has_edge(e))
            .ok_or(GraphError::UnknownEdge(edge))?;
        out.push(IntervalSpec { vertex: src.vertex_of(d), left, right });
    }
    Ok(out)
}

/// Carries the interval around an end `d` of `g_from`, bounded by the ends of
/// edges having corners (`anchors`), along the strings to `g_to`. Edge indices
/// shift by `shift` and the vertex by the same amount.
pub fn transfer_along_strings(
    g_from: &EmbeddedGraph,
    d: Dart,
    anchors: impl Fn(EdgeId) -> bool,
    shift: i64,
    g_to: &EmbeddedGraph,
) -> Option<IntervalSpec> {
    let (left, right) = bounding_darts(g_from, d, anchors)?;
    let mv = |x: Dart| Dart { edge: (x.edge as i64 + shift) as usize, end: x.end };
    let (left, right) = (mv(left), mv(right));
    let vertex = g_to.vertex_of(left);
    (g_to.vertex_of(right) == vertex).then_some(IntervalSpec { vertex, left, right })
}

/// Number of pairs of corners, one in each interval, lying on a common face.
pub fn same_face_pairs(g: &EmbeddedGraph, a: &IntervalSpec, b: &IntervalSpec) -> usize {
    let faces = g.faces();
    let ca = corners_in(g, a);
    let cb = corners_in(g, b);
    ca.iter()
        .map(|x| cb.iter().filter(|y| faces.face_of(*x) == faces.face_of(**y)).count())
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Completion {
    pub t: usize,
    pub alpha: usize,
    /// Neighbours of the two ends of `e²_1` in the completed T² graph.
    pub placement: [IntervalSpec; 2],
    /// T² graph with `e_1..e_{t+2}`.
    pub top: EmbeddedGraph,
    /// T¹ graph with the forced `e¹_{t+2}`.
    pub bottom: EmbeddedGraph,
    pub slidable: bool,
    pub delta: u64,
}

pub fn enumerate_completions(m: &CutModel) -> Result<Vec<Completion>, CutError> {
    let t = m.t;
    let ivs = transfer_constraints(m, 1, Level::Bottom)?;
    let e1 = m.g_bot.edge(1).cloned().ok_or(GraphError::UnknownEdge(1))?;
    let mut out = Vec::new();
    for &ts in &slots_in(&m.g_top, &ivs[0]) {
        for &hs in &slots_in(&m.g_top, &ivs[1]) {
            let mut e = e1.clone();
            e.sign = None;
            let top = m.g_top.with_edge(e, ts, hs)?;
            if !top.is_toroidal_cellular() {
                continue;
            }
            let classes = top.parallelism_classes()?;
            if classes.iter().any(|c| c.len() > 1 && c.contains(&1)) {
                continue;
            }
            let Some(bottom) = force_last_edge(m, &top)? else { continue };
            let d = completion_delta(&top, t)?;
            let placement = [Dart::tail(1), Dart::head(1)].map(|x| IntervalSpec {
                vertex: top.vertex_of(x),
                left: top.pred(x),
                right: top.succ(x),
            });
            out.push(Completion {
                t,
                alpha: m.alpha,
                placement,
                top,
                bottom,
                slidable: d == 0,
                delta: d,
            });
        }
    }
    Ok(out)
}

fn force_last_edge(m: &CutModel, top: &EmbeddedGraph) -> Result<Option<EmbeddedGraph>, CutError> {
    let last = m.t + 2;
    let ivs = transfer_between(top, &m.g_bot, last)?;
    let e = top.edge(last).cloned().ok_or(GraphError::UnknownEdge(last))?;
    for &ts in &slots_in(&m.g_bot, &ivs[0]) {
        for &hs in &slots_in(&m.g_bot, &ivs[1]) {
            let g = m.g_bot.with_edge(e.clone(), ts, hs)?;
            if (1..=m.t).all(|v| cyclic_eq(g.rotation(v), top.rotation(v))) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

fn completion_delta(top: &EmbeddedGraph, t: usize) -> Result<u64, CutError> {
    let a = top.cycle_slope(&[1, t + 1])?;
    let b = top.cycle_slope(&[2, t + 2])?;
    Ok(delta(a, b))
}

pub fn is_slidable(c: &Completion) -> Result<bool, CutError> {
    Ok(completion_delta(&c.top, c.t)? == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extension {
    /// The family through the completion has exactly this many edges.
    Exact(usize),
    /// The test does not bound the family.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub extension: Extension,
    /// Same-face corner pairs available to an edge `e_0` before `e_1`.
    pub before: usize,
    /// Same-face corner pairs available to an edge `e_{t+3}` after `e_{t+2}`.
    pub after: usize,
}

/// Tries to grow the family by one edge at either end. An edge `e_0` would
/// cobound a bigon with `e²_1`, so its ends must lie in the T¹ intervals
/// obtained by carrying the position of `e²_1` back along the strings, and
/// both ends must meet a common face. Symmetrically for `e_{t+3}` and
/// `e¹_{t+2}`.
pub fn max_extension(c: &Completion) -> ExtensionReport {
    let t = c.t;
    let before = pair_count(&c.top, 1, |e| (2..=t + 2).contains(&e), -1, &c.bottom);
    let after = pair_count(&c.bottom, t + 2, |e| (1..=t + 1).contains(&e), 1, &c.top);
    let extension = if !c.slidable && before == 0 && after == 0 {
        Extension::Exact(t + 2)
    } else {
        Extension::Unbounded
    };
    ExtensionReport { extension, before, after }
}

fn pair_count(
    g_from: &EmbeddedGraph,
    edge: EdgeId,
    anchors: impl Fn(EdgeId) -> bool + Copy,
    shift: i64,
    g_to: &EmbeddedGraph,
) -> usize {
    let a = transfer_along_strings(g_from, Dart::tail(edge), anchors, shift, g_to);
    let b = transfer_along_strings(g_from, Dart::head(edge), anchors, shift, g_to);
    match (a, b) {
        (Some(a), Some(b)) => same_face_pairs(g_to, &a, &b),
        _ => 0,
    }
}

/// Checks that the completions for `alpha` and `t - alpha` agree up to the
/// orientation reversal of T: same count and same slope distances.
pub fn reversal_consistent(t: usize, alpha: usize) -> Result<bool, CutError> {
    let d = |a| -> Result<Vec<u64>, CutError> {
        let mut v: Vec<u64> = enumerate_completions(&build_standard_cut_model(t, a)?)?
            .iter()
            .map(|c| c.delta)
            .collect();
        v.sort_unstable();
        Ok(v)
    };
    Ok(d(alpha)? == d(t - alpha)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Graph,
    Arc,
    Corner,
}

/// Cell structure on the boundary of the cut-open handlebody: the two graph
/// copies, arcs of the vertex circles between consecutive ends, and the
/// corners along the strings. The top copy carries the opposite orientation.
pub struct BoundaryComplex {
    points: HashMap<(Level, Dart), usize>,
    half_edges: Vec<(usize, usize, Kind)>,
    lookup: HashMap<(usize, usize, Kind), usize>,
    face: Vec<usize>,
    face_count: usize,
    corners: CornerMap,
}

impl BoundaryComplex {
    pub fn new(bottom: &EmbeddedGraph, top: &EmbeddedGraph, corners: &CornerMap) -> Self {
        let mut points = HashMap::new();
        for (level, g) in [(Level::Bottom, bottom), (Level::Top, top)] {
            for r in g.rotations() {
                for &d in r {
                    let n = points.len();
                    points.insert((level, d), n);
                }
            }
        }
        let mut half_edges = Vec::new();
        let mut add = |a: usize, b: usize, k: Kind| {
            half_edges.push((a, b, k));
            half_edges.push((b, a, k));
        };
        for (level, g) in [(Level::Bottom, bottom), (Level::Top, top)] {
            let p = |d: Dart| points[&(level, d)];
            for e in g.edge_ids() {
                add(p(Dart::tail(e)), p(Dart::head(e)), Kind::Graph);
            }
            for r in g.rotations() {
                for i in 0..r.len() {
                    add(p(r[i]), p(r[(i + 1) % r.len()]), Kind::Arc);
                }
            }
        }
        for (&a, &b) in &corners.forward {
            add(points[&(Level::Bottom, a)], points[&(Level::Top, b)], Kind::Corner);
        }

        let mut out: Vec<[Option<usize>; 4]> = vec![[None; 4]; points.len()];
        let mut level_of = vec![Level::Bottom; points.len()];
        for (&(level, _), &i) in &points {
            level_of[i] = level;
        }
        for (h, &(a, _, k)) in half_edges.iter().enumerate() {
            let slot = match k {
                Kind::Graph => 0,
                Kind::Corner => 2,
                Kind::Arc if (h % 2 == 0) == (level_of[a] == Level::Bottom) => 1,
                Kind::Arc => 3,
            };
            out[a][slot] = Some(h);
        }
        let rot: Vec<Vec<usize>> = out.iter().map(|s| s.iter().flatten().copied().collect()).collect();
        let mut at = vec![(0, 0); half_edges.len()];
        for (p, r) in rot.iter().enumerate() {
            for (i, &h) in r.iter().enumerate() {
                at[h] = (p, i);
            }
        }
        let next = |h: usize| {
            let (p, i) = at[h ^ 1];
            rot[p][(i + 1) % rot[p].len()]
        };
        let mut face = vec![usize::MAX; half_edges.len()];
        let mut face_count = 0;
        for h in 0..half_edges.len() {
            if face[h] != usize::MAX {
                continue;
            }
            let mut x = h;
            while face[x] == usize::MAX {
                face[x] = face_count;
                x = next(x);
            }
            face_count += 1;
        }
        let lookup = half_edges
            .iter()
            .enumerate()
            .filter(|(_, (_, _, k))| *k != Kind::Arc)
            .map(|(h, &(a, b, k))| ((a, b, k), h))
            .collect();
        BoundaryComplex { points, half_edges, lookup, face, face_count, corners: corners.clone() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.points.len() as i64 - (self.half_edges.len() / 2) as i64 + self.face_count as i64
    }

    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }

    fn half_edge(&self, a: (Level, Dart), b: (Level, Dart), k: Kind) -> usize {
        self.lookup[&(self.points[&a], self.points[&b], k)]
    }

    /// Half-edges of the boundary curve of the disk through the T¹ end `start`.
    pub fn disk_curve(&self, start: Dart) -> Vec<usize> {
        let mut hs = Vec::new();
        let mut p = (Level::Bottom, start);
        loop {
            let (level, d) = p;
            let q = (level, d.opposite());
            hs.push(self.half_edge(p, q, Kind::Graph));
            let r = match level {
                Level::Bottom => (Level::Top, self.corners.forward[&q.1]),
                Level::Top => (Level::Bottom, self.corners.backward[&q.1]),
            };
            hs.push(self.half_edge(q, r, Kind::Corner));
            p = r;
            if p == (Level::Bottom, start) {
                break;
            }
        }
        hs
    }

    /// One boundary curve per disk face, started at its first T¹ end.
    pub fn curves(&self, faces: &[DiskFace]) -> Vec<Vec<usize>> {
        faces
            .iter()
            .map(|f| {
                let s = f.sides[0];
                let start = if s.level == Level::Bottom {
                    s.corner.bottom.opposite()
                } else {
                    f.sides[1].corner.bottom.opposite()
                };
                self.disk_curve(start)
            })
            .collect()
    }

    /// Union-find over faces glued across every edge not on a curve.
    pub fn regions(&self, curves: &[Vec<usize>]) -> Regions {
        let cut: std::collections::HashSet<usize> =
            curves.iter().flatten().flat_map(|&h| [h, h ^ 1]).collect();
        let mut uf = UnionFind::new(self.face_count);
        for h in (0..self.half_edges.len()).step_by(2) {
            if !cut.contains(&h) {
                uf.union(self.face[h], self.face[h + 1]);
            }
        }
        Regions { uf }
    }

    pub fn face_of_half_edge(&self, h: usize) -> usize {
        self.face[h]
    }

    /// Half-edge along the graph edge from end `from` to its opposite end.
    pub fn graph_half_edge(&self, level: Level, from: Dart) -> usize {
        self.half_edge((level, from), (level, from.opposite()), Kind::Graph)
    }
}

pub struct Regions {
    uf: UnionFind,
}

impl Regions {
    pub fn find(&mut self, face: usize) -> usize {
        self.uf.find(face)
    }

    pub fn union(&mut self, a: usize, b: usize) {
        self.uf.union(a, b)
    }

    pub fn count(&mut self) -> usize {
        self.uf.count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiskSystemReport {
    pub boundary_genus: i64,
    pub disks: usize,
    pub pieces: usize,
    /// Genus of the cut-open boundary when it is a single piece.
    pub piece_genus: Option<i64>,
    pub complete: bool,
}

/// Cuts the boundary surface along the boundary curves of the model's faces
/// and asks for a single planar piece.
pub fn check_complete_disk_system(m: &CutModel) -> DiskSystemReport {
    let cx = BoundaryComplex::new(&m.g_bot, &m.g_top, &m.corners);
    let curves = cx.curves(&m.faces);
    let pieces = cx.regions(&curves).count();
    let chi = cx.euler_characteristic();
    let b = 2 * curves.len() as i64;
    let piece_genus = (pieces == 1).then_some((2 - chi - b) / 2);
    DiskSystemReport {
        boundary_genus: cx.genus(),
        disks: curves.len(),
        pieces,
        piece_genus,
        complete: piece_genus == Some(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_graph_is_cellular() {
        for t in 2..9 {
            for a in 1..t {
                if let Ok(g) = family_graph(t, a) {
                    assert!(g.is_toroidal_cellular(), "t={t} a={a}");
                }
            }
        }
        assert_eq!(family_graph(4, 2), Err(CutError::GcdViolation { t: 4, alpha: 2 }));
    }

    #[test]
    fn wrap_is_one_based() {
        assert_eq!(wrap(0, 4), 4);
        assert_eq!(wrap(5, 4), 1);
        assert_eq!(wrap(-3, 4), 1);
    }

    #[test]
    fn bigons_of_standard_model() {
        let m = build_standard_cut_model(4, 1).unwrap();
        assert_eq!(m.faces.len(), 5);
        assert!(m.faces.iter().all(|f| f.kind == FaceKind::Bigon));
        assert!(m.corners.is_order_preserving(&m.g_bot, &m.g_top));
        assert_eq!(m.psi_edge(3), Some(3));
        assert_eq!(m.psi_edge(1), None);
    }
}
