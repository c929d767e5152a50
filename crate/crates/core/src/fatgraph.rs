//! Graphs embedded in a capped punctured torus, stored as rotation systems.
//!
//! Vertices are numbered `1..=vertex_count`. Every edge has a tail end and a
//! head end; a [`Dart`] names one of those ends. The rotation at a vertex is
//! the cyclic order of darts met when walking once around the vertex in the
//! positive direction.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    /// 0 for the tail end, 1 for the head end.
    pub end: u8,
}

impl Dart {
    pub fn tail(edge: EdgeId) -> Self {
        Dart { edge, end: 0 }
    }

    pub fn head(edge: EdgeId) -> Self {
        Dart { edge, end: 1 }
    }

    pub fn opposite(self) -> Self {
        Dart { edge: self.edge, end: 1 - self.end }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: usize,
    pub head: usize,
    pub sign: Option<Sign>,
    /// Labels of the two ends (tail, head) read on the other surface.
    pub labels: Option<(usize, usize)>,
}

impl Edge {
    pub fn new(id: EdgeId, tail: usize, head: usize) -> Self {
        Edge { id, tail, head, sign: None, labels: None }
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = Some(sign);
        self
    }

    pub fn end_vertex(&self, end: u8) -> usize {
        if end == 0 {
            self.tail
        } else {
            self.head
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("edge {0} is listed twice")]
    DuplicateEdge(EdgeId),
    #[error("dart {0:?} appears more than once in the rotation system")]
    DuplicateDart(Dart),
    #[error("dart {0:?} is missing from the rotation system")]
    MissingDart(Dart),
    #[error("dart {dart:?} sits at vertex {found} but its edge ends at vertex {expected}")]
    WrongVertex { dart: Dart, found: usize, expected: usize },
    #[error("dart {0:?} belongs to no edge")]
    UnknownDart(Dart),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("Euler count V - E + F = {0} does not give a nonnegative integer genus")]
    BadEuler(i64),
    #[error("graph is not a cellular embedding in the torus (genus {genus}, connected {connected})")]
    NotToroidal { genus: i64, connected: bool },
    #[error("graph is not connected, so some face is not a disk")]
    Disconnected,
    #[error("edges do not form a single closed cycle")]
    NotACycle,
    #[error("cycle is null-homologous")]
    NullHomologous,
    #[error("slot {slot} is out of range at vertex {vertex}")]
    BadSlot { vertex: usize, slot: usize },
}

/// Face circuits of an embedded graph.
#[derive(Debug, Clone)]
pub struct Faces {
    pub circuits: Vec<Vec<Dart>>,
    of: HashMap<Dart, usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Index of the face whose circuit contains `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.of[&d]
    }

    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.circuits.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct EmbeddedGraph {
    vertex_count: usize,
    edges: BTreeMap<EdgeId, Edge>,
    rotations: Vec<Vec<Dart>>,
    pos: HashMap<Dart, (usize, usize)>,
}

impl EmbeddedGraph {
    /// `rotations[v - 1]` is the rotation at vertex `v`.
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        rotations: Vec<Vec<Dart>>,
    ) -> Result<Self, GraphError> {
        if rotations.len() != vertex_count {
            return Err(GraphError::BadVertex(rotations.len().max(vertex_count)));
        }
        let mut map = BTreeMap::new();
        for e in edges {
            for v in [e.tail, e.head] {
                if v == 0 || v > vertex_count {
                    return Err(GraphError::BadVertex(v));
                }
            }
            let id = e.id;
            if map.insert(id, e).is_some() {
                return Err(GraphError::DuplicateEdge(id));
            }
        }
        let mut pos = HashMap::new();
        for (i, r) in rotations.iter().enumerate() {
            for (k, &d) in r.iter().enumerate() {
                let e = map.get(&d.edge).ok_or(GraphError::UnknownDart(d))?;
                if d.end > 1 {
                    return Err(GraphError::UnknownDart(d));
                }
                let expected = e.end_vertex(d.end);
                if expected != i + 1 {
                    return Err(GraphError::WrongVertex { dart: d, found: i + 1, expected });
                }
                if pos.insert(d, (i + 1, k)).is_some() {
                    return Err(GraphError::DuplicateDart(d));
                }
            }
        }
        for &id in map.keys() {
            for d in [Dart::tail(id), Dart::head(id)] {
                if !pos.contains_key(&d) {
                    return Err(GraphError::MissingDart(d));
                }
            }
        }
        Ok(EmbeddedGraph { vertex_count, edges: map, rotations, pos })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn has_edge(&self, id: EdgeId) -> bool {
        self.edges.contains_key(&id)
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v - 1]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v - 1].len()
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.pos[&d].0
    }

    /// Position of `d` as (vertex, index in that vertex's rotation).
    pub fn position(&self, d: Dart) -> (usize, usize) {
        self.pos[&d]
    }

    pub fn succ(&self, d: Dart) -> Dart {
        let (v, i) = self.pos[&d];
        let r = &self.rotations[v - 1];
        r[(i + 1) % r.len()]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        let (v, i) = self.pos[&d];
        let r = &self.rotations[v - 1];
        r[(i + r.len() - 1) % r.len()]
    }

    /// Copy of the graph with a new edge whose tail is placed right after
    /// position `tail_slot` of the tail vertex rotation and whose head is placed
    /// right after position `head_slot` of the head vertex rotation. For a loop
    /// the head slot refers to the rotation after the tail was inserted.
    pub fn with_edge(
        &self,
        edge: Edge,
        tail_slot: usize,
        head_slot: usize,
    ) -> Result<Self, GraphError> {
        let mut rotations = self.rotations.clone();
        let (id, tv, hv) = (edge.id, edge.tail, edge.head);
        for (v, slot, d) in [(tv, tail_slot, Dart::tail(id)), (hv, head_slot, Dart::head(id))] {
            if v == 0 || v > self.vertex_count {
                return Err(GraphError::BadVertex(v));
            }
            let r = &mut rotations[v - 1];
            if slot >= r.len().max(1) {
                return Err(GraphError::BadSlot { vertex: v, slot });
            }
            let at = if r.is_empty() { 0 } else { slot + 1 };
            r.insert(at, d);
        }
        let mut edges: Vec<Edge> = self.edges.values().cloned().collect();
        edges.push(edge);
        EmbeddedGraph::new(self.vertex_count, edges, rotations)
    }

    /// Same graph with every rotation reversed (the mirror embedding).
    pub fn mirror(&self) -> Self {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph::new(self.vertex_count, self.edges.values().cloned().collect(), rotations)
            .expect("mirror keeps the rotation system valid")
    }

    pub fn with_signs(&self, sign: impl Fn(&Edge) -> Sign) -> Self {
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            e.sign = Some(sign(e));
        }
        g
    }

    /// Face circuits: the orbits of `d -> succ(opposite(d))`.
    pub fn faces(&self) -> Faces {
        let mut of = HashMap::with_capacity(self.pos.len());
        let mut circuits = Vec::new();
        for r in &self.rotations {
            for &d in r {
                if of.contains_key(&d) {
                    continue;
                }
                let idx = circuits.len();
                let mut circuit = Vec::new();
                let mut x = d;
                while !of.contains_key(&x) {
                    of.insert(x, idx);
                    circuit.push(x);
                    x = self.succ(x.opposite());
                }
                circuits.push(circuit);
            }
        }
        Faces { circuits, of }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces().len() as i64
    }

    pub fn genus(&self) -> Result<usize, GraphError> {
        let chi = self.euler_characteristic();
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(GraphError::BadEuler(chi));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for d in &self.rotations[v - 1] {
                let w = self.vertex_of(d.opposite());
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn is_toroidal_cellular(&self) -> bool {
        self.is_connected() && self.euler_characteristic() == 0
    }

    fn require_toroidal(&self) -> Result<(), GraphError> {
        if self.is_toroidal_cellular() {
            Ok(())
        } else {
            Err(GraphError::NotToroidal {
                genus: (2 - self.euler_characteristic()) / 2,
                connected: self.is_connected(),
            })
        }
    }

    /// Classes of mutually parallel edges: two edges are parallel when they
    /// cobound a bigon face, and classes are the transitive closure. Any
    /// cellular embedding will do, not only toroidal ones.
    pub fn parallelism_classes(&self) -> Result<Vec<Vec<EdgeId>>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let ids: Vec<EdgeId> = self.edge_ids().collect();
        let index: HashMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(ids.len());
        for f in &self.faces().circuits {
            if f.len() == 2 && f[0].edge != f[1].edge {
                uf.union(index[&f[0].edge], index[&f[1].edge]);
            }
        }
        let mut classes: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
        for (i, &e) in ids.iter().enumerate() {
            classes.entry(uf.find(i)).or_default().push(e);
        }
        let mut out: Vec<Vec<EdgeId>> = classes.into_values().collect();
        out.sort_by_key(|c| c[0]);
        Ok(out)
    }

    pub fn reduced_graph(&self) -> Result<ReducedGraph, GraphError> {
        let classes = self.parallelism_classes()?;
        let edges = classes
            .into_iter()
            .map(|members| {
                let e = &self.edges[&members[0]];
                ReducedEdge {
                    representative: members[0],
                    ends: (e.tail, e.head),
                    size: members.len(),
                    members,
                }
            })
            .collect();
        Ok(ReducedGraph { edges })
    }

    /// Walks the given edges as one closed cycle and returns, for each edge,
    /// +1 when it is traversed tail to head and -1 otherwise.
    pub fn orient_cycle(&self, edges: &[EdgeId]) -> Result<Vec<(EdgeId, i64)>, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::NotACycle);
        }
        for &e in edges {
            if !self.has_edge(e) {
                return Err(GraphError::UnknownEdge(e));
            }
        }
        let mut left: Vec<EdgeId> = edges.to_vec();
        left.sort_unstable();
        left.dedup();
        if left.len() != edges.len() {
            return Err(GraphError::NotACycle);
        }
        let first = self.edges[&edges[0]].clone();
        let start = first.tail;
        let mut at = first.head;
        let mut out = vec![(first.id, 1)];
        left.retain(|&e| e != first.id);
        let mut visited = vec![start];
        while !left.is_empty() {
            if visited.contains(&at) {
                return Err(GraphError::NotACycle);
            }
            visited.push(at);
            let next = left.iter().position(|e| {
                let e = &self.edges[e];
                e.tail == at || e.head == at
            });
            let Some(k) = next else {
                return Err(GraphError::NotACycle);
            };
            let e = &self.edges[&left.remove(k)];
            if e.tail == at {
                out.push((e.id, 1));
                at = e.head;
            } else {
                out.push((e.id, -1));
                at = e.tail;
            }
        }
        if at != start {
            return Err(GraphError::NotACycle);
        }
        Ok(out)
    }

    /// Integral cohomology basis of the capped torus from a tree-cotree
    /// decomposition (BFS tree from vertex 1, lowest edge id first).
    fn cohomology_basis(&self) -> Result<[HashMap<EdgeId, i64>; 2], GraphError> {
        self.require_toroidal()?;
        let mut adj: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); self.vertex_count + 1];
        for e in self.edges.values() {
            adj[e.tail].push((e.id, e.head));
            adj[e.head].push((e.id, e.tail));
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut tree = std::collections::HashSet::new();
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert(e);
                    queue.push_back(w);
                }
            }
        }

        let faces = self.faces();
        let mut boundary: Vec<HashMap<EdgeId, i64>> = vec![HashMap::new(); faces.len()];
        for (i, f) in faces.circuits.iter().enumerate() {
            for d in f {
                *boundary[i].entry(d.edge).or_insert(0) += if d.end == 0 { 1 } else { -1 };
            }
        }
        let nontree: Vec<EdgeId> = self.edge_ids().filter(|e| !tree.contains(e)).collect();
        let mut parent_edge: Vec<Option<EdgeId>> = vec![None; faces.len()];
        let mut reached = vec![false; faces.len()];
        let mut order = vec![0];
        reached[0] = true;
        let mut cotree = std::collections::HashSet::new();
        let mut k = 0;
        while k < order.len() {
            let f = order[k];
            k += 1;
            for &e in &nontree {
                let a = faces.face_of(Dart::tail(e));
                let b = faces.face_of(Dart::head(e));
                let other = if a == f {
                    b
                } else if b == f {
                    a
                } else {
                    continue;
                };
                if !reached[other] {
                    reached[other] = true;
                    parent_edge[other] = Some(e);
                    cotree.insert(e);
                    order.push(other);
                }
            }
        }
        let leftover: Vec<EdgeId> = nontree.iter().copied().filter(|e| !cotree.contains(e)).collect();
        if leftover.len() != 2 {
            return Err(GraphError::NotToroidal {
                genus: leftover.len() as i64 / 2,
                connected: true,
            });
        }
        let solve = |one: EdgeId| {
            let mut w: HashMap<EdgeId, i64> = self.edge_ids().map(|e| (e, 0)).collect();
            w.insert(one, 1);
            for &f in order.iter().rev() {
                let Some(pe) = parent_edge[f] else { continue };
                let coef = boundary[f][&pe];
                let rest: i64 = boundary[f]
                    .iter()
                    .filter(|(&e, _)| e != pe)
                    .map(|(e, c)| w[e] * c)
                    .sum();
                w.insert(pe, -rest / coef);
            }
            w
        };
        Ok([solve(leftover[0]), solve(leftover[1])])
    }

    /// Homology class of a cycle in the capped torus, as a slope.
    pub fn cycle_slope(&self, edges: &[EdgeId]) -> Result<SlopeClass, GraphError> {
        let oriented = self.orient_cycle(edges)?;
        let [w1, w2] = self.cohomology_basis()?;
        let p: i64 = oriented.iter().map(|(e, s)| w1[e] * s).sum();
        let q: i64 = oriented.iter().map(|(e, s)| w2[e] * s).sum();
        SlopeClass::new(p, q).ok_or(GraphError::NullHomologous)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    vertex_count: usize,
    edges: Vec<EdgeData>,
    rotations: Vec<Vec<Dart>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeData {
    id: EdgeId,
    /// (vertex, slot)
    end0: (usize, usize),
    end1: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none", default)]
    sign: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<(usize, usize)>,
}

impl From<EmbeddedGraph> for GraphData {
    fn from(g: EmbeddedGraph) -> Self {
        let edges = g
            .edges
            .values()
            .map(|e| EdgeData {
                id: e.id,
                end0: g.pos[&Dart::tail(e.id)],
                end1: g.pos[&Dart::head(e.id)],
                sign: e.sign,
                labels: e.labels,
            })
            .collect();
        GraphData { vertex_count: g.vertex_count, edges, rotations: g.rotations }
    }
}

impl TryFrom<GraphData> for EmbeddedGraph {
    type Error = GraphError;

    fn try_from(d: GraphData) -> Result<Self, GraphError> {
        let edges = d
            .edges
            .into_iter()
            .map(|e| Edge { id: e.id, tail: e.end0.0, head: e.end1.0, sign: e.sign, labels: e.labels })
            .collect();
        EmbeddedGraph::new(d.vertex_count, edges, d.rotations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedEdge {
    pub representative: EdgeId,
    pub ends: (usize, usize),
    pub size: usize,
    pub members: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedGraph {
    pub edges: Vec<ReducedEdge>,
}

impl ReducedGraph {
    pub fn sizes(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.size).collect()
    }
}

/// A primitive integer pair up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeClass {
    pub p: i64,
    pub q: i64,
}

impl SlopeClass {
    /// `None` for the zero pair.
    pub fn new(p: i64, q: i64) -> Option<Self> {
        let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
        if g == 0 {
            return None;
        }
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 || (p == 0 && q < 0) {
            p = -p;
            q = -q;
        }
        Some(SlopeClass { p, q })
    }
}

pub fn delta(a: SlopeClass, b: SlopeClass) -> u64 {
    (a.p * b.q - a.q * b.p).unsigned_abs()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// `true` when `a` is a cyclic rotation of `b`.
pub fn cyclic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_vertex_torus() -> EmbeddedGraph {
        EmbeddedGraph::new(
            1,
            vec![Edge::new(1, 1, 1), Edge::new(2, 1, 1)],
            vec![vec![Dart::tail(1), Dart::tail(2), Dart::head(1), Dart::head(2)]],
        )
        .unwrap()
    }

    #[test]
    fn torus_bouquet() {
        let g = one_vertex_torus();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.genus().unwrap(), 1);
        assert_eq!(g.parallelism_classes().unwrap(), vec![vec![1], vec![2]]);
        let a = g.cycle_slope(&[1]).unwrap();
        let b = g.cycle_slope(&[2]).unwrap();
        assert_eq!(delta(a, b), 1);
        assert_eq!(delta(a, a), 0);
    }

    #[test]
    fn circle_on_sphere() {
        let g = EmbeddedGraph::new(1, vec![Edge::new(1, 1, 1)], vec![vec![Dart::tail(1), Dart::head(1)]])
            .unwrap();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.genus().unwrap(), 0);
        assert_eq!(g.parallelism_classes().unwrap(), vec![vec![1]]);
        let two = EmbeddedGraph::new(2, vec![Edge::new(1, 1, 1)], vec![vec![Dart::tail(1), Dart::head(1)], vec![]])
            .unwrap();
        assert_eq!(two.parallelism_classes(), Err(GraphError::Disconnected));
    }

    #[test]
    fn malformed_rotations() {
        let e = vec![Edge::new(1, 1, 1)];
        assert_eq!(
            EmbeddedGraph::new(1, e.clone(), vec![vec![Dart::tail(1)]]),
            Err(GraphError::MissingDart(Dart::head(1)))
        );
        assert_eq!(
            EmbeddedGraph::new(1, e, vec![vec![Dart::tail(1), Dart::head(1), Dart::tail(1)]]),
            Err(GraphError::DuplicateDart(Dart::tail(1)))
        );
    }

    #[test]
    fn slope_normalisation() {
        assert_eq!(SlopeClass::new(-2, 4), Some(SlopeClass { p: 1, q: -2 }));
        assert_eq!(SlopeClass::new(0, -3), Some(SlopeClass { p: 0, q: 1 }));
        assert_eq!(SlopeClass::new(0, 0), None);
        let s = |p, q| SlopeClass::new(p, q).unwrap();
        assert_eq!(delta(s(1, 0), s(0, 1)), 1);
        assert_eq!(delta(s(1, 2), s(1, 2)), 0);
        assert_eq!(delta(s(1, 2), s(1, 3)), 1);
    }

    #[test]
    fn json_round_trip() {
        let g = one_vertex_torus();
        let s = serde_json::to_string(&g).unwrap();
        let back: EmbeddedGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn face_boundary_is_null_homologous() {
        let g = EmbeddedGraph::new(
            1,
            vec![Edge::new(1, 1, 1), Edge::new(2, 1, 1), Edge::new(3, 1, 1)],
            vec![vec![
                Dart::tail(1),
                Dart::tail(2),
                Dart::head(1),
                Dart::head(2),
                Dart::tail(3),
                Dart::head(3),
            ]],
        )
        .unwrap();
        assert!(g.is_toroidal_cellular());
        assert_eq!(g.faces().lengths(), vec![1, 5]);
        assert_eq!(g.cycle_slope(&[3]), Err(GraphError::NullHomologous));
        let a = g.cycle_slope(&[1]).unwrap();
        let b = g.cycle_slope(&[2]).unwrap();
        assert_eq!(delta(a, b), 1);
    }
}
