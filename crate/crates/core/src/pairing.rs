//! Rules for a pair of graphs of intersection sharing one edge set.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{gcd, EdgeId, EmbeddedGraph, GraphError, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("edge {0} has no partner in the other graph")]
    Unmatched(EdgeId),
    #[error("family labels do not follow a single shift x -> x + alpha")]
    MalformedFamily,
    #[error("gcd({t}, {alpha}) != 1")]
    GcdViolation { t: usize, alpha: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphPair {
    pub g1: EmbeddedGraph,
    pub g2: EmbeddedGraph,
    /// Edge of `g1` -> edge of `g2`.
    pub edge_bijection: BTreeMap<EdgeId, EdgeId>,
}

impl GraphPair {
    pub fn new(
        g1: EmbeddedGraph,
        g2: EmbeddedGraph,
        edge_bijection: BTreeMap<EdgeId, EdgeId>,
    ) -> Result<Self, PairingError> {
        for e in g1.edge_ids() {
            match edge_bijection.get(&e) {
                Some(f) if g2.has_edge(*f) => {}
                _ => return Err(PairingError::Unmatched(e)),
            }
        }
        let mut image: Vec<EdgeId> = edge_bijection.values().copied().collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != g2.edge_count() || edge_bijection.len() != g1.edge_count() {
            let missing = g2.edge_ids().find(|e| !image.contains(e)).unwrap_or(0);
            return Err(PairingError::Unmatched(missing));
        }
        Ok(GraphPair { g1, g2, edge_bijection })
    }

    /// Pair sharing edge ids verbatim.
    pub fn identity(g1: EmbeddedGraph, g2: EmbeddedGraph) -> Result<Self, PairingError> {
        let map = g1.edge_ids().map(|e| (e, e)).collect();
        GraphPair::new(g1, g2, map)
    }

    pub fn n1(&self) -> usize {
        self.g1.vertex_count()
    }

    pub fn n2(&self) -> usize {
        self.g2.vertex_count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleViolation {
    pub rule: &'static str,
    pub edges: Vec<(EdgeId, EdgeId)>,
}

/// A shared edge is positive on one side iff it is negative on the other.
/// Unsigned edges count as violations.
pub fn check_parity(p: &GraphPair) -> Result<(), RuleViolation> {
    let bad: Vec<(EdgeId, EdgeId)> = p
        .edge_bijection
        .iter()
        .filter(|(a, b)| {
            let s1 = p.g1.edge(**a).and_then(|e| e.sign);
            let s2 = p.g2.edge(**b).and_then(|e| e.sign);
            !matches!((s1, s2), (Some(x), Some(y)) if x == y.flip())
        })
        .map(|(&a, &b)| (a, b))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(RuleViolation { rule: "parity", edges: bad })
    }
}

/// No two edges may be parallel in both graphs.
pub fn check_no_double_parallel(p: &GraphPair) -> Result<Result<(), RuleViolation>, GraphError> {
    let c1 = p.g1.parallelism_classes()?;
    let c2 = p.g2.parallelism_classes()?;
    let class2: HashMap<EdgeId, usize> =
        c2.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&e| (e, i))).collect();
    let mut bad = Vec::new();
    for class in &c1 {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                if class2[&p.edge_bijection[&a]] == class2[&p.edge_bijection[&b]] {
                    bad.push((a, b));
                }
            }
        }
    }
    Ok(if bad.is_empty() {
        Ok(())
    } else {
        Err(RuleViolation { rule: "no-double-parallel", edges: bad })
    })
}

/// A run of mutually parallel negative edges with the labels of their ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeFamily {
    pub edges: Vec<EdgeId>,
    /// (tail label, head label) for each edge, in the family order.
    pub labels: Vec<(usize, usize)>,
    pub t: usize,
    pub reversed: bool,
}

impl EdgeFamily {
    pub fn new(edges: Vec<EdgeId>, labels: Vec<(usize, usize)>, t: usize) -> Self {
        EdgeFamily { edges, labels, t, reversed: false }
    }

    /// Reads the end labels off the graph edges.
    pub fn from_graph(g: &EmbeddedGraph, edges: Vec<EdgeId>, t: usize) -> Result<Self, PairingError> {
        let labels = edges
            .iter()
            .map(|&e| {
                g.edge(e)
                    .and_then(|e| e.labels)
                    .ok_or(PairingError::MalformedFamily)
            })
            .collect::<Result<_, _>>()?;
        Ok(EdgeFamily::new(edges, labels, t))
    }

    pub fn reverse(&self) -> Self {
        EdgeFamily { reversed: !self.reversed, ..self.clone() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Positivity {
    Positive,
    Inconclusive,
}

/// A family of `n + 1` mutually parallel negative edges in one graph forces
/// the surface with `n` boundary components to be positive.
pub fn positivity_witness(host_vertices: usize, family: &EdgeFamily) -> Positivity {
    if family.len() > host_vertices {
        Positivity::Positive
    } else {
        Positivity::Inconclusive
    }
}

/// The shift `alpha` with every edge running from label `x` to `x + alpha`.
pub fn induced_permutation(family: &EdgeFamily) -> Result<usize, PairingError> {
    let t = family.t;
    if t == 0 || family.labels.is_empty() {
        return Err(PairingError::MalformedFamily);
    }
    if t == 1 {
        return Ok(1);
    }
    let shift = |&(a, b): &(usize, usize)| {
        let (a, b) = if family.reversed { (b, a) } else { (a, b) };
        (b as i64 - a as i64).rem_euclid(t as i64) as usize
    };
    let alpha = shift(&family.labels[0]);
    if family.labels.iter().any(|l| shift(l) != alpha) || family.labels.iter().any(|&(a, b)| a == 0 || b == 0 || a > t || b > t) {
        return Err(PairingError::MalformedFamily);
    }
    if gcd(t as u64, alpha as u64) != 1 {
        return Err(PairingError::GcdViolation { t, alpha });
    }
    Ok(alpha)
}

pub fn signed(g: &EmbeddedGraph, s: Sign) -> EmbeddedGraph {
    g.with_signs(|_| s)
}
