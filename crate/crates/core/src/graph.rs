//! Immutable bipolar fuzzy graphs and their underlying crisp graphs.
//!
//! A [`BipolarFuzzyGraph`] is simple and undirected. Every value of the type
//! satisfies the edge-domination constraints: an edge's positive membership is
//! at most the smaller endpoint positive, and its negative membership is at
//! least the larger endpoint negative. The only way to obtain a graph is
//! through [`GraphBuilder`] (or [`build_graph`]), which enforces this.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bipolar::Bipolar;
use crate::error::{Component, Error, Result};

/// Vertex identifier, restricted to `[A-Za-z0-9_]+`. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Result<VertexId> {
        let id = id.into();
        if id.is_empty() || !id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(Error::InvalidVertexId(id));
        }
        Ok(VertexId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for VertexId {
    type Err = Error;
    fn from_str(s: &str) -> Result<VertexId> {
        VertexId::new(s)
    }
}

impl TryFrom<&str> for VertexId {
    type Error = Error;
    fn try_from(s: &str) -> Result<VertexId> {
        VertexId::new(s)
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct EdgeKey(VertexId, VertexId);

impl EdgeKey {
    /// Returns `None` when `u == v`.
    pub fn new(u: VertexId, v: VertexId) -> Option<EdgeKey> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(EdgeKey(u, v)),
            std::cmp::Ordering::Greater => Some(EdgeKey(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &VertexId {
        &self.0
    }

    pub fn second(&self) -> &VertexId {
        &self.1
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.0 == v || &self.1 == v
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.0, self.1)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BipolarFuzzyGraph {
    vertices: BTreeMap<VertexId, Bipolar>,
    edges: BTreeMap<EdgeKey, Bipolar>,
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl BipolarFuzzyGraph {
    pub fn empty() -> BipolarFuzzyGraph {
        BipolarFuzzyGraph::default()
    }

    /// Convenience constructor from decimal literals, mainly for fixtures and
    /// tests: `(id, pos, neg)` vertices and `(u, v, pos, neg)` edges.
    pub fn from_literals(
        vertices: &[(&str, &str, &str)],
        edges: &[(&str, &str, &str, &str)],
    ) -> Result<BipolarFuzzyGraph> {
        let mut builder = GraphBuilder::new();
        for &(id, pos, neg) in vertices {
            builder.add_vertex(VertexId::new(id)?, Bipolar::parse(pos, neg)?)?;
        }
        for &(u, v, pos, neg) in edges {
            builder.add_edge(VertexId::new(u)?, VertexId::new(v)?, Bipolar::parse(pos, neg)?)?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, Bipolar)> + '_ {
        self.vertices.iter().map(|(id, b)| (id, *b))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices.keys()
    }

    /// Edges in endpoint-pair order.
    pub fn edges(&self) -> impl Iterator<Item = (&EdgeKey, Bipolar)> + '_ {
        self.edges.iter().map(|(k, b)| (k, *b))
    }

    pub fn vertex(&self, id: &str) -> Option<Bipolar> {
        self.vertices.get(id).copied()
    }

    pub fn contains_vertex(&self, id: &str) -> bool {
        self.vertices.contains_key(id)
    }

    pub fn edge(&self, u: &VertexId, v: &VertexId) -> Option<Bipolar> {
        EdgeKey::new(u.clone(), v.clone()).and_then(|k| self.edges.get(&k).copied())
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(v))
    }

    /// Ids of all vertices sharing a stored edge with `v`.
    pub fn neighbors(&self, v: &str) -> Result<&BTreeSet<VertexId>> {
        self.adjacency.get(v).ok_or_else(|| Error::UnknownVertex(unknown_id(v)))
    }

    /// `(neighbor, edge value)` pairs incident to `v`.
    pub fn incident(&self, v: &str) -> Result<impl Iterator<Item = (&VertexId, Bipolar)> + '_> {
        let (id, _) = self
            .vertices
            .get_key_value(v)
            .ok_or_else(|| Error::UnknownVertex(unknown_id(v)))?;
        let id = id.clone();
        Ok(self.adjacency[v].iter().map(move |u| {
            let key = EdgeKey::new(id.clone(), u.clone()).expect("adjacency has no self-loops");
            (u, self.edges[&key])
        }))
    }

    /// A builder pre-loaded with this graph's vertices and edges.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { vertices: self.vertices.clone(), edges: self.edges.clone() }
    }
}

fn unknown_id(v: &str) -> VertexId {
    // Ids rejected by the id grammar are still reported verbatim.
    VertexId(v.to_string())
}

/// Incremental, validating constructor for [`BipolarFuzzyGraph`].
///
/// Each `add_*` call checks its own constraints, so callers that feed
/// elements from a file can attribute an error to the offending line.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: BTreeMap<VertexId, Bipolar>,
    edges: BTreeMap<EdgeKey, Bipolar>,
}

impl GraphBuilder {
    pub fn new() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn add_vertex(&mut self, id: VertexId, value: Bipolar) -> Result<&mut Self> {
        if self.vertices.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        self.vertices.insert(id, value);
        Ok(self)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, value: Bipolar) -> Result<&mut Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for endpoint in [&u, &v] {
            if !self.vertices.contains_key(endpoint) {
                return Err(Error::UnknownEndpoint(u.clone(), v.clone(), endpoint.clone()));
            }
        }
        let key = EdgeKey::new(u.clone(), v.clone()).expect("distinct endpoints");
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        let bound = self.vertices[&u].intersection(self.vertices[&v]);
        if value.pos() > bound.pos() {
            return Err(Error::DominationViolation {
                u,
                v,
                component: Component::Positive,
                edge_value: value.pos(),
                bound: bound.pos(),
            });
        }
        if value.neg() < bound.neg() {
            return Err(Error::DominationViolation {
                u,
                v,
                component: Component::Negative,
                edge_value: value.neg(),
                bound: bound.neg(),
            });
        }
        self.edges.insert(key, value);
        Ok(self)
    }

    /// Replaces the value of an existing vertex, re-checking every incident edge.
    pub fn set_vertex(&mut self, id: &VertexId, value: Bipolar) -> Result<&mut Self> {
        if !self.vertices.contains_key(id) {
            return Err(Error::UnknownVertex(id.clone()));
        }
        let old = self.vertices.insert(id.clone(), value).expect("checked above");
        for (key, edge) in self.edges.iter().filter(|(k, _)| k.contains(id)) {
            let bound = self.vertices[key.first()].intersection(self.vertices[key.second()]);
            if !bound.dominates(*edge) {
                let component =
                    if edge.pos() > bound.pos() { Component::Positive } else { Component::Negative };
                let violation = Error::DominationViolation {
                    u: key.first().clone(),
                    v: key.second().clone(),
                    component,
                    edge_value: edge.component(component),
                    bound: bound.component(component),
                };
                self.vertices.insert(id.clone(), old);
                return Err(violation);
            }
        }
        Ok(self)
    }

    pub fn build(self) -> BipolarFuzzyGraph {
        let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> =
            self.vertices.keys().map(|id| (id.clone(), BTreeSet::new())).collect();
        for key in self.edges.keys() {
            adjacency.get_mut(key.first()).expect("endpoint exists").insert(key.second().clone());
            adjacency.get_mut(key.second()).expect("endpoint exists").insert(key.first().clone());
        }
        BipolarFuzzyGraph { vertices: self.vertices, edges: self.edges, adjacency }
    }
}

/// Builds and validates a graph from vertex and edge lists.
pub fn build_graph<V, E>(vertices: V, edges: E) -> Result<BipolarFuzzyGraph>
where
    V: IntoIterator<Item = (VertexId, Bipolar)>,
    E: IntoIterator<Item = (VertexId, VertexId, Bipolar)>,
{
    let mut builder = GraphBuilder::new();
    for (id, value) in vertices {
        builder.add_vertex(id, value)?;
    }
    for (u, v, value) in edges {
        builder.add_edge(u, v, value)?;
    }
    Ok(builder.build())
}

pub fn neighbors<'g>(g: &'g BipolarFuzzyGraph, v: &str) -> Result<&'g BTreeSet<VertexId>> {
    g.neighbors(v)
}

/// Ordinary simple graph: the support of a bipolar fuzzy graph.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CrispGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeKey>,
}

impl CrispGraph {
    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<EdgeKey> {
        &self.edges
    }

    pub fn adjacency(&self) -> BTreeMap<&VertexId, BTreeSet<&VertexId>> {
        let mut adj: BTreeMap<&VertexId, BTreeSet<&VertexId>> =
            self.vertices.iter().map(|v| (v, BTreeSet::new())).collect();
        for e in &self.edges {
            adj.entry(e.first()).or_default().insert(e.second());
            adj.entry(e.second()).or_default().insert(e.first());
        }
        adj
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut components = 0;
        for start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &adj[v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// If the graph is a single cycle, the vertex sequence of a walk around it
    /// starting at the smallest id and heading to its smaller neighbor.
    pub fn cycle_walk(&self) -> Option<Vec<VertexId>> {
        if self.vertices.len() < 3 || self.edges.len() != self.vertices.len() {
            return None;
        }
        let adj = self.adjacency();
        if adj.values().any(|n| n.len() != 2) || !self.is_connected() {
            return None;
        }
        let start = self.vertices.iter().next()?;
        let mut walk = vec![start.clone()];
        let mut prev = start;
        let mut current = *adj[start].iter().next()?;
        while current != start {
            walk.push(current.clone());
            let next = *adj[current].iter().find(|&&u| u != prev)?;
            prev = current;
            current = next;
        }
        Some(walk)
    }
}

/// Keeps vertices and edges with at least one nonzero membership component.
pub fn underlying_crisp_graph(g: &BipolarFuzzyGraph) -> CrispGraph {
    CrispGraph {
        vertices: g.vertices().filter(|(_, b)| b.is_supported()).map(|(v, _)| v.clone()).collect(),
        edges: g.edges().filter(|(_, b)| b.is_supported()).map(|(k, _)| k.clone()).collect(),
    }
}

/// Connectivity of the underlying crisp graph; empty and single-vertex graphs count as connected.
pub fn is_connected(g: &BipolarFuzzyGraph) -> bool {
    underlying_crisp_graph(g).is_connected()
}
