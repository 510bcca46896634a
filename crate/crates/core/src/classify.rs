//! Regularity and irregularity predicates.
//!
//! Adjacency here means "joined by a stored edge". Predicates quantified over
//! every edge (neighbourly variants) or every vertex (highly irregular) are
//! vacuously true on edgeless graphs; existential ones (irregular, totally
//! irregular) are false there. None of them require connectivity, which is
//! reported separately in [`ClassificationReport::connected`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_connected, BipolarFuzzyGraph, VertexId};
use crate::metrics::{degrees, total_degrees, Degree, SignedSum, TotalDegree};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct RegularityReport {
    /// Common degree `(k1, k2)` when every vertex has the same degree.
    pub regular: Option<Degree>,
    /// Common total degree `(k, k')` when every vertex has the same total degree.
    pub totally_regular: Option<TotalDegree>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationReport {
    pub complete: bool,
    pub strong: bool,
    pub connected: bool,
    pub regularity: RegularityReport,
    pub irregular: bool,
    pub neighbourly_irregular: bool,
    pub totally_irregular: bool,
    pub neighbourly_totally_irregular: bool,
    pub highly_irregular: bool,
}

/// A vertex with two neighbors of equal degree: the reason a graph is not
/// highly irregular.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RepeatedNeighbourDegree {
    pub vertex: VertexId,
    pub first: VertexId,
    pub second: VertexId,
    pub degree: Degree,
}

/// Every pair of distinct vertices is joined by an edge attaining both bounds.
pub fn is_complete(g: &BipolarFuzzyGraph) -> bool {
    let vertices: Vec<_> = g.vertices().collect();
    vertices.iter().enumerate().all(|(i, (u, bu))| {
        vertices[i + 1..].iter().all(|(v, bv)| g.edge(u, v) == Some(bu.intersection(*bv)))
    })
}

/// Every existing edge attains both bounds.
pub fn is_strong(g: &BipolarFuzzyGraph) -> bool {
    g.edges().all(|(k, e)| {
        let bound = g.vertex(k.first().as_str()).unwrap().intersection(g.vertex(k.second().as_str()).unwrap());
        e == bound
    })
}

fn common_value(values: impl IntoIterator<Item = SignedSum>) -> Option<SignedSum> {
    let mut iter = values.into_iter();
    let first = iter.next()?;
    iter.all(|v| v == first).then_some(first)
}

pub fn regularity(g: &BipolarFuzzyGraph) -> Result<RegularityReport> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(RegularityReport {
        regular: common_value(degrees(g).into_values()),
        totally_regular: common_value(total_degrees(g).into_values()),
    })
}

fn some_edge_differs(g: &BipolarFuzzyGraph, values: &BTreeMap<VertexId, SignedSum>) -> bool {
    g.edges().any(|(k, _)| values[k.first()] != values[k.second()])
}

fn every_edge_differs(g: &BipolarFuzzyGraph, values: &BTreeMap<VertexId, SignedSum>) -> bool {
    g.edges().all(|(k, _)| values[k.first()] != values[k.second()])
}

pub fn is_irregular(g: &BipolarFuzzyGraph) -> bool {
    some_edge_differs(g, &degrees(g))
}

pub fn is_neighbourly_irregular(g: &BipolarFuzzyGraph) -> bool {
    every_edge_differs(g, &degrees(g))
}

pub fn is_totally_irregular(g: &BipolarFuzzyGraph) -> bool {
    some_edge_differs(g, &total_degrees(g))
}

pub fn is_neighbourly_totally_irregular(g: &BipolarFuzzyGraph) -> bool {
    every_edge_differs(g, &total_degrees(g))
}

/// Every vertex's neighbors have pairwise distinct degrees.
pub fn is_highly_irregular(g: &BipolarFuzzyGraph) -> bool {
    repeated_neighbour_degree(g).is_none()
}

/// First vertex (in id order) whose neighborhood repeats a degree.
pub fn repeated_neighbour_degree(g: &BipolarFuzzyGraph) -> Option<RepeatedNeighbourDegree> {
    let d = degrees(g);
    for v in g.vertex_ids() {
        let mut seen: BTreeMap<(i64, i64), &VertexId> = BTreeMap::new();
        for u in g.neighbors(v.as_str()).expect("vertex from the graph") {
            let key = (d[u].pos.units(), d[u].neg.units());
            if let Some(first) = seen.insert(key, u) {
                return Some(RepeatedNeighbourDegree {
                    vertex: v.clone(),
                    first: first.clone(),
                    second: u.clone(),
                    degree: d[u],
                });
            }
        }
    }
    None
}

/// First pair of vertices (in id order) sharing a degree.
pub fn equal_degree_pair(g: &BipolarFuzzyGraph) -> Option<(VertexId, VertexId, Degree)> {
    let d: Vec<(VertexId, Degree)> = degrees(g).into_iter().collect();
    for (i, (u, du)) in d.iter().enumerate() {
        if let Some((v, _)) = d[i + 1..].iter().find(|(_, dv)| dv == du) {
            return Some((u.clone(), v.clone(), *du));
        }
    }
    None
}

/// Whether all vertex degrees are pairwise distinct.
pub fn all_degrees_distinct(g: &BipolarFuzzyGraph) -> bool {
    equal_degree_pair(g).is_none()
}

/// Whether every vertex carries the same membership.
pub fn has_constant_vertex_function(g: &BipolarFuzzyGraph) -> bool {
    let mut values = g.vertices().map(|(_, b)| b);
    match values.next() {
        Some(first) => values.all(|b| b == first),
        None => true,
    }
}

pub fn classify(g: &BipolarFuzzyGraph) -> ClassificationReport {
    let d = degrees(g);
    let td = total_degrees(g);
    ClassificationReport {
        complete: is_complete(g),
        strong: is_strong(g),
        connected: is_connected(g),
        regularity: regularity(g).unwrap_or_default(),
        irregular: some_edge_differs(g, &d),
        neighbourly_irregular: every_edge_differs(g, &d),
        totally_irregular: some_edge_differs(g, &td),
        neighbourly_totally_irregular: every_edge_differs(g, &td),
        highly_irregular: is_highly_irregular(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use crate::graph::GraphBuilder;
    use crate::transform::strong_completion;

    fn ss(p: &str, n: &str) -> SignedSum {
        SignedSum::parse(p, n).unwrap()
    }

    fn id(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn edgeless() -> BipolarFuzzyGraph {
        BipolarFuzzyGraph::from_literals(&[("a", "0.5", "-0.5"), ("b", "0.3", "-0.2")], &[]).unwrap()
    }

    fn strong_triangle() -> BipolarFuzzyGraph {
        BipolarFuzzyGraph::from_literals(
            &[("v1", "0.5", "-0.4"), ("v2", "0.6", "-0.5"), ("v3", "0.8", "-0.5")],
            &[("v1", "v2", "0.5", "-0.4"), ("v1", "v3", "0.5", "-0.4"), ("v2", "v3", "0.6", "-0.5")],
        )
        .unwrap()
    }

    #[test]
    fn complete_examples() {
        assert!(!is_complete(&fixtures()["F1"]));
        assert!(is_complete(&strong_triangle()));
        assert!(is_complete(&BipolarFuzzyGraph::from_literals(&[("v", "0.1", "-0.1")], &[]).unwrap()));
        assert!(!is_complete(&edgeless()));
    }

    #[test]
    fn strong_examples() {
        let f1 = &fixtures()["F1"];
        assert!(!is_strong(f1));
        assert!(is_strong(&strong_completion(f1)));
        assert!(is_strong(&edgeless()));
        // Strong but not complete: a path.
        let path = BipolarFuzzyGraph::from_literals(
            &[("a", "0.5", "-0.5"), ("b", "0.5", "-0.5"), ("c", "0.5", "-0.5")],
            &[("a", "b", "0.5", "-0.5"), ("b", "c", "0.5", "-0.5")],
        )
        .unwrap();
        assert!(is_strong(&path) && !is_complete(&path));
    }

    #[test]
    fn regularity_examples() {
        let fx = fixtures();
        let r = regularity(&fx["F4"]).unwrap();
        assert_eq!(r.regular, Some(ss("0.6", "-0.4")));
        assert_eq!(r.totally_regular, Some(ss("1.2", "-1.0")));
        assert_eq!(regularity(&fx["F1"]).unwrap().regular, None);
        let lone = BipolarFuzzyGraph::from_literals(&[("x", "0.3", "-0.2")], &[]).unwrap();
        let r = regularity(&lone).unwrap();
        assert_eq!(r.regular, Some(SignedSum::ZERO));
        assert_eq!(r.totally_regular, Some(ss("0.3", "-0.2")));
        assert_eq!(regularity(&BipolarFuzzyGraph::empty()).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn irregular_examples() {
        let fx = fixtures();
        assert!(is_irregular(&fx["F5"]));
        assert!(!is_irregular(&fx["F4"]));
        assert!(!is_irregular(&edgeless()));
    }

    #[test]
    fn neighbourly_irregular_examples() {
        let fx = fixtures();
        assert!(!is_neighbourly_irregular(&fx["F2"]));
        assert!(is_neighbourly_irregular(&fx["F1"]));
        assert!(is_neighbourly_irregular(&fx["F3"]));
        assert!(is_neighbourly_irregular(&edgeless()));
    }

    #[test]
    fn totally_irregular_examples() {
        let fx = fixtures();
        assert!(is_totally_irregular(&fx["F1"]));
        assert!(!is_totally_irregular(&fx["F4"]));
        assert!(!is_totally_irregular(&edgeless()));
    }

    #[test]
    fn neighbourly_totally_irregular_examples() {
        let fx = fixtures();
        assert!(is_neighbourly_totally_irregular(&fx["F1"]));
        assert!(!is_neighbourly_totally_irregular(&fx["F4"]));
        assert!(is_neighbourly_totally_irregular(&edgeless()));

        // F4 with v1 raised to (0.7,-0.6): td(v1) = (1.3,-1.0) against (1.2,-1.0)
        // on both neighbors, but v2 and v3 still share total degrees.
        let mut b = fx["F4"].to_builder();
        b.set_vertex(&id("v1"), crate::bipolar::Bipolar::parse("0.7", "-0.6").unwrap()).unwrap();
        let bumped = b.build();
        assert!(is_totally_irregular(&bumped));
        assert!(!is_neighbourly_totally_irregular(&bumped));
    }

    #[test]
    fn highly_irregular_examples() {
        let fx = fixtures();
        assert!(is_highly_irregular(&fx["F3"]));
        assert!(!is_highly_irregular(&fx["F2"]));
        assert_eq!(
            repeated_neighbour_degree(&fx["F2"]),
            Some(RepeatedNeighbourDegree {
                vertex: id("v2"),
                first: id("v3"),
                second: id("v4"),
                degree: ss("0.6", "-0.7"),
            })
        );
        assert!(is_highly_irregular(&edgeless()));
    }

    #[test]
    fn classify_examples() {
        let fx = fixtures();
        let f4 = classify(&fx["F4"]);
        assert_eq!(f4.regularity.regular, Some(ss("0.6", "-0.4")));
        assert_eq!(f4.regularity.totally_regular, Some(ss("1.2", "-1.0")));
        assert!(!f4.irregular && !f4.neighbourly_irregular && !f4.highly_irregular);
        assert!(f4.connected);

        let f1 = classify(&fx["F1"]);
        assert!(f1.connected && f1.irregular && f1.neighbourly_irregular && f1.totally_irregular);
        assert!(!f1.complete && !f1.strong);

        let f2 = classify(&fx["F2"]);
        assert!(!f2.neighbourly_irregular && !f2.highly_irregular && f2.irregular);

        let empty = classify(&BipolarFuzzyGraph::empty());
        assert_eq!(empty.regularity, RegularityReport::default());
    }

    #[test]
    fn zero_edges_are_adjacency_but_not_support() {
        // A (0,0) edge joins equal-degree vertices, so it blocks neighbourly irregularity.
        let mut b = GraphBuilder::new();
        b.add_vertex(id("a"), crate::bipolar::Bipolar::parse("0.5", "-0.5").unwrap()).unwrap();
        b.add_vertex(id("b"), crate::bipolar::Bipolar::parse("0.5", "-0.5").unwrap()).unwrap();
        b.add_edge(id("a"), id("b"), crate::bipolar::Bipolar::ZERO).unwrap();
        let g = b.build();
        assert!(!is_neighbourly_irregular(&g));
        assert!(!classify(&g).connected);
    }

    #[test]
    fn distinct_degree_helpers() {
        let fx = fixtures();
        assert!(all_degrees_distinct(&fx["F1"]));
        assert_eq!(equal_degree_pair(&fx["F3"]), Some((id("v1"), id("v4"), ss("0.3", "-0.3"))));
        assert!(has_constant_vertex_function(&fx["F3"]));
        assert!(!has_constant_vertex_function(&fx["F1"]));
    }
}
