//! Graph transforms: complement, strong completion, and even-cycle edge patterns.

use serde::Serialize;

use crate::bipolar::Bipolar;
use crate::classify::regularity;
use crate::graph::{underlying_crisp_graph, BipolarFuzzyGraph, GraphBuilder, VertexId};
use crate::scalar::Scalar;

/// Complement over all unordered vertex pairs, absent edges counting as `(0,0)`.
///
/// Each side is handled independently: a nonzero side becomes zero, a zero
/// side is raised to the endpoint bound. Pairs ending at `(0,0)` are omitted.
pub fn complement(g: &BipolarFuzzyGraph) -> BipolarFuzzyGraph {
    let mut builder = GraphBuilder::new();
    let vertices: Vec<(&VertexId, Bipolar)> = g.vertices().collect();
    for &(v, b) in &vertices {
        builder.add_vertex(v.clone(), b).expect("ids are unique");
    }
    for (i, &(u, bu)) in vertices.iter().enumerate() {
        for &(v, bv) in &vertices[i + 1..] {
            let old = g.edge(u, v).unwrap_or(Bipolar::ZERO);
            let bound = bu.intersection(bv);
            let pos = if old.pos().is_positive() { Scalar::ZERO } else { bound.pos() };
            let neg = if old.neg().is_negative() { Scalar::ZERO } else { bound.neg() };
            let value = Bipolar::new(pos, neg).expect("bounds are valid memberships");
            if value.is_supported() {
                builder.add_edge(u.clone(), v.clone(), value).expect("value is at the domination bound");
            }
        }
    }
    builder.build()
}

/// Same incidence, each edge raised to `(min pos, max neg)` of its endpoints.
pub fn strong_completion(g: &BipolarFuzzyGraph) -> BipolarFuzzyGraph {
    let mut builder = GraphBuilder::new();
    for (v, b) in g.vertices() {
        builder.add_vertex(v.clone(), b).expect("ids are unique");
    }
    for (k, _) in g.edges() {
        let bound = g.vertex(k.first().as_str()).unwrap().intersection(g.vertex(k.second().as_str()).unwrap());
        builder.add_edge(k.first().clone(), k.second().clone(), bound).expect("bound dominates itself");
    }
    builder.build()
}

/// Shape of one membership side along an even cycle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum SidePattern {
    Constant { value: Scalar },
    /// `odd` on the 1st, 3rd, ... edge of the walk; `even` on the others.
    Alternating { odd: Scalar, even: Scalar },
}

impl SidePattern {
    pub fn is_constant(self) -> bool {
        matches!(self, SidePattern::Constant { .. })
    }

    /// `(odd, even)` values; equal when constant.
    pub fn values(self) -> (Scalar, Scalar) {
        match self {
            SidePattern::Constant { value } => (value, value),
            SidePattern::Alternating { odd, even } => (odd, even),
        }
    }

    fn of(values: &[Scalar]) -> Option<SidePattern> {
        let (odd, even) = (values[0], values[1]);
        let alternating = values.iter().enumerate().all(|(i, &v)| v == if i % 2 == 0 { odd } else { even });
        if !alternating {
            None
        } else if odd == even {
            Some(SidePattern::Constant { value: odd })
        } else {
            Some(SidePattern::Alternating { odd, even })
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    ConstantBoth,
    AlternatingBoth,
    ConstantPosAlternatingNeg,
    AlternatingPosConstantNeg,
    NotApplicable,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CyclePattern {
    NotApplicable,
    EvenCycle {
        /// Vertices in walk order; edge `i` joins `walk[i]` and `walk[i + 1]` (cyclically).
        walk: Vec<VertexId>,
        positive: SidePattern,
        negative: SidePattern,
    },
}

impl CyclePattern {
    pub fn kind(&self) -> PatternKind {
        match self {
            CyclePattern::NotApplicable => PatternKind::NotApplicable,
            CyclePattern::EvenCycle { positive, negative, .. } => {
                match (positive.is_constant(), negative.is_constant()) {
                    (true, true) => PatternKind::ConstantBoth,
                    (false, false) => PatternKind::AlternatingBoth,
                    (true, false) => PatternKind::ConstantPosAlternatingNeg,
                    (false, true) => PatternKind::AlternatingPosConstantNeg,
                }
            }
        }
    }

    /// Edge values implied by the pattern, in walk order.
    pub fn reconstruct_edges(&self) -> Vec<(VertexId, VertexId, Bipolar)> {
        let CyclePattern::EvenCycle { walk, positive, negative } = self else {
            return Vec::new();
        };
        let (p_odd, p_even) = positive.values();
        let (n_odd, n_even) = negative.values();
        (0..walk.len())
            .map(|i| {
                let (pos, neg) = if i % 2 == 0 { (p_odd, n_odd) } else { (p_even, n_even) };
                let value = Bipolar::new(pos, neg).expect("pattern values come from edges");
                (walk[i].clone(), walk[(i + 1) % walk.len()].clone(), value)
            })
            .collect()
    }
}

/// Edge values of `g` around its crisp cycle, if the crisp graph is a single
/// even cycle of length at least four.
pub fn even_cycle_edges(g: &BipolarFuzzyGraph) -> Option<(Vec<VertexId>, Vec<Bipolar>)> {
    let walk = underlying_crisp_graph(g).cycle_walk()?;
    if walk.len() < 4 || walk.len() % 2 != 0 {
        return None;
    }
    let values = (0..walk.len())
        .map(|i| g.edge(&walk[i], &walk[(i + 1) % walk.len()]).expect("crisp edge is stored"))
        .collect();
    Some((walk, values))
}

/// Per-side pattern of an even cycle, ignoring regularity. `None` when the
/// graph is not an even cycle or some side is neither constant nor alternating.
pub fn alternation(g: &BipolarFuzzyGraph) -> Option<CyclePattern> {
    let (walk, values) = even_cycle_edges(g)?;
    let pos: Vec<Scalar> = values.iter().map(|b| b.pos()).collect();
    let neg: Vec<Scalar> = values.iter().map(|b| b.neg()).collect();
    Some(CyclePattern::EvenCycle { walk, positive: SidePattern::of(&pos)?, negative: SidePattern::of(&neg)? })
}

/// Pattern of a regular even cycle; `NotApplicable` for anything else.
pub fn cycle_pattern(g: &BipolarFuzzyGraph) -> CyclePattern {
    let regular = regularity(g).ok().and_then(|r| r.regular).is_some();
    if !regular {
        return CyclePattern::NotApplicable;
    }
    // On a regular cycle consecutive edges sum to the common degree, so the
    // sides always alternate.
    alternation(g).unwrap_or(CyclePattern::NotApplicable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use crate::graph::EdgeKey;

    fn id(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn bp(p: &str, n: &str) -> Bipolar {
        Bipolar::parse(p, n).unwrap()
    }

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn f1_vertices_only() -> BipolarFuzzyGraph {
        BipolarFuzzyGraph::from_literals(
            &[("v1", "0.5", "-0.4"), ("v2", "0.6", "-0.5"), ("v3", "0.8", "-0.5")],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn complement_of_f1_is_edgeless() {
        let c = complement(&fixtures()["F1"]);
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertices().collect::<Vec<_>>(), fixtures()["F1"].vertices().collect::<Vec<_>>());
    }

    #[test]
    fn complement_of_edgeless_is_strong_complete() {
        let c = complement(&f1_vertices_only());
        assert_eq!(c.edge(&id("v1"), &id("v2")), Some(bp("0.5", "-0.4")));
        assert_eq!(c.edge(&id("v1"), &id("v3")), Some(bp("0.5", "-0.4")));
        assert_eq!(c.edge(&id("v2"), &id("v3")), Some(bp("0.6", "-0.5")));
    }

    #[test]
    fn complement_sides_are_independent() {
        let g = BipolarFuzzyGraph::from_literals(
            &[("a", "0.5", "-0.4"), ("b", "0.6", "-0.3")],
            &[("a", "b", "0.3", "0")],
        )
        .unwrap();
        let c = complement(&g);
        assert_eq!(c.edge(&id("a"), &id("b")), Some(bp("0", "-0.3")));
    }

    #[test]
    fn complement_treats_zero_edge_as_absent() {
        let g = BipolarFuzzyGraph::from_literals(
            &[("a", "0.5", "-0.4"), ("b", "0.6", "-0.3")],
            &[("a", "b", "0", "0")],
        )
        .unwrap();
        assert_eq!(complement(&g).edge(&id("a"), &id("b")), Some(bp("0.5", "-0.3")));
    }

    #[test]
    fn strong_completion_examples() {
        let f1 = &fixtures()["F1"];
        let strong = strong_completion(f1);
        assert_eq!(strong.edge(&id("v1"), &id("v2")), Some(bp("0.5", "-0.4")));
        assert_eq!(strong.edge(&id("v1"), &id("v3")), Some(bp("0.5", "-0.4")));
        assert_eq!(strong.edge(&id("v2"), &id("v3")), Some(bp("0.6", "-0.5")));
        assert_eq!(strong_completion(&strong), strong);
        let edgeless = f1_vertices_only();
        assert_eq!(strong_completion(&edgeless), edgeless);
        assert_eq!(
            strong.edges().map(|(k, _)| k.clone()).collect::<Vec<EdgeKey>>(),
            f1.edges().map(|(k, _)| k.clone()).collect::<Vec<EdgeKey>>()
        );
    }

    #[test]
    fn f4_alternates_on_both_sides() {
        let p = cycle_pattern(&fixtures()["F4"]);
        assert_eq!(p.kind(), PatternKind::AlternatingBoth);
        let CyclePattern::EvenCycle { positive, negative, .. } = &p else { panic!() };
        assert_eq!(positive.values(), (s("0.2"), s("0.4")));
        assert_eq!(negative.values(), (s("-0.1"), s("-0.3")));
    }

    #[test]
    fn constant_six_cycle() {
        let vs: Vec<(String, &str, &str)> = (1..=6).map(|i| (format!("v{i}"), "0.5", "-0.5")).collect();
        let es: Vec<(String, String)> = (1..=6).map(|i| (format!("v{i}"), format!("v{}", i % 6 + 1))).collect();
        let vrefs: Vec<(&str, &str, &str)> = vs.iter().map(|(a, b, c)| (a.as_str(), *b, *c)).collect();
        let erefs: Vec<(&str, &str, &str, &str)> =
            es.iter().map(|(a, b)| (a.as_str(), b.as_str(), "0.3", "-0.2")).collect();
        let g = BipolarFuzzyGraph::from_literals(&vrefs, &erefs).unwrap();
        let p = cycle_pattern(&g);
        assert_eq!(p.kind(), PatternKind::ConstantBoth);
    }

    #[test]
    fn odd_cycle_and_irregular_cycle_are_not_applicable() {
        assert_eq!(cycle_pattern(&fixtures()["F1"]), CyclePattern::NotApplicable);
        let g = BipolarFuzzyGraph::from_literals(
            &[("a", "1", "-1"), ("b", "1", "-1"), ("c", "1", "-1"), ("d", "1", "-1")],
            &[
                ("a", "b", "0.1", "-0.1"),
                ("b", "c", "0.2", "-0.1"),
                ("c", "d", "0.3", "-0.1"),
                ("d", "a", "0.2", "-0.1"),
            ],
        )
        .unwrap();
        assert_eq!(cycle_pattern(&g), CyclePattern::NotApplicable);
        assert!(alternation(&g).is_none());
    }

    #[test]
    fn mixed_kind_and_reconstruction() {
        let g = BipolarFuzzyGraph::from_literals(
            &[("a", "1", "-1"), ("b", "1", "-1"), ("c", "1", "-1"), ("d", "1", "-1")],
            &[
                ("a", "b", "0.1", "-0.2"),
                ("b", "c", "0.1", "-0.3"),
                ("c", "d", "0.1", "-0.2"),
                ("d", "a", "0.1", "-0.3"),
            ],
        )
        .unwrap();
        let p = cycle_pattern(&g);
        assert_eq!(p.kind(), PatternKind::ConstantPosAlternatingNeg);
        for (u, v, value) in p.reconstruct_edges() {
            assert_eq!(g.edge(&u, &v), Some(value));
        }
    }
}
