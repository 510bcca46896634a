//! Per-graph checkers for the structural theorems, plus a bounded
//! counterexample search.
//!
//! Every checker distinguishes three outcomes: the hypothesis is not met
//! ([`Outcome::Vacuous`]), the conclusion holds, or it fails. Failing verdicts
//! always carry a [`Witness`] that can be re-checked against the graph.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bipolar::Bipolar;
use crate::classify::{
    equal_degree_pair, has_constant_vertex_function, is_neighbourly_irregular, regularity,
    repeated_neighbour_degree,
};
use crate::error::{Error, Result};
use crate::gen::{generate, vertex_names, GenSpec};
use crate::graph::{underlying_crisp_graph, BipolarFuzzyGraph, GraphBuilder, VertexId};
use crate::metrics::{degree, degrees, order, size, total_degrees, SignedSum};
use crate::scalar::Scalar;
use crate::transform::{alternation, complement, even_cycle_edges};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(into = "&'static str")]
pub enum Theorem {
    /// Sum of all degrees equals twice the size.
    Handshake,
    /// On an even cycle: regular iff edge values are constant or alternate.
    EvenCycleRegularity,
    /// Size of a `(k1,k2)`-regular graph is `(p*k1/2, p*k2/2)`.
    RegularSize,
    /// `2*size + order = p*(k,k')` for a `(k,k')`-totally regular graph.
    TotallyRegularRelation,
    /// Neighbourly and highly irregular iff all degrees are distinct.
    DistinctDegrees,
    /// All degrees distinct implies neighbourly and highly irregular.
    DistinctDegreesForward,
    /// Neighbourly and highly irregular implies all degrees distinct.
    DistinctDegreesConverse,
    /// Neighbourly irregular with constant vertices implies neighbourly totally irregular.
    NeighbourlyToTotal,
    /// Neighbourly totally irregular with constant vertices implies neighbourly irregular.
    TotalToNeighbourly,
    /// A neighbourly irregular graph with an equal-degree non-adjacent pair
    /// has a complement that is not neighbourly irregular.
    ComplementRemark,
}

impl Theorem {
    /// Everything `verify --theorem all` runs, in report order.
    pub const ALL: [Theorem; 9] = [
        Theorem::Handshake,
        Theorem::EvenCycleRegularity,
        Theorem::RegularSize,
        Theorem::TotallyRegularRelation,
        Theorem::DistinctDegreesForward,
        Theorem::DistinctDegreesConverse,
        Theorem::NeighbourlyToTotal,
        Theorem::TotalToNeighbourly,
        Theorem::ComplementRemark,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Handshake => "handshake",
            Theorem::EvenCycleRegularity => "thm1",
            Theorem::RegularSize => "thm2",
            Theorem::TotallyRegularRelation => "thm3",
            Theorem::DistinctDegrees => "thm4",
            Theorem::DistinctDegreesForward => "thm4-forward",
            Theorem::DistinctDegreesConverse => "thm4-converse",
            Theorem::NeighbourlyToTotal => "thm5",
            Theorem::TotalToNeighbourly => "thm6",
            Theorem::ComplementRemark => "complement-remark",
        }
    }
}

impl From<Theorem> for &'static str {
    fn from(t: Theorem) -> &'static str {
        t.id()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Theorem> {
        [Theorem::DistinctDegrees]
            .into_iter()
            .chain(Theorem::ALL)
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Vacuous,
    Fails,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Vacuous => "vacuous",
            Outcome::Fails => "FAILS",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Labelled {
    pub label: String,
    pub value: SignedSum,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Witness {
    pub vertices: Vec<VertexId>,
    pub values: Vec<Labelled>,
}

impl Witness {
    fn with(vertices: &[&VertexId], values: &[(&str, SignedSum)]) -> Witness {
        Witness {
            vertices: vertices.iter().map(|&v| v.clone()).collect(),
            values: values.iter().map(|(l, v)| Labelled { label: l.to_string(), value: *v }).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub theorem: Theorem,
    pub outcome: Outcome,
    pub holds: bool,
    pub note: String,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(theorem: Theorem, outcome: Outcome, note: impl Into<String>, witness: Option<Witness>) -> Verdict {
        Verdict { theorem, outcome, holds: outcome != Outcome::Fails, note: note.into(), witness }
    }

    fn vacuous(theorem: Theorem, note: impl Into<String>) -> Verdict {
        Verdict::new(theorem, Outcome::Vacuous, note, None)
    }

    fn decide(theorem: Theorem, ok: bool, note: impl Into<String>, witness: Witness) -> Verdict {
        let outcome = if ok { Outcome::Holds } else { Outcome::Fails };
        Verdict::new(theorem, outcome, note, Some(witness))
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    /// Re-runs the same checker on `g` and compares outcomes.
    pub fn recheck(&self, g: &BipolarFuzzyGraph) -> bool {
        check(self.theorem, g).outcome == self.outcome
    }
}

pub fn check(theorem: Theorem, g: &BipolarFuzzyGraph) -> Verdict {
    match theorem {
        Theorem::Handshake => check_handshake(g),
        Theorem::EvenCycleRegularity => check_thm1(g),
        Theorem::RegularSize => check_regular_size(g),
        Theorem::TotallyRegularRelation => check_totally_regular_relation(g),
        Theorem::DistinctDegrees => check_thm4_biconditional(g),
        Theorem::DistinctDegreesForward => check_thm4(g).0,
        Theorem::DistinctDegreesConverse => check_thm4(g).1,
        Theorem::NeighbourlyToTotal => check_thm5(g),
        Theorem::TotalToNeighbourly => check_thm6(g),
        Theorem::ComplementRemark => check_complement_remark(g),
    }
}

pub fn check_all(g: &BipolarFuzzyGraph) -> Vec<Verdict> {
    Theorem::ALL.iter().map(|&t| check(t, g)).collect()
}

pub fn check_handshake(g: &BipolarFuzzyGraph) -> Verdict {
    // Per-vertex incidence sums, independent of the edge-list sum behind `size`.
    let degree_sum: SignedSum =
        g.vertex_ids().map(|v| degree(g, v.as_str()).expect("vertex from the graph")).sum();
    let twice_size = size(g) * 2;
    Verdict::decide(
        Theorem::Handshake,
        degree_sum == twice_size,
        "sum of degrees against twice the size",
        Witness::with(&[], &[("sum_degrees", degree_sum), ("twice_size", twice_size)]),
    )
}

pub fn check_thm1(g: &BipolarFuzzyGraph) -> Verdict {
    let t = Theorem::EvenCycleRegularity;
    if underlying_crisp_graph(g).vertices().len() != g.vertex_count() {
        return Verdict::vacuous(t, "some vertex has zero membership, so the crisp graph does not span the graph");
    }
    let Some((walk, _)) = even_cycle_edges(g) else {
        return Verdict::vacuous(t, "underlying crisp graph is not an even cycle");
    };
    let reg = regularity(g).expect("cycle is nonempty").regular;
    let pattern = alternation(g);
    let ok = reg.is_some() == pattern.is_some();
    let note = match (reg.is_some(), pattern.is_some()) {
        (true, true) => "regular, and edge values are constant or alternate",
        (false, false) => "not regular, and edge values neither repeat nor alternate",
        (true, false) => "regular, yet edge values do not alternate",
        (false, true) => "edge values alternate, yet the graph is not regular",
    };
    let d = degrees(g);
    let refs: Vec<&VertexId> = walk.iter().collect();
    let values: Vec<(&str, SignedSum)> = walk.iter().map(|v| ("degree", d[v])).collect();
    Verdict::decide(t, ok, note, Witness::with(&refs, &values))
}

pub fn check_regular_size(g: &BipolarFuzzyGraph) -> Verdict {
    let t = Theorem::RegularSize;
    let Some(k) = regularity(g).ok().and_then(|r| r.regular) else {
        return Verdict::vacuous(t, "not regular");
    };
    let p = g.vertex_count() as i64;
    // size = p*k/2, compared as 2*size = p*k to stay within exact arithmetic.
    let twice_size = size(g) * 2;
    let pk = k * p;
    Verdict::decide(
        t,
        twice_size == pk,
        format!("p = {p}, k = {k}, size = {}", size(g)),
        Witness::with(&[], &[("k", k), ("twice_size", twice_size), ("p_times_k", pk)]),
    )
}

pub fn check_totally_regular_relation(g: &BipolarFuzzyGraph) -> Verdict {
    let t = Theorem::TotallyRegularRelation;
    let Some(k) = regularity(g).ok().and_then(|r| r.totally_regular) else {
        return Verdict::vacuous(t, "not totally regular");
    };
    let p = g.vertex_count() as i64;
    let lhs = size(g) * 2 + order(g);
    let rhs = k * p;
    Verdict::decide(
        t,
        lhs == rhs,
        format!("p = {p}, total degree = {k}"),
        Witness::with(&[], &[("twice_size_plus_order", lhs), ("p_times_k", rhs)]),
    )
}

/// `(forward, converse)` directions of the distinct-degree characterisation.
pub fn check_thm4(g: &BipolarFuzzyGraph) -> (Verdict, Verdict) {
    let d = degrees(g);
    let equal_pair = equal_degree_pair(g);
    let repeated = repeated_neighbour_degree(g);
    let adjacent_equal = g.edges().find(|(k, _)| d[k.first()] == d[k.second()]).map(|(k, _)| k.clone());
    let ni = adjacent_equal.is_none();
    let hi = repeated.is_none();

    let forward = if equal_pair.is_some() {
        Verdict::vacuous(Theorem::DistinctDegreesForward, "some two vertices share a degree")
    } else if ni && hi {
        Verdict::decide(
            Theorem::DistinctDegreesForward,
            true,
            "all degrees distinct; neighbourly and highly irregular",
            Witness::default(),
        )
    } else {
        // Unreachable for well-formed graphs, kept so a broken predicate surfaces as a verdict.
        let witness = match (&adjacent_equal, &repeated) {
            (Some(k), _) => Witness::with(&[k.first(), k.second()], &[("degree", d[k.first()])]),
            (None, Some(r)) => Witness::with(&[&r.vertex, &r.first, &r.second], &[("degree", r.degree)]),
            (None, None) => Witness::default(),
        };
        Verdict::decide(Theorem::DistinctDegreesForward, false, "distinct degrees but a predicate is false", witness)
    };

    let converse = if !(ni && hi) {
        Verdict::vacuous(Theorem::DistinctDegreesConverse, "not both neighbourly and highly irregular")
    } else {
        match equal_pair {
            None => Verdict::decide(
                Theorem::DistinctDegreesConverse,
                true,
                "neighbourly and highly irregular; all degrees distinct",
                Witness::default(),
            ),
            Some((u, v, du)) => Verdict::decide(
                Theorem::DistinctDegreesConverse,
                false,
                format!(
                    "neighbourly and highly irregular, but {u} and {v} share degree {du}; \
                     both properties only compare vertices at distance one or two, and these are farther apart"
                ),
                Witness::with(&[&u, &v], &[("degree", du), ("degree", d[&v])]),
            ),
        }
    };
    (forward, converse)
}

fn check_thm4_biconditional(g: &BipolarFuzzyGraph) -> Verdict {
    let (forward, converse) = check_thm4(g);
    let failed = [&forward, &converse].into_iter().find(|v| v.is_failure()).cloned();
    match failed {
        Some(v) => Verdict { theorem: Theorem::DistinctDegrees, ..v },
        None => Verdict::decide(
            Theorem::DistinctDegrees,
            true,
            format!("forward {}, converse {}", forward.outcome, converse.outcome),
            Witness::default(),
        ),
    }
}

fn constant_shift_check(
    g: &BipolarFuzzyGraph,
    theorem: Theorem,
    hypothesis: &BVals,
    conclusion: &BVals,
    names: (&str, &str),
) -> Verdict {
    if !has_constant_vertex_function(g) {
        return Verdict::vacuous(theorem, "vertex memberships are not constant");
    }
    if let Some((k, _)) = g.edges().find(|(k, _)| hypothesis[k.first()] == hypothesis[k.second()]) {
        return Verdict::vacuous(
            theorem,
            format!("not {}: {} and {} share {}", names.0, k.first(), k.second(), hypothesis[k.first()]),
        );
    }
    match g.edges().find(|(k, _)| conclusion[k.first()] == conclusion[k.second()]) {
        None => Verdict::decide(
            theorem,
            true,
            format!("constant vertex memberships; {} and {}", names.0, names.1),
            Witness::default(),
        ),
        Some((k, _)) => Verdict::decide(
            theorem,
            false,
            format!("{} but {} and {} share {}", names.0, k.first(), k.second(), conclusion[k.first()]),
            Witness::with(
                &[k.first(), k.second()],
                &[("hypothesis_first", hypothesis[k.first()]), ("hypothesis_second", hypothesis[k.second()])],
            ),
        ),
    }
}

type BVals = std::collections::BTreeMap<VertexId, SignedSum>;

pub fn check_thm5(g: &BipolarFuzzyGraph) -> Verdict {
    constant_shift_check(
        g,
        Theorem::NeighbourlyToTotal,
        &degrees(g),
        &total_degrees(g),
        ("neighbourly irregular", "neighbourly totally irregular"),
    )
}

pub fn check_thm6(g: &BipolarFuzzyGraph) -> Verdict {
    constant_shift_check(
        g,
        Theorem::TotalToNeighbourly,
        &total_degrees(g),
        &degrees(g),
        ("neighbourly totally irregular", "neighbourly irregular"),
    )
}

pub fn check_complement_remark(g: &BipolarFuzzyGraph) -> Verdict {
    let t = Theorem::ComplementRemark;
    if !is_neighbourly_irregular(g) {
        return Verdict::vacuous(t, "not neighbourly irregular");
    }
    let d = degrees(g);
    let ids: Vec<&VertexId> = g.vertex_ids().collect();
    let pair = ids.iter().enumerate().find_map(|(i, &u)| {
        ids[i + 1..].iter().find(|&&v| !g.has_edge(u, v) && d[u] == d[v]).map(|&v| (u, v))
    });
    let Some((u, v)) = pair else {
        return Verdict::vacuous(t, "no non-adjacent pair shares a degree");
    };
    let c = complement(g);
    let cd = degrees(&c);
    let clash = c.edges().find(|(k, _)| cd[k.first()] == cd[k.second()]).map(|(k, _)| k.clone());
    match clash {
        Some(k) => Verdict::decide(
            t,
            true,
            format!(
                "{u} and {v} share degree {} in the graph; complement edge {} {} joins equal degrees {}",
                d[u],
                k.first(),
                k.second(),
                cd[k.first()]
            ),
            Witness::with(
                &[u, v, k.first(), k.second()],
                &[("degree", d[u]), ("complement_degree", cd[k.first()])],
            ),
        ),
        None => Verdict::decide(
            t,
            false,
            format!(
                "{u} and {v} share degree {} in the graph, yet the complement is neighbourly irregular \
                 (complement degrees {} and {})",
                d[u], cd[u], cd[v]
            ),
            Witness::with(
                &[u, v],
                &[("degree", d[u]), ("complement_degree", cd[u]), ("complement_degree", cd[v])],
            ),
        ),
    }
}

/// A failing instance found by [`search_counterexamples`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    /// Generation index; results are ordered by it.
    pub index: u64,
    pub graph: BipolarFuzzyGraph,
    pub verdict: Verdict,
}

pub const MAX_SEARCH_VERTICES: usize = 8;

/// Runs `theorem`'s checker over `budget` generated graphs and returns every failure.
///
/// The first half of the budget (at most) walks an exhaustive enumeration of
/// labelled graphs on `1..=max_vertices` vertices with edge values `(g, -g)`
/// for `g` in `grid` and constant vertices; the rest are seeded random
/// graphs of several shapes. Candidate `i` depends only on `(i, seed, grid,
/// max_vertices, budget)`, so the result is the same at any thread count.
pub fn search_counterexamples(
    theorem: Theorem,
    max_vertices: usize,
    grid: &[Scalar],
    seed: u64,
    budget: u64,
) -> Result<Vec<Counterexample>> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    if let Some(bad) = grid.iter().find(|g| **g < Scalar::ZERO || **g > Scalar::ONE) {
        return Err(Error::InvalidGrid(format!("{bad} is outside [0,1]")));
    }
    if max_vertices == 0 || max_vertices > MAX_SEARCH_VERTICES {
        return Err(Error::InvalidSpec(format!(
            "max_vertices must be in 1..={MAX_SEARCH_VERTICES}, got {max_vertices}"
        )));
    }
    if budget == 0 {
        return Err(Error::InvalidSpec("budget must be positive".into()));
    }
    let mut levels = grid.to_vec();
    levels.sort();
    levels.dedup();
    let space = CandidateSpace::new(max_vertices, levels, seed, budget);

    let mut found: Vec<Counterexample> = (0..budget)
        .into_par_iter()
        .filter_map(|index| {
            let graph = space.candidate(index);
            let verdict = check(theorem, &graph);
            verdict.is_failure().then_some(Counterexample { index, graph, verdict })
        })
        .collect();
    found.sort_by_key(|c| c.index);
    Ok(found)
}

struct CandidateSpace {
    max_vertices: usize,
    levels: Vec<Scalar>,
    seed: u64,
    /// `(n, first index, block length)` for the exhaustive blocks in use.
    blocks: Vec<(usize, u64, u64)>,
    exhaustive: u64,
}

impl CandidateSpace {
    fn new(max_vertices: usize, levels: Vec<Scalar>, seed: u64, budget: u64) -> CandidateSpace {
        let cap = budget / 2;
        let radix = levels.len() as u64 + 1;
        let mut blocks = Vec::new();
        let mut start = 0u64;
        for n in 1..=max_vertices {
            if start >= cap {
                break;
            }
            let pairs = (n * (n - 1) / 2) as u32;
            let len = radix.checked_pow(pairs).unwrap_or(u64::MAX).min(cap - start);
            blocks.push((n, start, len));
            start += len;
        }
        CandidateSpace { max_vertices, levels, seed, blocks, exhaustive: start }
    }

    fn candidate(&self, index: u64) -> BipolarFuzzyGraph {
        if index < self.exhaustive {
            let &(n, start, _) = self
                .blocks
                .iter()
                .rev()
                .find(|(_, s, _)| *s <= index)
                .expect("index within exhaustive range");
            self.enumerated(n, index - start)
        } else {
            self.random(index)
        }
    }

    fn mirrored(&self, level: Scalar) -> Bipolar {
        Bipolar::new(level, -level).expect("grid checked to lie in [0,1]")
    }

    fn enumerated(&self, n: usize, mut code: u64) -> BipolarFuzzyGraph {
        let radix = self.levels.len() as u64 + 1;
        let vertex = self.mirrored(*self.levels.last().expect("nonempty grid"));
        let names = vertex_names(n);
        let mut builder = GraphBuilder::new();
        for name in &names {
            builder.add_vertex(name.clone(), vertex).expect("fresh ids");
        }
        for i in 0..n {
            for j in i + 1..n {
                let digit = code % radix;
                code /= radix;
                if digit > 0 {
                    let value = self.mirrored(self.levels[digit as usize - 1]);
                    builder.add_edge(names[i].clone(), names[j].clone(), value).expect("dominated by max level");
                }
            }
        }
        builder.build()
    }

    fn random(&self, index: u64) -> BipolarFuzzyGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(self.seed ^ splitmix64(index)));
        let n = rng.random_range(1..=self.max_vertices);
        let mirrored: Vec<Bipolar> = self.levels.iter().map(|&l| self.mirrored(l)).collect();
        let crossed: Vec<Bipolar> = self
            .levels
            .iter()
            .flat_map(|&a| self.levels.iter().map(move |&b| Bipolar::new(a, -b).expect("in range")))
            .collect();
        let grid = if rng.random_bool(0.5) { mirrored } else { crossed };
        let random_spec = |rng: &mut ChaCha8Rng| GenSpec::Random {
            n,
            edge_probability: Scalar::from_units(rng.random_range(0..=crate::scalar::SCALE)),
            grid: grid.clone(),
            seed: rng.random(),
        };
        match rng.random_range(0..4u8) {
            0 | 1 => generate(&random_spec(&mut rng)).expect("valid random spec"),
            2 => {
                let base = random_spec(&mut rng);
                generate(&GenSpec::ConstantVertex { base: Box::new(base), vertex: None }).expect("valid spec")
            }
            _ => {
                if self.max_vertices < 4 {
                    return generate(&random_spec(&mut rng)).expect("valid random spec");
                }
                // Arbitrary (not necessarily regular) even cycle.
                let len = 2 * rng.random_range(2..=self.max_vertices / 2);
                let names = vertex_names(len);
                let values: Vec<Bipolar> = (0..len).map(|_| grid[rng.random_range(0..grid.len())]).collect();
                let vertex = values.iter().copied().fold(Bipolar::ZERO, Bipolar::union);
                let mut builder = GraphBuilder::new();
                for name in &names {
                    builder.add_vertex(name.clone(), vertex).expect("fresh ids");
                }
                for (i, value) in values.into_iter().enumerate() {
                    builder
                        .add_edge(names[i].clone(), names[(i + 1) % len].clone(), value)
                        .expect("vertex dominates every edge");
                }
                builder.build()
            }
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}
