//! Deterministic graph generators and the reference fixtures.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, so a given
//! [`GenSpec`] yields the same graph on every platform and run.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipolar::Bipolar;
use crate::error::{Error, Result};
use crate::graph::{BipolarFuzzyGraph, GraphBuilder, VertexId};
use crate::scalar::{Scalar, SCALE};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgePattern {
    Constant,
    Alternating,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenSpec {
    /// Each pair becomes an edge with probability `edge_probability`, valued
    /// uniformly from `grid`. Vertex values are drawn afterwards from the grid
    /// components that dominate every incident edge.
    Random { n: usize, edge_probability: Scalar, grid: Vec<Bipolar>, seed: u64 },
    /// Cycle `v1 .. vn`. `Constant` uses one grid value on every edge;
    /// `Alternating` uses two distinct grid values on alternate edges (the
    /// earlier grid entry on the first edge). With a grid of the exact size
    /// needed, the values are taken in order; otherwise they are drawn.
    EvenCycle { n: usize, pattern: EdgePattern, grid: Vec<Bipolar>, vertex: Option<Bipolar>, seed: u64 },
    /// Generates `base`, then gives every vertex the same membership:
    /// `vertex` when set, else the componentwise strongest base vertex value.
    ConstantVertex { base: Box<GenSpec>, vertex: Option<Bipolar> },
}

/// `v1 .. vn`, zero-padded so lexicographic and numeric order agree.
pub fn vertex_names(n: usize) -> Vec<VertexId> {
    let width = n.to_string().len();
    (1..=n).map(|i| VertexId::new(format!("v{i:0width$}")).expect("valid id")).collect()
}

pub fn generate(spec: &GenSpec) -> Result<BipolarFuzzyGraph> {
    match spec {
        GenSpec::Random { n, edge_probability, grid, seed } => {
            random_graph(*n, *edge_probability, grid, *seed)
        }
        GenSpec::EvenCycle { n, pattern, grid, vertex, seed } => {
            even_cycle(*n, *pattern, grid, *vertex, *seed)
        }
        GenSpec::ConstantVertex { base, vertex } => {
            let g = generate(base)?;
            let value = match vertex {
                Some(v) => *v,
                None => g.vertices().map(|(_, b)| b).fold(Bipolar::ZERO, Bipolar::union),
            };
            let mut builder = g.to_builder();
            let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
            for v in &ids {
                builder.set_vertex(v, value).map_err(|_| {
                    Error::InfeasibleGrid(format!("vertex value {value} does not dominate every edge"))
                })?;
            }
            Ok(builder.build())
        }
    }
}

fn check_grid(grid: &[Bipolar]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidSpec("value grid is empty".into()));
    }
    Ok(())
}

fn random_graph(n: usize, p: Scalar, grid: &[Bipolar], seed: u64) -> Result<BipolarFuzzyGraph> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    if p < Scalar::ZERO || p > Scalar::ONE {
        return Err(Error::InvalidSpec(format!("edge probability {p} outside [0,1]")));
    }
    check_grid(grid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = vertex_names(n);

    let mut edges: Vec<(usize, usize, Bipolar)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_range(0..SCALE) < p.units() {
                edges.push((i, j, grid[rng.random_range(0..grid.len())]));
            }
        }
    }

    let mut pos_levels: Vec<Scalar> = grid.iter().map(|b| b.pos()).collect();
    pos_levels.sort();
    pos_levels.dedup();
    let mut neg_levels: Vec<Scalar> = grid.iter().map(|b| b.neg()).collect();
    neg_levels.sort();
    neg_levels.dedup();

    let mut required = vec![Bipolar::ZERO; n];
    for &(i, j, e) in &edges {
        required[i] = required[i].union(e);
        required[j] = required[j].union(e);
    }

    let mut builder = GraphBuilder::new();
    for (name, need) in names.iter().zip(&required) {
        // Both candidate lists are nonempty: the requirement is itself a grid
        // level (or zero, which every level satisfies).
        let pos_ok: Vec<Scalar> = pos_levels.iter().copied().filter(|&x| x >= need.pos()).collect();
        let neg_ok: Vec<Scalar> = neg_levels.iter().copied().filter(|&x| x <= need.neg()).collect();
        let pos = pos_ok[rng.random_range(0..pos_ok.len())];
        let neg = neg_ok[rng.random_range(0..neg_ok.len())];
        builder.add_vertex(name.clone(), Bipolar::new(pos, neg)?)?;
    }
    for (i, j, e) in edges {
        builder.add_edge(names[i].clone(), names[j].clone(), e)?;
    }
    Ok(builder.build())
}

fn even_cycle(
    n: usize,
    pattern: EdgePattern,
    grid: &[Bipolar],
    vertex: Option<Bipolar>,
    seed: u64,
) -> Result<BipolarFuzzyGraph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("even cycle needs an even n >= 4, got {n}")));
    }
    check_grid(grid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (odd, even) = match pattern {
        EdgePattern::Constant => {
            let v = if grid.len() == 1 { grid[0] } else { grid[rng.random_range(0..grid.len())] };
            (v, v)
        }
        EdgePattern::Alternating => {
            let mut distinct: Vec<Bipolar> = Vec::with_capacity(grid.len());
            for &b in grid {
                if !distinct.contains(&b) {
                    distinct.push(b);
                }
            }
            if distinct.len() < 2 {
                return Err(Error::InvalidSpec("alternating cycle needs two distinct grid values".into()));
            }
            if distinct.len() == 2 {
                (distinct[0], distinct[1])
            } else {
                let a = rng.random_range(0..distinct.len());
                let mut b = rng.random_range(0..distinct.len() - 1);
                if b >= a {
                    b += 1;
                }
                (distinct[a.min(b)], distinct[a.max(b)])
            }
        }
    };
    let needed = odd.union(even);
    let vertex = vertex.unwrap_or(needed);
    if !vertex.dominates(needed) {
        return Err(Error::InfeasibleGrid(format!(
            "vertex value {vertex} cannot dominate edge values {odd} and {even}"
        )));
    }
    let names = vertex_names(n);
    let mut builder = GraphBuilder::new();
    for name in &names {
        builder.add_vertex(name.clone(), vertex)?;
    }
    for i in 0..n {
        let value = if i % 2 == 0 { odd } else { even };
        builder.add_edge(names[i].clone(), names[(i + 1) % n].clone(), value)?;
    }
    Ok(builder.build())
}

/// The five reference graphs, keyed `F1` .. `F5`.
pub fn fixtures() -> BTreeMap<&'static str, BipolarFuzzyGraph> {
    let build = |vs: &[(&str, &str, &str)], es: &[(&str, &str, &str, &str)]| {
        BipolarFuzzyGraph::from_literals(vs, es).expect("fixture is valid")
    };
    let mut out = BTreeMap::new();
    // Triangle whose degrees are (0.9,-0.5), (0.9,-0.7), (1,-0.8).
    out.insert(
        "F1",
        build(
            &[("v1", "0.5", "-0.4"), ("v2", "0.6", "-0.5"), ("v3", "0.8", "-0.5")],
            &[("v1", "v2", "0.4", "-0.2"), ("v1", "v3", "0.5", "-0.3"), ("v2", "v3", "0.5", "-0.5")],
        ),
    );
    out.insert(
        "F2",
        build(
            &[("v1", "0.5", "-0.4"), ("v2", "0.6", "-0.5"), ("v3", "0.5", "-0.4"), ("v4", "0.4", "-0.4")],
            &[
                ("v1", "v2", "0.4", "-0.3"),
                ("v2", "v3", "0.2", "-0.4"),
                ("v2", "v4", "0.2", "-0.4"),
                ("v3", "v4", "0.4", "-0.3"),
            ],
        ),
    );
    // Path with d(v1) = d(v4) that is still neighbourly and highly irregular.
    out.insert(
        "F3",
        build(
            &[
                ("v1", "1.0", "-1.0"),
                ("v2", "1.0", "-1.0"),
                ("v3", "1.0", "-1.0"),
                ("v4", "1.0", "-1.0"),
                ("v5", "1.0", "-1.0"),
            ],
            &[
                ("v1", "v2", "0.3", "-0.3"),
                ("v2", "v3", "0.3", "-0.3"),
                ("v3", "v4", "0.1", "-0.1"),
                ("v4", "v5", "0.2", "-0.2"),
            ],
        ),
    );
    out.insert(
        "F4",
        build(
            &[("v1", "0.6", "-0.6"), ("v2", "0.6", "-0.6"), ("v3", "0.6", "-0.6"), ("v4", "0.6", "-0.6")],
            &[
                ("v1", "v2", "0.2", "-0.1"),
                ("v2", "v3", "0.4", "-0.3"),
                ("v3", "v4", "0.2", "-0.1"),
                ("v4", "v1", "0.4", "-0.3"),
            ],
        ),
    );
    out.insert(
        "F5",
        build(
            &[("v1", "0.6", "-0.6"), ("v2", "0.6", "-0.6"), ("v3", "0.6", "-0.6"), ("v4", "0.6", "-0.6")],
            &[
                ("v1", "v2", "0.4", "-0.5"),
                ("v1", "v3", "0.4", "-0.5"),
                ("v2", "v3", "0.4", "-0.5"),
                ("v3", "v4", "0.4", "-0.4"),
            ],
        ),
    );
    out
}

pub fn fixture(name: &str) -> Option<BipolarFuzzyGraph> {
    fixtures().remove(name)
}
