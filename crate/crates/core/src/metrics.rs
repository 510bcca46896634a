//! Degree, total degree, order and size.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::bipolar::Bipolar;
use crate::error::{Error, Result};
use crate::graph::{BipolarFuzzyGraph, VertexId};
use crate::scalar::Scalar;

/// Componentwise aggregate of bipolar memberships.
///
/// Unlike [`Bipolar`] the components are unbounded: sums of several
/// memberships routinely exceed 1 in magnitude.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SignedSum {
    pub pos: Scalar,
    pub neg: Scalar,
}

/// `d(v)`: sum of incident edge memberships.
pub type Degree = SignedSum;
/// `td(v)`: degree plus the vertex's own membership.
pub type TotalDegree = SignedSum;

impl SignedSum {
    pub const ZERO: SignedSum = SignedSum { pos: Scalar::ZERO, neg: Scalar::ZERO };

    pub fn new(pos: Scalar, neg: Scalar) -> SignedSum {
        SignedSum { pos, neg }
    }

    /// Parses two decimal strings without range checks.
    pub fn parse(pos: &str, neg: &str) -> Result<SignedSum> {
        Ok(SignedSum { pos: pos.parse()?, neg: neg.parse()? })
    }

    /// Componentwise weakest: smaller positive, less negative.
    pub fn weakest(self, other: SignedSum) -> SignedSum {
        SignedSum { pos: self.pos.min(other.pos), neg: self.neg.max(other.neg) }
    }

    /// Componentwise strongest: larger positive, more negative.
    pub fn strongest(self, other: SignedSum) -> SignedSum {
        SignedSum { pos: self.pos.max(other.pos), neg: self.neg.min(other.neg) }
    }
}

impl From<Bipolar> for SignedSum {
    fn from(b: Bipolar) -> SignedSum {
        SignedSum { pos: b.pos(), neg: b.neg() }
    }
}

impl Add for SignedSum {
    type Output = SignedSum;
    fn add(self, rhs: SignedSum) -> SignedSum {
        SignedSum { pos: self.pos + rhs.pos, neg: self.neg + rhs.neg }
    }
}

impl Add<Bipolar> for SignedSum {
    type Output = SignedSum;
    fn add(self, rhs: Bipolar) -> SignedSum {
        self + SignedSum::from(rhs)
    }
}

impl Sub for SignedSum {
    type Output = SignedSum;
    fn sub(self, rhs: SignedSum) -> SignedSum {
        SignedSum { pos: self.pos - rhs.pos, neg: self.neg - rhs.neg }
    }
}

impl Mul<i64> for SignedSum {
    type Output = SignedSum;
    fn mul(self, rhs: i64) -> SignedSum {
        SignedSum { pos: self.pos * rhs, neg: self.neg * rhs }
    }
}

impl std::iter::Sum for SignedSum {
    fn sum<I: Iterator<Item = SignedSum>>(iter: I) -> SignedSum {
        iter.fold(SignedSum::ZERO, Add::add)
    }
}

impl fmt::Display for SignedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

impl fmt::Debug for SignedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrderSize {
    pub order: SignedSum,
    pub size: SignedSum,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DegreeExtremes {
    pub min: Degree,
    pub max: Degree,
}

pub fn degree(g: &BipolarFuzzyGraph, v: &str) -> Result<Degree> {
    Ok(g.incident(v)?.map(|(_, e)| SignedSum::from(e)).sum())
}

pub fn total_degree(g: &BipolarFuzzyGraph, v: &str) -> Result<TotalDegree> {
    let d = degree(g, v)?;
    Ok(d + g.vertex(v).expect("degree succeeded, so the vertex exists"))
}

/// All vertex degrees in one pass over the edge list.
pub fn degrees(g: &BipolarFuzzyGraph) -> BTreeMap<VertexId, Degree> {
    let mut out: BTreeMap<VertexId, Degree> =
        g.vertex_ids().map(|v| (v.clone(), SignedSum::ZERO)).collect();
    for (key, value) in g.edges() {
        for end in [key.first(), key.second()] {
            let d = out.get_mut(end).expect("edge endpoints exist");
            *d = *d + value;
        }
    }
    out
}

pub fn total_degrees(g: &BipolarFuzzyGraph) -> BTreeMap<VertexId, TotalDegree> {
    let mut out = degrees(g);
    for (v, own) in g.vertices() {
        let d = out.get_mut(v).expect("same key set");
        *d = *d + own;
    }
    out
}

pub fn order(g: &BipolarFuzzyGraph) -> SignedSum {
    g.vertices().map(|(_, b)| SignedSum::from(b)).sum()
}

pub fn size(g: &BipolarFuzzyGraph) -> SignedSum {
    g.edges().map(|(_, b)| SignedSum::from(b)).sum()
}

pub fn order_size(g: &BipolarFuzzyGraph) -> OrderSize {
    OrderSize { order: order(g), size: size(g) }
}

/// Vertices with degrees, sorted by positive degree descending, then by
/// negative degree closest to zero first, then by id.
pub fn degree_sequence(g: &BipolarFuzzyGraph) -> Vec<(VertexId, Degree)> {
    let mut seq: Vec<(VertexId, Degree)> = degrees(g).into_iter().collect();
    seq.sort_by(|(a, da), (b, db)| {
        db.pos.cmp(&da.pos).then(db.neg.cmp(&da.neg)).then_with(|| a.cmp(b))
    });
    seq
}

/// Componentwise weakest and strongest degrees.
pub fn degree_extremes(g: &BipolarFuzzyGraph) -> Result<DegreeExtremes> {
    let mut iter = degrees(g).into_values();
    let first = iter.next().ok_or(Error::EmptyGraph)?;
    Ok(iter.fold(DegreeExtremes { min: first, max: first }, |acc, d| DegreeExtremes {
        min: acc.min.weakest(d),
        max: acc.max.strongest(d),
    }))
}
