//! Bipolar membership pairs and their lattice operations.

use std::fmt;

use serde::Serialize;

use crate::error::{Component, Error, Result};
use crate::scalar::Scalar;

/// A `(positive, negative)` membership with `pos ∈ [0, 1]` and `neg ∈ [-1, 0]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bipolar {
    pos: Scalar,
    neg: Scalar,
}

impl Bipolar {
    /// The irrelevance element, identity for [`Bipolar::union`].
    pub const ZERO: Bipolar = Bipolar { pos: Scalar::ZERO, neg: Scalar::ZERO };
    /// Full membership on both sides, identity for [`Bipolar::intersection`].
    pub const FULL: Bipolar = Bipolar { pos: Scalar::ONE, neg: Scalar::NEG_ONE };

    pub fn new(pos: Scalar, neg: Scalar) -> Result<Bipolar> {
        if pos < Scalar::ZERO || pos > Scalar::ONE {
            return Err(Error::Range { component: Component::Positive, value: pos });
        }
        if neg < Scalar::NEG_ONE || neg > Scalar::ZERO {
            return Err(Error::Range { component: Component::Negative, value: neg });
        }
        Ok(Bipolar { pos, neg })
    }

    /// Parses and validates a pair of decimal strings.
    pub fn parse(pos: &str, neg: &str) -> Result<Bipolar> {
        Bipolar::new(pos.parse()?, neg.parse()?)
    }

    pub fn pos(self) -> Scalar {
        self.pos
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Scalar {
        self.neg
    }

    pub fn component(self, component: Component) -> Scalar {
        match component {
            Component::Positive => self.pos,
            Component::Negative => self.neg,
        }
    }

    /// True when both sides are zero.
    pub fn is_zero(self) -> bool {
        self.pos.is_zero() && self.neg.is_zero()
    }

    /// True when either side is nonzero.
    pub fn is_supported(self) -> bool {
        !self.is_zero()
    }

    /// `(min pos, max neg)`.
    pub fn intersection(self, other: Bipolar) -> Bipolar {
        Bipolar { pos: self.pos.min(other.pos), neg: self.neg.max(other.neg) }
    }

    /// `(max pos, min neg)`.
    pub fn union(self, other: Bipolar) -> Bipolar {
        Bipolar { pos: self.pos.max(other.pos), neg: self.neg.min(other.neg) }
    }

    /// Whether `self` is at least as strong as `other` on both sides, i.e. an
    /// edge valued `other` may join two vertices valued `self`.
    pub fn dominates(self, other: Bipolar) -> bool {
        self.pos >= other.pos && self.neg <= other.neg
    }
}

impl fmt::Display for Bipolar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

impl fmt::Debug for Bipolar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Free-function form of [`Bipolar::parse`].
pub fn make_bipolar(pos: &str, neg: &str) -> Result<Bipolar> {
    Bipolar::parse(pos, neg)
}

pub fn bipolar_intersection(a: Bipolar, b: Bipolar) -> Bipolar {
    a.intersection(b)
}

pub fn bipolar_union(a: Bipolar, b: Bipolar) -> Bipolar {
    a.union(b)
}
