use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// A point of the Z²-grading: `a` is the degree in the x-block, `b` the
/// degree in the y-block.
///
/// The derived `Ord` is lexicographic and only used for canonical sorting.
/// The mathematical partial order is [`Bidegree::dominates`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", from = "[i64; 2]")]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Bidegree { a, b }
    }

    /// `self ≥ other` componentwise.
    pub fn dominates(&self, other: &Bidegree) -> bool {
        self.a >= other.a && self.b >= other.b
    }

    /// `self ≩ other`: dominates and differs.
    pub fn strictly_dominates(&self, other: &Bidegree) -> bool {
        self.dominates(other) && self != other
    }

    pub fn join(&self, other: &Bidegree) -> Bidegree {
        Bidegree::new(self.a.max(other.a), self.b.max(other.b))
    }

    pub fn meet(&self, other: &Bidegree) -> Bidegree {
        Bidegree::new(self.a.min(other.a), self.b.min(other.b))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn total(&self) -> i64 {
        self.a + self.b
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl From<(i64, i64)> for Bidegree {
    fn from((a, b): (i64, i64)) -> Self {
        Bidegree::new(a, b)
    }
}

impl From<[i64; 2]> for Bidegree {
    fn from([a, b]: [i64; 2]) -> Self {
        Bidegree::new(a, b)
    }
}

impl From<Bidegree> for [i64; 2] {
    fn from(d: Bidegree) -> Self {
        [d.a, d.b]
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}
