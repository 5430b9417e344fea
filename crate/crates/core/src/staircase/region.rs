use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Bidegree;

/// The lattice an up-closed region lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ambient {
    /// `a ≥ 0, b ≥ 0`.
    Nonneg,
    /// `a ≥ 1, b ≥ 0`.
    PositiveX,
}

impl Ambient {
    pub fn corner(self) -> Bidegree {
        match self {
            Ambient::Nonneg => Bidegree::new(0, 0),
            Ambient::PositiveX => Bidegree::new(1, 0),
        }
    }

    pub fn contains(self, d: Bidegree) -> bool {
        d.dominates(&self.corner())
    }

    /// The smaller of two ambients.
    pub fn meet(self, other: Ambient) -> Ambient {
        if self == Ambient::PositiveX || other == Ambient::PositiveX {
            Ambient::PositiveX
        } else {
            Ambient::Nonneg
        }
    }
}

/// An up-closed subset of an ambient lattice, stored as the antichain of its
/// minimal elements sorted by increasing `a` (hence decreasing `b`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    ambient: Ambient,
    minimal: Vec<Bidegree>,
}

/// Minimal elements of a finite set, sorted by increasing `a`.
fn antichain(mut pts: Vec<Bidegree>) -> Vec<Bidegree> {
    pts.sort();
    pts.dedup();
    let mut out: Vec<Bidegree> = Vec::with_capacity(pts.len());
    for p in pts {
        // sorted by (a, b): p is dominated iff some kept q has q.b ≤ p.b
        if out.last().is_none_or(|q| q.b > p.b) {
            out.push(p);
        }
    }
    out
}

impl Region {
    /// The up-closure of `generators` inside `ambient`. Generators outside
    /// the ambient are moved up to its boundary.
    pub fn from_generators<I>(ambient: Ambient, generators: I) -> Region
    where
        I: IntoIterator<Item = Bidegree>,
    {
        let c = ambient.corner();
        Region {
            ambient,
            minimal: antichain(generators.into_iter().map(|g| g.join(&c)).collect()),
        }
    }

    pub fn full(ambient: Ambient) -> Region {
        Region {
            ambient,
            minimal: vec![ambient.corner()],
        }
    }

    pub fn empty(ambient: Ambient) -> Region {
        Region {
            ambient,
            minimal: Vec::new(),
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn minimal_elements(&self) -> &[Bidegree] {
        &self.minimal
    }

    pub fn is_empty(&self) -> bool {
        self.minimal.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.minimal == [self.ambient.corner()]
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        self.ambient.contains(d) && self.minimal.iter().any(|m| d.dominates(m))
    }

    pub fn intersect(&self, other: &Region) -> Region {
        let mut joins = Vec::with_capacity(self.minimal.len() * other.minimal.len());
        for p in &self.minimal {
            for q in &other.minimal {
                joins.push(p.join(q));
            }
        }
        Region::from_generators(self.ambient.meet(other.ambient), joins)
    }

    pub fn union(&self, other: &Region) -> Region {
        Region::from_generators(
            self.ambient.meet(other.ambient),
            self.minimal.iter().chain(&other.minimal).copied(),
        )
    }

    /// Translate by `d`, clipped to the ambient.
    pub fn shift(&self, d: Bidegree) -> Region {
        Region::from_generators(self.ambient, self.minimal.iter().map(|m| *m + d))
    }

    /// The same set viewed in another ambient (intersected with it).
    pub fn restrict(&self, ambient: Ambient) -> Region {
        Region::from_generators(ambient.meet(self.ambient), self.minimal.iter().copied())
    }

    /// Members with `a ≤ corner.a` and `b ≤ corner.b`.
    pub fn points_in_box(&self, corner: Bidegree) -> Vec<Bidegree> {
        let c = self.ambient.corner();
        let mut out = Vec::new();
        for a in c.a..=corner.a {
            for b in c.b..=corner.b {
                let d = Bidegree::new(a, b);
                if self.contains(d) {
                    out.push(d);
                }
            }
        }
        out
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.minimal.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.minimal.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A down-closed set `E★`: all bidegrees below some element of a finite
/// witness set `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownSet {
    witnesses: Vec<Bidegree>,
}

/// The star closure of a finite set of bidegrees.
pub fn star_closure<I: IntoIterator<Item = Bidegree>>(points: I) -> DownSet {
    let mut pts: Vec<Bidegree> = points.into_iter().collect();
    // keep the maximal ones
    pts.sort_by(|p, q| q.cmp(p));
    pts.dedup();
    let mut out: Vec<Bidegree> = Vec::new();
    for p in pts {
        if out.last().is_none_or(|q| q.b < p.b) {
            out.push(p);
        }
    }
    out.reverse();
    DownSet { witnesses: out }
}

impl DownSet {
    /// Maximal witnesses, sorted by increasing `a`.
    pub fn witnesses(&self) -> &[Bidegree] {
        &self.witnesses
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        self.witnesses.iter().any(|w| w.dominates(&d))
    }

    /// The complement inside `ambient`, an up-closed region.
    pub fn complement(&self, ambient: Ambient) -> Region {
        let c = ambient.corner();
        let xs = std::iter::once(c.a).chain(self.witnesses.iter().map(|w| w.a + 1));
        let mins = xs.filter(|&x| x >= c.a).map(|x| {
            let y = self
                .witnesses
                .iter()
                .filter(|w| w.a >= x)
                .map(|w| w.b + 1)
                .max()
                .unwrap_or(c.b)
                .max(c.b);
            Bidegree::new(x, y)
        });
        Region::from_generators(ambient, mins)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(a: i64, b: i64) -> Bidegree {
        Bidegree::new(a, b)
    }

    #[test]
    fn quadrant_intersection() {
        let r1 = Region::from_generators(Ambient::Nonneg, [bd(2, 0)]);
        let r2 = Region::from_generators(Ambient::Nonneg, [bd(0, 1)]);
        assert_eq!(r1.intersect(&r2).minimal_elements(), &[bd(2, 1)]);
    }

    #[test]
    fn shift_translates() {
        let r = Region::from_generators(Ambient::PositiveX, [bd(2, 0)]);
        assert_eq!(r.shift(bd(1, 0)).minimal_elements(), &[bd(3, 0)]);
        let full = Region::full(Ambient::PositiveX);
        assert_eq!(full.shift(bd(1, 0)).minimal_elements(), &[bd(2, 0)]);
    }

    #[test]
    fn star_of_point() {
        let e = star_closure([bd(1, 2)]);
        assert!(e.contains(bd(0, 0)));
        assert!(e.contains(bd(1, 2)));
        assert!(!e.contains(bd(2, 2)));
    }

    #[test]
    fn complement_of_star() {
        let e = star_closure([bd(1, 2), bd(3, 0), bd(0, 1)]);
        assert_eq!(e.witnesses(), &[bd(1, 2), bd(3, 0)]);
        let r = e.complement(Ambient::Nonneg);
        assert_eq!(r.minimal_elements(), &[bd(0, 3), bd(2, 1), bd(4, 0)]);
        for a in 0..6 {
            for b in 0..6 {
                assert_ne!(e.contains(bd(a, b)), r.contains(bd(a, b)), "{a},{b}");
            }
        }
        assert!(star_closure([]).complement(Ambient::PositiveX).is_full());
    }

    #[test]
    fn antichain_is_canonical() {
        let r = Region::from_generators(Ambient::Nonneg, [bd(2, 3), bd(1, 5), bd(2, 4), bd(4, 1)]);
        assert_eq!(r.minimal_elements(), &[bd(1, 5), bd(2, 3), bd(4, 1)]);
        let again = Region::from_generators(Ambient::Nonneg, r.minimal_elements().to_vec());
        assert_eq!(again, r);
    }
}
