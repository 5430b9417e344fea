//! Monomial ideals, Hilbert functions and up-closed regions of `Z²`.

mod monomial_ideal;
mod region;

pub use monomial_ideal::{HilbertNumerator, MonomialIdeal, DEFAULT_BOX_CAP, ENUMERATION_LIMIT};
pub use region::{star_closure, Ambient, DownSet, Region};

use crate::algebra::{Bidegree, Monomial, Var};
use crate::error::Result;

/// The bidegrees `(a, b)` with `a ≥ 1` such that `(M : x_k)` and `M` agree
/// in every bidegree `≥ (a, b)`.
///
/// The monomials of `(M : x_k) \ M` are `g·s` with `g` a minimal generator
/// of `(M : x_k)` outside `M` and `s` a standard monomial of `(M : g)`.
/// Standard monomials of `(M : g)` form a down-set, the complement of its
/// Hilbert-function zero region `Z_g`, so `(a, b)` is free of witnesses
/// above it iff `max((a, b) − deg g, 0) ∈ Z_g` for every such `g`.
pub fn colon_equality_region(m: &MonomialIdeal, k: usize) -> Result<Region> {
    let ambient = Ambient::PositiveX;
    let q = m.colon_var(Var::X(k));
    let mut region = Region::full(ambient);
    for g in q.generators().iter().filter(|g| !m.contains(g)) {
        region = region.intersect(&colon_region_for(m, g, ambient)?);
        if region.is_empty() {
            break;
        }
    }
    Ok(region)
}

fn colon_region_for(m: &MonomialIdeal, g: &Monomial, ambient: Ambient) -> Result<Region> {
    let zero = m.colon(g).hf_zero_region()?;
    let c = ambient.corner();
    let gd = g.bidegree();
    Ok(Region::from_generators(
        ambient,
        zero.minimal_elements().iter().map(|e| {
            Bidegree::new(
                if e.a > 0 { gd.a + e.a } else { c.a },
                if e.b > 0 { gd.b + e.b } else { c.b },
            )
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingDescriptor;

    fn m(a: &[u32], b: &[u32]) -> Monomial {
        Monomial::new(a, b)
    }

    #[test]
    fn colon_region_examples() {
        let r = RingDescriptor::new(2, 2).unwrap();
        let mx = MonomialIdeal::x_prefix(r, 2);
        let full = colon_equality_region(&mx, 0).unwrap();
        assert_eq!(full.minimal_elements(), &[Bidegree::new(1, 0)]);
        let j = MonomialIdeal::new(r, vec![m(&[0, 2], &[0, 0]), m(&[0, 1], &[0, 1]), m(&[1, 0], &[0, 0])]);
        let reg = colon_equality_region(&j, 1).unwrap();
        assert_eq!(reg.minimal_elements(), &[Bidegree::new(2, 0)]);
    }
}
