//! Bigeneric initial ideals, the partial regularity region `xreg`, the
//! regularity region of empty-variety ideals, and generator certificates.

use std::fmt;

use crate::algebra::{Bidegree, BlockOrder, Ideal, Monomial, RingDescriptor, Var};
use crate::error::{Error, Result};
use crate::groebner::initial_ideal;
use crate::ideal_ops::{change_coordinates, is_empty_variety, random_block_matrix};
use crate::staircase::{colon_equality_region, Ambient, MonomialIdeal, Region};

/// Result of [`bigin`]: the common initial ideal for two independent
/// random changes of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiginResult {
    pub ideal: MonomialIdeal,
    pub seeds: (u64, u64),
    pub order: BlockOrder,
    pub stable: bool,
}

/// The second seed used alongside `seed` (a splitmix64 step).
pub fn derived_seed(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `in(u ∘ I)` for the random block matrix drawn from `seed`.
pub fn generic_initial_ideal(ideal: &Ideal, order: BlockOrder, seed: u64) -> Result<MonomialIdeal> {
    let ring = ideal.ring().with_order(order);
    let j = ideal.in_ring(ring)?;
    let u = random_block_matrix(&ring, seed)?;
    Ok(initial_ideal(&change_coordinates(&j, &u)?))
}

/// The bigeneric initial ideal of a bihomogeneous ideal under `order`.
///
/// Computed for `seed` and for [`derived_seed`]`(seed)`; disagreement is an
/// [`Error::Instability`], and a result that is not bi-Borel fixed is an
/// [`Error::NotBiBorel`].
pub fn bigin(ideal: &Ideal, order: BlockOrder, seed: u64) -> Result<BiginResult> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_bihomogeneous()) {
        return Err(Error::NotBihomogeneous(g.to_string()));
    }
    let seeds = (seed, derived_seed(seed));
    let first = generic_initial_ideal(ideal, order, seeds.0)?;
    let second = generic_initial_ideal(ideal, order, seeds.1)?;
    if first != second {
        return Err(Error::Instability {
            seeds,
            detail: format!("{first} vs {second}"),
        });
    }
    first.require_biborel()?;
    Ok(BiginResult {
        ideal: first,
        seeds,
        order,
        stable: true,
    })
}

/// The smallest `k` with `(M, x_0, …, x_k) ⊇ mx`.
pub fn k0(m: &MonomialIdeal) -> usize {
    let nx = m.ring().nx();
    (0..nx)
        .find(|&k| (k + 1..nx).all(|i| m.contains_var(Var::X(i))))
        .unwrap_or(nx - 1)
}

/// `xreg` of a bi-Borel monomial ideal, inside `a ≥ 1, b ≥ 0`: the
/// intersection over `k = 0..=k0` of the regions where
/// `(J_{k−1} : x_k) = J_{k−1}` holds in every larger bidegree, with
/// `J_{k−1} = (M, x_0, …, x_{k−1})`.
pub fn xreg_region(m: &MonomialIdeal) -> Result<Region> {
    m.require_biborel()?;
    let mut region = Region::full(Ambient::PositiveX);
    for k in 0..=k0(m) {
        let j = m.plus_x_prefix(k);
        region = region.intersect(&colon_equality_region(&j, k)?);
    }
    Ok(region)
}

/// `xreg(I)` through `bigin(I)` under the order with the x-block lowest.
pub fn xreg_of_ideal(ideal: &Ideal, seed: u64) -> Result<Region> {
    Ok(xreg_with_bigin(ideal, seed)?.1)
}

pub fn xreg_with_bigin(ideal: &Ideal, seed: u64) -> Result<(BiginResult, Region)> {
    let b = bigin(ideal, BlockOrder::XLow, seed)?;
    let r = xreg_region(&b.ideal)?;
    Ok((b, r))
}

/// The regularity region `{HF_{S/I} = 0}` of an ideal defining an empty
/// variety.
pub fn reg_empty(ideal: &Ideal) -> Result<Region> {
    if !is_empty_variety(ideal)? {
        return Err(Error::NotEmptyVariety);
    }
    initial_ideal(ideal).hf_zero_region()
}

/// Maximal x-degree of a minimal generator of a bi-Borel ideal.
pub fn xtor(m: &MonomialIdeal) -> Result<i64> {
    m.require_biborel()?;
    m.max_generator_bidegree()
        .map(|d| d.a)
        .ok_or(Error::ZeroIdeal("xtor"))
}

/// Maximal y-degree of a minimal generator of a bi-Borel ideal.
pub fn ytor(m: &MonomialIdeal) -> Result<i64> {
    m.require_biborel()?;
    m.max_generator_bidegree()
        .map(|d| d.b)
        .ok_or(Error::ZeroIdeal("ytor"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Absence,
    Presence,
    ExactCriterion,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Absence => "absence",
            CertificateKind::Presence => "presence",
            CertificateKind::ExactCriterion => "exact-criterion",
        })
    }
}

/// A claim about the minimal generators of a monomial ideal that can be
/// re-checked from its fields.
///
/// - `Absence`: no minimal generator has bidegree in `region`.
/// - `Presence`: `witness` is a minimal generator of bidegree `(a, b')`
///   with `(a, b)` = `bidegree` and `b' ≤ b`.
/// - `ExactCriterion`: `verdict` says whether a minimal generator of
///   bidegree `bidegree` exists; `witness` is one when it does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub bidegree: Option<Bidegree>,
    pub region: Region,
    pub verdict: bool,
    pub witness: Option<Monomial>,
}

impl Certificate {
    pub fn recheck(&self, m: &MonomialIdeal) -> bool {
        let is_gen = |w: &Monomial| m.generators().contains(w);
        match self.kind {
            CertificateKind::Absence => {
                self.verdict
                    && !m
                        .generators()
                        .iter()
                        .any(|g| self.region.contains(g.bidegree()))
            }
            CertificateKind::Presence => match (&self.witness, self.bidegree) {
                (Some(w), Some(d)) => {
                    let wd = w.bidegree();
                    self.verdict && is_gen(w) && wd.a == d.a && wd.b <= d.b
                }
                _ => false,
            },
            CertificateKind::ExactCriterion => {
                let Some(d) = self.bidegree else { return false };
                let actual = !m.generators_at(d).is_empty();
                actual == self.verdict
                    && match &self.witness {
                        Some(w) => self.verdict && is_gen(w) && w.bidegree() == d,
                        None => !self.verdict,
                    }
            }
        }
    }
}

fn dump(m: &MonomialIdeal, region: &Region) -> String {
    format!(
        "ring: {}\ngenerators: {}\ngenerator bidegrees: {:?}\nregion minimal elements: {}",
        m.ring(),
        m,
        m.generator_bidegrees(),
        region
    )
}

/// No minimal generator lies in `region + (1, 0)`.
pub fn certify_absence(m: &MonomialIdeal, region: &Region) -> Result<Certificate> {
    let forbidden = region.shift(Bidegree::new(1, 0));
    if let Some(g) = m.generators().iter().find(|g| forbidden.contains(g.bidegree())) {
        return Err(Error::Contradiction {
            message: format!(
                "minimal generator {g} of bidegree {} lies in the forbidden region {forbidden}",
                g.bidegree()
            ),
            dump: dump(m, region),
        });
    }
    Ok(Certificate {
        kind: CertificateKind::Absence,
        bidegree: None,
        region: forbidden,
        verdict: true,
        witness: None,
    })
}

/// For each minimal element `(a, b)` of `region` with `a > 1`, a minimal
/// generator of bidegree `(a, b')` with `b' ≤ b`.
pub fn certify_presence(m: &MonomialIdeal, region: &Region) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for &e in region.minimal_elements().iter().filter(|e| e.a > 1) {
        let mut candidates: Vec<&Monomial> = m
            .generators()
            .iter()
            .filter(|g| {
                let d = g.bidegree();
                d.a == e.a && d.b <= e.b
            })
            .collect();
        candidates.sort_by_key(|g| g.bidegree().b);
        let Some(w) = candidates.first() else {
            return Err(Error::Contradiction {
                message: format!("no minimal generator of bidegree ({}, b') with b' <= {} below boundary point {e}", e.a, e.b),
                dump: dump(m, region),
            });
        };
        out.push(Certificate {
            kind: CertificateKind::Presence,
            bidegree: Some(e),
            region: region.clone(),
            verdict: true,
            witness: Some((*w).clone()),
        });
    }
    Ok(out)
}

/// Whether `(J_{k−1} : x_k)` and `J_{k−1}` differ in bidegree `d` for some
/// `k ≤ k0`.
fn colon_differs_at(m: &MonomialIdeal, d: Bidegree) -> bool {
    let ring = *m.ring();
    let monos = Monomial::enumerate(ring.nx(), ring.ny(), d);
    (0..=k0(m)).any(|k| {
        let j = m.plus_x_prefix(k);
        monos
            .iter()
            .any(|u| !j.contains(u) && j.contains(&u.times_var(Var::X(k))))
    })
}

/// Presence certificates with the bound that the witness argument supports.
///
/// For a minimal element `(a, b)` of `region` with `a > 1`, let `b_w ≥ b` be
/// the least y-degree at which a colon equality fails in bidegree
/// `(a − 1, b_w)`. A minimal generator of bidegree `(a, b')` with `b' ≤ b_w`
/// exists, and each certificate records `(a, b_w)` with its witness.
///
/// [`certify_presence`] asks for `b' ≤ b`, which is `b_w = b`. That bound
/// fails in general: for `M = (x1² y1)` in `k[x0, x1, y0, y1]`, `xreg` has
/// minimal element `(2, 0)` but the only generator has bidegree `(2, 1)`.
pub fn certify_presence_refined(m: &MonomialIdeal, region: &Region) -> Result<Vec<Certificate>> {
    let top = m.max_generator_bidegree().map_or(0, |d| d.b);
    let mut out = Vec::new();
    for &e in region.minimal_elements().iter().filter(|e| e.a > 1) {
        // A witness can be divided down in y until a generator's y-part
        // stops it, so the least failing y-degree is at most max(b, top).
        let b_w = (e.b..=e.b.max(top)).find(|&b| colon_differs_at(m, Bidegree::new(e.a - 1, b)));
        let Some(b_w) = b_w else {
            return Err(Error::Contradiction {
                message: format!("no failing colon equality at x-degree {} above boundary point {e}", e.a - 1),
                dump: dump(m, region),
            });
        };
        let w = m
            .generators()
            .iter()
            .filter(|g| {
                let d = g.bidegree();
                d.a == e.a && d.b <= b_w
            })
            .min_by_key(|g| g.bidegree().b);
        let Some(w) = w else {
            return Err(Error::Contradiction {
                message: format!("no minimal generator of bidegree ({}, b') with b' <= {b_w} for boundary point {e}", e.a),
                dump: dump(m, region),
            });
        };
        out.push(Certificate {
            kind: CertificateKind::Presence,
            bidegree: Some(Bidegree::new(e.a, b_w)),
            region: region.clone(),
            verdict: true,
            witness: Some(w.clone()),
        });
    }
    Ok(out)
}

/// Whether `m` has a minimal generator of bidegree `d` (`d.a ≥ 1`), decided
/// from the graded pieces `(J_{k−1} : x_k)_{(a−1,b)}` and
/// `(J_{k−1} + my (J_{k−1} : x_k))_{(a−1,b)}` for all `k`.
pub fn generator_bidegree_test(m: &MonomialIdeal, d: Bidegree) -> Result<bool> {
    if d.a < 1 || d.b < 0 {
        return Err(Error::NegativeBidegree(d));
    }
    let ring = *m.ring();
    let below = Monomial::enumerate(ring.nx(), ring.ny(), d - Bidegree::new(1, 0));
    for k in 0..ring.nx() {
        let j = m.plus_x_prefix(k);
        let q = j.colon_var(Var::X(k));
        for mono in below.iter().filter(|mono| q.contains(mono)) {
            let in_rhs = j.contains(mono)
                || (0..ring.ny()).any(|i| {
                    mono.exponent(Var::Y(i)) > 0 && q.contains(&mono.strip_var(Var::Y(i)))
                });
            if !in_rhs {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Certificate for a single bidegree from [`generator_bidegree_test`],
/// cross-checked against the generator list.
pub fn certify_exact(m: &MonomialIdeal, d: Bidegree) -> Result<Certificate> {
    let verdict = generator_bidegree_test(m, d)?;
    let witness = m.generators_at(d).into_iter().next();
    if verdict != witness.is_some() {
        return Err(Error::Contradiction {
            message: format!(
                "generator criterion at {d} says {verdict} but the generator list says {}",
                witness.is_some()
            ),
            dump: dump(m, &Region::empty(Ambient::PositiveX)),
        });
    }
    Ok(Certificate {
        kind: CertificateKind::ExactCriterion,
        bidegree: Some(d),
        region: Region::from_generators(Ambient::PositiveX, [d]),
        verdict,
        witness,
    })
}

/// A monomial ideal in a ring with `nx` x- and `ny` y-variables from
/// exponent pairs, for tests and examples.
pub fn monomial_ideal(ring: RingDescriptor, gens: &[(&[u32], &[u32])]) -> MonomialIdeal {
    MonomialIdeal::new(ring, gens.iter().map(|(a, b)| Monomial::new(a, b)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn ring() -> RingDescriptor {
        RingDescriptor::new(2, 2).unwrap()
    }

    fn bd(a: i64, b: i64) -> Bidegree {
        Bidegree::new(a, b)
    }

    fn micro() -> MonomialIdeal {
        monomial_ideal(ring(), &[(&[0, 2], &[0, 0]), (&[0, 1], &[0, 1])])
    }

    #[test]
    fn xreg_examples() {
        let r = ring();
        assert!(xreg_region(&MonomialIdeal::x_prefix(r, 2)).unwrap().is_full());
        let x1 = monomial_ideal(r, &[(&[0, 1], &[0, 0])]);
        assert_eq!(xreg_region(&x1).unwrap().minimal_elements(), &[bd(1, 0)]);
        assert_eq!(xreg_region(&micro()).unwrap().minimal_elements(), &[bd(2, 0)]);
        let not_borel = monomial_ideal(r, &[(&[1, 0], &[1, 0])]);
        assert!(matches!(xreg_region(&not_borel), Err(Error::NotBiBorel { .. })));
    }

    #[test]
    fn certificates_for_micro_example() {
        let m = micro();
        let r = xreg_region(&m).unwrap();
        let abs = certify_absence(&m, &r).unwrap();
        assert_eq!(abs.region.minimal_elements(), &[bd(3, 0)]);
        assert!(abs.recheck(&m));
        let pres = certify_presence(&m, &r).unwrap();
        assert_eq!(pres.len(), 1);
        assert_eq!(pres[0].witness, Some(Monomial::new(&[0, 2], &[0, 0])));
        assert!(pres[0].recheck(&m));
        let x1 = monomial_ideal(ring(), &[(&[0, 1], &[0, 0])]);
        assert!(certify_presence(&x1, &xreg_region(&x1).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn presence_bound_needs_the_witness_degree() {
        let m = monomial_ideal(ring(), &[(&[0, 2], &[0, 1])]);
        let r = xreg_region(&m).unwrap();
        assert_eq!(r.minimal_elements(), &[bd(2, 0)]);
        assert!(matches!(certify_presence(&m, &r), Err(Error::Contradiction { .. })));
        let refined = certify_presence_refined(&m, &r).unwrap();
        assert_eq!(refined.len(), 1);
        assert_eq!(refined[0].bidegree, Some(bd(2, 1)));
        assert!(refined[0].recheck(&m));
        let micro = micro();
        let same = certify_presence_refined(&micro, &xreg_region(&micro).unwrap()).unwrap();
        assert_eq!(same, certify_presence(&micro, &xreg_region(&micro).unwrap()).unwrap());
    }

    #[test]
    fn forged_region_is_a_contradiction() {
        let m = micro();
        let wrong = Region::full(Ambient::PositiveX);
        assert!(matches!(certify_absence(&m, &wrong), Err(Error::Contradiction { .. })));
    }

    #[test]
    fn generator_test_examples() {
        let m = micro();
        assert!(generator_bidegree_test(&m, bd(1, 1)).unwrap());
        assert!(generator_bidegree_test(&m, bd(2, 0)).unwrap());
        for a in 1..8 {
            for b in 0..8 {
                let d = bd(a, b);
                assert_eq!(generator_bidegree_test(&m, d).unwrap(), !m.generators_at(d).is_empty(), "{d}");
            }
        }
    }

    #[test]
    fn tor_examples() {
        let m = micro();
        assert_eq!((xtor(&m).unwrap(), ytor(&m).unwrap()), (2, 1));
        let mx = MonomialIdeal::x_prefix(ring(), 2);
        assert_eq!((xtor(&mx).unwrap(), ytor(&mx).unwrap()), (1, 0));
        assert!(matches!(xtor(&MonomialIdeal::zero(ring())), Err(Error::ZeroIdeal(_))));
    }

    #[test]
    fn bigin_examples() {
        let r = ring();
        let x0 = Ideal::new(r, vec![Polynomial::var(r, Var::X(0))]).unwrap();
        let b = bigin(&x0, BlockOrder::XLow, 42).unwrap();
        assert_eq!(b.ideal, monomial_ideal(r, &[(&[0, 1], &[0, 0])]));
        assert!(xreg_of_ideal(&x0, 42).unwrap().is_full());
        let mx = Ideal::new(r, vec![Polynomial::var(r, Var::X(0)), Polynomial::var(r, Var::X(1))]).unwrap();
        assert_eq!(bigin(&mx, BlockOrder::XLow, 1).unwrap().ideal, MonomialIdeal::x_prefix(r, 2));
    }

    #[test]
    fn reg_empty_examples() {
        let r = ring();
        let mx = Ideal::new(r, vec![Polynomial::var(r, Var::X(0)), Polynomial::var(r, Var::X(1))]).unwrap();
        assert_eq!(reg_empty(&mx).unwrap().minimal_elements(), &[bd(1, 0)]);
        let x0y0 = Ideal::new(
            r,
            vec![Polynomial::var(r, Var::X(0)).mul(&Polynomial::var(r, Var::Y(0))).unwrap()],
        )
        .unwrap();
        assert!(matches!(reg_empty(&x0y0), Err(Error::NotEmptyVariety)));
    }
}
