use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{count_monomials, Bidegree, Monomial, RingDescriptor, Var};
use crate::error::{Error, Result};

use super::region::{Ambient, Region};

/// Default side length cap for the search box of [`MonomialIdeal::hf_zero_region`].
pub const DEFAULT_BOX_CAP: i64 = 64;

/// Above this many monomials per bidegree the enumeration route is not used.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// A monomial ideal given by its minimal generators, sorted increasingly in
/// the ring's order. Two ideals are equal iff their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingDescriptor,
    gens: Vec<Monomial>,
    masks: Vec<u64>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.degree() + g.t(), g.divmask()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

type VarOf = fn(usize) -> Var;

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to minimal generators.
    pub fn new(ring: RingDescriptor, gens: Vec<Monomial>) -> MonomialIdeal {
        debug_assert!(gens.iter().all(|g| ring.owns(g)));
        let mut gens = minimalize(gens);
        gens.sort_by(|p, q| ring.cmp_mono(p, q));
        let masks = gens.iter().map(|g| g.divmask()).collect();
        MonomialIdeal { ring, gens, masks }
    }

    pub fn zero(ring: RingDescriptor) -> MonomialIdeal {
        MonomialIdeal::new(ring, Vec::new())
    }

    pub fn unit(ring: RingDescriptor) -> MonomialIdeal {
        MonomialIdeal::new(ring, vec![Monomial::one(&ring)])
    }

    /// The ideal `(x_0, …, x_{k-1})`.
    pub fn x_prefix(ring: RingDescriptor, k: usize) -> MonomialIdeal {
        MonomialIdeal::new(ring, (0..k).map(|i| Monomial::var(&ring, Var::X(i))).collect())
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.divmask();
        self.gens
            .iter()
            .zip(&self.masks)
            .any(|(g, gm)| gm & !mask == 0 && g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.contains(&Monomial::var(&self.ring, v))
    }

    /// True when every x-variable lies in the ideal.
    pub fn contains_mx(&self) -> bool {
        (0..self.ring.nx()).all(|i| self.contains_var(Var::X(i)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ring, gens)
    }

    pub fn with_generators<I: IntoIterator<Item = Monomial>>(&self, extra: I) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        MonomialIdeal::new(self.ring, gens)
    }

    /// `(M, x_0, …, x_{k-1})`.
    pub fn plus_x_prefix(&self, k: usize) -> MonomialIdeal {
        self.with_generators((0..k).map(|i| Monomial::var(&self.ring, Var::X(i))))
    }

    /// `(M : v)` for a variable `v`.
    pub fn colon_var(&self, v: Var) -> MonomialIdeal {
        MonomialIdeal::new(self.ring, self.gens.iter().map(|g| g.strip_var(v)).collect())
    }

    /// `(M : m)` for a monomial `m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring,
            self.gens
                .iter()
                .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
                .collect(),
        )
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.ring, gens)
    }

    /// `(M : v^∞)`.
    pub fn saturate_var(&self, v: Var) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring,
            self.gens
                .iter()
                .map(|g| {
                    let e = g.exponent(v);
                    let mut m = g.clone();
                    for _ in 0..e {
                        m = m.strip_var(v);
                    }
                    m
                })
                .collect(),
        )
    }

    pub fn generator_bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.gens.iter().map(|g| g.bidegree()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Minimal generators of bidegree `d`.
    pub fn generators_at(&self, d: Bidegree) -> Vec<Monomial> {
        self.gens.iter().filter(|g| g.bidegree() == d).cloned().collect()
    }

    /// Monomial `x_j·(m/x_i)` (resp. `y`) missing from the ideal for some
    /// generator `m`, `x_i | m` and `j > i`; `None` when the ideal is
    /// bi-Borel fixed.
    pub fn biborel_witness(&self) -> Option<Monomial> {
        let (nx, ny) = (self.ring.nx(), self.ring.ny());
        let blocks: [(usize, VarOf); 2] = [(nx, Var::X), (ny, Var::Y)];
        for g in &self.gens {
            for (n, var) in blocks {
                for i in 0..n {
                    if g.exponent(var(i)) == 0 {
                        continue;
                    }
                    let base = g.strip_var(var(i));
                    for j in i + 1..n {
                        let m = base.times_var(var(j));
                        if !self.contains(&m) {
                            return Some(m);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_biborel(&self) -> bool {
        self.biborel_witness().is_none()
    }

    pub(crate) fn require_biborel(&self) -> Result<()> {
        match self.biborel_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotBiBorel {
                witness: w.to_string(),
            }),
        }
    }

    /// Componentwise maximum of the generator bidegrees; `None` for the
    /// zero ideal.
    pub fn max_generator_bidegree(&self) -> Option<Bidegree> {
        self.gens.iter().map(|g| g.bidegree()).reduce(|p, q| p.join(&q))
    }

    /// Monomials of bidegree `d` outside the ideal.
    pub fn standard_monomials(&self, d: Bidegree) -> Vec<Monomial> {
        Monomial::enumerate(self.ring.nx(), self.ring.ny(), d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `HF_{S/M}(d)` computed from the numerator of the Hilbert series.
    pub fn hilbert_function(&self, d: Bidegree) -> Result<u128> {
        if !d.is_nonnegative() {
            return Err(Error::NegativeBidegree(d));
        }
        Ok(self.hilbert_numerator().eval(d))
    }

    /// `HF_{S/M}(d)` by counting standard monomials.
    pub fn hilbert_function_enumerated(&self, d: Bidegree) -> Result<u128> {
        if !d.is_nonnegative() {
            return Err(Error::NegativeBidegree(d));
        }
        Ok(Monomial::enumerate(self.ring.nx(), self.ring.ny(), d)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u128)
    }

    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        let mut terms = BTreeMap::new();
        numerator(self.gens.clone(), Bidegree::ZERO, 1, &mut terms);
        terms.retain(|_, c| *c != 0);
        HilbertNumerator {
            nx: self.ring.nx(),
            ny: self.ring.ny(),
            terms,
        }
    }

    /// Search box `[0, T_x] × [0, T_y]` that contains every minimal element
    /// of the Hilbert-function zero region.
    ///
    /// If `c_i` is the largest exponent of `x_i` among the generators and
    /// `a ≥ Σ(c_i − 1) + 1`, every monomial of x-degree `a` has some
    /// `α_i ≥ c_i`; if `x_i·m ∈ M` then already `m ∈ M`. Hence
    /// `HF(a+1, b) = 0` forces `HF(a, b) = 0` past that bound.
    pub fn zero_region_bound(&self) -> Bidegree {
        let nx = self.ring.nx();
        let mut lcm = vec![0i64; self.ring.nvars()];
        for g in &self.gens {
            for (l, e) in lcm.iter_mut().zip(g.exps()) {
                *l = (*l).max(*e as i64);
            }
        }
        let tx: i64 = lcm[..nx].iter().sum::<i64>() - nx as i64 + 1;
        let ty: i64 = lcm[nx..].iter().sum::<i64>() - (lcm.len() - nx) as i64 + 1;
        Bidegree::new(tx.max(0), ty.max(0))
    }

    /// The up-closed set `{d ≥ 0 : HF_{S/M}(d) = 0}` with the default cap.
    pub fn hf_zero_region(&self) -> Result<Region> {
        self.hf_zero_region_capped(DEFAULT_BOX_CAP)
    }

    /// As [`Self::hf_zero_region`], failing when the certified search box
    /// needs a side longer than `cap`.
    pub fn hf_zero_region_capped(&self, cap: i64) -> Result<Region> {
        let bound = self.zero_region_bound();
        if bound.a > cap || bound.b > cap {
            return Err(Error::BoxCapExceeded {
                needed: bound,
                cap: Bidegree::new(cap, cap),
            });
        }
        let num = self.hilbert_numerator();
        let mut mins = Vec::new();
        let mut best = bound.a + 1;
        for b in 0..=bound.b {
            // first zero in this row, if it beats the previous rows
            if let Some(a) = (0..best).find(|&a| num.eval(Bidegree::new(a, b)) == 0) {
                mins.push(Bidegree::new(a, b));
                best = a;
            }
        }
        let region = Region::from_generators(Ambient::Nonneg, mins);
        self.verify_zero_region(&region)?;
        Ok(region)
    }

    /// Re-check the minimal elements by direct enumeration where cheap.
    fn verify_zero_region(&self, region: &Region) -> Result<()> {
        let (nx, ny) = (self.ring.nx(), self.ring.ny());
        let cheap = |d: Bidegree| {
            count_monomials(d.a, nx).saturating_mul(count_monomials(d.b, ny)) <= 20_000
        };
        for &e in region.minimal_elements() {
            let mut checks = vec![(e, true)];
            if e.a > 0 {
                checks.push((e - Bidegree::new(1, 0), false));
            }
            if e.b > 0 {
                checks.push((e - Bidegree::new(0, 1), false));
            }
            for (d, zero) in checks {
                if cheap(d) && (self.hilbert_function_enumerated(d)? == 0) != zero {
                    return Err(Error::Contradiction {
                        message: format!("Hilbert function zero region disagrees with enumeration at {d}"),
                        dump: format!("ideal: {self}\nregion: {region}"),
                    });
                }
            }
        }
        Ok(())
    }

    /// The same ideal with the two blocks exchanged.
    pub fn swap_blocks(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.swapped(),
            self.gens.iter().map(|g| g.swap_blocks()).collect(),
        )
    }

    /// The same generators in a compatible ring (e.g. another block order).
    pub fn in_ring(&self, ring: RingDescriptor) -> Result<MonomialIdeal> {
        if !ring.compatible(&self.ring) || !self.gens.iter().all(|g| ring.owns(g)) {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal::new(ring, self.gens.clone()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Numerator `N(s, t)` of the bigraded Hilbert series
/// `N / ((1 − s)^{nx} (1 − t)^{ny})` of `S/M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    nx: usize,
    ny: usize,
    terms: BTreeMap<Bidegree, i128>,
}

impl HilbertNumerator {
    pub fn terms(&self) -> impl Iterator<Item = (Bidegree, i128)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, *c))
    }

    pub fn eval(&self, d: Bidegree) -> u128 {
        let mut s: i128 = 0;
        for (e, c) in &self.terms {
            let k = count_monomials(d.a - e.a, self.nx) * count_monomials(d.b - e.b, self.ny);
            s += c * k as i128;
        }
        debug_assert!(s >= 0);
        s as u128
    }
}

/// Accumulate `sign · t^shift · N(S/(gens))` into `out`, splitting on a
/// pivot `v^e`: `N(M) = N(M + v^e) + t^{deg v^e} N(M : v^e)`.
fn numerator(gens: Vec<Monomial>, shift: Bidegree, sign: i128, out: &mut BTreeMap<Bidegree, i128>) {
    let gens = minimalize(gens);
    if gens.is_empty() {
        *out.entry(shift).or_default() += sign;
        return;
    }
    let nv = gens[0].exps().len();
    let mut count = vec![0usize; nv];
    let mut min_exp = vec![u32::MAX; nv];
    for g in &gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
                min_exp[i] = min_exp[i].min(e);
            }
        }
    }
    let (v, &c) = count
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i)))
        .unwrap();
    if c <= 1 {
        // pairwise coprime: product of (1 − t^{deg g})
        let mut prod: Vec<(Bidegree, i128)> = vec![(shift, sign)];
        for g in &gens {
            let d = g.bidegree();
            let extra: Vec<(Bidegree, i128)> = prod.iter().map(|(e, c)| (*e + d, -c)).collect();
            prod.extend(extra);
        }
        for (e, c) in prod {
            *out.entry(e).or_default() += c;
        }
        return;
    }
    let e = min_exp[v];
    let mut pexps = vec![0u32; nv];
    pexps[v] = e;
    let nx = gens[0].nx();
    let pivot = Monomial::new(&pexps[..nx], &pexps[nx..]);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.checked_div(&g.gcd(&pivot)).expect("gcd divides"))
        .collect();
    numerator(plus, shift, sign, out);
    numerator(colon, shift + pivot.bidegree(), sign, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingDescriptor {
        RingDescriptor::new(2, 2).unwrap()
    }

    fn m(a: &[u32], b: &[u32]) -> Monomial {
        Monomial::new(a, b)
    }

    fn bd(a: i64, b: i64) -> Bidegree {
        Bidegree::new(a, b)
    }

    #[test]
    fn minimal_generator_examples() {
        let r = ring();
        let i = MonomialIdeal::new(r, vec![m(&[1, 0], &[1, 0]), m(&[1, 1], &[1, 0])]);
        assert_eq!(i.generators(), &[m(&[1, 0], &[1, 0])]);
        let j = MonomialIdeal::new(r, vec![m(&[0, 2], &[0, 0]), m(&[0, 1], &[0, 1]), m(&[0, 2], &[0, 1])]);
        assert_eq!(j.generators().len(), 2);
        assert!(MonomialIdeal::new(r, vec![]).is_zero());
    }

    #[test]
    fn biborel_examples() {
        let r = ring();
        let i = MonomialIdeal::new(r, vec![m(&[1, 0], &[1, 0])]);
        assert_eq!(i.biborel_witness(), Some(m(&[0, 1], &[1, 0])));
        assert!(MonomialIdeal::new(r, vec![m(&[0, 1], &[0, 1])]).is_biborel());
        assert!(MonomialIdeal::x_prefix(r, 2).is_biborel());
    }

    #[test]
    fn hilbert_examples() {
        let r = ring();
        assert_eq!(MonomialIdeal::zero(r).hilbert_function(bd(2, 3)).unwrap(), 12);
        let i = MonomialIdeal::new(r, vec![m(&[0, 1], &[0, 1])]);
        assert_eq!(i.hilbert_function(bd(1, 1)).unwrap(), 3);
        assert_eq!(MonomialIdeal::x_prefix(r, 2).hilbert_function(bd(1, 5)).unwrap(), 0);
        assert!(i.hilbert_function(bd(-1, 0)).is_err());
    }

    #[test]
    fn numerator_matches_enumeration() {
        let r = RingDescriptor::new(3, 2).unwrap();
        let i = MonomialIdeal::new(
            r,
            vec![
                m(&[0, 0, 2], &[1, 0]),
                m(&[0, 1, 1], &[0, 2]),
                m(&[1, 0, 1], &[0, 1]),
                m(&[0, 3, 0], &[0, 0]),
                m(&[0, 0, 0], &[0, 3]),
            ],
        );
        for a in 0..7 {
            for b in 0..7 {
                let d = bd(a, b);
                assert_eq!(i.hilbert_function(d).unwrap(), i.hilbert_function_enumerated(d).unwrap());
            }
        }
    }

    #[test]
    fn zero_region_examples() {
        let r = ring();
        let mx = MonomialIdeal::x_prefix(r, 2);
        assert_eq!(mx.hf_zero_region().unwrap().minimal_elements(), &[bd(1, 0)]);
        let both = mx.with_generators([m(&[0, 0], &[1, 0]), m(&[0, 0], &[0, 1])]);
        assert_eq!(both.hf_zero_region().unwrap().minimal_elements(), &[bd(0, 1), bd(1, 0)]);
        let p = MonomialIdeal::new(r, vec![m(&[1, 0], &[1, 0])]);
        assert!(p.hf_zero_region().unwrap().is_empty());
    }

    #[test]
    fn colon_examples() {
        let r = ring();
        let i = MonomialIdeal::new(r, vec![m(&[1, 0], &[1, 0])]);
        assert_eq!(i.colon_var(Var::X(0)).generators(), &[m(&[0, 0], &[1, 0])]);
        let j = MonomialIdeal::new(r, vec![m(&[0, 2], &[0, 0]), m(&[0, 1], &[0, 1]), m(&[1, 0], &[0, 0])]);
        let q = j.colon_var(Var::X(1));
        let expected = MonomialIdeal::new(r, vec![m(&[0, 1], &[0, 0]), m(&[0, 0], &[0, 1]), m(&[1, 0], &[0, 0])]);
        assert_eq!(q, expected);
        assert!(q.contains_ideal(&j));
    }
}
