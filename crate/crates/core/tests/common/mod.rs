//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles work on raw exponent vectors and dense linear algebra; they do
//! not call the library's Gröbner, Hilbert-series or region code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use bigrade::algebra::{Bidegree, Ideal, Monomial, Polynomial, RingDescriptor};
use bigrade::staircase::MonomialIdeal;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_composition(rng: &mut ChaCha8Rng, d: u32, k: usize) -> Vec<u32> {
    let mut e = vec![0; k];
    for _ in 0..d {
        e[rng.gen_range(0..k)] += 1;
    }
    e
}

pub fn random_monomial(rng: &mut ChaCha8Rng, ring: &RingDescriptor, d: Bidegree) -> Monomial {
    let a = random_composition(rng, d.a as u32, ring.nx());
    let b = random_composition(rng, d.b as u32, ring.ny());
    Monomial::new(&a, &b)
}

/// Random bihomogeneous polynomial of bidegree `d` with up to `terms` terms
/// and nonzero coefficients in `[-bound, bound]`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, ring: RingDescriptor, d: Bidegree, terms: usize, bound: i64) -> Polynomial {
    loop {
        let ts: Vec<(BigRational, Monomial)> = (0..terms)
            .map(|_| {
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-bound..=bound);
                }
                (BigRational::from_integer(BigInt::from(c)), random_monomial(rng, &ring, d))
            })
            .collect();
        let p = Polynomial::from_terms(ring, ts).expect("valid terms");
        if !p.is_zero() {
            return p;
        }
    }
}

/// One to three generators of bidegree at most `(2, 2)`, each with up to
/// four terms and small coefficients.
pub fn random_ideal(rng: &mut ChaCha8Rng, ring: RingDescriptor) -> Ideal {
    let n = rng.gen_range(1..=3);
    let gens = (0..n)
        .map(|_| {
            let mut d = Bidegree::ZERO;
            while d == Bidegree::ZERO {
                d = Bidegree::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
            }
            let terms = rng.gen_range(1..=4);
            random_polynomial(rng, ring, d, terms, 9)
        })
        .collect();
    Ideal::new(ring, gens).expect("same ring")
}

/// Closure of a set of exponent vectors under the moves `x_i → x_j`,
/// `y_i → y_j` with `i < j`, reduced to its minimal elements.
pub fn biborel_generators(nx: usize, seeds: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut all: BTreeSet<Vec<u32>> = seeds.iter().cloned().collect();
    let mut work: Vec<Vec<u32>> = seeds.to_vec();
    while let Some(u) = work.pop() {
        let n = u.len();
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            let block_end = if i < nx { nx } else { n };
            for j in i + 1..block_end {
                let mut v = u.clone();
                v[i] -= 1;
                v[j] += 1;
                if all.insert(v.clone()) {
                    work.push(v);
                }
            }
        }
    }
    let all: Vec<Vec<u32>> = all.into_iter().collect();
    all.iter()
        .filter(|u| !all.iter().any(|v| v != *u && divides(v, u)))
        .cloned()
        .collect()
}

pub fn divides(v: &[u32], u: &[u32]) -> bool {
    v.iter().zip(u).all(|(a, b)| a <= b)
}

/// A random bi-Borel ideal with at most `max_gens` minimal generators of
/// bidegree at most `(5, 5)`, or `None` when the draw is too large.
pub fn try_random_biborel(rng: &mut ChaCha8Rng, ring: RingDescriptor, max_gens: usize) -> Option<MonomialIdeal> {
    let (nx, ny) = (ring.nx(), ring.ny());
    let n = rng.gen_range(1..=3);
    let seeds: Vec<Vec<u32>> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=5);
            let b = rng.gen_range(0..=5);
            // Bias towards the highest variables so the closure stays small.
            let mut e = vec![0u32; nx + ny];
            for _ in 0..a {
                let i = nx - 1 - rng.gen_range(0..nx).min(rng.gen_range(0..nx));
                e[i] += 1;
            }
            for _ in 0..b {
                let j = ny - 1 - rng.gen_range(0..ny).min(rng.gen_range(0..ny));
                e[nx + j] += 1;
            }
            e
        })
        .filter(|e| e.iter().any(|&c| c > 0))
        .collect();
    if seeds.is_empty() {
        return None;
    }
    let gens = biborel_generators(nx, &seeds);
    if gens.len() > max_gens {
        return None;
    }
    let monos = gens.iter().map(|e| Monomial::new(&e[..nx], &e[nx..])).collect();
    Some(MonomialIdeal::new(ring, monos))
}

/// `count` random bi-Borel ideals in `ring`, deterministic in `seed`.
pub fn random_biborel_family(seed: u64, ring: RingDescriptor, count: usize, max_gens: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(m) = try_random_biborel(&mut r, ring, max_gens) {
            out.push(m);
        }
    }
    out
}

fn exps(m: &Monomial) -> Vec<u32> {
    m.alpha().iter().chain(m.beta()).copied().collect()
}

/// Membership in `M + (x_0, …, x_{k−1})` by divisibility.
fn in_prefix_sum(gens: &[Vec<u32>], k: usize, u: &[u32]) -> bool {
    u[..k].iter().any(|&e| e > 0) || gens.iter().any(|g| divides(g, u))
}

/// Brute-force `xreg` of a bi-Borel ideal on `[1, c] × [0, c]`: the points
/// `p` such that for every `k ≤ k0` no monomial of `(J_{k−1} : x_k) \ J_{k−1}`
/// has bidegree `≥ p`.
///
/// Only witnesses inside `[0, c]²` are enumerated. This loses nothing when
/// the generators have bidegree at most `(c, c)`: a witness `g·s` above `p`
/// can be divided down to bidegree `max(p, deg g)`, since the standard
/// monomials of `(J : g)` form a down-set.
pub fn brute_xreg(m: &MonomialIdeal, c: i64) -> BTreeSet<Bidegree> {
    let ring = m.ring();
    let (nx, ny) = (ring.nx(), ring.ny());
    let gens: Vec<Vec<u32>> = m.generators().iter().map(exps).collect();
    let has_var = |i: usize| gens.iter().any(|g| g.iter().enumerate().all(|(j, &e)| e == u32::from(i == j)));
    let k0 = (0..nx).find(|&k| (k + 1..nx).all(has_var)).unwrap_or(nx - 1);

    let mut witnesses: Vec<Bidegree> = Vec::new();
    for k in 0..=k0 {
        for a in 0..=c {
            for b in 0..=c {
                let d = Bidegree::new(a, b);
                let found = Monomial::enumerate(nx, ny, d).iter().any(|u| {
                    let u = exps(u);
                    if in_prefix_sum(&gens, k, &u) {
                        return false;
                    }
                    let mut v = u.clone();
                    v[k] += 1;
                    in_prefix_sum(&gens, k, &v)
                });
                if found {
                    witnesses.push(d);
                }
            }
        }
    }
    let mut region = BTreeSet::new();
    for a in 1..=c {
        for b in 0..=c {
            let p = Bidegree::new(a, b);
            if !witnesses.iter().any(|w| w.dominates(&p)) {
                region.insert(p);
            }
        }
    }
    region
}

/// Bidegrees of the minimal generators, from the raw generator list.
pub fn generator_bidegree_set(m: &MonomialIdeal) -> BTreeSet<Bidegree> {
    m.generators().iter().map(|g| g.bidegree()).collect()
}

pub const ORACLE_PRIME: u64 = 2_147_483_647;

fn mod_p(c: &BigRational) -> u64 {
    let p = BigInt::from(ORACLE_PRIME);
    let red = |x: &BigInt| -> u64 {
        let r = ((x % &p) + &p) % &p;
        r.to_u64().expect("reduced")
    };
    let n = red(c.numer());
    let d = red(c.denom());
    assert!(d != 0, "denominator divisible by the oracle prime");
    mul(n, pow(d, ORACLE_PRIME - 2))
}

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % ORACLE_PRIME as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    let p = ORACLE_PRIME;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow(rows[rank][col], p - 2);
        for x in rows[rank].iter_mut() {
            *x = mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul(f, *y)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `HF_{S/I}(d)` as `dim S_d` minus the rank of the span of all monomial
/// multiples of the generators in bidegree `d`, computed modulo a large
/// prime. Requires bihomogeneous generators with rational coefficients.
pub fn hf_by_rank(ideal: &Ideal, d: Bidegree) -> u128 {
    let ring = ideal.ring();
    let (nx, ny) = (ring.nx(), ring.ny());
    let cols = Monomial::enumerate(nx, ny, d);
    let index: HashMap<Vec<u32>, usize> = cols.iter().enumerate().map(|(i, m)| (exps(m), i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let gd = g.bidegree().expect("bihomogeneous generator");
        if !d.dominates(&gd) {
            continue;
        }
        for mult in Monomial::enumerate(nx, ny, d - gd) {
            let mut row = vec![0u64; cols.len()];
            for t in g.terms() {
                let e: Vec<u32> = exps(&t.mono).iter().zip(exps(&mult)).map(|(a, b)| a + b).collect();
                row[index[&e]] = mod_p(&t.coeff);
            }
            rows.push(row);
        }
    }
    (cols.len() - rank_mod_p(rows, cols.len())) as u128
}

/// `HF_{S/M}(d)` by counting standard monomials with raw divisibility.
pub fn hf_by_counting(m: &MonomialIdeal, d: Bidegree) -> u128 {
    let ring = m.ring();
    let gens: Vec<Vec<u32>> = m.generators().iter().map(exps).collect();
    Monomial::enumerate(ring.nx(), ring.ny(), d)
        .iter()
        .filter(|u| {
            let u = exps(u);
            !gens.iter().any(|g| divides(g, &u))
        })
        .count() as u128
}
