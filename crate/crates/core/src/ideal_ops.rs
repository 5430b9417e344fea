//! Changes of coordinates, colon ideals, intersections and saturations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Bidegree, BlockOrder, Field, Ideal, Monomial, Polynomial, RingDescriptor, Term, Var};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis};

/// Bound on the absolute value of random matrix entries.
pub const ENTRY_BOUND: i64 = 1 << 16;

/// Attempts at drawing an invertible block before giving up.
pub const MAX_ATTEMPTS: usize = 64;

/// A block-diagonal matrix `u = (u^x, u^y)` acting on the two variable
/// blocks: `u ∘ f = f(u^x x, u^y y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    ux: Vec<Vec<BigRational>>,
    uy: Vec<Vec<BigRational>>,
    seed: u64,
}

/// Determinant by fraction-based Gaussian elimination in `field`.
pub fn determinant(m: &[Vec<BigRational>], field: Field) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|c| field.reduce(c.clone())).collect()).collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[col][col]);
        let inv = field.inv(&a[col][col]).expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = field.mul(&a[r][col], &inv);
            let (top, bottom) = a.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                let v = field.mul(&f, p);
                *x = field.sub(x, &v);
            }
        }
    }
    det
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

impl BlockMatrix {
    /// A handcrafted block matrix (seed 0). Fails when a block is not square
    /// of the right size or is singular over the ring's field.
    pub fn new(ring: &RingDescriptor, ux: Vec<Vec<BigRational>>, uy: Vec<Vec<BigRational>>) -> Result<BlockMatrix> {
        Self::checked(ring, ux, uy, 0)
    }

    fn checked(ring: &RingDescriptor, ux: Vec<Vec<BigRational>>, uy: Vec<Vec<BigRational>>, seed: u64) -> Result<BlockMatrix> {
        let field = ring.field();
        for (name, m, n) in [("x", &ux, ring.nx()), ("y", &uy, ring.ny())] {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::SingularMatrix(format!("{name}-block must be {n}x{n}")));
            }
            if determinant(m, field).is_zero() {
                return Err(Error::SingularMatrix(format!("{name}-block has zero determinant")));
            }
        }
        let reduce = |m: Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
            m.into_iter().map(|r| r.into_iter().map(|c| field.reduce(c)).collect()).collect()
        };
        Ok(BlockMatrix {
            ux: reduce(ux),
            uy: reduce(uy),
            seed,
        })
    }

    pub fn identity(ring: &RingDescriptor) -> BlockMatrix {
        BlockMatrix {
            ux: identity(ring.nx()),
            uy: identity(ring.ny()),
            seed: 0,
        }
    }

    pub fn ux(&self) -> &[Vec<BigRational>] {
        &self.ux
    }

    pub fn uy(&self) -> &[Vec<BigRational>] {
        &self.uy
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn image(&self, ring: RingDescriptor, v: Var) -> Polynomial {
        let (row, mk): (&[BigRational], fn(usize) -> Var) = match v {
            Var::X(i) => (&self.ux[i], Var::X),
            Var::Y(j) => (&self.uy[j], Var::Y),
            Var::T => panic!("the elimination variable is not transformed"),
        };
        Polynomial::from_unsorted(
            ring,
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Term {
                    coeff: c.clone(),
                    mono: Monomial::var(&ring, mk(k)),
                })
                .collect(),
        )
    }
}

/// Seeded random block matrix with entries in `[−2^16, 2^16]`; each block
/// is re-drawn until invertible over the ring's field.
pub fn random_block_matrix(ring: &RingDescriptor, seed: u64) -> Result<BlockMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ring.field();
    let mut draw = |n: usize, name: &str| -> Result<Vec<Vec<BigRational>>> {
        for _ in 0..MAX_ATTEMPTS {
            let m: Vec<Vec<BigRational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| field.reduce(BigRational::from_integer(BigInt::from(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)))))
                        .collect()
                })
                .collect();
            if !determinant(&m, field).is_zero() {
                return Ok(m);
            }
        }
        Err(Error::SingularMatrix(format!(
            "no invertible {name}-block after {MAX_ATTEMPTS} draws (seed {seed})"
        )))
    };
    let ux = draw(ring.nx(), "x")?;
    let uy = draw(ring.ny(), "y")?;
    Ok(BlockMatrix { ux, uy, seed })
}

/// Seeded random linear x-form with coefficients in `[−2^16, 2^16]`.
pub fn random_linear_x_form(ring: &RingDescriptor, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ring.field();
    loop {
        let p = Polynomial::from_unsorted(
            *ring,
            (0..ring.nx())
                .map(|i| Term {
                    coeff: field.reduce(BigRational::from_integer(BigInt::from(
                        rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND),
                    ))),
                    mono: Monomial::var(ring, Var::X(i)),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// `u ∘ f`.
pub fn transform(f: &Polynomial, u: &BlockMatrix) -> Result<Polynomial> {
    let ring = *f.ring();
    let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
    let mut power = |v: Var, e: u32| -> Result<Polynomial> {
        if let Some(p) = powers.get(&(v, e)) {
            return Ok(p.clone());
        }
        let p = u.image(ring, v).pow(e)?;
        powers.insert((v, e), p.clone());
        Ok(p)
    };
    let mut out = Polynomial::zero(ring);
    for t in f.terms() {
        if t.mono.t() > 0 {
            return Err(Error::RingMismatch);
        }
        let mut p = Polynomial::constant(ring, t.coeff.clone());
        for v in ring.variables() {
            let e = t.mono.exponent(v);
            if e > 0 {
                p = p.mul(&power(v, e)?)?;
            }
        }
        out = out.add(&p)?;
    }
    Ok(out)
}

/// Apply `u` to every generator.
pub fn change_coordinates(ideal: &Ideal, u: &BlockMatrix) -> Result<Ideal> {
    let ring = ideal.ring();
    if u.ux.len() != ring.nx() || u.uy.len() != ring.ny() {
        return Err(Error::RingMismatch);
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| transform(g, u))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(*ring, gens)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = *i.ring();
    if *j.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if i.is_zero() || j.is_zero() {
        return Ideal::new(ring, Vec::new());
    }
    let aux = ring.with_aux(true);
    let t = Polynomial::var(aux, Var::T);
    let one_minus_t = Polynomial::one(aux).sub(&t)?;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(g.in_ring(aux)?.mul(&t)?);
    }
    for h in j.generators() {
        gens.push(h.in_ring(aux)?.mul(&one_minus_t)?);
    }
    let gb = groebner_basis(&Ideal::new(aux, gens)?);
    Ideal::new(ring, gb.eliminate_aux(ring))
}

/// `(I : f) = (I ∩ (f)) / f`.
pub fn colon_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = *i.ring();
    if *f.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon"));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    let meet = intersect(i, &Ideal::new(ring, vec![f.clone()])?)?;
    let gens = meet
        .generators()
        .iter()
        .map(|h| h.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Saturation target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatMode {
    Poly(Polynomial),
    Mx,
    My,
    /// The irrelevant ideal `b = mx·my`.
    B,
}

fn same_ideal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a.elements() == b.elements()
}

/// `(I : f^∞)` by iterating colons until the reduced basis stabilizes.
pub fn saturate_by_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let mut cur = groebner_basis(i);
    loop {
        let next = groebner_basis(&colon_poly(&cur.to_ideal(), f)?);
        if same_ideal(&cur, &next) {
            return Ok(cur.to_ideal());
        }
        cur = next;
    }
}

/// Swap two variables of the same block.
fn swap_vars(f: &Polynomial, ring: RingDescriptor, v: Var, w: Var) -> Polynomial {
    let idx = |var: Var| match var {
        Var::X(i) => i,
        Var::Y(j) => ring.nx() + j,
        Var::T => unreachable!(),
    };
    let (i, j) = (idx(v), idx(w));
    Polynomial::from_unsorted(
        ring,
        f.terms()
            .iter()
            .map(|t| {
                let mut e = t.mono.exps().to_vec();
                e.swap(i, j);
                let nx = ring.nx();
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::new(&e[..nx], &e[nx..]),
                }
            })
            .collect(),
    )
}

/// `(I : v^∞)` for a variable and a bihomogeneous ideal: in a reverse
/// lexicographic order where `v` is the smallest variable, dividing each
/// element of a Gröbner basis by its largest power of `v` gives generators
/// of the saturation.
pub fn saturate_by_var(i: &Ideal, v: Var) -> Result<Ideal> {
    let ring = *i.ring();
    if !i.is_bihomogeneous() {
        return saturate_by_poly(i, &Polynomial::var(ring, v));
    }
    let (first, order) = match v {
        Var::X(_) => (Var::X(0), BlockOrder::XLow),
        Var::Y(_) => (Var::Y(0), BlockOrder::YLow),
        Var::T => return Err(Error::RingMismatch),
    };
    let work = ring.with_order(order);
    let moved: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|g| swap_vars(g, work, v, first))
        .collect();
    let gb = groebner_basis(&Ideal::new(work, moved)?);
    let one = Monomial::one(&work);
    let gens = gb
        .elements()
        .iter()
        .map(|g| {
            let e = g.terms().iter().map(|t| t.mono.exponent(first)).min().unwrap_or(0);
            let mut d = one.clone();
            for _ in 0..e {
                d = d.times_var(first);
            }
            let q = g.exact_div(&Polynomial::monomial(work, BigRational::one(), d))?;
            Ok(swap_vars(&q, ring, v, first))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

fn saturate_block(i: &Ideal, vars: Vec<Var>) -> Result<Ideal> {
    let mut parts = Vec::new();
    for v in vars {
        let s = saturate_by_var(i, v)?;
        if !groebner_basis(&s).is_unit() {
            parts.push(s);
        }
    }
    let mut iter = parts.into_iter();
    let Some(mut acc) = iter.next() else {
        return Ok(Ideal::unit(*i.ring()));
    };
    for s in iter {
        acc = intersect(&acc, &s)?;
    }
    Ok(groebner_basis(&acc).to_ideal())
}

/// Saturation of `I` in the given mode. The result is returned as its
/// reduced Gröbner basis.
pub fn saturate(i: &Ideal, mode: &SatMode) -> Result<Ideal> {
    let ring = *i.ring();
    match mode {
        SatMode::Poly(f) => saturate_by_poly(i, f),
        SatMode::Mx => saturate_block(i, (0..ring.nx()).map(Var::X).collect()),
        SatMode::My => saturate_block(i, (0..ring.ny()).map(Var::Y).collect()),
        SatMode::B => {
            let x = saturate(i, &SatMode::Mx)?;
            saturate(&x, &SatMode::My)
        }
    }
}

/// True iff the saturation by the irrelevant ideal is the unit ideal.
pub fn is_empty_variety(i: &Ideal) -> Result<bool> {
    Ok(groebner_basis(&saturate(i, &SatMode::B)?).is_unit())
}

/// `(I, forms)` where every form is a linear x-form.
pub fn add_linear_forms(i: &Ideal, forms: &[Polynomial]) -> Result<Ideal> {
    let expected = Bidegree::new(1, 0);
    for f in forms {
        if f.ring() != i.ring() {
            return Err(Error::RingMismatch);
        }
        let d = f.bidegree()?;
        if d != expected {
            return Err(Error::WrongBidegree { expected, found: d });
        }
    }
    let mut gens = i.generators().to_vec();
    gens.extend(forms.iter().cloned());
    Ideal::new(*i.ring(), gens)
}
