//! Gröbner bases under the block DRL order.

mod arith;
mod engine;

use crate::algebra::{Bidegree, Field, Ideal, Monomial, Polynomial, RingDescriptor};
use crate::error::{Error, Result};
use crate::staircase::MonomialIdeal;
use arith::{Coefficients, IntArith, ModArith};
use engine::Engine;

/// A Gröbner basis of an ideal. Elements are sorted by increasing leading
/// monomial; when `reduced` is set they form the unique reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingDescriptor,
    elements: Vec<Polynomial>,
    reduced: bool,
}

fn compute<A: Coefficients>(
    arith: &A,
    ring: RingDescriptor,
    gens: &[Polynomial],
    cap: Option<Bidegree>,
    reduced: bool,
) -> Vec<Polynomial> {
    let mut e = Engine::new(ring, arith, cap);
    e.add_generators(gens.iter().map(|g| arith.import(g)).collect());
    e.run();
    let basis = if reduced {
        e.reduced_basis()
    } else {
        let mut b = e.basis();
        for p in b.iter_mut() {
            arith.normalize(p);
        }
        b.sort_by(|p, q| ring.cmp_mono(&p[0].0, &q[0].0));
        b
    };
    basis
        .into_iter()
        .map(|t| arith.export(ring, t).monic())
        .collect()
}

fn dispatch(
    ring: RingDescriptor,
    gens: &[Polynomial],
    cap: Option<Bidegree>,
    reduced: bool,
) -> Vec<Polynomial> {
    match ring.field() {
        Field::Rational => compute(&IntArith, ring, gens, cap, reduced),
        Field::Prime(p) => compute(&ModArith { p }, ring, gens, cap, reduced),
    }
}

fn check_ring(ring: &RingDescriptor, f: &Polynomial) -> Result<()> {
    if f.ring() != ring {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Compute a Gröbner basis of `ideal` (minimal, monic, not tail-reduced).
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    let ring = *ideal.ring();
    GroebnerBasis {
        ring,
        elements: dispatch(ring, ideal.generators(), None, false),
        reduced: false,
    }
}

/// Gröbner basis truncated at `cap`: S-pairs whose lcm has a bidegree not
/// below `cap` are skipped. For bihomogeneous input the result agrees with
/// a full basis in every bidegree `≤ cap`.
pub fn buchberger_truncated(ideal: &Ideal, cap: Bidegree) -> GroebnerBasis {
    let ring = *ideal.ring();
    GroebnerBasis {
        ring,
        elements: dispatch(ring, ideal.generators(), Some(cap), true),
        reduced: true,
    }
}

/// The reduced Gröbner basis of `ideal`.
pub fn groebner_basis(ideal: &Ideal) -> GroebnerBasis {
    let ring = *ideal.ring();
    GroebnerBasis {
        ring,
        elements: dispatch(ring, ideal.generators(), None, true),
        reduced: true,
    }
}

fn nf_with<A: Coefficients>(
    arith: &A,
    ring: RingDescriptor,
    f: &Polynomial,
    basis: &[Polynomial],
) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let e = Engine::with_basis(ring, arith, basis.iter().map(|g| arith.import(g)).collect());
    let imported = arith.import(f);
    // content removed by import, restored below
    let content = f.terms()[0].coeff.clone()
        / arith
            .export(ring, vec![imported[0].clone()])
            .terms()[0]
            .coeff
            .clone();
    let (r, s) = e.normal_form_scaled(imported);
    let terms = r
        .into_iter()
        .map(|(m, c)| crate::algebra::Term {
            coeff: ring.field().reduce(arith.unscale(&c, &s) * &content),
            mono: m,
        })
        .collect();
    Polynomial::from_sorted(ring, terms)
}

/// Remainder of `f` under multivariate division by `basis`: no term of the
/// result is divisible by a leading monomial of `basis`, and `f − result`
/// lies in the ideal generated by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = *f.ring();
    for g in basis {
        check_ring(&ring, g)?;
    }
    Ok(match ring.field() {
        Field::Rational => nf_with(&IntArith, ring, f, basis),
        Field::Prime(p) => nf_with(&ModArith { p }, ring, f, basis),
    })
}

/// Ideal membership via the reduced basis.
pub fn membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_ring(ideal.ring(), f)?;
    groebner_basis(ideal).contains(f)
}

/// The initial ideal in minimal-generator form.
pub fn initial_ideal(ideal: &Ideal) -> MonomialIdeal {
    buchberger(ideal).initial_ideal()
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.terms()[0].mono.clone())
            .collect()
    }

    /// The unique reduced basis of the same ideal.
    pub fn reduce(&self) -> GroebnerBasis {
        if self.reduced {
            return self.clone();
        }
        GroebnerBasis {
            ring: self.ring,
            elements: dispatch(self.ring, &self.elements, None, true),
            reduced: true,
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_ring(&self.ring, f)?;
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring, self.leading_monomials())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.ring, self.elements.clone()).expect("basis elements share the ring")
    }

    /// Check Buchberger's criterion directly: every S-polynomial reduces to
    /// zero modulo the elements.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        fn check<A: Coefficients>(arith: &A, gb: &GroebnerBasis) -> bool {
            Engine::with_basis(
                gb.ring,
                arith,
                gb.elements.iter().map(|g| arith.import(g)).collect(),
            )
            .is_groebner()
        }
        match self.ring.field() {
            Field::Rational => check(&IntArith, self),
            Field::Prime(p) => check(&ModArith { p }, self),
        }
    }

    /// Basis elements whose leading monomial does not involve `t`, mapped
    /// into `ring` (which must be the same ring without the aux variable).
    pub(crate) fn eliminate_aux(&self, ring: RingDescriptor) -> Vec<Polynomial> {
        self.elements
            .iter()
            .filter(|g| g.terms()[0].mono.t() == 0)
            .map(|g| g.in_ring(ring).expect("t-free element"))
            .collect()
    }
}
