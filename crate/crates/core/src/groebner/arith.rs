//! Coefficient arithmetic used inside the Buchberger engine.
//!
//! Over the rationals the engine works with primitive integer polynomials
//! and fraction-free reduction steps; over a prime field it works with `u64`
//! residues.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{inv_mod, mul_mod, Field, Monomial, Polynomial, RingDescriptor, Term};

pub(crate) type ETerm<C> = (Monomial, C);

pub(crate) trait Coefficients: Sync {
    type C: Clone + PartialEq + Debug + Send + Sync;

    fn is_zero(&self, c: &Self::C) -> bool;
    fn is_one(&self, c: &Self::C) -> bool;
    fn one(&self) -> Self::C;
    fn neg(&self, c: &Self::C) -> Self::C;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;

    /// Multipliers `(a, b)` with `a·c = b·d` and `a ≠ 0`, so that
    /// `a·p − b·m·g` cancels a term `c·(m·lm g)` of `p` against `g`
    /// whose leading coefficient is `d`.
    fn cancel(&self, c: &Self::C, d: &Self::C) -> (Self::C, Self::C);

    /// Remove content (integers) or make monic (prime fields).
    fn normalize(&self, terms: &mut [ETerm<Self::C>]);

    fn import(&self, p: &Polynomial) -> Vec<ETerm<Self::C>>;
    fn export(&self, ring: RingDescriptor, terms: Vec<ETerm<Self::C>>) -> Polynomial;

    /// `c / scale` as a field element, where `scale` is a product of
    /// `cancel` multipliers.
    fn unscale(&self, c: &Self::C, scale: &Self::C) -> BigRational;

    /// Divide both term lists by the content they share. No-op over prime
    /// fields.
    fn remove_common_content(&self, a: &mut [ETerm<Self::C>], b: &mut [ETerm<Self::C>]);
}

/// Fraction-free arithmetic over the integers for rational ideals.
pub(crate) struct IntArith;

impl Coefficients for IntArith {
    type C = BigInt;

    fn is_zero(&self, c: &BigInt) -> bool {
        c.is_zero()
    }
    fn is_one(&self, c: &BigInt) -> bool {
        c.is_one()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn neg(&self, c: &BigInt) -> BigInt {
        -c
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn cancel(&self, c: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
        let g = c.gcd(d);
        let (mut a, mut b) = (d / &g, c / &g);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }

    fn normalize(&self, terms: &mut [ETerm<BigInt>]) {
        if terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in terms.iter() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    fn import(&self, p: &Polynomial) -> Vec<ETerm<BigInt>> {
        p.primitive_part()
            .terms()
            .iter()
            .map(|t| (t.mono.clone(), t.coeff.to_integer()))
            .collect()
    }

    fn export(&self, ring: RingDescriptor, terms: Vec<ETerm<BigInt>>) -> Polynomial {
        Polynomial::from_sorted(
            ring,
            terms
                .into_iter()
                .map(|(m, c)| Term {
                    coeff: BigRational::from_integer(c),
                    mono: m,
                })
                .collect(),
        )
    }

    fn unscale(&self, c: &BigInt, scale: &BigInt) -> BigRational {
        BigRational::new(c.clone(), scale.clone())
    }

    fn remove_common_content(&self, a: &mut [ETerm<BigInt>], b: &mut [ETerm<BigInt>]) {
        let mut g = BigInt::zero();
        for (_, c) in a.iter().chain(b.iter()) {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() {
            return;
        }
        for (_, c) in a.iter_mut().chain(b.iter_mut()) {
            *c = &*c / &g;
        }
    }
}

/// Arithmetic modulo a word-sized prime.
pub(crate) struct ModArith {
    pub p: u64,
}

impl ModArith {
    fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.p)
    }
}

impl Coefficients for ModArith {
    type C = u64;

    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }
    fn is_one(&self, c: &u64) -> bool {
        *c == 1
    }
    fn one(&self) -> u64 {
        1
    }
    fn neg(&self, c: &u64) -> u64 {
        if *c == 0 {
            0
        } else {
            self.p - c
        }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn cancel(&self, c: &u64, d: &u64) -> (u64, u64) {
        (1, mul_mod(*c, self.inv(*d), self.p))
    }

    fn normalize(&self, terms: &mut [ETerm<u64>]) {
        if let Some((_, lead)) = terms.first() {
            if *lead != 1 {
                let inv = self.inv(*lead);
                for (_, c) in terms.iter_mut() {
                    *c = mul_mod(*c, inv, self.p);
                }
            }
        }
    }

    fn import(&self, p: &Polynomial) -> Vec<ETerm<u64>> {
        let field = Field::Prime(self.p);
        p.terms()
            .iter()
            .map(|t| (t.mono.clone(), field.residue(&t.coeff)))
            .collect()
    }

    fn export(&self, ring: RingDescriptor, terms: Vec<ETerm<u64>>) -> Polynomial {
        Polynomial::from_sorted(
            ring,
            terms
                .into_iter()
                .map(|(m, c)| Term {
                    coeff: BigRational::from_integer(BigInt::from(c)),
                    mono: m,
                })
                .collect(),
        )
    }

    fn unscale(&self, c: &u64, scale: &u64) -> BigRational {
        let v = mul_mod(*c, self.inv(*scale), self.p);
        BigRational::from_integer(BigInt::from(v))
    }

    fn remove_common_content(&self, _: &mut [ETerm<u64>], _: &mut [ETerm<u64>]) {}
}
