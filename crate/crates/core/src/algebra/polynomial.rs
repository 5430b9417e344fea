use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bidegree::Bidegree;
use super::monomial::Monomial;
use super::ring::{denominator_invertible, RingDescriptor, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigRational,
    pub mono: Monomial,
}

/// A sparse polynomial: terms with nonzero coefficients, strictly decreasing
/// in the ring's monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingDescriptor,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: RingDescriptor) -> Polynomial {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: RingDescriptor, c: BigRational) -> Polynomial {
        Polynomial::monomial(ring, c, Monomial::one(&ring))
    }

    pub fn one(ring: RingDescriptor) -> Polynomial {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn monomial(ring: RingDescriptor, c: BigRational, m: Monomial) -> Polynomial {
        let c = ring.field().reduce(c);
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![Term { coeff: c, mono: m }],
        }
    }

    pub fn var(ring: RingDescriptor, v: Var) -> Polynomial {
        Polynomial::monomial(ring, BigRational::one(), Monomial::var(&ring, v))
    }

    /// Build from arbitrary (coefficient, monomial) pairs: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms<I>(ring: RingDescriptor, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (BigRational, Monomial)>,
    {
        let mut v: Vec<Term> = Vec::new();
        for (c, m) in terms {
            if !ring.owns(&m) {
                return Err(Error::RingMismatch);
            }
            if !denominator_invertible(&c, ring.field()) {
                return Err(Error::InvalidRing(format!(
                    "coefficient {c} is not defined in {}",
                    ring.field()
                )));
            }
            v.push(Term { coeff: c, mono: m });
        }
        Ok(Polynomial::from_unsorted(ring, v))
    }

    pub(crate) fn from_unsorted(ring: RingDescriptor, mut v: Vec<Term>) -> Polynomial {
        v.sort_by(|p, q| ring.cmp_mono(&q.mono, &p.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.field().add(&last.coeff, &t.coeff);
                }
                _ => terms.push(Term {
                    coeff: ring.field().reduce(t.coeff),
                    mono: t.mono,
                }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial { ring, terms }
    }

    /// Trusted constructor: terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted(ring: RingDescriptor, terms: Vec<Term>) -> Polynomial {
        debug_assert!(Polynomial { ring, terms: terms.clone() }.is_sorted());
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Strictly decreasing, no zero coefficients.
    pub fn is_sorted(&self) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| self.ring.cmp_mono(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial("leading term"))
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.mono)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.bidegree();
                self.terms.iter().all(|s| s.mono.bidegree() == d)
            }
        }
    }

    pub fn bidegree(&self) -> Result<Bidegree> {
        let lead = self.terms.first().ok_or(Error::ZeroPolynomial("bidegree"))?;
        if !self.is_bihomogeneous() {
            return Err(Error::NotBihomogeneous(self.to_string()));
        }
        Ok(lead.mono.bidegree())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_mono(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a[i].coeff, &b[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Polynomial {
            ring: self.ring,
            terms: out,
        })
    }

    pub fn negate(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.negate())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c.clone());
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, &c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        if !self.ring.owns(m) {
            return Err(Error::RingMismatch);
        }
        // Multiplying by a monomial preserves the order of the terms.
        Ok(Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul(m),
                })
                .collect(),
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                v.push(Term {
                    coeff: field.mul(&s.coeff, &t.coeff),
                    mono: s.mono.mul(&t.mono),
                });
            }
        }
        Ok(Polynomial::from_unsorted(self.ring, v))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut r = Polynomial::one(self.ring);
        for _ in 0..e {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(&t.coeff).expect("nonzero lead");
                self.scale(&inv)
            }
        }
    }

    /// Same polynomial viewed in another ring with identical variables (for
    /// instance a different block order, or with the elimination variable
    /// added). Fails when a `t` exponent would be dropped.
    pub fn in_ring(&self, ring: RingDescriptor) -> Result<Polynomial> {
        if !ring.compatible(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut v = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if !ring.owns(&t.mono) {
                return Err(Error::RingMismatch);
            }
            v.push(t.clone());
        }
        Ok(Polynomial::from_unsorted(ring, v))
    }

    /// Exact division `self / divisor`; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor)?;
        let lead = divisor.leading_term()?;
        let field = self.ring.field();
        let lead_inv = field.inv(&lead.coeff).expect("nonzero lead");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.terms.first() {
            let Some(q) = t.mono.checked_div(&lead.mono) else {
                return Err(Error::NotDivisible {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            };
            let c = field.mul(&t.coeff, &lead_inv);
            let step = divisor.mul_monomial(&q)?.scale(&c);
            rem = rem.sub(&step)?;
            quot.push(Term { coeff: c, mono: q });
        }
        Ok(Polynomial::from_unsorted(self.ring, quot))
    }

    /// Replace each coefficient by an integer multiple so that all are
    /// integers with gcd 1 (rationals only; prime fields return `self`).
    pub fn primitive_part(&self) -> Polynomial {
        if self.ring.field() != super::Field::Rational || self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let nums: Vec<BigInt> = self
            .terms
            .iter()
            .map(|t| t.coeff.numer() * (&den / t.coeff.denom()))
            .collect();
        let g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .zip(nums)
                .map(|(t, n)| Term {
                    coeff: BigRational::from_integer(n / &g),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the ideal-file syntax, e.g. `3/4*x0^2*y1 - x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{abs}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingDescriptor {
        RingDescriptor::new(3, 2).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn v(r: RingDescriptor, x: Var) -> Polynomial {
        Polynomial::var(r, x)
    }

    #[test]
    fn bidegree_of_curve_generator() {
        let r = ring();
        let (x0, x1, x2) = (v(r, Var::X(0)), v(r, Var::X(1)), v(r, Var::X(2)));
        let (y0, y1) = (v(r, Var::Y(0)), v(r, Var::Y(1)));
        let f = x0.pow(2).unwrap().mul(&y0.pow(2).unwrap()).unwrap();
        let g = x1.pow(2).unwrap().mul(&y1.pow(2).unwrap()).unwrap();
        let h = x2.pow(2).unwrap().mul(&y0).unwrap().mul(&y1).unwrap();
        let p = f.add(&g).unwrap().add(&h).unwrap();
        assert_eq!(p.bidegree().unwrap(), Bidegree::new(2, 2));
        assert!(p.is_sorted());
    }

    #[test]
    fn bihomogeneity() {
        let r = ring();
        let p = v(r, Var::X(0)).add(&v(r, Var::Y(0))).unwrap();
        assert!(!p.is_bihomogeneous());
        assert!(p.bidegree().is_err());
        assert_eq!(v(r, Var::X(0)).bidegree().unwrap(), Bidegree::new(1, 0));
        assert!(Polynomial::zero(r).bidegree().is_err());
    }

    #[test]
    fn leading_terms() {
        let r = RingDescriptor::new(2, 2).unwrap();
        let x0y0 = Monomial::new(&[1, 0], &[1, 0]);
        let x1y0 = Monomial::new(&[0, 1], &[1, 0]);
        let x1y1 = Monomial::new(&[0, 1], &[0, 1]);
        let p = Polynomial::from_terms(r, [(q(3), x0y0.clone()), (q(5), x1y0.clone())]).unwrap();
        let lt = p.leading_term().unwrap();
        assert_eq!((lt.coeff.clone(), lt.mono.clone()), (q(5), x1y0));
        let p = Polynomial::from_terms(r, [(q(1), x1y1.clone()), (q(-1), x0y0)]).unwrap();
        assert_eq!(p.leading_term().unwrap().mono, x1y1);
        assert!(Polynomial::zero(r).leading_term().is_err());
        let c = Polynomial::monomial(r, q(7), Monomial::var(&r, Var::X(0)));
        assert_eq!(c.leading_term().unwrap().coeff, q(7));
    }

    #[test]
    fn additive_inverse() {
        let r = ring();
        let p = v(r, Var::X(0)).mul(&v(r, Var::Y(1))).unwrap().add(&v(r, Var::X(2))).unwrap();
        assert!(p.add(&p.negate()).unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = v(r, Var::X(0)).add(&v(r, Var::X(1))).unwrap();
        let b = v(r, Var::Y(0)).sub(&v(r, Var::Y(1))).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    fn display_roundtrip_shape() {
        let r = ring();
        let p = Polynomial::from_terms(
            r,
            [
                (BigRational::new(3.into(), 4.into()), Monomial::new(&[2, 0, 0], &[0, 1])),
                (q(-1), Monomial::new(&[0, 1, 0], &[0, 0])),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3/4*x0^2*y1 - x1");
    }
}
