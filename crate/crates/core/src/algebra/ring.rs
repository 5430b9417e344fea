use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Smallest modulus accepted for the prime-field mode.
pub const MIN_PRIME: u64 = 1 << 15;

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// Exact rationals over arbitrary-precision integers.
    Rational,
    /// Integers modulo a prime `p > 2^15`. Results are probabilistic proxies
    /// for characteristic zero.
    Prime(u64),
}

impl Field {
    pub fn is_heuristic(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rational => Ok(()),
            Field::Prime(p) => {
                if p <= MIN_PRIME {
                    Err(Error::InvalidRing(format!("modulus {p} must exceed 2^15")))
                } else if p >= 1 << 62 {
                    Err(Error::InvalidRing(format!("modulus {p} must be below 2^62")))
                } else if !is_prime_u64(p) {
                    Err(Error::InvalidRing(format!("modulus {p} is not prime")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Canonical representative of `c` in this field. For prime fields this
    /// is an integer in `[0, p)`.
    pub fn reduce(&self, c: BigRational) -> BigRational {
        match *self {
            Field::Rational => c,
            Field::Prime(_) => BigRational::from_integer(BigInt::from(self.residue(&c))),
        }
    }

    /// Residue of a rational modulo `p`. Panics on a denominator divisible by
    /// `p`, which cannot occur for canonical prime-field elements.
    pub(crate) fn residue(&self, c: &BigRational) -> u64 {
        let Field::Prime(p) = *self else {
            panic!("residue requested over the rationals")
        };
        let pb = BigInt::from(p);
        let num = c.numer().mod_floor(&pb).to_u64().unwrap();
        let den = c.denom().mod_floor(&pb).to_u64().unwrap();
        assert!(den != 0, "denominator vanishes modulo {p}");
        mul_mod(num, inv_mod(den, p), p)
    }

    pub fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x + y)
    }

    pub fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x - y)
    }

    pub fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x * y)
    }

    pub fn neg(&self, x: &BigRational) -> BigRational {
        self.reduce(-x)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: &BigRational) -> Option<BigRational> {
        if x.is_zero() {
            return None;
        }
        match *self {
            Field::Rational => Some(x.recip()),
            Field::Prime(p) => {
                let r = self.residue(x);
                Some(BigRational::from_integer(BigInt::from(inv_mod(r, p))))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "qq"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let field = if s == "qq" {
            Field::Rational
        } else if let Some(p) = s.strip_prefix("fp:") {
            let p = p
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("bad prime modulus '{p}'")))?;
            Field::Prime(p)
        } else {
            return Err(Error::Usage(format!("unknown field '{s}', expected qq or fp:<prime>")));
        };
        field.validate()?;
        Ok(field)
    }
}

/// Which variable block is smaller in the block degree-reverse-lexicographic
/// order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockOrder {
    /// `x_0 < … < x_n < y_0 < … < y_m`.
    #[default]
    XLow,
    /// `y_0 < … < y_m < x_0 < … < x_n`.
    YLow,
}

impl BlockOrder {
    pub fn flipped(self) -> BlockOrder {
        match self {
            BlockOrder::XLow => BlockOrder::YLow,
            BlockOrder::YLow => BlockOrder::XLow,
        }
    }
}

impl fmt::Display for BlockOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockOrder::XLow => write!(f, "x<y"),
            BlockOrder::YLow => write!(f, "y<x"),
        }
    }
}

impl FromStr for BlockOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "x<y" => Ok(BlockOrder::XLow),
            "y<x" => Ok(BlockOrder::YLow),
            other => Err(Error::Usage(format!("unknown order '{other}', expected x<y or y<x"))),
        }
    }
}

/// A variable of the bigraded ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    /// The auxiliary elimination variable.
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(j) => write!(f, "y{j}"),
            Var::T => write!(f, "t"),
        }
    }
}

/// The ring `k[x_0..x_n, y_0..y_m]` (optionally with one extra variable `t`)
/// together with its block monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    nx: usize,
    ny: usize,
    field: Field,
    order: BlockOrder,
    aux: bool,
}

impl RingDescriptor {
    /// Ring over the rationals with `nx` x-variables and `ny` y-variables,
    /// ordered with the x-block lowest.
    pub fn new(nx: usize, ny: usize) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidRing(format!(
                "need at least two variables per block, got {nx} x and {ny} y"
            )));
        }
        if nx + ny > 64 {
            return Err(Error::InvalidRing("at most 64 variables are supported".into()));
        }
        Ok(RingDescriptor {
            nx,
            ny,
            field: Field::Rational,
            order: BlockOrder::XLow,
            aux: false,
        })
    }

    pub fn with_field(mut self, field: Field) -> Result<Self> {
        field.validate()?;
        self.field = field;
        Ok(self)
    }

    pub fn with_order(mut self, order: BlockOrder) -> Self {
        self.order = order;
        self
    }

    pub fn with_aux(mut self, aux: bool) -> Self {
        self.aux = aux;
        self
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn nvars(&self) -> usize {
        self.nx + self.ny
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> BlockOrder {
        self.order
    }

    pub fn has_aux(&self) -> bool {
        self.aux
    }

    /// Same ring with the x- and y-blocks swapped (and the order flipped, so
    /// the relative position of the blocks is kept).
    pub fn swapped(&self) -> RingDescriptor {
        RingDescriptor {
            nx: self.ny,
            ny: self.nx,
            order: self.order.flipped(),
            ..*self
        }
    }

    /// Rings agree up to the auxiliary variable and the monomial order.
    pub fn compatible(&self, other: &RingDescriptor) -> bool {
        self.nx == other.nx && self.ny == other.ny && self.field == other.field
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> {
        let (nx, ny) = (self.nx, self.ny);
        (0..nx).map(Var::X).chain((0..ny).map(Var::Y))
    }

    pub(crate) fn owns(&self, m: &Monomial) -> bool {
        m.nx() == self.nx && m.ny() == self.ny && (self.aux || m.t() == 0)
    }

    /// Compare two monomials of this ring.
    ///
    /// The auxiliary variable is compared first, then total degree, then the
    /// exponent vectors in the block listing (smallest variable first): the
    /// monomial with the larger exponent at the first differing position is
    /// the smaller one.
    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
        if !self.owns(m1) || !self.owns(m2) {
            return Err(Error::RingMismatch);
        }
        Ok(self.cmp_mono(m1, m2))
    }

    #[inline]
    pub(crate) fn cmp_mono(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        m1.t()
            .cmp(&m2.t())
            .then_with(|| m1.degree().cmp(&m2.degree()))
            .then_with(|| {
                let (e1, e2) = (m1.exps(), m2.exps());
                let (lo, hi) = match self.order {
                    BlockOrder::XLow => (0..self.nx, self.nx..self.nx + self.ny),
                    BlockOrder::YLow => (self.nx..self.nx + self.ny, 0..self.nx),
                };
                for i in lo.chain(hi) {
                    if e1[i] != e2[i] {
                        return e2[i].cmp(&e1[i]);
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[x0..x{}, y0..y{}{}] order {}",
            self.field,
            self.nx - 1,
            self.ny - 1,
            if self.aux { ", t" } else { "" },
            self.order
        )
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Whether `c` has a representative in `field` (its denominator is a unit).
pub(crate) fn denominator_invertible(c: &BigRational, field: Field) -> bool {
    match field {
        Field::Rational => true,
        Field::Prime(p) => !(c.denom().abs() % BigInt::from(p)).is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn primes() {
        assert!(is_prime_u64(65521));
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(65535));
        assert!(!is_prime_u64(1));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("qq".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("fp:65521".parse::<Field>().unwrap(), Field::Prime(65521));
        assert!("fp:7".parse::<Field>().is_err());
        assert!("fp:65535".parse::<Field>().is_err());
    }

    #[test]
    fn small_rings_rejected() {
        assert!(RingDescriptor::new(1, 2).is_err());
        assert!(RingDescriptor::new(2, 1).is_err());
        assert!(RingDescriptor::new(2, 2).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(65521);
        let half = BigRational::new(1.into(), 2.into());
        let h = f.reduce(half);
        let two = BigRational::from_integer(2.into());
        assert!(f.mul(&h, &two).is_one());
        let x = f.reduce(BigRational::from_integer(12345.into()));
        assert!(f.mul(&x, &f.inv(&x).unwrap()).is_one());
    }
}
