use std::fmt;

use smallvec::SmallVec;

use super::bidegree::Bidegree;
use super::ring::{RingDescriptor, Var};
use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 8]>;

/// A monomial `x^α y^β` (times `t^e` in rings with the elimination variable).
///
/// Exponents are stored flat, x-block first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    nx: u16,
    t: u32,
    deg: u32,
}

impl Monomial {
    pub fn new(alpha: &[u32], beta: &[u32]) -> Monomial {
        let mut exps = Exps::with_capacity(alpha.len() + beta.len());
        exps.extend_from_slice(alpha);
        exps.extend_from_slice(beta);
        Monomial::from_parts(exps, alpha.len(), 0)
    }

    fn from_parts(exps: Exps, nx: usize, t: u32) -> Monomial {
        let deg = exps.iter().sum();
        Monomial {
            exps,
            nx: nx as u16,
            t,
            deg,
        }
    }

    pub fn one(ring: &RingDescriptor) -> Monomial {
        Monomial::from_parts(SmallVec::from_elem(0, ring.nvars()), ring.nx(), 0)
    }

    pub fn var(ring: &RingDescriptor, v: Var) -> Monomial {
        let mut m = Monomial::one(ring);
        match v {
            Var::X(i) => {
                assert!(i < ring.nx(), "x{i} out of range");
                m.exps[i] = 1;
                m.deg = 1;
            }
            Var::Y(j) => {
                assert!(j < ring.ny(), "y{j} out of range");
                m.exps[ring.nx() + j] = 1;
                m.deg = 1;
            }
            Var::T => m.t = 1,
        }
        m
    }

    /// Copy of `self` with the elimination-variable exponent set to `e`.
    pub fn with_t(mut self, e: u32) -> Monomial {
        self.t = e;
        self
    }

    pub fn nx(&self) -> usize {
        self.nx as usize
    }

    pub fn ny(&self) -> usize {
        self.exps.len() - self.nx as usize
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.nx as usize]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.nx as usize..]
    }

    /// Flat exponent vector over x- then y-variables.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X(i) => self.exps[i],
            Var::Y(j) => self.exps[self.nx as usize + j],
            Var::T => self.t,
        }
    }

    /// Total degree in the x- and y-variables.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn bidegree(&self) -> Bidegree {
        let a: u32 = self.alpha().iter().sum();
        Bidegree::new(a as i64, (self.deg - a) as i64)
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.t == 0
    }

    fn same_shape(&self, other: &Monomial) -> bool {
        self.nx == other.nx && self.exps.len() == other.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.same_shape(other));
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial {
            exps,
            nx: self.nx,
            t: self.t + other.t,
            deg: self.deg + other.deg,
        }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert!(self.same_shape(other));
        self.t <= other.t
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` if the division is not exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            nx: self.nx,
            t: self.t - divisor.t,
            deg: self.deg - divisor.deg,
        })
    }

    /// `self / divisor`; errors when `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        self.checked_div(divisor).ok_or_else(|| Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.same_shape(other));
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_parts(exps, self.nx as usize, self.t.max(other.t))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.same_shape(other));
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial::from_parts(exps, self.nx as usize, self.t.min(other.t))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (self.t == 0 || other.t == 0)
            && self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / v` when `v` divides `self`, else `self` unchanged. This is the
    /// generator map for the colon of a monomial ideal by a variable.
    pub fn strip_var(&self, v: Var) -> Monomial {
        let mut m = self.clone();
        match v {
            Var::X(i) if m.exps[i] > 0 => {
                m.exps[i] -= 1;
                m.deg -= 1;
            }
            Var::Y(j) if m.exps[self.nx as usize + j] > 0 => {
                m.exps[self.nx as usize + j] -= 1;
                m.deg -= 1;
            }
            Var::T if m.t > 0 => m.t -= 1,
            _ => {}
        }
        m
    }

    /// Multiply by a single variable.
    pub fn times_var(&self, v: Var) -> Monomial {
        let mut m = self.clone();
        match v {
            Var::X(i) => {
                m.exps[i] += 1;
                m.deg += 1;
            }
            Var::Y(j) => {
                m.exps[self.nx as usize + j] += 1;
                m.deg += 1;
            }
            Var::T => m.t += 1,
        }
        m
    }

    /// The monomial with its two blocks exchanged (y-block first).
    pub fn swap_blocks(&self) -> Monomial {
        let mut exps = Exps::with_capacity(self.exps.len());
        exps.extend_from_slice(self.beta());
        exps.extend_from_slice(self.alpha());
        Monomial::from_parts(exps, self.ny(), self.t)
    }

    /// Bitmask of the variables occurring in `self`; a necessary condition
    /// for `a | b` is `mask(a) & !mask(b) == 0`.
    pub(crate) fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                mask |= 1 << i;
            }
        }
        if self.t > 0 {
            mask |= 1 << 63;
        }
        mask
    }

    /// All monomials of bidegree `d` in a ring with `nx` x- and `ny`
    /// y-variables, in no particular order.
    pub fn enumerate(nx: usize, ny: usize, d: Bidegree) -> Vec<Monomial> {
        if d.a < 0 || d.b < 0 {
            return Vec::new();
        }
        let xs = compositions(d.a as u32, nx);
        let ys = compositions(d.b as u32, ny);
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                out.push(Monomial::new(x, y));
            }
        }
        out
    }
}

/// Number of monomials of degree `d` in `k` variables.
pub fn count_monomials(d: i64, k: usize) -> u128 {
    if d < 0 {
        return 0;
    }
    binomial(d as u128 + k as u128 - 1, k as u128 - 1)
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All exponent vectors of length `k` summing to `d`.
pub fn compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    if k == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, name: String, e: u32| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        };
        put(f, "t".into(), self.t)?;
        for (i, e) in self.alpha().iter().enumerate() {
            put(f, format!("x{i}"), *e)?;
        }
        for (j, e) in self.beta().iter().enumerate() {
            put(f, format!("y{j}"), *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn ring() -> RingDescriptor {
        RingDescriptor::new(2, 2).unwrap()
    }

    fn m(a: [u32; 2], b: [u32; 2]) -> Monomial {
        Monomial::new(&a, &b)
    }

    #[test]
    fn order_examples() {
        let r = ring();
        // x0*y0 < x1*y0
        assert_eq!(r.compare(&m([1, 0], [1, 0]), &m([0, 1], [1, 0])).unwrap(), Ordering::Less);
        // x1*y0 < x1*y1
        assert_eq!(r.compare(&m([0, 1], [1, 0]), &m([0, 1], [0, 1])).unwrap(), Ordering::Less);
        let x = m([2, 1], [0, 3]);
        assert_eq!(r.compare(&x, &x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let other = Monomial::new(&[1, 0, 0], &[0, 1]);
        assert!(r.compare(&other, &m([1, 0], [0, 0])).is_err());
    }

    #[test]
    fn monomial_suite() {
        let x1sq = m([0, 2], [0, 0]);
        let x1y1 = m([0, 1], [0, 1]);
        assert_eq!(x1sq.lcm(&x1y1), m([0, 2], [0, 1]));
        let x0y0 = m([1, 0], [1, 0]);
        let x0x1y0 = m([1, 1], [1, 0]);
        assert!(x0y0.divides(&x0x1y0));
        assert_eq!(x0x1y0.quotient(&x0y0).unwrap(), m([0, 1], [0, 0]));
        assert!(x0x1y0.quotient(&x1sq).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::enumerate(2, 2, Bidegree::new(2, 3)).len(), 12);
        assert_eq!(count_monomials(2, 2) * count_monomials(3, 2), 12);
        assert_eq!(count_monomials(5, 3), 21);
        assert!(Monomial::enumerate(2, 2, Bidegree::new(-1, 0)).is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(m([2, 0], [0, 1]).to_string(), "x0^2*y1");
        assert_eq!(Monomial::one(&ring()).to_string(), "1");
    }
}
