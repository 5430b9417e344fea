use std::fmt;

use super::polynomial::Polynomial;
use super::ring::RingDescriptor;
use crate::error::{Error, Result};

/// An ideal given by a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: RingDescriptor,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: RingDescriptor, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| *g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// Like [`Ideal::new`] but every generator must be bihomogeneous.
    pub fn bihomogeneous(ring: RingDescriptor, gens: Vec<Polynomial>) -> Result<Ideal> {
        let ideal = Ideal::new(ring, gens)?;
        if let Some(g) = ideal.gens.iter().find(|g| !g.is_bihomogeneous()) {
            return Err(Error::NotBihomogeneous(g.to_string()));
        }
        Ok(ideal)
    }

    pub fn unit(ring: RingDescriptor) -> Ideal {
        Ideal {
            ring,
            gens: vec![Polynomial::one(ring)],
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_bihomogeneous)
    }

    /// The same generators viewed in a compatible ring (other block order,
    /// or with the elimination variable).
    pub fn in_ring(&self, ring: RingDescriptor) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.in_ring(ring)).collect::<Result<_>>()?;
        Ok(Ideal { ring, gens })
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
