//! Ideals used by the documentation, the command-line examples and the
//! acceptance suite.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Ideal, Monomial, Polynomial, RingDescriptor};
use crate::ideal_ops::ENTRY_BOUND;

fn mono(ring: RingDescriptor, a: &[u32], b: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, BigRational::from_integer(1.into()), Monomial::new(a, b))
}

/// The curve `(x0²y0² + x1²y1² + x2²y0y1, x2y0³ + (x0 + x1)y1³)` in
/// `k[x0, x1, x2, y0, y1]` (before saturation).
pub fn curve() -> Ideal {
    let r = RingDescriptor::new(3, 2).expect("valid ring");
    let f1 = mono(r, &[2, 0, 0], &[2, 0])
        .add(&mono(r, &[0, 2, 0], &[0, 2]))
        .and_then(|p| p.add(&mono(r, &[0, 0, 2], &[1, 1])))
        .expect("same ring");
    let f2 = mono(r, &[0, 0, 1], &[3, 0])
        .add(&mono(r, &[1, 0, 0], &[0, 3]))
        .and_then(|p| p.add(&mono(r, &[0, 1, 0], &[0, 3])))
        .expect("same ring");
    Ideal::new(r, vec![f1, f2]).expect("same ring")
}

/// A random binary form of degree `d` in the x-block (`x = true`) or the
/// y-block of `k[x0, x1, y0, y1]`.
fn binary_form(ring: RingDescriptor, d: u32, x: bool, rng: &mut ChaCha8Rng) -> Polynomial {
    let terms = (0..=d).map(|i| {
        let e = [d - i, i];
        let m = if x { Monomial::new(&e, &[0, 0]) } else { Monomial::new(&[0, 0], &e) };
        (BigRational::from_integer(BigInt::from(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))), m)
    });
    Polynomial::from_terms(ring, terms).expect("valid terms")
}

/// `(p3·q1, p3'·q1', p1·q3, p1'·q3')` in `k[x0, x1, y0, y1]` with `p_i`,
/// `q_i` random forms of degree `i` in the x- resp. y-variables drawn from
/// `seed`.
pub fn product_forms(seed: u64) -> Ideal {
    let r = RingDescriptor::new(2, 2).expect("valid ring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = Vec::new();
    for (dx, dy) in [(3, 1), (3, 1), (1, 3), (1, 3)] {
        let p = binary_form(r, dx, true, &mut rng);
        let q = binary_form(r, dy, false, &mut rng);
        gens.push(p.mul(&q).expect("same ring"));
    }
    Ideal::new(r, gens).expect("same ring")
}

/// Seed used for [`product_forms`] in the shipped example file.
pub const PRODUCT_FORMS_SEED: u64 = 2024;
