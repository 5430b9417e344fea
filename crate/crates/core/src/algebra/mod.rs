//! Coefficient fields, bigraded monomials and polynomials, and the block
//! degree-reverse-lexicographic order.

mod bidegree;
mod ideal;
mod monomial;
mod polynomial;
mod ring;

pub use bidegree::Bidegree;
pub use ideal::Ideal;
pub use monomial::{compositions, count_monomials, Monomial};
pub use polynomial::{Polynomial, Term};
pub use ring::{is_prime_u64, BlockOrder, Field, RingDescriptor, Var, MIN_PRIME};
pub(crate) use ring::{inv_mod, mul_mod};
