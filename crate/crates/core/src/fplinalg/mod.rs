//! Dense linear algebra and polynomials over small prime fields.

mod field;
mod matrix;
mod poly;
mod reducer;
mod vec;

pub use field::{is_prime, Fp, SUPPORTED_PRIMES};
pub use matrix::FpMatrix;
pub use poly::{minimal_polynomial, FpPoly};
pub use reducer::Reducer;
pub use vec::FpVec;
