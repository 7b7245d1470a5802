//! Exact computation in free commutative Rota-Baxter algebras of weight λ:
//! mixable shuffle products, λ-exponential generating functions, the number
//! families they generate, and q-series identities read inside the algebra.

pub mod comb;
pub mod egf;
mod error;
pub mod qseries;
pub mod rational;
pub mod rba;
pub mod verify;

pub use egf::LambdaEGF;
pub use error::{Error, Result};
pub use qseries::QSeries;
pub use rational::Rational;
pub use rba::{AlgebraContext, ProductBackend, RBAElement, TensorWord};
