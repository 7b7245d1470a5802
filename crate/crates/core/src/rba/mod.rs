//! The free commutative Rota-Baxter algebra on `R[x]`, truncated at a
//! filtration cap.
//!
//! A basis word `x^{e0} ⊗ x^{e1} ⊗ … ⊗ x^{et}` is stored as its exponent
//! vector and has filtration degree `t`. The scalar basis element `1_k` is the
//! all-zero word of length `k + 1`, so truncation at `N` keeps exactly the
//! `1_0, …, 1_N` part of a λ-exponential generating function.

mod element;
mod operator;
mod product;
mod word;

pub use element::RBAElement;
pub use operator::{derive, rb_apply};
pub use product::{
    element_mul, element_pow, geometric_inverse, one_mul_closed, power_list, word_product,
    word_product_recursive, word_product_stuffle,
};
pub use word::TensorWord;

use crate::Rational;
use num_traits::Zero;

/// Which word-product implementation `element_mul` uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ProductBackend {
    /// The recursive mixable shuffle.
    #[default]
    Recursive,
    /// Explicit enumeration of stuffle pairs of order preserving injections.
    Stuffle,
}

/// Weight and truncation shared by every operation on a family of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraContext {
    lambda: Rational,
    trunc: usize,
    backend: ProductBackend,
}

impl AlgebraContext {
    pub fn new(lambda: Rational, trunc: usize) -> Self {
        AlgebraContext {
            lambda,
            trunc,
            backend: ProductBackend::default(),
        }
    }

    pub fn with_backend(mut self, backend: ProductBackend) -> Self {
        self.backend = backend;
        self
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        AlgebraContext {
            trunc,
            ..self.clone()
        }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn backend(&self) -> ProductBackend {
        self.backend
    }

    pub fn is_weight_zero(&self) -> bool {
        self.lambda.is_zero()
    }

    /// Same weight and truncation; the backend is an evaluation detail.
    pub fn compatible(&self, other: &AlgebraContext) -> bool {
        self.lambda == other.lambda && self.trunc == other.trunc
    }
}
