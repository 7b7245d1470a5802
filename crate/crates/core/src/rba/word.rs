use std::fmt;

use crate::{Error, Result};

/// A pure tensor `x^{e0} ⊗ … ⊗ x^{et}`, stored by exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord(Vec<u32>);

impl TensorWord {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::bad("a tensor word needs at least one factor"));
        }
        Ok(TensorWord(exponents))
    }

    pub(crate) fn from_vec_unchecked(exponents: Vec<u32>) -> Self {
        debug_assert!(!exponents.is_empty());
        TensorWord(exponents)
    }

    /// The algebra unit `1 = 1_0`.
    pub fn unit() -> Self {
        TensorWord(vec![0])
    }

    /// `1_k = 1 ⊗ … ⊗ 1` with `k + 1` factors.
    pub fn one(k: usize) -> Self {
        TensorWord(vec![0; k + 1])
    }

    /// `1 ⊗ x^{p1} ⊗ … ⊗ x^{pt}`.
    pub fn under_unit(parts: &[u32]) -> Self {
        let mut v = Vec::with_capacity(parts.len() + 1);
        v.push(0);
        v.extend_from_slice(parts);
        TensorWord(v)
    }

    /// `1 ⊗ x^{⊗n}`, the image of `q^n / n!` at weight zero.
    pub fn x_tensor(n: usize) -> Self {
        let mut v = vec![1; n + 1];
        v[0] = 0;
        TensorWord(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Number of tensor factors minus one.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn lead(&self) -> u32 {
        self.0[0]
    }

    pub fn tail(&self) -> &[u32] {
        &self.0[1..]
    }

    pub fn is_scalar(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}
