//! Number families of λ-exponential generating functions, each with a
//! closed form or recurrence and an independent enumeration.

mod enumerate;
mod numbers;
mod tables;

use std::fmt;

pub use enumerate::{
    compositions_bounded, count_generalized_partitions, count_set_partitions, cover_count,
    cover_count_distinct_max, cover_count_with_limit, cover_sum, enum_covers,
    enum_covers_distinct_max, enum_generalized_partitions, enum_set_partitions,
    generalized_partition_sum, multiset_partition_total, restricted_type_count, stuffle_type_count,
    Block, SetFamily, DEFAULT_SEARCH_LIMIT,
};
pub use numbers::{
    bell, binomial, factorial, gen_bell, gen_stirling_explicit, gen_stirling_rec, multinomial,
    stirling2,
};
pub use tables::{CombTables, Family};

use crate::{Error, Result};

/// An ordered sequence of positive parts. The empty composition is the
/// only composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::bad("composition parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|I|`, the sum of the parts.
    pub fn norm(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(I)`, the number of parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
