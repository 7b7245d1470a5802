use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use super::{enumerate, numbers, Composition};
use crate::Result;

/// A tabulated number family together with its arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Stirling2 { n: usize, k: usize },
    Bell { n: usize },
    GenStirling { n: usize, k: usize },
    GenBell { n: usize },
    Cover { n: usize, k: usize, l: usize },
    CoverDistinctMax { n: usize, k: usize, l: usize },
    CType { n: usize, k: usize, ty: Composition },
    CTotal { n: usize, k: usize },
}

impl Family {
    /// Fresh computation, bypassing any memo.
    pub fn compute(&self) -> Result<BigInt> {
        match self {
            Family::Stirling2 { n, k } => Ok(numbers::stirling2(*n, *k)),
            Family::Bell { n } => Ok(numbers::bell(*n)),
            Family::GenStirling { n, k } => Ok(numbers::gen_stirling_rec(*n, *k)),
            Family::GenBell { n } => numbers::gen_bell(*n),
            Family::Cover { n, k, l } => enumerate::cover_count(*n, *k, *l),
            Family::CoverDistinctMax { n, k, l } => enumerate::cover_count_distinct_max(*n, *k, *l),
            Family::CType { n, k, ty } => enumerate::restricted_type_count(*n, *k, ty),
            Family::CTotal { n, k } => enumerate::multiset_partition_total(*n, *k),
        }
    }
}

/// Shared memo of family values, safe to read and fill from several threads.
#[derive(Debug, Default)]
pub struct CombTables {
    memo: RwLock<HashMap<Family, BigInt>>,
}

impl CombTables {
    pub fn new() -> Self {
        CombTables::default()
    }

    pub fn get(&self, family: &Family) -> Result<BigInt> {
        if let Some(v) = self.memo.read().expect("memo poisoned").get(family) {
            return Ok(v.clone());
        }
        // Computed outside the lock; a racing writer stores the same value.
        let v = family.compute()?;
        self.memo
            .write()
            .expect("memo poisoned")
            .insert(family.clone(), v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
