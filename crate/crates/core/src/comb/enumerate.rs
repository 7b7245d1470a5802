//! Brute-force enumeration. Every search carries an explicit state budget
//! and fails with [`Error::SizeLimit`] instead of returning a partial answer.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Composition;
use crate::rational::pow;
use crate::{Error, Rational, Result};

pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

/// A subset of `[n]`, sorted, 1-based.
pub type Block = Vec<usize>;
/// An ordered list of blocks.
pub type SetFamily = Vec<Block>;

const MAX_POINTS: usize = 62;

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::SizeLimit { limit: self.limit });
        }
        Ok(())
    }
}

fn check_points(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::bad(format!(
            "enumeration supports at most {MAX_POINTS} points, got {n}"
        )));
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

fn block_of(mask: u64) -> Block {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn family_of(masks: &[u64]) -> SetFamily {
    masks.iter().copied().map(block_of).collect()
}

fn top_bit(mask: u64) -> u32 {
    63 - mask.leading_zeros()
}

fn subsets_of_size(n: usize, size: usize) -> Vec<u64> {
    (0..n)
        .combinations(size)
        .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect()
}

// ---------------------------------------------------------------------------
// Set partitions
// ---------------------------------------------------------------------------

/// All partitions of `[n]` into nonempty disjoint blocks (optionally exactly
/// `k` of them), generated by restricted growth strings.
pub fn enum_set_partitions(n: usize, k: Option<usize>) -> Result<Vec<SetFamily>> {
    fn go(
        i: usize,
        n: usize,
        k: Option<usize>,
        blocks: &mut Vec<Block>,
        out: &mut Vec<SetFamily>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if i > n {
            if k.map_or(true, |k| k == blocks.len()) {
                out.push(blocks.clone());
            }
            return Ok(());
        }
        if let Some(k) = k {
            // Not enough elements left to open the missing blocks.
            if blocks.len() + (n - i + 1) < k {
                return Ok(());
            }
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, n, k, blocks, out, budget)?;
            blocks[b].pop();
        }
        if k.map_or(true, |k| blocks.len() < k) {
            blocks.push(vec![i]);
            go(i + 1, n, k, blocks, out, budget)?;
            blocks.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    go(1, n, k, &mut Vec::new(), &mut out, &mut budget)?;
    Ok(out)
}

pub fn count_set_partitions(n: usize, k: Option<usize>) -> Result<BigInt> {
    Ok(BigInt::from(enum_set_partitions(n, k)?.len()))
}

// ---------------------------------------------------------------------------
// Generalized partitions (distinct maxima, overlaps allowed)
// ---------------------------------------------------------------------------

/// Walks every family `B_1, …, B_k` of nonempty subsets of `[n]` with
/// `max B_1 < … < max B_k` and union `[n]`.
fn visit_generalized_partitions(
    n: usize,
    k: Option<usize>,
    limit: u64,
    visit: &mut dyn FnMut(&[u64]),
) -> Result<()> {
    fn go(
        n: usize,
        k: Option<usize>,
        last_max: usize,
        union: u64,
        blocks: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if last_max == n {
            if union == full_mask(n) && k.map_or(true, |k| k == blocks.len()) {
                visit(blocks);
            }
            return Ok(());
        }
        for j in last_max + 1..=n {
            if let Some(k) = k {
                // A block with max j leaves n - j larger maxima available.
                if blocks.len() + 1 > k || blocks.len() + 1 + (n - j) < k {
                    continue;
                }
            }
            let top = 1u64 << (j - 1);
            for lower in 0..top {
                let block = top | lower;
                blocks.push(block);
                go(n, k, j, union | block, blocks, visit, budget)?;
                blocks.pop();
            }
        }
        Ok(())
    }
    check_points(n)?;
    let mut budget = Budget::new(limit);
    go(n, k, 0, 0, &mut Vec::new(), visit, &mut budget)
}

/// All generalized partitions of `[n]`, optionally with exactly `k` blocks,
/// blocks listed by increasing maximum.
pub fn enum_generalized_partitions(n: usize, k: Option<usize>) -> Result<Vec<SetFamily>> {
    let mut out = Vec::new();
    visit_generalized_partitions(n, k, DEFAULT_SEARCH_LIMIT, &mut |bs| {
        out.push(family_of(bs))
    })?;
    Ok(out)
}

/// `Σ λ^{Σ#B_i - n} · weight(#B_1, …, #B_k)` over generalized partitions of `[n]`.
pub fn generalized_partition_sum(
    n: usize,
    k: Option<usize>,
    lambda: &Rational,
    weight: impl Fn(&[usize]) -> Rational,
) -> Result<Rational> {
    let mut total = Rational::zero();
    let mut sizes = Vec::new();
    visit_generalized_partitions(n, k, DEFAULT_SEARCH_LIMIT, &mut |bs| {
        sizes.clear();
        sizes.extend(bs.iter().map(|b| b.count_ones() as usize));
        let overlap = sizes.iter().sum::<usize>() - n;
        total += pow(lambda, overlap) * weight(&sizes);
    })?;
    Ok(total)
}

/// Counts generalized partitions of `[n]` with `k` blocks by exhaustive
/// search over the same choice tree as [`enum_generalized_partitions`],
/// sharing identical subtrees keyed by (last maximum, blocks placed, union).
pub fn count_generalized_partitions(n: usize, k: usize) -> Result<BigInt> {
    fn go(
        n: usize,
        k: usize,
        last_max: usize,
        placed: usize,
        union: u64,
        memo: &mut HashMap<(usize, usize, u64), BigInt>,
        budget: &mut Budget,
    ) -> Result<BigInt> {
        if last_max == n {
            let hit = union == full_mask(n) && placed == k;
            return Ok(if hit { BigInt::one() } else { BigInt::zero() });
        }
        if placed == k {
            return Ok(BigInt::zero());
        }
        if let Some(v) = memo.get(&(last_max, placed, union)) {
            return Ok(v.clone());
        }
        budget.tick()?;
        let mut total = BigInt::zero();
        for j in last_max + 1..=n {
            let top = 1u64 << (j - 1);
            for lower in 0..top {
                total += go(n, k, j, placed + 1, union | top | lower, memo, budget)?;
            }
        }
        memo.insert((last_max, placed, union), total.clone());
        Ok(total)
    }
    check_points(n)?;
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    go(n, k, 0, 0, 0, &mut HashMap::new(), &mut budget)
}

// ---------------------------------------------------------------------------
// Covers by fixed-size subsets
// ---------------------------------------------------------------------------

fn visit_covers(
    n: usize,
    k: usize,
    l: usize,
    distinct_max: bool,
    limit: u64,
    visit: &mut dyn FnMut(&[u64]),
) -> Result<()> {
    fn go(
        ctx: (&[u64], u64, usize, usize, bool),
        chosen: &mut Vec<u64>,
        union: u64,
        visit: &mut dyn FnMut(&[u64]),
        budget: &mut Budget,
    ) -> Result<()> {
        let (subsets, n_full, k, l, distinct_max) = ctx;
        budget.tick()?;
        if chosen.len() == k {
            if union == n_full {
                visit(chosen);
            }
            return Ok(());
        }
        let uncovered = (n_full & !union).count_ones() as usize;
        if (k - chosen.len()) * l < uncovered {
            return Ok(());
        }
        for &s in subsets {
            if distinct_max {
                if let Some(&prev) = chosen.last() {
                    if top_bit(s) <= top_bit(prev) {
                        continue;
                    }
                }
            }
            chosen.push(s);
            go(ctx, chosen, union | s, visit, budget)?;
            chosen.pop();
        }
        Ok(())
    }
    check_points(n)?;
    let subsets = subsets_of_size(n, l);
    let mut budget = Budget::new(limit);
    go(
        (&subsets, full_mask(n), k, l, distinct_max),
        &mut Vec::new(),
        0,
        visit,
        &mut budget,
    )
}

fn cover_in_range(n: usize, k: usize, l: usize) -> bool {
    k >= 1 && l >= 1 && l <= n && n <= k * l
}

/// `B(n,k,ℓ)`: ordered `k`-tuples of `ℓ`-subsets of `[n]` whose union is
/// `[n]`; zero outside `ℓ ≤ n ≤ kℓ`.
pub fn cover_count(n: usize, k: usize, l: usize) -> Result<BigInt> {
    cover_count_with_limit(n, k, l, DEFAULT_SEARCH_LIMIT)
}

pub fn cover_count_with_limit(n: usize, k: usize, l: usize, limit: u64) -> Result<BigInt> {
    if !cover_in_range(n, k, l) {
        return Ok(BigInt::zero());
    }
    let mut count = 0u64;
    visit_covers(n, k, l, false, limit, &mut |_| count += 1)?;
    Ok(BigInt::from(count))
}

pub fn enum_covers(n: usize, k: usize, l: usize) -> Result<Vec<SetFamily>> {
    let mut out = Vec::new();
    if cover_in_range(n, k, l) {
        visit_covers(n, k, l, false, DEFAULT_SEARCH_LIMIT, &mut |c| {
            out.push(family_of(c))
        })?;
    }
    Ok(out)
}

/// `B′(n,k,ℓ)`: covers whose subsets have pairwise distinct maxima, each
/// counted once (listed by increasing maximum). Zero outside
/// `k+ℓ-1 ≤ n ≤ kℓ`.
pub fn cover_count_distinct_max(n: usize, k: usize, l: usize) -> Result<BigInt> {
    if !cover_in_range(n, k, l) || n + 1 < k + l {
        return Ok(BigInt::zero());
    }
    let mut count = 0u64;
    visit_covers(n, k, l, true, DEFAULT_SEARCH_LIMIT, &mut |_| count += 1)?;
    Ok(BigInt::from(count))
}

pub fn enum_covers_distinct_max(n: usize, k: usize, l: usize) -> Result<Vec<SetFamily>> {
    let mut out = Vec::new();
    if cover_in_range(n, k, l) && n + 1 >= k + l {
        visit_covers(n, k, l, true, DEFAULT_SEARCH_LIMIT, &mut |c| {
            out.push(family_of(c))
        })?;
    }
    Ok(out)
}

/// `Σ λ^{Σ#T_i - n} Π f_i(#T_i)` over all `k`-tuples of (possibly empty,
/// possibly overlapping) subsets of `[n]` with union `[n]`, where `k =
/// fs.len()`. Values of `f_i` past the end of its slice are zero.
pub fn cover_sum(n: usize, fs: &[Vec<Rational>], lambda: &Rational) -> Result<Rational> {
    fn go(
        n: usize,
        fs: &[Vec<Rational>],
        lambda: &Rational,
        union: u64,
        size_sum: usize,
        weight: Rational,
        budget: &mut Budget,
    ) -> Result<Rational> {
        budget.tick()?;
        let Some((f, rest)) = fs.split_first() else {
            return Ok(if union == full_mask(n) {
                pow(lambda, size_sum - n) * weight
            } else {
                Rational::zero()
            });
        };
        let mut total = Rational::zero();
        for t in 0..=full_mask(n) {
            let size = t.count_ones() as usize;
            let Some(v) = f.get(size).filter(|v| !v.is_zero()) else {
                continue;
            };
            total += go(
                n,
                rest,
                lambda,
                union | t,
                size_sum + size,
                &weight * v,
                budget,
            )?;
        }
        Ok(total)
    }
    check_points(n)?;
    if fs.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    go(n, fs, lambda, 0, 0, Rational::one(), &mut budget)
}

// ---------------------------------------------------------------------------
// Compositions and restricted multiset partitions
// ---------------------------------------------------------------------------

/// Compositions of `total` with every part at most `max_part`, in
/// lexicographic order. `total = 0` yields the empty composition.
pub fn compositions_bounded(total: usize, max_part: usize) -> Result<Vec<Composition>> {
    fn go(
        left: usize,
        max_part: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Composition>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if left == 0 {
            out.push(Composition(parts.clone()));
            return Ok(());
        }
        for p in 1..=max_part.min(left) {
            parts.push(p);
            go(left - p, max_part, parts, out, budget)?;
            parts.pop();
        }
        Ok(())
    }
    if max_part == 0 {
        return Err(Error::bad("max part must be at least 1"));
    }
    let mut out = Vec::new();
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    go(total, max_part, &mut Vec::new(), &mut out, &mut budget)?;
    Ok(out)
}

fn check_type(n: usize, k: usize, ty: &Composition) -> Result<()> {
    if ty.norm() != k * n {
        return Err(Error::bad(format!(
            "type {ty} has norm {}, expected kn = {}",
            ty.norm(),
            k * n
        )));
    }
    if ty.parts().iter().any(|&p| p > n) {
        return Err(Error::bad(format!(
            "type {ty} has a part larger than n = {n}"
        )));
    }
    Ok(())
}

/// `C_I`: ordered block sequences `(B_1, …, B_t)` of subsets of `[n]` with
/// `#B_j = i_j` that use every element of `[n]` exactly `k` times, i.e.
/// restricted partitions of the multiset `{1^k, …, n^k}` of type `I`.
pub fn restricted_type_count(n: usize, k: usize, ty: &Composition) -> Result<BigInt> {
    fn go(parts: &[usize], remaining: &mut [usize], budget: &mut Budget) -> Result<u64> {
        budget.tick()?;
        let Some((&size, rest)) = parts.split_first() else {
            return Ok(1);
        };
        // Each later block takes an element at most once.
        let blocks_left = parts.len();
        if remaining.iter().any(|&r| r > blocks_left) {
            return Ok(0);
        }
        let available: Vec<usize> = (0..remaining.len()).filter(|&e| remaining[e] > 0).collect();
        let mut total = 0;
        for block in available.into_iter().combinations(size) {
            for &e in &block {
                remaining[e] -= 1;
            }
            total += go(rest, remaining, budget)?;
            for &e in &block {
                remaining[e] += 1;
            }
        }
        Ok(total)
    }
    check_type(n, k, ty)?;
    let mut remaining = vec![k; n];
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    Ok(BigInt::from(go(ty.parts(), &mut remaining, &mut budget)?))
}

/// Number of `n`-fold stuffles of type `I`: tuples `(T_1, …, T_n)` of
/// `k`-subsets of `[t]`, `t = ℓ(I)`, where position `j` is hit by exactly
/// `i_j` of the subsets.
pub fn stuffle_type_count(n: usize, k: usize, ty: &Composition) -> Result<BigInt> {
    fn go(maps_left: usize, k: usize, column: &mut [usize], budget: &mut Budget) -> Result<u64> {
        budget.tick()?;
        if maps_left == 0 {
            return Ok(if column.iter().all(|&c| c == 0) { 1 } else { 0 });
        }
        if column.iter().any(|&c| c > maps_left) {
            return Ok(0);
        }
        let open: Vec<usize> = (0..column.len()).filter(|&j| column[j] > 0).collect();
        let mut total = 0;
        for image in open.into_iter().combinations(k) {
            for &j in &image {
                column[j] -= 1;
            }
            total += go(maps_left - 1, k, column, budget)?;
            for &j in &image {
                column[j] += 1;
            }
        }
        Ok(total)
    }
    check_type(n, k, ty)?;
    let mut column = ty.parts().to_vec();
    let mut budget = Budget::new(DEFAULT_SEARCH_LIMIT);
    Ok(BigInt::from(go(n, k, &mut column, &mut budget)?))
}

/// `C(n,k) = Σ_{I ∈ π(kn)} C_I`, ordered restricted partitions of
/// `{1^k, …, n^k}` into subsets of `[n]` of any sizes.
pub fn multiset_partition_total(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::bad("C(n,k) needs n, k >= 1"));
    }
    let mut total = BigInt::zero();
    for ty in compositions_bounded(k * n, n)? {
        total += restricted_type_count(n, k, &ty)?;
    }
    Ok(total)
}
