use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (p_1! ⋯ p_r!)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt> {
    if parts.iter().sum::<usize>() != n {
        return Err(Error::bad(format!(
            "multinomial parts {parts:?} do not sum to {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut used = 0;
    for &p in parts {
        used += p;
        acc *= binomial(used, p);
    }
    Ok(acc)
}

/// Stirling numbers of the second kind, `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

pub fn bell(n: usize) -> BigInt {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Generalized Stirling numbers from
/// `S̄(n,k) = Σ_{i<n} C(n-1,i) 2^i S̄(i,k-1)`, `S̄(0,0) = 1`.
pub fn gen_stirling_rec(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // table[i][j] = S̄(i, j)
    let mut table = vec![vec![BigInt::zero(); k + 1]; n + 1];
    table[0][0] = BigInt::one();
    for i in 1..=n {
        for j in 1..=k.min(i) {
            let mut acc = BigInt::zero();
            for (t, row) in table[..i].iter().enumerate() {
                if !row[j - 1].is_zero() {
                    acc += binomial(i - 1, t) * pow2(t) * &row[j - 1];
                }
            }
            table[i][j] = acc;
        }
    }
    table[n][k].clone()
}

/// `S̄(n,k) = 2^{C(k,2)} Σ_{1 ≤ m_1 < … < m_{n-k} ≤ n-1} Π_i (2^{k-m_i+i} - 1)`
/// for `n >= k >= 1`.
pub fn gen_stirling_explicit(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::bad(format!(
            "explicit formula needs n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let mut sum = BigInt::zero();
    for ms in (1..n).combinations(n - k) {
        let mut prod = BigInt::one();
        for (idx, &m) in ms.iter().enumerate() {
            let i = idx + 1;
            // k - m_i + i >= 1 because m_i <= k + i - 1
            prod *= pow2(k + i - m) - 1;
        }
        sum += prod;
    }
    Ok(pow2(k * (k - 1) / 2) * sum)
}

/// `B̄(n) = Σ_{k=1}^n S̄(n,k)`.
pub fn gen_bell(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::bad("generalized Bell numbers start at n = 1"));
    }
    Ok((1..=n).map(|k| gen_stirling_rec(n, k)).sum())
}
