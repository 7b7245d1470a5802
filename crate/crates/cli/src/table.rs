use num_bigint::BigInt;
use rbgf_core::comb::{
    bell, compositions_bounded, cover_count, cover_count_distinct_max, gen_bell, gen_stirling_rec,
    multiset_partition_total, restricted_type_count, stirling2,
};
use rbgf_core::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Arg(usize),
    Parts(Vec<usize>),
    Value(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

/// `n, k, S(n,k)` style table over `1 <= k <= n <= nmax`.
pub fn triangle(
    name: &str,
    nmax: usize,
    f: impl Fn(usize, usize) -> Result<BigInt>,
) -> Result<Table> {
    let mut t = Table::new(&["n", "k", name]);
    for n in 1..=nmax {
        for k in 1..=n {
            t.rows
                .push(vec![Cell::Arg(n), Cell::Arg(k), Cell::Value(f(n, k)?)]);
        }
    }
    Ok(t)
}

pub fn stirling(nmax: usize) -> Result<Table> {
    triangle("stirling", nmax, |n, k| Ok(stirling2(n, k)))
}

pub fn gen_stirling(nmax: usize) -> Result<Table> {
    triangle("gen-stirling", nmax, |n, k| Ok(gen_stirling_rec(n, k)))
}

pub fn bell_numbers(nmax: usize) -> Result<Table> {
    let mut t = Table::new(&["n", "bell"]);
    for n in 0..=nmax {
        t.rows.push(vec![Cell::Arg(n), Cell::Value(bell(n))]);
    }
    Ok(t)
}

pub fn gen_bell_numbers(nmax: usize) -> Result<Table> {
    let mut t = Table::new(&["n", "gen-bell"]);
    for n in 1..=nmax {
        t.rows.push(vec![Cell::Arg(n), Cell::Value(gen_bell(n)?)]);
    }
    Ok(t)
}

/// Rows `(n, k, l)` in lexicographic order with `1 <= k <= kmax`,
/// `1 <= l <= lmax` and `n` in the range where the count can be nonzero.
pub fn covers(distinct_max: bool, kmax: usize, lmax: usize) -> Result<Table> {
    let name = if distinct_max {
        "cover-distinct-max"
    } else {
        "cover"
    };
    let mut t = Table::new(&["n", "k", "l", name]);
    for n in 1..=kmax * lmax {
        for k in 1..=kmax {
            for l in 1..=lmax {
                let lo = if distinct_max { k + l - 1 } else { l };
                if n < lo || n > k * l {
                    continue;
                }
                let v = if distinct_max {
                    cover_count_distinct_max(n, k, l)?
                } else {
                    cover_count(n, k, l)?
                };
                t.rows.push(vec![
                    Cell::Arg(n),
                    Cell::Arg(k),
                    Cell::Arg(l),
                    Cell::Value(v),
                ]);
            }
        }
    }
    Ok(t)
}

/// `C_I` for every composition `I` of `kn` with parts at most `n`.
pub fn c_of_type(n: usize, k: usize) -> Result<Table> {
    let mut t = Table::new(&["n", "k", "type", "c-of-type"]);
    for ty in compositions_bounded(k * n, n)? {
        let c = restricted_type_count(n, k, &ty)?;
        t.rows.push(vec![
            Cell::Arg(n),
            Cell::Arg(k),
            Cell::Parts(ty.parts().to_vec()),
            Cell::Value(c),
        ]);
    }
    Ok(t)
}

pub fn c_total(nmax: usize, kmax: usize) -> Result<Table> {
    let mut t = Table::new(&["n", "k", "c-total"]);
    for n in 1..=nmax {
        for k in 1..=kmax {
            t.rows.push(vec![
                Cell::Arg(n),
                Cell::Arg(k),
                Cell::Value(multiset_partition_total(n, k)?),
            ]);
        }
    }
    Ok(t)
}
