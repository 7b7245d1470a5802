//! Truncated power series in `q`, the theta/Euler product identities, and
//! their images in the weight-zero Rota-Baxter algebra under `q ↦ 1⊗x`.

use std::fmt;

use num_traits::{One, Zero};

use crate::comb::factorial;
use crate::rational::{from_int, rat};
use crate::rba::{element_mul, geometric_inverse, AlgebraContext, RBAElement, TensorWord};
use crate::{Error, Rational, Result};

/// `Σ_{i ≤ N} a_i q^i`; nothing beyond `q^N` is ever read or produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn new(mut coeffs: Vec<Rational>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, Rational::zero());
        QSeries { coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        QSeries::new(Vec::new(), trunc)
    }

    pub fn one(trunc: usize) -> Self {
        QSeries::new(vec![Rational::one()], trunc)
    }

    /// `c·q^e`, or zero if `e > trunc`.
    pub fn monomial(c: Rational, e: usize, trunc: usize) -> Self {
        let mut s = QSeries::zero(trunc);
        if e <= trunc {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Lowest exponent where the two series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        (0..n)
            .find(|&i| self.coeffs.get(i).unwrap_or(&zero) != other.coeffs.get(i).unwrap_or(&zero))
    }

    fn check_same(&self, other: &QSeries) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncMismatch {
                left: self.trunc(),
                right: other.trunc(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}·q^{i}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

pub fn qs_add(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    a.check_same(b)?;
    Ok(QSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
    })
}

/// Truncated Cauchy product.
pub fn qs_mul(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    a.check_same(b)?;
    let n = a.trunc();
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.coeffs[..=n - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    Ok(QSeries { coeffs: out })
}

/// The polynomial `1 - c·q^e`, `e >= 1`.
pub fn qs_one_minus_term(c: &Rational, e: usize, trunc: usize) -> Result<QSeries> {
    if e == 0 {
        return Err(Error::bad("factor exponent must be at least 1"));
    }
    let mut s = QSeries::one(trunc);
    if e <= trunc {
        s.coeffs[e] = -c;
    }
    Ok(s)
}

/// Multiplicative inverse of a series with constant term 1, by the
/// triangular recurrence `b_n = -Σ_{i=1}^n a_i b_{n-i}`.
pub fn qs_inverse(a: &QSeries) -> Result<QSeries> {
    if !a.coeffs[0].is_one() {
        return Err(Error::bad("series inversion needs constant term 1"));
    }
    let n = a.trunc();
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = Rational::one();
    for m in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..=m {
            if !a.coeffs[i].is_zero() {
                acc += &a.coeffs[i] * &b[m - i];
            }
        }
        b[m] = -acc;
    }
    Ok(QSeries { coeffs: b })
}

fn product_of(factors: impl IntoIterator<Item = QSeries>, trunc: usize) -> QSeries {
    factors.into_iter().fold(QSeries::one(trunc), |acc, f| {
        qs_mul(&acc, &f).expect("factors share the truncation")
    })
}

/// Exponents `1..=trunc` that fit, for a factor family indexed by `n >= 1`.
fn factor_exponents(trunc: usize, exponent: impl Fn(usize) -> usize) -> Vec<usize> {
    (1..).map(exponent).take_while(|&e| e <= trunc).collect()
}

/// One side built as a sum, one as an infinite product, both cut at `q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesIdentity {
    pub sum: QSeries,
    pub product: QSeries,
}

impl SeriesIdentity {
    pub fn first_mismatch(&self) -> Option<usize> {
        self.sum.first_difference(&self.product)
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// `φ(q) = Σ_{n∈ℤ} q^{n²} = (-q;q²)²_∞ (q²;q²)_∞`.
pub fn theta_phi(trunc: usize) -> SeriesIdentity {
    let mut sum = QSeries::one(trunc);
    for n in (1..).take_while(|n| n * n <= trunc) {
        // n and -n
        sum.coeffs[n * n] += rat(2);
    }
    let odd = factor_exponents(trunc, |n| 2 * n - 1);
    let even = factor_exponents(trunc, |n| 2 * n);
    let minus_one = rat(-1);
    let product = product_of(
        odd.iter()
            .flat_map(|&e| {
                let f = qs_one_minus_term(&minus_one, e, trunc).expect("e >= 1");
                [f.clone(), f]
            })
            .chain(
                even.iter()
                    .map(|&e| qs_one_minus_term(&Rational::one(), e, trunc).expect("e >= 1")),
            ),
        trunc,
    );
    SeriesIdentity { sum, product }
}

/// `ψ(q) = Σ_{n≥0} q^{C(n+1,2)} = (q²;q²)_∞ / (q;q²)_∞`.
pub fn theta_psi(trunc: usize) -> SeriesIdentity {
    let mut sum = QSeries::zero(trunc);
    for n in (0..).take_while(|n| n * (n + 1) / 2 <= trunc) {
        sum.coeffs[n * (n + 1) / 2] += Rational::one();
    }
    let one = Rational::one();
    let numerator = product_of(
        factor_exponents(trunc, |n| 2 * n)
            .into_iter()
            .map(|e| qs_one_minus_term(&one, e, trunc).expect("e >= 1")),
        trunc,
    );
    let denominator = product_of(
        factor_exponents(trunc, |n| 2 * n - 1)
            .into_iter()
            .map(|e| qs_one_minus_term(&one, e, trunc).expect("e >= 1")),
        trunc,
    );
    let inverse = qs_inverse(&denominator).expect("constant term is 1");
    let product = qs_mul(&numerator, &inverse).expect("same truncation");
    SeriesIdentity { sum, product }
}

/// `f(-q) = Σ_{n∈ℤ} (-1)^n q^{n(3n-1)/2} = (q;q)_∞`.
pub fn euler_f(trunc: usize) -> SeriesIdentity {
    let mut sum = QSeries::one(trunc);
    for n in (1..).take_while(|n| n * (3 * n - 1) / 2 <= trunc) {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        // n gives n(3n-1)/2, -n gives n(3n+1)/2
        for e in [n * (3 * n - 1) / 2, n * (3 * n + 1) / 2] {
            if e <= trunc {
                sum.coeffs[e] += &sign;
            }
        }
    }
    let one = Rational::one();
    let product = product_of(
        (1..=trunc).map(|e| qs_one_minus_term(&one, e, trunc).expect("e >= 1")),
        trunc,
    );
    SeriesIdentity { sum, product }
}

/// `Σ a_n q^n ↦ Σ a_n·n!·(1⊗x^{⊗n})`, the weight-zero homomorphism sending
/// `q` to `1⊗x`.
pub fn qseries_to_rba(s: &QSeries, ctx: &AlgebraContext) -> Result<RBAElement> {
    if !ctx.is_weight_zero() {
        return Err(Error::NonzeroWeight(ctx.lambda().clone()));
    }
    if ctx.trunc() < s.trunc() {
        return Err(Error::TruncMismatch {
            left: s.trunc(),
            right: ctx.trunc(),
        });
    }
    Ok(RBAElement::from_terms(s.coeffs.iter().enumerate().map(
        |(n, a)| (TensorWord::x_tensor(n), a * from_int(&factorial(n))),
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigurateKind {
    Square,
    Triangular,
    Pentagonal,
}

impl FigurateKind {
    pub fn name(self) -> &'static str {
        match self {
            FigurateKind::Square => "square",
            FigurateKind::Triangular => "triangular",
            FigurateKind::Pentagonal => "pentagonal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FigurateReport {
    pub kind: FigurateKind,
    pub trunc: usize,
    pub lhs: RBAElement,
    pub rhs: RBAElement,
    /// Lowest filtration degree where the two sides differ.
    pub first_mismatch: Option<usize>,
}

impl FigurateReport {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// `c·m!·(1⊗x^{⊗m})`.
fn scaled_x(c: i64, m: usize) -> RBAElement {
    RBAElement::term(TensorWord::x_tensor(m), rat(c) * from_int(&factorial(m)))
}

fn one_plus(c: i64, m: usize) -> RBAElement {
    &RBAElement::unit() + &scaled_x(c, m)
}

fn first_degree_mismatch(a: &RBAElement, b: &RBAElement, trunc: usize) -> Option<usize> {
    let diff = a - b;
    diff.min_degree().filter(|&d| d <= trunc)
}

/// Builds both sides of the factorial square / triangular / pentagonal
/// generating-function identities in the weight-zero algebra truncated at
/// `trunc` and compares them.
pub fn figurate_identity_check(kind: FigurateKind, trunc: usize) -> FigurateReport {
    let ctx = AlgebraContext::new(Rational::zero(), trunc);
    let mul_all = |factors: Vec<RBAElement>| {
        factors
            .iter()
            .fold(RBAElement::unit(), |acc, f| element_mul(&acc, f, &ctx))
    };
    let (lhs, rhs) = match kind {
        FigurateKind::Square => {
            let mut lhs = RBAElement::unit();
            for n in (1..).take_while(|n| n * n <= trunc) {
                lhs = &lhs + &scaled_x(2, n * n);
            }
            let mut factors = Vec::new();
            for m in factor_exponents(trunc, |n| 2 * n - 1) {
                factors.push(one_plus(1, m));
                factors.push(one_plus(1, m));
            }
            for m in factor_exponents(trunc, |n| 2 * n) {
                factors.push(one_plus(-1, m));
            }
            (lhs, mul_all(factors))
        }
        FigurateKind::Triangular => {
            let mut lhs = RBAElement::zero();
            for n in (0..).take_while(|n| n * (n + 1) / 2 <= trunc) {
                lhs = &lhs + &scaled_x(1, n * (n + 1) / 2);
            }
            let mut factors = Vec::new();
            for m in factor_exponents(trunc, |n| 2 * n) {
                factors.push(one_plus(-1, m));
            }
            for m in factor_exponents(trunc, |n| 2 * n - 1) {
                let inv =
                    geometric_inverse(&scaled_x(1, m), &ctx).expect("weight zero, positive degree");
                factors.push(inv);
            }
            (lhs, mul_all(factors))
        }
        FigurateKind::Pentagonal => {
            let mut lhs = RBAElement::unit();
            for n in (1..).take_while(|n| n * (3 * n - 1) / 2 <= trunc) {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                for m in [n * (3 * n - 1) / 2, n * (3 * n + 1) / 2] {
                    if m <= trunc {
                        lhs = &lhs + &scaled_x(sign, m);
                    }
                }
            }
            let factors = (1..=trunc).map(|m| one_plus(-1, m)).collect();
            (lhs, mul_all(factors))
        }
    };
    let lhs = lhs.truncated(trunc);
    let first_mismatch = first_degree_mismatch(&lhs, &rhs, trunc);
    FigurateReport {
        kind,
        trunc,
        lhs,
        rhs,
        first_mismatch,
    }
}
