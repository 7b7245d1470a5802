//! λ-exponential generating functions `E_f = Σ_k f(k)·1_k` on the scalar
//! subalgebra.

use num_traits::{One, Zero};

use crate::comb::factorial;
use crate::rational::{from_int, pow};
use crate::rba::{derive, element_mul, rb_apply, AlgebraContext, RBAElement};
use crate::{Error, Rational, Result};

/// Dense coefficients `f(0), …, f(trunc)` of a λ-EGF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaEGF {
    coeffs: Vec<Rational>,
    ctx: AlgebraContext,
}

impl LambdaEGF {
    /// Pads with zeros or cuts so there are exactly `trunc + 1` coefficients.
    pub fn new(mut coeffs: Vec<Rational>, ctx: &AlgebraContext) -> Self {
        coeffs.resize(ctx.trunc() + 1, Rational::zero());
        LambdaEGF {
            coeffs,
            ctx: ctx.clone(),
        }
    }

    pub fn from_fn(ctx: &AlgebraContext, f: impl Fn(usize) -> Rational) -> Self {
        LambdaEGF {
            coeffs: (0..=ctx.trunc()).map(f).collect(),
            ctx: ctx.clone(),
        }
    }

    /// `E_I = Σ_{n≥0} 1_n`.
    pub fn ones(ctx: &AlgebraContext) -> Self {
        LambdaEGF::from_fn(ctx, |_| Rational::one())
    }

    /// `E_I - 1 = Σ_{n≥1} 1_n`.
    pub fn ones_from_1(ctx: &AlgebraContext) -> Self {
        LambdaEGF::from_fn(ctx, |n| {
            if n == 0 {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
    }

    /// `1_k`.
    pub fn delta(k: usize, ctx: &AlgebraContext) -> Self {
        LambdaEGF::from_fn(ctx, |n| {
            if n == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        LambdaEGF::from_fn(ctx, |_| Rational::zero())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn trunc(&self) -> usize {
        self.ctx.trunc()
    }

    pub fn to_element(&self) -> RBAElement {
        RBAElement::from_scalar_coeffs(&self.coeffs)
    }

    /// Reads back the `1_k` coefficients; words past the cap are ignored.
    pub fn from_element(e: &RBAElement, ctx: &AlgebraContext) -> Result<Self> {
        if let Some((w, _)) = e.terms().find(|(w, _)| !w.is_scalar()) {
            return Err(Error::NonScalarWord(w.exponents().to_vec()));
        }
        Ok(LambdaEGF {
            coeffs: e.scalar_coeffs(ctx.trunc()),
            ctx: ctx.clone(),
        })
    }

    fn check_same(&self, other: &LambdaEGF) -> Result<()> {
        if !self.ctx.compatible(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

/// `h(u) = Σ_{u1+u2+u3=u} λ^{u1} (u; u1,u2,u3) f(u1+u2) g(u1+u3)`.
pub fn egf_product(f: &LambdaEGF, g: &LambdaEGF) -> Result<LambdaEGF> {
    f.check_same(g)?;
    let n = f.trunc();
    let lambda = f.ctx.lambda();
    let fact: Vec<Rational> = (0..=n).map(|i| from_int(&factorial(i))).collect();
    let lambda_pow: Vec<Rational> = (0..=n).map(|i| pow(lambda, i)).collect();
    let mut h = vec![Rational::zero(); n + 1];
    for (u, slot) in h.iter_mut().enumerate() {
        let mut acc = Rational::zero();
        for u1 in 0..=u {
            if lambda_pow[u1].is_zero() {
                continue;
            }
            for u2 in 0..=u - u1 {
                let u3 = u - u1 - u2;
                let (fv, gv) = (&f.coeffs[u1 + u2], &g.coeffs[u1 + u3]);
                if fv.is_zero() || gv.is_zero() {
                    continue;
                }
                let multinomial = &fact[u] / (&fact[u1] * &fact[u2] * &fact[u3]);
                acc += &lambda_pow[u1] * multinomial * fv * gv;
            }
        }
        *slot = acc;
    }
    Ok(LambdaEGF {
        coeffs: h,
        ctx: f.ctx.clone(),
    })
}

/// `E_{f_1} ⋯ E_{f_k}`, folded from the left.
pub fn egf_kfold(fs: &[LambdaEGF]) -> Result<LambdaEGF> {
    let (first, rest) = fs.split_first().ok_or(Error::EmptyList)?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| egf_product(&acc, f))
}

/// `[E_{f^[0]}, …, E_{f^[kmax]}]` with `E_{f^[0]} = 1` and
/// `E_{f^[n]} = P(E_{f^[n-1]} ⋄ d(E_f))`.
pub fn divided_powers(f: &LambdaEGF, kmax: usize) -> Result<Vec<LambdaEGF>> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let ctx = &f.ctx;
    let df = derive(&f.to_element())?;
    let mut current = RBAElement::unit();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(LambdaEGF::from_element(&current, ctx)?);
    for _ in 0..kmax {
        current = rb_apply(&element_mul(&current, &df, ctx), ctx);
        out.push(LambdaEGF::from_element(&current, ctx)?);
    }
    Ok(out)
}

pub fn divided_power(f: &LambdaEGF, k: usize) -> Result<LambdaEGF> {
    Ok(divided_powers(f, k)?.pop().expect("at least one power"))
}

/// `E_g(E_f) = Σ_k g(k)·E_{f^[k]}`.
///
/// `E_{f^[k]}` starts in degree `k`, so stopping at `k = trunc` is exact.
pub fn compose(g: &LambdaEGF, f: &LambdaEGF) -> Result<LambdaEGF> {
    g.check_same(f)?;
    let powers = divided_powers(f, f.trunc())?;
    let mut coeffs = vec![Rational::zero(); f.trunc() + 1];
    for (gk, power) in g.coeffs.iter().zip(&powers) {
        if gk.is_zero() {
            continue;
        }
        for (slot, c) in coeffs.iter_mut().zip(power.coeffs()) {
            *slot += gk * c;
        }
    }
    Ok(LambdaEGF {
        coeffs,
        ctx: f.ctx.clone(),
    })
}
