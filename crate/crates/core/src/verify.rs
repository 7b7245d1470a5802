//! Self-checks of the library's identities, one per named target. Each check
//! computes both sides exactly and reports the lowest filtration degree (or
//! exponent, or size parameter) at which they first disagree.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::comb::{
    compositions_bounded, cover_count, cover_sum, generalized_partition_sum,
    multiset_partition_total, restricted_type_count,
};
use crate::egf::{compose, egf_kfold, LambdaEGF};
use crate::qseries::{euler_f, figurate_identity_check, theta_phi, theta_psi, FigurateKind};
use crate::rational::{frac, from_int, pow, rat};
use crate::rba::{
    element_mul, element_pow, rb_apply, word_product_recursive, word_product_stuffle,
};
use crate::{AlgebraContext, Error, RBAElement, Rational, Result, TensorWord};

const SEED: u64 = 0x005e_ed2b;

/// Size caps keeping every target interactive regardless of `--trunc`.
pub const BACKEND_MAX_TOTAL_LEN: usize = 6;
pub const THM_NK_MAX: usize = 8;
pub const FORMULA_MAX_N: usize = 6;
pub const RB_AXIOM_PAIRS: usize = 64;
pub const RB_AXIOM_MAX_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    RbAxiom,
    BackendEquiv,
    QseriesPhi,
    QseriesPsi,
    QseriesF,
    FigurateSquare,
    FigurateTriangular,
    FiguratePentagonal,
    ThmNk,
    ProductFormula,
    CompositionFormula,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::RbAxiom,
        Identity::BackendEquiv,
        Identity::QseriesPhi,
        Identity::QseriesPsi,
        Identity::QseriesF,
        Identity::FigurateSquare,
        Identity::FigurateTriangular,
        Identity::FiguratePentagonal,
        Identity::ThmNk,
        Identity::ProductFormula,
        Identity::CompositionFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RbAxiom => "rb-axiom",
            Identity::BackendEquiv => "backend-equiv",
            Identity::QseriesPhi => "qseries-phi",
            Identity::QseriesPsi => "qseries-psi",
            Identity::QseriesF => "qseries-f",
            Identity::FigurateSquare => "figurate-square",
            Identity::FigurateTriangular => "figurate-triangular",
            Identity::FiguratePentagonal => "figurate-pentagonal",
            Identity::ThmNk => "thm-nk",
            Identity::ProductFormula => "product-formula",
            Identity::CompositionFormula => "composition-formula",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::bad(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub trunc: usize,
    pub equal: bool,
    pub first_mismatch: Option<usize>,
}

impl VerifyReport {
    fn new(identity: Identity, trunc: usize, first_mismatch: Option<usize>) -> Self {
        VerifyReport {
            identity: identity.name().to_string(),
            trunc,
            equal: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

pub fn run(identity: Identity, trunc: usize) -> Result<VerifyReport> {
    let mismatch = match identity {
        Identity::RbAxiom => rb_axiom(&standard_lambdas(), trunc, RB_AXIOM_PAIRS, SEED),
        Identity::BackendEquiv => backend_equiv(
            &standard_lambdas(),
            (trunc + 2).min(BACKEND_MAX_TOTAL_LEN),
            3,
        ),
        Identity::QseriesPhi => theta_phi(trunc).first_mismatch(),
        Identity::QseriesPsi => theta_psi(trunc).first_mismatch(),
        Identity::QseriesF => euler_f(trunc).first_mismatch(),
        Identity::FigurateSquare => {
            figurate_identity_check(FigurateKind::Square, trunc).first_mismatch
        }
        Identity::FigurateTriangular => {
            figurate_identity_check(FigurateKind::Triangular, trunc).first_mismatch
        }
        Identity::FiguratePentagonal => {
            figurate_identity_check(FigurateKind::Pentagonal, trunc).first_mismatch
        }
        Identity::ThmNk => thm_nk(trunc.min(THM_NK_MAX), &small_lambdas())?,
        Identity::ProductFormula => {
            product_formula(trunc.min(FORMULA_MAX_N), 3, &small_lambdas(), SEED)?
        }
        Identity::CompositionFormula => {
            composition_formula(trunc.min(FORMULA_MAX_N), &small_lambdas(), SEED)?
        }
    };
    Ok(VerifyReport::new(identity, trunc, mismatch))
}

/// `{0, 1, 2, 5/3}`.
pub fn standard_lambdas() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(2), frac(5, 3)]
}

fn small_lambdas() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(2)]
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

/// A random element with up to four terms, word degrees at most
/// `max_degree` and exponents at most 2.
pub fn random_element(rng: &mut ChaCha8Rng, max_degree: usize) -> RBAElement {
    let terms = rng.gen_range(1..=4);
    RBAElement::from_terms((0..terms).map(|_| {
        let len = rng.gen_range(1..=max_degree + 1);
        let word = (0..len).map(|_| rng.gen_range(0..=2)).collect();
        (
            TensorWord::new(word).expect("len >= 1"),
            small_rational(rng),
        )
    }))
}

fn first_difference(a: &RBAElement, b: &RBAElement) -> Option<usize> {
    (a - b).min_degree()
}

/// `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)` for `pairs` random pairs per
/// weight. Operand degrees are chosen so that no term of either side is
/// lost to truncation at `trunc`.
pub fn rb_axiom(lambdas: &[Rational], trunc: usize, pairs: usize, seed: u64) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = (trunc.saturating_sub(2) / 2).min(RB_AXIOM_MAX_DEGREE);
    let mut worst: Option<usize> = None;
    for lambda in lambdas {
        let ctx = AlgebraContext::new(lambda.clone(), trunc);
        for _ in 0..pairs {
            let x = random_element(&mut rng, half);
            let y = random_element(&mut rng, half);
            if let Some(d) = rb_axiom_pair(&x, &y, &ctx) {
                worst = Some(worst.map_or(d, |w| w.min(d)));
            }
        }
    }
    worst
}

/// Lowest degree where the axiom fails for one pair, if it does.
pub fn rb_axiom_pair(x: &RBAElement, y: &RBAElement, ctx: &AlgebraContext) -> Option<usize> {
    let px = rb_apply(x, ctx);
    let py = rb_apply(y, ctx);
    let lhs = element_mul(&px, &py, ctx);
    let rhs = &(&rb_apply(&element_mul(x, &py, ctx), ctx)
        + &rb_apply(&element_mul(&px, y, ctx), ctx))
        + &rb_apply(&element_mul(x, y, ctx), ctx).scale(ctx.lambda());
    first_difference(&lhs, &rhs)
}

/// Every word of length `len` with exponents in `0..=max_exp`.
pub fn all_words(len: usize, max_exp: u32) -> Vec<TensorWord> {
    if len == 0 {
        return Vec::new();
    }
    (0..len)
        .map(|_| 0..=max_exp)
        .multi_cartesian_product()
        .map(|v| TensorWord::new(v).expect("len >= 1"))
        .collect()
}

/// Recursive and stuffle word products agree on all pairs of words whose
/// lengths sum to at most `max_total_len`. Reports the smallest total degree
/// of a disagreeing pair.
pub fn backend_equiv(lambdas: &[Rational], max_total_len: usize, max_exp: u32) -> Option<usize> {
    let words: Vec<Vec<TensorWord>> = (0..max_total_len).map(|l| all_words(l, max_exp)).collect();
    for total in 2..=max_total_len {
        for la in 1..total {
            let lb = total - la;
            if lb < la {
                continue;
            }
            for lambda in lambdas {
                let ctx = AlgebraContext::new(lambda.clone(), total - 2);
                for a in &words[la] {
                    for b in &words[lb] {
                        if word_product_recursive(a, b, &ctx) != word_product_stuffle(a, b, &ctx) {
                            return Some(total - 2);
                        }
                    }
                }
            }
        }
    }
    None
}

/// `(1⊗x^{⊗k})^n = Σ_{I∈π(kn)} C_I λ^{kn-ℓ(I)} (1⊗x^{⊗I})` and
/// `Σ_t B(t,n,k) = C(n,k)` for all `n, k >= 1` with `kn <= max_kn`.
/// Reports the smallest failing `kn`.
pub fn thm_nk(max_kn: usize, lambdas: &[Rational]) -> Result<Option<usize>> {
    for kn in 1..=max_kn {
        for k in (1..=kn).filter(|k| kn % k == 0) {
            let n = kn / k;
            if !thm_nk_case(n, k, lambdas)? {
                return Ok(Some(kn));
            }
        }
    }
    Ok(None)
}

/// Checks one `(n, k)` instance of [`thm_nk`].
pub fn thm_nk_case(n: usize, k: usize, lambdas: &[Rational]) -> Result<bool> {
    let kn = k * n;
    let types = compositions_bounded(kn, n)?;
    let counts = types
        .iter()
        .map(|ty| restricted_type_count(n, k, ty))
        .collect::<Result<Vec<_>>>()?;
    for lambda in lambdas {
        let ctx = AlgebraContext::new(lambda.clone(), kn);
        let lhs = element_pow(&RBAElement::from_word(TensorWord::x_tensor(k)), n, &ctx);
        let rhs = RBAElement::from_terms(types.iter().zip(&counts).map(|(ty, c)| {
            let parts: Vec<u32> = ty.parts().iter().map(|&p| p as u32).collect();
            (
                TensorWord::under_unit(&parts),
                from_int(c) * pow(lambda, kn - ty.length()),
            )
        }));
        if lhs != rhs {
            return Ok(false);
        }
    }
    let mut covers = num_bigint::BigInt::zero();
    for t in 0..=kn {
        covers += cover_count(t, n, k)?;
    }
    Ok(covers == multiset_partition_total(n, k)?)
}

fn random_sequence(rng: &mut ChaCha8Rng, len: usize, vanish_at_zero: bool) -> Vec<Rational> {
    (0..len)
        .map(|i| {
            if i == 0 && vanish_at_zero {
                Rational::zero()
            } else {
                small_rational(rng)
            }
        })
        .collect()
}

/// The k-fold product of λ-EGFs against the brute-force cover sum, for
/// `1 <= k <= max_k` random sequences and every `n <= max_n`. Reports the
/// smallest failing `n`.
pub fn product_formula(
    max_n: usize,
    max_k: usize,
    lambdas: &[Rational],
    seed: u64,
) -> Result<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: Option<usize> = None;
    for lambda in lambdas {
        let ctx = AlgebraContext::new(lambda.clone(), max_n);
        for k in 1..=max_k {
            let fs: Vec<Vec<Rational>> = (0..k)
                .map(|_| random_sequence(&mut rng, max_n + 1, false))
                .collect();
            let egfs: Vec<LambdaEGF> = fs.iter().map(|f| LambdaEGF::new(f.clone(), &ctx)).collect();
            let h = egf_kfold(&egfs)?;
            for n in 0..=max_n {
                if *h.coeff(n) != cover_sum(n, &fs, lambda)? {
                    worst = Some(worst.map_or(n, |w| w.min(n)));
                    break;
                }
            }
        }
    }
    Ok(worst)
}

/// `E_g(E_f)` against the generalized-partition sum
/// `Σ g(k) λ^{Σ#B_i - n} Π f(#B_i)` for random `g` and `f` with `f(0) = 0`.
pub fn composition_formula(max_n: usize, lambdas: &[Rational], seed: u64) -> Result<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for lambda in lambdas {
        let ctx = AlgebraContext::new(lambda.clone(), max_n);
        let g = random_sequence(&mut rng, max_n + 1, false);
        let f = random_sequence(&mut rng, max_n + 1, true);
        let h = compose(
            &LambdaEGF::new(g.clone(), &ctx),
            &LambdaEGF::new(f.clone(), &ctx),
        )?;
        if h.coeff(0) != &g[0] {
            return Ok(Some(0));
        }
        for n in 1..=max_n {
            let expected = generalized_partition_sum(n, None, lambda, |sizes| {
                sizes
                    .iter()
                    .fold(g[sizes.len()].clone(), |acc, &s| acc * &f[s])
            })?;
            if *h.coeff(n) != expected {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}
