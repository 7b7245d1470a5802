use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::{AlgebraContext, ProductBackend, RBAElement, TensorWord};
use crate::comb::binomial;
use crate::rational::{from_int, pow};
use crate::{Error, Rational, Result};

type Terms = BTreeMap<Vec<u32>, Rational>;

fn add_to(terms: &mut Terms, w: Vec<u32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(w).or_insert_with(Rational::zero);
    *slot += c;
}

fn into_element(terms: Terms) -> RBAElement {
    RBAElement::from_terms(
        terms
            .into_iter()
            .map(|(w, c)| (TensorWord::from_vec_unchecked(w), c)),
    )
}

fn with_lead(lead: u32, rest: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(rest.len() + 1);
    v.push(lead);
    v.extend_from_slice(rest);
    v
}

/// Memoized evaluation of the recursive augmented mixable shuffle
///
/// ```text
/// (a0⊗ā)(b0⊗b̄) = a0b0 ⊗ ( ā·(1⊗b̄) + (1⊗ā)·b̄ + λ ā·b̄ )
/// ```
///
/// with `a0·(b0⊗b̄) = a0b0⊗b̄` when one side is a single factor. Results are
/// cut at a degree cap on the way down: prefixing the lead factor raises the
/// degree by one, so the inner products only need degree `cap - 1`.
struct MixableShuffle<'a> {
    lambda: &'a Rational,
    memo: HashMap<(Vec<u32>, Vec<u32>, usize), Rc<Terms>>,
}

impl<'a> MixableShuffle<'a> {
    fn new(lambda: &'a Rational) -> Self {
        MixableShuffle {
            lambda,
            memo: HashMap::new(),
        }
    }

    fn product(&mut self, a: &[u32], b: &[u32], cap: usize) -> Rc<Terms> {
        let key = (a.to_vec(), b.to_vec(), cap);
        if let Some(hit) = self.memo.get(&key) {
            return Rc::clone(hit);
        }
        let out = Rc::new(self.compute(a, b, cap));
        self.memo.insert(key, Rc::clone(&out));
        out
    }

    fn compute(&mut self, a: &[u32], b: &[u32], cap: usize) -> Terms {
        let mut out = Terms::new();
        let (da, db) = (a.len() - 1, b.len() - 1);
        // Every word of the product has degree at least max(da, db).
        if da.max(db) > cap {
            return out;
        }
        let lead = a[0] + b[0];
        if da == 0 {
            out.insert(with_lead(lead, &b[1..]), Rational::one());
            return out;
        }
        if db == 0 {
            out.insert(with_lead(lead, &a[1..]), Rational::one());
            return out;
        }
        let (at, bt) = (&a[1..], &b[1..]);
        let one_at = with_lead(0, at);
        let one_bt = with_lead(0, bt);
        let inner = cap - 1;

        let left = self.product(at, &one_bt, inner);
        for (w, c) in left.iter() {
            add_to(&mut out, with_lead(lead, w), c.clone());
        }
        let right = self.product(&one_at, bt, inner);
        for (w, c) in right.iter() {
            add_to(&mut out, with_lead(lead, w), c.clone());
        }
        if !self.lambda.is_zero() {
            let merged = self.product(at, bt, inner);
            for (w, c) in merged.iter() {
                add_to(&mut out, with_lead(lead, w), c * self.lambda);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Enumerates `J_{m,n,r}`: pairs of order preserving injections of the two
/// tails into `[m+n-r]` whose images cover it. Overlapping positions add
/// exponents and carry one factor of λ.
fn stuffle_terms(a: &[u32], b: &[u32], lambda: &Rational, trunc: usize) -> Terms {
    let mut out = Terms::new();
    let lead = a[0] + b[0];
    let (u, v) = (&a[1..], &b[1..]);
    let (m, n) = (u.len(), v.len());
    for r in 0..=m.min(n) {
        let len = m + n - r;
        if len > trunc {
            continue;
        }
        let weight = pow(lambda, r);
        if weight.is_zero() {
            continue;
        }
        for phi in (0..len).combinations(m) {
            for psi in (0..len).combinations(n) {
                let mut covered = vec![false; len];
                let mut word = vec![0u32; len + 1];
                word[0] = lead;
                for (j, &p) in phi.iter().enumerate() {
                    word[p + 1] += u[j];
                    covered[p] = true;
                }
                for (j, &p) in psi.iter().enumerate() {
                    word[p + 1] += v[j];
                    covered[p] = true;
                }
                if covered.iter().all(|&c| c) {
                    add_to(&mut out, word, weight.clone());
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn word_product_recursive(a: &TensorWord, b: &TensorWord, ctx: &AlgebraContext) -> RBAElement {
    let mut engine = MixableShuffle::new(ctx.lambda());
    let terms = engine.product(a.exponents(), b.exponents(), ctx.trunc());
    into_element(Rc::unwrap_or_clone(terms))
}

pub fn word_product_stuffle(a: &TensorWord, b: &TensorWord, ctx: &AlgebraContext) -> RBAElement {
    into_element(stuffle_terms(
        a.exponents(),
        b.exponents(),
        ctx.lambda(),
        ctx.trunc(),
    ))
}

/// Word product through the context's configured backend.
pub fn word_product(a: &TensorWord, b: &TensorWord, ctx: &AlgebraContext) -> RBAElement {
    match ctx.backend() {
        ProductBackend::Recursive => word_product_recursive(a, b, ctx),
        ProductBackend::Stuffle => word_product_stuffle(a, b, ctx),
    }
}

/// Bilinear extension of the word product, truncated at `ctx.trunc()`.
pub fn element_mul(e1: &RBAElement, e2: &RBAElement, ctx: &AlgebraContext) -> RBAElement {
    let mut acc = Terms::new();
    let mut engine = MixableShuffle::new(ctx.lambda());
    for (w1, c1) in e1.terms() {
        for (w2, c2) in e2.terms() {
            if w1.degree().max(w2.degree()) > ctx.trunc() {
                continue;
            }
            let c = c1 * c2;
            let terms = match ctx.backend() {
                ProductBackend::Recursive => {
                    engine.product(w1.exponents(), w2.exponents(), ctx.trunc())
                }
                ProductBackend::Stuffle => Rc::new(stuffle_terms(
                    w1.exponents(),
                    w2.exponents(),
                    ctx.lambda(),
                    ctx.trunc(),
                )),
            };
            for (w, t) in terms.iter() {
                add_to(&mut acc, w.clone(), t * &c);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    into_element(acc)
}

/// `1_m ⋄ 1_n = Σ_{k ≤ min(m,n)} λ^k C(m+n-k, m) C(m, k) 1_{m+n-k}`.
pub fn one_mul_closed(m: usize, n: usize, ctx: &AlgebraContext) -> RBAElement {
    let mut out = RBAElement::zero();
    for k in 0..=m.min(n) {
        let deg = m + n - k;
        if deg > ctx.trunc() {
            continue;
        }
        let c = pow(ctx.lambda(), k) * from_int(&(binomial(deg, m) * binomial(m, k)));
        out.add_term(TensorWord::one(deg), c);
    }
    out
}

pub fn element_pow(e: &RBAElement, n: usize, ctx: &AlgebraContext) -> RBAElement {
    let mut acc = RBAElement::unit();
    for _ in 0..n {
        acc = element_mul(&acc, e, ctx);
    }
    acc
}

/// `[e^0, e^1, …, e^max_power]`.
pub fn power_list(e: &RBAElement, max_power: usize, ctx: &AlgebraContext) -> Vec<RBAElement> {
    let mut out = Vec::with_capacity(max_power + 1);
    let mut acc = RBAElement::unit();
    out.push(acc.clone());
    for _ in 0..max_power {
        acc = element_mul(&acc, e, ctx);
        out.push(acc.clone());
    }
    out
}

/// `1/(1-e) = Σ_k e^k` at weight zero.
///
/// `e^k` lies in filtration degree `>= k`, so the sum is exact once `k`
/// passes the truncation.
pub fn geometric_inverse(e: &RBAElement, ctx: &AlgebraContext) -> Result<RBAElement> {
    if !ctx.is_weight_zero() {
        return Err(Error::NonzeroWeight(ctx.lambda().clone()));
    }
    if e.min_degree() == Some(0) {
        return Err(Error::NonPositiveDegree);
    }
    let mut sum = RBAElement::unit();
    let mut power = RBAElement::unit();
    for _ in 0..ctx.trunc() {
        power = element_mul(&power, e, ctx);
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    Ok(sum)
}
