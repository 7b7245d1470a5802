use super::{AlgebraContext, RBAElement, TensorWord};
use crate::{Error, Result};

/// The Rota-Baxter operator `P(a_0⊗…⊗a_t) = 1⊗a_0⊗…⊗a_t`.
pub fn rb_apply(e: &RBAElement, ctx: &AlgebraContext) -> RBAElement {
    RBAElement::from_terms(
        e.terms()
            .filter(|(w, _)| w.degree() < ctx.trunc())
            .map(|(w, c)| (TensorWord::under_unit(w.exponents()), c.clone())),
    )
}

/// The derivation `d(1_n) = 1_{n-1}`, `d(1) = 0`, on the scalar subalgebra.
pub fn derive(e: &RBAElement) -> Result<RBAElement> {
    if let Some((w, _)) = e.terms().find(|(w, _)| !w.is_scalar()) {
        return Err(Error::NonScalarWord(w.exponents().to_vec()));
    }
    Ok(RBAElement::from_terms(
        e.terms()
            .filter(|(w, _)| w.degree() > 0)
            .map(|(w, c)| (TensorWord::one(w.degree() - 1), c.clone())),
    ))
}
