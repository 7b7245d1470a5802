use std::fmt;

use rbgf_core::rba::{derive, element_mul, element_pow, geometric_inverse, rb_apply};
use rbgf_core::{AlgebraContext, Error, RBAElement, TensorWord};

use super::ast::{Expr, ExprKind, Span};

/// A library error raised while evaluating the node at `span`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub span: Span,
    pub error: Error,
}

impl EvalError {
    /// The message prefixed with the 1-based position in `src`.
    pub fn render(&self, src: &str) -> String {
        let (line, col) = self.span.line_col(src);
        let snippet = src.get(self.span.start..self.span.end).unwrap_or("");
        format!(
            "evaluation error at line {line}, column {col} in `{snippet}`: {}",
            self.error
        )
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "evaluation error at bytes {}..{}: {}",
            self.span.start, self.span.end, self.error
        )
    }
}

impl std::error::Error for EvalError {}

pub fn eval_expr(e: &Expr, ctx: &AlgebraContext) -> Result<RBAElement, EvalError> {
    let at = |error| EvalError {
        span: e.span,
        error,
    };
    let trunc = ctx.trunc();
    Ok(match &e.kind {
        ExprKind::Rational(r) => RBAElement::scalar(r.clone()),
        ExprKind::One(k) => RBAElement::one(*k).truncated(trunc),
        ExprKind::Word(es) => {
            let w = TensorWord::new(es.clone()).map_err(at)?;
            RBAElement::from_word(w).truncated(trunc)
        }
        ExprKind::Add(a, b) => &eval_expr(a, ctx)? + &eval_expr(b, ctx)?,
        ExprKind::Sub(a, b) => &eval_expr(a, ctx)? - &eval_expr(b, ctx)?,
        ExprKind::Mul(a, b) => element_mul(&eval_expr(a, ctx)?, &eval_expr(b, ctx)?, ctx),
        ExprKind::Pow(a, n) => element_pow(&eval_expr(a, ctx)?, *n as usize, ctx),
        ExprKind::P(a) => rb_apply(&eval_expr(a, ctx)?, ctx),
        ExprKind::D(a) => derive(&eval_expr(a, ctx)?).map_err(at)?,
        ExprKind::GeomInv(a) => geometric_inverse(&eval_expr(a, ctx)?, ctx).map_err(at)?,
    })
}
