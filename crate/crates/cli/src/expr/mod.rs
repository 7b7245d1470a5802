//! A small expression language over the truncated Rota-Baxter algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' UINT)?
//! atom   := RATIONAL | 'one' '(' UINT ')' | 'w' '(' UINT (',' UINT)* ')'
//!         | 'P' '(' expr ')' | 'd' '(' expr ')' | 'geominv' '(' expr ')'
//!         | '(' expr ')'
//! RATIONAL := INT ('/' UINT)?
//! ```
//!
//! A `-` immediately followed by a digit in atom position starts a negative
//! literal.

mod ast;
mod eval;
mod parse;
mod print;

pub use ast::{Expr, ExprKind, Span};
pub use eval::{eval_expr, EvalError};
pub use parse::{parse_expr, ParseError};
