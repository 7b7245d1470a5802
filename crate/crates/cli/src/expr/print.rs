use std::fmt;

use super::ast::{Expr, ExprKind};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Expr,
    Term,
    Factor,
    Atom,
}

fn level(e: &Expr) -> Level {
    match e.kind {
        ExprKind::Add(..) | ExprKind::Sub(..) => Level::Expr,
        ExprKind::Mul(..) => Level::Term,
        ExprKind::Pow(..) => Level::Factor,
        _ => Level::Atom,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, need: Level) -> fmt::Result {
    if level(e) < need {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical rendering: single spaces around `+`, `-`, `*`, and only the
/// parentheses the grammar requires.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Rational(r) => write!(f, "{r}"),
            ExprKind::One(k) => write!(f, "one({k})"),
            ExprKind::Word(es) => {
                f.write_str("w(")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str(")")
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                let op = if matches!(self.kind, ExprKind::Add(..)) {
                    '+'
                } else {
                    '-'
                };
                write_at(f, a, Level::Expr)?;
                write!(f, " {op} ")?;
                write_at(f, b, Level::Term)
            }
            ExprKind::Mul(a, b) => {
                write_at(f, a, Level::Term)?;
                f.write_str(" * ")?;
                write_at(f, b, Level::Factor)
            }
            ExprKind::Pow(a, n) => {
                write_at(f, a, Level::Atom)?;
                write!(f, "^{n}")
            }
            ExprKind::P(a) => write!(f, "P({a})"),
            ExprKind::D(a) => write!(f, "d({a})"),
            ExprKind::GeomInv(a) => write!(f, "geominv({a})"),
        }
    }
}
