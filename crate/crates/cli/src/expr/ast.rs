use rbgf_core::Rational;

/// Byte range `[start, end)` into the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    /// 1-based line and column of `start` in `src`.
    pub fn line_col(&self, src: &str) -> (usize, usize) {
        line_col(src, self.start)
    }
}

pub(crate) fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before
        .rfind('\n')
        .map_or(before.len(), |i| before.len() - i - 1)
        + 1;
    (line, col)
}

#[derive(Clone, Debug)]
pub enum ExprKind {
    Rational(Rational),
    One(usize),
    Word(Vec<u32>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    P(Box<Expr>),
    D(Box<Expr>),
    GeomInv(Box<Expr>),
}

#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    /// Builds a node with an empty span, for constructing trees in code.
    pub fn bare(kind: ExprKind) -> Self {
        Expr::new(kind, Span::default())
    }
}

/// Structural equality; spans are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Rational(a), Rational(b)) => a == b,
            (One(a), One(b)) => a == b,
            (Word(a), Word(b)) => a == b,
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) => {
                a == c && b == d
            }
            (Pow(a, m), Pow(b, n)) => m == n && a == b,
            (P(a), P(b)) | (D(a), D(b)) | (GeomInv(a), GeomInv(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Expr {}
