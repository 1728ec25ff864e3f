use std::fmt;

pub use crate::lexer::Span;

/// An AST node paired with its source span. Equality ignores the span so
/// that pretty-print/re-parse round trips compare structurally.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T> Spanned<T> {
    pub fn new(node: T, span: Span) -> Self {
        Spanned { node, span }
    }
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

pub type SpExpr = Spanned<Expr>;

/// Set expressions over the current ground ring: `+` is symmetric
/// difference, `*` intersection, postfix `'` complement; `0` and `1` denote
/// the empty set and the whole ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    SetLit(Vec<String>),
    Zero,
    One,
    Add(Box<SpExpr>, Box<SpExpr>),
    Mul(Box<SpExpr>, Box<SpExpr>),
    Complement(Box<SpExpr>),
}

/// An ideal argument: a bound name or an inline `ideal(e1, ..., en)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealArg {
    Named(Spanned<String>),
    Inline(Vec<SpExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Decompose(IdealArg),
    Radical(IdealArg),
    Member(SpExpr, IdealArg),
    Spectrum,
    Quotient(SpExpr),
    Atoms,
    Stone(Spanned<u64>),
    IntDemo(Spanned<u64>),
    FincofWitness(Vec<Spanned<u64>>),
    VerifyAll,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ground(Vec<Spanned<String>>),
    LetElem(Spanned<String>, SpExpr),
    LetIdeal(Spanned<String>, Vec<SpExpr>),
    Command(Command),
}

pub type SpStmt = Spanned<Stmt>;

// precedence levels for printing: `+` = 1, `*` = 2, `'` = 3, atoms = 4
impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Complement(..) => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let needs_parens = self.prec() < min;
        if needs_parens {
            write!(f, "(")?;
        }
        match self {
            Expr::Name(name) => write!(f, "{name}")?,
            Expr::SetLit(labels) => write!(f, "{{{}}}", labels.join(", "))?,
            Expr::Zero => write!(f, "0")?,
            Expr::One => write!(f, "1")?,
            Expr::Add(l, r) => {
                l.node.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                r.node.fmt_prec(f, 2)?;
            }
            Expr::Mul(l, r) => {
                l.node.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                r.node.fmt_prec(f, 3)?;
            }
            Expr::Complement(e) => {
                e.node.fmt_prec(f, 4)?;
                write!(f, "'")?;
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Display for IdealArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealArg::Named(name) => write!(f, "{}", name.node),
            IdealArg::Inline(exprs) => {
                let parts: Vec<String> = exprs.iter().map(|e| e.node.to_string()).collect();
                write!(f, "ideal({})", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Decompose(arg) => write!(f, "decompose {arg}"),
            Command::Radical(arg) => write!(f, "radical {arg}"),
            Command::Member(e, arg) => write!(f, "member {} {arg}", e.node),
            Command::Spectrum => write!(f, "spectrum"),
            Command::Quotient(e) => write!(f, "quotient {}", e.node),
            Command::Atoms => write!(f, "atoms"),
            Command::Stone(n) => write!(f, "stone {}", n.node),
            Command::IntDemo(m) => write!(f, "intdemo {}", m.node),
            Command::FincofWitness(points) => {
                write!(f, "fincof witness")?;
                for p in points {
                    write!(f, " {}", p.node)?;
                }
                Ok(())
            }
            Command::VerifyAll => write!(f, "verify all"),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ground(labels) => {
                write!(f, "ground")?;
                for label in labels {
                    write!(f, " {}", label.node)?;
                }
                Ok(())
            }
            Stmt::LetElem(name, expr) => write!(f, "let {} = {}", name.node, expr.node),
            Stmt::LetIdeal(name, exprs) => {
                let parts: Vec<String> = exprs.iter().map(|e| e.node.to_string()).collect();
                write!(f, "ideal {} = ({})", name.node, parts.join(", "))
            }
            Stmt::Command(command) => write!(f, "{command}"),
        }
    }
}

/// Pretty-prints a statement sequence, one statement per line.
pub fn print_program(stmts: &[SpStmt]) -> String {
    stmts
        .iter()
        .map(|s| s.node.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}
