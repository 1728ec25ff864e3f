//! Recursive-descent parser for the statement language.
//!
//! ```text
//! stmt   := "ground" label* | "let" name "=" expr
//!         | "ideal" name "=" "(" [expr {"," expr}] ")" | verb args
//! expr   := term {"+" term}
//! term   := factor {"*" factor}
//! factor := atom ["'"]
//! atom   := name | setlit | "0" | "1" | "(" expr ")"
//! setlit := "{" [label {"," label}] "}"
//! ```
//!
//! `*` binds tighter than `+`, `'` tighter than `*`; both binary operators
//! are left-associative. Statements are separated by newlines or `;`.

use crate::ast::*;
use crate::lexer::{tokenize, ParseError, Span, Tok, Token};

pub fn parse(input: &str) -> Result<Vec<SpStmt>, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.program()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

const STATEMENT_KEYWORDS: [&str; 13] = [
    "ground",
    "let",
    "ideal",
    "decompose",
    "radical",
    "member",
    "spectrum",
    "quotient",
    "atoms",
    "stone",
    "intdemo",
    "fincof",
    "verify",
];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn at_statement_end(&self) -> bool {
        matches!(self.peek().tok, Tok::Sep | Tok::Eof)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let token = self.peek();
        ParseError::new(
            token.span,
            expected.iter().map(|s| s.to_string()).collect(),
            token.tok.describe(),
        )
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.advance())
        } else {
            Err(self.error(&[expected]))
        }
    }

    fn expect_name(&mut self, expected: &str) -> Result<Spanned<String>, ParseError> {
        match &self.peek().tok {
            Tok::Name(name) => {
                let name = name.clone();
                let span = self.peek().span;
                self.advance();
                Ok(Spanned::new(name, span))
            }
            _ => Err(self.error(&[expected])),
        }
    }

    fn expect_int(&mut self, expected: &str) -> Result<Spanned<u64>, ParseError> {
        match self.peek().tok {
            Tok::Int(value) => {
                let span = self.peek().span;
                self.advance();
                Ok(Spanned::new(value, span))
            }
            _ => Err(self.error(&[expected])),
        }
    }

    fn program(&mut self) -> Result<Vec<SpStmt>, ParseError> {
        let mut stmts = Vec::new();
        loop {
            while matches!(self.peek().tok, Tok::Sep) {
                self.advance();
            }
            if matches!(self.peek().tok, Tok::Eof) {
                return Ok(stmts);
            }
            let stmt = self.statement()?;
            if !self.at_statement_end() {
                return Err(self.error(&["end of statement"]));
            }
            stmts.push(stmt);
        }
    }

    fn statement(&mut self) -> Result<SpStmt, ParseError> {
        let start = self.peek().span;
        let keyword = match &self.peek().tok {
            Tok::Name(name) if STATEMENT_KEYWORDS.contains(&name.as_str()) => name.clone(),
            _ => {
                let expected: Vec<&str> = STATEMENT_KEYWORDS
                    .iter()
                    .map(|k| *k)
                    .collect();
                return Err(self.error(&expected));
            }
        };
        self.advance();
        let stmt = match keyword.as_str() {
            "ground" => {
                let mut labels = Vec::new();
                while let Tok::Name(_) = self.peek().tok {
                    labels.push(self.expect_name("a label")?);
                }
                Stmt::Ground(labels)
            }
            "let" => {
                let name = self.expect_name("a binding name")?;
                self.expect(Tok::Eq, "`=`")?;
                let expr = self.expr()?;
                Stmt::LetElem(name, expr)
            }
            "ideal" => {
                let name = self.expect_name("a binding name")?;
                self.expect(Tok::Eq, "`=`")?;
                let exprs = self.paren_expr_list()?;
                Stmt::LetIdeal(name, exprs)
            }
            "decompose" => Stmt::Command(Command::Decompose(self.ideal_arg()?)),
            "radical" => Stmt::Command(Command::Radical(self.ideal_arg()?)),
            "member" => {
                let expr = self.expr()?;
                let arg = self.ideal_arg()?;
                Stmt::Command(Command::Member(expr, arg))
            }
            "spectrum" => Stmt::Command(Command::Spectrum),
            "quotient" => Stmt::Command(Command::Quotient(self.expr()?)),
            "atoms" => Stmt::Command(Command::Atoms),
            "stone" => Stmt::Command(Command::Stone(self.expect_int("a dimension")?)),
            "intdemo" => Stmt::Command(Command::IntDemo(self.expect_int("a positive integer")?)),
            "fincof" => {
                let verb = self.expect_name("`witness`")?;
                if verb.node != "witness" {
                    return Err(ParseError::new(
                        verb.span,
                        vec!["`witness`".into()],
                        format!("name `{}`", verb.node),
                    ));
                }
                let mut points = Vec::new();
                while let Tok::Int(_) = self.peek().tok {
                    points.push(self.expect_int("a point")?);
                }
                Stmt::Command(Command::FincofWitness(points))
            }
            "verify" => {
                let what = self.expect_name("`all`")?;
                if what.node != "all" {
                    return Err(ParseError::new(
                        what.span,
                        vec!["`all`".into()],
                        format!("name `{}`", what.node),
                    ));
                }
                Stmt::Command(Command::VerifyAll)
            }
            _ => unreachable!("keyword list is exhaustive"),
        };
        let end = self.tokens[self.pos.saturating_sub(1)].span;
        Ok(Spanned::new(stmt, start.to(end)))
    }

    fn ideal_arg(&mut self) -> Result<IdealArg, ParseError> {
        match &self.peek().tok {
            Tok::Name(name) if name == "ideal" => {
                self.advance();
                Ok(IdealArg::Inline(self.paren_expr_list()?))
            }
            Tok::Name(_) => Ok(IdealArg::Named(self.expect_name("an ideal name")?)),
            _ => Err(self.error(&["an ideal name", "`ideal(...)`"])),
        }
    }

    fn paren_expr_list(&mut self) -> Result<Vec<SpExpr>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut exprs = Vec::new();
        if self.peek().tok != Tok::RParen {
            exprs.push(self.expr()?);
            while self.peek().tok == Tok::Comma {
                self.advance();
                exprs.push(self.expr()?);
            }
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(exprs)
    }

    fn expr(&mut self) -> Result<SpExpr, ParseError> {
        let start = self.peek().span;
        let mut lhs = self.term()?;
        while self.peek().tok == Tok::Plus {
            self.advance();
            let rhs = self.term()?;
            let span = start.to(rhs.span);
            lhs = Spanned::new(Expr::Add(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<SpExpr, ParseError> {
        let start = self.peek().span;
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.advance();
            let rhs = self.factor()?;
            let span = start.to(rhs.span);
            lhs = Spanned::new(Expr::Mul(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<SpExpr, ParseError> {
        let atom = self.atom()?;
        if self.peek().tok == Tok::Prime {
            let prime = self.advance();
            let span = atom.span.to(prime.span);
            Ok(Spanned::new(Expr::Complement(Box::new(atom)), span))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<SpExpr, ParseError> {
        let start = self.peek().span;
        match self.peek().tok.clone() {
            Tok::Name(name) => {
                self.advance();
                Ok(Spanned::new(Expr::Name(name), start))
            }
            Tok::Int(0) => {
                self.advance();
                Ok(Spanned::new(Expr::Zero, start))
            }
            Tok::Int(1) => {
                self.advance();
                Ok(Spanned::new(Expr::One, start))
            }
            Tok::LBrace => {
                self.advance();
                let mut labels = Vec::new();
                if self.peek().tok != Tok::RBrace {
                    labels.push(self.expect_name("a label")?);
                    while self.peek().tok == Tok::Comma {
                        self.advance();
                        labels.push(self.expect_name("a label")?);
                    }
                }
                let close = self.expect(Tok::RBrace, "`}`")?;
                Ok(Spanned::new(
                    Expr::SetLit(labels.into_iter().map(|l| l.node).collect()),
                    start.to(close.span),
                ))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(Spanned::new(inner.node, start.to(close.span)))
            }
            _ => Err(self.error(&["a name", "a set literal", "`0`", "`1`", "`(`"])),
        }
    }
}
