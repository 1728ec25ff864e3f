//! Statement language, parser, and session evaluator behind the `boolring`
//! command-line tool. The binary in `main.rs` is a thin driver over these
//! pieces; they are exposed as a library so the test suites can exercise the
//! parser and evaluator directly.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod session;

pub use ast::{print_program, Command, Expr, IdealArg, SpExpr, SpStmt, Spanned, Stmt};
pub use lexer::{tokenize, ParseError, Span};
pub use parser::parse;
pub use session::{EvalError, EvalErrorKind, Mode, Report, Session};
