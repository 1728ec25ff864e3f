use std::fmt;

/// Source position of a token or AST node: 1-based line and column plus the
/// width in characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
    pub len: u32,
}

impl Span {
    pub fn new(line: u32, col: u32, len: u32) -> Self {
        Span { line, col, len }
    }

    /// Smallest span starting at `self` and covering `end`, for nodes built
    /// from several tokens on one line.
    pub fn to(self, end: Span) -> Span {
        if self.line == end.line && end.col + end.len >= self.col {
            Span::new(self.line, self.col, end.col + end.len - self.col)
        } else {
            self
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    Int(u64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Plus,
    Star,
    Prime,
    Eq,
    /// Statement separator: newline or `;`.
    Sep,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("name `{n}`"),
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Sep => "end of statement".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// A diagnostic with position and the token set the parser would have
/// accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(span: Span, expected: Vec<String>, found: String) -> Self {
        ParseError {
            line: span.line,
            col: span.col,
            expected,
            found,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: expected {}, found {}",
            self.line,
            self.col,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits the input into tokens. Newlines and `;` become separators; `#`
/// starts a comment running to the end of the line.
pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut chars = input.chars().peekable();

    while let Some(&c) = chars.peek() {
        let span = Span::new(line, col, 1);
        match c {
            '\n' => {
                tokens.push(Token { tok: Tok::Sep, span });
                chars.next();
                line += 1;
                col = 1;
            }
            ';' => {
                tokens.push(Token { tok: Tok::Sep, span });
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '{' | '}' | '(' | ')' | ',' | '+' | '*' | '\'' | '=' => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '\'' => Tok::Prime,
                    _ => Tok::Eq,
                };
                tokens.push(Token { tok, span });
                chars.next();
                col += 1;
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let span = Span::new(line, span.col, text.len() as u32);
                let value: u64 = text.parse().map_err(|_| {
                    ParseError::new(
                        span,
                        vec!["an integer below 2^64".into()],
                        format!("`{text}`"),
                    )
                })?;
                tokens.push(Token {
                    tok: Tok::Int(value),
                    span,
                });
            }
            c if is_name_start(c) => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if is_name_continue(d) {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let span = Span::new(line, span.col, text.len() as u32);
                tokens.push(Token {
                    tok: Tok::Name(text),
                    span,
                });
            }
            other => {
                return Err(ParseError::new(
                    span,
                    vec!["a statement token".into()],
                    format!("`{other}`"),
                ));
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        span: Span::new(line, col, 0),
    });
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenizes_a_let_statement() {
        let tokens = tokenize("let u = {a,b} + c'").unwrap();
        let kinds: Vec<&Tok> = tokens.iter().map(|t| &t.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Name("let".into()),
                &Tok::Name("u".into()),
                &Tok::Eq,
                &Tok::LBrace,
                &Tok::Name("a".into()),
                &Tok::Comma,
                &Tok::Name("b".into()),
                &Tok::RBrace,
                &Tok::Plus,
                &Tok::Name("c".into()),
                &Tok::Prime,
                &Tok::Eof,
            ]
        );
    }

    #[test]
    fn tracks_line_and_column() {
        let tokens = tokenize("ground a\nlet u = 0").unwrap();
        let let_tok = tokens
            .iter()
            .find(|t| t.tok == Tok::Name("let".into()))
            .unwrap();
        assert_eq!((let_tok.span.line, let_tok.span.col), (2, 1));
        let zero = tokens.iter().find(|t| t.tok == Tok::Int(0)).unwrap();
        assert_eq!((zero.span.line, zero.span.col), (2, 9));
    }

    #[test]
    fn comments_run_to_end_of_line() {
        let tokens = tokenize("atoms # trailing words ( { '\nspectrum").unwrap();
        let names: Vec<String> = tokens
            .iter()
            .filter_map(|t| match &t.tok {
                Tok::Name(n) => Some(n.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(names, vec!["atoms", "spectrum"]);
    }

    #[test]
    fn rejects_stray_characters() {
        let err = tokenize("let u = @").unwrap_err();
        assert_eq!((err.line, err.col), (1, 9));
    }
}
