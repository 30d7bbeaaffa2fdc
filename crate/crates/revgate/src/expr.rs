//! Boolean expression trees for gate output definitions.
//!
//! Connectives are strictly binary (`A ^ B ^ C` is an explicit tree of two
//! XOR nodes) because hardware-complexity counting works on binary
//! operations. Expressions are kept exactly as written; nothing here
//! simplifies or canonicalizes.

use thiserror::Error;

/// Operator precedence, loosest first: `^` < `&` < `!`. A chain like
/// `a ^ b ^ c` parses left-associated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoolExpr {
    /// Input line, by position in the enclosing gate's input list.
    Var(usize),
    Const(bool),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Xor(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn var(i: usize) -> Self {
        BoolExpr::Var(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: BoolExpr) -> Self {
        BoolExpr::Not(Box::new(e))
    }

    pub fn and(l: BoolExpr, r: BoolExpr) -> Self {
        BoolExpr::And(Box::new(l), Box::new(r))
    }

    pub fn xor(l: BoolExpr, r: BoolExpr) -> Self {
        BoolExpr::Xor(Box::new(l), Box::new(r))
    }

    pub fn eval(&self, inputs: &[bool]) -> bool {
        match self {
            BoolExpr::Var(i) => inputs[*i],
            BoolExpr::Const(c) => *c,
            BoolExpr::Not(e) => !e.eval(inputs),
            BoolExpr::And(l, r) => l.eval(inputs) && r.eval(inputs),
            BoolExpr::Xor(l, r) => l.eval(inputs) ^ r.eval(inputs),
        }
    }

    /// Largest referenced input index, if any variable occurs.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            BoolExpr::Var(i) => Some(*i),
            BoolExpr::Const(_) => None,
            BoolExpr::Not(e) => e.max_var(),
            BoolExpr::And(l, r) | BoolExpr::Xor(l, r) => l.max_var().max(r.max_var()),
        }
    }

    /// Render with the given input names, emitting parentheses only where
    /// the tree shape deviates from precedence and left-associativity.
    pub fn render(&self, names: &[String]) -> String {
        fn go(e: &BoolExpr, names: &[String], out: &mut String, parent: u8, right: bool) {
            let prec = match e {
                BoolExpr::Var(_) | BoolExpr::Const(_) => 3,
                BoolExpr::Not(_) => 2,
                BoolExpr::And(..) => 1,
                BoolExpr::Xor(..) => 0,
            };
            let need_parens = prec < parent || (prec == parent && right && prec < 2);
            if need_parens {
                out.push('(');
            }
            match e {
                BoolExpr::Var(i) => out.push_str(&names[*i]),
                BoolExpr::Const(c) => out.push(if *c { '1' } else { '0' }),
                BoolExpr::Not(inner) => {
                    out.push('!');
                    go(inner, names, out, 2, false);
                }
                BoolExpr::And(l, r) => {
                    go(l, names, out, 1, false);
                    out.push_str(" & ");
                    go(r, names, out, 1, true);
                }
                BoolExpr::Xor(l, r) => {
                    go(l, names, out, 0, false);
                    out.push_str(" ^ ");
                    go(r, names, out, 0, true);
                }
            }
            if need_parens {
                out.push(')');
            }
        }
        let mut out = String::new();
        go(self, names, &mut out, 0, false);
        out
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprParseError {
    #[error("line {line}, column {col}: unexpected character '{ch}'")]
    UnexpectedChar { line: usize, col: usize, ch: char },
    #[error("line {line}, column {col}: unexpected end of expression")]
    UnexpectedEnd { line: usize, col: usize },
    #[error("line {line}, column {col}: expected ')'")]
    MissingCloseParen { line: usize, col: usize },
    #[error("line {line}, column {col}: unknown input line '{name}'")]
    UnknownVar { line: usize, col: usize, name: String },
    #[error("line {line}, column {col}: trailing input after expression")]
    TrailingInput { line: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Const(bool),
    Xor,
    And,
    Not,
    Open,
    Close,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    /// Column of the start of this expression within its source line.
    col_base: usize,
}

impl<'a> Lexer<'a> {
    fn col(&self) -> usize {
        self.col_base + self.pos
    }

    fn tokens(mut self) -> Result<Vec<(Token, usize)>, ExprParseError> {
        let bytes = self.src.as_bytes();
        let mut out = Vec::new();
        while self.pos < bytes.len() {
            let c = bytes[self.pos] as char;
            let col = self.col();
            match c {
                ' ' | '\t' => {
                    self.pos += 1;
                }
                '^' => {
                    out.push((Token::Xor, col));
                    self.pos += 1;
                }
                '&' => {
                    out.push((Token::And, col));
                    self.pos += 1;
                }
                '!' => {
                    out.push((Token::Not, col));
                    self.pos += 1;
                }
                '(' => {
                    out.push((Token::Open, col));
                    self.pos += 1;
                }
                ')' => {
                    out.push((Token::Close, col));
                    self.pos += 1;
                }
                '0' => {
                    out.push((Token::Const(false), col));
                    self.pos += 1;
                }
                '1' => {
                    out.push((Token::Const(true), col));
                    self.pos += 1;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < bytes.len() {
                        let c = bytes[self.pos] as char;
                        if c.is_ascii_alphanumeric() || c == '_' {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    out.push((Token::Ident(self.src[start..self.pos].to_string()), col));
                }
                ch => {
                    return Err(ExprParseError::UnexpectedChar { line: self.line, col, ch });
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    inputs: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn xor_chain(&mut self) -> Result<BoolExpr, ExprParseError> {
        let mut acc = self.and_chain()?;
        while self.peek() == Some(&Token::Xor) {
            self.bump();
            let rhs = self.and_chain()?;
            acc = BoolExpr::xor(acc, rhs);
        }
        Ok(acc)
    }

    fn and_chain(&mut self) -> Result<BoolExpr, ExprParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let rhs = self.unary()?;
            acc = BoolExpr::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BoolExpr, ExprParseError> {
        if self.peek() == Some(&Token::Not) {
            self.bump();
            return Ok(BoolExpr::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<BoolExpr, ExprParseError> {
        let col = self.here();
        match self.bump() {
            Some(Token::Ident(name)) => {
                match self.inputs.iter().position(|n| *n == name) {
                    Some(i) => Ok(BoolExpr::Var(i)),
                    None => Err(ExprParseError::UnknownVar { line: self.line, col, name }),
                }
            }
            Some(Token::Const(c)) => Ok(BoolExpr::Const(c)),
            Some(Token::Open) => {
                let inner = self.xor_chain()?;
                if self.bump() != Some(Token::Close) {
                    return Err(ExprParseError::MissingCloseParen { line: self.line, col: self.here() });
                }
                Ok(inner)
            }
            Some(_) | None => Err(ExprParseError::UnexpectedEnd { line: self.line, col }),
        }
    }
}

/// Parse one expression against a list of declared input names. `line` and
/// `col_base` locate the expression in its source file for error reporting.
pub fn parse_expr(
    src: &str,
    inputs: &[String],
    line: usize,
    col_base: usize,
) -> Result<BoolExpr, ExprParseError> {
    let tokens = Lexer { src, pos: 0, line, col_base }.tokens()?;
    let end_col = col_base + src.len();
    let mut parser = Parser { tokens, pos: 0, line, end_col, inputs };
    let expr = parser.xor_chain()?;
    if parser.pos != parser.tokens.len() {
        return Err(ExprParseError::TrailingInput { line, col: parser.here() });
    }
    Ok(expr)
}
