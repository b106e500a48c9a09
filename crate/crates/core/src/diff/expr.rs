//! Scalar expressions in one variable `y`.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | 'y' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus (`-y^2` is `-(y^2)`) and is right
//! associative. Binary `+ - * /` are left associative. Function names are
//! `sin cos sinh cosh tanh exp log sqrt asinh atan`.

use std::fmt;

use crate::diff::dual::Dual;
use crate::error::{EvalError, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Log,
    Sqrt,
    Asinh,
    Atan,
}

impl Func {
    pub const ALL: [Func; 10] = [
        Func::Sin,
        Func::Cos,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Exp,
        Func::Log,
        Func::Sqrt,
        Func::Asinh,
        Func::Atan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Asinh => "asinh",
            Func::Atan => "atan",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.iter().copied().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn constant(v: f64) -> Expr {
        Expr::Const(v)
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn call(f: Func, arg: Expr) -> Expr {
        Expr::Call(f, Box::new(arg))
    }

    /// Negation; a negated literal becomes a negative literal, which is how
    /// the parser reads `-2` and how `Display` prints `Const(-2.0)`.
    pub fn negate(e: Expr) -> Expr {
        match e {
            Expr::Const(v) => Expr::Const(-v),
            other => Expr::Neg(Box::new(other)),
        }
    }

    /// Value at `y`.
    pub fn eval(&self, y: f64) -> Result<f64, EvalError> {
        Ok(self.eval_dual(y)?.0)
    }

    /// Value and exact first derivative at `y`.
    pub fn eval_dual(&self, y: f64) -> Result<(f64, f64), EvalError> {
        let d = self.eval_node(Dual::variable(y), y)?;
        Ok((d.re, d.eps))
    }

    fn eval_node(&self, var: Dual, y: f64) -> Result<Dual, EvalError> {
        let domain = |node: &Expr| EvalError::Domain {
            node: node.to_string(),
            y,
        };
        let out = match self {
            Expr::Const(c) => Dual::constant(*c),
            Expr::Var => var,
            Expr::Neg(e) => -e.eval_node(var, y)?,
            Expr::Binary(op, l, r) => {
                let a = l.eval_node(var, y)?;
                let b = r.eval_node(var, y)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b.re == 0.0 {
                            return Err(domain(self));
                        }
                        a / b
                    }
                    BinOp::Pow => {
                        if b.eps == 0.0 {
                            if a.re < 0.0 && b.re.fract() != 0.0 {
                                return Err(domain(self));
                            }
                            a.powf(b.re)
                        } else {
                            if a.re <= 0.0 {
                                return Err(domain(self));
                            }
                            a.pow(b)
                        }
                    }
                }
            }
            Expr::Call(f, arg) => {
                let a = arg.eval_node(var, y)?;
                match f {
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Sinh => a.sinh(),
                    Func::Cosh => a.cosh(),
                    Func::Tanh => a.tanh(),
                    Func::Exp => a.exp(),
                    Func::Log => {
                        if a.re <= 0.0 {
                            return Err(domain(self));
                        }
                        a.ln()
                    }
                    Func::Sqrt => {
                        if a.re < 0.0 {
                            return Err(domain(self));
                        }
                        a.sqrt()
                    }
                    Func::Asinh => a.asinh(),
                    Func::Atan => a.atan(),
                }
            }
        };
        if !out.is_finite() {
            return Err(EvalError::NonFinite {
                node: self.to_string(),
                y,
            });
        }
        Ok(out)
    }
}

/// Fully parenthesized rendering; `parse_expr(&e.to_string()) == Ok(e)`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) if c.is_sign_negative() => write!(f, "({c:?})"),
            Expr::Const(c) => write!(f, "{c:?}"),
            Expr::Var => write!(f, "y"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    Comma,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<(Tok, usize), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&ch) = bytes.get(start) else {
            return Ok((Tok::End, start));
        };
        let tok = match ch {
            b'0'..=b'9' | b'.' => {
                let mut end = start;
                while end < bytes.len() && (bytes[end].is_ascii_digit() || bytes[end] == b'.') {
                    end += 1;
                }
                if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
                    let mut k = end + 1;
                    if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                        k += 1;
                    }
                    if k < bytes.len() && bytes[k].is_ascii_digit() {
                        while k < bytes.len() && bytes[k].is_ascii_digit() {
                            k += 1;
                        }
                        end = k;
                    }
                }
                let text = &self.src[start..end];
                let v = text.parse::<f64>().map_err(|_| ParseError::Syntax {
                    offset: start,
                    message: format!("malformed number `{text}`"),
                })?;
                self.pos = end;
                return Ok((Tok::Num(v), start));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = start;
                while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                self.pos = end;
                return Ok((Tok::Ident(self.src[start..end].to_string()), start));
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => Tok::Op(ch as char),
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let c = self.src[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{c}`"),
                });
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer { src, pos: 0 };
        let (tok, at) = lexer.next_token()?;
        Ok(Self { lexer, tok, at })
    }

    fn bump(&mut self) -> Result<(), ParseError> {
        let (tok, at) = self.lexer.next_token()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = match &self.tok {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Op(c) => format!("`{c}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        };
        ParseError::Syntax {
            offset: self.at,
            message: format!("expected {wanted}, found {found}"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.tok {
                Tok::Op('+') => BinOp::Add,
                Tok::Op('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump()?;
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.tok {
                Tok::Op('*') => BinOp::Mul,
                Tok::Op('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump()?;
            let rhs = self.unary()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.tok == Tok::Op('-') {
            self.bump()?;
            return Ok(Expr::negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.tok == Tok::Op('^') {
            self.bump()?;
            let exponent = self.unary()?;
            return Ok(Expr::binary(BinOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.tok.clone() {
            Tok::Num(v) => {
                self.bump()?;
                Ok(Expr::Const(v))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let offset = self.at;
                self.bump()?;
                match name.as_str() {
                    "y" => return Ok(Expr::Var),
                    "pi" => return Ok(Expr::Const(std::f64::consts::PI)),
                    "e" => return Ok(Expr::Const(std::f64::consts::E)),
                    _ => {}
                }
                let func = Func::from_name(&name).ok_or_else(|| ParseError::UnknownIdentifier {
                    name: name.clone(),
                    offset,
                })?;
                if self.tok != Tok::LParen {
                    return Err(self.unexpected("`(` after function name"));
                }
                self.bump()?;
                let mut args = Vec::new();
                if self.tok != Tok::RParen {
                    args.push(self.expr()?);
                    while self.tok == Tok::Comma {
                        self.bump()?;
                        args.push(self.expr()?);
                    }
                }
                if self.tok != Tok::RParen {
                    return Err(self.unexpected("`)` or `,`"));
                }
                self.bump()?;
                if args.len() != 1 {
                    return Err(ParseError::Arity {
                        name,
                        offset,
                        expected: 1,
                        found: args.len(),
                    });
                }
                Ok(Expr::call(func, args.pop().expect("one argument")))
            }
            _ => Err(self.unexpected("a number, `y`, a function call or `(`")),
        }
    }
}

/// Parses `source` into an expression tree.
pub fn parse_expr(source: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(source)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// `(g(y), g'(y))` for a parsed expression.
pub fn eval_dual(ast: &Expr, y: f64) -> Result<(f64, f64), EvalError> {
    ast.eval_dual(y)
}
