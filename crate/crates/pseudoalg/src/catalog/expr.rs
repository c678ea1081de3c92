//! A small exact expression language for structure constants.
//!
//! Values are scalars (rationals) or elements of H⊗H.  Grammar:
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" INT)?
//! primary := NUM | mono "|" mono | IDENT | IDENT "(" args ")" | "(" expr ")"
//! mono    := "1" | "s" | "s(" INT ")"
//! ```
//!
//! `|` (or `⊗`) binds tighter than everything else, so `2*s|1` is `2 (s⊗1)`.
//! Identifiers are parameters, the constant `alpha = s|1 - 1|s`, or the
//! functions `ck(λ, κ) = λ s|1 - 1|s + κ 1|1` and `swap(x)`.  Products of two
//! tensors are taken in the algebra H⊗H.

use std::collections::BTreeMap;
use std::fmt;

use crate::rat::Rat;
use crate::tensor::Tensor2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Rat),
    Tensor(Tensor2),
}

impl Value {
    pub fn into_tensor(self) -> Tensor2 {
        match self {
            Value::Scalar(c) if c.is_zero() => Tensor2::zero(),
            Value::Scalar(c) => Tensor2::basis(0, 0).scale(&c),
            Value::Tensor(t) => t,
        }
    }

    pub fn as_scalar(&self) -> Option<&Rat> {
        match self {
            Value::Scalar(c) => Some(c),
            Value::Tensor(_) => None,
        }
    }
}

/// Evaluation failure, with a 1-based character offset into the source.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown parameter `{0}`")]
    UnknownName(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("type error: {0}")]
    Type(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ExprError::Syntax { pos: start + 1, msg: "integer too large".into() })?;
            out.push((start + 1, Tok::Num(n)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start + 1, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()|,".contains(c) {
            out.push((i + 1, Tok::Op(c)));
            i += 1;
        } else if c == '⊗' {
            out.push((i + 1, Tok::Op('|')));
            i += 1;
        } else {
            return Err(ExprError::Syntax { pos: i + 1, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    env: &'a BTreeMap<String, Value>,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = add(acc, self.term()?, false)?;
            } else if self.eat('-') {
                acc = add(acc, self.term()?, true)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mul(acc, self.unary()?)?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let Value::Scalar(d) = d else { return Err(ExprError::Type("division by a tensor".into())) };
                if d.is_zero() {
                    return Err(ExprError::DivisionByZero);
                }
                acc = mul(acc, Value::Scalar(d.recip()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        if self.eat('-') {
            return mul(Value::Scalar(Rat::int(-1)), self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.primary()?;
        if self.eat('^') {
            let Some(Tok::Num(n)) = self.peek().cloned() else { return self.err("expected an integer exponent") };
            self.at += 1;
            let Value::Scalar(b) = base else { return Err(ExprError::Type("power of a tensor".into())) };
            return Ok(Value::Scalar(b.pow(n as u32)));
        }
        Ok(base)
    }

    /// Looks ahead for `mono |`.
    fn at_mono(&self) -> bool {
        match self.peek() {
            Some(Tok::Num(1)) => self.peek_at(1) == Some(&Tok::Op('|')),
            Some(Tok::Ident(s)) if s == "s" => matches!(self.peek_at(1), Some(Tok::Op('|' | '('))),
            _ => false,
        }
    }

    fn mono(&mut self) -> Result<u32, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(1)) => {
                self.at += 1;
                Ok(0)
            }
            Some(Tok::Ident(s)) if s == "s" => {
                self.at += 1;
                if self.eat('(') {
                    let Some(Tok::Num(n)) = self.peek().cloned() else { return self.err("expected a degree") };
                    self.at += 1;
                    self.expect(')')?;
                    Ok(n as u32)
                } else {
                    Ok(1)
                }
            }
            _ => self.err("expected `1`, `s` or `s(n)`"),
        }
    }

    fn primary(&mut self) -> Result<Value, ExprError> {
        if self.at_mono() {
            let a = self.mono()?;
            self.expect('|')?;
            let b = self.mono()?;
            return Ok(Value::Tensor(Tensor2::basis(a, b)));
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Value::Scalar(Rat::int(n)))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.eat('(') {
                    let mut args = vec![self.expr()?];
                    while self.eat(',') {
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    return call(&name, args);
                }
                match name.as_str() {
                    "alpha" => Ok(Value::Tensor(Tensor2::alpha())),
                    _ => self.env.get(&name).cloned().ok_or(ExprError::UnknownName(name)),
                }
            }
            _ => self.err("expected an expression"),
        }
    }
}

fn add(a: Value, b: Value, negate: bool) -> Result<Value, ExprError> {
    let sign = if negate { Rat::int(-1) } else { Rat::one() };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &(&sign * &y)),
        (x, y) => {
            let mut t = x.into_tensor();
            t.add_scaled(&y.into_tensor(), &sign);
            Value::Tensor(t)
        }
    })
}

fn mul(a: Value, b: Value) -> Result<Value, ExprError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(x), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(x)) => Value::Tensor(t.scale(&x)),
        (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x.mul(&y)),
    })
}

fn call(name: &str, args: Vec<Value>) -> Result<Value, ExprError> {
    let scalar = |v: &Value| v.as_scalar().cloned().ok_or_else(|| ExprError::Type(format!("{name} expects scalars")));
    match (name, args.as_slice()) {
        ("ck", [l, k]) => Ok(Value::Tensor(Tensor2::ck(&scalar(l)?, &scalar(k)?))),
        ("swap", [x]) => Ok(Value::Tensor(x.clone().into_tensor().swap())),
        _ => Err(ExprError::Type(format!("unknown function `{name}` with {} argument(s)", args.len()))),
    }
}

/// Evaluates `src` with the given parameter values.
pub fn eval(src: &str, env: &BTreeMap<String, Value>) -> Result<Value, ExprError> {
    let toks = lex(src)?;
    let end = src.chars().count() + 1;
    let mut p = Parser { toks, at: 0, env, end };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Evaluates `src` as an element of H⊗H.
pub fn eval_tensor(src: &str, env: &BTreeMap<String, Value>) -> Result<Tensor2, ExprError> {
    eval(src, env).map(Value::into_tensor)
}

/// Evaluates `src` as a scalar.
pub fn eval_scalar(src: &str, env: &BTreeMap<String, Value>) -> Result<Rat, ExprError> {
    match eval(src, env)? {
        Value::Scalar(c) => Ok(c),
        Value::Tensor(_) => Err(ExprError::Type(format!("`{src}` is not a scalar"))),
    }
}

/// A parameter constraint: `lhs == rhs` or `lhs != rhs`, optionally guarded
/// by `choice = option ->`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint<'a> {
    pub text: &'a str,
}

impl fmt::Display for Constraint<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

impl<'a> Constraint<'a> {
    /// `Ok(true)` when satisfied (or when the guard does not apply).
    pub fn holds(&self, env: &BTreeMap<String, Value>, choices: &BTreeMap<String, String>) -> Result<bool, ExprError> {
        let mut body = self.text;
        if let Some((guard, rest)) = self.text.split_once("->") {
            let (name, option) = guard
                .split_once('=')
                .ok_or_else(|| ExprError::Syntax { pos: 1, msg: "guard must read `choice = option ->`".into() })?;
            if choices.get(name.trim()).map(String::as_str) != Some(option.trim()) {
                return Ok(true);
            }
            body = rest;
        }
        let (lhs, rhs, eq) = if let Some((l, r)) = body.split_once("==") {
            (l, r, true)
        } else if let Some((l, r)) = body.split_once("!=") {
            (l, r, false)
        } else {
            return Err(ExprError::Syntax { pos: 1, msg: format!("constraint `{body}` has no `==` or `!=`") });
        };
        let l = eval(lhs, env)?.into_tensor();
        let r = eval(rhs, env)?.into_tensor();
        Ok((l == r) == eq)
    }
}
