//! The line-oriented `.pa` format for concrete pseudoalgebras:
//!
//! ```text
//! # Virasoro
//! algebra virasoro
//! rank 1
//! bracket e0 e0 : e0 <- s|1 - 1|s
//! ```
//!
//! A term is `[RATIONAL ["*"]] mono "|" mono` with `mono` one of `1`, `s`,
//! `s(n)` (the divided power `s^(n)`); `⊗` is accepted for `|`.  Duplicate
//! `(i, j, k)` lines are summed.  Comment lines of the form
//! `# param NAME = VALUE` before the first bracket line record the
//! parameters of a catalog instance; other comments are ignored.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::PseudoAlgebra;
use crate::rat::Rat;
use crate::tensor::Tensor2;

/// A parsed `.pa` file in normalized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub rank: usize,
    pub params: BTreeMap<String, String>,
    /// Nonzero components `γ_ij^k`.
    pub brackets: BTreeMap<(usize, usize, usize), Tensor2>,
}

/// A syntax or range error; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("line {line}, column {column}: {message}{}", if token.is_empty() { String::new() } else { format!(" (at `{token}`)") })]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

impl AlgebraFile {
    pub fn from_algebra(a: &PseudoAlgebra) -> AlgebraFile {
        let name: String = a.name().chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
        AlgebraFile {
            name: if name.is_empty() { "unnamed".into() } else { name },
            rank: a.rank(),
            params: a.params().clone(),
            brackets: a.components().map(|(idx, t)| (idx, t.clone())).collect(),
        }
    }

    pub fn to_algebra(&self) -> PseudoAlgebra {
        let mut a = PseudoAlgebra::new(self.name.clone(), self.rank);
        for (k, v) in &self.params {
            a.set_param(k.clone(), v);
        }
        for (&(i, j, k), t) in &self.brackets {
            a.set(i, j, k, t.clone());
        }
        a
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Int(u64),
    Sym(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => f.write_str(w),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Sym(s) => f.write_str(s),
        }
    }
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    /// Column just past the end of the line (for "unexpected end" errors).
    end: usize,
}

fn lex(line_no: usize, text: &str) -> Result<Lexed, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<u64>().map_err(|_| ParseError {
                line: line_no,
                column: col,
                message: "integer too large".into(),
                token: s.clone(),
            })?;
            toks.push((Tok::Int(n), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Word(chars[start..i].iter().collect()), col));
        } else {
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let sym = if two == "<-" {
                "<-"
            } else {
                match c {
                    ':' => ":",
                    '+' => "+",
                    '-' => "-",
                    '*' => "*",
                    '/' => "/",
                    '|' | '⊗' => "|",
                    '(' => "(",
                    ')' => ")",
                    _ => {
                        return Err(ParseError {
                            line: line_no,
                            column: col,
                            message: "unexpected character".into(),
                            token: c.to_string(),
                        })
                    }
                }
            };
            i += sym.len();
            toks.push((Tok::Sym(sym), col));
        }
    }
    Ok(Lexed { toks, end: chars.len() + 1 })
}

struct Cursor<'a> {
    line: usize,
    lx: &'a Lexed,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.lx.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.lx.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.lx.end)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.col(),
            message: message.into(),
            token: self.peek().map(|t| t.to_string()).unwrap_or_default(),
        }
    }

    fn expect_sym(&mut self, s: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(s)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Word(x)) if x == w => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected `{w}`"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn basis(&mut self, rank: usize) -> Result<usize, ParseError> {
        let col = self.col();
        let bad = |c: &Cursor| c.err("expected a basis element `e<INDEX>`");
        let Some(Tok::Word(w)) = self.peek() else { return Err(bad(self)) };
        let Some(idx) = w.strip_prefix('e').and_then(|d| {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                None
            } else {
                d.parse::<usize>().ok()
            }
        }) else {
            return Err(bad(self));
        };
        if idx >= rank {
            return Err(ParseError {
                line: self.line,
                column: col,
                message: format!("basis index {idx} out of range for rank {rank}"),
                token: w.clone(),
            });
        }
        self.pos += 1;
        Ok(idx)
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("unexpected trailing input")),
        }
    }

    fn mono(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(0)
            }
            Some(Tok::Word(w)) if w == "s" => {
                self.pos += 1;
                if self.peek() != Some(&Tok::Sym("(")) {
                    return Ok(1);
                }
                self.pos += 1;
                if self.peek() == Some(&Tok::Sym("-")) {
                    return Err(self.err("divided-power index must be non-negative"));
                }
                let n = self.int("a divided-power index")?;
                let n = u32::try_from(n).map_err(|_| self.err("divided-power index too large"))?;
                self.expect_sym(")")?;
                Ok(n)
            }
            _ => Err(self.err("expected `1`, `s` or `s(n)`")),
        }
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let n = self.int("a coefficient")?;
        let n = Rat::from(num_bigint::BigInt::from(n));
        if self.peek() != Some(&Tok::Sym("/")) {
            return Ok(n);
        }
        self.pos += 1;
        let col = self.col();
        let d = self.int("a denominator")?;
        if d == 0 {
            return Err(ParseError {
                line: self.line,
                column: col,
                message: "zero denominator".into(),
                token: "0".into(),
            });
        }
        Ok(n / Rat::from(num_bigint::BigInt::from(d)))
    }

    /// `[RATIONAL ["*"]] mono "|" mono`
    fn term(&mut self) -> Result<(Rat, u32, u32), ParseError> {
        let has_coeff = matches!(self.peek(), Some(Tok::Int(_))) && self.peek_at(1) != Some(&Tok::Sym("|"));
        let c = if has_coeff {
            let c = self.rational()?;
            if self.peek() == Some(&Tok::Sym("*")) {
                self.pos += 1;
            }
            c
        } else {
            Rat::one()
        };
        let a = self.mono()?;
        self.expect_sym("|")?;
        let b = self.mono()?;
        Ok((c, a, b))
    }

    fn expr(&mut self) -> Result<Tensor2, ParseError> {
        let mut out = Tensor2::zero();
        let mut sign = Rat::one();
        if self.peek() == Some(&Tok::Sym("-")) {
            self.pos += 1;
            sign = -Rat::one();
        }
        loop {
            let (c, a, b) = self.term()?;
            out.add_term(a, b, &c * &sign);
            match self.peek() {
                Some(Tok::Sym("+")) => sign = Rat::one(),
                Some(Tok::Sym("-")) => sign = -Rat::one(),
                None => return Ok(out),
                _ => return Err(self.err("expected `+`, `-` or end of line")),
            }
            self.pos += 1;
        }
    }
}

/// Parses a `.pa` file.
pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut name: Option<String> = None;
    let mut rank: Option<usize> = None;
    let mut params = BTreeMap::new();
    let mut brackets: BTreeMap<(usize, usize, usize), Tensor2> = BTreeMap::new();
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some((k, v)) = comment.trim().strip_prefix("param ").and_then(|r| r.split_once('=')) {
                if brackets.is_empty() {
                    params.insert(k.trim().to_string(), v.trim().to_string());
                }
            }
            continue;
        }
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        match (&name, rank) {
            (None, _) => {
                let mut words = content.split_whitespace();
                let col = raw.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
                let err = |message: &str, token: &str| ParseError {
                    line: line_no,
                    column: col,
                    message: message.into(),
                    token: token.into(),
                };
                match (words.next(), words.next(), words.next()) {
                    (Some("algebra"), Some(nm), None) => name = Some(nm.to_string()),
                    (Some("algebra"), _, _) => return Err(err("expected `algebra NAME`", content.trim())),
                    (Some(w), _, _) => return Err(err("expected the header `algebra NAME`", w)),
                    _ => unreachable!(),
                }
            }
            (Some(_), None) => {
                let lx = lex(line_no, content)?;
                let mut c = Cursor { line: line_no, lx: &lx, pos: 0 };
                c.expect_word("rank")?;
                let r = c.int("the rank")?;
                c.end()?;
                rank = Some(r as usize);
            }
            (Some(_), Some(r)) => {
                let lx = lex(line_no, content)?;
                let mut c = Cursor { line: line_no, lx: &lx, pos: 0 };
                c.expect_word("bracket")?;
                let i = c.basis(r)?;
                let j = c.basis(r)?;
                c.expect_sym(":")?;
                let k = c.basis(r)?;
                c.expect_sym("<-")?;
                let t = c.expr()?;
                let e = brackets.entry((i, j, k)).or_default();
                *e = &*e + &t;
            }
        }
    }
    let (Some(name), Some(rank)) = (name, rank) else {
        return Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing header (`algebra NAME` then `rank N`)".into(),
            token: String::new(),
        });
    };
    brackets.retain(|_, t| !t.is_zero());
    Ok(AlgebraFile { name, rank, params, brackets })
}

/// Parses a `.pa` file into a pseudoalgebra.
pub fn parse_algebra(text: &str) -> Result<PseudoAlgebra, ParseError> {
    parse(text).map(|f| f.to_algebra())
}

fn mono(n: u32) -> String {
    match n {
        0 => "1".into(),
        1 => "s".into(),
        n => format!("s({n})"),
    }
}

fn print_tensor(t: &Tensor2) -> String {
    let mut out = String::new();
    for (n, ((a, b), c)) in t.terms().enumerate() {
        let abs = c.abs();
        let body =
            if abs.is_one() { format!("{}|{}", mono(a), mono(b)) } else { format!("{abs} {}|{}", mono(a), mono(b)) };
        match (n, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

/// Prints the normalized file: lines ordered by `(i, j, k)`, terms by
/// `(a, b)`, coefficients in lowest terms, zero brackets omitted.
pub fn print(f: &AlgebraFile) -> String {
    let mut out = format!("algebra {}\nrank {}\n", f.name, f.rank);
    for (k, v) in &f.params {
        out.push_str(&format!("# param {k} = {v}\n"));
    }
    for (&(i, j, k), t) in &f.brackets {
        if !t.is_zero() {
            out.push_str(&format!("bracket e{i} e{j} : e{k} <- {}\n", print_tensor(t)));
        }
    }
    out
}

pub fn print_algebra(a: &PseudoAlgebra) -> String {
    print(&AlgebraFile::from_algebra(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::virasoro;

    #[test]
    fn virasoro_file() {
        let text = print_algebra(&virasoro());
        assert_eq!(text, "algebra virasoro\nrank 1\nbracket e0 e0 : e0 <- -1|s + s|1\n");
        assert_eq!(parse_algebra(&text).unwrap(), virasoro());
        let explicit = "algebra virasoro\nrank 1\nbracket e0 e0 : e0 <- 1 s|1 - 1 1|s\n";
        assert_eq!(parse_algebra(explicit).unwrap(), virasoro());
    }

    #[test]
    fn ck_module_line() {
        let f = parse("algebra m\nrank 2\nbracket e0 e1 : e1 <- 1/2 s|1 - 1|s + 3 1|1").unwrap();
        assert_eq!(f.brackets[&(0, 1, 1)], Tensor2::ck(&Rat::new(1, 2), &Rat::int(3)));
    }

    #[test]
    fn aliases_and_stars() {
        let f = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- 2*s(2)⊗s - -1|1").err().unwrap();
        assert_eq!((f.line, f.column), (3, 34));
        let f = parse("algebra x\nrank 1\n  # note\nbracket e0 e0 : e0 <- 2*s(2)⊗s - 1|1 # trailing").unwrap();
        assert_eq!(f.brackets[&(0, 0, 0)], Tensor2::from_terms([(2, 1, Rat::int(2)), (0, 0, Rat::int(-1))]));
    }

    #[test]
    fn negative_index_is_located() {
        let e = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- s(-1)|1").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (3, 25, "-"));
        assert!(e.message.contains("non-negative"));
    }

    #[test]
    fn range_and_header_errors() {
        let e = parse("algebra x\nrank 2\nbracket e0 e2 : e0 <- 1|1").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (3, 12, "e2"));
        let e = parse("rank 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(parse("algebra x\n").is_err());
        let e = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- 1/0 1|1").unwrap_err();
        assert_eq!(e.column, 25);
        let e = parse("algebra x\nrank 1\nbracket e0 e0 e0 <- 1|1").unwrap_err();
        assert_eq!((e.column, e.token.as_str()), (15, "e0"));
        assert!(e.to_string().starts_with("line 3, column 15: expected `:`"));
    }

    #[test]
    fn duplicates_are_summed_and_zeros_dropped() {
        let f = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- s|1\nbracket e0 e0 : e0 <- -s|1\n").unwrap();
        assert!(f.brackets.is_empty());
        assert_eq!(print(&f), "algebra x\nrank 1\n");
        let f = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- s|1 + 1|1 + s|1").unwrap();
        assert_eq!(print(&f), "algebra x\nrank 1\nbracket e0 e0 : e0 <- 1|1 + 2 s|1\n");
    }

    #[test]
    fn params_survive_the_round_trip() {
        let mut a = virasoro();
        a.set_param("lambda", "1/2");
        a.set_param("A", "s|1 - 1|s");
        let text = print_algebra(&a);
        assert!(text.contains("# param A = s|1 - 1|s\n"));
        assert_eq!(parse_algebra(&text).unwrap(), a);
    }
}
