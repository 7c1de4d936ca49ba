//! Prefix expression evaluator.
//!
//! ```text
//! expr  := OP arg*
//! arg   := WORD | FOREST | "(" expr ")"
//! OP    := qsh | shuffle | concat | delta | gamma | antipode | counit
//!        | arborify | arborify0 | mul | gl | graft | bplus | aut
//!        | mould(SPEC) | arbo(SPEC)
//! ```
//!
//! Words are written `[1.2]`, forests `3(1,2)*1` or `()`. A bare atom is
//! also an expression and evaluates to itself.

use std::fmt;

use mouldcalc_core::arbomoulds::ArboMould;
use mouldcalc_core::forests::{
    arborify_lc, arborify_simple, aut_rational, bplus, forest_antipode, forest_counit,
    forest_delta_lc, forest_gamma_lc, forest_mul_lc, gl_product_lc, graft, Forest,
};
use mouldcalc_core::moulds::Mould;
use mouldcalc_core::words::{
    antipode_lc, concat, counit_delta, deconcat_lc, gamma_lc, qsh_lc, shuffle_lc, Word,
};
use mouldcalc_core::{Error as CoreError, LinComb, Rational, Tensor};
use serde_json::Value as Json;

use crate::specs::{parse_arbomould, parse_mould};
use crate::{json, Error, Result};

/// The result of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Words(LinComb<Word>),
    WordTensor(Tensor<Word, Word>),
    Forests(LinComb<Forest>),
    ForestTensor(Tensor<Forest, Forest>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(r) => write!(f, "{}", r),
            Value::Words(a) => write!(f, "{}", a),
            Value::WordTensor(a) => write!(f, "{}", a),
            Value::Forests(a) => write!(f, "{}", a),
            Value::ForestTensor(a) => write!(f, "{}", a),
        }
    }
}

impl Value {
    pub fn to_json(&self) -> Json {
        match self {
            Value::Scalar(r) => json::rational(r),
            Value::Words(a) => json::lincomb(a),
            Value::WordTensor(a) => json::lincomb(a),
            Value::Forests(a) => json::lincomb(a),
            Value::ForestTensor(a) => json::lincomb(a),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Words(_) => "words",
            Value::WordTensor(_) => "word tensor",
            Value::Forests(_) => "forests",
            Value::ForestTensor(_) => "forest tensor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Op(String),
    Apply(&'static str, String),
    Word(String),
    Forest(String),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    CoreError::Parse {
        position: pos,
        message: msg.into(),
    }
    .into()
}

/// Scans to the end of a balanced parenthesized group starting at `start`.
fn balanced(s: &[u8], start: usize) -> Result<usize> {
    let mut depth = 0usize;
    for (i, &c) in s.iter().enumerate().skip(start) {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| err(i, "unbalanced `)`"))?;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            _ => {}
        }
    }
    Err(err(start, "unclosed `(`"))
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let s = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let c = s[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b'[' {
            let end = text[i..]
                .find(']')
                .map(|k| i + k + 1)
                .ok_or_else(|| err(i, "unclosed `[`"))?;
            out.push((i, Tok::Word(text[i..end].to_string())));
            i = end;
        } else if c == b'(' {
            let mut j = i + 1;
            while j < s.len() && s[j].is_ascii_whitespace() {
                j += 1;
            }
            if j < s.len() && s[j].is_ascii_alphabetic() {
                out.push((i, Tok::Open));
                i += 1;
            } else {
                let end = forest_end(s, i)?;
                out.push((i, Tok::Forest(text[i..end].to_string())));
                i = end;
            }
        } else if c == b')' {
            out.push((i, Tok::Close));
            i += 1;
        } else if c.is_ascii_digit() {
            let end = forest_end(s, i)?;
            out.push((i, Tok::Forest(text[i..end].to_string())));
            i = end;
        } else if text[i..].starts_with('𝟙') {
            out.push((i, Tok::Forest("()".into())));
            i += '𝟙'.len_utf8();
        } else if c.is_ascii_alphabetic() {
            let mut j = i;
            while j < s.len() && (s[j].is_ascii_alphanumeric() || s[j] == b'-' || s[j] == b'_') {
                j += 1;
            }
            let name = &text[i..j];
            if j < s.len() && s[j] == b'(' && (name == "mould" || name == "arbo") {
                let end = balanced(s, j)?;
                let kind = if name == "mould" { "mould" } else { "arbo" };
                out.push((i, Tok::Apply(kind, text[j + 1..end - 1].trim().to_string())));
                i = end;
            } else {
                out.push((i, Tok::Op(name.to_string())));
                i = j;
            }
        } else {
            return Err(err(i, format!("unexpected character `{}`", c as char)));
        }
    }
    Ok(out)
}

/// A forest token: digits, `*`, `,` and balanced parentheses.
fn forest_end(s: &[u8], start: usize) -> Result<usize> {
    let mut i = start;
    loop {
        if i < s.len() && s[i] == b'(' {
            i = balanced(s, i)?;
        } else if i < s.len() && (s[i].is_ascii_digit() || s[i] == b'*') {
            i += 1;
        } else {
            return Ok(i);
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
    max_weight: u32,
    _text: &'a str,
}

enum Head {
    Op(String),
    Mould(Mould),
    Arbo(ArboMould),
}

impl Parser<'_> {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn expr(&mut self) -> Result<Value> {
        let (at, tok) = match self.toks.get(self.pos) {
            Some(t) => t.clone(),
            None => return Err(err(self.len, "expected an expression")),
        };
        let head = match tok {
            Tok::Op(name) => Head::Op(name),
            Tok::Apply("mould", spec) => Head::Mould(parse_mould(&spec, self.max_weight)?),
            Tok::Apply(_, spec) => Head::Arbo(parse_arbomould(&spec, self.max_weight)?),
            _ => return self.arg(),
        };
        self.pos += 1;
        let mut args = Vec::new();
        while let Some((_, t)) = self.toks.get(self.pos) {
            if *t == Tok::Close {
                break;
            }
            args.push(self.arg()?);
        }
        apply(head, args).map_err(|e| match e {
            Error::Usage(m) => err(at, m),
            other => other,
        })
    }

    fn arg(&mut self) -> Result<Value> {
        let (at, tok) = match self.toks.get(self.pos) {
            Some(t) => t.clone(),
            None => return Err(err(self.len, "expected an argument")),
        };
        self.pos += 1;
        match tok {
            Tok::Word(w) => {
                let word: Word = w.parse().map_err(|e| shift(e, at))?;
                Ok(Value::Words(LinComb::basis(word)))
            }
            Tok::Forest(f) => {
                let forest: Forest = f.parse().map_err(|e| shift(e, at))?;
                Ok(Value::Forests(LinComb::basis(forest)))
            }
            Tok::Open => {
                let v = self.expr()?;
                match self.toks.get(self.pos) {
                    Some((_, Tok::Close)) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(err(self.here(), "expected `)`")),
                }
            }
            Tok::Close => Err(err(at, "unexpected `)`")),
            Tok::Op(name) => Err(err(at, format!("operator `{}` needs parentheses here", name))),
            Tok::Apply(..) => Err(err(at, "mould application needs parentheses here")),
        }
    }
}

fn shift(e: CoreError, offset: usize) -> Error {
    match e {
        CoreError::Parse { position, message } => CoreError::Parse {
            position: position + offset,
            message,
        }
        .into(),
        other => other.into(),
    }
}

fn arity(name: &str, args: &[Value], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        crate::usage(format!("`{}` takes {} argument(s), got {}", name, n, args.len()))
    }
}

fn type_error<T>(name: &str, v: &Value) -> Result<T> {
    crate::usage(format!("`{}` does not accept {}", name, v.kind()))
}

fn fold_words(
    name: &str,
    args: Vec<Value>,
    f: impl Fn(&LinComb<Word>, &LinComb<Word>) -> LinComb<Word>,
) -> Result<Value> {
    if args.len() < 2 {
        return crate::usage(format!("`{}` takes at least 2 arguments", name));
    }
    let mut acc: Option<LinComb<Word>> = None;
    for a in &args {
        let Value::Words(w) = a else {
            return type_error(name, a);
        };
        acc = Some(match acc {
            None => w.clone(),
            Some(x) => f(&x, w),
        });
    }
    Ok(Value::Words(acc.unwrap_or_default()))
}

fn fold_forests(
    name: &str,
    args: Vec<Value>,
    f: impl Fn(&LinComb<Forest>, &LinComb<Forest>) -> LinComb<Forest>,
) -> Result<Value> {
    if args.len() < 2 {
        return crate::usage(format!("`{}` takes at least 2 arguments", name));
    }
    let mut acc: Option<LinComb<Forest>> = None;
    for a in &args {
        let Value::Forests(w) = a else {
            return type_error(name, a);
        };
        acc = Some(match acc {
            None => w.clone(),
            Some(x) => f(&x, w),
        });
    }
    Ok(Value::Forests(acc.unwrap_or_default()))
}

fn single_tree(name: &str, a: &LinComb<Forest>) -> Result<mouldcalc_core::forests::Tree> {
    match a.iter().next() {
        Some((f, c)) if a.len() == 1 && *c == Rational::from_integer(1.into()) && f.trees().len() == 1 => {
            Ok(f.trees()[0].clone())
        }
        _ => crate::usage(format!("`{}` expects single trees", name)),
    }
}

fn apply(head: Head, args: Vec<Value>) -> Result<Value> {
    let name = match head {
        Head::Mould(m) => {
            arity("mould", &args, 1)?;
            return match &args[0] {
                Value::Words(a) => Ok(Value::Scalar(m.eval_lc(a))),
                v => type_error("mould", v),
            };
        }
        Head::Arbo(m) => {
            arity("arbo", &args, 1)?;
            return match &args[0] {
                Value::Forests(a) => Ok(Value::Scalar(m.eval_lc(a))),
                v => type_error("arbo", v),
            };
        }
        Head::Op(name) => name,
    };
    let n = name.as_str();
    match n {
        "qsh" | "stuffle" => fold_words(n, args, qsh_lc),
        "shuffle" => fold_words(n, args, shuffle_lc),
        "concat" => fold_words(n, args, |a, b| a.bilinear(b, |u, v| LinComb::basis(concat(u, v)))),
        "mul" => fold_forests(n, args, forest_mul_lc),
        "gl" => fold_forests(n, args, gl_product_lc),
        "delta" | "gamma" | "antipode" | "counit" | "arborify" | "arborify0" | "aut" => {
            arity(n, &args, 1)?;
            let a = &args[0];
            match (n, a) {
                ("delta", Value::Words(w)) => Ok(Value::WordTensor(deconcat_lc(w))),
                ("delta", Value::Forests(f)) => Ok(Value::ForestTensor(forest_delta_lc(f))),
                ("gamma", Value::Words(w)) => Ok(Value::WordTensor(gamma_lc(w))),
                ("gamma", Value::Forests(f)) => Ok(Value::ForestTensor(forest_gamma_lc(f))),
                ("antipode", Value::Words(w)) => Ok(Value::Words(antipode_lc(w))),
                ("antipode", Value::Forests(f)) => Ok(Value::Forests(f.extend(forest_antipode))),
                ("counit", Value::Words(w)) => Ok(Value::Scalar(w.pair(counit_delta))),
                ("counit", Value::Forests(f)) => Ok(Value::Scalar(f.pair(forest_counit))),
                ("arborify", Value::Forests(f)) => Ok(Value::Words(arborify_lc(f))),
                ("arborify0", Value::Forests(f)) => Ok(Value::Words(f.extend(arborify_simple))),
                ("aut", Value::Forests(f)) => Ok(Value::Scalar(f.pair(aut_rational))),
                _ => type_error(n, a),
            }
        }
        "graft" => {
            arity(n, &args, 2)?;
            match (&args[0], &args[1]) {
                (Value::Forests(a), Value::Forests(b)) => {
                    let (s, t) = (single_tree(n, a)?, single_tree(n, b)?);
                    Ok(Value::Forests(graft(&s, &t).map_basis(|t| Forest::tree(t.clone()))))
                }
                (a, _) => type_error(n, a),
            }
        }
        "bplus" => {
            arity(n, &args, 2)?;
            match (&args[0], &args[1]) {
                (Value::Forests(b), Value::Forests(f)) => {
                    let root = single_tree(n, b)?;
                    if !root.children().is_empty() {
                        return crate::usage("`bplus` expects a decoration as first argument");
                    }
                    let d = *root.decoration();
                    Ok(Value::Forests(f.map_basis(|x| Forest::tree(bplus(d, x)))))
                }
                (a, _) => type_error(n, a),
            }
        }
        _ => crate::usage(format!("unknown operator `{}`", n)),
    }
}

/// Evaluates an expression; `max_weight` bounds generated symmetrel moulds.
pub fn eval(text: &str, max_weight: u32) -> Result<Value> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: text.len(),
        max_weight,
        _text: text,
    };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(v)
}
