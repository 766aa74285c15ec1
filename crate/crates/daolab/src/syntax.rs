//! Session language: tokens, AST, parser and canonical printer.
//!
//! ```text
//! statement  := (ring_decl | ideal_decl | command) ";"
//! ring_decl  := "ring" ID "=" field "[" idlist "]" ("/" "(" polylist ")")? mode?
//! field      := "Q" | "F" natural
//! mode       := "graded" | "local"
//! ideal_decl := "ideal" ID "=" "(" polylist ")" ("^" natural)?
//! command    := ("compute" | "verify" | "explore" | "resolve") arg*
//! arg        := ID | ID "=" value
//! value      := ID | natural | natural ".." natural
//! ```
//!
//! Polynomials: `+ - *` with `^` for powers, `*` may be omitted, coefficients are
//! integers or `a/b`. Comments run from `#` or `//` to the end of the line.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diag::{Diagnostic, Pos};

#[derive(Clone, Debug)]
pub struct Located<T> {
    pub node: T,
    pub pos: Pos,
}

impl<T: PartialEq> PartialEq for Located<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Located<T> {}

impl<T> Located<T> {
    pub fn new(node: T, pos: Pos) -> Self {
        Located { node, pos }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Non-negative `num/den` with `den > 0`.
    Num(BigInt, BigInt),
    Var(Located<String>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{}", p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeSpec {
    Graded,
    Local,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub relations: Vec<Expr>,
    pub mode: Option<ModeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub gens: Vec<Expr>,
    pub power: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verb {
    Compute,
    Verify,
    Explore,
    Resolve,
}

impl Verb {
    pub fn keyword(self) -> &'static str {
        match self {
            Verb::Compute => "compute",
            Verb::Verify => "verify",
            Verb::Explore => "explore",
            Verb::Resolve => "resolve",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Word(String),
    Int(u64),
    Range(u64, u64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Word(w) => write!(f, "{}", w),
            Value::Int(n) => write!(f, "{}", n),
            Value::Range(a, b) => write!(f, "{}..{}", a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Word(Located<String>),
    Pair(Located<String>, Value),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub args: Vec<Arg>,
}

impl Command {
    pub fn words(&self) -> impl Iterator<Item = &Located<String>> {
        self.args.iter().filter_map(|a| match a {
            Arg::Word(w) => Some(w),
            Arg::Pair(..) => None,
        })
    }

    pub fn option(&self, key: &str) -> Option<&Value> {
        self.args.iter().rev().find_map(|a| match a {
            Arg::Pair(k, v) if k.node == key => Some(v),
            _ => None,
        })
    }

    pub fn options(&self) -> impl Iterator<Item = (&Located<String>, &Value)> {
        self.args.iter().filter_map(|a| match a {
            Arg::Pair(k, v) => Some((k, v)),
            Arg::Word(_) => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDecl),
    Ideal(IdealDecl),
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionScript {
    pub statements: Vec<Located<Statement>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigInt),
    Sym(&'static str),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{}`", s),
            Tok::Num(n) => format!("`{}`", n),
            Tok::Sym(s) => format!("`{}`", s),
            Tok::Eof => String::from("end of input"),
        }
    }
}

const SYMBOLS: [&str; 13] = ["..", "=", "[", "]", "(", ")", ",", ";", "/", "+", "-", "*", "^"];

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, Diagnostic> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    // End of input is reported just past the last token, not on trailing blank lines.
    let mut end = Pos { line: 1, col: 1 };
    while i < chars.len() {
        if out.last().is_some_and(|t: &(Tok, Pos)| t.1 > end) {
            end = Pos { line, col };
        }
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Num(s.parse().expect("digits")), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        let rest: String = chars[i..(i + 2).min(chars.len())].iter().collect();
        let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
            return Err(Diagnostic::new(pos, format!("unexpected character `{}`", c)));
        };
        i += sym.len();
        col += sym.len();
        out.push((Tok::Sym(sym), pos));
    }
    if out.last().is_some_and(|t| t.1 > end) {
        end = Pos { line, col };
    }
    out.push((Tok::Eof, end));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &str) -> Diagnostic {
        Diagnostic::new(self.pos(), format!("expected {}, found {}", what, self.peek().describe()))
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.expected(&format!("`{}`", s)))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<Located<String>> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.pos();
                self.bump();
                Ok(Located::new(s, pos))
            }
            _ => Err(self.expected(what)),
        }
    }

    fn natural(&mut self, what: &str) -> PResult<u64> {
        match self.peek().clone() {
            Tok::Num(n) => {
                let pos = self.pos();
                self.bump();
                u64::try_from(n).map_err(|_| Diagnostic::new(pos, "number too large"))
            }
            _ => Err(self.expected(what)),
        }
    }

    fn statement(&mut self) -> PResult<Located<Statement>> {
        let pos = self.pos();
        let kw = self.ident("a statement")?;
        let stmt = match kw.node.as_str() {
            "ring" => Statement::Ring(self.ring_decl()?),
            "ideal" => Statement::Ideal(self.ideal_decl()?),
            "compute" => Statement::Command(self.command(Verb::Compute)?),
            "verify" => Statement::Command(self.command(Verb::Verify)?),
            "explore" => Statement::Command(self.command(Verb::Explore)?),
            "resolve" => Statement::Command(self.command(Verb::Resolve)?),
            other => {
                return Err(Diagnostic::new(
                    pos,
                    format!("unknown statement `{}`; expected ring, ideal, compute, verify, explore or resolve", other),
                ))
            }
        };
        self.expect_sym(";")?;
        Ok(Located::new(stmt, pos))
    }

    fn ring_decl(&mut self) -> PResult<RingDecl> {
        let name = self.ident("a ring name")?.node;
        self.expect_sym("=")?;
        let f = self.ident("a field (`Q` or `F<prime>`)")?;
        let field = parse_field(&f.node).map_err(|m| Diagnostic::new(f.pos, m))?;
        self.expect_sym("[")?;
        let mut vars: Vec<String> = Vec::new();
        loop {
            let v = self.ident("a variable name")?;
            if vars.contains(&v.node) {
                return Err(Diagnostic::new(v.pos, format!("variable `{}` declared twice", v.node)));
            }
            vars.push(v.node);
            if !self.eat_sym(",") {
                break;
            }
        }
        self.expect_sym("]")?;
        let mut relations = Vec::new();
        if self.eat_sym("/") {
            self.expect_sym("(")?;
            relations = self.polylist()?;
            self.expect_sym(")")?;
        }
        let mode = match self.peek() {
            Tok::Ident(s) if s == "graded" => Some(ModeSpec::Graded),
            Tok::Ident(s) if s == "local" => Some(ModeSpec::Local),
            Tok::Ident(s) => {
                let s = s.clone();
                return Err(Diagnostic::new(self.pos(), format!("unknown mode `{}`; expected graded or local", s)));
            }
            _ => None,
        };
        if mode.is_some() {
            self.bump();
        }
        Ok(RingDecl { name, field, vars, relations, mode })
    }

    fn ideal_decl(&mut self) -> PResult<IdealDecl> {
        let name = self.ident("an ideal name")?.node;
        self.expect_sym("=")?;
        self.expect_sym("(")?;
        let gens = self.polylist()?;
        self.expect_sym(")")?;
        let power = if self.eat_sym("^") {
            let pos = self.pos();
            let k = self.natural("an exponent")?;
            Some(u32::try_from(k).map_err(|_| Diagnostic::new(pos, "exponent too large"))?)
        } else {
            None
        };
        Ok(IdealDecl { name, gens, power })
    }

    fn command(&mut self, verb: Verb) -> PResult<Command> {
        let mut args = Vec::new();
        while let Tok::Ident(_) = self.peek() {
            let key = self.ident("an argument")?;
            if self.eat_sym("=") {
                let value = match self.peek().clone() {
                    Tok::Ident(w) => {
                        self.bump();
                        Value::Word(w)
                    }
                    Tok::Num(_) => {
                        let a = self.natural("a number")?;
                        if self.eat_sym("..") {
                            Value::Range(a, self.natural("a range end")?)
                        } else {
                            Value::Int(a)
                        }
                    }
                    _ => return Err(self.expected("a value")),
                };
                args.push(Arg::Pair(key, value));
            } else {
                args.push(Arg::Word(key));
            }
        }
        Ok(Command { verb, args })
    }

    fn polylist(&mut self) -> PResult<Vec<Expr>> {
        let mut v = vec![self.expr()?];
        while self.eat_sym(",") {
            v.push(self.expr()?);
        }
        Ok(v)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat_sym("+") {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat_sym("-") {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Num(_)) || self.is_sym("(")
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym("*") || self.starts_factor() {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym("^") {
            let pos = self.pos();
            let k = self.natural("an exponent")?;
            let k = u32::try_from(k).ok().filter(|&k| k <= 1 << 15).ok_or_else(|| Diagnostic::new(pos, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                if self.is_sym("/") && matches!(self.toks[self.at + 1].0, Tok::Num(_)) {
                    self.bump();
                    let pos = self.pos();
                    let Tok::Num(d) = self.bump().0 else { unreachable!() };
                    if d.is_zero() {
                        return Err(Diagnostic::new(pos, "division by zero"));
                    }
                    return Ok(Expr::Num(n, d));
                }
                Ok(Expr::Num(n, BigInt::one()))
            }
            Tok::Ident(s) => {
                let pos = self.pos();
                self.bump();
                Ok(Expr::Var(Located::new(s, pos)))
            }
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => Err(self.expected("a polynomial")),
        }
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = s.strip_prefix('F').filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()));
    let Some(d) = digits else {
        return Err(format!("unknown field `{}`; expected Q or F<prime>", s));
    };
    let p: u64 = d.parse().map_err(|_| format!("modulus `{}` too large", d))?;
    if !daolab_core::field::is_prime(p) {
        return Err(format!("modulus {} is composite", p));
    }
    if p == 2 || p > daolab_core::field::MAX_PRIME {
        return Err(format!("modulus {} outside the supported range (odd primes below 2^31)", p));
    }
    Ok(FieldSpec::Prime(p))
}

pub fn parse_session(text: &str) -> Result<SessionScript, Diagnostic> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let mut statements = Vec::new();
    while *p.peek() != Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(SessionScript { statements })
}

/// Parses a single polynomial expression.
pub fn parse_expr(text: &str) -> Result<Expr, Diagnostic> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.expected("end of input"));
    }
    Ok(e)
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Neg(_) => 2,
        Expr::Pow(..) => 3,
        Expr::Num(_, d) if !d.is_one() => 3,
        Expr::Num(..) | Expr::Var(_) => 4,
    }
}

fn write_expr(out: &mut String, e: &Expr, min: u8) {
    let wrap = level(e) < min;
    if wrap {
        out.push('(');
    }
    match e {
        Expr::Num(n, d) => {
            if d.is_one() {
                let _ = write!(out, "{}", n);
            } else {
                let _ = write!(out, "{}/{}", n, d);
            }
        }
        Expr::Var(v) => out.push_str(&v.node),
        Expr::Neg(a) => {
            out.push('-');
            write_expr(out, a, 2);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            write_expr(out, a, 0);
            out.push_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " });
            write_expr(out, b, 1);
        }
        Expr::Mul(a, b) => {
            write_expr(out, a, 1);
            out.push('*');
            write_expr(out, b, 2);
        }
        Expr::Pow(a, k) => {
            write_expr(out, a, 4);
            let _ = write!(out, "^{}", k);
        }
    }
    if wrap {
        out.push(')');
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, 0);
    s
}

fn print_list(es: &[Expr]) -> String {
    es.iter().map(print_expr).collect::<Vec<_>>().join(", ")
}

pub fn print_statement(s: &Statement) -> String {
    match s {
        Statement::Ring(r) => {
            let mut out = format!("ring {} = {}[{}]", r.name, r.field, r.vars.join(","));
            if !r.relations.is_empty() {
                let _ = write!(out, "/({})", print_list(&r.relations));
            }
            match r.mode {
                Some(ModeSpec::Graded) => out.push_str(" graded"),
                Some(ModeSpec::Local) => out.push_str(" local"),
                None => {}
            }
            out.push(';');
            out
        }
        Statement::Ideal(i) => {
            let mut out = format!("ideal {} = ({})", i.name, print_list(&i.gens));
            if let Some(k) = i.power {
                let _ = write!(out, "^{}", k);
            }
            out.push(';');
            out
        }
        Statement::Command(c) => {
            let mut out = String::from(c.verb.keyword());
            for a in &c.args {
                match a {
                    Arg::Word(w) => {
                        let _ = write!(out, " {}", w.node);
                    }
                    Arg::Pair(k, v) => {
                        let _ = write!(out, " {}={}", k.node, v);
                    }
                }
            }
            out.push(';');
            out
        }
    }
}

/// Canonical text: one statement per line.
pub fn print_session(s: &SessionScript) -> String {
    let mut out = String::new();
    for st in &s.statements {
        out.push_str(&print_statement(&st.node));
        out.push('\n');
    }
    out
}
