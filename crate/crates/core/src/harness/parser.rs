//! Ideal documents: a ring declaration followed by named bindings.
//!
//! ```text
//! ring x1..x7;
//! I = ideal(x1*x3*x6, x1*x3*x7);
//! G = graph(1-2, 2-3);
//! J = cover(G);
//! K = power(I, 2);
//! ```
//!
//! The grammar is in `docs/grammar.md`. Spans record where each node
//! started; they are ignored by equality so that a printed document
//! reparses to an equal one.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDecl {
    /// `ring 7;` declares `x1..x7`.
    Count(usize),
    /// `ring y1..y4;`
    Range {
        prefix: String,
        from: usize,
        to: usize,
    },
    /// `ring a, b, c;`
    Names(Vec<String>),
}

impl RingDecl {
    pub fn variable_names(&self) -> Vec<String> {
        match self {
            RingDecl::Count(n) => (1..=*n).map(|k| format!("x{k}")).collect(),
            RingDecl::Range { prefix, from, to } => {
                (*from..=*to).map(|k| format!("{prefix}{k}")).collect()
            }
            RingDecl::Names(names) => names.clone(),
        }
    }
}

/// A monomial as written: `(variable, exponent)` factors, empty for `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialText {
    pub factors: Vec<(String, u32)>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColonArg {
    Monomial(MonomialText),
    Ideal(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Name(String),
    Ideal(Vec<MonomialText>),
    Graph(Vec<(String, String)>),
    Edge(Box<Expr>),
    Cover(Box<Expr>),
    Prime(Vec<String>),
    Power(Box<Expr>, u32),
    Colon(Box<Expr>, ColonArg),
    Delete(Box<Expr>, String),
    Radical(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Intersect(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub expr: Expr,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub ring: RingDecl,
    pub bindings: Vec<Binding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Punct(&'static str),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Punct(p) => write!(f, "`{p}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

const PUNCT: [&str; 10] = ["..", "(", ")", ",", ";", "=", "*", "^", "+", "-"];

fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let span = Span { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            col += k - start;
            out.push((Tok::Ident(chars[start..k].iter().collect()), span));
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            let n = s
                .parse::<u64>()
                .map_err(|_| parse_error(span, "integer too large"))?;
            col += k - start;
            out.push((Tok::Int(n), span));
            continue;
        }
        let rest: String = chars[k..chars.len().min(k + 2)].iter().collect();
        match PUNCT.iter().find(|p| rest.starts_with(**p)) {
            Some(p) => {
                k += p.len();
                col += p.len();
                out.push((Tok::Punct(p), span));
            }
            None => return Err(parse_error(span, format!("unexpected character `{c}`"))),
        }
    }
    out.push((Tok::End, Span { line, column: col }));
    Ok(out)
}

fn parse_error(span: Span, message: impl Into<String>) -> Error {
    Error::Parse {
        line: span.line,
        column: span.column,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ideal,
    Graph,
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    vars: Vec<String>,
    bound: BTreeMap<String, Kind>,
}

const FUNCTIONS: [&str; 13] = [
    "ideal",
    "graph",
    "edge",
    "cover",
    "prime",
    "power",
    "colon",
    "delete",
    "radical",
    "sum",
    "product",
    "intersect",
    "ring",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, p: &'static str) -> Result<Span> {
        let (t, span) = self.next();
        if t == Tok::Punct(p) {
            Ok(span)
        } else {
            Err(parse_error(span, format!("expected `{p}`, found {t}")))
        }
    }

    fn eat(&mut self, p: &'static str) -> bool {
        if *self.peek() == Tok::Punct(p) {
            self.next();
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Span)> {
        match self.next() {
            (Tok::Ident(s), span) => Ok((s, span)),
            (t, span) => Err(parse_error(span, format!("expected {what}, found {t}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, Span)> {
        match self.next() {
            (Tok::Int(n), span) => Ok((n, span)),
            (t, span) => Err(parse_error(span, format!("expected {what}, found {t}"))),
        }
    }

    fn ring_decl(&mut self) -> Result<RingDecl> {
        let (kw, span) = self.ident("`ring`")?;
        if kw != "ring" {
            return Err(parse_error(
                span,
                "a document starts with a `ring` declaration",
            ));
        }
        let decl = if let Tok::Int(_) = self.peek() {
            let (n, span) = self.int("a variable count")?;
            if n == 0 || n > 4096 {
                return Err(parse_error(
                    span,
                    "the variable count must be between 1 and 4096",
                ));
            }
            RingDecl::Count(n as usize)
        } else {
            let (first, span) = self.ident("a variable name")?;
            if self.eat("..") {
                let (last, last_span) = self.ident("a variable name")?;
                let (p1, a) = split_index(&first).ok_or_else(|| {
                    parse_error(span, "a range bound must end in digits, like `x1`")
                })?;
                let (p2, b) = split_index(&last).ok_or_else(|| {
                    parse_error(last_span, "a range bound must end in digits, like `x7`")
                })?;
                if p1 != p2 || a > b || b - a >= 4096 {
                    return Err(parse_error(span, format!("invalid range {first}..{last}")));
                }
                RingDecl::Range {
                    prefix: p1.to_string(),
                    from: a,
                    to: b,
                }
            } else {
                let mut names = vec![first];
                while self.eat(",") {
                    names.push(self.ident("a variable name")?.0);
                }
                RingDecl::Names(names)
            }
        };
        self.expect(";")?;
        let names = decl.variable_names();
        for name in &names {
            if FUNCTIONS.contains(&name.as_str()) {
                return Err(parse_error(span, format!("`{name}` is reserved")));
            }
        }
        crate::monomial::RingContext::new(names.clone())
            .map_err(|e| parse_error(span, e.to_string()))?;
        self.vars = names;
        Ok(decl)
    }

    fn is_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name)
    }

    fn document(&mut self) -> Result<IdealDocument> {
        let ring = self.ring_decl()?;
        let mut bindings = Vec::new();
        while *self.peek() != Tok::End {
            let (name, span) = self.ident("a binding name")?;
            if self.is_var(&name) {
                return Err(parse_error(
                    span,
                    format!("`{name}` is a variable of the ring"),
                ));
            }
            if FUNCTIONS.contains(&name.as_str()) {
                return Err(parse_error(span, format!("`{name}` is reserved")));
            }
            if self.bound.contains_key(&name) {
                return Err(parse_error(span, format!("`{name}` is already bound")));
            }
            self.expect("=")?;
            let (expr, kind) = self.expr()?;
            self.expect(";")?;
            self.bound.insert(name.clone(), kind);
            bindings.push(Binding { name, expr, span });
        }
        Ok(IdealDocument { ring, bindings })
    }

    fn require(&self, kind: Kind, got: Kind, span: Span) -> Result<()> {
        if kind == got {
            return Ok(());
        }
        let want = match kind {
            Kind::Ideal => "an ideal",
            Kind::Graph => "a graph",
        };
        Err(parse_error(span, format!("expected {want}")))
    }

    fn ideal_expr(&mut self) -> Result<Expr> {
        let span = self.span();
        let (e, k) = self.expr()?;
        self.require(Kind::Ideal, k, span)?;
        Ok(e)
    }

    /// `expr = product { "+" product }`
    fn expr(&mut self) -> Result<(Expr, Kind)> {
        let span = self.span();
        let (first, kind) = self.product()?;
        if *self.peek() != Tok::Punct("+") {
            return Ok((first, kind));
        }
        self.require(Kind::Ideal, kind, span)?;
        let mut terms = vec![first];
        while self.eat("+") {
            let s = self.span();
            let (t, k) = self.product()?;
            self.require(Kind::Ideal, k, s)?;
            terms.push(t);
        }
        Ok((
            Expr {
                kind: ExprKind::Sum(terms),
                span,
            },
            Kind::Ideal,
        ))
    }

    /// `product = atom { "*" atom }`
    fn product(&mut self) -> Result<(Expr, Kind)> {
        let span = self.span();
        let (first, kind) = self.atom()?;
        if *self.peek() != Tok::Punct("*") {
            return Ok((first, kind));
        }
        self.require(Kind::Ideal, kind, span)?;
        let mut factors = vec![first];
        while self.eat("*") {
            let s = self.span();
            let (t, k) = self.atom()?;
            self.require(Kind::Ideal, k, s)?;
            factors.push(t);
        }
        Ok((
            Expr {
                kind: ExprKind::Product(factors),
                span,
            },
            Kind::Ideal,
        ))
    }

    fn atom(&mut self) -> Result<(Expr, Kind)> {
        if self.eat("(") {
            let (e, k) = self.expr()?;
            self.expect(")")?;
            return Ok((e, k));
        }
        let (name, span) = match self.next() {
            (Tok::Ident(s), span) => (s, span),
            (t, span) => {
                return Err(parse_error(
                    span,
                    format!("expected an expression, found {t}"),
                ))
            }
        };
        if *self.peek() != Tok::Punct("(") {
            if self.is_var(&name) {
                return Err(parse_error(
                    span,
                    format!(
                        "`{name}` is a variable; write ideal({name}) for the ideal it generates"
                    ),
                ));
            }
            return match self.bound.get(&name) {
                Some(&k) => Ok((
                    Expr {
                        kind: ExprKind::Name(name),
                        span,
                    },
                    k,
                )),
                None => Err(parse_error(span, format!("unbound name `{name}`"))),
            };
        }
        self.expect("(")?;
        let (kind, k) = match name.as_str() {
            "ideal" => (ExprKind::Ideal(self.monomial_list()?), Kind::Ideal),
            "graph" => (ExprKind::Graph(self.edge_list()?), Kind::Graph),
            "edge" | "cover" => {
                let s = self.span();
                let (g, gk) = self.expr()?;
                self.require(Kind::Graph, gk, s)?;
                let b = Box::new(g);
                (
                    if name == "edge" {
                        ExprKind::Edge(b)
                    } else {
                        ExprKind::Cover(b)
                    },
                    Kind::Ideal,
                )
            }
            "prime" => {
                let mut vars = Vec::new();
                if *self.peek() != Tok::Punct(")") {
                    loop {
                        vars.push(self.variable()?);
                        if !self.eat(",") {
                            break;
                        }
                    }
                }
                (ExprKind::Prime(vars), Kind::Ideal)
            }
            "power" => {
                let e = self.ideal_expr()?;
                self.expect(",")?;
                let (n, s) = self.int("an exponent")?;
                let n = u32::try_from(n).map_err(|_| parse_error(s, "exponent too large"))?;
                (ExprKind::Power(Box::new(e), n), Kind::Ideal)
            }
            "colon" => {
                let e = self.ideal_expr()?;
                self.expect(",")?;
                let arg = match self.peek().clone() {
                    Tok::Ident(ref s) if self.is_var(s) => ColonArg::Monomial(self.monomial()?),
                    Tok::Int(1) => ColonArg::Monomial(self.monomial()?),
                    _ => ColonArg::Ideal(Box::new(self.ideal_expr()?)),
                };
                (ExprKind::Colon(Box::new(e), arg), Kind::Ideal)
            }
            "delete" => {
                let e = self.ideal_expr()?;
                self.expect(",")?;
                let v = self.variable()?;
                (ExprKind::Delete(Box::new(e), v), Kind::Ideal)
            }
            "radical" => (ExprKind::Radical(Box::new(self.ideal_expr()?)), Kind::Ideal),
            "sum" | "product" | "intersect" => {
                let mut args = vec![self.ideal_expr()?];
                while self.eat(",") {
                    args.push(self.ideal_expr()?);
                }
                (
                    match name.as_str() {
                        "sum" => ExprKind::Sum(args),
                        "product" => ExprKind::Product(args),
                        _ => ExprKind::Intersect(args),
                    },
                    Kind::Ideal,
                )
            }
            other => return Err(parse_error(span, format!("unknown function `{other}`"))),
        };
        self.expect(")")?;
        Ok((Expr { kind, span }, k))
    }

    fn variable(&mut self) -> Result<String> {
        let (name, span) = self.ident("a variable")?;
        if !self.is_var(&name) {
            return Err(parse_error(
                span,
                format!("`{name}` is not a variable of the ring"),
            ));
        }
        Ok(name)
    }

    fn monomial(&mut self) -> Result<MonomialText> {
        let span = self.span();
        if let Tok::Int(1) = self.peek() {
            self.next();
            return Ok(MonomialText {
                factors: Vec::new(),
                span,
            });
        }
        let mut factors = Vec::new();
        loop {
            let v = self.variable()?;
            let mut e = 1u32;
            if self.eat("^") {
                let (n, s) = self.int("an exponent")?;
                e = u32::try_from(n).map_err(|_| parse_error(s, "exponent too large"))?;
                if e == 0 {
                    return Err(parse_error(s, "exponents must be positive"));
                }
            }
            factors.push((v, e));
            if !self.eat("*") {
                break;
            }
        }
        Ok(MonomialText { factors, span })
    }

    fn monomial_list(&mut self) -> Result<Vec<MonomialText>> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Punct(")") {
            return Ok(out);
        }
        loop {
            out.push(self.monomial()?);
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn label(&mut self) -> Result<String> {
        match self.next() {
            (Tok::Int(n), _) => Ok(n.to_string()),
            (Tok::Ident(s), _) => Ok(s),
            (t, span) => Err(parse_error(
                span,
                format!("expected a vertex label, found {t}"),
            )),
        }
    }

    fn edge_list(&mut self) -> Result<Vec<(String, String)>> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Punct(")") {
            return Ok(out);
        }
        loop {
            let a = self.label()?;
            self.expect("-")?;
            let b = self.label()?;
            out.push((a, b));
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }
}

fn split_index(name: &str) -> Option<(&str, usize)> {
    let cut = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if cut == name.len() || cut == 0 {
        return None;
    }
    name[cut..].parse().ok().map(|n| (&name[..cut], n))
}

/// Parses a document, checking variable names, binding order and the
/// ideal/graph kind of every argument.
pub fn parse_ideal_document(text: &str) -> Result<IdealDocument> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        vars: Vec::new(),
        bound: BTreeMap::new(),
    };
    p.document()
}

impl fmt::Display for MonomialText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(v)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Name(n) => f.write_str(n),
            ExprKind::Ideal(ms) => {
                f.write_str("ideal(")?;
                write_list(f, ms)?;
                f.write_str(")")
            }
            ExprKind::Graph(edges) => {
                f.write_str("graph(")?;
                let parts: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write_list(f, &parts)?;
                f.write_str(")")
            }
            ExprKind::Edge(g) => write!(f, "edge({g})"),
            ExprKind::Cover(g) => write!(f, "cover({g})"),
            ExprKind::Prime(vs) => {
                f.write_str("prime(")?;
                write_list(f, vs)?;
                f.write_str(")")
            }
            ExprKind::Power(e, n) => write!(f, "power({e}, {n})"),
            ExprKind::Colon(e, ColonArg::Monomial(m)) => write!(f, "colon({e}, {m})"),
            ExprKind::Colon(e, ColonArg::Ideal(j)) => write!(f, "colon({e}, {j})"),
            ExprKind::Delete(e, v) => write!(f, "delete({e}, {v})"),
            ExprKind::Radical(e) => write!(f, "radical({e})"),
            ExprKind::Sum(xs) => {
                f.write_str("sum(")?;
                write_list(f, xs)?;
                f.write_str(")")
            }
            ExprKind::Product(xs) => {
                f.write_str("product(")?;
                write_list(f, xs)?;
                f.write_str(")")
            }
            ExprKind::Intersect(xs) => {
                f.write_str("intersect(")?;
                write_list(f, xs)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDecl::Count(n) => write!(f, "ring {n};"),
            RingDecl::Range { prefix, from, to } => write!(f, "ring {prefix}{from}..{prefix}{to};"),
            RingDecl::Names(names) => {
                f.write_str("ring ")?;
                write_list(f, names)?;
                f.write_str(";")
            }
        }
    }
}

/// One statement per line; `+` and `*` print as `sum(...)` and
/// `product(...)`, which parse back to the same tree.
impl fmt::Display for IdealDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        for b in &self.bindings {
            writeln!(f, "{} = {};", b.name, b.expr)?;
        }
        Ok(())
    }
}
