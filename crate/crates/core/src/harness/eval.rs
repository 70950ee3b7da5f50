//! Evaluation of a parsed document to ideals and graphs.

use crate::arith::{colon_ideal, colon_monomial, deletion, intersect, product, radical, sum};
use crate::error::{Budget, Error, Result};
use crate::graph::{cover_ideal, edge_ideal, GraphSpec};
use crate::harness::parser::{ColonArg, Expr, ExprKind, IdealDocument, MonomialText, Span};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Monomial, Ring, RingContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Ideal(MonomialIdeal),
    Graph(GraphSpec),
}

/// The ring and every binding of a document, in order.
#[derive(Debug, Clone)]
pub struct Environment {
    pub ring: Ring,
    pub values: Vec<(String, Value)>,
}

impl Environment {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// The named ideal, or the last ideal bound when `name` is `None`.
    pub fn ideal(&self, name: Option<&str>) -> Result<&MonomialIdeal> {
        let found = match name {
            Some(n) => match self.get(n) {
                Some(Value::Ideal(i)) => Some(i),
                Some(Value::Graph(_)) => {
                    return Err(Error::domain(format!("`{n}` is a graph, not an ideal")))
                }
                None => return Err(Error::domain(format!("no binding named `{n}`"))),
            },
            None => self.values.iter().rev().find_map(|(_, v)| match v {
                Value::Ideal(i) => Some(i),
                Value::Graph(_) => None,
            }),
        };
        found.ok_or_else(|| Error::domain("the document binds no ideal"))
    }

    /// The name [`Environment::ideal`] resolves to.
    pub fn ideal_name(&self, name: Option<&str>) -> Option<String> {
        match name {
            Some(n) => Some(n.to_string()),
            None => self
                .values
                .iter()
                .rev()
                .find(|(_, v)| matches!(v, Value::Ideal(_)))
                .map(|(n, _)| n.clone()),
        }
    }
}

fn located(span: Span, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        Error::Budget { .. } => e,
        other => Error::Parse {
            line: span.line,
            column: span.column,
            message: other.to_string(),
        },
    }
}

struct Evaluator<'a> {
    ring: Ring,
    env: &'a [(String, Value)],
    budget: &'a Budget,
}

impl Evaluator<'_> {
    fn var(&self, name: &str, span: Span) -> Result<usize> {
        self.ring
            .index_of(name)
            .ok_or_else(|| located(span, Error::domain(format!("unknown variable `{name}`"))))
    }

    fn monomial(&self, m: &MonomialText) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.nvars()];
        for (v, e) in &m.factors {
            let k = self.var(v, m.span)?;
            exps[k] = exps[k]
                .checked_add(*e)
                .ok_or_else(|| located(m.span, Error::Overflow("monomial exponent".into())))?;
        }
        Ok(Monomial::from_exponents(exps))
    }

    fn ideal(&self, e: &Expr) -> Result<MonomialIdeal> {
        match self.eval(e)? {
            Value::Ideal(i) => Ok(i),
            Value::Graph(_) => Err(located(
                e.span,
                Error::domain("expected an ideal, found a graph"),
            )),
        }
    }

    fn graph(&self, e: &Expr) -> Result<GraphSpec> {
        match self.eval(e)? {
            Value::Graph(g) => Ok(g),
            Value::Ideal(_) => Err(located(
                e.span,
                Error::domain("expected a graph, found an ideal"),
            )),
        }
    }

    fn fold(
        &self,
        xs: &[Expr],
        f: fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = self.ideal(&xs[0])?;
        for x in &xs[1..] {
            acc = f(&acc, &self.ideal(x)?)?;
            self.budget
                .check_generators("generators of an intermediate ideal", acc.len())?;
        }
        Ok(acc)
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        let span = e.span;
        let at = |r: Result<MonomialIdeal>| r.map(Value::Ideal).map_err(|err| located(span, err));
        match &e.kind {
            ExprKind::Name(n) => self
                .env
                .iter()
                .find(|(k, _)| k == n)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| located(span, Error::domain(format!("unbound name `{n}`")))),
            ExprKind::Ideal(ms) => {
                let gens = ms
                    .iter()
                    .map(|m| self.monomial(m))
                    .collect::<Result<Vec<_>>>()?;
                at(MonomialIdeal::new(&self.ring, gens))
            }
            ExprKind::Graph(edges) => GraphSpec::from_labelled_edges(edges)
                .map(Value::Graph)
                .map_err(|err| located(span, err)),
            ExprKind::Edge(g) => at(edge_ideal(&self.graph(g)?, &self.ring)),
            ExprKind::Cover(g) => at(cover_ideal(&self.graph(g)?, &self.ring)),
            ExprKind::Prime(vs) => {
                let idx = vs
                    .iter()
                    .map(|v| self.var(v, span))
                    .collect::<Result<Vec<_>>>()?;
                at(MonomialPrime::new(&self.ring, idx).map(|p| p.to_ideal()))
            }
            ExprKind::Power(x, n) => {
                let base = self.ideal(x)?;
                let mut acc = MonomialIdeal::unit(&self.ring);
                for _ in 0..*n {
                    acc = product(&acc, &base).map_err(|err| located(span, err))?;
                    self.budget
                        .check_generators(format!("generators of power {n}"), acc.len())?;
                }
                Ok(Value::Ideal(acc))
            }
            ExprKind::Colon(x, arg) => {
                let i = self.ideal(x)?;
                match arg {
                    ColonArg::Monomial(m) => at(colon_monomial(&i, &self.monomial(m)?)),
                    ColonArg::Ideal(j) => at(colon_ideal(&i, &self.ideal(j)?)),
                }
            }
            ExprKind::Delete(x, v) => at(deletion(&self.ideal(x)?, self.var(v, span)?)),
            ExprKind::Radical(x) => Ok(Value::Ideal(radical(&self.ideal(x)?))),
            ExprKind::Sum(xs) => at(self.fold(xs, sum)),
            ExprKind::Product(xs) => at(self.fold(xs, product)),
            ExprKind::Intersect(xs) => at(self.fold(xs, intersect)),
        }
    }
}

impl IdealDocument {
    pub fn ring(&self) -> Result<Ring> {
        RingContext::new(self.ring.variable_names())
    }

    pub fn evaluate(&self, budget: &Budget) -> Result<Environment> {
        let ring = self.ring()?;
        let mut values: Vec<(String, Value)> = Vec::with_capacity(self.bindings.len());
        for b in &self.bindings {
            let v = Evaluator {
                ring: ring.clone(),
                env: &values,
                budget,
            }
            .eval(&b.expr)?;
            values.push((b.name.clone(), v));
        }
        Ok(Environment { ring, values })
    }
}
