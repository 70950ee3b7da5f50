//! Rings of variables and dense-exponent monomials.
//!
//! Variable indices are 0-based everywhere in the API; names are only used
//! for parsing and printing. A monomial does not carry its ring: its length
//! is the number of variables, and ideals carry the ring they live in.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The polynomial ring `K[x_1, ..., x_n]`, reduced to its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

/// Shared handle to a ring context.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::domain("variable names must be nonempty"));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::domain(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Arc::new(RingContext { names }))
    }

    /// Ring with variables named `x1..xn`.
    pub fn with_vars(nvars: usize) -> Result<Ring> {
        RingContext::new((1..=nvars).map(|i| format!("x{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.nvars() {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars(),
            });
        }
        Ok(())
    }

    /// Parses `x1*x3^2*x6` (or `1`) against this ring's variable names.
    pub fn monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; self.nvars()];
        if text == "1" {
            return Ok(Monomial::from_exponents(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let exp: u32 = exp.trim().parse().map_err(|_| {
                        Error::domain(format!("bad exponent in monomial factor `{factor}`"))
                    })?;
                    (name.trim(), exp)
                }
                None => (factor, 1),
            };
            let index = self
                .index_of(name)
                .ok_or_else(|| Error::domain(format!("unknown variable `{name}`")))?;
            exps[index] = exps[index]
                .checked_add(exp)
                .ok_or_else(|| Error::Overflow(format!("monomial `{text}`")))?;
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// Formats a monomial with this ring's names, e.g. `x1^2*x3`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!(
            "ring [{}] vs ring [{}]",
            a.names.join(","),
            b.names.join(",")
        )))
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// `Ord` is the canonical generator order: total degree ascending, ties
/// broken lexicographically with `x_1` heaviest, so `x1^2 < x1*x2 < x2^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn from_exponents(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::from_exponents(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::from_exponents(exps)
    }

    /// Product of the variables with the given indices.
    pub fn product_of_vars(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for i in indices {
            exps[i] = 1;
        }
        Monomial::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.support_iter().collect()
    }

    pub fn support_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Componentwise `<=`. Both monomials must have the same length.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// `self / gcd(self, other)`, the colon quotient of a generator.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(
                a.checked_add(*b)
                    .ok_or_else(|| Error::Overflow("monomial product".into()))?,
            );
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// `self / other`; fails unless `other` divides `self`.
    pub fn div_exact(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::Arithmetic(
                "exact division by a monomial that does not divide".into(),
            ));
        }
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Same monomial with every positive exponent replaced by 1.
    pub fn radical(&self) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|&e| e.min(1)).collect::<Vec<_>>())
    }

    pub fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[index] = exp;
        Monomial::from_exponents(exps)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect::<Vec<_>>(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

fn check_lengths(u: &Monomial, v: &Monomial) -> Result<()> {
    if u.nvars() != v.nvars() {
        return Err(Error::ContextMismatch(format!(
            "monomials over {} and {} variables",
            u.nvars(),
            v.nvars()
        )));
    }
    Ok(())
}

pub fn divides(u: &Monomial, v: &Monomial) -> Result<bool> {
    check_lengths(u, v)?;
    Ok(u.divides(v))
}

pub fn lcm(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_lengths(u, v)?;
    Ok(u.lcm(v))
}

pub fn gcd(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_lengths(u, v)?;
    Ok(u.gcd(v))
}

pub fn mul(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_lengths(u, v)?;
    u.checked_mul(v)
}

pub fn div_exact(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_lengths(u, v)?;
    u.div_exact(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        RingContext::with_vars(n).unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(RingContext::new(Vec::<String>::new()).is_err());
        assert!(RingContext::new(["a", "a"]).is_err());
        assert!(RingContext::new(["a", ""]).is_err());
        let r = ring(3);
        assert_eq!(r.names(), &["x1", "x2", "x3"]);
        assert!(r.check_index(3).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let r = ring(3);
        let x1 = r.monomial("x1").unwrap();
        let x1x2 = r.monomial("x1*x2").unwrap();
        assert!(divides(&x1, &x1x2).unwrap());
        assert!(!divides(&x1x2, &x1).unwrap());
        assert!(divides(&Monomial::one(3), &x1x2).unwrap());
        assert!(divides(&x1, &Monomial::one(2)).is_err());
    }

    #[test]
    fn lcm_gcd_mul_examples() {
        let r = ring(7);
        let m = |s| r.monomial(s).unwrap();
        assert_eq!(lcm(&m("x1*x2"), &m("x2*x3")).unwrap(), m("x1*x2*x3"));
        assert_eq!(
            gcd(&m("x1*x3*x6"), &m("x2*x4*x7")).unwrap(),
            Monomial::one(7)
        );
        assert_eq!(mul(&m("x1"), &m("x1")).unwrap(), m("x1^2"));
        assert_eq!(div_exact(&m("x1^2*x2"), &m("x1")).unwrap(), m("x1*x2"));
        assert!(div_exact(&m("x1"), &m("x2")).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Monomial::from_exponents(vec![u32::MAX, 0]);
        let x1 = Monomial::var(2, 0);
        assert!(matches!(mul(&big, &x1), Err(Error::Overflow(_))));
    }

    #[test]
    fn support_and_formatting() {
        let r = ring(7);
        let v = r.monomial("x1*x3*x6").unwrap();
        assert_eq!(v.support(), BTreeSet::from([0, 2, 5]));
        assert!(Monomial::one(7).support().is_empty());
        assert_eq!(
            r.format_monomial(&r.monomial("x2^3*x1").unwrap()),
            "x1*x2^3"
        );
        assert_eq!(r.format_monomial(&Monomial::one(7)), "1");
        assert!(r.monomial("x9").is_err());
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let r = ring(2);
        let mut v: Vec<_> = ["x2^2", "x1*x2", "x1^2", "x1"]
            .iter()
            .map(|s| r.monomial(s).unwrap())
            .collect();
        v.sort();
        let printed: Vec<_> = v.iter().map(|m| r.format_monomial(m)).collect();
        assert_eq!(printed, ["x1", "x1^2", "x1*x2", "x2^2"]);
    }
}
