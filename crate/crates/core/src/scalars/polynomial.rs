use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Name of a symbolic parameter such as `lambda` or `k3`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParameterName(Arc<str>);

impl ParameterName {
    /// Accepts `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Binding(format!("invalid parameter name `{name}`")));
        }
        Ok(ParameterName(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ParameterName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ParameterName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exact rational values for some parameters.
pub type Assignment = BTreeMap<ParameterName, BigRational>;

/// Power product of parameters, sparse and sorted by name, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(ParameterName, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(p: ParameterName) -> Self {
        Monomial(vec![(p, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(ParameterName, u32)] {
        &self.0
    }

    /// Product of the distinct variables.
    pub fn radical(&self) -> Self {
        Monomial(self.0.iter().map(|(p, _)| (p.clone(), 1)).collect())
    }

    pub fn exponent(&self, p: &ParameterName) -> u32 {
        self.0
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let (p, e) = match (self.0.get(i), other.0.get(j)) {
                (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                    Ordering::Less => {
                        i += 1;
                        (a, f(*ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (b, f(0, *eb))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (a, f(*ea, *eb))
                    }
                },
                (Some((a, ea)), None) => {
                    i += 1;
                    (a, f(*ea, 0))
                }
                (None, Some((b, eb))) => {
                    j += 1;
                    (b, f(0, *eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((p.clone(), e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        self.merge(other, |a, b| a + b)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|(p, e)| other.exponent(p) >= *e)
    }

    /// `self / other`; caller guarantees `other.divides(self)`.
    pub fn div(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a - b)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.min(b))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.max(b))
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<BigRational> {
        let mut acc = BigRational::one();
        for (p, e) in &self.0 {
            let v = assignment
                .get(p)
                .ok_or_else(|| Error::UnboundParameter(p.clone()))?;
            acc *= num_traits::pow(v.clone(), *e as usize);
        }
        Ok(acc)
    }
}

/// Graded lexicographic order; among equal degrees the earlier parameter name is
/// the more significant variable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (p, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multivariate polynomial with integer coefficients; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(p: ParameterName) -> Self {
        Polynomial::term(BigInt::one(), Monomial::var(p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn parameters(&self) -> BTreeSet<ParameterName> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(p, _)| p.clone()))
            .collect()
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// gcd of all monomials (the largest monomial dividing every term).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, c.clone());
        }
        Polynomial { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, -c);
        }
        Polynomial { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut terms, &ma.mul(mb), ca * cb);
            }
        }
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    /// Divides every coefficient by `k`; exactness is the caller's responsibility.
    pub(crate) fn div_exact_int(&self, k: &BigInt) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect(),
        }
    }

    pub(crate) fn div_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(n, c)| (n.div(m), c.clone())).collect(),
        }
    }

    /// Exact quotient over the integers, if `divisor` divides `self` with integer
    /// coefficients.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let (q, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm = rm.div(lm);
            rem = rem.sub(&divisor.mul(&Polynomial::term(q.clone(), qm.clone())));
            add_term(&mut quotient, &qm, q);
        }
        Some(Polynomial { terms: quotient })
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += m.eval(assignment)? * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Sign-normalized primitive part: content removed, leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.div_exact_int(&c)
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, m: &Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(m) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(m);
            }
        }
        None => {
            terms.insert(m.clone(), c);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if m.is_one() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{c}*{m}")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                if m.is_one() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{mag}*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> Polynomial {
        Polynomial::var(ParameterName::new(name).unwrap())
    }

    #[test]
    fn graded_lex_printing() {
        // (k9 - k1)(k5 - k9)
        let poly = p("k9").sub(&p("k1")).mul(&p("k5").sub(&p("k9")));
        assert_eq!(poly.to_string(), "-1*k1*k5 + k1*k9 + k5*k9 - k9^2");
    }

    #[test]
    fn exact_division() {
        let a = p("x").add(&p("y"));
        let b = p("x").sub(&p("y"));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&p("z")), None);
        assert_eq!(prod.scale(&BigInt::from(3)).exact_div(&b.scale(&BigInt::from(2))), None);
    }

    #[test]
    fn content_and_primitive() {
        let q = p("x").scale(&BigInt::from(-4)).add(&Polynomial::constant(BigInt::from(6)));
        assert_eq!(q.content(), BigInt::from(2));
        assert_eq!(q.primitive().to_string(), "2*x - 3");
        assert_eq!(q.mul(&p("x")).monomial_content().to_string(), "x");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(ParameterName::new("1k").is_err());
        assert!(ParameterName::new("").is_err());
        assert!(ParameterName::new("k_1").is_ok());
    }
}
