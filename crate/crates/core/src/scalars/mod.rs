//! Exact scalars: rational functions with integer-coefficient numerator and denominator
//! over named parameters.

mod expr;
mod polynomial;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use expr::parse_scalar;
pub use polynomial::{Assignment, Monomial, ParameterName, Polynomial};

/// Quotient of two polynomials. The denominator is never zero and its leading
/// coefficient is positive after normalization.
#[derive(Clone)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(Polynomial::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_poly(Polynomial::constant(n))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Scalar::new(
            Polynomial::constant(q.numer().clone()),
            Polynomial::constant(q.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn param(name: &str) -> Result<Self> {
        Ok(Scalar::from_poly(Polynomial::var(ParameterName::new(name)?)))
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() {
            let g = num.monomial_content().gcd(&den.monomial_content());
            if !g.is_one() {
                num = num.div_monomial(&g);
                den = den.div_monomial(&g);
            }
        }
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_exact_int(&g);
            den = den.div_exact_int(&g);
        }
        if !den.is_constant() {
            if let Some(q) = num.exact_div(&den) {
                num = q;
                den = Polynomial::one();
            } else if let Some(q) = den.exact_div(&num) {
                num = Polynomial::one();
                den = q;
            }
        }
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Zero test under assumptions. Assumptions only certify denominators; they never
    /// turn a nonzero numerator into zero.
    pub fn is_zero_under(&self, _assumptions: &[Assumption]) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(
            self.num.constant_value()?,
            self.den.constant_value()?,
        ))
    }

    pub fn parameters(&self) -> std::collections::BTreeSet<ParameterName> {
        let mut ps = self.num.parameters();
        ps.extend(self.den.parameters());
        ps
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Scalar::normalized(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Scalar::normalized(self.num.scale(&BigInt::from(k)), self.den.clone())
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<BigRational> {
        let d = self.den.eval(assignment)?;
        if d.is_zero() {
            return Err(Error::EvalSingular);
        }
        Ok(self.num.eval(assignment)? / d)
    }

    /// Replaces bound parameters by scalars; unbound parameters stay symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let n = substitute_poly(&self.num, bindings);
        let d = substitute_poly(&self.den, bindings);
        n.div(&d)
    }

    fn rational_fast(&self, other: &Self) -> Option<(BigRational, BigRational)> {
        Some((self.as_rational()?, other.as_rational()?))
    }
}

fn substitute_poly(p: &Polynomial, bindings: &BTreeMap<ParameterName, Scalar>) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut term = Scalar::from_bigint(c.clone());
        for (name, e) in m.factors() {
            let factor = match bindings.get(name) {
                Some(v) => v.pow(*e),
                None => Scalar::from_poly(Polynomial::var(name.clone()).pow(*e)),
            };
            term = &term * &factor;
        }
        acc = &acc + &term;
    }
    acc
}

fn int_lcm_monomial_den(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let (ma, ca) = a.leading()?;
    let (mb, cb) = b.leading()?;
    Some(Polynomial::term(ca.lcm(cb), ma.lcm(mb)))
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if let Some((a, b)) = self.rational_fast(other) {
            return Scalar::from_rational(&(a + b));
        }
        if self.den == other.den {
            return Scalar::normalized(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let l = int_lcm_monomial_den(&self.den, &other.den).expect("nonzero denominators");
            let fa = l.exact_div(&self.den).expect("lcm is a multiple");
            let fb = l.exact_div(&other.den).expect("lcm is a multiple");
            return Scalar::normalized(self.num.mul(&fa).add(&other.num.mul(&fb)), l);
        }
        if let Some(q) = self.den.exact_div(&other.den) {
            return Scalar::normalized(self.num.add(&other.num.mul(&q)), self.den.clone());
        }
        if let Some(q) = other.den.exact_div(&self.den) {
            return Scalar::normalized(self.num.mul(&q).add(&other.num), other.den.clone());
        }
        Scalar::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if let Some((a, b)) = self.rational_fast(other) {
            return Scalar::from_rational(&(a * b));
        }
        let (mut an, mut ad) = (self.num.clone(), self.den.clone());
        let (mut bn, mut bd) = (other.num.clone(), other.den.clone());
        if !bd.is_constant() {
            if let Some(q) = an.exact_div(&bd) {
                an = q;
                bd = Polynomial::one();
            }
        }
        if !ad.is_constant() {
            if let Some(q) = bn.exact_div(&ad) {
                bn = q;
                ad = Polynomial::one();
            }
        }
        Scalar::normalized(an.mul(&bn), ad.mul(&bd))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, other: Scalar) -> Scalar {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn needs_parens_den(p: &Polynomial) -> bool {
    match p.terms().next() {
        Some((m, c)) if p.num_terms() == 1 => {
            if m.is_one() {
                false
            } else {
                !(c.is_one() && m.factors().len() == 1)
            }
        }
        _ => true,
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_den(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial asserted to be nonzero, stored primitive with positive leading coefficient.
/// Repeated monomial factors are collapsed, so `k^3 != 0` is stored as `k != 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Assumption(Polynomial);

impl Assumption {
    pub fn new(p: Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroAssumption);
        }
        let m = p.monomial_content();
        let p = p.div_monomial(&m).mul_monomial(&m.radical());
        Ok(Assumption(p.primitive()))
    }

    /// Reads `expr` as a scalar and asserts its numerator nonzero. A rational expression
    /// such as `k2 - k3*k7/k4` also asserts its denominator, so both are returned.
    pub fn parse(expr: &str) -> Result<Vec<Self>> {
        let s = parse_scalar(expr)?;
        let mut out = vec![Assumption::new(s.numerator().clone())?];
        if !s.denominator().is_constant() {
            out.push(Assumption::new(s.denominator().clone())?);
        }
        Ok(out)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_constant()
    }
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} != 0", self.0)
    }
}

impl fmt::Debug for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of trying to show a polynomial nonzero from a list of assumptions.
#[derive(Clone, Debug)]
pub struct Certificate {
    /// Assumptions that divided the polynomial.
    pub used: Vec<Assumption>,
    /// Cofactor left after removing content and every assumed factor; constant when covered.
    pub remainder: Polynomial,
}

impl Certificate {
    pub fn covered(&self) -> bool {
        self.remainder.is_constant()
    }
}

/// Greedily strips assumed-nonzero factors from `p`.
pub fn certify_nonzero(p: &Polynomial, assumptions: &[Assumption]) -> Certificate {
    let mut rem = p.primitive();
    let mut used: Vec<Assumption> = Vec::new();
    for a in assumptions {
        if a.is_trivial() {
            continue;
        }
        while !rem.is_constant() {
            match rem.exact_div(a.polynomial()) {
                Some(q) => {
                    rem = q.primitive();
                    if !used.contains(a) {
                        used.push(a.clone());
                    }
                }
                None => break,
            }
        }
    }
    Certificate {
        used,
        remainder: rem,
    }
}

/// Convenience constructor used throughout tests and the catalog: parses or panics.
#[cfg(test)]
pub(crate) fn s(expr: &str) -> Scalar {
    parse_scalar(expr).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn assign(pairs: &[(&str, BigRational)]) -> Assignment {
        pairs
            .iter()
            .map(|(k, v)| (ParameterName::new(k).unwrap(), v.clone()))
            .collect()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&s("1/2") + &s("1/3"), s("5/6"));
        assert_eq!((&s("1/2") + &s("1/3")).to_string(), "5/6");
    }

    #[test]
    fn cancellation_is_canonical_zero() {
        let z = &s("k1") - &s("k1");
        assert!(z.is_zero());
        assert!(z.numerator().is_zero());
        assert!(z.denominator().is_one());
    }

    #[test]
    fn family_two_entry_cross_multiplies() {
        let entry = s("(k9-k1)*(k5-k9)/(4*k3)");
        assert_eq!(entry.to_string(), "(-1*k1*k5 + k1*k9 + k5*k9 - k9^2)/(4*k3)");
        let expanded = s("(-k1*k5 + k1*k9 + k5*k9 - k9^2)/(4*k3)");
        assert_eq!(entry, expanded);
        let scaled = s("(2*k9-2*k1)*(k5-k9)/(8*k3)");
        assert_eq!(entry, scaled);
        assert_ne!(entry, s("(k9-k1)*(k5-k9)/(4*k2)"));
    }

    #[test]
    fn zero_tests() {
        assert!(s("0/1").is_zero());
        let a = Assumption::new(s("k3").numerator().clone()).unwrap();
        assert!(s("(k3*(k5-k5))/k3").is_zero_under(&[a]));
        assert!(!s("lambda*kappa").is_zero_under(&[]));
    }

    #[test]
    fn evaluation() {
        let v = s("2*lambda*kappa")
            .eval(&assign(&[("lambda", q(1, 2)), ("kappa", q(3, 1))]))
            .unwrap();
        assert_eq!(v, q(3, 1));
        assert!(matches!(
            s("1/k3").eval(&assign(&[("k3", q(0, 1))])),
            Err(Error::EvalSingular)
        ));
        let v = s("(k9-k1)*(k5-k9)/(4*k3)")
            .eval(&assign(&[
                ("k1", q(0, 1)),
                ("k5", q(1, 1)),
                ("k9", q(1, 1)),
                ("k3", q(7, 1)),
            ]))
            .unwrap();
        assert_eq!(v, q(0, 1));
        assert!(matches!(
            s("k1").eval(&assign(&[])),
            Err(Error::UnboundParameter(_))
        ));
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(s("k1").div(&s("k2-k2")), Err(Error::DivisionByZero)));
        assert!(matches!(Assumption::new(Polynomial::zero()), Err(Error::ZeroAssumption)));
    }

    #[test]
    fn denominator_sign_and_reduction() {
        let x = s("(2*k1)/(-4*k3)");
        assert_eq!(x.to_string(), "-1*k1/(2*k3)");
        assert_eq!(s("(k1^2-k2^2)/(k1-k2)").to_string(), "k1 + k2");
        assert_eq!(s("k3/k3^2").to_string(), "1/k3");
    }

    #[test]
    fn substitution() {
        let mut b = BTreeMap::new();
        b.insert(ParameterName::new("k2").unwrap(), s("-lambda*kappa"));
        let v = s("k2/k7 + k1").substitute(&b).unwrap();
        assert_eq!(v, s("-lambda*kappa/k7 + k1"));
    }

    #[test]
    fn certification() {
        let asm = vec![
            Assumption::new(s("k4").numerator().clone()).unwrap(),
            Assumption::new(s("k7").numerator().clone()).unwrap(),
        ];
        let c = certify_nonzero(s("4*k7^2*k4").numerator(), &asm);
        assert!(c.covered());
        assert_eq!(c.used.len(), 2);
        let c = certify_nonzero(s("k1-k5").numerator(), &asm);
        assert!(!c.covered());
        assert!(c.used.is_empty());
    }

    #[test]
    fn printing_round_trips() {
        for e in ["-1*k1/(2*k3)", "(k1 + 1)/k2^2", "3/7", "-2*kappa*lambda", "k1/k2"] {
            let v = s(e);
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v, "{e}");
            assert_eq!(v.to_string(), e);
        }
    }
}
