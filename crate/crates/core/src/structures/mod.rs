//! Lie algebras, Lie coalgebras, (co)representations and the identity checks on them.

pub(crate) mod checks;
pub mod identities;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multilinear::{BasisSpace, Tensor};
use crate::scalars::{Assumption, ParameterName, Scalar};

pub use checks::{Checker, PqReport};

/// Bracket `[b_i, b_j] = Σ_k c[i][j][k] b_k`. Validity is a check, not a type invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    pub space: BasisSpace,
    pub c: Tensor,
}

impl LieAlgebra {
    pub fn new(space: BasisSpace, c: Tensor) -> Result<Self> {
        check_cube(&space, &c, "bracket")?;
        Ok(LieAlgebra { space, c })
    }

    pub fn abelian(space: &BasisSpace) -> Self {
        let n = space.dim();
        LieAlgebra {
            space: space.clone(),
            c: Tensor::zeros(&[n, n, n]),
        }
    }

    /// Sets `[i, j] = v` and `[j, i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (k, x) in v.iter().enumerate() {
            self.c.set(&[i, j, k], x.clone());
            self.c.set(&[j, i, k], -x);
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let (xt, yt) = (vector(x), vector(y));
        Ok(crate::multilinear::contract("a,b,abk->k", &[&xt, &yt, &self.c])?
            .data()
            .to_vec())
    }

    /// Matrix of `ad_{b_x}` in `[out, in]` layout.
    pub fn ad(&self, x: usize) -> Tensor {
        let n = self.dim();
        Tensor::from_fn(&[n, n], |oi| self.c.get(&[x, oi[1], oi[0]]).clone())
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        LieAlgebra::new(self.space.clone(), self.c.substitute(b)?)
    }
}

/// Cobracket `δ(b_i) = Σ_{j,k} d[i][j][k] b_j ⊗ b_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieCoalgebra {
    pub space: BasisSpace,
    pub d: Tensor,
}

impl LieCoalgebra {
    pub fn new(space: BasisSpace, d: Tensor) -> Result<Self> {
        check_cube(&space, &d, "cobracket")?;
        Ok(LieCoalgebra { space, d })
    }

    pub fn zero(space: &BasisSpace) -> Self {
        let n = space.dim();
        LieCoalgebra {
            space: space.clone(),
            d: Tensor::zeros(&[n, n, n]),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `s δ + t Δ`.
    pub fn combine(&self, s: &Scalar, other: &Self, t: &Scalar) -> Result<Self> {
        LieCoalgebra::new(self.space.clone(), self.d.scale(s).add(&other.d.scale(t))?)
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        LieCoalgebra::new(self.space.clone(), self.d.substitute(b)?)
    }
}

/// Action `ρ(b_x) v_i = Σ_o action[x][o][i] v_o`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub space: BasisSpace,
    pub action: Tensor,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, space: BasisSpace, action: Tensor) -> Result<Self> {
        let (n, m) = (algebra.dim(), space.dim());
        if action.shape() != [n, m, m] {
            return Err(Error::shape(format!(
                "action tensor {:?} does not fit algebra dim {n} on module dim {m}",
                action.shape()
            )));
        }
        Ok(Representation {
            algebra,
            space,
            action,
        })
    }

    pub fn adjoint(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let action = Tensor::from_fn(&[n, n, n], |x| l.c.get(&[x[0], x[2], x[1]]).clone());
        Representation {
            algebra: l.clone(),
            space: l.space.clone(),
            action,
        }
    }

    pub fn zero(l: &LieAlgebra, space: &BasisSpace) -> Self {
        let m = space.dim();
        Representation {
            algebra: l.clone(),
            space: space.clone(),
            action: Tensor::zeros(&[l.dim(), m, m]),
        }
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        Representation::new(
            self.algebra.substitute(b)?,
            self.space.clone(),
            self.action.substitute(b)?,
        )
    }
}

/// Coaction `γ(v_i) = Σ_{j,k} coaction[i][j][k] b_j ⊗ v_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Corepresentation {
    pub coalgebra: LieCoalgebra,
    pub space: BasisSpace,
    pub coaction: Tensor,
}

impl Corepresentation {
    pub fn new(coalgebra: LieCoalgebra, space: BasisSpace, coaction: Tensor) -> Result<Self> {
        let (n, m) = (coalgebra.dim(), space.dim());
        if coaction.shape() != [m, n, m] {
            return Err(Error::shape(format!(
                "coaction tensor {:?} does not fit coalgebra dim {n} on comodule dim {m}",
                coaction.shape()
            )));
        }
        Ok(Corepresentation {
            coalgebra,
            space,
            coaction,
        })
    }

    pub fn zero(c: &LieCoalgebra, space: &BasisSpace) -> Self {
        let m = space.dim();
        Corepresentation {
            coalgebra: c.clone(),
            space: space.clone(),
            coaction: Tensor::zeros(&[m, c.dim(), m]),
        }
    }

    /// `s γ + t Γ` as a corepresentation of the given coalgebra.
    pub fn combine(&self, s: &Scalar, other: &Self, t: &Scalar, over: &LieCoalgebra) -> Result<Self> {
        Corepresentation::new(
            over.clone(),
            self.space.clone(),
            self.coaction.scale(s).add(&other.coaction.scale(t))?,
        )
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        Corepresentation::new(
            self.coalgebra.substitute(b)?,
            self.space.clone(),
            self.coaction.substitute(b)?,
        )
    }
}

fn check_cube(space: &BasisSpace, t: &Tensor, what: &str) -> Result<()> {
    let n = space.dim();
    if t.shape() != [n, n, n] {
        return Err(Error::shape(format!(
            "{what} tensor {:?} does not fit a space of dimension {n}",
            t.shape()
        )));
    }
    Ok(())
}

pub(crate) fn vector(v: &[Scalar]) -> Tensor {
    Tensor::from_data(&[v.len()], v.to_vec()).expect("length matches")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    ConditionalPass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        !matches!(self, Verdict::Fail)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::ConditionalPass => "conditional-pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A nonvanishing component of an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub identity: String,
    /// Basis labels of the multi-index.
    pub index: Vec<String>,
    pub value: Scalar,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) = {}", self.identity, self.index.join(","), self.value)
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub verdict: Verdict,
    /// Identities that were evaluated, in order.
    pub identities: Vec<String>,
    pub residuals: Vec<Residual>,
    pub assumptions_used: Vec<Assumption>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn residuals_of<'a>(&'a self, identity: &'a str) -> impl Iterator<Item = &'a Residual> + 'a {
        self.residuals.iter().filter(move |r| r.identity == identity)
    }

    /// Combines reports of sub-checks; the verdict is recomputed from the union.
    pub fn merge(reports: impl IntoIterator<Item = CheckReport>) -> CheckReport {
        let mut out = CheckReport {
            verdict: Verdict::Pass,
            identities: Vec::new(),
            residuals: Vec::new(),
            assumptions_used: Vec::new(),
        };
        for r in reports {
            for i in r.identities {
                if !out.identities.contains(&i) {
                    out.identities.push(i);
                }
            }
            out.residuals.extend(r.residuals);
            for a in r.assumptions_used {
                if !out.assumptions_used.contains(&a) {
                    out.assumptions_used.push(a);
                }
            }
        }
        out.verdict = verdict_for(&out.residuals, &out.assumptions_used);
        out
    }
}

pub(crate) fn verdict_for(residuals: &[Residual], used: &[Assumption]) -> Verdict {
    if !residuals.is_empty() {
        Verdict::Fail
    } else if used.is_empty() {
        Verdict::Pass
    } else {
        Verdict::ConditionalPass
    }
}
