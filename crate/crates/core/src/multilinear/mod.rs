//! Basis spaces, dense scalar tensors, operators, forms and the linear algebra built on them.

mod contract;
mod linalg;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{ParameterName, Scalar};

pub use contract::contract;
pub use linalg::{determinant, inverse, nullspace, rank, Nullspace};

/// A finite labelled basis. Labels are unique and nonempty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasisSpace {
    labels: Vec<String>,
}

impl BasisSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::shape(format!("invalid basis label `{l}`")));
            }
            if labels[..i].contains(l) {
                return Err(Error::shape(format!("repeated basis label `{l}`")));
            }
        }
        Ok(BasisSpace { labels })
    }

    /// Basis `b1, ..., bn`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        BasisSpace {
            labels: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Dual basis: `x` becomes `x*` and `x*` becomes `x`.
    pub fn dual(&self) -> Self {
        let flipped: Vec<String> = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) if !base.is_empty() => base.to_string(),
                _ => format!("{l}*"),
            })
            .collect();
        match BasisSpace::new(flipped) {
            Ok(s) => s,
            // `x` and `x*` together would collide after flipping; keep distinct labels.
            Err(_) => BasisSpace {
                labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            },
        }
    }

    /// Concatenated basis; labels of `other` that collide get primes appended.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        BasisSpace { labels }
    }

    pub fn check_same(&self, other: &Self, what: &str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::shape(format!(
                "{what}: dimension {} does not match {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for BasisSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels)
    }
}

/// Dense row-major tensor of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vec![Scalar::zero(); shape.iter().product()],
        }
    }

    pub fn from_data(shape: &[usize], data: Vec<Scalar>) -> Result<Self> {
        if shape.iter().product::<usize>() != data.len() {
            return Err(Error::shape(format!(
                "shape {shape:?} needs {} entries, got {}",
                shape.iter().product::<usize>(),
                data.len()
            )));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn from_fn(shape: &[usize], mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut t = Tensor::zeros(shape);
        let mut idx = vec![0; shape.len()];
        for k in 0..t.data.len() {
            t.data[k] = f(&idx);
            increment(&mut idx, shape);
        }
        t
    }

    pub fn identity(n: usize) -> Self {
        Tensor::from_fn(&[n, n], |i| Scalar::from_int((i[0] == i[1]) as i64))
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter()
            .zip(&self.shape)
            .fold(0, |acc, (&i, &n)| {
                debug_assert!(i < n);
                acc * n + i
            })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        let o = self.offset(idx);
        self.data[o] = &self.data[o] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries with their multi-indices, in row-major order.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, &Scalar)> {
        let mut out = Vec::new();
        let mut idx = vec![0; self.shape.len()];
        for v in &self.data {
            if !v.is_zero() {
                out.push((idx.clone(), v));
            }
            increment(&mut idx, &self.shape);
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::shape(format!(
                "shape {:?} does not match {:?}",
                self.shape, other.shape
            )));
        }
        Ok(Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        self.map(|v| v * k)
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Self> {
        Ok(Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Axis `k` of the result is axis `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rank()];
        if perm.len() != self.rank() || perm.iter().any(|&p| p >= self.rank() || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::shape(format!("invalid permutation {perm:?}")));
        }
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut src = vec![0; self.rank()];
        Ok(Tensor::from_fn(&shape, |idx| {
            for (k, &p) in perm.iter().enumerate() {
                src[p] = idx[k];
            }
            self.get(&src).clone()
        }))
    }

    pub fn substitute(&self, bindings: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        self.try_map(|v| v.substitute(bindings))
    }

    /// Rows of a rank-2 tensor.
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        assert_eq!(self.rank(), 2, "rows() needs a matrix");
        self.data.chunks(self.shape[1].max(1)).take(self.shape[0]).map(<[Scalar]>::to_vec).collect()
    }

    pub fn from_rows(rows: &[Vec<Scalar>], ncols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::shape("ragged matrix rows"));
            }
            data.extend(r.iter().cloned());
        }
        Tensor::from_data(&[rows.len(), ncols], data)
    }

    pub fn transpose(&self) -> Self {
        self.permute(&[1, 0]).expect("transpose needs a matrix")
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{:?}[", self.shape)?;
        for (i, (idx, v)) in self.nonzero().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{idx:?}: {v}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn increment(idx: &mut [usize], shape: &[usize]) {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < shape[k] {
            return;
        }
        idx[k] = 0;
    }
}

/// Linear map; `matrix[out, in]`, so column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOperator {
    pub domain: BasisSpace,
    pub codomain: BasisSpace,
    pub matrix: Tensor,
}

impl LinearOperator {
    pub fn new(domain: BasisSpace, codomain: BasisSpace, matrix: Tensor) -> Result<Self> {
        if matrix.shape() != [codomain.dim(), domain.dim()] {
            return Err(Error::shape(format!(
                "operator matrix {:?} does not fit {} -> {}",
                matrix.shape(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(LinearOperator {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn endo(space: &BasisSpace, matrix: Tensor) -> Result<Self> {
        LinearOperator::new(space.clone(), space.clone(), matrix)
    }

    pub fn zero(domain: &BasisSpace, codomain: &BasisSpace) -> Self {
        LinearOperator {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Tensor::zeros(&[codomain.dim(), domain.dim()]),
        }
    }

    pub fn identity(space: &BasisSpace) -> Self {
        LinearOperator::scalar(space, &Scalar::one())
    }

    pub fn scalar(space: &BasisSpace, a: &Scalar) -> Self {
        LinearOperator {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Tensor::identity(space.dim()).scale(a),
        }
    }

    pub fn entry(&self, out: usize, inp: usize) -> &Scalar {
        self.matrix.get(&[out, inp])
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.domain.dim() {
            return Err(Error::shape("vector does not match operator domain"));
        }
        Ok((0..self.codomain.dim())
            .map(|o| {
                v.iter()
                    .enumerate()
                    .fold(Scalar::zero(), |acc, (i, x)| &acc + &(self.entry(o, i) * x))
            })
            .collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.domain.check_same(&other.codomain, "composition")?;
        let m = contract("ij,jk->ik", &[&self.matrix, &other.matrix])?;
        LinearOperator::new(other.domain.clone(), self.codomain.clone(), m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        LinearOperator::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix)?,
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        LinearOperator::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix)?,
        )
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        LinearOperator {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.scale(k),
        }
    }

    /// Dual map between dual bases.
    pub fn transpose(&self) -> Self {
        LinearOperator {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            matrix: self.matrix.transpose(),
        }
    }

    /// Block-diagonal `self ⊕ other` on the direct sums.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (m, n) = (self.codomain.dim(), self.domain.dim());
        let matrix = Tensor::from_fn(
            &[m + other.codomain.dim(), n + other.domain.dim()],
            |i| match (i[0] < m, i[1] < n) {
                (true, true) => self.entry(i[0], i[1]).clone(),
                (false, false) => other.entry(i[0] - m, i[1] - n).clone(),
                _ => Scalar::zero(),
            },
        );
        LinearOperator {
            domain: self.domain.direct_sum(&other.domain),
            codomain: self.codomain.direct_sum(&other.codomain),
            matrix,
        }
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        Ok(LinearOperator {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.substitute(b)?,
        })
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
    }
}

/// Bilinear form; `matrix[i, j]` is the value on `(b_i, b_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    pub space: BasisSpace,
    pub matrix: Tensor,
}

impl BilinearForm {
    pub fn new(space: BasisSpace, matrix: Tensor) -> Result<Self> {
        check_square(&space, &matrix, "form")?;
        Ok(BilinearForm { space, matrix })
    }

    pub fn zero(space: &BasisSpace) -> Self {
        BilinearForm {
            space: space.clone(),
            matrix: Tensor::zeros(&[space.dim(), space.dim()]),
        }
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(&[i, j])
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        BilinearForm::new(self.space.clone(), self.matrix.substitute(b)?)
    }
}

/// Element of `V ⊗ V`; `matrix[i, j]` is the coefficient of `b_i ⊗ b_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTensor {
    pub space: BasisSpace,
    pub matrix: Tensor,
}

impl TwoTensor {
    pub fn new(space: BasisSpace, matrix: Tensor) -> Result<Self> {
        check_square(&space, &matrix, "two-tensor")?;
        Ok(TwoTensor { space, matrix })
    }

    pub fn zero(space: &BasisSpace) -> Self {
        TwoTensor {
            space: space.clone(),
            matrix: Tensor::zeros(&[space.dim(), space.dim()]),
        }
    }

    /// `coeff * (b_i ⊗ b_j - b_j ⊗ b_i)` summed over the given pairs.
    pub fn antisymmetric(space: &BasisSpace, pairs: &[(usize, usize, Scalar)]) -> Self {
        let mut t = TwoTensor::zero(space);
        for (i, j, c) in pairs {
            t.matrix.add_at(&[*i, *j], c);
            t.matrix.add_at(&[*j, *i], &-c);
        }
        t
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(&[i, j])
    }

    /// Flip `r^σ = r² ⊗ r¹`.
    pub fn sigma(&self) -> Self {
        TwoTensor {
            space: self.space.clone(),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Self> {
        TwoTensor::new(self.space.clone(), self.matrix.substitute(b)?)
    }
}

fn check_square(space: &BasisSpace, m: &Tensor, what: &str) -> Result<()> {
    if m.shape() != [space.dim(), space.dim()] {
        return Err(Error::shape(format!(
            "{what} matrix {:?} does not fit a space of dimension {}",
            m.shape(),
            space.dim()
        )));
    }
    Ok(())
}
