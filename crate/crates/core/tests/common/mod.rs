//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use lieb::catalog::{self, CatalogEntry};
use lieb::multilinear::{BasisSpace, LinearOperator, Tensor, TwoTensor};
use lieb::scalars::{parse_scalar, Scalar};
use lieb::structures::LieAlgebra;
use rand::Rng;

pub fn s(expr: &str) -> Scalar {
    parse_scalar(expr).unwrap()
}

pub fn entry(id: &str) -> CatalogEntry {
    catalog::get(id, &BTreeMap::new()).unwrap()
}

pub fn sl2() -> LieAlgebra {
    entry("sl2").document.algebra("sl2").unwrap().clone()
}

/// Operator whose `j`-th column is the image of basis vector `j`.
pub fn op(space: &BasisSpace, images: &[&[&str]]) -> LinearOperator {
    let n = space.dim();
    LinearOperator::endo(space, Tensor::from_fn(&[n, n], |oi| s(images[oi[1]][oi[0]]))).unwrap()
}

pub fn small(rng: &mut impl Rng, lo: i64, hi: i64) -> Scalar {
    Scalar::from_int(rng.gen_range(lo..=hi))
}

pub fn random_operator(rng: &mut impl Rng, space: &BasisSpace) -> LinearOperator {
    let n = space.dim();
    LinearOperator::endo(space, Tensor::from_fn(&[n, n], |_| small(rng, -3, 3))).unwrap()
}

pub fn random_antisymmetric(rng: &mut impl Rng, space: &BasisSpace) -> TwoTensor {
    let n = space.dim();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j, small(rng, -4, 4)));
        }
    }
    TwoTensor::antisymmetric(space, &pairs)
}

/// Lie algebras of dimension 2 to 4 with integer structure constants.
fn base_algebra(rng: &mut impl Rng, n: usize) -> LieAlgebra {
    let space = BasisSpace::numbered("x", n);
    let mut l = LieAlgebra::abelian(&space);
    let unit = |k: usize, v: Scalar| {
        let mut out = vec![Scalar::zero(); n];
        out[k] = v;
        out
    };
    match (n, rng.gen_range(0..3)) {
        (2, 0) => {}
        (2, _) => l.set_bracket(0, 1, &unit(1, Scalar::one())),
        (3, 0) => {
            let a = small(rng, -3, 3);
            l.set_bracket(2, 0, &unit(0, Scalar::one()));
            l.set_bracket(2, 1, &unit(1, a));
        }
        (3, 1) => l.set_bracket(0, 1, &unit(2, Scalar::one())),
        (3, _) => {
            l.set_bracket(0, 1, &unit(2, Scalar::one()));
            l.set_bracket(0, 2, &unit(0, Scalar::from_int(-2)));
            l.set_bracket(1, 2, &unit(1, Scalar::from_int(2)));
        }
        (_, 0) => {
            l.set_bracket(0, 1, &unit(2, Scalar::one()));
            l.set_bracket(0, 2, &unit(0, Scalar::from_int(-2)));
            l.set_bracket(1, 2, &unit(1, Scalar::from_int(2)));
        }
        (_, 1) => {
            l.set_bracket(0, 1, &unit(1, Scalar::one()));
            l.set_bracket(2, 3, &unit(3, Scalar::one()));
        }
        (_, _) => {
            l.set_bracket(0, 1, &unit(2, Scalar::one()));
            l.set_bracket(3, 0, &unit(0, Scalar::one()));
            l.set_bracket(3, 1, &unit(1, Scalar::from_int(-1)));
        }
    }
    l
}

/// A Lie algebra of dimension `n` in a random unimodular basis.
pub fn random_lie_algebra(rng: &mut impl Rng, n: usize) -> LieAlgebra {
    let l = base_algebra(rng, n);
    // g = unit lower triangular times unit upper triangular
    let lower = Tensor::from_fn(&[n, n], |i| match i[0].cmp(&i[1]) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Greater => small(rng, -2, 2),
        std::cmp::Ordering::Less => Scalar::zero(),
    });
    let upper = lower.transpose();
    let g = lieb::multilinear::contract("ab,bc->ac", &[&lower, &upper]).unwrap();
    let gi = lieb::multilinear::inverse(&g).unwrap();
    // new basis b'_i = sum_a g[a][i] b_a
    let c = lieb::multilinear::contract("ai,bj,abm,km->ijk", &[&g, &g, &l.c, &gi]).unwrap();
    LieAlgebra::new(l.space.clone(), c).unwrap()
}
