//! Randomized invariants over exact arithmetic.

mod common;

use std::collections::BTreeMap;

use common::{entry, random_antisymmetric, random_lie_algebra, sl2};
use lieb::cli::{parse_document, run_check, write_document, Document, Item};
use lieb::construct::{self, Dualize};
use lieb::multilinear::{BasisSpace, BilinearForm, LinearOperator, Tensor};
use lieb::scalars::{ParameterName, Scalar};
use lieb::structures::{Checker, LieAlgebra, Representation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra(seed: u64, dim: usize) -> LieAlgebra {
    random_lie_algebra(&mut ChaCha8Rng::seed_from_u64(seed), dim)
}

fn operator(space: &BasisSpace, entries: &[i64]) -> LinearOperator {
    let n = space.dim();
    LinearOperator::endo(space, Tensor::from_fn(&[n, n], |ix| Scalar::from_int(entries[ix[0] * n + ix[1]]))).unwrap()
}

fn rational(p: i64, q: i64) -> Scalar {
    Scalar::from_int(p).div(&Scalar::from_int(q)).unwrap()
}

fn tilde(n: &LinearOperator) -> LinearOperator {
    LinearOperator::identity(&n.domain).scale(&Scalar::from_int(-1)).sub(n).unwrap()
}

fn entries() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 16)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn torsion_is_shift_invariant(seed in any::<u64>(), dim in 2usize..=4, e in entries(), p in -7i64..=7, q in 1i64..=5) {
        let l = algebra(seed, dim);
        let n = operator(&l.space, &e);
        let shifted = n.add(&LinearOperator::identity(&l.space).scale(&rational(p, q))).unwrap();
        let c = Checker::plain();
        prop_assert_eq!(c.nijenhuis(&l, &n).unwrap(), c.nijenhuis(&l, &shifted).unwrap());
    }

    #[test]
    fn torsion_is_involution_invariant(seed in any::<u64>(), dim in 2usize..=4, e in entries()) {
        let l = algebra(seed, dim);
        let n = operator(&l.space, &e);
        let c = Checker::plain();
        prop_assert_eq!(c.nijenhuis(&l, &n).unwrap(), c.nijenhuis(&l, &tilde(&n)).unwrap());
    }

    #[test]
    fn admissibility_is_involution_invariant(seed in any::<u64>(), dim in 2usize..=3, e in entries(), f in entries()) {
        let l = algebra(seed, dim);
        let rep = Representation::adjoint(&l);
        let (n, b) = (operator(&l.space, &e), operator(&l.space, &f));
        let c = Checker::plain();
        let a = c.admissible(&rep, &n, &b).unwrap();
        let t = c.admissible(&rep, &tilde(&n), &tilde(&b)).unwrap();
        prop_assert_eq!(a.verdict, t.verdict);
        prop_assert_eq!(a.residuals.len(), t.residuals.len());
    }

    #[test]
    fn dualizing_twice_is_the_identity(seed in any::<u64>(), dim in 2usize..=4, e in entries()) {
        let l = algebra(seed, dim);
        let n = operator(&l.space, &e);
        prop_assert_eq!(&l.dualize().unwrap().dualize().unwrap(), &l);
        prop_assert_eq!(&n.dualize().unwrap().dualize().unwrap(), &n);
        let rep = Representation::adjoint(&l);
        prop_assert_eq!(&rep.dualize().unwrap().dualize().unwrap(), &rep);
    }

    #[test]
    fn nijenhuis_commutes_with_duality(seed in any::<u64>(), dim in 2usize..=4, e in entries()) {
        let l = algebra(seed, dim);
        let n = operator(&l.space, &e);
        let c = Checker::plain();
        let direct = c.nijenhuis(&l, &n).unwrap();
        let dual = c.nijenhuis_coalgebra(&l.dualize().unwrap(), &n.dualize().unwrap()).unwrap();
        prop_assert_eq!(direct.verdict, dual.verdict);
        prop_assert_eq!(direct.residuals.len(), dual.residuals.len());
    }

    #[test]
    fn cpnybe_matches_rrbo(seed in any::<u64>(), k1 in -4i64..=4, k2 in -4i64..=4) {
        let l = sl2();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_antisymmetric(&mut rng, &l.space);
        let (z, a, b) = (0, k1, k2);
        let n = operator(&l.space, &[a, b, z, z, a, z, z, z, a, 0, 0, 0, 0, 0, 0, 0]);
        let p = operator(&l.space, &[a, z, z, z, a, z, z, z, a, 0, 0, 0, 0, 0, 0, 0]);
        let c = Checker::plain();
        let coad = Representation::adjoint(&l).dualize().unwrap();
        let lhs = c.cpnybe(&l, &r, &n, &p).unwrap().verdict;
        let rhs = c.rrbo(&coad, &p.dualize().unwrap(), &n, &construct::phi_r(&r)).unwrap().verdict;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_quasitriangular_forms_are_weak_symplectic(seed in any::<u64>()) {
        let l = sl2();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = construct::delta_from_r(&l, &random_antisymmetric(&mut rng, &l.space)).unwrap();
        let w = BilinearForm::new(l.space.clone(), random_antisymmetric(&mut rng, &l.space).matrix).unwrap();
        let c = Checker::plain();
        if c.dual_qt(&d, &w).unwrap().passed() {
            let b = construct::bracket_from_omega(&d, &w).unwrap();
            prop_assert!(c.weak_symplectic(&b, &w).unwrap().passed());
        }
    }

    /// Specializing parameters and then checking gives the specialized residuals.
    #[test]
    fn residuals_specialize(family in 1usize..=7, vals in prop::collection::vec(-5i64..=5, 10)) {
        let e = entry(&format!("nij-family-{family}"));
        let doc = &e.document;
        let bindings: BTreeMap<ParameterName, Scalar> =
            doc.params.iter().zip(&vals).map(|(p, v)| (p.clone(), Scalar::from_int(*v))).collect();
        let bound = doc.bind(&bindings);
        prop_assume!(bound.is_ok());
        let bound = bound.unwrap();
        prop_assume!(bound.assumptions.iter().all(|a| !a.polynomial().is_zero()));
        let generic = run_check(doc, &doc.checks[0], &Checker::new(e.assumptions.clone())).unwrap();
        let special = run_check(&bound, &bound.checks[0], &Checker::new(bound.assumptions.clone())).unwrap();
        let expected: Vec<(Vec<String>, Scalar)> = generic
            .residuals
            .iter()
            .map(|r| (r.index.clone(), r.value.substitute(&bindings).unwrap()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let got: Vec<(Vec<String>, Scalar)> = special.residuals.iter().map(|r| (r.index.clone(), r.value.clone())).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn documents_survive_writing(seed in any::<u64>(), dim in 2usize..=4, e in entries()) {
        let l = algebra(seed, dim);
        let n = operator(&l.space, &e);
        let mut doc = Document::default();
        doc.ensure_space("V", &l.space);
        doc.push_item("L", Item::Algebra(l.clone())).unwrap();
        doc.push_item("N", Item::Operator(n)).unwrap();
        doc.push_item("ad", Item::Representation { rep: Representation::adjoint(&l), of: "L".into() }).unwrap();
        let text = write_document(&doc, false).unwrap();
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(write_document(&back, false).unwrap(), text);
    }
}
