//! Exact solution spaces of identities that are linear in one unknown, and randomized
//! refutation of parametric identities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::multilinear::{nullspace, rank, BasisSpace, BilinearForm, Tensor};
use crate::scalars::{Assignment, Assumption, ParameterName, Scalar};
use crate::structures::{identities as id, CheckReport, LieAlgebra, Residual, Verdict};

/// An identity that is homogeneous linear in one unknown tensor.
#[derive(Clone, Debug)]
pub enum LinearProblem {
    /// Skew forms ω with vanishing cyclic sum `ω([x,y],z) + ω([y,z],x) + ω([z,x],y)`.
    WeakSymplectic { algebra: LieAlgebra },
    /// Co-antisymmetric cobracket tables δ solving the co-Yang-Baxter equation for a fixed ω.
    CoCybeSlice { space: BasisSpace, omega: BilinearForm },
    /// Cobrackets δ making `(L, δ)` satisfy the cocycle condition. With `antisymmetric`
    /// the unknown is restricted to co-antisymmetric tables.
    CocycleInDelta { algebra: LieAlgebra, antisymmetric: bool },
    /// Symmetric two-tensors `s` with `(ad_x ⊗ 1 + 1 ⊗ ad_x)s = 0` for all `x`.
    AdInvariance { algebra: LieAlgebra },
}

impl LinearProblem {
    pub fn name(&self) -> &'static str {
        match self {
            LinearProblem::WeakSymplectic { .. } => "weak-symplectic",
            LinearProblem::CoCybeSlice { .. } => "co-cybe-slice",
            LinearProblem::CocycleInDelta { .. } => "cocycle",
            LinearProblem::AdInvariance { .. } => "ad-invariance",
        }
    }

    fn dim(&self) -> usize {
        match self {
            LinearProblem::WeakSymplectic { algebra }
            | LinearProblem::CocycleInDelta { algebra, .. }
            | LinearProblem::AdInvariance { algebra } => algebra.dim(),
            LinearProblem::CoCybeSlice { space, .. } => space.dim(),
        }
    }

    /// Shape of the unknown and a basis of the space it ranges over.
    fn unknown_basis(&self) -> (Vec<usize>, Vec<Tensor>) {
        let n = self.dim();
        let pairs = |sign: i64, diag: bool| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if i == j && !diag {
                        continue;
                    }
                    let mut t = Tensor::zeros(&[n, n]);
                    t.set(&[i, j], Scalar::one());
                    if i != j {
                        t.set(&[j, i], Scalar::from_int(sign));
                    }
                    out.push(t);
                }
            }
            out
        };
        match self {
            LinearProblem::WeakSymplectic { .. } => (vec![n, n], pairs(-1, false)),
            LinearProblem::AdInvariance { .. } => (vec![n, n], pairs(1, true)),
            LinearProblem::CoCybeSlice { .. } | LinearProblem::CocycleInDelta { antisymmetric: true, .. } => {
                let mut out = Vec::new();
                for x in 0..n {
                    for m in pairs(-1, false) {
                        let mut t = Tensor::zeros(&[n, n, n]);
                        for (idx, v) in m.nonzero() {
                            t.set(&[x, idx[0], idx[1]], v.clone());
                        }
                        out.push(t);
                    }
                }
                (vec![n, n, n], out)
            }
            LinearProblem::CocycleInDelta { .. } => {
                let out = (0..n * n * n)
                    .map(|k| {
                        let mut t = Tensor::zeros(&[n, n, n]);
                        t.set(&[k / (n * n), (k / n) % n, k % n], Scalar::one());
                        t
                    })
                    .collect();
                (vec![n, n, n], out)
            }
        }
    }

    /// The identity evaluated at a value of the unknown.
    pub fn residual(&self, u: &Tensor) -> Result<Tensor> {
        match self {
            LinearProblem::WeakSymplectic { algebra } => id::weak_symplectic(&algebra.c, u),
            LinearProblem::CoCybeSlice { omega, .. } => id::co_cybe(u, &omega.matrix),
            LinearProblem::CocycleInDelta { algebra, .. } => id::cocycle(&algebra.c, u),
            LinearProblem::AdInvariance { algebra } => id::delta_r(&algebra.c, u),
        }
    }
}

/// Basis of a solution space with its certificate.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub problem: &'static str,
    /// Dimension of the space the unknown ranges over.
    pub unknown_dim: usize,
    /// Rank of the linear system; `unknown_dim - rank` is the solution dimension.
    pub rank: usize,
    pub basis: Vec<Tensor>,
    pub assumptions_used: Vec<Assumption>,
}

impl LinearSolution {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `t` lies in the span of the basis.
    pub fn contains(&self, t: &Tensor, assumptions: &[Assumption]) -> Result<bool> {
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.data().to_vec()).collect();
        let cols = t.data().len();
        let before = rank(&rows, cols, assumptions)?;
        let mut with = rows;
        with.push(t.data().to_vec());
        Ok(rank(&with, cols, assumptions)? == before)
    }
}

/// Solves a homogeneous linear identity exactly. Every basis element is substituted back
/// and must give a zero residual.
pub fn solve_linear(problem: &LinearProblem, assumptions: &[Assumption]) -> Result<LinearSolution> {
    let (shape, basis) = problem.unknown_basis();
    let zero = problem.residual(&Tensor::zeros(&shape))?;
    if !zero.is_zero() {
        return Err(Error::Internal(format!("{} is not homogeneous in its unknown", problem.name())));
    }
    let columns: Vec<Tensor> = basis.iter().map(|b| problem.residual(b)).collect::<Result<_>>()?;
    let nrows = zero.data().len();
    let rows: Vec<Vec<Scalar>> = (0..nrows)
        .map(|r| columns.iter().map(|c| c.data()[r].clone()).collect())
        .filter(|row: &Vec<Scalar>| row.iter().any(|v| !v.is_zero()))
        .collect();
    let ns = nullspace(&rows, basis.len(), assumptions)?;
    let mut out = Vec::new();
    for coords in &ns.basis {
        let mut t = Tensor::zeros(&shape);
        for (k, b) in coords.iter().zip(&basis) {
            if !k.is_zero() {
                t = t.add(&b.scale(k))?;
            }
        }
        if !problem.residual(&t)?.is_zero() {
            return Err(Error::Internal(format!("{} basis element fails re-substitution", problem.name())));
        }
        out.push(t);
    }
    Ok(LinearSolution {
        problem: problem.name(),
        unknown_dim: basis.len(),
        rank: ns.rank,
        basis: out,
        assumptions_used: ns.used,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub trials: usize,
    /// Inclusive numerator range.
    pub numerators: (i64, i64),
    /// Inclusive denominator range; both ends positive.
    pub denominators: (i64, i64),
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            trials: 32,
            numerators: (-50, 50),
            denominators: (1, 50),
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SampleOutcome {
    /// Every sampled point gave zero residuals. Evidence, not proof.
    ConfirmedZero(usize),
    /// A point with a nonzero residual, re-checked exactly.
    RefutedAt { assignment: Assignment, residual: Residual },
}

impl SampleOutcome {
    pub fn is_refuted(&self) -> bool {
        matches!(self, SampleOutcome::RefutedAt { .. })
    }
}

/// Evaluates `check` at random rational points of `params`.
///
/// Parameters that occur in an assumption are never drawn as zero, and points where an
/// assumption or a denominator vanishes are skipped. The first failing point in seed order
/// is re-evaluated and returned.
pub fn refute_by_sampling<F>(
    params: &[ParameterName],
    assumptions: &[Assumption],
    cfg: &SampleConfig,
    check: F,
) -> Result<SampleOutcome>
where
    F: Fn(&BTreeMap<ParameterName, Scalar>) -> Result<CheckReport>,
{
    if cfg.trials == 0 {
        return Err(Error::Internal("sampling needs at least one trial".into()));
    }
    let (nlo, nhi) = cfg.numerators;
    let (dlo, dhi) = cfg.denominators;
    if nlo > nhi || dlo < 1 || dlo > dhi || (nlo == 0 && nhi == 0) {
        return Err(Error::Internal("empty sampling pool".into()));
    }
    let guarded: Vec<&ParameterName> = params
        .iter()
        .filter(|p| assumptions.iter().any(|a| a.polynomial().parameters().contains(*p)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < cfg.trials {
        attempts += 1;
        if attempts > cfg.trials * 20 {
            return Err(Error::ExhaustedSamples);
        }
        let mut assignment = Assignment::new();
        for p in params {
            let num = loop {
                let v = rng.gen_range(nlo..=nhi);
                if v != 0 || !guarded.contains(&p) {
                    break v;
                }
            };
            let den = rng.gen_range(dlo..=dhi);
            assignment.insert(p.clone(), BigRational::new(BigInt::from(num), BigInt::from(den)));
        }
        if assumptions.iter().any(|a| a.polynomial().eval(&assignment).map_or(true, |v| v == BigRational::from_integer(0.into()))) {
            continue;
        }
        let bindings: BTreeMap<ParameterName, Scalar> =
            assignment.iter().map(|(k, v)| (k.clone(), Scalar::from_rational(v))).collect();
        let report = match check(&bindings) {
            Ok(r) => r,
            Err(Error::DivisionByZero | Error::EvalSingular | Error::Binding(_)) => continue,
            Err(e) => return Err(e),
        };
        done += 1;
        if report.verdict == Verdict::Fail {
            let again = check(&bindings)?;
            let residual = again
                .residuals
                .into_iter()
                .find(|r| r.value.is_constant() && !r.value.is_zero())
                .ok_or_else(|| Error::Internal("sampled residual did not re-verify".into()))?;
            return Ok(SampleOutcome::RefutedAt { assignment, residual });
        }
    }
    Ok(SampleOutcome::ConfirmedZero(done))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::{LinearOperator, TwoTensor};
    use crate::scalars::s;
    use crate::structures::checks::tests::{op, sl2};
    use crate::structures::Checker;

    #[test]
    fn weak_symplectic_on_sl2_is_every_skew_form() {
        let l = sl2();
        let sol = solve_linear(&LinearProblem::WeakSymplectic { algebra: l.clone() }, &[]).unwrap();
        assert_eq!((sol.unknown_dim, sol.rank, sol.dimension()), (3, 0, 3));
        let mut fam = Tensor::zeros(&[3, 3]);
        fam.set(&[0, 2], s("1"));
        fam.set(&[2, 0], s("-1"));
        fam.set(&[1, 2], s("-2"));
        fam.set(&[2, 1], s("2"));
        assert!(sol.contains(&fam, &[]).unwrap());
    }

    #[test]
    fn abelian_algebras_admit_all_skew_forms() {
        for n in 1..5 {
            let l = LieAlgebra::abelian(&BasisSpace::numbered("x", n));
            let sol = solve_linear(&LinearProblem::WeakSymplectic { algebra: l }, &[]).unwrap();
            assert_eq!(sol.dimension(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn ad_invariant_symmetric_tensors_of_sl2() {
        // the Casimir element e⊗f + f⊗e + g⊗g/2 spans them
        let sol = solve_linear(&LinearProblem::AdInvariance { algebra: sl2() }, &[]).unwrap();
        assert_eq!(sol.dimension(), 1);
        let mut cas = Tensor::zeros(&[3, 3]);
        cas.set(&[0, 1], s("1"));
        cas.set(&[1, 0], s("1"));
        cas.set(&[2, 2], s("1/2"));
        assert!(sol.contains(&cas, &[]).unwrap());
        let r = TwoTensor::antisymmetric(&sl2().space, &[(1, 2, s("1"))]);
        let sym = r.matrix.add(&r.sigma().matrix).unwrap();
        assert!(sol.contains(&sym, &[]).unwrap());
    }

    #[test]
    fn cocycles_of_sl2_are_coboundaries() {
        // H¹(sl2, sl2 ∧ sl2) = 0, so antisymmetric cocycles are δ_r for r ∈ Λ²sl2: dimension 3
        let sol = solve_linear(&LinearProblem::CocycleInDelta { algebra: sl2(), antisymmetric: true }, &[]).unwrap();
        assert_eq!(sol.dimension(), 3);
        let full = solve_linear(&LinearProblem::CocycleInDelta { algebra: sl2(), antisymmetric: false }, &[]).unwrap();
        assert_eq!(full.unknown_dim, 27);
        assert!(full.dimension() >= 3);
        for b in &sol.basis {
            assert!(full.contains(b, &[]).unwrap());
        }
    }

    #[test]
    fn co_cybe_slice_contains_the_qt_cobracket() {
        let l = sl2();
        let w = BilinearForm::new(
            l.space.clone(),
            Tensor::from_rows(&[vec![s("0"), s("0"), s("1")], vec![s("0"), s("0"), s("-2")], vec![s("-1"), s("2"), s("0")]], 3)
                .unwrap(),
        )
        .unwrap();
        let sol = solve_linear(&LinearProblem::CoCybeSlice { space: l.space.clone(), omega: w }, &[]).unwrap();
        let r = TwoTensor::antisymmetric(&l.space, &[(1, 2, s("1"))]);
        let d = id::delta_r(&l.c, &r.matrix).unwrap();
        assert!(sol.contains(&d, &[]).unwrap());
    }

    #[test]
    fn relabeling_sl2_keeps_dimensions() {
        let l = sl2();
        let perm = [2, 0, 1];
        let space = BasisSpace::new(perm.iter().map(|&i| l.space.label(i).to_string())).unwrap();
        let mut inv = [0; 3];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let c = Tensor::from_fn(&[3, 3, 3], |i| l.c.get(&[perm[i[0]], perm[i[1]], perm[i[2]]]).clone());
        let q = LieAlgebra::new(space, c).unwrap();
        for (a, b) in [
            (LinearProblem::WeakSymplectic { algebra: l.clone() }, LinearProblem::WeakSymplectic { algebra: q.clone() }),
            (LinearProblem::AdInvariance { algebra: l.clone() }, LinearProblem::AdInvariance { algebra: q.clone() }),
        ] {
            assert_eq!(solve_linear(&a, &[]).unwrap().dimension(), solve_linear(&b, &[]).unwrap().dimension());
        }
    }

    fn cybe_of(lambda_r: &str) -> impl Fn(&BTreeMap<ParameterName, Scalar>) -> Result<CheckReport> {
        let l = sl2();
        let r = TwoTensor::antisymmetric(&l.space, &[(0, 1, s(lambda_r))]);
        move |b| Checker::plain().cybe(&l, &r.substitute(b)?)
    }

    #[test]
    fn sampling_refutes_the_e_f_tensor() {
        let p = vec![ParameterName::new("lambda").unwrap()];
        let out = refute_by_sampling(&p, &[], &SampleConfig::default(), cybe_of("lambda")).unwrap();
        let SampleOutcome::RefutedAt { assignment, residual } = out else { panic!("not refuted") };
        let lam = Scalar::from_rational(&assignment[&p[0]]);
        assert!(!lam.is_zero());
        assert!(residual.value.is_constant() && !residual.value.is_zero());
    }

    #[test]
    fn sampling_refutes_diag_1_2_3() {
        let l = sl2();
        let check = move |_: &BTreeMap<ParameterName, Scalar>| {
            let n = op(&l.space, &[&["1", "0", "0"], &["0", "2", "0"], &["0", "0", "3"]]);
            Checker::plain().nijenhuis(&l, &n)
        };
        let out = refute_by_sampling(&[], &[], &SampleConfig::default(), check).unwrap();
        let SampleOutcome::RefutedAt { residual, .. } = out else { panic!("not refuted") };
        assert_eq!(residual.identity, "nijenhuis");
    }

    #[test]
    fn sampling_confirms_passing_identities() {
        let l = sl2();
        let p = vec![ParameterName::new("k1").unwrap(), ParameterName::new("k3").unwrap()];
        let a = Assumption::parse("k3").unwrap();
        let check = move |b: &BTreeMap<ParameterName, Scalar>| {
            let n = op(&l.space, &[&["k1", "0", "k3"], &["0", "k1", "0"], &["0", "-4*k3", "k1"]]);
            let n: LinearOperator = n.substitute(b)?;
            Checker::plain().nijenhuis(&l, &n)
        };
        let cfg = SampleConfig { seed: 7, ..SampleConfig::default() };
        assert_eq!(refute_by_sampling(&p, &a, &cfg, check).unwrap(), SampleOutcome::ConfirmedZero(32));
    }

    #[test]
    fn exhausted_when_every_point_is_excluded() {
        let p = vec![ParameterName::new("k").unwrap()];
        let a = Assumption::parse("k").unwrap();
        let cfg = SampleConfig { numerators: (0, 0), ..SampleConfig::default() };
        assert!(refute_by_sampling(&p, &a, &cfg, cybe_of("k")).is_err());
        let cfg = SampleConfig { numerators: (-1, 1), denominators: (1, 1), ..SampleConfig::default() };
        // k = 1 and k = -1 both make k^2 - 1 vanish
        let a = Assumption::parse("k^2 - 1").unwrap();
        assert!(matches!(refute_by_sampling(&p, &a, &cfg, cybe_of("k")), Err(Error::ExhaustedSamples)));
    }
}
