use super::identities as id;
use super::{verdict_for, CheckReport, Corepresentation, LieAlgebra, LieCoalgebra, Representation, Residual};
use crate::error::{Error, Result};
use crate::multilinear::{determinant, BasisSpace, BilinearForm, LinearOperator, Tensor, TwoTensor};
use crate::scalars::{certify_nonzero, Assumption, Polynomial, Scalar};

/// Runs identity checks under a fixed list of nonvanishing assumptions.
///
/// Every input entry with a non-constant denominator must be certified nonzero by the
/// assumptions. Whatever part of a denominator the assumptions do not cover is recorded as
/// an implicit assumption, so the verdict is then conditional rather than unconditional.
#[derive(Clone, Debug, Default)]
pub struct Checker {
    assumptions: Vec<Assumption>,
}

struct Part {
    name: String,
    tensor: Tensor,
    axes: Vec<BasisSpace>,
}

fn part(name: &str, tensor: Tensor, axes: &[&BasisSpace]) -> Part {
    Part {
        name: name.to_string(),
        tensor,
        axes: axes.iter().map(|s| (*s).clone()).collect(),
    }
}

/// Outcome of the two r-form cross-checks.
#[derive(Clone, Debug, PartialEq)]
pub struct PqReport {
    /// All four identities together.
    pub report: CheckReport,
    pub nc: CheckReport,
    pub nc_r: CheckReport,
    pub nliebialg2: CheckReport,
    pub nliebialg2_r: CheckReport,
}

impl PqReport {
    /// Both verdict pairs coincide.
    pub fn agrees(&self) -> bool {
        self.nc.passed() == self.nc_r.passed() && self.nliebialg2.passed() == self.nliebialg2_r.passed()
    }
}

fn same_dim(a: usize, b: usize, what: &str) -> Result<()> {
    if a != b {
        return Err(Error::shape(format!("{what}: dimensions {a} and {b} differ")));
    }
    Ok(())
}

fn endo_on(op: &LinearOperator, n: usize, what: &str) -> Result<()> {
    if op.matrix.shape() != [n, n] {
        return Err(Error::shape(format!(
            "{what} must be an endomorphism of a {n}-dimensional space, got {:?}",
            op.matrix.shape()
        )));
    }
    Ok(())
}

impl Checker {
    pub fn new(assumptions: Vec<Assumption>) -> Self {
        Checker { assumptions }
    }

    pub fn plain() -> Self {
        Checker::default()
    }

    pub fn assumptions(&self) -> &[Assumption] {
        &self.assumptions
    }

    fn finish(&self, parts: Vec<Part>, inputs: &[&Tensor], mut used: Vec<Assumption>) -> CheckReport {
        let mut identities = Vec::new();
        let mut residuals = Vec::new();
        for p in parts {
            for (idx, v) in p.tensor.nonzero() {
                let index = idx
                    .iter()
                    .zip(&p.axes)
                    .map(|(&i, s)| s.label(i).to_string())
                    .collect();
                residuals.push(Residual {
                    identity: p.name.clone(),
                    index,
                    value: v.clone(),
                });
            }
            identities.push(p.name);
        }
        let mut dens: Vec<Polynomial> = Vec::new();
        for t in inputs {
            for (_, v) in t.nonzero() {
                let d = v.denominator();
                if !d.is_constant() && !dens.contains(d) {
                    dens.push(d.clone());
                }
            }
        }
        for d in &dens {
            self.justify(d, &mut used);
        }
        let verdict = verdict_for(&residuals, &used);
        CheckReport {
            verdict,
            identities,
            residuals,
            assumptions_used: used,
        }
    }

    /// Records what is needed to know `p != 0`.
    fn justify(&self, p: &Polynomial, used: &mut Vec<Assumption>) {
        let cert = certify_nonzero(p, &self.assumptions);
        let implicit = if cert.covered() {
            None
        } else {
            Assumption::new(cert.remainder.clone()).ok()
        };
        for a in cert.used.into_iter().chain(implicit) {
            if !used.contains(&a) {
                used.push(a);
            }
        }
    }

    pub fn lie_algebra(&self, l: &LieAlgebra) -> Result<CheckReport> {
        let s = &l.space;
        let parts = vec![
            part("antisymmetry", id::antisymmetry(&l.c)?, &[s, s, s]),
            part("jacobi", id::jacobi(&l.c)?, &[s, s, s, s]),
        ];
        Ok(self.finish(parts, &[&l.c], vec![]))
    }

    pub fn lie_coalgebra(&self, c: &LieCoalgebra) -> Result<CheckReport> {
        let s = &c.space;
        let parts = vec![
            part("co-antisymmetry", id::co_antisymmetry(&c.d)?, &[s, s, s]),
            part("co-jacobi", id::co_jacobi(&c.d)?, &[s, s, s, s]),
        ];
        Ok(self.finish(parts, &[&c.d], vec![]))
    }

    pub fn cocycle(&self, l: &LieAlgebra, c: &LieCoalgebra) -> Result<CheckReport> {
        same_dim(l.dim(), c.dim(), "cocycle")?;
        let s = &l.space;
        let parts = vec![part("cocycle", id::cocycle(&l.c, &c.d)?, &[s, s, s, s])];
        Ok(self.finish(parts, &[&l.c, &c.d], vec![]))
    }

    pub fn nijenhuis(&self, l: &LieAlgebra, n: &LinearOperator) -> Result<CheckReport> {
        endo_on(n, l.dim(), "N")?;
        let s = &l.space;
        let parts = vec![part("nijenhuis", id::nijenhuis(&l.c, &n.matrix)?, &[s, s, s])];
        Ok(self.finish(parts, &[&l.c, &n.matrix], vec![]))
    }

    pub fn nijenhuis_coalgebra(&self, c: &LieCoalgebra, p: &LinearOperator) -> Result<CheckReport> {
        endo_on(p, c.dim(), "P")?;
        let s = &c.space;
        let parts = vec![part(
            "nijenhuis-coalgebra",
            id::nijenhuis_coalgebra(&c.d, &p.matrix)?,
            &[s, s, s],
        )];
        Ok(self.finish(parts, &[&c.d, &p.matrix], vec![]))
    }

    /// Antisymmetry of `r` and the classical Yang-Baxter equation.
    pub fn cybe(&self, l: &LieAlgebra, r: &TwoTensor) -> Result<CheckReport> {
        same_dim(l.dim(), r.space.dim(), "cybe")?;
        let s = &l.space;
        let parts = vec![
            part("r-antisymmetry", id::two_tensor_antisymmetry(&r.matrix)?, &[s, s]),
            part("cybe", id::cybe(&l.c, &r.matrix)?, &[s, s, s]),
        ];
        Ok(self.finish(parts, &[&l.c, &r.matrix], vec![]))
    }

    pub fn co_cybe(&self, c: &LieCoalgebra, w: &BilinearForm) -> Result<CheckReport> {
        same_dim(c.dim(), w.space.dim(), "co-cybe")?;
        let s = &c.space;
        let parts = vec![part("co-cybe", id::co_cybe(&c.d, &w.matrix)?, &[s, s, s])];
        Ok(self.finish(parts, &[&c.d, &w.matrix], vec![]))
    }

    /// Coalgebra axioms, skew-symmetry of `ω`, the co-Yang-Baxter equation and both
    /// factorization identities of the induced bracket.
    pub fn dual_qt(&self, c: &LieCoalgebra, w: &BilinearForm) -> Result<CheckReport> {
        same_dim(c.dim(), w.space.dim(), "dual quasitriangular")?;
        let s = &c.space;
        let parts = vec![
            part("co-antisymmetry", id::co_antisymmetry(&c.d)?, &[s, s, s]),
            part("co-jacobi", id::co_jacobi(&c.d)?, &[s, s, s, s]),
            part("omega-skew", id::skew(&w.matrix)?, &[s, s]),
            part("co-cybe", id::co_cybe(&c.d, &w.matrix)?, &[s, s, s]),
            part("cqt1", id::cqt1(&c.d, &w.matrix)?, &[s, s, s]),
            part("cqt2", id::cqt2(&c.d, &w.matrix)?, &[s, s, s]),
        ];
        Ok(self.finish(parts, &[&c.d, &w.matrix], vec![]))
    }

    pub fn weak_symplectic(&self, l: &LieAlgebra, w: &BilinearForm) -> Result<CheckReport> {
        same_dim(l.dim(), w.space.dim(), "weak symplectic")?;
        let s = &l.space;
        let parts = vec![
            part("omega-skew", id::skew(&w.matrix)?, &[s, s]),
            part("weak-symplectic", id::weak_symplectic(&l.c, &w.matrix)?, &[s, s, s]),
        ];
        Ok(self.finish(parts, &[&l.c, &w.matrix], vec![]))
    }

    pub fn weak_cosymplectic(&self, c: &LieCoalgebra, r: &TwoTensor) -> Result<CheckReport> {
        same_dim(c.dim(), r.space.dim(), "weak cosymplectic")?;
        let s = &c.space;
        let parts = vec![
            part("r-antisymmetry", id::two_tensor_antisymmetry(&r.matrix)?, &[s, s]),
            part("weak-cosymplectic", id::weak_cosymplectic(&c.d, &r.matrix)?, &[s, s, s]),
        ];
        Ok(self.finish(parts, &[&c.d, &r.matrix], vec![]))
    }

    pub fn representation(&self, r: &Representation) -> Result<CheckReport> {
        let (l, v) = (&r.algebra.space, &r.space);
        let parts = vec![part(
            "representation",
            id::representation(&r.algebra.c, &r.action)?,
            &[l, l, v, v],
        )];
        Ok(self.finish(parts, &[&r.algebra.c, &r.action], vec![]))
    }

    /// Representation axiom plus compatibility of `α` with `N`.
    pub fn nij_representation(
        &self,
        r: &Representation,
        n: &LinearOperator,
        al: &LinearOperator,
    ) -> Result<CheckReport> {
        endo_on(n, r.algebra.dim(), "N")?;
        endo_on(al, r.space.dim(), "alpha")?;
        let (l, v) = (&r.algebra.space, &r.space);
        let parts = vec![
            part("representation", id::representation(&r.algebra.c, &r.action)?, &[l, l, v, v]),
            part(
                "nij-representation",
                id::nij_representation(&r.action, &n.matrix, &al.matrix)?,
                &[l, v, v],
            ),
        ];
        Ok(self.finish(parts, &[&r.algebra.c, &r.action, &n.matrix, &al.matrix], vec![]))
    }

    pub fn admissible(&self, r: &Representation, n: &LinearOperator, b: &LinearOperator) -> Result<CheckReport> {
        self.admissible_named("admissible", r, n, b)
    }

    /// Admissibility for the adjoint representation.
    pub fn p_admissible(&self, l: &LieAlgebra, n: &LinearOperator, p: &LinearOperator) -> Result<CheckReport> {
        self.admissible_named("p-admissible", &Representation::adjoint(l), n, p)
    }

    fn admissible_named(
        &self,
        name: &str,
        r: &Representation,
        n: &LinearOperator,
        b: &LinearOperator,
    ) -> Result<CheckReport> {
        endo_on(n, r.algebra.dim(), "N")?;
        endo_on(b, r.space.dim(), "beta")?;
        let (l, v) = (&r.algebra.space, &r.space);
        let parts = vec![part(name, id::admissible(&r.action, &n.matrix, &b.matrix)?, &[l, v, v])];
        Ok(self.finish(parts, &[&r.action, &n.matrix, &b.matrix], vec![]))
    }

    /// Corepresentation axiom; with `(P, β)` also the Nijenhuis compatibility.
    pub fn corepresentation(
        &self,
        k: &Corepresentation,
        ops: Option<(&LinearOperator, &LinearOperator)>,
    ) -> Result<CheckReport> {
        let (l, v) = (&k.coalgebra.space, &k.space);
        let mut parts = vec![part(
            "corepresentation",
            id::corepresentation(&k.coalgebra.d, &k.coaction)?,
            &[v, l, l, v],
        )];
        let mut inputs = vec![&k.coalgebra.d, &k.coaction];
        if let Some((p, b)) = ops {
            endo_on(p, l.dim(), "P")?;
            endo_on(b, v.dim(), "beta")?;
            parts.push(part(
                "nij-corepresentation",
                id::nij_corepresentation(&k.coaction, &p.matrix, &b.matrix)?,
                &[v, l, v],
            ));
            inputs.extend([&p.matrix, &b.matrix]);
        }
        Ok(self.finish(parts, &inputs, vec![]))
    }

    /// Whether `s δ + t Δ` is a cobracket, via both cobrackets and the mixed co-Jacobi
    /// identity; with coactions, the same for `s γ + t Γ`.
    pub fn compatible_pair(
        &self,
        c1: &LieCoalgebra,
        c2: &LieCoalgebra,
        s: &Scalar,
        t: &Scalar,
        coreps: Option<(&Corepresentation, &Corepresentation)>,
    ) -> Result<CheckReport> {
        same_dim(c1.dim(), c2.dim(), "compatible pair")?;
        let sp = &c1.space;
        let combined = c1.combine(s, c2, t)?;
        let mut parts = vec![
            part("first:co-antisymmetry", id::co_antisymmetry(&c1.d)?, &[sp, sp, sp]),
            part("first:co-jacobi", id::co_jacobi(&c1.d)?, &[sp, sp, sp, sp]),
            part("second:co-antisymmetry", id::co_antisymmetry(&c2.d)?, &[sp, sp, sp]),
            part("second:co-jacobi", id::co_jacobi(&c2.d)?, &[sp, sp, sp, sp]),
            part(
                "mixed-co-jacobi",
                id::co_jacobi_mixed(&c1.d, &c2.d)?.add(&id::co_jacobi_mixed(&c2.d, &c1.d)?)?,
                &[sp, sp, sp, sp],
            ),
            part("combined:co-antisymmetry", id::co_antisymmetry(&combined.d)?, &[sp, sp, sp]),
            part("combined:co-jacobi", id::co_jacobi(&combined.d)?, &[sp, sp, sp, sp]),
        ];
        let mut inputs = vec![&c1.d, &c2.d];
        if let Some((g1, g2)) = coreps {
            same_dim(g1.space.dim(), g2.space.dim(), "compatible coactions")?;
            same_dim(g1.coalgebra.dim(), c1.dim(), "first coaction")?;
            same_dim(g2.coalgebra.dim(), c1.dim(), "second coaction")?;
            let v = &g1.space;
            let gc = g1.combine(s, g2, t, &combined)?;
            parts.extend([
                part("first:corepresentation", id::corepresentation(&c1.d, &g1.coaction)?, &[v, sp, sp, v]),
                part("second:corepresentation", id::corepresentation(&c2.d, &g2.coaction)?, &[v, sp, sp, v]),
                part(
                    "mixed-corepresentation",
                    id::corep_mixed(&c1.d, &g1.coaction, Some((&c2.d, &g2.coaction)))?,
                    &[v, sp, sp, v],
                ),
                part("combined:corepresentation", id::corepresentation(&combined.d, &gc.coaction)?, &[v, sp, sp, v]),
            ]);
            inputs.extend([&g1.coaction, &g2.coaction]);
        }
        Ok(self.finish(parts, &inputs, vec![]))
    }

    /// The four homomorphism conditions between `(δ, γ)` and `(Δ, Γ)`; with `(s, t)` also the
    /// direct statement that `(s + tP, s + tβ)` maps `(δ, γ)` to `(sδ + tΔ, sγ + tΓ)`.
    #[allow(clippy::too_many_arguments)]
    pub fn deformed_homomorphism(
        &self,
        c: &LieCoalgebra,
        dd: &LieCoalgebra,
        g: &Corepresentation,
        gg: &Corepresentation,
        p: &LinearOperator,
        b: &LinearOperator,
        st: Option<(&Scalar, &Scalar)>,
    ) -> Result<CheckReport> {
        let (n, m) = (c.dim(), g.space.dim());
        same_dim(n, dd.dim(), "deformed cobracket")?;
        same_dim(m, gg.space.dim(), "deformed coaction")?;
        endo_on(p, n, "P")?;
        endo_on(b, m, "beta")?;
        let (l, v) = (&c.space, &g.space);
        let (pm, bm) = (&p.matrix, &b.matrix);
        let mut parts = vec![
            part("cmh1", id::cmh1(&c.d, &dd.d, pm)?, &[l, l, l]),
            part("cmh2", id::cmh2(&c.d, &dd.d, pm)?, &[l, l, l]),
            part("cmh3", id::cmh3(&g.coaction, &gg.coaction, pm, bm)?, &[v, l, v]),
            part("cmh4", id::cmh4(&g.coaction, &gg.coaction, pm, bm)?, &[v, l, v]),
        ];
        if let Some((s, t)) = st {
            let f = Tensor::identity(n).scale(s).add(&pm.scale(t))?;
            let h = Tensor::identity(m).scale(s).add(&bm.scale(t))?;
            let d_st = c.d.scale(s).add(&dd.d.scale(t))?;
            let g_st = g.coaction.scale(s).add(&gg.coaction.scale(t))?;
            parts.push(part("coalgebra-homomorphism", id::coalgebra_hom(&c.d, &d_st, &f)?, &[l, l, l]));
            parts.push(part(
                "corepresentation-homomorphism",
                id::corep_hom(&g.coaction, &g_st, &f, &h)?,
                &[v, l, v],
            ));
        }
        Ok(self.finish(parts, &[&c.d, &dd.d, &g.coaction, &gg.coaction, pm, bm], vec![]))
    }

    /// Both matched-pair identities, both Nijenhuis operators and both Nijenhuis
    /// representations. `rho_l` is `L` acting on `H`, `rho_h` is `H` acting on `L`.
    pub fn matched_pair(
        &self,
        rho_l: &Representation,
        rho_h: &Representation,
        n_l: &LinearOperator,
        n_h: &LinearOperator,
    ) -> Result<CheckReport> {
        let (l, h) = (&rho_l.algebra, &rho_h.algebra);
        same_dim(rho_l.space.dim(), h.dim(), "rho_L module")?;
        same_dim(rho_h.space.dim(), l.dim(), "rho_H module")?;
        endo_on(n_l, l.dim(), "N_L")?;
        endo_on(n_h, h.dim(), "N_H")?;
        let (ls, hs) = (&l.space, &h.space);
        let parts = vec![
            part("L:nijenhuis", id::nijenhuis(&l.c, &n_l.matrix)?, &[ls, ls, ls]),
            part("H:nijenhuis", id::nijenhuis(&h.c, &n_h.matrix)?, &[hs, hs, hs]),
            part("rho_L:representation", id::representation(&l.c, &rho_l.action)?, &[ls, ls, hs, hs]),
            part("rho_H:representation", id::representation(&h.c, &rho_h.action)?, &[hs, hs, ls, ls]),
            part(
                "rho_L:nij-representation",
                id::nij_representation(&rho_l.action, &n_l.matrix, &n_h.matrix)?,
                &[ls, hs, hs],
            ),
            part(
                "rho_H:nij-representation",
                id::nij_representation(&rho_h.action, &n_h.matrix, &n_l.matrix)?,
                &[hs, ls, ls],
            ),
            part("matched-pair-1", id::matched_pair(&l.c, &rho_l.action, &rho_h.action)?, &[hs, ls, ls, ls]),
            part("matched-pair-2", id::matched_pair(&h.c, &rho_h.action, &rho_l.action)?, &[ls, hs, hs, hs]),
        ];
        let inputs = [&l.c, &h.c, &rho_l.action, &rho_h.action, &n_l.matrix, &n_h.matrix];
        Ok(self.finish(parts, &inputs, vec![]))
    }

    /// Invariance, symmetry and nondegeneracy of `B`; with `N`, also the Nijenhuis identity.
    pub fn frobenius(&self, l: &LieAlgebra, b: &BilinearForm, n: Option<&LinearOperator>) -> Result<CheckReport> {
        same_dim(l.dim(), b.space.dim(), "frobenius")?;
        let s = &l.space;
        let mut parts = vec![
            part("invariance", id::invariance(&l.c, &b.matrix)?, &[s, s, s]),
            part("symmetry", id::symmetry(&b.matrix)?, &[s, s]),
        ];
        let det = determinant(&b.matrix)?;
        let mut used = Vec::new();
        let mut flag = Tensor::zeros(&[]);
        if det.is_zero() {
            flag.set(&[], Scalar::one());
        } else if !det.is_constant() {
            self.justify(det.numerator(), &mut used);
        }
        parts.push(part("nondegeneracy", flag, &[]));
        let mut inputs = vec![&l.c, &b.matrix];
        if let Some(n) = n {
            endo_on(n, l.dim(), "N")?;
            parts.push(part("nijenhuis", id::nijenhuis(&l.c, &n.matrix)?, &[s, s, s]));
            inputs.push(&n.matrix);
        }
        Ok(self.finish(parts, &inputs, used))
    }

    /// Lie bialgebra axioms, both Nijenhuis identities and the two compatibilities.
    pub fn nij_lie_bialgebra(
        &self,
        l: &LieAlgebra,
        c: &LieCoalgebra,
        n: &LinearOperator,
        p: &LinearOperator,
    ) -> Result<CheckReport> {
        same_dim(l.dim(), c.dim(), "Nijenhuis Lie bialgebra")?;
        endo_on(n, l.dim(), "N")?;
        endo_on(p, l.dim(), "P")?;
        let s = &l.space;
        let parts = vec![
            part("antisymmetry", id::antisymmetry(&l.c)?, &[s, s, s]),
            part("jacobi", id::jacobi(&l.c)?, &[s, s, s, s]),
            part("co-antisymmetry", id::co_antisymmetry(&c.d)?, &[s, s, s]),
            part("co-jacobi", id::co_jacobi(&c.d)?, &[s, s, s, s]),
            part("cocycle", id::cocycle(&l.c, &c.d)?, &[s, s, s, s]),
            part("nijenhuis", id::nijenhuis(&l.c, &n.matrix)?, &[s, s, s]),
            part("nijenhuis-coalgebra", id::nijenhuis_coalgebra(&c.d, &p.matrix)?, &[s, s, s]),
            part(
                "nliebialg1",
                id::admissible(&Representation::adjoint(l).action, &n.matrix, &p.matrix)?,
                &[s, s, s],
            ),
            part("nliebialg2", id::nliebialg2(&c.d, &n.matrix, &p.matrix)?, &[s, s, s]),
        ];
        Ok(self.finish(parts, &[&l.c, &c.d, &n.matrix, &p.matrix], vec![]))
    }

    /// Antisymmetry, classical Yang-Baxter equation and `(P⊗1 - 1⊗N)(r) = 0`.
    pub fn cpnybe(&self, l: &LieAlgebra, r: &TwoTensor, n: &LinearOperator, p: &LinearOperator) -> Result<CheckReport> {
        same_dim(l.dim(), r.space.dim(), "cpnybe")?;
        endo_on(n, l.dim(), "N")?;
        endo_on(p, l.dim(), "P")?;
        let s = &l.space;
        let parts = vec![
            part("r-antisymmetry", id::two_tensor_antisymmetry(&r.matrix)?, &[s, s]),
            part("cybe", id::cybe(&l.c, &r.matrix)?, &[s, s, s]),
            part("pn-twist", id::pn_twist(&r.matrix, &n.matrix, &p.matrix)?, &[s, s]),
        ];
        Ok(self.finish(parts, &[&l.c, &r.matrix, &n.matrix, &p.matrix], vec![]))
    }

    /// Evaluates each compatibility identity on `δ_r` directly and through its r-form.
    pub fn pq_equivalents(
        &self,
        l: &LieAlgebra,
        r: &TwoTensor,
        n: &LinearOperator,
        p: &LinearOperator,
    ) -> Result<PqReport> {
        same_dim(l.dim(), r.space.dim(), "r-form comparison")?;
        endo_on(n, l.dim(), "N")?;
        endo_on(p, l.dim(), "P")?;
        let s = &l.space;
        let (c, rm, nm, pm) = (&l.c, &r.matrix, &n.matrix, &p.matrix);
        let d = id::delta_r(c, rm)?;
        let inputs = [c, rm, nm, pm];
        let one = |name: &str, t: Tensor| self.finish(vec![part(name, t, &[s, s, s])], &inputs, vec![]);
        let nc = one("nijenhuis-coalgebra", id::nijenhuis_coalgebra(&d, pm)?);
        let nc_r = one("nijenhuis-coalgebra-r", id::nc_r_form(c, rm, nm, pm)?);
        let nliebialg2 = one("nliebialg2", id::nliebialg2(&d, nm, pm)?);
        let nliebialg2_r = one("nliebialg2-r", id::nliebialg2_r_form(c, rm, nm, pm)?);
        let report = CheckReport::merge([nc.clone(), nc_r.clone(), nliebialg2.clone(), nliebialg2_r.clone()]);
        Ok(PqReport {
            report,
            nc,
            nc_r,
            nliebialg2,
            nliebialg2_r,
        })
    }

    /// Weak relative Rota-Baxter operator `T: V → L` for `(V, ρ, α)` over `(L, N)`.
    pub fn rrbo(
        &self,
        r: &Representation,
        al: &LinearOperator,
        n: &LinearOperator,
        t: &LinearOperator,
    ) -> Result<CheckReport> {
        let (l, v) = (&r.algebra.space, &r.space);
        endo_on(n, l.dim(), "N")?;
        endo_on(al, v.dim(), "alpha")?;
        if t.matrix.shape() != [l.dim(), v.dim()] {
            return Err(Error::shape(format!(
                "T must map a {}-dimensional module into a {}-dimensional algebra",
                v.dim(),
                l.dim()
            )));
        }
        let parts = vec![
            part("rbo-1", id::rbo1(&r.algebra.c, &r.action, &t.matrix)?, &[v, v, l]),
            part("rbo-2", id::rbo2(&n.matrix, &t.matrix, &al.matrix)?, &[l, v]),
        ];
        Ok(self.finish(parts, &[&r.algebra.c, &r.action, &al.matrix, &n.matrix, &t.matrix], vec![]))
    }
}
