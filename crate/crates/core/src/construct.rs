//! Builders producing new structures from data. Builders never validate hypotheses; the
//! checks do that, so both directions of an equivalence can be exercised.
//!
//! Direct sums concatenate bases with the first summand first. Dual bases pair by the
//! Kronecker pairing and their labels toggle a trailing `*`.

use crate::error::{Error, Result};
use crate::multilinear::{contract, inverse, BilinearForm, LinearOperator, Tensor, TwoTensor};
use crate::scalars::Scalar;
use crate::structures::identities as id;
use crate::structures::{Corepresentation, LieAlgebra, LieCoalgebra, Representation};

fn fit(expected: usize, got: usize, what: &str) -> Result<()> {
    if expected != got {
        return Err(Error::shape(format!("{what}: expected dimension {expected}, got {got}")));
    }
    Ok(())
}

fn square(op: &LinearOperator, n: usize, what: &str) -> Result<()> {
    if op.matrix.shape() != [n, n] {
        return Err(Error::shape(format!("{what} must be {n}×{n}, got {:?}", op.matrix.shape())));
    }
    Ok(())
}

/// `δ_r(x) = r¹⊗[x,r²] + [x,r¹]⊗r²`.
pub fn delta_from_r(l: &LieAlgebra, r: &TwoTensor) -> Result<LieCoalgebra> {
    fit(l.dim(), r.space.dim(), "delta_from_r")?;
    LieCoalgebra::new(l.space.clone(), id::delta_r(&l.c, &r.matrix)?)
}

/// `[x,y]_ω = x₍₁₎ω(x₍₂₎,y) + y₍₁₎ω(x,y₍₂₎)`, antisymmetric for skew `ω`.
pub fn bracket_from_omega(c: &LieCoalgebra, w: &BilinearForm) -> Result<LieAlgebra> {
    fit(c.dim(), w.space.dim(), "bracket_from_omega")?;
    LieAlgebra::new(c.space.clone(), id::bracket_from_omega(&c.d, &w.matrix)?)
}

/// `N(x) = ω(x, r¹) r²`.
pub fn nijenhuis_from_omega_r(l: &LieAlgebra, w: &BilinearForm, r: &TwoTensor) -> Result<LinearOperator> {
    fit(l.dim(), w.space.dim(), "form")?;
    fit(l.dim(), r.space.dim(), "two-tensor")?;
    let m = contract("xa,aj->jx", &[&w.matrix, &r.matrix])?;
    LinearOperator::endo(&l.space, m)
}

/// `P(x) = r¹ ω(r², x)`.
pub fn p_from_r_omega(c: &LieCoalgebra, r: &TwoTensor, w: &BilinearForm) -> Result<LinearOperator> {
    fit(c.dim(), w.space.dim(), "form")?;
    fit(c.dim(), r.space.dim(), "two-tensor")?;
    let m = contract("ib,bx->ix", &[&r.matrix, &w.matrix])?;
    LinearOperator::endo(&c.space, m)
}

/// Passage to the dual space.
pub trait Dualize {
    type Output;
    fn dualize(&self) -> Result<Self::Output>;
}

/// Bracket to cobracket: `d*[k][i][j] = c[i][j][k]`, no sign.
impl Dualize for LieAlgebra {
    type Output = LieCoalgebra;
    fn dualize(&self) -> Result<LieCoalgebra> {
        LieCoalgebra::new(self.space.dual(), self.c.permute(&[2, 0, 1])?)
    }
}

/// Cobracket to bracket: `c*[i][j][k] = d[k][i][j]`, no sign.
impl Dualize for LieCoalgebra {
    type Output = LieAlgebra;
    fn dualize(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.space.dual(), self.d.permute(&[1, 2, 0])?)
    }
}

/// Dual representation `ρ*(x) = -ρ(x)ᵀ` on `V*`.
impl Dualize for Representation {
    type Output = Representation;
    fn dualize(&self) -> Result<Representation> {
        Representation::new(self.algebra.clone(), self.space.dual(), self.action.permute(&[0, 2, 1])?.neg())
    }
}

/// A coaction of `(L, δ)` on `V` read as an action of `(L*, δ*)` on `V*`:
/// `γ*(x*) v* = ⟨x*, u₍₋₁₎⟩⟨v*, u₍₀₎⟩`.
impl Dualize for Corepresentation {
    type Output = Representation;
    fn dualize(&self) -> Result<Representation> {
        Representation::new(self.coalgebra.dualize()?, self.space.dual(), self.coaction.permute(&[1, 0, 2])?)
    }
}

impl Dualize for LinearOperator {
    type Output = LinearOperator;
    fn dualize(&self) -> Result<LinearOperator> {
        Ok(self.transpose())
    }
}

/// An action of `L` on `V` read as a coaction of `(L*, [,]*)` on `V*`:
/// `⟨ρ*(v*), x⊗u⟩ = ⟨v*, ρ(x)u⟩`.
pub fn rep_to_corep(r: &Representation) -> Result<Corepresentation> {
    Corepresentation::new(r.algebra.dualize()?, r.space.dual(), r.action.permute(&[1, 0, 2])?)
}

/// The coalgebra coacting on itself by its cobracket.
pub fn adjoint_corep(c: &LieCoalgebra) -> Corepresentation {
    Corepresentation {
        coalgebra: c.clone(),
        space: c.space.clone(),
        coaction: c.d.clone(),
    }
}

/// `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u` on `L ⊕ V`, with operator `N ⊕ α`.
pub fn semidirect_product(
    r: &Representation,
    n: &LinearOperator,
    al: &LinearOperator,
) -> Result<(LieAlgebra, LinearOperator)> {
    let (l, k) = (r.algebra.dim(), r.space.dim());
    square(n, l, "N")?;
    square(al, k, "alpha")?;
    let space = r.algebra.space.direct_sum(&r.space);
    let mut c = Tensor::zeros(&[l + k, l + k, l + k]);
    for (idx, v) in r.algebra.c.nonzero() {
        c.set(&idx, v.clone());
    }
    for (idx, v) in r.action.nonzero() {
        let (x, o, i) = (idx[0], idx[1], idx[2]);
        c.set(&[x, l + i, l + o], v.clone());
        c.set(&[l + i, x, l + o], -v);
    }
    Ok((LieAlgebra::new(space, c)?, n.direct_sum(al)))
}

/// `δ(x+v) = x₍₁₎⊗x₍₂₎ + v₍₋₁₎⊗v₍₀₎ - v₍₀₎⊗v₍₋₁₎` on `L ⊕ V`, with operator `P ⊕ β`.
pub fn semidirect_coproduct(
    k: &Corepresentation,
    p: &LinearOperator,
    b: &LinearOperator,
) -> Result<(LieCoalgebra, LinearOperator)> {
    let (l, m) = (k.coalgebra.dim(), k.space.dim());
    square(p, l, "P")?;
    square(b, m, "beta")?;
    let space = k.coalgebra.space.direct_sum(&k.space);
    let mut d = Tensor::zeros(&[l + m, l + m, l + m]);
    for (idx, v) in k.coalgebra.d.nonzero() {
        d.set(&idx, v.clone());
    }
    for (idx, v) in k.coaction.nonzero() {
        let (u, x, w) = (idx[0], idx[1], idx[2]);
        d.add_at(&[l + u, x, l + w], v);
        d.add_at(&[l + u, l + w, x], &-v);
    }
    Ok((LieCoalgebra::new(space, d)?, p.direct_sum(b)))
}

/// Bicrossed bracket `[x+a, y+b] = [x,y] + ρ_H(a)y - ρ_H(b)x + [a,b] + ρ_L(x)b - ρ_L(y)a`
/// on `L ⊕ H`, with operator `N_L ⊕ N_H`. `rho_l` is `L` acting on `H`.
pub fn double_matched_pair(
    rho_l: &Representation,
    rho_h: &Representation,
    n_l: &LinearOperator,
    n_h: &LinearOperator,
) -> Result<(LieAlgebra, LinearOperator)> {
    let (l, h) = (rho_l.algebra.dim(), rho_h.algebra.dim());
    fit(h, rho_l.space.dim(), "rho_L module")?;
    fit(l, rho_h.space.dim(), "rho_H module")?;
    square(n_l, l, "N_L")?;
    square(n_h, h, "N_H")?;
    let space = rho_l.algebra.space.direct_sum(&rho_h.algebra.space);
    let mut c = Tensor::zeros(&[l + h, l + h, l + h]);
    for (idx, v) in rho_l.algebra.c.nonzero() {
        c.set(&idx, v.clone());
    }
    for (idx, v) in rho_h.algebra.c.nonzero() {
        c.set(&[l + idx[0], l + idx[1], l + idx[2]], v.clone());
    }
    // [x, b] = ρ_L(x)b - ρ_H(b)x
    for (idx, v) in rho_l.action.nonzero() {
        let (x, o, b) = (idx[0], idx[1], idx[2]);
        c.add_at(&[x, l + b, l + o], v);
        c.add_at(&[l + b, x, l + o], &-v);
    }
    for (idx, v) in rho_h.action.nonzero() {
        let (b, o, x) = (idx[0], idx[1], idx[2]);
        c.add_at(&[x, l + b, o], &-v);
        c.add_at(&[l + b, x, o], v);
    }
    Ok((LieAlgebra::new(space, c)?, n_l.direct_sum(n_h)))
}

/// The double `L ⊕ L*` of a Lie bialgebra: the bicrossed bracket for the coadjoint
/// actions, the operator `N ⊕ P*`, and the pairing form `B(x+a*, y+b*) = ⟨a*,y⟩ + ⟨b*,x⟩`.
pub fn manin_double(
    l: &LieAlgebra,
    c: &LieCoalgebra,
    n: &LinearOperator,
    p: &LinearOperator,
) -> Result<(LieAlgebra, LinearOperator, BilinearForm)> {
    fit(l.dim(), c.dim(), "manin_double")?;
    let dual = c.dualize()?;
    let rho_l = Representation::adjoint(l).dualize()?;
    let rho_h = Representation::adjoint(&dual).dualize()?;
    let (algebra, op) = double_matched_pair(&rho_l, &rho_h, n, &p.transpose())?;
    let k = l.dim();
    let form = Tensor::from_fn(&[2 * k, 2 * k], |ij| {
        let (i, j) = (ij[0], ij[1]);
        if (i < k) != (j < k) && i % k == j % k {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let b = BilinearForm::new(algebra.space.clone(), form)?;
    Ok((algebra, op, b))
}

/// `N̂ = B⁻¹ Nᵀ B`, so that `B(Nx, y) = B(x, N̂y)`.
pub fn adjoint_operator(b: &BilinearForm, n: &LinearOperator) -> Result<LinearOperator> {
    square(n, b.space.dim(), "operator")?;
    let inv = inverse(&b.matrix)?;
    let m = contract("ij,kj,kl->il", &[&inv, &n.matrix, &b.matrix])?;
    LinearOperator::endo(&b.space, m)
}

/// `Φ_r(v*) = ⟨v*, r¹⟩ r²` as a map from the dual space.
pub fn phi_r(r: &TwoTensor) -> LinearOperator {
    LinearOperator {
        domain: r.space.dual(),
        codomain: r.space.clone(),
        matrix: r.matrix.transpose(),
    }
}

/// `r = Σᵢ T(eᵢ)⊗eⁱ - eⁱ⊗T(eᵢ)` inside `L ⋉ V*` for the dual action.
pub fn r_from_t(t: &LinearOperator, rep: &Representation) -> Result<(LieAlgebra, TwoTensor)> {
    let (l, k) = (rep.algebra.dim(), rep.space.dim());
    if t.matrix.shape() != [l, k] {
        return Err(Error::shape(format!(
            "T must map the {k}-dimensional module into the {l}-dimensional algebra"
        )));
    }
    let dual = rep.dualize()?;
    let (ambient, _) = semidirect_product(
        &dual,
        &LinearOperator::zero(&rep.algebra.space, &rep.algebra.space),
        &LinearOperator::zero(&dual.space, &dual.space),
    )?;
    let mut m = Tensor::zeros(&[l + k, l + k]);
    for (idx, v) in t.matrix.nonzero() {
        let (a, i) = (idx[0], idx[1]);
        m.set(&[a, l + i], v.clone());
        m.set(&[l + i, a], -v);
    }
    let r = TwoTensor::new(ambient.space.clone(), m)?;
    Ok((ambient, r))
}

/// `Δ(x) = (1⊗P + P⊗1)δ(x) - δ(Px)`, the cobracket deformed by `P`.
pub fn deformed_cobracket(c: &LieCoalgebra, p: &LinearOperator) -> Result<LieCoalgebra> {
    square(p, c.dim(), "P")?;
    let d = id::combo(&[
        (1, "xiq,jq->xij", &[&c.d, &p.matrix]),
        (1, "xpj,ip->xij", &[&c.d, &p.matrix]),
        (-1, "mx,mij->xij", &[&p.matrix, &c.d]),
    ])?;
    LieCoalgebra::new(c.space.clone(), d)
}

/// `Γ(v) = (1⊗β + P⊗1)γ(v) - γ(βv)`, the coaction deformed by `(P, β)`, as a coaction of
/// the given deformed coalgebra.
pub fn deformed_coaction(
    k: &Corepresentation,
    p: &LinearOperator,
    b: &LinearOperator,
    over: &LieCoalgebra,
) -> Result<Corepresentation> {
    square(p, k.coalgebra.dim(), "P")?;
    square(b, k.space.dim(), "beta")?;
    let g = id::combo(&[
        (1, "viq,kq->vik", &[&k.coaction, &b.matrix]),
        (1, "vpk,ip->vik", &[&k.coaction, &p.matrix]),
        (-1, "mv,mik->vik", &[&b.matrix, &k.coaction]),
    ])?;
    Corepresentation::new(over.clone(), k.space.clone(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::BasisSpace;
    use crate::scalars::s;
    use crate::structures::checks::tests::{op, qt_r, sl2};
    use crate::structures::{Checker, Verdict};

    fn nsl2_omega(space: &BasisSpace) -> BilinearForm {
        let rows = [["0", "0", "kappa"], ["0", "0", "-2*kappa"], ["-kappa", "2*kappa", "0"]];
        let m = Tensor::from_rows(&rows.map(|r| r.map(s).to_vec()), 3).unwrap();
        BilinearForm::new(space.clone(), m).unwrap()
    }

    #[test]
    fn delta_of_a_symmetric_tensor() {
        let l = sl2();
        let ff = TwoTensor::new(l.space.clone(), Tensor::from_fn(&[3, 3], |ij| if ij == [1, 1] { s("1") } else { s("0") })).unwrap();
        let d = delta_from_r(&l, &ff).unwrap();
        // δ(e) = f⊗g + g⊗f
        assert_eq!(d.d.get(&[0, 1, 2]), &s("1"));
        assert_eq!(d.d.get(&[0, 2, 1]), &s("1"));
        assert!(delta_from_r(&l, &TwoTensor::zero(&l.space)).unwrap().d.is_zero());
    }

    #[test]
    fn nijenhuis_from_the_nsl2_data() {
        let l = sl2();
        let n = nijenhuis_from_omega_r(&l, &nsl2_omega(&l.space), &qt_r(&l.space)).unwrap();
        let expected = op(&l.space, &[&["0", "-lambda*kappa", "0"], &["0", "2*lambda*kappa", "0"], &["0", "0", "2*lambda*kappa"]]);
        assert_eq!(n, expected);
        assert_eq!(Checker::plain().nijenhuis(&l, &n).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn p_from_r_omega_gives_a_nijenhuis_coalgebra() {
        let l = sl2();
        let c = delta_from_r(&l, &qt_r(&l.space)).unwrap();
        let w = nsl2_omega(&l.space);
        let ch = Checker::plain();
        assert!(ch.dual_qt(&c, &w).unwrap().passed());
        assert!(ch.weak_cosymplectic(&c, &qt_r(&l.space)).unwrap().passed());
        let bw = bracket_from_omega(&c, &w).unwrap();
        assert!(ch.cybe(&bw, &qt_r(&l.space)).unwrap().passed());
        let p = p_from_r_omega(&c, &qt_r(&l.space), &w).unwrap();
        assert_eq!(ch.nijenhuis_coalgebra(&c, &p).unwrap().verdict, Verdict::Pass);
        assert!(ch.weak_symplectic(&bw, &w).unwrap().passed());
    }

    #[test]
    fn duals() {
        let l = sl2();
        let c = l.dualize().unwrap();
        assert_eq!(c.d.get(&[2, 0, 1]), &s("1"));
        assert_eq!(c.space.labels(), ["e*", "f*", "g*"]);
        assert_eq!(c.dualize().unwrap(), l);
        let ch = Checker::plain();
        let co = Representation::adjoint(&l).dualize().unwrap();
        assert!(ch.representation(&co).unwrap().passed());
        assert_eq!(co.dualize().unwrap(), Representation::adjoint(&l));
        // the coadjoint corepresentation of sl₂* dualizes back to a representation
        let k = rep_to_corep(&Representation::adjoint(&l)).unwrap();
        assert!(ch.corepresentation(&k, None).unwrap().passed());
        assert!(ch.representation(&k.dualize().unwrap()).unwrap().passed());
        // (δ_r, P) of the nsl2 data dualizes to a Nijenhuis Lie algebra
        let d = delta_from_r(&l, &qt_r(&l.space)).unwrap();
        let p = p_from_r_omega(&d, &qt_r(&l.space), &nsl2_omega(&l.space)).unwrap();
        assert!(ch.nijenhuis(&d.dualize().unwrap(), &p.transpose()).unwrap().passed());
    }

    #[test]
    fn semidirect_products() {
        let l = sl2();
        let n = op(&l.space, &[&["0", "-lambda*kappa", "0"], &["0", "2*lambda*kappa", "0"], &["0", "0", "2*lambda*kappa"]]);
        let (big, nn) = semidirect_product(&Representation::adjoint(&l), &n, &n).unwrap();
        assert_eq!(big.space.labels(), ["e", "f", "g", "e'", "f'", "g'"]);
        let ch = Checker::plain();
        assert!(ch.lie_algebra(&big).unwrap().passed());
        assert!(ch.nijenhuis(&big, &nn).unwrap().passed());
        let zero = BasisSpace::new(Vec::<String>::new()).unwrap();
        let z = LinearOperator::zero(&zero, &zero);
        let (same, n2) = semidirect_product(&Representation::zero(&l, &zero), &n, &z).unwrap();
        assert_eq!((same.c, n2.matrix), (l.c.clone(), n.matrix.clone()));
    }

    #[test]
    fn semidirect_coproduct_of_the_adjoint_corep() {
        let l = sl2();
        let d = delta_from_r(&l, &qt_r(&l.space)).unwrap();
        let p = op(&l.space, &[&["k1", "-k2", "0"], &["0", "k1", "0"], &["0", "0", "k1"]]);
        let ch = Checker::plain();
        let k = adjoint_corep(&d);
        assert!(ch.corepresentation(&k, Some((&p, &p))).unwrap().passed());
        let (big, pp) = semidirect_coproduct(&k, &p, &p).unwrap();
        assert!(ch.lie_coalgebra(&big).unwrap().passed());
        assert!(ch.nijenhuis_coalgebra(&big, &pp).unwrap().passed());
    }

    #[test]
    fn double_is_frobenius_with_adjoint_operator() {
        let l = sl2();
        let d = delta_from_r(&l, &qt_r(&l.space)).unwrap();
        let n = op(&l.space, &[&["k1", "k2", "0"], &["0", "k1", "0"], &["0", "0", "k1"]]);
        let p = LinearOperator::scalar(&l.space, &s("k1"));
        let (dbl, op6, b) = manin_double(&l, &d, &n, &p).unwrap();
        assert_eq!(dbl.space.labels(), ["e", "f", "g", "e*", "f*", "g*"]);
        let ch = Checker::plain();
        assert!(ch.lie_algebra(&dbl).unwrap().passed());
        assert_eq!(ch.frobenius(&dbl, &b, Some(&op6)).unwrap().verdict, Verdict::Pass);
        let hat = adjoint_operator(&b, &op6).unwrap();
        assert_eq!(hat.matrix, p.direct_sum(&n.transpose()).matrix);
        // matched pair view of the same double
        let dual = d.dualize().unwrap();
        let rl = Representation::adjoint(&l).dualize().unwrap();
        let rh = Representation::adjoint(&dual).dualize().unwrap();
        assert!(ch.matched_pair(&rl, &rh, &n, &p.transpose()).unwrap().passed());
    }

    #[test]
    fn phi_and_r_from_t() {
        let l = sl2();
        let r0 = qt_r(&l.space);
        let t = phi_r(&r0);
        // Φ(f*) = λg, Φ(g*) = -λf
        assert_eq!(t.entry(2, 1), &s("lambda"));
        assert_eq!(t.entry(1, 2), &s("-lambda"));
        assert_eq!(t.matrix.nonzero().len(), 2);
        let coad = Representation::adjoint(&l).dualize().unwrap();
        let (amb, r) = r_from_t(&t, &coad).unwrap();
        assert_eq!(amb.dim(), 6);
        assert_eq!(Checker::plain().cybe(&amb, &r).unwrap().verdict, Verdict::Pass);
        let (_, r0) = r_from_t(&LinearOperator::zero(&coad.space, &l.space), &coad).unwrap();
        assert!(r0.matrix.is_zero());
    }

    #[test]
    fn deformation_satisfies_the_homomorphism_identities() {
        let l = sl2();
        let d = delta_from_r(&l, &qt_r(&l.space)).unwrap();
        let p = op(&l.space, &[&["k1", "-k2", "0"], &["0", "k1", "0"], &["0", "0", "k1"]]);
        let dd = deformed_cobracket(&d, &p).unwrap();
        let k = adjoint_corep(&d);
        let gg = deformed_coaction(&k, &p, &p, &dd).unwrap();
        let ch = Checker::plain();
        let rep = ch
            .deformed_homomorphism(&d, &dd, &k, &gg, &p, &p, Some((&s("s"), &s("t"))))
            .unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{:?}", rep.residuals);
        assert!(ch.compatible_pair(&d, &dd, &s("s"), &s("t"), Some((&k, &gg))).unwrap().passed());
    }
}
