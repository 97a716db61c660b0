//! Residual tensors of every identity, written as signed sums of contractions.
//!
//! Index conventions: `c[i,j,k]` bracket, `d[i,j,k]` cobracket, operators `[out,in]`,
//! forms `w[a,b]`, two-tensors `r[i,j]`, actions `rho[x,out,in]`, coactions `g[v,l,w]`.
//! A residual tensor vanishes exactly when the identity holds.

use crate::error::Result;
use crate::multilinear::{contract, Tensor};

/// `Σ sign · contract(plan, operands)`.
pub fn combo(terms: &[(i64, &str, &[&Tensor])]) -> Result<Tensor> {
    let mut acc: Option<Tensor> = None;
    for (sign, plan, ops) in terms {
        let mut t = contract(plan, ops)?;
        if *sign != 1 {
            t = t.scale(&crate::scalars::Scalar::from_int(*sign));
        }
        acc = Some(match acc {
            Some(a) => a.add(&t)?,
            None => t,
        });
    }
    Ok(acc.expect("at least one term"))
}

pub fn antisymmetry(c: &Tensor) -> Result<Tensor> {
    combo(&[(1, "abk->abk", &[c]), (1, "bak->abk", &[c])])
}

pub fn jacobi(c: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xym,mzw->xyzw", &[c, c]),
        (1, "yzm,mxw->xyzw", &[c, c]),
        (1, "zxm,myw->xyzw", &[c, c]),
    ])
}

pub fn co_antisymmetry(d: &Tensor) -> Result<Tensor> {
    combo(&[(1, "ajk->ajk", &[d]), (1, "akj->ajk", &[d])])
}

/// `(1 + τ + τ²)(1 ⊗ Δ_in) Δ_out` with `τ` the cyclic shift of three factors.
pub fn co_jacobi_mixed(outer: &Tensor, inner: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xim,mjk->xijk", &[outer, inner]),
        (1, "xkm,mij->xijk", &[outer, inner]),
        (1, "xjm,mki->xijk", &[outer, inner]),
    ])
}

pub fn co_jacobi(d: &Tensor) -> Result<Tensor> {
    co_jacobi_mixed(d, d)
}

/// `δ([x,y]) - ad_x δ(y) + ad_y δ(x)`, indexed `[x,y,i,j]`.
pub fn cocycle(c: &Tensor, d: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xym,mij->xyij", &[c, d]),
        (-1, "ypj,xpi->xyij", &[d, c]),
        (-1, "yip,xpj->xyij", &[d, c]),
        (1, "xpj,ypi->xyij", &[d, c]),
        (1, "xip,ypj->xyij", &[d, c]),
    ])
}

/// Nijenhuis torsion `[Na,Nb] + N²[a,b] - N[Na,b] - N[a,Nb]`, indexed `[a,b,w]`.
pub fn nijenhuis(c: &Tensor, n: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "pa,qb,pqw->abw", &[n, n, c]),
        (1, "abm,nm,wn->abw", &[c, n, n]),
        (-1, "pa,pbm,wm->abw", &[n, c, n]),
        (-1, "qb,aqm,wm->abw", &[n, c, n]),
    ])
}

/// `(P⊗P)δ(x) + δ(P²x) - (P⊗1)δ(Px) - (1⊗P)δ(Px)`, indexed `[x,i,j]`.
pub fn nijenhuis_coalgebra(d: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xpq,ip,jq->xij", &[d, p, p]),
        (1, "mx,nm,nij->xij", &[p, p, d]),
        (-1, "mx,mpj,ip->xij", &[p, d, p]),
        (-1, "mx,miq,jq->xij", &[p, d, p]),
    ])
}

/// `[r12,r13] + [r12,r23] + [r13,r23]`, indexed `[i,j,k]`.
pub fn cybe(c: &Tensor, r: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "aj,bk,abi->ijk", &[r, r, c]),
        (1, "ia,bk,abj->ijk", &[r, r, c]),
        (1, "ia,jb,abk->ijk", &[r, r, c]),
    ])
}

/// `r + r^σ`.
pub fn two_tensor_antisymmetry(r: &Tensor) -> Result<Tensor> {
    combo(&[(1, "ij->ij", &[r]), (1, "ji->ij", &[r])])
}

/// `w + wᵀ`.
pub fn skew(w: &Tensor) -> Result<Tensor> {
    two_tensor_antisymmetry(w)
}

/// `w - wᵀ`.
pub fn symmetry(w: &Tensor) -> Result<Tensor> {
    combo(&[(1, "ij->ij", &[w]), (-1, "ji->ij", &[w])])
}

/// Classical co-Yang-Baxter residual, indexed `[x,y,z]`.
pub fn co_cybe(d: &Tensor, w: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xpq,py,qz->xyz", &[d, w, w]),
        (1, "zpq,xp,yq->xyz", &[d, w, w]),
        (1, "ypq,xp,qz->xyz", &[d, w, w]),
    ])
}

/// Bracket induced by a cobracket and a form: `[x,y]_ω = x₍₁₎ω(x₍₂₎,y) + y₍₁₎ω(x,y₍₂₎)`.
pub fn bracket_from_omega(d: &Tensor, w: &Tensor) -> Result<Tensor> {
    combo(&[(1, "xkq,qy->xyk", &[d, w]), (1, "ykq,xq->xyk", &[d, w])])
}

/// `ω([x,y]_ω, z) - ω(x,z₍₁₎)ω(y,z₍₂₎)`, indexed `[x,y,z]`.
pub fn cqt1(d: &Tensor, w: &Tensor) -> Result<Tensor> {
    let cw = bracket_from_omega(d, w)?;
    combo(&[
        (1, "xym,mz->xyz", &[&cw, w]),
        (-1, "zpq,xp,yq->xyz", &[d, w, w]),
    ])
}

/// `ω(x,[y,z]_ω) + ω(x₍₁₎,y)ω(x₍₂₎,z)`, indexed `[x,y,z]`.
pub fn cqt2(d: &Tensor, w: &Tensor) -> Result<Tensor> {
    let cw = bracket_from_omega(d, w)?;
    combo(&[
        (1, "xm,yzm->xyz", &[w, &cw]),
        (1, "xpq,py,qz->xyz", &[d, w, w]),
    ])
}

/// Cyclic sum `ω([x,y],z) + ω([y,z],x) + ω([z,x],y)`.
pub fn weak_symplectic(c: &Tensor, w: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xym,mz->xyz", &[c, w]),
        (1, "yzm,mx->xyz", &[c, w]),
        (1, "zxm,my->xyz", &[c, w]),
    ])
}

/// `r¹₍₁₎⊗r¹₍₂₎⊗r² + r²⊗r¹₍₁₎⊗r¹₍₂₎ + r¹₍₂₎⊗r²⊗r¹₍₁₎`, indexed `[i,j,k]`.
pub fn weak_cosymplectic(d: &Tensor, r: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "ak,aij->ijk", &[r, d]),
        (1, "ai,ajk->ijk", &[r, d]),
        (1, "aj,aki->ijk", &[r, d]),
    ])
}

/// `ρ([x,y]) - [ρ(x), ρ(y)]`, indexed `[x,y,out,in]`.
pub fn representation(c: &Tensor, rho: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xym,mov->xyov", &[c, rho]),
        (-1, "xop,ypv->xyov", &[rho, rho]),
        (1, "yop,xpv->xyov", &[rho, rho]),
    ])
}

/// `ρ(Nx)α(v) - α(ρ(Nx)v + ρ(x)α(v) - α(ρ(x)v))`, indexed `[x,out,in]`.
pub fn nij_representation(rho: &Tensor, n: &Tensor, al: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "ma,mop,pv->aov", &[n, rho, al]),
        (1, "apv,qp,oq->aov", &[rho, al, al]),
        (-1, "ma,mpv,op->aov", &[n, rho, al]),
        (-1, "pv,aqp,oq->aov", &[al, rho, al]),
    ])
}

/// `β(ρ(Nx)v) + ρ(x)β²(v) - ρ(Nx)β(v) - β(ρ(x)β(v))`, indexed `[x,out,in]`.
pub fn admissible(rho: &Tensor, n: &Tensor, b: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mx,mpv,op->xov", &[n, rho, b]),
        (1, "pv,qp,xoq->xov", &[b, b, rho]),
        (-1, "mx,mop,pv->xov", &[n, rho, b]),
        (-1, "pv,xqp,oq->xov", &[b, rho, b]),
    ])
}

/// Corepresentation identity, indexed `[v,i,j,k]`.
pub fn corepresentation(d: &Tensor, g: &Tensor) -> Result<Tensor> {
    corep_mixed(d, g, None)
}

/// With `other = Some((D, G))`, the mixed identity for `(δ, γ)` and `(D, G)`.
pub fn corep_mixed(d: &Tensor, g: &Tensor, other: Option<(&Tensor, &Tensor)>) -> Result<Tensor> {
    match other {
        None => combo(&[
            (1, "vmk,mij->vijk", &[g, d]),
            (-1, "vim,mjk->vijk", &[g, g]),
            (1, "vjm,mik->vijk", &[g, g]),
        ]),
        Some((dd, gg)) => combo(&[
            (1, "vmk,mij->vijk", &[g, dd]),
            (1, "vmk,mij->vijk", &[gg, d]),
            (-1, "vim,mjk->vijk", &[g, gg]),
            (-1, "vim,mjk->vijk", &[gg, g]),
            (1, "vjm,mik->vijk", &[g, gg]),
            (1, "vjm,mik->vijk", &[gg, g]),
        ]),
    }
}

/// `P(v₍₋₁₎)⊗β(v₍₀₎) + γ(β²v) - (P⊗1)γ(βv) - (1⊗β)γ(βv)`, indexed `[v,i,k]`.
pub fn nij_corepresentation(g: &Tensor, p: &Tensor, b: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "vpq,ip,kq->vik", &[g, p, b]),
        (1, "mv,nm,nik->vik", &[b, b, g]),
        (-1, "mv,mpk,ip->vik", &[b, g, p]),
        (-1, "mv,miq,kq->vik", &[b, g, b]),
    ])
}

/// `D(Px) - (P⊗P)δ(x)`.
pub fn cmh1(d: &Tensor, dd: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mx,mij->xij", &[p, dd]),
        (-1, "xpq,ip,jq->xij", &[d, p, p]),
    ])
}

/// `δ(Px) + D(x) - (1⊗P)δ(x) - (P⊗1)δ(x)`.
pub fn cmh2(d: &Tensor, dd: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mx,mij->xij", &[p, d]),
        (1, "xij->xij", &[dd]),
        (-1, "xiq,jq->xij", &[d, p]),
        (-1, "xpj,ip->xij", &[d, p]),
    ])
}

/// `G(βv) - (P⊗β)γ(v)`.
pub fn cmh3(g: &Tensor, gg: &Tensor, p: &Tensor, b: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mv,mik->vik", &[b, gg]),
        (-1, "vpq,ip,kq->vik", &[g, p, b]),
    ])
}

/// `γ(βv) + G(v) - (1⊗β)γ(v) - (P⊗1)γ(v)`.
pub fn cmh4(g: &Tensor, gg: &Tensor, p: &Tensor, b: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mv,mik->vik", &[b, g]),
        (1, "vik->vik", &[gg]),
        (-1, "viq,kq->vik", &[g, b]),
        (-1, "vpk,ip->vik", &[g, p]),
    ])
}

/// `δ'(f x) - (f⊗f)δ(x)`.
pub fn coalgebra_hom(d: &Tensor, d2: &Tensor, f: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mx,mij->xij", &[f, d2]),
        (-1, "xpq,ip,jq->xij", &[d, f, f]),
    ])
}

/// `γ'(h v) - (f⊗h)γ(v)`.
pub fn corep_hom(g: &Tensor, g2: &Tensor, f: &Tensor, h: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mv,mik->vik", &[h, g2]),
        (-1, "vpq,ip,kq->vik", &[g, f, h]),
    ])
}

/// Matched-pair compatibility with `rho_h` acting on the first algebra and `rho_l` on the
/// second: `ρ_H(a)[x,y] - [ρ_H(a)x,y] - [x,ρ_H(a)y] - ρ_H(ρ_L(y)a)x + ρ_H(ρ_L(x)a)y`,
/// indexed `[a,x,y,w]`.
pub fn matched_pair(c_l: &Tensor, rho_l: &Tensor, rho_h: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "xym,awm->axyw", &[c_l, rho_h]),
        (-1, "amx,myw->axyw", &[rho_h, c_l]),
        (-1, "amy,xmw->axyw", &[rho_h, c_l]),
        (-1, "yba,bwx->axyw", &[rho_l, rho_h]),
        (1, "xba,bwy->axyw", &[rho_l, rho_h]),
    ])
}

/// `B([x,y],z) - B(x,[y,z])`.
pub fn invariance(c: &Tensor, b: &Tensor) -> Result<Tensor> {
    combo(&[(1, "xym,mz->xyz", &[c, b]), (-1, "xm,yzm->xyz", &[b, c])])
}

/// `P(N(x)₍₁₎)⊗N(x)₍₂₎ + x₍₁₎⊗N²(x₍₂₎) - P(x₍₁₎)⊗N(x₍₂₎) - N(x)₍₁₎⊗N(N(x)₍₂₎)`.
pub fn nliebialg2(d: &Tensor, n: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "mx,mpj,ip->xij", &[n, d, p]),
        (1, "xiq,nq,jn->xij", &[d, n, n]),
        (-1, "xpq,ip,jq->xij", &[d, p, n]),
        (-1, "mx,miq,jq->xij", &[n, d, n]),
    ])
}

/// `(P⊗1 - 1⊗N)(r)`.
pub fn pn_twist(r: &Tensor, n: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[(1, "ia,aj->ij", &[p, r]), (-1, "jb,ib->ij", &[n, r])])
}

/// r-form of the Nijenhuis coalgebra identity for `δ_r`, indexed `[x,i,j]`.
pub fn nc_r_form(c: &Tensor, r: &Tensor, n: &Tensor, p: &Tensor) -> Result<Tensor> {
    let a = pn_twist(r, n, p)?;
    let b = pn_twist(r, p, n)?;
    combo(&[
        // (1 ⊗ P ad_x)(A)
        (1, "iq,jm,xqm->xij", &[&a, p, c]),
        // -(1 ⊗ ad_{Px})(A)
        (-1, "iq,px,pqj->xij", &[&a, p, c]),
        // (ad_{Px} ⊗ 1)(B)
        (1, "px,pqi,qj->xij", &[p, c, &b]),
        // -(P ad_x ⊗ 1)(B)
        (-1, "im,xqm,qj->xij", &[p, c, &b]),
    ])
}

/// r-form of the second compatibility identity, indexed `[x,i,j]`.
pub fn nliebialg2_r_form(c: &Tensor, r: &Tensor, n: &Tensor, p: &Tensor) -> Result<Tensor> {
    let a = pn_twist(r, n, p)?;
    combo(&[
        // (1 ⊗ ad_{Nx})(A)
        (1, "iq,px,pqj->xij", &[&a, n, c]),
        // -(1 ⊗ N ad_x)(A)
        (-1, "iq,jm,xqm->xij", &[&a, n, c]),
        // (ad_{Nx} ⊗ 1)(A)
        (1, "px,pqi,qj->xij", &[n, c, &a]),
        // (P ad_x ⊗ 1)(A)
        (1, "im,xqm,qj->xij", &[p, c, &a]),
        // -(ad_x P² ⊗ 1)(r)
        (-1, "xai,ab,bc,cj->xij", &[c, p, p, r]),
        // +(ad_x ⊗ N²)(r)
        (1, "xai,jb,bc,ac->xij", &[c, n, n, r]),
    ])
}

/// `[Tu,Tv] - T(ρ(Tu)v - ρ(Tv)u)`, indexed `[u,v,w]`.
pub fn rbo1(c: &Tensor, rho: &Tensor, t: &Tensor) -> Result<Tensor> {
    combo(&[
        (1, "pu,qv,pqw->uvw", &[t, t, c]),
        (-1, "wo,pu,pov->uvw", &[t, t, rho]),
        (1, "wo,qv,qou->uvw", &[t, t, rho]),
    ])
}

/// `N T - T α`.
pub fn rbo2(n: &Tensor, t: &Tensor, al: &Tensor) -> Result<Tensor> {
    combo(&[(1, "wp,pu->wu", &[n, t]), (-1, "wo,ou->wu", &[t, al])])
}

/// `T β - P T`.
pub fn intertwine(t: &Tensor, b: &Tensor, p: &Tensor) -> Result<Tensor> {
    combo(&[(1, "wo,ou->wu", &[t, b]), (-1, "wp,pu->wu", &[p, t])])
}

/// Cobracket `δ_r(x) = r¹⊗[x,r²] + [x,r¹]⊗r²`.
pub fn delta_r(c: &Tensor, r: &Tensor) -> Result<Tensor> {
    combo(&[(1, "ib,xbj->xij", &[r, c]), (1, "aj,xai->xij", &[r, c])])
}
