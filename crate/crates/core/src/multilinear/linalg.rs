use std::collections::HashMap;

use super::Tensor;
use crate::error::{Error, Result};
use crate::scalars::{certify_nonzero, Assumption, Scalar};

/// Basis of a kernel together with the rank certificate.
#[derive(Clone, Debug)]
pub struct Nullspace {
    pub basis: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    /// Assumptions needed to justify pivot divisions.
    pub used: Vec<Assumption>,
}

/// Exact kernel of an `m × ncols` matrix by Gauss-Jordan elimination.
///
/// In each column the first entry that is provably nonzero becomes the pivot: a nonzero
/// constant, or a rational function whose numerator is covered by `assumptions`. A column
/// whose only nonzero candidates are unproven fails with `PivotAmbiguous`.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize, assumptions: &[Assumption]) -> Result<Nullspace> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    if m.iter().any(|r| r.len() != ncols) {
        return Err(Error::shape("ragged matrix rows"));
    }
    let mut pivots: Vec<usize> = Vec::new();
    let mut used: Vec<Assumption> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let mut chosen = None;
        let mut ambiguous = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            let v = &row[col];
            if v.is_zero() {
                continue;
            }
            if v.is_constant() {
                chosen = Some(i);
                break;
            }
            let cert = certify_nonzero(v.numerator(), assumptions);
            if cert.covered() {
                for a in cert.used {
                    if !used.contains(&a) {
                        used.push(a);
                    }
                }
                chosen = Some(i);
                break;
            }
            ambiguous.get_or_insert_with(|| v.numerator().clone());
        }
        let Some(i) = chosen else {
            if let Some(p) = ambiguous {
                return Err(Error::PivotAmbiguous(p));
            }
            continue;
        };
        m.swap(r, i);
        let inv = m[r][col].inv()?;
        for v in m[r].iter_mut().skip(col) {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&factor * &pivot_row[j]);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let basis = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][free];
            }
            v
        })
        .collect();
    Ok(Nullspace {
        basis,
        rank: pivots.len(),
        pivot_columns: pivots,
        used,
    })
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize, assumptions: &[Assumption]) -> Result<usize> {
    Ok(nullspace(rows, ncols, assumptions)?.rank)
}

/// Division-free determinant by Laplace expansion along rows, memoized on column subsets.
pub fn determinant(m: &Tensor) -> Result<Scalar> {
    let n = square_dim(m)?;
    let mut memo = HashMap::new();
    Ok(minor_det(m, 0, (1u64 << n) - 1, n, &mut memo, None))
}

fn square_dim(m: &Tensor) -> Result<usize> {
    match m.shape() {
        [a, b] if a == b && *a < 64 => Ok(*a),
        s => Err(Error::shape(format!("determinant of a non-square matrix {s:?}"))),
    }
}

fn minor_det(
    m: &Tensor,
    row: usize,
    cols: u64,
    n: usize,
    memo: &mut HashMap<(usize, u64), Scalar>,
    skip_row: Option<usize>,
) -> Scalar {
    let row = if skip_row == Some(row) { row + 1 } else { row };
    if cols == 0 || row >= n {
        return Scalar::one();
    }
    if let Some(v) = memo.get(&(row, cols)) {
        return v.clone();
    }
    let mut acc = Scalar::zero();
    let mut sign = 1;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = m.get(&[row, c]);
        if !entry.is_zero() {
            let sub = minor_det(m, row + 1, cols & !(1 << c), n, memo, skip_row);
            let term = entry * &sub;
            acc = if sign > 0 { &acc + &term } else { &acc - &term };
        }
        sign = -sign;
    }
    memo.insert((row, cols), acc.clone());
    acc
}

/// Inverse by adjugate over determinant; `DegenerateForm` if the determinant vanishes identically.
pub fn inverse(m: &Tensor) -> Result<Tensor> {
    let n = square_dim(m)?;
    let det = determinant(m)?;
    if det.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let det_inv = det.inv()?;
    let mut out = Tensor::zeros(&[n, n]);
    for i in 0..n {
        let mut memo = HashMap::new();
        for j in 0..n {
            let cols = ((1u64 << n) - 1) & !(1 << j);
            let minor = minor_det(m, 0, cols, n, &mut memo, Some(i));
            let cof = if (i + j) % 2 == 0 { minor } else { -minor };
            out.set(&[j, i], &cof * &det_inv);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::contract;
    use crate::scalars::s;

    fn row(v: &[&str]) -> Vec<Scalar> {
        v.iter().map(|e| s(e)).collect()
    }

    #[test]
    fn one_by_two() {
        let ns = nullspace(&[row(&["1", "-1"])], 2, &[]).unwrap();
        assert_eq!(ns.basis, vec![row(&["1", "1"])]);
        assert_eq!(ns.rank, 1);
    }

    #[test]
    fn zero_matrix() {
        let z = vec![row(&["0", "0", "0"]); 3];
        let ns = nullspace(&z, 3, &[]).unwrap();
        assert_eq!(ns.basis.len(), 3);
        assert_eq!(ns.rank, 0);
    }

    #[test]
    fn parametric_pivots() {
        let m = vec![row(&["k1", "1"])];
        match nullspace(&m, 2, &[]) {
            Err(Error::PivotAmbiguous(p)) => assert_eq!(p.to_string(), "k1"),
            other => panic!("{other:?}"),
        }
        let a = Assumption::parse("k1").unwrap();
        let ns = nullspace(&m, 2, &a).unwrap();
        assert_eq!(ns.basis, vec![row(&["-1/k1", "1"])]);
        assert_eq!(ns.used, a);
        // a later constant entry in the same column is preferred to an unproven one
        let m = vec![row(&["k1", "1"]), row(&["2", "0"])];
        assert_eq!(nullspace(&m, 2, &[]).unwrap().rank, 2);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Tensor::from_rows(&[row(&["0", "4", "0"]), row(&["4", "0", "0"]), row(&["0", "0", "8"])], 3).unwrap();
        assert_eq!(determinant(&m).unwrap(), s("-128"));
        let inv = inverse(&m).unwrap();
        assert_eq!(contract("ij,jk->ik", &[&m, &inv]).unwrap(), Tensor::identity(3));
        let p = Tensor::from_rows(&[row(&["a", "b"]), row(&["c", "d"])], 2).unwrap();
        assert_eq!(determinant(&p).unwrap(), s("a*d - b*c"));
        let pinv = inverse(&p).unwrap();
        assert_eq!(contract("ij,jk->ik", &[&pinv, &p]).unwrap(), Tensor::identity(2));
        assert!(matches!(inverse(&Tensor::zeros(&[2, 2])), Err(Error::DegenerateForm)));
    }
}
