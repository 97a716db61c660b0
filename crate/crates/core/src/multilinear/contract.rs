use std::collections::{BTreeMap, HashMap};

use super::Tensor;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

struct Sparse {
    labels: Vec<char>,
    entries: Vec<(Vec<usize>, Scalar)>,
}

impl Sparse {
    fn of(labels: Vec<char>, t: &Tensor) -> Self {
        Sparse {
            labels,
            entries: t.nonzero().into_iter().map(|(i, v)| (i, v.clone())).collect(),
        }
    }
}

fn parse_plan(plan: &str, n_inputs: usize) -> Result<(Vec<Vec<char>>, Vec<char>)> {
    let (lhs, rhs) = plan
        .split_once("->")
        .ok_or_else(|| Error::shape(format!("contraction plan `{plan}` lacks `->`")))?;
    let inputs: Vec<Vec<char>> = lhs
        .split(',')
        .map(|s| s.trim().chars().collect())
        .collect();
    let output: Vec<char> = rhs.trim().chars().collect();
    if inputs.len() != n_inputs {
        return Err(Error::shape(format!(
            "plan `{plan}` names {} operands, {} supplied",
            inputs.len(),
            n_inputs
        )));
    }
    for labels in inputs.iter().chain(std::iter::once(&output)) {
        for (k, c) in labels.iter().enumerate() {
            if !c.is_ascii_alphabetic() || labels[..k].contains(c) {
                return Err(Error::shape(format!("bad or repeated index `{c}` in `{plan}`")));
            }
        }
    }
    for c in &output {
        if !inputs.iter().any(|l| l.contains(c)) {
            return Err(Error::shape(format!("output index `{c}` never appears in `{plan}`")));
        }
    }
    Ok((inputs, output))
}

/// Einstein-summation contraction such as `"xym,mzw->xyzw"`. Indices shared between
/// operands and absent from the output are summed. Operands are joined pairwise from the
/// left, skipping zero entries.
pub fn contract(plan: &str, inputs: &[&Tensor]) -> Result<Tensor> {
    let (labels, output) = parse_plan(plan, inputs.len())?;
    let mut dims: BTreeMap<char, usize> = BTreeMap::new();
    for (ls, t) in labels.iter().zip(inputs) {
        if ls.len() != t.rank() {
            return Err(Error::shape(format!(
                "operand with indices `{}` has rank {}",
                ls.iter().collect::<String>(),
                t.rank()
            )));
        }
        for (c, &n) in ls.iter().zip(t.shape()) {
            if *dims.entry(*c).or_insert(n) != n {
                return Err(Error::shape(format!("index `{c}` has inconsistent dimensions")));
            }
        }
    }
    let out_shape: Vec<usize> = output.iter().map(|c| dims[c]).collect();

    let mut acc = Sparse::of(labels[0].clone(), inputs[0]);
    for k in 1..inputs.len() {
        let needed: Vec<char> = output
            .iter()
            .chain(labels[k + 1..].iter().flatten())
            .copied()
            .collect();
        acc = join(acc, Sparse::of(labels[k].clone(), inputs[k]), &needed);
    }
    let acc = reduce(acc, &output);

    let mut result = Tensor::zeros(&out_shape);
    let pos: Vec<usize> = output
        .iter()
        .map(|c| acc.labels.iter().position(|d| d == c).unwrap())
        .collect();
    let mut idx = vec![0; output.len()];
    for (i, v) in acc.entries {
        for (k, &p) in pos.iter().enumerate() {
            idx[k] = i[p];
        }
        result.set(&idx, v);
    }
    Ok(result)
}

fn join(a: Sparse, b: Sparse, needed: &[char]) -> Sparse {
    let shared: Vec<(usize, usize)> = a
        .labels
        .iter()
        .enumerate()
        .filter_map(|(i, c)| b.labels.iter().position(|d| d == c).map(|j| (i, j)))
        .collect();
    let mut out_labels = Vec::new();
    let mut picks: Vec<(bool, usize)> = Vec::new();
    for (i, c) in a.labels.iter().enumerate() {
        if needed.contains(c) {
            out_labels.push(*c);
            picks.push((true, i));
        }
    }
    for (j, c) in b.labels.iter().enumerate() {
        if needed.contains(c) && !a.labels.contains(c) {
            out_labels.push(*c);
            picks.push((false, j));
        }
    }

    let mut by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (n, (idx, _)) in b.entries.iter().enumerate() {
        let key: Vec<usize> = shared.iter().map(|&(_, j)| idx[j]).collect();
        by_key.entry(key).or_default().push(n);
    }

    let mut sums: HashMap<Vec<usize>, Scalar> = HashMap::new();
    let mut order: Vec<Vec<usize>> = Vec::new();
    for (ia, va) in &a.entries {
        let key: Vec<usize> = shared.iter().map(|&(i, _)| ia[i]).collect();
        let Some(matches) = by_key.get(&key) else {
            continue;
        };
        for &n in matches {
            let (ib, vb) = &b.entries[n];
            let idx: Vec<usize> = picks
                .iter()
                .map(|&(from_a, p)| if from_a { ia[p] } else { ib[p] })
                .collect();
            let prod = va * vb;
            match sums.get_mut(&idx) {
                Some(s) => *s = &*s + &prod,
                None => {
                    order.push(idx.clone());
                    sums.insert(idx, prod);
                }
            }
        }
    }
    Sparse {
        labels: out_labels,
        entries: collect_nonzero(order, sums),
    }
}

fn reduce(a: Sparse, keep: &[char]) -> Sparse {
    if a.labels.iter().all(|c| keep.contains(c)) {
        return a;
    }
    let picks: Vec<usize> = (0..a.labels.len())
        .filter(|&i| keep.contains(&a.labels[i]))
        .collect();
    let mut sums: HashMap<Vec<usize>, Scalar> = HashMap::new();
    let mut order = Vec::new();
    for (i, v) in a.entries {
        let idx: Vec<usize> = picks.iter().map(|&p| i[p]).collect();
        match sums.get_mut(&idx) {
            Some(s) => *s = &*s + &v,
            None => {
                order.push(idx.clone());
                sums.insert(idx, v);
            }
        }
    }
    Sparse {
        labels: picks.iter().map(|&p| a.labels[p]).collect(),
        entries: collect_nonzero(order, sums),
    }
}

fn collect_nonzero(
    order: Vec<Vec<usize>>,
    mut sums: HashMap<Vec<usize>, Scalar>,
) -> Vec<(Vec<usize>, Scalar)> {
    order
        .into_iter()
        .filter_map(|k| {
            let v = sums.remove(&k)?;
            (!v.is_zero()).then_some((k, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(shape: &[usize], vals: &[i64]) -> Tensor {
        Tensor::from_data(shape, vals.iter().map(|&v| Scalar::from_int(v)).collect()).unwrap()
    }

    fn dense_oracle(a: &Tensor, b: &Tensor) -> Tensor {
        // C[i,k] = sum_j A[i,j] B[j,k], written out directly.
        let (n, m, p) = (a.shape()[0], a.shape()[1], b.shape()[1]);
        Tensor::from_fn(&[n, p], |ik| {
            (0..m).fold(Scalar::zero(), |acc, j| {
                &acc + &(a.get(&[ik[0], j]) * b.get(&[j, ik[1]]))
            })
        })
    }

    #[test]
    fn matrix_product_matches_oracle() {
        let a = t(&[2, 3], &[1, 2, 0, -1, 0, 4]);
        let b = t(&[3, 2], &[3, 0, 1, 1, 0, -2]);
        assert_eq!(contract("ij,jk->ik", &[&a, &b]).unwrap(), dense_oracle(&a, &b));
    }

    #[test]
    fn transpose_trace_and_outer() {
        let a = t(&[2, 2], &[1, 2, 3, 4]);
        assert_eq!(contract("ij->ji", &[&a]).unwrap(), a.transpose());
        assert_eq!(contract("ij->i", &[&a]).unwrap(), t(&[2], &[3, 7]));
        let v = t(&[2], &[1, -1]);
        let outer = contract("i,j->ij", &[&v, &v]).unwrap();
        assert_eq!(outer, t(&[2, 2], &[1, -1, -1, 1]));
        let full = contract("ij,ij->", &[&a, &a]).unwrap();
        assert_eq!(full.data(), [Scalar::from_int(30)]);
    }

    #[test]
    fn three_operand_chain() {
        let a = t(&[2, 2], &[1, 1, 0, 1]);
        let abc = contract("ij,jk,kl->il", &[&a, &a, &a]).unwrap();
        assert_eq!(abc, t(&[2, 2], &[1, 3, 0, 1]));
    }

    #[test]
    fn shape_errors() {
        let a = t(&[2, 3], &[0; 6]);
        assert!(contract("ij,ij->i", &[&a, &a.transpose()]).is_err());
        assert!(contract("ijk->i", &[&a]).is_err());
        assert!(contract("ij->k", &[&a]).is_err());
        assert!(contract("ii->i", &[&a]).is_err());
        assert!(contract("ij", &[&a]).is_err());
    }
}
