//! Maps `check` directives and `construct` operations onto the library.

use crate::cli::document::{CheckDirective, Document, Item};
use crate::construct::{self, Dualize};
use crate::error::{Error, Result};
use crate::multilinear::{BilinearForm, LinearOperator, TwoTensor};
use crate::scalars::{parse_scalar, Scalar};
use crate::structures::{CheckReport, Checker, Corepresentation, LieAlgebra, LieCoalgebra, Representation};

/// Every check kind with its argument signature; `[..]` marks an optional tail.
pub const CHECK_KINDS: &[(&str, &str)] = &[
    ("lie-algebra", "ALGEBRA"),
    ("lie-coalgebra", "COALGEBRA"),
    ("cocycle", "ALGEBRA COALGEBRA"),
    ("nijenhuis", "ALGEBRA N"),
    ("nijenhuis-coalgebra", "COALGEBRA P"),
    ("cybe", "ALGEBRA r"),
    ("co-cybe", "COALGEBRA omega"),
    ("dual-qt", "COALGEBRA omega"),
    ("weak-symplectic", "ALGEBRA omega"),
    ("weak-cosymplectic", "COALGEBRA r"),
    ("representation", "REP"),
    ("nij-representation", "REP N alpha"),
    ("admissible", "REP N beta"),
    ("p-admissible", "ALGEBRA N P"),
    ("corepresentation", "COREP [P beta]"),
    ("compatible-pair", "COALGEBRA COALGEBRA s t [COREP COREP]"),
    ("deformed-homomorphism", "COALGEBRA COALGEBRA COREP COREP P beta [s t]"),
    ("matched-pair", "REP_L REP_H N_L N_H"),
    ("frobenius", "ALGEBRA B [N]"),
    ("nij-lie-bialgebra", "ALGEBRA COALGEBRA N P"),
    ("cpnybe", "ALGEBRA r N P"),
    ("pq-equivalents", "ALGEBRA r N P"),
    ("rrbo", "REP alpha N T"),
];

/// Every construction with its argument signature.
pub const CONSTRUCT_OPS: &[(&str, &str)] = &[
    ("delta-from-r", "ALGEBRA r"),
    ("bracket-from-omega", "COALGEBRA omega"),
    ("nijenhuis-from-omega-r", "ALGEBRA omega r"),
    ("p-from-r-omega", "COALGEBRA r omega"),
    ("dualize", "ITEM"),
    ("rep-to-corep", "REP"),
    ("adjoint-corep", "COALGEBRA"),
    ("semidirect-product", "REP N alpha"),
    ("semidirect-coproduct", "COREP P beta"),
    ("double-matched-pair", "REP_L REP_H N_L N_H"),
    ("manin-double", "ALGEBRA COALGEBRA N P"),
    ("adjoint-operator", "B N"),
    ("phi-r", "r"),
    ("r-from-t", "T REP"),
    ("deformed-cobracket", "COALGEBRA P"),
    ("deformed-coaction", "COREP P beta DEFORMED_COALGEBRA"),
];

/// Positional argument access with located diagnostics.
struct Args<'a> {
    doc: &'a Document,
    args: &'a [String],
    line: usize,
    what: &'a str,
}

impl<'a> Args<'a> {
    fn arity(&self, min: usize, max: usize) -> Result<()> {
        let n = self.args.len();
        if n < min || n > max {
            let want = if min == max { format!("{min}") } else { format!("{min} to {max}") };
            return Err(Error::Syntax {
                line: self.line,
                col: 1,
                message: format!("`{}` takes {want} arguments, got {n}", self.what),
            });
        }
        Ok(())
    }

    fn item(&self, i: usize) -> Result<&'a Item> {
        let name = &self.args[i];
        self.doc.item(name).ok_or_else(|| Error::UnknownName {
            name: name.clone(),
            line: self.line,
            col: 1,
        })
    }

    fn wrong(&self, i: usize, want: &str) -> Error {
        Error::Syntax {
            line: self.line,
            col: 1,
            message: format!("argument {} of `{}` must be a {want}", i + 1, self.what),
        }
    }

    fn algebra(&self, i: usize) -> Result<&'a LieAlgebra> {
        match self.item(i)? {
            Item::Algebra(a) => Ok(a),
            _ => Err(self.wrong(i, "Lie algebra")),
        }
    }

    fn coalgebra(&self, i: usize) -> Result<&'a LieCoalgebra> {
        match self.item(i)? {
            Item::Coalgebra(c) => Ok(c),
            _ => Err(self.wrong(i, "Lie coalgebra")),
        }
    }

    fn operator(&self, i: usize) -> Result<&'a LinearOperator> {
        match self.item(i)? {
            Item::Operator(o) => Ok(o),
            _ => Err(self.wrong(i, "linear operator")),
        }
    }

    fn form(&self, i: usize) -> Result<&'a BilinearForm> {
        match self.item(i)? {
            Item::Form(f) => Ok(f),
            _ => Err(self.wrong(i, "bilinear form")),
        }
    }

    fn tensor(&self, i: usize) -> Result<&'a TwoTensor> {
        match self.item(i)? {
            Item::Tensor(t) => Ok(t),
            _ => Err(self.wrong(i, "two-tensor")),
        }
    }

    fn rep(&self, i: usize) -> Result<&'a Representation> {
        match self.item(i)? {
            Item::Representation { rep, .. } => Ok(rep),
            _ => Err(self.wrong(i, "representation")),
        }
    }

    fn corep(&self, i: usize) -> Result<&'a Corepresentation> {
        match self.item(i)? {
            Item::Corepresentation { corep, .. } => Ok(corep),
            _ => Err(self.wrong(i, "corepresentation")),
        }
    }

    fn scalar(&self, i: usize) -> Result<Scalar> {
        let v = parse_scalar(&self.args[i]).map_err(|e| Error::Syntax {
            line: self.line,
            col: 1,
            message: format!("argument {} of `{}`: {e}", i + 1, self.what),
        })?;
        if let Some(p) = v.parameters().into_iter().find(|p| !self.doc.params.contains(p)) {
            return Err(Error::UnknownName {
                name: p.to_string(),
                line: self.line,
                col: 1,
            });
        }
        Ok(v)
    }
}

/// Runs one directive. The checker carries the document and command-line assumptions.
pub fn run_check(doc: &Document, d: &CheckDirective, checker: &Checker) -> Result<CheckReport> {
    let a = Args {
        doc,
        args: &d.args,
        line: d.line,
        what: &d.kind,
    };
    match d.kind.as_str() {
        "lie-algebra" => {
            a.arity(1, 1)?;
            checker.lie_algebra(a.algebra(0)?)
        }
        "lie-coalgebra" => {
            a.arity(1, 1)?;
            checker.lie_coalgebra(a.coalgebra(0)?)
        }
        "cocycle" => {
            a.arity(2, 2)?;
            checker.cocycle(a.algebra(0)?, a.coalgebra(1)?)
        }
        "nijenhuis" => {
            a.arity(2, 2)?;
            checker.nijenhuis(a.algebra(0)?, a.operator(1)?)
        }
        "nijenhuis-coalgebra" => {
            a.arity(2, 2)?;
            checker.nijenhuis_coalgebra(a.coalgebra(0)?, a.operator(1)?)
        }
        "cybe" => {
            a.arity(2, 2)?;
            checker.cybe(a.algebra(0)?, a.tensor(1)?)
        }
        "co-cybe" => {
            a.arity(2, 2)?;
            checker.co_cybe(a.coalgebra(0)?, a.form(1)?)
        }
        "dual-qt" => {
            a.arity(2, 2)?;
            checker.dual_qt(a.coalgebra(0)?, a.form(1)?)
        }
        "weak-symplectic" => {
            a.arity(2, 2)?;
            checker.weak_symplectic(a.algebra(0)?, a.form(1)?)
        }
        "weak-cosymplectic" => {
            a.arity(2, 2)?;
            checker.weak_cosymplectic(a.coalgebra(0)?, a.tensor(1)?)
        }
        "representation" => {
            a.arity(1, 1)?;
            checker.representation(a.rep(0)?)
        }
        "nij-representation" => {
            a.arity(3, 3)?;
            checker.nij_representation(a.rep(0)?, a.operator(1)?, a.operator(2)?)
        }
        "admissible" => {
            a.arity(3, 3)?;
            checker.admissible(a.rep(0)?, a.operator(1)?, a.operator(2)?)
        }
        "p-admissible" => {
            a.arity(3, 3)?;
            checker.p_admissible(a.algebra(0)?, a.operator(1)?, a.operator(2)?)
        }
        "corepresentation" => {
            a.arity(1, 3)?;
            let ops = match d.args.len() {
                1 => None,
                3 => Some((a.operator(1)?, a.operator(2)?)),
                _ => return Err(a.wrong(1, "pair of operators")),
            };
            checker.corepresentation(a.corep(0)?, ops)
        }
        "compatible-pair" => {
            a.arity(4, 6)?;
            let coreps = match d.args.len() {
                4 => None,
                6 => Some((a.corep(4)?, a.corep(5)?)),
                _ => return Err(a.wrong(4, "pair of corepresentations")),
            };
            checker.compatible_pair(a.coalgebra(0)?, a.coalgebra(1)?, &a.scalar(2)?, &a.scalar(3)?, coreps)
        }
        "deformed-homomorphism" => {
            a.arity(6, 8)?;
            let st = match d.args.len() {
                6 => None,
                8 => Some((a.scalar(6)?, a.scalar(7)?)),
                _ => return Err(a.wrong(6, "pair of scalars")),
            };
            checker.deformed_homomorphism(
                a.coalgebra(0)?,
                a.coalgebra(1)?,
                a.corep(2)?,
                a.corep(3)?,
                a.operator(4)?,
                a.operator(5)?,
                st.as_ref().map(|(s, t)| (s, t)),
            )
        }
        "matched-pair" => {
            a.arity(4, 4)?;
            checker.matched_pair(a.rep(0)?, a.rep(1)?, a.operator(2)?, a.operator(3)?)
        }
        "frobenius" => {
            a.arity(2, 3)?;
            let n = if d.args.len() == 3 { Some(a.operator(2)?) } else { None };
            checker.frobenius(a.algebra(0)?, a.form(1)?, n)
        }
        "nij-lie-bialgebra" => {
            a.arity(4, 4)?;
            checker.nij_lie_bialgebra(a.algebra(0)?, a.coalgebra(1)?, a.operator(2)?, a.operator(3)?)
        }
        "cpnybe" => {
            a.arity(4, 4)?;
            checker.cpnybe(a.algebra(0)?, a.tensor(1)?, a.operator(2)?, a.operator(3)?)
        }
        "pq-equivalents" => {
            a.arity(4, 4)?;
            let pq = checker.pq_equivalents(a.algebra(0)?, a.tensor(1)?, a.operator(2)?, a.operator(3)?)?;
            if !pq.agrees() {
                return Err(Error::Internal("direct and r-form verdicts disagree".into()));
            }
            Ok(pq.report)
        }
        "rrbo" => {
            a.arity(4, 4)?;
            checker.rrbo(a.rep(0)?, a.operator(1)?, a.operator(2)?, a.operator(3)?)
        }
        other => Err(Error::Syntax {
            line: d.line,
            col: 1,
            message: format!("unknown check `{other}`"),
        }),
    }
}

/// Checks implied by a document without `check` lines: the axioms of each structure.
pub fn default_checks(doc: &Document) -> Vec<CheckDirective> {
    doc.items
        .iter()
        .filter_map(|(name, item)| {
            let kind = match item {
                Item::Algebra(_) => "lie-algebra",
                Item::Coalgebra(_) => "lie-coalgebra",
                Item::Representation { .. } => "representation",
                Item::Corepresentation { .. } => "corepresentation",
                _ => return None,
            };
            Some(CheckDirective {
                kind: kind.to_string(),
                args: vec![name.clone()],
                line: 0,
            })
        })
        .collect()
}

/// Applies a construction and appends its outputs to a copy of `doc`. Outputs are named
/// `name`, with suffixes for secondary outputs; returns the new document and the names added.
pub fn construct(doc: &Document, op: &str, args: &[String], name: &str) -> Result<(Document, Vec<String>)> {
    let a = Args {
        doc,
        args,
        line: 0,
        what: op,
    };
    let mut out = doc.clone();
    out.checks.clear();
    let mut added = Vec::new();
    let mut push = |out: &mut Document, suffix: &str, item: Item| -> Result<()> {
        let n = format!("{name}{suffix}");
        out.push_item(&n, item)?;
        added.push(n);
        Ok(())
    };
    let rep_item = |out: &mut Document, rep: Representation, suffix: &str| -> Result<Item> {
        // a representation must refer to a named algebra of the document
        let of = match out.items.iter().find(|(_, i)| matches!(i, Item::Algebra(l) if *l == rep.algebra)) {
            Some((n, _)) => n.clone(),
            None => {
                let n = format!("{name}{suffix}_algebra");
                out.push_item(&n, Item::Algebra(rep.algebra.clone()))?;
                n
            }
        };
        Ok(Item::Representation { rep, of })
    };
    let corep_item = |out: &mut Document, corep: Corepresentation, suffix: &str| -> Result<Item> {
        let of = match out.items.iter().find(|(_, i)| matches!(i, Item::Coalgebra(c) if *c == corep.coalgebra)) {
            Some((n, _)) => n.clone(),
            None => {
                let n = format!("{name}{suffix}_coalgebra");
                out.push_item(&n, Item::Coalgebra(corep.coalgebra.clone()))?;
                n
            }
        };
        Ok(Item::Corepresentation { corep, of })
    };
    match op {
        "delta-from-r" => {
            a.arity(2, 2)?;
            let c = construct::delta_from_r(a.algebra(0)?, a.tensor(1)?)?;
            push(&mut out, "", Item::Coalgebra(c))?;
        }
        "bracket-from-omega" => {
            a.arity(2, 2)?;
            let l = construct::bracket_from_omega(a.coalgebra(0)?, a.form(1)?)?;
            push(&mut out, "", Item::Algebra(l))?;
        }
        "nijenhuis-from-omega-r" => {
            a.arity(3, 3)?;
            let n = construct::nijenhuis_from_omega_r(a.algebra(0)?, a.form(1)?, a.tensor(2)?)?;
            push(&mut out, "", Item::Operator(n))?;
        }
        "p-from-r-omega" => {
            a.arity(3, 3)?;
            let p = construct::p_from_r_omega(a.coalgebra(0)?, a.tensor(1)?, a.form(2)?)?;
            push(&mut out, "", Item::Operator(p))?;
        }
        "dualize" => {
            a.arity(1, 1)?;
            let item = match a.item(0)? {
                Item::Algebra(l) => Item::Coalgebra(l.dualize()?),
                Item::Coalgebra(c) => Item::Algebra(c.dualize()?),
                Item::Operator(o) => Item::Operator(o.dualize()?),
                Item::Representation { rep, .. } => rep_item(&mut out, rep.dualize()?, "")?,
                Item::Corepresentation { corep, .. } => rep_item(&mut out, corep.dualize()?, "")?,
                _ => return Err(a.wrong(0, "algebra, coalgebra, operator, representation or corepresentation")),
            };
            push(&mut out, "", item)?;
        }
        "rep-to-corep" => {
            a.arity(1, 1)?;
            let k = construct::rep_to_corep(a.rep(0)?)?;
            let item = corep_item(&mut out, k, "")?;
            push(&mut out, "", item)?;
        }
        "adjoint-corep" => {
            a.arity(1, 1)?;
            let k = construct::adjoint_corep(a.coalgebra(0)?);
            let item = corep_item(&mut out, k, "")?;
            push(&mut out, "", item)?;
        }
        "semidirect-product" => {
            a.arity(3, 3)?;
            let (l, n) = construct::semidirect_product(a.rep(0)?, a.operator(1)?, a.operator(2)?)?;
            push(&mut out, "", Item::Algebra(l))?;
            push(&mut out, "_N", Item::Operator(n))?;
        }
        "semidirect-coproduct" => {
            a.arity(3, 3)?;
            let (c, p) = construct::semidirect_coproduct(a.corep(0)?, a.operator(1)?, a.operator(2)?)?;
            push(&mut out, "", Item::Coalgebra(c))?;
            push(&mut out, "_P", Item::Operator(p))?;
        }
        "double-matched-pair" => {
            a.arity(4, 4)?;
            let (l, n) = construct::double_matched_pair(a.rep(0)?, a.rep(1)?, a.operator(2)?, a.operator(3)?)?;
            push(&mut out, "", Item::Algebra(l))?;
            push(&mut out, "_N", Item::Operator(n))?;
        }
        "manin-double" => {
            a.arity(4, 4)?;
            let (l, n, b) = construct::manin_double(a.algebra(0)?, a.coalgebra(1)?, a.operator(2)?, a.operator(3)?)?;
            push(&mut out, "", Item::Algebra(l))?;
            push(&mut out, "_N", Item::Operator(n))?;
            push(&mut out, "_B", Item::Form(b))?;
        }
        "adjoint-operator" => {
            a.arity(2, 2)?;
            let n = construct::adjoint_operator(a.form(0)?, a.operator(1)?)?;
            push(&mut out, "", Item::Operator(n))?;
        }
        "phi-r" => {
            a.arity(1, 1)?;
            push(&mut out, "", Item::Operator(construct::phi_r(a.tensor(0)?)))?;
        }
        "r-from-t" => {
            a.arity(2, 2)?;
            let (l, r) = construct::r_from_t(a.operator(0)?, a.rep(1)?)?;
            push(&mut out, "_algebra", Item::Algebra(l))?;
            push(&mut out, "", Item::Tensor(r))?;
        }
        "deformed-cobracket" => {
            a.arity(2, 2)?;
            let c = construct::deformed_cobracket(a.coalgebra(0)?, a.operator(1)?)?;
            push(&mut out, "", Item::Coalgebra(c))?;
        }
        "deformed-coaction" => {
            a.arity(4, 4)?;
            let k = construct::deformed_coaction(a.corep(0)?, a.operator(1)?, a.operator(2)?, a.coalgebra(3)?)?;
            let item = corep_item(&mut out, k, "")?;
            push(&mut out, "", item)?;
        }
        other => {
            return Err(Error::Syntax {
                line: 0,
                col: 0,
                message: format!("unknown construction `{other}`"),
            })
        }
    }
    Ok((out, added))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::document::parse_document;
    use crate::structures::Verdict;

    const QT: &str = "\
params lambda
space L = e f g
algebra sl2 on L antisymmetric
  e f g = 1
  e g e = -2
  f g f = 2
end
tensor r on L antisymmetric
  f g = lambda
end
";

    #[test]
    fn every_kind_is_dispatched() {
        let doc = parse_document(QT).unwrap();
        for (kind, _) in CHECK_KINDS {
            let d = CheckDirective {
                kind: kind.to_string(),
                args: vec![],
                line: 7,
            };
            let e = run_check(&doc, &d, &Checker::plain()).unwrap_err();
            assert!(e.to_string().contains("arguments"), "{kind}: {e}");
        }
    }

    #[test]
    fn construct_then_check() {
        let doc = parse_document(QT).unwrap();
        let (out, added) = construct(&doc, "delta-from-r", &["sl2".into(), "r".into()], "delta").unwrap();
        assert_eq!(added, ["delta"]);
        let d = CheckDirective {
            kind: "cocycle".into(),
            args: vec!["sl2".into(), "delta".into()],
            line: 1,
        };
        assert_eq!(run_check(&out, &d, &Checker::plain()).unwrap().verdict, Verdict::Pass);
        let (out, _) = construct(&out, "dualize", &["sl2".into()], "dual").unwrap();
        let text = crate::cli::write_document(&out, false).unwrap();
        let back = parse_document(&text).unwrap();
        assert_eq!(back.coalgebra("dual"), out.coalgebra("dual"));
    }

    #[test]
    fn wrong_argument_types_are_reported() {
        let doc = parse_document(QT).unwrap();
        let d = CheckDirective {
            kind: "nijenhuis".into(),
            args: vec!["sl2".into(), "r".into()],
            line: 3,
        };
        assert!(matches!(run_check(&doc, &d, &Checker::plain()), Err(Error::Syntax { line: 3, .. })));
        let d = CheckDirective {
            kind: "cybe".into(),
            args: vec!["sl2".into(), "missing".into()],
            line: 4,
        };
        assert!(matches!(run_check(&doc, &d, &Checker::plain()), Err(Error::UnknownName { line: 4, .. })));
    }
}
