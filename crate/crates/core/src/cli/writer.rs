//! Canonical `.lieb` export.

use std::fmt::Write as _;

use crate::cli::document::{Document, Item};
use crate::error::{Error, Result};
use crate::multilinear::{BasisSpace, Tensor};
use crate::structures::Representation;

const HEADER: &str = "\
# lieb structure file
# index conventions:
#   algebra      i j k = c      [b_i, b_j] has coefficient c on b_k
#   coalgebra    i j k = d      delta(b_i) has coefficient d on b_j (x) b_k
#   operator     x -> y = a     N(b_x) has coefficient a on b_y
#   form         a b = w        w(b_a, b_b)
#   tensor       i j = r        r has coefficient r on b_i (x) b_j
#   representation  x : v -> w = a   rho(b_x) v has coefficient a on w
#   corepresentation  v -> l w = a   gamma(v) has coefficient a on b_l (x) w
#   antisymmetric/skew blocks list each pair once; the mirrored entry is implied
";

/// Serializes a document. With `with_checks` false the `check` lines are dropped.
pub fn write_document(doc: &Document, with_checks: bool) -> Result<String> {
    let mut doc = doc.clone();
    for (name, item) in doc.items.clone() {
        for (k, space) in item_spaces(&item).into_iter().enumerate() {
            let hint = if k == 0 { format!("{name}_space") } else { format!("{name}_space{k}") };
            doc.ensure_space(&hint, space);
        }
    }
    let name_of = |s: &BasisSpace| -> Result<String> {
        doc.spaces
            .iter()
            .find(|(_, t)| t == s)
            .map(|(n, _)| n.clone())
            .ok_or_else(|| Error::Internal("space missing from document".into()))
    };

    let mut out = String::from(HEADER);
    out.push('\n');
    let params: Vec<&str> = doc.params.iter().map(|p| p.as_str()).collect();
    writeln!(out, "params {}", params.join(" ")).ok();
    for a in &doc.assumptions {
        writeln!(out, "assume {}", a.polynomial()).ok();
    }
    for (k, v) in &doc.meta {
        writeln!(out, "meta {k} = {v}").ok();
    }
    for (n, s) in &doc.spaces {
        writeln!(out, "space {n} = {}", s.labels().join(" ")).ok();
    }
    for (name, item) in &doc.items {
        out.push('\n');
        match item {
            Item::Algebra(a) => {
                let anti = is_skew(&a.c, 0, 1);
                let l = &a.space;
                writeln!(out, "algebra {name} on {}{}", name_of(l)?, flag(anti, " antisymmetric")).ok();
                for (i, v) in a.c.nonzero() {
                    if !anti || i[0] < i[1] {
                        writeln!(out, "  {} {} {} = {v}", l.label(i[0]), l.label(i[1]), l.label(i[2])).ok();
                    }
                }
            }
            Item::Coalgebra(c) => {
                let anti = is_skew(&c.d, 1, 2);
                let l = &c.space;
                writeln!(out, "coalgebra {name} on {}{}", name_of(l)?, flag(anti, " antisymmetric")).ok();
                for (i, v) in c.d.nonzero() {
                    if !anti || i[1] < i[2] {
                        writeln!(out, "  {} {} {} = {v}", l.label(i[0]), l.label(i[1]), l.label(i[2])).ok();
                    }
                }
            }
            Item::Operator(o) => {
                if o.domain == o.codomain {
                    writeln!(out, "operator {name} on {}", name_of(&o.domain)?).ok();
                } else {
                    writeln!(out, "operator {name} from {} to {}", name_of(&o.domain)?, name_of(&o.codomain)?).ok();
                }
                for (i, v) in o.matrix.nonzero() {
                    writeln!(out, "  {} -> {} = {v}", o.domain.label(i[1]), o.codomain.label(i[0])).ok();
                }
            }
            Item::Form(f) => {
                let skew = is_skew(&f.matrix, 0, 1);
                let sym = !skew && is_symmetric(&f.matrix);
                let tag = if skew { " skew" } else if sym { " symmetric" } else { "" };
                writeln!(out, "form {name} on {}{tag}", name_of(&f.space)?).ok();
                for (i, v) in f.matrix.nonzero() {
                    if !(skew || sym) || i[0] <= i[1] {
                        writeln!(out, "  {} {} = {v}", f.space.label(i[0]), f.space.label(i[1])).ok();
                    }
                }
            }
            Item::Tensor(t) => {
                let anti = is_skew(&t.matrix, 0, 1);
                writeln!(out, "tensor {name} on {}{}", name_of(&t.space)?, flag(anti, " antisymmetric")).ok();
                for (i, v) in t.matrix.nonzero() {
                    if !anti || i[0] < i[1] {
                        writeln!(out, "  {} {} = {v}", t.space.label(i[0]), t.space.label(i[1])).ok();
                    }
                }
            }
            Item::Representation { rep, of } => {
                if *rep == Representation::adjoint(&rep.algebra) {
                    writeln!(out, "representation {name} = adjoint {of}").ok();
                    continue;
                }
                writeln!(out, "representation {name} of {of} on {}", name_of(&rep.space)?).ok();
                let (l, v) = (&rep.algebra.space, &rep.space);
                for (i, val) in rep.action.nonzero() {
                    writeln!(out, "  {} : {} -> {} = {val}", l.label(i[0]), v.label(i[2]), v.label(i[1])).ok();
                }
            }
            Item::Corepresentation { corep, of } => {
                writeln!(out, "corepresentation {name} of {of} on {}", name_of(&corep.space)?).ok();
                let (l, v) = (&corep.coalgebra.space, &corep.space);
                for (i, val) in corep.coaction.nonzero() {
                    writeln!(out, "  {} -> {} {} = {val}", v.label(i[0]), l.label(i[1]), v.label(i[2])).ok();
                }
            }
        }
        out.push_str("end\n");
    }
    if with_checks && !doc.checks.is_empty() {
        out.push('\n');
        for c in &doc.checks {
            let mut line = format!("check {}", c.kind);
            for a in &c.args {
                line.push(' ');
                line.push_str(a);
            }
            writeln!(out, "{line}").ok();
        }
    }
    Ok(out)
}

fn flag(on: bool, text: &str) -> &str {
    if on {
        text
    } else {
        ""
    }
}

fn item_spaces(item: &Item) -> Vec<&BasisSpace> {
    match item {
        Item::Algebra(a) => vec![&a.space],
        Item::Coalgebra(c) => vec![&c.space],
        Item::Operator(o) => vec![&o.domain, &o.codomain],
        Item::Form(f) => vec![&f.space],
        Item::Tensor(t) => vec![&t.space],
        Item::Representation { rep, .. } => vec![&rep.algebra.space, &rep.space],
        Item::Corepresentation { corep, .. } => vec![&corep.coalgebra.space, &corep.space],
    }
}

/// Antisymmetry in axes `a`, `b`; an all-zero tensor does not count.
fn is_skew(t: &Tensor, a: usize, b: usize) -> bool {
    if t.is_zero() {
        return false;
    }
    let mut perm: Vec<usize> = (0..t.rank()).collect();
    perm.swap(a, b);
    t.permute(&perm).map(|p| p.neg() == *t).unwrap_or(false)
}

fn is_symmetric(t: &Tensor) -> bool {
    !t.is_zero() && t.transpose() == *t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::document::parse_document;

    const SAMPLE: &str = "\
params lambda kappa k3
assume k3
meta note = free text here
space L = e f g
space V = v w
algebra sl2 on L antisymmetric
  e f g = 1
  e g e = -2
  f g f = 2
end
coalgebra d on L antisymmetric
  e e f = 2*lambda
end
operator N on L
  e -> f = (-1*lambda*kappa)/k3
end
operator T from V to L
  w -> g = 1
end
form B on L symmetric
  e f = 1
  g g = 2
end
form w on L skew
  e g = kappa
end
tensor r on L antisymmetric
  f g = lambda
end
representation ad = adjoint sl2
representation R of sl2 on V
  g : v -> v = 1
  g : w -> w = -1
  e : w -> v = 1
end
corepresentation K of d on V
  v -> e w = lambda
end
check lie-algebra sl2
check nijenhuis sl2 N
";

    #[test]
    fn export_round_trips() {
        let d = parse_document(SAMPLE).unwrap();
        let text = write_document(&d, true).unwrap();
        let again = parse_document(&text).unwrap();
        let strip = |d: &Document| {
            let mut d = d.clone();
            d.checks.iter_mut().for_each(|c| c.line = 0);
            d
        };
        assert_eq!(strip(&again), strip(&d));
        assert_eq!(write_document(&again, true).unwrap(), text);
        assert!(text.contains("representation ad = adjoint sl2"));
        assert!(!text.contains("f e g"));
    }

    #[test]
    fn checks_can_be_dropped() {
        let d = parse_document(SAMPLE).unwrap();
        let text = write_document(&d, false).unwrap();
        assert!(!text.contains("\ncheck "));
        assert!(parse_document(&text).unwrap().checks.is_empty());
    }
}
