//! Built-in parametric instances, shipped as `.lieb` files under `data/catalog`.

use std::collections::BTreeMap;

use crate::cli::document::{parse_document, Document};
use crate::error::{Error, Result};
use crate::scalars::{Assumption, ParameterName, Scalar};

macro_rules! entries {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!("../data/catalog/", $id, ".lieb")))),*]
    };
}

/// `(id, file contents)` in listing order.
pub const SOURCES: &[(&str, &str)] = entries![
    "sl2",
    "qt",
    "caybe",
    "symp",
    "nsl2",
    "nij-family-1",
    "nij-family-2",
    "nij-family-3",
    "nij-family-4",
    "nij-family-5",
    "nij-family-6",
    "nij-family-7",
    "nij-diagonal-1",
    "nij-diagonal-2",
    "nliebialg-a",
    "nliebialg-b",
    "nliebialg-c",
    "nliebialg-d",
];

/// Entries whose listed data fail one of their own checks; each carries a `known_issue`
/// metadata line describing the surviving residual.
pub const KNOWN_FAILURES: &[&str] = &["nij-family-6", "nliebialg-c"];

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    /// Where the instance comes from, in words.
    pub anchor: String,
    pub document: Document,
    pub assumptions: Vec<Assumption>,
    /// Remaining `meta` lines of the file.
    pub metadata: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSummary {
    pub id: String,
    pub description: String,
}

pub fn source(id: &str) -> Result<&'static str> {
    SOURCES
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Loads an entry, substituting `bindings` for declared parameters.
pub fn get(id: &str, bindings: &BTreeMap<ParameterName, Scalar>) -> Result<CatalogEntry> {
    let doc = parse_document(source(id)?)?;
    let doc = if bindings.is_empty() { doc } else { doc.bind(bindings)? };
    let mut metadata = doc.meta.clone();
    let description = metadata.remove("description").unwrap_or_default();
    let anchor = metadata.remove("anchor").unwrap_or_default();
    Ok(CatalogEntry {
        id: id.to_string(),
        description,
        anchor,
        assumptions: doc.assumptions.clone(),
        document: doc,
        metadata,
    })
}

pub fn list() -> Vec<CatalogSummary> {
    SOURCES
        .iter()
        .map(|(id, text)| {
            let description = parse_document(text)
                .ok()
                .and_then(|d| d.meta.get("description").cloned())
                .unwrap_or_default();
            CatalogSummary {
                id: id.to_string(),
                description,
            }
        })
        .collect()
}

/// Parses `k=v` pairs as given on the command line.
pub fn parse_bindings<S: AsRef<str>>(pairs: &[S]) -> Result<BTreeMap<ParameterName, Scalar>> {
    let mut out = BTreeMap::new();
    for p in pairs {
        let p = p.as_ref();
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Binding(format!("`{p}` is not of the form name=value")))?;
        let name = ParameterName::new(k.trim()).map_err(|_| Error::Binding(format!("`{k}` is not a parameter name")))?;
        let value = crate::scalars::parse_scalar(v).map_err(|e| Error::Binding(format!("`{v}`: {e}")))?;
        out.insert(name, value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{default_checks, run_check};
    use crate::scalars::s;
    use crate::structures::{Checker, Verdict};

    fn verdicts(id: &str) -> Vec<(String, Verdict, Vec<String>)> {
        let e = get(id, &BTreeMap::new()).unwrap();
        let checker = Checker::new(e.assumptions.clone());
        let checks = if e.document.checks.is_empty() { default_checks(&e.document) } else { e.document.checks.clone() };
        checks
            .iter()
            .map(|c| {
                let r = run_check(&e.document, c, &checker).unwrap();
                let used = r.assumptions_used.iter().map(|a| a.to_string()).collect();
                (c.kind.clone(), r.verdict, used)
            })
            .collect()
    }

    #[test]
    fn listing() {
        let ids: Vec<String> = list().into_iter().map(|s| s.id).collect();
        assert!(ids.contains(&"sl2".to_string()));
        assert_eq!(ids.iter().filter(|i| i.starts_with("nij-family-")).count(), 7);
        assert_eq!(ids.iter().filter(|i| i.starts_with("nliebialg-")).count(), 4);
        assert_eq!(list(), list());
        assert!(list().iter().all(|s| !s.description.is_empty()));
    }

    #[test]
    fn unknown_ids_and_bad_bindings() {
        assert!(matches!(get("nope", &BTreeMap::new()), Err(Error::UnknownId(_))));
        let b = parse_bindings(&["zeta=1"]).unwrap();
        assert!(matches!(get("sl2", &b), Err(Error::Binding(_))));
        assert!(parse_bindings(&["k1"]).is_err());
    }

    #[test]
    fn sl2_table() {
        let e = get("sl2", &BTreeMap::new()).unwrap();
        let l = e.document.algebra("sl2").unwrap();
        assert_eq!(l.c.get(&[0, 1, 2]), &s("1"));
        assert_eq!(l.c.get(&[0, 2, 0]), &s("-2"));
        assert_eq!(l.c.get(&[1, 2, 1]), &s("2"));
        assert_eq!(l.c.nonzero().len(), 6);
    }

    #[test]
    fn families_carry_their_side_conditions() {
        let expect: &[(&str, Verdict, &[&str])] = &[
            ("nij-family-1", Verdict::Pass, &[]),
            ("nij-family-2", Verdict::ConditionalPass, &["k3 != 0"]),
            ("nij-family-3", Verdict::ConditionalPass, &["k2 != 0", "k8 != 0"]),
            ("nij-family-4", Verdict::Pass, &[]),
            ("nij-family-5", Verdict::ConditionalPass, &["k4 != 0", "k7 != 0"]),
            ("nij-family-7", Verdict::ConditionalPass, &["k7 != 0"]),
            ("nij-diagonal-1", Verdict::Pass, &[]),
            ("nij-diagonal-2", Verdict::Pass, &[]),
        ];
        for (id, v, used) in expect {
            let got = verdicts(id);
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].1, *v, "{id}");
            let mut u = got[0].2.clone();
            u.sort();
            assert_eq!(u, *used, "{id}");
        }
    }

    /// The listed family-6 matrix is Nijenhuis only on `k3*k6 = 0`; see its `known_issue`.
    #[test]
    fn family_6_keeps_a_torsion_component() {
        let e = get("nij-family-6", &BTreeMap::new()).unwrap();
        assert!(e.metadata.contains_key("known_issue"));
        let r = run_check(&e.document, &e.document.checks[0], &Checker::new(e.assumptions.clone())).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let res: Vec<String> = r.residuals.iter().map(|r| r.to_string()).collect();
        assert_eq!(res, ["nijenhuis(e,f,g) = 4*k3*k6", "nijenhuis(f,e,g) = -4*k3*k6"]);
        let b = parse_bindings(&["k6=0"]).unwrap();
        let e = get("nij-family-6", &b).unwrap();
        let r = run_check(&e.document, &e.document.checks[0], &Checker::new(e.assumptions.clone())).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    /// Case (c) breaks the P-admissibility identity unless `k2*k3 = 0`.
    #[test]
    fn nliebialg_c_fails_admissibility() {
        let e = get("nliebialg-c", &BTreeMap::new()).unwrap();
        assert!(e.metadata.contains_key("known_issue"));
        let r = run_check(&e.document, &e.document.checks[0], &Checker::plain()).unwrap();
        let res: Vec<String> = r.residuals.iter().map(|r| r.to_string()).collect();
        assert_eq!(res, ["nliebialg1(e,f,e) = -4*k2*k3"]);
        for fix in ["k2=0", "k3=0"] {
            let e = get("nliebialg-c", &parse_bindings(&[fix]).unwrap()).unwrap();
            let r = run_check(&e.document, &e.document.checks[0], &Checker::plain()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{fix}");
        }
    }

    #[test]
    fn every_entry_passes_its_checks() {
        for (id, _) in SOURCES.iter().filter(|(id, _)| !KNOWN_FAILURES.contains(id)) {
            for (kind, v, _) in verdicts(id) {
                assert!(v.is_pass(), "{id}: {kind} -> {v}");
            }
        }
    }

    #[test]
    fn family_4_specializes_to_the_induced_operator() {
        let b = parse_bindings(&["k1=0", "k3=0", "k6=0", "k2=-lambda*kappa", "k5=2*lambda*kappa"]).unwrap();
        let bound = get("nij-family-4", &b).unwrap();
        let nsl2 = get("nsl2", &BTreeMap::new()).unwrap();
        assert_eq!(bound.document.operator("N"), nsl2.document.operator("N"));
    }
}
