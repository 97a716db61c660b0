//! The `.lieb` text format.
//!
//! ```text
//! # comment
//! params lambda kappa
//! assume kappa
//! meta key = free text
//! space L = e f g
//! algebra sl2 on L antisymmetric     # entries: i j k = c[i][j][k]
//!   e f g = 1
//! end
//! coalgebra delta on L antisymmetric # entries: i j k = d[i][j][k]
//! operator N on L                    # entries: x -> y = coefficient of y in N(x)
//! operator T from V to L
//! form w on L skew                   # entries: a b = w(a, b)
//! tensor r on L antisymmetric        # entries: i j = coefficient of b_i ⊗ b_j
//! representation R of sl2 on V       # entries: x : v -> w = coefficient of w in ρ(x)v
//! representation ad = adjoint sl2
//! corepresentation K of delta on V   # entries: v -> l w = coefficient of b_l ⊗ v_w in γ(v)
//! check nijenhuis sl2 N
//! ```
//!
//! Flags on block headers fill mirrored entries: `antisymmetric` and `skew` with the
//! opposite sign, `symmetric` with the same sign. Unlisted entries are zero.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multilinear::{BasisSpace, BilinearForm, LinearOperator, Tensor, TwoTensor};
use crate::scalars::{parse_scalar, Assumption, ParameterName, Scalar};
use crate::structures::{Corepresentation, LieAlgebra, LieCoalgebra, Representation};

/// A named structure of a document.
#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Algebra(LieAlgebra),
    Coalgebra(LieCoalgebra),
    Operator(LinearOperator),
    Form(BilinearForm),
    Tensor(TwoTensor),
    Representation { rep: Representation, of: String },
    Corepresentation { corep: Corepresentation, of: String },
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Algebra(_) => "algebra",
            Item::Coalgebra(_) => "coalgebra",
            Item::Operator(_) => "operator",
            Item::Form(_) => "form",
            Item::Tensor(_) => "tensor",
            Item::Representation { .. } => "representation",
            Item::Corepresentation { .. } => "corepresentation",
        }
    }

    pub fn substitute(&self, b: &BTreeMap<ParameterName, Scalar>) -> Result<Item> {
        Ok(match self {
            Item::Algebra(a) => Item::Algebra(a.substitute(b)?),
            Item::Coalgebra(c) => Item::Coalgebra(c.substitute(b)?),
            Item::Operator(o) => Item::Operator(o.substitute(b)?),
            Item::Form(f) => Item::Form(f.substitute(b)?),
            Item::Tensor(t) => Item::Tensor(t.substitute(b)?),
            Item::Representation { rep, of } => Item::Representation {
                rep: rep.substitute(b)?,
                of: of.clone(),
            },
            Item::Corepresentation { corep, of } => Item::Corepresentation {
                corep: corep.substitute(b)?,
                of: of.clone(),
            },
        })
    }
}

/// A `check` line: identity kind plus argument names (or scalar expressions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckDirective {
    pub kind: String,
    pub args: Vec<String>,
    pub line: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    pub params: Vec<ParameterName>,
    pub assumptions: Vec<Assumption>,
    pub meta: BTreeMap<String, String>,
    pub spaces: Vec<(String, BasisSpace)>,
    pub items: Vec<(String, Item)>,
    pub checks: Vec<CheckDirective>,
}

impl Document {
    pub fn space(&self, name: &str) -> Option<&BasisSpace> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn algebra(&self, name: &str) -> Option<&LieAlgebra> {
        match self.item(name)? {
            Item::Algebra(a) => Some(a),
            _ => None,
        }
    }

    pub fn coalgebra(&self, name: &str) -> Option<&LieCoalgebra> {
        match self.item(name)? {
            Item::Coalgebra(c) => Some(c),
            _ => None,
        }
    }

    pub fn operator(&self, name: &str) -> Option<&LinearOperator> {
        match self.item(name)? {
            Item::Operator(o) => Some(o),
            _ => None,
        }
    }

    pub fn form(&self, name: &str) -> Option<&BilinearForm> {
        match self.item(name)? {
            Item::Form(f) => Some(f),
            _ => None,
        }
    }

    pub fn tensor(&self, name: &str) -> Option<&TwoTensor> {
        match self.item(name)? {
            Item::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn representation(&self, name: &str) -> Option<&Representation> {
        match self.item(name)? {
            Item::Representation { rep, .. } => Some(rep),
            _ => None,
        }
    }

    pub fn corepresentation(&self, name: &str) -> Option<&Corepresentation> {
        match self.item(name)? {
            Item::Corepresentation { corep, .. } => Some(corep),
            _ => None,
        }
    }

    /// Adds a structure under a fresh name.
    pub fn push_item(&mut self, name: &str, item: Item) -> Result<()> {
        if self.item(name).is_some() || self.space(name).is_some() {
            return Err(Error::DuplicateName {
                name: name.to_string(),
                line: 0,
                col: 0,
            });
        }
        self.items.push((name.to_string(), item));
        Ok(())
    }

    /// Registers `space` under `name` unless an identical space is already present; returns
    /// the name it is known by.
    pub fn ensure_space(&mut self, name: &str, space: &BasisSpace) -> String {
        if let Some((n, _)) = self.spaces.iter().find(|(_, s)| s == space) {
            return n.clone();
        }
        let mut n = name.to_string();
        while self.space(&n).is_some() || self.item(&n).is_some() {
            n.push('_');
        }
        self.spaces.push((n.clone(), space.clone()));
        n
    }

    /// Applies parameter bindings to every structure and assumption. Bound parameters must
    /// be declared; an assumption that becomes identically zero is a binding error.
    pub fn bind(&self, bindings: &BTreeMap<ParameterName, Scalar>) -> Result<Document> {
        for p in bindings.keys() {
            if !self.params.contains(p) {
                return Err(Error::Binding(format!("`{p}` is not a declared parameter")));
            }
        }
        let mut out = self.clone();
        for (_, item) in out.items.iter_mut() {
            *item = item.substitute(bindings)?;
        }
        out.assumptions.clear();
        for a in &self.assumptions {
            let v = Scalar::from_poly(a.polynomial().clone()).substitute(bindings)?;
            if v.is_zero() {
                return Err(Error::Binding(format!("binding makes the assumption `{a}` false")));
            }
            if !v.is_constant() {
                for b in [v.numerator(), v.denominator()] {
                    if !b.is_constant() {
                        let b = Assumption::new(b.clone())?;
                        if !out.assumptions.contains(&b) {
                            out.assumptions.push(b);
                        }
                    }
                }
            }
        }
        let mut params: Vec<ParameterName> =
            self.params.iter().filter(|p| !bindings.contains_key(*p)).cloned().collect();
        for v in bindings.values() {
            for p in v.parameters() {
                if !params.contains(&p) {
                    params.push(p);
                }
            }
        }
        out.params = params;
        Ok(out)
    }
}

/// A token with its 1-based column.
#[derive(Clone, Debug)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok {
                    text: &line[s..i],
                    col: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            text: &line[s..],
            col: s + 1,
        });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mirror {
    None,
    Negate,
    Same,
}

struct Block {
    name: String,
    name_col: usize,
    kind: BlockKind,
    mirror: Mirror,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

enum BlockKind {
    Algebra(BasisSpace),
    Coalgebra(BasisSpace),
    Operator(BasisSpace, BasisSpace),
    Form(BasisSpace),
    Tensor(BasisSpace),
    Representation(String, LieAlgebra, BasisSpace),
    Corepresentation(String, LieCoalgebra, BasisSpace),
}

struct Parser {
    doc: Document,
    line: usize,
    declared_params: bool,
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut p = Parser {
        doc: Document::default(),
        line: 0,
        declared_params: false,
    };
    let mut block: Option<Block> = None;
    for (n, raw) in text.lines().enumerate() {
        p.line = n + 1;
        let line = strip_comment(raw);
        let toks = tokenize(line);
        if toks.is_empty() {
            continue;
        }
        if let Some(b) = block.as_mut() {
            if toks[0].text == "end" && toks.len() == 1 {
                let b = block.take().expect("open block");
                p.close(b)?;
            } else {
                p.entry(b, line, &toks)?;
            }
            continue;
        }
        block = p.directive(line, &toks)?;
    }
    if let Some(b) = block {
        return Err(Error::Syntax {
            line: p.line.max(1),
            col: 1,
            message: format!("block `{}` is missing `end`", b.name),
        });
    }
    Ok(p.doc)
}

impl Parser {
    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            col,
            message: msg.into(),
        }
    }

    fn unknown(&self, t: &Tok) -> Error {
        Error::UnknownName {
            name: t.text.to_string(),
            line: self.line,
            col: t.col,
        }
    }

    fn fresh_name(&self, t: &Tok) -> Result<String> {
        if ParameterName::new(t.text).is_err() {
            return Err(self.err(t.col, format!("`{}` is not a valid name", t.text)));
        }
        if self.doc.space(t.text).is_some() || self.doc.item(t.text).is_some() {
            return Err(Error::DuplicateName {
                name: t.text.to_string(),
                line: self.line,
                col: t.col,
            });
        }
        Ok(t.text.to_string())
    }

    fn space_ref(&self, t: &Tok) -> Result<BasisSpace> {
        self.doc.space(t.text).cloned().ok_or_else(|| self.unknown(t))
    }

    /// Parses the expression starting at byte `start` of `line`.
    fn expr(&self, line: &str, start: usize) -> Result<Scalar> {
        let text = &line[start..];
        let col0 = start + 1;
        if text.trim().is_empty() {
            return Err(self.err(col0, "missing coefficient expression"));
        }
        let v = parse_scalar(text).map_err(|e| match e {
            Error::Syntax { col, message, .. } => self.err(col0 + col - 1, message),
            other => self.err(col0, other.to_string()),
        })?;
        if self.declared_params {
            for p in v.parameters() {
                if !self.doc.params.contains(&p) {
                    let off = find_word(text, p.as_str()).unwrap_or(0);
                    return Err(Error::UnknownName {
                        name: p.to_string(),
                        line: self.line,
                        col: col0 + off,
                    });
                }
            }
        }
        Ok(v)
    }

    fn expect_len(&self, toks: &[Tok], n: usize, usage: &str) -> Result<()> {
        if toks.len() != n {
            let col = toks.get(n.min(toks.len().saturating_sub(1))).map_or(1, |t| t.col);
            return Err(self.err(col, format!("expected `{usage}`")));
        }
        Ok(())
    }

    fn directive(&mut self, line: &str, toks: &[Tok]) -> Result<Option<Block>> {
        let head = &toks[0];
        match head.text {
            "params" => {
                for t in &toks[1..] {
                    let p = ParameterName::new(t.text).map_err(|_| self.err(t.col, "invalid parameter name"))?;
                    if self.doc.params.contains(&p) {
                        return Err(Error::DuplicateName {
                            name: t.text.to_string(),
                            line: self.line,
                            col: t.col,
                        });
                    }
                    self.doc.params.push(p);
                }
                self.declared_params = true;
                Ok(None)
            }
            "assume" => {
                let start = toks.get(1).map_or(line.len(), |t| t.col - 1);
                let line = line.trim_end().strip_suffix("!= 0").unwrap_or(line);
                let v = self.expr(line, start)?;
                let num = Assumption::new(v.numerator().clone()).map_err(|_| self.err(start + 1, "assumption is identically zero"))?;
                for a in std::iter::once(num).chain(
                    (!v.denominator().is_constant()).then(|| Assumption::new(v.denominator().clone()).expect("nonzero")),
                ) {
                    if !a.is_trivial() && !self.doc.assumptions.contains(&a) {
                        self.doc.assumptions.push(a);
                    }
                }
                Ok(None)
            }
            "meta" => {
                if toks.len() < 3 || toks[2].text != "=" {
                    return Err(self.err(head.col, "expected `meta <key> = <text>`"));
                }
                let value = toks.get(3).map_or("", |t| line[t.col - 1..].trim());
                self.doc.meta.insert(toks[1].text.to_string(), value.to_string());
                Ok(None)
            }
            "space" => {
                if toks.len() < 3 || toks[2].text != "=" {
                    return Err(self.err(head.col, "expected `space <name> = <labels>`"));
                }
                let name = self.fresh_name(&toks[1])?;
                let labels: Vec<&str> = toks[3..].iter().map(|t| t.text).collect();
                for (k, t) in toks[3..].iter().enumerate() {
                    if labels[..k].contains(&t.text) {
                        return Err(Error::DuplicateName {
                            name: t.text.to_string(),
                            line: self.line,
                            col: t.col,
                        });
                    }
                    if t.text.contains(['#', ':', ',']) || t.text == "->" {
                        return Err(self.err(t.col, "invalid basis label"));
                    }
                }
                let space = BasisSpace::new(labels).map_err(|e| self.err(head.col, e.to_string()))?;
                self.doc.spaces.push((name, space));
                Ok(None)
            }
            "check" => {
                if toks.len() < 2 {
                    return Err(self.err(head.col, "expected `check <identity> <arguments>`"));
                }
                self.doc.checks.push(CheckDirective {
                    kind: toks[1].text.to_string(),
                    args: toks[2..].iter().map(|t| t.text.to_string()).collect(),
                    line: self.line,
                });
                Ok(None)
            }
            "algebra" | "coalgebra" | "form" | "tensor" => {
                if toks.len() < 4 || toks[2].text != "on" {
                    return Err(self.err(head.col, format!("expected `{} <name> on <space> [flag]`", head.text)));
                }
                let name = self.fresh_name(&toks[1])?;
                let space = self.space_ref(&toks[3])?;
                let allowed: &[&str] = match head.text {
                    "form" => &["skew", "symmetric"],
                    _ => &["antisymmetric"],
                };
                let mirror = match toks.get(4) {
                    None => Mirror::None,
                    Some(t) if allowed.contains(&t.text) && toks.len() == 5 => {
                        if t.text == "symmetric" {
                            Mirror::Same
                        } else {
                            Mirror::Negate
                        }
                    }
                    Some(t) => return Err(self.err(t.col, format!("unexpected `{}`", t.text))),
                };
                let kind = match head.text {
                    "algebra" => BlockKind::Algebra(space),
                    "coalgebra" => BlockKind::Coalgebra(space),
                    "form" => BlockKind::Form(space),
                    _ => BlockKind::Tensor(space),
                };
                Ok(Some(self.open(name, toks[1].col, kind, mirror)))
            }
            "operator" => {
                let (name, kind) = match toks.get(2).map(|t| t.text) {
                    Some("on") => {
                        self.expect_len(toks, 4, "operator <name> on <space>")?;
                        let s = self.space_ref(&toks[3])?;
                        (self.fresh_name(&toks[1])?, BlockKind::Operator(s.clone(), s))
                    }
                    Some("from") => {
                        self.expect_len(toks, 6, "operator <name> from <space> to <space>")?;
                        if toks[4].text != "to" {
                            return Err(self.err(toks[4].col, "expected `to`"));
                        }
                        let a = self.space_ref(&toks[3])?;
                        let b = self.space_ref(&toks[5])?;
                        (self.fresh_name(&toks[1])?, BlockKind::Operator(a, b))
                    }
                    _ => return Err(self.err(head.col, "expected `operator <name> on <space>`")),
                };
                Ok(Some(self.open(name, toks[1].col, kind, Mirror::None)))
            }
            "representation" => {
                if toks.len() == 5 && toks[2].text == "=" && toks[3].text == "adjoint" {
                    let name = self.fresh_name(&toks[1])?;
                    let alg = self.doc.algebra(toks[4].text).ok_or_else(|| self.unknown(&toks[4]))?;
                    let rep = Representation::adjoint(alg);
                    self.doc.items.push((
                        name,
                        Item::Representation {
                            rep,
                            of: toks[4].text.to_string(),
                        },
                    ));
                    return Ok(None);
                }
                if toks.len() != 6 || toks[2].text != "of" || toks[4].text != "on" {
                    return Err(self.err(head.col, "expected `representation <name> of <algebra> on <space>`"));
                }
                let name = self.fresh_name(&toks[1])?;
                let alg = self.doc.algebra(toks[3].text).ok_or_else(|| self.unknown(&toks[3]))?.clone();
                let space = self.space_ref(&toks[5])?;
                let kind = BlockKind::Representation(toks[3].text.to_string(), alg, space);
                Ok(Some(self.open(name, toks[1].col, kind, Mirror::None)))
            }
            "corepresentation" => {
                if toks.len() != 6 || toks[2].text != "of" || toks[4].text != "on" {
                    return Err(self.err(head.col, "expected `corepresentation <name> of <coalgebra> on <space>`"));
                }
                let name = self.fresh_name(&toks[1])?;
                let co = self.doc.coalgebra(toks[3].text).ok_or_else(|| self.unknown(&toks[3]))?.clone();
                let space = self.space_ref(&toks[5])?;
                let kind = BlockKind::Corepresentation(toks[3].text.to_string(), co, space);
                Ok(Some(self.open(name, toks[1].col, kind, Mirror::None)))
            }
            other => Err(self.err(head.col, format!("unknown directive `{other}`"))),
        }
    }

    fn open(&self, name: String, name_col: usize, kind: BlockKind, mirror: Mirror) -> Block {
        Block {
            name,
            name_col,
            kind,
            mirror,
            entries: BTreeMap::new(),
        }
    }

    fn label(&self, space: &BasisSpace, t: &Tok) -> Result<usize> {
        space.index_of(t.text).ok_or_else(|| self.unknown(t))
    }

    fn entry(&self, b: &mut Block, line: &str, toks: &[Tok]) -> Result<()> {
        let eq = toks
            .iter()
            .position(|t| t.text == "=")
            .ok_or_else(|| self.err(toks[0].col, "expected `<indices> = <coefficient>`"))?;
        let lhs = &toks[..eq];
        let start = toks.get(eq + 1).map_or(line.len(), |t| t.col - 1);
        let value = self.expr(line, start)?;
        let bad = |shape: &str| self.err(toks[0].col, format!("expected `{shape} = <coefficient>`"));
        let idx: Vec<usize> = match &b.kind {
            BlockKind::Algebra(s) | BlockKind::Coalgebra(s) => {
                if lhs.len() != 3 {
                    return Err(bad("i j k"));
                }
                lhs.iter().map(|t| self.label(s, t)).collect::<Result<_>>()?
            }
            BlockKind::Form(s) | BlockKind::Tensor(s) => {
                if lhs.len() != 2 {
                    return Err(bad("a b"));
                }
                lhs.iter().map(|t| self.label(s, t)).collect::<Result<_>>()?
            }
            BlockKind::Operator(from, to) => {
                if lhs.len() != 3 || lhs[1].text != "->" {
                    return Err(bad("x -> y"));
                }
                // stored [out, in]
                vec![self.label(to, &lhs[2])?, self.label(from, &lhs[0])?]
            }
            BlockKind::Representation(_, alg, v) => {
                if lhs.len() != 5 || lhs[1].text != ":" || lhs[3].text != "->" {
                    return Err(bad("x : v -> w"));
                }
                let x = self.label(&alg.space, &lhs[0])?;
                vec![x, self.label(v, &lhs[4])?, self.label(v, &lhs[2])?]
            }
            BlockKind::Corepresentation(_, co, v) => {
                if lhs.len() != 4 || lhs[1].text != "->" {
                    return Err(bad("v -> l w"));
                }
                vec![self.label(v, &lhs[0])?, self.label(&co.space, &lhs[2])?, self.label(v, &lhs[3])?]
            }
        };
        let mirrored = match (&b.kind, b.mirror) {
            (_, Mirror::None) => None,
            (BlockKind::Algebra(_), _) => Some(vec![idx[1], idx[0], idx[2]]),
            (BlockKind::Coalgebra(_), _) => Some(vec![idx[0], idx[2], idx[1]]),
            _ => Some(vec![idx[1], idx[0]]),
        };
        let twin = match b.mirror {
            Mirror::Negate => -&value,
            _ => value.clone(),
        };
        match mirrored {
            Some(m) if m != idx => {
                if b.entries.contains_key(&m) {
                    return Err(self.err(toks[0].col, "entry already set through its mirror"));
                }
                b.entries.insert(m, twin);
            }
            Some(_) if b.mirror == Mirror::Negate && !value.is_zero() => {
                return Err(self.err(toks[0].col, "diagonal entry of an antisymmetric block must be zero"));
            }
            _ => {}
        }
        if b.entries.insert(idx, value).is_some() {
            return Err(self.err(toks[0].col, "entry set twice"));
        }
        Ok(())
    }

    fn close(&mut self, b: Block) -> Result<()> {
        let fill = |shape: &[usize]| {
            let mut t = Tensor::zeros(shape);
            for (i, v) in &b.entries {
                t.set(i, v.clone());
            }
            t
        };
        let wrap = |e: Error| Error::Syntax {
            line: self.line,
            col: b.name_col,
            message: e.to_string(),
        };
        let item = match &b.kind {
            BlockKind::Algebra(s) => {
                let n = s.dim();
                Item::Algebra(LieAlgebra::new(s.clone(), fill(&[n, n, n])).map_err(wrap)?)
            }
            BlockKind::Coalgebra(s) => {
                let n = s.dim();
                Item::Coalgebra(LieCoalgebra::new(s.clone(), fill(&[n, n, n])).map_err(wrap)?)
            }
            BlockKind::Operator(from, to) => Item::Operator(
                LinearOperator::new(from.clone(), to.clone(), fill(&[to.dim(), from.dim()])).map_err(wrap)?,
            ),
            BlockKind::Form(s) => {
                Item::Form(BilinearForm::new(s.clone(), fill(&[s.dim(), s.dim()])).map_err(wrap)?)
            }
            BlockKind::Tensor(s) => {
                Item::Tensor(TwoTensor::new(s.clone(), fill(&[s.dim(), s.dim()])).map_err(wrap)?)
            }
            BlockKind::Representation(of, alg, v) => {
                let (n, m) = (alg.dim(), v.dim());
                Item::Representation {
                    rep: Representation::new(alg.clone(), v.clone(), fill(&[n, m, m])).map_err(wrap)?,
                    of: of.clone(),
                }
            }
            BlockKind::Corepresentation(of, co, v) => {
                let (n, m) = (co.dim(), v.dim());
                Item::Corepresentation {
                    corep: Corepresentation::new(co.clone(), v.clone(), fill(&[m, n, m])).map_err(wrap)?,
                    of: of.clone(),
                }
            }
        };
        self.doc.items.push((b.name, item));
        Ok(())
    }
}

/// Byte offset of `word` as a whole identifier inside `text`.
fn find_word(text: &str, word: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let ident = |c: u8| c.is_ascii_alphanumeric() || c == b'_';
    let mut from = 0;
    while let Some(i) = text[from..].find(word) {
        let at = from + i;
        let end = at + word.len();
        let before = at == 0 || !ident(bytes[at - 1]);
        let after = end >= bytes.len() || !ident(bytes[end]);
        if before && after {
            return Some(at);
        }
        from = at + 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::s;

    const SL2: &str = "\
params
space L = e f g
algebra sl2 on L antisymmetric
  e f g = 1
  e g e = -2
  f g f = 2
end
check lie-algebra sl2
";

    #[test]
    fn parses_sl2() {
        let d = parse_document(SL2).unwrap();
        let l = d.algebra("sl2").unwrap();
        assert_eq!(l.c.get(&[1, 0, 2]), &s("-1"));
        assert_eq!(l.c.get(&[2, 1, 1]), &s("-2"));
        assert_eq!(d.checks[0].kind, "lie-algebra");
    }

    #[test]
    fn empty_document() {
        assert_eq!(parse_document("").unwrap(), Document::default());
        assert_eq!(parse_document("# nothing\n\n").unwrap(), Document::default());
    }

    #[test]
    fn blocks_of_every_kind() {
        let text = "\
params lambda k1
assume k1
space L = e f g
space V = v
algebra sl2 on L antisymmetric
  e f g = 1
end
operator N on L
  e -> f = -lambda
end
operator T from V to L
  v -> g = 1/k1
end
form w on L skew
  e g = lambda
end
tensor r on L antisymmetric
  f g = lambda
end
representation R of sl2 on V
end
representation ad = adjoint sl2
coalgebra d on L
end
corepresentation K of d on V
  v -> e v = 2
end
";
        let d = parse_document(text).unwrap();
        assert_eq!(d.operator("N").unwrap().entry(1, 0), &s("-lambda"));
        assert_eq!(d.operator("T").unwrap().matrix.shape(), [3, 1]);
        assert_eq!(d.form("w").unwrap().value(2, 0), &s("-lambda"));
        assert_eq!(d.tensor("r").unwrap().coeff(2, 1), &s("-lambda"));
        assert_eq!(d.representation("ad").unwrap(), &Representation::adjoint(d.algebra("sl2").unwrap()));
        assert_eq!(d.corepresentation("K").unwrap().coaction.get(&[0, 0, 0]), &s("2"));
        assert_eq!(d.assumptions, Assumption::parse("k1").unwrap());
    }

    #[test]
    fn diagnostics_carry_locations() {
        let e = parse_document("space L = e f\noperator N on V\nend\n").unwrap_err();
        assert!(matches!(e, Error::UnknownName { ref name, line: 2, col: 15 } if name == "V"), "{e:?}");
        let e = parse_document("space L = e f\noperator N on L\n  e -> f = 2*(k1\nend\n").unwrap_err();
        assert_eq!(e.location(), Some((3, 17)));
        let e = parse_document("params k1\nassume k2\n").unwrap_err();
        assert!(matches!(e, Error::UnknownName { line: 2, col: 8, .. }), "{e:?}");
        let e = parse_document("space L = e\nspace L = f\n").unwrap_err();
        assert!(matches!(e, Error::DuplicateName { line: 2, col: 7, .. }), "{e:?}");
        let e = parse_document("space L = e f\nalgebra a on L\n e f e = 1\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { .. }), "{e:?}");
        let e = parse_document("frobnicate\n").unwrap_err();
        assert_eq!(e.location(), Some((1, 1)));
    }

    #[test]
    fn binding() {
        let d = parse_document("params k1 k2\nassume k2\nspace L = a\noperator N on L\n a -> a = k1*k2\nend\n").unwrap();
        let mut b = BTreeMap::new();
        b.insert(ParameterName::new("k1").unwrap(), s("3"));
        let bound = d.bind(&b).unwrap();
        assert_eq!(bound.operator("N").unwrap().entry(0, 0), &s("3*k2"));
        b.insert(ParameterName::new("k2").unwrap(), s("0"));
        assert!(matches!(d.bind(&b), Err(Error::Binding(_))));
        let mut c = BTreeMap::new();
        c.insert(ParameterName::new("zz").unwrap(), s("1"));
        assert!(matches!(d.bind(&c), Err(Error::Binding(_))));
    }
}
