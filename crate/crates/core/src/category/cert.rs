//! Certificate data model and its line-oriented text form.
//!
//! ```text
//! certificate v1
//! subject M
//! value 3
//! space M expr "T3 # L(5,1)"
//! space P expr "T3"
//! upper
//!   DIM bound=3 premise=Verified ref="dimension-bound" space=M
//! lower
//!   PULLBACK bound=3 premise=Verified ref="weight-pullback" space=M coeffs=2 degree=3 class=1 map=collapse from=P
//!     ASPHERICAL bound=3 premise=Verified ref="aspherical-weight" space=P coeffs=2 degree=3 class=1
//! ```
//!
//! Spaces of kind `complex` are followed by a `complex <label>` block holding
//! the DCX text and closed by a line `end`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::complex::{parse_dcx, write_dcx, DeltaComplex};
use crate::error::{Error, Result};
use crate::manifold::{parse_expr, ManifoldExpr};
use crate::pi1::Pi1Tag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Nonzero,
    Pullback,
    Product,
    Aspherical,
    FinitePi1,
    Cover,
    Trichotomy,
    Dim,
    Pushout,
    Sphere,
    ProductIneq,
}

const RULE_NAMES: [(Rule, &str); 11] = [
    (Rule::Nonzero, "NONZERO"),
    (Rule::Pullback, "PULLBACK"),
    (Rule::Product, "PRODUCT"),
    (Rule::Aspherical, "ASPHERICAL"),
    (Rule::FinitePi1, "FINITE_PI1"),
    (Rule::Cover, "COVER"),
    (Rule::Trichotomy, "TRICHOTOMY"),
    (Rule::Dim, "DIM"),
    (Rule::Pushout, "PUSHOUT"),
    (Rule::Sphere, "SPHERE"),
    (Rule::ProductIneq, "PRODUCT_INEQ"),
];

impl Rule {
    pub fn name(self) -> &'static str {
        RULE_NAMES.iter().find(|r| r.0 == self).expect("every rule is named").1
    }

    /// Anchor recorded in the `ref` field of engine-built nodes.
    pub fn anchor(self) -> &'static str {
        match self {
            Rule::Nonzero => "weight-positive",
            Rule::Pullback => "weight-pullback",
            Rule::Product => "weight-product",
            Rule::Aspherical => "aspherical-weight",
            Rule::FinitePi1 => "finite-pi1-top-class",
            Rule::Cover => "covering-monotone",
            Rule::Trichotomy => "pi1-trichotomy",
            Rule::Dim => "dimension-bound",
            Rule::Pushout => "pushout-bound",
            Rule::Sphere => "sphere-category",
            Rule::ProductIneq => "product-inequality",
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Rule::Dim | Rule::Pushout | Rule::Sphere | Rule::ProductIneq | Rule::Trichotomy)
    }

    pub fn is_lower(self) -> bool {
        !matches!(self, Rule::Dim | Rule::Pushout | Rule::Sphere | Rule::ProductIneq)
    }

    /// Rules whose node names a cohomology class.
    pub fn carries_class(self) -> bool {
        matches!(
            self,
            Rule::Nonzero | Rule::Pullback | Rule::Product | Rule::Aspherical | Rule::FinitePi1
        )
    }
}

impl FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RULE_NAMES
            .iter()
            .find(|r| r.1 == s)
            .map(|r| r.0)
            .ok_or_else(|| Error::Invalid(format!("unknown rule `{s}`")))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Premise {
    Verified,
    CatalogFact,
}

impl fmt::Display for Premise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Premise::Verified => "Verified",
            Premise::CatalogFact => "CatalogFact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// Degree-one collapse of a connected sum onto one summand.
    Collapse,
    /// Projection of a product onto a factor.
    Projection,
}

/// A class given by basis coordinates, or named symbolically when the space
/// has no computable cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    Coords(Vec<u64>),
    Symbol(String),
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Coords(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                f.write_str(&parts.join(","))
            }
            ClassSpec::Symbol(s) => f.write_str(s),
        }
    }
}

impl ClassSpec {
    fn parse(s: &str) -> Self {
        let coords: Option<Vec<u64>> = s.split(',').map(|t| t.parse().ok()).collect();
        match coords {
            Some(c) if !s.is_empty() => ClassSpec::Coords(c),
            _ => ClassSpec::Symbol(s.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub rule: Rule,
    pub bound: usize,
    pub premise: Premise,
    pub reference: String,
    pub space: String,
    pub coeffs: Option<u64>,
    pub degree: Option<usize>,
    pub class: Option<ClassSpec>,
    pub map: Option<MapKind>,
    pub factor: Option<usize>,
    pub from: Option<String>,
    /// Set when the premise was checked in a Künneth tensor ring rather than
    /// on a triangulation.
    pub tensor: bool,
    pub pi1: Option<Pi1Tag>,
    pub children: Vec<Node>,
}

impl Node {
    pub fn new(rule: Rule, bound: usize, premise: Premise, space: &str) -> Self {
        Node {
            rule,
            bound,
            premise,
            reference: rule.anchor().to_string(),
            space: space.to_string(),
            coeffs: None,
            degree: None,
            class: None,
            map: None,
            factor: None,
            from: None,
            tensor: false,
            pi1: None,
            children: Vec::new(),
        }
    }

    pub fn with_class(mut self, coeffs: u64, degree: usize, class: ClassSpec) -> Self {
        self.coeffs = Some(coeffs);
        self.degree = Some(degree);
        self.class = Some(class);
        self
    }

    pub fn with_children(mut self, children: Vec<Node>) -> Self {
        self.children = children;
        self
    }

    /// Pre-order traversal with slash-separated child-index paths.
    pub fn walk<'a>(&'a self, path: String, out: &mut Vec<(String, &'a Node)>) {
        out.push((path.clone(), self));
        for (i, c) in self.children.iter().enumerate() {
            c.walk(format!("{path}/{i}"), out);
        }
    }

    fn write(&self, depth: usize, out: &mut String) {
        let _ = write!(
            out,
            "{}{} bound={} premise={} ref=\"{}\" space={}",
            "  ".repeat(depth),
            self.rule,
            self.bound,
            self.premise,
            self.reference,
            self.space
        );
        if let Some(m) = self.coeffs {
            let _ = write!(out, " coeffs={m}");
        }
        if let Some(d) = self.degree {
            let _ = write!(out, " degree={d}");
        }
        if let Some(c) = &self.class {
            let _ = write!(out, " class={c}");
        }
        if let Some(m) = self.map {
            out.push_str(match m {
                MapKind::Collapse => " map=collapse",
                MapKind::Projection => " map=projection",
            });
        }
        if let Some(f) = self.factor {
            let _ = write!(out, " factor={f}");
        }
        if let Some(f) = &self.from {
            let _ = write!(out, " from={f}");
        }
        if self.tensor {
            out.push_str(" level=tensor");
        }
        if let Some(t) = self.pi1 {
            let _ = write!(out, " pi1={t}");
        }
        out.push('\n');
        for c in &self.children {
            c.write(depth + 1, out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    Expr(ManifoldExpr),
    /// `M × S^n`.
    Product(ManifoldExpr, usize),
    Sphere(usize),
    Complex(DeltaComplex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDecl {
    pub label: String,
    pub kind: SpaceKind,
    pub cover_of: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatValue {
    Exact(usize),
    Interval(usize, usize),
}

impl CatValue {
    pub fn bounds(self) -> (usize, usize) {
        match self {
            CatValue::Exact(k) => (k, k),
            CatValue::Interval(lo, hi) => (lo, hi),
        }
    }

    pub fn from_bounds(lo: usize, hi: usize) -> Self {
        if lo == hi {
            CatValue::Exact(lo)
        } else {
            CatValue::Interval(lo, hi)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub subject: String,
    pub value: CatValue,
    pub spaces: Vec<SpaceDecl>,
    pub upper: Node,
    pub lower: Node,
}

impl Certificate {
    pub fn space(&self, label: &str) -> Option<&SpaceDecl> {
        self.spaces.iter().find(|s| s.label == label)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).certificate()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("certificate v1\n");
        let _ = writeln!(out, "subject {}", self.subject);
        match self.value {
            CatValue::Exact(k) => {
                let _ = writeln!(out, "value {k}");
            }
            CatValue::Interval(lo, hi) => {
                let _ = writeln!(out, "interval {lo} {hi}");
            }
        }
        for s in &self.spaces {
            let _ = write!(out, "space {} ", s.label);
            match &s.kind {
                SpaceKind::Expr(e) => {
                    let _ = write!(out, "expr \"{e}\"");
                }
                SpaceKind::Product(e, n) => {
                    let _ = write!(out, "product \"{e}\" sphere={n}");
                }
                SpaceKind::Sphere(n) => {
                    let _ = write!(out, "sphere {n}");
                }
                SpaceKind::Complex(_) => out.push_str("complex"),
            }
            if let Some(c) = &s.cover_of {
                let _ = write!(out, " cover-of={c}");
            }
            out.push('\n');
        }
        out.push_str("upper\n");
        self.upper.write(1, &mut out);
        out.push_str("lower\n");
        self.lower.write(1, &mut out);
        for s in &self.spaces {
            if let SpaceKind::Complex(x) = &s.kind {
                let _ = writeln!(out, "complex {}", s.label);
                out.push_str(&write_dcx(x));
                out.push_str("end\n");
            }
        }
        f.write_str(&out)
    }
}

/// Splits a line into whitespace-separated tokens; double quotes group.
fn tokens(line: &str, base: usize) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = None;
    let mut quoted = false;
    for (i, ch) in line.char_indices() {
        if ch == '"' {
            quoted = !quoted;
            start.get_or_insert(i);
            continue;
        }
        if ch.is_whitespace() && !quoted {
            if let Some(s) = start.take() {
                out.push((base + s, std::mem::take(&mut cur)));
            }
            continue;
        }
        start.get_or_insert(i);
        cur.push(ch);
    }
    if quoted {
        return Err(Error::parse(base + line.len(), "unterminated quote"));
    }
    if let Some(s) = start {
        out.push((base + s, cur));
    }
    Ok(out)
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    at: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut pos = 0;
        for l in text.split_inclusive('\n') {
            lines.push((pos, l.trim_end_matches(['\n', '\r'])));
            pos += l.len();
        }
        Parser {
            lines,
            at: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.at).copied()
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let l = self
            .peek()
            .ok_or_else(|| Error::parse(self.len, format!("unexpected end of certificate, expected {what}")))?;
        self.at += 1;
        Ok(l)
    }

    fn keyword(&mut self, kw: &str) -> Result<(usize, Vec<(usize, String)>)> {
        let (pos, line) = self.next_line(kw)?;
        let toks = tokens(line, pos)?;
        match toks.first() {
            Some((_, t)) if t == kw => Ok((pos, toks[1..].to_vec())),
            _ => Err(Error::parse(pos, format!("expected `{kw}`"))),
        }
    }

    fn certificate(&mut self) -> Result<Certificate> {
        let (pos, rest) = self.keyword("certificate")?;
        if rest.len() != 1 || rest[0].1 != "v1" {
            return Err(Error::parse(pos, "expected `certificate v1`"));
        }
        let (pos, rest) = self.keyword("subject")?;
        let subject = match rest.as_slice() {
            [(_, s)] => s.clone(),
            _ => return Err(Error::parse(pos, "expected `subject <label>`")),
        };
        let (pos, line) = self.next_line("value")?;
        let toks = tokens(line, pos)?;
        let num = |i: usize| -> Result<usize> {
            toks.get(i)
                .and_then(|t| t.1.parse().ok())
                .ok_or_else(|| Error::parse(pos, "expected integer"))
        };
        let value = match toks.first().map(|t| t.1.as_str()) {
            Some("value") if toks.len() == 2 => CatValue::Exact(num(1)?),
            Some("interval") if toks.len() == 3 => CatValue::Interval(num(1)?, num(2)?),
            _ => return Err(Error::parse(pos, "expected `value k` or `interval lo hi`")),
        };
        let mut spaces = Vec::new();
        while let Some((pos, line)) = self.peek() {
            if !line.starts_with("space ") {
                break;
            }
            self.at += 1;
            spaces.push(space_line(pos, line)?);
        }
        let mut pending: Vec<String> = spaces
            .iter()
            .filter(|s| matches!(s.kind, SpaceKind::Complex(_)))
            .map(|s| s.label.clone())
            .collect();
        self.keyword("upper")?;
        let upper = self.tree()?;
        self.keyword("lower")?;
        let lower = self.tree()?;
        while let Some((pos, line)) = self.peek() {
            self.at += 1;
            if line.trim().is_empty() {
                continue;
            }
            let label = line
                .strip_prefix("complex ")
                .map(str::trim)
                .ok_or_else(|| Error::parse(pos, "expected `complex <label>` block"))?;
            let mut body = String::new();
            loop {
                let (_, l) = self.next_line("`end`")?;
                if l == "end" {
                    break;
                }
                body.push_str(l);
                body.push('\n');
            }
            let x = parse_dcx(&body).map_err(|e| match e {
                Error::Parse { pos: p, msg } => Error::parse(pos + line.len() + 1 + p, msg),
                other => other,
            })?;
            let Some(at) = pending.iter().position(|l| l == label) else {
                return Err(Error::parse(pos, format!("unexpected complex block for `{label}`")));
            };
            pending.remove(at);
            let decl = spaces
                .iter_mut()
                .find(|s| s.label == label)
                .ok_or_else(|| Error::parse(pos, format!("complex block for undeclared space `{label}`")))?;
            if !matches!(decl.kind, SpaceKind::Complex(_)) {
                return Err(Error::parse(pos, format!("space `{label}` is not declared as a complex")));
            }
            decl.kind = SpaceKind::Complex(x);
        }
        if let Some(label) = pending.first() {
            return Err(Error::parse(self.len, format!("missing complex block for `{label}`")));
        }
        Ok(Certificate {
            subject,
            value,
            spaces,
            upper,
            lower,
        })
    }

    /// Reads one rule tree whose root is indented by two spaces.
    fn tree(&mut self) -> Result<Node> {
        let mut stack: Vec<(usize, Node)> = Vec::new();
        let mut root = None;
        while let Some((pos, line)) = self.peek() {
            let indent = line.len() - line.trim_start_matches(' ').len();
            if indent == 0 || line.trim().is_empty() {
                break;
            }
            self.at += 1;
            if indent % 2 != 0 {
                return Err(Error::parse(pos, "indentation must be a multiple of two spaces"));
            }
            let depth = indent / 2;
            let node = node_line(pos + indent, &line[indent..])?;
            while stack.last().is_some_and(|(d, _)| *d >= depth) {
                let (_, done) = stack.pop().unwrap();
                attach(&mut stack, &mut root, done, pos)?;
            }
            let expected = stack.last().map_or(1, |(d, _)| d + 1);
            if depth != expected {
                return Err(Error::parse(pos, format!("expected indentation depth {expected}")));
            }
            stack.push((depth, node));
        }
        while let Some((_, done)) = stack.pop() {
            attach(&mut stack, &mut root, done, 0)?;
        }
        root.ok_or_else(|| {
            Error::parse(self.peek().map_or(self.len, |l| l.0), "expected an indented rule tree")
        })
    }
}

fn attach(stack: &mut [(usize, Node)], root: &mut Option<Node>, node: Node, pos: usize) -> Result<()> {
    match stack.last_mut() {
        Some((_, parent)) => parent.children.push(node),
        None => {
            if root.is_some() {
                return Err(Error::parse(pos, "a section holds exactly one root node"));
            }
            *root = Some(node);
        }
    }
    Ok(())
}

fn space_line(pos: usize, line: &str) -> Result<SpaceDecl> {
    let toks = tokens(line, pos)?;
    let err = |p: usize, m: &str| Error::parse(p, m.to_string());
    let label = toks.get(1).ok_or_else(|| err(pos, "expected space label"))?.1.clone();
    let (kpos, kind) = toks.get(2).cloned().ok_or_else(|| err(pos, "expected space kind"))?;
    let expr = |i: usize| -> Result<ManifoldExpr> {
        let (p, t) = toks.get(i).ok_or_else(|| err(pos, "expected quoted expression"))?;
        parse_expr(t).map_err(|e| match e {
            Error::Parse { pos: q, msg } => Error::parse(p + 1 + q, msg),
            other => other,
        })
    };
    let (kind, used) = match kind.as_str() {
        "expr" => (SpaceKind::Expr(expr(3)?), 4),
        "product" => {
            let (p, t) = toks.get(4).ok_or_else(|| err(pos, "expected sphere=n"))?;
            let n = t
                .strip_prefix("sphere=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| err(*p, "expected sphere=n"))?;
            (SpaceKind::Product(expr(3)?, n), 5)
        }
        "sphere" => {
            let (p, t) = toks.get(3).ok_or_else(|| err(pos, "expected sphere dimension"))?;
            (SpaceKind::Sphere(t.parse().map_err(|_| err(*p, "expected sphere dimension"))?), 4)
        }
        "complex" => (SpaceKind::Complex(DeltaComplex::new_unchecked(vec![vec![]])), 3),
        _ => return Err(err(kpos, "expected expr, product, sphere or complex")),
    };
    let mut cover_of = None;
    for (p, t) in &toks[used..] {
        match t.strip_prefix("cover-of=") {
            Some(c) if cover_of.is_none() => cover_of = Some(c.to_string()),
            _ => return Err(err(*p, "unexpected token")),
        }
    }
    Ok(SpaceDecl { label, kind, cover_of })
}

fn node_line(pos: usize, line: &str) -> Result<Node> {
    let toks = tokens(line, pos)?;
    let (rpos, rname) = toks.first().ok_or_else(|| Error::parse(pos, "expected rule name"))?;
    let rule: Rule = rname.parse().map_err(|e: Error| Error::parse(*rpos, e.to_string()))?;
    let mut node = Node::new(rule, 0, Premise::CatalogFact, "");
    node.reference.clear();
    let (mut bound, mut premise, mut space) = (None, None, None);
    for (p, t) in &toks[1..] {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| Error::parse(*p, format!("expected key=value, found `{t}`")))?;
        let bad = || Error::parse(*p + k.len() + 1, format!("bad value for `{k}`"));
        match k {
            "bound" => bound = Some(v.parse().map_err(|_| bad())?),
            "premise" => {
                premise = Some(match v {
                    "Verified" => Premise::Verified,
                    "CatalogFact" => Premise::CatalogFact,
                    _ => return Err(bad()),
                })
            }
            "ref" => node.reference = v.to_string(),
            "space" => space = Some(v.to_string()),
            "coeffs" => node.coeffs = Some(v.parse().map_err(|_| bad())?),
            "degree" => node.degree = Some(v.parse().map_err(|_| bad())?),
            "class" => node.class = Some(ClassSpec::parse(v)),
            "map" => {
                node.map = Some(match v {
                    "collapse" => MapKind::Collapse,
                    "projection" => MapKind::Projection,
                    _ => return Err(bad()),
                })
            }
            "factor" => node.factor = Some(v.parse().map_err(|_| bad())?),
            "from" => node.from = Some(v.to_string()),
            "level" if v == "tensor" => node.tensor = true,
            "pi1" => node.pi1 = Some(v.parse().map_err(|_| bad())?),
            _ => return Err(Error::parse(*p, format!("unknown key `{k}`"))),
        }
    }
    node.bound = bound.ok_or_else(|| Error::parse(pos, "missing bound="))?;
    node.premise = premise.ok_or_else(|| Error::parse(pos, "missing premise="))?;
    node.space = space.ok_or_else(|| Error::parse(pos, "missing space="))?;
    Ok(node)
}
