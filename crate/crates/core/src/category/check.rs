//! Independent re-verification of certificates: rule arithmetic, space
//! references, premise tags and every numeric premise.

use std::collections::HashSet;

use super::cat_from_pi1;
use super::cert::{CatValue, Certificate, ClassSpec, MapKind, Node, Premise, Rule, SpaceKind};
use super::workspace::{Level, Workspace};
use crate::algebra::{homology, Coefficients};
use crate::error::{Error, Result};
use crate::manifold::{double_cover, facts, normalize, Prime};
use crate::pi1::{classify_space, Pi1Tag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub ok: bool,
    pub diagnostics: Vec<String>,
    /// Facts accepted without recomputation, for human audit.
    pub catalog_facts: Vec<String>,
}

struct Checker<'a> {
    cert: &'a Certificate,
    ws: Workspace,
    diagnostics: Vec<String>,
    catalog_facts: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Upper,
    Lower,
}

pub fn check_certificate(cert: &Certificate) -> CheckReport {
    let mut c = Checker {
        cert,
        ws: Workspace::new(&cert.spaces),
        diagnostics: Vec::new(),
        catalog_facts: Vec::new(),
    };
    c.run();
    CheckReport {
        ok: c.diagnostics.is_empty(),
        diagnostics: c.diagnostics,
        catalog_facts: c.catalog_facts,
    }
}

fn coords(n: &Node) -> Result<&[u64]> {
    match &n.class {
        Some(ClassSpec::Coords(c)) => Ok(c),
        _ => Err(Error::Invalid("verified premise needs explicit class coordinates".into())),
    }
}

impl Checker<'_> {
    fn fail(&mut self, path: &str, msg: impl Into<String>) {
        self.diagnostics.push(format!("{path}: {}", msg.into()));
    }

    fn run(&mut self) {
        let cert = self.cert;
        let mut seen = HashSet::new();
        for s in &cert.spaces {
            if !seen.insert(s.label.as_str()) {
                self.fail("spaces", format!("duplicate space label `{}`", s.label));
            }
            if let Some(c) = &s.cover_of {
                if cert.space(c).is_none() {
                    self.fail("spaces", format!("`{}` claims to cover undeclared space `{c}`", s.label));
                }
            }
        }
        if cert.space(&cert.subject).is_none() {
            self.fail("subject", format!("dangling reference to `{}`", cert.subject));
        }
        for (name, root) in [("upper", &cert.upper), ("lower", &cert.lower)] {
            if root.space != cert.subject {
                self.fail(name, format!("root is on `{}`, not on the subject `{}`", root.space, cert.subject));
            }
        }
        let (lo, hi) = cert.value.bounds();
        if let CatValue::Interval(a, b) = cert.value {
            if a >= b {
                self.fail("value", format!("interval [{a}, {b}] must have lo < hi"));
            }
        }
        if lo != cert.lower.bound {
            self.fail("value", format!("lower end {lo} differs from the lower trace bound {}", cert.lower.bound));
        }
        if hi != cert.upper.bound {
            self.fail("value", format!("upper end {hi} differs from the upper trace bound {}", cert.upper.bound));
        }
        self.node(&cert.upper, "upper".into(), Section::Upper);
        self.node(&cert.lower, "lower".into(), Section::Lower);
    }

    fn node(&mut self, n: &Node, path: String, section: Section) {
        if let Err(e) = self.node_inner(n, &path, section) {
            self.fail(&path, e.to_string());
        }
        for (i, c) in n.children.iter().enumerate() {
            self.node(c, format!("{path}/{i}"), section);
        }
    }

    fn node_inner(&mut self, n: &Node, path: &str, section: Section) -> Result<()> {
        let cert = self.cert;
        let Some(decl) = cert.space(&n.space) else {
            return Err(Error::Invalid(format!("dangling reference to space `{}`", n.space)));
        };
        if let Some(from) = &n.from {
            if cert.space(from).is_none() {
                return Err(Error::Invalid(format!("dangling reference to space `{from}`")));
            }
        }
        let allowed = match section {
            Section::Upper => n.rule.is_upper(),
            Section::Lower => n.rule.is_lower(),
        };
        if !allowed {
            return Err(Error::Invalid(format!("{} cannot appear in this trace", n.rule)));
        }
        let level = self.ws.level(&n.space, n.coeffs)?;
        let expected = if level.is_some() { Premise::Verified } else { Premise::CatalogFact };
        if n.premise != expected {
            return Err(Error::Invalid(format!(
                "premise is {} but `{}` {} computable",
                n.premise,
                n.space,
                if level.is_some() { "is" } else { "is not" }
            )));
        }
        if n.rule.carries_class() {
            let (Some(m), Some(_), Some(_)) = (n.coeffs, n.degree, &n.class) else {
                return Err(Error::Invalid(format!("{} needs coeffs, degree and class", n.rule)));
            };
            if m < 2 {
                return Err(Error::BadModulus(m));
            }
            if n.tensor != (level == Some(Level::Tensor)) {
                return Err(Error::Invalid("level=tensor must be set exactly for tensor-ring premises".into()));
            }
        }
        if n.premise == Premise::CatalogFact {
            self.catalog_facts
                .push(format!("{path}: {} on `{}` accepted as a catalog fact", n.rule, n.space));
        }
        let verified = n.premise == Premise::Verified;
        let kind = decl.kind.clone();
        let kids = &n.children;
        let arity = |k: usize| -> Result<()> {
            if kids.len() != k {
                return Err(Error::Invalid(format!("{} takes {k} children, found {}", n.rule, kids.len())));
            }
            Ok(())
        };
        match n.rule {
            Rule::Nonzero => {
                arity(0)?;
                if n.bound != 1 {
                    return Err(Error::Invalid(format!("NONZERO gives bound 1, not {}", n.bound)));
                }
                if n.degree == Some(0) {
                    return Err(Error::Invalid("NONZERO needs a positive-degree class".into()));
                }
                if verified {
                    self.require_nonzero(n)?;
                }
            }
            Rule::Product => {
                if kids.len() < 2 {
                    return Err(Error::Invalid("PRODUCT needs at least two factors".into()));
                }
                let sum: usize = kids.iter().map(|k| k.bound).sum();
                if n.bound != sum {
                    return Err(Error::Invalid(format!("PRODUCT bound {} differs from the sum {sum} of its factors", n.bound)));
                }
                let mut factors = Vec::new();
                for k in kids {
                    if !k.rule.carries_class() || k.space != n.space || k.coeffs != n.coeffs {
                        return Err(Error::Invalid(
                            "PRODUCT factors must be classes on the same space with the same coefficients".into(),
                        ));
                    }
                    factors.push(k.degree.unwrap_or(0));
                }
                if n.degree != Some(factors.iter().sum()) {
                    return Err(Error::Invalid("PRODUCT degree is not the sum of the factor degrees".into()));
                }
                if verified {
                    let m = n.coeffs.unwrap_or(0);
                    let classes = kids
                        .iter()
                        .map(|k| Ok((k.degree.unwrap_or(0), coords(k)?.to_vec())))
                        .collect::<Result<Vec<_>>>()?;
                    let (deg, got) = self.ws.cup(&n.space, m, &classes)?;
                    let want = self.ws.reduce(&n.space, m, deg, coords(n)?)?;
                    let got = self.ws.reduce(&n.space, m, deg, &got)?;
                    if got != want {
                        return Err(Error::Invalid(format!("product of the factors is {got:?}, not the claimed {want:?}")));
                    }
                    self.require_nonzero(n)?;
                }
            }
            Rule::Pullback => {
                arity(1)?;
                let child = &kids[0];
                let from = n.from.as_deref().ok_or_else(|| Error::Invalid("PULLBACK needs from=".into()))?;
                if child.space != from {
                    return Err(Error::Invalid(format!("child lives on `{}`, not on from={from}", child.space)));
                }
                if !child.rule.carries_class() || child.coeffs != n.coeffs {
                    return Err(Error::Invalid("pulled-back child must be a class with the same coefficients".into()));
                }
                if n.bound != child.bound {
                    return Err(Error::Invalid(format!("PULLBACK keeps the bound {}, not {}", child.bound, n.bound)));
                }
                if n.degree != child.degree {
                    return Err(Error::Invalid("pullback preserves degree".into()));
                }
                let from_kind = cert.space(from).map(|d| d.kind.clone()).expect("checked above");
                let m = n.coeffs.unwrap_or(0);
                match n.map {
                    Some(MapKind::Projection) => {
                        let SpaceKind::Product(e, k) = &kind else {
                            return Err(Error::Invalid("projection needs a product space".into()));
                        };
                        let factor = n.factor.ok_or_else(|| Error::Invalid("projection needs factor=".into()))?;
                        let ok = match (factor, &from_kind) {
                            (1, SpaceKind::Expr(f)) => normalize(f) == normalize(e),
                            (2, SpaceKind::Sphere(j)) => j == k,
                            _ => false,
                        };
                        if !ok {
                            return Err(Error::Invalid(format!("`{from}` is not factor {factor} of `{}`", n.space)));
                        }
                        if verified {
                            let deg = n.degree.unwrap_or(0);
                            let got = self.ws.pull_projection(&n.space, from, factor, m, deg, coords(child)?)?;
                            let got = self.ws.reduce(&n.space, m, deg, &got)?;
                            let want = self.ws.reduce(&n.space, m, deg, coords(n)?)?;
                            if got != want {
                                return Err(Error::Invalid(format!("pullback is {got:?}, not the claimed {want:?}")));
                            }
                            self.require_nonzero(n)?;
                        }
                    }
                    Some(MapKind::Collapse) => {
                        let (SpaceKind::Expr(e), SpaceKind::Expr(p)) = (&kind, &from_kind) else {
                            return Err(Error::Invalid("collapse maps a connected sum onto a summand".into()));
                        };
                        let (e, p) = (normalize(e), normalize(p));
                        if !p.is_prime() || e.is_prime() || !e.summands.contains(&p.summands[0]) {
                            return Err(Error::Invalid(format!("{p} is not a summand of the composite {e}")));
                        }
                        if n.degree != Some(3) {
                            return Err(Error::Invalid("collapse pullback is used on top-degree classes".into()));
                        }
                        if m != 2 && !facts(&e).orientable {
                            return Err(Error::Invalid("collapse has degree one only mod 2 on a non-orientable sum".into()));
                        }
                        if verified {
                            let a = self.ws.top_pairing(&n.space, m, coords(n)?)?;
                            let b = self.ws.top_pairing(from, m, coords(child)?)?;
                            if b == 0 || (a != b && (a + b) % m != 0) {
                                return Err(Error::Invalid(format!(
                                    "fundamental-class values {a} and {b} do not agree up to sign"
                                )));
                            }
                        }
                    }
                    None => return Err(Error::Invalid("PULLBACK needs map=".into())),
                }
            }
            Rule::Aspherical => {
                arity(0)?;
                let p = self.single_prime(&kind)?;
                if !p.record().aspherical {
                    return Err(Error::Invalid(format!("{p} is not aspherical")));
                }
                if Some(n.bound) != n.degree {
                    return Err(Error::Invalid("ASPHERICAL bound equals the class degree".into()));
                }
                self.catalog_facts.push(format!("{path}: {p} is aspherical"));
                if verified {
                    self.require_nonzero(n)?;
                }
            }
            Rule::FinitePi1 => {
                arity(0)?;
                let p = self.single_prime(&kind)?;
                let Pi1Tag::Finite(d) = p.record().pi1 else {
                    return Err(Error::Invalid(format!("{p} does not have finite fundamental group")));
                };
                let m = n.coeffs.unwrap_or(0);
                if m != d && !(m == 2 && d % 2 == 0) {
                    return Err(Error::Invalid(format!("coefficients Z/{m} are neither Z/{d} nor Z/2 with {d} even")));
                }
                if n.degree != Some(3) || n.bound != 3 {
                    return Err(Error::Invalid("FINITE_PI1 gives bound 3 to top-degree classes".into()));
                }
                self.catalog_facts.push(format!(
                    "{path}: non-zero classes of H^3({p}; Z/{m}) have weight 3 (fundamental group of order {d})"
                ));
                if verified {
                    self.require_nonzero(n)?;
                }
            }
            Rule::Cover => {
                arity(1)?;
                let child = &kids[0];
                let cdecl = cert
                    .space(&child.space)
                    .ok_or_else(|| Error::Invalid(format!("dangling reference to space `{}`", child.space)))?;
                if cdecl.cover_of.as_deref() != Some(n.space.as_str()) {
                    return Err(Error::Invalid(format!("`{}` is not declared as a cover of `{}`", child.space, n.space)));
                }
                let ok = match (&kind, &cdecl.kind) {
                    (SpaceKind::Expr(e), SpaceKind::Expr(d)) => double_cover(&normalize(e)) == Some(normalize(d)),
                    (SpaceKind::Product(e, k), SpaceKind::Product(d, j)) => {
                        k == j && double_cover(&normalize(e)) == Some(normalize(d))
                    }
                    _ => false,
                };
                if !ok {
                    return Err(Error::Invalid(format!("`{}` is not the orientable double cover of `{}`", child.space, n.space)));
                }
                if n.bound != child.bound {
                    return Err(Error::Invalid(format!("COVER passes the bound {} through unchanged", child.bound)));
                }
                self.catalog_facts.push(format!(
                    "{path}: a covering space has category at most that of the base (`{}` covers `{}`)",
                    child.space, n.space
                ));
            }
            Rule::Trichotomy => {
                let SpaceKind::Complex(x) = &kind else {
                    return Err(Error::Invalid("TRICHOTOMY applies to triangulated complexes".into()));
                };
                let tag = n.pi1.ok_or_else(|| Error::Invalid("TRICHOTOMY needs pi1=".into()))?;
                let v = cat_from_pi1(tag).ok_or_else(|| Error::Invalid("unclassified fundamental group".into()))?;
                if n.bound != v {
                    return Err(Error::Invalid(format!("fundamental group {tag} gives category {v}, not {}", n.bound)));
                }
                if section == Section::Upper && !kids.is_empty() {
                    return Err(Error::Invalid("upper TRICHOTOMY takes no children".into()));
                }
                if kids.iter().any(|k| k.bound > n.bound || k.space != n.space) {
                    return Err(Error::Invalid("supporting children must lie on the same space below the bound".into()));
                }
                let report = x.validate()?;
                if !(report.is_closed_pseudo_manifold && report.connected && x.dim() == 3) {
                    return Err(Error::Invalid("TRICHOTOMY needs a connected closed 3-dimensional complex".into()));
                }
                let got = classify_space(x)?.tag;
                if got != tag {
                    return Err(Error::Invalid(format!("fundamental group classifies as {got}, not {tag}")));
                }
                self.catalog_facts
                    .push(format!("{path}: `{}` is a closed 3-manifold (only pseudo-manifold checked)", n.space));
            }
            Rule::Dim => {
                arity(0)?;
                let d = match &kind {
                    SpaceKind::Expr(_) => 3,
                    SpaceKind::Product(_, k) => 3 + k,
                    SpaceKind::Sphere(k) => *k,
                    SpaceKind::Complex(x) => x.dim(),
                };
                if n.bound != d {
                    return Err(Error::Invalid(format!("dimension is {d}, not {}", n.bound)));
                }
            }
            Rule::Sphere => {
                arity(0)?;
                let dim = match &kind {
                    SpaceKind::Sphere(k) => *k,
                    SpaceKind::Expr(e) if normalize(e).summands == [Prime::S3] => 3,
                    _ => return Err(Error::Invalid(format!("`{}` is not a sphere", n.space))),
                };
                if n.bound != 1 {
                    return Err(Error::Invalid("spheres have category 1".into()));
                }
                if verified {
                    let h = homology(self.ws.complex(&n.space)?, Coefficients::Integers)?;
                    let sphere_like = (0..=dim).all(|k| {
                        let want = usize::from(k == 0 || k == dim);
                        h.rank(k) == want && h.torsion(k).is_empty()
                    });
                    if !sphere_like {
                        return Err(Error::Invalid(format!("triangulation does not have the homology of S^{dim}")));
                    }
                }
            }
            Rule::Pushout => {
                arity(0)?;
                let SpaceKind::Expr(e) = &kind else {
                    return Err(Error::Invalid("PUSHOUT applies to connected sums".into()));
                };
                let e = normalize(e);
                if !e.summands.iter().all(|p| matches!(p, Prime::S1xS2 | Prime::S1TwistedS2)) {
                    return Err(Error::Invalid(format!("{e} is not a sum of sphere bundles over the circle")));
                }
                if n.bound != 2 {
                    return Err(Error::Invalid("PUSHOUT gives bound 2".into()));
                }
                if verified {
                    let got = classify_space(self.ws.complex(&n.space)?)?.tag;
                    if got != Pi1Tag::Free(e.summands.len()) {
                        return Err(Error::Invalid(format!("fundamental group classifies as {got}")));
                    }
                }
            }
            Rule::ProductIneq => {
                arity(2)?;
                let SpaceKind::Product(e, k) = &kind else {
                    return Err(Error::Invalid("PRODUCT_INEQ applies to product spaces".into()));
                };
                let first = cert.space(&kids[0].space).map(|d| d.kind.clone());
                let second = cert.space(&kids[1].space).map(|d| d.kind.clone());
                let ok = matches!(&first, Some(SpaceKind::Expr(f)) if normalize(f) == normalize(e))
                    && matches!(second, Some(SpaceKind::Sphere(j)) if j == *k);
                if !ok {
                    return Err(Error::Invalid("children must bound the two factors".into()));
                }
                if n.bound != kids[0].bound + kids[1].bound {
                    return Err(Error::Invalid(format!(
                        "PRODUCT_INEQ bound {} differs from {} + {}",
                        n.bound, kids[0].bound, kids[1].bound
                    )));
                }
            }
        }
        Ok(())
    }

    fn single_prime(&self, kind: &SpaceKind) -> Result<Prime> {
        match kind {
            SpaceKind::Expr(e) if normalize(e).is_prime() => Ok(normalize(e).summands[0]),
            _ => Err(Error::Invalid("rule applies to a single catalog prime".into())),
        }
    }

    fn require_nonzero(&mut self, n: &Node) -> Result<()> {
        let (m, deg) = (n.coeffs.unwrap_or(0), n.degree.unwrap_or(0));
        if self.ws.is_zero(&n.space, m, deg, coords(n)?)? {
            return Err(Error::Invalid(format!("class in H^{deg}({}; Z/{m}) is zero", n.space)));
        }
        Ok(())
    }
}
