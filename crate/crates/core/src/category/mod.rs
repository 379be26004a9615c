//! Category values with certificates: upper and lower bound rule trees whose
//! numeric premises are recomputed from triangulations where possible.

mod cert;
mod check;
mod workspace;

use std::fmt;

pub use cert::{CatValue, Certificate, ClassSpec, MapKind, Node, Premise, Rule, SpaceDecl, SpaceKind};
pub use check::{check_certificate, CheckReport};
pub use workspace::{level_of, sphere_complex, Level, Workspace};

use crate::complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::manifold::{double_cover, facts, normalize, Facts, ManifoldExpr, Prime};
use crate::pi1::{classify_space, Pi1Tag};

/// One way a detecting class is obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    pub rule: Rule,
    pub coeffs: u64,
    pub class: String,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over Z/{} ({})", self.class, self.coeffs, self.rule)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detect {
    Detectable(Vec<Route>),
    Unknown { reason: String, note: Option<String> },
    NotApplicable,
}

impl fmt::Display for Detect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Detect::Detectable(routes) => {
                write!(f, "detectable")?;
                for r in routes {
                    write!(f, "\n  route: {r}")?;
                }
                Ok(())
            }
            Detect::Unknown { reason, note } => {
                write!(f, "unknown: {reason}")?;
                if let Some(n) = note {
                    write!(f, "\n  note: {n}")?;
                }
                Ok(())
            }
            Detect::NotApplicable => write!(f, "not applicable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatResult {
    /// Printable name of the space, e.g. `T3 # L(5,1)` or `RP3 x S^1`.
    pub subject: String,
    pub value: CatValue,
    pub pi1: Pi1Tag,
    pub certificate: Certificate,
    pub detect: Detect,
}

impl CatResult {
    pub fn value(&self) -> Option<usize> {
        match self.value {
            CatValue::Exact(k) => Some(k),
            CatValue::Interval(..) => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        self.value.bounds()
    }

    /// One line per bound: the rule chain of each trace.
    pub fn trace(&self) -> String {
        format!(
            "upper: {}\nlower: {}\n",
            summarize(&self.certificate.upper),
            summarize(&self.certificate.lower)
        )
    }
}

/// `RULE[bound](children...)` with coefficient and map annotations.
pub fn summarize(n: &Node) -> String {
    let mut s = format!("{}[{}]", n.rule, n.bound);
    let mut notes = Vec::new();
    if let Some(m) = n.coeffs {
        if n.rule != Rule::Pullback {
            notes.push(format!("Z/{m} deg {}", n.degree.unwrap_or(0)));
        }
    }
    if let (Some(map), Some(from)) = (n.map, &n.from) {
        notes.push(match map {
            MapKind::Collapse => format!("collapse onto {from}"),
            MapKind::Projection => format!("projection to {from}"),
        });
    }
    if let Some(t) = n.pi1 {
        notes.push(format!("pi1 {t}"));
    }
    if n.premise == Premise::CatalogFact {
        notes.push("catalog".into());
    }
    if !notes.is_empty() {
        s.push_str(&format!(" {{{}}}", notes.join(", ")));
    }
    if !n.children.is_empty() {
        let kids: Vec<String> = n.children.iter().map(summarize).collect();
        s.push_str(&format!(" <- ({})", kids.join("; ")));
    }
    s
}

/// Category from the fundamental group class of a closed 3-manifold.
pub fn cat_from_pi1(tag: Pi1Tag) -> Option<usize> {
    match tag {
        Pi1Tag::Trivial => Some(1),
        Pi1Tag::Free(_) => Some(2),
        Pi1Tag::Finite(_) | Pi1Tag::InfiniteNonFree => Some(3),
        Pi1Tag::Unknown => None,
    }
}

fn non_free(p: &Prime) -> bool {
    !matches!(p.record().pi1, Pi1Tag::Trivial | Pi1Tag::Free(_))
}

/// A prime whose detecting class lives in `Z/2` cohomology: no odd torsion,
/// or finite of even order.
fn has_z2_route(p: &Prime) -> bool {
    let r = p.record();
    !r.has_odd_torsion || matches!(r.pi1, Pi1Tag::Finite(d) if d % 2 == 0)
}

/// The summand a composite expression collapses onto, if any.
fn preferred_summand(e: &ManifoldExpr, f: &Facts) -> Option<Prime> {
    let mut cands: Vec<Prime> = e.summands.iter().copied().filter(non_free).collect();
    if !f.orientable {
        cands.retain(has_z2_route);
    }
    cands.sort_by_key(|p| (!p.record().triangulable, !has_z2_route(p), *p));
    cands.first().copied()
}

fn is_exceptional(e: &ManifoldExpr, f: &Facts) -> bool {
    !e.is_prime() && !f.orientable && cat_from_pi1(f.pi1) == Some(3) && preferred_summand(e, f).is_none()
}

/// Structural detectability verdict; never answers "not detectable".
pub fn detectability(e: &ManifoldExpr) -> Detect {
    let e = normalize(e);
    let f = facts(&e);
    match f.pi1 {
        Pi1Tag::Trivial => {
            return Detect::Detectable(vec![Route {
                rule: Rule::Nonzero,
                coeffs: 2,
                class: "generator of H^3".into(),
            }])
        }
        Pi1Tag::Free(_) => {
            return Detect::Detectable(vec![Route {
                rule: Rule::Product,
                coeffs: 2,
                class: "cup-length-2 product in H^3".into(),
            }])
        }
        _ => {}
    }
    if e.is_prime() {
        let p = e.summands[0];
        let r = p.record();
        return Detect::Detectable(match r.pi1 {
            Pi1Tag::Finite(d) => {
                let mut routes = vec![Route {
                    rule: Rule::FinitePi1,
                    coeffs: d,
                    class: format!("non-zero class of H^3 (d = {d})"),
                }];
                if d % 2 == 0 {
                    routes.push(Route {
                        rule: Rule::FinitePi1,
                        coeffs: 2,
                        class: "non-zero class of H^3 (d even)".into(),
                    });
                }
                routes
            }
            _ if r.aspherical => vec![Route {
                rule: Rule::Aspherical,
                coeffs: 2,
                class: "generator of H^3".into(),
            }],
            _ => vec![Route {
                rule: Rule::Product,
                coeffs: 2,
                class: "cup-length-3 product x*a*a in H^3".into(),
            }],
        });
    }
    match preferred_summand(&e, &f) {
        Some(p) => {
            let child = detectability(&ManifoldExpr::prime(p));
            let Detect::Detectable(inner) = child else {
                unreachable!("non-free primes are detectable")
            };
            let inner: Vec<&Route> = if f.orientable {
                inner.iter().collect()
            } else {
                inner.iter().filter(|r| r.coeffs == 2).collect()
            };
            Detect::Detectable(
                inner
                    .into_iter()
                    .map(|r| Route {
                        rule: Rule::Pullback,
                        coeffs: r.coeffs,
                        class: format!("pullback along the collapse onto {p} of the {}", r.class),
                    })
                    .collect(),
            )
        }
        None => Detect::Unknown {
            reason: "non-orientable, and every non-free prime summand has odd-order fundamental group".into(),
            note: double_cover(&e).map(|d| format!("the orientable double cover {d} has category 3")),
        },
    }
}

struct Builder {
    ws: Workspace,
    spaces: Vec<SpaceDecl>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            ws: Workspace::default(),
            spaces: Vec::new(),
        }
    }

    fn declare(&mut self, label: &str, kind: SpaceKind, cover_of: Option<&str>) -> String {
        if self.spaces.iter().all(|s| s.label != label) {
            let decl = SpaceDecl {
                label: label.to_string(),
                kind,
                cover_of: cover_of.map(str::to_string),
            };
            self.ws.add(&decl);
            self.spaces.push(decl);
        }
        label.to_string()
    }

    fn premise(&self, label: &str, coeffs: Option<u64>) -> (Premise, bool) {
        match self.ws.level(label, coeffs).ok().flatten() {
            Some(l) => (Premise::Verified, l == Level::Tensor),
            None => (Premise::CatalogFact, false),
        }
    }

    fn class_node(&mut self, rule: Rule, bound: usize, label: &str, m: u64, deg: usize, class: ClassSpec) -> Node {
        let (premise, tensor) = self.premise(label, Some(m));
        let mut n = Node::new(rule, bound, premise, label).with_class(m, deg, class);
        n.tensor = tensor;
        n
    }

    /// First basis class in degree `deg`, or a symbol when not computable.
    fn generator(&mut self, label: &str, m: u64, deg: usize, symbol: &str) -> Result<ClassSpec> {
        if self.ws.level(label, Some(m))?.is_none() {
            return Ok(ClassSpec::Symbol(symbol.into()));
        }
        let orders = self.ws.orders(label, m, deg)?;
        if orders.is_empty() {
            return Err(Error::Invalid(format!("H^{deg}({label}; Z/{m}) vanishes")));
        }
        let mut c = vec![0; orders.len()];
        c[0] = 1;
        Ok(ClassSpec::Coords(c))
    }

    /// `Z/2` cup-length witness as a PRODUCT of NONZERO leaves (or a single
    /// NONZERO leaf when the cup-length is one).
    fn cup_tree(&mut self, label: &str) -> Result<(usize, Node)> {
        let (len, w) = self.ws.cup_length(label)?;
        let leaves: Vec<Node> = w
            .factors
            .iter()
            .map(|&(d, i)| {
                let mut c = vec![0; self.ws.orders(label, 2, d).map_or(0, |o| o.len())];
                c[i] = 1;
                self.class_node(Rule::Nonzero, 1, label, 2, d, ClassSpec::Coords(c))
            })
            .collect();
        if len == 1 {
            return Ok((1, leaves.into_iter().next().expect("one factor")));
        }
        let (deg, coords) = w.product_class;
        Ok((len, self.class_node(Rule::Product, len, label, 2, deg, ClassSpec::Coords(coords)).with_children(leaves)))
    }

    /// Symbolic cup-length tree for a non-triangulable space.
    fn symbolic_cup_tree(&mut self, label: &str, degrees: &[usize]) -> Node {
        let leaves: Vec<Node> = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| self.class_node(Rule::Nonzero, 1, label, 2, d, ClassSpec::Symbol(format!("x{i}"))))
            .collect();
        let total = degrees.iter().sum();
        self.class_node(Rule::Product, degrees.len(), label, 2, total, ClassSpec::Symbol("x".into()))
            .with_children(leaves)
    }

    /// A lower-bound tree on the expression space `label` whose root names a
    /// top-degree class of weight `cat`, when the theory provides one.
    fn detecting_tree(&mut self, label: &str, e: &ManifoldExpr) -> Result<Option<Node>> {
        let f = facts(e);
        let computable = self.ws.level(label, Some(2))?.is_some();
        match f.pi1 {
            Pi1Tag::Trivial => {
                let c = self.generator(label, 2, 3, "u")?;
                return Ok(Some(self.class_node(Rule::Nonzero, 1, label, 2, 3, c)));
            }
            Pi1Tag::Free(_) => {
                return Ok(Some(if computable {
                    let (len, t) = self.cup_tree(label)?;
                    if len != 2 {
                        return Err(Error::Invalid(format!("expected Z/2 cup-length 2, found {len}")));
                    }
                    t
                } else {
                    self.symbolic_cup_tree(label, &[1, 2])
                }));
            }
            _ => {}
        }
        if e.is_prime() {
            let p = e.summands[0];
            let r = p.record();
            let node = match r.pi1 {
                Pi1Tag::Finite(d) => {
                    let m = if d % 2 == 0 { 2 } else { d };
                    let c = self.generator(label, m, 3, "u")?;
                    self.class_node(Rule::FinitePi1, 3, label, m, 3, c)
                }
                _ if r.aspherical => {
                    let c = self.generator(label, 2, 3, "u")?;
                    self.class_node(Rule::Aspherical, 3, label, 2, 3, c)
                }
                _ => {
                    if computable {
                        let (len, t) = self.cup_tree(label)?;
                        if len != 3 {
                            return Err(Error::Invalid(format!("expected Z/2 cup-length 3, found {len}")));
                        }
                        t
                    } else {
                        self.symbolic_cup_tree(label, &[1, 1, 1])
                    }
                }
            };
            return Ok(Some(node));
        }
        let Some(p) = preferred_summand(e, &f) else {
            return Ok(None);
        };
        let plabel = self.declare("P", SpaceKind::Expr(ManifoldExpr::prime(p)), None);
        let child = self
            .detecting_tree(&plabel, &ManifoldExpr::prime(p))?
            .expect("non-free primes have detecting trees");
        let m = child.coeffs.expect("detecting trees carry classes");
        let class = match (&child.class, self.ws.level(label, Some(m))?) {
            (Some(ClassSpec::Coords(v)), Some(_)) => {
                let target = self.ws.top_pairing(&plabel, m, v)?;
                let g = match self.generator(label, m, 3, "f*u")? {
                    ClassSpec::Coords(g) => g,
                    ClassSpec::Symbol(_) => unreachable!("computable space"),
                };
                let a = self.ws.top_pairing(label, m, &g)?;
                let c = (1..m)
                    .find(|c| a * c % m == target % m)
                    .ok_or_else(|| Error::Invalid("collapse pairing has no solution".into()))?;
                ClassSpec::Coords(g.iter().map(|x| x * c % m).collect())
            }
            _ => ClassSpec::Symbol("f*u".into()),
        };
        let mut node = self.class_node(Rule::Pullback, 3, label, m, 3, class);
        node.map = Some(MapKind::Collapse);
        node.from = Some(plabel);
        Ok(Some(node.with_children(vec![child])))
    }

    fn upper_tree(&mut self, label: &str, e: &ManifoldExpr) -> Node {
        let f = facts(e);
        let (premise, _) = self.premise(label, None);
        match f.pi1 {
            Pi1Tag::Trivial => Node::new(Rule::Sphere, 1, premise, label),
            Pi1Tag::Free(_) => Node::new(Rule::Pushout, 2, premise, label),
            _ => Node::new(Rule::Dim, 3, premise, label),
        }
    }

    /// Lower tree on `label` (an expression space); exceptional shapes go
    /// through the orientable double cover.
    fn lower_tree(&mut self, label: &str, e: &ManifoldExpr) -> Result<Node> {
        if let Some(t) = self.detecting_tree(label, e)? {
            return Ok(t);
        }
        let f = facts(e);
        debug_assert!(is_exceptional(e, &f));
        let d = double_cover(e).expect("exceptional shapes are non-orientable");
        let dlabel = self.declare("Mbar", SpaceKind::Expr(d.clone()), Some(label));
        let child = self
            .detecting_tree(&dlabel, &d)?
            .expect("orientable non-free expressions have detecting trees");
        let (premise, _) = self.premise(label, None);
        Ok(Node::new(Rule::Cover, child.bound, premise, label).with_children(vec![child]))
    }

    /// `PRODUCT(pr_1^* u, pr_2^* s)` on the product space `xlabel` over the
    /// detecting tree `t` on `mlabel`.
    fn ganea_product(&mut self, xlabel: &str, mlabel: &str, slabel: &str, n: usize, t: Node) -> Result<Node> {
        let m = t.coeffs.expect("detecting trees carry classes");
        let deg = t.degree.expect("detecting trees carry classes");
        let computable = self.ws.level(xlabel, Some(m))?.is_some();
        let s_class = ClassSpec::Coords(vec![1]);
        let sphere_leaf = self.class_node(Rule::Nonzero, 1, slabel, m, n, s_class);
        let (c1, c2, prod) = match (&t.class, computable) {
            (Some(ClassSpec::Coords(u)), true) => {
                let c1 = self.ws.pull_projection(xlabel, mlabel, 1, m, deg, u)?;
                let c2 = self.ws.pull_projection(xlabel, slabel, 2, m, n, &[1])?;
                let (_, p) = self.ws.cup(xlabel, m, &[(deg, c1.clone()), (n, c2.clone())])?;
                (ClassSpec::Coords(c1), ClassSpec::Coords(c2), ClassSpec::Coords(p))
            }
            _ => (
                ClassSpec::Symbol("pr1*u".into()),
                ClassSpec::Symbol("pr2*s".into()),
                ClassSpec::Symbol("u.s".into()),
            ),
        };
        let k = t.bound;
        let mut left = self.class_node(Rule::Pullback, k, xlabel, m, deg, c1);
        left.map = Some(MapKind::Projection);
        left.factor = Some(1);
        left.from = Some(mlabel.to_string());
        let mut right = self.class_node(Rule::Pullback, 1, xlabel, m, n, c2);
        right.map = Some(MapKind::Projection);
        right.factor = Some(2);
        right.from = Some(slabel.to_string());
        let left = left.with_children(vec![t]);
        let right = right.with_children(vec![sphere_leaf]);
        Ok(self
            .class_node(Rule::Product, k + 1, xlabel, m, deg + n, prod)
            .with_children(vec![left, right]))
    }

    fn finish(self, subject: &str, upper: Node, lower: Node) -> Certificate {
        Certificate {
            subject: subject.to_string(),
            value: CatValue::from_bounds(lower.bound, upper.bound),
            spaces: self.spaces,
            upper,
            lower,
        }
    }
}

/// Category of a connected sum of catalog primes.
pub fn ls_category(e: &ManifoldExpr) -> Result<CatResult> {
    let e = normalize(e);
    let f = facts(&e);
    let mut b = Builder::new();
    let m = b.declare("M", SpaceKind::Expr(e.clone()), None);
    let upper = b.upper_tree(&m, &e);
    let lower = b.lower_tree(&m, &e)?;
    let certificate = b.finish(&m, upper, lower);
    Ok(CatResult {
        subject: e.to_string(),
        value: certificate.value,
        pi1: f.pi1,
        certificate,
        detect: detectability(&e),
    })
}

/// Category of `M × S^n`, one more than that of `M`.
pub fn verify_ganea(e: &ManifoldExpr, n: usize) -> Result<CatResult> {
    if n == 0 {
        return Err(Error::Invalid("sphere dimension must be at least 1".into()));
    }
    let e = normalize(e);
    let f = facts(&e);
    let mut b = Builder::new();
    let x = b.declare("X", SpaceKind::Product(e.clone(), n), None);
    let m = b.declare("M", SpaceKind::Expr(e.clone()), None);
    let s = b.declare("S", SpaceKind::Sphere(n), None);
    let base_upper = b.upper_tree(&m, &e);
    let (sp, _) = b.premise(&s, None);
    let sphere_upper = Node::new(Rule::Sphere, 1, sp, &s);
    let (xp, _) = b.premise(&x, None);
    let upper = Node::new(Rule::ProductIneq, base_upper.bound + 1, xp, &x).with_children(vec![base_upper, sphere_upper]);
    let lower = match b.detecting_tree(&m, &e)? {
        Some(t) => b.ganea_product(&x, &m, &s, n, t)?,
        None => {
            let d = double_cover(&e).expect("exceptional shapes are non-orientable");
            let xbar = b.declare("Xbar", SpaceKind::Product(d.clone(), n), Some(&x));
            let mbar = b.declare("Mbar", SpaceKind::Expr(d.clone()), Some(&m));
            let t = b
                .detecting_tree(&mbar, &d)?
                .expect("orientable non-free expressions have detecting trees");
            let child = b.ganea_product(&xbar, &mbar, &s, n, t)?;
            Node::new(Rule::Cover, child.bound, xp, &x).with_children(vec![child])
        }
    };
    let certificate = b.finish(&x, upper, lower);
    Ok(CatResult {
        subject: format!("{e} x S^{n}"),
        value: certificate.value,
        pi1: f.pi1,
        certificate,
        detect: Detect::NotApplicable,
    })
}

/// Category of a raw triangulated closed 3-manifold, exact when the
/// fundamental group is classified and an interval otherwise.
pub fn ls_category_complex(x: &DeltaComplex) -> Result<CatResult> {
    if x.dim() != 3 {
        return Err(Error::Invalid(format!("expected a 3-dimensional complex, found dimension {}", x.dim())));
    }
    let report = x.validate()?;
    if !report.connected {
        return Err(Error::NotConnected);
    }
    if !report.is_closed_pseudo_manifold {
        return Err(Error::NotClosed(format!(
            "{} codimension-one faces are not shared by exactly two top simplices",
            report.offending_faces.len()
        )));
    }
    let class = classify_space(x)?;
    let mut b = Builder::new();
    let m = b.declare("M", SpaceKind::Complex(x.clone()), None);
    let (cl, cup) = b.cup_tree(&m)?;
    let (upper, lower, detect) = match cat_from_pi1(class.tag) {
        Some(v) => {
            let mut upper = if v == 3 {
                Node::new(Rule::Dim, 3, Premise::Verified, &m)
            } else {
                Node::new(Rule::Trichotomy, v, Premise::Verified, &m)
            };
            if upper.rule == Rule::Trichotomy {
                upper.pi1 = Some(class.tag);
            }
            let mut lower = Node::new(Rule::Trichotomy, v, Premise::Verified, &m).with_children(vec![cup]);
            lower.pi1 = Some(class.tag);
            let detect = if cl == v {
                Detect::Detectable(vec![Route {
                    rule: if cl == 1 { Rule::Nonzero } else { Rule::Product },
                    coeffs: 2,
                    class: format!("cup-length-{cl} product"),
                }])
            } else {
                Detect::Unknown {
                    reason: format!("Z/2 cup-length {cl} is below the category {v}"),
                    note: None,
                }
            };
            (upper, lower, detect)
        }
        None => (
            Node::new(Rule::Dim, 3, Premise::Verified, &m),
            cup,
            Detect::Unknown {
                reason: "fundamental group could not be classified".into(),
                note: Some(class.evidence.join("; ")),
            },
        ),
    };
    let certificate = b.finish(&m, upper, lower);
    Ok(CatResult {
        subject: "complex".into(),
        value: certificate.value,
        pi1: class.tag,
        certificate,
        detect,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeOneVerdict {
    /// `cat(source) ≥ cat(target)`: no obstruction found.
    Consistent { source_cat: usize, target_cat: usize },
    /// A degree-one map would force `cat(source) ≥ cat(target)`.
    NoDegreeOneMap {
        source_cat: usize,
        target_cat: usize,
        /// Source has free fundamental group and target does not.
        free_pi1_obstruction: bool,
    },
}

impl fmt::Display for DegreeOneVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DegreeOneVerdict::Consistent { source_cat, target_cat } => {
                write!(f, "consistent: cat(source) = {source_cat} >= {target_cat} = cat(target)")
            }
            DegreeOneVerdict::NoDegreeOneMap {
                source_cat,
                target_cat,
                free_pi1_obstruction,
            } => {
                write!(
                    f,
                    "no degree-one map: cat(source) = {source_cat} < {target_cat} = cat(target)"
                )?;
                if free_pi1_obstruction {
                    write!(f, "\n  free fundamental group of the source forces a free target group")?;
                }
                Ok(())
            }
        }
    }
}

/// Obstructions to a degree-one map `source → target` between oriented
/// manifolds: category cannot increase along such maps, and a free source
/// group forces a free target group.
pub fn degree_one_consequences(source: &ManifoldExpr, target: &ManifoldExpr) -> Result<DegreeOneVerdict> {
    let (s, t) = (normalize(source), normalize(target));
    let (fs, ft) = (facts(&s), facts(&t));
    for (e, f) in [(&s, &fs), (&t, &ft)] {
        if !f.orientable {
            return Err(Error::NonOrientable(e.to_string()));
        }
    }
    let source_cat = cat_from_pi1(fs.pi1).expect("catalog expressions are classified");
    let target_cat = cat_from_pi1(ft.pi1).expect("catalog expressions are classified");
    Ok(if source_cat >= target_cat {
        DegreeOneVerdict::Consistent { source_cat, target_cat }
    } else {
        DegreeOneVerdict::NoDegreeOneMap {
            source_cat,
            target_cat,
            free_pi1_obstruction: matches!(fs.pi1, Pi1Tag::Free(_) | Pi1Tag::Trivial)
                && !matches!(ft.pi1, Pi1Tag::Free(_) | Pi1Tag::Trivial),
        }
    })
}
