//! Connected-sum expressions over a catalog of prime 3-manifolds.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::complex::{connected_sum, DeltaComplex, Generator};
use crate::error::{Error, Result};
use crate::pi1::Pi1Tag;

/// A catalog prime. The derived order is the canonical summand order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prime {
    S3,
    S1xS2,
    S1TwistedS2,
    T3,
    RP2xS1,
    Lens(u64, u64),
    Poinc,
    Q8,
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::S3 => write!(f, "S3"),
            Prime::S1xS2 => write!(f, "S1xS2"),
            Prime::S1TwistedS2 => write!(f, "S1~S2"),
            Prime::T3 => write!(f, "T3"),
            Prime::RP2xS1 => write!(f, "RP2xS1"),
            Prime::Lens(p, q) => write!(f, "L({p},{q})"),
            Prime::Poinc => write!(f, "Poinc"),
            Prime::Q8 => write!(f, "Q8"),
        }
    }
}

impl Prime {
    pub fn record(&self) -> PrimeRecord {
        catalog().record(self)
    }

    pub fn generator(&self) -> Result<Generator> {
        match *self {
            Prime::S3 => Ok(Generator::S3),
            Prime::S1xS2 => Ok(Generator::S1xS2),
            Prime::S1TwistedS2 => Ok(Generator::S1TwistedS2),
            Prime::T3 => Ok(Generator::T3),
            Prime::RP2xS1 => Ok(Generator::RP2xS1),
            Prime::Lens(p, q) => Ok(Generator::Lens { p, q }),
            Prime::Poinc | Prime::Q8 => Err(Error::NoTriangulation(self.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRecord {
    pub key: String,
    pub pi1: Pi1Tag,
    pub orientable: bool,
    pub irreducible: bool,
    pub aspherical: bool,
    pub pi2_zero: bool,
    pub has_odd_torsion: bool,
    pub triangulable: bool,
}

/// Columns: key, pi1, orientable, irreducible, aspherical, pi2_zero,
/// odd_torsion, triangulable. The `L(p,q)` row is a family: `Finite(p)` and
/// `odd(p)` (true when `p` has an odd prime factor) are evaluated per member.
pub const CATALOG_TABLE: &str = "\
# key    pi1              orient irred asph pi2=0 odd     triang
S3       Trivial          yes    yes   no   yes   no      yes
S1xS2    Free(1)          yes    no    no   no    no      yes
S1~S2    Free(1)          no     no    no   no    no      yes
T3       InfiniteNonFree  yes    yes   yes  yes   no      yes
RP2xS1   InfiniteNonFree  no     yes   no   no    no      yes
L(p,q)   Finite(p)        yes    yes   no   yes   odd(p)  yes
Poinc    Finite(120)      yes    yes   no   yes   yes     no
Q8       Finite(8)        yes    yes   no   yes   no      no
";

#[derive(Debug, Clone)]
struct Row {
    key: String,
    pi1: String,
    flags: [String; 6],
}

#[derive(Debug, Clone)]
pub struct Catalog {
    rows: Vec<Row>,
}

fn yes_no(s: &str, p: u64) -> Result<bool> {
    match s {
        "yes" => Ok(true),
        "no" => Ok(false),
        "odd(p)" => {
            let mut n = p;
            while n.is_multiple_of(2) && n > 0 {
                n /= 2;
            }
            Ok(n > 1)
        }
        _ => Err(Error::Invalid(format!("bad catalog flag `{s}`"))),
    }
}

fn parse_tag(s: &str, p: u64) -> Result<Pi1Tag> {
    if s == "Finite(p)" {
        return Ok(Pi1Tag::Finite(p));
    }
    s.parse()
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 8 {
                return Err(Error::Invalid(format!("catalog row needs 8 columns: `{line}`")));
            }
            let row = Row {
                key: cols[0].to_string(),
                pi1: cols[1].to_string(),
                flags: std::array::from_fn(|i| cols[i + 2].to_string()),
            };
            // evaluate once so malformed rows fail at load time
            let p = if row.key == "L(p,q)" { 3 } else { 0 };
            parse_tag(&row.pi1, p)?;
            for f in &row.flags {
                yes_no(f, p)?;
            }
            rows.push(row);
        }
        Ok(Catalog { rows })
    }

    fn row_for(&self, prime: &Prime) -> &Row {
        let key = match prime {
            Prime::Lens(..) => "L(p,q)".to_string(),
            other => other.to_string(),
        };
        self.rows
            .iter()
            .find(|r| r.key == key)
            .unwrap_or_else(|| panic!("catalog has no row for {key}"))
    }

    pub fn record(&self, prime: &Prime) -> PrimeRecord {
        let row = self.row_for(prime);
        let p = if let Prime::Lens(p, _) = prime { *p } else { 0 };
        let flag = |i: usize| yes_no(&row.flags[i], p).expect("validated at load");
        PrimeRecord {
            key: prime.to_string(),
            pi1: parse_tag(&row.pi1, p).expect("validated at load"),
            orientable: flag(0),
            irreducible: flag(1),
            aspherical: flag(2),
            pi2_zero: flag(3),
            has_odd_torsion: flag(4),
            triangulable: flag(5),
        }
    }

    /// One representative per row, with several lens spaces for the family.
    pub fn sample_primes(&self) -> Vec<Prime> {
        let mut out = Vec::new();
        for r in &self.rows {
            match r.key.as_str() {
                "L(p,q)" => out.extend([Prime::Lens(2, 1), Prime::Lens(3, 1), Prime::Lens(4, 1), Prime::Lens(5, 2)]),
                k => out.push(parse_prime_key(k).expect("catalog key")),
            }
        }
        out
    }

    /// Checks the structural facts every record must satisfy.
    pub fn self_test(&self) -> Result<()> {
        for prime in self.sample_primes() {
            let r = self.record(&prime);
            let fail = |msg: &str| Err(Error::Invalid(format!("catalog record {}: {msg}", r.key)));
            if matches!(r.pi1, Pi1Tag::Free(n) if n > 0) && r.irreducible {
                return fail("non-trivial free fundamental group but irreducible");
            }
            if matches!(r.pi1, Pi1Tag::Finite(_)) && !(r.orientable && r.pi2_zero) {
                return fail("finite fundamental group must be orientable with vanishing pi2");
            }
            let bundle = matches!(prime, Prime::S1xS2 | Prime::S1TwistedS2);
            if r.irreducible == bundle {
                return fail("non-irreducible primes are exactly the sphere bundles over the circle");
            }
            if r.aspherical && !r.pi2_zero {
                return fail("aspherical with non-zero pi2");
            }
            if r.triangulable != prime.generator().is_ok() {
                return fail("triangulable flag disagrees with the generator table");
            }
            if r.triangulable && prime.generator().map(|g| g.orientable()).ok() != Some(r.orientable) {
                return fail("orientability disagrees with the generator");
            }
        }
        Ok(())
    }
}

/// The built-in catalog, loaded and self-tested on first use.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let c = Catalog::parse(CATALOG_TABLE).expect("built-in catalog parses");
        c.self_test().expect("built-in catalog is consistent");
        c
    })
}

fn parse_prime_key(k: &str) -> Option<Prime> {
    Some(match k {
        "S3" => Prime::S3,
        "S1xS2" => Prime::S1xS2,
        "S1~S2" => Prime::S1TwistedS2,
        "T3" => Prime::T3,
        "RP2xS1" => Prime::RP2xS1,
        "RP3" => Prime::Lens(2, 1),
        "Poinc" => Prime::Poinc,
        "Q8" => Prime::Q8,
        _ => return None,
    })
}

/// A connected sum of catalog primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ManifoldExpr {
    pub summands: Vec<Prime>,
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" # "))
    }
}

const GRAMMAR: &str = "expected S3, S1xS2, S1~S2, T3, RP2xS1, RP3, L(p,q), Poinc or Q8";

/// Parses `term { "#" term }`; whitespace is ignored and errors carry the
/// byte offset into `text`.
pub fn parse_expr(text: &str) -> Result<ManifoldExpr> {
    let chars: Vec<(usize, u8)> = text
        .bytes()
        .enumerate()
        .filter(|(_, b)| !b.is_ascii_whitespace())
        .collect();
    let end = text.len();
    let pos_at = |i: usize| chars.get(i).map_or(end, |c| c.0);
    let mut i = 0;
    let mut summands = Vec::new();
    loop {
        let start = i;
        let rest: String = chars[i..].iter().map(|c| c.1 as char).collect();
        let mut matched = None;
        for key in ["S1xS2", "S1~S2", "RP2xS1", "RP3", "Poinc", "S3", "T3", "Q8"] {
            if rest.starts_with(key) {
                matched = Some(key);
                break;
            }
        }
        if let Some(key) = matched {
            summands.push(parse_prime_key(key).unwrap());
            i += key.len();
        } else if rest.starts_with("L(") {
            i += 2;
            let num = |i: &mut usize| -> Result<u64> {
                let s = *i;
                while *i < chars.len() && chars[*i].1.is_ascii_digit() {
                    *i += 1;
                }
                if s == *i {
                    return Err(Error::parse(pos_at(s), "expected integer"));
                }
                let digits: String = chars[s..*i].iter().map(|c| c.1 as char).collect();
                digits.parse().map_err(|_| Error::parse(pos_at(s), "integer too large"))
            };
            let p = num(&mut i)?;
            if chars.get(i).map(|c| c.1) != Some(b',') {
                return Err(Error::parse(pos_at(i), "expected `,`"));
            }
            i += 1;
            let q = num(&mut i)?;
            if chars.get(i).map(|c| c.1) != Some(b')') {
                return Err(Error::parse(pos_at(i), "expected `)`"));
            }
            i += 1;
            if p < 2 || p.gcd(&q) != 1 {
                return Err(Error::BadLensParams { p, q });
            }
            summands.push(Prime::Lens(p, q));
        } else {
            return Err(Error::parse(pos_at(start), GRAMMAR));
        }
        match chars.get(i) {
            None => break,
            Some(&(_, b'#')) => i += 1,
            Some(&(pos, _)) => return Err(Error::parse(pos, "expected `#` or end of input")),
        }
    }
    Ok(ManifoldExpr { summands })
}

/// Drops `S3` summands (unless nothing else is left), reduces lens
/// parameters `q` mod `p`, and sorts summands canonically.
pub fn normalize(e: &ManifoldExpr) -> ManifoldExpr {
    let mut s: Vec<Prime> = e
        .summands
        .iter()
        .filter(|p| **p != Prime::S3)
        .map(|p| match *p {
            Prime::Lens(p, q) => Prime::Lens(p, q % p),
            other => other,
        })
        .collect();
    if s.is_empty() {
        s.push(Prime::S3);
    }
    s.sort();
    ManifoldExpr { summands: s }
}

impl ManifoldExpr {
    pub fn parse_normalized(text: &str) -> Result<Self> {
        Ok(normalize(&parse_expr(text)?))
    }

    pub fn prime(p: Prime) -> Self {
        ManifoldExpr { summands: vec![p] }
    }

    pub fn is_prime(&self) -> bool {
        self.summands.len() == 1
    }

    pub fn triangulable(&self) -> bool {
        self.summands.iter().all(|p| p.record().triangulable)
    }
}

/// Aggregate facts of a normalized expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facts {
    pub pi1: Pi1Tag,
    pub orientable: bool,
    pub has_odd_torsion: bool,
    pub exceptional_shape: bool,
    pub triangulable: bool,
}

/// `π₁` of a connected sum is the free product of the summand groups.
pub fn facts(e: &ManifoldExpr) -> Facts {
    let records: Vec<PrimeRecord> = e.summands.iter().map(|p| p.record()).collect();
    let nontrivial: Vec<&PrimeRecord> = records.iter().filter(|r| r.pi1 != Pi1Tag::Trivial).collect();
    let pi1 = if nontrivial.is_empty() {
        Pi1Tag::Trivial
    } else if nontrivial.iter().all(|r| matches!(r.pi1, Pi1Tag::Free(_))) {
        Pi1Tag::Free(
            nontrivial
                .iter()
                .map(|r| if let Pi1Tag::Free(n) = r.pi1 { n } else { 0 })
                .sum(),
        )
    } else if nontrivial.len() == 1 {
        nontrivial[0].pi1
    } else {
        Pi1Tag::InfiniteNonFree
    };
    let orientable = records.iter().all(|r| r.orientable);
    let has_odd_torsion = records.iter().any(|r| r.has_odd_torsion);
    // P # Q with P non-orientable and Q a prime with odd torsion: the
    // non-orientable part can absorb every other summand, so it suffices
    // that some summand has odd torsion and some other summand is non-orientable
    let exceptional_shape = !orientable
        && records.iter().enumerate().any(|(i, q)| {
            q.has_odd_torsion && records.iter().enumerate().any(|(j, p)| j != i && !p.orientable)
        });
    Facts {
        pi1,
        orientable,
        has_odd_torsion,
        exceptional_shape,
        triangulable: records.iter().all(|r| r.triangulable),
    }
}

/// Iterated connected sum of the summands' generator complexes.
pub fn triangulate_expr(e: &ManifoldExpr) -> Result<DeltaComplex> {
    let mut parts = e.summands.iter();
    let first = parts.next().ok_or_else(|| Error::Invalid("empty expression".into()))?;
    let mut x = first.generator()?.build()?;
    for p in parts {
        x = connected_sum(&x, &p.generator()?.build()?)?;
    }
    Ok(x)
}

/// Orientable double cover of a non-orientable expression: each
/// non-orientable prime lifts to `S1xS2`, `k` non-orientable summands
/// contribute `k - 1` extra handles, and orientable summands appear twice.
pub fn double_cover(e: &ManifoldExpr) -> Option<ManifoldExpr> {
    let non_orientable: Vec<&Prime> = e.summands.iter().filter(|p| !p.record().orientable).collect();
    let k = non_orientable.len();
    if k == 0 {
        return None;
    }
    let mut summands = Vec::new();
    for p in &non_orientable {
        match p {
            Prime::S1TwistedS2 | Prime::RP2xS1 => summands.push(Prime::S1xS2),
            _ => unreachable!("catalog non-orientable primes cover S1xS2"),
        }
    }
    summands.extend(std::iter::repeat_n(Prime::S1xS2, k - 1));
    for p in e.summands.iter().filter(|p| p.record().orientable) {
        summands.push(*p);
        summands.push(*p);
    }
    Some(normalize(&ManifoldExpr { summands }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> ManifoldExpr {
        ManifoldExpr::parse_normalized(s).unwrap()
    }

    #[test]
    fn grammar() {
        assert_eq!(parse_expr("L(5,1) # T3").unwrap().summands.len(), 2);
        assert_eq!(n("S3 # S3").to_string(), "S3");
        assert_eq!(parse_expr("L(4,2)"), Err(Error::BadLensParams { p: 4, q: 2 }));
        assert_eq!(n(" RP3 ").to_string(), "L(2,1)");
        assert!(matches!(parse_expr("T3 # X"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_expr("T3 #"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("L(3;1)"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn normal_forms() {
        assert_eq!(n("S3 # L(3,1)").to_string(), "L(3,1)");
        assert_eq!(n("T3 # L(2,1)"), n("L(2,1) # T3"));
        assert_eq!(n("L(5,7)").to_string(), "L(5,2)");
        let e = n("Q8 # S1~S2 # T3");
        assert_eq!(normalize(&e), e);
        assert_eq!(n(&e.to_string()), e);
    }

    #[test]
    fn aggregate_facts() {
        let f = facts(&n("S1xS2 # S1~S2"));
        assert_eq!(f.pi1, Pi1Tag::Free(2));
        assert!(!f.orientable);
        let f = facts(&n("L(3,1)"));
        assert_eq!((f.pi1, f.orientable, f.has_odd_torsion), (Pi1Tag::Finite(3), true, true));
        let f = facts(&n("S1~S2 # L(3,1)"));
        assert_eq!(f.pi1, Pi1Tag::InfiniteNonFree);
        assert!(f.exceptional_shape);
        assert!(!facts(&n("RP2xS1")).exceptional_shape);
        assert_eq!(facts(&n("S3")).pi1, Pi1Tag::Trivial);
    }

    #[test]
    fn catalog_is_consistent() {
        catalog().self_test().unwrap();
        assert!(Catalog::parse("S3 Trivial yes").is_err());
        let bad = CATALOG_TABLE.replace("S1xS2    Free(1)          yes    no", "S1xS2    Free(1)          yes    yes");
        assert!(Catalog::parse(&bad).unwrap().self_test().is_err());
    }

    #[test]
    fn double_covers() {
        assert_eq!(double_cover(&n("S1~S2")), Some(n("S1xS2")));
        assert_eq!(double_cover(&n("S1~S2 # L(3,1)")), Some(n("S1xS2 # L(3,1) # L(3,1)")));
        assert_eq!(double_cover(&n("RP2xS1 # S1~S2")), Some(n("S1xS2 # S1xS2 # S1xS2")));
        assert_eq!(double_cover(&n("T3")), None);
    }

    #[test]
    fn triangulation_errors() {
        assert_eq!(triangulate_expr(&n("Poinc")), Err(Error::NoTriangulation("Poinc".into())));
        assert_eq!(triangulate_expr(&n("RP3")).unwrap().counts(), vec![2, 4, 4, 2]);
    }
}
