//! Fundamental-group presentations of Δ-complexes and their classification.
//!
//! Words are sequences of signed generator numbers: `g + 1` for generator
//! `g` and `-(g + 1)` for its inverse.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::algebra::{homology, Coefficients, DegreeGroup};
use crate::complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::ring::{cup_product, ring_with_bases};

pub type Word = Vec<i32>;

pub const DEFAULT_MAX_COSETS: usize = 100_000;
pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pi1Tag {
    Trivial,
    Free(usize),
    Finite(u64),
    InfiniteNonFree,
    Unknown,
}

impl fmt::Display for Pi1Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1Tag::Trivial => write!(f, "Trivial"),
            Pi1Tag::Free(r) => write!(f, "Free({r})"),
            Pi1Tag::Finite(d) => write!(f, "Finite({d})"),
            Pi1Tag::InfiniteNonFree => write!(f, "InfiniteNonFree"),
            Pi1Tag::Unknown => write!(f, "Unknown"),
        }
    }
}

impl std::str::FromStr for Pi1Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arg = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        let bad = || Error::Invalid(format!("bad fundamental group tag `{s}`"));
        Ok(match s {
            "Trivial" => Pi1Tag::Trivial,
            "InfiniteNonFree" => Pi1Tag::InfiniteNonFree,
            "Unknown" => Pi1Tag::Unknown,
            _ => {
                if let Some(r) = arg("Free(") {
                    Pi1Tag::Free(r.parse().map_err(|_| bad())?)
                } else if let Some(d) = arg("Finite(") {
                    Pi1Tag::Finite(d.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Class {
    pub tag: Pi1Tag,
    pub evidence: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetEnumeration {
    Finite(u64),
    Exceeded,
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

/// Least rotation of `w` or of its inverse, used to spot duplicate relators.
fn canonical(w: &[i32]) -> Word {
    let mut best: Option<Word> = None;
    for v in [w.to_vec(), inverse(w)] {
        for r in 0..v.len().max(1) {
            let mut rot = v[r..].to_vec();
            rot.extend_from_slice(&v[..r]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(&x) = r.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize > generators) {
                return Err(Error::Invalid(format!("letter {x} out of range for {generators} generators")));
            }
        }
        Ok(GroupPresentation {
            generators,
            relators: relators.iter().map(|r| free_reduce(r)).filter(|r| !r.is_empty()).collect(),
        })
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    /// Rank and torsion of the abelianization, from the exponent-sum matrix.
    pub fn abelianization(&self) -> DegreeGroup {
        let rows: Vec<Vec<(usize, i64)>> = self
            .relators
            .iter()
            .map(|r| {
                let mut sums = vec![0i64; self.generators];
                for &x in r {
                    sums[x.unsigned_abs() as usize - 1] += x.signum() as i64;
                }
                sums.into_iter().enumerate().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        let (rank, factors) = crate::algebra::homology_invariant_factors(rows, self.generators);
        DegreeGroup {
            rank: self.generators - rank,
            torsion: factors,
        }
    }

    /// Parses `<n; word, word, ...>`; lowercase letters are generators,
    /// uppercase their inverses, and `x12`/`X12` address generators by number.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip(&mut pos);
        if bytes.get(pos) != Some(&b'<') {
            return Err(Error::parse(pos, "expected `<`"));
        }
        pos += 1;
        skip(&mut pos);
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let n: usize = text[start..pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected generator count"))?;
        skip(&mut pos);
        if bytes.get(pos) != Some(&b';') {
            return Err(Error::parse(pos, "expected `;`"));
        }
        pos += 1;
        let mut relators = Vec::new();
        let mut word: Word = Vec::new();
        let mut seen_letter = false;
        loop {
            skip(&mut pos);
            let Some(&c) = bytes.get(pos) else {
                return Err(Error::parse(pos, "missing `>`"));
            };
            match c {
                b'>' | b',' => {
                    if seen_letter {
                        relators.push(std::mem::take(&mut word));
                    } else if c == b',' {
                        return Err(Error::parse(pos, "empty relator"));
                    }
                    seen_letter = false;
                    pos += 1;
                    if c == b'>' {
                        break;
                    }
                }
                b'x' | b'X' if bytes.get(pos + 1).is_some_and(|b| b.is_ascii_digit()) => {
                    let s = pos + 1;
                    let mut e = s;
                    while e < bytes.len() && bytes[e].is_ascii_digit() {
                        e += 1;
                    }
                    let g: usize = text[s..e].parse().map_err(|_| Error::parse(s, "bad generator number"))?;
                    if g >= n {
                        return Err(Error::parse(pos, format!("generator x{g} out of range")));
                    }
                    let letter = g as i32 + 1;
                    word.push(if c == b'X' { -letter } else { letter });
                    seen_letter = true;
                    pos = e;
                }
                c if c.is_ascii_alphabetic() => {
                    let g = (c.to_ascii_lowercase() - b'a') as usize;
                    if g >= n {
                        return Err(Error::parse(pos, format!("generator `{}` out of range", c as char)));
                    }
                    let letter = g as i32 + 1;
                    word.push(if c.is_ascii_uppercase() { -letter } else { letter });
                    seen_letter = true;
                    pos += 1;
                }
                _ => return Err(Error::parse(pos, format!("unexpected `{}`", c as char))),
            }
        }
        skip(&mut pos);
        if pos != bytes.len() {
            return Err(Error::parse(pos, "trailing input"));
        }
        GroupPresentation::new(n, relators)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.generators <= 26;
        let words: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        let g = x.unsigned_abs() - 1;
                        match (letters, x > 0) {
                            (true, true) => ((b'a' + g as u8) as char).to_string(),
                            (true, false) => ((b'A' + g as u8) as char).to_string(),
                            (false, true) => format!("x{g}"),
                            (false, false) => format!("X{g}"),
                        }
                    })
                    .collect()
            })
            .collect();
        if words.is_empty() {
            write!(f, "<{}; >", self.generators)
        } else {
            write!(f, "<{}; {}>", self.generators, words.join(", "))
        }
    }
}

/// Vertex labels reachable from vertex 0 along edges, as a BFS spanning tree:
/// returns `tree[e]` for every edge.
fn spanning_tree(x: &DeltaComplex) -> Result<Vec<bool>> {
    let nv = x.count(0);
    let ne = if x.dim() >= 1 { x.count(1) } else { 0 };
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for e in 0..ne {
        let (to, from) = (x.face(1, e, 0), x.face(1, e, 1));
        adj[from].push((to, e));
        adj[to].push((from, e));
    }
    let mut seen = vec![false; nv];
    let mut tree = vec![false; ne];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::NotConnected);
    }
    Ok(tree)
}

fn presentation_from_triangles(x: &DeltaComplex, tree: &[bool], triangles: impl Iterator<Item = usize>) -> GroupPresentation {
    let mut gen_of = vec![0i32; tree.len()];
    let mut n = 0;
    for (e, &t) in tree.iter().enumerate() {
        if !t {
            n += 1;
            gen_of[e] = n as i32;
        }
    }
    let relators = triangles
        .map(|t| {
            let f = x.faces(2, t);
            // boundary loop v0 -> v1 -> v2 -> v0
            free_reduce(&[gen_of[f[2]], gen_of[f[0]], -gen_of[f[1]]].into_iter().filter(|&g| g != 0).collect::<Vec<_>>())
        })
        .filter(|r| !r.is_empty())
        .collect();
    GroupPresentation { generators: n, relators }
}

/// Edge-path group of the 2-skeleton: generators are the edges outside a BFS
/// spanning tree, one relator per triangle.
pub fn edge_path_presentation(x: &DeltaComplex) -> Result<GroupPresentation> {
    let tree = spanning_tree(x)?;
    let nt = if x.dim() >= 2 { x.count(2) } else { 0 };
    Ok(presentation_from_triangles(x, &tree, 0..nt))
}

/// For closed 3-dimensional pseudo-manifolds, drops the relators of the
/// triangles in a spanning tree of the dual graph: the tetrahedra glued along
/// those triangles form a ball, and removing a point from it collapses the
/// complex onto the remaining 2-cells. Other complexes fall back to the
/// edge-path presentation.
pub fn spine_presentation(x: &DeltaComplex) -> Result<GroupPresentation> {
    if x.dim() != 3 || !x.is_closed_pseudo_manifold() {
        return edge_path_presentation(x);
    }
    let tree = spanning_tree(x)?;
    let nt = x.count(3);
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); x.count(2)];
    for t in 0..nt {
        for &f in x.faces(3, t) {
            inc[f].push(t);
        }
    }
    let mut seen = vec![false; nt];
    let mut dropped = vec![false; x.count(2)];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(t) = queue.pop_front() {
        for &f in x.faces(3, t) {
            let other = if inc[f][0] == t { inc[f][1] } else { inc[f][0] };
            if !seen[other] {
                seen[other] = true;
                dropped[f] = true;
                queue.push_back(other);
            }
        }
    }
    Ok(presentation_from_triangles(x, &tree, (0..x.count(2)).filter(|&f| !dropped[f])))
}

fn drop_generator(p: &mut GroupPresentation, g: usize) {
    let letter = g as i32 + 1;
    for r in p.relators.iter_mut() {
        for x in r.iter_mut() {
            if x.abs() > letter {
                *x -= x.signum();
            }
        }
    }
    p.generators -= 1;
}

fn tidy(p: &mut GroupPresentation) -> bool {
    let before = p.relators.clone();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in &p.relators {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(canonical(&r)) {
            out.push(r);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    p.relators = out;
    p.relators != before
}

/// Eliminates a generator occurring exactly once in some relator, when doing
/// so does not increase the total length.
fn eliminate_once(p: &mut GroupPresentation) -> bool {
    let mut best: Option<(i64, usize, usize)> = None;
    for (ri, r) in p.relators.iter().enumerate() {
        for g in 1..=p.generators as i32 {
            let occ = r.iter().filter(|x| x.abs() == g).count();
            if occ != 1 {
                continue;
            }
            let elsewhere: usize = p
                .relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != ri)
                .map(|(_, s)| s.iter().filter(|x| x.abs() == g).count())
                .sum();
            let len = r.len() as i64;
            let delta = elsewhere as i64 * (len - 2) - len;
            if delta <= 0 && best.is_none_or(|(d, _, _)| delta < d) {
                best = Some((delta, ri, g as usize));
            }
        }
    }
    let Some((_, ri, g)) = best else { return false };
    let r = p.relators.remove(ri);
    let letter = g as i32;
    let k = r.iter().position(|x| x.abs() == letter).unwrap();
    // r = u g^e v = 1  =>  g^e = u^{-1} v^{-1} = (v u)^{-1}
    let mut vu = r[k + 1..].to_vec();
    vu.extend_from_slice(&r[..k]);
    let value_pos = if r[k] > 0 { inverse(&vu) } else { vu.clone() };
    let value_neg = inverse(&value_pos);
    for s in p.relators.iter_mut() {
        let mut out = Vec::with_capacity(s.len());
        for &x in s.iter() {
            if x == letter {
                out.extend_from_slice(&value_pos);
            } else if x == -letter {
                out.extend_from_slice(&value_neg);
            } else {
                out.push(x);
            }
        }
        *s = free_reduce(&out);
    }
    drop_generator(p, g - 1);
    true
}

/// Replaces a long piece of one relator found inside another by the inverse
/// of the complementary piece, strictly shortening the target.
fn substring_reduce(p: &mut GroupPresentation) -> bool {
    let n = p.relators.len();
    for a in 0..n {
        let rule = p.relators[a].clone();
        let l = rule.len();
        for b in 0..n {
            if a == b || p.relators[b].len() < l / 2 + 1 {
                continue;
            }
            let target = p.relators[b].clone();
            let tl = target.len();
            for v in [rule.clone(), inverse(&rule)] {
                for rot in 0..l {
                    let mut w = v[rot..].to_vec();
                    w.extend_from_slice(&v[..rot]);
                    for k in (l / 2 + 1..=l).rev() {
                        if k > tl {
                            continue;
                        }
                        let piece = &w[..k];
                        for start in 0..tl {
                            if (0..k).all(|t| target[(start + t) % tl] == piece[t]) {
                                // rotate target so the match is at the front, then substitute
                                let mut rotated: Word = (0..tl).map(|t| target[(start + t) % tl]).collect();
                                let rest = rotated.split_off(k);
                                let mut out = inverse(&w[k..]);
                                out.extend(rest);
                                p.relators[b] = cyclic_reduce(&out);
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Simplifies by Tietze moves that never increase total relator length:
/// free and cyclic reduction, duplicate removal, elimination of generators
/// occurring once in a relator, and substring reduction. Each successful
/// move spends one unit of `budget`.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let mut q = p.clone();
    tidy(&mut q);
    let mut left = budget;
    while left > 0 {
        let moved = eliminate_once(&mut q) || substring_reduce(&mut q);
        tidy(&mut q);
        if !moved {
            break;
        }
        left -= 1;
    }
    q
}

/// HLT coset enumeration of the trivial subgroup with coincidence handling.
pub fn todd_coxeter(p: &GroupPresentation, max_cosets: usize) -> CosetEnumeration {
    if p.generators == 0 {
        return CosetEnumeration::Finite(1);
    }
    CosetTable::new(p, max_cosets).run()
}

const NONE: usize = usize::MAX;

struct CosetTable {
    ncols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    relators: Vec<Vec<usize>>,
    max: usize,
    queue: Vec<usize>,
}

impl CosetTable {
    fn new(p: &GroupPresentation, max: usize) -> Self {
        let col = |x: i32| {
            let g = x.unsigned_abs() as usize - 1;
            if x > 0 {
                2 * g
            } else {
                2 * g + 1
            }
        };
        CosetTable {
            ncols: 2 * p.generators,
            table: vec![vec![NONE; 2 * p.generators]],
            parent: vec![0],
            relators: p.relators.iter().map(|r| r.iter().map(|&x| col(x)).collect()).collect(),
            max,
            queue: Vec::new(),
        }
    }

    fn inv(c: usize) -> usize {
        c ^ 1
    }

    fn define(&mut self, c: usize, x: usize) -> bool {
        if self.table.len() >= self.max {
            return false;
        }
        let d = self.table.len();
        self.table.push(vec![NONE; self.ncols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][Self::inv(x)] = c;
        true
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.table[g][x];
                if d == NONE {
                    continue;
                }
                let xi = Self::inv(x);
                if self.table[d][xi] == g {
                    self.table[d][xi] = NONE;
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][x] != NONE {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][xi] != NONE {
                    let t = self.table[nu][xi];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][xi] = mu;
                }
            }
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    /// Returns false when the coset limit is hit.
    fn scan_and_fill(&mut self, c: usize, r: usize) -> bool {
        let w = self.relators[r].clone();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i as isize && self.table[b][Self::inv(w[j as usize])] != NONE {
                b = self.table[b][Self::inv(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return true;
            }
            if j == i as isize {
                self.table[f][w[i]] = b;
                self.table[b][Self::inv(w[i])] = f;
                return true;
            }
            if !self.define(f, w[i]) {
                return false;
            }
        }
    }

    fn run(mut self) -> CosetEnumeration {
        let mut c = 0;
        while c < self.table.len() {
            if self.alive(c) {
                for r in 0..self.relators.len() {
                    if !self.scan_and_fill(c, r) {
                        return CosetEnumeration::Exceeded;
                    }
                    if !self.alive(c) {
                        break;
                    }
                }
                if self.alive(c) {
                    for x in 0..self.ncols {
                        if self.table[c][x] == NONE && !self.define(c, x) {
                            return CosetEnumeration::Exceeded;
                        }
                    }
                }
            }
            c += 1;
        }
        let live = (0..self.table.len()).filter(|&c| self.alive(c)).count();
        CosetEnumeration::Finite(live as u64)
    }
}

fn describe(a: &DegreeGroup) -> String {
    let mut parts = Vec::new();
    match a.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(a.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Sound classification: `Free` only when simplification removes every
/// relator, `Finite` only from a completed coset table, `InfiniteNonFree`
/// only with torsion and infinite abelianization; otherwise `Unknown`.
pub fn classify(p: &GroupPresentation) -> Pi1Class {
    classify_with(p, DEFAULT_TIETZE_BUDGET, DEFAULT_MAX_COSETS)
}

pub fn classify_with(p: &GroupPresentation, budget: usize, max_cosets: usize) -> Pi1Class {
    let q = tietze_simplify(p, budget);
    let mut evidence = vec![format!("simplified to {q}")];
    if q.relators.is_empty() {
        let tag = if q.generators == 0 { Pi1Tag::Trivial } else { Pi1Tag::Free(q.generators) };
        evidence.push("no relators remain".into());
        return Pi1Class { tag, evidence };
    }
    let ab = q.abelianization();
    evidence.push(format!("abelianization {}", describe(&ab)));
    if ab.rank >= 1 && !ab.torsion.is_empty() {
        evidence.push("torsion rules out free; infinite abelianization rules out finite".into());
        return Pi1Class {
            tag: Pi1Tag::InfiniteNonFree,
            evidence,
        };
    }
    if ab.rank == 0 {
        match todd_coxeter(&q, max_cosets) {
            CosetEnumeration::Finite(d) => {
                evidence.push(format!("coset table complete with {d} cosets"));
                let tag = if d == 1 { Pi1Tag::Trivial } else { Pi1Tag::Finite(d) };
                return Pi1Class { tag, evidence };
            }
            CosetEnumeration::Exceeded => {
                evidence.push(format!("coset enumeration exceeded {max_cosets} cosets"));
            }
        }
    }
    Pi1Class {
        tag: Pi1Tag::Unknown,
        evidence,
    }
}

/// Classifies `π₁` of a triangulated space. On top of [`classify`], a
/// non-zero product of two degree-one classes over `Z/2` shows the group is
/// not free (free groups have no degree-two cohomology), and with infinite
/// `H₁` gives `InfiniteNonFree`.
pub fn classify_space(x: &DeltaComplex) -> Result<Pi1Class> {
    let p = spine_presentation(x)?;
    let mut class = classify(&p);
    if class.tag != Pi1Tag::Unknown {
        return Ok(class);
    }
    let h = homology(x, Coefficients::Integers)?;
    if h.rank(1) == 0 || x.dim() < 2 {
        return Ok(class);
    }
    let (ring, bases) = ring_with_bases(x, 2)?;
    for i in 0..ring.dim(1) {
        for j in 0..ring.dim(1) {
            if ring.basis_product(1, i, 1, j).iter().any(|&c| c != 0) {
                let c = cup_product(x, 1, &bases[1].representatives[i], 1, &bases[1].representatives[j], 2)?;
                debug_assert!(bases[2].coordinates(&c).is_ok());
                class.evidence.push(format!(
                    "e1.{i} * e1.{j} != 0 in H^2(Z/2) rules out free; H_1 rank {} rules out finite",
                    h.rank(1)
                ));
                class.tag = Pi1Tag::InfiniteNonFree;
                return Ok(class);
            }
        }
    }
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> GroupPresentation {
        GroupPresentation::parse(s).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        let p = pres("<2; aBAb, aa>");
        assert_eq!(p.relators, vec![vec![1, -2, -1, 2], vec![1, 1]]);
        assert_eq!(p.to_string(), "<2; aBAb, aa>");
        assert_eq!(pres("<1;>").to_string(), "<1; >");
        assert!(matches!(GroupPresentation::parse("<1; b>"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn tietze_examples() {
        assert_eq!(tietze_simplify(&pres("<1; a>"), 100), pres("<0; >"));
        assert_eq!(tietze_simplify(&pres("<2; b>"), 100), pres("<1; >"));
    }

    #[test]
    fn coset_enumeration() {
        assert_eq!(todd_coxeter(&pres("<1; aaaaa>"), 1000), CosetEnumeration::Finite(5));
        assert_eq!(todd_coxeter(&pres("<1; a>"), 1000), CosetEnumeration::Finite(1));
        assert_eq!(todd_coxeter(&pres("<2; >"), 1000), CosetEnumeration::Exceeded);
        // S3 and the quaternion group
        assert_eq!(todd_coxeter(&pres("<2; aa, bbb, abab>"), 1000), CosetEnumeration::Finite(6));
        assert_eq!(todd_coxeter(&pres("<2; aaaa, aaBB, abaB>"), 1000), CosetEnumeration::Finite(8));
        // binary icosahedral group
        assert_eq!(todd_coxeter(&pres("<2; ababAAA, aaaBBBBB>"), 10_000), CosetEnumeration::Finite(120));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&pres("<2; >")).tag, Pi1Tag::Free(2));
        assert_eq!(classify(&pres("<1; aa>")).tag, Pi1Tag::Finite(2));
        assert_eq!(classify(&pres("<2; aBAb, aa>")).tag, Pi1Tag::InfiniteNonFree);
        assert_eq!(classify(&pres("<2; aBAb>")).tag, Pi1Tag::Unknown);
    }
}
