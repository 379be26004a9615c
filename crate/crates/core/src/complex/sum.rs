use super::generators::{interval, sphere};
use super::glue::{disjoint_union, quotient};
use super::product::{product, product_chains, ProductCell};
use super::DeltaComplex;
use crate::error::{Error, Result};

/// Connected sum of two closed connected 3-complexes.
///
/// One tetrahedron is removed from each summand and the two boundary
/// spheres are joined through a collar `∂Δ³ × [0,1]`, glued on both ends by
/// the vertex-order-preserving identification of the `j`-th boundary
/// triangle with the `j`-th face. The collar makes the result a genuine
/// connected sum even when the removed tetrahedra have identified vertices.
/// For orientable summands the tetrahedron removed from `B` is chosen so that
/// the orientations of `A` and `B` extend over the result.
pub fn connected_sum(a: &DeltaComplex, b: &DeltaComplex) -> Result<DeltaComplex> {
    for (name, x) in [("first", a), ("second", b)] {
        if x.dim() != 3 || !x.is_closed_pseudo_manifold() {
            return Err(Error::NotClosed(format!("{name} summand is not a closed 3-complex")));
        }
    }
    let oa = a.orientation();
    let ob = b.orientation();
    match (oa, ob) {
        (Some(oa), Some(ob)) => {
            let mut candidates = Vec::new();
            for want in [1i8, -1] {
                if let Some(t) = ob.iter().position(|&s| s == want) {
                    candidates.push(t);
                }
            }
            let mut first = None;
            for &tau in &candidates {
                let (x, a_map, b_map) = glue_sum(a, b, 0, tau)?;
                if let Some(r) = x.orientation() {
                    let sa: Vec<i8> = a_map
                        .iter()
                        .enumerate()
                        .filter_map(|(t, m)| m.map(|n| r[n] * oa[t]))
                        .collect();
                    let sb: Vec<i8> = b_map
                        .iter()
                        .enumerate()
                        .filter_map(|(t, m)| m.map(|n| r[n] * ob[t]))
                        .collect();
                    if sa.windows(2).all(|w| w[0] == w[1])
                        && sb.windows(2).all(|w| w[0] == w[1])
                        && sa.first() == sb.first()
                    {
                        return Ok(x);
                    }
                }
                first.get_or_insert(x);
            }
            first.ok_or_else(|| Error::NotClosed("summand has no tetrahedra".into()))
        }
        _ => Ok(glue_sum(a, b, 0, 0)?.0),
    }
}

type TopMap = Vec<Option<usize>>;

fn glue_sum(
    a: &DeltaComplex,
    b: &DeltaComplex,
    sigma: usize,
    tau: usize,
) -> Result<(DeltaComplex, TopMap, TopMap)> {
    let s2 = sphere(2);
    let i = interval();
    let shell = product(&s2, &i)?;
    let cells = product_chains(&s2, &i);
    let (union, off) = disjoint_union(&[a, &shell, b]);
    let level_triangle = |omit: usize, end: usize| -> usize {
        let want: Vec<usize> = (0..4).filter(|&v| v != omit).collect();
        let t = (0..s2.count(2))
            .find(|&t| s2.vertices(2, t) == want)
            .expect("boundary triangle exists");
        let cell = ProductCell {
            p: 2,
            q: 0,
            sigma: t,
            tau: end,
            chain: vec![(0, 0), (1, 0), (2, 0)],
        };
        cells[2].iter().position(|c| *c == cell).expect("level cell exists")
    };
    let mut pairs = Vec::with_capacity(8);
    for j in 0..4 {
        pairs.push((2, off[1][2] + level_triangle(j, 0), off[0][2] + a.face(3, sigma, j)));
        pairs.push((2, off[1][2] + level_triangle(j, 1), off[2][2] + b.face(3, tau, j)));
    }
    let removed = [off[0][3] + sigma, off[2][3] + tau];
    let x = quotient(&union, &pairs, &removed)?;
    // new index of kept top simplices: removed ones are skipped in order
    let map = |start: usize, n: usize| -> TopMap {
        (0..n)
            .map(|t| {
                let old = start + t;
                if removed.contains(&old) {
                    None
                } else {
                    Some(old - removed.iter().filter(|&&r| r < old).count())
                }
            })
            .collect()
    };
    let a_map = map(off[0][3], a.count(3));
    let b_map = map(off[2][3], b.count(3));
    Ok((x, a_map, b_map))
}
