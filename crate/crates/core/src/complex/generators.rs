//! Triangulations of the catalog primes and a few small helper complexes.

use std::collections::HashMap;

use num_integer::Integer;

use super::glue::{disjoint_union, quotient};
use super::product::{product, product_chains, ProductCell};
use super::DeltaComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    S3,
    S1xS2,
    S1TwistedS2,
    T3,
    RP2xS1,
    Lens { p: u64, q: u64 },
}

impl Generator {
    pub fn from_name(name: &str, params: &[u64]) -> Result<Self> {
        let g = match name {
            "S3" => Generator::S3,
            "S1xS2" => Generator::S1xS2,
            "S1~S2" => Generator::S1TwistedS2,
            "T3" => Generator::T3,
            "RP2xS1" => Generator::RP2xS1,
            "RP3" => Generator::Lens { p: 2, q: 1 },
            "L" => match params {
                [p, q] => Generator::Lens { p: *p, q: *q },
                _ => return Err(Error::Invalid("L expects two parameters p q".into())),
            },
            "Poinc" | "Q8" => return Err(Error::NoTriangulation(name.to_string())),
            _ => return Err(Error::UnknownGenerator(name.to_string())),
        };
        if let Generator::Lens { p, q } = g {
            check_lens(p, q)?;
        }
        Ok(g)
    }

    pub fn build(&self) -> Result<DeltaComplex> {
        match *self {
            Generator::S3 => Ok(sphere(3)),
            Generator::S1xS2 => product(&sphere(2), &circle()),
            Generator::S1TwistedS2 => twisted_sphere_bundle(),
            Generator::T3 => product(&product(&circle(), &circle())?, &circle()),
            Generator::RP2xS1 => product(&projective_plane(), &circle()),
            Generator::Lens { p, q } => lens_space(p, q),
        }
    }

    pub fn orientable(&self) -> bool {
        !matches!(self, Generator::S1TwistedS2 | Generator::RP2xS1)
    }
}

/// Builds a named generator (`S3`, `S1xS2`, `S1~S2`, `T3`, `RP2xS1`, `RP3`, `L p q`).
pub fn generator(name: &str, params: &[u64]) -> Result<DeltaComplex> {
    Generator::from_name(name, params)?.build()
}

pub(crate) fn check_lens(p: u64, q: u64) -> Result<()> {
    if p < 2 || p.gcd(&q) != 1 {
        return Err(Error::BadLensParams { p, q });
    }
    Ok(())
}

/// Boundary of the standard `(n+1)`-simplex.
pub fn sphere(n: usize) -> DeltaComplex {
    let facets: Vec<Vec<usize>> = (0..n + 2)
        .map(|skip| (0..n + 2).filter(|&v| v != skip).collect())
        .collect();
    DeltaComplex::from_simplicial(&facets).expect("sphere facets are well-formed")
}

/// One vertex, one edge.
pub fn circle() -> DeltaComplex {
    DeltaComplex::new_unchecked(vec![vec![vec![]], vec![vec![0, 0]]])
}

/// Two vertices joined by an edge from vertex 0 to vertex 1.
pub fn interval() -> DeltaComplex {
    DeltaComplex::new_unchecked(vec![vec![vec![], vec![]], vec![vec![1, 0]]])
}

/// A single closed `n`-simplex with all its faces.
pub fn simplex(n: usize) -> DeltaComplex {
    DeltaComplex::from_simplicial(&[(0..=n).collect()]).expect("simplex is well-formed")
}

/// Six-vertex real projective plane.
pub fn projective_plane() -> DeltaComplex {
    let facets = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ];
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    DeltaComplex::from_simplicial(&facets).expect("RP2 facets are well-formed")
}

/// Mapping torus of the reflection of the octahedral 2-sphere that swaps the
/// two vertices on the first axis. Vertices are ordered axis by axis, so the
/// reflection preserves the vertex order inside every triangle.
fn twisted_sphere_bundle() -> Result<DeltaComplex> {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    let (oct, index) = DeltaComplex::from_simplicial_indexed(&facets)?;
    let swap = |v: usize| match v {
        0 => 1,
        1 => 0,
        v => v,
    };
    let reflect: Vec<usize> = (0..oct.count(2))
        .map(|t| {
            let mut vs: Vec<usize> = oct.vertices(2, t).into_iter().map(swap).collect();
            vs.sort_unstable();
            index[2][&vs]
        })
        .collect();
    mapping_torus(&oct, &reflect)
}

/// `K × [0,1]` with `K × {1}` glued to `K × {0}` by a vertex-order-preserving
/// automorphism given on top simplices.
pub(crate) fn mapping_torus(k: &DeltaComplex, top_map: &[usize]) -> Result<DeltaComplex> {
    let i = interval();
    let cyl = product(k, &i)?;
    let cells = product_chains(k, &i);
    let n = k.dim();
    let lookup: HashMap<&ProductCell, usize> =
        cells[n].iter().enumerate().map(|(idx, c)| (c, idx)).collect();
    let level = |sigma: usize, end: usize| ProductCell {
        p: n,
        q: 0,
        sigma,
        tau: end,
        chain: (0..=n).map(|t| (t, 0)).collect(),
    };
    let pairs: Vec<(usize, usize, usize)> = (0..k.count(n))
        .map(|s| (n, lookup[&level(s, 1)], lookup[&level(top_map[s], 0)]))
        .collect();
    quotient(&cyl, &pairs, &[])
}

/// Lens space `L(p,q)`: `p` tetrahedra `[N, S, v_i, v_{i+1}]` around the axis
/// of a bipyramid, upper faces glued to lower faces with a `q`-step rotation.
pub fn lens_space(p: u64, q: u64) -> Result<DeltaComplex> {
    check_lens(p, q)?;
    let n = p as usize;
    let q = (q % p) as usize;
    let tet = simplex(3);
    let copies: Vec<&DeltaComplex> = std::iter::repeat_n(&tet, n).collect();
    let (union, off) = disjoint_union(&copies);
    let tri = |t: usize, j: usize| off[t][2] + tet.face(3, 0, j);
    let mut pairs = Vec::with_capacity(2 * n);
    for t in 0..n {
        // side face [N,S,v_{t+1}] shared with the next tetrahedron
        pairs.push((2, tri(t, 2), tri((t + 1) % n, 3)));
        // upper face [N,v_t,v_{t+1}] to lower face [S,v_{t+q},v_{t+q+1}]
        pairs.push((2, tri(t, 1), tri((t + q) % n, 0)));
    }
    quotient(&union, &pairs, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lens_params_checked() {
        assert_eq!(lens_space(4, 2), Err(Error::BadLensParams { p: 4, q: 2 }));
        assert_eq!(lens_space(1, 1), Err(Error::BadLensParams { p: 1, q: 1 }));
        assert!(matches!(generator("Poinc", &[]), Err(Error::NoTriangulation(_))));
        assert!(matches!(generator("K3", &[]), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn sizes() {
        assert_eq!(sphere(3).counts(), vec![5, 10, 10, 5]);
        assert_eq!(generator("T3", &[]).unwrap().count(3), 6);
        assert_eq!(generator("L", &[5, 2]).unwrap().count(3), 5);
        assert_eq!(generator("S1xS2", &[]).unwrap().count(3), 12);
    }

    #[test]
    fn every_generator_is_closed_with_zero_euler_characteristic() {
        for (name, params) in [
            ("S3", vec![]),
            ("S1xS2", vec![]),
            ("S1~S2", vec![]),
            ("T3", vec![]),
            ("RP2xS1", vec![]),
            ("L", vec![2, 1]),
            ("L", vec![7, 3]),
        ] {
            let x = generator(name, &params).unwrap();
            let r = x.validate().unwrap();
            assert!(r.is_closed_pseudo_manifold, "{name}");
            assert!(r.connected, "{name}");
            assert_eq!(r.euler_characteristic, 0, "{name}");
            let g = Generator::from_name(name, &params).unwrap();
            assert_eq!(r.orientable, g.orientable(), "{name}");
            assert_eq!(x.orientation().is_some(), g.orientable(), "{name}");
        }
    }
}
