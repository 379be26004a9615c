mod common;

use common::props::{self, Check};
use lscat::category::{check_certificate, ls_category, verify_ganea};
use lscat::complex::{circle, product, sphere, DeltaComplex};
use lscat::manifold::{facts, normalize, parse_expr, triangulate_expr, ManifoldExpr};
use lscat::pi1::Pi1Tag;
use lscat::ring::{cup_length, kunneth_tensor, ring_table, CohomologyRing};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn over_suite(f: impl Fn(&DeltaComplex, &mut ChaCha8Rng) -> Check) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x15ca7);
    let failures: Vec<String> = common::generators_and_sums()
        .iter()
        .filter_map(|(name, x)| f(x, &mut rng).err().map(|e| format!("{name}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn boundary_squared() {
    over_suite(|x, _| props::boundary_squared(x));
}

#[test]
fn coboundary_squared() {
    over_suite(|x, rng| props::coboundary_squared(x, props::TRIALS, rng));
}

#[test]
fn leibniz() {
    over_suite(|x, rng| props::leibniz(x, props::TRIALS, rng));
}

#[test]
fn duality_z2() {
    over_suite(|x, _| props::duality_z2(x));
}

#[test]
fn euler_characteristic() {
    over_suite(|x, _| props::euler_zero(x));
}

#[test]
fn universal_coefficients() {
    over_suite(|x, _| props::universal_coefficients(x));
}

#[test]
fn abelianization() {
    over_suite(|x, _| props::abelianization_is_h1(x));
}

fn check_ring_axioms(r: &CohomologyRing) {
    let m = r.modulus;
    let top = r.top_degree;
    for k in 0..=top {
        for i in 0..r.dim(k) {
            let e = r.basis_vector(k, i);
            assert_eq!(r.product(0, &r.unit(), k, &e), e);
            assert_eq!(r.product(k, &e, 0, &r.unit()), e);
        }
    }
    for p in 1..=top {
        for q in 1..=top - p {
            for i in 0..r.dim(p) {
                for j in 0..r.dim(q) {
                    let uv = r.basis_product(p, i, q, j);
                    let vu = r.basis_product(q, j, p, i);
                    let sign = |c: u64| if p * q % 2 == 1 { (m - c) % m } else { c };
                    assert_eq!(uv.to_vec(), vu.iter().map(|&c| sign(c)).collect::<Vec<_>>());
                    for s in 1..=top - p - q {
                        for l in 0..r.dim(s) {
                            let w = r.basis_vector(s, l);
                            let left = r.product(p + q, uv, s, &w);
                            let right = r.product(p, &r.basis_vector(p, i), q + s, &r.product(q, &r.basis_vector(q, j), s, &w));
                            assert_eq!(left, right);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn ring_tables_are_graded_commutative_and_associative() {
    for (name, x) in common::generators() {
        for p in [2, 3] {
            let r = ring_table(&x, p).unwrap();
            check_ring_axioms(&r);
            let (cl, w) = cup_length(&r);
            assert!(cl <= 3, "{name}");
            assert!(cl == 0 || w.recheck(&r), "{name}");
        }
    }
}

#[test]
fn triangulated_product_matches_tensor_ring() {
    let mut pairs: Vec<(String, DeltaComplex, DeltaComplex)> = common::generators()
        .into_iter()
        .map(|(n, x)| (format!("{n} x S1"), x, circle()))
        .collect();
    pairs.push(("S1 x S1".into(), circle(), circle()));
    pairs.push(("S2 x S1".into(), sphere(2), circle()));
    pairs.push(("S2 x S2".into(), sphere(2), sphere(2)));
    for (name, a, b) in pairs {
        let ab = product(&a, &b).unwrap();
        for p in [2, 3] {
            let direct = ring_table(&ab, p).unwrap();
            let tensor = kunneth_tensor(&ring_table(&a, p).unwrap(), &ring_table(&b, p).unwrap()).unwrap();
            assert_eq!(direct.dims(), tensor.dims(), "{name} mod {p}");
            assert_eq!(cup_length(&direct).0, cup_length(&tensor).0, "{name} mod {p}");
        }
    }
}

fn sample_exprs() -> Vec<ManifoldExpr> {
    let primes = ["S1xS2", "S1~S2", "T3", "RP2xS1", "RP3", "L(3,1)", "L(5,2)", "Poinc", "Q8"];
    let mut out: Vec<ManifoldExpr> = primes.iter().map(|p| ManifoldExpr::parse_normalized(p).unwrap()).collect();
    for i in 0..primes.len() {
        for j in i..primes.len() {
            out.push(ManifoldExpr::parse_normalized(&format!("{} # {}", primes[i], primes[j])).unwrap());
        }
    }
    out
}

#[test]
fn cup_length_sandwich() {
    for e in sample_exprs() {
        let r = ls_category(&e).unwrap();
        let rep = check_certificate(&r.certificate);
        assert!(rep.ok, "{e}: {:?}", rep.diagnostics);
        let cat = r.value().unwrap();
        assert!(cat <= 3, "{e}");
        if e.triangulable() {
            let x = triangulate_expr(&e).unwrap();
            for p in [2, 3, 5] {
                let cl = cup_length(&ring_table(&x, p).unwrap()).0;
                assert!(cl <= cat, "{e}: cl mod {p} = {cl} > cat = {cat}");
            }
        }
    }
}

#[test]
fn ganea_adds_one() {
    for e in sample_exprs() {
        let cat = ls_category(&e).unwrap().value().unwrap();
        for n in 1..=3 {
            let r = verify_ganea(&e, n).unwrap();
            assert_eq!(r.value(), Some(cat + 1), "{e} x S^{n}");
            let rep = check_certificate(&r.certificate);
            assert!(rep.ok, "{e} x S^{n}: {:?}\n{}", rep.diagnostics, r.certificate);
        }
    }
}

#[test]
fn catalog_group_abelianizes_to_h1() {
    for e in sample_exprs().into_iter().filter(|e| e.triangulable()) {
        let h1 = common::oracle_homology(&triangulate_expr(&e).unwrap()).swap_remove(1);
        match facts(&e).pi1 {
            Pi1Tag::Trivial => assert_eq!(h1, (0, vec![]), "{e}"),
            Pi1Tag::Free(n) => assert_eq!(h1, (n, vec![]), "{e}"),
            Pi1Tag::Finite(d) => assert_eq!(h1, (0, vec![d]), "{e}"),
            _ => {}
        }
    }
}

fn term() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("S3".to_string()),
        Just("S1xS2".to_string()),
        Just("S1~S2".to_string()),
        Just("T3".to_string()),
        Just("RP2xS1".to_string()),
        Just("RP3".to_string()),
        Just("Poinc".to_string()),
        Just("Q8".to_string()),
        (2u64..12, 1u64..40).prop_filter_map("coprime", |(p, q)| {
            (num_integer::gcd(p, q) == 1).then(|| format!("L({p},{q})"))
        }),
    ]
}

proptest! {
    #[test]
    fn normalize_is_idempotent(terms in prop::collection::vec(term(), 1..6)) {
        let e = parse_expr(&terms.join(" # ")).unwrap();
        let n = normalize(&e);
        prop_assert_eq!(normalize(&n), n.clone());
        let printed = n.to_string();
        prop_assert_eq!(ManifoldExpr::parse_normalized(&printed).unwrap(), n.clone());
        prop_assert_eq!(parse_expr(&printed).unwrap(), n);
    }
}
