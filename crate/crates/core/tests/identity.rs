use malcev_core::classify::classify;
use malcev_core::constructor::{atilde, zoo};
use malcev_core::identity::{
    builtin_catalog, builtin_maps, check_identity, check_identity_with, check_skew_symmetric, evaluate, lookup,
    parse_identity, random_substitution_check, CheckOptions,
};
use malcev_core::{Element, Error, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SAGLE: [&str; 4] = [
    "malcev_linearized",
    "malcev_u_expansion",
    "malcev_wx_expansion",
    "malcev_product_jacobian",
];

#[test]
fn dsl_examples() {
    let id = parse_identity("first_type_4 : x,y,u,v | J(x,y,u*v) = 0").unwrap();
    assert_eq!(id.variables(), &["x", "y", "u", "v"]);
    assert!(id.is_multilinear());
    let m = parse_identity("malcev : x,y,z | J(x,y,x*z) = J(x,y,z)*x").unwrap();
    assert_eq!(m.degree_of("x"), Some(2));
    assert!(matches!(parse_identity("bad : x | x*x = x"), Err(Error::InconsistentMultidegree(_))));
    assert!(builtin_catalog().len() >= 13);
}

#[test]
fn catalog_round_trips() {
    for id in builtin_catalog() {
        assert_eq!(parse_identity(&id.to_string()).unwrap(), id);
    }
}

#[test]
fn sagle_identities_on_malcev_members() {
    for e in zoo::zoo() {
        if !check_identity(&e.algebra, &lookup("malcev").unwrap()).holds() {
            continue;
        }
        for name in SAGLE {
            let r = check_identity(&e.algebra, &lookup(name).unwrap());
            assert!(r.holds(), "{name} on {}", e.name);
        }
    }
}

#[test]
fn product_jacobian_sign() {
    let plus = parse_identity("plus : w,x,y,z | J(w*x,y,z) = w*J(x,y,z) + J(w,y,z)*x + 2 J(y*z,w,x)").unwrap();
    let m = zoo::malcev7();
    let r = check_identity(&m, &plus);
    let c = r.counterexample.expect("the + sign fails on the simple algebra");
    assert_eq!(c.describe(&m), "(w=e1, x=e2, y=e1, z=e3) -> 12*e5");
    assert!(check_identity(&m, &lookup("malcev_product_jacobian").unwrap()).holds());
    assert!(!check_identity(&atilde().algebra, &plus).holds());
}

#[test]
fn sagle_identities_fail_on_free_algebra_with_degree_four() {
    let f = malcev_core::constructor::free_anticommutative(3, 5).unwrap();
    for name in SAGLE {
        assert!(!check_identity(&f.algebra, &lookup(name).unwrap()).holds(), "{name}");
    }
    // With only degree <= 2 words the Jacobian vanishes and every one holds.
    let small = malcev_core::constructor::free_anticommutative(3, 3).unwrap();
    assert!(check_identity(&small.algebra, &lookup("jacobi").unwrap()).holds());
}

#[test]
fn hierarchy_on_the_zoo() {
    for e in zoo::zoo() {
        let a = &e.algebra;
        let h = |n: &str| check_identity(a, &lookup(n).unwrap()).holds();
        let defining = h("first_type_cyclic") && h("first_type_derivation");
        let malcev = h("malcev");
        if defining {
            assert!(malcev && h("second_type_left") && h("second_type_right"), "{}", e.name);
        }
        assert_eq!(defining, malcev && h("jacobian_product_zero"), "{}", e.name);
        assert_eq!(defining, malcev && h("jacobian_annihilator"), "{}", e.name);
        let v = classify(a);
        assert!(v.is_consistent());
    }
}

#[test]
fn skew_lemma() {
    for e in zoo::zoo() {
        let a = &e.algebra;
        let eq3 = ["second_type_left", "second_type_right"]
            .iter()
            .all(|n| check_identity(a, &lookup(n).unwrap()).holds());
        if !eq3 {
            continue;
        }
        for m in builtin_maps() {
            let r = if m.arity() == 5 && a.dim() > 15 {
                malcev_core::identity::check_skew_symmetric_with(a, &m, &CheckOptions::parallel())
            } else {
                check_skew_symmetric(a, &m)
            };
            assert!(r.holds(), "{} on {}", m.name(), e.name);
        }
    }
}

#[test]
fn exhaustive_and_random_verdicts_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for e in zoo::zoo() {
        for id in builtin_catalog() {
            let exhaustive = check_identity(&e.algebra, &id).holds();
            let sampled = random_substitution_check(&e.algebra, &id, 100, &mut rng);
            if exhaustive {
                assert_eq!(sampled, None, "{} on {}", id.name(), e.name);
            } else {
                assert!(sampled.is_some(), "{} on {}", id.name(), e.name);
            }
        }
    }
}

#[test]
fn parallel_matches_sequential_on_atilde() {
    let a = atilde().algebra;
    for name in ["jacobian_annihilator", "first_type_cyclic", "malcev"] {
        let id = lookup(name).unwrap();
        assert_eq!(
            check_identity_with(&a, &id, &CheckOptions::with_jobs(1)),
            check_identity_with(&a, &id, &CheckOptions::with_jobs(4)),
            "{name}"
        );
    }
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn element(dim: usize) -> impl Strategy<Value = Element> {
    proptest::collection::vec(rational(), dim).prop_map(Element::from_coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn second_type_identities_hold_at_random_points(
        w in element(23), x in element(23), y in element(23), z in element(23)
    ) {
        let a = atilde().algebra;
        for name in ["malcev", "second_type_left", "second_type_right"] {
            let id = lookup(name).unwrap();
            let args: Vec<Element> = [&x, &y, &z].iter().map(|e| (*e).clone()).collect();
            prop_assert!(evaluate(&a, &id, &args).unwrap().is_zero(), "{}", name);
        }
        let wj = lookup("second_type_wj").unwrap();
        prop_assert!(evaluate(&a, &wj, &[w, x, y, z]).unwrap().is_zero());
    }
}
