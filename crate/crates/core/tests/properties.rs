use std::collections::BTreeMap;

use proptest::prelude::*;
use shlab::algebra::{evaluate, library, product, Elem, FiniteAlgebra, Valuation};
use shlab::equations::{catalog, holds, Identity};
use shlab::formula::{imp_h, parse, Formula, Substitution};
use shlab::matrices::{consequence, MatrixFamily};

const VARS: [&str; 3] = ["x", "y", "z"];

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => (0..VARS.len()).prop_map(|i| Formula::Var(VARS[i].to_string())),
        1 => Just(Formula::Bot),
        1 => Just(Formula::Top),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Formula::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::Meet(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::Join(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::Imp(Box::new(a), Box::new(b))),
        ]
    })
}

fn core_algebra() -> impl Strategy<Value = FiniteAlgebra> {
    let names = library::core_names();
    (0..names.len()).prop_map(move |i| library::get(&names[i]).unwrap())
}

fn valuation(a: &FiniteAlgebra, seed: &[u16]) -> Valuation {
    VARS.iter()
        .zip(seed)
        .map(|(v, &s)| (v.to_string(), s % a.order() as Elem))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_round_trips(f in formula()) {
        prop_assert_eq!(parse(&f.render()).unwrap(), f.clone());
        prop_assert_eq!(parse(&f.render_sugared()).unwrap(), f);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        f in formula(),
        s in proptest::collection::vec(formula(), 3),
        a in core_algebra(),
        seed in proptest::collection::vec(any::<u16>(), 3),
    ) {
        let sub: Substitution = VARS.iter().map(|v| v.to_string()).zip(s).collect();
        let v = valuation(&a, &seed);
        let shifted: Valuation = sub.iter().map(|(k, g)| (k.clone(), evaluate(g, &a, &v).unwrap())).collect();
        let lhs = evaluate(&f.substitute(&sub).unwrap(), &a, &v).unwrap();
        prop_assert_eq!(lhs, evaluate(&f, &a, &shifted).unwrap());
    }

    #[test]
    fn evaluation_in_products_is_coordinatewise(
        f in formula(),
        a in core_algebra(),
        b in core_algebra(),
        s1 in proptest::collection::vec(any::<u16>(), 3),
        s2 in proptest::collection::vec(any::<u16>(), 3),
    ) {
        let p = product(&a, &b);
        let (v1, v2) = (valuation(&a, &s1), valuation(&b, &s2));
        let nb = b.order() as Elem;
        let vp: Valuation = VARS.iter().map(|k| (k.to_string(), v1[*k] * nb + v2[*k])).collect();
        let got = evaluate(&f, &p, &vp).unwrap();
        let want = evaluate(&f, &a, &v1).unwrap() * nb + evaluate(&f, &b, &v2).unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn heyting_arrow_detects_order(
        f in formula(),
        g in formula(),
        a in core_algebra(),
        seed in proptest::collection::vec(any::<u16>(), 3),
    ) {
        let v = valuation(&a, &seed);
        let (x, y) = (evaluate(&f, &a, &v).unwrap(), evaluate(&g, &a, &v).unwrap());
        let h = evaluate(&imp_h(f, g), &a, &v).unwrap();
        prop_assert_eq!(h == a.top, a.leq(x, y));
        prop_assert_eq!(h, a.i(x, a.m(x, y)));
    }

    #[test]
    fn identities_survive_substitution(
        k in 0..catalog().len(),
        s in proptest::collection::vec(formula(), 3),
        a in core_algebra(),
    ) {
        let id = &catalog()[k];
        if id.vars().len() <= 3 && holds(&a, id).unwrap().passed() {
            let mut sub: Substitution = BTreeMap::new();
            for (v, g) in id.vars().into_iter().zip(s) {
                sub.insert(v, g);
            }
            let inst = Identity::new(id.lhs.substitute(&sub).unwrap(), id.rhs.substitute(&sub).unwrap());
            prop_assert!(holds(&a, &inst).unwrap().passed(), "{} in {}", inst.render(), a.name);
        }
    }

    #[test]
    fn consequence_is_monotone(
        p in formula(),
        extra in formula(),
        f in formula(),
    ) {
        let fam = MatrixFamily::new("dm", ["L1dm", "L4dm", "2e"].iter().map(|n| library::get(n).unwrap()).collect());
        if consequence(&fam, std::slice::from_ref(&p), &f).unwrap().is_valid() {
            prop_assert!(consequence(&fam, &[p.clone(), extra], &f).unwrap().is_valid());
        }
        // every premise follows from itself
        prop_assert!(consequence(&fam, std::slice::from_ref(&p), &p).unwrap().is_valid());
    }
}
