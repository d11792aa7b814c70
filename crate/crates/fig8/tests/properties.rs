use fig8::components::classify;
use fig8::constructors::{slice_f, slice_g, w_point_from, xpr_point, xtr_point};
use fig8::coords::{mu3_act, sym_f, sym_h, CharCoords, Component};
use fig8::numtower::FieldElem;
use fig8::verify::{run_suite, Mode};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = FieldElem> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| FieldElem::rat(n, d))
}

/// a + b i + c ω + d iω with small rational coordinates.
fn cyc() -> impl Strategy<Value = FieldElem> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| {
        let (i, w) = (FieldElem::i(), FieldElem::omega());
        &(&(&a + &(&b * &i)) + &(&c * &w)) + &(&(&d * &i) * &w)
    })
}

fn coords() -> impl Strategy<Value = CharCoords> {
    proptest::array::uniform8(rat()).prop_map(CharCoords::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(ai) = a.inv() {
            prop_assert!((&a * &ai).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn dihedral_relations(c in coords()) {
        prop_assert_eq!(sym_f(&sym_f(&c)), c.clone());
        prop_assert_eq!(sym_h(&sym_h(&sym_h(&sym_h(&c)))), c.clone());
        let fh = |x: &CharCoords| sym_f(&sym_h(x));
        prop_assert_eq!(fh(&fh(&c)), c);
    }

    #[test]
    fn center_action_preserves_orbit_coords(c in coords()) {
        for k in 0..3 {
            prop_assert_eq!(mu3_act(k, &c).orbit(), c.orbit());
            prop_assert!(mu3_act(k, &c).same_orbit(&c));
        }
    }

    #[test]
    fn xtr_points_classify(y in rat(), yb in rat()) {
        prop_assert!(classify(&xtr_point(&y, &yb)).contains(Component::XTR));
    }

    #[test]
    fn xpr_points_classify(v in rat(), x1 in rat()) {
        let k = &(&x1.pow(2) + &x1) - &FieldElem::one();
        let d = &x1 - &FieldElem::one();
        prop_assume!(!k.is_zero() && !d.is_zero() && !v.is_zero());
        let w = &(&d * &v.pow(2)) / &k;
        let c = xpr_point(&v, &w, &x1).unwrap();
        prop_assert!(classify(&c).contains(Component::XPR));
    }

    #[test]
    fn slice_roundtrip(nu in rat(), nub in rat(), plus in any::<bool>()) {
        let q = w_point_from(&nu, &nub, plus).unwrap();
        if let Ok(p) = slice_g(&q) {
            prop_assert_eq!(slice_f(&p).unwrap(), q);
        }
    }

    #[test]
    fn reports_are_deterministic(seed in 0u64..1000) {
        let a = run_suite("symmetry-d4", Mode::Sampled, 3, seed).unwrap();
        let b = run_suite("symmetry-d4", Mode::Sampled, 3, seed).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert!(a.passed());
    }
}
