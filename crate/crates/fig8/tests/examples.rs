//! Worked examples through the public API.

use fig8::components::{classify, classify_orbit};
use fig8::constructors::{closed_orbit, metabelian_points, v0_family, v1_family, v2_family, xpr_point, ConstructError};
use fig8::coords::{orbit_of_rep, sym_h, sym_orbit, CharCoords, Component, Sym};
use fig8::numtower::{parse_elem, FieldElem};
use fig8::verify::{list_suites, run_suite, Mode, Verdict};

fn e(n: i64) -> FieldElem {
    FieldElem::int(n)
}

#[test]
fn element_grammar_roundtrip() {
    for text in ["0", "-3/4", "i", "w", "1+2*i", "1/2-3/5*w"] {
        let x = parse_elem(text, None).unwrap();
        assert_eq!(parse_elem(&x.to_string(), None).unwrap(), x, "{text}");
    }
    assert!(parse_elem("s", None).is_err());
}

#[test]
fn h_symmetry_example() {
    let c = CharCoords::from_ints([3, 3, 3, 3, 1, 1, 2, 2]);
    assert_eq!(sym_h(&c).to_string(), "3,3,6,6,2,2,1,1");
}

#[test]
fn h_swaps_v1_and_v2_on_orbits() {
    let f = v1_family(&e(3), &FieldElem::rat(-1, 2), true).unwrap();
    assert!(classify_orbit(&f.orbit).unwrap().contains(Component::V1));
    let img = sym_orbit(Sym::H, &f.orbit).unwrap();
    assert!(classify_orbit(&img).unwrap().contains(Component::V2));
}

#[test]
fn families_land_in_their_components() {
    let (a, b) = (e(3), FieldElem::rat(-1, 2));
    for plus in [true, false] {
        for (c, fam) in [
            (Component::V0, v0_family(&e(2), &b, plus)),
            (Component::V1, v1_family(&a, &b, plus)),
            (Component::V2, v2_family(&a, &b, plus)),
        ] {
            let fam = fam.unwrap();
            let o = orbit_of_rep(&fam.rep).unwrap();
            assert_eq!(o, fam.orbit);
            assert!(classify_orbit(&o).unwrap().contains(c));
        }
    }
}

#[test]
fn excluded_parameters_error() {
    assert!(matches!(v0_family(&e(2), &e(2), true), Err(ConstructError::Excluded(_))));
    assert!(xpr_point(&e(1), &e(1), &e(1)).is_err());
}

#[test]
fn closed_orbit_at_the_triple_point() {
    let o = closed_orbit(Component::V0, &e(3), &e(3), true).unwrap();
    assert_eq!(o.lift().unwrap(), CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]).with_eta(e(3)));
}

#[test]
fn metabelian_points_are_isolated() {
    for (comp, c) in metabelian_points() {
        assert_eq!(classify(&c).0.into_iter().collect::<Vec<_>>(), vec![comp]);
    }
}

#[test]
fn suite_catalog() {
    assert_eq!(list_suites().len(), 16);
    let r = run_suite("slice-roundtrip", Mode::Symbolic, 0, 0).unwrap();
    assert!(r.results.iter().all(|x| x.verdict == Verdict::Pass));
    assert!(run_suite("V0-eq71", Mode::Sampled, 0, 0).is_err());
}
