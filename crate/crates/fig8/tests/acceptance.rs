//! Acceptance criteria. Every check is exact (zero tolerance); each criterion
//! also has a wall-clock ceiling. Prints one PASS/FAIL line per criterion.

use fig8::components::classify;
use fig8::constructors::{dehn_rep, hypersurface, slice_g, slice_rep, WPoint};
use fig8::coords::{extract, mu3_act, CharCoords, Component, ComponentSet};
use fig8::numtower::{sqrt_adjoin, Cyclo12, FieldElem};
use fig8::poly::{vars, Point};
use fig8::verify::{run_suite, Mode, Report};
use std::process::ExitCode;
use std::time::{Duration, Instant};

/// Exact arithmetic throughout: residuals must be identically zero.
const TOLERANCE: i64 = 0;
const SEED: u64 = 20_240_601;

type Check = Result<(), String>;

fn suite(name: &str, mode: Mode, n: usize) -> Result<Report, String> {
    let r = run_suite(name, mode, n, SEED).map_err(|e| e.to_string())?;
    if r.downgraded {
        return Err(format!("{name}: symbolic run hit the term budget"));
    }
    if !r.passed() {
        return Err(r.to_text());
    }
    Ok(r)
}

/// Every identity was examined at least `min` times.
fn coverage(r: &Report, min: usize) -> Check {
    match r.results.iter().find(|x| x.checked < min) {
        Some(x) => Err(format!("{}: `{}` checked {} < {min} times", r.suite, x.name, x.checked)),
        None => Ok(()),
    }
}

fn e(n: i64) -> FieldElem {
    FieldElem::int(n)
}

fn c1_intersections() -> Check {
    let cases = [
        ([4, 4, 8, 8, 3, 3, 3, 3], ComponentSet::of(&[Component::XTR, Component::XPR, Component::V0])),
        ([2, 2, 2, 2, 1, 1, 1, 1], ComponentSet::of(&[Component::XPR, Component::V0, Component::V1, Component::V2])),
    ];
    for (pt, want) in cases {
        let c = CharCoords::from_ints(pt);
        for k in 0..3 {
            let got = classify(&mu3_act(k, &c));
            if got != want {
                return Err(format!("w^{k}.{c}: got {{{got}}}, want {{{want}}}"));
            }
        }
    }
    Ok(())
}

fn c2_monodromy() -> Check {
    let r = suite("lemma5.1-identities", Mode::Sampled, 100)?;
    coverage(&r, 100)
}

fn c3_discriminants() -> Check {
    let r = suite("W-discriminants", Mode::Symbolic, 0)?;
    (r.results.len() == 3).then_some(()).ok_or_else(|| format!("expected 3 factorizations, got {}", r.results.len()))
}

fn c4_nondistinguished() -> Check {
    for name in ["V2-prop6.1", "V1-prop6.2"] {
        coverage(&suite(name, Mode::Sampled, 50)?, 100)?;
        suite(name, Mode::Symbolic, 0)?;
    }
    Ok(())
}

fn c5_distinguished() -> Check {
    suite("V0-eq71", Mode::Symbolic, 0)?;
    let r = suite("V0-eq71", Mode::Sampled, 50)?;
    coverage(&r, 100)?;
    let r = suite("V0-radical18", Mode::Sampled, 50)?;
    if r.results.len() != 18 {
        return Err(format!("expected 18 radical generators, got {}", r.results.len()));
    }
    coverage(&r, 100)
}

fn c6_boundary() -> Check {
    suite("boundary-curve-4.2", Mode::Symbolic, 0).map(|_| ())
}

fn c7_metabelian() -> Check {
    suite("metabelian-cor5.6", Mode::Symbolic, 0).map(|_| ())
}

fn c8_symmetries() -> Check {
    suite("symmetry-d4", Mode::Symbolic, 0)?;
    coverage(&suite("symmetry-h-lemma8.1", Mode::Sampled, 50)?, 50)
}

fn on_w(nu: i64, nub: i64, zeta: FieldElem) -> bool {
    let pt = Point::new().with(vars::NU, e(nu)).with(vars::NUB, e(nub)).with(vars::ZETA, zeta);
    hypersurface().eval(&pt).unwrap().is_zero()
}

fn c9_slice() -> Check {
    let r7 = sqrt_adjoin(&Cyclo12::from_i64(-7)).unwrap().s();
    let half = FieldElem::rat(1, 2);
    let zp = &(&e(7) * &half) + &(&r7 * &half);
    let zm = &(&e(7) * &half) - &(&r7 * &half);
    if !(on_w(2, 2, e(1)) && on_w(3, 3, zp) && on_w(3, 3, zm)) {
        return Err("hypersurface does not vanish at the listed points".into());
    }
    suite("slice-orders", Mode::Symbolic, 0)?;
    coverage(&suite("slice-orders", Mode::Sampled, 50)?, 50)?;
    suite("slice-roundtrip", Mode::Symbolic, 0)?;
    coverage(&suite("slice-roundtrip", Mode::Sampled, 50)?, 50)?;
    coverage(&suite("dehn-classification", Mode::Sampled, 50)?, 50)
}

fn c10_example() -> Check {
    let r7 = sqrt_adjoin(&Cyclo12::from_i64(-7)).unwrap().s();
    let zeta = &FieldElem::rat(7, 2) + &(&r7 * &FieldElem::rat(1, 2));
    let q = WPoint::new(e(3), e(3), zeta).map_err(|x| x.to_string())?;
    let p = slice_g(&q).map_err(|x| x.to_string())?;
    slice_rep(&p).map_err(|x| x.to_string())?;
    let rho = dehn_rep(&p, Component::V1).map_err(|x| x.to_string())?;
    let st = rho.to_alphabet(fig8::grp::Alphabet::ST).map_err(|x| x.to_string())?;
    let tr = |w: &str| st.trace(&w.parse().unwrap()).unwrap();
    if tr("S") != e(3) || tr("S'") != e(3) {
        return Err(format!("tr S = {}, tr S^-1 = {}", tr("S"), tr("S'")));
    }
    let ell = rho.eval(&"a.b.a'.b'".parse().unwrap()).map_err(|x| x.to_string())?;
    if ell.charpoly() != [e(-1), e(3), e(-3), e(1)] {
        return Err("longitude is not unipotent".into());
    }
    let c = extract(&rho).map_err(|x| x.to_string())?;
    if !classify(&c).contains(Component::V1) {
        return Err(format!("{c} not on V1"));
    }
    if &c.beta + &c.betab != e(7) || &c.beta * &c.betab != e(14) {
        return Err(format!("beta = {}, betab = {}", c.beta, c.betab));
    }
    Ok(())
}

fn c11_sym2() -> Check {
    coverage(&suite("sym2-discriminant-5.4", Mode::Sampled, 20)?, 20)
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let criteria: [(&str, fn() -> Check, u64); 11] = [
        ("1 intersection table on both center orbits", c1_intersections, 1),
        ("2 monodromy identities on 100 constructed reps", c2_monodromy, 30),
        ("3 three discriminant factorizations (symbolic)", c3_discriminants, 5),
        ("4 V1/V2 families, 50 samples per branch", c4_nondistinguished, 300),
        ("5 V0 family: identity block and 18 radical generators", c5_distinguished, 300),
        ("6 boundary sextic discriminant and w^3 = 9 +- 4 sqrt 5", c6_boundary, 5),
        ("7 five metabelian characters", c7_metabelian, 1),
        ("8 dihedral relations and component permutation", c8_symmetries, 60),
        ("9 slice, roundtrips, triangle-group orders, Dehn pullbacks", c9_slice, 120),
        ("10 worked example from (3, 3, 7/2 + i sqrt 7/2)", c10_example, 10),
        ("11 symmetric squares on the V0 branch locus", c11_sym2, 60),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let res = f();
        let dt = start.elapsed();
        let res = res.and_then(|_| {
            (dt <= Duration::from_secs(limit)).then_some(()).ok_or_else(|| format!("took {dt:.2?}, limit {limit}s"))
        });
        match res {
            Ok(()) => println!("PASS  criterion {name} ({dt:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name} ({dt:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
