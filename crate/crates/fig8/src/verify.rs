//! Named identity suites, run symbolically (exact expansion) or on seeded
//! random exact points, with text and JSON reports.

use crate::components::{
    boundary_curve, boundary_curve_alpha, classify, classify_orbit, sextic_discriminant_poly, v0_radical_generators,
    w_catalog, w_entry,
};
use crate::constructors::{
    closed_orbit, dehn_rep, hypersurface, metabelian_points, slice_f, slice_f_polys, slice_g, slice_g_ratfuncs,
    slice_ideal, slice_rep, v0_family, v0_identities, v1_family, v2_family, v2_identities, w_point_from, xpr_point,
    xpr_rep, xtr_point, xtr_rep, ConstructError, Family, SlicePoint, WPoint,
};
use crate::coords::{
    compose_images, extract, is_identity_map, mu3_act, orbit_of_rep, sym_f, sym_h, sym_orbit, symbolic_images,
    CharCoords, Component, ComponentSet, OrbitCoords, Sym,
};
use crate::grp::{Representation, Word};
use crate::mat3::{Mat2, Mat3};
use crate::numtower::{sqrt_adjoin, FieldElem};
use crate::poly::{parse_poly, resultant_in, term_budget, vars, MPoly, Point, RatFunc, SqrtPoly, UPoly, ZeroTest};
use crate::sl2::{classify_sl2, riley_polynomial, riley_rep, riley_u, sl2_coords, sym2_bridge};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Sampled,
}

impl Mode {
    pub fn by_name(s: &str) -> Option<Mode> {
        match s {
            "symbolic" => Some(Mode::Symbolic),
            "sampled" => Some(Mode::Sampled),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    InconclusiveByBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub citation: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Points (sampled) or expansions (symbolic) examined.
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub mode: Mode,
    pub seed: u64,
    pub samples: usize,
    /// Set when a symbolic run hit the term budget and was rerun sampled.
    pub downgraded: bool,
    pub results: Vec<IdentityResult>,
    /// Excluded from serialization so reports are reproducible byte for byte.
    #[serde(skip)]
    pub wall_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} mode={} n={} seed={}", self.suite, self.mode, self.samples, self.seed);
        if self.downgraded {
            out.push_str(" (downgraded from symbolic: term budget)");
        }
        out.push('\n');
        for r in &self.results {
            let v = match &r.verdict {
                Verdict::Pass => "PASS".to_string(),
                Verdict::Fail { witness } => format!("FAIL at {witness}"),
                Verdict::InconclusiveByBudget => "INCONCLUSIVE (budget)".to_string(),
            };
            out.push_str(&format!("{v}  {} [{}] checked={}\n", r.name, r.citation, r.checked));
        }
        out.push_str(if self.passed() { "RESULT PASS\n" } else { "RESULT FAIL\n" });
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{0}` has no {1} mode")]
    Mode(String, Mode),
    #[error("sampled mode needs n >= 1")]
    ZeroSamples,
    #[error("no admissible sample after 1000 draws")]
    Rejection,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub citation: &'static str,
    pub modes: &'static [Mode],
}

const BOTH: &[Mode] = &[Mode::Symbolic, Mode::Sampled];
const SAMPLED: &[Mode] = &[Mode::Sampled];

static SUITES: [SuiteInfo; 16] = [
    SuiteInfo { name: "lemma5.1-identities", citation: "monodromy fixed-point identities on (alpha, alphab, beta, betab)", modes: BOTH },
    SuiteInfo { name: "W-discriminants", citation: "factorization of P^2 - 4Q for the three commutator covers", modes: BOTH },
    SuiteInfo { name: "V1-prop6.2", citation: "V1 matrix family and its trace identities", modes: BOTH },
    SuiteInfo { name: "V2-prop6.1", citation: "V2 matrix family and its trace identities", modes: BOTH },
    SuiteInfo { name: "V0-eq71", citation: "distinguished component: closed-form identity block", modes: BOTH },
    SuiteInfo { name: "V0-radical18", citation: "distinguished component: 18 radical generators", modes: SAMPLED },
    SuiteInfo { name: "XPR-phi", citation: "parametrization of the partially reducible component", modes: BOTH },
    SuiteInfo { name: "boundary-curve-4.2", citation: "boundary sextic and its discriminant", modes: BOTH },
    SuiteInfo { name: "symmetry-d4", citation: "f*, h* generate the dihedral group of order 8", modes: BOTH },
    SuiteInfo { name: "symmetry-h-lemma8.1", citation: "h* swaps V1 and V2; f* preserves components", modes: SAMPLED },
    SuiteInfo { name: "sym2-discriminant-5.4", citation: "symmetric squares of SL2 characters lie on the V0 branch locus", modes: SAMPLED },
    SuiteInfo { name: "slice-roundtrip", citation: "f and g are mutually inverse between X and W", modes: BOTH },
    SuiteInfo { name: "slice-orders", citation: "K^3 = L^3 = (KL)^4 = Id on the slice", modes: BOTH },
    SuiteInfo { name: "dehn-classification", citation: "Dehn-filling pullbacks land in V2 (phi) and V1 (phi o h)", modes: SAMPLED },
    SuiteInfo { name: "metabelian-cor5.6", citation: "the five metabelian characters", modes: BOTH },
    SuiteInfo { name: "intersection-table", citation: "pairwise intersections of the components", modes: BOTH },
];

pub fn list_suites() -> &'static [SuiteInfo] {
    &SUITES
}

/// Seeded source of small exact rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Numerator in [−20, 20], denominator in [1, 10].
    pub fn rational(&mut self) -> FieldElem {
        let n = self.rng.gen_range(-20..=20);
        let d = self.rng.gen_range(1..=10);
        FieldElem::rat(n, d)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// Draw until `f` accepts, at most 1000 times.
    pub fn draw<T>(&mut self, mut f: impl FnMut(&mut Self) -> Option<T>) -> Result<T, VerifyError> {
        for _ in 0..1000 {
            if let Some(x) = f(self) {
                return Ok(x);
            }
        }
        Err(VerifyError::Rejection)
    }
}

/// Per-identity accumulator; keeps the first failing witness.
struct Acc {
    citation: &'static str,
    rows: BTreeMap<String, (Verdict, usize)>,
    budget_hit: bool,
}

impl Acc {
    fn new(citation: &'static str) -> Self {
        Acc { citation, rows: BTreeMap::new(), budget_hit: false }
    }

    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let row = self.rows.entry(name.to_string()).or_insert((Verdict::Pass, 0));
        row.1 += 1;
        if !ok && row.0 == Verdict::Pass {
            row.0 = Verdict::Fail { witness: witness() };
        }
    }

    fn zero_test(&mut self, name: &str, t: ZeroTest) {
        match t {
            ZeroTest::Budget => {
                self.budget_hit = true;
                let row = self.rows.entry(name.to_string()).or_insert((Verdict::Pass, 0));
                row.0 = Verdict::InconclusiveByBudget;
                row.1 += 1;
            }
            t => self.check(name, t == ZeroTest::Zero, || "symbolic expansion is nonzero".into()),
        }
    }

    fn poly_zero(&mut self, name: &str, p: &MPoly) {
        let t = if p.num_terms() > term_budget() {
            ZeroTest::Budget
        } else if p.is_zero() {
            ZeroTest::Zero
        } else {
            ZeroTest::NonZero
        };
        self.zero_test(name, t);
    }

    fn error(&mut self, name: &str, e: impl fmt::Display) {
        self.check(name, false, || format!("error: {e}"));
    }

    fn into_results(self) -> Vec<IdentityResult> {
        self.rows
            .into_iter()
            .map(|(name, (verdict, checked))| IdentityResult { name, citation: self.citation.to_string(), verdict, checked })
            .collect()
    }
}

pub fn run_suite(name: &str, mode: Mode, n: usize, seed: u64) -> Result<Report, VerifyError> {
    let info = SUITES.iter().find(|s| s.name == name).ok_or_else(|| VerifyError::UnknownSuite(name.into()))?;
    if !info.modes.contains(&mode) {
        return Err(VerifyError::Mode(name.into(), mode));
    }
    if mode == Mode::Sampled && n == 0 {
        return Err(VerifyError::ZeroSamples);
    }
    let start = Instant::now();
    let mut acc = Acc::new(info.citation);
    let mut rng = Sampler::new(seed);
    run_body(info.name, mode, n, &mut rng, &mut acc)?;
    let (mode, n, downgraded, acc) = if mode == Mode::Symbolic && acc.budget_hit && info.modes.contains(&Mode::Sampled) {
        let mut again = Acc::new(info.citation);
        run_body(info.name, Mode::Sampled, 200, &mut Sampler::new(seed), &mut again)?;
        (Mode::Sampled, 200, true, again)
    } else {
        (mode, if mode == Mode::Symbolic { 0 } else { n }, false, acc)
    };
    Ok(Report {
        suite: info.name.into(),
        mode,
        seed,
        samples: n,
        downgraded,
        results: acc.into_results(),
        wall_ms: start.elapsed().as_millis(),
    })
}

fn run_body(name: &str, mode: Mode, n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    let sym = mode == Mode::Symbolic;
    match name {
        "lemma5.1-identities" if sym => monodromy_symbolic(acc),
        "lemma5.1-identities" => monodromy_sampled(n, rng, acc)?,
        "W-discriminants" if sym => w_disc_symbolic(acc),
        "W-discriminants" => w_disc_sampled(n, rng, acc),
        "V1-prop6.2" if sym => nondist_symbolic(Component::V1, acc),
        "V2-prop6.1" if sym => nondist_symbolic(Component::V2, acc),
        "V1-prop6.2" => family_suite(Component::V1, n, rng, acc)?,
        "V2-prop6.1" => family_suite(Component::V2, n, rng, acc)?,
        "V0-eq71" if sym => v0_symbolic(acc),
        "V0-eq71" => family_suite(Component::V0, n, rng, acc)?,
        "V0-radical18" => v0_radical(n, rng, acc)?,
        "XPR-phi" if sym => xpr_symbolic(acc),
        "XPR-phi" => xpr_sampled(n, rng, acc)?,
        "boundary-curve-4.2" if sym => boundary_symbolic(acc),
        "boundary-curve-4.2" => boundary_sampled(n, rng, acc)?,
        "symmetry-d4" if sym => d4_symbolic(acc),
        "symmetry-d4" => d4_sampled(n, rng, acc),
        "symmetry-h-lemma8.1" => symmetry_h(n, rng, acc)?,
        "sym2-discriminant-5.4" => sym2_disc(n, rng, acc)?,
        "slice-roundtrip" if sym => roundtrip_symbolic(acc),
        "slice-roundtrip" => roundtrip_sampled(n, rng, acc)?,
        "slice-orders" if sym => orders_symbolic(acc),
        "slice-orders" => orders_sampled(n, rng, acc)?,
        "dehn-classification" => dehn_sampled(n, rng, acc)?,
        "metabelian-cor5.6" => metabelian(acc),
        "intersection-table" => intersections(acc),
        other => return Err(VerifyError::UnknownSuite(other.into())),
    }
    Ok(())
}

fn e(n: i64) -> FieldElem {
    FieldElem::int(n)
}

fn p(text: &str) -> MPoly {
    parse_poly(text, None).expect("suite literal")
}

fn sign(plus: bool) -> char {
    if plus {
        '+'
    } else {
        '-'
    }
}

// ---- monodromy identities -------------------------------------------------

const MONODROMY: [(&str, &str); 4] = [
    ("alpha = alpha beta - alphab beta + alphab", "alpha - alpha*beta + alphab*beta - alphab"),
    ("alphab = alphab betab - alpha betab + alpha", "alphab - alphab*betab + alpha*betab - alpha"),
    ("beta = beta alpha - betab alpha + betab", "beta - beta*alpha + betab*alpha - betab"),
    ("betab = betab alphab - beta alphab + beta", "betab - betab*alphab + beta*alphab - beta"),
];

fn monodromy_symbolic(acc: &mut Acc) {
    let v = MPoly::var;
    let one = MPoly::one();
    let charts: [(&str, Vec<(crate::poly::Var, MPoly)>); 3] = [
        ("U0", vec![(vars::ALPHAB, v(vars::ALPHA)), (vars::BETAB, v(vars::BETA))]),
        ("U1", vec![(vars::ALPHA, one.clone()), (vars::ALPHAB, one.clone())]),
        ("U2", vec![(vars::BETA, one.clone()), (vars::BETAB, one)]),
    ];
    for (name, text) in MONODROMY {
        for (chart, sub) in &charts {
            acc.poly_zero(&format!("{name} on {chart}"), &p(text).subst_many(sub));
        }
    }
}

/// A representation from one of the five constructors, chosen by index.
fn random_rep(k: usize, rng: &mut Sampler) -> Result<(String, Representation), VerifyError> {
    rng.draw(|r| {
        let (a, b, plus) = (r.rational(), r.rational(), r.coin());
        let label = |c: &str| format!("{c}({a}, {b}, {})", sign(plus));
        match k % 5 {
            0 => Some((label("XTR"), xtr_rep(&a, &b))),
            1 => xpr_rep(&a, &b, plus as usize).ok().map(|rho| (label("XPR"), rho)),
            2 => v0_family(&a, &b, plus).ok().map(|f| (label("V0"), f.rep)),
            3 => v1_family(&a, &b, plus).ok().map(|f| (label("V1"), f.rep)),
            _ => v2_family(&a, &b, plus).ok().map(|f| (label("V2"), f.rep)),
        }
    })
}

fn monodromy_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for k in 0..n {
        let (label, rho) = random_rep(k, rng)?;
        let o = match orbit_of_rep(&rho) {
            Ok(o) => o,
            Err(err) => {
                acc.error("orbit coordinates", err);
                continue;
            }
        };
        let pt = abpt(&o);
        for (name, text) in MONODROMY {
            acc.check(name, p(text).eval(&pt).unwrap().is_zero(), || label.clone());
        }
    }
    Ok(())
}

fn abpt(o: &OrbitCoords) -> Point {
    Point::new()
        .with(vars::ALPHA, o.alpha.clone())
        .with(vars::ALPHAB, o.alphab.clone())
        .with(vars::BETA, o.beta.clone())
        .with(vars::BETAB, o.betab.clone())
}

// ---- commutator covers ----------------------------------------------------

fn w_disc_symbolic(acc: &mut Acc) {
    for w in w_catalog() {
        acc.poly_zero(&format!("{}: P^2 - 4Q factors", w.name), &(&w.discriminant() - &w.factored_discriminant()));
    }
}

fn w_disc_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) {
    for _ in 0..n {
        let pt = Point::new()
            .with(vars::ALPHA, rng.rational())
            .with(vars::ALPHAB, rng.rational())
            .with(vars::BETA, rng.rational())
            .with(vars::BETAB, rng.rational());
        for w in w_catalog() {
            let ok = w.discriminant().eval(&pt).unwrap() == w.factored_discriminant().eval(&pt).unwrap();
            acc.check(&format!("{}: P^2 - 4Q factors", w.name), ok, || format!("{pt:?}"));
        }
    }
}

// ---- V0 / V1 / V2 ---------------------------------------------------------

/// Self-consistency of the closed forms over Q(params)[√Δ].
fn nondist_symbolic(c: Component, acc: &mut Acc) {
    let (x, xb) = match c {
        Component::V1 => (vars::BETA, vars::BETAB),
        _ => (vars::ALPHA, vars::ALPHAB),
    };
    let w = w_entry(c).unwrap();
    let delta = w.disc_factors[0].0.clone();
    let rf = |q: MPoly| RatFunc::poly(q);
    let (a, ab) = (MPoly::var(x), MPoly::var(xb));
    let f = &(&(&(&a * &ab) + &a.scale(&e(5))) + &ab.scale(&e(5))) + &MPoly::int(5);
    let half = RatFunc::constant(FieldElem::rat(1, 2));
    let s = SqrtPoly::s(&delta);
    let fs = SqrtPoly::base(rf(f), &delta);
    let hi = fs.add(&s).scale(&half);
    let lo = fs.sub(&s).scale(&half);
    let yyb = SqrtPoly::base(rf(&(&a + &ab) + &MPoly::int(2)), &delta);
    // y³ ȳ³ = (yȳ)³.
    let cube = yyb.mul(&yyb).mul(&yyb);
    acc.zero_test("y^3 yb^3 = (y yb)^3", hi.mul(&lo).sub(&cube).expand_is_zero(term_budget()));
    // η = (the cube on the η side) − 3(x + x̄ + 1) solves η² − Pη + Q = 0.
    let eta_side = if c == Component::V2 { &lo } else { &hi };
    let shift = SqrtPoly::base(rf((&(&a + &ab) + &MPoly::one()).scale(&e(3))), &delta);
    let eta = eta_side.sub(&shift);
    let pp = SqrtPoly::base(rf(w.p.clone()), &delta);
    let qq = SqrtPoly::base(rf(w.q.clone()), &delta);
    let rel = eta.mul(&eta).sub(&pp.mul(&eta)).add(&qq);
    acc.zero_test("eta^2 - P eta + Q = 0", rel.expand_is_zero(term_budget()));
}

fn v0_symbolic(acc: &mut Acc) {
    let w = w_entry(Component::V0).unwrap();
    let delta = w.disc_factors[0].0.clone();
    let sp = |t: &str, k: &str| {
        let half = RatFunc::constant(FieldElem::rat(1, 2));
        SqrtPoly::new(RatFunc::poly(p(t)), RatFunc::poly(p(k)), delta.clone()).scale(&half)
    };
    let base = |t: &str| SqrtPoly::base(RatFunc::poly(p(t)), &delta);
    let f = "alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2";
    let g = "alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2";
    let h = "alpha^2*beta + 3*alpha*beta + 3*alpha + 1";
    let y3 = sp(f, "beta - alpha");
    let yb3 = sp(f, "alpha - beta");
    let z3 = sp(g, "-(alpha^3*beta + 3*alpha^2 - 4*alpha)");
    let zb3 = sp(g, "alpha^3*beta + 3*alpha^2 - 4*alpha");
    let yz = sp(h, "1 - alpha");
    let ybzb = sp(h, "alpha - 1");
    let yyb = base("(alpha + 1)*(beta + 1)");
    let zzb = base("1 + alpha^2 + 2*alpha^2*beta");
    let eta = sp(&w.p.to_string(), "-(alpha*beta - 2*alpha - 2*beta + 3)");
    let b = term_budget();
    let cube = |x: &SqrtPoly| x.mul(x).mul(x);
    acc.zero_test("y^3 yb^3 = (y yb)^3", y3.mul(&yb3).sub(&cube(&yyb)).expand_is_zero(b));
    acc.zero_test("z^3 zb^3 = (z zb)^3", z3.mul(&zb3).sub(&cube(&zzb)).expand_is_zero(b));
    acc.zero_test("y^3 z^3 = (y z)^3", y3.mul(&z3).sub(&cube(&yz)).expand_is_zero(b));
    acc.zero_test("yb^3 zb^3 = (yb zb)^3", yb3.mul(&zb3).sub(&cube(&ybzb)).expand_is_zero(b));
    let pp = base(&w.p.to_string());
    let qq = base(&w.q.to_string());
    acc.zero_test("eta^2 - P eta + Q = 0", eta.mul(&eta).sub(&pp.mul(&eta)).add(&qq).expand_is_zero(b));
}

fn check_family(c: Component, f: &Family, label: &str, acc: &mut Acc) {
    let w = || label.to_string();
    acc.check("det A = 1", f.a.det().is_one(), w);
    let (a, ai, b, bi) = (&f.a, f.a.inv().unwrap(), &f.b, f.b.inv().unwrap());
    let o = &f.orbit;
    let traces = [
        ("tr A = alpha", a.trace() == o.alpha),
        ("tr A^-1 = alphab", ai.trace() == o.alphab),
        ("tr B = beta", b.trace() == o.beta),
        ("tr B^-1 = betab", bi.trace() == o.betab),
        ("tr BA^-1 = beta", b.mul(&ai).trace() == o.beta),
        ("tr B^2 A = beta", b.mul(b).mul(a).trace() == o.beta),
    ];
    for (name, ok) in traces {
        acc.check(name, ok, w);
    }
    let t = &f.t0;
    acc.check("T0 A = A B T0", t.mul(a) == a.mul(b).mul(t), w);
    acc.check("T0 B = B A B T0", t.mul(b) == b.mul(a).mul(b).mul(t), w);
    acc.check("det T0 != 0", !f.d0.is_zero(), w);
    match c {
        Component::V0 => {
            for (name, r) in v0_identities(o, &f.s).into_iter().take(9) {
                acc.check(&name, r.is_zero(), w);
            }
        }
        _ => {
            for (name, r) in v2_identities(c, o, &f.s) {
                acc.check(name, r.is_zero(), w);
            }
        }
    }
    match classify_orbit(o) {
        Ok(set) => acc.check(&format!("classifies into {}", c.name()), set.contains(c), w),
        Err(err) => acc.error(&format!("classifies into {}", c.name()), err),
    }
}

fn make_family(c: Component, a: &FieldElem, b: &FieldElem, plus: bool) -> Result<Family, ConstructError> {
    match c {
        Component::V0 => v0_family(a, b, plus),
        Component::V1 => v1_family(a, b, plus),
        _ => v2_family(a, b, plus),
    }
}

/// n samples per branch.
fn family_suite(c: Component, n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for plus in [true, false] {
        for _ in 0..n {
            let (a, b, f) = rng.draw(|r| {
                let (a, b) = (r.rational(), r.rational());
                let f = make_family(c, &a, &b, plus).ok()?;
                (!f.boundary).then_some((a, b, f))
            })?;
            check_family(c, &f, &format!("({a}, {b}) branch {}", sign(plus)), acc);
        }
    }
    Ok(())
}

fn v0_radical(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for plus in [true, false] {
        for _ in 0..n {
            let (a, b, f) = rng.draw(|r| {
                let (a, b) = (r.rational(), r.rational());
                v0_family(&a, &b, plus).ok().map(|f| (a, b, f))
            })?;
            let res = v0_identities(&f.orbit, &f.s);
            let gens = res.iter().filter(|(k, _)| k.starts_with("radical"));
            for (k, (_, r)) in gens.enumerate() {
                acc.check(&format!("generator {:02}", k + 1), r.is_zero(), || format!("({a}, {b}) branch {}", sign(plus)));
            }
        }
    }
    Ok(())
}

// ---- partially reducible --------------------------------------------------

fn xpr_symbolic(acc: &mut Acc) {
    // α = x1 + 1, β = x1/(x1 − 1) + 1 on the curve αβ − 2α − 2β + 3 = 0.
    let x1 = RatFunc::var(vars::X1);
    let one = RatFunc::one();
    let alpha = &x1 + &one;
    let beta = &(&x1 / &(&x1 - &one)) + &one;
    let two = RatFunc::constant(e(2));
    let curve = &(&(&(&alpha * &beta) - &(&two * &alpha)) - &(&two * &beta)) + &RatFunc::constant(e(3));
    acc.poly_zero("alpha beta - 2 alpha - 2 beta + 3 = 0", &curve.num);
    // Over the Riley curve, λσ ⊕ λ⁻² gives v = λ(r + 1/r), w = λ², x1 = tr σ(T⁻¹STS⁻¹).
    // The constraint then shares the Riley factor, so their resultant in u vanishes.
    let r = RatFunc::var(vars::R);
    let ri = r.inv().unwrap();
    let zero = RatFunc::zero();
    let sm = Mat2::from_rows([[r.clone(), one.clone()], [zero.clone(), ri.clone()]]);
    let tm = Mat2::from_rows([[r.clone(), zero], [RatFunc::var(vars::U), ri.clone()]]);
    let x1 = tm.adj().mul(&sm).mul(&tm).mul(&sm.adj()).trace();
    let lam = RatFunc::var(vars::LAMBDA);
    let v = &lam * &(&r + &ri);
    let w = &lam * &lam;
    let lhs = &(&(&(&x1 * &x1) + &x1) - &one) * &w;
    let rhs = &(&x1 - &one) * &(&v * &v);
    let name = "(x1^2 + x1 - 1) w = (x1 - 1) v^2 on Riley reps";
    match resultant_in(&(&lhs - &rhs).num, riley_polynomial(), vars::U) {
        Ok(res) => acc.poly_zero(name, &res),
        Err(err) => acc.error(name, err),
    }
}

fn xpr_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        let (s, l, k, rho) = rng.draw(|r| {
            let (s, l, k) = (r.rational(), r.rational(), r.coin() as usize);
            xpr_rep(&s, &l, k).ok().map(|rho| (s, l, k, rho))
        })?;
        let label = || format!("s={s} lambda={l} root={k}");
        let c = match extract(&rho) {
            Ok(c) => c,
            Err(err) => {
                acc.error("extract", err);
                continue;
            }
        };
        let v = &l * &(&s + &s.inv().unwrap());
        let w = l.pow(2);
        let x1 = rho.trace(&"a".parse::<Word>().unwrap()).unwrap() - e(1);
        match xpr_point(&v, &w, &x1) {
            Ok(phi) => acc.check("extract(rho) = Phi(v, w, x1)", CharCoords { eta: None, ..c.clone() } == phi, label),
            Err(err) => acc.error("extract(rho) = Phi(v, w, x1)", err),
        }
        acc.check("classifies into XPR", classify(&c).contains(Component::XPR), label);
        let curve = &(&(&(&c.alpha * &c.beta) - &(&e(2) * &c.alpha)) - &(&e(2) * &c.beta)) + &e(3);
        acc.check("alpha beta - 2 alpha - 2 beta + 3 = 0", curve.is_zero(), label);
    }
    Ok(())
}

// ---- boundary curve -------------------------------------------------------

fn boundary_symbolic(acc: &mut Acc) {
    let lhs = sextic_discriminant_poly();
    acc.poly_zero("alpha^2(2 alpha - 3)^2 - (alpha - 2)^2 = 4(alpha^2 - alpha - 1)(alpha - 1)^2", &(&lhs - &p("4*(alpha^2 - alpha - 1)*(alpha - 1)^2")));
    acc.poly_zero(
        "alpha^4 - 3 alpha^3 + 2 alpha^2 + alpha - 1 = (alpha^2 - alpha - 1)(alpha - 1)^2",
        &(&p("alpha^4 - 3*alpha^3 + 2*alpha^2 + alpha - 1") - &p("(alpha^2 - alpha - 1)*(alpha - 1)^2")),
    );
    // At α = 3 the sextic is X² − 18X + 1 in X = w³, with roots 9 ± 4√5.
    let five = p("5");
    for k in [4, -4] {
        let x = SqrtPoly::new(RatFunc::constant(e(9)), RatFunc::constant(e(k)), five.clone());
        let val = x.mul(&x).sub(&x.scale(&RatFunc::constant(e(18)))).add(&SqrtPoly::base(RatFunc::one(), &five));
        acc.zero_test("alpha = 3: w^3 = 9 +- 4 sqrt 5 solves the sextic", val.expand_is_zero(term_budget()));
    }
    // The two forms agree under α = x1 + 1.
    let x1 = RatFunc::var(vars::X1);
    let one = RatFunc::one();
    let a = &x1 + &one;
    let two = RatFunc::constant(e(2));
    let three = RatFunc::constant(e(3));
    let f1 = &(&(&(&two * &(&x1 * &x1)) + &x1) - &one) / &(&x1 - &one);
    let f2 = &(&a * &(&(&two * &a) - &three)) / &(&a - &two);
    acc.poly_zero("alpha = x1 + 1 maps one form to the other", &(&f1 - &f2).num);
}

fn boundary_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        // Solve 4w³x1² + (2w³ − w⁶ − 1)x1 + (w⁶ − 2w³ + 1) = 0 for x1.
        let (w, x1) = rng.draw(|r| {
            let w = r.rational();
            if w.is_zero() {
                return None;
            }
            let w3 = w.pow(3);
            let (qa, qb, qc) = (&e(4) * &w3, &(&e(2) * &w3) - &(&w3.pow(2) + &e(1)), &(&w3.pow(2) - &(&e(2) * &w3)) + &e(1));
            let disc = &qb.pow(2) - &(&e(4) * &(&qa * &qc));
            let root = if disc.is_zero() { e(0) } else { sqrt_adjoin(&disc.to_cyclo()?).ok()?.s() };
            let x1 = &(&-&qb + &root) / &(&e(2) * &qa);
            let bad = x1 == e(1) || x1 == e(0);
            (!bad).then_some((w, x1))
        })?;
        let label = || format!("w={w} x1={x1}");
        acc.check("point on first form", boundary_curve(&w, &x1).unwrap_or(false), label);
        let alpha = &x1 + &e(1);
        acc.check("second form at alpha = x1 + 1", boundary_curve_alpha(&w, &alpha).unwrap_or(false), label);
    }
    Ok(())
}

// ---- symmetries -----------------------------------------------------------

fn d4_symbolic(acc: &mut Acc) {
    let f = symbolic_images(Sym::F);
    let h = symbolic_images(Sym::H);
    let h2 = compose_images(&h, &h);
    let fh = compose_images(&f, &h);
    acc.check("f*^2 = id", is_identity_map(&compose_images(&f, &f)), || "symbolic".into());
    acc.check("h*^4 = id", is_identity_map(&compose_images(&h2, &h2)), || "symbolic".into());
    acc.check("h*^2 != id", !is_identity_map(&h2), || "symbolic".into());
    acc.check("(f* h*)^2 = id", is_identity_map(&compose_images(&fh, &fh)), || "symbolic".into());
}

fn random_coords(rng: &mut Sampler) -> CharCoords {
    CharCoords::new(std::array::from_fn(|_| rng.rational()))
}

fn d4_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) {
    for _ in 0..n {
        let c = random_coords(rng);
        let h4 = sym_h(&sym_h(&sym_h(&sym_h(&c))));
        let fh = |x: &CharCoords| sym_f(&sym_h(x));
        let label = || c.to_string();
        acc.check("f*^2 = id", sym_f(&sym_f(&c)) == c, label);
        acc.check("h*^4 = id", h4 == c, label);
        acc.check("(f* h*)^2 = id", fh(&fh(&c)) == c, label);
    }
}

fn symmetry_h(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        let plus = rng.coin();
        let (a, b, fam) = rng.draw(|r| {
            let (a, b) = (r.rational(), r.rational());
            v1_family(&a, &b, plus).ok().map(|f| (a, b, f))
        })?;
        let label = || format!("({a}, {b}) branch {}", sign(plus));
        orbit_lands(acc, "h* maps V1 into V2", Sym::H, &fam.orbit, Component::V2, label);
        orbit_lands(acc, "f* preserves V1", Sym::F, &fam.orbit, Component::V1, label);
        let (a, b, fam) = rng.draw(|r| {
            let (a, b) = (r.rational(), r.rational());
            v2_family(&a, &b, plus).ok().map(|f| (a, b, f))
        })?;
        let label = || format!("({a}, {b}) branch {}", sign(plus));
        orbit_lands(acc, "h* maps V2 into V1", Sym::H, &fam.orbit, Component::V1, label);
        orbit_lands(acc, "f* preserves V2", Sym::F, &fam.orbit, Component::V2, label);
        let (a, b, fam) = rng.draw(|r| {
            let (a, b) = (r.rational(), r.rational());
            v0_family(&a, &b, plus).ok().map(|f| (a, b, f))
        })?;
        let label = || format!("({a}, {b}) branch {}", sign(plus));
        orbit_lands(acc, "f* preserves V0", Sym::F, &fam.orbit, Component::V0, label);
        orbit_lands(acc, "h* preserves V0", Sym::H, &fam.orbit, Component::V0, label);
        let (y, yb) = (rng.rational(), rng.rational());
        let c = xtr_point(&y, &yb);
        acc.check("f* preserves XTR", classify(&sym_f(&c)).contains(Component::XTR), || c.to_string());
        let (s, l, rho) = rng.draw(|r| {
            let (s, l) = (r.rational(), r.rational());
            xpr_rep(&s, &l, 0).ok().map(|rho| (s, l, rho))
        })?;
        if let Ok(c) = extract(&rho) {
            acc.check("f* preserves XPR", classify(&sym_f(&c)).contains(Component::XPR), || format!("s={s} lambda={l}"));
        }
    }
    Ok(())
}

fn orbit_lands(acc: &mut Acc, name: &str, op: Sym, o: &OrbitCoords, target: Component, label: impl FnOnce() -> String) {
    match sym_orbit(op, o).and_then(|img| classify_orbit(&img)) {
        Ok(set) => acc.check(name, set.contains(target), label),
        Err(err) => acc.error(name, err),
    }
}

// ---- symmetric square -----------------------------------------------------

fn sym2_disc(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    let delta = &w_entry(Component::V0).unwrap().disc_factors[0].0;
    for _ in 0..n {
        let (s, rho) = rng.draw(|r| {
            let s = r.rational();
            let us = riley_u(&s).ok()?;
            let u = us.get(r.coin() as usize).or(us.first())?.clone();
            riley_rep(&s, &u).ok().map(|rho| (s, rho))
        })?;
        let label = || format!("s={s}");
        let c2 = sl2_coords(&rho).unwrap();
        acc.check("SL2 point on the irreducible curve", classify_sl2(&c2).irreducible, label);
        let c = match sym2_bridge(&rho) {
            Ok(c) => c,
            Err(err) => {
                acc.error("sym2 bridge", err);
                continue;
            }
        };
        acc.check("Delta0(alpha, beta) = 0", c.eval(delta).unwrap().is_zero(), label);
        for (k, g) in v0_radical_generators().iter().enumerate() {
            acc.check(&format!("generator {:02}", k + 1), c.eval(g).unwrap().is_zero(), label);
        }
    }
    Ok(())
}

// ---- slice ----------------------------------------------------------------

fn roundtrip_symbolic(acc: &mut Acc) {
    let g = slice_g_ratfuncs();
    let images = [(vars::X0, g[0].clone()), (vars::X1, g[1].clone()), (vars::Y0, g[2].clone()), (vars::Y1, g[3].clone())];
    let hyp = hypersurface();
    for (f, v) in slice_f_polys().iter().zip([vars::NU, vars::NUB, vars::ZETA]) {
        let diff = &f.compose(&images) - &RatFunc::var(v);
        let name = format!("f(g(q))_{} = {}", v.name(), v.name());
        match diff.num.rem_in(vars::ZETA, hyp) {
            Ok(r) => acc.poly_zero(&name, &r),
            Err(err) => acc.error(&name, err),
        }
    }
    // g lands in X: both generators of I vanish after substitution, mod W.
    for (k, gen) in slice_ideal().iter().enumerate() {
        let name = format!("I[{k}](g(q)) = 0");
        match gen.compose(&images).num.rem_in(vars::ZETA, hyp) {
            Ok(r) => acc.poly_zero(&name, &r),
            Err(err) => acc.error(&name, err),
        }
    }
}

/// A random rational point of X: free x0, x1; y0 from the linear equation, y1 from the other.
pub fn random_slice_point(rng: &mut Sampler) -> Result<SlicePoint, VerifyError> {
    rng.draw(|r| {
        let (x0, x1) = (r.rational(), r.rational());
        let k = &(&x0 - &x1) + &e(1);
        let lead = &(&k * &x0) - &e(1);
        let rhs = &(&x0 + &e(2)) - &(&k * &(&x1 - &e(2)));
        let y0 = &rhs / lead.inv().as_ref()?;
        let y0 = y0.inv().map(|_| y0.clone()).unwrap_or(y0);
        let y1 = &(&(&x0 * &y0) + &x1) - &e(2);
        SlicePoint::new(x0, x1, y0, y1).ok()
    })
}

/// A random point of W over rational (ν, ν̄).
pub fn random_w_point(rng: &mut Sampler) -> Result<WPoint, VerifyError> {
    rng.draw(|r| {
        let (nu, nub, plus) = (r.rational(), r.rational(), r.coin());
        w_point_from(&nu, &nub, plus).ok()
    })
}

fn roundtrip_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        let (q, x) = rng.draw(|r| {
            let q = random_w_point(r).ok()?;
            slice_g(&q).ok().map(|x| (q, x))
        })?;
        let label = || format!("({}, {}, {})", q.nu, q.nub, q.zeta);
        acc.check("f(g(q)) = q", slice_f(&x).ok().as_ref() == Some(&q), label);
        let (pp, img) = rng.draw(|r| {
            let pp = random_slice_point(r).ok()?;
            let img = slice_f(&pp).ok()?;
            slice_g(&img).ok().map(|back| (pp, back))
        })?;
        acc.check("g(f(p)) = p", img == pp, || format!("{pp:?}"));
    }
    Ok(())
}

fn orders_symbolic(acc: &mut Acc) {
    let v = MPoly::var;
    let (x0, x1, y0, y1) = (v(vars::X0), v(vars::X1), v(vars::Y0), v(vars::Y1));
    let k = Mat3::from_rows([[MPoly::zero(), MPoly::zero(), MPoly::one()], [x0, MPoly::one(), x1], [MPoly::int(-1), MPoly::zero(), MPoly::int(-1)]]);
    let l = Mat3::from_rows([[MPoly::one(), y0, y1], [MPoly::zero(), MPoly::int(-1), MPoly::int(-1)], [MPoly::zero(), MPoly::one(), MPoly::zero()]]);
    let id = Mat3::<MPoly>::identity();
    acc.check("K^3 = Id", k.pow(3) == id, || "symbolic".into());
    acc.check("L^3 = Id", l.pow(3) == id, || "symbolic".into());
    let kl = k.mul(&l);
    let i = slice_ideal();
    acc.poly_zero("tr KL - 1 is the first generator of I", &(&(&kl.trace() - &MPoly::one()) - &i[0]));
    acc.poly_zero("tr (KL)^-1 - 1 is the second generator of I", &(&(&kl.adj().trace() - &MPoly::one()) - &i[1]));
    acc.poly_zero("det KL = 1", &(&kl.det() - &MPoly::one()));
    let cubic = UPoly::from_ints(&[-1, 1, -1, 1]);
    let quartic = UPoly::from_ints(&[-1, 0, 0, 0, 1]);
    let prod = UPoly::from_ints(&[1, 1]).mul(&cubic);
    acc.check("(t + 1)(t^3 - t^2 + t - 1) = t^4 - 1", prod == quartic, || "symbolic".into());
}

fn orders_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        let pp = random_slice_point(rng)?;
        let label = || format!("{pp:?}");
        match slice_rep(&pp) {
            Ok(rho) => {
                let kl = rho.eval(&"k.l".parse::<Word>().unwrap()).unwrap();
                acc.check("K^3 = L^3 = (KL)^4 = Id", true, label);
                acc.check("tr KL = tr (KL)^-1 = 1", kl.trace().is_one() && kl.adj().trace().is_one(), label);
                let cp = kl.charpoly();
                acc.check("charpoly KL = (t - 1)(t^2 + 1)", cp == [e(-1), e(1), e(-1), e(1)], label);
            }
            Err(err) => acc.error("K^3 = L^3 = (KL)^4 = Id", err),
        }
    }
    Ok(())
}

fn dehn_sampled(n: usize, rng: &mut Sampler, acc: &mut Acc) -> Result<(), VerifyError> {
    for _ in 0..n {
        let (q, x) = rng.draw(|r| {
            let q = random_w_point(r).ok()?;
            slice_g(&q).ok().map(|x| (q, x))
        })?;
        let label = || format!("({}, {}, {})", q.nu, q.nub, q.zeta);
        for target in [Component::V2, Component::V1] {
            let name = format!("phi pullback lands in {}", target.name());
            let c = match dehn_rep(&x, target).map_err(|e| e.to_string()).and_then(|r| extract(&r).map_err(|e| e.to_string())) {
                Ok(c) => c,
                Err(err) => {
                    acc.error(&name, err);
                    continue;
                }
            };
            acc.check(&name, classify(&c).contains(target), label);
            match target {
                Component::V2 => acc.check("V2: y = nu, yb = nub", c.y == q.nu && c.yb == q.nub, label),
                _ => acc.check("V1: y = nub, yb = nu", c.y == q.nub && c.yb == q.nu, label),
            }
            match target {
                Component::V2 => {
                    acc.check("V2: alpha = zeta", c.alpha == q.zeta, label);
                    acc.check("h* of the V2 pullback lies in V1", classify(&sym_h(&c)).contains(Component::V1), label);
                }
                _ => acc.check("V1: beta = zeta", c.beta == q.zeta, label),
            }
        }
    }
    Ok(())
}

// ---- fixed points ---------------------------------------------------------

fn metabelian(acc: &mut Acc) {
    let pts = metabelian_points();
    let mut counts = BTreeMap::new();
    for (comp, c) in &pts {
        let label = || c.to_string();
        let set = classify(c);
        acc.check("classifies into exactly its component", set == ComponentSet::of(&[*comp]), label);
        *counts.entry(comp.name()).or_insert(0) += 1;
        let zero = [&c.y, &c.yb, &c.z, &c.zb].iter().all(|x| x.is_zero());
        acc.check("y = yb = z = zb = 0, eta = 3", zero && c.eta == Some(e(3)), label);
        let rel = w_entry(*comp).unwrap().eta_relation();
        acc.check("eta^2 - P eta + Q = 0", c.eval(&rel).unwrap().is_zero(), label);
        acc.check("fixed by the center", (0..3).all(|k| mu3_act(k, c) == *c), label);
    }
    let want: BTreeMap<&str, i32> = [("V0", 1), ("V1", 2), ("V2", 2)].into_iter().collect();
    acc.check("one in V0, two in V1, two in V2", counts == want, || format!("{counts:?}"));
    // The V1/V2 points also come out of the closed forms.
    let (pi, mi) = (&e(-1) + &(&e(2) * &FieldElem::i()), &e(-1) - &(&e(2) * &FieldElem::i()));
    for c in [Component::V1, Component::V2] {
        let ok = closed_orbit(c, &pi, &mi, true).map(|o| o.u[..6].iter().all(FieldElem::is_zero)).unwrap_or(false);
        acc.check("closed forms reach the metabelian points", ok, || c.name().into());
    }
}

fn intersections(acc: &mut Acc) {
    let cases = [
        (CharCoords::from_ints([4, 4, 8, 8, 3, 3, 3, 3]), ComponentSet::of(&[Component::XTR, Component::XPR, Component::V0])),
        (
            CharCoords::from_ints([2, 2, 2, 2, 1, 1, 1, 1]),
            ComponentSet::of(&[Component::XPR, Component::V0, Component::V1, Component::V2]),
        ),
    ];
    for (c, want) in cases {
        for k in 0..3 {
            let img = mu3_act(k, &c);
            let got = classify(&img);
            acc.check(&format!("orbit of ({}) -> {}", c, want), got == want, || format!("{img} gave {got}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let names: std::collections::BTreeSet<_> = list_suites().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), 16);
        assert!(list_suites().iter().all(|s| !s.citation.is_empty()));
        assert!(run_suite("nope", Mode::Sampled, 1, 0).is_err());
        assert!(run_suite("V0-radical18", Mode::Symbolic, 1, 0).is_err());
    }

    #[test]
    fn symbolic_suites_pass() {
        for s in list_suites().iter().filter(|s| s.modes.contains(&Mode::Symbolic)) {
            let r = run_suite(s.name, Mode::Symbolic, 0, 0).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn sampled_suites_pass() {
        for s in list_suites() {
            let r = run_suite(s.name, Mode::Sampled, 3, 11).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suite("slice-roundtrip", Mode::Sampled, 4, 5).unwrap();
        let b = run_suite("slice-roundtrip", Mode::Sampled, 4, 5).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
    }
}
