mod repr_file;

use clap::{Parser, Subcommand, ValueEnum};
use fig8::components::{classify, classify_detail, classify_orbit, XprMembership};
use fig8::constructors::{
    closed_orbit, dehn_rep, slice_f, slice_g, slice_rep, v0_family, v1_family, v2_family, w_point_from, xpr_rep, xtr_rep,
    ConstructError, SlicePoint,
};
use fig8::coords::{extract, mu3_act, orbit_of_rep, sym_f, sym_h, CharCoords, Component, CoordError};
use fig8::grp::{Alphabet, GrpError, Representation, Word};
use fig8::numtower::{parse_elem_in, FieldElem, SqrtCtx};
use fig8::sl2::sl2_coords;
use fig8::verify::{list_suites, run_suite, Mode};
use repr_file::{sqrt_ctx, FileError, Loaded, ReprFile};
use serde::Deserialize;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EMPTY: u8 = 3;
const EXIT_RELATION: u8 = 4;
const EXIT_EXCLUDED: u8 = 5;

#[derive(Parser)]
#[command(name = "fig8", version, about = "Exact character-variety computations for the figure-eight knot group")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report every component containing a point.
    Classify {
        /// y,yb,z,zb,alpha,alphab,beta,betab as element strings.
        #[arg(long, allow_hyphen_values = true, required_unless_present_any = ["file", "rep"])]
        coords: Option<String>,
        /// JSON point file: {"coords": [...8 strings], "sqrt": "D"}.
        #[arg(long, conflicts_with = "coords")]
        file: Option<PathBuf>,
        /// Representation file, classified through its orbit coordinates.
        #[arg(long, conflicts_with_all = ["coords", "file"])]
        rep: Option<PathBuf>,
        /// Square-root modulus D, making `s` denote a root of D.
        #[arg(long, allow_hyphen_values = true)]
        sqrt: Option<String>,
    },
    /// Trace coordinates of a representation file.
    Trace {
        #[arg(long)]
        rep: PathBuf,
        /// Center-invariant coordinates (also works for GL3 representations).
        #[arg(long)]
        orbit: bool,
    },
    /// Build a representation on a component and write it as JSON.
    Construct {
        #[arg(long, value_enum)]
        component: ConstructKind,
        /// XTR: y,yb. XPR: s,lambda. V0/V1/V2: two parameters. SLICE: nu,nub.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long, default_value = "+", value_parser = ["+", "-"])]
        branch: String,
        /// SLICE only: pull back to the knot group, landing on this component.
        #[arg(long, value_parser = ["V1", "V2"])]
        dehn: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sqrt: Option<String>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an identity suite.
    Suite {
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        #[arg(long, value_enum, default_value = "sampled")]
        mode: ModeArg,
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// List suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Apply f*, h*, or the center generator to a point.
    Symmetry {
        #[arg(long, value_parser = ["f", "h", "w"])]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        #[arg(long, allow_hyphen_values = true)]
        sqrt: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    #[value(name = "XTR")]
    Xtr,
    #[value(name = "XPR")]
    Xpr,
    #[value(name = "V0")]
    V0,
    #[value(name = "V1")]
    V1,
    #[value(name = "V2")]
    V2,
    #[value(name = "SLICE")]
    Slice,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Sampled,
}

/// An error with its exit code.
struct Failure(u8, String);

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        let code = match e {
            FileError::Group(GrpError::Relation(_)) => EXIT_RELATION,
            _ => EXIT_PARSE,
        };
        Failure(code, e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        let code = match &e {
            ConstructError::Group(GrpError::Relation(_)) => EXIT_RELATION,
            ConstructError::Branch(_) => EXIT_PARSE,
            _ => EXIT_EXCLUDED,
        };
        Failure(code, e.to_string())
    }
}

impl From<CoordError> for Failure {
    fn from(e: CoordError) -> Self {
        let code = match &e {
            CoordError::Arity(_) | CoordError::Elem(..) => EXIT_PARSE,
            CoordError::Group(GrpError::Relation(_)) => EXIT_RELATION,
            _ => EXIT_FAIL,
        };
        Failure(code, e.to_string())
    }
}

impl From<GrpError> for Failure {
    fn from(e: GrpError) -> Self {
        let code = if matches!(e, GrpError::Relation(_)) { EXIT_RELATION } else { EXIT_FAIL };
        Failure(code, e.to_string())
    }
}

fn parse_failure(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_PARSE, e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, Failure> {
    match cmd {
        Cmd::Classify { rep: Some(rep), .. } => classify_rep_cmd(&rep),
        Cmd::Classify { coords, file, sqrt, .. } => classify_cmd(coords, file, sqrt),
        Cmd::Trace { rep, orbit } => trace_cmd(&rep, orbit),
        Cmd::Construct { component, params, branch, dehn, sqrt, out } => {
            construct_cmd(component, &params, branch == "+", dehn.as_deref(), sqrt, out)
        }
        Cmd::Suite { name, mode, n, seed, json, list } => suite_cmd(name, mode, n, seed, json, list),
        Cmd::Symmetry { op, coords, sqrt } => symmetry_cmd(&op, &coords, sqrt),
    }
}

fn ctx_of(sqrt: Option<String>) -> Result<Option<SqrtCtx>, Failure> {
    Ok(sqrt.as_deref().map(sqrt_ctx).transpose()?)
}

#[derive(Deserialize)]
struct PointFile {
    coords: Vec<String>,
    #[serde(default)]
    sqrt: Option<String>,
}

fn classify_cmd(coords: Option<String>, file: Option<PathBuf>, sqrt: Option<String>) -> Result<u8, Failure> {
    let (text, sqrt) = match (coords, file) {
        (Some(c), _) => (c, sqrt),
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(&path).map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
            let pf: PointFile = serde_json::from_str(&raw).map_err(parse_failure)?;
            (pf.coords.join(","), pf.sqrt.or(sqrt))
        }
        (None, None) => return Err(parse_failure("either --coords or --file is required")),
    };
    let ctx = ctx_of(sqrt)?;
    let c = CharCoords::parse(&text, ctx.as_ref())?;
    let detail = classify_detail(&c);
    println!("{}", detail.set);
    match detail.xpr {
        XprMembership::Member { v, w, x1 } => println!("XPR parameters: v={v} w={w} x1={x1}"),
        XprMembership::Undecided => println!("XPR: undecided (common root outside the field)"),
        XprMembership::NotMember => {}
    }
    Ok(if detail.set.is_empty() { EXIT_EMPTY } else { 0 })
}

fn classify_rep_cmd(path: &PathBuf) -> Result<u8, Failure> {
    let rho = match load_file(path)? {
        Loaded::Three(rho) if rho.alphabet() != Alphabet::KL => rho,
        _ => return Err(parse_failure("classify --rep expects a 3x3 representation of the knot group")),
    };
    let set = classify_orbit(&orbit_of_rep(&rho)?)?;
    println!("{set}");
    Ok(if set.is_empty() { EXIT_EMPTY } else { 0 })
}

fn load_file(path: &PathBuf) -> Result<Loaded, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    let loaded = ReprFile::from_json(&raw)?.load()?;
    match &loaded {
        Loaded::Three(rho) => rho.check_relations()?,
        Loaded::Two(rho) => rho.check_relations()?,
    }
    Ok(loaded)
}

fn trace_cmd(path: &PathBuf, orbit: bool) -> Result<u8, Failure> {
    match load_file(path)? {
        Loaded::Two(rho) => {
            let rho = if rho.alphabet() == Alphabet::TAB { rho } else { rho.to_alphabet(Alphabet::TAB)? };
            let c = sl2_coords(&rho).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
            println!("x1={} x2={} y0={}", c.x1, c.x2, c.y0);
        }
        Loaded::Three(rho) if rho.alphabet() == Alphabet::KL => {
            let p = slice_point_of(&rho)?;
            let q = slice_f(&p)?;
            println!("nu={} nub={} zeta={}", q.nu, q.nub, q.zeta);
        }
        Loaded::Three(rho) if orbit => println!("{}", orbit_of_rep(&rho)?),
        Loaded::Three(rho) => {
            let c = extract(&rho)?;
            match &c.eta {
                Some(eta) => println!("{c} eta={eta}"),
                None => println!("{c}"),
            }
        }
    }
    Ok(0)
}

/// Read (x0, x1, y0, y1) back from the displayed shape of K and L.
fn slice_point_of(rho: &Representation) -> Result<SlicePoint, Failure> {
    let w = |s: &str| s.parse::<Word>().expect("generator word");
    let k = rho.eval(&w("k"))?;
    let l = rho.eval(&w("l"))?;
    let p = SlicePoint::new(k.m[1][0].clone(), k.m[1][2].clone(), l.m[0][1].clone(), l.m[0][2].clone())?;
    if slice_rep(&p)?.image(fig8::grp::Gen::K) != rho.image(fig8::grp::Gen::K)
        || slice_rep(&p)?.image(fig8::grp::Gen::L) != rho.image(fig8::grp::Gen::L)
    {
        return Err(Failure(EXIT_FAIL, "KL file is not in slice normal form".into()));
    }
    Ok(p)
}

fn params(text: &str, ctx: Option<&SqrtCtx>, want: usize) -> Result<Vec<FieldElem>, Failure> {
    let v = text
        .split(',')
        .map(|s| parse_elem_in(s, ctx).map_err(|e| parse_failure(format!("parameter `{s}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != want {
        return Err(parse_failure(format!("expected {want} comma-separated parameters, got {}", v.len())));
    }
    Ok(v)
}

fn construct_cmd(
    kind: ConstructKind,
    text: &str,
    plus: bool,
    dehn: Option<&str>,
    sqrt: Option<String>,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let ctx = ctx_of(sqrt)?;
    let p = params(text, ctx.as_ref(), 2)?;
    let (a, b) = (&p[0], &p[1]);
    if dehn.is_some() && !matches!(kind, ConstructKind::Slice) {
        return Err(parse_failure("--dehn applies to SLICE only"));
    }
    let rho = match kind {
        ConstructKind::Xtr => xtr_rep(a, b),
        ConstructKind::Xpr => xpr_rep(a, b, if plus { 0 } else { 1 })?,
        ConstructKind::V0 => match v0_family(a, b, plus) {
            Ok(f) => f.rep,
            Err(e @ ConstructError::Excluded(_)) => semisimple_v0(a, b, plus).ok_or(e)?,
            Err(e) => return Err(e.into()),
        },
        ConstructKind::V1 => v1_family(a, b, plus)?.rep,
        ConstructKind::V2 => v2_family(a, b, plus)?.rep,
        ConstructKind::Slice => {
            let q = w_point_from(a, b, plus)?;
            let x = slice_g(&q)?;
            match dehn {
                Some(t) => dehn_rep(&x, Component::by_name(t).expect("validated by clap"))?,
                None => slice_rep(&x)?,
            }
        }
    };
    let json = ReprFile::from_rep(&rho).to_json();
    match out {
        Some(path) => std::fs::write(&path, json).map_err(|e| Failure(EXIT_FAIL, format!("{}: {e}", path.display())))?,
        None => print!("{json}"),
    }
    Ok(0)
}

/// On the excluded lines of the V0 family, a totally reducible representative
/// of the closed-form orbit when one exists over the field.
fn semisimple_v0(a: &FieldElem, b: &FieldElem, plus: bool) -> Option<Representation> {
    let c = closed_orbit(Component::V0, a, b, plus).ok()?.lift()?;
    if !classify(&c).contains(Component::XTR) {
        return None;
    }
    eprintln!("note: V0 family excluded here; writing the totally reducible representative");
    Some(xtr_rep(&c.y, &c.yb))
}

fn suite_cmd(name: Option<String>, mode: ModeArg, n: usize, seed: u64, json: bool, list: bool) -> Result<u8, Failure> {
    if list {
        for s in list_suites() {
            let modes: Vec<String> = s.modes.iter().map(|m| m.to_string()).collect();
            println!("{:<24} [{}] {}", s.name, modes.join(","), s.citation);
        }
        return Ok(0);
    }
    let name = name.expect("required unless --list");
    let mode = match mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Sampled => Mode::Sampled,
    };
    let report = run_suite(&name, mode, n, seed).map_err(parse_failure)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

fn symmetry_cmd(op: &str, coords: &str, sqrt: Option<String>) -> Result<u8, Failure> {
    let ctx = ctx_of(sqrt)?;
    let c = CharCoords::parse(coords, ctx.as_ref())?;
    let img = match op {
        "f" => sym_f(&c),
        "h" => sym_h(&c),
        _ => mu3_act(1, &c),
    };
    println!("{img}");
    Ok(0)
}
