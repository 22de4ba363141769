//! Command definitions and dispatch.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

use qkraw_core::corep::{h_element, h_right_element, t_element, MultiIndex3};
use qkraw_core::ncalg::{
    antipode, coproduct, normal_order_word, quantum_det, star, Gen, NCPoly, Reducer, Strategy,
};
use qkraw_core::qpoly::{bi_shift_scalar, bi_shift_target, coeff_c, kraw1, kraw2_tratnik, uni_shift_scalar, wall_pbar};
use qkraw_core::qscalar::{
    format_rational, q_binomial, q_multinomial, q_pochhammer_exact, rational_pow, rational_to_f64, LaurentScalar,
    QBase,
};
use qkraw_core::reps::{apply_matrix_element, TorusChar, Word};
use qkraw_core::verify::{run_suite, Suite, SuiteParams, SuiteReport};
use qkraw_core::QError;

use crate::emit::{self, fmt_float, Table};

/// Imaginary parts above this are reported as a failed reality check.
const IMAG_LIMIT: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(name = "qkraw", version, about = "Quantum SU_q(3) matrix elements and q-Krawtchouk polynomials")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Deformation parameter q in (0, 1), as a decimal or a ratio `a/b`.
    #[arg(long, global = true, default_value = "0.6")]
    pub q: QBase,
    /// Truncation K of each Fock leg.
    #[arg(long, global = true, default_value_t = 24)]
    pub trunc: usize,
    /// Tolerance for numeric checks (suite default if omitted).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV (tabular outputs only).
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-Pochhammer symbols and Gaussian (multi)nomials as exact Laurent polynomials.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Quantum q-Krawtchouk and Wall polynomials, shift scalars.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Normal ordering and Hopf maps in M_q(3).
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Corepresentation matrix elements.
    #[command(subcommand)]
    Corep(CorepCmd),
    /// Matrix elements evaluated in the representations π_w.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    /// (q^s; q^step)_n
    Poch {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, default_value_t = 1)]
        step: i64,
        #[arg(long)]
        n: usize,
    },
    /// Gaussian binomial [n k]_q.
    Binom {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: i64,
    },
    /// Gaussian multinomial [N; m₁, m₂, m₃]_q.
    Multinom {
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        m: MultiIndex3,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// k_n(q^{−2x}; q^{p_exp}, N, q²).
    Kraw1 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: u32,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long, allow_hyphen_values = true)]
        p_exp: i64,
    },
    /// K_{n₁,n₂}(x, y; q^{u}, q^{v}, N, q²).
    Kraw2 {
        #[arg(long, value_parser = parse_pair)]
        n: [u32; 2],
        #[arg(long, value_parser = parse_pair)]
        x: [u32; 2],
        #[arg(long, allow_hyphen_values = true)]
        u: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
        #[arg(long = "N")]
        big_n: u32,
    },
    /// Weighted, normalized Wall polynomial p̄_v(q^{2w}; q^{2s}; q²).
    Wall {
        #[arg(long)]
        v: i64,
        #[arg(long)]
        w: i64,
        #[arg(long)]
        s: i64,
    },
    /// Scalar of π₁/π₂(t_{m,n})|k⟩ with lattice size T.
    UniShift {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long = "T")]
        big_t: u32,
        #[arg(long)]
        k: i64,
    },
    /// Scalar and target of π₂₁(t_{m,n})|u, v⟩.
    BiShift {
        #[arg(long, value_parser = parse_pair)]
        m: [u32; 2],
        #[arg(long, value_parser = parse_pair)]
        n: [u32; 2],
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
    },
    /// Coefficient C_{m,n,j}(u, v, t) of the Wall product identity.
    CoeffC {
        #[arg(long, value_parser = parse_pair)]
        m: [u32; 2],
        #[arg(long, value_parser = parse_pair)]
        n: [u32; 2],
        #[arg(long)]
        j: u32,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        w: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Subcommand)]
pub enum AlgCmd {
    /// Normal-order a word such as `x22 x11`.
    NormalOrder {
        #[arg(required = true)]
        word: Vec<Gen>,
        #[arg(long, value_enum, default_value_t = Order::Leftmost)]
        strategy: Order,
    },
    /// Δ of a word.
    Coproduct {
        #[arg(required = true)]
        word: Vec<Gen>,
    },
    /// S of a word (anti-homomorphic extension of the minor map).
    Antipode {
        #[arg(required = true)]
        word: Vec<Gen>,
    },
    /// * of a word.
    Star {
        #[arg(required = true)]
        word: Vec<Gen>,
    },
    /// The quantum determinant.
    Det,
}

#[derive(Debug, Subcommand)]
pub enum CorepCmd {
    /// h_{m,n} (or h̃ with --right); --normalized adds the unitary factor at --q.
    Matel {
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        m: MultiIndex3,
        #[arg(long)]
        n: MultiIndex3,
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        right: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepCmd {
    /// π_w(t_{m,n})|state⟩ on the truncated basis.
    Apply {
        #[arg(long)]
        word: Word,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        m: MultiIndex3,
        #[arg(long)]
        n: MultiIndex3,
        #[arg(long, value_delimiter = ',')]
        state: Vec<usize>,
        /// Torus character angles θ₁,θ₂ (α_i = e^{iθ_i}).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        torus: Option<Vec<f64>>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    pub suite: Suite,
    /// Level N (suite default if omitted).
    #[arg(long = "N")]
    pub big_n: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample size for randomized suites; grid cap for wall-identity.
    #[arg(long)]
    pub count: Option<usize>,
}

fn parse_pair(s: &str) -> Result<[u32; 2], String> {
    let parts: Vec<_> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    match parts.as_slice() {
        [Ok(a), Ok(b)] => Ok([*a, *b]),
        _ => Err(format!("expected `a,b` with nonnegative integers, got `{s}`")),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: QError| {
        let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("{e}; known suites: {}", names.join(", "))
    })
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] QError),
    #[error("{0}")]
    Usage(String),
}

/// Rendered output and process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

enum Mode {
    Text,
    Json,
    Csv,
}

fn mode(g: &Global) -> Mode {
    if g.json {
        Mode::Json
    } else if g.csv {
        Mode::Csv
    } else {
        Mode::Text
    }
}

pub fn run(cli: &Cli) -> Result<Output, AppError> {
    let g = &cli.global;
    match &cli.command {
        Command::Series(c) => series(g, c),
        Command::Poly(c) => poly(g, c),
        Command::Alg(c) => alg(g, c),
        Command::Corep(c) => corep(g, c),
        Command::Rep(c) => rep(g, c),
        Command::Verify(a) => verify(g, a),
    }
}

fn no_csv(g: &Global) -> Result<(), AppError> {
    if g.csv {
        return Err(AppError::Usage("this command has no tabular form; use --json".into()));
    }
    Ok(())
}

fn laurent_out(g: &Global, l: &LaurentScalar) -> Result<Output, AppError> {
    no_csv(g)?;
    let value = l.eval(g.q.exact())?;
    if g.json {
        return Ok(Output::ok(emit::json(&json!({
            "laurent": l,
            "value": rational_to_f64(&value),
            "exact": format_rational(&value),
        }))));
    }
    Ok(Output::ok(format!("{l}\nat q = {}: {} = {}\n", g.q, format_rational(&value), fmt_float(rational_to_f64(&value)))))
}

fn series(g: &Global, c: &SeriesCmd) -> Result<Output, AppError> {
    match c {
        SeriesCmd::Poch { s, step, n } => laurent_out(g, &q_pochhammer_exact(*s, *step, *n)),
        SeriesCmd::Binom { n, k } => laurent_out(g, &q_binomial(*n, *k)),
        SeriesCmd::Multinom { big_n, m } => laurent_out(g, &q_multinomial(*big_n, m.0)?),
    }
}

fn scalar_out(g: &Global, z: Complex64, extra: Value) -> Result<Output, AppError> {
    no_csv(g)?;
    let residual = z.im.abs();
    let code = u8::from(residual > IMAG_LIMIT);
    let text = if g.json {
        let mut v = json!({ "value": z.re, "imag_residual": residual });
        if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
            map.extend(more);
        }
        emit::json_value(&v)
    } else {
        let mut s = format!("{}", z.re);
        if let Value::Object(more) = extra {
            for (k, v) in more {
                write!(s, "\n{k}: {v}").unwrap();
            }
        }
        if code != 0 {
            write!(s, "\nimaginary residual {} exceeds {IMAG_LIMIT:e}", fmt_float(residual)).unwrap();
        }
        s.push('\n');
        s
    };
    Ok(Output { text, code })
}

fn poly(g: &Global, c: &PolyCmd) -> Result<Output, AppError> {
    let q = &g.q;
    let b = q.squared();
    let none = json!({});
    let exact = |r: &num_rational::BigRational| json!({ "exact": format_rational(r) });
    match *c {
        PolyCmd::Kraw1 { n, x, big_n, p_exp } => {
            let r = kraw1(n, x, &rational_pow(q.exact(), p_exp), big_n, &b)?;
            scalar_out(g, Complex64::new(rational_to_f64(&r), 0.0), exact(&r))
        }
        PolyCmd::Kraw2 { n, x, u, v, big_n } => {
            let r = kraw2_tratnik(n[0], n[1], x[0], x[1], u, v, big_n, q.exact())?;
            scalar_out(g, Complex64::new(rational_to_f64(&r), 0.0), exact(&r))
        }
        PolyCmd::Wall { v, w, s } => scalar_out(g, Complex64::new(wall_pbar(v, w, s, q)?, 0.0), none),
        PolyCmd::UniShift { m, n, big_t, k } => {
            let target = k + i64::from(big_t) - i64::from(m) - i64::from(n);
            scalar_out(g, uni_shift_scalar(m, n, big_t, k, q)?, json!({ "target": target }))
        }
        PolyCmd::BiShift { m, n, big_n, u, v } => {
            let (tu, tv) = bi_shift_target(m, n, big_n, u, v);
            scalar_out(g, bi_shift_scalar(m, n, big_n, u, v, q)?, json!({ "target": [tu, tv] }))
        }
        PolyCmd::CoeffC { m, n, j, big_n, u, v, t, w } => scalar_out(g, coeff_c(m, n, j, big_n, u, v, t, w, q)?, none),
    }
}

fn poly_table(p: &NCPoly) -> Table {
    let mut t = Table::new(&["monomial", "coefficient"]);
    for (m, c) in p.terms() {
        t.push(vec![json!(m.key()), json!(c.to_string())]);
    }
    t
}

fn poly_out(g: &Global, p: &NCPoly) -> Output {
    Output::ok(match mode(g) {
        Mode::Json => emit::json(p),
        Mode::Csv => poly_table(p).to_csv(),
        Mode::Text => format!("{p}\n"),
    })
}

fn word_poly(word: &[Gen]) -> NCPoly {
    normal_order_word(word)
}

fn alg(g: &Global, c: &AlgCmd) -> Result<Output, AppError> {
    Ok(match c {
        AlgCmd::NormalOrder { word, strategy } => {
            let s = match strategy {
                Order::Leftmost => Strategy::LeftmostFirst,
                Order::Rightmost => Strategy::RightmostFirst,
            };
            let mut r = Reducer::new(s);
            poly_out(g, &r.reduce_word(word))
        }
        AlgCmd::Coproduct { word } => {
            let d = coproduct(&word_poly(word));
            let mut t = Table::new(&["left", "right", "coefficient"]);
            let mut map = BTreeMap::new();
            for ((a, b), c) in d.terms() {
                t.push(vec![json!(a.key()), json!(b.key()), json!(c.to_string())]);
                map.insert(format!("{}|{}", a.key(), b.key()), serde_json::to_value(c).expect("laurent"));
            }
            Output::ok(match mode(g) {
                Mode::Json => emit::json(&map),
                Mode::Csv => t.to_csv(),
                Mode::Text => t.rows.iter().map(|r| format!("{} ⊗ {}  {}\n", r[0], r[1], r[2])).collect(),
            })
        }
        AlgCmd::Antipode { word } => poly_out(g, &antipode(&word_poly(word))),
        AlgCmd::Star { word } => poly_out(g, &star(&word_poly(word))),
        AlgCmd::Det => poly_out(g, &quantum_det()),
    })
}

fn check_level(big_n: u32, m: &MultiIndex3, n: &MultiIndex3) -> Result<(), AppError> {
    if m.level() != big_n || n.level() != big_n {
        return Err(AppError::Usage(format!("--m {m} and --n {n} must both have level N = {big_n}")));
    }
    Ok(())
}

fn corep(g: &Global, c: &CorepCmd) -> Result<Output, AppError> {
    let CorepCmd::Matel { big_n, m, n, normalized, right } = *c;
    check_level(big_n, &m, &n)?;
    let h = if right { h_right_element(m, n)? } else { h_element(m, n)? };
    let factor = if normalized { Some(format!("{}", t_element(m, n, g.q.value())?.factor)) } else { None };
    Ok(Output::ok(match mode(g) {
        Mode::Json => match factor {
            Some(f) => emit::json(&json!({ "poly": h, "factor": f })),
            None => emit::json(&h),
        },
        Mode::Csv => poly_table(&h).to_csv(),
        Mode::Text => match factor {
            Some(f) => format!("{h}\nfactor at q = {}: {f}\n", g.q),
            None => format!("{h}\n"),
        },
    }))
}

fn rep(g: &Global, c: &RepCmd) -> Result<Output, AppError> {
    let RepCmd::Apply { word, big_n, m, n, state, torus } = c;
    check_level(*big_n, m, n)?;
    let torus = match torus.as_deref() {
        None => None,
        Some([a, b]) => Some(TorusChar::from_angles(*a, *b)),
        Some(_) => return Err(AppError::Usage("--torus takes two angles θ₁,θ₂".into())),
    };
    let img = apply_matrix_element(word, *m, *n, state, g.trunc, &g.q, torus)?;
    let key = |s: &Vec<usize>| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut t = Table::new(&["state", "re", "im"]);
    for (s, z) in &img {
        t.push(vec![json!(key(s)), json!(z.re), json!(z.im)]);
    }
    Ok(Output::ok(match mode(g) {
        Mode::Json => {
            let map: BTreeMap<String, [f64; 2]> = img.iter().map(|(s, z)| (key(s), [z.re, z.im])).collect();
            emit::json(&map)
        }
        Mode::Csv => t.to_csv(),
        Mode::Text => img
            .iter()
            .map(|(s, z)| format!("|{}⟩  {} {:+}i\n", key(s), fmt_float(z.re), fmt_float(z.im)))
            .collect(),
    }))
}

pub fn report_table(r: &SuiteReport) -> Table {
    let mut t = Table::new(&["description", "max_deviation", "tolerance", "exact", "pass"]);
    for c in &r.checks {
        t.push(vec![json!(c.description), json!(c.max_deviation), json!(c.tolerance), json!(c.exact), json!(c.pass)]);
    }
    t
}

fn verify(g: &Global, a: &VerifyArgs) -> Result<Output, AppError> {
    let d = SuiteParams::defaults(a.suite);
    let params = SuiteParams {
        level: a.big_n.unwrap_or(d.level),
        q: g.q.clone(),
        trunc: g.trunc,
        tol: g.tol.unwrap_or(d.tol),
        seed: a.seed,
        count: a.count.unwrap_or(d.count),
        ..d
    };
    let report = run_suite(a.suite, &params)?;
    let text = match mode(g) {
        Mode::Json => emit::json(&report),
        Mode::Csv => report_table(&report).to_csv(),
        Mode::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let dev = c.max_deviation.map_or("exact".to_string(), fmt_float);
                writeln!(s, "{}  {}  {dev}", if c.pass { "PASS" } else { "FAIL" }, c.description).unwrap();
            }
            let overall = if report.pass { "PASS" } else { "FAIL" };
            writeln!(s, "{} {overall} ({} checks)", report.suite, report.checks.len()).unwrap();
            s
        }
    };
    Ok(Output { text, code: u8::from(!report.pass) })
}
