//! Named verification suites producing deterministic reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corep::{
    coaction_expand, comodule_defect, h_element, index_matrices, level_multinomial, row_multinomial,
    col_multinomial, t_element, MatrixElementTable, MultiIndex3,
};
use crate::ncalg::{
    antipode, coproduct, coproduct_left, coproduct_right, counit_left, counit_right, defining_relations,
    det_minus_one, quantum_det, Gen, Monomial, NCPoly, Reducer, Strategy,
};
use crate::qpoly::{
    kraw1_orthogonality, kraw2_dual_orthogonality, kraw2_orthogonality, simplex, wall_identity_grid,
    wall_identity_sides,
};
use crate::qscalar::{q_binomial, q_multinomial, rational_pow, LaurentScalar, QBase};
use crate::reps::{
    closed_form_image, completeness_defect, homomorphy_defect, image_deviation, relation_defect, star_defect,
    ImageDeviation, TorusChar, WordRep,
};
use crate::{QError, QResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    UniMatch,
    BiMatch,
    Unitarity,
    Orthogonality,
    DualOrth,
    Hexagon,
    Hopf,
    Comodule,
    WallIdentity,
    OracleH,
    Confluence,
    Multinomial,
    QOne,
    Relations,
    Star,
    Homomorphy,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::UniMatch,
        Suite::BiMatch,
        Suite::Unitarity,
        Suite::Orthogonality,
        Suite::DualOrth,
        Suite::Hexagon,
        Suite::Hopf,
        Suite::Comodule,
        Suite::WallIdentity,
        Suite::OracleH,
        Suite::Confluence,
        Suite::Multinomial,
        Suite::QOne,
        Suite::Relations,
        Suite::Star,
        Suite::Homomorphy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::UniMatch => "uni-match",
            Suite::BiMatch => "bi-match",
            Suite::Unitarity => "unitarity",
            Suite::Orthogonality => "orthogonality",
            Suite::DualOrth => "dual-orth",
            Suite::Hexagon => "hexagon",
            Suite::Hopf => "hopf",
            Suite::Comodule => "comodule",
            Suite::WallIdentity => "wall-identity",
            Suite::OracleH => "oracle-h",
            Suite::Confluence => "confluence",
            Suite::Multinomial => "multinomial",
            Suite::QOne => "q-one",
            Suite::Relations => "relations",
            Suite::Star => "star",
            Suite::Homomorphy => "homomorphy",
        }
    }

    /// Level N used when none is given.
    pub fn default_level(self) -> u32 {
        match self {
            Suite::UniMatch => 4,
            Suite::BiMatch | Suite::DualOrth => 3,
            Suite::Unitarity | Suite::Comodule | Suite::WallIdentity | Suite::OracleH => 2,
            Suite::Orthogonality => 6,
            Suite::Multinomial => 5,
            Suite::QOne => 12,
            _ => 0,
        }
    }

    /// Largest accepted level, or `None` for suites without a level parameter.
    pub fn max_level(self) -> Option<u32> {
        match self {
            Suite::UniMatch => Some(8),
            Suite::BiMatch | Suite::OracleH => Some(4),
            Suite::Unitarity | Suite::Comodule | Suite::WallIdentity => Some(3),
            Suite::Orthogonality | Suite::DualOrth => Some(8),
            Suite::Multinomial => Some(7),
            Suite::QOne => Some(40),
            _ => None,
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            Suite::WallIdentity | Suite::DualOrth | Suite::Orthogonality => 1e-8,
            _ => 1e-10,
        }
    }

    pub fn default_count(self) -> usize {
        match self {
            Suite::Confluence => 500,
            Suite::Homomorphy => 8,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = QError;

    fn from_str(s: &str) -> QResult<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| QError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub level: u32,
    pub q: QBase,
    pub trunc: usize,
    pub tol: f64,
    /// Absolute bound for entries expected to vanish.
    pub zero_tol: f64,
    pub seed: u64,
    /// Sample size for randomized suites; for `wall-identity` a cap on grid points (0 = all).
    pub count: usize,
}

impl SuiteParams {
    pub fn defaults(suite: Suite) -> Self {
        Self {
            level: suite.default_level(),
            q: QBase::from_ratio(3, 5).expect("0 < 3/5 < 1"),
            trunc: 24,
            tol: suite.default_tol(),
            zero_tol: 1e-12,
            seed: 0,
            count: suite.default_count(),
        }
    }
}

/// Parameters as they appear in a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportParams {
    pub level: u32,
    pub q: String,
    pub trunc: usize,
    pub tol: f64,
    pub zero_tol: f64,
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub description: String,
    /// Largest deviation seen; absent for exact comparisons.
    pub max_deviation: Option<f64>,
    pub tolerance: Option<f64>,
    pub exact: bool,
    pub pass: bool,
}

impl Check {
    pub fn exact(description: impl Into<String>, pass: bool) -> Self {
        Self { description: description.into(), max_deviation: None, tolerance: None, exact: true, pass }
    }

    pub fn within(description: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self {
            description: description.into(),
            max_deviation: Some(deviation),
            tolerance: Some(tolerance),
            exact: false,
            pass: deviation <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: ReportParams,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: Suite, params: &SuiteParams, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.description.cmp(&b.description));
        let pass = checks.iter().all(|c| c.pass);
        let params = ReportParams {
            level: params.level,
            q: params.q.to_string(),
            trunc: params.trunc,
            tol: params.tol,
            zero_tol: params.zero_tol,
            seed: params.seed,
            count: params.count,
        };
        Self { suite: suite.name().to_string(), params, checks, pass }
    }

    /// Largest numeric deviation across checks.
    pub fn max_deviation(&self) -> Option<f64> {
        self.checks.iter().filter_map(|c| c.max_deviation).reduce(f64::max)
    }
}

fn validate(suite: Suite, p: &SuiteParams) -> QResult<()> {
    if let Some(max) = suite.max_level() {
        if p.level > max {
            return Err(QError::OutOfRange(format!("{suite} accepts N ≤ {max}, got {}", p.level)));
        }
    }
    if !(p.tol > 0.0 && p.zero_tol > 0.0) {
        return Err(QError::OutOfRange("tolerances must be positive".into()));
    }
    let needs_window = matches!(
        suite,
        Suite::BiMatch | Suite::Unitarity | Suite::Relations | Suite::Star | Suite::Homomorphy | Suite::Hexagon
    );
    let reach = match suite {
        Suite::Relations | Suite::Hexagon => 3,
        Suite::Star => 2,
        Suite::Homomorphy => 4,
        _ => p.level as usize,
    };
    if needs_window && p.trunc <= 2 * reach {
        return Err(QError::OutOfRange(format!(
            "truncation {} leaves an empty safe window for degree {reach}",
            p.trunc
        )));
    }
    if suite == Suite::UniMatch && p.trunc <= p.level as usize {
        return Err(QError::OutOfRange(format!("truncation {} must exceed N = {}", p.trunc, p.level)));
    }
    Ok(())
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> QResult<SuiteReport> {
    validate(suite, params)?;
    let checks = match suite {
        Suite::UniMatch => uni_match(params)?,
        Suite::BiMatch => bi_match(params)?,
        Suite::Unitarity => unitarity(params)?,
        Suite::Orthogonality => orthogonality(params)?,
        Suite::DualOrth => dual_orth(params)?,
        Suite::Hexagon => hexagon(params),
        Suite::Hopf => hopf(),
        Suite::Comodule => comodule(params),
        Suite::WallIdentity => wall_identity(params)?,
        Suite::OracleH => oracle_h(params)?,
        Suite::Confluence => confluence(params),
        Suite::Multinomial => multinomial(params)?,
        Suite::QOne => q_one(params)?,
        Suite::Relations => relations(params),
        Suite::Star => star(params),
        Suite::Homomorphy => homomorphy(params),
    };
    Ok(SuiteReport::new(suite, params, checks))
}

fn levels(p: &SuiteParams) -> impl Iterator<Item = u32> {
    0..=p.level
}

fn pairs(level: u32) -> Vec<(MultiIndex3, MultiIndex3)> {
    let idx = MultiIndex3::all_at_level(level);
    idx.iter().flat_map(|&m| idx.iter().map(move |&n| (m, n))).collect()
}

/// Compares π_w(t_{m,n})|s⟩ with its closed form over every (m, n) at levels ≤ N.
fn match_closed_form(rep: &WordRep, p: &SuiteParams, states: impl Fn(u32) -> Vec<Vec<usize>>) -> QResult<Vec<Check>> {
    let mut checks = Vec::new();
    for level in levels(p) {
        let st = states(level);
        let dev = pairs(level)
            .into_par_iter()
            .map(|(m, n)| {
                let t = t_element(m, n, rep.q())?;
                let mut dev = ImageDeviation::default();
                for s in &st {
                    let got = rep.element_image(&t, s);
                    let want = closed_form_image(rep.word(), m, n, s, &p.q)?.expect("word has a closed form");
                    dev = dev.max(image_deviation(&got, &want));
                }
                Ok(dev)
            })
            .collect::<QResult<Vec<_>>>()?
            .into_iter()
            .fold(ImageDeviation::default(), ImageDeviation::max);
        let w = rep.word();
        checks.push(Check::within(
            format!("π{w} N={level}: representation vs closed form, relative"),
            dev.relative,
            p.tol,
        ));
        checks.push(Check::within(
            format!("π{w} N={level}: representation vs closed form, vanishing entries"),
            dev.vanishing,
            p.zero_tol,
        ));
    }
    Ok(checks)
}

fn uni_match(p: &SuiteParams) -> QResult<Vec<Check>> {
    let mut checks = Vec::new();
    for w in ["1", "2"] {
        let rep = WordRep::new(&w.parse()?, p.trunc, &p.q, None);
        // The lower edge |0⟩ is the true edge of the basis, so only the top is cut.
        let top = |level: u32| (0..p.trunc - level as usize).take(13).map(|k| vec![k]).collect();
        checks.extend(match_closed_form(&rep, p, top)?);
    }
    Ok(checks)
}

fn bi_match(p: &SuiteParams) -> QResult<Vec<Check>> {
    let rep = WordRep::new(&"21".parse()?, p.trunc, &p.q, None);
    let space = rep.space();
    let window = |level: u32| space.window_states(level as usize).into_iter().map(|i| space.state(i)).collect();
    match_closed_form(&rep, p, window)
}

fn unitarity(p: &SuiteParams) -> QResult<Vec<Check>> {
    let rep = WordRep::new(&"121".parse()?, p.trunc, &p.q, None);
    let mut checks = Vec::new();
    for level in levels(p) {
        let (rows, cols) = completeness_defect(&rep, level)?;
        checks.push(Check::within(format!("π121 N={level}: Σ_n t(m,n) t(p,n)† = δ Id"), rows, p.tol));
        checks.push(Check::within(format!("π121 N={level}: Σ_m t(m,n)† t(m,p) = δ Id"), cols, p.tol));
    }
    Ok(checks)
}

fn delta(a: bool) -> Complex64 {
    Complex64::new(if a { 1.0 } else { 0.0 }, 0.0)
}

fn orthogonality(p: &SuiteParams) -> QResult<Vec<Check>> {
    let b = p.q.squared();
    let mut checks = Vec::new();
    for big_n in levels(p) {
        let mut uni = 0.0_f64;
        for k in big_n as i64..=big_n as i64 + 4 {
            let pp = rational_pow(&b, -(k + 1));
            for n in 0..=big_n {
                for n2 in 0..=big_n {
                    let o = kraw1_orthogonality(n, n2, &pp, big_n, &b)?;
                    uni = uni.max((o - delta(n == n2)).norm());
                }
            }
        }
        checks.push(Check::within(format!("univariate N={big_n}: Σ_x w² k_n k_n' Θ_n Θ_n' = δ"), uni, p.tol));
        let mut bi = 0.0_f64;
        for (u, v) in display_points(big_n) {
            for a in simplex(big_n) {
                for c in simplex(big_n) {
                    let o = kraw2_orthogonality(a, c, big_n, u, v, p.q.exact())?;
                    bi = bi.max((o - delta(a == c)).norm());
                }
            }
        }
        checks.push(Check::within(format!("bivariate N={big_n}: Σ_n W² K_m K_m' N_m N_m' = δ"), bi, p.tol));
    }
    Ok(checks)
}

/// Display parameters (u, v) at which bivariate (dual) orthogonality is probed.
fn display_points(big_n: u32) -> Vec<(i64, i64)> {
    let n = big_n as i64;
    (n..n + 4).flat_map(|u| (n..n + 4).map(move |v| (u, v))).collect()
}

fn dual_orth(p: &SuiteParams) -> QResult<Vec<Check>> {
    let mut checks = Vec::new();
    for big_n in levels(p) {
        let mut dev = 0.0_f64;
        for (u, v) in display_points(big_n) {
            for a in simplex(big_n) {
                for c in simplex(big_n) {
                    let d = kraw2_dual_orthogonality(a, c, big_n, u, v, p.q.exact())?;
                    dev = dev.max((d - delta(a == c)).norm());
                }
            }
        }
        checks.push(Check::within(format!("N={big_n}: Σ_k t21(k,n) t21(k,p) = δ"), dev, p.tol));
    }
    Ok(checks)
}

fn x(i: usize, j: usize) -> NCPoly {
    NCPoly::generator(Gen::new(i, j))
}

fn hexagon(p: &SuiteParams) -> Vec<Check> {
    let det = quantum_det();
    let mut left_ok = true;
    let mut right_ok = true;
    for i in 1..=3 {
        for j in 1..=3 {
            let mut left = NCPoly::zero();
            let mut right = NCPoly::zero();
            for k in 1..=3 {
                left = &left + &(&x(i, k) * &antipode(&x(k, j)));
                right = &right + &(&antipode(&x(i, k)) * &x(k, j));
            }
            let expect = if i == j { det.clone() } else { NCPoly::zero() };
            left_ok &= left == expect;
            right_ok &= right == expect;
        }
    }
    let rep = WordRep::new(&"121".parse().expect("word"), p.trunc, &p.q, None);
    let space = rep.space();
    let window = space.window_states(3);
    let mut dev = 0.0_f64;
    for i in 1..=3 {
        for j in 1..=3 {
            let d = window
                .par_iter()
                .map(|&s| {
                    let e = crate::reps::SparseVec::from([(s, Complex64::new(1.0, 0.0))]);
                    let mut acc = crate::reps::SparseVec::new();
                    for k in 1..=3 {
                        let inner = rep.apply_poly(&antipode(&x(k, j)), &e);
                        for (r, z) in rep.apply_poly(&x(i, k), &inner) {
                            *acc.entry(r).or_default() += z;
                        }
                    }
                    *acc.entry(s).or_default() -= delta(i == j);
                    acc.iter()
                        .filter(|(r, _)| space.in_window(**r, 3))
                        .map(|(_, z)| z.norm())
                        .fold(0.0, f64::max)
                })
                .reduce(|| 0.0, f64::max);
            dev = dev.max(d);
        }
    }
    vec![
        Check::exact("symbolic: Σ_k x_ik S(x_kj) = δ_ij det_q", left_ok),
        Check::exact("symbolic: Σ_k S(x_ik) x_kj = δ_ij det_q", right_ok),
        Check::within("π121: Σ_k π(x_ik) π(S(x_kj)) = δ_ij Id", dev, p.tol),
    ]
}

fn hopf() -> Vec<Check> {
    let mut coassoc = true;
    let mut counit = true;
    for g in Gen::all() {
        let d = coproduct(&NCPoly::generator(g));
        coassoc &= coproduct_left(&d) == coproduct_right(&d);
        counit &= counit_left(&d) == NCPoly::generator(g) && counit_right(&d) == NCPoly::generator(g);
    }
    let mut reducer = Reducer::default();
    let compatible = defining_relations().iter().all(|r| r.coproduct(&mut reducer).is_zero());
    let reduced = defining_relations().iter().all(|r| r.reduce(&mut reducer).is_zero());
    vec![
        Check::exact("(Δ⊗id)Δ = (id⊗Δ)Δ on generators", coassoc),
        Check::exact("(ε⊗id)Δ = id = (id⊗ε)Δ on generators", counit),
        Check::exact("Δ annihilates every defining relation", compatible),
        Check::exact("every defining relation normal-orders to 0", reduced),
    ]
}

fn comodule(p: &SuiteParams) -> Vec<Check> {
    levels(p)
        .map(|level| {
            let table = MatrixElementTable::build(level);
            let ok = pairs(level).par_iter().all(|&(m, q)| comodule_defect(&table, m, q).is_zero());
            Check::exact(format!("N={level}: Δ(h_mp) = Σ_n h_mn ⊗ h_np"), ok)
        })
        .collect()
}

fn wall_identity(p: &SuiteParams) -> QResult<Vec<Check>> {
    let mut grid = wall_identity_grid(p.level);
    if p.count > 0 && p.count < grid.len() {
        let stride = grid.len().div_ceil(p.count);
        grid = grid.into_iter().step_by(stride).collect();
    }
    let dev = grid
        .par_iter()
        .map(|pt| wall_identity_sides(pt, &p.q).map(|(l, r)| (l - r).norm()))
        .collect::<QResult<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    Ok(vec![Check::within(
        format!("Wall product identity at {} grid points, N ≤ {}", grid.len(), p.level),
        dev,
        p.tol,
    )])
}

fn oracle_h(p: &SuiteParams) -> QResult<Vec<Check>> {
    let mut checks = Vec::new();
    for level in levels(p) {
        let ms = MultiIndex3::all_at_level(level);
        let ok = ms
            .par_iter()
            .map(|&m| {
                let expanded = coaction_expand(m);
                for n in MultiIndex3::all_at_level(level) {
                    let h = h_element(m, n)?;
                    if expanded.get(&n).cloned().unwrap_or_else(NCPoly::zero) != h {
                        return Ok(false);
                    }
                }
                Ok(expanded.keys().all(|n| n.level() == level))
            })
            .collect::<QResult<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        checks.push(Check::exact(format!("N={level}: coaction coefficients equal h_mn"), ok));
    }
    Ok(checks)
}

/// Seeded random words of length 0..=6 over the nine generators.
pub fn random_words(seed: u64, count: usize) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=6);
            (0..len).map(|_| rng.gen_range(0..9u8)).collect()
        })
        .collect()
}

fn confluence(p: &SuiteParams) -> Vec<Check> {
    let words = random_words(p.seed, p.count);
    let mut left = Reducer::new(Strategy::LeftmostFirst);
    let mut right = Reducer::new(Strategy::RightmostFirst);
    let agree = words.iter().all(|w| left.reduce(w) == right.reduce(w));
    vec![Check::exact(
        format!("{} random words: leftmost-first = rightmost-first", words.len()),
        agree,
    )]
}

fn multinomial(p: &SuiteParams) -> QResult<Vec<Check>> {
    let mut checks = Vec::new();
    for level in levels(p) {
        let mut ok = true;
        for (m, n) in pairs(level) {
            for a in index_matrices(m, n)? {
                ok &= level_multinomial(m) * row_multinomial(&a) == level_multinomial(n) * col_multinomial(&a);
            }
        }
        checks.push(Check::exact(format!("N={level}: [N m][m a] = [N n][n a] at q⁻²"), ok));
    }
    Ok(checks)
}

fn classical_binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn q_one(p: &SuiteParams) -> QResult<Vec<Check>> {
    let one = BigRational::one();
    let mut binom = true;
    let mut multi = true;
    for n in 0..=p.level {
        for k in 0..=n {
            binom &= q_binomial(n, k as i64).eval(&one)? == BigRational::from(classical_binomial(n, k));
        }
        for m in MultiIndex3::all_at_level(n) {
            let [a, b, _] = m.0;
            let classical = classical_binomial(n, a) * classical_binomial(n - a, b);
            multi &= q_multinomial(n, m.0)?.eval(&one)? == BigRational::from(classical);
        }
    }
    Ok(vec![
        Check::exact(format!("n ≤ {}: q-binomial at q = 1 is the binomial", p.level), binom),
        Check::exact(format!("N ≤ {}: q-multinomial at q = 1 is the multinomial", p.level), multi),
    ])
}

const WORDS: [&str; 4] = ["1", "2", "21", "121"];

/// The untwisted representation plus two seeded torus characters.
fn tori(seed: u64) -> Vec<Option<TorusChar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = std::f64::consts::TAU;
    let mut out = vec![None];
    for _ in 0..2 {
        out.push(Some(TorusChar::from_angles(rng.gen_range(0.0..tau), rng.gen_range(0.0..tau))));
    }
    out
}

fn torus_label(i: usize) -> String {
    if i == 0 { String::new() } else { format!(" ⊗ ρ_τ{i}") }
}

fn relations(p: &SuiteParams) -> Vec<Check> {
    let rels: Vec<_> = defining_relations().into_iter().chain([det_minus_one()]).collect();
    let mut checks = Vec::new();
    for w in WORDS {
        for (i, torus) in tori(p.seed).into_iter().enumerate() {
            let rep = WordRep::new(&w.parse().expect("word"), p.trunc, &p.q, torus);
            let dev = rels.iter().map(|r| relation_defect(&rep, r)).fold(0.0, f64::max);
            checks.push(Check::within(
                format!("π{w}{}: {} relations and det_q − 1 vanish", torus_label(i), rels.len() - 1),
                dev,
                p.zero_tol,
            ));
        }
    }
    checks
}

fn star(p: &SuiteParams) -> Vec<Check> {
    let mut checks = Vec::new();
    for w in WORDS {
        for (i, torus) in tori(p.seed).into_iter().enumerate() {
            let rep = WordRep::new(&w.parse().expect("word"), p.trunc, &p.q, torus);
            checks.push(Check::within(
                format!("π{w}{}: π(x_ij*) = π(x_ij)†", torus_label(i)),
                star_defect(&rep),
                p.tol,
            ));
        }
    }
    checks
}

/// Seeded random element of degree ≤ 2 with small Laurent coefficients.
pub fn random_element(rng: &mut impl Rng) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=2);
        let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(0..9u8)).collect();
        let c = LaurentScalar::monomial(BigRational::from_integer(rng.gen_range(-3..=3).into()), rng.gen_range(-2..=2));
        out.add_term(Monomial::from_letters(&letters), c);
    }
    if out.is_zero() { NCPoly::one() } else { out }
}

fn homomorphy(p: &SuiteParams) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let samples: Vec<(NCPoly, NCPoly)> = (0..p.count).map(|_| (random_element(&mut rng), random_element(&mut rng))).collect();
    WORDS
        .iter()
        .map(|w| {
            let rep = WordRep::new(&w.parse().expect("word"), p.trunc, &p.q, None);
            let dev = samples.iter().map(|(a, b)| homomorphy_defect(&rep, a, b)).fold(0.0, f64::max);
            Check::within(format!("π{w}: π(a·b) = π(a)π(b) on {} random pairs", samples.len()), dev, p.tol)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite) -> SuiteParams {
        SuiteParams { level: 1, trunc: 10, count: 20, ..SuiteParams::defaults(suite) }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("nope".parse::<Suite>(), Err(QError::UnknownSuite("nope".into())));
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [Suite::Confluence, Suite::Multinomial, Suite::QOne, Suite::OracleH, Suite::Comodule, Suite::Hopf] {
            let r = run_suite(s, &quick(s)).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn level_zero_unitarity_is_trivial() {
        let p = SuiteParams { level: 0, trunc: 6, ..SuiteParams::defaults(Suite::Unitarity) };
        let r = run_suite(Suite::Unitarity, &p).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_deviation(), Some(0.0));
    }

    #[test]
    fn checks_sorted_and_overall_flag() {
        let r = run_suite(Suite::UniMatch, &quick(Suite::UniMatch)).unwrap();
        let d: Vec<_> = r.checks.iter().map(|c| c.description.clone()).collect();
        let mut sorted = d.clone();
        sorted.sort();
        assert_eq!(d, sorted);
        assert!(r.pass);
        let strict = SuiteParams { tol: 1e-300, zero_tol: 1e-300, ..quick(Suite::UniMatch) };
        let r = run_suite(Suite::UniMatch, &strict).unwrap();
        assert_eq!(r.pass, r.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn parameter_errors() {
        let p = SuiteParams { level: 9, ..SuiteParams::defaults(Suite::Unitarity) };
        assert!(matches!(run_suite(Suite::Unitarity, &p), Err(QError::OutOfRange(_))));
        let p = SuiteParams { trunc: 4, ..SuiteParams::defaults(Suite::Relations) };
        assert!(matches!(run_suite(Suite::Relations, &p), Err(QError::OutOfRange(_))));
    }

    #[test]
    fn random_words_are_deterministic() {
        assert_eq!(random_words(7, 50), random_words(7, 50));
        assert!(random_words(7, 200).iter().all(|w| w.len() <= 6));
    }
}
