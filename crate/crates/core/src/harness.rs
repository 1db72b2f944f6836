//! The verification suite: twelve named checks `P1`–`P12`, each a set of
//! exact identities evaluated at small signatures.
//!
//! Tier 1 covers `(1,1,1)` and `(1,2,1)`; tier 2 adds `(2,2,2)`. Reports
//! are deterministic: checks run in id order and timings are only included
//! on request.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::berger::{theorem1_decision_in, BergerReport, Theorem1Report};
use crate::context::Context;
use crate::curvature::{
    build_r0_with, derivative_space, restrict_check_degenerate, DegenerateCheck, WedgeConvention, R0_CONVENTION,
};
use crate::error::Result;
use crate::exactlin::{inertia, Rational, RealMatrix, Subspace};
use crate::liealg::REGISTRY;
use crate::prolong::{first_prolongation, second_prolongation, LinearAlgebra};

pub const TOOL_NAME: &str = "berger-lab";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// `(id, claim checked)` in report order.
pub const CHECKS: [(&str, &str); 12] = [
    (
        "P1",
        "I_a^2 = -id, I3 = I1 I2 = -I2 I1, eta(I_a X, Y) = -eta(X, I_a Y), eta has signature (4r, 4s)",
    ),
    (
        "P2",
        "dim sp(r,s) = m(2m+1); sp(r,s)_W has the block dimension and equals the stabilizer of W in sp(r,s)",
    ),
    ("P3", "R(h0) = R R1 is one-dimensional"),
    (
        "P4",
        "R0 lies in R(sp1+sp), satisfies pair symmetry, and scal(R0) = 4m(m+2) with m = 4(r+s)",
    ),
    ("P5", "R(sp1+sp) = R R0 + R(sp(r,r)) with R0 outside R(sp(r,r))"),
    ("P6", "R(sp1+sp_W) = R R1 + R(sp_W) with R1 outside R(sp_W)"),
    ("P7", "R(sp1+sp_W) = R(sp_W) when r0+s0 != 0"),
    ("P8", "R(p,X) = 0 and R(X,Y)|W = 0 for p in W and X, Y in E"),
    (
        "P9",
        "gl(r,H)^(1) = 0 on W; the second prolongation of sp1+gl(1,H) on W vanishes",
    ),
    ("P10", "h0 and sp1+sp_W are Berger, glq is not, h0 annihilates R1"),
    ("P11", "derivative space of R(h0) vanishes; that of R(sp1+sp) does not"),
    ("P12", "every computed curvature basis element has pair symmetry"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Vacuous,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub status: CheckStatus,
    pub values: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteOptions {
    pub tier: u8,
    /// Sign convention used to build `R₀`. Anything other than
    /// [`R0_CONVENTION`] is a fault injection.
    pub r0_convention: WedgeConvention,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            tier: 1,
            r0_convention: R0_CONVENTION,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub theorem1_falsified: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: SuiteOptions,
    pub checks: Vec<CheckResult>,
    pub theorem1: Vec<Theorem1Report>,
    pub summary: Summary,
}

impl VerificationReport {
    /// True iff no check failed and no case analysis was falsified.
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.theorem1_falsified == 0
    }
}

/// Signatures covered by a tier.
pub fn signatures(tier: u8) -> Vec<(usize, usize, usize)> {
    let mut out = vec![(1, 1, 1), (1, 2, 1)];
    if tier >= 2 {
        out.push((2, 2, 2));
    }
    out
}

fn split_signatures(tier: u8) -> Vec<(usize, usize, usize)> {
    signatures(tier)
        .into_iter()
        .filter(|(r, s, t)| r == s && s == t)
        .collect()
}

pub fn run_suite(ctx: &mut Context, opts: &SuiteOptions) -> Result<VerificationReport> {
    let checks: Vec<CheckResult> = CHECKS.iter().map(|(id, _)| run_check(ctx, id, opts)).collect();
    let mut theorem1 = Vec::new();
    for (r, s, t) in signatures(opts.tier) {
        theorem1.push(theorem1_decision_in(ctx, r, s, t)?);
    }
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail => summary.fail += 1,
            CheckStatus::Vacuous => summary.vacuous += 1,
            CheckStatus::Skipped => summary.skipped += 1,
        }
    }
    summary.theorem1_falsified = theorem1.iter().filter(|t| !t.passed()).count();
    Ok(VerificationReport {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        config: *opts,
        checks,
        theorem1,
        summary,
    })
}

/// Runs a single check. Errors inside a check are reported as failures.
///
/// # Panics
/// If `id` is not one of [`CHECKS`].
pub fn run_check(ctx: &mut Context, id: &str, opts: &SuiteOptions) -> CheckResult {
    let (id, claim) = *CHECKS
        .iter()
        .find(|(c, _)| *c == id)
        .unwrap_or_else(|| panic!("unknown check id {id}"));
    let start = Instant::now();
    let outcome = match id {
        "P1" => p1(ctx),
        "P2" => p2(ctx, opts),
        "P3" => p3(ctx, opts),
        "P4" => p4(ctx, opts),
        "P5" => p5(ctx, opts),
        "P6" => p6(ctx, opts),
        "P7" => p7(ctx),
        "P8" => p8(ctx),
        "P9" => p9(ctx),
        "P10" => p10(ctx, opts),
        "P11" => p11(ctx),
        "P12" => p12(ctx, opts),
        _ => unreachable!(),
    };
    let (status, values) = match outcome {
        Ok((passed, values)) => (if passed { CheckStatus::Pass } else { CheckStatus::Fail }, values),
        Err(e) => (CheckStatus::Fail, json!({ "error": e.to_string() })),
    };
    CheckResult {
        id,
        claim,
        status,
        values,
        wall_time_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

type Outcome = Result<(bool, Value)>;

fn sig(r: usize, s: usize, t: usize) -> Value {
    json!([r, s, t])
}

fn p1(ctx: &mut Context) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in [(1, 1, 1), (1, 2, 1), (2, 2, 2)] {
        let sp = ctx.space(r, s, t)?;
        let n = sp.real_dim();
        let eta = sp.eta();
        let [i1, i2, i3] = sp.structure();
        let minus = RealMatrix::identity(n).scale(&Rational::from_int(-1));
        let squares = [i1, i2, i3].iter().all(|i| (*i * *i) == minus);
        let products = &(i1 * i2) == i3 && (i2 * i1) == -i3;
        let skew = [i1, i2, i3]
            .iter()
            .all(|i| (&(eta * *i) + &(&i.transpose() * eta)).is_zero());
        let (neg, pos, zero) = inertia(eta);
        let signature = (neg, pos, zero) == (4 * r, 4 * s, 0);
        ok &= squares && products && skew && signature;
        cases.push(json!({
            "signature": sig(r, s, t),
            "squares": squares,
            "products": products,
            "eta_skew": skew,
            "inertia": [neg, pos, zero],
        }));
    }
    Ok((ok, json!({ "cases": cases })))
}

fn p2(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in signatures(opts.tier) {
        let sp = ctx.space(r, s, t)?;
        let (m, k) = (r + s, sp.r0() + sp.s0());
        let full = ctx.algebra(r, s, t, "sp")?;
        let para = ctx.algebra(r, s, t, "sp_w")?;
        // C: 4t², B: t(2t+1), A: k(2k+1), X: 4tk
        let blocks = 4 * t * t + t * (2 * t + 1) + k * (2 * k + 1) + 4 * t * k;
        let stab = full.stabilizer(&sp.isotropic_subspace_w()?, "stab")?;
        let equal = stab.same_span(&para);
        let this = full.dim() == m * (2 * m + 1) && para.dim() == blocks && equal;
        ok &= this;
        cases.push(json!({
            "signature": sig(r, s, t),
            "dim_sp": full.dim(),
            "expected_dim_sp": m * (2 * m + 1),
            "dim_sp_w": para.dim(),
            "expected_dim_sp_w": blocks,
            "sp_w_equals_stabilizer": equal,
        }));
    }
    Ok((ok, json!({ "cases": cases })))
}

fn p3(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in split_signatures(opts.tier) {
        let rh0 = ctx.curvature(r, s, t, "h0")?;
        ok &= rh0.dim() == 1;
        cases.push(json!({ "signature": sig(r, s, t), "dim_curvature_h0": rh0.dim() }));
    }
    Ok((ok, json!({ "cases": cases })))
}

fn p4(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in signatures(opts.tier) {
        let sp = ctx.space(r, s, t)?;
        let rspace = ctx.curvature(r, s, t, "sp1+sp")?;
        let r0 = build_r0_with(&sp, opts.r0_convention)?.embed(rspace.algebra())?;
        let bianchi = r0.bianchi_violation();
        let member = rspace.contains(&r0);
        let pairs = r0.pair_symmetry_violation();
        let scal = r0.scalar();
        let m = 4 * (r + s) as i64;
        let expected = Rational::from_int(4 * m * (m + 2));
        let n = (r + s) as i64;
        let this = bianchi.is_none() && member && pairs.is_none() && scal == expected;
        ok &= this;
        cases.push(json!({
            "signature": sig(r, s, t),
            "bianchi_residual_witness": bianchi,
            "in_curvature_space": member,
            "pair_symmetry_witness": pairs,
            "scalar": scal,
            "expected_scalar": expected,
            "alternative_4n(n+2)": Rational::from_int(4 * n * (n + 2)),
        }));
    }
    Ok((ok, json!({ "cases": cases })))
}

fn p5(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let (r, s, t) = (1, 1, 1);
    let sp = ctx.space(r, s, t)?;
    let big = ctx.curvature(r, s, t, "sp1+sp")?;
    let small = ctx.curvature(r, s, t, "sp")?;
    let small_in_big = small.embed(big.algebra())?;
    let r0 = build_r0_with(&sp, opts.r0_convention)?.embed(big.algebra())?;
    let r0_in_big = big.contains(&r0);
    let r0_outside = !small_in_big.contains_vector(r0.coeffs());
    let mut family = vec![r0.coeffs().to_vec()];
    family.extend(small_in_big.basis().iter().cloned());
    let spans = Subspace::span_of(&family, small_in_big.ambient_dim())?.equals(big.kernel())?;
    let ok = big.dim() == small.dim() + 1 && r0_in_big && r0_outside && spans;
    Ok((
        ok,
        json!({
            "signature": sig(r, s, t),
            "dim_curvature_sp1+sp": big.dim(),
            "dim_curvature_sp": small.dim(),
            "r0_in_curvature_sp1+sp": r0_in_big,
            "r0_outside_curvature_sp": r0_outside,
            "r0_and_curvature_sp_span": spans,
        }),
    ))
}

fn p6(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in split_signatures(opts.tier) {
        let big = ctx.curvature(r, s, t, "sp1+sp_w")?;
        let small = ctx.curvature(r, s, t, "sp_w")?;
        let rh0 = ctx.curvature(r, s, t, "h0")?;
        let small_in_big = small.embed(big.algebra())?;
        let r1 = rh0.element(0).embed(big.algebra())?;
        let outside = !small_in_big.contains_vector(r1.coeffs());
        let mut family = vec![r1.coeffs().to_vec()];
        family.extend(small_in_big.basis().iter().cloned());
        let spans = Subspace::span_of(&family, small_in_big.ambient_dim())?.equals(big.kernel())?;
        let this = rh0.dim() == 1 && big.dim() == small.dim() + 1 && outside && spans;
        ok &= this;
        cases.push(json!({
            "signature": sig(r, s, t),
            "dim_curvature_sp1+sp_w": big.dim(),
            "dim_curvature_sp_w": small.dim(),
            "r1_outside_curvature_sp_w": outside,
            "r1_and_curvature_sp_w_span": spans,
        }));
    }
    Ok((ok, json!({ "cases": cases })))
}

fn p7(ctx: &mut Context) -> Outcome {
    let (r, s, t) = (1, 2, 1);
    let big = ctx.curvature(r, s, t, "sp1+sp_w")?;
    let small = ctx.curvature(r, s, t, "sp_w")?;
    let equal = small.embed(big.algebra())?.equals(big.kernel())?;
    Ok((
        equal,
        json!({
            "signature": sig(r, s, t),
            "dim_curvature_sp1+sp_w": big.dim(),
            "dim_curvature_sp_w": small.dim(),
            "equal": equal,
        }),
    ))
}

fn p8(ctx: &mut Context) -> Outcome {
    let (r, s, t) = (1, 2, 1);
    let big = ctx.curvature(r, s, t, "sp1+sp_w")?;
    let outcome = restrict_check_degenerate(&big.elements());
    let ok = matches!(outcome, DegenerateCheck::Pass { .. });
    Ok((ok, json!({ "signature": sig(r, s, t), "outcome": outcome })))
}

fn p9(ctx: &mut Context) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for r in [1, 2] {
        let w = ctx.space(r, r, r)?.isotropic_subspace_w()?;
        let glq = LinearAlgebra::restricted(&*ctx.algebra(r, r, r, "glq")?, &w)?;
        let first = first_prolongation(&glq).dim();
        ok &= first == 0;
        cases.push(json!({ "algebra": "glq|W", "signature": sig(r, r, r), "first_prolongation": first }));
    }
    let w = ctx.space(1, 1, 1)?.isotropic_subspace_w()?;
    let h0 = LinearAlgebra::restricted(&*ctx.algebra(1, 1, 1, "h0")?, &w)?;
    let first = first_prolongation(&h0);
    let second = second_prolongation(&h0, &first).dim();
    ok &= second == 0;
    cases.push(json!({
        "algebra": "h0|W",
        "signature": sig(1, 1, 1),
        "first_prolongation": first.dim(),
        "second_prolongation": second,
    }));
    Ok((ok, json!({ "cases": cases })))
}

fn p10(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut cases = Vec::new();
    for (r, s, t) in split_signatures(opts.tier) {
        let h0 = BergerReport::of(&*ctx.curvature(r, s, t, "h0")?);
        ok &= h0.is_berger;
        cases.push(json!({ "signature": sig(r, s, t), "report": without_witnesses(h0) }));
    }
    let big = BergerReport::of(&*ctx.curvature(1, 1, 1, "sp1+sp_w")?);
    let glq = BergerReport::of(&*ctx.curvature(1, 1, 1, "glq")?);
    ok &= big.is_berger && !glq.is_berger && glq.dim_curvature == 0;
    cases.push(json!({ "signature": sig(1, 1, 1), "report": without_witnesses(big) }));
    cases.push(json!({ "signature": sig(1, 1, 1), "report": without_witnesses(glq) }));

    let rh0 = ctx.curvature(1, 1, 1, "h0")?;
    let r1 = rh0.element(0);
    let mut moved = None;
    for (i, a) in rh0.algebra().basis().iter().enumerate() {
        if !r1.act(a)?.is_zero() {
            moved = Some(i);
            break;
        }
    }
    ok &= moved.is_none();
    Ok((
        ok,
        json!({ "berger": cases, "h0_annihilates_r1": moved.is_none(), "moving_basis_element": moved }),
    ))
}

fn without_witnesses(mut rep: BergerReport) -> BergerReport {
    rep.witnesses.clear();
    rep
}

fn p11(ctx: &mut Context) -> Outcome {
    let h0 = derivative_space(&*ctx.curvature(1, 1, 1, "h0")?).dim();
    let full = derivative_space(&*ctx.curvature(1, 1, 1, "sp1+sp")?).dim();
    Ok((
        h0 == 0 && full != 0,
        json!({
            "signature": sig(1, 1, 1),
            "dim_derivative_space_h0": h0,
            "dim_derivative_space_sp1+sp": full,
        }),
    ))
}

fn p12(ctx: &mut Context, opts: &SuiteOptions) -> Outcome {
    for (r, s, t) in signatures(opts.tier) {
        for name in REGISTRY {
            // glq and h0 only exist on split spaces.
            if ctx.algebra(r, s, t, name).is_ok() {
                ctx.curvature(r, s, t, name)?;
            }
        }
    }
    let mut ok = true;
    let mut spaces = Vec::new();
    for (key, rspace) in ctx.computed_curvature() {
        let bad = rspace
            .elements()
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.pair_symmetry_violation().map(|w| (i, w)));
        ok &= bad.is_none();
        spaces.push(json!({
            "signature": sig(key.r, key.s, key.t),
            "algebra": key.algebra,
            "dim": rspace.dim(),
            "violation": bad,
        }));
    }
    Ok((ok, json!({ "spaces": spaces })))
}
