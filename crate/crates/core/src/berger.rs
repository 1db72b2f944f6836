//! Berger closures and the case analysis of the classification theorem.
//!
//! An algebra `𝔤` is Berger when the values `R(X,Y)` of its curvature
//! tensors `R ∈ 𝓡(𝔤)` span `𝔤`.

use std::sync::Arc;

use serde::Serialize;

use crate::context::Context;
use crate::curvature::{bivectors, restrict_check_degenerate, CurvatureElement, CurvatureSpace, DegenerateCheck};
use crate::error::Result;
use crate::exactlin::{BasisSolver, Echelon, SparseVec, Subspace};
use crate::liealg::LieAlgebra;

/// A generator `R_j(e_a, e_b)` of the Berger closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub bivector: (usize, usize),
    pub curvature_index: usize,
}

/// Span of all `R(e_a, e_b)` for `R` in a basis of `rspace`, in the
/// coordinates of `rspace.algebra()`.
pub fn berger_closure(rspace: &CurvatureSpace) -> Subspace {
    closure_with_witnesses(rspace).0
}

/// The closure together with the first spanning subset of generators,
/// scanned curvature-index-major and then by bivector.
pub fn closure_with_witnesses(rspace: &CurvatureSpace) -> (Subspace, Vec<Witness>) {
    let g = rspace.algebra();
    let n = g.space().real_dim();
    let mut ech = Echelon::new(g.dim());
    let mut witnesses = Vec::new();
    'outer: for (j, r) in rspace.elements().iter().enumerate() {
        for (a, b) in bivectors(n) {
            if ech.rank() == g.dim() {
                break 'outer;
            }
            if ech.insert(SparseVec::from_dense(r.bivector_coeffs(a, b))) {
                witnesses.push(Witness {
                    bivector: (a, b),
                    curvature_index: j,
                });
            }
        }
    }
    (Subspace::from_echelon(ech), witnesses)
}

#[derive(Clone, Debug, Serialize)]
pub struct BergerReport {
    pub algebra: String,
    pub dim_algebra: usize,
    pub dim_curvature: usize,
    pub dim_closure: usize,
    pub is_berger: bool,
    pub witnesses: Vec<Witness>,
}

impl BergerReport {
    pub fn of(rspace: &CurvatureSpace) -> Self {
        let (closure, witnesses) = closure_with_witnesses(rspace);
        let g = rspace.algebra();
        BergerReport {
            algebra: g.name().to_string(),
            dim_algebra: g.dim(),
            dim_curvature: rspace.dim(),
            dim_closure: closure.dim(),
            is_berger: closure.dim() == g.dim(),
            witnesses,
        }
    }
}

pub const THEOREM1_NOTE: &str = "checks the algebra-level statements of the case analysis; \
     whether a candidate occurs as the holonomy of an actual manifold is not decided by this computation";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem1Case {
    /// `r₀ + s₀ ≠ 0`.
    A,
    /// `r₀ + s₀ = 0`, the split case `r = s = t`.
    B,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub algebra: String,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Report {
    pub note: &'static str,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub case: Theorem1Case,
    pub checks: Vec<SubCheck>,
    pub candidates: Vec<Candidate>,
    /// Set when any sub-check fails, naming the first failing identity.
    pub falsified: Option<String>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.falsified.is_none()
    }
}

/// Runs the case analysis at `(r, s, t)` with `t ≥ 1`.
pub fn theorem1_decision(r: usize, s: usize, t: usize) -> Result<Theorem1Report> {
    theorem1_decision_in(&mut Context::new(), r, s, t)
}

pub fn theorem1_decision_in(ctx: &mut Context, r: usize, s: usize, t: usize) -> Result<Theorem1Report> {
    let space = ctx.space(r, s, t)?;
    // W must exist.
    space.isotropic_subspace_w()?;
    let mut checks = Vec::new();
    let mut candidates = Vec::new();
    let case = if space.r0() + space.s0() != 0 {
        Theorem1Case::A
    } else {
        Theorem1Case::B
    };

    let big = ctx.curvature(r, s, t, "sp1+sp_w")?;
    let small = ctx.curvature(r, s, t, "sp_w")?;
    let small_in_big = small.embed(big.algebra())?;

    match case {
        Theorem1Case::A => {
            let equal = small_in_big.equals(big.kernel())?;
            checks.push(SubCheck {
                name: "R(sp1+sp_w) = R(sp_w)",
                passed: equal,
                detail: format!("dim R(sp1+sp_w) = {}, dim R(sp_w) = {}", big.dim(), small.dim()),
            });
            let degenerate = restrict_check_degenerate(&big.elements());
            checks.push(SubCheck {
                name: "R(p,X) = 0 and R(X,Y)p = 0 for p in W, X,Y in E",
                passed: !matches!(degenerate, DegenerateCheck::Fail { .. }),
                detail: serde_json::to_string(&degenerate)?,
            });
            candidates.push(Candidate {
                algebra: "sp1+sp_w".into(),
                verdict: "no Berger subalgebra containing sp1 preserves W".into(),
            });
        }
        Theorem1Case::B => {
            let rh0 = ctx.curvature(r, s, t, "h0")?;
            checks.push(SubCheck {
                name: "dim R(h0) = 1",
                passed: rh0.dim() == 1,
                detail: format!("dim R(h0) = {}", rh0.dim()),
            });
            if rh0.dim() == 1 {
                let r1 = rh0.element(0);
                checks.extend(split_checks(&big, &small_in_big, small.dim(), &r1)?);
                checks.push(annihilation_check(&rh0.algebra().clone(), &r1)?);
            }
            let h0_report = BergerReport::of(&rh0);
            checks.push(SubCheck {
                name: "h0 is Berger",
                passed: h0_report.is_berger,
                detail: format!("closure {} of {}", h0_report.dim_closure, h0_report.dim_algebra),
            });
            let big_report = BergerReport::of(&big);
            checks.push(SubCheck {
                name: "sp1+sp_w is Berger",
                passed: big_report.is_berger,
                detail: format!("closure {} of {}", big_report.dim_closure, big_report.dim_algebra),
            });
            candidates.push(Candidate {
                algebra: "h0".into(),
                verdict: if h0_report.is_berger { "Berger" } else { "not Berger" }.into(),
            });
            candidates.push(Candidate {
                algebra: "sp1+sp_w".into(),
                verdict: if big_report.is_berger {
                    "Berger: candidate"
                } else {
                    "not Berger"
                }
                .into(),
            });
        }
    }

    let falsified = checks
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("CLAIM FALSIFIED AT ({r},{s},{t}): {}", c.name));
    Ok(Theorem1Report {
        note: THEOREM1_NOTE,
        r,
        s,
        t,
        case,
        checks,
        candidates,
        falsified,
    })
}

/// `𝓡(sp1+sp_w) = ℝR₁ ⊕ 𝓡(sp_w)`, and every `R = νR₁ + 𝓦` satisfies
/// `R(X, X₁)|_W = νR₁(X, X₁)|_W` for `X ∈ W`, `X₁ ∈ W₁`.
fn split_checks(
    big: &CurvatureSpace,
    small_in_big: &Subspace,
    small_dim: usize,
    r1: &CurvatureElement,
) -> Result<Vec<SubCheck>> {
    let r1_big = r1.embed(big.algebra())?;
    let outside = !small_in_big.contains_vector(r1_big.coeffs());
    let mut family = vec![r1_big.coeffs().to_vec()];
    family.extend(small_in_big.basis().iter().cloned());
    let spans = outside && Subspace::span_of(&family, small_in_big.ambient_dim())?.equals(big.kernel())?;
    let mut out = vec![SubCheck {
        name: "R(sp1+sp_w) = RR1 + R(sp_w), R1 not in R(sp_w)",
        passed: spans && big.dim() == small_dim + 1,
        detail: format!(
            "dim R(sp1+sp_w) = {}, dim R(sp_w) = {}, R1 outside R(sp_w): {}",
            big.dim(),
            small_dim,
            outside
        ),
    }];
    if !spans {
        return Ok(out);
    }

    let solver = BasisSolver::new(&family, small_in_big.ambient_dim())?;
    let space = big.algebra().space().clone();
    let (w, w1) = (space.w_range(), space.w1_range());
    let mut failure = None;
    'elements: for (idx, r) in big.elements().iter().enumerate() {
        let coeffs = solver.solve(r.coeffs()).expect("element lies in the spanned space");
        let nu = &coeffs[0];
        for x in w.clone() {
            for x1 in w1.clone() {
                let lhs = r.value(x, x1);
                let rhs = r1.value(x, x1).scale(nu);
                for i in w.clone() {
                    for j in w.clone() {
                        if lhs[(i, j)] != rhs[(i, j)] {
                            failure = Some((idx, x, x1, i, j));
                            break 'elements;
                        }
                    }
                }
            }
        }
    }
    out.push(SubCheck {
        name: "R(X,X1)|W = nu R1(X,X1)|W",
        passed: failure.is_none(),
        detail: match failure {
            None => format!("{} basis elements", big.dim()),
            Some((idx, x, x1, i, j)) => {
                format!("element {idx}: entry ({i},{j}) of R(e{x},e{x1}) differs")
            }
        },
    });
    Ok(out)
}

fn annihilation_check(h0: &Arc<LieAlgebra>, r1: &CurvatureElement) -> Result<SubCheck> {
    let mut bad = None;
    for (i, a) in h0.basis().iter().enumerate() {
        if !r1.act(a)?.is_zero() {
            bad = Some(i);
            break;
        }
    }
    Ok(SubCheck {
        name: "h0 annihilates R1",
        passed: bad.is_none(),
        detail: match bad {
            None => format!("{} basis elements", h0.dim()),
            Some(i) => format!("basis element {i} moves R1"),
        },
    })
}
