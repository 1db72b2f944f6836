use proptest::prelude::*;

use berger_lab::berger::{theorem1_decision_in, Theorem1Case};
use berger_lab::context::Context;
use berger_lab::curvature::{restrict_check_degenerate, CurvatureElement, DegenerateCheck};
use berger_lab::exactlin::{rref, Rational, RealMatrix, Subspace};
use berger_lab::liealg::LieAlgebra;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RealMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| RealMatrix::from_vec(rows, cols, v.into_iter().map(Rational::from_int).collect()))
}

fn combination(g: &LieAlgebra, coeffs: &[i64]) -> RealMatrix {
    let c: Vec<Rational> = coeffs.iter().map(|&x| Rational::from_int(x)).collect();
    g.element(&c[..g.dim()])
}

fn curvature_combination(space: &berger_lab::curvature::CurvatureSpace, coeffs: &[i64]) -> CurvatureElement {
    let mut acc = CurvatureElement::zero(space.algebra().clone());
    for (i, &c) in coeffs.iter().take(space.dim()).enumerate() {
        acc = acc.add(&space.element(i).scale(&Rational::from_int(c))).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 6)) {
        let (once, pivots) = rref(&m);
        let (twice, pivots2) = rref(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn nullspace_is_annihilated(m in small_matrix(3, 6)) {
        let ker = Subspace::nullspace(&m);
        prop_assert_eq!(ker.dim() + m.rank(), 6);
        for v in ker.basis() {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in small_matrix(3, 5), b in small_matrix(2, 5)) {
        let u = Subspace::span_of(&(0..3).map(|i| a.row(i).to_vec()).collect::<Vec<_>>(), 5).unwrap();
        let v = Subspace::span_of(&(0..2).map(|i| b.row(i).to_vec()).collect::<Vec<_>>(), 5).unwrap();
        let sum = u.sum(&v).unwrap();
        let meet = u.intersection(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains(&u).unwrap() && sum.contains(&v).unwrap());
        prop_assert!(u.contains(&meet).unwrap() && v.contains(&meet).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn act_is_a_lie_algebra_action(
        a in prop::collection::vec(-2i64..=2, 13),
        b in prop::collection::vec(-2i64..=2, 13),
        r in prop::collection::vec(-2i64..=2, 36),
    ) {
        let mut ctx = Context::new();
        let rs = ctx.curvature(1, 1, 1, "sp1+sp").unwrap();
        let g = rs.algebra().clone();
        let (a, b) = (combination(&g, &a), combination(&g, &b));
        let r = curvature_combination(&rs, &r);
        let lhs = r.act(&a.commutator(&b)).unwrap();
        let rhs = r.act(&b).unwrap().act(&a).unwrap()
            .add(&r.act(&a).unwrap().act(&b).unwrap().scale(&Rational::from_int(-1)))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn curvature_is_monotone_in_the_algebra() {
    let mut ctx = Context::new();
    for (r, s, t) in [(1, 1, 1), (1, 2, 1)] {
        let pairs = [
            ("sp_w", "sp"),
            ("sp_w", "sp1+sp_w"),
            ("sp1+sp_w", "sp1+sp"),
            ("sp", "sp1+sp"),
        ];
        for (small, big) in pairs {
            let rs = ctx.curvature(r, s, t, small).unwrap();
            let rb = ctx.curvature(r, s, t, big).unwrap();
            let embedded = rs.embed(rb.algebra()).unwrap();
            assert!(
                rb.kernel().contains(&embedded).unwrap(),
                "{small} in {big} at ({r},{s},{t})"
            );
        }
    }
    for (small, big) in [("glq", "h0"), ("h0", "sp1+sp_w")] {
        let rs = ctx.curvature(1, 1, 1, small).unwrap();
        let rb = ctx.curvature(1, 1, 1, big).unwrap();
        assert!(rb.kernel().contains(&rs.embed(rb.algebra()).unwrap()).unwrap());
    }
}

#[test]
fn sp_curvature_is_ricci_flat() {
    let mut ctx = Context::new();
    for (r, s, t) in [(1, 1, 1), (1, 2, 1)] {
        for (i, el) in ctx.curvature(r, s, t, "sp").unwrap().elements().iter().enumerate() {
            assert!(el.ricci().is_zero(), "element {i} at ({r},{s},{t})");
        }
    }
}

#[test]
fn r1_vanishes_on_w() {
    let mut ctx = Context::new();
    let rh0 = ctx.curvature(1, 1, 1, "h0").unwrap();
    let r1 = rh0.element(0);
    assert_eq!(r1.coeffs().iter().find(|c| !c.is_zero()), Some(&Rational::ONE));
    let w = r1.space().w_range();
    for a in w.clone() {
        for b in w.clone().filter(|b| *b > a) {
            assert!(r1.value(a, b).is_zero());
        }
    }
    // but not on W × W₁
    let w1 = r1.space().w1_range();
    assert!(w.clone().any(|a| w1.clone().any(|b| !r1.value(a, b).is_zero())));
}

#[test]
fn degenerate_pairs_vanish_in_mixed_signature() {
    let mut ctx = Context::new();
    let big = ctx.curvature(1, 2, 1, "sp1+sp_w").unwrap();
    assert_eq!(
        restrict_check_degenerate(&big.elements()),
        DegenerateCheck::Pass { elements: 43 }
    );
    // E = 0 on the split space.
    let split = ctx.curvature(1, 1, 1, "sp1+sp").unwrap();
    assert_eq!(restrict_check_degenerate(&split.elements()), DegenerateCheck::Vacuous);
}

#[test]
fn case_analysis_at_rank_two() {
    let mut ctx = Context::new();
    let rep = theorem1_decision_in(&mut ctx, 2, 2, 2).unwrap();
    assert_eq!(rep.case, Theorem1Case::B);
    assert!(rep.passed(), "{rep:#?}");
    let rep = theorem1_decision_in(&mut ctx, 2, 3, 2).unwrap();
    assert_eq!(rep.case, Theorem1Case::A);
    assert!(rep.passed(), "{rep:#?}");
}

#[test]
fn split_curvature_dimensions() {
    let mut ctx = Context::new();
    let dims: Vec<usize> = ["glq", "h0", "sp_w", "sp1+sp_w", "sp", "sp1+sp"]
        .iter()
        .map(|n| ctx.curvature(2, 2, 2, n).unwrap().dim())
        .collect();
    // 𝓡(sp(r,s)) ≅ S⁴ℂ²ⁿ with n = r + s, of real dimension C(2n+3, 4) = C(11, 4) = 330.
    assert_eq!(dims, [0, 1, 115, 116, 330, 331]);
}
