mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use polyinv::invariants::{
    g_invariant, h_invariant, p_invariant, rank_gen, rees_series, tutte, tutte_uv, BivariatePoly, PTable,
};
use polyinv::pmcore::{size, Limits, Polymatroid};
use polyinv::qsym::{p_product, Basis, QSymFn, Word};
use polyinv::rational::{factorial, int, Rational};
use polyinv::schur::{has_alternating_signs, SymFn};

fn lim() -> Limits {
    Limits::default()
}

/// `sum over A of P[X|_A] sigma^(-rk A) (-1)^|A|` through degree `n - 1`.
fn vanishing_sum(pm: &Polymatroid) -> SymFn {
    let table = PTable::build(pm, &lim()).unwrap();
    let top = pm.n() - 1;
    let mut acc = SymFn::zero().with_bound(Some(top));
    for a in 0..=pm.full() {
        let term = table.get(a).mul_sigma_pow(-(pm.rank(a) as i64), top);
        acc.add_scaled(&term, &int(if size(a) % 2 == 0 { 1 } else { -1 }));
    }
    acc
}

fn uv_from_rank_gen(pm: &Polymatroid) -> BivariatePoly {
    let total = pm.total_rank() as i64;
    let mut out = BivariatePoly::zero(["u", "v"]);
    for (&(a, b), c) in rank_gen(pm).terms() {
        out.add_term(total - a, b - a, c.clone());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lower_degrees_vanish(pm in polymatroid_strategy(6)) {
        prop_assume!(pm.n() > 0);
        prop_assert!(vanishing_sum(&pm).is_zero());
    }

    #[test]
    fn p_is_integral_normalized_and_short(pm in polymatroid_strategy(6)) {
        let p = p_invariant(&pm, &lim()).unwrap();
        prop_assert!(p.is_integral());
        prop_assert_eq!(p.theta(), Rational::one());
        prop_assert!(p.terms().all(|(l, _)| l.weight() < pm.n().max(1)));
    }

    #[test]
    fn h_has_the_stated_shape(pm in polymatroid_strategy(5)) {
        let h = h_invariant(&pm, &lim()).unwrap();
        let p = p_invariant(&pm, &lim()).unwrap();
        prop_assert!(h.is_integral());
        prop_assert!(h.slices().all(|(q, t, _)| t <= pm.n() as u64 && q <= pm.total_rank()));
        prop_assert_eq!(h.slice(pm.total_rank(), pm.n() as u64), p);
        prop_assert_eq!(h.theta(), rank_gen(&pm));
    }

    #[test]
    fn invariants_multiply_over_sums(a in polymatroid_strategy(3), b in polymatroid_strategy(3)) {
        let s = a.direct_sum(&b).unwrap();
        let pa = p_invariant(&a, &lim()).unwrap();
        let pb = p_invariant(&b, &lim()).unwrap();
        prop_assert_eq!(p_invariant(&s, &lim()).unwrap(), pa.mul(&pb, None));
        let ha = h_invariant(&a, &lim()).unwrap();
        let hb = h_invariant(&b, &lim()).unwrap();
        prop_assert_eq!(h_invariant(&s, &lim()).unwrap(), ha.mul(&hb));
        let ga = g_invariant(&a, &lim()).unwrap();
        let gb = g_invariant(&b, &lim()).unwrap();
        prop_assert_eq!(g_invariant(&s, &lim()).unwrap(), p_product(&ga, &gb));
    }

    #[test]
    fn g_counts_every_chain(pm in polymatroid_strategy(6)) {
        let g = g_invariant(&pm, &lim()).unwrap();
        prop_assert_eq!(g.coefficient_sum(), Rational::from_integer(factorial(pm.n())));
        prop_assert!(g.terms().all(|(w, c)| c.is_integer() && *c > Rational::from_integer(0.into())
            && w.weight() == pm.total_rank()));
        if pm.is_matroid() {
            prop_assert!(g.terms().all(|(w, _)| w.letters().iter().all(|&a| a <= 1)));
        }
    }

    #[test]
    fn tutte_is_the_rank_generating_function_shifted(pm in polymatroid_strategy(6)) {
        let uv = tutte_uv(&pm);
        prop_assert_eq!(&uv, &uv_from_rank_gen(&pm));
        let t = tutte(&pm);
        prop_assert_eq!(t.laurent, !pm.is_matroid());
        if !t.laurent {
            prop_assert!(t.poly.has_nonnegative_coefficients());
            prop_assert_eq!(t.poly.shift((1, 1), ["u", "v"]).unwrap(), uv);
        }
    }

    #[test]
    fn duality_swaps_tutte_and_reverses_g(m in matroid_strategy(6)) {
        let d = m.dual().unwrap();
        prop_assert_eq!(tutte(&d).poly, tutte(&m).poly.swapped());
        let mut expected = QSymFn::zero(Basis::U);
        for (w, c) in g_invariant(&m, &lim()).unwrap().terms() {
            let dual = Word(w.letters().iter().rev().map(|&r| 1 - r).collect());
            expected = expected.add(&QSymFn::from_terms(Basis::U, [(dual, c.clone())]).unwrap()).unwrap();
        }
        prop_assert_eq!(g_invariant(&d, &lim()).unwrap(), expected);
    }

    #[test]
    fn relabeling_changes_nothing(
        (pm, perm) in polymatroid_strategy(6).prop_flat_map(|pm| { let n = pm.n(); (Just(pm), permutation_strategy(n)) })
    ) {
        let moved = pm.permute(&perm).unwrap();
        prop_assert_eq!(p_invariant(&moved, &lim()).unwrap(), p_invariant(&pm, &lim()).unwrap());
        prop_assert_eq!(h_invariant(&moved, &lim()).unwrap(), h_invariant(&pm, &lim()).unwrap());
        prop_assert_eq!(g_invariant(&moved, &lim()).unwrap(), g_invariant(&pm, &lim()).unwrap());
        prop_assert_eq!(tutte(&moved), tutte(&pm));
    }

    #[test]
    fn realizable_examples_alternate(
        pm in prop_oneof![
            graph_strategy(5, 7).prop_map(|g| g.to_polymatroid().unwrap()),
            point_config_strategy(7).prop_map(|c| c.to_polymatroid().unwrap()),
            subspace_config_strategy(6).prop_map(|c| c.to_polymatroid().unwrap()),
        ]
    ) {
        prop_assert!(has_alternating_signs(&p_invariant(&pm, &lim()).unwrap()));
    }

    #[test]
    fn rees_terms_are_direct_powers(pm in polymatroid_strategy(3)) {
        let series = rees_series(&pm, 2, &lim()).unwrap();
        let mut power = Polymatroid::empty();
        for h in &series {
            prop_assert_eq!(h, &h_invariant(&power, &lim()).unwrap());
            power = power.direct_sum(&pm).unwrap();
        }
    }
}

#[test]
fn closed_forms_for_small_families() {
    let l = lim();
    for m in 3..=6usize {
        let gon = polyinv::pmcore::Graph::polygon(m).to_polymatroid().unwrap();
        let t = tutte(&gon);
        let mut expected = BivariatePoly::zero(["x", "y"]);
        expected.add_term(0, 1, BigInt::one());
        for i in 1..m as i64 {
            expected.add_term(i, 0, BigInt::one());
        }
        assert_eq!(t.poly, expected);
        assert_eq!(vanishing_sum(&gon), SymFn::zero());
        let _ = g_invariant(&gon, &l).unwrap();
    }
}

#[test]
fn rees_edge_cases() {
    let l = lim();
    let loops = rees_series(&Polymatroid::loop_matroid(), 3, &l).unwrap();
    let rendered: Vec<String> = loops.iter().map(ToString::to_string).collect();
    assert_eq!(rendered, ["1", "1 + t", "1 + 2*t + t^2", "1 + 3*t + 3*t^2 + t^3"]);
    assert!(rees_series(&Polymatroid::uniform(1, 5).unwrap(), 3, &l).is_err());
}

/// Abstract (possibly non-realizable) polymatroids: the sign pattern is
/// recorded, not asserted.
#[test]
fn sign_pattern_on_abstract_polymatroids_is_reported() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let (mut total, mut alternating) = (0, 0);
    for _ in 0..64 {
        let pm = coverage_strategy(5).new_tree(&mut runner).unwrap().current();
        total += 1;
        if has_alternating_signs(&p_invariant(&pm, &lim()).unwrap()) {
            alternating += 1;
        }
    }
    eprintln!("coverage polymatroids with alternating P: {alternating}/{total}");
}
