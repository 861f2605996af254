//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line. Everything is exact — no tolerances anywhere — and the
//! time budgets are asserted, not just hoped for.

use std::time::Instant;

use starring::fixtures;
use starring::geninv::{self, GenInvKind};
use starring::harness::{
    brute_force_inverse, enumerate_ring, random_matrix, random_wcore_instance, run_suite, BPolicy,
    PropertyId, SplitMix64, TrialConfig, WMode,
};
use starring::matrix::Matrix;
use starring::matrix::PivotStrategy;
use starring::orders::{order_holds, order_holds_with_mode, OrderKind, OrderMode};
use starring::scalar::ScalarDomain;

fn criterion(n: usize, name: &str, pass: bool) {
    println!(
        "criterion {n}: {} — {name}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {name}");
}

fn qi() -> ScalarDomain {
    ScalarDomain::gaussian_rationals()
}

#[test]
fn criterion_1_first_worked_instance() {
    let start = Instant::now();
    let f = fixtures::w_core_without_core_order();
    let e = fixtures::w_core_without_core_expected();

    let x = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
    let core = geninv::core_inverse(&f.a).unwrap().value;
    let mut pass = x == e.a_w_core && core == e.a_core;

    pass &= x.mul(&f.a) == e.xw_a && x.mul(&f.b) == e.xw_a;
    let awx = f.a.mul(&f.w).mul(&x);
    let bwx = f.b.mul(&f.w).mul(&x);
    pass &= awx == e.awx && bwx == e.awx;
    pass &= f.a.mul(&core) == e.a_core_proj && f.b.mul(&core) == e.b_core_proj;

    // the w-core order holds (relaxed: b is invertible while w is not a
    // unit, so b itself is not w-core invertible)
    let wcore_report = order_holds_with_mode(
        OrderKind::WCore(f.w.clone()),
        &f.a,
        &f.b,
        OrderMode::Relaxed,
    )
    .unwrap();
    pass &= wcore_report.holds;
    let strict = order_holds(OrderKind::WCore(f.w.clone()), &f.a, &f.b);
    pass &= matches!(&strict, Err(p) if p.element == 'b');

    // the core order fails on the second projection equation
    let core_report = order_holds(OrderKind::Core, &f.a, &f.b).unwrap();
    pass &= !core_report.holds && core_report.failed_condition.as_deref() == Some("a·a^⊕ = b·a^⊕");

    pass &= start.elapsed().as_secs_f64() < 1.0;
    criterion(
        1,
        "first worked instance reproduced exactly in under 1s",
        pass,
    );
}

#[test]
fn criterion_2_second_worked_instance() {
    let f = fixtures::left_star_without_w_core();
    let e = fixtures::left_star_expected();

    let mut pass = order_holds(OrderKind::LeftStar, &f.a, &f.b).unwrap().holds;

    let wa = f.w.mul(&f.a);
    let wb = f.w.mul(&f.b);
    pass &= geninv::group_inverse(&wa).unwrap().value == e.wa_sharp;
    pass &= order_holds(OrderKind::RightSharp, &wa, &wb).unwrap().holds;

    let report = order_holds_with_mode(
        OrderKind::WCore(f.w.clone()),
        &f.a,
        &f.b,
        OrderMode::Relaxed,
    )
    .unwrap();
    pass &= !report.holds && report.failed_condition.as_deref() == Some("a·w·a_w^⊕ = b·w·a_w^⊕");

    let x = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
    pass &= x == e.a_w_core;
    pass &= f.a.mul(&f.w).mul(&x) == e.awx;
    pass &= f.b.mul(&f.w).mul(&x) == e.bwx;

    criterion(
        2,
        "left-star and right-sharp hold while the w-core order fails, exactly",
        pass,
    );
}

#[test]
fn criterion_3_reverse_order_counterexample() {
    let f = fixtures::reverse_order_counterexample();
    let e = fixtures::reverse_order_expected();

    // a = b, so the order holds strictly
    let mut pass = order_holds(OrderKind::WCore(f.w.clone()), &f.a, &f.b)
        .unwrap()
        .holds;

    let xa = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
    let xb = geninv::w_core_inverse(&f.b, &f.w).unwrap().value;
    let factored = xb.mul(&xa);
    pass &= factored == e.factored;

    let ab = f.a.mul(&f.b);
    let ab_core = geninv::w_core_inverse(&ab, &f.w).unwrap().value;
    pass &= ab_core == e.product_w_core && ab_core != factored;

    let awb = f.a.mul(&f.w).mul(&f.b);
    pass &= geninv::w_core_inverse(&awb, &f.w).unwrap().value == factored;

    // the reverse-order law checker itself confirms the same instance
    let outcome = starring::harness::check_property(
        PropertyId::ExReverseCounterexample,
        &starring::harness::Instance::Fixed,
    );
    pass &= matches!(outcome.verdict, starring::harness::Verdict::Holds);

    criterion(3, "reverse-order counterexample reproduced exactly", pass);
}

#[test]
fn criterion_4_finite_ring_oracle_soundness() {
    let start = Instant::now();
    let mut pass = true;
    for p in [2u64, 3] {
        let ring: Vec<Matrix> = enumerate_ring(p, 2).unwrap().collect();
        for a in &ring {
            let per_element: [(GenInvKind, Option<Matrix>); 7] = [
                (GenInvKind::Inner, Some(geninv::inner_inverse(a).value)),
                (
                    GenInvKind::Reflexive,
                    Some(geninv::reflexive_inverse(a).value),
                ),
                (
                    GenInvKind::OneThree,
                    geninv::one_three_inverse(a).ok().map(|r| r.value),
                ),
                (
                    GenInvKind::OneFour,
                    geninv::one_four_inverse(a).ok().map(|r| r.value),
                ),
                (
                    GenInvKind::Group,
                    geninv::group_inverse(a).ok().map(|r| r.value),
                ),
                (
                    GenInvKind::MoorePenrose,
                    geninv::moore_penrose(a).ok().map(|r| r.value),
                ),
                (
                    GenInvKind::Core,
                    geninv::core_inverse(a).ok().map(|r| r.value),
                ),
            ];
            for (kind, constructed) in per_element {
                let solutions = brute_force_inverse(&kind, a).unwrap();
                match constructed {
                    Some(v) => pass &= solutions.contains(&v),
                    None => pass &= solutions.is_empty(),
                }
                let unique = matches!(
                    kind,
                    GenInvKind::Group | GenInvKind::MoorePenrose | GenInvKind::Core
                );
                if unique {
                    pass &= solutions.len() <= 1;
                }
            }
        }
        for a in &ring {
            for w in &ring {
                let kind = GenInvKind::WCore(w.clone());
                let solutions = brute_force_inverse(&kind, a).unwrap();
                pass &= solutions.len() <= 1;
                match geninv::w_core_inverse(a, w) {
                    Ok(r) => pass &= solutions == vec![r.value],
                    Err(_) => pass &= solutions.is_empty(),
                }
            }
        }
    }
    pass &= start.elapsed().as_secs() < 60;
    criterion(
        4,
        "constructors agree with exhaustive oracles over M2(Z2) and M2(Z3) in under 60s",
        pass,
    );
}

#[test]
fn criterion_5_order_axioms() {
    // exhaustive over every quadruple of M2(Z2): reflexivity on each member,
    // antisymmetry on each pair, transitivity on each triple
    let z2 = TrialConfig::new(ScalarDomain::mod_p(2).unwrap(), 2, 0, 0);
    let report = run_suite(&z2, &[PropertyId::ThmPartialOrderAxioms], true).unwrap();
    let entry = report.entry(PropertyId::ThmPartialOrderAxioms).unwrap();
    let mut pass = entry.failure.is_none() && entry.applicable > 0;

    // at least 1000 random gaussian-rational instances across dims 2 and 3
    let mut applicable = 0;
    for dim in [2usize, 3] {
        let cfg = TrialConfig::new(qi(), dim, 520, 1729 + dim as u64);
        let report = run_suite(&cfg, &[PropertyId::ThmPartialOrderAxioms], false).unwrap();
        let entry = report.entry(PropertyId::ThmPartialOrderAxioms).unwrap();
        pass &= entry.failure.is_none();
        pass &= entry.trials >= 520;
        applicable += entry.applicable;
    }
    pass &= applicable >= 1000;
    criterion(
        5,
        "order axioms hold exhaustively over M2(Z2) and on 1000+ exact random instances",
        pass,
    );
}

#[test]
fn criterion_6_equivalence_suites() {
    let start = Instant::now();
    let equivalence_ids = [
        PropertyId::ThmWCore12Way,
        PropertyId::ThmProjection6Way,
        PropertyId::ThmIdempotent11Way,
        PropertyId::CorCore12Way,
        PropertyId::ThmThreeClassCore,
        PropertyId::ThmThreeClassStar,
        PropertyId::ThmEp5Way,
        PropertyId::ThmUnitEquivalence,
        PropertyId::ThmLeftStar4Way,
        PropertyId::ThmRightSharp3Way,
        PropertyId::ThmDifference3Way,
        PropertyId::CorDifferenceCore,
        PropertyId::CorDifferenceACore,
        PropertyId::PropImpliesDiamond,
        PropertyId::LemMaryCriterion,
        PropertyId::LemAwProduct,
    ];

    // directed random instances with a per-property applicability floor
    let cfg = TrialConfig::new(qi(), 2, 400, 99);
    let report = run_suite(&cfg, &equivalence_ids, false).unwrap();
    let mut pass = true;
    for id in equivalence_ids {
        let entry = report.entry(id).unwrap();
        if entry.failure.is_some() {
            println!("  {id}: FAILED {:?}", entry.failure);
            pass = false;
        }
        if entry.applicable < 100 {
            println!(
                "  {id}: only {} applicable of {}",
                entry.applicable, entry.trials
            );
            pass = false;
        }
    }

    // the full catalog, exhaustively over M2(Z2)
    let z2 = TrialConfig::new(ScalarDomain::mod_p(2).unwrap(), 2, 0, 0);
    let z2_report = run_suite(&z2, &PropertyId::ALL, true).unwrap();
    for entry in &z2_report.entries {
        if entry.failure.is_some() {
            println!("  {}: FAILED exhaustively {:?}", entry.id, entry.failure);
            pass = false;
        }
    }

    pass &= start.elapsed().as_secs() < 300;
    criterion(
        6,
        "equivalence suites: 100+ applicable random instances each plus exhaustive M2(Z2), zero failures, under 5 minutes",
        pass,
    );
}

#[test]
fn criterion_7_uniqueness_and_consistency() {
    let mut pass = true;
    let mut rng = SplitMix64::new(2024);
    let cfg = TrialConfig::new(qi(), 2, 0, 0);
    let cfg3 = TrialConfig::new(qi(), 3, 0, 0);

    for trial in 0..500 {
        let cfg = if trial % 2 == 0 { &cfg } else { &cfg3 };

        // both w-core routes agree whenever both succeed (and they succeed
        // together)
        let modes = [
            WMode::Pool,
            WMode::Identity,
            WMode::SelfA,
            WMode::StarA,
            WMode::Unit,
        ];
        let inst = random_wcore_instance(cfg, &mut rng, modes[trial % 5], BPolicy::Free);
        let direct = geninv::w_core_inverse(&inst.a, &inst.w).unwrap().value;
        let via = geninv::w_core_via_product(&inst.a, &inst.w).unwrap().value;
        pass &= direct == via;

        let m = random_matrix(cfg, &mut rng);
        // Moore-Penrose is independent of the inner-inverse choices
        let first = geninv::moore_penrose_with(&m, PivotStrategy::FirstNonzero);
        let last = geninv::moore_penrose_with(&m, PivotStrategy::LastNonzero);
        match (first, last) {
            (Ok(x), Ok(y)) => pass &= x.value == y.value,
            (Err(_), Err(_)) => {}
            _ => pass = false,
        }

        // the group inverse is the inverse of a along a
        match (geninv::group_inverse(&m), geninv::inverse_along(&m, &m)) {
            (Ok(s), Ok(al)) => pass &= s.value == al.value,
            (Err(_), Err(_)) => {}
            _ => pass = false,
        }

        // negative-route agreement: when the direct route fails, so does the
        // product route
        let w = random_matrix(cfg, &mut rng);
        let a = random_matrix(cfg, &mut rng);
        pass &=
            geninv::w_core_inverse(&a, &w).is_ok() == geninv::w_core_via_product(&a, &w).is_ok();
    }
    criterion(
        7,
        "uniqueness and route-consistency on 500 random instances",
        pass,
    );
}
