//! One checker per catalog property. A checker evaluates its hypothesis; if
//! unmet the instance is inapplicable, otherwise every clause of the
//! statement is evaluated exactly and the first broken clause is reported.

use super::{Instance, PropertyId, PropertyOutcome, Verdict};
use crate::fixtures;
use crate::geninv::{
    self, core_inverse, group_inverse, inverse_along, is_core_invertible, is_group_invertible,
    is_invertible_along, is_moore_penrose_invertible, is_w_core_invertible, w_core_inverse,
    w_core_via_product,
};
use crate::matrix::Matrix;
use crate::orders::{self, order_holds_with_mode, w_core_characterizations, OrderKind, OrderMode};

fn holds() -> Verdict {
    Verdict::Holds
}

fn fails(clause: impl Into<String>) -> Verdict {
    Verdict::Fails {
        clause: clause.into(),
    }
}

fn inapplicable(precondition: impl Into<String>) -> Verdict {
    Verdict::Inapplicable {
        precondition: precondition.into(),
    }
}

fn wcore(a: &Matrix, w: &Matrix) -> Option<Matrix> {
    w_core_inverse(a, w).ok().map(|r| r.value)
}

/// The two defining equations of the w-core relation, evaluated with a
/// precomputed a_w^⊕.
fn relation_eqs(a: &Matrix, x: &Matrix, b: &Matrix, w: &Matrix) -> bool {
    x.mul(a) == x.mul(b) && a.mul(w).mul(x) == b.mul(w).mul(x)
}

fn left_star(a: &Matrix, b: &Matrix) -> bool {
    order_holds_with_mode(OrderKind::LeftStar, a, b, OrderMode::Strict)
        .expect("left-star has no precondition")
        .holds
}

fn right_sharp(a: &Matrix, b: &Matrix) -> Option<bool> {
    order_holds_with_mode(OrderKind::RightSharp, a, b, OrderMode::Strict)
        .ok()
        .map(|r| r.holds)
}

fn sharp(a: &Matrix, b: &Matrix) -> Option<bool> {
    order_holds_with_mode(OrderKind::Sharp, a, b, OrderMode::Strict)
        .ok()
        .map(|r| r.holds)
}

fn star(a: &Matrix, b: &Matrix) -> bool {
    order_holds_with_mode(OrderKind::Star, a, b, OrderMode::Strict)
        .expect("star has no precondition")
        .holds
}

fn core_order(a: &Matrix, b: &Matrix) -> Option<bool> {
    order_holds_with_mode(OrderKind::Core, a, b, OrderMode::Strict)
        .ok()
        .map(|r| r.holds)
}

fn diamond(a: &Matrix, b: &Matrix) -> bool {
    order_holds_with_mode(OrderKind::Diamond, a, b, OrderMode::Strict)
        .expect("diamond has no precondition")
        .holds
}

fn relaxed_wcore(a: &Matrix, b: &Matrix, w: &Matrix) -> Option<bool> {
    order_holds_with_mode(OrderKind::WCore(w.clone()), a, b, OrderMode::Relaxed)
        .ok()
        .map(|r| r.holds)
}

fn agreement(values: &[(&str, bool)]) -> Verdict {
    let first = values[0].1;
    for (name, value) in values {
        if *value != first {
            return fails(format!(
                "conditions disagree: ({}) = {} but ({}) = {}",
                values[0].0, first, name, value
            ));
        }
    }
    holds()
}

pub fn check_property(id: PropertyId, instance: &Instance) -> PropertyOutcome {
    let verdict = dispatch(id, instance);
    PropertyOutcome { id, verdict }
}

fn dispatch(id: PropertyId, instance: &Instance) -> Verdict {
    use PropertyId::*;
    match id {
        DefWCoreRelation => {
            let (a, b, w) = pair_w(instance);
            def_wcore_relation(a, b, w)
        }
        LemWCoreParI | LemWCoreParII | LemWCoreParIII | LemWCoreParIV => {
            let (a, b, w) = pair_w(instance);
            lem_wcore_par(id, a, b, w)
        }
        ThmPartialOrderAxioms => {
            let (a, b, c, w) = triple_w(instance);
            partial_order_axioms(a, b, c, w)
        }
        PropSymmetricChar => {
            let (a, b, w) = pair_w(instance);
            symmetric_char(a, b, w)
        }
        PropMixedProducts => {
            let (a, b, w) = pair_w(instance);
            mixed_products(a, b, w)
        }
        LemProjection => {
            let (a, w, candidate) = candidate_w(instance);
            lem_projection(a, w, candidate)
        }
        ThmProjection6Way => {
            let (a, b, w) = pair_w(instance);
            projection_6way(a, b, w)
        }
        LemIdempotentE => {
            let (a, w, candidate) = candidate_w(instance);
            lem_idempotent(a, w, candidate, orders::IdempotentSide::E)
        }
        LemIdempotentF => {
            let (a, w, candidate) = candidate_w(instance);
            lem_idempotent(a, w, candidate, orders::IdempotentSide::F)
        }
        LemMaryCriterion => {
            let (a, w) = single_w(instance);
            mary_criterion(a, w)
        }
        ThmIdempotent11Way => {
            let (a, b, w) = pair_w(instance);
            idempotent_11way(a, b, w)
        }
        ThmWCore12Way => {
            let (a, b, w) = pair_w(instance);
            wcore_12way(a, b, w)
        }
        CorCore12Way => {
            let (a, b) = pair(instance);
            core_12way(a, b)
        }
        PropImpliesLeftStarRightSharp => {
            let (a, b, w) = pair_w(instance);
            implies_left_star_right_sharp(a, b, w)
        }
        Ex2ConverseFails => ex2_converse_fails(),
        ThmUnitEquivalence => {
            let (a, b, w) = pair_w(instance);
            unit_equivalence(a, b, w)
        }
        ThmLeftStar4Way => {
            let (a, b, w) = pair_w(instance);
            left_star_4way(a, b, w)
        }
        ThmRightSharp3Way => {
            let (a, b, w) = pair_w(instance);
            right_sharp_3way(a, b, w)
        }
        LemAwProduct => {
            let (a, w) = single_w(instance);
            aw_product(a, w)
        }
        ThmWCoreIffAwCore => {
            let (a, b, w) = pair_w(instance);
            wcore_iff_aw_core(a, b, w)
        }
        ThmThreeClassCore => {
            let (a, b) = pair(instance);
            three_class_core(a, b)
        }
        ThmThreeClassStar => {
            let (a, b) = pair(instance);
            three_class_star(a, b)
        }
        ThmEp5Way => {
            let (a, b) = pair(instance);
            ep_5way(a, b)
        }
        PropImpliesDiamond => {
            let (a, b, w) = pair_w(instance);
            implies_diamond(a, b, w)
        }
        ThmDifference3Way => {
            let (a, b, w) = pair_w(instance);
            difference_3way(a, b, w)
        }
        CorDifferenceCore => {
            let (a, b) = pair(instance);
            difference_core(a, b)
        }
        CorDifferenceACore => {
            let (a, b) = pair(instance);
            difference_a_core(a, b)
        }
        ThmReverseOrder => {
            let (a, b, w) = pair_w(instance);
            reverse_order(a, b, w)
        }
        ExReverseCounterexample => ex_reverse_counterexample(),
    }
}

fn pair_w(instance: &Instance) -> (&Matrix, &Matrix, &Matrix) {
    match instance {
        Instance::PairW { a, b, w } => (a, b, w),
        _ => panic!("checker expects an (a, b, w) instance"),
    }
}

fn triple_w(instance: &Instance) -> (&Matrix, &Matrix, &Matrix, &Matrix) {
    match instance {
        Instance::TripleW { a, b, c, w } => (a, b, c, w),
        _ => panic!("checker expects an (a, b, c, w) instance"),
    }
}

fn pair(instance: &Instance) -> (&Matrix, &Matrix) {
    match instance {
        Instance::Pair { a, b } => (a, b),
        _ => panic!("checker expects an (a, b) instance"),
    }
}

fn single_w(instance: &Instance) -> (&Matrix, &Matrix) {
    match instance {
        Instance::SingleW { a, w } => (a, w),
        _ => panic!("checker expects an (a, w) instance"),
    }
}

fn candidate_w(instance: &Instance) -> (&Matrix, &Matrix, &Matrix) {
    match instance {
        Instance::CandidateW { a, w, candidate } => (a, w, candidate),
        _ => panic!("checker expects an (a, w, candidate) instance"),
    }
}

fn def_wcore_relation(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    if !is_w_core_invertible(b, w) {
        return inapplicable("b is not w-core invertible");
    }
    let eqs = relation_eqs(a, &x, b, w);
    let strict = order_holds_with_mode(OrderKind::WCore(w.clone()), a, b, OrderMode::Strict)
        .expect("both memberships hold");
    let relaxed = order_holds_with_mode(OrderKind::WCore(w.clone()), a, b, OrderMode::Relaxed)
        .expect("a is w-core invertible");
    if strict.holds != eqs {
        fails("strict verdict differs from the defining equations")
    } else if relaxed.holds != eqs {
        fails("relaxed verdict differs from the defining equations")
    } else {
        holds()
    }
}

fn lem_wcore_par(id: PropertyId, a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    if !relation_eqs(a, &xa, b, w) {
        return inapplicable("a is not below b in the w-core order");
    }
    let ok = match id {
        PropertyId::LemWCoreParI => xa.mul(a) == xb.mul(a),
        PropertyId::LemWCoreParII => a.mul(w).mul(&xa) == a.mul(w).mul(&xb),
        PropertyId::LemWCoreParIII => &a.mul(w).mul(&xb).mul(a) == a,
        PropertyId::LemWCoreParIV => xb.mul(&xa) == xa.mul(&xa),
        _ => unreachable!(),
    };
    if ok {
        holds()
    } else {
        fails(format!("{} conclusion fails", id.as_str()))
    }
}

fn partial_order_axioms(a: &Matrix, b: &Matrix, c: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb), Some(xc)) = (wcore(a, w), wcore(b, w), wcore(c, w)) else {
        return inapplicable("a, b, c must all be w-core invertible");
    };
    let rel = |u: &Matrix, xu: &Matrix, v: &Matrix| relation_eqs(u, xu, v, w);
    if !(rel(a, &xa, a) && rel(b, &xb, b) && rel(c, &xc, c)) {
        return fails("reflexivity");
    }
    if rel(a, &xa, b) && rel(b, &xb, a) && a != b {
        return fails("antisymmetry");
    }
    if rel(a, &xa, b) && rel(b, &xb, c) && !rel(a, &xa, c) {
        return fails("transitivity");
    }
    holds()
}

fn symmetric_char(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    let lhs = relation_eqs(a, &xa, b, w);
    let rhs = xa.mul(b) == xb.mul(a)
        && b.mul(w).mul(&xa) == a.mul(w).mul(&xb)
        && &a.mul(w).mul(&xb).mul(a) == a;
    agreement(&[("order", lhs), ("symmetric form", rhs)])
}

fn mixed_products(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    if !relation_eqs(a, &xa, b, w) {
        return inapplicable("a is not below b in the w-core order");
    }
    let checks = [
        ("a_w^⊕·b·w·b_w^⊕", xa.mul(b).mul(w).mul(&xb)),
        ("b_w^⊕·b·w·a_w^⊕", xb.mul(b).mul(w).mul(&xa)),
        ("a_w^⊕·b·w·a_w^⊕", xa.mul(b).mul(w).mul(&xa)),
        ("a_w^⊕·a·w·b_w^⊕", xa.mul(a).mul(w).mul(&xb)),
        ("b_w^⊕·a·w·a_w^⊕", xb.mul(a).mul(w).mul(&xa)),
        ("b_w^⊕·a·w·b_w^⊕", xb.mul(a).mul(w).mul(&xb)),
    ];
    for (name, value) in checks {
        if value != xa {
            return fails(format!("{name} ≠ a_w^⊕"));
        }
    }
    holds()
}

fn lem_projection(a: &Matrix, w: &Matrix, candidate: &Matrix) -> Verdict {
    if !is_w_core_invertible(a, w) {
        return inapplicable("a is not w-core invertible");
    }
    match orders::projection_characterization(a, w, candidate) {
        Err(_) => inapplicable("candidate is not a projection"),
        Ok(conds) => {
            let named: Vec<(&str, bool)> =
                conds.iter().map(|c| (c.id, c.outcome.as_bool())).collect();
            agreement(&named)
        }
    }
}

fn projection_6way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    let along = inverse_along(w, a)
        .expect("w invertible along a by membership")
        .value;
    let astar = a.star();
    let p = a.mul(w).mul(&x);
    let pa_eq_pb = p.mul(a) == p.mul(b);
    let conds = [
        ("i", x.mul(a) == x.mul(b)),
        ("ii", along == x.mul(b)),
        ("iii", astar.mul(a) == astar.mul(b)),
        ("iv", a == &p.mul(b)),
        ("v", Matrix::column_space_eq(a, &p) && pa_eq_pb),
        (
            "vi",
            Matrix::left_annihilator_contained(&p, a)
                && Matrix::left_annihilator_contained(a, &p)
                && pa_eq_pb,
        ),
    ];
    agreement(&conds)
}

fn lem_idempotent(
    a: &Matrix,
    w: &Matrix,
    candidate: &Matrix,
    side: orders::IdempotentSide,
) -> Verdict {
    if !is_w_core_invertible(a, w) {
        return inapplicable("a is not w-core invertible");
    }
    let conds = orders::idempotent_characterizations(a, w, candidate, side)
        .expect("membership established");
    let named: Vec<(&str, bool)> = conds.iter().map(|c| (c.id, c.outcome.as_bool())).collect();
    agreement(&named)
}

fn mary_criterion(a: &Matrix, w: &Matrix) -> Verdict {
    let aw = a.mul(w);
    let wa = w.mul(a);
    let along_exists = is_invertible_along(w, a);
    let right_form = Matrix::column_space_contained(a, &aw) && is_group_invertible(&aw);
    let left_form = Matrix::row_space_contained(a, &wa) && is_group_invertible(&wa);
    let verdict = agreement(&[
        ("w invertible along a", along_exists),
        ("a ∈ awR and aw group invertible", right_form),
        ("a ∈ Rwa and wa group invertible", left_form),
    ]);
    if !matches!(verdict, Verdict::Holds) {
        return verdict;
    }
    if along_exists {
        let along = inverse_along(w, a).expect("existence checked").value;
        let via_wa = a.mul(&group_inverse(&wa).expect("wa group invertible").value);
        let via_aw = group_inverse(&aw)
            .expect("aw group invertible")
            .value
            .mul(a);
        if along != via_wa {
            return fails("w^∥a ≠ a·(wa)^#");
        }
        if along != via_aw {
            return fails("w^∥a ≠ (aw)^#·a");
        }
    }
    holds()
}

fn idempotent_11way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    let along = inverse_along(w, a).expect("membership").value;
    let aw = a.mul(w);
    let wa = w.mul(a);
    let wa_sharp = group_inverse(&wa).expect("membership").value;
    let e = x.mul(a).mul(w);
    let f = w.mul(&x).mul(a);
    let ea_eq_a = &e.mul(a) == a;
    let awe_eq_bwe = aw.mul(&e) == b.mul(w).mul(&e);
    let af_eq_bf = a.mul(&f) == b.mul(&f);
    let fwa_eq_wa = f.mul(&wa) == wa;
    let conds = [
        ("i", aw.mul(&x) == b.mul(w).mul(&x)),
        ("ii", a == &b.mul(w).mul(&along)),
        ("iii", aw.mul(a) == b.mul(w).mul(a)),
        ("iv", a.mul(&wa_sharp) == b.mul(&wa_sharp)),
        ("v", a == &b.mul(w).mul(&x).mul(a)),
        ("vi", Matrix::row_space_eq(&e, &aw) && ea_eq_a && awe_eq_bwe),
        (
            "vii",
            Matrix::right_annihilator_contained(&e, &aw)
                && Matrix::right_annihilator_contained(&aw, &e)
                && ea_eq_a
                && awe_eq_bwe,
        ),
        (
            "viii",
            Matrix::right_annihilator_contained(&aw, &e) && ea_eq_a && awe_eq_bwe,
        ),
        ("ix", Matrix::row_space_eq(a, &f) && af_eq_bf && fwa_eq_wa),
        (
            "x",
            Matrix::right_annihilator_contained(a, &f)
                && Matrix::right_annihilator_contained(&f, a)
                && af_eq_bf
                && fwa_eq_wa,
        ),
        (
            "xi",
            Matrix::right_annihilator_contained(a, &f) && af_eq_bf && fwa_eq_wa,
        ),
    ];
    agreement(&conds)
}

fn wcore_12way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    match w_core_characterizations(a, b, w) {
        Err(_) => inapplicable("a is not w-core invertible"),
        Ok(conds) => {
            let named: Vec<(&str, bool)> =
                conds.iter().map(|c| (c.id, c.outcome.as_bool())).collect();
            agreement(&named)
        }
    }
}

fn core_12way(a: &Matrix, b: &Matrix) -> Verdict {
    if !is_core_invertible(a) {
        return inapplicable("a is not core invertible");
    }
    let id = Matrix::identity(a.domain(), a.rows());
    let conds = w_core_characterizations(a, b, &id).expect("a ∈ R^⊕ = R_1^⊕");
    let mut named: Vec<(&str, bool)> = conds.iter().map(|c| (c.id, c.outcome.as_bool())).collect();
    // cross-check the order predicate itself against condition (i)
    let via_order = core_order(a, b).expect("a core invertible");
    named.push(("core order verdict", via_order));
    agreement(&named)
}

fn implies_left_star_right_sharp(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    // the right-sharp conclusion genuinely needs b in R_w^⊕: with only a
    // w-core invertible the row-space inclusion R·wa ⊆ R·wb can fail
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    if !is_w_core_invertible(b, w) {
        return inapplicable("b is not w-core invertible");
    }
    if !relation_eqs(a, &x, b, w) {
        return inapplicable("a is not below b in the w-core order");
    }
    if !left_star(a, b) {
        return fails("left-star order does not follow");
    }
    let wa = w.mul(a);
    let wb = w.mul(b);
    match right_sharp(&wa, &wb) {
        Some(true) => holds(),
        Some(false) => fails("right-sharp order on (wa, wb) does not follow"),
        None => fails("wa is not group invertible"),
    }
}

fn ex2_converse_fails() -> Verdict {
    let f = fixtures::left_star_without_w_core();
    let expected = fixtures::left_star_expected();
    let Some(x) = wcore(&f.a, &f.w) else {
        return fails("a must be w-core invertible");
    };
    if x != expected.a_w_core {
        return fails("a_w^⊕ mismatch");
    }
    if !left_star(&f.a, &f.b) {
        return fails("left-star order must hold");
    }
    let wa = f.w.mul(&f.a);
    let wb = f.w.mul(&f.b);
    let wa_sharp = match group_inverse(&wa) {
        Ok(r) => r.value,
        Err(_) => return fails("wa must be group invertible"),
    };
    if wa_sharp != expected.wa_sharp {
        return fails("(wa)^# mismatch");
    }
    if right_sharp(&wa, &wb) != Some(true) {
        return fails("right-sharp order on (wa, wb) must hold");
    }
    let awx = f.a.mul(&f.w).mul(&x);
    let bwx = f.b.mul(&f.w).mul(&x);
    if awx != expected.awx || bwx != expected.bwx || awx == bwx {
        return fails("a·w·a_w^⊕ must differ from b·w·a_w^⊕");
    }
    if relaxed_wcore(&f.a, &f.b, &f.w) != Some(false) {
        return fails("the w-core order must fail");
    }
    holds()
}

fn unit_equivalence(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    if !w.is_unit() {
        return inapplicable("w is not a unit");
    }
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    let lhs = relation_eqs(a, &x, b, w);
    let wa = w.mul(a);
    let wb = w.mul(b);
    let rhs = left_star(a, b) && right_sharp(&wa, &wb) == Some(true);
    agreement(&[("w-core order", lhs), ("left-star ∧ right-sharp", rhs)])
}

fn left_star_4way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    let ls = left_star(a, b);
    let conds = [
        ("i", relation_eqs(a, &xa, b, w)),
        ("ii", ls && a == &b.mul(w).mul(&xa).mul(b)),
        ("iii", ls && xa == xb.mul(a).mul(w).mul(&xa)),
        ("iv", ls && xa == xb.mul(a).mul(w).mul(&xb)),
    ];
    agreement(&conds)
}

fn right_sharp_3way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    if !w.is_unit() {
        return inapplicable("w is not a unit");
    }
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    let rs = right_sharp(&w.mul(a), &w.mul(b)) == Some(true);
    let conds = [
        ("i", relation_eqs(a, &xa, b, w)),
        ("ii", rs && a == &b.mul(w).mul(&xa).mul(b)),
        ("iii", rs && xa == xa.mul(a).mul(w).mul(&xb)),
    ];
    agreement(&conds)
}

fn aw_product(a: &Matrix, w: &Matrix) -> Verdict {
    let aw = a.mul(w);
    let member = is_w_core_invertible(a, w);
    let product_form = Matrix::column_space_eq(a, &aw) && is_core_invertible(&aw);
    let verdict = agreement(&[
        ("a is w-core invertible", member),
        ("aR = awR and aw core invertible", product_form),
    ]);
    if !matches!(verdict, Verdict::Holds) {
        return verdict;
    }
    if member {
        let x = wcore(a, w).expect("membership");
        let aw_core = core_inverse(&aw).expect("product form").value;
        if x != aw_core {
            return fails("a_w^⊕ ≠ (aw)^⊕");
        }
        match w_core_via_product(a, w) {
            Ok(via) if via.value == x => {}
            Ok(_) => return fails("product-route value differs"),
            Err(_) => return fails("product route must succeed"),
        }
    } else if w_core_via_product(a, w).is_ok() {
        return fails("product route must fail when membership fails");
    }
    holds()
}

fn wcore_iff_aw_core(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    if !w.is_unit() {
        return inapplicable("w is not a unit");
    }
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    let lhs = relation_eqs(a, &x, b, w);
    let rhs = core_order(&a.mul(w), &b.mul(w)).expect("aw core invertible by membership");
    agreement(&[("w-core order", lhs), ("core order on (aw, bw)", rhs)])
}

fn three_class_core(a: &Matrix, b: &Matrix) -> Verdict {
    let id = Matrix::identity(a.domain(), a.rows());
    let m_core = is_core_invertible(a);
    let m_self = is_w_core_invertible(a, a);
    let m_one = is_w_core_invertible(a, &id);
    let membership = agreement(&[
        ("core invertible", m_core),
        ("a-core invertible", m_self),
        ("1-core invertible", m_one),
    ]);
    if !matches!(membership, Verdict::Holds) {
        return membership;
    }
    if !m_core {
        return holds();
    }
    let conds = [
        ("core order", core_order(a, b).expect("membership")),
        ("a-core order", relaxed_wcore(a, b, a).expect("membership")),
        (
            "1-core order",
            relaxed_wcore(a, b, &id).expect("membership"),
        ),
    ];
    agreement(&conds)
}

fn three_class_star(a: &Matrix, b: &Matrix) -> Verdict {
    let astar = a.star();
    let m_mp = is_moore_penrose_invertible(a);
    let m_star_core = is_w_core_invertible(a, &astar);
    let membership = agreement(&[
        ("Moore-Penrose invertible", m_mp),
        ("a*-core invertible", m_star_core),
    ]);
    if !matches!(membership, Verdict::Holds) {
        return membership;
    }
    if !m_mp {
        return holds();
    }
    let conds = [
        ("star order", star(a, b)),
        (
            "a*-core order",
            relaxed_wcore(a, b, &astar).expect("membership"),
        ),
    ];
    agreement(&conds)
}

fn ep_5way(a: &Matrix, b: &Matrix) -> Verdict {
    if !geninv::is_ep(a) {
        return inapplicable("a is not EP");
    }
    let astar = a.star();
    let conds = [
        ("a-core order", relaxed_wcore(a, b, a).expect("EP")),
        ("a*-core order", relaxed_wcore(a, b, &astar).expect("EP")),
        ("core order", core_order(a, b).expect("EP")),
        ("star order", star(a, b)),
        ("sharp order", sharp(a, b).expect("EP")),
    ];
    agreement(&conds)
}

fn implies_diamond(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let Some(x) = wcore(a, w) else {
        return inapplicable("a is not w-core invertible");
    };
    if !relation_eqs(a, &x, b, w) {
        return inapplicable("a is not below b in the w-core order");
    }
    if diamond(a, b) {
        holds()
    } else {
        fails("diamond order does not follow")
    }
}

fn difference_3way(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    if a.mul(w).mul(b) != b.mul(w).mul(a) {
        return inapplicable("awb ≠ bwa");
    }
    let d = b.sub(a);
    let (Some(xa), Some(xd)) = (wcore(a, w), wcore(&d, w)) else {
        return inapplicable("a and b-a must be w-core invertible");
    };
    if !is_w_core_invertible(b, w) {
        return inapplicable("b is not w-core invertible");
    }
    let ls = left_star(a, b);
    let wa_below_wb = sharp(&w.mul(a), &w.mul(b));
    let conds = [
        ("a below b", relation_eqs(a, &xa, b, w)),
        ("b-a below b", relation_eqs(&d, &xd, b, w)),
        (
            "left-star ∧ sharp on (wa, wb)",
            ls && wa_below_wb == Some(true),
        ),
    ];
    agreement(&conds)
}

fn difference_core(a: &Matrix, b: &Matrix) -> Verdict {
    let d = b.sub(a);
    if !(is_core_invertible(a) && is_core_invertible(b) && is_core_invertible(&d)) {
        return inapplicable("a, b, b-a must all be core invertible");
    }
    let commute = a.mul(b) == b.mul(a);
    let conds = [
        (
            "core order ∧ commuting",
            core_order(a, b).expect("membership") && commute,
        ),
        (
            "difference core order ∧ commuting",
            core_order(&d, b).expect("membership") && commute,
        ),
        (
            "left-star ∧ sharp",
            left_star(a, b) && sharp(a, b) == Some(true),
        ),
    ];
    agreement(&conds)
}

fn difference_a_core(a: &Matrix, b: &Matrix) -> Verdict {
    let aa = a.mul(a);
    if aa.mul(b) != b.mul(&aa) {
        return inapplicable("a²b ≠ ba²");
    }
    let d = b.sub(a);
    if !(is_core_invertible(a) && is_core_invertible(b) && is_core_invertible(&d)) {
        return inapplicable("a, b, b-a must all be core invertible");
    }
    let conds = [
        ("core order", core_order(a, b).expect("membership")),
        (
            "difference core order",
            core_order(&d, b).expect("membership"),
        ),
        (
            "left-star ∧ a² sharp-below ab",
            left_star(a, b) && sharp(&aa, &a.mul(b)) == Some(true),
        ),
    ];
    agreement(&conds)
}

fn reverse_order(a: &Matrix, b: &Matrix, w: &Matrix) -> Verdict {
    let (Some(xa), Some(xb)) = (wcore(a, w), wcore(b, w)) else {
        return inapplicable("a and b must both be w-core invertible");
    };
    if !relation_eqs(a, &xa, b, w) {
        return inapplicable("a is not below b in the w-core order");
    }
    let awb = a.mul(w).mul(b);
    let Some(product) = wcore(&awb, w) else {
        return fails("a·w·b must be w-core invertible");
    };
    if product == xb.mul(&xa) {
        holds()
    } else {
        fails("(a·w·b)_w^⊕ ≠ b_w^⊕·a_w^⊕")
    }
}

fn ex_reverse_counterexample() -> Verdict {
    let f = fixtures::reverse_order_counterexample();
    let expected = fixtures::reverse_order_expected();
    let (Some(xa), Some(xb)) = (wcore(&f.a, &f.w), wcore(&f.b, &f.w)) else {
        return fails("a and b must be w-core invertible");
    };
    if !relation_eqs(&f.a, &xa, &f.b, &f.w) {
        return fails("the w-core order must hold (a = b)");
    }
    let ab = f.a.mul(&f.b);
    let Some(ab_core) = wcore(&ab, &f.w) else {
        return fails("a·b must be w-core invertible");
    };
    if ab_core != expected.product_w_core {
        return fails("(a·b)_w^⊕ mismatch");
    }
    let factored = xb.mul(&xa);
    if factored != expected.factored {
        return fails("b_w^⊕·a_w^⊕ mismatch");
    }
    if ab_core == factored {
        return fails("(a·b)_w^⊕ must differ from b_w^⊕·a_w^⊕");
    }
    let awb = f.a.mul(&f.w).mul(&f.b);
    match wcore(&awb, &f.w) {
        Some(v) if v == factored => holds(),
        Some(_) => fails("(a·w·b)_w^⊕ ≠ b_w^⊕·a_w^⊕"),
        None => fails("a·w·b must be w-core invertible"),
    }
}
