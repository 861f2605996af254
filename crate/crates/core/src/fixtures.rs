//! Built-in worked instances over the Gaussian rationals. Each fixture pins
//! every displayed value exactly, and together they exercise the three
//! boundary phenomena the order machinery has to get right: a w-core
//! comparison that the core order misses, a left-star/right-sharp pair that
//! the w-core order rejects, and the failure of the naive reverse-order law.

use crate::matrix::Matrix;
use crate::scalar::{parse_scalar, ScalarDomain};

fn qi() -> ScalarDomain {
    ScalarDomain::gaussian_rationals()
}

pub fn mat(rows: &[&[&str]]) -> Matrix {
    let domain = qi();
    Matrix::from_fn(domain, rows.len(), rows[0].len(), |i, j| {
        parse_scalar(rows[i][j], domain).unwrap()
    })
}

/// One triple (a, b, w) plus the values a computation must reproduce.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub a: Matrix,
    pub b: Matrix,
    pub w: Matrix,
}

/// a is below b in the w-core order while the core order fails: the w-core
/// order does not collapse to the core order.
pub fn w_core_without_core_order() -> Fixture {
    Fixture {
        name: "w_core_without_core_order",
        a: mat(&[&["1", "1"], &["0", "0"]]),
        b: mat(&[&["1", "1"], &["2", "-2"]]),
        w: mat(&[&["1", "0"], &["1", "0"]]),
    }
}

/// Expected values for [`w_core_without_core_order`].
pub struct WCoreWithoutCoreExpected {
    pub a_w_core: Matrix,
    pub a_core: Matrix,
    pub xw_a: Matrix,
    pub awx: Matrix,
    pub a_core_proj: Matrix,
    pub b_core_proj: Matrix,
}

pub fn w_core_without_core_expected() -> WCoreWithoutCoreExpected {
    WCoreWithoutCoreExpected {
        a_w_core: mat(&[&["1/2", "0"], &["0", "0"]]),
        a_core: mat(&[&["1", "0"], &["0", "0"]]),
        // a_w^⊕·a = a_w^⊕·b
        xw_a: mat(&[&["1/2", "1/2"], &["0", "0"]]),
        // a·w·a_w^⊕ = b·w·a_w^⊕
        awx: mat(&[&["1", "0"], &["0", "0"]]),
        // a·a^⊕ vs b·a^⊕
        a_core_proj: mat(&[&["1", "0"], &["0", "0"]]),
        b_core_proj: mat(&[&["1", "0"], &["2", "0"]]),
    }
}

/// a is below b in the left-star order and w·a is below w·b in the right
/// sharp order, yet the w-core order fails: the converse of the implication
/// into those orders needs a unit w.
pub fn left_star_without_w_core() -> Fixture {
    Fixture {
        name: "left_star_without_w_core",
        a: mat(&[&["1", "1"], &["0", "0"]]),
        b: mat(&[&["1", "1"], &["2", "0"]]),
        w: mat(&[&["1", "0"], &["0", "0"]]),
    }
}

pub struct LeftStarExpected {
    pub a_w_core: Matrix,
    pub wa_sharp: Matrix,
    pub awx: Matrix,
    pub bwx: Matrix,
}

pub fn left_star_expected() -> LeftStarExpected {
    LeftStarExpected {
        a_w_core: mat(&[&["1", "0"], &["0", "0"]]),
        wa_sharp: mat(&[&["1", "1"], &["0", "0"]]),
        awx: mat(&[&["1", "0"], &["0", "0"]]),
        bwx: mat(&[&["1", "0"], &["2", "0"]]),
    }
}

/// a = b, so the w-core order holds, yet (a·b)_w^⊕ differs from
/// b_w^⊕·a_w^⊕: the reverse-order law holds for a·w·b, not for a·b.
pub fn reverse_order_counterexample() -> Fixture {
    let a = mat(&[&["1", "1"], &["0", "0"]]);
    Fixture {
        name: "reverse_order_counterexample",
        b: a.clone(),
        a,
        w: mat(&[&["1", "0"], &["1", "0"]]),
    }
}

pub struct ReverseOrderExpected {
    pub product_w_core: Matrix,
    pub factored: Matrix,
}

pub fn reverse_order_expected() -> ReverseOrderExpected {
    ReverseOrderExpected {
        // (a·b)_w^⊕
        product_w_core: mat(&[&["1/2", "0"], &["0", "0"]]),
        // b_w^⊕·a_w^⊕ = (a·w·b)_w^⊕
        factored: mat(&[&["1/4", "0"], &["0", "0"]]),
    }
}

pub fn all() -> Vec<Fixture> {
    vec![
        w_core_without_core_order(),
        left_star_without_w_core(),
        reverse_order_counterexample(),
    ]
}
