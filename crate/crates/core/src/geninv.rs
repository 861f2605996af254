//! Constructors and existence tests for generalized inverses in the matrix
//! *-ring, each returning the computed inverse together with a verification
//! certificate re-checking every defining equation.
//!
//! The unique kinds (group, Moore–Penrose, core, w-core, inverse along an
//! element) are computed through rank factorizations; the non-unique kinds
//! (inner, reflexive, {1,3}, {1,4}) return a canonical representative that
//! is deterministic for a fixed pivot strategy.

use thiserror::Error;

use crate::matrix::{Matrix, PivotStrategy};

/// Which inverse a [`GenInvResult`] certifies. Kinds that depend on an
/// auxiliary element carry it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenInvKind {
    Inner,
    Reflexive,
    Group,
    OneThree,
    OneFour,
    MoorePenrose,
    InverseAlong(Matrix),
    Core,
    WCore(Matrix),
}

impl serde::Serialize for GenInvKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl GenInvKind {
    pub fn name(&self) -> &'static str {
        match self {
            GenInvKind::Inner => "inner",
            GenInvKind::Reflexive => "reflexive",
            GenInvKind::Group => "group",
            GenInvKind::OneThree => "one_three",
            GenInvKind::OneFour => "one_four",
            GenInvKind::MoorePenrose => "moore_penrose",
            GenInvKind::InverseAlong(_) => "inverse_along",
            GenInvKind::Core => "core",
            GenInvKind::WCore(_) => "w_core",
        }
    }
}

/// One checked defining equation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CertEntry {
    pub equation: String,
    pub holds: bool,
}

/// A computed inverse plus its re-verified defining equations. Constructors
/// never return a result with a failed certificate; the candidate-checking
/// entry point [`certificate_for`] is the way to inspect failures.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GenInvResult {
    pub kind: GenInvKind,
    pub value: Matrix,
    pub certificate: Vec<CertEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WCoreFailure {
    #[error("w is not invertible along a")]
    WNotInvertibleAlongA,
    #[error("a has no {{1,3}}-inverse")]
    NotOneThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenInvError {
    #[error("not group invertible: rank(a^2) < rank(a)")]
    NotGroupInvertible,
    #[error("no {{1,3}}-inverse exists")]
    NotOneThreeInvertible,
    #[error("no {{1,4}}-inverse exists")]
    NotOneFourInvertible,
    #[error("not Moore-Penrose invertible")]
    NotMoorePenroseInvertible,
    #[error("not invertible along the given element")]
    NotInvertibleAlong,
    #[error("not core invertible")]
    NotCoreInvertible,
    #[error("not w-core invertible: {0}")]
    NotWCoreInvertible(WCoreFailure),
}

fn assert_square(a: &Matrix) {
    assert!(a.is_square(), "ring elements are square matrices");
}

fn assert_compatible(a: &Matrix, b: &Matrix) {
    assert_square(a);
    assert_square(b);
    assert_eq!(a.rows(), b.rows(), "size mismatch");
    assert_eq!(a.domain(), b.domain(), "domain mismatch");
}

fn entry(equation: impl Into<String>, holds: bool) -> CertEntry {
    CertEntry {
        equation: equation.into(),
        holds,
    }
}

/// Evaluate the defining equations of `kind` on a candidate `x` without
/// asserting them, so callers can see which clauses a candidate fails.
pub fn certificate_for(kind: &GenInvKind, a: &Matrix, x: &Matrix) -> Vec<CertEntry> {
    match kind {
        GenInvKind::Inner => vec![entry("a·x·a = a", &a.mul(x).mul(a) == a)],
        GenInvKind::Reflexive => vec![
            entry("a·x·a = a", &a.mul(x).mul(a) == a),
            entry("x·a·x = x", &x.mul(a).mul(x) == x),
        ],
        GenInvKind::Group => vec![
            entry("a·x·a = a", &a.mul(x).mul(a) == a),
            entry("x·a·x = x", &x.mul(a).mul(x) == x),
            entry("a·x = x·a", a.mul(x) == x.mul(a)),
        ],
        GenInvKind::OneThree => {
            let ax = a.mul(x);
            vec![
                entry("a·x·a = a", &ax.mul(a) == a),
                entry("(a·x)* = a·x", ax.star() == ax),
            ]
        }
        GenInvKind::OneFour => {
            let xa = x.mul(a);
            vec![
                entry("a·x·a = a", &a.mul(&xa) == a),
                entry("(x·a)* = x·a", xa.star() == xa),
            ]
        }
        GenInvKind::MoorePenrose => {
            let ax = a.mul(x);
            let xa = x.mul(a);
            vec![
                entry("a·x·a = a", &ax.mul(a) == a),
                entry("x·a·x = x", &xa.mul(x) == x),
                entry("(a·x)* = a·x", ax.star() == ax),
                entry("(x·a)* = x·a", xa.star() == xa),
            ]
        }
        GenInvKind::InverseAlong(d) => {
            // here `a` is the element being inverted and `d` the element it
            // is inverted along; x is the candidate inverse
            vec![
                entry("x·a·d = d", &x.mul(a).mul(d) == d),
                entry("d·a·x = d", &d.mul(a).mul(x) == d),
                entry("x ∈ d·R", Matrix::column_space_contained(x, d)),
                entry("x ∈ R·d", Matrix::row_space_contained(x, d)),
            ]
        }
        GenInvKind::Core => {
            let ax = a.mul(x);
            vec![
                entry("a·x·a = a", &ax.mul(a) == a),
                entry("x·a·x = x", &x.mul(a).mul(x) == x),
                entry("a·x² = x", &ax.mul(x) == x),
                entry("x·a² = a", &x.mul(a).mul(a) == a),
                entry("(a·x)* = a·x", ax.star() == ax),
            ]
        }
        GenInvKind::WCore(w) => {
            let awx = a.mul(w).mul(x);
            vec![
                entry("a·w·x² = x", &awx.mul(x) == x),
                entry("x·a·w·a = a", &x.mul(a).mul(w).mul(a) == a),
                entry("(a·w·x)* = a·w·x", awx.star() == awx),
                entry("a·w·x·a = a", &awx.mul(a) == a),
                entry("x·a·w·x = x", &x.mul(a).mul(w).mul(x) == x),
            ]
        }
    }
}

fn certify(kind: GenInvKind, a: &Matrix, value: Matrix) -> GenInvResult {
    let certificate = certificate_for(&kind, a, &value);
    for c in &certificate {
        assert!(
            c.holds,
            "certificate failure for {} inverse: {} does not hold\na =\n{}\nx =\n{}",
            kind.name(),
            c.equation,
            a,
            value
        );
    }
    GenInvResult {
        kind,
        value,
        certificate,
    }
}

/// Canonical inner inverse: with invertible p, q such that p·a·q = diag(I_r, 0),
/// return q·diag(I_r, 0)·p. Every square matrix over a field has one.
pub fn inner_inverse(a: &Matrix) -> GenInvResult {
    inner_inverse_with(a, PivotStrategy::FirstNonzero)
}

pub fn inner_inverse_with(a: &Matrix, strategy: PivotStrategy) -> GenInvResult {
    assert_square(a);
    let n = a.rows();
    let domain = a.domain();
    let rref = a.rref_with(strategy);
    let r = rref.rank;
    // column operations turning the echelon form into diag(I_r, 0):
    // permute pivot columns to the front, then clear the non-pivot block
    let mut order: Vec<usize> = rref.pivots.clone();
    for j in 0..n {
        if !rref.pivots.contains(&j) {
            order.push(j);
        }
    }
    let perm = Matrix::from_fn(domain, n, n, |i, j| {
        if order[j] == i {
            crate::scalar::Scalar::one(domain)
        } else {
            crate::scalar::Scalar::zero(domain)
        }
    });
    let permuted = rref.r.mul(&perm); // [I_r S; 0 0]
    let clear = Matrix::from_fn(domain, n, n, |i, j| {
        if i == j {
            crate::scalar::Scalar::one(domain)
        } else if i < r && j >= r {
            -permuted.at(i, j)
        } else {
            crate::scalar::Scalar::zero(domain)
        }
    });
    let q = perm.mul(&clear);
    let diag = Matrix::from_fn(domain, n, n, |i, j| {
        if i == j && i < r {
            crate::scalar::Scalar::one(domain)
        } else {
            crate::scalar::Scalar::zero(domain)
        }
    });
    let x = q.mul(&diag).mul(&rref.t);
    certify(GenInvKind::Inner, a, x)
}

/// Canonical reflexive inverse x = a⁻·a·a⁻.
pub fn reflexive_inverse(a: &Matrix) -> GenInvResult {
    let inner = inner_inverse(a).value;
    let x = inner.mul(a).mul(&inner);
    certify(GenInvKind::Reflexive, a, x)
}

/// Group inverse a^#. Exists iff rank(a²) = rank(a), equivalently iff g·f is
/// invertible for a rank factorization a = f·g; the value is f·(g·f)^{-2}·g.
pub fn group_inverse(a: &Matrix) -> Result<GenInvResult, GenInvError> {
    assert_square(a);
    let rf = a.rank_factorization();
    let gf = rf.g.mul(&rf.f);
    let Some(gf_inv) = gf.inverse() else {
        return Err(GenInvError::NotGroupInvertible);
    };
    let x = rf.f.mul(&gf_inv).mul(&gf_inv).mul(&rf.g);
    Ok(certify(GenInvKind::Group, a, x))
}

pub fn is_group_invertible(a: &Matrix) -> bool {
    let rf = a.rank_factorization();
    rf.g.mul(&rf.f).is_unit()
}

/// {1,3}-inverse. Exists iff rank(a*·a) = rank(a) and col(a*) = col(a*·a);
/// over the rationals and Gaussian rationals both always hold. The value is
/// g·a* for g an inner inverse of a*·a.
pub fn one_three_inverse(a: &Matrix) -> Result<GenInvResult, GenInvError> {
    one_three_inverse_with(a, PivotStrategy::FirstNonzero)
}

pub fn one_three_inverse_with(
    a: &Matrix,
    strategy: PivotStrategy,
) -> Result<GenInvResult, GenInvError> {
    assert_square(a);
    let astar = a.star();
    let asa = astar.mul(a);
    if asa.rank() != a.rank() || !Matrix::column_space_contained(&astar, &asa) {
        return Err(GenInvError::NotOneThreeInvertible);
    }
    let g = inner_inverse_with(&asa, strategy).value;
    let x = g.mul(&astar);
    Ok(certify(GenInvKind::OneThree, a, x))
}

/// {1,4}-inverse: dual of the {1,3} case, x = a*·g with g an inner inverse
/// of a·a*.
pub fn one_four_inverse(a: &Matrix) -> Result<GenInvResult, GenInvError> {
    one_four_inverse_with(a, PivotStrategy::FirstNonzero)
}

pub fn one_four_inverse_with(
    a: &Matrix,
    strategy: PivotStrategy,
) -> Result<GenInvResult, GenInvError> {
    assert_square(a);
    let astar = a.star();
    let aas = a.mul(&astar);
    if aas.rank() != a.rank() || !Matrix::row_space_contained(&astar, &aas) {
        return Err(GenInvError::NotOneFourInvertible);
    }
    let g = inner_inverse_with(&aas, strategy).value;
    let x = astar.mul(&g);
    Ok(certify(GenInvKind::OneFour, a, x))
}

/// Moore–Penrose inverse a^† = a^(1,4)·a·a^(1,3); exists iff both one-sided
/// star inverses do. Uniqueness makes the value independent of which
/// {1,3}/{1,4}-inverses the construction picked.
pub fn moore_penrose(a: &Matrix) -> Result<GenInvResult, GenInvError> {
    moore_penrose_with(a, PivotStrategy::FirstNonzero)
}

pub fn moore_penrose_with(
    a: &Matrix,
    strategy: PivotStrategy,
) -> Result<GenInvResult, GenInvError> {
    let one_three =
        one_three_inverse_with(a, strategy).map_err(|_| GenInvError::NotMoorePenroseInvertible)?;
    let one_four =
        one_four_inverse_with(a, strategy).map_err(|_| GenInvError::NotMoorePenroseInvertible)?;
    let x = one_four.value.mul(a).mul(&one_three.value);
    Ok(certify(GenInvKind::MoorePenrose, a, x))
}

pub fn is_moore_penrose_invertible(a: &Matrix) -> bool {
    moore_penrose(a).is_ok()
}

/// The inverse of `x` along `d`: the unique y with y·x·d = d = d·x·y and
/// y ∈ d·R ∩ R·d. Exists iff d ∈ d·x·R and d·x is group invertible
/// (equivalently d ∈ R·x·d and x·d is group invertible); the value is
/// d·(x·d)^#.
pub fn inverse_along(x: &Matrix, d: &Matrix) -> Result<GenInvResult, GenInvError> {
    assert_compatible(x, d);
    if !is_invertible_along(x, d) {
        return Err(GenInvError::NotInvertibleAlong);
    }
    let xd_sharp = group_inverse(&x.mul(d))
        .expect("x·d is group invertible by the existence test")
        .value;
    let y = d.mul(&xd_sharp);
    Ok(certify(GenInvKind::InverseAlong(d.clone()), x, y))
}

pub fn is_invertible_along(x: &Matrix, d: &Matrix) -> bool {
    let xd = x.mul(d);
    Matrix::row_space_contained(d, &xd) && is_group_invertible(&xd)
}

/// Core inverse a^⊕ = a^#·a·a^(1,3); exists iff a is group invertible and
/// {1,3}-invertible.
pub fn core_inverse(a: &Matrix) -> Result<GenInvResult, GenInvError> {
    let sharp = group_inverse(a).map_err(|_| GenInvError::NotCoreInvertible)?;
    let one_three = one_three_inverse(a).map_err(|_| GenInvError::NotCoreInvertible)?;
    let x = sharp.value.mul(a).mul(&one_three.value);
    Ok(certify(GenInvKind::Core, a, x))
}

pub fn is_core_invertible(a: &Matrix) -> bool {
    is_group_invertible(a) && one_three_inverse(a).is_ok()
}

/// w-core inverse a_w^⊕ = w^∥a·a^(1,3); exists iff w is invertible along a
/// and a is {1,3}-invertible. The error distinguishes which leg failed.
pub fn w_core_inverse(a: &Matrix, w: &Matrix) -> Result<GenInvResult, GenInvError> {
    assert_compatible(a, w);
    let along = inverse_along(w, a)
        .map_err(|_| GenInvError::NotWCoreInvertible(WCoreFailure::WNotInvertibleAlongA))?;
    let one_three = one_three_inverse(a)
        .map_err(|_| GenInvError::NotWCoreInvertible(WCoreFailure::NotOneThree))?;
    let x = along.value.mul(&one_three.value);
    Ok(certify(GenInvKind::WCore(w.clone()), a, x))
}

pub fn is_w_core_invertible(a: &Matrix, w: &Matrix) -> bool {
    is_invertible_along(w, a) && one_three_inverse(a).is_ok()
}

/// Alternative w-core construction through the product: a is w-core
/// invertible iff a·R = a·w·R and a·w is core invertible, and then
/// a_w^⊕ = (a·w)^⊕. Must agree with [`w_core_inverse`] whenever both
/// succeed.
pub fn w_core_via_product(a: &Matrix, w: &Matrix) -> Result<GenInvResult, GenInvError> {
    assert_compatible(a, w);
    let aw = a.mul(w);
    if !Matrix::column_space_eq(a, &aw) {
        return Err(GenInvError::NotWCoreInvertible(
            WCoreFailure::WNotInvertibleAlongA,
        ));
    }
    let core = core_inverse(&aw)
        .map_err(|_| GenInvError::NotWCoreInvertible(WCoreFailure::WNotInvertibleAlongA))?;
    Ok(certify(GenInvKind::WCore(w.clone()), a, core.value))
}

/// a is EP iff it is Moore–Penrose invertible and a·a^† = a^†·a.
pub fn is_ep(a: &Matrix) -> bool {
    match moore_penrose(a) {
        Ok(mp) => a.mul(&mp.value) == mp.value.mul(a),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Scalar, ScalarDomain};
    use proptest::prelude::*;

    fn q() -> ScalarDomain {
        ScalarDomain::rationals()
    }

    fn qi() -> ScalarDomain {
        ScalarDomain::gaussian_rationals()
    }

    fn z2() -> ScalarDomain {
        ScalarDomain::mod_p(2).unwrap()
    }

    fn parse_mat(domain: ScalarDomain, rows: &[&[&str]]) -> Matrix {
        Matrix::from_fn(domain, rows.len(), rows[0].len(), |i, j| {
            parse_scalar(rows[i][j], domain).unwrap()
        })
    }

    #[test]
    fn inner_inverse_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(inner_inverse(&id).value, id);
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(inner_inverse(&zero).value, zero);
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        let x = inner_inverse(&a).value;
        assert_eq!(a.mul(&x).mul(&a), a);
    }

    #[test]
    fn reflexive_inverse_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(reflexive_inverse(&id).value, id);
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(reflexive_inverse(&zero).value, zero);
        let a = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let r = reflexive_inverse(&a);
        assert!(r.certificate.iter().all(|c| c.holds));
    }

    #[test]
    fn group_inverse_examples() {
        // idempotents are their own group inverse
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        assert_eq!(group_inverse(&a).unwrap().value, a);
        // nilpotent: rank drops
        let n = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        assert_eq!(group_inverse(&n), Err(GenInvError::NotGroupInvertible));
        // zero matrix: 0^# = 0
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(group_inverse(&zero).unwrap().value, zero);
    }

    #[test]
    fn one_three_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(one_three_inverse(&id).unwrap().value, id);
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        let x = one_three_inverse(&a).unwrap().value;
        // a·x is the unique self-adjoint idempotent projecting onto col(a)
        assert_eq!(a.mul(&x), Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]));
        // over Z_2 the all-ones matrix has a*·a = 0 but a ≠ 0
        let ones = Matrix::from_i64(z2(), &[&[1, 1], &[1, 1]]);
        assert_eq!(
            one_three_inverse(&ones),
            Err(GenInvError::NotOneThreeInvertible)
        );
    }

    #[test]
    fn one_four_duality() {
        // x ∈ a{1,4} iff x* ∈ a*{1,3}
        let a = Matrix::from_i64(q(), &[&[1, 0], &[1, 0]]);
        let x = one_four_inverse(&a).unwrap().value;
        let cert = certificate_for(&GenInvKind::OneThree, &a.star(), &x.star());
        assert!(cert.iter().all(|c| c.holds));
    }

    #[test]
    fn moore_penrose_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(moore_penrose(&id).unwrap().value, id);
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(moore_penrose(&zero).unwrap().value, zero);
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        assert_eq!(
            moore_penrose(&a).unwrap().value,
            parse_mat(q(), &[&["1/2", "0"], &["1/2", "0"]])
        );
    }

    #[test]
    fn inverse_along_examples() {
        // 1^∥a = a·a^# for group invertible a
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        let id = Matrix::identity(q(), 2);
        let y = inverse_along(&id, &a).unwrap().value;
        let sharp = group_inverse(&a).unwrap().value;
        assert_eq!(y, a.mul(&sharp));

        // w^∥a on the first worked instance
        let w = Matrix::from_i64(q(), &[&[1, 0], &[1, 0]]);
        let y = inverse_along(&w, &a).unwrap().value;
        assert_eq!(y, parse_mat(q(), &[&["1/2", "1/2"], &["0", "0"]]));
        assert_eq!(y.mul(&w).mul(&a), a);
        assert_eq!(a.mul(&w).mul(&y), a);

        // nothing is invertible along a nonzero d through x = 0
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(
            inverse_along(&zero, &a),
            Err(GenInvError::NotInvertibleAlong)
        );
    }

    #[test]
    fn core_inverse_examples() {
        let a = Matrix::from_i64(qi(), &[&[1, 1], &[0, 0]]);
        assert_eq!(
            core_inverse(&a).unwrap().value,
            Matrix::from_i64(qi(), &[&[1, 0], &[0, 0]])
        );
        let id = Matrix::identity(q(), 2);
        assert_eq!(core_inverse(&id).unwrap().value, id);
        let n = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        assert_eq!(core_inverse(&n), Err(GenInvError::NotCoreInvertible));
    }

    #[test]
    fn w_core_examples() {
        // first worked instance
        let a = Matrix::from_i64(qi(), &[&[1, 1], &[0, 0]]);
        let w = Matrix::from_i64(qi(), &[&[1, 0], &[1, 0]]);
        assert_eq!(
            w_core_inverse(&a, &w).unwrap().value,
            parse_mat(qi(), &[&["1/2", "0"], &["0", "0"]])
        );
        // second worked instance
        let w2 = Matrix::from_i64(qi(), &[&[1, 0], &[0, 0]]);
        assert_eq!(
            w_core_inverse(&a, &w2).unwrap().value,
            Matrix::from_i64(qi(), &[&[1, 0], &[0, 0]])
        );
        // zero is w-core invertible with inverse zero
        let zero = Matrix::zero(qi(), 2, 2);
        assert_eq!(w_core_inverse(&zero, &w).unwrap().value, zero);
    }

    #[test]
    fn w_core_via_product_examples() {
        let a = Matrix::from_i64(qi(), &[&[1, 1], &[0, 0]]);
        let w = Matrix::from_i64(qi(), &[&[1, 0], &[1, 0]]);
        // a·w = diag(2, 0), whose core inverse is diag(1/2, 0)
        assert_eq!(
            w_core_via_product(&a, &w).unwrap().value,
            parse_mat(qi(), &[&["1/2", "0"], &["0", "0"]])
        );
        let id = Matrix::identity(q(), 2);
        assert_eq!(w_core_via_product(&id, &id).unwrap().value, id);
        // a ∉ a·w·R: take w with a·w = 0 but a ≠ 0
        let a2 = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        let w2 = Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]);
        assert!(w_core_via_product(&a2, &w2).is_err());
    }

    #[test]
    fn w_core_failure_reasons() {
        // w = 0, a ≠ 0: the along leg fails
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        let zero = Matrix::zero(q(), 2, 2);
        assert_eq!(
            w_core_inverse(&a, &zero),
            Err(GenInvError::NotWCoreInvertible(
                WCoreFailure::WNotInvertibleAlongA
            ))
        );
        // over Z_2: a = all-ones has no {1,3}-inverse but is invertible
        // along itself? a·a = 0 over Z_2, so the along leg fails first with
        // w = identity kept aside; use w such that the along leg passes.
        let ones = Matrix::from_i64(z2(), &[&[1, 1], &[1, 1]]);
        let id = Matrix::identity(z2(), 2);
        // id is invertible along... d·x = ones·id = ones, ones² = 0: not
        // group invertible, so this also reports the along leg.
        assert!(w_core_inverse(&ones, &id).is_err());
        // a = diag(1,0) over Z_2 is {1,3}-invertible and along-invertible
        let d = Matrix::from_i64(z2(), &[&[1, 0], &[0, 0]]);
        assert!(w_core_inverse(&d, &id).is_ok());
    }

    #[test]
    fn certificates_name_failing_equations() {
        // candidate checking is diagnostic: a wrong candidate yields the
        // precise equations it breaks rather than a bare rejection
        let a = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]);
        let bad = Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]);
        // bad is a {1,2,3}-inverse of a, so exactly the fourth equation breaks
        let cert = certificate_for(&GenInvKind::MoorePenrose, &a, &bad);
        let failing: Vec<&str> = cert
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.equation.as_str())
            .collect();
        assert_eq!(failing, vec!["(x·a)* = x·a"]);

        let good = moore_penrose(&a).unwrap().value;
        assert!(certificate_for(&GenInvKind::MoorePenrose, &a, &good)
            .iter()
            .all(|c| c.holds));
    }

    #[test]
    fn ep_examples() {
        assert!(is_ep(&Matrix::identity(q(), 2)));
        assert!(is_ep(&Matrix::from_i64(q(), &[&[1, 2], &[3, 4]])));
        assert!(!is_ep(&Matrix::from_i64(q(), &[&[1, 1], &[0, 0]])));
    }

    #[test]
    fn zero_conventions() {
        let zero = Matrix::zero(qi(), 3, 3);
        assert_eq!(group_inverse(&zero).unwrap().value, zero);
        assert_eq!(moore_penrose(&zero).unwrap().value, zero);
        assert_eq!(core_inverse(&zero).unwrap().value, zero);
        assert_eq!(w_core_inverse(&zero, &zero).unwrap().value, zero);
    }

    fn arb_mat(domain: ScalarDomain, n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
            Matrix::from_fn(domain, n, n, |i, j| {
                Scalar::from_integer(domain, v[n * i + j])
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mp_along_consistency(a in arb_mat(ScalarDomain::gaussian_rationals(), 2)) {
            // a^† = ((a*)^∥a)* whenever a is Moore-Penrose invertible
            if let Ok(mp) = moore_penrose(&a) {
                let along = inverse_along(&a.star(), &a).unwrap();
                prop_assert_eq!(mp.value, along.value.star());
            }
        }

        #[test]
        fn group_is_inverse_along_itself(a in arb_mat(ScalarDomain::rationals(), 3)) {
            let sharp = group_inverse(&a);
            let along = inverse_along(&a, &a);
            match (sharp, along) {
                (Ok(s), Ok(al)) => prop_assert_eq!(s.value, al.value),
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "group inverse and inverse along itself must coexist"),
            }
        }

        #[test]
        fn unique_inverses_agree_across_strategies(a in arb_mat(ScalarDomain::gaussian_rationals(), 3)) {
            if let Ok(mp) = moore_penrose_with(&a, PivotStrategy::FirstNonzero) {
                let other = moore_penrose_with(&a, PivotStrategy::LastNonzero).unwrap();
                prop_assert_eq!(mp.value, other.value);
            }
        }

        #[test]
        fn w_core_routes_agree(a in arb_mat(ScalarDomain::gaussian_rationals(), 2),
                               w in arb_mat(ScalarDomain::gaussian_rationals(), 2)) {
            let direct = w_core_inverse(&a, &w);
            let via = w_core_via_product(&a, &w);
            prop_assert_eq!(direct.is_ok(), via.is_ok());
            if let (Ok(d), Ok(v)) = (direct, via) {
                prop_assert_eq!(d.value, v.value);
            }
        }
    }
}
