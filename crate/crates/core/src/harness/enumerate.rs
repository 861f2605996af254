//! Exhaustive enumeration of small finite matrix rings and the brute-force
//! inverse oracle built on it.
//!
//! The oracle re-states every defining equation directly instead of calling
//! into the constructors it is checking, so agreement between the two is a
//! real cross-validation and not a tautology.

use thiserror::Error;

use crate::geninv::GenInvKind;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, ScalarDomain};

/// Largest ring the enumerator will walk: p^(n²) entries.
pub const DEFAULT_ENUM_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration of {count} elements exceeds the budget of {budget}")]
    Infeasible { count: u128, budget: u64 },
    #[error("brute-force oracle requires a mod_p domain")]
    NotFinite,
}

pub fn ring_size(p: u64, dim: usize) -> Result<u64, OracleError> {
    let count = (p as u128).checked_pow((dim * dim) as u32);
    match count {
        Some(c) if c <= DEFAULT_ENUM_BUDGET as u128 => Ok(c as u64),
        Some(c) => Err(OracleError::Infeasible {
            count: c,
            budget: DEFAULT_ENUM_BUDGET,
        }),
        None => Err(OracleError::Infeasible {
            count: u128::MAX,
            budget: DEFAULT_ENUM_BUDGET,
        }),
    }
}

/// All matrices of M_dim(Z_p) in lexicographic entry order (row-major, last
/// entry varies fastest); the first yield is the zero matrix.
pub fn enumerate_ring(p: u64, dim: usize) -> Result<impl Iterator<Item = Matrix>, OracleError> {
    let size = ring_size(p, dim)?;
    let domain = ScalarDomain::mod_p(p).expect("enumeration modulus is prime");
    let cells = dim * dim;
    Ok((0..size).map(move |index| {
        let mut digits = vec![0u64; cells];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = rest % p;
            rest /= p;
        }
        Matrix::from_fn(domain, dim, dim, |i, j| {
            Scalar::from_integer(domain, digits[i * dim + j] as i64)
        })
    }))
}

/// Cartesian power of the ring as a stream of matrix tuples, still in
/// lexicographic order with the last component fastest.
pub fn cartesian(
    p: u64,
    dim: usize,
    arity: usize,
) -> Result<impl Iterator<Item = Vec<Matrix>>, OracleError> {
    let size = ring_size(p, dim)?;
    let total = (size as u128).checked_pow(arity as u32);
    let Some(total) = total.filter(|&t| t <= DEFAULT_ENUM_BUDGET as u128) else {
        return Err(OracleError::Infeasible {
            count: total.unwrap_or(u128::MAX),
            budget: DEFAULT_ENUM_BUDGET,
        });
    };
    let all: Vec<Matrix> = enumerate_ring(p, dim)?.collect();
    Ok((0..total as u64).map(move |index| {
        let mut rest = index;
        let mut picks = vec![0u64; arity];
        for d in picks.iter_mut().rev() {
            *d = rest % size;
            rest /= size;
        }
        picks.iter().map(|&k| all[k as usize].clone()).collect()
    }))
}

fn satisfies(kind: &GenInvKind, a: &Matrix, x: &Matrix) -> bool {
    match kind {
        GenInvKind::Inner => &a.mul(x).mul(a) == a,
        GenInvKind::Reflexive => &a.mul(x).mul(a) == a && &x.mul(a).mul(x) == x,
        GenInvKind::Group => &a.mul(x).mul(a) == a && &x.mul(a).mul(x) == x && a.mul(x) == x.mul(a),
        GenInvKind::OneThree => {
            let ax = a.mul(x);
            &ax.mul(a) == a && ax.star() == ax
        }
        GenInvKind::OneFour => {
            let xa = x.mul(a);
            &a.mul(&xa) == a && xa.star() == xa
        }
        GenInvKind::MoorePenrose => {
            let ax = a.mul(x);
            let xa = x.mul(a);
            &ax.mul(a) == a && &xa.mul(x) == x && ax.star() == ax && xa.star() == xa
        }
        GenInvKind::InverseAlong(d) => {
            // y with y·a·d = d = d·a·y and y ∈ dR ∩ Rd
            &x.mul(a).mul(d) == d
                && &d.mul(a).mul(x) == d
                && Matrix::column_space_contained(x, d)
                && Matrix::row_space_contained(x, d)
        }
        GenInvKind::Core => {
            let ax = a.mul(x);
            &ax.mul(a) == a
                && &x.mul(a).mul(x) == x
                && &ax.mul(x) == x
                && &x.mul(a).mul(a) == a
                && ax.star() == ax
        }
        GenInvKind::WCore(w) => {
            let awx = a.mul(w).mul(x);
            &awx.mul(x) == x && &x.mul(a).mul(w).mul(a) == a && awx.star() == awx
        }
    }
}

/// Every x in M_dim(Z_p) satisfying the defining equations of `kind` for
/// `a`, found by exhaustive search.
pub fn brute_force_inverse(kind: &GenInvKind, a: &Matrix) -> Result<Vec<Matrix>, OracleError> {
    let Some(p) = a.domain().modulus() else {
        return Err(OracleError::NotFinite);
    };
    let mut found = Vec::new();
    for x in enumerate_ring(p, a.rows())? {
        if satisfies(kind, a, &x) {
            found.push(x);
        }
    }
    Ok(found)
}
