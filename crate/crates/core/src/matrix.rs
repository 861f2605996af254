//! Dense exact matrices over a [`ScalarDomain`].
//!
//! Square matrices of a fixed size over one domain form the *-ring all the
//! inverse and order machinery works in; the star is the conjugate transpose
//! (plain transpose when the involution is the identity). Rectangular shapes
//! are allowed internally for rank factorizations and stacked solve systems.

use std::fmt;

use crate::scalar::{Scalar, ScalarDomain};

/// Row-major dense matrix. All entries share `domain`; shapes with zero rows
/// or columns are legal and behave as the obvious degenerate cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    domain: ScalarDomain,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Row choice used when several rows could provide the next pivot. The
/// reduced echelon form is the same either way; the transform matrix (and so
/// any canonical inner inverse built from it) differs, which is exactly what
/// the choice-independence tests exploit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    #[default]
    FirstNonzero,
    LastNonzero,
}

/// Result of Gauss–Jordan elimination: `t * a = r` with `t` invertible,
/// `r` in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub r: Matrix,
    pub t: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Full-rank factorization `a = f * g` with `f` of shape n×r and `g` of
/// shape r×m. For the zero matrix r = 0 and the product is the zero matrix.
#[derive(Debug, Clone)]
pub struct RankFactorization {
    pub f: Matrix,
    pub g: Matrix,
    pub rank: usize,
}

impl Matrix {
    pub fn new(domain: ScalarDomain, rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        for e in &entries {
            assert_eq!(e.domain(), domain, "all entries must share the domain");
        }
        Matrix {
            domain,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(
        domain: ScalarDomain,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(domain, rows, cols, entries)
    }

    pub fn from_rows(domain: ScalarDomain, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix::new(domain, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(domain: ScalarDomain, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(domain, r, c, |i, j| {
            Scalar::from_integer(domain, rows[i][j])
        })
    }

    pub fn zero(domain: ScalarDomain, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(domain, rows, cols, |_, _| Scalar::zero(domain))
    }

    pub fn identity(domain: ScalarDomain, n: usize) -> Matrix {
        Matrix::from_fn(domain, n, n, |i, j| {
            if i == j {
                Scalar::one(domain)
            } else {
                Scalar::zero(domain)
            }
        })
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.domain(), self.domain);
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// The matrix star: conjugate transpose under the domain involution.
    pub fn star(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.cols, self.rows, |i, j| {
            self.at(j, i).conjugate()
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.domain, self.rows, self.cols, |i, j| {
            self.at(i, j) + rhs.at(i, j)
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.domain, self.rows, self.cols, |i, j| {
            self.at(i, j) - rhs.at(i, j)
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.domain, self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "inner dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        assert_eq!(self.domain, rhs.domain, "domain mismatch");
        Matrix::from_fn(self.domain, self.rows, rhs.cols, |i, j| {
            let mut acc = Scalar::zero(self.domain);
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.domain, self.rows, self.cols, |i, j| s * self.at(i, j))
    }

    /// Reduced row echelon form with the default pivot strategy.
    pub fn rref(&self) -> Rref {
        self.rref_with(PivotStrategy::FirstNonzero)
    }

    pub fn rref_with(&self, strategy: PivotStrategy) -> Rref {
        let mut r = self.clone();
        let mut t = Matrix::identity(self.domain, self.rows);
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let candidates: Vec<usize> = (pivot_row..self.rows)
                .filter(|&i| !r.at(i, col).is_zero())
                .collect();
            let Some(&chosen) = (match strategy {
                PivotStrategy::FirstNonzero => candidates.first(),
                PivotStrategy::LastNonzero => candidates.last(),
            }) else {
                continue;
            };
            r.swap_rows(pivot_row, chosen);
            t.swap_rows(pivot_row, chosen);
            let inv = r.at(pivot_row, col).invert().expect("pivot is nonzero");
            r.scale_row(pivot_row, &inv);
            t.scale_row(pivot_row, &inv);
            for i in 0..self.rows {
                if i != pivot_row && !r.at(i, col).is_zero() {
                    let factor = r.at(i, col).clone();
                    r.sub_scaled_row(i, pivot_row, &factor);
                    t.sub_scaled_row(i, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref { r, t, pivots, rank }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Scalar) {
        for k in 0..self.cols {
            let v = self.at(i, k) * s;
            self.set(i, k, v);
        }
    }

    // row i -= factor * row j
    fn sub_scaled_row(&mut self, i: usize, j: usize, factor: &Scalar) {
        for k in 0..self.cols {
            let v = self.at(i, k) - &(factor * self.at(j, k));
            self.set(i, k, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// True iff the matrix is square of full rank.
    pub fn is_unit(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let rref = self.rref();
        if rref.rank < self.rows {
            return None;
        }
        Some(rref.t)
    }

    /// Solve `a = b * x` exactly. Returns the canonical solution with free
    /// variables set to zero, or `None` when no solution exists (so a `Some`
    /// certifies the column-space inclusion col(a) ⊆ col(b)).
    pub fn solve_right(b: &Matrix, a: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, a.rows, "left-hand sides must have matching rows");
        assert_eq!(b.domain, a.domain, "domain mismatch");
        let rref = b.rref();
        let ta = rref.t.mul(a);
        // rows of r beyond the rank are zero; the same rows of t*a must vanish
        for i in rref.rank..b.rows {
            for j in 0..a.cols {
                if !ta.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        // with free variables at zero, each pivot variable reads straight off
        // the reduced system
        let mut x = Matrix::zero(b.domain, b.cols, a.cols);
        for (row, &col) in rref.pivots.iter().enumerate() {
            for j in 0..a.cols {
                x.set(col, j, ta.at(row, j).clone());
            }
        }
        debug_assert_eq!(&b.mul(&x), a);
        Some(x)
    }

    /// Solve `a = y * b` exactly; mirror of [`Matrix::solve_right`].
    pub fn solve_left(b: &Matrix, a: &Matrix) -> Option<Matrix> {
        let yt = Matrix::solve_right(&b.transpose(), &a.transpose())?;
        Some(yt.transpose())
    }

    /// col(a) ⊆ col(b), decided by solvability of a = b·x.
    pub fn column_space_contained(a: &Matrix, b: &Matrix) -> bool {
        Matrix::solve_right(b, a).is_some()
    }

    /// row(a) ⊆ row(b), decided by solvability of a = y·b.
    pub fn row_space_contained(a: &Matrix, b: &Matrix) -> bool {
        Matrix::solve_left(b, a).is_some()
    }

    pub fn column_space_eq(a: &Matrix, b: &Matrix) -> bool {
        Matrix::column_space_contained(a, b) && Matrix::column_space_contained(b, a)
    }

    pub fn row_space_eq(a: &Matrix, b: &Matrix) -> bool {
        Matrix::row_space_contained(a, b) && Matrix::row_space_contained(b, a)
    }

    /// Right-annihilator inclusion a⁰ ⊆ f⁰, i.e. {x : ax = 0} ⊆ {x : fx = 0}.
    /// Kernel inclusion is row-space inclusion of f in a, so this is the
    /// solvability of f = y·a.
    pub fn right_annihilator_contained(a: &Matrix, f: &Matrix) -> bool {
        Matrix::row_space_contained(f, a)
    }

    /// Left-annihilator inclusion ⁰a ⊆ ⁰p, decided by solvability of p = a·x.
    pub fn left_annihilator_contained(a: &Matrix, p: &Matrix) -> bool {
        Matrix::column_space_contained(p, a)
    }

    /// a = f·g with f the pivot columns of a and g the nonzero rows of the
    /// reduced echelon form.
    pub fn rank_factorization(&self) -> RankFactorization {
        let rref = self.rref();
        let f = Matrix::from_fn(self.domain, self.rows, rref.rank, |i, j| {
            self.at(i, rref.pivots[j]).clone()
        });
        let g = Matrix::from_fn(self.domain, rref.rank, self.cols, |i, j| {
            rref.r.at(i, j).clone()
        });
        debug_assert_eq!(&f.mul(&g), self);
        RankFactorization {
            f,
            g,
            rank: rref.rank,
        }
    }

    /// Stack `self` above `other` (columns must match).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.domain, other.domain);
        Matrix::from_fn(self.domain, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
