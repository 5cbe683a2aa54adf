//! Dense rational matrices and canonical subspaces.
//!
//! Everything here is exact: row reduction uses the leftmost nonzero column
//! and the first nonzero row, with no magnitude pivoting, so results are
//! deterministic. Subspaces are kept in reduced column echelon form, which is
//! unique for a given subspace; structural equality of `Subspace` values is
//! therefore equality of the subspaces themselves.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// A coordinate vector.
pub type Vector = Vec<Rational>;

pub fn vec_zero(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn vec_neg(v: &[Rational]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = vec_zero(n);
    v[i] = Rational::one();
    v
}

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from integer rows; convenient for fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn from_cols(ambient: usize, cols: &[Vector]) -> Self {
        for c in cols {
            assert_eq!(c.len(), ambient, "column length mismatch");
        }
        Matrix::from_fn(ambient, cols.len(), |i, j| cols[j][i].clone())
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| &self[(i, j)] * &v[j])
                    .sum::<Rational>()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self * other - other * self
    }

    pub fn pow(&self, mut k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    /// Row-major flattening; the coordinates used for spans of endomorphisms.
    pub fn vectorize(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivoting is deterministic: leftmost nonzero column, first nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact determinant by fraction Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = m[(c, c)].recip();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    for j in c..n {
                        let v = &m[(i, j)] - &(&f * &m[(c, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
        }
        det
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Basis of the null space, canonicalized as a [`Subspace`].
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = Rational::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(pi, f)].clone();
            }
            basis.push(v);
        }
        Subspace::span(&basis, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Sub for Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Matrix) -> Matrix {
        &self - &rhs
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .map(|k| &self[(i, k)] * &rhs[(k, j)])
                .sum::<Rational>()
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(de::Error::custom("ragged matrix rows"));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            for s in row {
                data.push(s.parse::<Rational>().map_err(de::Error::custom)?);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }
}

/// Solves `a x = b` exactly.
///
/// Returns a particular solution (absent iff the system is inconsistent)
/// together with the kernel of `a`, so the full solution set is
/// `particular + kernel`.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> (Option<Vector>, Subspace) {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let rhs = Matrix::from_cols(b.len(), &[b.to_vec()]);
    let (r, pivots) = a.hstack(&rhs).rref();
    let kernel = a.kernel();
    if pivots.contains(&a.cols()) {
        return (None, kernel); // pivot in the augmented column: inconsistent
    }
    let mut x = vec_zero(a.cols());
    for (pi, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(pi, a.cols())].clone();
    }
    (Some(x), kernel)
}

/// Expresses `v` in the columns of `basis`, if possible.
pub fn coords_in(basis: &Matrix, v: &[Rational]) -> Option<Vector> {
    solve_linear(basis, v).0
}

/// A linear subspace of `Q^ambient_dim` held by its canonical basis.
///
/// The basis matrix columns are in reduced column echelon form (the unique
/// such basis of the subspace), so two `Subspace` values are equal exactly
/// when they describe the same subspace.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonical span of a list of vectors.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace {
                ambient_dim,
                basis: Matrix::zero(ambient_dim, 0),
            };
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let cols: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient_dim,
            basis: Matrix::from_cols(ambient_dim, &cols),
        }
    }

    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace::span(&[], ambient_dim)
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        let vs: Vec<Vector> = (0..ambient_dim)
            .map(|i| basis_vector(ambient_dim, i))
            .collect();
        Subspace::span(&vs, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// True when the subspace is neither zero nor the whole space.
    pub fn is_proper_nontrivial(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    /// The canonical basis matrix (columns are basis vectors).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|j| self.basis.col(j)).collect()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if self.dim() == 0 {
            return vec_is_zero(v);
        }
        coords_in(&self.basis, v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(&vs, self.ambient_dim)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // Kernel vectors (x, y) of [B_self | B_other] satisfy
        // B_self x = -B_other y, so B_self x runs over the intersection.
        let stacked = self.basis.hstack(&other.basis);
        let mut vs = Vec::new();
        for k in stacked.kernel().basis_vectors() {
            let x = &k[..self.dim()];
            vs.push(self.basis.mul_vec(x));
        }
        Subspace::span(&vs, self.ambient_dim)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}
