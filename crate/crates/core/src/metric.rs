//! Metric vector spaces with arbitrary rational Gram matrices.
//!
//! A [`MetricSpace`] carries a symmetric nondegenerate Gram matrix and its
//! signature, computed exactly by symmetric congruence diagonalization
//! (simultaneous row/column elimination) so that nothing ever leaves the
//! rationals. Metrics are not restricted to orthonormal diagonals: the
//! natural bases of several homogeneous examples have off-diagonal Gram
//! matrices, and keeping them avoids irrational normalizations.

use rand::Rng;
use thiserror::Error;

use crate::linalg::{Matrix, Subspace, Vector};
use crate::rational::Rational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("Gram matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("Gram matrix is degenerate (determinant is zero)")]
    Degenerate,
    #[error("Gram matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("label count {0} does not match dimension {1}")]
    LabelCount(usize, usize),
    #[error("I + S is singular; Cayley transform undefined")]
    SingularCayley,
}

/// A finite-dimensional vector space with a symmetric nondegenerate bilinear
/// form, given by its Gram matrix in a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct MetricSpace {
    dim: usize,
    gram: Matrix,
    labels: Vec<String>,
    /// `(negative, positive)` inertia counts.
    signature: (usize, usize),
}

impl MetricSpace {
    /// Validates a Gram matrix and computes its signature.
    ///
    /// Rejects non-square, asymmetric and degenerate input.
    pub fn new(gram: Matrix, labels: Vec<String>) -> Result<MetricSpace, MetricError> {
        if !gram.is_square() {
            return Err(MetricError::NotSquare(gram.rows(), gram.cols()));
        }
        let dim = gram.rows();
        if labels.len() != dim {
            return Err(MetricError::LabelCount(labels.len(), dim));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(MetricError::NotSymmetric(i, j));
                }
            }
        }
        let signature = signature_of(&gram);
        if signature.0 + signature.1 != dim {
            return Err(MetricError::Degenerate);
        }
        Ok(MetricSpace {
            dim,
            gram,
            labels,
            signature,
        })
    }

    /// Space with default labels `X1..Xn`.
    pub fn with_default_labels(gram: Matrix) -> Result<MetricSpace, MetricError> {
        let n = gram.rows();
        MetricSpace::new(gram, (1..=n).map(|i| format!("X{i}")).collect())
    }

    /// Diagonal metric from the signs of the given entries.
    pub fn diagonal(entries: &[i64]) -> MetricSpace {
        let n = entries.len();
        let gram = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::from_int(entries[i])
            } else {
                Rational::zero()
            }
        });
        MetricSpace::with_default_labels(gram).expect("diagonal metric with nonzero entries")
    }

    /// The Lorentzian metric diag(-1, 1, 1, 1).
    pub fn lorentz4() -> MetricSpace {
        MetricSpace::diagonal(&[-1, 1, 1, 1])
    }

    /// The neutral metric diag(-1, -1, 1, 1).
    pub fn neutral4() -> MetricSpace {
        MetricSpace::diagonal(&[-1, -1, 1, 1])
    }

    /// The Witt-basis neutral metric with <X2,X3> = 1 and <X1,X4> = -1.
    pub fn neutral4_witt() -> MetricSpace {
        let gram =
            Matrix::from_int_rows(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
        MetricSpace::with_default_labels(gram).expect("Witt Gram is nondegenerate")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `(negative, positive)` counts of the inertia.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn is_lorentzian(&self) -> bool {
        self.signature == (1, 3) && self.dim == 4
    }

    pub fn is_neutral(&self) -> bool {
        self.signature == (2, 2) && self.dim == 4
    }

    /// The inner product of two coordinate vectors.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = self.gram.mul_vec(v);
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    /// Gram matrix of the metric restricted to the columns of `basis`.
    pub fn restricted_gram(&self, basis: &Matrix) -> Matrix {
        &(&basis.transpose() * &self.gram) * basis
    }

    /// Orthogonal complement of a subspace.
    ///
    /// Since the ambient metric is nondegenerate, `dim W + dim perp(W)` is
    /// always the ambient dimension, even for degenerate `W`.
    pub fn perp(&self, w: &Subspace) -> Subspace {
        assert_eq!(w.ambient_dim(), self.dim, "ambient dimension mismatch");
        (&w.basis().transpose() * &self.gram).kernel()
    }

    /// Whether the metric restricted to `w` is nondegenerate.
    pub fn is_nondegenerate_on(&self, w: &Subspace) -> bool {
        assert_eq!(w.ambient_dim(), self.dim, "ambient dimension mismatch");
        if w.is_zero() {
            return true;
        }
        !self.restricted_gram(w.basis()).det().is_zero()
    }

    /// Metric projector onto a nondegenerate subspace `w`, i.e. the unique
    /// idempotent with image `w` and kernel `perp(w)`.
    pub fn orthogonal_projector(&self, w: &Subspace) -> Option<Matrix> {
        if w.is_zero() {
            return Some(Matrix::zero(self.dim, self.dim));
        }
        let b = w.basis();
        let small = self.restricted_gram(b);
        let inv = small.inverse()?;
        Some(&(b * &inv) * &(&b.transpose() * &self.gram))
    }

    /// Draws a random skew-adjoint endomorphism: a random antisymmetric
    /// matrix K with entries `p/q`, `|p| <= bound`, `1 <= q <= 4`, mapped
    /// through the inverse Gram so that the result is skew-adjoint for
    /// this metric.
    pub fn random_skew_adjoint<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Endomorphism {
        let n = self.dim;
        let mut k = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..i {
                let p = rng.gen_range(-bound..=bound);
                let q = rng.gen_range(1..=4);
                k[(i, j)] = Rational::new(p, q);
                k[(j, i)] = -k[(i, j)].clone();
            }
        }
        let g_inv = self.gram.inverse().expect("metric is nondegenerate");
        Endomorphism::new(self.clone(), &g_inv * &k)
    }
}

impl std::fmt::Debug for MetricSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MetricSpace(dim {}, signature ({},{})) {:?}",
            self.dim, self.signature.0, self.signature.1, self.gram
        )
    }
}

/// A linear endomorphism of a metric space, in the space's basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Endomorphism {
    space: MetricSpace,
    mat: Matrix,
}

impl Endomorphism {
    pub fn new(space: MetricSpace, mat: Matrix) -> Endomorphism {
        assert!(
            mat.is_square() && mat.rows() == space.dim(),
            "endomorphism matrix must be {n}x{n}",
            n = space.dim()
        );
        Endomorphism { space, mat }
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn mat(&self) -> &Matrix {
        &self.mat
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.mat.mul_vec(v)
    }

    /// Skew-adjointness with respect to the space's metric:
    /// `A^T G + G A = 0` exactly.
    pub fn is_skew_adjoint(&self) -> bool {
        let g = self.space.gram();
        (&(&self.mat.transpose() * g) + &(g * &self.mat)).is_zero()
    }

    /// Self-adjointness: `G A` symmetric, i.e. `A^T G = G A`.
    pub fn is_self_adjoint(&self) -> bool {
        let g = self.space.gram();
        (&self.mat.transpose() * g) == (g * &self.mat)
    }

    /// Cayley transform `Q = (I - S)(I + S)^-1` of a skew-adjoint `S`.
    ///
    /// The output satisfies `Q^T G Q = G` exactly, which makes this the
    /// workhorse for generating rational metric-preserving conjugators.
    pub fn cayley_orthogonal(&self) -> Result<Endomorphism, MetricError> {
        assert!(self.is_skew_adjoint(), "Cayley input must be skew-adjoint");
        let id = Matrix::identity(self.space.dim());
        let inv = (&id + &self.mat)
            .inverse()
            .ok_or(MetricError::SingularCayley)?;
        Ok(Endomorphism::new(
            self.space.clone(),
            &(&id - &self.mat) * &inv,
        ))
    }

    /// Conjugation `Q^-1 A Q` by an invertible `q` over the same space.
    pub fn conjugate_by(&self, q: &Matrix) -> Endomorphism {
        let q_inv = q.inverse().expect("conjugator must be invertible");
        Endomorphism::new(self.space.clone(), &(&q_inv * &self.mat) * q)
    }

    pub fn commutator(&self, other: &Endomorphism) -> Endomorphism {
        assert_eq!(self.space, other.space, "mismatched spaces");
        Endomorphism::new(self.space.clone(), self.mat.commutator(&other.mat))
    }

    /// Image of the endomorphism as a canonical subspace.
    pub fn image(&self) -> Subspace {
        Subspace::span(
            &(0..self.mat.cols())
                .map(|j| self.mat.col(j))
                .collect::<Vec<_>>(),
            self.space.dim(),
        )
    }

    pub fn kernel(&self) -> Subspace {
        self.mat.kernel()
    }
}

impl std::fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Endomorphism {:?}", self.mat)
    }
}

/// Inertia `(negative, positive)` of a symmetric matrix by exact congruence
/// diagonalization. Zero diagonal entries after reduction are counted in
/// neither slot, so a degenerate matrix reports counts short of the
/// dimension.
fn signature_of(gram: &Matrix) -> (usize, usize) {
    let n = gram.rows();
    let mut m = gram.clone();
    let mut neg = 0;
    let mut pos = 0;
    for k in 0..n {
        if m[(k, k)].is_zero() {
            // Bring a nonzero diagonal entry to position k, or create one
            // from an off-diagonal entry (row+column addition keeps symmetry
            // and congruence class).
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                sym_swap(&mut m, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                sym_add(&mut m, k, j);
            } else {
                continue; // the whole remaining block pairs to zero with row k
            }
        }
        let pivot = m[(k, k)].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = pivot.recip();
        for i in (k + 1)..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] * &inv;
            // row_i -= f * row_k; col_i -= f * col_k
            for j in 0..n {
                let v = &m[(i, j)] - &(&f * &m[(k, j)]);
                m[(i, j)] = v;
            }
            for j in 0..n {
                let v = &m[(j, i)] - &(&f * &m[(j, k)]);
                m[(j, i)] = v;
            }
        }
    }
    (neg, pos)
}

fn sym_swap(m: &mut Matrix, a: usize, b: usize) {
    let n = m.rows();
    for j in 0..n {
        let x = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = x;
    }
    for i in 0..n {
        let x = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = x;
    }
}

fn sym_add(m: &mut Matrix, a: usize, b: usize) {
    let n = m.rows();
    for j in 0..n {
        let v = &m[(a, j)] + &m[(b, j)];
        m[(a, j)] = v;
    }
    for i in 0..n {
        let v = &m[(i, a)] + &m[(i, b)];
        m[(i, a)] = v;
    }
}
