//! Holonomy algebra of the Levi-Civita connection.
//!
//! For a reductive homogeneous space this is the smallest subalgebra of
//! skew endomorphisms containing the Levi-Civita curvature operators and
//! stable under bracketing with every projected-bracket operator
//! `Lambda_m(X) : Y -> 1/2 [X,Y]_m = -1/2 T(X,Y)`.

use crate::linalg::{Matrix, Subspace};

use super::{NRStructure, NrError};

impl NRStructure {
    /// Computes the holonomy algebra as a canonical subspace of vectorized
    /// endomorphisms (ambient dimension `dim^2`).
    ///
    /// Starts from `span{R(Xi, Xj)}` and alternately closes under matrix
    /// commutators and brackets with each `Lambda_m(Xi)` until the dimension
    /// stabilizes; it is bounded by `dim so = 6` in dimension 4.
    pub fn holonomy(&self) -> Result<Subspace, NrError> {
        self.ensure_valid()?;
        let r = self.levi_civita_curvature_unchecked();
        Ok(self.holonomy_from(&r))
    }

    pub(crate) fn holonomy_from(&self, r: &super::CurvatureTensor) -> Subspace {
        let n = self.space().dim();
        let lambdas: Vec<Matrix> = (0..n).map(|i| self.torsion().d_op(i)).collect();
        let mut hol = r.span();
        loop {
            let basis: Vec<Matrix> = hol
                .basis_vectors()
                .iter()
                .map(|v| Matrix::from_vectorized(n, n, v))
                .collect();
            let mut vectors = hol.basis_vectors();
            for (a, ha) in basis.iter().enumerate() {
                for hb in basis.iter().skip(a + 1) {
                    vectors.push(ha.commutator(hb).vectorize());
                }
            }
            for l in &lambdas {
                for h in &basis {
                    vectors.push(l.commutator(h).vectorize());
                }
            }
            let next = Subspace::span(&vectors, n * n);
            if next.dim() == hol.dim() {
                return hol;
            }
            hol = next;
        }
    }

    /// The holonomy basis as matrices.
    pub fn holonomy_matrices(&self) -> Result<Vec<Matrix>, NrError> {
        let n = self.space().dim();
        Ok(self
            .holonomy()?
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_vectorized(n, n, v))
            .collect())
    }
}
