//! Conversion between naturally reductive structures and reductive
//! Lie-algebra splits.
//!
//! The algebra attached to a structure lives on the basis `(m, h)` where `h`
//! is the canonical basis of the curvature span, realized as endomorphisms
//! of `m`:
//!
//! * `[U, V] = UV - VU` for `U, V` in `h`,
//! * `[U, X] = U(X)` for `U` in `h`, `X` in `m`,
//! * `[X, Y] = -T(X, Y) + R(X, Y)`, the curvature value re-expressed in the
//!   `h`-basis.
//!
//! The reverse direction reads both tensors off an arbitrary reductive split
//! with an ad-invariant metric: `T(X,Y) = -[X,Y]_m` and `R(X,Y)` is the
//! action of `[X,Y]_h` on `m`. These two maps are mutually inverse on valid
//! structures.

use crate::lie::{in_span_coords, pairs, LieAlgebra, ReductiveSplit};
use crate::linalg::{vec_neg, vec_zero, Matrix, Vector};

use super::{CurvatureTensor, NRStructure, NrError, TorsionTensor};

impl NRStructure {
    /// Builds the Lie algebra `g = m (+) h` of the structure.
    ///
    /// Fails with `HNotClosed` when the span of the curvature operators is
    /// not closed under commutators (the validity check (iv)).
    pub fn build_lie_algebra(&self) -> Result<ReductiveSplit, NrError> {
        let n = self.space().dim();
        let h_basis = self.curvature().span_basis_matrices();
        let p = h_basis.len();
        let h_vectors: Vec<Vector> = h_basis.iter().map(Matrix::vectorize).collect();
        let dim = n + p;

        let mut labels: Vec<String> = self.space().labels().to_vec();
        for a in 0..p {
            labels.push(h_label(a, p));
        }

        let mut brackets: Vec<((usize, usize), Vector)> = Vec::new();
        // m-m pairs.
        for (i, j) in pairs(n) {
            let mut v = vec_zero(dim);
            let t = self.torsion().value_basis(i, j);
            for (k, c) in t.iter().enumerate() {
                v[k] = -c;
            }
            let r = self.curvature().op_basis(i, j);
            let coords =
                in_span_coords(&h_vectors, n * n, &r.vectorize()).ok_or(NrError::HNotClosed)?;
            for (a, c) in coords.iter().enumerate() {
                v[n + a] = c.clone();
            }
            brackets.push(((i, j), v));
        }
        // m-h pairs: [X_i, H_a] = -H_a(X_i).
        for i in 0..n {
            for (a, h) in h_basis.iter().enumerate() {
                let mut v = vec_zero(dim);
                for (k, c) in vec_neg(&h.col(i)).into_iter().enumerate() {
                    v[k] = c;
                }
                brackets.push(((i, n + a), v));
            }
        }
        // h-h pairs: matrix commutators, re-expressed in the h-basis.
        for (a, b) in pairs(p) {
            let comm = h_basis[a].commutator(&h_basis[b]);
            let coords =
                in_span_coords(&h_vectors, n * n, &comm.vectorize()).ok_or(NrError::HNotClosed)?;
            let mut v = vec_zero(dim);
            for (c, x) in coords.iter().enumerate() {
                v[n + c] = x.clone();
            }
            brackets.push(((n + a, n + b), v));
        }

        let algebra = LieAlgebra::from_brackets(labels, &brackets);
        Ok(ReductiveSplit::new(
            algebra,
            (n..dim).collect(),
            (0..n).collect(),
            self.space().clone(),
        )?)
    }

    /// Reads the structure off a reductive split.
    ///
    /// Checks the ad-invariance of the metric on `m` (the naturally
    /// reductive condition) triple by triple before extracting the tensors.
    pub fn from_split(split: &ReductiveSplit) -> Result<NRStructure, NrError> {
        split.check_naturally_reductive()?;
        let n = split.m_indices().len();
        let space = split.metric_on_m().clone();
        let mut torsion_comps: Vec<((usize, usize), Vector)> = Vec::new();
        let mut curvature_comps: Vec<((usize, usize), Matrix)> = Vec::new();
        for (i, j) in pairs(n) {
            let (m_part, h_part) = split.bracket_m_split(i, j);
            torsion_comps.push(((i, j), vec_neg(&m_part)));
            let mut op = Matrix::zero(n, n);
            for (a, c) in h_part.iter().enumerate() {
                if !c.is_zero() {
                    op = &op + &split.h_action(a).scale(c);
                }
            }
            curvature_comps.push(((i, j), op));
        }
        NRStructure::new(
            space.clone(),
            TorsionTensor::from_components(space.clone(), &torsion_comps),
            CurvatureTensor::from_components(space, &curvature_comps),
        )
    }
}

fn h_label(a: usize, total: usize) -> String {
    if total <= 4 {
        ["A", "B", "C", "D"][a].to_owned()
    } else {
        format!("A{}", a + 1)
    }
}
