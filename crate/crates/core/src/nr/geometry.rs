//! Levi-Civita curvature, its covariant derivative and the flat / locally
//! symmetric classification.

use serde::Serialize;

use crate::lie::pairs;
use crate::linalg::{basis_vector, vec_add, vec_scale, Matrix, Vector};
use crate::rational::Rational;

use super::{CurvatureTensor, NRStructure, NrError};

/// Dense table of the covariant derivative `(nabla_{Xx} R)(Xy, Xz) Xw`,
/// indexed by all four slots.
#[derive(Clone)]
pub struct NablaR {
    dim: usize,
    comp: Vec<Vector>,
}

impl NablaR {
    pub fn get(&self, x: usize, y: usize, z: usize, w: usize) -> &Vector {
        &self.comp[((x * self.dim + y) * self.dim + z) * self.dim + w]
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().all(|v| v.iter().all(Rational::is_zero))
    }
}

/// Why a structure is known to be locally symmetric (or not).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryReason {
    /// The torsion vanishes, so the difference tensor is zero and the
    /// structure tensor is null.
    NullTorsion,
    /// The canonical curvature vanishes; the space is a Lie group with a
    /// bi-invariant metric.
    NullIntrinsicCurvature,
    /// The full covariant derivative of the curvature vanishes.
    CovariantDerivativeZero,
    NotSymmetric,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeometryClass {
    pub flat: bool,
    pub locally_symmetric: bool,
    pub reason: SymmetryReason,
}

impl NRStructure {
    /// Riemann curvature of the Levi-Civita connection:
    /// `R(X,Y) = R~(X,Y) + [D_X, D_Y] + D_{T(X,Y)}` with `D_X = -1/2 T(X,.)`.
    pub fn levi_civita_curvature(&self) -> Result<CurvatureTensor, NrError> {
        self.ensure_valid()?;
        Ok(self.levi_civita_curvature_unchecked())
    }

    pub(crate) fn levi_civita_curvature_unchecked(&self) -> CurvatureTensor {
        let n = self.space().dim();
        let d: Vec<Matrix> = (0..n).map(|i| self.torsion().d_op(i)).collect();
        let comps: Vec<((usize, usize), Matrix)> = pairs(n)
            .map(|(i, j)| {
                let r = self.curvature().op_basis(i, j);
                let comm = d[i].commutator(&d[j]);
                let dt = self.torsion().d_op_vec(&self.torsion().value_basis(i, j));
                ((i, j), &(&r + &comm) + &dt)
            })
            .collect();
        CurvatureTensor::from_components(self.space().clone(), &comps)
    }

    /// Full table of `(nabla_X R)(Y, Z) W` over all basis slots, computed by
    /// `(nabla_X R)(Y,Z)W = -1/2 T(X, R(Y,Z)W) + 1/2 R(T(X,Y), Z)W
    ///  + 1/2 R(Y, T(X,Z))W + 1/2 R(Y,Z) T(X,W)`.
    pub fn covariant_derivative_r(&self) -> Result<NablaR, NrError> {
        self.ensure_valid()?;
        let r = self.levi_civita_curvature_unchecked();
        let n = self.space().dim();
        let mut comp = Vec::with_capacity(n * n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        comp.push(self.nabla_r_component(&r, x, y, z, w));
                    }
                }
            }
        }
        Ok(NablaR { dim: n, comp })
    }

    fn nabla_r_component(
        &self,
        r: &CurvatureTensor,
        x: usize,
        y: usize,
        z: usize,
        w: usize,
    ) -> Vector {
        let n = self.space().dim();
        let t = self.torsion();
        let half = Rational::new(1, 2);
        let ryzw = r.op_basis(y, z).mul_vec(&basis_vector(n, w));
        let mut acc = vec_scale(&Rational::new(-1, 2), &t.value_basis_vec(x, &ryzw));
        let term2 = r
            .op_vec_basis(&t.value_basis(x, y), z)
            .mul_vec(&basis_vector(n, w));
        acc = vec_add(&acc, &vec_scale(&half, &term2));
        // R(Y, T(X,Z)) = -R(T(X,Z), Y)
        let term3 = r
            .op_vec_basis(&t.value_basis(x, z), y)
            .mul_vec(&basis_vector(n, w));
        acc = vec_add(&acc, &vec_scale(&(-&half), &term3));
        let term4 = r.op_basis(y, z).mul_vec(&t.value_basis(x, w));
        vec_add(&acc, &vec_scale(&half, &term4))
    }

    /// Lazy check that the covariant derivative vanishes, stopping at the
    /// first nonzero component.
    pub(crate) fn covariant_derivative_vanishes(&self, r: &CurvatureTensor) -> bool {
        let n = self.space().dim();
        for x in 0..n {
            for y in 0..n {
                for z in (y + 1)..n {
                    for w in 0..n {
                        if !self
                            .nabla_r_component(r, x, y, z, w)
                            .iter()
                            .all(Rational::is_zero)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Flatness (`R = 0`) and local symmetry (`nabla R = 0`), with the
    /// shortcut reasons for vanishing torsion or vanishing canonical
    /// curvature.
    pub fn classify_geometry(&self) -> Result<GeometryClass, NrError> {
        self.ensure_valid()?;
        let r = self.levi_civita_curvature_unchecked();
        let flat = r.is_zero();
        let (locally_symmetric, reason) = if self.torsion().is_zero() {
            debug_assert!(self.covariant_derivative_vanishes(&r));
            (true, SymmetryReason::NullTorsion)
        } else if self.curvature().is_zero() {
            debug_assert!(self.covariant_derivative_vanishes(&r));
            (true, SymmetryReason::NullIntrinsicCurvature)
        } else if self.covariant_derivative_vanishes(&r) {
            (true, SymmetryReason::CovariantDerivativeZero)
        } else {
            (false, SymmetryReason::NotSymmetric)
        };
        debug_assert!(!flat || locally_symmetric);
        Ok(GeometryClass {
            flat,
            locally_symmetric,
            reason,
        })
    }
}
