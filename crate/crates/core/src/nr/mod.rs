//! Naturally reductive structures: a metric vector space together with the
//! torsion and curvature tensors of its canonical connection.
//!
//! The triple `(m, <.,.>, T, R~)` is the infinitesimal model of a naturally
//! reductive homogeneous space at a base point. The torsion stores the values
//! `T(Xi, Xj)` for `i < j` (antisymmetric extension elsewhere) and the
//! curvature stores one skew-adjoint operator per basis pair. From these,
//! everything else is derived: the difference tensor `D_X = -1/2 T(X, .)`,
//! the Levi-Civita curvature, its covariant derivative, the holonomy algebra
//! and the decomposability analysis.

mod analysis;
mod decompose;
mod geometry;
mod holonomy;
mod split;
mod validate;

pub use analysis::{AnalysisReport, Decomposability};
pub use geometry::{GeometryClass, NablaR, SymmetryReason};
pub use validate::{CheckResult, ValidationReport};

use thiserror::Error;

use crate::lie::{pair_index, pairs, LieError};
use crate::linalg::{
    basis_vector, vec_add, vec_is_zero, vec_neg, vec_scale, vec_zero, Matrix, Subspace, Vector,
};
use crate::metric::MetricSpace;
use crate::rational::Rational;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NrError {
    #[error("structure fails validation: {0:?}")]
    InvalidStructure(Vec<String>),
    #[error("operator metric does not match the torsion family's metric")]
    MetricMismatch,
    #[error("projection witness subspace is degenerate")]
    DegenerateW,
    #[error("curvature span is not closed under commutators")]
    HNotClosed,
    #[error("split is not reductive")]
    NotReductive,
    #[error("metric on m is not ad-invariant (triple {0}, {1}, {2})")]
    NotNaturallyReductive(usize, usize, usize),
    #[error("tensor spaces do not agree")]
    SpaceMismatch,
}

impl From<LieError> for NrError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::HNotClosed => NrError::HNotClosed,
            LieError::NotNaturallyReductive(x, y, z) => NrError::NotNaturallyReductive(x, y, z),
            _ => NrError::NotReductive,
        }
    }
}

/// Torsion tensor of the canonical connection: `T(Xi, Xj)` per pair `i < j`.
#[derive(Clone, PartialEq)]
pub struct TorsionTensor {
    space: MetricSpace,
    comp: Vec<Vector>,
}

impl TorsionTensor {
    pub fn zero(space: MetricSpace) -> TorsionTensor {
        let n = space.dim();
        TorsionTensor {
            space,
            comp: vec![vec_zero(n); n * (n - 1) / 2],
        }
    }

    /// Builds from nonzero components `T(Xi, Xj) = value` for `i < j`
    /// (0-based); omitted pairs are zero.
    pub fn from_components(
        space: MetricSpace,
        components: &[((usize, usize), Vector)],
    ) -> TorsionTensor {
        let n = space.dim();
        let mut t = TorsionTensor::zero(space);
        for ((i, j), v) in components {
            assert!(i < j && *j < n, "torsion pair ({i}, {j}) out of range");
            assert_eq!(v.len(), n);
            t.comp[pair_index(n, *i, *j)] = v.clone();
        }
        t
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().all(|v| vec_is_zero(v))
    }

    /// `T(Xi, Xj)` with antisymmetric extension.
    pub fn value_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering;
        let n = self.space.dim();
        match i.cmp(&j) {
            Ordering::Equal => vec_zero(n),
            Ordering::Less => self.comp[pair_index(n, i, j)].clone(),
            Ordering::Greater => vec_neg(&self.comp[pair_index(n, j, i)]),
        }
    }

    /// Bilinear extension `T(x, y)`.
    pub fn value(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.space.dim();
        let mut out = vec_zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&(xi * yj), &self.value_basis(i, j)));
            }
        }
        out
    }

    /// `T(Xi, v)` for a basis first slot; the common case in the formulas.
    pub fn value_basis_vec(&self, i: usize, v: &[Rational]) -> Vector {
        let n = self.space.dim();
        let mut out = vec_zero(n);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() || i == j {
                continue;
            }
            out = vec_add(&out, &vec_scale(vj, &self.value_basis(i, j)));
        }
        out
    }

    /// The operator `D_{Xi} = -1/2 T(Xi, .)`, which is also the projected
    /// bracket operator `Lambda_m(Xi) : Y -> 1/2 [Xi, Y]_m`.
    pub fn d_op(&self, i: usize) -> Matrix {
        let n = self.space.dim();
        let half = Rational::new(-1, 2);
        let cols: Vec<Vector> = (0..n)
            .map(|j| vec_scale(&half, &self.value_basis(i, j)))
            .collect();
        Matrix::from_cols(n, &cols)
    }

    /// `D_v` for an arbitrary vector `v`, by linearity.
    pub fn d_op_vec(&self, v: &[Rational]) -> Matrix {
        let n = self.space.dim();
        let mut m = Matrix::zero(n, n);
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                m = &m + &self.d_op(i).scale(vi);
            }
        }
        m
    }

    /// Span of all torsion values; the candidate splitting witness.
    pub fn values_span(&self) -> Subspace {
        Subspace::span(&self.comp, self.space.dim())
    }

    /// First basis triple violating `<T(x,y),z> + <T(x,z),y> = 0`, if any.
    /// Together with the built-in antisymmetry this makes the trilinear form
    /// `<T(x,y),z>` alternating, which is the naturally reductive condition
    /// on the torsion.
    pub fn first_non_alternating_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.space.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = self
                        .space
                        .inner(&self.value_basis(x, y), &basis_vector(n, z));
                    let b = self
                        .space
                        .inner(&self.value_basis(x, z), &basis_vector(n, y));
                    if !(&a + &b).is_zero() {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Derivation action of an operator: `(A.T)(Xi, Xj) = A T(Xi,Xj)
    /// - T(A Xi, Xj) - T(Xi, A Xj)`.
    pub fn derivation_by(&self, a: &Matrix, i: usize, j: usize) -> Vector {
        let n = self.space.dim();
        let t = self.value_basis(i, j);
        let first = a.mul_vec(&t);
        let second = self.value(&a.col(i), &basis_vector(n, j));
        let third = self.value(&basis_vector(n, i), &a.col(j));
        vec_add(&first, &vec_neg(&vec_add(&second, &third)))
    }
}

impl std::fmt::Debug for TorsionTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "TorsionTensor {{")?;
        for (i, j) in pairs(self.space.dim()) {
            let v = &self.comp[pair_index(self.space.dim(), i, j)];
            if !vec_is_zero(v) {
                writeln!(f, "  T(X{}, X{}) = {:?}", i + 1, j + 1, v)?;
            }
        }
        write!(f, "}}")
    }
}

/// Curvature tensor of the canonical connection: a skew-adjoint operator
/// per pair `i < j`, extended antisymmetrically.
#[derive(Clone, PartialEq)]
pub struct CurvatureTensor {
    space: MetricSpace,
    ops: Vec<Matrix>,
}

impl CurvatureTensor {
    pub fn zero(space: MetricSpace) -> CurvatureTensor {
        let n = space.dim();
        CurvatureTensor {
            space,
            ops: vec![Matrix::zero(n, n); n * (n - 1) / 2],
        }
    }

    pub fn from_components(
        space: MetricSpace,
        components: &[((usize, usize), Matrix)],
    ) -> CurvatureTensor {
        let n = space.dim();
        let mut r = CurvatureTensor::zero(space);
        for ((i, j), m) in components {
            assert!(i < j && *j < n, "curvature pair ({i}, {j}) out of range");
            assert!(m.is_square() && m.rows() == n);
            r.ops[pair_index(n, *i, *j)] = m.clone();
        }
        r
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.ops.iter().all(Matrix::is_zero)
    }

    /// `R(Xi, Xj)` with antisymmetric extension.
    pub fn op_basis(&self, i: usize, j: usize) -> Matrix {
        use std::cmp::Ordering;
        let n = self.space.dim();
        match i.cmp(&j) {
            Ordering::Equal => Matrix::zero(n, n),
            Ordering::Less => self.ops[pair_index(n, i, j)].clone(),
            Ordering::Greater => -&self.ops[pair_index(n, j, i)],
        }
    }

    /// Bilinear extension `R(x, y)` as an operator.
    pub fn op(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let n = self.space.dim();
        let mut out = Matrix::zero(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                out = &out + &self.op_basis(i, j).scale(&(xi * yj));
            }
        }
        out
    }

    /// `R(x, Xj)` for an arbitrary first slot and basis second slot.
    pub fn op_vec_basis(&self, x: &[Rational], j: usize) -> Matrix {
        let n = self.space.dim();
        let mut out = Matrix::zero(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() || i == j {
                continue;
            }
            out = &out + &self.op_basis(i, j).scale(xi);
        }
        out
    }

    /// Span of the vectorized curvature operators inside gl(m).
    pub fn span(&self) -> Subspace {
        let n = self.space.dim();
        Subspace::span(
            &self.ops.iter().map(Matrix::vectorize).collect::<Vec<_>>(),
            n * n,
        )
    }

    /// Canonical basis of the curvature span, as matrices.
    pub fn span_basis_matrices(&self) -> Vec<Matrix> {
        let n = self.space.dim();
        self.span()
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_vectorized(n, n, v))
            .collect()
    }

    /// Derivation action on the curvature:
    /// `(A.R)(Xi,Xj) = [A, R(Xi,Xj)] - R(A Xi, Xj) - R(Xi, A Xj)`
    /// as an operator (the `- R(Xi,Xj) A` term is part of the commutator).
    pub fn derivation_by(&self, a: &Matrix, i: usize, j: usize) -> Matrix {
        let n = self.space.dim();
        let r = self.op_basis(i, j);
        let comm = a.commutator(&r);
        let second = self.op(&a.col(i), &basis_vector(n, j));
        let third = self.op(&basis_vector(n, i), &a.col(j));
        &comm - &(&second + &third)
    }
}

impl std::fmt::Debug for CurvatureTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CurvatureTensor {{")?;
        for (i, j) in pairs(self.space.dim()) {
            let m = &self.ops[pair_index(self.space.dim(), i, j)];
            if !m.is_zero() {
                writeln!(f, "  R(X{}, X{}) = {:?}", i + 1, j + 1, m)?;
            }
        }
        write!(f, "}}")
    }
}

/// The full infinitesimal model: metric, torsion and canonical curvature.
#[derive(Clone, PartialEq)]
pub struct NRStructure {
    space: MetricSpace,
    torsion: TorsionTensor,
    curvature: CurvatureTensor,
}

impl NRStructure {
    pub fn new(
        space: MetricSpace,
        torsion: TorsionTensor,
        curvature: CurvatureTensor,
    ) -> Result<NRStructure, NrError> {
        if torsion.space() != &space || curvature.space() != &space {
            return Err(NrError::SpaceMismatch);
        }
        Ok(NRStructure {
            space,
            torsion,
            curvature,
        })
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn torsion(&self) -> &TorsionTensor {
        &self.torsion
    }

    pub fn curvature(&self) -> &CurvatureTensor {
        &self.curvature
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), NrError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(NrError::InvalidStructure(report.failed_check_names()))
        }
    }
}

impl std::fmt::Debug for NRStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "NRStructure {{ {:?} {:?} {:?} }}",
            self.space, self.torsion, self.curvature
        )
    }
}

/// Families of torsion parametrizations, one per metric presentation.
///
/// Each family maps a parameter vector `(a, b, c, d)` to the torsion tensor
/// whose trilinear form `<T(x,y),z>` is alternating by construction; these
/// are precisely the torsions compatible with natural reductivity on the
/// family's metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionFamily {
    LorentzOrthonormal,
    NeutralOrthonormal,
    NeutralWitt,
}

impl TorsionFamily {
    pub fn metric(&self) -> MetricSpace {
        match self {
            TorsionFamily::LorentzOrthonormal => MetricSpace::lorentz4(),
            TorsionFamily::NeutralOrthonormal => MetricSpace::neutral4(),
            TorsionFamily::NeutralWitt => MetricSpace::neutral4_witt(),
        }
    }

    pub fn build(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> TorsionTensor {
        match self {
            TorsionFamily::LorentzOrthonormal => torsion_lorentz_orthonormal(a, b, c, d),
            TorsionFamily::NeutralOrthonormal => torsion_neutral_orthonormal(a, b, c, d),
            TorsionFamily::NeutralWitt => torsion_neutral_witt(a, b, c, d),
        }
    }

    pub fn from_name(name: &str) -> Option<TorsionFamily> {
        match name {
            "lorentz" => Some(TorsionFamily::LorentzOrthonormal),
            "neutral-orthonormal" => Some(TorsionFamily::NeutralOrthonormal),
            "neutral-witt" => Some(TorsionFamily::NeutralWitt),
            _ => None,
        }
    }
}

fn torsion_from_rows(space: MetricSpace, rows: [[Rational; 4]; 6]) -> TorsionTensor {
    let comps: Vec<((usize, usize), Vector)> = pairs(4)
        .zip(rows)
        .map(|(p, row)| (p, row.to_vec()))
        .collect();
    TorsionTensor::from_components(space, &comps)
}

/// Torsion on diag(-1,1,1,1):
/// `T(X1,X2) = a X3 + b X4`, `T(X1,X3) = -a X2 + c X4`,
/// `T(X1,X4) = -b X2 - c X3`, `T(X2,X3) = -a X1 + d X4`,
/// `T(X2,X4) = -b X1 - d X3`, `T(X3,X4) = -c X1 + d X2`.
pub fn torsion_lorentz_orthonormal(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> TorsionTensor {
    let z = Rational::zero;
    torsion_from_rows(
        MetricSpace::lorentz4(),
        [
            [z(), z(), a.clone(), b.clone()],
            [z(), -a, z(), c.clone()],
            [z(), -b, -c, z()],
            [-a, z(), z(), d.clone()],
            [-b, z(), -d, z()],
            [-c, d.clone(), z(), z()],
        ],
    )
}

/// Torsion on diag(-1,-1,1,1):
/// `T(X1,X2) = a X3 + b X4`, `T(X1,X3) = a X2 + c X4`,
/// `T(X1,X4) = b X2 - c X3`, `T(X2,X3) = -a X1 + d X4`,
/// `T(X2,X4) = -b X1 - d X3`, `T(X3,X4) = -c X1 - d X2`.
pub fn torsion_neutral_orthonormal(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> TorsionTensor {
    let z = Rational::zero;
    torsion_from_rows(
        MetricSpace::neutral4(),
        [
            [z(), z(), a.clone(), b.clone()],
            [z(), a.clone(), z(), c.clone()],
            [z(), b.clone(), -c, z()],
            [-a, z(), z(), d.clone()],
            [-b, z(), -d, z()],
            [-c, -d, z(), z()],
        ],
    )
}

/// Torsion on the Witt Gram (<X2,X3> = 1, <X1,X4> = -1):
/// `T(X1,X2) = c X1 - a X2`, `T(X1,X3) = d X1 + a X3`,
/// `T(X1,X4) = d X2 + c X3`, `T(X2,X3) = -b X1 + a X4`,
/// `T(X2,X4) = -b X2 + c X4`, `T(X3,X4) = b X3 + d X4`.
pub fn torsion_neutral_witt(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> TorsionTensor {
    let z = Rational::zero;
    torsion_from_rows(
        MetricSpace::neutral4_witt(),
        [
            [c.clone(), -a, z(), z()],
            [d.clone(), z(), a.clone(), z()],
            [z(), d.clone(), c.clone(), z()],
            [-b, z(), z(), a.clone()],
            [z(), -b, z(), c.clone()],
            [z(), z(), b.clone(), d.clone()],
        ],
    )
}

/// The exact solution space of `A . T(a,b,c,d) = 0` inside the parameter
/// space `(a, b, c, d)` of the given torsion family, where `A` acts as a
/// derivation on the tensor algebra.
pub fn torsion_constraints(
    a_op: &crate::metric::Endomorphism,
    family: TorsionFamily,
) -> Result<Subspace, NrError> {
    let metric = family.metric();
    if a_op.space().gram() != metric.gram() {
        return Err(NrError::MetricMismatch);
    }
    // The map (a,b,c,d) -> A.T is linear; evaluate it on the parameter unit
    // vectors and stack the 6 pair values into a 24-row system.
    let mut cols = Vec::with_capacity(4);
    let zero = Rational::zero();
    for p in 0..4 {
        let mut params = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
        params[p] = Rational::one();
        let t = family.build(&params[0], &params[1], &params[2], &params[3]);
        let mut col = Vec::with_capacity(24);
        for (i, j) in pairs(4) {
            col.extend(t.derivation_by(a_op.mat(), i, j));
        }
        cols.push(col);
    }
    Ok(Matrix::from_cols(24, &cols).kernel())
}
