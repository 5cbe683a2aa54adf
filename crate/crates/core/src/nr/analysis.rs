//! The aggregate analysis report: validity, geometry class, holonomy,
//! decomposability and normal-form tags of the curvature generators.

use crate::linalg::{Matrix, Subspace};
use crate::metric::Endomorphism;
use crate::normal_form::{classify_lorentz, classify_neutral, NormalFormTag};

pub use super::decompose::Decomposability;
use super::geometry::GeometryClass;
use super::validate::ValidationReport;
use super::NRStructure;

/// Everything the analysis pipeline knows about one structure.
///
/// The geometric fields are only populated when validation passes; an
/// invalid structure still gets its per-check report.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub validation: ValidationReport,
    pub geometry: Option<GeometryClass>,
    /// Holonomy algebra as a canonical subspace of vectorized operators.
    pub holonomy: Option<Subspace>,
    pub decomposability: Option<Decomposability>,
    /// Normal-form tags of the canonical basis of the curvature span, when
    /// the signature is (1,3) or (2,2).
    pub curvature_tags: Vec<NormalFormTag>,
}

impl AnalysisReport {
    pub fn is_valid(&self) -> bool {
        self.validation.is_valid()
    }

    pub fn holonomy_dim(&self) -> Option<usize> {
        self.holonomy.as_ref().map(Subspace::dim)
    }

    pub fn holonomy_matrices(&self, dim: usize) -> Vec<Matrix> {
        self.holonomy
            .as_ref()
            .map(|h| {
                h.basis_vectors()
                    .iter()
                    .map(|v| Matrix::from_vectorized(dim, dim, v))
                    .collect()
            })
            .unwrap_or_default()
    }
}

impl NRStructure {
    /// Runs the full pipeline: validate, classify the geometry, compute the
    /// holonomy, decide decomposability and tag the curvature generators.
    pub fn analyze(&self) -> AnalysisReport {
        let validation = self.validate();
        if !validation.is_valid() {
            return AnalysisReport {
                validation,
                geometry: None,
                holonomy: None,
                decomposability: None,
                curvature_tags: vec![],
            };
        }
        let r = self.levi_civita_curvature_unchecked();
        let flat = r.is_zero();
        let (locally_symmetric, reason) = if self.torsion().is_zero() {
            (true, super::geometry::SymmetryReason::NullTorsion)
        } else if self.curvature().is_zero() {
            (
                true,
                super::geometry::SymmetryReason::NullIntrinsicCurvature,
            )
        } else if self.covariant_derivative_vanishes(&r) {
            (
                true,
                super::geometry::SymmetryReason::CovariantDerivativeZero,
            )
        } else {
            (false, super::geometry::SymmetryReason::NotSymmetric)
        };
        let geometry = GeometryClass {
            flat,
            locally_symmetric,
            reason,
        };
        let holonomy = self.holonomy_from(&r);
        let decomposability = self.decompose().expect("structure already validated");
        let curvature_tags = self.tag_curvature_generators();
        AnalysisReport {
            validation,
            geometry: Some(geometry),
            holonomy: Some(holonomy),
            decomposability: Some(decomposability),
            curvature_tags,
        }
    }

    /// Tags each canonical curvature-span generator with its normal form.
    pub fn tag_curvature_generators(&self) -> Vec<NormalFormTag> {
        let classify: fn(&Endomorphism) -> _ = match self.space().signature() {
            (1, 3) => classify_lorentz,
            (2, 2) => classify_neutral,
            _ => return vec![],
        };
        self.curvature()
            .span_basis_matrices()
            .into_iter()
            .filter_map(|m| classify(&Endomorphism::new(self.space().clone(), m)).ok())
            .collect()
    }
}
