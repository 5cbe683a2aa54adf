//! Exact construction and analysis of naturally reductive pseudo-Riemannian
//! structures on 4-dimensional metric vector spaces.
//!
//! Everything is computed over the rationals: metrics are symmetric
//! nondegenerate rational Gram matrices, torsion and curvature tensors carry
//! rational components, and every verdict (flatness, local symmetry,
//! holonomy, decomposability, normal-form class) is an exact equality check.
//! No floating point is used anywhere.
//!
//! The main entry points are:
//!
//! * [`linalg`] — dense rational matrices, reduced echelon forms, canonical
//!   subspaces, exact linear solving;
//! * [`metric`] — metric vector spaces of arbitrary signature, skew-adjoint
//!   endomorphisms, orthogonal complements, Cayley conjugators;
//! * [`normal_form`] — conjugation-invariant classification of skew-adjoint
//!   operators in signatures (1,3) and (2,2);
//! * [`nr`] — the naturally reductive structure itself: validation,
//!   Levi-Civita curvature, covariant derivative of the curvature, holonomy,
//!   decomposability, and conversion to/from reductive Lie-algebra splits;
//! * [`lie`] — structure-constant Lie algebras: Jacobi checks, basis changes,
//!   derived and lower central series, nilpotent ideals, bracket matching;
//! * [`catalog`] — parametric generators for the families of 4-dimensional
//!   naturally reductive spaces together with their predicted invariants;
//! * [`io`] — the JSON file formats consumed and produced by the CLI.
//!
//! ```
//! use natred_core::catalog::{make_family, Family, FamilySpec};
//! use natred_core::nr::Decomposability;
//! use natred_core::rational::rat;
//!
//! let spec = FamilySpec::new(
//!     Family::Loren2,
//!     &[("c", rat(1)), ("alpha", rat(1)), ("beta", rat(0)), ("delta", rat(2))],
//! )
//! .unwrap();
//! let structure = make_family(&spec).structure.unwrap();
//! let report = structure.analyze();
//! assert!(report.is_valid());
//! assert_eq!(report.holonomy_dim(), Some(2));
//! assert!(matches!(
//!     report.decomposability,
//!     Some(Decomposability::Indecomposable { .. })
//! ));
//! ```

pub mod catalog;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod normal_form;
pub mod nr;
pub mod rational;

pub use linalg::{Matrix, Subspace};
pub use metric::{Endomorphism, MetricSpace};
pub use nr::NRStructure;
pub use rational::Rational;
