//! Parametric generators for the families of 4-dimensional naturally
//! reductive spaces, together with the closed-form predictions of their
//! geometric invariants.
//!
//! Families:
//!
//! | name         | parameters                  | description                               |
//! |--------------|-----------------------------|-------------------------------------------|
//! | `loren2`     | `c, alpha, beta, delta`     | 6-dim Lorentzian family, `h = span{A, B}` |
//! | `loren1`     | `lambda != 0`               | `sl(2) (+) R^2` presentation, Lorentzian  |
//! | `dosdos2`    | `c, alpha, beta, delta`     | 6-dim neutral family, `h = span{A, B}`    |
//! | `dosdos1`    | `lambda != 0`               | `sl(2) (+) R^2` presentation, neutral     |
//! | `sl_lorentz` | `c != 0, eta = +-1, alpha != 0` | 5-dim Lorentzian quotient             |
//! | `sl_neutral` | `b != 0, eta = +-1, alpha != 0` | 5-dim neutral quotient                |
//! | `oscillator` | `-1 < epsilon < 1`          | oscillator group with its metric family   |
//!
//! The oscillator entry is a partial fixture: only the `(X, Y)` tensor
//! components are specified by its sources, and the stated curvature value
//! fails skew-adjointness for `epsilon != 0`; the entry keeps the stated
//! values so the validator can report exactly that.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lie::{LieAlgebra, ReductiveSplit};
use crate::linalg::{Matrix, Vector};
use crate::metric::MetricSpace;
use crate::normal_form::fixtures;
use crate::nr::{
    torsion_lorentz_orthonormal, torsion_neutral_orthonormal, CurvatureTensor, NRStructure,
    TorsionTensor,
};
use crate::rational::Rational;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown parameter {0:?} for family {1}")]
    UnknownParameter(String, &'static str),
    #[error("missing parameter {0:?} for family {1}")]
    MissingParameter(&'static str, &'static str),
    #[error("parameter out of domain for family {family}: {constraint}")]
    ParamOutOfDomain {
        family: &'static str,
        constraint: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Loren1,
    Loren2,
    Dosdos1,
    Dosdos2,
    SlLorentz,
    SlNeutral,
    Oscillator,
}

pub const ALL_FAMILIES: [Family; 7] = [
    Family::Loren1,
    Family::Loren2,
    Family::Dosdos1,
    Family::Dosdos2,
    Family::SlLorentz,
    Family::SlNeutral,
    Family::Oscillator,
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Loren1 => "loren1",
            Family::Loren2 => "loren2",
            Family::Dosdos1 => "dosdos1",
            Family::Dosdos2 => "dosdos2",
            Family::SlLorentz => "sl_lorentz",
            Family::SlNeutral => "sl_neutral",
            Family::Oscillator => "oscillator",
        }
    }

    pub fn from_name(name: &str) -> Result<Family, CatalogError> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| CatalogError::UnknownFamily(name.to_owned()))
    }

    pub fn parameter_names(&self) -> &'static [&'static str] {
        match self {
            Family::Loren1 | Family::Dosdos1 => &["lambda"],
            Family::Loren2 | Family::Dosdos2 => &["c", "alpha", "beta", "delta"],
            Family::SlLorentz => &["c", "eta", "alpha"],
            Family::SlNeutral => &["b", "eta", "alpha"],
            Family::Oscillator => &["epsilon"],
        }
    }

    pub fn domain_description(&self) -> &'static str {
        match self {
            Family::Loren1 | Family::Dosdos1 => "lambda != 0",
            Family::Loren2 | Family::Dosdos2 => "free",
            Family::SlLorentz => "c != 0, eta in {1, -1}, alpha != 0",
            Family::SlNeutral => "b != 0, eta in {1, -1}, alpha != 0",
            Family::Oscillator => "-1 < epsilon < 1",
        }
    }
}

/// A validated family instantiation: parameters are complete and inside the
/// family's domain.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    family: Family,
    params: BTreeMap<String, Rational>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[(&str, Rational)]) -> Result<FamilySpec, CatalogError> {
        let names = family.parameter_names();
        let mut map = BTreeMap::new();
        for (k, v) in params {
            if !names.contains(k) {
                return Err(CatalogError::UnknownParameter(
                    (*k).to_owned(),
                    family.name(),
                ));
            }
            map.insert((*k).to_owned(), v.clone());
        }
        for n in names {
            if !map.contains_key(*n) {
                return Err(CatalogError::MissingParameter(n, family.name()));
            }
        }
        let spec = FamilySpec {
            family,
            params: map,
        };
        spec.check_domain()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self, name: &str) -> &Rational {
        &self.params[name]
    }

    pub fn params(&self) -> &BTreeMap<String, Rational> {
        &self.params
    }

    fn check_domain(&self) -> Result<(), CatalogError> {
        let out = |constraint: &str| CatalogError::ParamOutOfDomain {
            family: self.family.name(),
            constraint: constraint.to_owned(),
        };
        match self.family {
            Family::Loren1 | Family::Dosdos1 => {
                if self.param("lambda").is_zero() {
                    return Err(out("lambda must be nonzero"));
                }
            }
            Family::Loren2 | Family::Dosdos2 => {}
            Family::SlLorentz | Family::SlNeutral => {
                let speed = if self.family == Family::SlLorentz {
                    "c"
                } else {
                    "b"
                };
                if self.param(speed).is_zero() {
                    return Err(out(&format!("{speed} must be nonzero")));
                }
                let eta = self.param("eta");
                if *eta != Rational::one() && *eta != -Rational::one() {
                    return Err(out("eta must be 1 or -1"));
                }
                if self.param("alpha").is_zero() {
                    return Err(out("alpha must be nonzero"));
                }
            }
            Family::Oscillator => {
                let e = self.param("epsilon");
                if e.abs() >= Rational::one() {
                    return Err(out("epsilon must satisfy -1 < epsilon < 1"));
                }
            }
        }
        Ok(())
    }
}

/// Output of [`make_family`]: the infinitesimal model (when the family
/// defines a complete one), the group-level reductive split, and notes about
/// fixture caveats.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub structure: Option<NRStructure>,
    pub split: Option<ReductiveSplit>,
    pub notes: Vec<String>,
}

/// Closed-form predictions for the analysis of a family member. `None`
/// means the sources leave the value open for those parameters.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExpectedProperties {
    pub flat: Option<bool>,
    pub locally_symmetric: Option<bool>,
    pub indecomposable: Option<bool>,
    pub holonomy_dim: Option<usize>,
    pub notes: Vec<String>,
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn rv(entries: &[Rational]) -> Vector {
    entries.to_vec()
}

/// Instantiates a family member.
pub fn make_family(spec: &FamilySpec) -> CatalogEntry {
    match spec.family() {
        Family::Loren2 => make_loren2(spec),
        Family::Dosdos2 => make_dosdos2(spec),
        Family::SlLorentz => make_sl_lorentz(spec),
        Family::SlNeutral => make_sl_neutral(spec),
        Family::Loren1 => make_loren1(spec),
        Family::Dosdos1 => make_dosdos1(spec),
        Family::Oscillator => make_oscillator(spec),
    }
}

fn make_loren2(spec: &FamilySpec) -> CatalogEntry {
    let (c, alpha, beta, delta) = (
        spec.param("c"),
        spec.param("alpha"),
        spec.param("beta"),
        spec.param("delta"),
    );
    let space = MetricSpace::lorentz4();
    let torsion = torsion_lorentz_orthonormal(&q(0), &q(0), c, &-c);
    let a = fixtures::lorentz_a1();
    let b = fixtures::lorentz_b();
    let r13 = &a.scale(alpha) + &b.scale(beta);
    let r14 = &a.scale(beta) + &b.scale(delta);
    let curvature = CurvatureTensor::from_components(
        space.clone(),
        &[
            ((0, 2), r13.clone()),
            ((0, 3), r14.clone()),
            ((1, 2), -&r13),
            ((1, 3), -&r14),
        ],
    );
    let structure = NRStructure::new(space.clone(), torsion, curvature).expect("same space");

    let z = q(0);
    let algebra = LieAlgebra::from_brackets(
        labels(&["X1", "X2", "X3", "X4", "A", "B"]),
        &[
            (
                (0, 2),
                rv(&[
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    -c,
                    alpha.clone(),
                    beta.clone(),
                ]),
            ),
            (
                (0, 3),
                rv(&[
                    z.clone(),
                    z.clone(),
                    c.clone(),
                    z.clone(),
                    beta.clone(),
                    delta.clone(),
                ]),
            ),
            (
                (1, 2),
                rv(&[z.clone(), z.clone(), z.clone(), c.clone(), -alpha, -beta]),
            ),
            (
                (1, 3),
                rv(&[z.clone(), z.clone(), -c, z.clone(), -beta, -delta]),
            ),
            (
                (2, 3),
                rv(&[
                    c.clone(),
                    c.clone(),
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    z.clone(),
                ]),
            ),
            ((0, 4), int_vec6(&[0, 0, -1, 0, 0, 0])),
            ((1, 4), int_vec6(&[0, 0, 1, 0, 0, 0])),
            ((2, 4), int_vec6(&[-1, -1, 0, 0, 0, 0])),
            ((0, 5), int_vec6(&[0, 0, 0, -1, 0, 0])),
            ((1, 5), int_vec6(&[0, 0, 0, 1, 0, 0])),
            ((3, 5), int_vec6(&[-1, -1, 0, 0, 0, 0])),
        ],
    );
    let split = ReductiveSplit::new(algebra, vec![4, 5], vec![0, 1, 2, 3], space)
        .expect("bracket table is reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![],
    }
}

fn make_dosdos2(spec: &FamilySpec) -> CatalogEntry {
    let (c, alpha, beta, delta) = (
        spec.param("c"),
        spec.param("alpha"),
        spec.param("beta"),
        spec.param("delta"),
    );
    let space = MetricSpace::neutral4();
    let torsion = torsion_neutral_orthonormal(&q(0), c, &-c, &q(0));
    let a1 = fixtures::neutral_a1();
    let b = fixtures::neutral_b();
    let r12 = &a1.scale(&-beta) + &b.scale(&-delta);
    let r24 = &a1.scale(&-alpha) + &b.scale(beta);
    let curvature = CurvatureTensor::from_components(
        space.clone(),
        &[
            ((0, 1), r12.clone()),
            ((0, 2), -&r12),
            ((1, 3), r24.clone()),
            ((2, 3), -&r24),
        ],
    );
    let structure = NRStructure::new(space.clone(), torsion, curvature).expect("same space");

    let z = q(0);
    let algebra = LieAlgebra::from_brackets(
        labels(&["X1", "X2", "X3", "X4", "A", "B"]),
        &[
            (
                (0, 1),
                rv(&[z.clone(), z.clone(), z.clone(), -c, -beta, -delta]),
            ),
            (
                (0, 2),
                rv(&[
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    c.clone(),
                    beta.clone(),
                    delta.clone(),
                ]),
            ),
            (
                (0, 3),
                rv(&[z.clone(), -c, -c, z.clone(), z.clone(), z.clone()]),
            ),
            (
                (1, 3),
                rv(&[
                    c.clone(),
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    -alpha,
                    beta.clone(),
                ]),
            ),
            (
                (2, 3),
                rv(&[-c, z.clone(), z.clone(), z.clone(), alpha.clone(), -beta]),
            ),
            ((1, 4), int_vec6(&[0, 0, 0, -1, 0, 0])),
            ((2, 4), int_vec6(&[0, 0, 0, 1, 0, 0])),
            ((3, 4), int_vec6(&[0, -1, -1, 0, 0, 0])),
            ((0, 5), int_vec6(&[0, -1, -1, 0, 0, 0])),
            ((1, 5), int_vec6(&[1, 0, 0, 0, 0, 0])),
            ((2, 5), int_vec6(&[-1, 0, 0, 0, 0, 0])),
        ],
    );
    let split = ReductiveSplit::new(algebra, vec![4, 5], vec![0, 1, 2, 3], space)
        .expect("bracket table is reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![],
    }
}

fn make_sl_lorentz(spec: &FamilySpec) -> CatalogEntry {
    let (c, eta, alpha) = (spec.param("c"), spec.param("eta"), spec.param("alpha"));
    let space = MetricSpace::lorentz4();
    let d = eta * c;
    let torsion = torsion_lorentz_orthonormal(&q(0), &q(0), c, &d);
    let curvature = CurvatureTensor::from_components(
        space.clone(),
        &[((2, 3), fixtures::lorentz_a3().scale(alpha))],
    );
    let structure = NRStructure::new(space.clone(), torsion, curvature).expect("same space");

    let z = q(0);
    let algebra = LieAlgebra::from_brackets(
        labels(&["X1", "X2", "X3", "X4", "A"]),
        &[
            (
                (0, 2),
                rv(&[z.clone(), z.clone(), z.clone(), -c, z.clone()]),
            ),
            (
                (0, 3),
                rv(&[z.clone(), z.clone(), c.clone(), z.clone(), z.clone()]),
            ),
            (
                (1, 2),
                rv(&[z.clone(), z.clone(), z.clone(), -&d, z.clone()]),
            ),
            (
                (1, 3),
                rv(&[z.clone(), z.clone(), d.clone(), z.clone(), z.clone()]),
            ),
            (
                (2, 3),
                rv(&[c.clone(), -&d, z.clone(), z.clone(), alpha.clone()]),
            ),
            ((2, 4), int_vec5(&[0, 0, 0, 1, 0])),
            ((3, 4), int_vec5(&[0, 0, -1, 0, 0])),
        ],
    );
    let split = ReductiveSplit::new(algebra, vec![4], vec![0, 1, 2, 3], space)
        .expect("quotient table is reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![],
    }
}

fn make_sl_neutral(spec: &FamilySpec) -> CatalogEntry {
    let (b, eta, alpha) = (spec.param("b"), spec.param("eta"), spec.param("alpha"));
    let space = MetricSpace::neutral4();
    let d = eta * b;
    let torsion = torsion_neutral_orthonormal(&q(0), b, &q(0), &d);
    let generator = fixtures::neutral_a3(&q(0), &q(1));
    let curvature =
        CurvatureTensor::from_components(space.clone(), &[((1, 3), generator.scale(alpha))]);
    let structure = NRStructure::new(space.clone(), torsion, curvature).expect("same space");

    let z = q(0);
    let algebra = LieAlgebra::from_brackets(
        labels(&["X1", "X2", "X3", "X4", "A"]),
        &[
            (
                (0, 1),
                rv(&[z.clone(), z.clone(), z.clone(), -b, z.clone()]),
            ),
            (
                (0, 3),
                rv(&[z.clone(), -b, z.clone(), z.clone(), z.clone()]),
            ),
            (
                (1, 2),
                rv(&[z.clone(), z.clone(), z.clone(), -&d, z.clone()]),
            ),
            (
                (2, 3),
                rv(&[z.clone(), d.clone(), z.clone(), z.clone(), z.clone()]),
            ),
            (
                (1, 3),
                rv(&[b.clone(), z.clone(), d.clone(), z.clone(), alpha.clone()]),
            ),
            ((1, 4), int_vec5(&[0, 0, 0, -1, 0])),
            ((3, 4), int_vec5(&[0, -1, 0, 0, 0])),
        ],
    );
    let split = ReductiveSplit::new(algebra, vec![4], vec![0, 1, 2, 3], space)
        .expect("quotient table is reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![
            "bracket table derived from the reducible-case reduction; the quotient \
             presentation lists the [X2, X4] bracket as the one carrying the generator"
                .to_owned(),
        ],
    }
}

fn make_loren1(spec: &FamilySpec) -> CatalogEntry {
    let l = spec.param("lambda");
    let inv = l.recip();
    let algebra = LieAlgebra::from_brackets(
        labels(&["Y1", "Y2", "Y3", "T1", "T2"]),
        &[
            ((0, 1), rv(&[q(0), q(0), -l, q(0), q(0)])),
            ((0, 2), rv(&[q(0), l.clone(), q(0), q(0), q(0)])),
            ((1, 2), int_vec5(&[1, 0, 0, 0, 0])),
        ],
    );
    // New basis: X1, X2, X3 = Y2, X4 = Y3, A, expressed in (Y, T) coordinates.
    let p = Matrix::from_cols(
        5,
        &[
            rv(&[inv.clone(), q(0), q(0), &q(1) - &inv, inv.clone()]),
            rv(&[inv.clone(), q(0), q(0), -&inv, &q(1) + &inv]),
            rv(&[q(0), q(1), q(0), q(0), q(0)]),
            rv(&[q(0), q(0), q(1), q(0), q(0)]),
            rv(&[inv.clone(), q(0), q(0), -&inv, inv.clone()]),
        ],
    );
    let rotated = algebra
        .change_basis(&p)
        .expect("basis change is invertible for lambda != 0")
        .with_labels(labels(&["X1", "X2", "X3", "X4", "A"]));
    let split = ReductiveSplit::new(rotated, vec![4], vec![0, 1, 2, 3], MetricSpace::lorentz4())
        .expect("split is reductive");
    let structure = NRStructure::from_split(&split).expect("split is naturally reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![],
    }
}

fn make_dosdos1(spec: &FamilySpec) -> CatalogEntry {
    let l = spec.param("lambda");
    let inv = l.recip();
    let algebra = LieAlgebra::from_brackets(
        labels(&["Y1", "Y2", "Y3", "T1", "T2"]),
        &[
            ((0, 1), rv(&[q(0), q(0), l.clone(), q(0), q(0)])),
            ((0, 2), rv(&[q(0), l.clone(), q(0), q(0), q(0)])),
            ((1, 2), int_vec5(&[1, 0, 0, 0, 0])),
        ],
    );
    let p = Matrix::from_cols(
        5,
        &[
            rv(&[-&inv, q(0), q(0), &q(1) + &inv, inv.clone()]),
            rv(&[q(0), q(1), q(0), q(0), q(0)]),
            rv(&[inv.clone(), q(0), q(0), -&inv, &q(1) - &inv]),
            rv(&[q(0), q(0), q(1), q(0), q(0)]),
            rv(&[inv.clone(), q(0), q(0), -&inv, -&inv]),
        ],
    );
    let rotated = algebra
        .change_basis(&p)
        .expect("basis change is invertible for lambda != 0")
        .with_labels(labels(&["X1", "X2", "X3", "X4", "A"]));
    let split = ReductiveSplit::new(rotated, vec![4], vec![0, 1, 2, 3], MetricSpace::neutral4())
        .expect("split is reductive");
    let structure = NRStructure::from_split(&split).expect("split is naturally reductive");
    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![],
    }
}

fn make_oscillator(spec: &FamilySpec) -> CatalogEntry {
    let e = spec.param("epsilon");
    let gram = Matrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) | (3, 3) => e.clone(),
        (0, 3) | (3, 0) => q(1),
        (1, 1) | (2, 2) => q(1),
        _ => q(0),
    });
    let space = MetricSpace::new(gram, labels(&["P", "X", "Y", "Q"]))
        .expect("oscillator metric is nondegenerate for |epsilon| < 1");
    let algebra = LieAlgebra::from_brackets(
        labels(&["P", "X", "Y", "Q"]),
        &[
            ((1, 2), int_vec4(&[1, 0, 0, 0])),  // [X, Y] = P
            ((1, 3), int_vec4(&[0, 0, -1, 0])), // [X, Q] = -Y
            ((2, 3), int_vec4(&[0, 1, 0, 0])),  // [Y, Q] = X
        ],
    );
    let split = ReductiveSplit::new(algebra, vec![], vec![0, 1, 2, 3], space.clone())
        .expect("trivial isotropy split");

    let torsion =
        TorsionTensor::from_components(space.clone(), &[((1, 2), rv(&[q(-1), q(0), q(0), q(0)]))]);
    // Stated curvature operator on the (X, Y) pair: kills P and Q, sends
    // X to -epsilon Y and Y to 3 epsilon X.
    let mut r_xy = Matrix::zero(4, 4);
    r_xy[(1, 2)] = q(3) * e.clone();
    r_xy[(2, 1)] = -e;
    let curvature = CurvatureTensor::from_components(space.clone(), &[((1, 2), r_xy)]);
    let structure = NRStructure::new(space, torsion, curvature).expect("same space");

    CatalogEntry {
        structure: Some(structure),
        split: Some(split),
        notes: vec![
            "partial fixture: only the (X, Y) torsion and curvature components are \
             specified by the sources; all other components are stored as zero"
                .to_owned(),
            "the stated curvature operator fails skew-adjointness for epsilon != 0; \
             validation reports exactly that discrepancy"
                .to_owned(),
            "product witness W = span{X, Y, P}: restricted Gram determinant equals \
             epsilon, so W degenerates exactly at epsilon = 0"
                .to_owned(),
            "the trivial-isotropy split is naturally reductive exactly at epsilon = 0, \
             where the metric is bi-invariant and the space symmetric"
                .to_owned(),
        ],
    }
}

fn int_vec6(xs: &[i64; 6]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

fn int_vec5(xs: &[i64; 5]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

fn int_vec4(xs: &[i64; 4]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

/// The closed-form predictions for a family member.
pub fn expected_properties(spec: &FamilySpec) -> ExpectedProperties {
    match spec.family() {
        Family::Loren2 => expected_six_dim(spec, true),
        Family::Dosdos2 => expected_six_dim(spec, false),
        Family::SlLorentz | Family::SlNeutral | Family::Loren1 | Family::Dosdos1 => {
            ExpectedProperties {
                flat: Some(false),
                locally_symmetric: Some(false),
                indecomposable: Some(true),
                holonomy_dim: Some(3),
                notes: vec![],
            }
        }
        Family::Oscillator => {
            let e = spec.param("epsilon");
            ExpectedProperties {
                flat: None,
                locally_symmetric: Some(e.is_zero()),
                indecomposable: (!e.is_zero()).then_some(false),
                holonomy_dim: None,
                notes: vec![
                    "decomposition witness W = span{X, Y, P} is nondegenerate iff epsilon != 0"
                        .to_owned(),
                ],
            }
        }
    }
}

/// Shared predicate logic for the six-dimensional families.
///
/// Parameters are always the bracket-table constants, so the predicates have
/// the same shape in both families: the Levi-Civita curvature generators are
/// `(alpha - c^2/4) A + beta B` and `beta A + (delta - c^2/4) B` in the
/// Lorentzian family, and `-beta A - (delta - c^2/4) B` and
/// `-(alpha - c^2/4) A + beta B` in the neutral one.
fn expected_six_dim(spec: &FamilySpec, lorentzian: bool) -> ExpectedProperties {
    let c = spec.param("c");
    let quarter_c2 = &(c * c) / &q(4);
    let (offdiag, diag1, diag2) = (spec.param("beta"), spec.param("alpha"), spec.param("delta"));
    if c.is_zero() {
        // Zero torsion: always locally symmetric; the Levi-Civita curvature
        // equals the canonical curvature, so flat means all generators vanish.
        let all_zero = offdiag.is_zero() && diag1.is_zero() && diag2.is_zero();
        return ExpectedProperties {
            flat: Some(all_zero),
            locally_symmetric: Some(true),
            indecomposable: None,
            holonomy_dim: None,
            notes: vec!["c = 0: zero torsion, locally symmetric".to_owned()],
        };
    }
    let flat = offdiag.is_zero() && diag1 == diag2 && *diag1 == quarter_c2;
    let locally_symmetric = offdiag.is_zero() && diag1 == diag2;
    // Determinant of the Levi-Civita curvature generators: it controls
    // whether they already span both holonomy directions. The sign differs
    // between the families because of how the generators mix A and B.
    let off_sq = offdiag * offdiag;
    let prod = &(diag1 - &quarter_c2) * &(diag2 - &quarter_c2);
    let shifted = if lorentzian {
        &prod - &off_sq
    } else {
        &prod + &off_sq
    };
    let holonomy_dim = if flat {
        Some(0)
    } else if !shifted.is_zero() || lorentzian {
        // In the Lorentzian family the bracket closure restores both
        // generators on the degenerate locus as well; in the neutral family
        // that locus can leave a single nilpotent generator.
        Some(2)
    } else {
        None
    };
    // Every non-flat member with nonzero c is indecomposable: either the
    // holonomy spans both generators (whose commutant is the identity plus
    // a nilpotent line), or it degenerates to a single index-2 nilpotent,
    // which admits no nondegenerate invariant subspace at all.
    let indecomposable = (!flat).then_some(true);
    ExpectedProperties {
        flat: Some(flat),
        locally_symmetric: Some(locally_symmetric),
        indecomposable,
        holonomy_dim,
        notes: vec![],
    }
}
