//! Structure validation: the six exact checks a naturally reductive triple
//! must satisfy.
//!
//! Failures are recorded in the report rather than thrown, so invalid or
//! partial fixtures can still be inspected; all downstream geometry requires
//! a fully valid structure.

use serde::Serialize;

use crate::lie::pairs;
use crate::linalg::{basis_vector, vec_add, vec_is_zero, Matrix, Vector};
use crate::metric::Endomorphism;

use super::NRStructure;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of [`NRStructure::validate`], one entry per check.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_check_names(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.to_owned())
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl NRStructure {
    /// Runs the six validity checks:
    ///
    /// 1. the trilinear torsion form is alternating (natural reductivity),
    /// 2. every curvature operator is skew-adjoint,
    /// 3. every element of `h = span{R(Xi,Xj)}` acts as a derivation
    ///    annihilating both tensors (`A.T = 0` and `A.R = 0`),
    /// 4. `h` is closed under commutators,
    /// 5. first Bianchi identity: cyclic `R(x,y)z` = cyclic `T(T(x,y),z)`,
    /// 6. second Bianchi identity: cyclic `R(T(x,y),z) = 0`.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::with_capacity(6);

        let alt = self.torsion().first_non_alternating_triple();
        checks.push(CheckResult {
            name: "torsion_trilinear_alternating",
            passed: alt.is_none(),
            detail: alt.map(|(x, y, z)| {
                format!("<T(x,y),z> + <T(x,z),y> != 0 at basis triple ({x}, {y}, {z})")
            }),
        });

        let bad_pair = pairs(self.space().dim()).find(|&(i, j)| {
            !Endomorphism::new(self.space().clone(), self.curvature().op_basis(i, j))
                .is_skew_adjoint()
        });
        checks.push(CheckResult {
            name: "curvature_operators_skew_adjoint",
            passed: bad_pair.is_none(),
            detail: bad_pair.map(|(i, j)| format!("R(X{}, X{}) is not skew-adjoint", i + 1, j + 1)),
        });

        let h_basis = self.curvature().span_basis_matrices();
        let mut derivation_failure = None;
        'outer: for h in &h_basis {
            for (i, j) in pairs(self.space().dim()) {
                if !vec_is_zero(&self.torsion().derivation_by(h, i, j)) {
                    derivation_failure = Some(format!(
                        "A.T != 0 on pair (X{}, X{}) for a curvature span generator",
                        i + 1,
                        j + 1
                    ));
                    break 'outer;
                }
                if !self.curvature().derivation_by(h, i, j).is_zero() {
                    derivation_failure = Some(format!(
                        "A.R != 0 on pair (X{}, X{}) for a curvature span generator",
                        i + 1,
                        j + 1
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(CheckResult {
            name: "curvature_span_acts_as_derivations",
            passed: derivation_failure.is_none(),
            detail: derivation_failure,
        });

        let h_span = self.curvature().span();
        let not_closed = h_basis
            .iter()
            .enumerate()
            .flat_map(|(a, ha)| h_basis.iter().skip(a + 1).map(move |hb| (ha, hb)))
            .any(|(ha, hb)| !h_span.contains_vector(&ha.commutator(hb).vectorize()));
        checks.push(CheckResult {
            name: "curvature_span_closed_under_commutator",
            passed: !not_closed,
            detail: not_closed.then(|| "some [R(x,y), R(u,v)] leaves the span".to_owned()),
        });

        let b1 = self.first_bianchi_failure();
        checks.push(CheckResult {
            name: "first_bianchi",
            passed: b1.is_none(),
            detail: b1.map(|(i, j, k)| {
                format!("cyclic R != cyclic T(T(.,.),.) at triple ({i}, {j}, {k})")
            }),
        });

        let b2 = self.second_bianchi_failure();
        checks.push(CheckResult {
            name: "second_bianchi",
            passed: b2.is_none(),
            detail: b2
                .map(|(i, j, k)| format!("cyclic R(T(x,y),z) != 0 at triple ({i}, {j}, {k})")),
        });

        ValidationReport { checks }
    }

    fn first_bianchi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.space().dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let lhs = cyclic_sum_vec(i, j, k, |x, y, z| {
                        self.curvature().op_basis(x, y).mul_vec(&basis_vector(n, z))
                    });
                    let rhs = cyclic_sum_vec(i, j, k, |x, y, z| {
                        self.torsion()
                            .value(&self.torsion().value_basis(x, y), &basis_vector(n, z))
                    });
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn second_bianchi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.space().dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = Matrix::zero(n, n);
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let t = self.torsion().value_basis(x, y);
                        acc = &acc + &self.curvature().op_vec_basis(&t, z);
                    }
                    if !acc.is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

fn cyclic_sum_vec(
    i: usize,
    j: usize,
    k: usize,
    mut f: impl FnMut(usize, usize, usize) -> Vector,
) -> Vector {
    let a = f(i, j, k);
    let b = f(j, k, i);
    let c = f(k, i, j);
    vec_add(&vec_add(&a, &b), &c)
}
