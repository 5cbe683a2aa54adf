//! Decomposability: does the structure split as a pseudo-Riemannian product?
//!
//! Two routes are tried in order. First, the span `W` of all torsion values:
//! when `W` is proper and nondegenerate, both tensors project onto the pair
//! `(W, W_perp)` and `W` witnesses a product splitting. Second, the holonomy
//! route: an invariant orthogonal splitting exists exactly when the
//! commutant of the holonomy generators contains a metric-self-adjoint
//! idempotent different from 0 and the identity. The commutant is a rational
//! linear space; idempotents are searched through rational eigenvalues of
//! probe elements, and when the commutant is at most 2-dimensional the
//! existence question is settled completely (over the reals) by the minimal
//! polynomial of a non-scalar element. Searches that would require
//! irrational roots return `Unknown` with the obstruction polynomial rather
//! than a guessed verdict.

use crate::linalg::{Matrix, Subspace};
use crate::normal_form::{
    min_poly, poly_degree, poly_divmod, poly_eval_matrix, poly_ext_gcd, poly_mul, rational_roots,
};
use crate::rational::Rational;

use super::{NRStructure, NrError};

/// Verdict of the decomposability analysis.
#[derive(Debug, Clone, PartialEq)]
pub enum Decomposability {
    /// A product splitting with the given nondegenerate invariant witness.
    Decomposable { witness: Subspace },
    /// No metric-self-adjoint idempotent exists in the holonomy commutant.
    Indecomposable { detail: String },
    /// The analysis could not settle the question rationally.
    Unknown { detail: String },
}

impl NRStructure {
    /// Checks the projection compatibility of both tensors with the
    /// orthogonal pair `(w, w_perp)`:
    /// `T(pi X, pi Y) = pi T(X, Y)` and `R(pi X, pi Y) pi Z = pi R(X,Y) Z`
    /// for both projections, over all basis slots.
    pub fn check_projection_conditions(&self, w: &Subspace) -> Result<bool, NrError> {
        let n = self.space().dim();
        let p1 = self
            .space()
            .orthogonal_projector(w)
            .ok_or(NrError::DegenerateW)?;
        let p2 = &Matrix::identity(n) - &p1;
        for p in [&p1, &p2] {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.torsion().value(&p.col(i), &p.col(j));
                    let rhs = p.mul_vec(&self.torsion().value_basis(i, j));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let proj_op = self.curvature().op(&p.col(i), &p.col(j));
                    let orig_op = self.curvature().op_basis(i, j);
                    for k in 0..n {
                        let lhs = proj_op.mul_vec(&p.col(k));
                        let rhs = p.mul_vec(&orig_op.col(k));
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Full decomposability pipeline. Requires a valid structure.
    pub fn decompose(&self) -> Result<Decomposability, NrError> {
        self.ensure_valid()?;
        if self.torsion().is_zero() {
            // Null structure tensor: locally symmetric by the vanishing of
            // the difference tensor. A proper splitting witness cannot be
            // read off the reductive data.
            return Ok(Decomposability::Unknown {
                detail: "torsion vanishes: locally symmetric (null homogeneous structure \
                         tensor); no splitting witness from the reductive data"
                    .to_owned(),
            });
        }
        let w = self.torsion().values_span();
        if w.is_proper_nontrivial()
            && self.space().is_nondegenerate_on(&w)
            && self.check_projection_conditions(&w)?
        {
            return Ok(Decomposability::Decomposable { witness: w });
        }
        let r = self.levi_civita_curvature_unchecked();
        if r.is_zero() {
            return Ok(Decomposability::Unknown {
                detail: "flat: the holonomy is trivial and every subspace is invariant, but \
                         the torsion does not split along any of them"
                    .to_owned(),
            });
        }
        let hol = self.holonomy_from(&r);
        let n = self.space().dim();
        let hol_mats: Vec<Matrix> = hol
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_vectorized(n, n, v))
            .collect();
        // An index-2 nilpotent holonomy generator settles the question on
        // its own: a nonzero skew operator with square zero has rank 2 and
        // totally isotropic image equal to its kernel, which rules out every
        // proper nondegenerate invariant subspace in dimension 4.
        if n == 4 {
            for h in &hol_mats {
                if !h.is_zero() && h.pow(2).is_zero() {
                    return Ok(Decomposability::Indecomposable {
                        detail: "a holonomy generator is nilpotent of index 2; its image \
                                 equals its kernel and is totally isotropic, so no proper \
                                 nondegenerate invariant subspace exists"
                            .to_owned(),
                    });
                }
            }
        }
        let commutant = self_adjoint_commutant(self.space().gram(), &hol_mats);
        self.search_commutant(&commutant)
    }

    fn search_commutant(&self, commutant: &[Matrix]) -> Result<Decomposability, NrError> {
        let n = self.space().dim();
        let identity = Matrix::identity(n);
        let mut tensor_obstruction = false;

        let mut probes: Vec<Matrix> = commutant.to_vec();
        for a in 0..commutant.len() {
            for b in (a + 1)..commutant.len() {
                probes.push(&commutant[a] + &commutant[b]);
                probes.push(&commutant[a] - &commutant[b]);
            }
        }
        for x in &probes {
            if is_scalar(x) {
                continue;
            }
            for p in rational_idempotents_in_algebra_of(x) {
                if p.is_zero() || p == identity {
                    continue;
                }
                let witness = image_of(&p, n);
                debug_assert!(self.space().is_nondegenerate_on(&witness));
                if self.check_projection_conditions(&witness)? {
                    return Ok(Decomposability::Decomposable { witness });
                }
                tensor_obstruction = true;
            }
        }
        if tensor_obstruction {
            return Ok(Decomposability::Unknown {
                detail: "a holonomy-invariant orthogonal splitting exists, but the reductive \
                         tensors do not respect it"
                    .to_owned(),
            });
        }

        match commutant.len() {
            1 => Ok(Decomposability::Indecomposable {
                detail: "no self-adjoint idempotent in the holonomy commutant: the commutant \
                         is spanned by the identity"
                    .to_owned(),
            }),
            2 => {
                // Pick a non-scalar basis element X. Then every self-adjoint
                // real idempotent lies in R[X] = span{I, X}, and R[X] is a
                // field or a local ring unless the minimal polynomial of X
                // has two distinct real roots.
                let x = if is_scalar(&commutant[0]) {
                    &commutant[1]
                } else {
                    &commutant[0]
                };
                let m = min_poly(x);
                assert_eq!(
                    poly_degree(&m),
                    Some(2),
                    "non-scalar element of a 2-dimensional matrix algebra has a quadratic \
                     minimal polynomial"
                );
                let p = m[1].clone();
                let q = m[0].clone();
                let disc = &(&p * &p) - &(Rational::from_int(4) * q.clone());
                if disc.is_positive() {
                    match disc.sqrt_exact() {
                        // Rational distinct roots would have produced an
                        // idempotent in the probe loop above.
                        Some(_) => unreachable!(
                            "rational split of the commutant missed by the idempotent probes"
                        ),
                        None => Ok(Decomposability::Unknown {
                            detail: format!(
                                "a real splitting exists only over a quadratic extension; \
                                 obstruction polynomial t^2 + ({p}) t + ({q})"
                            ),
                        }),
                    }
                } else {
                    // Complex pair or double root: R[X] is a field or local,
                    // so the only idempotents are 0 and the identity.
                    Ok(Decomposability::Indecomposable {
                        detail: "no self-adjoint idempotent in the holonomy commutant: the \
                                 non-scalar commutant direction has minimal polynomial with \
                                 no real splitting"
                            .to_owned(),
                    })
                }
            }
            k => Ok(Decomposability::Unknown {
                detail: format!(
                    "holonomy commutant has dimension {k}; no rational idempotent was found \
                     and the case analysis is limited to dimension 2"
                ),
            }),
        }
    }
}

/// Basis of `{P : P H = H P for all generators, G P symmetric}`.
pub(crate) fn self_adjoint_commutant(gram: &Matrix, generators: &[Matrix]) -> Vec<Matrix> {
    let n = gram.rows();
    let dim2 = n * n;
    // Column (a,b): constraints applied to the matrix unit E_ab.
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(dim2);
    for a in 0..n {
        for b in 0..n {
            let mut e = Matrix::zero(n, n);
            e[(a, b)] = Rational::one();
            let mut col = Vec::new();
            for h in generators {
                col.extend(e.commutator(h).vectorize());
            }
            // Self-adjointness: G E - (G E)^T = 0.
            let ge = gram * &e;
            col.extend((&ge - &ge.transpose()).vectorize());
            cols.push(col);
        }
    }
    let rows = cols.first().map_or(0, Vec::len);
    Matrix::from_cols(rows, &cols)
        .kernel()
        .basis_vectors()
        .iter()
        .map(|v| Matrix::from_vectorized(n, n, v))
        .collect()
}

fn is_scalar(m: &Matrix) -> bool {
    let n = m.rows();
    let c = m[(0, 0)].clone();
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { c.clone() } else { Rational::zero() };
            if m[(i, j)] != expect {
                return false;
            }
        }
    }
    true
}

fn image_of(p: &Matrix, n: usize) -> Subspace {
    Subspace::span(&(0..n).map(|j| p.col(j)).collect::<Vec<_>>(), n)
}

/// Nontrivial idempotents of `Q[x]` for a matrix `x`, one per rational
/// eigenvalue: the projection onto the generalized eigenspace, built from a
/// coprime factorization of the minimal polynomial.
fn rational_idempotents_in_algebra_of(x: &Matrix) -> Vec<Matrix> {
    let m = min_poly(x);
    let Some(roots) = rational_roots(&m) else {
        return vec![];
    };
    let mut out = Vec::new();
    for root in roots {
        // m = (t - root)^k * g with g(root) != 0.
        let lin = vec![-root.clone(), Rational::one()];
        let mut g = m.clone();
        let mut f = vec![Rational::one()];
        loop {
            let (quot, rem) = poly_divmod(&g, &lin);
            if !rem.is_empty() {
                break;
            }
            g = quot;
            f = poly_mul(&f, &lin);
        }
        if poly_degree(&g) == Some(0) {
            continue; // single eigenvalue: projection would be the identity
        }
        let (gcd, _, v) = poly_ext_gcd(&f, &g);
        debug_assert_eq!(poly_degree(&gcd), Some(0));
        let projector_poly = poly_mul(&v, &g);
        let p = poly_eval_matrix(&projector_poly, x);
        debug_assert_eq!(&p * &p, p.clone(), "projector is idempotent");
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn commutant_of_nothing_is_all_self_adjoint() {
        // With no generators, the constraint is self-adjointness only:
        // dimension n(n+1)/2 for a diagonal metric.
        let g = Matrix::identity(3);
        let basis = self_adjoint_commutant(&g, &[]);
        assert_eq!(basis.len(), 6);
    }

    #[test]
    fn idempotents_of_diagonalizable_matrix() {
        let x = Matrix::from_int_rows(&[&[2, 0], &[0, 5]]);
        let ps = rational_idempotents_in_algebra_of(&x);
        assert_eq!(ps.len(), 2);
        for p in &ps {
            assert_eq!(&(p * p), p);
        }
        assert_eq!(&ps[0] + &ps[1], Matrix::identity(2));
    }

    #[test]
    fn no_idempotents_for_nilpotent_or_irrational() {
        let nil = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(rational_idempotents_in_algebra_of(&nil).is_empty());
        // x^2 = 2: irrational eigenvalues, no rational projectors.
        let sqrt2 = Matrix::from_int_rows(&[&[0, 2], &[1, 0]]);
        assert!(rational_idempotents_in_algebra_of(&sqrt2).is_empty());
    }

    #[test]
    fn generalized_eigenprojection() {
        // Jordan block at 1 plus eigenvalue 3: projector onto the block.
        let x = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 3]]);
        let ps = rational_idempotents_in_algebra_of(&x);
        assert_eq!(ps.len(), 2);
        let p1 = &ps[0]; // eigenvalue found first
        assert_eq!(&(p1 * p1), p1);
        // The two projectors are complementary.
        assert_eq!(&ps[0] + &ps[1], Matrix::identity(3));
        assert_eq!(rat(0), (&ps[0] * &ps[1]).trace());
    }
}
