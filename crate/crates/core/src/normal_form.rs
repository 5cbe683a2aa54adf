//! Conjugation-invariant classification of skew-adjoint endomorphisms of
//! 4-dimensional spaces of signature (1,3) or (2,2).
//!
//! The classification never constructs the conjugating basis (which would
//! need irrational eigenvectors in general); it is decided entirely from
//! exact invariants: the characteristic polynomial, the minimal polynomial,
//! nilpotency indices and sign tests on the quadratic `u^2 + c2 u + c0`
//! whose roots are the squared eigenvalues. Squared parameters are stored
//! when they are rational; otherwise the tag carries the characteristic
//! polynomial and a note, so nothing is ever approximated.
//!
//! Families in signature (1,3): a nonzero nilpotent operator (always of
//! nilpotency index 3) or a direct sum of a boost of speed `alpha` and a
//! rotation of speed `beta`. In signature (2,2): a reducible nilpotent
//! (index 3), two rotations, two boosts, or one of three irreducible types
//! (repeated imaginary pair, repeated real pair, complex quadruple). The
//! nilpotent operators of index 2 sit on the `nu = 0` boundary of the
//! repeated-imaginary family and are irreducible: their image equals their
//! kernel and is totally isotropic, which rules out any proper nondegenerate
//! invariant subspace.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::metric::Endomorphism;
use crate::rational::Rational;

/// Ascending coefficient list: `p[k]` is the coefficient of `x^k`.
pub type Poly = Vec<Rational>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("operator is not skew-adjoint for the space's metric")]
    NotSkew,
    #[error("expected signature ({0},{1}), got ({2},{3})")]
    WrongSignature(usize, usize, usize, usize),
    /// Kept for completeness: every decision below is made by rational sign
    /// tests, so an ambiguous irrational invariant cannot currently arise.
    #[error("irrational invariant; squared-eigenvalue polynomial {0:?}")]
    IrrationalInvariant(Poly),
}

/// The nine conjugacy families of skew-adjoint operators covered here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalFormFamily {
    Zero,
    #[serde(rename = "Lor_a")]
    LorA,
    #[serde(rename = "Lor_b")]
    LorB,
    #[serde(rename = "Neu_a1")]
    NeuA1,
    #[serde(rename = "Neu_a2")]
    NeuA2,
    #[serde(rename = "Neu_a3")]
    NeuA3,
    #[serde(rename = "Neu_b1")]
    NeuB1,
    #[serde(rename = "Neu_b2")]
    NeuB2,
    #[serde(rename = "Neu_b3")]
    NeuB3,
}

impl NormalFormFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            NormalFormFamily::Zero => "Zero",
            NormalFormFamily::LorA => "Lor_a",
            NormalFormFamily::LorB => "Lor_b",
            NormalFormFamily::NeuA1 => "Neu_a1",
            NormalFormFamily::NeuA2 => "Neu_a2",
            NormalFormFamily::NeuA3 => "Neu_a3",
            NormalFormFamily::NeuB1 => "Neu_b1",
            NormalFormFamily::NeuB2 => "Neu_b2",
            NormalFormFamily::NeuB3 => "Neu_b3",
        }
    }
}

/// Classification result. All fields are conjugation invariants: two inputs
/// conjugate by a metric-preserving map receive identical tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormTag {
    pub family: NormalFormFamily,
    /// Named invariant parameters (squared where a square root would be
    /// irrational). Empty when the parameters exist only over a quadratic
    /// extension; the characteristic polynomial then carries them exactly.
    pub parameters: Vec<(String, Rational)>,
    /// Characteristic polynomial, ascending coefficients.
    pub char_poly: Poly,
    pub nilpotency_index: Option<usize>,
    /// Boundary or irrationality annotations, e.g. the nilpotent `nu = 0`
    /// boundary of the repeated-imaginary family.
    pub note: Option<String>,
}

impl NormalFormTag {
    pub fn parameter(&self, name: &str) -> Option<&Rational> {
        self.parameters
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }
}

/// Shared invariants: characteristic polynomial, minimal polynomial and the
/// ranks of the first `dim` powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationInvariants {
    pub char_poly: Poly,
    pub min_poly: Poly,
    pub power_ranks: Vec<usize>,
}

pub fn conjugation_invariants(m: &Matrix) -> ConjugationInvariants {
    assert!(m.is_square());
    ConjugationInvariants {
        char_poly: char_poly(m),
        min_poly: min_poly(m),
        power_ranks: (1..=m.rows() as u32).map(|k| m.pow(k).rank()).collect(),
    }
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence; ascending
/// coefficients, monic.
pub fn char_poly(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = Matrix::identity(n);
    for k in 1..=n {
        aux = m * &aux;
        let c = -(aux.trace() / Rational::from_int(k as i64));
        for i in 0..n {
            let v = &aux[(i, i)] + &c;
            aux[(i, i)] = v;
        }
        coeffs[n - k] = c;
    }
    coeffs
}

/// Minimal polynomial: the first power of `m` that is a linear combination
/// of the lower powers, solved exactly; ascending coefficients, monic.
pub fn min_poly(m: &Matrix) -> Poly {
    let n = m.rows();
    let dim2 = n * n;
    let mut powers = vec![Matrix::identity(n)];
    for _ in 0..n {
        powers.push(m * powers.last().unwrap());
    }
    for d in 1..=n {
        let cols: Vec<_> = powers[..d].iter().map(Matrix::vectorize).collect();
        let basis = Matrix::from_cols(dim2, &cols);
        if let Some(x) = crate::linalg::coords_in(&basis, &powers[d].vectorize()) {
            let mut p = vec![Rational::zero(); d + 1];
            for (k, c) in x.into_iter().enumerate() {
                p[k] = -c;
            }
            p[d] = Rational::one();
            return p;
        }
    }
    unreachable!("Cayley-Hamilton: degree <= n always succeeds")
}

/// Smallest `k >= 1` with `m^k = 0`, or `None` if `m` is not nilpotent.
/// By Cayley-Hamilton a nilpotent n x n matrix has index at most n.
pub fn nilpotency_index(m: &Matrix) -> Option<usize> {
    let n = m.rows();
    let mut p = m.clone();
    for k in 1..=n {
        if p.is_zero() {
            return Some(k);
        }
        p = &p * m;
    }
    None
}

pub fn poly_derivative(p: &[Rational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| Rational::from_int(k as i64) * c.clone())
        .collect()
}

fn poly_trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder of polynomial division.
pub fn poly_rem(a: &[Rational], b: &[Rational]) -> Poly {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut r = poly_trim(a.to_vec());
    let lead = b[db].clone();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        for k in 0..=db {
            let v = &r[dr - db + k] - &(&f * &b[k]);
            r[dr - db + k] = v;
        }
        r = poly_trim(r);
    }
    r
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = poly_degree(&x) {
        let inv = x[d].recip();
        for c in &mut x {
            *c = &*c * &inv;
        }
    }
    x
}

/// Squarefree over the rationals, hence diagonalizable over the complex
/// numbers when applied to a minimal polynomial.
pub fn poly_is_squarefree(p: &[Rational]) -> bool {
    poly_degree(&poly_gcd(p, &poly_derivative(p))) == Some(0)
}

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + &(x * y);
            out[i + j] = v;
        }
    }
    poly_trim(out)
}

/// Quotient and remainder of polynomial division.
pub fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut r = poly_trim(a.to_vec());
    let da = poly_degree(&r).unwrap_or(0);
    let mut q = vec![Rational::zero(); da.saturating_sub(db) + 1];
    let lead = b[db].clone();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        q[dr - db] = f.clone();
        for k in 0..=db {
            let v = &r[dr - db + k] - &(&f * &b[k]);
            r[dr - db + k] = v;
        }
        r = poly_trim(r);
    }
    (poly_trim(q), r)
}

/// Extended gcd: returns `(g, u, v)` with `u a + v b = g` and `g` monic.
pub fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Poly, Poly, Poly) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let (mut u0, mut u1) = (vec![Rational::one()], vec![]);
    let (mut v0, mut v1) = (vec![], vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let nu = poly_sub(&u0, &poly_mul(&q, &u1));
        let nv = poly_sub(&v0, &poly_mul(&q, &v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if let Some(d) = poly_degree(&r0) {
        let inv = r0[d].recip();
        for c in r0.iter_mut().chain(&mut u0).chain(&mut v0) {
            *c = &*c * &inv;
        }
    }
    (r0, u0, v0)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).unwrap_or(&zero);
        let y = b.get(k).unwrap_or(&zero);
        out.push(x - y);
    }
    poly_trim(out)
}

pub fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Horner evaluation of a polynomial at a square matrix.
pub fn poly_eval_matrix(p: &[Rational], m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut acc = Matrix::zero(n, n);
    for c in p.iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            let v = &acc[(i, i)] + c;
            acc[(i, i)] = v;
        }
    }
    acc
}

/// All rational roots of a polynomial, found through integer divisor
/// enumeration on the cleared-denominator form. Returns `None` when the
/// coefficients are too large to enumerate divisors exactly; callers treat
/// that as "roots unknown".
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    let p = poly_trim(p.to_vec());
    let deg = poly_degree(&p)?;
    if deg == 0 {
        return Some(vec![]);
    }
    // Clear denominators.
    let mut scale = BigInt::one();
    for c in &p {
        let d = c.denom();
        let g = num_integer::gcd(scale.clone(), d.clone());
        scale = &scale / &g * d;
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&scale / c.denom())).collect();
    let mut roots = Vec::new();
    let first_nonzero = ints.iter().position(|c| !c.is_zero())?;
    if first_nonzero > 0 {
        roots.push(Rational::zero());
    }
    let a0 = ints[first_nonzero].abs();
    let alead = ints[deg].abs();
    let cap: u64 = 1_000_000_000_000;
    let (a0, alead) = (a0.to_u64()?, alead.to_u64()?);
    if a0 > cap || alead > cap {
        return None;
    }
    for num in divisors(a0) {
        for den in divisors(alead) {
            for sign in [1i64, -1] {
                let cand = Rational::new(sign * num as i64, den as i64);
                if poly_eval(&p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Classifies a skew-adjoint endomorphism of a Lorentzian 4-space.
///
/// Zero, nilpotent (`Lor_a`, always of nilpotency index 3), or the
/// boost-plus-rotation family `Lor_b` with invariants `alpha^2 >= 0` and
/// `beta^2 >= 0` read off the characteristic polynomial
/// `x^4 + (beta^2 - alpha^2) x^2 - alpha^2 beta^2`.
pub fn classify_lorentz(a: &Endomorphism) -> Result<NormalFormTag, ClassifyError> {
    classify_signature(a, (1, 3))
}

/// Classifies a skew-adjoint endomorphism of a (2,2)-signature 4-space.
/// Any (2,2) Gram matrix is accepted, diagonal or Witt.
pub fn classify_neutral(a: &Endomorphism) -> Result<NormalFormTag, ClassifyError> {
    classify_signature(a, (2, 2))
}

fn classify_signature(
    a: &Endomorphism,
    expect: (usize, usize),
) -> Result<NormalFormTag, ClassifyError> {
    let got = a.space().signature();
    if got != expect || a.space().dim() != 4 {
        return Err(ClassifyError::WrongSignature(
            expect.0, expect.1, got.0, got.1,
        ));
    }
    if !a.is_skew_adjoint() {
        return Err(ClassifyError::NotSkew);
    }
    let cp = char_poly(a.mat());
    debug_assert!(
        cp[1].is_zero() && cp[3].is_zero(),
        "skew-adjoint operators have even characteristic polynomials"
    );
    if a.mat().is_zero() {
        return Ok(NormalFormTag {
            family: NormalFormFamily::Zero,
            parameters: vec![],
            char_poly: cp,
            nilpotency_index: Some(1),
            note: None,
        });
    }
    if expect == (1, 3) {
        classify_lorentz_nonzero(a, cp)
    } else {
        classify_neutral_nonzero(a, cp)
    }
}

fn classify_lorentz_nonzero(a: &Endomorphism, cp: Poly) -> Result<NormalFormTag, ClassifyError> {
    if let Some(idx) = nilpotency_index(a.mat()) {
        // A nonzero skew-adjoint nilpotent in signature (1,3) is a null
        // rotation plus a fixed line; its index is 3.
        assert_eq!(idx, 3, "Lorentz nilpotent skew operators have index 3");
        return Ok(NormalFormTag {
            family: NormalFormFamily::LorA,
            parameters: vec![],
            char_poly: cp,
            nilpotency_index: Some(3),
            note: None,
        });
    }
    // x^4 + c2 x^2 + c0 with squared-eigenvalue roots alpha^2 >= 0 >= -beta^2.
    let c2 = cp[2].clone();
    let c0 = cp[0].clone();
    let disc = &(&c2 * &c2) - &(Rational::from_int(4) * c0.clone());
    let mut parameters = vec![];
    let mut note = None;
    match disc.sqrt_exact() {
        Some(s) => {
            let two = Rational::from_int(2);
            let u1 = &(&s - &c2) / &two; // larger root = alpha^2
            let u2 = &(-&(&s + &c2)) / &two; // smaller root = -beta^2
            debug_assert!(!u1.is_negative() && !u2.is_positive());
            parameters.push(("alpha_sq".to_owned(), u1));
            parameters.push(("beta_sq".to_owned(), -u2));
        }
        None => {
            note = Some("squared parameters are conjugate irrationals; see char_poly".to_owned());
        }
    }
    Ok(NormalFormTag {
        family: NormalFormFamily::LorB,
        parameters,
        char_poly: cp,
        nilpotency_index: None,
        note,
    })
}

fn classify_neutral_nonzero(a: &Endomorphism, cp: Poly) -> Result<NormalFormTag, ClassifyError> {
    if let Some(idx) = nilpotency_index(a.mat()) {
        return Ok(match idx {
            // 0 plus a null rotation of a 3-dimensional factor: reducible.
            3 => NormalFormTag {
                family: NormalFormFamily::NeuA1,
                parameters: vec![],
                char_poly: cp,
                nilpotency_index: Some(3),
                note: None,
            },
            // Image = kernel, totally isotropic: no proper nondegenerate
            // invariant subspace exists, so this sits on the nu = 0 boundary
            // of the repeated-imaginary irreducible family.
            2 => NormalFormTag {
                family: NormalFormFamily::NeuB1,
                parameters: vec![("nu".to_owned(), Rational::zero())],
                char_poly: cp,
                nilpotency_index: Some(2),
                note: Some(
                    "nilpotent nu = 0 boundary: irreducible, image equals kernel and is \
                     totally isotropic"
                        .to_owned(),
                ),
            },
            other => unreachable!("neutral skew nilpotent of index {other}"),
        });
    }
    let c2 = cp[2].clone();
    let c0 = cp[0].clone();
    let two = Rational::from_int(2);
    let four = Rational::from_int(4);
    let disc = &(&c2 * &c2) - &(&four * &c0);
    if disc.is_negative() {
        // Complex quadruple +-xi +- i nu: irreducible type with
        // xi^2 - nu^2 = -c2/2 and xi^2 + nu^2 = sqrt(c0).
        let mut parameters = vec![];
        let mut note = None;
        match c0.sqrt_exact() {
            Some(s) => {
                let xi_sq = &(&s - &(&c2 / &two)) / &two;
                let nu_sq = &(&s + &(&c2 / &two)) / &two;
                parameters.push(("xi_sq".to_owned(), xi_sq));
                parameters.push(("nu_sq".to_owned(), nu_sq));
            }
            None => {
                note =
                    Some("squared parameters are conjugate irrationals; see char_poly".to_owned())
            }
        }
        return Ok(NormalFormTag {
            family: NormalFormFamily::NeuB3,
            parameters,
            char_poly: cp,
            nilpotency_index: None,
            note,
        });
    }
    // Real squared-eigenvalue roots. A mixed sign pattern (c0 < 0) would mean
    // an invariant boost plane next to an invariant rotation plane, which is
    // impossible in signature (2,2).
    assert!(
        !c0.is_negative(),
        "mixed boost/rotation spectrum cannot occur for (2,2) skew operators"
    );
    let semisimple = poly_is_squarefree(&min_poly(a.mat()));
    let roots = disc.sqrt_exact().map(|s| {
        let u1 = &(&s - &c2) / &two;
        let u2 = &(-&(&s + &c2)) / &two;
        (u1, u2)
    });
    if c2.is_positive() {
        // Both roots <= 0: purely rotational spectrum.
        if semisimple {
            let mut parameters = vec![];
            let mut note = None;
            match roots {
                Some((u1, u2)) => {
                    parameters.push(("alpha_sq".to_owned(), -u1));
                    parameters.push(("beta_sq".to_owned(), -u2));
                }
                None => {
                    note = Some(
                        "squared rotation speeds are conjugate irrationals; see char_poly"
                            .to_owned(),
                    )
                }
            }
            Ok(NormalFormTag {
                family: NormalFormFamily::NeuA2,
                parameters,
                char_poly: cp,
                nilpotency_index: None,
                note,
            })
        } else {
            // Non-semisimple with distinct eigenvalue pairs is impossible, so
            // the repeated pair +-i nu is forced.
            assert!(
                disc.is_zero(),
                "non-semisimple (2,2) skew must have a repeated pair"
            );
            let nu_sq = &c2 / &two;
            let mut parameters = vec![("nu_sq".to_owned(), nu_sq.clone())];
            if let Some(nu) = nu_sq.sqrt_exact() {
                parameters.push(("nu".to_owned(), nu));
            }
            Ok(NormalFormTag {
                family: NormalFormFamily::NeuB1,
                parameters,
                char_poly: cp,
                nilpotency_index: None,
                note: None,
            })
        }
    } else if c2.is_negative() {
        // Both roots >= 0: purely boost spectrum.
        if semisimple {
            let mut parameters = vec![];
            let mut note = None;
            match roots {
                Some((u1, u2)) => {
                    parameters.push(("alpha_sq".to_owned(), u1));
                    parameters.push(("beta_sq".to_owned(), u2));
                }
                None => {
                    note = Some(
                        "squared boost speeds are conjugate irrationals; see char_poly".to_owned(),
                    )
                }
            }
            Ok(NormalFormTag {
                family: NormalFormFamily::NeuA3,
                parameters,
                char_poly: cp,
                nilpotency_index: None,
                note,
            })
        } else {
            assert!(
                disc.is_zero(),
                "non-semisimple (2,2) skew must have a repeated pair"
            );
            let lambda_sq = -(&c2 / &two);
            let mut parameters = vec![("lambda_sq".to_owned(), lambda_sq.clone())];
            if let Some(lambda) = lambda_sq.sqrt_exact() {
                parameters.push(("lambda".to_owned(), lambda));
            }
            Ok(NormalFormTag {
                family: NormalFormFamily::NeuB2,
                parameters,
                char_poly: cp,
                nilpotency_index: None,
                note: None,
            })
        }
    } else {
        // c2 = 0 with real roots forces c0 = 0, i.e. the nilpotent case
        // already handled above.
        unreachable!("c2 = 0 non-nilpotent (2,2) skew operator")
    }
}

/// The standard fixture matrices of the classification, used across tests
/// and the catalog.
pub mod fixtures {
    use crate::linalg::Matrix;
    use crate::rational::Rational;

    /// Lorentz nilpotent generator: X1 -> X3, X2 -> -X3, X3 -> X1+X2, X4 -> 0.
    pub fn lorentz_a1() -> Matrix {
        Matrix::from_int_rows(&[&[0, 0, 1, 0], &[0, 0, 1, 0], &[1, -1, 0, 0], &[0, 0, 0, 0]])
    }

    /// Lorentz boost generator of the X1X2-plane.
    pub fn lorentz_a2() -> Matrix {
        Matrix::from_int_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])
    }

    /// Lorentz rotation generator of the X3X4-plane.
    pub fn lorentz_a3() -> Matrix {
        Matrix::from_int_rows(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
    }

    /// Second nilpotent generator appearing next to `lorentz_a1` in the
    /// Lorentzian curvature analysis: X1 -> X4, X2 -> -X4, X4 -> X1+X2.
    pub fn lorentz_b() -> Matrix {
        Matrix::from_int_rows(&[&[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0], &[1, -1, 0, 0]])
    }

    /// Neutral reducible nilpotent: X2 -> X4, X3 -> -X4, X4 -> X2+X3.
    pub fn neutral_a1() -> Matrix {
        Matrix::from_int_rows(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 1, -1, 0]])
    }

    /// Rotation pair with speeds `alpha` (on the negative-definite plane)
    /// and `beta`.
    pub fn neutral_a2(alpha: &Rational, beta: &Rational) -> Matrix {
        let mut m = Matrix::zero(4, 4);
        m[(0, 1)] = alpha.clone();
        m[(1, 0)] = -alpha.clone();
        m[(2, 3)] = beta.clone();
        m[(3, 2)] = -beta.clone();
        m
    }

    /// Boost pair with speeds `beta` and `alpha`.
    pub fn neutral_a3(beta: &Rational, alpha: &Rational) -> Matrix {
        let mut m = Matrix::zero(4, 4);
        m[(0, 2)] = beta.clone();
        m[(2, 0)] = beta.clone();
        m[(1, 3)] = alpha.clone();
        m[(3, 1)] = alpha.clone();
        m
    }

    /// Second generator appearing next to `neutral_a1` in the (2,2)
    /// curvature analysis: X1 -> X2+X3, X2 -> -X1, X3 -> X1.
    pub fn neutral_b() -> Matrix {
        Matrix::from_int_rows(&[&[0, -1, 1, 0], &[1, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]])
    }

    /// Irreducible Witt-basis type with repeated eigenvalue pair +-i nu.
    pub fn witt_b1(nu: &Rational) -> Matrix {
        let mut m = Matrix::zero(4, 4);
        m[(0, 1)] = -nu.clone();
        m[(0, 2)] = Rational::one();
        m[(1, 0)] = nu.clone();
        m[(1, 3)] = Rational::one();
        m[(2, 3)] = -nu.clone();
        m[(3, 2)] = nu.clone();
        m
    }

    /// Irreducible Witt-basis type with repeated real pair +-lambda.
    pub fn witt_b2(lambda: &Rational) -> Matrix {
        let mut m = Matrix::zero(4, 4);
        m[(0, 0)] = lambda.clone();
        m[(1, 1)] = -lambda.clone();
        m[(2, 2)] = lambda.clone();
        m[(3, 3)] = -lambda.clone();
        m[(0, 2)] = Rational::one();
        m[(1, 3)] = Rational::one();
        m
    }

    /// Irreducible Witt-basis type with complex quadruple +-xi +- i nu.
    pub fn witt_b3(xi: &Rational, nu: &Rational) -> Matrix {
        let mut m = Matrix::zero(4, 4);
        m[(0, 0)] = xi.clone();
        m[(0, 1)] = nu.clone();
        m[(1, 0)] = -nu.clone();
        m[(1, 1)] = xi.clone();
        m[(2, 2)] = -xi.clone();
        m[(2, 3)] = nu.clone();
        m[(3, 2)] = -nu.clone();
        m[(3, 3)] = -xi.clone();
        m
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::metric::MetricSpace;
    use crate::rational::rat;

    fn lor(m: Matrix) -> Endomorphism {
        Endomorphism::new(MetricSpace::lorentz4(), m)
    }

    fn neu(m: Matrix) -> Endomorphism {
        Endomorphism::new(MetricSpace::neutral4(), m)
    }

    fn witt(m: Matrix) -> Endomorphism {
        Endomorphism::new(MetricSpace::neutral4_witt(), m)
    }

    fn poly(cs: &[i64]) -> Poly {
        cs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn fixture_matrices_are_skew() {
        assert!(lor(lorentz_a1()).is_skew_adjoint());
        assert!(lor(lorentz_a2()).is_skew_adjoint());
        assert!(lor(lorentz_a3()).is_skew_adjoint());
        assert!(lor(lorentz_b()).is_skew_adjoint());
        assert!(neu(neutral_a1()).is_skew_adjoint());
        assert!(neu(neutral_a2(&rat(1), &rat(2))).is_skew_adjoint());
        assert!(neu(neutral_a3(&rat(1), &rat(2))).is_skew_adjoint());
        assert!(neu(neutral_b()).is_skew_adjoint());
        assert!(witt(witt_b1(&rat(1))).is_skew_adjoint());
        assert!(witt(witt_b2(&rat(1))).is_skew_adjoint());
        assert!(witt(witt_b3(&rat(1), &rat(2))).is_skew_adjoint());
    }

    #[test]
    fn invariants_of_identity() {
        let inv = conjugation_invariants(&Matrix::identity(4));
        assert_eq!(inv.char_poly, poly(&[1, -4, 6, -4, 1]));
        assert_eq!(inv.min_poly, poly(&[-1, 1]));
        assert_eq!(inv.power_ranks, vec![4, 4, 4, 4]);
    }

    #[test]
    fn invariants_of_nilpotent_generator() {
        // Matrix-power oracle: A^2 != 0, A^3 = 0.
        let a = lorentz_a1();
        assert!(!a.pow(2).is_zero());
        assert!(a.pow(3).is_zero());
        let inv = conjugation_invariants(&a);
        assert_eq!(inv.char_poly, poly(&[0, 0, 0, 0, 1]));
        assert_eq!(inv.min_poly, poly(&[0, 0, 0, 1]));
    }

    #[test]
    fn char_poly_of_plane_rotation() {
        // 2x2 block computation: x^4 + x^2 = x^2 (x^2 + 1).
        assert_eq!(char_poly(&lorentz_a3()), poly(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn classify_lorentz_families() {
        let zero = classify_lorentz(&lor(Matrix::zero(4, 4))).unwrap();
        assert_eq!(zero.family, NormalFormFamily::Zero);

        let a = classify_lorentz(&lor(lorentz_a1())).unwrap();
        assert_eq!(a.family, NormalFormFamily::LorA);
        assert_eq!(a.nilpotency_index, Some(3));
        // Both signs of the nilpotent generator land in the same family.
        let neg = classify_lorentz(&lor(-&lorentz_a1())).unwrap();
        assert_eq!(neg.family, NormalFormFamily::LorA);

        let mixed = &lorentz_a2().scale(&rat(2)) + &lorentz_a3().scale(&rat(3));
        let b = classify_lorentz(&lor(mixed)).unwrap();
        assert_eq!(b.family, NormalFormFamily::LorB);
        assert_eq!(b.parameter("alpha_sq"), Some(&rat(4)));
        assert_eq!(b.parameter("beta_sq"), Some(&rat(9)));
        // Reassembling x^4 + (b^2 - a^2) x^2 - a^2 b^2 reproduces char_poly.
        assert_eq!(b.char_poly, poly(&[-36, 0, 5, 0, 1]));
    }

    #[test]
    fn classify_lorentz_rejects() {
        assert_eq!(
            classify_lorentz(&lor(Matrix::identity(4))),
            Err(ClassifyError::NotSkew)
        );
        assert_eq!(
            classify_lorentz(&neu(neutral_a1())),
            Err(ClassifyError::WrongSignature(1, 3, 2, 2))
        );
    }

    #[test]
    fn classify_neutral_families() {
        let a1 = classify_neutral(&neu(neutral_a1())).unwrap();
        assert_eq!(a1.family, NormalFormFamily::NeuA1);
        assert_eq!(a1.nilpotency_index, Some(3));

        let a2 = classify_neutral(&neu(neutral_a2(&rat(1), &rat(2)))).unwrap();
        assert_eq!(a2.family, NormalFormFamily::NeuA2);
        assert_eq!(a2.parameter("alpha_sq"), Some(&rat(1)));
        assert_eq!(a2.parameter("beta_sq"), Some(&rat(4)));

        let a3 = classify_neutral(&neu(neutral_a3(&rat(1), &rat(2)))).unwrap();
        assert_eq!(a3.family, NormalFormFamily::NeuA3);
        assert_eq!(a3.parameter("alpha_sq"), Some(&rat(4)));
        assert_eq!(a3.parameter("beta_sq"), Some(&rat(1)));

        let b1 = classify_neutral(&witt(witt_b1(&rat(1)))).unwrap();
        assert_eq!(b1.family, NormalFormFamily::NeuB1);
        assert_eq!(b1.parameter("nu"), Some(&rat(1)));

        let b2 = classify_neutral(&witt(witt_b2(&rat(1)))).unwrap();
        assert_eq!(b2.family, NormalFormFamily::NeuB2);
        assert_eq!(b2.parameter("lambda"), Some(&rat(1)));

        let b3 = classify_neutral(&witt(witt_b3(&rat(1), &rat(2)))).unwrap();
        assert_eq!(b3.family, NormalFormFamily::NeuB3);
        assert_eq!(b3.parameter("xi_sq"), Some(&rat(1)));
        assert_eq!(b3.parameter("nu_sq"), Some(&rat(4)));
    }

    #[test]
    fn nilpotent_boundary_of_witt_b1() {
        // At nu = 0 the irreducible type degenerates to a nilpotent of
        // index 2: image = kernel, totally isotropic, so no proper
        // nondegenerate invariant subspace exists and the operator stays
        // irreducible. The tag flags the boundary.
        let b = witt_b1(&rat(0));
        assert!(!b.is_zero());
        assert!(b.pow(2).is_zero());
        let tag = classify_neutral(&witt(b)).unwrap();
        assert_eq!(tag.family, NormalFormFamily::NeuB1);
        assert_eq!(tag.parameter("nu"), Some(&rat(0)));
        assert_eq!(tag.nilpotency_index, Some(2));
        assert!(tag.note.is_some());
    }

    #[test]
    fn poly_gcd_and_squarefree() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = poly(&[2, -3, 0, 1]);
        assert!(!poly_is_squarefree(&p));
        let g = poly_gcd(&p, &poly_derivative(&p));
        assert_eq!(g, poly(&[-1, 1])); // x - 1
        assert!(poly_is_squarefree(&poly(&[-1, 0, 1]))); // x^2 - 1
    }
}
