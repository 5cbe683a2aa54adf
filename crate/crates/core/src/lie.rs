//! Structure-constant Lie algebras.
//!
//! An algebra is stored through its bracket table on a fixed basis, with
//! antisymmetry built into the storage (values are kept for pairs `i < j`
//! and extended by sign). Everything downstream of the bracket — Jacobi
//! verification, basis changes, derived and lower central series, nilpotent
//! ideals, bracket-pattern matching — is exact rational linear algebra.

use thiserror::Error;

use crate::linalg::{
    basis_vector, coords_in, vec_add, vec_is_zero, vec_neg, vec_scale, vec_zero, Matrix, Subspace,
    Vector,
};
use crate::metric::MetricSpace;
use crate::rational::Rational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("change-of-basis matrix is singular")]
    Singular,
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("subalgebra part is not closed under the bracket")]
    HNotClosed,
    #[error("[h, m] does not stay inside m")]
    NotReductive,
    #[error("metric is not ad-invariant on m: <[{0},{1}],{2}> + <[{0},{2}],{1}> != 0")]
    NotNaturallyReductive(usize, usize, usize),
    #[error("h and m indices must partition the basis")]
    BadPartition,
}

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Bracket values `[e_i, e_j]` for `i < j`, in lexicographic pair order.
    table: Vec<Vector>,
}

pub(crate) fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    // Pairs (0,1), (0,2), ..., (0,dim-1), (1,2), ...
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

/// Iterates the index pairs `i < j` below `dim` in lexicographic order, the
/// storage order used for brackets and tensor components.
pub fn pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
}

impl LieAlgebra {
    /// Builds an algebra from the nonzero brackets `[e_i, e_j] = value`
    /// with `i < j` (0-based). Omitted pairs are zero.
    pub fn from_brackets(labels: Vec<String>, brackets: &[((usize, usize), Vector)]) -> LieAlgebra {
        let dim = labels.len();
        let mut table = vec![vec_zero(dim); dim * (dim - 1) / 2];
        for ((i, j), v) in brackets {
            assert!(i < j && *j < dim, "bracket pair ({i}, {j}) out of range");
            assert_eq!(v.len(), dim, "bracket value length mismatch");
            table[pair_index(dim, *i, *j)] = v.clone();
        }
        LieAlgebra { dim, labels, table }
    }

    pub fn abelian(labels: Vec<String>) -> LieAlgebra {
        LieAlgebra::from_brackets(labels, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> LieAlgebra {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Bracket of two basis elements, with sign extension.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec_zero(self.dim),
            Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            Ordering::Greater => vec_neg(&self.table[pair_index(self.dim, j, i)]),
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let b = self.bracket_basis(i, j);
                out = vec_add(&out, &vec_scale(&(xi * yj), &b));
            }
        }
        out
    }

    /// The adjoint operator `ad(x) = [x, .]` as a matrix.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &basis_vector(self.dim, j)))
            .collect();
        Matrix::from_cols(self.dim, &cols)
    }

    /// Verifies the Jacobi identity on all basis triples; reports the first
    /// failing triple.
    pub fn jacobi_check(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = basis_vector(self.dim, i);
                    let ej = basis_vector(self.dim, j);
                    let ek = basis_vector(self.dim, k);
                    let s = vec_add(
                        &self.bracket(&ei, &self.bracket(&ej, &ek)),
                        &vec_add(
                            &self.bracket(&ej, &self.bracket(&ek, &ei)),
                            &self.bracket(&ek, &self.bracket(&ei, &ej)),
                        ),
                    );
                    if !vec_is_zero(&s) {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rewrites the algebra in the basis given by the columns of `p`
    /// (new basis vectors in old coordinates).
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        assert!(p.is_square() && p.rows() == self.dim);
        let p_inv = p.inverse().ok_or(LieError::Singular)?;
        let mut table = Vec::with_capacity(self.table.len());
        for (i, j) in pairs(self.dim) {
            let old = self.bracket(&p.col(i), &p.col(j));
            table.push(p_inv.mul_vec(&old));
        }
        Ok(LieAlgebra {
            dim: self.dim,
            labels: self.labels.clone(),
            table,
        })
    }

    /// Span of all brackets `[U, W]` between two subspaces.
    pub fn bracket_span(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vals = Vec::new();
        for x in u.basis_vectors() {
            for y in w.basis_vectors() {
                vals.push(self.bracket(&x, &y));
            }
        }
        Subspace::span(&vals, self.dim)
    }

    /// Dimensions of the derived series `g, [g,g], [[g,g],[g,g]], ...`
    /// until stable. Solvable iff the list ends in 0.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut dims = vec![self.dim];
        let mut current = Subspace::full(self.dim);
        loop {
            let next = self.bracket_span(&current, &current);
            if next.dim() == current.dim() {
                if next.dim() != *dims.last().unwrap() {
                    dims.push(next.dim());
                }
                break;
            }
            dims.push(next.dim());
            current = next;
        }
        dims
    }

    /// Dimensions of the lower central series `g, [g,g], [g,[g,g]], ...`
    /// until stable. Nilpotent iff the list ends in 0.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = Subspace::full(self.dim);
        let mut dims = vec![self.dim];
        let mut current = full.clone();
        loop {
            let next = self.bracket_span(&full, &current);
            if next.dim() == current.dim() {
                if next.dim() != *dims.last().unwrap() {
                    dims.push(next.dim());
                }
                break;
            }
            dims.push(next.dim());
            current = next;
        }
        dims
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Whether `candidate` is an ideal whose restriction is a nilpotent
    /// subalgebra. An ideal is automatically a subalgebra, so nilpotency is
    /// decided by iterating `[candidate, .]` inside the candidate.
    pub fn is_nilpotent_ideal(&self, candidate: &Subspace) -> bool {
        assert_eq!(candidate.ambient_dim(), self.dim);
        if candidate.is_zero() {
            return true;
        }
        let full = Subspace::full(self.dim);
        if !candidate.contains(&self.bracket_span(&full, candidate)) {
            return false;
        }
        let mut current = candidate.clone();
        loop {
            let next = self.bracket_span(candidate, &current);
            if next.is_zero() {
                return true;
            }
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
    }

    /// Whether the candidate-as-subalgebra is Abelian.
    pub fn is_abelian_on(&self, candidate: &Subspace) -> bool {
        self.bracket_span(candidate, candidate).is_zero()
    }

    /// Ideal closure: the smallest ideal containing the given subspace.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let full = Subspace::full(self.dim);
        let mut current = seed.clone();
        loop {
            let next = current.sum(&self.bracket_span(&full, &current));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// Bounded search for a nilpotent ideal of the given dimension.
    ///
    /// Candidates are the terms of the derived and lower central series and
    /// ideal closures of spans of small subsets of a distinguished set: the
    /// basis vectors and all basis brackets. This is not a general nilradical
    /// algorithm, but at dimension <= 6 it is exhaustive enough to certify
    /// the ideals the analysis needs.
    pub fn find_nilpotent_ideal(&self, dim: usize, require_nonabelian: bool) -> Option<Subspace> {
        let mut candidates: Vec<Subspace> = Vec::new();
        // Derived series terms.
        let full = Subspace::full(self.dim);
        let mut cur = full.clone();
        for _ in 0..self.dim {
            let next = self.bracket_span(&cur, &cur);
            if next.dim() == cur.dim() {
                break;
            }
            candidates.push(next.clone());
            cur = next;
        }
        // Lower central series terms.
        let mut cur = full.clone();
        for _ in 0..self.dim {
            let next = self.bracket_span(&full, &cur);
            if next.dim() == cur.dim() {
                break;
            }
            candidates.push(next.clone());
            cur = next;
        }
        // Ideal closures of single distinguished vectors and their sums with
        // the derived subalgebra.
        let mut distinguished: Vec<Vector> =
            (0..self.dim).map(|i| basis_vector(self.dim, i)).collect();
        for (i, j) in pairs(self.dim) {
            let b = self.bracket_basis(i, j);
            if !vec_is_zero(&b) {
                distinguished.push(b);
            }
        }
        let derived = self.bracket_span(&full, &full);
        for v in &distinguished {
            let seed = Subspace::span(std::slice::from_ref(v), self.dim);
            candidates.push(self.ideal_closure(&seed));
            candidates.push(self.ideal_closure(&seed.sum(&derived)));
        }
        candidates.retain(|c| c.dim() == dim);
        candidates.dedup();
        candidates
            .into_iter()
            .find(|c| self.is_nilpotent_ideal(c) && (!require_nonabelian || !self.is_abelian_on(c)))
    }

    /// True iff rewriting `g` through `map` yields exactly the pattern's
    /// structure constants.
    pub fn match_brackets(&self, pattern: &LieAlgebra, map: &Matrix) -> Result<bool, LieError> {
        assert_eq!(pattern.dim, self.dim, "pattern dimension mismatch");
        let changed = self.change_basis(map)?;
        Ok(changed.table == pattern.table)
    }

    /// All nonzero brackets as `((i, j), value)` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<((usize, usize), Vector)> {
        pairs(self.dim)
            .filter_map(|(i, j)| {
                let v = &self.table[pair_index(self.dim, i, j)];
                (!vec_is_zero(v)).then(|| ((i, j), v.clone()))
            })
            .collect()
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LieAlgebra(dim {}) {{", self.dim)?;
        for ((i, j), v) in self.nonzero_brackets() {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{} {}", c, self.labels[k]))
                .collect();
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                terms.join(" + ")
            )?;
        }
        write!(f, "}}")
    }
}

/// A reductive split `g = h (+) m` with a metric on `m`.
///
/// The `h` and `m` index lists partition the basis of the algebra; the
/// invariants `[h, h] in h` and `[h, m] in m` are checked on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductiveSplit {
    algebra: LieAlgebra,
    h_indices: Vec<usize>,
    m_indices: Vec<usize>,
    metric_on_m: MetricSpace,
}

impl ReductiveSplit {
    pub fn new(
        algebra: LieAlgebra,
        h_indices: Vec<usize>,
        m_indices: Vec<usize>,
        metric_on_m: MetricSpace,
    ) -> Result<ReductiveSplit, LieError> {
        let dim = algebra.dim();
        let mut seen = vec![false; dim];
        for &i in h_indices.iter().chain(&m_indices) {
            if i >= dim || seen[i] {
                return Err(LieError::BadPartition);
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) || metric_on_m.dim() != m_indices.len() {
            return Err(LieError::BadPartition);
        }
        let h_span = Subspace::span(
            &h_indices
                .iter()
                .map(|&i| basis_vector(dim, i))
                .collect::<Vec<_>>(),
            dim,
        );
        let m_span = Subspace::span(
            &m_indices
                .iter()
                .map(|&i| basis_vector(dim, i))
                .collect::<Vec<_>>(),
            dim,
        );
        if !h_span.contains(&algebra.bracket_span(&h_span, &h_span)) {
            return Err(LieError::HNotClosed);
        }
        if !m_span.contains(&algebra.bracket_span(&h_span, &m_span)) {
            return Err(LieError::NotReductive);
        }
        Ok(ReductiveSplit {
            algebra,
            h_indices,
            m_indices,
            metric_on_m,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn h_indices(&self) -> &[usize] {
        &self.h_indices
    }

    pub fn m_indices(&self) -> &[usize] {
        &self.m_indices
    }

    pub fn metric_on_m(&self) -> &MetricSpace {
        &self.metric_on_m
    }

    /// Bracket of two m-basis elements, split into (m-part, h-part)
    /// coordinates relative to the m- and h-index lists.
    pub fn bracket_m_split(&self, mi: usize, mj: usize) -> (Vector, Vector) {
        let dim = self.algebra.dim();
        let v = self
            .algebra
            .bracket_basis(self.m_indices[mi], self.m_indices[mj]);
        let m_part: Vector = self.m_indices.iter().map(|&k| v[k].clone()).collect();
        let h_part: Vector = self.h_indices.iter().map(|&k| v[k].clone()).collect();
        // The bracket must not leave h (+) m; with a full partition it cannot.
        debug_assert_eq!(m_part.len() + h_part.len(), dim);
        (m_part, h_part)
    }

    /// The action of the h-basis element `ha` on m, as a matrix in the
    /// m-basis. Fails with `NotReductive` escape hatch earlier, so indexing
    /// here is safe.
    pub fn h_action(&self, ha: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.m_indices.len())
            .map(|mj| {
                let v = self
                    .algebra
                    .bracket_basis(self.h_indices[ha], self.m_indices[mj]);
                self.m_indices.iter().map(|&k| v[k].clone()).collect()
            })
            .collect();
        Matrix::from_cols(self.m_indices.len(), &cols)
    }

    /// Checks the ad-invariance of the metric on m:
    /// `<[x,y]_m, z> + <[x,z]_m, y> = 0` over all basis triples.
    pub fn check_naturally_reductive(&self) -> Result<(), LieError> {
        let n = self.m_indices.len();
        let g = &self.metric_on_m;
        let m_part = |i: usize, j: usize| -> Vector {
            let v = self
                .algebra
                .bracket_basis(self.m_indices[i], self.m_indices[j]);
            self.m_indices.iter().map(|&k| v[k].clone()).collect()
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = g.inner(&m_part(x, y), &basis_vector(n, z));
                    let b = g.inner(&m_part(x, z), &basis_vector(n, y));
                    if !(&a + &b).is_zero() {
                        return Err(LieError::NotNaturallyReductive(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Expresses a vector in the span of `basis_vectors`, if possible.
pub fn in_span_coords(basis_vectors: &[Vector], ambient: usize, v: &[Rational]) -> Option<Vector> {
    if basis_vectors.is_empty() {
        return vec_is_zero(v).then(Vec::new);
    }
    coords_in(&Matrix::from_cols(ambient, basis_vectors), v)
}
