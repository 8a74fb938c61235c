//! Exact rational dense linear algebra: RREF, kernels, and symmetric LDL^T
//! factorization with an exact positive-semidefiniteness verdict.
//!
//! Everything here is dense and exact; the matrices in this crate's pipeline
//! top out around 120x70, so no sparsity or pivot-growth tricks are needed.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix dimensions {0}x{1} and {2}x{3} are incompatible")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("rows must all have length {expected}, found {found}")]
    RaggedRows { expected: usize, found: usize },
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(LinalgError::RaggedRows {
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && self.symmetry_defect().is_none()
    }

    fn symmetry_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> RationalMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::LengthMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &self[(i, k)] * x;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        }))
    }

    /// v^T M v for a square matrix.
    pub fn quadratic_form(&self, v: &[Rational]) -> Result<Rational, LinalgError> {
        let mv = self.mul_vec(v)?;
        Ok(dot(v, &mv))
    }

    /// First nonzero entry in row-major scan order.
    pub fn first_nonzero(&self) -> Option<((usize, usize), &Rational)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() {
                    return Some(((i, j), &self[(i, j)]));
                }
            }
        }
        None
    }

    /// Submatrix by explicit row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row echelon form, exact.
pub fn rref(m: &RationalMatrix) -> RrefResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                let tmp = a[(pr, j)].clone();
                a[(pr, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let factor = a[(i, c)].clone();
                for j in c..cols {
                    let v = &a[(i, j)] - &(&factor * &a[(r, j)]);
                    a[(i, j)] = v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    RrefResult {
        matrix: a,
        rank: r,
        pivot_cols,
    }
}

/// Basis of the right null space of a matrix. The vectors come from the
/// canonical RREF construction: one per free column, with a 1 in that
/// coordinate and 0 in every other free coordinate.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<Rational>>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

pub fn kernel(m: &RationalMatrix) -> KernelBasis {
    let RrefResult {
        matrix: r,
        rank: _,
        pivot_cols,
    } = rref(m);
    let cols = m.cols();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut vectors = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -r[(row, free)].clone();
        }
        vectors.push(v);
    }
    KernelBasis { vectors }
}

/// Pivoted symmetric factorization P M P^T = L diag(D) L^T with an exact PSD
/// verdict. Pivots pick the largest remaining diagonal entry. When the matrix
/// is not PSD the returned witness `v` satisfies v^T M v < 0 exactly and the
/// factorization covers the pivots completed before the failure.
#[derive(Debug, Clone)]
pub struct LdltResult {
    pub permutation: Vec<usize>,
    pub lower: RationalMatrix,
    pub diagonal: Vec<Rational>,
    pub psd: bool,
    pub witness: Option<Vec<Rational>>,
}

pub fn ldlt_psd(m: &RationalMatrix) -> Result<LdltResult, LinalgError> {
    ldlt_impl(m, true)
}

/// Same factorization and verdict but processed in the given index order
/// (permutation = identity). Used where the triangular shape of L in the
/// original ordering matters. Exact PSD inputs always complete.
pub fn ldlt_in_order(m: &RationalMatrix) -> Result<LdltResult, LinalgError> {
    ldlt_impl(m, false)
}

fn ldlt_impl(m: &RationalMatrix, pivot: bool) -> Result<LdltResult, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    if let Some((i, j)) = m.symmetry_defect() {
        return Err(LinalgError::NotSymmetric(i, j));
    }
    let n = m.rows();
    // perm[k] = original index processed at step k
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = m.clone(); // working Schur complement, indexed by original indices
    let mut lower = RationalMatrix::identity(n);
    let mut diagonal = vec![Rational::zero(); n];
    let mut first_negative: Option<usize> = None;

    for k in 0..n {
        if pivot {
            // symmetric pivot on the largest remaining diagonal entry,
            // earliest index on ties
            let mut best = k;
            for c in k + 1..n {
                if s[(perm[c], perm[c])] > s[(perm[best], perm[best])] {
                    best = c;
                }
            }
            perm.swap(k, best);
            // keep the already-built part of L consistent with the swap
            if best != k {
                for j in 0..k {
                    let tmp = lower[(k, j)].clone();
                    lower[(k, j)] = lower[(best, j)].clone();
                    lower[(best, j)] = tmp;
                }
            }
        }
        let pk = perm[k];
        let d = s[(pk, pk)].clone();

        if d.is_zero() {
            // exact PSD requires the whole residual row to vanish here
            if let Some(off) = (k + 1..n).find(|&j| !s[(pk, perm[j])].is_zero()) {
                let j = perm[off];
                let sv = s[(pk, j)].clone();
                let dj = s[(j, j)].clone();
                // w = lambda*e_k - sign(s)*e_off with 2*lambda*|s| > d_j
                let abs_s = sv.abs();
                let lambda = {
                    let needed = (&dj + Rational::one()) / (&abs_s + &abs_s);
                    if needed > Rational::one() {
                        needed
                    } else {
                        Rational::one()
                    }
                };
                let sign = if sv.is_negative() {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                let mut w = vec![Rational::zero(); n];
                w[k] = lambda;
                w[off] = -sign;
                let witness = pull_back_witness(&lower, &perm, &w);
                debug_assert!(m.quadratic_form(&witness).unwrap().is_negative());
                return Ok(LdltResult {
                    permutation: perm,
                    lower,
                    diagonal,
                    psd: false,
                    witness: Some(witness),
                });
            }
            diagonal[k] = d;
            continue;
        }

        if d.is_negative() && first_negative.is_none() {
            first_negative = Some(k);
        }
        diagonal[k] = d.clone();
        let inv = d.recip();
        // L column k and Schur update
        let col: Vec<Rational> = (k + 1..n).map(|j| &s[(perm[j], pk)] * &inv).collect();
        for (idx, j) in (k + 1..n).enumerate() {
            lower[(j, k)] = col[idx].clone();
        }
        for (ai, i) in (k + 1..n).enumerate() {
            let pi = perm[i];
            if col[ai].is_zero() {
                continue;
            }
            for (aj, j) in (k + 1..n).enumerate() {
                if j < i {
                    continue;
                }
                let pj = perm[j];
                let delta = &col[ai] * &(&col[aj] * &d);
                let v = &s[(pi, pj)] - &delta;
                s[(pi, pj)] = v.clone();
                if pi != pj {
                    s[(pj, pi)] = v;
                }
            }
        }
    }

    match first_negative {
        None => Ok(LdltResult {
            permutation: perm,
            lower,
            diagonal,
            psd: true,
            witness: None,
        }),
        Some(j) => {
            let mut w = vec![Rational::zero(); n];
            w[j] = Rational::one();
            let witness = pull_back_witness(&lower, &perm, &w);
            debug_assert!(m.quadratic_form(&witness).unwrap().is_negative());
            Ok(LdltResult {
                permutation: perm,
                lower,
                diagonal,
                psd: false,
                witness: Some(witness),
            })
        }
    }
}

/// Solves L^T z = w (unit upper-triangular back-substitution in permuted
/// coordinates) and scatters back through the permutation, so that
/// v^T M v = w^T diag(D ⊕ Schur) w for the original matrix M.
fn pull_back_witness(lower: &RationalMatrix, perm: &[usize], w: &[Rational]) -> Vec<Rational> {
    let n = w.len();
    let mut z = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = w[i].clone();
        for j in i + 1..n {
            if !z[j].is_zero() && !lower[(j, i)].is_zero() {
                acc -= &lower[(j, i)] * &z[j];
            }
        }
        z[i] = acc;
    }
    let mut v = vec![Rational::zero(); n];
    for (k, &pk) in perm.iter().enumerate() {
        v[pk] = z[k].clone();
    }
    v
}

/// Reconstructs P M P^T from a completed factorization (test helper).
pub fn ldlt_reconstruct(r: &LdltResult) -> RationalMatrix {
    let n = r.diagonal.len();
    RationalMatrix::from_fn(n, n, |i, j| {
        let mut acc = Rational::zero();
        for k in 0..n {
            if r.diagonal[k].is_zero() {
                continue;
            }
            let li = if i == k {
                Rational::one()
            } else if i > k {
                r.lower[(i, k)].clone()
            } else {
                Rational::zero()
            };
            let lj = if j == k {
                Rational::one()
            } else if j > k {
                r.lower[(j, k)].clone()
            } else {
                Rational::zero()
            };
            if !li.is_zero() && !lj.is_zero() {
                acc += li * &r.diagonal[k] * lj;
            }
        }
        acc
    })
}

/// True iff the row spaces of `u` and `v` coincide (by comparing canonical
/// RREFs with zero rows dropped).
pub fn same_span(u: &[Vec<Rational>], v: &[Vec<Rational>]) -> Result<bool, LinalgError> {
    let width = u.first().or_else(|| v.first()).map_or(0, Vec::len);
    for row in u.iter().chain(v) {
        if row.len() != width {
            return Err(LinalgError::LengthMismatch(width, row.len()));
        }
    }
    Ok(canonical_row_space(u, width) == canonical_row_space(v, width))
}

fn canonical_row_space(rows: &[Vec<Rational>], _width: usize) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = RationalMatrix::from_rows(rows.to_vec()).expect("checked rectangular");
    let r = rref(&m);
    (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect()
}
