//! Monomial bases of the homogeneous slices H_{n,d}, Gram-matrix evaluation,
//! and the dual obstruction machinery: the linear space of moment matrices
//! annihilating every product p_i * q with q ranging over degree-d monomials.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{kernel, RationalMatrix};
use crate::poly::{
    require_same_context, Context, Homogeneity, Integer, Monomial, MonomialOrder, PolyError,
    Polynomial, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GramError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("matrix is {0}x{1} but the basis has length {2}")]
    DimensionMismatch(usize, usize, usize),
    #[error("matrix must be symmetric")]
    NotSymmetric,
    #[error("functional degree {functional} does not match 2 * basis degree {basis}")]
    DegreeMismatch { functional: u32, basis: u32 },
    #[error("expected a homogeneous polynomial of degree {expected}, found {found:?}")]
    NotHomogeneous { expected: u32, found: Homogeneity },
    #[error("value vector has length {found}, basis needs {expected}")]
    BadValueLength { expected: usize, found: usize },
}

/// The ordered monomials of one homogeneous degree, strictly decreasing in a
/// chosen order. Carries an index for O(log) position lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    ctx: Context,
    degree: u32,
    order: MonomialOrder,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialBasis {
    /// All C(n+d-1, d) monomials of degree `d`, sorted strictly decreasing.
    pub fn new(ctx: &Context, degree: u32, order: MonomialOrder) -> Self {
        let mut monomials = Vec::new();
        let n = ctx.num_vars();
        let mut exps = vec![0u32; n];
        enumerate_compositions(&mut exps, 0, degree, &mut monomials);
        monomials.sort_by(|a, b| order.compare(b, a));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            ctx: ctx.clone(),
            degree,
            order,
            monomials,
            index,
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Names of the basis monomials in order (for reports and JSON export).
    pub fn monomial_strings(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|m| {
                let p = Polynomial::from_terms(&self.ctx, [(m.clone(), Rational::one())])
                    .expect("consistent arity");
                crate::parse::print_polynomial(&p, self.order)
            })
            .collect()
    }

    /// Coefficient vector of `p` over this basis. Every term of `p` must be a
    /// degree-`degree` monomial of the context.
    pub fn coefficient_vector(&self, p: &Polynomial) -> Result<Vec<Rational>, GramError> {
        require_same_context(&self.ctx, p.context())?;
        match p.homogeneity() {
            Homogeneity::Zero => {}
            Homogeneity::Homogeneous(d) if d == self.degree => {}
            other => {
                return Err(GramError::NotHomogeneous {
                    expected: self.degree,
                    found: other,
                })
            }
        }
        let mut v = vec![Rational::zero(); self.len()];
        for (m, c) in p.terms() {
            let i = self.position(m).expect("degree checked");
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Permutation of basis positions that groups monomials by ascending
    /// degree in the last variable, lexicographically decreasing within each
    /// group. Under this layout, matrices for instances built from products
    /// with the last variable show their block structure contiguously.
    pub fn block_layout(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| {
            let ma = self.monomials[a].exponents();
            let mb = self.monomials[b].exponents();
            let la = ma.last().copied().unwrap_or(0);
            let lb = mb.last().copied().unwrap_or(0);
            la.cmp(&lb).then_with(|| mb.cmp(ma))
        });
        idx
    }
}

fn enumerate_compositions(
    exps: &mut Vec<u32>,
    pos: usize,
    remaining: u32,
    out: &mut Vec<Monomial>,
) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        enumerate_compositions(exps, pos + 1, remaining - e, out);
        exps[pos] = 0;
    }
}

/// A linear functional on the degree-2d slice, stored as one rational value
/// per degree-2d basis monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    basis: MonomialBasis,
    values: Vec<Rational>,
}

impl LinearFunctional {
    pub fn new(basis: MonomialBasis, values: Vec<Rational>) -> Result<Self, GramError> {
        if values.len() != basis.len() {
            return Err(GramError::BadValueLength {
                expected: basis.len(),
                found: values.len(),
            });
        }
        Ok(LinearFunctional { basis, values })
    }

    pub fn zero(basis: MonomialBasis) -> Self {
        let values = vec![Rational::zero(); basis.len()];
        LinearFunctional { basis, values }
    }

    /// Indicator functional of a single basis monomial.
    pub fn indicator(basis: MonomialBasis, m: &Monomial) -> Option<Self> {
        let i = basis.position(m)?;
        let mut values = vec![Rational::zero(); basis.len()];
        values[i] = Rational::one();
        Some(LinearFunctional { basis, values })
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_on(&self, m: &Monomial) -> Option<&Rational> {
        self.basis.position(m).map(|i| &self.values[i])
    }
}

/// Matrix of the bilinear form (p, q) -> ell(p*q) over a degree-d basis.
/// Entry (a, b) depends only on the product monomial m_a * m_b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentMatrix {
    basis: MonomialBasis,
    matrix: RationalMatrix,
}

impl MomentMatrix {
    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Rescales so the first nonzero entry (row-major) is 1; canonical form
    /// for space bases. No-op on the zero matrix.
    pub fn normalized(&self) -> MomentMatrix {
        match self.matrix.first_nonzero() {
            None => self.clone(),
            Some((_, v)) => MomentMatrix {
                basis: self.basis.clone(),
                matrix: self.matrix.scale(&v.recip()),
            },
        }
    }

    /// Integer form with content 1: multiplies by the lcm of entry
    /// denominators, divides by the gcd of the resulting numerators.
    pub fn primitive_integer_form(&self) -> RationalMatrix {
        primitive_integer_form(&self.matrix)
    }

    pub fn export(&self) -> MomentMatrixExport {
        MomentMatrixExport {
            basis: self.basis.monomial_strings(),
            entries: (0..self.matrix.rows())
                .map(|i| self.matrix.row(i).iter().map(|r| r.to_string()).collect())
                .collect(),
        }
    }
}

/// Scales a rational matrix to its primitive integer multiple (zero matrix
/// stays zero).
pub fn primitive_integer_form(m: &RationalMatrix) -> RationalMatrix {
    let mut den_lcm = Integer::one();
    for i in 0..m.rows() {
        for v in m.row(i) {
            if !v.is_zero() {
                den_lcm = den_lcm.lcm(v.denom());
            }
        }
    }
    let scaled = m.scale(&Rational::from_integer(den_lcm));
    let mut content = Integer::zero();
    for i in 0..scaled.rows() {
        for v in scaled.row(i) {
            if !v.is_zero() {
                content = content.gcd(&v.numer().abs());
            }
        }
    }
    if content.is_zero() || content.is_one() {
        return scaled;
    }
    scaled.scale(&Rational::new(Integer::one(), content))
}

/// JSON form of a moment matrix: basis monomials plus row-major exact
/// rational entries as `a/b` strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MomentMatrixExport {
    pub basis: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

/// A finite-dimensional space of moment matrices with an explicit,
/// canonically normalized basis.
#[derive(Debug, Clone)]
pub struct MatrixSpace {
    basis_matrices: Vec<MomentMatrix>,
}

impl MatrixSpace {
    pub fn dimension(&self) -> usize {
        self.basis_matrices.len()
    }

    pub fn basis_matrices(&self) -> &[MomentMatrix] {
        &self.basis_matrices
    }

    /// Member with the given coordinates over the basis.
    pub fn element(&self, coords: &[Rational]) -> Option<MomentMatrix> {
        if coords.len() != self.dimension() {
            return None;
        }
        let first = self.basis_matrices.first()?;
        let mut acc = RationalMatrix::zero(first.matrix.rows(), first.matrix.cols());
        for (c, b) in coords.iter().zip(&self.basis_matrices) {
            if !c.is_zero() {
                acc = acc.add(&b.matrix.scale(c)).expect("same shape");
            }
        }
        Some(MomentMatrix {
            basis: first.basis.clone(),
            matrix: acc,
        })
    }

    pub fn export(&self) -> MatrixSpaceExport {
        MatrixSpaceExport {
            dimension: self.dimension(),
            basis_matrices: self
                .basis_matrices
                .iter()
                .map(MomentMatrix::export)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixSpaceExport {
    pub dimension: usize,
    pub basis_matrices: Vec<MomentMatrixExport>,
}

/// All monomials of degree `d`, sorted strictly decreasing under `order`.
pub fn monomial_basis(ctx: &Context, d: u32, order: MonomialOrder) -> MonomialBasis {
    MonomialBasis::new(ctx, d, order)
}

/// The polynomial m^T A m for a symmetric matrix over the basis vector m.
pub fn gram_evaluate(a: &RationalMatrix, basis: &MonomialBasis) -> Result<Polynomial, GramError> {
    let n = basis.len();
    if a.rows() != n || a.cols() != n {
        return Err(GramError::DimensionMismatch(a.rows(), a.cols(), n));
    }
    if !a.is_symmetric() {
        return Err(GramError::NotSymmetric);
    }
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = &a[(i, j)];
            if !c.is_zero() {
                terms.push((basis.monomial(i).mul(basis.monomial(j)), c.clone()));
            }
        }
    }
    Ok(Polynomial::from_terms(basis.context(), terms)?)
}

/// Moment matrix of `ell` over a degree-d basis: entry (a,b) is the value of
/// `ell` on m_a * m_b.
pub fn functional_to_moment(
    ell: &LinearFunctional,
    basis: &MonomialBasis,
) -> Result<MomentMatrix, GramError> {
    require_same_context(basis.context(), ell.basis().context())?;
    if ell.basis().degree() != 2 * basis.degree() {
        return Err(GramError::DegreeMismatch {
            functional: ell.basis().degree(),
            basis: basis.degree(),
        });
    }
    let n = basis.len();
    let matrix = RationalMatrix::from_fn(n, n, |a, b| {
        let prod = basis.monomial(a).mul(basis.monomial(b));
        ell.value_on(&prod)
            .expect("product stays in degree 2d")
            .clone()
    });
    Ok(MomentMatrix {
        basis: basis.clone(),
        matrix,
    })
}

/// Constraint matrix of the system ell(p_i * m_j) = 0: one row per (i, j)
/// pair, one column per degree-2d basis monomial.
pub fn dual_constraint_matrix(
    polys: &[Polynomial],
    basis_d: &MonomialBasis,
    basis_2d: &MonomialBasis,
) -> Result<RationalMatrix, GramError> {
    let mut rows = Vec::with_capacity(polys.len() * basis_d.len());
    for p in polys {
        require_same_context(basis_d.context(), p.context())?;
        match p.homogeneity() {
            Homogeneity::Homogeneous(d) if d == basis_d.degree() => {}
            other => {
                return Err(GramError::NotHomogeneous {
                    expected: basis_d.degree(),
                    found: other,
                })
            }
        }
        for mj in basis_d.monomials() {
            let prod = p.mul_term(mj, &Rational::one());
            rows.push(basis_2d.coefficient_vector(&prod)?);
        }
    }
    Ok(RationalMatrix::from_rows(rows).expect("rows share basis length"))
}

/// Solves ell(p_i * m_j) = 0 over the degree-2d coefficients of ell and
/// returns the space of corresponding moment matrices. Basis matrices are
/// normalized so the first nonzero entry (row-major) is 1 and are ordered by
/// the kernel's free-column positions, making the output canonical.
pub fn dual_obstruction_space(
    polys: &[Polynomial],
    ctx: &Context,
    d: u32,
    order: MonomialOrder,
) -> Result<MatrixSpace, GramError> {
    let basis_d = MonomialBasis::new(ctx, d, order);
    let basis_2d = MonomialBasis::new(ctx, 2 * d, order);
    let constraints = dual_constraint_matrix(polys, &basis_d, &basis_2d)?;
    let kern = kernel(&constraints);
    let mut basis_matrices = Vec::with_capacity(kern.dimension());
    for v in kern.vectors {
        let ell = LinearFunctional::new(basis_2d.clone(), v).expect("kernel width");
        basis_matrices.push(functional_to_moment(&ell, &basis_d)?.normalized());
    }
    Ok(MatrixSpace { basis_matrices })
}

/// Searches the space for a PSD member: the all-ones coordinate vector first,
/// then coordinate patterns over {1, -1, 0} up to `budget` candidates.
/// Returns the matrix and the coordinates that produced it.
pub fn pick_psd_element(
    space: &MatrixSpace,
    budget: usize,
) -> Option<(MomentMatrix, Vec<Rational>)> {
    let dim = space.dimension();
    if dim == 0 {
        return None;
    }
    let ones = vec![Rational::one(); dim];
    let mut tried = 0usize;
    for coords in std::iter::once(ones.clone()).chain(SignPatterns::new(dim)) {
        if tried >= budget {
            break;
        }
        tried += 1;
        if coords.iter().all(Rational::is_zero) || (tried > 1 && coords == ones) {
            continue;
        }
        let candidate = space.element(&coords).expect("dimension checked");
        if candidate.matrix.first_nonzero().is_none() {
            continue;
        }
        if let Ok(res) = crate::linalg::ldlt_psd(&candidate.matrix) {
            if res.psd {
                return Some((candidate, coords));
            }
        }
    }
    None
}

/// Deterministic enumeration of {1, -1, 0}^dim coordinate patterns.
struct SignPatterns {
    dim: usize,
    next: usize,
    limit: usize,
}

impl SignPatterns {
    fn new(dim: usize) -> Self {
        let limit = 3usize.checked_pow(dim.min(12) as u32).unwrap_or(usize::MAX);
        SignPatterns {
            dim,
            next: 0,
            limit,
        }
    }
}

impl Iterator for SignPatterns {
    type Item = Vec<Rational>;
    fn next(&mut self) -> Option<Vec<Rational>> {
        if self.next >= self.limit {
            return None;
        }
        let mut k = self.next;
        self.next += 1;
        let mut coords = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            let digit = k % 3;
            k /= 3;
            coords.push(match digit {
                0 => Rational::one(),
                1 => -Rational::one(),
                _ => Rational::zero(),
            });
        }
        Some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::{rat_int, RingContext};

    fn p(ctx: &Context, s: &str) -> Polynomial {
        parse_polynomial(s, ctx).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let c5 = RingContext::new(5);
        assert_eq!(
            MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex).len(),
            15
        );
        assert_eq!(
            MonomialBasis::new(&c5, 4, MonomialOrder::DegRevLex).len(),
            70
        );
        let c1 = RingContext::new(1);
        let b = MonomialBasis::new(&c1, 3, MonomialOrder::DegRevLex);
        assert_eq!(b.len(), 1);
        assert_eq!(b.monomial(0), &Monomial::new(vec![3]));
    }

    #[test]
    fn basis_strictly_decreasing() {
        let c5 = RingContext::new(5);
        let b = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        for w in b.monomials().windows(2) {
            assert_eq!(
                MonomialOrder::DegRevLex.compare(&w[0], &w[1]),
                std::cmp::Ordering::Greater
            );
        }
    }

    #[test]
    fn degrevlex_quadratic_basis_order() {
        let c5 = RingContext::new(5);
        let b = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let names = b.monomial_strings();
        assert_eq!(
            names,
            vec![
                "x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2", "x1*x4", "x2*x4", "x3*x4",
                "x4^2", "x1*x5", "x2*x5", "x3*x5", "x4*x5", "x5^2"
            ]
        );
    }

    #[test]
    fn block_layout_groups_by_last_variable() {
        let c5 = RingContext::new(5);
        let b = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let layout = b.block_layout();
        let names: Vec<String> = layout
            .iter()
            .map(|&i| b.monomial_strings()[i].clone())
            .collect();
        assert_eq!(
            names,
            vec![
                "x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4",
                "x4^2", "x1*x5", "x2*x5", "x3*x5", "x4*x5", "x5^2"
            ]
        );
    }

    #[test]
    fn gram_identity_gives_sum_of_squared_monomials() {
        let c5 = RingContext::new(5);
        let b = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let f = gram_evaluate(&RationalMatrix::identity(15), &b).unwrap();
        let expected: Polynomial = b.monomials().iter().fold(Polynomial::zero(&c5), |acc, m| {
            let sq = Polynomial::from_terms(&c5, [(m.mul(m), rat_int(1))]).unwrap();
            &acc + &sq
        });
        assert_eq!(f, expected);
    }

    #[test]
    fn gram_rank_one_outer_product() {
        let c5 = RingContext::new(5);
        let b = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let p1 = p(&c5, "x1^2 - x4^2");
        let v = b.coefficient_vector(&p1).unwrap();
        let a = RationalMatrix::from_fn(15, 15, |i, j| &v[i] * &v[j]);
        assert_eq!(gram_evaluate(&a, &b).unwrap(), &p1 * &p1);
    }

    #[test]
    fn gram_of_summed_outer_products_recovers_the_sum_of_squares() {
        let file = crate::parse::parse_instance(crate::instances::FIVE_VAR_EIGHT_SQUARES).unwrap();
        let ctx = file.context.clone();
        let gens: Vec<Polynomial> = file.generators.into_iter().map(|(_, p)| p).collect();
        let b = MonomialBasis::new(&ctx, 2, MonomialOrder::DegRevLex);
        let vs: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| b.coefficient_vector(g).unwrap())
            .collect();
        let gram = RationalMatrix::from_fn(15, 15, |i, j| {
            vs.iter()
                .map(|v| &v[i] * &v[j])
                .fold(Rational::zero(), |acc, x| acc + x)
        });
        assert_eq!(
            gram_evaluate(&gram, &b).unwrap(),
            crate::poly::expand_sos_in(&ctx, &gens).unwrap()
        );
    }

    #[test]
    fn functional_indicator_moments() {
        let c5 = RingContext::new(5);
        let b2 = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let b4 = MonomialBasis::new(&c5, 4, MonomialOrder::DegRevLex);

        let x1_4 = Monomial::new(vec![4, 0, 0, 0, 0]);
        let ell = LinearFunctional::indicator(b4.clone(), &x1_4).unwrap();
        let q = functional_to_moment(&ell, &b2).unwrap();
        let i_x1sq = b2.position(&Monomial::new(vec![2, 0, 0, 0, 0])).unwrap();
        for a in 0..15 {
            for bb in 0..15 {
                let want = if a == i_x1sq && bb == i_x1sq { 1 } else { 0 };
                assert_eq!(q.matrix()[(a, bb)], rat_int(want));
            }
        }

        let x1c_x2 = Monomial::new(vec![3, 1, 0, 0, 0]);
        let ell = LinearFunctional::indicator(b4.clone(), &x1c_x2).unwrap();
        let q = functional_to_moment(&ell, &b2).unwrap();
        let i_x1x2 = b2.position(&Monomial::new(vec![1, 1, 0, 0, 0])).unwrap();
        let mut nonzero = Vec::new();
        for a in 0..15 {
            for bb in 0..15 {
                if !q.matrix()[(a, bb)].is_zero() {
                    nonzero.push((a, bb));
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![
                (i_x1sq.min(i_x1x2), i_x1sq.max(i_x1x2)),
                (i_x1sq.max(i_x1x2), i_x1sq.min(i_x1x2))
            ]
        );

        let zero = LinearFunctional::zero(b4);
        let q = functional_to_moment(&zero, &b2).unwrap();
        assert!(q.matrix().first_nonzero().is_none());
    }

    #[test]
    fn functional_degree_mismatch() {
        let c5 = RingContext::new(5);
        let b2 = MonomialBasis::new(&c5, 2, MonomialOrder::DegRevLex);
        let b3 = MonomialBasis::new(&c5, 3, MonomialOrder::DegRevLex);
        let ell = LinearFunctional::zero(b3);
        assert!(matches!(
            functional_to_moment(&ell, &b2),
            Err(GramError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn dual_space_single_variable_constraint() {
        // two variables, degree 1, constrained by x1: matrices diag(0, t)
        let c2 = RingContext::new(2);
        let space =
            dual_obstruction_space(&[p(&c2, "x1")], &c2, 1, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(space.dimension(), 1);
        let b = &space.basis_matrices()[0];
        assert_eq!(b.matrix()[(0, 0)], rat_int(0));
        assert_eq!(b.matrix()[(0, 1)], rat_int(0));
        assert_eq!(b.matrix()[(1, 0)], rat_int(0));
        assert_eq!(b.matrix()[(1, 1)], rat_int(1));
    }

    #[test]
    fn dual_space_fully_constrained_is_zero() {
        let c2 = RingContext::new(2);
        let space = dual_obstruction_space(
            &[p(&c2, "x1"), p(&c2, "x2")],
            &c2,
            1,
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(space.dimension(), 0);
    }

    #[test]
    fn dual_space_rejects_inhomogeneous() {
        let c2 = RingContext::new(2);
        assert!(
            dual_obstruction_space(&[p(&c2, "x1 + 1")], &c2, 1, MonomialOrder::DegRevLex).is_err()
        );
    }

    #[test]
    fn pick_psd_identity_line() {
        let c2 = RingContext::new(2);
        let space =
            dual_obstruction_space(&[p(&c2, "x1")], &c2, 1, MonomialOrder::DegRevLex).unwrap();
        // space is {diag(0, t)}: the all-ones element diag(0, 1) is PSD
        let (q, coords) = pick_psd_element(&space, 100).unwrap();
        assert_eq!(coords, vec![rat_int(1)]);
        assert_eq!(q.matrix()[(1, 1)], rat_int(1));
    }

    #[test]
    fn pick_psd_absent_for_hyperbolic_line() {
        // span of [[0,1],[1,0]] contains no nonzero PSD matrix
        let c2 = RingContext::new(2);
        let b2 = MonomialBasis::new(&c2, 1, MonomialOrder::DegRevLex);
        let mut m = RationalMatrix::zero(2, 2);
        m[(0, 1)] = rat_int(1);
        m[(1, 0)] = rat_int(1);
        let space = MatrixSpace {
            basis_matrices: vec![MomentMatrix {
                basis: b2,
                matrix: m,
            }],
        };
        assert!(pick_psd_element(&space, 100).is_none());
    }

    #[test]
    fn pick_psd_identity_trivial() {
        let c2 = RingContext::new(2);
        let b2 = MonomialBasis::new(&c2, 1, MonomialOrder::DegRevLex);
        let space = MatrixSpace {
            basis_matrices: vec![MomentMatrix {
                basis: b2,
                matrix: RationalMatrix::identity(2),
            }],
        };
        let (q, _) = pick_psd_element(&space, 100).unwrap();
        assert_eq!(q.matrix(), &RationalMatrix::identity(2));
    }

    #[test]
    fn primitive_form_clears_denominators() {
        let mut m = RationalMatrix::zero(2, 2);
        m[(0, 0)] = Rational::new(1.into(), 6.into());
        m[(0, 1)] = Rational::new((-1).into(), 6.into());
        m[(1, 0)] = Rational::new((-1).into(), 6.into());
        m[(1, 1)] = rat_int(1);
        let pmat = primitive_integer_form(&m);
        assert_eq!(pmat[(0, 0)], rat_int(1));
        assert_eq!(pmat[(0, 1)], rat_int(-1));
        assert_eq!(pmat[(1, 1)], rat_int(6));
    }
}
