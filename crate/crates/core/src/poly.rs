//! Sparse multivariate polynomials over the rationals with graded monomial orderings.
//!
//! Every coefficient is an arbitrary-precision rational; there is no floating
//! point anywhere in this crate. Polynomials are immutable after construction
//! and all operations are pure functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational coefficient type. Always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer, used for numerators/denominators and scaling.
pub type Integer = num_bigint::BigInt;

/// Shared handle to a ring context. Cheap to clone; polynomials compare
/// contexts by pointer first, then by value.
pub type Context = Arc<RingContext>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ring context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("exponent vector has arity {found}, context expects {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable names must be nonempty and pairwise distinct")]
    BadVariableNames,
    #[error("empty polynomial list carries no ring; use expand_sos_in")]
    EmptyList,
}

/// The ambient polynomial ring: a count of variables and their names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
}

impl RingContext {
    /// Ring in `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Context {
        assert!(n >= 1, "ring needs at least one variable");
        Arc::new(RingContext {
            vars: (1..=n).map(|i| format!("x{i}")).collect(),
        })
    }

    /// Ring with explicit variable names (must be pairwise distinct).
    pub fn with_names<S: Into<String>>(names: Vec<S>) -> Result<Context, PolyError> {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        if vars.is_empty() || vars.iter().any(String::is_empty) {
            return Err(PolyError::BadVariableNames);
        }
        for (i, a) in vars.iter().enumerate() {
            if vars[i + 1..].contains(a) {
                return Err(PolyError::BadVariableNames);
            }
        }
        Ok(Arc::new(RingContext { vars }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn describe(&self) -> String {
        format!("Q[{}]", self.vars.join(","))
    }
}

pub(crate) fn same_context(a: &Context, b: &Context) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn require_same_context(a: &Context, b: &Context) -> Result<(), PolyError> {
    if same_context(a, b) {
        Ok(())
    } else {
        Err(PolyError::ContextMismatch {
            left: a.describe(),
            right: b.describe(),
        })
    }
}

/// A power product, stored as one exponent per context variable.
///
/// The derived `Ord` (plain lexicographic on the exponent vector) is only a
/// storage order for term maps; ranking for printing and division goes
/// through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The monomial `x_i` (0-based index) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total orderings on monomials of a fixed arity. The graded orders compare
/// total degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: degree first, ties broken so that the
    /// monomial whose exponent difference ends in a negative entry is larger.
    DegRevLex,
    /// Graded lexicographic.
    DegLex,
    /// Plain lexicographic.
    Lex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_name(name: &str) -> Option<MonomialOrder> {
        match name {
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    /// Compares `a` and `b`. Panics if the arities differ; use
    /// [`compare_monomials`] for the checked form.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.arity(), b.arity(), "monomial arity mismatch");
        match self {
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(&a.exps, &b.exps)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        // larger monomial has the smaller trailing exponent
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Sort key with the property `a < b` iff `key(a) < key(b)`
    /// lexicographically. Used where comparisons must go through `Ord`
    /// containers (pair queues in Buchberger).
    pub(crate) fn sort_key(self, m: &Monomial) -> Vec<i64> {
        let exps = m.exponents();
        match self {
            MonomialOrder::Lex => exps.iter().map(|&e| e as i64).collect(),
            MonomialOrder::DegLex => {
                let mut k = Vec::with_capacity(exps.len() + 1);
                k.push(m.degree() as i64);
                k.extend(exps.iter().map(|&e| e as i64));
                k
            }
            MonomialOrder::DegRevLex => {
                let mut k = Vec::with_capacity(exps.len() + 1);
                k.push(m.degree() as i64);
                k.extend(exps.iter().rev().map(|&e| -(e as i64)));
                k
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// Checked comparison of two monomials under `order`.
pub fn compare_monomials(
    a: &Monomial,
    b: &Monomial,
    order: MonomialOrder,
) -> Result<Ordering, PolyError> {
    if a.arity() != b.arity() {
        return Err(PolyError::ArityMismatch {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    Ok(order.compare(a, b))
}

/// Homogeneity classification of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// Sparse polynomial: a map from monomials to nonzero rational coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Context) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Context, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(ctx.num_vars()), value);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn one(ctx: &Context) -> Self {
        Self::constant(ctx, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn variable(ctx: &Context, i: usize) -> Self {
        assert!(i < ctx.num_vars());
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ctx.num_vars(), i), Rational::one());
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// zero coefficients.
    pub fn from_terms<I>(ctx: &Context, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let n = ctx.num_vars();
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.arity() != n {
                return Err(PolyError::ArityMismatch {
                    expected: n,
                    found: m.arity(),
                });
            }
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: map,
        })
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in the storage order (deterministic, not the graded
    /// order; see [`sorted_terms`](Self::sorted_terms)).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted strictly decreasing under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.compare(b, a));
        v
    }

    /// Coefficient of `m` (zero when the monomial is absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under `order`; `None` for the zero polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    /// Total degree (max over terms); `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        require_same_context(&self.ctx, &other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        require_same_context(&self.ctx, &other.ctx)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        assert_eq!(m.arity(), self.ctx.num_vars());
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same context");
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ctx.num_vars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (e, v) in m.exponents().iter().zip(point) {
                for _ in 0..*e {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Reinterprets this polynomial in `target`, matching variables by name.
    /// Fails when a used variable is missing from the target context.
    pub fn embed(&self, target: &Context) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ctx
            .var_names()
            .iter()
            .map(|name| target.var_index(name))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.num_vars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(PolyError::ContextMismatch {
                                left: self.ctx.describe(),
                                right: target.describe(),
                            })
                        }
                    }
                }
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Polynomial::from_terms(target, terms)
    }
}

/// Sum of coefficient-wise products; the checked form of `a + b`.
pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    a.checked_add(b)
}

/// Distributive product with exact coefficients; the checked form of `a * b`.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    a.checked_mul(b)
}

/// Σ polys\[i\]² with the ring taken from the first entry; see
/// [`expand_sos_in`] for the form that handles the empty list (whose sum is
/// the zero polynomial of an explicit ring).
pub fn expand_sos(polys: &[Polynomial]) -> Result<Polynomial, PolyError> {
    let first = polys.first().ok_or(PolyError::EmptyList)?;
    expand_sos_in(first.context(), polys)
}

/// Σ polys\[i\]² in an explicit context (handles the empty list).
pub fn expand_sos_in(ctx: &Context, polys: &[Polynomial]) -> Result<Polynomial, PolyError> {
    let mut acc = Polynomial::zero(ctx);
    for p in polys {
        require_same_context(ctx, p.context())?;
        acc = acc.checked_add(&p.checked_mul(p)?)?;
    }
    Ok(acc)
}

/// Common degree of all terms, `None` when terms mix degrees. The zero
/// polynomial reports [`Homogeneity::Zero`] through [`Polynomial::homogeneity`];
/// here it maps to `None` as there is no single witness degree.
pub fn is_homogeneous(p: &Polynomial) -> Option<u32> {
    p.homogeneity().degree()
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::print_polynomial(
            self,
            MonomialOrder::DegRevLex,
        ))
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Convenience constructor for integers as rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ctx4() -> Context {
        RingContext::new(4)
    }

    fn p(ctx: &Context, s: &str) -> Polynomial {
        parse_polynomial(s, ctx).unwrap()
    }

    #[test]
    fn add_cancels_inverse() {
        let ctx = ctx4();
        let a = p(&ctx, "x1^2 - x4^2");
        let b = p(&ctx, "x4^2 - x1^2");
        assert!(poly_add(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn add_identity() {
        let ctx = ctx4();
        let a = p(&ctx, "x1^2 - x4^2");
        assert_eq!(poly_add(&a, &Polynomial::zero(&ctx)).unwrap(), a);
    }

    #[test]
    fn add_first_two_generators() {
        // hand addition: (x1^2 - x4^2) + (x2^2 - x4^2)
        let ctx = ctx4();
        let a = p(&ctx, "x1^2 - x4^2");
        let b = p(&ctx, "x2^2 - x4^2");
        assert_eq!(poly_add(&a, &b).unwrap(), p(&ctx, "x1^2 + x2^2 - 2*x4^2"));
    }

    #[test]
    fn mul_square_monomial() {
        let ctx = RingContext::new(5);
        let a = p(&ctx, "x1*x5");
        assert_eq!(poly_mul(&a, &a).unwrap(), p(&ctx, "x1^2*x5^2"));
    }

    #[test]
    fn mul_binomial_square() {
        let ctx = ctx4();
        let a = p(&ctx, "x1^2 - x4^2");
        assert_eq!(
            poly_mul(&a, &a).unwrap(),
            p(&ctx, "x1^4 - 2*x1^2*x4^2 + x4^4")
        );
    }

    #[test]
    fn square_of_dense_quadratic() {
        // brute-force expansion cross-checked by evaluation at random points
        let ctx = ctx4();
        let q = p(
            &ctx,
            "-x1^2 - x1*x2 - x1*x3 + x1*x4 - x2*x3 + x2*x4 + x3*x4",
        );
        let sq = poly_mul(&q, &q).unwrap();
        let m_x1_4 = Monomial::new(vec![4, 0, 0, 0]);
        let m_x1c_x2 = Monomial::new(vec![3, 1, 0, 0]);
        assert_eq!(sq.coefficient(&m_x1_4), rat_int(1));
        assert_eq!(sq.coefficient(&m_x1c_x2), rat_int(2));
        // evaluation homomorphism oracle
        let pt: Vec<Rational> = vec![rat(3, 2), rat(-1, 3), rat(2, 5), rat(7, 4)];
        assert_eq!(sq.evaluate(&pt), q.evaluate(&pt) * q.evaluate(&pt));
    }

    #[test]
    fn expand_sos_empty_and_single() {
        let ctx = RingContext::new(5);
        assert!(expand_sos_in(&ctx, &[]).unwrap().is_zero());
        assert_eq!(expand_sos(&[]), Err(PolyError::EmptyList));
        let a = p(&ctx, "x1*x5");
        assert_eq!(
            expand_sos(std::slice::from_ref(&a)).unwrap(),
            p(&ctx, "x1^2*x5^2")
        );
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Polynomial>();
        assert_send_sync::<Monomial>();
        assert_send_sync::<RingContext>();
        assert_send_sync::<crate::linalg::RationalMatrix>();
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = Polynomial::one(&RingContext::new(2));
        let b = Polynomial::one(&RingContext::new(3));
        assert!(poly_add(&a, &b).is_err());
        assert!(poly_mul(&a, &b).is_err());
    }

    #[test]
    fn homogeneity_cases() {
        let ctx = ctx4();
        assert_eq!(
            p(&ctx, "x1^2 - x4^2").homogeneity(),
            Homogeneity::Homogeneous(2)
        );
        assert_eq!(
            p(&ctx, "x1^2 + x1").homogeneity(),
            Homogeneity::Inhomogeneous
        );
        assert_eq!(Polynomial::zero(&ctx).homogeneity(), Homogeneity::Zero);
        assert_eq!(is_homogeneous(&p(&ctx, "x1^2 + x1")), None);
    }

    #[test]
    fn degrevlex_tiebreak() {
        // in three variables, x2^2 beats x1*x3
        let a = Monomial::new(vec![1, 0, 1]);
        let b = Monomial::new(vec![0, 2, 0]);
        assert_eq!(
            compare_monomials(&a, &b, MonomialOrder::DegRevLex).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn degree_dominates_graded_orders() {
        let a = Monomial::new(vec![3, 0]);
        let b = Monomial::new(vec![2, 0]);
        assert_eq!(
            compare_monomials(&a, &b, MonomialOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_ignores_degree() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 10]);
        assert_eq!(
            compare_monomials(&a, &b, MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 1, 0]);
        assert!(compare_monomials(&a, &b, MonomialOrder::Lex).is_err());
    }

    #[test]
    fn embed_into_larger_ring() {
        let c4 = ctx4();
        let c5 = RingContext::new(5);
        let a = p(&c4, "x1^2 - x4^2");
        assert_eq!(a.embed(&c5).unwrap(), p(&c5, "x1^2 - x4^2"));
    }

    #[test]
    fn evaluate_exactly() {
        let ctx = RingContext::new(2);
        let f = p(&ctx, "1/2*x1^2 - 3*x1*x2 + 2");
        let v = f.evaluate(&[rat(2, 3), rat(-1, 2)]);
        // 1/2*(4/9) - 3*(2/3)(-1/2) + 2 = 2/9 + 1 + 2 = 29/9
        assert_eq!(v, rat(29, 9));
    }
}
