//! The two-stage certification pipeline.
//!
//! Stage 1 computes the dual obstruction space of an instance, picks a PSD
//! moment matrix from it, and checks that its kernel equals the span of the
//! instance generators. When it does, every summand of any sum-of-squares
//! decomposition of the target polynomial must be a linear combination of
//! the generators, so the triangular ansatz of stage 2 is exhaustive.
//!
//! Stage 2 writes the candidate decomposition with t squares in triangular
//! shape, expands the coefficient equations, and decides them by Groebner
//! basis: the reduced basis {1} certifies that t squares do not suffice.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gram::{dual_obstruction_space, GramError, MatrixSpace, MomentMatrix, MonomialBasis};
use crate::groebner::{
    buchberger, is_infeasible, Budget, BudgetExhaustion, GroebnerBasis, GroebnerError,
    GroebnerOutcome, Ideal,
};
use crate::linalg::{kernel, rref, same_span, KernelBasis, LinalgError, RationalMatrix};
use crate::parse::{parse_instance, print_polynomial, ParseError};
use crate::poly::{
    expand_sos_in, Context, Homogeneity, Monomial, MonomialOrder, PolyError, Polynomial, Rational,
    RingContext,
};

/// Candidate PSD coordinate patterns tried by stage 1.
const PSD_SEARCH_BUDGET: usize = 2000;

/// Diagonal sign patterns tried by the rational witness scan.
const WITNESS_SEARCH_BUDGET: usize = 4096;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("stage 1 did not pin the summands; refusing stage 2 (ansatz would not be exhaustive)")]
    NotPinned,
    #[error("ansatz is over {expected} generators, instance has {found}")]
    AnsatzMismatch { expected: usize, found: usize },
    #[error("polynomial {0} is not in the span of the given basis")]
    NotInSpan(usize),
    #[error("family construction for n={0} needs a seed of n-1 degree-2 forms in n-1 variables")]
    SeedRequired(usize),
    #[error("bad family seed: {0}")]
    BadSeed(String),
}

/// A sum-of-squares instance: a target polynomial and the generators that
/// are claimed to sum (squared) to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosInstance {
    name: String,
    ctx: Context,
    sum: Polynomial,
    generators: Vec<Polynomial>,
    degree: u32,
}

impl SosInstance {
    /// Instance whose target is the sum of squares of the generators.
    pub fn from_generators(
        name: impl Into<String>,
        ctx: &Context,
        generators: Vec<Polynomial>,
    ) -> Result<Self, CertifyError> {
        let sum = expand_sos_in(ctx, &generators)?;
        Self::with_sum(name, ctx, sum, generators)
    }

    /// Instance with an explicit target polynomial (which may fail to equal
    /// the sum of squares; `verify_instance` reports that).
    pub fn with_sum(
        name: impl Into<String>,
        ctx: &Context,
        sum: Polynomial,
        generators: Vec<Polynomial>,
    ) -> Result<Self, CertifyError> {
        if generators.is_empty() {
            return Err(CertifyError::InvalidInstance(
                "instance needs at least one generator".into(),
            ));
        }
        let mut degree = None;
        for (k, g) in generators.iter().enumerate() {
            crate::poly::require_same_context(ctx, g.context())?;
            match g.homogeneity() {
                Homogeneity::Homogeneous(d) => match degree {
                    None => degree = Some(d),
                    Some(prev) if prev == d => {}
                    Some(prev) => {
                        return Err(CertifyError::InvalidInstance(format!(
                            "generator {} has degree {d}, earlier generators have degree {prev}",
                            k + 1
                        )))
                    }
                },
                other => {
                    return Err(CertifyError::InvalidInstance(format!(
                        "generator {} is not homogeneous ({other:?})",
                        k + 1
                    )))
                }
            }
        }
        crate::poly::require_same_context(ctx, sum.context())?;
        Ok(SosInstance {
            name: name.into(),
            ctx: ctx.clone(),
            sum,
            generators,
            degree: degree.expect("nonempty"),
        })
    }

    /// Parses an instance from the text file format.
    pub fn from_instance_text(name: impl Into<String>, text: &str) -> Result<Self, CertifyError> {
        let file = parse_instance(text)?;
        let generators: Vec<Polynomial> = file.generators.into_iter().map(|(_, p)| p).collect();
        match file.explicit_sum {
            Some(sum) => Self::with_sum(name, &file.context, sum, generators),
            None => Self::from_generators(name, &file.context, generators),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// The target polynomial g.
    pub fn sum(&self) -> &Polynomial {
        &self.sum
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Common degree d of the generators (the target has degree 2d).
    pub fn square_degree(&self) -> u32 {
        self.degree
    }
}

/// One mismatched coefficient between the target and the expanded sum.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub monomial: String,
    pub target: String,
    pub expanded: String,
}

/// Outcome of instance verification.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity_holds: bool,
    pub first_mismatch: Option<CoefficientMismatch>,
    pub generators_independent: bool,
    pub generator_rank: usize,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.identity_holds && self.generators_independent
    }
}

/// True iff the squared generators sum to the target and the generators are
/// linearly independent.
pub fn verify_instance(inst: &SosInstance) -> bool {
    verify_instance_detailed(inst).is_ok_and(|r| r.valid())
}

/// Verification with the first mismatched coefficient (largest monomial in
/// `order`) and the generator rank.
pub fn verify_instance_detailed(inst: &SosInstance) -> Result<VerifyReport, CertifyError> {
    let order = MonomialOrder::DegRevLex;
    let expanded = expand_sos_in(&inst.ctx, &inst.generators)?;
    let diff = expanded.checked_sub(&inst.sum)?;
    let first_mismatch = diff.leading_term(order).map(|(m, _)| {
        let mono = Polynomial::from_terms(&inst.ctx, [(m.clone(), Rational::one())])
            .expect("same context");
        CoefficientMismatch {
            monomial: print_polynomial(&mono, order),
            target: inst.sum.coefficient(m).to_string(),
            expanded: expanded.coefficient(m).to_string(),
        }
    });

    let basis = MonomialBasis::new(&inst.ctx, inst.degree, order);
    let rows: Result<Vec<_>, _> = inst
        .generators
        .iter()
        .map(|g| basis.coefficient_vector(g))
        .collect();
    let coords = RationalMatrix::from_rows(rows?)?;
    let rank = rref(&coords).rank;

    Ok(VerifyReport {
        identity_holds: first_mismatch.is_none(),
        first_mismatch,
        generators_independent: rank == inst.generators.len(),
        generator_rank: rank,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage1Verdict {
    /// Every summand of any SOS decomposition of the target lies in the span
    /// of the generators.
    Pinned,
    /// No nonzero PSD element was found in the obstruction space.
    NoPsdElement,
    /// A PSD element exists but its kernel is strictly larger than the span
    /// of the generators.
    KernelMismatch,
}

impl Stage1Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage1Verdict::Pinned => "pinned",
            Stage1Verdict::NoPsdElement | Stage1Verdict::KernelMismatch => "inconclusive",
        }
    }
}

/// Everything stage 1 computed.
#[derive(Debug, Clone)]
pub struct Stage1Result {
    pub basis: MonomialBasis,
    pub space: MatrixSpace,
    pub psd_element: Option<MomentMatrix>,
    pub psd_coordinates: Option<Vec<Rational>>,
    pub kernel: Option<KernelBasis>,
    pub generator_coords: Vec<Vec<Rational>>,
    /// The generators span all of H_{n,d}; stage 2 is sound without a dual
    /// certificate in that case.
    pub generators_span_everything: bool,
    pub verdict: Stage1Verdict,
}

impl Stage1Result {
    /// Stage 2's soundness gate: the dual certificate pinned the summands,
    /// or the generators span the whole degree-d slice so there is nothing
    /// to pin.
    pub fn stage2_sound(&self) -> bool {
        self.verdict == Stage1Verdict::Pinned || self.generators_span_everything
    }
}

/// Computes the dual obstruction space, picks a PSD element, and compares
/// its kernel with the generator span.
pub fn stage1_pin_summands(
    inst: &SosInstance,
    order: MonomialOrder,
) -> Result<Stage1Result, CertifyError> {
    let report = verify_instance_detailed(inst)?;
    if !report.valid() {
        return Err(CertifyError::InvalidInstance(format!(
            "instance fails verification: identity {}, independent {}",
            report.identity_holds, report.generators_independent
        )));
    }

    let basis = MonomialBasis::new(&inst.ctx, inst.degree, order);
    let generator_coords: Vec<Vec<Rational>> = inst
        .generators
        .iter()
        .map(|g| basis.coefficient_vector(g))
        .collect::<Result<_, _>>()?;
    let generators_span_everything = inst.generators.len() == basis.len();

    let space = dual_obstruction_space(&inst.generators, &inst.ctx, inst.degree, order)?;

    let Some((element, coords)) = crate::gram::pick_psd_element(&space, PSD_SEARCH_BUDGET) else {
        return Ok(Stage1Result {
            basis,
            space,
            psd_element: None,
            psd_coordinates: None,
            kernel: None,
            generator_coords,
            generators_span_everything,
            verdict: Stage1Verdict::NoPsdElement,
        });
    };

    let kern = kernel(element.matrix());
    let pinned = same_span(&kern.vectors, &generator_coords)?;
    Ok(Stage1Result {
        basis,
        space,
        psd_element: Some(element),
        psd_coordinates: Some(coords),
        kernel: Some(kern),
        generator_coords,
        generators_span_everything,
        verdict: if pinned {
            Stage1Verdict::Pinned
        } else {
            Stage1Verdict::KernelMismatch
        },
    })
}

/// The triangular candidate decomposition: square i uses only generators
/// i..s, with one fresh unknown per (i, j) slot.
#[derive(Debug, Clone)]
pub struct TriangularAnsatz {
    s: usize,
    t: usize,
    ctx: Context,
}

impl TriangularAnsatz {
    pub fn generator_count(&self) -> usize {
        self.s
    }

    pub fn square_count(&self) -> usize {
        self.t
    }

    /// Ring of the unknowns u_ij, row-major: u11 > u12 > ... > u1s > u22 > ...
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn unknown_count(&self) -> usize {
        (1..=self.t.min(self.s)).map(|i| self.s - i + 1).sum()
    }

    /// Variable index of u_ij (1-based i <= j like the display convention).
    pub fn unknown_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.s && i <= self.t);
        (1..i).map(|r| self.s - r + 1).sum::<usize>() + (j - i)
    }

    pub fn unknown_name(&self, i: usize, j: usize) -> &str {
        self.ctx.var_name(self.unknown_index(i, j))
    }

    /// Human-readable form of square i, e.g. `u77*p7 + u78*p8`.
    pub fn describe_square(&self, i: usize) -> String {
        if i > self.s {
            return "0".to_string();
        }
        (i..=self.s)
            .map(|j| format!("{}*p{}", self.unknown_name(i, j), j))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Builds the triangular ansatz with `t` squares over `s` generators.
/// Squares beyond `s` would be identically zero and carry no unknowns.
pub fn build_ansatz(s: usize, t: usize) -> Result<TriangularAnsatz, CertifyError> {
    if s == 0 || t == 0 {
        return Err(CertifyError::InvalidInstance(
            "ansatz needs at least one generator and one square".into(),
        ));
    }
    let mut names = Vec::new();
    for i in 1..=t.min(s) {
        for j in i..=s {
            names.push(format!("u{i}{j}"));
        }
    }
    let ctx = RingContext::with_names(names)
        .map_err(|_| CertifyError::InvalidInstance("ansatz name clash".into()))?;
    Ok(TriangularAnsatz { s, t, ctx })
}

/// Expands `sum of squares of ansatz rows minus target` coefficient-wise:
/// one quadratic generator in the unknowns per target monomial with a
/// nonzero symbolic coefficient, ordered by decreasing source monomial.
pub fn ansatz_equations(
    inst: &SosInstance,
    ansatz: &TriangularAnsatz,
) -> Result<Ideal, CertifyError> {
    if ansatz.s != inst.generator_count() {
        return Err(CertifyError::AnsatzMismatch {
            expected: ansatz.s,
            found: inst.generator_count(),
        });
    }
    let order = MonomialOrder::DegRevLex;
    let uctx = &ansatz.ctx;
    let s = ansatz.s;
    let t = ansatz.t;

    // w_jk = sum_i u_ij u_ik over rows i that reach both columns, doubled off
    // the diagonal; then  sum_i f_i^2 = sum_{j<=k} w_jk p_j p_k
    let mut pair_data: Vec<(Polynomial, Polynomial)> = Vec::new(); // (p_j p_k, w_jk)
    for j in 1..=s {
        for k in j..=s {
            let product = inst.generators[j - 1].checked_mul(&inst.generators[k - 1])?;
            let rows = t.min(j); // i <= j = min(j, k)
            let mut w = Polynomial::zero(uctx);
            for i in 1..=rows {
                let a = ansatz.unknown_index(i, j);
                let b = ansatz.unknown_index(i, k);
                let mut exps = vec![0u32; uctx.num_vars()];
                exps[a] += 1;
                exps[b] += 1;
                let coeff = if j == k {
                    Rational::one()
                } else {
                    Rational::one() + Rational::one()
                };
                let term = Polynomial::from_terms(uctx, [(Monomial::new(exps), coeff)])?;
                w = w.checked_add(&term)?;
            }
            pair_data.push((product, w));
        }
    }

    // per target monomial: sum_{j<=k} coeff * w_jk - target coeff
    let mut equations: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for (product, w) in &pair_data {
        for (m, c) in product.terms() {
            let entry = equations
                .entry(m.clone())
                .or_insert_with(|| Polynomial::zero(uctx));
            *entry = entry.checked_add(&w.scale(c))?;
        }
    }
    for (m, c) in inst.sum.terms() {
        let entry = equations
            .entry(m.clone())
            .or_insert_with(|| Polynomial::zero(uctx));
        *entry = entry.checked_sub(&Polynomial::constant(uctx, c.clone()))?;
    }

    let mut keyed: Vec<(Monomial, Polynomial)> = equations
        .into_iter()
        .filter(|(_, eq)| !eq.is_zero())
        .collect();
    keyed.sort_by(|(a, _), (b, _)| order.compare(b, a));
    Ok(Ideal::new(
        uctx,
        keyed.into_iter().map(|(_, eq)| eq).collect(),
    )?)
}

/// Verdict of the t-squares decision.
#[derive(Debug, Clone)]
pub enum SquaresVerdict {
    /// Groebner basis {1}: no decomposition with t squares exists over any
    /// field extension.
    Infeasible { basis: GroebnerBasis },
    /// An exact rational point satisfying every equation; the decomposition
    /// exists and is attached.
    WitnessFound { assignment: Vec<(String, Rational)> },
    /// The equations are consistent over the complex numbers but no rational
    /// witness was found; existence of a real decomposition is undetermined.
    FeasibleComplex { basis: GroebnerBasis },
    /// Resource ceiling reached before a definite answer.
    BudgetExhausted(BudgetExhaustion),
}

impl SquaresVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            SquaresVerdict::Infeasible { .. } => "infeasible",
            SquaresVerdict::WitnessFound { .. } => "witness-found",
            SquaresVerdict::FeasibleComplex { .. } => "feasible-complex",
            SquaresVerdict::BudgetExhausted(_) => "budget-exhausted",
        }
    }

    pub fn is_definite(&self) -> bool {
        !matches!(self, SquaresVerdict::BudgetExhausted(_))
    }
}

/// Decides whether the instance target is a sum of `t` squares. Runs stage 1
/// first and refuses to proceed when it cannot guarantee the triangular
/// ansatz is exhaustive.
pub fn decide_t_squares(
    inst: &SosInstance,
    t: usize,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<SquaresVerdict, CertifyError> {
    let stage1 = stage1_pin_summands(inst, order)?;
    decide_t_squares_with_stage1(inst, &stage1, t, order, budget)
}

/// [`decide_t_squares`] against a precomputed stage-1 result.
pub fn decide_t_squares_with_stage1(
    inst: &SosInstance,
    stage1: &Stage1Result,
    t: usize,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<SquaresVerdict, CertifyError> {
    if !stage1.stage2_sound() {
        return Err(CertifyError::NotPinned);
    }
    let ansatz = build_ansatz(inst.generator_count(), t)?;
    let ideal = ansatz_equations(inst, &ansatz)?;

    // cheap exact witness scan before the Groebner run: diagonal sign
    // patterns u_ij = sigma_i * delta_ij
    if let Some(assignment) = diagonal_sign_witness(&ansatz, &ideal) {
        return Ok(SquaresVerdict::WitnessFound { assignment });
    }

    match buchberger(&ideal, order, budget)? {
        GroebnerOutcome::Basis(basis) => {
            if is_infeasible(&basis) {
                Ok(SquaresVerdict::Infeasible { basis })
            } else {
                Ok(SquaresVerdict::FeasibleComplex { basis })
            }
        }
        GroebnerOutcome::BudgetExhausted(e) => Ok(SquaresVerdict::BudgetExhausted(e)),
    }
}

/// Tries assignments u_ij = sigma_i * delta_ij with sigma in {1,-1}^rows and
/// returns the nonzero unknowns of the first assignment that zeroes every
/// generator exactly.
fn diagonal_sign_witness(
    ansatz: &TriangularAnsatz,
    ideal: &Ideal,
) -> Option<Vec<(String, Rational)>> {
    let rows = ansatz.t.min(ansatz.s);
    if ansatz.t < ansatz.s {
        // a diagonal witness needs every generator slot covered
        return None;
    }
    let patterns = 1usize << rows.min(20);
    for bits in 0..patterns.min(WITNESS_SEARCH_BUDGET) {
        let mut point = vec![Rational::zero(); ansatz.ctx.num_vars()];
        for i in 1..=rows {
            let sign = if bits >> (i - 1) & 1 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            point[ansatz.unknown_index(i, i)] = sign;
        }
        if ideal
            .generators()
            .iter()
            .all(|eq| eq.evaluate(&point).is_zero())
        {
            let assignment = (1..=rows)
                .map(|i| {
                    (
                        ansatz.unknown_name(i, i).to_string(),
                        point[ansatz.unknown_index(i, i)].clone(),
                    )
                })
                .collect();
            return Some(assignment);
        }
    }
    None
}

/// A weighted triangular decomposition sum(d_i * q_i^2) with nonnegative
/// rational weights and q_i in the span of generators i and later.
#[derive(Debug, Clone)]
pub struct TriangularDecomposition {
    pub weights: Vec<Rational>,
    pub polys: Vec<Polynomial>,
    pub rank: usize,
}

/// Rewrites sum(q_i^2), with each q_i in span{p}, as an exact weighted sum
/// of at most min(t, s) triangular squares.
pub fn triangular_reduce(
    q: &[Polynomial],
    p: &[Polynomial],
) -> Result<TriangularDecomposition, CertifyError> {
    let Some(first) = p.first() else {
        return Err(CertifyError::InvalidInstance("empty basis".into()));
    };
    let ctx = first.context().clone();
    let degree = match first.homogeneity() {
        Homogeneity::Homogeneous(d) => d,
        other => {
            return Err(CertifyError::InvalidInstance(format!(
                "basis polynomials must be homogeneous, found {other:?}"
            )))
        }
    };
    let order = MonomialOrder::DegRevLex;
    let basis = MonomialBasis::new(&ctx, degree, order);
    let p_rows: Vec<Vec<Rational>> = p
        .iter()
        .map(|g| basis.coefficient_vector(g))
        .collect::<Result<_, _>>()?;
    let s = p.len();
    let n = basis.len();
    let p_mat = RationalMatrix::from_rows(p_rows)?;
    if rref(&p_mat).rank != s {
        return Err(CertifyError::InvalidInstance(
            "basis polynomials are linearly dependent".into(),
        ));
    }

    // solve q_i = sum_j a_ij p_j: augmented columns over the transposed
    // coefficient matrix; full column rank makes the solution unique
    let q_cols: Vec<Vec<Rational>> = q
        .iter()
        .map(|qq| basis.coefficient_vector(qq))
        .collect::<Result<_, _>>()?;
    let t = q.len();
    let aug = RationalMatrix::from_fn(n, s + t, |r, c| {
        if c < s {
            p_mat[(c, r)].clone()
        } else {
            q_cols[c - s][r].clone()
        }
    });
    let reduced = rref(&aug);
    for (row, &pc) in reduced.pivot_cols.iter().enumerate() {
        if pc >= s {
            return Err(CertifyError::NotInSpan(pc - s));
        }
        debug_assert_eq!(pc, row);
    }
    let coeffs = RationalMatrix::from_fn(t, s, |i, j| reduced.matrix[(j, s + i)].clone());
    // rows of the rref below the pivots must be zero on every q column
    for r in reduced.pivot_cols.len()..n {
        for i in 0..t {
            if !reduced.matrix[(r, s + i)].is_zero() {
                return Err(CertifyError::NotInSpan(i));
            }
        }
    }

    let gram = coeffs.transpose().matmul(&coeffs)?;
    let fact = crate::linalg::ldlt_in_order(&gram)?;
    debug_assert!(fact.psd, "A^T A is positive semidefinite by construction");

    let mut weights = Vec::new();
    let mut polys = Vec::new();
    for i in 0..s {
        if fact.diagonal[i].is_zero() {
            continue;
        }
        // column i of L holds the p-coefficients of the i-th square
        let mut combo = Polynomial::zero(&ctx);
        for (j, basis_poly) in p.iter().enumerate().skip(i) {
            let c = if j == i {
                Rational::one()
            } else {
                fact.lower[(j, i)].clone()
            };
            if !c.is_zero() {
                combo = combo.checked_add(&basis_poly.scale(&c))?;
            }
        }
        weights.push(fact.diagonal[i].clone());
        polys.push(combo);
    }
    let rank = weights.len();
    Ok(TriangularDecomposition {
        weights,
        polys,
        rank,
    })
}

/// Builds the 2(n-1)-generator instance in n variables: the seed forms
/// reinterpreted in the larger ring plus the products x_i * x_n. Without an
/// explicit seed only n = 5 is supported (the bundled four-variable seed).
pub fn generate_family_instance(
    n: usize,
    seed: Option<&[Polynomial]>,
) -> Result<SosInstance, CertifyError> {
    if n < 2 {
        return Err(CertifyError::BadSeed(format!(
            "family construction needs n >= 2, got {n}"
        )));
    }
    let owned_seed: Vec<Polynomial>;
    let seed: &[Polynomial] = match seed {
        Some(s) => s,
        None => {
            if n != 5 {
                return Err(CertifyError::SeedRequired(n));
            }
            let file = parse_instance(crate::instances::FOUR_VAR_FOUR_SQUARES)?;
            owned_seed = file.generators.into_iter().map(|(_, p)| p).collect();
            &owned_seed
        }
    };
    if seed.len() != n - 1 {
        return Err(CertifyError::BadSeed(format!(
            "need {} seed forms, got {}",
            n - 1,
            seed.len()
        )));
    }
    let ctx = RingContext::new(n);
    let mut generators = Vec::with_capacity(2 * (n - 1));
    for (k, s) in seed.iter().enumerate() {
        if s.context().num_vars() != n - 1 {
            return Err(CertifyError::BadSeed(format!(
                "seed form {} lives in {} variables, want {}",
                k + 1,
                s.context().num_vars(),
                n - 1
            )));
        }
        if s.homogeneity() != Homogeneity::Homogeneous(2) {
            return Err(CertifyError::BadSeed(format!(
                "seed form {} is not homogeneous of degree 2",
                k + 1
            )));
        }
        generators.push(s.embed(&ctx)?);
    }
    for i in 0..n - 1 {
        let xi = Polynomial::variable(&ctx, i);
        let xn = Polynomial::variable(&ctx, n - 1);
        generators.push(xi.checked_mul(&xn)?);
    }
    SosInstance::from_generators(format!("family(n={n})"), &ctx, generators)
}
