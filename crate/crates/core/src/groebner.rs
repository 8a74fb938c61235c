//! Buchberger's algorithm over the rationals producing reduced Groebner
//! bases, with Gebauer-Moeller pair pruning and a first-class resource
//! budget. The reduced basis {1} is the crate's infeasibility certificate:
//! it proves the generating equations have no solution over any field
//! extension.

use std::collections::BinaryHeap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{
    require_same_context, Context, Monomial, MonomialOrder, PolyError, Polynomial, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("empty reducer list")]
    EmptyBasis,
}

/// An ideal of a polynomial ring, given by generators. Zero generators are
/// dropped at construction.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: Context,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ctx: &Context, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            require_same_context(ctx, g.context())?;
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            generators: kept,
        })
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A reduced Groebner basis: monic elements, no leading monomial divides
/// another, every element fully reduced against the rest, sorted by
/// decreasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn export(&self) -> GroebnerExport {
        GroebnerExport {
            order: self.order.name().to_string(),
            elements: self
                .elements
                .iter()
                .map(|p| crate::parse::print_polynomial(p, self.order))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "groebner basis ({} elements, {}):\n",
            self.elements.len(),
            self.order
        );
        for p in &self.elements {
            out.push_str("  ");
            out.push_str(&crate::parse::print_polynomial(p, self.order));
            out.push('\n');
        }
        out
    }
}

/// JSON form of a basis: printed polynomials plus the order name.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroebnerExport {
    pub order: String,
    pub elements: Vec<String>,
}

/// Resource ceilings for [`buchberger`]. Exceeding one is an explicit
/// outcome, never a lost computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs processed.
    pub max_pairs: usize,
    /// Maximum bit size (numerator plus denominator) of any coefficient
    /// during reduction.
    pub max_coeff_bits: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_coeff_bits: 65_536,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BudgetReason {
    PairLimit,
    CoefficientLimit,
}

/// What was spent when a budget ceiling was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExhaustion {
    pub reason: BudgetReason,
    pub pairs_processed: usize,
    pub max_coeff_bits_seen: u64,
    pub basis_size: usize,
}

/// Outcome of a basis computation: success or an explicit budget stop.
#[derive(Debug, Clone)]
pub enum GroebnerOutcome {
    Basis(GroebnerBasis),
    BudgetExhausted(BudgetExhaustion),
}

impl GroebnerOutcome {
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        match self {
            GroebnerOutcome::Basis(b) => Some(b),
            GroebnerOutcome::BudgetExhausted(_) => None,
        }
    }
}

/// True iff the reduced basis is exactly {1}: the ideal is the whole ring,
/// so the generating equations have no solution over any field extension.
pub fn is_infeasible(gb: &GroebnerBasis) -> bool {
    gb.elements.len() == 1 && gb.elements[0].total_degree() == Some(0)
}

/// Reducer selection for the division algorithm. Confluence on a Groebner
/// basis makes the result independent of this choice; tests exercise both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducerStrategy {
    FirstMatch,
    LastMatch,
}

// ---------------------------------------------------------------------------
// internal ordered representation: terms sorted strictly decreasing

type OrdPoly = Vec<(Monomial, Rational)>;

fn to_ord(p: &Polynomial, order: MonomialOrder) -> OrdPoly {
    let mut v: OrdPoly = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    v.sort_by(|(a, _), (b, _)| order.compare(b, a));
    v
}

fn to_poly(ctx: &Context, p: &OrdPoly) -> Polynomial {
    Polynomial::from_terms(ctx, p.iter().cloned()).expect("arities consistent")
}

/// a - c * x^shift * b, both inputs sorted decreasing; result stays sorted.
fn sub_scaled(
    a: &OrdPoly,
    b: &OrdPoly,
    c: &Rational,
    shift: &Monomial,
    order: MonomialOrder,
) -> OrdPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match order.compare(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, -(&b[j].1 * c)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = &a[i].1 - &(&b[j].1 * c);
                if !coeff.is_zero() {
                    out.push((bm, coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, v) in &b[j..] {
        out.push((m.mul(shift), -(v * c)));
    }
    out
}

fn make_monic(p: &mut OrdPoly) {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

fn coeff_bits(p: &OrdPoly) -> u64 {
    p.iter()
        .map(|(_, c)| c.numer().bits() + c.denom().bits())
        .max()
        .unwrap_or(0)
}

/// Full normal form: no term of the result is divisible by any reducer's
/// leading monomial. Returns the reduced polynomial and the largest
/// coefficient bit size seen along the way.
fn normal_form_ord(
    mut h: OrdPoly,
    reducers: &[OrdPoly],
    order: MonomialOrder,
    strategy: ReducerStrategy,
) -> (OrdPoly, u64) {
    let mut remainder: OrdPoly = Vec::new();
    let mut max_bits = coeff_bits(&h);
    while let Some((lm, lc)) = h.first().cloned() {
        let found = match strategy {
            ReducerStrategy::FirstMatch => reducers
                .iter()
                .find(|g| !g.is_empty() && g[0].0.divides(&lm)),
            ReducerStrategy::LastMatch => reducers
                .iter()
                .rev()
                .find(|g| !g.is_empty() && g[0].0.divides(&lm)),
        };
        match found {
            Some(g) => {
                let shift = lm.try_div(&g[0].0).expect("divisibility checked");
                let factor = &lc / &g[0].1;
                h = sub_scaled(&h, g, &factor, &shift, order);
                max_bits = max_bits.max(coeff_bits(&h));
            }
            None => {
                remainder.push((lm, lc));
                h.remove(0);
            }
        }
    }
    (remainder, max_bits)
}

fn s_poly_ord(f: &OrdPoly, g: &OrdPoly, order: MonomialOrder) -> OrdPoly {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let lcm = fm.lcm(gm);
    let f_shift = lcm.try_div(fm).expect("lcm divisible");
    let g_shift = lcm.try_div(gm).expect("lcm divisible");
    // (1/lc_f) x^(lcm-lm_f) f  -  (1/lc_g) x^(lcm-lm_g) g
    let scaled_f: OrdPoly = f.iter().map(|(m, c)| (m.mul(&f_shift), c / fc)).collect();
    sub_scaled(&scaled_f, g, &gc.recip(), &g_shift, order)
}

// ---------------------------------------------------------------------------
// public operations

/// Remainder of multivariate division of `p` by `basis`.
pub fn normal_form(
    p: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    normal_form_with(p, basis, order, ReducerStrategy::FirstMatch)
}

/// [`normal_form`] with an explicit reducer-selection strategy.
pub fn normal_form_with(
    p: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
    strategy: ReducerStrategy,
) -> Result<Polynomial, GroebnerError> {
    if basis.is_empty() {
        return Err(GroebnerError::EmptyBasis);
    }
    for g in basis {
        require_same_context(p.context(), g.context())?;
    }
    let reducers: Vec<OrdPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_ord(g, order))
        .collect();
    let (r, _) = normal_form_ord(to_ord(p, order), &reducers, order, strategy);
    Ok(to_poly(p.context(), &r))
}

/// The S-polynomial of `f` and `g`: the lcm-cancellation combination with
/// exact coefficients (both sides scaled monic).
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    require_same_context(f.context(), g.context())?;
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    let s = s_poly_ord(&to_ord(f, order), &to_ord(g, order), order);
    Ok(to_poly(f.context(), &s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct PairEntry {
    lcm_degree: u32,
    lcm_key: Vec<i64>,
    left: usize,
    right: usize,
    lcm: Monomial,
}

impl Ord for PairEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lcm_degree
            .cmp(&other.lcm_degree)
            .then_with(|| self.lcm_key.cmp(&other.lcm_key))
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.right.cmp(&other.right))
    }
}

impl PartialOrd for PairEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Computes the reduced Groebner basis of `ideal` under `order`.
///
/// Pair selection follows the normal strategy (smallest lcm degree, then the
/// monomial order on lcms, then insertion indices), with the Gebauer-Moeller
/// criteria discarding useless pairs. A nonzero constant remainder short
/// circuits to the basis {1}.
pub fn buchberger(
    ideal: &Ideal,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerOutcome, GroebnerError> {
    let ctx = ideal.context();
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs: BinaryHeap<std::cmp::Reverse<PairEntry>> = BinaryHeap::new();
    let mut pairs_processed = 0usize;
    let mut max_bits_seen = 0u64;

    let one_basis = |ctx: &Context| GroebnerBasis {
        order,
        elements: vec![Polynomial::one(ctx)],
    };

    // seed the basis generator by generator, reducing each first
    for gen in ideal.generators() {
        let (reduced, bits) = normal_form_ord(
            to_ord(gen, order),
            &basis,
            order,
            ReducerStrategy::FirstMatch,
        );
        max_bits_seen = max_bits_seen.max(bits);
        if reduced.is_empty() {
            continue;
        }
        if reduced[0].0.is_one() {
            return Ok(GroebnerOutcome::Basis(one_basis(ctx)));
        }
        let mut reduced = reduced;
        make_monic(&mut reduced);
        add_with_gebauer_moeller(&mut basis, &mut alive, &mut pairs, reduced, order);
    }

    while let Some(std::cmp::Reverse(entry)) = pairs.pop() {
        if pairs_processed >= budget.max_pairs {
            return Ok(GroebnerOutcome::BudgetExhausted(BudgetExhaustion {
                reason: BudgetReason::PairLimit,
                pairs_processed,
                max_coeff_bits_seen: max_bits_seen,
                basis_size: basis.len(),
            }));
        }
        pairs_processed += 1;

        let s = s_poly_ord(&basis[entry.left], &basis[entry.right], order);
        let (reduced, bits) = normal_form_ord(s, &basis, order, ReducerStrategy::FirstMatch);
        max_bits_seen = max_bits_seen.max(bits);
        if bits > budget.max_coeff_bits {
            return Ok(GroebnerOutcome::BudgetExhausted(BudgetExhaustion {
                reason: BudgetReason::CoefficientLimit,
                pairs_processed,
                max_coeff_bits_seen: max_bits_seen,
                basis_size: basis.len(),
            }));
        }
        if reduced.is_empty() {
            continue;
        }
        if reduced[0].0.is_one() {
            return Ok(GroebnerOutcome::Basis(one_basis(ctx)));
        }
        let mut reduced = reduced;
        make_monic(&mut reduced);
        add_with_gebauer_moeller(&mut basis, &mut alive, &mut pairs, reduced, order);
    }

    Ok(GroebnerOutcome::Basis(reduce_basis(ctx, basis, order)))
}

/// Gebauer-Moeller update: queue the new element's useful pairs, prune old
/// pairs made redundant by it, and retire basis elements whose leading
/// monomial it divides.
fn add_with_gebauer_moeller(
    basis: &mut Vec<OrdPoly>,
    alive: &mut Vec<bool>,
    pairs: &mut BinaryHeap<std::cmp::Reverse<PairEntry>>,
    h: OrdPoly,
    order: MonomialOrder,
) {
    let t = basis.len();
    let lm_t = h[0].0.clone();

    // candidate pairs (i, t) for alive i
    let candidates: Vec<(usize, Monomial)> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| alive[*i])
        .map(|(i, g)| (i, g[0].0.lcm(&lm_t)))
        .collect();

    // first pass: keep (i,t) if coprime, or if no other candidate's lcm
    // divides its lcm (survivors eliminate the rest deterministically)
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (pos, (i, lcm_i)) in candidates.iter().enumerate() {
        let coprime = basis[*i][0].0.is_coprime(&lm_t);
        if coprime {
            kept.push((*i, lcm_i.clone()));
            continue;
        }
        let dominated_by_rest = candidates[pos + 1..]
            .iter()
            .any(|(_, lcm_j)| lcm_j.divides(lcm_i))
            || kept.iter().any(|(_, lcm_j)| lcm_j.divides(lcm_i));
        if !dominated_by_rest {
            kept.push((*i, lcm_i.clone()));
        }
    }

    // second pass: drop coprime pairs (their S-polynomials reduce to zero)
    kept.retain(|(i, _)| !basis[*i][0].0.is_coprime(&lm_t));

    // prune old pairs: (i, j) dies when lm_t properly divides lcm(i,j)
    // and neither lcm(i,t) nor lcm(j,t) equals lcm(i,j)
    let mut surviving: Vec<PairEntry> = Vec::with_capacity(pairs.len());
    while let Some(std::cmp::Reverse(e)) = pairs.pop() {
        let kill = lm_t.divides(&e.lcm)
            && basis[e.left][0].0.lcm(&lm_t) != e.lcm
            && basis[e.right][0].0.lcm(&lm_t) != e.lcm;
        if !kill {
            surviving.push(e);
        }
    }
    for e in surviving {
        pairs.push(std::cmp::Reverse(e));
    }

    for (i, lcm) in kept {
        pairs.push(std::cmp::Reverse(PairEntry {
            lcm_degree: lcm.degree(),
            lcm_key: order.sort_key(&lcm),
            left: i,
            right: t,
            lcm,
        }));
    }

    // retire superseded elements from future pair formation
    for (i, g) in basis.iter().enumerate() {
        if alive[i] && lm_t.divides(&g[0].0) {
            alive[i] = false;
        }
    }
    basis.push(h);
    alive.push(true);
}

/// Minimalizes and inter-reduces a final basis into the unique reduced GB.
fn reduce_basis(ctx: &Context, basis: Vec<OrdPoly>, order: MonomialOrder) -> GroebnerBasis {
    // minimal: drop any element whose leading monomial another kept leading
    // monomial divides (among equal leading monomials keep the first)
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let lm_i = &basis[i][0].0;
        let redundant = (0..basis.len()).any(|j| {
            if i == j {
                return false;
            }
            let lm_j = &basis[j][0].0;
            lm_j.divides(lm_i) && (lm_j != lm_i || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut minimal: Vec<OrdPoly> = keep.into_iter().map(|i| basis[i].clone()).collect();

    // inter-reduce tails; leading monomials are pairwise non-divisible so
    // heads are stable and one pass per element suffices
    for i in 0..minimal.len() {
        let others: Vec<OrdPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (mut reduced, _) = normal_form_ord(
            minimal[i].clone(),
            &others,
            order,
            ReducerStrategy::FirstMatch,
        );
        make_monic(&mut reduced);
        minimal[i] = reduced;
    }

    minimal.sort_by(|a, b| order.compare(&b[0].0, &a[0].0));
    GroebnerBasis {
        order,
        elements: minimal.iter().map(|p| to_poly(ctx, p)).collect(),
    }
}
