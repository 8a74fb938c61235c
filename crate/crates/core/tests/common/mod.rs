//! Shared strategies and property checks for the integration suites.
//! Each test binary uses its own subset.
#![allow(dead_code)]

use proptest::prelude::*;

use sos_core::groebner::{
    buchberger, normal_form, normal_form_with, s_polynomial, Budget, GroebnerOutcome, Ideal,
    ReducerStrategy,
};
use sos_core::linalg::{kernel, ldlt_psd, ldlt_reconstruct, rref, RationalMatrix};
use sos_core::parse::{parse_polynomial, print_polynomial};
use sos_core::poly::{Context, Monomial, MonomialOrder, Polynomial, Rational, RingContext};

pub fn rational(num_bound: i64, den_bound: i64) -> impl Strategy<Value = Rational> {
    (-num_bound..=num_bound, 1..=den_bound).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn polynomial(
    ctx: Context,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    let n = ctx.num_vars();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), rational(9, 9)),
        0..=max_terms,
    )
    .prop_map(move |raw| {
        Polynomial::from_terms(&ctx, raw.into_iter().map(|(e, c)| (Monomial::new(e), c)))
            .expect("consistent arity")
    })
}

pub fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

pub fn rational_matrix(
    rows: usize,
    cols: usize,
    bound: i64,
) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(rational(bound, 4), rows * cols).prop_map(move |data| {
        let mut it = data.into_iter();
        RationalMatrix::from_fn(rows, cols, |_, _| it.next().expect("sized"))
    })
}

pub fn symmetric_matrix(n: usize, bound: i64) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(rational(bound, 4), n * (n + 1) / 2).prop_map(move |data| {
        let mut m = RationalMatrix::zero(n, n);
        let mut it = data.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = it.next().expect("sized");
                m[(i, j)] = v.clone();
                m[(j, i)] = v;
            }
        }
        m
    })
}

// --- property checks (return Err(description) on failure) -----------------

pub fn check_ring_axioms(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<(), String> {
    let assoc_add = (&(a + b) + c) == (a + &(b + c));
    let comm_add = (a + b) == (b + a);
    let comm_mul = (a * b) == (b * a);
    let assoc_mul = (&(a * b) * c) == (a * &(b * c));
    let distrib = (a * &(b + c)) == (&(a * b) + &(a * c));
    if !(assoc_add && comm_add && comm_mul && assoc_mul && distrib) {
        return Err(format!(
            "ring axiom failed: assoc_add {assoc_add} comm_add {comm_add} comm_mul {comm_mul} assoc_mul {assoc_mul} distrib {distrib}"
        ));
    }
    Ok(())
}

pub fn check_parse_round_trip(p: &Polynomial, order: MonomialOrder) -> Result<(), String> {
    let printed = print_polynomial(p, order);
    let again = parse_polynomial(&printed, p.context())
        .map_err(|e| format!("reparse of {printed:?} failed: {e}"))?;
    if &again != p {
        return Err(format!("round trip changed the polynomial: {printed}"));
    }
    if print_polynomial(&again, order) != printed {
        return Err("printing is not deterministic".into());
    }
    Ok(())
}

pub fn check_ldlt(m: &RationalMatrix) -> Result<(), String> {
    let r = ldlt_psd(m).map_err(|e| e.to_string())?;
    if r.psd {
        let n = m.rows();
        let permuted =
            RationalMatrix::from_fn(n, n, |i, j| m[(r.permutation[i], r.permutation[j])].clone());
        if ldlt_reconstruct(&r) != permuted {
            return Err("PSD factorization does not reconstruct P M P^T".into());
        }
        if r.witness.is_some() {
            return Err("PSD verdict with a witness attached".into());
        }
    } else {
        let w = r.witness.as_ref().ok_or("not PSD but no witness")?;
        let value = m.quadratic_form(w).map_err(|e| e.to_string())?;
        if value >= Rational::from_integer(0.into()) {
            return Err(format!("witness value {value} is not negative"));
        }
    }
    Ok(())
}

pub fn check_gram_psd(b: &RationalMatrix) -> Result<(), String> {
    let m = b.transpose().matmul(b).map_err(|e| e.to_string())?;
    let r = ldlt_psd(&m).map_err(|e| e.to_string())?;
    if !r.psd {
        return Err("B^T B reported not PSD".into());
    }
    check_ldlt(&m)
}

pub fn check_rank_nullity(m: &RationalMatrix) -> Result<(), String> {
    let r = rref(m);
    let k = kernel(m);
    if r.rank + k.dimension() != m.cols() {
        return Err(format!(
            "rank {} + nullity {} != cols {}",
            r.rank,
            k.dimension(),
            m.cols()
        ));
    }
    for v in &k.vectors {
        let image = m.mul_vec(v).map_err(|e| e.to_string())?;
        if image.iter().any(|x| x != &Rational::from_integer(0.into())) {
            return Err("kernel vector not annihilated".into());
        }
    }
    let again = rref(&r.matrix);
    if again.matrix != r.matrix {
        return Err("rref is not idempotent".into());
    }
    Ok(())
}

/// Groebner checks on one small ideal: confluent division, generator
/// membership, S-polynomial reduction, permutation invariance, monic output.
pub fn check_groebner(
    ctx: &Context,
    gens: &[Polynomial],
    probe: &Polynomial,
) -> Result<(), String> {
    let order = MonomialOrder::DegRevLex;
    let budget = Budget {
        max_pairs: 3_000,
        max_coeff_bits: 4_096,
    };
    let ideal = Ideal::new(ctx, gens.to_vec()).map_err(|e| e.to_string())?;
    if ideal.generators().is_empty() {
        return Ok(());
    }
    let basis = match buchberger(&ideal, order, &budget).map_err(|e| e.to_string())? {
        GroebnerOutcome::Basis(b) => b,
        GroebnerOutcome::BudgetExhausted(_) => return Ok(()), // rare blowup: nothing to check
    };

    for e in &basis.elements {
        let (_, lc) = e.leading_term(order).ok_or("zero element in basis")?;
        if lc != &Rational::from_integer(1.into()) {
            return Err("basis element not monic".into());
        }
    }
    for g in ideal.generators() {
        let nf = normal_form(g, &basis.elements, order).map_err(|e| e.to_string())?;
        if !nf.is_zero() {
            return Err("input generator does not reduce to zero".into());
        }
    }
    for i in 0..basis.elements.len() {
        for j in i + 1..basis.elements.len() {
            let s = s_polynomial(&basis.elements[i], &basis.elements[j], order)
                .map_err(|e| e.to_string())?;
            if s.is_zero() {
                continue;
            }
            let nf = normal_form(&s, &basis.elements, order).map_err(|e| e.to_string())?;
            if !nf.is_zero() {
                return Err("S-polynomial of output pair does not reduce to zero".into());
            }
        }
    }
    // confluence: reducer choice must not matter on a Groebner basis
    let first = normal_form_with(probe, &basis.elements, order, ReducerStrategy::FirstMatch)
        .map_err(|e| e.to_string())?;
    let last = normal_form_with(probe, &basis.elements, order, ReducerStrategy::LastMatch)
        .map_err(|e| e.to_string())?;
    if first != last {
        return Err("normal form depends on the reducer strategy".into());
    }
    // permutation invariance of the reduced basis
    let mut permuted = gens.to_vec();
    permuted.reverse();
    let ideal2 = Ideal::new(ctx, permuted).map_err(|e| e.to_string())?;
    if let GroebnerOutcome::Basis(b2) =
        buchberger(&ideal2, order, &budget).map_err(|e| e.to_string())?
    {
        if b2.elements != basis.elements {
            return Err("reduced basis depends on generator order".into());
        }
    }
    Ok(())
}

pub fn check_moment_well_defined(n: usize, d: u32, values: &[Rational]) -> Result<(), String> {
    use sos_core::gram::{functional_to_moment, LinearFunctional, MonomialBasis};
    let ctx = RingContext::new(n);
    let basis_d = MonomialBasis::new(&ctx, d, MonomialOrder::DegRevLex);
    let basis_2d = MonomialBasis::new(&ctx, 2 * d, MonomialOrder::DegRevLex);
    let mut vals = values.to_vec();
    vals.resize(basis_2d.len(), Rational::from_integer(0.into()));
    let ell = LinearFunctional::new(basis_2d, vals).map_err(|e| e.to_string())?;
    let q = functional_to_moment(&ell, &basis_d).map_err(|e| e.to_string())?;
    let nn = basis_d.len();
    for a in 0..nn {
        for b in 0..nn {
            for c in 0..nn {
                for e in 0..nn {
                    let left = basis_d.monomial(a).mul(basis_d.monomial(b));
                    let right = basis_d.monomial(c).mul(basis_d.monomial(e));
                    if left == right && q.matrix()[(a, b)] != q.matrix()[(c, e)] {
                        return Err(format!(
                            "entries ({a},{b}) and ({c},{e}) differ on equal products"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
