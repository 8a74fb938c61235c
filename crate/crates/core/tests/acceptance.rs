//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time (run with `--nocapture` to see them). Every comparison
//! is exact; the only tolerances are wall-clock ceilings.

mod common;

use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRunner};

use sos_core::certify::{
    build_ansatz, decide_t_squares, generate_family_instance, SosInstance, SquaresVerdict,
};
use sos_core::gram::{dual_obstruction_space, pick_psd_element, MonomialBasis};
use sos_core::groebner::Budget;
use sos_core::instances;
use sos_core::linalg::{kernel, ldlt_psd, same_span, RationalMatrix};
use sos_core::parse::parse_polynomial;
use sos_core::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// The ten-by-ten integer block of the dual space basis (entries 6, -1, 1),
/// row order: x1^2, x1*x2, x1*x3, x1*x4, x2^2, x2*x3, x2*x4, x3^2, x3*x4, x4^2.
const BLOCK_A: [[i64; 10]; 10] = [
    [6, -1, -1, 1, 6, -1, 1, 6, 1, 6],
    [-1, 6, -1, 1, -1, -1, 1, -1, 1, -1],
    [-1, -1, 6, 1, -1, -1, 1, -1, 1, -1],
    [1, 1, 1, 6, 1, 1, -1, 1, -1, 1],
    [6, -1, -1, 1, 6, -1, 1, 6, 1, 6],
    [-1, -1, -1, 1, -1, 6, 1, -1, 1, -1],
    [1, 1, 1, -1, 1, 1, 6, 1, -1, 1],
    [6, -1, -1, 1, 6, -1, 1, 6, 1, 6],
    [1, 1, 1, -1, 1, 1, -1, 1, 6, 1],
    [6, -1, -1, 1, 6, -1, 1, 6, 1, 6],
];

/// Independently expanded form of the bundled eight-square target (frozen
/// from a brute-force expansion with a separate computer algebra system).
const EXPANDED_TARGET: &str = "2*x1^4 + 2*x1^3*x2 + x1^2*x2^2 + x2^4 + 2*x1^3*x3 + 4*x1^2*x2*x3 \
+ 2*x1*x2^2*x3 + x1^2*x3^2 + 2*x1*x2*x3^2 + x2^2*x3^2 + x3^4 - 2*x1^3*x4 - 4*x1^2*x2*x4 \
- 2*x1*x2^2*x4 - 4*x1^2*x3*x4 - 6*x1*x2*x3*x4 - 2*x2^2*x3*x4 - 2*x1*x3^2*x4 - 2*x2*x3^2*x4 \
- x1^2*x4^2 + 2*x1*x2*x4^2 - x2^2*x4^2 + 2*x1*x3*x4^2 + 2*x2*x3*x4^2 - x3^2*x4^2 + 3*x4^4 \
+ x1^2*x5^2 + x2^2*x5^2 + x3^2*x5^2 + x4^2*x5^2";

fn eight_square_instance() -> SosInstance {
    SosInstance::from_instance_text("example-2.2", instances::FIVE_VAR_EIGHT_SQUARES).unwrap()
}

fn block_a_matrix() -> RationalMatrix {
    RationalMatrix::from_fn(10, 10, |i, j| Rational::from_integer(BLOCK_A[i][j].into()))
}

fn report(criterion: usize, what: &str, elapsed: Duration, bound: Duration) {
    assert!(
        elapsed <= bound,
        "criterion {criterion} exceeded its runtime bound: {elapsed:.2?} > {bound:.2?}"
    );
    println!("acceptance criterion {criterion}: PASS ({what}, {elapsed:.2?})");
}

#[test]
fn criterion_1_instance_identity() {
    let t0 = Instant::now();
    let inst = eight_square_instance();
    let expanded = sos_core::poly::expand_sos_in(inst.context(), inst.generators()).unwrap();
    let expected = parse_polynomial(EXPANDED_TARGET, inst.context()).unwrap();

    // full 70-coordinate comparison over the quartic slice
    let basis4 = MonomialBasis::new(inst.context(), 4, MonomialOrder::DegRevLex);
    assert_eq!(basis4.len(), 70);
    let got = basis4.coefficient_vector(&expanded).unwrap();
    let want = basis4.coefficient_vector(&expected).unwrap();
    assert_eq!(got, want);
    assert_eq!(&expanded, inst.sum());
    assert_eq!(sos_core::poly::is_homogeneous(&expanded), Some(4));
    report(
        1,
        "sum of 8 squares equals the target on all 70 coordinates",
        t0.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_dual_space_dimension_and_block_form() {
    let t0 = Instant::now();
    let inst = eight_square_instance();

    // the raw constraint system: 8 * 15 rows over the 70 quartic unknowns,
    // rank 68 (the solution space below is 2-dimensional)
    let basis2 = MonomialBasis::new(inst.context(), 2, MonomialOrder::DegRevLex);
    let basis4 = MonomialBasis::new(inst.context(), 4, MonomialOrder::DegRevLex);
    let constraints =
        sos_core::gram::dual_constraint_matrix(inst.generators(), &basis2, &basis4).unwrap();
    assert_eq!((constraints.rows(), constraints.cols()), (120, 70));
    assert_eq!(sos_core::linalg::rref(&constraints).rank, 68);

    let space = dual_obstruction_space(
        inst.generators(),
        inst.context(),
        2,
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    assert_eq!(space.dimension(), 2);

    let basis = MonomialBasis::new(inst.context(), 2, MonomialOrder::DegRevLex);
    let layout = basis.block_layout();

    // first basis matrix: the 10x10 block in primitive integer form is
    // bit-equal to the expected matrix, everything else zero
    let m1 = space.basis_matrices()[0]
        .primitive_integer_form()
        .select(&layout, &layout);
    let expect_a = block_a_matrix();
    for i in 0..15 {
        for j in 0..15 {
            let want = if i < 10 && j < 10 {
                expect_a[(i, j)].clone()
            } else {
                Rational::from_integer(0.into())
            };
            assert_eq!(m1[(i, j)], want, "basis matrix 1 entry ({i},{j})");
        }
    }

    // second basis matrix: the lone trailing-variable entry
    let m2 = space.basis_matrices()[1]
        .primitive_integer_form()
        .select(&layout, &layout);
    for i in 0..15 {
        for j in 0..15 {
            let want = if (i, j) == (14, 14) { 1 } else { 0 };
            assert_eq!(m2[(i, j)], Rational::from_integer(want.into()));
        }
    }
    report(
        2,
        "dual space has dimension 2 with the expected block form",
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_3_psd_and_kernel() {
    let t0 = Instant::now();

    // the printed block itself is positive semidefinite
    let a = block_a_matrix();
    let fact = ldlt_psd(&a).unwrap();
    assert!(fact.psd);

    // the all-ones element of the dual space has kernel dimension exactly 8,
    // and that kernel is precisely the span of the generators
    let inst = eight_square_instance();
    let space = dual_obstruction_space(
        inst.generators(),
        inst.context(),
        2,
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    let (element, coords) = pick_psd_element(&space, 100).unwrap();
    assert_eq!(coords, vec![Rational::from_integer(1.into()); 2]);
    let kern = kernel(element.matrix());
    assert_eq!(kern.dimension(), 8);

    let basis = MonomialBasis::new(inst.context(), 2, MonomialOrder::DegRevLex);
    let gen_coords: Vec<Vec<Rational>> = inst
        .generators()
        .iter()
        .map(|p| basis.coefficient_vector(p).unwrap())
        .collect();
    assert!(same_span(&kern.vectors, &gen_coords).unwrap());
    report(
        3,
        "PSD verdict, kernel dimension 8, kernel equals the generator span",
        t0.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_4_seven_squares_infeasible() {
    let t0 = Instant::now();
    let inst = eight_square_instance();
    let verdict = decide_t_squares(&inst, 7, MonomialOrder::DegRevLex, &Budget::default()).unwrap();
    match &verdict {
        SquaresVerdict::Infeasible { basis } => {
            assert_eq!(basis.order, MonomialOrder::DegRevLex);
            assert_eq!(
                basis.elements,
                vec![Polynomial::one(basis.elements[0].context())]
            );
            assert!(sos_core::groebner::is_infeasible(basis));
        }
        other => panic!("expected infeasible at t=7, got {}", other.as_str()),
    }
    report(
        4,
        "7 squares infeasible with reduced basis {1} in degrevlex",
        t0.elapsed(),
        Duration::from_secs(7200),
    );
}

#[test]
fn criterion_5_eight_squares_feasible() {
    let t0 = Instant::now();
    let inst = eight_square_instance();

    // identity substitution zeroes every ansatz equation
    let sub_start = Instant::now();
    let ansatz = build_ansatz(8, 8).unwrap();
    let ideal = sos_core::certify::ansatz_equations(&inst, &ansatz).unwrap();
    let mut point = vec![Rational::from_integer(0.into()); ansatz.context().num_vars()];
    for i in 1..=8 {
        point[ansatz.unknown_index(i, i)] = Rational::from_integer(1.into());
    }
    for eq in ideal.generators() {
        assert_eq!(eq.evaluate(&point), Rational::from_integer(0.into()));
    }
    let sub_elapsed = sub_start.elapsed();
    assert!(
        sub_elapsed <= Duration::from_secs(1),
        "identity substitution took {sub_elapsed:.2?}"
    );

    // the decision at t=8 must not report infeasible (monotone with t=7)
    let verdict = decide_t_squares(&inst, 8, MonomialOrder::DegRevLex, &Budget::default()).unwrap();
    assert!(
        !matches!(verdict, SquaresVerdict::Infeasible { .. }),
        "t=8 must not be infeasible, got {}",
        verdict.as_str()
    );
    report(
        5,
        "identity point satisfies the t=8 system; t=8 not infeasible",
        t0.elapsed(),
        Duration::from_secs(7200),
    );
}

#[test]
fn criterion_6_property_suites() {
    let t0 = Instant::now();
    let cases = 120u32;

    let run = |name: &str, f: &mut dyn FnMut(&mut TestRunner) -> Result<(), String>| {
        let mut runner = TestRunner::new(Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        });
        if let Err(e) = f(&mut runner) {
            panic!("property suite '{name}' failed: {e}");
        }
    };

    fn sample<S: Strategy>(s: &S, runner: &mut TestRunner) -> S::Value {
        s.new_tree(runner).expect("strategy").current()
    }

    // ring axioms
    run("ring axioms", &mut |runner| {
        let ctx = RingContext::new(3);
        let strat = common::polynomial(ctx, 3, 6);
        for _ in 0..cases {
            let a = sample(&strat, runner);
            let b = sample(&strat, runner);
            let c = sample(&strat, runner);
            common::check_ring_axioms(&a, &b, &c)?;
        }
        Ok(())
    });

    // parser round trip
    run("parser round trip", &mut |runner| {
        let ctx = RingContext::new(4);
        let strat = common::polynomial(ctx, 4, 8);
        for _ in 0..cases {
            let p = sample(&strat, runner);
            common::check_parse_round_trip(&p, MonomialOrder::DegRevLex)?;
            common::check_parse_round_trip(&p, MonomialOrder::Lex)?;
        }
        Ok(())
    });

    // LDL^T reconstruction and witness exactness
    run("ldlt reconstruction", &mut |runner| {
        let sym = common::symmetric_matrix(5, 6);
        let rect = common::rational_matrix(3, 5, 4);
        for _ in 0..cases {
            common::check_ldlt(&sample(&sym, runner))?;
            common::check_gram_psd(&sample(&rect, runner))?;
        }
        Ok(())
    });

    // rank-nullity and rref idempotence
    run("rank-nullity", &mut |runner| {
        let strat = common::rational_matrix(4, 6, 6);
        for _ in 0..cases {
            common::check_rank_nullity(&sample(&strat, runner))?;
        }
        Ok(())
    });

    // Groebner confluence and permutation invariance
    run("groebner confluence", &mut |runner| {
        let ctx = RingContext::new(3);
        let gens = common::polynomial(ctx.clone(), 2, 3);
        let probe = common::polynomial(ctx.clone(), 3, 5);
        for _ in 0..cases {
            let g1 = sample(&gens, runner);
            let g2 = sample(&gens, runner);
            let q = sample(&probe, runner);
            common::check_groebner(&ctx, &[g1, g2], &q)?;
        }
        Ok(())
    });

    // moment matrix well-definedness
    run("moment well-definedness", &mut |runner| {
        let vals = proptest::collection::vec(common::rational(9, 9), 15);
        for _ in 0..cases {
            let v = sample(&vals, runner);
            common::check_moment_well_defined(3, 2, &v)?;
        }
        Ok(())
    });

    report(
        6,
        "six property suites at 120 randomized cases each, exact equality",
        t0.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_7_family_generator_matches_builtin() {
    let t0 = Instant::now();
    let fam = generate_family_instance(5, None).unwrap();
    let builtin = eight_square_instance();
    assert_eq!(fam.generator_count(), builtin.generator_count());
    for (a, b) in fam.generators().iter().zip(builtin.generators()) {
        assert_eq!(a, b);
    }
    assert_eq!(fam.sum(), builtin.sum());
    report(
        7,
        "family construction at n=5 reproduces the builtin polynomial-for-polynomial",
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

/// Every basis element of the dual space annihilates every product p_i * m_j,
/// re-verified through direct polynomial expansion: the functional values are
/// read back off the moment matrix (any two-factor split of a quartic
/// monomial gives the same entry) and applied to the expanded product.
#[test]
fn dual_space_annihilates_generator_products() {
    let inst = eight_square_instance();
    let basis2 = MonomialBasis::new(inst.context(), 2, MonomialOrder::DegRevLex);
    let basis4 = MonomialBasis::new(inst.context(), 4, MonomialOrder::DegRevLex);
    let space = dual_obstruction_space(
        inst.generators(),
        inst.context(),
        2,
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    for q in space.basis_matrices() {
        // reconstruct the functional from the matrix
        let mut values = Vec::with_capacity(basis4.len());
        for quartic in basis4.monomials() {
            let (a, b) = split_into_two_quadratics(quartic, &basis2);
            values.push(q.matrix()[(a, b)].clone());
        }
        // apply it to each expanded product
        for p in inst.generators() {
            for m in basis2.monomials() {
                let product = p.mul_term(m, &Rational::from_integer(1.into()));
                let mut applied = Rational::from_integer(0.into());
                for (mono, coeff) in product.terms() {
                    let idx = basis4.position(mono).unwrap();
                    applied += coeff * &values[idx];
                }
                assert_eq!(applied, Rational::from_integer(0.into()));
            }
        }
    }
}

fn split_into_two_quadratics(quartic: &Monomial, basis2: &MonomialBasis) -> (usize, usize) {
    for (i, m) in basis2.monomials().iter().enumerate() {
        if let Some(rest) = quartic.try_div(m) {
            if let Some(j) = basis2.position(&rest) {
                return (i, j);
            }
        }
    }
    unreachable!("every quartic monomial splits into two quadratics");
}

/// The full Groebner basis of the eight-square system (bypassing the witness
/// shortcut) is consistent: 36 elements fixing u_ii^2 = 1 and u_ij = 0.
#[test]
fn eight_square_system_basis_is_feasible() {
    let inst = eight_square_instance();
    let ansatz = build_ansatz(8, 8).unwrap();
    let ideal = sos_core::certify::ansatz_equations(&inst, &ansatz).unwrap();
    let outcome =
        sos_core::groebner::buchberger(&ideal, MonomialOrder::DegRevLex, &Budget::default())
            .unwrap();
    let basis = outcome.basis().expect("within budget");
    assert!(!sos_core::groebner::is_infeasible(basis));
    assert_eq!(basis.elements.len(), 36);
}

/// Shape of the seven-square system: 35 unknowns, 65 equations, all of
/// degree at most 2 in the unknowns.
#[test]
fn seven_square_system_shape() {
    let inst = eight_square_instance();
    let ansatz = build_ansatz(8, 7).unwrap();
    assert_eq!(ansatz.unknown_count(), 35);
    let ideal = sos_core::certify::ansatz_equations(&inst, &ansatz).unwrap();
    assert_eq!(ideal.generators().len(), 65);
    for eq in ideal.generators() {
        assert!(eq.total_degree().unwrap_or(0) <= 2);
    }
}

/// The bundled-instance moment matrix is well-defined on all 15^2 x 15^2 entry
/// pairs (exhaustive check promised by the gram module's invariants).
#[test]
fn moment_well_definedness_exhaustive_on_eight_square_instance() {
    let inst = eight_square_instance();
    let space = dual_obstruction_space(
        inst.generators(),
        inst.context(),
        2,
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    let (element, _) = pick_psd_element(&space, 100).unwrap();
    let basis = element.basis();
    let q = element.matrix();
    for a in 0..15 {
        for b in 0..15 {
            for c in 0..15 {
                for d in 0..15 {
                    if basis.monomial(a).mul(basis.monomial(b))
                        == basis.monomial(c).mul(basis.monomial(d))
                    {
                        assert_eq!(q[(a, b)], q[(c, d)]);
                    }
                }
            }
        }
    }
}
