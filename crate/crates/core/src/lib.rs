//! Exact-arithmetic toolkit for sums-of-squares decompositions of
//! homogeneous polynomials.
//!
//! The crate verifies that a polynomial equals a given sum of squares,
//! computes the dual obstruction space of moment matrices pinning every
//! possible summand to the span of the generators, and decides by Groebner
//! basis whether `t` squares suffice, producing a machine-checkable
//! certificate (the reduced basis `{1}`) when they do not. All arithmetic is
//! over arbitrary-precision rationals; nothing is floating point.

pub mod certify;
pub mod gram;
pub mod groebner;
pub mod instances;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod report;

pub use certify::{
    ansatz_equations, build_ansatz, decide_t_squares, generate_family_instance,
    stage1_pin_summands, triangular_reduce, verify_instance, verify_instance_detailed,
    CertifyError, SosInstance, SquaresVerdict, Stage1Result, Stage1Verdict,
};
pub use gram::{
    dual_obstruction_space, functional_to_moment, gram_evaluate, monomial_basis, pick_psd_element,
    LinearFunctional, MatrixSpace, MomentMatrix, MonomialBasis,
};
pub use groebner::{
    buchberger, is_infeasible, normal_form, s_polynomial, Budget, GroebnerBasis, GroebnerOutcome,
    Ideal,
};
pub use linalg::{kernel, ldlt_psd, rref, same_span, KernelBasis, LdltResult, RationalMatrix};
pub use parse::{parse_instance, parse_polynomial, print_polynomial, ParseError};
pub use poly::{
    compare_monomials, expand_sos, expand_sos_in, is_homogeneous, poly_add, poly_mul, Context,
    Homogeneity, Monomial, MonomialOrder, PolyError, Polynomial, Rational, RingContext,
};
pub use report::{
    render_text, run_certification, run_verification_report, CertificateReport, CertificationRun,
};
