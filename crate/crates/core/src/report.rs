//! Certificate reports: pipeline driver, JSON export, and deterministic text
//! rendering. Serialized reports carry every matrix as exact rational
//! strings; identical configuration yields byte-identical output, so wall
//! clock times stay out of the serialized forms.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::certify::{
    decide_t_squares_with_stage1, stage1_pin_summands, verify_instance_detailed, CertifyError,
    SosInstance, SquaresVerdict, Stage1Result, VerifyReport,
};
use crate::gram::MomentMatrixExport;
use crate::groebner::{Budget, BudgetReason, GroebnerExport};
use crate::linalg::RationalMatrix;
use crate::parse::print_polynomial;
use crate::poly::MonomialOrder;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Stage1Section {
    pub space_dimension: usize,
    pub basis_matrices: Vec<MomentMatrixExport>,
    pub psd_coordinates: Option<Vec<String>>,
    pub psd_element: Option<MomentMatrixExport>,
    pub kernel_dimension: Option<usize>,
    pub kernel_basis: Option<Vec<Vec<String>>>,
    pub generators_span_everything: bool,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BudgetSection {
    pub reason: String,
    pub pairs_processed: usize,
    pub max_coeff_bits_seen: u64,
    pub basis_size: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Stage2Section {
    pub squares: usize,
    pub unknowns: usize,
    /// Unknowns in their ring order (row-major u11 > u12 > ...), which fixes
    /// the degrevlex used by the Groebner run.
    pub variable_order: Vec<String>,
    pub equations: usize,
    pub verdict: String,
    pub groebner_basis: Option<GroebnerExport>,
    pub witness: Option<BTreeMap<String, String>>,
    pub budget: Option<BudgetSection>,
}

/// Wall-clock data, kept out of serialized reports (stderr logging only) so
/// identical configurations produce byte-identical reports.
#[derive(Debug, Clone, Default)]
pub struct Timings {
    pub stage1: Option<Duration>,
    pub stage2: Vec<(usize, Duration)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateReport {
    pub instance: String,
    pub order: String,
    pub variables: usize,
    pub generator_count: usize,
    pub square_degree: u32,
    pub expanded_sum: String,
    pub verification: VerifyReport,
    pub stage1: Option<Stage1Section>,
    pub stage2: Vec<Stage2Section>,
    #[serde(skip)]
    pub timings: Timings,
}

impl CertificateReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// True when verification passed and every requested stage-2 decision
    /// reached a definite verdict.
    pub fn all_definite(&self) -> bool {
        self.verification.valid() && self.stage2.iter().all(|s| s.verdict != "budget-exhausted")
    }
}

fn stage1_section(stage1: &Stage1Result) -> Stage1Section {
    Stage1Section {
        space_dimension: stage1.space.dimension(),
        basis_matrices: stage1
            .space
            .basis_matrices()
            .iter()
            .map(|m| m.export())
            .collect(),
        psd_coordinates: stage1
            .psd_coordinates
            .as_ref()
            .map(|cs| cs.iter().map(ToString::to_string).collect()),
        psd_element: stage1.psd_element.as_ref().map(|m| m.export()),
        kernel_dimension: stage1.kernel.as_ref().map(|k| k.dimension()),
        kernel_basis: stage1.kernel.as_ref().map(|k| {
            k.vectors
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect()
        }),
        generators_span_everything: stage1.generators_span_everything,
        verdict: stage1.verdict.as_str().to_string(),
    }
}

fn stage2_section(
    inst: &SosInstance,
    t: usize,
    verdict: &SquaresVerdict,
) -> Result<Stage2Section, CertifyError> {
    let ansatz = crate::certify::build_ansatz(inst.generator_count(), t)?;
    let equations = crate::certify::ansatz_equations(inst, &ansatz)?
        .generators()
        .len();
    let mut section = Stage2Section {
        squares: t,
        unknowns: ansatz.unknown_count(),
        variable_order: ansatz.context().var_names().to_vec(),
        equations,
        verdict: verdict.as_str().to_string(),
        groebner_basis: None,
        witness: None,
        budget: None,
    };
    match verdict {
        SquaresVerdict::Infeasible { basis } | SquaresVerdict::FeasibleComplex { basis } => {
            section.groebner_basis = Some(basis.export());
        }
        SquaresVerdict::WitnessFound { assignment } => {
            section.witness = Some(
                assignment
                    .iter()
                    .map(|(name, value)| (name.clone(), value.to_string()))
                    .collect(),
            );
        }
        SquaresVerdict::BudgetExhausted(e) => {
            section.budget = Some(BudgetSection {
                reason: match e.reason {
                    BudgetReason::PairLimit => "pair-limit".to_string(),
                    BudgetReason::CoefficientLimit => "coefficient-limit".to_string(),
                },
                pairs_processed: e.pairs_processed,
                max_coeff_bits_seen: e.max_coeff_bits_seen,
                basis_size: e.basis_size,
            });
        }
    }
    Ok(section)
}

/// A finished pipeline run: the serializable report plus the live stage-1
/// data (needed for the matrix layout in text rendering).
#[derive(Debug)]
pub struct CertificationRun {
    pub report: CertificateReport,
    pub stage1: Option<Stage1Result>,
}

fn base_report(
    inst: &SosInstance,
    order: MonomialOrder,
) -> Result<CertificateReport, CertifyError> {
    let verification = verify_instance_detailed(inst)?;
    let expanded = crate::poly::expand_sos_in(inst.context(), inst.generators())?;
    Ok(CertificateReport {
        instance: inst.name().to_string(),
        order: order.name().to_string(),
        variables: inst.context().num_vars(),
        generator_count: inst.generator_count(),
        square_degree: inst.square_degree(),
        expanded_sum: print_polynomial(&expanded, order),
        verification,
        stage1: None,
        stage2: Vec::new(),
        timings: Timings::default(),
    })
}

/// Verification-only report (no dual analysis even on valid instances).
pub fn run_verification_report(
    inst: &SosInstance,
    order: MonomialOrder,
) -> Result<CertificateReport, CertifyError> {
    base_report(inst, order)
}

/// Runs verification, stage 1, and stage 2 for each requested square count.
/// Stage 2 entries appear only when the stage-1 soundness gate passes; an
/// empty `squares` list gives the dual-analysis report.
pub fn run_certification(
    inst: &SosInstance,
    squares: &[usize],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<CertificationRun, CertifyError> {
    let mut report = base_report(inst, order)?;
    if !report.verification.valid() {
        return Ok(CertificationRun {
            report,
            stage1: None,
        });
    }

    let t0 = std::time::Instant::now();
    let stage1 = stage1_pin_summands(inst, order)?;
    report.timings.stage1 = Some(t0.elapsed());
    report.stage1 = Some(stage1_section(&stage1));

    if stage1.stage2_sound() {
        for &t in squares {
            let t1 = std::time::Instant::now();
            let verdict = decide_t_squares_with_stage1(inst, &stage1, t, order, budget)?;
            report.timings.stage2.push((t, t1.elapsed()));
            report.stage2.push(stage2_section(inst, t, &verdict)?);
        }
    }
    Ok(CertificationRun {
        report,
        stage1: Some(stage1),
    })
}

fn render_matrix(out: &mut String, m: &RationalMatrix, labels: &[String], indent: &str) {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    for (i, row) in cells.iter().enumerate() {
        out.push_str(indent);
        out.push_str(&format!("{:<label_width$} |", labels[i]));
        for cell in row {
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
}

/// Deterministic human-readable rendering. Basis matrices of the obstruction
/// space print in primitive integer form under the block layout (monomials
/// grouped by their last-variable degree), so block structure reads off
/// directly.
pub fn render_text(report: &CertificateReport, stage1: Option<&Stage1Result>) -> String {
    let mut out = String::new();
    out.push_str(&format!("instance: {}\n", report.instance));
    out.push_str(&format!(
        "ring: {} variables, generator degree {}, monomial order {}\n",
        report.variables, report.square_degree, report.order
    ));
    out.push_str(&format!("generators: {}\n", report.generator_count));
    out.push_str(&format!("sum of squares = {}\n", report.expanded_sum));

    let v = &report.verification;
    if v.valid() {
        out.push_str(&format!(
            "verification: PASS (identity holds, generators independent, rank {})\n",
            v.generator_rank
        ));
    } else {
        out.push_str(&format!(
            "verification: FAIL (identity {}, independent {}, rank {})\n",
            v.identity_holds, v.generators_independent, v.generator_rank
        ));
        if let Some(mm) = &v.first_mismatch {
            out.push_str(&format!(
                "  first mismatch at {}: target {}, expanded {}\n",
                mm.monomial, mm.target, mm.expanded
            ));
        }
    }

    if let Some(s1) = &report.stage1 {
        out.push_str("stage 1: dual obstruction space\n");
        out.push_str(&format!("  dimension: {}\n", s1.space_dimension));
        if let Some(live) = stage1 {
            let layout = live.basis.block_layout();
            let labels: Vec<String> = {
                let names = live.basis.monomial_strings();
                layout.iter().map(|&i| names[i].clone()).collect()
            };
            for (k, mat) in live.space.basis_matrices().iter().enumerate() {
                let prim = mat.primitive_integer_form();
                let arranged = prim.select(&layout, &layout);
                out.push_str(&format!(
                    "  basis matrix {} (primitive integer form, block layout):\n",
                    k + 1
                ));
                render_matrix(&mut out, &arranged, &labels, "    ");
            }
        }
        if let Some(coords) = &s1.psd_coordinates {
            out.push_str(&format!(
                "  psd element: coordinates [{}]\n",
                coords.join(", ")
            ));
        } else {
            out.push_str("  psd element: none found\n");
        }
        if let Some(kd) = s1.kernel_dimension {
            out.push_str(&format!("  kernel dimension: {kd}\n"));
        }
        out.push_str(&format!("  verdict: {}\n", s1.verdict));
    }

    if !report.stage2.is_empty() {
        out.push_str("stage 2: triangular ansatz decisions\n");
        for s in &report.stage2 {
            out.push_str(&format!(
                "  t={}: {} ({} unknowns, {} equations)\n",
                s.squares, s.verdict, s.unknowns, s.equations
            ));
            if let Some(gb) = &s.groebner_basis {
                out.push_str(&format!(
                    "    groebner basis ({} elements, {}): {}\n",
                    gb.elements.len(),
                    gb.order,
                    gb.elements.join(", ")
                ));
            }
            if let Some(w) = &s.witness {
                let pairs: Vec<String> = w.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("    witness: {}\n", pairs.join(", ")));
            }
            if let Some(b) = &s.budget {
                out.push_str(&format!(
                    "    budget: {} after {} pairs, max coefficient bits {}, basis size {}\n",
                    b.reason, b.pairs_processed, b.max_coeff_bits_seen, b.basis_size
                ));
            }
        }
        // adjacent verdicts bracketing the answer pin the minimal count
        for w in report.stage2.windows(2) {
            if w[0].verdict == "infeasible"
                && w[1].verdict == "witness-found"
                && w[1].squares == w[0].squares + 1
            {
                out.push_str(&format!(
                    "conclusion: the target is a sum of {} squares and of no fewer\n",
                    w[1].squares
                ));
            }
        }
    }
    out
}
