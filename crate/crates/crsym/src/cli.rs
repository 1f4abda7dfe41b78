//! Command-line surface: analyze single models, scan families, verify
//! user-supplied fields, emit reports.
//!
//! Exit-code contract (so CI can assert theorem conformance without parsing):
//!
//! * `0` — success, no discrepancies;
//! * `2` — schema or validation error;
//! * `3` — holomorphically degenerate model (witness reported);
//! * `4` — internal discrepancy between solver and structural theory.

use crate::algebra::{Exponent, Gauss};
use crate::codec::{
    self, field_spec_to_json, gauss_to_json, parse_field, parse_model, AtlasJson, AtlasRowJson,
    CheckCountJson, ComponentRangeJson, DimJson, DiscrepancyJson, FieldSpecJson, ModelInput,
    ModelSpecJson, ReportJson, ScanSummaryJson, SkippedJson,
};
use crate::fields::{tangency_residual, VectorField, WeightResult};
use crate::grading::{full_algebra, AlgebraReport, GradingError, SolveOptions};
use crate::model::{
    build_from_pqr, exponent_matrix_det, monomial_degenerate_witness, NondegWitness,
    NondegeneracyCertificate, PQRSpec,
};
use crate::structure::{self, CrosscheckOutcome, StructuralPrediction};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_DISCREPANCY: i32 = 4;

/// Environment variable enabling the above-weight-one emptiness diagnostic.
pub const DIAG_WEIGHTS_ENV: &str = "CRSYM_DIAG_WEIGHTS";

fn solve_options() -> SolveOptions {
    SolveOptions {
        extended: std::env::var(DIAG_WEIGHTS_ENV)
            .map(|v| v == "extended")
            .unwrap_or(false),
    }
}

/// A fully analyzed model.
pub struct Analysis {
    pub input: ModelInput,
    pub report: AlgebraReport,
    pub prediction: Option<StructuralPrediction>,
    pub outcome: CrosscheckOutcome,
}

/// Validation → nondegeneracy → full algebra → structural predictions →
/// crosscheck.
pub fn analyze_input(
    input: ModelInput,
    opts: &SolveOptions,
) -> Result<Analysis, GradingError> {
    let report = full_algebra(&input.surface, opts)?;
    let (prediction, outcome) = match &input.pqr {
        Some(spec) => {
            let pred = structure::predict(spec, &report);
            let outcome = structure::crosscheck(&report, &pred);
            (Some(pred), outcome)
        }
        None => (None, structure::crosscheck_general(&report)),
    };
    Ok(Analysis {
        input,
        report,
        prediction,
        outcome,
    })
}

fn rigid_g0_of(report: &AlgebraReport) -> Vec<VectorField> {
    report
        .component(&crate::fields::Weight::from_index(report.d, report.d))
        .map(|c| c.rigid_basis.clone())
        .unwrap_or_default()
}

pub fn analysis_to_report_json(a: &Analysis) -> Result<ReportJson, codec::CodecError> {
    let rigid = rigid_g0_of(&a.report);
    codec::report_to_json(
        &a.input,
        &a.report,
        a.prediction.as_ref(),
        &a.outcome,
        &rigid,
    )
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

fn describe_witness(w: &NondegWitness) -> String {
    match w {
        NondegWitness::JacobianDet(det) => format!("nonzero Jacobian determinant {}", det),
        NondegWitness::ExponentDet(det) => format!("nonzero exponent determinant {}", det),
        NondegWitness::TangentField(x) => format!("holomorphic tangent field {}", x),
        NondegWitness::Unavailable => "no explicit witness constructed".to_string(),
    }
}

fn print_degenerate(cert: &NondegeneracyCertificate, pqr: Option<&PQRSpec>) {
    eprintln!("model is holomorphically degenerate; hol(M, 0) is infinite-dimensional");
    eprintln!("witness: {}", describe_witness(&cert.witness));
    if let Some(spec) = pqr {
        if let Some(x) = monomial_degenerate_witness(spec) {
            eprintln!("monomial witness field: {}", x);
        }
    }
}

fn render_text_report(a: &Analysis) -> String {
    let mut out = String::new();
    let r = &a.report;
    out.push_str(&format!(
        "model: n = {}, degree d = {}, defining function {}\n",
        r.n,
        r.d,
        a.input.surface.phi()
    ));
    out.push_str("nondegenerate: yes\n");
    out.push_str("graded components:\n");
    for c in &r.components {
        out.push_str(&format!(
            "  weight {:>6}: dim {} (rigid {})\n",
            c.component.weight.to_string(),
            c.component.dim,
            c.rigid_dim
        ));
        for b in &c.component.basis {
            out.push_str(&format!("      {}\n", b));
        }
    }
    out.push_str(&format!(
        "total dimension: {}\ngeneralized rotations: dim g_c = {}\n",
        r.total_dimension, r.gc_dimension
    ));
    if !r.extended_components.is_empty() {
        let empty = r.extended_components.iter().all(|c| c.dim == 0);
        out.push_str(&format!(
            "diagnostic weights above 1: {}\n",
            if empty { "all empty" } else { "NONZERO (unexpected)" }
        ));
    }
    if let Some(p) = &a.prediction {
        out.push_str(&format!(
            "normal form: {:?} (parameters {:?}), predicted off-diagonal params {}\n",
            p.normal_form.family,
            p.normal_form.parameters,
            p.normal_form.predicted_offdiag_params()
        ));
        out.push_str(&format!(
            "predicted dim g_c = {}, predicted dim g(-1/d) = {}\n",
            p.gc.dim,
            if p.g_minus.applicable {
                p.g_minus.dim.to_string()
            } else {
                "n/a".to_string()
            }
        ));
        out.push_str(&format!(
            "rotation flags: real diagonal {}, imaginary diagonal {} (s = {}, t = {}, offdiag = {})\n",
            p.flags.0, p.flags.1, p.rotation_info.s_dim, p.rotation_info.t_dim,
            p.rotation_info.offdiag_dim
        ));
    }
    for s in &a.outcome.skipped {
        out.push_str(&format!("skipped check: {} ({})\n", s.check, s.reason));
    }
    if a.outcome.discrepancies.is_empty() {
        out.push_str("crosscheck: all applicable checks passed\n");
    } else {
        for dsc in &a.outcome.discrepancies {
            out.push_str(&format!("DISCREPANCY [{}]: {}\n", dsc.check, dsc.detail));
        }
    }
    out
}

/// `crsym analyze <model.json> [--format json|text]`
pub fn cmd_analyze(path: &Path, format: OutputFormat) -> i32 {
    let doc: ModelSpecJson = match read_json(path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    let input = match parse_model(&doc) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    let pqr = input.pqr.clone();
    match analyze_input(input, &solve_options()) {
        Ok(analysis) => {
            match format {
                OutputFormat::Json => match analysis_to_report_json(&analysis) {
                    Ok(json) => println!("{}", to_pretty(&json)),
                    Err(e) => {
                        eprintln!("{}", e);
                        return EXIT_SCHEMA;
                    }
                },
                OutputFormat::Text => print!("{}", render_text_report(&analysis)),
            }
            if analysis.outcome.is_clean() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            }
        }
        Err(GradingError::Degenerate(cert)) => {
            print_degenerate(&cert, pqr.as_ref());
            EXIT_DEGENERATE
        }
    }
}

/// `crsym check-field <model.json> <field.json>`
pub fn cmd_check_field(model_path: &Path, field_path: &Path) -> i32 {
    let model_doc: ModelSpecJson = match read_json(model_path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    let field_doc: FieldSpecJson = match read_json(field_path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    let input = match parse_model(&model_doc) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    let field = match parse_field(&field_doc) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_SCHEMA;
        }
    };
    if field.n() != input.surface.n() {
        eprintln!("field and model have different variable counts");
        return EXIT_SCHEMA;
    }
    match field.weight(input.surface.d()) {
        WeightResult::Homogeneous(w) => println!("weight: {}", w),
        WeightResult::Inhomogeneous => println!("weight: inhomogeneous"),
        WeightResult::Zero => println!("weight: zero field"),
    }
    let residual = tangency_residual(&field, &input.surface);
    if residual.is_zero() {
        println!("tangent: yes");
    } else {
        println!("tangent: no");
        println!("residual: {}", residual);
    }
    EXIT_OK
}

/// `crsym examples [<name>]`
pub fn cmd_examples(name: Option<&str>) -> i32 {
    match name {
        None => {
            for n in crate::zoo::names() {
                println!("{}", n);
            }
            EXIT_OK
        }
        Some(n) => match crate::zoo::builtin(n) {
            Some(doc) => {
                println!("{}", to_pretty(&doc));
                EXIT_OK
            }
            None => {
                eprintln!("unknown example '{}'; available:", n);
                for n in crate::zoo::names() {
                    eprintln!("  {}", n);
                }
                EXIT_SCHEMA
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Scanning
// ---------------------------------------------------------------------------

/// Coefficient assignment used for scanned models.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffMode {
    /// All coefficients 1.
    Unit,
    /// Deterministic pseudo-random nonzero Gaussian rationals per model.
    Random { seed: u64 },
}

/// Scan configuration.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Maximal fundamental degree (inclusive); enumeration covers the
    /// monomial triples with `|α| + |β| = 2|γ| = d ≤ degree_bound`.
    pub degree_bound: u32,
    /// Canonicalize under variable permutation and the `P ↔ Q` swap.
    pub dedupe: bool,
    /// Worker count; 0 uses all cores.
    pub jobs: usize,
    pub output: Option<PathBuf>,
    pub coeffs: CoeffMode,
}

impl ScanConfig {
    pub fn new(degree_bound: u32) -> Self {
        ScanConfig {
            degree_bound,
            dedupe: false,
            jobs: 0,
            output: None,
            coeffs: CoeffMode::Unit,
        }
    }
}

/// Exponent triples of all valid monomial specs (degenerate ones included)
/// with `|α| + |β| = 2|γ| = d ≤ degree_bound`, optionally deduplicated under
/// the 12-element symmetry group.
pub fn enumerate_triples(degree_bound: u32, dedupe: bool) -> Vec<(Exponent, Exponent, Exponent)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d <= degree_bound {
        let half = d / 2;
        for ta in 1..d {
            let tb = d - ta;
            if tb < 1 {
                continue;
            }
            for alpha in crate::algebra::exponents_of_total(3, ta) {
                for beta in crate::algebra::exponents_of_total(3, tb) {
                    for gamma in crate::algebra::exponents_of_total(3, half) {
                        let t = (alpha.clone(), beta.clone(), gamma.clone());
                        if !dedupe || is_canonical(&t) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        d += 2;
    }
    out
}

/// Canonical representative under simultaneous variable permutation and the
/// `P ↔ Q` swap: the lexicographically smallest transform.
fn is_canonical(t: &(Exponent, Exponent, Exponent)) -> bool {
    canonical_key(t) == (t.0 .0.clone(), t.1 .0.clone(), t.2 .0.clone())
}

fn canonical_key(t: &(Exponent, Exponent, Exponent)) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let mut best: Option<(Vec<u32>, Vec<u32>, Vec<u32>)> = None;
    for perm in structure::PERMUTATIONS {
        for swap in [false, true] {
            let (a, b) = if swap { (&t.1, &t.0) } else { (&t.0, &t.1) };
            let cand = (
                a.permute(&perm).0,
                b.permute(&perm).0,
                t.2.permute(&perm).0,
            );
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Gauss {
    loop {
        let pick = |rng: &mut ChaCha8Rng| {
            (
                i64::from(rng.gen_range(-3..=3i32)),
                i64::from(rng.gen_range(1..=3i32)),
            )
        };
        let (rn, rd) = pick(rng);
        let (im, id) = pick(rng);
        let g = Gauss::from_parts(rn, rd, im, id);
        if !g.is_zero() {
            return g;
        }
    }
}

fn spec_for_triple(
    t: &(Exponent, Exponent, Exponent),
    coeffs: CoeffMode,
) -> Result<PQRSpec, crate::model::ModelError> {
    match coeffs {
        CoeffMode::Unit => PQRSpec::monic(t.0.clone(), t.1.clone(), t.2.clone()),
        CoeffMode::Random { seed } => {
            // Derive a per-model stream from the master seed and exponents.
            let mut s = seed;
            for &v in t.0.iter().chain(t.1.iter()).chain(t.2.iter()) {
                s = s.wrapping_mul(0x100000001b3).wrapping_add(u64::from(v) + 1);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            PQRSpec::new(
                t.0.clone(),
                t.1.clone(),
                t.2.clone(),
                random_coeff(&mut rng),
                random_coeff(&mut rng),
                random_coeff(&mut rng),
            )
        }
    }
}

/// One scanned model, fully analyzed.
pub struct ScanRecord {
    pub spec: PQRSpec,
    pub analysis: Analysis,
}

/// Outcome of a scan: all analyzed records plus the serializable atlas.
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub atlas: AtlasJson,
    pub discrepancy_total: usize,
}

/// Enumerate, analyze each model, aggregate. Deterministic for a fixed
/// config (parallel results are re-sorted into enumeration order).
pub fn run_scan(cfg: &ScanConfig) -> ScanOutcome {
    let triples = enumerate_triples(cfg.degree_bound, cfg.dedupe);
    let triples_enumerated = triples.len();
    let opts = solve_options();

    let analyze_one = |t: &(Exponent, Exponent, Exponent)| -> Option<ScanRecord> {
        let spec = spec_for_triple(t, cfg.coeffs).ok()?;
        if exponent_matrix_det(&spec).is_zero() {
            return None;
        }
        let surface = build_from_pqr(&spec).ok()?;
        let input = ModelInput {
            surface,
            pqr: Some(spec.clone()),
        };
        match analyze_input(input, &opts) {
            Ok(analysis) => Some(ScanRecord { spec, analysis }),
            Err(GradingError::Degenerate(_)) => None,
        }
    };

    let records: Vec<Option<ScanRecord>> = if cfg.jobs == 1 {
        triples.iter().map(analyze_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| triples.par_iter().map(analyze_one).collect())
    };
    let records: Vec<ScanRecord> = records.into_iter().flatten().collect();
    let degenerate_excluded = triples_enumerated - records.len();

    let atlas = build_atlas(cfg, triples_enumerated, degenerate_excluded, &records);
    let discrepancy_total = atlas.summary.discrepancy_total;
    ScanOutcome {
        records,
        atlas,
        discrepancy_total,
    }
}

fn build_atlas(
    cfg: &ScanConfig,
    triples_enumerated: usize,
    degenerate_excluded: usize,
    records: &[ScanRecord],
) -> AtlasJson {
    let mut models = Vec::with_capacity(records.len());
    let mut ranges: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
    let mut checks: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new(); // pass, fail, skip
    let mut discrepancy_total = 0;

    for rec in records {
        let r = &rec.analysis.report;
        let d = r.d;
        let named = [
            ("g(-1)", r.dim_at_index(0)),
            ("g(-1/d)", r.dim_at_index(d - 1)),
            ("g(0)", r.dim_at_index(d)),
            ("g_c", r.gc_dimension),
            ("g(1-1/d)", r.dim_at_index(2 * d - 1)),
            ("g(1)", r.dim_at_index(2 * d)),
            ("total", r.total_dimension),
        ];
        for (name, v) in named {
            ranges
                .entry(name)
                .and_modify(|(lo, hi)| {
                    *lo = (*lo).min(v);
                    *hi = (*hi).max(v);
                })
                .or_insert((v, v));
        }
        let outcome = &rec.analysis.outcome;
        discrepancy_total += outcome.discrepancies.len();
        let failed: std::collections::BTreeSet<&str> = outcome
            .discrepancies
            .iter()
            .map(|d| d.check.as_str())
            .collect();
        let skipped: std::collections::BTreeSet<&str> =
            outcome.skipped.iter().map(|s| s.check.as_str()).collect();
        for check in ALL_CHECKS {
            let slot = checks.entry(check.to_string()).or_insert((0, 0, 0));
            if failed.contains(check) {
                slot.1 += 1;
            } else if skipped.contains(check) {
                slot.2 += 1;
            } else {
                slot.0 += 1;
            }
        }

        let pred = rec.analysis.prediction.as_ref().expect("scan models are PQR");
        models.push(AtlasRowJson {
            alpha: rec.spec.alpha.0.clone(),
            beta: rec.spec.beta.0.clone(),
            gamma: rec.spec.gamma.0.clone(),
            degree: d,
            dims: r
                .components
                .iter()
                .map(|c| DimJson {
                    weight: c.component.weight.to_string(),
                    dim: c.component.dim,
                    rigid_dim: c.rigid_dim,
                })
                .collect(),
            total_dimension: r.total_dimension,
            gc_dimension: r.gc_dimension,
            family: format!("{:?}", pred.normal_form.family),
            flags: codec::FlagsJson {
                real_diagonal: pred.flags.0,
                imaginary_diagonal: pred.flags.1,
                s_dim: pred.rotation_info.s_dim,
                t_dim: pred.rotation_info.t_dim,
                offdiag_dim: pred.rotation_info.offdiag_dim,
            },
            discrepancies: outcome
                .discrepancies
                .iter()
                .map(|x| DiscrepancyJson {
                    check: x.check.clone(),
                    detail: x.detail.clone(),
                })
                .collect(),
            skipped_checks: outcome
                .skipped
                .iter()
                .map(|x| SkippedJson {
                    check: x.check.clone(),
                    reason: x.reason.clone(),
                })
                .collect(),
        });
    }

    AtlasJson {
        degree_bound: cfg.degree_bound,
        dedupe: cfg.dedupe,
        coefficients: match cfg.coeffs {
            CoeffMode::Unit => "unit".to_string(),
            CoeffMode::Random { seed } => format!("random(seed={})", seed),
        },
        models,
        summary: ScanSummaryJson {
            triples_enumerated,
            degenerate_excluded,
            models_analyzed: records.len(),
            component_ranges: ranges
                .into_iter()
                .map(|(component, (min, max))| ComponentRangeJson {
                    component: component.to_string(),
                    min,
                    max,
                })
                .collect(),
            check_counts: checks
                .into_iter()
                .map(|(check, (passed, failed, skipped))| CheckCountJson {
                    check,
                    passed,
                    failed,
                    skipped,
                })
                .collect(),
            discrepancy_total,
        },
    }
}

const ALL_CHECKS: [&str; 17] = [
    "g(-1) dimension",
    "grading element",
    "g(1) dimension bound",
    "bracket closure",
    "weight cap",
    "no-imaginary-diagonal implication",
    "no-real-diagonal implication",
    "gc bound",
    "gc dimension",
    "gc generator weight",
    "gc generator span",
    "g(-1/d) dimension",
    "duality",
    "g(1) dimension",
    "g(1) generator span",
    "rotation decomposition",
    "normal-form parameter count",
];

/// `crsym scan --degree-bound N [--dedupe] [--jobs K] -o atlas.json`
pub fn cmd_scan(cfg: &ScanConfig) -> i32 {
    if cfg.degree_bound < 2 {
        eprintln!("degree bound must be at least 2");
        return EXIT_SCHEMA;
    }
    let outcome = run_scan(cfg);
    let summary = &outcome.atlas.summary;
    println!(
        "scanned {} triples (d <= {}), {} degenerate excluded, {} analyzed",
        summary.triples_enumerated,
        cfg.degree_bound,
        summary.degenerate_excluded,
        summary.models_analyzed
    );
    for r in &summary.component_ranges {
        println!("  {:>9}: dim range {}..={}", r.component, r.min, r.max);
    }
    for c in &summary.check_counts {
        println!(
            "  check '{}': {} passed, {} failed, {} skipped",
            c.check, c.passed, c.failed, c.skipped
        );
    }
    println!("discrepancies: {}", summary.discrepancy_total);
    if let Some(path) = &cfg.output {
        match std::fs::write(path, to_pretty(&outcome.atlas)) {
            Ok(()) => println!("atlas written to {}", path.display()),
            Err(e) => {
                eprintln!("cannot write atlas: {}", e);
                return EXIT_SCHEMA;
            }
        }
    }
    if outcome.discrepancy_total == 0 {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    serde_json::from_str(&text).map_err(|e| format!("schema error in {}: {}", path.display(), e))
}

fn to_pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

/// Serialize a vector field together with its coefficient encoding; used by
/// the examples and tests that write field specs.
pub fn field_to_spec_json(x: &VectorField) -> Result<FieldSpecJson, codec::CodecError> {
    field_spec_to_json(x)
}

/// Encode one Gaussian rational as its JSON quadruple (helper for examples).
pub fn coeff_json(g: &Gauss) -> Result<codec::CoeffJson, codec::CodecError> {
    gauss_to_json(g)
}
