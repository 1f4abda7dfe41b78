//! Acceptance suite: every criterion is implemented as one test that prints
//! a single PASS line (run with `--nocapture` to see them). All comparisons
//! are exact — equality of arbitrary-precision rationals — unless a range is
//! stated.
//!
//! Criteria 1 and 3–6 and 11 quantify over every monomial triple (resp.
//! every nondegenerate monomial model) with d ≤ 8; the scan fixture holds
//! the analyzed models, canonicalized under variable permutations and the
//! P↔Q swap (all reported dimensions and verdicts are invariant under that
//! group, which the CLI suite verifies separately by a dedupe-off scan).

mod common;

use common::{
    dense_kernel_oracle, dim13_spec, dim9_spec, exotic3_spec, exp, nilpotent_split_spec,
    nilpotent_triangular_spec,
};
use crsym::algebra::{in_span, Exponent, Gauss, HoloKey, HoloPoly, Rat, RatMatrix};
use crsym::cli::{run_scan, ScanConfig, ScanRecord};
use crsym::fields::{coordinate_rows, tangency_residual, VectorField, Weight};
use crsym::grading::{full_algebra, AlgebraReport, SolveOptions};
use crsym::model::{build_from_pqr, exponent_matrix_det, jacobian_nondegenerate, PQRSpec};
use crsym::structure::{is_nilpotent, split_rotation, Family};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::OnceLock;

const SCAN_BOUND: u32 = 8;

fn scan() -> &'static [ScanRecord] {
    static SCAN: OnceLock<Vec<ScanRecord>> = OnceLock::new();
    SCAN.get_or_init(|| {
        let mut cfg = ScanConfig::new(SCAN_BOUND);
        cfg.dedupe = true;
        run_scan(&cfg).records
    })
}

fn report_for(spec: &PQRSpec) -> AlgebraReport {
    let m = build_from_pqr(spec).unwrap();
    full_algebra(&m, &SolveOptions::default()).unwrap()
}

fn same_field_span(a: &[VectorField], b: &[VectorField]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let all: Vec<&VectorField> = a.iter().chain(b.iter()).collect();
    let rows = coordinate_rows(&all, |_, _| true);
    let (a_rows, b_rows) = rows.split_at(a.len());
    a_rows.iter().all(|v| in_span(b_rows, v)) && b_rows.iter().all(|v| in_span(a_rows, v))
}

fn failures_of(records: &[ScanRecord], check: &str) -> usize {
    records
        .iter()
        .flat_map(|r| r.analysis.outcome.discrepancies.iter())
        .filter(|d| d.check == check)
        .count()
}

/// Criterion 1 — for every monomial triple with d ≤ 8 the exponent-matrix
/// determinant verdict equals the symbolic-Jacobian verdict. Exact, zero
/// exceptions, degenerate triples included.
#[test]
fn acceptance_01_nondegeneracy_equivalence() {
    let triples = crsym::cli::enumerate_triples(SCAN_BOUND, false);
    let mismatches: usize = triples
        .par_iter()
        .map(|(a, b, g)| {
            let spec = PQRSpec::monic(a.clone(), b.clone(), g.clone()).unwrap();
            let by_exponents = !exponent_matrix_det(&spec).is_zero();
            let cert = jacobian_nondegenerate(&spec.p(), &spec.q(), &spec.r()).unwrap();
            usize::from(by_exponents != cert.nondegenerate)
        })
        .sum();
    assert_eq!(mismatches, 0);
    println!(
        "ACCEPTANCE 1: PASS — exponent-determinant and symbolic-Jacobian verdicts agree on all {} triples with d <= {}",
        triples.len(),
        SCAN_BOUND
    );
}

/// Criterion 2 — the exotic-rotation model has rigid positive-weight
/// dimension exactly 3, and the solver's basis spans exactly the printed
/// generator families (mutual membership, exact).
#[test]
fn acceptance_02_exotic3_generators() {
    let spec = exotic3_spec();
    let report = report_for(&spec);
    assert_eq!(report.gc_dimension, 3);
    let d = report.d;
    assert_eq!(d, 10);

    let n = 3;
    let zvar = |j: usize| HoloPoly::z_var(n, j);
    let mono = |e: [u32; 3], c: Gauss| HoloPoly::monomial(n, HoloKey::new(exp(e), 0), c);

    // First family: f1 = −β z1², f2 = 3α z2z3 − β z1z2, f3 = −α z3² + β z1z3
    // with β = −ᾱ, instantiated at α = 1 and α = i.
    let case_a = |alpha: Gauss| -> VectorField {
        let beta = -&alpha.conj();
        let f1 = mono([2, 0, 0], -&beta);
        let f2 = mono([0, 1, 1], alpha.scale(&crsym::algebra::rat_int(3))).add(&mono(
            [1, 1, 0],
            -&beta,
        ));
        let f3 = mono([0, 0, 2], -&alpha).add(&mono([1, 0, 1], beta));
        VectorField::new(vec![f1, f2, f3], HoloPoly::zero(n))
    };
    // Second family: (0, 3ic z1z2z3, −ic z1z3²) at c = 1.
    let case_b = VectorField::new(
        vec![
            HoloPoly::zero(n),
            zvar(0)
                .mul(&zvar(1))
                .mul(&zvar(2))
                .scale(&Gauss::from_parts(0, 1, 3, 1)),
            zvar(0)
                .mul(&zvar(2))
                .mul(&zvar(2))
                .scale(&Gauss::from_parts(0, 1, -1, 1)),
        ],
        HoloPoly::zero(n),
    );

    let m = build_from_pqr(&spec).unwrap();
    for x in [&case_a(Gauss::one()), &case_a(Gauss::i()), &case_b] {
        assert!(tangency_residual(x, &m).is_zero());
    }

    let rigid_at = |j: u32| -> Vec<VectorField> {
        report
            .component(&Weight::from_index(j, d))
            .map(|c| c.rigid_basis.clone())
            .unwrap()
    };
    // Case-1 generators live at weight 1/10 (j = 11), case 2 at 1/5 (j = 12).
    assert!(same_field_span(
        &rigid_at(11),
        &[case_a(Gauss::one()), case_a(Gauss::i())]
    ));
    assert!(same_field_span(&rigid_at(12), &[case_b]));
    println!(
        "ACCEPTANCE 2: PASS — exotic model has dim g_c = 3 and the solver basis spans exactly the printed generators"
    );
}

/// Criterion 3 — every nondegenerate monomial model with d ≤ 8 has
/// weight-one dimension exactly 1 with the closed-form generator in span.
#[test]
fn acceptance_03_weight_one_dimension() {
    let records = scan();
    for r in records {
        let report = &r.analysis.report;
        assert_eq!(
            report.dim_at_index(2 * report.d),
            1,
            "dim g_1 != 1 at {:?}",
            r.spec
        );
    }
    assert_eq!(failures_of(records, "g(1) dimension"), 0);
    assert_eq!(failures_of(records, "g(1) generator span"), 0);
    println!(
        "ACCEPTANCE 3: PASS — dim g_1 = 1 with the closed-form generator in span on all {} scanned models",
        records.len()
    );
}

/// Criterion 4 — `0 ≤ dim g_c ≤ 3` is never violated at d ≤ 8, and the
/// closed-form predictor matches the solver dimension on every model.
#[test]
fn acceptance_04_gc_bound_and_predictor() {
    let records = scan();
    for r in records {
        assert!(r.analysis.report.gc_dimension <= 3, "gc bound at {:?}", r.spec);
        let pred = r.analysis.prediction.as_ref().unwrap();
        assert_eq!(
            pred.gc.dim, r.analysis.report.gc_dimension,
            "gc predictor mismatch at {:?}",
            r.spec
        );
    }
    assert_eq!(failures_of(records, "gc bound"), 0);
    assert_eq!(failures_of(records, "gc dimension"), 0);
    assert_eq!(failures_of(records, "gc generator span"), 0);
    println!(
        "ACCEPTANCE 4: PASS — 0 <= dim g_c <= 3 and predictor agreement on all {} scanned models",
        records.len()
    );
}

/// Criterion 5 — duality: `dim g_(-1/d) > 0 ⟺ dim g_(1-1/d) > 0` on every
/// scanned model.
#[test]
fn acceptance_05_duality() {
    let records = scan();
    for r in records {
        let report = &r.analysis.report;
        let lo = report.dim_at_index(report.d - 1);
        let hi = report.dim_at_index(2 * report.d - 1);
        assert_eq!(lo > 0, hi > 0, "duality violated at {:?}", r.spec);
    }
    assert_eq!(failures_of(records, "duality"), 0);
    println!(
        "ACCEPTANCE 5: PASS — translation duality holds on all {} scanned models",
        records.len()
    );
}

/// Criterion 6 — rotation decomposition: for every scanned model and every
/// rigid weight-zero basis field, the diagonal and off-diagonal parts are
/// independently tangent and the off-diagonal part is nilpotent or splits
/// into at most two nilpotent tangent pieces. The normal-form parameter
/// counts 3/2/1/0 match the measured off-diagonal dimension exactly (the
/// degree-2 hyperquadric predates the classification and is exempt).
#[test]
fn acceptance_06_rotation_decomposition_and_parameter_counts() {
    let records = scan();
    let mut decomposed = 0;
    for r in records {
        let pred = r.analysis.prediction.as_ref().unwrap();
        let report = &r.analysis.report;
        let rigid_g0 = report
            .component(&Weight::from_index(report.d, report.d))
            .map(|c| c.rigid_basis.clone())
            .unwrap();
        assert_eq!(
            pred.decompositions.len(),
            rigid_g0.len(),
            "decomposition failed at {:?}",
            r.spec
        );
        decomposed += rigid_g0.len();
        if report.d > 2 {
            assert_eq!(
                pred.normal_form.predicted_offdiag_params(),
                pred.rotation_info.offdiag_dim,
                "parameter count mismatch at {:?}",
                r.spec
            );
        }
    }
    assert_eq!(failures_of(records, "rotation decomposition"), 0);
    assert_eq!(failures_of(records, "normal-form parameter count"), 0);
    println!(
        "ACCEPTANCE 6: PASS — {} rigid weight-0 fields across {} models decompose; parameter counts 3/2/1/0 match exactly (d = 2 quadric exempt)",
        decomposed,
        records.len()
    );
}

/// Criterion 7 — golden examples: the printed imaginary diagonal rotation is
/// tangent to its model and that model has `g_1 = 0`; the triangular model's
/// off-diagonal rotations are nilpotent outright; the split model's generic
/// off-diagonal rotation is not nilpotent but splits into two nilpotent
/// tangent rotations.
#[test]
fn acceptance_07_golden_rotation_examples() {
    // Imaginary rotation on the degree-8 binomial-P model.
    let doc = crsym::zoo::builtin("imaginary-rotation").unwrap();
    let input = crsym::codec::parse_model(&doc).unwrap();
    let x = VectorField::new(
        vec![
            HoloPoly::z_var(3, 0).scale(&Gauss::from_parts(0, 1, 11, 1)),
            HoloPoly::z_var(3, 1).scale(&Gauss::from_parts(0, 1, 3, 1)),
            HoloPoly::z_var(3, 2).scale(&Gauss::from_parts(0, 1, -1, 1)),
        ],
        HoloPoly::zero(3),
    );
    assert!(tangency_residual(&x, &input.surface).is_zero());
    let report = full_algebra(&input.surface, &SolveOptions::default()).unwrap();
    assert_eq!(report.dim_at_index(2 * report.d), 0, "g_1 must vanish");

    // Triangular model: a generic off-diagonal rotation with entries
    // (a+ib, ic, −a+ib) is nilpotent as it stands.
    let spec = nilpotent_triangular_spec();
    let m = build_from_pqr(&spec).unwrap();
    let tri = VectorField::new(
        vec![
            HoloPoly::z_var(3, 1)
                .scale(&Gauss::from_parts(1, 1, 2, 1))
                .add(&HoloPoly::z_var(3, 2).scale(&Gauss::from_parts(0, 1, 3, 1))),
            HoloPoly::z_var(3, 2).scale(&Gauss::from_parts(-1, 1, 2, 1)),
            HoloPoly::zero(3),
        ],
        HoloPoly::zero(3),
    );
    assert!(tangency_residual(&tri, &m).is_zero());
    let dec = split_rotation(&tri, &m).unwrap();
    assert!(dec.n_is_nilpotent);
    assert!(dec.split.is_none());

    // Split model: N = a z3 ∂2 + b z2 ∂3 is not nilpotent but is a sum of
    // two nilpotent tangent rotations.
    let spec = nilpotent_split_spec();
    let m = build_from_pqr(&spec).unwrap();
    let nsplit = VectorField::new(
        vec![
            HoloPoly::zero(3),
            HoloPoly::z_var(3, 2).scale(&Gauss::from_int(2)),
            HoloPoly::z_var(3, 1).scale(&Gauss::from_int(5)),
        ],
        HoloPoly::zero(3),
    );
    assert!(tangency_residual(&nsplit, &m).is_zero());
    assert!(!is_nilpotent(&nsplit.linear_part()));
    let dec = split_rotation(&nsplit, &m).unwrap();
    assert!(!dec.n_is_nilpotent);
    let (n1, n2) = dec.split.expect("must split into two pieces");
    assert!(is_nilpotent(&n1.linear_part()));
    assert!(is_nilpotent(&n2.linear_part()));
    assert!(tangency_residual(&n1, &m).is_zero());
    assert!(tangency_residual(&n2, &m).is_zero());
    assert_eq!(n1.add(&n2), dec.offdiag);
    println!("ACCEPTANCE 7: PASS — golden rotation examples verified (tangency, g_1 = 0, nilpotency, 2-piece split)");
}

/// Criterion 8 — the linear-P family member with l = 3: `dim g_c = 3` and
/// `7 ≤ dim g ≤ 13`; the computed total is compared against the reference
/// value 13 (agreement reproduced here and recorded in KNOWN_RESULTS.md).
#[test]
fn acceptance_08_dim13_family() {
    let report = report_for(&dim13_spec());
    assert_eq!(report.gc_dimension, 3);
    assert!((7..=13).contains(&report.total_dimension));
    assert_eq!(
        report.total_dimension, 13,
        "computed total {} disagrees with the recorded reference value 13; \
         the solver's exact total is authoritative — update KNOWN_RESULTS.md",
        report.total_dimension
    );
    println!(
        "ACCEPTANCE 8: PASS — dim g_c = 3, total dimension {} within [7, 13] and equal to the reference 13",
        report.total_dimension
    );
}

/// Criterion 9 — the family-1 member with k = 1: `dim g_c = 0` and
/// `6 ≤ dim g ≤ 9`; the computed total is compared against the reference
/// value 9 under the same reproduce-and-report protocol.
#[test]
fn acceptance_09_dim9_family() {
    let report = report_for(&dim9_spec());
    assert_eq!(report.gc_dimension, 0);
    assert!((6..=9).contains(&report.total_dimension));
    assert_eq!(
        report.total_dimension, 9,
        "computed total {} disagrees with the recorded reference value 9; \
         the solver's exact total is authoritative — update KNOWN_RESULTS.md",
        report.total_dimension
    );
    println!(
        "ACCEPTANCE 9: PASS — dim g_c = 0, total dimension {} within [6, 9] and equal to the reference 9",
        report.total_dimension
    );
}

/// Criterion 10 — property suite: bracket closure on all basis pairs of all
/// golden models; residual realness and real-linearity on randomized fields;
/// kernel bases validated against a naive dense elimination oracle on 200
/// random matrices up to 12×20.
#[test]
fn acceptance_10_property_suite() {
    // Bracket closure over the golden models.
    let golden: Vec<PQRSpec> = vec![
        exotic3_spec(),
        dim13_spec(),
        dim9_spec(),
        nilpotent_triangular_spec(),
        nilpotent_split_spec(),
        PQRSpec::monic(exp([1, 0, 0]), exp([0, 1, 0]), exp([0, 0, 1])).unwrap(),
    ];
    for spec in &golden {
        let report = report_for(spec);
        assert!(
            report.closure_violations.is_empty(),
            "closure violated at {:?}: {:?}",
            spec,
            report.closure_violations
        );
    }
    let imag = crsym::codec::parse_model(&crsym::zoo::builtin("imaginary-rotation").unwrap())
        .unwrap()
        .surface;
    let report = full_algebra(&imag, &SolveOptions::default()).unwrap();
    assert!(report.closure_violations.is_empty());

    // Realness and real-linearity of residuals on seeded random fields.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let m = build_from_pqr(&dim9_spec()).unwrap();
    let random_field = |rng: &mut ChaCha8Rng| -> VectorField {
        let mut f = Vec::new();
        for _ in 0..3 {
            let mut p = HoloPoly::zero(3);
            for _ in 0..rng.gen_range(0..3) {
                let e = Exponent::new((0..3).map(|_| rng.gen_range(0..3)).collect());
                let w = rng.gen_range(0..2);
                let c = Gauss::from_parts(
                    rng.gen_range(-4..=4),
                    rng.gen_range(1..=3),
                    rng.gen_range(-4..=4),
                    rng.gen_range(1..=3),
                );
                p = p.add(&HoloPoly::monomial(3, HoloKey::new(e, w), c));
            }
            f.push(p);
        }
        VectorField::new(f, HoloPoly::zero(3))
    };
    for _ in 0..50 {
        let x = random_field(&mut rng);
        let y = random_field(&mut rng);
        let a = Gauss::from_int(rng.gen_range(-5..=5));
        let b = Gauss::from_int(rng.gen_range(-5..=5));
        let tx = tangency_residual(&x, &m);
        let ty = tangency_residual(&y, &m);
        assert!(tx.is_real() && ty.is_real());
        let combo = tangency_residual(&x.scale(&a).add(&y.scale(&b)), &m);
        assert_eq!(combo, tx.scale(&a).add(&ty.scale(&b)));
    }

    // Kernel bases against the naive dense oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    for trial in 0..200 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=20);
        let dense: Vec<Vec<Rat>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            Rat::zero()
                        } else {
                            crsym::algebra::rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
                        }
                    })
                    .collect()
            })
            .collect();
        let m = RatMatrix::from_dense(dense.clone());
        let basis = m.kernel_basis();
        let oracle = dense_kernel_oracle(&dense, cols);
        assert_eq!(basis, oracle, "kernel mismatch on trial {}", trial);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        // Independence: canonical vectors have distinct pivot columns.
        let mut elim = crsym::algebra::Eliminator::new(cols);
        for v in &basis {
            let row: Vec<(usize, Rat)> = v
                .iter()
                .cloned()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            assert!(elim.insert_rational(&row), "dependent kernel vector");
        }
    }
    println!("ACCEPTANCE 10: PASS — closure on golden models, residual realness/linearity on 50 random field pairs, kernel oracle agreement on 200 random matrices");
}

/// Criterion 11 — implication theorems as material conditionals on every
/// scanned model: no imaginary diagonal rotation ⟹ `g_1 = 0`; `g_1 ≠ 0` with
/// no real diagonal rotation ⟹ `g_c = 0`.
#[test]
fn acceptance_11_implication_theorems() {
    let records = scan();
    for r in records {
        let pred = r.analysis.prediction.as_ref().unwrap();
        let report = &r.analysis.report;
        let (has_real, has_imag) = pred.flags;
        let g1 = report.dim_at_index(2 * report.d);
        if !has_imag {
            assert_eq!(g1, 0, "imaginary-diagonal implication at {:?}", r.spec);
        }
        if g1 != 0 && !has_real {
            assert_eq!(
                report.gc_dimension, 0,
                "real-diagonal implication at {:?}",
                r.spec
            );
        }
    }
    assert_eq!(failures_of(records, "no-imaginary-diagonal implication"), 0);
    assert_eq!(failures_of(records, "no-real-diagonal implication"), 0);
    println!(
        "ACCEPTANCE 11: PASS — both implication theorems hold on all {} scanned models",
        records.len()
    );
}

/// The scan itself must come back clean: zero discrepancies of any kind
/// across every analyzed model at d ≤ 8.
#[test]
fn acceptance_scan_is_globally_clean() {
    let records = scan();
    let total: usize = records
        .iter()
        .map(|r| r.analysis.outcome.discrepancies.len())
        .sum();
    assert_eq!(total, 0, "scan produced discrepancies");
    // Classification families all occur in the scan.
    let mut seen = std::collections::BTreeSet::new();
    for r in records {
        seen.insert(format!(
            "{:?}",
            r.analysis.prediction.as_ref().unwrap().normal_form.family
        ));
    }
    for f in [Family::Family1, Family::Family2, Family::Family3, Family::NoneOfThem] {
        assert!(seen.contains(&format!("{:?}", f)), "family {:?} never scanned", f);
    }
    println!(
        "ACCEPTANCE *: PASS — scan of {} models is clean and covers all normal-form families",
        records.len()
    );
}
