//! Structural predictors and classifiers for the monomial `PQR` class,
//! cross-checked against the universal solver.
//!
//! Everything here is closed-form: Cramer systems on the 3×3 exponent data,
//! exponent pattern matching, and exact linear algebra on linear parts of
//! weight-zero fields. None of it shares a code path with the graded solver,
//! which is what makes [`crosscheck`] meaningful.

use crate::algebra::{in_span, rat, Exponent, Gauss, HoloKey, HoloPoly, Rat, RatMatrix};
use crate::fields::{coordinate_rows, grading_element, is_tangent, VectorField, Weight};
use crate::grading::AlgebraReport;
use crate::model::{build_from_pqr, exponent_matrix_det, ModelSurface, PQRSpec};
use num_traits::Zero;
use thiserror::Error;

/// Fixed permutation order: identity, the three transpositions, then the
/// 3-cycles. Entry `i` of a permuted exponent is entry `perm[i]` of the
/// original.
pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

#[derive(Debug, Error)]
pub enum StructureError {
    /// A decomposition guaranteed by the rotation theorem failed — this must
    /// never fire on a valid monomial `PQR` model.
    #[error("rotation decomposition violation: {0}")]
    TheoremViolation(String),
}

// ---------------------------------------------------------------------------
// Rotation decomposition
// ---------------------------------------------------------------------------

/// Decomposition `X = D + N` of a rotation into its diagonal and
/// off-diagonal parts, with `N` either nilpotent or split into two nilpotent
/// tangent pieces.
#[derive(Clone, Debug)]
pub struct RotationDecomposition {
    pub diagonal: VectorField,
    pub offdiag: VectorField,
    /// Present when `N` itself is not nilpotent: `N = N₁ + N₂`.
    pub split: Option<(VectorField, VectorField)>,
    pub n_is_nilpotent: bool,
}

/// Real dimensions of the weight-zero rotation spaces: real-diagonal
/// (s-part), imaginary-diagonal (t-part) and off-diagonal subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotationSpaceInfo {
    pub s_dim: usize,
    pub t_dim: usize,
    pub offdiag_dim: usize,
}

fn matrix_mul(a: &[Vec<Gauss>], b: &[Vec<Gauss>]) -> Vec<Vec<Gauss>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Gauss::zero();
                    for (k, bk) in b.iter().enumerate() {
                        acc += &(&a[i][k] * &bk[j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// A complex `n×n` matrix is nilpotent iff its `n`-th power vanishes.
pub fn is_nilpotent(m: &[Vec<Gauss>]) -> bool {
    let n = m.len();
    let mut p = m.to_vec();
    for _ in 1..n {
        p = matrix_mul(&p, m);
    }
    p.iter().all(|row| row.iter().all(|c| c.is_zero()))
}

fn linear_field(n: usize, matrix: &[Vec<Gauss>]) -> VectorField {
    let f = (0..n)
        .map(|j| {
            let mut p = HoloPoly::zero(n);
            for (k, c) in matrix[j].iter().enumerate() {
                if !c.is_zero() {
                    p = p.add(&HoloPoly::monomial(
                        n,
                        HoloKey::new(Exponent::unit(n, k), 0),
                        c.clone(),
                    ));
                }
            }
            p
        })
        .collect();
    VectorField::new(f, HoloPoly::zero(n))
}

/// Split a weight-zero tangent field with linear `z`-part into `X = D + N`.
///
/// Any `∂/∂w` component and non-linear tail are projected out first. `D` and
/// `N` must each be tangent, and `N` must be nilpotent or decompose into two
/// nilpotent tangent pieces over the six off-diagonal slots; failure is a
/// theorem violation.
pub fn split_rotation(
    x: &VectorField,
    m: &ModelSurface,
) -> Result<RotationDecomposition, StructureError> {
    let n = m.n();
    let lin = x.linear_part();
    let mut dmat = vec![vec![Gauss::zero(); n]; n];
    let mut nmat = vec![vec![Gauss::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            if j == k {
                dmat[j][k] = lin[j][k].clone();
            } else {
                nmat[j][k] = lin[j][k].clone();
            }
        }
    }
    let diagonal = linear_field(n, &dmat);
    let offdiag = linear_field(n, &nmat);
    if !is_tangent(&diagonal, m) {
        return Err(StructureError::TheoremViolation(
            "diagonal part is not tangent".into(),
        ));
    }
    if !is_tangent(&offdiag, m) {
        return Err(StructureError::TheoremViolation(
            "off-diagonal part is not tangent".into(),
        ));
    }
    if is_nilpotent(&nmat) {
        return Ok(RotationDecomposition {
            diagonal,
            offdiag,
            split: None,
            n_is_nilpotent: true,
        });
    }
    // Index-subset search over the nonzero off-diagonal slots, smallest
    // subsets first, lexicographic within a size.
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .filter(|&(j, k)| j != k && !nmat[j][k].is_zero())
        .collect();
    let total = slots.len();
    let mut masks: Vec<u32> = (1..(1u32 << total) - 1).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let mut m1 = vec![vec![Gauss::zero(); n]; n];
        let mut m2 = vec![vec![Gauss::zero(); n]; n];
        for (bit, &(j, k)) in slots.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                m1[j][k] = nmat[j][k].clone();
            } else {
                m2[j][k] = nmat[j][k].clone();
            }
        }
        if !is_nilpotent(&m1) || !is_nilpotent(&m2) {
            continue;
        }
        let n1 = linear_field(n, &m1);
        let n2 = linear_field(n, &m2);
        if is_tangent(&n1, m) && is_tangent(&n2, m) {
            return Ok(RotationDecomposition {
                diagonal,
                offdiag,
                split: Some((n1, n2)),
                n_is_nilpotent: false,
            });
        }
    }
    Err(StructureError::TheoremViolation(
        "off-diagonal part does not split into two nilpotent tangent rotations".into(),
    ))
}

/// Rotation-space dimensions from a rigid weight-zero basis: intersect the
/// real span of the linear parts with the real-diagonal and
/// imaginary-diagonal subspaces, and project onto the off-diagonal slots.
///
/// Only rigid fields enter — rotations are rigid by definition, so the
/// grading element (which carries `w ∂/∂w`) never contributes a spurious
/// diagonal here.
pub fn rotation_space_info(g0_rigid: &[VectorField]) -> RotationSpaceInfo {
    if g0_rigid.is_empty() {
        return RotationSpaceInfo {
            s_dim: 0,
            t_dim: 0,
            offdiag_dim: 0,
        };
    }
    let n = g0_rigid[0].n();
    let mats: Vec<Vec<Vec<Gauss>>> = g0_rigid.iter().map(|x| x.linear_part()).collect();
    let k = mats.len();

    // Build constraint matrices over the combination coefficients c_i. Each
    // selected coordinate (j, k, re/im) contributes one row.
    let kernel_dim = |select: &dyn Fn(usize, usize) -> (bool, bool)| -> usize {
        let mut m = RatMatrix::new(k);
        for j in 0..n {
            for l in 0..n {
                let (want_re, want_im) = select(j, l);
                if want_re {
                    let row: Vec<(usize, Rat)> = (0..k)
                        .map(|i| (i, mats[i][j][l].re.clone()))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    if !row.is_empty() {
                        m.push_row(row);
                    }
                }
                if want_im {
                    let row: Vec<(usize, Rat)> = (0..k)
                        .map(|i| (i, mats[i][j][l].im.clone()))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    if !row.is_empty() {
                        m.push_row(row);
                    }
                }
            }
        }
        m.kernel_basis().len()
    };

    // Combinations with vanishing linear part.
    let k_zero = kernel_dim(&|_, _| (true, true));
    // Landing in the real-diagonal space: off-diagonal zero, diagonal im zero.
    let k_real = kernel_dim(&|j, l| if j == l { (false, true) } else { (true, true) });
    // Landing in the imaginary-diagonal space.
    let k_imag = kernel_dim(&|j, l| if j == l { (true, false) } else { (true, true) });
    // Vanishing off-diagonal projection.
    let k_off = kernel_dim(&|j, l| if j == l { (false, false) } else { (true, true) });

    RotationSpaceInfo {
        s_dim: k_real - k_zero,
        t_dim: k_imag - k_zero,
        offdiag_dim: k - k_off,
    }
}

/// `(has_real_diagonal, has_imaginary_diagonal)` rotation flags from a rigid
/// weight-zero basis.
pub fn diagonal_rotation_flags(g0_rigid: &[VectorField]) -> (bool, bool) {
    let info = rotation_space_info(g0_rigid);
    (info.s_dim > 0, info.t_dim > 0)
}

// ---------------------------------------------------------------------------
// Normal-form classification
// ---------------------------------------------------------------------------

/// The three exponent families admitting nilpotent rotations, with their
/// parameter counts 3, 2, 1; `NoneOfThem` predicts no off-diagonal rotations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Family1,
    Family2,
    Family3,
    NoneOfThem,
}

/// Result of matching a spec against the normal-form families under variable
/// permutations and the `P ↔ Q` swap.
#[derive(Clone, Debug)]
pub struct NormalFormClass {
    pub family: Family,
    pub permutation: [usize; 3],
    pub swapped: bool,
    /// `[k]` for families 1 and 2; `[α₂, α₃, γ₂, γ₃]` for family 3.
    pub parameters: Vec<u32>,
}

impl NormalFormClass {
    /// Real parameter count of the off-diagonal rotation space predicted by
    /// the classification: 3, 2, 1, or 0.
    pub fn predicted_offdiag_params(&self) -> usize {
        match self.family {
            Family::Family1 => 3,
            Family::Family2 => 2,
            Family::Family3 => 1,
            Family::NoneOfThem => 0,
        }
    }
}

fn is_exp(e: &Exponent, v: [u32; 3]) -> bool {
    e.0 == v
}

/// Match the exponent patterns of the three families, most specific first,
/// in a fixed deterministic order over `(family, permutation, swap)`.
///
/// The families require degree at least 4; the degree-2 hyperquadric (which
/// would formally fit every family with `k = 0`) sits outside this
/// classification and reports `NoneOfThem`.
pub fn classify_normal_form(spec: &PQRSpec) -> NormalFormClass {
    type Matcher = fn(&PQRSpec) -> Option<Vec<u32>>;
    let family1: Matcher = |s| {
        let k = s.alpha[1];
        (k >= 1
            && is_exp(&s.alpha, [1, k, 0])
            && is_exp(&s.beta, [0, k + 1, 0])
            && is_exp(&s.gamma, [0, k, 1]))
        .then(|| vec![k])
    };
    let family2: Matcher = |s| {
        let k = s.alpha[2];
        (k >= 1
            && is_exp(&s.alpha, [1, 0, k])
            && is_exp(&s.beta, [0, 1, k])
            && is_exp(&s.gamma, [0, 0, k + 1]))
        .then(|| vec![k])
    };
    let family3: Matcher = |s| {
        let (a2, a3) = (s.alpha[1], s.alpha[2]);
        (a2 + a3 >= 1
            && is_exp(&s.alpha, [1, a2, a3])
            && is_exp(&s.beta, [0, a2 + 1, a3])
            && s.gamma[0] == 0)
        .then(|| vec![a2, a3, s.gamma[1], s.gamma[2]])
    };
    for (family, matcher) in [
        (Family::Family1, family1),
        (Family::Family2, family2),
        (Family::Family3, family3),
    ] {
        for perm in PERMUTATIONS {
            for swapped in [false, true] {
                let cand = if swapped {
                    spec.swapped().permuted(&perm)
                } else {
                    spec.permuted(&perm)
                };
                if let Some(parameters) = matcher(&cand) {
                    return NormalFormClass {
                        family,
                        permutation: perm,
                        swapped,
                        parameters,
                    };
                }
            }
        }
    }
    NormalFormClass {
        family: Family::NoneOfThem,
        permutation: PERMUTATIONS[0],
        swapped: false,
        parameters: Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// Closed-form dimension predictors
// ---------------------------------------------------------------------------

/// Why a generalized-rotation prediction came out as it did.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GcReason {
    Generic,
    /// `deg P = deg Q` forces `g_c = 0`.
    DegreesEqual,
}

/// Predicted generalized-rotation space: dimension (0..=3) and generators.
#[derive(Clone, Debug)]
pub struct GcPrediction {
    pub dim: usize,
    pub generators: Vec<VectorField>,
    pub reason: GcReason,
}

/// Predict `dim g_c` and its generators by the two Cramer systems on the
/// transposed Jacobian: `X(P) = αR, X(R) = −ᾱQ, X(Q) = 0` (two real
/// parameters) and `X(P) = icQ, X(Q) = X(R) = 0` (one real parameter).
/// Solutions of the linear system over the function field count only when
/// every component divides out to a genuine polynomial.
pub fn predict_gc(spec: &PQRSpec) -> GcPrediction {
    assert!(
        !exponent_matrix_det(spec).is_zero(),
        "predict_gc requires a nondegenerate spec"
    );
    if spec.alpha.total() == spec.beta.total() {
        return GcPrediction {
            dim: 0,
            generators: Vec::new(),
            reason: GcReason::DegreesEqual,
        };
    }
    // Orient so deg P < deg Q.
    let oriented = if spec.alpha.total() < spec.beta.total() {
        spec.clone()
    } else {
        spec.swapped()
    };
    let surface = build_from_pqr(&oriented).expect("validated spec");
    let p = oriented.p();
    let q = oriented.q();
    let r = oriented.r();
    let rows: Vec<Vec<HoloPoly>> = [&p, &r, &q]
        .iter()
        .map(|h| (0..3).map(|j| h.partial_z(j)).collect())
        .collect();
    let delta = crate::algebra::holo_det(&rows).expect("3x3");
    let (dkey, dcoeff) = delta
        .as_monomial()
        .map(|(k, c)| (k.clone(), c.clone()))
        .expect("Jacobian of a nondegenerate monomial triple is a monomial");

    let solve = |rhs: [HoloPoly; 3]| -> Option<VectorField> {
        let mut f = Vec::with_capacity(3);
        for col in 0..3 {
            let mut m = rows.clone();
            for (i, rhs_i) in rhs.iter().enumerate() {
                m[i][col] = rhs_i.clone();
            }
            let num = crate::algebra::holo_det(&m).expect("3x3");
            f.push(num.div_by_monomial(&dkey.z, &dcoeff)?);
        }
        Some(VectorField::new(f, HoloPoly::zero(3)))
    };

    let mut generators = Vec::new();
    // Case X(P) = αR, X(R) = βQ with β = −ᾱ: real basis α = 1 and α = i.
    for alpha in [Gauss::one(), Gauss::i()] {
        let beta = -&alpha.conj();
        if let Some(x) = solve([r.scale(&alpha), q.scale(&beta), HoloPoly::zero(3)]) {
            assert!(is_tangent(&x, &surface), "case-1 generator must be tangent");
            generators.push(x);
        }
    }
    // Case X(P) = αQ with α = ic: real basis c = 1.
    if let Some(x) = solve([q.scale(&Gauss::i()), HoloPoly::zero(3), HoloPoly::zero(3)]) {
        assert!(is_tangent(&x, &surface), "case-2 generator must be tangent");
        generators.push(x);
    }
    GcPrediction {
        dim: generators.len(),
        generators,
        reason: GcReason::Generic,
    }
}

/// Predicted dimension of `g_{−1/d}`.
#[derive(Clone, Copy, Debug)]
pub struct GMinusPrediction {
    pub dim: usize,
    /// False for degree 2: the hyperquadric is Levi-nondegenerate and the
    /// linear-P criterion does not apply to it.
    pub applicable: bool,
}

/// `dim g_{−1/d} = 2` exactly when, after a variable permutation, `P` (or
/// `Q`) is `c·z_i` with the other two data independent of `z_i`; otherwise 0.
pub fn predict_g_minus(spec: &PQRSpec) -> GMinusPrediction {
    if spec.degree() == 2 {
        return GMinusPrediction {
            dim: 0,
            applicable: false,
        };
    }
    let linear_slot = |e: &Exponent, other1: &Exponent, other2: &Exponent| -> bool {
        (0..3).any(|i| {
            e.total() == 1 && e[i] == 1 && other1[i] == 0 && other2[i] == 0
        })
    };
    let dim = if linear_slot(&spec.alpha, &spec.beta, &spec.gamma)
        || linear_slot(&spec.beta, &spec.alpha, &spec.gamma)
    {
        2
    } else {
        0
    };
    GMinusPrediction {
        dim,
        applicable: true,
    }
}

/// The weight-one generator `Y = Σ λ_j z_j w ∂/∂z_j + ½ w² ∂/∂w`, with `λ`
/// solving `λ·α = λ·β = λ·γ = 1/2`. The system is Cramer-solvable exactly
/// when the exponent matrix is invertible; the result is verified tangent.
pub fn g1_generator(spec: &PQRSpec) -> VectorField {
    let det = exponent_matrix_det(spec);
    assert!(!det.is_zero(), "g1 generator requires a nondegenerate spec");
    // Solve A λ = (1/2, 1/2, 1/2) with rows α, β, γ by Cramer's rule.
    let a: Vec<Vec<Rat>> = [&spec.alpha, &spec.beta, &spec.gamma]
        .iter()
        .map(|e| e.iter().map(|&v| Rat::from_integer(v.into())).collect())
        .collect();
    let det3 = |m: &Vec<Vec<Rat>>| -> Rat {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let rhs = rat(1, 2);
    let mut lambda = Vec::with_capacity(3);
    for col in 0..3 {
        let mut m = a.clone();
        for row in m.iter_mut() {
            row[col] = rhs.clone();
        }
        lambda.push(det3(&m) / det3(&a));
    }
    let f = (0..3)
        .map(|j| {
            HoloPoly::monomial(
                3,
                HoloKey::new(Exponent::unit(3, j), 1),
                Gauss::from_rat(lambda[j].clone()),
            )
        })
        .collect();
    let y = VectorField::new(
        f,
        HoloPoly::monomial(
            3,
            HoloKey::new(Exponent::zeros(3), 2),
            Gauss::from_rat(rat(1, 2)),
        ),
    );
    let surface = build_from_pqr(spec).expect("validated spec");
    assert!(
        is_tangent(&y, &surface),
        "weight-one generator must be tangent"
    );
    y
}

// ---------------------------------------------------------------------------
// Assembled predictions and the solver crosscheck
// ---------------------------------------------------------------------------

/// Closed-form predictions plus rotation measurements for one model.
#[derive(Clone, Debug)]
pub struct StructuralPrediction {
    pub gc: GcPrediction,
    pub g_minus: GMinusPrediction,
    pub g1_field: VectorField,
    pub normal_form: NormalFormClass,
    /// `(has_real_diagonal, has_imaginary_diagonal)` from the solver's rigid
    /// weight-zero basis.
    pub flags: (bool, bool),
    pub rotation_info: RotationSpaceInfo,
    pub decompositions: Vec<RotationDecomposition>,
}

/// A failed theorem or consistency check; any nonempty list fails CI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: String,
    pub detail: String,
}

/// Checks deliberately not run for a model, with the reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedCheck {
    pub check: String,
    pub reason: String,
}

/// Outcome of [`crosscheck`].
#[derive(Clone, Debug, Default)]
pub struct CrosscheckOutcome {
    pub discrepancies: Vec<Discrepancy>,
    pub skipped: Vec<SkippedCheck>,
}

impl CrosscheckOutcome {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn rigid_g0(report: &AlgebraReport) -> Vec<VectorField> {
    report
        .component(&Weight::from_index(report.d, report.d))
        .map(|c| c.rigid_basis.clone())
        .unwrap_or_default()
}

/// Build the structural predictions for a monomial `PQR` model, given the
/// solver's report (used only for the rotation measurements).
pub fn predict(spec: &PQRSpec, report: &AlgebraReport) -> StructuralPrediction {
    let g0_rigid = rigid_g0(report);
    let surface = build_from_pqr(spec).expect("validated spec");
    let decompositions = g0_rigid
        .iter()
        .filter_map(|x| split_rotation(x, &surface).ok())
        .collect();
    StructuralPrediction {
        gc: predict_gc(spec),
        g_minus: predict_g_minus(spec),
        g1_field: g1_generator(spec),
        normal_form: classify_normal_form(spec),
        flags: diagonal_rotation_flags(&g0_rigid),
        rotation_info: rotation_space_info(&g0_rigid),
        decompositions,
    }
}

fn field_in_span(basis: &[VectorField], x: &VectorField) -> bool {
    if x.is_zero() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut fields: Vec<&VectorField> = basis.iter().collect();
    fields.push(x);
    let rows = coordinate_rows(&fields, |_, _| true);
    let (basis_rows, x_row) = rows.split_at(basis.len());
    in_span(basis_rows, &x_row[0])
}

/// Model-independent checks shared by every nondegenerate model.
fn general_checks(report: &AlgebraReport, out: &mut CrosscheckOutcome) {
    let d = report.d;
    if report.dim_at_index(0) != 1 {
        out.discrepancies.push(Discrepancy {
            check: "g(-1) dimension".into(),
            detail: format!("expected 1, solver found {}", report.dim_at_index(0)),
        });
    }
    let e = grading_element(report.n, d);
    let g0 = report
        .component(&Weight::from_index(d, d))
        .map(|c| c.component.basis.clone())
        .unwrap_or_default();
    if !field_in_span(&g0, &e) {
        out.discrepancies.push(Discrepancy {
            check: "grading element".into(),
            detail: "E is not in the span of the weight-0 component".into(),
        });
    }
    if report.dim_at_index(2 * d) > 1 {
        out.discrepancies.push(Discrepancy {
            check: "g(1) dimension bound".into(),
            detail: format!("dim g_1 = {} exceeds 1", report.dim_at_index(2 * d)),
        });
    }
    for v in &report.closure_violations {
        out.discrepancies.push(Discrepancy {
            check: "bracket closure".into(),
            detail: v.clone(),
        });
    }
    for c in &report.extended_components {
        if c.dim != 0 {
            out.discrepancies.push(Discrepancy {
                check: "weight cap".into(),
                detail: format!("nonzero component of weight {} above 1", c.weight),
            });
        }
    }
    // Implication theorems on the rotation flags.
    let g0_rigid = rigid_g0(report);
    let (has_real, has_imag) = diagonal_rotation_flags(&g0_rigid);
    let g1_dim = report.dim_at_index(2 * d);
    if !has_imag && g1_dim != 0 {
        out.discrepancies.push(Discrepancy {
            check: "no-imaginary-diagonal implication".into(),
            detail: format!(
                "no imaginary diagonal rotation but dim g_1 = {}",
                g1_dim
            ),
        });
    }
    if g1_dim != 0 && !has_real && report.gc_dimension != 0 {
        out.discrepancies.push(Discrepancy {
            check: "no-real-diagonal implication".into(),
            detail: format!(
                "g_1 nonzero, no real diagonal rotation, but dim g_c = {}",
                report.gc_dimension
            ),
        });
    }
}

/// Compare the solver's exact output against every structural statement that
/// applies to the model. Discrepancies are data; the caller decides whether
/// they are fatal.
pub fn crosscheck(report: &AlgebraReport, pred: &StructuralPrediction) -> CrosscheckOutcome {
    let mut out = CrosscheckOutcome::default();
    let d = report.d;
    general_checks(report, &mut out);

    // Generalized rotations: 0 ≤ dim g_c ≤ 3 and predictor agreement.
    if report.gc_dimension > 3 {
        out.discrepancies.push(Discrepancy {
            check: "gc bound".into(),
            detail: format!("dim g_c = {} exceeds 3", report.gc_dimension),
        });
    }
    if pred.gc.dim != report.gc_dimension {
        out.discrepancies.push(Discrepancy {
            check: "gc dimension".into(),
            detail: format!(
                "predictor says {}, solver says {}",
                pred.gc.dim, report.gc_dimension
            ),
        });
    }
    // Predicted generators must lie in the rigid part of their component.
    for x in &pred.gc.generators {
        let weight = match x.weight(d) {
            crate::fields::WeightResult::Homogeneous(w) => w,
            _ => {
                out.discrepancies.push(Discrepancy {
                    check: "gc generator weight".into(),
                    detail: "predicted generator is not weighted-homogeneous".into(),
                });
                continue;
            }
        };
        let rigid = report
            .component(&weight)
            .map(|c| c.rigid_basis.clone())
            .unwrap_or_default();
        if !field_in_span(&rigid, x) {
            out.discrepancies.push(Discrepancy {
                check: "gc generator span".into(),
                detail: format!("predicted generator at weight {} not in solver span", weight),
            });
        }
    }

    // Weight −1/d predictor.
    if pred.g_minus.applicable {
        let solver = report.dim_at_index(d - 1);
        if pred.g_minus.dim != solver {
            out.discrepancies.push(Discrepancy {
                check: "g(-1/d) dimension".into(),
                detail: format!(
                    "predictor says {}, solver says {}",
                    pred.g_minus.dim, solver
                ),
            });
        }
    } else {
        out.skipped.push(SkippedCheck {
            check: "g(-1/d) dimension".into(),
            reason: "degree 2: hyperquadric outside the linear-P criterion".into(),
        });
    }

    // Duality of the ±(1 − 1/d)-type components.
    let g_minus_dim = report.dim_at_index(d - 1);
    let g_dual_dim = report.dim_at_index(2 * d - 1);
    if (g_minus_dim > 0) != (g_dual_dim > 0) {
        out.discrepancies.push(Discrepancy {
            check: "duality".into(),
            detail: format!(
                "dim g_(-1/d) = {} but dim g_(1-1/d) = {}",
                g_minus_dim, g_dual_dim
            ),
        });
    }

    // Weight 1: dimension exactly 1 with the predicted generator in span.
    let g1_dim = report.dim_at_index(2 * d);
    if g1_dim != 1 {
        out.discrepancies.push(Discrepancy {
            check: "g(1) dimension".into(),
            detail: format!("expected exactly 1, solver found {}", g1_dim),
        });
    }
    let g1_basis = report
        .component(&Weight::from_index(2 * d, d))
        .map(|c| c.component.basis.clone())
        .unwrap_or_default();
    if !field_in_span(&g1_basis, &pred.g1_field) {
        out.discrepancies.push(Discrepancy {
            check: "g(1) generator span".into(),
            detail: "closed-form generator not in the solver's weight-1 span".into(),
        });
    }

    // Rotation decomposition for every rigid weight-zero basis field.
    let g0_rigid = rigid_g0(report);
    if pred.decompositions.len() != g0_rigid.len() {
        out.discrepancies.push(Discrepancy {
            check: "rotation decomposition".into(),
            detail: format!(
                "{} of {} rigid weight-0 fields decompose",
                pred.decompositions.len(),
                g0_rigid.len()
            ),
        });
    }

    // Normal-form parameter counts against the measured off-diagonal space.
    if d == 2 {
        out.skipped.push(SkippedCheck {
            check: "normal-form parameter count".into(),
            reason: "degree 2: hyperquadric outside the nilpotent classification".into(),
        });
    } else if pred.normal_form.predicted_offdiag_params() != pred.rotation_info.offdiag_dim {
        out.discrepancies.push(Discrepancy {
            check: "normal-form parameter count".into(),
            detail: format!(
                "family {:?} predicts {} off-diagonal parameters, solver measures {}",
                pred.normal_form.family,
                pred.normal_form.predicted_offdiag_params(),
                pred.rotation_info.offdiag_dim
            ),
        });
    }

    out
}

/// Crosscheck for models given only by a defining function (no monomial
/// `PQR` decomposition known): only the universally valid checks run.
pub fn crosscheck_general(report: &AlgebraReport) -> CrosscheckOutcome {
    let mut out = CrosscheckOutcome::default();
    general_checks(report, &mut out);
    for check in [
        "gc dimension",
        "g(-1/d) dimension",
        "duality",
        "g(1) dimension",
        "rotation decomposition",
        "normal-form parameter count",
    ] {
        out.skipped.push(SkippedCheck {
            check: check.into(),
            reason: "no monomial PQR decomposition available".into(),
        });
    }
    out
}
