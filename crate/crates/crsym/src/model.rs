//! Model hypersurfaces `Im w = Φ(z, z̄)`, the monomial `PQR` special form,
//! and holomorphic-nondegeneracy certification.
//!
//! A valid defining function is a nonzero real homogeneous polynomial of
//! degree `d ≥ 2` in `(z, z̄)` jointly, without pluriharmonic terms (no
//! monomial purely in `z` or purely in `z̄`). The fundamental degree `d` is
//! always derived from `Φ`, never user-supplied.

use crate::algebra::{
    holo_det, rat_int, AlgebraError, Exponent, Gauss, HoloPoly, MixedKey, MixedPoly, Rat,
    RatMatrix,
};
use crate::fields::VectorField;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A validated model hypersurface `Im w = Φ(z, z̄)` in `C^{n+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelSurface {
    n: usize,
    d: u32,
    phi: MixedPoly,
}

impl ModelSurface {
    /// Validate `phi` and derive the fundamental degree.
    pub fn from_phi(phi: MixedPoly) -> Result<Self, ModelError> {
        let violations = validate_phi(&phi);
        if !violations.is_empty() {
            return Err(ModelError::Validation(violations));
        }
        let d = phi.degree().expect("nonzero by validation");
        Ok(ModelSurface {
            n: phi.n(),
            d,
            phi,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Fundamental degree `d` of `Φ`.
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn phi(&self) -> &MixedPoly {
        &self.phi
    }

    /// Re-check all invariants; empty iff valid (always, post-construction).
    pub fn validate(&self) -> Vec<Violation> {
        validate_phi(&self.phi)
    }
}

/// A named invariant violation, carrying the offending term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Coefficient of `z^a z̄^b u^k` is not the conjugate of its mirror term.
    NotReal { term: String },
    /// A monomial purely in `z` or purely in `z̄`.
    Pluriharmonic { term: String },
    /// A term whose total degree differs from the leading degree.
    Inhomogeneous { term: String, expected: u32 },
    /// The defining function must not involve `u`.
    DependsOnU { term: String },
    /// `Φ = 0`.
    Zero,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotReal { term } => write!(f, "not real at term {}", term),
            Violation::Pluriharmonic { term } => write!(f, "pluriharmonic term {}", term),
            Violation::Inhomogeneous { term, expected } => {
                write!(f, "term {} breaks homogeneity of degree {}", term, expected)
            }
            Violation::DependsOnU { term } => write!(f, "term {} depends on u", term),
            Violation::Zero => write!(f, "defining function is zero"),
        }
    }
}

fn term_name(n: usize, key: &MixedKey) -> String {
    MixedPoly::monomial(n, key.clone(), Gauss::one()).to_string()
}

/// Check all `ModelSurface` invariants of a candidate defining function.
pub fn validate_phi(phi: &MixedPoly) -> Vec<Violation> {
    let mut out = Vec::new();
    if phi.is_zero() {
        out.push(Violation::Zero);
        return out;
    }
    let n = phi.n();
    let d = phi
        .terms()
        .next()
        .map(|(k, _)| k.total())
        .expect("nonzero");
    for (k, c) in phi.terms() {
        if k.u > 0 {
            out.push(Violation::DependsOnU {
                term: term_name(n, k),
            });
            continue;
        }
        if k.total() != d {
            out.push(Violation::Inhomogeneous {
                term: term_name(n, k),
                expected: d,
            });
        }
        if k.z.is_zero() || k.zb.is_zero() {
            out.push(Violation::Pluriharmonic {
                term: term_name(n, k),
            });
        }
        if phi.coeff(&k.conjugate()) != c.conj() {
            out.push(Violation::NotReal {
                term: term_name(n, k),
            });
        }
    }
    out
}

/// The monomial triple `P = c_P z^α`, `Q = c_Q z^β`, `R = c_R z^γ` defining
/// `Im w = PQ̄ + QP̄ + RR̄` in `C⁴`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PQRSpec {
    pub alpha: Exponent,
    pub beta: Exponent,
    pub gamma: Exponent,
    pub c_p: Gauss,
    pub c_q: Gauss,
    pub c_r: Gauss,
}

impl PQRSpec {
    pub fn new(
        alpha: Exponent,
        beta: Exponent,
        gamma: Exponent,
        c_p: Gauss,
        c_q: Gauss,
        c_r: Gauss,
    ) -> Result<Self, ModelError> {
        if alpha.len() != 3 || beta.len() != 3 || gamma.len() != 3 {
            return Err(ModelError::BadSpec(
                "exponent vectors must have length 3".into(),
            ));
        }
        if c_p.is_zero() || c_q.is_zero() || c_r.is_zero() {
            return Err(ModelError::BadSpec("coefficients must be nonzero".into()));
        }
        if alpha.total() + beta.total() != 2 * gamma.total() {
            return Err(ModelError::BadSpec(format!(
                "joint homogeneity requires |alpha| + |beta| = 2|gamma|, got {} + {} vs 2*{}",
                alpha.total(),
                beta.total(),
                gamma.total()
            )));
        }
        if alpha.total() == 0 || beta.total() == 0 {
            return Err(ModelError::BadSpec(
                "|alpha| and |beta| must be positive (pluriharmonic terms are not allowed)".into(),
            ));
        }
        Ok(PQRSpec {
            alpha,
            beta,
            gamma,
            c_p,
            c_q,
            c_r,
        })
    }

    /// With unit coefficients.
    pub fn monic(alpha: Exponent, beta: Exponent, gamma: Exponent) -> Result<Self, ModelError> {
        Self::new(alpha, beta, gamma, Gauss::one(), Gauss::one(), Gauss::one())
    }

    pub fn p(&self) -> HoloPoly {
        HoloPoly::monomial(
            3,
            crate::algebra::HoloKey::new(self.alpha.clone(), 0),
            self.c_p.clone(),
        )
    }

    pub fn q(&self) -> HoloPoly {
        HoloPoly::monomial(
            3,
            crate::algebra::HoloKey::new(self.beta.clone(), 0),
            self.c_q.clone(),
        )
    }

    pub fn r(&self) -> HoloPoly {
        HoloPoly::monomial(
            3,
            crate::algebra::HoloKey::new(self.gamma.clone(), 0),
            self.c_r.clone(),
        )
    }

    /// Degree `d = |α| + |β| = 2|γ|` of the induced defining function.
    pub fn degree(&self) -> u32 {
        self.alpha.total() + self.beta.total()
    }

    /// Swap the roles of `P` and `Q`; the induced surface is unchanged.
    pub fn swapped(&self) -> PQRSpec {
        PQRSpec {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            gamma: self.gamma.clone(),
            c_p: self.c_q.clone(),
            c_q: self.c_p.clone(),
            c_r: self.c_r.clone(),
        }
    }

    /// Apply a variable permutation to all three exponent vectors.
    pub fn permuted(&self, perm: &[usize]) -> PQRSpec {
        PQRSpec {
            alpha: self.alpha.permute(perm),
            beta: self.beta.permute(perm),
            gamma: self.gamma.permute(perm),
            c_p: self.c_p.clone(),
            c_q: self.c_q.clone(),
            c_r: self.c_r.clone(),
        }
    }
}

/// Build the model surface `Im w = PQ̄ + QP̄ + RR̄` from a validated spec:
/// `Φ = c_P c̄_Q z^α z̄^β + c_Q c̄_P z^β z̄^α + |c_R|² z^γ z̄^γ`.
pub fn build_from_pqr(spec: &PQRSpec) -> Result<ModelSurface, ModelError> {
    let n = 3;
    let t1 = MixedPoly::monomial(
        n,
        MixedKey::new(spec.alpha.clone(), spec.beta.clone(), 0),
        &spec.c_p * &spec.c_q.conj(),
    );
    let t2 = MixedPoly::monomial(
        n,
        MixedKey::new(spec.beta.clone(), spec.alpha.clone(), 0),
        &spec.c_q * &spec.c_p.conj(),
    );
    let t3 = MixedPoly::monomial(
        n,
        MixedKey::new(spec.gamma.clone(), spec.gamma.clone(), 0),
        &spec.c_r * &spec.c_r.conj(),
    );
    ModelSurface::from_phi(t1.add(&t2).add(&t3))
}

/// Witness attached to a nondegeneracy verdict.
#[derive(Clone, Debug)]
pub enum NondegWitness {
    /// A nonvanishing Jacobian-type determinant certifying nondegeneracy.
    JacobianDet(HoloPoly),
    /// The nonzero exponent-matrix determinant (monomial case).
    ExponentDet(Rat),
    /// A nonzero holomorphic field tangent to the surface (degenerate case).
    TangentField(VectorField),
    /// Degenerate, but no explicit witness is constructed (n ≠ 3).
    Unavailable,
}

/// Verdict of the holomorphic-nondegeneracy test, with a witness.
#[derive(Clone, Debug)]
pub struct NondegeneracyCertificate {
    pub nondegenerate: bool,
    pub witness: NondegWitness,
}

/// Determinant of the 3×3 integer matrix whose columns are `α`, `β`, `γ`.
/// The surface is holomorphically nondegenerate iff this is nonzero.
pub fn exponent_matrix_det(spec: &PQRSpec) -> Rat {
    let c = [&spec.alpha, &spec.beta, &spec.gamma];
    let m = |i: usize, j: usize| i64::from(c[j][i]);
    let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    rat_int(det)
}

/// Holomorphic-nondegeneracy test for a `PQR` triple via the symbolic
/// Jacobian: nondegenerate iff `det ∂(P,Q,R)/∂(z1,z2,z3) ≠ 0` as a
/// polynomial. In the degenerate case a tangent witness field with
/// `X(P) = X(Q) = X(R) = 0` is produced.
pub fn jacobian_nondegenerate(
    p: &HoloPoly,
    q: &HoloPoly,
    r: &HoloPoly,
) -> Result<NondegeneracyCertificate, AlgebraError> {
    if p.n() != 3 || q.n() != 3 || r.n() != 3 {
        return Err(AlgebraError::Dimension(
            "jacobian test requires exactly 3 z-variables".into(),
        ));
    }
    if p.w_degree() > 0 || q.w_degree() > 0 || r.w_degree() > 0 {
        return Err(AlgebraError::Dimension(
            "P, Q, R must be holomorphic in z only".into(),
        ));
    }
    let rows: Vec<Vec<HoloPoly>> = [p, q, r]
        .iter()
        .map(|h| (0..3).map(|j| h.partial_z(j)).collect())
        .collect();
    let det = holo_det(&rows).expect("3x3");
    if !det.is_zero() {
        return Ok(NondegeneracyCertificate {
            nondegenerate: true,
            witness: NondegWitness::JacobianDet(det),
        });
    }
    let field = degenerate_witness(&rows);
    for h in [p, q, r] {
        assert!(
            field.apply(h).is_zero(),
            "degenerate witness must annihilate P, Q, R"
        );
    }
    Ok(NondegeneracyCertificate {
        nondegenerate: false,
        witness: NondegWitness::TangentField(field),
    })
}

/// Kernel field of a rank-deficient 3-column gradient matrix.
fn degenerate_witness(rows: &[Vec<HoloPoly>]) -> VectorField {
    let n = 3;
    // Rank 2: the cross product of two independent rows spans the kernel.
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let c = cross(&rows[i], &rows[j]);
            if c.iter().any(|p| !p.is_zero()) && annihilates(rows, &c) {
                return VectorField::new(c, HoloPoly::zero(n));
            }
        }
    }
    // Rank ≤ 1: any vector orthogonal to the single gradient direction.
    if let Some(row) = rows.iter().find(|r| r.iter().any(|p| !p.is_zero())) {
        let zero = HoloPoly::zero(n);
        let candidates = [
            vec![row[1].neg(), row[0].clone(), zero.clone()],
            vec![row[2].neg(), zero.clone(), row[0].clone()],
            vec![zero.clone(), row[2].neg(), row[1].clone()],
        ];
        for c in candidates {
            if c.iter().any(|p| !p.is_zero()) && annihilates(rows, &c) {
                return VectorField::new(c, HoloPoly::zero(n));
            }
        }
    }
    // Rank 0: everything is constant in z.
    VectorField::d_z(n, 0)
}

fn cross(a: &[HoloPoly], b: &[HoloPoly]) -> Vec<HoloPoly> {
    vec![
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn annihilates(rows: &[Vec<HoloPoly>], f: &[HoloPoly]) -> bool {
    rows.iter().all(|row| {
        let mut acc = HoloPoly::zero(f[0].n());
        for (rj, fj) in row.iter().zip(f) {
            acc = acc.add(&rj.mul(fj));
        }
        acc.is_zero()
    })
}

/// Holomorphic-nondegeneracy test for a general model surface.
///
/// Writing `Φ = Σ_b H_b(z) z̄^b`, the surface is holomorphically degenerate
/// iff some nonzero holomorphic field annihilates every coefficient
/// polynomial `H_b`, i.e. iff the gradient matrix of the family has generic
/// rank `< n` over the function field.
pub fn surface_nondegenerate(m: &ModelSurface) -> NondegeneracyCertificate {
    let n = m.n();
    let mut groups: BTreeMap<Exponent, HoloPoly> = BTreeMap::new();
    for (k, c) in m.phi().terms() {
        let mono = HoloPoly::monomial(n, crate::algebra::HoloKey::new(k.z.clone(), 0), c.clone());
        groups
            .entry(k.zb.clone())
            .and_modify(|h| *h = h.add(&mono))
            .or_insert(mono);
    }
    let rows: Vec<Vec<HoloPoly>> = groups
        .values()
        .map(|h| (0..n).map(|j| h.partial_z(j)).collect())
        .collect();
    if let Some(det) = nonzero_minor(&rows, n) {
        return NondegeneracyCertificate {
            nondegenerate: true,
            witness: NondegWitness::JacobianDet(det),
        };
    }
    if n == 3 {
        let field = degenerate_witness(&rows);
        assert!(
            annihilates(&rows, &field.f),
            "degenerate witness must annihilate all coefficient polynomials"
        );
        NondegeneracyCertificate {
            nondegenerate: false,
            witness: NondegWitness::TangentField(field),
        }
    } else {
        NondegeneracyCertificate {
            nondegenerate: false,
            witness: NondegWitness::Unavailable,
        }
    }
}

/// First nonzero `n×n` minor over all row subsets (lexicographic order of
/// index sets), or `None` if the matrix has generic rank `< n`.
fn nonzero_minor(rows: &[Vec<HoloPoly>], n: usize) -> Option<HoloPoly> {
    if rows.len() < n {
        return None;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let sub: Vec<Vec<HoloPoly>> = idx.iter().map(|&i| rows[i].clone()).collect();
        let det = holo_det(&sub).expect("square");
        if !det.is_zero() {
            return Some(det);
        }
        if !next_combination(&mut idx, rows.len()) {
            return None;
        }
    }
}

/// Advance `idx` to the next k-combination of `0..m`; false when exhausted.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + m - k {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Degenerate witness for a monomial triple: `X = Σ λ_j z_j ∂/∂z_j` with an
/// integer vector `λ` in the kernel of the transposed exponent matrix.
pub fn monomial_degenerate_witness(spec: &PQRSpec) -> Option<VectorField> {
    let mut m = RatMatrix::new(3);
    for e in [&spec.alpha, &spec.beta, &spec.gamma] {
        m.push_row(
            e.iter()
                .enumerate()
                .map(|(j, &v)| (j, rat_int(i64::from(v))))
                .filter(|(_, v)| !num_traits::Zero::is_zero(v))
                .collect(),
        );
    }
    let basis = m.kernel_basis();
    let lambda = basis.first()?;
    let f = (0..3)
        .map(|j| HoloPoly::z_var(3, j).scale(&Gauss::from_rat(lambda[j].clone())))
        .collect();
    Some(VectorField::new(f, HoloPoly::zero(3)))
}

/// Errors from model construction and validation.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid defining function: {}", render_violations(.0))]
    Validation(Vec<Violation>),
    #[error("invalid PQR spec: {0}")]
    BadSpec(String),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HoloKey;
    use num_traits::Zero;

    fn exp(e: [u32; 3]) -> Exponent {
        Exponent::new(e.to_vec())
    }

    fn mono(z: [u32; 3], zb: [u32; 3], c: Gauss) -> MixedPoly {
        MixedPoly::monomial(3, MixedKey::new(exp(z), exp(zb), 0), c)
    }

    #[test]
    fn build_linear_p_model() {
        // α = e1, β = 3e2, γ = e2+e3, unit coefficients:
        // Im w = z1 z̄2³ + z2³ z̄1 + z2 z3 z̄2 z̄3, degree 4.
        let spec =
            PQRSpec::monic(exp([1, 0, 0]), exp([0, 3, 0]), exp([0, 1, 1])).unwrap();
        let m = build_from_pqr(&spec).unwrap();
        assert_eq!(m.d(), 4);
        assert_eq!(m.phi().num_terms(), 3);
        assert!(m.phi().is_real());
        assert!(m.validate().is_empty());
        // Swapping (α, c_P) ↔ (β, c_Q) leaves the surface unchanged.
        let swapped = build_from_pqr(&spec.swapped()).unwrap();
        assert_eq!(m, swapped);
    }

    #[test]
    fn alpha_equal_beta_is_accepted_when_real() {
        let spec =
            PQRSpec::monic(exp([1, 1, 0]), exp([1, 1, 0]), exp([1, 1, 0])).unwrap();
        let m = build_from_pqr(&spec).unwrap();
        assert!(m.phi().is_real());
        // ... but is of course degenerate (equal columns).
        assert!(exponent_matrix_det(&spec).is_zero());
    }

    #[test]
    fn homogeneity_mismatch_is_rejected() {
        // 2|γ| ≠ |α| + |β|
        let err = PQRSpec::monic(exp([1, 0, 0]), exp([0, 3, 0]), exp([0, 1, 0]));
        assert!(err.is_err());
    }

    #[test]
    fn validate_names_offending_terms() {
        // z1 z̄1 + z1² has a pluriharmonic term z1² (and fails realness there).
        let phi = mono([1, 0, 0], [1, 0, 0], Gauss::one())
            .add(&mono([2, 0, 0], [0, 0, 0], Gauss::one()));
        let violations = validate_phi(&phi);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::Pluriharmonic { term } if term == "z1^2")));

        // z1 z̄1 + z1 z2 z̄1 z̄2 is inhomogeneous.
        let phi = mono([1, 0, 0], [1, 0, 0], Gauss::one())
            .add(&mono([1, 1, 0], [1, 1, 0], Gauss::one()));
        let violations = validate_phi(&phi);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::Inhomogeneous { .. })));

        assert_eq!(validate_phi(&MixedPoly::zero(3)), vec![Violation::Zero]);
    }

    #[test]
    fn exponent_dets_match_worked_values() {
        let s = |a, b, g| PQRSpec::monic(exp(a), exp(b), exp(g)).unwrap();
        assert_eq!(
            exponent_matrix_det(&s([1, 1, 2], [2, 1, 3], [1, 1, 3])),
            rat_int(-1)
        );
        assert_eq!(
            exponent_matrix_det(&s([1, 0, 0], [0, 1, 0], [0, 0, 1])),
            rat_int(1)
        );
        assert_eq!(
            exponent_matrix_det(&s([1, 0, 0], [0, 3, 0], [0, 1, 1])),
            rat_int(3)
        );
    }

    #[test]
    fn jacobian_certificate_on_exotic_triple() {
        // P = z1z2z3², Q = z1²z2z3³, R = z1z2z3³: nondegenerate with
        // Jacobian determinant −z1³z2²z3⁷.
        let spec =
            PQRSpec::monic(exp([1, 1, 2]), exp([2, 1, 3]), exp([1, 1, 3])).unwrap();
        let cert = jacobian_nondegenerate(&spec.p(), &spec.q(), &spec.r()).unwrap();
        assert!(cert.nondegenerate);
        match cert.witness {
            NondegWitness::JacobianDet(det) => {
                let expected = HoloPoly::monomial(
                    3,
                    HoloKey::new(exp([3, 2, 7]), 0),
                    Gauss::from_int(-1),
                );
                assert_eq!(det, expected);
            }
            _ => panic!("expected a Jacobian witness"),
        }
    }

    #[test]
    fn jacobian_degenerate_produces_witness() {
        // P = z1, Q = z1², R = z1³: everything independent of z2, z3.
        let p = HoloPoly::z_var(3, 0);
        let q = p.mul(&p);
        let r = q.mul(&p);
        let cert = jacobian_nondegenerate(&p, &q, &r).unwrap();
        assert!(!cert.nondegenerate);
        match cert.witness {
            NondegWitness::TangentField(x) => {
                assert!(x.apply(&p).is_zero());
                assert!(x.f[0].is_zero(), "witness avoids the z1 direction");
            }
            _ => panic!("expected a tangent witness"),
        }
        // Wrong variable count → dimension error.
        assert!(jacobian_nondegenerate(
            &HoloPoly::z_var(2, 0),
            &HoloPoly::z_var(2, 1),
            &HoloPoly::z_var(2, 0)
        )
        .is_err());
    }

    #[test]
    fn monomial_witness_annihilates_triple() {
        let spec =
            PQRSpec::monic(exp([1, 1, 0]), exp([1, 1, 0]), exp([2, 0, 0]))
                .unwrap();
        assert!(exponent_matrix_det(&spec).is_zero());
        let x = monomial_degenerate_witness(&spec).unwrap();
        assert!(!x.is_zero());
        for h in [spec.p(), spec.q(), spec.r()] {
            assert!(x.apply(&h).is_zero());
        }
    }

    #[test]
    fn surface_test_agrees_with_monomial_test() {
        for (a, b, g) in [
            ([1, 0, 0], [0, 3, 0], [0, 1, 1]),
            ([1, 1, 2], [2, 1, 3], [1, 1, 3]),
            ([1, 1, 0], [0, 2, 0], [0, 1, 1]),
            ([1, 1, 0], [1, 1, 2], [1, 1, 1]),
            ([2, 0, 0], [0, 2, 0], [1, 1, 0]),
        ] {
            let spec = PQRSpec::monic(exp(a), exp(b), exp(g)).unwrap();
            let m = build_from_pqr(&spec).unwrap();
            let by_det = !exponent_matrix_det(&spec).is_zero();
            let cert = surface_nondegenerate(&m);
            assert_eq!(cert.nondegenerate, by_det, "disagreement at {:?}", (a, b, g));
        }
    }
}
