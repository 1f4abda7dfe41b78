//! Holomorphic vector fields, weighted grading, tangency residuals, and Lie
//! brackets.
//!
//! A field `X = Σ F_j(z,w) ∂/∂z_j + G(z,w) ∂/∂w` acts on the model
//! `Im w = Φ(z, z̄)`. Its real part is tangent exactly when the residual
//!
//! ```text
//! T(z, z̄, u) = Im[G(z, u + iΦ)] − 2·Re[Σ_j F_j(z, u + iΦ)·Φ_{z_j}]
//! ```
//!
//! vanishes identically, where `w ↦ u + iΦ` is exact binomial substitution.
//! This reduction comes from applying `2·Re X` to the defining function
//! `(w − w̄)/2i − Φ` and restricting to the surface. `T` is always a real
//! polynomial and is real-linear in `X`.
//!
//! Weights follow the convention `weight(z_j) = 1/d`, `weight(w) = 1`: a
//! field has weight `μ` when every `F_j` is weighted-homogeneous of degree
//! `μ + 1/d` and `G` of degree `μ + 1`.

use crate::algebra::{Exponent, Gauss, HoloKey, HoloPoly, MixedPoly, Rat};
use crate::model::ModelSurface;
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// Weighted degree of a homogeneous vector field: a rational of the form
/// `j/d − 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(Rational64);

impl Weight {
    pub fn new(value: Rational64) -> Self {
        Weight(value)
    }

    /// The weight `j/d − 1`.
    pub fn from_index(j: u32, d: u32) -> Self {
        Weight(Rational64::new(i64::from(j), i64::from(d)) - Rational64::from_integer(1))
    }

    /// Recover `j` with `self = j/d − 1`, when integral.
    pub fn index(&self, d: u32) -> Option<u32> {
        let scaled = (self.0 + Rational64::from_integer(1)) * Rational64::from_integer(i64::from(d));
        if scaled.is_integer() && *scaled.numer() >= 0 {
            Some(*scaled.numer() as u32)
        } else {
            None
        }
    }

    pub fn value(&self) -> Rational64 {
        self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0 + other.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Result of measuring a field against the weighted grading.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightResult {
    Homogeneous(Weight),
    Inhomogeneous,
    /// The zero field has no defined weight.
    Zero,
}

/// A holomorphic vector field `Σ F_j ∂/∂z_j + G ∂/∂w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    n: usize,
    pub f: Vec<HoloPoly>,
    pub g: HoloPoly,
}

impl VectorField {
    pub fn new(f: Vec<HoloPoly>, g: HoloPoly) -> Self {
        let n = g.n();
        assert!(!f.is_empty(), "field needs at least one z-slot");
        assert!(f.iter().all(|p| p.n() == n), "variable context mismatch");
        assert_eq!(f.len(), n, "one coefficient per z-variable");
        VectorField { n, f, g }
    }

    pub fn zero(n: usize) -> Self {
        VectorField {
            n,
            f: vec![HoloPoly::zero(n); n],
            g: HoloPoly::zero(n),
        }
    }

    /// The translation `∂/∂w`.
    pub fn d_w(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.g = HoloPoly::constant(n, Gauss::one());
        x
    }

    /// The translation `∂/∂z_j` (0-indexed).
    pub fn d_z(n: usize, j: usize) -> Self {
        let mut x = Self::zero(n);
        x.f[j] = HoloPoly::constant(n, Gauss::one());
        x
    }

    /// A single-monomial field `c · z^a w^m ∂/∂(slot)`, where `slot = n`
    /// addresses `∂/∂w`.
    pub fn monomial(n: usize, slot: usize, key: HoloKey, coeff: Gauss) -> Self {
        let mut x = Self::zero(n);
        let p = HoloPoly::monomial(n, key, coeff);
        if slot == n {
            x.g = p;
        } else {
            x.f[slot] = p;
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().all(|p| p.is_zero()) && self.g.is_zero()
    }

    /// Highest power of `w` in any coefficient.
    pub fn w_degree(&self) -> u32 {
        self.f
            .iter()
            .map(|p| p.w_degree())
            .chain(std::iter::once(self.g.w_degree()))
            .max()
            .unwrap_or(0)
    }

    /// Rigid fields have all coefficients independent of `w`.
    pub fn is_rigid(&self) -> bool {
        self.w_degree() == 0
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.n, other.n, "variable context mismatch");
        VectorField {
            n: self.n,
            f: self
                .f
                .iter()
                .zip(&other.f)
                .map(|(a, b)| a.add(b))
                .collect(),
            g: self.g.add(&other.g),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        self.add(&other.scale(&-&Gauss::one()))
    }

    pub fn scale(&self, c: &Gauss) -> VectorField {
        VectorField {
            n: self.n,
            f: self.f.iter().map(|p| p.scale(c)).collect(),
            g: self.g.scale(c),
        }
    }

    /// Apply the field to a holomorphic polynomial:
    /// `X(p) = Σ F_j ∂p/∂z_j + G ∂p/∂w`. A derivation.
    pub fn apply(&self, p: &HoloPoly) -> HoloPoly {
        assert_eq!(self.n, p.n(), "variable context mismatch");
        let mut out = self.g.mul(&p.partial_w());
        for (j, fj) in self.f.iter().enumerate() {
            if !fj.is_zero() {
                out = out.add(&fj.mul(&p.partial_z(j)));
            }
        }
        out
    }

    /// `a_{jk}` matrix of the linear `z`-action: the coefficient of `z_k` in
    /// `F_j` (all other monomials are ignored).
    pub fn linear_part(&self) -> Vec<Vec<Gauss>> {
        (0..self.n)
            .map(|j| {
                (0..self.n)
                    .map(|k| {
                        self.f[j].coeff(&HoloKey::new(Exponent::unit(self.n, k), 0))
                    })
                    .collect()
            })
            .collect()
    }

    /// The weight of the field under `weight(z_j) = 1/d`, `weight(w) = 1`,
    /// or `Inhomogeneous` when monomials disagree.
    pub fn weight(&self, d: u32) -> WeightResult {
        let mut seen: Option<Rational64> = None;
        let d64 = i64::from(d);
        let visit = |mu: Rational64, seen: &mut Option<Rational64>| -> bool {
            match seen {
                None => {
                    *seen = Some(mu);
                    true
                }
                Some(prev) => *prev == mu,
            }
        };
        for fj in &self.f {
            for (k, _) in fj.terms() {
                let mu = Rational64::new(
                    i64::from(k.z.total()) + i64::from(k.w) * d64 - 1,
                    d64,
                );
                if !visit(mu, &mut seen) {
                    return WeightResult::Inhomogeneous;
                }
            }
        }
        for (k, _) in self.g.terms() {
            let mu = Rational64::new(i64::from(k.z.total()) + i64::from(k.w) * d64, d64)
                - Rational64::from_integer(1);
            if !visit(mu, &mut seen) {
                return WeightResult::Inhomogeneous;
            }
        }
        match seen {
            Some(mu) => WeightResult::Homogeneous(Weight::new(mu)),
            None => WeightResult::Zero,
        }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, fj) in self.f.iter().enumerate() {
            if !fj.is_zero() {
                parts.push(format!("({}) d/dz{}", fj, j + 1));
            }
        }
        if !self.g.is_zero() {
            parts.push(format!("({}) d/dw", self.g));
        }
        if parts.is_empty() {
            return write!(out, "0");
        }
        write!(out, "{}", parts.join(" + "))
    }
}

/// Standard commutator of derivations `[X, Y] = X∘Y − Y∘X`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> VectorField {
    assert_eq!(x.n(), y.n(), "variable context mismatch");
    let f = (0..x.n())
        .map(|j| x.apply(&y.f[j]).sub(&y.apply(&x.f[j])))
        .collect();
    let g = x.apply(&y.g).sub(&y.apply(&x.g));
    VectorField::new(f, g)
}

/// The grading element `E = Σ (1/d) z_j ∂/∂z_j + w ∂/∂w`, tangent to every
/// valid model of degree `d` by the Euler identity.
pub fn grading_element(n: usize, d: u32) -> VectorField {
    assert!(n >= 1 && d >= 1);
    let inv_d = Gauss::from_parts(1, i64::from(d), 0, 1);
    let f = (0..n).map(|j| HoloPoly::z_var(n, j).scale(&inv_d)).collect();
    VectorField::new(f, HoloPoly::w_var(n))
}

/// Reusable context for residual computations against a fixed defining
/// function: caches `Φ_{z_j}` and the powers `(u + iΦ)^m`.
pub struct TangencyCtx {
    n: usize,
    phi_z: Vec<MixedPoly>,
    pows: Vec<MixedPoly>,
}

impl TangencyCtx {
    pub fn new(phi: &MixedPoly, max_w: u32) -> Self {
        let n = phi.n();
        TangencyCtx {
            n,
            phi_z: (0..n).map(|j| phi.partial_z(j)).collect(),
            pows: phi.w_substitution_powers(max_w),
        }
    }

    /// The tangency residual `T` of `x`; `x ∈ hol(M, 0)` iff `T ≡ 0`.
    pub fn residual(&self, x: &VectorField) -> MixedPoly {
        assert_eq!(x.n(), self.n, "variable context mismatch");
        let mut re_sum = MixedPoly::zero(self.n);
        for (j, fj) in x.f.iter().enumerate() {
            if fj.is_zero() || self.phi_z[j].is_zero() {
                continue;
            }
            re_sum = re_sum.add(&fj.substitute_w(&self.pows).mul(&self.phi_z[j]));
        }
        let g_sub = x.g.substitute_w(&self.pows);
        g_sub
            .im_part()
            .sub(&re_sum.re_part().scale(&Gauss::from_int(2)))
    }
}

/// One-shot tangency residual of `x` on the model `m`.
pub fn tangency_residual(x: &VectorField, m: &ModelSurface) -> MixedPoly {
    TangencyCtx::new(m.phi(), x.w_degree()).residual(x)
}

/// Whether the real part of `x` is tangent to `m`.
pub fn is_tangent(x: &VectorField, m: &ModelSurface) -> bool {
    tangency_residual(x, m).is_zero()
}

/// Real coordinate rows for a family of fields over the union of their
/// monomial slots, keeping only slots accepted by `filter` (slot index `n`
/// addresses the `∂/∂w` coefficient). Each field becomes one row holding the
/// real and imaginary part of every kept coefficient.
pub fn coordinate_rows<F>(fields: &[&VectorField], filter: F) -> Vec<Vec<Rat>>
where
    F: Fn(usize, &HoloKey) -> bool,
{
    if fields.is_empty() {
        return Vec::new();
    }
    let n = fields[0].n();
    let mut keys: BTreeSet<(usize, HoloKey)> = BTreeSet::new();
    for x in fields {
        assert_eq!(x.n(), n);
        for (slot, poly) in x.f.iter().chain(std::iter::once(&x.g)).enumerate() {
            for (k, _) in poly.terms() {
                if filter(slot, k) {
                    keys.insert((slot, k.clone()));
                }
            }
        }
    }
    let keys: Vec<(usize, HoloKey)> = keys.into_iter().collect();
    fields
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(2 * keys.len());
            for (slot, k) in &keys {
                let c = if *slot == n {
                    x.g.coeff(k)
                } else {
                    x.f[*slot].coeff(k)
                };
                row.push(c.re);
                row.push(c.im);
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::model::{build_from_pqr, PQRSpec};

    fn exp(e: [u32; 3]) -> Exponent {
        Exponent::new(e.to_vec())
    }

    /// The linear-P model with Q = z2³, R = z2 z3 (degree 4).
    fn linear_p_model() -> ModelSurface {
        let spec = PQRSpec::new(
            exp([1, 0, 0]),
            exp([0, 3, 0]),
            exp([0, 1, 1]),
            Gauss::one(),
            Gauss::one(),
            Gauss::one(),
        )
        .unwrap();
        build_from_pqr(&spec).unwrap()
    }

    #[test]
    fn weight_of_basic_fields() {
        // ∂/∂w has weight −1; E has weight 0.
        let dw = VectorField::d_w(3);
        assert_eq!(
            dw.weight(4),
            WeightResult::Homogeneous(Weight::from_index(0, 4))
        );
        let e = grading_element(3, 4);
        assert_eq!(
            e.weight(4),
            WeightResult::Homogeneous(Weight::from_index(4, 4))
        );
        assert!(Weight::from_index(4, 4).is_zero());
        // z2 z3 ∂/∂z1 with d = 4 has weight 1/4.
        let x = VectorField::monomial(3, 0, HoloKey::new(exp([0, 1, 1]), 0), Gauss::one());
        assert_eq!(
            x.weight(4),
            WeightResult::Homogeneous(Weight::new(Rational64::new(1, 4)))
        );
        assert_eq!(VectorField::zero(3).weight(4), WeightResult::Zero);
    }

    #[test]
    fn apply_is_evaluation() {
        // X = z2 ∂/∂z1 applied to z1 z2² gives z2³.
        let x = VectorField::monomial(3, 0, HoloKey::new(exp([0, 1, 0]), 0), Gauss::one());
        let p = HoloPoly::monomial(3, HoloKey::new(exp([1, 2, 0]), 0), Gauss::one());
        assert_eq!(
            x.apply(&p),
            HoloPoly::monomial(3, HoloKey::new(exp([0, 3, 0]), 0), Gauss::one())
        );
        // E applied to w gives w.
        let e = grading_element(3, 4);
        let w = HoloPoly::w_var(3);
        assert_eq!(e.apply(&w), w);
    }

    #[test]
    fn apply_on_linear_p_model_generator() {
        // X2 = −(a+ib) z2 z3 ∂/∂z1 + (a−ib) z2² ∂/∂z3 applied to P = z1
        // gives −(a+ib) z2 z3; take a = 1, b = 1.
        let a_ib = Gauss::from_parts(1, 1, 1, 1);
        let x2 = VectorField::new(
            vec![
                HoloPoly::monomial(3, HoloKey::new(exp([0, 1, 1]), 0), -&a_ib),
                HoloPoly::zero(3),
                HoloPoly::monomial(3, HoloKey::new(exp([0, 2, 0]), 0), a_ib.conj()),
            ],
            HoloPoly::zero(3),
        );
        let p = HoloPoly::z_var(3, 0);
        assert_eq!(
            x2.apply(&p),
            HoloPoly::monomial(3, HoloKey::new(exp([0, 1, 1]), 0), -&a_ib)
        );
    }

    #[test]
    fn residual_of_dw_vanishes() {
        let m = linear_p_model();
        assert!(is_tangent(&VectorField::d_w(3), &m));
        // ... and of the grading element, by the Euler identity.
        assert!(is_tangent(&grading_element(3, 4), &m));
    }

    #[test]
    fn residual_detects_non_tangency() {
        // X = ∂/∂z1 on Im w = z1 z̄1 (n = 1, d = 2): residual −(z1 + z̄1).
        let phi = MixedPoly::monomial(
            1,
            crate::algebra::MixedKey::new(Exponent::new(vec![1]), Exponent::new(vec![1]), 0),
            Gauss::one(),
        );
        let m = ModelSurface::from_phi(phi).unwrap();
        let x = VectorField::d_z(1, 0);
        let t = tangency_residual(&x, &m);
        assert!(!t.is_zero());
        assert!(t.is_real());
        let expected = MixedPoly::monomial(
            1,
            crate::algebra::MixedKey::new(Exponent::new(vec![1]), Exponent::new(vec![0]), 0),
            Gauss::from_int(-1),
        );
        let expected = expected.add(&expected.conjugate());
        assert_eq!(t, expected);
    }

    #[test]
    fn brackets_match_grading() {
        // [∂/∂w, E] = ∂/∂w (weight −1 eigenvector of the grading element).
        let dw = VectorField::d_w(3);
        let e = grading_element(3, 4);
        assert_eq!(lie_bracket(&dw, &e), dw);
        // [X, X] = 0.
        let x = VectorField::monomial(3, 0, HoloKey::new(exp([0, 1, 1]), 1), Gauss::i());
        assert!(lie_bracket(&x, &x).is_zero());
    }

    #[test]
    fn bracket_of_translation_with_w_scaled_field() {
        // Y = Σ λ_j z_j w ∂_j + ½ w² ∂_w has [∂_w, Y] = Σ λ_j z_j ∂_j + w ∂_w.
        let lambda = [rat(1, 2), rat(1, 6), rat(1, 3)];
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
                HoloKey::new(exp([0, 0, 0]), 2),
                Gauss::from_rat(rat(1, 2)),
            ),
        );
        let br = lie_bracket(&VectorField::d_w(3), &y);
        let expected_f: Vec<HoloPoly> = (0..3)
            .map(|j| HoloPoly::z_var(3, j).scale(&Gauss::from_rat(lambda[j].clone())))
            .collect();
        let expected = VectorField::new(expected_f, HoloPoly::w_var(3));
        assert_eq!(br, expected);
    }

    #[test]
    fn residual_is_real_linear() {
        let m = linear_p_model();
        let x = VectorField::monomial(3, 0, HoloKey::new(exp([0, 2, 0]), 0), Gauss::i());
        let y = VectorField::monomial(3, 3, HoloKey::new(exp([1, 1, 1]), 0), Gauss::one());
        let a = rat_int(3);
        let b = rat(-5, 2);
        let combo = x
            .scale(&Gauss::from_rat(a.clone()))
            .add(&y.scale(&Gauss::from_rat(b.clone())));
        let lhs = tangency_residual(&combo, &m);
        let rhs = tangency_residual(&x, &m)
            .scale_rat(&a)
            .add(&tangency_residual(&y, &m).scale_rat(&b));
        assert_eq!(lhs, rhs);
        assert!(lhs.is_real());
    }
}
