//! The universal solver: every graded component `g_μ` of `hol(M₀, 0)` by
//! ansatz plus exact kernel, and the assembled algebra report.
//!
//! For a candidate weight `μ = j/d − 1` the ansatz lists every monomial
//! field `z^a w^m ∂/∂z_k` with `|a| + m·d = μd + 1` and `z^a w^m ∂/∂w` with
//! `|a| + m·d = μd + d`. Each complex coefficient contributes two real
//! unknowns. Collecting the tangency residual of the general ansatz by
//! monomial gives an exact rational linear system; its kernel is `g_μ`.
//!
//! Because residuals are real polynomials, the constraint rows of a monomial
//! `z^a z̄^b u^k` and of its conjugate `z^b z̄^a u^k` are equivalent, so only
//! one representative per conjugate pair is kept (and for self-conjugate
//! monomials only the real part). This halves the system.

use crate::algebra::{
    exponents_of_total, in_span, Gauss, HoloKey, MixedKey, Rat, RatMatrix,
};
use crate::fields::{
    coordinate_rows, lie_bracket, TangencyCtx, VectorField, Weight, WeightResult,
};
use crate::model::{surface_nondegenerate, ModelSurface, NondegeneracyCertificate};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// One graded component `g_μ`: real dimension and a canonical basis.
///
/// Every basis field is weighted-homogeneous of weight `μ`, has zero
/// tangency residual (re-verified on construction), and the basis is
/// linearly independent over R.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub weight: Weight,
    pub dim: usize,
    pub basis: Vec<VectorField>,
}

/// A solved component plus its rigid/non-rigid split.
#[derive(Clone, Debug)]
pub struct ComponentEntry {
    pub component: GradedComponent,
    pub rigid_dim: usize,
    pub rigid_basis: Vec<VectorField>,
    pub nonrigid_basis: Vec<VectorField>,
}

/// The full assembled algebra of a model surface.
#[derive(Clone, Debug)]
pub struct AlgebraReport {
    pub n: usize,
    pub d: u32,
    /// All candidate weights in ascending order, zero-dimensional components
    /// included.
    pub components: Vec<ComponentEntry>,
    pub total_dimension: usize,
    /// `dim g_c`: the sum of rigid sub-dimensions over `0 < μ < 1`.
    pub gc_dimension: usize,
    /// Extra components solved above weight 1 in diagnostics mode.
    pub extended_components: Vec<GradedComponent>,
    /// Violations of `[g_μ, g_ν] ⊆ g_{μ+ν}`; empty for a sound solve.
    pub closure_violations: Vec<String>,
}

impl AlgebraReport {
    pub fn component(&self, weight: &Weight) -> Option<&ComponentEntry> {
        self.components
            .iter()
            .find(|c| c.component.weight == *weight)
    }

    /// Dimension at weight `j/d − 1`; zero when outside the candidate range.
    pub fn dim_at_index(&self, j: u32) -> usize {
        self.component(&Weight::from_index(j, self.d))
            .map(|c| c.component.dim)
            .unwrap_or(0)
    }
}

/// Options for [`full_algebra`].
#[derive(Clone, Copy, Default)]
pub struct SolveOptions {
    /// Also solve the weights `1 + 1/d, …, 2` and report them (they must all
    /// be empty for nondegenerate models; kept as an empirical check of the
    /// weight-1 cap).
    pub extended: bool,
}

#[derive(Debug, Error)]
pub enum GradingError {
    #[error("model is holomorphically degenerate; hol(M, 0) is infinite-dimensional")]
    Degenerate(NondegeneracyCertificate),
}

/// All candidate weights `μ = j/d − 1`, `j = 0, …, 2d` (so `−1 ≤ μ ≤ 1` in
/// steps of `1/d`). With `extended`, continues to `μ = 2`.
pub fn candidate_weights(d: u32, extended: bool) -> Vec<Weight> {
    assert!(d >= 2, "fundamental degree must be at least 2");
    let top = if extended { 3 * d } else { 2 * d };
    (0..=top).map(|j| Weight::from_index(j, d)).collect()
}

/// The complete monomial ansatz for weight `μ`: fields `z^a w^m ∂/∂z_k` with
/// `|a| + m·d = μd + 1` and `z^a w^m ∂/∂w` with `|a| + m·d = μd + d`, in a
/// fixed deterministic order (slot, then `w`-power, then exponent).
pub fn ansatz_basis(mu: Weight, n: usize, d: u32) -> Vec<VectorField> {
    let j = mu
        .index(d)
        .expect("weight must be of the form j/d - 1 for this degree");
    let mut out = Vec::new();
    // target plain degrees |a| + m·d for the z-slots and the w-slot
    let f_target = i64::from(j) - i64::from(d) + 1;
    let g_target = i64::from(j);
    for slot in 0..=n {
        let target = if slot == n { g_target } else { f_target };
        if target < 0 {
            continue;
        }
        let target = target as u32;
        for m in 0..=(target / d) {
            let total = target - m * d;
            for a in exponents_of_total(n, total) {
                out.push(VectorField::monomial(
                    n,
                    slot,
                    HoloKey::new(a, m),
                    Gauss::one(),
                ));
            }
        }
    }
    out
}

/// Solve one graded component with the standard ansatz.
pub fn solve_component(m: &ModelSurface, mu: Weight) -> GradedComponent {
    let ansatz = ansatz_basis(mu, m.n(), m.d());
    solve_component_with_ansatz(m, mu, &ansatz)
}

/// Solve a component from an explicit ansatz. Exposed so redundancy tests
/// can enlarge the ansatz without changing the outcome.
pub fn solve_component_with_ansatz(
    m: &ModelSurface,
    mu: Weight,
    ansatz: &[VectorField],
) -> GradedComponent {
    if ansatz.is_empty() {
        return GradedComponent {
            weight: mu,
            dim: 0,
            basis: Vec::new(),
        };
    }
    let max_w = ansatz.iter().map(|b| b.w_degree()).max().unwrap_or(0);
    let ctx = TangencyCtx::new(m.phi(), max_w);

    // Column 2i is the real part of unknown i, column 2i+1 the imaginary
    // part; their residual contributions are T(B_i) and T(i·B_i).
    let mut entries: BTreeMap<MixedKey, Vec<(usize, Gauss)>> = BTreeMap::new();
    for (i, b) in ansatz.iter().enumerate() {
        for (col, field) in [(2 * i, b.clone()), (2 * i + 1, b.scale(&Gauss::i()))] {
            let t = ctx.residual(&field);
            for (key, c) in t.terms() {
                let conj_key = key.conjugate();
                if *key > conj_key {
                    continue; // the conjugate representative carries the row
                }
                entries
                    .entry(key.clone())
                    .or_default()
                    .push((col, c.clone()));
            }
        }
    }

    let mut matrix = RatMatrix::new(2 * ansatz.len());
    for (key, cols) in &entries {
        let self_conjugate = key.conjugate() == *key;
        let re_row: Vec<(usize, Rat)> = cols
            .iter()
            .filter(|(_, c)| !c.re.is_zero())
            .map(|(col, c)| (*col, c.re.clone()))
            .collect();
        if !re_row.is_empty() {
            matrix.push_row(re_row);
        }
        if !self_conjugate {
            let im_row: Vec<(usize, Rat)> = cols
                .iter()
                .filter(|(_, c)| !c.im.is_zero())
                .map(|(col, c)| (*col, c.im.clone()))
                .collect();
            if !im_row.is_empty() {
                matrix.push_row(im_row);
            }
        }
    }

    let kernel = matrix.kernel_basis();
    // The system is block-diagonal across weights (residual keys of fields
    // of different weights never meet), so every kernel field is
    // homogeneous; only those of the requested weight belong to g_μ. For
    // the standard ansatz the filter is a no-op.
    let basis: Vec<VectorField> = kernel
        .iter()
        .map(|v| {
            let mut x = VectorField::zero(m.n());
            for (i, b) in ansatz.iter().enumerate() {
                let c = Gauss::new(v[2 * i].clone(), v[2 * i + 1].clone());
                if !c.is_zero() {
                    x = x.add(&b.scale(&c));
                }
            }
            x
        })
        .filter(|x| matches!(x.weight(m.d()), WeightResult::Homogeneous(w) if w == mu))
        .collect();

    for x in &basis {
        assert!(
            ctx.residual(x).is_zero(),
            "solver soundness: basis field must be tangent at weight {}",
            mu
        );
    }

    GradedComponent {
        weight: mu,
        dim: basis.len(),
        basis,
    }
}

/// Change of basis separating the maximal rigid (w-free) subspace of a
/// component from representatives of the non-rigid complement.
pub fn rigid_split(c: &GradedComponent) -> (Vec<VectorField>, Vec<VectorField>) {
    if c.basis.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let refs: Vec<&VectorField> = c.basis.iter().collect();
    // Combinations annihilating every w-carrying coordinate are rigid.
    let w_rows = coordinate_rows(&refs, |_, key| key.w >= 1);
    let k = c.basis.len();
    let mut constraint = RatMatrix::new(k);
    let width = w_rows[0].len();
    for coord in 0..width {
        let row: Vec<(usize, Rat)> = (0..k)
            .map(|i| (i, w_rows[i][coord].clone()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        if !row.is_empty() {
            constraint.push_row(row);
        }
    }
    let combos = constraint.kernel_basis();
    let rigid: Vec<VectorField> = combos
        .iter()
        .map(|t| {
            let mut x = VectorField::zero(c.basis[0].n());
            for (i, b) in c.basis.iter().enumerate() {
                if !t[i].is_zero() {
                    x = x.add(&b.scale(&Gauss::from_rat(t[i].clone())));
                }
            }
            x
        })
        .collect();
    debug_assert!(rigid.iter().all(|x| x.is_rigid()));

    // Extend the rigid combo space by original basis vectors to pick
    // deterministic non-rigid representatives.
    let sparse = |v: &[Rat]| -> Vec<(usize, Rat)> {
        v.iter()
            .cloned()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    };
    let mut elim = crate::algebra::Eliminator::new(k);
    for t in &combos {
        elim.insert_rational(&sparse(t));
    }
    let mut nonrigid = Vec::new();
    for (i, b) in c.basis.iter().enumerate() {
        if elim.insert_rational(&[(i, Rat::from_integer(1.into()))]) {
            nonrigid.push(b.clone());
        }
    }
    (rigid, nonrigid)
}

/// Solve every graded component and assemble the report.
///
/// Degenerate models are refused outright: `hol(M, 0)` is then
/// infinite-dimensional and a finite report would be wrong.
pub fn full_algebra(m: &ModelSurface, opts: &SolveOptions) -> Result<AlgebraReport, GradingError> {
    let cert = surface_nondegenerate(m);
    if !cert.nondegenerate {
        return Err(GradingError::Degenerate(cert));
    }
    let d = m.d();
    let weights = candidate_weights(d, false);
    let components: Vec<ComponentEntry> = weights
        .iter()
        .map(|&mu| {
            let component = solve_component(m, mu);
            let (rigid_basis, nonrigid_basis) = rigid_split(&component);
            ComponentEntry {
                rigid_dim: rigid_basis.len(),
                rigid_basis,
                nonrigid_basis,
                component,
            }
        })
        .collect();

    let extended_components = if opts.extended {
        ((2 * d + 1)..=(3 * d))
            .map(|j| solve_component(m, Weight::from_index(j, d)))
            .collect()
    } else {
        Vec::new()
    };

    let total_dimension = components.iter().map(|c| c.component.dim).sum();
    let gc_dimension = components
        .iter()
        .filter(|c| {
            let v = c.component.weight.value();
            v > num_rational::Rational64::zero() && v < num_rational::Rational64::from_integer(1)
        })
        .map(|c| c.rigid_dim)
        .sum();

    let mut report = AlgebraReport {
        n: m.n(),
        d,
        components,
        total_dimension,
        gc_dimension,
        extended_components,
        closure_violations: Vec::new(),
    };
    report.closure_violations = verify_bracket_closure(&report);
    Ok(report)
}

/// Exact verification of `[g_μ, g_ν] ⊆ g_{μ+ν}` over all basis pairs.
/// Brackets landing outside the graded range must vanish identically.
pub fn verify_bracket_closure(report: &AlgebraReport) -> Vec<String> {
    let mut violations = Vec::new();
    let all: Vec<(Weight, &VectorField)> = report
        .components
        .iter()
        .flat_map(|c| {
            c.component
                .basis
                .iter()
                .map(move |b| (c.component.weight, b))
        })
        .collect();
    for (i, (wi, xi)) in all.iter().enumerate() {
        for (wj, xj) in all.iter().skip(i + 1) {
            let br = lie_bracket(xi, xj);
            if br.is_zero() {
                continue;
            }
            let target = wi.add(wj);
            match report.component(&target) {
                Some(entry) if entry.component.dim > 0 => {
                    let mut fields: Vec<&VectorField> =
                        entry.component.basis.iter().collect();
                    fields.push(&br);
                    let rows = coordinate_rows(&fields, |_, _| true);
                    let (target_rows, br_row) = rows.split_at(entry.component.dim);
                    if !in_span(target_rows, &br_row[0]) {
                        violations.push(format!(
                            "[{}|{}] escapes the span of g_{}",
                            wi, wj, target
                        ));
                    }
                }
                _ => violations.push(format!(
                    "nonzero bracket at out-of-range or empty weight {} from [{}|{}]",
                    target, wi, wj
                )),
            }
        }
    }
    violations
}
