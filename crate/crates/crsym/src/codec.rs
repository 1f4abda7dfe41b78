//! JSON encodings for model specs, vector fields, reports and scan atlases.
//!
//! Coefficients are exact everywhere: a Gaussian rational is encoded as the
//! four integers `[re_num, re_den, im_num, im_den]`. No floats appear in any
//! format. Serialization order is fixed (struct field order plus canonical
//! term order), so encoded output is byte-stable for golden testing.

use crate::algebra::{Exponent, Gauss, HoloKey, HoloPoly, MixedKey, MixedPoly, Rat};
use crate::fields::VectorField;
use crate::grading::AlgebraReport;
use crate::model::{ModelSurface, PQRSpec};
use crate::structure::{
    CrosscheckOutcome, Family, NormalFormClass, RotationDecomposition, RotationSpaceInfo,
    StructuralPrediction,
};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `[re_num, re_den, im_num, im_den]`.
pub type CoeffJson = [i64; 4];

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("coefficient out of encodable range")]
    IntegerRange,
}

pub fn gauss_from_json(c: &CoeffJson) -> Result<Gauss, CodecError> {
    if c[1] == 0 || c[3] == 0 {
        return Err(CodecError::Schema("zero denominator in coefficient".into()));
    }
    Ok(Gauss::from_parts(c[0], c[1], c[2], c[3]))
}

fn rat_parts(r: &Rat) -> Result<(i64, i64), CodecError> {
    let num = r.numer().to_i64().ok_or(CodecError::IntegerRange)?;
    let den = r.denom().to_i64().ok_or(CodecError::IntegerRange)?;
    Ok((num, den))
}

pub fn gauss_to_json(g: &Gauss) -> Result<CoeffJson, CodecError> {
    let (rn, rd) = rat_parts(&g.re)?;
    let (in_, id) = rat_parts(&g.im)?;
    Ok([rn, rd, in_, id])
}

// ---------------------------------------------------------------------------
// Input schemas
// ---------------------------------------------------------------------------

/// Model-spec document: exactly one of `pqr` or `terms`.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModelSpecJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pqr: Option<PqrJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<MixedTermJson>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PqrJson {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    #[serde(rename = "cP")]
    pub c_p: CoeffJson,
    #[serde(rename = "cQ")]
    pub c_q: CoeffJson,
    #[serde(rename = "cR")]
    pub c_r: CoeffJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct MixedTermJson {
    pub z: Vec<u32>,
    pub zbar: Vec<u32>,
    pub coeff: CoeffJson,
}

/// Vector-field document mirroring the model-spec coefficient encoding.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct FieldSpecJson {
    pub n: usize,
    /// One term list per `∂/∂z_j` coefficient.
    pub f: Vec<Vec<HoloTermJson>>,
    /// Terms of the `∂/∂w` coefficient.
    pub g: Vec<HoloTermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct HoloTermJson {
    pub z: Vec<u32>,
    #[serde(default)]
    pub w: u32,
    pub coeff: CoeffJson,
}

/// A parsed model: the validated surface plus the monomial decomposition
/// when one was supplied.
#[derive(Clone, Debug)]
pub struct ModelInput {
    pub surface: ModelSurface,
    pub pqr: Option<PQRSpec>,
}

pub fn parse_model(doc: &ModelSpecJson) -> Result<ModelInput, CodecError> {
    match (&doc.pqr, &doc.terms) {
        (Some(pqr), None) => {
            if doc.n != 3 {
                return Err(CodecError::Schema("pqr specs require n = 3".into()));
            }
            let spec = PQRSpec::new(
                Exponent::new(pqr.alpha.clone()),
                Exponent::new(pqr.beta.clone()),
                Exponent::new(pqr.gamma.clone()),
                gauss_from_json(&pqr.c_p)?,
                gauss_from_json(&pqr.c_q)?,
                gauss_from_json(&pqr.c_r)?,
            )
            .map_err(|e| CodecError::Schema(e.to_string()))?;
            let surface =
                crate::model::build_from_pqr(&spec).map_err(|e| CodecError::Schema(e.to_string()))?;
            Ok(ModelInput {
                surface,
                pqr: Some(spec),
            })
        }
        (None, Some(terms)) => {
            if terms.is_empty() {
                return Err(CodecError::Schema("term list is empty".into()));
            }
            let mut phi = MixedPoly::zero(doc.n);
            for t in terms {
                if t.z.len() != doc.n || t.zbar.len() != doc.n {
                    return Err(CodecError::Schema(format!(
                        "term exponents must have length {}",
                        doc.n
                    )));
                }
                phi = phi.add(&MixedPoly::monomial(
                    doc.n,
                    MixedKey::new(Exponent::new(t.z.clone()), Exponent::new(t.zbar.clone()), 0),
                    gauss_from_json(&t.coeff)?,
                ));
            }
            let surface =
                ModelSurface::from_phi(phi).map_err(|e| CodecError::Schema(e.to_string()))?;
            Ok(ModelInput { surface, pqr: None })
        }
        _ => Err(CodecError::Schema(
            "model spec must contain exactly one of `pqr` or `terms`".into(),
        )),
    }
}

/// Canonical echo of a parsed model (terms in canonical order).
pub fn model_to_json(input: &ModelInput) -> Result<ModelSpecJson, CodecError> {
    match &input.pqr {
        Some(spec) => Ok(ModelSpecJson {
            n: 3,
            pqr: Some(PqrJson {
                alpha: spec.alpha.0.clone(),
                beta: spec.beta.0.clone(),
                gamma: spec.gamma.0.clone(),
                c_p: gauss_to_json(&spec.c_p)?,
                c_q: gauss_to_json(&spec.c_q)?,
                c_r: gauss_to_json(&spec.c_r)?,
            }),
            terms: None,
        }),
        None => {
            let terms = input
                .surface
                .phi()
                .terms()
                .map(|(k, c)| {
                    Ok(MixedTermJson {
                        z: k.z.0.clone(),
                        zbar: k.zb.0.clone(),
                        coeff: gauss_to_json(c)?,
                    })
                })
                .collect::<Result<Vec<_>, CodecError>>()?;
            Ok(ModelSpecJson {
                n: input.surface.n(),
                pqr: None,
                terms: Some(terms),
            })
        }
    }
}

pub fn parse_field(doc: &FieldSpecJson) -> Result<VectorField, CodecError> {
    let n = doc.n;
    if doc.f.len() != n {
        return Err(CodecError::Schema(format!(
            "field spec needs {} z-coefficient lists",
            n
        )));
    }
    let poly = |terms: &[HoloTermJson]| -> Result<HoloPoly, CodecError> {
        let mut p = HoloPoly::zero(n);
        for t in terms {
            if t.z.len() != n {
                return Err(CodecError::Schema(format!(
                    "term exponents must have length {}",
                    n
                )));
            }
            p = p.add(&HoloPoly::monomial(
                n,
                HoloKey::new(Exponent::new(t.z.clone()), t.w),
                gauss_from_json(&t.coeff)?,
            ));
        }
        Ok(p)
    };
    let f = doc
        .f
        .iter()
        .map(|terms| poly(terms))
        .collect::<Result<Vec<_>, _>>()?;
    let g = poly(&doc.g)?;
    Ok(VectorField::new(f, g))
}

fn holo_to_json(p: &HoloPoly) -> Result<Vec<HoloTermJson>, CodecError> {
    p.terms()
        .map(|(k, c)| {
            Ok(HoloTermJson {
                z: k.z.0.clone(),
                w: k.w,
                coeff: gauss_to_json(c)?,
            })
        })
        .collect()
}

/// Field encoding used inside reports (no repeated `n`).
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FieldJson {
    pub f: Vec<Vec<HoloTermJson>>,
    pub g: Vec<HoloTermJson>,
}

pub fn field_to_json(x: &VectorField) -> Result<FieldJson, CodecError> {
    Ok(FieldJson {
        f: x
            .f
            .iter()
            .map(holo_to_json)
            .collect::<Result<Vec<_>, _>>()?,
        g: holo_to_json(&x.g)?,
    })
}

pub fn field_spec_to_json(x: &VectorField) -> Result<FieldSpecJson, CodecError> {
    let FieldJson { f, g } = field_to_json(x)?;
    Ok(FieldSpecJson { n: x.n(), f, g })
}

// ---------------------------------------------------------------------------
// Report schema
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComponentJson {
    pub weight: String,
    pub dim: usize,
    pub rigid_dim: usize,
    pub basis: Vec<FieldJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NormalFormJson {
    pub family: String,
    pub permutation: [usize; 3],
    pub swapped: bool,
    pub parameters: Vec<u32>,
    pub predicted_offdiag_params: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DualityJson {
    pub g_minus_dim: usize,
    pub g_dual_dim: usize,
    pub holds: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FlagsJson {
    pub real_diagonal: bool,
    pub imaginary_diagonal: bool,
    pub s_dim: usize,
    pub t_dim: usize,
    pub offdiag_dim: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RotationJson {
    pub field: FieldJson,
    pub diagonal: FieldJson,
    pub offdiag: FieldJson,
    pub n_is_nilpotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<[FieldJson; 2]>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DiscrepancyJson {
    pub check: String,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SkippedJson {
    pub check: String,
    pub reason: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct StructureJson {
    pub normal_form: NormalFormJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gc_predicted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gc_predicted_generators: Option<Vec<FieldJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_minus_predicted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g1_generator: Option<FieldJson>,
    pub duality: DualityJson,
    pub rotation_decomposition: Vec<RotationJson>,
    pub flags: FlagsJson,
    pub discrepancies: Vec<DiscrepancyJson>,
    pub skipped_checks: Vec<SkippedJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ReportJson {
    pub model: ModelSpecJson,
    pub n: usize,
    pub degree: u32,
    pub nondegenerate: bool,
    pub components: Vec<ComponentJson>,
    pub total_dimension: usize,
    pub gc_dimension: usize,
    pub structure: StructureJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extended_weights_empty: Option<bool>,
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Family1 => "family1",
        Family::Family2 => "family2",
        Family::Family3 => "family3",
        Family::NoneOfThem => "none",
    }
}

fn normal_form_json(nf: &NormalFormClass) -> NormalFormJson {
    NormalFormJson {
        family: family_name(nf.family).to_string(),
        permutation: nf.permutation,
        swapped: nf.swapped,
        parameters: nf.parameters.clone(),
        predicted_offdiag_params: nf.predicted_offdiag_params(),
    }
}

fn not_applicable_normal_form() -> NormalFormJson {
    NormalFormJson {
        family: "not-applicable".to_string(),
        permutation: [0, 1, 2],
        swapped: false,
        parameters: Vec::new(),
        predicted_offdiag_params: 0,
    }
}

fn rotation_json(r: &RotationDecomposition, original: &VectorField) -> Result<RotationJson, CodecError> {
    Ok(RotationJson {
        field: field_to_json(original)?,
        diagonal: field_to_json(&r.diagonal)?,
        offdiag: field_to_json(&r.offdiag)?,
        n_is_nilpotent: r.n_is_nilpotent,
        split: match &r.split {
            Some((a, b)) => Some([field_to_json(a)?, field_to_json(b)?]),
            None => None,
        },
    })
}

fn flags_json(flags: (bool, bool), info: &RotationSpaceInfo) -> FlagsJson {
    FlagsJson {
        real_diagonal: flags.0,
        imaginary_diagonal: flags.1,
        s_dim: info.s_dim,
        t_dim: info.t_dim,
        offdiag_dim: info.offdiag_dim,
    }
}

/// Assemble the full report document for one analyzed model.
pub fn report_to_json(
    input: &ModelInput,
    report: &AlgebraReport,
    prediction: Option<&StructuralPrediction>,
    outcome: &CrosscheckOutcome,
    rigid_g0: &[VectorField],
) -> Result<ReportJson, CodecError> {
    let d = report.d;
    let components = report
        .components
        .iter()
        .map(|c| {
            Ok(ComponentJson {
                weight: c.component.weight.to_string(),
                dim: c.component.dim,
                rigid_dim: c.rigid_dim,
                basis: c
                    .component
                    .basis
                    .iter()
                    .map(field_to_json)
                    .collect::<Result<Vec<_>, _>>()?,
            })
        })
        .collect::<Result<Vec<_>, CodecError>>()?;

    let g_minus_dim = report.dim_at_index(d - 1);
    let g_dual_dim = report.dim_at_index(2 * d - 1);
    let duality = DualityJson {
        g_minus_dim,
        g_dual_dim,
        holds: (g_minus_dim > 0) == (g_dual_dim > 0),
    };

    let structure = match prediction {
        Some(p) => StructureJson {
            normal_form: normal_form_json(&p.normal_form),
            gc_predicted: Some(p.gc.dim),
            gc_predicted_generators: Some(
                p.gc
                    .generators
                    .iter()
                    .map(field_to_json)
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            g_minus_predicted: p.g_minus.applicable.then_some(p.g_minus.dim),
            g1_generator: Some(field_to_json(&p.g1_field)?),
            duality,
            rotation_decomposition: p
                .decompositions
                .iter()
                .zip(rigid_g0)
                .map(|(r, x)| rotation_json(r, x))
                .collect::<Result<Vec<_>, _>>()?,
            flags: flags_json(p.flags, &p.rotation_info),
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
        },
        None => {
            let flags = crate::structure::diagonal_rotation_flags(rigid_g0);
            let info = crate::structure::rotation_space_info(rigid_g0);
            StructureJson {
                normal_form: not_applicable_normal_form(),
                gc_predicted: None,
                gc_predicted_generators: None,
                g_minus_predicted: None,
                g1_generator: None,
                duality,
                rotation_decomposition: Vec::new(),
                flags: flags_json(flags, &info),
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
            }
        }
    };

    Ok(ReportJson {
        model: model_to_json(input)?,
        n: report.n,
        degree: d,
        nondegenerate: true,
        components,
        total_dimension: report.total_dimension,
        gc_dimension: report.gc_dimension,
        structure,
        extended_weights_empty: if report.extended_components.is_empty() {
            None
        } else {
            Some(report.extended_components.iter().all(|c| c.dim == 0))
        },
    })
}

// ---------------------------------------------------------------------------
// Scan atlas schema
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DimJson {
    pub weight: String,
    pub dim: usize,
    pub rigid_dim: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AtlasRowJson {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    pub degree: u32,
    pub dims: Vec<DimJson>,
    pub total_dimension: usize,
    pub gc_dimension: usize,
    pub family: String,
    pub flags: FlagsJson,
    pub discrepancies: Vec<DiscrepancyJson>,
    pub skipped_checks: Vec<SkippedJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComponentRangeJson {
    pub component: String,
    pub min: usize,
    pub max: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CheckCountJson {
    pub check: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ScanSummaryJson {
    pub triples_enumerated: usize,
    pub degenerate_excluded: usize,
    pub models_analyzed: usize,
    pub component_ranges: Vec<ComponentRangeJson>,
    pub check_counts: Vec<CheckCountJson>,
    pub discrepancy_total: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AtlasJson {
    pub degree_bound: u32,
    pub dedupe: bool,
    pub coefficients: String,
    pub models: Vec<AtlasRowJson>,
    pub summary: ScanSummaryJson,
}
