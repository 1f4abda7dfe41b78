//! Built-in model surfaces, named by what they exhibit. These are the
//! reference inputs for the golden tests and the `crsym examples` command.

use crate::codec::{MixedTermJson, ModelSpecJson, PqrJson};

fn pqr(alpha: [u32; 3], beta: [u32; 3], gamma: [u32; 3]) -> ModelSpecJson {
    pqr_with(alpha, beta, gamma, [1, 1, 0, 1], [1, 1, 0, 1], [1, 1, 0, 1])
}

fn pqr_with(
    alpha: [u32; 3],
    beta: [u32; 3],
    gamma: [u32; 3],
    c_p: [i64; 4],
    c_q: [i64; 4],
    c_r: [i64; 4],
) -> ModelSpecJson {
    ModelSpecJson {
        n: 3,
        pqr: Some(PqrJson {
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
            gamma: gamma.to_vec(),
            c_p,
            c_q,
            c_r,
        }),
        terms: None,
    }
}

/// Names of all built-in models, in listing order.
pub fn names() -> Vec<&'static str> {
    vec![
        "quadric",
        "exotic3",
        "dim13",
        "dim9",
        "nilpotent-triangular",
        "nilpotent-split",
        "imaginary-rotation",
    ]
}

/// Look up a built-in model spec by name.
pub fn builtin(name: &str) -> Option<ModelSpecJson> {
    match name {
        // The nondegenerate hyperquadric Im w = z1 z̄2 + z2 z̄1 + z3 z̄3.
        "quadric" => Some(pqr([1, 0, 0], [0, 1, 0], [0, 0, 1])),
        // P = z1z2z3², Q = z1²z2z3³, R = z1z2z3³ — three-dimensional space
        // of generalized (exotic) rotations.
        "exotic3" => Some(pqr([1, 1, 2], [2, 1, 3], [1, 1, 3])),
        // P = z1, Q = z2³, R = z2z3 — the linear-P family member whose full
        // algebra attains the upper bound 13.
        "dim13" => Some(pqr([1, 0, 0], [0, 3, 0], [0, 1, 1])),
        // P = z1z2, Q = z2², R = z2z3 — family-1 normal form with k = 1,
        // whose full algebra attains the bound 9.
        "dim9" => Some(pqr([1, 1, 0], [0, 2, 0], [0, 1, 1])),
        // P = z1z3, Q = z3², R = z2z3 — the off-diagonal rotation space is a
        // 3-parameter family of strictly triangular (nilpotent) matrices.
        "nilpotent-triangular" => Some(pqr([1, 0, 1], [0, 0, 2], [0, 1, 1])),
        // P = i·z1z2, Q = z1z3, R = z1² — the off-diagonal rotation is not
        // nilpotent but splits into two nilpotent tangent rotations.
        "nilpotent-split" => Some(pqr_with(
            [1, 1, 0],
            [1, 0, 1],
            [2, 0, 0],
            [0, 1, 1, 1],
            [1, 1, 0, 1],
            [1, 1, 0, 1],
        )),
        // A degree-8 term-list model (P is a binomial, so no monomial PQR
        // spec applies) carrying the imaginary diagonal rotation
        // i(11 z1 ∂1 + 3 z2 ∂2 − z3 ∂3) while dim g_1 = 0.
        "imaginary-rotation" => Some(ModelSpecJson {
            n: 3,
            pqr: None,
            terms: Some(vec![
                term([2, 1, 3], [2, 0, 0]),
                term([1, 4, 1], [2, 0, 0]),
                term([2, 0, 0], [2, 1, 3]),
                term([2, 0, 0], [1, 4, 1]),
                term([2, 2, 0], [2, 2, 0]),
            ]),
        }),
        _ => None,
    }
}

fn term(z: [u32; 3], zbar: [u32; 3]) -> MixedTermJson {
    MixedTermJson {
        z: z.to_vec(),
        zbar: zbar.to_vec(),
        coeff: [1, 1, 0, 1],
    }
}
