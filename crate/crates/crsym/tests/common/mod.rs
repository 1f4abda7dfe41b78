//! Shared helpers for the integration suites: an independent dense kernel
//! oracle and builders for the reference models.

#![allow(dead_code)]

use crsym::algebra::{Exponent, Gauss, Rat};
use crsym::model::{build_from_pqr, ModelSurface, PQRSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn exp(e: [u32; 3]) -> Exponent {
    Exponent::new(e.to_vec())
}

pub fn monic_spec(a: [u32; 3], b: [u32; 3], g: [u32; 3]) -> PQRSpec {
    PQRSpec::monic(exp(a), exp(b), exp(g)).unwrap()
}

pub fn surface(a: [u32; 3], b: [u32; 3], g: [u32; 3]) -> ModelSurface {
    build_from_pqr(&monic_spec(a, b, g)).unwrap()
}

/// The six reference models by role.
pub fn exotic3_spec() -> PQRSpec {
    monic_spec([1, 1, 2], [2, 1, 3], [1, 1, 3])
}

pub fn dim13_spec() -> PQRSpec {
    monic_spec([1, 0, 0], [0, 3, 0], [0, 1, 1])
}

pub fn dim9_spec() -> PQRSpec {
    monic_spec([1, 1, 0], [0, 2, 0], [0, 1, 1])
}

pub fn nilpotent_triangular_spec() -> PQRSpec {
    monic_spec([1, 0, 1], [0, 0, 2], [0, 1, 1])
}

pub fn nilpotent_split_spec() -> PQRSpec {
    PQRSpec::new(
        exp([1, 1, 0]),
        exp([1, 0, 1]),
        exp([2, 0, 0]),
        Gauss::i(),
        Gauss::one(),
        Gauss::one(),
    )
    .unwrap()
}

/// Naive dense Gauss–Jordan kernel oracle over the rationals, kept fully
/// independent of the production elimination path. Returns the kernel basis
/// in the same canonical form (reduced echelon of the kernel subspace,
/// denominators cleared, first nonzero entry positive).
pub fn dense_kernel_oracle(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][c].clone().recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for cc in 0..cols {
                    let delta = &a[r][cc] * &f;
                    a[i][cc] = &a[i][cc] - &delta;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| pivot_of_col[c].is_none()).collect();
    let mut kernel: Vec<Vec<Rat>> = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                v[c] = -a[pr][f].clone();
            }
        }
        kernel.push(v);
    }
    // Reduced echelon of the kernel matrix, then integerize.
    let mut rr = 0;
    for c in 0..cols {
        if rr >= kernel.len() {
            break;
        }
        let Some(pr) = (rr..kernel.len()).find(|&i| !kernel[i][c].is_zero()) else {
            continue;
        };
        kernel.swap(rr, pr);
        let inv = kernel[rr][c].clone().recip();
        for x in kernel[rr].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..kernel.len() {
            if i != rr && !kernel[i][c].is_zero() {
                let f = kernel[i][c].clone();
                for cc in 0..cols {
                    let delta = &kernel[rr][cc] * &f;
                    kernel[i][cc] = &kernel[i][cc] - &delta;
                }
            }
        }
        rr += 1;
    }
    for v in &mut kernel {
        let mut lcm = BigInt::one();
        for x in v.iter() {
            lcm = lcm.lcm(x.denom());
        }
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        if let Some(lead) = ints.iter().find(|x| !x.is_zero()) {
            if lead.is_negative() {
                g = -g;
            }
        }
        for (slot, x) in v.iter_mut().zip(ints) {
            *slot = Rat::from(x / &g);
        }
    }
    kernel
}

/// Rank of a dense rational matrix by the same naive elimination.
pub fn dense_rank_oracle(m: &[Vec<Rat>], cols: usize) -> usize {
    cols - dense_kernel_oracle(m, cols).len()
}
