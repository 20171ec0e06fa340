//! Numeric evaluation and random-point oracles.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qtorus::{QLaurent, TorusError};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform values in [lo, hi].
pub fn random_values(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

/// Exact-to-float evaluation: generators are assigned real values (indexed by
/// generator id), omegas real values, q a complex unit. Classical mode passes
/// q = 1.
pub fn eval(
    value: &QLaurent,
    gens: &[f64],
    omegas: &[f64],
    q: Complex64,
) -> Result<Complex64, TorusError> {
    let basis = value.basis();
    if gens.len() < basis.len() {
        return Err(TorusError::MissingAssignment(
            "generator assignment too short".to_string(),
        ));
    }
    let mut total = Complex64::new(0.0, 0.0);
    let ln_q = q.ln();
    for (exp, coeff) in value.terms() {
        let mut arg = 0.0f64;
        for (g, n) in exp.iter() {
            arg += n as f64 * gens[g.0 as usize] / 2.0;
        }
        let base = Complex64::new(libm::exp(arg), 0.0);
        for (qpow, omega, c) in coeff.iter() {
            let mut v = base;
            v *= (ln_q * (qpow as f64 / 4.0)).exp();
            for (w, e) in omega.iter() {
                let Some(&val) = omegas.get(w.0 as usize) else {
                    return Err(TorusError::MissingAssignment(
                        basis.omega(w).name.clone(),
                    ));
                };
                let mut p = 1.0f64;
                for _ in 0..e {
                    p *= val;
                }
                v *= p;
            }
            let num = *c.numer() as f64;
            let den = *c.denom() as f64;
            total += v * (num / den);
        }
    }
    Ok(total)
}

/// Classical evaluation with q = 1 (result is real).
pub fn eval_classical(value: &QLaurent, gens: &[f64], omegas: &[f64]) -> Result<f64, TorusError> {
    eval(value, gens, omegas, Complex64::new(1.0, 0.0)).map(|c| c.re)
}

/// Plain f64 2x2 matrices for the numeric skein and collision oracles.
pub type M2 = [[f64; 2]; 2];

pub fn m2_mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn m2_trace(a: &M2) -> f64 {
    a[0][0] + a[1][1]
}

pub fn m2_inv_sl2(a: &M2) -> M2 {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

pub const M2_K: M2 = [[0.0, 0.0], [-1.0, 0.0]];

/// Random SL2 matrix with entries of moderate size.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> M2 {
    loop {
        let a: f64 = rng.gen_range(-2.0..2.0);
        if a.abs() < 0.2 {
            continue;
        }
        let b: f64 = rng.gen_range(-2.0..2.0);
        let c: f64 = rng.gen_range(-2.0..2.0);
        let d = (1.0 + b * c) / a;
        if d.abs() > 50.0 {
            continue;
        }
        return [[a, b], [c, d]];
    }
}
