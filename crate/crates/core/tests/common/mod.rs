#![allow(dead_code)]

use darkmode_optomech::symplectic::symplectic_form;
use nalgebra::{DMatrix, Matrix4, SMatrix};
use rand::Rng;

/// Random N-mode physical covariance matrix S diag(ν) Sᵀ with S = exp(ΩH)
/// symplectic and every ν ≥ 1/2.
pub fn random_physical_cm<const N: usize>(rng: &mut impl Rng, h_scale: f64) -> SMatrix<f64, N, N> {
    let mut h = SMatrix::<f64, N, N>::zeros();
    for i in 0..N {
        for j in i..N {
            let v = rng.gen_range(-h_scale..h_scale);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    let omega = symplectic_form::<N>();
    let gen = omega * h;
    let s = DMatrix::from_column_slice(N, N, gen.as_slice()).exp();
    let s = SMatrix::<f64, N, N>::from_column_slice(s.as_slice());
    assert!((s * omega * s.transpose() - omega).amax() < 1e-9, "S is not symplectic");
    let mut d = SMatrix::<f64, N, N>::zeros();
    for k in (0..N).step_by(2) {
        let nu = 0.5 + rng.gen_range(0.0..2.0f64).powi(2);
        d[(k, k)] = nu;
        d[(k + 1, k + 1)] = nu;
    }
    let v = s * d * s.transpose();
    (v + v.transpose()) * 0.5
}

/// Two-mode squeezed vacuum, vacuum variance 1/2.
pub fn tmsv(r: f64) -> Matrix4<f64> {
    let c = 0.5 * (2.0 * r).cosh();
    let s = 0.5 * (2.0 * r).sinh();
    Matrix4::new(
        c, 0.0, s, 0.0, //
        0.0, c, 0.0, -s, //
        s, 0.0, c, 0.0, //
        0.0, -s, 0.0, c,
    )
}
