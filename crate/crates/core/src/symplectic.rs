//! Symplectic spectra and partial transposition for n-mode covariance
//! matrices with quadratures ordered (x₁, p₁, x₂, p₂, …).

use nalgebra::{DMatrix, SMatrix};

use crate::error::{Error, Result};

/// Symplectic form ⊕ iσ_y = ⊕ [[0, 1], [−1, 0]].
pub fn symplectic_form<const N: usize>() -> SMatrix<f64, N, N> {
    assert!(N % 2 == 0, "symplectic form needs an even dimension");
    let mut omega = SMatrix::<f64, N, N>::zeros();
    for k in (0..N).step_by(2) {
        omega[(k, k + 1)] = 1.0;
        omega[(k + 1, k)] = -1.0;
    }
    omega
}

/// P X P with P flipping the momentum of `mode`.
pub fn partial_transpose<const N: usize>(x: &SMatrix<f64, N, N>, mode: usize) -> SMatrix<f64, N, N> {
    let p = 2 * mode + 1;
    assert!(p < N, "mode {mode} out of range");
    let mut out = *x;
    for k in 0..N {
        if k != p {
            out[(p, k)] = -out[(p, k)];
            out[(k, p)] = -out[(k, p)];
        }
    }
    out
}

/// Symplectic eigenvalues, one per mode, ascending.
///
/// With X = L Lᵀ, ΩX is similar to the antisymmetric LᵀΩL, whose singular
/// values are the moduli of the ±iν pairs. X must be positive definite.
pub fn symplectic_eigenvalues<const N: usize>(x: &SMatrix<f64, N, N>) -> Result<Vec<f64>> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonPhysicalCm("non-finite entries".into()));
    }
    let l = x
        .cholesky()
        .ok_or_else(|| Error::NonPhysicalCm("matrix is not positive definite".into()))?
        .l();
    let k = l.transpose() * symplectic_form::<N>() * l;
    let k = DMatrix::from_column_slice(N, N, k.as_slice());
    let sv = k
        .try_svd(false, false, f64::EPSILON, 10_000)
        .ok_or(Error::EigenFailure)?
        .singular_values;
    let mut moduli: Vec<f64> = sv.iter().copied().collect();
    moduli.sort_by(|a, b| a.total_cmp(b));
    // each ν appears twice
    Ok(moduli.into_iter().step_by(2).collect())
}

pub fn min_symplectic_eigenvalue<const N: usize>(x: &SMatrix<f64, N, N>) -> Result<f64> {
    Ok(symplectic_eigenvalues(x)?[0])
}
