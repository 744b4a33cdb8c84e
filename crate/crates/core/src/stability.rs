//! Asymptotic stability of the fluctuation dynamics.

use nalgebra::{Complex, DMatrix, DVector, Matrix6};

use crate::error::{Error, Result};
use crate::linearize::LinearizedSystem;

/// Margin below zero the spectral abscissa must clear, in units of ω_m.
pub const STABILITY_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityVerdict {
    pub stable: bool,
    /// Largest real part over the drift spectrum.
    pub abscissa: f64,
    /// Largest eigenvalue modulus.
    pub spectral_radius: f64,
    pub eigenvalues: Vec<Complex<f64>>,
}

/// Eigenvalues of a real square matrix via the real Schur form.
pub fn eigenvalues(a: &DMatrix<f64>) -> Result<Vec<Complex<f64>>> {
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParams("matrix has non-finite entries".into()));
    }
    if let Some(schur) = nalgebra::linalg::Schur::try_new(a.clone(), f64::EPSILON, 10_000) {
        return Ok(schur.complex_eigenvalues().iter().copied().collect());
    }
    // Shifted QR can stall on exactly symmetric block structure. A fixed
    // Householder similarity H A H keeps the spectrum and breaks the symmetry.
    let n = a.nrows();
    let v = DVector::from_fn(n, |i, _| 1.0 + (i as f64 + 1.0).sqrt());
    let v = v.normalize();
    let h = DMatrix::identity(n, n) - (&v * v.transpose()) * 2.0;
    let rotated = &h * a * &h;
    if let Some(schur) = nalgebra::linalg::Schur::try_new(rotated, f64::EPSILON, 10_000) {
        return Ok(schur.complex_eigenvalues().iter().copied().collect());
    }
    Err(Error::EigenFailure)
}

pub fn verdict_for(a: &DMatrix<f64>) -> Result<StabilityVerdict> {
    let eigenvalues = eigenvalues(a)?;
    let abscissa = eigenvalues
        .iter()
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let spectral_radius = eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(StabilityVerdict {
        stable: abscissa < -STABILITY_MARGIN,
        abscissa,
        spectral_radius,
        eigenvalues,
    })
}

fn dynamic(a: &Matrix6<f64>) -> DMatrix<f64> {
    DMatrix::from_column_slice(6, 6, a.as_slice())
}

pub fn check_stability(sys: &LinearizedSystem) -> Result<StabilityVerdict> {
    verdict_for(&dynamic(&sys.drift))
}
