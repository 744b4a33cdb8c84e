//! Steady-state covariance from the continuous Lyapunov equation
//! A V + V Aᵀ = −D, plus a time-domain integrator used as an oracle.

use nalgebra::{DMatrix, DVector, Matrix6, SMatrix};

use crate::error::{Error, Result};
use crate::linearize::LinearizedSystem;
use crate::stability::{self, check_stability};
use crate::symplectic;

/// Max-norm bound on A V + V Aᵀ + D for an accepted solution.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Floor on symplectic eigenvalues; vacuum sits at exactly 1/2.
pub const SYMPLECTIC_FLOOR: f64 = 0.5 - 1e-8;

const REFINEMENT_STEPS: usize = 3;

/// Steady-state quadrature covariance in the order (x, y, Q₁, P₁, Q₂, P₂).
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix(Matrix6<f64>);

impl CovarianceMatrix {
    /// Wraps `m`, symmetrizing it.
    pub fn new(m: Matrix6<f64>) -> Self {
        Self((m + m.transpose()) * 0.5)
    }

    pub fn vacuum() -> Self {
        Self(Matrix6::identity() * 0.5)
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.0
    }

    /// 4×4 covariance of modes `i` and `j` (0 = cavity, 1 = B₁, 2 = B₂).
    pub fn pair(&self, i: usize, j: usize) -> SMatrix<f64, 4, 4> {
        let idx = [2 * i, 2 * i + 1, 2 * j, 2 * j + 1];
        SMatrix::from_fn(|r, c| self.0[(idx[r], idx[c])])
    }

    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        symplectic::symplectic_eigenvalues(&self.0)
    }

    /// Smallest symplectic eigenvalue; ≥ 1/2 for every physical state.
    pub fn min_symplectic(&self) -> Result<f64> {
        Ok(self
            .symplectic_eigenvalues()?
            .into_iter()
            .fold(f64::INFINITY, f64::min))
    }

    pub fn residual(&self, sys: &LinearizedSystem) -> f64 {
        lyapunov_residual(&sys.drift, &self.0, &sys.diffusion)
    }
}

pub fn lyapunov_residual<const N: usize>(
    a: &SMatrix<f64, N, N>,
    v: &SMatrix<f64, N, N>,
    d: &SMatrix<f64, N, N>,
) -> f64 {
    (a * v + v * a.transpose() + d).amax()
}

/// Solves A V + V Aᵀ = −D through the vectorized system
/// (I ⊗ A + A ⊗ I) vec V = −vec D with iterative refinement.
///
/// No stability check is made here; see [`solve_lyapunov`].
pub fn solve_continuous_lyapunov<const N: usize>(
    a: &SMatrix<f64, N, N>,
    d: &SMatrix<f64, N, N>,
) -> Result<SMatrix<f64, N, N>> {
    let n2 = N * N;
    let mut kron = DMatrix::<f64>::zeros(n2, n2);
    // vec is column-major: index(i, j) = i + N j
    for j in 0..N {
        for i in 0..N {
            let row = i + N * j;
            for k in 0..N {
                kron[(row, k + N * j)] += a[(i, k)];
                kron[(row, i + N * k)] += a[(j, k)];
            }
        }
    }
    let rhs = DVector::from_iterator(n2, d.iter().map(|x| -x));
    let lu = kron.clone().lu();
    let mut x = lu
        .solve(&rhs)
        .ok_or_else(|| Error::SolverFailure("Kronecker system is singular".into()))?;
    for _ in 0..REFINEMENT_STEPS {
        let r = &rhs - &kron * &x;
        if r.amax() == 0.0 {
            break;
        }
        match lu.solve(&r) {
            Some(dx) => x += dx,
            None => break,
        }
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::SolverFailure("non-finite solution".into()));
    }
    let v = SMatrix::<f64, N, N>::from_column_slice(x.as_slice());
    let v = (v + v.transpose()) * 0.5;
    let residual = lyapunov_residual(a, &v, d);
    if residual >= RESIDUAL_TOL {
        return Err(Error::SolverFailure(format!(
            "residual {residual:e} exceeds {RESIDUAL_TOL:e}"
        )));
    }
    Ok(v)
}

/// Steady-state covariance of a stable linearized system. Unstable systems
/// are refused: their Lyapunov solution is not a physical steady state.
pub fn solve_lyapunov(sys: &LinearizedSystem) -> Result<CovarianceMatrix> {
    let verdict = check_stability(sys)?;
    if !verdict.stable {
        return Err(Error::UnstableSystem {
            abscissa: verdict.abscissa,
        });
    }
    solve_continuous_lyapunov(&sys.drift, &sys.diffusion).map(CovarianceMatrix::new)
}

/// Integrates dV/dt = A V + V Aᵀ + D from V(0) = 0 with classical RK4.
///
/// `dt` must satisfy dt ≤ 0.01 / ρ(A); the last step is shortened so the
/// integration lands exactly on `t_final`.
pub fn integrate_continuous_lyapunov<const N: usize>(
    a: &SMatrix<f64, N, N>,
    d: &SMatrix<f64, N, N>,
    t_final: f64,
    dt: f64,
) -> Result<SMatrix<f64, N, N>> {
    if !(t_final >= 0.0 && dt > 0.0) {
        return Err(Error::InvalidParams(format!(
            "need t_final >= 0 and dt > 0, got {t_final}, {dt}"
        )));
    }
    let dynamic = DMatrix::from_column_slice(N, N, a.as_slice());
    let radius = stability::verdict_for(&dynamic)?.spectral_radius;
    let max_dt = if radius > 0.0 { 0.01 / radius } else { f64::INFINITY };
    if dt > max_dt {
        return Err(Error::StepSizeTooLarge { dt, max_dt });
    }

    let rhs = |v: &SMatrix<f64, N, N>| a * v + v * a.transpose() + d;
    let steps = (t_final / dt).ceil() as usize;
    let log_every = (steps / 10).max(1);
    let mut v = SMatrix::<f64, N, N>::zeros();
    let mut t = 0.0;
    for step in 0..steps {
        let h = dt.min(t_final - t);
        let k1 = rhs(&v);
        let k2 = rhs(&(v + k1 * (h / 2.0)));
        let k3 = rhs(&(v + k2 * (h / 2.0)));
        let k4 = rhs(&(v + k3 * h));
        v += (k1 + (k2 + k3) * 2.0 + k4) * (h / 6.0);
        t += h;
        if (step + 1) % log_every == 0 {
            log::debug!("t = {t:.4e}, residual = {:.3e}", lyapunov_residual(a, &v, d));
        }
    }
    Ok((v + v.transpose()) * 0.5)
}

pub fn integrate_lyapunov_ode(
    sys: &LinearizedSystem,
    t_final: f64,
    dt: f64,
) -> Result<CovarianceMatrix> {
    let verdict = check_stability(sys)?;
    if !verdict.stable {
        return Err(Error::UnstableSystem {
            abscissa: verdict.abscissa,
        });
    }
    integrate_continuous_lyapunov(&sys.drift, &sys.diffusion, t_final, dt)
        .map(CovarianceMatrix::new)
}
