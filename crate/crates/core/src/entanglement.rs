//! Logarithmic negativity for mode pairs and the minimum residual contangle
//! for the cavity + two collective modes.
//!
//! Vacuum variance is 1/2, so a bipartition is entangled when the smallest
//! symplectic eigenvalue of its partial transpose drops below 1/2.

use nalgebra::{Matrix2, Matrix4};

use crate::error::{Error, Result};
use crate::lyapunov::CovarianceMatrix;
use crate::symplectic::{min_symplectic_eigenvalue, partial_transpose};

/// Residuals in (−MONOGAMY_TOL, 0) are float noise and are clamped to zero.
pub const MONOGAMY_TOL: f64 = 1e-9;
const DET_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Cavity,
    B1,
    B2,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Cavity, Mode::B1, Mode::B2];

    pub fn index(self) -> usize {
        match self {
            Mode::Cavity => 0,
            Mode::B1 => 1,
            Mode::B2 => 2,
        }
    }

    /// The two remaining modes, in index order.
    pub fn others(self) -> (Mode, Mode) {
        match self {
            Mode::Cavity => (Mode::B1, Mode::B2),
            Mode::B1 => (Mode::Cavity, Mode::B2),
            Mode::B2 => (Mode::Cavity, Mode::B1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pair {
    CavityB1,
    CavityB2,
    B1B2,
}

impl Pair {
    pub fn of(a: Mode, b: Mode) -> Pair {
        match (a.index().min(b.index()), a.index().max(b.index())) {
            (0, 1) => Pair::CavityB1,
            (0, 2) => Pair::CavityB2,
            (1, 2) => Pair::B1B2,
            _ => panic!("a pair needs two distinct modes"),
        }
    }

    pub fn modes(self) -> (Mode, Mode) {
        match self {
            Pair::CavityB1 => (Mode::Cavity, Mode::B1),
            Pair::CavityB2 => (Mode::Cavity, Mode::B2),
            Pair::B1B2 => (Mode::B1, Mode::B2),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Pair::CavityB1 => "a-B1",
            Pair::CavityB2 => "a-B2",
            Pair::B1B2 => "B1-B2",
        }
    }
}

/// Two-mode block view [[Ψ₁, Ψ₃], [Ψ₃ᵀ, Ψ₂]].
#[derive(Debug, Clone, PartialEq)]
pub struct BipartitionView {
    pub psi_1: Matrix2<f64>,
    pub psi_2: Matrix2<f64>,
    pub psi_3: Matrix2<f64>,
    pub pair: Option<Pair>,
}

impl BipartitionView {
    pub fn from_covariance(cm: &CovarianceMatrix, pair: Pair) -> Self {
        let (a, b) = pair.modes();
        let mut view = Self::from_matrix(&cm.pair(a.index(), b.index()));
        view.pair = Some(pair);
        view
    }

    /// Splits a 4×4 two-mode covariance; the matrix is symmetrized.
    pub fn from_matrix(m: &Matrix4<f64>) -> Self {
        let m = (m + m.transpose()) * 0.5;
        Self {
            psi_1: m.fixed_view::<2, 2>(0, 0).into_owned(),
            psi_2: m.fixed_view::<2, 2>(2, 2).into_owned(),
            psi_3: m.fixed_view::<2, 2>(0, 2).into_owned(),
            pair: None,
        }
    }

    pub fn matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.psi_1);
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.psi_2);
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&self.psi_3);
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&self.psi_3.transpose());
        m
    }

    /// Σ = det Ψ₁ + det Ψ₂ − 2 det Ψ₃
    pub fn seralian(&self) -> f64 {
        self.psi_1.determinant() + self.psi_2.determinant() - 2.0 * self.psi_3.determinant()
    }

    /// Smallest symplectic eigenvalue of the partial transpose from the
    /// determinant invariants.
    pub fn partial_transpose_nu(&self) -> Result<f64> {
        let d1 = self.psi_1.determinant();
        let d2 = self.psi_2.determinant();
        if !(d1 > 0.0 && d2 > 0.0 && self.psi_1.trace() > 0.0 && self.psi_2.trace() > 0.0) {
            return Err(Error::NonPhysicalCm(
                "single-mode blocks must be positive definite".into(),
            ));
        }
        let sigma = self.seralian();
        let det = self.matrix().determinant();
        if det <= 0.0 {
            return Err(Error::NonPhysicalCm(format!("det V_sub = {det:e}")));
        }
        let mut disc = sigma * sigma - 4.0 * det;
        if disc < 0.0 {
            if disc < -DET_TOL * sigma * sigma {
                return Err(Error::NonPhysicalCm(format!(
                    "complex symplectic eigenvalue (discriminant {disc:e})"
                )));
            }
            disc = 0.0;
        }
        let root = disc.sqrt();
        // ν₋² = (Σ − √disc)/2, rewritten as 2 det/(Σ + √disc) to avoid cancellation
        let nu_sq = if sigma > 0.0 {
            2.0 * det / (sigma + root)
        } else {
            (sigma - root) / 2.0
        };
        if !(nu_sq > 0.0) {
            return Err(Error::NonPhysicalCm(format!("ν² = {nu_sq:e}")));
        }
        Ok(nu_sq.sqrt())
    }
}

pub fn negativity_from_nu(nu: f64) -> f64 {
    (-(2.0 * nu).ln()).max(0.0)
}

/// E_N = max[0, −ln 2ν] for a two-mode view.
pub fn log_negativity_2mode(view: &BipartitionView) -> Result<f64> {
    view.partial_transpose_nu().map(negativity_from_nu)
}

/// Same quantity as [`log_negativity_2mode`], from the spectrum of
/// iΩ₂ (P V_sub P) instead of determinant invariants.
pub fn log_negativity_2mode_direct(view: &BipartitionView) -> Result<f64> {
    let pt = partial_transpose(&view.matrix(), 1);
    min_symplectic_eigenvalue(&pt).map(negativity_from_nu)
}

/// E_N of `focus` against the other two modes: ζ = min |eig(iΩ₃ P V P)|.
pub fn log_negativity_one_vs_two(cm: &CovarianceMatrix, focus: Mode) -> Result<f64> {
    let pt = partial_transpose(cm.matrix(), focus.index());
    min_symplectic_eigenvalue(&pt).map(negativity_from_nu)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub e_a_b1: f64,
    pub e_a_b2: f64,
    pub e_b1_b2: f64,
    /// E_N for a|B₁B₂, B₁|aB₂, B₂|aB₁.
    pub one_vs_two: [f64; 3],
    /// Squared log-negativities of the one-vs-two bipartitions.
    pub contangle_one_vs_two: [f64; 3],
    /// Squared log-negativities of a–B₁, a–B₂, B₁–B₂.
    pub contangle_pairs: [f64; 3],
    /// R^{r|st} for r = a, B₁, B₂.
    pub residuals: [f64; 3],
    pub r_min: f64,
    pub monogamy_ok: bool,
}

impl EntanglementReport {
    pub fn pair(&self, pair: Pair) -> f64 {
        match pair {
            Pair::CavityB1 => self.e_a_b1,
            Pair::CavityB2 => self.e_a_b2,
            Pair::B1B2 => self.e_b1_b2,
        }
    }

    pub fn residual(&self, focus: Mode) -> f64 {
        self.residuals[focus.index()]
    }
}

/// Builds the full report without judging monogamy; residuals are raw.
pub fn entanglement_measures(cm: &CovarianceMatrix) -> Result<EntanglementReport> {
    let mut pairs = [0.0; 3];
    for (slot, pair) in [Pair::CavityB1, Pair::CavityB2, Pair::B1B2].into_iter().enumerate() {
        pairs[slot] = log_negativity_2mode(&BipartitionView::from_covariance(cm, pair))?;
    }
    let pair_value = |p: Pair| match p {
        Pair::CavityB1 => pairs[0],
        Pair::CavityB2 => pairs[1],
        Pair::B1B2 => pairs[2],
    };
    let mut one_vs_two = [0.0; 3];
    let mut residuals = [0.0; 3];
    for focus in Mode::ALL {
        let e = log_negativity_one_vs_two(cm, focus)?;
        let (s, t) = focus.others();
        let c_s = pair_value(Pair::of(focus, s)).powi(2);
        let c_t = pair_value(Pair::of(focus, t)).powi(2);
        one_vs_two[focus.index()] = e;
        residuals[focus.index()] = e * e - c_s - c_t;
    }
    let r_min = residuals.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(EntanglementReport {
        e_a_b1: pairs[0],
        e_a_b2: pairs[1],
        e_b1_b2: pairs[2],
        one_vs_two,
        contangle_one_vs_two: one_vs_two.map(|e| e * e),
        contangle_pairs: pairs.map(|e| e * e),
        residuals,
        r_min,
        monogamy_ok: residuals.iter().all(|&r| r >= -MONOGAMY_TOL),
    })
}

/// Residual contangles R^{r|st} = C_{r|st} − C_{r|s} − C_{r|t} and their
/// minimum. Residuals within −1e−9 of zero are clamped to 0; anything more
/// negative is a monogamy violation and is returned as an error carrying
/// the unclamped report.
pub fn residual_contangle(cm: &CovarianceMatrix) -> Result<EntanglementReport> {
    let mut report = entanglement_measures(cm)?;
    if !report.monogamy_ok {
        return Err(Error::MonogamyViolation {
            report: Box::new(report),
        });
    }
    for r in report.residuals.iter_mut() {
        if *r < 0.0 {
            *r = 0.0;
        }
    }
    report.r_min = report.residuals.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(report)
}
