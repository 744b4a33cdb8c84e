//! Bose-Einstein occupation of the vibrational bath.

use std::f64::consts::PI;

/// Reduced Planck constant, J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K (exact).
pub const K_B: f64 = 1.380_649e-23;

/// Angular frequency of a 30 THz molecular vibration, ω/2π = 30 THz.
pub const OMEGA_30_THZ: f64 = 2.0 * PI * 30.0e12;

/// Thermal occupation `1 / (exp(ħω / k_B T) - 1)`; zero at `T = 0`.
pub fn temperature_to_nth(t_kelvin: f64, omega_rad_s: f64) -> f64 {
    if t_kelvin <= 0.0 {
        return 0.0;
    }
    let x = HBAR * omega_rad_s / (K_B * t_kelvin);
    1.0 / x.exp_m1()
}

/// Inverse of [`temperature_to_nth`]. Returns 0 K for `n_th = 0`.
pub fn nth_to_temperature(n_th: f64, omega_rad_s: f64) -> f64 {
    if n_th <= 0.0 {
        return 0.0;
    }
    HBAR * omega_rad_s / (K_B * (1.0 / n_th).ln_1p())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_temperature_is_empty() {
        assert_eq!(temperature_to_nth(0.0, OMEGA_30_THZ), 0.0);
        assert_eq!(nth_to_temperature(0.0, OMEGA_30_THZ), 0.0);
    }

    #[test]
    fn thirty_terahertz_at_210_kelvin() {
        let n = temperature_to_nth(210.0, OMEGA_30_THZ);
        assert!((n - 1.0e-3).abs() < 1.0e-4, "n_th = {n}");
    }

    #[test]
    fn round_trip() {
        // below ~10 K the occupation underflows at this frequency
        for &t in &[20.0, 77.0, 210.0, 312.0, 500.0, 5000.0] {
            let back = nth_to_temperature(temperature_to_nth(t, OMEGA_30_THZ), OMEGA_30_THZ);
            assert!(((back - t) / t).abs() < 1e-9, "{t} -> {back}");
        }
    }
}
