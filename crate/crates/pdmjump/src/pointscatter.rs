//! Closed-form scattering off the point interaction `−a·δ(x) + b·δ′(x)` and
//! an independent matching-condition solver that cross-checks it.
//!
//! With the jump coupling `u0 = U(0)` and the convention `b = u0/2`, the
//! closed forms are
//!
//! ```text
//! R = −4(a + i·k·u0) / (4a + i·k·(4 + u0²))
//! T =  i·k·(4 − u0²) / (4a + i·k·(4 + u0²))
//! ```
//!
//! which satisfy `|R|² + |T|² = 1` identically; at `a = 0` they lose their
//! `k`-dependence and reduce to `R = −4u0/(4 + u0²)`, `T = (4 − u0²)/(4 + u0²)`.

use num_complex::Complex64;
use thiserror::Error;

use crate::massmodel::MassProfile;

/// The matching oracle is singular where `|b| = 1` (`θ = (1+b)/(1−b)`
/// vanishes or blows up); refuse within this margin of the singular value.
pub const DEGENERATE_COUPLING_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScatterError {
    #[error("mass must stay positive: mu must be finite and > -1, got {mu}")]
    MassNotPositive { mu: f64 },
    #[error("wavenumber must be finite and positive, got {k}")]
    NonPositiveWavenumber { k: f64 },
    #[error("matching conditions are singular at |b| = 1 (got b = {b}); use the closed form for the totally reflective limit")]
    DegenerateCoupling { b: f64 },
    #[error("small-jump expansion is only meaningful for 0 < mu < 1, got {mu}")]
    OutOfExpansionRange { mu: f64 },
}

/// Reflection/transmission amplitudes at a single energy, with probabilities
/// and the flux-conservation residual.
///
/// `k` is `None` for the pure `δ′` scatterer, whose amplitudes carry no
/// wavenumber dependence. `prob_t` is flux-weighted when the asymptotic media
/// differ, so `prob_r + prob_t − 1` is always the physical unitarity defect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAmplitudes {
    pub r: Complex64,
    pub t: Complex64,
    pub k: Option<f64>,
    pub prob_r: f64,
    pub prob_t: f64,
    pub unitarity_defect: f64,
}

impl ScatteringAmplitudes {
    pub(crate) fn new(r: Complex64, t: Complex64, k: Option<f64>) -> Self {
        Self::with_flux_weight(r, t, k, 1.0)
    }

    /// `prob_t = weight·|t|²` with `weight` the ratio of transmitted to
    /// incident group velocity, `(k_R/m_R)/(k_L/m_L)`.
    pub(crate) fn with_flux_weight(r: Complex64, t: Complex64, k: Option<f64>, weight: f64) -> Self {
        let prob_r = r.norm_sqr();
        let prob_t = weight * t.norm_sqr();
        ScatteringAmplitudes {
            r,
            t,
            k,
            prob_r,
            prob_t,
            unitarity_defect: prob_r + prob_t - 1.0,
        }
    }
}

/// Amplitudes of the pure `δ′` scatterer with coupling `u0` (`b = u0/2`,
/// `a = 0`). Real, `k`-independent, and total in `u0`.
///
/// `u0 = 0` is fully transparent; `u0 = ±2` is totally reflective
/// (`R = ∓1, T = 0`).
pub fn amplitudes_pure_dprime(u0: f64) -> ScatteringAmplitudes {
    let denom = 4.0 + u0 * u0;
    let r = -4.0 * u0 / denom;
    let t = (4.0 - u0 * u0) / denom;
    ScatteringAmplitudes::new(Complex64::new(r, 0.0), Complex64::new(t, 0.0), None)
}

/// Amplitudes for the single-parameter mass jump `m = 1 + μ·h(x)`:
/// the pure `δ′` closed form evaluated at the jump coupling
/// `u0 = μ/(1 + μ/2)²`.
pub fn mu_sweep_amplitudes(mu: f64) -> Result<ScatteringAmplitudes, ScatterError> {
    let profile =
        MassProfile::heaviside_mu(mu).map_err(|_| ScatterError::MassNotPositive { mu })?;
    let u0 = profile
        .jump_coupling()
        .expect("jump kind by construction")
        .u_at_zero;
    Ok(amplitudes_pure_dprime(u0))
}

/// Amplitudes with an additional attractive delta well `−a·δ(x)` on top of
/// the `δ′` coupling `u0` (`b = u0/2`), at wavenumber `k > 0`.
pub fn amplitudes_with_delta(
    a: f64,
    u0: f64,
    k: f64,
) -> Result<ScatteringAmplitudes, ScatterError> {
    if !k.is_finite() || k <= 0.0 {
        return Err(ScatterError::NonPositiveWavenumber { k });
    }
    if a == 0.0 {
        // The k-dependence cancels identically; evaluate the real form.
        let pure = amplitudes_pure_dprime(u0);
        return Ok(ScatteringAmplitudes::new(pure.r, pure.t, Some(k)));
    }
    let ik = Complex64::new(0.0, k);
    let denom = 4.0 * a + ik * (4.0 + u0 * u0);
    let r = -4.0 * (a + ik * u0) / denom;
    let t = ik * (4.0 - u0 * u0) / denom;
    Ok(ScatteringAmplitudes::new(r, t, Some(k)))
}

/// Closed form in terms of the raw couplings `(a, b)` rather than `u0 = 2b`:
/// `R = −(a + 2ikb)/(a + ik(1 + b²))`, `T = ik(1 − b²)/(a + ik(1 + b²))`.
pub fn amplitudes_from_coupling(
    a: f64,
    b: f64,
    k: f64,
) -> Result<ScatteringAmplitudes, ScatterError> {
    if !k.is_finite() || k <= 0.0 {
        return Err(ScatterError::NonPositiveWavenumber { k });
    }
    let ik = Complex64::new(0.0, k);
    let denom = a + ik * (1.0 + b * b);
    let r = -(a + 2.0 * ik * b) / denom;
    let t = ik * (1.0 - b * b) / denom;
    Ok(ScatteringAmplitudes::new(r, t, Some(k)))
}

/// Independent oracle: solves the plane-wave matching conditions
///
/// ```text
/// φ(0⁺) = θ·φ(0⁻),   φ′(0⁺) = θ⁻¹·φ′(0⁻) − [2a/(1−b²)]·φ(0⁻),   θ = (1+b)/(1−b)
/// ```
///
/// as a 2×2 linear system for `(R, T)` by Cramer's rule, without using the
/// closed forms. With `b = u0/2` this must agree with
/// [`amplitudes_with_delta`] to high accuracy.
pub fn amplitudes_matching_oracle(
    a: f64,
    b: f64,
    k: f64,
) -> Result<ScatteringAmplitudes, ScatterError> {
    if !k.is_finite() || k <= 0.0 {
        return Err(ScatterError::NonPositiveWavenumber { k });
    }
    if (b.abs() - 1.0).abs() < DEGENERATE_COUPLING_TOL {
        return Err(ScatterError::DegenerateCoupling { b });
    }
    let theta = (1.0 + b) / (1.0 - b);
    let renorm_delta = 2.0 * a / (1.0 - b * b);
    let ik = Complex64::new(0.0, k);

    // Unknowns x = (R, T) with incident wave e^{ikx} from the left:
    //   value:      θ(1 + R) = T
    //   derivative: ik·T = θ⁻¹·ik(1 − R) − renorm_delta·(1 + R)
    let a11 = Complex64::new(-theta, 0.0);
    let a12 = Complex64::new(1.0, 0.0);
    let b1 = Complex64::new(theta, 0.0);
    let a21 = ik / theta + renorm_delta;
    let a22 = ik;
    let b2 = ik / theta - renorm_delta;

    let det = a11 * a22 - a12 * a21;
    let r = (b1 * a22 - b2 * a12) / det;
    let t = (a11 * b2 - a21 * b1) / det;
    Ok(ScatteringAmplitudes::new(r, t, Some(k)))
}

/// Bound-state energy of the attractive delta component, from the pole of
/// the transmission amplitude on the positive imaginary `k` axis:
/// `E = −8a²/(4 + u0²)²` for `a > 0`, none otherwise.
pub fn bound_state(a: f64, u0: f64) -> Option<f64> {
    if a > 0.0 {
        let denom = 4.0 + u0 * u0;
        Some(-8.0 * a * a / (denom * denom))
    } else {
        None
    }
}

/// Deviation of the exact probabilities from their small-jump expansion
/// `|R|² ≈ μ²`, `|T|² ≈ 1 − μ²`; returns `(||R|²−μ²|, ||T|²−(1−μ²)|)`.
///
/// The next expansion term is `∓2μ³`, so both deviations stay below `3μ³`
/// for `μ ≤ 0.1`.
pub fn small_mu_expansion_check(mu: f64) -> Result<(f64, f64), ScatterError> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(ScatterError::OutOfExpansionRange { mu });
    }
    let amps = mu_sweep_amplitudes(mu)?;
    let err_r2 = (amps.prob_r - mu * mu).abs();
    let err_t2 = (amps.prob_t - (1.0 - mu * mu)).abs();
    Ok((err_r2, err_t2))
}
