//! Mass profiles with a single jump at the origin, their smooth
//! regularizations, the deformed coordinate `q(x)`, and the jump coupling.

use std::f64::consts::{PI, SQRT_2};

use thiserror::Error;

/// Absolute tolerance for the adaptive quadrature behind [`MassProfile::pct_coordinate`].
const QUAD_TOL: f64 = 1e-10;

/// Errors from profile construction and profile-only operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("invalid mass profile: {0}")]
    InvalidProfile(String),
    #[error("regularization width must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("operation requires a jump profile, not a smooth one")]
    NotAJumpProfile,
    #[error("operation requires a smooth (regularized) profile")]
    NotSmooth,
}

/// Smoothing family used to replace the step at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regularizer {
    /// `h_ε(x) = (1 + tanh(x/ε)) / 2`
    Tanh,
    /// Linear ramp from 0 at `x = −ε` to 1 at `x = +ε`.
    LinearRamp,
    /// Normal CDF: `h_ε(x) = (1 + erf(x / (ε√2))) / 2`.
    ErrorFunction,
}

/// Coupling strength of the point interaction generated by a mass jump,
/// `U(0) = f′(h)/f(h)²` evaluated at the mid-step value `h = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpCoupling {
    pub u_at_zero: f64,
}

/// A one-dimensional effective-mass profile in units where the left
/// asymptotic mass of the single-parameter family is 1.
///
/// Jump kinds are discontinuous at `x = 0` with the mid-step convention
/// `m(0) = f(1/2)`; smooth kinds interpolate the same three values with a
/// regularizer of width `epsilon` and converge pointwise to their base jump
/// for every `x ≠ 0` as `epsilon → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MassProfile {
    /// `m(x) = 1 + μ·h(x)` with `h` the unit step, `h(0) = 1/2`.
    HeavisideMu { mu: f64 },
    /// `m = m1` for `x < 0`, `m2` at `x = 0`, `m3` for `x > 0`.
    HeavisideGeneral { m1: f64, m2: f64, m3: f64 },
    /// Smooth interpolation of the jump `(m1, m2, m3)`.
    SmoothRegularized {
        m1: f64,
        m2: f64,
        m3: f64,
        regularizer: Regularizer,
        epsilon: f64,
    },
}

/// The unique quadratic in the step fraction `h` through
/// `(0, m1)`, `(1/2, m2)`, `(1, m3)`. Reduces to `1 + μh` for the
/// single-parameter family, where the three values are collinear.
#[derive(Debug, Clone, Copy)]
struct StepInterpolant {
    c0: f64,
    c1: f64,
    c2: f64,
}

impl StepInterpolant {
    fn new(m1: f64, m2: f64, m3: f64) -> Self {
        StepInterpolant {
            c0: m1,
            c1: 4.0 * m2 - 3.0 * m1 - m3,
            c2: 2.0 * (m1 + m3) - 4.0 * m2,
        }
    }

    fn value(&self, h: f64) -> f64 {
        self.c0 + h * (self.c1 + h * self.c2)
    }

    fn slope(&self, h: f64) -> f64 {
        self.c1 + 2.0 * self.c2 * h
    }

    fn curvature(&self) -> f64 {
        2.0 * self.c2
    }

    /// Minimum over the closed unit interval; the profile is only usable
    /// when this stays positive.
    fn min_on_unit_interval(&self) -> f64 {
        let mut min = self.value(0.0).min(self.value(1.0));
        if self.c2 != 0.0 {
            let vertex = -self.c1 / (2.0 * self.c2);
            if vertex > 0.0 && vertex < 1.0 {
                min = min.min(self.value(vertex));
            }
        }
        min
    }
}

fn step_fraction(regularizer: Regularizer, epsilon: f64, x: f64) -> f64 {
    match regularizer {
        Regularizer::Tanh => 0.5 * (1.0 + (x / epsilon).tanh()),
        Regularizer::LinearRamp => {
            if x <= -epsilon {
                0.0
            } else if x >= epsilon {
                1.0
            } else {
                (x + epsilon) / (2.0 * epsilon)
            }
        }
        Regularizer::ErrorFunction => 0.5 * (1.0 + libm::erf(x / (epsilon * SQRT_2))),
    }
}

/// First and second derivative of the step fraction, for the kinds where
/// they exist in closed form.
fn step_fraction_derivatives(regularizer: Regularizer, epsilon: f64, x: f64) -> Option<(f64, f64)> {
    match regularizer {
        Regularizer::Tanh => {
            let u = x / epsilon;
            let sech2 = 1.0 / u.cosh().powi(2);
            let d1 = sech2 / (2.0 * epsilon);
            let d2 = -sech2 * u.tanh() / (epsilon * epsilon);
            Some((d1, d2))
        }
        Regularizer::ErrorFunction => {
            let d1 = (-x * x / (2.0 * epsilon * epsilon)).exp() / (epsilon * (2.0 * PI).sqrt());
            let d2 = -(x / (epsilon * epsilon)) * d1;
            Some((d1, d2))
        }
        Regularizer::LinearRamp => None,
    }
}

impl MassProfile {
    /// Single-parameter jump `m(x) = 1 + μ·h(x)`. The mass stays positive for
    /// `μ > −1`; the physically motivated range is `μ > 0`.
    pub fn heaviside_mu(mu: f64) -> Result<Self, ProfileError> {
        if !mu.is_finite() || mu <= -1.0 {
            return Err(ProfileError::InvalidProfile(format!(
                "mu must be finite and > -1, got {mu}"
            )));
        }
        Ok(MassProfile::HeavisideMu { mu })
    }

    /// General jump through the values `(m1, m2, m3)`, all strictly positive.
    pub fn heaviside_general(m1: f64, m2: f64, m3: f64) -> Result<Self, ProfileError> {
        for (name, v) in [("m1", m1), ("m2", m2), ("m3", m3)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(ProfileError::InvalidProfile(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        Ok(MassProfile::HeavisideGeneral { m1, m2, m3 })
    }

    /// Replaces the step of a jump profile by a smooth transition of width
    /// `epsilon`. The smooth profile takes the value `m2` at `x = 0` and the
    /// asymptotic values `m1`, `m3` away from the transition.
    pub fn regularize(
        &self,
        regularizer: Regularizer,
        epsilon: f64,
    ) -> Result<Self, ProfileError> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(ProfileError::NonPositiveEpsilon(epsilon));
        }
        let (m1, m2, m3) = self.jump_values()?;
        // The smooth profile samples the interpolant on all of (0, 1), not
        // just the three nodes, so it must stay positive there.
        let interp = StepInterpolant::new(m1, m2, m3);
        if interp.min_on_unit_interval() <= 0.0 {
            return Err(ProfileError::InvalidProfile(format!(
                "interpolant through ({m1}, {m2}, {m3}) is not positive on the whole step"
            )));
        }
        Ok(MassProfile::SmoothRegularized {
            m1,
            m2,
            m3,
            regularizer,
            epsilon,
        })
    }

    pub fn is_jump(&self) -> bool {
        !matches!(self, MassProfile::SmoothRegularized { .. })
    }

    /// The three defining values `(m1, m2, m3)`; for smooth kinds these are
    /// the values of the underlying jump.
    pub fn jump_values(&self) -> Result<(f64, f64, f64), ProfileError> {
        match *self {
            MassProfile::HeavisideMu { mu } => Ok((1.0, 1.0 + mu / 2.0, 1.0 + mu)),
            MassProfile::HeavisideGeneral { m1, m2, m3 }
            | MassProfile::SmoothRegularized { m1, m2, m3, .. } => Ok((m1, m2, m3)),
        }
    }

    /// Mass at position `x`. Total for every valid profile and always
    /// strictly positive.
    pub fn mass_at(&self, x: f64) -> f64 {
        match *self {
            MassProfile::HeavisideMu { mu } => {
                if x < 0.0 {
                    1.0
                } else if x > 0.0 {
                    1.0 + mu
                } else {
                    1.0 + mu / 2.0
                }
            }
            MassProfile::HeavisideGeneral { m1, m2, m3 } => {
                if x < 0.0 {
                    m1
                } else if x > 0.0 {
                    m3
                } else {
                    m2
                }
            }
            MassProfile::SmoothRegularized {
                m1,
                m2,
                m3,
                regularizer,
                epsilon,
            } => {
                let h = step_fraction(regularizer, epsilon, x);
                StepInterpolant::new(m1, m2, m3).value(h)
            }
        }
    }

    /// `(m, m′, m″)` at `x` for smooth profiles. Derivatives are analytic for
    /// the tanh and error-function regularizers and Richardson-extrapolated
    /// central differences (base step 1e-5) for the linear ramp.
    pub fn derivatives_at(&self, x: f64) -> Result<(f64, f64, f64), ProfileError> {
        let MassProfile::SmoothRegularized {
            m1,
            m2,
            m3,
            regularizer,
            epsilon,
        } = *self
        else {
            return Err(ProfileError::NotSmooth);
        };
        let interp = StepInterpolant::new(m1, m2, m3);
        match step_fraction_derivatives(regularizer, epsilon, x) {
            Some((h1, h2)) => {
                let h = step_fraction(regularizer, epsilon, x);
                let m = interp.value(h);
                let d1 = interp.slope(h) * h1;
                let d2 = interp.curvature() * h1 * h1 + interp.slope(h) * h2;
                Ok((m, d1, d2))
            }
            None => {
                let f = |t: f64| self.mass_at(t);
                Ok((f(x), richardson_d1(&f, x, 1e-5), richardson_d2(&f, x, 1e-5)))
            }
        }
    }

    /// Deformed coordinate `q(x) = ∫₀ˣ √(m(t)) dt`.
    ///
    /// Closed form for jump kinds, adaptive Simpson quadrature for smooth
    /// ones. Strictly increasing with `q(0) = 0`.
    pub fn pct_coordinate(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        match *self {
            MassProfile::HeavisideMu { mu } => {
                if x < 0.0 {
                    x
                } else {
                    x * (1.0 + mu).sqrt()
                }
            }
            MassProfile::HeavisideGeneral { m1, m3, .. } => {
                if x < 0.0 {
                    x * m1.sqrt()
                } else {
                    x * m3.sqrt()
                }
            }
            MassProfile::SmoothRegularized { .. } => {
                adaptive_simpson(&|t| self.mass_at(t).sqrt(), 0.0, x, QUAD_TOL)
            }
        }
    }

    /// Jump coupling `U(0) = f′(1/2)/f(1/2)² = (m3 − m1)/m2²`.
    ///
    /// Defined for jump kinds only. For the single-parameter family this is
    /// `μ/(1 + μ/2)²`; note the square in the denominator, which is what the
    /// closed-form reflection and transmission coefficients require.
    pub fn jump_coupling(&self) -> Result<JumpCoupling, ProfileError> {
        match *self {
            MassProfile::HeavisideMu { mu } => Ok(JumpCoupling {
                u_at_zero: mu / ((1.0 + mu / 2.0) * (1.0 + mu / 2.0)),
            }),
            MassProfile::HeavisideGeneral { m1, m2, m3 } => Ok(JumpCoupling {
                u_at_zero: (m3 - m1) / (m2 * m2),
            }),
            MassProfile::SmoothRegularized { .. } => Err(ProfileError::NotAJumpProfile),
        }
    }
}

fn richardson_d1(f: &impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(step / 2.0) - d(step)) / 3.0
}

fn richardson_d2(f: &impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(step / 2.0) - d(step)) / 3.0
}

/// Signed adaptive Simpson quadrature of `f` from `a` to `b`.
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(width: f64, fa: f64, fm: f64, fb: f64) -> f64 {
        width / 6.0 * (fa + 4.0 * fm + fb)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(m - a, fa, flm, fm);
        let right = simpson(b - m, fm, frm, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }

    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(b - a, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    /// Independent oracle: the Lagrange form of the quadratic through the
    /// three step nodes, evaluated directly from the basis polynomials.
    fn lagrange_interpolant(m1: f64, m2: f64, m3: f64, h: f64) -> f64 {
        m1 * 2.0 * (h - 0.5) * (h - 1.0) - m2 * 4.0 * h * (h - 1.0) + m3 * 2.0 * h * (h - 0.5)
    }

    #[test]
    fn mass_at_jump_examples() {
        let p = MassProfile::heaviside_mu(3.0).unwrap();
        assert_eq!(p.mass_at(-1.0), 1.0);
        assert_eq!(p.mass_at(0.0), 2.5);
        let g = MassProfile::heaviside_general(2.0, 3.0, 4.0).unwrap();
        assert_eq!(g.mass_at(0.7), 4.0);
    }

    #[test]
    fn construction_rejects_bad_values() {
        assert!(MassProfile::heaviside_mu(-1.0).is_err());
        assert!(MassProfile::heaviside_mu(f64::NAN).is_err());
        assert!(MassProfile::heaviside_general(1.0, 0.0, 2.0).is_err());
        assert!(MassProfile::heaviside_general(1.0, -3.0, 2.0).is_err());
        let p = MassProfile::heaviside_mu(1.0).unwrap();
        assert_eq!(
            p.regularize(Regularizer::Tanh, 0.0),
            Err(ProfileError::NonPositiveEpsilon(0.0))
        );
        assert_eq!(
            p.regularize(Regularizer::Tanh, -0.5),
            Err(ProfileError::NonPositiveEpsilon(-0.5))
        );
        // Three positive nodes whose interpolant dips below zero in between.
        assert!(MassProfile::heaviside_general(0.1, 0.2, 10.0)
            .unwrap()
            .regularize(Regularizer::Tanh, 0.5)
            .is_err());
    }

    #[test]
    fn pct_coordinate_examples() {
        let p = MassProfile::heaviside_mu(3.0).unwrap();
        assert_eq!(p.pct_coordinate(2.0), 4.0);
        assert_eq!(p.pct_coordinate(0.0), 0.0);
        assert_eq!(p.pct_coordinate(-1.5), -1.5);
    }

    #[test]
    fn pct_coordinate_smooth_matches_quadrature_of_sharp_tails() {
        // Far from the transition the smooth q(x) is the sharp q(x) up to a
        // constant offset fixed at the origin; check both asymptotic slopes.
        let p = MassProfile::heaviside_mu(3.0)
            .unwrap()
            .regularize(Regularizer::Tanh, 0.1)
            .unwrap();
        let q1 = p.pct_coordinate(5.0);
        let q2 = p.pct_coordinate(6.0);
        assert_abs_diff_eq!(q2 - q1, 2.0, epsilon = 1e-9);
        let q3 = p.pct_coordinate(-5.0);
        let q4 = p.pct_coordinate(-6.0);
        assert_abs_diff_eq!(q3 - q4, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn jump_coupling_examples() {
        let u = MassProfile::heaviside_mu(1.0)
            .unwrap()
            .jump_coupling()
            .unwrap()
            .u_at_zero;
        assert_abs_diff_eq!(u, 4.0 / 9.0, epsilon = 1e-15);
        // Oracle: slope of the Lagrange interpolant at h = 1/2 by exact
        // central difference (a quadratic has no higher terms), over f(1/2)².
        let fd = (lagrange_interpolant(1.0, 1.5, 2.0, 0.5 + 0.25)
            - lagrange_interpolant(1.0, 1.5, 2.0, 0.5 - 0.25))
            / 0.5;
        let f0 = lagrange_interpolant(1.0, 1.5, 2.0, 0.5);
        assert_abs_diff_eq!(u, fd / (f0 * f0), epsilon = 1e-14);

        let zero = MassProfile::heaviside_mu(0.0)
            .unwrap()
            .jump_coupling()
            .unwrap();
        assert_eq!(zero.u_at_zero, 0.0);

        let g = MassProfile::heaviside_general(2.0, 3.0, 4.0)
            .unwrap()
            .jump_coupling()
            .unwrap();
        assert_abs_diff_eq!(g.u_at_zero, 2.0 / 9.0, epsilon = 1e-15);
        let fd = (lagrange_interpolant(2.0, 3.0, 4.0, 0.75)
            - lagrange_interpolant(2.0, 3.0, 4.0, 0.25))
            / 0.5;
        let f0 = lagrange_interpolant(2.0, 3.0, 4.0, 0.5);
        assert_abs_diff_eq!(g.u_at_zero, fd / (f0 * f0), epsilon = 1e-14);

        assert_eq!(
            MassProfile::heaviside_mu(1.0)
                .unwrap()
                .regularize(Regularizer::Tanh, 0.1)
                .unwrap()
                .jump_coupling(),
            Err(ProfileError::NotAJumpProfile)
        );
    }

    #[test]
    fn regularize_examples() {
        let p = MassProfile::heaviside_mu(3.0)
            .unwrap()
            .regularize(Regularizer::Tanh, 0.1)
            .unwrap();
        assert_eq!(p.mass_at(0.0), 2.5);
        assert_abs_diff_eq!(p.mass_at(10.0), 4.0, epsilon = 1e-12);

        let g = MassProfile::heaviside_general(2.0, 3.0, 4.0)
            .unwrap()
            .regularize(Regularizer::LinearRamp, 1.0)
            .unwrap();
        assert_eq!(g.mass_at(-2.0), 2.0);

        let e = MassProfile::heaviside_mu(3.0)
            .unwrap()
            .regularize(Regularizer::ErrorFunction, 0.1)
            .unwrap();
        assert_eq!(e.mass_at(0.0), 2.5);
        assert_abs_diff_eq!(e.mass_at(10.0), 4.0, epsilon = 1e-12);
    }

    #[test]
    fn analytic_derivatives_match_finite_differences() {
        for reg in [Regularizer::Tanh, Regularizer::ErrorFunction] {
            let p = MassProfile::heaviside_general(2.0, 3.0, 4.0)
                .unwrap()
                .regularize(reg, 0.7)
                .unwrap();
            for x in [-1.3, -0.2, 0.0, 0.4, 1.1] {
                let (m, d1, d2) = p.derivatives_at(x).unwrap();
                assert_eq!(m, p.mass_at(x));
                let f = |t: f64| p.mass_at(t);
                assert_abs_diff_eq!(d1, richardson_d1(&f, x, 1e-4), epsilon = 1e-8);
                assert_abs_diff_eq!(d2, richardson_d2(&f, x, 1e-4), epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn linear_ramp_derivatives_inside_ramp() {
        let p = MassProfile::heaviside_mu(2.0)
            .unwrap()
            .regularize(Regularizer::LinearRamp, 1.0)
            .unwrap();
        // Inside the ramp m is linear in x: m' = mu/(2 eps), m'' = 0 for the
        // single-parameter family (the interpolant is linear in h).
        let (_, d1, d2) = p.derivatives_at(0.3).unwrap();
        assert_abs_diff_eq!(d1, 1.0, epsilon = 1e-9);
        // Second-difference rounding noise at step 1e-5 sits near 1e-5.
        assert_abs_diff_eq!(d2, 0.0, epsilon = 1e-4);
        assert!(MassProfile::heaviside_mu(2.0)
            .unwrap()
            .derivatives_at(0.0)
            .is_err());
    }

    #[test]
    fn smooth_mass_matches_lagrange_oracle() {
        let p = MassProfile::heaviside_general(2.0, 3.0, 4.0)
            .unwrap()
            .regularize(Regularizer::Tanh, 0.5)
            .unwrap();
        for x in [-0.8, -0.1, 0.0, 0.3, 1.2] {
            let h = 0.5 * (1.0 + (x / 0.5f64).tanh());
            assert_abs_diff_eq!(
                p.mass_at(x),
                lagrange_interpolant(2.0, 3.0, 4.0, h),
                epsilon = 1e-13
            );
        }
    }

    fn arb_jump() -> impl Strategy<Value = MassProfile> {
        prop_oneof![
            (-0.9f64..8.0).prop_map(|mu| MassProfile::heaviside_mu(mu).unwrap()),
            (0.5f64..4.0, 0.5f64..4.0, 0.5f64..4.0)
                .prop_map(|(a, b, c)| MassProfile::heaviside_general(a, b, c).unwrap()),
        ]
    }

    fn arb_regularizer() -> impl Strategy<Value = Regularizer> {
        prop_oneof![
            Just(Regularizer::Tanh),
            Just(Regularizer::LinearRamp),
            Just(Regularizer::ErrorFunction),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2500))]

        // 4 sampled positions per case: 10^4 positivity checks overall.
        #[test]
        fn mass_is_positive(profile in arb_jump(), reg in arb_regularizer(),
                            eps in 0.05f64..2.0, xs in prop::array::uniform4(-20.0f64..20.0)) {
            for &x in &xs {
                prop_assert!(profile.mass_at(x) > 0.0);
            }
            if let Ok(smooth) = profile.regularize(reg, eps) {
                for &x in &xs {
                    prop_assert!(smooth.mass_at(x) > 0.0);
                }
            }
        }

        #[test]
        fn pct_map_is_monotone(profile in arb_jump(), reg in arb_regularizer(),
                               eps in 0.1f64..2.0, x1 in -8.0f64..8.0, dx in 1e-3f64..8.0) {
            let x2 = x1 + dx;
            prop_assert!(profile.pct_coordinate(x2) > profile.pct_coordinate(x1));
            if let Ok(smooth) = profile.regularize(reg, eps) {
                prop_assert!(smooth.pct_coordinate(x2) > smooth.pct_coordinate(x1));
            }
        }

        #[test]
        fn pct_slope_matches_sqrt_mass(profile in arb_jump(), x in -3.0f64..3.0) {
            // Both one-sided neighborhoods of the jump; keep the stencil on
            // one side of the origin.
            let h = 1e-6;
            let x = if x.abs() < 2.0 * h { 0.5 } else { x };
            let x = if x < 0.0 { x - h } else { x };
            let slope = (profile.pct_coordinate(x + h) - profile.pct_coordinate(x)) / h;
            let m = profile.mass_at(x + 0.5 * h);
            prop_assert!((slope - m.sqrt()).abs() < 1e-8);
        }

        #[test]
        fn regularization_converges_pointwise(profile in arb_jump(), reg in arb_regularizer(),
                                              mag in 0.3f64..5.0, side in prop::bool::ANY) {
            let x = if side { mag } else { -mag };
            let sharp = profile.mass_at(x);
            let devs: Vec<f64> = [1e-1, 1e-2, 1e-3]
                .iter()
                .map(|&eps| {
                    let smooth = profile.regularize(reg, eps).unwrap();
                    (smooth.mass_at(x) - sharp).abs()
                })
                .collect();
            // Monotone decrease up to the evaluation rounding floor.
            prop_assert!(devs[1] <= devs[0] + 1e-13);
            prop_assert!(devs[2] <= devs[1] + 1e-13);
            prop_assert!(devs[2] < 1e-6);
        }
    }
}
