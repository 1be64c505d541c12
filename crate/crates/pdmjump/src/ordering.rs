//! Kinetic-ordering exponents for the position-dependent-mass Hamiltonian,
//! the coefficient pairs they induce in the effective potentials, named
//! presets from the literature, and the constraint solvers that remove the
//! ill-defined `δ²` term for a mass jump.
//!
//! The symmetrized kinetic operator `−¼[mᵅ ∂ mᵝ ∂ mᵞ + mᵞ ∂ mᵝ ∂ mᵅ]`
//! requires `α + β + γ = −1`. Rewriting it as `−½ ∂ (1/m) ∂ + Ṽ` gives
//!
//! ```text
//! Ṽ     = g1·m″/m² − g2·m′²/m³,   g1 = (1+β)/4,   g2 = ½[α(α+β+1) + β + 1]
//! ```
//!
//! and mapping to the deformed coordinate `q` (unit mass) gives
//!
//! ```text
//! V_eff = G1·m″/m² − G2·m′²/m³,   G1 = (1+2β)/8,  G2 = ½[α(α+β+1) + β + 9/16]
//! ```
//!
//! so that `G1 = g1 − 1/8` and `G2 = g2 − 7/32` identically.

use thiserror::Error;

/// Validation tolerance on the trace constraint `α + β + γ = −1`.
pub const CONSTRAINT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrderingError {
    #[error("ordering exponents must satisfy alpha + beta + gamma = -1, got sum {sum}")]
    ConstraintViolated { sum: f64 },
    #[error("ordering exponents must be finite")]
    NonFinite,
}

/// Ordering exponents `(α, β, γ)` with `α + β + γ = −1` guaranteed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderingParams {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl OrderingParams {
    /// Builds from `(α, β)`, deriving `γ = −1 − α − β`.
    pub fn from_alpha_beta(alpha: f64, beta: f64) -> Result<Self, OrderingError> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(OrderingError::NonFinite);
        }
        Ok(OrderingParams {
            alpha,
            beta,
            gamma: -1.0 - alpha - beta,
        })
    }

    /// Validates a full triple against the trace constraint.
    pub fn from_triple(alpha: f64, beta: f64, gamma: f64) -> Result<Self, OrderingError> {
        if !alpha.is_finite() || !beta.is_finite() || !gamma.is_finite() {
            return Err(OrderingError::NonFinite);
        }
        let sum = alpha + beta + gamma;
        if (sum + 1.0).abs() > CONSTRAINT_TOL {
            return Err(OrderingError::ConstraintViolated { sum });
        }
        Ok(OrderingParams { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The four effective-potential coefficients induced by this ordering.
    pub fn coefficients(&self) -> AmbiguityCoefficients {
        let (alpha, beta) = (self.alpha, self.beta);
        let cross = alpha * (alpha + beta + 1.0);
        AmbiguityCoefficients {
            g1: (1.0 + beta) / 4.0,
            g2: 0.5 * (cross + beta + 1.0),
            big_g1: (1.0 + 2.0 * beta) / 8.0,
            big_g2: 0.5 * (cross + beta + 9.0 / 16.0),
        }
    }
}

/// Coefficients of `m″/m²` and `m′²/m³` in `Ṽ` (lowercase) and in the
/// deformed-coordinate effective potential `V_eff` (uppercase `G`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmbiguityCoefficients {
    pub g1: f64,
    pub g2: f64,
    pub big_g1: f64,
    pub big_g2: f64,
}

impl AmbiguityCoefficients {
    /// `2·G1 − G2`, the coefficient that must vanish for the `δ²` term of a
    /// mass jump to cancel.
    pub fn delta2_residual(&self) -> f64 {
        2.0 * self.big_g1 - self.big_g2
    }
}

/// A root of the symmetric `δ²`-cancellation constraint together with its
/// effective-potential coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricRoot {
    pub params: OrderingParams,
    pub coefficients: AmbiguityCoefficients,
}

/// The named orderings, exactly as shipped:
///
/// | name          | (α, β, γ)            |
/// |---------------|----------------------|
/// | `GoraWilliams`  | (−1, 0, 0)          |
/// | `BenDanielDuke` | (0, −1, 0)          |
/// | `ZhuKroemer`    | (−1/2, 0, −1/2)     |
/// | `LiKuhn`        | (0, −1/2, −1/2)     |
/// | `MM`            | (−1/4, −1/2, −1/4)  |
/// | `MM1_paper`     | (−3/4, 1/2, −3/4)   |
/// | `MM1_derived`   | (1/4, −3/2, 1/4)    |
///
/// `MM1_paper` is the published claimed solution of the symmetric
/// `δ²`-cancellation constraint; it does not actually satisfy it
/// (`2G1 − G2 = 1/4`). `MM1_derived` is the non-trivial root that does.
/// Both are kept so either choice can be fed through the pipeline and its
/// obstruction status reported.
pub fn presets() -> Vec<(&'static str, OrderingParams)> {
    let p = |a: f64, b: f64| OrderingParams::from_alpha_beta(a, b).expect("finite preset");
    vec![
        ("GoraWilliams", p(-1.0, 0.0)),
        ("BenDanielDuke", p(0.0, -1.0)),
        ("ZhuKroemer", p(-0.5, 0.0)),
        ("LiKuhn", p(0.0, -0.5)),
        ("MM", p(-0.25, -0.5)),
        ("MM1_paper", p(-0.75, 0.5)),
        ("MM1_derived", p(0.25, -1.5)),
    ]
}

/// Looks up a preset by its exact name.
pub fn preset(name: &str) -> Option<OrderingParams> {
    presets()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p)
}

/// All orderings for which the deformed-coordinate particle stays free
/// (`G1 = G2 = 0`).
///
/// `G1 = 0` forces `β = −1/2`; `G2` then reduces to `(α + 1/4)²/... = 0`
/// whose double root is `α = −1/4`, and the trace constraint gives
/// `γ = −1/4 = α`. The solution set is exactly the `MM` ordering.
pub fn solve_free_particle() -> Vec<OrderingParams> {
    let beta = -0.5;
    // G2(alpha, -1/2) = (alpha^2 + alpha/2 + 1/16)/2 = (alpha + 1/4)^2 / 2.
    let alpha = -0.25;
    vec![OrderingParams::from_alpha_beta(alpha, beta).expect("finite root")]
}

/// Roots of the `δ²`-cancellation constraint `2G1 − G2 = 0` under the
/// heterojunction symmetry `α = γ`.
///
/// With `α = γ` the trace constraint pins `β = −1 − 2α`, and the residual
/// reduces to the quadratic `α²/2 − 1/32 = 0`, giving `α = ±1/4`. Both roots
/// are returned, each annotated with its `(G1, G2)`: the `−1/4` root is the
/// free `MM` ordering, the `+1/4` root keeps a genuine `δ′` term
/// (`G1 = −1/4`).
pub fn solve_delta2_free_symmetric() -> Vec<SymmetricRoot> {
    // alpha^2 / 2 - 1/32 = 0
    let magnitude = (2.0f64 * (1.0 / 32.0)).sqrt();
    [-magnitude, magnitude]
        .into_iter()
        .map(|alpha| {
            let params =
                OrderingParams::from_alpha_beta(alpha, -1.0 - 2.0 * alpha).expect("finite root");
            SymmetricRoot {
                params,
                coefficients: params.coefficients(),
            }
        })
        .collect()
}
