//! Scattering theory for a one-dimensional quantum particle whose effective
//! mass jumps across a heterojunction at the origin.
//!
//! The crate covers the full chain from the mass profile to observable
//! reflection/transmission data:
//!
//! - [`massmodel`]: step and smoothly regularized mass profiles, the deformed
//!   coordinate `q(x) = ∫ √m`, and the jump coupling `U(0)`.
//! - [`ordering`]: the kinetic-ordering exponents `(α, β, γ)` with
//!   `α + β + γ = −1`, their effective-potential coefficient pairs, named
//!   presets, and the constraint solvers that cancel the ill-defined `δ²`
//!   term.
//! - [`pct`]: effective potentials for smooth profiles and the distributional
//!   reduction of a mass jump into a `δ`/`δ′` point interaction.
//! - [`pointscatter`]: closed-form amplitudes for the `−aδ(x) + bδ′(x)`
//!   scatterer, an independent matching-condition solver, bound states, and
//!   small-jump asymptotics.
//! - [`numeric`]: transfer-matrix solvers in the physical and deformed
//!   coordinates plus a finite-difference operator-equivalence check.
//! - [`cli`]: the `pdmjump` command-line front end with CSV sweep output.
//!
//! Units: ħ = 1 and the reference mass m₀ = 1 throughout; energies are
//! E = k²/2 in the asymptotic unit-mass medium.

pub mod cli;
pub mod massmodel;
pub mod numeric;
pub mod ordering;
pub mod pct;
pub mod pointscatter;
