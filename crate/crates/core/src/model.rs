//! Energy spectrum of a particle between the walls of a Pöschl-Teller well and
//! the pressure it exerts on them.
//!
//! Levels follow `E_n(L) = W(L)·[n² + λ(L)(2n + 1)]` with the square-well scale
//! `W(L) = π²ħ²/(2mL²)`. The anharmonicity λ is either held fixed (the regime
//! every cycle computation assumes), zero (free particle), or derived from a
//! width-dependent ζ(L) = c/L.
//!
//! Wall pressure is available by three routes:
//!
//! * [`pressure_exact`]: `2E/L`, exact whenever λ does not depend on `L`;
//! * [`pressure_hf`]: `−∂E/∂L` by finite differences, valid in every mode;
//! * [`pressure_paper`]: the printed operator with its `{1 − μ(λ)}` factor,
//!   kept only as a comparator.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics;

/// Reduced Planck constant in J·s (CODATA 2018).
pub const HBAR_SI: f64 = 1.054_571_817e-34;

/// Default relative step for [`pressure_hf`].
pub const DEFAULT_HF_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    /// ħ = m = 1.
    Natural,
    Si,
}

impl fmt::Display for Units {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Units::Natural => f.write_str("natural"),
            Units::Si => f.write_str("si"),
        }
    }
}

/// ħ and the particle mass; together they fix every energy scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub hbar: f64,
    pub mass: f64,
    pub units: Units,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::natural()
    }
}

impl PhysicalParams {
    pub const fn natural() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            units: Units::Natural,
        }
    }

    pub fn si(hbar: f64, mass: f64) -> Result<Self> {
        Self::new(hbar, mass, Units::Si)
    }

    pub fn new(hbar: f64, mass: f64, units: Units) -> Result<Self> {
        let p = Self { hbar, mass, units };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(Error::Domain(format!("hbar must be positive, got {}", self.hbar)));
        }
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(Error::Domain(format!("mass must be positive, got {}", self.mass)));
        }
        Ok(())
    }

    /// π²ħ²/(2m), the numerator of `W(L)`.
    pub fn energy_unit(&self) -> f64 {
        PI * PI * self.hbar * self.hbar / (2.0 * self.mass)
    }
}

/// How the anharmonicity parameter λ is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum LambdaSpec {
    /// λ held constant in `L`.
    Frozen { lambda: f64 },
    /// λ = 0: the infinite square well.
    FreeParticle,
    /// Experimental: λ(L) = √((2/(πζ))² + 1) − 1 with ζ(L) = c/L.
    FromZeta { c: f64 },
}

impl LambdaSpec {
    pub fn frozen(lambda: f64) -> Result<Self> {
        let s = LambdaSpec::Frozen { lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn from_zeta(c: f64) -> Result<Self> {
        let s = LambdaSpec::FromZeta { c };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            LambdaSpec::Frozen { lambda } if !(lambda >= 0.0 && lambda.is_finite()) => Err(
                Error::Domain(format!("frozen lambda must be finite and >= 0, got {lambda}")),
            ),
            LambdaSpec::FromZeta { c } if !(c > 0.0 && c.is_finite()) => {
                Err(Error::Domain(format!("zeta constant c must be positive, got {c}")))
            }
            _ => Ok(()),
        }
    }

    /// True when λ does not depend on the width.
    pub fn is_frozen(&self) -> bool {
        !matches!(self, LambdaSpec::FromZeta { .. })
    }

    /// The constant λ of a frozen or free-particle spec.
    pub fn frozen_value(&self) -> Result<f64> {
        self.validate()?;
        match *self {
            LambdaSpec::Frozen { lambda } => Ok(lambda),
            LambdaSpec::FreeParticle => Ok(0.0),
            LambdaSpec::FromZeta { .. } => Err(Error::UnsupportedMode(
                "lambda depends on L in from_zeta mode".into(),
            )),
        }
    }
}

/// Quantum number of a level; `n = 1` is the ground state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Level(u32);

impl Level {
    pub const GROUND: Level = Level(1);
    pub const FIRST_EXCITED: Level = Level(2);

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("quantum number n must be >= 1".into()));
        }
        Ok(Level(n))
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// `n² + λ(2n + 1)`, the bracket multiplying `W(L)`.
    pub fn spectral_factor(self, lambda: f64) -> f64 {
        let n = f64::from(self.0);
        n * n + lambda * (2.0 * n + 1.0)
    }
}

pub(crate) fn check_width(l: f64) -> Result<()> {
    if l > 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("well width must be positive and finite, got {l}")))
    }
}

/// `W(L) = π²ħ²/(2mL²)`.
pub fn scale_energy(l: f64, p: &PhysicalParams) -> Result<f64> {
    check_width(l)?;
    p.validate()?;
    Ok(p.energy_unit() / (l * l))
}

/// λ at width `l`.
pub fn lambda_of(l: f64, spec: &LambdaSpec) -> Result<f64> {
    check_width(l)?;
    spec.validate()?;
    Ok(match *spec {
        LambdaSpec::Frozen { lambda } => lambda,
        LambdaSpec::FreeParticle => 0.0,
        LambdaSpec::FromZeta { c } => {
            let zeta = c / l;
            let x = 2.0 / (PI * zeta);
            // √(x² + 1) − 1 without cancellation for small x.
            x * x / ((x * x + 1.0).sqrt() + 1.0)
        }
    })
}

/// `μ(λ) = 1 − (λ − 1)/(2λ − 1)`; undefined at λ = 1/2.
pub fn mu_of(lambda: f64) -> Result<f64> {
    let denom = 2.0 * lambda - 1.0;
    if denom == 0.0 {
        return Err(Error::Singularity { lambda });
    }
    Ok(1.0 - (lambda - 1.0) / denom)
}

/// `E_n(L) = W(L)·[n² + λ(L)(2n + 1)]`.
pub fn energy_level(n: Level, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let w = scale_energy(l, p)?;
    let lambda = lambda_of(l, spec)?;
    Ok(w * n.spectral_factor(lambda))
}

/// Literal evaluation of the printed pressure operator
/// `2W(L)/L·[n² + 2λ(n + ½){1 − μ(λ)}]`.
///
/// At λ = 1 the factor `1 − μ` vanishes and the λ term drops out entirely, so
/// this route disagrees with `−∂E/∂L` for every λ > 0. It is not used by the
/// cycle.
pub fn pressure_paper(n: Level, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let w = scale_energy(l, p)?;
    let lambda = lambda_of(l, spec)?;
    let mu = mu_of(lambda)?;
    let nf = f64::from(n.n());
    Ok(2.0 * w / l * (nf * nf + 2.0 * lambda * (nf + 0.5) * (1.0 - mu)))
}

/// `2E_n/L`, the exact Hellmann-Feynman pressure for a width-independent λ.
pub fn pressure_exact(n: Level, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    if !spec.is_frozen() {
        return Err(Error::UnsupportedMode(
            "pressure_exact needs a frozen lambda; use pressure_hf for from_zeta".into(),
        ));
    }
    Ok(2.0 * energy_level(n, l, spec, p)? / l)
}

/// `−∂E_n/∂L` by Richardson-extrapolated central differences with relative
/// step `rel_step` (see [`DEFAULT_HF_STEP`]).
pub fn pressure_hf(
    n: Level,
    l: f64,
    spec: &LambdaSpec,
    p: &PhysicalParams,
    rel_step: f64,
) -> Result<f64> {
    check_width(l)?;
    spec.validate()?;
    p.validate()?;
    if !(rel_step > 0.0 && rel_step <= numerics::MAX_REL_STEP) {
        return Err(Error::Config(format!(
            "finite-difference step {rel_step} outside (0, {}]",
            numerics::MAX_REL_STEP
        )));
    }
    let energy = |x: f64| energy_level(n, x, spec, p).unwrap_or(f64::NAN);
    Ok(-numerics::derivative(energy, l, rel_step)?)
}
