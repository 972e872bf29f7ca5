//! Two-level superpositions along the isothermal legs.
//!
//! On an isotherm the particle is in `a₁φ₁ + a₂φ₂` and the weights shift as
//! the wall moves so that `⟨H⟩` stays pinned at the isotherm's energy. Only the
//! occupation probabilities `|a₁|²`, `|a₂|²` ever matter, so phases are not
//! tracked.

use crate::error::{Error, Result};
use crate::model::{self, Level, LambdaSpec, PhysicalParams};
use crate::processes;

/// Occupation probabilities of the two lowest levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelMix {
    a1sq: f64,
    a2sq: f64,
}

impl TwoLevelMix {
    /// Allowed deviation of `a1sq + a2sq` from one.
    pub const NORM_TOL: f64 = 1e-12;

    pub const GROUND: TwoLevelMix = TwoLevelMix { a1sq: 1.0, a2sq: 0.0 };
    pub const EXCITED: TwoLevelMix = TwoLevelMix { a1sq: 0.0, a2sq: 1.0 };

    pub fn new(a1sq: f64, a2sq: f64) -> Result<Self> {
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !in_unit(a1sq) || !in_unit(a2sq) {
            return Err(Error::Domain(format!(
                "occupation probabilities must lie in [0, 1], got ({a1sq}, {a2sq})"
            )));
        }
        if (a1sq + a2sq - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::Domain(format!(
                "mix not normalized: {a1sq} + {a2sq} = {}",
                a1sq + a2sq
            )));
        }
        Ok(Self { a1sq, a2sq })
    }

    /// Mix with ground-state weight `a1sq` and the remainder in the excited level.
    pub fn from_ground_weight(a1sq: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a1sq) {
            return Err(Error::Domain(format!("ground weight {a1sq} outside [0, 1]")));
        }
        Ok(Self { a1sq, a2sq: 1.0 - a1sq })
    }

    /// `|a₁|²`
    pub fn ground_weight(&self) -> f64 {
        self.a1sq
    }

    /// `|a₂|²`
    pub fn excited_weight(&self) -> f64 {
        self.a2sq
    }
}

/// `⟨H⟩ = |a₁|²E₁(L) + |a₂|²E₂(L)`.
pub fn mix_energy(mix: &TwoLevelMix, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let e1 = model::energy_level(Level::GROUND, l, spec, p)?;
    let e2 = model::energy_level(Level::FIRST_EXCITED, l, spec, p)?;
    Ok(mix.a1sq * e1 + mix.a2sq * e2)
}

fn clamp_unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// Weights that hold `⟨H⟩ = E_H = E₁(L₁)` at width `l` on the hot isotherm.
///
/// Valid for `L₁ ≤ l ≤ L₂`; the mix runs from the pure ground state at `L₁`
/// to the pure excited state at `L₂`.
pub fn hot_isotherm_mix(
    l: f64,
    l1: f64,
    spec: &LambdaSpec,
    p: &PhysicalParams,
) -> Result<TwoLevelMix> {
    model::check_width(l)?;
    let l2 = processes::l2_of(l1, spec)?;
    if l < l1 || l > l2 {
        return Err(Error::OutOfRange { l, lo: l1, hi: l2 });
    }
    if l == l1 {
        return Ok(TwoLevelMix::GROUND);
    }
    if l == l2 {
        return Ok(TwoLevelMix::EXCITED);
    }

    let a1sq = if spec.is_frozen() {
        let lambda = spec.frozen_value()?;
        let ratio = (l / l1) * (l / l1);
        (4.0 + 5.0 * lambda - ratio * (1.0 + 3.0 * lambda)) / (3.0 + 2.0 * lambda)
    } else {
        let e_hot = model::energy_level(Level::GROUND, l1, spec, p)?;
        ground_weight_for(e_hot, l, spec, p)?
    };
    TwoLevelMix::from_ground_weight(clamp_unit(a1sq))
}

/// Weights that hold `⟨H⟩ = E_C = E₂(L₃)` at width `l` on the cold isotherm.
///
/// Valid for `L₄ ≤ l ≤ L₃`; the mix runs from the pure excited state at `L₃`
/// down to the pure ground state at `L₄`. The excited weight is `|b₂|²`.
pub fn cold_isotherm_mix(
    l: f64,
    l3: f64,
    spec: &LambdaSpec,
    p: &PhysicalParams,
) -> Result<TwoLevelMix> {
    model::check_width(l)?;
    let l4 = processes::l4_of(l3, spec)?;
    if l < l4 || l > l3 {
        return Err(Error::OutOfRange { l, lo: l4, hi: l3 });
    }
    if l == l3 {
        return Ok(TwoLevelMix::EXCITED);
    }
    if l == l4 {
        return Ok(TwoLevelMix::GROUND);
    }

    let b2sq = if spec.is_frozen() {
        let lambda = spec.frozen_value()?;
        let ratio = (l / l3) * (l / l3);
        (ratio * (4.0 + 5.0 * lambda) - (1.0 + 3.0 * lambda)) / (3.0 + 2.0 * lambda)
    } else {
        let e_cold = model::energy_level(Level::FIRST_EXCITED, l3, spec, p)?;
        1.0 - ground_weight_for(e_cold, l, spec, p)?
    };
    let b2sq = clamp_unit(b2sq);
    TwoLevelMix::from_ground_weight(1.0 - b2sq)
}

// ⟨H⟩ is linear in |a₁|² at fixed L, so the weight follows directly even when
// λ depends on L.
fn ground_weight_for(target: f64, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let e1 = model::energy_level(Level::GROUND, l, spec, p)?;
    let e2 = model::energy_level(Level::FIRST_EXCITED, l, spec, p)?;
    Ok((e2 - target) / (e2 - e1))
}
