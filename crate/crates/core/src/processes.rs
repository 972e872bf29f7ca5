//! The four strokes of the cycle as pressure curves `P(L)`, the corner widths
//! `L₂(L₁)` and `L₄(L₃)`, and uniform sampling of each leg for P–L diagrams.
//!
//! With λ frozen, `L·P` is constant on the isotherms and `L³·P` on the
//! adiabats. Every pressure here is the Hellmann-Feynman force `−∂⟨H⟩/∂L` of
//! the state the leg prescribes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{self, Level, LambdaSpec, PhysicalParams, DEFAULT_HF_STEP};
use crate::numerics::{self, RootConfig};
use crate::superposition::{self, TwoLevelMix};

/// `(4 + 5λ)/(1 + 3λ)`: `E₂/E₁` at a common width, and `(L₂/L₁)²`.
pub fn isotherm_ratio(lambda: f64) -> f64 {
    (4.0 + 5.0 * lambda) / (1.0 + 3.0 * lambda)
}

// Bracket tolerance for the from_zeta corner searches, relative to the width.
const ZETA_ROOT_REL_TOL: f64 = 1e-14;

/// End of the hot isotherm: the width where the pure excited state carries
/// the hot energy `E₁(L₁)`.
pub fn l2_of(l1: f64, spec: &LambdaSpec) -> Result<f64> {
    model::check_width(l1)?;
    spec.validate()?;
    if spec.is_frozen() {
        let lambda = spec.frozen_value()?;
        return Ok(l1 * isotherm_ratio(lambda).sqrt());
    }
    // ħ and m cancel in E₂(L₂) = E₁(L₁).
    let p = PhysicalParams::natural();
    let target = model::energy_level(Level::GROUND, l1, spec, &p)?;
    let f = |l: f64| model::energy_level(Level::FIRST_EXCITED, l, spec, &p).unwrap_or(f64::NAN) - target;
    let mut hi = 2.0 * l1;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::NonConvergence {
                lo: l1,
                hi,
                reason: "no upper bracket for the hot isotherm endpoint".into(),
            });
        }
    }
    let cfg = RootConfig {
        abs_tol: ZETA_ROOT_REL_TOL * l1,
        ..RootConfig::default()
    };
    numerics::bisect(f, l1, hi, &cfg)
}

/// End of the cold isotherm: the width where the ground state carries the
/// cold energy `E₂(L₃)`. Inverse of [`l2_of`].
pub fn l4_of(l3: f64, spec: &LambdaSpec) -> Result<f64> {
    model::check_width(l3)?;
    spec.validate()?;
    if spec.is_frozen() {
        let lambda = spec.frozen_value()?;
        return Ok(l3 / isotherm_ratio(lambda).sqrt());
    }
    let p = PhysicalParams::natural();
    let target = model::energy_level(Level::FIRST_EXCITED, l3, spec, &p)?;
    let f = |l: f64| model::energy_level(Level::GROUND, l, spec, &p).unwrap_or(f64::NAN) - target;
    let mut lo = 0.5 * l3;
    while f(lo) < 0.0 {
        lo *= 0.5;
        if lo == 0.0 {
            return Err(Error::NonConvergence {
                lo,
                hi: l3,
                reason: "no lower bracket for the cold isotherm endpoint".into(),
            });
        }
    }
    let cfg = RootConfig {
        abs_tol: ZETA_ROOT_REL_TOL * lo,
        ..RootConfig::default()
    };
    numerics::bisect(f, lo, l3, &cfg)
}

/// `E_H = E₁(L₁)`, the energy held on the hot isotherm.
pub fn hot_energy(l1: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    model::energy_level(Level::GROUND, l1, spec, p)
}

/// `E_C = E₂(L₃)`, the energy held on the cold isotherm.
pub fn cold_energy(l3: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    model::energy_level(Level::FIRST_EXCITED, l3, spec, p)
}

// Force of a two-level mix when λ varies with L: weights are held fixed while
// differentiating, so P = |a₁|²P₁ + |a₂|²P₂.
fn mix_pressure_hf(mix: &TwoLevelMix, l: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let p1 = model::pressure_hf(Level::GROUND, l, spec, p, DEFAULT_HF_STEP)?;
    let p2 = model::pressure_hf(Level::FIRST_EXCITED, l, spec, p, DEFAULT_HF_STEP)?;
    Ok(mix.ground_weight() * p1 + mix.excited_weight() * p2)
}

/// Pressure on the hot isotherm, `2E_H/L` for frozen λ.
pub fn hot_isotherm_pressure(l: f64, l1: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let mix = superposition::hot_isotherm_mix(l, l1, spec, p)?;
    if spec.is_frozen() {
        Ok(2.0 * hot_energy(l1, spec, p)? / l)
    } else {
        mix_pressure_hf(&mix, l, spec, p)
    }
}

/// Pressure on the cold isotherm, `2E_C/L` for frozen λ.
pub fn cold_isotherm_pressure(l: f64, l3: f64, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    let mix = superposition::cold_isotherm_mix(l, l3, spec, p)?;
    if spec.is_frozen() {
        Ok(2.0 * cold_energy(l3, spec, p)? / l)
    } else {
        mix_pressure_hf(&mix, l, spec, p)
    }
}

/// Pressure on an adiabat, where the particle stays in level `n` (1 or 2).
///
/// Frozen λ gives `2E_n(L)/L = (π²ħ²/mL³)[n² + λ(2n + 1)]`. The literal
/// `{1 − μ}` form lives in [`model::pressure_paper`].
pub fn adiabat_pressure(l: f64, n: Level, spec: &LambdaSpec, p: &PhysicalParams) -> Result<f64> {
    if n.n() > 2 {
        return Err(Error::Domain(format!("adiabats use levels 1 and 2, got n = {}", n.n())));
    }
    if spec.is_frozen() {
        model::pressure_exact(n, l, spec, p)
    } else {
        model::pressure_hf(n, l, spec, p, DEFAULT_HF_STEP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LegKind {
    /// `L₁ → L₂` at `E_H`.
    HotIsotherm,
    /// `L₂ → L₃` in level 2.
    AdiabatExpand,
    /// `L₃ → L₄` at `E_C`.
    ColdIsotherm,
    /// `L₄ → L₁` in level 1.
    AdiabatCompress,
}

impl LegKind {
    pub const ALL: [LegKind; 4] = [
        LegKind::HotIsotherm,
        LegKind::AdiabatExpand,
        LegKind::ColdIsotherm,
        LegKind::AdiabatCompress,
    ];

    /// 1-based position in the cycle.
    pub fn number(self) -> u8 {
        match self {
            LegKind::HotIsotherm => 1,
            LegKind::AdiabatExpand => 2,
            LegKind::ColdIsotherm => 3,
            LegKind::AdiabatCompress => 4,
        }
    }

    /// Corner numbers (1–4) at the start and end of the leg.
    fn corners(self) -> (u8, u8) {
        let n = self.number();
        (n, n % 4 + 1)
    }
}

/// Corner widths and isotherm energies of a cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleGeometry {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub l4: f64,
    pub e_hot: f64,
    pub e_cold: f64,
    pub spec: LambdaSpec,
    pub params: PhysicalParams,
}

impl CycleGeometry {
    /// Fails with [`Error::DegenerateCycle`] unless `L₃ > L₂`.
    pub fn new(l1: f64, l3: f64, spec: LambdaSpec, params: PhysicalParams) -> Result<Self> {
        model::check_width(l1)?;
        model::check_width(l3)?;
        spec.validate()?;
        params.validate()?;
        let l2 = l2_of(l1, &spec)?;
        if l3 <= l2 {
            return Err(Error::DegenerateCycle { l2, l3 });
        }
        let l4 = l4_of(l3, &spec)?;
        let e_hot = hot_energy(l1, &spec, &params)?;
        let e_cold = cold_energy(l3, &spec, &params)?;
        if !e_hot.is_finite() || !e_cold.is_finite() {
            return Err(Error::NonFinite {
                context: format!("isotherm energies (E_H = {e_hot}, E_C = {e_cold})"),
            });
        }
        Ok(Self { l1, l2, l3, l4, e_hot, e_cold, spec, params })
    }

    fn corner_width(&self, corner: u8) -> f64 {
        match corner {
            1 => self.l1,
            2 => self.l2,
            3 => self.l3,
            _ => self.l4,
        }
    }

    /// `(start, end)` widths of a leg in traversal order.
    pub fn interval(&self, kind: LegKind) -> (f64, f64) {
        let (a, b) = kind.corners();
        (self.corner_width(a), self.corner_width(b))
    }

    /// State at one of the four corners. Both legs meeting there emit this
    /// exact value.
    pub fn corner_sample(&self, corner: u8) -> Result<LegSample> {
        let l = self.corner_width(corner);
        let (spec, p) = (&self.spec, &self.params);
        let sample = match corner {
            1 | 2 => LegSample {
                l,
                p: hot_isotherm_pressure(l, self.l1, spec, p)?,
                e: self.e_hot,
                a1sq: if corner == 1 { 1.0 } else { 0.0 },
            },
            3 | 4 => LegSample {
                l,
                p: cold_isotherm_pressure(l, self.l3, spec, p)?,
                e: self.e_cold,
                a1sq: if corner == 3 { 0.0 } else { 1.0 },
            },
            other => return Err(Error::Domain(format!("corner index {other} outside 1..=4"))),
        };
        Ok(sample)
    }

    /// State on leg `kind` at an interior width `l`.
    fn interior_sample(&self, kind: LegKind, l: f64) -> Result<LegSample> {
        let (spec, p) = (&self.spec, &self.params);
        let sample = match kind {
            LegKind::HotIsotherm => {
                let mix = superposition::hot_isotherm_mix(l, self.l1, spec, p)?;
                LegSample {
                    l,
                    p: hot_isotherm_pressure(l, self.l1, spec, p)?,
                    e: superposition::mix_energy(&mix, l, spec, p)?,
                    a1sq: mix.ground_weight(),
                }
            }
            LegKind::ColdIsotherm => {
                let mix = superposition::cold_isotherm_mix(l, self.l3, spec, p)?;
                LegSample {
                    l,
                    p: cold_isotherm_pressure(l, self.l3, spec, p)?,
                    e: superposition::mix_energy(&mix, l, spec, p)?,
                    a1sq: mix.ground_weight(),
                }
            }
            LegKind::AdiabatExpand => LegSample {
                l,
                p: adiabat_pressure(l, Level::FIRST_EXCITED, spec, p)?,
                e: model::energy_level(Level::FIRST_EXCITED, l, spec, p)?,
                a1sq: 0.0,
            },
            LegKind::AdiabatCompress => LegSample {
                l,
                p: adiabat_pressure(l, Level::GROUND, spec, p)?,
                e: model::energy_level(Level::GROUND, l, spec, p)?,
                a1sq: 1.0,
            },
        };
        Ok(sample)
    }
}

/// One point of a P–L diagram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LegSample {
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "P")]
    pub p: f64,
    #[serde(rename = "E")]
    pub e: f64,
    pub a1sq: f64,
}

/// `count` samples uniform in `L` along a leg, in traversal order. The first
/// and last samples sit exactly on the leg's corners.
pub fn sample_leg(kind: LegKind, geom: &CycleGeometry, count: usize) -> Result<Vec<LegSample>> {
    if count < 2 {
        return Err(Error::Config(format!("need at least 2 samples per leg, got {count}")));
    }
    let (start_corner, end_corner) = kind.corners();
    let (start, end) = geom.interval(kind);
    let last = count - 1;
    let mut out = Vec::with_capacity(count);
    out.push(geom.corner_sample(start_corner)?);
    for i in 1..last {
        let t = i as f64 / last as f64;
        out.push(geom.interior_sample(kind, start + (end - start) * t)?);
    }
    out.push(geom.corner_sample(end_corner)?);
    Ok(out)
}

/// All four legs, each with `count` samples.
pub fn sample_cycle(geom: &CycleGeometry, count: usize) -> Result<Vec<(LegKind, Vec<LegSample>)>> {
    LegKind::ALL
        .iter()
        .map(|&k| Ok((k, sample_leg(k, geom, count)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const NAT: PhysicalParams = PhysicalParams::natural();
    const PI2: f64 = PI * PI;

    fn frozen(l: f64) -> LambdaSpec {
        LambdaSpec::frozen(l).unwrap()
    }

    #[test]
    fn corner_widths() {
        assert_eq!(l2_of(1.0, &LambdaSpec::FreeParticle).unwrap(), 2.0);
        assert_eq!(l2_of(1.0, &frozen(1.0)).unwrap(), 1.5);
        assert_relative_eq!(l2_of(2.0, &frozen(0.25)).unwrap(), 2.0 * 3f64.sqrt(), max_relative = 1e-15);
        assert_eq!(l4_of(4.0, &LambdaSpec::FreeParticle).unwrap(), 2.0);
        assert_eq!(l4_of(3.0, &frozen(1.0)).unwrap(), 2.0);
        for lambda in [0.0, 0.25, 1.0, 3.7] {
            let spec = frozen(lambda);
            assert_relative_eq!(
                l4_of(l2_of(1.3, &spec).unwrap(), &spec).unwrap(),
                1.3,
                max_relative = 4.0 * f64::EPSILON
            );
        }
    }

    #[test]
    fn zeta_corner_widths_are_inverse() {
        let spec = LambdaSpec::from_zeta(0.7).unwrap();
        let l2 = l2_of(1.0, &spec).unwrap();
        assert!(l2 > 1.0);
        let e2 = model::energy_level(Level::FIRST_EXCITED, l2, &spec, &NAT).unwrap();
        let e1 = model::energy_level(Level::GROUND, 1.0, &spec, &NAT).unwrap();
        assert_relative_eq!(e2, e1, max_relative = 1e-12);
        assert_relative_eq!(l4_of(l2, &spec).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn isotherm_pressure_examples() {
        let fp = LambdaSpec::FreeParticle;
        assert_relative_eq!(hot_isotherm_pressure(1.0, 1.0, &fp, &NAT).unwrap(), PI2, max_relative = 1e-15);
        assert_relative_eq!(hot_isotherm_pressure(2.0, 1.0, &fp, &NAT).unwrap(), PI2 / 2.0, max_relative = 1e-15);
        assert_relative_eq!(
            hot_isotherm_pressure(1.2, 1.0, &frozen(1.0), &NAT).unwrap(),
            2.0 * 2.0 * PI2 / 1.2,
            max_relative = 1e-15
        );
        assert_relative_eq!(cold_isotherm_pressure(4.0, 4.0, &fp, &NAT).unwrap(), PI2 / 16.0, max_relative = 1e-15);
        assert_relative_eq!(cold_isotherm_pressure(2.0, 4.0, &fp, &NAT).unwrap(), PI2 / 8.0, max_relative = 1e-15);
        assert_relative_eq!(
            cold_isotherm_pressure(3.0, 3.0, &frozen(1.0), &NAT).unwrap(),
            PI2 / 3.0,
            max_relative = 1e-15
        );
        assert!(matches!(
            hot_isotherm_pressure(2.5, 1.0, &fp, &NAT),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            cold_isotherm_pressure(1.0, 4.0, &fp, &NAT),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn adiabat_pressure_examples() {
        let fp = LambdaSpec::FreeParticle;
        assert_relative_eq!(
            adiabat_pressure(2.0, Level::FIRST_EXCITED, &fp, &NAT).unwrap(),
            PI2 / 2.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            adiabat_pressure(4.0, Level::FIRST_EXCITED, &fp, &NAT).unwrap(),
            PI2 / 16.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            adiabat_pressure(1.0, Level::GROUND, &frozen(1.0), &NAT).unwrap(),
            4.0 * PI2,
            max_relative = 1e-15
        );
        assert!(adiabat_pressure(1.0, Level::new(3).unwrap(), &fp, &NAT).is_err());
    }

    #[test]
    fn degenerate_geometry_is_rejected() {
        let err = CycleGeometry::new(1.0, 1.5, LambdaSpec::FreeParticle, NAT).unwrap_err();
        assert!(matches!(err, Error::DegenerateCycle { .. }));
        assert!(CycleGeometry::new(1.0, 2.0, LambdaSpec::FreeParticle, NAT).is_err());
    }

    #[test]
    fn sample_leg_examples() {
        let geom = CycleGeometry::new(1.0, 4.0, LambdaSpec::FreeParticle, NAT).unwrap();
        let hot = sample_leg(LegKind::HotIsotherm, &geom, 2).unwrap();
        assert_eq!((hot[0].l, hot[1].l), (1.0, 2.0));
        assert_relative_eq!(hot[0].p, PI2, max_relative = 1e-15);
        assert_relative_eq!(hot[1].p, PI2 / 2.0, max_relative = 1e-15);

        let adiabat = sample_leg(LegKind::AdiabatExpand, &geom, 3).unwrap();
        assert_eq!(adiabat[1].l, 3.0);
        assert_relative_eq!(adiabat[1].p, 4.0 * PI2 / 27.0, max_relative = 1e-15);

        for kind in LegKind::ALL {
            let s = sample_leg(kind, &geom, 2).unwrap();
            let (a, b) = geom.interval(kind);
            assert_eq!((s[0].l, s[1].l), (a, b));
        }
        assert!(matches!(sample_leg(LegKind::HotIsotherm, &geom, 1), Err(Error::Config(_))));
    }

    #[test]
    fn adjacent_legs_share_corners_bitwise() {
        for lambda in [0.0, 0.4, 1.0, 3.0] {
            let geom = CycleGeometry::new(0.7, 5.0, frozen(lambda), NAT).unwrap();
            let legs = sample_cycle(&geom, 17).unwrap();
            for i in 0..4 {
                let end = legs[i].1.last().unwrap();
                let next_start = legs[(i + 1) % 4].1.first().unwrap();
                assert_eq!(end, next_start);
            }
        }
    }

    #[test]
    fn zeta_cycle_samples_are_finite() {
        let geom = CycleGeometry::new(1.0, 5.0, LambdaSpec::from_zeta(1.0).unwrap(), NAT).unwrap();
        for (_, leg) in sample_cycle(&geom, 9).unwrap() {
            for s in leg {
                assert!(s.p > 0.0 && s.e > 0.0 && s.p.is_finite());
            }
        }
    }

    proptest! {
        #[test]
        fn isotherm_and_adiabat_laws(lambda in 0.0f64..5.0, l1 in 0.1f64..10.0, stretch in 1.01f64..10.0) {
            let spec = frozen(lambda);
            let l2 = l2_of(l1, &spec).unwrap();
            let geom = CycleGeometry::new(l1, stretch * l2, spec, NAT).unwrap();
            for (kind, samples) in sample_cycle(&geom, 64).unwrap() {
                let power = match kind {
                    LegKind::HotIsotherm | LegKind::ColdIsotherm => 1,
                    _ => 3,
                };
                let reference = samples[0].l.powi(power) * samples[0].p;
                for s in &samples {
                    prop_assert!(s.p > 0.0 && s.e > 0.0 && s.l > 0.0);
                    let v = s.l.powi(power) * s.p;
                    prop_assert!((v - reference).abs() <= 1e-12 * reference);
                }
            }
        }
    }
}
