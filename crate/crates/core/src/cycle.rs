//! The full Carnot loop: corner widths, per-leg work, heat intake and
//! efficiency.
//!
//! Work is counted positive when done by the particle on the walls, so the two
//! expansion legs contribute positive work. Integrating the isotherm law
//! `P = 2E/L` gives logarithmic isothermal work,
//!
//! ```text
//! W₁₂ =  E_H·ln r      W₂₃ = E_H − E_C
//! W₃₄ = −E_C·ln r      W₄₁ = E_C − E_H      r = (4 + 5λ)/(1 + 3λ)
//! ```
//!
//! and the heat taken in is `Q_H = W₁₂`, so `η = 1 − E_C/E_H`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{self, LambdaSpec, PhysicalParams};
use crate::numerics::{self, QuadratureConfig};
use crate::processes::{self, CycleGeometry, LegKind};
use crate::verify::{self, OracleReport};

/// The two free knobs of the cycle plus the working medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSpec {
    pub l1: f64,
    pub l3: f64,
    pub lambda_spec: LambdaSpec,
    pub params: PhysicalParams,
}

impl CycleSpec {
    pub fn new(l1: f64, l3: f64, lambda_spec: LambdaSpec, params: PhysicalParams) -> Self {
        Self { l1, l3, lambda_spec, params }
    }

    /// Frozen-λ cycle in natural units.
    pub fn natural(l1: f64, l3: f64, lambda: f64) -> Result<Self> {
        Ok(Self::new(l1, l3, LambdaSpec::frozen(lambda)?, PhysicalParams::natural()))
    }

    pub fn with_params(self, params: PhysicalParams) -> Self {
        Self { params, ..self }
    }

    /// λ of a cycle the closed forms apply to.
    fn frozen_lambda(&self) -> Result<f64> {
        self.lambda_spec.frozen_value().map_err(|_| {
            Error::UnsupportedMode("cycles need a frozen or free-particle lambda".into())
        })
    }

    /// Corner geometry; rejects non-frozen λ and `L₃ ≤ L₂`.
    pub fn geometry(&self) -> Result<CycleGeometry> {
        self.frozen_lambda()?;
        CycleGeometry::new(self.l1, self.l3, self.lambda_spec, self.params)
    }
}

/// Signed work done by the particle on each leg, in cycle order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LegWork {
    #[serde(rename = "W12")]
    pub hot_isotherm: f64,
    #[serde(rename = "W23")]
    pub adiabat_expand: f64,
    #[serde(rename = "W34")]
    pub cold_isotherm: f64,
    #[serde(rename = "W41")]
    pub adiabat_compress: f64,
}

impl LegWork {
    pub fn as_array(&self) -> [f64; 4] {
        [self.hot_isotherm, self.adiabat_expand, self.cold_isotherm, self.adiabat_compress]
    }

    pub fn get(&self, kind: LegKind) -> f64 {
        self.as_array()[usize::from(kind.number() - 1)]
    }

    /// Net work, summing the isotherms and the adiabats separately so the
    /// adiabatic pair cancels exactly.
    pub fn total(&self) -> f64 {
        (self.hot_isotherm + self.cold_isotherm) + (self.adiabat_expand + self.adiabat_compress)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleResult {
    pub spec: CycleSpec,
    pub l2: f64,
    pub l4: f64,
    pub e_hot: f64,
    pub e_cold: f64,
    pub work: LegWork,
    pub w_total: f64,
    pub q_hot: f64,
    pub eta: f64,
    pub report: OracleReport,
}

/// Closed-form work of each leg.
pub fn closed_form_work(spec: &CycleSpec) -> Result<LegWork> {
    let geom = spec.geometry()?;
    Ok(work_from_geometry(&geom, spec.frozen_lambda()?))
}

fn work_from_geometry(geom: &CycleGeometry, lambda: f64) -> LegWork {
    let log_ratio = processes::isotherm_ratio(lambda).ln();
    LegWork {
        hot_isotherm: geom.e_hot * log_ratio,
        adiabat_expand: geom.e_hot - geom.e_cold,
        cold_isotherm: -geom.e_cold * log_ratio,
        adiabat_compress: geom.e_cold - geom.e_hot,
    }
}

/// Evaluate the whole cycle, including the oracle comparison report.
pub fn build(spec: &CycleSpec) -> Result<CycleResult> {
    let geom = spec.geometry()?;
    let work = work_from_geometry(&geom, spec.frozen_lambda()?);
    let w_total = work.total();
    let q_hot = work.hot_isotherm;
    let eta = 1.0 - geom.e_cold / geom.e_hot;
    if ![w_total, q_hot, eta].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite {
            context: "cycle work, heat or efficiency".into(),
        });
    }
    let quadrature = work_quadrature(spec, QuadratureConfig::default().rel_tol)?;
    let report = verify::compare(spec, &geom, &work, &quadrature, eta)?;
    Ok(CycleResult {
        spec: *spec,
        l2: geom.l2,
        l4: geom.l4,
        e_hot: geom.e_hot,
        e_cold: geom.e_cold,
        work,
        w_total,
        q_hot,
        eta,
        report,
    })
}

/// `η = 1 − (L₁/L₃)²·(4 + 5λ)/(1 + 3λ)`.
///
/// A pure formula query: unlike [`build`] it accepts `L₃ ≤ L₂`, where it
/// returns zero or a negative number.
pub fn efficiency(spec: &CycleSpec) -> Result<f64> {
    model::check_width(spec.l1)?;
    model::check_width(spec.l3)?;
    let lambda = spec.frozen_lambda()?;
    let ratio = spec.l1 / spec.l3;
    Ok(1.0 - ratio * ratio * processes::isotherm_ratio(lambda))
}

/// `1 − 4L₁²/L₃²`, the efficiency of the same cycle run with a free particle.
pub fn free_particle_efficiency(l1: f64, l3: f64) -> Result<f64> {
    model::check_width(l1)?;
    model::check_width(l3)?;
    let ratio = l1 / l3;
    Ok(1.0 - 4.0 * ratio * ratio)
}

/// Per-leg work by adaptive quadrature of the leg pressure curves, with
/// oriented limits so the compression legs come out negative.
pub fn work_quadrature(spec: &CycleSpec, rel_tol: f64) -> Result<LegWork> {
    let cfg = QuadratureConfig::with_rel_tol(rel_tol)?;
    let geom = spec.geometry()?;
    let (s, p) = (&geom.spec, &geom.params);
    let leg = |kind: LegKind| -> Result<f64> {
        let (a, b) = geom.interval(kind);
        let pressure = |l: f64| {
            let value = match kind {
                LegKind::HotIsotherm => processes::hot_isotherm_pressure(l, geom.l1, s, p),
                LegKind::AdiabatExpand => {
                    processes::adiabat_pressure(l, model::Level::FIRST_EXCITED, s, p)
                }
                LegKind::ColdIsotherm => processes::cold_isotherm_pressure(l, geom.l3, s, p),
                LegKind::AdiabatCompress => processes::adiabat_pressure(l, model::Level::GROUND, s, p),
            };
            value.unwrap_or(f64::NAN)
        };
        numerics::integrate(pressure, a, b, &cfg)
    };
    Ok(LegWork {
        hot_isotherm: leg(LegKind::HotIsotherm)?,
        adiabat_expand: leg(LegKind::AdiabatExpand)?,
        cold_isotherm: leg(LegKind::ColdIsotherm)?,
        adiabat_compress: leg(LegKind::AdiabatCompress)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const PI2: f64 = PI * PI;

    #[test]
    fn free_particle_cycle() {
        let r = build(&CycleSpec::natural(1.0, 4.0, 0.0).unwrap()).unwrap();
        assert_relative_eq!(r.eta, 0.75, epsilon = 1e-12);
        assert_relative_eq!(r.e_hot, PI2 / 2.0, max_relative = 1e-15);
        assert_relative_eq!(r.e_cold, PI2 / 8.0, max_relative = 1e-15);
        assert_relative_eq!(r.w_total, 3.0 * PI2 / 8.0 * 4f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(r.q_hot, PI2 / 2.0 * 4f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(r.w_total, 5.130_816_347_892_837, max_relative = 1e-12);
        assert_relative_eq!(r.q_hot, 6.841_088_463_857_115, max_relative = 1e-12);
    }

    #[test]
    fn poschl_teller_cycle() {
        let r = build(&CycleSpec::natural(1.0, 3.0, 1.0).unwrap()).unwrap();
        assert_relative_eq!(r.eta, 0.75, epsilon = 1e-12);
        assert_relative_eq!(r.e_hot, 2.0 * PI2, max_relative = 1e-12);
        assert_relative_eq!(r.e_cold, PI2 / 2.0, max_relative = 1e-12);
        assert_relative_eq!(r.w_total, 12.005_340_646_417_535, max_relative = 1e-12);
        assert_eq!(r.l2, 1.5);
        assert_eq!(r.l4, 2.0);
    }

    #[test]
    fn nearly_collapsed_cycle_has_small_positive_efficiency() {
        let r = build(&CycleSpec::natural(1.0, 2.0 * (1.0 + 1e-9), 0.0).unwrap()).unwrap();
        assert!(r.eta > 0.0 && r.eta < 1e-8, "{}", r.eta);
    }

    #[test]
    fn degenerate_and_unsupported_specs() {
        assert!(matches!(
            build(&CycleSpec::natural(1.0, 1.5, 0.0).unwrap()),
            Err(Error::DegenerateCycle { .. })
        ));
        let zeta = CycleSpec::new(1.0, 10.0, LambdaSpec::from_zeta(1.0).unwrap(), PhysicalParams::natural());
        assert!(matches!(build(&zeta), Err(Error::UnsupportedMode(_))));
        assert!(matches!(efficiency(&zeta), Err(Error::UnsupportedMode(_))));
    }

    #[test]
    fn efficiency_formula_queries() {
        assert_eq!(efficiency(&CycleSpec::natural(1.0, 4.0, 0.0).unwrap()).unwrap(), 0.75);
        for c in [0.01, 0.5, 3.0, 40.0] {
            let e = efficiency(&CycleSpec::natural(c, 4.0 * c, 0.0).unwrap()).unwrap();
            assert_relative_eq!(e, 0.75, epsilon = 1e-15);
        }
        assert_eq!(efficiency(&CycleSpec::natural(1.0, 2.0, 0.0).unwrap()).unwrap(), 0.0);
        assert_eq!(free_particle_efficiency(1.0, 8.0).unwrap(), 0.9375);
    }

    #[test]
    fn quadrature_examples() {
        let spec = CycleSpec::natural(1.0, 4.0, 0.0).unwrap();
        let w = work_quadrature(&spec, 1e-10).unwrap();
        assert_relative_eq!(w.hot_isotherm, PI2 * 2f64.ln(), max_relative = 1e-10);
        assert_relative_eq!(w.adiabat_expand, 3.0 * PI2 / 8.0, max_relative = 1e-10);
        assert!((w.adiabat_expand + w.adiabat_compress).abs() <= 1e-10 * PI2 / 2.0);
        assert!(w.cold_isotherm < 0.0 && w.adiabat_compress < 0.0);
        assert!(matches!(work_quadrature(&spec, 1e-2), Err(Error::Config(_))));
    }

    #[test]
    fn heavier_particle_rescales_energies_only() {
        let spec = CycleSpec::natural(1.0, 5.0, 0.7).unwrap();
        let heavy = spec.with_params(PhysicalParams::si(1.0, 3.0).unwrap());
        let (a, b) = (build(&spec).unwrap(), build(&heavy).unwrap());
        assert_relative_eq!(b.w_total * 3.0, a.w_total, max_relative = 1e-14);
        assert_relative_eq!(b.q_hot * 3.0, a.q_hot, max_relative = 1e-14);
        assert!((a.eta - b.eta).abs() <= 1e-15);
    }
}
