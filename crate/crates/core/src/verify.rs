//! Side-by-side comparison of the cycle's closed forms, adaptive quadrature of
//! the pressure curves, and a set of alternative closed forms that do not
//! follow from the pressure laws (no logarithms in the isothermal work, a cubic
//! free-particle efficiency, a doubled energy scale, `{1 − μ}`-weighted adiabat
//! pressures).
//!
//! Nothing in here is asserted: each row records both numbers and their
//! deviation. Rows `a`–`e` are the primary comparisons; the supplementary rows
//! cover the alternative energy and pressure forms.

use serde::Serialize;

use crate::cycle::{self, CycleSpec, LegWork};
use crate::error::Result;
use crate::model::{self, Level};
use crate::processes::{self, CycleGeometry};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub row: String,
    pub quantity: &'static str,
    pub reference: &'static str,
    pub reference_value: f64,
    pub candidate: &'static str,
    pub candidate_value: f64,
    pub abs_dev: f64,
    /// `None` when the reference value is zero.
    pub rel_dev: Option<f64>,
}

impl ReportRow {
    fn new(
        row: impl Into<String>,
        quantity: &'static str,
        (reference, reference_value): (&'static str, f64),
        (candidate, candidate_value): (&'static str, f64),
    ) -> Self {
        let abs_dev = (candidate_value - reference_value).abs();
        let rel_dev = (reference_value != 0.0).then(|| abs_dev / reference_value.abs());
        Self {
            row: row.into(),
            quantity,
            reference,
            reference_value,
            candidate,
            candidate_value,
            abs_dev,
            rel_dev,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub rows: Vec<ReportRow>,
    pub supplementary: Vec<ReportRow>,
}

impl OracleReport {
    pub fn row(&self, id: &str) -> Option<&ReportRow> {
        self.rows.iter().chain(&self.supplementary).find(|r| r.row == id)
    }

    pub fn all_rows(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().chain(&self.supplementary)
    }
}

/// Isothermal work closed form written without logarithms:
/// `(π²ħ²/mL₁²)[A^{3/2}/B^{1/2} − (AB)^{1/2}] − (π²ħ²/mL₃²)[B^{3/2}/A^{1/2} − (AB)^{1/2}]`
/// with `A = 1 + 3λ`, `B = 4 + 5λ`.
pub fn log_free_work(spec: &CycleSpec) -> Result<f64> {
    let lambda = spec.lambda_spec.frozen_value()?;
    let k = 2.0 * spec.params.energy_unit();
    let (a, b) = (1.0 + 3.0 * lambda, 4.0 + 5.0 * lambda);
    let ab = (a * b).sqrt();
    let hot = k / (spec.l1 * spec.l1) * (a.powf(1.5) / b.sqrt() - ab);
    let cold = k / (spec.l3 * spec.l3) * (b.powf(1.5) / a.sqrt() - ab);
    Ok(hot - cold)
}

/// Heat intake written without logarithms: `(π²ħ²/mL₁²)[A^{3/2}/B^{1/2} − A]`.
pub fn log_free_heat(spec: &CycleSpec) -> Result<f64> {
    let lambda = spec.lambda_spec.frozen_value()?;
    let k = 2.0 * spec.params.energy_unit();
    let (a, b) = (1.0 + 3.0 * lambda, 4.0 + 5.0 * lambda);
    Ok(k / (spec.l1 * spec.l1) * (a.powf(1.5) / b.sqrt() - a))
}

/// Free-particle efficiency with cubed widths, `1 − 4L₁³/L₃³`.
pub fn cubic_free_particle_efficiency(l1: f64, l3: f64) -> f64 {
    1.0 - 4.0 * (l1 / l3).powi(3)
}

pub(crate) fn compare(
    spec: &CycleSpec,
    geom: &CycleGeometry,
    closed: &LegWork,
    quadrature: &LegWork,
    eta: f64,
) -> Result<OracleReport> {
    let w_closed = closed.total();
    let w_quad = quadrature.total();
    let rows = vec![
        ReportRow::new("a", "w_total", ("closed_form", w_closed), ("quadrature", w_quad)),
        ReportRow::new(
            "b",
            "q_hot",
            ("closed_form", closed.hot_isotherm),
            ("quadrature", quadrature.hot_isotherm),
        ),
        ReportRow::new(
            "c",
            "w_total",
            ("quadrature", w_quad),
            ("log_free_closed_form", log_free_work(spec)?),
        ),
        ReportRow::new(
            "d",
            "q_hot",
            ("closed_form", closed.hot_isotherm),
            ("log_free_closed_form", log_free_heat(spec)?),
        ),
        ReportRow::new(
            "e",
            "eta",
            ("energy_ratio", eta),
            ("cubic_free_particle_formula", cubic_free_particle_efficiency(spec.l1, spec.l3)),
        ),
    ];

    let (s, p) = (&geom.spec, &geom.params);
    let mut supplementary = vec![
        ReportRow::new(
            "s1",
            "eta",
            ("energy_ratio", eta),
            ("width_ratio_formula", cycle::efficiency(spec)?),
        ),
        ReportRow::new(
            "s2",
            "eta",
            ("energy_ratio", eta),
            ("free_particle_formula", cycle::free_particle_efficiency(spec.l1, spec.l3)?),
        ),
        ReportRow::new("s3", "e_hot", ("level_energy", geom.e_hot), ("doubled_scale_form", 2.0 * geom.e_hot)),
        ReportRow::new("s4", "e_cold", ("level_energy", geom.e_cold), ("doubled_scale_form", 2.0 * geom.e_cold)),
    ];
    // The μ-weighted forms are undefined at λ = 1/2; those rows are dropped there.
    let corners = [("s5", "p_adiabat_l2", geom.l2, Level::FIRST_EXCITED), ("s6", "p_adiabat_l1", geom.l1, Level::GROUND)];
    for (id, quantity, l, n) in corners {
        if let Ok(mu_form) = model::pressure_paper(n, l, s, p) {
            let hf = processes::adiabat_pressure(l, n, s, p)?;
            supplementary.push(ReportRow::new(id, quantity, ("two_e_over_l", hf), ("mu_factor_form", mu_form)));
        }
    }
    Ok(OracleReport { rows, supplementary })
}

/// Build the cycle and return its comparison report.
pub fn verify(spec: &CycleSpec) -> Result<OracleReport> {
    Ok(cycle::build(spec)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const PI2: f64 = PI * PI;

    #[test]
    fn free_particle_report() {
        let rep = verify(&CycleSpec::natural(1.0, 4.0, 0.0).unwrap()).unwrap();
        assert_eq!(rep.rows.len(), 5);
        let ids: Vec<_> = rep.rows.iter().map(|r| r.row.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c", "d", "e"]);

        assert!(rep.row("a").unwrap().rel_dev.unwrap() <= 1e-8);
        assert!(rep.row("b").unwrap().rel_dev.unwrap() <= 1e-8);

        let e = rep.row("e").unwrap();
        assert_relative_eq!(e.reference_value, 0.75, epsilon = 1e-12);
        assert_eq!(e.candidate_value, 0.9375);

        // Hand evaluation at λ = 0: π²(1/2 − 2) − (π²/16)(8 − 2) = −15π²/8.
        assert_relative_eq!(rep.row("c").unwrap().candidate_value, -15.0 * PI2 / 8.0, max_relative = 1e-14);
        // π²(1/2 − 1) = −π²/2
        assert_relative_eq!(rep.row("d").unwrap().candidate_value, -PI2 / 2.0, max_relative = 1e-14);

        // λ = 0: μ = 0, so the μ-weighted adiabat pressures coincide with 2E/L.
        assert!(rep.row("s5").unwrap().rel_dev.unwrap() <= 1e-14);
        assert!(rep.row("s6").unwrap().rel_dev.unwrap() <= 1e-14);
    }

    #[test]
    fn poschl_teller_report() {
        let rep = verify(&CycleSpec::natural(1.0, 3.0, 1.0).unwrap()).unwrap();
        let b = rep.row("b").unwrap();
        assert_relative_eq!(b.reference_value, 2.0 * PI2 * 2.25f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(b.reference_value, 16.007_120_861_890_048, max_relative = 1e-12);
        let d = rep.row("d").unwrap();
        assert_relative_eq!(d.candidate_value, -13.159_472_534_785_811, max_relative = 1e-12);
        assert_relative_eq!(rep.row("c").unwrap().candidate_value, -41.123_351_671_205_66, max_relative = 1e-12);
        // λ = 1 kills the λ term of the μ-weighted form: π²/L³ · n².
        let s6 = rep.row("s6").unwrap();
        assert_relative_eq!(s6.candidate_value, PI2, max_relative = 1e-14);
        assert_relative_eq!(s6.reference_value, 4.0 * PI2, max_relative = 1e-14);
    }

    #[test]
    fn half_lambda_drops_mu_rows() {
        let rep = verify(&CycleSpec::natural(1.0, 5.0, 0.5).unwrap()).unwrap();
        assert!(rep.row("s5").is_none() && rep.row("s6").is_none());
        assert_eq!(rep.rows.len(), 5);
    }
}
