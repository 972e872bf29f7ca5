//! Numerical kernels: adaptive Simpson quadrature, Richardson-extrapolated
//! central differences and bracketed bisection.
//!
//! Everything here is deterministic. The quadrature always subdivides with the
//! same tree shape for a given integrand and interval, so repeated runs give
//! bit-identical results.

use crate::error::{Error, Result};

/// Settings for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Target error relative to the magnitude of the integral.
    pub rel_tol: f64,
    /// Maximum bisection depth of any subinterval.
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_depth: 50,
        }
    }
}

impl QuadratureConfig {
    pub const MIN_REL_TOL: f64 = 1e-14;
    pub const MAX_REL_TOL: f64 = 1e-4;
    pub const MIN_DEPTH: u32 = 10;

    pub fn new(rel_tol: f64, max_depth: u32) -> Result<Self> {
        let cfg = Self { rel_tol, max_depth };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, Self::default().max_depth)
    }

    pub fn validate(&self) -> Result<()> {
        if !(Self::MIN_REL_TOL..=Self::MAX_REL_TOL).contains(&self.rel_tol) {
            return Err(Error::Config(format!(
                "quadrature rel_tol {} outside [{:e}, {:e}]",
                self.rel_tol,
                Self::MIN_REL_TOL,
                Self::MAX_REL_TOL
            )));
        }
        if self.max_depth < Self::MIN_DEPTH {
            return Err(Error::Config(format!(
                "quadrature max_depth {} below {}",
                self.max_depth,
                Self::MIN_DEPTH
            )));
        }
        Ok(())
    }
}

/// Settings for [`bisect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    /// Stop once the bracket is at most this wide.
    pub abs_tol: f64,
    pub max_iter: u32,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_iter: 200,
        }
    }
}

impl RootConfig {
    pub fn validate(&self) -> Result<()> {
        if self.abs_tol.is_nan() || self.abs_tol <= 0.0 {
            return Err(Error::Config(format!(
                "root abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        Ok(())
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite {
            context: format!("integrand/function evaluated at x = {x}"),
        })
    }
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Oriented integral of `f` from `a` to `b` by adaptive Simpson quadrature.
///
/// Swapping the limits negates the result exactly. Returns
/// [`Error::NonConvergence`] carrying the offending subinterval when the depth
/// limit is hit, and [`Error::NonFinite`] if `f` yields NaN or infinity.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("integration limits must be finite: [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return integrate_forward(&f, b, a, cfg).map(|v| -v);
    }
    integrate_forward(&f, a, b, cfg)
}

fn integrate_forward<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let m = 0.5 * (a + b);
    let fa = eval(f, a)?;
    let fm = eval(f, m)?;
    let fb = eval(f, b)?;
    let whole = simpson(a, b, fa, fm, fb);

    let scale = if whole != 0.0 {
        whole.abs()
    } else {
        // Coarse estimate cancelled to zero; fall back to the integrand magnitude.
        (b - a) * fa.abs().max(fm.abs()).max(fb.abs())
    };
    let tol = (cfg.rel_tol * scale).max(f64::MIN_POSITIVE);

    simpson_step(f, a, b, fa, fm, fb, whole, tol, cfg.max_depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;

    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 || lm <= a || rm >= b {
        return Err(Error::NonConvergence {
            lo: a,
            hi: b,
            reason: format!(
                "adaptive Simpson depth exhausted (error estimate {:e}, tolerance {:e})",
                delta.abs() / 15.0,
                tol
            ),
        });
    }
    let l = simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Largest relative step accepted by [`derivative`].
pub const MAX_REL_STEP: f64 = 1e-2;

/// First derivative of `f` at `x`.
///
/// Central differences at steps `h` and `h/2`, combined by one Richardson
/// extrapolation (error O(h⁴)). The step is `rel_step·|x|`, or `rel_step`
/// itself at `x = 0`.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, rel_step: f64) -> Result<f64> {
    if !(rel_step > 0.0 && rel_step <= MAX_REL_STEP) {
        return Err(Error::Config(format!(
            "relative step {rel_step} outside (0, {MAX_REL_STEP}]"
        )));
    }
    let scale = if x == 0.0 { 1.0 } else { x.abs() };
    let central = |h: f64| -> Result<f64> {
        // Snap h so that x ± h are representable exactly.
        let h = (x + h) - x;
        let fp = eval(&f, x + h)?;
        let fm = eval(&f, x - h)?;
        Ok((fp - fm) / (2.0 * h))
    };
    let h = rel_step * scale;
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    let d = (4.0 * fine - coarse) / 3.0;
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NonFinite {
            context: format!("derivative at x = {x}"),
        })
    }
}

/// Root of `f` inside `[lo, hi]` by bisection.
///
/// Requires `f(lo)·f(hi) ≤ 0`. Stops once the bracket is no wider than
/// `cfg.abs_tol` (or cannot be split further in floating point) and returns its
/// midpoint. Exact zeros hit along the way are returned immediately.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, cfg: &RootConfig) -> Result<f64> {
    cfg.validate()?;
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = eval(&f, lo)?;
    let f_hi = eval(&f, hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    for _ in 0..cfg.max_iter {
        if hi - lo <= cfg.abs_tol {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = eval(&f, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if hi - lo <= cfg.abs_tol {
        return Ok(0.5 * (lo + hi));
    }
    Err(Error::NonConvergence {
        lo,
        hi,
        reason: format!("bisection exceeded {} iterations", cfg.max_iter),
    })
}
