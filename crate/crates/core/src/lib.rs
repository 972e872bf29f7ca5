//! Single-particle quantum Carnot engine whose working medium is a particle
//! confined in a Pöschl-Teller well.
//!
//! The walls of the well play the piston, the expectation value of the
//! Hamiltonian plays temperature. Isotherms hold `⟨H⟩` fixed by shifting weight
//! between the two lowest levels; adiabats keep the particle in one level.
//!
//! * [`model`]: spectrum `E_n(L)` and wall pressure by three routes
//! * [`superposition`]: two-level weights along the isotherms
//! * [`processes`]: the four pressure curves, corner widths, diagram sampling
//! * [`cycle`]: work, heat and efficiency of the full loop
//! * [`verify`]: closed forms against quadrature and alternative forms
//! * [`numerics`]: quadrature, finite differences, bisection
//! * [`cli`] / [`output`]: the `qwell-carnot` command line and its CSV/JSON
//!
//! ```
//! use qwell_carnot::cycle::{build, CycleSpec};
//!
//! let result = build(&CycleSpec::natural(1.0, 3.0, 1.0)?)?;
//! assert!((result.eta - 0.75).abs() < 1e-12);
//! # Ok::<(), qwell_carnot::Error>(())
//! ```
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/`
//! directory (`cargo run --example carnot_cycle`, ...).

pub mod cli;
pub mod cycle;
pub mod error;
pub mod model;
pub mod numerics;
pub mod output;
pub mod processes;
pub mod superposition;
pub mod verify;

pub use cycle::{build, efficiency, work_quadrature, CycleResult, CycleSpec, LegWork};
pub use error::{Error, Result};
pub use model::{Level, LambdaSpec, PhysicalParams, Units};
pub use processes::{CycleGeometry, LegKind, LegSample};
pub use superposition::TwoLevelMix;
pub use verify::{verify, OracleReport, ReportRow};
