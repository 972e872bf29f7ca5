//! The `qwell-carnot` command line: `cycle`, `diagram`, `sweep` and `verify`.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 2 usage
//! or domain error, 3 numerical failure.

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cycle::{self, CycleSpec};
use crate::error::Error;
use crate::model::{LambdaSpec, PhysicalParams, HBAR_SI};
use crate::output::{Cell, OutputFormat, Record, Table, MAX_PRECISION};
use crate::processes::{self, CycleGeometry};

#[derive(Debug, Parser)]
#[command(name = "qwell-carnot", version, about = "Quantum Carnot engine in a Poschl-Teller well")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Corner widths, energies, per-leg work, heat and efficiency.
    Cycle(CommonArgs),
    /// P-L diagram samples for all four legs.
    Diagram(DiagramArgs),
    /// Efficiency over a list of lambda or L3 values.
    Sweep(SweepArgs),
    /// Closed forms vs quadrature vs alternative closed forms.
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    Natural,
    Si,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Width at the start of the hot isotherm.
    #[arg(long)]
    pub l1: f64,
    /// Width at the start of the cold isotherm.
    #[arg(long)]
    pub l3: Option<f64>,
    /// Frozen anharmonicity; 0 is the free particle.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub out: FormatArg,
    /// Mantissa digits of every printed number.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
    #[arg(long, value_enum, default_value_t = UnitsArg::Natural)]
    pub units: UnitsArg,
    /// Reduced Planck constant (SI only; defaults to CODATA).
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Particle mass (SI only, required there).
    #[arg(long)]
    pub mass: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Samples per leg, corners included.
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda_list: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub l3_list: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Numeric(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Domain(e) | CliError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_numeric() {
            CliError::Numeric(e)
        } else {
            CliError::Domain(e)
        }
    }
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub l1: f64,
    pub l3: Option<f64>,
    pub lambda: f64,
    pub params: PhysicalParams,
    pub samples: usize,
    pub out: OutputFormat,
    pub precision: usize,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> Result<Self, CliError> {
        let params = match args.units {
            UnitsArg::Natural => {
                if args.hbar.is_some() || args.mass.is_some() {
                    return Err(CliError::Usage("--hbar/--mass require --units si".into()));
                }
                PhysicalParams::natural()
            }
            UnitsArg::Si => {
                let mass = args
                    .mass
                    .ok_or_else(|| CliError::Usage("--units si requires --mass".into()))?;
                PhysicalParams::si(args.hbar.unwrap_or(HBAR_SI), mass)?
            }
        };
        if args.precision > MAX_PRECISION {
            return Err(CliError::Usage(format!("--precision must be at most {MAX_PRECISION}")));
        }
        LambdaSpec::frozen(args.lambda)?;
        Ok(Self {
            l1: args.l1,
            l3: args.l3,
            lambda: args.lambda,
            params,
            samples: 256,
            out: match args.out {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            },
            precision: args.precision,
        })
    }

    fn l3(&self) -> Result<f64, CliError> {
        self.l3.ok_or_else(|| CliError::Usage("--l3 is required".into()))
    }

    pub fn cycle_spec(&self) -> Result<CycleSpec, CliError> {
        Ok(CycleSpec::natural(self.l1, self.l3()?, self.lambda)?.with_params(self.params))
    }
}

/// Execute a parsed command line and return what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Cycle(args) => cmd_cycle(&RunConfig::from_args(args)?),
        Command::Diagram(args) => {
            let cfg = RunConfig {
                samples: args.samples,
                ..RunConfig::from_args(&args.common)?
            };
            cmd_diagram(&cfg)
        }
        Command::Sweep(args) => {
            let cfg = RunConfig::from_args(&args.common)?;
            let range = match (&args.lambda_list, &args.l3_list) {
                (Some(v), None) => SweepRange::Lambda(v.clone()),
                (None, Some(v)) => SweepRange::L3(v.clone()),
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage("give only one of --lambda-list and --l3-list".into()))
                }
                (None, None) => {
                    return Err(CliError::Usage("sweep needs --lambda-list or --l3-list".into()))
                }
            };
            cmd_sweep(&cfg, &range)
        }
        Command::Verify(args) => cmd_verify(&RunConfig::from_args(args)?),
    }
}

pub fn cmd_cycle(cfg: &RunConfig) -> Result<String, CliError> {
    let r = cycle::build(&cfg.cycle_spec()?)?;
    let mut rec = Record::default();
    rec.push("L2", r.l2);
    rec.push("L4", r.l4);
    rec.push("E_H", r.e_hot);
    rec.push("E_C", r.e_cold);
    rec.push("W12", r.work.hot_isotherm);
    rec.push("W23", r.work.adiabat_expand);
    rec.push("W34", r.work.cold_isotherm);
    rec.push("W41", r.work.adiabat_compress);
    rec.push("W_total", r.w_total);
    rec.push("Q_H", r.q_hot);
    rec.push("eta", r.eta);
    Ok(rec.render(cfg.out, cfg.precision))
}

pub fn cmd_diagram(cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let spec = cfg.cycle_spec()?;
    let geom: CycleGeometry = spec.geometry()?;
    let mut table = Table::new(vec!["leg", "L", "P", "E", "a1sq"]);
    for (kind, samples) in processes::sample_cycle(&geom, cfg.samples)? {
        for s in samples {
            table.push(vec![
                Cell::Int(i64::from(kind.number())),
                s.l.into(),
                s.p.into(),
                s.e.into(),
                s.a1sq.into(),
            ]);
        }
    }
    Ok(table.render(cfg.out, cfg.precision))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepRange {
    Lambda(Vec<f64>),
    L3(Vec<f64>),
}

impl SweepRange {
    fn values(&self) -> &[f64] {
        match self {
            SweepRange::Lambda(v) | SweepRange::L3(v) => v,
        }
    }
}

fn is_strictly_monotone(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1]) || v.windows(2).all(|w| w[0] > w[1])
}

pub fn cmd_sweep(cfg: &RunConfig, range: &SweepRange) -> Result<String, CliError> {
    let values = range.values();
    if values.is_empty() {
        return Err(CliError::Usage("sweep range is empty".into()));
    }
    if !is_strictly_monotone(values) {
        return Err(CliError::Usage("sweep range must be strictly monotone".into()));
    }
    let mut table = Table::new(vec!["lambda", "l3", "eta", "eta_free_particle", "delta", "status"]);
    for &v in values {
        let (lambda, l3) = match range {
            SweepRange::Lambda(_) => (v, cfg.l3()?),
            SweepRange::L3(_) => (cfg.lambda, v),
        };
        let spec = CycleSpec::natural(cfg.l1, l3, lambda)?.with_params(cfg.params);
        let eta_fp = cycle::free_particle_efficiency(cfg.l1, l3)?;
        match cycle::build(&spec) {
            Ok(r) => table.push(vec![
                lambda.into(),
                l3.into(),
                r.eta.into(),
                eta_fp.into(),
                (r.eta - eta_fp).into(),
                "ok".into(),
            ]),
            Err(Error::DegenerateCycle { .. }) => table.push(vec![
                lambda.into(),
                l3.into(),
                Cell::Missing,
                eta_fp.into(),
                Cell::Missing,
                "degenerate".into(),
            ]),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(table.render(cfg.out, cfg.precision))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<String, CliError> {
    let report = cycle::build(&cfg.cycle_spec()?)?.report;
    let mut table = Table::new(vec![
        "row",
        "quantity",
        "reference",
        "reference_value",
        "candidate",
        "candidate_value",
        "abs_dev",
        "rel_dev",
    ]);
    for r in report.all_rows() {
        table.push(vec![
            r.row.as_str().into(),
            r.quantity.into(),
            r.reference.into(),
            r.reference_value.into(),
            r.candidate.into(),
            r.candidate_value.into(),
            r.abs_dev.into(),
            r.rel_dev.into(),
        ]);
    }
    Ok(table.render(cfg.out, cfg.precision))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qwell-carnot").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn degenerate_cycle_is_exit_2() {
        let err = run(&parse(&["cycle", "--l1", "1", "--l3", "1.5"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn overflowing_energy_is_exit_3() {
        let err = run(&parse(&["cycle", "--l1", "1e-200", "--l3", "1e-199"])).unwrap_err();
        assert_eq!(err.exit_code(), 3, "{err}");
    }

    #[test]
    fn unit_flag_combinations() {
        assert!(matches!(
            run(&parse(&["cycle", "--l1", "1", "--l3", "4", "--mass", "2"])),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(&parse(&["cycle", "--l1", "1", "--l3", "4", "--units", "si"])),
            Err(CliError::Usage(_))
        ));
        assert!(run(&parse(&["cycle", "--l1", "1e-9", "--l3", "4e-9", "--units", "si", "--mass", "9.1093837015e-31"])).is_ok());
    }

    #[test]
    fn sweep_range_validation() {
        let base = ["sweep", "--l1", "1", "--l3", "4"];
        let with = |extra: &[&str]| {
            let mut v = base.to_vec();
            v.extend_from_slice(extra);
            run(&parse(&v))
        };
        assert!(matches!(with(&[]), Err(CliError::Usage(_))));
        assert!(matches!(with(&["--lambda-list", "0.1,0.05,0.2"]), Err(CliError::Usage(_))));
        assert!(matches!(
            with(&["--lambda-list", "0.1", "--l3-list", "4"]),
            Err(CliError::Usage(_))
        ));
        assert!(with(&["--l3-list", "8,4"]).is_ok());
    }

    #[test]
    fn sweep_marks_degenerate_rows() {
        let out = run(&parse(&["sweep", "--l1", "1", "--l3-list", "1.5,4"])).unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].ends_with("degenerate"));
        assert!(lines[2].ends_with("ok"));
    }

    #[test]
    fn negative_lambda_is_rejected() {
        assert_eq!(
            run(&parse(&["cycle", "--l1", "1", "--l3", "4", "--lambda", "-1"])).unwrap_err().exit_code(),
            2
        );
    }
}
