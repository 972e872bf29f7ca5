//! Lowest levels of the well as the walls move apart, for a free particle and
//! for increasing anharmonicity.
//!
//! Run with: cargo run --example spectrum

use qwell_carnot::model::{energy_level, scale_energy, Level, LambdaSpec, PhysicalParams};

fn main() -> qwell_carnot::Result<()> {
    let p = PhysicalParams::natural();
    let specs = [
        ("free particle", LambdaSpec::FreeParticle),
        ("lambda = 0.5", LambdaSpec::frozen(0.5)?),
        ("lambda = 2", LambdaSpec::frozen(2.0)?),
    ];

    for (name, spec) in specs {
        println!("{name}");
        println!("  {:>6} {:>12} {:>12} {:>12} {:>12}", "L", "W(L)", "E1", "E2", "E3");
        for l in [0.5, 1.0, 2.0, 4.0] {
            let e: Vec<f64> = (1..=3)
                .map(|n| energy_level(Level::new(n).unwrap(), l, &spec, &p))
                .collect::<Result<_, _>>()?;
            println!(
                "  {l:>6.2} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
                scale_energy(l, &p)?,
                e[0],
                e[1],
                e[2]
            );
        }
        println!();
    }
    Ok(())
}
