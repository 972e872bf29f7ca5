//! Wall pressure three ways: the exact 2E/L law, a finite-difference
//! derivative of the spectrum, and the mu-weighted operator form.
//!
//! Run with: cargo run --example pressure_routes

use qwell_carnot::model::{
    pressure_exact, pressure_hf, pressure_paper, Level, LambdaSpec, PhysicalParams, DEFAULT_HF_STEP,
};

fn main() -> qwell_carnot::Result<()> {
    let p = PhysicalParams::natural();
    let l = 1.5;

    println!("L = {l}");
    println!("{:>8} {:>3} {:>14} {:>14} {:>14}", "lambda", "n", "2E/L", "-dE/dL", "mu form");
    for lambda in [0.0, 0.3, 1.0, 2.0] {
        let spec = LambdaSpec::frozen(lambda)?;
        for n in [Level::GROUND, Level::FIRST_EXCITED] {
            let exact = pressure_exact(n, l, &spec, &p)?;
            let hf = pressure_hf(n, l, &spec, &p, DEFAULT_HF_STEP)?;
            let mu = pressure_paper(n, l, &spec, &p)?;
            println!("{lambda:>8.2} {:>3} {exact:>14.8} {hf:>14.8} {mu:>14.8}", n.n());
        }
    }

    // With lambda tied to the width only the finite-difference route applies.
    let zeta = LambdaSpec::from_zeta(1.0)?;
    println!();
    println!("zeta(L) = 1/L:");
    for n in [Level::GROUND, Level::FIRST_EXCITED] {
        let hf = pressure_hf(n, l, &zeta, &p, DEFAULT_HF_STEP)?;
        println!("  n = {}  -dE/dL = {hf:.10}", n.n());
        if let Err(e) = pressure_exact(n, l, &zeta, &p) {
            println!("         2E/L: {e}");
        }
    }
    Ok(())
}
