//! Experimental: lambda tied to the width through zeta(L) = c/L. Corner widths
//! come from bisection and pressures from finite differences; whole-cycle
//! work and efficiency are not defined in this mode.
//!
//! Run with: cargo run --example zeta_exploration

use qwell_carnot::model::lambda_of;
use qwell_carnot::processes::{sample_cycle, CycleGeometry};
use qwell_carnot::{build, CycleSpec, LambdaSpec, PhysicalParams};

fn main() -> qwell_carnot::Result<()> {
    let spec = LambdaSpec::from_zeta(1.0)?;
    let p = PhysicalParams::natural();
    for l in [0.5, 1.0, 2.0, 4.0] {
        println!("lambda({l}) = {:.6}", lambda_of(l, &spec)?);
    }

    let geom = CycleGeometry::new(1.0, 6.0, spec, p)?;
    println!();
    println!("corners: L1 = {}, L2 = {:.8}, L3 = {}, L4 = {:.8}", geom.l1, geom.l2, geom.l3, geom.l4);
    for (kind, samples) in sample_cycle(&geom, 4)? {
        for s in samples {
            println!("  leg {} L = {:.5} P = {:.6} E = {:.6} |a1|^2 = {:.4}", kind.number(), s.l, s.p, s.e, s.a1sq);
        }
    }

    if let Err(e) = build(&CycleSpec::new(1.0, 6.0, spec, p)) {
        println!("\nbuild: {e}");
    }
    Ok(())
}
