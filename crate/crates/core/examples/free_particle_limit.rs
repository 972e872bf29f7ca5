//! Efficiency as lambda shrinks towards zero, against the free-particle value
//! 1 - 4 L1^2 / L3^2.
//!
//! Run with: cargo run --example free_particle_limit

use qwell_carnot::cycle::free_particle_efficiency;
use qwell_carnot::{build, CycleSpec};

fn main() -> qwell_carnot::Result<()> {
    let (l1, l3) = (1.0, 4.0);
    let fp = free_particle_efficiency(l1, l3)?;
    println!("free particle: eta = {fp}");
    println!("{:>10} {:>20} {:>12}", "lambda", "eta", "eta - fp");
    for lambda in [1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 0.0] {
        let eta = build(&CycleSpec::natural(l1, l3, lambda)?)?.eta;
        println!("{lambda:>10.0e} {eta:>20.15} {:>12.3e}", eta - fp);
    }
    Ok(())
}
