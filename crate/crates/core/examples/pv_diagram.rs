//! P-L loop data as CSV on stdout, ready for any plotting tool.
//!
//! Run with: cargo run --example pv_diagram > loop.csv

use qwell_carnot::processes::sample_cycle;
use qwell_carnot::CycleSpec;

fn main() -> qwell_carnot::Result<()> {
    let geom = CycleSpec::natural(1.0, 3.0, 1.0)?.geometry()?;
    println!("leg,L,P,E,a1sq");
    for (kind, samples) in sample_cycle(&geom, 64)? {
        for s in samples {
            println!("{},{},{},{},{}", kind.number(), s.l, s.p, s.e, s.a1sq);
        }
    }
    Ok(())
}
