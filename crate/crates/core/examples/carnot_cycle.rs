//! One full cycle: corners, per-leg work, heat intake and efficiency, for the
//! free particle and for an anharmonic well.
//!
//! Run with: cargo run --example carnot_cycle

use qwell_carnot::{build, CycleSpec, LegKind};

fn main() -> qwell_carnot::Result<()> {
    for (l1, l3, lambda) in [(1.0, 4.0, 0.0), (1.0, 3.0, 1.0), (0.5, 6.0, 2.5)] {
        let r = build(&CycleSpec::natural(l1, l3, lambda)?)?;
        println!("L1 = {l1}, L3 = {l3}, lambda = {lambda}");
        println!("  corners  L2 = {:.6}  L4 = {:.6}", r.l2, r.l4);
        println!("  E_H = {:.6}  E_C = {:.6}", r.e_hot, r.e_cold);
        for kind in LegKind::ALL {
            println!("  W leg {} ({kind:?}) = {:+.6}", kind.number(), r.work.get(kind));
        }
        println!("  W = {:.6}  Q_H = {:.6}  eta = {:.6}", r.w_total, r.q_hot, r.eta);
        println!();
    }

    match build(&CycleSpec::natural(1.0, 1.5, 0.0)?) {
        Err(e) => println!("L3 below L2: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
