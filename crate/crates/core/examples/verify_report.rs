//! Compare the cycle's closed forms against quadrature of the pressure curves
//! and against the alternative closed forms.
//!
//! Run with: cargo run --example verify_report

use qwell_carnot::{verify, CycleSpec};

fn main() -> qwell_carnot::Result<()> {
    for (l1, l3, lambda) in [(1.0, 4.0, 0.0), (1.0, 3.0, 1.0)] {
        let report = verify(&CycleSpec::natural(l1, l3, lambda)?)?;
        println!("L1 = {l1}, L3 = {l3}, lambda = {lambda}");
        for r in report.all_rows() {
            println!(
                "  {:>3} {:<13} {:<13} {:>15.9}  {:<28} {:>15.9}  rel {}",
                r.row,
                r.quantity,
                r.reference,
                r.reference_value,
                r.candidate,
                r.candidate_value,
                r.rel_dev.map_or("-".into(), |d| format!("{d:.2e}"))
            );
        }
        println!();
    }
    Ok(())
}
