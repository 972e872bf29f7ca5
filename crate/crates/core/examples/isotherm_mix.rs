//! Occupation weights along both isotherms. The energy stays pinned while the
//! population moves between the two lowest levels.
//!
//! Run with: cargo run --example isotherm_mix

use qwell_carnot::processes::{l2_of, l4_of};
use qwell_carnot::superposition::{cold_isotherm_mix, hot_isotherm_mix, mix_energy};
use qwell_carnot::{LambdaSpec, PhysicalParams};

fn main() -> qwell_carnot::Result<()> {
    let p = PhysicalParams::natural();
    let spec = LambdaSpec::frozen(1.0)?;
    let (l1, l3) = (1.0, 3.0);
    let l2 = l2_of(l1, &spec)?;
    let l4 = l4_of(l3, &spec)?;

    println!("hot isotherm, L1 = {l1} -> L2 = {l2}");
    println!("{:>8} {:>8} {:>8} {:>14}", "L", "|a1|^2", "|a2|^2", "<H>");
    for i in 0..=6 {
        let l = l1 + (l2 - l1) * f64::from(i) / 6.0;
        let m = hot_isotherm_mix(l, l1, &spec, &p)?;
        println!(
            "{l:>8.4} {:>8.4} {:>8.4} {:>14.10}",
            m.ground_weight(),
            m.excited_weight(),
            mix_energy(&m, l, &spec, &p)?
        );
    }

    println!();
    println!("cold isotherm, L3 = {l3} -> L4 = {l4}");
    println!("{:>8} {:>8} {:>8} {:>14}", "L", "|b1|^2", "|b2|^2", "<H>");
    for i in 0..=6 {
        let l = l3 + (l4 - l3) * f64::from(i) / 6.0;
        let m = cold_isotherm_mix(l, l3, &spec, &p)?;
        println!(
            "{l:>8.4} {:>8.4} {:>8.4} {:>14.10}",
            m.ground_weight(),
            m.excited_weight(),
            mix_energy(&m, l, &spec, &p)?
        );
    }

    match hot_isotherm_mix(l2 * 1.1, l1, &spec, &p) {
        Err(e) => println!("\nbeyond L2: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
