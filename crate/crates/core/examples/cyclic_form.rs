// Reordering coordinates makes the concatenated code cyclic.

use kasami::cyclic::{generator_poly, is_shift_invariant};
use kasami::kasami::KasamiConfig;
use kasami::Result;

pub fn run() -> Result<()> {
    for (q, p) in [(4, 2), (8, 2), (16, 4)] {
        let cfg = KasamiConfig::new(q, p)?;
        let cyc = cfg.build_kasami_dual_cyclic()?;
        let trace = cfg.trace_kasami_dual()?;
        println!(
            "q = {q}, p = {p}: shift invariant {}, equals trace code with nonzeros {:?}: {}",
            is_shift_invariant(&cyc),
            cfg.cyclic_nonzero_exponents(),
            trace.same_code(&cyc)
        );
    }
    let cyc = KasamiConfig::new(4, 2)?.build_kasami_dual_cyclic()?;
    println!("generator polynomial for q = 4: {}", generator_poly(&cyc)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
