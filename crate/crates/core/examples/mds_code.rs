// The cyclic [q+1, 3, q-1] MDS code and its dual.

use kasami::kasami::{expected_mds_weights, KasamiConfig};
use kasami::linear::macwilliams;
use kasami::Result;

pub fn run() -> Result<()> {
    for q in [4, 8, 16] {
        let cfg = KasamiConfig::new(q, 2)?;
        let code = cfg.build_mds()?;
        let w = code.weight_distribution()?;
        println!(
            "q = {q}: [{}, {}, {}] MDS = {}",
            code.n(),
            code.k(),
            code.minimum_distance()?,
            code.is_mds()?
        );
        println!("  weights {w}");
        assert_eq!(w, expected_mds_weights(q));
        if q == 4 {
            let dual = macwilliams(&w, code.n(), code.k(), q)?;
            println!("  dual weights {dual}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
