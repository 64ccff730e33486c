// Concatenating the MDS code with a simplex code gives a Kasami-type code.

use kasami::concat::hamming_distance;
use kasami::kasami::{expected_weights, KasamiConfig};
use kasami::Result;

pub fn run() -> Result<()> {
    for (q, p) in [(4, 2), (8, 2), (16, 4)] {
        let cfg = KasamiConfig::new(q, p)?;
        let simplex = cfg.simplex()?;
        println!(
            "q = {q}, p = {p}: simplex length {}, every nonzero word has weight {}",
            simplex.len(),
            simplex.one_weight()
        );
        let code = cfg.build_kasami_dual()?;
        let w = code.weight_distribution()?;
        println!("  [{}, {}]_{p} weights {w}", code.n(), code.k());
        assert_eq!(w, expected_weights(q, p));
    }

    let cfg = KasamiConfig::new(4, 2)?;
    let simplex = cfg.simplex()?;
    let mds = cfg.build_mds()?;
    let (y, z) = (mds.rows()[0].clone(), mds.rows()[1].clone());
    let d = hamming_distance(&y, &z);
    let dphi = hamming_distance(&simplex.phi(&y)?, &simplex.phi(&z)?);
    println!("d(y, z) = {d}, d(phi y, phi z) = {dphi}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
