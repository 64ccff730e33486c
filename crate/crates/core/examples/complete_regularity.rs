// Complete regularity through equitable distance partitions, cross-checked
// with the Delsarte criterion.

use kasami::graphs::{delsarte_check, is_completely_regular, CrVerdict};
use kasami::kasami::KasamiConfig;
use kasami::{LinearCode, Result};

fn report(name: &str, code: &LinearCode) -> Result<()> {
    match is_completely_regular(code)? {
        CrVerdict::Regular { array, layer_sizes } => {
            println!("{name}: CR {array}, layers {layer_sizes:?}")
        }
        CrVerdict::NotEquitable(w) => println!("{name}: not CR, {w}"),
    }
    Ok(())
}

pub fn run() -> Result<()> {
    let cfg = KasamiConfig::new(4, 2)?;
    let k4 = cfg.build_kasami_dual()?.dual();
    report("K_4", &k4)?;
    println!("Delsarte agrees: {}", delsarte_check(&k4)?);
    report("M_4", &cfg.build_mds()?.dual())?;

    let fewer = LinearCode::new(
        k4.ctx().clone(),
        k4.sub().clone(),
        k4.n(),
        k4.rows()[1..].to_vec(),
    )?;
    report("K_4 without its first generator", &fewer)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
