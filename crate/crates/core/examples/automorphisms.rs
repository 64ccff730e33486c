// GΓL(2, q) acting on the MDS code and lifting to the concatenated code.

use kasami::aut::{certify, enumerate_gamma_l, lift_to_concat, preserves, psi_of, AutLevel};
use kasami::kasami::KasamiConfig;
use kasami::Result;

pub fn run() -> Result<()> {
    let cfg = KasamiConfig::new(4, 2)?;
    let mds = cfg.build_mds()?;
    let kasami = cfg.build_kasami_dual()?;
    let simplex = cfg.simplex()?;
    let group = enumerate_gamma_l(&cfg, 2);
    let mut lifted = 0;
    for psi in &group {
        let t = psi_of(&cfg, psi)?.contragredient(cfg.ctx());
        assert!(preserves(&t, &mds)?);
        if preserves(&lift_to_concat(&t, &simplex)?.into(), &kasami)? {
            lifted += 1;
        }
    }
    println!(
        "{} of {} elements lift to automorphisms of the binary code",
        lifted,
        group.len()
    );
    print!("{}", certify(4, Some(2), AutLevel::Monomial)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
