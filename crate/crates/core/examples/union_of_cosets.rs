// Unions of cosets of a Kasami code give new completely regular sets.

use kasami::graphs::set_regularity;
use kasami::kasami::KasamiConfig;
use kasami::union::{is_additive, BuildMode, CosetFamily};
use kasami::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> Result<()> {
    let cfg = KasamiConfig::new(4, 2)?;
    let fam = CosetFamily::from_code(&cfg.build_kasami_dual()?.dual())?;
    println!(
        "base array {}, r = {}, leaders {:?}",
        fam.array(),
        fam.r(),
        fam.leaders()
    );
    for k in 1..fam.r() {
        let bk = fam.build_bk(k, BuildMode::Direct)?;
        let verdict = set_regularity(fam.hamming(), &bk)?;
        println!(
            "B_{k}: {} vertices, array {}, expected {}, additive {}",
            bk.len(),
            verdict.array().map_or("none".into(), |a| a.to_string()),
            fam.expected_array(k),
            is_additive(&bk)
        );
    }
    let tower = fam.build_bk(2, BuildMode::AdditiveTower)?;
    println!("tower B_2 additive: {}", is_additive(&tower));
    println!(
        "refined partition equitable: {}",
        fam.refined_partition_check()?.passed()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(0x4B41534D);
    let pick = fam.random_selection(2, &mut rng)?;
    let v = set_regularity(fam.hamming(), &fam.union_of(&pick))?;
    println!("random cosets {pick:?}: CR {}", v.is_regular());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
