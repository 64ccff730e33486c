// Coset graphs of M_q and K_q coincide and are distance-regular.

use kasami::graphs::{graphs_equal_by_syndrome, CosetGraph, Graph};
use kasami::kasami::KasamiConfig;
use kasami::Result;

pub fn run() -> Result<()> {
    let cfg = KasamiConfig::new(4, 2)?;
    let mds = cfg.build_mds()?;
    let kasami = cfg.build_kasami_dual()?;
    let g = CosetGraph::from_check(cfg.ctx(), mds.rows(), cfg.outer_field())?;
    println!(
        "coset graph of M_4: {} vertices, degree {}",
        g.order(),
        g.connectors().len()
    );
    match g.distance_regularity()? {
        Some(a) => println!("distance-regular with array {a}"),
        None => println!("not distance-regular"),
    }
    let same = graphs_equal_by_syndrome(&cfg.simplex()?, mds.rows(), kasami.rows())?;
    println!("same graph as the coset graph of K_4: {same}");

    let mut edges = Vec::new();
    kasami::graphs::write_edges(&g, &mut edges)?;
    println!(
        "edge list has {} lines",
        edges.iter().filter(|&&b| b == b'\n').count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
