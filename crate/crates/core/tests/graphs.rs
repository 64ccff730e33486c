use kasami::graphs::{
    bfs_labels, delsarte_check, delsarte_check_set, distance_partition, graphs_equal_by_syndrome,
    is_completely_regular, is_distance_regular, quotient_matrix, set_regularity, AdjacencyGraph,
    CosetGraph, CrVerdict, Graph, HammingGraph, IntersectionArray,
};
use kasami::kasami::KasamiConfig;
use kasami::{Elem, FieldCtx, LinearCode};

fn hamming_7_4() -> LinearCode {
    let ctx = FieldCtx::shared(1).unwrap();
    let f2 = ctx.subfield(1).unwrap();
    let rows = ["1000110", "0100101", "0010011", "0001111"]
        .iter()
        .map(|r| r.bytes().map(|b| Elem((b - b'0') as u16)).collect())
        .collect();
    LinearCode::new(ctx, f2, 7, rows).unwrap()
}

fn kasami(q: u64, p: u64) -> LinearCode {
    KasamiConfig::new(q, p)
        .unwrap()
        .build_kasami_dual()
        .unwrap()
        .dual()
}

fn mds(q: u64) -> LinearCode {
    KasamiConfig::new(q, 2).unwrap().build_mds().unwrap().dual()
}

fn m4_graph() -> CosetGraph {
    let cfg = KasamiConfig::new(4, 2).unwrap();
    CosetGraph::from_check(
        cfg.ctx(),
        cfg.build_mds().unwrap().rows(),
        cfg.outer_field(),
    )
    .unwrap()
}

#[test]
fn identity_check_gives_the_hypercube() {
    let ctx = FieldCtx::shared(1).unwrap();
    let f2 = ctx.subfield(1).unwrap();
    let id: Vec<Vec<Elem>> = (0..4)
        .map(|i| (0..4).map(|j| Elem((i == j) as u16)).collect())
        .collect();
    let g = CosetGraph::from_check(&ctx, &id, &f2).unwrap();
    assert_eq!(g.order(), 16);
    assert_eq!(
        is_distance_regular(&g).unwrap(),
        Some(IntersectionArray::new(vec![4, 3, 2, 1], vec![1, 2, 3, 4]))
    );
}

#[test]
fn coset_graph_of_m4() {
    let g = m4_graph();
    assert_eq!(g.order(), 64);
    assert_eq!(g.connectors().len(), 15);
    let sizes: Vec<usize> = distance_partition(&g, &[0])
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    assert_eq!(sizes, [1, 15, 45, 3]);
    assert_eq!(45 * 4, 15 * 12);
    assert_eq!(3 * 15, 45);
}

#[test]
fn distance_partition_quotient_is_the_intersection_matrix() {
    let g = m4_graph();
    let cells = distance_partition(&g, &[0]).unwrap();
    let q = quotient_matrix(&g, &cells).unwrap().unwrap();
    let (big, s) = (16u64, 4u64);
    let expected = vec![
        vec![0, big - 1, 0, 0],
        vec![1, s - 2, big - s, 0],
        vec![0, s, big - s - 2, 1],
        vec![0, 0, big - 1, 0],
    ];
    assert_eq!(q, expected);
    let all: Vec<Vec<u32>> = vec![(0..64).collect()];
    assert_eq!(quotient_matrix(&g, &all).unwrap().unwrap(), vec![vec![15]]);
}

#[test]
fn arbitrary_split_of_cube_is_not_equitable() {
    let cube = HammingGraph::new(3, &FieldCtx::shared(1).unwrap().subfield(1).unwrap()).unwrap();
    let cells = vec![vec![0, 1, 2], vec![3, 4, 5, 6, 7]];
    let w = quotient_matrix(&cube, &cells).unwrap().unwrap_err();
    assert!(w.to_string().contains("vertex"));
}

#[test]
fn kasami_arrays() {
    for (q, p) in [(4, 2), (8, 2), (16, 4)] {
        let v = is_completely_regular(&kasami(q, p)).unwrap();
        let a = v.array().unwrap();
        assert_eq!(*a, IntersectionArray::kasami(q), "q={q} p={p}");
        let CrVerdict::Regular { layer_sizes, .. } = &v else {
            unreachable!()
        };
        assert_eq!(Some(layer_sizes.clone()), a.layer_sizes());
    }
    assert_eq!(
        IntersectionArray::kasami(8).to_string(),
        "{63, 56, 1; 1, 8, 63}"
    );
    assert_eq!(
        IntersectionArray::kasami(16).to_string(),
        "{255, 240, 1; 1, 16, 255}"
    );
}

#[test]
fn transport_of_arrays() {
    for q in [4, 8] {
        let a = is_completely_regular(&mds(q)).unwrap();
        let b = is_completely_regular(&kasami(q, 2)).unwrap();
        assert_eq!(a.array(), b.array());
        assert_eq!(a.array(), Some(&IntersectionArray::kasami(q)));
    }
}

#[test]
fn distance_regular_graphs() {
    assert_eq!(
        is_distance_regular(&AdjacencyGraph::complete(4)).unwrap(),
        Some(IntersectionArray::new(vec![3], vec![1]))
    );
    assert_eq!(is_distance_regular(&AdjacencyGraph::path(3)).unwrap(), None);
    let cfg = KasamiConfig::new(8, 2).unwrap();
    let g = CosetGraph::from_check(
        cfg.ctx(),
        cfg.build_mds().unwrap().rows(),
        cfg.outer_field(),
    )
    .unwrap();
    assert_eq!(g.order(), 512);
    let all_pairs = is_distance_regular(&g).unwrap();
    assert_eq!(all_pairs, Some(IntersectionArray::kasami(8)));
    assert_eq!(g.distance_regularity().unwrap(), all_pairs);
}

#[test]
fn perfect_code_and_punctured_sets() {
    let h = hamming_7_4();
    assert_eq!(
        is_completely_regular(&h).unwrap().array(),
        Some(&IntersectionArray::new(vec![7], vec![1]))
    );
    assert!(delsarte_check(&h).unwrap());

    let k4 = kasami(4, 2);
    let space = HammingGraph::new(15, k4.sub()).unwrap();
    let mut set = space.pack_code(&k4).unwrap();
    assert_eq!(
        set_regularity(&space, &set)
            .unwrap()
            .array()
            .map(|a| a.covering_radius()),
        Some(3)
    );
    set.remove(7);
    assert!(!set_regularity(&space, &set).unwrap().is_regular());
    assert!(delsarte_check_set(&space, &set).unwrap().is_err());
}

#[test]
fn delsarte_agrees_with_equitability() {
    let k4 = kasami(4, 2);
    let fewer = LinearCode::new(
        k4.ctx().clone(),
        k4.sub().clone(),
        15,
        k4.rows()[1..].to_vec(),
    )
    .unwrap();
    for code in [k4, fewer, mds(4), hamming_7_4()] {
        let cr = is_completely_regular(&code).unwrap().is_regular();
        assert_eq!(delsarte_check(&code).unwrap(), cr);
    }
}

#[test]
fn syndrome_graphs_coincide() {
    for q in [4, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let s = cfg.simplex().unwrap();
        let ma = cfg.build_mds().unwrap();
        let mb = s.phi_rows(ma.rows()).unwrap();
        assert!(graphs_equal_by_syndrome(&s, ma.rows(), &mb).unwrap());
        if q == 4 {
            let mut swapped = mb.clone();
            for row in &mut swapped {
                row.swap(0, 7);
            }
            assert!(graphs_equal_by_syndrome(&s, ma.rows(), &swapped).unwrap());
            let mut zeroed = mb.clone();
            for row in &mut zeroed {
                row[4] = Elem::ZERO;
            }
            assert!(!graphs_equal_by_syndrome(&s, ma.rows(), &zeroed).unwrap());
        }
    }
}

#[test]
fn degree_is_n_times_p_minus_one() {
    for code in [
        kasami(4, 2),
        kasami(8, 2),
        kasami(16, 4),
        mds(4),
        mds(8),
        hamming_7_4(),
    ] {
        let g = CosetGraph::of_code(&code).unwrap();
        assert_eq!(g.connectors().len(), code.n() * (code.alphabet() - 1));
        assert!(bfs_labels(&g, &[0]).is_ok());
    }
}

#[test]
fn large_kasami_coset_graph_is_distance_regular() {
    let g = CosetGraph::of_code(&kasami(16, 4)).unwrap();
    assert_eq!((g.order(), g.connectors().len()), (4096, 255));
    assert_eq!(
        g.distance_regularity().unwrap(),
        Some(IntersectionArray::kasami(16))
    );
}
