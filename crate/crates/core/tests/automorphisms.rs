use std::collections::HashSet;

use kasami::aut::{
    brute_force_aut, certify, enumerate_gamma_l, expected_group_orders, lift_to_concat, preserves,
    psi_of, zeta_coords, AutLevel, GammaLElement, MonomialTransform, SemilinearTransform,
};
use kasami::kasami::KasamiConfig;
use kasami::{Elem, FieldCtx, LinearCode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x4B41534D;

fn group(cfg: &KasamiConfig) -> Vec<GammaLElement> {
    enumerate_gamma_l(cfg, cfg.q_degree())
}

#[test]
fn group_orders() {
    assert_eq!(expected_group_orders(2), (6, 6));
    assert_eq!(expected_group_orders(4), (180, 360));
    assert_eq!(expected_group_orders(8), (3528, 10584));
    for q in [4u64, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let gl = enumerate_gamma_l(&cfg, 1).len() as u64;
        assert_eq!((gl, group(&cfg).len() as u64), expected_group_orders(q));
    }
}

#[test]
fn zeta_coordinates() {
    for q in [4u64, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let ctx = cfg.ctx();
        assert_eq!(
            zeta_coords(&cfg, q as i64 + 1).unwrap(),
            (Elem::ONE, Elem::ZERO)
        );
        let points: Vec<(Elem, Elem)> = (1..=q as i64 + 1)
            .map(|i| zeta_coords(&cfg, i).unwrap())
            .collect();
        for (i, &(g0, g1)) in points.iter().enumerate() {
            assert!(cfg.outer_field().contains(g0) && cfg.outer_field().contains(g1));
            let z = ctx.pow(cfg.zeta(), i as i64 + 1).unwrap();
            assert_eq!(g0 + ctx.mul(g1, ctx.alpha()), z);
            for &(h0, h1) in &points[i + 1..] {
                assert_ne!(ctx.mul(g0, h1), ctx.mul(g1, h0));
            }
        }
    }
}

#[test]
fn identity_and_scalar_matrices() {
    let cfg = KasamiConfig::new(4, 2).unwrap();
    assert_eq!(
        psi_of(&cfg, &GammaLElement::identity()).unwrap(),
        SemilinearTransform::identity(5)
    );
    for l in cfg.outer_field().nonzero() {
        let t = psi_of(&cfg, &GammaLElement::scalar(l)).unwrap();
        assert!(t.mono.perm().iter().enumerate().all(|(i, &j)| i == j));
        assert!(t.mono.diag().iter().all(|&d| d == l));
    }
}

#[test]
fn every_element_preserves_mds_codes() {
    for q in [4u64, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let mds_dual = cfg.build_mds().unwrap();
        let mds = mds_dual.dual();
        for psi in group(&cfg) {
            let t = psi_of(&cfg, &psi).unwrap();
            assert!(preserves(&t, &mds).unwrap());
            assert!(preserves(&t.contragredient(cfg.ctx()), &mds_dual).unwrap());
        }
    }
}

fn same_action(
    ctx: &FieldCtx,
    a: &SemilinearTransform,
    b: &SemilinearTransform,
    code: &LinearCode,
    words: &[Vec<Elem>],
) -> bool {
    let rows = code
        .rows()
        .iter()
        .all(|w| a.apply(ctx, w) == b.apply(ctx, w));
    rows && a.frob == b.frob && words.iter().all(|w| a.apply(ctx, w) == b.apply(ctx, w))
}

#[test]
fn psi_is_a_homomorphism() {
    for q in [4u64, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let ctx = cfg.ctx();
        let mds = cfg.build_mds().unwrap().dual();
        let words = if q == 4 {
            mds.codewords().unwrap()
        } else {
            Vec::new()
        };
        let g = group(&cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..1000 {
            let (x, y) = (g.choose(&mut rng).unwrap(), g.choose(&mut rng).unwrap());
            let composed =
                psi_of(&cfg, x)
                    .unwrap()
                    .compose(ctx, &psi_of(&cfg, y).unwrap(), cfg.q_degree());
            let direct = psi_of(&cfg, &x.compose(&cfg, y).unwrap()).unwrap();
            assert!(
                same_action(ctx, &composed, &direct, &mds, &words),
                "q={q} {x:?} {y:?}"
            );
        }
    }
}

#[test]
fn distinct_elements_give_distinct_transforms() {
    for q in [4u64, 8] {
        let cfg = KasamiConfig::new(q, 2).unwrap();
        let g = group(&cfg);
        let images: HashSet<SemilinearTransform> =
            g.iter().map(|x| psi_of(&cfg, x).unwrap()).collect();
        assert_eq!(images.len(), g.len());
    }
}

fn check_commuting(q: u64, sample: Option<usize>) {
    let cfg = KasamiConfig::new(q, 2).unwrap();
    let ctx = cfg.ctx();
    let simplex = cfg.simplex().unwrap();
    let mds_dual = cfg.build_mds().unwrap();
    let kasami = cfg.build_kasami_dual().unwrap();
    let words = mds_dual.codewords().unwrap();
    let mut g = group(&cfg);
    if let Some(n) = sample {
        g.shuffle(&mut ChaCha8Rng::seed_from_u64(SEED));
        g.truncate(n);
    }
    for psi in &g {
        let t = psi_of(&cfg, psi).unwrap().contragredient(ctx);
        let lift: SemilinearTransform = lift_to_concat(&t, &simplex).unwrap().into();
        assert!(lift.mono.is_permutation());
        assert!(preserves(&lift, &kasami).unwrap());
        for w in &words {
            assert_eq!(
                simplex.phi(&t.apply(ctx, w)).unwrap(),
                lift.apply(ctx, &simplex.phi(w).unwrap())
            );
        }
    }
}

#[test]
fn lifts_commute_with_phi_at_q4() {
    check_commuting(4, None);
}

#[test]
fn lifts_commute_with_phi_at_q8_sampled() {
    check_commuting(8, Some(200));
}

#[test]
fn scaling_one_coordinate_lifts_to_a_three_cycle() {
    let cfg = KasamiConfig::new(4, 2).unwrap();
    let ctx = cfg.ctx();
    let w = cfg.outer_field().generator();
    let mut diag = vec![Elem::ONE; 5];
    diag[0] = w;
    let t: SemilinearTransform = MonomialTransform::new((0..5).collect(), diag)
        .unwrap()
        .into();
    let simplex = cfg.simplex().unwrap();
    let lift = lift_to_concat(&t, &simplex).unwrap();
    let perm = lift.perm();
    assert!(perm[..3].iter().all(|&j| j < 3) && (0..3).all(|i| perm[i] != i));
    assert!((3..15).all(|i| perm[i] == i));
    let lift: SemilinearTransform = lift.into();
    for word in cfg.build_mds().unwrap().codewords().unwrap() {
        assert_eq!(
            simplex.phi(&t.apply(ctx, &word)).unwrap(),
            lift.apply(ctx, &simplex.phi(&word).unwrap())
        );
    }
}

#[test]
fn shifts_and_transpositions() {
    let cfg = KasamiConfig::new(4, 2).unwrap();
    let cyc = cfg.build_kasami_dual_cyclic().unwrap();
    assert!(preserves(&MonomialTransform::cyclic_shift(15).into(), &cyc).unwrap());
    assert!(preserves(&SemilinearTransform::identity(15), &cyc).unwrap());

    let mds = cfg.build_mds().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut preserving = 0;
    for _ in 0..100 {
        let i = rng.gen_range(0..5);
        let j = (i + rng.gen_range(1..5)) % 5;
        let mut perm: Vec<usize> = (0..5).collect();
        perm.swap(i, j);
        let t: SemilinearTransform = MonomialTransform::new(perm, vec![Elem::ONE; 5])
            .unwrap()
            .into();
        preserving += preserves(&t, &mds).unwrap() as usize;
    }
    assert_eq!(preserving, 0);
}

#[test]
fn exact_counts_at_q4() {
    let cfg = KasamiConfig::new(4, 2).unwrap();
    let mds = cfg.build_mds().unwrap();
    assert_eq!(brute_force_aut(&mds, AutLevel::Monomial).unwrap(), 180);
    assert_eq!(brute_force_aut(&mds, AutLevel::Semilinear).unwrap(), 360);

    let ctx = FieldCtx::shared(1).unwrap();
    let rep = LinearCode::new(
        ctx.clone(),
        ctx.subfield(1).unwrap(),
        3,
        vec![vec![Elem::ONE; 3]],
    )
    .unwrap();
    assert_eq!(brute_force_aut(&rep, AutLevel::Monomial).unwrap(), 6);
}

#[test]
fn lower_bound_certificate_at_q8() {
    let cert = certify(8, Some(2), AutLevel::Semilinear).unwrap();
    assert_eq!(cert.elements, 10584);
    assert_eq!(cert.preserving, 10584);
    assert_eq!(cert.distinct, 10584);
    assert_eq!(cert.exact_order, None);
    assert!(cert.passed());
}
