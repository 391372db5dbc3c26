use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srnt_core::constructions::{
    clebsch, gewirtz_graph, higman_sims, hoffman_singleton, m22_graph, petersen, witt_design_22,
    KnownGraph,
};
use srnt_core::engine::{
    analyse_vertex, block_identities_check, matrix_identity_check, moore_antipodal_check,
    subconstituent, verify_srnt, x2_annihilator_check, x2_diameter, x2_multiplicities, Violation,
};
use srnt_core::linked::subconstituent_params;
use srnt_core::{Error, Graph, Rational};

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

#[test]
fn six_constructions_certify() {
    let design = witt_design_22().unwrap();
    for known in KnownGraph::ALL {
        let g = known.build(Some(&design)).unwrap();
        let cert = verify_srnt(&g).unwrap_or_else(|v| panic!("{known}: {v}"));
        let (k, c, n) = known.parameters();
        assert_eq!(
            (cert.k as i128, cert.c as i128, cert.n as i128),
            (k, c, n),
            "{known}"
        );
        assert!(matrix_identity_check(&g, k, c).unwrap(), "{known}");
        assert_eq!(g.edge_count() as i128, n * k / 2);
    }
}

#[test]
fn every_vertex_of_small_graphs() {
    for (g, diameter) in [(petersen(), 3), (clebsch(), 2), (hoffman_singleton(), 3)] {
        let cert = verify_srnt(&g).unwrap();
        for v in 0..g.vertex_count() {
            let rep = analyse_vertex(&g, &cert, v).unwrap();
            assert!(rep.passed(), "vertex {v}: {rep:?}");
            assert_eq!(rep.diameter, diameter);
            let total: u64 = rep.multiplicities.values().sum();
            assert_eq!(total as usize, cert.params.ell as usize);
        }
    }
}

#[test]
fn clebsch_second_subconstituent_is_petersen() {
    let g = clebsch();
    for v in 0..16 {
        let dec = subconstituent(&g, v).unwrap();
        assert_eq!(dec.a2.vertex_count(), 10);
        assert!((0..10).all(|i| dec.a2.degree(i) == 3));
        let cert = verify_srnt(&dec.a2).unwrap();
        assert_eq!((cert.k, cert.c), (3, 1));
        assert_eq!(
            x2_multiplicities(&dec, 5, 2).unwrap(),
            BTreeMap::from([(3, 1), (1, 5), (-3, 0), (-2, 4)])
        );
    }
}

#[test]
fn hoffman_singleton_is_an_antipodal_cover() {
    let g = hoffman_singleton();
    for v in 0..50 {
        let dec = subconstituent(&g, v).unwrap();
        assert_eq!(x2_diameter(&dec).unwrap(), 3);
        assert!(moore_antipodal_check(&dec, 7, 1).unwrap());
        assert!(block_identities_check(&dec, 7, 1).unwrap());
    }
}

#[test]
fn higman_sims_second_subconstituents() {
    let design = witt_design_22().unwrap();
    let g = higman_sims(&design);
    // X₂ of the distinguished vertex is the M22 graph, in block order.
    let dec = subconstituent(&g, 0).unwrap();
    assert_eq!(dec.x2, (23..100).collect::<Vec<_>>());
    assert_eq!(dec.a2, m22_graph(&design));
    assert_eq!(
        x2_multiplicities(&dec, 22, 6).unwrap(),
        BTreeMap::from([(16, 1), (2, 55), (-8, 0), (-6, 21)])
    );
    assert!(matches!(
        moore_antipodal_check(&dec, 22, 6),
        Err(Error::NotMooreCase { c: 6 })
    ));
    for v in [0, 1, 22, 23, 57, 99] {
        let dec = subconstituent(&g, v).unwrap();
        assert_eq!((dec.x1.len(), dec.a2.vertex_count()), (22, 77));
        assert!((0..77).all(|i| dec.a2.degree(i) == 16));
        assert_eq!(x2_diameter(&dec).unwrap(), 2);
        assert!(x2_annihilator_check(&dec, 22, 6).unwrap());
        let cert = verify_srnt(&dec.a2).unwrap();
        assert_eq!((cert.k, cert.c), (16, 4));
    }
}

#[test]
fn gewirtz_for_every_point() {
    let design = witt_design_22().unwrap();
    for p in 0..22 {
        let cert = verify_srnt(&gewirtz_graph(&design, p).unwrap()).unwrap();
        assert_eq!((cert.k, cert.c, cert.n), (10, 2, 56));
    }
}

#[test]
fn gewirtz_and_m22_are_not_linked_pair_candidates() {
    assert!(matches!(
        subconstituent_params(10, 2),
        Err(Error::NotLinkedPairCandidate(_))
    ));
    assert!(matches!(
        subconstituent_params(16, 4),
        Err(Error::NotLinkedPairCandidate(_))
    ));
    let design = witt_design_22().unwrap();
    let m22 = verify_srnt(&m22_graph(&design)).unwrap();
    assert_eq!(m22.params.krein2, Rational::from_int(20));
    // The second subconstituents are not SRNT.
    let g = gewirtz_graph(&design, 0).unwrap();
    assert!(verify_srnt(&subconstituent(&g, 0).unwrap().a2).is_err());
    assert!(verify_srnt(&subconstituent(&m22_graph(&design), 0).unwrap().a2).is_err());
}

#[test]
fn constructions_are_deterministic() {
    for known in KnownGraph::ALL {
        let a = known.build(None).unwrap().edges();
        let b = known.build(None).unwrap().edges();
        assert_eq!(a, b, "{known}");
    }
    assert_eq!(witt_design_22().unwrap(), witt_design_22().unwrap());
}

/// A 3-regular simple graph on `n` vertices with at least one triangle,
/// from the configuration model with a fixed seed.
fn random_cubic_with_triangle(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Graph::from_edges(n, pairs.iter().copied()).unwrap();
        if g.edge_count() != 3 * n / 2 {
            continue;
        }
        if g.edges()
            .iter()
            .any(|&(u, v)| g.common_neighbours(u, v) > 0)
        {
            return g;
        }
    }
}

fn negative_controls() -> Vec<(&'static str, Graph, &'static str)> {
    let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
    let p = petersen();
    let (u, v) = p.edges()[0];
    vec![
        ("5-cycle", cycle(5), "degree-at-least-3"),
        ("K3,3", k33, "non-bipartite"),
        ("7-cycle", cycle(7), "constant-c"),
        (
            "cubic with triangle",
            random_cubic_with_triangle(12, 7),
            "triangle-free",
        ),
        ("Petersen minus an edge", p.without_edge(u, v), "regular"),
        (
            "two Petersens",
            Graph::from_edges(
                20,
                p.edges()
                    .into_iter()
                    .chain(p.edges().into_iter().map(|(a, b)| (a + 10, b + 10))),
            )
            .unwrap(),
            "constant-c",
        ),
    ]
}

#[test]
fn negative_controls_fail_with_named_axiom() {
    for (name, g, axiom) in negative_controls() {
        let v = verify_srnt(&g).expect_err(name);
        assert_eq!(v.axiom(), axiom, "{name}: {v}");
    }
    let g = random_cubic_with_triangle(12, 7);
    assert!(matches!(verify_srnt(&g), Err(Violation::Triangle { .. })));
}

#[test]
fn excluded_graphs_satisfy_identity_outside_range() {
    // The pentagon and K3,3 are strongly regular, just not in range.
    assert!(matrix_identity_check(&cycle(5), 2, 1).unwrap());
    let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
    assert!(matrix_identity_check(&k33, 3, 3).unwrap());
}

#[test]
fn matrix_identities_agree_with_axioms() {
    let design = witt_design_22().unwrap();
    for known in KnownGraph::ALL {
        let g = known.build(Some(&design)).unwrap();
        let cert = verify_srnt(&g).unwrap();
        assert!(matrix_identity_check(&g, cert.k as i128, cert.c as i128).unwrap());
        assert!(!matrix_identity_check(&g, cert.k as i128, cert.c as i128 + 1).unwrap());
    }
    for (name, g, _) in negative_controls() {
        let n = g.vertex_count();
        for k in 3..n as i128 {
            for c in 1..k {
                assert!(
                    !matrix_identity_check(&g, k, c).unwrap(),
                    "{name} ({k},{c})"
                );
            }
        }
    }
}
