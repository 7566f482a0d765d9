use probe_block_core::decomposition::block_decomposition;
use probe_block_core::gen::{labeled_graph, pair_count, plant, random_graph, GenSpec};
use probe_block_core::graph::{Graph, Vertex};
use probe_block_core::oracle::{brute_kprobe, pattern};
use probe_block_core::probe::{
    block_structures, find_nonprobes, recognize_2probe_block, recognize_2probe_complete,
    recognize_probe_block, solve_sides, verify_partitioned, Certificate, FindError, ProbePartition,
    RecognitionOutcome, Refutation, Target,
};
use probe_block_core::structure::{is_block_graph, KxyzFailure};
use proptest::prelude::*;

fn nonprobes(g: &Graph) -> ProbePartition {
    let bd = block_decomposition(g);
    let s = block_structures(g, &bd).expect("every block is a (K,X,Y,Z)-graph");
    find_nonprobes(g, &bd, &s).expect("no impossible branch")
}

/// Certificate checks shared by every test: the partition re-verifies, the
/// result is a block graph, and every added pair lies inside one set.
fn check_certificate(g: &Graph, cert: &Certificate<'_>) {
    let p = &cert.partition;
    let again = verify_partitioned(g, p.n1(), p.n2(), Target::Block).unwrap();
    assert_eq!(
        again.certificate().map(|c| &c.embedding.added),
        Some(&cert.embedding.added)
    );
    assert!(is_block_graph(&cert.embedding.result).is_ok());
    for &(u, v) in &cert.embedding.added {
        assert!(!g.has_edge(u, v));
        let inside = |s: &[Vertex]| s.contains(&u) && s.contains(&v);
        assert!(inside(p.n1()) || inside(p.n2()));
    }
    assert_eq!(
        cert.embedding.result.size(),
        g.size() + cert.embedding.added.len()
    );
}

fn two_diamonds() -> Graph {
    Graph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (4, 5),
            (4, 6),
        ],
    )
    .unwrap()
}

#[test]
fn find_nonprobes_examples() {
    let k5 = Graph::complete(5);
    assert_eq!(nonprobes(&k5), ProbePartition::default());
    assert_eq!(
        nonprobes(&Graph::cycle(4)),
        ProbePartition::new(vec![0, 2], vec![1, 3])
    );
    assert_eq!(
        nonprobes(&pattern("diamond").unwrap()),
        ProbePartition::new(vec![2, 3], vec![])
    );
    assert_eq!(
        nonprobes(&two_diamonds()),
        ProbePartition::new(vec![2, 3, 5, 6], vec![])
    );
    let g = two_diamonds();
    let out = brute_kprobe(&g, 1, Target::Block).unwrap();
    assert_eq!(out.certificate().unwrap().partition.n1(), &[2, 3, 5, 6]);
}

/// Cut vertex 2 is in Z of a diamond already placed in N2 (via 3, 4 and the
/// far diamond), then in Z of the block {2, 5, 6, 7, 8}, then universal in
/// the diamond {2, 9, 10, 11}. Sending the middle block's Z to N1 would put
/// 2 in both sets and make the last block look impossible.
#[test]
fn z_cut_vertex_keeps_its_side() {
    let g = Graph::from_edges(
        15,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 10),
            (2, 11),
            (3, 4),
            (4, 12),
            (4, 13),
            (5, 6),
            (5, 7),
            (6, 7),
            (6, 8),
            (7, 8),
            (9, 10),
            (10, 11),
            (12, 13),
            (12, 14),
            (13, 14),
        ],
    )
    .unwrap();
    let planted = verify_partitioned(&g, &[2, 3, 5, 8], &[4, 9, 11, 14], Target::Block).unwrap();
    assert!(planted.is_yes());
    let out = recognize_2probe_block(&g);
    check_certificate(&g, out.certificate().expect("2-probe block graph"));
    let p = &out.certificate().unwrap().partition;
    assert!(p.n1().iter().all(|v| !p.n2().contains(v)));
}

#[test]
fn recognizer_examples() {
    let c4 = Graph::cycle(4);
    let out = recognize_2probe_block(&c4);
    let cert = out.certificate().unwrap();
    assert_eq!(cert.embedding.added, vec![(0, 2), (1, 3)]);
    check_certificate(&c4, cert);

    let octa = pattern("octahedron").unwrap();
    assert!(matches!(
        recognize_2probe_block(&octa),
        RecognitionOutcome::No(Refutation::BadBlock { block: 0, .. })
    ));
    assert!(!recognize_2probe_block(&Graph::cycle(5)).is_yes());

    let diamond = pattern("diamond").unwrap();
    let out = recognize_probe_block(&diamond);
    assert_eq!(
        out.certificate().unwrap().partition,
        ProbePartition::new(vec![2, 3], vec![])
    );
    assert!(!recognize_probe_block(&c4).is_yes());
    assert!(!recognize_probe_block(&pattern("house").unwrap()).is_yes());

    let out = recognize_2probe_complete(&c4);
    assert_eq!(
        out.certificate().unwrap().partition,
        ProbePartition::new(vec![0, 2], vec![1, 3])
    );
    assert_eq!(
        out.certificate().unwrap().embedding.result,
        Graph::complete(4)
    );
    for name in ["P4", "2K2"] {
        assert!(matches!(
            recognize_2probe_complete(&pattern(name).unwrap()),
            RecognitionOutcome::No(Refutation::NotKxyz(_))
        ));
    }
    let k2 = Graph::complete(2);
    let out = verify_partitioned(&k2, &[0], &[], Target::Complete).unwrap();
    assert!(out.certificate().unwrap().embedding.added.is_empty());
}

#[test]
fn bad_block_reports_input_ids() {
    // a pendant edge 0-1, then a C5 on 1..=5: the C5 block fails with an odd cycle
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
    match recognize_2probe_block(&g) {
        RecognitionOutcome::No(Refutation::BadBlock {
            reason: KxyzFailure::OddCycle { edge },
            ..
        }) => {
            assert!(g.has_edge(edge.0, edge.1) && edge.0 >= 1);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn block_graphs_need_nothing() {
    for seed in 0..100 {
        let g = probe_block_core::gen::random_block_graph(&GenSpec::new(1 + seed as usize, seed));
        let out = recognize_2probe_block(&g);
        let cert = out.certificate().unwrap();
        assert!(cert.embedding.added.is_empty());
        assert!(cert.partition.n1().is_empty() && cert.partition.n2().is_empty());
    }
}

#[test]
fn exhaustive_agreement_with_brute_force() {
    for n in 0..=6usize {
        for mask in 0..1u64 << pair_count(n) {
            let g = labeled_graph(n, mask);
            let fast = recognize_2probe_block(&g);
            let slow = brute_kprobe(&g, 2, Target::Block).unwrap();
            assert_eq!(fast.is_yes(), slow.is_yes(), "n={n} mask={mask}");
            if let Some(cert) = fast.certificate() {
                check_certificate(&g, cert);
            }
            let fast1 = recognize_probe_block(&g);
            let slow1 = brute_kprobe(&g, 1, Target::Block).unwrap();
            assert_eq!(fast1.is_yes(), slow1.is_yes(), "1-probe n={n} mask={mask}");
            if let Some(cert) = fast1.certificate() {
                assert!(cert.partition.n2().is_empty());
                check_certificate(&g, cert);
            }
        }
    }
}

#[test]
fn side_solver_matches_brute_force() {
    for n in 0..=6usize {
        for mask in 0..1u64 << pair_count(n) {
            let g = labeled_graph(n, mask);
            let bd = block_decomposition(&g);
            let Ok(s) = block_structures(&g, &bd) else {
                continue;
            };
            let brute = brute_kprobe(&g, 2, Target::Block).unwrap().is_yes();
            match solve_sides(&g, &s) {
                Ok(p) => {
                    assert!(brute, "n={n} mask={mask}");
                    let out = verify_partitioned(&g, p.n1(), p.n2(), Target::Block).unwrap();
                    assert!(out.is_yes(), "n={n} mask={mask}");
                }
                Err(_) => assert!(!brute, "n={n} mask={mask}"),
            }
        }
    }
}

/// The case analysis puts the Z pair {13, 14} in N1 beside probe 6, then
/// has to put 0 in N1 too, leaving probe 1 between 0 in N1 and 2 in N2.
/// Block {1, 7, 8, 9} needs 1 in a set, so it stops; with 13, 14 in N2
/// everything fits.
#[test]
fn case_analysis_gap_is_covered() {
    let g = Graph::from_edges(
        22,
        [
            (0, 1),
            (0, 6),
            (0, 11),
            (0, 12),
            (1, 2),
            (1, 7),
            (1, 9),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 16),
            (6, 13),
            (6, 14),
            (6, 15),
            (7, 8),
            (7, 9),
            (8, 9),
            (10, 11),
            (10, 12),
            (11, 12),
            (11, 21),
            (13, 15),
            (13, 20),
            (14, 15),
            (16, 18),
            (16, 19),
            (17, 18),
            (17, 19),
            (18, 19),
        ],
    )
    .unwrap();
    let bd = block_decomposition(&g);
    let s = block_structures(&g, &bd).unwrap();
    assert!(matches!(
        find_nonprobes(&g, &bd, &s),
        Err(FindError::Impossible { .. })
    ));
    let planted = [0, 2, 3, 10];
    assert!(
        verify_partitioned(&g, &planted, &[1, 4, 5, 8, 13, 14, 16, 17], Target::Block)
            .unwrap()
            .is_yes()
    );
    let out = recognize_2probe_block(&g);
    check_certificate(&g, out.certificate().expect("2-probe block graph"));
}

/// Two non-adjacent vertices with two common neighbors are the degree-2
/// vertices of an induced C4 or diamond.
fn has_partner(g: &Graph, v: Vertex, set: &[Vertex]) -> bool {
    set.iter().any(|&w| {
        w != v
            && !g.has_edge(v, w)
            && g.neighbors(v)
                .iter()
                .filter(|a| g.neighbors(w).contains(a))
                .count()
                >= 2
    })
}

fn check_proof_invariants(g: &Graph, p: &ProbePartition) {
    for set in [p.n1(), p.n2()] {
        for &v in set {
            assert!(
                has_partner(g, v, set),
                "{v} has no C4/diamond partner in {set:?}"
            );
        }
    }
    for v in p.probes(g.order()) {
        for &x in g.neighbors(v).iter().filter(|x| p.n1().contains(x)) {
            for &y in g.neighbors(v).iter().filter(|y| p.n2().contains(y)) {
                assert!(
                    p.n2().contains(&x) || p.n1().contains(&y) || g.has_edge(x, y),
                    "probe {v}: {x}, {y}"
                );
            }
        }
    }
}

#[test]
fn proof_invariants_on_accepted_graphs() {
    let mut accepted = 0;
    for seed in 0..20_000u64 {
        let n = 4 + (seed % 6) as usize;
        let p = [0.3, 0.5, 0.7][(seed / 6 % 3) as usize];
        let g = random_graph(n, p, seed);
        if let RecognitionOutcome::Yes(cert) = recognize_2probe_block(&g) {
            check_proof_invariants(&g, &cert.partition);
            accepted += 1;
        }
    }
    for seed in 0..2_000u64 {
        let (g, _) = plant(
            2,
            &GenSpec {
                draft: 0.8,
                ..GenSpec::new(4 + (seed % 6) as usize, seed)
            },
        );
        let out = recognize_2probe_block(&g);
        check_proof_invariants(&g, &out.certificate().unwrap().partition);
        accepted += 1;
    }
    assert!(accepted > 2_500, "only {accepted} accepted graphs");
}

#[test]
fn planted_one_probe_instances_get_empty_n2() {
    for seed in 0..300u64 {
        let spec = GenSpec {
            draft: 0.6,
            ..GenSpec::new(2 + (seed % 200) as usize, seed)
        };
        let (g, _) = plant(1, &spec);
        let out = recognize_2probe_block(&g);
        let cert = out.certificate().unwrap();
        assert!(cert.partition.n2().is_empty(), "seed {seed}");
        // 1-probe consistency
        assert!(
            verify_partitioned(&g, cert.partition.n1(), &[], Target::Block)
                .unwrap()
                .is_yes()
        );
        assert!(recognize_probe_block(&g).is_yes());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn planted_two_probe_accepted(n in 1usize..400, seed in any::<u64>(), draft in 0.0f64..1.0, max in 2usize..7) {
        let spec = GenSpec { draft, max_clique: max, ..GenSpec::new(n, seed) };
        let (g, planted) = plant(2, &spec);
        prop_assert!(verify_partitioned(&g, planted.n1(), planted.n2(), Target::Block).unwrap().is_yes());
        let out = recognize_2probe_block(&g);
        let cert = out.certificate();
        prop_assert!(cert.is_some());
        check_certificate(&g, cert.unwrap());
    }

    #[test]
    fn certificates_always_reverify(n in 0usize..14, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        if let Some(cert) = recognize_2probe_block(&g).certificate() {
            check_certificate(&g, cert);
        }
        if let Some(cert) = recognize_2probe_complete(&g).certificate() {
            prop_assert_eq!(&cert.embedding.result, &Graph::complete(n));
        }
    }

    #[test]
    fn disjoint_union_is_componentwise(a in 0u64..1 << 10, b in 0u64..1 << 10) {
        let (g, h) = (labeled_graph(5, a), labeled_graph(5, b));
        let both = probe_block_core::graph::union(&g, &h);
        let expect = recognize_2probe_block(&g).is_yes() && recognize_2probe_block(&h).is_yes();
        prop_assert_eq!(recognize_2probe_block(&both).is_yes(), expect);
    }
}
