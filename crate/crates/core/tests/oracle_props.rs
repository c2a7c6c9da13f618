use perrin_cordial::labeling::{is_cordial, is_valid, tally_labeling};
use perrin_cordial::oracle::{decide_exhaustive, SearchConfig};
use perrin_cordial::{Family, FamilySpec, Graph, Role};
use proptest::prelude::*;

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges, vec![Role::Generic; n]).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| random_graph(n, &bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdict_survives_relabeling(g in graph_strategy(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a small LCG
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap();
        let cfg = SearchConfig::default();
        let a = decide_exhaustive(&g, &cfg).unwrap();
        let b = decide_exhaustive(&h, &cfg).unwrap();
        prop_assert_eq!(a.is_feasible(), b.is_feasible());
        for (graph, v) in [(&g, &a), (&h, &b)] {
            if let Some(w) = v.witness() {
                prop_assert!(is_valid(graph, w));
                prop_assert!(is_cordial(&tally_labeling(graph, w).unwrap()));
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree(g in graph_strategy()) {
        let seq = decide_exhaustive(&g, &SearchConfig::default()).unwrap();
        let par = decide_exhaustive(&g, &SearchConfig { parallel: true, ..Default::default() }).unwrap();
        prop_assert_eq!(seq, par);
    }
}

#[test]
fn mod_four_members_are_infeasible_within_cap() {
    let cfg = SearchConfig::default();
    for fam in [Family::TriangularSnake, Family::Friendship] {
        for n in [2, 6, 10] {
            let spec = fam.spec(&[n]).unwrap();
            let v = decide_exhaustive(&spec.generate().unwrap(), &cfg).unwrap();
            assert!(!v.is_feasible(), "{spec}");
        }
    }
    assert!(
        decide_exhaustive(&FamilySpec::Cycle(22).generate().unwrap(), &cfg)
            .map(|v| !v.is_feasible())
            .unwrap()
    );
}
