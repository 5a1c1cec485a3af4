use accdom::graph::{enumerate_trees, random_tree, Graph, VertexSet};
use accdom::solver::{gamma, gamma_a, min_dominating_sets};
use accdom::tree::{
    find_witness_partition, is_corona_graph, support_respecting_gamma_set,
    tree_gamma_a_equals_gamma, WitnessMode,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Corona test by repeatedly matching a leaf with its support and deleting
/// both: a corona graph is exactly one whose leaves perfectly match the
/// non-leaves.
fn corona_oracle(g: &Graph) -> bool {
    let n = g.order();
    if n == 2 {
        return true;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut owner = vec![None; n];
    for &l in &leaves {
        let s = g.neighbors(l)[0];
        if g.degree(s) == 1 || owner[s].is_some() {
            return false;
        }
        owner[s] = Some(l);
    }
    (0..n).all(|v| g.degree(v) == 1 || owner[v].is_some())
}

fn kappa(t: &Graph, d: &VertexSet) -> usize {
    t.delete_vertices(d).unwrap().0.component_count()
}

#[test]
fn corona_recognition_matches_oracle_on_all_small_trees() {
    for n in 2..=8 {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(is_corona_graph(&t).unwrap(), corona_oracle(&t), "{t:?}");
        }
    }
}

#[test]
fn tree_characterization_on_all_small_trees() {
    for n in 2..=8 {
        for t in enumerate_trees(n).unwrap() {
            let eq = gamma(&t).unwrap().value == gamma_a(&t).unwrap().value;
            assert_eq!(tree_gamma_a_equals_gamma(&t).unwrap(), eq);
            let brute = find_witness_partition(&t, WitnessMode::BruteForce).unwrap();
            let built = find_witness_partition(&t, WitnessMode::Constructive).unwrap();
            assert_eq!(brute.is_some(), eq);
            assert_eq!(built.is_some(), eq);
        }
    }
}

#[test]
fn constructive_witness_on_all_trees_of_order_nine() {
    for t in enumerate_trees(9).unwrap().step_by(7) {
        if let Some(w) = find_witness_partition(&t, WitnessMode::Constructive).unwrap() {
            assert!(w.components_after_removal > w.dominating_set.len());
        } else {
            assert!(is_corona_graph(&t).unwrap());
        }
    }
}

#[test]
fn support_respecting_properties() {
    for n in 3..=8 {
        for t in enumerate_trees(n).unwrap() {
            let d = support_respecting_gamma_set(&t).unwrap();
            let (leaves, supports) = t.leaf_and_support_sets();
            assert_eq!(d.len(), gamma(&t).unwrap().value);
            assert!(supports.is_subset(&d));
            assert!(leaves.is_disjoint(&d));
            for v in d.iter().filter(|&v| !supports.contains(v)) {
                if t.neighbors(v).iter().any(|&u| d.contains(u)) {
                    assert!(t.private_neighborhood(v, &d).unwrap().len() >= 2);
                }
            }
        }
    }
}

#[test]
fn witness_meets_every_minimum_dominating_set() {
    for n in 2..=8 {
        for t in enumerate_trees(n).unwrap().step_by(3) {
            if let Some(w) = find_witness_partition(&t, WitnessMode::BruteForce).unwrap() {
                for other in min_dominating_sets(&t).unwrap() {
                    assert!(!other.is_disjoint(&w.dominating_set));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructive_random_trees(n in 2usize..=24, seed in any::<u64>()) {
        let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let corona = is_corona_graph(&t).unwrap();
        prop_assert_eq!(corona, corona_oracle(&t));
        match find_witness_partition(&t, WitnessMode::Constructive).unwrap() {
            Some(w) => {
                prop_assert!(!corona);
                prop_assert_eq!(w.dominating_set.len(), gamma(&t).unwrap().value);
                prop_assert_eq!(w.components_after_removal, kappa(&t, &w.dominating_set));
                prop_assert!(w.components_after_removal > w.dominating_set.len());
            }
            None => prop_assert!(corona),
        }
    }
}
