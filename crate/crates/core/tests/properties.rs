mod common;

use common::*;
use proptest::prelude::*;

use signed_graph::equivalence::{classify, is_balanced, switching_equivalent, Balance, Equivalence};
use signed_graph::girth::{girth_profile, layered_walk_girth, walk_girth};
use signed_graph::hom::{
    compute_core, dsg, edc_invariance_check, find_hom, find_hom_with, is_core, verify_hom, CoreVerdict, HomSearch,
    Homomorphism, SearchOptions,
};
use signed_graph::packing::{disjoint_switch, negative_set, pack_signatures, DisjointSwitch};
use signed_graph::{SignedGraph, SwitchSet, WalkType};

fn signed_graph(max_n: usize, max_m: usize, loops: bool) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n, any::<bool>()), 0..=max_m).prop_map(move |edges| {
            let edges = edges
                .into_iter()
                .filter(|&(u, v, _)| loops || u != v)
                .map(|(u, v, neg)| (u, v, if neg { N } else { P }));
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

fn with_switch(max_n: usize, max_m: usize, loops: bool) -> impl Strategy<Value = (SignedGraph, SwitchSet)> {
    signed_graph(max_n, max_m, loops).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n).prop_map(|m| SwitchSet::from_mask(&m)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_is_an_involution((g, x) in with_switch(7, 12, true)) {
        let s = g.switch(&x).unwrap();
        prop_assert_eq!(s.switch(&x).unwrap(), g.clone());
        let c = g.switch(&x.complement(g.n())).unwrap();
        prop_assert_eq!(c.signs(), s.signs());
    }

    #[test]
    fn switching_preserves_invariants((g, x) in with_switch(7, 12, true)) {
        let s = g.switch(&x).unwrap();
        prop_assert_eq!(girth_profile(&g).values(), girth_profile(&s).values());
        prop_assert_eq!(classify(&g), classify(&s));
    }

    #[test]
    fn equivalence_certificates_check_out((g, x) in with_switch(7, 12, true)) {
        let s = g.switch(&x).unwrap();
        match switching_equivalent(&g, &s).unwrap() {
            Equivalence::Yes(y) => prop_assert_eq!(g.switch(&y).unwrap().signs(), s.signs()),
            Equivalence::No(c) => prop_assert!(false, "switched copy reported inequivalent via {}", c),
        }
    }

    #[test]
    fn equivalence_matches_brute_force(a in signed_graph(5, 7, true), flips in proptest::collection::vec(any::<bool>(), 7)) {
        let signs: Vec<_> = a.signs().iter().zip(&flips).map(|(&s, &f)| if f { -s } else { s }).collect();
        let b = a.with_signs(&signs).unwrap();
        match switching_equivalent(&a, &b).unwrap() {
            Equivalence::Yes(_) => prop_assert!(brute_equivalent(&a, &b)),
            Equivalence::No(c) => {
                prop_assert!(!brute_equivalent(&a, &b));
                prop_assert_ne!(a.sign_of_walk(&c).unwrap(), b.sign_of_walk(&c).unwrap());
            }
        }
    }

    #[test]
    fn balance_certificates_check_out(g in signed_graph(7, 12, true)) {
        match is_balanced(&g) {
            Balance::Yes(x) => prop_assert!(g.switch(&x).unwrap().negative_edges().is_empty()),
            Balance::No(c) => {
                g.validate_walk(&c).unwrap();
                prop_assert!(c.is_cycle());
                prop_assert!(g.sign_of_walk(&c).unwrap().is_negative());
            }
        }
    }

    #[test]
    fn girth_matches_transfer_oracle(g in signed_graph(6, 9, true)) {
        let brute = brute_girths(&g, 4 * g.n());
        for t in WalkType::ALL {
            let w = walk_girth(&g, t);
            prop_assert_eq!(w.value.finite(), brute[t.index()], "type {}", t);
            if let Some(walk) = w.witness {
                g.validate_walk(&walk).unwrap();
                prop_assert_eq!(g.walk_type(&walk).unwrap(), t);
                prop_assert_eq!(Some(walk.len()), w.value.finite());
            }
        }
    }

    #[test]
    fn layered_rules_never_undercut(g in signed_graph(6, 9, true)) {
        for t in WalkType::NONZERO {
            prop_assert!(layered_walk_girth(&g, t) >= walk_girth(&g, t).value);
        }
    }

    #[test]
    fn found_homomorphisms_verify(a in signed_graph(5, 7, true), b in signed_graph(4, 6, true)) {
        let opts = SearchOptions::default().with_budget(200_000);
        if let HomSearch::Found(h) = find_hom_with(&a, &b, opts) {
            let v = verify_hom(&a, &b, &h).unwrap();
            prop_assert!(v.is_yes(), "{:?}", v);
            prop_assert!(v.criteria_agree());
        }
    }

    #[test]
    fn homomorphisms_compose(a in signed_graph(4, 6, false), b in signed_graph(4, 6, false), c in signed_graph(3, 5, true)) {
        let opts = SearchOptions::default().with_budget(100_000);
        if let (HomSearch::Found(f), HomSearch::Found(h)) = (find_hom_with(&a, &b, opts), find_hom_with(&b, &c, opts)) {
            let fh = f.compose(&h);
            prop_assert!(verify_hom(&a, &c, &fh).unwrap().is_yes());
        }
    }

    #[test]
    fn switched_copy_is_a_homomorphic_image((g, x) in with_switch(6, 9, true)) {
        let s = g.switch(&x).unwrap();
        let h = Homomorphism { switch: x, vertex_map: (0..g.n()).collect(), edge_map: (0..g.m()).collect() };
        prop_assert!(verify_hom(&g, &s, &h).unwrap().is_yes());
        prop_assert!(find_hom(&g, &s).is_found());
    }

    #[test]
    fn dsg_turns_switching_into_colour(a in signed_graph(4, 6, true), b in signed_graph(3, 5, true)) {
        let budget = SearchOptions::default().with_budget(200_000);
        let direct = find_hom_with(&a, &b, budget);
        let (d, _) = dsg(&b);
        let coloured = find_hom_with(&a, &d, SearchOptions { switching: false, ..budget });
        if let (Some(x), Some(y)) = (direct.decided(), coloured.decided()) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn edc_is_switching_invariant((g, x) in with_switch(6, 9, true)) {
        prop_assert!(edc_invariance_check(&g, &x).unwrap());
    }

    #[test]
    fn core_is_a_retract(g in signed_graph(5, 7, true)) {
        let opts = SearchOptions::default().with_budget(200_000);
        let core = compute_core(&g, opts).unwrap();
        prop_assert!(verify_hom(&g, &core.core, &core.retraction).unwrap().is_yes());
        prop_assert!(find_hom_with(&core.core, &g, opts).is_found());
        prop_assert_eq!(is_core(&core.core, opts), CoreVerdict::Core);
    }

    #[test]
    fn packings_are_valid(g in signed_graph(6, 8, true)) {
        let p = pack_signatures(&g, 1_000_000).unwrap();
        prop_assert!(p.is_valid(&g));
        for (x, s) in p.switches.iter().zip(&p.negative_sets) {
            prop_assert_eq!(&negative_set(&g, x), s);
        }
    }

    #[test]
    fn disjoint_switch_matches_brute_force(g in signed_graph(7, 10, true)) {
        let own = negative_set(&g, &SwitchSet::empty());
        let brute = all_switches(g.n()).any(|x| negative_set(&g, &x).is_disjoint(&own));
        match disjoint_switch(&g) {
            DisjointSwitch::Yes(x) => {
                prop_assert!(brute);
                prop_assert!(negative_set(&g, &x).is_disjoint(&own));
            }
            DisjointSwitch::No(c) => {
                prop_assert!(!brute);
                g.validate_walk(&c).unwrap();
                prop_assert!(c.len() % 2 == 1 && c.is_closed());
                prop_assert!(c.edges().iter().all(|&e| g.sign(e).is_negative()));
            }
        }
    }
}
