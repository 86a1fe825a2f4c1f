use std::collections::BTreeSet;

use proptest::prelude::*;

use skolem_windmills::assemble::{hexagon_merge, hexagon_pairs, triples_from_pairs, TripleForm};
use skolem_windmills::families::{label_c3c4, replay_trace};
use skolem_windmills::sequences::*;
use skolem_windmills::windmill::{edge_multiset, verify, Labelling, Vane};

fn table_sequence(n: u32) -> SkolemTypeSequence {
    gen_skolem_or_hooked(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairs_round_trip(n in 1u32..=120) {
        for seq in [table_sequence(n), gen_twofold_skolem(n).unwrap()] {
            prop_assert_eq!(pairs_of(&seq).unwrap().to_sequence(), seq);
        }
    }

    #[test]
    fn first_right_endpoint(n in 10u32..=200) {
        let first = pairs_of(&table_sequence(n)).unwrap().right_endpoints()[0];
        prop_assert_eq!(first, (n + 4) / 2);
    }

    #[test]
    fn doubled_sequences_are_two_fold(n in 1u32..=80) {
        prop_assume!(n % 4 <= 1);
        prop_assert!(double(&gen_hooked_skolem(n + 2).unwrap()).is_err());
        let d = double(&table_sequence(n)).unwrap();
        prop_assert!(validate_fragment(&d).ok);
        prop_assert_eq!(d.fold(), Some(2));
        prop_assert_eq!(d.len(), 2 * table_sequence(n).len());
    }

    #[test]
    fn shifted_triples(t in 1u32..=100, extra in prop::sample::select(vec![0u32, 7])) {
        let c = t + extra;
        let pairs = pairs_of(&table_sequence(t)).unwrap();
        let triples = triples_from_pairs(&pairs, c, TripleForm::SymbolFirst).unwrap();
        prop_assert_eq!(triples.len() as u32, t);
        let mut want: BTreeSet<u32> = (1..=t).collect();
        for i in 1..=t {
            let (a, b) = pairs.pair(i).unwrap();
            want.insert(a + c);
            want.insert(b + c);
        }
        let edges: Vec<u32> = triples.iter().flat_map(|v| v.edges().collect::<Vec<_>>()).collect();
        let distinct: BTreeSet<u32> = edges.iter().copied().collect();
        prop_assert_eq!(distinct.len(), edges.len());
        prop_assert_eq!(distinct, want);
        let labels: Vec<u32> = triples.iter().flat_map(|v| v.labels()[1..].to_vec()).collect();
        prop_assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), labels.len());
    }

    #[test]
    fn verify_ignores_vane_order_and_direction(t in 1u32..=40, s in 0u32..=40, seed in any::<u64>()) {
        let (l, _) = label_c3c4(t, s).unwrap();
        let mut vanes: Vec<Vane> = l.vanes().to_vec();
        let mut x = seed;
        for i in (1..vanes.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            vanes.swap(i, (x >> 33) as usize % (i + 1));
        }
        let vanes: Vec<Vane> = vanes.into_iter().enumerate().map(|(i, v)| if i % 2 == 0 { v.reversed() } else { v }).collect();
        let moved = Labelling::new(l.spec().clone(), l.mode(), vanes).unwrap();
        prop_assert!(verify(&moved).ok);
        prop_assert_eq!(edge_multiset(&moved), edge_multiset(&l));
    }

    #[test]
    fn composites_cover_the_edge_range(t in 1u32..=60, s in 0u32..=60) {
        let (l, trace) = label_c3c4(t, s).unwrap();
        prop_assert!(replay_trace(&trace).is_ok());
        let m = 3 * t + 4 * s;
        let mut want: Vec<u32> = (1..=m).collect();
        if t % 4 >= 2 {
            *want.last_mut().unwrap() = m + 1;
        }
        prop_assert_eq!(edge_multiset(&l), want);
    }

    #[test]
    fn hexagon_merges_keep_edges(n in 5u32..=60, take in 1usize..=20) {
        let tri = triples_from_pairs(&pairs_of(&table_sequence(n)).unwrap(), n, TripleForm::SymbolFirst).unwrap();
        let before: BTreeSet<u32> = tri.iter().flat_map(|v| v.edges().collect::<Vec<_>>()).collect();
        let mut vanes = tri;
        let mut hexes = Vec::new();
        for &p in hexagon_pairs(n).unwrap().iter().take(take) {
            let (rest, hex) = hexagon_merge(&vanes, p, n).unwrap();
            prop_assert_eq!(hex.cycle(), 6);
            vanes = rest;
            hexes.push(hex);
        }
        vanes.extend(hexes);
        let after: Vec<u32> = vanes.iter().flat_map(|v| v.edges().collect::<Vec<_>>()).collect();
        prop_assert_eq!(after.len(), before.len());
        prop_assert_eq!(after.into_iter().collect::<BTreeSet<_>>(), before);
    }
}
