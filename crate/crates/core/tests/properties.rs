use proptest::prelude::*;

use esakia_core::algebra::{heyting_complete, upset_algebra};
use esakia_core::constructions::{
    check_lifted_open, climb, downset_open_check, extract_subcover, root_topology_check, separation_witness,
    StagedTopology,
};
use esakia_core::duality::{double_dual_heyting, double_dual_lattice, double_dual_poset, godel_iff_root_system};
use esakia_core::random::{random_poset, random_root_system, random_tree};
use esakia_core::topology::generate_base;
use esakia_core::{FinitePoset, PointSet};

fn poset() -> impl Strategy<Value = FinitePoset> {
    (any::<u64>(), 1usize..=7, 0.0f64..1.0).prop_map(|(s, n, d)| random_poset(s, n, d))
}

fn tree(max: usize) -> impl Strategy<Value = FinitePoset> {
    (any::<u64>(), 1usize..=max).prop_map(|(s, n)| random_tree(s, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covers_round_trip(p in poset()) {
        let q = FinitePoset::from_covers(p.len(), p.covers()).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(p.order_dual().order_dual(), p);
    }

    #[test]
    fn upsets_and_downsets_are_complementary(p in poset(), bits in any::<u128>()) {
        let s = PointSet::from_bits(bits) & p.carrier();
        let up = p.upset(s);
        prop_assert!(p.is_upset(up));
        prop_assert!(p.is_downset(up.complement_in(p.carrier())));
        prop_assert!(s.is_subset(up) && s.is_subset(p.downset(s)));
    }

    #[test]
    fn generated_topology_is_closed_under_operations(
        n in 1usize..=6,
        raw in prop::collection::vec(any::<u128>(), 0..6),
    ) {
        let carrier = PointSet::full(n);
        let subbase: Vec<_> = raw.iter().map(|&b| PointSet::from_bits(b) & carrier).collect();
        let t = generate_base(&subbase, n).unwrap();
        for &s in &subbase {
            prop_assert!(t.is_open(s));
        }
        let opens = t.open_sets(1 << n).unwrap();
        for &a in &opens {
            for &b in &opens {
                prop_assert!(t.is_open(a | b) && t.is_open(a & b));
            }
        }
        for x in 0..n {
            let nb = t.neighbourhood(x);
            prop_assert!(nb.contains(x) && t.is_open(nb));
            prop_assert!(opens.iter().filter(|o| o.contains(x)).all(|o| nb.is_subset(*o)));
        }
    }

    #[test]
    fn upset_algebra_is_heyting_and_dualises(p in poset()) {
        let a = upset_algebra(&p).unwrap();
        let h = heyting_complete(a.algebra.lattice()).unwrap();
        prop_assert_eq!(h.implies_table(), a.algebra.implies_table());
        prop_assert!(double_dual_poset(&p).is_ok());
        prop_assert!(double_dual_lattice(a.algebra.lattice()).is_ok());
        prop_assert!(double_dual_heyting(&a.algebra).is_ok());
    }

    #[test]
    fn horn_correspondence(p in poset()) {
        prop_assert_eq!(godel_iff_root_system(&p).unwrap(), p.is_root_system());
    }

    #[test]
    fn root_systems_get_discrete_esakia_topologies(s in any::<u64>(), n in 1usize..=7) {
        let p = random_root_system(s, n);
        let r = root_topology_check(&p).unwrap();
        prop_assert!(r.holds());
    }

    #[test]
    fn staged_topology_is_discrete_esakia(t in tree(7)) {
        let st = StagedTopology::build(&t).unwrap();
        let fin = st.final_topology();
        prop_assert!(fin.is_discrete());
        prop_assert!(fin.esakia_check(&t).unwrap().holds);
        prop_assert!(downset_open_check(&st).holds);
        for beta in 0..st.height() {
            let opens = st.level(beta).unwrap().topology.open_sets(1 << 12).unwrap();
            for alpha in beta + 1..=st.height() {
                for &u in &opens {
                    prop_assert!(check_lifted_open(&st, beta, alpha, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn climb_laws(t in tree(7)) {
        let st = StagedTopology::build(&t).unwrap();
        let h = st.heights();
        let climbs: Vec<_> = (0..t.len()).map(|x| climb(&st, x).unwrap()).collect();
        for c in &climbs {
            prop_assert_eq!(c.at(c.start), Some(c.origin));
            for alpha in c.start..=st.height() {
                let f = c.at(alpha).unwrap();
                let slice = h.up_to(alpha);
                prop_assert!(slice.contains(f) && (t.up_of(f) & slice) == PointSet::singleton(f));
                if alpha > c.start {
                    prop_assert!(!st.level(alpha).unwrap().s.contains(f));
                }
            }
        }
        // Monotone in the stage, and every point above x met on the way is
        // the climb's own value at its height.
        for c in &climbs {
            for alpha in c.start..=st.height() {
                let f = c.at(alpha).unwrap();
                for beta in alpha..=st.height() {
                    prop_assert!(t.leq(f, c.at(beta).unwrap()));
                }
                for y in t.down_of(f).iter().filter(|&y| h.of(y) >= c.start) {
                    prop_assert_eq!(c.at(h.of(y)), Some(y));
                }
            }
        }
    }

    #[test]
    fn separation_witnesses_are_clopen_upsets(t in tree(7)) {
        let st = StagedTopology::build(&t).unwrap();
        let fin = st.final_topology();
        for x in 0..t.len() {
            for y in 0..t.len() {
                if t.leq(x, y) {
                    continue;
                }
                let u = separation_witness(&st, x, y).unwrap();
                prop_assert!(u.contains(x) && !u.contains(y));
                prop_assert!(fin.is_clopen(u) && t.is_upset(u));
            }
        }
    }

    #[test]
    fn subcovers_cover(t in tree(5), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=6)) {
        let st = StagedTopology::build(&t).unwrap();
        let subbase = st.final_subbase();
        let mut cover: Vec<usize> = picks.iter().map(|i| i.index(subbase.len())).collect();
        // Make it a cover by appending the carrier when needed.
        let union = cover.iter().fold(PointSet::empty(), |acc, &i| acc | subbase[i]);
        if union != t.carrier() {
            cover.push(subbase.binary_search(&t.carrier()).unwrap());
        }
        let trace = extract_subcover(&st, &cover).unwrap();
        let got = trace.subcover.iter().fold(PointSet::empty(), |acc, &i| acc | subbase[i]);
        prop_assert_eq!(got, t.carrier());
        prop_assert!(trace.subcover.len() <= cover.len());
        prop_assert!(trace.steps() <= st.height() + 1);
    }
}
