use std::collections::HashSet;
use std::sync::OnceLock;

use diamon::families::{self, build_graph, GraphKind};
use diamon::{Diagram, Family};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Every family at n ≤ 4, except the partition monoid which stops at 3.
fn pool() -> &'static Vec<(Family, Vec<Diagram>)> {
    static POOL: OnceLock<Vec<(Family, Vec<Diagram>)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for f in Family::ALL {
            let top = if f == Family::Partition { 3 } else { 4 };
            for n in 0..=top {
                out.push((f, families::enumerate(f, n).unwrap()));
            }
        }
        out
    })
}

fn triple() -> impl Strategy<Value = (Family, Diagram, Diagram, Diagram)> {
    (0..pool().len(), any::<[prop::sample::Index; 3]>()).prop_map(|(i, [a, b, c])| {
        let (f, ds) = &pool()[i];
        (*f, a.get(ds).clone(), b.get(ds).clone(), c.get(ds).clone())
    })
}

fn mul(a: &Diagram, b: &Diagram) -> Diagram {
    a.compose_counting(b).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn composition_is_associative((_, a, b, c) in triple()) {
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
    }

    #[test]
    fn families_are_closed((f, a, b, _) in triple()) {
        prop_assert!(mul(&a, &b).is_member(f));
    }

    #[test]
    fn star_is_an_involutive_antihomomorphism((_, a, b, _) in triple()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(mul(&a, &b).star(), mul(&b.star(), &a.star()));
    }

    #[test]
    fn width_is_submultiplicative((_, a, b, _) in triple()) {
        prop_assert!(mul(&a, &b).width() <= a.width().min(b.width()));
    }

    #[test]
    fn serialization_round_trips((_, a, _, _) in triple()) {
        prop_assert_eq!(a.to_string().parse::<Diagram>().unwrap(), a);
    }
}

#[test]
fn associativity_exhaustive_on_tl4() {
    let ds = families::enumerate(Family::TemperleyLieb, 4).unwrap();
    for a in &ds {
        for b in &ds {
            let ab = mul(a, b);
            for c in &ds {
                assert_eq!(mul(&ab, c), mul(a, &mul(b, c)));
            }
        }
    }
}

#[test]
fn factorization_round_trips_up_to_five() {
    for f in Family::ALL {
        let top = if f == Family::Partition { 4 } else { 5 };
        for n in 0..=top {
            for d in families::enumerate(f, n).unwrap() {
                assert_eq!(d.factorize().reassemble(), d, "{f}_{n}");
            }
        }
    }
}

#[test]
fn enumeration_matches_closed_forms() {
    for f in Family::ALL {
        let top = if f == Family::Partition { 4 } else { 5 };
        for n in 0..=top {
            let got = families::enumerate(f, n).unwrap().len();
            assert_eq!(BigUint::from(got), families::cardinality(f, n), "{f}_{n}");
        }
    }
}

#[test]
fn generators_generate() {
    for f in Family::ALL {
        let top = if f == Family::Partition { 3 } else { 5 };
        for n in 1..=top {
            let gens = families::generators(f, n).unwrap();
            let closed: HashSet<Diagram> = families::closure(n, &gens).into_iter().collect();
            let all: HashSet<Diagram> = families::enumerate(f, n).unwrap().into_iter().collect();
            assert_eq!(closed, all, "{f}_{n}");
        }
    }
}

#[test]
fn rook_brauer_literature_count_is_off() {
    let enumerated = families::enumerate(Family::RookBrauer, 3).unwrap().len();
    assert_eq!(BigUint::from(enumerated), families::rook_brauer_count(3));
    assert_ne!(families::rook_brauer_count_literature(3), families::rook_brauer_count(3));
}

#[test]
fn graph_relations() {
    for m in 0..=4 {
        for n in 0..=7 {
            let halves = families::half_diagrams(m, n);
            assert_eq!(!halves.is_empty(), m <= n && (m + n) % 2 == 0, "({m},{n})");
            for a in &halves {
                for b in &halves {
                    if families::is_vertical(a, b) {
                        assert!(families::is_weakly_vertical(a, b));
                    }
                    assert_eq!(families::is_flip_pair(a, b), families::is_flip_pair(b, a));
                }
            }
        }
    }
}

#[test]
fn flip_graphs() {
    for n in (3..=9).step_by(2) {
        assert!(build_graph(GraphKind::Flip, 3, n).is_connected());
        assert!(build_graph(GraphKind::WeaklyVertical, 3, n).is_connected());
    }
    assert!(!build_graph(GraphKind::Flip, 2, 6).is_connected());
    // loop-free gluing already splits Γ(1,5)
    assert_eq!(build_graph(GraphKind::Vertical, 1, 5).components(), 2);
}
