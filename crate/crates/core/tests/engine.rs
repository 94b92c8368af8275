use diamon::combinat::factorial;
use diamon::families::{self, cyclic_monoid, transformation_monoid};
use diamon::linalg::FieldSpec;
use diamon::monoid::{self, ExtCase};
use diamon::protocol::dh_suitability;
use diamon::query;
use diamon::rep;
use diamon::{Cells, Family, FiniteMonoid};
use num_bigint::BigUint;

fn small_families() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        let top = match f {
            Family::Partition => 3,
            Family::RookBrauer | Family::PlanarPartition => 3,
            _ => 4,
        };
        out.extend((1..=top).map(|n| (f, n)));
    }
    out
}

#[test]
fn cells_are_widths() {
    for (f, n) in small_families() {
        let m = families::family_monoid(f, n).unwrap();
        let c = Cells::compute(&m);
        assert!(c.j_order_is_total(), "{f}_{n}");
        assert!(c.size_identity_holds(), "{f}_{n}");
        let ws = families::widths(f, n);
        assert_eq!(c.j_count(), ws.len(), "{f}_{n}");
        for k in ws {
            let j = query::j_of_width(&m, &c, k).unwrap();
            for &a in c.j_members(j) {
                assert_eq!(families::label_width(m.label(a)), Some(k));
            }
            let l = c.l_class[c.j_members(j)[0]];
            assert_eq!(BigUint::from(c.l_members(l).len()), rep::l_class_size(f, n, k), "{f}_{n} k={k}");
            let h = if f.is_planar() { BigUint::from(1u32) } else { factorial(k as u64) };
            assert_eq!(BigUint::from(c.h_size_in(j)), h, "{f}_{n} k={k}");
        }
    }
}

#[test]
fn upper_sets_are_ideals() {
    for (f, n) in [(Family::TemperleyLieb, 4), (Family::Brauer, 3), (Family::Motzkin, 3)] {
        let m = families::family_monoid(f, n).unwrap();
        let c = Cells::compute(&m);
        for j in 0..c.j_count() {
            let above = |a: usize| c.j_le(j, c.j_class[a]);
            for x in (0..m.size()).filter(|&x| above(x)) {
                for s in 0..m.size() {
                    assert!(above(m.mul(s, x)) && above(m.mul(x, s)));
                }
            }
        }
    }
}

#[test]
fn star_swaps_left_and_right() {
    for (f, n) in [(Family::TemperleyLieb, 4), (Family::Brauer, 4), (Family::PlanarRook, 3)] {
        let m = families::family_monoid(f, n).unwrap();
        let c = Cells::compute(&m);
        let star: Vec<usize> =
            (0..m.size()).map(|a| m.find_label(&m.label(a).parse::<diamon::Diagram>().unwrap().star().to_string()).unwrap()).collect();
        for a in 0..m.size() {
            for b in 0..m.size() {
                assert_eq!(c.l_class[a] == c.l_class[b], c.r_class[star[a]] == c.r_class[star[b]]);
            }
        }
    }
}

#[test]
fn periods_divide_h_cells() {
    let mut monoids: Vec<FiniteMonoid> =
        small_families().into_iter().map(|(f, n)| families::family_monoid(f, n).unwrap()).collect();
    monoids.push(transformation_monoid(3).unwrap());
    monoids.push(cyclic_monoid(4, 6));
    for m in &monoids {
        let c = Cells::compute(m);
        for a in 0..m.size() {
            let r = dh_suitability(m, &c, a);
            assert!(r.divides, "{}: {} has period {} and H order {}", m.size(), r.element, r.period, r.h_order);
        }
    }
}

#[test]
fn n_cycle_in_brauer() {
    let m = families::family_monoid(Family::Brauer, 4).unwrap();
    let c = Cells::compute(&m);
    let cycle = (1..4).fold(diamon::Diagram::identity(4), |acc, i| {
        acc.compose_counting(&diamon::diagram::gens::transposition(4, i)).0
    });
    let r = dh_suitability(&m, &c, m.find_label(&cycle.to_string()).unwrap());
    assert_eq!((r.period, r.h_order), (4, 24));
}

#[test]
fn trivial_extensions_vanish() {
    for p in [0, 2, 3, 5] {
        let field = FieldSpec::from_char(p).unwrap();
        let tl5 = families::family_monoid(Family::TemperleyLieb, 5).unwrap();
        let (_, _, trunc) = query::truncate_widths(Family::TemperleyLieb, 6, Some(4), None).unwrap();
        for m in [&tl5, &trunc.monoid] {
            assert_eq!(monoid::additive_hom_dim(m, field), 0, "char {p}");
            for case in ExtCase::ALL {
                assert_eq!(monoid::ext_dim(m, field, case), 0, "char {p} {}", case.name());
            }
        }
    }
}

#[test]
fn truncation_keeps_gram_ranks() {
    for n in 3..=6 {
        for low in (n % 2..n).step_by(2).filter(|&k| k > 0) {
            let (_, _, t) = query::truncate_widths(Family::TemperleyLieb, n, Some(low), None).unwrap();
            let c = Cells::compute(&t.monoid);
            for k in (n % 2..=low).step_by(2) {
                let j = query::j_of_width(&t.monoid, &c, k).unwrap();
                for p in [0, 2, 3] {
                    let field = FieldSpec::from_char(p).unwrap();
                    let inside = diamon::linalg::rank_int(&rep::monoid_gram(&t.monoid, &c, j).unwrap(), field);
                    let ambient = rep::gram_rank_dim(Family::TemperleyLieb, n, k, field).unwrap();
                    assert_eq!(inside, ambient, "n={n} low={low} k={k} char {p}");
                }
            }
        }
    }
}

#[test]
fn engine_gap_agrees_with_formula() {
    let tl3 = families::family_monoid(Family::TemperleyLieb, 3).unwrap();
    assert_eq!(rep::gap_from_engine(&tl3, FieldSpec::from_char(0).unwrap()).unwrap().ceil(), Some(2.into()));
    for n in 5..=7 {
        let m = families::family_monoid(Family::TemperleyLieb, n).unwrap();
        for p in [0, 2, 3] {
            let field = FieldSpec::from_char(p).unwrap();
            let engine = rep::gap_from_engine(&m, field).unwrap();
            let formula = rep::gap_tl(n, n, p).unwrap();
            assert_eq!(engine.value, formula.value, "TL_{n} char {p}");
        }
    }
}

#[test]
fn simple_counts() {
    let t3 = transformation_monoid(3).unwrap();
    let c = Cells::compute(&t3);
    let mut counts: Vec<usize> = rep::count_simples(&t3, &c, 0).unwrap().into_iter().map(|(_, k)| k).collect();
    counts.sort_unstable();
    assert_eq!(counts, vec![1, 2, 3]);
    assert_eq!(monoid::cl(&t3, &c), 6);
    let mut mod2: Vec<usize> = rep::count_simples(&t3, &c, 2).unwrap().into_iter().map(|(_, k)| k).collect();
    mod2.sort_unstable();
    assert_eq!(mod2, vec![1, 1, 2]);
    assert_eq!(rep::count_simples_family(Family::Brauer, 6, 4, 0).unwrap(), 5);
    assert_eq!(rep::count_simples_family(Family::Brauer, 6, 4, 2).unwrap(), 2);
}
