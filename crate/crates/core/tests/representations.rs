use diamon::acceptance::tables;
use diamon::combinat::catalan;
use diamon::families;
use diamon::linalg::{rank_int, FieldSpec, IntMatrix, Matrix};
use diamon::rep::{self, Representation};
use diamon::{Cells, Family, Fp, RationalMatrix};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(-4i64..=4, r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j]))
    })
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in int_matrix()) {
        for p in [0, 2, 3, 5] {
            let f = FieldSpec::from_char(p).unwrap();
            prop_assert_eq!(rank_int(&m, f), rank_int(&m.transpose(), f));
        }
    }

    #[test]
    fn rank_ignores_row_and_column_order(m in int_matrix(), seed in any::<u64>()) {
        let rows: Vec<usize> = (0..m.rows()).map(|i| (i + seed as usize) % m.rows()).collect();
        let cols: Vec<usize> = (0..m.cols()).rev().collect();
        let f = FieldSpec::from_char(0).unwrap();
        prop_assert_eq!(rank_int(&m, f), rank_int(&m.submatrix(&rows, &cols), f));
    }

    #[test]
    fn reduction_never_raises_rank(m in int_matrix()) {
        let q = rank_int(&m, FieldSpec::from_char(0).unwrap());
        for p in [2, 3, 5, 7] {
            prop_assert!(rank_int(&m, FieldSpec::from_char(p).unwrap()) <= q);
        }
    }

    #[test]
    fn submatrix_rank_is_smaller(m in int_matrix(), keep in any::<u8>()) {
        let rows: Vec<usize> = (0..m.rows()).filter(|i| keep >> (i % 8) & 1 == 1).collect();
        let cols: Vec<usize> = (0..m.cols()).filter(|j| keep >> ((j + 3) % 8) & 1 == 1).collect();
        let f = FieldSpec::from_char(3).unwrap();
        prop_assert!(rank_int(&m.submatrix(&rows, &cols), f) <= rank_int(&m, f));
    }

    #[test]
    fn rational_and_modular_scalars_agree_on_large_primes(m in int_matrix()) {
        let q = RationalMatrix::from_int(&m, ()).rank();
        let p = Matrix::<Fp>::from_int(&m, 1_000_000_007).rank();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn adic_digits_reassemble(x in 0u64..100_000, p in prop::sample::select(vec![0u64, 2, 3, 5, 7])) {
        prop_assert_eq!(rep::adic(x, p).reassemble(), x);
    }

    #[test]
    fn simple_dims_are_bounded_by_ssdims(n in 0u64..40, k in 0u64..40, p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        prop_assume!(k <= n && (n - k) % 2 == 0);
        let d = rep::simple_dim_tl(n, k, p).unwrap();
        let s = rep::ssdim(Family::TemperleyLieb, n as usize, k as usize).unwrap();
        prop_assert!(d >= BigUint::from(1u32) && d <= s);
    }
}

#[test]
fn e_coefficients_match_the_table() {
    for n in 0..=16u64 {
        for k in 0..=16u64 {
            let expected = tables::E_CHAR0.iter().find(|&&(a, b, _)| (a, b) == (n, k)).map_or(0, |e| e.2);
            assert_eq!(rep::e_coefficient(n, k, 0), expected, "e({n},{k})");
        }
    }
}

#[test]
fn gram_ranks_over_f5() {
    let f5 = FieldSpec::from_char(5).unwrap();
    for n in 0..=10 {
        for k in (n % 2..=n).step_by(2) {
            let rank = rep::gram_rank_dim(Family::TemperleyLieb, n, k, f5).unwrap();
            assert_eq!(BigUint::from(rank), rep::simple_dim_tl(n as u64, k as u64, 5).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn ssdim_is_l_over_h() {
    for n in 0..=8 {
        let m = families::family_monoid(Family::TemperleyLieb, n).unwrap();
        let c = Cells::compute(&m);
        for k in (n % 2..=n).step_by(2) {
            let j = diamon::query::j_of_width(&m, &c, k).unwrap();
            let l = c.l_class[c.j_members(j)[0]];
            let expect = c.l_members(l).len() / c.h_size_in(j);
            assert_eq!(rep::ssdim(Family::TemperleyLieb, n, k).unwrap(), BigUint::from(expect));
        }
    }
}

#[test]
fn motzkin_ranks_dominate_tl() {
    for n in 1..=6 {
        for k in (n % 2..=n).step_by(2) {
            for p in [0, 2, 3] {
                let f = FieldSpec::from_char(p).unwrap();
                let mo = rep::gram_rank_dim(Family::Motzkin, n, k, f).unwrap();
                let tl = rep::gram_rank_dim(Family::TemperleyLieb, n, k, f).unwrap();
                assert!(mo >= tl, "n={n} k={k} char {p}: {mo} < {tl}");
            }
        }
    }
}

#[test]
fn rook_grams_are_permutations() {
    for n in 0..=5 {
        for k in 0..=n {
            let g = rep::gram_matrix(Family::PlanarRook, n, k).unwrap();
            assert!(RationalMatrix::from_int(&g, ()).is_permutation_matrix(), "pRo_{n} k={k}");
            let all = families::enumerate(Family::Rook, n).unwrap();
            let cell = rep::cell_data(Family::Rook, n, k, &all).unwrap();
            let pattern = rep::sandwich_pattern(&cell);
            assert!(RationalMatrix::from_int(&pattern, ()).is_permutation_matrix(), "Ro_{n} k={k}");
        }
    }
}

#[test]
fn bound_chain() {
    for n in 5..=14 {
        let gap = rep::gap_tl(n, n, 0).unwrap().value.unwrap();
        let ss = (n % 2..n).step_by(2).filter(|&k| k > 1).map(|k| rep::ssdim(Family::TemperleyLieb, n, k).unwrap()).min();
        let ss = BigRational::from_integer(BigInt::from(ss.unwrap()));
        let size = BigRational::from_integer(BigInt::from(catalan(n as u64)));
        assert!(gap <= ss && ss <= size, "n={n}");
    }
}

#[test]
fn cell_modules_are_representations() {
    let m = families::family_monoid(Family::TemperleyLieb, 4).unwrap();
    let c = Cells::compute(&m);
    for j in 0..c.j_count() {
        let l = c.l_class[c.j_members(j)[0]];
        let r: Representation<BigRational> = Representation::cell_module(&m, &c, l, ()).unwrap();
        assert_eq!(r.apex(&c).unwrap(), j);
        let r5: Representation<Fp> = Representation::cell_module(&m, &c, l, 5).unwrap();
        r5.check_hom(&m).unwrap();
    }
    let (b, t) = Representation::<BigRational>::trivial_reps(&m, ());
    assert!(b.direct_sum(&t).is_trivial_sum(&m));
    assert!(t.is_trivial_sum(&m) && b.is_trivial_sum(&m));
    assert!(rep::regular::<Fp>(&m, 2).unwrap().is_faithful());
}

#[test]
fn cyclic_values() {
    // Z/5 over F_2: 2 has order 4 mod 5
    assert_eq!(rep::cyclic_gap(5, 2).unwrap(), 4);
    assert_eq!(rep::cyclic_gap(5, 11).unwrap(), 1);
    assert_eq!(rep::cyclic_gap(6, 0).unwrap(), 1);
    assert_eq!(rep::cyclic_faith(12).unwrap(), 4);
    assert_eq!(rep::cyclic_faith(2).unwrap(), 1);
}
