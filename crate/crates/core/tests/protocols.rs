use diamon::diagram::gens;
use diamon::protocol::{self, DiagramPlatform, SuSpec};
use diamon::query;
use diamon::Family;

#[test]
fn su_on_brauer_six() {
    for seed in 0..100 {
        let t = query::su_exchange(Family::Brauer, 6, None, None, 6, seed).unwrap();
        assert!(t.equal, "seed {seed}");
    }
}

#[test]
fn su_on_truncated_tl() {
    for seed in 0..100 {
        let t = query::su_exchange(Family::TemperleyLieb, 10, Some(4), Some((vec![1, 2], vec![7, 8, 9])), 8, seed).unwrap();
        assert!(t.equal && t.monoid == "tl_10,>=4", "seed {seed}");
    }
}

#[test]
fn trivial_subsets_return_the_public_element() {
    let p = DiagramPlatform { n: 5, name: "Br_5".into() };
    let g = gens::transposition(5, 2);
    let t = protocol::run_su(&p, &SuSpec { g: g.clone(), a_gens: vec![], b_gens: vec![], word_len: 3 }, 9).unwrap();
    assert_eq!(t.secret_bob, g.to_string());
}

#[test]
fn stickel_runs() {
    for seed in 0..50 {
        assert!(query::stickel_exchange(Family::Brauer, 5, None, 1 << 20, seed).unwrap().equal);
        assert!(query::stickel_exchange(Family::Motzkin, 4, Some(2), 300, seed).unwrap().equal);
    }
    let p = DiagramPlatform { n: 4, name: "TL_4".into() };
    assert!(protocol::run_stickel(&p, &gens::cap_cup(4, 1), &gens::cap_cup(4, 3), 10, 0).is_err());
}

#[test]
fn transcripts_are_reproducible() {
    let a = query::su_exchange(Family::TemperleyLieb, 8, Some(2), None, 10, 42).unwrap();
    let b = query::su_exchange(Family::TemperleyLieb, 8, Some(2), None, 10, 42).unwrap();
    assert_eq!(a.messages, b.messages);
    assert_eq!(a.secret_alice, b.secret_alice);
}
