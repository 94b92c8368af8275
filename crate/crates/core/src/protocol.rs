//! Key exchanges over finite monoids: commuting subsets and powers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinat::factorize;
use crate::diagram::{gens, Diagram};
use crate::error::{Error, Result};
use crate::monoid::{Cells, FiniteMonoid};

/// Anything the protocols can multiply.
pub trait Platform {
    type Elem: Clone + PartialEq;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn show(&self, a: &Self::Elem) -> String;
    fn describe(&self) -> String;

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn product(&self, xs: &[Self::Elem]) -> Self::Elem {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    fn commute(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

impl Platform for FiniteMonoid {
    type Elem = usize;

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteMonoid::mul(self, *a, *b)
    }

    fn one(&self) -> usize {
        self.unit()
    }

    fn show(&self, a: &usize) -> String {
        self.label(*a).to_string()
    }

    fn describe(&self) -> String {
        format!("table monoid of order {}", self.size())
    }
}

/// Diagrams on `n` strands under composition, loops discarded.
#[derive(Clone, Debug)]
pub struct DiagramPlatform {
    pub n: usize,
    pub name: String,
}

impl Platform for DiagramPlatform {
    type Elem = Diagram;

    fn mul(&self, a: &Diagram, b: &Diagram) -> Diagram {
        a.compose_counting(b).0
    }

    fn one(&self) -> Diagram {
        Diagram::identity(self.n)
    }

    fn show(&self, a: &Diagram) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub protocol: String,
    pub monoid: String,
    pub seed: u64,
    pub public: Vec<String>,
    /// what each party sends, Alice first
    pub messages: [String; 2],
    pub secret_alice: String,
    pub secret_bob: String,
    pub equal: bool,
}

/// Setup of the commuting-subsets exchange.
#[derive(Clone, Debug)]
pub struct SuSpec<E> {
    pub g: E,
    pub a_gens: Vec<E>,
    pub b_gens: Vec<E>,
    /// length of the random private words
    pub word_len: usize,
}

fn random_word<P: Platform>(p: &P, gens: &[P::Elem], len: usize, rng: &mut ChaCha8Rng) -> P::Elem {
    let mut acc = p.one();
    if gens.is_empty() {
        return acc;
    }
    for _ in 0..len {
        acc = p.mul(&acc, gens.choose(rng).unwrap());
    }
    acc
}

/// Alice sends `a g a′`, Bob sends `b g b′`; both arrive at `a b g b′ a′`.
pub fn run_su<P: Platform>(p: &P, spec: &SuSpec<P::Elem>, seed: u64) -> Result<Transcript> {
    for x in &spec.a_gens {
        for y in &spec.b_gens {
            if !p.commute(x, y) {
                return Err(Error::Invalid(format!("{} and {} do not commute", p.show(x), p.show(y))));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_word(p, &spec.a_gens, spec.word_len, &mut rng);
    let a2 = random_word(p, &spec.a_gens, spec.word_len, &mut rng);
    let b = random_word(p, &spec.b_gens, spec.word_len, &mut rng);
    let b2 = random_word(p, &spec.b_gens, spec.word_len, &mut rng);
    let to_bob = p.product(&[a.clone(), spec.g.clone(), a2.clone()]);
    let to_alice = p.product(&[b.clone(), spec.g.clone(), b2.clone()]);
    let alice = p.product(&[a, to_alice.clone(), a2]);
    let bob = p.product(&[b, to_bob.clone(), b2]);
    Ok(Transcript {
        protocol: "su".into(),
        monoid: p.describe(),
        seed,
        public: vec![p.show(&spec.g)],
        messages: [p.show(&to_bob), p.show(&to_alice)],
        secret_alice: p.show(&alice),
        secret_bob: p.show(&bob),
        equal: alice == bob,
    })
}

/// Alice sends `g^a h^a′`, Bob `g^b h^b′`; the secret is `g^{a+b} h^{a′+b′}`.
pub fn run_stickel<P: Platform>(p: &P, g: &P::Elem, h: &P::Elem, max_exp: u64, seed: u64) -> Result<Transcript> {
    if p.commute(g, h) {
        return Err(Error::Invalid("g and h commute; the exchange is degenerate".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = || rng.gen_range(0..=max_exp);
    let (a, a2, b, b2) = (e(), e(), e(), e());
    let to_bob = p.mul(&p.pow(g, a), &p.pow(h, a2));
    let to_alice = p.mul(&p.pow(g, b), &p.pow(h, b2));
    let alice = p.product(&[p.pow(g, a), to_alice.clone(), p.pow(h, a2)]);
    let bob = p.product(&[p.pow(g, b), to_bob.clone(), p.pow(h, b2)]);
    Ok(Transcript {
        protocol: "stickel".into(),
        monoid: p.describe(),
        seed,
        public: vec![p.show(g), p.show(h)],
        messages: [p.show(&to_bob), p.show(&to_alice)],
        secret_alice: p.show(&alice),
        secret_bob: p.show(&bob),
        equal: alice == bob,
    })
}

/// The strand-local generators at 1-based positions `idx`: cap-cups, plus
/// transpositions when `with_swaps`. Disjoint index sets at distance at
/// least 2 commute.
pub fn local_generators(n: usize, idx: &[usize], with_swaps: bool) -> Result<Vec<Diagram>> {
    let mut out = Vec::new();
    for &i in idx {
        if i == 0 || i >= n {
            return Err(Error::Invalid(format!("generator index {i} out of range for n={n}")));
        }
        out.push(gens::cap_cup(n, i));
        if with_swaps {
            out.push(gens::transposition(n, i));
        }
    }
    Ok(out)
}

/// Index, period and the idempotent H-cell reached by the powers of `a`.
#[derive(Clone, Debug, Serialize)]
pub struct DhReport {
    pub element: String,
    pub index: usize,
    pub period: usize,
    pub largest_prime_of_period: Option<u64>,
    pub h_order: usize,
    pub divides: bool,
}

pub fn dh_suitability(m: &FiniteMonoid, cells: &Cells, a: usize) -> DhReport {
    let (index, period) = m.index_period(a);
    let h = cells.power_h_class(m, a);
    let h_order = cells.h_members(h).len();
    DhReport {
        element: m.label(a).to_string(),
        index,
        period,
        largest_prime_of_period: factorize(period as u64).last().map(|&(p, _)| p),
        h_order,
        divides: h_order % period == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cyclic_monoid;

    #[test]
    fn su_on_tl() {
        let p = DiagramPlatform { n: 6, name: "TL_6".into() };
        let spec = SuSpec {
            g: gens::cap_cup(6, 3),
            a_gens: local_generators(6, &[1], false).unwrap(),
            b_gens: local_generators(6, &[4, 5], false).unwrap(),
            word_len: 6,
        };
        for seed in 0..10 {
            assert!(run_su(&p, &spec, seed).unwrap().equal);
        }
        let bad = SuSpec { b_gens: local_generators(6, &[2], false).unwrap(), ..spec };
        assert!(run_su(&p, &bad, 0).is_err());
    }

    #[test]
    fn su_degenerate() {
        let p = DiagramPlatform { n: 3, name: "TL_3".into() };
        let g = gens::cap_cup(3, 1);
        let spec = SuSpec { g: g.clone(), a_gens: vec![], b_gens: vec![], word_len: 4 };
        let t = run_su(&p, &spec, 1).unwrap();
        assert_eq!(t.secret_alice, g.to_string());
    }

    #[test]
    fn stickel_tl4() {
        let p = DiagramPlatform { n: 4, name: "TL_4".into() };
        let (g, h) = (gens::cap_cup(4, 1), gens::cap_cup(4, 2));
        for seed in 0..10 {
            assert!(run_stickel(&p, &g, &h, 256, seed).unwrap().equal);
        }
        assert!(run_stickel(&p, &g, &gens::cap_cup(4, 3), 8, 0).is_err());
        assert!(run_stickel(&p, &g, &h, 0, 3).unwrap().equal);
    }

    #[test]
    fn periods() {
        let m = cyclic_monoid(3, 2);
        let cells = Cells::compute(&m);
        let a = m.find_label("a^1").unwrap();
        let r = dh_suitability(&m, &cells, a);
        assert_eq!((r.period, r.h_order), (2, 2));
        let r = dh_suitability(&m, &cells, m.unit());
        assert_eq!(r.period, 1);
    }
}
