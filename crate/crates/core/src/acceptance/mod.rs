//! The acceptance suite, shared by the `acceptance` test target and the
//! `selftest` command. Each check returns a short detail line or the
//! reason it failed.

pub mod tables;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinat::{bell, binomial, catalan, divisors, double_factorial, euler_phi};
use crate::diagram::{Diagram, Family};
use crate::families::{self, build_graph, GraphKind};
use crate::linalg::{rank_int, FieldSpec};
use crate::monoid::{self, Cells, ExtCase, FiniteMonoid};
use crate::protocol::{self, DiagramPlatform, SuSpec};
use crate::rep;

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub budget: Duration,
    pub run: fn() -> Result<String, String>,
}

pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    /// A failure not listed in [`KNOWN_FAILURES`].
    pub fn unexpected(&self) -> bool {
        !self.passed && !KNOWN_FAILURES.contains(&self.id)
    }

    pub fn line(&self) -> String {
        let verdict = match (self.passed, KNOWN_FAILURES.contains(&self.id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        format!(
            "{verdict} [{:>2}] {:<28} {:>8.2}s / {:>4}s  {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Criteria that fail for a documented reason: the vertical-position graph
/// with loop-free gluing is disconnected from n = 5 on (checked by hand
/// for (1,5): `()()|` and `|()()` are adjacent only to each other).
pub const KNOWN_FAILURES: &[u32] = &[9];

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "cardinalities", budget: secs(60), run: cardinalities },
        Criterion { id: 2, name: "TL dimension tables", budget: secs(5), run: dimension_tables },
        Criterion { id: 3, name: "TL_24 tuples", budget: secs(5), run: tl24 },
        Criterion { id: 4, name: "Gram rank oracle", budget: secs(600), run: gram_oracle },
        Criterion { id: 5, name: "e-coefficient matrix", budget: secs(5), run: e_matrix },
        Criterion { id: 6, name: "planar rook semisimplicity", budget: secs(30), run: pro_semisimple },
        Criterion { id: 7, name: "cell structure", budget: secs(30), run: cell_conformance },
        Criterion { id: 8, name: "roundedness and characters", budget: secs(300), run: roundedness },
        Criterion { id: 9, name: "half-diagram graphs", budget: secs(60), run: graphs },
        Criterion { id: 10, name: "periods", budget: secs(60), run: periods },
        Criterion { id: 11, name: "cyclic formulas", budget: secs(10), run: cyclic },
        Criterion { id: 12, name: "key exchanges", budget: secs(30), run: protocols },
        Criterion { id: 13, name: "Burnside-Brauer bound", budget: secs(10), run: burnside_brauer },
        Criterion { id: 14, name: "asymptotic sanity", budget: secs(10), run: asymptotic },
    ]
}

/// Runs every criterion; a criterion over its time budget fails.
pub fn run_all() -> Vec<Outcome> {
    criteria().into_iter().map(run_one).collect()
}

pub fn run_one(c: Criterion) -> Outcome {
    let start = Instant::now();
    let result = (c.run)();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) if elapsed <= c.budget => (true, d),
        Ok(d) => (false, format!("{d}; over budget")),
        Err(e) => (false, e),
    };
    Outcome { id: c.id, name: c.name, passed, detail, elapsed, budget: c.budget }
}

fn count(f: Family, n: usize) -> Result<usize, String> {
    families::enumerate(f, n).map(|v| v.len()).map_err(|e| e.to_string())
}

fn cardinalities() -> Result<String, String> {
    let mut checked = 0;
    let mut cases: Vec<(Family, usize, BigUint)> = Vec::new();
    for n in 0..=12 {
        cases.push((Family::TemperleyLieb, n, catalan(n as u64)));
    }
    for n in 0..=6 {
        cases.push((Family::Brauer, n, double_factorial(2 * n as i64 - 1)));
    }
    for n in 0..=8 {
        cases.push((Family::PlanarRook, n, binomial(2 * n as u64, n as u64)));
    }
    for n in 0..=4 {
        cases.push((Family::Partition, n, bell(2 * n as u64)));
    }
    cases.push((Family::Rook, 3, BigUint::from(34u32)));
    for (f, n, expected) in cases {
        let got = count(f, n)?;
        ensure!(BigUint::from(got) == expected, "{f}_{n}: enumerated {got}, expected {expected}");
        ensure!(families::cardinality(f, n) == expected, "{f}_{n}: closed form disagrees");
        checked += 1;
    }
    Ok(format!("{checked} family sizes match"))
}

fn dimension_tables() -> Result<String, String> {
    for (p, table) in [(0, tables::DIMS_CHAR0), (2, tables::DIMS_CHAR2)] {
        let rows = rep::tl_dims_table(16, p).map_err(|e| e.to_string())?;
        ensure!(rows.len() == table.len(), "char {p}: {} rows, expected {}", rows.len(), table.len());
        for (row, &(n, k, v)) in rows.iter().zip(table) {
            ensure!(
                (row.n as u64, row.k as u64) == (n, k) && row.dim == v.to_string(),
                "char {p}: ({}, {}) = {}, expected ({n}, {k}) = {v}",
                row.n,
                row.k,
                row.dim
            );
        }
    }
    Ok("162 entries exact".into())
}

fn tl24() -> Result<String, String> {
    const DIMS: [u64; 13] = [1, 534888, 208011, 445741, 389367, 126292, 85216, 31878, 6876, 1726, 252, 22, 1];
    const SSDIMS: [u64; 13] =
        [208012, 534888, 653752, 572033, 389367, 211508, 92092, 31878, 8602, 1748, 252, 23, 1];
    for (i, k) in (0..=24).step_by(2).enumerate() {
        let d = rep::simple_dim_tl(24, k as u64, 0).map_err(|e| e.to_string())?;
        let s = rep::ssdim(Family::TemperleyLieb, 24, k).map_err(|e| e.to_string())?;
        ensure!(d == BigUint::from(DIMS[i]), "dim k={k}: {d}, expected {}", DIMS[i]);
        ensure!(s == BigUint::from(SSDIMS[i]), "ssdim k={k}: {s}, expected {}", SSDIMS[i]);
    }
    Ok("13 dims and 13 ssdims exact".into())
}

fn gram_oracle() -> Result<String, String> {
    let mut checks = 0;
    for n in 0..=10 {
        let all = families::enumerate(Family::TemperleyLieb, n).map_err(|e| e.to_string())?;
        for k in (n % 2..=n).step_by(2) {
            let cell = rep::cell_data(Family::TemperleyLieb, n, k, &all).map_err(|e| e.to_string())?;
            let gram = rep::sandwich_pattern(&cell);
            for p in [0u64, 2, 3] {
                let field = FieldSpec::from_char(p).unwrap();
                let rank = rank_int(&gram, field);
                let formula = rep::simple_dim_tl(n as u64, k as u64, p).map_err(|e| e.to_string())?;
                ensure!(
                    BigUint::from(rank) == formula,
                    "TL_{n}, k={k}, char {p}: rank {rank}, formula {formula}"
                );
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} ranks agree over Q, F2, F3"))
}

fn e_matrix() -> Result<String, String> {
    let expected: HashMap<(u64, u64), i8> = tables::E_CHAR0.iter().map(|&(n, k, v)| ((n, k), v)).collect();
    let mut entries = 0;
    for n in 0..=16u64 {
        for k in 0..=n {
            let want = expected.get(&(n, k)).copied().unwrap_or(0);
            let got = rep::e_coefficient(n, k, 0);
            ensure!(got == want, "e_({n},{k}) = {got}, expected {want}");
            entries += 1;
        }
    }
    Ok(format!("{entries} entries"))
}

fn pro_semisimple() -> Result<String, String> {
    let mut grams = 0;
    for n in 0..=5 {
        let all = families::enumerate(Family::PlanarRook, n).map_err(|e| e.to_string())?;
        for k in 0..=n {
            let cell = rep::cell_data(Family::PlanarRook, n, k, &all).map_err(|e| e.to_string())?;
            let g = crate::RationalMatrix::from_int(&rep::sandwich_pattern(&cell), ());
            ensure!(g.is_permutation_matrix(), "pRo_{n}, k={k}: not a permutation matrix");
            grams += 1;
        }
    }
    let g = rep::gram_matrix(Family::PlanarRook, 3, 1).map_err(|e| e.to_string())?;
    ensure!(g == crate::linalg::IntMatrix::from_fn(3, 3, |i, j| i64::from(i == j)), "pRo_3, k=1 is not the identity");
    Ok(format!("{grams} permutation matrices, pRo_3 J_1 = I"))
}

/// `(|J|, #L, #R, |H|)` per J-class, sorted.
fn cell_shapes(m: &FiniteMonoid) -> Vec<(usize, usize, usize, usize)> {
    let c = Cells::compute(m);
    let mut v: Vec<_> = (0..c.j_count())
        .map(|j| (c.j_members(j).len(), c.l_classes_in(j).len(), c.r_classes_in(j).len(), c.h_size_in(j)))
        .collect();
    v.sort_unstable();
    v
}

fn cell_conformance() -> Result<String, String> {
    let tl = |n| families::family_monoid(Family::TemperleyLieb, n).map_err(|e| e.to_string());
    let tl3 = cell_shapes(&tl(3)?);
    ensure!(tl3 == vec![(1, 1, 1, 1), (4, 2, 2, 1)], "TL_3 cells {tl3:?}");
    let tl4 = cell_shapes(&tl(4)?);
    ensure!(tl4 == vec![(1, 1, 1, 1), (4, 2, 2, 1), (9, 3, 3, 1)], "TL_4 cells {tl4:?}");
    let t3 = families::transformation_monoid(3).map_err(|e| e.to_string())?;
    let shapes = cell_shapes(&t3);
    ensure!(shapes == vec![(3, 1, 3, 1), (6, 1, 1, 6), (18, 3, 3, 2)], "T_3 cells {shapes:?}");
    let br4 = families::family_monoid(Family::Brauer, 4).map_err(|e| e.to_string())?;
    let c = Cells::compute(&br4);
    let j2 = (0..c.j_count())
        .find(|&j| families::label_width(br4.label(c.j_members(j)[0])) == Some(2))
        .ok_or("Br_4 has no width-2 cell")?;
    ensure!(c.h_size_in(j2) == 2, "Br_4 J_2 has H-cells of size {}", c.h_size_in(j2));
    Ok("TL_3, TL_4, T_3 (middle |J| = 18), Br_4 J_2 |H| = 2".into())
}

fn roundedness() -> Result<String, String> {
    let tl = |n| families::family_monoid(Family::TemperleyLieb, n).map_err(|e| e.to_string());
    for n in 5..=7 {
        let r = monoid::roundedness(&tl(n)?);
        ensure!(r.well, "TL_{n} is not well-rounded: {r:?}");
    }
    let r3 = monoid::roundedness(&tl(3)?);
    ensure!(r3.left_classes == 2, "TL_3 has {} left classes", r3.left_classes);
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)];
    for n in 0..=6 {
        let m = tl(n)?;
        for f in fields {
            let d = monoid::additive_hom_dim(&m, f);
            ensure!(d == 0, "TL_{n} over {}: {d} additive characters", f.name());
        }
    }
    let m5 = tl(5)?;
    for case in ExtCase::ALL {
        let d = monoid::ext_dim(&m5, FieldSpec::Rationals, case);
        ensure!(d == 0, "TL_5 ext {} = {d}", case.name());
    }
    Ok("TL_5..7 well-rounded, TL_3 has 2 classes, no characters, TL_5 exts vanish".into())
}

fn graphs() -> Result<String, String> {
    for n in (3..=11).step_by(2) {
        ensure!(build_graph(GraphKind::Flip, 3, n).is_connected(), "flip graph (3,{n}) disconnected");
    }
    for n in (4..=10).step_by(2) {
        ensure!(!build_graph(GraphKind::Flip, 2, n).is_connected(), "flip graph (2,{n}) connected");
    }
    let mut split = Vec::new();
    let mut weak_split = Vec::new();
    for m in 1..=3 {
        for n in (m..=11).step_by(2) {
            let c = build_graph(GraphKind::Vertical, m, n).components();
            if c > 1 {
                split.push(format!("({m},{n}):{c}"));
            }
            if !build_graph(GraphKind::WeaklyVertical, m, n).is_connected() {
                weak_split.push(format!("({m},{n})"));
            }
        }
    }
    ensure!(
        split.is_empty(),
        "flip graphs as expected, but vertical graphs split (components) {}; weakly vertical split: {}",
        split.join(" "),
        if weak_split.is_empty() { "none".to_string() } else { weak_split.join(" ") }
    );
    Ok("flip graphs as expected, vertical graphs connected".into())
}

fn periods() -> Result<String, String> {
    let mut elements = 0;
    for n in 0..=5 {
        let m = families::family_monoid(Family::Brauer, n).map_err(|e| e.to_string())?;
        let cells = Cells::compute(&m);
        for a in 0..m.size() {
            let r = protocol::dh_suitability(&m, &cells, a);
            ensure!(r.divides, "Br_{n}: period {} of {} does not divide {}", r.period, r.element, r.h_order);
            elements += 1;
        }
    }
    Ok(format!("{elements} elements"))
}

/// Smallest `Σ φ(d)` over sets of divisors with lcm `n`: the smallest
/// faithful ℚ-representation of `Z/nZ` as a sum of cyclotomic pieces.
fn faith_oracle(n: u64) -> u64 {
    let ds: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1).collect();
    let mut best = u64::MAX;
    for mask in 1u32..(1 << ds.len()) {
        let chosen: Vec<u64> = (0..ds.len()).filter(|i| mask >> i & 1 == 1).map(|i| ds[i]).collect();
        let lcm = chosen.iter().fold(1, |a, &d| a / crate::combinat::gcd(a, d) * d);
        if lcm == n {
            best = best.min(chosen.iter().map(|&d| euler_phi(d)).sum());
        }
    }
    best
}

fn cyclic() -> Result<String, String> {
    for n in 2..=30u64 {
        let gap_oracle = divisors(n).into_iter().filter(|&d| d > 1).map(euler_phi).min().unwrap();
        let gap = rep::cyclic_gap(n, 0).map_err(|e| e.to_string())?;
        ensure!(gap == gap_oracle, "gap(Z/{n}) = {gap}, oracle {gap_oracle}");
        let faith = rep::cyclic_faith(n).map_err(|e| e.to_string())?;
        let oracle = faith_oracle(n);
        ensure!(faith == oracle, "faith(Z/{n}) = {faith}, oracle {oracle}");
    }
    Ok("n = 2..30 agree with the cyclotomic oracle".into())
}

fn protocols() -> Result<String, String> {
    let err = |e: crate::Error| e.to_string();
    // TL_10 truncated at width 4: public elements from the ideal
    let n = 10;
    let ideal: Vec<Diagram> =
        families::enumerate(Family::TemperleyLieb, n).map_err(err)?.into_iter().filter(|d| d.width() <= 4).collect();
    let tl = DiagramPlatform { n, name: "TL_10,>=4".into() };
    let a_gens = protocol::local_generators(n, &[1, 2], false).map_err(err)?;
    let b_gens = protocol::local_generators(n, &[7, 8, 9], false).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for seed in 0..100 {
        let g = ideal.choose(&mut rng).unwrap().clone();
        let spec = SuSpec { g, a_gens: a_gens.clone(), b_gens: b_gens.clone(), word_len: 8 };
        let t = protocol::run_su(&tl, &spec, seed).map_err(err)?;
        ensure!(t.equal, "SU seed {seed}: secrets differ");
    }
    let br: Vec<Diagram> = families::enumerate(Family::Brauer, 5).map_err(err)?;
    let plat = DiagramPlatform { n: 5, name: "Br_5".into() };
    let mut runs = 0;
    let mut seed = 0;
    while runs < 100 {
        let g = br.choose(&mut rng).unwrap();
        let h = br.choose(&mut rng).unwrap();
        seed += 1;
        if protocol::Platform::commute(&plat, g, h) {
            continue;
        }
        let t = protocol::run_stickel(&plat, g, h, 1 << 16, seed).map_err(err)?;
        ensure!(t.equal, "Stickel seed {seed}: secrets differ");
        runs += 1;
    }
    Ok("100 SU runs on TL_10,>=4 and 100 Stickel runs on Br_5".into())
}

fn burnside_brauer() -> Result<String, String> {
    let t3 = families::transformation_monoid(3).map_err(|e| e.to_string())?;
    let cells = Cells::compute(&t3);
    let cl = monoid::cl(&t3, &cells);
    let largest = rep::largest_simple_proxy(&cells);
    let b = rep::burnside_brauer_bound(&BigUint::from(largest), cl).map_err(|e| e.to_string())?;
    ensure!(b == BigUint::from(2u32), "bound {b}");
    Ok(format!("cl = {cl}, largest simple {largest}, bound {b}"))
}

/// The gap lower bound over `2^n n^{-5/2}` for `16 ≤ n ≤ 64`; the ratios
/// must stay within a factor 4 of each other.
fn asymptotic() -> Result<String, String> {
    let mut ratios = Vec::new();
    for n in 16..=64usize {
        let report = rep::gap_bounds(Family::TemperleyLieb, n, 0).map_err(|e| e.to_string())?;
        let bound = report.gap.value.ok_or("no gap bound")?;
        let scale = 2f64.powi(n as i32) * (n as f64).powf(-2.5);
        ratios.push(bound.to_f64().ok_or("not representable")? / scale);
    }
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0, f64::max);
    ensure!(lo > 0.0 && hi / lo <= 4.0, "ratio range [{lo:.4}, {hi:.4}]");
    Ok(format!("ratio in [{lo:.3}, {hi:.3}], spread {:.2}", hi / lo))
}
