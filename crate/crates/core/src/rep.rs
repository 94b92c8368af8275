//! Cell modules, simple dimensions, Gram matrices, gaps and bounds.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinat::{binomial, binomial_i, ceil_root, double_factorial, factorial, isqrt, partition_count, stirling2};
use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::families;
use crate::linalg::{rank_int, Field, FieldSpec, IntMatrix, Matrix};
use crate::monoid::{self, Cells, ExtCase, FiniteMonoid};

// ---------------------------------------------------------------------------
// Cell sizes

fn check_apex(family: Family, n: usize, k: usize) -> Result<()> {
    let ok = k <= n
        && match family {
            Family::TemperleyLieb | Family::Brauer => (n - k) % 2 == 0,
            Family::Symmetric => k == n,
            _ => true,
        };
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{k} is not a valid apex for {family} on {n} strands")))
    }
}

/// Motzkin-type half diagrams: cups, singletons and `k` through points,
/// none of them below a cup.
fn motzkin_halves(n: usize, k: usize) -> BigUint {
    // dp[depth][through]
    let mut dp = vec![vec![BigUint::zero(); k + 1]; n + 2];
    dp[0][0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![vec![BigUint::zero(); k + 1]; n + 2];
        for d in 0..=n {
            for t in 0..=k {
                let v = &dp[d][t];
                if v.is_zero() {
                    continue;
                }
                next[d][t] += v;
                next[d + 1][t] += v;
                if d > 0 {
                    next[d - 1][t] += v;
                }
                if d == 0 && t < k {
                    next[0][t + 1] += v;
                }
            }
        }
        dp = next;
    }
    dp[0][k].clone()
}

/// Number of half diagrams of width `k`, i.e. the number of L-classes (and
/// of R-classes) in the J-cell of width `k`.
pub fn halves(family: Family, n: usize, k: usize) -> Result<BigUint> {
    check_apex(family, n, k)?;
    let (n64, k64) = (n as u64, k as u64);
    Ok(match family {
        Family::TemperleyLieb => {
            let c = ((n - k) / 2) as i64;
            binomial(n64, c as u64) - binomial_i(n as i64, c - 1)
        }
        Family::Brauer => binomial(n64, k64) * double_factorial(n as i64 - k as i64 - 1),
        Family::Symmetric => BigUint::one(),
        Family::PlanarRook | Family::Rook => binomial(n64, k64),
        Family::Motzkin => motzkin_halves(n, k),
        Family::RookBrauer => {
            let rest = n - k;
            let matchings: BigUint = (0..=rest / 2)
                .map(|j| binomial(rest as u64, 2 * j as u64) * double_factorial(2 * j as i64 - 1))
                .sum();
            binomial(n64, k64) * matchings
        }
        Family::PlanarPartition => {
            let c = (n - k) as i64;
            binomial(2 * n64, c as u64) - binomial_i(2 * n as i64, c - 1)
        }
        Family::Partition => (k64..=n64).map(|m| stirling2(n64, m) * binomial(m, k64)).sum(),
    })
}

/// Order of the maximal subgroup in the J-cell of width `k`.
pub fn h_size(family: Family, k: usize) -> BigUint {
    if family.is_planar() {
        BigUint::one()
    } else {
        factorial(k as u64)
    }
}

/// Size of an L-class in the J-cell of width `k` (zero for invalid apexes).
pub fn l_class_size(family: Family, n: usize, k: usize) -> BigUint {
    halves(family, n, k).map(|h| h * h_size(family, k)).unwrap_or_default()
}

/// `|L|/|H|` for the apex `k`.
pub fn ssdim(family: Family, n: usize, k: usize) -> Result<BigUint> {
    halves(family, n, k)
}

/// `|S_{≥J_k}|`: widths up to `k` plus an adjoined unit (none when `k = n`).
pub fn truncated_size(family: Family, n: usize, k: usize) -> BigUint {
    let body: BigUint = families::widths(family, n)
        .into_iter()
        .filter(|&w| w <= k)
        .map(|w| families::count_of_width(family, n, w))
        .sum();
    if k >= n {
        body
    } else {
        body + 1u32
    }
}

// ---------------------------------------------------------------------------
// (3,p)-adic digits and the TL coefficients. `p = 0` stands for p = ∞.

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdicExpansion {
    pub x: u64,
    /// 0 for ∞
    pub p: u64,
    /// `digits[0] ∈ {0,1,2}`, the rest base-`p` digits of `x div 3`
    pub digits: Vec<u64>,
}

pub fn adic(x: u64, p: u64) -> AdicExpansion {
    let mut digits = vec![x % 3];
    let mut r = x / 3;
    if p == 0 {
        digits.push(r);
    } else {
        while r > 0 {
            digits.push(r % p);
            r /= p;
        }
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    AdicExpansion { x, p, digits }
}

impl AdicExpansion {
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn reassemble(&self) -> u64 {
        let mut scale = 3u64;
        let mut x = self.digit(0);
        for &d in &self.digits[1..] {
            x += scale * d;
            if self.p != 0 {
                scale *= self.p;
            }
        }
        x
    }

    /// Index of the lowest nonzero digit; `None` for `x = 0`.
    pub fn nu(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    /// Digitwise `≤`.
    pub fn digit_le(&self, other: &AdicExpansion) -> bool {
        let len = self.digits.len().max(other.digits.len());
        (0..len).all(|i| self.digit(i) <= other.digit(i))
    }
}

/// Usual `p`-adic valuation; `ν_∞(x) = 0` for `x ≠ 0`.
pub fn nu_p(x: u64, p: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    if p == 0 {
        return Some(0);
    }
    let (mut x, mut v) = (x, 0);
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// `ν_{3,p}(x)`: `0` if `3 ∤ x`, else `1 + ν_p(x/3)`.
pub fn nu_3p(x: u64, p: u64) -> Option<u32> {
    if x == 0 {
        None
    } else if x % 3 != 0 {
        Some(0)
    } else {
        nu_p(x / 3, p).map(|v| v + 1)
    }
}

fn adic_rule(x: u64, y: u64, p: u64) -> i8 {
    let (ax, ay) = (adic(x, p), adic(y, p));
    let (nx, ny) = (ax.nu(), ay.nu());
    if nx == ny && ax.digit_le(&ay) && nx.map_or(true, |i| ax.digit(i) == ay.digit(i)) {
        return 1;
    }
    if let (Some(nx), Some(ny)) = (nx, ny) {
        if nx < ny && y > 0 && ax.digit_le(&adic(y - 1, p)) {
            return -1;
        }
    }
    0
}

/// The coefficient `e_{n,k}` in characteristic `p` (0 for ℚ).
pub fn e_coefficient(n: u64, k: u64, p: u64) -> i8 {
    if k > n || (n - k) % 2 == 1 {
        return 0;
    }
    adic_rule(k + 2, (n + k) / 2 + 2, p)
}

/// Multiplicity-free inverse decomposition weight of the cell module of
/// apex `m` in the simple of apex `k`.
fn cell_weight(m: u64, k: u64, p: u64) -> i8 {
    adic_rule(k + 1, (m + k) / 2 + 1, p)
}

/// Dimension of the cell module of width `m` of TL_n.
pub fn tl_cell_dim(n: u64, m: u64) -> BigUint {
    let c = ((n - m) / 2) as i64;
    binomial(n, c as u64) - binomial_i(n as i64, c - 1)
}

/// Dimension of the simple TL_n module with apex of width `k` in
/// characteristic `p` (0 for ℚ).
pub fn simple_dim_tl(n: u64, k: u64, p: u64) -> Result<BigUint> {
    if k > n || (n - k) % 2 == 1 {
        return Err(Error::Invalid(format!("no TL apex of width {k} on {n} strands")));
    }
    if p != 0 && !crate::linalg::is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let mut total = BigInt::zero();
    let mut m = k;
    while m <= n {
        let w = cell_weight(m, k, p);
        if w != 0 {
            total += BigInt::from(w) * BigInt::from(tl_cell_dim(n, m));
        }
        m += 2;
    }
    total
        .to_biguint()
        .ok_or_else(|| Error::Invalid(format!("negative dimension for TL_{n}, k={k}, p={p}")))
}

// ---------------------------------------------------------------------------
// Gram matrices

/// A symmetric idempotent of width `k` with its L-class representatives
/// (untwisted, one per top half).
pub struct CellData {
    pub e: Diagram,
    pub left: Vec<Diagram>,
}

/// The L-class data of the width-`k` cell, from an enumeration.
pub fn cell_data(family: Family, n: usize, k: usize, elements: &[Diagram]) -> Result<CellData> {
    check_apex(family, n, k)?;
    let e = elements
        .iter()
        .find(|d| d.width() == k && d.star() == **d && d.compose_counting(d).0 == **d && d.factorize().is_untwisted())
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("no symmetric idempotent of width {k}")))?;
    let base = e.factorize().bottom;
    let left: Vec<Diagram> = elements
        .iter()
        .filter(|d| d.width() == k)
        .filter(|d| {
            let f = d.factorize();
            f.is_untwisted() && f.bottom == base
        })
        .cloned()
        .collect();
    Ok(CellData { e, left })
}

/// `P_ij = 1` iff `star(l_i)·l_j` keeps all `k` through strands, i.e. lies
/// in `H(e)`. For nontrivial `H(e)` this is only the support pattern.
pub fn sandwich_pattern(cell: &CellData) -> IntMatrix {
    let k = cell.e.width();
    let rs: Vec<Diagram> = cell.left.iter().map(Diagram::star).collect();
    Matrix::from_fn(rs.len(), cell.left.len(), |i, j| i64::from(rs[i].compose_counting(&cell.left[j]).0.width() == k))
}

/// The Gram matrix of the width-`k` cell of a family with trivial `H(e)`.
pub fn gram_matrix(family: Family, n: usize, k: usize) -> Result<IntMatrix> {
    if !h_size(family, k).is_one() {
        return Err(Error::Unsupported(format!("H(e) of width {k} in {family} is not trivial")));
    }
    let elements = families::enumerate(family, n)?;
    Ok(sandwich_pattern(&cell_data(family, n, k, &elements)?))
}

pub fn gram_rank_dim(family: Family, n: usize, k: usize, field: FieldSpec) -> Result<usize> {
    Ok(rank_int(&gram_matrix(family, n, k)?, field))
}

/// Gram matrix of an idempotent J-class of an abstract monoid: rows run over
/// `R(e)`, columns over `L(e)`.
pub fn monoid_gram(m: &FiniteMonoid, cells: &Cells, j: usize) -> Result<IntMatrix> {
    let e = cells.idempotent_in_j(j).ok_or_else(|| Error::Invalid(format!("J-class {j} is not idempotent")))?;
    let h = cells.h_class[e];
    if cells.h_members(h).len() != 1 {
        return Err(Error::Unsupported(format!("H(e) of J-class {j} is not trivial")));
    }
    let l = cells.l_class[e];
    let r = cells.r_class[e];
    let left = cells.l_members(l);
    let right = cells.r_members(r);
    Ok(Matrix::from_fn(right.len(), left.len(), |a, b| i64::from(cells.h_class[m.mul(right[a], left[b])] == h)))
}

// ---------------------------------------------------------------------------
// Representations

/// Matrices for every element, acting on column vectors.
#[derive(Clone, Debug)]
pub struct Representation<T: Field> {
    pub dim: usize,
    pub ctx: T::Ctx,
    pub matrices: Vec<Matrix<T>>,
}

/// Homomorphism checks are exhaustive up to this many elements.
const HOM_CHECK_LIMIT: usize = 200;

impl<T: Field> Representation<T> {
    pub fn new(m: &FiniteMonoid, dim: usize, ctx: T::Ctx, matrices: Vec<Matrix<T>>) -> Result<Self> {
        if matrices.len() != m.size() || matrices.iter().any(|x| x.rows() != dim || x.cols() != dim) {
            return Err(Error::Invalid("matrix count or shape does not match".into()));
        }
        let rep = Representation { dim, ctx, matrices };
        if m.size() <= HOM_CHECK_LIMIT {
            rep.check_hom(m)?;
        }
        Ok(rep)
    }

    pub fn check_hom(&self, m: &FiniteMonoid) -> Result<()> {
        if self.matrices[m.unit()] != Matrix::identity(self.dim) {
            return Err(Error::Invalid("the unit does not act as the identity".into()));
        }
        for a in 0..m.size() {
            for b in 0..m.size() {
                if self.matrices[a].mul(&self.matrices[b])? != self.matrices[m.mul(a, b)] {
                    return Err(Error::Invalid(format!("ρ({a})ρ({b}) ≠ ρ({a}{b})")));
                }
            }
        }
        Ok(())
    }

    /// `a·l = al` if `al` stays in the L-class, else 0.
    pub fn cell_module(m: &FiniteMonoid, cells: &Cells, l_class: usize, ctx: T::Ctx) -> Result<Self> {
        let basis = cells.l_members(l_class);
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let d = basis.len();
        let matrices = (0..m.size())
            .map(|a| {
                let mut x = Matrix::zeros(d, d);
                for (j, &l) in basis.iter().enumerate() {
                    if let Some(&i) = pos.get(&m.mul(a, l)) {
                        x.set(i, j, T::one());
                    }
                }
                x
            })
            .collect();
        Representation::new(m, d, ctx, matrices)
    }

    /// `(1_b, 1_t)`.
    pub fn trivial_reps(m: &FiniteMonoid, ctx: T::Ctx) -> (Self, Self) {
        let units: Vec<bool> = {
            let mut u = vec![false; m.size()];
            for a in m.units() {
                u[a] = true;
            }
            u
        };
        let scalar = |v: bool| Matrix::from_fn(1, 1, |_, _| if v { T::one() } else { T::zero() });
        let bottom = Representation { dim: 1, ctx, matrices: units.iter().map(|&u| scalar(u)).collect() };
        let top = Representation { dim: 1, ctx, matrices: (0..m.size()).map(|_| scalar(true)).collect() };
        (bottom, top)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let d = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                Matrix::from_fn(d, d, |i, j| match (i < self.dim, j < self.dim) {
                    (true, true) => a.get(i, j).clone(),
                    (false, false) => b.get(i - self.dim, j - self.dim).clone(),
                    _ => T::zero(),
                })
            })
            .collect();
        Representation { dim: d, ctx: self.ctx, matrices }
    }

    /// Maximal J-class (towards the minimal ideal) not acting as zero.
    pub fn apex(&self, cells: &Cells) -> Result<usize> {
        let live: Vec<usize> = (0..cells.j_count())
            .filter(|&j| !self.matrices[cells.j_members(j)[0]].is_zero_matrix())
            .collect();
        let maximal: Vec<usize> =
            live.iter().copied().filter(|&j| !live.iter().any(|&x| cells.j_lt(j, x))).collect();
        match maximal.as_slice() {
            [j] => Ok(*j),
            [] => Err(Error::Invalid("the zero representation has no apex".into())),
            _ => Err(Error::Invalid(format!("{} maximal non-annihilating cells", maximal.len()))),
        }
    }

    /// Units act trivially and every non-unit acts by one common idempotent.
    pub fn is_trivial_sum(&self, m: &FiniteMonoid) -> bool {
        let id = Matrix::identity(self.dim);
        let units = m.units();
        if units.iter().any(|&u| self.matrices[u] != id) {
            return false;
        }
        let mut rest = (0..m.size()).filter(|a| !units.contains(a));
        let Some(first) = rest.next() else { return true };
        let e = &self.matrices[first];
        rest.all(|a| self.matrices[a] == *e) && e.mul(e).map(|ee| ee == *e).unwrap_or(false)
    }

    pub fn is_faithful(&self) -> bool {
        let n = self.matrices.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.matrices[a] != self.matrices[b]))
    }
}

/// The left regular representation.
pub fn regular<T: Field>(m: &FiniteMonoid, ctx: T::Ctx) -> Result<Representation<T>> {
    let n = m.size();
    let matrices = (0..n)
        .map(|a| {
            let mut x = Matrix::zeros(n, n);
            for b in 0..n {
                x.set(m.mul(a, b), b, T::one());
            }
            x
        })
        .collect();
    Representation::new(m, n, ctx, matrices)
}

// ---------------------------------------------------------------------------
// Counting simples

/// Per idempotent J-class, the number of simple modules with that apex over
/// a splitting field of characteristic `p`: the number of `p`-regular
/// conjugacy classes of `H(e)`.
pub fn count_simples(m: &FiniteMonoid, cells: &Cells, p: u64) -> Result<Vec<(usize, usize)>> {
    cells
        .idempotent_js()
        .into_iter()
        .map(|j| {
            let e = cells.idempotent_in_j(j).unwrap();
            let g = cells.group_of(m, e)?;
            Ok((j, regular_classes(&g, p)))
        })
        .collect()
}

fn regular_classes(g: &FiniteMonoid, p: u64) -> usize {
    let n = g.size();
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| g.mul(a, b) == g.unit()).unwrap()).collect();
    let mut seen = vec![false; n];
    let mut count = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        for h in 0..n {
            seen[g.mul(g.mul(h, x), inv[h])] = true;
        }
        let order = g.index_period(x).1 as u64;
        if p == 0 || order % p != 0 {
            count += 1;
        }
    }
    count
}

/// Closed form for diagram families: simples with apex of width `k`
/// correspond to the (p-regular) partitions of `k`, or to one simple for
/// planar families.
pub fn count_simples_family(family: Family, n: usize, k: usize, p: u64) -> Result<u64> {
    check_apex(family, n, k)?;
    Ok(if family.is_planar() { 1 } else { partition_count(k as u64, p) })
}

// ---------------------------------------------------------------------------
// Gaps

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBound,
    /// only valid for large `n`
    Heuristic,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower-bound",
            Status::Heuristic => "heuristic",
            Status::Unknown => "unknown",
        })
    }
}

/// A value with its epistemic status and the argument that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    #[serde(serialize_with = "ser_opt_rational")]
    pub value: Option<BigRational>,
    pub status: Status,
    pub source: String,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

impl Estimate {
    pub fn exact(v: impl Into<BigInt>, source: &str) -> Estimate {
        Estimate { value: Some(BigRational::from_integer(v.into())), status: Status::Exact, source: source.into() }
    }

    pub fn bound(v: BigRational, status: Status, source: &str) -> Estimate {
        Estimate { value: Some(v), status, source: source.into() }
    }

    pub fn unknown(source: &str) -> Estimate {
        Estimate { value: None, status: Status::Unknown, source: source.into() }
    }

    /// Integer lower bound implied by the value.
    pub fn ceil(&self) -> Option<BigInt> {
        self.value.as_ref().map(|v| v.ceil().to_integer())
    }
}

/// The smallest dimension of a representation that is not a direct sum of
/// trivial ones, computed from the engine: nontrivial simples from Gram
/// ranks, plus 2 if some extension between trivial modules is nonsplit.
/// Requires every idempotent H-cell to be trivial.
pub fn gap_from_engine(m: &FiniteMonoid, field: FieldSpec) -> Result<Estimate> {
    let cells = Cells::compute(m);
    if m.is_group() && m.size() == 1 {
        return Ok(Estimate::unknown("trivial monoid: every representation is trivial"));
    }
    let bottom = cells.bottom(m);
    let top = cells.top();
    let mut best: Option<usize> = None;
    for j in cells.idempotent_js() {
        let e = cells.idempotent_in_j(j).unwrap();
        if cells.h_members(cells.h_class[e]).len() != 1 {
            return Err(Error::Unsupported(format!("J-class {j} has a nontrivial maximal subgroup")));
        }
        if j == bottom || j == top {
            continue;
        }
        let d = rank_int(&monoid_gram(m, &cells, j)?, field);
        best = Some(best.map_or(d, |b: usize| b.min(d)));
    }
    if ExtCase::ALL.iter().any(|&c| monoid::ext_dim(m, field, c) > 0) {
        best = Some(best.map_or(2, |b| b.min(2)));
    }
    Ok(match best {
        Some(v) => Estimate::exact(v, "engine: gram ranks and trivial extensions"),
        None => Estimate::unknown("only trivial representations"),
    })
}

/// Widths `w ≤ k` of a TL truncation whose simples are not trivial.
fn tl_nontrivial_widths(n: usize, k: usize) -> Vec<usize> {
    (0..=k.min(n)).filter(|&w| (n - w) % 2 == 0 && w > 1 && w != n).collect()
}

/// Exact gap of `TL_n` truncated at width `k` (`k = n`: no truncation)
/// in characteristic `p`, valid for `n > 4` where trivial extensions split.
pub fn gap_tl(n: usize, k: usize, p: u64) -> Result<Estimate> {
    if n <= 4 {
        return Ok(Estimate::unknown("splitting of trivial extensions needs n > 4; use the engine"));
    }
    let mut best: Option<BigUint> = None;
    for w in tl_nontrivial_widths(n, k) {
        let d = simple_dim_tl(n as u64, w as u64, p)?;
        best = Some(match best {
            Some(b) if b <= d => b,
            _ => d,
        });
    }
    Ok(match best {
        Some(v) => Estimate::exact(BigInt::from(v), "TL simples, trivial extensions split"),
        None => Estimate::unknown("no nontrivial simple survives"),
    })
}

/// Exact gap of the planar rook monoid with widths `lo..=hi` surviving
/// (`hi = n`, `lo = 0` for no truncation); it is semisimple in every
/// characteristic, so the gap is the smallest nontrivial simple.
pub fn gap_pro(n: usize, lo: usize, hi: usize) -> Result<Estimate> {
    if lo > hi || hi > n {
        return Err(Error::Invalid(format!("bad width range {lo}..{hi} for n={n}")));
    }
    let best = (lo..=hi).filter(|&w| w != n && w != 0).map(|w| binomial(n as u64, w as u64)).min();
    Ok(match best {
        Some(v) => Estimate::exact(BigInt::from(v), "planar rook simples are binomials"),
        None => Estimate::unknown("no nontrivial simple survives"),
    })
}

fn rat(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(num: BigUint, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Largest width `w ≤ limit` with `w ≡ n (mod 2)`.
fn parity_floor(n: usize, limit: usize) -> usize {
    let w = limit.min(n);
    if (n - w) % 2 == 0 {
        w
    } else {
        w - 1
    }
}

/// `(1/((n−c+1)(n−c+2))) binom(n,c)`, a lower bound for the TL simple of
/// width `n − 2c` in characteristic 0.
pub fn tl_simple_lower(n: usize, c: usize) -> BigRational {
    let (n, c) = (n as u64, c as u64);
    frac(binomial(n, c), (n - c + 1) * (n - c + 2))
}

/// `(6/(n+4)) binom(n, n'/2 − 1)`.
pub fn tl_faith_lower(n: usize) -> BigRational {
    let np = (n - n % 2) as u64;
    frac(binomial(n as u64, np / 2 - 1) * 6u32, n as u64 + 4)
}

#[derive(Clone, Debug, Serialize)]
pub struct Ratios {
    pub gratio: Option<f64>,
    pub fratio: Option<f64>,
    pub ssratio: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub monoid: String,
    pub field: String,
    #[serde(serialize_with = "ser_big")]
    pub size: BigUint,
    pub gap: Estimate,
    pub ssgap: Estimate,
    pub faith: Estimate,
    /// bounds that only hold for large `n`
    pub asymptotic: Vec<(String, Estimate)>,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `value / √size` as a decimal.
pub fn ratio(value: &BigRational, size: &BigUint) -> f64 {
    let v = value.to_f64().unwrap_or(f64::INFINITY);
    let s = size.to_f64().unwrap_or(f64::INFINITY);
    v / s.sqrt()
}

impl GapReport {
    pub fn ratios(&self) -> Ratios {
        let r = |e: &Estimate| e.value.as_ref().map(|v| ratio(v, &self.size));
        Ratios { gratio: r(&self.gap), fratio: r(&self.faith), ssratio: r(&self.ssgap) }
    }
}

/// Closed-form lower bounds for the family truncated at width `k`.
pub fn gap_bounds(family: Family, n: usize, k: usize) -> Result<GapReport> {
    let size = truncated_size(family, n, k);
    let name = if k >= n { format!("{}_{n}", family.short_name()) } else { format!("{}_{n},>={k}", family.short_name()) };
    let mut report = match family {
        Family::TemperleyLieb => tl_bounds(n, k)?,
        Family::PlanarPartition => {
            let mut r = tl_bounds(2 * n, 2 * k)?;
            relabel(&mut r, "via TL_2n");
            r
        }
        Family::Brauer => {
            let mut r = tl_bounds(n, k)?;
            relabel(&mut r, "via TL_n ⊂ Br_n");
            r.field = "char != 2".into();
            r.asymptotic.push((
                "ssgap".into(),
                Estimate::bound(rat(double_factorial(n as i64 - 1)), Status::Heuristic, "(n-1)!!, n large"),
            ));
            r
        }
        Family::Motzkin | Family::RookBrauer => {
            if n < 2 {
                return Err(Error::Invalid("needs n ≥ 2".into()));
            }
            let mut r = tl_bounds(n - 1, k.min(n - 1))?;
            relabel(&mut r, "via TL_(n-1) ⊂ Mo_n");
            r.gap = Estimate::unknown("splitting of trivial extensions not established");
            if family == Family::RookBrauer {
                let v: BigUint = (0..=n / 2)
                    .map(|t| binomial(n as u64, 2 * t as u64) * double_factorial(2 * t as i64 - 1))
                    .sum();
                r.asymptotic.push(("ssgap".into(), Estimate::bound(rat(v), Status::Heuristic, "partial matchings, n large")));
            }
            r
        }
        Family::Partition => {
            let mut r = tl_bounds(2 * n, 2 * k.min(n))?;
            relabel(&mut r, "via pPa_n ⊂ Pa_n");
            r.gap = Estimate::unknown("splitting of trivial extensions not established");
            let v: BigUint = (0..=n as u64).map(|t| stirling2(n as u64, t)).sum();
            r.asymptotic.push(("ssgap".into(), Estimate::bound(rat(v), Status::Heuristic, "Bell number, n large")));
            r
        }
        Family::PlanarRook | Family::Rook => return pro_bounds(family, n),
        Family::Symmetric => return Err(Error::Unsupported("no closed-form bounds for symmetric groups".into())),
    };
    report.monoid = name;
    report.size = size;
    Ok(report)
}

fn relabel(r: &mut GapReport, via: &str) {
    for e in [&mut r.gap, &mut r.ssgap, &mut r.faith] {
        e.source = format!("{} ({via})", e.source);
    }
}

fn tl_bounds(n: usize, k: usize) -> Result<GapReport> {
    let k = k.min(n);
    let root = isqrt(n as u64) as usize;
    let two_root = isqrt(4 * n as u64) as usize; // ⌊2√n⌋
    let faith = Estimate::bound(tl_faith_lower(n), Status::LowerBound, "contains the width-2 simple");
    if n >= 5 && k <= two_root {
        let w = parity_floor(n, two_root);
        let c = (n - w) / 2;
        Ok(GapReport {
            monoid: String::new(),
            field: "char 0".into(),
            size: BigUint::zero(),
            gap: Estimate::bound(tl_simple_lower(n, c), Status::LowerBound, "simple lower bound at the widest cell"),
            ssgap: Estimate::bound(
                frac(binomial(n as u64, n as u64 / 2), n as u64),
                Status::LowerBound,
                "smallest semisimple dimension",
            ),
            faith,
            asymptotic: Vec::new(),
        })
    } else if n >= 8 && two_root <= k && k + root <= n {
        // widths up to n − √n: c ≥ √n/2, evaluated at the widest admissible cell
        let limit = n - (if root * root == n { root } else { root + 1 });
        let w = parity_floor(n, limit);
        let c = (n - w) / 2;
        let ss = frac(binomial(n as u64, c as u64) * (n - 2 * c + 1) as u64, (n - c + 1) as u64);
        Ok(GapReport {
            monoid: String::new(),
            field: "char 0".into(),
            size: BigUint::zero(),
            gap: Estimate::bound(tl_simple_lower(n, c), Status::LowerBound, "simple lower bound at the widest cell"),
            ssgap: Estimate::bound(ss, Status::LowerBound, "semisimple dimension at the widest cell"),
            faith,
            asymptotic: Vec::new(),
        })
    } else {
        Err(Error::Invalid(format!("no TL bound for n={n}, k={k}: need n ≥ 5, k ≤ 2√n or n ≥ 8, 2√n ≤ k ≤ n−√n")))
    }
}

/// Bounds for the window of widths `l..=n−l`, `l = ⌊2√n⌋`, plus a unit.
fn pro_bounds(family: Family, n: usize) -> Result<GapReport> {
    if n < 4 {
        return Err(Error::Invalid("needs n ≥ 4".into()));
    }
    let l = isqrt(4 * n as u64) as usize;
    if 2 * l > n {
        return Err(Error::Invalid(format!("truncation {l}..{} is empty", n - l.min(n))));
    }
    let size: BigUint = (l..=n - l).map(|w| families::count_of_width(family, n, w)).sum::<BigUint>() + 1u32;
    let cells = 2 * isqrt(n as u64) as u32 + 1;
    let faith = ceil_root(&binomial(n as u64, n as u64 / 2), cells);
    let gap = rat(binomial(n as u64, l as u64));
    Ok(GapReport {
        monoid: format!("{}_{n},[{l},{}]", family.short_name(), n - l),
        field: "any".into(),
        size,
        gap: Estimate::bound(gap.clone(), Status::LowerBound, "binomial at the widest cell"),
        ssgap: Estimate::bound(gap, Status::LowerBound, "binomial at the widest cell"),
        faith: Estimate::bound(rat(faith), Status::LowerBound, "Burnside-Brauer over the surviving cells"),
        asymptotic: Vec::new(),
    })
}

/// `⌈d^{1/(cl−1)}⌉`, a lower bound for the faithfulness in characteristic 0.
pub fn burnside_brauer_bound(largest_simple: &BigUint, cl: usize) -> Result<BigUint> {
    if cl <= 1 {
        return Err(Error::Invalid("undefined for monoids with a single class".into()));
    }
    Ok(ceil_root(largest_simple, (cl - 1) as u32))
}

/// Largest `#L-classes` over idempotent J-classes: the largest simple when
/// every `H(e)` is trivial and the Gram matrices are invertible, otherwise
/// only a heuristic proxy.
pub fn largest_simple_proxy(cells: &Cells) -> usize {
    cells.idempotent_js().into_iter().map(|j| cells.l_classes_in(j).len()).max().unwrap_or(0)
}

// ---------------------------------------------------------------------------
// Cyclic groups

/// Gap of `Z/nZ` over ℚ (`q = 0`) or over 𝔽_q.
pub fn cyclic_gap(n: u64, q: u64) -> Result<u64> {
    if n <= 1 {
        return Err(Error::Invalid("needs n > 1".into()));
    }
    if q == 0 {
        let r = crate::combinat::factorize(n)[0].0;
        return Ok(r - 1);
    }
    let fq = crate::combinat::factorize(q);
    if fq.len() != 1 {
        return Err(Error::Invalid(format!("{q} is not a prime power")));
    }
    let p = fq[0].0;
    let g = |x: u64| crate::combinat::gcd(n, x);
    if g(q - 1) > 1 {
        return Ok(1);
    }
    if n % p == 0 {
        return Ok(2);
    }
    // the order of q modulo the prime factors of n
    let mut best = u64::MAX;
    for (r, _) in crate::combinat::factorize(n) {
        let mut d = 1;
        let mut x = q % r;
        while x != 1 {
            x = (x as u128 * q as u128 % r as u128) as u64;
            d += 1;
        }
        best = best.min(d);
    }
    Ok(best)
}

/// Faithfulness of `Z/nZ` over ℚ: `Σ (r^d − r^{d−1})` over `n = Π r^d`,
/// except that a lone factor 2 is free when `n > 2`.
pub fn cyclic_faith(n: u64) -> Result<u64> {
    if n <= 1 {
        return Err(Error::Invalid("needs n > 1".into()));
    }
    let sum: u64 = crate::combinat::factorize(n).iter().map(|&(r, d)| r.pow(d) - r.pow(d - 1)).sum();
    Ok(if n % 4 == 2 && n > 2 { sum - 1 } else { sum })
}

/// `dim · log₂ q` as `(dim · e, p)` meaning `dim·e·log₂ p`, plus a decimal.
pub fn field_complexity(dim: u64, q: u64) -> Result<(u64, u64, f64)> {
    let f = crate::combinat::factorize(q);
    if f.len() != 1 {
        return Err(Error::Invalid(format!("{q} is not a prime power")));
    }
    let (p, e) = f[0];
    let mult = dim * e as u64;
    Ok((mult, p, mult as f64 * (p as f64).log2()))
}

/// Rows of the TL dimension table up to `n_max`.
#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub n: usize,
    pub k: usize,
    pub dim: String,
    pub ssdim: String,
    /// how `dim` was obtained
    pub source: String,
}

pub fn tl_dims_table(n_max: usize, p: u64) -> Result<Vec<DimRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for k in (n % 2..=n).step_by(2) {
            rows.push(DimRow {
                n,
                k,
                dim: simple_dim_tl(n as u64, k as u64, p)?.to_string(),
                ssdim: ssdim(Family::TemperleyLieb, n, k)?.to_string(),
                source: "formula".into(),
            });
        }
    }
    Ok(rows)
}

/// Whether a rational is a nonnegative integer.
pub fn is_natural(q: &BigRational) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn halves_match_enumeration() {
        for f in Family::ALL {
            for n in 0..=3 {
                let all = families::enumerate(f, n).unwrap();
                for k in families::widths(f, n) {
                    let direct = all.iter().filter(|d| d.width() == k).count();
                    assert_eq!(families::count_of_width(f, n, k), big(direct as u64), "{f} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn adic_digits() {
        let a = adic(11, 0);
        assert_eq!(a.digits, vec![2, 3]);
        assert_eq!(a.reassemble(), 11);
        let b = adic(50, 2);
        assert_eq!(b.reassemble(), 50);
        assert!(adic(4, 0).digit_le(&adic(13, 0)));
        assert_eq!(nu_3p(6, 0), Some(1));
        assert_eq!(nu_3p(7, 0), Some(0));
        assert_eq!(nu_p(12, 2), Some(2));
    }

    #[test]
    fn small_simple_dims() {
        assert_eq!(simple_dim_tl(8, 2, 0).unwrap(), big(28));
        assert_eq!(simple_dim_tl(8, 2, 2).unwrap(), big(27));
        assert_eq!(simple_dim_tl(16, 0, 0).unwrap(), big(1));
        assert!(simple_dim_tl(5, 2, 0).is_err());
        assert_eq!(e_coefficient(8, 8, 0), 1);
        assert_eq!(e_coefficient(15, 11, 0), -1);
        assert_eq!(e_coefficient(14, 0, 0), -1);
        assert_eq!(e_coefficient(14, 2, 0), 1);
    }

    #[test]
    fn gram_examples() {
        let p = gram_matrix(Family::PlanarRook, 3, 1).unwrap();
        assert_eq!(p, IntMatrix::from_fn(3, 3, |i, j| i64::from(i == j)));
        let t = gram_matrix(Family::TemperleyLieb, 3, 1).unwrap();
        assert_eq!(rank_int(&t, FieldSpec::Rationals), 1);
        assert_eq!(gram_rank_dim(Family::TemperleyLieb, 4, 0, FieldSpec::Rationals).unwrap(), 1);
        assert!(gram_matrix(Family::Brauer, 4, 2).is_err());
    }

    #[test]
    fn cell_module_tl4() {
        let m = families::family_monoid(Family::TemperleyLieb, 4).unwrap();
        let cells = Cells::compute(&m);
        let x = m.labels().iter().position(|l| families::label_width(l) == Some(2)).unwrap();
        let rep = Representation::<BigRational>::cell_module(&m, &cells, cells.l_class[x], ()).unwrap();
        assert_eq!(rep.dim, 3);
        assert_eq!(rep.apex(&cells).unwrap(), cells.j_class[x]);
        assert!(!rep.is_trivial_sum(&m));
    }

    #[test]
    fn trivial_reps_behave() {
        let m = families::family_monoid(Family::TemperleyLieb, 3).unwrap();
        let cells = Cells::compute(&m);
        let (b, t) = Representation::<BigRational>::trivial_reps(&m, ());
        assert_eq!(b.apex(&cells).unwrap(), cells.bottom(&m));
        assert_eq!(t.apex(&cells).unwrap(), cells.top());
        assert!(b.direct_sum(&t).is_trivial_sum(&m));
        assert!(!t.is_faithful());
        assert!(b.check_hom(&m).is_ok());
        let reg = regular::<BigRational>(&m, ()).unwrap();
        assert!(reg.is_faithful());
    }

    #[test]
    fn cyclic_values() {
        assert_eq!(cyclic_gap(15, 0).unwrap(), 2);
        assert_eq!(cyclic_gap(7, 2).unwrap(), 3);
        assert_eq!(cyclic_gap(6, 2).unwrap(), 2);
        assert_eq!(cyclic_gap(6, 7).unwrap(), 1);
        assert_eq!(cyclic_faith(12).unwrap(), 4);
        assert_eq!(cyclic_faith(4).unwrap(), 2);
        assert_eq!(cyclic_faith(7).unwrap(), 6);
        assert!(cyclic_gap(1, 0).is_err());
    }

    #[test]
    fn complexity() {
        assert_eq!(field_complexity(3, 4).unwrap().2, 6.0);
        assert_eq!(field_complexity(1, 2).unwrap().2, 1.0);
        assert!(field_complexity(1, 6).is_err());
    }

    #[test]
    fn pro_gap() {
        assert_eq!(gap_pro(6, 0, 6).unwrap().ceil(), Some(6.into()));
        assert_eq!(gap_pro(6, 2, 4).unwrap().ceil(), Some(15.into()));
    }
}
