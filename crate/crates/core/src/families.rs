//! Enumeration, cardinalities and generators of the diagram families, the
//! half-diagram graphs, and two non-diagram test monoids.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use crate::combinat::{bell, binomial, catalan, double_factorial, factorial};
use crate::diagram::{gens, Diagram, Family};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// Memory guards, expressed as a cap on the number of elements produced.
#[derive(Clone, Copy, Debug)]
pub struct Guard {
    pub max_elements: u64,
}

impl Default for Guard {
    fn default() -> Self {
        // Ca(14) ≈ 2.7M: the 2n ≤ 28 limit for Temperley–Lieb
        Guard { max_elements: 3_000_000 }
    }
}

/// Closed-form size of a family.
pub fn cardinality(family: Family, n: usize) -> BigUint {
    let n32 = n as u64;
    match family {
        Family::TemperleyLieb => catalan(n32),
        Family::PlanarPartition => catalan(2 * n32),
        Family::PlanarRook => binomial(2 * n32, n32),
        Family::Motzkin => (0..=n32)
            .map(|k| binomial(2 * n32, 2 * k) * binomial(2 * k, k) / BigUint::from(k + 1))
            .sum(),
        Family::Brauer => double_factorial(2 * n32 as i64 - 1),
        Family::Rook => (0..=n32).map(|k| factorial(k) * binomial(n32, k).pow(2)).sum(),
        Family::RookBrauer => rook_brauer_count(n32),
        Family::Partition => bell(2 * n32),
        Family::Symmetric => factorial(n32),
    }
}

/// Partial matchings of `2n` points: Σ_k binom(2n,2k)(2k−1)!!.
pub fn rook_brauer_count(n: u64) -> BigUint {
    (0..=n).map(|k| binomial(2 * n, 2 * k) * double_factorial(2 * k as i64 - 1)).sum()
}

/// The closed form printed in the literature for the rook-Brauer monoid,
/// Σ_k (2k)!!·binom(2n,2k); it disagrees with enumeration for n ≥ 1.
pub fn rook_brauer_count_literature(n: u64) -> BigUint {
    (0..=n).map(|k| binomial(2 * n, 2 * k) * double_factorial(2 * k as i64)).sum()
}

#[derive(Clone, Copy)]
struct Rules {
    min_block: usize,
    max_block: usize,
    /// size-2 blocks must join a bottom and a top point
    vertical_pairs: bool,
    planar: bool,
}

fn rules(family: Family) -> Rules {
    let (min_block, max_block, vertical_pairs) = match family {
        Family::TemperleyLieb | Family::Brauer => (2, 2, false),
        Family::Motzkin | Family::RookBrauer => (1, 2, false),
        Family::PlanarRook | Family::Rook => (1, 2, true),
        Family::Symmetric => (2, 2, true),
        Family::Partition | Family::PlanarPartition => (1, usize::MAX, false),
    };
    Rules { min_block, max_block, vertical_pairs, planar: family.is_planar() }
}

/// Depth-first generator over boundary positions. For planar families the
/// positions are visited in cyclic order and open blocks form a stack.
struct Generator {
    n: usize,
    rules: Rules,
    /// point visited at each step
    order: Vec<usize>,
    /// block of each point visited so far
    assign: Vec<usize>,
    sizes: Vec<usize>,
    has_bottom: Vec<bool>,
    /// planar: blocks still allowed to grow, innermost last
    stack: Vec<usize>,
    /// non-planar: blocks still allowed to grow
    closed: Vec<bool>,
    out: Vec<Diagram>,
    limit: u64,
    overflow: bool,
}

impl Generator {
    fn run(family: Family, n: usize, limit: u64) -> Result<Vec<Diagram>> {
        let rules = rules(family);
        let order: Vec<usize> =
            if rules.planar { (0..2 * n).map(|q| Diagram::point_at_cyclic(n, q)).collect() } else { (0..2 * n).collect() };
        let mut g = Generator {
            n,
            rules,
            order,
            assign: vec![usize::MAX; 2 * n],
            sizes: Vec::new(),
            has_bottom: Vec::new(),
            stack: Vec::new(),
            closed: Vec::new(),
            out: Vec::new(),
            limit,
            overflow: false,
        };
        g.step(0);
        if g.overflow {
            return Err(Error::Guard(format!("{family} with n={n} exceeds {limit} elements")));
        }
        Ok(g.out)
    }

    fn open_blocks_needing_more(&self) -> usize {
        (0..self.sizes.len())
            .filter(|&b| self.sizes[b] < self.rules.min_block && !self.closed[b])
            .count()
    }

    fn can_join(&self, b: usize, point: usize) -> bool {
        if self.closed[b] || self.sizes[b] >= self.rules.max_block {
            return false;
        }
        if self.rules.vertical_pairs {
            // the existing member must sit on the other side
            let bottom = point < self.n;
            if self.has_bottom[b] == bottom {
                return false;
            }
        }
        true
    }

    fn step(&mut self, i: usize) {
        if self.overflow {
            return;
        }
        let total = 2 * self.n;
        if i == total {
            if (0..self.sizes.len()).all(|b| self.sizes[b] >= self.rules.min_block) {
                if self.out.len() as u64 >= self.limit {
                    self.overflow = true;
                    return;
                }
                let assign = &self.assign;
                self.out.push(Diagram::from_key_fn(self.n, |p| assign[p]));
            }
            return;
        }
        if self.open_blocks_needing_more() > total - i {
            return;
        }
        let point = self.order[i];
        let bottom = point < self.n;
        // join an existing block
        if self.rules.planar {
            for depth in (0..self.stack.len()).rev() {
                let b = self.stack[depth];
                // joining b closes every block above it on the stack
                let above: Vec<usize> = self.stack[depth + 1..].to_vec();
                if above.iter().any(|&x| self.sizes[x] < self.rules.min_block) {
                    continue;
                }
                if !self.can_join(b, point) {
                    continue;
                }
                let saved = self.stack.clone();
                for &x in &above {
                    self.closed[x] = true;
                }
                self.stack.truncate(depth + 1);
                self.push_point(i, b, bottom);
                self.step(i + 1);
                self.pop_point(i, b);
                for &x in &above {
                    self.closed[x] = false;
                }
                self.stack = saved;
            }
        } else {
            for b in 0..self.sizes.len() {
                if self.can_join(b, point) {
                    self.push_point(i, b, bottom);
                    self.step(i + 1);
                    self.pop_point(i, b);
                }
            }
        }
        // start a new block
        let b = self.sizes.len();
        self.sizes.push(0);
        self.has_bottom.push(false);
        self.closed.push(false);
        if self.rules.planar {
            self.stack.push(b);
        }
        self.push_point(i, b, bottom);
        self.step(i + 1);
        self.pop_point(i, b);
        if self.rules.planar {
            self.stack.pop();
        }
        self.sizes.pop();
        self.has_bottom.pop();
        self.closed.pop();
    }

    fn push_point(&mut self, i: usize, b: usize, bottom: bool) {
        self.assign[self.order[i]] = b;
        self.sizes[b] += 1;
        if bottom {
            self.has_bottom[b] = true;
        }
    }

    fn pop_point(&mut self, i: usize, b: usize) {
        let point = self.order[i];
        self.assign[point] = usize::MAX;
        self.sizes[b] -= 1;
        if point < self.n {
            // recompute: another bottom member may remain
            let n = self.n;
            let assign = &self.assign;
            self.has_bottom[b] = (0..n).any(|p| assign[p] == b);
        }
    }
}

/// All members, sorted lexicographically by their blocks.
pub fn enumerate(family: Family, n: usize) -> Result<Vec<Diagram>> {
    enumerate_guarded(family, n, Guard::default())
}

pub fn enumerate_guarded(family: Family, n: usize, guard: Guard) -> Result<Vec<Diagram>> {
    if n > Diagram::MAX_N {
        return Err(Error::Guard(format!("n={n} exceeds {}", Diagram::MAX_N)));
    }
    let expected = cardinality(family, n);
    if family != Family::RookBrauer && expected > BigUint::from(guard.max_elements) {
        return Err(Error::Guard(format!(
            "{family} with n={n} has {expected} elements, above the guard of {}",
            guard.max_elements
        )));
    }
    let mut out = Generator::run(family, n, guard.max_elements)?;
    out.sort_by_cached_key(|d| d.blocks());
    Ok(out)
}

/// A generating set; its closure under composition is the whole family.
pub fn generators(family: Family, n: usize) -> Result<Vec<Diagram>> {
    let mut g = Vec::new();
    let caps = |g: &mut Vec<Diagram>| g.extend((1..n).map(|i| gens::cap_cup(n, i)));
    let swaps = |g: &mut Vec<Diagram>| g.extend((1..n).map(|i| gens::transposition(n, i)));
    let shifts = |g: &mut Vec<Diagram>| {
        g.extend((1..n).map(|i| gens::shift_left(n, i)));
        g.extend((1..n).map(|i| gens::shift_right(n, i)));
    };
    match family {
        Family::TemperleyLieb => caps(&mut g),
        Family::Symmetric => swaps(&mut g),
        Family::Brauer => {
            caps(&mut g);
            swaps(&mut g);
        }
        Family::PlanarRook => {
            shifts(&mut g);
            g.extend((1..=n).map(|i| gens::cut(n, i)));
        }
        Family::Rook => {
            swaps(&mut g);
            if n > 0 {
                g.push(gens::cut(n, 1));
            }
        }
        Family::Motzkin => {
            caps(&mut g);
            shifts(&mut g);
            g.extend((1..=n).map(|i| gens::cut(n, i)));
        }
        Family::RookBrauer => {
            caps(&mut g);
            swaps(&mut g);
            if n > 0 {
                g.push(gens::cut(n, 1));
            }
        }
        Family::PlanarPartition => {
            g.extend((1..=n).map(|i| gens::cut(n, i)));
            g.extend((1..n).map(|i| gens::merge(n, i)));
        }
        Family::Partition => {
            swaps(&mut g);
            if n > 0 {
                g.push(gens::cut(n, 1));
            }
            if n > 1 {
                g.push(gens::merge(n, 1));
            }
        }
    }
    Ok(g)
}

/// Submonoid generated by `gens`, via breadth-first left multiplication.
pub fn closure(n: usize, gens: &[Diagram]) -> Vec<Diagram> {
    let id = Diagram::identity(n);
    let mut seen: HashSet<Diagram> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_counting(&x).0;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Diagram> = seen.into_iter().collect();
    out.sort_by_cached_key(|d| d.blocks());
    out
}

/// The family as a multiplication table; labels are the serializations.
pub fn family_monoid(family: Family, n: usize) -> Result<FiniteMonoid> {
    let elems = enumerate(family, n)?;
    if elems.len() > 5000 {
        return Err(Error::Guard(format!("table for {} elements is too large", elems.len())));
    }
    FiniteMonoid::from_elements(elems, |a, b| a.compose_counting(b).0, |d| d.to_string())
}

/// Width of a diagram element given by label.
pub fn label_width(label: &str) -> Option<usize> {
    label.parse::<Diagram>().ok().map(|d| d.width())
}

/// The full transformation monoid on `{0..n-1}`; `f·g` is `f` after `g`.
pub fn transformation_monoid(n: usize) -> Result<FiniteMonoid> {
    transformation_monoid_guarded(n, 6)
}

pub fn transformation_monoid_guarded(n: usize, max_n: usize) -> Result<FiniteMonoid> {
    if n > max_n {
        return Err(Error::Guard(format!("T_{n} has {n}^{n} elements; guard is n ≤ {max_n}")));
    }
    let size = n.pow(n as u32);
    let maps: Vec<Vec<usize>> = (0..size)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect()
        })
        .collect();
    FiniteMonoid::from_elements(
        maps,
        |f, g| g.iter().map(|&x| f[x]).collect(),
        |f| f.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""),
    )
}

/// `⟨a | a^{i+p} = a^i⟩` with elements `a^0 .. a^{i+p-1}`.
pub fn cyclic_monoid(i: usize, p: usize) -> FiniteMonoid {
    assert!(p >= 1, "period must be positive");
    let size = i + p;
    let reduce = |s: usize| if s < size { s } else { i + (s - i) % p };
    let rows = (0..size).map(|a| (0..size).map(|b| reduce(a + b)).collect()).collect();
    let labels = (0..size).map(|s| if s == 0 { "1".to_string() } else { format!("a^{s}") }).collect();
    FiniteMonoid::new(rows, 0).expect("cyclic monoid").with_labels(labels).unwrap()
}

/// Half-diagrams of the Temperley–Lieb type: `n` points, `m` through
/// points, the rest paired by non-nested-over-through cups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    /// `partner[i] = Some(j)` for a cup, `None` for a through point
    pub partner: Vec<Option<usize>>,
}

impl HalfDiagram {
    pub fn n(&self) -> usize {
        self.partner.len()
    }

    pub fn through(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.partner[i].is_none()).collect()
    }

    pub fn cups(&self) -> Vec<(usize, usize)> {
        (0..self.n()).filter_map(|i| self.partner[i].filter(|&j| j > i).map(|j| (i, j))).collect()
    }

    /// A cup is outer when no other cup encloses it.
    pub fn is_outer(&self, cup: (usize, usize)) -> bool {
        !self.cups().iter().any(|&(a, b)| a < cup.0 && cup.1 < b)
    }

    pub fn is_valid(&self) -> bool {
        let cups = self.cups();
        let crossing = cups.iter().any(|&(a, b)| cups.iter().any(|&(c, d)| a < c && c < b && b < d));
        let covered = self.through().iter().any(|&t| cups.iter().any(|&(a, b)| a < t && t < b));
        !crossing && !covered
    }

    /// The symmetric idempotent with this half on both sides.
    pub fn to_diagram(&self) -> Diagram {
        let n = self.n();
        let through = self.through();
        let key = |p: usize| {
            let (side_top, i) = if p < n { (false, p) } else { (true, p - n) };
            match self.partner[i] {
                Some(j) => {
                    let base = if side_top { 2 * n } else { 3 * n };
                    base + i.min(j)
                }
                None => through.iter().position(|&t| t == i).unwrap(),
            }
        };
        Diagram::from_key_fn(n, key)
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n() {
            s.push(match self.partner[i] {
                None => '|',
                Some(j) if j > i => '(',
                Some(_) => ')',
            });
        }
        s
    }
}

/// All of `B_m^n`, in lexicographic order of their displays.
pub fn half_diagrams(m: usize, n: usize) -> Vec<HalfDiagram> {
    if m > n || (n - m) % 2 == 1 {
        return Vec::new();
    }
    fn rec(i: usize, n: usize, m_left: usize, open: &mut Vec<usize>, cur: &mut Vec<Option<usize>>, out: &mut Vec<HalfDiagram>) {
        let remaining = n - i;
        if open.len() + m_left > remaining {
            return;
        }
        if i == n {
            out.push(HalfDiagram { partner: cur.clone() });
            return;
        }
        // through point: only when no cup is open
        if open.is_empty() && m_left > 0 {
            cur[i] = None;
            rec(i + 1, n, m_left - 1, open, cur, out);
        }
        // open a cup
        open.push(i);
        rec(i + 1, n, m_left, open, cur, out);
        open.pop();
        // close the innermost cup
        if let Some(j) = open.pop() {
            cur[i] = Some(j);
            cur[j] = Some(i);
            rec(i + 1, n, m_left, open, cur, out);
            cur[j] = None;
            cur[i] = None;
            open.push(j);
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut vec![None; n], &mut out);
    out.sort_by_key(|h| h.display());
    out
}

/// Result of gluing `b* a` for two half-diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gluing {
    /// through strands of `a` meet those of `b` in order
    pub straight: bool,
    pub loops: usize,
}

/// Glue the top of `a` to the top of `b` (i.e. form `b* a`).
pub fn glue(a: &HalfDiagram, b: &HalfDiagram) -> Gluing {
    let n = a.n();
    assert_eq!(n, b.n());
    let ta = a.through();
    let tb = b.through();
    let mut visited = vec![false; n];
    // follow cups alternately from `b` and `a`; returns the end point and
    // whether it is a through point of `b`
    let mut walk = |start: usize, mut use_b: bool| -> (usize, bool) {
        let mut p = start;
        visited[p] = true;
        loop {
            let next = if use_b { b.partner[p] } else { a.partner[p] };
            match next {
                None => return (p, use_b),
                Some(q) => {
                    p = q;
                    visited[p] = true;
                    use_b = !use_b;
                }
            }
        }
    };
    let mut straight = ta.len() == tb.len();
    for (idx, &start) in ta.iter().enumerate() {
        let (end, in_b) = walk(start, true);
        if !(in_b && tb.get(idx) == Some(&end)) {
            straight = false;
        }
    }
    for &start in &tb {
        walk(start, false);
    }
    let mut loops = 0;
    for s in 0..n {
        if visited[s] {
            continue;
        }
        let mut p = s;
        let mut use_b = true;
        loop {
            visited[p] = true;
            let q = if use_b { b.partner[p] } else { a.partner[p] }.expect("closed component");
            use_b = !use_b;
            p = q;
            if p == s && use_b {
                break;
            }
        }
        loops += 1;
    }
    Gluing { straight, loops }
}

pub fn is_vertical(a: &HalfDiagram, b: &HalfDiagram) -> bool {
    let g = glue(a, b);
    g.straight && g.loops == 0
}

pub fn is_weakly_vertical(a: &HalfDiagram, b: &HalfDiagram) -> bool {
    glue(a, b).straight
}

/// All `b` forming a flip pair with `a`.
pub fn flips(a: &HalfDiagram) -> Vec<HalfDiagram> {
    let through = a.through();
    let mut out = Vec::new();
    for cup in a.cups() {
        if !a.is_outer(cup) {
            continue;
        }
        for w in through.windows(2) {
            let (l, r) = (w[0], w[1]);
            if l < cup.0 && cup.1 < r {
                continue;
            }
            let mut partner = a.partner.clone();
            partner[cup.0] = None;
            partner[cup.1] = None;
            partner[l] = Some(r);
            partner[r] = Some(l);
            let b = HalfDiagram { partner };
            debug_assert!(b.is_valid());
            out.push(b);
        }
    }
    out
}

pub fn is_flip_pair(a: &HalfDiagram, b: &HalfDiagram) -> bool {
    flips(a).contains(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GraphKind {
    /// gluing gives the identity with no closed loops
    Vertical,
    /// closed loops allowed
    WeaklyVertical,
    Flip,
}

#[derive(Clone, Debug)]
pub struct PairGraph {
    pub kind: GraphKind,
    pub m: usize,
    pub n: usize,
    pub vertices: Vec<HalfDiagram>,
    pub edges: Vec<(usize, usize)>,
}

pub fn build_graph(kind: GraphKind, m: usize, n: usize) -> PairGraph {
    let vertices = half_diagrams(m, n);
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let related = match kind {
                GraphKind::Vertical => is_vertical(&vertices[i], &vertices[j]),
                GraphKind::WeaklyVertical => is_weakly_vertical(&vertices[i], &vertices[j]),
                GraphKind::Flip => is_flip_pair(&vertices[i], &vertices[j]),
            };
            if related {
                edges.push((i, j));
            }
        }
    }
    PairGraph { kind, m, n, vertices, edges }
}

impl PairGraph {
    /// Union-find connectivity; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn components(&self) -> usize {
        let k = self.vertices.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = k;
        for &(a, b) in &self.edges {
            let (x, y) = (find(&mut parent, a), find(&mut parent, b));
            if x != y {
                parent[x] = y;
                comps -= 1;
            }
        }
        comps
    }
}

/// Parity-compatible widths of a family, largest first.
pub fn widths(family: Family, n: usize) -> Vec<usize> {
    if family.is_matching() {
        if family == Family::Symmetric {
            return vec![n];
        }
        (0..=n).rev().filter(|k| (n - k) % 2 == 0).collect()
    } else {
        (0..=n).rev().collect()
    }
}

/// Number of diagrams of width `k`; equals the J-cell size.
pub fn count_of_width(family: Family, n: usize, k: usize) -> BigUint {
    let l = crate::rep::l_class_size(family, n, k);
    let h = factorial(k as u64);
    if family.is_planar() {
        &l * &l
    } else {
        &l * &l / h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(Family::TemperleyLieb, 3).unwrap().len(), 5);
        assert_eq!(enumerate(Family::Brauer, 3).unwrap().len(), 15);
        assert_eq!(enumerate(Family::Motzkin, 3).unwrap().len(), 51);
        assert_eq!(enumerate(Family::PlanarRook, 2).unwrap().len(), 6);
        assert_eq!(enumerate(Family::Rook, 3).unwrap().len(), 34);
        assert_eq!(enumerate(Family::Partition, 2).unwrap().len(), 15);
        assert_eq!(enumerate(Family::Symmetric, 4).unwrap().len(), 24);
        assert_eq!(cardinality(Family::Partition, 2), BigUint::from(15u32));
        assert_eq!(cardinality(Family::Rook, 3), BigUint::from(34u32));
        assert_eq!(cardinality(Family::Symmetric, 4), BigUint::from(24u32));
    }

    #[test]
    fn enumeration_is_sorted_and_members() {
        for f in Family::ALL {
            let all = enumerate(f, 2).unwrap();
            assert!(all.windows(2).all(|w| w[0].blocks() < w[1].blocks()));
            assert!(all.iter().all(|d| d.is_member(f)));
        }
    }

    #[test]
    fn rook_brauer_literature_formula_differs() {
        assert_eq!(rook_brauer_count(1), BigUint::from(2u32));
        assert_eq!(rook_brauer_count_literature(1), BigUint::from(3u32));
    }

    #[test]
    fn guard_trips() {
        let g = Guard { max_elements: 10 };
        assert!(matches!(enumerate_guarded(Family::TemperleyLieb, 5, g), Err(Error::Guard(_))));
        assert!(matches!(transformation_monoid(7), Err(Error::Guard(_))));
    }

    #[test]
    fn cyclic_monoid_shape() {
        let m = cyclic_monoid(3, 2);
        assert_eq!(m.size(), 5);
        assert_eq!(m.index_period(1), (3, 2));
        let g = cyclic_monoid(0, 4);
        assert!(g.is_group());
    }

    #[test]
    fn half_diagram_counts() {
        // Γ(2,6) has dim Δ_6(2) = 9 vertices
        assert_eq!(half_diagrams(2, 6).len(), 9);
        assert_eq!(half_diagrams(3, 5).len(), 4);
        assert!(half_diagrams(2, 5).is_empty());
    }

    #[test]
    fn vertical_example() {
        // cups (0,1),(3,4), through 2,5 versus its mirror image
        let a = HalfDiagram { partner: vec![Some(1), Some(0), None, Some(4), Some(3), None] };
        let b = HalfDiagram { partner: vec![None, Some(2), Some(1), None, Some(5), Some(4)] };
        assert!(is_vertical(&a, &b));
        assert!(is_vertical(&b, &a));
        assert!(!is_vertical(&a, &a));
        assert!(is_weakly_vertical(&a, &a));
        assert!(!is_vertical(&b, &b));
    }

    #[test]
    fn flip_graph_small_cases() {
        let g = build_graph(GraphKind::Flip, 3, 5);
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 3);
        assert!(g.is_connected());
        assert!(!build_graph(GraphKind::Flip, 2, 4).is_connected());
        assert!(build_graph(GraphKind::Flip, 3, 6).is_connected());
    }

    #[test]
    fn vertical_graph_splits_at_five() {
        // ()()| and |()() only see each other
        let g = build_graph(GraphKind::Vertical, 1, 5);
        assert_eq!((g.vertices.len(), g.edges.len(), g.components()), (5, 4, 2));
        assert!(build_graph(GraphKind::Vertical, 1, 3).is_connected());
        assert!(build_graph(GraphKind::WeaklyVertical, 1, 5).is_connected());
    }
}
