//! Finite monoids given by multiplication tables.

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    unit: usize,
    table: Vec<u32>,
    labels: Vec<String>,
}

/// Tables up to this size are checked for associativity exhaustively.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

impl FiniteMonoid {
    /// Validates shape, the unit and associativity.
    pub fn new(rows: Vec<Vec<usize>>, unit: usize) -> Result<FiniteMonoid> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Invalid("a monoid needs at least one element".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::Invalid(format!("row {i} has {} entries, expected {size}", r.len())));
            }
            for &x in r {
                if x >= size {
                    return Err(Error::Invalid(format!("entry {x} out of range in row {i}")));
                }
                table.push(x as u32);
            }
        }
        let m = FiniteMonoid { size, unit, table, labels: (0..size).map(|i| i.to_string()).collect() };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        if self.unit >= self.size {
            return Err(Error::Invalid(format!("unit {} out of range", self.unit)));
        }
        for a in 0..self.size {
            if self.mul(self.unit, a) != a || self.mul(a, self.unit) != a {
                return Err(Error::Invalid(format!("{} is not neutral for {a}", self.unit)));
            }
        }
        if let Some((a, b, c)) = self.associativity_violation() {
            return Err(Error::Invalid(format!("not associative at ({a},{b},{c})")));
        }
        Ok(())
    }

    /// Exhaustive up to [`EXHAUSTIVE_ASSOC_LIMIT`] elements, sampled above.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let m = self.size;
        let check = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if m <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..m {
                for b in 0..m {
                    let ab = self.mul(a, b);
                    for c in 0..m {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1_000_000 {
                let (a, b, c) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
                if !check(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Builds the table of a set closed under an associative product.
    pub fn from_elements<E, F, L>(elements: Vec<E>, mul: F, label: L) -> Result<FiniteMonoid>
    where
        E: Hash + Eq + Clone,
        F: Fn(&E, &E) -> E,
        L: Fn(&E) -> String,
    {
        let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let size = elements.len();
        let mut table = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                let c = mul(a, b);
                let &i = index
                    .get(&c)
                    .ok_or_else(|| Error::Invalid(format!("product {} not in the set", label(&c))))?;
                table.push(i as u32);
            }
        }
        let mut unit = None;
        for u in 0..size {
            if (0..size).all(|a| table[u * size + a] as usize == a && table[a * size + u] as usize == a) {
                unit = Some(u);
                break;
            }
        }
        let unit = unit.ok_or_else(|| Error::Invalid("no unit element".into()))?;
        let labels = elements.iter().map(&label).collect();
        Ok(FiniteMonoid { size, unit, table, labels })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteMonoid> {
        if labels.len() != self.size {
            return Err(Error::Invalid("label count does not match size".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn opposite(&self) -> FiniteMonoid {
        let m = self.size;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = self.table[b * m + a];
            }
        }
        FiniteMonoid { size: m, unit: self.unit, table, labels: self.labels.clone() }
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.unit;
        let mut base = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// `{g : ∃h, gh = hg = 1}`.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&g| (0..self.size).any(|h| self.mul(g, h) == self.unit && self.mul(h, g) == self.unit))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.units().len() == self.size
    }

    /// Plain-text table: `m unit` then `m` rows.
    pub fn to_table_text(&self) -> String {
        let mut s = format!("{} {}\n", self.size, self.unit);
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|b| self.mul(a, b).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_table_text(text: &str) -> Result<FiniteMonoid> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty table".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        if nums.len() != 2 {
            return Err(Error::Parse("header must be `m unit`".into()));
        }
        let (m, unit) = (nums[0], nums[1]);
        let rows: Vec<Vec<usize>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != m {
            return Err(Error::Parse(format!("expected {m} rows, found {}", rows.len())));
        }
        FiniteMonoid::new(rows, unit)
    }

    /// `(index, period)`: the least `i ≥ 1` and `p ≥ 1` with `a^i = a^{i+p}`.
    pub fn index_period(&self, a: usize) -> (usize, usize) {
        let mut first_seen: HashMap<usize, usize> = HashMap::new();
        let mut x = a;
        let mut s = 1;
        loop {
            if let Some(&i) = first_seen.get(&x) {
                return (i, s - i);
            }
            first_seen.insert(x, s);
            x = self.mul(x, a);
            s += 1;
        }
    }

    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid { size: 1, unit: 0, table: vec![0], labels: vec!["1".into()] }
    }

    /// Table built by construction (callers guarantee the axioms).
    pub(crate) fn from_raw(size: usize, unit: usize, table: Vec<u32>, labels: Vec<String>) -> FiniteMonoid {
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid { size, unit, table, labels }
    }
}

type Bits = Vec<u64>;

fn bits_new(m: usize) -> Bits {
    vec![0; m.div_ceil(64)]
}

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bit_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn class_ids(keys: Vec<Bits>) -> Vec<usize> {
    let mut map: HashMap<Bits, usize> = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = map.len();
            *map.entry(k).or_insert(next)
        })
        .collect()
}

fn members_of(ids: &[usize]) -> Vec<Vec<usize>> {
    let count = ids.iter().map(|&i| i + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); count];
    for (a, &i) in ids.iter().enumerate() {
        out[i].push(a);
    }
    out
}

/// Green's structure. Orientation: `a ≤_l b` iff `b ∈ Ma`, so
/// multiplying moves up; the units form the bottom J-cell.
#[derive(Clone, Debug)]
pub struct Cells {
    pub l_class: Vec<usize>,
    pub r_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub h_class: Vec<usize>,
    l_members: Vec<Vec<usize>>,
    r_members: Vec<Vec<usize>>,
    j_members: Vec<Vec<usize>>,
    h_members: Vec<Vec<usize>>,
    /// `j_le[x][y]`: `J_x ≤_lr J_y`.
    j_le: Vec<Vec<bool>>,
    h_idempotent: Vec<Option<usize>>,
}

impl Cells {
    pub fn compute(m: &FiniteMonoid) -> Cells {
        let n = m.size();
        let mut right = vec![bits_new(n); n];
        let mut left = vec![bits_new(n); n];
        for a in 0..n {
            for x in 0..n {
                bit_set(&mut right[a], m.mul(a, x));
                bit_set(&mut left[a], m.mul(x, a));
            }
        }
        let l_class = class_ids(left.clone());
        let r_class = class_ids(right.clone());
        // J = D = L ∘ R in a finite monoid
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let l_first = members_of(&l_class);
        let r_first = members_of(&r_class);
        for a in 0..n {
            for rep in [l_first[l_class[a]][0], r_first[r_class[a]][0]] {
                let (x, y) = (find(&mut parent, a), find(&mut parent, rep));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let mut j_of_root = HashMap::new();
        let j_class: Vec<usize> = (0..n)
            .map(|a| {
                let r = find(&mut parent, a);
                let next = j_of_root.len();
                *j_of_root.entry(r).or_insert(next)
            })
            .collect();
        let j_members = members_of(&j_class);
        let mut h_map = HashMap::new();
        let h_class: Vec<usize> = (0..n)
            .map(|a| {
                let next = h_map.len();
                *h_map.entry((l_class[a], r_class[a])).or_insert(next)
            })
            .collect();
        let h_members = members_of(&h_class);
        let h_idempotent = h_members.iter().map(|hs| hs.iter().copied().find(|&e| m.is_idempotent(e))).collect();
        // two-sided ideal of each J representative
        let nj = j_members.len();
        let mut j_le = vec![vec![false; nj]; nj];
        for (x, members) in j_members.iter().enumerate() {
            let a = members[0];
            let mut ideal = bits_new(n);
            for c in 0..n {
                if bit_get(&left[a], c) {
                    for (w, word) in right[c].iter().enumerate() {
                        ideal[w] |= word;
                    }
                }
            }
            for (y, other) in j_members.iter().enumerate() {
                j_le[x][y] = bit_get(&ideal, other[0]);
            }
        }
        Cells {
            l_class,
            r_class,
            j_class,
            h_class,
            l_members: l_first,
            r_members: r_first,
            j_members,
            h_members,
            j_le,
            h_idempotent,
        }
    }

    pub fn j_count(&self) -> usize {
        self.j_members.len()
    }

    pub fn j_members(&self, j: usize) -> &[usize] {
        &self.j_members[j]
    }

    pub fn l_members(&self, l: usize) -> &[usize] {
        &self.l_members[l]
    }

    pub fn r_members(&self, r: usize) -> &[usize] {
        &self.r_members[r]
    }

    pub fn h_members(&self, h: usize) -> &[usize] {
        &self.h_members[h]
    }

    pub fn h_count(&self) -> usize {
        self.h_members.len()
    }

    /// `J_x ≤_lr J_y`.
    pub fn j_le(&self, x: usize, y: usize) -> bool {
        self.j_le[x][y]
    }

    pub fn j_lt(&self, x: usize, y: usize) -> bool {
        x != y && self.j_le[x][y]
    }

    /// L-classes inside a J-class, as class ids.
    pub fn l_classes_in(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.j_members[j].iter().map(|&a| self.l_class[a]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn r_classes_in(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.j_members[j].iter().map(|&a| self.r_class[a]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn h_classes_in(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.j_members[j].iter().map(|&a| self.h_class[a]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn idempotent_of_h(&self, h: usize) -> Option<usize> {
        self.h_idempotent[h]
    }

    /// Some idempotent of the J-class, if any.
    pub fn idempotent_in_j(&self, j: usize) -> Option<usize> {
        self.h_classes_in(j).into_iter().find_map(|h| self.h_idempotent[h])
    }

    pub fn is_idempotent_j(&self, j: usize) -> bool {
        self.idempotent_in_j(j).is_some()
    }

    pub fn idempotent_js(&self) -> Vec<usize> {
        (0..self.j_count()).filter(|&j| self.is_idempotent_j(j)).collect()
    }

    /// The J-class of the unit (the group of units).
    pub fn bottom(&self, m: &FiniteMonoid) -> usize {
        self.j_class[m.unit()]
    }

    /// The minimal ideal: the J-class above all others.
    pub fn top(&self) -> usize {
        (0..self.j_count())
            .find(|&t| (0..self.j_count()).all(|x| self.j_le[x][t]))
            .expect("finite monoids have a minimal ideal")
    }

    pub fn j_order_is_total(&self) -> bool {
        let nj = self.j_count();
        (0..nj).all(|x| (0..nj).all(|y| self.j_le[x][y] || self.j_le[y][x]))
    }

    /// Order of the H-cells in a J-class (all have equal size).
    pub fn h_size_in(&self, j: usize) -> usize {
        self.h_members[self.h_class[self.j_members[j][0]]].len()
    }

    /// The maximal subgroup `H(e)` as a monoid with unit `e`; labels are
    /// the element indices of the ambient monoid.
    pub fn group_of(&self, m: &FiniteMonoid, e: usize) -> Result<FiniteMonoid> {
        if !m.is_idempotent(e) {
            return Err(Error::Invalid(format!("{e} is not idempotent")));
        }
        let members = &self.h_members[self.h_class[e]];
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in members {
            for &b in members {
                table.push(pos[&m.mul(a, b)] as u32);
            }
        }
        let labels = members.iter().map(|a| a.to_string()).collect();
        Ok(FiniteMonoid::from_raw(k, pos[&e], table, labels))
    }

    /// The idempotent H-cell reached by the powers of `a`.
    pub fn power_h_class(&self, m: &FiniteMonoid, a: usize) -> usize {
        let (i, _) = m.index_period(a);
        self.h_class[m.pow(a, i as u64)]
    }

    /// Identity |J| = (#L in J)·(#R in J)·|H|, checked per J-class.
    pub fn size_identity_holds(&self) -> bool {
        (0..self.j_count()).all(|j| {
            self.j_members[j].len() == self.l_classes_in(j).len() * self.r_classes_in(j).len() * self.h_size_in(j)
        })
    }
}

/// Number of conjugacy classes of a group table.
pub fn conjugacy_classes(g: &FiniteMonoid) -> usize {
    let n = g.size();
    let inv: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&b| g.mul(a, b) == g.unit()).expect("group element without inverse"))
        .collect();
    let mut class = vec![usize::MAX; n];
    let mut count = 0;
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        for h in 0..n {
            class[g.mul(g.mul(h, x), inv[h])] = count;
        }
        count += 1;
    }
    count
}

/// Σ over idempotent J-cells of the number of conjugacy classes of `H(e)`.
pub fn cl(m: &FiniteMonoid, cells: &Cells) -> usize {
    cells
        .idempotent_js()
        .into_iter()
        .map(|j| {
            let e = cells.idempotent_in_j(j).unwrap();
            conjugacy_classes(&cells.group_of(m, e).unwrap())
        })
        .sum()
}

/// At most two idempotent J-cells, all with trivial maximal subgroups.
pub fn trivial_faithful_possible(m: &FiniteMonoid, cells: &Cells) -> bool {
    let idem = cells.idempotent_js();
    idem.len() <= 2
        && idem.iter().all(|&j| {
            let e = cells.idempotent_in_j(j).unwrap();
            cells.h_members(cells.h_class[e]).len() == 1
        })
        && m.size() > 0
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Admissibility {
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
}

impl Admissibility {
    pub fn all(&self) -> bool {
        self.left && self.right && self.two_sided
    }
}

/// Exhaustive check of: for all a, b in one L-class there is c in the
/// surrounding J-class with a = cb (dually for R; for J, a = cbd).
pub fn admissibility(m: &FiniteMonoid, cells: &Cells) -> Admissibility {
    let left = (0..cells.l_members.len()).all(|l| {
        let ls = &cells.l_members[l];
        let j = cells.j_members(cells.j_class[ls[0]]);
        ls.iter().all(|&a| ls.iter().all(|&b| j.iter().any(|&c| m.mul(c, b) == a)))
    });
    let right = (0..cells.r_members.len()).all(|r| {
        let rs = &cells.r_members[r];
        let j = cells.j_members(cells.j_class[rs[0]]);
        rs.iter().all(|&a| rs.iter().all(|&b| j.iter().any(|&c| m.mul(b, c) == a)))
    });
    let two_sided = (0..cells.j_count()).all(|jx| {
        let js = cells.j_members(jx);
        js.iter().all(|&a| {
            js.iter().all(|&b| {
                js.iter().any(|&c| {
                    let cb = m.mul(c, b);
                    js.iter().any(|&d| m.mul(cb, d) == a)
                })
            })
        })
    });
    Admissibility { left, right, two_sided }
}

/// Result of truncating a monoid to a cell subquotient.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub monoid: FiniteMonoid,
    /// ambient index of each surviving element, `None` for adjoined ones
    pub origin: Vec<Option<usize>>,
    pub fresh_unit: Option<usize>,
    pub zero: Option<usize>,
}

/// `S_{≥low}` (ideal above `low` plus a fresh unit) with everything
/// strictly above `high` collapsed to an adjoined zero.
pub fn truncate(m: &FiniteMonoid, cells: &Cells, low: Option<usize>, high: Option<usize>) -> Result<Truncation> {
    let nj = cells.j_count();
    for j in low.iter().chain(high.iter()) {
        if *j >= nj {
            return Err(Error::Invalid(format!("no J-class {j}")));
        }
    }
    if let Some(lo) = low {
        if lo == cells.bottom(m) {
            return Err(Error::Invalid("the lower cell must not contain the unit".into()));
        }
    }
    if let (Some(lo), Some(hi)) = (low, high) {
        if !cells.j_le(lo, hi) {
            return Err(Error::Invalid("lower cell is not below the upper cell".into()));
        }
    }
    if low.is_none() && high.is_none() {
        return Ok(Truncation {
            monoid: m.clone(),
            origin: (0..m.size()).map(Some).collect(),
            fresh_unit: None,
            zero: None,
        });
    }
    let in_ideal = |a: usize| low.map_or(true, |lo| cells.j_le(lo, cells.j_class[a]));
    let collapsed = |a: usize| high.map_or(false, |hi| cells.j_lt(hi, cells.j_class[a]));
    let kept: Vec<usize> = (0..m.size()).filter(|&a| in_ideal(a) && !collapsed(a)).collect();
    let mut origin: Vec<Option<usize>> = kept.iter().map(|&a| Some(a)).collect();
    let fresh_unit = low.map(|_| {
        origin.push(None);
        origin.len() - 1
    });
    let zero = high.map(|_| {
        origin.push(None);
        origin.len() - 1
    });
    let size = origin.len();
    let pos: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let image = |a: usize| -> usize {
        match pos.get(&a) {
            Some(&i) => i,
            None => zero.expect("product left the kept set without a zero"),
        }
    };
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let v = if Some(x) == fresh_unit {
                y
            } else if Some(y) == fresh_unit {
                x
            } else if Some(x) == zero || Some(y) == zero {
                zero.unwrap()
            } else {
                image(m.mul(kept[x], kept[y]))
            };
            table[x * size + y] = v as u32;
        }
    }
    let unit = fresh_unit.unwrap_or_else(|| pos[&m.unit()]);
    let mut labels: Vec<String> = kept.iter().map(|&a| m.label(a).to_string()).collect();
    if fresh_unit.is_some() {
        labels.push("1′".into());
    }
    if zero.is_some() {
        labels.push("0".into());
    }
    Ok(Truncation { monoid: FiniteMonoid::from_raw(size, unit, table, labels), origin, fresh_unit, zero })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Roundedness {
    pub left: bool,
    pub right: bool,
    pub null: bool,
    pub well: bool,
    /// number of ≈_l classes on the non-units
    pub left_classes: usize,
    pub right_classes: usize,
}

fn is_unit_mask(m: &FiniteMonoid) -> Vec<bool> {
    let mut mask = vec![false; m.size()];
    for g in m.units() {
        mask[g] = true;
    }
    mask
}

/// Classes of the equivalence generated by `ba ≈ a` on non-units `a, b`.
pub fn left_round_classes(m: &FiniteMonoid) -> Vec<Vec<usize>> {
    let unit = is_unit_mask(m);
    let n = m.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in (0..n).filter(|&a| !unit[a]) {
        for b in (0..n).filter(|&b| !unit[b]) {
            let (x, y) = (find(&mut parent, a), find(&mut parent, m.mul(b, a)));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for a in (0..n).filter(|&a| !unit[a]) {
        groups.entry(find(&mut parent, a)).or_default().push(a);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

pub fn is_null_rounded(m: &FiniteMonoid) -> bool {
    let unit = is_unit_mask(m);
    let n = m.size();
    let mut hit = vec![false; n];
    for b in (0..n).filter(|&b| !unit[b]) {
        for c in (0..n).filter(|&c| !unit[c]) {
            hit[m.mul(b, c)] = true;
        }
    }
    (0..n).all(|a| unit[a] || hit[a])
}

pub fn roundedness(m: &FiniteMonoid) -> Roundedness {
    let left_classes = left_round_classes(m).len();
    let right_classes = left_round_classes(&m.opposite()).len();
    let left = left_classes <= 1;
    let right = right_classes <= 1;
    let null = is_null_rounded(m);
    Roundedness { left, right, null, well: left && right && null, left_classes, right_classes }
}

/// The two one-dimensional characters: `1_t` sends everything to 1, `1_b`
/// sends units to 1 and everything else to 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Trivial {
    Bottom,
    Top,
}

impl Trivial {
    pub fn value(self, is_unit: bool) -> i64 {
        match self {
            Trivial::Top => 1,
            Trivial::Bottom => i64::from(is_unit),
        }
    }
}

/// The four extension types between trivial representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ExtCase {
    TT,
    BT,
    TB,
    BB,
}

impl ExtCase {
    pub const ALL: [ExtCase; 4] = [ExtCase::TT, ExtCase::BT, ExtCase::TB, ExtCase::BB];

    /// Diagonal characters `(χ1, χ2)` of `s ↦ [[χ1(s), f(s)], [0, χ2(s)]]`.
    ///
    /// `BT` is the case governed by ≈_l (`f(ba) = f(a)` for non-units `a`).
    pub fn characters(self) -> (Trivial, Trivial) {
        match self {
            ExtCase::TT => (Trivial::Top, Trivial::Top),
            ExtCase::BT => (Trivial::Top, Trivial::Bottom),
            ExtCase::TB => (Trivial::Bottom, Trivial::Top),
            ExtCase::BB => (Trivial::Bottom, Trivial::Bottom),
        }
    }

    pub fn parse(s: &str) -> Option<ExtCase> {
        Some(match s.to_ascii_lowercase().as_str() {
            "tt" => ExtCase::TT,
            "bt" => ExtCase::BT,
            "tb" => ExtCase::TB,
            "bb" => ExtCase::BB,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ExtCase::TT => "tt",
            ExtCase::BT => "bt",
            ExtCase::TB => "tb",
            ExtCase::BB => "bb",
        }
    }
}

/// Dimension of the space of `f: S → K` with `f(ab) = χ1(a)f(b) + f(a)χ2(b)`.
pub fn cocycle_dim(m: &FiniteMonoid, field: crate::linalg::FieldSpec, chi1: Trivial, chi2: Trivial) -> usize {
    let unit = is_unit_mask(m);
    let n = m.size();
    let rows = (0..n).flat_map(move |a| {
        let unit = unit.clone();
        (0..n).map(move |b| {
            vec![(m.mul(a, b), 1), (b, -chi1.value(unit[a])), (a, -chi2.value(unit[b]))]
        })
    });
    n - crate::linalg::sparse_rank(n, rows, field)
}

/// `{f : f(ab) = f(a) + f(b)}`.
pub fn additive_hom_dim(m: &FiniteMonoid, field: crate::linalg::FieldSpec) -> usize {
    cocycle_dim(m, field, Trivial::Top, Trivial::Top)
}

/// Extensions modulo the coboundaries `λ(χ1 − χ2)`; the quotient is
/// nontrivial exactly when the two characters differ.
pub fn ext_dim(m: &FiniteMonoid, field: crate::linalg::FieldSpec, case: ExtCase) -> usize {
    let (c1, c2) = case.characters();
    let z = cocycle_dim(m, field, c1, c2);
    let differ = c1 != c2 && !m.is_group();
    z - usize::from(differ)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    fn cyclic_group(n: usize) -> FiniteMonoid {
        FiniteMonoid::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), 0).unwrap()
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 1).is_err());
        assert!(FiniteMonoid::new(vec![vec![0, 1], vec![1]], 0).is_err());
        // unit ok but not associative
        let t = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 1]];
        assert!(FiniteMonoid::new(t, 0).is_err());
    }

    #[test]
    fn table_text_round_trip() {
        let g = cyclic_group(4);
        let back = FiniteMonoid::parse_table_text(&g.to_table_text()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn group_has_one_cell() {
        let g = cyclic_group(5);
        let c = Cells::compute(&g);
        assert_eq!(c.j_count(), 1);
        assert_eq!(c.h_count(), 1);
        assert_eq!(cl(&g, &c), 5);
        assert!(roundedness(&g).well);
    }

    #[test]
    fn additive_characters_of_z2() {
        let g = cyclic_group(2);
        assert_eq!(additive_hom_dim(&g, FieldSpec::Prime(2)), 1);
        assert_eq!(additive_hom_dim(&g, FieldSpec::Rationals), 0);
        for case in ExtCase::ALL {
            assert_eq!(ext_dim(&g, FieldSpec::Rationals, case), 0);
        }
    }

    #[test]
    fn opposite_is_involutive() {
        let m = crate::families::cyclic_monoid(2, 3);
        assert_eq!(m.opposite().opposite(), m);
    }
}
