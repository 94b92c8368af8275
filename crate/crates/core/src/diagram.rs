//! Partition diagrams on `n` bottom and `n` top points.
//!
//! Bottom points are `0..n`, top points are `n..2n`, both read left to right.
//! A diagram is stored as a restricted growth string: `labels[p]` is the
//! index of the block containing `p`, and blocks are numbered in order of
//! their smallest point. This makes the canonical form unique, so derived
//! equality is partition equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    labels: Box<[u8]>,
}

/// Union-find over a fixed number of points.
struct Dsu {
    parent: Vec<u16>,
}

impl Dsu {
    fn new(size: usize) -> Self {
        Dsu { parent: (0..size as u16).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u16;
        }
    }
}

/// Relabel arbitrary block keys into a restricted growth string.
fn canonical_labels<I: IntoIterator<Item = usize>>(keys: I, len: usize) -> Box<[u8]> {
    let mut seen: Vec<(usize, u8)> = Vec::with_capacity(len);
    let mut out = Vec::with_capacity(len);
    for k in keys {
        let id = match seen.iter().find(|(key, _)| *key == k) {
            Some(&(_, id)) => id,
            None => {
                let id = seen.len() as u8;
                seen.push((k, id));
                id
            }
        };
        out.push(id);
    }
    out.into_boxed_slice()
}

impl Diagram {
    /// Largest supported strand count (2n points must fit the label type).
    pub const MAX_N: usize = 100;

    pub fn identity(n: usize) -> Diagram {
        Diagram::from_key_fn(n, |p| p % n.max(1))
    }

    /// Build from an arbitrary assignment of points to block keys.
    pub fn from_key_fn<F: Fn(usize) -> usize>(n: usize, key: F) -> Diagram {
        assert!(n <= Self::MAX_N, "strand count {n} too large");
        Diagram { n, labels: canonical_labels((0..2 * n).map(key), 2 * n) }
    }

    /// Build from explicit blocks; checks that they partition `0..2n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Diagram> {
        if n > Self::MAX_N {
            return Err(Error::Parse(format!("strand count {n} exceeds {}", Self::MAX_N)));
        }
        let mut owner = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &p in block {
                if p >= 2 * n {
                    return Err(Error::Parse(format!("point {p} out of range for n={n}")));
                }
                if owner[p] != usize::MAX {
                    return Err(Error::Parse(format!("point {p} appears twice")));
                }
                owner[p] = b;
            }
        }
        if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Parse(format!("point {p} is not covered")));
        }
        Ok(Diagram::from_key_fn(n, |p| owner[p]))
    }

    /// Perfect or partial matching given as a list of pairs; unlisted points are singletons.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Diagram {
        let mut key: Vec<usize> = (0..2 * n).collect();
        for &(a, b) in pairs {
            key[b] = a;
            key[a] = a;
        }
        Diagram::from_key_fn(n, |p| key[p])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks sorted internally and by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (p, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(p);
        }
        blocks
    }

    pub fn is_top(&self, p: usize) -> bool {
        p >= self.n
    }

    /// `self ∘ other`: `self` stacked on top of `other`.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self.compose_counting(other).0)
    }

    /// Composition that also reports how many components were closed off in the middle.
    pub fn compose_counting(&self, other: &Diagram) -> (Diagram, usize) {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        // other: 0..2n as is; self: point p shifted to p + n.
        let mut dsu = Dsu::new(3 * n);
        let mut first = [u16::MAX; 256];
        for (p, &l) in other.labels.iter().enumerate() {
            let f = &mut first[l as usize];
            if *f == u16::MAX {
                *f = p as u16;
            } else {
                dsu.union(*f as usize, p);
            }
        }
        let mut first = [u16::MAX; 256];
        for (p, &l) in self.labels.iter().enumerate() {
            let f = &mut first[l as usize];
            if *f == u16::MAX {
                *f = (p + n) as u16;
            } else {
                dsu.union(*f as usize, p + n);
            }
        }
        let mut roots = Vec::with_capacity(2 * n);
        for p in 0..n {
            roots.push(dsu.find(p));
        }
        for p in 2 * n..3 * n {
            roots.push(dsu.find(p));
        }
        let mut closed = 0;
        for p in n..2 * n {
            let r = dsu.find(p);
            if r == p && !roots.contains(&r) {
                closed += 1;
            }
        }
        let labels = canonical_labels(roots, 2 * n);
        (Diagram { n, labels }, closed)
    }

    /// Reflection in the horizontal axis.
    pub fn star(&self) -> Diagram {
        let n = self.n;
        let l = &self.labels;
        Diagram::from_key_fn(n, |p| if p < n { l[p + n] as usize } else { l[p - n] as usize })
    }

    fn through_flags(&self) -> Vec<(bool, bool)> {
        let mut flags = vec![(false, false); self.block_count()];
        for (p, &l) in self.labels.iter().enumerate() {
            if p < self.n {
                flags[l as usize].0 = true;
            } else {
                flags[l as usize].1 = true;
            }
        }
        flags
    }

    /// Number of through strands.
    pub fn width(&self) -> usize {
        self.through_flags().iter().filter(|&&(b, t)| b && t).count()
    }

    /// Position of a point on the boundary circle: bottom left to right,
    /// then top right to left.
    pub fn cyclic_position(n: usize, p: usize) -> usize {
        if p < n {
            p
        } else {
            3 * n - 1 - p
        }
    }

    pub fn point_at_cyclic(n: usize, q: usize) -> usize {
        if q < n {
            q
        } else {
            3 * n - 1 - q
        }
    }

    /// Non-crossing in the cyclic boundary order.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let sizes = self.block_sizes();
        let mut seen = vec![0usize; sizes.len()];
        let mut stack: Vec<u8> = Vec::new();
        for q in 0..2 * n {
            let b = self.labels[Self::point_at_cyclic(n, q)];
            if seen[b as usize] > 0 {
                if stack.last() != Some(&b) {
                    return false;
                }
            } else {
                stack.push(b);
            }
            seen[b as usize] += 1;
            if seen[b as usize] == sizes[b as usize] {
                stack.pop();
            }
        }
        true
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &l in self.labels.iter() {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// `(bottom points, top points)` of every block.
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        let mut prof = vec![(0, 0); self.block_count()];
        for (p, &l) in self.labels.iter().enumerate() {
            if p < self.n {
                prof[l as usize].0 += 1;
            } else {
                prof[l as usize].1 += 1;
            }
        }
        prof
    }

    pub fn is_member(&self, family: Family) -> bool {
        let prof = self.block_profile();
        let ok = match family {
            Family::TemperleyLieb | Family::Brauer => prof.iter().all(|&(b, t)| b + t == 2),
            Family::Motzkin | Family::RookBrauer => prof.iter().all(|&(b, t)| b + t <= 2),
            Family::PlanarRook | Family::Rook => prof.iter().all(|&(b, t)| b <= 1 && t <= 1),
            Family::Symmetric => prof.iter().all(|&(b, t)| b == 1 && t == 1),
            Family::Partition | Family::PlanarPartition => true,
        };
        ok && (!family.is_planar() || self.is_planar())
    }

    /// Split into bottom half, middle permutation and top half.
    pub fn factorize(&self) -> Factorization {
        let n = self.n;
        let bottom = Half::from_side(self, false);
        let top = Half::from_side(self, true);
        let k = bottom.through.len();
        let mut perm = vec![0; k];
        for (i, &bb) in bottom.through.iter().enumerate() {
            let j = top.through.iter().position(|&tb| tb == bb).expect("through block");
            perm[i] = j;
        }
        // halves keep the diagram's own block ids for through blocks; renumber.
        let bottom = bottom.normalized();
        let top = top.normalized();
        Factorization { n, width: k, bottom, middle_perm: perm, top }
    }

    /// The same diagram with its through strands reconnected without crossings.
    pub fn untwisted(&self) -> Diagram {
        let mut f = self.factorize();
        f.middle_perm = (0..f.width).collect();
        f.reassemble()
    }

    /// 1-based display form, e.g. `{1,2}{1',2'}{3,3'}`.
    pub fn display(&self) -> String {
        let n = self.n;
        let mut s = String::new();
        for b in self.blocks() {
            s.push('{');
            let parts: Vec<String> = b
                .iter()
                .map(|&p| if p < n { format!("{}", p + 1) } else { format!("{}'", p - n + 1) })
                .collect();
            s.push_str(&parts.join(","));
            s.push('}');
        }
        s
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        let blocks: Vec<String> = self
            .blocks()
            .into_iter()
            .map(|b| b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Diagram> {
        let (n, rest) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad strand count in {s:?}")))?;
        let mut blocks = Vec::new();
        if !rest.trim().is_empty() {
            for part in rest.split('|') {
                let block: std::result::Result<Vec<usize>, _> =
                    part.split(',').map(|x| x.trim().parse::<usize>()).collect();
                blocks.push(block.map_err(|_| Error::Parse(format!("bad block {part:?}")))?);
            }
        }
        Diagram::from_blocks(n, &blocks)
    }
}

/// The diagram families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Family {
    TemperleyLieb,
    Motzkin,
    Brauer,
    PlanarRook,
    Rook,
    RookBrauer,
    PlanarPartition,
    Partition,
    Symmetric,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::TemperleyLieb,
        Family::Motzkin,
        Family::Brauer,
        Family::PlanarRook,
        Family::Rook,
        Family::RookBrauer,
        Family::PlanarPartition,
        Family::Partition,
        Family::Symmetric,
    ];

    pub fn is_planar(self) -> bool {
        matches!(
            self,
            Family::TemperleyLieb | Family::Motzkin | Family::PlanarRook | Family::PlanarPartition
        )
    }

    /// Families whose blocks all have size two, so widths share the parity of `n`.
    pub fn is_matching(self) -> bool {
        matches!(self, Family::TemperleyLieb | Family::Brauer | Family::Symmetric)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Family::TemperleyLieb => "tl",
            Family::Motzkin => "motzkin",
            Family::Brauer => "brauer",
            Family::PlanarRook => "prook",
            Family::Rook => "rook",
            Family::RookBrauer => "rookbrauer",
            Family::PlanarPartition => "ppartition",
            Family::Partition => "partition",
            Family::Symmetric => "sym",
        }
    }

    /// Case-insensitive lookup of the CLI names (plus a few aliases).
    pub fn parse(name: &str) -> Option<Family> {
        let name = name.to_ascii_lowercase();
        Some(match name.as_str() {
            "tl" | "temperleylieb" => Family::TemperleyLieb,
            "motzkin" | "mo" => Family::Motzkin,
            "brauer" | "br" => Family::Brauer,
            "prook" | "pro" | "planarrook" => Family::PlanarRook,
            "rook" | "ro" => Family::Rook,
            "rookbrauer" | "robr" => Family::RookBrauer,
            "ppartition" | "ppa" | "planarpartition" => Family::PlanarPartition,
            "partition" | "pa" => Family::Partition,
            "sym" | "symmetric" => Family::Symmetric,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// One side of a diagram: the partition of `n` points into blocks, some of
/// which are marked as through blocks, listed left to right by their
/// leftmost point on this side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half {
    pub n: usize,
    /// block id per point (restricted growth string)
    pub labels: Vec<u8>,
    /// through block ids in order of their leftmost point
    pub through: Vec<u8>,
}

impl Half {
    fn from_side(d: &Diagram, top: bool) -> Half {
        let n = d.n;
        let flags = d.through_flags();
        let offset = if top { n } else { 0 };
        let labels: Vec<u8> = (0..n).map(|i| d.labels[offset + i]).collect();
        let mut through = Vec::new();
        for &l in &labels {
            let (b, t) = flags[l as usize];
            if b && t && !through.contains(&l) {
                through.push(l);
            }
        }
        Half { n, labels, through }
    }

    fn normalized(&self) -> Half {
        let mut map: Vec<(u8, u8)> = Vec::new();
        let mut labels = Vec::with_capacity(self.n);
        for &l in &self.labels {
            let id = match map.iter().find(|(a, _)| *a == l) {
                Some(&(_, b)) => b,
                None => {
                    let b = map.len() as u8;
                    map.push((l, b));
                    b
                }
            };
            labels.push(id);
        }
        let through = self
            .through
            .iter()
            .map(|l| map.iter().find(|(a, _)| a == l).unwrap().1)
            .collect();
        Half { n: self.n, labels, through }
    }

    pub fn width(&self) -> usize {
        self.through.len()
    }
}

/// `a = γ ∘ σ ∘ β` with `β` the bottom half, `σ` a permutation of the
/// through strands and `γ` the top half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub width: usize,
    pub bottom: Half,
    /// `middle_perm[i] = j`: the i-th bottom through strand ends at the j-th top one.
    pub middle_perm: Vec<usize>,
    pub top: Half,
}

impl Factorization {
    pub fn reassemble(&self) -> Diagram {
        let n = self.n;
        let nb = self.bottom.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        // top block ids live after the bottom ones, except through blocks,
        // which are identified with their bottom partner
        let mut top_key = vec![usize::MAX; 256];
        for (i, &bb) in self.bottom.through.iter().enumerate() {
            let tb = self.top.through[self.middle_perm[i]];
            top_key[tb as usize] = bb as usize;
        }
        let keys: Vec<usize> = (0..2 * n)
            .map(|p| {
                if p < n {
                    self.bottom.labels[p] as usize
                } else {
                    let l = self.top.labels[p - n] as usize;
                    if top_key[l] != usize::MAX {
                        top_key[l]
                    } else {
                        nb + l
                    }
                }
            })
            .collect();
        Diagram::from_key_fn(n, |p| keys[p])
    }

    pub fn is_untwisted(&self) -> bool {
        self.middle_perm.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Standard generators, 1-based as in the literature.
pub mod gens {
    use super::Diagram;

    /// `u_i`: cap on bottom points i, i+1 and cup on the same top points.
    pub fn cap_cup(n: usize, i: usize) -> Diagram {
        assert!(i >= 1 && i < n);
        let (a, b) = (i - 1, i);
        let key = move |p: usize| {
            let q = p % n;
            if q == a || q == b {
                if p < n { 1000 } else { 1001 }
            } else {
                q
            }
        };
        Diagram::from_key_fn(n, key)
    }

    /// `s_i`: crossing of strands i and i+1.
    pub fn transposition(n: usize, i: usize) -> Diagram {
        assert!(i >= 1 && i < n);
        let (a, b) = (i - 1, i);
        Diagram::from_key_fn(n, move |p| {
            if p < n {
                p
            } else {
                let q = p - n;
                if q == a {
                    b
                } else if q == b {
                    a
                } else {
                    q
                }
            }
        })
    }

    /// Identity with strand i cut into two singletons.
    pub fn cut(n: usize, i: usize) -> Diagram {
        assert!(i >= 1 && i <= n);
        let a = i - 1;
        Diagram::from_key_fn(n, move |p| if p % n == a { 1000 + p } else { p % n })
    }

    /// Identity with strands i and i+1 fused into one block.
    pub fn merge(n: usize, i: usize) -> Diagram {
        assert!(i >= 1 && i < n);
        let (a, b) = (i - 1, i);
        Diagram::from_key_fn(n, move |p| {
            let q = p % n;
            if q == b {
                a
            } else {
                q
            }
        })
    }

    /// Planar rook shift: bottom i+1 joined to top i; bottom i and top i+1 are singletons.
    pub fn shift_left(n: usize, i: usize) -> Diagram {
        assert!(i >= 1 && i < n);
        let (a, b) = (i - 1, i);
        Diagram::from_key_fn(n, move |p| {
            if p < n {
                if p == a {
                    1000
                } else if p == b {
                    a
                } else {
                    p
                }
            } else {
                let q = p - n;
                if q == b {
                    1001
                } else {
                    q
                }
            }
        })
    }

    /// `star(shift_left)`: bottom i joined to top i+1.
    pub fn shift_right(n: usize, i: usize) -> Diagram {
        shift_left(n, i).star()
    }
}

#[cfg(test)]
mod tests {
    use super::gens::*;
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn serialization_round_trip() {
        let a = d("3;0,1|3,4|2,5");
        assert_eq!(a.to_string(), "3;0,1|2,5|3,4");
        assert_eq!(d(&a.to_string()), a);
        assert!("3;0,1|3,4".parse::<Diagram>().is_err());
        assert!("2;0,1|1,2|3".parse::<Diagram>().is_err());
    }

    #[test]
    fn tl_relations() {
        let u1 = cap_cup(3, 1);
        let u2 = cap_cup(3, 2);
        assert_eq!(u1.compose(&u1).unwrap(), u1);
        assert_eq!(u1.compose(&u2.compose(&u1).unwrap()).unwrap(), u1);
        assert_eq!(u1.to_string(), "3;0,1|2,5|3,4");
        let id = Diagram::identity(3);
        assert_eq!(id.compose(&u2).unwrap(), u2);
        assert!(u1.compose(&Diagram::identity(4)).is_err());
    }

    #[test]
    fn closed_loops_are_counted_and_dropped() {
        let u1 = cap_cup(2, 1);
        let (p, loops) = u1.compose_counting(&u1);
        assert_eq!(p, u1);
        assert_eq!(loops, 1);
    }

    #[test]
    fn star_and_width() {
        let u = cap_cup(5, 2);
        assert_eq!(u.star(), u);
        assert_eq!(u.width(), 3);
        assert_eq!(Diagram::identity(4).width(), 4);
        let singles = Diagram::from_key_fn(3, |p| p);
        assert_eq!(singles.width(), 0);
        let s = shift_left(3, 1);
        assert_eq!(s.star(), shift_right(3, 1));
        assert_ne!(s.star(), s);
    }

    #[test]
    fn membership() {
        let s = transposition(2, 1);
        assert!(!s.is_member(Family::TemperleyLieb));
        assert!(s.is_member(Family::Brauer));
        assert!(s.is_member(Family::Symmetric));
        let u = cap_cup(3, 1);
        assert!(!u.is_member(Family::Rook));
        assert!(u.is_member(Family::Motzkin));
        for f in Family::ALL {
            assert!(Diagram::identity(4).is_member(f));
        }
        assert!(merge(3, 1).is_member(Family::PlanarPartition));
        assert!(!merge(3, 1).is_member(Family::RookBrauer));
        assert!(shift_left(3, 2).is_member(Family::PlanarRook));
    }

    #[test]
    fn factorization_of_planar_diagram() {
        // a cap on bottom points 2,3, two cups on top, two through strands
        let a = d("4;0,4|1,5|2,3|6,7");
        let f = a.factorize();
        assert_eq!(f.width, 2);
        assert!(f.is_untwisted());
        assert_eq!(f.reassemble(), a);
        let b = d("4;0,5|1,4|2,3|6,7");
        let g = b.factorize();
        assert_eq!(g.middle_perm, vec![1, 0]);
        assert_eq!(g.reassemble(), b);
        assert_eq!(b.untwisted(), a);
    }
}
