//! Named monoids and the tabular reports the command line prints.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::families;
use crate::linalg::{rank_int, FieldSpec};
use crate::monoid::{self, Admissibility, Cells, ExtCase, FiniteMonoid, Truncation};
use crate::protocol::{self, DhReport, DiagramPlatform, Platform, SuSpec, Transcript};
use crate::rep::{self, DimRow, Estimate};

/// A monoid the tools can build by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Family(Family, usize),
    Transformation(usize),
    /// `⟨a | a^{i+p} = a^i⟩`
    Cyclic { index: usize, period: usize },
    Table(String),
}

impl Source {
    pub fn build(&self) -> Result<FiniteMonoid> {
        match self {
            Source::Family(f, n) => families::family_monoid(*f, *n),
            Source::Transformation(n) => families::transformation_monoid(*n),
            Source::Cyclic { index, period } => {
                if *period == 0 {
                    return Err(Error::Invalid("period must be positive".into()));
                }
                Ok(families::cyclic_monoid(*index, *period))
            }
            Source::Table(text) => FiniteMonoid::parse_table_text(text),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Source::Family(f, n) => format!("{}_{n}", f.short_name()),
            Source::Transformation(n) => format!("T_{n}"),
            Source::Cyclic { index, period } => format!("C({index},{period})"),
            Source::Table(_) => "table".into(),
        }
    }
}

/// The J-class of a family monoid holding the diagrams of width `w`.
pub fn j_of_width(m: &FiniteMonoid, cells: &Cells, w: usize) -> Result<usize> {
    (0..m.size())
        .find(|&a| families::label_width(m.label(a)) == Some(w))
        .map(|a| cells.j_class[a])
        .ok_or_else(|| Error::Invalid(format!("no cell of width {w}")))
}

/// Truncation by widths: keep widths `≤ low` (plus a fresh unit) and
/// collapse widths `< high` to zero.
pub fn truncate_widths(
    family: Family,
    n: usize,
    low: Option<usize>,
    high: Option<usize>,
) -> Result<(FiniteMonoid, Cells, Truncation)> {
    let m = families::family_monoid(family, n)?;
    let cells = Cells::compute(&m);
    let lo = low.filter(|&k| k < n).map(|k| j_of_width(&m, &cells, k)).transpose()?;
    let hi = high.map(|k| j_of_width(&m, &cells, k)).transpose()?;
    let t = monoid::truncate(&m, &cells, lo, hi)?;
    Ok((m, cells, t))
}

#[derive(Clone, Debug, Serialize)]
pub struct CellRow {
    pub j: usize,
    pub size: usize,
    pub l_classes: usize,
    pub r_classes: usize,
    pub h_size: usize,
    pub idempotent: Option<String>,
    /// through strands, for diagram labels
    pub width: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub monoid: String,
    pub size: usize,
    /// bottom (units) first
    pub cells: Vec<CellRow>,
    pub total_order: bool,
    pub cl: usize,
    pub admissible: Admissibility,
    pub trivial_faithful_possible: bool,
}

pub fn cell_report(name: &str, m: &FiniteMonoid) -> CellReport {
    let cells = Cells::compute(m);
    let mut js: Vec<usize> = (0..cells.j_count()).collect();
    // a linear extension of ≤_lr: count what lies below
    js.sort_by_key(|&j| ((0..cells.j_count()).filter(|&x| cells.j_le(x, j)).count(), j));
    let rows = js
        .into_iter()
        .map(|j| {
            let first = cells.j_members(j)[0];
            CellRow {
                j,
                size: cells.j_members(j).len(),
                l_classes: cells.l_classes_in(j).len(),
                r_classes: cells.r_classes_in(j).len(),
                h_size: cells.h_size_in(j),
                idempotent: cells.idempotent_in_j(j).map(|e| m.label(e).to_string()),
                width: families::label_width(m.label(first)),
            }
        })
        .collect();
    CellReport {
        monoid: name.into(),
        size: m.size(),
        cells: rows,
        total_order: cells.j_order_is_total(),
        cl: monoid::cl(m, &cells),
        admissible: monoid::admissibility(m, &cells),
        trivial_faithful_possible: monoid::trivial_faithful_possible(m, &cells),
    }
}

/// Simple dimensions and semisimple dimensions for widths `k ≤ n ≤ n_max`.
///
/// Temperley–Lieb uses the closed form, planar rook the binomials; the other
/// planar families fall back to Gram ranks of enumerated cells.
pub fn dims_table(family: Family, n_max: usize, p: u64) -> Result<Vec<DimRow>> {
    let field = FieldSpec::from_char(p)?;
    match family {
        Family::TemperleyLieb => rep::tl_dims_table(n_max, p),
        Family::PlanarRook | Family::Motzkin | Family::PlanarPartition => {
            let mut rows = Vec::new();
            for n in 0..=n_max {
                for k in families::widths(family, n) {
                    let (dim, source) = if family == Family::PlanarRook {
                        (rep::ssdim(family, n, k)?.to_string(), "formula")
                    } else {
                        (rep::gram_rank_dim(family, n, k, field)?.to_string(), "gram")
                    };
                    rows.push(DimRow { n, k, dim, ssdim: rep::ssdim(family, n, k)?.to_string(), source: source.into() });
                }
            }
            Ok(rows)
        }
        _ => Err(Error::Unsupported(format!(
            "{family} has nontrivial maximal subgroups; simple dimensions need the modular \
             representation theory of symmetric groups, which is not implemented (use ssdims)"
        ))),
    }
}

/// `(k, ssdim)` for every width of the family at `n`, ascending in `k`.
pub fn ssdim_row(family: Family, n: usize) -> Result<Vec<(usize, BigUint)>> {
    let mut ks = families::widths(family, n);
    ks.sort_unstable();
    ks.into_iter().map(|k| Ok((k, rep::ssdim(family, n, k)?))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub field: String,
    pub rows: Vec<Vec<i64>>,
    pub rank: usize,
}

pub fn gram_report(family: Family, n: usize, k: usize, p: u64) -> Result<GramReport> {
    let field = FieldSpec::from_char(p)?;
    let g = rep::gram_matrix(family, n, k)?;
    let rows = (0..g.rows()).map(|i| g.row(i).to_vec()).collect();
    Ok(GramReport { family, n, k, field: field.name(), rows, rank: rank_int(&g, field) })
}

/// The gap of a family truncated to widths `≤ k` (no truncation when
/// `k ≥ n`), from closed forms where they are exact and the engine otherwise.
pub fn gap_exact(family: Family, n: usize, k: usize, p: u64) -> Result<Estimate> {
    let field = FieldSpec::from_char(p)?;
    match family {
        Family::TemperleyLieb if n > 4 => rep::gap_tl(n, k.min(n), p),
        Family::PlanarRook => rep::gap_pro(n, 0, k.min(n)),
        _ => {
            let (_, _, t) = truncate_widths(family, n, Some(k), None)?;
            rep::gap_from_engine(&t.monoid, field)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub monoid: String,
    pub field: String,
    pub additive_hom_dim: usize,
    pub ext: Vec<(String, usize)>,
}

pub fn ext_report(name: &str, m: &FiniteMonoid, p: u64, cases: &[ExtCase]) -> Result<ExtReport> {
    let field = FieldSpec::from_char(p)?;
    Ok(ExtReport {
        monoid: name.into(),
        field: field.name(),
        additive_hom_dim: monoid::additive_hom_dim(m, field),
        ext: cases.iter().map(|&c| (c.name().to_string(), monoid::ext_dim(m, field, c))).collect(),
    })
}

/// Period data for the listed elements (all when `only` is empty).
pub fn periods(m: &FiniteMonoid, only: &[String]) -> Result<Vec<DhReport>> {
    let cells = Cells::compute(m);
    let idx: Vec<usize> = if only.is_empty() {
        (0..m.size()).collect()
    } else {
        only.iter()
            .map(|l| m.find_label(l).ok_or_else(|| Error::Invalid(format!("no element labelled {l}"))))
            .collect::<Result<_>>()?
    };
    Ok(idx.into_iter().map(|a| protocol::dh_suitability(m, &cells, a)).collect())
}

/// Members of the family of width at most `low` (all when `None`).
fn public_pool(family: Family, n: usize, low: Option<usize>) -> Result<Vec<Diagram>> {
    let all = families::enumerate(family, n)?;
    let pool: Vec<Diagram> = all.into_iter().filter(|d| low.map_or(true, |k| d.width() <= k)).collect();
    if pool.is_empty() {
        return Err(Error::Invalid("no elements of the requested width".into()));
    }
    Ok(pool)
}

fn platform(family: Family, n: usize, low: Option<usize>) -> DiagramPlatform {
    let name = match low {
        Some(k) if k < n => format!("{}_{n},>={k}", family.short_name()),
        _ => format!("{}_{n}", family.short_name()),
    };
    DiagramPlatform { n, name }
}

/// Generator indices `1..n−1` split with a gap of two: the halves commute.
pub fn split_indices(n: usize) -> (Vec<usize>, Vec<usize>) {
    if n < 4 {
        return (Vec::new(), Vec::new());
    }
    let cut = (n - 2) / 2;
    ((1..=cut).collect(), (cut + 2..n).collect())
}

/// The commuting-subsets exchange on a diagram family; the public element
/// is drawn from the ideal of widths `≤ low` with the same seed.
pub fn su_exchange(
    family: Family,
    n: usize,
    low: Option<usize>,
    split: Option<(Vec<usize>, Vec<usize>)>,
    word_len: usize,
    seed: u64,
) -> Result<Transcript> {
    let (a_idx, b_idx) = split.unwrap_or_else(|| split_indices(n));
    let swaps = !family.is_planar();
    let a_gens = protocol::local_generators(n, &a_idx, swaps)?;
    let b_gens = protocol::local_generators(n, &b_idx, swaps)?;
    if let Some(g) = a_gens.iter().chain(&b_gens).find(|g| !g.is_member(family)) {
        return Err(Error::Unsupported(format!("{family} does not contain the local generator {g}")));
    }
    let pool = public_pool(family, n, low)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = pool.choose(&mut rng).unwrap().clone();
    protocol::run_su(&platform(family, n, low), &SuSpec { g, a_gens, b_gens, word_len }, seed)
}

/// Stickel's exchange with a random noncommuting public pair.
pub fn stickel_exchange(family: Family, n: usize, low: Option<usize>, max_exp: u64, seed: u64) -> Result<Transcript> {
    let pool = public_pool(family, n, low)?;
    let plat = platform(family, n, low);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let g = pool.choose(&mut rng).unwrap();
        let h = pool.choose(&mut rng).unwrap();
        if !plat.commute(g, h) {
            return protocol::run_stickel(&plat, g, h, max_exp, seed);
        }
    }
    Err(Error::Invalid("no noncommuting pair found; the pool looks commutative".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tl4_truncation_has_fourteen_elements() {
        let (_, _, t) = truncate_widths(Family::TemperleyLieb, 4, Some(2), None).unwrap();
        assert_eq!(t.monoid.size(), 14);
        let (_, _, t) = truncate_widths(Family::PlanarRook, 3, Some(1), Some(1)).unwrap();
        let r = cell_report("t", &t.monoid);
        let sizes: Vec<usize> = r.cells.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 9, 1]);
    }

    #[test]
    fn cells_come_bottom_first() {
        let m = Source::Family(Family::TemperleyLieb, 4).build().unwrap();
        let r = cell_report("TL_4", &m);
        let widths: Vec<Option<usize>> = r.cells.iter().map(|c| c.width).collect();
        assert_eq!(widths, vec![Some(4), Some(2), Some(0)]);
        assert!(r.total_order);
    }

    #[test]
    fn gap_dispatch() {
        assert_eq!(gap_exact(Family::TemperleyLieb, 3, 3, 0).unwrap().ceil(), Some(2.into()));
        assert_eq!(gap_exact(Family::TemperleyLieb, 6, 6, 0).unwrap().ceil(), Some(4.into()));
        assert_eq!(gap_exact(Family::PlanarRook, 5, 5, 2).unwrap().ceil(), Some(5.into()));
    }

    #[test]
    fn split_commutes() {
        assert_eq!(split_indices(10), (vec![1, 2, 3, 4], vec![6, 7, 8, 9]));
        let t = su_exchange(Family::Brauer, 6, None, None, 5, 3).unwrap();
        assert!(t.equal);
        assert!(su_exchange(Family::Rook, 4, None, None, 5, 3).is_err());
    }

    #[test]
    fn non_tl_dims() {
        let rows = dims_table(Family::Motzkin, 3, 0).unwrap();
        assert!(rows.iter().all(|r| r.source == "gram"));
        assert!(dims_table(Family::Brauer, 3, 0).is_err());
    }
}
