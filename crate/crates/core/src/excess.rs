//! Involution factorizations `w = x y` and the excess statistic
//! `e(w) = min ℓ(x) + ℓ(y) - ℓ(w)`.
//!
//! Every factorization of `w` into two elements squaring to the identity
//! has the form `w = (w y) · y` with `y` a reverser of `w`: `y² = 1` and
//! `(w y)² = 1`. The identity counts as a reverser of any involution.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::Word;
use crate::group::{product_is_involutive, product_length, Element, Group};
use crate::involution::InvolutionTable;

#[derive(Clone, Debug)]
pub struct ReverserSet {
    pub owner: Element,
    /// In [`InvolutionTable`] order: identity first, then by length and word.
    pub members: Vec<Element>,
}

impl ReverserSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `w = x y` with `x = w y`; `defect = ℓ(x) + ℓ(y) - ℓ(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpartanPair {
    pub x: Element,
    pub y: Element,
    pub defect: usize,
}

/// Histogram of excess values over a whole group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcessDistribution {
    pub counts: BTreeMap<usize, u64>,
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    excess: usize,
    count: u64,
}

impl ExcessDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_excess(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// `excess,count` rows sorted by excess.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = csv::Writer::from_writer(Vec::new());
        for (&excess, &count) in &self.counts {
            out.serialize(CsvRow { excess, count })?;
        }
        let bytes = out.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut counts = BTreeMap::new();
        for row in reader.deserialize() {
            let row: CsvRow = row?;
            counts.insert(row.excess, row.count);
        }
        Ok(ExcessDistribution { counts })
    }
}

/// `{"w": word, "excess": e, "pairs": [{"x": word, "y": word}]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpartanReport {
    pub w: Word,
    pub excess: usize,
    pub pairs: Vec<PairReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub x: Word,
    pub y: Word,
}

impl SpartanReport {
    pub fn new(g: &Group, w: &Element, pairs: &[SpartanPair]) -> Self {
        SpartanReport {
            w: g.reduced_word(w),
            excess: pairs.first().map_or(0, |p| p.defect),
            pairs: pairs
                .iter()
                .map(|p| PairReport {
                    x: g.reduced_word(&p.x),
                    y: g.reduced_word(&p.y),
                })
                .collect(),
        }
    }
}

pub fn reversers_in(table: &InvolutionTable, w: &Element) -> ReverserSet {
    ReverserSet {
        owner: w.clone(),
        members: table
            .candidates()
            .iter()
            .filter(|y| product_is_involutive(w, y))
            .cloned()
            .collect(),
    }
}

/// All `y` with `y² = 1` and `(w y)² = 1`, the identity included.
pub fn reversers(g: &Group, w: &Element) -> ReverserSet {
    reversers_in(&InvolutionTable::new(g), w)
}

/// Some `y` with `w = (w y) y` a product of two elements squaring to 1.
pub fn is_strongly_real(g: &Group, w: &Element) -> Option<Element> {
    is_strongly_real_in(&InvolutionTable::new(g), w)
}

pub fn is_strongly_real_in(table: &InvolutionTable, w: &Element) -> Option<Element> {
    table.candidates().iter().find(|y| product_is_involutive(w, y)).cloned()
}

#[inline]
fn defect(w: &Element, y: &Element) -> usize {
    product_length(w, y) + y.length() - w.length()
}

/// `ℓ(w y) + ℓ(y) - ℓ(w)` for a reverser `y` of `w`.
pub fn epsilon(_g: &Group, w: &Element, y: &Element) -> Result<usize> {
    if !y.is_involutive() || !product_is_involutive(w, y) {
        return Err(Error::NotReverser);
    }
    Ok(defect(w, y))
}

/// Which reversers `y` a factorization `w = (w y) y` may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReverserScope {
    /// Every `y` with `y² = 1`, the identity included.
    #[default]
    All,
    /// Only `y` of order exactly 2. Differs from `All` only at `w = 1`,
    /// whose excess becomes 2 instead of 0.
    NonIdentity,
}

pub fn excess_in(table: &InvolutionTable, w: &Element) -> Result<usize> {
    excess_scoped(table, w, ReverserScope::All)
}

pub fn excess_scoped(table: &InvolutionTable, w: &Element, scope: ReverserScope) -> Result<usize> {
    let candidates = match scope {
        ReverserScope::All => table.candidates(),
        ReverserScope::NonIdentity => table.involutions(),
    };
    let mut best: Option<usize> = None;
    for y in candidates {
        if !product_is_involutive(w, y) {
            continue;
        }
        let e = defect(w, y);
        if best.is_none_or(|b| e < b) {
            best = Some(e);
            if e == 0 {
                break;
            }
        }
    }
    best.ok_or(Error::NotStronglyReal)
}

/// Exhaustive minimum over the reverser set.
pub fn excess(g: &Group, w: &Element) -> Result<usize> {
    excess_in(&InvolutionTable::new(g), w)
}

pub fn spartan_pairs_in(table: &InvolutionTable, w: &Element) -> Result<Vec<SpartanPair>> {
    let rev = reversers_in(table, w);
    let scored: Vec<(usize, &Element)> = rev.members.iter().map(|y| (defect(w, y), y)).collect();
    let best = scored.iter().map(|&(e, _)| e).min().ok_or(Error::NotStronglyReal)?;
    Ok(scored
        .into_iter()
        .filter(|&(e, _)| e == best)
        .map(|(e, y)| SpartanPair {
            x: w.compose(y),
            y: y.clone(),
            defect: e,
        })
        .collect())
}

/// Every factorization attaining the excess, in reverser order.
pub fn spartan_pairs(g: &Group, w: &Element) -> Result<Vec<SpartanPair>> {
    spartan_pairs_in(&InvolutionTable::new(g), w)
}

pub fn excess_distribution_in(g: &Group, table: &InvolutionTable) -> Result<ExcessDistribution> {
    let mut counts = BTreeMap::new();
    for w in g.elements() {
        *counts.entry(excess_in(table, w)?).or_insert(0) += 1;
    }
    Ok(ExcessDistribution { counts })
}

pub fn excess_distribution(g: &Group) -> Result<ExcessDistribution> {
    excess_distribution_in(g, &InvolutionTable::new(g))
}

/// Same histogram, with elements split across `threads` workers.
pub fn excess_distribution_parallel(g: &Group, threads: usize) -> Result<ExcessDistribution> {
    excess_distribution_with(g, ReverserScope::All, threads)
}

pub fn excess_distribution_with(g: &Group, scope: ReverserScope, threads: usize) -> Result<ExcessDistribution> {
    let table = InvolutionTable::new(g);
    let values: Vec<usize> = if threads <= 1 {
        g.elements()
            .map(|w| excess_scoped(&table, w, scope))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..g.order())
                .into_par_iter()
                .map(|i| excess_scoped(&table, g.element_at(i), scope))
                .collect::<Result<_>>()
        })?
    };
    let mut counts = BTreeMap::new();
    for e in values {
        *counts.entry(e).or_insert(0) += 1;
    }
    Ok(ExcessDistribution { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::type_a::TypeA;

    fn a3() -> Group {
        Group::from_symbol("A3").unwrap()
    }

    #[test]
    fn four_cycle_reversers() {
        let g = a3();
        let ta = TypeA::new(&g).unwrap();
        let w = ta.long_cycle();
        let rev = reversers(&g, &w);
        let mut cycles: Vec<String> = rev.members.iter().map(|y| ta.permutation(y).to_string()).collect();
        cycles.sort();
        assert_eq!(cycles, vec!["(12)(34)", "(13)", "(14)(23)", "(24)"]);
    }

    #[test]
    fn identity_reversers() {
        let g = a3();
        let rev = reversers(&g, &g.identity());
        assert_eq!(rev.len(), 10);
        assert!(rev.members[0].is_identity());
        let y = is_strongly_real(&g, &g.identity()).unwrap();
        assert!(y.is_identity());
    }

    #[test]
    fn involution_has_identity_reverser() {
        let g = a3();
        let rev = reversers(&g, g.generator(1));
        assert!(rev.members.iter().any(Element::is_identity));
        let pairs = spartan_pairs(&g, g.generator(1)).unwrap();
        assert!(pairs.iter().any(|p| &p.x == g.generator(1) && p.y.is_identity()));
    }

    #[test]
    fn epsilon_values() {
        let g = a3();
        let ta = TypeA::new(&g).unwrap();
        let w = ta.long_cycle();
        let y = ta.parse_cycles("(12)(34)").unwrap();
        assert_eq!(epsilon(&g, &w, &y).unwrap(), 2);
        let y = ta.parse_cycles("(13)").unwrap();
        assert_eq!(epsilon(&g, &w, &y).unwrap(), 6);
        let r = g.generator(2);
        assert_eq!(epsilon(&g, r, &g.identity()).unwrap(), 0);
        let not_rev = ta.parse_cycles("(12)").unwrap();
        assert!(matches!(epsilon(&g, &w, &not_rev), Err(Error::NotReverser)));
        assert!(matches!(epsilon(&g, &g.identity(), &w), Err(Error::NotReverser)));
    }

    #[test]
    fn excess_values() {
        let g = a3();
        let ta = TypeA::new(&g).unwrap();
        assert_eq!(excess(&g, &ta.long_cycle()).unwrap(), 2);
        assert_eq!(excess(&g, &ta.parse_cycles("(1324)").unwrap()).unwrap(), 0);
        assert_eq!(excess(&g, &g.identity()).unwrap(), 0);
        for w in g.elements().filter(|w| w.is_involution()) {
            assert_eq!(excess(&g, w).unwrap(), 0);
        }
    }

    #[test]
    fn strongly_real_dihedral() {
        let g = Group::from_symbol("A2").unwrap();
        let ta = TypeA::new(&g).unwrap();
        let w = ta.parse_cycles("(123)").unwrap();
        let y = is_strongly_real(&g, &w).unwrap();
        assert!(y.is_involution());
        assert!(w.compose(&y).is_involution());
    }

    #[test]
    fn a2_distribution() {
        let g = Group::from_symbol("A2").unwrap();
        let d = excess_distribution(&g).unwrap();
        assert_eq!(d.counts, BTreeMap::from([(0, 6)]));
    }

    #[test]
    fn non_identity_scope_moves_only_the_identity() {
        let g = Group::from_symbol("A3").unwrap();
        let table = InvolutionTable::new(&g);
        for w in g.elements() {
            let all = excess_in(&table, w).unwrap();
            let strict = excess_scoped(&table, w, ReverserScope::NonIdentity).unwrap();
            if w.is_identity() {
                assert_eq!((all, strict), (0, 2));
            } else {
                assert_eq!(all, strict);
            }
        }
        let d = excess_distribution_with(&g, ReverserScope::NonIdentity, 2).unwrap();
        assert_eq!(d.counts, BTreeMap::from([(0, 21), (2, 3)]));
    }

    #[test]
    fn parallel_matches_serial() {
        let g = Group::from_symbol("B3").unwrap();
        assert_eq!(
            excess_distribution(&g).unwrap(),
            excess_distribution_parallel(&g, 4).unwrap()
        );
    }

    #[test]
    fn csv_format() {
        let d = ExcessDistribution {
            counts: BTreeMap::from([(2, 173), (0, 489)]),
        };
        let text = d.to_csv().unwrap();
        assert_eq!(text, "excess,count\n0,489\n2,173\n");
        assert_eq!(ExcessDistribution::from_csv(&text).unwrap(), d);
        assert_eq!(d.total(), 662);
        assert_eq!(d.max_excess(), Some(2));
    }

    #[test]
    fn spartan_report_round_trips() {
        let g = a3();
        let w = g.parse_element("1 2 3").unwrap();
        let pairs = spartan_pairs(&g, &w).unwrap();
        let report = SpartanReport::new(&g, &w, &pairs);
        assert_eq!(report.excess, 2);
        let json = serde_json::to_string(&report).unwrap();
        let back: SpartanReport = serde_json::from_str(&json).unwrap();
        assert_eq!(g.element_from_word(&back.w).unwrap(), w);
        for (p, r) in pairs.iter().zip(&back.pairs) {
            assert_eq!(g.element_from_word(&r.x).unwrap(), p.x);
            assert_eq!(g.element_from_word(&r.y).unwrap(), p.y);
        }
    }
}
