//! The symmetric-group realization of `A_{n-1}`.
//!
//! Generator `r` is the transposition `(r r+1)` and positive root indices
//! correspond to `e_a - e_b` with `a < b`. Permutations compose as functions,
//! right to left, matching [`Element::compose`]: the word `1 2 3` in `A_3`
//! is `(12)(23)(34) = (1234)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::excess::SpartanPair;
use crate::group::{Element, Group, SignedRoot};

/// A permutation of `1..=n` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// One-line form; `images[i - 1]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::BadWord(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            if cycle.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::BadWord(format!("cycle {cycle:?} out of range 1..={n}")));
            }
            let mut c = Permutation::identity(n);
            for (k, &i) in cycle.iter().enumerate() {
                c.images[i - 1] = cycle[(k + 1) % cycle.len()];
            }
            p = c.compose(&p);
        }
        Permutation::from_images(p.images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation, `()` for the identity. Points are run together when
/// every point is a single digit, as in `(12)(34)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() <= 9 { "" } else { " " };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl Permutation {
    /// Parses cycle notation of degree `n`: `(12)(34)`, or `(1 2 10)` with
    /// separators for multi-digit points.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::BadWord(text.to_string());
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let inner = body[..end].trim();
            let pts: Vec<usize> = if inner.contains(|c: char| c.is_whitespace() || c == ',') {
                inner
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            cycles.push(pts);
            rest = body[end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line form, e.g. `"2 3 4 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::BadWord(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// A type `A_{n-1}` group together with its root labelling by pairs.
#[derive(Clone, Debug)]
pub struct TypeA<'g> {
    group: &'g Group,
    n: usize,
    /// `(a, b)` with `a < b` for each positive root index.
    pairs: Vec<(usize, usize)>,
    /// Root index of `e_a - e_b`, at `[a - 1][b - 1]`.
    index: Vec<Vec<usize>>,
}

impl<'g> TypeA<'g> {
    pub fn new(group: &'g Group) -> Result<Self> {
        if !group.matrix().is_type_a() {
            return Err(Error::NotTypeA);
        }
        let n = group.rank() + 1;
        let mut index = vec![vec![usize::MAX; n]; n];
        let mut pairs = Vec::with_capacity(group.num_positive_roots());
        for (i, root) in group.positive_roots().iter().enumerate() {
            let support = root.support();
            let lo = support.iter().next().ok_or(Error::NotTypeA)?;
            let hi = support.max();
            let unit = root.coefficients().iter().enumerate().all(|(r, &c)| {
                let expected = if (lo - 1..hi).contains(&r) { 1.0 } else { 0.0 };
                (c - expected).abs() < 1e-9
            });
            if !unit {
                return Err(Error::NotTypeA);
            }
            let (a, b) = (lo, hi + 1);
            index[a - 1][b - 1] = i;
            pairs.push((a, b));
        }
        Ok(TypeA { group, n, pairs, index })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    /// Degree of the symmetric group.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// `(a, b)` such that positive root `i` is `e_a - e_b`.
    pub fn root_pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn root_index(&self, a: usize, b: usize) -> usize {
        self.index[a - 1][b - 1]
    }

    /// Product of the transpositions along a reduced word.
    pub fn permutation(&self, w: &Element) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &r in self.group.reduced_word(w).letters() {
            p = p.compose(&Permutation::transposition(self.n, r, r + 1));
        }
        p
    }

    /// The element sending `e_a - e_b` to `e_{p(a)} - e_{p(b)}`.
    pub fn element(&self, p: &Permutation) -> Result<Element> {
        if p.degree() != self.n {
            return Err(Error::BadWord(format!(
                "{p} has degree {}, expected {}",
                p.degree(),
                self.n
            )));
        }
        let images: Vec<SignedRoot> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (c, d) = (p.apply(a), p.apply(b));
                if c < d {
                    SignedRoot::positive(self.root_index(c, d))
                } else {
                    SignedRoot::negative(self.root_index(d, c))
                }
            })
            .collect();
        Ok(Element::from_images(images))
    }

    /// Parses cycle notation such as `(12)(34)`.
    pub fn parse_cycles(&self, text: &str) -> Result<Element> {
        self.element(&Permutation::parse_cycles(self.n, text)?)
    }

    /// `(1 2 ... n)`.
    pub fn long_cycle(&self) -> Element {
        let cycle: Vec<usize> = (1..=self.n).collect();
        let p = Permutation::from_cycles(self.n, &[&cycle]).expect("in range");
        self.element(&p).expect("degree matches")
    }

    /// `y_k = s_k t_k`, where `s_k` reverses `1..=k` and `t_k` reverses
    /// `k+1..=n`, each written as a product of transpositions.
    pub fn yk_permutation(&self, k: usize) -> Result<Permutation> {
        yk_permutation(self.n, k)
    }

    pub fn yk_involution(&self, k: usize) -> Result<Element> {
        self.element(&self.yk_permutation(k)?)
    }

    /// The pair `(x, y)` with `w = x ∘ y`, read in the convention where
    /// permutations multiply left to right (left factor applied first):
    /// there the same factorization is `w = y · x`, so the factors swap.
    pub fn factors_left_to_right(&self, pair: &SpartanPair) -> (Permutation, Permutation) {
        (self.permutation(&pair.y), self.permutation(&pair.x))
    }
}

pub fn yk_permutation(n: usize, k: usize) -> Result<Permutation> {
    if k >= n {
        return Err(Error::BadIndex { k, n });
    }
    let mut y = Permutation::identity(n);
    // s_k = (1 k)(2 k-1)...
    for j in 1..=k / 2 {
        y = y.compose(&Permutation::transposition(n, j, k + 1 - j));
    }
    // t_k = (k+1 n)(k+2 n-1)...
    for j in 1..=(n - k) / 2 {
        y = y.compose(&Permutation::transposition(n, k + j, n + 1 - j));
    }
    Ok(y)
}

/// `⌊(n - 2)² / 2⌋`, the excess of an `n`-cycle in `Sym(n)`.
pub fn cycle_excess_closed_form(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    (n - 2) * (n - 2) / 2
}
