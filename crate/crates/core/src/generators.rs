//! Words in the generators and subsets of the generating set.
//!
//! Generators are labelled `1..=rank` everywhere in the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::MAX_RANK;

/// A finite sequence of generator labels. `[a, b]` denotes `r_a r_b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|&&l| l == 0 || l > rank) {
            Some(&letter) => Err(Error::BadLetter { letter, rank }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Space-separated 1-based labels; the empty string is the identity.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().ok().filter(|&l| l > 0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::BadWord(s.to_string()))?;
        Ok(Word { letters })
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subset `J` of the generators, as a bit mask (bit `r - 1` for generator `r`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(u64);

impl GeneratorSet {
    pub fn empty() -> Self {
        GeneratorSet(0)
    }

    /// All of `1..=rank`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= MAX_RANK);
        if rank == 64 {
            GeneratorSet(u64::MAX)
        } else {
            GeneratorSet((1u64 << rank) - 1)
        }
    }

    pub fn from_generators<I: IntoIterator<Item = usize>>(gens: I) -> Result<Self> {
        let mut set = GeneratorSet::empty();
        for r in gens {
            if r == 0 || r > MAX_RANK {
                return Err(Error::BadLetter {
                    letter: r,
                    rank: MAX_RANK,
                });
            }
            set.insert(r);
        }
        Ok(set)
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        GeneratorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, r: usize) -> bool {
        (1..=MAX_RANK).contains(&r) && self.0 & (1 << (r - 1)) != 0
    }

    pub fn insert(&mut self, r: usize) {
        self.0 |= 1 << (r - 1);
    }

    pub fn remove(&mut self, r: usize) {
        self.0 &= !(1 << (r - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 | other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    /// Highest generator label present, 0 when empty.
    pub fn max(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        match self.iter().find(|&r| r > rank) {
            Some(letter) => Err(Error::BadLetter { letter, rank }),
            None => Ok(()),
        }
    }

    /// Every subset of `1..=rank`, in increasing bit order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GeneratorSet> {
        assert!(rank < 64, "subset enumeration needs rank < 64");
        (0..1u64 << rank).map(GeneratorSet)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Comma-separated 1-based labels, e.g. `1,3`. Empty string is the empty set.
impl FromStr for GeneratorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSubset(s.to_string());
        let mut set = GeneratorSet::empty();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let r: usize = part.parse().map_err(|_| bad())?;
            if r == 0 || r > MAX_RANK {
                return Err(bad());
            }
            set.insert(r);
        }
        Ok(set)
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let gens = Vec::<usize>::deserialize(d)?;
        GeneratorSet::from_generators(gens).map_err(serde::de::Error::custom)
    }
}
