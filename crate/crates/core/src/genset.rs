//! Subsets of the simple reflections, stored as bitmasks over 1-based
//! generator indices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of generator indices `{s_i}` with `1 <= i <= 63`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    /// `{s_1, ..., s_rank}`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank < 64);
        GenSet((1u64 << (rank + 1)) - 2)
    }

    pub fn singleton(gen: usize) -> Self {
        GenSet(1 << gen)
    }

    pub fn insert(&mut self, gen: usize) {
        self.0 |= 1 << gen;
    }

    pub fn remove(&mut self, gen: usize) {
        self.0 &= !(1 << gen);
    }

    pub fn contains(self, gen: usize) -> bool {
        gen < 64 && self.0 & (1 << gen) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Generators in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..64).filter(move |&i| self.contains(i))
    }

    pub fn min(self) -> Option<usize> {
        self.iter().next()
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for g in iter {
            set.insert(g);
        }
        set
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, g) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "s{g}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GenSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for GenSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let gens = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = gens.iter().find(|&&g| g == 0 || g >= 64) {
            return Err(serde::de::Error::custom(format!(
                "generator index {bad} out of range"
            )));
        }
        Ok(gens.into_iter().collect())
    }
}
