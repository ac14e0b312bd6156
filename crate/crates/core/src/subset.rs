//! Bitset-backed element-index sets and closure-flagged subsets.

use std::cmp::Ordering;

/// A set of element indices of a fixed ring, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n: usize,
    words: Vec<u64>,
    card: usize,
}

impl ElemSet {
    pub fn new(n: usize) -> Self {
        ElemSet { n, words: vec![0; (n + 63) / 64], card: 0 }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i as u32);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = u32>>(n: usize, it: I) -> Self {
        let mut s = Self::new(n);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn card(&self) -> usize {
        self.card
    }

    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    /// Returns true if the element was newly inserted.
    pub fn insert(&mut self, x: u32) -> bool {
        let (w, b) = (x as usize / 64, x as usize % 64);
        let mask = 1u64 << b;
        if self.words[w] & mask == 0 {
            self.words[w] |= mask;
            self.card += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        let (w, b) = (x as usize / 64, x as usize % 64);
        self.words[w] & (1u64 << b) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter_map(move |b| {
                if w & (1u64 << b) != 0 {
                    Some((wi * 64 + b) as u32)
                } else {
                    None
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let card = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet { n: self.n, words, card }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        let card = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet { n: self.n, words, card }
    }
}

impl Ord for ElemSet {
    /// Canonical order: cardinality first, then lexicographic on the sorted
    /// element-index list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.card
            .cmp(&other.card)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// An element-index set of a ring, flagged with the closure properties it
/// satisfies. `additive_subgroup && mult_closed` means subring; both ideal
/// flags mean two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetAlgebra {
    pub set: ElemSet,
    pub additive_subgroup: bool,
    pub mult_closed: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub contains_unity: bool,
}

impl SubsetAlgebra {
    pub fn is_subring(&self) -> bool {
        self.additive_subgroup && self.mult_closed
    }

    pub fn is_two_sided_ideal(&self) -> bool {
        self.additive_subgroup && self.left_ideal && self.right_ideal
    }

    pub fn card(&self) -> usize {
        self.set.card()
    }
}

impl Ord for SubsetAlgebra {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set.cmp(&other.set)
    }
}

impl PartialOrd for SubsetAlgebra {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_canonical_order() {
        let a = ElemSet::from_iter(10, [0, 1]);
        let b = ElemSet::from_iter(10, [0, 2]);
        let c = ElemSet::from_iter(10, [1, 2]);
        let d = ElemSet::from_iter(10, [5]);
        assert!(d < a, "smaller card first");
        assert!(a < b && b < c, "lexicographic on indices");
        assert!(a.is_subset(&ElemSet::from_iter(10, [0, 1, 2])));
        assert!(!c.is_subset(&a));
    }

    #[test]
    fn iter_roundtrip() {
        let s = ElemSet::from_iter(130, [0, 63, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.card(), 4);
    }
}
