//! Atom sets and atom orderings.
//!
//! Atoms are the ground-set elements `1..=n` of a simple matroid and, at the
//! same time, the rank-1 elements of its lattice of flats. An [`AtomSet`] is a
//! bit mask over them; bit `i-1` stands for atom `i`. All matroid and lattice
//! computations in this crate run over these masks, which keeps everything in
//! machine words for the supported bound `n <= 16`.

use std::fmt;
use std::str::FromStr;

use crate::error::LatgeomError;

/// Maximum number of atoms supported by the mask types.
pub const MAX_ATOMS: usize = 16;

/// A subset of the atoms `1..=n`, stored as a bit mask.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AtomSet(u32);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn from_mask(mask: u32) -> AtomSet {
        AtomSet(mask)
    }

    /// Builds a set from 1-based atom labels.
    pub fn from_atoms<I: IntoIterator<Item = u8>>(atoms: I) -> AtomSet {
        let mut mask = 0u32;
        for a in atoms {
            debug_assert!((1..=MAX_ATOMS as u8).contains(&a));
            mask |= 1 << (a - 1);
        }
        AtomSet(mask)
    }

    /// Full ground set `{1, .., n}`.
    pub fn full(n: usize) -> AtomSet {
        AtomSet(((1u64 << n) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, atom: u8) -> bool {
        self.0 & (1 << (atom - 1)) != 0
    }

    pub fn insert(self, atom: u8) -> AtomSet {
        AtomSet(self.0 | (1 << (atom - 1)))
    }

    pub fn remove(self, atom: u8) -> AtomSet {
        AtomSet(self.0 & !(1 << (atom - 1)))
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the atoms in increasing label order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let a = mask.trailing_zeros() as u8 + 1;
                mask &= mask - 1;
                Some(a)
            }
        })
    }

    /// All subsets of `self`, the empty set first, `self` last.
    pub fn subsets(self) -> impl Iterator<Item = AtomSet> {
        let full = self.0;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = AtomSet(sub);
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(cur)
        })
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for AtomSet {
    type Err = LatgeomError;

    /// Parses `"1,2,4"`, `"{1,2,4}"`, and the empty forms `""`, `"{}"`, `"-"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.is_empty() || s == "-" {
            return Ok(AtomSet::EMPTY);
        }
        let mut set = AtomSet::EMPTY;
        for part in s.split(',') {
            let a: u8 = part
                .trim()
                .parse()
                .map_err(|_| LatgeomError::Parse(format!("bad atom `{part}`")))?;
            if !(1..=MAX_ATOMS as u8).contains(&a) {
                return Err(LatgeomError::Parse(format!(
                    "atom {a} out of range 1..={MAX_ATOMS}"
                )));
            }
            set = set.insert(a);
        }
        Ok(set)
    }
}

/// A linear order on the atoms `1..=n`.
///
/// Labels, broken circuits and lexicographic comparisons are all taken with
/// respect to such an order; the default is the natural order `1 < 2 < ...`.
#[derive(Clone, PartialEq, Eq)]
pub struct AtomOrder {
    /// `key[a-1]` is the position of atom `a` in the order (0 = least).
    key: Vec<u8>,
}

impl AtomOrder {
    pub fn natural(n: usize) -> AtomOrder {
        AtomOrder {
            key: (0..n as u8).collect(),
        }
    }

    /// Builds the order from the sequence of atoms listed least-first.
    pub fn from_sequence(seq: &[u8]) -> Result<AtomOrder, LatgeomError> {
        let n = seq.len();
        if n > MAX_ATOMS {
            return Err(LatgeomError::Parse(format!(
                "order lists {n} atoms; at most {MAX_ATOMS} supported"
            )));
        }
        let mut key = vec![u8::MAX; n];
        for (pos, &a) in seq.iter().enumerate() {
            if !(1..=n as u8).contains(&a) || key[a as usize - 1] != u8::MAX {
                return Err(LatgeomError::Parse(format!(
                    "order must be a permutation of 1..={n}"
                )));
            }
            key[a as usize - 1] = pos as u8;
        }
        Ok(AtomOrder { key })
    }

    pub fn n(&self) -> usize {
        self.key.len()
    }

    pub fn is_natural(&self) -> bool {
        self.key.iter().enumerate().all(|(i, &k)| k == i as u8)
    }

    /// Position of `atom` in the order; smaller keys come first.
    pub fn key(&self, atom: u8) -> u8 {
        self.key[atom as usize - 1]
    }

    pub fn atom_lt(&self, a: u8, b: u8) -> bool {
        self.key(a) < self.key(b)
    }

    /// The least atom of a nonempty set.
    pub fn min_atom(&self, set: AtomSet) -> u8 {
        debug_assert!(!set.is_empty());
        set.iter().min_by_key(|&a| self.key(a)).unwrap()
    }

    /// Atoms of `set` sorted by this order.
    pub fn sorted_atoms(&self, set: AtomSet) -> Vec<u8> {
        let mut v: Vec<u8> = set.iter().collect();
        v.sort_by_key(|&a| self.key(a));
        v
    }

    /// Lexicographic comparison of two sets via their sorted atom sequences.
    pub fn cmp_sets_lex(&self, a: AtomSet, b: AtomSet) -> std::cmp::Ordering {
        let ka: Vec<u8> = self.sorted_atoms(a).iter().map(|&x| self.key(x)).collect();
        let kb: Vec<u8> = self.sorted_atoms(b).iter().map(|&x| self.key(x)).collect();
        ka.cmp(&kb)
    }
}

impl fmt::Debug for AtomOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seq = vec![0u8; self.key.len()];
        for a in 1..=self.key.len() as u8 {
            seq[self.key(a) as usize] = a;
        }
        write!(f, "AtomOrder{seq:?}")
    }
}

/// A subset of the rank positions `1..=r` of a graded lattice, as a bit mask.
///
/// These index flag vectors: bit `i-1` stands for rank `i`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RankSet(u16);

impl RankSet {
    pub const EMPTY: RankSet = RankSet(0);

    pub fn from_mask(mask: u16) -> RankSet {
        RankSet(mask)
    }

    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> RankSet {
        let mut mask = 0u16;
        for i in ranks {
            debug_assert!((1..=15).contains(&i));
            mask |= 1 << (i - 1);
        }
        RankSet(mask)
    }

    pub fn full(r: usize) -> RankSet {
        RankSet(((1u32 << r) - 1) as u16)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(self, i: usize) -> RankSet {
        RankSet(self.0 | (1 << (i - 1)))
    }

    pub fn is_subset_of(self, other: RankSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, empty set first.
    pub fn subsets(self) -> impl Iterator<Item = RankSet> {
        let full = self.0;
        let mut sub = 0u16;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = RankSet(sub);
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(cur)
        })
    }

    /// All subsets of `{1,..,r}` in mask order.
    pub fn all(r: usize) -> impl Iterator<Item = RankSet> {
        debug_assert!(r <= 15);
        (0u32..(1u32 << r)).map(|m| RankSet(m as u16))
    }
}

impl fmt::Debug for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for RankSet {
    type Err = LatgeomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.is_empty() || s == "-" {
            return Ok(RankSet::EMPTY);
        }
        let mut set = RankSet::EMPTY;
        for part in s.split(',') {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|_| LatgeomError::Parse(format!("bad rank `{part}`")))?;
            if !(1..=15).contains(&i) {
                return Err(LatgeomError::Parse(format!("rank {i} out of range 1..=15")));
            }
            set = set.insert(i);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_set_basics() {
        let s = AtomSet::from_atoms([1, 2, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(4) && !s.contains(3));
        assert_eq!(s.to_string(), "{1,2,4}");
        assert_eq!("{1,2,4}".parse::<AtomSet>().unwrap(), s);
        assert_eq!("1,2,4".parse::<AtomSet>().unwrap(), s);
        assert_eq!("".parse::<AtomSet>().unwrap(), AtomSet::EMPTY);
        assert_eq!(AtomSet::full(5).len(), 5);
    }

    #[test]
    fn subset_iteration_covers_powerset() {
        let s = AtomSet::from_atoms([2, 3, 5]);
        let subs: Vec<AtomSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], AtomSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
    }

    #[test]
    fn atom_order_keys() {
        let ord = AtomOrder::from_sequence(&[3, 1, 2]).unwrap();
        assert!(ord.atom_lt(3, 1) && ord.atom_lt(1, 2));
        assert_eq!(ord.min_atom(AtomSet::from_atoms([1, 2])), 1);
        assert_eq!(ord.min_atom(AtomSet::from_atoms([2, 3])), 3);
        assert!(AtomOrder::from_sequence(&[1, 1, 2]).is_err());
        assert!(AtomOrder::natural(4).is_natural());
    }

    #[test]
    fn rank_set_round_trip() {
        let s = RankSet::from_ranks([1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!("{1,3}".parse::<RankSet>().unwrap(), s);
        assert_eq!(RankSet::all(2).count(), 4);
    }
}
