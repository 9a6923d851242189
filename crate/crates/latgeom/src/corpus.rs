//! The default verification corpus: every simple matroid within small
//! exhaustive bounds, plus the named families over a larger box.
//!
//! The exhaustive part enumerates all basis families of each (rank, atoms)
//! cell and keeps those satisfying the exchange axiom and simplicity; at the
//! supported caps (rank <= 4, atoms <= 6) the largest cell scans 2^20
//! candidate families. Generation is deterministic: entries come out in a
//! fixed order, deduplicated by identity (same atom count and basis list).

use std::collections::HashSet;

use crate::atoms::AtomSet;
use crate::error::{LatgeomError, Result};
use crate::matroid::{make_near_pencil, make_uniform, subsets_of_size, Matroid};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusBounds {
    /// Exhaustive enumeration runs over all (rank, atoms) cells within these.
    pub exhaustive_max_rank: usize,
    pub exhaustive_max_atoms: usize,
    /// Named families (uniform, near pencil, Boolean) go up to these.
    pub named_max_rank: usize,
    pub named_max_atoms: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            exhaustive_max_rank: 4,
            exhaustive_max_atoms: 6,
            named_max_rank: 5,
            named_max_atoms: 8,
        }
    }
}

/// Hard caps on the exhaustive part; beyond them the family scan blows up.
const EXHAUSTIVE_RANK_CAP: usize = 4;
const EXHAUSTIVE_ATOMS_CAP: usize = 6;

pub fn generate_corpus(bounds: &CorpusBounds) -> Result<Corpus> {
    if bounds.exhaustive_max_rank > EXHAUSTIVE_RANK_CAP
        || bounds.exhaustive_max_atoms > EXHAUSTIVE_ATOMS_CAP
    {
        return Err(LatgeomError::OutOfRange(format!(
            "exhaustive enumeration capped at rank {EXHAUSTIVE_RANK_CAP}, \
             atoms {EXHAUSTIVE_ATOMS_CAP}; requested rank {}, atoms {}",
            bounds.exhaustive_max_rank, bounds.exhaustive_max_atoms
        )));
    }
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut seen: HashSet<(usize, Vec<u32>)> = HashSet::new();
    let mut push = |name: String, m: Matroid, seen: &mut HashSet<(usize, Vec<u32>)>| {
        let key = (m.n(), m.bases().iter().map(|b| b.mask()).collect());
        if seen.insert(key) {
            entries.push(CorpusEntry { name, matroid: m });
        }
    };

    // Named families first, so duplicates keep their family name.
    for rank in 1..=bounds.named_max_rank {
        for n in rank..=bounds.named_max_atoms {
            if let Ok(m) = make_uniform(rank, n) {
                let name = if rank == n {
                    format!("boolean-{n}")
                } else {
                    format!("uniform-{rank}-{n}")
                };
                push(name, m, &mut seen);
            }
            if rank >= 3 && n > rank {
                if let Ok(m) = make_near_pencil(rank, n) {
                    push(format!("near-pencil-{rank}-{n}"), m, &mut seen);
                }
            }
        }
    }

    for rank in 1..=bounds.exhaustive_max_rank {
        for n in rank.max(1)..=bounds.exhaustive_max_atoms {
            for (idx, m) in enumerate_simple_matroids(rank, n)?.into_iter().enumerate() {
                push(format!("simple-r{rank}-n{n}-{idx:04}"), m, &mut seen);
            }
        }
    }
    Ok(Corpus { entries })
}

/// All simple matroids of the given rank on atoms `1..=n`, by brute force
/// over basis families. Deterministic order (increasing family bitmask).
pub fn enumerate_simple_matroids(rank: usize, n: usize) -> Result<Vec<Matroid>> {
    if rank == 0 || rank > n {
        return Ok(Vec::new());
    }
    if rank == 1 {
        // Simple rank-1 means a single atom.
        return if n == 1 {
            Ok(vec![Matroid::from_bases(1, vec![AtomSet::from_atoms([1])])?])
        } else {
            Ok(Vec::new())
        };
    }
    let candidates: Vec<u32> = subsets_of_size(n, rank).iter().map(|s| s.mask()).collect();
    let count = candidates.len();
    assert!(count <= 20, "family scan would be 2^{count}");
    // Index of each rank-subset mask, for O(1) basis membership tests.
    let mut index_of = vec![u8::MAX; 1 << n];
    for (i, &mask) in candidates.iter().enumerate() {
        index_of[mask as usize] = i as u8;
    }
    // For every atom pair, the bitmask of candidate bases containing it.
    let mut pair_cover: Vec<u32> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let pair = (1u32 << a) | (1u32 << b);
            let mut cover = 0u32;
            for (i, &mask) in candidates.iter().enumerate() {
                if mask & pair == pair {
                    cover |= 1 << i;
                }
            }
            pair_cover.push(cover);
        }
    }

    let mut out = Vec::new();
    'family: for family in 1u32..(1u32 << count) {
        // Simplicity: every atom pair inside some chosen basis.
        for &cover in &pair_cover {
            if family & cover == 0 {
                continue 'family;
            }
        }
        // Exchange: for chosen B1 != B2 and x in B1 - B2, some y in B2 - B1
        // has B1 - x + y chosen.
        let mut chosen = family;
        while chosen != 0 {
            let i = chosen.trailing_zeros() as usize;
            chosen &= chosen - 1;
            let b1 = candidates[i];
            let mut others = family;
            while others != 0 {
                let j = others.trailing_zeros() as usize;
                others &= others - 1;
                if i == j {
                    continue;
                }
                let b2 = candidates[j];
                let mut xs = b1 & !b2;
                while xs != 0 {
                    let x = xs & xs.wrapping_neg();
                    xs &= xs - 1;
                    let stripped = b1 & !x;
                    let mut ys = b2 & !b1;
                    let mut found = false;
                    while ys != 0 {
                        let y = ys & ys.wrapping_neg();
                        ys &= ys - 1;
                        let idx = index_of[(stripped | y) as usize];
                        if idx != u8::MAX && family & (1 << idx) != 0 {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        continue 'family;
                    }
                }
            }
        }
        let bases = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| family & (1 << i) != 0)
            .map(|(_, &mask)| AtomSet::from_mask(mask))
            .collect();
        out.push(Matroid::from_bases(n, bases)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::two_line_example;

    #[test]
    fn rank2_matroids_are_uniform_only() {
        for n in 2..=6usize {
            let ms = enumerate_simple_matroids(2, n).unwrap();
            assert_eq!(ms.len(), 1, "n = {n}");
            assert_eq!(ms[0], make_uniform(2, n).unwrap());
        }
    }

    #[test]
    fn rank3_on_4_atoms() {
        // U_{3,4} plus the four near-pencil relabelings.
        let ms = enumerate_simple_matroids(3, 4).unwrap();
        assert_eq!(ms.len(), 5);
        assert!(ms.contains(&make_uniform(3, 4).unwrap()));
        assert!(ms.contains(&make_near_pencil(3, 4).unwrap()));
    }

    #[test]
    fn corpus_contains_the_two_line_example() {
        let corpus = generate_corpus(&CorpusBounds {
            exhaustive_max_rank: 3,
            exhaustive_max_atoms: 5,
            named_max_rank: 3,
            named_max_atoms: 5,
        })
        .unwrap();
        let target = two_line_example();
        assert!(corpus.entries.iter().any(|e| e.matroid == target));
    }

    #[test]
    fn corpus_is_deterministic_and_deduplicated() {
        let bounds = CorpusBounds {
            exhaustive_max_rank: 3,
            exhaustive_max_atoms: 5,
            named_max_rank: 4,
            named_max_atoms: 6,
        };
        let a = generate_corpus(&bounds).unwrap();
        let b = generate_corpus(&bounds).unwrap();
        let names: Vec<&str> = a.entries.iter().map(|e| e.name.as_str()).collect();
        let names_b: Vec<&str> = b.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, names_b);
        let mut keys: Vec<(usize, Vec<u32>)> = a
            .entries
            .iter()
            .map(|e| {
                (
                    e.matroid.n(),
                    e.matroid.bases().iter().map(|b| b.mask()).collect(),
                )
            })
            .collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), before);
    }

    #[test]
    fn oversized_bounds_are_refused() {
        let err = generate_corpus(&CorpusBounds {
            exhaustive_max_rank: 5,
            exhaustive_max_atoms: 6,
            named_max_rank: 5,
            named_max_atoms: 8,
        })
        .unwrap_err();
        assert!(err.to_string().contains("capped"));
    }
}
