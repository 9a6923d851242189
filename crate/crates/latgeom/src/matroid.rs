//! Simple matroids given by explicit basis lists.
//!
//! The rank of a subset is computed as the size of its largest intersection
//! with a basis, which is exact for matroids and cheap at the supported
//! ground-set sizes. Rank and independence tables over all `2^n` subsets are
//! built lazily and shared, so closure-heavy callers (lattice construction,
//! circuit enumeration) stay fast.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::atoms::{AtomOrder, AtomSet, MAX_ATOMS};
use crate::error::{LatgeomError, Result};

/// A simple matroid on atoms `1..=n`, stored by its list of bases.
#[derive(Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    /// Sorted by mask, deduplicated.
    bases: Vec<AtomSet>,
    basis_set: HashSet<u32>,
    /// `rank_table[mask]` = rank of the subset `mask`; built on first use.
    rank_table: OnceLock<Vec<u8>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            basis_set: self.basis_set.clone(),
            rank_table: OnceLock::new(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}
impl Eq for Matroid {}

impl Matroid {
    /// Builds a matroid from its bases, validating the basis-exchange axiom
    /// and simplicity. Bases are deduplicated and sorted.
    pub fn from_bases(n: usize, bases: Vec<AtomSet>) -> Result<Matroid> {
        let m = Self::from_bases_unchecked(n, bases)?;
        m.check_exchange()?;
        m.check_simple()?;
        Ok(m)
    }

    /// Structural checks only (sizes, ranges, nonemptiness); used by the
    /// family generators whose outputs are matroids by construction.
    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<AtomSet>) -> Result<Matroid> {
        if n == 0 || n > MAX_ATOMS {
            return Err(LatgeomError::InvalidMatroid(format!(
                "atom count {n} outside 1..={MAX_ATOMS}"
            )));
        }
        if bases.is_empty() {
            return Err(LatgeomError::InvalidMatroid("no bases given".into()));
        }
        let full = AtomSet::full(n);
        let rank = bases[0].len();
        if rank == 0 {
            return Err(LatgeomError::InvalidMatroid("empty basis".into()));
        }
        for b in &bases {
            if !b.is_subset_of(full) {
                return Err(LatgeomError::InvalidMatroid(format!(
                    "basis {b} uses atoms beyond 1..={n}"
                )));
            }
            if b.len() != rank {
                return Err(LatgeomError::InvalidMatroid(format!(
                    "bases of unequal cardinality: {} vs {}",
                    bases[0], b
                )));
            }
        }
        bases.sort();
        bases.dedup();
        let basis_set = bases.iter().map(|b| b.mask()).collect();
        Ok(Matroid {
            n,
            rank,
            bases,
            basis_set,
            rank_table: OnceLock::new(),
        })
    }

    fn check_exchange(&self) -> Result<()> {
        for b1 in &self.bases {
            for b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for x in b1.difference(*b2).iter() {
                    let stripped = b1.remove(x);
                    let ok = b2
                        .difference(*b1)
                        .iter()
                        .any(|y| self.is_basis(stripped.insert(y)));
                    if !ok {
                        return Err(LatgeomError::InvalidMatroid(format!(
                            "basis exchange fails for {b1}, {b2}, atom {x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_simple(&self) -> Result<()> {
        if self.rank == 1 {
            return if self.n == 1 {
                Ok(())
            } else {
                Err(LatgeomError::InvalidMatroid(
                    "rank-1 matroid on more than one atom has parallel atoms".into(),
                ))
            };
        }
        // Rank >= 2: simple iff every pair of atoms lies in a common basis
        // (no loops, no parallel pairs).
        for a in 1..=self.n as u8 {
            for b in (a + 1)..=self.n as u8 {
                let pair = AtomSet::from_atoms([a, b]);
                if !self.bases.iter().any(|bs| pair.is_subset_of(*bs)) {
                    return Err(LatgeomError::InvalidMatroid(format!(
                        "atoms {a} and {b} are parallel or loops"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[AtomSet] {
        &self.bases
    }

    pub fn ground_set(&self) -> AtomSet {
        AtomSet::full(self.n)
    }

    pub fn is_basis(&self, set: AtomSet) -> bool {
        self.basis_set.contains(&set.mask())
    }

    fn tables(&self) -> &Vec<u8> {
        self.rank_table.get_or_init(|| {
            let size = 1usize << self.n;
            // independent[m] = some basis contains m; seeded from the bases
            // and propagated downward by single-atom removal.
            let mut indep = vec![false; size];
            for b in &self.bases {
                indep[b.mask() as usize] = true;
            }
            for m in (1..size).rev() {
                if indep[m] {
                    let mut rest = m;
                    while rest != 0 {
                        let low = rest & rest.wrapping_neg();
                        indep[m & !low] = true;
                        rest &= rest - 1;
                    }
                }
            }
            let mut rank = vec![0u8; size];
            for m in 1..size {
                rank[m] = if indep[m] {
                    (m as u32).count_ones() as u8
                } else {
                    let mut best = 0u8;
                    let mut rest = m;
                    while rest != 0 {
                        let low = rest & rest.wrapping_neg();
                        best = best.max(rank[m & !low]);
                        rest &= rest - 1;
                    }
                    best
                };
            }
            rank
        })
    }

    /// Rank of an arbitrary subset of the ground set.
    pub fn rank_of(&self, set: AtomSet) -> usize {
        self.tables()[set.mask() as usize] as usize
    }

    pub fn is_independent(&self, set: AtomSet) -> bool {
        self.rank_of(set) == set.len()
    }

    /// The smallest flat containing `set`.
    pub fn closure(&self, set: AtomSet) -> AtomSet {
        let r = self.rank_of(set);
        let mut out = set;
        for x in self.ground_set().difference(set).iter() {
            if self.rank_of(set.insert(x)) == r {
                out = out.insert(x);
            }
        }
        out
    }

    /// All circuits, sorted by (size, sorted atom sequence).
    pub fn circuits(&self) -> Vec<AtomSet> {
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << self.n) {
            let set = AtomSet::from_mask(mask);
            if self.is_independent(set) {
                continue;
            }
            let minimal = set.iter().all(|x| self.is_independent(set.remove(x)));
            if minimal {
                out.push(set);
            }
        }
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect()))
        });
        out
    }

    /// The unique circuit inside `basis + e`.
    pub fn fundamental_circuit(&self, e: u8, basis: AtomSet) -> Result<AtomSet> {
        if !self.is_basis(basis) {
            return Err(LatgeomError::Precondition(format!("{basis} is not a basis")));
        }
        if basis.contains(e) {
            return Err(LatgeomError::Precondition(format!(
                "atom {e} already lies in {basis}"
            )));
        }
        let mut circuit = AtomSet::EMPTY.insert(e);
        for x in basis.iter() {
            if self.is_basis(basis.remove(x).insert(e)) {
                circuit = circuit.insert(x);
            }
        }
        Ok(circuit)
    }

    /// Broken circuits with respect to `ord`: each circuit minus its least atom.
    pub fn broken_circuits(&self, ord: &AtomOrder) -> Vec<AtomSet> {
        self.circuits()
            .into_iter()
            .map(|c| c.remove(ord.min_atom(c)))
            .collect()
    }

    /// Bases containing no broken circuit, sorted lexicographically on their
    /// `ord`-sorted atom sequences.
    pub fn nbc_bases(&self, ord: &AtomOrder) -> Vec<AtomSet> {
        let broken = self.broken_circuits(ord);
        let mut out: Vec<AtomSet> = self
            .bases
            .iter()
            .copied()
            .filter(|b| !broken.iter().any(|bc| bc.is_subset_of(*b)))
            .collect();
        out.sort_by(|a, b| ord.cmp_sets_lex(*a, *b));
        out
    }
}

/// The uniform matroid `U_{rank,n}`: every `rank`-subset of `[n]` is a basis.
///
/// Its lattice of flats is the rank-`rank` truncated Boolean algebra.
/// Simplicity requires `rank >= 2` unless `n == 1`.
pub fn make_uniform(rank: usize, n: usize) -> Result<Matroid> {
    if rank == 0 || rank > n || n > MAX_ATOMS {
        return Err(LatgeomError::InvalidMatroid(format!(
            "uniform matroid needs 1 <= rank <= n <= {MAX_ATOMS}, got rank {rank}, n {n}"
        )));
    }
    if rank == 1 && n > 1 {
        return Err(LatgeomError::InvalidMatroid(
            "U_{1,n} with n > 1 is not simple".into(),
        ));
    }
    let m = Matroid::from_bases_unchecked(n, subsets_of_size(n, rank))?;
    Ok(m)
}

/// The free (Boolean) matroid on `[n]`: the single basis `{1,..,n}`.
pub fn make_boolean(n: usize) -> Result<Matroid> {
    make_uniform(n, n)
}

/// The rank-`rank` near pencil on `n` atoms: atoms `1..=rank-2` in general
/// position (coloops) and atoms `rank-1..=n` on a common line. Bases are the
/// coloops together with any two line atoms.
pub fn make_near_pencil(rank: usize, n: usize) -> Result<Matroid> {
    if rank < 3 || n < rank || n > MAX_ATOMS {
        return Err(LatgeomError::InvalidMatroid(format!(
            "near pencil needs 3 <= rank <= n <= {MAX_ATOMS}, got rank {rank}, n {n}"
        )));
    }
    let coloops = AtomSet::from_atoms(1..=(rank as u8 - 2));
    let line: Vec<u8> = (rank as u8 - 1..=n as u8).collect();
    let mut bases = Vec::new();
    for i in 0..line.len() {
        for j in (i + 1)..line.len() {
            bases.push(coloops.insert(line[i]).insert(line[j]));
        }
    }
    Matroid::from_bases_unchecked(n, bases)
}

/// All subsets of `[n]` of the given size, as atom sets.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<AtomSet> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == k {
            out.push(AtomSet::from_mask(mask));
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The rank-3 matroid on [5] whose bases are all triples except
    /// {1,2,3} and {3,4,5}.
    pub(crate) fn two_line_example() -> Matroid {
        let excluded = [AtomSet::from_atoms([1, 2, 3]), AtomSet::from_atoms([3, 4, 5])];
        let bases = subsets_of_size(5, 3)
            .into_iter()
            .filter(|b| !excluded.contains(b))
            .collect();
        Matroid::from_bases(5, bases).unwrap()
    }

    /// Test oracle: dependence and minimality straight from "independent =
    /// contained in a basis", with no rank-table involvement.
    fn brute_circuits(m: &Matroid) -> Vec<AtomSet> {
        let indep = |s: AtomSet| m.bases().iter().any(|b| s.is_subset_of(*b));
        let mut out: Vec<AtomSet> = AtomSet::full(m.n())
            .subsets()
            .filter(|&s| !indep(s) && s.iter().all(|x| indep(s.remove(x))))
            .collect();
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect()))
        });
        out
    }

    #[test]
    fn closure_in_two_line_example() {
        let m = two_line_example();
        assert_eq!(
            m.closure(AtomSet::from_atoms([1, 2])),
            AtomSet::from_atoms([1, 2, 3])
        );
        assert_eq!(m.closure(AtomSet::EMPTY), AtomSet::EMPTY);
        for b in m.bases() {
            assert_eq!(m.closure(*b), m.ground_set());
        }
    }

    #[test]
    fn closure_axioms_exhaustive() {
        for m in [
            two_line_example(),
            make_uniform(3, 6).unwrap(),
            make_near_pencil(4, 7).unwrap(),
            make_boolean(5).unwrap(),
        ] {
            let full = m.ground_set();
            for a in full.subsets() {
                let ca = m.closure(a);
                assert!(a.is_subset_of(ca), "extensive");
                assert_eq!(m.closure(ca), ca, "idempotent");
                for b in full.subsets() {
                    if a.is_subset_of(b) {
                        assert!(ca.is_subset_of(m.closure(b)), "monotone");
                    }
                }
            }
        }
    }

    #[test]
    fn circuits_of_examples() {
        let m = two_line_example();
        let expect = vec![
            AtomSet::from_atoms([1, 2, 3]),
            AtomSet::from_atoms([3, 4, 5]),
            AtomSet::from_atoms([1, 2, 4, 5]),
        ];
        assert_eq!(m.circuits(), expect);
        assert_eq!(m.circuits(), brute_circuits(&m));

        let u = make_uniform(3, 4).unwrap();
        assert_eq!(u.circuits(), vec![AtomSet::full(4)]);

        let b = make_boolean(4).unwrap();
        assert!(b.circuits().is_empty());
    }

    #[test]
    fn circuits_and_bases_determine_each_other() {
        for m in [two_line_example(), make_uniform(3, 5).unwrap(), make_near_pencil(3, 5).unwrap()] {
            let circuits = m.circuits();
            let indep =
                |s: AtomSet| !circuits.iter().any(|c| c.is_subset_of(s));
            let rebuilt: Vec<AtomSet> = AtomSet::full(m.n())
                .subsets()
                .filter(|&s| s.len() == m.rank() && indep(s))
                .collect();
            assert_eq!(rebuilt, m.bases());
        }
    }

    #[test]
    fn fundamental_circuits() {
        let m = two_line_example();
        let b = AtomSet::from_atoms([1, 2, 4]);
        assert_eq!(
            m.fundamental_circuit(3, b).unwrap(),
            AtomSet::from_atoms([1, 2, 3])
        );
        assert!(m.fundamental_circuit(1, b).is_err());
        assert!(m
            .fundamental_circuit(3, AtomSet::from_atoms([1, 2, 3]))
            .is_err());

        let u = make_uniform(3, 4).unwrap();
        assert_eq!(
            u.fundamental_circuit(4, AtomSet::from_atoms([1, 2, 3])).unwrap(),
            AtomSet::full(4)
        );
    }

    #[test]
    fn fundamental_circuit_rank5_instance() {
        // Rank-5 instance on 8 atoms where the basis {1,2,3,4,5} assigns
        // atom 8 the fundamental circuit {1,3,4,8}: the direct sum of
        // U_{3,4} on {1,3,4,8} with U_{2,4} on {2,5,6,7}.
        let first: Vec<u8> = vec![1, 3, 4, 8];
        let second: Vec<u8> = vec![2, 5, 6, 7];
        let mut bases = Vec::new();
        for t in subsets_of_size(4, 3) {
            for p in subsets_of_size(4, 2) {
                let b1 = AtomSet::from_atoms(t.iter().map(|i| first[i as usize - 1]));
                let b2 = AtomSet::from_atoms(p.iter().map(|i| second[i as usize - 1]));
                bases.push(b1.union(b2));
            }
        }
        let m = Matroid::from_bases(8, bases).unwrap();
        assert_eq!(m.rank(), 5);
        let b = AtomSet::from_atoms([1, 2, 3, 4, 5]);
        assert!(m.is_basis(b));
        assert_eq!(
            m.fundamental_circuit(8, b).unwrap(),
            AtomSet::from_atoms([1, 3, 4, 8])
        );
        // Oracle: the unique minimal dependent subset of b + 8 found directly.
        let inside = b.insert(8);
        let brute: Vec<AtomSet> = inside
            .subsets()
            .filter(|&s| {
                !m.is_independent(s) && s.iter().all(|x| m.is_independent(s.remove(x)))
            })
            .collect();
        assert_eq!(brute, vec![AtomSet::from_atoms([1, 3, 4, 8])]);
    }

    #[test]
    fn nbc_bases_of_two_line_example() {
        let m = two_line_example();
        let ord = AtomOrder::natural(5);
        let got = m.nbc_bases(&ord);
        let expect = vec![
            AtomSet::from_atoms([1, 2, 4]),
            AtomSet::from_atoms([1, 2, 5]),
            AtomSet::from_atoms([1, 3, 4]),
            AtomSet::from_atoms([1, 3, 5]),
        ];
        assert_eq!(got, expect);
        // {1,4,5} is a basis but contains the broken circuit {4,5}.
        assert!(m.is_basis(AtomSet::from_atoms([1, 4, 5])));
        assert!(m
            .broken_circuits(&ord)
            .contains(&AtomSet::from_atoms([4, 5])));
    }

    #[test]
    fn nbc_bases_counts() {
        let ord = |n: usize| AtomOrder::natural(n);
        assert_eq!(make_boolean(4).unwrap().nbc_bases(&ord(4)).len(), 1);
        // |nbc(U_{r+1,n})| = C(n-1, r+1-1); brute-force families for n <= 7.
        for n in 3..=7usize {
            for rank in 2..=n.min(4) {
                let u = make_uniform(rank, n).unwrap();
                let nbc = u.nbc_bases(&ord(n));
                let choose = |n: usize, k: usize| -> usize {
                    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
                };
                assert_eq!(nbc.len(), choose(n - 1, rank - 1), "U_{{{rank},{n}}}");
            }
        }
    }

    #[test]
    fn nbc_bases_contain_least_atom() {
        let ord = AtomOrder::from_sequence(&[2, 4, 1, 3, 5]).unwrap();
        let m = two_line_example();
        for b in m.nbc_bases(&ord) {
            assert!(b.contains(2), "{b} misses the least atom");
        }
    }

    #[test]
    fn uniform_family() {
        assert_eq!(make_uniform(3, 4).unwrap().bases().len(), 4);
        assert_eq!(make_uniform(4, 4).unwrap().bases().len(), 1);
        assert_eq!(make_uniform(3, 5).unwrap().bases().len(), 10);
        assert!(make_uniform(0, 3).is_err());
        assert!(make_uniform(5, 4).is_err());
        assert!(make_uniform(1, 2).is_err());
    }

    #[test]
    fn near_pencil_family() {
        let m = make_near_pencil(3, 4).unwrap();
        let expect = vec![
            AtomSet::from_atoms([1, 2, 3]),
            AtomSet::from_atoms([1, 2, 4]),
            AtomSet::from_atoms([1, 3, 4]),
        ];
        assert_eq!(m.bases(), expect);
        for n in 4..=8usize {
            let np = make_near_pencil(3, n).unwrap();
            assert_eq!(np.bases().len(), (n - 1) * (n - 2) / 2);
        }
        // Degenerate two-point line: the free matroid.
        let free = make_near_pencil(5, 5).unwrap();
        assert_eq!(free.bases(), vec![AtomSet::full(5)]);
        assert!(make_near_pencil(2, 4).is_err());
        assert!(make_near_pencil(4, 3).is_err());
    }

    #[test]
    fn construction_rejects_bad_input() {
        // Unequal cardinalities.
        assert!(Matroid::from_bases(
            3,
            vec![AtomSet::from_atoms([1, 2]), AtomSet::from_atoms([3])]
        )
        .is_err());
        // Exchange failure: {1,2} and {3,4} as the only bases.
        assert!(Matroid::from_bases(
            4,
            vec![AtomSet::from_atoms([1, 2]), AtomSet::from_atoms([3, 4])]
        )
        .is_err());
        // Parallel atoms: 3 and 4 never share a basis.
        assert!(Matroid::from_bases(
            4,
            vec![
                AtomSet::from_atoms([1, 2]),
                AtomSet::from_atoms([1, 3]),
                AtomSet::from_atoms([1, 4]),
                AtomSet::from_atoms([2, 3]),
                AtomSet::from_atoms([2, 4]),
            ]
        )
        .is_err());
        // Same family with {3,4} added is U_{2,4}: fine.
        assert!(Matroid::from_bases(4, subsets_of_size(4, 2)).is_ok());
    }
}
