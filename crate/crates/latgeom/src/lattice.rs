//! The geometric lattice of flats of a simple matroid, with flag f/h-vectors,
//! order-complex h-vectors and the ab-index.
//!
//! Flats are stratified by rank and indexed globally; each cover `(x, y)`
//! carries the least atom `j` with `x v j = y`. Maximal chains are emitted in
//! lexicographic order of their label sequences, so all chain-derived outputs
//! are reproducible.
//!
//! The flag h-vector is computed by two genuinely different routes - the
//! inclusion-exclusion transform of flag f, and descent counting over labeled
//! maximal chains - and both stay available as the module's self-check.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::atoms::{AtomOrder, AtomSet, RankSet};
use crate::cdindex::{Alphabet, NcPolynomial, Word};
use crate::error::{LatgeomError, Result};
use crate::matroid::{make_boolean, make_near_pencil, make_uniform, Matroid};

/// The lattice of flats of a simple matroid, with minimal edge labels.
pub struct GeometricLattice {
    matroid: Matroid,
    ord: AtomOrder,
    /// Flats by rank 0..=rank, each level sorted by mask.
    levels: Vec<Vec<AtomSet>>,
    level_offset: Vec<usize>,
    flat_index: HashMap<u32, u32>,
    /// For each flat, its covers `(upper flat id, label atom)`.
    covers_up: Vec<Vec<(u32, u8)>>,
    chains: OnceLock<Vec<MaximalChain>>,
}

/// A maximal chain `0^ = x_0 < ... < x_rank = 1^` with its label sequence
/// and descent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalChain {
    /// Global flat ids along the chain, bottom to top (length rank + 1).
    pub flats: Vec<u32>,
    /// Minimal labels of the consecutive covers (length rank).
    pub labels: Vec<u8>,
    /// Positions `i` with `labels[i-1] > labels[i]` in the atom order.
    pub descents: RankSet,
}

impl MaximalChain {
    /// Flat ids of the proper part (ranks `1..rank`).
    pub fn proper_flats(&self) -> &[u32] {
        &self.flats[1..self.flats.len() - 1]
    }
}

/// A map `S -> value` over all subsets of the rank range `[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    r: usize,
    values: Vec<i64>,
}

impl FlagVector {
    pub fn new(r: usize, values: Vec<i64>) -> FlagVector {
        assert_eq!(values.len(), 1 << r);
        FlagVector { r, values }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, s: RankSet) -> i64 {
        self.values[s.mask() as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (RankSet, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(m, &v)| (RankSet::from_mask(m as u16), v))
    }
}

/// The h-vector `(h_0, .., h_r)` of the order complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `g_i = h_i - h_{i-1}` for `i = 0..=ceil(r/2)`, with `g_0 = h_0`.
    pub fn g_vector(&self) -> Vec<i64> {
        let r = self.0.len() - 1;
        let top = r.div_ceil(2);
        (0..=top)
            .map(|i| {
                if i == 0 {
                    self.0[0]
                } else {
                    self.0[i] - self.0[i - 1]
                }
            })
            .collect()
    }
}

/// Builds the lattice of flats of `m` with minimal labels under `ord`.
pub fn build_lattice(m: &Matroid, ord: AtomOrder) -> Result<GeometricLattice> {
    if ord.n() != m.n() {
        return Err(LatgeomError::Precondition(format!(
            "atom order covers {} atoms, matroid has {}",
            ord.n(),
            m.n()
        )));
    }
    let rank = m.rank();
    let mut levels: Vec<Vec<AtomSet>> = Vec::with_capacity(rank + 1);
    levels.push(vec![AtomSet::EMPTY]);
    for k in 0..rank {
        let mut next: Vec<AtomSet> = Vec::new();
        for &flat in &levels[k] {
            for a in m.ground_set().difference(flat).iter() {
                let up = m.closure(flat.insert(a));
                debug_assert_eq!(m.rank_of(up), k + 1);
                if !next.contains(&up) {
                    next.push(up);
                }
            }
        }
        next.sort();
        levels.push(next);
    }

    let mut level_offset = Vec::with_capacity(rank + 2);
    let mut total = 0usize;
    for level in &levels {
        level_offset.push(total);
        total += level.len();
    }
    level_offset.push(total);

    let mut flat_index = HashMap::with_capacity(total);
    for (k, level) in levels.iter().enumerate() {
        for (i, flat) in level.iter().enumerate() {
            flat_index.insert(flat.mask(), (level_offset[k] + i) as u32);
        }
    }

    let mut covers_up: Vec<Vec<(u32, u8)>> = vec![Vec::new(); total];
    for k in 0..rank {
        for (i, &x) in levels[k].iter().enumerate() {
            let xid = level_offset[k] + i;
            for (j, &y) in levels[k + 1].iter().enumerate() {
                if x.is_subset_of(y) {
                    let label = ord.min_atom(y.difference(x));
                    covers_up[xid].push(((level_offset[k + 1] + j) as u32, label));
                }
            }
        }
    }

    Ok(GeometricLattice {
        matroid: m.clone(),
        ord,
        levels,
        level_offset,
        flat_index,
        covers_up,
        chains: OnceLock::new(),
    })
}

impl GeometricLattice {
    /// Lattice rank (= matroid rank); flag subsets live in `[rank - 1]`.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// The flag index range `r = rank - 1`.
    pub fn r(&self) -> usize {
        self.rank() - 1
    }

    pub fn num_atoms(&self) -> usize {
        self.matroid.n()
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn atom_order(&self) -> &AtomOrder {
        &self.ord
    }

    pub fn flats_of_rank(&self, k: usize) -> &[AtomSet] {
        &self.levels[k]
    }

    pub fn num_flats(&self) -> usize {
        self.level_offset[self.levels.len()]
    }

    pub fn flat(&self, id: u32) -> AtomSet {
        let (k, i) = self.locate(id);
        self.levels[k][i]
    }

    pub fn flat_rank(&self, id: u32) -> usize {
        self.locate(id).0
    }

    pub fn flat_id(&self, flat: AtomSet) -> Option<u32> {
        self.flat_index.get(&flat.mask()).copied()
    }

    fn locate(&self, id: u32) -> (usize, usize) {
        let id = id as usize;
        let k = self.level_offset.partition_point(|&off| off <= id) - 1;
        (k, id - self.level_offset[k])
    }

    /// Join of a flat with an atom.
    pub fn join_atom(&self, flat: AtomSet, atom: u8) -> AtomSet {
        self.matroid.closure(flat.insert(atom))
    }

    /// All maximal chains, in lexicographic order of their label sequences.
    pub fn maximal_chains(&self) -> &[MaximalChain] {
        self.chains.get_or_init(|| {
            let mut out = Vec::new();
            let mut flats = vec![0u32];
            let mut labels: Vec<u8> = Vec::new();
            self.chain_dfs(0, &mut flats, &mut labels, &mut out);
            out.sort_by(|a, b| {
                let ka: Vec<u8> = a.labels.iter().map(|&x| self.ord.key(x)).collect();
                let kb: Vec<u8> = b.labels.iter().map(|&x| self.ord.key(x)).collect();
                ka.cmp(&kb)
            });
            out
        })
    }

    fn chain_dfs(
        &self,
        at: u32,
        flats: &mut Vec<u32>,
        labels: &mut Vec<u8>,
        out: &mut Vec<MaximalChain>,
    ) {
        if self.covers_up[at as usize].is_empty() {
            let mut descents = RankSet::EMPTY;
            for i in 1..labels.len() {
                if self.ord.atom_lt(labels[i], labels[i - 1]) {
                    descents = descents.insert(i);
                }
            }
            out.push(MaximalChain {
                flats: flats.clone(),
                labels: labels.clone(),
                descents,
            });
            return;
        }
        for &(up, label) in &self.covers_up[at as usize] {
            flats.push(up);
            labels.push(label);
            self.chain_dfs(up, flats, labels, out);
            flats.pop();
            labels.pop();
        }
    }

    /// Number of chains whose rank set is exactly `s`.
    pub fn flag_f(&self, s: RankSet) -> i64 {
        let ranks: Vec<usize> = s.iter().collect();
        debug_assert!(ranks.iter().all(|&i| i <= self.r()));
        if ranks.is_empty() {
            return 1;
        }
        let mut counts = vec![1i64; self.levels[ranks[0]].len()];
        for w in ranks.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mut next = vec![0i64; self.levels[hi].len()];
            for (i, &x) in self.levels[lo].iter().enumerate() {
                if counts[i] == 0 {
                    continue;
                }
                for (j, &y) in self.levels[hi].iter().enumerate() {
                    if x.is_subset_of(y) {
                        next[j] += counts[i];
                    }
                }
            }
            counts = next;
        }
        counts.iter().sum()
    }

    /// All flag f values `S -> f_S`.
    pub fn flag_f_vector(&self) -> FlagVector {
        let r = self.r();
        let values = RankSet::all(r).map(|s| self.flag_f(s)).collect();
        FlagVector::new(r, values)
    }

    /// Flag h by inclusion-exclusion over flag f.
    pub fn flag_h_incl_excl(&self, s: RankSet) -> i64 {
        s.subsets()
            .map(|t| {
                let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
                sign * self.flag_f(t)
            })
            .sum()
    }

    pub fn flag_h_vector_incl_excl(&self) -> FlagVector {
        let r = self.r();
        let f = self.flag_f_vector();
        let values = RankSet::all(r)
            .map(|s| {
                s.subsets()
                    .map(|t| {
                        let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
                        sign * f.get(t)
                    })
                    .sum()
            })
            .collect();
        FlagVector::new(r, values)
    }

    /// Flag h by counting maximal chains with descent set exactly `s`.
    pub fn flag_h_by_descent(&self, s: RankSet) -> i64 {
        self.maximal_chains()
            .iter()
            .filter(|c| c.descents == s)
            .count() as i64
    }

    pub fn flag_h_vector_by_descent(&self) -> FlagVector {
        let r = self.r();
        let mut values = vec![0i64; 1 << r];
        for c in self.maximal_chains() {
            values[c.descents.mask() as usize] += 1;
        }
        FlagVector::new(r, values)
    }

    /// The h-vector of the order complex, computed both as the binomial
    /// transform of the face-count vector and as the flag-h refinement.
    /// The two routes must agree.
    pub fn h_vector(&self) -> HVector {
        let r = self.r();
        let f = self.flag_f_vector();
        // Face counts by cardinality: f_k = sum over |S| = k of f_S.
        let mut face = vec![0i64; r + 1];
        for (s, v) in f.iter() {
            face[s.len()] += v;
        }
        // sum_k f_k (x-1)^{r-k} = sum_i h_i x^{r-i}
        let mut poly = vec![0i64; r + 1]; // coefficient of x^d at index d
        for (k, &fk) in face.iter().enumerate() {
            let deg = r - k;
            // (x-1)^deg
            let mut binom = 1i64;
            for j in 0..=deg {
                // coefficient of x^{deg-j} is C(deg,j) * (-1)^j
                let sign = if j % 2 == 0 { 1 } else { -1 };
                poly[deg - j] += fk * sign * binom;
                binom = binom * (deg - j) as i64 / (j + 1) as i64;
            }
        }
        let transform: Vec<i64> = (0..=r).map(|i| poly[r - i]).collect();

        let h = self.flag_h_vector_incl_excl();
        let mut refine = vec![0i64; r + 1];
        for (s, v) in h.iter() {
            refine[s.len()] += v;
        }
        assert_eq!(
            transform, refine,
            "h-vector routes disagree; lattice construction is broken"
        );
        HVector(transform)
    }

    /// The ab-index: the word of `S` has `b` exactly at the positions of `S`,
    /// with coefficient `h_S`.
    pub fn ab_index(&self) -> NcPolynomial {
        let r = self.r();
        let h = self.flag_h_vector_by_descent();
        let mut p = NcPolynomial::zero(Alphabet::Ab);
        for (s, v) in h.iter() {
            if v == 0 {
                continue;
            }
            let word = Word::ab_from_descents(r, |i| s.contains(i));
            p.add_term(word, v.into());
        }
        p
    }

    /// Checks the EL property of the minimal labeling on every interval:
    /// exactly one saturated chain has weakly increasing labels, and it is
    /// lexicographically first. Exhaustive; intended for small lattices.
    pub fn verify_el_labeling(&self) -> std::result::Result<(), String> {
        let n_flats = self.num_flats() as u32;
        for x in 0..n_flats {
            for y in (x + 1)..n_flats {
                let (fx, fy) = (self.flat(x), self.flat(y));
                if !fx.is_subset_of(fy) || fx == fy {
                    continue;
                }
                let mut seqs: Vec<Vec<u8>> = Vec::new();
                self.interval_chains(x, y, &mut Vec::new(), &mut seqs);
                for s in &mut seqs {
                    *s = s.iter().map(|&a| self.ord.key(a)).collect();
                }
                seqs.sort();
                let rising: Vec<&Vec<u8>> = seqs
                    .iter()
                    .filter(|s| s.windows(2).all(|w| w[0] <= w[1]))
                    .collect();
                if rising.len() != 1 {
                    return Err(format!(
                        "interval [{fx}, {fy}] has {} rising chains",
                        rising.len()
                    ));
                }
                if rising[0] != &seqs[0] {
                    return Err(format!(
                        "rising chain of [{fx}, {fy}] is not lex-first"
                    ));
                }
            }
        }
        Ok(())
    }

    fn interval_chains(&self, at: u32, top: u32, labels: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if at == top {
            out.push(labels.clone());
            return;
        }
        let top_flat = self.flat(top);
        for &(up, label) in &self.covers_up[at as usize] {
            if self.flat(up).is_subset_of(top_flat) {
                labels.push(label);
                self.interval_chains(up, top, labels, out);
                labels.pop();
            }
        }
    }

    /// Graded/atomic/semimodular checks, straight from the definitions.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        // Graded: every non-top flat has a cover; covers go one level up
        // by construction.
        let top = self.num_flats() - 1;
        for id in 0..top {
            if self.covers_up[id].is_empty() {
                return Err(format!("flat {} has no cover", self.flat(id as u32)));
            }
        }
        // Atomic: every flat is the closure of the atoms below it.
        for level in &self.levels {
            for &f in level {
                if self.matroid.closure(f) != f {
                    return Err(format!("{f} is not closed"));
                }
            }
        }
        // Semimodular: rank(x v y) + rank(x ^ y) <= rank(x) + rank(y).
        let all: Vec<AtomSet> = self.levels.iter().flatten().copied().collect();
        for &x in &all {
            for &y in &all {
                let join = self.matroid.closure(x.union(y));
                let meet = x.intersection(y);
                let lhs = self.matroid.rank_of(join) + self.matroid.rank_of(meet);
                if lhs > self.matroid.rank_of(x) + self.matroid.rank_of(y) {
                    return Err(format!("semimodularity fails at {x}, {y}"));
                }
            }
        }
        Ok(())
    }

    /// Compares every `h_S` of this lattice against the truncated Boolean
    /// algebra (upper bound), the near pencil with the same rank and atom
    /// count (lower bound), and the Boolean algebra of the same rank
    /// (rank-only lower bound).
    pub fn verify_extremal_bounds(&self) -> Result<ExtremalReport> {
        let rank = self.rank();
        let n = self.num_atoms();
        let ord = AtomOrder::natural(n);
        let upper = build_lattice(&make_uniform(rank, n)?, ord.clone())?;
        let lower = if rank >= 3 {
            build_lattice(&make_near_pencil(rank, n)?, ord)?
        } else {
            // Rank <= 2: the near pencil degenerates to the uniform matroid.
            build_lattice(&make_uniform(rank, n)?, ord)?
        };
        let boolean = build_lattice(&make_boolean(rank)?, AtomOrder::natural(rank))?;

        let h = self.flag_h_vector_incl_excl();
        let hu = upper.flag_h_vector_incl_excl();
        let hl = lower.flag_h_vector_incl_excl();
        let hb = boolean.flag_h_vector_incl_excl();

        let mut report = ExtremalReport {
            checked: 0,
            violations: Vec::new(),
        };
        for s in RankSet::all(self.r()) {
            report.checked += 3;
            let v = h.get(s);
            if v > hu.get(s) {
                report.violations.push(ExtremalViolation {
                    bound: ExtremalBound::UpperTruncatedBoolean,
                    s,
                    lhs: v,
                    rhs: hu.get(s),
                });
            }
            if v < hl.get(s) {
                report.violations.push(ExtremalViolation {
                    bound: ExtremalBound::LowerNearPencil,
                    s,
                    lhs: v,
                    rhs: hl.get(s),
                });
            }
            if v < hb.get(s) {
                report.violations.push(ExtremalViolation {
                    bound: ExtremalBound::LowerBoolean,
                    s,
                    lhs: v,
                    rhs: hb.get(s),
                });
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalBound {
    /// `h_S(L) <= h_S(B_{rank,n})`
    UpperTruncatedBoolean,
    /// `h_S(L) >= h_S(near pencil)`
    LowerNearPencil,
    /// `h_S(L) >= h_S(B_rank)`
    LowerBoolean,
}

#[derive(Debug, Clone)]
pub struct ExtremalViolation {
    pub bound: ExtremalBound,
    pub s: RankSet,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub checked: usize,
    pub violations: Vec<ExtremalViolation>,
}

impl ExtremalReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::two_line_example;

    fn lat(m: &Matroid) -> GeometricLattice {
        build_lattice(m, AtomOrder::natural(m.n())).unwrap()
    }

    fn rs(ranks: &[usize]) -> RankSet {
        RankSet::from_ranks(ranks.iter().copied())
    }

    #[test]
    fn two_line_example_flats() {
        let l = lat(&two_line_example());
        let counts: Vec<usize> = (0..=l.rank()).map(|k| l.flats_of_rank(k).len()).collect();
        assert_eq!(counts, vec![1, 5, 6, 1]);
        let rank2: Vec<AtomSet> = l.flats_of_rank(2).to_vec();
        let expect = vec![
            AtomSet::from_atoms([1, 2, 3]),
            AtomSet::from_atoms([1, 4]),
            AtomSet::from_atoms([2, 4]),
            AtomSet::from_atoms([1, 5]),
            AtomSet::from_atoms([2, 5]),
            AtomSet::from_atoms([3, 4, 5]),
        ];
        assert_eq!(rank2, expect);
    }

    #[test]
    fn near_pencil_flats() {
        let l = lat(&make_near_pencil(3, 4).unwrap());
        let rank2: Vec<AtomSet> = l.flats_of_rank(2).to_vec();
        let expect = vec![
            AtomSet::from_atoms([1, 2]),
            AtomSet::from_atoms([1, 3]),
            AtomSet::from_atoms([1, 4]),
            AtomSet::from_atoms([2, 3, 4]),
        ];
        assert_eq!(rank2, expect);
    }

    #[test]
    fn uniform_flats_are_general_position() {
        let l = lat(&make_uniform(3, 4).unwrap());
        assert_eq!(l.flats_of_rank(2).len(), 6);
    }

    #[test]
    fn chain_counts() {
        assert_eq!(lat(&make_near_pencil(3, 4).unwrap()).maximal_chains().len(), 9);
        assert_eq!(lat(&make_uniform(3, 4).unwrap()).maximal_chains().len(), 12);
        assert_eq!(lat(&make_boolean(3).unwrap()).maximal_chains().len(), 6);
        assert_eq!(lat(&two_line_example()).maximal_chains().len(), 14);
    }

    #[test]
    fn chains_have_distinct_labels_and_lex_order() {
        for m in [two_line_example(), make_uniform(3, 5).unwrap()] {
            let l = lat(&m);
            let labels: Vec<Vec<u8>> =
                l.maximal_chains().iter().map(|c| c.labels.clone()).collect();
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), labels.len(), "labels repeat");
            assert_eq!(sorted, labels, "emission is not lex-sorted");
        }
    }

    #[test]
    fn flag_f_values() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        assert_eq!(np.flag_f(rs(&[1])), 4);
        assert_eq!(np.flag_f(rs(&[2])), 4);
        assert_eq!(np.flag_f(rs(&[1, 2])), 9);
        assert_eq!(np.flag_f(RankSet::EMPTY), 1);
        let u = lat(&make_uniform(3, 5).unwrap());
        assert_eq!(u.flag_f(rs(&[2])), 10);
    }

    #[test]
    fn flag_h_values_both_routes() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        for (s, expect) in [
            (RankSet::EMPTY, 1),
            (rs(&[1]), 3),
            (rs(&[2]), 3),
            (rs(&[1, 2]), 2),
        ] {
            assert_eq!(np.flag_h_incl_excl(s), expect);
            assert_eq!(np.flag_h_by_descent(s), expect);
        }
        let u = lat(&make_uniform(3, 4).unwrap());
        for (s, expect) in [(rs(&[1]), 3), (rs(&[2]), 5), (rs(&[1, 2]), 3)] {
            assert_eq!(u.flag_h_incl_excl(s), expect);
            assert_eq!(u.flag_h_by_descent(s), expect);
        }
        let tl = lat(&two_line_example());
        for (s, expect) in [
            (RankSet::EMPTY, 1),
            (rs(&[1]), 4),
            (rs(&[2]), 5),
            (rs(&[1, 2]), 4),
        ] {
            assert_eq!(tl.flag_h_incl_excl(s), expect);
            assert_eq!(tl.flag_h_by_descent(s), expect);
        }
    }

    #[test]
    fn boolean_flag_h_matches_permutation_descents() {
        // Oracle: enumerate S_{r+1} directly and classify by descent set.
        for rank in 2..=5usize {
            let l = lat(&make_boolean(rank).unwrap());
            let r = rank - 1;
            let mut counts = vec![0i64; 1 << r];
            let mut perm: Vec<u8> = (1..=rank as u8).collect();
            permute_all(&mut perm, 0, &mut |p| {
                let mut mask = 0usize;
                for i in 1..p.len() {
                    if p[i - 1] > p[i] {
                        mask |= 1 << (i - 1);
                    }
                }
                counts[mask] += 1;
            });
            for s in RankSet::all(r) {
                assert_eq!(l.flag_h_by_descent(s), counts[s.mask() as usize]);
                assert_eq!(l.flag_h_incl_excl(s), counts[s.mask() as usize]);
            }
        }
    }

    fn permute_all(v: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute_all(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn h_vectors() {
        assert_eq!(
            lat(&make_near_pencil(3, 4).unwrap()).h_vector(),
            HVector(vec![1, 6, 2])
        );
        assert_eq!(lat(&make_boolean(3).unwrap()).h_vector(), HVector(vec![1, 4, 1]));
        for m in [two_line_example(), make_uniform(4, 6).unwrap()] {
            let h = lat(&m).h_vector();
            assert_eq!(h.0[0], 1);
            let chains = lat(&m).maximal_chains().len() as i64;
            assert_eq!(h.0.iter().sum::<i64>(), chains);
        }
    }

    #[test]
    fn flag_identities() {
        for m in [
            two_line_example(),
            make_uniform(3, 5).unwrap(),
            make_near_pencil(4, 6).unwrap(),
        ] {
            let l = lat(&m);
            let f = l.flag_f_vector();
            let h = l.flag_h_vector_by_descent();
            assert_eq!(h, l.flag_h_vector_incl_excl());
            // f_S = sum over T subset S of h_T, and h_S >= 0.
            for s in RankSet::all(l.r()) {
                let total: i64 = s.subsets().map(|t| h.get(t)).sum();
                assert_eq!(f.get(s), total);
                assert!(h.get(s) >= 0);
            }
            let chains = l.maximal_chains().len() as i64;
            let sum: i64 = RankSet::all(l.r()).map(|s| h.get(s)).sum();
            assert_eq!(sum, chains);
        }
    }

    #[test]
    fn ab_index_examples() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        assert_eq!(np.ab_index().to_string(), "aa + 3ab + 3ba + 2bb");
        let b2 = lat(&make_boolean(2).unwrap());
        assert_eq!(b2.ab_index().to_string(), "a + b");
        // h_{2} = 5 chains with the lone descent at position 2, i.e. word ab.
        let u = lat(&make_uniform(3, 4).unwrap());
        assert_eq!(u.ab_index().to_string(), "aa + 5ab + 3ba + 3bb");
    }

    #[test]
    fn extremal_bounds_hold_on_examples() {
        for m in [
            two_line_example(),
            make_near_pencil(3, 4).unwrap(),
            make_uniform(3, 4).unwrap(),
        ] {
            let report = lat(&m).verify_extremal_bounds().unwrap();
            assert!(report.ok(), "{:?}", report.violations);
        }
        // The maximizer meets its upper bound with equality.
        let u = lat(&make_uniform(3, 4).unwrap());
        let hu = u.flag_h_vector_incl_excl();
        let again = lat(&make_uniform(3, 4).unwrap()).flag_h_vector_incl_excl();
        assert_eq!(hu, again);
    }

    #[test]
    fn el_labeling_verified() {
        for m in [
            two_line_example(),
            make_uniform(3, 5).unwrap(),
            make_near_pencil(4, 6).unwrap(),
            make_boolean(4).unwrap(),
        ] {
            let l = lat(&m);
            l.verify_el_labeling().unwrap();
            l.verify_axioms().unwrap();
        }
    }

    #[test]
    fn el_labeling_with_custom_order() {
        let ord = AtomOrder::from_sequence(&[5, 3, 1, 2, 4]).unwrap();
        let l = build_lattice(&two_line_example(), ord).unwrap();
        l.verify_el_labeling().unwrap();
        // Flag h is independent of the atom order.
        let natural = lat(&two_line_example());
        assert_eq!(
            l.flag_h_vector_by_descent(),
            natural.flag_h_vector_by_descent()
        );
    }
}
