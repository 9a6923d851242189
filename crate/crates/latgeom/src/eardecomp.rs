//! Convex ear decomposition of the order complex of a geometric lattice.
//!
//! The nbc-bases B_1 < B_2 < ... (lex order) induce a partition of the
//! facets of the order complex: a maximal chain belongs to the ear of the
//! basis formed by its minimal labels. Ear 1 carries all orderings of B_1
//! and is a sphere; later ears are balls glued along their boundaries. The
//! verifiers here check exactly those statements combinatorially: Property M
//! for the reverse-lex shelling order, the boundary equality for each ear,
//! the pseudomanifold/Euler-characteristic conditions for ear 1, and the
//! h-vector and g-vector consequences.

use std::collections::{BTreeSet, HashMap};

use crate::atoms::{AtomSet, RankSet};
use crate::error::{LatgeomError, Result};
use crate::lattice::{GeometricLattice, HVector, MaximalChain};

/// One ear: the nbc-basis `B_j` and the facets whose minimal labeling and
/// basis labeling coincide, stored in reverse-lex order of their labelings
/// (the shelling order).
#[derive(Debug, Clone)]
pub struct Ear {
    /// 1-based position of the basis in the lex order of nbc-bases.
    pub index: usize,
    pub basis: AtomSet,
    pub facets: Vec<EarFacet>,
}

#[derive(Debug, Clone)]
pub struct EarFacet {
    /// The ordering of the basis = the minimal label sequence of the chain.
    pub ordering: Vec<u8>,
    /// Proper-flat ids of the chain, sorted ascending.
    pub vertices: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct EarDecomposition {
    pub ears: Vec<Ear>,
}

/// The facet of the order complex associated to an ordering of a basis:
/// the maximal chain of partial joins.
pub fn basis_labeling_facet(l: &GeometricLattice, ordering: &[u8]) -> Result<MaximalChain> {
    let set = AtomSet::from_atoms(ordering.iter().copied());
    if set.len() != ordering.len() || !l.matroid().is_basis(set) {
        return Err(LatgeomError::Precondition(format!(
            "{ordering:?} is not an ordering of a basis"
        )));
    }
    let ord = l.atom_order();
    let mut labels = Vec::with_capacity(ordering.len());
    let mut current = AtomSet::EMPTY;
    let mut flats = vec![l.flat_id(current).unwrap()];
    for &b in ordering {
        let next = l.join_atom(current, b);
        labels.push(ord.min_atom(next.difference(current)));
        current = next;
        flats.push(l.flat_id(current).expect("partial join must be a flat"));
    }
    let mut descents = RankSet::EMPTY;
    for i in 1..labels.len() {
        if ord.atom_lt(labels[i], labels[i - 1]) {
            descents = descents.insert(i);
        }
    }
    Ok(MaximalChain {
        flats,
        labels,
        descents,
    })
}

/// Is `ordering` the minimal labeling of its own partial-join chain?
pub fn is_minimal_labeling(l: &GeometricLattice, ordering: &[u8]) -> Result<bool> {
    let chain = basis_labeling_facet(l, ordering)?;
    Ok(chain.labels == ordering)
}

/// Transposes positions `i` and `i+1` (1-based) of a minimal labeling whose
/// entries ascend there. The result is checked to be a minimal labeling
/// again before it is returned.
pub fn switching(l: &GeometricLattice, labels: &[u8], i: usize) -> Result<Vec<u8>> {
    if i == 0 || i >= labels.len() {
        return Err(LatgeomError::Precondition(format!(
            "position {i} out of range 1..{}",
            labels.len()
        )));
    }
    if !is_minimal_labeling(l, labels)? {
        return Err(LatgeomError::Precondition(format!(
            "{labels:?} is not a minimal labeling"
        )));
    }
    if !l.atom_order().atom_lt(labels[i - 1], labels[i]) {
        return Err(LatgeomError::Precondition(format!(
            "positions {i},{} of {labels:?} do not ascend",
            i + 1
        )));
    }
    let mut swapped = labels.to_vec();
    swapped.swap(i - 1, i);
    if !is_minimal_labeling(l, &swapped)? {
        return Err(LatgeomError::Precondition(format!(
            "switch of {labels:?} at {i} is not minimal; lattice data is inconsistent"
        )));
    }
    Ok(swapped)
}

/// Groups the maximal chains of the order complex into ears by the set of
/// their minimal labels, which is always an nbc-basis.
pub fn build_ears(l: &GeometricLattice) -> Result<EarDecomposition> {
    let ord = l.atom_order();
    let nbc = l.matroid().nbc_bases(ord);
    let index_of: HashMap<u32, usize> = nbc
        .iter()
        .enumerate()
        .map(|(j, b)| (b.mask(), j))
        .collect();
    let mut facets: Vec<Vec<EarFacet>> = vec![Vec::new(); nbc.len()];
    for chain in l.maximal_chains() {
        let label_set = AtomSet::from_atoms(chain.labels.iter().copied());
        let j = *index_of.get(&label_set.mask()).unwrap_or_else(|| {
            panic!("label set {label_set} of a maximal chain is not an nbc-basis")
        });
        let mut vertices: Vec<u32> = chain.proper_flats().to_vec();
        vertices.sort_unstable();
        facets[j].push(EarFacet {
            ordering: chain.labels.clone(),
            vertices,
        });
    }
    let ears = nbc
        .into_iter()
        .zip(facets)
        .enumerate()
        .map(|(j, (basis, mut fs))| {
            // Reverse-lex shelling order on the basis labelings.
            fs.sort_by(|a, b| {
                let ka: Vec<u8> = a.ordering.iter().map(|&x| ord.key(x)).collect();
                let kb: Vec<u8> = b.ordering.iter().map(|&x| ord.key(x)).collect();
                kb.cmp(&ka)
            });
            Ear {
                index: j + 1,
                basis,
                facets: fs,
            }
        })
        .collect();
    Ok(EarDecomposition { ears })
}

fn factorial(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

impl EarDecomposition {
    pub fn num_ears(&self) -> usize {
        self.ears.len()
    }

    /// The defining partition conditions: ears nonempty, facet sets disjoint
    /// and exhaustive, ear 1 all of its orderings, later ears proper.
    pub fn verify_partition(&self, l: &GeometricLattice) -> std::result::Result<(), String> {
        let rank = l.rank();
        let total: usize = self.ears.iter().map(|e| e.facets.len()).sum();
        let chains = l.maximal_chains().len();
        if total != chains {
            return Err(format!("{total} ear facets vs {chains} maximal chains"));
        }
        let mut seen = BTreeSet::new();
        for ear in &self.ears {
            if ear.facets.is_empty() {
                return Err(format!("ear {} is empty", ear.index));
            }
            for f in &ear.facets {
                if !seen.insert(f.ordering.clone()) {
                    return Err(format!("facet {:?} appears twice", f.ordering));
                }
            }
        }
        if let Some(first) = self.ears.first() {
            if first.facets.len() != factorial(rank) {
                return Err(format!(
                    "ear 1 has {} facets, expected {}!",
                    first.facets.len(),
                    rank
                ));
            }
        }
        for ear in self.ears.iter().skip(1) {
            if ear.facets.len() >= factorial(rank) {
                return Err(format!(
                    "ear {} is not a proper subcomplex of its sphere",
                    ear.index
                ));
            }
        }
        Ok(())
    }

    /// Property-M check of the stored (reverse-lex) facet order of ear `j`.
    pub fn verify_shelling(&self, j: usize) -> Result<ShellingOutcome> {
        let ear = self.ear(j)?;
        let facets: Vec<&[u32]> = ear.facets.iter().map(|f| f.vertices.as_slice()).collect();
        Ok(ShellingOutcome {
            violations: property_m_violations(&facets),
        })
    }

    /// The boundary condition for ear `j >= 2`: faces shared with earlier
    /// ears are exactly the topological boundary of the ball.
    pub fn verify_boundary(&self, j: usize) -> Result<bool> {
        if j < 2 {
            return Err(LatgeomError::Precondition(
                "boundary condition applies to ears j >= 2".into(),
            ));
        }
        let ear = self.ear(j)?;
        let mut earlier = BTreeSet::new();
        for e in &self.ears[..j - 1] {
            collect_faces(e, &mut earlier);
        }
        let mut own = BTreeSet::new();
        collect_faces(ear, &mut own);
        let lhs: BTreeSet<Vec<u32>> = own.intersection(&earlier).cloned().collect();
        Ok(lhs == boundary_faces(ear))
    }

    /// Ear 1 must be a pseudomanifold sphere: every codimension-1 face in
    /// exactly two facets, and the Euler characteristic of a sphere.
    pub fn verify_sphere(&self, l: &GeometricLattice) -> std::result::Result<(), String> {
        let ear = match self.ears.first() {
            Some(e) => e,
            None => return Err("no ears".into()),
        };
        let r = l.rank() - 1; // facets have r vertices
        let mut faces = BTreeSet::new();
        collect_faces(ear, &mut faces);
        if r >= 1 {
            for face in &faces {
                if face.len() != r - 1 {
                    continue;
                }
                let count = ear
                    .facets
                    .iter()
                    .filter(|f| is_subset(face, &f.vertices))
                    .count();
                if count != 2 {
                    return Err(format!(
                        "codim-1 face {face:?} lies in {count} facets, want 2"
                    ));
                }
            }
        }
        let mut chi = 0i64;
        for face in &faces {
            if face.is_empty() {
                continue;
            }
            chi += if face.len() % 2 == 1 { 1 } else { -1 };
        }
        let expected = 1 + if (r as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
        if chi != expected {
            return Err(format!("Euler characteristic {chi}, want {expected}"));
        }
        Ok(())
    }

    fn ear(&self, j: usize) -> Result<&Ear> {
        if j == 0 || j > self.ears.len() {
            return Err(LatgeomError::Precondition(format!(
                "ear index {j} out of range 1..={}",
                self.ears.len()
            )));
        }
        Ok(&self.ears[j - 1])
    }
}

#[derive(Debug, Clone)]
pub struct ShellingOutcome {
    /// Pairs `(earlier facet, facet)` with no mediating facet, as indices
    /// into the checked order.
    pub violations: Vec<(usize, usize)>,
}

impl ShellingOutcome {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks Property M on an explicit facet order: for facets `F' < F` there
/// must be `F'' < F` with `F' n F` inside `F'' n F` and `|F'' n F| = |F|-1`.
/// Returns all violating pairs.
pub fn property_m_violations(facets: &[&[u32]]) -> Vec<(usize, usize)> {
    let mut violations = Vec::new();
    for fi in 1..facets.len() {
        let f = facets[fi];
        for pi in 0..fi {
            let common = intersect(facets[pi], f);
            let ok = (0..fi).any(|mi| {
                let mediator = intersect(facets[mi], f);
                mediator.len() + 1 == f.len() && is_subset(&common, &mediator)
            });
            if !ok {
                violations.push((pi, fi));
            }
        }
    }
    violations
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().filter(|x| b.contains(x)).copied().collect()
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// All faces of the ear (subsets of facet vertex sets, empty face included).
fn collect_faces(ear: &Ear, out: &mut BTreeSet<Vec<u32>>) {
    for f in &ear.facets {
        let k = f.vertices.len();
        for mask in 0u32..(1u32 << k) {
            let face: Vec<u32> = (0..k)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| f.vertices[b])
                .collect();
            out.insert(face);
        }
    }
}

/// The boundary of a ball, combinatorially: the downward closure of the
/// codimension-1 faces lying in exactly one facet.
fn boundary_faces(ear: &Ear) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let r = ear.facets.first().map_or(0, |f| f.vertices.len());
    if r == 0 {
        return out;
    }
    let mut faces = BTreeSet::new();
    collect_faces(ear, &mut faces);
    for face in &faces {
        if face.len() != r - 1 {
            continue;
        }
        let count = ear
            .facets
            .iter()
            .filter(|f| is_subset(face, &f.vertices))
            .count();
        if count == 1 {
            let k = face.len();
            for mask in 0u32..(1u32 << k) {
                let sub: Vec<u32> = (0..k)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| face[b])
                    .collect();
                out.insert(sub);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Theorem11Report {
    pub h: HVector,
    pub violations: Vec<String>,
}

impl Theorem11Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `h_{i-1} <= h_i` and `h_i <= h_{r-i}` for `2i <= r`.
pub fn verify_theorem_1_1(l: &GeometricLattice) -> Theorem11Report {
    let h = l.h_vector();
    let r = h.0.len() - 1;
    let mut violations = Vec::new();
    for i in 0..=r {
        if 2 * i > r {
            break;
        }
        if i >= 1 && h.0[i - 1] > h.0[i] {
            violations.push(format!("h_{} = {} > h_{} = {}", i - 1, h.0[i - 1], i, h.0[i]));
        }
        if h.0[i] > h.0[r - i] {
            violations.push(format!(
                "h_{} = {} > h_{} = {}",
                i,
                h.0[i],
                r - i,
                h.0[r - i]
            ));
        }
    }
    Theorem11Report { h, violations }
}

/// The numerical Macaulay condition: nonnegative, starts at 1, and each
/// entry bounded by the pseudopower of its predecessor.
pub fn is_m_vector(g: &[i64]) -> bool {
    if g.is_empty() || g[0] != 1 {
        return false;
    }
    if g.iter().any(|&x| x < 0) {
        return false;
    }
    for i in 1..g.len() - 1 {
        if g[i + 1] > macaulay_pseudopower(g[i], i) {
            return false;
        }
    }
    true
}

/// `a^<i>`: write `a` in its i-binomial representation and bump every
/// binomial up by one in both arguments.
fn macaulay_pseudopower(a: i64, i: usize) -> i64 {
    if a == 0 {
        return 0;
    }
    let mut rest = a;
    let mut level = i as i64;
    let mut bound = 0i64;
    while rest > 0 && level >= 1 {
        // Largest m with C(m, level) <= rest.
        let mut m = level;
        while binomial(m + 1, level) <= rest {
            m += 1;
        }
        rest -= binomial(m, level);
        bound += binomial(m + 1, level + 1);
        level -= 1;
    }
    debug_assert_eq!(rest, 0, "binomial representation failed");
    bound
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// The g-vector of the order complex and whether it passes the M-vector test.
pub fn g_is_m_vector(l: &GeometricLattice) -> (Vec<i64>, bool) {
    let g = l.h_vector().g_vector();
    let ok = is_m_vector(&g);
    (g, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::AtomOrder;
    use crate::lattice::build_lattice;
    use crate::matroid::tests::two_line_example;
    use crate::matroid::{make_boolean, make_near_pencil, make_uniform, Matroid};

    fn lat(m: &Matroid) -> GeometricLattice {
        build_lattice(m, AtomOrder::natural(m.n())).unwrap()
    }

    #[test]
    fn basis_labeling_facets() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        let chain = basis_labeling_facet(&np, &[3, 2, 1]).unwrap();
        let flats: Vec<AtomSet> = chain.flats.iter().map(|&id| np.flat(id)).collect();
        assert_eq!(
            flats,
            vec![
                AtomSet::EMPTY,
                AtomSet::from_atoms([3]),
                AtomSet::from_atoms([2, 3, 4]),
                AtomSet::full(4)
            ]
        );

        let tl = lat(&two_line_example());
        let chain = basis_labeling_facet(&tl, &[4, 1, 2]).unwrap();
        let flats: Vec<AtomSet> = chain.flats.iter().map(|&id| tl.flat(id)).collect();
        assert_eq!(
            flats,
            vec![
                AtomSet::EMPTY,
                AtomSet::from_atoms([4]),
                AtomSet::from_atoms([1, 4]),
                AtomSet::full(5)
            ]
        );

        let free = lat(&make_boolean(4).unwrap());
        let chain = basis_labeling_facet(&free, &[1, 2, 3, 4]).unwrap();
        let flats: Vec<AtomSet> = chain.flats.iter().map(|&id| free.flat(id)).collect();
        for (k, f) in flats.iter().enumerate() {
            assert_eq!(*f, AtomSet::from_atoms(1..=k as u8));
        }

        assert!(basis_labeling_facet(&np, &[2, 3, 4]).is_err()); // not a basis
    }

    #[test]
    fn switching_examples() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        assert_eq!(switching(&np, &[1, 2, 3], 1).unwrap(), vec![2, 1, 3]);
        assert_eq!(switching(&np, &[1, 2, 3], 2).unwrap(), vec![1, 3, 2]);
        assert!(is_minimal_labeling(&np, &[2, 1, 3]).unwrap());
        assert!(is_minimal_labeling(&np, &[1, 3, 2]).unwrap());
        // Applying at a descent position is rejected.
        assert!(switching(&np, &[2, 1, 3], 1).is_err());
        // Non-minimal input is rejected: (1,2,4) labels to (1,2,3).
        assert!(switching(&np, &[1, 2, 4], 1).is_err());
    }

    #[test]
    fn ear_counts() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        let dec = build_ears(&np).unwrap();
        assert_eq!(dec.num_ears(), 2);
        assert_eq!(dec.ears[0].basis, AtomSet::from_atoms([1, 2, 3]));
        assert_eq!(dec.ears[0].facets.len(), 6);
        assert_eq!(dec.ears[1].basis, AtomSet::from_atoms([1, 2, 4]));
        assert_eq!(dec.ears[1].facets.len(), 3);
        let orderings: BTreeSet<Vec<u8>> = dec.ears[1]
            .facets
            .iter()
            .map(|f| f.ordering.clone())
            .collect();
        let expect: BTreeSet<Vec<u8>> =
            [vec![1, 4, 2], vec![4, 1, 2], vec![4, 2, 1]].into_iter().collect();
        assert_eq!(orderings, expect);

        let free = lat(&make_boolean(3).unwrap());
        let dec = build_ears(&free).unwrap();
        assert_eq!(dec.num_ears(), 1);
        assert_eq!(dec.ears[0].facets.len(), 6);

        let tl = lat(&two_line_example());
        let dec = build_ears(&tl).unwrap();
        let sizes: Vec<usize> = dec.ears.iter().map(|e| e.facets.len()).collect();
        assert_eq!(sizes, vec![6, 4, 3, 1]);
        assert_eq!(sizes.iter().sum::<usize>() as i64, tl.flag_f(RankSet::from_ranks([1, 2])));
        dec.verify_partition(&tl).unwrap();
    }

    #[test]
    fn reverse_ordering_is_always_a_facet() {
        for m in [
            two_line_example(),
            make_near_pencil(3, 5).unwrap(),
            make_uniform(3, 5).unwrap(),
        ] {
            let l = lat(&m);
            let ord = l.atom_order().clone();
            let dec = build_ears(&l).unwrap();
            for ear in &dec.ears {
                let mut rev = ord.sorted_atoms(ear.basis);
                rev.reverse();
                assert!(
                    ear.facets.iter().any(|f| f.ordering == rev),
                    "reverse ordering of {} missing",
                    ear.basis
                );
            }
            // Reversed non-nbc bases are not minimal labelings.
            let nbc: Vec<AtomSet> = m.nbc_bases(&ord);
            for b in m.bases() {
                if nbc.contains(b) {
                    continue;
                }
                let mut rev = ord.sorted_atoms(*b);
                rev.reverse();
                assert!(!is_minimal_labeling(&l, &rev).unwrap());
            }
        }
    }

    #[test]
    fn ears_are_switching_upsets() {
        for m in [two_line_example(), make_uniform(3, 5).unwrap()] {
            let l = lat(&m);
            let dec = build_ears(&l).unwrap();
            for ear in &dec.ears {
                let members: BTreeSet<Vec<u8>> =
                    ear.facets.iter().map(|f| f.ordering.clone()).collect();
                for f in &ear.facets {
                    for i in 1..f.ordering.len() {
                        if f.ordering[i - 1] < f.ordering[i] {
                            let swapped = switching(&l, &f.ordering, i).unwrap();
                            assert!(members.contains(&swapped));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shelling_of_all_ears() {
        for m in [
            two_line_example(),
            make_near_pencil(3, 4).unwrap(),
            make_uniform(3, 5).unwrap(),
            make_uniform(4, 5).unwrap(),
        ] {
            let l = lat(&m);
            let dec = build_ears(&l).unwrap();
            for j in 1..=dec.num_ears() {
                assert!(dec.verify_shelling(j).unwrap().ok(), "ear {j}");
            }
        }
    }

    #[test]
    fn shuffled_order_fails_property_m() {
        let l = lat(&make_uniform(4, 5).unwrap());
        let dec = build_ears(&l).unwrap();
        let ear1 = &dec.ears[0];
        let facets: Vec<&[u32]> = ear1.facets.iter().map(|f| f.vertices.as_slice()).collect();
        // Put a facet nearly-disjoint from facets[0] right after it.
        let far = (1..facets.len())
            .max_by_key(|&i| facets[0].len() - intersect(facets[0], facets[i]).len())
            .unwrap();
        assert!(intersect(facets[0], facets[far]).len() < facets[0].len() - 1);
        let mut order = vec![facets[0], facets[far]];
        order.extend(
            (1..facets.len())
                .filter(|&i| i != far)
                .map(|i| facets[i]),
        );
        assert!(!property_m_violations(&order).is_empty());
    }

    #[test]
    fn boundary_equality() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        let dec = build_ears(&np).unwrap();
        assert!(dec.verify_boundary(2).unwrap());
        assert!(dec.verify_boundary(1).is_err());

        let u = lat(&make_uniform(3, 4).unwrap());
        let dec = build_ears(&u).unwrap();
        for j in 2..=dec.num_ears() {
            assert!(dec.verify_boundary(j).unwrap(), "ear {j}");
        }
    }

    #[test]
    fn ear_one_is_a_sphere() {
        for m in [
            two_line_example(),
            make_near_pencil(3, 4).unwrap(),
            make_uniform(4, 5).unwrap(),
            make_uniform(2, 4).unwrap(),
        ] {
            let l = lat(&m);
            let dec = build_ears(&l).unwrap();
            dec.verify_sphere(&l).unwrap();
        }
    }

    #[test]
    fn theorem_1_1_examples() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        let report = verify_theorem_1_1(&np);
        assert!(report.ok());
        assert_eq!(report.h, HVector(vec![1, 6, 2]));

        let b4 = lat(&make_boolean(4).unwrap());
        let report = verify_theorem_1_1(&b4);
        assert!(report.ok());
        assert_eq!(report.h, HVector(vec![1, 11, 11, 1]));

        assert!(verify_theorem_1_1(&lat(&make_uniform(4, 6).unwrap())).ok());
    }

    #[test]
    fn m_vector_test() {
        let np = lat(&make_near_pencil(3, 4).unwrap());
        let (g, ok) = g_is_m_vector(&np);
        assert_eq!(g, vec![1, 5]);
        assert!(ok);
        assert!(!is_m_vector(&[1, 3, 20]));
        assert!(is_m_vector(&[1, 3, 6]));
        assert!(!is_m_vector(&[2, 1]));
        assert!(!is_m_vector(&[1, -1]));
        assert!(is_m_vector(&[1]));
        let (g, ok) = g_is_m_vector(&lat(&make_boolean(4).unwrap()));
        assert_eq!(g, vec![1, 10, 0]);
        assert!(ok);
    }

    #[test]
    fn macaulay_bound_values() {
        assert_eq!(macaulay_pseudopower(3, 1), 6); // 3 = C(3,1) -> C(4,2)
        assert_eq!(macaulay_pseudopower(6, 2), 10); // 6 = C(4,2) -> C(5,3)
        assert_eq!(macaulay_pseudopower(5, 2), 7); // C(3,2)+C(2,1) -> C(4,3)+C(3,2)
        assert_eq!(macaulay_pseudopower(0, 3), 0);
    }
}
