//! The whole-corpus verification sweep behind `latgeom verify-all`.
//!
//! Every universally-quantified claim that the library checks per lattice is
//! run here over a generated corpus, in parallel, with an optional wall-clock
//! budget. Results are aggregated per check; failures carry their subject
//! and a short detail string.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::atoms::{AtomOrder, RankSet};
use crate::bruhat::{verify_conjecture, verify_grouped_bijection};
use crate::cdindex::{compare_coefficientwise, zonotope_c2d, CoeffCmp, NcPolynomial};
use crate::corpus::{Corpus, CorpusEntry};
use crate::eardecomp::{build_ears, g_is_m_vector, verify_theorem_1_1};
use crate::error::Result;
use crate::lattice::build_lattice;
use crate::matroid::{make_near_pencil, make_uniform};

/// Smallest and largest zonotope c-2d-index at a fixed (rank, atoms).
struct ZonotopeRefs {
    lower: NcPolynomial,
    upper: NcPolynomial,
}

fn zonotope_refs(rank: usize, n: usize) -> Result<ZonotopeRefs> {
    let ord = AtomOrder::natural(n);
    let upper_m = make_uniform(rank, n)?;
    let upper = zonotope_c2d(&build_lattice(&upper_m, ord.clone())?);
    let lower = if rank >= 3 && n > rank {
        zonotope_c2d(&build_lattice(&make_near_pencil(rank, n)?, ord)?)
    } else {
        upper.clone()
    };
    Ok(ZonotopeRefs { lower, upper })
}

#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub check: &'static str,
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub check: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug)]
pub struct VerifyAllReport {
    pub summaries: Vec<CheckSummary>,
    pub failures: Vec<CheckFailure>,
    pub entries: usize,
    pub complete: bool,
    pub elapsed: Duration,
}

impl VerifyAllReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.complete
    }
}

pub struct VerifyAllOptions {
    pub budget: Option<Duration>,
    /// Ear verification cap: entries with more atoms are skipped (the face
    /// materialization is the expensive part of the sweep).
    pub ears_max_rank: usize,
    pub ears_max_atoms: usize,
    /// Rank range of the dominance pairs used for the h-inequality check.
    pub dominance_max_r: usize,
}

impl Default for VerifyAllOptions {
    fn default() -> Self {
        VerifyAllOptions {
            budget: None,
            ears_max_rank: 4,
            ears_max_atoms: 7,
            dominance_max_r: 4,
        }
    }
}

const CHECKS: &[&str] = &[
    "flag-h-agreement",
    "extremal-bounds",
    "lattice-axioms",
    "el-labeling",
    "ears",
    "theorem-1.1",
    "g-m-vector",
    "zonotope-extremal",
    "grouped-inequality",
    "dominance-h-consequence",
];

/// Verification results for one corpus entry.
fn check_entry(
    entry: &CorpusEntry,
    opts: &VerifyAllOptions,
    dominance_pairs: &[(usize, RankSet, RankSet)],
    zono: &HashMap<(usize, usize), ZonotopeRefs>,
) -> Vec<CheckFailure> {
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(CheckFailure {
            check,
            subject: String::new(), // filled by caller
            detail,
        });
    };
    let m = &entry.matroid;
    let l = match build_lattice(m, AtomOrder::natural(m.n())) {
        Ok(l) => l,
        Err(e) => {
            fail("lattice-axioms", format!("build failed: {e}"));
            return failures;
        }
    };

    // Two flag-h routes agree for every S.
    let by_descent = l.flag_h_vector_by_descent();
    let by_incl_excl = l.flag_h_vector_incl_excl();
    if by_descent != by_incl_excl {
        for s in RankSet::all(l.r()) {
            if by_descent.get(s) != by_incl_excl.get(s) {
                fail(
                    "flag-h-agreement",
                    format!(
                        "S = {s}: descents {} vs inclusion-exclusion {}",
                        by_descent.get(s),
                        by_incl_excl.get(s)
                    ),
                );
            }
        }
    }

    match l.verify_extremal_bounds() {
        Ok(report) => {
            for v in report.violations {
                fail(
                    "extremal-bounds",
                    format!("{:?} at S = {}: {} vs {}", v.bound, v.s, v.lhs, v.rhs),
                );
            }
        }
        Err(e) => fail("extremal-bounds", e.to_string()),
    }

    if let Err(e) = l.verify_axioms() {
        fail("lattice-axioms", e);
    }
    if m.n() <= 7 {
        if let Err(e) = l.verify_el_labeling() {
            fail("el-labeling", e);
        }
    }

    if l.rank() <= opts.ears_max_rank && m.n() <= opts.ears_max_atoms {
        match build_ears(&l) {
            Ok(dec) => {
                if let Err(e) = dec.verify_partition(&l) {
                    fail("ears", format!("partition: {e}"));
                }
                if let Err(e) = dec.verify_sphere(&l) {
                    fail("ears", format!("sphere: {e}"));
                }
                for j in 1..=dec.num_ears() {
                    match dec.verify_shelling(j) {
                        Ok(outcome) if !outcome.ok() => fail(
                            "ears",
                            format!("ear {j}: {} property-M violations", outcome.violations.len()),
                        ),
                        Err(e) => fail("ears", format!("ear {j}: {e}")),
                        _ => {}
                    }
                    if j >= 2 {
                        match dec.verify_boundary(j) {
                            Ok(true) => {}
                            Ok(false) => fail("ears", format!("ear {j}: boundary mismatch")),
                            Err(e) => fail("ears", format!("ear {j}: {e}")),
                        }
                    }
                }
            }
            Err(e) => fail("ears", e.to_string()),
        }
    }

    let t11 = verify_theorem_1_1(&l);
    for v in &t11.violations {
        fail("theorem-1.1", v.clone());
    }
    let (g, ok) = g_is_m_vector(&l);
    if !ok {
        fail("g-m-vector", format!("g = {g:?}"));
    }

    // Zonotope c-2d-index lies between the fixed-(rank, n) extremes.
    if let Some(refs) = zono.get(&(l.rank(), m.n())) {
        let z = zonotope_c2d(&l);
        match compare_coefficientwise(&refs.lower, &z) {
            Ok(CoeffCmp::Leq | CoeffCmp::Equal) => {}
            Ok(other) => fail("zonotope-extremal", format!("near pencil vs entry: {other}")),
            Err(e) => fail("zonotope-extremal", e.to_string()),
        }
        match compare_coefficientwise(&z, &refs.upper) {
            Ok(CoeffCmp::Leq | CoeffCmp::Equal) => {}
            Ok(other) => fail("zonotope-extremal", format!("entry vs uniform: {other}")),
            Err(e) => fail("zonotope-extremal", e.to_string()),
        }
    }

    // Grouped inequality h_{3} + h_{2} <= h_{2,3} + h_{1,3} in rank >= 4.
    if l.rank() >= 4 {
        let h = &by_descent;
        let lhs = h.get(RankSet::from_ranks([3])) + h.get(RankSet::from_ranks([2]));
        let rhs = h.get(RankSet::from_ranks([2, 3])) + h.get(RankSet::from_ranks([1, 3]));
        if lhs > rhs {
            fail("grouped-inequality", format!("{lhs} > {rhs}"));
        }
    }

    // Verified dominance pairs force h_T <= h_S at this rank and above.
    for &(r, s, t) in dominance_pairs {
        if r > l.r() {
            continue;
        }
        let (ht, hs) = (by_descent.get(t), by_descent.get(s));
        if ht > hs {
            fail(
                "dominance-h-consequence",
                format!("h_{t} = {ht} > h_{s} = {hs} (pair from r = {r})"),
            );
        }
    }

    failures
}

pub fn verify_all(corpus: &Corpus, opts: &VerifyAllOptions) -> Result<VerifyAllReport> {
    let start = Instant::now();

    // The displayed grouped bijection itself.
    let mut failures: Vec<CheckFailure> = Vec::new();
    if let Err(e) = verify_grouped_bijection() {
        failures.push(CheckFailure {
            check: "grouped-inequality",
            subject: "bijection".into(),
            detail: e.to_string(),
        });
    }

    // Dominance pairs established once, reused across entries.
    let mut dominance_pairs: Vec<(usize, RankSet, RankSet)> = Vec::new();
    for r in 1..=opts.dominance_max_r {
        let report = verify_conjecture(r, None, None)?;
        for inst in report.instances {
            if inst.status == crate::bruhat::InstanceStatus::Dominated {
                dominance_pairs.push((r, inst.t_beta, inst.t));
            }
        }
    }

    // Reference zonotope indices per (rank, atoms) cell.
    let mut zono: HashMap<(usize, usize), ZonotopeRefs> = HashMap::new();
    for entry in &corpus.entries {
        let key = (entry.matroid.rank(), entry.matroid.n());
        if let std::collections::hash_map::Entry::Vacant(v) = zono.entry(key) {
            v.insert(zonotope_refs(key.0, key.1)?);
        }
    }

    let out_of_time = AtomicBool::new(false);
    let over_budget = || opts.budget.is_some_and(|b| start.elapsed() > b);
    let per_entry: Vec<(usize, Vec<CheckFailure>)> = corpus
        .entries
        .par_iter()
        .enumerate()
        .map(|(idx, entry)| {
            if over_budget() {
                out_of_time.store(true, Ordering::Relaxed);
                return (idx, Vec::new());
            }
            let mut fs = check_entry(entry, opts, &dominance_pairs, &zono);
            for f in &mut fs {
                f.subject = entry.name.clone();
            }
            (idx, fs)
        })
        .collect();
    let mut per_entry = per_entry;
    per_entry.sort_by_key(|(idx, _)| *idx);
    for (_, fs) in per_entry {
        failures.extend(fs);
    }

    let mut summaries = Vec::new();
    for &check in CHECKS {
        let failed = failures.iter().filter(|f| f.check == check).count();
        // Passed counts are per-entry for entry checks; report entries minus
        // failing subjects to stay simple and honest about coverage.
        let failing_subjects: std::collections::HashSet<&str> = failures
            .iter()
            .filter(|f| f.check == check)
            .map(|f| f.subject.as_str())
            .collect();
        summaries.push(CheckSummary {
            check,
            passed: corpus.entries.len().saturating_sub(failing_subjects.len()),
            failed,
        });
    }

    Ok(VerifyAllReport {
        summaries,
        failures,
        entries: corpus.entries.len(),
        complete: !out_of_time.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate_corpus, CorpusBounds};

    #[test]
    fn small_corpus_sweep_is_green() {
        let corpus = generate_corpus(&CorpusBounds {
            exhaustive_max_rank: 3,
            exhaustive_max_atoms: 5,
            named_max_rank: 4,
            named_max_atoms: 6,
        })
        .unwrap();
        let report = verify_all(&corpus, &VerifyAllOptions::default()).unwrap();
        assert!(report.ok(), "{:?}", report.failures);
        assert!(report.entries > 30);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let corpus = generate_corpus(&CorpusBounds {
            exhaustive_max_rank: 4,
            exhaustive_max_atoms: 6,
            named_max_rank: 5,
            named_max_atoms: 8,
        })
        .unwrap();
        let report = verify_all(
            &corpus,
            &VerifyAllOptions {
                budget: Some(Duration::ZERO),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!report.complete);
        assert!(!report.ok());
    }
}
