//! Command-line interface: inspect matroids, compute flag vectors and
//! ab/cd-indices, verify ear decompositions, and decide weak-order dominance.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 budget exhausted (partial report emitted).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use latgeom::atoms::{AtomOrder, RankSet};
use latgeom::bruhat::{
    build_hall_matching, orderings_independence, verify_conjecture, DominanceCache,
    DominanceEngine, HallOutcome, InstanceMethod, InstanceStatus,
};
use latgeom::cdindex::{compare_coefficientwise, zonotope_c2d};
use latgeom::corpus::{generate_corpus, CorpusBounds};
use latgeom::eardecomp::{build_ears, g_is_m_vector, verify_theorem_1_1};
use latgeom::error::LatgeomError;
use latgeom::io::load_matroid;
use latgeom::lattice::{build_lattice, GeometricLattice};
use latgeom::matroid::{make_boolean, make_near_pencil, make_uniform, Matroid};
use latgeom::report::{verify_all, VerifyAllOptions};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "latgeom", version, about = "Flag vectors, ear decompositions \
and weak-order dominance for geometric lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report style: raw TSV or aligned tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    CompactText,
}

#[derive(Subcommand)]
enum Command {
    /// Matroid inspection.
    Matroid {
        #[command(subcommand)]
        cmd: MatroidCmd,
    },
    /// Flag vectors and the ab-index of the lattice of flats.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Convex ear decomposition verification.
    Ears {
        #[command(subcommand)]
        cmd: EarsCmd,
    },
    /// Weak Bruhat order: dominance, the conjecture sweep, Hall matchings.
    Bruhat {
        #[command(subcommand)]
        cmd: BruhatCmd,
    },
    /// cd-index computations for zonotopes.
    Cdindex {
        #[command(subcommand)]
        cmd: CdindexCmd,
    },
    /// Run every corpus-quantified verification.
    VerifyAll(VerifyAllArgs),
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// Print size, circuits and nbc-bases.
    Info(SourceArgs),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Emit S, f_S, h_S rows over all subsets of [r].
    Flags(SourceArgs),
    /// Emit the ab-index as coefficient/word rows.
    Abindex(SourceArgs),
}

#[derive(Subcommand)]
enum EarsCmd {
    /// Build the decomposition and verify shelling, boundaries, sphere,
    /// the h-vector inequalities and the M-vector test.
    Verify(SourceArgs),
}

#[derive(Subcommand)]
enum BruhatCmd {
    /// Decide whether S dominates T over [r].
    Dominates {
        #[arg(long)]
        r: usize,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "T")]
        t: String,
        /// Write the injection as TSV rows `pi<TAB>phi(pi)`.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Sweep all qualifying T and test that T ∘ β dominates T.
    Conjecture {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Match (i-1)-subsets of [r] to dominating i-supersets.
    Hall {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Count permutations with descent set S in which r+1 precedes i,
    /// for every i; the counts must agree.
    Orderings {
        #[arg(long)]
        r: usize,
        #[arg(long = "S")]
        s: String,
    },
}

#[derive(Subcommand)]
enum CdindexCmd {
    /// The c-2d-index of the zonotope over the lattice of flats.
    Zonotope(SourceArgs),
    /// Coefficientwise comparison of two zonotope c-2d-indices.
    Compare {
        /// Matroid files (exactly two).
        #[arg(long = "matroid", num_args = 1)]
        matroids: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyAllArgs {
    /// Corpus selector; only `default` exists.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Exhaustive enumeration bounds.
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
    #[arg(long, default_value_t = 6)]
    max_atoms: usize,
    /// Named-family bounds.
    #[arg(long, default_value_t = 5)]
    named_max_rank: usize,
    #[arg(long, default_value_t = 8)]
    named_max_atoms: usize,
    /// Ear verification cap on atoms.
    #[arg(long, default_value_t = 7)]
    ears_max_atoms: usize,
    #[arg(long)]
    budget_secs: Option<u64>,
}

#[derive(Args)]
struct SourceArgs {
    /// Matroid file (TOML: n, rank, bases).
    #[arg(long, conflicts_with = "family")]
    matroid: Option<PathBuf>,
    /// Named family: uniform | near-pencil | boolean.
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    atoms: Option<usize>,
    /// Atom order as a comma-separated permutation of 1..=n.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Uniform,
    #[value(name = "near-pencil")]
    NearPencil,
    Boolean,
}

impl SourceArgs {
    fn resolve(&self) -> Result<(Matroid, AtomOrder), LatgeomError> {
        let matroid = match (&self.matroid, self.family) {
            (Some(path), None) => load_matroid(path)?,
            (None, Some(family)) => {
                let rank = self
                    .rank
                    .ok_or_else(|| LatgeomError::Parse("--family needs --rank".into()))?;
                let need_atoms = |name: &str| {
                    self.atoms.ok_or_else(|| {
                        LatgeomError::Parse(format!("--family {name} needs --atoms"))
                    })
                };
                match family {
                    Family::Uniform => make_uniform(rank, need_atoms("uniform")?)?,
                    Family::NearPencil => make_near_pencil(rank, need_atoms("near-pencil")?)?,
                    Family::Boolean => make_boolean(self.atoms.unwrap_or(rank))?,
                }
            }
            _ => {
                return Err(LatgeomError::Parse(
                    "give exactly one of --matroid FILE or --family NAME".into(),
                ))
            }
        };
        let order = match &self.order {
            None => AtomOrder::natural(matroid.n()),
            Some(text) => {
                let seq: Vec<u8> = text
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| LatgeomError::Parse(format!("bad order entry `{p}`")))
                    })
                    .collect::<Result<_, _>>()?;
                AtomOrder::from_sequence(&seq)?
            }
        };
        if order.n() != matroid.n() {
            return Err(LatgeomError::Parse(format!(
                "--order lists {} atoms, matroid has {}",
                order.n(),
                matroid.n()
            )));
        }
        Ok((matroid, order))
    }

    fn lattice(&self) -> Result<GeometricLattice, LatgeomError> {
        let (m, ord) = self.resolve()?;
        build_lattice(&m, ord)
    }
}

fn open_cache(
    explicit: Option<&PathBuf>,
) -> Result<Option<(DominanceCache, PathBuf)>, LatgeomError> {
    let path = explicit
        .cloned()
        .or_else(|| std::env::var_os("LATGEOM_CACHE").map(PathBuf::from));
    let Some(path) = path else { return Ok(None) };
    let cache = if path.exists() {
        DominanceCache::load(&path)?
    } else {
        DominanceCache::new()
    };
    Ok(Some((cache, path)))
}

fn close_cache(cache: Option<(DominanceCache, PathBuf)>) -> Result<(), LatgeomError> {
    if let Some((cache, path)) = cache {
        cache.save(&path)?;
        eprintln!(
            "cache: {} entries at {}, {} hits this run",
            cache.len(),
            path.display(),
            cache.hits()
        );
    }
    Ok(())
}

fn parse_rank_set(text: &str, r: usize) -> Result<RankSet, LatgeomError> {
    let set: RankSet = text.parse()?;
    if set.iter().any(|i| i > r) {
        return Err(LatgeomError::Parse(format!("{set} is not inside [{r}]")));
    }
    Ok(set)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_INPUT
        }
    };
    let code = match cli.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool");
            pool.install(run)
        }
        None => run(),
    };
    ExitCode::from(code)
}

fn dispatch(cli: &Cli) -> Result<u8, LatgeomError> {
    match &cli.command {
        Command::Matroid { cmd } => match cmd {
            MatroidCmd::Info(src) => matroid_info(src),
        },
        Command::Lattice { cmd } => match cmd {
            LatticeCmd::Flags(src) => lattice_flags(src),
            LatticeCmd::Abindex(src) => lattice_abindex(src),
        },
        Command::Ears { cmd } => match cmd {
            EarsCmd::Verify(src) => ears_verify(src),
        },
        Command::Bruhat { cmd } => match cmd {
            BruhatCmd::Dominates {
                r,
                s,
                t,
                witness,
                cache,
            } => bruhat_dominates(*r, s, t, witness.as_ref(), cache.as_ref()),
            BruhatCmd::Conjecture {
                r,
                budget_secs,
                cache,
            } => bruhat_conjecture(*r, *budget_secs, cache.as_ref(), cli.format),
            BruhatCmd::Hall { r, i, cache } => bruhat_hall(*r, *i, cache.as_ref()),
            BruhatCmd::Orderings { r, s } => bruhat_orderings(*r, s),
        },
        Command::Cdindex { cmd } => match cmd {
            CdindexCmd::Zonotope(src) => cdindex_zonotope(src),
            CdindexCmd::Compare { matroids } => cdindex_compare(matroids),
        },
        Command::VerifyAll(args) => run_verify_all(args, cli.format),
    }
}

fn matroid_info(src: &SourceArgs) -> Result<u8, LatgeomError> {
    let (m, ord) = src.resolve()?;
    println!("n\t{}", m.n());
    println!("rank\t{}", m.rank());
    println!("bases\t{}", m.bases().len());
    let circuits = m.circuits();
    println!("circuits\t{}", circuits.len());
    for c in &circuits {
        println!("circuit\t{c}");
    }
    let nbc = m.nbc_bases(&ord);
    println!("nbc_bases\t{}", nbc.len());
    for b in &nbc {
        println!("nbc\t{b}");
    }
    Ok(EXIT_OK)
}

fn lattice_flags(src: &SourceArgs) -> Result<u8, LatgeomError> {
    let l = src.lattice()?;
    let f = l.flag_f_vector();
    let h = l.flag_h_vector_by_descent();
    for s in RankSet::all(l.r()) {
        println!("{s}\t{}\t{}", f.get(s), h.get(s));
    }
    Ok(EXIT_OK)
}

fn lattice_abindex(src: &SourceArgs) -> Result<u8, LatgeomError> {
    let l = src.lattice()?;
    for (word, coeff) in l.ab_index().terms() {
        println!("{coeff}\t{word}");
    }
    Ok(EXIT_OK)
}

fn ears_verify(src: &SourceArgs) -> Result<u8, LatgeomError> {
    let l = src.lattice()?;
    let dec = build_ears(&l)?;
    let mut failed = false;
    println!("# j\tbasis\tfacets\tshelling_ok\tboundary_ok");
    for ear in &dec.ears {
        let shelling = dec.verify_shelling(ear.index)?.ok();
        failed |= !shelling;
        let boundary = if ear.index >= 2 {
            let ok = dec.verify_boundary(ear.index)?;
            failed |= !ok;
            if ok {
                "ok"
            } else {
                "FAIL"
            }
        } else {
            "-"
        };
        println!(
            "{}\t{}\t{}\t{}\t{}",
            ear.index,
            ear.basis,
            ear.facets.len(),
            if shelling { "ok" } else { "FAIL" },
            boundary
        );
    }
    let partition = dec.verify_partition(&l);
    failed |= partition.is_err();
    println!(
        "partition\t{}",
        partition.map_or_else(|e| format!("FAIL\t{e}"), |_| "ok".into())
    );
    let sphere = dec.verify_sphere(&l);
    failed |= sphere.is_err();
    println!(
        "sphere\t{}",
        sphere.map_or_else(|e| format!("FAIL\t{e}"), |_| "ok".into())
    );
    let t11 = verify_theorem_1_1(&l);
    failed |= !t11.ok();
    println!("theorem1.1\t{}", if t11.ok() { "ok" } else { "FAIL" });
    let (_, m_ok) = g_is_m_vector(&l);
    failed |= !m_ok;
    println!("g_M_vector\t{}", if m_ok { "ok" } else { "FAIL" });
    Ok(if failed { EXIT_VERIFY_FAIL } else { EXIT_OK })
}

fn bruhat_dominates(
    r: usize,
    s_text: &str,
    t_text: &str,
    witness_path: Option<&PathBuf>,
    cache_path: Option<&PathBuf>,
) -> Result<u8, LatgeomError> {
    let s = parse_rank_set(s_text, r)?;
    let t = parse_rank_set(t_text, r)?;
    let cache = open_cache(cache_path)?;
    let engine = match &cache {
        Some((c, _)) => DominanceEngine::with_cache(c),
        None => DominanceEngine::new(),
    };
    let outcome = engine.decide_full(r + 1, s, t, witness_path.is_some())?;
    println!("dominates\t{}", outcome.dominated);
    println!("method\t{:?}", outcome.method);
    if let (Some(path), Some(witness)) = (witness_path, &outcome.witness) {
        let mut file = std::fs::File::create(path)?;
        for (p, q) in witness {
            writeln!(file, "{p}\t{q}")?;
        }
        eprintln!(
            "witness: {} pairs written to {}",
            witness.len(),
            path.display()
        );
    }
    close_cache(cache)?;
    Ok(EXIT_OK)
}

fn bruhat_conjecture(
    r: usize,
    budget_secs: Option<u64>,
    cache_path: Option<&PathBuf>,
    format: Format,
) -> Result<u8, LatgeomError> {
    let cache = open_cache(cache_path)?;
    let report = verify_conjecture(
        r,
        budget_secs.map(Duration::from_secs),
        cache.as_ref().map(|(c, _)| c),
    )?;
    let mut failed = false;
    let mut skipped = false;
    for inst in &report.instances {
        let status = match inst.status {
            InstanceStatus::Dominated => "PASS",
            InstanceStatus::NotDominated => {
                failed = true;
                "FAIL"
            }
            InstanceStatus::Skipped => {
                skipped = true;
                "SKIPPED"
            }
        };
        let method = match inst.method {
            InstanceMethod::Matching => "matching",
            InstanceMethod::Symmetry => "symmetry",
        };
        match format {
            Format::Tsv => println!("{}\t{}\t{status}\t{method}", inst.t, inst.t_beta),
            Format::CompactText => println!(
                "{:<12} -> {:<12} {status:<8} ({method})",
                inst.t.to_string(),
                inst.t_beta.to_string()
            ),
        }
    }
    println!(
        "summary\tr={r}\tinstances={}\tcomplete={}",
        report.instances.len(),
        report.complete
    );
    close_cache(cache)?;
    Ok(if failed {
        EXIT_VERIFY_FAIL
    } else if skipped || !report.complete {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn bruhat_hall(r: usize, i: usize, cache_path: Option<&PathBuf>) -> Result<u8, LatgeomError> {
    let cache = open_cache(cache_path)?;
    let outcome = build_hall_matching(r, i, cache.as_ref().map(|(c, _)| c))?;
    let code = match outcome {
        HallOutcome::Saturated(pairs) => {
            for (t, s) in &pairs {
                println!("{t}\t{s}");
            }
            println!("saturated\ttrue\tpairs={}", pairs.len());
            EXIT_OK
        }
        HallOutcome::Violator {
            lefts,
            neighborhood,
        } => {
            for t in &lefts {
                println!("violator\t{t}");
            }
            println!(
                "saturated\tfalse\tfamily={}\tneighborhood={}",
                lefts.len(),
                neighborhood.len()
            );
            EXIT_VERIFY_FAIL
        }
    };
    close_cache(cache)?;
    Ok(code)
}

fn bruhat_orderings(r: usize, s_text: &str) -> Result<u8, LatgeomError> {
    let s = parse_rank_set(s_text, r)?;
    let (counts, ok) = orderings_independence(r, s)?;
    for (i, c) in counts.iter().enumerate() {
        println!("{}\t{c}", i + 1);
    }
    println!("independent\t{}", if ok { "ok" } else { "FAIL" });
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAIL })
}

fn cdindex_zonotope(src: &SourceArgs) -> Result<u8, LatgeomError> {
    let l = src.lattice()?;
    println!("# c-2d-index: coefficients absorb the factor 2 of every d");
    for (word, coeff) in zonotope_c2d(&l).terms() {
        println!("{coeff}\t{word}");
    }
    Ok(EXIT_OK)
}

fn cdindex_compare(paths: &[PathBuf]) -> Result<u8, LatgeomError> {
    if paths.len() != 2 {
        return Err(LatgeomError::Parse(
            "compare needs exactly two --matroid files".into(),
        ));
    }
    let mut indices = Vec::new();
    for path in paths {
        let m = load_matroid(path)?;
        let l = build_lattice(&m, AtomOrder::natural(m.n()))?;
        indices.push(zonotope_c2d(&l));
    }
    let cmp = compare_coefficientwise(&indices[0], &indices[1])?;
    println!("compare\t{cmp}");
    Ok(EXIT_OK)
}

fn run_verify_all(args: &VerifyAllArgs, format: Format) -> Result<u8, LatgeomError> {
    if args.corpus != "default" {
        return Err(LatgeomError::Parse(format!(
            "unknown corpus `{}`; only `default` exists",
            args.corpus
        )));
    }
    let corpus = generate_corpus(&CorpusBounds {
        exhaustive_max_rank: args.max_rank,
        exhaustive_max_atoms: args.max_atoms,
        named_max_rank: args.named_max_rank,
        named_max_atoms: args.named_max_atoms,
    })?;
    let report = verify_all(
        &corpus,
        &VerifyAllOptions {
            budget: args.budget_secs.map(Duration::from_secs),
            ears_max_atoms: args.ears_max_atoms,
            ..Default::default()
        },
    )?;
    for f in &report.failures {
        println!("FAIL\t{}\t{}\t{}", f.check, f.subject, f.detail);
    }
    for s in &report.summaries {
        match format {
            Format::Tsv => println!("CHECK\t{}\t{}\t{}", s.check, s.passed, s.failed),
            Format::CompactText => println!(
                "{:<26} passed {:>5}  failed {:>3}",
                s.check, s.passed, s.failed
            ),
        }
    }
    println!(
        "RESULT\t{}\tentries={}\tfailures={}\telapsed_ms={}",
        if report.ok() {
            "PASS"
        } else if !report.complete {
            "PARTIAL"
        } else {
            "FAIL"
        },
        report.entries,
        report.failures.len(),
        report.elapsed.as_millis()
    );
    Ok(if !report.complete {
        EXIT_BUDGET
    } else if report.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAIL
    })
}
