//! Subcommands. [`run_command`] never exits the process, so it can be driven
//! from tests; `main` only forwards its output and exit code.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use esakia_core::algebra::{heyting_complete, is_godel, prime_filters, spectrum, upset_algebra};
use esakia_core::constructions::{
    check_lifted_open, climb, downset_open_check, extract_subcover, gallery, root_topology_check, separation_witness,
    witness_for_set, ConstructionError, StagedTopology,
};
use esakia_core::duality::{double_dual_heyting, double_dual_lattice, double_dual_poset, godel_iff_root_system};
use esakia_core::random::{random_forest, random_poset, random_root_system, random_tree};
use esakia_core::{FinitePoset, FiniteTopology, PointSet};

use crate::document::{
    emit_poset, labels_of, parse_cover, parse_lattice, poset_document, poset_from_document, DocumentError, Kind,
    PosetDocument,
};
use crate::dot::export_dot;
use crate::report::{digest, Report};

pub const SEED_ENV: &str = "ESAKIA_SEED";

/// Open sets enumerated per level when checking lifted opens.
const OPEN_SET_LIMIT: usize = 1 << 12;

#[derive(Parser, Debug)]
#[command(name = "esakia", version, about = "Finite Esakia duality toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural recognisers and the enough-gaps condition.
    Check { input: PathBuf },
    /// Prime-filter spectrum of a bounded distributive lattice.
    Spectrum { input: PathBuf },
    /// Heyting algebra of upsets of a poset.
    Dual { input: PathBuf },
    /// Build the Esakia topology for a tree or a root system.
    Topologize {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        input: PathBuf,
    },
    /// Extract a finite subcover of a cover by top-level subbase members.
    Subcover {
        #[arg(long)]
        cover: PathBuf,
        input: PathBuf,
    },
    /// Run every applicable check on one poset.
    Verify { input: PathBuf },
    /// Seeded batch of random instances through `verify`.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        count: usize,
        /// Largest instance size.
        #[arg(long, default_value_t = 7)]
        size: usize,
        /// Directory receiving the documents of failing instances.
        #[arg(long)]
        quarantine: Option<PathBuf>,
    },
    /// Finite truncation of a named example.
    Gallery {
        name: String,
        n: usize,
        /// Print DOT instead of the report.
        #[arg(long)]
        dot: bool,
    },
    /// Graphviz rendering, optionally annotated with the topology.
    ExportDot {
        #[arg(long)]
        topology: bool,
        input: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Usage(String),
}

/// Everything a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    pub report: Option<Report>,
}

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_command_with_seed(argv, std::env::var(SEED_ENV).ok())
}

/// As [`run_command`], with the seed override passed explicitly.
pub fn run_command_with_seed<I, T>(argv: I, seed_override: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                failure(2, text)
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                    report: None,
                }
            };
        }
    };
    let start = Instant::now();
    let result = dispatch(cli.command, seed_override);
    match result {
        Ok((mut report, stdout)) => {
            report
                .timings
                .insert("total".into(), start.elapsed().as_secs_f64() * 1e3);
            let stdout = stdout.unwrap_or_else(|| report.to_json() + "\n");
            let stderr = report
                .verdicts
                .iter()
                .filter(|v| v.gate && !v.holds)
                .map(|v| format!("FAILED {}: {}\n", v.name, v.detail))
                .collect();
            Outcome {
                stdout,
                stderr,
                code: report.exit_code(),
                report: Some(report),
            }
        }
        Err(e) => failure(2, format!("error: {e}\n")),
    }
}

fn failure(code: i32, stderr: String) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr,
        code,
        report: None,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_poset(path: &Path) -> Result<(FinitePoset, Option<Kind>, String), CliError> {
    let text = read(path)?;
    let doc: PosetDocument = serde_json::from_str(&text).map_err(DocumentError::from)?;
    Ok((poset_from_document(&doc)?, doc.kind, digest(text.as_bytes())))
}

fn timed<T>(report: &mut Report, phase: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    report.timings.insert(phase.into(), start.elapsed().as_secs_f64() * 1e3);
    out
}

fn dispatch(command: Command, seed_override: Option<String>) -> Result<(Report, Option<String>), CliError> {
    match command {
        Command::Check { input } => {
            let (p, _, d) = load_poset(&input)?;
            let mut r = Report::new("check", d);
            check(&p, &mut r);
            Ok((r, None))
        }
        Command::Spectrum { input } => {
            let text = read(&input)?;
            let l = parse_lattice(&text)?;
            let mut r = Report::new("spectrum", digest(text.as_bytes()));
            let spec = timed(&mut r, "spectrum", || spectrum(&l));
            let iso = timed(&mut r, "duality", || double_dual_lattice(&l));
            r.gate(
                "lattice_double_dual",
                "lattice is isomorphic to the upsets of its spectrum via prime filters",
                iso.is_ok(),
                error_or(&iso),
            );
            let h = heyting_complete(&l).map_err(DocumentError::from)?;
            let g = is_godel(&h);
            r.info("godel", "prelinearity (x → y) ∨ (y → x) = 1", g.holds, g.counterexample);
            let filters: Vec<_> = prime_filters(&l).into_iter().map(|f| f.generator).collect();
            r.output = json!({ "spectrum": poset_document(&spec), "generators": filters });
            Ok((r, None))
        }
        Command::Dual { input } => {
            let (p, _, d) = load_poset(&input)?;
            let mut r = Report::new("dual", d);
            let a = timed(&mut r, "upsets", || upset_algebra(&p)).map_err(DocumentError::from)?;
            let iso = double_dual_poset(&p);
            r.gate(
                "poset_double_dual",
                "poset is isomorphic to the prime filters of its upset algebra",
                iso.is_ok(),
                error_or(&iso),
            );
            let hiso = double_dual_heyting(&a.algebra);
            r.gate(
                "heyting_double_dual",
                "upset algebra is isomorphic to the upsets of its spectrum as a Heyting algebra",
                hiso.is_ok(),
                error_or(&hiso),
            );
            horn(&p, &mut r);
            let l = a.algebra.lattice();
            r.output = json!({
                "sets": a.sets.iter().map(|&s| labels_of(&p, s)).collect::<Vec<_>>(),
                "meet": l.meet_table(),
                "join": l.join_table(),
                "implies": a.algebra.implies_table(),
            });
            Ok((r, None))
        }
        Command::Topologize { kind, input } => {
            let (p, hint, d) = load_poset(&input)?;
            let mut r = Report::new("topologize", d);
            topologize(&p, kind.or(hint), &mut r)?;
            Ok((r, None))
        }
        Command::Subcover { cover, input } => {
            let (p, _, d) = load_poset(&input)?;
            let cover_text = read(&cover)?;
            let sets = parse_cover(&cover_text, &p)?;
            let mut r = Report::new("subcover", digest(format!("{d}:{}", digest(cover_text.as_bytes())).as_bytes()));
            subcover(&p, &sets, &mut r)?;
            Ok((r, None))
        }
        Command::Verify { input } => {
            let (p, _, d) = load_poset(&input)?;
            let mut r = Report::new("verify", d);
            verify(&p, &mut r);
            Ok((r, None))
        }
        Command::Fuzz {
            seed,
            count,
            size,
            quarantine,
        } => {
            let seed = match seed_override {
                Some(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{SEED_ENV}={s:?} is not an unsigned integer")))?,
                None => seed,
            };
            if size == 0 {
                return Err(CliError::Usage("--size must be at least 1".into()));
            }
            Ok((fuzz(seed, count, size, quarantine.as_deref())?, None))
        }
        Command::Gallery { name, n, dot } => {
            let p = gallery(&name, n)?;
            let mut r = Report::new("gallery", digest(emit_poset(&p).as_bytes()));
            let t = topologize(&p, None, &mut r)?;
            r.output["document"] = serde_json::to_value(poset_document(&p)).expect("documents serialise");
            let text = dot.then(|| export_dot(&p, t.as_ref()));
            Ok((r, text))
        }
        Command::ExportDot { topology, input } => {
            let (p, hint, d) = load_poset(&input)?;
            let mut r = Report::new("export-dot", d);
            let t = if topology { topologize(&p, hint, &mut r)? } else { None };
            let text = export_dot(&p, t.as_ref());
            r.output = json!({ "dot": text });
            Ok((r, Some(text)))
        }
    }
}

fn error_or<T, E: std::fmt::Display>(r: &Result<T, E>) -> Option<String> {
    r.as_ref().err().map(|e| e.to_string())
}

fn check(p: &FinitePoset, r: &mut Report) {
    r.info("tree", "rooted at a least element, principal downsets are chains", p.is_tree(), ());
    r.info("forest", "disjoint union of trees", p.is_forest(), ());
    r.info(
        "root_system",
        "principal upsets are chains, one maximum per component",
        p.is_root_system(),
        (),
    );
    r.info("rooted", "has a least element", p.is_rooted(), p.root());
    let wo = p.is_well_ordered();
    r.info("well_ordered", "no infinite descending chain", wo.holds, wo.note);
    let gaps = p.enough_gaps();
    let missing = (0..p.len())
        .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
        .find(|&(x, y)| p.lt(x, y) && gaps.witness_for(x, y).is_none());
    r.gate(
        "enough_gaps",
        "every x < y has an immediate pair x ≤ x' ≺ y' ≤ y",
        gaps.holds,
        json!({ "witnesses": gaps.witnesses.len(), "missing": missing }),
    );
}

fn horn(p: &FinitePoset, r: &mut Report) {
    let h = godel_iff_root_system(p);
    r.gate(
        "godel_iff_root_system",
        "upset algebra is Gödel exactly when the poset is a root system",
        matches!(h, Ok(b) if b == p.is_root_system()),
        json!({ "godel": h.as_ref().ok(), "root_system": p.is_root_system(), "error": error_or(&h) }),
    );
}

/// Picks the construction and records its verdicts; returns the topology.
fn topologize(p: &FinitePoset, kind: Option<Kind>, r: &mut Report) -> Result<Option<FiniteTopology>, CliError> {
    let kind = match kind {
        Some(k) => k,
        None if p.is_tree() => Kind::Tree,
        None if p.is_root_system() => Kind::RootSystem,
        None => {
            return Err(CliError::Usage(
                "poset is neither a tree nor a root system; no construction applies".into(),
            ))
        }
    };
    match kind {
        Kind::Tree => {
            r.gate("kind", "input is a tree", p.is_tree(), "tree");
            if !p.is_tree() {
                return Ok(None);
            }
            let st = timed(r, "staged", || StagedTopology::build(p))?;
            let t = st.final_topology().clone();
            let esakia = timed(r, "esakia", || t.esakia_check(p)).map_err(ConstructionError::from)?;
            r.gate("discrete", "every point is isolated", t.is_discrete(), ());
            r.gate(
                "priestley",
                "clopen upsets separate x ≰ y",
                esakia.priestley.holds,
                esakia.priestley.failure,
            );
            r.gate(
                "esakia",
                "Priestley, and downsets of opens are open",
                esakia.holds,
                esakia.downset_failure,
            );
            r.info(
                "exact_families",
                "every level used the unrestricted V and Z ranges",
                !st.is_restricted(),
                (),
            );
            r.output = json!({ "kind": Kind::Tree, "subbase": t.subbase(), "staged": st.dump() });
            Ok(Some(t))
        }
        Kind::RootSystem => {
            r.gate("kind", "input is a root system", p.is_root_system(), "root_system");
            if !p.is_root_system() {
                return Ok(None);
            }
            let rt = timed(r, "root", || root_topology_check(p))?;
            r.gate("discrete", "every point is isolated", rt.discrete, ());
            r.gate(
                "priestley",
                "clopen upsets separate x ≰ y",
                rt.esakia.priestley.holds,
                rt.esakia.priestley.failure,
            );
            r.gate(
                "esakia",
                "Priestley, and downsets of opens are open",
                rt.esakia.holds,
                rt.esakia.downset_failure,
            );
            r.output = json!({ "kind": Kind::RootSystem, "subbase": rt.subbase.sets });
            Ok(Some(rt.topology))
        }
        Kind::Forest => Err(CliError::Usage(
            "forests have no construction of their own; use --kind tree on each component".into(),
        )),
    }
}

fn subcover(p: &FinitePoset, sets: &[PointSet], r: &mut Report) -> Result<(), CliError> {
    if !p.is_tree() {
        r.gate("kind", "input is a tree", false, "tree");
        return Ok(());
    }
    let st = StagedTopology::build(p)?;
    let top = st.level(st.height())?;
    let mut cover = Vec::with_capacity(sets.len());
    for &s in sets {
        match top.index_of(s) {
            Some(i) => cover.push(i),
            None => {
                let e = ConstructionError::NotASubbaseMember {
                    level: st.height(),
                    set: s,
                };
                r.gate("subcover", "finite subcover by the F/𝒰 recursion", false, format!("{e:?}"));
                return Ok(());
            }
        }
    }
    match timed(r, "subcover", || extract_subcover(&st, &cover)) {
        Ok(trace) => {
            let got = trace
                .subcover
                .iter()
                .fold(PointSet::empty(), |acc, &i| acc | st.final_subbase()[i]);
            r.gate(
                "subcover",
                "finite subcover by the F/𝒰 recursion",
                got == p.carrier(),
                json!({ "steps": trace.steps() }),
            );
            r.output = json!({
                "subcover": trace.subcover.iter().map(|&i| labels_of(p, st.final_subbase()[i])).collect::<Vec<_>>(),
                "trace": trace,
            });
        }
        Err(e) => r.gate("subcover", "finite subcover by the F/𝒰 recursion", false, format!("{e:?}")),
    }
    Ok(())
}

fn verify(p: &FinitePoset, r: &mut Report) {
    check(p, r);
    let iso = double_dual_poset(p);
    r.gate(
        "poset_double_dual",
        "poset is isomorphic to the prime filters of its upset algebra",
        iso.is_ok(),
        error_or(&iso),
    );
    match upset_algebra(p) {
        Ok(a) => {
            let h = heyting_complete(a.algebra.lattice());
            r.gate(
                "upset_heyting",
                "set implication on upsets is the Heyting implication",
                matches!(&h, Ok(h) if h.implies_table() == a.algebra.implies_table()),
                error_or(&h),
            );
            let hiso = double_dual_heyting(&a.algebra);
            r.gate(
                "heyting_double_dual",
                "upset algebra is isomorphic to the upsets of its spectrum as a Heyting algebra",
                hiso.is_ok(),
                error_or(&hiso),
            );
        }
        Err(e) => r.gate("upset_heyting", "upset algebra exists", false, e.to_string()),
    }
    horn(p, r);
    if p.is_root_system() {
        if let Err(e) = topologize(p, Some(Kind::RootSystem), r) {
            r.gate("root_topology", "root-system subbase topology", false, e.to_string());
        }
    }
    if p.is_tree() {
        match StagedTopology::build(p) {
            Ok(st) => staged_suite(&st, r),
            Err(e) => r.gate("staged", "staged topology builds", false, e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Count {
    checked: usize,
    failure: Option<String>,
}

fn count(r: &mut Report, name: &str, anchor: &str, f: impl FnOnce(&mut usize) -> Result<(), String>) {
    let mut checked = 0;
    let failure = f(&mut checked).err();
    r.gate(name, anchor, failure.is_none(), Count { checked, failure });
}

fn staged_suite(st: &StagedTopology, r: &mut Report) {
    let p = st.poset();
    let h = st.heights();
    let fin = st.final_topology();
    let e = fin.esakia_check(p);
    r.gate("staged_discrete", "final staged topology is discrete", fin.is_discrete(), ());
    r.gate(
        "staged_esakia",
        "final staged topology is Esakia",
        matches!(&e, Ok(e) if e.holds),
        error_or(&e),
    );
    let d = downset_open_check(st);
    r.gate(
        "downsets_open",
        "downsets of base sets are open; ↓x is a top-level subbase member",
        d.holds,
        &d,
    );

    count(r, "lifted_opens", "U ∪ ↑_α(U ∩ X_β) belongs to 𝒮_α for U open at β < α", |n| {
        for beta in 0..st.height() {
            let level = st.level(beta).map_err(|e| e.to_string())?;
            let opens = level
                .topology
                .open_sets(OPEN_SET_LIMIT)
                .ok_or_else(|| format!("too many open sets at level {beta}"))?;
            for alpha in beta + 1..=st.height() {
                for &u in &opens {
                    *n += 1;
                    if !check_lifted_open(st, beta, alpha, u).map_err(|e| e.to_string())? {
                        return Err(format!("{u:?} at β={beta}, α={alpha}"));
                    }
                }
            }
        }
        Ok(())
    });

    count(r, "climb", "f_x(α) is maximal in X_≤α, avoids S_α, and rises with α", |n| {
        for x in 0..p.len() {
            let c = climb(st, x).map_err(|e| e.to_string())?;
            for alpha in c.start..=st.height() {
                *n += 1;
                let f = c.at(alpha).ok_or("missing value")?;
                let slice = h.up_to(alpha);
                let maximal = slice.contains(f) && (p.up_of(f) & slice) == PointSet::singleton(f);
                let fresh = alpha == c.start || !st.level(alpha).map_err(|e| e.to_string())?.s.contains(f);
                let rising = alpha == c.start || p.leq(c.at(alpha - 1).ok_or("missing value")?, f);
                if !(maximal && fresh && rising && p.leq(x, f)) {
                    return Err(format!("f_{x}({alpha}) = {f}"));
                }
            }
        }
        Ok(())
    });

    count(r, "main_lemma", "witness (v, Y, Z) for every f_x(α) ∈ U ∈ 𝒮_α", |n| {
        for x in 0..p.len() {
            let c = climb(st, x).map_err(|e| e.to_string())?;
            for alpha in c.start..=st.height() {
                let f = c.at(alpha).ok_or("missing value")?;
                let level = st.level(alpha).map_err(|e| e.to_string())?;
                for &u in level.subbase.iter().filter(|u| u.contains(f)) {
                    *n += 1;
                    witness_for_set(st, x, alpha, u).map_err(|e| format!("x={x}, α={alpha}, U={u:?}: {e}"))?;
                }
            }
        }
        Ok(())
    });

    count(r, "separation", "a clopen upset contains x and misses y whenever x ≰ y", |n| {
        for x in 0..p.len() {
            for y in (0..p.len()).filter(|&y| !p.leq(x, y)) {
                *n += 1;
                let u = separation_witness(st, x, y).map_err(|e| format!("({x}, {y}): {e}"))?;
                if !(u.contains(x) && !u.contains(y) && fin.is_clopen(u) && p.is_upset(u)) {
                    return Err(format!("({x}, {y}): {u:?}"));
                }
            }
        }
        Ok(())
    });

    count(r, "subcover", "the F/𝒰 recursion extracts a subcover of the whole top subbase", |n| {
        let all: Vec<usize> = (0..st.final_subbase().len()).collect();
        *n += 1;
        let trace = extract_subcover(st, &all).map_err(|e| e.to_string())?;
        let got = trace
            .subcover
            .iter()
            .fold(PointSet::empty(), |acc, &i| acc | st.final_subbase()[i]);
        if got != p.carrier() {
            return Err(format!("subcover misses {:?}", p.carrier() - got));
        }
        Ok(())
    });
    r.info(
        "exact_families",
        "every level used the unrestricted V and Z ranges",
        !st.is_restricted(),
        (),
    );
}

#[derive(Clone, Debug, Serialize)]
struct FuzzResult {
    digest: String,
    generator: &'static str,
    seed: u64,
    size: usize,
    holds: bool,
    failed: Vec<String>,
}

const GENERATORS: [&str; 4] = ["poset", "tree", "forest", "root_system"];

/// SplitMix64 step; spreads consecutive instance numbers over the seed space.
fn instance_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed.wrapping_add((i + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stores each document verbatim as `<digest>.json` under `dir`.
pub fn write_quarantine<'a>(
    dir: &Path,
    entries: impl IntoIterator<Item = (&'a str, &'a str)>,
) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: dir.display().to_string(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    for (digest, doc) in entries {
        fs::write(dir.join(format!("{digest}.json")), format!("{doc}\n")).map_err(io)?;
    }
    Ok(())
}

fn fuzz(seed: u64, count: usize, size: usize, quarantine: Option<&Path>) -> Result<Report, CliError> {
    let mut results: Vec<(FuzzResult, String)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i as u64);
            let generator = GENERATORS[i % GENERATORS.len()];
            let n = 1 + (s % size as u64) as usize;
            let p = match generator {
                "poset" => random_poset(s, n, 0.3),
                "tree" => random_tree(s, n),
                "forest" => random_forest(s, n),
                _ => random_root_system(s, n),
            };
            let doc = emit_poset(&p);
            let mut r = Report::new("verify", digest(doc.as_bytes()));
            verify(&p, &mut r);
            let failed = r
                .verdicts
                .iter()
                .filter(|v| v.gate && !v.holds)
                .map(|v| v.name.clone())
                .collect::<Vec<_>>();
            let result = FuzzResult {
                digest: r.input_digest.clone(),
                generator,
                seed: s,
                size: n,
                holds: failed.is_empty(),
                failed,
            };
            (result, doc)
        })
        .collect();
    results.sort_by(|a, b| (&a.0.digest, a.0.seed).cmp(&(&b.0.digest, b.0.seed)));

    if let Some(dir) = quarantine {
        let failed = results.iter().filter(|(res, _)| !res.holds);
        write_quarantine(dir, failed.map(|(res, doc)| (res.digest.as_str(), doc.as_str())))?;
    }

    let results: Vec<FuzzResult> = results.into_iter().map(|(r, _)| r).collect();
    let mut report = Report::new("fuzz", digest(format!("seed={seed};count={count};size={size}").as_bytes()));
    for g in GENERATORS {
        let mine: Vec<&FuzzResult> = results.iter().filter(|r| r.generator == g).collect();
        let failures: Vec<&str> = mine.iter().filter(|r| !r.holds).map(|r| r.digest.as_str()).collect();
        report.gate(
            &format!("fuzz_{g}"),
            "every verify check holds on each generated instance",
            failures.is_empty(),
            json!({ "instances": mine.len(), "failures": failures }),
        );
    }
    let body = serde_json::to_string(&results).expect("results serialise");
    report.output = json!({
        "seed": seed,
        "count": count,
        "size": size,
        "results_digest": digest(body.as_bytes()),
        "instances": results,
    });
    Ok(report)
}
