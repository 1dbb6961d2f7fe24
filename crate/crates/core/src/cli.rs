//! The `roughdomain` command line.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 when
//! the input is malformed or the invocation is wrong.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::approx_rel::ApproximableRelation;
use crate::category::{check_equivalence_evidence, check_functor_laws, hom_monotone, hom_relations, Phi, Psi};
use crate::cf_space::CFSpace;
use crate::config::{Caps, Mode, OutputFormat, RunConfig};
use crate::corpus;
use crate::dot;
use crate::error::{Error, Result};
use crate::io::{write_json, Document, Loader, PosetDoc, RelationDoc, SpaceDoc};
use crate::order::{is_approximate_identity, order_isomorphism, FinitePoset, ORACLE_CAP};
use crate::represent::{
    canonical_deltas, closed_sets_iso, deflationary_deltas, fs_witness_from_domain, induce_cf_from_poset,
    map_from_omega, omega_from_map, space_self_iso, tb_witness_from_bf, InducedSpace, WitnessMode,
};

#[derive(Debug, Parser)]
#[command(name = "roughdomain", version, about = "Finite FS-domains as CF-approximation spaces")]
pub struct Cli {
    #[arg(long, global = true, default_value_t = 16)]
    pub cap_universe: usize,
    #[arg(long, global = true, default_value_t = 10)]
    pub cap_family: usize,
    #[arg(long, global = true, default_value_t = 4)]
    pub cap_hom: usize,
    /// Evaluate way-below and CF conditions literally.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Seed for randomized generation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write a Graphviz file of the relevant Hasse diagram.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    /// Accept `covers` instead of `leq` in poset documents.
    #[arg(long, global = true)]
    pub covers: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a poset, space, relation, witness or selector document.
    Validate {
        path: PathBuf,
        /// Space for witness or selector documents without a `space` field.
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// List the CF-closed sets of a space.
    ClosedSets { path: PathBuf },
    /// Run a named pipeline: rep1, rep2, rep3, rep4, roundtrip-rel-map,
    /// roundtrip-omega, functor-phi, functor-psi, equivalence, self-iso.
    Check { theorem: String, inputs: Vec<PathBuf> },
    /// Generate a corpus of posets, spaces or relations.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Directory to write documents into.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Additional random validated spaces (needs --seed).
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Posets,
    Spaces,
    Relations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Seconds.
    pub timing: f64,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

struct Outcome {
    pass: bool,
    counterexample: Option<String>,
    detail: Value,
}

impl Outcome {
    fn pass(detail: Value) -> Self {
        Outcome {
            pass: true,
            counterexample: None,
            detail,
        }
    }

    fn fail(why: impl Into<String>, detail: Value) -> Self {
        Outcome {
            pass: false,
            counterexample: Some(why.into()),
            detail,
        }
    }

    fn from_bool(ok: bool, why: impl FnOnce() -> String, detail: Value) -> Self {
        if ok {
            Self::pass(detail)
        } else {
            Self::fail(why(), detail)
        }
    }
}

/// Errors that mean the input itself is unusable.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Io(_)
            | Error::UnknownTheorem(_)
            | Error::ArityMismatch(..)
            | Error::UnknownLabel(_)
            | Error::DuplicateLabel(_)
            | Error::ElementNotInUniverse(_)
            | Error::ElementNotInPoset(_)
            | Error::EmptyUniverse
            | Error::EmptyRelation
            | Error::EmptyPoset
            | Error::EmptyFamilyOfSets
    )
}

pub fn exit_code(e: &Error) -> i32 {
    if is_input_error(e) {
        2
    } else {
        1
    }
}

struct Session {
    config: RunConfig,
    covers: bool,
    records: Vec<CheckRecord>,
    lines: Vec<String>,
}

impl Session {
    /// Runs one check. Input errors abort the command; any other error is
    /// a failed check.
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<Outcome>) -> Result<bool> {
        let start = Instant::now();
        let outcome = match f() {
            Ok(o) => o,
            Err(e) if is_input_error(&e) => return Err(e),
            Err(e) => Outcome::fail(e.to_string(), Value::Null),
        };
        self.records.push(CheckRecord {
            check: name.to_string(),
            status: if outcome.pass { Status::Pass } else { Status::Fail },
            counterexample: outcome.counterexample,
            timing: start.elapsed().as_secs_f64(),
            seed: self.config.seed,
            detail: outcome.detail,
        });
        Ok(outcome.pass)
    }

    fn info(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn caps(&self) -> Caps {
        self.config.caps
    }

    fn poset(&self, path: &Path) -> Result<Arc<FinitePoset>> {
        match Loader::read(path)? {
            Document::Poset(d) => Ok(Arc::new(d.to_poset(self.covers)?)),
            other => Err(Error::Parse(format!("{} is a {} document, not a poset", path.display(), other.kind()))),
        }
    }

    /// A validated space from a space document, or the induced space of a
    /// poset document.
    fn space(&self, path: &Path) -> Result<Arc<CFSpace>> {
        match Loader::read(path)? {
            Document::Space(d) => Ok(Arc::new(d.to_cf_space()?.validated()?)),
            Document::Poset(d) => Ok(induce_cf_from_poset(&Arc::new(d.to_poset(self.covers)?))?.space().clone()),
            other => Err(Error::Parse(format!("{} is a {} document, not a space", path.display(), other.kind()))),
        }
    }

    fn emit(&self) {
        match self.config.format {
            OutputFormat::Human => {
                for l in &self.lines {
                    println!("{l}");
                }
                for r in &self.records {
                    let status = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                    };
                    println!("{status} {} ({:.3}s)", r.check, r.timing);
                    if let Some(c) = &r.counterexample {
                        println!("  counterexample: {c}");
                    }
                }
                match self.config.seed {
                    Some(s) => println!("seed: {s}"),
                    None => println!("seed: none"),
                }
            }
            OutputFormat::Machine => {
                for r in &self.records {
                    println!("{}", serde_json::to_string(r).expect("records serialize"));
                }
            }
        }
    }

    fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }
}

/// Parses arguments and runs; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = RunConfig {
        caps: Caps {
            universe: cli.cap_universe,
            family: cli.cap_family,
            hom: cli.cap_hom,
        },
        mode: if cli.oracle { Mode::Oracle } else { Mode::Fast },
        format: cli.format,
        seed: cli.seed,
        dot: cli.dot.clone(),
        out_dir: None,
    };
    if let Err(e) = config.caps.check() {
        eprintln!("error: {e}");
        return 2;
    }
    let mut session = Session {
        config,
        covers: cli.covers,
        records: Vec::new(),
        lines: Vec::new(),
    };
    let result = match &cli.command {
        Command::Validate { path, space } => cmd_validate(&mut session, path, space.as_deref()),
        Command::ClosedSets { path } => cmd_closed_sets(&mut session, path),
        Command::Check { theorem, inputs } => cmd_check(&mut session, theorem, inputs),
        Command::Gen {
            kind,
            max_size,
            out,
            random,
        } => cmd_gen(&mut session, *kind, *max_size, out.as_deref(), *random),
    };
    match result {
        Ok(()) => {
            session.emit();
            if session.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            session.emit();
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

fn cmd_validate(s: &mut Session, path: &Path, space_path: Option<&Path>) -> Result<()> {
    let doc = Loader::read(path)?;
    let loader = Loader::beside(path);
    let mode = s.config.mode;
    let caps = s.caps();
    s.info(format!("{}: {} document", path.display(), doc.kind()));
    let context_space = |s: &Session, r: &Option<crate::io::SpaceRef>| -> Result<Arc<CFSpace>> {
        match (r, space_path) {
            (Some(r), _) => loader.space(r),
            (None, Some(p)) => s.space(p),
            (None, None) => Err(Error::Parse("document needs a `space` field or --space".into())),
        }
    };
    match doc {
        Document::Poset(d) => {
            let covers = s.covers;
            s.check("partial-order", || match d.to_poset(covers) {
                Ok(p) => Ok(Outcome::pass(json!({ "elements": p.len(), "covers": p.cover_pairs().len() }))),
                Err(Error::NotAPartialOrder(why)) => Ok(Outcome::fail(why, Value::Null)),
                Err(e) => Err(e),
            })?;
        }
        Document::Space(d) => {
            let base = d.to_ga_space()?;
            let props = base.relation_properties();
            s.info(format!(
                "relation: reflexive={} transitive={} preorder={}",
                props.reflexive, props.transitive, props.preorder
            ));
            if d.family.is_none() {
                s.check("ga-space", || Ok(Outcome::pass(json!(props))))?;
            } else {
                let space = d.to_cf_space()?;
                s.check("cf", || {
                    let r = space.validate_cf_with(mode);
                    let why = || match &r.counterexample {
                        _ if !r.transitive => "relation is not transitive".to_string(),
                        Some(c) => format!("F = {}, K = {}", space.render(c.member), space.render(c.k)),
                        None => "invalid".to_string(),
                    };
                    Ok(Outcome::from_bool(r.valid, why, json!({ "transitive": r.transitive })))
                })?;
            }
        }
        Document::Relation(d) => {
            let (src, tgt) = loader.relation_spaces(&d, None)?;
            let rel = d.to_relation(src.clone(), tgt.clone())?;
            s.check("approximable", || {
                let r = rel.validate_approximable();
                let why = || match &r.first_failure {
                    Some(f) => format!("condition ({}) at {}", f.condition, rel.render_witness(f)),
                    None => String::new(),
                };
                Ok(Outcome::from_bool(r.valid, why, json!({ "conditions": r.conditions })))
            })?;
            if src.base().is_preorder() && tgt.base().is_preorder() {
                s.check("topological-form-agrees", || {
                    let a = rel.validate_approximable().valid;
                    let b = rel.validate_topological_approximable()?.valid;
                    Ok(Outcome::from_bool(a == b, || format!("five axioms: {a}, three conditions: {b}"), Value::Null))
                })?;
            }
        }
        Document::Witness(d) => {
            let space = context_space(s, &d.space)?;
            s.check("fs", || {
                let w = match d.to_witness(&space) {
                    Ok(w) => w,
                    Err(e @ (Error::NotApproximable(_) | Error::WitnessInvalid(_) | Error::NotInFamily | Error::SpaceMismatch)) => {
                        return Ok(Outcome::fail(e.to_string(), Value::Null))
                    }
                    Err(e) => return Err(e),
                };
                let c = w.classify();
                let why = || {
                    if !w.check_fs1() {
                        "FS1: the union of the relations is not the identity".to_string()
                    } else if let Some((i, f)) = w.fs2_failure(false) {
                        format!("FS2 fails for relation {i} at F = {}", space.render(f))
                    } else {
                        "relations are not directed".to_string()
                    }
                };
                Ok(Outcome::from_bool(c.fs, why, json!(c)))
            })?;
        }
        Document::Selector(d) => {
            let space = context_space(s, &d.space)?;
            s.check("tb", || {
                let sel = match d.to_selector(&space, &caps) {
                    Ok(sel) => sel,
                    Err(e @ Error::TbViolated(_)) => return Ok(Outcome::fail(e.to_string(), Value::Null)),
                    Err(e) => return Err(e),
                };
                let r = sel.check_tb()?;
                let why = || match &r.failure {
                    Some(f) => format!("TB{} at K = {}", f.condition, space.render(f.k)),
                    None => String::new(),
                };
                Ok(Outcome::from_bool(r.valid, why, json!({ "checked": r.checked })))
            })?;
        }
    }
    Ok(())
}

fn cmd_closed_sets(s: &mut Session, path: &Path) -> Result<()> {
    let space = match Loader::read(path)? {
        Document::Space(d) => Arc::new(d.to_cf_space()?),
        Document::Poset(d) => induce_cf_from_poset(&Arc::new(d.to_poset(s.covers)?))?.space().clone(),
        other => return Err(Error::Parse(format!("expected a space document, got {}", other.kind()))),
    };
    let space = match (*space).clone().validated() {
        Ok(v) => Arc::new(v),
        Err(e) => {
            s.check("closed-sets", || Ok(Outcome::fail(e.to_string(), Value::Null)))?;
            return Ok(());
        }
    };
    let caps = s.caps();
    let closed = space.cf_closed_sets()?;
    for &e in closed.sets() {
        s.info(space.render(e));
    }
    s.info(format!("{} closed sets, {} covering pairs", closed.len(), closed.cover_pairs().len()));
    s.check("closed-sets", || {
        if space.base().len() > caps.universe {
            return Ok(Outcome::pass(json!({ "count": closed.len(), "brute_force": "skipped" })));
        }
        let brute = space.cf_closed_sets_brute(&caps)?;
        Ok(Outcome::from_bool(
            brute == closed.sets(),
            || format!("brute force found {} sets, image algorithm {}", brute.len(), closed.len()),
            json!({ "count": closed.len(), "sets": closed.sets().iter().map(|&e| space.render(e)).collect::<Vec<_>>() }),
        ))
    })?;
    if let Some(p) = &s.config.dot {
        std::fs::write(p, dot::closed_sets_dot(&closed)).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        s.info(format!("wrote {}", p.display()));
    }
    Ok(())
}

fn arity(id: &str, inputs: &[PathBuf], min: usize, max: usize) -> Result<()> {
    if inputs.len() < min || inputs.len() > max {
        return Err(Error::ArityMismatch(id.to_string(), min, inputs.len()));
    }
    Ok(())
}

fn deltas_for(l: &Arc<FinitePoset>) -> Vec<(&'static str, Vec<crate::order::MonotoneMap>)> {
    let mut out = vec![("canonical", canonical_deltas(l))];
    if l.len() <= 5 {
        out.push(("deflationary", deflationary_deltas(l)));
    }
    out
}

fn cmd_check(s: &mut Session, id: &str, inputs: &[PathBuf]) -> Result<()> {
    let caps = s.caps();
    match id {
        "rep1" | "rep2" | "rep3" | "rep4" => {
            arity(id, inputs, 1, 1)?;
            let l = s.poset(&inputs[0])?;
            if s.config.mode == Mode::Oracle && l.len() <= ORACLE_CAP {
                s.check("oracle-agreement", || {
                    for x in 0..l.len() {
                        for y in 0..l.len() {
                            if l.way_below(x, y, Mode::Oracle)? != l.way_below(x, y, Mode::Fast)? {
                                return Ok(Outcome::fail(format!("({}, {})", l.label(x), l.label(y)), Value::Null));
                            }
                        }
                    }
                    Ok(Outcome::pass(Value::Null))
                })?;
            }
            match id {
                "rep1" => {
                    s.check("closed-sets-iso", || closed_sets_iso(&l).map(|_| Outcome::pass(Value::Null)))?;
                    for (name, deltas) in deltas_for(&l) {
                        s.check(&format!("fs-witness/{name}"), || {
                            let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Plain)?;
                            Ok(Outcome::from_bool(w.check_fs1() && w.check_fs2(), || "FS1 or FS2 fails".into(), json!({ "relations": w.len() })))
                        })?;
                    }
                }
                "rep2" => {
                    for (name, deltas) in deltas_for(&l) {
                        s.check(&format!("strong-fs-witness/{name}"), || {
                            let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Strong)?;
                            Ok(Outcome::from_bool(w.check_fs1() && w.check_fs2_strong(), || "FS1 or FS2' fails".into(), json!({ "relations": w.len() })))
                        })?;
                    }
                }
                "rep3" => {
                    s.check("bf-witness", || {
                        let (ind, w) = fs_witness_from_domain(&l, &canonical_deltas(&l), WitnessMode::Bf)?;
                        let c = ind.space().cf_closed_sets()?;
                        let algebraic = c.poset().is_algebraic_domain(Mode::Fast)?;
                        let iso = order_isomorphism(&l, c.poset()).is_some();
                        let top = w.classify().topological_fs;
                        Ok(Outcome::from_bool(
                            top && algebraic && iso,
                            || format!("topological_fs={top} algebraic={algebraic} isomorphic={iso}"),
                            Value::Null,
                        ))
                    })?;
                }
                _ => {
                    s.check("tb-selector", || {
                        let (ind, sel) = tb_witness_from_bf(&l, &canonical_deltas(&l), &caps)?;
                        let tb = sel.check_tb()?.valid;
                        let c = ind.space().cf_closed_sets()?;
                        let deltas = sel.delta_family(&c)?;
                        let maps: Vec<_> = deltas.iter().map(|(_, d)| d.clone()).collect();
                        let approx = is_approximate_identity(c.poset(), &maps)?;
                        let theta = sel.theta_from_tb()?.classify().topological_fs;
                        let iso = order_isomorphism(&l, c.poset()).is_some();
                        Ok(Outcome::from_bool(
                            tb && approx && theta && iso,
                            || format!("tb={tb} approximate_identity={approx} theta={theta} isomorphic={iso}"),
                            json!({ "deltas": deltas.len() }),
                        ))
                    })?;
                }
            }
        }
        "roundtrip-rel-map" => {
            arity(id, inputs, 2, 2)?;
            let (s1, s2) = (s.space(&inputs[0])?, s.space(&inputs[1])?);
            s.check("roundtrip-rel-map", || {
                let (c1, c2) = (s1.cf_closed_sets()?, s2.cf_closed_sets()?);
                let rels = hom_relations(&s1, &s2, &caps)?;
                let maps = hom_monotone(c1.poset(), c2.poset(), &caps)?;
                for r in &rels {
                    let back = ApproximableRelation::from_map(&r.to_map_between(&c1, &c2)?, &c1, &c2)?;
                    if back != *r {
                        return Ok(Outcome::fail(format!("Θ = {r:?} comes back as {back:?}"), Value::Null));
                    }
                }
                for f in &maps {
                    let back = ApproximableRelation::from_map(f, &c1, &c2)?.to_map_between(&c1, &c2)?;
                    if back != *f {
                        return Ok(Outcome::fail(format!("f = {:?} comes back as {:?}", f.graph(), back.graph()), Value::Null));
                    }
                }
                Ok(Outcome::from_bool(
                    rels.len() == maps.len(),
                    || format!("{} relations but {} maps", rels.len(), maps.len()),
                    json!({ "relations": rels.len(), "maps": maps.len() }),
                ))
            })?;
        }
        "roundtrip-omega" => {
            arity(id, inputs, 2, 2)?;
            let (l1, l2) = (s.poset(&inputs[0])?, s.poset(&inputs[1])?);
            s.check("roundtrip-omega", || {
                let (a, b) = (induce_cf_from_poset(&l1)?, induce_cf_from_poset(&l2)?);
                roundtrip_omega(&a, &b, &caps)
            })?;
        }
        "functor-phi" => {
            arity(id, inputs, 1, usize::MAX)?;
            let objs = inputs.iter().map(|p| s.poset(p)).collect::<Result<Vec<_>>>()?;
            s.check("functor-phi", || {
                let r = check_functor_laws(&Phi::default(), &objs, &caps)?;
                Ok(Outcome::from_bool(r.pass, || format!("{:?}", r.failures.first()), json!(r)))
            })?;
        }
        "functor-psi" => {
            arity(id, inputs, 1, usize::MAX)?;
            let objs = inputs.iter().map(|p| s.space(p)).collect::<Result<Vec<_>>>()?;
            s.check("functor-psi", || {
                let r = check_functor_laws(&Psi::default(), &objs, &caps)?;
                Ok(Outcome::from_bool(r.pass, || format!("{:?}", r.failures.first()), json!(r)))
            })?;
        }
        "equivalence" => {
            arity(id, inputs, 1, usize::MAX)?;
            let posets = inputs.iter().map(|p| s.poset(p)).collect::<Result<Vec<_>>>()?;
            let spaces = posets
                .iter()
                .map(|l| Ok(induce_cf_from_poset(l)?.space().clone()))
                .collect::<Result<Vec<_>>>()?;
            s.check("equivalence-phi", || {
                let e = check_equivalence_evidence(&Phi::default(), &posets, &spaces, &caps)?;
                Ok(Outcome::from_bool(
                    e.full && e.faithful && e.essentially_surjective,
                    || e.counterexamples.join("; "),
                    json!(e),
                ))
            })?;
            s.check("equivalence-psi", || {
                let e = check_equivalence_evidence(&Psi::default(), &spaces, &posets, &caps)?;
                Ok(Outcome::from_bool(
                    e.full && e.faithful && e.essentially_surjective,
                    || e.counterexamples.join("; "),
                    json!(e),
                ))
            })?;
        }
        "self-iso" => {
            arity(id, inputs, 1, 2)?;
            let space = s.space(&inputs[0])?;
            if let Some(wp) = inputs.get(1) {
                let doc = match Loader::read(wp)? {
                    Document::Witness(d) => d,
                    other => return Err(Error::Parse(format!("expected a witness document, got {}", other.kind()))),
                };
                s.check("witness", || {
                    let w = doc.to_witness(&space)?;
                    Ok(Outcome::from_bool(w.classify().fs, || "witness does not satisfy FS1 and FS2".into(), json!(w.classify())))
                })?;
            }
            s.check("self-iso", || {
                let iso = space_self_iso(&space)?;
                Ok(Outcome::pass(json!({
                    "closed_sets": iso.closed.len(),
                    "upsilon_pairs": iso.upsilon.len(),
                    "omega_pairs": iso.omega.len(),
                })))
            })?;
        }
        other => return Err(Error::UnknownTheorem(other.to_string())),
    }
    Ok(())
}

fn roundtrip_omega(a: &InducedSpace, b: &InducedSpace, caps: &Caps) -> Result<Outcome> {
    let maps = hom_monotone(a.origin(), b.origin(), caps)?;
    let rels = hom_relations(a.space(), b.space(), caps)?;
    for g in &maps {
        let back = map_from_omega(&omega_from_map(g, a, b)?, a, b)?;
        if back != *g {
            return Ok(Outcome::fail(format!("g = {:?} comes back as {:?}", g.graph(), back.graph()), Value::Null));
        }
    }
    for r in &rels {
        let back = omega_from_map(&map_from_omega(r, a, b)?, a, b)?;
        if back != *r {
            return Ok(Outcome::fail(format!("Ω = {r:?} comes back as {back:?}"), Value::Null));
        }
    }
    Ok(Outcome::from_bool(
        rels.len() == maps.len(),
        || format!("{} relations but {} maps", rels.len(), maps.len()),
        json!({ "relations": rels.len(), "maps": maps.len() }),
    ))
}

fn cmd_gen(s: &mut Session, kind: GenKind, max_size: usize, out: Option<&Path>, random: usize) -> Result<()> {
    if random > 0 && s.config.seed.is_none() {
        return Err(Error::Parse("--random needs --seed".into()));
    }
    if max_size > 6 {
        return Err(Error::Parse("exhaustive generation is limited to --max-size 6".into()));
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    let write = |name: String, doc: Document| -> Result<()> {
        match out {
            Some(dir) => write_json(&dir.join(name), &doc),
            None => Ok(()),
        }
    };
    let mut by_size = Vec::new();
    for n in 1..=max_size {
        by_size.push(corpus::posets_of_size(n).into_iter().map(Arc::new).collect::<Vec<_>>());
    }
    let mut written = 0usize;
    match kind {
        GenKind::Posets => {
            for (k, level) in by_size.iter().enumerate() {
                s.info(format!("size {}: {} posets", k + 1, level.len()));
                for (i, p) in level.iter().enumerate() {
                    write(format!("p{}-{i}.poset.json", k + 1), Document::Poset(PosetDoc::from_poset(p)))?;
                    written += 1;
                }
            }
        }
        GenKind::Spaces => {
            for (k, level) in by_size.iter().enumerate() {
                let mut count = 0;
                for (i, p) in level.iter().enumerate() {
                    let ind = induce_cf_from_poset(p)?;
                    write(
                        format!("s{}-{i}.space.json", k + 1),
                        Document::Space(SpaceDoc::from_cf_space(ind.space())),
                    )?;
                    count += 1;
                    written += 1;
                }
                s.info(format!("size {}: {count} induced spaces", k + 1));
            }
            if random > 0 {
                let mut rng = corpus::rng(s.config.seed.expect("checked above"));
                let mut made = 0;
                while made < random {
                    if let Some(sp) = corpus::random_cf_space(&mut rng, 7, 1000) {
                        write(format!("r{made}.space.json"), Document::Space(SpaceDoc::from_cf_space(&sp)))?;
                        made += 1;
                        written += 1;
                    }
                }
                s.info(format!("{made} random spaces"));
            }
        }
        GenKind::Relations => {
            let posets: Vec<Arc<FinitePoset>> = by_size.iter().flatten().cloned().collect();
            let caps = s.caps();
            let spaces = posets.iter().map(induce_cf_from_poset).collect::<Result<Vec<_>>>()?;
            let mut count = 0;
            for (a, sa) in spaces.iter().enumerate() {
                for (b, sb) in spaces.iter().enumerate() {
                    for (k, g) in hom_monotone(&posets[a], &posets[b], &caps)?.iter().enumerate() {
                        let rel = omega_from_map(g, sa, sb)?;
                        let doc = RelationDoc::from_relation(&rel).with_spaces(sa.space(), sb.space());
                        write(format!("o{a}-{b}-{k}.rel.json"), Document::Relation(doc))?;
                        count += 1;
                        written += 1;
                    }
                }
            }
            s.info(format!("{count} relations Ω_g over {} posets", posets.len()));
        }
    }
    s.check("gen", || Ok(Outcome::pass(json!({ "documents": written }))))?;
    Ok(())
}
