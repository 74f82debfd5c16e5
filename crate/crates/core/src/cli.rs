//! The `invhol` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! and input errors, 3 when a size cap or search budget is exceeded.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::esn::{esn_back, esn_forward, esn_forward_raw};
use crate::flow::{check_flow_monoid_structure, ordered_flows};
use crate::groupoid::{verify_ordered_groupoid, OrderedGroupoid, RawGroupoid};
use crate::heap::{enumerate_sha, verify_sha, verify_sha_endomorphism_characterization, verify_sha_monoid_iso};
use crate::holomorph::{enumerate_holomorph_from, units, verify_holomorph, verify_interchange, verify_mon_hol};
use crate::io::{self, InputFile, SemigroupFile};
use crate::morphisms::{enumerate_premorphisms, verify_premorphism_laws, ElementMap};
use crate::polycyclic::{self, rewrite, zappa};
use crate::report::Report;
use crate::search::{Budget, DEFAULT_NODE_BUDGET};
use crate::semigroup::{FiniteGroup, InverseSemigroup, NaturalOrder, DEFAULT_SIZE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "invhol", version, about = "Holomorphs, heap maps and premorphisms of finite inverse semigroups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest semigroup, flow set or wreath product any step may build.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP, value_parser = clap::value_parser!(usize))]
    pub cap_size: usize,
    /// Node budget for each backtracking search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Word-length window for polycyclic checks (default 3, or 6 for one letter).
    #[arg(long, global = true)]
    pub maxlen: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory to write the objects built by the command.
    #[arg(long, global = true)]
    pub dump: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a semigroup or groupoid file.
    Verify {
        /// File path or example name.
        source: String,
    },
    /// Premorphisms, Hol(S), interchange and action laws.
    Hol { source: String },
    /// Heap-preserving maps and their embedding in Hol(S).
    Sha { source: String },
    /// Flows of an ordered groupoid against wreath products.
    Flows {
        source: String,
        /// Print the ordered groupoid axiom report first.
        #[arg(long)]
        validate: bool,
    },
    /// Semigroup to groupoid and back.
    Esn {
        source: String,
        #[arg(long)]
        validate: bool,
    },
    /// Evaluate polycyclic expressions and run window checks.
    Poly {
        /// Expressions such as "(ab)^-1 a * b^-1".
        exprs: Vec<String>,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Comma-separated: oracle, bicyclic, zappa, classify, ideal, endo, heap, all.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<PolyCheck>,
    },
    /// Print an example as a semigroup or groupoid file.
    Gen {
        /// Example name; `--list` shows them all.
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyCheck {
    Oracle,
    Bicyclic,
    Zappa,
    Classify,
    Ideal,
    Endo,
    Heap,
    All,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    command: &'a str,
    reports: &'a [Report],
}

/// Parses arguments and runs; never exits the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(Output::Raw(text)) => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
        Ok(Output::Reports(mut reports)) => {
            for r in &mut reports {
                r.param("seed", cli.global.seed);
            }
            let code = if reports.iter().all(Report::all_passed) { EXIT_OK } else { EXIT_CHECK_FAILED };
            let stdout = match cli.global.format {
                Format::Text => reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&JsonOutput { command: name, reports: &reports })
                        .expect("reports serialize");
                    s.push('\n');
                    s
                }
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded { .. } | Error::SizeCap { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Hol { .. } => "hol",
        Command::Sha { .. } => "sha",
        Command::Flows { .. } => "flows",
        Command::Esn { .. } => "esn",
        Command::Poly { .. } => "poly",
        Command::Gen { .. } => "gen",
    }
}

enum Output {
    Reports(Vec<Report>),
    Raw(String),
}

/// An input before validation.
enum Source {
    Semigroup(SemigroupFile),
    Groupoid(RawGroupoid),
}

fn semigroup_file(s: &InverseSemigroup) -> SemigroupFile {
    SemigroupFile { names: s.names().to_vec(), mul: s.rows(), identity: s.identity(), zero: s.zero() }
}

/// `connected<k>-<group>`: `k` objects with local group `<group>`.
fn groupoid_example(name: &str, cap: usize) -> Option<Result<OrderedGroupoid>> {
    let rest = name.strip_prefix("connected")?;
    let (k, group) = rest.split_once('-')?;
    let k: usize = k.parse().ok()?;
    Some((|| {
        if k == 0 || k > cap {
            return Err(Error::InvalidSpec(format!("bad object count {k}")));
        }
        let g = FiniteGroup::from_semigroup(&catalog::build(group, cap)?)?;
        if k * k * g.len() > cap {
            return Err(Error::SizeCap { requested: (k * k * g.len()) as u128, cap });
        }
        Ok(OrderedGroupoid::connected(k, &g))
    })())
}

/// A readable file, or else an example name.
fn load(source: &str, cap: usize) -> Result<Source> {
    let path = Path::new(source);
    if path.exists() {
        let text = io::read_to_string(path)?;
        return Ok(match io::parse_input(&text)? {
            InputFile::Semigroup(f) => Source::Semigroup(f),
            InputFile::Groupoid(g) => Source::Groupoid(g),
        });
    }
    if let Some(g) = groupoid_example(source, cap) {
        return Ok(Source::Groupoid(g?.to_raw()));
    }
    match catalog::build(source, cap) {
        Ok(s) => Ok(Source::Semigroup(semigroup_file(&s))),
        Err(Error::InvalidSpec(_)) => Err(Error::InvalidSpec(format!("`{source}` is neither a file nor an example"))),
        Err(e) => Err(e),
    }
}

fn load_semigroup(source: &str, cap: usize) -> Result<InverseSemigroup> {
    match load(source, cap)? {
        Source::Semigroup(f) => f.build(cap),
        Source::Groupoid(_) => Err(Error::InvalidSpec(format!("`{source}` is a groupoid; this command needs a semigroup"))),
    }
}

fn load_groupoid(source: &str, cap: usize) -> Result<RawGroupoid> {
    match load(source, cap)? {
        Source::Semigroup(f) => Ok(esn_forward_raw(&f.build(cap)?)),
        Source::Groupoid(g) => Ok(g),
    }
}

fn dump(dir: &Option<PathBuf>, files: &[(&str, String)]) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    std::fs::create_dir_all(dir)?;
    for (name, text) in files {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let budget = || Budget::new(g.budget);
    match &cli.command {
        Command::Verify { source } => cmd_verify(source, g.cap_size).map(Output::Reports),
        Command::Hol { source } => {
            let s = load_semigroup(source, g.cap_size)?;
            let (reports, prems) = cmd_hol(&s, &budget())?;
            dump(&g.dump, &[("semigroup.json", io::write_semigroup(&s)), ("premorphisms.json", io::write_maps(&prems))])?;
            Ok(Output::Reports(reports))
        }
        Command::Sha { source } => {
            let s = load_semigroup(source, g.cap_size)?;
            let (reports, maps) = cmd_sha(&s, &budget())?;
            dump(&g.dump, &[("semigroup.json", io::write_semigroup(&s)), ("sha.json", io::write_maps(&maps))])?;
            Ok(Output::Reports(reports))
        }
        Command::Flows { source, validate } => {
            let raw = load_groupoid(source, g.cap_size)?;
            let mut reports = Vec::new();
            if *validate {
                reports.push(verify_ordered_groupoid(&raw).to_report("ordered groupoid"));
            }
            let grp = OrderedGroupoid::new(raw)?;
            let structure = check_flow_monoid_structure(&grp, g.cap_size, g.budget)?;
            let mut r = structure.to_report();
            r.value("ordered flows", ordered_flows(&grp, g.cap_size)?.len());
            reports.push(r);
            dump(&g.dump, &[("groupoid.json", io::write_groupoid(&grp.to_raw()))])?;
            Ok(Output::Reports(reports))
        }
        Command::Esn { source, validate } => {
            let (reports, files) = cmd_esn(source, *validate, g.cap_size)?;
            dump(&g.dump, &files)?;
            Ok(Output::Reports(reports))
        }
        Command::Poly { exprs, alphabet, checks } => {
            cmd_poly(exprs, *alphabet, checks, g.maxlen, g.seed).map(Output::Reports)
        }
        Command::Gen { name, list } => {
            if *list || name.is_none() {
                let mut out: Vec<String> = catalog::NAMES.iter().map(|s| s.to_string()).collect();
                out.push("connected<k>-<group>, e.g. connected2-z2".into());
                return Ok(Output::Raw(out.join("\n") + "\n"));
            }
            let name = name.as_deref().unwrap_or_default();
            match load(name, g.cap_size)? {
                Source::Semigroup(f) => Ok(Output::Raw(io::write_semigroup(&f.build(g.cap_size)?))),
                Source::Groupoid(raw) => Ok(Output::Raw(io::write_groupoid(&raw))),
            }
        }
    }
}

fn cmd_verify(source: &str, cap: usize) -> Result<Vec<Report>> {
    match load(source, cap)? {
        Source::Semigroup(f) => {
            let mut r = Report::new("inverse semigroup");
            r.param("source", source);
            match InverseSemigroup::from_table_capped(f.names.clone(), f.mul.clone(), cap) {
                Ok(s) => {
                    r.value("elements", s.len())
                        .value("idempotents", s.idempotents().len())
                        .value("monoid", s.is_monoid());
                    r.check("table is an inverse semigroup", true, "");
                    if f.identity.is_some() {
                        r.check("declared identity", f.identity == s.identity(), format!("table has {:?}", s.identity()));
                    }
                    if f.zero.is_some() {
                        r.check("declared zero", f.zero == s.zero(), format!("table has {:?}", s.zero()));
                    }
                    let order = NaturalOrder::new(&s);
                    let po = order.partial_order_violation();
                    r.check("natural order is a partial order", po.is_none(), po.unwrap_or_default());
                    let comp = order.compatibility_violation(&s);
                    r.check("natural order is compatible", comp.is_none(), comp.unwrap_or_default());
                }
                Err(e @ (Error::NotAssociative { .. } | Error::NotInverse(_))) => {
                    r.check("table is an inverse semigroup", false, e.to_string());
                }
                Err(e) => return Err(e),
            }
            Ok(vec![r])
        }
        Source::Groupoid(raw) => {
            let mut r = verify_ordered_groupoid(&raw).to_report("ordered groupoid");
            r.param("source", source);
            if let Ok(g) = OrderedGroupoid::new(raw) {
                r.value("arrows", g.len()).value("identities", g.identities().len()).value("inductive", g.is_inductive());
            }
            Ok(vec![r])
        }
    }
}

fn cmd_hol(s: &InverseSemigroup, budget: &Budget) -> Result<(Vec<Report>, Vec<ElementMap>)> {
    let prems = enumerate_premorphisms(s, budget)?;
    let mut laws = verify_premorphism_laws(s, &prems);
    laws.value("premorphisms", prems.len());
    let hol = enumerate_holomorph_from(s, &prems, budget)?;
    let mut hr = verify_holomorph(s, &hol);
    hr.value("holomorph elements", hol.len()).value("holomorph units", units(s, &hol).len());
    let (ir, outcome) = verify_interchange(s, &hol);
    let mut ir = ir;
    ir.value("composable pairs", outcome.composable_pairs);
    let mut reports = vec![laws, hr, ir];
    if s.is_monoid() {
        reports.push(verify_mon_hol(s, &hol, &prems)?);
    }
    Ok((reports, prems))
}

fn is_clifford(s: &InverseSemigroup) -> bool {
    s.idempotents().iter().all(|&e| (0..s.len()).all(|a| s.mul(e, a) == s.mul(a, e)))
}

fn cmd_sha(s: &InverseSemigroup, budget: &Budget) -> Result<(Vec<Report>, Vec<ElementMap>)> {
    let sha = enumerate_sha(s, budget)?;
    let prems = enumerate_premorphisms(s, budget)?;
    let hol = enumerate_holomorph_from(s, &prems, budget)?;
    let mut reports = vec![verify_sha(s, &sha, Some(&hol))?];
    if s.is_monoid() {
        reports.push(verify_sha_monoid_iso(s, budget)?);
    }
    if is_clifford(s) {
        reports.push(verify_sha_endomorphism_characterization(s, budget)?);
    }
    let maps = sha.iter().map(|h| ElementMap::new(h.eta.clone())).collect();
    Ok((reports, maps))
}

type Dumped = Vec<(&'static str, String)>;

fn cmd_esn(source: &str, validate: bool, cap: usize) -> Result<(Vec<Report>, Dumped)> {
    let mut reports = Vec::new();
    let mut r = Report::new("ESN correspondence");
    r.param("source", source);
    let files = match load(source, cap)? {
        Source::Semigroup(f) => {
            let s = f.build(cap)?;
            let raw = esn_forward_raw(&s);
            if validate {
                reports.push(verify_ordered_groupoid(&raw).to_report("ordered groupoid"));
            }
            let g = esn_forward(&s);
            r.value("arrows", g.len()).value("identities", g.identities().len());
            r.check("groupoid is inductive", g.is_inductive(), "");
            let back = esn_back(&g)?;
            r.check("back to the same table", back == s, "");
            vec![("groupoid.json", io::write_groupoid(&raw))]
        }
        Source::Groupoid(raw) => {
            if validate {
                reports.push(verify_ordered_groupoid(&raw).to_report("ordered groupoid"));
            }
            let g = OrderedGroupoid::new(raw)?;
            r.value("arrows", g.len()).value("identities", g.identities().len());
            let inductive = g.inductive_witness();
            r.check(
                "groupoid is inductive",
                inductive.is_none(),
                inductive.map(|(x, y)| format!("identities {x} and {y} have no meet")).unwrap_or_default(),
            );
            if inductive.is_some() {
                reports.push(r);
                return Ok((reports, Vec::new()));
            }
            let s = esn_back(&g)?;
            r.value("semigroup elements", s.len());
            r.check("forward again gives the same groupoid", esn_forward(&s) == g, "");
            vec![("semigroup.json", io::write_semigroup(&s))]
        }
    };
    reports.push(r);
    Ok((reports, files))
}

fn cmd_poly(
    exprs: &[String],
    n: usize,
    checks: &[PolyCheck],
    maxlen: Option<usize>,
    seed: u64,
) -> Result<Vec<Report>> {
    if n == 0 || n > polycyclic::word::MAX_ALPHABET {
        return Err(Error::InvalidSpec(format!("alphabet size must be between 1 and 26, got {n}")));
    }
    let window = maxlen.unwrap_or_else(|| polycyclic::default_window(n));
    let mut reports = Vec::new();
    if !exprs.is_empty() {
        let mut r = Report::new("polycyclic expressions");
        r.param("alphabet", n);
        for (i, e) in exprs.iter().enumerate() {
            let value = polycyclic::parse_expression(n, e)?;
            let oracle = rewrite::normal_form(n, &polycyclic::parse::parse_symbols(n, e)?);
            r.value(e, &value);
            r.check(format!("expression {} matches rewriting", i + 1), value == oracle, oracle.to_string());
        }
        reports.push(r);
    }
    let mut selected: Vec<PolyCheck> = checks.to_vec();
    if selected.contains(&PolyCheck::All) || (selected.is_empty() && exprs.is_empty()) {
        selected = vec![
            PolyCheck::Oracle,
            PolyCheck::Bicyclic,
            PolyCheck::Zappa,
            PolyCheck::Classify,
            PolyCheck::Ideal,
            PolyCheck::Endo,
            PolyCheck::Heap,
        ];
    }
    selected.dedup();
    for c in selected {
        match c {
            PolyCheck::Oracle => reports.push(polycyclic::oracle_check(n, window)),
            PolyCheck::Bicyclic => {
                reports.push(polycyclic::bicyclic::bicyclic_endo_check(6, 4));
                reports.push(polycyclic::bicyclic_hol_check(6));
            }
            PolyCheck::Zappa => reports.push(zappa::zappa_check(n, window, 8, 200, seed)?),
            PolyCheck::Classify => reports.push(polycyclic::functor::classification_check(n, window, seed)),
            PolyCheck::Ideal => reports.push(polycyclic::premorphism_ideal_check(n, window)),
            PolyCheck::Endo => reports.push(polycyclic::endo::endo_sweep(n, window, 2)),
            PolyCheck::Heap => reports.push(polycyclic::heap_type_check_polycyclic(n, window)),
            PolyCheck::All => {}
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("invhol").chain(args.iter().copied()))
    }

    #[test]
    fn poly_expression_matches_oracle() {
        let out = run_args(&["poly", "--alphabet", "2", "(ab)^-1 a * b^-1 1"]);
        assert_eq!(out.code, EXIT_OK, "{out:?}");
        assert!(out.stdout.contains("(ab)^-1 a * b^-1 1: 0"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "no-such-thing"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["poly", "--alphabet", "2", "a c"]).code, EXIT_USAGE);
    }

    #[test]
    fn budget_exceeded_exits_3() {
        let out = run_args(&["hol", "i2", "--budget", "10"]);
        assert_eq!(out.code, EXIT_BUDGET, "{out:?}");
        assert!(out.stderr.contains("budget"));
    }

    #[test]
    fn hol_on_z3() {
        let out = run_args(&["hol", "z3"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
        assert!(out.stdout.contains("holomorph units: 6"));
        assert!(out.stdout.contains("param seed: 0"));
    }
}
