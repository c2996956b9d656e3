//! Command-line front end: `indecs`, `search`, `apply`, `verify`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{build_algebra, parse_presentation, presets, FdAlgebra};
use crate::cluster::{search_n_cluster_tilting, ClusterSubcat};
use crate::error::{Error, Result};
use crate::functcat::{yoneda, FunctorMod};
use crate::modcat::{hom_space, is_self_injective, Caps, Catalog, FdModule, ModuleHom};
use crate::paperfun::{EpiPair, Instance, MonoPair, PairCaps};
use crate::theorems::{certificate, run_selected, CheckStatus, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "monocat", version, about = "Monomorphism categories of n-cluster tilting subcategories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the indecomposable modules with their dimension vectors.
    Indecs(Common),
    /// Find every n-cluster tilting subcategory.
    Search(Common),
    /// Apply a functor to a morphism `"A -> B"` (optionally `"A -> B #k"`) or a module name.
    Apply {
        #[command(flatten)]
        common: Common,
        #[arg(value_enum)]
        functor: FunctorName,
        argument: String,
    },
    /// Run the verification suite and write a certificate.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Rows to run (repeatable); all rows when omitted.
        #[arg(long = "check")]
        checks: Vec<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Spec file, or a preset name (A3R2, PPA2, NAK<k>, CN<m>_<l>).
    #[arg(long)]
    pub algebra: String,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// `auto` (first search hit) or a comma-separated list of module names.
    #[arg(long, default_value = "auto")]
    pub generators: String,
    /// Overrides the field of the spec.
    #[arg(long)]
    pub p: Option<u32>,
    /// Largest dimension of an indecomposable and of a morphism-category object.
    #[arg(long, default_value_t = 16)]
    pub max_dim: usize,
    /// Largest number of indecomposables.
    #[arg(long, default_value_t = 512)]
    pub max_ind: usize,
    /// Largest number of indecomposable summands of a morphism-category object.
    #[arg(long, default_value_t = 2)]
    pub mult_cap: usize,
    #[arg(long)]
    pub deep_check: bool,
    /// Write JSON output here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Recorded for reproducibility; every computation is deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
pub enum FunctorName {
    Upsilon,
    Phi,
    Psi,
    Theta,
    PsiPrime,
    Sigma,
    TauN,
}

/// Parses arguments, runs, and returns the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchCapExceeded(_) | Error::EnumerationCapExceeded(_) => EXIT_CAP,
        Error::Internal(_) => EXIT_CHECK_FAILED,
        _ => EXIT_INPUT,
    }
}

/// Spec text after applying `--p`.
pub fn load_spec(common: &Common) -> Result<String> {
    let text = match std::fs::read_to_string(&common.algebra) {
        Ok(t) => t,
        Err(io) => presets::preset_spec(&common.algebra)
            .ok_or_else(|| Error::Input(format!("cannot read `{}`: {io}", common.algebra)))?,
    };
    Ok(match common.p {
        None => text,
        Some(p) => {
            let kept: Vec<&str> = text.lines().filter(|l| !l.trim_start().starts_with("field")).collect();
            format!("field p={p}\n{}\n", kept.join("\n"))
        }
    })
}

fn load_algebra(text: &str) -> Result<Arc<FdAlgebra>> {
    Ok(Arc::new(build_algebra(&parse_presentation(text)?)?))
}

fn catalog(common: &Common, alg: &Arc<FdAlgebra>) -> Result<Arc<Catalog>> {
    if common.max_dim == 0 || common.max_ind == 0 || common.mult_cap == 0 {
        return Err(Error::Input("caps must be positive".into()));
    }
    Ok(Arc::new(Catalog::enumerate(alg, Caps { max_ind: common.max_ind, max_dim: common.max_dim })?))
}

fn subcategory(common: &Common, cat: &Arc<Catalog>) -> Result<ClusterSubcat> {
    if common.generators.trim() == "auto" {
        return search_n_cluster_tilting(cat, common.n)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Input(format!("no {}-cluster tilting subcategory found", common.n)));
    }
    let names: Vec<&str> = common.generators.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    ClusterSubcat::from_names(cat.clone(), &names, common.n)
}

fn suite_config(common: &Common) -> SuiteConfig {
    SuiteConfig {
        pairs: PairCaps { mult_cap: common.mult_cap, max_dim: common.max_dim },
        deep_check: common.deep_check,
        ..SuiteConfig::default()
    }
}

fn write_json<T: Serialize>(common: &Common, value: &T) -> Result<()> {
    if let Some(path) = &common.out {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn io(e: std::io::Error) -> Error {
    Error::Input(format!("output: {e}"))
}

#[derive(Serialize)]
struct IndecEntry {
    name: String,
    dims: Vec<usize>,
    projective: bool,
    injective: bool,
}

#[derive(Serialize)]
struct SearchHit {
    generators: Vec<String>,
    nz: bool,
}

#[derive(Serialize)]
struct SearchResult {
    n: usize,
    self_injective: bool,
    hits: Vec<SearchHit>,
}

#[derive(Serialize)]
struct ApplyResult {
    functor: String,
    argument: String,
    values: Vec<(String, usize)>,
    summands: Vec<Vec<(String, usize)>>,
    module: Option<String>,
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Indecs(common) => {
            let alg = load_algebra(&load_spec(common)?)?;
            let cat = catalog(common, &alg)?;
            let entries: Vec<IndecEntry> = (0..cat.len())
                .map(|i| IndecEntry {
                    name: cat.name(i).to_string(),
                    dims: cat.module(i).dims().to_vec(),
                    projective: cat.is_projective(i),
                    injective: cat.is_injective(i),
                })
                .collect();
            for e in &entries {
                let tags = [(e.projective, " projective"), (e.injective, " injective")];
                let tag: String = tags.iter().filter(|t| t.0).map(|t| t.1).collect();
                writeln!(out, "{} {:?}{tag}", e.name, e.dims).map_err(io)?;
            }
            writeln!(out, "{} indecomposables", entries.len()).map_err(io)?;
            write_json(common, &entries)?;
            Ok(EXIT_OK)
        }
        Command::Search(common) => {
            let alg = load_algebra(&load_spec(common)?)?;
            let cat = catalog(common, &alg)?;
            let mut hits = Vec::new();
            for m in search_n_cluster_tilting(&cat, common.n)? {
                hits.push(SearchHit { generators: m.generator_names(), nz: m.is_nz()? });
            }
            let res = SearchResult { n: common.n, self_injective: is_self_injective(&alg), hits };
            writeln!(out, "self-injective base: {}", res.self_injective).map_err(io)?;
            for h in &res.hits {
                writeln!(out, "{{{}}} nZ={}", h.generators.join(","), h.nz).map_err(io)?;
            }
            writeln!(out, "{} subcategories", res.hits.len()).map_err(io)?;
            write_json(common, &res)?;
            Ok(EXIT_OK)
        }
        Command::Apply { common, functor, argument } => {
            let alg = load_algebra(&load_spec(common)?)?;
            let cat = catalog(common, &alg)?;
            let ins = Instance::new(&subcategory(common, &cat)?);
            let res = apply(&ins, *functor, argument)?;
            writeln!(out, "{}", format_values(&res.values)).map_err(io)?;
            if let Some(m) = &res.module {
                writeln!(out, "module: {m}").map_err(io)?;
            }
            for s in &res.summands {
                writeln!(out, "summand {}", format_values(s)).map_err(io)?;
            }
            write_json(common, &res)?;
            Ok(EXIT_OK)
        }
        Command::Verify { common, checks } => {
            let text = load_spec(common)?;
            let alg = load_algebra(&text)?;
            let cat = catalog(common, &alg)?;
            let ins = Instance::new(&subcategory(common, &cat)?);
            let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
            let reports = run_selected(&ids, &ins, suite_config(common))?;
            for r in &reports {
                let status = match &r.status {
                    CheckStatus::Pass => "pass".to_string(),
                    CheckStatus::Fail => "FAIL".to_string(),
                    CheckStatus::Skipped { hypothesis } => format!("skipped ({hypothesis})"),
                };
                writeln!(out, "{:<18} {status} [{:.1?}]", r.check_id, r.elapsed).map_err(io)?;
                if r.is_fail() {
                    for w in &r.witnesses {
                        writeln!(out, "    {w}").map_err(io)?;
                    }
                }
            }
            let cert = certificate(&text, &ins, reports);
            let s = cert.summary;
            writeln!(out, "{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped).map_err(io)?;
            if s.pass == 0 && s.fail == 0 && s.skipped > 0 {
                writeln!(err, "warning: every check was skipped").map_err(io)?;
            }
            match &common.out {
                Some(_) => write_json(common, &cert)?,
                None => writeln!(out, "{}", cert.to_json()).map_err(io)?,
            }
            Ok(if s.fail > 0 { EXIT_CHECK_FAILED } else { EXIT_OK })
        }
    }
}

fn format_values(values: &[(String, usize)]) -> String {
    let parts: Vec<String> = values.iter().map(|(n, d)| format!("{n}:{d}")).collect();
    format!("({})", parts.join(","))
}

fn values_of(f: &FunctorMod) -> Vec<(String, usize)> {
    f.gamma().subcat().generator_names().into_iter().zip(f.value_dims()).collect()
}

fn resolve_module(cat: &Catalog, text: &str) -> Result<FdModule> {
    let parts: Vec<FdModule> = text
        .split(['+', '⊕'])
        .map(str::trim)
        .map(|s| {
            cat.resolve(s)
                .map(|i| cat.module(i).clone())
                .ok_or_else(|| Error::Input(format!("unknown module name `{s}`")))
        })
        .collect::<Result<_>>()?;
    Ok(FdModule::sum_of(&parts, cat.algebra()))
}

/// `"A -> B"` or `"A -> B #k"` (1-based basis index of `Hom(A, B)`).
pub fn parse_map(cat: &Catalog, text: &str) -> Result<ModuleHom> {
    let (lhs, rhs) = text.split_once("->").ok_or_else(|| Error::Input(format!("expected `A -> B`, got `{text}`")))?;
    let (rhs, index) = match rhs.split_once('#') {
        Some((r, k)) => {
            let k: usize = k.trim().parse().map_err(|_| Error::Input(format!("bad basis index `{}`", k.trim())))?;
            (r, Some(k))
        }
        None => (rhs, None),
    };
    let (a, b) = (resolve_module(cat, lhs)?, resolve_module(cat, rhs)?);
    let space = hom_space(&a, &b);
    let basis = space.basis();
    match (basis.len(), index) {
        (0, _) => Err(Error::Input(format!("Hom({}, {}) is zero", lhs.trim(), rhs.trim()))),
        (1, None) => Ok(basis[0].clone()),
        (d, None) => Err(Error::Input(format!("Hom is {d}-dimensional; add `#k` with 1 ≤ k ≤ {d}"))),
        (d, Some(k)) if k == 0 || k > d => Err(Error::Input(format!("basis index {k} outside 1..={d}"))),
        (_, Some(k)) => Ok(basis[k - 1].clone()),
    }
}

pub fn apply_functor(ins: &Instance, functor: FunctorName, argument: &str) -> Result<FunctorMod> {
    let cat = ins.subcat().catalog();
    let m = ins.subcat();
    Ok(match functor {
        FunctorName::Upsilon => ins.upsilon(&MonoPair::new(m, parse_map(cat, argument)?)?)?,
        FunctorName::Phi => ins.phi(&MonoPair::new(m, parse_map(cat, argument)?)?)?,
        FunctorName::Psi => ins.psi(&MonoPair::new(m, parse_map(cat, argument)?)?)?,
        FunctorName::Theta => ins.theta(&EpiPair::new(m, parse_map(cat, argument)?)?)?,
        FunctorName::PsiPrime => ins.psi_prime(&EpiPair::new(m, parse_map(cat, argument)?)?)?,
        FunctorName::Sigma => ins.sigma(&yoneda(&ins.stable()?, &resolve_module(cat, argument)?))?,
        FunctorName::TauN => return Err(Error::Input("τₙ returns a module".into())),
    })
}

fn apply(ins: &Instance, functor: FunctorName, argument: &str) -> Result<ApplyResult> {
    let name = format!("{functor:?}");
    if functor == FunctorName::TauN {
        let cat = ins.subcat().catalog();
        let t = ins.tau_n_direct(&resolve_module(cat, argument)?)?;
        let module = cat.index_of(&t).map(|i| cat.name(i).to_string());
        return Ok(ApplyResult { functor: name, argument: argument.into(), values: vec![], summands: vec![], module });
    }
    let f = apply_functor(ins, functor, argument)?;
    let summands = f.summands()?.iter().map(values_of).collect();
    Ok(ApplyResult { functor: name, argument: argument.into(), values: values_of(&f), summands, module: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("monocat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn indecs_lists_catalog() {
        let (code, out, _) = call(&["indecs", "--algebra", "A3R2"]);
        assert_eq!(code, 0);
        assert!(out.contains("5 indecomposables"));
        let (_, out, _) = call(&["indecs", "--algebra", "NAK3"]);
        assert!(out.contains("3 indecomposables"));
    }

    #[test]
    fn search_reports_hits() {
        let (code, out, _) = call(&["search", "--algebra", "A3R2", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("{P1,P2,S3,S1}") && out.contains("1 subcategories"), "{out}");
        let (code, out, _) = call(&["search", "--algebra", "NAK2"]);
        assert_eq!(code, 0);
        assert!(out.contains("0 subcategories"));
        let (_, out, _) = call(&["search", "--algebra", "PPA2"]);
        assert!(out.contains("self-injective base: true") && out.contains("2 subcategories"));
    }

    #[test]
    fn apply_examples() {
        let (code, out, _) = call(&["apply", "--algebra", "A3R2", "--generators", "P1,P2,S1,S3", "psi", "S3 -> P2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("(P1:0,P2:0,S3:0,S1:1)"), "{out}");
        let (_, out, _) = call(&["apply", "--algebra", "A3R2", "tau_n", "S1"]);
        assert!(out.contains("module: S3"));
        let (code, _, err) = call(&["apply", "--algebra", "A3R2", "phi", "S3 -> P2"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("not self-injective"));
    }

    #[test]
    fn input_errors() {
        let dir = std::env::temp_dir().join(format!("monocat-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "field p=2\nvertices 1 2\narrow a 1 -> 2\n").unwrap();
        let (code, _, err) = call(&["indecs", "--algebra", bad.to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("parse error at 3:"), "{err}");
        let (code, _, _) = call(&["indecs", "--algebra", "no-such-algebra"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _, _) = call(&["indecs", "--algebra", "A3R2", "--max-ind", "2"]);
        assert_eq!(code, EXIT_CAP);
    }

    #[test]
    fn verify_writes_identical_certificates() {
        let dir = std::env::temp_dir().join(format!("monocat-verify-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let paths = [dir.join("a.json"), dir.join("b.json")];
        for p in &paths {
            let args = ["verify", "--algebra", "A3R2", "--check", "psi_suite", "--seed", "7", "--out", p.to_str().unwrap()];
            assert_eq!(call(&args).0, 0);
        }
        let (a, b) = (std::fs::read(&paths[0]).unwrap(), std::fs::read(&paths[1]).unwrap());
        assert_eq!(a, b);
        let j: serde_json::Value = serde_json::from_slice(&a).unwrap();
        assert_eq!(j["schema_version"], 1);
        assert_eq!(j["reports"][0]["status"], "pass");
    }

    #[test]
    fn uncertified_generators_skip_with_warning() {
        let (code, out, err) = call(&["verify", "--algebra", "A3R2", "--generators", "P1,P2,S3"]);
        assert_eq!(code, 0);
        assert!(out.contains("0 pass, 0 fail, 14 skipped"));
        assert!(err.contains("warning"));
    }

    #[test]
    fn field_override() {
        let (code, out, _) = call(&["indecs", "--algebra", "A3R2", "--p", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("5 indecomposables"));
    }
}
