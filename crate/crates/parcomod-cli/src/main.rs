//! `parcomod` command-line front end.
//!
//! Machine-readable output (JSON or CSV) goes to stdout or `--output`,
//! human-readable summaries to stderr. Exit codes: 0 success, 2 verification
//! failure, 3 budget exceeded, 4 bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use parcomod::catalog::algebras::{group_algebra, kac_idempotents, preset_algebra, sweedler};
use parcomod::catalog::characters::irreps;
use parcomod::catalog::group::{FiniteGroup, GroupJson};
use parcomod::comodule::{PartialComodule, PartialComoduleJson};
use parcomod::construction::{
    classify_group_simples, classify_kac, declared_rows_csv, dual_group_bridge, group_rows_csv,
    left_stabilizer, Construction, GroupRow,
};
use parcomod::field::default_order;
use parcomod::hopf::{HopfJson, Vector};
use parcomod::hpar::{apar_analysis, certified_dim, conjecture_c, HparStatus, VeConfig};
use parcomod::onedim::{check_r, classify_group_onedim, closure_facts, gamma_samples, h4_catalog, reconstruct};
use parcomod::{Error, FiniteDimHopf};

const GROUP_PRESETS: [&str; 7] = ["c2", "c3", "c4", "klein", "s3", "d8", "q8"];

#[derive(Parser)]
#[command(name = "parcomod", version, about = "Exact computations with partial comodules over finite-dimensional Hopf algebras")]
struct Cli {
    /// Worker threads (default: available cores); results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the machine-readable result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    Verify(VerifyArgs),
    /// Run the construction for one subcentral idempotent.
    Construct(ConstructArgs),
    /// Classify the constructed simple partial comodules of a group algebra (CSV).
    ClassifyGroup(GroupArgs),
    /// Classification tables for a group or the Kac–Paljutkin algebra (CSV).
    Tables(TablesArgs),
    /// Certify dim H_par by enumeration (upper) and constructed simples (lower).
    HparDim(HparArgs),
    /// Dimension and block structure of A_par.
    Apar(AparArgs),
    /// One-dimensional partial comodules.
    Onedim(OnedimArgs),
    /// Check the isomorphism between induced modules and cotensor products over kG*.
    DualBridge(BridgeArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Preset name or Hopf algebra JSON file.
    #[arg(long, required_unless_present = "all")]
    algebra: Option<String>,
    #[arg(long)]
    dual: bool,
    /// Every catalog algebra and the duals of the group algebras.
    #[arg(long, conflicts_with = "algebra")]
    all: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long)]
    idempotent: String,
    /// Element of H whose image in H̄ is the grouplike W; default π(1).
    #[arg(long)]
    comodule_grouplike: Option<String>,
    /// Emit W □ He for every simple H̄-comodule W.
    #[arg(long, conflicts_with = "comodule_grouplike")]
    all: bool,
}

#[derive(Args)]
struct GroupArgs {
    /// Group preset or group JSON file.
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, required_unless_present = "algebra", conflicts_with = "algebra")]
    group: Option<String>,
    #[arg(long)]
    algebra: Option<String>,
    /// Reorder rows to match the published tables.
    #[arg(long)]
    paper_order: bool,
}

#[derive(Args)]
struct Target {
    /// Algebra preset (group presets mean the group algebra) or JSON file.
    #[arg(long, required_unless_present = "group", conflicts_with = "group")]
    algebra: Option<String>,
    #[arg(long)]
    group: Option<String>,
    /// Run on the dual algebra.
    #[arg(long)]
    dual: bool,
    /// JSON list of partial comodules used instead of the built-in bundle.
    #[arg(long, value_name = "FILE")]
    bundle: Option<PathBuf>,
}

#[derive(Args)]
struct HparArgs {
    #[command(flatten)]
    target: Target,
    /// Maximal word length of the enumeration.
    #[arg(long, default_value_t = 12)]
    max_degree: usize,
    #[arg(long)]
    budget_mb: Option<usize>,
    /// Resume from and save to this checkpoint file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

#[derive(Args)]
struct AparArgs {
    #[command(flatten)]
    target: Target,
    /// Also evaluate the map into Π A_e·e over the idempotent representatives.
    #[arg(long)]
    conjecture_c: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OnedimMode {
    #[arg(long)]
    classify: bool,
    #[arg(long, value_name = "EXPR")]
    check: Option<String>,
    #[arg(long, value_name = "EXPR")]
    reconstruct: Option<String>,
}

#[derive(Args)]
struct OnedimArgs {
    #[arg(long)]
    algebra: String,
    #[command(flatten)]
    mode: OnedimMode,
}

#[derive(Args)]
struct BridgeArgs {
    #[arg(long)]
    group: String,
    /// Comma-separated element labels of X (must contain the identity); default all subsets.
    #[arg(long)]
    subset: Option<String>,
}

/// Result of a command: payload plus exit status.
struct Outcome {
    payload: String,
    code: u8,
}

impl Outcome {
    fn json(v: &Value, ok: bool) -> Self {
        Outcome { payload: format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")), code: if ok { 0 } else { 2 } }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).format_timestamp(None).init();
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global() {
        log::warn!("thread pool: {e}");
    }
    let out = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::Verification(_) => 2,
                Error::Budget(_) => 3,
                _ => 4,
            });
        }
    };
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &out.payload),
        None => {
            print!("{}", out.payload);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(4);
    }
    ExitCode::from(out.code)
}

fn run(cmd: &Command) -> parcomod::Result<Outcome> {
    match cmd {
        Command::Verify(a) => run_verify(a),
        Command::Construct(a) => run_construct(a),
        Command::ClassifyGroup(a) => run_group_table(&load_group(&a.group)?, false),
        Command::Tables(a) => run_tables(a),
        Command::HparDim(a) => run_hpar(a),
        Command::Apar(a) => run_apar(a),
        Command::Onedim(a) => run_onedim(a),
        Command::DualBridge(a) => run_bridge(a),
    }
}

fn is_file(s: &str) -> bool {
    s.ends_with(".json") || Path::new(s).is_file()
}

fn load_algebra(s: &str) -> parcomod::Result<FiniteDimHopf> {
    if is_file(s) {
        let j: HopfJson = serde_json::from_str(&std::fs::read_to_string(s)?)?;
        return FiniteDimHopf::from_json(&j);
    }
    preset_algebra(s, default_order())
}

fn load_group(s: &str) -> parcomod::Result<FiniteGroup> {
    if is_file(s) {
        let j: GroupJson = serde_json::from_str(&std::fs::read_to_string(s)?)?;
        let name = Path::new(s).file_stem().map_or("G".into(), |x| x.to_string_lossy().into_owned());
        return FiniteGroup::from_json(&name, &j);
    }
    FiniteGroup::preset(s)
}

fn as_group(s: &str) -> parcomod::Result<Option<FiniteGroup>> {
    if GROUP_PRESETS.contains(&s) || (!is_file(s) && s.starts_with('c') && FiniteGroup::preset(s).is_ok()) {
        return FiniteGroup::preset(s).map(Some);
    }
    Ok(None)
}

/// Which built-in catalog an algebra belongs to.
fn kind<'a>(name: &'a str, h: &FiniteDimHopf) -> &'a str {
    match (name, h.name.as_str()) {
        ("kac", _) | (_, "Kac") => "kac",
        ("sweedler" | "h4", _) | (_, "H4") => "sweedler",
        _ => name,
    }
}

fn run_verify(a: &VerifyArgs) -> parcomod::Result<Outcome> {
    let n = default_order();
    let algebras: Vec<FiniteDimHopf> = if a.all {
        let mut v = Vec::new();
        for g in ["c2", "c3", "klein", "s3", "d8", "q8"] {
            let h = group_algebra(&FiniteGroup::preset(g)?, n);
            v.push(h.dual());
            v.push(h);
        }
        v.push(sweedler(n));
        v.push(preset_algebra("kac", n)?);
        v
    } else {
        let h = load_algebra(a.algebra.as_deref().expect("required by clap"))?;
        vec![if a.dual { h.dual() } else { h }]
    };
    let reports: Vec<_> = algebras.par_iter().map(|h| h.verify()).collect();
    let ok = reports.iter().all(|r| r.all_pass());
    for r in &reports {
        let failed: Vec<&str> = r.results.iter().filter(|x| !x.pass).map(|x| x.axiom.as_str()).collect();
        if failed.is_empty() {
            eprintln!("{}: all axioms hold", r.algebra);
        } else {
            eprintln!("{}: FAILED {}", r.algebra, failed.join(", "));
        }
    }
    Ok(Outcome::json(&serde_json::to_value(&reports)?, ok))
}

fn run_construct(a: &ConstructArgs) -> parcomod::Result<Outcome> {
    let h = Arc::new(load_algebra(&a.algebra)?);
    let e = h.parse_element(&a.idempotent)?;
    let extra: Vec<Vector> = match &a.comodule_grouplike {
        Some(g) => vec![h.parse_element(g)?],
        None => Vec::new(),
    };
    let c = Construction::with_candidates(h.clone(), &e, &extra)?;
    eprintln!("A_e: dim {}; H̄: dim {}; He: dim {}", c.idem.dim(), c.quotient.dim(), c.he.dim());
    let ms = if a.all {
        c.simple_comodules()?
    } else if let Some(g) = extra.first() {
        vec![c.with_grouplike(g)?]
    } else {
        vec![c.coinvariants()?]
    };
    let mut ok = true;
    let mut items = Vec::new();
    for m in &ms {
        let pcm = m.check_pcm();
        ok &= pcm.all_pass();
        eprintln!("dim {}: axioms {}", m.dim, if pcm.all_pass() { "hold" } else { "FAIL" });
        items.push(serde_json::to_value(m.to_json())?);
    }
    let v = if a.all { Value::Array(items) } else { items.remove(0) };
    Ok(Outcome::json(&v, ok))
}

/// Rows as emitted, or grouped by subgroup order as in the published table.
fn canonical_group_order(rows: &mut [GroupRow]) {
    rows.sort_by_key(|r| (r.subgroup.len(), r.dim_i));
}

fn run_group_table(g: &FiniteGroup, paper_order: bool) -> parcomod::Result<Outcome> {
    let n = default_order();
    let h = group_algebra(g, n);
    let mut rows = classify_group_simples(g, n)?;
    if paper_order {
        canonical_group_order(&mut rows);
    }
    let dims: Vec<usize> = rows.iter().flat_map(|r| r.dims()).collect();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &d in &dims {
        match counts.iter_mut().find(|(x, _)| *x == d) {
            Some(p) => p.1 += 1,
            None => counts.push((d, 1)),
        }
    }
    counts.sort_unstable();
    let parts: Vec<String> = counts.iter().map(|(d, m)| format!("{m} of dim {d}")).collect();
    eprintln!("{} rows; {}; sum of squares {}", rows.len(), parts.join(", "), dims.iter().map(|d| d * d).sum::<usize>());
    Ok(Outcome { payload: group_rows_csv(g, &h, &rows), code: 0 })
}

fn run_tables(a: &TablesArgs) -> parcomod::Result<Outcome> {
    let name = a.group.as_deref().or(a.algebra.as_deref()).expect("required by clap");
    if a.group.is_some() {
        return run_group_table(&load_group(name)?, a.paper_order);
    }
    if let Some(g) = as_group(name)? {
        return run_group_table(&g, a.paper_order);
    }
    if name != "kac" {
        return Err(Error::Unsupported(format!("no classification table for {name}")));
    }
    let h = Arc::new(preset_algebra("kac", default_order())?);
    let mut rows = classify_kac(h.clone())?;
    if !a.paper_order {
        rows.sort_by_key(|r| (r.coideal_dim, r.coinvariant_dim));
    }
    let total: usize = rows.iter().map(|r| r.sum_of_squares()).sum();
    eprintln!("{} rows; total {total}", rows.len());
    Ok(Outcome { payload: declared_rows_csv(&h, &rows), code: 0 })
}

/// The algebra the enumeration runs on, and a bundle of simple partial
/// comodules over its dual.
struct Setup {
    engine: FiniteDimHopf,
    bundle: Vec<PartialComodule>,
    base: Arc<FiniteDimHopf>,
    representatives: Vec<Vector>,
}

fn setup(t: &Target) -> parcomod::Result<Setup> {
    let n = default_order();
    let name = t.group.as_deref().or(t.algebra.as_deref()).expect("required by clap");
    let group = match &t.group {
        Some(g) => Some(load_group(g)?),
        None => as_group(name)?,
    };
    let mut s = if let Some(g) = group {
        let h = Arc::new(group_algebra(&g, n));
        if t.dual {
            let rows = classify_group_simples(&g, n)?;
            let reps = rows.iter().map(|r| r.idempotent.clone()).collect();
            let bundle = rows.into_iter().flat_map(|r| r.comodules).collect();
            Setup { engine: h.dual(), bundle, base: h, representatives: reps }
        } else {
            // partial kG*-comodules are not enumerated here
            let base = Arc::new(h.dual());
            Setup { engine: (*h).clone(), bundle: Vec::new(), base, representatives: Vec::new() }
        }
    } else {
        let h = Arc::new(load_algebra(name)?);
        let (bundle, reps) = match kind(name, &h) {
            "kac" => {
                let rows = classify_kac(h.clone())?;
                let reps = kac_idempotents(&h)?.into_iter().map(|c| c.element).collect();
                (rows.into_iter().flat_map(|r| r.comodules).collect(), reps)
            }
            "sweedler" => {
                let cat = h4_catalog(&h, &gamma_samples(n)?)?;
                let b = cat.iter().map(|e| PartialComodule::one_dim(h.clone(), &e.r)).collect::<parcomod::Result<_>>()?;
                (b, Vec::new())
            }
            _ => (Vec::new(), Vec::new()),
        };
        // self-dual catalog algebras: the bundle serves both orientations
        let engine = if t.dual { h.dual() } else { (*h).clone() };
        Setup { engine, bundle, base: h, representatives: reps }
    };
    if let Some(p) = &t.bundle {
        let js: Vec<PartialComoduleJson> = serde_json::from_str(&std::fs::read_to_string(p)?)?;
        s.bundle = js.iter().map(|j| PartialComodule::from_json(s.base.clone(), j)).collect::<parcomod::Result<_>>()?;
    }
    for m in &s.bundle {
        if !m.check_pcm().all_pass() {
            return Err(Error::Verification("bundle member fails the partial comodule axioms".into()));
        }
    }
    Ok(s)
}

fn run_hpar(a: &HparArgs) -> parcomod::Result<Outcome> {
    let s = setup(&a.target)?;
    let cfg = VeConfig { max_degree: Some(a.max_degree), memory_budget_mb: a.budget_mb, checkpoint: a.checkpoint.clone(), ..Default::default() };
    let r = certified_dim(&s.engine, &s.bundle, &cfg)?;
    let code = match &r.status {
        HparStatus::Certified { dim } => {
            eprintln!("{}: certified dim {dim}{}", r.algebra, r.blocks.as_ref().map_or(String::new(), |b| format!(" = {b}")));
            0
        }
        HparStatus::UpperLower { upper, lower } => {
            eprintln!("{}: {lower} <= dim <= {upper}", r.algebra);
            2
        }
        HparStatus::BudgetExceeded { lower, reason } => {
            eprintln!("{}: budget exceeded ({reason}); lower bound {lower}", r.algebra);
            3
        }
    };
    Ok(Outcome { code, ..Outcome::json(&serde_json::to_value(&r)?, true) })
}

fn run_apar(a: &AparArgs) -> parcomod::Result<Outcome> {
    let s = setup(&a.target)?;
    if s.bundle.is_empty() {
        return Err(Error::Input("no bundle of partial comodules for this algebra; pass --bundle".into()));
    }
    let rep = apar_analysis(&s.bundle)?;
    eprintln!("A_par: dim {}, semisimple {}, {}", rep.dim, rep.semisimple, rep.summary.as_deref().unwrap_or("blocks not split"));
    let mut v = json!({ "apar": rep });
    if a.conjecture_c {
        if s.representatives.is_empty() {
            return Err(Error::Input("no idempotent representatives for this algebra".into()));
        }
        let c = conjecture_c(&s.base, &s.representatives, Some(rep.dim))?;
        eprintln!("map into Π A_e·e: image {} of {}", c.image_dim, c.target_dim);
        v["conjecture_c"] = serde_json::to_value(&c)?;
    }
    Ok(Outcome::json(&v, true))
}

fn onedim_item(h: &Arc<FiniteDimHopf>, r: &[parcomod::FieldElem], full: bool) -> parcomod::Result<(Value, bool)> {
    let c = check_r(h, r);
    let mut v = json!({ "element": c.element, "check": c });
    let mut ok = c.pass();
    if ok && full {
        let f = closure_facts(h, r)?;
        let rec = reconstruct(h, r)?;
        ok = f.all_hold() && rec.ok();
        v["closure"] = serde_json::to_value(&f)?;
        v["reconstruction"] = serde_json::to_value(&rec)?;
    }
    v["verified"] = Value::Bool(ok);
    Ok((v, ok))
}

fn run_onedim(a: &OnedimArgs) -> parcomod::Result<Outcome> {
    let n = default_order();
    let h = Arc::new(load_algebra(&a.algebra)?);
    if let Some(s) = &a.mode.check {
        let (v, ok) = onedim_item(&h, &h.parse_element(s)?, false)?;
        return Ok(Outcome::json(&Value::Array(vec![v]), ok));
    }
    if let Some(s) = &a.mode.reconstruct {
        let (v, ok) = onedim_item(&h, &h.parse_element(s)?, true)?;
        return Ok(Outcome::json(&Value::Array(vec![v]), ok));
    }
    let rs: Vec<Vector> = if let Some(g) = as_group(&a.algebra)? {
        classify_group_onedim(&g, &h)
    } else {
        match kind(&a.algebra, &h) {
            "sweedler" => h4_catalog(&h, &gamma_samples(n)?)?.into_iter().map(|e| e.r).collect(),
            "kac" => classify_kac(h.clone())?
                .into_iter()
                .flat_map(|row| row.comodules)
                .filter(|m| m.dim == 1)
                .map(|m| m.rho.col(0))
                .collect(),
            other => return Err(Error::Unsupported(format!("no one-dimensional classification for {other}"))),
        }
    };
    let items: Vec<(Value, bool)> = rs.par_iter().map(|r| onedim_item(&h, r, true)).collect::<parcomod::Result<_>>()?;
    let ok = items.iter().all(|x| x.1);
    eprintln!("{} one-dimensional partial comodules, {} verified", items.len(), items.iter().filter(|x| x.1).count());
    Ok(Outcome::json(&Value::Array(items.into_iter().map(|x| x.0).collect()), ok))
}

fn run_bridge(a: &BridgeArgs) -> parcomod::Result<Outcome> {
    let n = default_order();
    let g = load_group(&a.group)?;
    if g.order() > 64 {
        return Err(Error::Unsupported("groups of order above 64".into()));
    }
    let masks: Vec<u64> = match &a.subset {
        Some(s) => {
            let mut m = 0u64;
            for l in s.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                let i = g.index_of(l).ok_or_else(|| Error::Input(format!("unknown element {l}")))?;
                m |= 1 << i;
            }
            vec![m]
        }
        None => (0..1u64 << g.order()).filter(|m| m & (1 << g.identity) != 0).collect(),
    };
    let mut jobs = Vec::new();
    for &m in &masks {
        let k = left_stabilizer(&g, m);
        let nirr = irreps(&g.restrict(&k), n)?.len();
        jobs.extend((0..nirr).map(|w| (m, w)));
    }
    let reports: Vec<_> = jobs.par_iter().map(|&(m, w)| dual_group_bridge(&g, m, w, n)).collect::<parcomod::Result<_>>()?;
    let ok = reports.iter().all(|r| r.ok());
    eprintln!("{} pairs (X, W), {} verified", reports.len(), reports.iter().filter(|r| r.ok()).count());
    for r in reports.iter().filter(|r| !r.ok()) {
        eprintln!("FAILED X = {{{}}}, K = {{{}}}", r.subset.join(", "), r.stabilizer.join(", "));
    }
    Ok(Outcome::json(&serde_json::to_value(&reports)?, ok))
}
