//! Command-line front end.
//!
//! Exit codes: 0 when the answer is positive (holds, valid, member,
//! accepted, passed), 1 when it is negative, 2 on usage errors and on any
//! error that prevents an answer.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{self, check_class, enumerate_sh, format, library, EnumerateOptions, FiniteAlgebra};
use crate::equations::bases::{corpus, entry, BaseReport, ProbeStatus};
use crate::equations::{self, catalog, verify_base, Identity};
use crate::error::{Error, Result};
use crate::formula::{parse, Formula};
use crate::matrices::{consequence, decide, MatrixFamily};
use crate::proofs::{check_proof, deduction_closure_check, deduction_transform, parse_script, search_proof};
use crate::varieties::{self, free_algebra, member_of_variety, Caps, Certificate};

/// Version of the `--json` envelope.
pub const JSON_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "shlab",
    version,
    about = "Finite semi-Heyting algebras, identities, bases and proofs"
)]
pub struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Algebra file(s) whose algebras are usable by name next to the library.
    #[arg(long, global = true, value_name = "FILE")]
    pub load: Vec<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Library algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Semi-Heyting algebras of a given order up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Identity checks.
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// Equational bases.
    #[command(subcommand)]
    Base(BaseCmd),
    /// Registered logics and matrix decisions.
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Free algebra of the variety generated by some algebras.
    Free(FreeArgs),
    /// Membership of an algebra in a finitely generated variety.
    Member(MemberArgs),
    /// Proof scripts.
    #[command(subcommand)]
    Proof(ProofCmd),
    /// Class, variety and logic registries.
    #[command(subcommand)]
    Registry(RegistryCmd),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    List,
    Show {
        name: String,
    },
    /// Checks membership in a class, identity by identity.
    Check {
        name: String,
        #[arg(long)]
        class: String,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long, default_value = "SH")]
    pub class: String,
    /// Largest order accepted.
    #[arg(long, default_value_t = 4)]
    pub cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum IdentityCmd {
    List,
    Check {
        /// One or more algebras, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        algebra: Vec<String>,
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        id: Option<String>,
        /// `f = g`, `f <= g`, or `f` for `f = 1`.
        #[arg(long)]
        expr: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum BaseCmd {
    List,
    Verify(BaseVerifyArgs),
}

#[derive(Args, Debug)]
pub struct BaseVerifyArgs {
    #[arg(long, conflicts_with_all = ["generators", "full", "curated"])]
    pub key: Option<String>,
    #[arg(long, value_delimiter = ',', requires_all = ["ambient", "ids"])]
    pub generators: Vec<String>,
    #[arg(long)]
    pub ambient: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
    /// Extra probes beyond the core library.
    #[arg(long, value_delimiter = ',')]
    pub probes: Vec<String>,
    /// Every corpus entry; fails only on generator-side failures.
    #[arg(long, conflicts_with = "curated")]
    pub full: bool,
    /// The curated corpus entries; fails unless every one passes.
    #[arg(long)]
    pub curated: bool,
}

#[derive(Subcommand, Debug)]
pub enum LogicCmd {
    List,
    Show {
        name: String,
    },
    Decide {
        #[arg(long)]
        logic: String,
        formula: String,
    },
    Consequence {
        #[arg(long)]
        logic: String,
        /// One formula per line.
        #[arg(long)]
        premises: PathBuf,
        formula: String,
    },
    /// Runs the deduction transform over the shipped corpus.
    Deduction {
        #[arg(long)]
        logic: String,
    },
}

#[derive(Args, Debug)]
pub struct FreeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub generators: Vec<String>,
    #[arg(long)]
    pub arity: usize,
    /// Also print the operation tables.
    #[arg(long)]
    pub tables: bool,
}

#[derive(Args, Debug)]
pub struct MemberArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub generators: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum ProofCmd {
    Check {
        file: PathBuf,
    },
    Search {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long)]
        premise: Vec<String>,
    },
    /// Discharges the premise marked `hypothesis`.
    Deduce {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum RegistryCmd {
    Dump,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    ok: bool,
    text: String,
    json: Value,
}

impl Report {
    fn new(ok: bool, text: String, json: impl Serialize) -> Report {
        Report {
            ok,
            text,
            json: serde_json::to_value(json).expect("reports serialize"),
        }
    }
}

struct Ctx {
    loaded: Vec<FiniteAlgebra>,
    caps: Caps,
}

impl Ctx {
    fn alg(&self, name: &str) -> Result<FiniteAlgebra> {
        match self.loaded.iter().find(|a| a.name == name) {
            Some(a) => Ok(a.clone()),
            None => library::get(name),
        }
    }

    fn algs(&self, names: &[String]) -> Result<Vec<FiniteAlgebra>> {
        names.iter().map(|n| self.alg(n)).collect()
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Algebra(AlgebraCmd::List) => "algebra list",
        Command::Algebra(AlgebraCmd::Show { .. }) => "algebra show",
        Command::Algebra(AlgebraCmd::Check { .. }) => "algebra check",
        Command::Enumerate(_) => "enumerate",
        Command::Identity(IdentityCmd::List) => "identity list",
        Command::Identity(IdentityCmd::Check { .. }) => "identity check",
        Command::Base(BaseCmd::List) => "base list",
        Command::Base(BaseCmd::Verify(_)) => "base verify",
        Command::Logic(LogicCmd::List) => "logic list",
        Command::Logic(LogicCmd::Show { .. }) => "logic show",
        Command::Logic(LogicCmd::Decide { .. }) => "logic decide",
        Command::Logic(LogicCmd::Consequence { .. }) => "logic consequence",
        Command::Logic(LogicCmd::Deduction { .. }) => "logic deduction",
        Command::Free(_) => "free",
        Command::Member(_) => "member",
        Command::Proof(ProofCmd::Check { .. }) => "proof check",
        Command::Proof(ProofCmd::Search { .. }) => "proof search",
        Command::Proof(ProofCmd::Deduce { .. }) => "proof deduce",
        Command::Registry(_) => "registry dump",
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(r) => {
            let stdout = if cli.json {
                let doc = json!({"version": JSON_VERSION, "command": name, "ok": r.ok, "result": r.json});
                serde_json::to_string_pretty(&doc).expect("json") + "\n"
            } else {
                r.text
            };
            Output {
                code: if r.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: 2,
            stdout: if cli.json {
                let doc = json!({"version": JSON_VERSION, "command": name, "error": e.to_string()});
                serde_json::to_string_pretty(&doc).expect("json") + "\n"
            } else {
                String::new()
            },
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let mut loaded = Vec::new();
    for p in &cli.load {
        loaded.extend(format::parse_all(&read(p)?)?);
    }
    let ctx = Ctx {
        loaded,
        caps: Caps::from_env()?,
    };
    match &cli.command {
        Command::Algebra(c) => algebra_cmd(&ctx, c),
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Identity(c) => identity_cmd(&ctx, c),
        Command::Base(c) => base_cmd(&ctx, c),
        Command::Logic(c) => logic_cmd(c),
        Command::Free(a) => free_cmd(&ctx, a),
        Command::Member(a) => member_cmd(&ctx, a),
        Command::Proof(c) => proof_cmd(c),
        Command::Registry(RegistryCmd::Dump) => {
            let v = varieties::registry::dump();
            let text = serde_json::to_string_pretty(&v).expect("json") + "\n";
            Ok(Report {
                ok: true,
                text,
                json: v,
            })
        }
    }
}

fn tables_json(a: &FiniteAlgebra) -> Value {
    let n = a.order();
    let table = |t: &[algebra::Elem]| -> Vec<Vec<&str>> {
        (0..n)
            .map(|r| (0..n).map(|c| a.label(t[r * n + c])).collect())
            .collect()
    };
    json!({
        "name": a.name,
        "elements": a.labels,
        "bottom": a.label(a.bottom),
        "top": a.label(a.top),
        "meet": table(&a.meet),
        "join": table(&a.join),
        "imp": table(&a.imp),
        "neg": a.neg.as_ref().map(|v| v.iter().map(|&x| a.label(x)).collect::<Vec<_>>()),
    })
}

fn algebra_cmd(ctx: &Ctx, c: &AlgebraCmd) -> Result<Report> {
    match c {
        AlgebraCmd::List => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut add = |a: &FiniteAlgebra, source: &str| {
                let neg = a.has_neg();
                text.push_str(&format!(
                    "{:<8} order {:<2} {:<11} {}{}\n",
                    a.name,
                    a.order(),
                    if neg { "negation" } else { "no negation" },
                    if a.is_chain() { "chain" } else { "non-chain" },
                    if source == "loaded" { "  (loaded)" } else { "" }
                ));
                rows.push(json!({"name": a.name, "order": a.order(), "negation": neg, "chain": a.is_chain(), "source": source}));
            };
            for n in library::fixed_names() {
                add(&library::get(&n)?, "library");
            }
            for a in &ctx.loaded {
                add(a, "loaded");
            }
            text.push_str("parametric chains: Ch<n>, Ch<n>dp, DMH<n> for n >= 2\n");
            Ok(Report::new(true, text, rows))
        }
        AlgebraCmd::Show { name } => {
            let a = ctx.alg(name)?;
            Ok(Report {
                ok: true,
                text: format::render(&a),
                json: tables_json(&a),
            })
        }
        AlgebraCmd::Check { name, class } => {
            let a = ctx.alg(name)?;
            let r = check_class(&a, class)?;
            let text = match &r.failure {
                None => format!("{name} is in {class} ({} identities checked)\n", r.identities_checked),
                Some(f) => format!(
                    "{name} is not in {class}: {} (from {}) fails at {}\n",
                    f.identity, f.class, f.witness
                ),
            };
            Ok(Report::new(r.passed, text, &r))
        }
    }
}

fn enumerate_cmd(a: &EnumerateArgs) -> Result<Report> {
    let all = enumerate_sh(a.order, EnumerateOptions { cap: a.cap })?;
    let mut found = Vec::new();
    for alg in all {
        if a.class == "SH" || check_class(&alg, &a.class)?.passed {
            found.push(alg);
        }
    }
    let mut text = format!("order {}: {} algebras in {}\n", a.order, found.len(), a.class);
    for alg in &found {
        let n = alg.order();
        text.push_str(&format!("{}  elements {}\n", alg.name, alg.labels.join(" ")));
        for r in 0..n {
            let row: Vec<&str> = (0..n).map(|c| alg.label(alg.imp[r * n + c])).collect();
            text.push_str(&format!("  {} -> | {}\n", alg.label(r as algebra::Elem), row.join(" ")));
        }
    }
    let rows: Vec<Value> = found.iter().map(tables_json).collect();
    Ok(Report::new(
        true,
        text,
        json!({"order": a.order, "class": a.class, "count": found.len(), "algebras": rows}),
    ))
}

fn identity_cmd(ctx: &Ctx, c: &IdentityCmd) -> Result<Report> {
    match c {
        IdentityCmd::List => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for id in catalog() {
                let name = id.name.clone().unwrap_or_default();
                text.push_str(&format!("{name:<28} {}\n", id.render()));
                rows.push(json!({"name": name, "identity": id.render()}));
            }
            Ok(Report::new(true, text, rows))
        }
        IdentityCmd::Check { algebra, id, expr } => {
            let ident: Identity = match (id, expr) {
                (Some(n), _) => catalog::lookup(n)?,
                (None, Some(e)) => Identity::parse(e)?,
                (None, None) => unreachable!("clap requires one of --id and --expr"),
            };
            let mut ok = true;
            let mut text = String::new();
            let mut rows = Vec::new();
            for a in ctx.algs(algebra)? {
                let r = equations::holds(&a, &ident)?;
                let witness = r.counterexample.as_ref().map(|cx| cx.describe(&a));
                match &witness {
                    None => text.push_str(&format!("{}: holds ({} valuations)\n", a.name, r.valuations)),
                    Some(w) => {
                        ok = false;
                        text.push_str(&format!("{}: fails at {w}\n", a.name));
                    }
                }
                let assignment = r.counterexample.as_ref().map(|cx| {
                    cx.vars
                        .iter()
                        .zip(&cx.values)
                        .map(|(v, &x)| (v.clone(), a.label(x).to_string()))
                        .collect::<std::collections::BTreeMap<_, _>>()
                });
                rows.push(json!({
                    "algebra": a.name,
                    "identity": ident.label(),
                    "holds": r.passed(),
                    "valuations": r.valuations,
                    "witness": witness,
                    "assignment": assignment,
                }));
            }
            Ok(Report::new(ok, text, rows))
        }
    }
}

fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::Embedding { generator, map } => format!("embeds into {generator} ({})", map.join(" ")),
        Certificate::Homomorphism { generators, free_order } => format!(
            "image of the {}-generated free algebra (order {free_order}) at {}",
            generators.len(),
            generators.join(", ")
        ),
        Certificate::Separating {
            identity, valuation, ..
        } => format!("separated by {identity} at {valuation}"),
    }
}

fn base_text(title: &str, r: &BaseReport) -> String {
    let mut s = format!("{title}: {}\n", if r.passed { "passed" } else { "FAILED" });
    s.push_str(&format!("  generators: {}\n", r.generators.join(" ")));
    s.push_str(&format!("  ambient: {}\n", r.ambient));
    s.push_str(&format!("  base: {}\n", r.base.join(", ")));
    if r.generator_failures.is_empty() {
        s.push_str("  generator side: ok\n");
    }
    for g in &r.generator_failures {
        s.push_str(&format!(
            "  generator side: {} fails {} at {}\n",
            g.generator, g.identity, g.witness
        ));
    }
    for p in &r.probes {
        let line = match &p.status {
            ProbeStatus::Excluded { identity, .. } => format!("outside ambient ({identity})"),
            ProbeStatus::Fails { identity, witness } => format!("fails {identity} at {witness}"),
            ProbeStatus::Member { certificate } => format!("member, {}", certificate_text(certificate)),
            ProbeStatus::NotMember { separating } => {
                format!(
                    "DEFECT satisfies the base but is not a member, {}",
                    certificate_text(separating)
                )
            }
            ProbeStatus::Undecided { reason } => format!("DEFECT undecided: {reason}"),
        };
        s.push_str(&format!("  {:<6} {line}\n", p.algebra));
    }
    s.push_str(&format!(
        "  separation: {}\n",
        if r.separation_ok { "ok" } else { "defect" }
    ));
    s
}

fn base_cmd(ctx: &Ctx, c: &BaseCmd) -> Result<Report> {
    let a = match c {
        BaseCmd::List => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in corpus() {
                text.push_str(&format!("{}{}\n", e.key, if e.curated { "  (curated)" } else { "" }));
                rows.push(e);
            }
            return Ok(Report::new(true, text, rows));
        }
        BaseCmd::Verify(a) => a,
    };
    if a.full || a.curated {
        let mut text = String::new();
        let mut rows = Vec::new();
        let (mut gen_fail, mut sep_fail, mut count) = (0, 0, 0);
        for e in corpus().iter().filter(|e| a.full || e.curated) {
            count += 1;
            let r = e.verify(&ctx.caps)?;
            let status = if r.passed {
                "passed".to_string()
            } else {
                let mut parts = Vec::new();
                if !r.generator_side_ok {
                    gen_fail += 1;
                    parts.push(format!("generator side FAILED ({})", r.generator_failures.len()));
                }
                if !r.separation_ok {
                    sep_fail += 1;
                    let bad: Vec<&str> = r
                        .probes
                        .iter()
                        .filter(|p| matches!(p.status, ProbeStatus::NotMember { .. } | ProbeStatus::Undecided { .. }))
                        .map(|p| p.algebra.as_str())
                        .collect();
                    parts.push(format!("separation defect at {}", bad.join(" ")));
                }
                parts.join("; ")
            };
            text.push_str(&format!("{}: {status}\n", e.key));
            rows.push(json!({"key": e.key, "curated": e.curated, "report": r}));
        }
        text.push_str(&format!(
            "{count} entries, {gen_fail} generator-side failures, {sep_fail} separation defects\n"
        ));
        let ok = if a.full {
            gen_fail == 0
        } else {
            gen_fail == 0 && sep_fail == 0
        };
        return Ok(Report::new(
            ok,
            text,
            json!({"entries": rows, "generator_side_failures": gen_fail, "separation_defects": sep_fail}),
        ));
    }
    if let Some(k) = &a.key {
        let r = entry(k)?.verify(&ctx.caps)?;
        return Ok(Report::new(r.passed, base_text(k, &r), &r));
    }
    if a.generators.is_empty() {
        return Err(Error::WrongShape(
            "base verify needs --key, --generators/--ambient/--ids, --full or --curated".into(),
        ));
    }
    let gens = ctx.algs(&a.generators)?;
    let ambient = a.ambient.clone().unwrap_or_default();
    let ids = catalog::lookup_all(&a.ids)?;
    let mut probe_names = library::core_names();
    for p in &a.probes {
        if !probe_names.contains(p) {
            probe_names.push(p.clone());
        }
    }
    let probes = ctx.algs(&probe_names)?;
    let r = verify_base(&gens, &ambient, &ids, &probes, &ctx.caps)?;
    Ok(Report::new(r.passed, base_text("base", &r), &r))
}

fn formula_arg(text: &str) -> Result<Formula> {
    parse(text)
}

fn logic_cmd(c: &LogicCmd) -> Result<Report> {
    match c {
        LogicCmd::List => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for l in varieties::logics() {
                text.push_str(&format!(
                    "{:<22} over {:<8} variety {:<22} {} own axioms\n",
                    l.name,
                    l.parent.as_deref().unwrap_or("-"),
                    l.variety,
                    l.axioms.len()
                ));
                rows.push(json!({"name": l.name, "parent": l.parent, "variety": l.variety, "axioms": l.axioms.len()}));
            }
            Ok(Report::new(true, text, rows))
        }
        LogicCmd::Show { name } => {
            let l = varieties::logic(name)?;
            let mut text = format!("logic {}\n", l.name);
            text.push_str(&format!("variety {}\n", l.variety));
            text.push_str(&format!("rules {:?}\n", l.rules));
            for (label, f) in l.all_axioms()? {
                text.push_str(&format!("{label:<12} {}\n", f.render_sugared()));
            }
            Ok(Report::new(true, text, l))
        }
        LogicCmd::Decide { logic, formula } => {
            let v = decide(logic, &formula_arg(formula)?)?;
            Ok(Report::new(v.is_valid(), v.render() + "\n", &v))
        }
        LogicCmd::Consequence {
            logic,
            premises,
            formula,
        } => {
            let fam = MatrixFamily::for_logic(logic)?;
            let mut prem = Vec::new();
            for line in read(premises)?.lines() {
                let body = line.split('#').next().unwrap_or("").trim();
                if !body.is_empty() {
                    prem.push(parse(body)?);
                }
            }
            let v = consequence(&fam, &prem, &formula_arg(formula)?)?;
            Ok(Report::new(v.is_valid(), v.render() + "\n", &v))
        }
        LogicCmd::Deduction { logic } => {
            let r = deduction_closure_check(logic)?;
            let mut text = format!(
                "deduction transform in {}: {}\n",
                r.logic,
                if r.passed { "passed" } else { "FAILED" }
            );
            for c in &r.cases {
                text.push_str(&format!(
                    "  {:<16} {} |- {}  =>  |- {}  ({} lines, {})\n",
                    c.name,
                    c.hypothesis,
                    c.conclusion,
                    c.transformed_conclusion,
                    c.transformed_lines,
                    if c.passed() { "ok" } else { "FAILED" }
                ));
            }
            Ok(Report::new(r.passed, text, &r))
        }
    }
}

fn free_cmd(ctx: &Ctx, a: &FreeArgs) -> Result<Report> {
    let gens = ctx.algs(&a.generators)?;
    let f = free_algebra(&gens, a.arity, &ctx.caps)?;
    let mut text = format!(
        "free algebra of V({}) on {}: order {} over {} coordinates\n",
        a.generators.join(","),
        f.variables.join(", "),
        f.order(),
        f.coordinates.len()
    );
    for (i, t) in f.terms.iter().enumerate() {
        text.push_str(&format!("  e{i:<4} {}\n", t.render_sugared()));
    }
    if a.tables {
        match &f.algebra {
            Some(alg) => text.push_str(&format::render(alg)),
            None => text.push_str("tables not materialized at this order\n"),
        }
    }
    let rows: Vec<Value> = f
        .terms
        .iter()
        .zip(&f.elements)
        .map(|(t, v)| json!({"term": t.render_sugared(), "values": v}))
        .collect();
    Ok(Report::new(
        true,
        text,
        json!({
            "generators": f.generator_algebras,
            "arity": f.arity,
            "variables": f.variables,
            "order": f.order(),
            "coordinates": f.coordinates,
            "elements": rows,
            "free_generators": f.generators,
            "tables": f.algebra.as_ref().map(tables_json),
        }),
    ))
}

fn member_cmd(ctx: &Ctx, a: &MemberArgs) -> Result<Report> {
    let alg = ctx.alg(&a.algebra)?;
    let gens = ctx.algs(&a.generators)?;
    let m = member_of_variety(&alg, &gens, &ctx.caps)?;
    let text = format!(
        "{} {} V({}): {}\n",
        m.algebra,
        if m.member { "is in" } else { "is not in" },
        m.generators.join(","),
        certificate_text(&m.certificate)
    );
    Ok(Report::new(m.member, text, &m))
}

fn proof_cmd(c: &ProofCmd) -> Result<Report> {
    match c {
        ProofCmd::Check { file } => {
            let s = parse_script(&read(file)?)?;
            let v = check_proof(&s);
            let mut text = String::new();
            for l in &v.lines {
                match &l.reason {
                    None => text.push_str(&format!("{:>4} ok    {}\n", l.line, l.formula)),
                    Some(r) => text.push_str(&format!("{:>4} FAIL  {}  ({r})\n", l.line, l.formula)),
                }
            }
            text.push_str(&v.render());
            text.push('\n');
            Ok(Report::new(v.accepted, text, &v))
        }
        ProofCmd::Search {
            logic,
            goal,
            depth,
            premise,
        } => {
            let prem = premise.iter().map(|p| parse(p)).collect::<Result<Vec<_>>>()?;
            let goal = parse(goal)?;
            match search_proof(logic, &prem, &goal, *depth)? {
                Some(s) => Ok(Report::new(
                    true,
                    s.render(),
                    json!({"found": true, "script": s.render(), "proof": s}),
                )),
                None => Ok(Report::new(
                    false,
                    format!("no proof found within depth {depth}\n"),
                    json!({"found": false}),
                )),
            }
        }
        ProofCmd::Deduce { file } => {
            let s = parse_script(&read(file)?)?;
            let hyp = s.hypothesis().ok_or_else(|| Error::ProofFormat {
                line: 0,
                reason: "no premise is marked `hypothesis`".into(),
            })?;
            let t = deduction_transform(&s, hyp)?;
            let v = check_proof(&t);
            let text = t.render();
            Ok(Report::new(
                v.accepted,
                text,
                json!({"script": t.render(), "verdict": v, "proof": t}),
            ))
        }
    }
}
