//! Command-line surface over `superaffine-core`: argument parsing, dispatch,
//! and JSON/table rendering. `main.rs` only prints what [`run`] returns.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use superaffine_core::admissible;
use superaffine_core::classify::{self, CandidateStats, Report};
use superaffine_core::rootdata::desk_roster;
use superaffine_core::weyl::{self, WeylGroup};
use superaffine_core::witness::{self, WitnessContext};
use superaffine_core::{
    build_root_system, parse_algebra, CanonicalWeight, Error, FamilySpec, Parity, RootSystem, Verdict, Q,
};

pub const SCHEMA_VERSION: &str = "1";
pub const ALL_DESK: &str = "all-desk";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REJECTED_LEVEL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "superaffine", version, about = "Ordinary modules of affine vertex superalgebras at boundary levels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Algebra name such as "sl(2|1)", "osp(5|2)", "F(4)", or "all-desk".
    #[arg(long)]
    pub algebra: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LevelSelection {
    /// A single level parameter.
    #[arg(long, conflicts_with_all = ["u_max", "u_range"])]
    pub u: Option<u64>,
    /// All u from 1 to this value.
    #[arg(long, conflicts_with = "u_range")]
    pub u_max: Option<u64>,
    /// Inclusive range "a..b".
    #[arg(long, value_parser = parse_u_range)]
    pub u_range: Option<RangeInclusive<u64>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary admissible levels up to --u-max.
    Levels {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10)]
        u_max: u64,
    },
    /// Root-system summary.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// Even Weyl group order, generators and factorization.
    Weyl {
        #[command(flatten)]
        common: Common,
    },
    /// Irreducible ordinary modules at principal levels.
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        levels: LevelSelection,
    },
    /// Compare the classification with the closed-form answer.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        levels: LevelSelection,
    },
    /// Witness roots for every non-identity Weyl element.
    Witness {
        #[command(flatten)]
        common: Common,
    },
}

/// Parses `"a..b"` (or `"a..=b"`) into an inclusive range.
pub fn parse_u_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let hi: u64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("range must satisfy 1 ≤ a ≤ b, got {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Exact rational as `"p/q"` with `q > 0` in lowest terms, or `"p"`.
pub fn render_rational(x: Q) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Option<Q> {
    s.parse().ok()
}

/// What a command produced: exit code plus the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, message: String) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidFamily(_) => EXIT_USAGE,
        Error::RejectedLevel { .. } | Error::SubprincipalLevel { .. } => EXIT_REJECTED_LEVEL,
        _ => EXIT_FAILED,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::error(exit_code_for(&e), e.to_string())
    }
}

/// Command result before rendering.
struct Rendered {
    code: i32,
    payload: Value,
    table: String,
}

pub fn run(cli: &Cli) -> Outcome {
    let (name, common) = match &cli.command {
        Command::Levels { common, .. } => ("levels", common),
        Command::Roots { common } => ("roots", common),
        Command::Weyl { common } => ("weyl", common),
        Command::Classify { common, .. } => ("classify", common),
        Command::Verify { common, .. } => ("verify", common),
        Command::Witness { common } => ("witness", common),
    };
    let systems = match resolve_algebras(&common.algebra) {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    let all_desk = systems.len() > 1;
    let result = match &cli.command {
        Command::Levels { u_max, .. } => Ok(levels(&systems, *u_max)),
        Command::Roots { .. } => roots(&systems),
        Command::Weyl { .. } => weyl_summary(&systems),
        Command::Classify { levels, .. } => classify_cmd(&systems, levels, all_desk),
        Command::Verify { levels, .. } => verify_cmd(&systems, levels, all_desk),
        Command::Witness { .. } => witness_cmd(&systems),
    };
    match result {
        Err(e) => e.into(),
        Ok(r) => {
            let stdout = match common.format {
                Format::Json => {
                    let doc = json!({ "schema_version": SCHEMA_VERSION, "command": name, "payload": r.payload });
                    serde_json::to_string_pretty(&doc).expect("values serialize") + "\n"
                }
                Format::Table => r.table,
            };
            Outcome { code: r.code, stdout, stderr: String::new() }
        }
    }
}

fn resolve_algebras(name: &str) -> Result<Vec<RootSystem>, Error> {
    let specs: Vec<FamilySpec> =
        if name.trim().eq_ignore_ascii_case(ALL_DESK) { desk_roster() } else { vec![parse_algebra(name)?] };
    specs.into_iter().map(build_root_system).collect()
}

fn rat(x: Q) -> Value {
    Value::String(render_rational(x))
}

fn rats(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(|&x| rat(x)).collect())
}

fn pi_coords(rs: &RootSystem, v: &[Q]) -> Value {
    rats(&rs.pi_coords(v).expect("roots lie in span Π"))
}

fn weight_json(w: &CanonicalWeight) -> Value {
    json!({ "level": rat(w.level), "pairings": rats(&w.pairings) })
}

fn stats_json(s: &CandidateStats) -> Value {
    json!({ "candidates": s.candidates, "survivors": s.survivors, "distinct": s.distinct })
}

fn join(xs: &[Q]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Left-aligned text table.
fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> =
            cells.iter().zip(&width).map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    out += &line(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for r in rows {
        out += &line(r);
    }
    out
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn levels(systems: &[RootSystem], u_max: u64) -> Rendered {
    let mut payload = Vec::new();
    let mut rows = Vec::new();
    for rs in systems {
        let ls = admissible::boundary_levels(rs, u_max);
        for l in &ls {
            rows.push(vec![rs.family.to_string(), l.u.to_string(), l.kind.to_string(), l.level.to_string()]);
        }
        let entries: Vec<Value> =
            ls.iter().map(|l| json!({ "u": l.u, "level": rat(l.level), "kind": l.kind.to_string() })).collect();
        payload.push(json!({ "algebra": rs.family.to_string(), "h_dual": rat(rs.h_dual), "levels": entries }));
    }
    let mut text = table(&strings(&["algebra", "u", "kind", "level"]), &rows);
    if rows.is_empty() {
        text += "no boundary admissible levels\n";
    }
    Rendered { code: EXIT_OK, payload: Value::Array(payload), table: text }
}

fn roots(systems: &[RootSystem]) -> Result<Rendered, Error> {
    let mut payload = Vec::new();
    let mut text = String::new();
    for rs in systems {
        let (even, odd) = rs.root_counts();
        let parity: Vec<&str> = rs.parity.iter().map(|p| if *p == Parity::Odd { "odd" } else { "even" }).collect();
        let gram: Vec<Value> = rs.gram.iter().map(|row| rats(row)).collect();
        let cartan: Vec<Value> = rs.cartan_matrix().iter().map(|row| rats(row)).collect();
        let even_simple: Vec<Value> = rs.even_simple.iter().map(|v| pi_coords(rs, v)).collect();
        payload.push(json!({
            "algebra": rs.family.to_string(),
            "rank": rs.rank(),
            "parity": parity,
            "gram": gram,
            "cartan": cartan,
            "theta": pi_coords(rs, &rs.theta),
            "marks": rs.marks,
            "rho_pairings": rats(&rs.rho_pairings()),
            "h_dual": rat(rs.h_dual),
            "lacety": rs.lacety,
            "root_counts": { "even": even, "odd": odd },
            "even_simple": even_simple,
        }));
        let _ = writeln!(text, "{}", rs.family);
        let _ = writeln!(text, "  rank {}, h∨ = {}, r∨ = {}", rs.rank(), rs.h_dual, rs.lacety);
        let _ = writeln!(text, "  parity: {}", parity.join(" "));
        let _ = writeln!(text, "  marks: {:?}", rs.marks);
        let _ = writeln!(text, "  (ρ, α_i): {}", join(&rs.rho_pairings()));
        let _ = writeln!(text, "  roots: {even} even, {odd} odd");
        let _ = writeln!(text, "  Cartan matrix:");
        for row in rs.cartan_matrix() {
            let _ = writeln!(text, "    {}", row.iter().map(|x| format!("{x:>5}")).collect::<String>());
        }
    }
    Ok(Rendered { code: EXIT_OK, payload: Value::Array(payload), table: text })
}

fn weyl_summary(systems: &[RootSystem]) -> Result<Rendered, Error> {
    let mut payload = Vec::new();
    let mut rows = Vec::new();
    for rs in systems {
        let w = weyl::generate_weyl(rs)?;
        let f = weyl::factorize(rs, &w)?;
        let gens: Vec<Value> = w.generators.iter().map(|g| pi_coords(rs, g)).collect();
        let prime = f.w1_prime.as_ref().map(WeylGroup::order);
        payload.push(json!({
            "algebra": rs.family.to_string(),
            "order": w.order(),
            "generators": gens,
            "factors": { "w1": f.w1.order(), "w2": f.w2.order(), "w1_prime": prime },
        }));
        rows.push(vec![
            rs.family.to_string(),
            w.order().to_string(),
            f.w1.order().to_string(),
            f.w2.order().to_string(),
            prime.map_or("-".into(), |p| p.to_string()),
        ]);
    }
    Ok(Rendered {
        code: EXIT_OK,
        payload: Value::Array(payload),
        table: table(&strings(&["algebra", "|W|", "|W1|", "|W2|", "|W1'|"]), &rows),
    })
}

/// The u values a selection names, defaulting to `1..=default_max`.
fn selected(levels: &LevelSelection, default_max: u64) -> (Vec<u64>, bool) {
    match (levels.u, levels.u_max, &levels.u_range) {
        (Some(u), _, _) => (vec![u], true),
        (_, Some(m), _) => ((1..=m).collect(), false),
        (_, _, Some(r)) => (r.clone().collect(), false),
        _ => ((1..=default_max).collect(), false),
    }
}

type Cells<'a> = (Vec<(&'a RootSystem, u64)>, Vec<Value>);

/// Cells to run, plus skipped `(algebra, u, reason)` notes. A single explicit
/// u on a single algebra is an error when it is not a principal level.
fn cells<'a>(systems: &'a [RootSystem], levels: &LevelSelection, all_desk: bool) -> Result<Cells<'a>, Error> {
    let (us, explicit) = selected(levels, 5);
    let mut run = Vec::new();
    let mut skipped = Vec::new();
    for rs in systems {
        for &u in &us {
            match admissible::check_principal(rs, u) {
                Ok(()) => run.push((rs, u)),
                Err(e) if explicit && !all_desk => return Err(e),
                Err(e) => skipped.push(json!({ "algebra": rs.family.to_string(), "u": u, "reason": e.to_string() })),
            }
        }
    }
    Ok((run, skipped))
}

fn pairing_header(rank: usize) -> Vec<String> {
    let mut h = strings(&["algebra", "u", "level"]);
    h.extend((1..=rank).map(|i| format!("α{i}")));
    h
}

fn weight_row(algebra: &str, u: u64, w: &CanonicalWeight, rank: usize) -> Vec<String> {
    let mut row = vec![algebra.to_string(), u.to_string(), w.level.to_string()];
    row.extend(w.pairings.iter().map(ToString::to_string));
    row.resize(rank + 3, String::new());
    row
}

fn skipped_note(skipped: &[Value]) -> String {
    if skipped.is_empty() {
        String::new()
    } else {
        format!("skipped {} (algebra, u) cells that are not principal boundary levels\n", skipped.len())
    }
}

fn classify_cmd(systems: &[RootSystem], levels: &LevelSelection, all_desk: bool) -> Result<Rendered, Error> {
    let (run, skipped) = cells(systems, levels, all_desk)?;
    let max_rank = systems.iter().map(RootSystem::rank).max().unwrap_or(0);
    let mut payload = Vec::new();
    let mut rows = Vec::new();
    for (rs, u) in run {
        let c = classify::classify_detailed(rs, u)?;
        let name = rs.family.to_string();
        rows.extend(c.weights.iter().map(|w| weight_row(&name, u, w, max_rank)));
        payload.push(json!({
            "algebra": name,
            "u": u,
            "level": rat(admissible::principal_level(rs, u)),
            "weights": c.weights.iter().map(weight_json).collect::<Vec<_>>(),
            "candidate_stats": stats_json(&c.stats),
        }));
    }
    let text = table(&pairing_header(max_rank), &rows) + &skipped_note(&skipped);
    Ok(Rendered { code: EXIT_OK, payload: json!({ "results": payload, "skipped": skipped }), table: text })
}

fn report_json(r: &Report) -> Value {
    json!({
        "algebra": r.family.to_string(),
        "u": r.u,
        "level": rat(r.level),
        "verdict": r.verdict.to_string(),
        "found": r.found.iter().map(weight_json).collect::<Vec<_>>(),
        "expected": r.expected.iter().map(weight_json).collect::<Vec<_>>(),
        "missing": r.missing.iter().map(weight_json).collect::<Vec<_>>(),
        "unexpected": r.unexpected.iter().map(weight_json).collect::<Vec<_>>(),
        "candidate_stats": stats_json(&r.stats),
    })
}

fn verify_cmd(systems: &[RootSystem], levels: &LevelSelection, all_desk: bool) -> Result<Rendered, Error> {
    let (run, skipped) = cells(systems, levels, all_desk)?;
    let mut reports = Vec::new();
    for (rs, u) in run {
        reports.push(classify::verify(rs, u)?);
    }
    let all_pass = reports.iter().all(|r| r.verdict == Verdict::Pass);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.u.to_string(),
                r.level.to_string(),
                r.found.len().to_string(),
                r.expected.len().to_string(),
                format!("{}/{}/{}", r.stats.candidates, r.stats.survivors, r.stats.distinct),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let mut text = table(&strings(&["algebra", "u", "level", "found", "expected", "cand/surv/dist", "verdict"]), &rows);
    for r in reports.iter().filter(|r| r.verdict != Verdict::Pass) {
        for w in &r.unexpected {
            let _ = writeln!(text, "{} u={}: unexpected {w}", r.family, r.u);
        }
        for w in &r.missing {
            let _ = writeln!(text, "{} u={}: missing {w}", r.family, r.u);
        }
    }
    text += &skipped_note(&skipped);
    let _ = writeln!(text, "{}", if all_pass { "all PASS" } else { "FAILED" });
    Ok(Rendered {
        code: if all_pass { EXIT_OK } else { EXIT_FAILED },
        payload: json!({
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            "skipped": skipped,
            "all_pass": all_pass,
        }),
        table: text,
    })
}

fn witness_cmd(systems: &[RootSystem]) -> Result<Rendered, Error> {
    let mut payload = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for rs in systems {
        let ctx = WitnessContext::new(rs)?;
        let name = rs.family.to_string();
        let mut elements = Vec::new();
        for y in ctx.weyl.iter().filter(|y| !y.is_identity()) {
            let word = y.word.clone();
            if !ctx.in_domain(y) {
                elements.push(json!({ "word": word, "status": "outside-domain" }));
                continue;
            }
            match ctx.find_witness(y) {
                Ok(w) => {
                    let cmp = if w.strict { ">" } else { "≥" };
                    rows.push(vec![
                        name.clone(),
                        format!("{word:?}"),
                        format!("{:?}", w.branch),
                        join(&rs.pi_coords(&w.alpha).unwrap_or_default()),
                        format!("{} {cmp} {}", w.bound, w.threshold),
                    ]);
                    elements.push(json!({
                        "word": word,
                        "status": "verified",
                        "branch": format!("{:?}", w.branch).to_lowercase(),
                        "alpha": pi_coords(rs, &w.alpha),
                        "bound": rat(w.bound),
                        "threshold": rat(w.threshold),
                        "strict": w.strict,
                    }));
                }
                Err(e) => {
                    ok = false;
                    rows.push(vec![name.clone(), format!("{word:?}"), "FAILED".into(), e.to_string(), String::new()]);
                    elements.push(json!({ "word": word, "status": "failed", "error": e.to_string() }));
                }
            }
        }
        let mut long = Vec::new();
        if witness::has_long_root_witness(rs) {
            for y in ctx.factors.w1.iter() {
                let stabilizer = ctx.factors.w1_prime.as_ref().is_some_and(|g| g.contains(y));
                let entry = match (stabilizer, ctx.find_long_root_witness(y)) {
                    (false, Ok(w)) => json!({
                        "word": y.word,
                        "status": "verified",
                        "alpha": pi_coords(rs, &w.alpha),
                        "rho_gap": rat(w.rho_gap),
                    }),
                    (true, Err(Error::Precondition(_))) => json!({ "word": y.word, "status": "stabilizer" }),
                    (_, r) => {
                        ok = false;
                        json!({ "word": y.word, "status": "failed", "error": format!("{r:?}") })
                    }
                };
                long.push(entry);
            }
        }
        payload.push(json!({
            "algebra": name,
            "domain": format!("{:?}", ctx.rule.domain),
            "elements": elements,
            "long_root": long,
        }));
    }
    let mut text = table(&strings(&["algebra", "y", "branch", "α (Π-coords)", "bound"]), &rows);
    let _ = writeln!(text, "{}", if ok { "all witnesses verified" } else { "FAILED" });
    Ok(Rendered {
        code: if ok { EXIT_OK } else { EXIT_FAILED },
        payload: json!({ "algebras": payload, "all_verified": ok }),
        table: text,
    })
}
