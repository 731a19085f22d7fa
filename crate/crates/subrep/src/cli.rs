//! Command-line dispatch.
//!
//! Exit codes: 0 on success (a negative verdict is a success), 1 for
//! unreadable or malformed input, 2 for semantic errors such as inputs over
//! a size guard.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use subrep_core::oracle::{oracle_subrep_with_limit, ORACLE_LIMIT};
use subrep_core::pinboard::{describe_block, Column, ThetaSegments};
use subrep_core::{
    build_g, classify_finite, find_embedding, normalize_subset, pin_embeds, survey, theta,
    theta_subset, verify_subrep, PatternKind, Pinboard, Poset, PosetError, SimplePinboard,
    SubRepMap, SubsetMask, Verdict, VerdictKind, Witness,
};

use crate::dot::to_dot;
use crate::format::{parse_columns, parse_poset, ParseError};
use crate::json::{name_map, EmbedReport, SurveyReport, VerdictReport};

const FIG1: &str = include_str!("../data/fig1.poset");
const FIG3: &str = include_str!("../data/fig3.poset");

#[derive(Parser, Debug)]
#[command(
    name = "subrep",
    version,
    about = "Decide sub-representability of finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a poset file; prints the verdict as JSON.
    Classify {
        file: PathBuf,
        /// Print a DOT Hasse diagram with the witness highlighted instead.
        #[arg(long)]
        dot: bool,
    },
    /// Whether the first poset embeds into the second, with a witness map.
    Embed { small: PathBuf, big: PathBuf },
    /// Print the map g, or the reason none exists.
    Subrep {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force decision straight from the definition.
    Oracle { file: PathBuf },
    /// Classifier and oracle verdicts for every poset on N elements.
    Survey {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Simple pinboard operations.
    Pinboard {
        #[command(subcommand)]
        command: PinboardCommand,
    },
    /// Reproduce a worked example.
    Demo { which: Demo },
}

#[derive(Subcommand, Debug)]
enum PinboardCommand {
    /// The column assignment of a subset. Arguments are column lists such as
    /// `pin (w2,12) (7,aleph3)`, or `@FILE`.
    Theta { host: String, subset: String },
    /// Whether the first subset embeds into the second.
    Embed {
        host: String,
        first: String,
        second: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Demo {
    Fig1,
    Fig3,
    Section2,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Semantic(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Semantic(m) => m,
        }
    }
}

fn semantic(e: impl ToString) -> Failure {
    Failure::Semantic(e.to_string())
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Poset(p @ PosetError::TooLarge { .. }) => Failure::Semantic(p.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Settings read from the environment by [`run`].
#[derive(Debug, Clone)]
pub struct Settings {
    /// Size guard for the `oracle` command.
    pub max_n: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_n: ORACLE_LIMIT,
        }
    }
}

impl Settings {
    /// Reads `SUBREP_MAX_N`.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var("SUBREP_MAX_N") {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_n| Settings { max_n })
                .map_err(|_| format!("SUBREP_MAX_N must be a number, found `{v}`")),
            Err(_) => Ok(Settings::default()),
        }
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Settings::from_env() {
        Ok(settings) => run_with(argv, &settings, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

pub fn run_with<I, T>(argv: I, settings: &Settings, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, settings) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, settings: &Settings) -> Result<String, Failure> {
    match command {
        Command::Classify { file, dot } => classify_cmd(&load(&file)?, dot),
        Command::Embed { small, big } => embed_cmd(&load(&small)?, &load(&big)?),
        Command::Subrep { file, json } => subrep_cmd(&load(&file)?, json),
        Command::Oracle { file } => oracle_cmd(&load(&file)?, settings.max_n),
        Command::Survey { n, json } => survey_cmd(n, json),
        Command::Pinboard { command } => match command {
            PinboardCommand::Theta { host, subset } => theta_cmd(&host, &subset),
            PinboardCommand::Embed {
                host,
                first,
                second,
            } => pin_embed_cmd(&host, &first, &second),
        },
        Command::Demo { which } => match which {
            Demo::Fig1 => demo_fig1(),
            Demo::Fig3 => demo_fig3(),
            Demo::Section2 => demo_section2(),
        },
    }
}

fn load(path: &Path) -> Result<Poset, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_poset(&text).map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        Failure::Semantic(m) => Failure::Semantic(format!("{}: {m}", path.display())),
    })
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn set(p: &Poset, m: SubsetMask) -> String {
    format!("{{{}}}", p.names_of(m).join(", "))
}

fn describe(p: &Poset, v: &Verdict) -> String {
    let pattern = |kind: PatternKind, e: &subrep_core::Embedding| {
        let map = name_map(&kind.poset(), p, e);
        let pairs: Vec<String> = map.iter().map(|(a, b)| format!("{a}={b}")).collect();
        format!("{kind} at {}", pairs.join(" "))
    };
    match &v.witness {
        Some(Witness::Center(x)) => format!("center {}", p.name(*x)),
        Some(Witness::Chains(cs)) => {
            let sets: Vec<String> = cs.iter().map(|&m| set(p, m)).collect();
            format!("chains {}", sets.join(" "))
        }
        Some(Witness::Pattern { kind, embedding }) => pattern(*kind, embedding),
        Some(Witness::VeeAndWedge { vee, wedge }) => format!(
            "{}; {}",
            pattern(PatternKind::Vee, vee),
            pattern(PatternKind::Wedge, wedge)
        ),
        Some(Witness::Reason(r)) => r.clone(),
        None => String::new(),
    }
}

fn witness_mask(p: &Poset, v: &Verdict) -> Option<SubsetMask> {
    let all = |e: &subrep_core::Embedding| e.image(p.len());
    match &v.witness {
        Some(Witness::Center(x)) => SubsetMask::from_indices([*x], p.len()),
        Some(Witness::Pattern { embedding, .. }) => Some(all(embedding)),
        Some(Witness::VeeAndWedge { vee, wedge }) => Some(all(vee).union(&all(wedge))),
        _ => None,
    }
}

fn classify(p: &Poset) -> Result<Verdict, Failure> {
    classify_finite(p).map_err(semantic)
}

fn classify_cmd(p: &Poset, dot: bool) -> Result<String, Failure> {
    let v = classify(p)?;
    if dot {
        return Ok(to_dot(p, witness_mask(p, &v)));
    }
    Ok(json(&VerdictReport::new(Some(p), &v)))
}

fn embed_cmd(small: &Poset, big: &Poset) -> Result<String, Failure> {
    let e = find_embedding(small, big);
    Ok(json(&EmbedReport {
        embeds: e.is_some(),
        map: e.map(|e| name_map(small, big, &e)),
    }))
}

fn g_table(g: &SubRepMap) -> String {
    let p = g.parent();
    let mut out = String::new();
    for (s, t) in g.table() {
        writeln!(out, "  {} -> {}", set(p, *s), set(p, *t)).unwrap();
    }
    out
}

fn subrep_cmd(p: &Poset, as_json: bool) -> Result<String, Failure> {
    let v = classify(p)?;
    if !v.sub_representable {
        if as_json {
            return Ok(json(&VerdictReport::new(Some(p), &v)));
        }
        return Ok(format!("not sub-representable: {}\n", describe(p, &v)));
    }
    let g = build_g(p).map_err(semantic)?;
    if as_json {
        return Ok(json(&VerdictReport::new(Some(p), &v).with_g(&g)));
    }
    Ok(format!(
        "{} ({})\ng:\n{}",
        v.kind,
        describe(p, &v),
        g_table(&g)
    ))
}

fn oracle_cmd(p: &Poset, max_n: usize) -> Result<String, Failure> {
    match oracle_subrep_with_limit(p, max_n).map_err(semantic)? {
        Some(g) => Ok(format!("oracle: sub-representable\ng:\n{}", g_table(&g))),
        None => Ok("oracle: not sub-representable (no class assignment exists)\n".into()),
    }
}

fn survey_cmd(n: usize, as_json: bool) -> Result<String, Failure> {
    let rows = survey(n).map_err(semantic)?;
    if as_json {
        let reports: Vec<SurveyReport> = rows.iter().map(SurveyReport::new).collect();
        return Ok(json(&reports));
    }
    let mut out = String::new();
    let code_width = rows
        .iter()
        .map(|r| r.code.to_string().len())
        .max()
        .unwrap_or(4)
        .max(4);
    writeln!(
        out,
        "{:<code_width$}  {:<19}  {:<10}  {:<6}  {:<5}  poset",
        "code", "kind", "classifier", "oracle", "agree"
    )
    .unwrap();
    for r in &rows {
        writeln!(
            out,
            "{:<code_width$}  {:<19}  {:<10}  {:<6}  {:<5}  {}",
            r.code.to_string(),
            r.classifier.kind.name(),
            r.classifier.sub_representable,
            r.oracle,
            if r.agrees() { "yes" } else { "NO" },
            r.poset
        )
        .unwrap();
    }
    let positive = rows.iter().filter(|r| r.oracle).count();
    let disagreements = rows.iter().filter(|r| !r.agrees()).count();
    writeln!(
        out,
        "{} classes: {} sub-representable, {} not, {} disagreements",
        rows.len(),
        positive,
        rows.len() - positive,
        disagreements
    )
    .unwrap();
    Ok(out)
}

fn columns_arg(arg: &str) -> Result<Vec<Column>, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
        }
        None => arg.to_string(),
    };
    let text: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    parse_columns(&text).map_err(Failure::from)
}

/// `{(β, n), (m, γ)}` with infinite `β, γ`, or an all-finite truncation.
fn host_arg(arg: &str) -> Result<SimplePinboard, Failure> {
    let pb = Pinboard::new(columns_arg(arg)?).map_err(semantic)?;
    if let Ok(host) = SimplePinboard::from_pinboard(&pb) {
        return Ok(host);
    }
    match pb.pairs() {
        [(b, subrep_core::Cardinal::Fin(n)), (m, subrep_core::Cardinal::Fin(g))] => {
            let (Some(b), Some(m)) = (b.finite_value(), m.finite_value()) else {
                return Err(semantic(
                    "host must be {(β,n),(m,γ)} with β, γ infinite or all finite",
                ));
            };
            SimplePinboard::bounded(b, *n, m, *g).map_err(semantic)
        }
        _ => Err(semantic(
            "host must be {(β,n),(m,γ)} with β, γ infinite or all finite",
        )),
    }
}

fn theta_table(t: &ThetaSegments) -> String {
    let blocks = t.blocks();
    let width = blocks
        .iter()
        .map(|b| b.height.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for b in &blocks {
        writeln!(
            out,
            "  {:<width$}  of {}",
            b.height.to_string(),
            describe_block(b)
        )
        .unwrap();
    }
    writeln!(out, "  {:<width$}  otherwise", "0").unwrap();
    out
}

fn theta_cmd(host_text: &str, subset: &str) -> Result<String, Failure> {
    let host = host_arg(host_text)?;
    let y = normalize_subset(&columns_arg(subset)?, &host).map_err(semantic)?;
    let t = theta(&host, &y).map_err(semantic)?;
    Ok(format!(
        "host: {host}\nsubset: {y}\ntheta:\n{}",
        theta_table(&t)
    ))
}

fn pin_embed_cmd(host_text: &str, first: &str, second: &str) -> Result<String, Failure> {
    let host = host_arg(host_text)?;
    let a = normalize_subset(&columns_arg(first)?, &host).map_err(semantic)?;
    let b = normalize_subset(&columns_arg(second)?, &host).map_err(semantic)?;
    let by_columns = pin_embeds(&a, &b).map_err(semantic)?;
    let ta = theta(&host, &a).map_err(semantic)?;
    let tb = theta(&host, &b).map_err(semantic)?;
    let by_theta = theta_subset(&ta, &tb).map_err(semantic)?;
    Ok(format!(
        "pin_embeds: {by_columns}\ntheta_subset: {by_theta}\n"
    ))
}

fn demo_fig1() -> Result<String, Failure> {
    let p = parse_poset(FIG1)?;
    let v = classify(&p)?;
    let g = build_g(&p).map_err(semantic)?;
    let violations = verify_subrep(&p, &g).map_err(semantic)?;
    let mut out = format!(
        "poset: {p}\nverdict: {} ({})\nrepresentatives:\n",
        v.kind,
        describe(&p, &v)
    );
    for r in g.representatives() {
        writeln!(out, "  {}", set(&p, r)).unwrap();
    }
    write!(out, "g:\n{}violations: {}\n", g_table(&g), violations.len()).unwrap();
    Ok(out)
}

fn demo_fig3() -> Result<String, Failure> {
    let p = parse_poset(FIG3)?;
    let wedge = PatternKind::Wedge.poset();
    let two_chain = Poset::chain(2);
    let mut out = format!("poset: {p}\nsuppose g sub-represents it.\n");
    let mut any_free = false;
    for bits in 1..1u64 << p.len() {
        let w = p.mask(bits).expect("in range");
        if w.count() != 3 || !p.induced(w).is_isomorphic(&wedge) {
            continue;
        }
        // a two-chain embeds in the wedge, so g(two-chain) is a two-chain inside g(wedge)
        let mut chains = Vec::new();
        for sub in 1..1u64 << p.len() {
            let c = p.mask(sub).expect("in range");
            if c.is_subset_of(&w) && c.count() == 2 && p.induced(c).is_isomorphic(&two_chain) {
                let free = (0..p.len())
                    .filter(|&z| !c.contains(z) && c.iter().all(|y| !p.comparable(y, z)))
                    .count();
                any_free |= free > 0;
                chains.push(format!("{} ({} incomparable points)", set(&p, c), free));
            }
        }
        writeln!(
            out,
            "if g(wedge) = {}, g(two-chain) is one of {}",
            set(&p, w),
            chains.join(", ")
        )
        .unwrap();
    }
    if !any_free {
        out.push_str(
            "no choice leaves a point incomparable with the chain, so the two-chain plus a point\n\
             {1, 2, 4} has no representative: a contradiction.\n",
        );
    }
    let v = classify(&p)?;
    let oracle = oracle_subrep_with_limit(&p, ORACLE_LIMIT).map_err(semantic)?;
    writeln!(out, "classifier: {} ({})", v.kind, describe(&p, &v)).unwrap();
    writeln!(
        out,
        "oracle: {}",
        if oracle.is_some() {
            "sub-representable"
        } else {
            "not sub-representable"
        }
    )
    .unwrap();
    debug_assert_eq!(v.kind, VerdictKind::NotSubRepresentable);
    Ok(out)
}

fn demo_section2() -> Result<String, Failure> {
    let host = host_arg("pin (w2,12) (7,aleph3)")?;
    let y = columns_arg(
        "(w1+1,1) (w1,1) (w0+5,1) (w0+5,1) (w0,1) (30,1) (30,1) (20,1) (5,aleph0) (3,aleph0)",
    )?;
    let y2 = columns_arg(
        "(w2,1) (w2,1) (w1+10,1) (w1,1) (w0,1) (60,1) (40,1) (30,1) (20,1) (6,aleph1)",
    )?;
    let y = normalize_subset(&y, &host).map_err(semantic)?;
    let y2 = normalize_subset(&y2, &host).map_err(semantic)?;
    let ty = theta(&host, &y).map_err(semantic)?;
    let ty2 = theta(&host, &y2).map_err(semantic)?;
    let freqs = |t: &ThetaSegments| {
        t.runs()
            .iter()
            .map(|(c, _)| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = format!("host: {host}\n");
    writeln!(
        out,
        "Y frequencies: {{{}}}\ntheta(Y):\n{}",
        freqs(&ty),
        theta_table(&ty)
    )
    .unwrap();
    writeln!(
        out,
        "Y' frequencies: {{{}}}\ntheta(Y'):\n{}",
        freqs(&ty2),
        theta_table(&ty2)
    )
    .unwrap();
    writeln!(
        out,
        "subset: {}",
        theta_subset(&ty, &ty2).map_err(semantic)?
    )
    .unwrap();
    writeln!(
        out,
        "reverse subset: {}",
        theta_subset(&ty2, &ty).map_err(semantic)?
    )
    .unwrap();
    writeln!(
        out,
        "pin_embeds: {}",
        pin_embeds(&y, &y2).map_err(semantic)?
    )
    .unwrap();
    Ok(out)
}
