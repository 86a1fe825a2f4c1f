use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use skolem_windmills::families::{coverage_audit, label_c3c4, label_c3c5, label_c3c6, label_spec};
use skolem_windmills::oracle::{search_labelling, search_sequence, SearchMode, SearchOutcome};
use skolem_windmills::sequences::{self as seqs, SequenceKind, SkolemTypeSequence};
use skolem_windmills::windmill::{verify, verify_permissive, Labelling, Mode, WindmillSpec};
use skolem_windmills::Error;

#[derive(Parser)]
#[command(name = "windmill", version, about = "Skolem-type sequences and (near) graceful windmill labellings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate or validate sequences.
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Label a windmill, e.g. --graph "c3=4,c4=3".
    Label {
        #[arg(long)]
        graph: String,
        #[arg(long, conflicts_with_all = ["dot", "text"])]
        json: bool,
        #[arg(long, conflicts_with = "text")]
        dot: bool,
        #[arg(long)]
        text: bool,
        /// Print how the labelling was built.
        #[arg(long)]
        trace: bool,
    },
    /// Verify a labelling stored as JSON.
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Also accept near-graceful labellings with edge set [1,m].
        #[arg(long)]
        permissive: bool,
    },
    /// Exhaustive search for a labelling or for sequences.
    Oracle(OracleArgs),
    /// Which rule covers each C3^tC4^s cell.
    Audit {
        #[arg(long)]
        t_max: u32,
        #[arg(long)]
        s_max: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Label and verify every cell of a parameter grid.
    Sweep {
        /// c3c4 (t,s), c3c5 (t,p) or c3c6 (t,h); the second range is the
        /// count of the larger cycle.
        #[arg(long, default_value = "c3c4")]
        family: String,
        #[arg(long, default_value = "1..60")]
        t: String,
        #[arg(long, default_value = "0..60")]
        s: String,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Generate a sequence.
    Gen {
        /// skolem, hooked-skolem, langford, langford2d, near-top,
        /// twofold-skolem, power4, twofold-langford or small-c.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        defect: Option<u32>,
        #[arg(long)]
        trimmed: bool,
    },
    /// Validate a comma-separated sequence.
    Validate {
        #[arg(long, conflicts_with = "file")]
        stdin: bool,
        #[arg(long)]
        file: Option<PathBuf>,
        /// skolem, hooked-skolem, near-skolem, hooked-near-skolem, langford,
        /// hooked-langford, two-fold-skolem or two-fold-langford.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        defect: Option<u32>,
    },
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, conflicts_with = "seq_kind", requires = "mode")]
    graph: Option<String>,
    /// graceful, near-graceful or permissive.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    max_label: Option<u32>,
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    #[arg(long, requires = "order")]
    seq_kind: Option<String>,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    defect: Option<u32>,
    /// List every sequence instead of the first.
    #[arg(long)]
    all: bool,
}

/// Failure classes, each with its own exit code.
enum Failure {
    Unverified(anyhow::Error),
    Unsupported(anyhow::Error),
    Malformed(anyhow::Error),
    Budget(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Unverified(_) => 1,
            Self::Unsupported(_) => 2,
            Self::Malformed(_) => 3,
            Self::Budget(_) => 4,
        }
    }

    fn error(&self) -> &anyhow::Error {
        match self {
            Self::Unverified(e) | Self::Unsupported(e) | Self::Malformed(e) | Self::Budget(e) => e,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use Error::*;
        match e {
            Parse(_) | MalformedLabelling(_) | UnknownKind(_) => Self::Malformed(e.into()),
            Unlabellable(_) | PreconditionFailed(_) => Self::Unverified(e.into()),
            _ => Self::Unsupported(e.into()),
        }
    }
}

fn malformed(e: anyhow::Error) -> Failure {
    Failure::Malformed(e)
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Seq(SeqCmd::Gen { kind, order, defect, trimmed }) => {
            println!("{}", generate(&kind, order, defect, trimmed)?);
            Ok(())
        }
        Cmd::Seq(SeqCmd::Validate { stdin, file, kind, order, defect }) => {
            let text = read_input(stdin, file.as_ref()).map_err(malformed)?;
            let seq: SkolemTypeSequence = text.trim().parse()?;
            let kind = parse_kind(&kind, defect).map_err(malformed)?;
            let order = order.unwrap_or_else(|| infer_order(&seq, &kind));
            let report = seqs::validate(&seq, &kind, order);
            if report.ok {
                println!("valid {kind} sequence of order {order}");
                Ok(())
            } else {
                for v in &report.violations {
                    println!("{v:?}");
                }
                Err(Failure::Unverified(anyhow!("not a valid {kind} sequence of order {order}")))
            }
        }
        Cmd::Label { graph, json: _, dot, text, trace } => {
            let spec = parse_graph(&graph).map_err(malformed)?;
            let (l, tr) = label_spec(&spec)?;
            let r = verify(&l);
            if dot {
                print!("{}", l.to_dot());
            } else if text {
                print!("{}", l.to_text());
            } else {
                println!("{}", l.to_json());
            }
            if trace {
                eprintln!("trace: {tr}");
            }
            if r.ok {
                Ok(())
            } else {
                Err(Failure::Unverified(anyhow!("labelling failed verification: {r:?}")))
            }
        }
        Cmd::Verify { file, permissive } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))
                .map_err(malformed)?;
            let l = Labelling::from_json(&text)?;
            let r = if permissive { verify_permissive(&l) } else { verify(&l) };
            println!("{}", serde_json::to_string(&r).expect("report serialises"));
            if r.ok {
                println!("ok: {} {} (m={})", l.spec(), r.mode_checked, r.m);
                Ok(())
            } else {
                Err(Failure::Unverified(anyhow!("labelling of {} is not {}", l.spec(), l.mode())))
            }
        }
        Cmd::Oracle(a) => oracle(a),
        Cmd::Audit { t_max, s_max, csv } => {
            let cells = coverage_audit(t_max, s_max);
            if csv {
                println!("t,s,rule");
            }
            let mut gaps = 0;
            for c in &cells {
                let rule = c.rule.map_or("GAP", |r| r.id());
                gaps += usize::from(c.rule.is_none());
                if csv {
                    println!("{},{},{}", c.t, c.s, rule);
                } else if c.rule.is_none() {
                    println!("gap: t={} s={}", c.t, c.s);
                }
            }
            if !csv {
                println!("{} cells, {} gaps", cells.len(), gaps);
            }
            Ok(())
        }
        Cmd::Sweep { family, t, s, csv } => sweep(&family, &t, &s, csv),
    }
}

fn read_input(stdin: bool, file: Option<&PathBuf>) -> anyhow::Result<String> {
    match (stdin, file) {
        (_, Some(f)) => std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display())),
        (true, None) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        (false, None) => bail!("give --stdin or --file"),
    }
}

fn generate(kind: &str, n: u32, defect: Option<u32>, trimmed: bool) -> std::result::Result<SkolemTypeSequence, Failure> {
    Ok(match kind {
        "skolem" => seqs::gen_skolem(n)?,
        "hooked-skolem" => seqs::gen_hooked_skolem(n)?,
        "langford" => {
            let d = defect.ok_or_else(|| malformed(anyhow!("langford needs --defect")))?;
            seqs::gen_langford(d, n)?
        }
        "langford2d" => seqs::gen_langford_doubledefect(defect.unwrap_or(n))?,
        "near-top" => seqs::gen_near_skolem_topdefect(n)?,
        "twofold-skolem" => seqs::gen_twofold_skolem(n)?,
        "power4" => seqs::gen_power4(n, trimmed)?,
        "twofold-langford" => seqs::gen_twofold_langford(n)?,
        "small-c" => seqs::fixed_small_twofold(n)?,
        other => return Err(malformed(anyhow!("unknown sequence kind {other:?}"))),
    })
}

fn parse_kind(name: &str, defect: Option<u32>) -> anyhow::Result<SequenceKind> {
    let need = || defect.ok_or_else(|| anyhow!("kind {name} needs --defect"));
    Ok(match name {
        "skolem" => SequenceKind::Skolem,
        "hooked-skolem" => SequenceKind::HookedSkolem,
        "near-skolem" => SequenceKind::NearSkolem { defect: need()? },
        "hooked-near-skolem" => SequenceKind::HookedNearSkolem { defect: need()? },
        "langford" => SequenceKind::Langford { defect: need()? },
        "hooked-langford" => SequenceKind::HookedLangford { defect: need()? },
        "two-fold-skolem" | "twofold-skolem" => SequenceKind::TwoFoldSkolem,
        "two-fold-langford" | "twofold-langford" => SequenceKind::TwoFoldLangford { defect: need()? },
        other => bail!("unknown sequence kind {other:?}"),
    })
}

/// Order implied by the entries when none is given.
fn infer_order(seq: &SkolemTypeSequence, kind: &SequenceKind) -> u32 {
    let distinct = seq.symbol_set().len() as u32;
    match kind {
        SequenceKind::NearSkolem { .. } | SequenceKind::HookedNearSkolem { .. } => distinct + 1,
        _ => distinct,
    }
}

/// Parses `c3=4,c4=3`; cycle lengths are limited to 3, 4, 5 and 6.
fn parse_graph(text: &str) -> anyhow::Result<WindmillSpec> {
    let mut classes = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| anyhow!("expected c<len>=<count>, got {part:?}"))?;
        let len: u32 = k
            .trim()
            .strip_prefix('c')
            .ok_or_else(|| anyhow!("expected c<len>, got {k:?}"))?
            .parse()
            .with_context(|| format!("bad cycle length in {part:?}"))?;
        if !(3..=6).contains(&len) {
            bail!("cycle length {len} is not one of 3, 4, 5, 6");
        }
        if classes.iter().any(|&(l, _)| l == len) {
            bail!("cycle length {len} given twice");
        }
        let count: u32 = v.trim().parse().with_context(|| format!("bad count in {part:?}"))?;
        classes.push((len, count));
    }
    Ok(WindmillSpec::new(classes)?)
}

fn oracle(a: OracleArgs) -> Outcome {
    if let Some(graph) = a.graph {
        let spec = parse_graph(&graph).map_err(malformed)?;
        let mode = match a.mode.as_deref() {
            Some("permissive") => SearchMode::NearGracefulPermissive,
            Some(m) => m.parse::<Mode>()?.into(),
            None => return Err(malformed(anyhow!("--graph needs --mode"))),
        };
        return match search_labelling(&spec, mode, a.max_label, a.budget)? {
            SearchOutcome::Found(l) => {
                println!("found");
                println!("{}", l.to_json());
                Ok(())
            }
            SearchOutcome::None => {
                println!("none (exhaustive)");
                Ok(())
            }
            SearchOutcome::BudgetExhausted => {
                println!("budget exhausted");
                Err(Failure::Budget(anyhow!("search budget of {} nodes exhausted", a.budget)))
            }
        };
    }
    let (Some(kind), Some(order)) = (a.seq_kind, a.order) else {
        return Err(malformed(anyhow!("give --graph and --mode, or --seq-kind and --order")));
    };
    let kind = parse_kind(&kind, a.defect).map_err(malformed)?;
    let found = search_sequence(&kind, order, a.all)?;
    if found.is_empty() {
        println!("none (exhaustive)");
    } else {
        if a.all {
            println!("{} sequences", found.len());
        }
        for s in &found {
            println!("{s}");
        }
    }
    Ok(())
}

fn parse_range(text: &str) -> anyhow::Result<(u32, u32)> {
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.trim_start_matches('=');
            Ok((a.trim().parse()?, b.trim().parse()?))
        }
        None => {
            let v = text.trim().parse()?;
            Ok((v, v))
        }
    }
}

struct Row {
    a: u32,
    b: u32,
    m: u32,
    mode: String,
    rule: String,
    verified: bool,
}

fn sweep(family: &str, t: &str, s: &str, csv: bool) -> Outcome {
    let (t0, t1) = parse_range(t).map_err(malformed)?;
    let (s0, s1) = parse_range(s).map_err(malformed)?;
    let cell = |a: u32, b: u32| -> std::result::Result<(Labelling, String), Error> {
        match family {
            "c3c4" => label_c3c4(a, b).map(|(l, tr)| (l, tr.rule.id().to_string())),
            "c3c5" => label_c3c5(a, b).map(|l| (l, "triangles-pentagons".into())),
            "c3c6" => label_c3c6(a, b).map(|l| (l, "hexagon-merge".into())),
            other => Err(Error::UnsupportedCombination(format!("unknown family {other}"))),
        }
    };
    if !matches!(family, "c3c4" | "c3c5" | "c3c6") {
        return Err(Failure::Unsupported(anyhow!("unknown family {family}")));
    }
    let cells: Vec<(u32, u32)> = (t0..=t1).flat_map(|a| (s0..=s1).map(move |b| (a, b))).collect();
    let rows: Vec<Row> = cells
        .par_iter()
        .map(|&(a, b)| match cell(a, b) {
            Ok((l, rule)) => {
                let r = verify(&l);
                Row { a, b, m: l.edge_count(), mode: l.mode().to_string(), rule, verified: r.ok }
            }
            Err(e) => Row { a, b, m: 0, mode: "-".into(), rule: format!("error: {e}"), verified: false },
        })
        .collect();
    let unsupported = |r: &Row| r.rule.starts_with("error: ") && !r.rule.contains("does not verify");
    let failed = rows.iter().filter(|r| !r.verified && !unsupported(r)).count();
    if csv {
        println!("t,s,m,mode,rule,verified");
    }
    for r in &rows {
        if csv {
            println!("{},{},{},{},{},{}", r.a, r.b, r.m, r.mode, r.rule.replace(',', ";"), r.verified);
        } else if !r.verified {
            println!("t={} s={}: {}", r.a, r.b, r.rule);
        }
    }
    let ok = rows.iter().filter(|r| r.verified).count();
    eprintln!("{ok}/{} cells verified", rows.len());
    if failed > 0 {
        Err(Failure::Unverified(anyhow!("{failed} cells failed")))
    } else {
        Ok(())
    }
}
