//! `gsb` — completion, verification, counting, and oracle cross-checks for
//! group presentations, over the engine in `gsb-core`.
//!
//! Exit codes: 0 success, 1 usage/parse/verification failure, 2 completion
//! truncated by a limit, 3 infinite language in `count`. Every command ends
//! its standard output with one machine-readable `key=value` line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use gsb_core::{
    build_avoidance, claimed_basis, count_by_length, cross_check, is_gs_basis, parse_basis_file,
    parse_matrix_json, parse_presentation, presentation_from_matrix, read_basis_file, screen_instances,
    shirshov_complete_with, verify, verify_against_claims, write_basis_file, Alphabet, Basis,
    CompletionStatus, CoxeterOracle, InstanceStatus, Limits, Poly, Presentation, PresetType,
    RoundEvent, Variant,
};

const EXIT_TRUNCATED: u8 = 2;
const EXIT_INFINITE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gsb",
    version,
    about = "Gröbner–Shirshov bases for group and monoid presentations"
)]
struct Cli {
    /// Worker threads (default: $GSB_THREADS, else all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run Shirshov completion and write the canonical basis file
    Complete(CompleteArgs),
    /// Closure-check a tabulated or saved basis; diff tables against the engine
    Verify(VerifyArgs),
    /// Reduce a word to its normal form
    Nf(NfArgs),
    /// Count normal forms per length; total = group order when finite
    Count(CountArgs),
    /// Print the growth series
    Growth(GrowthArgs),
    /// Permutation-group oracle: root count, order, optional cross-check
    Oracle(OracleArgs),
}

/// Exactly one input source per run.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in type: A<n>, B<n>, D<n>, G2, F4, E6, E7, E8
    #[arg(long = "type", value_name = "TYPE")]
    type_name: Option<String>,
    /// Input file: presentation text, diagram JSON, or a saved basis
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct VariantFlags {
    /// Use the tabulated families exactly as printed (default)
    #[arg(long)]
    as_printed: bool,
    /// Use the curated corrected tables
    #[arg(long, conflicts_with = "as_printed")]
    corrected: bool,
}

impl VariantFlags {
    fn variant(self) -> Variant {
        if self.corrected {
            Variant::Corrected
        } else {
            Variant::AsPrinted
        }
    }
}

#[derive(Args, Clone, Copy)]
struct LimitFlags {
    /// Drop emitted elements whose leading degree exceeds this
    #[arg(long, value_name = "D")]
    max_degree: Option<usize>,
    /// Stop after this many saturation rounds
    #[arg(long, value_name = "R")]
    max_rounds: Option<usize>,
    /// Stop once the element count exceeds this
    #[arg(long, value_name = "N")]
    max_elements: Option<usize>,
}

impl LimitFlags {
    fn limits(self) -> Result<Limits, Failure> {
        for (flag, v) in [
            ("--max-degree", self.max_degree),
            ("--max-rounds", self.max_rounds),
            ("--max-elements", self.max_elements),
        ] {
            if v == Some(0) {
                return Err(Failure::usage(format!("{flag} must be positive")));
            }
        }
        let d = Limits::default();
        Ok(Limits {
            max_degree: self.max_degree.or(d.max_degree),
            max_rounds: self.max_rounds.or(d.max_rounds),
            max_elements: self.max_elements.unwrap_or(d.max_elements),
        })
    }
}

#[derive(Args)]
struct CompleteArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Output basis file (default: <type-or-stem>.basis)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Start from the tabulated basis instead of the defining relations
    #[arg(long)]
    from_claims: bool,
    /// Proceed even when tabulated rows fail the group screen
    #[arg(long)]
    force: bool,
    /// Continue from the checkpoint in the output file
    #[arg(long)]
    resume: bool,
    /// Rounds between checkpoints written to the output path
    #[arg(long, value_name = "R", default_value_t = 10)]
    checkpoint_every: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Diff the tables against this completed basis file instead of
    /// completing in-process
    #[arg(long, value_name = "PATH")]
    against: Option<PathBuf>,
    /// Skip the table-vs-engine diff, reporting closure only
    #[arg(long)]
    no_diff: bool,
}

#[derive(Args)]
struct NfArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Word to reduce, e.g. "x2 x1 x2"
    #[arg(value_name = "WORD")]
    word: String,
    /// Use the basis even when its closure is unverified
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Print per-length counts only up to this length
    #[arg(long, value_name = "L")]
    horizon: Option<usize>,
    /// Use the basis even when its closure is unverified
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct GrowthArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Series horizon for infinite languages (default 40)
    #[arg(long, value_name = "L")]
    horizon: Option<usize>,
    /// Use the basis even when its closure is unverified
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Built-in type: A<n>, B<n>, D<n>, G2, F4, E6, E7, E8
    #[arg(long = "type", value_name = "TYPE")]
    type_name: String,
    #[command(flatten)]
    variant: VariantFlags,
    #[command(flatten)]
    limits: LimitFlags,
    /// Cross-check normal forms of this basis file against the oracle
    #[arg(long, value_name = "PATH")]
    against: Option<PathBuf>,
    /// Build the basis in-process and cross-check it
    #[arg(long, conflicts_with = "against")]
    complete: bool,
    /// Sample pairs for the cross-check
    #[arg(long, value_name = "N", default_value_t = 1024)]
    samples: usize,
    /// Seed for all randomized sampling
    #[arg(long, value_name = "S", default_value_t = 1)]
    seed: u64,
}

/// Error carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn truncated(message: impl Into<String>) -> Self {
        Failure { code: EXIT_TRUNCATED, message: message.into() }
    }
}

impl From<gsb_core::Error> for Failure {
    fn from(e: gsb_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    if let Some(n) = cli
        .threads
        .or_else(|| std::env::var("GSB_THREADS").ok().and_then(|s| s.parse().ok()))
    {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        if let Err(e) = pool {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    let outcome = match &cli.command {
        Cmd::Complete(args) => cmd_complete(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Nf(args) => cmd_nf(args),
        Cmd::Count(args) => cmd_count(args),
        Cmd::Growth(args) => cmd_growth(args),
        Cmd::Oracle(args) => cmd_oracle(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_type(s: &str) -> Result<PresetType, Failure> {
    PresetType::from_str(s).map_err(|e| Failure::usage(e.to_string()))
}

enum LoadedInput {
    Pres(Presentation),
    SavedBasis(Basis),
}

/// Reads a presentation text, diagram JSON, or basis file, deciding by
/// content: JSON starts with `{`, basis files with an `alphabet:` header,
/// presentations with `generators:`.
fn load_file(path: &Path) -> Result<LoadedInput, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('{') {
        let (matrix, marking) = parse_matrix_json(&text)?;
        Ok(LoadedInput::Pres(presentation_from_matrix(&matrix, &marking)?))
    } else if first.starts_with("alphabet:") {
        Ok(LoadedInput::SavedBasis(parse_basis_file(&text)?))
    } else {
        Ok(LoadedInput::Pres(parse_presentation(&text)?))
    }
}

/// A basis ready for reduction work, plus where it came from.
struct PipelineBasis {
    basis: Basis,
    provenance: String,
}

/// Resolves a source to a closure-verified basis. Presets with tabulated
/// bases of deep rank (E7, E8) start from the tables — verified directly
/// when they close, completed from them otherwise; every other preset is
/// completed from its defining relations. `force` accepts unverified
/// bases.
fn basis_for(
    source: &Source,
    variant: Variant,
    limits: &Limits,
    force: bool,
) -> Result<PipelineBasis, Failure> {
    if let Some(path) = &source.file {
        return match load_file(path)? {
            LoadedInput::SavedBasis(mut basis) => {
                let provenance;
                if force {
                    provenance = format!("basis file {} (unverified)", path.display());
                } else {
                    let report = verify(&mut basis);
                    if !report.closed {
                        return Err(Failure::usage(format!(
                            "{}: basis fails closure ({} witnesses); rerun with --force to use it anyway",
                            path.display(),
                            report.witnesses.len()
                        )));
                    }
                    provenance = format!("basis file {} (closure verified)", path.display());
                }
                Ok(PipelineBasis { basis, provenance })
            }
            LoadedInput::Pres(pres) => {
                let basis = complete_to_basis(pres.relations, &pres.alphabet, limits, force)?;
                Ok(PipelineBasis {
                    basis,
                    provenance: format!("completed from {}", path.display()),
                })
            }
        };
    }
    let ty = parse_type(source.type_name.as_deref().unwrap_or_default())?;
    match ty {
        PresetType::E7 | PresetType::E8 => {
            if variant == Variant::Corrected {
                let claimed = claimed_basis(ty, variant)?;
                return Ok(PipelineBasis {
                    basis: claimed.basis,
                    provenance: format!("corrected {ty} basis (saturated, closure verified)"),
                });
            }
            let claimed = claimed_basis(ty, variant)?;
            let mut basis = claimed.basis;
            let report = verify(&mut basis);
            if report.closed {
                return Ok(PipelineBasis {
                    basis,
                    provenance: format!("tabulated {ty} basis (closure verified)"),
                });
            }
            Err(Failure::usage(format!(
                "the tabulated {ty} basis fails closure ({} witnesses) and some rows are \
                 false in the group itself; use --corrected, or `verify --type {ty}` for \
                 the witness report",
                report.witnesses.len()
            )))
        }
        _ => {
            if variant == Variant::Corrected {
                claimed_basis(ty, variant)?;
            }
            let pres = gsb_core::builtin_preset(ty)?.presentation()?;
            let basis = complete_to_basis(pres.relations, &pres.alphabet, limits, force)?;
            Ok(PipelineBasis {
                basis,
                provenance: format!("completed from the {ty} defining relations"),
            })
        }
    }
}

fn complete_to_basis(
    initial: Vec<Poly>,
    alphabet: &Alphabet,
    limits: &Limits,
    force: bool,
) -> Result<Basis, Failure> {
    let report = gsb_core::shirshov_complete(initial, alphabet, limits)?;
    match report.status {
        CompletionStatus::Complete => Ok(report.basis),
        CompletionStatus::Truncated { ref reason } if force => {
            eprintln!("warning: completion truncated ({reason}); continuing under --force");
            Ok(report.basis)
        }
        CompletionStatus::Truncated { reason } => Err(Failure::truncated(format!(
            "completion truncated ({reason}); raise the limit or pass --force"
        ))),
    }
}

fn cmd_complete(args: &CompleteArgs) -> CmdResult {
    let t0 = Instant::now();
    let limits = args.limits.limits()?;
    let (mut initial, alphabet, stem) = if let Some(path) = &args.source.file {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".to_owned());
        match load_file(path)? {
            LoadedInput::Pres(p) => (p.relations, p.alphabet, stem),
            LoadedInput::SavedBasis(b) => {
                (b.elements().to_vec(), b.alphabet().clone(), stem)
            }
        }
    } else {
        let ty = parse_type(args.source.type_name.as_deref().unwrap_or_default())?;
        let stem = ty.to_string().to_lowercase();
        let from_claims = args.from_claims || args.variant.variant() == Variant::Corrected;
        if from_claims {
            let claimed = claimed_basis(ty, args.variant.variant())?;
            if args.variant.variant() == Variant::AsPrinted {
                let screen = screen_instances(&claimed)?;
                let bad = screen.iter().filter(|ok| !**ok).count();
                if bad > 0 && !args.force {
                    return Err(Failure::usage(format!(
                        "{bad} tabulated {ty} rows are false in the group itself; \
                         completing from them presents a different quotient — use \
                         --corrected, or --force to proceed anyway"
                    )));
                }
            }
            let alphabet = claimed.basis.alphabet().clone();
            (claimed.basis.elements().to_vec(), alphabet, stem)
        } else {
            if matches!(ty, PresetType::E7 | PresetType::E8) {
                eprintln!(
                    "note: completing {ty} from the defining relations can take hours; \
                     --corrected starts from the screened tabulated rows instead"
                );
            }
            let pres = gsb_core::builtin_preset(ty)?.presentation()?;
            (pres.relations, pres.alphabet, stem)
        }
    };
    let out = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{stem}.basis")));
    if args.resume {
        if !out.exists() {
            return Err(Failure::usage(format!(
                "--resume: no checkpoint at {}",
                out.display()
            )));
        }
        let checkpoint = read_basis_file(&out)?;
        eprintln!(
            "resuming from {} ({} elements)",
            out.display(),
            checkpoint.len()
        );
        initial = checkpoint.elements().to_vec();
    }

    let every = args.checkpoint_every.max(1);
    let ckpt_alphabet = alphabet.clone();
    let ckpt_out = out.clone();
    let mut ckpt_error: Option<String> = None;
    let mut on_round = |ev: &RoundEvent<'_>| {
        eprintln!(
            "round {}: {} elements (+{}), {} candidates, degree ≤ {}",
            ev.round, ev.elements.len(), ev.added_this_round, ev.candidates, ev.max_degree_reached
        );
        if ev.round % every == 0 && ev.added_this_round > 0 && ckpt_error.is_none() {
            let write = Basis::new(ckpt_alphabet.clone(), ev.elements.to_vec())
                .and_then(|b| write_basis_file(&ckpt_out, &b));
            if let Err(e) = write {
                ckpt_error = Some(e.to_string());
            }
        }
    };
    let report = shirshov_complete_with(initial, &alphabet, &limits, Some(&mut on_round))?;
    if let Some(e) = ckpt_error {
        eprintln!("warning: checkpoint write failed: {e}");
    }
    write_basis_file(&out, &report.basis)?;
    let wall = t0.elapsed();
    let (status, reason, code) = match &report.status {
        CompletionStatus::Complete => ("complete", None, 0),
        CompletionStatus::Truncated { reason } => {
            ("truncated", Some(reason.clone()), EXIT_TRUNCATED)
        }
    };
    println!(
        "{} elements in {} rounds, status {}{}, {:.3}s, written to {}",
        report.basis.len(),
        report.rounds,
        status,
        reason.as_deref().map(|r| format!(" ({r})")).unwrap_or_default(),
        wall.as_secs_f64(),
        out.display()
    );
    let mut line = format!(
        "status={status} elements={} rounds={} max_degree={} wall_ms={} out={}",
        report.basis.len(),
        report.rounds,
        report.max_degree_reached,
        wall.as_millis(),
        out.display()
    );
    if let Some(r) = reason {
        line.push_str(&format!(" reason={r}"));
    }
    println!("{line}");
    Ok(code)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let limits = args.limits.limits()?;
    if let Some(path) = &args.source.file {
        let basis = match load_file(path)? {
            LoadedInput::SavedBasis(b) => b,
            LoadedInput::Pres(_) => {
                return Err(Failure::usage(format!(
                    "{}: verify expects a basis file or --type",
                    path.display()
                )))
            }
        };
        let closure = is_gs_basis(&basis);
        print_closure(&closure, basis.alphabet(), None);
        println!(
            "closed={} pairs={} candidates={} witnesses={}",
            closure.closed,
            closure.pairs,
            closure.candidates,
            closure.witnesses.len()
        );
        return Ok(if closure.closed { 0 } else { 1 });
    }

    let ty = parse_type(args.source.type_name.as_deref().unwrap_or_default())?;
    let claimed = claimed_basis(ty, args.variant.variant())?;
    println!(
        "tabulated {ty} basis: {} elements ({} instances, {} duplicate)",
        claimed.basis.len(),
        claimed.instances.len(),
        claimed.duplicates.len()
    );
    let closure = is_gs_basis(&claimed.basis);
    print_closure(&closure, claimed.basis.alphabet(), Some(&claimed.labels));

    let screen = screen_instances(&claimed)?;
    let screen_failures: Vec<String> = claimed
        .instances
        .iter()
        .zip(&screen)
        .filter(|(_, ok)| !**ok)
        .map(|(inst, _)| inst.label())
        .collect();
    if screen_failures.is_empty() {
        println!(
            "group screen: all {} rows hold in the reflection representation",
            screen.len()
        );
    } else {
        println!(
            "group screen: {} of {} rows are false in the group itself:",
            screen_failures.len(),
            screen.len()
        );
        for label in &screen_failures {
            println!("  misprint: {label}");
        }
    }

    let computed: Option<Basis> = if args.no_diff {
        None
    } else if let Some(path) = &args.against {
        let mut b = read_basis_file(path)?;
        let rep = verify(&mut b);
        if !rep.closed {
            return Err(Failure::usage(format!(
                "{}: diff target fails closure ({} witnesses)",
                path.display(),
                rep.witnesses.len()
            )));
        }
        Some(b)
    } else if matches!(ty, PresetType::E7 | PresetType::E8) {
        println!("diff target: corrected {ty} basis (screened rows saturated in-process)");
        Some(gsb_core::corrected_basis(ty)?.basis)
    } else {
        let pres = gsb_core::builtin_preset(ty)?.presentation()?;
        Some(complete_to_basis(pres.relations, &pres.alphabet, &limits, false)?)
    };

    let diff = match computed {
        Some(basis) => {
            let diff = verify_against_claims(&claimed, &basis)?;
            for (label, status) in &diff.per_instance {
                match status {
                    InstanceStatus::ExactMatch => {}
                    InstanceStatus::ReducesToZero => {
                        println!("instance {label}: tail not in normal form, element congruent");
                    }
                    InstanceStatus::NonzeroNormalForm(p) => {
                        println!(
                            "instance {label}: IRREDUCIBLE remainder {}",
                            p.format(basis.alphabet())
                        );
                    }
                }
            }
            for lead in &diff.computed_only {
                println!(
                    "computed element absent from the tables: lead {}",
                    basis.alphabet().format_word(lead)
                );
            }
            println!(
                "diff: {} exact, {} congruent, {} irreducible, {} missing from tables",
                diff.exact_matches,
                diff.reduces_to_zero,
                diff.nonzero,
                diff.computed_only.len()
            );
            Some(diff)
        }
        None => None,
    };

    let diff_key = match &diff {
        None => "skipped".to_owned(),
        Some(d) if d.nonzero == 0 => "ok".to_owned(),
        Some(_) => "failed".to_owned(),
    };
    let ok = closure.closed && diff.as_ref().map_or(true, |d| d.nonzero == 0);
    let (exact, zero, nonzero, missing) = diff
        .as_ref()
        .map(|d| (d.exact_matches, d.reduces_to_zero, d.nonzero, d.computed_only.len()))
        .unwrap_or((0, 0, 0, 0));
    println!(
        "closed={} witnesses={} screen_failures={} diff={} exact={} congruent={} irreducible={} missing={}",
        closure.closed,
        closure.witnesses.len(),
        screen_failures.len(),
        diff_key,
        exact,
        zero,
        nonzero,
        missing
    );
    Ok(if ok { 0 } else { 1 })
}

fn print_closure(
    closure: &gsb_core::ClosureReport,
    alphabet: &Alphabet,
    labels: Option<&[String]>,
) {
    let name = |i: usize| -> String {
        match labels {
            Some(ls) => ls[i].clone(),
            None => format!("#{i}"),
        }
    };
    if closure.closed {
        println!(
            "closure: all {} compositions over {} ordered pairs reduce to zero",
            closure.candidates, closure.pairs
        );
    } else {
        println!(
            "closure FAILS: {} of {} compositions survive reduction",
            closure.witnesses.len(),
            closure.candidates
        );
        for w in &closure.witnesses {
            println!(
                "witness: ({}, {}) at {} leaves {}",
                name(w.left),
                name(w.right),
                alphabet.format_word(&w.overlap),
                w.normal_form.format(alphabet)
            );
        }
    }
}

fn cmd_nf(args: &NfArgs) -> CmdResult {
    let limits = args.limits.limits()?;
    let pb = basis_for(&args.source, args.variant.variant(), &limits, args.force)?;
    let alphabet = pb.basis.alphabet();
    let word = alphabet.parse_word(&args.word)?;
    let nf = pb.basis.nf_word(&word)?;
    eprintln!("basis: {} elements — {}", pb.basis.len(), pb.provenance);
    println!("{}", alphabet.format_word(&nf));
    println!(
        "length={} input_length={} nf=\"{}\"",
        nf.len(),
        word.len(),
        alphabet.format_word(&nf)
    );
    Ok(0)
}

fn cmd_count(args: &CountArgs) -> CmdResult {
    let limits = args.limits.limits()?;
    let pb = basis_for(&args.source, args.variant.variant(), &limits, args.force)?;
    eprintln!("basis: {} elements — {}", pb.basis.len(), pb.provenance);
    let aut = build_avoidance(&pb.basis.leading_words(), pb.basis.alphabet())?;
    let series = count_by_length(&aut, args.horizon);
    if !series.finite {
        for (l, c) in series.counts.iter().enumerate() {
            println!("{l} {c}");
        }
        println!("infinite");
        println!("finite=false horizon={}", series.counts.len().saturating_sub(1));
        return Ok(EXIT_INFINITE);
    }
    let total = series.total.clone().expect("finite series has a total");
    let max_length = series.max_length().expect("finite series peaks");
    println!("total {total}");
    println!("max length {max_length}");
    let mut oracle_part = "oracle=skipped".to_owned();
    let mut code = 0u8;
    if let Some(name) = &args.source.type_name {
        let ty = parse_type(name)?;
        let oracle = CoxeterOracle::for_preset(ty)?;
        let order = oracle.order();
        let matches = order == total;
        println!("oracle order {order} — {}", if matches { "match" } else { "MISMATCH" });
        oracle_part = format!("oracle_order={order} oracle_match={matches}");
        if !matches {
            code = 1;
        }
    }
    println!("total={total} max_length={max_length} {oracle_part}");
    Ok(code)
}

fn cmd_growth(args: &GrowthArgs) -> CmdResult {
    let limits = args.limits.limits()?;
    let pb = basis_for(&args.source, args.variant.variant(), &limits, args.force)?;
    eprintln!("basis: {} elements — {}", pb.basis.len(), pb.provenance);
    let aut = build_avoidance(&pb.basis.leading_words(), pb.basis.alphabet())?;
    let series = count_by_length(&aut, args.horizon);
    for (l, c) in series.counts.iter().enumerate() {
        println!("{l} {c}");
    }
    if series.finite {
        let total = series.total.clone().expect("finite series has a total");
        println!("total {total}");
        println!("finite=true lengths={} total={total}", series.counts.len());
    } else {
        let horizon = series.counts.len().saturating_sub(1);
        println!("infinite (horizon {horizon})");
        println!("finite=false lengths={} horizon={horizon}", series.counts.len());
    }
    Ok(0)
}

fn cmd_oracle(args: &OracleArgs) -> CmdResult {
    let t0 = Instant::now();
    let limits = args.limits.limits()?;
    let ty = parse_type(&args.type_name)?;
    let oracle = CoxeterOracle::for_preset(ty)?;
    println!("roots: {}", oracle.n_roots());
    println!("order: {}", oracle.order());

    let checked: Option<(bool, usize, Option<usize>)> = if let Some(path) = &args.against {
        let mut basis = read_basis_file(path)?;
        let rep = verify(&mut basis);
        if !rep.closed {
            return Err(Failure::usage(format!(
                "{}: basis fails closure ({} witnesses); cross-check needs a verified basis",
                path.display(),
                rep.witnesses.len()
            )));
        }
        Some(run_cross_check(ty, &basis, args.samples, args.seed)?)
    } else if args.complete {
        let source = Source { type_name: Some(args.type_name.clone()), file: None };
        let pb = basis_for(&source, args.variant.variant(), &limits, false)?;
        eprintln!("basis: {} elements — {}", pb.basis.len(), pb.provenance);
        Some(run_cross_check(ty, &pb.basis, args.samples, args.seed)?)
    } else {
        None
    };

    let verdict = match checked {
        None => "skipped",
        Some((true, _, _)) => "ok",
        Some((false, _, _)) => "failed",
    };
    let samples = checked.map(|(_, s, _)| s).unwrap_or(0);
    println!("cross-check: {verdict}");
    println!(
        "roots={} order={} crosscheck={verdict} samples={samples} wall_ms={}",
        oracle.n_roots(),
        oracle.order(),
        t0.elapsed().as_millis()
    );
    Ok(match checked {
        Some((false, _, _)) => 1,
        _ => 0,
    })
}

fn run_cross_check(
    ty: PresetType,
    basis: &Basis,
    samples: usize,
    seed: u64,
) -> Result<(bool, usize, Option<usize>), Failure> {
    let report = cross_check(ty, basis, samples, seed)?;
    for m in &report.mismatches {
        println!(
            "mismatch: \"{}\" vs \"{}\" — oracle {}, normal forms {}",
            basis.alphabet().format_word(&m.left),
            basis.alphabet().format_word(&m.right),
            if m.perms_equal { "equal" } else { "distinct" },
            if m.nfs_equal { "equal" } else { "distinct" },
        );
    }
    for (w, d) in &report.length_violations {
        println!(
            "length violation: \"{}\" at graph distance {d}",
            basis.alphabet().format_word(w)
        );
    }
    if let Some(l) = report.lengths_checked {
        println!("exhaustive length check through distance {l}: ok");
    }
    Ok((report.ok(), report.samples, report.lengths_checked))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_names_parse() {
        assert_eq!(parse_type("G2").unwrap(), PresetType::G2);
        assert_eq!(parse_type("a3").unwrap(), PresetType::A(3));
        assert_eq!(parse_type("E8").unwrap(), PresetType::E8);
        assert!(parse_type("H4").is_err());
        assert!(parse_type("").is_err());
    }

    #[test]
    fn limit_flags_reject_zero() {
        let flags = LimitFlags { max_degree: Some(0), max_rounds: None, max_elements: None };
        assert!(flags.limits().is_err());
        let flags = LimitFlags { max_degree: None, max_rounds: None, max_elements: None };
        let limits = flags.limits().unwrap();
        assert_eq!(limits.max_degree, Limits::default().max_degree);
    }

    #[test]
    fn variant_flags_default_to_printed() {
        let v = VariantFlags { as_printed: false, corrected: false };
        assert_eq!(v.variant(), Variant::AsPrinted);
        let v = VariantFlags { as_printed: false, corrected: true };
        assert_eq!(v.variant(), Variant::Corrected);
    }

    #[test]
    fn cli_asserts_its_own_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
