//! The `mmgr` command line.
//!
//! Data goes to standard output or the named output files; logs and
//! diagnostics go to standard error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::baseline::{BaselineError, BaselineModel};
use crate::corpus::{
    content_lines, parse_chunked_line, parse_corpus_line, parse_corpus_line_with_warnings,
    read_text, AnnotatedSentence, Corpus, CorpusError,
};
use crate::eval::{
    classify, confusion, parse_threshold, score_report, EvalError, SentenceType, Thresholds,
};
use crate::grammar::{
    fold_phrases, parse, parse_tag_sequence, parse_tree_text, relations_line, render_tree,
    select_canonical, sentence_phrases, Grammar, ParseNode, Phrase,
};
use crate::tagset::FunctionTag;
use crate::tbl::{self, learn, parse_rules, TaggingState, TblError, TriggerKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error(transparent)]
    Tbl(#[from] TblError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

/// Learning and scoring settings. Nothing in the pipeline is random.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub min_gain: u32,
    pub templates: Vec<TriggerKind>,
    pub thresholds: Thresholds,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            min_gain: 1,
            templates: TriggerKind::ALL.to_vec(),
            thresholds: Thresholds::default(),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.min_gain == 0 {
            return Err(CliError::Usage("--min-gain must be positive".into()));
        }
        if self.templates.is_empty() {
            return Err(CliError::Usage(
                "--templates must name at least one template".into(),
            ));
        }
        Ok(())
    }
}

pub fn parse_templates(list: &str) -> Result<Vec<TriggerKind>, CliError> {
    let mut kinds: Vec<TriggerKind> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(CliError::Usage))
        .collect::<Result<_, _>>()?;
    kinds.sort();
    kinds.dedup();
    Ok(kinds)
}

#[derive(Debug, Parser)]
#[command(
    name = "mmgr",
    version,
    about = "Function tagging and grammatical relations for chunked Myanmar sentences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every line of a corpus file parses.
    Validate { corpus: PathBuf },
    /// Train the baseline tagger and learn transformation rules.
    Train {
        corpus: PathBuf,
        model_out: PathBuf,
        rules_out: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_gain: u32,
        /// Comma-separated template kinds (default: all six).
        #[arg(long)]
        templates: Option<String>,
    },
    /// Tag chunked sentences with a trained model and rule list.
    Tag {
        model: PathBuf,
        rules: PathBuf,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Log baseline and corrected tags for sentences the rules change.
        #[arg(long)]
        verbose: bool,
    },
    /// Parse tagged sentences into trees and grammatical relations.
    Parse {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print every tree of the forest, canonical first.
        #[arg(long)]
        forest: bool,
        /// Exit 0 even when some sentences fail to parse.
        #[arg(long)]
        keep_going: bool,
        /// Input lines use the `TAG[surface]# TAG[surface]` notation.
        #[arg(long)]
        sequences: bool,
    },
    /// Score system output against gold sentences.
    Eval(EvalArgs),
    /// Tally gold/system tag disagreements.
    Confusion { system: PathBuf, gold: PathBuf },
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub system: PathBuf,
    pub gold: PathBuf,
    /// One sentence type per line (Simple, Complex_NounDC, Complex_AdjDC,
    /// Complex_AdvDC, ComplicatedComplex).
    pub types: Option<PathBuf>,
    /// Derive sentence types from the gold trees instead of a types file.
    #[arg(long)]
    pub infer_types: bool,
    /// Gold trees, one bracketed tree per sentence.
    #[arg(long)]
    pub gold_trees: Option<PathBuf>,
    /// System trees, one bracketed tree (or `none`) per sentence.
    #[arg(long)]
    pub system_trees: Option<PathBuf>,
    #[arg(long, default_value = "3/4")]
    pub c2_tag_threshold: String,
    #[arg(long, default_value = "1/2")]
    pub c2_f1_low: String,
    /// Also write the confusion TSV to this file.
    #[arg(long)]
    pub confusion_out: Option<PathBuf>,
    /// Append the per-score distribution table.
    #[arg(long)]
    pub distribution: bool,
}

/// Runs a command, returning the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Validate { corpus } => cmd_validate(&corpus, err),
        Command::Train {
            corpus,
            model_out,
            rules_out,
            min_gain,
            templates,
        } => (|| {
            let config = Config {
                min_gain,
                templates: match templates {
                    Some(list) => parse_templates(&list)?,
                    None => TriggerKind::ALL.to_vec(),
                },
                ..Config::default()
            };
            cmd_train(&corpus, &model_out, &rules_out, &config, err)
        })(),
        Command::Tag {
            model,
            rules,
            input,
            output,
            verbose,
        } => cmd_tag(&model, &rules, &input, output.as_deref(), verbose, out, err),
        Command::Parse {
            input,
            output,
            forest,
            keep_going,
            sequences,
        } => cmd_parse(
            &input,
            output.as_deref(),
            forest,
            keep_going,
            sequences,
            out,
            err,
        ),
        Command::Eval(args) => cmd_eval(&args, out),
        Command::Confusion { system, gold } => cmd_confusion(&system, &gold, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Convenience for tests and embedding: parse `args` and run.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn log(err: &mut dyn Write, message: impl std::fmt::Display) {
    let _ = writeln!(err, "{message}");
}

pub fn cmd_validate(path: &Path, err: &mut dyn Write) -> Result<u8, CliError> {
    let text = read_text(path)?;
    let mut sentences = 0;
    let mut failed = false;
    for (line, content) in content_lines(&text) {
        match parse_corpus_line_with_warnings(content) {
            Ok((_, warnings)) => {
                sentences += 1;
                for w in warnings {
                    log(err, format_args!("line {line}: warning: {w}"));
                }
            }
            Err(e) => {
                failed = true;
                log(err, format_args!("line {line}: {e}"));
            }
        }
    }
    if !failed && sentences == 0 {
        log(err, "empty corpus");
        return Ok(1);
    }
    Ok(u8::from(failed))
}

fn baseline_tags(
    model: &BaselineModel,
    sentence: &AnnotatedSentence,
) -> Result<Vec<FunctionTag>, BaselineError> {
    Ok(model.tag_sentence(&sentence.untagged())?.tags())
}

pub fn cmd_train(
    corpus_path: &Path,
    model_out: &Path,
    rules_out: &Path,
    config: &Config,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    config.validate()?;
    let corpus = crate::corpus::load_corpus(corpus_path)?;
    let model = BaselineModel::train(&corpus)?;
    let initial: Vec<Vec<FunctionTag>> = corpus
        .iter()
        .map(|s| baseline_tags(&model, s))
        .collect::<Result<_, _>>()?;
    let by_sentence: std::collections::HashMap<*const AnnotatedSentence, usize> = corpus
        .iter()
        .enumerate()
        .map(|(i, s)| (s as *const _, i))
        .collect();
    let outcome = learn(
        &corpus,
        |s| initial[by_sentence[&(s as *const _)]].clone(),
        &config.templates,
        config.min_gain,
    )?;
    let chunks: usize = corpus.iter().map(AnnotatedSentence::len).sum();
    log(
        err,
        format_args!(
            "baseline: {} errors over {chunks} chunks in {} sentences",
            outcome.initial_errors,
            corpus.len()
        ),
    );
    for (i, learned) in outcome.rules.iter().enumerate() {
        log(
            err,
            format_args!(
                "rule {}: {}\tgain {}\terrors {}",
                i + 1,
                learned.rule,
                learned.gain,
                learned.errors_after
            ),
        );
    }
    write_file(model_out, &model.to_model_text())?;
    write_file(rules_out, &tbl::serialize_rules(&outcome.rule_list()))?;
    Ok(0)
}

fn tags_line(tags: &[FunctionTag]) -> String {
    tags.iter()
        .map(|t| t.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_tag(
    model_path: &Path,
    rules_path: &Path,
    input: &Path,
    output: Option<&Path>,
    verbose: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let model = BaselineModel::from_model_text(&read_text(model_path)?)?;
    let rules = parse_rules(&read_text(rules_path)?)?;
    let text = read_text(input)?;
    let mut result = String::new();
    for (line, content) in content_lines(&text) {
        let at_line = |e: &dyn std::fmt::Display| CliError::Input(format!("line {line}: {e}"));
        let chunked = parse_chunked_line(content).map_err(|e| at_line(&e))?;
        let baseline = model.tag_sentence(&chunked)?;
        let state = tbl::apply_rules(&rules, &TaggingState::from_sentence(&baseline));
        let tagged = chunked.with_tags(state.tags()).map_err(|e| at_line(&e))?;
        if verbose && tagged != baseline {
            log(
                err,
                format_args!("line {line}: baseline {}", tags_line(&baseline.tags())),
            );
            log(
                err,
                format_args!("line {line}: rules    {}", tags_line(&tagged.tags())),
            );
        }
        writeln!(result, "% {}", tagged.word_tag_display()).unwrap();
        writeln!(result, "{tagged}").unwrap();
    }
    emit(output, &result, out)?;
    Ok(0)
}

/// Folds and parses one sentence, returning the forest or a reason.
pub fn sentence_forest(
    phrases: Result<Vec<Phrase>, String>,
    grammar: &Grammar,
) -> Result<Vec<ParseNode>, String> {
    let phrases = phrases?;
    let forest = parse(&phrases, grammar);
    if forest.is_empty() {
        return Err("no derivation".into());
    }
    Ok(forest.into_trees())
}

/// Canonical tree of a tagged sentence, if it folds and parses.
pub fn canonical_tree(sentence: &AnnotatedSentence, grammar: &Grammar) -> Option<ParseNode> {
    let phrases = sentence_phrases(sentence).ok()?;
    select_canonical(&parse(&phrases, grammar)).ok().cloned()
}

pub fn cmd_parse(
    input: &Path,
    output: Option<&Path>,
    forest: bool,
    keep_going: bool,
    sequences: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let grammar = Grammar::default_grammar();
    let text = read_text(input)?;
    let mut result = String::new();
    let mut failures = 0;
    for (line, content) in content_lines(&text) {
        let phrases = if sequences {
            parse_tag_sequence(content)
                .map_err(|e| e.to_string())
                .and_then(|seq| {
                    let seq: Vec<_> = seq
                        .into_iter()
                        .filter(|(t, _)| *t != FunctionTag::Null)
                        .collect();
                    fold_phrases(&seq).map_err(|e| e.to_string())
                })
        } else {
            parse_corpus_line(content)
                .map_err(|e| e.to_string())
                .and_then(|s| sentence_phrases(&s).map_err(|e| e.to_string()))
        };
        match sentence_forest(phrases, &grammar) {
            Ok(trees) => {
                let shown = if forest { &trees[..] } else { &trees[..1] };
                for t in shown {
                    writeln!(result, "{}", render_tree(t)).unwrap();
                }
                writeln!(result, "{}", relations_line(&trees[0])).unwrap();
            }
            Err(reason) => {
                failures += 1;
                log(err, format_args!("line {line}: {reason}"));
                writeln!(result, "no parse: {reason}").unwrap();
            }
        }
        result.push('\n');
    }
    emit(output, &result, out)?;
    Ok(u8::from(failures > 0 && !keep_going))
}

fn load_aligned(system: &Path, gold: &Path) -> Result<(Corpus, Corpus), CliError> {
    let system = crate::corpus::load_corpus(system)?;
    let gold = crate::corpus::load_corpus(gold)?;
    if system.len() != gold.len() {
        return Err(CliError::Input(format!(
            "system has {} sentences but gold has {}",
            system.len(),
            gold.len()
        )));
    }
    for (i, (s, g)) in system.iter().zip(gold.iter()).enumerate() {
        if s.len() != g.len() {
            return Err(CliError::Input(format!(
                "sentence {} (system line {}, gold line {}): {} chunks vs {}",
                i + 1,
                system.lines[i],
                gold.lines[i],
                s.len(),
                g.len()
            )));
        }
    }
    Ok((system, gold))
}

/// Reads one tree (or `none`) per content line.
fn load_trees(path: &Path, expected: usize) -> Result<Vec<Option<ParseNode>>, CliError> {
    let text = read_text(path)?;
    let trees = content_lines(&text)
        .map(|(line, content)| {
            let content = content.trim();
            if content == "none" {
                return Ok(None);
            }
            parse_tree_text(content)
                .map(Some)
                .map_err(|e| CliError::Input(format!("{}: line {line}: {e}", path.display())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if trees.len() != expected {
        return Err(CliError::Input(format!(
            "{}: {} trees for {expected} sentences",
            path.display(),
            trees.len()
        )));
    }
    Ok(trees)
}

fn load_types(path: &Path, expected: usize) -> Result<Vec<SentenceType>, CliError> {
    let text = read_text(path)?;
    let types = content_lines(&text)
        .map(|(_, l)| l.trim().parse::<SentenceType>())
        .collect::<Result<Vec<_>, _>>()?;
    if types.len() != expected {
        return Err(CliError::Input(format!(
            "{}: {} types for {expected} sentences",
            path.display(),
            types.len()
        )));
    }
    Ok(types)
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let thresholds = Thresholds {
        tag_accuracy: parse_threshold(&args.c2_tag_threshold)?,
        f1_low: parse_threshold(&args.c2_f1_low)?,
    };
    let (system, gold) = load_aligned(&args.system, &args.gold)?;
    let n = gold.len();
    let grammar = Grammar::default_grammar();

    let gold_trees: Vec<Option<ParseNode>> = match &args.gold_trees {
        Some(p) => load_trees(p, n)?,
        None => gold.iter().map(|s| canonical_tree(s, &grammar)).collect(),
    };
    let system_trees: Vec<Option<ParseNode>> = match &args.system_trees {
        Some(p) => load_trees(p, n)?,
        None => system.iter().map(|s| canonical_tree(s, &grammar)).collect(),
    };
    let types: Vec<SentenceType> = match (&args.types, args.infer_types) {
        (Some(p), false) => load_types(p, n)?,
        (None, true) => gold_trees
            .iter()
            .map(|t| SentenceType::infer(t.as_ref()))
            .collect(),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of a types file or --infer-types".into(),
            ))
        }
    };

    let mut scored = Vec::with_capacity(n);
    for i in 0..n {
        let gold_tree = gold_trees[i].as_ref().ok_or_else(|| {
            CliError::Input(format!(
                "gold sentence at line {} has no tree; supply --gold-trees",
                gold.lines[i]
            ))
        })?;
        let score = classify(
            &system.sentences[i].function_tag_sequence(false),
            system_trees[i].as_ref(),
            &gold.sentences[i].function_tag_sequence(false),
            gold_tree,
            &thresholds,
        )?;
        scored.push((types[i], score.score()));
    }
    let report = score_report(&scored);
    let matrix = confusion_of(&system, &gold);

    let mut text = report.to_tsv();
    if args.distribution {
        text.push('\n');
        text.push_str(&report.distribution_tsv());
    }
    match &args.confusion_out {
        Some(p) => write_file(p, &matrix.to_tsv())?,
        None => {
            text.push('\n');
            text.push_str(&matrix.to_tsv());
        }
    }
    emit(None, &text, out)?;
    Ok(0)
}

fn confusion_of(system: &Corpus, gold: &Corpus) -> crate::eval::ConfusionMatrix {
    confusion(
        gold.iter()
            .zip(system.iter())
            .flat_map(|(g, s)| g.tags().into_iter().zip(s.tags())),
    )
}

pub fn cmd_confusion(system: &Path, gold: &Path, out: &mut dyn Write) -> Result<u8, CliError> {
    let (system, gold) = load_aligned(system, gold)?;
    emit(None, &confusion_of(&system, &gold).to_tsv(), out)?;
    Ok(0)
}
