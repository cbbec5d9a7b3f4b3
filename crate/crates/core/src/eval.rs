//! Scoring system output against gold tags and trees.
//!
//! Each sentence gets one or more criteria worth 0, 1, 1.5, 2 or 3 points
//! and scores the mean of their values. Reports sum scores per sentence
//! type and express them as a percentage of the maximum (3 per sentence).
//! All arithmetic is exact; rounding happens only when formatting.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::grammar::{ParseNode, Span};
use crate::tagset::FunctionTag;

pub type Score = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("system has {system} tags but gold has {gold}")]
    Misaligned { system: usize, gold: usize },
    #[error("trees cover {system} and {gold} chunks")]
    SpanMismatch { system: usize, gold: usize },
    #[error("unknown sentence type {0}")]
    UnknownType(String),
    #[error("threshold {0} must lie in (0, 1]")]
    Threshold(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    /// Completely wrong format.
    C0,
    /// Correct tags, wrong relations.
    C1,
    /// Wrong tags, correct relations.
    C15,
    /// Tagging quite good, some relation errors.
    C2,
    /// Completely correct.
    C3,
}

impl Criterion {
    pub fn value(self) -> Score {
        match self {
            Criterion::C0 => Score::from_integer(0),
            Criterion::C1 => Score::from_integer(1),
            Criterion::C15 => Score::new(3, 2),
            Criterion::C2 => Score::from_integer(2),
            Criterion::C3 => Score::from_integer(3),
        }
    }

    pub const ALL: [Criterion; 5] = [
        Criterion::C3,
        Criterion::C2,
        Criterion::C15,
        Criterion::C1,
        Criterion::C0,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceScore {
    criteria: BTreeSet<Criterion>,
}

impl SentenceScore {
    pub fn new(criteria: BTreeSet<Criterion>) -> Self {
        assert!(!criteria.is_empty(), "at least one criterion applies");
        SentenceScore { criteria }
    }

    pub fn single(c: Criterion) -> Self {
        SentenceScore::new(BTreeSet::from([c]))
    }

    pub fn criteria(&self) -> &BTreeSet<Criterion> {
        &self.criteria
    }

    /// Mean of the criteria values.
    pub fn score(&self) -> Score {
        let sum: Score = self.criteria.iter().map(|c| c.value()).sum();
        sum / Score::from_integer(self.criteria.len() as i64)
    }
}

/// Thresholds that decide the "quite well in function tagging" criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    pub tag_accuracy: Score,
    pub f1_low: Score,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            tag_accuracy: Score::new(3, 4),
            f1_low: Score::new(1, 2),
        }
    }
}

/// Parses a threshold written as a fraction (`3/4`) or decimal (`0.75`),
/// requiring it to lie in (0, 1].
pub fn parse_threshold(text: &str) -> Result<Score, EvalError> {
    let bad = || EvalError::Threshold(text.to_string());
    let t = text.trim();
    let digits = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    let value = if let Some((n, d)) = t.split_once('/') {
        let (n, d) = (n.trim(), d.trim());
        if n.is_empty() || !digits(n) || !digits(d) {
            return Err(bad());
        }
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Score::new(n, d)
    } else {
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if frac.len() > 12 || int.len() > 6 || !digits(int) || !digits(frac) || t == "." {
            return Err(bad());
        }
        let int: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac_value: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        Score::new(int * scale + frac_value, scale)
    };
    if value <= Score::zero() || value > Score::from_integer(1) {
        return Err(bad());
    }
    Ok(value)
}

/// Labeled-bracket F1 over every `(label, span)` constituent of the two
/// trees, phrase leaves included.
pub fn bracket_f1(system: &ParseNode, gold: &ParseNode) -> Result<Score, EvalError> {
    if system.span.end != gold.span.end || system.span.start != gold.span.start {
        return Err(EvalError::SpanMismatch {
            system: system.span.len(),
            gold: gold.span.len(),
        });
    }
    let sys: BTreeSet<(&str, Span)> = system.constituents().into_iter().collect();
    let gld: BTreeSet<(&str, Span)> = gold.constituents().into_iter().collect();
    if sys == gld {
        return Ok(Score::from_integer(1));
    }
    let matched = sys.intersection(&gld).count() as i64;
    if matched == 0 {
        return Ok(Score::zero());
    }
    Ok(Score::new(2 * matched, (sys.len() + gld.len()) as i64))
}

pub fn tag_accuracy(system: &[FunctionTag], gold: &[FunctionTag]) -> Result<Score, EvalError> {
    if system.len() != gold.len() {
        return Err(EvalError::Misaligned {
            system: system.len(),
            gold: gold.len(),
        });
    }
    if gold.is_empty() {
        return Ok(Score::from_integer(1));
    }
    let correct = system.iter().zip(gold).filter(|(a, b)| a == b).count();
    Ok(Score::new(correct as i64, gold.len() as i64))
}

/// Assigns the scoring criteria for one sentence.
///
/// * C3 when tags and trees agree.
/// * C0 when there is no system tree or it does not cover the sentence.
/// * Otherwise every applicable member of C1 (tags equal, trees differ),
///   C1.5 (tags differ, clause skeletons equal) and C2 (tag accuracy in
///   `[tag_accuracy, 1)` and bracket F1 in `[f1_low, 1)`).
/// * If none applies: C1 when tag accuracy reaches the threshold, else C0.
pub fn classify(
    system_tags: &[FunctionTag],
    system_tree: Option<&ParseNode>,
    gold_tags: &[FunctionTag],
    gold_tree: &ParseNode,
    thresholds: &Thresholds,
) -> Result<SentenceScore, EvalError> {
    let accuracy = tag_accuracy(system_tags, gold_tags)?;
    let tags_equal = system_tags == gold_tags;
    let Some(system_tree) = system_tree.filter(|t| t.is_well_formed(gold_tree.span.end)) else {
        return Ok(SentenceScore::single(Criterion::C0));
    };
    if tags_equal && system_tree.same_structure(gold_tree) {
        return Ok(SentenceScore::single(Criterion::C3));
    }
    let f1 = bracket_f1(system_tree, gold_tree)?;
    let one = Score::from_integer(1);
    let mut criteria = BTreeSet::new();
    if tags_equal {
        criteria.insert(Criterion::C1);
    }
    if !tags_equal && system_tree.same_skeleton(gold_tree) {
        criteria.insert(Criterion::C15);
    }
    if accuracy >= thresholds.tag_accuracy && accuracy < one && f1 >= thresholds.f1_low && f1 < one
    {
        criteria.insert(Criterion::C2);
    }
    if criteria.is_empty() {
        criteria.insert(if accuracy >= thresholds.tag_accuracy {
            Criterion::C1
        } else {
            Criterion::C0
        });
    }
    Ok(SentenceScore::new(criteria))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SentenceType {
    Simple,
    ComplexNounDc,
    ComplexAdjDc,
    ComplexAdvDc,
    ComplicatedComplex,
}

impl SentenceType {
    pub const ALL: [SentenceType; 5] = [
        SentenceType::Simple,
        SentenceType::ComplexNounDc,
        SentenceType::ComplexAdjDc,
        SentenceType::ComplexAdvDc,
        SentenceType::ComplicatedComplex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SentenceType::Simple => "Simple",
            SentenceType::ComplexNounDc => "Complex_NounDC",
            SentenceType::ComplexAdjDc => "Complex_AdjDC",
            SentenceType::ComplexAdvDc => "Complex_AdvDC",
            SentenceType::ComplicatedComplex => "ComplicatedComplex",
        }
    }

    /// Guesses the type from a canonical tree: a sentence-level subject in
    /// front of a dependent clause makes it complicated, otherwise the
    /// dependent clause kind decides. `None` (no parse) is complicated.
    pub fn infer(tree: Option<&ParseNode>) -> SentenceType {
        let Some(tree) = tree else {
            return SentenceType::ComplicatedComplex;
        };
        let Some(clause) = tree.children.first() else {
            return SentenceType::ComplicatedComplex;
        };
        match clause.label.as_str() {
            "SS" => SentenceType::Simple,
            "CS" => {
                if clause
                    .children
                    .first()
                    .is_some_and(|c| c.is_leaf() && c.label == "Subj")
                {
                    return SentenceType::ComplicatedComplex;
                }
                let dc = clause.children.iter().find(|c| c.label.starts_with("DC_"));
                match dc.map(|c| c.label.as_str()) {
                    Some("DC_N") => SentenceType::ComplexNounDc,
                    Some("DC_A") => SentenceType::ComplexAdjDc,
                    Some("DC_S") => SentenceType::ComplexAdvDc,
                    _ => SentenceType::ComplicatedComplex,
                }
            }
            _ => SentenceType::ComplicatedComplex,
        }
    }
}

impl fmt::Display for SentenceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SentenceType {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SentenceType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| EvalError::UnknownType(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub n: usize,
    pub total: Score,
    /// Count of sentences per score value.
    pub histogram: BTreeMap<Score, usize>,
}

impl ReportRow {
    fn empty() -> Self {
        ReportRow {
            n: 0,
            total: Score::zero(),
            histogram: BTreeMap::new(),
        }
    }

    fn add(&mut self, score: Score) {
        self.n += 1;
        self.total += score;
        *self.histogram.entry(score).or_default() += 1;
    }

    fn merge(&mut self, other: &ReportRow) {
        self.n += other.n;
        self.total += other.total;
        for (s, c) in &other.histogram {
            *self.histogram.entry(*s).or_default() += c;
        }
    }

    /// `total / (3 n) * 100`, exact.
    pub fn percent(&self) -> Score {
        if self.n == 0 {
            return Score::zero();
        }
        self.total * Score::from_integer(100) / Score::from_integer(3 * self.n as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub rows: BTreeMap<SentenceType, ReportRow>,
    pub overall: ReportRow,
}

impl EvalReport {
    /// TSV: `type n total_score percent`, then a `Total` row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("type\tn\ttotal_score\tpercent\n");
        let mut line = |name: &str, row: &ReportRow| {
            out.push_str(&format!(
                "{name}\t{}\t{}\t{}\n",
                row.n,
                format_decimal(row.total, 4),
                format_fixed(row.percent(), 2)
            ));
        };
        for (t, row) in &self.rows {
            line(t.as_str(), row);
        }
        line("Total", &self.overall);
        out
    }

    /// Share of sentences at each score value, per type (TSV, percentages
    /// with one decimal).
    pub fn distribution_tsv(&self) -> String {
        let columns: BTreeSet<Score> = self
            .overall
            .histogram
            .keys()
            .copied()
            .chain(Criterion::ALL.iter().map(|c| c.value()))
            .collect();
        let mut out = String::from("type");
        for c in columns.iter().rev() {
            out.push_str(&format!("\tscore_{}", format_decimal(*c, 4)));
        }
        out.push('\n');
        let mut line = |name: &str, row: &ReportRow| {
            out.push_str(name);
            for c in columns.iter().rev() {
                let count = row.histogram.get(c).copied().unwrap_or(0) as i64;
                let share = if row.n == 0 {
                    Score::zero()
                } else {
                    Score::new(count * 100, row.n as i64)
                };
                out.push_str(&format!("\t{}", format_fixed(share, 1)));
            }
            out.push('\n');
        };
        for (t, row) in &self.rows {
            line(t.as_str(), row);
        }
        line("Total", &self.overall);
        out
    }
}

/// Aggregates per-sentence scores by declared sentence type.
pub fn score_report(scored: &[(SentenceType, Score)]) -> EvalReport {
    let mut rows: BTreeMap<SentenceType, ReportRow> = BTreeMap::new();
    for &(t, score) in scored {
        rows.entry(t).or_insert_with(ReportRow::empty).add(score);
    }
    let mut overall = ReportRow::empty();
    for row in rows.values() {
        overall.merge(row);
    }
    EvalReport { rows, overall }
}

/// Builds a report straight from `(type, n, total)` rows.
pub fn report_from_totals(rows: &[(SentenceType, usize, Score)]) -> EvalReport {
    let mut out = BTreeMap::new();
    let mut overall = ReportRow::empty();
    for &(t, n, total) in rows {
        let row = ReportRow {
            n,
            total,
            histogram: BTreeMap::new(),
        };
        overall.merge(&row);
        out.insert(t, row);
    }
    EvalReport { rows: out, overall }
}

/// Rounds half away from zero to `places` decimals.
pub fn format_fixed(value: Score, places: u32) -> String {
    let scale = 10i64.pow(places);
    let scaled = value * Score::from_integer(scale);
    let rounded = scaled.round().to_integer();
    let sign = if rounded < 0 { "-" } else { "" };
    let abs = rounded.abs();
    if places == 0 {
        return format!("{sign}{abs}");
    }
    format!(
        "{sign}{}.{:0width$}",
        abs / scale,
        abs % scale,
        width = places as usize
    )
}

/// Shortest decimal with at most `max_places` places (trailing zeros
/// dropped), rounded when the value does not terminate sooner.
pub fn format_decimal(value: Score, max_places: u32) -> String {
    let fixed = format_fixed(value, max_places);
    if !fixed.contains('.') {
        return fixed;
    }
    fixed
        .trim_end_matches('0')
        .trim_end_matches('.')
        .to_string()
}

pub fn to_f64(value: Score) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Off-diagonal `(gold, system)` tag counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: BTreeMap<(FunctionTag, FunctionTag), usize>,
}

impl ConfusionMatrix {
    pub fn count(&self, gold: FunctionTag, system: FunctionTag) -> usize {
        self.counts.get(&(gold, system)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Rows sorted by count descending, then gold and system tag order.
    pub fn rows(&self) -> Vec<(FunctionTag, FunctionTag, usize)> {
        let mut rows: Vec<_> = self.counts.iter().map(|(&(g, s), &n)| (g, s, n)).collect();
        rows.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
        rows
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("gold\tsystem\tcount\n");
        for (g, s, n) in self.rows() {
            out.push_str(&format!("{g}\t{s}\t{n}\n"));
        }
        out
    }
}

pub fn confusion<I>(pairs: I) -> ConfusionMatrix
where
    I: IntoIterator<Item = (FunctionTag, FunctionTag)>,
{
    let mut counts = BTreeMap::new();
    for (gold, system) in pairs {
        if gold != system {
            *counts.entry((gold, system)).or_default() += 1;
        }
    }
    ConfusionMatrix { counts }
}
