//! Naive Bayes function tagger used as the initial-state annotator.
//!
//! Each chunk is described by three features: its chunk type, its surface
//! (concatenated tokens) and its POS sequence. Likelihoods use add-one
//! smoothing with one extra unit of mass reserved for unseen values:
//!
//! ```text
//! score(t) = ln P(t) + sum_k ln (count(k, v_k, t) + 1) / (count(t) + |V_k| + 1)
//! ```
//!
//! Sentence-final (SFC) chunks are always tagged Null; no other chunk is.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::{AnnotatedSentence, ChunkedSentence, Corpus, SentenceError, UntaggedChunk};
use crate::tagset::{ChunkType, FunctionTag};

#[derive(Debug, Error)]
pub enum BaselineError {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("model has no trained tags for non-final chunks")]
    Untrained,
    #[error(transparent)]
    Sentence(#[from] SentenceError),
    #[error("model file line {line}: {message}")]
    ModelFormat { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FeatureKind {
    ChunkType,
    Surface,
    PosSeq,
}

impl FeatureKind {
    pub const ALL: [FeatureKind; 3] = [
        FeatureKind::ChunkType,
        FeatureKind::Surface,
        FeatureKind::PosSeq,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureKind::ChunkType => "CHUNK_TYPE",
            FeatureKind::Surface => "SURFACE",
            FeatureKind::PosSeq => "POS_SEQ",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for FeatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FeatureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FeatureKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown feature kind {s}"))
    }
}

/// The feature values of one chunk, indexed by [`FeatureKind`] order.
pub type Features = [String; 3];

pub fn extract_features(chunk: &UntaggedChunk) -> Features {
    let pos_seq = chunk
        .tokens()
        .iter()
        .map(|t| t.pos.to_string())
        .collect::<Vec<_>>()
        .join("+");
    [chunk.chunk_type.to_string(), chunk.surface(), pos_seq]
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaselineModel {
    tag_counts: BTreeMap<FunctionTag, u64>,
    feature_counts: BTreeMap<(FeatureKind, String, FunctionTag), u64>,
    vocab_sizes: [u64; 3],
    total: u64,
}

impl BaselineModel {
    /// Counts every chunk of every sentence, including sentence-final ones.
    pub fn train(corpus: &Corpus) -> Result<Self, BaselineError> {
        if corpus.is_empty() {
            return Err(BaselineError::EmptyCorpus);
        }
        let mut model = BaselineModel::default();
        for sentence in corpus.iter() {
            for chunk in sentence.chunks() {
                let tag = chunk.tag();
                *model.tag_counts.entry(tag).or_default() += 1;
                model.total += 1;
                for (kind, value) in FeatureKind::ALL
                    .into_iter()
                    .zip(extract_features(chunk.untagged()))
                {
                    *model.feature_counts.entry((kind, value, tag)).or_default() += 1;
                }
            }
        }
        model.recompute_vocab();
        Ok(model)
    }

    fn recompute_vocab(&mut self) {
        let mut seen: [BTreeSet<&str>; 3] = Default::default();
        for (kind, value, _) in self.feature_counts.keys() {
            seen[kind.index()].insert(value);
        }
        self.vocab_sizes = seen.map(|s| s.len() as u64);
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn tag_count(&self, tag: FunctionTag) -> u64 {
        self.tag_counts.get(&tag).copied().unwrap_or(0)
    }

    pub fn tag_counts(&self) -> &BTreeMap<FunctionTag, u64> {
        &self.tag_counts
    }

    pub fn feature_count(&self, kind: FeatureKind, value: &str, tag: FunctionTag) -> u64 {
        self.feature_counts
            .get(&(kind, value.to_string(), tag))
            .copied()
            .unwrap_or(0)
    }

    pub fn vocab_size(&self, kind: FeatureKind) -> u64 {
        self.vocab_sizes[kind.index()]
    }

    /// Log-posterior score (up to a shared constant) of every tag seen in
    /// training.
    pub fn posterior(&self, chunk: &UntaggedChunk) -> BTreeMap<FunctionTag, f64> {
        let features = extract_features(chunk);
        self.tag_counts
            .iter()
            .map(|(&tag, &count)| (tag, self.score(tag, count, &features)))
            .collect()
    }

    fn score(&self, tag: FunctionTag, count: u64, features: &Features) -> f64 {
        let prior = (count as f64 / self.total as f64).ln();
        FeatureKind::ALL
            .into_iter()
            .zip(features)
            .fold(prior, |acc, (kind, value)| {
                let numerator = self.feature_count(kind, value, tag) + 1;
                let denominator = count + self.vocab_size(kind) + 1;
                acc + (numerator as f64 / denominator as f64).ln()
            })
    }

    /// Highest-scoring tag for a chunk. Ties go to the tag that comes first
    /// in the tagset order.
    pub fn predict(&self, chunk: &UntaggedChunk) -> Result<FunctionTag, BaselineError> {
        if chunk.chunk_type == ChunkType::SFC {
            return Ok(FunctionTag::Null);
        }
        let features = extract_features(chunk);
        let mut best: Option<(FunctionTag, f64)> = None;
        for (&tag, &count) in &self.tag_counts {
            if tag == FunctionTag::Null {
                continue;
            }
            let score = self.score(tag, count, &features);
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((tag, score));
            }
        }
        best.map(|(t, _)| t).ok_or(BaselineError::Untrained)
    }

    pub fn tag_sentence(
        &self,
        sentence: &ChunkedSentence,
    ) -> Result<AnnotatedSentence, BaselineError> {
        let tags = sentence
            .chunks()
            .iter()
            .map(|c| self.predict(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(sentence.with_tags(&tags)?)
    }

    /// Serializes to the line-oriented model format: a header with the
    /// total and vocabulary sizes, then `TAG` and `COUNT` records.
    pub fn to_model_text(&self) -> String {
        let mut out = String::from("MMGR-BASELINE\t1\n");
        writeln!(out, "TOTAL\t{}", self.total).unwrap();
        for kind in FeatureKind::ALL {
            writeln!(out, "VOCAB\t{kind}\t{}", self.vocab_size(kind)).unwrap();
        }
        for (tag, n) in &self.tag_counts {
            writeln!(out, "TAG\t{tag}\t{n}").unwrap();
        }
        for ((kind, value, tag), n) in &self.feature_counts {
            writeln!(out, "COUNT\t{kind}\t{value}\t{tag}\t{n}").unwrap();
        }
        out
    }

    pub fn from_model_text(text: &str) -> Result<Self, BaselineError> {
        let mut model = BaselineModel::default();
        let mut header_total = None;
        let mut header_vocab = [None; 3];
        let mut saw_magic = false;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |message: String| BaselineError::ModelFormat {
                line: line_no,
                message,
            };
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let number = |s: &str| {
                s.parse::<u64>()
                    .map_err(|_| bad(format!("bad count {s:?}")))
            };
            let tag = |s: &str| s.parse::<FunctionTag>().map_err(|e| bad(e.to_string()));
            let kind = |s: &str| s.parse::<FeatureKind>().map_err(&bad);
            match fields.as_slice() {
                ["MMGR-BASELINE", "1"] if line_no == 1 => saw_magic = true,
                _ if !saw_magic => return Err(bad("missing MMGR-BASELINE header".into())),
                ["TOTAL", n] => header_total = Some(number(n)?),
                ["VOCAB", k, n] => header_vocab[kind(k)?.index()] = Some(number(n)?),
                ["TAG", t, n] => {
                    model.tag_counts.insert(tag(t)?, number(n)?);
                }
                ["COUNT", k, value, t, n] => {
                    model
                        .feature_counts
                        .insert((kind(k)?, value.to_string(), tag(t)?), number(n)?);
                }
                _ => return Err(bad(format!("unrecognized record {line:?}"))),
            }
        }
        let end = text.lines().count();
        let inconsistent = |message: &str| BaselineError::ModelFormat {
            line: end,
            message: message.to_string(),
        };
        if !saw_magic {
            return Err(inconsistent("missing MMGR-BASELINE header"));
        }
        model.total = model.tag_counts.values().sum();
        if header_total != Some(model.total) {
            return Err(inconsistent("TOTAL does not equal the sum of TAG counts"));
        }
        model.recompute_vocab();
        if header_vocab != model.vocab_sizes.map(Some) {
            return Err(inconsistent("VOCAB sizes do not match COUNT records"));
        }
        Ok(model)
    }
}
