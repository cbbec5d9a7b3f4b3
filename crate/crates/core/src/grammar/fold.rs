//! Folding head/marker tag pairs into phrases.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::AnnotatedSentence;
use crate::tagset::FunctionTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("{head} requires {marker} (position {position})")]
    UnmatchedHead {
        head: FunctionTag,
        marker: FunctionTag,
        position: usize,
    },
    #[error("{marker} has no preceding head (position {position})")]
    OrphanMarker {
        marker: FunctionTag,
        position: usize,
    },
    #[error("Null tag at position {0} must be stripped before folding")]
    Null(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PhraseLabel {
    Subj,
    Obj,
    Iobj,
    Pla,
    Tim,
    Ext,
    Sim,
    Com,
    Own,
    Use,
    Cau,
    Aim,
    PcomplS,
    PcomplO,
    Ada,
    Active,
    CCS,
    CCP,
    CCA,
    CCC,
    CCM,
}

impl PhraseLabel {
    pub const ALL: [PhraseLabel; 21] = [
        PhraseLabel::Subj,
        PhraseLabel::Obj,
        PhraseLabel::Iobj,
        PhraseLabel::Pla,
        PhraseLabel::Tim,
        PhraseLabel::Ext,
        PhraseLabel::Sim,
        PhraseLabel::Com,
        PhraseLabel::Own,
        PhraseLabel::Use,
        PhraseLabel::Cau,
        PhraseLabel::Aim,
        PhraseLabel::PcomplS,
        PhraseLabel::PcomplO,
        PhraseLabel::Ada,
        PhraseLabel::Active,
        PhraseLabel::CCS,
        PhraseLabel::CCP,
        PhraseLabel::CCA,
        PhraseLabel::CCC,
        PhraseLabel::CCM,
    ];

    /// Labels that may precede the verb inside a clause.
    pub const CLAUSE_PHRASES: [PhraseLabel; 15] = [
        PhraseLabel::Subj,
        PhraseLabel::Obj,
        PhraseLabel::Iobj,
        PhraseLabel::Pla,
        PhraseLabel::Tim,
        PhraseLabel::Ext,
        PhraseLabel::Sim,
        PhraseLabel::Com,
        PhraseLabel::Own,
        PhraseLabel::Use,
        PhraseLabel::Cau,
        PhraseLabel::Aim,
        PhraseLabel::PcomplS,
        PhraseLabel::PcomplO,
        PhraseLabel::Ada,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PhraseLabel::Subj => "Subj",
            PhraseLabel::Obj => "Obj",
            PhraseLabel::Iobj => "Iobj",
            PhraseLabel::Pla => "Pla",
            PhraseLabel::Tim => "Tim",
            PhraseLabel::Ext => "Ext",
            PhraseLabel::Sim => "Sim",
            PhraseLabel::Com => "Com",
            PhraseLabel::Own => "Own",
            PhraseLabel::Use => "Use",
            PhraseLabel::Cau => "Cau",
            PhraseLabel::Aim => "Aim",
            PhraseLabel::PcomplS => "PcomplS",
            PhraseLabel::PcomplO => "PcomplO",
            PhraseLabel::Ada => "Ada",
            PhraseLabel::Active => "Active",
            PhraseLabel::CCS => "CCS",
            PhraseLabel::CCP => "CCP",
            PhraseLabel::CCA => "CCA",
            PhraseLabel::CCC => "CCC",
            PhraseLabel::CCM => "CCM",
        }
    }

    /// Label of a tag that stands alone as a phrase.
    pub fn bare(tag: FunctionTag) -> Option<PhraseLabel> {
        use FunctionTag as T;
        Some(match tag {
            T::Subj => PhraseLabel::Subj,
            T::Obj => PhraseLabel::Obj,
            T::Pla => PhraseLabel::Pla,
            T::Tim => PhraseLabel::Tim,
            T::Cau => PhraseLabel::Cau,
            T::PcomplS => PhraseLabel::PcomplS,
            T::PcomplO => PhraseLabel::PcomplO,
            T::Ada => PhraseLabel::Ada,
            T::Active => PhraseLabel::Active,
            T::CCS => PhraseLabel::CCS,
            T::CCP => PhraseLabel::CCP,
            T::CCA => PhraseLabel::CCA,
            T::CCC => PhraseLabel::CCC,
            T::CCM => PhraseLabel::CCM,
            _ => return None,
        })
    }

    /// Label of the phrase a head tag opens.
    pub fn headed(head: FunctionTag) -> Option<PhraseLabel> {
        use FunctionTag as T;
        Some(match head {
            T::PSubj => PhraseLabel::Subj,
            T::PObj => PhraseLabel::Obj,
            T::PIobj => PhraseLabel::Iobj,
            T::PPla => PhraseLabel::Pla,
            T::PTim => PhraseLabel::Tim,
            T::PExt => PhraseLabel::Ext,
            T::PSim => PhraseLabel::Sim,
            T::PCom => PhraseLabel::Com,
            T::POwn => PhraseLabel::Own,
            T::PUse => PhraseLabel::Use,
            T::PCau => PhraseLabel::Cau,
            T::PAim => PhraseLabel::Aim,
            T::PPcomplO => PhraseLabel::PcomplO,
            _ => return None,
        })
    }
}

impl fmt::Display for PhraseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PhraseLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PhraseLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown phrase label {s}"))
    }
}

/// A phrase over one or more consecutive chunks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Phrase {
    pub label: PhraseLabel,
    /// Surface of each covered chunk.
    pub parts: Vec<String>,
}

impl Phrase {
    pub fn new(label: PhraseLabel, surface: impl Into<String>) -> Self {
        Phrase {
            label,
            parts: vec![surface.into()],
        }
    }

    /// A one-chunk phrase with no surface text.
    pub fn bare(label: PhraseLabel) -> Self {
        Phrase::new(label, "")
    }

    pub fn width(&self) -> usize {
        self.parts.len()
    }

    pub fn surface(&self) -> String {
        self.parts.concat()
    }
}

/// Folds each head tag with the marker that follows it; other phrase tags
/// pass through. Single left-to-right pass.
pub fn fold_phrases<S: AsRef<str>>(tagged: &[(FunctionTag, S)]) -> Result<Vec<Phrase>, FoldError> {
    let mut out = Vec::with_capacity(tagged.len());
    let mut i = 0;
    while i < tagged.len() {
        let (tag, surface) = (&tagged[i].0, tagged[i].1.as_ref());
        let tag = *tag;
        if tag == FunctionTag::Null {
            return Err(FoldError::Null(i));
        }
        if let Some(marker) = tag.matching_marker() {
            match tagged.get(i + 1) {
                Some((next, next_surface)) if *next == marker => {
                    out.push(Phrase {
                        label: PhraseLabel::headed(tag).expect("every head has a phrase label"),
                        parts: vec![surface.to_string(), next_surface.as_ref().to_string()],
                    });
                    i += 2;
                    continue;
                }
                _ => {
                    return Err(FoldError::UnmatchedHead {
                        head: tag,
                        marker,
                        position: i,
                    })
                }
            }
        }
        match PhraseLabel::bare(tag) {
            Some(label) => out.push(Phrase::new(label, surface)),
            None => {
                return Err(FoldError::OrphanMarker {
                    marker: tag,
                    position: i,
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Strips the sentence-final Null chunk and folds the rest.
pub fn sentence_phrases(sentence: &AnnotatedSentence) -> Result<Vec<Phrase>, FoldError> {
    let tagged: Vec<(FunctionTag, String)> = sentence
        .chunks()
        .iter()
        .filter(|c| c.tag() != FunctionTag::Null)
        .map(|c| (c.tag(), c.surface()))
        .collect();
    fold_phrases(&tagged)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tag sequence item {index}: {message}")]
pub struct TagSequenceError {
    pub index: usize,
    pub message: String,
}

/// Reads the `TAG[surface]# TAG[surface]# ...` notation used to write
/// sentences as function-tag sequences.
pub fn parse_tag_sequence(text: &str) -> Result<Vec<(FunctionTag, String)>, TagSequenceError> {
    text.split('#')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .enumerate()
        .map(|(index, item)| {
            let err = |message: String| TagSequenceError { index, message };
            let (tag, surface) = match item.split_once('[') {
                Some((tag, rest)) => {
                    let surface = rest
                        .strip_suffix(']')
                        .ok_or_else(|| err(format!("missing ']' in {item:?}")))?;
                    (tag.trim(), surface.trim())
                }
                None => (item, ""),
            };
            let tag = tag
                .parse()
                .map_err(|e: crate::tagset::TagsetError| err(e.to_string()))?;
            Ok((tag, surface.to_string()))
        })
        .collect()
}
