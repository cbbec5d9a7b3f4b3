//! Grammatical-function tagging and clause-level parsing for chunked
//! Myanmar sentences.
//!
//! The pipeline is:
//!
//! 1. [`corpus`] reads pre-chunked, POS-tagged sentences.
//! 2. [`baseline`] assigns an initial function tag to each chunk with a
//!    Naive Bayes model.
//! 3. [`tbl`] learns and applies transformation rules that correct the
//!    initial tags.
//! 4. [`grammar`] folds head/marker tag pairs into phrases and parses the
//!    phrase sequence with a clause-level context-free grammar.
//! 5. [`eval`] scores system trees against gold trees and tallies tag
//!    confusions.
//!
//! The [`cli`] module wires these into the `mmgr` command.

pub mod baseline;
pub mod cli;
pub mod corpus;
pub mod eval;
pub mod grammar;
pub mod tagset;
pub mod tbl;

pub use baseline::BaselineModel;
pub use corpus::{
    load_corpus, parse_chunked_line, parse_corpus, parse_corpus_line, serialize_sentence,
    AnnotatedSentence, Chunk, ChunkedSentence, Corpus, Token, UntaggedChunk,
};
pub use grammar::{fold_phrases, Grammar, ParseForest, ParseNode, Phrase, PhraseLabel};
pub use tagset::{ChunkType, FunctionTag, Pos, PosTag};
pub use tbl::{TaggingState, TransformationRule, Trigger, TriggerKind};
