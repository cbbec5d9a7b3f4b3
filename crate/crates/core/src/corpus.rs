//! Annotated-corpus line format.
//!
//! One sentence per line, chunks separated by `#`:
//!
//! ```text
//! VC@Active[မိုးရွာ/v.common]#CC@CCS[လျှင်/cc.sent]#...#SFC@Null[သည်/sf.declarative]။
//! ```
//!
//! Each chunk is `CHUNKTYPE@FTAG[surface/pos.category,...]`. Whitespace
//! around separators is ignored and a trailing `။` marks a terminated
//! sentence. Serialization produces the canonical form (no spaces around
//! separators, `verb` written as `v`), which parses back to the same value.

use std::fmt;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::tagset::{ChunkType, FunctionTag, PosTag, TagsetError};

/// Sentence-final punctuation mark.
pub const TERMINAL_MARK: char = '။';

const FORBIDDEN_SURFACE_CHARS: [char; 5] = ['#', '[', ']', '/', ','];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty line")]
    EmptyLine,
    #[error(transparent)]
    Tagset(#[from] TagsetError),
    #[error("missing function tag (expected CHUNKTYPE@FTAG)")]
    MissingTag,
    #[error("malformed bracket structure: {0}")]
    Bracket(&'static str),
    #[error("empty token list")]
    EmptyTokenList,
    #[error("token {0:?} is missing '/'")]
    MissingSlash(String),
    #[error(transparent)]
    Sentence(#[from] SentenceError),
    #[error("unexpected character {0:?}")]
    Unexpected(char),
}

/// A corpus-line parse failure at a character offset (0-based, counted in
/// Unicode scalar values).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError {
            offset,
            kind: kind.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SentenceError {
    #[error("empty surface")]
    EmptySurface,
    #[error("surface {0:?} contains forbidden character {1:?}")]
    ForbiddenSurfaceChar(String, char),
    #[error("chunk has no tokens")]
    NoTokens,
    #[error("chunk type {0} cannot carry tag {1} (SFC chunks carry Null and only they do)")]
    NullMismatch(ChunkType, FunctionTag),
    #[error("sentence has no chunks")]
    NoChunks,
    #[error("SFC chunk must be the last chunk")]
    MisplacedSfc,
    #[error("expected {expected} tags, got {actual}")]
    TagCount { expected: usize, actual: usize },
}

/// A non-fatal observation made while parsing, such as a POS category
/// outside the reference inventory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    surface: String,
    pub pos: PosTag,
}

impl Token {
    pub fn new(surface: impl Into<String>, pos: PosTag) -> Result<Self, SentenceError> {
        let surface = surface.into();
        if surface.trim().is_empty() || surface.trim() != surface {
            return Err(SentenceError::EmptySurface);
        }
        if let Some(c) = surface
            .chars()
            .find(|c| FORBIDDEN_SURFACE_CHARS.contains(c) || c.is_control())
        {
            return Err(SentenceError::ForbiddenSurfaceChar(surface, c));
        }
        Ok(Token { surface, pos })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.surface, self.pos)
    }
}

/// A chunk whose function tag is not (yet) known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UntaggedChunk {
    pub chunk_type: ChunkType,
    tokens: Vec<Token>,
}

impl UntaggedChunk {
    pub fn new(chunk_type: ChunkType, tokens: Vec<Token>) -> Result<Self, SentenceError> {
        if tokens.is_empty() {
            return Err(SentenceError::NoTokens);
        }
        Ok(UntaggedChunk { chunk_type, tokens })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Concatenated token surfaces.
    pub fn surface(&self) -> String {
        self.tokens.iter().map(Token::surface).collect()
    }

    /// Attaches a tag, enforcing the SFC/Null pairing.
    pub fn tagged(self, tag: FunctionTag) -> Result<Chunk, SentenceError> {
        if (self.chunk_type == ChunkType::SFC) != (tag == FunctionTag::Null) {
            return Err(SentenceError::NullMismatch(self.chunk_type, tag));
        }
        Ok(Chunk { inner: self, tag })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chunk {
    inner: UntaggedChunk,
    tag: FunctionTag,
}

impl Chunk {
    pub fn new(
        chunk_type: ChunkType,
        tag: FunctionTag,
        tokens: Vec<Token>,
    ) -> Result<Self, SentenceError> {
        UntaggedChunk::new(chunk_type, tokens)?.tagged(tag)
    }

    pub fn chunk_type(&self) -> ChunkType {
        self.inner.chunk_type
    }

    pub fn tag(&self) -> FunctionTag {
        self.tag
    }

    pub fn tokens(&self) -> &[Token] {
        &self.inner.tokens
    }

    pub fn surface(&self) -> String {
        self.inner.surface()
    }

    pub fn untagged(&self) -> &UntaggedChunk {
        &self.inner
    }
}

impl fmt::Display for Chunk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}[", self.chunk_type(), self.tag)?;
        for (i, token) in self.tokens().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{token}")?;
        }
        f.write_str("]")
    }
}

fn check_sfc_position(
    types: impl ExactSizeIterator<Item = ChunkType>,
) -> Result<(), SentenceError> {
    let n = types.len();
    if n == 0 {
        return Err(SentenceError::NoChunks);
    }
    for (i, t) in types.enumerate() {
        if t == ChunkType::SFC && i + 1 != n {
            return Err(SentenceError::MisplacedSfc);
        }
    }
    Ok(())
}

/// A pre-chunked sentence without function tags: the input to tagging.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChunkedSentence {
    chunks: Vec<UntaggedChunk>,
    pub terminal_mark: bool,
}

impl ChunkedSentence {
    pub fn new(chunks: Vec<UntaggedChunk>, terminal_mark: bool) -> Result<Self, SentenceError> {
        check_sfc_position(chunks.iter().map(|c| c.chunk_type))?;
        Ok(ChunkedSentence {
            chunks,
            terminal_mark,
        })
    }

    pub fn chunks(&self) -> &[UntaggedChunk] {
        &self.chunks
    }

    /// Attaches one tag per chunk.
    pub fn with_tags(&self, tags: &[FunctionTag]) -> Result<AnnotatedSentence, SentenceError> {
        if tags.len() != self.chunks.len() {
            return Err(SentenceError::TagCount {
                expected: self.chunks.len(),
                actual: tags.len(),
            });
        }
        let chunks = self
            .chunks
            .iter()
            .zip(tags)
            .map(|(c, &t)| c.clone().tagged(t))
            .collect::<Result<Vec<_>, _>>()?;
        AnnotatedSentence::new(chunks, self.terminal_mark)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnotatedSentence {
    chunks: Vec<Chunk>,
    pub terminal_mark: bool,
}

impl AnnotatedSentence {
    pub fn new(chunks: Vec<Chunk>, terminal_mark: bool) -> Result<Self, SentenceError> {
        check_sfc_position(chunks.iter().map(Chunk::chunk_type))?;
        Ok(AnnotatedSentence {
            chunks,
            terminal_mark,
        })
    }

    pub fn chunks(&self) -> &[Chunk] {
        &self.chunks
    }

    pub fn len(&self) -> usize {
        self.chunks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chunks.is_empty()
    }

    pub fn tags(&self) -> Vec<FunctionTag> {
        self.chunks.iter().map(Chunk::tag).collect()
    }

    /// Per-chunk surfaces (concatenated tokens).
    pub fn surfaces(&self) -> Vec<String> {
        self.chunks.iter().map(Chunk::surface).collect()
    }

    pub fn untagged(&self) -> ChunkedSentence {
        ChunkedSentence {
            chunks: self.chunks.iter().map(|c| c.inner.clone()).collect(),
            terminal_mark: self.terminal_mark,
        }
    }

    pub fn with_tags(&self, tags: &[FunctionTag]) -> Result<AnnotatedSentence, SentenceError> {
        self.untagged().with_tags(tags)
    }

    /// One tag per chunk, optionally dropping Null-tagged (sentence-final)
    /// chunks.
    pub fn function_tag_sequence(&self, include_null: bool) -> Vec<FunctionTag> {
        self.chunks
            .iter()
            .map(Chunk::tag)
            .filter(|&t| include_null || t != FunctionTag::Null)
            .collect()
    }

    /// Every token paired with its chunk's tag, in reading order.
    pub fn word_tag_pairs(&self) -> Vec<(&str, FunctionTag)> {
        self.chunks
            .iter()
            .flat_map(|c| c.tokens().iter().map(move |t| (t.surface(), c.tag())))
            .collect()
    }

    /// The `word#TAG word#TAG ...` display form.
    pub fn word_tag_display(&self) -> String {
        self.word_tag_pairs()
            .iter()
            .map(|(w, t)| format!("{w}#{t}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for AnnotatedSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, chunk) in self.chunks.iter().enumerate() {
            if i > 0 {
                f.write_str("#")?;
            }
            write!(f, "{chunk}")?;
        }
        if self.terminal_mark {
            write!(f, "{TERMINAL_MARK}")?;
        }
        Ok(())
    }
}

pub fn serialize_sentence(s: &AnnotatedSentence) -> String {
    s.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TagMode {
    Required,
    Ignored,
}

struct RawChunk {
    offset: usize,
    chunk_type: ChunkType,
    tag: Option<FunctionTag>,
    tokens: Vec<Token>,
}

struct LineParser {
    chars: Vec<char>,
    pos: usize,
    mode: TagMode,
    warnings: Vec<Warning>,
}

impl LineParser {
    fn new(line: &str, mode: TagMode) -> Self {
        LineParser {
            chars: line.chars().collect(),
            pos: 0,
            mode,
            warnings: Vec::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// Consumes characters until one of `stops` (or end of line), returning
    /// the trimmed text and the offset of its first non-space character.
    fn take_until(&mut self, stops: &[char]) -> (String, usize) {
        let start = self.pos;
        while self.peek().is_some_and(|c| !stops.contains(&c)) {
            self.pos += 1;
        }
        let raw: String = self.chars[start..self.pos].iter().collect();
        let lead = raw.chars().take_while(|c| c.is_whitespace()).count();
        (raw.trim().to_string(), start + lead)
    }

    fn parse(mut self) -> Result<(Vec<RawChunk>, bool, Vec<Warning>), ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(ParseError::new(0, ParseErrorKind::EmptyLine));
        }
        let mut chunks = Vec::new();
        loop {
            self.skip_ws();
            chunks.push(self.chunk()?);
            self.skip_ws();
            match self.peek() {
                Some('#') => self.pos += 1,
                _ => break,
            }
        }
        let mut terminal = false;
        if self.peek() == Some(TERMINAL_MARK) {
            terminal = true;
            self.pos += 1;
            self.skip_ws();
        }
        if let Some(c) = self.peek() {
            return Err(ParseError::new(self.pos, ParseErrorKind::Unexpected(c)));
        }
        Ok((chunks, terminal, self.warnings))
    }

    fn chunk(&mut self) -> Result<RawChunk, ParseError> {
        let start = self.pos;
        let (header, header_at) = self.take_until(&['[', ']', '#', ',']);
        if self.peek() != Some('[') {
            return Err(ParseError::new(
                self.pos,
                ParseErrorKind::Bracket("expected '[' after chunk header"),
            ));
        }
        let (type_text, tag_text) = match header.split_once('@') {
            Some((ty, tag)) => (ty.trim_end(), Some(tag.trim())),
            None => (header.as_str(), None),
        };
        let chunk_type: ChunkType = type_text
            .parse()
            .map_err(|e| ParseError::new(header_at, e))?;
        let tag_at = header_at + type_text.chars().count() + 1;
        let tag = match (self.mode, tag_text) {
            (TagMode::Required, None) => {
                return Err(ParseError::new(header_at, ParseErrorKind::MissingTag))
            }
            (TagMode::Required, Some(t)) => {
                Some(t.parse().map_err(|e| ParseError::new(tag_at, e))?)
            }
            (TagMode::Ignored, _) => None,
        };
        self.pos += 1;

        let mut tokens = Vec::new();
        loop {
            let (text, at) = self.take_until(&[',', ']', '[', '#']);
            match self.peek() {
                Some(',') | Some(']') => {}
                _ => {
                    return Err(ParseError::new(
                        self.pos,
                        ParseErrorKind::Bracket("unclosed '['"),
                    ))
                }
            }
            if text.is_empty() && tokens.is_empty() && self.peek() == Some(']') {
                return Err(ParseError::new(at, ParseErrorKind::EmptyTokenList));
            }
            tokens.push(self.token(&text, at)?);
            let closing = self.peek() == Some(']');
            self.pos += 1;
            if closing {
                break;
            }
        }
        Ok(RawChunk {
            offset: start,
            chunk_type,
            tag,
            tokens,
        })
    }

    fn token(&mut self, text: &str, at: usize) -> Result<Token, ParseError> {
        let (surface, pos) = text
            .split_once('/')
            .ok_or_else(|| ParseError::new(at, ParseErrorKind::MissingSlash(text.to_string())))?;
        let surface = surface.trim_end();
        let pos_at = at + surface.chars().count() + 1;
        let pos: PosTag = pos.trim().parse().map_err(|e| ParseError::new(pos_at, e))?;
        if !pos.is_known_category() {
            self.warnings.push(Warning {
                offset: pos_at,
                message: format!("unknown category {pos}"),
            });
        }
        Token::new(surface, pos).map_err(|e| ParseError::new(at, e))
    }
}

/// Parses one corpus line, also returning non-fatal warnings.
pub fn parse_corpus_line_with_warnings(
    line: &str,
) -> Result<(AnnotatedSentence, Vec<Warning>), ParseError> {
    let (raw, terminal, warnings) = LineParser::new(line, TagMode::Required).parse()?;
    let mut chunks = Vec::with_capacity(raw.len());
    for c in &raw {
        let tag = c.tag.expect("tags are required in this mode");
        let chunk = Chunk::new(c.chunk_type, tag, c.tokens.clone())
            .map_err(|e| ParseError::new(c.offset, e))?;
        chunks.push(chunk);
    }
    let offset = raw.last().map_or(0, |c| c.offset);
    let sentence =
        AnnotatedSentence::new(chunks, terminal).map_err(|e| ParseError::new(offset, e))?;
    Ok((sentence, warnings))
}

pub fn parse_corpus_line(line: &str) -> Result<AnnotatedSentence, ParseError> {
    parse_corpus_line_with_warnings(line).map(|(s, _)| s)
}

/// Parses a line whose function tags are absent (`NC[...]`), placeholders
/// (`NC@_[...]`), or present but to be ignored.
pub fn parse_chunked_line(line: &str) -> Result<ChunkedSentence, ParseError> {
    let (raw, terminal, _) = LineParser::new(line, TagMode::Ignored).parse()?;
    let offset = raw.last().map_or(0, |c| c.offset);
    let chunks = raw
        .into_iter()
        .map(|c| {
            UntaggedChunk::new(c.chunk_type, c.tokens).map_err(|e| ParseError::new(c.offset, e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChunkedSentence::new(chunks, terminal).map_err(|e| ParseError::new(offset, e))
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// A list of sentences with their 1-based source line numbers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub sentences: Vec<AnnotatedSentence>,
    pub lines: Vec<usize>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn push(&mut self, sentence: AnnotatedSentence, line: usize) {
        self.sentences.push(sentence);
        self.lines.push(line);
    }

    pub fn iter(&self) -> impl Iterator<Item = &AnnotatedSentence> {
        self.sentences.iter()
    }
}

impl FromIterator<AnnotatedSentence> for Corpus {
    fn from_iter<I: IntoIterator<Item = AnnotatedSentence>>(iter: I) -> Self {
        let sentences: Vec<_> = iter.into_iter().collect();
        let lines = (1..=sentences.len()).collect();
        Corpus { sentences, lines }
    }
}

/// Yields `(line_number, line)` for every content line: blank lines and
/// `%` comments are skipped.
pub fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        (!trimmed.is_empty() && !trimmed.starts_with('%')).then_some((i + 1, line))
    })
}

/// Parses corpus text, failing on the first malformed line.
pub fn parse_corpus(text: &str) -> Result<Corpus, CorpusError> {
    let mut corpus = Corpus::default();
    for (line, content) in content_lines(text) {
        let sentence =
            parse_corpus_line(content).map_err(|source| CorpusError::Line { line, source })?;
        corpus.push(sentence, line);
    }
    Ok(corpus)
}

pub fn read_text(path: &Path) -> Result<String, CorpusError> {
    fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus, CorpusError> {
    parse_corpus(&read_text(path.as_ref())?)
}
