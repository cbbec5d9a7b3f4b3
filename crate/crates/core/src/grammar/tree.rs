//! Parse trees, their bracket notation, and grammatical-relation output.

use std::fmt;

use thiserror::Error;

/// Half-open interval of chunk indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.start, self.end)
    }
}

/// A node of a parse tree. Leaves are phrases and carry one surface per
/// chunk they cover; internal nodes carry none.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParseNode {
    pub label: String,
    pub span: Span,
    pub children: Vec<ParseNode>,
    pub parts: Vec<String>,
}

impl ParseNode {
    pub fn leaf(label: impl Into<String>, start: usize, parts: Vec<String>) -> Self {
        assert!(!parts.is_empty(), "a leaf covers at least one chunk");
        ParseNode {
            label: label.into(),
            span: Span::new(start, start + parts.len()),
            children: Vec::new(),
            parts,
        }
    }

    /// An internal node starting at `start` (used when `children` is empty).
    pub fn node(label: impl Into<String>, start: usize, children: Vec<ParseNode>) -> Self {
        let end = children.last().map_or(start, |c| c.span.end);
        let start = children.first().map_or(start, |c| c.span.start);
        ParseNode {
            label: label.into(),
            span: Span::new(start, end),
            children,
            parts: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        !self.parts.is_empty()
    }

    pub fn surface(&self) -> String {
        self.parts.concat()
    }

    /// Leaves in reading order.
    pub fn leaves(&self) -> Vec<&ParseNode> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a ParseNode>) {
        if self.is_leaf() {
            out.push(self);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    /// Leaf labels in reading order.
    pub fn fringe(&self) -> Vec<&str> {
        self.leaves()
            .into_iter()
            .map(|l| l.label.as_str())
            .collect()
    }

    /// Every node as a `(label, span)` pair, preorder.
    pub fn constituents(&self) -> Vec<(&str, Span)> {
        let mut out = vec![(self.label.as_str(), self.span)];
        for c in &self.children {
            out.extend(c.constituents());
        }
        out
    }

    /// Equality of labels, spans and shape; surfaces are ignored.
    pub fn same_structure(&self, other: &ParseNode) -> bool {
        self.label == other.label
            && self.span == other.span
            && self.is_leaf() == other.is_leaf()
            && self.children.len() == other.children.len()
            && self
                .children
                .iter()
                .zip(&other.children)
                .all(|(a, b)| a.same_structure(b))
    }

    /// Like [`same_structure`](Self::same_structure) but phrase (leaf)
    /// labels are ignored: only clause structure and spans must agree.
    pub fn same_skeleton(&self, other: &ParseNode) -> bool {
        if self.is_leaf() || other.is_leaf() {
            return self.is_leaf() && other.is_leaf() && self.span == other.span;
        }
        self.label == other.label
            && self.span == other.span
            && self.children.len() == other.children.len()
            && self
                .children
                .iter()
                .zip(&other.children)
                .all(|(a, b)| a.same_skeleton(b))
    }

    /// True when the tree covers `[0, chunks)` and every node's children
    /// partition its span in order.
    pub fn is_well_formed(&self, chunks: usize) -> bool {
        self.span == Span::new(0, chunks) && self.partitions()
    }

    fn partitions(&self) -> bool {
        if self.is_leaf() {
            return self.children.is_empty() && self.span.len() == self.parts.len();
        }
        let mut at = self.span.start;
        for c in &self.children {
            if c.span.start != at || !c.partitions() {
                return false;
            }
            at = c.span.end;
        }
        at == self.span.end
    }
}

impl fmt::Display for ParseNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return write!(f, "{}[{}]", self.label, self.parts.join("#"));
        }
        write!(f, "({}", self.label)?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

/// Bracketed notation: `(Label child ...)` with leaves as `Label[surface]`.
/// A leaf covering several chunks joins their surfaces with `#`.
pub fn render_tree(tree: &ParseNode) -> String {
    tree.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tree text offset {offset}: {message}")]
pub struct TreeSyntaxError {
    pub offset: usize,
    pub message: String,
}

struct TreeReader {
    chars: Vec<char>,
    pos: usize,
}

impl TreeReader {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, TreeSyntaxError> {
        Err(TreeSyntaxError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn label(&mut self) -> Result<String, TreeSyntaxError> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&c| !c.is_whitespace() && !"()[]".contains(c))
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a label");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn node(&mut self, start: usize) -> Result<ParseNode, TreeSyntaxError> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'(') {
            self.pos += 1;
            self.skip_ws();
            let label = self.label()?;
            let mut children = Vec::new();
            let mut at = start;
            loop {
                self.skip_ws();
                match self.chars.get(self.pos) {
                    Some(')') => {
                        self.pos += 1;
                        return Ok(ParseNode::node(label, start, children));
                    }
                    Some(_) => {
                        let child = self.node(at)?;
                        at = child.span.end;
                        children.push(child);
                    }
                    None => return self.err("unclosed '('"),
                }
            }
        }
        let label = self.label()?;
        if self.chars.get(self.pos) != Some(&'[') {
            return self.err("expected '[' after leaf label");
        }
        self.pos += 1;
        let text_start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| c != ']') {
            self.pos += 1;
        }
        if self.pos == self.chars.len() {
            return self.err("unclosed '['");
        }
        let text: String = self.chars[text_start..self.pos].iter().collect();
        self.pos += 1;
        let parts = text.split('#').map(str::to_string).collect();
        Ok(ParseNode::leaf(label, start, parts))
    }
}

/// Reads the notation written by [`render_tree`], recomputing spans.
pub fn parse_tree_text(text: &str) -> Result<ParseNode, TreeSyntaxError> {
    let mut reader = TreeReader {
        chars: text.chars().collect(),
        pos: 0,
    };
    let tree = reader.node(0)?;
    reader.skip_ws();
    if reader.pos != reader.chars.len() {
        return reader.err("trailing text after tree");
    }
    Ok(tree)
}

/// Phrase surfaces with their labels, in reading order.
pub fn relations(tree: &ParseNode) -> Vec<(String, String)> {
    tree.leaves()
        .into_iter()
        .map(|l| (l.surface(), l.label.clone()))
        .collect()
}

/// `surface#Label surface#Label ...`
pub fn relations_line(tree: &ParseNode) -> String {
    relations(tree)
        .iter()
        .map(|(s, l)| format!("{s}#{l}"))
        .collect::<Vec<_>>()
        .join(" ")
}
