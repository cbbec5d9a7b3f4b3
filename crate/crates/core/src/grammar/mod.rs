//! Clause-level context-free grammar over phrase labels.
//!
//! Sentences are parsed in three steps: [`fold_phrases`] merges head and
//! marker chunks into phrases, [`parse`] builds every derivation of the
//! phrase sequence with an Earley chart, and [`select_canonical`] picks the
//! preferred tree.

mod earley;
mod fold;
mod tree;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use earley::{parse, ParseForest};
pub use fold::{
    fold_phrases, parse_tag_sequence, sentence_phrases, FoldError, Phrase, PhraseLabel,
    TagSequenceError,
};
pub use tree::{
    parse_tree_text, relations, relations_line, render_tree, ParseNode, Span, TreeSyntaxError,
};

pub type SymbolId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("symbol {0} declared twice")]
    Duplicate(String),
    #[error("production for {lhs} references undeclared symbol {symbol}")]
    Undeclared { lhs: String, symbol: String },
    #[error("{0} is a terminal and cannot have productions")]
    TerminalLhs(String),
    #[error("start symbol {0} is not a nonterminal")]
    BadStart(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub lhs: SymbolId,
    pub rhs: Vec<SymbolId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Symbol {
    name: String,
    terminal: bool,
    /// Helper nonterminal whose node is spliced into its parent in trees.
    transparent: bool,
}

/// A grammar `<N, Σ, P, S>`. Production indices are stable and feed the
/// deterministic forest order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    symbols: Vec<Symbol>,
    productions: Vec<Production>,
    by_lhs: Vec<Vec<usize>>,
    nullable: Vec<bool>,
    start: SymbolId,
}

#[derive(Debug, Default)]
pub struct GrammarBuilder {
    symbols: Vec<Symbol>,
    rules: Vec<(String, Vec<String>)>,
}

impl GrammarBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn declare(mut self, name: &str, terminal: bool, transparent: bool) -> Self {
        self.symbols.push(Symbol {
            name: name.to_string(),
            terminal,
            transparent,
        });
        self
    }

    pub fn terminal(self, name: &str) -> Self {
        self.declare(name, true, false)
    }

    pub fn nonterminal(self, name: &str) -> Self {
        self.declare(name, false, false)
    }

    /// A nonterminal that does not appear as its own node in trees.
    pub fn helper(self, name: &str) -> Self {
        self.declare(name, false, true)
    }

    pub fn production(mut self, lhs: &str, rhs: &[&str]) -> Self {
        self.rules
            .push((lhs.to_string(), rhs.iter().map(|s| s.to_string()).collect()));
        self
    }

    pub fn build(self, start: &str) -> Result<Grammar, GrammarError> {
        let mut index = HashMap::new();
        for (i, s) in self.symbols.iter().enumerate() {
            if index.insert(s.name.clone(), i).is_some() {
                return Err(GrammarError::Duplicate(s.name.clone()));
            }
        }
        let lookup = |lhs: &str, name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| GrammarError::Undeclared {
                    lhs: lhs.to_string(),
                    symbol: name.to_string(),
                })
        };
        let mut productions = Vec::new();
        let mut by_lhs = vec![Vec::new(); self.symbols.len()];
        for (lhs, rhs) in &self.rules {
            let l = lookup(lhs, lhs)?;
            if self.symbols[l].terminal {
                return Err(GrammarError::TerminalLhs(lhs.clone()));
            }
            let rhs = rhs
                .iter()
                .map(|s| lookup(lhs, s))
                .collect::<Result<Vec<_>, _>>()?;
            by_lhs[l].push(productions.len());
            productions.push(Production { lhs: l, rhs });
        }
        let start = match index.get(start) {
            Some(&s) if !self.symbols[s].terminal => s,
            _ => return Err(GrammarError::BadStart(start.to_string())),
        };
        let nullable = compute_nullable(self.symbols.len(), &productions);
        Ok(Grammar {
            symbols: self.symbols,
            productions,
            by_lhs,
            nullable,
            start,
        })
    }
}

fn compute_nullable(n: usize, productions: &[Production]) -> Vec<bool> {
    let mut nullable = vec![false; n];
    loop {
        let mut changed = false;
        for p in productions {
            if !nullable[p.lhs] && p.rhs.iter().all(|&s| nullable[s]) {
                nullable[p.lhs] = true;
                changed = true;
            }
        }
        if !changed {
            return nullable;
        }
    }
}

impl Grammar {
    /// The clause grammar:
    ///
    /// ```text
    /// S    -> SS | CS
    /// SS   -> IC
    /// CS   -> Subj DC_N IC | DC_N IC | Subj DC_A IC | DC_A IC | Subj DC_S IC | DC_S IC
    /// DC_N -> IC CCP
    /// DC_A -> IC CCA
    /// DC_S -> IC CCS
    /// IC   -> Phrases Active
    /// Phrases -> ε | Subj Phrases | Obj Phrases | ... | Ada Phrases
    /// ```
    ///
    /// `Phrases` is a helper: in trees its phrases hang directly under IC.
    pub fn default_grammar() -> Grammar {
        let mut b = GrammarBuilder::new();
        for label in PhraseLabel::ALL {
            b = b.terminal(label.as_str());
        }
        for nt in ["S", "SS", "CS", "DC_N", "DC_A", "DC_S", "IC"] {
            b = b.nonterminal(nt);
        }
        b = b
            .helper("Phrases")
            .production("S", &["SS"])
            .production("S", &["CS"])
            .production("SS", &["IC"]);
        for dc in ["DC_N", "DC_A", "DC_S"] {
            b = b
                .production("CS", &["Subj", dc, "IC"])
                .production("CS", &[dc, "IC"]);
        }
        b = b
            .production("DC_N", &["IC", "CCP"])
            .production("DC_A", &["IC", "CCA"])
            .production("DC_S", &["IC", "CCS"])
            .production("IC", &["Phrases", "Active"])
            .production("Phrases", &[]);
        for label in PhraseLabel::CLAUSE_PHRASES {
            b = b.production("Phrases", &[label.as_str(), "Phrases"]);
        }
        b.build("S").expect("default grammar is well formed")
    }

    pub fn start(&self) -> SymbolId {
        self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn productions_of(&self, symbol: SymbolId) -> impl Iterator<Item = (usize, &Production)> {
        self.by_lhs[symbol]
            .iter()
            .map(|&i| (i, &self.productions[i]))
    }

    pub fn symbol(&self, name: &str) -> Option<SymbolId> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn name(&self, symbol: SymbolId) -> &str {
        &self.symbols[symbol].name
    }

    pub fn is_terminal(&self, symbol: SymbolId) -> bool {
        self.symbols[symbol].terminal
    }

    pub fn is_helper(&self, symbol: SymbolId) -> bool {
        self.symbols[symbol].transparent
    }

    pub fn is_nullable(&self, symbol: SymbolId) -> bool {
        self.nullable[symbol]
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols.len()
    }

    pub fn terminals(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.symbols.len()).filter(|&s| self.symbols[s].terminal)
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.productions {
            write!(f, "{} ->", self.name(p.lhs))?;
            if p.rhs.is_empty() {
                write!(f, " ε")?;
            }
            for &s in &p.rhs {
                write!(f, " {}", self.name(s))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no parse")]
pub struct NoParse;

/// The first tree of the forest's deterministic order.
pub fn select_canonical(forest: &ParseForest) -> Result<&ParseNode, NoParse> {
    forest.trees().first().ok_or(NoParse)
}
