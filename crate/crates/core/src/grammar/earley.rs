//! Earley chart parsing with full derivation enumeration.
//!
//! The recognizer handles ε-productions by advancing over nullable
//! nonterminals at prediction time. Trees are then read back top-down,
//! only descending into `(symbol, start, end)` spans the chart completed.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use super::fold::Phrase;
use super::tree::ParseNode;
use super::{Grammar, SymbolId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Item {
    prod: usize,
    dot: usize,
    origin: usize,
}

struct Chart {
    sets: Vec<Vec<Item>>,
    seen: Vec<HashSet<Item>>,
}

impl Chart {
    fn new(n: usize) -> Self {
        Chart {
            sets: vec![Vec::new(); n + 1],
            seen: vec![HashSet::new(); n + 1],
        }
    }

    fn add(&mut self, k: usize, item: Item) {
        if self.seen[k].insert(item) {
            self.sets[k].push(item);
        }
    }
}

fn recognize(g: &Grammar, input: &[Option<SymbolId>]) -> Chart {
    let n = input.len();
    let mut chart = Chart::new(n);
    for (p, _) in g.productions_of(g.start()) {
        chart.add(
            0,
            Item {
                prod: p,
                dot: 0,
                origin: 0,
            },
        );
    }
    for k in 0..=n {
        let mut i = 0;
        while i < chart.sets[k].len() {
            let item = chart.sets[k][i];
            i += 1;
            let prod = &g.productions()[item.prod];
            match prod.rhs.get(item.dot) {
                Some(&sym) if g.is_terminal(sym) => {
                    if input.get(k) == Some(&Some(sym)) {
                        chart.add(
                            k + 1,
                            Item {
                                dot: item.dot + 1,
                                ..item
                            },
                        );
                    }
                }
                Some(&sym) => {
                    for (q, _) in g.productions_of(sym) {
                        chart.add(
                            k,
                            Item {
                                prod: q,
                                dot: 0,
                                origin: k,
                            },
                        );
                    }
                    if g.is_nullable(sym) {
                        chart.add(
                            k,
                            Item {
                                dot: item.dot + 1,
                                ..item
                            },
                        );
                    }
                }
                None => {
                    let waiting: Vec<Item> = chart.sets[item.origin]
                        .iter()
                        .copied()
                        .filter(|w| g.productions()[w.prod].rhs.get(w.dot) == Some(&prod.lhs))
                        .collect();
                    for w in waiting {
                        chart.add(
                            k,
                            Item {
                                dot: w.dot + 1,
                                ..w
                            },
                        );
                    }
                }
            }
        }
    }
    chart
}

#[derive(Debug, Clone)]
enum Derivation {
    Leaf(usize),
    Node {
        prod: usize,
        children: Vec<Derivation>,
    },
}

impl Derivation {
    fn preorder_productions(&self, out: &mut Vec<usize>) {
        if let Derivation::Node { prod, children } = self {
            out.push(*prod);
            for c in children {
                c.preorder_productions(out);
            }
        }
    }
}

type SpanKey = (SymbolId, usize, usize);

struct Deriver<'a> {
    g: &'a Grammar,
    input: &'a [Option<SymbolId>],
    complete: HashSet<SpanKey>,
    memo: HashMap<SpanKey, Rc<Vec<Derivation>>>,
    active: HashSet<SpanKey>,
}

impl Deriver<'_> {
    fn derive(&mut self, sym: SymbolId, i: usize, j: usize) -> Rc<Vec<Derivation>> {
        let key = (sym, i, j);
        if let Some(found) = self.memo.get(&key) {
            return Rc::clone(found);
        }
        // Derivations through unit or ε cycles are infinite; skip them.
        if !self.active.insert(key) {
            return Rc::new(Vec::new());
        }
        let g = self.g;
        let mut out = Vec::new();
        for (p, prod) in g.productions_of(sym) {
            for children in self.sequences(&prod.rhs, i, j) {
                out.push(Derivation::Node { prod: p, children });
            }
        }
        self.active.remove(&key);
        let out = Rc::new(out);
        self.memo.insert(key, Rc::clone(&out));
        out
    }

    /// All ways `rhs` derives `input[pos..j]`.
    fn sequences(&mut self, rhs: &[SymbolId], pos: usize, j: usize) -> Vec<Vec<Derivation>> {
        let Some((&first, rest)) = rhs.split_first() else {
            return if pos == j {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        };
        let mut out = Vec::new();
        if self.g.is_terminal(first) {
            if pos < j && self.input[pos] == Some(first) {
                for mut tail in self.sequences(rest, pos + 1, j) {
                    tail.insert(0, Derivation::Leaf(pos));
                    out.push(tail);
                }
            }
            return out;
        }
        for end in pos..=j {
            if !self.complete.contains(&(first, pos, end)) {
                continue;
            }
            let heads = self.derive(first, pos, end);
            if heads.is_empty() {
                continue;
            }
            let tails = self.sequences(rest, end, j);
            for head in heads.iter() {
                for tail in &tails {
                    let mut seq = Vec::with_capacity(tail.len() + 1);
                    seq.push(head.clone());
                    seq.extend(tail.iter().cloned());
                    out.push(seq);
                }
            }
        }
        out
    }
}

struct TreeBuilder<'a> {
    g: &'a Grammar,
    phrases: &'a [Phrase],
    offsets: Vec<usize>,
}

impl TreeBuilder<'_> {
    /// Builds the nodes for `d` starting at phrase index `at`; helper
    /// nonterminals yield their children directly.
    fn build(&self, d: &Derivation, at: usize) -> (Vec<ParseNode>, usize) {
        match d {
            Derivation::Leaf(k) => {
                let p = &self.phrases[*k];
                (
                    vec![ParseNode::leaf(
                        p.label.as_str(),
                        self.offsets[*k],
                        p.parts.clone(),
                    )],
                    k + 1,
                )
            }
            Derivation::Node { prod, children } => {
                let lhs = self.g.productions()[*prod].lhs;
                let mut nodes = Vec::new();
                let mut pos = at;
                for c in children {
                    let (built, next) = self.build(c, pos);
                    nodes.extend(built);
                    pos = next;
                }
                if self.g.is_helper(lhs) {
                    (nodes, pos)
                } else {
                    (
                        vec![ParseNode::node(self.g.name(lhs), self.offsets[at], nodes)],
                        pos,
                    )
                }
            }
        }
    }
}

/// Every complete derivation of a phrase sequence, in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseForest {
    trees: Vec<ParseNode>,
}

impl ParseForest {
    pub fn trees(&self) -> &[ParseNode] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn into_trees(self) -> Vec<ParseNode> {
        self.trees
    }
}

/// Number of IC nodes holding two or more Subj phrases.
fn stacked_subjects(t: &ParseNode) -> usize {
    let here = usize::from(
        t.label == "IC"
            && t.children
                .iter()
                .filter(|c| c.is_leaf() && c.label == "Subj")
                .count()
                >= 2,
    );
    here + t.children.iter().map(stacked_subjects).sum::<usize>()
}

/// Whether a complex sentence attaches a Subj phrase at sentence level.
fn has_outer_subject(t: &ParseNode) -> bool {
    t.children.iter().any(|cs| {
        cs.label == "CS"
            && cs
                .children
                .first()
                .is_some_and(|c| c.is_leaf() && c.label == "Subj")
    })
}

/// Parses a phrase sequence. Trees are ordered by: fewest clauses holding
/// two Subj phrases, then subject inside the dependent clause before a
/// sentence-level subject, then the preorder sequence of production
/// indices. An input with no derivation yields an empty forest.
pub fn parse(phrases: &[Phrase], g: &Grammar) -> ParseForest {
    let input: Vec<Option<SymbolId>> = phrases
        .iter()
        .map(|p| g.symbol(p.label.as_str()).filter(|&s| g.is_terminal(s)))
        .collect();
    let n = input.len();
    let chart = recognize(g, &input);
    let mut complete = HashSet::new();
    for (k, set) in chart.sets.iter().enumerate() {
        for item in set {
            let prod = &g.productions()[item.prod];
            if item.dot == prod.rhs.len() {
                complete.insert((prod.lhs, item.origin, k));
            }
        }
    }
    if !complete.contains(&(g.start(), 0, n)) {
        return ParseForest::default();
    }
    let mut deriver = Deriver {
        g,
        input: &input,
        complete,
        memo: HashMap::new(),
        active: HashSet::new(),
    };
    let derivations = deriver.derive(g.start(), 0, n);

    let mut offsets = Vec::with_capacity(n + 1);
    let mut at = 0;
    for p in phrases {
        offsets.push(at);
        at += p.width();
    }
    offsets.push(at);
    let builder = TreeBuilder {
        g,
        phrases,
        offsets,
    };

    let mut keyed: Vec<_> = derivations
        .iter()
        .filter_map(|d| {
            let (mut nodes, _) = builder.build(d, 0);
            let tree = (nodes.len() == 1).then(|| nodes.remove(0))?;
            let mut prods = Vec::new();
            d.preorder_productions(&mut prods);
            Some((
                (stacked_subjects(&tree), has_outer_subject(&tree), prods),
                tree,
            ))
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    ParseForest {
        trees: keyed.into_iter().map(|(_, t)| t).collect(),
    }
}
