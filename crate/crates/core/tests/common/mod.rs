//! Fixtures and independent oracles shared by the integration tests and
//! the acceptance runner.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use mmgr::{
    parse_corpus, AnnotatedSentence, Chunk, ChunkType, Corpus, FunctionTag, Pos, PosTag,
    TaggingState, Token, TransformationRule, Trigger, TriggerKind, UntaggedChunk,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Figure {
    pub name: &'static str,
    pub sequence: &'static str,
    pub golden: &'static str,
}

pub const FIGURES: [Figure; 5] = [
    Figure {
        name: "fig4",
        sequence: "PSubj[သူ]# SubjP[သည်]# PObj[စာအုပ်]# ObjP[ကို] # PIobj[ဆရာ့] # IobjP[အား]# Active[ပေးသည်]",
        golden: include_str!("../golden/fig4.tree"),
    },
    Figure {
        name: "fig5",
        sequence: "Subj[ကလေးများ]# PPla[သစ်ပင်] # PlaP[အောက်တွင်]# Active[ကစားနေသည်]# CCP[ကို]# Subj[ကျွန်တော်]# Active[မြင်သည်]",
        golden: include_str!("../golden/fig5.tree"),
    },
    Figure {
        name: "fig6",
        sequence: "Subj[ကျွန်တော်]#Active[ဖတ်နေ]#CCA[သော]#PObj[စာအုပ်]#ObjP[ကို]#Subj[အဖေ]#Active[ဝယ်ခဲ့သည်]",
        golden: include_str!("../golden/fig6.tree"),
    },
    Figure {
        name: "fig7",
        sequence: "Subj[မောင်မောင်]#Active[ကြိုးစား]#CCS[သောကြောင့်]#Obj[ဂုဏ်ထူး]#Active[ရသည်]",
        golden: include_str!("../golden/fig7.tree"),
    },
    Figure {
        name: "fig8",
        sequence: "PSubj[မောင်ဘ]#SubjP[က]#Subj[ကျွန်တော်]#Active[စာကျက်နေသည်] #CCP[ဟု] #Active[ပြောသည်]",
        golden: include_str!("../golden/fig8.tree"),
    },
];

pub const FIG2: &str = "VC@Active[မိုးရွာ/v.common] #CC@CCS[လျှင်/cc.sent] # NC@Subj \
    [ကလေး/n.person,မှား/part.number] # NC@PPla[လမ်း/n.location] # \
    PPC@PlaP[ပေါ်တွင်/ppm.place] # NC@Obj[ဘေးလုံး/n.objects] # \
    VC@Active[ကန်ကြဲ/verb.common]# SFC@Null[သည်/sf.declarative]။";

pub const FIG2_CANONICAL: &str = "VC@Active[မိုးရွာ/v.common]#CC@CCS[လျှင်/cc.sent]#\
    NC@Subj[ကလေး/n.person,မှား/part.number]#NC@PPla[လမ်း/n.location]#\
    PPC@PlaP[ပေါ်တွင်/ppm.place]#NC@Obj[ဘေးလုံး/n.objects]#\
    VC@Active[ကန်ကြဲ/v.common]#SFC@Null[သည်/sf.declarative]။";

// ---------------------------------------------------------------------
// Random valid sentences

const SURFACE_CHARS: &[char] = &[
    'က', 'ခ', 'ဂ', 'င', 'စ', 'ည', 'တ', 'ထ', 'ဒ', 'န', 'ပ', 'ဖ', 'ဗ', 'မ', 'ယ', 'ရ', 'လ', 'သ', 'ဟ',
    'အ', 'ာ', 'ိ', 'ီ', 'ု', 'ူ', 'ေ', 'ဲ', 'ံ', '့', 'း', '်', 'ျ', 'ြ', 'ွ', 'ှ', '၁', '၂', 'a', 'Z', '7',
    '@', '.', '%', '-', '။',
];

fn random_surface(rng: &mut StdRng) -> String {
    let len = rng.gen_range(1..=6);
    let mut s: String = (0..len)
        .map(|_| *SURFACE_CHARS.choose(rng).unwrap())
        .collect();
    if rng.gen_bool(0.1) {
        // internal whitespace is allowed, edges are not
        s.insert(s.chars().next().unwrap().len_utf8(), ' ');
        s.push('x');
    }
    s
}

fn random_pos(rng: &mut StdRng) -> PosTag {
    let pos = *Pos::ALL.choose(rng).unwrap();
    let category = if rng.gen_bool(0.8) {
        pos.known_categories().choose(rng).unwrap().to_string()
    } else {
        ["zz", "x.y", "unk@1", "ကက"]
            .choose(rng)
            .unwrap()
            .to_string()
    };
    PosTag::new(pos, category).unwrap()
}

fn random_chunk(rng: &mut StdRng, chunk_type: ChunkType, tag: FunctionTag) -> Chunk {
    let tokens = (0..rng.gen_range(1..=3))
        .map(|_| Token::new(random_surface(rng), random_pos(rng)).unwrap())
        .collect();
    UntaggedChunk::new(chunk_type, tokens)
        .unwrap()
        .tagged(tag)
        .unwrap()
}

/// A random sentence satisfying every corpus invariant.
pub fn random_sentence(rng: &mut StdRng) -> AnnotatedSentence {
    let non_sfc: Vec<ChunkType> = ChunkType::ALL
        .iter()
        .copied()
        .filter(|&c| c != ChunkType::SFC)
        .collect();
    let tags: Vec<FunctionTag> = FunctionTag::ALL
        .iter()
        .copied()
        .filter(|&t| t != FunctionTag::Null)
        .collect();
    let n = rng.gen_range(1..=10);
    let mut chunks: Vec<Chunk> = (0..n)
        .map(|_| {
            let ct = *non_sfc.choose(rng).unwrap();
            let tag = *tags.choose(rng).unwrap();
            random_chunk(rng, ct, tag)
        })
        .collect();
    if rng.gen_bool(0.5) {
        chunks.push(random_chunk(rng, ChunkType::SFC, FunctionTag::Null));
    }
    AnnotatedSentence::new(chunks, rng.gen_bool(0.7)).unwrap()
}

// ---------------------------------------------------------------------
// Baseline oracle: posteriors recounted directly from the corpus

pub fn chunk_features(chunk: &UntaggedChunk) -> [String; 3] {
    let pos: Vec<String> = chunk
        .tokens()
        .iter()
        .map(|t| format!("{}.{}", t.pos.pos.as_str(), t.pos.category))
        .collect();
    let surface: String = chunk.tokens().iter().map(Token::surface).collect();
    [
        chunk.chunk_type.as_str().to_string(),
        surface,
        pos.join("+"),
    ]
}

/// Log score of every tag seen in `corpus` for `query`, recounting from
/// scratch with add-one smoothing.
pub fn brute_posterior(corpus: &Corpus, query: &UntaggedChunk) -> BTreeMap<FunctionTag, f64> {
    let rows: Vec<([String; 3], FunctionTag)> = corpus
        .iter()
        .flat_map(|s| s.chunks().iter())
        .map(|c| (chunk_features(c.untagged()), c.tag()))
        .collect();
    let q = chunk_features(query);
    let total = rows.len() as f64;
    let tags: BTreeSet<FunctionTag> = rows.iter().map(|(_, t)| *t).collect();
    let mut out = BTreeMap::new();
    for tag in tags {
        let n_t = rows.iter().filter(|(_, t)| *t == tag).count() as f64;
        let mut score = (n_t / total).ln();
        for k in 0..3 {
            let vocab = rows
                .iter()
                .map(|(f, _)| &f[k])
                .collect::<HashSet<_>>()
                .len() as f64;
            let c = rows
                .iter()
                .filter(|(f, t)| *t == tag && f[k] == q[k])
                .count() as f64;
            score += ((c + 1.0) / (n_t + vocab + 1.0)).ln();
        }
        out.insert(tag, score);
    }
    out
}

/// Argmax over non-Null tags, earliest tag winning ties.
pub fn brute_argmax(scores: &BTreeMap<FunctionTag, f64>) -> Option<FunctionTag> {
    let mut best: Option<(FunctionTag, f64)> = None;
    for (&t, &s) in scores {
        if t == FunctionTag::Null {
            continue;
        }
        match best {
            Some((_, b)) if b >= s => {}
            _ => best = Some((t, s)),
        }
    }
    best.map(|(t, _)| t)
}

// ---------------------------------------------------------------------
// TBL oracle: exhaustive rule space, rescored from scratch every round

fn tag_at(tags: &[FunctionTag], i: usize, d: isize) -> Option<FunctionTag> {
    let j = i as isize + d;
    (j >= 0).then(|| tags.get(j as usize).copied()).flatten()
}

fn oracle_fires(trigger: &Trigger, tags: &[FunctionTag], words: &[String], i: usize) -> bool {
    let word_at = |d: isize| {
        let j = i as isize + d;
        if j < 0 {
            None
        } else {
            words.get(j as usize).map(String::as_str)
        }
    };
    match trigger {
        Trigger::NextTag(a) => tag_at(tags, i, 1) == Some(*a),
        Trigger::PrevTag(a) => tag_at(tags, i, -1) == Some(*a),
        Trigger::TagAt2And4(a, b) => {
            tag_at(tags, i, 2) == Some(*a) && tag_at(tags, i, 4) == Some(*b)
        }
        Trigger::TagAt245(a, b, c) => {
            tag_at(tags, i, 2) == Some(*a)
                && tag_at(tags, i, 4) == Some(*b)
                && tag_at(tags, i, 5) == Some(*c)
        }
        Trigger::NextWord(w) => word_at(1) == Some(w.as_str()),
        Trigger::PrevWord(w) => word_at(-1) == Some(w.as_str()),
    }
}

/// Simultaneous application: every firing decision reads `tags` as given.
pub fn oracle_apply(
    source: FunctionTag,
    target: FunctionTag,
    trigger: &Trigger,
    tags: &[FunctionTag],
    words: &[String],
) -> Vec<FunctionTag> {
    (0..tags.len())
        .map(|i| {
            if tags[i] == source && oracle_fires(trigger, tags, words, i) {
                target
            } else {
                tags[i]
            }
        })
        .collect()
}

fn all_triggers(kind: TriggerKind, tags: &[FunctionTag], words: &[String]) -> Vec<Trigger> {
    let mut out = Vec::new();
    match kind {
        TriggerKind::NextTag => out.extend(tags.iter().map(|&a| Trigger::NextTag(a))),
        TriggerKind::PrevTag => out.extend(tags.iter().map(|&a| Trigger::PrevTag(a))),
        TriggerKind::TagAt2And4 => {
            for &a in tags {
                for &b in tags {
                    out.push(Trigger::TagAt2And4(a, b));
                }
            }
        }
        TriggerKind::TagAt245 => {
            for &a in tags {
                for &b in tags {
                    for &c in tags {
                        out.push(Trigger::TagAt245(a, b, c));
                    }
                }
            }
        }
        TriggerKind::NextWord => out.extend(words.iter().map(|w| Trigger::NextWord(w.clone()))),
        TriggerKind::PrevWord => out.extend(words.iter().map(|w| Trigger::PrevWord(w.clone()))),
    }
    out
}

/// Tie-break key: template kind in listed order, then source, target, and
/// trigger arguments.
fn oracle_key(
    kind_rank: usize,
    source: FunctionTag,
    target: FunctionTag,
    trigger: &Trigger,
) -> (usize, FunctionTag, FunctionTag, Vec<FunctionTag>, String) {
    let (args, word) = match trigger {
        Trigger::NextTag(a) | Trigger::PrevTag(a) => (vec![*a], String::new()),
        Trigger::TagAt2And4(a, b) => (vec![*a, *b], String::new()),
        Trigger::TagAt245(a, b, c) => (vec![*a, *b, *c], String::new()),
        Trigger::NextWord(w) | Trigger::PrevWord(w) => (Vec::new(), w.clone()),
    };
    (kind_rank, source, target, args, word)
}

pub struct OracleRule {
    pub source: FunctionTag,
    pub target: FunctionTag,
    pub trigger: Trigger,
    pub gain: i64,
}

/// Greedy learning by brute force: every rule over the tags and words in
/// play is rescored against the whole corpus each round. Rules that fire
/// nowhere have gain 0 and are skipped.
pub fn brute_force_greedy(
    mut tags: Vec<Vec<FunctionTag>>,
    words: &[Vec<String>],
    gold: &[Vec<FunctionTag>],
    kinds: &[TriggerKind],
    min_gain: i64,
) -> Vec<OracleRule> {
    const KIND_ORDER: [TriggerKind; 6] = [
        TriggerKind::NextTag,
        TriggerKind::PrevTag,
        TriggerKind::TagAt2And4,
        TriggerKind::TagAt245,
        TriggerKind::NextWord,
        TriggerKind::PrevWord,
    ];
    let vocab: Vec<String> = words
        .iter()
        .flatten()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut learned = Vec::new();
    loop {
        let in_play: Vec<FunctionTag> = tags
            .iter()
            .chain(gold)
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut by_tag: BTreeMap<FunctionTag, Vec<(usize, usize)>> = BTreeMap::new();
        for (k, t) in tags.iter().enumerate() {
            for (i, &tag) in t.iter().enumerate() {
                by_tag.entry(tag).or_default().push((k, i));
            }
        }
        let mut best: Option<(i64, _, OracleRule)> = None;
        for (rank, kind) in KIND_ORDER.iter().enumerate() {
            if !kinds.contains(kind) {
                continue;
            }
            for trigger in all_triggers(*kind, &in_play, &vocab) {
                for (&source, positions) in &by_tag {
                    // gold tags where the rule would retag, judged on the
                    // unmodified tags
                    let fired: Vec<FunctionTag> = positions
                        .iter()
                        .filter(|&&(k, i)| oracle_fires(&trigger, &tags[k], &words[k], i))
                        .map(|&(k, i)| gold[k][i])
                        .collect();
                    if fired.is_empty() {
                        continue;
                    }
                    for &target in &in_play {
                        if source == target {
                            continue;
                        }
                        let fixed = fired.iter().filter(|&&g| g == target).count() as i64;
                        let broken = fired.iter().filter(|&&g| g == source).count() as i64;
                        let gain = fixed - broken;
                        let key = oracle_key(rank, source, target, &trigger);
                        let better = match &best {
                            None => true,
                            Some((g, k, _)) => gain > *g || (gain == *g && key < *k),
                        };
                        if better {
                            best = Some((
                                gain,
                                key,
                                OracleRule {
                                    source,
                                    target,
                                    trigger: trigger.clone(),
                                    gain,
                                },
                            ));
                        }
                    }
                }
            }
        }
        match best {
            Some((gain, _, rule)) if gain >= min_gain => {
                tags = tags
                    .iter()
                    .zip(words)
                    .map(|(t, w)| oracle_apply(rule.source, rule.target, &rule.trigger, t, w))
                    .collect();
                learned.push(rule);
            }
            _ => return learned,
        }
    }
}

pub fn same_rules(ours: &[TransformationRule], oracle: &[OracleRule]) -> bool {
    ours.len() == oracle.len()
        && ours.iter().zip(oracle).all(|(r, o)| {
            r.source() == o.source && r.target() == o.target && r.trigger() == &o.trigger
        })
}

// ---------------------------------------------------------------------
// Planted-error tagging problems

const NOUNS: [&str; 5] = ["ကလေး", "ဆရာ", "မိုး", "စာ", "အဖေ"];

/// Gold tags and an initial tagging that systematically repeats the
/// Table-3 style mistakes, plus sparse random noise. At most `max_chunks`
/// chunks in total.
pub fn planted_problem(
    rng: &mut StdRng,
    max_chunks: usize,
) -> (Vec<TaggingState>, Vec<Vec<FunctionTag>>) {
    use FunctionTag::*;
    let mut states = Vec::new();
    let mut gold = Vec::new();
    let mut used = 0;
    loop {
        let mut g: Vec<(FunctionTag, String)> = Vec::new();
        let mut init: Vec<FunctionTag> = Vec::new();
        let mut push = |g: &mut Vec<(FunctionTag, String)>, gold_tag, init_tag, w: &str| {
            g.push((gold_tag, w.to_string()));
            init.push(init_tag);
        };
        for _ in 0..rng.gen_range(1..=3) {
            let noun = *NOUNS.choose(rng).unwrap();
            match rng.gen_range(0..6) {
                0 => {
                    push(&mut g, PCau, Cau, noun);
                    push(&mut g, CauP, CauP, "ကြောင့်");
                }
                1 => {
                    push(&mut g, PcomplS, Subj, noun);
                    push(&mut g, Active, Active, "ဖြစ်သည်");
                }
                2 => {
                    push(&mut g, PSubj, PSubj, noun);
                    push(&mut g, SubjP, SubjP, "သည်");
                }
                3 => {
                    push(&mut g, Subj, Obj, noun);
                    push(&mut g, Tim, Tim, "ယနေ့");
                    push(&mut g, CCC, CCC, "နှင့်");
                    push(&mut g, Obj, Obj, noun);
                    push(&mut g, Active, Active, "ပြောသည်");
                }
                4 => push(&mut g, Obj, Obj, noun),
                _ => push(&mut g, Pla, Pla, "အိမ်မှာ"),
            }
        }
        push(&mut g, Active, Active, "သွားသည်");
        for t in init.iter_mut() {
            if rng.gen_bool(0.04) {
                *t = *[Subj, Obj, Pla, Tim].choose(rng).unwrap();
            }
        }
        if used + g.len() > max_chunks {
            break;
        }
        used += g.len();
        let (gt, words): (Vec<FunctionTag>, Vec<String>) = g.into_iter().unzip();
        states.push(TaggingState::new(init, words));
        gold.push(gt);
    }
    (states, gold)
}

/// A corpus whose only ambiguity is `မိုး`, tagged `PSubj` before `သည်`
/// and `PCau` before `ကြောင့်`. With `contextual == false` the cause
/// reading uses its own surface, so every chunk is unambiguous.
pub fn planted_corpus(rng: &mut StdRng, sentences: usize, contextual: bool) -> Corpus {
    let mut lines = Vec::new();
    for _ in 0..sentences {
        let mut parts: Vec<String> = Vec::new();
        if rng.gen_bool(0.6) {
            parts.push("NC@PSubj[မိုး/n.common]".into());
            parts.push("PPC@SubjP[သည်/ppm.subj]".into());
        } else {
            let head = if contextual {
                "မိုး"
            } else {
                "မိုးသက်"
            };
            parts.push(format!("NC@PCau[{head}/n.common]"));
            parts.push("PPC@CauP[ကြောင့်/ppm.cause]".into());
            parts.push(format!(
                "NC@Subj[{}/n.person]",
                ["ကလေး", "ဆရာ", "အဖေ"].choose(rng).unwrap()
            ));
        }
        if rng.gen_bool(0.5) {
            parts.push("NC@Obj[စာ/n.objects]".into());
        }
        parts.push(format!(
            "VC@Active[{}/v.common]",
            ["ရွာသည်", "နေသည်", "ဖတ်သည်"].choose(rng).unwrap()
        ));
        parts.push("SFC@Null[ပါ/sf.declarative]".into());
        lines.push(format!("{}။", parts.join("#")));
    }
    parse_corpus(&lines.join("\n")).unwrap()
}

pub fn split_halves(corpus: &Corpus) -> (Corpus, Corpus) {
    let mut train = Corpus::default();
    let mut test = Corpus::default();
    for (i, s) in corpus.sentences.iter().enumerate() {
        if i % 2 == 0 {
            train.push(s.clone(), corpus.lines[i]);
        } else {
            test.push(s.clone(), corpus.lines[i]);
        }
    }
    (train, test)
}

// ---------------------------------------------------------------------
// Grammar membership oracle

/// The clause grammar restricted to productions whose terminals lie in
/// {Subj, Obj, Active, CCS, CCP}, transcribed independently of the crate.
const REDUCED_GRAMMAR: &[(&str, &[&str])] = &[
    ("S", &["SS"]),
    ("S", &["CS"]),
    ("SS", &["IC"]),
    ("CS", &["Subj", "DC_N", "IC"]),
    ("CS", &["DC_N", "IC"]),
    ("CS", &["Subj", "DC_S", "IC"]),
    ("CS", &["DC_S", "IC"]),
    ("DC_N", &["IC", "CCP"]),
    ("DC_S", &["IC", "CCS"]),
    ("IC", &["Phrases", "Active"]),
    ("Phrases", &[]),
    ("Phrases", &["Subj", "Phrases"]),
    ("Phrases", &["Obj", "Phrases"]),
];

pub const REDUCED_ALPHABET: [&str; 5] = ["Subj", "Obj", "Active", "CCS", "CCP"];

fn is_nonterminal(sym: &str) -> bool {
    REDUCED_GRAMMAR.iter().any(|(lhs, _)| *lhs == sym)
}

/// Every terminal string of length at most `max_len` derivable from S,
/// found by breadth-first leftmost expansion of sentential forms.
pub fn derivable_strings(max_len: usize) -> HashSet<Vec<&'static str>> {
    let min_yield = |form: &[&str]| form.iter().filter(|s| **s != "Phrases").count();
    let mut seen: HashSet<Vec<&'static str>> = HashSet::new();
    let mut out = HashSet::new();
    let mut queue = VecDeque::from([vec!["S"]]);
    while let Some(form) = queue.pop_front() {
        let Some(pos) = form.iter().position(|s| is_nonterminal(s)) else {
            out.insert(form);
            continue;
        };
        for (lhs, rhs) in REDUCED_GRAMMAR {
            if *lhs != form[pos] {
                continue;
            }
            let mut next = form[..pos].to_vec();
            next.extend_from_slice(rhs);
            next.extend_from_slice(&form[pos + 1..]);
            if min_yield(&next) <= max_len && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    out
}

/// Every sequence over the reduced alphabet with length `0..=max_len`.
pub fn all_sequences(max_len: usize) -> Vec<Vec<&'static str>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<&'static str>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| {
                REDUCED_ALPHABET.iter().map(move |a| {
                    let mut n = s.clone();
                    n.push(*a);
                    n
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

// ---------------------------------------------------------------------
// Confusion tally oracle

pub fn brute_tally(pairs: &[(FunctionTag, FunctionTag)]) -> Vec<(FunctionTag, FunctionTag, usize)> {
    let mut distinct: Vec<(FunctionTag, FunctionTag)> = Vec::new();
    for &p in pairs {
        if p.0 != p.1 && !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    let mut rows: Vec<(FunctionTag, FunctionTag, usize)> = distinct
        .into_iter()
        .map(|(g, s)| (g, s, pairs.iter().filter(|&&p| p == (g, s)).count()))
        .collect();
    // count descending, then gold and system in tagset order
    rows.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
    rows
}

pub const TABLE4: [(FunctionTag, FunctionTag, usize); 9] = {
    use FunctionTag::*;
    [
        (PcomplS, Subj, 133),
        (PcomplS, Obj, 108),
        (PcomplS, Pla, 52),
        (PcomplS, Tim, 24),
        (PSubj, Subj, 28),
        (PObj, Obj, 37),
        (PTim, Tim, 23),
        (PPla, Pla, 18),
        (Subj, Obj, 54),
    ]
};

/// Expands Table 4's rows into a shuffled pair list, padded with correct
/// pairs that a tally must ignore.
pub fn table4_pairs(rng: &mut StdRng) -> Vec<(FunctionTag, FunctionTag)> {
    let mut pairs: Vec<(FunctionTag, FunctionTag)> = TABLE4
        .iter()
        .flat_map(|&(g, s, n)| std::iter::repeat_n((g, s), n))
        .collect();
    pairs.extend(std::iter::repeat_n(
        (FunctionTag::Subj, FunctionTag::Subj),
        300,
    ));
    pairs.shuffle(rng);
    pairs
}

pub fn random_pairs(rng: &mut StdRng, n: usize) -> Vec<(FunctionTag, FunctionTag)> {
    use FunctionTag::*;
    let pool = [Subj, Obj, PSubj, Pla, Tim, PcomplS, Active];
    (0..n)
        .map(|_| (*pool.choose(rng).unwrap(), *pool.choose(rng).unwrap()))
        .collect()
}

// ---------------------------------------------------------------------
// Scored sentences reproducing the per-type totals of the results table

pub const FIG4_LINE: &str =
    "NC@PSubj[သူ/pron.person]#PPC@SubjP[သည်/ppm.subj]#NC@PObj[စာအုပ်/n.objects]#\
    PPC@ObjP[ကို/ppm.obj]#NC@PIobj[ဆရာ့/n.person]#PPC@IobjP[အား/ppm.accept]#VC@Active[ပေးသည်/v.common]";

pub const FIG8_LINE: &str =
    "NC@PSubj[မောင်ဘ/n.person]#PPC@SubjP[က/ppm.subj]#NC@Subj[ကျွန်တော်/pron.person]#\
    VC@Active[စာကျက်နေသည်/v.common]#CC@CCP[ဟု/cc.chunk]#VC@Active[ပြောသည်/v.common]";

/// The inner-subject reading of the Fig 8 sequence.
pub const FIG8_INNER_TREE: &str =
    "(S (CS (DC_N (IC Subj[မောင်ဘ#က] Subj[ကျွန်တော်] Active[စာကျက်နေသည်]) CCP[ဟု]) (IC Active[ပြောသည်])))";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// System equals gold.
    Exact,
    /// One head tag wrong, tree partly right.
    MostlyTagged,
    /// Phrase labels permuted, clause structure right.
    RightStructure,
    /// Tags right, gold tree is the other reading.
    WrongRelations,
    /// Final verb mistagged, no parse.
    NoParse,
}

impl Variant {
    pub fn expected_score(self) -> mmgr::eval::Score {
        use mmgr::eval::Score;
        match self {
            Variant::Exact => Score::from_integer(3),
            Variant::MostlyTagged => Score::from_integer(2),
            Variant::RightStructure => Score::new(3, 2),
            Variant::WrongRelations => Score::from_integer(1),
            Variant::NoParse => Score::from_integer(0),
        }
    }
}

pub struct EvalCase {
    pub system: AnnotatedSentence,
    pub gold: AnnotatedSentence,
    /// Gold tree override; `None` means the canonical parse of `gold`.
    pub gold_tree: Option<&'static str>,
}

pub fn eval_case(v: Variant) -> EvalCase {
    use FunctionTag::*;
    let fig4 = mmgr::parse_corpus_line(FIG4_LINE).unwrap();
    let fig8 = mmgr::parse_corpus_line(FIG8_LINE).unwrap();
    let retag = |s: &AnnotatedSentence, tags: &[FunctionTag]| s.with_tags(tags).unwrap();
    match v {
        Variant::Exact => EvalCase {
            system: fig4.clone(),
            gold: fig4,
            gold_tree: None,
        },
        Variant::MostlyTagged => EvalCase {
            system: retag(&fig8, &[PSubj, SubjP, Obj, Active, CCP, Active]),
            gold: fig8,
            gold_tree: None,
        },
        Variant::RightStructure => EvalCase {
            system: retag(&fig4, &[PObj, ObjP, PSubj, SubjP, PTim, TimP, Active]),
            gold: fig4,
            gold_tree: None,
        },
        Variant::WrongRelations => EvalCase {
            system: fig8.clone(),
            gold: fig8,
            gold_tree: Some(FIG8_INNER_TREE),
        },
        Variant::NoParse => EvalCase {
            system: retag(&fig4, &[PSubj, SubjP, PObj, ObjP, PIobj, IobjP, Subj]),
            gold: fig4,
            gold_tree: None,
        },
    }
}

/// `(type, n, total)` rows of the results table.
pub const TABLE6: [(mmgr::eval::SentenceType, usize, i64, i64); 5] = {
    use mmgr::eval::SentenceType::*;
    [
        (Simple, 65, 184, 1),
        (ComplexNounDc, 54, 141, 1),
        (ComplexAdjDc, 37, 193, 2),
        (ComplexAdvDc, 44, 121, 1),
        (ComplicatedComplex, 29, 119, 2),
    ]
};

pub const TABLE6_PERCENT: [&str; 6] = ["94.36", "87.04", "86.94", "91.67", "68.39", "87.63"];

/// 229 sentences whose per-type score totals are those of [`TABLE6`].
pub fn table6_fixture() -> Vec<(mmgr::eval::SentenceType, Variant)> {
    use mmgr::eval::SentenceType::*;
    use Variant::*;
    let plan: [(mmgr::eval::SentenceType, &[(Variant, usize)]); 5] = [
        (Simple, &[(Exact, 61), (WrongRelations, 1), (NoParse, 3)]),
        (ComplexNounDc, &[(Exact, 47), (NoParse, 7)]),
        (
            ComplexAdjDc,
            &[
                (Exact, 31),
                (MostlyTagged, 1),
                (RightStructure, 1),
                (NoParse, 4),
            ],
        ),
        (
            ComplexAdvDc,
            &[(Exact, 40), (WrongRelations, 1), (NoParse, 3)],
        ),
        (
            ComplicatedComplex,
            &[
                (Exact, 19),
                (RightStructure, 1),
                (WrongRelations, 1),
                (NoParse, 8),
            ],
        ),
    ];
    plan.iter()
        .flat_map(|(t, parts)| {
            parts
                .iter()
                .flat_map(move |&(v, n)| std::iter::repeat_n((*t, v), n))
        })
        .collect()
}
