//! Transformation-based learning of function-tag corrections.
//!
//! A [`TransformationRule`] rewrites `source` to `target` wherever its
//! [`Trigger`] holds. Rule application is simultaneous: every trigger is
//! evaluated against the tags as they were before the rule was applied.
//!
//! [`learn`] is the usual greedy error-driven loop. Candidates are
//! instantiated from the templates at every currently-wrong position, the
//! candidate with the highest net gain is accepted and applied, and the
//! loop stops once no candidate reaches `min_gain`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::corpus::{AnnotatedSentence, Corpus};
use crate::tagset::FunctionTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TblError {
    #[error("rule rewrites {0} to itself")]
    VacuousRule(FunctionTag),
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("no trigger templates selected")]
    NoTemplates,
    #[error("sentence {sentence}: {current} current tags but {gold} gold tags")]
    Misaligned {
        sentence: usize,
        current: usize,
        gold: usize,
    },
    #[error("{states} states but {gold} gold sentences")]
    CountMismatch { states: usize, gold: usize },
    #[error("line {line}: {message}")]
    RuleSyntax { line: usize, message: String },
}

/// Template kinds, in tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriggerKind {
    NextTag,
    PrevTag,
    TagAt2And4,
    TagAt245,
    NextWord,
    PrevWord,
}

impl TriggerKind {
    pub const ALL: [TriggerKind; 6] = [
        TriggerKind::NextTag,
        TriggerKind::PrevTag,
        TriggerKind::TagAt2And4,
        TriggerKind::TagAt245,
        TriggerKind::NextWord,
        TriggerKind::PrevWord,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TriggerKind::NextTag => "NEXT_TAG",
            TriggerKind::PrevTag => "PREV_TAG",
            TriggerKind::TagAt2And4 => "TAG_AT_2_AND_4",
            TriggerKind::TagAt245 => "TAG_AT_2_4_5",
            TriggerKind::NextWord => "NEXT_WORD",
            TriggerKind::PrevWord => "PREV_WORD",
        }
    }

    /// Relative positions the trigger inspects.
    pub fn offsets(self) -> &'static [isize] {
        match self {
            TriggerKind::NextTag | TriggerKind::NextWord => &[1],
            TriggerKind::PrevTag | TriggerKind::PrevWord => &[-1],
            TriggerKind::TagAt2And4 => &[2, 4],
            TriggerKind::TagAt245 => &[2, 4, 5],
        }
    }

    pub fn is_lexical(self) -> bool {
        matches!(self, TriggerKind::NextWord | TriggerKind::PrevWord)
    }
}

impl fmt::Display for TriggerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TriggerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TriggerKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown trigger kind {s}"))
    }
}

/// A triggering environment. The derived order (kind first, then
/// arguments in tagset or lexicographic order) is the tie-break order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trigger {
    NextTag(FunctionTag),
    PrevTag(FunctionTag),
    TagAt2And4(FunctionTag, FunctionTag),
    TagAt245(FunctionTag, FunctionTag, FunctionTag),
    NextWord(String),
    PrevWord(String),
}

impl Trigger {
    pub fn kind(&self) -> TriggerKind {
        match self {
            Trigger::NextTag(_) => TriggerKind::NextTag,
            Trigger::PrevTag(_) => TriggerKind::PrevTag,
            Trigger::TagAt2And4(..) => TriggerKind::TagAt2And4,
            Trigger::TagAt245(..) => TriggerKind::TagAt245,
            Trigger::NextWord(_) => TriggerKind::NextWord,
            Trigger::PrevWord(_) => TriggerKind::PrevWord,
        }
    }

    pub fn matches(&self, state: &TaggingState, i: usize) -> bool {
        let tag_at = |d: isize| state.tag_at(i, d);
        let word_at = |d: isize| state.surface_at(i, d);
        match self {
            Trigger::NextTag(t) => tag_at(1) == Some(*t),
            Trigger::PrevTag(t) => tag_at(-1) == Some(*t),
            Trigger::TagAt2And4(a, b) => tag_at(2) == Some(*a) && tag_at(4) == Some(*b),
            Trigger::TagAt245(a, b, c) => {
                tag_at(2) == Some(*a) && tag_at(4) == Some(*b) && tag_at(5) == Some(*c)
            }
            Trigger::NextWord(w) => word_at(1) == Some(w.as_str()),
            Trigger::PrevWord(w) => word_at(-1) == Some(w.as_str()),
        }
    }

    /// The trigger of `kind` that holds at position `i`, if every position
    /// it inspects is in range.
    pub fn instantiate(kind: TriggerKind, state: &TaggingState, i: usize) -> Option<Trigger> {
        let tag = |d: isize| state.tag_at(i, d);
        let word = |d: isize| state.surface_at(i, d).map(str::to_string);
        Some(match kind {
            TriggerKind::NextTag => Trigger::NextTag(tag(1)?),
            TriggerKind::PrevTag => Trigger::PrevTag(tag(-1)?),
            TriggerKind::TagAt2And4 => Trigger::TagAt2And4(tag(2)?, tag(4)?),
            TriggerKind::TagAt245 => Trigger::TagAt245(tag(2)?, tag(4)?, tag(5)?),
            TriggerKind::NextWord => Trigger::NextWord(word(1)?),
            TriggerKind::PrevWord => Trigger::PrevWord(word(-1)?),
        })
    }

    fn args(&self) -> Vec<String> {
        match self {
            Trigger::NextTag(t) | Trigger::PrevTag(t) => vec![t.to_string()],
            Trigger::TagAt2And4(a, b) => vec![a.to_string(), b.to_string()],
            Trigger::TagAt245(a, b, c) => vec![a.to_string(), b.to_string(), c.to_string()],
            Trigger::NextWord(w) | Trigger::PrevWord(w) => vec![w.clone()],
        }
    }

    fn from_parts(kind: TriggerKind, args: &[&str]) -> Result<Trigger, String> {
        let arity = kind.offsets().len();
        if args.len() != arity {
            return Err(format!(
                "{kind} takes {arity} argument(s), got {}",
                args.len()
            ));
        }
        let tag = |i: usize| args[i].parse::<FunctionTag>().map_err(|e| e.to_string());
        let word = || {
            if args[0].is_empty() {
                Err(format!("{kind} needs a non-empty word"))
            } else {
                Ok(args[0].to_string())
            }
        };
        Ok(match kind {
            TriggerKind::NextTag => Trigger::NextTag(tag(0)?),
            TriggerKind::PrevTag => Trigger::PrevTag(tag(0)?),
            TriggerKind::TagAt2And4 => Trigger::TagAt2And4(tag(0)?, tag(1)?),
            TriggerKind::TagAt245 => Trigger::TagAt245(tag(0)?, tag(1)?, tag(2)?),
            TriggerKind::NextWord => Trigger::NextWord(word()?),
            TriggerKind::PrevWord => Trigger::PrevWord(word()?),
        })
    }
}

impl fmt::Display for Trigger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind(), self.args().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransformationRule {
    source: FunctionTag,
    target: FunctionTag,
    trigger: Trigger,
}

impl TransformationRule {
    pub fn new(
        source: FunctionTag,
        target: FunctionTag,
        trigger: Trigger,
    ) -> Result<Self, TblError> {
        if source == target {
            return Err(TblError::VacuousRule(source));
        }
        Ok(TransformationRule {
            source,
            target,
            trigger,
        })
    }

    pub fn source(&self) -> FunctionTag {
        self.source
    }

    pub fn target(&self) -> FunctionTag {
        self.target
    }

    pub fn trigger(&self) -> &Trigger {
        &self.trigger
    }

    fn sort_key(&self) -> (TriggerKind, FunctionTag, FunctionTag, &Trigger) {
        (self.trigger.kind(), self.source, self.target, &self.trigger)
    }

    /// Positions where the rule fires on `state`.
    pub fn firing_positions<'a>(
        &'a self,
        state: &'a TaggingState,
    ) -> impl Iterator<Item = usize> + 'a {
        (0..state.len()).filter(|&i| state.tags[i] == self.source && self.trigger.matches(state, i))
    }

    /// Applies the rule in place. Triggers see the state as it was before
    /// this call.
    pub fn apply_in_place(&self, state: &mut TaggingState) -> usize {
        let hits: Vec<usize> = self.firing_positions(state).collect();
        for &i in &hits {
            state.tags[i] = self.target;
        }
        hits.len()
    }

    pub fn apply(&self, state: &TaggingState) -> TaggingState {
        let mut next = state.clone();
        self.apply_in_place(&mut next);
        next
    }
}

impl PartialOrd for TransformationRule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TransformationRule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for TransformationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} IF {}", self.source, self.target, self.trigger)
    }
}

impl FromStr for TransformationRule {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let (lhs, condition) = line
            .split_once(" IF ")
            .ok_or("expected `SRC -> TGT IF kind(args)`")?;
        let (source, target) = lhs.split_once("->").ok_or("missing `->`")?;
        let source: FunctionTag = source
            .trim()
            .parse()
            .map_err(|e: crate::tagset::TagsetError| e.to_string())?;
        let target: FunctionTag = target
            .trim()
            .parse()
            .map_err(|e: crate::tagset::TagsetError| e.to_string())?;
        let condition = condition.trim();
        let open = condition.find('(').ok_or("missing `(` in trigger")?;
        if !condition.ends_with(')') {
            return Err("missing `)` at end of trigger".into());
        }
        let kind: TriggerKind = condition[..open].trim().parse()?;
        let inner = &condition[open + 1..condition.len() - 1];
        let args: Vec<&str> = inner.split(',').map(str::trim).collect();
        let trigger = Trigger::from_parts(kind, &args)?;
        TransformationRule::new(source, target, trigger).map_err(|e| e.to_string())
    }
}

pub fn serialize_rules(rules: &[TransformationRule]) -> String {
    rules.iter().map(|r| format!("{r}\n")).collect()
}

/// Parses a rule file. Blank lines and `#` comments are skipped.
pub fn parse_rules(text: &str) -> Result<Vec<TransformationRule>, TblError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            l.trim().parse().map_err(|message| TblError::RuleSyntax {
                line: i + 1,
                message,
            })
        })
        .collect()
}

/// Current tags of one sentence plus the chunk surfaces lexical triggers
/// look at.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggingState {
    tags: Vec<FunctionTag>,
    surfaces: Vec<String>,
}

impl TaggingState {
    pub fn new(tags: Vec<FunctionTag>, surfaces: Vec<String>) -> Self {
        assert_eq!(tags.len(), surfaces.len(), "one surface per tag");
        TaggingState { tags, surfaces }
    }

    /// A state whose surfaces are irrelevant (tag-only triggers).
    pub fn from_tags(tags: Vec<FunctionTag>) -> Self {
        let surfaces = vec![String::new(); tags.len()];
        TaggingState { tags, surfaces }
    }

    pub fn from_sentence(sentence: &AnnotatedSentence) -> Self {
        TaggingState::new(sentence.tags(), sentence.surfaces())
    }

    pub fn tags(&self) -> &[FunctionTag] {
        &self.tags
    }

    pub fn surfaces(&self) -> &[String] {
        &self.surfaces
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    fn index(&self, i: usize, d: isize) -> Option<usize> {
        i.checked_add_signed(d).filter(|&j| j < self.tags.len())
    }

    pub fn tag_at(&self, i: usize, d: isize) -> Option<FunctionTag> {
        self.index(i, d).map(|j| self.tags[j])
    }

    pub fn surface_at(&self, i: usize, d: isize) -> Option<&str> {
        self.index(i, d).map(|j| self.surfaces[j].as_str())
    }
}

pub fn trigger_matches(trigger: &Trigger, state: &TaggingState, i: usize) -> bool {
    trigger.matches(state, i)
}

pub fn apply_rule(rule: &TransformationRule, state: &TaggingState) -> TaggingState {
    rule.apply(state)
}

pub fn apply_rules(rules: &[TransformationRule], state: &TaggingState) -> TaggingState {
    let mut state = state.clone();
    for rule in rules {
        rule.apply_in_place(&mut state);
    }
    state
}

fn check_aligned(states: &[TaggingState], gold: &[Vec<FunctionTag>]) -> Result<(), TblError> {
    if states.len() != gold.len() {
        return Err(TblError::CountMismatch {
            states: states.len(),
            gold: gold.len(),
        });
    }
    for (i, (s, g)) in states.iter().zip(gold).enumerate() {
        if s.len() != g.len() {
            return Err(TblError::Misaligned {
                sentence: i,
                current: s.len(),
                gold: g.len(),
            });
        }
    }
    Ok(())
}

/// Every rule that would fix at least one current error: for each wrong
/// position, each template instantiated with the environment found there.
pub fn generate_candidates(
    states: &[TaggingState],
    gold: &[Vec<FunctionTag>],
    templates: &[TriggerKind],
) -> Result<BTreeSet<TransformationRule>, TblError> {
    check_aligned(states, gold)?;
    let mut out = BTreeSet::new();
    for (state, gold) in states.iter().zip(gold) {
        for (i, (&current, &wanted)) in state.tags.iter().zip(gold).enumerate() {
            if current == wanted {
                continue;
            }
            for &kind in templates {
                if let Some(trigger) = Trigger::instantiate(kind, state, i) {
                    out.insert(TransformationRule {
                        source: current,
                        target: wanted,
                        trigger,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Errors fixed minus correct tags broken by one application of `rule`.
pub fn net_gain(
    rule: &TransformationRule,
    states: &[TaggingState],
    gold: &[Vec<FunctionTag>],
) -> Result<i64, TblError> {
    check_aligned(states, gold)?;
    Ok(net_gain_unchecked(rule, states, gold))
}

fn net_gain_unchecked(
    rule: &TransformationRule,
    states: &[TaggingState],
    gold: &[Vec<FunctionTag>],
) -> i64 {
    let mut gain = 0;
    for (state, gold) in states.iter().zip(gold) {
        for i in rule.firing_positions(state) {
            if gold[i] == rule.target {
                gain += 1;
            } else if gold[i] == rule.source {
                gain -= 1;
            }
        }
    }
    gain
}

pub fn count_errors(states: &[TaggingState], gold: &[Vec<FunctionTag>]) -> usize {
    states
        .iter()
        .zip(gold)
        .map(|(s, g)| s.tags.iter().zip(g).filter(|(a, b)| a != b).count())
        .sum()
}

/// One accepted rule with its gain and the training error count after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearnedRule {
    pub rule: TransformationRule,
    pub gain: i64,
    pub errors_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearnOutcome {
    pub initial_errors: usize,
    pub rules: Vec<LearnedRule>,
}

impl LearnOutcome {
    pub fn rule_list(&self) -> Vec<TransformationRule> {
        self.rules.iter().map(|r| r.rule.clone()).collect()
    }
}

/// Greedy learning over explicit states and gold tags.
pub fn learn_from_states(
    mut states: Vec<TaggingState>,
    gold: &[Vec<FunctionTag>],
    templates: &[TriggerKind],
    min_gain: u32,
) -> Result<LearnOutcome, TblError> {
    if templates.is_empty() {
        return Err(TblError::NoTemplates);
    }
    check_aligned(&states, gold)?;
    let min_gain = i64::from(min_gain.max(1));
    let initial_errors = count_errors(&states, gold);
    let mut errors = initial_errors;
    let mut rules = Vec::new();
    loop {
        let candidates = generate_candidates(&states, gold, templates)?;
        let best = candidates
            .into_iter()
            .map(|rule| (net_gain_unchecked(&rule, &states, gold), rule))
            // Candidates arrive in ascending rule order, so keeping the
            // first strict maximum implements the tie-break.
            .fold(
                None::<(i64, TransformationRule)>,
                |best, (gain, rule)| match best {
                    Some((g, _)) if g >= gain => best,
                    _ => Some((gain, rule)),
                },
            );
        let Some((gain, rule)) = best.filter(|(g, _)| *g >= min_gain) else {
            break;
        };
        for state in &mut states {
            rule.apply_in_place(state);
        }
        errors -= gain as usize;
        debug_assert_eq!(errors, count_errors(&states, gold));
        rules.push(LearnedRule {
            rule,
            gain,
            errors_after: errors,
        });
    }
    Ok(LearnOutcome {
        initial_errors,
        rules,
    })
}

/// Learns rules that correct `initial` against the corpus's gold tags.
pub fn learn<F>(
    corpus: &Corpus,
    initial: F,
    templates: &[TriggerKind],
    min_gain: u32,
) -> Result<LearnOutcome, TblError>
where
    F: Fn(&AnnotatedSentence) -> Vec<FunctionTag>,
{
    if corpus.is_empty() {
        return Err(TblError::EmptyCorpus);
    }
    let gold: Vec<Vec<FunctionTag>> = corpus.iter().map(AnnotatedSentence::tags).collect();
    let states = corpus
        .iter()
        .map(|s| TaggingState::new(initial(s), s.surfaces()))
        .collect();
    learn_from_states(states, &gold, templates, min_gain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctionTag::*;

    fn rule(s: FunctionTag, t: FunctionTag, tr: Trigger) -> TransformationRule {
        TransformationRule::new(s, t, tr).unwrap()
    }

    #[test]
    fn trigger_offsets() {
        let st = TaggingState::from_tags(vec![Cau, CauP]);
        assert!(trigger_matches(&Trigger::NextTag(CauP), &st, 0));
        assert!(!trigger_matches(&Trigger::NextTag(CauP), &st, 1));
        assert!(trigger_matches(&Trigger::PrevTag(Cau), &st, 1));
        assert!(!trigger_matches(&Trigger::PrevTag(Cau), &st, 0));

        let st = TaggingState::from_tags(vec![Obj, Ada, CCC, Ada, Active]);
        assert!(trigger_matches(&Trigger::TagAt2And4(CCC, Active), &st, 0));
        assert!(!trigger_matches(&Trigger::TagAt2And4(CCC, Active), &st, 1));

        let st = TaggingState::from_tags(vec![Cau]);
        assert!(!trigger_matches(&Trigger::NextTag(CauP), &st, 0));
    }

    #[test]
    fn apply_is_simultaneous() {
        let st = TaggingState::from_tags(vec![Subj, Subj, Subj]);
        let r = rule(Subj, Obj, Trigger::NextTag(Subj));
        assert_eq!(apply_rule(&r, &st).tags(), &[Obj, Obj, Subj]);

        // an in-place left-to-right pass would give Subj Obj Subj here
        let r = rule(Subj, Obj, Trigger::PrevTag(Subj));
        assert_eq!(apply_rule(&r, &st).tags(), &[Subj, Obj, Obj]);
    }

    #[test]
    fn source_mismatch_leaves_state_unchanged() {
        let r = rule(Cau, PCau, Trigger::NextTag(CauP));
        let st = TaggingState::from_tags(vec![Obj, ObjP]);
        assert_eq!(apply_rule(&r, &st), st);
    }

    #[test]
    fn vacuous_rules_rejected() {
        assert_eq!(
            TransformationRule::new(Cau, Cau, Trigger::NextTag(CauP)),
            Err(TblError::VacuousRule(Cau))
        );
        let err = parse_rules("Cau -> Cau IF NEXT_TAG(CauP)").unwrap_err();
        assert!(matches!(err, TblError::RuleSyntax { line: 1, .. }));
    }

    #[test]
    fn rule_text_format() {
        let r = rule(Cau, PCau, Trigger::NextTag(CauP));
        assert_eq!(r.to_string(), "Cau -> PCau IF NEXT_TAG(CauP)");
        let r = rule(Obj, Subj, Trigger::TagAt245(CCC, CCC, Active));
        assert_eq!(r.to_string(), "Obj -> Subj IF TAG_AT_2_4_5(CCC,CCC,Active)");
        assert_eq!(r.to_string().parse::<TransformationRule>().unwrap(), r);

        let text =
            "# learned\n\nCau -> PCau IF NEXT_TAG(CauP)\nSubj -> PcomplS IF NEXT_WORD(ဖြစ်သည်)\n";
        let rules = parse_rules(text).unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[1].trigger(), &Trigger::NextWord("ဖြစ်သည်".into()));

        for (bad, line) in [
            ("Cau -> PCau IF NEXT_TAG(CauP,Obj)", 1),
            ("\nCau -> PCau NEXT_TAG(CauP)", 2),
            ("Cau PCau IF NEXT_TAG(CauP)", 1),
            ("Cau -> PCau IF SIDEWAYS(CauP)", 1),
            ("Cau -> PCau IF NEXT_TAG(Bogus)", 1),
            ("Cau -> PCau IF NEXT_WORD()", 1),
            ("Cau -> PCau IF NEXT_TAG(CauP", 1),
        ] {
            match parse_rules(bad) {
                Err(TblError::RuleSyntax { line: l, .. }) => assert_eq!(l, line, "{bad}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn candidates_from_single_error() {
        let states = vec![TaggingState::from_tags(vec![Cau, CauP])];
        let gold = vec![vec![PCau, CauP]];
        let c = generate_candidates(&states, &gold, &[TriggerKind::NextTag]).unwrap();
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            vec![rule(Cau, PCau, Trigger::NextTag(CauP))]
        );

        let c = generate_candidates(&states, &[vec![Cau, CauP]], &TriggerKind::ALL).unwrap();
        assert!(c.is_empty());

        assert!(matches!(
            generate_candidates(&states, &[vec![Cau]], &TriggerKind::ALL),
            Err(TblError::Misaligned { .. })
        ));
    }

    #[test]
    fn rule_order_is_kind_then_tags_then_args() {
        let a = rule(Subj, Obj, Trigger::PrevTag(Active));
        let b = rule(Active, Obj, Trigger::TagAt2And4(Active, Active));
        let c = rule(Active, Obj, Trigger::NextWord("b".into()));
        let d = rule(Active, Obj, Trigger::NextWord("a".into()));
        let e = rule(Subj, Obj, Trigger::NextTag(Null));
        let mut v = vec![a.clone(), b.clone(), c.clone(), d.clone(), e.clone()];
        v.sort();
        assert_eq!(v, vec![e, a, b, d, c]);
    }

    #[test]
    fn learning_stops_when_perfect() {
        let states = vec![TaggingState::from_tags(vec![Subj, Active])];
        let out = learn_from_states(states, &[vec![Subj, Active]], &TriggerKind::ALL, 1).unwrap();
        assert!(out.rules.is_empty());
        assert_eq!(out.initial_errors, 0);
        assert_eq!(
            learn_from_states(vec![], &[], &[], 1),
            Err(TblError::NoTemplates)
        );
    }
}
