//! Browser bindings for the demo page.

use std::fmt::Write;

use mmgr::eval::{report_from_totals, Score, SentenceType};
use mmgr::grammar::{parse, parse_tag_sequence, relations_line, render_tree};
use mmgr::tbl::{apply_rules, learn, serialize_rules};
use mmgr::{
    fold_phrases, parse_chunked_line, parse_corpus, BaselineModel, FunctionTag, Grammar,
    TaggingState, TriggerKind,
};
use wasm_bindgen::prelude::*;

/// Parses one tag sequence such as `Subj[သူ]#Active[သွားသည်]` and returns
/// every tree of the forest, canonical first, followed by the relations line.
#[wasm_bindgen(js_name = parseSequence)]
pub fn parse_sequence(text: &str) -> Result<String, String> {
    let seq: Vec<(FunctionTag, String)> = parse_tag_sequence(text.trim())
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|(t, _)| *t != FunctionTag::Null)
        .collect();
    let phrases = fold_phrases(&seq).map_err(|e| e.to_string())?;
    let forest = parse(&phrases, &Grammar::default_grammar());
    if forest.is_empty() {
        return Err("no parse: no derivation".into());
    }
    let mut out = String::new();
    for tree in forest.trees() {
        writeln!(out, "{}", render_tree(tree)).unwrap();
    }
    write!(out, "{}", relations_line(&forest.trees()[0])).unwrap();
    Ok(out)
}

/// Trains the baseline and transformation rules on `corpus`, then tags each
/// chunked line of `input`. Returns the learned rules, a blank line and the
/// tagged sentences.
#[wasm_bindgen(js_name = trainAndTag)]
pub fn train_and_tag(corpus: &str, input: &str) -> Result<String, String> {
    let corpus = parse_corpus(corpus).map_err(|e| e.to_string())?;
    let model = BaselineModel::train(&corpus).map_err(|e| e.to_string())?;
    let outcome = learn(
        &corpus,
        |s| {
            model
                .tag_sentence(&s.untagged())
                .map(|t| t.tags())
                .unwrap_or_else(|_| s.tags())
        },
        &TriggerKind::ALL,
        1,
    )
    .map_err(|e| e.to_string())?;
    let rules = outcome.rule_list();
    let mut out = serialize_rules(&rules);
    out.push('\n');
    for (i, line) in input.lines().map(str::trim).enumerate() {
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let at = |e: &dyn std::fmt::Display| format!("input line {}: {e}", i + 1);
        let chunked = parse_chunked_line(line).map_err(|e| at(&e))?;
        let base = model.tag_sentence(&chunked).map_err(|e| at(&e))?;
        let state = apply_rules(&rules, &TaggingState::from_sentence(&base));
        let tagged = chunked.with_tags(state.tags()).map_err(|e| at(&e))?;
        writeln!(out, "{}", tagged.word_tag_display()).unwrap();
    }
    Ok(out)
}

fn parse_total(text: &str) -> Option<Score> {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if int.is_empty() || !digits(int) || !digits(frac) || frac.len() > 6 {
        return None;
    }
    let den = 10i64.pow(frac.len() as u32);
    let num = format!("{int}{frac}").parse::<i64>().ok()?;
    Some(Score::new(num, den))
}

/// Builds the score report from per-type lines `TYPE N TOTAL`.
#[wasm_bindgen(js_name = scoreTotals)]
pub fn score_totals(text: &str) -> Result<String, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let bad = || format!("line {}: expected TYPE N TOTAL", i + 1);
        let [t, n, total] = fields[..] else {
            return Err(bad());
        };
        let t: SentenceType = t.parse().map_err(|e| format!("line {}: {e}", i + 1))?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let total = parse_total(total).ok_or_else(bad)?;
        if total > Score::from_integer(3 * n as i64) {
            return Err(format!("line {}: total exceeds 3 per sentence", i + 1));
        }
        rows.push((t, n, total));
    }
    if rows.is_empty() {
        return Err("no rows".into());
    }
    Ok(report_from_totals(&rows).to_tsv())
}
