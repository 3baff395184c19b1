//! Test-side oracles, kept independent of the normal-form engine they
//! cross-check: plain string rewriting for the factor groups and a
//! bounded relator-insertion search for the full group.

use std::collections::{HashSet, VecDeque};

use goeritz_core::Word;

/// Normal form in H_P computed by naive string rewriting over
/// {a, b, B, g}: sort letters into β-run, then α, then γ, using only the
/// presentation (α central, γβ = αβγ, cancellations). Returns
/// (β-exponent, α-bit, γ-bit).
pub fn hp_rewriting_normal_form(input: &str) -> (i64, bool, bool) {
    let rules: &[(&str, &str)] = &[
        ("aa", ""),
        ("gg", ""),
        ("bB", ""),
        ("Bb", ""),
        ("ab", "ba"),
        ("aB", "Ba"),
        ("ga", "ag"),
        ("gb", "abg"),
        ("gB", "aBg"),
    ];
    let sorted = rewrite_to_fixpoint(input, rules);
    let beta: i64 = sorted.chars().filter(|&c| c == 'b').count() as i64
        - sorted.chars().filter(|&c| c == 'B').count() as i64;
    assert!(
        is_sorted_form(&sorted, &['b', 'B']),
        "rewriting did not sort {input:?}: {sorted:?}"
    );
    (beta, sorted.contains('a'), sorted.contains('g'))
}

/// Normal form in H_M by string rewriting over {a, g, d, D}: sort into
/// δ-run, then α, then γ, using α central, γδ = δ⁻¹γ and cancellations.
/// Returns (δ-exponent mod 3, α-bit, γ-bit).
pub fn hm_rewriting_normal_form(input: &str) -> (u8, bool, bool) {
    let rules: &[(&str, &str)] = &[
        ("aa", ""),
        ("gg", ""),
        ("dD", ""),
        ("Dd", ""),
        ("ad", "da"),
        ("aD", "Da"),
        ("ga", "ag"),
        ("gd", "Dg"),
        ("gD", "dg"),
    ];
    let sorted = rewrite_to_fixpoint(input, rules);
    let delta: i64 = sorted.chars().filter(|&c| c == 'd').count() as i64
        - sorted.chars().filter(|&c| c == 'D').count() as i64;
    assert!(
        is_sorted_form(&sorted, &['d', 'D']),
        "rewriting did not sort {input:?}: {sorted:?}"
    );
    (
        delta.rem_euclid(3) as u8,
        sorted.contains('a'),
        sorted.contains('g'),
    )
}

fn rewrite_to_fixpoint(input: &str, rules: &[(&str, &str)]) -> String {
    // 'A' and 'G' are alternate spellings of the involutions.
    let mut current = input.replace('A', "a").replace('G', "g");
    for _ in 0..10_000 {
        let mut next = current.clone();
        'scan: for (from, to) in rules {
            if let Some(pos) = next.find(from) {
                next.replace_range(pos..pos + from.len(), to);
                break 'scan;
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
    panic!("rewriting of {input:?} did not terminate");
}

fn is_sorted_form(s: &str, run_letters: &[char]) -> bool {
    // Expected shape: a run of one of `run_letters`, then optional 'a',
    // then optional 'g'.
    let mut rest = s;
    let run_char = rest.chars().next().filter(|c| run_letters.contains(c));
    if let Some(rc) = run_char {
        rest = rest.trim_start_matches(rc);
    }
    for stop in ['a', 'g'] {
        if rest.starts_with(stop) {
            rest = &rest[1..];
        }
    }
    rest.is_empty()
}

/// The eight defining relators, spelled out rather than taken from the
/// library, so the oracle stands on its own.
pub const RELATOR_TEXTS: [&str; 8] = ["aa", "gg", "ddd", "agag", "adaD", "abaB", "gbgBA", "DgddG"];

/// One-sided equality oracle for the full group: breadth-first search
/// over freely reduced words, where a move inserts a cyclic rotation of a
/// relator (or of an inverse) anywhere and reduces. Reaching `v` from `u`
/// proves them equal in the group; not reaching decides nothing.
pub fn provably_equal_by_insertion(u: &Word, v: &Word, max_len: usize, max_states: usize) -> bool {
    let variants = relator_variants();
    let start = u.free_reduce().to_string();
    let goal = v.free_reduce().to_string();
    if start == goal {
        return true;
    }
    let mut seen: HashSet<String> = HashSet::from([start.clone()]);
    let mut queue: VecDeque<String> = VecDeque::from([start]);
    while let Some(here) = queue.pop_front() {
        if seen.len() > max_states {
            return false;
        }
        let word: Word = here.parse().expect("states are valid words");
        for variant in &variants {
            for cut in 0..=word.len() {
                let mut letters = word.letters()[..cut].to_vec();
                letters.extend_from_slice(variant.letters());
                letters.extend_from_slice(&word.letters()[cut..]);
                let next = Word::new(letters).free_reduce();
                if next.len() > max_len {
                    continue;
                }
                let key = next.to_string();
                if key == goal {
                    return true;
                }
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
        }
    }
    false
}

fn relator_variants() -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for text in RELATOR_TEXTS {
        let relator: Word = text.parse().unwrap();
        for base in [relator.clone(), relator.inverse()] {
            let letters = base.letters();
            for rot in 0..letters.len() {
                let mut rotated = letters[rot..].to_vec();
                rotated.extend_from_slice(&letters[..rot]);
                let candidate = Word::new(rotated).free_reduce();
                if !candidate.is_empty() && !out.contains(&candidate) {
                    out.push(candidate);
                }
            }
        }
    }
    out
}
