//! The case-compatible bijection `Lₙ → 𝒩ⁿ`.
//!
//! Lengths 1–3 come from fixed tables. For longer words the map is built by
//! induction: reduce the word, map the shorter word, and expand the image in
//! the same case. Because each case's subspace reduction is injective the
//! expansion has exactly one element, so no choices are made.
//!
//! ```
//! use polar_words::bijection::{subspace_to_word, word_to_subspace};
//! use polar_words::language::Word;
//!
//! let w: Word = "1122".parse().unwrap();
//! let v = word_to_subspace(&w).unwrap();
//! assert_eq!(v.to_string(), "0011");
//! assert_eq!(subspace_to_word(&v).unwrap(), w);
//! ```

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{guard, Error, Result};
use crate::gf2::Gf2Subspace;
use crate::language::{classify_word, enumerate_words, word_expand, word_reduce, Word};
use crate::nset::{classify_subspace, enumerate_n, in_n, subspace_expand, subspace_reduce};

const BASE: [&[(&str, &str)]; 3] = [
    &[("1", ""), ("2", "1")],
    &[
        ("11", ""),
        ("12", "01"),
        ("21", "10"),
        ("22", "11"),
        ("23", "11;01"),
    ],
    &[
        ("111", ""),
        ("121", "010"),
        ("211", "100"),
        ("221", "110"),
        ("231", "110;010"),
        ("112", "001"),
        ("123", "011;001"),
        ("213", "101;001"),
        ("223", "111;001"),
        ("234", "110;010;001"),
        ("212", "101"),
        ("222", "101;010"),
        ("232", "101;011"),
        ("122", "011"),
        ("233", "111;011"),
    ],
];

/// Both directions of the bijection for one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTable {
    pub n: usize,
    pub forward: BTreeMap<Word, Gf2Subspace>,
    pub backward: BTreeMap<Gf2Subspace, Word>,
}

impl BijectionTable {
    fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Word, Gf2Subspace)>) -> Result<Self> {
        let forward: BTreeMap<Word, Gf2Subspace> = pairs.into_iter().collect();
        let backward: BTreeMap<Gf2Subspace, Word> =
            forward.iter().map(|(w, v)| (v.clone(), *w)).collect();
        if backward.len() != forward.len() {
            return Err(Error::Inconsistent(format!(
                "length-{n} table is not injective"
            )));
        }
        Ok(Self {
            n,
            forward,
            backward,
        })
    }
}

/// The fixed tables for `n = 1, 2, 3`, bases canonicalized.
pub fn base_table(n: usize) -> Result<BijectionTable> {
    guard("base_table: 1 <= n <= 3", n, 1, 3)?;
    let pairs = BASE[n - 1]
        .iter()
        .map(|(w, v)| Ok((w.parse::<Word>()?, Gf2Subspace::parse(v, n)?)))
        .collect::<Result<Vec<_>>>()?;
    BijectionTable::from_pairs(n, pairs)
}

fn unique<T: std::fmt::Debug>(mut items: Vec<T>, what: impl FnOnce() -> String) -> Result<T> {
    if items.len() == 1 {
        Ok(items.pop().expect("one element"))
    } else {
        Err(Error::Inconsistent(format!(
            "{} has {} candidates: {items:?}",
            what(),
            items.len()
        )))
    }
}

/// The subspace paired with `w`.
pub fn word_to_subspace(w: &Word) -> Result<Gf2Subspace> {
    let n = w.len();
    if n <= 3 {
        return base_table(n)?
            .forward
            .remove(w)
            .ok_or_else(|| Error::Inconsistent(format!("{w} missing from the base table")));
    }
    let (label, shorter) = word_reduce(w)?;
    let image = word_to_subspace(&shorter)?;
    unique(subspace_expand(&image, label.case)?, || {
        format!("case-{} expansion of [{image}] for {w}", label.case)
    })
}

/// The word paired with `V ∈ 𝒩ⁿ`.
pub fn subspace_to_word(v: &Gf2Subspace) -> Result<Word> {
    let n = v.ambient_dim();
    if !in_n(v) || n == 0 {
        return Err(Error::NotInFamily(v.to_string()));
    }
    if n <= 3 {
        return base_table(n)?
            .backward
            .remove(v)
            .ok_or_else(|| Error::Inconsistent(format!("[{v}] missing from the base table")));
    }
    let (label, smaller) = subspace_reduce(v)?;
    let shorter = subspace_to_word(&smaller)?;
    unique(word_expand(&shorter, label.case)?, || {
        format!("case-{} expansion of {shorter} for [{v}]", label.case)
    })
}

/// The whole table for length `n`, built level by level from the base.
pub fn build_table(n: usize) -> Result<BijectionTable> {
    guard("build_table: 1 <= n <= 8", n, 1, 8)?;
    let mut table = base_table(n.min(3))?;
    for len in 4..=n {
        let prev = &table.forward;
        let pairs = enumerate_words(len)?
            .into_par_iter()
            .map(|w| {
                let (label, shorter) = word_reduce(&w)?;
                let image = &prev[&shorter];
                let v = unique(subspace_expand(image, label.case)?, || {
                    format!("case-{} expansion of [{image}] for {w}", label.case)
                })?;
                Ok((w, v))
            })
            .collect::<Result<Vec<_>>>()?;
        table = BijectionTable::from_pairs(len, pairs)?;
    }
    Ok(table)
}

/// Outcome of [`verify_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub words: usize,
    pub family: usize,
    /// Words whose image is a distinct member of 𝒩ⁿ.
    pub matched: usize,
    /// Images per case, `[case 1, …, case 7]`.
    pub case_counts: [usize; 7],
    pub injective: bool,
    pub surjective: bool,
    pub inverse_consistent: bool,
    pub case_compatible: bool,
    /// Reducing then mapping equals mapping then reducing (`n ≥ 2`).
    pub natural: bool,
    /// For `n ≤ 3`, agreement with the fixed tables; vacuous above.
    pub matches_base: bool,
    pub counterexamples: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.surjective
            && self.inverse_consistent
            && self.case_compatible
            && self.natural
            && self.matches_base
            && self.words == self.family
            && self.matched == self.words
    }
}

const MAX_COUNTEREXAMPLES: usize = 20;

/// Exhaustive check of the bijection for length `n ≤ 7`.
pub fn verify_bijection(n: usize) -> Result<BijectionReport> {
    guard("verify_bijection: 1 <= n <= 7", n, 1, 7)?;
    let words = enumerate_words(n)?;
    let family = enumerate_n(n)?;
    let table = build_table(n)?;
    let shorter_table = if n >= 2 {
        Some(build_table(n - 1)?)
    } else {
        None
    };
    let mut bad: Vec<String> = Vec::new();
    let mut note = |msg: String| {
        if bad.len() < MAX_COUNTEREXAMPLES {
            bad.push(msg);
        }
    };

    let images: Vec<&Gf2Subspace> = words.iter().map(|w| &table.forward[w]).collect();
    let distinct: HashSet<&Gf2Subspace> = images.iter().copied().collect();
    let members: HashSet<&Gf2Subspace> = family.iter().collect();
    let injective = distinct.len() == words.len();
    let surjective = distinct == members;
    if !surjective {
        for v in members.difference(&distinct).take(5) {
            note(format!("[{v}] is never hit"));
        }
        for v in distinct.difference(&members).take(5) {
            note(format!("[{v}] is hit but not in the family"));
        }
    }
    let matched = distinct.intersection(&members).count();

    // The recursive single-word paths are independent of the table.
    let per_word: Vec<(bool, bool, bool, Option<u8>)> = words
        .par_iter()
        .zip(images.par_iter())
        .map(|(w, v)| {
            let back = subspace_to_word(v).ok() == Some(*w);
            let forward = word_to_subspace(w).ok().as_ref() == Some(*v);
            let vcase = classify_subspace(v).ok().map(|l| l.case);
            let natural = match &shorter_table {
                None => true,
                Some(t) => match (word_reduce(w), subspace_reduce(v)) {
                    (Ok((lw, ws)), Ok((lv, vs))) => lw.case == lv.case && t.forward[&ws] == vs,
                    _ => false,
                },
            };
            (
                back && forward,
                vcase == Some(classify_word(w).case),
                natural,
                vcase,
            )
        })
        .collect();

    let mut case_counts = [0usize; 7];
    let (mut inverse_consistent, mut case_compatible, mut natural) = (true, true, true);
    for ((w, v), &(inv, compat, nat, vcase)) in words.iter().zip(&images).zip(&per_word) {
        if let Some(c) = vcase {
            case_counts[c as usize - 1] += 1;
        }
        if !inv {
            inverse_consistent = false;
            note(format!("{w} -> [{v}] does not invert"));
        }
        if !compat {
            case_compatible = false;
            note(format!("{w} -> [{v}] changes case"));
        }
        if !nat {
            natural = false;
            note(format!("{w} -> [{v}] does not commute with reduction"));
        }
    }

    let matches_base = if n <= 3 {
        let base = base_table(n)?;
        let same = base.forward == table.forward;
        if !same {
            note(format!("length-{n} table differs from the base table"));
        }
        same
    } else {
        true
    };

    Ok(BijectionReport {
        n,
        words: words.len(),
        family: family.len(),
        matched,
        case_counts,
        injective,
        surjective,
        inverse_consistent,
        case_compatible,
        natural,
        matches_base,
        counterexamples: bad,
    })
}

/// `(word, subspace)` pairs for length `n`, in word order.
pub fn table_rows(n: usize) -> Result<Vec<(Word, Gf2Subspace)>> {
    Ok(build_table(n)?.forward.into_iter().collect())
}
