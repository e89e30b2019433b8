//! Restricted-growth words over `{1,2,3,4}` and their seven-case split.
//!
//! A word `a₁…aₙ` is valid when `aᵢ ≤ max(1, a₁, …, aᵢ₋₁) + 1` for every
//! `i`. There is an implicit leading letter 1, so `a₁ ∈ {1,2}`. `Lₙ` has
//! `g(n)` members.
//!
//! Cases are tested in order and the first match wins:
//!
//! | case | condition |
//! |------|-----------|
//! | 1 | `aₙ = 1` |
//! | 2 | `aₙ = max(1, a₁…aₙ₋₁) + 1` or `aₙ = 4` |
//! | 3–6 | `aₙ₋₁ = 1, 2, 3, 4` and `Eₙ₋₁(w)` is in neither case 1 nor 2 |
//! | 7 | everything else |
//!
//! Length-one words are `1` (case 1) and `2` (case 2).
//!
//! ```
//! use polar_words::language::{classify_word, word_reduce, Word};
//!
//! let w: Word = "2342".parse().unwrap();
//! assert_eq!(classify_word(&w).case, 6);
//! let (label, shorter) = word_reduce(&w).unwrap();
//! assert_eq!((label.case, shorter.to_string()), (6, "232".to_string()));
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{guard, Error, Result};

/// Longest word the packed representation holds.
pub const MAX_LEN: usize = 16;

/// `g(n) = (2ⁿ+1)(2ⁿ⁻¹+1)/3`, with `g(0) = 1`.
///
/// # Panics
///
/// If `n > 63`, where the value no longer fits in `u128`.
pub fn g(n: usize) -> u128 {
    assert!(n <= 63, "g({n}) overflows u128");
    if n == 0 {
        return 1;
    }
    ((1u128 << n) + 1) * ((1u128 << (n - 1)) + 1) / 3
}

/// A valid word, two bits per letter, letter 1 in the high bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    len: u8,
    packed: u32,
}

impl Word {
    /// Validates `letters` and packs them.
    pub fn new(letters: &[u8]) -> Result<Self> {
        if letters.is_empty() || letters.len() > MAX_LEN || !is_valid(letters) {
            return Err(Error::InvalidWord(
                letters
                    .iter()
                    .map(|&a| char::from(b'0' + a.min(9)))
                    .collect(),
            ));
        }
        Ok(Self::pack(letters))
    }

    fn pack(letters: &[u8]) -> Self {
        let packed = letters
            .iter()
            .fold(0u32, |acc, &a| (acc << 2) | u32::from(a - 1));
        Self {
            len: letters.len() as u8,
            packed,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have at least one letter.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter `i`, 1-based.
    #[inline]
    pub fn letter(&self, i: usize) -> u8 {
        assert!(
            (1..=self.len()).contains(&i),
            "letter {i} of a length-{} word",
            self.len
        );
        ((self.packed >> (2 * (self.len() - i))) & 3) as u8 + 1
    }

    pub fn letters(&self) -> Vec<u8> {
        (1..=self.len()).map(|i| self.letter(i)).collect()
    }

    pub fn last(&self) -> u8 {
        self.letter(self.len())
    }

    /// `max(1, a₁, …, a_k)` over the first `k` letters.
    pub fn prefix_max(&self, k: usize) -> u8 {
        (1..=k.min(self.len()))
            .map(|i| self.letter(i))
            .fold(1, u8::max)
    }
}

impl Ord for Word {
    /// Lexicographic on letters; a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        let shift = |w: &Self| 2 * (w.len() - common);
        (self.packed >> shift(self))
            .cmp(&(other.packed >> shift(other)))
            .then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.letters() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '1'..='4' => Ok(c as u8 - b'0'),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<_>>()?;
        Self::new(&letters).map_err(|_| Error::InvalidWord(s.to_string()))
    }
}

/// Subcases of case 7 on the subspace side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subcase {
    A,
    B,
    C,
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
        })
    }
}

/// Case `1..=7`, plus a subcase for some case-7 subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseLabel {
    pub case: u8,
    pub subcase: Option<Subcase>,
}

impl CaseLabel {
    pub const fn plain(case: u8) -> Self {
        Self {
            case,
            subcase: None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.case)?;
        if let Some(s) = self.subcase {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether `letters` is a valid word (empty input is not).
pub fn is_valid(letters: &[u8]) -> bool {
    let mut max = 1;
    !letters.is_empty()
        && letters.iter().all(|&a| {
            let ok = (1..=4).contains(&a) && a <= max + 1;
            max = max.max(a);
            ok
        })
}

/// All words of length `n` in lexicographic order.
pub fn enumerate_words(n: usize) -> Result<Vec<Word>> {
    guard("enumerate_words: 1 <= n <= 14", n, 1, 14)?;
    // Split on the first three letters (or fewer) and extend in parallel.
    let seeds = extend_all(vec![Vec::new()], n.min(3));
    let chunks: Vec<Vec<Word>> = seeds
        .into_par_iter()
        .map(|seed| {
            extend_all(vec![seed], n - n.min(3))
                .into_iter()
                .map(|w| Word::pack(&w))
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

fn extend_all(mut words: Vec<Vec<u8>>, steps: usize) -> Vec<Vec<u8>> {
    for _ in 0..steps {
        words = words
            .into_iter()
            .flat_map(|w| {
                let top = w.iter().copied().fold(1, u8::max);
                (1..=(top + 1).min(4)).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    words
}

/// `|Lₙ|` by dynamic programming over the running maximum.
pub fn count_words(n: usize) -> Result<u128> {
    guard("count_words: 1 <= n <= 60", n, 1, 60)?;
    // ways[m - 1]: prefixes whose running maximum is m.
    let mut ways = [1u128, 0, 0, 0];
    for _ in 0..n {
        let mut next = [0u128; 4];
        for m in 1..=4 {
            let c = ways[m - 1];
            next[m - 1] += c * m as u128;
            if m < 4 {
                next[m] += c;
            }
        }
        ways = next;
    }
    Ok(ways.iter().sum())
}

fn in_case_1_or_2(w: &Word) -> bool {
    let n = w.len();
    if n == 1 {
        return true;
    }
    let last = w.last();
    last == 1 || last == 4 || last == w.prefix_max(n - 1) + 1
}

/// The case of `w`. Words never carry a subcase.
pub fn classify_word(w: &Word) -> CaseLabel {
    let n = w.len();
    if n == 1 {
        return CaseLabel::plain(w.letter(1));
    }
    let last = w.last();
    if last == 1 {
        return CaseLabel::plain(1);
    }
    if last == 4 || last == w.prefix_max(n - 1) + 1 {
        return CaseLabel::plain(2);
    }
    match erase(w, n - 1) {
        Ok(e) if !in_case_1_or_2(&e) => CaseLabel::plain(2 + w.letter(n - 1)),
        _ => CaseLabel::plain(7),
    }
}

/// `Eᵢ(w)`: `w` without its `i`-th letter, if that is still a valid word.
pub fn erase(w: &Word, i: usize) -> Result<Word> {
    let n = w.len();
    if !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let mut letters = w.letters();
    letters.remove(i - 1);
    if letters.is_empty() || !is_valid(&letters) {
        return Err(Error::InvalidResult {
            word: w.to_string(),
            index: i,
        });
    }
    Ok(Word::pack(&letters))
}

/// Shortens `w` by one letter according to its case.
///
/// Cases 1 and 2 erase the last letter, cases 3–6 the second-to-last, and
/// case 7 erases both and appends a 2.
pub fn word_reduce(w: &Word) -> Result<(CaseLabel, Word)> {
    let n = w.len();
    guard("word_reduce: length >= 2", n, 2, MAX_LEN)?;
    let label = classify_word(w);
    let shorter = match label.case {
        1 | 2 => erase(w, n)?,
        3..=6 => erase(w, n - 1)?,
        _ => {
            let mut letters = w.letters();
            letters.truncate(n - 2);
            letters.push(2);
            Word::new(&letters)?
        }
    };
    Ok((label, shorter))
}

/// Every word of case `case` that [`word_reduce`] sends to `shorter`.
pub fn word_expand(shorter: &Word, case: u8) -> Result<Vec<Word>> {
    if !(1..=7).contains(&case) {
        return Err(Error::InvalidCase(case));
    }
    let m = shorter.len();
    guard("word_expand: length <= 15", m, 1, MAX_LEN - 1)?;
    let base = shorter.letters();
    let mut candidates: Vec<Vec<u8>> = Vec::new();
    match case {
        1 => candidates.push([&base[..], &[1]].concat()),
        2 => candidates.push([&base[..], &[(shorter.prefix_max(m) + 1).min(4)]].concat()),
        3..=6 => {
            let mut w = base.clone();
            w.insert(m - 1, case - 2);
            candidates.push(w);
        }
        _ => {
            if shorter.last() == 2 {
                let u = &base[..m - 1];
                candidates.push([u, &[3, 3]].concat());
                candidates.push([u, &[2, 2]].concat());
            }
        }
    }
    let mut out: Vec<Word> = candidates
        .into_iter()
        .filter(|w| is_valid(w))
        .map(|w| Word::pack(&w))
        .filter(|w| word_reduce(w).is_ok_and(|(label, s)| label.case == case && s == *shorter))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `|Lₙ(i)|` for `i = 1..=7`, by enumeration.
pub fn case_counts(n: usize) -> Result<[usize; 7]> {
    let words = enumerate_words(n)?;
    Ok(words
        .par_iter()
        .fold(
            || [0usize; 7],
            |mut acc, w| {
                acc[classify_word(w).case as usize - 1] += 1;
                acc
            },
        )
        .reduce(|| [0; 7], |a, b| std::array::from_fn(|i| a[i] + b[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strs(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn g_values() {
        let got: Vec<u128> = (0..=6).map(g).collect();
        assert_eq!(got, vec![1, 2, 5, 15, 51, 187, 715]);
        assert_eq!(g(10), 1025 * 513 / 3);
    }

    #[test]
    fn validity() {
        assert!(is_valid(&[2, 3, 1]));
        assert!(!is_valid(&[1, 3]));
        assert!(is_valid(&[2, 3, 4, 4]));
        assert!(!is_valid(&[]));
        assert!(!is_valid(&[2, 3, 4, 5]));
        assert!("13".parse::<Word>().is_err());
        assert!("1x".parse::<Word>().is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(strs(&enumerate_words(1).unwrap()), vec!["1", "2"]);
        assert_eq!(
            strs(&enumerate_words(2).unwrap()),
            vec!["11", "12", "21", "22", "23"]
        );
        assert_eq!(enumerate_words(3).unwrap().len(), 15);
        assert!(enumerate_words(15).is_err());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut ws = vec![w("21"), w("2"), w("1234"), w("12"), w("122")];
        ws.sort();
        assert_eq!(strs(&ws), vec!["12", "122", "1234", "2", "21"]);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_word(&w("2342")).case, 6);
        assert_eq!(classify_word(&w("1122")).case, 7);
        assert_eq!(classify_word(&w("231")).case, 1);
        assert_eq!(classify_word(&w("2344")).case, 2);
        assert_eq!(classify_word(&w("1")).case, 1);
        assert_eq!(classify_word(&w("2")).case, 2);
    }

    #[test]
    fn erase_examples() {
        assert_eq!(erase(&w("2312"), 3).unwrap(), w("232"));
        assert_eq!(erase(&w("2311"), 4).unwrap(), w("231"));
        assert!(matches!(
            erase(&w("23"), 1),
            Err(Error::InvalidResult { index: 1, .. })
        ));
        assert!(erase(&w("23"), 3).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(word_reduce(&w("2311")).unwrap().1, w("231"));
        assert_eq!(word_reduce(&w("2342")).unwrap().1, w("232"));
        assert_eq!(
            word_reduce(&w("1233")).unwrap(),
            (CaseLabel::plain(7), w("122"))
        );
        assert!(word_reduce(&w("2")).is_err());
    }

    #[test]
    fn expand_examples() {
        assert_eq!(strs(&word_expand(&w("22"), 3).unwrap()), vec!["212"]);
        assert_eq!(strs(&word_expand(&w("11"), 2).unwrap()), vec!["112"]);
        assert_eq!(strs(&word_expand(&w("12"), 7).unwrap()), vec!["122"]);
        assert_eq!(strs(&word_expand(&w("22"), 7).unwrap()), vec!["233"]);
        assert!(word_expand(&w("22"), 8).is_err());
    }

    #[test]
    fn case_labels_display() {
        assert_eq!(CaseLabel::plain(3).to_string(), "3");
        let l = CaseLabel {
            case: 7,
            subcase: Some(Subcase::B),
        };
        assert_eq!(l.to_string(), "7b");
    }
}
