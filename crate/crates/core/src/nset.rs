//! The subspace family 𝒩ⁿ and its seven-case stratification.
//!
//! A subspace `V ⊆ F₂ⁿ` with reduced echelon basis `v₁ ≻ … ≻ v_k` is in 𝒩ⁿ
//! when
//!
//! * **N1** every `vᵢ` has weight at most 2;
//! * **N2** along the weight-2 basis vectors, `β` never decreases;
//! * **N3** weight-2 `vᵢ, vⱼ, v_l` with `β(vᵢ) = β(vⱼ) < β(v_l)` force
//!   `α(v_l) > β(vᵢ)`;
//! * **N4** no three weight-2 basis vectors share a `β` that is below the
//!   `β` of a fourth.
//!
//! Write `x_i` for the unit vectors, `T = x_{n−1} + x_n`, and `W` for the
//! basis with `T` removed. Cases, first match wins:
//!
//! | case | condition | reduction to 𝒩ⁿ⁻¹ |
//! |------|-----------|-------------------|
//! | 1 | `n ∉ supp V` | delete coordinate `n` |
//! | 2 | `x_n ∈ V` | drop `x_n`, delete `n` |
//! | 3 | `n − 1 ∉ supp V` | delete `n − 1` |
//! | 4 | `x_{n−1} ∈ V` | drop `x_{n−1}`, delete `n − 1` |
//! | 5 | `T` and some `x_a + x_n` in the basis | drop `T`, delete `n − 1` |
//! | 6 | otherwise, unless the row below applies | see below |
//! | 7 | `T` is the only vector reaching `{n−1, n}` and `W` is short | see below |
//!
//! `W` is *short* when it is `0`, or `⟨x_t⟩`, or its first basis vector is
//! `x_s + x_t` with `t = max supp W` and all its other basis vectors have
//! weight one. The subcase is `a` for `⟨x_t⟩` and `b` for the last shape;
//! `W = 0` carries no subcase.
//!
//! Case 6 collects two kinds of subspace. When `T ∉ V`, columns `n − 1` and
//! `n` are added together into one column. When `T ∈ V` (so `W` is not
//! short), the same map `Φ` as in case 7 is used. `Φ` drops `T`, then,
//! with `t = max supp W`:
//!
//! * `W = 0` goes to `⟨x_{n−1}⟩`;
//! * if `x_t ∈ W`, it becomes `x_t + x_{n−1}`;
//! * if exactly one `x_s + x_t` is in `W`, it becomes `x_s + x_{n−1}` and
//!   `x_t` is adjoined;
//! * if two, `x_r + x_t` and `x_s + x_t` with `r < s`, the second becomes
//!   `x_s + x_{n−1}`;
//!
//! and finally deletes coordinate `n`. Each case's reduction is injective,
//! so [`subspace_expand`] returns at most one subspace.
//!
//! ```
//! use polar_words::gf2::Gf2Subspace;
//! use polar_words::nset::{classify_subspace, subspace_reduce};
//!
//! let v = Gf2Subspace::parse("11000;00101;00010", 5).unwrap();
//! assert_eq!(classify_subspace(&v).unwrap().case, 4);
//! let (_, smaller) = subspace_reduce(&v).unwrap();
//! assert_eq!(smaller.to_string(), "1100;0011");
//! ```

use std::fmt;

use rayon::prelude::*;

use crate::error::{guard, Error, Result};
use crate::gf2::{enumerate_subspaces, Gf2Subspace};
use crate::language::{CaseLabel, Subcase};

/// Which of N1–N4 failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NCondition {
    N1,
    N2,
    N3,
    N4,
}

impl fmt::Display for NCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The first violated condition and the 1-based basis positions witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: NCondition,
    pub witnesses: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NMembershipReport {
    pub subspace: Gf2Subspace,
    pub passes: bool,
    pub violated: Option<Violation>,
}

#[inline]
fn alpha_bit(v: u32) -> u32 {
    1 << (31 - v.leading_zeros())
}

#[inline]
fn beta_bit(v: u32) -> u32 {
    v & v.wrapping_neg()
}

fn first_violation(rows: &[u32]) -> Option<Violation> {
    let violation = |condition, witnesses: Vec<usize>| {
        Some(Violation {
            condition,
            witnesses: witnesses.into_iter().map(|i| i + 1).collect(),
        })
    };
    if let Some(i) = rows.iter().position(|v| v.count_ones() > 2) {
        return violation(NCondition::N1, vec![i]);
    }
    // (basis position, α, β) of the weight-2 vectors, α and β as coordinates
    // turned into bit masks: a larger mask is a smaller coordinate.
    let pairs: Vec<(usize, u32, u32)> = rows
        .iter()
        .enumerate()
        .filter(|(_, v)| v.count_ones() == 2)
        .map(|(i, &v)| (i, alpha_bit(v), beta_bit(v)))
        .collect();
    if let Some(w) = pairs.windows(2).find(|w| w[0].2 < w[1].2) {
        return violation(NCondition::N2, vec![w[0].0, w[1].0]);
    }
    // β is non-decreasing from here on, so equal-β vectors are contiguous
    // and anything later has β at least as large.
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if pairs[i].2 != pairs[j].2 {
                continue;
            }
            for k in j + 1..pairs.len() {
                let (pk, ak, bk) = pairs[k];
                if bk < pairs[i].2 && ak >= pairs[i].2 {
                    return violation(NCondition::N3, vec![pairs[i].0, pairs[j].0, pk]);
                }
                if bk == pairs[i].2 {
                    if let Some(l) = (k + 1..pairs.len()).find(|&l| pairs[l].2 < bk) {
                        return violation(
                            NCondition::N4,
                            vec![pairs[i].0, pairs[j].0, pk, pairs[l].0],
                        );
                    }
                }
            }
        }
    }
    None
}

fn rows_of(v: &Gf2Subspace) -> Vec<u32> {
    v.basis().iter().map(|b| b.bits()).collect()
}

/// Checks N1–N4 on the canonical basis and reports the first failure.
pub fn is_n(v: &Gf2Subspace) -> NMembershipReport {
    let violated = first_violation(&rows_of(v));
    NMembershipReport {
        subspace: v.clone(),
        passes: violated.is_none(),
        violated,
    }
}

/// Membership in 𝒩ⁿ.
pub fn in_n(v: &Gf2Subspace) -> bool {
    first_violation(&rows_of(v)).is_none()
}

/// 𝒩ⁿ in the order of [`enumerate_subspaces`].
pub fn enumerate_n(n: usize) -> Result<Vec<Gf2Subspace>> {
    guard("enumerate_n: 1 <= n <= 8", n, 1, 8)?;
    Ok(enumerate_subspaces(n, None)?
        .into_par_iter()
        .filter(in_n)
        .collect())
}

const XN: u32 = 0b01;
const XM: u32 = 0b10;
const TAIL: u32 = 0b11;

/// Literal position of `V` among the raw case predicates, before the
/// case-6/7 split on the shape of `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Raw {
    Case(u8),
    /// Neither `x_{n−1}` nor `T` in the basis, both columns used.
    Merge,
    /// `T` is the only basis vector reaching `{n−1, n}`.
    Phi,
}

fn raw_class(rows: &[u32]) -> Raw {
    let supp = rows.iter().fold(0, |a, v| a | v);
    if supp & XN == 0 {
        Raw::Case(1)
    } else if rows.contains(&XN) {
        Raw::Case(2)
    } else if supp & XM == 0 {
        Raw::Case(3)
    } else if rows.contains(&XM) {
        Raw::Case(4)
    } else if rows.contains(&TAIL) {
        if rows.iter().any(|&v| v != TAIL && v & XN != 0) {
            Raw::Case(5)
        } else {
            Raw::Phi
        }
    } else {
        Raw::Merge
    }
}

/// `None` when `W` is not short; otherwise the case-7 subcase.
fn short_shape(w: &[u32]) -> Option<Option<Subcase>> {
    let Some(&first) = w.first() else {
        return Some(None);
    };
    if w.len() == 1 && first.count_ones() == 1 {
        return Some(Some(Subcase::A));
    }
    let t = beta_bit(w.iter().fold(0, |a, v| a | v));
    let shaped = first.count_ones() == 2
        && beta_bit(first) == t
        && w[1..].iter().all(|v| v.count_ones() == 1);
    shaped.then_some(Some(Subcase::B))
}

fn label_of(rows: &[u32]) -> CaseLabel {
    match raw_class(rows) {
        Raw::Case(c) => CaseLabel::plain(c),
        Raw::Merge => CaseLabel::plain(6),
        Raw::Phi => {
            let w: Vec<u32> = rows.iter().copied().filter(|&v| v != TAIL).collect();
            match short_shape(&w) {
                Some(subcase) => CaseLabel { case: 7, subcase },
                None => CaseLabel::plain(6),
            }
        }
    }
}

fn require_n(v: &Gf2Subspace) -> Result<()> {
    if v.ambient_dim() == 0 {
        return Err(Error::DimensionOutOfRange(0));
    }
    if in_n(v) {
        Ok(())
    } else {
        Err(Error::NotInFamily(v.to_string()))
    }
}

/// The case of `V ∈ 𝒩ⁿ`. For `n = 1` the zero space is case 1 and F₂ case 2.
pub fn classify_subspace(v: &Gf2Subspace) -> Result<CaseLabel> {
    require_n(v)?;
    Ok(label_of(&rows_of(v)))
}

fn phi(n: usize, rows: &[u32]) -> Result<Gf2Subspace> {
    let mut w: Vec<u32> = rows.iter().copied().filter(|&v| v != TAIL).collect();
    if w.is_empty() {
        w.push(XM);
    } else {
        let t = beta_bit(w.iter().fold(0, |a, v| a | v));
        if let Some(pos) = w.iter().position(|&v| v == t) {
            w[pos] = t | XM;
        } else {
            let ends: Vec<usize> = (0..w.len())
                .filter(|&i| w[i].count_ones() == 2 && w[i] & t != 0)
                .collect();
            match ends[..] {
                [only] => {
                    w[only] ^= t | XM;
                    w.push(t);
                }
                [_, second] => w[second] ^= t | XM,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "{} basis vectors end at the last used coordinate",
                        ends.len()
                    )))
                }
            }
        }
    }
    Gf2Subspace::from_bits(n, w).delete_coordinate(n)
}

/// Adds column `n` into column `n − 1` and drops column `n`.
fn merge_last_columns(v: &Gf2Subspace) -> Gf2Subspace {
    let n = v.ambient_dim();
    v.map_rows(n - 1, |b| ((b >> 2) << 1) | ((b >> 1 ^ b) & 1))
}

/// Reduces `V ∈ 𝒩ⁿ` (`n ≥ 2`) to a member of 𝒩ⁿ⁻¹ according to its case.
pub fn subspace_reduce(v: &Gf2Subspace) -> Result<(CaseLabel, Gf2Subspace)> {
    let n = v.ambient_dim();
    guard("subspace_reduce: 2 <= n <= 32", n, 2, 32)?;
    require_n(v)?;
    let rows = rows_of(v);
    let label = label_of(&rows);
    let unit = |bit: u32| crate::gf2::Gf2Vector::new(n, bit);
    let drop = |bit: u32| -> Result<Gf2Subspace> {
        v.without_basis_vector(&unit(bit)?)
            .ok_or_else(|| Error::Inconsistent(format!("[{v}] lacks basis vector {bit:#b}")))
    };
    let reduced = match raw_class(&rows) {
        Raw::Case(1) => v.delete_coordinate(n)?,
        Raw::Case(2) => drop(XN)?.delete_coordinate(n)?,
        Raw::Case(3) => v.delete_coordinate(n - 1)?,
        Raw::Case(4) => drop(XM)?.delete_coordinate(n - 1)?,
        Raw::Case(5) => drop(TAIL)?.delete_coordinate(n - 1)?,
        Raw::Merge => merge_last_columns(v),
        Raw::Phi => phi(n, &rows)?,
        Raw::Case(c) => return Err(Error::InvalidCase(c)),
    };
    Ok((label, reduced))
}

/// Candidate preimages of `V'` under `Φ`, in ambient `n`.
fn phi_inverse(n: usize, rows: &[u32]) -> Option<Vec<u32>> {
    if rows == [1] {
        return Some(vec![TAIL]);
    }
    let touching: Vec<u32> = rows.iter().copied().filter(|v| v & 1 != 0).collect();
    let [end] = touching[..] else {
        return None;
    };
    if end.count_ones() != 2 {
        return None;
    }
    let a = end ^ 1;
    let mut w: Vec<u32> = rows.iter().copied().filter(|v| v & 1 == 0).collect();
    let supp = w.iter().fold(0, |acc, v| acc | v);
    let t = beta_bit(supp);
    if supp == 0 || t > a {
        w.push(a);
    } else if let Some(pos) = w.iter().position(|&v| v == t) {
        w[pos] = a | t;
    } else {
        w.push(a | t);
    }
    debug_assert!(n >= 2);
    let mut out: Vec<u32> = w.into_iter().map(|v| v << 1).collect();
    out.push(TAIL);
    Some(out)
}

/// Every `V ∈ 𝒩ⁿ` of case `case` whose reduction is `V'` (ambient `n − 1`).
pub fn subspace_expand(smaller: &Gf2Subspace, case: u8) -> Result<Vec<Gf2Subspace>> {
    if !(1..=7).contains(&case) {
        return Err(Error::InvalidCase(case));
    }
    require_n(smaller)?;
    let m = smaller.ambient_dim();
    let n = m + 1;
    guard("subspace_expand: 1 <= n - 1 <= 31", m, 1, 31)?;
    let rows = rows_of(smaller);
    let mut candidates: Vec<Gf2Subspace> = Vec::new();
    let with = |s: Gf2Subspace, bit: u32| -> Result<Gf2Subspace> {
        s.with_vector(crate::gf2::Gf2Vector::new(n, bit)?)
    };
    match case {
        1 => candidates.push(smaller.insert_zero_coordinate(n)?),
        2 => candidates.push(with(smaller.insert_zero_coordinate(n)?, XN)?),
        3 => candidates.push(smaller.insert_zero_coordinate(n - 1)?),
        4 => candidates.push(with(smaller.insert_zero_coordinate(n - 1)?, XM)?),
        5 => candidates.push(with(smaller.insert_zero_coordinate(n - 1)?, TAIL)?),
        _ => {
            if case == 6 {
                // Each basis vector splits its last coordinate over n − 1 and n.
                let k = rows.len();
                for choice in 0u32..1 << k {
                    let lifted = rows.iter().enumerate().map(|(j, &r)| {
                        let flip = choice >> j & 1;
                        let low = if r & 1 == 1 {
                            0b10 >> flip
                        } else {
                            TAIL * flip
                        };
                        ((r >> 1) << 2) | low
                    });
                    candidates.push(Gf2Subspace::from_bits(n, lifted));
                }
            }
            if let Some(bits) = phi_inverse(n, &rows) {
                candidates.push(Gf2Subspace::from_bits(n, bits));
            }
        }
    }
    let mut out: Vec<Gf2Subspace> = candidates
        .into_iter()
        .filter(|c| {
            in_n(c)
                && subspace_reduce(c).is_ok_and(|(label, s)| label.case == case && s == *smaller)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `|𝒩ⁿ case i|` for `i = 1..=7`.
pub fn case_counts(n: usize) -> Result<[usize; 7]> {
    let family = enumerate_n(n)?;
    Ok(family
        .par_iter()
        .fold(
            || [0usize; 7],
            |mut acc, v| {
                acc[label_of(&rows_of(v)).case as usize - 1] += 1;
                acc
            },
        )
        .reduce(|| [0; 7], |a, b| std::array::from_fn(|i| a[i] + b[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, text: &str) -> Gf2Subspace {
        Gf2Subspace::parse(text, n).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_n(&s(3, "")).passes);
        let r = is_n(&s(3, "111"));
        assert_eq!(r.violated.unwrap().condition, NCondition::N1);
        let r = is_n(&s(4, "1001;0110"));
        assert_eq!(
            r.violated,
            Some(Violation {
                condition: NCondition::N2,
                witnesses: vec![1, 2]
            })
        );
    }

    #[test]
    fn n3_and_n4_witnesses() {
        assert!(in_n(&s(5, "10100;01100;00011")));
        let v3 = s(5, "10010;01010;00101");
        assert_eq!(is_n(&v3).violated.unwrap().condition, NCondition::N3);
        let v4 = s(6, "100100;010100;001100;000011");
        assert_eq!(is_n(&v4).violated.unwrap().condition, NCondition::N4);
    }

    #[test]
    fn family_sizes() {
        let sizes: Vec<usize> = (1..=5).map(|n| enumerate_n(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 5, 15, 51, 187]);
        assert!(enumerate_n(9).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_subspace(&s(3, "110;001")).unwrap().case, 2);
        assert_eq!(classify_subspace(&s(3, "101")).unwrap().case, 3);
        assert_eq!(
            classify_subspace(&s(3, "011")).unwrap(),
            CaseLabel::plain(7)
        );
        assert_eq!(
            classify_subspace(&s(4, "1000;0011")).unwrap(),
            CaseLabel {
                case: 7,
                subcase: Some(Subcase::A)
            }
        );
        assert!(matches!(
            classify_subspace(&s(3, "111")),
            Err(Error::NotInFamily(_))
        ));
    }

    #[test]
    fn reduce_fixtures() {
        let (l, r) = subspace_reduce(&s(5, "11000;00101;00010")).unwrap();
        assert_eq!((l.case, r), (4, s(4, "1100;0011")));
        let v = s(7, "1000010;0100001;0010000;0001001;0000101");
        let (l, r) = subspace_reduce(&v).unwrap();
        assert_eq!(l.case, 6);
        assert_eq!(r, s(6, "100001;010001;001000;000101;000011"));
        let v = s(7, "1010000;0100100;0001000;0000011");
        let (l, r) = subspace_reduce(&v).unwrap();
        assert_eq!(l.case, 6);
        assert_eq!(r, s(6, "101000;010001;000100;000010"));
        let v = s(6, "100100;010100;001000;000011");
        let (_, r) = subspace_reduce(&v).unwrap();
        assert_eq!(r, s(5, "10010;01001;00100"));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            subspace_expand(&s(2, "11"), 2).unwrap(),
            vec![s(3, "110;001")]
        );
        assert_eq!(subspace_expand(&s(2, ""), 1).unwrap(), vec![s(3, "")]);
        assert_eq!(
            subspace_expand(&s(2, "11"), 5).unwrap(),
            vec![s(3, "101;011")]
        );
        assert_eq!(
            subspace_expand(&s(2, "11"), 4).unwrap(),
            vec![s(3, "101;010")]
        );
        assert!(subspace_expand(&s(2, "11"), 0).is_err());
    }

    #[test]
    fn counts_match_words() {
        for n in 2..=6 {
            assert_eq!(
                case_counts(n).unwrap(),
                crate::language::case_counts(n).unwrap(),
                "n = {n}"
            );
        }
    }
}
