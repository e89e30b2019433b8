//! Packed GF(2) vectors and subspaces.
//!
//! A [`Gf2Vector`] lives in F₂ᵐ for `1 ≤ m ≤ 32` and fits in one `u32`.
//! Coordinate 1 is the most significant position: it is printed first and
//! it decides the total order `≻` first. Concretely coordinate `i` is stored
//! at bit `m - i`, so comparing two vectors of the same dimension under `≻`
//! is plain integer comparison of their bit patterns.
//!
//! A [`Gf2Subspace`] always holds its unique reduced row-echelon basis,
//! sorted `v₁ ≻ v₂ ≻ … ≻ v_k`. Two subspaces are equal exactly when their
//! bases are identical, so derived `Eq`/`Hash` are subspace equality.
//!
//! ```
//! use polar_words::gf2::{Gf2Subspace, Gf2Vector};
//!
//! let v = Gf2Vector::parse("111").unwrap();
//! let w = Gf2Vector::parse("001").unwrap();
//! let span = Gf2Subspace::canonicalize(&[v, w], 3).unwrap();
//! assert_eq!(span.to_string(), "110;001");
//! ```

use std::fmt;

use rayon::prelude::*;

use crate::error::{guard, Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 32;

#[inline]
fn mask(dim: usize) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

/// An element of F₂ᵐ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: u8,
    bits: u32,
}

impl Gf2Vector {
    /// Builds a vector from its raw bit pattern (coordinate 1 = bit `dim - 1`).
    pub fn new(dim: usize, bits: u32) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange(dim));
        }
        if bits & !mask(dim) != 0 {
            return Err(Error::Parse(format!(
                "{bits:#b} has bits beyond dimension {dim}"
            )));
        }
        Ok(Self::from_raw(dim, bits))
    }

    #[inline]
    pub(crate) fn from_raw(dim: usize, bits: u32) -> Self {
        debug_assert!(dim <= MAX_DIM && bits & !mask(dim) == 0);
        Self {
            dim: dim as u8,
            bits,
        }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, 0)
    }

    /// The standard basis vector `x_i`.
    pub fn unit(dim: usize, i: usize) -> Result<Self> {
        Self::from_coords(dim, &[i])
    }

    /// The vector whose support is exactly `coords` (1-based).
    pub fn from_coords(dim: usize, coords: &[usize]) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        for &i in coords {
            if !(1..=dim).contains(&i) {
                return Err(Error::CoordinateOutOfRange { index: i, dim });
            }
            v.bits ^= 1 << (dim - i);
        }
        Ok(v)
    }

    /// Parses a `0`/`1` string, coordinate 1 leftmost.
    pub fn parse(text: &str) -> Result<Self> {
        let dim = text.len();
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::Parse(text.to_string()));
        }
        let mut bits = 0u32;
        for c in text.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(Error::Parse(text.to_string())),
            }
        }
        Ok(Self::from_raw(dim, bits))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficient of `x_i`. Panics when `i` is outside `1..=dim`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!((1..=self.dim()).contains(&i), "coordinate {i} out of range");
        self.bits >> (self.dim() - i) & 1 == 1
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.dim()).filter(|&i| self.get(i)).collect()
    }

    /// Smallest coordinate in the support.
    #[inline]
    pub fn alpha(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.dim() - (31 - self.bits.leading_zeros() as usize))
    }

    /// Largest coordinate in the support.
    #[inline]
    pub fn beta(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.dim() - self.bits.trailing_zeros() as usize)
    }

    /// `self ≻ other`: at the first coordinate where they differ, `self` has a 1.
    pub fn order_gt(&self, other: &Self) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self.bits > other.bits)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self::from_raw(self.dim(), self.bits ^ other.bits))
    }

    /// Drops coordinate `i`; the coordinates after it move down by one.
    pub fn delete_coordinate(&self, i: usize) -> Result<Self> {
        if self.dim() == 1 {
            return Err(Error::DimensionOutOfRange(0));
        }
        let bits = delete_bit(self.bits, self.dim(), i)?;
        Ok(Self::from_raw(self.dim() - 1, bits))
    }

    /// Inserts a zero at coordinate `i` (`1 ≤ i ≤ dim + 1`).
    pub fn insert_zero_coordinate(&self, i: usize) -> Result<Self> {
        let bits = insert_bit(self.bits, self.dim(), i)?;
        Ok(Self::from_raw(self.dim() + 1, bits))
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        } else {
            Ok(())
        }
    }
}

fn delete_bit(bits: u32, dim: usize, i: usize) -> Result<u32> {
    if !(1..=dim).contains(&i) {
        return Err(Error::CoordinateOutOfRange { index: i, dim });
    }
    let p = dim - i;
    let low = bits & mask(p);
    let high = (bits >> p) >> 1;
    Ok((high << p) | low)
}

fn insert_bit(bits: u32, dim: usize, i: usize) -> Result<u32> {
    if dim + 1 > MAX_DIM {
        return Err(Error::DimensionOutOfRange(dim + 1));
    }
    if !(1..=dim + 1).contains(&i) {
        return Err(Error::CoordinateOutOfRange {
            index: i,
            dim: dim + 1,
        });
    }
    let p = dim + 1 - i;
    let low = bits & mask(p);
    let high = bits >> p;
    Ok((high << (p + 1)) | low)
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

/// Reduced row-echelon form of a set of rows, sorted descending.
fn reduce_rows(rows: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for row in rows {
        let mut x = row;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            let pos = basis.partition_point(|&b| b > x);
            basis.insert(pos, x);
        }
    }
    // Clear every pivot column from the other rows.
    for i in 0..basis.len() {
        let lead = 1u32 << (31 - basis[i].leading_zeros());
        for j in 0..basis.len() {
            if j != i && basis[j] & lead != 0 {
                basis[j] ^= basis[i];
            }
        }
    }
    basis.sort_unstable_by(|a, b| b.cmp(a));
    basis
}

/// Rank of a list of vectors of a common dimension.
pub fn rank(vectors: &[Gf2Vector]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for v in vectors {
        let mut x = v.bits;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            let pos = basis.partition_point(|&b| b > x);
            basis.insert(pos, x);
        }
    }
    basis.len()
}

/// A subspace of F₂ⁿ held in canonical reduced-echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Subspace {
    ambient: u8,
    basis: Vec<Gf2Vector>,
}

impl Gf2Subspace {
    /// The span of `vectors` inside F₂^`ambient`.
    pub fn canonicalize(vectors: &[Gf2Vector], ambient: usize) -> Result<Self> {
        if ambient > MAX_DIM {
            return Err(Error::DimensionOutOfRange(ambient));
        }
        for v in vectors {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.dim(),
                });
            }
        }
        Ok(Self::from_bits(ambient, vectors.iter().map(|v| v.bits)))
    }

    pub(crate) fn from_bits(ambient: usize, rows: impl IntoIterator<Item = u32>) -> Self {
        let basis = reduce_rows(rows)
            .into_iter()
            .map(|b| Gf2Vector::from_raw(ambient, b))
            .collect();
        Self {
            ambient: ambient as u8,
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Result<Self> {
        Self::canonicalize(&[], ambient)
    }

    pub fn full(ambient: usize) -> Result<Self> {
        let units = (1..=ambient)
            .map(|i| Gf2Vector::unit(ambient, i))
            .collect::<Result<Vec<_>>>()?;
        Self::canonicalize(&units, ambient)
    }

    /// Span of rows given as `0`/`1` strings of length `ambient`.
    pub fn from_rows(ambient: usize, rows: &[&str]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| Gf2Vector::parse(r))
            .collect::<Result<Vec<_>>>()?;
        Self::canonicalize(&vectors, ambient)
    }

    /// Parses the text form `row;row;…` (the empty string is the zero subspace).
    pub fn parse(text: &str, ambient: usize) -> Result<Self> {
        let rows: Vec<&str> = if text.is_empty() {
            Vec::new()
        } else {
            text.split(';').collect()
        };
        Self::from_rows(ambient, &rows)
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient as usize
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn basis(&self) -> &[Gf2Vector] {
        &self.basis
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Union of the supports of all members, as a 0/1 mask over coordinates.
    pub fn support_mask(&self) -> u32 {
        self.basis.iter().fold(0, |acc, v| acc | v.bits)
    }

    /// Whether coordinate `i` lies in `supp(V)`.
    pub fn in_support(&self, i: usize) -> bool {
        (1..=self.ambient_dim()).contains(&i)
            && self.support_mask() >> (self.ambient_dim() - i) & 1 == 1
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        if v.dim() != self.ambient_dim() {
            return false;
        }
        let mut x = v.bits;
        for b in &self.basis {
            x = x.min(x ^ b.bits);
        }
        x == 0
    }

    /// All `2^dim` members, in no particular order.
    pub fn members(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let k = self.dim();
        (0u64..1 << k).map(move |sel| {
            let bits = self
                .basis
                .iter()
                .enumerate()
                .filter(|(j, _)| sel >> j & 1 == 1)
                .fold(0, |acc, (_, v)| acc ^ v.bits);
            Gf2Vector::from_raw(self.ambient_dim(), bits)
        })
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// `self + other`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(Self::from_bits(
            self.ambient_dim(),
            self.basis.iter().chain(&other.basis).map(|v| v.bits),
        ))
    }

    /// `self ∩ other`, by filtering the members of the smaller side.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        let (small, large) = if self.dim() <= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(Self::from_bits(
            self.ambient_dim(),
            small
                .members()
                .filter(|v| large.contains(v))
                .map(|v| v.bits),
        ))
    }

    /// Dimension of `self ∩ other` without building it.
    pub fn intersection_dim(&self, other: &Self) -> usize {
        debug_assert_eq!(self.ambient, other.ambient);
        let joined = self
            .basis
            .iter()
            .chain(&other.basis)
            .copied()
            .collect::<Vec<_>>();
        self.dim() + other.dim() - rank(&joined)
    }

    /// The span of this subspace and `v`.
    pub fn with_vector(&self, v: Gf2Vector) -> Result<Self> {
        if v.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.dim(),
            });
        }
        Ok(Self::from_bits(
            self.ambient_dim(),
            self.basis.iter().map(|b| b.bits).chain([v.bits]),
        ))
    }

    /// The span of the basis with `v` removed, if `v` is a basis vector.
    pub fn without_basis_vector(&self, v: &Gf2Vector) -> Option<Self> {
        let pos = self.basis.iter().position(|b| b == v)?;
        let mut basis = self.basis.clone();
        basis.remove(pos);
        Some(Self {
            ambient: self.ambient,
            basis,
        })
    }

    /// Strikes coordinate `i` from every member and re-canonicalizes in
    /// ambient `n − 1`.
    pub fn delete_coordinate(&self, i: usize) -> Result<Self> {
        let n = self.ambient_dim();
        if n == 0 {
            return Err(Error::CoordinateOutOfRange { index: i, dim: 0 });
        }
        if !(1..=n).contains(&i) {
            return Err(Error::CoordinateOutOfRange { index: i, dim: n });
        }
        let rows = self
            .basis
            .iter()
            .map(|v| delete_bit(v.bits, n, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(n - 1, rows))
    }

    /// Inserts an all-zero coordinate at position `i`; dimension is preserved.
    pub fn insert_zero_coordinate(&self, i: usize) -> Result<Self> {
        let n = self.ambient_dim();
        if n + 1 > MAX_DIM {
            return Err(Error::DimensionOutOfRange(n + 1));
        }
        if !(1..=n + 1).contains(&i) {
            return Err(Error::CoordinateOutOfRange {
                index: i,
                dim: n + 1,
            });
        }
        let rows = self
            .basis
            .iter()
            .map(|v| insert_bit(v.bits, n, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(n + 1, rows))
    }

    /// Applies a linear map given on raw bits to every basis vector and
    /// canonicalizes the image in ambient `target`.
    pub(crate) fn map_rows(&self, target: usize, f: impl Fn(u32) -> u32) -> Self {
        Self::from_bits(target, self.basis.iter().map(|v| f(v.bits)))
    }
}

impl fmt::Display for Gf2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.basis.iter().enumerate() {
            if j > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Subspace(F2^{}: [{self}])", self.ambient)
    }
}

/// Number of `k`-dimensional subspaces of F₂ⁿ.
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    num / den
}

/// Every subspace of F₂ⁿ (or only those of dimension `dim_filter`), each
/// exactly once, sorted by dimension and then lexicographically by basis.
pub fn enumerate_subspaces(n: usize, dim_filter: Option<usize>) -> Result<Vec<Gf2Subspace>> {
    guard("enumerate_subspaces: 1 <= n <= 12", n, 1, 12)?;
    let dims: Vec<usize> = match dim_filter {
        Some(k) if k > n => Vec::new(),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut out = Vec::new();
    for k in dims {
        let mut layer: Vec<Gf2Subspace> = pivot_sets(n, k)
            .into_par_iter()
            .flat_map_iter(|pivots| echelon_forms(n, &pivots))
            .collect();
        layer.par_sort_unstable_by(|a, b| a.basis.cmp(&b.basis));
        out.extend(layer);
    }
    Ok(out)
}

fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..=n {
            if n - c + 1 < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All reduced echelon forms with the given pivot columns.
fn echelon_forms(n: usize, pivots: &[usize]) -> Vec<Gf2Subspace> {
    // Free slots: (row, column) with column non-pivot and after the row's pivot.
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| {
            (p + 1..=n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let base: Vec<u32> = pivots.iter().map(|&p| 1u32 << (n - p)).collect();
    (0u64..1 << free.len())
        .map(|fill| {
            let mut rows = base.clone();
            for (j, &(r, c)) in free.iter().enumerate() {
                if fill >> j & 1 == 1 {
                    rows[r] |= 1 << (n - c);
                }
            }
            Gf2Subspace {
                ambient: n as u8,
                basis: rows
                    .into_iter()
                    .map(|b| Gf2Vector::from_raw(n, b))
                    .collect(),
            }
        })
        .collect()
}

/// Incremental echelon basis over bit-packed rows of arbitrary width.
///
/// Used for ranks of incidence matrices that do not fit in one word.
#[derive(Clone, Debug)]
pub struct Gf2Echelon {
    width: usize,
    words: usize,
    /// `pivot_row[c]` is the index into `rows` of the row whose leading column is `c`.
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Vec<u64>>,
}

impl Gf2Echelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            words: width.div_ceil(64),
            pivot_row: vec![None; width],
            rows: Vec::new(),
        }
    }

    /// A zero row of the right width.
    pub fn empty_row(&self) -> Vec<u64> {
        vec![0; self.words]
    }

    /// A row with ones at the given columns.
    pub fn row_from_columns(&self, cols: &[usize]) -> Vec<u64> {
        let mut row = self.empty_row();
        for &c in cols {
            assert!(c < self.width, "column {c} out of range");
            row[c / 64] ^= 1 << (c % 64);
        }
        row
    }

    /// Reduces `row` against the basis and keeps it if it is independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.words);
        loop {
            let Some(lead) = leading_column(&row) else {
                return false;
            };
            match self.pivot_row[lead] {
                Some(r) => {
                    let pivot = &self.rows[r];
                    // Words before lead / 64 are zero in both rows.
                    for w in lead / 64..self.words {
                        row[w] ^= pivot[w];
                    }
                }
                None => {
                    self.pivot_row[lead] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn leading_column(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Gf2Vector {
        Gf2Vector::parse(s).unwrap()
    }

    fn span(n: usize, rows: &[&str]) -> Gf2Subspace {
        Gf2Subspace::from_rows(n, rows).unwrap()
    }

    #[test]
    fn order_examples() {
        assert!(v("100").order_gt(&v("011")).unwrap());
        assert!(!v("101").order_gt(&v("101")).unwrap());
        assert!(v("011").order_gt(&v("010")).unwrap());
        assert_eq!(
            v("01").order_gt(&v("011")),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn alpha_beta_weight() {
        let x = v("0110100");
        assert_eq!(x.weight(), 3);
        assert_eq!(x.alpha(), Some(2));
        assert_eq!(x.beta(), Some(5));
        assert_eq!(x.support(), vec![2, 3, 5]);
        assert_eq!(v("000").alpha(), None);
        let full = Gf2Vector::from_coords(32, &[1, 32]).unwrap();
        assert_eq!((full.alpha(), full.beta()), (Some(1), Some(32)));
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(span(3, &["111", "001"]).to_string(), "110;001");
        let z = Gf2Subspace::canonicalize(&[], 4).unwrap();
        assert_eq!((z.dim(), z.to_string()), (0, String::new()));
        assert_eq!(span(2, &["11", "01"]).to_string(), "10;01");
        assert!(Gf2Subspace::canonicalize(&[v("11")], 3).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[v("101"), v("011"), v("110")]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[v("100"), v("010"), v("001")]), 3);
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_subspaces(1, None).unwrap().len(), 2);
        assert_eq!(enumerate_subspaces(2, None).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(3, None).unwrap().len(), 16);
        let n2: Vec<String> = enumerate_subspaces(2, None)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(n2, vec!["", "01", "10", "11", "10;01"]);
        assert!(matches!(
            enumerate_subspaces(0, None),
            Err(Error::Guard { .. })
        ));
        assert!(matches!(
            enumerate_subspaces(13, None),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn delete_coordinate_examples() {
        let big = span(5, &["10001", "01001", "00100"]);
        assert_eq!(
            big.delete_coordinate(4).unwrap(),
            span(4, &["1001", "0101", "0010"])
        );
        let z = Gf2Subspace::zero(3).unwrap();
        assert_eq!(
            z.delete_coordinate(2).unwrap(),
            Gf2Subspace::zero(2).unwrap()
        );
        assert_eq!(
            span(2, &["11"]).delete_coordinate(2).unwrap(),
            span(1, &["1"])
        );
    }

    #[test]
    fn insert_zero_coordinate_examples() {
        assert_eq!(
            span(2, &["11"]).insert_zero_coordinate(2).unwrap(),
            span(3, &["101"])
        );
        let z = Gf2Subspace::zero(2)
            .unwrap()
            .insert_zero_coordinate(1)
            .unwrap();
        assert_eq!((z.ambient_dim(), z.dim()), (3, 0));
        assert_eq!(
            span(2, &["10"]).insert_zero_coordinate(1).unwrap(),
            span(3, &["010"])
        );
        assert!(span(2, &["10"]).insert_zero_coordinate(4).is_err());
    }

    #[test]
    fn intersection_and_join() {
        let a = span(4, &["1000", "0100"]);
        let b = span(4, &["1100", "0010"]);
        assert_eq!(a.intersection(&b).unwrap(), span(4, &["1100"]));
        assert_eq!(a.intersection_dim(&b), 1);
        assert_eq!(a.join(&b).unwrap().dim(), 3);
    }

    #[test]
    fn echelon_rank() {
        let mut e = Gf2Echelon::new(130);
        assert!(e.insert(e.row_from_columns(&[0, 129])));
        assert!(e.insert(e.row_from_columns(&[129, 70])));
        assert!(!e.insert(e.row_from_columns(&[0, 70])));
        assert!(!e.insert(e.empty_row()));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(gaussian_binomial(3, 1), 7);
        assert_eq!(gaussian_binomial(3, 4), 0);
    }
}
