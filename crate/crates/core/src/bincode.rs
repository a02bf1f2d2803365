//! Bit-packed binary linear codes of length at most 128.
//!
//! Coordinate `i` of a word is bit `i` of a `u128`. Generator rows are kept in
//! reduced row echelon form with each row's pivot at its lowest set bit.
//!
//! Two independent ways of counting codeword weights live here:
//!
//! * [`BinaryCode::weight_distribution`] walks all `2^k` codewords in Gray-code
//!   order, one row XOR and one popcount per step, split into independent
//!   partitions by fixing the top message bits.
//! * [`BinaryCode::low_weight_distribution`] counts only weights up to a bound.
//!   It uses two disjoint information sets: a codeword of weight at most
//!   `2t + 1` has weight at most `t` on one of them, so enumerating messages of
//!   weight `<= t` on each side covers every such codeword exactly once.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest dimension the exhaustive enumerators accept.
pub const MAX_ENUMERATION_DIMENSION: usize = 40;

pub const MAX_LENGTH: usize = 128;

#[inline]
pub fn weight(word: u128) -> usize {
    word.count_ones() as usize
}

#[inline]
pub fn dot(a: u128, b: u128) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Parses a `0`/`1` string, first character at coordinate 0.
pub fn parse_word(bits: &str) -> Result<u128> {
    if bits.len() > MAX_LENGTH {
        return Err(Error::Parse(format!("word of length {} exceeds {MAX_LENGTH}", bits.len())));
    }
    bits.chars().enumerate().try_fold(0u128, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(Error::Parse(format!("invalid bit `{c}`"))),
    })
}

pub fn format_word(word: u128, length: usize) -> String {
    (0..length).map(|i| if word >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Packs a slice of 0/1 values.
pub fn pack(bits: &[u8]) -> u128 {
    debug_assert!(bits.len() <= MAX_LENGTH);
    bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | (u128::from(b & 1) << i))
}

/// Reduces `rows` to RREF in place and returns the rank. Zero rows are dropped.
fn row_reduce(rows: &mut Vec<u128>, length: usize) -> usize {
    let mut rank = 0;
    for col in 0..length {
        let bit = 1u128 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rank
}

/// A binary linear code stored as a canonical RREF generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    length: usize,
    rows: Vec<u128>,
}

impl BinaryCode {
    pub fn from_rows(rows: &[u128], length: usize) -> Result<Self> {
        if length > MAX_LENGTH {
            return Err(Error::DimensionMismatch(format!("length {length} exceeds {MAX_LENGTH}")));
        }
        let mask = length_mask(length);
        if let Some(bad) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad:#x} has bits beyond length {length}"
            )));
        }
        let mut rows = rows.to_vec();
        row_reduce(&mut rows, length);
        Ok(BinaryCode { length, rows })
    }

    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let length = rows.first().map_or(0, |r| r.as_ref().len());
        let words = rows
            .iter()
            .map(|r| {
                if r.as_ref().len() != length {
                    return Err(Error::DimensionMismatch("ragged bit strings".into()));
                }
                parse_word(r.as_ref())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&words, length)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    /// Coordinates of the RREF pivots, an information set.
    pub fn pivot_mask(&self) -> u128 {
        self.rows.iter().fold(0, |m, r| m | lowest_bit(*r))
    }

    /// Remainder of `word` modulo the row space; zero iff `word` is a codeword.
    pub fn reduce(&self, word: u128) -> u128 {
        self.rows
            .iter()
            .fold(word, |w, &r| if w & lowest_bit(r) != 0 { w ^ r } else { w })
    }

    pub fn contains(&self, word: u128) -> bool {
        self.reduce(word) == 0
    }

    /// Every generator is orthogonal to every generator, itself included.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &a)| self.rows[i..].iter().all(|&b| !dot(a, b)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    /// Codewords orthogonal to `x`.
    pub fn orthogonal_subcode(&self, x: u128) -> BinaryCode {
        let mut rows = self.rows.clone();
        if let Some(p) = rows.iter().position(|&r| dot(r, x)) {
            let pivot = rows.swap_remove(p);
            for r in rows.iter_mut() {
                if dot(*r, x) {
                    *r ^= pivot;
                }
            }
        }
        BinaryCode::from_rows(&rows, self.length).expect("rows stay within length")
    }

    pub fn intersection_dimension(&self, other: &BinaryCode) -> usize {
        let mut both = self.rows.clone();
        both.extend_from_slice(&other.rows);
        let sum_rank = row_reduce(&mut both, self.length.max(other.length));
        self.dimension() + other.dimension() - sum_rank
    }

    /// Type II iff every generator weight is divisible by four; for a
    /// self-orthogonal binary code this makes every codeword weight so.
    pub fn classify_type(&self) -> Result<CodeType> {
        if !self.is_self_dual() {
            return Err(Error::Precondition("type is defined for self-dual codes".into()));
        }
        if self.rows.iter().all(|&r| weight(r) % 4 == 0) {
            Ok(CodeType::TypeII)
        } else {
            Ok(CodeType::TypeI)
        }
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.dimension() > MAX_ENUMERATION_DIMENSION {
            return Err(Error::ResourceLimit { k: self.dimension(), limit: MAX_ENUMERATION_DIMENSION });
        }
        Ok(())
    }

    /// Exact weight distribution by Gray-code traversal on the current rayon
    /// pool. The result does not depend on the number of workers.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.check_enumerable()?;
        let k = self.dimension();
        let top_bits = k.min(10);
        let low_bits = k - top_bits;
        let (high_rows, low_rows) = (&self.rows[low_bits..], &self.rows[..low_bits]);
        let counts = (0u64..1 << top_bits)
            .into_par_iter()
            .map(|p| {
                let mut hist = vec![0u64; self.length + 1];
                let start = high_rows
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| p >> b & 1 == 1)
                    .fold(0u128, |acc, (_, &r)| acc ^ r);
                gray_walk(low_rows, start, &mut hist);
                hist
            })
            .reduce(|| vec![0u64; self.length + 1], merge_counts);
        Ok(WeightDistribution { length: self.length, counts, exact_through: self.length })
    }

    /// Single-threaded Gray-code traversal.
    pub fn weight_distribution_serial(&self) -> Result<WeightDistribution> {
        self.check_enumerable()?;
        let mut counts = vec![0u64; self.length + 1];
        gray_walk(&self.rows, 0, &mut counts);
        Ok(WeightDistribution { length: self.length, counts, exact_through: self.length })
    }

    /// A second information set disjoint from the pivot columns, with the
    /// generator rewritten to be systematic on it.
    fn complementary_information_set(&self) -> Option<(Vec<u128>, u128)> {
        let first = self.pivot_mask();
        let mut rows = self.rows.clone();
        let mut mask = 0u128;
        let mut rank = 0;
        for col in (0..self.length).filter(|c| first >> c & 1 == 0) {
            let bit = 1u128 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            mask |= bit;
            rank += 1;
        }
        (rank == rows.len()).then_some((rows, mask))
    }

    /// Exact `A_w` for `w <= max_weight`; larger weights are not counted.
    ///
    /// Needs two disjoint information sets, which every self-dual code has.
    pub fn low_weight_distribution(&self, max_weight: usize) -> Result<WeightDistribution> {
        let max_weight = max_weight.min(self.length);
        let t = max_weight / 2;
        let (second, _) = self.complementary_information_set().ok_or_else(|| {
            Error::Precondition("code has no two disjoint information sets".into())
        })?;
        let first_mask = self.pivot_mask();
        let mut counts = vec![0u64; max_weight + 1];
        visit_combinations(&self.rows, t, &mut |word| {
            let w = weight(word);
            if w <= max_weight {
                counts[w] += 1;
            }
        });
        visit_combinations(&second, t, &mut |word| {
            let w = weight(word);
            if w <= max_weight && weight(word & first_mask) > t {
                counts[w] += 1;
            }
        });
        counts.resize(self.length + 1, 0);
        Ok(WeightDistribution { length: self.length, counts, exact_through: max_weight })
    }

    /// Minimum nonzero weight, or `None` for the zero code.
    ///
    /// Enumerates messages by increasing weight `t` on the information sets;
    /// once `t` passes, every unseen codeword weighs at least `t + 1` per set.
    pub fn min_distance(&self) -> Option<usize> {
        self.search_low_weight(None)
    }

    /// Whether a nonzero codeword of weight `< threshold` exists. Stops at the
    /// first one found.
    pub fn has_weight_below(&self, threshold: usize) -> bool {
        self.search_low_weight(Some(threshold)).is_some_and(|d| d < threshold)
    }

    fn search_low_weight(&self, threshold: Option<usize>) -> Option<usize> {
        let k = self.dimension();
        if k == 0 {
            return None;
        }
        let second = self.complementary_information_set();
        let sets = usize::from(second.is_some()) + 1;
        let mut best = usize::MAX;
        for t in 1..=k {
            visit_exact(&self.rows, t, &mut |w| best = best.min(weight(w)));
            if let Some((rows, _)) = &second {
                visit_exact(rows, t, &mut |w| best = best.min(weight(w)));
            }
            let unseen_bound = sets * (t + 1);
            if best <= unseen_bound || threshold.is_some_and(|th| best < th || unseen_bound >= th) {
                break;
            }
        }
        Some(best)
    }

    /// Minimum distance by walking every codeword.
    pub fn min_distance_exhaustive(&self) -> Result<Option<usize>> {
        Ok(self.weight_distribution()?.min_distance())
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.rows {
            writeln!(f, "{}", format_word(r, self.length))?;
        }
        Ok(())
    }
}

#[inline]
fn lowest_bit(word: u128) -> u128 {
    word & word.wrapping_neg()
}

fn length_mask(length: usize) -> u128 {
    if length >= 128 {
        u128::MAX
    } else {
        (1u128 << length) - 1
    }
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Rows folded into the inner lookup table of [`gray_walk`].
const TABLE_BITS: usize = 8;

/// Visits `start ^ span(rows)`, tallying weights: a Gray-code walk over the
/// high rows, each step expanded against a table of all combinations of the
/// low rows.
fn gray_walk(rows: &[u128], start: u128, hist: &mut [u64]) {
    #[cfg(target_arch = "x86_64")]
    if std::arch::is_x86_feature_detected!("popcnt") {
        // SAFETY: the required CPU feature was just detected.
        return unsafe { gray_walk_popcnt(rows, start, hist) };
    }
    gray_walk_kernel(rows, start, hist)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "popcnt")]
unsafe fn gray_walk_popcnt(rows: &[u128], start: u128, hist: &mut [u64]) {
    gray_walk_kernel(rows, start, hist)
}

#[inline(always)]
fn gray_walk_kernel(rows: &[u128], start: u128, hist: &mut [u64]) {
    let split = rows.len().min(TABLE_BITS);
    let (low, high) = rows.split_at(split);
    let mut table = vec![0u128; 1 << split];
    for (i, &r) in low.iter().enumerate() {
        let half = 1 << i;
        for j in 0..half {
            table[half + j] = table[j] ^ r;
        }
    }
    // separate tallies per lane so consecutive increments rarely hit the
    // same counter
    let mut lanes = [[0u64; MAX_LENGTH + 1]; 4];
    let mut base = start;
    let steps: u64 = 1 << high.len();
    for i in 0..steps {
        if i > 0 {
            base ^= high[i.trailing_zeros() as usize];
        }
        for quad in table.chunks(4) {
            for (lane, &t) in lanes.iter_mut().zip(quad) {
                lane[(base ^ t).count_ones() as usize] += 1;
            }
        }
    }
    for lane in &lanes {
        for (h, &c) in hist.iter_mut().zip(lane) {
            *h += c;
        }
    }
}

/// Calls `f` on the XOR of every subset of `rows` of size at most `max_size`,
/// including the empty one.
fn visit_combinations(rows: &[u128], max_size: usize, f: &mut impl FnMut(u128)) {
    fn go(rows: &[u128], from: usize, left: usize, acc: u128, f: &mut impl FnMut(u128)) {
        f(acc);
        if left == 0 {
            return;
        }
        for i in from..rows.len() {
            go(rows, i + 1, left - 1, acc ^ rows[i], f);
        }
    }
    go(rows, 0, max_size, 0, f);
}

/// Calls `f` on the XOR of every subset of `rows` of size exactly `size`.
fn visit_exact(rows: &[u128], size: usize, f: &mut impl FnMut(u128)) {
    fn go(rows: &[u128], from: usize, left: usize, acc: u128, f: &mut impl FnMut(u128)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in from..=rows.len() - left {
            go(rows, i + 1, left - 1, acc ^ rows[i], f);
        }
    }
    if size <= rows.len() {
        go(rows, 0, size, 0, f);
    }
}

/// Weight tallies `A_0..A_n`, exact for `w <= exact_through`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub length: usize,
    pub counts: Vec<u64>,
    pub exact_through: usize,
}

impl WeightDistribution {
    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.exact_through >= self.length
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight within the exact range.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.exact_through.min(self.length)).find(|&w| self.count(w) > 0)
    }

    /// From a complete distribution: Type II iff all weights are `0 mod 4`.
    pub fn code_type(&self) -> CodeType {
        if self.counts.iter().enumerate().all(|(w, &c)| c == 0 || w % 4 == 0) {
            CodeType::TypeII
        } else {
            CodeType::TypeI
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CodeType {
    TypeI,
    TypeII,
}

/// Upper bound on `d` for a self-dual code of length `n`.
pub fn distance_bound(n: usize, code_type: CodeType) -> usize {
    let base = 4 * (n / 24) + 4;
    match code_type {
        CodeType::TypeII if n % 24 == 22 => base + 2,
        _ => base,
    }
}

pub fn is_extremal(n: usize, d: usize, code_type: CodeType) -> bool {
    d == distance_bound(n, code_type)
}

/// The four extremal weight enumerator families for lengths 64 and 68.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EnumeratorForm {
    W64_1,
    W64_2,
    W68_1,
    W68_2,
}

impl fmt::Display for EnumeratorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumeratorForm::W64_1 => "W64_1",
            EnumeratorForm::W64_2 => "W64_2",
            EnumeratorForm::W68_1 => "W68_1",
            EnumeratorForm::W68_2 => "W68_2",
        })
    }
}

impl std::str::FromStr for EnumeratorForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W64_1" => Ok(EnumeratorForm::W64_1),
            "W64_2" => Ok(EnumeratorForm::W64_2),
            "W68_1" => Ok(EnumeratorForm::W68_1),
            "W68_2" => Ok(EnumeratorForm::W68_2),
            _ => Err(Error::Parse(format!("unknown enumerator form `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorParams {
    pub form: EnumeratorForm,
    pub beta: i64,
    pub gamma: Option<i64>,
}

impl EnumeratorParams {
    /// `(A_12, A_14)` predicted by the form.
    pub fn predicted(&self) -> (i64, i64) {
        let (b, g) = (self.beta, self.gamma.unwrap_or(0));
        match self.form {
            EnumeratorForm::W64_1 => (1312 + 16 * b, 22016 - 64 * b),
            EnumeratorForm::W64_2 => (1312 + 16 * b, 23040 - 64 * b),
            EnumeratorForm::W68_1 => (442 + 4 * b, 10864 - 8 * b),
            EnumeratorForm::W68_2 => (442 + 4 * b, 14960 - 8 * b - 256 * g),
        }
    }
}

/// Matches `A_12` and `A_14` of a `[n, n/2, 12]` self-dual code (n = 64 or 68)
/// against the extremal enumerator families.
pub fn enumerator_params(n: usize, dist: &WeightDistribution) -> Result<EnumeratorParams> {
    let fail = |msg: String| Err(Error::Classification(msg));
    if dist.exact_through < 14 {
        return fail(format!("need exact counts through weight 14, have {}", dist.exact_through));
    }
    if let Some(w) = (1..12).find(|&w| dist.count(w) > 0) {
        return fail(format!("codeword of weight {w} below 12"));
    }
    let a12 = dist.count(12) as i64;
    let a14 = dist.count(14) as i64;
    let exact_div = |num: i64, den: i64, what: &str| -> Result<i64> {
        if num % den != 0 {
            Err(Error::Classification(format!("{what} = {num}/{den} is not integral")))
        } else {
            Ok(num / den)
        }
    };
    match n {
        64 => {
            let beta = exact_div(a12 - 1312, 16, "beta")?;
            if a14 == 22016 - 64 * beta {
                Ok(EnumeratorParams { form: EnumeratorForm::W64_1, beta, gamma: None })
            } else if a14 == 23040 - 64 * beta {
                Ok(EnumeratorParams { form: EnumeratorForm::W64_2, beta, gamma: None })
            } else {
                fail(format!("A14 = {a14} fits neither W64 form with beta = {beta}"))
            }
        }
        68 => {
            let beta = exact_div(a12 - 442, 4, "beta")?;
            if a14 == 10864 - 8 * beta {
                return Ok(EnumeratorParams { form: EnumeratorForm::W68_1, beta, gamma: None });
            }
            let gamma = exact_div(14960 - 8 * beta - a14, 256, "gamma")?;
            if !(0..=9).contains(&gamma) {
                return fail(format!("gamma = {gamma} outside 0..=9"));
            }
            Ok(EnumeratorParams { form: EnumeratorForm::W68_2, beta, gamma: Some(gamma) })
        }
        _ => fail(format!("no enumerator families for length {n}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&str]) -> BinaryCode {
        BinaryCode::from_bit_strings(rows).unwrap()
    }

    fn hamming8() -> BinaryCode {
        code(&["11110000", "00111100", "00001111", "01010101"])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(code(&["10", "01"]).dimension(), 2);
        assert_eq!(code(&["11", "11"]).dimension(), 1);
        assert_eq!(code(&["00", "00"]).dimension(), 0);
    }

    #[test]
    fn self_duality() {
        assert!(code(&["11"]).is_self_dual());
        assert!(!code(&["10"]).is_self_dual());
        assert!(hamming8().is_self_dual());
    }

    #[test]
    fn distributions() {
        let d = code(&["11"]).weight_distribution().unwrap();
        assert_eq!(d.counts, vec![1, 0, 1]);
        let h = hamming8().weight_distribution().unwrap();
        assert_eq!(h.counts, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(hamming8().weight_distribution_serial().unwrap(), h);
        assert_eq!(h.code_type(), CodeType::TypeII);
        assert_eq!(hamming8().classify_type().unwrap(), CodeType::TypeII);
        assert_eq!(code(&["11"]).classify_type().unwrap(), CodeType::TypeI);
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(code(&["1111"]).min_distance(), Some(4));
        assert_eq!(hamming8().min_distance(), Some(4));
        assert!(hamming8().has_weight_below(5));
        assert!(!hamming8().has_weight_below(4));
        assert_eq!(code(&["00"]).min_distance(), None);
    }

    #[test]
    fn low_weight_matches_full_on_hamming() {
        let low = hamming8().low_weight_distribution(5).unwrap();
        assert_eq!(&low.counts[..6], &[1, 0, 0, 0, 14, 0]);
        assert_eq!(low.exact_through, 5);
    }

    #[test]
    fn extremality() {
        assert!(is_extremal(68, 12, CodeType::TypeI));
        assert!(is_extremal(64, 12, CodeType::TypeI));
        assert!(!is_extremal(2, 2, CodeType::TypeI));
        assert_eq!(distance_bound(22, CodeType::TypeII), 6);
    }

    fn dist68(a12: u64, a14: u64) -> WeightDistribution {
        let mut counts = vec![0; 69];
        counts[0] = 1;
        counts[12] = a12;
        counts[14] = a14;
        WeightDistribution { length: 68, counts, exact_through: 15 }
    }

    #[test]
    fn enumerator_examples() {
        let p = enumerator_params(68, &dist68(1394, 13056)).unwrap();
        assert_eq!((p.form, p.beta, p.gamma), (EnumeratorForm::W68_2, 238, Some(0)));
        let p = enumerator_params(68, &dist68(686, 13960)).unwrap();
        assert_eq!((p.form, p.beta, p.gamma), (EnumeratorForm::W68_2, 61, Some(2)));
        let p = enumerator_params(68, &dist68(1710, 8328)).unwrap();
        assert_eq!((p.form, p.beta, p.gamma), (EnumeratorForm::W68_1, 317, None));
        assert_eq!(p.predicted(), (1710, 8328));
    }

    #[test]
    fn enumerator_rejects_inconsistent_counts() {
        assert!(enumerator_params(68, &dist68(1395, 13056)).is_err());
        assert!(enumerator_params(68, &dist68(1394, 13057)).is_err());
        assert!(enumerator_params(66, &dist68(1394, 13056)).is_err());
        let mut low = dist68(1394, 13056);
        low.counts[10] = 3;
        assert!(enumerator_params(68, &low).is_err());
    }

    #[test]
    fn enumeration_guard() {
        let rows: Vec<u128> = (0..41).map(|i| 1u128 << i).collect();
        let big = BinaryCode::from_rows(&rows, 82).unwrap();
        assert!(matches!(big.weight_distribution(), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("101").unwrap(), 0b101);
        assert_eq!(format_word(0b110, 3), "011");
        assert!(parse_word("102").is_err());
        assert!(BinaryCode::from_rows(&[0b100], 2).is_err());
    }

    #[test]
    fn neighbour_subcode() {
        let h = hamming8();
        let x = parse_word("11000000").unwrap();
        let sub = h.orthogonal_subcode(x);
        assert_eq!(sub.dimension(), 3);
        assert!(sub.rows().iter().all(|&r| !dot(r, x) && h.contains(r)));
    }
}
