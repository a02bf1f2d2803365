//! Finite groups as multiplication tables, group rings over [`RingId`], and
//! dense matrices over the rings.
//!
//! A group element is an index into its group's tables; index 0 is always
//! the identity. A [`Listing`] decides which group element each position of a
//! seed string (and each row/column of `σ(v)`) refers to.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{RingElement, RingId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// `C_n = <x | x^n = 1>`.
    Cyclic(usize),
    /// `C_a × C_b`, element `x^i y^j` stored at index `i + a·j`.
    Product(usize, usize),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "C{n}"),
            GroupKind::Product(a, b) => write!(f, "C{a}xC{b}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group `{s}`"));
        let parse_order = |t: &str| -> Result<usize> {
            let n: usize = t.strip_prefix('C').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            Ok(n)
        };
        if let Some((a, b)) = s.split_once('x') {
            Ok(GroupKind::Product(parse_order(a)?, parse_order(b)?))
        } else if let Some((a, b)) = s.split_once(',') {
            // `C4,2` shorthand for C4 × C2
            Ok(GroupKind::Product(parse_order(a)?, b.parse().map_err(|_| bad())?))
        } else {
            Ok(GroupKind::Cyclic(parse_order(s)?))
        }
    }
}

/// A finite group given by its multiplication and inverse tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    kind: GroupKind,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl Group {
    pub fn new(kind: GroupKind) -> Group {
        let (a, b) = match kind {
            GroupKind::Cyclic(n) => (n, 1),
            GroupKind::Product(a, b) => (a, b),
        };
        let order = a * b;
        let split = |g: usize| (g % a, g / a);
        let join = |i: usize, j: usize| (i % a) + a * (j % b);
        let mut mul = vec![0; order * order];
        let mut inv = vec![0; order];
        for g in 0..order {
            let (gi, gj) = split(g);
            inv[g] = join(a - gi, b - gj);
            for h in 0..order {
                let (hi, hj) = split(h);
                mul[g * order + h] = join(gi + hi, gj + hj);
            }
        }
        Group { kind, order, mul, inv }
    }

    pub fn cyclic(n: usize) -> Group {
        Group::new(GroupKind::Cyclic(n))
    }

    pub fn product(a: usize, b: usize) -> Group {
        Group::new(GroupKind::Product(a, b))
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.kind, GroupKind::Cyclic(_))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (0..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|g| self.element_order(g)).fold(1, lcm)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// How positions `1..n` of a seed (and rows of `σ(v)`) map to group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Listing {
    /// Position `k` is the element stored at index `k`: `1, x, x², …` for
    /// cyclic groups, `1, x, …, x^(a-1), y, xy, …` for `C_a × C_b`.
    Natural,
    /// For `C_2p`: position `i + p·j` is `x^(2i+j)`, giving the block form
    /// `[[A1, A2], [A2', A1]]` of `σ(v)`.
    C2pSplit,
    /// Position `k` is element index `perm[k]`.
    Explicit(Vec<usize>),
}

impl Listing {
    pub fn permutation(&self, group: &Group) -> Result<Vec<usize>> {
        let n = group.order();
        match self {
            Listing::Natural => Ok((0..n).collect()),
            Listing::C2pSplit => {
                if !group.is_cyclic() || n % 2 != 0 {
                    return Err(Error::InvalidListing(format!(
                        "c2p split needs a cyclic group of even order, got {}",
                        group.kind()
                    )));
                }
                let p = n / 2;
                Ok((0..n).map(|k| 2 * (k % p) + k / p).collect())
            }
            Listing::Explicit(perm) => {
                let mut seen = vec![false; n];
                if perm.len() != n {
                    return Err(Error::InvalidListing(format!("{} entries for a group of order {n}", perm.len())));
                }
                for &g in perm {
                    if g >= n || std::mem::replace(&mut seen[g], true) {
                        return Err(Error::InvalidListing(format!("{perm:?} is not a permutation")));
                    }
                }
                Ok(perm.clone())
            }
        }
    }
}

impl fmt::Display for Listing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Listing::Natural => f.write_str("natural"),
            Listing::C2pSplit => f.write_str("c2p"),
            Listing::Explicit(p) => {
                let parts: Vec<String> = p.iter().map(|g| g.to_string()).collect();
                write!(f, "perm:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for Listing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(Listing::Natural),
            "c2p" => Ok(Listing::C2pSplit),
            _ => {
                let body = s
                    .strip_prefix("perm:")
                    .ok_or_else(|| Error::Parse(format!("unknown listing `{s}`")))?;
                body.split(',')
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad permutation entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()
                    .map(Listing::Explicit)
            }
        }
    }
}

/// `Σ α_g g` in `RG`, stored by group element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    ring: RingId,
    group: Arc<Group>,
    coeffs: Vec<RingElement>,
}

impl GroupRingElement {
    pub fn new(ring: RingId, group: Arc<Group>, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch { left: ring, right: bad.ring() });
        }
        Ok(GroupRingElement { ring, group, coeffs })
    }

    pub fn zero(ring: RingId, group: Arc<Group>) -> Self {
        let coeffs = vec![ring.zero(); group.order()];
        GroupRingElement { ring, group, coeffs }
    }

    pub fn identity(ring: RingId, group: Arc<Group>) -> Self {
        let mut e = Self::zero(ring, group);
        e.coeffs[0] = ring.one();
        e
    }

    /// Coefficients given in listing order, as printed in seed strings.
    pub fn from_listed(ring: RingId, group: Arc<Group>, listing: &Listing, listed: &[RingElement]) -> Result<Self> {
        let perm = listing.permutation(&group)?;
        if listed.len() != perm.len() {
            return Err(Error::DimensionMismatch(format!(
                "seed of length {} for a group of order {}",
                listed.len(),
                perm.len()
            )));
        }
        let mut coeffs = vec![ring.zero(); perm.len()];
        for (k, &g) in perm.iter().enumerate() {
            coeffs[g] = listed[k];
        }
        GroupRingElement::new(ring, group, coeffs)
    }

    pub fn parse(ring: RingId, group: Arc<Group>, listing: &Listing, seed: &str) -> Result<Self> {
        let listed = ring.parse_vector(seed)?;
        Self::from_listed(ring, group, listing, &listed)
    }

    pub fn to_listed(&self, listing: &Listing) -> Result<Vec<RingElement>> {
        let perm = listing.permutation(&self.group)?;
        Ok(perm.iter().map(|&g| self.coeffs[g]).collect())
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> RingElement {
        self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if self.group != other.group {
            return Err(Error::GroupMismatch { left: self.group.order(), right: other.group.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_unchecked(*b)).collect();
        Ok(GroupRingElement { ring: self.ring, group: self.group.clone(), coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.group.order();
        let mut coeffs = vec![self.ring.zero(); n];
        for (g, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (h, b) in other.coeffs.iter().enumerate() {
                let gh = self.group.mul(g, h);
                coeffs[gh] = coeffs[gh].add_unchecked(a.mul_unchecked(*b));
            }
        }
        Ok(GroupRingElement { ring: self.ring, group: self.group.clone(), coeffs })
    }

    /// The canonical involution `v* = Σ α_g g⁻¹`.
    pub fn involution(&self) -> Self {
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len()];
        for (g, &a) in self.coeffs.iter().enumerate() {
            coeffs[self.group.inv(g)] = a;
        }
        GroupRingElement { ring: self.ring, group: self.group.clone(), coeffs }
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// `v v* = 1`.
    pub fn is_unitary_unit(&self) -> bool {
        self.mul(&self.involution()).map(|p| p.is_identity()).unwrap_or(false)
    }

    /// `σ(v) = (α_{g_i⁻¹ g_j})` with `g_i` taken from the listing.
    pub fn sigma(&self, listing: &Listing) -> Result<RingMatrix> {
        let perm = listing.permutation(&self.group)?;
        let n = perm.len();
        let mut entries = Vec::with_capacity(n * n);
        for &gi in &perm {
            let gi_inv = self.group.inv(gi);
            for &gj in &perm {
                entries.push(self.coeffs[self.group.mul(gi_inv, gj)]);
            }
        }
        Ok(RingMatrix { ring: self.ring, rows: n, cols: n, entries })
    }
}

/// Dense row-major matrix over a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    ring: RingId,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zeros(ring: RingId, rows: usize, cols: usize) -> Self {
        RingMatrix { ring, rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: RingId, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: RingId, rows: &[Vec<RingElement>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            if let Some(bad) = row.iter().find(|c| c.ring() != ring) {
                return Err(Error::RingMismatch { left: ring, right: bad.ring() });
            }
            entries.extend_from_slice(row);
        }
        Ok(RingMatrix { ring, rows: rows.len(), cols, entries })
    }

    /// `cir(a_0, …, a_{n-1})`: entry `(i, j)` is `a_{(j-i) mod n}`, the shape
    /// `σ(v)` takes for a cyclic group under the natural listing.
    pub fn circulant(first_row: &[RingElement]) -> Result<Self> {
        Self::cyclic_pattern(first_row, |i, j, n| (j + n - i) % n)
    }

    /// `rcir(a_0, …, a_{n-1})`: row `i` starts at `a_i` and wraps forward, so
    /// entry `(i, j)` is `a_{(i+j) mod n}`. Always symmetric.
    pub fn reverse_circulant(first_row: &[RingElement]) -> Result<Self> {
        Self::cyclic_pattern(first_row, |i, j, n| (i + j) % n)
    }

    fn cyclic_pattern(first_row: &[RingElement], index: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let n = first_row.len();
        let ring = first_row
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty first row".into()))?
            .ring();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(first_row[index(i, j, n)]);
            }
        }
        Ok(RingMatrix { ring, rows: n, cols: n, entries })
    }

    /// `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let (r, k) = (a.rows, a.cols);
        for m in [b, c, d] {
            if m.rows != r || m.cols != k {
                return Err(Error::DimensionMismatch("blocks differ in shape".into()));
            }
            if m.ring != a.ring {
                return Err(Error::RingMismatch { left: a.ring, right: m.ring });
            }
        }
        let mut out = Self::zeros(a.ring, 2 * r, 2 * k);
        for (bi, bj, m) in [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)] {
            for i in 0..r {
                for j in 0..k {
                    out.set(bi * r + i, bj * k + j, m.get(i, j));
                }
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> RingElement {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: RingElement) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<RingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add_unchecked(*b)).collect();
        Ok(RingMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].add_unchecked(a.mul_unchecked(other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j).bits() == u8::from(i == j)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Every row is the previous one shifted one place to the right.
    pub fn is_circulant(&self) -> bool {
        self.rows == self.cols
            && self.rows > 0
            && RingMatrix::circulant(self.row(0)).map(|c| &c == self).unwrap_or(false)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", RingId::format_vector(self.row(i)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_symbol;

    fn f2(bits: &str) -> Vec<RingElement> {
        RingId::F2.parse_vector(bits).unwrap()
    }

    fn gr(group: &Arc<Group>, seed: &str) -> GroupRingElement {
        GroupRingElement::parse(RingId::F2, group.clone(), &Listing::Natural, seed).unwrap()
    }

    #[test]
    fn group_tables() {
        let c4 = Group::cyclic(4);
        assert_eq!(c4.mul(1, 3), 0);
        let c17 = Group::cyclic(17);
        assert!((1..17).all(|g| c17.element_order(g) == 17));
        let c42 = Group::product(4, 2);
        assert_eq!(c42.order(), 8);
        assert!(c42.is_abelian());
        assert_eq!(c42.exponent(), 4);
        assert_eq!(Group::product(2, 2).exponent(), 2);
        for g in [c4, c17, c42] {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(0, a), a);
                assert_eq!(g.mul(a, 0), a);
                assert_eq!(g.mul(a, g.inv(a)), 0);
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn group_names() {
        assert_eq!("C17".parse::<GroupKind>().unwrap(), GroupKind::Cyclic(17));
        assert_eq!("C4xC2".parse::<GroupKind>().unwrap(), GroupKind::Product(4, 2));
        assert_eq!("C4,2".parse::<GroupKind>().unwrap(), GroupKind::Product(4, 2));
        assert!("D4".parse::<GroupKind>().is_err());
        assert_eq!(GroupKind::Product(4, 2).to_string(), "C4xC2");
    }

    #[test]
    fn group_ring_products() {
        let c4 = Arc::new(Group::cyclic(4));
        let v = gr(&c4, "1101");
        assert!(v.add(&v).unwrap().is_zero());
        assert!(gr(&c4, "0100").mul(&gr(&c4, "0001")).unwrap().is_identity());
        assert_eq!(gr(&c4, "1100").mul(&gr(&c4, "1100")).unwrap(), gr(&c4, "1010"));
    }

    #[test]
    fn involution_examples() {
        let c4 = Arc::new(Group::cyclic(4));
        assert_eq!(gr(&c4, "1100").involution(), gr(&c4, "1001"));
        let c22 = Arc::new(Group::product(2, 2));
        let v = gr(&c22, "1011");
        assert_eq!(v.involution(), v);
        assert_eq!(v.involution().involution(), v);
    }

    #[test]
    fn unitary_units() {
        let c4 = Arc::new(Group::cyclic(4));
        assert!(GroupRingElement::identity(RingId::F2, c4.clone()).is_unitary_unit());
        assert!(gr(&c4, "0100").is_unitary_unit());
        // (1+x+x²)(1+x²+x³) = 3 + 2x + 2x² + 2x³ = 1 in characteristic 2
        assert!(gr(&c4, "1110").is_unitary_unit());
        // (1+x)(1+x³) = x + x³
        assert!(!gr(&c4, "1100").is_unitary_unit());
    }

    #[test]
    fn sigma_natural_is_circulant() {
        let c4 = Arc::new(Group::cyclic(4));
        let v = GroupRingElement::parse(RingId::F4uF4, c4, &Listing::Natural, "8966").unwrap();
        let s = v.sigma(&Listing::Natural).unwrap();
        let expected = RingMatrix::circulant(&RingId::F4uF4.parse_vector("8966").unwrap()).unwrap();
        assert_eq!(s, expected);
        assert!(s.is_circulant());
    }

    #[test]
    fn sigma_c2p_block_structure() {
        let c8 = Arc::new(Group::cyclic(8));
        let seed = RingId::F2uF2.parse_vector("uuu10311").unwrap();
        let v = GroupRingElement::from_listed(RingId::F2uF2, c8, &Listing::C2pSplit, &seed).unwrap();
        let s = v.sigma(&Listing::C2pSplit).unwrap();
        let a1 = RingMatrix::circulant(&seed[0..4]).unwrap();
        let a2 = RingMatrix::circulant(&seed[4..8]).unwrap();
        let shifted = [seed[7], seed[4], seed[5], seed[6]];
        let a2p = RingMatrix::circulant(&shifted).unwrap();
        assert_eq!(s, RingMatrix::block2(&a1, &a2, &a2p, &a1).unwrap());
    }

    #[test]
    fn sigma_zero() {
        let c8 = Arc::new(Group::cyclic(8));
        let z = GroupRingElement::zero(RingId::F2uF2, c8);
        assert!(z.sigma(&Listing::C2pSplit).unwrap().is_zero());
    }

    #[test]
    fn listing_validation() {
        let c17 = Group::cyclic(17);
        assert!(Listing::C2pSplit.permutation(&c17).is_err());
        assert!(Listing::C2pSplit.permutation(&Group::product(4, 2)).is_err());
        assert!(Listing::Explicit(vec![0, 1, 1, 2]).permutation(&Group::cyclic(4)).is_err());
        let l: Listing = "perm:0,4,1,5,2,6,3,7".parse().unwrap();
        assert_eq!(l.to_string(), "perm:0,4,1,5,2,6,3,7");
        assert!(l.permutation(&Group::product(4, 2)).is_ok());
    }

    #[test]
    fn reverse_circulant_shape() {
        let r = RingId::F2uF2;
        let row: Vec<_> = ['0', '1', 'u'].iter().map(|&c| parse_symbol(c, r).unwrap()).collect();
        let m = RingMatrix::reverse_circulant(&row).unwrap();
        assert_eq!(m.to_string(), "01u\n1u0\nu01\n");
        assert!(m.is_symmetric());
    }

    #[test]
    fn shift_matrix_has_order_n() {
        let p = RingMatrix::circulant(&f2("00001")).unwrap();
        let mut acc = p.clone();
        for _ in 1..5 {
            assert!(!acc.is_identity());
            acc = acc.mul(&p).unwrap();
        }
        assert!(acc.is_identity());
    }

    #[test]
    fn matrix_errors() {
        let a = RingMatrix::zeros(RingId::F2, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.add(&RingMatrix::zeros(RingId::F2, 3, 2)).is_err());
        assert!(a.add(&RingMatrix::zeros(RingId::F2uF2, 2, 3)).is_err());
        let i = RingMatrix::identity(RingId::F2, 3);
        assert_eq!(i.mul(&a.transpose()).unwrap(), a.transpose());
    }
}
