//! Gray maps from the rings down to binary.
//!
//! * `ψ: F4+uF4 → (F2+uF2)²`, `aω + b(1+ω) ↦ (a, b)`
//! * `φ: F2+uF2 → F2²`, `a + bu ↦ (b, a+b)`
//!
//! Vectors map either in block layout (all first components, then all second
//! components) or interleaved (component pairs per symbol).

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::bincode::{pack, BinaryCode};
use crate::error::{Error, Result};
use crate::rings::{RingElement, RingId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Layout {
    #[default]
    Block,
    Interleaved,
}

impl Layout {
    pub const ALL: [Layout; 2] = [Layout::Block, Layout::Interleaved];
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Block => "block",
            Layout::Interleaved => "interleaved",
        })
    }
}

impl FromStr for Layout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "block" => Ok(Layout::Block),
            "interleaved" => Ok(Layout::Interleaved),
            _ => Err(Error::Parse(format!("unknown layout `{s}`"))),
        }
    }
}

/// Layouts for the two stages of the map to binary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GrayLayout {
    pub psi: Layout,
    pub phi: Layout,
}

impl GrayLayout {
    /// The distinct layouts that matter for `ring`, block first.
    pub fn candidates(ring: RingId) -> Vec<GrayLayout> {
        let psi: &[Layout] = if ring == RingId::F4uF4 { &Layout::ALL } else { &[Layout::Block] };
        let phi: &[Layout] = if ring == RingId::F2 { &[Layout::Block] } else { &Layout::ALL };
        psi.iter()
            .flat_map(|&p| phi.iter().map(move |&q| GrayLayout { psi: p, phi: q }))
            .collect()
    }
}

impl fmt::Display for GrayLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "psi={},phi={}", self.psi, self.phi)
    }
}

/// A vector of ring symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordVector {
    pub ring: RingId,
    pub symbols: Vec<RingElement>,
}

impl CodewordVector {
    pub fn new(ring: RingId, symbols: Vec<RingElement>) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|s| s.ring() != ring) {
            return Err(Error::RingMismatch { left: ring, right: bad.ring() });
        }
        Ok(CodewordVector { ring, symbols })
    }

    pub fn parse(ring: RingId, s: &str) -> Result<Self> {
        Ok(CodewordVector { ring, symbols: ring.parse_vector(s)? })
    }
}

/// `ψ` per symbol, found by solving `s = ωa + (1+ω)b` over all candidates.
static PSI_TABLE: LazyLock<[(RingElement, RingElement); 16]> = LazyLock::new(|| {
    let big = RingId::F4uF4;
    let omega = big.element(0b0100).unwrap();
    let omega_bar = omega.add_unchecked(big.one());
    let mut table = [(RingId::F2uF2.zero(), RingId::F2uF2.zero()); 16];
    let mut found = [false; 16];
    for a in RingId::F2uF2.elements() {
        for b in RingId::F2uF2.elements() {
            let s = omega
                .mul_unchecked(a.lift(big).unwrap())
                .add_unchecked(omega_bar.mul_unchecked(b.lift(big).unwrap()));
            let idx = s.bits() as usize;
            assert!(!found[idx], "psi decomposition is not unique");
            found[idx] = true;
            table[idx] = (a, b);
        }
    }
    table
});

/// `φ` per symbol: `a + bu ↦ (b, a+b)`.
fn phi_symbol(s: RingElement) -> (u8, u8) {
    let a = s.bits() & 1;
    let b = (s.bits() >> 1) & 1;
    (b, a ^ b)
}

pub fn psi_symbol(s: RingElement) -> (RingElement, RingElement) {
    PSI_TABLE[s.bits() as usize]
}

fn arrange<T: Copy>(pairs: impl Iterator<Item = (T, T)>, layout: Layout) -> Vec<T> {
    let (first, second): (Vec<T>, Vec<T>) = pairs.unzip();
    match layout {
        Layout::Block => first.into_iter().chain(second).collect(),
        Layout::Interleaved => first.into_iter().zip(second).flat_map(|(x, y)| [x, y]).collect(),
    }
}

fn expect_ring(v: &CodewordVector, ring: RingId) -> Result<()> {
    if v.ring != ring {
        return Err(Error::RingMismatch { left: ring, right: v.ring });
    }
    Ok(())
}

/// `F4+uF4` word of length `n` to an `F2+uF2` word of length `2n`.
pub fn psi_f4u(v: &CodewordVector, layout: Layout) -> Result<CodewordVector> {
    expect_ring(v, RingId::F4uF4)?;
    let symbols = arrange(v.symbols.iter().map(|&s| psi_symbol(s)), layout);
    Ok(CodewordVector { ring: RingId::F2uF2, symbols })
}

/// `F2+uF2` word of length `n` to `2n` bits (as 0/1 values).
pub fn phi_f2u(v: &CodewordVector, layout: Layout) -> Result<Vec<u8>> {
    expect_ring(v, RingId::F2uF2)?;
    Ok(arrange(v.symbols.iter().map(|&s| phi_symbol(s)), layout))
}

/// Composite map to binary: identity on `F2`, `φ` on `F2+uF2`, `φ∘ψ` on `F4+uF4`.
pub fn to_binary(v: &CodewordVector, layout: GrayLayout) -> Vec<u8> {
    match v.ring {
        RingId::F2 => v.symbols.iter().map(|s| s.bits()).collect(),
        RingId::F2uF2 => phi_f2u(v, layout.phi).expect("ring checked"),
        RingId::F4uF4 => {
            let mid = psi_f4u(v, layout.psi).expect("ring checked");
            phi_f2u(&mid, layout.phi).expect("ring checked")
        }
    }
}

/// Lee weight from the per-symbol table `0, 1, u, 1+u ↦ 0, 1, 2, 1`, extended
/// to `F4+uF4` through `ψ`.
pub fn lee_weight(v: &CodewordVector) -> usize {
    fn f2u(s: RingElement) -> usize {
        [0, 1, 2, 1][s.bits() as usize & 3]
    }
    v.symbols
        .iter()
        .map(|&s| match v.ring {
            RingId::F2 => s.bits() as usize,
            RingId::F2uF2 => f2u(s),
            RingId::F4uF4 => {
                let (a, b) = psi_symbol(s);
                f2u(a) + f2u(b)
            }
        })
        .sum()
}

/// A linear code over a ring given by generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCode {
    pub ring: RingId,
    pub length: usize,
    pub rows: Vec<Vec<RingElement>>,
}

impl RingCode {
    pub fn new(ring: RingId, length: usize, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        for row in &rows {
            if row.len() != length {
                return Err(Error::DimensionMismatch(format!("row of length {} in code of length {length}", row.len())));
            }
            if let Some(bad) = row.iter().find(|s| s.ring() != ring) {
                return Err(Error::RingMismatch { left: ring, right: bad.ring() });
            }
        }
        Ok(RingCode { ring, length, rows })
    }

    /// Every generator row is orthogonal to every generator row under
    /// `Σ x_i y_i`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().all(|x| self.rows.iter().all(|y| crate::rings::dot(x, y).is_zero()))
    }

    /// `ψ` applied to the code: rows `ψ(r)` and `ψ(ωr)` span the image over
    /// `F2+uF2`.
    pub fn psi_image(&self, layout: Layout) -> Result<RingCode> {
        if self.ring != RingId::F4uF4 {
            return Err(Error::RingMismatch { left: RingId::F4uF4, right: self.ring });
        }
        let omega = self.ring.element(0b0100)?;
        let mut rows = Vec::with_capacity(2 * self.rows.len());
        for row in &self.rows {
            for scale in [self.ring.one(), omega] {
                let scaled: Vec<_> = row.iter().map(|&s| scale.mul_unchecked(s)).collect();
                let v = CodewordVector { ring: self.ring, symbols: scaled };
                rows.push(psi_f4u(&v, layout)?.symbols);
            }
        }
        Ok(RingCode { ring: RingId::F2uF2, length: 2 * self.length, rows })
    }

    /// Binary image under [`to_binary`]: each row times each element of the
    /// ring's additive basis.
    pub fn binary_image(&self, layout: GrayLayout) -> Result<BinaryCode> {
        let basis = self.ring.additive_basis();
        let mut rows = Vec::with_capacity(self.rows.len() * basis.len());
        for row in &self.rows {
            for &scale in &basis {
                let symbols = row.iter().map(|&s| scale.mul_unchecked(s)).collect();
                rows.push(pack(&to_binary(&CodewordVector { ring: self.ring, symbols }, layout)));
            }
        }
        BinaryCode::from_rows(&rows, self.length * self.ring.binary_width())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2u(s: &str) -> CodewordVector {
        CodewordVector::parse(RingId::F2uF2, s).unwrap()
    }

    #[test]
    fn psi_examples() {
        let (a, b) = psi_symbol(RingId::F4uF4.element(4).unwrap());
        assert!(a.is_one() && b.is_zero());
        let (a, b) = psi_symbol(RingId::F4uF4.zero());
        assert!(a.is_zero() && b.is_zero());
        let mut seen = std::collections::HashSet::new();
        for s in RingId::F4uF4.elements() {
            assert!(seen.insert(psi_symbol(s)));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_f2u(&f2u("1"), Layout::Block).unwrap(), vec![0, 1]);
        assert_eq!(phi_f2u(&f2u("u"), Layout::Block).unwrap(), vec![1, 1]);
        assert_eq!(phi_f2u(&f2u("3"), Layout::Block).unwrap(), vec![1, 0]);
        assert_eq!(phi_f2u(&f2u("1u"), Layout::Block).unwrap(), vec![0, 1, 1, 1]);
        assert_eq!(phi_f2u(&f2u("1u"), Layout::Interleaved).unwrap(), vec![0, 1, 1, 1]);
        assert_eq!(phi_f2u(&f2u("13"), Layout::Interleaved).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(phi_f2u(&f2u("13"), Layout::Block).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(phi_f2u(&f2u("31"), Layout::Block).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(phi_f2u(&f2u("31"), Layout::Interleaved).unwrap(), vec![1, 0, 0, 1]);
        assert!(phi_f2u(&CodewordVector::parse(RingId::F4uF4, "1").unwrap(), Layout::Block).is_err());
    }

    #[test]
    fn block_and_interleaved_differ() {
        let v = f2u("1u3");
        assert_eq!(phi_f2u(&v, Layout::Block).unwrap(), vec![0, 1, 1, 1, 1, 0]);
        assert_eq!(phi_f2u(&v, Layout::Interleaved).unwrap(), vec![0, 1, 1, 1, 1, 0]);
        let w = f2u("u00");
        assert_eq!(phi_f2u(&w, Layout::Block).unwrap(), vec![1, 0, 0, 1, 0, 0]);
        assert_eq!(phi_f2u(&w, Layout::Interleaved).unwrap(), vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn composite_lengths() {
        let v = CodewordVector::parse(RingId::F4uF4, "0123456789ABCDEF").unwrap();
        assert_eq!(to_binary(&v, GrayLayout::default()).len(), 64);
        let z = CodewordVector::parse(RingId::F4uF4, "0000").unwrap();
        assert!(to_binary(&z, GrayLayout::default()).iter().all(|&b| b == 0));
        let b = CodewordVector::parse(RingId::F2, "1011").unwrap();
        assert_eq!(to_binary(&b, GrayLayout::default()), vec![1, 0, 1, 1]);
    }

    #[test]
    fn identity_pair_image() {
        // [I_2 | I_2] over F2+uF2
        let r = RingId::F2uF2;
        let rows = vec![r.parse_vector("1010").unwrap(), r.parse_vector("0101").unwrap()];
        let code = RingCode::new(r, 4, rows).unwrap();
        let bin = code.binary_image(GrayLayout::default()).unwrap();
        assert_eq!(bin.length(), 8);
        assert_eq!(bin.dimension(), 4);
        assert!(code.is_self_orthogonal());
        assert!(bin.is_self_dual());
    }

    #[test]
    fn candidates_per_ring() {
        assert_eq!(GrayLayout::candidates(RingId::F2).len(), 1);
        assert_eq!(GrayLayout::candidates(RingId::F2uF2).len(), 2);
        assert_eq!(GrayLayout::candidates(RingId::F4uF4).len(), 4);
        assert_eq!(GrayLayout::candidates(RingId::F4uF4)[0], GrayLayout::default());
    }
}
