//! The characteristic-2 rings `F2`, `F2+uF2` and `F4+uF4`.
//!
//! Every element is stored as four bits over the ordered basis
//! `{uω, ω, u, 1}` (bit 3 down to bit 0), so that the hexadecimal digit of an
//! element is literally its bit pattern. `F2` and `F2+uF2` are the
//! sub-patterns whose `ω` components are zero.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BIT_ONE: u8 = 0b0001;
const BIT_U: u8 = 0b0010;
const BIT_OMEGA: u8 = 0b0100;
const BIT_U_OMEGA: u8 = 0b1000;

/// One of the three coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingId {
    F2,
    F2uF2,
    F4uF4,
}

impl RingId {
    pub const ALL: [RingId; 3] = [RingId::F2, RingId::F2uF2, RingId::F4uF4];

    pub fn order(self) -> usize {
        match self {
            RingId::F2 => 2,
            RingId::F2uF2 => 4,
            RingId::F4uF4 => 16,
        }
    }

    /// Bits that may be set for elements of this ring.
    fn mask(self) -> u8 {
        match self {
            RingId::F2 => BIT_ONE,
            RingId::F2uF2 => BIT_ONE | BIT_U,
            RingId::F4uF4 => 0b1111,
        }
    }

    pub fn zero(self) -> RingElement {
        RingElement { ring: self, bits: 0 }
    }

    pub fn one(self) -> RingElement {
        RingElement { ring: self, bits: BIT_ONE }
    }

    /// All elements in increasing bit order.
    pub fn elements(self) -> impl Iterator<Item = RingElement> {
        let mask = self.mask();
        (0u8..16)
            .filter(move |b| b & !mask == 0)
            .map(move |bits| RingElement { ring: self, bits })
    }

    /// An F2 basis of the ring as an additive group. Multiplying a code's
    /// generator rows by these spans its binary image.
    pub fn additive_basis(self) -> Vec<RingElement> {
        let bits: &[u8] = match self {
            RingId::F2 => &[BIT_ONE],
            RingId::F2uF2 => &[BIT_ONE, BIT_U],
            RingId::F4uF4 => &[BIT_ONE, BIT_OMEGA, BIT_U, BIT_U_OMEGA],
        };
        bits.iter().map(|&bits| RingElement { ring: self, bits }).collect()
    }

    /// Number of binary coordinates one symbol becomes under the Gray maps.
    pub fn binary_width(self) -> usize {
        match self {
            RingId::F2 => 1,
            RingId::F2uF2 => 2,
            RingId::F4uF4 => 4,
        }
    }

    pub fn element(self, bits: u8) -> Result<RingElement> {
        if bits & !self.mask() != 0 {
            return Err(Error::InvalidElement { bits, ring: self });
        }
        Ok(RingElement { ring: self, bits })
    }

    /// Parses a whole seed string such as `uu011uu0` or `A617`.
    pub fn parse_vector(self, s: &str) -> Result<Vec<RingElement>> {
        s.chars().map(|c| parse_symbol(c, self)).collect()
    }

    pub fn format_vector(v: &[RingElement]) -> String {
        v.iter().map(|e| e.symbol()).collect()
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingId::F2 => "F2",
            RingId::F2uF2 => "F2uF2",
            RingId::F4uF4 => "F4uF4",
        })
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F2" => Ok(RingId::F2),
            "F2uF2" | "F2+uF2" => Ok(RingId::F2uF2),
            "F4uF4" | "F4+uF4" => Ok(RingId::F4uF4),
            other => Err(Error::Parse(format!("unknown ring `{other}`"))),
        }
    }
}

/// An element of one of the rings in [`RingId`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingId,
    bits: u8,
}

/// A polynomial in `u` and `ω` over F2, as a set of monomials `u^i ω^j`.
type Monomials = Vec<(u32, u32)>;

fn bits_to_monomials(bits: u8) -> Monomials {
    let mut out = Vec::new();
    for (bit, mono) in [(BIT_ONE, (0, 0)), (BIT_U, (1, 0)), (BIT_OMEGA, (0, 1)), (BIT_U_OMEGA, (1, 1))] {
        if bits & bit != 0 {
            out.push(mono);
        }
    }
    out
}

/// Reduces a monomial `u^i ω^j` with `u² = 0` and `ω² = ω + 1`.
fn reduce_monomial(u_pow: u32, omega_pow: u32) -> u8 {
    if u_pow >= 2 {
        return 0;
    }
    // ω^j as a + bω over F2, by repeated multiplication with ω.
    let (mut a, mut b) = (1u8, 0u8);
    for _ in 0..omega_pow {
        // (a + bω)ω = aω + b(ω + 1)
        let (na, nb) = (b, a ^ b);
        a = na;
        b = nb;
    }
    let (one_bit, omega_bit) = if u_pow == 0 { (BIT_ONE, BIT_OMEGA) } else { (BIT_U, BIT_U_OMEGA) };
    (if a == 1 { one_bit } else { 0 }) | (if b == 1 { omega_bit } else { 0 })
}

/// Product table of `F4+uF4` expanded from the defining relations.
static MUL_TABLE: LazyLock<[[u8; 16]; 16]> = LazyLock::new(|| {
    let mut table = [[0u8; 16]; 16];
    for x in 0..16u8 {
        for y in 0..16u8 {
            let mut acc = 0u8;
            for (ux, wx) in bits_to_monomials(x) {
                for (uy, wy) in bits_to_monomials(y) {
                    acc ^= reduce_monomial(ux + uy, wx + wy);
                }
            }
            table[x as usize][y as usize] = acc;
        }
    }
    table
});

impl RingElement {
    pub fn ring(self) -> RingId {
        self.ring
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn is_one(self) -> bool {
        self.bits == BIT_ONE
    }

    pub fn add(self, other: RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn mul(self, other: RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn add_unchecked(self, other: RingElement) -> RingElement {
        RingElement { ring: self.ring, bits: self.bits ^ other.bits }
    }

    #[inline]
    pub(crate) fn mul_unchecked(self, other: RingElement) -> RingElement {
        RingElement { ring: self.ring, bits: MUL_TABLE[self.bits as usize][other.bits as usize] }
    }

    fn check_ring(self, other: RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        Ok(())
    }

    /// A unit is exactly an element whose reduction mod `u` is nonzero:
    /// in `F2+uF2` the 1-component, in `F4+uF4` the `F4` part `{1, ω}` bits.
    pub fn is_unit(self) -> bool {
        self.bits & (BIT_ONE | BIT_OMEGA) != 0
    }

    pub fn inverse(self) -> Option<RingElement> {
        self.ring.elements().find(|&b| self.mul_unchecked(b).is_one())
    }

    /// Rewrites the element as a member of a larger ring sharing the basis.
    pub fn lift(self, ring: RingId) -> Result<RingElement> {
        ring.element(self.bits)
    }

    pub fn symbol(self) -> char {
        match (self.ring, self.bits) {
            (RingId::F2uF2, BIT_U) => 'u',
            (_, b) => char::from_digit(b as u32, 16).unwrap().to_ascii_uppercase(),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Reads one symbol of a seed string. `F2+uF2` uses `{0, 1, u, 3}` where `3`
/// stands for `1+u`; `F4+uF4` uses hexadecimal digits over `{uω, ω, u, 1}`.
pub fn parse_symbol(c: char, ring: RingId) -> Result<RingElement> {
    let invalid = || Error::InvalidSymbol { symbol: c, ring };
    let bits = match ring {
        RingId::F2 => match c {
            '0' => 0,
            '1' => 1,
            _ => return Err(invalid()),
        },
        RingId::F2uF2 => match c {
            '0' => 0,
            '1' => BIT_ONE,
            'u' => BIT_U,
            '3' => BIT_ONE | BIT_U,
            _ => return Err(invalid()),
        },
        RingId::F4uF4 => c.to_digit(16).ok_or_else(invalid)? as u8,
    };
    Ok(RingElement { ring, bits })
}

/// The bilinear form `Σ x_i y_i`. Both slices must share a ring and length.
pub fn dot(x: &[RingElement], y: &[RingElement]) -> RingElement {
    debug_assert_eq!(x.len(), y.len());
    let ring = x.first().or(y.first()).map_or(RingId::F2, |e| e.ring());
    x.iter()
        .zip(y)
        .fold(ring.zero(), |acc, (a, b)| acc.add_unchecked(a.mul_unchecked(*b)))
}
