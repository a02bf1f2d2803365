//! Length-two extensions of self-dual ring codes and binary neighbours.

use crate::bincode::{parse_word, weight, BinaryCode};
use crate::error::{Error, Result};
use crate::graymap::RingCode;
use crate::rings::{self, RingElement};

/// Inputs of the `n → n+2` extension.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    pub base: RingCode,
    /// A unit with `c² = -1`, which is `c² = 1` in characteristic 2.
    pub c: RingElement,
    /// A vector with `⟨X, X⟩ = -1 = 1`.
    pub x: Vec<RingElement>,
}

impl ExtensionSpec {
    pub fn validate(&self) -> Result<()> {
        let ring = self.base.ring;
        if self.c.ring() != ring {
            return Err(Error::RingMismatch { left: ring, right: self.c.ring() });
        }
        if self.x.len() != self.base.length {
            return Err(Error::DimensionMismatch(format!(
                "X has length {}, base code has length {}",
                self.x.len(),
                self.base.length
            )));
        }
        if let Some(bad) = self.x.iter().find(|s| s.ring() != ring) {
            return Err(Error::RingMismatch { left: ring, right: bad.ring() });
        }
        if !self.c.is_unit() || !self.c.mul(self.c)?.is_one() {
            return Err(Error::Precondition(format!("c = {} is not a unit squaring to 1", self.c)));
        }
        let xx = rings::dot(&self.x, &self.x);
        if !xx.is_one() {
            return Err(Error::Precondition(format!("<X, X> = {xx}, expected 1")));
        }
        Ok(())
    }
}

/// Generator `[[1, 0 | X], [y_i, c·y_i | r_i]]` with `y_i = ⟨r_i, X⟩`.
pub fn extend(spec: &ExtensionSpec) -> Result<RingCode> {
    spec.validate()?;
    let ring = spec.base.ring;
    let mut rows = Vec::with_capacity(spec.base.rows.len() + 1);
    let mut top = vec![ring.one(), ring.zero()];
    top.extend_from_slice(&spec.x);
    rows.push(top);
    for r in &spec.base.rows {
        let y = rings::dot(r, &spec.x);
        let mut row = vec![y, spec.c.mul(y)?];
        row.extend_from_slice(r);
        rows.push(row);
    }
    RingCode::new(ring, spec.base.length + 2, rows)
}

/// `⟨⟨x⟩^⊥ ∩ C, x⟩`.
///
/// The result is self-dual when `base` is and `x` has even weight; with odd
/// weight the result is returned but fails the self-duality test.
pub fn neighbour(base: &BinaryCode, x: u128) -> Result<BinaryCode> {
    if base.length() < 128 && x >> base.length() != 0 {
        return Err(Error::DimensionMismatch(format!("x has bits beyond length {}", base.length())));
    }
    if base.contains(x) {
        return Err(Error::Precondition("x lies in the base code".into()));
    }
    let sub = base.orthogonal_subcode(x);
    let mut rows = sub.rows().to_vec();
    rows.push(x);
    BinaryCode::from_rows(&rows, base.length())
}

/// Folds [`neighbour`] over `xs`, returning every stage starting with `base`.
pub fn neighbour_chain(base: &BinaryCode, xs: &[u128]) -> Result<Vec<BinaryCode>> {
    let mut out = vec![base.clone()];
    for &x in xs {
        let next = neighbour(out.last().expect("non-empty"), x)?;
        out.push(next);
    }
    Ok(out)
}

/// A word whose last `suffix.len()` coordinates are `suffix` and the rest zero,
/// as in vectors published as `(x_35, …, x_68)` for length 68.
pub fn word_from_suffix(suffix: &str, length: usize) -> Result<u128> {
    if suffix.len() > length {
        return Err(Error::DimensionMismatch(format!("suffix of {} bits for length {length}", suffix.len())));
    }
    Ok(parse_word(suffix)? << (length - suffix.len()))
}

/// True when `x` keeps a self-dual base self-dual under [`neighbour`].
pub fn is_admissible(base: &BinaryCode, x: u128) -> bool {
    weight(x) % 2 == 0 && !base.contains(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graymap::GrayLayout;
    use crate::rings::RingId;

    fn hamming8() -> BinaryCode {
        BinaryCode::from_bit_strings(&["11110000", "00111100", "00001111", "01010101"]).unwrap()
    }

    #[test]
    fn neighbour_of_hamming() {
        let base = hamming8();
        let x = parse_word("11000000").unwrap();
        let d = neighbour(&base, x).unwrap();
        assert!(d.is_self_dual());
        assert_eq!(d.intersection_dimension(&base), base.dimension() - 1);
    }

    #[test]
    fn neighbour_rejects_codewords() {
        let base = hamming8();
        assert!(neighbour(&base, parse_word("11110000").unwrap()).is_err());
        assert!(neighbour(&base, 1 << 9).is_err());
    }

    #[test]
    fn odd_weight_breaks_self_duality() {
        let base = hamming8();
        let x = parse_word("10000000").unwrap();
        assert!(!is_admissible(&base, x));
        assert!(!neighbour(&base, x).unwrap().is_self_dual());
    }

    #[test]
    fn empty_chain() {
        let base = hamming8();
        assert_eq!(neighbour_chain(&base, &[]).unwrap(), vec![base]);
    }

    #[test]
    fn suffix_words() {
        assert_eq!(word_from_suffix("11", 4).unwrap(), 0b1100);
        assert!(word_from_suffix("111", 2).is_err());
    }

    #[test]
    fn extension_of_small_code() {
        // C = <(1, 1)> over F2+uF2 is self-dual of length 2
        let r = RingId::F2uF2;
        let base = RingCode::new(r, 2, vec![r.parse_vector("11").unwrap()]).unwrap();
        let spec = ExtensionSpec { base, c: r.parse_vector("3").unwrap()[0], x: r.parse_vector("10").unwrap() };
        let d = extend(&spec).unwrap();
        assert_eq!(d.length, 4);
        assert!(d.is_self_orthogonal());
        let bin = d.binary_image(GrayLayout::default()).unwrap();
        assert!(bin.is_self_dual());
    }

    #[test]
    fn extension_preconditions() {
        let r = RingId::F2uF2;
        let base = RingCode::new(r, 2, vec![r.parse_vector("11").unwrap()]).unwrap();
        let bad_x = ExtensionSpec { base: base.clone(), c: r.one(), x: r.parse_vector("11").unwrap() };
        assert!(matches!(extend(&bad_x), Err(Error::Precondition(_))));
        let bad_c = ExtensionSpec { base, c: r.parse_vector("u").unwrap()[0], x: r.parse_vector("10").unwrap() };
        assert!(extend(&bad_c).is_err());
    }
}
