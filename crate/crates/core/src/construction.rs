//! The generator `M(σ) = [I_2n | [[σ(v1), σ(v2)+A], [σ(v2)+A, σ(v1)]]]` and the
//! algebraic self-duality conditions that characterize it.
//!
//! [`check_theorem2`] is the authoritative test; the lemma variants are
//! independent cross-checks and search pre-filters.

use std::sync::Arc;

use crate::algebra::{Group, GroupRingElement, Listing, RingMatrix};
use crate::error::{Error, Result};
use crate::rings::{RingElement, RingId};

/// Inputs of one block construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub ring: RingId,
    pub group: Arc<Group>,
    pub listing: Listing,
    pub v1: GroupRingElement,
    pub v2: GroupRingElement,
    /// First row of the reverse-circulant `A`.
    pub ra: Vec<RingElement>,
}

impl ConstructionSpec {
    pub fn new(
        ring: RingId,
        group: Arc<Group>,
        listing: Listing,
        v1: GroupRingElement,
        v2: GroupRingElement,
        ra: Vec<RingElement>,
    ) -> Result<Self> {
        let n = group.order();
        listing.permutation(&group)?;
        for v in [&v1, &v2] {
            if v.ring() != ring {
                return Err(Error::RingMismatch { left: ring, right: v.ring() });
            }
            if **v.group() != *group {
                return Err(Error::GroupMismatch { left: n, right: v.group().order() });
            }
        }
        if ra.len() != n {
            return Err(Error::DimensionMismatch(format!("r_A has length {}, expected {n}", ra.len())));
        }
        if let Some(bad) = ra.iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch { left: ring, right: bad.ring() });
        }
        Ok(ConstructionSpec { ring, group, listing, v1, v2, ra })
    }

    /// Builds a spec from three seed strings read in listing order.
    pub fn parse(ring: RingId, group: Arc<Group>, listing: Listing, v1: &str, v2: &str, ra: &str) -> Result<Self> {
        let v1 = GroupRingElement::parse(ring, group.clone(), &listing, v1)?;
        let v2 = GroupRingElement::parse(ring, group.clone(), &listing, v2)?;
        let ra = ring.parse_vector(ra)?;
        Self::new(ring, group, listing, v1, v2, ra)
    }

    pub fn n(&self) -> usize {
        self.group.order()
    }

    pub fn a_matrix(&self) -> RingMatrix {
        RingMatrix::reverse_circulant(&self.ra).expect("r_A length checked at construction")
    }

    fn sigma(&self, v: &GroupRingElement) -> RingMatrix {
        v.sigma(&self.listing).expect("listing checked at construction")
    }

    /// Seeds in listing order as `(v1, v2, r_A)` strings.
    pub fn seeds(&self) -> (String, String, String) {
        let fmt = |v: &GroupRingElement| RingId::format_vector(&v.to_listed(&self.listing).expect("valid listing"));
        (fmt(&self.v1), fmt(&self.v2), RingId::format_vector(&self.ra))
    }
}

/// `[I_2n | right]` over the construction ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub ring: RingId,
    pub right: RingMatrix,
}

impl GeneratorMatrix {
    pub fn k(&self) -> usize {
        self.right.rows()
    }

    pub fn length(&self) -> usize {
        self.right.rows() + self.right.cols()
    }

    /// Full rows `(e_i | right_i)`.
    pub fn rows(&self) -> Vec<Vec<RingElement>> {
        let k = self.k();
        (0..k)
            .map(|i| {
                let mut row = vec![self.ring.zero(); k];
                row[i] = self.ring.one();
                row.extend_from_slice(self.right.row(i));
                row
            })
            .collect()
    }
}

pub fn build(spec: &ConstructionSpec) -> GeneratorMatrix {
    let b = spec.sigma(&spec.v1);
    let c = spec.sigma(&spec.v2).add(&spec.a_matrix()).expect("same shape");
    let right = RingMatrix::block2(&b, &c, &c, &b).expect("same shape");
    GeneratorMatrix { ring: spec.ring, right }
}

/// `[I_2n | [[B, C], [C, B]]]` is self-dual iff `(B+C)(B+C)^T = I` and
/// `B C^T = C B^T`.
pub fn check_lemma1(b: &RingMatrix, c: &RingMatrix) -> Result<bool> {
    if b.rows() != b.cols() || (b.rows(), b.cols()) != (c.rows(), c.cols()) {
        return Err(Error::DimensionMismatch("B and C must be square of equal size".into()));
    }
    let s = b.add(c)?;
    let first = s.mul(&s.transpose())?.is_identity();
    let second = b.mul(&c.transpose())? == c.mul(&b.transpose())?;
    Ok(first && second)
}

/// The group-ring form of the self-duality criterion:
/// `(σ(v1+v2)+A)(σ((v1+v2)*)+A) = I` and
/// `σ(v1)(σ((v1+v2)*)+A) = (σ(v1+v2)+A)σ(v1*)`.
pub fn check_theorem2(spec: &ConstructionSpec) -> bool {
    let a = spec.a_matrix();
    let s = spec.v1.add(&spec.v2).expect("compatible by construction");
    let left = spec.sigma(&s).add(&a).expect("same shape");
    let right = spec.sigma(&s.involution()).add(&a).expect("same shape");
    let first = left.mul(&right).expect("square").is_identity();
    let v1_star = spec.sigma(&spec.v1.involution());
    let second = spec.sigma(&spec.v1).mul(&right).expect("square") == left.mul(&v1_star).expect("square");
    first && second
}

/// Cyclic-group criterion: `σ((v1+v2)(v1+v2)*) + A² = I` and `v1 v2* = v2 v1*`.
///
/// Only valid when `σ` produces circulant matrices, i.e. a cyclic group under
/// the natural listing.
pub fn check_lemma7(spec: &ConstructionSpec) -> Result<bool> {
    if !spec.group.is_cyclic() || spec.listing != Listing::Natural {
        return Err(Error::Precondition(format!(
            "needs a cyclic group with natural listing, got {} / {}",
            spec.group.kind(),
            spec.listing
        )));
    }
    let a = spec.a_matrix();
    let s = spec.v1.add(&spec.v2)?;
    let first = spec.sigma(&s.mul(&s.involution())?).add(&a.mul(&a)?)?.is_identity();
    let second = spec.v1.mul(&spec.v2.involution())? == spec.v2.mul(&spec.v1.involution())?;
    Ok(first && second)
}

/// Sufficient condition over an abelian group of exponent 2 when `σ(v1)` and
/// `σ(v2)` are circulant: `σ((v1+v2)²) + A² = I`.
pub fn check_lemma6(spec: &ConstructionSpec) -> Result<bool> {
    if !spec.group.is_abelian() || spec.group.exponent() > 2 {
        return Err(Error::Precondition(format!("{} is not abelian of exponent 2", spec.group.kind())));
    }
    if !spec.sigma(&spec.v1).is_circulant() || !spec.sigma(&spec.v2).is_circulant() {
        return Err(Error::Precondition("σ(v1) and σ(v2) must be circulant".into()));
    }
    let a = spec.a_matrix();
    let s = spec.v1.add(&spec.v2)?;
    Ok(spec.sigma(&s.mul(&s)?).add(&a.mul(&a)?)?.is_identity())
}

/// With `A = 0` a self-dual construction forces `v1 + v2` to be a unitary unit.
/// Returns that unitarity; callers assert it under the preconditions.
pub fn check_lemma8(spec: &ConstructionSpec) -> Result<bool> {
    if spec.ra.iter().any(|c| !c.is_zero()) {
        return Err(Error::Precondition("r_A must be zero".into()));
    }
    if !check_theorem2(spec) {
        return Err(Error::Precondition("construction is not self-dual".into()));
    }
    Ok(spec.v1.add(&spec.v2)?.is_unitary_unit())
}
