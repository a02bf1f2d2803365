//! Binary self-dual codes from `2×2` block-circulant group-ring constructions
//! with a reverse-circulant perturbation, over `F2`, `F2+uF2` and `F4+uF4`.
//!
//! The pipeline is: [`construction`] builds a generator over a ring,
//! [`graymap`] takes it down to binary, [`bincode`] checks self-duality and
//! counts low-weight codewords, and [`transforms`] derives new codes by
//! extension and by neighbours. [`harness`] ties these to a corpus of
//! published codes.

pub mod algebra;
pub mod bincode;
pub mod construction;
pub mod error;
pub mod graymap;
pub mod harness;
pub mod rings;
pub mod transforms;

pub use algebra::{Group, GroupKind, GroupRingElement, Listing, RingMatrix};
pub use bincode::{BinaryCode, CodeType, EnumeratorForm, EnumeratorParams, WeightDistribution};
pub use construction::{ConstructionSpec, GeneratorMatrix};
pub use error::{Error, Result};
pub use graymap::{GrayLayout, Layout, RingCode};
pub use rings::{RingElement, RingId};
