//! Fixtures shared by the criterion benches.

use std::sync::Arc;

use selfdual_core::construction::{self, ConstructionSpec};
use selfdual_core::{BinaryCode, Group, GrayLayout, Listing, RingCode, RingId};

/// Binary image of the block construction over F2 with group C17: a
/// self-dual [68, 34, 12] code.
pub fn c17_code() -> BinaryCode {
    let spec = ConstructionSpec::parse(
        RingId::F2,
        Arc::new(Group::cyclic(17)),
        Listing::Natural,
        "00000000000011011",
        "00000000000000000",
        "00100110010110111",
    )
    .expect("valid seeds");
    let gm = construction::build(&spec);
    RingCode::new(RingId::F2, gm.length(), gm.rows())
        .and_then(|c| c.binary_image(GrayLayout::default()))
        .expect("self-dual image")
}

/// The first `k` rows of [`c17_code`], a smaller code for full enumeration.
pub fn c17_subcode(k: usize) -> BinaryCode {
    let code = c17_code();
    BinaryCode::from_rows(&code.rows()[..k], code.length()).expect("rows fit")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shape() {
        let code = c17_code();
        assert_eq!((code.length(), code.dimension()), (68, 34));
        assert!(code.is_self_dual());
        assert_eq!(c17_subcode(20).dimension(), 20);
    }
}
