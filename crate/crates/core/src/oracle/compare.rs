use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::invariants::normalized_bracket_limited;
use crate::{Error, Result};

/// Strongest agreement found between two braid words, best first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Comparison {
    Equal,
    MirrorEqual,
    JonesEqual,
    JonesMirrorEqual,
    Distinct,
}

impl Comparison {
    /// Letter-for-letter agreement, possibly after mirroring.
    pub fn is_exact(self) -> bool {
        matches!(self, Comparison::Equal | Comparison::MirrorEqual)
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn compare_up_to_mirror(a: &BraidWord, b: &BraidWord) -> Result<Comparison> {
    compare_up_to_mirror_limited(a, b, crate::invariants::DEFAULT_STRAND_LIMIT)
}

/// The Jones steps use the normalized bracket in `A`, which also covers links; mirroring
/// is `A ↦ 1/A` there.
pub fn compare_up_to_mirror_limited(
    a: &BraidWord,
    b: &BraidWord,
    limit: usize,
) -> Result<Comparison> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    if a == b {
        return Ok(Comparison::Equal);
    }
    if *a == b.mirror() {
        return Ok(Comparison::MirrorEqual);
    }
    let fa = normalized_bracket_limited(a, limit)?;
    let fb = normalized_bracket_limited(b, limit)?;
    Ok(if fa == fb {
        Comparison::JonesEqual
    } else if fa == fb.invert() {
        Comparison::JonesMirrorEqual
    } else {
        Comparison::Distinct
    })
}
