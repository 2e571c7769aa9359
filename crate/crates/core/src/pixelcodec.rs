//! Mapping between 8-bit pixel samples and field elements.
//!
//! Byte `0` stands for the residue `256` (that is, `-1`); every other byte is
//! its own residue. The same rule applies to secrets and shares, in both the
//! sharing and revealing directions.

use crate::field257::FieldElement;

/// `0 -> 256`, otherwise identity.
#[inline]
pub fn to_field(b: u8) -> FieldElement {
    let v = if b == 0 { 256 } else { b as u16 };
    // v is in 1..=256 by construction
    FieldElement::new(v).unwrap_or(FieldElement::MINUS_ONE)
}

/// `256 -> 0`, otherwise identity.
#[inline]
pub fn to_byte(f: FieldElement) -> u8 {
    let v = f.value();
    if v == 256 {
        0
    } else {
        v as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_values() {
        assert_eq!(to_field(0).value(), 256);
        assert_eq!(to_field(1).value(), 1);
        assert_eq!(to_field(255).value(), 255);
        assert_eq!(to_byte(FieldElement::MINUS_ONE), 0);
        assert_eq!(to_byte(FieldElement::ONE), 1);
    }

    #[test]
    fn exhaustive_roundtrips() {
        for b in 0..=255u8 {
            assert_eq!(to_byte(to_field(b)), b);
        }
        for f in FieldElement::all() {
            assert_eq!(to_field(to_byte(f)), f);
        }
    }
}
