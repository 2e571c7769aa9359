//! The (2,3) scheme: three shares, any two reveal the secret.
//!
//! With `a` the cube root of the secret pixel and `r` a fresh random unit,
//! the shares carry `r*a`, `r^2*a` and `r^4*a`. From shares 1 and 2,
//! `s1^2 / s2 = a`; from shares 2 and 3, `s2^2 / s3 = a`; cubing gives `s`.
//! From shares 1 and 3, `s1^4 / s3 = a^3 = s` directly.

use crate::error::{Error, Result};
use crate::field257::FieldElement;
use crate::io::RasterImage;
use crate::kernel;
use crate::pixelcodec::{to_byte, to_field};
use crate::randsource::RandStream;
use crate::Scheme;

/// The three shares of a (2,3) split, each with the secret's dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareTriple {
    pub share1: RasterImage,
    pub share2: RasterImage,
    pub share3: RasterImage,
}

impl ShareTriple {
    /// Share by 1-based index.
    pub fn get(&self, index: u8) -> Option<&RasterImage> {
        match index {
            1 => Some(&self.share1),
            2 => Some(&self.share2),
            3 => Some(&self.share3),
            _ => None,
        }
    }
}

#[inline]
pub fn share_pixel_23(s: u8, r: FieldElement) -> (u8, u8, u8) {
    let a = to_field(s).cube_root();
    let r2 = r.square();
    let r4 = r2.square();
    (to_byte(r * a), to_byte(r2 * a), to_byte(r4 * a))
}

#[inline]
pub fn reveal_pixel_12(s1: u8, s2: u8) -> u8 {
    let a = to_field(s1).square() * to_field(s2).inv();
    to_byte(a.cube())
}

#[inline]
pub fn reveal_pixel_13(s1: u8, s3: u8) -> u8 {
    to_byte(to_field(s1).pow(4) * to_field(s3).inv())
}

#[inline]
pub fn reveal_pixel_23(s2: u8, s3: u8) -> u8 {
    let a = to_field(s2).square() * to_field(s3).inv();
    to_byte(a.cube())
}

pub fn split_23(secret: &RasterImage, stream: &RandStream) -> Result<ShareTriple> {
    if secret.is_empty() {
        return Err(Error::EmptyImage);
    }
    let [p1, p2, p3] = kernel::split_pixels(secret.pixels(), stream, |s, r| {
        let (a, b, c) = share_pixel_23(s, r);
        [a, b, c]
    });
    let (w, h) = secret.dimensions();
    Ok(ShareTriple {
        share1: RasterImage::new(w, h, p1)?,
        share2: RasterImage::new(w, h, p2)?,
        share3: RasterImage::new(w, h, p3)?,
    })
}

/// Reveals the secret from any two distinct shares. The indices select the
/// reveal formula, so they must be the ones the shares were created with;
/// argument order does not matter.
pub fn reveal_23(
    a: &RasterImage,
    a_index: u8,
    b: &RasterImage,
    b_index: u8,
) -> Result<RasterImage> {
    for index in [a_index, b_index] {
        if !Scheme::TwoOfThree.is_valid_index(index) {
            return Err(Error::InvalidShareIndex {
                scheme: Scheme::TwoOfThree,
                index,
            });
        }
    }
    if a_index == b_index {
        return Err(Error::DuplicateShareIndex(a_index));
    }
    a.ensure_same_dimensions(b)?;
    let ((lo, lo_index), (hi, _)) = if a_index < b_index {
        ((a, a_index), (b, b_index))
    } else {
        ((b, b_index), (a, a_index))
    };
    let reveal: fn(u8, u8) -> u8 = match (lo_index, a_index.max(b_index)) {
        (1, 2) => reveal_pixel_12,
        (1, 3) => reveal_pixel_13,
        _ => reveal_pixel_23,
    };
    let pixels = kernel::combine_pixels(lo.pixels(), hi.pixels(), reveal);
    RasterImage::new(a.width(), a.height(), pixels)
}
