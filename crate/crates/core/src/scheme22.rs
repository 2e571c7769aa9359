//! The (2,2) scheme: both shares are required to reveal the secret.
//!
//! For a secret pixel `s` and a fresh random unit `r`, share 1 carries `r`
//! and share 2 carries `s * r^-1 (mod 257)`. Revealing multiplies the two.

use crate::error::{Error, Result};
use crate::field257::FieldElement;
use crate::io::RasterImage;
use crate::kernel;
use crate::pixelcodec::{to_byte, to_field};
use crate::randsource::RandStream;

/// The two shares of a (2,2) split, each with the secret's dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharePair {
    pub share1: RasterImage,
    pub share2: RasterImage,
}

#[inline]
pub fn share_pixel_22(s: u8, r: FieldElement) -> (u8, u8) {
    (to_byte(r), to_byte(to_field(s) * r.inv()))
}

#[inline]
pub fn reveal_pixel_22(s1: u8, s2: u8) -> u8 {
    to_byte(to_field(s1) * to_field(s2))
}

/// Shares every pixel of `secret`, drawing `r` for pixel `i` (row-major)
/// from `stream.draw_at(i)`.
pub fn split_22(secret: &RasterImage, stream: &RandStream) -> Result<SharePair> {
    if secret.is_empty() {
        return Err(Error::EmptyImage);
    }
    let [p1, p2] = kernel::split_pixels(secret.pixels(), stream, |s, r| {
        let (a, b) = share_pixel_22(s, r);
        [a, b]
    });
    let (w, h) = secret.dimensions();
    Ok(SharePair {
        share1: RasterImage::new(w, h, p1)?,
        share2: RasterImage::new(w, h, p2)?,
    })
}

/// Reveals the secret from its two shares. Shares of different secrets
/// combine without error into noise; nothing here can tell them apart.
pub fn reveal_22(share1: &RasterImage, share2: &RasterImage) -> Result<RasterImage> {
    share1.ensure_same_dimensions(share2)?;
    let pixels = kernel::combine_pixels(share1.pixels(), share2.pixels(), reveal_pixel_22);
    RasterImage::new(share1.width(), share1.height(), pixels)
}

impl SharePair {
    pub fn reveal(&self) -> Result<RasterImage> {
        reveal_22(&self.share1, &self.share2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u16) -> FieldElement {
        FieldElement::new(v).unwrap()
    }

    /// Seed whose first keystream byte is `r - 1`, found by search.
    fn seed_with_first_draw(r: u16) -> [u8; 32] {
        (0u8..=255)
            .map(|t| {
                let mut s = [0u8; 32];
                s[0] = t;
                s[1] = 0xc3;
                s
            })
            .chain((0u8..=255).map(|t| {
                let mut s = [1u8; 32];
                s[0] = t;
                s
            }))
            .find(|s| RandStream::seeded(*s).draw_at(0) == fe(r))
            .expect("no seed in the search space draws r")
    }

    #[test]
    fn share_pixel_examples() {
        assert_eq!(share_pixel_22(100, fe(2)), (2, 50));
        assert_eq!(share_pixel_22(0, fe(1)), (1, 0));
        assert_eq!(share_pixel_22(5, fe(256)), (0, 252));
    }

    #[test]
    fn reveal_pixel_examples() {
        assert_eq!(reveal_pixel_22(2, 50), 100);
        assert_eq!(reveal_pixel_22(1, 0), 0);
        assert_eq!(reveal_pixel_22(0, 252), 5);
    }

    #[test]
    fn exhaustive_pixel_roundtrip() {
        for s in 0..=255u8 {
            for r in FieldElement::all() {
                let (a, b) = share_pixel_22(s, r);
                assert_eq!(reveal_pixel_22(a, b), s);
                assert_eq!(reveal_pixel_22(b, a), s);
            }
        }
    }

    #[test]
    fn each_share_is_a_permutation_over_r() {
        for s in 0..=255u8 {
            let mut seen1 = [0u16; 256];
            let mut seen2 = [0u16; 256];
            for r in FieldElement::all() {
                let (a, b) = share_pixel_22(s, r);
                seen1[a as usize] += 1;
                seen2[b as usize] += 1;
            }
            assert!(seen1.iter().all(|&c| c == 1));
            assert!(seen2.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn one_pixel_split_with_known_draw() {
        let seed = seed_with_first_draw(2);
        let secret = RasterImage::new(1, 1, vec![100]).unwrap();
        let pair = split_22(&secret, &RandStream::seeded(seed)).unwrap();
        assert_eq!(pair.share1.pixels(), &[2]);
        assert_eq!(pair.share2.pixels(), &[50]);
        assert_eq!(
            reveal_22(&pair.share1, &pair.share2).unwrap().pixels(),
            &[100]
        );
    }

    #[test]
    fn split_matches_per_pixel_draws() {
        let pixels: Vec<u8> = (0..50_000u32).map(|i| (i * 31 % 256) as u8).collect();
        let secret = RasterImage::new(250, 200, pixels).unwrap();
        let stream = RandStream::seeded([42; 32]);
        let pair = split_22(&secret, &stream).unwrap();
        for i in [0usize, 1, 16383, 16384, 16385, 49_999] {
            let (a, b) = share_pixel_22(secret.pixels()[i], stream.draw_at(i as u64));
            assert_eq!((pair.share1.pixels()[i], pair.share2.pixels()[i]), (a, b));
        }
        assert_eq!(pair.reveal().unwrap(), secret);
        assert_eq!(split_22(&secret, &stream).unwrap(), pair);
    }

    #[test]
    fn entropy_mode_roundtrips() {
        let secret = RasterImage::new(3, 3, (0..9).collect()).unwrap();
        let pair = split_22(&secret, &RandStream::Entropy).unwrap();
        assert_eq!(pair.share1.dimensions(), (3, 3));
        assert_eq!(pair.reveal().unwrap(), secret);
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let a = RasterImage::new(2, 2, vec![0; 4]).unwrap();
        let b = RasterImage::new(3, 3, vec![0; 9]).unwrap();
        assert_eq!(
            reveal_22(&a, &b),
            Err(Error::DimensionMismatch {
                left: (2, 2),
                right: (3, 3)
            })
        );
    }
}
