//! Rasters and their on-disk forms: netpbm images for secrets and previews,
//! and the `SIS1` container for shares.

mod container;
mod netpbm;

pub use container::{read_share, write_share, ShareHeader, HEADER_LEN, MAGIC, VERSION};
pub use netpbm::{read_image, write_image, NetpbmKind};

use crate::error::{Error, Result};

/// Where a raster's samples came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Grayscale,
    /// Promoted from a bitmap: every sample is 0 or 255.
    Binary,
}

/// A `width x height` grid of 8-bit samples in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
    origin: Origin,
}

impl RasterImage {
    /// Builds a grayscale raster; `pixels.len()` must equal `width * height`
    /// and both dimensions must be nonzero.
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Result<RasterImage> {
        let expected = pixel_count(width, height)?;
        if pixels.len() != expected {
            return Err(Error::PixelCount {
                width,
                height,
                expected,
                found: pixels.len(),
            });
        }
        Ok(RasterImage {
            width,
            height,
            pixels,
            origin: Origin::Grayscale,
        })
    }

    /// Builds a raster from bitmap bits, `true` meaning black. Black becomes 0
    /// and white becomes 255.
    pub fn from_bits(width: u32, height: u32, bits: &[bool]) -> Result<RasterImage> {
        let pixels = bits
            .iter()
            .map(|&black| if black { 0 } else { 255 })
            .collect();
        let mut img = RasterImage::new(width, height, pixels)?;
        img.origin = Origin::Binary;
        Ok(img)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn dimensions(&self) -> (u32, u32) {
        (self.width, self.height)
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    /// Always false for a constructed raster; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub(crate) fn ensure_same_dimensions(&self, other: &RasterImage) -> Result<()> {
        if self.dimensions() != other.dimensions() {
            return Err(Error::DimensionMismatch {
                left: self.dimensions(),
                right: other.dimensions(),
            });
        }
        Ok(())
    }
}

fn pixel_count(width: u32, height: u32) -> Result<usize> {
    if width == 0 || height == 0 {
        return Err(Error::EmptyImage);
    }
    (width as usize)
        .checked_mul(height as usize)
        .ok_or(Error::Format(crate::FormatError::DimensionOverflow))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_validates_length_and_dimensions() {
        assert!(RasterImage::new(2, 2, vec![0; 4]).is_ok());
        assert!(matches!(
            RasterImage::new(2, 2, vec![0; 3]),
            Err(Error::PixelCount {
                expected: 4,
                found: 3,
                ..
            })
        ));
        assert_eq!(RasterImage::new(0, 5, vec![]), Err(Error::EmptyImage));
        assert_eq!(RasterImage::new(5, 0, vec![]), Err(Error::EmptyImage));
    }

    #[test]
    fn bits_promote_to_extremes() {
        let img = RasterImage::from_bits(3, 1, &[true, false, true]).unwrap();
        assert_eq!(img.pixels(), &[0, 255, 0]);
        assert_eq!(img.origin(), Origin::Binary);
    }
}
