//! The `SIS1` share container.
//!
//! ```text
//! offset  size  field
//!      0     4  magic "SIS1"
//!      4     1  version (1)
//!      5     1  scheme (0x22 or 0x23)
//!      6     1  share index, 1-based
//!      7     1  reserved (0)
//!      8     4  width, big-endian
//!     12     4  height, big-endian
//!     16   w*h  samples, row-major
//! ```

use super::RasterImage;
use crate::error::{Error, FormatError, Result};
use crate::Scheme;

pub const MAGIC: [u8; 4] = *b"SIS1";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShareHeader {
    pub scheme: Scheme,
    pub index: u8,
    pub width: u32,
    pub height: u32,
}

impl ShareHeader {
    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(&MAGIC);
        out[4] = VERSION;
        out[5] = self.scheme.byte();
        out[6] = self.index;
        out[7] = 0;
        out[8..12].copy_from_slice(&self.width.to_be_bytes());
        out[12..16].copy_from_slice(&self.height.to_be_bytes());
        out
    }

    /// Validates every header field, in layout order.
    pub fn parse(bytes: &[u8]) -> Result<ShareHeader, FormatError> {
        if bytes.len() < HEADER_LEN {
            return Err(FormatError::TruncatedHeader {
                expected: HEADER_LEN,
                found: bytes.len(),
            });
        }
        let magic: [u8; 4] = bytes[..4].try_into().unwrap_or_default();
        if magic != MAGIC {
            return Err(FormatError::ShareMagic(magic));
        }
        if bytes[4] != VERSION {
            return Err(FormatError::Version(bytes[4]));
        }
        let scheme = Scheme::from_byte(bytes[5]).ok_or(FormatError::SchemeByte(bytes[5]))?;
        let index = bytes[6];
        if !scheme.is_valid_index(index) {
            return Err(FormatError::ShareIndex { scheme, index });
        }
        if bytes[7] != 0 {
            return Err(FormatError::Reserved(bytes[7]));
        }
        let width = u32::from_be_bytes([bytes[8], bytes[9], bytes[10], bytes[11]]);
        let height = u32::from_be_bytes([bytes[12], bytes[13], bytes[14], bytes[15]]);
        if width == 0 {
            return Err(FormatError::ZeroDimension("width"));
        }
        if height == 0 {
            return Err(FormatError::ZeroDimension("height"));
        }
        Ok(ShareHeader {
            scheme,
            index,
            width,
            height,
        })
    }

    pub fn payload_len(&self) -> Option<usize> {
        (self.width as usize).checked_mul(self.height as usize)
    }
}

/// Serialises a share. Fails if `index` is not a share index of `scheme`.
pub fn write_share(img: &RasterImage, scheme: Scheme, index: u8) -> Result<Vec<u8>> {
    if !scheme.is_valid_index(index) {
        return Err(Error::InvalidShareIndex { scheme, index });
    }
    let header = ShareHeader {
        scheme,
        index,
        width: img.width(),
        height: img.height(),
    };
    let mut out = Vec::with_capacity(HEADER_LEN + img.len());
    out.extend_from_slice(&header.to_bytes());
    out.extend_from_slice(img.pixels());
    Ok(out)
}

/// Parses a share file into its raster, scheme and index. The payload must
/// be exactly `width * height` bytes.
pub fn read_share(bytes: &[u8]) -> Result<(RasterImage, Scheme, u8), FormatError> {
    let header = ShareHeader::parse(bytes)?;
    let expected = header.payload_len().ok_or(FormatError::DimensionOverflow)?;
    let payload = &bytes[HEADER_LEN..];
    if payload.len() < expected {
        return Err(FormatError::TruncatedPayload {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(FormatError::TrailingData(payload.len() - expected));
    }
    let img = RasterImage::new(header.width, header.height, payload.to_vec())
        .map_err(|_| FormatError::DimensionOverflow)?;
    Ok((img, header.scheme, header.index))
}
