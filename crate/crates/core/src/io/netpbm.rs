//! PGM (P2/P5) and PBM (P1/P4) reading; binary PGM writing.
//! https://netpbm.sourceforge.net/doc/

use super::RasterImage;
use crate::error::FormatError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetpbmKind {
    /// P1
    PlainPbm,
    /// P2
    PlainPgm,
    /// P4
    RawPbm,
    /// P5
    RawPgm,
}

impl NetpbmKind {
    fn from_magic(magic: &[u8]) -> Option<NetpbmKind> {
        match magic {
            b"P1" => Some(NetpbmKind::PlainPbm),
            b"P2" => Some(NetpbmKind::PlainPgm),
            b"P4" => Some(NetpbmKind::RawPbm),
            b"P5" => Some(NetpbmKind::RawPgm),
            _ => None,
        }
    }

    pub fn is_bitmap(self) -> bool {
        matches!(self, NetpbmKind::PlainPbm | NetpbmKind::RawPbm)
    }

    /// Peeks at the first two bytes.
    pub fn detect(bytes: &[u8]) -> Option<NetpbmKind> {
        bytes.get(..2).and_then(NetpbmKind::from_magic)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    /// Skips whitespace and `#` comments (which run to end of line).
    fn skip_blank(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Reads a decimal integer after optional blanks. Returns `None` if no
    /// digits are present or the value overflows.
    fn number(&mut self) -> Option<u32> {
        self.skip_blank();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value.checked_mul(10)?.checked_add((b - b'0') as u32)?;
            self.pos += 1;
        }
        (self.pos > start).then_some(value)
    }

    fn header_field(&mut self, name: &'static str) -> Result<u32, FormatError> {
        let v = self.number().ok_or(FormatError::HeaderField(name))?;
        // A header token must be delimited by whitespace or a comment.
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_whitespace() || *b == b'#' => Ok(v),
            _ => Err(FormatError::HeaderField(name)),
        }
    }

    /// Consumes the single whitespace byte that separates a raw header from
    /// its payload.
    fn end_of_header(&mut self, last_field: &'static str) -> Result<(), FormatError> {
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_whitespace() => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(FormatError::HeaderField(last_field)),
        }
    }

    fn rest(&self) -> &'a [u8] {
        &self.bytes[self.pos.min(self.bytes.len())..]
    }
}

fn dimension(cur: &mut Cursor<'_>, name: &'static str) -> Result<u32, FormatError> {
    let v = cur.header_field(name)?;
    if v == 0 {
        return Err(FormatError::ZeroDimension(name));
    }
    Ok(v)
}

/// Parses a PGM or PBM image. Bitmaps are promoted to 8-bit samples with
/// black (bit 1) as 0 and white (bit 0) as 255.
pub fn read_image(bytes: &[u8]) -> Result<RasterImage, FormatError> {
    let kind = NetpbmKind::detect(bytes).ok_or(FormatError::NetpbmMagic)?;
    let mut cur = Cursor { bytes, pos: 2 };
    match cur.bytes.get(2) {
        Some(b) if b.is_ascii_whitespace() || *b == b'#' => {}
        _ => return Err(FormatError::NetpbmMagic),
    }
    let width = dimension(&mut cur, "width")?;
    let height = dimension(&mut cur, "height")?;
    let count = (width as usize)
        .checked_mul(height as usize)
        .ok_or(FormatError::DimensionOverflow)?;
    if !kind.is_bitmap() {
        let maxval = cur.header_field("maxval")?;
        if maxval != 255 {
            return Err(FormatError::Maxval(maxval));
        }
    }

    let build = |img: Result<RasterImage, crate::Error>| {
        // dimensions were validated above, so the only failure is overflow
        img.map_err(|_| FormatError::DimensionOverflow)
    };

    match kind {
        NetpbmKind::RawPgm => {
            cur.end_of_header("maxval")?;
            let payload = cur.rest();
            if payload.len() < count {
                return Err(FormatError::TruncatedPayload {
                    expected: count,
                    found: payload.len(),
                });
            }
            build(RasterImage::new(width, height, payload[..count].to_vec()))
        }
        NetpbmKind::PlainPgm => {
            let mut pixels = Vec::with_capacity(count);
            while pixels.len() < count {
                match cur.number() {
                    Some(v) if v <= 255 => pixels.push(v as u8),
                    Some(v) => return Err(FormatError::SampleRange(v)),
                    None => {
                        return Err(FormatError::TruncatedPayload {
                            expected: count,
                            found: pixels.len(),
                        })
                    }
                }
            }
            build(RasterImage::new(width, height, pixels))
        }
        NetpbmKind::RawPbm => {
            cur.end_of_header("height")?;
            let row_bytes = (width as usize).div_ceil(8);
            let expected = row_bytes
                .checked_mul(height as usize)
                .ok_or(FormatError::DimensionOverflow)?;
            let payload = cur.rest();
            if payload.len() < expected {
                return Err(FormatError::TruncatedPayload {
                    expected,
                    found: payload.len(),
                });
            }
            let mut bits = Vec::with_capacity(count);
            for row in payload[..expected].chunks_exact(row_bytes) {
                for x in 0..width as usize {
                    bits.push(row[x / 8] & (0x80 >> (x % 8)) != 0);
                }
            }
            build(RasterImage::from_bits(width, height, &bits))
        }
        NetpbmKind::PlainPbm => {
            let mut bits = Vec::with_capacity(count);
            while bits.len() < count {
                cur.skip_blank();
                match cur.bytes.get(cur.pos) {
                    Some(b'0') => bits.push(false),
                    Some(b'1') => bits.push(true),
                    Some(&b) if b.is_ascii_digit() => {
                        return Err(FormatError::SampleRange((b - b'0') as u32))
                    }
                    _ => {
                        return Err(FormatError::TruncatedPayload {
                            expected: count,
                            found: bits.len(),
                        })
                    }
                }
                cur.pos += 1;
            }
            build(RasterImage::from_bits(width, height, &bits))
        }
    }
}

/// Serialises as binary PGM (P5, maxval 255).
pub fn write_image(img: &RasterImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", img.width(), img.height());
    let mut out = Vec::with_capacity(header.len() + img.len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(img.pixels());
    out
}
