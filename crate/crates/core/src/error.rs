use thiserror::Error;

use crate::Scheme;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the sharing, revealing and analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image has no pixels")]
    EmptyImage,
    #[error("pixel buffer holds {found} samples but {width}x{height} needs {expected}")]
    PixelCount {
        width: u32,
        height: u32,
        expected: usize,
        found: usize,
    },
    #[error("dimension mismatch: {}x{} vs {}x{}", .left.0, .left.1, .right.0, .right.1)]
    DimensionMismatch { left: (u32, u32), right: (u32, u32) },
    #[error("share index {index} is not valid for scheme {scheme}")]
    InvalidShareIndex { scheme: Scheme, index: u8 },
    #[error("both shares carry index {0}")]
    DuplicateShareIndex(u8),
    #[error("shares belong to different schemes ({0} and {1})")]
    SchemeMismatch(Scheme, Scheme),
    #[error("distribution is empty")]
    EmptyDistribution,
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Parse failures for netpbm images and share containers. Each variant names
/// the header field or region that was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("unrecognised netpbm magic (expected P1, P2, P4 or P5)")]
    NetpbmMagic,
    #[error("malformed or missing {0} field in image header")]
    HeaderField(&'static str),
    #[error("unsupported maxval {0} (only 255 is accepted)")]
    Maxval(u32),
    #[error("{0} is zero")]
    ZeroDimension(&'static str),
    #[error("image dimensions overflow the address space")]
    DimensionOverflow,
    #[error("sample value {0} out of range")]
    SampleRange(u32),
    #[error("truncated header: {found} of {expected} bytes")]
    TruncatedHeader { expected: usize, found: usize },
    #[error("truncated payload: {found} of {expected} bytes")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("bad share magic {0:02x?} (expected \"SIS1\")")]
    ShareMagic([u8; 4]),
    #[error("unsupported share container version {0}")]
    Version(u8),
    #[error("unknown scheme byte 0x{0:02x}")]
    SchemeByte(u8),
    #[error("share index {index} is not valid for scheme {scheme}")]
    ShareIndex { scheme: Scheme, index: u8 },
    #[error("reserved header byte is 0x{0:02x}, expected 0")]
    Reserved(u8),
    #[error("{0} unexpected bytes after payload")]
    TrailingData(usize),
}
