//! Lossless secret image sharing over the prime field of order 257.
//!
//! Two threshold schemes are provided:
//!
//! - [`scheme22`]: a (2,2) scheme. Share 1 holds a random unit `r`, share 2
//!   holds `s * r^-1`; multiplying the two recovers `s`.
//! - [`scheme23`]: a (2,3) scheme. With `a` the cube root of `s`, the shares
//!   hold `r*a`, `r^2*a` and `r^4*a`; any two recover `s`.
//!
//! Pixels are 8-bit; byte 0 stands for the residue 256 so that every sample
//! is a unit of the field and reconstruction is exact. Every share has the
//! same dimensions as the secret.
//!
//! ```
//! use sis_core::{io::RasterImage, randsource::RandStream, scheme22};
//!
//! let secret = RasterImage::new(2, 2, vec![0, 1, 128, 255]).unwrap();
//! let pair = scheme22::split_22(&secret, &RandStream::seeded([7; 32])).unwrap();
//! let revealed = scheme22::reveal_22(&pair.share1, &pair.share2).unwrap();
//! assert_eq!(revealed.pixels(), secret.pixels());
//! ```

pub mod analysis;
mod error;
pub mod field257;
pub mod io;
pub mod pixelcodec;
pub mod randsource;
pub mod scheme22;
pub mod scheme23;
pub mod synth;

mod kernel;

pub use error::{Error, FormatError, Result};
pub use field257::FieldElement;
pub use io::{Origin, RasterImage};
pub use randsource::RandStream;

use std::fmt;

/// Which threshold scheme a share belongs to. The discriminant is the byte
/// stored in the share container.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Scheme {
    TwoOfTwo = 0x22,
    TwoOfThree = 0x23,
}

impl Scheme {
    pub fn byte(self) -> u8 {
        self as u8
    }

    pub fn from_byte(b: u8) -> Option<Scheme> {
        match b {
            0x22 => Some(Scheme::TwoOfTwo),
            0x23 => Some(Scheme::TwoOfThree),
            _ => None,
        }
    }

    /// Number of shares produced by a split.
    pub fn share_count(self) -> u8 {
        match self {
            Scheme::TwoOfTwo => 2,
            Scheme::TwoOfThree => 3,
        }
    }

    pub fn is_valid_index(self, index: u8) -> bool {
        (1..=self.share_count()).contains(&index)
    }

    /// Command-line spelling, `2x2` or `2x3`.
    pub fn name(self) -> &'static str {
        match self {
            Scheme::TwoOfTwo => "2x2",
            Scheme::TwoOfThree => "2x3",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Scheme, String> {
        match s {
            "2x2" => Ok(Scheme::TwoOfTwo),
            "2x3" => Ok(Scheme::TwoOfThree),
            other => Err(format!("unknown scheme `{other}` (expected 2x2 or 2x3)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_bytes_and_indices() {
        assert_eq!(Scheme::from_byte(0x22), Some(Scheme::TwoOfTwo));
        assert_eq!(Scheme::from_byte(0x23), Some(Scheme::TwoOfThree));
        assert_eq!(Scheme::from_byte(0x24), None);
        assert!(!Scheme::TwoOfTwo.is_valid_index(0));
        assert!(Scheme::TwoOfTwo.is_valid_index(2));
        assert!(!Scheme::TwoOfTwo.is_valid_index(3));
        assert!(Scheme::TwoOfThree.is_valid_index(3));
        assert_eq!("2x3".parse::<Scheme>(), Ok(Scheme::TwoOfThree));
        assert!("3x3".parse::<Scheme>().is_err());
    }
}
