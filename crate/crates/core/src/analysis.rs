//! Value distributions of shares.
//!
//! Because `r` ranges over only 256 values, what a single share reveals about
//! a secret pixel can be computed exactly: fix `s`, run the sharing step for
//! every `r`, and tally the bytes that land in the chosen share. The image
//! level counterparts (histogram, chi-square against uniform, Shannon
//! entropy) quantify the same property on real share files.

use std::fmt;

use crate::error::{Error, Result};
use crate::field257::FieldElement;
use crate::io::RasterImage;
use crate::scheme22::share_pixel_22;
use crate::scheme23::share_pixel_23;
use crate::Scheme;

/// Counts of each byte value.
#[derive(Clone, PartialEq, Eq)]
pub struct Distribution {
    counts: [u64; 256],
}

impl Default for Distribution {
    fn default() -> Self {
        Distribution { counts: [0; 256] }
    }
}

impl fmt::Debug for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Distribution")
            .field("total", &self.total())
            .field("support_size", &self.support_size())
            .finish()
    }
}

impl Distribution {
    pub fn from_counts(counts: [u64; 256]) -> Distribution {
        Distribution { counts }
    }

    pub fn add(&mut self, value: u8) {
        self.counts[value as usize] += 1;
    }

    pub fn counts(&self) -> &[u64; 256] {
        &self.counts
    }

    pub fn count(&self, value: u8) -> u64 {
        self.counts[value as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of byte values that occur at least once.
    pub fn support_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// Smallest nonzero count, or 0 for an empty distribution.
    pub fn min_count(&self) -> u64 {
        self.counts
            .iter()
            .copied()
            .filter(|&c| c > 0)
            .min()
            .unwrap_or(0)
    }

    pub fn max_count(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// Tallies share `share_index` of `scheme` for secret byte `s` over every
/// `r` in `1..=256`. The total is always 256.
pub fn enumerate_share_distribution(
    scheme: Scheme,
    share_index: u8,
    s: u8,
) -> Result<Distribution> {
    if !scheme.is_valid_index(share_index) {
        return Err(Error::InvalidShareIndex {
            scheme,
            index: share_index,
        });
    }
    let mut d = Distribution::default();
    for r in FieldElement::all() {
        let byte = match scheme {
            Scheme::TwoOfTwo => {
                let (s1, s2) = share_pixel_22(s, r);
                [s1, s2][share_index as usize - 1]
            }
            Scheme::TwoOfThree => {
                let (s1, s2, s3) = share_pixel_23(s, r);
                [s1, s2, s3][share_index as usize - 1]
            }
        };
        d.add(byte);
    }
    Ok(d)
}

pub fn histogram(img: &RasterImage) -> Distribution {
    let mut d = Distribution::default();
    for &p in img.pixels() {
        d.add(p);
    }
    d
}

/// Pearson's statistic against the uniform distribution on 256 bins
/// (255 degrees of freedom).
pub fn chi_square_uniform(d: &Distribution) -> Result<f64> {
    let total = d.total();
    if total == 0 {
        return Err(Error::EmptyDistribution);
    }
    let expected = total as f64 / 256.0;
    Ok(d.counts
        .iter()
        .map(|&c| {
            let diff = c as f64 - expected;
            diff * diff / expected
        })
        .sum())
}

/// Shannon entropy in bits per sample.
pub fn shannon_entropy(d: &Distribution) -> Result<f64> {
    let total = d.total();
    if total == 0 {
        return Err(Error::EmptyDistribution);
    }
    let total = total as f64;
    Ok(d.counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum())
}

/// 0.999 quantile of the chi-square distribution with 255 degrees of freedom.
pub const CHI_SQUARE_255_Q999: f64 = 359.9;

/// Summary of one share's value distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub scheme: Scheme,
    pub share: u8,
    pub support_size: usize,
    pub min_count: u64,
    pub max_count: u64,
    pub chi_square: f64,
    pub entropy_bits: f64,
}

impl Report {
    pub fn from_distribution(scheme: Scheme, share: u8, d: &Distribution) -> Result<Report> {
        Ok(Report {
            scheme,
            share,
            support_size: d.support_size(),
            min_count: d.min_count(),
            max_count: d.max_count(),
            chi_square: chi_square_uniform(d)?,
            entropy_bits: shannon_entropy(d)?,
        })
    }

    /// Enumerated report for secret `s`, or, with `None`, the worst case over
    /// all 256 secrets: smallest support, extreme counts, largest
    /// chi-square and lowest entropy.
    pub fn enumerate(scheme: Scheme, share: u8, s: Option<u8>) -> Result<Report> {
        let secrets = match s {
            Some(v) => v..=v,
            None => 0..=255,
        };
        let mut worst: Option<Report> = None;
        for v in secrets {
            let d = enumerate_share_distribution(scheme, share, v)?;
            let r = Report::from_distribution(scheme, share, &d)?;
            worst = Some(match worst {
                None => r,
                Some(w) => Report {
                    support_size: w.support_size.min(r.support_size),
                    min_count: w.min_count.min(r.min_count),
                    max_count: w.max_count.max(r.max_count),
                    chi_square: w.chi_square.max(r.chi_square),
                    entropy_bits: w.entropy_bits.min(r.entropy_bits),
                    ..w
                },
            });
        }
        // the range is never empty
        worst.ok_or(Error::EmptyDistribution)
    }
}

/// Integral values print with one decimal (`8.0`), others with six.
pub fn format_real(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.1}")
    } else {
        format!("{x:.6}")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme {}", self.scheme)?;
        writeln!(f, "share {}", self.share)?;
        writeln!(f, "support_size {}", self.support_size)?;
        writeln!(f, "min_count {}", self.min_count)?;
        writeln!(f, "max_count {}", self.max_count)?;
        writeln!(f, "chi_square {}", format_real(self.chi_square))?;
        writeln!(f, "entropy_bits {}", format_real(self.entropy_bits))
    }
}
