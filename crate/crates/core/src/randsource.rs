//! Per-pixel randomness for the sharing phase.
//!
//! A fresh `r` in `1..=256` is needed for every pixel. In seeded mode the
//! value for pixel `i` is byte `i` of the ChaCha20 keystream under the seed,
//! plus one. Because 256 byte values map onto exactly 256 outcomes the
//! mapping is unbiased, and because the keystream is seekable, any pixel can
//! be drawn independently of evaluation order.

use rand::rngs::OsRng;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::field257::FieldElement;

/// A 256-bit seed for reproducible share generation.
pub type Seed = [u8; 32];

#[derive(Clone, PartialEq, Eq)]
pub enum RandStream {
    /// Draws from the operating system's secure generator.
    Entropy,
    /// Draws are a pure function of `(seed, pixel_index)`.
    Seeded(Seed),
}

impl std::fmt::Debug for RandStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RandStream::Entropy => f.write_str("Entropy"),
            // seeds are key material
            RandStream::Seeded(_) => f.write_str("Seeded(..)"),
        }
    }
}

#[inline]
fn byte_to_field(b: u8) -> FieldElement {
    // b + 1 is in 1..=256
    FieldElement::new(b as u16 + 1).unwrap_or(FieldElement::ONE)
}

impl RandStream {
    pub fn seeded(seed: Seed) -> RandStream {
        RandStream::Seeded(seed)
    }

    pub fn is_seeded(&self) -> bool {
        matches!(self, RandStream::Seeded(_))
    }

    /// The random element for pixel `pixel_index`.
    pub fn draw_at(&self, pixel_index: u64) -> FieldElement {
        match self {
            RandStream::Entropy => {
                let mut b = [0u8; 1];
                OsRng.fill_bytes(&mut b);
                byte_to_field(b[0])
            }
            RandStream::Seeded(seed) => {
                let mut rng = ChaCha20Rng::from_seed(*seed);
                rng.set_word_pos((pixel_index / 4) as u128);
                let word = rng.next_u32().to_le_bytes();
                byte_to_field(word[(pixel_index % 4) as usize])
            }
        }
    }

    /// Fills `out[k]` with the draw for pixel `start + k`. Equivalent to
    /// calling [`draw_at`](Self::draw_at) for each index, but streams the
    /// keystream instead of re-seeking per pixel.
    pub fn fill(&self, start: u64, out: &mut [FieldElement]) {
        match self {
            RandStream::Entropy => {
                let mut buf = vec![0u8; out.len()];
                OsRng.fill_bytes(&mut buf);
                for (slot, b) in out.iter_mut().zip(buf) {
                    *slot = byte_to_field(b);
                }
            }
            RandStream::Seeded(seed) => {
                let mut rng = ChaCha20Rng::from_seed(*seed);
                rng.set_word_pos((start / 4) as u128);
                let mut word = rng.next_u32().to_le_bytes();
                let mut lane = (start % 4) as usize;
                for slot in out.iter_mut() {
                    if lane == 4 {
                        word = rng.next_u32().to_le_bytes();
                        lane = 0;
                    }
                    *slot = byte_to_field(word[lane]);
                    lane += 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed(tag: u8) -> Seed {
        let mut s = [0u8; 32];
        s[0] = tag;
        s[31] = 0x5a;
        s
    }

    #[test]
    fn seeded_draws_are_deterministic() {
        let a = RandStream::seeded(seed(1));
        let b = RandStream::seeded(seed(1));
        for i in [0u64, 1, 2, 3, 4, 63, 64, 65, 1_000_003] {
            assert_eq!(a.draw_at(i), a.draw_at(i));
            assert_eq!(a.draw_at(i), b.draw_at(i));
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let a = RandStream::seeded(seed(1));
        let b = RandStream::seeded(seed(2));
        let xs: Vec<_> = (0..64).map(|i| a.draw_at(i)).collect();
        let ys: Vec<_> = (0..64).map(|i| b.draw_at(i)).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn fill_matches_draw_at_at_any_offset() {
        let s = RandStream::seeded(seed(7));
        for start in [0u64, 1, 2, 3, 5, 61, 64, 129] {
            let mut buf = vec![FieldElement::ONE; 150];
            s.fill(start, &mut buf);
            for (k, v) in buf.iter().enumerate() {
                assert_eq!(*v, s.draw_at(start + k as u64), "start {start} k {k}");
            }
        }
    }

    #[test]
    fn entropy_draws_in_range() {
        let s = RandStream::Entropy;
        let mut buf = vec![FieldElement::ONE; 4096];
        s.fill(0, &mut buf);
        assert!(buf.iter().all(|v| (1..=256).contains(&v.value())));
        let v = s.draw_at(0).value();
        assert!((1..=256).contains(&v));
    }

    #[test]
    fn seeded_uniformity_chi_square() {
        let s = RandStream::seeded(seed(9));
        let mut buf = vec![FieldElement::ONE; 1_000_000];
        s.fill(0, &mut buf);
        let mut counts = [0u64; 257];
        for v in &buf {
            counts[v.value() as usize] += 1;
        }
        assert_eq!(counts[0], 0);
        let expected = buf.len() as f64 / 256.0;
        let sd = (expected * (1.0 - 1.0 / 256.0)).sqrt();
        let mut chi = 0.0;
        for &c in &counts[1..] {
            let d = c as f64 - expected;
            assert!(d.abs() < 5.0 * sd, "count {c} too far from {expected}");
            chi += d * d / expected;
        }
        assert!(chi < 359.9, "chi-square {chi}");
    }

    #[test]
    fn debug_hides_seed() {
        assert_eq!(
            format!("{:?}", RandStream::seeded([0xab; 32])),
            "Seeded(..)"
        );
    }
}
