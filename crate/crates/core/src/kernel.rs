//! Block-parallel pixel loops. Rasters are cut into fixed blocks of
//! consecutive row-major indices; each block seeks the random stream to its
//! first index, so the output does not depend on how blocks are scheduled.

use rayon::prelude::*;

use crate::field257::FieldElement;
use crate::randsource::RandStream;

const BLOCK: usize = 1 << 14;

/// Applies `share` to every `(pixel, r_i)` and returns `N` share buffers.
pub(crate) fn split_pixels<const N: usize>(
    secret: &[u8],
    stream: &RandStream,
    share: impl Fn(u8, FieldElement) -> [u8; N] + Sync,
) -> [Vec<u8>; N] {
    let mut interleaved = vec![0u8; secret.len() * N];
    interleaved
        .par_chunks_mut(BLOCK * N)
        .zip(secret.par_chunks(BLOCK))
        .enumerate()
        .for_each(|(block, (out, pixels))| {
            let mut rs = vec![FieldElement::ONE; pixels.len()];
            stream.fill((block * BLOCK) as u64, &mut rs);
            for ((dst, &s), &r) in out.chunks_exact_mut(N).zip(pixels).zip(&rs) {
                dst.copy_from_slice(&share(s, r));
            }
        });
    std::array::from_fn(|k| interleaved.iter().skip(k).step_by(N).copied().collect())
}

/// Pixel-wise combination of two equally sized buffers.
pub(crate) fn combine_pixels(a: &[u8], b: &[u8], reveal: impl Fn(u8, u8) -> u8 + Sync) -> Vec<u8> {
    debug_assert_eq!(a.len(), b.len());
    let mut out = vec![0u8; a.len()];
    out.par_chunks_mut(BLOCK)
        .zip(a.par_chunks(BLOCK).zip(b.par_chunks(BLOCK)))
        .for_each(|(dst, (xa, xb))| {
            for ((d, &p), &q) in dst.iter_mut().zip(xa).zip(xb) {
                *d = reveal(p, q);
            }
        });
    out
}
