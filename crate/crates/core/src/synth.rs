//! Deterministic synthetic grayscale images for benchmarks and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::RasterImage;

struct Lattice {
    cell: f64,
    cols: usize,
    values: Vec<f64>,
}

impl Lattice {
    fn new(rng: &mut ChaCha8Rng, width: u32, height: u32, cell: f64) -> Lattice {
        let cols = (width as f64 / cell).ceil() as usize + 2;
        let rows = (height as f64 / cell).ceil() as usize + 2;
        let values = (0..cols * rows).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Lattice { cell, cols, values }
    }

    fn sample(&self, x: f64, y: f64) -> f64 {
        let (gx, gy) = (x / self.cell, y / self.cell);
        let (ix, iy) = (gx.floor() as usize, gy.floor() as usize);
        let smooth = |t: f64| t * t * (3.0 - 2.0 * t);
        let (tx, ty) = (smooth(gx.fract()), smooth(gy.fract()));
        let at = |cx: usize, cy: usize| self.values[cy * self.cols + cx];
        let top = at(ix, iy) * (1.0 - tx) + at(ix + 1, iy) * tx;
        let bottom = at(ix, iy + 1) * (1.0 - tx) + at(ix + 1, iy + 1) * tx;
        top * (1.0 - ty) + bottom * ty
    }
}

/// A smooth, photo-like grayscale image: multi-octave value noise over a
/// diagonal gradient, with mild grain. The histogram spreads over most of
/// `0..=255`. Same `(width, height, seed)` gives the same image.
pub fn natural_like(width: u32, height: u32, seed: u64) -> RasterImage {
    assert!(width > 0 && height > 0, "dimensions must be nonzero");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let octaves: Vec<(Lattice, f64)> = [(64.0, 0.55), (24.0, 0.3), (8.0, 0.15)]
        .into_iter()
        .map(|(cell, weight)| (Lattice::new(&mut rng, width, height, cell), weight))
        .collect();
    let span = (width + height) as f64;
    let mut pixels = Vec::with_capacity(width as usize * height as usize);
    for y in 0..height {
        for x in 0..width {
            let (fx, fy) = (x as f64, y as f64);
            let noise: f64 = octaves.iter().map(|(l, w)| l.sample(fx, fy) * w).sum();
            let gradient = (fx + fy) / span - 0.5;
            let grain = rng.gen_range(-4.0..4.0);
            let v = 128.0 + 150.0 * noise + 90.0 * gradient + grain;
            pixels.push(v.round().clamp(0.0, 255.0) as u8);
        }
    }
    // Length matches the dimensions by construction.
    RasterImage::new(width, height, pixels).expect("synthetic raster")
}
