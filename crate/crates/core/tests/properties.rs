use proptest::prelude::*;
use sis_core::io::{read_image, read_share, write_image, write_share, Origin};
use sis_core::{scheme22, scheme23, RandStream, RasterImage, Scheme};

fn raster() -> impl Strategy<Value = RasterImage> {
    (1u32..40, 1u32..40).prop_flat_map(|(w, h)| {
        proptest::collection::vec(any::<u8>(), (w * h) as usize)
            .prop_map(move |px| RasterImage::new(w, h, px).unwrap())
    })
}

fn plain_pgm(img: &RasterImage) -> Vec<u8> {
    let mut s = format!("P2\n# test\n{} {}\n255\n", img.width(), img.height());
    for row in img.pixels().chunks(img.width() as usize) {
        let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s.into_bytes()
}

fn raw_pbm(w: u32, h: u32, bits: &[bool]) -> Vec<u8> {
    let mut out = format!("P4\n{w} {h}\n").into_bytes();
    for row in bits.chunks(w as usize) {
        for chunk in row.chunks(8) {
            let byte = chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)));
            out.push(byte);
        }
    }
    out
}

fn plain_pbm(w: u32, h: u32, bits: &[bool]) -> Vec<u8> {
    let mut out = format!("P1\n{w} {h}\n").into_bytes();
    for row in bits.chunks(w as usize) {
        out.extend(row.iter().map(|&b| if b { b'1' } else { b'0' }));
        out.push(b'\n');
    }
    out
}

proptest! {
    #[test]
    fn pgm_roundtrip(img in raster()) {
        prop_assert_eq!(read_image(&write_image(&img)).unwrap(), img.clone());
        prop_assert_eq!(read_image(&plain_pgm(&img)).unwrap(), img);
    }

    #[test]
    fn pbm_variants_agree(w in 1u32..30, h in 1u32..10, seed in any::<u64>()) {
        let bits: Vec<bool> = (0..w * h).map(|i| (seed >> (i % 64)) & 1 == 1).collect();
        let raw = read_image(&raw_pbm(w, h, &bits)).unwrap();
        let plain = read_image(&plain_pbm(w, h, &bits)).unwrap();
        prop_assert_eq!(&raw, &plain);
        prop_assert_eq!(raw.origin(), Origin::Binary);
        let expected: Vec<u8> = bits.iter().map(|&b| if b { 0 } else { 255 }).collect();
        prop_assert_eq!(raw.pixels(), &expected[..]);
    }

    #[test]
    fn share_container_roundtrip(img in raster(), three in any::<bool>(), idx in 1u8..=3) {
        let scheme = if three { Scheme::TwoOfThree } else { Scheme::TwoOfTwo };
        let idx = if scheme.is_valid_index(idx) { idx } else { 1 };
        let bytes = write_share(&img, scheme, idx).unwrap();
        prop_assert_eq!(bytes.len(), 16 + img.len());
        prop_assert_eq!(read_share(&bytes).unwrap(), (img, scheme, idx));
    }

    #[test]
    fn share_parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let _ = read_share(&bytes);
        let _ = read_image(&bytes);
        let mut prefixed = b"SIS1\x01\x23\x02\x00".to_vec();
        prefixed.extend(&bytes);
        let _ = read_share(&prefixed);
    }

    #[test]
    fn lossless_and_ideal(img in raster(), seed in any::<[u8; 32]>()) {
        let stream = RandStream::seeded(seed);
        let pair = scheme22::split_22(&img, &stream).unwrap();
        prop_assert_eq!(pair.share1.dimensions(), img.dimensions());
        prop_assert_eq!(pair.share2.len(), img.len());
        prop_assert_eq!(pair.reveal().unwrap(), img.clone());

        let t = scheme23::split_23(&img, &stream).unwrap();
        for (i, j) in [(1u8, 2u8), (1, 3), (2, 3), (3, 1), (2, 1), (3, 2)] {
            let out = scheme23::reveal_23(t.get(i).unwrap(), i, t.get(j).unwrap(), j).unwrap();
            prop_assert_eq!(&out, &img);
        }
        prop_assert_eq!(t.share3.len(), img.len());
    }
}

#[test]
fn binary_secret_roundtrips_through_grayscale_shares() {
    let bits: Vec<bool> = (0..64).map(|i| i % 3 == 0).collect();
    let secret = read_image(&raw_pbm(8, 8, &bits)).unwrap();
    let pair = scheme22::split_22(&secret, &RandStream::seeded([1; 32])).unwrap();
    // shares use the full byte range, not just 0/255
    assert!(pair.share2.pixels().iter().any(|&p| p != 0 && p != 255));
    assert_eq!(pair.reveal().unwrap().pixels(), secret.pixels());
}

#[test]
fn output_independent_of_thread_count() {
    let img = sis_core::synth::natural_like(300, 211, 5);
    let stream = RandStream::seeded([9; 32]);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                (
                    scheme22::split_22(&img, &stream).unwrap(),
                    scheme23::split_23(&img, &stream).unwrap(),
                )
            })
    };
    let serial = run(1);
    assert_eq!(serial, run(4));
    assert_eq!(serial, run(7));
    // and equal to per-index draws
    for i in [0usize, 1000, 16_384, 63_299] {
        let r = stream.draw_at(i as u64);
        let (a, b) = scheme22::share_pixel_22(img.pixels()[i], r);
        assert_eq!(serial.0.share1.pixels()[i], a);
        assert_eq!(serial.0.share2.pixels()[i], b);
    }
}
