use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use sis_core::analysis::{self, Report};
use sis_core::io::{self, NetpbmKind, RasterImage, HEADER_LEN, MAGIC};
use sis_core::{randsource::RandStream, scheme22, scheme23, synth, Error, Scheme};

use crate::args::{AnalyzeArgs, CombineArgs, SplitArgs};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Usage = 1,
    Format = 2,
    Compat = 3,
}

/// A failure carrying its exit code and a one-line message.
#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    fn format(message: impl Into<String>) -> Failure {
        Failure {
            exit: Exit::Format,
            message: message.into(),
        }
    }

    fn compat(message: impl Into<String>) -> Failure {
        Failure {
            exit: Exit::Compat,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // diagnostics are always a single line
        f.write_str(&self.message.replace('\n', " "))
    }
}

type CmdResult = Result<(), Failure>;

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::format(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> CmdResult {
    fs::write(path, bytes)
        .map_err(|e| Failure::format(format!("cannot write {}: {e}", path.display())))
}

fn parse_share(path: &Path) -> Result<(RasterImage, Scheme, u8), Failure> {
    let bytes = read_file(path)?;
    io::read_share(&bytes).map_err(|e| Failure::format(format!("{}: {e}", path.display())))
}

fn core_failure(e: Error) -> Failure {
    match e {
        Error::Format(f) => Failure::format(f.to_string()),
        Error::EmptyImage | Error::PixelCount { .. } | Error::EmptyDistribution => {
            Failure::format(e.to_string())
        }
        _ => Failure::compat(e.to_string()),
    }
}

/// `<stem>.shareK.<ext>`, keeping any directory and dots in the stem.
pub fn share_path(stem: &Path, index: u8, ext: &str) -> PathBuf {
    let mut name = stem.as_os_str().to_owned();
    name.push(format!(".share{index}.{ext}"));
    PathBuf::from(name)
}

pub fn split(args: &SplitArgs, verbose: bool) -> CmdResult {
    let bytes = read_file(&args.input)?;
    let secret = io::read_image(&bytes)
        .map_err(|e| Failure::format(format!("{}: {e}", args.input.display())))?;
    let stream = match args.seed {
        Some(seed) => RandStream::seeded(seed),
        None => RandStream::Entropy,
    };
    if verbose {
        eprintln!(
            "splitting {} ({:?}) with {} randomness",
            args.input.display(),
            secret.origin(),
            if stream.is_seeded() { "seeded" } else { "OS" }
        );
    }
    let shares: Vec<RasterImage> = match args.scheme {
        Scheme::TwoOfTwo => {
            let pair = scheme22::split_22(&secret, &stream).map_err(core_failure)?;
            vec![pair.share1, pair.share2]
        }
        Scheme::TwoOfThree => {
            let t = scheme23::split_23(&secret, &stream).map_err(core_failure)?;
            vec![t.share1, t.share2, t.share3]
        }
    };
    println!("dimensions {}x{}", secret.width(), secret.height());
    for (k, share) in shares.iter().enumerate() {
        let index = k as u8 + 1;
        let path = share_path(&args.out, index, "sis");
        let encoded = io::write_share(share, args.scheme, index).map_err(core_failure)?;
        write_file(&path, &encoded)?;
        println!("share{index} {}", path.display());
        if args.preview {
            let preview = share_path(&args.out, index, "pgm");
            write_file(&preview, &io::write_image(share))?;
            println!("preview{index} {}", preview.display());
        }
    }
    Ok(())
}

pub fn combine(args: &CombineArgs, verbose: bool) -> CmdResult {
    let (a, scheme_a, index_a) = parse_share(&args.share_a)?;
    let (b, scheme_b, index_b) = parse_share(&args.share_b)?;
    if scheme_a != scheme_b {
        return Err(Failure::compat(format!(
            "scheme mismatch: {} is {scheme_a}, {} is {scheme_b}",
            args.share_a.display(),
            args.share_b.display()
        )));
    }
    if a.dimensions() != b.dimensions() {
        return Err(Failure::compat(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    if index_a == index_b {
        return Err(Failure::compat(format!("duplicate share index {index_a}")));
    }
    if verbose {
        eprintln!("combining {scheme_a} shares {index_a} and {index_b}");
    }
    let secret = match scheme_a {
        Scheme::TwoOfTwo => {
            let (s1, s2) = if index_a == 1 { (&a, &b) } else { (&b, &a) };
            scheme22::reveal_22(s1, s2)
        }
        Scheme::TwoOfThree => scheme23::reveal_23(&a, index_a, &b, index_b),
    }
    .map_err(core_failure)?;
    write_file(&args.out, &io::write_image(&secret))?;
    println!("dimensions {}x{}", secret.width(), secret.height());
    println!("output {}", args.out.display());
    Ok(())
}

pub fn inspect(path: &Path) -> CmdResult {
    let bytes = read_file(path)?;
    if bytes.starts_with(&MAGIC) {
        let (img, scheme, index) = io::read_share(&bytes)
            .map_err(|e| Failure::format(format!("{}: {e}", path.display())))?;
        println!("format sis1");
        println!("scheme {scheme}");
        println!("index {index}");
        println!("width {}", img.width());
        println!("height {}", img.height());
        println!("header_bytes {HEADER_LEN}");
        println!("payload_bytes {}", img.len());
        return Ok(());
    }
    let Some(kind) = NetpbmKind::detect(&bytes) else {
        return Err(Failure::format(format!(
            "{}: unrecognised format (neither SIS1 share nor netpbm image)",
            path.display()
        )));
    };
    let img =
        io::read_image(&bytes).map_err(|e| Failure::format(format!("{}: {e}", path.display())))?;
    println!("format {}", if kind.is_bitmap() { "pbm" } else { "pgm" });
    println!("width {}", img.width());
    println!("height {}", img.height());
    println!("payload_bytes {}", img.len());
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs) -> CmdResult {
    let report = match (&args.share, args.scheme, args.share_index) {
        (Some(path), _, _) => {
            let (img, scheme, index) = parse_share(path)?;
            Report::from_distribution(scheme, index, &analysis::histogram(&img))
                .map_err(core_failure)?
        }
        (None, Some(scheme), Some(index)) => Report::enumerate(scheme, index, args.secret)
            .map_err(|e| match e {
                Error::InvalidShareIndex { .. } => Failure {
                    exit: Exit::Usage,
                    message: e.to_string(),
                },
                other => core_failure(other),
            })?,
        // clap enforces one of the two forms
        _ => {
            return Err(Failure {
                exit: Exit::Usage,
                message: "analyze needs a share file or --scheme, --share and --enumerate".into(),
            })
        }
    };
    print!("{report}");
    Ok(())
}

fn best_of<T>(rounds: usize, mut f: impl FnMut() -> T) -> Duration {
    (0..rounds)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .min()
        .unwrap_or_default()
}

pub fn bench((width, height): (u32, u32)) -> CmdResult {
    let secret = synth::natural_like(width, height, 0);
    let stream = RandStream::seeded([0x42; 32]);
    let pair = scheme22::split_22(&secret, &stream).map_err(core_failure)?;
    let triple = scheme23::split_23(&secret, &stream).map_err(core_failure)?;
    let mpix = secret.len() as f64 / 1e6;
    let rounds = 5;
    let timings = [
        (
            "split_2x2",
            best_of(rounds, || scheme22::split_22(&secret, &stream)),
        ),
        ("combine_2x2", best_of(rounds, || pair.reveal())),
        (
            "split_2x3",
            best_of(rounds, || scheme23::split_23(&secret, &stream)),
        ),
        (
            "combine_2x3",
            best_of(rounds, || {
                scheme23::reveal_23(&triple.share1, 1, &triple.share2, 2)
            }),
        ),
    ];
    println!("size {width}x{height}");
    let rate = |d: Duration| mpix / d.as_secs_f64().max(1e-9);
    for (name, d) in timings {
        println!("{name}_mpix_per_s {:.3}", rate(d));
    }
    println!(
        "combine_2x2_not_slower {}",
        rate(timings[1].1) >= rate(timings[3].1)
    );
    Ok(())
}
