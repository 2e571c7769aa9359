use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sis_core::randsource::Seed;
use sis_core::Scheme;

#[derive(Debug, Parser)]
#[command(
    name = "sis",
    version,
    about = "Lossless (2,2) and (2,3) secret image sharing"
)]
pub struct Cli {
    /// Print extra progress information to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a PGM/PBM secret image into share files.
    Split(SplitArgs),
    /// Reveal a secret image from two share files.
    Combine(CombineArgs),
    /// Describe a share file or netpbm image.
    Inspect { file: PathBuf },
    /// Report the value distribution of a share, or enumerate it exactly.
    Analyze(AnalyzeArgs),
    /// Measure split/combine throughput on a synthetic image.
    Bench {
        /// Image size as WIDTHxHEIGHT.
        #[arg(long, default_value = "1024x1024", value_parser = parse_size)]
        size: (u32, u32),
    },
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, value_parser = parse_scheme)]
    pub scheme: Scheme,
    pub input: PathBuf,
    /// Output stem; shares are written to `<stem>.shareK.sis`.
    #[arg(long)]
    pub out: PathBuf,
    /// 256-bit seed in hex (up to 64 digits) for reproducible shares.
    #[arg(long, value_parser = parse_seed)]
    pub seed: Option<Seed>,
    /// Also write each share as `<stem>.shareK.pgm`.
    #[arg(long)]
    pub preview: bool,
}

#[derive(Debug, Args)]
pub struct CombineArgs {
    pub share_a: PathBuf,
    pub share_b: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Share file to analyse.
    #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
    pub share: Option<PathBuf>,
    /// Enumerate the share's distribution over every random value.
    #[arg(long, requires_all = ["scheme", "share_index"])]
    pub enumerate: bool,
    #[arg(long, value_parser = parse_scheme, requires = "enumerate")]
    pub scheme: Option<Scheme>,
    #[arg(long = "share", id = "share_index", requires = "enumerate")]
    pub share_index: Option<u8>,
    /// Secret byte to enumerate for; by default the worst case over all 256.
    #[arg(long, requires = "enumerate")]
    pub secret: Option<u8>,
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse()
}

/// Accepts 1 to 64 hex digits, read as a big-endian number and left-padded
/// with zeros to 32 bytes.
pub fn parse_seed(s: &str) -> Result<Seed, String> {
    let digits = s.strip_prefix("0x").unwrap_or(s);
    if digits.is_empty() || digits.len() > 64 {
        return Err(format!(
            "seed must have 1 to 64 hex digits, got {}",
            digits.len()
        ));
    }
    let padded = format!("{digits:0>64}");
    let mut seed = [0u8; 32];
    hex::decode_to_slice(&padded, &mut seed).map_err(|e| format!("invalid hex seed: {e}"))?;
    Ok(seed)
}

pub fn parse_size(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("size `{s}` is not WIDTHxHEIGHT"))?;
    let w: u32 = w.parse().map_err(|_| format!("bad width `{w}`"))?;
    let h: u32 = h.parse().map_err(|_| format!("bad height `{h}`"))?;
    if w == 0 || h == 0 {
        return Err("size must be nonzero".into());
    }
    Ok((w, h))
}
