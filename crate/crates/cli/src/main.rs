//! `ffmark` — exact finite-field transforms and fragile watermarking on
//! PGM images.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ffmark::{
    authenticate, blockwise_transform, embed, encode_pgm_with_comments, extract,
    find_unimodular_zeta, pad_to_multiple, psnr, read_pgm, write_pgm, Direction, GaussianInt,
    GrayImage, PgmFormat, Placement, PrimeField, TransformKind, WatermarkImage, ZetaConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "ffmark",
    version,
    about = "Exact finite-field transforms and fragile watermarking for PGM images",
    long_about = "Trigonometric transforms (cosine, Hartley, Fourier) over the prime field \
                  GF(p), and a fragile watermarking pipeline built on them. All arithmetic is \
                  modular and exact: watermarks extract bit-perfectly from untouched images, \
                  and any change to a signed image is localized to the N×N blocks it touches."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List elements of a given multiplicative order in GI(p)
    FindZeta(FindZetaCmd),
    /// Blockwise 2-D transform of a PGM image
    Transform(TransformCmd),
    /// Hide a watermark in an image's blockwise spectra
    Embed(EmbedCmd),
    /// Recover the watermark plane from an original/marked pair
    Extract(ExtractCmd),
    /// Produce a fragile signature image for later authentication
    Sign(EmbedCmd),
    /// Authenticate an image against its signature and watermark
    Verify(VerifyCmd),
    /// Corrupt an image reproducibly, to exercise verification
    Tamper(TamperCmd),
    /// Peak signal-to-noise ratio between two images
    Psnr(PsnrCmd),
}

/// Transform parameters shared by every spectral command.
#[derive(Args)]
struct ConfigArgs {
    /// Field modulus p: a prime with p ≡ 3 (mod 4), p < 32768
    #[arg(long)]
    p: u32,

    /// Transform generator, e.g. "2+2j", "j", "6"
    #[arg(long)]
    zeta: String,

    /// Transform kind
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Block size N; images are processed as N×N tiles
    #[arg(long, value_name = "N")]
    block: usize,
}

impl ConfigArgs {
    fn build(&self) -> Result<ZetaConfig> {
        let field = PrimeField::new(self.p)?;
        let zeta = GaussianInt::parse(field, &self.zeta)?;
        Ok(ZetaConfig::new(field, zeta, self.kind.into(), self.block)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Cosine transform; ζ must be unimodular of order 4N
    Ffct,
    /// Hartley transform; ζ must be unimodular of order N
    Ffht,
    /// Fourier transform; ζ must be real of order N
    Ffft,
}

impl From<KindArg> for TransformKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Ffct => TransformKind::Ffct,
            KindArg::Ffht => TransformKind::Ffht,
            KindArg::Ffft => TransformKind::Ffft,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlacementArg {
    /// Repeat the watermark periodically over the whole image
    Tile,
    /// Put the watermark at the origin and leave the rest zero
    TopLeft,
}

impl From<PlacementArg> for Placement {
    fn from(placement: PlacementArg) -> Self {
        match placement {
            PlacementArg::Tile => Placement::Tile,
            PlacementArg::TopLeft => Placement::TopLeft,
        }
    }
}

#[derive(Args)]
struct FindZetaCmd {
    /// Field modulus p: a prime with p ≡ 3 (mod 4), p < 32768
    #[arg(long)]
    p: u32,

    /// Multiplicative order to look for
    #[arg(long)]
    order: u32,

    /// Search only unimodular elements (norm 1); pass false to scan all
    /// of GI(p)* — exhaustive, so slow for large p
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    unimodular_only: bool,
}

#[derive(Args)]
struct TransformCmd {
    #[command(flatten)]
    config: ConfigArgs,

    /// Input PGM image
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,

    /// Output PGM image (binary, maxval p−1)
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// Apply the inverse transform
    #[arg(long)]
    inverse: bool,

    /// Zero-pad to the next multiple of N; the original size is recorded
    /// as a comment in the output header
    #[arg(long)]
    pad: bool,

    /// Reduce samples mod p instead of requiring them to lie in GF(p)
    #[arg(long)]
    reduce: bool,
}

#[derive(Args)]
struct EmbedCmd {
    #[command(flatten)]
    config: ConfigArgs,

    /// Input PGM image
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,

    /// Watermark PGM; samples must lie in GF(p) unless --reduce is given
    #[arg(long, value_name = "FILE")]
    watermark: PathBuf,

    /// Output PGM image
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// How a watermark smaller than the image covers it
    #[arg(long, value_enum, default_value = "tile")]
    placement: PlacementArg,

    /// Reduce watermark samples mod p on ingestion
    #[arg(long)]
    reduce: bool,
}

#[derive(Args)]
struct ExtractCmd {
    #[command(flatten)]
    config: ConfigArgs,

    /// Marked or signature PGM
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,

    /// The original image the mark was embedded into
    #[arg(long, value_name = "FILE")]
    reference: PathBuf,

    /// Output PGM for the recovered watermark plane (maxval p−1)
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    config: ConfigArgs,

    /// Data image to authenticate
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,

    /// Signature PGM produced by `sign`
    #[arg(long, value_name = "FILE")]
    signature: PathBuf,

    /// Reference watermark PGM
    #[arg(long, value_name = "FILE")]
    watermark: PathBuf,

    /// Output PGM for the extracted watermark plane
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// Output PGM for the tamper mask (default: <out>-mask.pgm)
    #[arg(long, value_name = "FILE")]
    mask: Option<PathBuf>,

    /// How a watermark smaller than the image covers it
    #[arg(long, value_enum, default_value = "tile")]
    placement: PlacementArg,

    /// Reduce watermark samples mod p on ingestion
    #[arg(long)]
    reduce: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["bernoulli", "pixel"])))]
struct TamperCmd {
    /// Input PGM image
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,

    /// Output PGM image (same dimensions and maxval)
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// Corrupt each pixel independently with this probability
    #[arg(long, value_name = "PROB", requires = "seed")]
    bernoulli: Option<f64>,

    /// RNG seed for --bernoulli, required so runs are reproducible
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,

    /// Corrupt the single pixel at column X, row Y
    #[arg(long, value_name = "X,Y", value_parser = parse_coords)]
    pixel: Option<(usize, usize)>,

    /// Amount added to each corrupted pixel, wrapping modulo maxval+1
    #[arg(long, default_value_t = 1)]
    delta: u32,
}

#[derive(Args)]
struct PsnrCmd {
    /// First image
    a: PathBuf,

    /// Second image
    b: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::FindZeta(args) => cmd_find_zeta(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Embed(args) | Command::Sign(args) => cmd_embed(args),
        Command::Extract(args) => cmd_extract(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Tamper(args) => cmd_tamper(args),
        Command::Psnr(args) => cmd_psnr(args),
    }
}

fn cmd_find_zeta(args: &FindZetaCmd) -> Result<ExitCode> {
    let field = PrimeField::new(args.p)?;
    if args.unimodular_only {
        for zeta in find_unimodular_zeta(field, args.order) {
            println!("{zeta}");
        }
    } else {
        for re in 0..i64::from(args.p) {
            for im in 0..i64::from(args.p) {
                let z = GaussianInt::new(field, re, im);
                if !z.is_zero() && z.multiplicative_order()? == args.order {
                    println!("{z}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_transform(args: &TransformCmd) -> Result<ExitCode> {
    let cfg = args.config.build()?;
    let mut image = load_image(&args.input)?;
    if args.reduce {
        image = reduce_image(&image, cfg.field());
    }
    let original = (image.width(), image.height());
    if args.pad {
        image = pad_to_multiple(&image, cfg.blocklength(), 0)?;
    }
    let direction = if args.inverse {
        Direction::Inverse
    } else {
        Direction::Forward
    };
    let out = blockwise_transform(&image, &cfg, direction)?;
    let note;
    let mut comments = Vec::new();
    if (out.width(), out.height()) != original {
        note = format!("original-size {} {}", original.0, original.1);
        comments.push(note.as_str());
    }
    let bytes = encode_pgm_with_comments(&out, PgmFormat::Binary, &comments)?;
    std::fs::write(&args.out, bytes).with_context(|| format!("writing {}", args.out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_embed(args: &EmbedCmd) -> Result<ExitCode> {
    let cfg = args.config.build()?;
    let image = load_image(&args.input)?;
    let watermark = load_watermark(&args.watermark, cfg.field(), args.reduce)?;
    let signed = embed(&image, &watermark, &cfg, args.placement.into())?;
    save_image(&args.out, &with_file_maxval(&signed)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_extract(args: &ExtractCmd) -> Result<ExitCode> {
    let cfg = args.config.build()?;
    let marked = load_image(&args.input)?;
    let original = load_image(&args.reference)?;
    let recovered = extract(&original, &marked, &cfg)?;
    save_image(&args.out, &recovered.to_gray())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyCmd) -> Result<ExitCode> {
    let cfg = args.config.build()?;
    let data = load_image(&args.input)?;
    let signature = load_image(&args.signature)?;
    let watermark = load_watermark(&args.watermark, cfg.field(), args.reduce)?;
    let (extracted, map) = authenticate(&data, &signature, &watermark, &cfg, args.placement.into())?;
    save_image(&args.out, &extracted.to_gray())?;
    let mask_path = args
        .mask
        .clone()
        .unwrap_or_else(|| default_mask_path(&args.out));
    save_image(&mask_path, &map.to_mask_image())?;
    if map.any_tampered() {
        println!("TAMPERED: {} block(s)", map.tampered_count());
        Ok(ExitCode::from(1))
    } else {
        println!("CLEAN");
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_tamper(args: &TamperCmd) -> Result<ExitCode> {
    let mut image = load_image(&args.input)?;
    let wrap = u64::from(image.maxval()) + 1;
    let delta = u64::from(args.delta) % wrap;
    if delta == 0 {
        bail!("--delta {} is a no-op modulo maxval+1 = {wrap}", args.delta);
    }
    let bump = |v: u32| ((u64::from(v) + delta) % wrap) as u32;
    let mut changed = 0usize;
    if let Some(probability) = args.bernoulli {
        if !(probability > 0.0 && probability <= 1.0) {
            bail!("--bernoulli must lie in (0, 1], got {probability}");
        }
        let seed = args.seed.expect("clap enforces --seed with --bernoulli");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for y in 0..image.height() {
            for x in 0..image.width() {
                if rng.random_bool(probability) {
                    image.set(x, y, bump(image.get(x, y)));
                    changed += 1;
                }
            }
        }
    } else {
        let (x, y) = args.pixel.expect("clap enforces one tamper mode");
        if x >= image.width() || y >= image.height() {
            bail!(
                "pixel ({x},{y}) is outside the {}x{} image",
                image.width(),
                image.height()
            );
        }
        image.set(x, y, bump(image.get(x, y)));
        changed = 1;
    }
    save_image(&args.out, &image)?;
    println!("tampered {changed} pixel(s)");
    Ok(ExitCode::SUCCESS)
}

fn cmd_psnr(args: &PsnrCmd) -> Result<ExitCode> {
    let a = load_image(&args.a)?;
    let b = load_image(&args.b)?;
    println!("{}", psnr(&a, &b)?);
    Ok(ExitCode::SUCCESS)
}

fn load_image(path: &Path) -> Result<GrayImage> {
    read_pgm(path).with_context(|| format!("reading {}", path.display()))
}

fn save_image(path: &Path, image: &GrayImage) -> Result<()> {
    write_pgm(path, image, PgmFormat::Binary)
        .with_context(|| format!("writing {}", path.display()))
}

fn load_watermark(path: &Path, field: PrimeField, reduce: bool) -> Result<WatermarkImage> {
    let image = load_image(path)?;
    if reduce {
        Ok(WatermarkImage::from_image_reduced(field, &image))
    } else {
        WatermarkImage::from_image(field, &image)
            .with_context(|| format!("loading watermark {}", path.display()))
    }
}

fn reduce_image(image: &GrayImage, field: PrimeField) -> GrayImage {
    let p = field.modulus();
    GrayImage::new(
        image.width(),
        image.height(),
        p - 1,
        image.pixels().iter().map(|&v| v % p).collect(),
    )
    .expect("reduced samples fit maxval p-1")
}

/// Rebuilds an image with a standard file maxval: 255 when every sample
/// is a byte, 65535 otherwise. Samples are never clamped.
fn with_file_maxval(image: &GrayImage) -> Result<GrayImage> {
    let max = image.pixels().iter().copied().max().unwrap_or(0);
    let maxval = if max <= 255 { 255 } else { 65535 };
    Ok(GrayImage::new(
        image.width(),
        image.height(),
        maxval,
        image.pixels().to_vec(),
    )?)
}

fn default_mask_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_owned());
    out.with_file_name(format!("{stem}-mask.pgm"))
}

fn parse_coords(s: &str) -> Result<(usize, usize), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected X,Y — got {s:?}"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad coordinate {t:?}: {e}"))
    };
    Ok((parse(x)?, parse(y)?))
}
