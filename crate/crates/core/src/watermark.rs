//! Fragile spectral watermarking and tamper localization.
//!
//! The pipeline works on the residue plane of an image: every sample
//! splits as `v = r + m` with `r = v mod p` and `m` a multiple of p. The
//! residue plane is transformed blockwise, the watermark is added to the
//! spectra, and the inverse transform plus the untouched multiples plane
//! yields the signed image. Because the transforms are bijective on
//! GF(p)^(N×N), changing any single pixel of a signed block changes that
//! block's extracted watermark — which is what makes the scheme fragile
//! and lets tampering be localized to blocks.

use std::fmt;

use crate::blockwise::{blockwise_transform, Direction};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::image::GrayImage;
use crate::transform::ZetaConfig;

/// An image split into its residue plane and its plane of multiples of p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueDecomposition {
    pub residue: GrayImage,
    pub multiples: GrayImage,
}

/// Splits `image` as residue + multiples with respect to `field`.
pub fn residue_decompose(image: &GrayImage, field: PrimeField) -> ResidueDecomposition {
    let p = field.modulus();
    let residue: Vec<u32> = image.pixels().iter().map(|&v| v % p).collect();
    let multiples: Vec<u32> = image.pixels().iter().map(|&v| v - v % p).collect();
    ResidueDecomposition {
        residue: GrayImage::new(image.width(), image.height(), p - 1, residue)
            .expect("residues fit maxval p-1"),
        multiples: GrayImage::new(
            image.width(),
            image.height(),
            image.maxval().max(1),
            multiples,
        )
        .expect("multiples fit the original maxval"),
    }
}

/// Pixel-wise sum of the two planes; inverts [`residue_decompose`].
pub fn recompose(residue: &GrayImage, multiples: &GrayImage) -> Result<GrayImage> {
    if residue.width() != multiples.width() || residue.height() != multiples.height() {
        return Err(Error::ShapeMismatch {
            expected_width: residue.width(),
            expected_height: residue.height(),
            width: multiples.width(),
            height: multiples.height(),
        });
    }
    let pixels: Vec<u32> = residue
        .pixels()
        .iter()
        .zip(multiples.pixels())
        .map(|(&r, &m)| r + m)
        .collect();
    let maxval = pixels.iter().copied().max().unwrap_or(0).max(1);
    GrayImage::new(residue.width(), residue.height(), maxval, pixels)
}

/// A plane of field elements used as watermark payload — like an image,
/// but with the invariant that every sample lies in GF(p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WatermarkImage {
    width: usize,
    height: usize,
    field: PrimeField,
    pixels: Vec<u32>,
}

impl WatermarkImage {
    pub fn new(field: PrimeField, width: usize, height: usize, pixels: Vec<u32>) -> Result<Self> {
        if width == 0 || height == 0 || pixels.len() != width * height {
            return Err(Error::InvalidImage(format!(
                "watermark plane {width}x{height} with {} samples",
                pixels.len()
            )));
        }
        for (idx, &value) in pixels.iter().enumerate() {
            if !field.contains(value) {
                return Err(Error::WatermarkOutOfField {
                    x: idx % width,
                    y: idx / width,
                    value,
                    p: field.modulus(),
                });
            }
        }
        Ok(WatermarkImage {
            width,
            height,
            field,
            pixels,
        })
    }

    /// Adopts an image whose samples must already lie in the field.
    pub fn from_image(field: PrimeField, image: &GrayImage) -> Result<Self> {
        WatermarkImage::new(field, image.width(), image.height(), image.pixels().to_vec())
    }

    /// Adopts any image by reducing samples mod p.
    pub fn from_image_reduced(field: PrimeField, image: &GrayImage) -> Self {
        let p = field.modulus();
        WatermarkImage {
            width: image.width(),
            height: image.height(),
            field,
            pixels: image.pixels().iter().map(|&v| v % p).collect(),
        }
    }

    pub fn to_gray(&self) -> GrayImage {
        GrayImage::new(
            self.width,
            self.height,
            self.field.modulus() - 1,
            self.pixels.clone(),
        )
        .expect("watermark samples fit maxval p-1")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn pixels(&self) -> &[u32] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        assert!(x < self.width && y < self.height, "pixel out of bounds");
        self.pixels[y * self.width + x]
    }
}

/// How a watermark smaller than the image is laid out over it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Placement {
    /// Repeat the watermark periodically in both directions.
    Tile,
    /// Put the watermark at the origin and pad the rest with zeros.
    TopLeft,
}

/// Lays a watermark out over a `width` × `height` plane.
pub fn expand_watermark(
    watermark: &WatermarkImage,
    placement: Placement,
    width: usize,
    height: usize,
) -> Result<WatermarkImage> {
    if placement == Placement::TopLeft
        && (watermark.width > width || watermark.height > height)
    {
        return Err(Error::ShapeMismatch {
            expected_width: width,
            expected_height: height,
            width: watermark.width,
            height: watermark.height,
        });
    }
    let mut pixels = vec![0u32; width * height];
    match placement {
        Placement::Tile => {
            for y in 0..height {
                for x in 0..width {
                    pixels[y * width + x] =
                        watermark.get(x % watermark.width, y % watermark.height);
                }
            }
        }
        Placement::TopLeft => {
            for y in 0..watermark.height {
                for x in 0..watermark.width {
                    pixels[y * width + x] = watermark.get(x, y);
                }
            }
        }
    }
    WatermarkImage::new(watermark.field, width, height, pixels)
}

/// Embeds `watermark` into `image` in the blockwise spectral domain.
///
/// The multiples plane passes through untouched, so samples ≥ p survive
/// and an all-zero watermark returns the image unchanged.
pub fn embed(
    image: &GrayImage,
    watermark: &WatermarkImage,
    cfg: &ZetaConfig,
    placement: Placement,
) -> Result<GrayImage> {
    let field = cfg.field();
    if watermark.field != field {
        return Err(Error::FieldMismatch {
            left: field.modulus(),
            right: watermark.field.modulus(),
        });
    }
    let plane = expand_watermark(watermark, placement, image.width(), image.height())?;
    let parts = residue_decompose(image, field);
    let spectrum = blockwise_transform(&parts.residue, cfg, Direction::Forward)?;
    let marked: Vec<u32> = spectrum
        .pixels()
        .iter()
        .zip(plane.pixels())
        .map(|(&s, &w)| field.add(s, w))
        .collect();
    let marked =
        GrayImage::new(image.width(), image.height(), field.modulus() - 1, marked)?;
    let residue = blockwise_transform(&marked, cfg, Direction::Inverse)?;
    recompose(&residue, &parts.multiples)
}

/// Recovers the watermark plane as the spectral difference between a
/// marked image and the original.
pub fn extract(
    original: &GrayImage,
    marked: &GrayImage,
    cfg: &ZetaConfig,
) -> Result<WatermarkImage> {
    if original.width() != marked.width() || original.height() != marked.height() {
        return Err(Error::ShapeMismatch {
            expected_width: original.width(),
            expected_height: original.height(),
            width: marked.width(),
            height: marked.height(),
        });
    }
    let field = cfg.field();
    let spectrum_original = blockwise_transform(
        &residue_decompose(original, field).residue,
        cfg,
        Direction::Forward,
    )?;
    let spectrum_marked = blockwise_transform(
        &residue_decompose(marked, field).residue,
        cfg,
        Direction::Forward,
    )?;
    let pixels: Vec<u32> = spectrum_marked
        .pixels()
        .iter()
        .zip(spectrum_original.pixels())
        .map(|(&m, &o)| field.sub(m, o))
        .collect();
    WatermarkImage::new(field, original.width(), original.height(), pixels)
}

/// Signs an image: embeds the watermark and returns the signature image.
/// The signature plays the role of a keyed checksum — authentication
/// later compares what it carries against the expected watermark.
pub fn sign(
    image: &GrayImage,
    watermark: &WatermarkImage,
    cfg: &ZetaConfig,
    placement: Placement,
) -> Result<GrayImage> {
    embed(image, watermark, cfg, placement)
}

/// Per-block verdicts from [`authenticate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TamperMap {
    block_size: usize,
    blocks_x: usize,
    blocks_y: usize,
    flags: Vec<bool>,
}

impl TamperMap {
    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks_x(&self) -> usize {
        self.blocks_x
    }

    pub fn blocks_y(&self) -> usize {
        self.blocks_y
    }

    pub fn is_flagged(&self, by: usize, bx: usize) -> bool {
        assert!(by < self.blocks_y && bx < self.blocks_x, "block out of bounds");
        self.flags[by * self.blocks_x + bx]
    }

    pub fn any_tampered(&self) -> bool {
        self.flags.iter().any(|&f| f)
    }

    pub fn tampered_count(&self) -> usize {
        self.flags.iter().filter(|&&f| f).count()
    }

    /// Flagged block coordinates as (block row, block column), in raster
    /// order.
    pub fn flagged_blocks(&self) -> Vec<(usize, usize)> {
        self.flags
            .iter()
            .enumerate()
            .filter(|&(_, &f)| f)
            .map(|(i, _)| (i / self.blocks_x, i % self.blocks_x))
            .collect()
    }

    /// Full-resolution mask: 255 over flagged blocks, 0 elsewhere.
    pub fn to_mask_image(&self) -> GrayImage {
        let width = self.blocks_x * self.block_size;
        let height = self.blocks_y * self.block_size;
        let mut pixels = vec![0u32; width * height];
        for by in 0..self.blocks_y {
            for bx in 0..self.blocks_x {
                if self.is_flagged(by, bx) {
                    for i in 0..self.block_size {
                        for j in 0..self.block_size {
                            pixels[(by * self.block_size + i) * width
                                + bx * self.block_size
                                + j] = 255;
                        }
                    }
                }
            }
        }
        GrayImage::new(width, height, 255, pixels).expect("mask dimensions are valid")
    }
}

/// Checks a (data, signature) pair against the expected watermark.
///
/// Returns the extracted watermark plane and a per-block map of where it
/// disagrees with the expected plane. A change to any single sample of
/// either image flags exactly the blocks it touches.
pub fn authenticate(
    data: &GrayImage,
    signature: &GrayImage,
    watermark: &WatermarkImage,
    cfg: &ZetaConfig,
    placement: Placement,
) -> Result<(WatermarkImage, TamperMap)> {
    let extracted = extract(data, signature, cfg)?;
    let expected = expand_watermark(watermark, placement, data.width(), data.height())?;
    let n = cfg.blocklength();
    let blocks_x = data.width() / n;
    let blocks_y = data.height() / n;
    let mut flags = vec![false; blocks_x * blocks_y];
    for y in 0..data.height() {
        for x in 0..data.width() {
            if extracted.get(x, y) != expected.get(x, y) {
                flags[(y / n) * blocks_x + x / n] = true;
            }
        }
    }
    Ok((
        extracted,
        TamperMap {
            block_size: n,
            blocks_x,
            blocks_y,
            flags,
        },
    ))
}

/// Peak signal-to-noise ratio against the fixed 8-bit peak of 255.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Psnr {
    /// The images are identical.
    Infinite,
    Decibels(f64),
}

impl fmt::Display for Psnr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Psnr::Infinite => f.write_str("inf"),
            Psnr::Decibels(db) => write!(f, "{db:.4}"),
        }
    }
}

pub fn psnr(a: &GrayImage, b: &GrayImage) -> Result<Psnr> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(Error::ShapeMismatch {
            expected_width: a.width(),
            expected_height: a.height(),
            width: b.width(),
            height: b.height(),
        });
    }
    let sum: u64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(&x, &y)| {
            let d = i64::from(x) - i64::from(y);
            (d * d) as u64
        })
        .sum();
    if sum == 0 {
        return Ok(Psnr::Infinite);
    }
    let mse = sum as f64 / (a.width() * a.height()) as f64;
    Ok(Psnr::Decibels(10.0 * (255.0 * 255.0 / mse).log10()))
}
