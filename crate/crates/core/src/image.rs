//! Grayscale images and a PGM (P2/P5) codec.
//!
//! The codec is deliberately small and strict: it reads the two portable
//! graymap flavors (ASCII `P2` and binary `P5`, with `#` comments in the
//! header), writes deterministic output, and round-trips every image
//! bit-exactly. Samples wider than 8 bits use the big-endian two-byte
//! encoding the format prescribes.

use std::path::Path;

use crate::error::{Error, Result};

/// Maximum sample value the PGM format can carry.
const PGM_MAX: u32 = 65535;

/// P2 sample lines are kept at or below this many characters.
const ASCII_LINE_LIMIT: usize = 70;

/// A grayscale image: row-major samples in `0..=maxval`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrayImage {
    width: usize,
    height: usize,
    maxval: u32,
    pixels: Vec<u32>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, maxval: u32, pixels: Vec<u32>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidImage(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if maxval == 0 {
            return Err(Error::InvalidImage("maxval must be at least 1".into()));
        }
        if pixels.len() != width * height {
            return Err(Error::InvalidImage(format!(
                "{width}x{height} image needs {} samples, got {}",
                width * height,
                pixels.len()
            )));
        }
        if let Some(&bad) = pixels.iter().find(|&&v| v > maxval) {
            return Err(Error::InvalidImage(format!(
                "sample {bad} exceeds maxval {maxval}"
            )));
        }
        Ok(GrayImage {
            width,
            height,
            maxval,
            pixels,
        })
    }

    pub fn constant(width: usize, height: usize, maxval: u32, value: u32) -> Result<Self> {
        GrayImage::new(width, height, maxval, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn maxval(&self) -> u32 {
        self.maxval
    }

    pub fn pixels(&self) -> &[u32] {
        &self.pixels
    }

    /// Sample at column `x`, row `y`.
    pub fn get(&self, x: usize, y: usize) -> u32 {
        assert!(x < self.width && y < self.height, "pixel out of bounds");
        self.pixels[y * self.width + x]
    }

    /// Overwrites the sample at column `x`, row `y`, growing `maxval` if
    /// the new value exceeds it.
    pub fn set(&mut self, x: usize, y: usize, value: u32) {
        assert!(x < self.width && y < self.height, "pixel out of bounds");
        self.pixels[y * self.width + x] = value;
        self.maxval = self.maxval.max(value);
    }
}

/// The two graymap flavors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PgmFormat {
    /// `P2`, ASCII decimal samples.
    Ascii,
    /// `P5`, binary samples (1 byte, or 2 big-endian bytes when
    /// maxval > 255).
    Binary,
}

/// Header tokenizer: whitespace-separated tokens, `#` starts a comment
/// that runs to the end of the line.
struct Tokens<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Tokens { bytes, pos: 0 }
    }

    fn skip_filler(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Result<&'a str> {
        self.skip_filler();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && !self.bytes[self.pos].is_ascii_whitespace()
            && self.bytes[self.pos] != b'#'
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::PgmParse("unexpected end of header".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| Error::PgmParse("non-ASCII bytes in header".into()))
    }

    fn next_number(&mut self, what: &str) -> Result<u64> {
        let tok = self.next_token()?;
        tok.parse()
            .map_err(|_| Error::PgmParse(format!("invalid {what}: {tok:?}")))
    }
}

/// Decodes a PGM byte stream (either flavor).
pub fn decode_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut tokens = Tokens::new(bytes);
    let magic = tokens.next_token()?;
    let format = match magic {
        "P2" => PgmFormat::Ascii,
        "P5" => PgmFormat::Binary,
        other => {
            return Err(Error::PgmParse(format!(
                "unsupported magic {other:?} (want P2 or P5)"
            )))
        }
    };
    let width = tokens.next_number("width")? as usize;
    let height = tokens.next_number("height")? as usize;
    let maxval64 = tokens.next_number("maxval")?;
    if maxval64 == 0 || maxval64 > PGM_MAX as u64 {
        return Err(Error::PgmParse(format!(
            "maxval {maxval64} outside 1..={PGM_MAX}"
        )));
    }
    let maxval = maxval64 as u32;
    let count = width
        .checked_mul(height)
        .ok_or_else(|| Error::PgmParse("image dimensions overflow".into()))?;
    let mut pixels = Vec::with_capacity(count);
    match format {
        PgmFormat::Ascii => {
            for _ in 0..count {
                let v = tokens.next_number("sample")?;
                if v > maxval as u64 {
                    return Err(Error::PgmParse(format!(
                        "sample {v} exceeds maxval {maxval}"
                    )));
                }
                pixels.push(v as u32);
            }
        }
        PgmFormat::Binary => {
            // Exactly one whitespace byte separates the header from the
            // raster.
            if tokens.pos >= bytes.len() || !bytes[tokens.pos].is_ascii_whitespace() {
                return Err(Error::PgmParse("missing separator before raster".into()));
            }
            let wide = maxval > 255;
            let start = tokens.pos + 1;
            let need = count * if wide { 2 } else { 1 };
            let data = bytes
                .get(start..start + need)
                .ok_or_else(|| Error::PgmParse("raster shorter than header promises".into()))?;
            if wide {
                for pair in data.chunks_exact(2) {
                    let v = u32::from(pair[0]) << 8 | u32::from(pair[1]);
                    if v > maxval {
                        return Err(Error::PgmParse(format!(
                            "sample {v} exceeds maxval {maxval}"
                        )));
                    }
                    pixels.push(v);
                }
            } else {
                for &b in data {
                    let v = u32::from(b);
                    if v > maxval {
                        return Err(Error::PgmParse(format!(
                            "sample {v} exceeds maxval {maxval}"
                        )));
                    }
                    pixels.push(v);
                }
            }
        }
    }
    GrayImage::new(width, height, maxval, pixels)
}

/// Encodes an image as PGM bytes. Fails if the samples are too wide for
/// the format.
pub fn encode_pgm(image: &GrayImage, format: PgmFormat) -> Result<Vec<u8>> {
    encode_pgm_with_comments(image, format, &[])
}

/// Like [`encode_pgm`], but writes each comment as a `#` header line
/// (single-line text only).
pub fn encode_pgm_with_comments(
    image: &GrayImage,
    format: PgmFormat,
    comments: &[&str],
) -> Result<Vec<u8>> {
    if image.maxval > PGM_MAX {
        return Err(Error::PgmUnrepresentable(image.maxval));
    }
    let mut out = Vec::new();
    let magic = match format {
        PgmFormat::Ascii => "P2",
        PgmFormat::Binary => "P5",
    };
    out.extend_from_slice(magic.as_bytes());
    out.push(b'\n');
    for comment in comments {
        assert!(
            !comment.contains(['\n', '\r']),
            "PGM comments must be single lines"
        );
        out.extend_from_slice(format!("# {comment}\n").as_bytes());
    }
    out.extend_from_slice(
        format!("{} {}\n{}\n", image.width, image.height, image.maxval).as_bytes(),
    );
    match format {
        PgmFormat::Ascii => {
            let mut line = String::new();
            for &v in &image.pixels {
                let sample = v.to_string();
                if !line.is_empty() && line.len() + 1 + sample.len() > ASCII_LINE_LIMIT {
                    line.push('\n');
                    out.extend_from_slice(line.as_bytes());
                    line.clear();
                }
                if !line.is_empty() {
                    line.push(' ');
                }
                line.push_str(&sample);
            }
            if !line.is_empty() {
                line.push('\n');
                out.extend_from_slice(line.as_bytes());
            }
        }
        PgmFormat::Binary => {
            if image.maxval > 255 {
                for &v in &image.pixels {
                    out.extend_from_slice(&(v as u16).to_be_bytes());
                }
            } else {
                out.extend(image.pixels.iter().map(|&v| v as u8));
            }
        }
    }
    Ok(out)
}

/// Reads a PGM file from disk.
pub fn read_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    decode_pgm(&std::fs::read(path)?)
}

/// Writes an image to disk in the requested flavor.
pub fn write_pgm(path: impl AsRef<Path>, image: &GrayImage, format: PgmFormat) -> Result<()> {
    std::fs::write(path, encode_pgm(image, format)?)?;
    Ok(())
}
