//! Finite-field trigonometric transforms and fragile image watermarking.
//!
//! The crate builds up in layers:
//!
//! 1. [`field`] — arithmetic in GF(p) for primes p ≡ 3 (mod 4), p < 2¹⁵.
//! 2. [`gaussian`] — Gaussian integers over GF(p), a model of GF(p²),
//!    with order computation and unimodular-element search.
//! 3. [`trig`] — cosine/sine/cas tables generated by a unimodular ζ.
//! 4. [`transform`] — FFCT/FFHT/FFFT in one and two dimensions.
//! 5. [`blockwise`] — applying a 2-D transform block-by-block to images.
//! 6. [`watermark`] — fragile spectral watermark embedding, extraction,
//!    signing and tamper localization, plus PSNR measurement.
//!
//! [`image`] holds the grayscale image type and its PGM (P2/P5) codec.

pub mod blockwise;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod image;
pub mod transform;
pub mod trig;
pub mod watermark;

pub use blockwise::{blockwise_transform, pad_to_multiple, BlockGrid, Direction};
pub use error::{Error, Result};
pub use field::{PrimeField, MAX_MODULUS};
pub use gaussian::{find_unimodular_zeta, GaussianInt};
pub use image::{
    decode_pgm, encode_pgm, encode_pgm_with_comments, read_pgm, write_pgm, GrayImage, PgmFormat,
};
pub use transform::{SquareMatrix, TransformKind, TransformMatrix, ZetaConfig};
pub use trig::TrigTable;
pub use watermark::{
    authenticate, embed, expand_watermark, extract, psnr, residue_decompose, sign,
    Placement, Psnr, ResidueDecomposition, TamperMap, WatermarkImage,
};
