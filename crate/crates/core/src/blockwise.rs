//! Block-by-block 2-D transforms over whole images.
//!
//! An image is cut into N×N tiles (N = the configuration's blocklength),
//! each tile is pushed through the 2-D transform independently, and the
//! tiles are stitched back together. Both directions map into the field's
//! canonical range, so the result always fits maxval p−1.

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::transform::{SquareMatrix, ZetaConfig};

/// Which way a blockwise transform runs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Inverse,
}

/// An image cut into square tiles, row-major by (block row, block column).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockGrid {
    block_size: usize,
    blocks_x: usize,
    blocks_y: usize,
    blocks: Vec<SquareMatrix>,
}

impl BlockGrid {
    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks_x(&self) -> usize {
        self.blocks_x
    }

    pub fn blocks_y(&self) -> usize {
        self.blocks_y
    }

    pub fn blocks(&self) -> &[SquareMatrix] {
        &self.blocks
    }

    pub fn block(&self, by: usize, bx: usize) -> &SquareMatrix {
        assert!(by < self.blocks_y && bx < self.blocks_x, "block out of bounds");
        &self.blocks[by * self.blocks_x + bx]
    }

    pub fn block_mut(&mut self, by: usize, bx: usize) -> &mut SquareMatrix {
        assert!(by < self.blocks_y && bx < self.blocks_x, "block out of bounds");
        &mut self.blocks[by * self.blocks_x + bx]
    }
}

/// Cuts an image into N×N tiles. Both dimensions must be multiples of N.
pub fn split_blocks(image: &GrayImage, n: usize) -> Result<BlockGrid> {
    if n == 0 || !image.width().is_multiple_of(n) || !image.height().is_multiple_of(n) {
        return Err(Error::IndivisibleDimensions {
            width: image.width(),
            height: image.height(),
            n,
        });
    }
    let blocks_x = image.width() / n;
    let blocks_y = image.height() / n;
    let mut blocks = Vec::with_capacity(blocks_x * blocks_y);
    for by in 0..blocks_y {
        for bx in 0..blocks_x {
            let mut m = SquareMatrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, image.get(bx * n + j, by * n + i));
                }
            }
            blocks.push(m);
        }
    }
    Ok(BlockGrid {
        block_size: n,
        blocks_x,
        blocks_y,
        blocks,
    })
}

/// Stitches a grid back into an image with the given maxval.
pub fn reassemble(grid: &BlockGrid, maxval: u32) -> Result<GrayImage> {
    let n = grid.block_size;
    let width = grid.blocks_x * n;
    let height = grid.blocks_y * n;
    let mut pixels = vec![0u32; width * height];
    for by in 0..grid.blocks_y {
        for bx in 0..grid.blocks_x {
            let m = grid.block(by, bx);
            for i in 0..n {
                for j in 0..n {
                    pixels[(by * n + i) * width + bx * n + j] = m.get(i, j);
                }
            }
        }
    }
    GrayImage::new(width, height, maxval, pixels)
}

/// Transforms every N×N tile of `image` with the configuration's 2-D
/// kernel. Every sample must already lie in GF(p).
pub fn blockwise_transform(
    image: &GrayImage,
    cfg: &ZetaConfig,
    direction: Direction,
) -> Result<GrayImage> {
    let p = cfg.field().modulus();
    for y in 0..image.height() {
        for x in 0..image.width() {
            let value = image.get(x, y);
            if value >= p {
                return Err(Error::PixelOutOfField { x, y, value, p });
            }
        }
    }
    let mut grid = split_blocks(image, cfg.blocklength())?;
    let matrices = cfg.matrices()?;
    for block in &mut grid.blocks {
        *block = match direction {
            Direction::Forward => matrices.forward_2d(block)?,
            Direction::Inverse => matrices.inverse_2d(block)?,
        };
    }
    reassemble(&grid, p - 1)
}

/// Pads an image on the right and bottom with `fill` until both
/// dimensions are multiples of `n`. Returns a clone if nothing is needed.
pub fn pad_to_multiple(image: &GrayImage, n: usize, fill: u32) -> Result<GrayImage> {
    assert!(n > 0, "block size must be positive");
    let width = image.width().div_ceil(n) * n;
    let height = image.height().div_ceil(n) * n;
    if width == image.width() && height == image.height() {
        return Ok(image.clone());
    }
    let mut pixels = vec![fill; width * height];
    for y in 0..image.height() {
        for x in 0..image.width() {
            pixels[y * width + x] = image.get(x, y);
        }
    }
    GrayImage::new(width, height, image.maxval().max(fill), pixels)
}
