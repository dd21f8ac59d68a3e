//! Number-theoretic transforms built on finite-field trigonometry.
//!
//! Three kernels share one configuration type:
//!
//! * **FFCT** — finite-field cosine transform. Needs a unimodular ζ of
//!   order 4N for blocklength N:
//!   `V_k = 2 Σ_i v_i cos((2i+1)k)`, inverted by
//!   `v_i = N⁻¹ Σ_k a_k V_k cos((2i+1)k)` with `a_0 = 2⁻¹`, `a_k = 1`.
//! * **FFHT** — finite-field Hartley transform. Needs a unimodular ζ of
//!   order N: `V_k = Σ_i v_i cas(ik)`, self-inverse up to the factor N.
//! * **FFFT** — finite-field Fourier transform with a real kernel. Needs
//!   ζ ∈ GF(p) of order N: `V_k = Σ_i v_i ζ^(ik)`.
//!
//! All three extend to two dimensions. Cosine and Fourier are separable
//! (`M·D·Mᵀ`); the Hartley kernel `cas(ik + jl)` is not, and is computed
//! from the separable product `H·D·H` by combining four reflected copies
//! of that temporary matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::gaussian::GaussianInt;
use crate::trig::TrigTable;

/// Which transform kernel a configuration drives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TransformKind {
    Ffct,
    Ffht,
    Ffft,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::Ffct => "FFCT",
            TransformKind::Ffht => "FFHT",
            TransformKind::Ffft => "FFFT",
        })
    }
}

/// Kind-specific precomputed kernel data.
#[derive(Clone, Debug)]
enum Kernel {
    /// Trig table of length 4N plus the auxiliary inverse weights
    /// (a_0 = 2⁻¹, a_k = 1 otherwise).
    Ffct { trig: TrigTable, aux: Vec<u32> },
    /// Trig table of length N.
    Ffht { trig: TrigTable },
    /// ζ^0 .. ζ^(N-1) for the real kernel.
    Ffft { pows: Vec<u32> },
}

/// A validated (field, ζ, kind, blocklength) tuple with its kernel tables.
///
/// Construction proves that ζ has exactly the order the kind demands, so
/// everything downstream can index tables without rechecking.
#[derive(Clone, Debug)]
pub struct ZetaConfig {
    field: PrimeField,
    zeta: GaussianInt,
    kind: TransformKind,
    blocklength: usize,
    n_inv: u32,
    kernel: Kernel,
}

impl ZetaConfig {
    pub fn new(
        field: PrimeField,
        zeta: GaussianInt,
        kind: TransformKind,
        blocklength: usize,
    ) -> Result<Self> {
        if zeta.field() != field {
            return Err(Error::FieldMismatch {
                left: field.modulus(),
                right: zeta.field().modulus(),
            });
        }
        if blocklength < 2 {
            return Err(Error::DegenerateBlocklength(blocklength));
        }
        let p = field.modulus();
        if blocklength.is_multiple_of(p as usize) {
            return Err(Error::BlocklengthDivisibleByP { n: blocklength, p });
        }
        let order_of = |z: GaussianInt| z.multiplicative_order();
        let expect_order = |z: GaussianInt, expected: u64| -> Result<()> {
            let found = order_of(z)? as u64;
            if found != expected {
                return Err(Error::OrderMismatch {
                    expected: expected as u32,
                    found: found as u32,
                });
            }
            Ok(())
        };
        let kernel = match kind {
            TransformKind::Ffct => {
                // TrigTable::build rejects non-unimodular ζ.
                let trig = TrigTable::build(zeta)?;
                expect_order(zeta, 4 * blocklength as u64)?;
                let mut aux = vec![1u32; blocklength];
                aux[0] = field.inv(2)?;
                Kernel::Ffct { trig, aux }
            }
            TransformKind::Ffht => {
                let trig = TrigTable::build(zeta)?;
                expect_order(zeta, blocklength as u64)?;
                Kernel::Ffht { trig }
            }
            TransformKind::Ffft => {
                if !zeta.is_real() {
                    return Err(Error::NotReal);
                }
                if zeta.is_zero() {
                    return Err(Error::ZeroOrder);
                }
                expect_order(zeta, blocklength as u64)?;
                let mut pows = Vec::with_capacity(blocklength);
                let mut acc = 1u32;
                for _ in 0..blocklength {
                    pows.push(acc);
                    acc = field.mul(acc, zeta.re());
                }
                Kernel::Ffft { pows }
            }
        };
        let n_inv = field.inv(blocklength as u32 % p)?;
        Ok(ZetaConfig {
            field,
            zeta,
            kind,
            blocklength,
            n_inv,
            kernel,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn zeta(&self) -> GaussianInt {
        self.zeta
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn blocklength(&self) -> usize {
        self.blocklength
    }

    /// N⁻¹ in GF(p).
    pub fn n_inv(&self) -> u32 {
        self.n_inv
    }

    /// Precomputed forward/inverse matrices for this configuration.
    pub fn matrices(&self) -> Result<TransformMatrix> {
        TransformMatrix::build(self)
    }

    fn check_length(&self, len: usize) -> Result<()> {
        if len != self.blocklength {
            return Err(Error::LengthMismatch {
                expected: self.blocklength,
                found: len,
            });
        }
        Ok(())
    }

    fn check_kind(&self, expected: TransformKind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::KindMismatch {
                expected,
                found: self.kind,
            });
        }
        Ok(())
    }

    fn debug_check_values(&self, v: &[u32]) {
        debug_assert!(
            v.iter().all(|&x| self.field.contains(x)),
            "transform input contains values outside GF({})",
            self.field.modulus()
        );
    }
}

/// Applies whichever kernel the configuration selects. Input values must
/// already be canonical residues.
pub fn forward(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_length(v.len())?;
    cfg.debug_check_values(v);
    let f = cfg.field;
    let n = cfg.blocklength;
    let p = f.modulus() as u64;
    let mut out = vec![0u32; n];
    match &cfg.kernel {
        Kernel::Ffct { trig, .. } => {
            for (k, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (i, &vi) in v.iter().enumerate() {
                    acc += vi as u64 * trig.cos_at(((2 * i + 1) * k) as i64) as u64;
                }
                *slot = f.mul(2, (acc % p) as u32);
            }
        }
        Kernel::Ffht { trig } => {
            for (k, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (i, &vi) in v.iter().enumerate() {
                    acc += vi as u64 * trig.cas_at((i * k) as i64) as u64;
                }
                *slot = (acc % p) as u32;
            }
        }
        Kernel::Ffft { pows } => {
            for (k, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (i, &vi) in v.iter().enumerate() {
                    acc += vi as u64 * pows[i * k % n] as u64;
                }
                *slot = (acc % p) as u32;
            }
        }
    }
    Ok(out)
}

/// Inverts [`forward`] exactly.
pub fn inverse(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_length(v.len())?;
    cfg.debug_check_values(v);
    let f = cfg.field;
    let n = cfg.blocklength;
    let p = f.modulus() as u64;
    let mut out = vec![0u32; n];
    match &cfg.kernel {
        Kernel::Ffct { trig, aux } => {
            for (i, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (k, &vk) in v.iter().enumerate() {
                    let term = f.mul(aux[k], vk);
                    acc += term as u64 * trig.cos_at(((2 * i + 1) * k) as i64) as u64;
                }
                *slot = f.mul(cfg.n_inv, (acc % p) as u32);
            }
        }
        Kernel::Ffht { trig } => {
            // The Hartley kernel is symmetric: the inverse is N⁻¹ times the
            // forward sum.
            for (i, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (k, &vk) in v.iter().enumerate() {
                    acc += vk as u64 * trig.cas_at((i * k) as i64) as u64;
                }
                *slot = f.mul(cfg.n_inv, (acc % p) as u32);
            }
        }
        Kernel::Ffft { pows } => {
            for (i, slot) in out.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (k, &vk) in v.iter().enumerate() {
                    acc += vk as u64 * pows[(n - i * k % n) % n] as u64;
                }
                *slot = f.mul(cfg.n_inv, (acc % p) as u32);
            }
        }
    }
    Ok(out)
}

/// Kind-checked wrappers: each insists the configuration actually is the
/// transform it names, so a cosine call can't silently run a Hartley
/// kernel someone passed by mistake.
pub fn ffct_forward(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffct)?;
    forward(v, cfg)
}

pub fn ffct_inverse(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffct)?;
    inverse(v, cfg)
}

pub fn ffht_forward(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffht)?;
    forward(v, cfg)
}

pub fn ffht_inverse(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffht)?;
    inverse(v, cfg)
}

pub fn ffft_forward(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffft)?;
    forward(v, cfg)
}

pub fn ffft_inverse(v: &[u32], cfg: &ZetaConfig) -> Result<Vec<u32>> {
    cfg.check_kind(TransformKind::Ffft)?;
    inverse(v, cfg)
}

/// A dense square matrix of field elements, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<u32>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![0; n * n] }
    }

    pub fn new(n: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u32) {
        self.data[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut out = SquareMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Matrix product over GF(p). Accumulates in u64 and reduces once per
    /// entry; exact for the supported modulus range.
    pub fn mul(&self, rhs: &Self, f: PrimeField) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let p = f.modulus() as u64;
        let mut out = SquareMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = 0u64;
                for k in 0..self.n {
                    acc += self.get(i, k) as u64 * rhs.get(k, j) as u64;
                }
                out.set(i, j, (acc % p) as u32);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    /// Every entry multiplied by a scalar.
    pub fn scale(&self, s: u32, f: PrimeField) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|&v| f.mul(s, v)).collect(),
        }
    }
}

/// Explicit forward/inverse transform matrices for one configuration.
///
/// Construction multiplies the two out and insists on the identity, so a
/// [`TransformMatrix`] that exists is guaranteed to round-trip. The 2-D
/// transforms live here because they reuse the matrices across many
/// blocks.
#[derive(Clone, Debug)]
pub struct TransformMatrix {
    kind: TransformKind,
    field: PrimeField,
    n: usize,
    n_inv: u32,
    half: u32,
    forward: SquareMatrix,
    forward_t: SquareMatrix,
    inverse: SquareMatrix,
    inverse_t: SquareMatrix,
}

impl TransformMatrix {
    /// Materializes the kernels of `cfg` as matrices. Row index is the
    /// output (spectral for forward, sample for inverse) index, so the 1-D
    /// transforms are plain matrix-vector products.
    pub fn build(cfg: &ZetaConfig) -> Result<Self> {
        let f = cfg.field;
        let n = cfg.blocklength;
        let mut fwd = SquareMatrix::zeros(n);
        let mut inv = SquareMatrix::zeros(n);
        match &cfg.kernel {
            Kernel::Ffct { trig, aux } => {
                for (k, &a) in aux.iter().enumerate() {
                    for i in 0..n {
                        let c = trig.cos_at(((2 * i + 1) * k) as i64);
                        fwd.set(k, i, f.mul(2, c));
                        inv.set(i, k, f.mul(f.mul(cfg.n_inv, a), c));
                    }
                }
            }
            Kernel::Ffht { trig } => {
                for k in 0..n {
                    for i in 0..n {
                        let c = trig.cas_at((i * k) as i64);
                        fwd.set(k, i, c);
                        inv.set(i, k, f.mul(cfg.n_inv, c));
                    }
                }
            }
            Kernel::Ffft { pows } => {
                for k in 0..n {
                    for i in 0..n {
                        let e = i * k % n;
                        fwd.set(k, i, pows[e]);
                        inv.set(i, k, f.mul(cfg.n_inv, pows[(n - e) % n]));
                    }
                }
            }
        }
        if !fwd.mul(&inv, f).is_identity() {
            return Err(Error::SingularMatrix);
        }
        Ok(TransformMatrix {
            kind: cfg.kind,
            field: f,
            n,
            n_inv: cfg.n_inv,
            half: f.inv(2)?,
            forward_t: fwd.transpose(),
            inverse_t: inv.transpose(),
            forward: fwd,
            inverse: inv,
        })
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forward_matrix(&self) -> &SquareMatrix {
        &self.forward
    }

    pub fn inverse_matrix(&self) -> &SquareMatrix {
        &self.inverse
    }

    fn check_shape(&self, d: &SquareMatrix) -> Result<()> {
        if d.n != self.n {
            return Err(Error::ShapeMismatch {
                expected_width: self.n,
                expected_height: self.n,
                width: d.n,
                height: d.n,
            });
        }
        Ok(())
    }

    /// 1-D transform as a matrix-vector product.
    pub fn apply_forward(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.mat_vec(&self.forward, v)
    }

    pub fn apply_inverse(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.mat_vec(&self.inverse, v)
    }

    fn mat_vec(&self, m: &SquareMatrix, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        let p = self.field.modulus() as u64;
        Ok((0..self.n)
            .map(|i| {
                let mut acc = 0u64;
                for (k, &vk) in v.iter().enumerate() {
                    acc += m.get(i, k) as u64 * vk as u64;
                }
                (acc % p) as u32
            })
            .collect())
    }

    /// 2-D forward transform of an N×N block.
    pub fn forward_2d(&self, d: &SquareMatrix) -> Result<SquareMatrix> {
        self.check_shape(d)?;
        Ok(match self.kind {
            // Separable kernels: M·D·Mᵀ.
            TransformKind::Ffct | TransformKind::Ffft => {
                self.forward.mul(d, self.field).mul(&self.forward_t, self.field)
            }
            TransformKind::Ffht => {
                let t = self.forward.mul(d, self.field).mul(&self.forward, self.field);
                self.hartley_combine(&t, self.half)
            }
        })
    }

    /// 2-D inverse transform of an N×N block.
    pub fn inverse_2d(&self, d: &SquareMatrix) -> Result<SquareMatrix> {
        self.check_shape(d)?;
        Ok(match self.kind {
            TransformKind::Ffct | TransformKind::Ffft => {
                self.inverse.mul(d, self.field).mul(&self.inverse_t, self.field)
            }
            TransformKind::Ffht => {
                // The 2-D Hartley operator squares to N²·I, so its inverse
                // is N⁻² times the forward operator.
                let t = self.forward.mul(d, self.field).mul(&self.forward, self.field);
                let scale = self.field.mul(self.half, self.field.mul(self.n_inv, self.n_inv));
                self.hartley_combine(&t, scale)
            }
        })
    }

    /// Combines the separable Hartley product T = H·D·H into the true 2-D
    /// kernel cas(ik + jl):
    ///
    /// ```text
    /// out(i,j) = scale · (t(i,j) + t(i,-j) + t(-i,j) - t(-i,-j))
    /// ```
    ///
    /// with the reflections taken mod N.
    fn hartley_combine(&self, t: &SquareMatrix, scale: u32) -> SquareMatrix {
        let f = self.field;
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            let ri = (n - i) % n;
            for j in 0..n {
                let rj = (n - j) % n;
                let mut s = f.add(t.get(i, j), t.get(i, rj));
                s = f.add(s, t.get(ri, j));
                s = f.sub(s, t.get(ri, rj));
                out.set(i, j, f.mul(scale, s));
            }
        }
        out
    }
}

/// Kind-checked 2-D wrappers, mirroring the 1-D ones. Each builds the
/// matrices on the fly; hot paths (blockwise processing) hold a
/// [`TransformMatrix`] instead and reuse it.
pub fn ffct_2d(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffct)?;
    cfg.matrices()?.forward_2d(d)
}

pub fn ffct_2d_inverse(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffct)?;
    cfg.matrices()?.inverse_2d(d)
}

pub fn ffht_2d(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffht)?;
    cfg.matrices()?.forward_2d(d)
}

pub fn ffht_2d_inverse(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffht)?;
    cfg.matrices()?.inverse_2d(d)
}

pub fn ffft_2d(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffft)?;
    cfg.matrices()?.forward_2d(d)
}

pub fn ffft_2d_inverse(d: &SquareMatrix, cfg: &ZetaConfig) -> Result<SquareMatrix> {
    cfg.check_kind(TransformKind::Ffft)?;
    cfg.matrices()?.inverse_2d(d)
}
