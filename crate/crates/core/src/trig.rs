//! Finite-field trigonometry.
//!
//! For a unimodular ζ ∈ GI(p) of multiplicative order N, define
//!
//! ```text
//! cos(i) = (ζ^i + ζ^-i) / 2      sin(i) = (ζ^i - ζ^-i) / 2j
//! cas(i) = cos(i) + sin(i)
//! ```
//!
//! Because ζ is unimodular, ζ^-i is the conjugate of ζ^i, so these
//! "trigonometric" values are simply the real and imaginary parts of ζ^i —
//! all of them base-field elements. A [`TrigTable`] materializes one full
//! period of them; the transforms then index it in O(1).

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::gaussian::GaussianInt;

/// One period of cos/sin/cas values for a fixed unimodular ζ.
#[derive(Clone, Debug)]
pub struct TrigTable {
    zeta: GaussianInt,
    order: u32,
    cos: Vec<u32>,
    sin: Vec<u32>,
    cas: Vec<u32>,
}

impl TrigTable {
    /// Computes the table for `zeta`, which must be unimodular (otherwise
    /// the cosine and sine would not be base-field values).
    ///
    /// The powers are accumulated by repeated multiplication — one Gaussian
    /// multiply per entry, no inversions.
    pub fn build(zeta: GaussianInt) -> Result<Self> {
        if !zeta.is_unimodular() {
            return Err(Error::NotUnimodular {
                value: zeta.to_string(),
                p: zeta.field().modulus(),
                norm: zeta.norm(),
            });
        }
        let order = zeta
            .multiplicative_order()
            .expect("unimodular elements are nonzero");
        let f = zeta.field();
        let mut cos = Vec::with_capacity(order as usize);
        let mut sin = Vec::with_capacity(order as usize);
        let mut cas = Vec::with_capacity(order as usize);
        let mut acc = GaussianInt::one(f);
        for _ in 0..order {
            cos.push(acc.re());
            sin.push(acc.im());
            cas.push(f.add(acc.re(), acc.im()));
            acc = acc * zeta;
        }
        Ok(TrigTable { zeta, order, cos, sin, cas })
    }

    pub fn zeta(&self) -> GaussianInt {
        self.zeta
    }

    /// Table length; equals the multiplicative order of ζ.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn field(&self) -> PrimeField {
        self.zeta.field()
    }

    pub fn cos_values(&self) -> &[u32] {
        &self.cos
    }

    pub fn sin_values(&self) -> &[u32] {
        &self.sin
    }

    pub fn cas_values(&self) -> &[u32] {
        &self.cas
    }

    /// Index reduced mod the period, so any integer argument is valid.
    fn reduce_index(&self, index: i64) -> usize {
        index.rem_euclid(self.order as i64) as usize
    }

    pub fn cos_at(&self, index: i64) -> u32 {
        self.cos[self.reduce_index(index)]
    }

    pub fn sin_at(&self, index: i64) -> u32 {
        self.sin[self.reduce_index(index)]
    }

    pub fn cas_at(&self, index: i64) -> u32 {
        self.cas[self.reduce_index(index)]
    }

    /// (cos, sin, cas) at an arbitrary integer index.
    pub fn at(&self, index: i64) -> (u32, u32, u32) {
        let i = self.reduce_index(index);
        (self.cos[i], self.sin[i], self.cas[i])
    }
}
