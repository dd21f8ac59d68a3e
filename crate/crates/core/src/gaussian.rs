//! Gaussian integers over GF(p): values a + bj with j² = -1.
//!
//! For p ≡ 3 (mod 4) these form the field GI(p) ≅ GF(p²). The elements of
//! interest here are the *unimodular* ones — norm a² + b² ≡ 1 — which make
//! up a cyclic subgroup of order p + 1 and play the role the unit circle
//! plays over the reals: the finite-field cosine and sine of
//! [`crate::trig`] are literally the real and imaginary parts of powers of
//! a unimodular element.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Largest modulus for which the multiplicative order is found by plain
/// linear search. Above this, the order is derived from the factorization
/// of the group size instead.
const LINEAR_ORDER_SEARCH_MAX_P: u32 = 31;

/// An element a + bj of GI(p), stored in canonical form (both components
/// in `[0, p)`) together with its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GaussianInt {
    re: u32,
    im: u32,
    field: PrimeField,
}

impl GaussianInt {
    /// Builds an element, reducing both components into canonical range.
    pub fn new(field: PrimeField, re: i64, im: i64) -> Self {
        GaussianInt {
            re: field.reduce_i64(re),
            im: field.reduce_i64(im),
            field,
        }
    }

    pub fn zero(field: PrimeField) -> Self {
        GaussianInt { re: 0, im: 0, field }
    }

    pub fn one(field: PrimeField) -> Self {
        GaussianInt { re: 1, im: 0, field }
    }

    pub fn re(&self) -> u32 {
        self.re
    }

    pub fn im(&self) -> u32 {
        self.im
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// True if the element lies in the base field GF(p).
    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    /// The conjugate a - bj.
    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re,
            im: self.field.neg(self.im),
            field: self.field,
        }
    }

    /// The norm n(a + bj) = a² + b² (mod p). Multiplicative, and zero
    /// exactly for the zero element since -1 is a non-residue.
    pub fn norm(&self) -> u32 {
        let f = self.field;
        f.add(f.mul(self.re, self.re), f.mul(self.im, self.im))
    }

    /// Unimodular means lying on the finite-field unit circle: norm 1.
    pub fn is_unimodular(&self) -> bool {
        self.norm() == 1
    }

    /// Multiplication that reports mixed moduli instead of panicking.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: rhs.field.modulus(),
            });
        }
        Ok(self.mul_raw(rhs))
    }

    /// (a + bj)(c + dj) = (ac - bd) + (ad + bc)j. Callers guarantee equal
    /// fields.
    fn mul_raw(&self, rhs: &Self) -> Self {
        let f = self.field;
        GaussianInt {
            re: f.sub(f.mul(self.re, rhs.re), f.mul(self.im, rhs.im)),
            im: f.add(f.mul(self.re, rhs.im), f.mul(self.im, rhs.re)),
            field: f,
        }
    }

    /// Multiplicative inverse: conj(x) / norm(x).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let norm_inv = self.field.inv(self.norm())?;
        let c = self.conj();
        Ok(GaussianInt {
            re: self.field.mul(c.re, norm_inv),
            im: self.field.mul(c.im, norm_inv),
            field: self.field,
        })
    }

    /// Binary exponentiation; `pow(0) = 1` for every element.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = GaussianInt::one(self.field);
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            base = base.mul_raw(&base);
            exp >>= 1;
        }
        acc
    }

    /// The least k ≥ 1 with x^k = 1.
    ///
    /// The order always divides p² - 1 (and p - 1 for real elements), so
    /// for larger moduli it is found by factoring that group size and
    /// stripping prime factors. Tiny moduli just scan: the group has at
    /// most p² - 1 ≤ 960 elements there and the scan doubles as the
    /// obviously-correct path.
    pub fn multiplicative_order(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroOrder);
        }
        let p = self.field.modulus() as u64;
        if self.field.modulus() <= LINEAR_ORDER_SEARCH_MAX_P {
            let one = GaussianInt::one(self.field);
            let mut acc = *self;
            let mut k = 1u32;
            while acc != one {
                acc = acc.mul_raw(self);
                k += 1;
            }
            return Ok(k);
        }
        // Group size containing this element's order.
        let group = if self.is_real() { p - 1 } else { p * p - 1 };
        let mut order = group;
        for q in distinct_prime_factors(group) {
            while order % q == 0 && self.pow(order / q) == GaussianInt::one(self.field) {
                order /= q;
            }
        }
        Ok(order as u32)
    }

    /// Parses the `a+bj` notation used throughout the CLI: `"5"`, `"j"`,
    /// `"2j"`, `"-j"`, `"2+5j"`, `"2-5j"`. Components may be any integers;
    /// they are reduced into canonical range.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::ZetaParse(s.to_string());
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('j') else {
            // Purely real.
            let re: i64 = t.parse().map_err(|_| err())?;
            return Ok(GaussianInt::new(field, re, 0));
        };
        // Split off the real part, if any: the last '+'/'-' not at the
        // start separates it from the imaginary coefficient.
        let split = body
            .bytes()
            .enumerate()
            .skip(1)
            .rfind(|&(_, c)| c == b'+' || c == b'-')
            .map(|(i, _)| i);
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re: i64 = if re_str.is_empty() {
            0
        } else {
            re_str.parse().map_err(|_| err())?
        };
        let im: i64 = match im_str {
            "" | "+" => 1,
            "-" => -1,
            _ => im_str.parse().map_err(|_| err())?,
        };
        Ok(GaussianInt::new(field, re, im))
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        assert_eq!(self.field, rhs.field, "mixed moduli in Gaussian addition");
        GaussianInt {
            re: self.field.add(self.re, rhs.re),
            im: self.field.add(self.im, rhs.im),
            field: self.field,
        }
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        assert_eq!(self.field, rhs.field, "mixed moduli in Gaussian subtraction");
        GaussianInt {
            re: self.field.sub(self.re, rhs.re),
            im: self.field.sub(self.im, rhs.im),
            field: self.field,
        }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        assert_eq!(self.field, rhs.field, "mixed moduli in Gaussian multiplication");
        self.mul_raw(&rhs)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "j"),
            (0, im) => write!(f, "{im}j"),
            (re, 1) => write!(f, "{re}+j"),
            (re, im) => write!(f, "{re}+{im}j"),
        }
    }
}

/// Distinct prime factors by trial division; n stays below 2³⁰ here.
fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Every unimodular element of GI(p) with the requested multiplicative
/// order, in ascending lexicographic (re, im) order. The result is empty
/// when no such element exists (i.e. when `order` does not divide p + 1).
///
/// Rather than scanning all p² elements, this walks re = a upward and
/// reads the at-most-two square roots of 1 - a² from a precomputed table,
/// which visits exactly the norm-1 elements while preserving scan order.
pub fn find_unimodular_zeta(field: PrimeField, order: u32) -> Vec<GaussianInt> {
    let p = field.modulus();
    let mut roots: Vec<Vec<u32>> = vec![Vec::new(); p as usize];
    for b in 0..p {
        roots[field.mul(b, b) as usize].push(b);
    }
    let mut out = Vec::new();
    for a in 0..p {
        let rhs = field.sub(1, field.mul(a, a));
        for &b in &roots[rhs as usize] {
            let x = GaussianInt { re: a, im: b, field };
            debug_assert!(x.is_unimodular());
            if x.multiplicative_order().expect("norm-1 element is nonzero") == order {
                out.push(x);
            }
        }
    }
    out
}
