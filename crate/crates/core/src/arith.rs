//! Exact arithmetic in the residue rings `Z/p^k`.
//!
//! Every backend stores matrix entries as least non-negative residues in a
//! machine word `T`. Products are formed in `u128` and reduced, so any word
//! type wide enough to hold `p^k` works.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{NumCast, PrimInt, ToPrimitive, Unsigned};

use crate::error::{CategoryError, Result};

/// Unsigned machine word used to store residues.
pub trait Residue: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static {
    fn to_wide(self) -> u128 {
        ToPrimitive::to_u128(&self).expect("unsigned word fits in u128")
    }

    fn from_wide(x: u128) -> Self {
        <Self as NumCast>::from(x).expect("reduced residue fits in word")
    }

    fn from_u64(x: u64) -> Option<Self> {
        <Self as NumCast>::from(x)
    }
}

impl<T> Residue for T where T: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static {}

/// Trial-division primality check; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The ring `Z/p^k` with `p` prime and `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRing<T> {
    p: T,
    k: u32,
    q: T,
}

impl<T: Residue> ResidueRing<T> {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(CategoryError::InvalidParameters(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(CategoryError::InvalidParameters("exponent bound k must be at least 1".into()));
        }
        let q = p
            .checked_pow(k)
            .and_then(T::from_u64)
            .ok_or_else(|| CategoryError::InvalidParameters(format!("{p}^{k} does not fit the residue word")))?;
        Ok(Self { p: T::from_u64(p).unwrap(), k, q })
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The modulus `p^k`.
    pub fn modulus(&self) -> T {
        self.q
    }

    /// `p^e` as a residue; `e >= k` yields 0.
    pub fn p_pow(&self, e: u32) -> T {
        if e >= self.k {
            T::zero()
        } else {
            self.p.pow(e)
        }
    }

    /// `p^e` as an integer, for `e <= k`.
    pub fn p_pow_exact(&self, e: u32) -> T {
        debug_assert!(e <= self.k);
        self.p.pow(e)
    }

    pub fn reduce(&self, x: T) -> T {
        x % self.q
    }

    pub fn reduce_i64(&self, x: i64) -> T {
        let q = self.q.to_wide() as i128;
        T::from_wide((x as i128).rem_euclid(q) as u128)
    }

    pub fn add(&self, a: T, b: T) -> T {
        T::from_wide((a.to_wide() + b.to_wide()) % self.q.to_wide())
    }

    pub fn neg(&self, a: T) -> T {
        if a.is_zero() {
            a
        } else {
            self.q - a
        }
    }

    pub fn sub(&self, a: T, b: T) -> T {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: T, b: T) -> T {
        T::from_wide((a.to_wide() * b.to_wide()) % self.q.to_wide())
    }

    /// p-adic valuation, with `valuation(0) = k`.
    pub fn valuation(&self, a: T) -> u32 {
        let mut a = self.reduce(a);
        if a.is_zero() {
            return self.k;
        }
        let mut v = 0;
        while (a % self.p).is_zero() {
            a = a / self.p;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, a: T) -> bool {
        !(self.reduce(a) % self.p).is_zero()
    }

    /// Inverse of a unit by extended Euclid against `p^k`.
    pub fn inverse(&self, a: T) -> Option<T> {
        if !self.is_unit(a) {
            return None;
        }
        let (mut r0, mut r1) = (self.q.to_wide() as i128, self.reduce(a).to_wide() as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(T::from_wide(t0.rem_euclid(self.q.to_wide() as i128) as u128))
    }

    /// Splits a nonzero `a` as `p^v * u` with `u` a unit; returns `(v, u)`.
    pub fn split(&self, a: T) -> (u32, T) {
        let v = self.valuation(a);
        (v, self.reduce(a) / self.p.pow(v))
    }

    /// Exact division `a / p^e` of a residue with valuation at least `e`.
    pub fn div_p_pow(&self, a: T, e: u32) -> T {
        debug_assert!(self.valuation(a) >= e);
        self.reduce(a) / self.p.pow(e)
    }

    /// Least non-negative residue of `a` modulo `p^e`.
    pub fn reduce_to(&self, a: T, e: u32) -> T {
        if e >= self.k {
            self.reduce(a)
        } else {
            a % self.p.pow(e)
        }
    }
}
