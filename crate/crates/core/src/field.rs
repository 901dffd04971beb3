//! Prime fields `F_p` with `p < 2^31`.

use core::fmt;

use crate::error::{Error, Result};

/// Default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u32 = 32003;

/// A residue `0 <= value < p`. The modulus lives in the [`PrimeField`] that
/// produced the element; mixing elements of different fields is a logic error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn elem(self, v: u32) -> Elem {
        Elem(v % self.p)
    }

    /// Maps a signed integer literal into the field.
    pub fn from_i64(self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u32)
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for rendering.
    pub fn signed(self, a: Elem) -> i64 {
        let v = a.0 as i64;
        if v > (self.p / 2) as i64 {
            v - self.p as i64
        } else {
            v
        }
    }

    #[inline]
    pub fn add(self, a: Elem, b: Elem) -> Elem {
        let s = a.0 + b.0;
        Elem(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(self, a: Elem, b: Elem) -> Elem {
        Elem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(self, a: Elem) -> Elem {
        Elem(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(self, a: Elem, b: Elem) -> Elem {
        Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.from_i64(t0))
    }

    #[inline]
    pub fn div(self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }
}

/// Deterministic primality test for 32-bit integers (trial division).
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        for v in 1..101 {
            let a = f.elem(v);
            assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        }
        assert_eq!(f.inv(Elem::ZERO), None);
    }

    #[test]
    fn signed_representative() {
        let f = PrimeField::default();
        assert_eq!(f.signed(f.from_i64(-3)), -3);
        assert_eq!(f.signed(f.from_i64(7)), 7);
    }
}
