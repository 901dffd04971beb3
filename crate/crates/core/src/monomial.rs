//! Exponent vectors and the monomial orders used by the crate.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Largest supported number of variables, including any auxiliary
/// elimination variable.
pub const MAX_VARS: usize = 12;

/// A monomial `x_0^{p_0} ... x_{n}^{p_n}` stored inline.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
    deg: u32,
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exponents().hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `x0^2*x1`; the unit monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_nvars(nvars: usize) -> Result<()> {
    if nvars > MAX_VARS {
        Err(Error::TooManyVariables { requested: nvars, max: MAX_VARS })
    } else {
        Ok(())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Result<Self> {
        check_nvars(nvars)?;
        Ok(Monomial { exps: [0; MAX_VARS], len: nvars as u8, deg: 0 })
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        check_nvars(exps.len())?;
        let mut m = Monomial { exps: [0; MAX_VARS], len: exps.len() as u8, deg: 0 };
        for (i, &e) in exps.iter().enumerate() {
            if e > u16::MAX as u32 {
                return Err(Error::InvalidArgument("exponent exceeds 65535"));
            }
            m.exps[i] = e as u16;
            m.deg += e;
        }
        Ok(m)
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars });
        }
        let mut m = Monomial::one(nvars)?;
        m.exps[i] = 1;
        m.deg = 1;
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Returns a copy with the exponent of `x_i` replaced.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u32 + e;
        m.exps[i] = e as u16;
        m
    }

    /// Variables `i` with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    fn same_ring(&self, other: &Monomial) -> Result<()> {
        if self.len != other.len {
            Err(Error::RingMismatch { expected: self.len as usize, found: other.len as usize })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.len as usize {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.len == other.len
            && self.deg <= other.deg
            && (0..self.len as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    #[inline]
    pub(crate) fn div_unchecked(&self, divisor: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.len as usize {
            m.exps[i] -= divisor.exps[i];
        }
        m.deg -= divisor.deg;
        m
    }

    /// `self / divisor`, which must divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.same_ring(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(self.div_unchecked(divisor))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip(other, core::cmp::min))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip(other, core::cmp::max))
    }

    #[inline]
    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        self.zip(other, core::cmp::max)
    }

    #[inline]
    fn zip(&self, other: &Monomial, op: fn(u16, u16) -> u16) -> Monomial {
        let mut m = *self;
        m.deg = 0;
        for i in 0..self.len as usize {
            m.exps[i] = op(self.exps[i], other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    /// True when the two monomials share no variable.
    pub(crate) fn coprime(&self, other: &Monomial) -> bool {
        (0..self.len as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Drops variable `i`; callers ensure its exponent is zero or irrelevant.
    pub(crate) fn remove_var(&self, i: usize) -> Monomial {
        let n = self.len as usize;
        let mut m = Monomial { exps: [0; MAX_VARS], len: self.len - 1, deg: 0 };
        let mut k = 0;
        for j in 0..n {
            if j != i {
                m.exps[k] = self.exps[j];
                m.deg += self.exps[j] as u32;
                k += 1;
            }
        }
        m
    }

    /// Appends a trailing variable with exponent `e`.
    pub(crate) fn push_var(&self, e: u32) -> Monomial {
        let mut m = *self;
        m.exps[m.len as usize] = e as u16;
        m.len += 1;
        m.deg += e;
        m
    }
}

/// Reverse lexicographic comparison with the crate's convention: a monomial
/// of lower degree is the greater one; at equal degree the exponents are
/// scanned from the last variable downward and the monomial with the
/// *smaller* exponent at the first difference is greater.
pub fn revlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    a.same_ring(b)?;
    Ok(revlex(a, b))
}

#[inline]
pub(crate) fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    if a.deg != b.deg {
        return b.deg.cmp(&a.deg);
    }
    revlex_tail(a, b, a.len as usize)
}

#[inline]
fn revlex_tail(a: &Monomial, b: &Monomial, upto: usize) -> Ordering {
    for k in (0..upto).rev() {
        if a.exps[k] != b.exps[k] {
            return b.exps[k].cmp(&a.exps[k]);
        }
    }
    Ordering::Equal
}

/// Term orders available to the Gröbner machinery. Public polynomials are
/// always sorted in [`MonomialOrder::Revlex`]; the elimination order is only
/// used internally for intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Revlex,
    /// Block order eliminating the last variable `t`: higher `t`-power is
    /// greater, ties broken by graded reverse lexicographic order on the
    /// remaining variables. `t` carries weight zero in the grading.
    EliminateLast,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Revlex => revlex(a, b),
            MonomialOrder::EliminateLast => {
                let n = a.len as usize;
                let (ta, tb) = (a.exps[n - 1], b.exps[n - 1]);
                if ta != tb {
                    return ta.cmp(&tb);
                }
                let (da, db) = (a.deg - ta as u32, b.deg - tb as u32);
                if da != db {
                    return da.cmp(&db);
                }
                revlex_tail(a, b, n - 1)
            }
        }
    }

    /// Degree used for grading under this order.
    #[inline]
    pub fn weight(self, m: &Monomial) -> u32 {
        match self {
            MonomialOrder::Revlex => m.deg,
            MonomialOrder::EliminateLast => m.deg - m.exps[m.len as usize - 1] as u32,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec::Vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn revlex_examples() {
        // x0^2 vs x0*x1 in three variables
        assert_eq!(revlex_cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Greater);
        let a = m(&[1, 2, 3]);
        assert_eq!(revlex_cmp(&a, &a).unwrap(), Ordering::Equal);
        // lower degree is greater
        assert_eq!(revlex_cmp(&m(&[1]), &m(&[2])).unwrap(), Ordering::Greater);
        assert!(revlex_cmp(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.gcd(&b).unwrap(), m(&[1, 1]));
        assert_eq!(a.lcm(&b).unwrap(), m(&[2, 3]));
        assert_eq!(a.lcm(&Monomial::one(2).unwrap()).unwrap(), a);
        assert!(!m(&[1, 0, 1]).divides(&m(&[2, 0, 0])));
        assert_eq!(a.mul(&b).unwrap(), m(&[3, 4]));
        assert_eq!(m(&[3, 4]).div(&b).unwrap(), a);
        assert!(matches!(a.div(&b), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn rendering() {
        assert_eq!(format!("{}", m(&[2, 1, 0])), "x0^2*x1");
        assert_eq!(format!("{}", m(&[0, 0])), "1");
    }

    #[test]
    fn too_many_variables() {
        let v: Vec<u32> = (0..13).collect();
        assert!(matches!(Monomial::new(&v), Err(Error::TooManyVariables { .. })));
    }

    #[test]
    fn elimination_order_prefers_t() {
        let o = MonomialOrder::EliminateLast;
        // x0^5 < t*x1 since t dominates
        assert_eq!(o.cmp(&m(&[5, 0, 0]), &m(&[0, 1, 1])), Ordering::Less);
        assert_eq!(o.weight(&m(&[0, 1, 3])), 1);
    }
}
