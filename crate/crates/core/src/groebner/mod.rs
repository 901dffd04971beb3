//! Homogeneous ideals, reduced Gröbner bases in revlex, and the ideal
//! operations built on them: quotients, saturation, intersection,
//! restriction and truncation.

mod buchberger;
mod hilbert;
mod ops;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{LinearChange, Polynomial, Ring, Term};

pub use hilbert::{for_each_monomial, hilbert_function, monomials_of_degree, HilbertFunction};

pub(crate) use buchberger::{groebner_basis, reduce_full};

/// A homogeneous ideal given by generators, with a lazily computed and
/// cached reduced Gröbner basis.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceBox<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(Box::new(b.clone()));
        }
        Ideal { ring: self.ring, gens: self.gens.clone(), gb }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("nvars", &self.ring.nvars()).field("gens", &self.gens).finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Two ideals are equal when their reduced Gröbner bases coincide.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Builds an ideal from a nonempty generator list. Zero generators are
    /// dropped.
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        for g in &gens {
            ring.check(&g.ring())?;
        }
        Ok(Ideal { ring, gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), gb: OnceBox::new() })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal { ring, gens: Vec::new(), gb: OnceBox::new() }
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal { ring, gens: alloc::vec![ring.one()], gb: OnceBox::new() }
    }

    pub(crate) fn from_basis(ring: Ring, basis: Vec<Polynomial>) -> Self {
        let gb = OnceBox::new();
        let _ = gb.set(Box::new(basis.clone()));
        Ideal { ring, gens: basis, gb }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when the cached basis has already been computed.
    pub fn has_cached_basis(&self) -> bool {
        self.gb.get().is_some()
    }

    /// The reduced Gröbner basis: monic, auto-reduced, sorted by degree and
    /// then by descending initial monomial.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| Box::new(buchberger(self)))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.degree() == Some(0))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Normal form of `f` with respect to the reduced Gröbner basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&f.ring())?;
        let basis: Vec<&[Term]> = self.groebner_basis().iter().map(|g| g.terms()).collect();
        let field = self.ring.field();
        Ok(Polynomial::from_sorted(self.ring, reduce_full(f.terms(), &basis, field, MonomialOrder::Revlex)))
    }

    /// `in(I)`: minimal generators are the initial monomials of the reduced
    /// Gröbner basis.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }

    pub fn apply_change(&self, g: &LinearChange) -> Result<Ideal> {
        let gens = self.gens.iter().map(|f| f.apply_change(g)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: self.ring, gens, gb: OnceBox::new() })
    }

    /// Largest generator degree, `None` for the zero ideal.
    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    /// A minimal homogeneous generating set, sorted by degree.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        ops::minimalize(self.ring, self.groebner_basis().to_vec())
    }
}

/// Remainder of `f` on division by the list `divisors`, which need not be a
/// Gröbner basis nor monic.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        f.ring().check(&g.ring())?;
    }
    let refs: Vec<&[Term]> = divisors.iter().map(|g| g.terms()).collect();
    let field = f.ring().field();
    let r = buchberger::reduce_general(f.terms(), &refs, field, MonomialOrder::Revlex);
    Ok(Polynomial::from_sorted(f.ring(), r))
}

/// Reduced Gröbner basis of `I` in revlex.
pub fn buchberger(ideal: &Ideal) -> Vec<Polynomial> {
    basis_up_to(ideal, None)
}

/// Gröbner basis correct in all degrees `<= bound`.
pub(crate) fn basis_up_to(ideal: &Ideal, bound: Option<u32>) -> Vec<Polynomial> {
    let gens: Vec<Vec<Term>> = ideal.gens.iter().map(|g| g.terms().to_vec()).collect();
    groebner_basis(&gens, ideal.ring.field(), MonomialOrder::Revlex, bound)
        .into_iter()
        .map(|t| Polynomial::from_sorted(ideal.ring, t))
        .collect()
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let terms: Vec<Vec<Term>> = basis.iter().map(|g| g.terms().to_vec()).collect();
    buchberger::is_groebner(&terms, first.ring().field(), MonomialOrder::Revlex)
}

pub fn initial_ideal(ideal: &Ideal) -> MonomialIdeal {
    let gens = ideal.groebner_basis().iter().map(|g| g.terms()[0].mono).collect();
    MonomialIdeal::new(ideal.ring.nvars(), gens).expect("basis lives in the ideal's ring")
}

pub use ops::{ideal_quotient, intersect, quotient_by_power, restrict_ideal, saturate, truncate};
