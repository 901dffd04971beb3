use super::*;
use crate::corpus::{general_points, twisted_cubic};
use crate::field::PrimeField;
use crate::poly::{LinearForm, Polynomial, Ring};
use alloc::vec;

fn field() -> PrimeField {
    PrimeField::default()
}

fn monomial_ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

fn twisted_cubic_gin() -> MonomialIdeal {
    monomial_ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 2, 0, 0]])
}

#[test]
fn gin_of_borel_ideal_is_itself() {
    let m = monomial_ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
    assert!(m.is_borel_fixed());
    let ring = Ring::new(field(), 3).unwrap();
    let gens = m.generators().iter().map(|g| Polynomial::from_terms(ring, [(crate::Elem::ONE, *g)]).unwrap());
    let ideal = Ideal::new(ring, gens.collect()).unwrap();
    let cfg = GinConfig::new(3, 5).unwrap();
    let r = gin(&ideal, &cfg).unwrap();
    assert!(r.agreed);
    assert_eq!(r.gin, m);
}

#[test]
fn gin_of_linear_form() {
    let ring = Ring::new(field(), 4).unwrap();
    let h = LinearForm::from_ints(ring, &[3, -1, 4, 1]).unwrap();
    let r = gin(&Ideal::new(ring, vec![h.to_polynomial()]).unwrap(), &GinConfig::default()).unwrap();
    assert_eq!(r.gin, monomial_ideal(4, &[&[1, 0, 0, 0]]));
}

#[test]
fn gin_of_twisted_cubic() {
    let tc = twisted_cubic(field()).unwrap();
    let r = gin(&tc, &GinConfig::new(7, 2).unwrap()).unwrap();
    assert!(r.agreed);
    assert_eq!(r.samples_used, 2);
    assert_eq!(r.gin, twisted_cubic_gin());
}

#[test]
fn gin_rejects_unit_and_single_vote() {
    let ring = Ring::new(field(), 3).unwrap();
    assert!(matches!(gin(&Ideal::unit(ring), &GinConfig::default()), Err(Error::UnitIdeal)));
    assert!(GinConfig::new(0, 1).is_err());
}

#[test]
fn twisted_cubic_invariants() {
    let tc = twisted_cubic(field()).unwrap();
    let inv = variety_invariants(&tc, &GinConfig::default()).unwrap();
    assert_eq!((inv.s_z, inv.s_gamma), (2, 2));
    for e in &inv.table.entries {
        assert_eq!(e.profile.lambdas, vec![2, 1]);
    }
    let report = connectedness_report(&inv);
    assert!(report.hypothesis && report.connected && report.low_levels_connected);
}

#[test]
fn five_points_profile() {
    let (ideal, pts) = general_points(field(), 5, 11).unwrap();
    assert_eq!(pts.len(), 5);
    let inv = variety_invariants(&ideal, &GinConfig::default()).unwrap();
    assert_eq!(inv.table.entries.len(), 1);
    assert_eq!(inv.table.entries[0].profile.lambdas, vec![3, 2]);
    assert_eq!(inv.s_z, 2);
}

#[test]
fn unsaturated_input_is_rejected() {
    let ring = Ring::new(field(), 3).unwrap();
    let m = |e: &[u32]| Polynomial::from_coeffs(ring, [(1, e)]).unwrap();
    let i = Ideal::new(ring, vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 2])]).unwrap();
    assert!(matches!(variety_invariants(&i, &GinConfig::default()), Err(Error::NotSaturated)));
}

#[test]
fn slice_identity_on_twisted_cubic() {
    let tc = twisted_cubic(field()).unwrap();
    let report = verify_slice_identity(&tc, &twisted_cubic_gin(), 2, 3, &GinConfig::default()).unwrap();
    assert_eq!(report.checks.len(), 8);
    assert!(report.all_equal());
    let p0 = &report.checks[0];
    assert_eq!(p0.rhs, twisted_cubic_gin().restrict_last().unwrap());
}

#[test]
fn gap_truncation_bounds() {
    let tc = twisted_cubic(field()).unwrap();
    let g = twisted_cubic_gin();
    let cfg = GinConfig::default();
    let below = gap_check(&tc, &g, 1, &cfg).unwrap();
    assert!(below.equal && below.lhs.is_zero());
    let above = gap_check(&tc, &g, 3, &cfg).unwrap();
    assert!(above.equal && above.lhs == g);
    assert!(verify_gap_truncation(&tc, &g, &cfg).unwrap().vacuous());
}

#[test]
fn twisted_cubic_trace() {
    let tc = twisted_cubic(field()).unwrap();
    let t = proof_trace(&tc, &twisted_cubic_gin(), &MultiIndex(vec![0]), 3, &GinConfig::default()).unwrap();
    assert!(t.step1_ok);
    assert_eq!(t.gin_j, monomial_ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    assert!(!t.delta_internal);
    assert_eq!(t.delta, 3);
    assert_eq!((t.f_degree, t.expected_f_degree), (0, 0));
    assert!(t.ok());
}

#[test]
fn gcd_examples() {
    let ring = Ring::new(field(), 2).unwrap();
    let p = |t: &[(i64, &[u32])]| Polynomial::from_coeffs(ring, t.iter().copied()).unwrap();
    let f = p(&[(2, &[2, 1]), (-2, &[1, 2])]);
    assert_eq!(gcd_two_vars(&[f.clone(), f.clone()]).unwrap(), f.monic());
    assert_eq!(gcd_two_vars(&[p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])]).unwrap(), ring.one());
    let a = p(&[(1, &[2, 1]), (-1, &[1, 2])]);
    let b = p(&[(1, &[3, 0]), (-1, &[1, 2])]);
    assert_eq!(gcd_two_vars(&[a, b]).unwrap(), p(&[(1, &[2, 0]), (-1, &[1, 1])]));
    let c = p(&[(1, &[3, 0]), (1, &[2, 1])]);
    let d = p(&[(1, &[2, 2])]);
    assert_eq!(gcd_two_vars(&[c, d]).unwrap(), p(&[(1, &[2, 0])]));
    assert!(matches!(gcd_two_vars(&[Polynomial::zero(ring)]), Err(Error::ZeroPolynomial)));
}

#[test]
fn synthetic_violation() {
    let m = monomial_ideal(2, &[&[3, 0], &[2, 1], &[1, 6], &[0, 8]]);
    let profile = m.staircase().unwrap();
    assert_eq!(profile.lambdas, vec![8, 6, 1]);
    let v = crate::monomial_ideal::is_connected(&profile).unwrap_err();
    assert_eq!(v.index, 1);
}

#[test]
fn determinism() {
    let tc = twisted_cubic(field()).unwrap();
    let cfg = GinConfig::new(42, 3).unwrap();
    assert_eq!(gin(&tc, &cfg).unwrap(), gin(&tc, &cfg).unwrap());
}
