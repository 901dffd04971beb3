use proptest::prelude::*;

use monoinv::parse::{parse_generators, parse_polynomial, render_generators};
use monoinv_core::{Monomial, Polynomial, PrimeField, Ring};

fn field() -> PrimeField {
    PrimeField::default()
}

/// Homogeneous polynomials with up to eight random terms.
fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    (1usize..=6, 0u32..=5).prop_flat_map(|(n, d)| {
        let term = (proptest::collection::vec(0u32..=d, n - 1), 0u32..32003);
        proptest::collection::vec(term, 0..8).prop_map(move |terms| {
            let r = Ring::new(field(), n).unwrap();
            let terms = terms.into_iter().filter_map(|(head, c)| {
                // spread `d` over the variables, remainder on the last one
                let mut e = Vec::with_capacity(n);
                let mut left = d;
                for h in head {
                    let take = h.min(left);
                    e.push(take);
                    left -= take;
                }
                e.push(left);
                Some((field().elem(c), Monomial::new(&e).ok()?))
            });
            Polynomial::from_terms(r, terms).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_then_parse_is_identity(f in poly_strategy()) {
        prop_assume!(!f.is_zero());
        let n = f.ring().nvars();
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, field(), n).unwrap(), f);
    }

    #[test]
    fn generator_lists_round_trip(fs in proptest::collection::vec(poly_strategy(), 1..4)) {
        let n = fs[0].ring().nvars();
        let fs: Vec<Polynomial> = fs.into_iter().filter(|f| f.ring().nvars() == n && !f.is_zero()).collect();
        prop_assume!(!fs.is_empty());
        let text = render_generators(&fs);
        prop_assert_eq!(parse_generators(&text, field(), n).unwrap(), fs.clone());
        let commas = fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ");
        prop_assert_eq!(parse_generators(&commas, field(), n).unwrap(), fs);
    }
}
