use hopf_planar::scalars::{parse_rational, rational, render};
use hopf_planar::{DeltaSign, Field, QuadraticScalar, ScalarError};
use num_traits::{One, Zero};
use proptest::prelude::*;

type S = QuadraticScalar;

fn arb(n: u64) -> impl Strategy<Value = S> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
        .prop_map(move |(a, b, c, d)| S::new(rational(a, b), rational(c, d), n).unwrap())
}

proptest! {
    #[test]
    fn field_laws(x in arb(6), y in arb(6), z in arb(6)) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() - x.clone(), S::zero());
    }

    #[test]
    fn inverse_is_exact(x in arb(2)) {
        match x.try_inv() {
            Ok(inv) => prop_assert_eq!(x * inv, S::one()),
            Err(e) => {
                prop_assert!(x.is_zero());
                prop_assert_eq!(e, ScalarError::DivisionByZero);
            }
        }
    }

    #[test]
    fn record_roundtrip(x in arb(3)) {
        prop_assert_eq!(S::from_record(&x.to_record(), 3).unwrap(), x);
    }
}

#[test]
fn delta_squares_to_dimension() {
    for n in [2u64, 3, 6] {
        let d = S::make_delta(n, DeltaSign::Plus).unwrap();
        assert_eq!(d.square(), S::from_i64(n as i64));
        let m = S::make_delta(n, DeltaSign::Minus).unwrap();
        assert_eq!(m, -d);
    }
    // Perfect squares collapse to rationals.
    let four = S::make_delta(4, DeltaSign::Plus).unwrap();
    assert!(four.is_rational());
    assert_eq!(four, S::from_i64(2));
}

#[test]
fn rendering_and_parsing() {
    let d = S::make_delta(2, DeltaSign::Plus).unwrap();
    assert_eq!(render(&d), "0 + 1·δ");
    assert_eq!(parse_rational("-3/6").unwrap(), rational(-1, 2));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
    assert_eq!(S::make_delta(0, DeltaSign::Plus), Err(ScalarError::ZeroDimension));
}
