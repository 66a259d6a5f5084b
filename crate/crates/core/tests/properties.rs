use proptest::prelude::*;

use partseq::exact::{BigInt, Rational};
use partseq::partitions::{multiplicity, partitions};
use partseq::recurrence::{
    b_recursion, cauchy_product, evaluate, series_reciprocal, CoefficientSequence, MethodId,
    TruncatedSeries,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| Rational::ratio(n, d))
}

// Coefficients as drawn by the verification harness: numerator in [-9, 9],
// denominator in [1, 9].
fn small_coefficients(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=9), len).prop_map(|v| {
        std::iter::once(Rational::one())
            .chain(v.into_iter().map(|(n, d)| Rational::ratio(n, d)))
            .collect()
    })
}

proptest! {
    #[test]
    fn field_axioms(x in rational(), y in rational(), z in rational()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), Rational::zero());
        for v in [&x + &y, &x * &y, &x - &z, -&y] {
            prop_assert!(v.is_canonical());
        }
    }

    #[test]
    fn parse_inverts_format(x in rational(), big in "-?[1-9][0-9]{0,40}/[1-9][0-9]{0,40}") {
        prop_assert_eq!(Rational::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(Rational::parse(&x.to_canonical_string()).unwrap(), x);
        let y = Rational::parse(&big).unwrap();
        prop_assert!(y.is_canonical());
        prop_assert_eq!(Rational::parse(&y.to_string()).unwrap(), y);
    }

    #[test]
    fn all_methods_match_recursion(coeffs in small_coefficients(9), n in 1usize..=9) {
        let a = CoefficientSequence::from_coefficients("prop", coeffs).unwrap();
        let want = b_recursion(&a, n).unwrap();
        for m in MethodId::ALL {
            prop_assert_eq!(&evaluate(&a, n, m, 26).unwrap().value, &want, "method {}", m);
        }
    }

    #[test]
    fn reciprocal_series_convolves_to_delta(coeffs in small_coefficients(12)) {
        let a = CoefficientSequence::from_coefficients("prop", coeffs).unwrap();
        let b = series_reciprocal(&a, 12).unwrap();
        let product = cauchy_product(&TruncatedSeries::of(&a, 12).unwrap(), &b, 12).unwrap();
        prop_assert!(product.is_delta());
        for (k, c) in b.coefficients().iter().enumerate() {
            prop_assert_eq!(c, &b_recursion(&a, k).unwrap());
        }
    }

    // With every a_i > 0, the partition term for p has sign (-1)^l(p).
    #[test]
    fn partition_terms_alternate_by_length(
        positives in prop::collection::vec((1i64..=9, 1i64..=9), 8),
        n in 1usize..=8,
    ) {
        let a: Vec<Rational> = positives.iter().map(|&(x, y)| Rational::ratio(x, y)).collect();
        for p in partitions(n).unwrap() {
            let term: Rational = p.parts().iter().map(|&k| -&a[k - 1]).product();
            let term = term.mul_int(&multiplicity(&p));
            prop_assert_eq!(term.is_negative(), p.len() % 2 == 1);
        }
    }
}

#[test]
fn composition_term_count_matches_power_of_two() {
    let a = CoefficientSequence::from_rule("ones", |_| Rational::one()).unwrap();
    for n in 1..=18 {
        let e = evaluate(&a, n, MethodId::Composition, 26).unwrap();
        assert_eq!(e.terms, 1u128 << (n - 1));
        // 1/(1 + x + x^2 + ...) = 1 - x
        let want = if n == 1 { Rational::from(-1) } else { Rational::zero() };
        assert_eq!(e.value, want);
    }
}

#[test]
fn factorials_do_not_overflow() {
    let a = CoefficientSequence::from_rule("inverse_factorials", |k| {
        Rational::new(BigInt::from(1), partseq::exact::factorial(k)).unwrap()
    })
    .unwrap();
    // 1/e^x = e^{-x}: b_n = (-1)^n / n!
    for n in [10, 60, 200] {
        let b = b_recursion(&a, n).unwrap();
        let want = Rational::new(BigInt::from(if n % 2 == 0 { 1 } else { -1 }), partseq::exact::factorial(n)).unwrap();
        assert_eq!(b, want);
    }
}

#[test]
fn sequences_are_shareable_across_threads() {
    let a = partseq::CatalogEntry::Bernoulli.sequence();
    let results: Vec<Rational> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| b_recursion(&a, 30).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}
