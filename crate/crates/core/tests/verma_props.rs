mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use spinmtc::exactnum::{rational, Rational};
use spinmtc::verma::{
    bracket, degree_basis, singular_vectors, straighten, verify_minimal_singular, Straightener, Terms,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn straightening_is_confluent(
        w in proptest::collection::vec(mode_strategy(), 0..=6),
        (c, h) in params(),
        order_a in proptest::collection::vec(0usize..1000, 1..20),
        order_b in proptest::collection::vec(0usize..1000, 1..20),
    ) {
        check_confluence(&w, &c, &h, &order_a, &order_b)?;
    }

    #[test]
    fn representation_respects_brackets(
        x in mode_strategy(),
        y in mode_strategy(),
        base in proptest::collection::vec(mode_strategy(), 0..=3),
        (c, h) in params(),
    ) {
        // X(Y w) ∓ Y(X w) = [X, Y} w
        let st = Straightener::new(c.clone(), h);
        let (x, y) = (to_modes(&vec![x])[0], to_modes(&vec![y])[0]);
        let w = st.straighten(&to_modes(&base)).terms;
        let xy = st.act_terms(x, &st.act_terms(y, &w));
        let yx = st.act_terms(y, &st.act_terms(x, &w));
        let sign = if x.is_odd() && y.is_odd() { Rational::one() } else { -Rational::one() };
        let mut lhs = xy;
        for (m, k) in yx {
            let e = lhs.entry(m.clone()).or_insert_with(Rational::zero);
            *e += &sign * k;
            if e.is_zero() { lhs.remove(&m); }
        }
        let (modes, central) = bracket(x, y, &c);
        let mut rhs = Terms::new();
        for (k, z) in modes {
            for (m, v) in st.act_terms(z, &w) {
                *rhs.entry(m).or_insert_with(Rational::zero) += &k * v;
            }
        }
        for (m, v) in &w {
            *rhs.entry(m.clone()).or_insert_with(Rational::zero) += &central * v;
        }
        rhs.retain(|_, v| !v.is_zero());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn super_jacobi_on_structure_constants(
        x in mode_strategy(),
        y in mode_strategy(),
        z in mode_strategy(),
        c in (-20i64..20, 1i64..8).prop_map(|(a, b)| rational(a, b)),
    ) {
        check_super_jacobi(x, y, z, &c)?;
    }

    #[test]
    fn straighten_preserves_degree(
        w in proptest::collection::vec(mode_strategy(), 0..=6),
        (c, h) in params(),
    ) {
        let v = straighten(&to_modes(&w), &c, &h);
        let twice: i64 = -w.iter().map(|m| m.1).sum::<i64>();
        let odd = w.iter().filter(|m| m.0 == 'G').count() % 2;
        for m in v.terms.keys() {
            prop_assert_eq!(m.twice_degree(), twice);
            prop_assert_eq!(m.parity() as usize, odd);
        }
    }
}

/// Coefficients of Π (1 + x^{k−1/2}) / (1 − x^k) in powers of x^{1/2}.
fn super_partition_counts(max_twice: usize) -> Vec<u64> {
    let mut series = vec![0u64; max_twice + 1];
    series[0] = 1;
    for odd in (1..=max_twice).step_by(2) {
        for i in (odd..=max_twice).rev() {
            series[i] += series[i - odd];
        }
    }
    for even in (2..=max_twice).step_by(2) {
        for i in even..=max_twice {
            series[i] += series[i - even];
        }
    }
    series
}

#[test]
fn degree_basis_matches_generating_function() {
    let counts = super_partition_counts(24);
    for (twice, &expect) in counts.iter().enumerate() {
        let basis = degree_basis(twice as i64, false);
        assert_eq!(basis.len() as u64, expect, "2d = {twice}");
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), basis.len());
    }
    assert_eq!(&counts[..7], &[1, 1, 1, 2, 3, 4, 5]);
}

#[test]
fn minimal_singular_3_7() {
    let r = verify_minimal_singular(3, 7).unwrap();
    assert_eq!(r.degree, rational(6, 1));
    assert_eq!(r.c, rational(-11, 14));
    assert_eq!(r.space_dim, 1);
    assert_eq!(
        r.leading_monomial.as_ref().unwrap().to_string(),
        "G[-5/2] G[-3/2] L[-2]"
    );
    assert!(!r.lambda.as_ref().unwrap().is_zero());
    assert!(r.shape_matches);
}

#[test]
fn no_quotient_singular_vectors_below_the_target_degree() {
    for (p, q) in [(2i64, 4i64), (3, 5), (3, 7)] {
        let spec = spinmtc::minimal::MinimalModelSpec::new(p, q).unwrap();
        let c = spinmtc::minimal::central_charge(&spec);
        for twice in 2..spec.grid() {
            let r = singular_vectors(&c, &Rational::zero(), twice).unwrap();
            assert_eq!(r.space_dim, 0, "({p},{q}) at {twice}/2");
        }
    }
}
