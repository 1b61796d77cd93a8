mod support;

use charclass::exact::{integrate_poly_simplex, nullspace, rank, Matrix, MultiPoly, Rational, Scalar};
use proptest::prelude::*;
use rand::Rng;
use support::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #[test]
    fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn rational_text_round_trip(a in arb_rational()) {
        let text = a.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn rank_nullity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (rows, cols) = (r.gen_range(1..=6), r.gen_range(1..=6));
        // low-rank products make the nullspace nontrivial
        let k = r.gen_range(1..=rows.min(cols));
        let a = random_matrix(&mut r, rows, k).mul(&random_matrix(&mut r, k, cols)).unwrap();
        let null = nullspace(&a);
        prop_assert_eq!(rank(&a) + null.len(), cols);
        prop_assert_eq!(rank(&a), oracle_rank(a.to_rows()));
        for v in &null {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let a = random_invertible(&mut r, n);
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(n));
        prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(n));
    }

    #[test]
    fn polynomial_ring_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let (a, b, c) = (random_poly(&mut r, n, 3, 4), random_poly(&mut r, n, 3, 4), random_poly(&mut r, n, 3, 4));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        let point = random_vec(&mut r, n);
        prop_assert_eq!(a.mul_ref(&b).evaluate(&point), &a.evaluate(&point) * &b.evaluate(&point));
    }

    #[test]
    fn integration_is_linear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let p = random_poly(&mut r, n, 6, 5);
        let qp = random_poly(&mut r, n, 6, 5);
        let c = small_rational(&mut r);
        let lhs = integrate_poly_simplex(&p.scale(&c).add_ref(&qp)).unwrap();
        let rhs = &(&c * &integrate_poly_simplex(&p).unwrap()) + &integrate_poly_simplex(&qp).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integration_matches_fubini(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let p = random_poly(&mut r, n, 6, 6);
        prop_assert_eq!(integrate_poly_simplex(&p).unwrap(), iterated_integral(&p, n));
    }
}

#[test]
fn simplex_volumes() {
    for n in 1..=4usize {
        let one = MultiPoly::constant(q(1), n);
        assert_eq!(integrate_poly_simplex(&one).unwrap(), factorial(n).recip().unwrap());
    }
}
