use norlund_core::arith::rat;
use norlund_core::{bernoulli_table, norlund_poly, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn rational_addition_is_associative(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }

    #[test]
    fn rational_inverse(a in small_rational()) {
        prop_assume!(a != rat(0, 1));
        prop_assert_eq!(&a * a.recip(), rat(1, 1));
    }

    #[test]
    fn normalization_is_canonical(n in -50i64..50, d in 1i64..50, s in 1i64..20) {
        let a = norlund_core::rat_normalize((n * s).into(), (d * s).into()).unwrap();
        let b = norlund_core::rat_normalize(n.into(), d.into()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn norlund_addition_theorem(n in 0usize..12, a in -6i64..7, b in -6i64..7) {
        // (z/(e^z-1))^(a+b) = (z/(e^z-1))^a (z/(e^z-1))^b gives
        // B_n^(a+b) = sum_j C(n, j) B_j^(a) B_{n-j}^(b)
        let lhs = norlund_poly(n).eval(&rat(a + b, 1));
        let mut rhs = rat(0, 1);
        for j in 0..=n {
            let c = norlund_core::binom(&(n as i64).into(), j);
            rhs += norlund_poly(j).eval(&rat(a, 1)) * norlund_poly(n - j).eval(&rat(b, 1)) * c;
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn integer_order_norlund_is_power_of_generating_function() {
    // B_n^(3) from cubing z/(e^z-1) directly
    let order = 10;
    let gf = norlund_core::bernoulli::bernoulli_generating_function(order);
    let cube = gf.mul(&gf).unwrap().mul(&gf).unwrap();
    let mut fact = rat(1, 1);
    for n in 0..=order {
        if n > 0 {
            fact *= rat(n as i64, 1);
        }
        assert_eq!(norlund_poly(n).eval(&rat(3, 1)), cube.coeff(n) * &fact, "n={n}");
    }
}

#[test]
fn bernoulli_at_one() {
    let b = bernoulli_table(25);
    for n in 0..=25 {
        assert_eq!(&norlund_poly(n).eval(&rat(1, 1)), b.get(n));
    }
}
