//! Randomized algebraic invariants.

use std::sync::Arc;

use bpdq::arith::{pow, Discriminant, DualScalar, QuadElem, Rational, TryInverse};
use bpdq::binet::{Binet, BinetConstants};
use bpdq::genfunc::Series;
use bpdq::identities::{catalan_lhs, catalan_rhs, Mode};
use bpdq::sequence::{dual_fib_quat, fib, fib_quat, BiperiodicParams};
use bpdq::{rat, DualQuaternion, Quaternion};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn quad(disc: Arc<Discriminant>) -> impl Strategy<Value = QuadElem> {
    (small_rational(), small_rational()).prop_map(move |(u, v)| QuadElem::new(u, v, &disc))
}

fn quat() -> impl Strategy<Value = Quaternion<Rational>> {
    [small_rational(), small_rational(), small_rational(), small_rational()]
        .prop_map(|[w, x, y, z]| Quaternion::new(w, x, y, z))
}

fn dual_quat() -> impl Strategy<Value = DualQuaternion<Rational>> {
    (quat(), quat()).prop_map(|(p, d)| DualQuaternion::new(p, d))
}

fn params() -> impl Strategy<Value = BiperiodicParams> {
    (nonzero_rational(), nonzero_rational()).prop_map(|(a, b)| BiperiodicParams::new(a, b).unwrap())
}

fn nondegenerate_params() -> impl Strategy<Value = BiperiodicParams> {
    params().prop_filter("distinct roots", |p| p.check_nondegenerate().is_ok())
}

fn integer_params() -> impl Strategy<Value = BiperiodicParams> {
    (1i64..=6, 1i64..=6).prop_map(|(a, b)| BiperiodicParams::from_ints(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quad_ring_axioms(x in quad(Arc::new(Discriminant::new(rat(5)))),
                        y in quad(Arc::new(Discriminant::new(rat(5)))),
                        z in quad(Arc::new(Discriminant::new(rat(5))))) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.try_inverse().unwrap(), QuadElem::one());
        }
    }

    #[test]
    fn perfect_square_normalization(u in small_rational(), v in small_rational(), s in 1i64..12) {
        let disc = Arc::new(Discriminant::new(rat(s * s)));
        prop_assert_eq!(QuadElem::new(u.clone(), v.clone(), &disc), QuadElem::new(u + v * rat(s), rat(0), &disc));
    }

    #[test]
    fn dual_scalar_epsilon(x in small_rational(), y in small_rational(), a in small_rational(), b in small_rational(), c in small_rational()) {
        let p = DualScalar::new(rat(0), x);
        let q = DualScalar::new(rat(0), y);
        prop_assert!((p * q).is_zero());
        let e = DualScalar::<Rational>::epsilon();
        let s = DualScalar::new(a, b);
        prop_assert_eq!(e.clone() * s.clone(), s.clone() * e);
        let t = DualScalar::new(c.clone(), c);
        prop_assert_eq!((s.clone() * t.clone()) * s.clone(), s.clone() * (t * s));
    }

    #[test]
    fn quaternion_axioms(p in quat(), q in quat(), r in quat()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(q.clone() + r.clone()), &p * &q + &p * &r);
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
        prop_assert_eq!((&p * &q).norm_squared(), p.norm_squared() * q.norm_squared());
    }

    #[test]
    fn dual_quaternion_axioms(p in dual_quat(), q in dual_quat(), r in dual_quat()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(q.clone() + r.clone()), &p * &q + &p * &r);
        // product in the dual-scalar coefficient representation
        let alt = &p.to_dual_coefficients() * &q.to_dual_coefficients();
        prop_assert_eq!(DualQuaternion::from_dual_coefficients(&alt), &p * &q);
    }

    #[test]
    fn vieta_relations(p in nondegenerate_params()) {
        let c = BinetConstants::new(&p).unwrap();
        let ab = QuadElem::rational(p.ab());
        prop_assert_eq!(&c.alpha + &c.beta, ab.clone());
        prop_assert_eq!(&c.alpha * &c.beta, -ab);
        let d = &c.alpha - &c.beta;
        prop_assert_eq!(&d * &d, QuadElem::rational(p.discriminant().value().clone()));
        prop_assert_eq!(c.alpha.conj(), c.beta);
    }

    #[test]
    fn order_four_recurrence(p in params(), n in 4i64..40) {
        prop_assert_eq!(fib(&p, n), (p.ab() + rat(2)) * fib(&p, n - 2) - fib(&p, n - 4));
    }

    #[test]
    fn integrality(p in integer_params(), n in 0i64..40) {
        prop_assert!(fib(&p, n).is_integer());
    }

    #[test]
    fn window_consistency(p in params(), n in -20i64..20) {
        prop_assert_eq!(fib_quat(&p, n).x, fib_quat(&p, n + 1).w);
        prop_assert_eq!(dual_fib_quat(&p, n).primal, fib_quat(&p, n));
    }

    #[test]
    fn binet_equals_recurrence(p in nondegenerate_params(), n in 0i64..24) {
        let b = Binet::new(&p).unwrap();
        prop_assert_eq!(b.scalar(n).unwrap(), fib(&p, n));
        prop_assert_eq!(b.dual_quat(n).unwrap(), dual_fib_quat(&p, n));
    }

    #[test]
    fn conjugation_symmetry(p in nondegenerate_params(), n in 0u64..16) {
        let b = Binet::new(&p).unwrap();
        let swapped = Binet::from_constants(&p, b.constants().conjugated()).unwrap();
        prop_assert_eq!(b.scalar_raw(n), swapped.scalar_raw(n));
        prop_assert_eq!(b.quat_raw(n), swapped.quat_raw(n));
    }

    #[test]
    fn printed_catalan_holds(p in nondegenerate_params(), n in 4i64..10, half_r in 0i64..3) {
        let r = 2 * half_r;
        prop_assert_eq!(catalan_rhs(&p, n, r, Mode::Strict).unwrap(), catalan_lhs(&p, n, r).unwrap());
    }

    #[test]
    fn series_division_inverts_multiplication(
        num in proptest::collection::vec(small_rational(), 0..8),
        den_tail in proptest::collection::vec(small_rational(), 0..5),
        lead in nonzero_rational(),
        shift in -2i64..3,
    ) {
        let num = Series::truncated(0, num, 12);
        let mut den = vec![lead];
        den.extend(den_tail);
        let den = Series::polynomial(shift, den);
        let q = num.div(&den, 12).unwrap();
        prop_assert_eq!(q.mul(&den).truncate(12 - shift.max(0)), num.truncate(12 - shift.max(0)));
    }
}

#[test]
fn equal_parameters_collapse_branches() {
    // a = b: α** = α*/a, and at a = b = 1 the two branches coincide
    for k in [1i64, 2, 3, 7] {
        let p = BiperiodicParams::from_ints(k, k).unwrap();
        let c = BinetConstants::new(&p).unwrap();
        let a = QuadElem::rational(rat(k));
        assert_eq!(c.alpha_star2.scale(&a), c.alpha_star);
        assert_eq!(c.beta_star2.scale(&a), c.beta_star);
    }
    let p = BiperiodicParams::fibonacci();
    let b = Binet::new(&p).unwrap();
    let c = b.constants();
    for m in 0..20u64 {
        assert_eq!(b.quat_with(&c.alpha_star, &c.beta_star, m), b.quat_with(&c.alpha_star2, &c.beta_star2, m));
    }
}

#[test]
fn binet_against_floating_point() {
    // independent floating-point evaluation of the scalar closed form
    for (a, b) in [(1.0f64, 1.0), (2.0, 3.0), (1.0, 2.0)] {
        let p = BiperiodicParams::new(rat(a as i64), rat(b as i64)).unwrap();
        let ab = a * b;
        let s = (ab * ab + 4.0 * ab).sqrt();
        let (al, be) = ((ab + s) / 2.0, (ab - s) / 2.0);
        for n in 0..20i32 {
            let xi1 = if (n + 1) % 2 == 0 { 0 } else { 1 };
            let v = a.powi(xi1) / ab.powi(n / 2) * (al.powi(n) - be.powi(n)) / (al - be);
            let exact: f64 = fib(&p, n as i64).to_string().parse().unwrap();
            assert!((v - exact).abs() <= 1e-9 * exact.abs().max(1.0), "a={a} b={b} n={n}: {v} vs {exact}");
        }
    }
}

#[test]
fn power_by_squaring() {
    let q = Quaternion::new(rat(1), rat(1), rat(0), rat(0));
    let mut acc = Quaternion::one();
    for e in 0..10u64 {
        assert_eq!(pow(&q, e), acc);
        acc = &acc * &q;
    }
}
