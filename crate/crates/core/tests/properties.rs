use cubic_waring::binaryrank::binary_real_rank;
use cubic_waring::catalog::builtin;
use cubic_waring::classify::classify;
use cubic_waring::covariants::{aronhold_st, factor_out_line, hessian, linear_factors, polar_quadratic};
use cubic_waring::depaolis::depaolis;
use cubic_waring::poly::expand_cubes;
use cubic_waring::{BinaryCubic, ExactMatrix, FieldElement, LinearForm, Radicand, Rational, TernaryCubic, TernaryForm};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = FieldElement> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| FieldElement::ratio(n, d))
}

fn quadratic_element() -> impl Strategy<Value = FieldElement> {
    (rational(), rational()).prop_map(|(a, b)| {
        FieldElement::new(a.as_rational().unwrap().clone(), b.as_rational().unwrap().clone(), Radicand::new(2).unwrap())
    })
}

fn cubic(bound: i64) -> impl Strategy<Value = TernaryCubic> {
    proptest::array::uniform10(-bound..=bound).prop_map(TernaryCubic::from_ints)
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(rational(), 9).prop_filter_map("singular", |v| {
        let m = ExactMatrix::from_rows(v.chunks(3).map(<[_]>::to_vec).collect()).unwrap();
        (!m.determinant().is_zero()).then_some(m)
    })
}

/// Unit lower times unit upper triangular, determinant one.
fn unimodular() -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(rational(), 6).prop_map(|v| {
        let one = FieldElement::one;
        let zero = FieldElement::zero;
        let l = ExactMatrix::from_rows(vec![
            vec![one(), zero(), zero()],
            vec![v[0].clone(), one(), zero()],
            vec![v[1].clone(), v[2].clone(), one()],
        ])
        .unwrap();
        let u = ExactMatrix::from_rows(vec![
            vec![one(), v[3].clone(), v[4].clone()],
            vec![zero(), one(), v[5].clone()],
            vec![zero(), zero(), one()],
        ])
        .unwrap();
        l.mul(&u)
    })
}

fn linear() -> impl Strategy<Value = LinearForm> {
    proptest::array::uniform3(-4i64..=4)
        .prop_filter("zero", |c| c != &[0, 0, 0])
        .prop_map(|[a, b, c]| LinearForm::from_ints(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in quadratic_element(), b in quadratic_element(), c in quadratic_element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
        prop_assert_eq!(a.norm(), (&a * &a.conj()).as_rational().unwrap().clone());
    }

    #[test]
    fn order_is_compatible_with_arithmetic(a in quadratic_element(), b in quadratic_element()) {
        let d = &a - &b;
        prop_assert_eq!(d.signum() == 0, a == b);
        prop_assert!((&a * &a).signum() >= 0);
    }

    #[test]
    fn substitution_composes(f in cubic(5), a in matrix(), b in matrix()) {
        prop_assert_eq!(f.substitute_linear(&a).substitute_linear(&b), f.substitute_linear(&a.mul(&b)));
    }

    #[test]
    fn euler_identity(f in cubic(9)) {
        let sum = (0..3).fold(TernaryForm::zero(3), |acc, i| acc.add(&TernaryForm::variable(i).mul(&f.partial(i))));
        prop_assert_eq!(sum, f.form().scale(&FieldElement::from(3)));
    }

    #[test]
    fn hessian_is_covariant(f in cubic(5), m in matrix()) {
        let det = m.determinant();
        let lhs = hessian(&f.substitute_linear(&m));
        let rhs = hessian(&f).substitute_linear(&m).scale(&(&det * &det));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polar_is_linear_in_the_point(f in cubic(6), y in proptest::array::uniform3(rational()), w in proptest::array::uniform3(rational()), s in rational()) {
        let comb: [FieldElement; 3] = std::array::from_fn(|i| &y[i] + &(&s * &w[i]));
        let lhs = polar_quadratic(&f, &comb);
        let rhs = polar_quadratic(&f, &y).add(&polar_quadratic(&f, &w).scale(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invariant_weights(f in cubic(4), m in matrix()) {
        let det = m.determinant();
        let (p, q) = (aronhold_st(&f), aronhold_st(&f.substitute_linear(&m)));
        prop_assert_eq!(q.s, &p.s * &det.pow(4));
        prop_assert_eq!(q.t, &p.t * &det.pow(6));
    }

    #[test]
    fn factors_are_sound(l in linear(), q in proptest::array::uniform6(-4i64..=4)) {
        let quad = TernaryForm::from_ints(2, &q).unwrap();
        prop_assume!(!quad.is_zero());
        let f = TernaryCubic::from_form(l.to_form().mul(&quad)).unwrap();
        let (l2, q2) = factor_out_line(&f).expect("a rational line divides");
        prop_assert_eq!(l2.to_form().mul(&q2), f.form().clone());
        for k in linear_factors(&f) {
            prop_assert!(cubic_waring::covariants::divide_by_line(f.form(), &k).is_some());
        }
    }

    #[test]
    fn binary_rank_is_gl2_invariant(c in proptest::array::uniform4(-6i64..=6), m in proptest::array::uniform4(rational())) {
        let f = BinaryCubic::from_ints(c);
        prop_assume!(!f.is_zero());
        let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
        prop_assume!(!det.is_zero());
        let g = f.substitute(&[[m[0].clone(), m[1].clone()], [m[2].clone(), m[3].clone()]]);
        match (binary_real_rank(&f), binary_real_rank(&g)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.rank, b.rank);
                prop_assert_eq!(a.catalecticant_rank, b.catalecticant_rank);
                prop_assert_eq!(a.discriminant.signum(), b.discriminant.signum());
            }
            (a, b) => prop_assert!(false, "{:?} {:?}", a, b),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn depaolis_is_equivariant(n in 1i64..=9, d in 1i64..=4, m in unimodular()) {
        let lambda = FieldElement::ratio(n, d);
        let mut c: [FieldElement; 10] = Default::default();
        c[0] = 1.into();
        c[6] = 1.into();
        c[9] = 1.into();
        c[4] = &FieldElement::from(6) * &lambda;
        let f = TernaryCubic::new(c).unwrap();
        let l0 = LinearForm::from_ints(1, 1, 1);
        let (d0, t0) = depaolis(&f, &l0).unwrap();
        let (d1, t1) = depaolis(&f.substitute_linear(&m), &l0.substitute_linear(&m)).unwrap();
        prop_assert_eq!(d0.len(), d1.len());
        prop_assert_eq!(&t0.coefficients[0], &t1.coefficients[0]);
        prop_assert_eq!(expand_cubes(d1.terms()), f.substitute_linear(&m));
    }

    #[test]
    fn orbit_is_sl3_invariant(row in 0usize..16, m in unimodular()) {
        let r = &builtin()[row];
        let g = r.normal_form.substitute_linear(&m);
        let c = classify(&g).unwrap();
        prop_assert_eq!(c.orbit, Some(row as u8 + 1));
        prop_assert_eq!(c.upper.certificate.target(), &g);
    }

    #[test]
    fn random_cubics_bounds_are_consistent(f in cubic(1), m in unimodular()) {
        prop_assume!(!f.is_zero());
        let a = classify(&f).unwrap();
        prop_assert_eq!(expand_cubes(a.upper.certificate.terms()), f.clone());
        prop_assert!(a.lower.value <= a.upper.value);
        if let Some(rk) = a.rk_real {
            prop_assert!(a.lower.value <= rk && rk <= a.upper.value);
        }
        let b = classify(&f.substitute_linear(&m)).unwrap();
        if a.orbit.is_some() && b.orbit.is_some() {
            prop_assert_eq!(a.orbit, b.orbit);
        }
    }
}

#[test]
fn smooth_trichotomy_is_exclusive() {
    for n in -6..=6 {
        let l = Rational::new(n, 2);
        let mut c: [FieldElement; 10] = Default::default();
        c[0] = 1.into();
        c[6] = 1.into();
        c[9] = 1.into();
        c[4] = FieldElement::from(l) * FieldElement::from(6);
        let f = TernaryCubic::new(c).unwrap();
        let inv = aronhold_st(&f);
        if inv.discriminant().is_zero() {
            continue;
        }
        let cases = [!inv.s.is_zero(), inv.s.is_zero() && inv.t.signum() > 0, inv.s.is_zero() && inv.t.signum() < 0];
        assert_eq!(cases.iter().filter(|&&b| b).count(), 1);
    }
}
