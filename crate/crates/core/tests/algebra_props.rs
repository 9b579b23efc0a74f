use proptest::prelude::*;

use tdy_core::algebra::{
    q, residue, shifted_pole_series, Character, ClassFraction, CoeffFrac, GenusVar, LaurentPoly, Rational, SeriesTrunc,
    SeriesVar,
};

const POOL: [[i64; 2]; 5] = [[1, 0], [0, 1], [1, 1], [2, -1], [-1, 3]];

fn coeff() -> impl Strategy<Value = CoeffFrac> {
    (-3i64..=3, 0u32..=2).prop_map(|(c, e)| CoeffFrac::delta().pow(e).scale(&q(c)))
}

fn class() -> impl Strategy<Value = ClassFraction> {
    let term = ((-2i64..=2, -2i64..=2), coeff());
    (
        prop::collection::vec(term, 0..4),
        prop::collection::vec(0usize..POOL.len(), 0..3),
    )
        .prop_map(|(terms, den)| {
            let mut num = LaurentPoly::zero(2);
            for ((a, b), c) in terms {
                num = num.add(&LaurentPoly::term(Character::from([a, b]), c)).unwrap();
            }
            let den = den.into_iter().map(|i| Character::from(POOL[i])).collect();
            ClassFraction::new(num, den).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in class(), b in class(), c in class()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ClassFraction::one(2), a.clone());
    }

    #[test]
    fn cancellation_is_canonical(a in class(), i in 0usize..POOL.len()) {
        let w = Character::from(POOL[i]);
        let f = ClassFraction::from_laurent(LaurentPoly::one_minus(&w));
        let back = &(&a * &f) * &ClassFraction::geometric(&w).unwrap();
        prop_assert_eq!(back.render(GenusVar::Delta), a.render(GenusVar::Delta));
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in class(), b in class(), v in -3i64..=3) {
        let s = |x: &ClassFraction| x.substitute_delta(&q(v)).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        // y = -1 - δ
        prop_assert_eq!(s(&a), a.substitute_y(&q(-1 - v)).unwrap());
    }

    #[test]
    fn y_and_delta_agree(c in coeff(), v in -4i64..=4) {
        prop_assert_eq!(c.eval_delta(&q(v)).unwrap(), c.eval_y(&q(-1 - v)).unwrap());
        let p = c.to_y_poly().unwrap();
        prop_assert_eq!(CoeffFrac::from_y_poly(&p), c);
    }

    #[test]
    fn residue_is_linear(
        f in prop::collection::vec(-5i64..=5, 1..7),
        g in prop::collection::vec(-5i64..=5, 1..7),
        low in -5i64..=0,
        c in -3i64..=3,
    ) {
        let ser = |v: &[i64]| SeriesTrunc::polynomial(
            SeriesVar::U, low, v.iter().map(|&x| q(x)).collect(), q(0));
        let (f, g) = (ser(&f), ser(&g));
        let lhs = residue(&f.add(&g).unwrap().add(&g.scale_q(&q(c))).unwrap()).unwrap();
        let rhs = residue(&f).unwrap() + residue(&g).unwrap() * q(1 + c);
        prop_assert_eq!(lhs, rhs);
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn residues_of_powers() {
    for n in 1..=6i64 {
        let mut pole = vec![q(0); n as usize + 1];
        pole[0] = q(1);
        let f = SeriesTrunc::polynomial(SeriesVar::U, -n, pole, q(0));
        assert_eq!(residue(&f).unwrap(), q(if n % 2 == 0 { 1 } else { -1 }), "n={n}");
        for k in 1..=8i64 {
            let row: Vec<Rational> = (0..=k).map(|j| q(binomial(k, j))).collect();
            let f = SeriesTrunc::polynomial(SeriesVar::U, -n, row, q(0));
            assert_eq!(residue(&f).unwrap(), q(-binomial(k - 1, n - 1)), "n={n} k={k}");
        }
    }
}

#[test]
fn shifted_pole_residue() {
    let s = Character::from([1]);
    let sv = ClassFraction::s_var(&s);
    for n in 1..=6u32 {
        for k in 0..n {
            let lhs = residue(&shifted_pole_series(n, k, &s).unwrap()).unwrap();
            let one_plus = &ClassFraction::one(1) + &sv;
            let rhs = (&one_plus.pow(k) * &ClassFraction::inv_s_var(&s).unwrap().pow(n)).neg();
            assert_eq!(lhs, rhs, "n={n} k={k}");
        }
    }
}
