use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use superjack::exactalg::{
    mat_vec, parse_rational, rat, scalar_eval, solve_exact, AlgebraError, ExactScalar, LinearSolveOutcome,
    SparsePoly, UniPoly,
};
use superjack::Rational;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(UniPoly::from_coeffs)
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        small_rational().prop_map(ExactScalar::Rational),
        (unipoly(3), unipoly(3)).prop_filter_map("nonzero denominator", |(n, d)| {
            ExactScalar::from_polys(n, d).ok()
        }),
    ]
}

fn vars() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 3), small_rational()), 0..=4).prop_map(|terms| {
        SparsePoly::from_terms(&vars(), terms.into_iter().map(|(e, c)| (e, ExactScalar::Rational(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &ExactScalar::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        } else {
            prop_assert_eq!(a.recip(), Err(AlgebraError::DivisionByZero));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), t in small_rational()) {
        if let (Ok(x), Ok(y)) = (a.eval(&t), b.eval(&t)) {
            prop_assert_eq!((&a * &b).eval(&t).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&t).unwrap(), &x + &y);
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(f in poly(), g in poly(), u in poly(), w in poly()) {
        let target = vars();
        let assignment = BTreeMap::from([("x".to_string(), u), ("z".to_string(), w)]);
        let s = |p: &SparsePoly| p.substitute(&target, &assignment).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn text_round_trip(f in poly()) {
        prop_assert_eq!(SparsePoly::parse(&f.to_string(), &vars()).unwrap(), f.clone());
        let json = serde_json::to_string(&f.to_record()).unwrap();
        let back = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(SparsePoly::from_record(&back).unwrap(), f);
    }

    #[test]
    fn solve_recovers_constructed_solutions(
        n in 1usize..=6,
        entries in prop::collection::vec(-3i64..=3, 36),
        xs in prop::collection::vec(-5i64..=5, 6),
    ) {
        let a: Vec<Vec<ExactScalar>> = (0..n)
            .map(|i| (0..n).map(|j| ExactScalar::from_int(entries[i * 6 + j])).collect())
            .collect();
        let x: Vec<ExactScalar> = xs[..n].iter().map(|&v| ExactScalar::from_int(v)).collect();
        let b = mat_vec(&a, &x);
        match solve_exact(&a, &b) {
            LinearSolveOutcome::Unique(sol) => {
                prop_assert_eq!(&sol, &x);
                prop_assert!(!determinant(&a).is_zero());
            }
            LinearSolveOutcome::Underdetermined { particular, nullspace } => {
                prop_assert!(determinant(&a).is_zero());
                prop_assert_eq!(mat_vec(&a, &particular), b);
                for v in nullspace {
                    prop_assert!(mat_vec(&a, &v).iter().all(Zero::is_zero));
                }
            }
            LinearSolveOutcome::Inconsistent => prop_assert!(false, "a constructed system is consistent"),
        }
    }
}

/// Cofactor expansion, independent of the elimination code.
fn determinant(a: &[Vec<ExactScalar>]) -> ExactScalar {
    if a.is_empty() {
        return ExactScalar::one();
    }
    let mut total = ExactScalar::zero();
    for (j, pivot) in a[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<ExactScalar>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = pivot * &determinant(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

#[test]
fn scalar_eval_examples() {
    let th = ExactScalar::theta();
    let one = ExactScalar::one();
    let f = &(&ExactScalar::from_int(2) * &th) / &(&th + &one);
    assert_eq!(scalar_eval(&f, &rat(1, 1)).unwrap(), rat(1, 1));
    let g = &one / &(&th - &one);
    assert_eq!(scalar_eval(&g, &rat(1, 1)), Err(AlgebraError::Pole(rat(1, 1))));
    assert_eq!(scalar_eval(&ExactScalar::from_ratio(5, 3), &rat(7, 2)).unwrap(), rat(5, 3));
}

#[test]
fn substitution_examples() {
    let v = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let x2 = SparsePoly::parse("x^2", &v(&["x"])).unwrap();
    let t = v(&["t"]);
    let half_t = SparsePoly::parse("1/2*t", &t).unwrap();
    let r = x2.substitute(&t, &BTreeMap::from([("x".to_string(), half_t)])).unwrap();
    assert_eq!(r.to_string(), "1/4*t^2");

    let xt = v(&["x", "t"]);
    let x2 = SparsePoly::parse("x^2", &xt).unwrap();
    let half_t = SparsePoly::parse("1/2*t", &xt).unwrap();
    let r = x2.substitute(&xt, &BTreeMap::from([("x".to_string(), half_t)])).unwrap();
    assert_eq!(r.to_string(), "1/4*t^2");

    let xy = v(&["x", "y"]);
    let f = SparsePoly::parse("x + y", &xy).unwrap();
    let assign = BTreeMap::from([
        ("x".to_string(), SparsePoly::constant(&xy, ExactScalar::one())),
        ("y".to_string(), SparsePoly::constant(&xy, ExactScalar::from_int(-1))),
    ]);
    assert!(f.substitute(&xy, &assign).unwrap().is_zero());

    let uvy = v(&["u", "v", "y"]);
    let xy_poly = SparsePoly::parse("x*y", &v(&["x", "y"])).unwrap();
    let assign = BTreeMap::from([("x".to_string(), SparsePoly::parse("u + v", &uvy).unwrap())]);
    assert_eq!(xy_poly.substitute(&uvy, &assign).unwrap().to_string(), "u*y + v*y");
}

#[test]
fn rationals_from_text() {
    assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
    assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
    assert!(parse_rational("0.5").is_err());
    assert!(parse_rational("1/0").is_err());
}
