use std::collections::BTreeMap;

use num_traits::{One, Zero};

use superjack::exactalg::ExactScalar;
use superjack::partitions::partitions_of;
use superjack::symmfunc::{
    basis_convert, jack_inner, jack_p, monomial_expand, z_lambda, Basis, JackParam, SymExpansion, SymFun,
};
use superjack::{Partition, Rational};

/// `h_n = Σ_{|μ| = n} p_μ / z_μ`.
fn complete(n: i64) -> SymFun {
    if n < 0 {
        return SymFun::zero();
    }
    SymFun::from_coeffs(partitions_of(n as usize).into_iter().map(|mu| {
        let z = Rational::from_integer(z_lambda(&mu));
        (mu, ExactScalar::Rational(Rational::one() / z))
    }))
}

fn det(m: &[Vec<SymFun>]) -> SymFun {
    if m.is_empty() {
        return SymFun::power(&Partition::empty());
    }
    let mut total = SymFun::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<SymFun>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, f)| f.clone()).collect())
            .collect();
        let term = a.mul(&det(&minor));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`.
fn schur(lambda: &Partition) -> SymFun {
    let l = lambda.len();
    let m: Vec<Vec<SymFun>> = (1..=l)
        .map(|i| (1..=l).map(|j| complete(lambda.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    det(&m)
}

#[test]
fn theta_one_is_schur() {
    let one = JackParam::Value(Rational::one());
    for n in 0..=6 {
        for l in partitions_of(n) {
            assert_eq!(jack_p(&l, &one).unwrap(), schur(&l), "{l}");
        }
    }
}

#[test]
fn p2_coefficient_law() {
    let p = jack_p(&"2".parse().unwrap(), &JackParam::Generic).unwrap().to_monomial();
    let th = ExactScalar::theta();
    let c = &(&ExactScalar::from_int(2) * &th) / &(&th + &ExactScalar::one());
    let expected = BTreeMap::from([("2".parse().unwrap(), ExactScalar::one()), ("1,1".parse().unwrap(), c)]);
    assert_eq!(p, expected);
}

#[test]
fn monic_triangular_and_orthogonal() {
    let th = ExactScalar::theta();
    for n in 0..=6 {
        let ps: Vec<(Partition, SymFun)> = partitions_of(n)
            .into_iter()
            .map(|l| {
                let f = jack_p(&l, &JackParam::Generic).unwrap();
                (l, f)
            })
            .collect();
        for (l, f) in &ps {
            let m = f.to_monomial();
            assert!(m[l].is_one(), "P_{l} is monic");
            for mu in m.keys() {
                assert!(l.dominates(mu), "P_{l} involves m_{mu}");
            }
        }
        for (i, (l, f)) in ps.iter().enumerate() {
            for (mu, g) in &ps[i + 1..] {
                assert!(jack_inner(f, g, &th).unwrap().is_zero(), "<P_{l}, P_{mu}>");
            }
        }
    }
}

#[test]
fn basis_round_trip() {
    for n in 0..=8 {
        for l in partitions_of(n) {
            let m = SymExpansion { basis: Basis::Monomial, coeffs: BTreeMap::from([(l.clone(), ExactScalar::one())]) };
            let p = basis_convert(&m, Basis::PowerSum, 8).unwrap();
            assert_eq!(basis_convert(&p, Basis::Monomial, 8).unwrap(), m);
            let pl = SymExpansion::power_sums(&SymFun::power(&l));
            let back = basis_convert(&basis_convert(&pl, Basis::Monomial, 8).unwrap(), Basis::PowerSum, 8).unwrap();
            assert_eq!(back, pl);
        }
    }
}

#[test]
fn power_sum_expansion_examples() {
    let p = |s: &str| SymExpansion::power_sums(&SymFun::power(&s.parse().unwrap()));
    assert_eq!(basis_convert(&p("1,1"), Basis::Monomial, 2).unwrap().to_string(), "m(2) + 2*m(1,1)");
    assert_eq!(basis_convert(&p("2"), Basis::Monomial, 2).unwrap().to_string(), "m(2)");
}

/// `m_λ` in three variables agrees with the polynomial expansion of its
/// power-sum form.
#[test]
fn monomial_polynomials_match_transition_tables() {
    let vars: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
    for n in 0..=4 {
        for l in partitions_of(n).into_iter().filter(|l| l.len() <= 3) {
            let direct = monomial_expand(&l, 3).unwrap();
            let mut via_p = superjack::SparsePoly::zero(&vars);
            for (mu, c) in SymFun::monomial(&l).coeffs() {
                let mut t = superjack::SparsePoly::constant(&vars, c.clone());
                for &r in mu.parts() {
                    let pr = superjack::SparsePoly::from_terms(
                        &vars,
                        (0..3).map(|i| {
                            let mut e = vec![0; 3];
                            e[i] = r as u32;
                            (e, ExactScalar::one())
                        }),
                    )
                    .unwrap();
                    t = &t * &pr;
                }
                via_p = &via_p + &t;
            }
            assert_eq!(direct, via_p, "m_{l}");
        }
    }
}
