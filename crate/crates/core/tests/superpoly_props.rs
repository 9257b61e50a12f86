use proptest::prelude::*;

use superjack::exactalg::{rat, ExactScalar, SparsePoly};
use superjack::interpbc::{interpolation_J, Mode};
use superjack::partitions::{enumerate_hooks, partitions_of, SizeMode};
use superjack::superpoly::{
    a_power_sum, h_point, h_power_sum, h_vars, is_even_supersymmetric, is_supersymmetric, lambda0_basis,
    phi_theta, res_map, super_jack, Variant,
};
use superjack::symmfunc::{jack_p, JackParam};
use superjack::{HookParams, Partition, Rational};

fn hps() -> Vec<HookParams> {
    [(1, 1), (2, 1), (1, 2), (2, 2)]
        .into_iter()
        .map(|(p, q)| HookParams::new(p, q).unwrap())
        .collect()
}

fn one() -> JackParam {
    JackParam::Value(Rational::from_integer(1.into()))
}

#[test]
fn super_jack_vanishes_exactly_off_hooks() {
    for hp in hps() {
        for n in 0..=6 {
            for l in partitions_of(n) {
                let sp = super_jack(&l, hp, &one()).unwrap();
                assert_eq!(sp.is_zero(), !l.is_hook(hp), "SP_{l} at {hp}");
                // oracle: φ_1 applied directly to the Jack expansion
                assert_eq!(sp, phi_theta(&jack_p(&l, &one()).unwrap(), hp, &one()).unwrap());
                if l.is_hook(hp) {
                    assert!(is_supersymmetric(&sp, hp, Variant::Plain), "SP_{l} at {hp}");
                    assert_eq!(sp.homogeneous_part(n as u32), sp);
                }
            }
        }
    }
}

#[test]
fn generic_super_jack_degree_one() {
    let hp = HookParams::new(2, 1).unwrap();
    let sp = super_jack(&"1".parse().unwrap(), hp, &JackParam::Generic).unwrap();
    assert_eq!(sp.to_string(), "x1 + x2 + (-1)/(θ)*y1");
}

#[test]
fn even_basis_and_interpolation_polynomials() {
    for hp in hps() {
        let basis = lambda0_basis(hp, 4);
        assert_eq!(basis.len(), enumerate_hooks(hp, 4, SizeMode::UpTo).len());
        for (nu, f) in &basis {
            assert!(is_even_supersymmetric(f, hp), "SP_{nu}(x², y²) at {hp}");
            assert_eq!(f.degree(), Some(2 * nu.size() as u32));
        }
        for (mu, _) in &basis {
            let j = interpolation_J(mu, hp, Mode::Top).unwrap();
            assert!(is_even_supersymmetric(&j.poly, hp), "J_{mu} at {hp}");
        }
    }
}

#[test]
fn signed_power_sums_are_supersymmetric() {
    for hp in hps() {
        for r in 1..=6 {
            assert!(is_supersymmetric(&a_power_sum(r, hp), hp, Variant::Signed));
            assert_eq!(is_even_supersymmetric(&a_power_sum(r, hp), hp), r % 2 == 0);
        }
    }
}

#[test]
fn restriction_images_of_power_sums() {
    for hp in hps() {
        for r in 1..=6u32 {
            let image = res_map(&h_power_sum(r, hp), hp).unwrap();
            if r % 2 == 0 {
                let factor = ExactScalar::from_ratio(1, 1 << (r - 1));
                assert_eq!(image, a_power_sum(r, hp).scale(&factor));
            } else {
                assert!(image.is_zero());
            }
        }
    }
}

#[test]
fn restriction_of_products_is_even_supersymmetric() {
    for hp in hps() {
        for d in 1..=6 {
            for l in partitions_of(d) {
                let mut f = SparsePoly::one(&h_vars(hp));
                for &r in l.parts() {
                    f = &f * &h_power_sum(r as u32, hp);
                }
                let g = res_map(&f, hp).unwrap();
                assert!(is_even_supersymmetric(&g, hp), "Res(p_{l}) at {hp}");
            }
        }
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn restriction_evaluation(a in prop::collection::vec(rational(), 2), b in prop::collection::vec(rational(), 2)) {
        for hp in hps() {
            let (a, b) = (&a[..hp.p], &b[..hp.q]);
            for r in [2, 4, 6] {
                let f = h_power_sum(r, hp);
                let lhs = f.eval_rational(&h_point(a, b)).unwrap();
                let two = rat(2, 1);
                let doubled: Vec<Rational> = a.iter().chain(b).map(|x| x * &two).collect();
                prop_assert_eq!(res_map(&f, hp).unwrap().eval_rational(&doubled).unwrap(), lhs);
            }
        }
    }
}

#[test]
fn squared_examples_from_text() {
    let hp = HookParams::new(1, 1).unwrap();
    let sp = super_jack(&Partition::empty(), hp, &one()).unwrap();
    assert_eq!(sp.to_string(), "1");
}
