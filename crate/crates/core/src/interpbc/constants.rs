//! The box products `C^±_λ(x; k)` and the constants built from them.

use num_traits::{One, Zero};

use crate::exactalg::{AlgebraError, ExactScalar};
use crate::partitions::{HookParams, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn int(n: usize) -> ExactScalar {
    ExactScalar::from_int(n as i64)
}

/// `Π_{(i,j) ∈ λ} (λ_i ∓ j ∓ k(λ'_j ∓ i) + x)`.
pub fn c_factor(lambda: &Partition, x: &ExactScalar, k: &ExactScalar, sign: Sign) -> ExactScalar {
    let t = lambda.transpose();
    let mut acc = ExactScalar::one();
    for (i, j) in lambda.boxes() {
        let (li, tj) = (int(lambda.part(i)), int(t.part(j)));
        let f = match sign {
            Sign::Minus => &(&(&li - &int(j)) - &(k * &(&tj - &int(i)))) + x,
            Sign::Plus => &(&(&li + &int(j)) + &(k * &(&tj + &int(i)))) + x,
        };
        acc *= &f;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

fn sign_of(n: usize) -> ExactScalar {
    ExactScalar::from_int(if n.is_multiple_of(2) { 1 } else { -1 })
}

/// `(-1)^{|μ|} k^{2|μ|} C^-_μ(1; k) / C^-_μ(-k; k)`.
pub fn d_mu(mu: &Partition, k: &ExactScalar) -> Result<ExactScalar, AlgebraError> {
    let n = mu.size();
    let num = &(&sign_of(n) * &k.pow(2 * n as u32)) * &c_factor(mu, &ExactScalar::one(), k, Sign::Minus);
    let den = c_factor(mu, &-k, k, Sign::Minus);
    num.checked_div(&den)
}

/// `(-1)^{|μ|} C^-_μ(1; -1)`.
pub fn k_mu(mu: &Partition) -> ExactScalar {
    &sign_of(mu.size()) * &hook_product(mu)
}

/// `C^-_μ(1; -1)`, the product of hook lengths.
pub fn hook_product(mu: &Partition) -> ExactScalar {
    c_factor(mu, &ExactScalar::one(), &ExactScalar::from_int(-1), Sign::Minus)
}

fn plus_factor(mu: &Partition, hp: HookParams) -> ExactScalar {
    let x = ExactScalar::from_int(2 * hp.q as i64 - 2 * hp.p as i64);
    c_factor(mu, &x, &ExactScalar::from_int(-1), Sign::Plus)
}

/// `C^-_μ(1; -1) C^+_μ(2q - 2p; -1)`.
pub fn paper_target(mu: &Partition, hp: HookParams) -> ExactScalar {
    &hook_product(mu) * &plus_factor(mu, hp)
}

/// `C^-_μ(1; -1) C^+_{μ'}(2q - 2p; -1)`, the same product with the
/// transposed partition in the second factor.
pub fn transposed_target(mu: &Partition, hp: HookParams) -> ExactScalar {
    &hook_product(mu) * &plus_factor(&mu.transpose(), hp)
}

/// `(-1)^{|μ|} C^-_μ(1; -1)^2 C^+_μ(2q - 2p; -1)`.
pub fn corollary_value(mu: &Partition, hp: HookParams) -> ExactScalar {
    &k_mu(mu) * &paper_target(mu, hp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn c_examples() {
        let th = ExactScalar::theta();
        assert_eq!(c_factor(&Partition::empty(), &th, &th, Sign::Plus), s(1));
        assert_eq!(c_factor(&pt("2,1"), &s(1), &s(-1), Sign::Minus), s(3));
        assert_eq!(c_factor(&pt("1"), &s(0), &s(-1), Sign::Plus), s(0));
    }

    #[test]
    fn hook_products() {
        assert_eq!(hook_product(&pt("3,1")), s(8));
        assert_eq!(hook_product(&pt("2,2")), s(12));
    }

    #[test]
    fn d_examples() {
        let k = ExactScalar::theta();
        assert_eq!(d_mu(&Partition::empty(), &k).unwrap(), s(1));
        assert_eq!(d_mu(&pt("1"), &k).unwrap(), k);
        for n in 0..=5 {
            for mu in partitions_of(n) {
                let expected = s(if n % 2 == 0 { 1 } else { -1 });
                assert_eq!(d_mu(&mu, &s(-1)).unwrap(), expected, "{mu}");
            }
        }
        assert_eq!(d_mu(&pt("1"), &s(0)), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn k_examples() {
        assert_eq!(k_mu(&Partition::empty()), s(1));
        assert_eq!(k_mu(&pt("1")), s(-1));
        assert_eq!(k_mu(&pt("2,1")), s(-3));
    }

    #[test]
    fn targets() {
        let h21 = HookParams::new(2, 1).unwrap();
        assert_eq!(paper_target(&pt("1"), h21), s(-2));
        assert_eq!(paper_target(&pt("1,1"), h21), s(24));
        assert_eq!(paper_target(&pt("1"), HookParams::new(1, 1).unwrap()), s(0));
    }
}
