//! Interpolation polynomials `J_μ` at `k = -1`, `h = q - p + 1/2`, built by
//! an exact solve against the vanishing grid in the basis `SP_ν(x², y²; 1)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{solve_exact, ExactScalar, LinearSolveOutcome, SparsePoly};
use crate::partitions::{enumerate_hooks, HookParams, Partition, SizeMode};
use crate::superpoly::{a_vars, squared_super_jack};

use super::constants::{corollary_value, hook_product, k_mu, paper_target, transposed_target};
use super::grid::{grid_point, GridPoint};
use super::InterpError;

/// How many times the vanishing window may grow past `|μ|`.
pub const MAX_EXTENSION: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// normalization `J(grid(μ)) = C^-_μ(1;-1) C^+_μ(2q-2p;-1)`
    Paper,
    /// top coefficient fixed to `(-1/4)^{|μ|}`
    Top,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Top => "top",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Mode::Paper),
            "top" => Ok(Mode::Top),
            other => Err(format!("unknown mode {other:?}, expected paper or top")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationResult {
    pub mu: Partition,
    pub hp: HookParams,
    pub poly: SparsePoly,
    pub mode: Mode,
    pub measured_top_coefficient: ExactScalar,
    pub normalization_value: ExactScalar,
    pub paper_target: ExactScalar,
    pub transposed_target: ExactScalar,
    /// `c_ν` for every basis element, in enumeration order
    pub coefficients: Vec<(Partition, ExactScalar)>,
    /// largest `|λ|` among the vanishing conditions imposed
    pub window: usize,
    pub degenerate_normalization: bool,
    pub extended_grid_used: bool,
}

/// `(-1/4)^n`.
pub fn top_default(n: usize) -> ExactScalar {
    ExactScalar::from_ratio(-1, 4).pow(n as u32)
}

pub fn eval_at(f: &SparsePoly, g: &GridPoint) -> ExactScalar {
    f.eval_rational(&g.coords).expect("grid point arity matches the variable list")
}

fn build(mu: &Partition, hp: HookParams, mode: Mode) -> Result<InterpolationResult, InterpError> {
    if !mu.is_hook(hp) {
        return Err(InterpError::NotAHook { mu: mu.clone(), hp });
    }
    let n = mu.size();
    let target = paper_target(mu, hp);
    if mode == Mode::Paper && target.is_zero() {
        return Err(InterpError::DegenerateNormalization { mu: mu.clone(), hp });
    }
    let lower: Vec<Partition> = if n == 0 {
        Vec::new()
    } else {
        enumerate_hooks(hp, n - 1, SizeMode::UpTo)
    };
    let basis: Vec<SparsePoly> = lower.iter().map(|nu| squared_super_jack(nu, hp)).collect();
    let top = squared_super_jack(mu, hp);
    let top_coeff = top_default(n);
    let mu_grid = grid_point(mu, hp).expect("μ is a hook");

    // row for a point: lower columns, then the μ column in paper mode
    let row_at = |g: &GridPoint| -> (Vec<ExactScalar>, ExactScalar) {
        let mut row: Vec<ExactScalar> = basis.iter().map(|b| eval_at(b, g)).collect();
        let t = eval_at(&top, g);
        match mode {
            Mode::Paper => {
                row.push(t);
                (row, ExactScalar::zero())
            }
            Mode::Top => (row, -&(&t * &top_coeff)),
        }
    };

    let mut a: Vec<Vec<ExactScalar>> = Vec::new();
    let mut b: Vec<ExactScalar> = Vec::new();
    if mode == Mode::Paper {
        let (row, _) = row_at(&mu_grid);
        a.push(row);
        b.push(target.clone());
    }
    let mut window = n;
    let mut batch = enumerate_hooks(hp, n, SizeMode::UpTo);
    loop {
        for lambda in batch.iter().filter(|l| !l.contains(mu)) {
            let (row, rhs) = row_at(&grid_point(lambda, hp).expect("enumerated hooks"));
            a.push(row);
            b.push(rhs);
        }
        match solve_exact(&a, &b) {
            LinearSolveOutcome::Unique(x) => {
                let (lower_c, c_mu) = match mode {
                    Mode::Paper => (x[..basis.len()].to_vec(), x[basis.len()].clone()),
                    Mode::Top => (x, top_coeff.clone()),
                };
                let mut poly = top.scale(&c_mu);
                for (f, c) in basis.iter().zip(&lower_c) {
                    poly = &poly + &f.scale(c);
                }
                let mut coefficients: Vec<(Partition, ExactScalar)> =
                    lower.iter().cloned().zip(lower_c).collect();
                coefficients.push((mu.clone(), c_mu.clone()));
                let normalization_value = eval_at(&poly, &mu_grid);
                return Ok(InterpolationResult {
                    mu: mu.clone(),
                    hp,
                    poly,
                    mode,
                    measured_top_coefficient: c_mu,
                    normalization_value,
                    paper_target: target,
                    transposed_target: transposed_target(mu, hp),
                    coefficients,
                    window,
                    degenerate_normalization: false,
                    extended_grid_used: window > n,
                });
            }
            LinearSolveOutcome::Inconsistent => {
                return Err(InterpError::InconsistentSystem {
                    mu: mu.clone(),
                    hp,
                    mode,
                })
            }
            LinearSolveOutcome::Underdetermined { .. } => {
                if window >= n + MAX_EXTENSION {
                    return Err(InterpError::Underdetermined {
                        mu: mu.clone(),
                        hp,
                        window,
                    });
                }
                window += 1;
                batch = enumerate_hooks(hp, window, SizeMode::Exact);
            }
        }
    }
}

type JCache = RwLock<HashMap<(Partition, HookParams, Mode), Result<Arc<InterpolationResult>, InterpError>>>;

/// `J_μ` in the requested mode. Results, including failures, are cached.
#[allow(non_snake_case)]
pub fn interpolation_J(mu: &Partition, hp: HookParams, mode: Mode) -> Result<Arc<InterpolationResult>, InterpError> {
    static CACHE: OnceLock<JCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), hp, mode);
    if let Some(r) = cache.read().expect("interpolation cache poisoned").get(&key) {
        return r.clone();
    }
    let r = build(mu, hp, mode).map(Arc::new);
    cache
        .write()
        .expect("interpolation cache poisoned")
        .entry(key)
        .or_insert(r)
        .clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fallback {
    /// the paper normalization target is zero
    Degenerate,
    /// the paper normalization contradicts the vanishing conditions
    InconsistentNormalization,
}

/// `J_μ` from paper mode when it exists, otherwise from top mode with the
/// reason recorded.
pub fn preferred_j(mu: &Partition, hp: HookParams) -> Result<(Arc<InterpolationResult>, Option<Fallback>), InterpError> {
    match interpolation_J(mu, hp, Mode::Paper) {
        Ok(r) => Ok((r, None)),
        Err(InterpError::DegenerateNormalization { .. }) => {
            let mut r = (*interpolation_J(mu, hp, Mode::Top)?).clone();
            r.degenerate_normalization = true;
            Ok((Arc::new(r), Some(Fallback::Degenerate)))
        }
        Err(InterpError::InconsistentSystem { mode: Mode::Paper, .. }) => {
            Ok((interpolation_J(mu, hp, Mode::Top)?, Some(Fallback::InconsistentNormalization)))
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShimuraImage {
    pub mu: Partition,
    pub hp: HookParams,
    pub k_mu: ExactScalar,
    pub poly: SparsePoly,
    pub mode: Mode,
    pub fallback: Option<Fallback>,
    /// `k_μ J_μ(grid(μ))`
    pub value_at_grid: ExactScalar,
    /// `(-1)^{|μ|} C^-_μ(1;-1)^2 C^+_μ(2q-2p;-1)`
    pub corollary_value: ExactScalar,
}

/// `k_μ J_μ`.
pub fn shimura_image(mu: &Partition, hp: HookParams) -> Result<ShimuraImage, InterpError> {
    let (j, fallback) = preferred_j(mu, hp)?;
    let k = k_mu(mu);
    Ok(ShimuraImage {
        mu: mu.clone(),
        hp,
        poly: j.poly.scale(&k),
        mode: j.mode,
        fallback,
        value_at_grid: &k * &j.normalization_value,
        corollary_value: corollary_value(mu, hp),
        k_mu: k,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionEntry {
    pub nu: Partition,
    /// measured coefficient of `SP_ν(x², y²; 1)`
    pub e: ExactScalar,
    /// `C^-_ν(1; -1)`
    pub hook_product: ExactScalar,
    pub reciprocal: bool,
    pub direct: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Reciprocal,
    Direct,
    Both,
    Neither,
}

impl Orientation {
    pub fn of(entries: &[ExpansionEntry]) -> Orientation {
        let r = entries.iter().all(|e| e.reciprocal);
        let d = entries.iter().all(|e| e.direct);
        match (r, d) {
            (true, true) => Orientation::Both,
            (true, false) => Orientation::Reciprocal,
            (false, true) => Orientation::Direct,
            (false, false) => Orientation::Neither,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Reciprocal => "reciprocal",
            Orientation::Direct => "direct",
            Orientation::Both => "both",
            Orientation::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub m: usize,
    pub hp: HookParams,
    /// the expansion exists and is unique
    pub exact: bool,
    pub entries: Vec<ExpansionEntry>,
    pub orientation: Orientation,
}

/// Expands `(Σx_i² - Σy_j²)^m / m!` in `{SP_ν(x², y²; 1) : ν ∈ ℋ^m}`.
pub fn expansion_identity(m: usize, hp: HookParams) -> ExpansionReport {
    let vars = a_vars(hp);
    let p2 = crate::superpoly::a_power_sum(2, hp);
    let mut fact = ExactScalar::one();
    for i in 1..=m {
        fact *= &ExactScalar::from_int(i as i64);
    }
    let lhs = p2.pow(m as u32).scale(&fact.recip().expect("m! is nonzero"));
    let nus = enumerate_hooks(hp, m, SizeMode::Exact);
    let basis: Vec<SparsePoly> = nus.iter().map(|nu| squared_super_jack(nu, hp)).collect();
    let mut monomials: Vec<Vec<u32>> = lhs.terms().map(|(e, _)| e.0.clone()).collect();
    for f in &basis {
        monomials.extend(f.terms().map(|(e, _)| e.0.clone()));
    }
    monomials.sort();
    monomials.dedup();
    let a: Vec<Vec<ExactScalar>> = monomials
        .iter()
        .map(|e| basis.iter().map(|f| f.coefficient(e)).collect())
        .collect();
    let b: Vec<ExactScalar> = monomials.iter().map(|e| lhs.coefficient(e)).collect();
    debug_assert_eq!(lhs.vars(), vars.as_slice());
    let (exact, coeffs) = match solve_exact(&a, &b) {
        LinearSolveOutcome::Unique(x) => (true, x),
        _ => (false, vec![ExactScalar::zero(); nus.len()]),
    };
    let entries: Vec<ExpansionEntry> = nus
        .into_iter()
        .zip(coeffs)
        .map(|(nu, e)| {
            let h = hook_product(&nu);
            ExpansionEntry {
                reciprocal: (&e * &h).is_one(),
                direct: e == h,
                nu,
                e,
                hook_product: h,
            }
        })
        .collect();
    let orientation = if exact { Orientation::of(&entries) } else { Orientation::Neither };
    ExpansionReport {
        m,
        hp,
        exact,
        entries,
        orientation,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivedK {
    pub mu: Partition,
    pub hp: HookParams,
    /// measured expansion coefficient of `SP_μ(x², y²; 1)`
    pub e_mu: ExactScalar,
    /// measured top coefficient of `J_μ`
    pub t_mu: ExactScalar,
    /// `2^{-|μ|} e_μ / t_μ`
    pub k_tilde: ExactScalar,
    /// `(-1)^{|μ|} C^-_μ(1; -1)`
    pub k_paper: ExactScalar,
    pub mode: Mode,
    pub fallback: Option<Fallback>,
    /// `(-1/2)^{|μ|}`, the top coefficient claimed in the literature
    pub claimed_top: ExactScalar,
    pub top_matches_claim: bool,
    pub k_matches_paper: bool,
    /// `k̃_μ t_μ 2^{|μ|} = e_μ`
    pub consistent: bool,
}

pub fn derive_k(mu: &Partition, hp: HookParams) -> Result<DerivedK, InterpError> {
    let (j, fallback) = preferred_j(mu, hp)?;
    let n = mu.size();
    let report = expansion_identity(n, hp);
    let e_mu = report
        .entries
        .iter()
        .find(|e| &e.nu == mu)
        .map(|e| e.e.clone())
        .unwrap_or_else(ExactScalar::zero);
    let t_mu = j.measured_top_coefficient.clone();
    let two_n = ExactScalar::from_int(2).pow(n as u32);
    let k_tilde = (&e_mu / &two_n)
        .checked_div(&t_mu)
        .map_err(|_| InterpError::ZeroTopCoefficient { mu: mu.clone(), hp })?;
    let k_paper = k_mu(mu);
    let claimed_top = ExactScalar::from_ratio(-1, 2).pow(n as u32);
    Ok(DerivedK {
        consistent: &(&k_tilde * &t_mu) * &two_n == e_mu,
        top_matches_claim: t_mu == claimed_top,
        k_matches_paper: k_tilde == k_paper,
        mu: mu.clone(),
        hp,
        e_mu,
        t_mu,
        k_tilde,
        k_paper,
        mode: j.mode,
        fallback,
        claimed_top,
    })
}

/// `[J_μ(grid(λ))]` over `ℋ_d` in enumeration order, rows `μ`, columns `λ`,
/// using top-mode `J_μ`.
pub fn evaluation_matrix(hp: HookParams, d: usize) -> Result<(Vec<Partition>, Vec<Vec<ExactScalar>>), InterpError> {
    let hooks = enumerate_hooks(hp, d, SizeMode::UpTo);
    let grids: Vec<GridPoint> = hooks
        .iter()
        .map(|l| grid_point(l, hp).expect("enumerated hooks"))
        .collect();
    let rows = hooks
        .iter()
        .map(|mu| {
            let j = interpolation_J(mu, hp, Mode::Top)?;
            Ok(grids.iter().map(|g| eval_at(&j.poly, g)).collect())
        })
        .collect::<Result<_, InterpError>>()?;
    Ok((hooks, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(p: usize, q: usize) -> HookParams {
        HookParams::new(p, q).unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(s: &str, h: HookParams) -> SparsePoly {
        SparsePoly::parse(s, &a_vars(h)).unwrap()
    }

    #[test]
    fn empty_mu() {
        for mode in [Mode::Paper, Mode::Top] {
            let j = interpolation_J(&Partition::empty(), hp(2, 2), mode).unwrap();
            assert_eq!(j.poly.to_string(), "1");
            assert_eq!(j.normalization_value, ExactScalar::one());
        }
    }

    #[test]
    fn paper_mode_degree_one() {
        let h = hp(2, 1);
        let j = interpolation_J(&pt("1"), h, Mode::Paper).unwrap();
        assert_eq!(j.poly, poly("-1/4*x1^2 - 1/4*x2^2 + 1/4*y1^2 + 1/4", h));
        assert_eq!(j.normalization_value, ExactScalar::from_int(-2));
        assert_eq!(j.measured_top_coefficient, ExactScalar::from_ratio(-1, 4));
        assert!(!j.extended_grid_used);
    }

    #[test]
    fn degenerate_and_top_mode() {
        let h = hp(1, 1);
        assert!(matches!(
            interpolation_J(&pt("1"), h, Mode::Paper),
            Err(InterpError::DegenerateNormalization { .. })
        ));
        let j = interpolation_J(&pt("1"), h, Mode::Top).unwrap();
        assert_eq!(j.poly, poly("-1/4*x1^2 + 1/4*y1^2", h));
        let (pj, fb) = preferred_j(&pt("1"), h).unwrap();
        assert_eq!(fb, Some(Fallback::Degenerate));
        assert!(pj.degenerate_normalization);
    }

    #[test]
    fn not_a_hook() {
        assert!(matches!(
            interpolation_J(&pt("2,2"), hp(1, 1), Mode::Top),
            Err(InterpError::NotAHook { .. })
        ));
    }

    #[test]
    fn shimura_examples() {
        let s = shimura_image(&Partition::empty(), hp(1, 2)).unwrap();
        assert_eq!(s.poly.to_string(), "1");
        let h = hp(2, 1);
        let s = shimura_image(&pt("1"), h).unwrap();
        assert_eq!(s.poly, poly("1/4*x1^2 + 1/4*x2^2 - 1/4*y1^2 - 1/4", h));
        assert_eq!(s.value_at_grid, s.corollary_value);
    }

    #[test]
    fn expansion_small() {
        let r = expansion_identity(2, hp(1, 1));
        assert!(r.exact);
        assert_eq!(r.orientation, Orientation::Reciprocal);
        assert!(r.entries.iter().all(|e| e.e == ExactScalar::from_ratio(1, 2)));
        let r = expansion_identity(1, hp(1, 1));
        assert_eq!(r.orientation, Orientation::Both);
        let r = expansion_identity(0, hp(1, 1));
        assert_eq!(r.entries[0].e, ExactScalar::one());
    }

    #[test]
    fn derived_k_examples() {
        let d = derive_k(&Partition::empty(), hp(1, 1)).unwrap();
        assert_eq!(d.k_tilde, ExactScalar::one());
        assert!(d.k_matches_paper);
        for h in [hp(2, 1), hp(1, 2)] {
            let d = derive_k(&pt("1"), h).unwrap();
            assert_eq!(d.k_tilde, ExactScalar::from_int(-2));
            assert_eq!(d.k_paper, ExactScalar::from_int(-1));
            assert!(d.consistent);
        }
    }
}
