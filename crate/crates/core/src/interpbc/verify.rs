//! Verification suites. Every check is exact; failures are recorded in the
//! report rather than raised.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::{ExactScalar, Rational, SparsePoly};
use crate::partitions::{enumerate_hooks, HookParams, Partition, SizeMode};
use crate::superpoly::{a_power_sum, h_point, h_power_sum, is_even_supersymmetric, res_map, squared_super_jack};

use super::grid::grid_point;
use super::interp::{eval_at, expansion_identity, interpolation_J, shimura_image, Mode, Orientation};
use super::InterpError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Vanishing,
    Normalization,
    EvenSymmetry,
    Expansion,
    ResEval,
    All,
}

impl Property {
    pub const SUITES: [Property; 5] = [
        Property::Vanishing,
        Property::Normalization,
        Property::EvenSymmetry,
        Property::Expansion,
        Property::ResEval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Vanishing => "vanishing",
            Property::Normalization => "normalization",
            Property::EvenSymmetry => "even-symmetry",
            Property::Expansion => "expansion",
            Property::ResEval => "res-eval",
            Property::All => "all",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::SUITES
            .into_iter()
            .chain([Property::All])
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySpec {
    pub property: Property,
    pub hps: Vec<HookParams>,
    /// largest `|μ|` (or `m` for the expansion suite)
    pub max_size: usize,
    /// vanishing is checked for `|λ| ≤ |μ| + window`
    pub window: usize,
    /// random points per polynomial in the res-eval suite
    pub samples: usize,
    pub seed: u64,
}

impl VerifySpec {
    pub fn new(property: Property, hps: Vec<HookParams>, max_size: usize) -> Self {
        VerifySpec {
            property,
            hps,
            max_size,
            window: 2,
            samples: 20,
            seed: 0x5eed,
        }
    }

    pub fn default_hps() -> Vec<HookParams> {
        [(1, 1), (2, 1), (1, 2), (2, 2)]
            .into_iter()
            .map(|(p, q)| HookParams { p, q })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub property: String,
    pub p: usize,
    pub q: usize,
    pub mu: Option<Partition>,
    pub lambda: Option<Partition>,
    pub mode: Option<String>,
    pub status: Status,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    fn new(property: &str, hp: HookParams, status: Status, value: impl ToString) -> Self {
        Record {
            property: property.to_string(),
            p: hp.p,
            q: hp.q,
            mu: None,
            lambda: None,
            mode: None,
            status,
            value: value.to_string(),
            detail: None,
        }
    }

    fn mu(mut self, mu: &Partition) -> Self {
        self.mu = Some(mu.clone());
        self
    }

    fn lambda(mut self, lambda: &Partition) -> Self {
        self.lambda = Some(lambda.clone());
        self
    }

    fn mode(mut self, mode: impl ToString) -> Self {
        self.mode = Some(mode.to_string());
        self
    }

    fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({},{})", self.property, self.p, self.q)?;
        if let Some(mu) = &self.mu {
            write!(f, " mu={mu}")?;
        }
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(m) = &self.mode {
            write!(f, " mode={m}")?;
        }
        write!(f, " {} value={}", self.status, self.value)?;
        if let Some(d) = &self.detail {
            write!(f, " [{d}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<Record>,
    pub notes: Vec<String>,
}

impl Report {
    /// 0 when everything passed, 1 on any failure, otherwise 3 when a
    /// degenerate fallback was used.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.status == Status::Fail) {
            1
        } else if self.records.iter().any(|r| r.status == Status::Degenerate) {
            3
        } else {
            0
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

fn error_record(property: &str, hp: HookParams, mu: &Partition, mode: Mode, e: &InterpError) -> Record {
    Record::new(property, hp, Status::Fail, "error")
        .mu(mu)
        .mode(mode)
        .detail(e.to_string())
}

fn vanishing(hp: HookParams, mu: &Partition, window: usize) -> Vec<Record> {
    let j = match interpolation_J(mu, hp, Mode::Top) {
        Ok(j) => j,
        Err(e) => return vec![error_record("vanishing", hp, mu, Mode::Top, &e)],
    };
    enumerate_hooks(hp, mu.size() + window, SizeMode::UpTo)
        .into_iter()
        .filter(|l| !l.contains(mu))
        .map(|l| {
            let v = eval_at(&j.poly, &grid_point(&l, hp).expect("enumerated hooks"));
            let status = if v.is_zero() { Status::Pass } else { Status::Fail };
            Record::new("vanishing", hp, status, v).mu(mu).lambda(&l).mode(Mode::Top)
        })
        .collect()
}

fn normalization(hp: HookParams, mu: &Partition) -> Vec<Record> {
    let paper = interpolation_J(mu, hp, Mode::Paper);
    let rec = |status, value: &ExactScalar, mode| {
        Record::new("normalization", hp, status, value).mu(mu).lambda(mu).mode(mode)
    };
    match paper {
        Ok(j) => {
            let s = match shimura_image(mu, hp) {
                Ok(s) => s,
                Err(e) => return vec![error_record("normalization", hp, mu, Mode::Paper, &e)],
            };
            let ok = j.normalization_value == j.paper_target && s.value_at_grid == s.corollary_value;
            let status = if ok { Status::Pass } else { Status::Fail };
            vec![rec(status, &j.normalization_value, Mode::Paper).detail(format!(
                "target={}; k_mu*J(grid(mu))={}; corollary={}",
                j.paper_target, s.value_at_grid, s.corollary_value
            ))]
        }
        Err(InterpError::DegenerateNormalization { .. }) => match interpolation_J(mu, hp, Mode::Top) {
            Ok(t) => vec![rec(Status::Degenerate, &t.normalization_value, Mode::Top)
                .detail("target=0; top-mode fallback")],
            Err(e) => vec![error_record("normalization", hp, mu, Mode::Top, &e)],
        },
        Err(e @ InterpError::InconsistentSystem { .. }) => {
            let detail = match interpolation_J(mu, hp, Mode::Top) {
                Ok(t) => format!(
                    "{e}; target={} unattainable; top-mode J(grid(mu))={}; transposed target={}",
                    t.paper_target, t.normalization_value, t.transposed_target
                ),
                Err(e2) => format!("{e}; top mode: {e2}"),
            };
            vec![Record::new("normalization", hp, Status::Fail, "inconsistent")
                .mu(mu)
                .lambda(mu)
                .mode(Mode::Paper)
                .detail(detail)]
        }
        Err(e) => vec![error_record("normalization", hp, mu, Mode::Paper, &e)],
    }
}

fn even_symmetry(hp: HookParams, mu: &Partition) -> Vec<Record> {
    let check = |f: &SparsePoly, mode: &str| {
        let ok = is_even_supersymmetric(f, hp);
        let status = if ok { Status::Pass } else { Status::Fail };
        Record::new("even-symmetry", hp, status, ok).mu(mu).mode(mode)
    };
    let mut out = vec![check(&squared_super_jack(mu, hp), "basis")];
    match interpolation_J(mu, hp, Mode::Top) {
        Ok(j) => out.push(check(&j.poly, "top")),
        Err(e) => out.push(error_record("even-symmetry", hp, mu, Mode::Top, &e)),
    }
    out
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())
}

fn res_eval(hp: HookParams, samples: usize, seed: u64) -> Vec<Record> {
    let mut out = Vec::new();
    for r in 1..=6u32 {
        let image = res_map(&h_power_sum(r, hp), hp).expect("variables match");
        let factor = if r % 2 == 0 {
            ExactScalar::from_ratio(1, 1 << (r - 1))
        } else {
            ExactScalar::zero()
        };
        let ok = image == a_power_sum(r, hp).scale(&factor);
        let status = if ok { Status::Pass } else { Status::Fail };
        out.push(
            Record::new("res-image", hp, status, &factor)
                .mu(&Partition::row(r as usize))
                .detail(format!("Res(p_{r}) = {image}")),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((hp.p as u64) << 32 | hp.q as u64));
    let desk = (
        vec![Rational::from_integer(1.into()); hp.p],
        vec![Rational::from_integer(2.into()); hp.q],
    );
    let mut points = vec![desk];
    for _ in 0..samples {
        let a = (0..hp.p).map(|_| random_rational(&mut rng)).collect();
        let b = (0..hp.q).map(|_| random_rational(&mut rng)).collect();
        points.push((a, b));
    }
    let two = Rational::from_integer(2.into());
    for r in [2u32, 4, 6] {
        let f = h_power_sum(r, hp);
        let g = res_map(&f, hp).expect("variables match");
        for (a, b) in &points {
            let lhs = f.eval_rational(&h_point(a, b)).expect("arity");
            let doubled: Vec<Rational> = a.iter().chain(b).map(|x| x * &two).collect();
            let rhs = g.eval_rational(&doubled).expect("arity");
            let status = if lhs == rhs { Status::Pass } else { Status::Fail };
            let show = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            out.push(
                Record::new("res-eval", hp, status, &lhs)
                    .mu(&Partition::row(r as usize))
                    .detail(format!("a=({}) b=({}) res={rhs}", show(a), show(b))),
            );
        }
    }
    out
}

fn expansion(hps: &[HookParams], max_size: usize) -> (Vec<Record>, Vec<String>) {
    let reports: Vec<_> = hps
        .par_iter()
        .flat_map_iter(|&hp| (0..=max_size).map(move |m| expansion_identity(m, hp)))
        .collect();
    let all: Vec<_> = reports.iter().flat_map(|r| r.entries.clone()).collect();
    let exact = reports.iter().all(|r| r.exact);
    let orientation = if exact { Orientation::of(&all) } else { Orientation::Neither };
    let mut records = Vec::new();
    for r in &reports {
        for e in &r.entries {
            let ok = r.exact && orientation != Orientation::Neither;
            let status = if ok { Status::Pass } else { Status::Fail };
            records.push(
                Record::new("expansion", r.hp, status, &e.e)
                    .mu(&e.nu)
                    .detail(format!(
                        "m={}; C-(1;-1)={}; e*C=1:{}; e=C:{}",
                        r.m, e.hook_product, e.reciprocal, e.direct
                    )),
            );
        }
    }
    let note = match orientation {
        Orientation::Reciprocal => "expansion orientation: reciprocal, e_nu * C-_nu(1;-1) = 1 for every nu".to_string(),
        Orientation::Direct => "expansion orientation: direct, e_nu = C-_nu(1;-1) for every nu".to_string(),
        Orientation::Both => "expansion orientation: undetermined, every C-_nu(1;-1) = 1".to_string(),
        Orientation::Neither => "expansion orientation: neither holds uniformly".to_string(),
    };
    (records, vec![note])
}

fn per_mu(spec: &VerifySpec, f: impl Fn(HookParams, &Partition) -> Vec<Record> + Sync) -> Vec<Record> {
    let tasks: Vec<(HookParams, Partition)> = spec
        .hps
        .iter()
        .flat_map(|&hp| {
            enumerate_hooks(hp, spec.max_size, SizeMode::UpTo)
                .into_iter()
                .map(move |mu| (hp, mu))
        })
        .collect();
    tasks
        .par_iter()
        .map(|(hp, mu)| f(*hp, mu))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Runs the requested suite over every `(p,q)` in the spec. The report is
/// assembled in a fixed order, independent of scheduling.
pub fn verify_properties(spec: &VerifySpec) -> Report {
    let suites: Vec<Property> = match spec.property {
        Property::All => Property::SUITES.to_vec(),
        p => vec![p],
    };
    let mut report = Report::default();
    for suite in suites {
        match suite {
            Property::Vanishing => report
                .records
                .extend(per_mu(spec, |hp, mu| vanishing(hp, mu, spec.window))),
            Property::Normalization => report.records.extend(per_mu(spec, normalization)),
            Property::EvenSymmetry => report.records.extend(per_mu(spec, even_symmetry)),
            Property::Expansion => {
                let (records, notes) = expansion(&spec.hps, spec.max_size);
                report.records.extend(records);
                report.notes.extend(notes);
            }
            Property::ResEval => {
                let recs: Vec<Vec<Record>> = spec
                    .hps
                    .par_iter()
                    .map(|&hp| res_eval(hp, spec.samples, spec.seed))
                    .collect();
                report.records.extend(recs.into_iter().flatten());
            }
            Property::All => unreachable!(),
        }
    }
    report
}
