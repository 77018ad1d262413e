//! Verification suites: each one compares a closed form with an independent
//! computation over a grid of inputs and stops at the first counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::genera::{self, WeightConvention};
use crate::hodge::{self, HodgeDiamond, Theory};
use crate::ktheory::{self, LineSymbol};
use crate::lefschetz::{self, ModelBundle, ModelManifold};
use crate::{QSeries, Rational, YPolynomial};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Suite {
    Macdonald,
    EulerBrute,
    OracleSym,
    Delocalized,
    Adams,
    GradedAdams,
    LocalTerm,
    LemmaScaling,
    RrSeries,
    GradedClosure,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Macdonald,
        Suite::EulerBrute,
        Suite::OracleSym,
        Suite::Delocalized,
        Suite::Adams,
        Suite::GradedAdams,
        Suite::LocalTerm,
        Suite::LemmaScaling,
        Suite::RrSeries,
        Suite::GradedClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Macdonald => "macdonald",
            Suite::EulerBrute => "euler-brute",
            Suite::OracleSym => "oracle-sym",
            Suite::Delocalized => "delocalized",
            Suite::Adams => "adams",
            Suite::GradedAdams => "graded-adams",
            Suite::LocalTerm => "local-term",
            Suite::LemmaScaling => "lemma-scaling",
            Suite::RrSeries => "rr-series",
            Suite::GradedClosure => "graded-closure",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides of a suite's default grid.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub seed: Option<u64>,
    /// Restricts `adams` / `graded-adams` to one rank.
    pub rank: Option<usize>,
    /// Overrides the largest `n` (or series order) of a suite.
    pub max_n: Option<usize>,
    /// Largest truncation order for `local-term`.
    pub trunc: Option<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub inputs: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.inputs, self.expected, self.found)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub summary: String,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: ok ({} checks): {}", self.suite, self.checks, self.summary),
            Some(c) => write!(f, "{}: FAILED after {} checks: {}", self.suite, self.checks, c),
        }
    }
}

/// Accumulates checks until the first mismatch.
struct Checker {
    checks: usize,
    failure: Option<Counterexample>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checks: 0,
            failure: None,
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    /// Records one equality; returns false on mismatch.
    fn eq<T: PartialEq + fmt::Debug>(&mut self, inputs: impl FnOnce() -> String, expected: &T, found: &T) -> bool {
        if self.done() {
            return false;
        }
        self.checks += 1;
        if expected != found {
            self.failure = Some(Counterexample {
                inputs: inputs(),
                expected: format!("{expected:?}"),
                found: format!("{found:?}"),
            });
            return false;
        }
        true
    }

    fn finish(self, suite: Suite, summary: String) -> SuiteReport {
        SuiteReport {
            suite,
            checks: self.checks,
            summary,
            counterexample: self.failure,
        }
    }
}

fn poly_text(p: &YPolynomial) -> String {
    p.to_string()
}

fn series_text(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(poly_text).collect()
}

/// Runs one suite.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Macdonald => macdonald(cfg),
        Suite::EulerBrute => euler_brute(cfg),
        Suite::OracleSym => oracle_sym(cfg),
        Suite::Delocalized => delocalized(cfg),
        Suite::Adams => adams(cfg),
        Suite::GradedAdams => graded_adams(cfg),
        Suite::LocalTerm => local_term(cfg),
        Suite::LemmaScaling => lemma_scaling(cfg),
        Suite::RrSeries => rr_series(cfg),
        Suite::GradedClosure => graded_closure(cfg),
    }
}

/// Runs every suite on its own thread; reports come back in
/// [`Suite::ALL`] order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Result<SuiteReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = Suite::ALL
            .into_iter()
            .map(|s| scope.spawn(move || run(s, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn ints(v: impl IntoIterator<Item = i64>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_int).collect()
}

/// Symmetric-product Euler numbers: the binomial closed form, the
/// exponential form, and the Euler number of the graded-symmetric power.
pub fn macdonald(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let order = cfg.max_n.unwrap_or(5);
    let mut c = Checker::new();

    let p1 = genera::euler_sym_series(2, order).eval_at_one();
    c.eq(|| format!("χ=2 through q^{order}"), &ints(1..=order as i64 + 1), &p1);

    let samples = [
        HodgeDiamond::point(),
        HodgeDiamond::projective_line(),
        HodgeDiamond::elliptic_curve(),
        HodgeDiamond::projective_space(2),
        HodgeDiamond::k3(),
    ];
    for h in &samples {
        let chi = h.euler_number();
        let closed = genera::euler_sym_series(chi, order);
        let via_exp = genera::sym_series_from_genus(&YPolynomial::constant(Rational::from_int(chi)), order);
        c.eq(|| format!("χ={chi} binomial vs exponential"), &via_exp.eval_at_one(), &closed.eval_at_one());
        let v = h.cohomology();
        for n in 0..=order.min(3) {
            let power = hodge::super_symmetric_power(&v, n)?;
            c.eq(
                || format!("χ={chi} q^{n} vs Euler number of S^{n} H*"),
                &closed.eval_at_one()[n],
                &Rational::from_int(power.euler_number()),
            );
        }
    }
    Ok(c.finish(Suite::Macdonald, format!("(1-q)^(-χ) matches graded-symmetric powers through q^{order}")))
}

/// Orbifold Euler numbers by commuting pairs, by conjugacy classes and by
/// the product formula.
pub fn euler_brute(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(5);
    let mut c = Checker::new();
    for h in [HodgeDiamond::projective_line(), HodgeDiamond::elliptic_curve(), HodgeDiamond::point()] {
        let chi = h.euler_number();
        let product = genera::euler_orb_coeffs(chi, max_n);
        for n in 1..=max_n {
            let brute = genera::euler_orb_bruteforce(&h, n)?;
            let classes = genera::euler_orb_class_sum(chi, n);
            c.eq(|| format!("χ={chi}, n={n}: pairs vs product"), &Rational::from_integer(product[n].clone()), &brute);
            c.eq(|| format!("χ={chi}, n={n}: classes vs product"), &product[n], &classes);
        }
    }
    Ok(c.finish(
        Suite::EulerBrute,
        format!("commuting pairs = class sum = product formula for n ≤ {max_n}"),
    ))
}

/// A random diamond with `d ≤ 2` and total dimension in `1..=4`.
pub fn random_diamond(rng: &mut ChaCha8Rng) -> HodgeDiamond {
    let d = rng.gen_range(0..=2usize);
    let total = rng.gen_range(1..=4u64);
    let mut h = vec![vec![0u64; d + 1]; d + 1];
    for _ in 0..total {
        let p = rng.gen_range(0..=d);
        let q = rng.gen_range(0..=d);
        h[p][q] += 1;
    }
    HodgeDiamond::new(d, h, Theory::Hodge).expect("square by construction")
}

/// Closed-form `χ_{-y}` of symmetric products against basis enumeration,
/// and bigraded dimensions against the Molien average.
pub fn oracle_sym(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let seed = cfg.seed.unwrap_or(DEFAULT_SEED);
    let max_n = cfg.max_n.unwrap_or(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checker::new();
    for trial in 0..20 {
        let h = random_diamond(&mut rng);
        let v = h.cohomology();
        let closed = genera::chiy_sym_series(&h, max_n)?;
        for n in 0..=max_n {
            let power = hodge::super_symmetric_power(&v, n)?;
            let label = || format!("trial {trial}, diamond {:?}, n={n}", h.rows());
            c.eq(label, closed.coeff(n)?, &power.chi_minus_y());
            c.eq(label, &power.graded_dimension(), &hodge::molien_average(&v, n));
        }
    }
    Ok(c.finish(
        Suite::OracleSym,
        format!("20 random diamonds (seed {seed}), n ≤ {max_n}: closed form = S^n enumeration = Molien average"),
    ))
}

/// Delocalized class sums against the orbifold closed form.
pub fn delocalized(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(6);
    let mut c = Checker::new();
    let diamonds = [
        HodgeDiamond::projective_line(),
        HodgeDiamond::elliptic_curve(),
        HodgeDiamond::projective_space(2),
    ];
    for h in &diamonds {
        let closed = genera::chiy_orb_series(h, max_n)?;
        for n in 0..=max_n {
            let sum = genera::chiy_orb_delocalized(h, n, WeightConvention::PositiveY)?;
            c.eq(|| format!("diamond {:?}, n={n}", h.rows()), closed.coeff(n)?, &sum);
        }
    }
    let b = HodgeDiamond::projective_line_b_side();
    let closed = genera::chihat_orb_series(&b, max_n)?;
    for n in 0..=max_n {
        let sum = genera::chihat_orb_delocalized(&b, n, WeightConvention::PositiveY)?;
        c.eq(|| format!("b-side ℙ^1, n={n}"), closed.coeff(n)?, &sum);
    }
    Ok(c.finish(
        Suite::Delocalized,
        format!("delocalized class sums = orbifold closed form for n ≤ {max_n}"),
    ))
}

fn ranks(cfg: &VerifyConfig, default_max: usize) -> Vec<usize> {
    match cfg.rank {
        Some(r) => vec![r],
        None => (1..=default_max).collect(),
    }
}

fn check_orbits(c: &mut Checker, lines: &[LineSymbol], n: usize, graded: bool) -> Result<()> {
    let report = ktheory::character_orbit_check(lines, n, graded)?;
    for o in report.nonfixed() {
        c.eq(
            || format!("degrees {:?}, n={n}, orbit of {:?}", degrees(lines), o.representative),
            &0,
            &o.block_trace(),
        );
    }
    c.eq(|| format!("degrees {:?}, n={n}: character consistency", degrees(lines)), &true, &report.all_consistent());
    Ok(())
}

fn degrees(lines: &[LineSymbol]) -> Vec<i64> {
    lines.iter().map(|l| l.degree).collect()
}

fn within_cells(r: usize, n: usize, limit: u128) -> bool {
    crate::guards::saturating_pow(r as u128, n as u32) <= limit
}

/// `φ_{σ_n}(E^{⊗n}) = ψ^n(E)` with zero traces on non-fixed orbits.
pub fn adams(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(8);
    let mut c = Checker::new();
    for r in ranks(cfg, 4) {
        let lines = ktheory::even_lines(r);
        for n in 1..=max_n {
            if !within_cells(r, n, ktheory::MAX_TENSOR_CELLS) {
                continue;
            }
            let phi = ktheory::phi_cycle_tensor(&lines, n, false)?;
            let psi = ktheory::adams(&lines, n)?;
            c.eq(|| format!("rank {r}, n={n}"), &psi.to_string(), &phi.to_string());
            if within_cells(r, n, ktheory::MAX_CHARACTER_CELLS) {
                check_orbits(&mut c, &lines, n, false)?;
            }
        }
    }
    Ok(c.finish(Suite::Adams, format!("all orbit traces zero; φ = ψ^n for n ≤ {max_n}")))
}

/// Graded version with Koszul signs, over every degree assignment in
/// `{0, 1, 2}`.
pub fn graded_adams(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(6);
    let mut c = Checker::new();
    for r in ranks(cfg, 3) {
        for code in 0..3usize.pow(r as u32) {
            let degs: Vec<i64> = (0..r).map(|i| (code / 3usize.pow(i as u32) % 3) as i64).collect();
            let lines = ktheory::graded_lines(&degs);
            for n in 1..=max_n {
                if !within_cells(r, n, ktheory::MAX_TENSOR_CELLS) {
                    continue;
                }
                let phi = ktheory::phi_cycle_tensor(&lines, n, true)?;
                let psi = ktheory::graded_adams(&lines, n)?;
                c.eq(|| format!("degrees {degs:?}, n={n}"), &psi.to_string(), &phi.to_string());
                let phi_y = ktheory::phi_cycle_tensor_weighted(&lines, n)?;
                let psi_y = ktheory::graded_adams_weighted(&lines, n)?;
                c.eq(|| format!("degrees {degs:?}, n={n}, y-weighted"), &psi_y.to_string(), &phi_y.to_string());
                if within_cells(r, n, ktheory::MAX_CHARACTER_CELLS) {
                    check_orbits(&mut c, &lines, n, true)?;
                }
            }
        }
    }
    Ok(c.finish(
        Suite::GradedAdams,
        format!("all orbit traces zero; φ = Gψ^n with signs (-1)^((n-1)d) for n ≤ {max_n}"),
    ))
}

/// The cyclic local term against `n^d T(x) / T(nx)`.
pub fn local_term(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(5);
    let max_trunc = cfg.trunc.unwrap_or(6);
    let mut c = Checker::new();
    for d in 1..=3 {
        for n in 1..=max_n {
            for trunc in 0..=max_trunc {
                let (lhs, rhs) = lefschetz::cyclic_local_term(d, n, trunc)?;
                c.eq(|| format!("d={d}, n={n}, trunc={trunc}"), &lhs, &rhs);
            }
        }
    }
    Ok(c.finish(Suite::LocalTerm, format!("lhs = rhs for d ≤ 3, n ≤ {max_n}, trunc ≤ {max_trunc}")))
}

/// Every model instance of the scaling lemma.
pub fn lemma_instances() -> Vec<(ModelManifold, ModelBundle)> {
    let mut out = Vec::new();
    let p1 = ModelManifold::p1_product(1);
    for k in -3..=3 {
        out.push((p1.clone(), ModelBundle::o(&p1, k)));
    }
    let p2 = ModelManifold::projective_space(2);
    for k in -3..=3 {
        out.push((p2.clone(), ModelBundle::o(&p2, k)));
    }
    let sq = ModelManifold::p1_product(2);
    for a in -2..=2 {
        for b in -2..=2 {
            out.push((sq.clone(), ModelBundle::new(vec![lefschetz::LineSummand::line(vec![a, b])])));
        }
    }
    let p3 = ModelManifold::projective_space(3);
    out.push((p3.clone(), ModelBundle::o(&p3, 1)));
    out.push((p3.clone(), ModelBundle::cotangent_exterior(&p3)));
    let cube = ModelManifold::p1_product(3);
    out.push((cube.clone(), ModelBundle::new(vec![lefschetz::LineSummand::line(vec![1, -1, 2])])));
    out
}

/// `χ_{σ_n} = χ` on model instances, integrality, and degree-`d`
/// homogeneity.
pub fn lemma_scaling(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let max_n = cfg.max_n.unwrap_or(6);
    let mut c = Checker::new();
    for (m, e) in lemma_instances() {
        let rr = lefschetz::rr_number(&m, &e)?;
        c.eq(|| format!("{m}, {e:?}: integrality of {}", rr.value), &true, &rr.is_integral());
        for n in 1..=max_n {
            let s = lefschetz::chi_sigma_n(&m, &e, n)?;
            c.eq(|| format!("{m}, {e:?}, n={n}"), &rr.value, &s);
        }
    }
    for d in 1..=3 {
        for r in 0..=2 {
            for n in 1..=max_n {
                let (scaled, base) = lefschetz::lemma_homogeneity(d, r, n)?;
                c.eq(|| format!("homogeneity d={d}, r={r}, n={n}"), &base, &scaled);
            }
        }
    }
    Ok(c.finish(
        Suite::LemmaScaling,
        format!("χ_σn = χ on {} model bundles for n ≤ {max_n}; homogeneity holds", lemma_instances().len()),
    ))
}

/// Number of partitions of `n` into parts of size at most `k`.
fn partitions_at_most(n: usize, k: usize, memo: &mut Vec<Vec<Option<u64>>>) -> u64 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    if let Some(v) = memo[n][k] {
        return v;
    }
    let v = partitions_at_most(n, k - 1, memo) + if k <= n { partitions_at_most(n - k, k, memo) } else { 0 };
    memo[n][k] = Some(v);
    v
}

/// Partition numbers `p(0..=n)` from the recursion on the largest part.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut memo = vec![vec![None; n + 1]; n + 1];
    (0..=n).map(|m| partitions_at_most(m, m, &mut memo)).collect()
}

fn binomial_oracle(chi: i64, order: usize) -> Vec<Rational> {
    // [p^n] (1-p)^{-χ} = χ(χ+1)...(χ+n-1)/n!
    let mut out = vec![Rational::from_int(1)];
    for n in 1..=order {
        let prev = out[n - 1].clone();
        out.push(prev * Rational::from_int(chi + n as i64 - 1) / Rational::from_int(n as i64));
    }
    out
}

/// Both symmetric-product theorems on model manifolds.
pub fn rr_series(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let order = cfg.max_n.unwrap_or(8);
    let mut c = Checker::new();
    let p1 = ModelManifold::p1_product(1);

    let sym = lefschetz::sym_rr_series(&p1, &ModelBundle::o(&p1, 1), order)?;
    c.eq(|| format!("sym (ℙ^1, O(1)) through p^{order}"), &binomial_oracle(2, order), &sym.computed.eval_at_one());

    let orb = lefschetz::orb_rr_series(&p1, &ModelBundle::o(&p1, 0), order)?;
    let parts: Vec<Rational> = partition_numbers(order)
        .into_iter()
        .map(|p| Rational::from_integer(BigInt::from(p)))
        .collect();
    c.eq(|| format!("orb (ℙ^1, O(0)) through p^{order}"), &parts, &orb.computed.eval_at_one());

    for (m, e) in lemma_instances() {
        let sym = lefschetz::sym_rr_series(&m, &e, order)?;
        c.eq(|| format!("sym {m}, {e:?}"), &series_text(&sym.closed_form), &series_text(&sym.computed));
        let orb = lefschetz::orb_rr_series(&m, &e, order.min(6))?;
        c.eq(|| format!("orb {m}, {e:?}"), &series_text(&orb.closed_form), &series_text(&orb.computed));
    }
    Ok(c.finish(
        Suite::RrSeries,
        format!("cycle-data series = closed-form products through p^{order}"),
    ))
}

/// Graded bundles `Λ_{-y} T*` and `Λ_{-y} T` recover the `χ_y` and `χ̂_y`
/// series of the underlying manifold.
pub fn graded_closure(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let order = cfg.max_n.unwrap_or(5);
    let mut c = Checker::new();
    let p1 = ModelManifold::p1_product(1);

    let tan = ModelBundle::tangent_exterior(&p1);
    let hat = lefschetz::chi_minus_y_bundle(&p1, &tan)?;
    c.eq(|| "χ̂_{-y}(ℙ^1)".into(), &YPolynomial::from_y_coeffs(&[1, -3]), &hat);

    let models = [
        (p1.clone(), HodgeDiamond::projective_line(), Some(HodgeDiamond::projective_line_b_side())),
        (ModelManifold::projective_space(2), HodgeDiamond::projective_space(2), None),
        (ModelManifold::p1_product(2), p1_square(), None),
    ];
    for (m, h, b) in &models {
        let cot = lefschetz::graded_sym_series(m, &ModelBundle::cotangent_exterior(m), order)?;
        let want = genera::chiy_sym_series(h, order)?;
        c.eq(|| format!("{m}: Λ_(-y)T* vs χ_y series"), &series_text(&want), &series_text(&cot.computed));
        c.eq(|| format!("{m}: Λ_(-y)T* closed form"), &series_text(&cot.closed_form), &series_text(&cot.computed));

        let tan = lefschetz::graded_sym_series(m, &ModelBundle::tangent_exterior(m), order)?;
        c.eq(|| format!("{m}: Λ_(-y)T closed form"), &series_text(&tan.closed_form), &series_text(&tan.computed));
        if let Some(b) = b {
            let want = genera::chihat_sym_series(b, order)?;
            c.eq(|| format!("{m}: Λ_(-y)T vs χ̂_y series"), &series_text(&want), &series_text(&tan.computed));
        }
    }
    Ok(c.finish(
        Suite::GradedClosure,
        format!("graded cycle data reproduces χ_y and χ̂_y series through q^{order}"),
    ))
}

fn p1_square() -> HodgeDiamond {
    HodgeDiamond::new(2, vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]], Theory::Hodge).expect("square")
}
