//! Truncated Chern-root calculus on model manifolds.
//!
//! Characteristic classes are expanded as power series in Chern roots and
//! integrated against the fundamental class of a model manifold, either
//! `(ℙ^1)^d` (ring relations `h_i^2 = 0`) or `ℙ^d` (`h^{d+1} = 0`). The
//! cycle contributions of the holomorphic Lefschetz formula on `X^n` are
//! evaluated on these models and compared with the closed forms.

mod model;
mod mvseries;

pub use model::{LineSummand, ModelBundle, ModelKind, ModelManifold};
pub use mvseries::{bernoulli_numbers, exp_coeffs, todd_coeffs, MVSeries};

use num_traits::One;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::genera;
use crate::guards;
use crate::ktheory::{self, LineSymbol, Monomial};
use crate::partitions;
use crate::{QSeries, Rational, YPolynomial};

/// Exact multivariate series.
pub type MVSeriesQ = MVSeries<Rational>;

pub const MAX_LOCAL_DIM: usize = 4;
pub const MAX_LOCAL_N: usize = 6;
pub const MAX_LOCAL_TRUNC: u32 = 8;
/// Largest cycle length for [`chi_sigma_n`].
pub const MAX_CYCLE_N: usize = 16;
/// Largest order for the generating-series checks.
pub const MAX_SERIES_N: usize = 12;

/// Names `x1, ..., xd`.
pub fn root_names(prefix: &str, d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("{prefix}{i}")).collect()
}

/// `prod_j x_j / (1 - e^{-x_j})` over the given roots.
pub fn todd_class<S: Scalar>(roots: &[MVSeries<S>], vars: &[String], trunc: u32) -> Result<MVSeries<S>> {
    let coeffs = todd_coeffs::<S>(trunc as usize);
    let mut acc = MVSeries::one(vars, trunc);
    for root in roots {
        acc = &acc * &root.compose(&coeffs)?;
    }
    Ok(acc)
}

/// Coefficients in `t` of `Λ_t = prod_j (1 + t e^{x_j})`.
pub fn lambda_t<S: Scalar>(roots: &[MVSeries<S>], vars: &[String], trunc: u32) -> Result<Vec<MVSeries<S>>> {
    let mut acc = vec![MVSeries::one(vars, trunc)];
    for root in roots {
        let e = root.exp()?;
        let mut next = vec![MVSeries::zero(vars, trunc); acc.len() + 1];
        for (k, a) in acc.iter().enumerate() {
            next[k] = &next[k] + a;
            next[k + 1] = &next[k + 1] + &(a * &e);
        }
        acc = next;
    }
    Ok(acc)
}

/// Coefficients in `t` of `S_t = prod_j 1 / (1 - t e^{x_j})` through `t^t_order`.
pub fn s_t<S: Scalar>(
    roots: &[MVSeries<S>],
    vars: &[String],
    t_order: usize,
    trunc: u32,
) -> Result<Vec<MVSeries<S>>> {
    let mut acc = vec![MVSeries::zero(vars, trunc); t_order + 1];
    acc[0] = MVSeries::one(vars, trunc);
    for root in roots {
        let powers: Vec<MVSeries<S>> = (0..=t_order)
            .map(|k| root.scale(&S::from_int(k as i64)).exp())
            .collect::<Result<_>>()?;
        acc = t_series_mul(&acc, &powers, t_order);
    }
    Ok(acc)
}

/// Product of two `t`-polynomials with series coefficients, through `t^t_order`.
pub fn t_series_mul<S: Scalar>(a: &[MVSeries<S>], b: &[MVSeries<S>], t_order: usize) -> Vec<MVSeries<S>> {
    let vars = a[0].vars().to_vec();
    let trunc = a[0].trunc().min(b[0].trunc());
    let mut out = vec![MVSeries::zero(&vars, trunc); t_order + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= t_order {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

/// `t -> -t` on a `t`-polynomial.
pub fn t_negate<S: Scalar>(a: &[MVSeries<S>]) -> Vec<MVSeries<S>> {
    a.iter()
        .enumerate()
        .map(|(k, s)| if k % 2 == 0 { s.clone() } else { -s })
        .collect()
}

/// Both sides of the local identity at the diagonal of `X^n`, in the Chern
/// roots `x_1..x_d` of `TX`:
///
/// * left: `prod_j (1 - e^{-n x_j}) / (1 - e^{-x_j})`, expanded as
///   `prod_j sum_{k<n} e^{-k x_j}`;
/// * right: `n^d T(x) / T(n x)`, with the Todd series from Bernoulli numbers
///   and a series reciprocal.
pub fn cyclic_local_term(d: usize, n: usize, trunc: u32) -> Result<(MVSeriesQ, MVSeriesQ)> {
    guards::check_bound("local-term dimension d", d as u128, MAX_LOCAL_DIM as u128)?;
    guards::check_bound("local-term cycle length n", n as u128, MAX_LOCAL_N as u128)?;
    guards::check_bound("local-term truncation", trunc as u128, MAX_LOCAL_TRUNC as u128)?;
    if n == 0 {
        return Err(Error::Invalid("cycle length must be at least 1".into()));
    }
    let vars = root_names("x", d);
    let roots: Vec<MVSeriesQ> = (0..d).map(|j| MVSeries::variable(&vars, j, trunc)).collect();

    let mut lhs = MVSeries::one(&vars, trunc);
    for x in &roots {
        let mut geo = MVSeries::zero(&vars, trunc);
        for k in 0..n {
            geo = &geo + &x.scale(&Rational::from_int(-(k as i64))).exp()?;
        }
        lhs = &lhs * &geo;
    }

    let nq = Rational::from_int(n as i64);
    let scaled: Vec<MVSeriesQ> = roots.iter().map(|x| x.scale(&nq)).collect();
    let todd = todd_class(&roots, &vars, trunc)?;
    let todd_n = todd_class(&scaled, &vars, trunc)?;
    let nd = (0..d).fold(Rational::one(), |a, _| a * nq.clone());
    let rhs = (&todd * &todd_n.reciprocal()?).scale(&nd);
    Ok((lhs, rhs))
}

/// Result of a Riemann-Roch integral.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RrNumber {
    pub value: Rational,
}

impl RrNumber {
    /// True for every honest bundle; a fractional value signals a modeling
    /// error.
    pub fn is_integral(&self) -> bool {
        self.value.is_integer()
    }
}

/// `χ(M, E) = ∫_M ch(E) T(M)`.
pub fn rr_number(m: &ModelManifold, e: &ModelBundle) -> Result<RrNumber> {
    m.check_bundle(e)?;
    let ch = m.chern_character(e, 1)?;
    let todd = m.todd(1)?;
    Ok(RrNumber {
        value: m.integrate(&(&ch * &todd)),
    })
}

/// `χ_{σ_n}(X^n, E^{⊠n}) = n^{-d} ∫_X ch(ψ^n E) T(ψ^n TX)`.
pub fn chi_sigma_n(m: &ModelManifold, e: &ModelBundle, n: usize) -> Result<Rational> {
    m.check_bundle(e)?;
    check_cycle(n)?;
    let ch = m.chern_character(e, n as i64)?;
    let todd = m.todd(n as i64)?;
    Ok(m.integrate(&(&ch * &todd)) / cycle_norm(m, n))
}

fn check_cycle(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("cycle length must be at least 1".into()));
    }
    guards::check_bound("cycle length n", n as u128, MAX_CYCLE_N as u128)
}

fn cycle_norm(m: &ModelManifold, n: usize) -> Rational {
    (0..m.dim()).fold(Rational::one(), |a, _| a * Rational::from_int(n as i64))
}

/// Graded cycle contribution
/// `χ_{σ_n^a}(X^n, E_{-y}^{⊠n}) = n^{-d} ∫_X ch(Gψ^n(E_{-y})) T(ψ^n TX)`.
///
/// `Gψ^n(E_{-y})` comes from [`ktheory::graded_adams_weighted`]; summand
/// `i` of the bundle is the line `L_{i+1}` of its grading degree.
pub fn chi_sigma_n_graded(m: &ModelManifold, e: &ModelBundle, n: usize) -> Result<YPolynomial> {
    m.check_bundle(e)?;
    check_cycle(n)?;
    let lines: Vec<LineSymbol> = e
        .summands()
        .iter()
        .enumerate()
        .map(|(i, s)| LineSymbol::new(i as u32 + 1, s.degree))
        .collect();
    let image = ktheory::graded_adams_weighted(&lines, n)?;
    let todd = m.todd(n as i64)?;
    let norm = cycle_norm(m, n);
    let mut out = YPolynomial::zero();
    for (i, s) in e.summands().iter().enumerate() {
        let coeff = image.coeff(&Monomial::power(i as u32 + 1, n as u32));
        let ch = m.line_character(&s.c1, n as i64)?;
        let integral = m.integrate(&(&ch * &todd)) * Rational::from_int(s.multiplicity) / norm.clone();
        out = &out + &coeff.scale(&integral);
    }
    Ok(out)
}

/// `χ_{-y}(X, E) = sum_i (-y)^{d_i} χ(X, E_i)`.
pub fn chi_minus_y_bundle(m: &ModelManifold, e: &ModelBundle) -> Result<YPolynomial> {
    let mut out = YPolynomial::zero();
    for s in e.summands() {
        let single = ModelBundle::new(vec![LineSummand {
            degree: 0,
            ..s.clone()
        }]);
        let chi = rr_number(m, &single)?.value;
        out = &out + &ktheory::minus_y_power(s.degree).scale(&chi);
    }
    Ok(out)
}

/// Degree-`d` homogeneity of `F(x, y) = sum_i e^{y_i} prod_j T(x_j)` in
/// `d` tangent roots and `r` bundle roots: returns the degree-`d` parts of
/// `F(n x, n y)` (expanded directly in the scaled roots) and of
/// `n^d F(x, y)`.
pub fn lemma_homogeneity(d: usize, r: usize, n: usize) -> Result<(MVSeriesQ, MVSeriesQ)> {
    guards::check_bound("homogeneity dimension d", d as u128, MAX_LOCAL_DIM as u128)?;
    guards::check_bound("homogeneity rank r", r as u128, 4)?;
    check_cycle(n)?;
    let mut vars = root_names("x", d);
    vars.extend(root_names("y", r));
    let trunc = d as u32;
    let build = |scale: i64| -> Result<MVSeriesQ> {
        let s = Rational::from_int(scale);
        let tangent: Vec<MVSeriesQ> = (0..d)
            .map(|j| MVSeries::variable(&vars, j, trunc).scale(&s))
            .collect();
        let mut ch = MVSeries::zero(&vars, trunc);
        for i in 0..r {
            ch = &ch + &MVSeries::variable(&vars, d + i, trunc).scale(&s).exp()?;
        }
        Ok(&ch * &todd_class(&tangent, &vars, trunc)?)
    };
    let scaled = build(n as i64)?.homogeneous_component(trunc);
    let nd = (0..d).fold(Rational::one(), |a, _| a * Rational::from_int(n as i64));
    let base = build(1)?.homogeneous_component(trunc).scale(&nd);
    Ok((scaled, base))
}

/// A generating series computed two ways.
#[derive(Clone, Debug, PartialEq)]
pub struct RrSeriesCheck {
    /// From the cycle data of the Lefschetz formula.
    pub computed: QSeries,
    /// From the closed-form product.
    pub closed_form: QSeries,
}

impl RrSeriesCheck {
    pub fn agree(&self) -> bool {
        self.computed == self.closed_form
    }

    /// First power where the two sides differ.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.computed
            .coeffs()
            .iter()
            .zip(self.closed_form.coeffs())
            .position(|(a, b)| a != b)
    }
}

fn check_series_order(n: usize) -> Result<()> {
    guards::check_bound("series order N", n as u128, MAX_SERIES_N as u128)
}

fn integral_value(v: &Rational, what: &str) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::Invalid(format!("{what} = {v} is not an integer")));
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::Invalid(format!("{what} too large")))
}

/// Class sum `sum_{t ⊢ n} prod_l c_l^{N_l} / z_t` for `n <= order`.
fn class_sum_series(cycle_values: &[YPolynomial], order: usize) -> Result<QSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut total = YPolynomial::zero();
        for t in partitions::cycle_types(n) {
            let mut term = YPolynomial::one();
            for (l, count) in t.blocks() {
                for _ in 0..count {
                    term = &term * &cycle_values[l];
                }
            }
            let z = Rational::from_integer(t.centralizer_order().into());
            total = &total + &term.div_scalar(&z);
        }
        coeffs.push(total);
    }
    Ok(QSeries::from_coeffs(order, coeffs))
}

/// `sum_n χ(X^n / S_n, E^{⊠n} / S_n) p^n`: the class sum over cycle types
/// using `χ_{σ_l}` from [`chi_sigma_n`], against `(1 - p)^{-χ(X, E)}`.
pub fn sym_rr_series(m: &ModelManifold, e: &ModelBundle, order: usize) -> Result<RrSeriesCheck> {
    check_series_order(order)?;
    let mut cycle = vec![YPolynomial::zero()];
    for l in 1..=order {
        cycle.push(YPolynomial::constant(chi_sigma_n(m, e, l)?));
    }
    let computed = class_sum_series(&cycle, order)?;
    let chi = integral_value(&rr_number(m, e)?.value, "χ(X, E)")?;
    Ok(RrSeriesCheck {
        computed,
        closed_form: QSeries::binomial_power(chi, order),
    })
}

/// `sum_n χ(X^n, E^{⊠n} | S_n) p^n`:
/// `prod_l prod_m exp(p^{lm} χ_{σ_m}(X^m, (ψ^l E)^{⊠m}) / m)` against
/// `prod_l (1 - p^l)^{-χ(X, ψ^l E)}`.
pub fn orb_rr_series(m: &ModelManifold, e: &ModelBundle, order: usize) -> Result<RrSeriesCheck> {
    check_series_order(order)?;
    let mut computed = QSeries::one(order);
    let mut closed_form = QSeries::one(order);
    for l in 1..=order {
        let adams = e.adams(l as i64);
        let mut log = QSeries::zero(order);
        for k in 1..=order / l {
            let c = chi_sigma_n(m, &adams, k)? / Rational::from_int(k as i64);
            log = &log + &QSeries::monomial(l * k, YPolynomial::constant(c), order);
        }
        computed = &computed * &log.exp()?;

        let chi = integral_value(&rr_number(m, &adams)?.value, "χ(X, ψ^l E)")?;
        closed_form = &closed_form * &QSeries::binomial_power(chi, order).substitute_q_power(l);
    }
    Ok(RrSeriesCheck {
        computed,
        closed_form,
    })
}

/// `sum_n χ_{-y}(X^n / S_n, E^{⊠n} / S_n^a) p^n` for a graded bundle: the
/// class sum over graded cycle contributions against
/// `exp(sum_l p^l χ_{-y^l}(X, E) / l)`.
pub fn graded_sym_series(m: &ModelManifold, e: &ModelBundle, order: usize) -> Result<RrSeriesCheck> {
    check_series_order(order)?;
    let mut cycle = vec![YPolynomial::zero()];
    for l in 1..=order {
        cycle.push(chi_sigma_n_graded(m, e, l)?);
    }
    let computed = class_sum_series(&cycle, order)?;
    let genus = chi_minus_y_bundle(m, e)?;
    Ok(RrSeriesCheck {
        computed,
        closed_form: genera::sym_series_from_genus(&genus, order),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn todd_examples() {
        let v = root_names("x", 1);
        let x = MVSeriesQ::variable(&v, 0, 2);
        let t = todd_class(std::slice::from_ref(&x), &v, 2).unwrap();
        assert_eq!(t.coeff(&[0]), r(1, 1));
        assert_eq!(t.coeff(&[1]), r(1, 2));
        assert_eq!(t.coeff(&[2]), r(1, 12));

        assert_eq!(todd_class::<Rational>(&[], &v, 3).unwrap(), MVSeries::one(&v, 3));

        let t2 = todd_class(&[x.with_trunc(1), x.with_trunc(1)], &v, 1).unwrap();
        assert_eq!(t2, &MVSeries::one(&v, 1) + &x.with_trunc(1));
    }

    #[test]
    fn lambda_and_s_examples() {
        let v = root_names("x", 1);
        let x = MVSeriesQ::variable(&v, 0, 1);
        let l = lambda_t(std::slice::from_ref(&x), &v, 1).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l[0], MVSeries::one(&v, 1));
        assert_eq!(l[1], &MVSeries::one(&v, 1) + &x);

        let empty = lambda_t::<Rational>(&[], &v, 3).unwrap();
        assert_eq!(empty, vec![MVSeries::one(&v, 3)]);
    }

    #[test]
    fn s_t_times_lambda_minus_t_is_one() {
        let v = root_names("x", 2);
        let roots = vec![
            MVSeries::variable(&v, 0, 4),
            MVSeries::linear(&v, &[r(1, 1), r(-2, 1)], 4),
        ];
        let order = 4;
        let s = s_t(&roots, &v, order, 4).unwrap();
        let mut lam = lambda_t(&roots, &v, 4).unwrap();
        lam.resize(order + 1, MVSeries::zero(&v, 4));
        let prod = t_series_mul(&s, &t_negate(&lam), order);
        assert_eq!(prod[0], MVSeries::one(&v, 4));
        for k in 1..=order {
            assert!(prod[k].is_zero(), "t^{k}");
        }
    }

    #[test]
    fn lambda_is_exponential() {
        let v = root_names("x", 2);
        let a = vec![MVSeries::variable(&v, 0, 3)];
        let b = vec![MVSeries::variable(&v, 1, 3), MVSeries::linear(&v, &[r(1, 1), r(1, 1)], 3)];
        let ab: Vec<_> = a.iter().chain(b.iter()).cloned().collect();
        let lhs = lambda_t(&ab, &v, 3).unwrap();
        let rhs = t_series_mul(&lambda_t(&a, &v, 3).unwrap(), &lambda_t(&b, &v, 3).unwrap(), 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn local_term_examples() {
        let (lhs, rhs) = cyclic_local_term(1, 2, 3).unwrap();
        let v = root_names("x", 1);
        let mut want = MVSeries::zero(&v, 3);
        for (k, c) in [r(2, 1), r(-1, 1), r(1, 2), r(-1, 6)].into_iter().enumerate() {
            want.add_term(vec![k as u32], c);
        }
        assert_eq!(lhs, want);
        assert_eq!(rhs, want);

        let (l1, r1) = cyclic_local_term(3, 1, 5).unwrap();
        assert_eq!(l1, MVSeries::one(&root_names("x", 3), 5));
        assert_eq!(r1, l1);

        let (l, r) = cyclic_local_term(2, 3, 4).unwrap();
        assert_eq!(l, r);

        assert!(cyclic_local_term(5, 2, 2).is_err());
        assert!(cyclic_local_term(1, 7, 2).is_err());
        assert!(cyclic_local_term(1, 2, 9).is_err());
    }

    #[test]
    fn rr_examples() {
        let p1 = ModelManifold::p1_product(1);
        for k in -3..=3 {
            assert_eq!(rr_number(&p1, &ModelBundle::o(&p1, k)).unwrap().value, r(k + 1, 1));
        }
        assert_eq!(rr_number(&p1, &ModelBundle::o(&p1, 2)).unwrap().value, r(3, 1));
        let pt = ModelManifold::point();
        assert_eq!(rr_number(&pt, &ModelBundle::trivial(&pt, 1)).unwrap().value, r(1, 1));

        // χ(ℙ^2, O(k)) = (k+1)(k+2)/2
        let p2 = ModelManifold::projective_space(2);
        for k in -4..=3 {
            let v = rr_number(&p2, &ModelBundle::o(&p2, k)).unwrap();
            assert_eq!(v.value, r((k + 1) * (k + 2), 2));
            assert!(v.is_integral());
        }
    }

    #[test]
    fn chern_character_examples() {
        let p1 = ModelManifold::p1_product(1);
        let ch = p1.chern_character(&ModelBundle::o(&p1, 5), 1).unwrap();
        assert_eq!(ch.coeff(&[0]), r(1, 1));
        assert_eq!(ch.coeff(&[1]), r(5, 1));

        let p2 = ModelManifold::projective_space(2);
        let e = ModelBundle::new(vec![LineSummand::line(vec![1]), LineSummand::line(vec![2])]);
        let ch = p2.chern_character(&e, 1).unwrap();
        assert_eq!(ch.coeff(&[0]), r(2, 1));
        assert_eq!(ch.coeff(&[1]), r(3, 1));
        assert_eq!(ch.coeff(&[2]), r(5, 2));

        let triv = p2.chern_character(&ModelBundle::trivial(&p2, 3), 1).unwrap();
        assert_eq!(triv, MVSeries::constant(triv.vars(), r(3, 1), 2));
    }

    #[test]
    fn chi_sigma_examples() {
        let p1 = ModelManifold::p1_product(1);
        for k in -3..=3 {
            let e = ModelBundle::o(&p1, k);
            assert_eq!(chi_sigma_n(&p1, &e, 2).unwrap(), r(k + 1, 1));
            assert_eq!(chi_sigma_n(&p1, &e, 1).unwrap(), rr_number(&p1, &e).unwrap().value);
        }
        let p1sq = ModelManifold::p1_product(2);
        let e = ModelBundle::new(vec![LineSummand::line(vec![2, -1])]);
        assert_eq!(chi_sigma_n(&p1sq, &e, 3).unwrap(), r(0, 1));
        let e = ModelBundle::new(vec![LineSummand::line(vec![1, 3])]);
        assert_eq!(chi_sigma_n(&p1sq, &e, 3).unwrap(), r(2 * 4, 1));
    }

    #[test]
    fn homogeneity() {
        for d in 1..=3 {
            for n in 1..=4 {
                let (a, b) = lemma_homogeneity(d, 2, n).unwrap();
                assert_eq!(a, b, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn theorem_series_examples() {
        let p1 = ModelManifold::p1_product(1);
        let sym = sym_rr_series(&p1, &ModelBundle::o(&p1, 1), 6).unwrap();
        assert!(sym.agree());
        assert_eq!(
            sym.computed.eval_at_one(),
            (1..=7).map(Rational::from_int).collect::<Vec<_>>()
        );

        let orb = orb_rr_series(&p1, &ModelBundle::o(&p1, 0), 5).unwrap();
        assert!(orb.agree());
        assert_eq!(
            orb.computed.eval_at_one(),
            [1, 1, 2, 3, 5, 7].iter().map(|&k| Rational::from_int(k)).collect::<Vec<_>>()
        );

        let orb1 = orb_rr_series(&p1, &ModelBundle::o(&p1, 1), 3).unwrap();
        assert!(orb1.agree());
        assert_eq!(orb1.computed.coeff(2).unwrap(), &YPolynomial::constant(r(6, 1)));
    }

    #[test]
    fn graded_series_examples() {
        let p1 = ModelManifold::p1_product(1);
        let cot = ModelBundle::cotangent_exterior(&p1);
        assert_eq!(chi_minus_y_bundle(&p1, &cot).unwrap(), YPolynomial::from_y_coeffs(&[1, 1]));
        let g = graded_sym_series(&p1, &cot, 4).unwrap();
        assert!(g.agree());

        let tan = ModelBundle::tangent_exterior(&p1);
        assert_eq!(chi_minus_y_bundle(&p1, &tan).unwrap(), YPolynomial::from_y_coeffs(&[1, -3]));
        assert!(graded_sym_series(&p1, &tan, 4).unwrap().agree());

        let ungraded = ModelBundle::o(&p1, 2);
        let g = graded_sym_series(&p1, &ungraded, 4).unwrap();
        let s = sym_rr_series(&p1, &ungraded, 4).unwrap();
        assert_eq!(g.computed, s.computed);
    }

    #[test]
    fn series_order_guard() {
        let p1 = ModelManifold::p1_product(1);
        assert!(sym_rr_series(&p1, &ModelBundle::o(&p1, 1), 13).is_err());
    }
}
