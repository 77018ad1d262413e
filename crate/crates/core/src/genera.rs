//! Generating functions of Euler numbers and `χ_{-y}` / `χ̂_{-y}` genera of
//! symmetric products and symmetric-group orbifolds.
//!
//! The Euler flavors work on integers directly. The genus flavors share one
//! implementation that takes the input Laurent polynomial (`χ_{-y}` or
//! `χ̂_{-y}`) and the dimension; the Hodge/b-side tag only selects which
//! diamonds are accepted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::guards;
use crate::hodge::{HodgeDiamond, Theory};
use crate::partitions::{self, CycleType};
use crate::{QSeries, Rational, Scalar, YPolynomial};

/// Largest `n` for [`euler_orb_bruteforce`].
pub const MAX_BRUTEFORCE_N: usize = 6;
/// Largest `n` for the delocalized class sums.
pub const MAX_DELOCALIZED_N: usize = 12;

/// Which generating function to compute.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    EulerSym,
    EulerOrb,
    ChiySym,
    ChiyOrb,
    ChihatSym,
    ChihatOrb,
}

impl Flavor {
    pub const ALL: [Flavor; 6] = [
        Flavor::EulerSym,
        Flavor::EulerOrb,
        Flavor::ChiySym,
        Flavor::ChiyOrb,
        Flavor::ChihatSym,
        Flavor::ChihatOrb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::EulerSym => "euler-sym",
            Flavor::EulerOrb => "euler-orb",
            Flavor::ChiySym => "chiy-sym",
            Flavor::ChiyOrb => "chiy-orb",
            Flavor::ChihatSym => "chihat-sym",
            Flavor::ChihatOrb => "chihat-orb",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown flavor {s}")))
    }
}

/// How the twisted-sector weight `(-y)^{F_g}` is realized.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum WeightConvention {
    /// `y^{F_g}`; agrees with the closed-form orbifold series.
    #[default]
    PositiveY,
    /// `(-1)^{F_g} y^{F_g}`; only defined when `F_g` is an integer.
    MinusY,
}

impl WeightConvention {
    pub fn name(self) -> &'static str {
        match self {
            WeightConvention::PositiveY => "positive-y",
            WeightConvention::MinusY => "minus-y",
        }
    }
}

impl FromStr for WeightConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive-y" => Ok(WeightConvention::PositiveY),
            "minus-y" => Ok(WeightConvention::MinusY),
            _ => Err(Error::Invalid(format!("unknown weight convention {s}"))),
        }
    }
}

/// The shift `F_g` of a twisted sector, stored as a count of half units
/// (`u`-exponent quanta).
///
/// For a permutation of cycle type `(N_l)` acting on `X^n` with
/// `dim X = d`, each `l`-cycle rotates `(l-1) d` normal directions with
/// angles summing to `π (l-1) d`, so `F_g = sum_l N_l (l-1) d / 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FermionicShift {
    half_units: u64,
}

impl FermionicShift {
    pub fn for_cycle_type(t: &CycleType, dim: usize) -> Self {
        let half_units = t
            .blocks()
            .map(|(l, c)| (c * (l - 1) * dim) as u64)
            .sum();
        FermionicShift { half_units }
    }

    /// `2 F_g`.
    pub fn half_units(self) -> u64 {
        self.half_units
    }

    pub fn is_integral(self) -> bool {
        self.half_units.is_multiple_of(2)
    }

    /// `(-y)^{F_g}` under `convention`.
    pub fn weight(self, convention: WeightConvention) -> Result<YPolynomial> {
        let u = YPolynomial::monomial(self.half_units as i64, Rational::one());
        match convention {
            WeightConvention::PositiveY => Ok(u),
            WeightConvention::MinusY => {
                if !self.is_integral() {
                    return Err(Error::Invalid(format!(
                        "(-y)^F has no real value for half-integer F = {}/2",
                        self.half_units
                    )));
                }
                if (self.half_units / 2) % 2 == 1 {
                    Ok(-u)
                } else {
                    Ok(u)
                }
            }
        }
    }
}

impl fmt::Display for FermionicShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.half_units / 2)
        } else {
            write!(f, "{}/2", self.half_units)
        }
    }
}

/// A full request, as issued by the command line.
#[derive(Clone, Debug)]
pub struct GenusSeriesRequest {
    pub diamond: HodgeDiamond,
    pub max_n: usize,
    pub flavor: Flavor,
}

impl GenusSeriesRequest {
    pub fn compute(&self) -> Result<QSeries> {
        let h = &self.diamond;
        let n = self.max_n;
        match self.flavor {
            Flavor::EulerSym => Ok(euler_sym_series(h.euler_number(), n)),
            Flavor::EulerOrb => Ok(euler_orb_series(h.euler_number(), n)),
            Flavor::ChiySym => chiy_sym_series(h, n),
            Flavor::ChiyOrb => chiy_orb_series(h, n),
            Flavor::ChihatSym => chihat_sym_series(h, n),
            Flavor::ChihatOrb => chihat_orb_series(h, n),
        }
    }
}

fn require_theory(h: &HodgeDiamond, expected: Theory) -> Result<()> {
    if h.theory() == expected {
        Ok(())
    } else {
        Err(Error::TheoryMismatch {
            expected: expected.name(),
            found: h.theory().name(),
        })
    }
}

/// Coefficients of `(1 - q)^{-chi}` through `q^n`.
pub fn euler_sym_coeffs(chi: i64, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a = BigInt::one();
    out.push(a.clone());
    for k in 1..=n {
        a = a * BigInt::from(chi + k as i64 - 1) / BigInt::from(k);
        out.push(a.clone());
    }
    out
}

/// Coefficients of `prod_{l>=1} (1 - q^l)^{-chi}` through `q^n`.
pub fn euler_orb_coeffs(chi: i64, n: usize) -> Vec<BigInt> {
    let base = euler_sym_coeffs(chi, n);
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for l in 1..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in base.iter().enumerate() {
                let k = i + m * l;
                if k > n {
                    break;
                }
                next[k] += a * b;
            }
        }
        acc = next;
    }
    acc
}

fn integer_series(coeffs: Vec<BigInt>) -> QSeries {
    let trunc = coeffs.len() - 1;
    QSeries::from_scalars(trunc, coeffs.into_iter().map(Rational::from_integer))
}

/// `sum χ(X^{(n)}) q^n = (1 - q)^{-χ(X)}`.
pub fn euler_sym_series(chi: i64, n: usize) -> QSeries {
    integer_series(euler_sym_coeffs(chi, n))
}

/// `sum χ(X^n, S_n) q^n = prod_l (1 - q^l)^{-χ(X)}`.
pub fn euler_orb_series(chi: i64, n: usize) -> QSeries {
    integer_series(euler_orb_coeffs(chi, n))
}

/// Orbifold Euler number as a class sum: `sum_[g] χ((X^n)^g / Z_g)` with
/// `(X^n)^g / Z_g = prod_l X^{(N_l)}`.
pub fn euler_orb_class_sum(chi: i64, n: usize) -> BigInt {
    let sym = euler_sym_coeffs(chi, n);
    partitions::cycle_types(n)
        .iter()
        .map(|t| t.blocks().map(|(_, c)| sym[c].clone()).product::<BigInt>())
        .sum()
}

/// Orbifold Euler number by commuting pairs:
/// `(1/n!) sum_{gh=hg} χ((X^n)^{<g,h>})`, where the common fixed locus is
/// `X^k` for `k` the number of `<g,h>`-orbits on `{1..n}`.
pub fn euler_orb_bruteforce(h: &HodgeDiamond, n: usize) -> Result<Rational> {
    guards::check_bound("brute-force orbifold size n", n as u128, MAX_BRUTEFORCE_N as u128)?;
    let chi = BigInt::from(h.euler_number());
    let mut sum = BigInt::zero();
    for (g, k) in partitions::commuting_pairs(n)? {
        let orbits = partitions::orbit_count(n, &[&g, &k]);
        sum += chi.pow(orbits as u32);
    }
    Ok(Rational::new(sum, partitions::factorial(n).into()))
}

/// `exp(sum_{l=1}^n P(y^l) q^l / l)` for an input genus `P`.
pub fn sym_series_from_genus(genus: &YPolynomial, n: usize) -> QSeries {
    let mut log = QSeries::zero(n);
    for l in 1..=n {
        let c = genus
            .substitute_power(l as u32)
            .div_scalar(&Rational::from_int(l as i64));
        log = &log + &QSeries::monomial(l, c, n);
    }
    log.exp().expect("log series has zero constant term")
}

/// `exp(sum_l (q^l / l) P(y^l) / (1 - (y^{d/2} q)^l))` truncated at `q^n`.
pub fn orb_series_from_genus(genus: &YPolynomial, dim: usize, n: usize) -> QSeries {
    let mut log = QSeries::zero(n);
    for l in 1..=n {
        let base = genus
            .substitute_power(l as u32)
            .div_scalar(&Rational::from_int(l as i64));
        // (y^{d/2} q)^{lm} = u^{d l m} q^{lm}
        let mut m = 0;
        while l * (m + 1) <= n {
            let c = base.shift_u((dim * l * m) as i64);
            log = &log + &QSeries::monomial(l * (m + 1), c, n);
            m += 1;
        }
    }
    log.exp().expect("log series has zero constant term")
}

/// Delocalized class sum
/// `sum_{t ⊢ n} (-y)^{F_t} prod_l [q^{N_l}] sym_series(P)`.
pub fn delocalized_from_genus(
    genus: &YPolynomial,
    dim: usize,
    n: usize,
    convention: WeightConvention,
) -> Result<YPolynomial> {
    guards::check_bound("delocalized sum size n", n as u128, MAX_DELOCALIZED_N as u128)?;
    let sym = sym_series_from_genus(genus, n);
    let mut total = YPolynomial::zero();
    for t in partitions::cycle_types(n) {
        let mut term = FermionicShift::for_cycle_type(&t, dim).weight(convention)?;
        for (_, c) in t.blocks() {
            term = &term * sym.coeff(c)?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `sum_n χ_{-y}(X^{(n)}) q^n`.
pub fn chiy_sym_series(h: &HodgeDiamond, n: usize) -> Result<QSeries> {
    require_theory(h, Theory::Hodge)?;
    Ok(sym_series_from_genus(&h.chi_minus_y(), n))
}

/// `sum_n χ_{-y}(X^n, S_n) q^n`.
pub fn chiy_orb_series(h: &HodgeDiamond, n: usize) -> Result<QSeries> {
    require_theory(h, Theory::Hodge)?;
    Ok(orb_series_from_genus(&h.chi_minus_y(), h.dim(), n))
}

/// `χ_{-y}(X^n, S_n)` as a sum over conjugacy classes.
pub fn chiy_orb_delocalized(
    h: &HodgeDiamond,
    n: usize,
    convention: WeightConvention,
) -> Result<YPolynomial> {
    require_theory(h, Theory::Hodge)?;
    delocalized_from_genus(&h.chi_minus_y(), h.dim(), n, convention)
}

/// `sum_n χ̂_{-y}(X^{(n)}) q^n`; needs a b-side diamond.
pub fn chihat_sym_series(h: &HodgeDiamond, n: usize) -> Result<QSeries> {
    require_theory(h, Theory::BSide)?;
    Ok(sym_series_from_genus(&h.chi_minus_y(), n))
}

/// `sum_n χ̂_{-y}(X^n, S_n) q^n`; needs a b-side diamond.
pub fn chihat_orb_series(h: &HodgeDiamond, n: usize) -> Result<QSeries> {
    require_theory(h, Theory::BSide)?;
    Ok(orb_series_from_genus(&h.chi_minus_y(), h.dim(), n))
}

/// `χ̂_{-y}(X^n, S_n)` as a sum over conjugacy classes.
pub fn chihat_orb_delocalized(
    h: &HodgeDiamond,
    n: usize,
    convention: WeightConvention,
) -> Result<YPolynomial> {
    require_theory(h, Theory::BSide)?;
    delocalized_from_genus(&h.chi_minus_y(), h.dim(), n, convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::super_symmetric_power;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_int(c)).collect()
    }

    fn y(c: &[i64]) -> YPolynomial {
        YPolynomial::from_y_coeffs(c)
    }

    fn u_poly(c: &[i64]) -> YPolynomial {
        YPolynomial::from_terms(c.iter().enumerate().map(|(e, &v)| (e as i64, Rational::from_int(v))))
    }

    /// p(n) by Euler's pentagonal recurrence.
    fn partition_numbers(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p
    }

    #[test]
    fn euler_sym_examples() {
        assert_eq!(euler_sym_series(2, 2).eval_at_one(), ints(&[1, 2, 3]));
        let p2 = super_symmetric_power(&HodgeDiamond::projective_line().cohomology(), 2).unwrap();
        assert_eq!(p2.euler_number(), 3);
        assert_eq!(euler_sym_series(0, 3).eval_at_one(), ints(&[1, 0, 0, 0]));
        // (1 - q)^4; exp form: q^2 coefficient is (-4)^2/2 + (-4)/2 = 6
        assert_eq!(euler_sym_series(-4, 2).eval_at_one(), ints(&[1, -4, 6]));
        let log = QSeries::from_scalars(2, [Rational::from_int(0), Rational::from_int(-4), Rational::from_int(-2)]);
        assert_eq!(euler_sym_series(-4, 2), log.exp().unwrap());
    }

    #[test]
    fn euler_orb_examples() {
        assert_eq!(euler_orb_series(2, 3).eval_at_one(), ints(&[1, 2, 5, 10]));
        let p = partition_numbers(5);
        assert_eq!(euler_orb_series(1, 5).eval_at_one(), ints(&p));
        assert_eq!(euler_orb_series(0, 4).eval_at_one(), ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn euler_orb_bruteforce_examples() {
        let p1 = HodgeDiamond::projective_line();
        assert_eq!(euler_orb_bruteforce(&p1, 2).unwrap(), Rational::from_int(5));
        assert_eq!(euler_orb_bruteforce(&p1, 1).unwrap(), Rational::from_int(2));
        assert_eq!(euler_orb_bruteforce(&p1, 3).unwrap(), Rational::from_int(10));
        let k3 = HodgeDiamond::k3();
        assert_eq!(euler_orb_bruteforce(&k3, 1).unwrap(), Rational::from_int(24));
        assert!(euler_orb_bruteforce(&p1, 7).is_err());
    }

    #[test]
    fn class_sum_matches_product() {
        for chi in [-2, 0, 1, 2, 3, 24] {
            let prod = euler_orb_coeffs(chi, 8);
            for n in 0..=8 {
                assert_eq!(euler_orb_class_sum(chi, n), prod[n], "chi={chi} n={n}");
            }
        }
    }

    #[test]
    fn chiy_sym_examples() {
        let p1 = HodgeDiamond::projective_line();
        let s = chiy_sym_series(&p1, 3).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &YPolynomial::one());
        assert_eq!(s.coeff(2).unwrap(), &y(&[1, 1, 1]));
        assert_eq!(s.coeff(3).unwrap(), &y(&[1, 1, 1, 1]));
        let p2 = HodgeDiamond::projective_space(2).chi_minus_y();
        assert_eq!(s.coeff(2).unwrap(), &p2);

        let e = chiy_sym_series(&HodgeDiamond::elliptic_curve(), 5).unwrap();
        assert_eq!(e, QSeries::one(5));
    }

    #[test]
    fn chiy_orb_examples() {
        let p1 = HodgeDiamond::projective_line();
        let s = chiy_orb_series(&p1, 4).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &YPolynomial::one());
        assert_eq!(s.coeff(1).unwrap(), &p1.chi_minus_y());
        assert_eq!(s.coeff(2).unwrap(), &u_poly(&[1, 1, 1, 1, 1]));
        assert!(s.coeff(2).unwrap().has_half_integer_powers());

        let k3 = chiy_orb_series(&HodgeDiamond::k3(), 3).unwrap();
        assert!(k3.coeffs().iter().all(|c| !c.has_half_integer_powers()));
    }

    #[test]
    fn delocalized_examples() {
        let p1 = HodgeDiamond::projective_line();
        let pos = WeightConvention::PositiveY;
        assert_eq!(chiy_orb_delocalized(&p1, 2, pos).unwrap(), u_poly(&[1, 1, 1, 1, 1]));
        assert_eq!(chiy_orb_delocalized(&p1, 0, pos).unwrap(), YPolynomial::one());
        assert_eq!(chiy_orb_delocalized(&p1, 1, pos).unwrap(), p1.chi_minus_y());
        assert!(chiy_orb_delocalized(&p1, 13, pos).is_err());
    }

    #[test]
    fn delocalized_agrees_with_closed_form() {
        for h in [
            HodgeDiamond::projective_line(),
            HodgeDiamond::elliptic_curve(),
            HodgeDiamond::k3(),
            HodgeDiamond::projective_space(3),
        ] {
            let closed = chiy_orb_series(&h, 6).unwrap();
            for n in 0..=6 {
                let d = chiy_orb_delocalized(&h, n, WeightConvention::PositiveY).unwrap();
                assert_eq!(&d, closed.coeff(n).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn minus_y_convention() {
        let p1 = HodgeDiamond::projective_line();
        let err = chiy_orb_delocalized(&p1, 2, WeightConvention::MinusY);
        assert!(matches!(err, Err(Error::Invalid(_))));

        // d = 2: a transposition has F = 1, so its sector flips sign.
        let k3 = HodgeDiamond::k3();
        let pos = chiy_orb_delocalized(&k3, 2, WeightConvention::PositiveY).unwrap();
        let neg = chiy_orb_delocalized(&k3, 2, WeightConvention::MinusY).unwrap();
        let twisted = &k3.chi_minus_y() * &YPolynomial::y_power(1);
        assert_eq!(&pos - &neg, &twisted + &twisted);
    }

    #[test]
    fn fermionic_shift_values() {
        let t = CycleType::from_counts(&[1, 0, 2]).unwrap();
        let f = FermionicShift::for_cycle_type(&t, 1);
        assert_eq!(f.half_units(), 4);
        assert_eq!(f.to_string(), "2");
        let g = FermionicShift::for_cycle_type(&CycleType::from_counts(&[0, 1]).unwrap(), 1);
        assert_eq!(g.to_string(), "1/2");
    }

    #[test]
    fn chihat_examples() {
        let b = HodgeDiamond::projective_line_b_side();
        let s = chihat_sym_series(&b, 3).unwrap();
        // ((1 - 3y)^2 + (1 - 3y^2)) / 2
        assert_eq!(s.coeff(2).unwrap(), &y(&[1, -3, 3]));

        let pt = HodgeDiamond::point().with_theory(Theory::BSide);
        let s = chihat_sym_series(&pt, 4).unwrap();
        assert_eq!(s.eval_at_one(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(s.coeff(0).unwrap(), &YPolynomial::one());

        let o = chihat_orb_series(&b, 3).unwrap();
        assert_eq!(o.coeff(0).unwrap(), &YPolynomial::one());
        let d = chihat_orb_delocalized(&b, 3, WeightConvention::PositiveY).unwrap();
        assert_eq!(&d, o.coeff(3).unwrap());
    }

    #[test]
    fn theory_tag_is_enforced() {
        let b = HodgeDiamond::projective_line_b_side();
        assert!(matches!(chiy_sym_series(&b, 2), Err(Error::TheoryMismatch { .. })));
        assert!(matches!(
            chihat_orb_series(&HodgeDiamond::projective_line(), 2),
            Err(Error::TheoryMismatch { .. })
        ));
    }

    #[test]
    fn specialization_to_euler_numbers() {
        for h in [
            HodgeDiamond::projective_line(),
            HodgeDiamond::k3(),
            HodgeDiamond::elliptic_curve(),
            HodgeDiamond::projective_space(2),
        ] {
            let chi = h.euler_number();
            assert_eq!(
                chiy_sym_series(&h, 6).unwrap().eval_at_one(),
                euler_sym_series(chi, 6).eval_at_one()
            );
            assert_eq!(
                chiy_orb_series(&h, 6).unwrap().eval_at_one(),
                euler_orb_series(chi, 6).eval_at_one()
            );
        }
    }

    #[test]
    fn request_dispatch() {
        let req = GenusSeriesRequest {
            diamond: HodgeDiamond::projective_line(),
            max_n: 3,
            flavor: "euler-orb".parse().unwrap(),
        };
        assert_eq!(req.compute().unwrap().eval_at_one(), ints(&[1, 2, 5, 10]));
        for f in Flavor::ALL {
            assert_eq!(f.name().parse::<Flavor>().unwrap(), f);
        }
    }
}
