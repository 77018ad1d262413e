use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{LaurentPoly, Scalar};
use crate::error::{Error, Result};

/// Truncated power series in `q` with Laurent-polynomial coefficients.
///
/// A series with truncation order `N` stores exactly `N + 1` coefficients,
/// those of `q^0 ..= q^N`. Binary operations truncate to the smaller order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<S> {
    trunc: usize,
    coeffs: Vec<LaurentPoly<S>>,
}

impl<S: Scalar> Series<S> {
    pub fn zero(trunc: usize) -> Self {
        Series {
            trunc,
            coeffs: vec![LaurentPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(LaurentPoly::one(), trunc)
    }

    pub fn constant(c: LaurentPoly<S>, trunc: usize) -> Self {
        Self::monomial(0, c, trunc)
    }

    /// `c * q^power`; zero when `power > trunc`.
    pub fn monomial(power: usize, c: LaurentPoly<S>, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if power <= trunc {
            s.coeffs[power] = c;
        }
        s
    }

    /// Series from the coefficient list of `q^0, q^1, ...`.
    ///
    /// Missing coefficients are zero; entries past `trunc` are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = LaurentPoly<S>>>(trunc: usize, coeffs: I) -> Self {
        let mut s = Self::zero(trunc);
        for (k, c) in coeffs.into_iter().take(trunc + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with constant (y-free) coefficients.
    pub fn from_scalars<I: IntoIterator<Item = S>>(trunc: usize, coeffs: I) -> Self {
        Self::from_coeffs(trunc, coeffs.into_iter().map(LaurentPoly::constant))
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[LaurentPoly<S>] {
        &self.coeffs
    }

    /// Coefficient of `q^power`; an error past the truncation order.
    pub fn coeff(&self, power: usize) -> Result<&LaurentPoly<S>> {
        self.coeffs.get(power).ok_or(Error::BeyondTruncation {
            power,
            trunc: self.trunc,
        })
    }

    /// Lowers the truncation order. Orders above the current one are
    /// rejected since the missing coefficients are unknown.
    pub fn truncate(&self, trunc: usize) -> Result<Self> {
        if trunc > self.trunc {
            return Err(Error::BeyondTruncation {
                power: trunc,
                trunc: self.trunc,
            });
        }
        Ok(Series {
            trunc,
            coeffs: self.coeffs[..=trunc].to_vec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &S) -> Self {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// The substitution `q -> q^l`, keeping the truncation order.
    pub fn substitute_q_power(&self, l: usize) -> Self {
        assert!(l >= 1, "substitution power must be positive");
        let mut out = Self::zero(self.trunc);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * l > self.trunc {
                break;
            }
            out.coeffs[k * l] = c.clone();
        }
        out
    }

    /// Applies `y -> y^l` to every coefficient.
    pub fn substitute_y_power(&self, l: u32) -> Self {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.substitute_power(l)).collect(),
        }
    }

    /// Coefficientwise value at `y = 1`.
    pub fn eval_at_one(&self) -> Vec<S> {
        self.coeffs.iter().map(LaurentPoly::eval_at_one).collect()
    }

    /// `exp(f)` for `f` with zero constant term.
    ///
    /// Uses `n g_n = sum_{k=1}^n k f_k g_{n-k}`, which follows from `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant {
                coefficient: format!("{:?}", self.coeffs[0]),
            });
        }
        let n_max = self.trunc;
        let mut g: Vec<LaurentPoly<S>> = Vec::with_capacity(n_max + 1);
        g.push(LaurentPoly::one());
        for n in 1..=n_max {
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || g[n - k].is_zero() {
                    continue;
                }
                let term = (&self.coeffs[k] * &g[n - k]).scale(&S::from_int(k as i64));
                acc = &acc + &term;
            }
            g.push(acc.div_scalar(&S::from_int(n as i64)));
        }
        Ok(Series {
            trunc: n_max,
            coeffs: g,
        })
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantNotOne {
                coefficient: format!("{:?}", self.coeffs[0]),
            });
        }
        let n_max = self.trunc;
        let mut g: Vec<LaurentPoly<S>> = vec![LaurentPoly::zero()];
        for n in 1..=n_max {
            // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
            let mut acc = self.coeffs[n].scale(&S::from_int(n as i64));
            for k in 1..n {
                if g[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = (&g[k] * &self.coeffs[n - k]).scale(&S::from_int(k as i64));
                acc = &acc - &term;
            }
            g.push(acc.div_scalar(&S::from_int(n as i64)));
        }
        Ok(Series {
            trunc: n_max,
            coeffs: g,
        })
    }

    /// Expansion of `(1 - q)^{-c}` through `q^trunc`.
    ///
    /// The coefficient of `q^n` is `c (c+1) ... (c+n-1) / n!`, the binomial
    /// `C(n+c-1, n)` for `c >= 0` and a signed binomial otherwise.
    pub fn binomial_power(c: i64, trunc: usize) -> Self {
        let mut coeffs = Vec::with_capacity(trunc + 1);
        let mut a = S::one();
        coeffs.push(a.clone());
        for n in 1..=trunc {
            a = a * S::from_int(c + n as i64 - 1) / S::from_int(n as i64);
            coeffs.push(a.clone());
        }
        Self::from_scalars(trunc, coeffs)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Series<T> {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.map_coeffs(&f)).collect(),
        }
    }
}

impl<S: Scalar + Signed + std::fmt::Display> Series<S> {
    /// One line per power: `q^k: <polynomial>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("q^{k}: {c}\n"));
        }
        out
    }
}

impl<'a, S: Scalar> Add<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;

    fn add(self, rhs: &'a Series<S>) -> Series<S> {
        let trunc = self.trunc.min(rhs.trunc);
        Series {
            trunc,
            coeffs: (0..=trunc)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl<'a, S: Scalar> Sub<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;

    fn sub(self, rhs: &'a Series<S>) -> Series<S> {
        let trunc = self.trunc.min(rhs.trunc);
        Series {
            trunc,
            coeffs: (0..=trunc)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order.
impl<'a, S: Scalar> Mul<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;

    fn mul(self, rhs: &'a Series<S>) -> Series<S> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        Series { trunc, coeffs }
    }
}

impl<S: Scalar> Neg for &Series<S> {
    type Output = Series<S>;

    fn neg(self) -> Series<S> {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QSeries, Rational, YPolynomial};

    fn ints(trunc: usize, v: &[i64]) -> QSeries {
        QSeries::from_scalars(trunc, v.iter().map(|&c| Rational::from_int(c)))
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn y() -> YPolynomial {
        YPolynomial::y_power(1)
    }

    #[test]
    fn mul_binomial_square() {
        let a = ints(2, &[1, 1]);
        assert_eq!(&a * &a, ints(2, &[1, 2, 1]));
    }

    #[test]
    fn mul_identity() {
        let a = QSeries::from_coeffs(3, [YPolynomial::one(), y()]);
        assert_eq!(&a * &QSeries::one(3), a);
    }

    #[test]
    fn mul_geometric_telescopes() {
        let geo = ints(3, &[1, 1, 1, 1]);
        let one_minus_q = ints(3, &[1, -1]);
        // direct convolution: c_n = a_n - a_{n-1}
        let direct: Vec<i64> = (0..=3).map(|n| 1 - i64::from(n > 0)).collect();
        assert_eq!(direct, vec![1, 0, 0, 0]);
        assert_eq!(&geo * &one_minus_q, QSeries::one(3));
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = ints(5, &[1, 1]);
        let b = ints(2, &[1, 1]);
        assert_eq!((&a * &b).trunc(), 2);
        assert_eq!((&a + &b).trunc(), 2);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(QSeries::zero(4).exp().unwrap(), QSeries::one(4));

        let f = ints(2, &[0, 2, 1]);
        // 1 + (2q + q^2) + (2q)^2/2
        assert_eq!(f.exp().unwrap(), ints(2, &[1, 2, 3]));

        let g = QSeries::from_scalars(4, (0..=4).map(|l| if l == 0 { r(0, 1) } else { r(2, l) }));
        assert_eq!(g.exp().unwrap(), ints(4, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let f = ints(3, &[1, 1]);
        match f.exp() {
            Err(Error::NonZeroConstant { coefficient }) => assert!(coefficient.contains('1')),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn log_examples() {
        assert_eq!(QSeries::one(3).log().unwrap(), QSeries::zero(3));

        let f = QSeries::from_coeffs(4, [YPolynomial::zero(), YPolynomial::one(), y()]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);

        let geo = ints(4, &[1, 1, 1, 1, 1]);
        let mercator = QSeries::from_scalars(
            4,
            (0..=4).map(|k| if k == 0 { r(0, 1) } else { r(1, k) }),
        );
        assert_eq!(geo.log().unwrap(), mercator);
        assert_eq!(mercator.exp().unwrap(), geo);
    }

    #[test]
    fn log_rejects_bad_constant() {
        assert!(matches!(
            ints(2, &[2, 1]).log(),
            Err(Error::ConstantNotOne { .. })
        ));
    }

    #[test]
    fn binomial_power_examples() {
        assert_eq!(QSeries::binomial_power(2, 4), ints(4, &[1, 2, 3, 4, 5]));
        assert_eq!(QSeries::binomial_power(0, 3), ints(3, &[1, 0, 0, 0]));
        assert_eq!(QSeries::binomial_power(24, 1), ints(1, &[1, 24]));
        assert_eq!(QSeries::binomial_power(-4, 2), ints(2, &[1, -4, 6]));
    }

    #[test]
    fn coefficient_past_truncation_is_an_error() {
        let s = QSeries::one(2);
        assert!(s.coeff(2).is_ok());
        assert!(matches!(s.coeff(3), Err(Error::BeyondTruncation { .. })));
        assert!(s.truncate(5).is_err());
    }

    #[test]
    fn text_form() {
        let s = QSeries::from_coeffs(2, [YPolynomial::one(), YPolynomial::from_y_coeffs(&[1, 1])]);
        assert_eq!(s.to_text(), "q^0: 1\nq^1: 1 + y\nq^2: 0\n");
    }

    #[test]
    fn substitute_q_power_spreads_coefficients() {
        let s = ints(5, &[1, 2, 3, 4]);
        assert_eq!(s.substitute_q_power(2), ints(5, &[1, 0, 2, 0, 3]));
    }
}
