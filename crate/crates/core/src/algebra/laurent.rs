use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::Scalar;

/// Laurent polynomial in `u = y^{1/2}`.
///
/// The key of each term is the exponent of `u`, so `y^k` is stored under
/// `2k` and half-integer powers of `y` live at odd keys. Zero coefficients
/// are never stored, which makes structural equality the ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, c)
    }

    /// `c * u^u_exp`.
    pub fn monomial(u_exp: i64, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u_exp, c);
        }
        LaurentPoly { terms }
    }

    /// `y^k`, i.e. `u^{2k}`.
    pub fn y_power(k: i64) -> Self {
        Self::monomial(2 * k, S::one())
    }

    /// Builds from `(u_exp, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, S)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Builds from integer coefficients of `y^0, y^1, ...`.
    pub fn from_y_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (2 * k as i64, S::from_int(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing `u`-exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `u^u_exp`.
    pub fn coeff(&self, u_exp: i64) -> S {
        self.terms.get(&u_exp).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of `y^k`.
    pub fn y_coeff(&self, k: i64) -> S {
        self.coeff(2 * k)
    }

    /// Constant term.
    pub fn constant_term(&self) -> S {
        self.coeff(0)
    }

    pub fn add_term(&mut self, u_exp: i64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&u_exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(u_exp, sum);
                }
            }
            None => {
                self.terms.insert(u_exp, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn div_scalar(&self, c: &S) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e, v.clone() / c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `u^shift`.
    pub fn shift_u(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e + shift, v.clone()))
                .collect(),
        }
    }

    /// The substitution `y -> y^l`: every exponent is multiplied by `l`.
    pub fn substitute_power(&self, l: u32) -> Self {
        assert!(l >= 1, "substitution power must be positive");
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e * l as i64, v.clone()))
                .collect(),
        }
    }

    /// The substitution `u -> -u`.
    pub fn negate_u(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| {
                    if e.rem_euclid(2) == 1 {
                        (e, -v.clone())
                    } else {
                        (e, v.clone())
                    }
                })
                .collect(),
        }
    }

    /// Maps `u^e` to `u^{center - e}`; with `center = 2d` this computes
    /// `y^d * P(1/y)`.
    pub fn reflect(&self, center: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (center - e, v.clone()))
                .collect(),
        }
    }

    /// True when some term carries a half-integer power of `y`.
    pub fn has_half_integer_powers(&self) -> bool {
        self.terms.keys().any(|e| e.rem_euclid(2) == 1)
    }

    /// Value at `u = 1` (hence `y = 1`): the sum of all coefficients.
    pub fn eval_at_one(&self) -> S {
        self.terms.values().cloned().fold(S::zero(), |a, b| a + b)
    }

    /// Value at a nonzero `u`.
    pub fn eval_u(&self, u: &S) -> S {
        let mut acc = S::zero();
        for (&e, c) in &self.terms {
            let mut p = S::one();
            for _ in 0..e.unsigned_abs() {
                p = p * u.clone();
            }
            if e < 0 {
                p = S::one() / p;
            }
            acc = acc + c.clone() * p;
        }
        acc
    }

    pub fn min_u_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_u_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }
}

impl<'a, S: Scalar> Add<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;

    fn add(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;

    fn sub(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;

    fn mul(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;

    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr<LaurentPoly<S>> for LaurentPoly<S> {
            type Output = LaurentPoly<S>;
            fn $m(self, rhs: LaurentPoly<S>) -> LaurentPoly<S> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for LaurentPoly<S> {
    type Output = LaurentPoly<S>;

    fn neg(self) -> LaurentPoly<S> {
        -&self
    }
}

fn write_y_power(f: &mut fmt::Formatter<'_>, u_exp: i64) -> fmt::Result {
    if u_exp == 2 {
        write!(f, "y")
    } else if u_exp.rem_euclid(2) == 0 {
        write!(f, "y^{}", u_exp / 2)
    } else {
        write!(f, "y^{}/2", u_exp)
    }
}

/// Human-readable form such as `1 - 3*y + 1/2*y^3/2`.
impl<S: Scalar + Signed + fmt::Display> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_y_power(f, e)?;
            } else {
                write!(f, "{mag}*")?;
                write_y_power(f, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::YPolynomial as P;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn substitute_power_scales_exponents() {
        let p = P::from_y_coeffs(&[1, 1]);
        assert_eq!(p.substitute_power(2), P::from_y_coeffs(&[1, 0, 1]));

        let q = &P::one() + &P::monomial(1, Rational::from_int(1));
        let expect = &P::one() + &P::monomial(3, Rational::from_int(1));
        assert_eq!(q.substitute_power(3), expect);

        let s = P::from_y_coeffs(&[1, -3]);
        assert_eq!(s.substitute_power(1), s);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = P::from_y_coeffs(&[1, 2]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn display_forms() {
        assert_eq!(P::from_y_coeffs(&[1, 1, 1]).to_string(), "1 + y + y^2");
        assert_eq!(P::from_y_coeffs(&[1, -3, 6]).to_string(), "1 - 3*y + 6*y^2");
        let half = P::from_terms([(1, r(1, 2)), (3, r(-1, 1))]);
        assert_eq!(half.to_string(), "1/2*y^1/2 - y^3/2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::y_power(-1).to_string(), "y^-1");
    }

    #[test]
    fn reflect_checks_serre_duality_shape() {
        // y^1 * P(1/y) for P = 1 + y
        let p = P::from_y_coeffs(&[1, 1]);
        assert_eq!(p.reflect(2), p);
    }

    #[test]
    fn evaluation() {
        let p = P::from_terms([(0, r(1, 1)), (1, r(1, 1)), (-2, r(3, 1))]);
        assert_eq!(p.eval_at_one(), r(5, 1));
        assert_eq!(p.eval_u(&r(2, 1)), r(1, 1) + r(2, 1) + r(3, 4));
    }

    #[test]
    fn works_over_f64() {
        let p: LaurentPoly<f64> = LaurentPoly::from_y_coeffs(&[1, 1]);
        let sq = &p * &p;
        assert_eq!(sq.y_coeff(1), 2.0);
    }
}
