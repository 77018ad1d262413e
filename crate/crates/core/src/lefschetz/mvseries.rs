use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Multivariate power series in named root variables, truncated by total
/// degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MVSeries<S> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, S>,
    trunc: u32,
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl<S: Scalar> MVSeries<S> {
    pub fn zero(vars: &[String], trunc: u32) -> Self {
        MVSeries {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn constant(vars: &[String], c: S, trunc: u32) -> Self {
        let mut s = Self::zero(vars, trunc);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    pub fn one(vars: &[String], trunc: u32) -> Self {
        Self::constant(vars, S::one(), trunc)
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(vars: &[String], coeffs: &[S], trunc: u32) -> Self {
        assert_eq!(vars.len(), coeffs.len(), "one coefficient per variable");
        let mut s = Self::zero(vars, trunc);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            s.add_term(e, c.clone());
        }
        s
    }

    /// The `i`-th variable.
    pub fn variable(vars: &[String], i: usize, trunc: u32) -> Self {
        let mut c = vec![S::zero(); vars.len()];
        c[i] = S::one();
        Self::linear(vars, &c, trunc)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: S) {
        if c.is_zero() || degree(&exps) > self.trunc {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.vars, self.trunc);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn retain(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        MVSeries {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, v)| (e.clone(), v.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn with_trunc(&self, trunc: u32) -> Self {
        let mut out = self.retain(|e| degree(e) <= trunc);
        out.trunc = trunc.min(self.trunc);
        out
    }

    /// Degree-`k` part.
    pub fn homogeneous_component(&self, k: u32) -> Self {
        self.retain(|e| degree(e) == k)
    }

    /// The substitution `x_i -> factor * x_i` for every variable.
    pub fn scale_variables(&self, factor: &S) -> Self {
        let mut out = Self::zero(&self.vars, self.trunc);
        for (e, v) in &self.terms {
            let mut c = v.clone();
            for _ in 0..degree(e) {
                c = c * factor.clone();
            }
            out.add_term(e.clone(), c);
        }
        out
    }

    /// `f(self)` for `f = sum_k coeffs[k] z^k`; requires a zero constant
    /// term, and uses `coeffs` up to the truncation degree.
    pub fn compose(&self, coeffs: &[S]) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstant {
                coefficient: format!("{:?}", self.constant_term()),
            });
        }
        let top = (self.trunc as usize).min(coeffs.len().saturating_sub(1));
        let mut acc = Self::zero(&self.vars, self.trunc);
        for k in (0..=top).rev() {
            acc = &acc * self;
            acc = &acc + &Self::constant(&self.vars, coeffs[k].clone(), self.trunc);
        }
        Ok(acc)
    }

    pub fn exp(&self) -> Result<Self> {
        self.compose(&exp_coeffs(self.trunc as usize))
    }

    /// `1 / self` by the geometric series in `self / c_0 - 1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible {
                coefficient: format!("{c0:?}"),
            });
        }
        let inv0 = S::one() / c0;
        let rest = &self.scale(&inv0) - &Self::one(&self.vars, self.trunc);
        let alternating: Vec<S> = (0..=self.trunc)
            .map(|k| if k % 2 == 0 { S::one() } else { -S::one() })
            .collect();
        Ok(rest.compose(&alternating)?.scale(&inv0))
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "series over different variables");
    }
}

impl<'a, S: Scalar> Add<&'a MVSeries<S>> for &'a MVSeries<S> {
    type Output = MVSeries<S>;

    fn add(self, rhs: &'a MVSeries<S>) -> MVSeries<S> {
        self.check_vars(rhs);
        let mut out = self.with_trunc(rhs.trunc);
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a MVSeries<S>> for &'a MVSeries<S> {
    type Output = MVSeries<S>;

    fn sub(self, rhs: &'a MVSeries<S>) -> MVSeries<S> {
        self + &(-rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a MVSeries<S>> for &'a MVSeries<S> {
    type Output = MVSeries<S>;

    fn mul(self, rhs: &'a MVSeries<S>) -> MVSeries<S> {
        self.check_vars(rhs);
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = MVSeries::zero(&self.vars, trunc);
        for (ea, va) in &self.terms {
            let da = degree(ea);
            if da > trunc {
                continue;
            }
            for (eb, vb) in &rhs.terms {
                if da + degree(eb) > trunc {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, va.clone() * vb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &MVSeries<S> {
    type Output = MVSeries<S>;

    fn neg(self) -> MVSeries<S> {
        self.scale(&-S::one())
    }
}

/// `1 / k!` for `k = 0..=k_max`.
pub fn exp_coeffs<S: Scalar>(k_max: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(k_max + 1);
    let mut c = S::one();
    out.push(c.clone());
    for k in 1..=k_max {
        c = c / S::from_int(k as i64);
        out.push(c.clone());
    }
    out
}

/// Bernoulli numbers `B_0..=B_m` with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers<S: Scalar>(m: usize) -> Vec<S> {
    let mut b: Vec<S> = vec![S::one()];
    for k in 1..=m {
        // binomials C(k+1, j)
        let mut binom = S::one();
        let mut acc = S::zero();
        for (j, bj) in b.iter().enumerate() {
            acc = acc + binom.clone() * bj.clone();
            binom = binom * S::from_int((k + 1 - j) as i64) / S::from_int(j as i64 + 1);
        }
        // binom is now C(k+1, k)
        b.push(-acc / binom);
    }
    b
}

/// Coefficients of `z / (1 - e^{-z}) = sum_k B_k^+ z^k / k!`, where
/// `B_1^+ = +1/2`.
pub fn todd_coeffs<S: Scalar>(k_max: usize) -> Vec<S> {
    let b = bernoulli_numbers::<S>(k_max);
    let f = exp_coeffs::<S>(k_max);
    b.into_iter()
        .zip(f)
        .enumerate()
        .map(|(k, (bk, fk))| {
            let bk = if k == 1 { -bk } else { bk };
            bk * fk
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Q = MVSeries<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn names(k: usize) -> Vec<String> {
        (1..=k).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers::<Rational>(8);
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
    }

    #[test]
    fn todd_series_inverts_its_reciprocal() {
        // (1 - e^{-z}) / z = sum (-1)^k z^k / (k+1)!
        let v = names(1);
        let k_max = 8;
        let recip_coeffs: Vec<Rational> = (0..=k_max)
            .map(|k| {
                let f = exp_coeffs::<Rational>(k + 1)[k + 1].clone();
                if k % 2 == 0 {
                    f
                } else {
                    -f
                }
            })
            .collect();
        let x = Q::variable(&v, 0, k_max as u32);
        let recip = x.compose(&recip_coeffs).unwrap();
        let todd = x.compose(&todd_coeffs(k_max)).unwrap();
        assert_eq!(&recip * &todd, Q::one(&v, k_max as u32));
        assert_eq!(recip.reciprocal().unwrap(), todd);
    }

    #[test]
    fn exp_of_sum_is_product() {
        let v = names(2);
        let a = Q::linear(&v, &[r(1, 1), r(0, 1)], 5);
        let b = Q::linear(&v, &[r(0, 1), r(3, 2)], 5);
        assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
    }

    #[test]
    fn compose_rejects_constant() {
        let v = names(1);
        assert!(Q::one(&v, 3).exp().is_err());
        assert!(Q::zero(&v, 3).reciprocal().is_err());
    }

    #[test]
    fn truncation_and_components() {
        let v = names(2);
        let x = Q::variable(&v, 0, 2);
        let y = Q::variable(&v, 1, 2);
        let s = &(&x + &y) * &(&x + &y);
        assert_eq!(s.coeff(&[1, 1]), r(2, 1));
        let cube = &s * &x;
        assert!(cube.is_zero());
        assert_eq!(s.homogeneous_component(2), s);
        assert_eq!(s.scale_variables(&r(3, 1)).coeff(&[2, 0]), r(9, 1));
    }
}
