//! Hodge diamonds, `χ_{-y}` polynomials, and the two cohomology-level
//! oracles for symmetric products: basis enumeration of graded-symmetric
//! powers and Molien averaging over cycle types.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::guards;
use crate::partitions::{self, CycleType};
use crate::{Rational, Scalar, YPolynomial};

/// Default cap on `(total dimension)^n` for [`super_symmetric_power`].
pub const MAX_SYM_POWER_CELLS: u128 = 1_000_000;

/// How the diamond entries are read.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Theory {
    /// `h^{p,q} = dim H^q(Ω^p)`.
    #[default]
    Hodge,
    /// `h^{-p,q} = dim H^q(Λ^p T)`, polyvector fields.
    BSide,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Hodge => "hodge",
            Theory::BSide => "b-side",
        }
    }

    pub fn parse(s: &str) -> Option<Theory> {
        match s {
            "hodge" => Some(Theory::Hodge),
            "b-side" => Some(Theory::BSide),
            _ => None,
        }
    }
}

/// Matrix `h[p][q]` of a closed complex manifold of dimension `dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HodgeDiamond {
    dim: usize,
    h: Vec<Vec<u64>>,
    theory: Theory,
}

impl HodgeDiamond {
    pub fn new(dim: usize, h: Vec<Vec<u64>>, theory: Theory) -> Result<Self> {
        if h.len() != dim + 1 || h.iter().any(|row| row.len() != dim + 1) {
            return Err(Error::Invalid(format!(
                "Hodge matrix must be {0}x{0} for dim {1}",
                dim + 1,
                dim
            )));
        }
        Ok(HodgeDiamond { dim, h, theory })
    }

    pub fn point() -> Self {
        HodgeDiamond {
            dim: 0,
            h: vec![vec![1]],
            theory: Theory::Hodge,
        }
    }

    pub fn projective_line() -> Self {
        Self::projective_space(1)
    }

    /// `ℙ^d`: ones on the diagonal.
    pub fn projective_space(d: usize) -> Self {
        let h = (0..=d)
            .map(|p| (0..=d).map(|q| u64::from(p == q)).collect())
            .collect();
        HodgeDiamond {
            dim: d,
            h,
            theory: Theory::Hodge,
        }
    }

    pub fn elliptic_curve() -> Self {
        HodgeDiamond {
            dim: 1,
            h: vec![vec![1, 1], vec![1, 1]],
            theory: Theory::Hodge,
        }
    }

    pub fn k3() -> Self {
        HodgeDiamond {
            dim: 2,
            h: vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]],
            theory: Theory::Hodge,
        }
    }

    /// Polyvector-field numbers of `ℙ^1`: `h^0(O) = 1`, `h^0(T) = 3`.
    pub fn projective_line_b_side() -> Self {
        HodgeDiamond {
            dim: 1,
            h: vec![vec![1, 0], vec![3, 0]],
            theory: Theory::BSide,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn with_theory(mut self, theory: Theory) -> Self {
        self.theory = theory;
        self
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h
            .get(p)
            .and_then(|row| row.get(q))
            .copied()
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.h
    }

    pub fn total_dim(&self) -> u64 {
        self.h.iter().flatten().sum()
    }

    /// `χ_{-y} = sum_{p,q} (-1)^q h^{p,q} (-y)^p`.
    ///
    /// On a b-side diamond the same formula gives `χ̂_{-y}`.
    pub fn chi_minus_y(&self) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (p, row) in self.h.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                out.add_term(2 * p as i64, Rational::from_int(sign * v as i64));
            }
        }
        out
    }

    /// `χ = sum (-1)^{p+q} h^{p,q}`, which is `χ_{-y}` at `y = 1`.
    pub fn euler_number(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .flat_map(|(p, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(q, &v)| if (p + q) % 2 == 0 { v as i64 } else { -(v as i64) })
            })
            .sum()
    }

    /// Human-readable notes on failed Serre (`h^{p,q} = h^{d-p,d-q}`) or
    /// Hodge (`h^{p,q} = h^{q,p}`) symmetry. Empty for b-side diamonds,
    /// which need not satisfy either.
    pub fn symmetry_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.theory == Theory::BSide {
            return out;
        }
        let d = self.dim;
        'serre: for p in 0..=d {
            for q in 0..=d {
                if self.h[p][q] != self.h[d - p][d - q] {
                    out.push(format!(
                        "Serre symmetry fails: h^{{{p},{q}}} = {} but h^{{{},{}}} = {}",
                        self.h[p][q],
                        d - p,
                        d - q,
                        self.h[d - p][d - q]
                    ));
                    break 'serre;
                }
            }
        }
        'hodge: for p in 0..=d {
            for q in 0..=d {
                if self.h[p][q] != self.h[q][p] {
                    out.push(format!(
                        "Hodge symmetry fails: h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                        self.h[p][q], self.h[q][p]
                    ));
                    break 'hodge;
                }
            }
        }
        out
    }

    /// The bigraded cohomology as a super vector space.
    pub fn cohomology(&self) -> BigradedSuperSpace {
        let mut dims = BTreeMap::new();
        for (p, row) in self.h.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                if v > 0 {
                    dims.insert((p as u32, q as u32), v);
                }
            }
        }
        BigradedSuperSpace { dims }
    }
}

/// Bigraded super vector space; the parity of bidegree `(p, q)` is
/// `(p + q) mod 2`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BigradedSuperSpace {
    dims: BTreeMap<(u32, u32), u64>,
}

impl BigradedSuperSpace {
    pub fn from_dims<I: IntoIterator<Item = ((u32, u32), u64)>>(dims: I) -> Self {
        let mut out = BTreeMap::new();
        for (k, v) in dims {
            if v > 0 {
                *out.entry(k).or_insert(0) += v;
            }
        }
        BigradedSuperSpace { dims: out }
    }

    /// The ground field in bidegree `(0, 0)`.
    pub fn unit() -> Self {
        Self::from_dims([((0, 0), 1)])
    }

    pub fn dim(&self, p: u32, q: u32) -> u64 {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.dims
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_odd(p: u32, q: u32) -> bool {
        (p + q) % 2 == 1
    }

    /// One `(p, q)` entry per basis vector, in bidegree order.
    pub fn basis(&self) -> Vec<(u32, u32)> {
        self.dims
            .iter()
            .flat_map(|(&k, &v)| std::iter::repeat_n(k, v as usize))
            .collect()
    }

    /// `sum dim_{p,q} s^p t^q`.
    pub fn graded_dimension(&self) -> BigradedPoly {
        BigradedPoly::from_terms(
            self.dims
                .iter()
                .map(|(&k, &v)| (k, Rational::from_int(v as i64))),
        )
    }

    pub fn chi_minus_y(&self) -> YPolynomial {
        self.graded_dimension().chi_minus_y()
    }

    pub fn euler_number(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&(p, q), &v)| if Self::is_odd(p, q) { -(v as i64) } else { v as i64 })
            .sum()
    }
}

impl fmt::Display for BigradedSuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|(&(p, q), &v)| format!("h^{{{p},{q}}}={v}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Polynomial in two bookkeeping variables `s, t` tracking bidegree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BigradedPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BigradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, p: u32, q: u32) -> Rational {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &other.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    /// `sum (-1)^{p+q} c_{p,q} y^p`.
    pub fn chi_minus_y(&self) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (&(p, q), c) in &self.terms {
            let c = if (p + q) % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(2 * p as i64, c);
        }
        out
    }

    /// Reads back as a space; `None` if some coefficient is not a
    /// non-negative integer.
    pub fn to_space(&self) -> Option<BigradedSuperSpace> {
        let mut dims = Vec::new();
        for (&k, c) in &self.terms {
            if !c.is_integer() || c < &Rational::zero() {
                return None;
            }
            dims.push((k, u64::try_from(c.to_integer()).ok()?));
        }
        Some(BigradedSuperSpace::from_dims(dims))
    }
}

/// Graded-symmetric power `S^n V` by direct basis enumeration.
///
/// A basis of `S^n V` is the set of non-decreasing index words of length
/// `n` in which odd basis vectors appear at most once; every word in
/// `V^{⊗n}` is scanned, so the cost is `(dim V)^n`.
pub fn super_symmetric_power(v: &BigradedSuperSpace, n: usize) -> Result<BigradedSuperSpace> {
    let basis = v.basis();
    let dim = basis.len();
    let cells = guards::saturating_pow(dim as u128, n as u32);
    guards::check_cells("super-symmetric power cells dim^n", cells, MAX_SYM_POWER_CELLS)?;
    if n == 0 {
        return Ok(BigradedSuperSpace::unit());
    }
    let mut out: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    if dim == 0 {
        return Ok(BigradedSuperSpace::default());
    }
    let mut word = vec![0usize; n];
    'words: loop {
        let admissible = word.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            let (p, q) = basis[a];
            a < b || (a == b && !BigradedSuperSpace::is_odd(p, q))
        });
        if admissible {
            let (p, q) = word.iter().fold((0, 0), |(p, q), &i| (p + basis[i].0, q + basis[i].1));
            *out.entry((p, q)).or_insert(0) += 1;
        }
        for slot in (0..n).rev() {
            word[slot] += 1;
            if word[slot] < dim {
                continue 'words;
            }
            word[slot] = 0;
        }
        break;
    }
    Ok(BigradedSuperSpace::from_dims(out))
}

/// Graded trace of a permutation of cycle type `t` acting on `V^{⊗n}` with
/// Koszul signs, as a bidegree generating polynomial.
///
/// An `l`-cycle only fixes constant words `v ⊗ ... ⊗ v`, on which it acts by
/// `(-1)^{(l-1)|v|}`, so it contributes
/// `sum_{p,q} (-1)^{(l-1)(p+q)} dim_{p,q} s^{lp} t^{lq}`.
pub fn molien_trace(v: &BigradedSuperSpace, t: &CycleType) -> BigradedPoly {
    let mut out = BigradedPoly::one();
    for (l, count) in t.blocks() {
        let factor = BigradedPoly::from_terms(v.dims().iter().map(|(&(p, q), &d)| {
            let odd = (l - 1) % 2 == 1 && BigradedSuperSpace::is_odd(p, q);
            let c = Rational::from_int(if odd { -(d as i64) } else { d as i64 });
            ((l as u32 * p, l as u32 * q), c)
        }));
        out = out.mul(&factor.pow(count));
    }
    out
}

/// `(1/n!) sum_g tr(g)`, grouped by cycle type: the bigraded dimension of
/// the invariants of `V^{⊗n}`, which is `S^n V`.
pub fn molien_average(v: &BigradedSuperSpace, n: usize) -> BigradedPoly {
    let mut out = BigradedPoly::zero();
    for t in partitions::cycle_types(n) {
        let z = Rational::from_integer(t.centralizer_order().into());
        out = out.add(&molien_trace(v, &t).scale(&(Rational::one() / z)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[((u32, u32), i64)]) -> BigradedPoly {
        BigradedPoly::from_terms(terms.iter().map(|&(k, c)| (k, Rational::from_int(c))))
    }

    #[test]
    fn chi_minus_y_examples() {
        assert_eq!(
            HodgeDiamond::projective_line().chi_minus_y(),
            YPolynomial::from_y_coeffs(&[1, 1])
        );
        assert_eq!(HodgeDiamond::point().chi_minus_y(), YPolynomial::one());
        assert!(HodgeDiamond::elliptic_curve().chi_minus_y().is_zero());
        assert_eq!(
            HodgeDiamond::projective_line_b_side().chi_minus_y(),
            YPolynomial::from_y_coeffs(&[1, -3])
        );
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(HodgeDiamond::projective_line().euler_number(), 2);
        assert_eq!(HodgeDiamond::elliptic_curve().euler_number(), 0);
        assert_eq!(HodgeDiamond::projective_space(2).euler_number(), 3);
        assert_eq!(HodgeDiamond::k3().euler_number(), 24);
        let k3 = HodgeDiamond::k3();
        assert_eq!(k3.chi_minus_y().eval_at_one(), Rational::from_int(24));
    }

    #[test]
    fn shape_validation() {
        assert!(HodgeDiamond::new(1, vec![vec![1, 0]], Theory::Hodge).is_err());
        assert!(HodgeDiamond::new(1, vec![vec![1, 0], vec![0]], Theory::Hodge).is_err());
    }

    #[test]
    fn symmetry_warnings() {
        assert!(HodgeDiamond::k3().symmetry_warnings().is_empty());
        let bad = HodgeDiamond::new(1, vec![vec![1, 2], vec![0, 1]], Theory::Hodge).unwrap();
        let w = bad.symmetry_warnings();
        assert_eq!(w.len(), 2);
        assert!(HodgeDiamond::projective_line_b_side().symmetry_warnings().is_empty());
    }

    #[test]
    fn serre_symmetric_diamonds_have_palindromic_genus() {
        for h in [
            HodgeDiamond::projective_line(),
            HodgeDiamond::projective_space(3),
            HodgeDiamond::elliptic_curve(),
            HodgeDiamond::k3(),
        ] {
            let p = h.chi_minus_y();
            assert_eq!(p.reflect(2 * h.dim() as i64), p);
        }
    }

    #[test]
    fn symmetric_square_of_p1_is_p2() {
        let v = HodgeDiamond::projective_line().cohomology();
        let s2 = super_symmetric_power(&v, 2).unwrap();
        assert_eq!(s2, HodgeDiamond::projective_space(2).cohomology());
    }

    #[test]
    fn odd_square_vanishes() {
        let v = BigradedSuperSpace::from_dims([((1, 0), 1)]);
        assert_eq!(super_symmetric_power(&v, 2).unwrap().total_dim(), 0);
    }

    #[test]
    fn zeroth_and_first_power() {
        let v = HodgeDiamond::k3().cohomology();
        assert_eq!(super_symmetric_power(&v, 0).unwrap(), BigradedSuperSpace::unit());
        assert_eq!(super_symmetric_power(&v, 1).unwrap(), v);
    }

    #[test]
    fn sym_power_guard() {
        let v = HodgeDiamond::k3().cohomology();
        assert!(matches!(
            super_symmetric_power(&v, 5),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn molien_trace_examples() {
        let p1 = HodgeDiamond::projective_line().cohomology();
        let swap = CycleType::from_counts(&[0, 1]).unwrap();
        assert_eq!(molien_trace(&p1, &swap), poly(&[((0, 0), 1), ((2, 2), 1)]));

        let odd = BigradedSuperSpace::from_dims([((1, 0), 1)]);
        assert_eq!(molien_trace(&odd, &swap), poly(&[((2, 0), -1)]));

        let e = HodgeDiamond::elliptic_curve().cohomology();
        let id3 = CycleType::identity(3);
        assert_eq!(molien_trace(&e, &id3), e.graded_dimension().pow(3));
    }

    #[test]
    fn molien_average_matches_enumeration_on_curve() {
        let e = HodgeDiamond::elliptic_curve().cohomology();
        for n in 0..=4 {
            let enumerated = super_symmetric_power(&e, n).unwrap().graded_dimension();
            assert_eq!(molien_average(&e, n), enumerated, "n={n}");
        }
    }

    #[test]
    fn theory_names_round_trip() {
        for t in [Theory::Hodge, Theory::BSide] {
            assert_eq!(Theory::parse(t.name()), Some(t));
        }
        assert_eq!(Theory::parse("x"), None);
    }
}
