//! Formal K-theory of sums of line bundles.
//!
//! A bundle is a list of [`LineSymbol`]s. [`phi_cycle_tensor`] computes the
//! eigenbundle image `φ_{σ_n}(E^{⊗n}) = sum_ξ ξ E_ξ` of the cyclic
//! permutation without any root-of-unity arithmetic: `E^{⊗n}` splits into
//! blocks spanned by words with the same multiset of letters, each block is
//! `σ_n`-invariant, and `sum_ξ ξ dim(block_ξ)` is the trace of `σ_n` on the
//! block, i.e. the sum of its diagonal entries in the word basis.
//!
//! The same word model describes `E^{⊠n}` restricted to the diagonal, so the
//! external-tensor statement needs no separate code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::guards;
use crate::partitions::{self, shift_word, word_at};
use crate::{Rational, Scalar, YPolynomial};

/// Default cap on `r^n` for [`phi_cycle_tensor`].
pub const MAX_TENSOR_CELLS: u128 = 1_000_000;
/// Default cap on `r^n` for [`character_orbit_check`].
pub const MAX_CHARACTER_CELLS: u128 = 100_000;

/// A formal line bundle `L_id` of grading degree `degree`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LineSymbol {
    pub id: u32,
    pub degree: i64,
}

impl LineSymbol {
    pub fn new(id: u32, degree: i64) -> Self {
        LineSymbol { id, degree }
    }

    /// Ungraded line bundle.
    pub fn even(id: u32) -> Self {
        LineSymbol { id, degree: 0 }
    }

    fn is_odd(self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

/// Ungraded lines `L_1, ..., L_r`.
pub fn even_lines(r: usize) -> Vec<LineSymbol> {
    (1..=r as u32).map(LineSymbol::even).collect()
}

/// Lines `L_1, ..., L_r` with the given degrees.
pub fn graded_lines(degrees: &[i64]) -> Vec<LineSymbol> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| LineSymbol::new(i as u32 + 1, d))
        .collect()
}

/// `L_{j_1}^{a_1} ⋯ L_{j_k}^{a_k}`, keyed by id.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<u32, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `L_id^power`.
    pub fn power(id: u32, power: u32) -> Self {
        let mut m = BTreeMap::new();
        if power > 0 {
            m.insert(id, power);
        }
        Monomial(m)
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        let mut m = BTreeMap::new();
        for id in ids {
            *m.entry(id).or_insert(0) += 1;
        }
        Monomial(m)
    }

    pub fn exponents(&self) -> &BTreeMap<u32, u32> {
        &self.0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (id, p)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *p == 1 {
                write!(f, "L{id}")?;
            } else {
                write!(f, "L{id}^{p}")?;
            }
        }
        Ok(())
    }
}

/// Formal combination of monomials with `YPolynomial` coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct KClass {
    terms: BTreeMap<Monomial, YPolynomial>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass::default()
    }

    /// The class of `E` itself.
    pub fn from_lines(lines: &[LineSymbol]) -> Self {
        let mut k = KClass::zero();
        for l in lines {
            k.add_term(Monomial::power(l.id, 1), YPolynomial::one());
        }
        k
    }

    pub fn add_term(&mut self, m: Monomial, c: YPolynomial) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn coeff(&self, m: &Monomial) -> YPolynomial {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, YPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let single = c.len() == 1 && c.coeff(0) != Rational::from_int(0);
            let neg = single && c.coeff(0) < Rational::from_int(0);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if single {
                let mag = num_traits::Signed::abs(&c.coeff(0));
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
            } else {
                write!(f, "({c})*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

fn validate(lines: &[LineSymbol], n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("Adams index must be at least 1".into()));
    }
    let ids: BTreeSet<u32> = lines.iter().map(|l| l.id).collect();
    if ids.len() != lines.len() {
        return Err(Error::Invalid("line ids must be unique".into()));
    }
    Ok(())
}

/// `ψ^n(E) = sum_m L_m^n`.
pub fn adams(lines: &[LineSymbol], n: usize) -> Result<KClass> {
    validate(lines, n)?;
    let mut k = KClass::zero();
    for l in lines {
        k.add_term(Monomial::power(l.id, n as u32), YPolynomial::one());
    }
    Ok(k)
}

/// `Gψ^n(E) = sum_j (-1)^{(n-1) d_j} L_j^n`.
pub fn graded_adams(lines: &[LineSymbol], n: usize) -> Result<KClass> {
    validate(lines, n)?;
    let mut k = KClass::zero();
    for l in lines {
        let odd = (n - 1) % 2 == 1 && l.is_odd();
        let c = YPolynomial::constant(Rational::from_int(if odd { -1 } else { 1 }));
        k.add_term(Monomial::power(l.id, n as u32), c);
    }
    Ok(k)
}

/// `(-y)^k` as a Laurent polynomial.
pub fn minus_y_power(k: i64) -> YPolynomial {
    let sign = if k.rem_euclid(2) == 1 { -1 } else { 1 };
    YPolynomial::monomial(2 * k, Rational::from_int(sign))
}

/// `Gψ^n(E_{-y}) = sum_j (-1)^{(n-1) d_j} (-y)^{n d_j} L_j^n`, where
/// `E_{-y} = sum_j (-y)^{d_j} L_j`.
pub fn graded_adams_weighted(lines: &[LineSymbol], n: usize) -> Result<KClass> {
    validate(lines, n)?;
    let mut k = KClass::zero();
    for l in lines {
        let odd = (n - 1) % 2 == 1 && l.is_odd();
        let sign = Rational::from_int(if odd { -1 } else { 1 });
        let c = minus_y_power(n as i64 * l.degree).scale(&sign);
        k.add_term(Monomial::power(l.id, n as u32), c);
    }
    Ok(k)
}

/// `E^{⊗n}` in the word basis, with `σ_n` acting by the cyclic shift
/// `(j_1, ..., j_n) -> (j_n, j_1, ..., j_{n-1})` and, when graded, the
/// Koszul sign of moving the last factor to the front.
#[derive(Clone, Debug)]
pub struct EquivariantTensorModel {
    lines: Vec<LineSymbol>,
    n: usize,
    graded: bool,
}

impl EquivariantTensorModel {
    pub fn new(lines: &[LineSymbol], n: usize, graded: bool) -> Result<Self> {
        validate(lines, n)?;
        if lines.is_empty() {
            return Err(Error::Invalid("bundle must have at least one line".into()));
        }
        Ok(EquivariantTensorModel {
            lines: lines.to_vec(),
            n,
            graded,
        })
    }

    pub fn rank(&self) -> usize {
        self.lines.len()
    }

    pub fn power(&self) -> usize {
        self.n
    }

    pub fn basis_size(&self) -> u128 {
        guards::saturating_pow(self.rank() as u128, self.n as u32)
    }

    /// `σ_n(e_w) = sign * e_{shift(w)}`; letters are one-based.
    pub fn act(&self, word: &[usize]) -> (i64, Vec<usize>) {
        let image = shift_word(word);
        if !self.graded || self.n == 0 {
            return (1, image);
        }
        let last = self.lines[word[self.n - 1] - 1].is_odd();
        let rest_odd = word[..self.n - 1]
            .iter()
            .filter(|&&j| self.lines[j - 1].is_odd())
            .count();
        let sign = if last && rest_odd % 2 == 1 { -1 } else { 1 };
        (sign, image)
    }

    /// Diagonal entry of `σ_n` at `e_w`.
    pub fn diagonal(&self, word: &[usize]) -> i64 {
        let (sign, image) = self.act(word);
        if image == word {
            sign
        } else {
            0
        }
    }

    /// Sign and image of `σ_n^k` applied to `e_w`.
    pub fn act_power(&self, word: &[usize], k: usize) -> (i64, Vec<usize>) {
        let mut sign = 1;
        let mut w = word.to_vec();
        for _ in 0..k {
            let (s, next) = self.act(&w);
            sign *= s;
            w = next;
        }
        (sign, w)
    }

    fn monomial(&self, word: &[usize]) -> Monomial {
        Monomial::from_ids(word.iter().map(|&j| self.lines[j - 1].id))
    }

    fn weight(&self, word: &[usize]) -> i64 {
        word.iter().map(|&j| self.lines[j - 1].degree).sum()
    }

    /// `sum_w diag(w) * monomial(w)`, optionally weighted by
    /// `(-y)^{deg(w)}`.
    pub fn trace_class(&self, y_weighted: bool) -> KClass {
        let r = self.rank();
        let mut k = KClass::zero();
        for idx in 0..self.basis_size() as u64 {
            let w = word_at(idx, r, self.n);
            let d = self.diagonal(&w);
            if d == 0 {
                continue;
            }
            let mut c = YPolynomial::constant(Rational::from_int(d));
            if y_weighted {
                c = &c * &minus_y_power(self.weight(&w));
            }
            k.add_term(self.monomial(&w), c);
        }
        k
    }
}

/// `φ_{σ_n}(E^{⊗n})` by the weighted trace over the word basis.
pub fn phi_cycle_tensor(lines: &[LineSymbol], n: usize, graded: bool) -> Result<KClass> {
    let model = EquivariantTensorModel::new(lines, n, graded)?;
    guards::check_cells("tensor basis r^n", model.basis_size(), MAX_TENSOR_CELLS)?;
    Ok(model.trace_class(false))
}

/// `φ_{σ_n}((E_{-y})^{⊗n})` with the graded action: the `y`-weighted trace.
pub fn phi_cycle_tensor_weighted(lines: &[LineSymbol], n: usize) -> Result<KClass> {
    let model = EquivariantTensorModel::new(lines, n, true)?;
    guards::check_cells("tensor basis r^n", model.basis_size(), MAX_TENSOR_CELLS)?;
    Ok(model.trace_class(true))
}

/// Character data of `Z_n` on one orbit block `V_J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitTrace {
    pub representative: Vec<usize>,
    pub length: usize,
    /// `tr(σ_n^k | V_J)` for `k = 0..n`.
    pub character: Vec<i64>,
}

impl OrbitTrace {
    /// `tr(σ_n | V_J) = sum_ξ ξ dim V_J(ξ)`.
    pub fn block_trace(&self) -> i64 {
        self.character.get(1).copied().unwrap_or(self.character[0])
    }

    pub fn is_fixed(&self) -> bool {
        self.length == 1
    }

    /// `(1/n) sum_k χ(σ^k)`, the multiplicity of the trivial character;
    /// `None` if the average is not an integer.
    pub fn invariant_dim(&self) -> Option<i64> {
        let n = self.character.len() as i64;
        let s: i64 = self.character.iter().sum();
        (s % n == 0).then_some(s / n)
    }
}

/// Per-orbit traces for `E^{⊗n}`.
#[derive(Clone, Debug)]
pub struct OrbitCheckReport {
    pub rank: usize,
    pub n: usize,
    pub graded: bool,
    pub orbits: Vec<OrbitTrace>,
}

impl OrbitCheckReport {
    /// Every non-fixed block has trace 0, every fixed word trace ±1, and
    /// every character averages to a non-negative integer.
    pub fn all_consistent(&self) -> bool {
        self.orbits.iter().all(|o| {
            let trace_ok = if o.is_fixed() {
                o.block_trace().abs() == 1
            } else {
                o.block_trace() == 0
            };
            trace_ok && o.character[0] == o.length as i64 && o.invariant_dim().is_some_and(|d| d >= 0)
        })
    }

    pub fn nonfixed(&self) -> impl Iterator<Item = &OrbitTrace> {
        self.orbits.iter().filter(|o| !o.is_fixed())
    }
}

/// Computes the character of `Z_n` on every orbit block of `E^{⊗n}`.
pub fn character_orbit_check(
    lines: &[LineSymbol],
    n: usize,
    graded: bool,
) -> Result<OrbitCheckReport> {
    let model = EquivariantTensorModel::new(lines, n, graded)?;
    guards::check_cells("character scan r^n", model.basis_size(), MAX_CHARACTER_CELLS)?;
    let orbits = partitions::orbit_decomposition_on_words(model.rank(), n)?;
    let traces = orbits
        .into_iter()
        .map(|o| {
            let character = (0..n)
                .map(|k| {
                    o.members
                        .iter()
                        .map(|w| {
                            let (s, img) = model.act_power(w, k);
                            if &img == w {
                                s
                            } else {
                                0
                            }
                        })
                        .sum()
                })
                .collect();
            OrbitTrace {
                length: o.len(),
                representative: o.representative,
                character,
            }
        })
        .collect();
    Ok(OrbitCheckReport {
        rank: model.rank(),
        n,
        graded,
        orbits: traces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(id: u32, p: u32) -> Monomial {
        Monomial::power(id, p)
    }

    fn konst(c: i64) -> YPolynomial {
        YPolynomial::constant(Rational::from_int(c))
    }

    #[test]
    fn adams_examples() {
        let e = even_lines(2);
        let mut want = KClass::zero();
        want.add_term(l(1, 2), konst(1));
        want.add_term(l(2, 2), konst(1));
        assert_eq!(adams(&e, 2).unwrap(), want);
        assert_eq!(adams(&e, 1).unwrap(), KClass::from_lines(&e));
        assert_eq!(adams(&even_lines(3), 3).unwrap().to_string(), "L1^3 + L2^3 + L3^3");
        assert!(adams(&e, 0).is_err());
        assert!(adams(&[LineSymbol::even(1), LineSymbol::even(1)], 2).is_err());
    }

    #[test]
    fn graded_adams_examples() {
        let odd = [LineSymbol::new(1, 1)];
        assert_eq!(graded_adams(&odd, 2).unwrap().to_string(), "-L1^2");
        assert_eq!(graded_adams(&odd, 3).unwrap().to_string(), "L1^3");
        let e = even_lines(3);
        for n in 1..5 {
            assert_eq!(graded_adams(&e, n).unwrap(), adams(&e, n).unwrap());
        }
    }

    #[test]
    fn adams_is_additive() {
        let e = graded_lines(&[0, 1]);
        let f = [LineSymbol::new(7, 2), LineSymbol::new(9, 1)];
        let both: Vec<LineSymbol> = e.iter().chain(f.iter()).copied().collect();
        for n in 1..5 {
            assert_eq!(adams(&both, n).unwrap(), adams(&e, n).unwrap().add(&adams(&f, n).unwrap()));
        }
    }

    #[test]
    fn phi_examples() {
        let e = even_lines(2);
        assert_eq!(phi_cycle_tensor(&e, 2, false).unwrap().to_string(), "L1^2 + L2^2");
        let odd = [LineSymbol::new(1, 1)];
        assert_eq!(phi_cycle_tensor(&odd, 2, true).unwrap().to_string(), "-L1^2");
        for n in 1..6 {
            assert_eq!(phi_cycle_tensor(&even_lines(1), n, false).unwrap(), adams(&even_lines(1), n).unwrap());
        }
    }

    #[test]
    fn phi_matches_adams_small() {
        for r in 1..=3 {
            for n in 1..=5 {
                let e = even_lines(r);
                assert_eq!(phi_cycle_tensor(&e, n, false).unwrap(), adams(&e, n).unwrap());
            }
        }
    }

    #[test]
    fn phi_matches_graded_adams_small() {
        for degs in [[0, 1], [1, 1], [1, 2], [2, 3]] {
            let e = graded_lines(&degs);
            for n in 1..=5 {
                assert_eq!(phi_cycle_tensor(&e, n, true).unwrap(), graded_adams(&e, n).unwrap());
            }
        }
    }

    #[test]
    fn weighted_phi_matches_weighted_graded_adams() {
        let e = graded_lines(&[0, 1, 2]);
        for n in 1..=4 {
            assert_eq!(
                phi_cycle_tensor_weighted(&e, n).unwrap(),
                graded_adams_weighted(&e, n).unwrap()
            );
        }
        let one = graded_adams_weighted(&[LineSymbol::new(1, 1)], 2).unwrap();
        // (-1)^{1} (-y)^2 L^2
        assert_eq!(one.coeff(&l(1, 2)), -YPolynomial::y_power(2));
    }

    #[test]
    fn character_check_examples() {
        let rep = character_orbit_check(&even_lines(2), 2, false).unwrap();
        let nonfixed: Vec<&OrbitTrace> = rep.nonfixed().collect();
        assert_eq!(nonfixed.len(), 1);
        assert_eq!(nonfixed[0].representative, vec![1, 2]);
        assert_eq!(nonfixed[0].block_trace(), 0);
        assert!(rep.all_consistent());

        let rep4 = character_orbit_check(&even_lines(2), 4, false).unwrap();
        let o = rep4.orbits.iter().find(|o| o.representative == vec![1, 2, 1, 2]).unwrap();
        assert_eq!(o.length, 2);
        assert_eq!(o.block_trace(), 0);
        assert_eq!(o.character, vec![2, 0, 2, 0]);
        assert!(rep4.all_consistent());

        let rep1 = character_orbit_check(&even_lines(1), 5, true).unwrap();
        assert_eq!(rep1.nonfixed().count(), 0);
    }

    #[test]
    fn graded_characters_are_consistent() {
        for degs in [vec![1, 1], vec![0, 1, 1], vec![1, 2, 1]] {
            for n in 1..=6 {
                let rep = character_orbit_check(&graded_lines(&degs), n, true).unwrap();
                assert!(rep.all_consistent(), "degs={degs:?} n={n}");
            }
        }
        // A single odd line: σ_2 acts on L⊗L by -1, so no invariants.
        let rep = character_orbit_check(&[LineSymbol::new(1, 1)], 2, true).unwrap();
        assert_eq!(rep.orbits[0].character, vec![1, -1]);
        assert_eq!(rep.orbits[0].invariant_dim(), Some(0));
    }

    #[test]
    fn guards_apply() {
        assert!(matches!(
            phi_cycle_tensor(&even_lines(5), 9, false),
            Err(Error::Guard { .. })
        ));
        assert!(matches!(
            character_orbit_check(&even_lines(4), 9, false),
            Err(Error::Guard { .. })
        ));
    }
}
