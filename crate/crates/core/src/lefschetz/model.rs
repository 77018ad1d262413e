use std::fmt;
use std::str::FromStr;

use num_integer::binomial;

use super::{MVSeriesQ, MVSeries};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::Rational;

/// Largest model dimension.
pub const MAX_MODEL_DIM: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    /// `(ℙ^1)^d` with hyperplane classes `h_1..h_d`, `h_i^2 = 0`.
    P1Product,
    /// `ℙ^d` with hyperplane class `h`, `h^{d+1} = 0`.
    ProjectiveSpace,
}

/// A compact manifold with an explicit cohomology ring and tangent roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelManifold {
    kind: ModelKind,
    dim: usize,
    vars: Vec<String>,
}

impl ModelManifold {
    pub fn p1_product(d: usize) -> Self {
        ModelManifold {
            kind: ModelKind::P1Product,
            dim: d,
            vars: super::root_names("h", d),
        }
    }

    pub fn projective_space(d: usize) -> Self {
        ModelManifold {
            kind: ModelKind::ProjectiveSpace,
            dim: d,
            vars: vec!["h".to_string()],
        }
    }

    pub fn point() -> Self {
        Self::p1_product(0)
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Cohomology generators; a bundle summand gives one `c_1` coefficient
    /// per generator.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn trunc(&self) -> u32 {
        self.dim as u32
    }

    /// Chern roots of `TX`, up to trivial summands: `2 h_i` on `(ℙ^1)^d`
    /// and `d + 1` copies of `h` on `ℙ^d` (Euler sequence).
    pub fn tangent_roots(&self) -> Vec<MVSeriesQ> {
        let t = self.trunc();
        match self.kind {
            ModelKind::P1Product => (0..self.dim)
                .map(|i| MVSeries::variable(&self.vars, i, t).scale(&Rational::from_int(2)))
                .collect(),
            ModelKind::ProjectiveSpace => (0..=self.dim).map(|_| MVSeries::variable(&self.vars, 0, t)).collect(),
        }
    }

    /// `T(ψ^n TX)`.
    pub fn todd(&self, n: i64) -> Result<MVSeriesQ> {
        let s = Rational::from_int(n);
        let roots: Vec<MVSeriesQ> = self.tangent_roots().iter().map(|r| r.scale(&s)).collect();
        super::todd_class(&roots, &self.vars, self.trunc())
    }

    /// `ch(ψ^n L) = e^{n c_1(L)}`.
    pub fn line_character(&self, c1: &[i64], n: i64) -> Result<MVSeriesQ> {
        if c1.len() != self.vars.len() {
            return Err(Error::Invalid(format!(
                "line needs {} first Chern class coefficients, got {}",
                self.vars.len(),
                c1.len()
            )));
        }
        let coeffs: Vec<Rational> = c1.iter().map(|&c| Rational::from_int(c * n)).collect();
        MVSeries::linear(&self.vars, &coeffs, self.trunc()).exp()
    }

    /// `ch(ψ^n E)`, ignoring grading.
    pub fn chern_character(&self, e: &ModelBundle, n: i64) -> Result<MVSeriesQ> {
        let mut out = MVSeries::zero(&self.vars, self.trunc());
        for s in e.summands() {
            let ch = self.line_character(&s.c1, n)?;
            out = &out + &ch.scale(&Rational::from_int(s.multiplicity));
        }
        Ok(out)
    }

    /// Applies the ring relations.
    pub fn reduce(&self, c: &MVSeriesQ) -> MVSeriesQ {
        match self.kind {
            ModelKind::P1Product => c.retain(|e| e.iter().all(|&k| k <= 1)),
            ModelKind::ProjectiveSpace => c.retain(|e| e[0] as usize <= self.dim),
        }
    }

    /// Pairing with the fundamental class: the coefficient of
    /// `h_1 ... h_d`, or of `h^d`.
    pub fn integrate(&self, c: &MVSeriesQ) -> Rational {
        match self.kind {
            ModelKind::P1Product => c.coeff(&vec![1; self.dim]),
            ModelKind::ProjectiveSpace => c.coeff(&[self.dim as u32]),
        }
    }

    pub fn check_bundle(&self, e: &ModelBundle) -> Result<()> {
        for s in e.summands() {
            if s.c1.len() != self.vars.len() {
                return Err(Error::Invalid(format!(
                    "bundle summand {:?} does not match {self}",
                    s.c1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ModelManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.dim) {
            (ModelKind::P1Product, 0) => write!(f, "point"),
            (ModelKind::P1Product, d) => write!(f, "p1^{d}"),
            (ModelKind::ProjectiveSpace, d) => write!(f, "p^{d}"),
        }
    }
}

impl FromStr for ModelManifold {
    type Err = Error;

    /// `point`, `p1^d` or `p^d`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let parse_dim = |d: &str| -> Result<usize> {
            let d: usize = d
                .parse()
                .map_err(|_| Error::Invalid(format!("bad model dimension {d:?}")))?;
            crate::guards::check_bound("model dimension", d as u128, MAX_MODEL_DIM as u128)?;
            Ok(d)
        };
        if s == "point" {
            Ok(Self::point())
        } else if let Some(d) = s.strip_prefix("p1^") {
            Ok(Self::p1_product(parse_dim(d)?))
        } else if let Some(d) = s.strip_prefix("p^") {
            Ok(Self::projective_space(parse_dim(d)?))
        } else {
            Err(Error::Invalid(format!("unknown model manifold {s:?}; use point, p1^d or p^d")))
        }
    }
}

/// One summand `multiplicity * L` of a graded line bundle sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineSummand {
    /// `c_1(L)` in the model's generators.
    pub c1: Vec<i64>,
    /// Grading degree; odd degrees are fermionic.
    pub degree: i64,
    /// May be negative for virtual sums.
    pub multiplicity: i64,
}

impl LineSummand {
    pub fn line(c1: Vec<i64>) -> Self {
        LineSummand {
            c1,
            degree: 0,
            multiplicity: 1,
        }
    }
}

/// A virtual graded sum of line bundles on a model manifold.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModelBundle {
    summands: Vec<LineSummand>,
}

impl ModelBundle {
    pub fn new(summands: Vec<LineSummand>) -> Self {
        ModelBundle { summands }
    }

    pub fn summands(&self) -> &[LineSummand] {
        &self.summands
    }

    /// `O(k)`, or `O(k, ..., k)` on `(ℙ^1)^d`.
    pub fn o(m: &ModelManifold, k: i64) -> Self {
        Self::new(vec![LineSummand::line(vec![k; m.vars().len()])])
    }

    /// The trivial bundle of rank `r`.
    pub fn trivial(m: &ModelManifold, r: i64) -> Self {
        Self::new(vec![LineSummand {
            c1: vec![0; m.vars().len()],
            degree: 0,
            multiplicity: r,
        }])
    }

    /// `Λ_{-y} T*X` with `Λ^k` in degree `k`.
    pub fn cotangent_exterior(m: &ModelManifold) -> Self {
        Self::exterior(m, -1)
    }

    /// `Λ_{-y} TX` with `Λ^k` in degree `k`.
    pub fn tangent_exterior(m: &ModelManifold) -> Self {
        Self::exterior(m, 1)
    }

    fn exterior(m: &ModelManifold, sign: i64) -> Self {
        let d = m.dim();
        let mut out = Vec::new();
        match m.kind() {
            ModelKind::P1Product => {
                for subset in 0u32..(1 << d) {
                    let c1 = (0..d)
                        .map(|i| if subset >> i & 1 == 1 { 2 * sign } else { 0 })
                        .collect();
                    out.push(LineSummand {
                        c1,
                        degree: subset.count_ones() as i64,
                        multiplicity: 1,
                    });
                }
            }
            ModelKind::ProjectiveSpace => {
                // Λ^k of the Euler sequence: sum_j (-1)^{k-j} C(d+1, j) O(±j)
                for k in 0..=d as i64 {
                    for j in 0..=k {
                        let c = binomial(d as i64 + 1, j);
                        out.push(LineSummand {
                            c1: vec![sign * j],
                            degree: k,
                            multiplicity: if (k - j) % 2 == 0 { c } else { -c },
                        });
                    }
                }
            }
        }
        Self::new(out)
    }

    /// `ψ^l E`, keeping the grading.
    pub fn adams(&self, l: i64) -> Self {
        Self::new(
            self.summands
                .iter()
                .map(|s| LineSummand {
                    c1: s.c1.iter().map(|c| c * l).collect(),
                    ..s.clone()
                })
                .collect(),
        )
    }

    /// Parses `O(k)` / `k`, `trivial:r`, `cotangent` or `tangent`.
    pub fn parse(m: &ModelManifold, s: &str) -> Result<Self> {
        let s = s.trim();
        let int = |t: &str| -> Result<i64> {
            t.trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad bundle {s:?}")))
        };
        match s.to_ascii_lowercase().as_str() {
            "cotangent" => Ok(Self::cotangent_exterior(m)),
            "tangent" => Ok(Self::tangent_exterior(m)),
            low => {
                if let Some(r) = low.strip_prefix("trivial:") {
                    Ok(Self::trivial(m, int(r)?))
                } else if let Some(inner) = low.strip_prefix("o(").and_then(|t| t.strip_suffix(')')) {
                    Ok(Self::o(m, int(inner)?))
                } else {
                    Ok(Self::o(m, int(low)?))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_models() {
        assert_eq!("p1^2".parse::<ModelManifold>().unwrap(), ModelManifold::p1_product(2));
        assert_eq!("P^3".parse::<ModelManifold>().unwrap(), ModelManifold::projective_space(3));
        assert_eq!("point".parse::<ModelManifold>().unwrap(), ModelManifold::point());
        assert!("p^99".parse::<ModelManifold>().is_err());
        assert!("torus".parse::<ModelManifold>().is_err());
        assert_eq!(ModelManifold::p1_product(2).to_string(), "p1^2");
    }

    #[test]
    fn parse_bundles() {
        let m = ModelManifold::p1_product(2);
        assert_eq!(ModelBundle::parse(&m, "O(-1)").unwrap(), ModelBundle::o(&m, -1));
        assert_eq!(ModelBundle::parse(&m, "3").unwrap(), ModelBundle::o(&m, 3));
        assert_eq!(ModelBundle::parse(&m, "trivial:2").unwrap(), ModelBundle::trivial(&m, 2));
        assert_eq!(ModelBundle::parse(&m, "cotangent").unwrap().summands().len(), 4);
        assert!(ModelBundle::parse(&m, "O(x)").is_err());
    }

    #[test]
    fn exterior_ranks() {
        // rank of Λ^k T*ℙ^d is C(d, k)
        let m = ModelManifold::projective_space(3);
        let e = ModelBundle::cotangent_exterior(&m);
        for k in 0..=3 {
            let rank: i64 = e
                .summands()
                .iter()
                .filter(|s| s.degree == k)
                .map(|s| s.multiplicity)
                .sum();
            assert_eq!(rank, binomial(3, k));
        }
    }

    #[test]
    fn reduce_relations() {
        let m = ModelManifold::p1_product(2);
        let h = MVSeries::linear(m.vars(), &[Rational::from_int(1), Rational::from_int(1)], 2);
        let sq = m.reduce(&(&h * &h));
        assert_eq!(sq.terms().len(), 1);
        assert_eq!(m.integrate(&sq), Rational::from_int(2));
    }
}
