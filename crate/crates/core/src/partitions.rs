//! Symmetric-group combinatorics.
//!
//! Class sums run over [`CycleType`]s; explicit [`Permutation`]s are only
//! enumerated for the commuting-pair brute force, where `n` is tiny.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::guards;

/// Largest `n` accepted by [`partitions_of`].
pub const MAX_PARTITION_N: usize = 40;
/// Largest `n` accepted by [`commuting_pairs`].
pub const MAX_PAIR_N: usize = 7;
/// Default cap on `r^n` for word enumeration.
pub const MAX_WORD_CELLS: u128 = 1_000_000;

/// Cycle type `(N_1, ..., N_n)` of a permutation in `S_n`: `N_l` counts the
/// `l`-cycles, and `sum l N_l = n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CycleType {
    counts: Vec<usize>,
}

impl CycleType {
    /// Builds from `(N_1, ..., N_k)`; `n` is inferred as `sum l N_l` and the
    /// count vector is padded to length `n`.
    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        let n: usize = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c)
            .sum();
        if counts.len() > n && counts[n..].iter().any(|&c| c != 0) {
            return Err(Error::Invalid(format!("bad cycle counts {counts:?}")));
        }
        let mut v = counts.to_vec();
        v.resize(n, 0);
        Ok(CycleType { counts: v })
    }

    /// The identity class of `S_n`.
    pub fn identity(n: usize) -> Self {
        let mut counts = vec![0; n];
        if n > 0 {
            counts[0] = n;
        }
        CycleType { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// `N_l`, zero for `l` outside `1..=n`.
    pub fn count(&self, l: usize) -> usize {
        if l == 0 {
            return 0;
        }
        self.counts.get(l - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `(l, N_l)` for every `l` with `N_l > 0`.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    /// Number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `prod_l l^{N_l} N_l!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (l, c) in self.blocks() {
            z *= BigUint::from(l).pow(c as u32) * factorial(c);
        }
        z
    }

    /// `n! / z`, the size of the conjugacy class.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All cycle types of `S_n` for `1 <= n <= 40`.
///
/// Order is descending lexicographic on `(N_1, ..., N_n)`, so the identity
/// comes first and the full `n`-cycle last.
pub fn partitions_of(n: usize) -> Result<Vec<CycleType>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::guard("partition size n", n as u128, MAX_PARTITION_N as u128));
    }
    Ok(cycle_types(n))
}

/// Same as [`partitions_of`] without the range check; `n = 0` yields the
/// single empty type.
pub(crate) fn cycle_types(n: usize) -> Vec<CycleType> {
    fn fill(l: usize, remaining: usize, counts: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        let n = counts.len();
        if l > n {
            if remaining == 0 {
                out.push(CycleType {
                    counts: counts.clone(),
                });
            }
            return;
        }
        for k in (0..=remaining / l).rev() {
            counts[l - 1] = k;
            fill(l + 1, remaining - k * l, counts, out);
        }
        counts[l - 1] = 0;
    }
    let mut out = Vec::new();
    let mut counts = vec![0; n];
    fill(1, n, &mut counts, &mut out);
    out
}

/// A permutation of `{1, ..., n}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From the one-based image list `[g(1), ..., g(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.n()).all(|i| self.images[other.images[i]] == other.images[self.images[i]])
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.n();
        let mut counts = vec![0; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }
}

/// All `n!` permutations in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    guards::check_cells("permutation count n!", factorial_u128(n), 40_320_000)?;
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    while next_permutation(&mut cur) {
        out.push(Permutation {
            images: cur.clone(),
        });
    }
    Ok(out)
}

fn factorial_u128(n: usize) -> u128 {
    (2..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All ordered pairs `(g, h)` in `S_n × S_n` with `gh = hg`.
pub fn commuting_pairs(n: usize) -> Result<Vec<(Permutation, Permutation)>> {
    guards::check_bound("commuting-pair size n", n as u128, MAX_PAIR_N as u128)?;
    let f = factorial_u128(n);
    guards::check_cells("commuting-pair checks (n!)^2", f * f, 25_401_600)?;
    let perms = all_permutations(n)?;
    let mut out = Vec::new();
    for g in &perms {
        for h in &perms {
            if g.commutes_with(h) {
                out.push((g.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

/// Number of orbits on `{1, ..., n}` of the group generated by `gens`.
pub fn orbit_count(n: usize, gens: &[&Permutation]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut orbits = n;
    for g in gens {
        for i in 0..n {
            let a = find(&mut parent, i);
            let b = find(&mut parent, g.apply(i));
            if a != b {
                parent[a] = b;
                orbits -= 1;
            }
        }
    }
    orbits
}

/// One orbit of the cyclic shift `(j_1, ..., j_n) -> (j_n, j_1, ..., j_{n-1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordOrbit {
    /// First member in lexicographic order; letters are `1..=r`.
    pub representative: Vec<usize>,
    /// Members in shift order starting from the representative.
    pub members: Vec<Vec<usize>>,
}

impl WordOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The cyclic shift on a word.
pub fn shift_word(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(w[n - 1]);
    out.extend_from_slice(&w[..n - 1]);
    out
}

/// Decodes `index` into a word of length `n` over `1..=r`, most significant
/// letter first, so increasing indices list words lexicographically.
pub(crate) fn word_at(index: u64, r: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    let mut x = index;
    for slot in w.iter_mut().rev() {
        *slot = (x % r as u64) as usize + 1;
        x /= r as u64;
    }
    w
}

pub(crate) fn word_index(w: &[usize], r: usize) -> u64 {
    w.iter().fold(0u64, |acc, &j| acc * r as u64 + (j - 1) as u64)
}

/// Orbits of the cyclic shift on words of length `n` over `r` letters,
/// ordered by representative.
pub fn orbit_decomposition_on_words(r: usize, n: usize) -> Result<Vec<WordOrbit>> {
    if r == 0 {
        return Err(Error::Invalid("alphabet must be non-empty".into()));
    }
    let total = guards::saturating_pow(r as u128, n as u32);
    guards::check_cells("word count r^n", total, MAX_WORD_CELLS)?;
    let mut seen = vec![false; total as usize];
    let mut out = Vec::new();
    for idx in 0..total as u64 {
        if seen[idx as usize] {
            continue;
        }
        let rep = word_at(idx, r, n);
        let mut members = vec![rep.clone()];
        seen[idx as usize] = true;
        let mut w = shift_word(&rep);
        while w != rep {
            seen[word_index(&w, r) as usize] = true;
            let next = shift_word(&w);
            members.push(w);
            w = next;
        }
        out.push(WordOrbit {
            representative: rep,
            members,
        });
    }
    Ok(out)
}
