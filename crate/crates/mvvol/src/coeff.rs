//! Symmetric coefficient families `F_{g,n}[d_1, …, d_n]` and the even
//! polynomials they define on the basis `e_d(L) = L^{2d} / (2d+1)!`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_traits::Zero;

use crate::arith::{factorial_q, int, PiPoly, Rational};
use crate::error::{Error, Result};

/// A stable `(g, n)` with exponents sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    g: u32,
    d: Vec<u32>,
}

impl MultiIndex {
    pub fn new(g: u32, d: &[u32]) -> Result<Self> {
        if !is_stable(g, d.len() as u32) {
            return Err(Error::UnstableType);
        }
        Ok(Self::sorted(g, d.to_vec()))
    }

    /// Skips the stability check; used for lookups inside recursion sums.
    pub(crate) fn sorted(g: u32, mut d: Vec<u32>) -> Self {
        d.sort_unstable_by(|a, b| b.cmp(a));
        Self { g, d }
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn n(&self) -> u32 {
        self.d.len() as u32
    }

    pub fn exponents(&self) -> &[u32] {
        &self.d
    }

    pub fn degree(&self) -> u32 {
        self.d.iter().sum()
    }

    /// `3g - 3 + n`, or `None` when negative.
    pub fn dimension(&self) -> Option<u32> {
        dimension(self.g, self.n())
    }
}

pub fn is_stable(g: u32, n: u32) -> bool {
    2 * g + n > 2
}

pub fn dimension(g: u32, n: u32) -> Option<u32> {
    (3 * g + n).checked_sub(3)
}

pub fn canonical_index(g: u32, n: u32, d: &[i64]) -> Result<MultiIndex> {
    if d.len() != n as usize {
        return Err(Error::ArityMismatch);
    }
    if d.iter().any(|&x| x < 0) {
        return Err(Error::NegativeExponent);
    }
    let d: Vec<u32> = d.iter().map(|&x| x as u32).collect();
    MultiIndex::new(g, &d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Kontsevich,
    MasurVeech,
}

impl Theory {
    /// The only π-grade an entry can occupy.
    pub fn grade(self, idx: &MultiIndex) -> Option<u32> {
        match self {
            Theory::Kontsevich => Some(0),
            Theory::MasurVeech => idx.dimension()?.checked_sub(idx.degree()),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Theory::Kontsevich => "kontsevich",
            Theory::MasurVeech => "masur-veech",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        match s {
            "kontsevich" => Some(Theory::Kontsevich),
            "masur-veech" => Some(Theory::MasurVeech),
            _ => None,
        }
    }
}

/// Memo table. Each entry is single-graded, so only the rational part is
/// stored and the grade is recovered from the theory.
pub struct CoeffTable {
    theory: Theory,
    entries: RwLock<HashMap<MultiIndex, Rational>>,
}

impl CoeffTable {
    pub fn new(theory: Theory) -> Self {
        Self {
            theory,
            entries: RwLock::new(HashMap::new()),
        }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn lookup(&self, idx: &MultiIndex) -> Option<Rational> {
        self.entries.read().unwrap().get(idx).cloned()
    }

    pub(crate) fn store(&self, idx: MultiIndex, value: Rational) {
        self.entries.write().unwrap().entry(idx).or_insert(value);
    }

    pub fn get(&self, idx: &MultiIndex) -> Option<PiPoly> {
        let r = self.lookup(idx)?;
        Some(PiPoly::monomial(r, self.theory.grade(idx).unwrap_or(0)))
    }

    /// All entries in index order.
    pub fn entries(&self) -> Vec<(MultiIndex, PiPoly)> {
        let map = self.entries.read().unwrap();
        let mut out: Vec<_> = map
            .iter()
            .map(|(k, r)| {
                let grade = self.theory.grade(k).unwrap_or(0);
                (k.clone(), PiPoly::monomial(r.clone(), grade))
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Inserts an externally supplied value after checking its grade.
    pub fn insert(&self, idx: MultiIndex, value: &PiPoly) -> Result<()> {
        let grade = self.theory.grade(&idx);
        let r = match grade {
            Some(k) => value.expect_grade(k),
            None => value.is_zero().then(Rational::zero),
        }
        .ok_or(Error::ArityMismatch)?;
        self.store(idx, r);
        Ok(())
    }
}

/// Symmetric even polynomial in `n` variables, stored on the `e_d` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenPolynomial {
    pub g: u32,
    pub n: u32,
    coeffs: BTreeMap<Vec<u32>, PiPoly>,
}

impl EvenPolynomial {
    pub fn zero(g: u32, n: u32) -> Self {
        Self {
            g,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// Adds `value` to the coefficient of the multiset `d`.
    pub fn add(&mut self, d: &[u32], value: &PiPoly) {
        assert_eq!(d.len(), self.n as usize);
        let mut key = d.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let slot = self.coeffs.entry(key.clone()).or_default();
        *slot += value;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, d: &[u32]) -> PiPoly {
        let mut key = d.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.coeffs.get(&key).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients keyed by descending exponent lists.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &PiPoly)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest `Σd` with a nonzero coefficient.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| k.iter().sum()).max()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.g, self.n);
        for (k, v) in &self.coeffs {
            out.add(k, &v.scale(r));
        }
        out
    }
}

/// All distinct orderings of a multiset, starting from descending order.
pub(crate) fn distinct_permutations(sorted_desc: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = sorted_desc.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `Σ_d F[d] Π L_i^{2 d_i} / (2 d_i + 1)!`.
pub fn evaluate(poly: &EvenPolynomial, lengths: &[PiPoly]) -> Result<PiPoly> {
    if lengths.len() != poly.n as usize {
        return Err(Error::ArityMismatch);
    }
    let top = poly.coeffs.keys().flat_map(|k| k.iter().copied()).max().unwrap_or(0);
    // basis[i][k] = e_k(L_i)
    let basis: Vec<Vec<PiPoly>> = lengths
        .iter()
        .map(|l| {
            let sq = l * l;
            let mut pow = PiPoly::one();
            (0..=top)
                .map(|k| {
                    let e = pow.scale(&(int(1) / factorial_q(2 * k + 1)));
                    pow = &pow * &sq;
                    e
                })
                .collect()
        })
        .collect();
    let mut total = PiPoly::zero();
    for (key, value) in &poly.coeffs {
        let mut sym = PiPoly::zero();
        for perm in distinct_permutations(key) {
            let term = perm
                .iter()
                .enumerate()
                .fold(PiPoly::one(), |acc, (i, &k)| &acc * &basis[i][k as usize]);
            sym += term;
        }
        total += &sym * value;
    }
    Ok(total)
}

/// Coefficient of `L_{n+1}^2 / 2` as a polynomial in the remaining variables.
/// On the `e` basis this is `F[d, 1] · 2/3!`.
pub fn coefficient_of_half_lsquared(poly: &EvenPolynomial) -> EvenPolynomial {
    let n = poly.n.saturating_sub(1);
    let mut out = EvenPolynomial::zero(poly.g, n);
    if poly.n == 0 {
        return out;
    }
    let third = Rational::new(2.into(), 6.into());
    for (key, value) in &poly.coeffs {
        if let Some(pos) = key.iter().position(|&x| x == 1) {
            let mut rest = key.clone();
            rest.remove(pos);
            out.add(&rest, &value.scale(&third));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn canonical_examples() {
        let idx = canonical_index(1, 2, &[0, 1]).unwrap();
        assert_eq!(idx.exponents(), &[1, 0]);
        assert_eq!(canonical_index(0, 3, &[0, 0, 0]).unwrap().exponents(), &[0, 0, 0]);
        assert_eq!(canonical_index(0, 2, &[0, 0]), Err(Error::UnstableType));
        assert_eq!(canonical_index(1, 1, &[-1]), Err(Error::NegativeExponent));
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[2, 1, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[3, 2, 1, 0]).len(), 24);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn evaluate_one_one() {
        let mut p = EvenPolynomial::zero(1, 1);
        p.add(&[0], &PiPoly::monomial(rat(1, 12), 1));
        p.add(&[1], &PiPoly::from_rational(rat(1, 8)));
        let at0 = evaluate(&p, &[PiPoly::zero()]).unwrap();
        assert_eq!(at0, PiPoly::monomial(rat(1, 12), 1));
        let at2 = evaluate(&p, &[PiPoly::from_rational(int(2))]).unwrap();
        assert_eq!(at2, PiPoly::from_terms([(1, rat(1, 12)), (0, rat(1, 12))]));
        assert_eq!(evaluate(&p, &[]), Err(Error::ArityMismatch));
        let z = EvenPolynomial::zero(0, 3);
        let ones = vec![PiPoly::one(); 3];
        assert!(evaluate(&z, &ones).unwrap().is_zero());
    }

    #[test]
    fn half_lsquared_of_zero() {
        assert!(coefficient_of_half_lsquared(&EvenPolynomial::zero(1, 2)).is_zero());
    }
}
