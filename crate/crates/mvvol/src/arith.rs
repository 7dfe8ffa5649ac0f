//! Exact rationals graded by powers of π², plus the combinatorial primitives
//! every other module leans on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

fn cached<T: Clone>(
    cell: &'static OnceLock<RwLock<Vec<T>>>,
    seed: impl FnOnce() -> Vec<T>,
    idx: usize,
    mut extend: impl FnMut(&[T]) -> T,
) -> T {
    let lock = cell.get_or_init(|| RwLock::new(seed()));
    if let Some(v) = lock.read().unwrap().get(idx) {
        return v.clone();
    }
    let mut table = lock.write().unwrap();
    while table.len() <= idx {
        let next = extend(&table);
        table.push(next);
    }
    table[idx].clone()
}

pub fn factorial(n: u32) -> BigInt {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    cached(
        &TABLE,
        || vec![BigInt::one()],
        n as usize,
        |t| t.last().unwrap() * BigInt::from(t.len()),
    )
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `n!!` for odd `n ≥ -1` (with `(-1)!! = 1`), extended to negative odd
/// arguments through `Γ`: `(-3)!! = -1`, `(-5)!! = 1/3`, `(-7)!! = -1/15`.
/// Even nonnegative arguments give the ordinary product.
pub fn double_factorial(n: i64) -> Rational {
    if n >= -1 {
        let mut acc = BigInt::one();
        let mut k = n;
        while k > 1 {
            acc *= k;
            k -= 2;
        }
        return Rational::from_integer(acc);
    }
    assert!(n % 2 != 0, "double factorial undefined at even negative {n}");
    // (n)!! = (n+2)!! / (n+2)
    double_factorial(n + 2) / int(n + 2)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    parts.iter().fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// `B_m` for even `m` (and `m = 1` is rejected as odd).
pub fn bernoulli_number(m: u32) -> Result<Rational> {
    if m % 2 == 1 {
        return Err(Error::OddBernoulliIndex);
    }
    Ok(bernoulli_any(m))
}

fn bernoulli_any(m: u32) -> Rational {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    cached(
        &TABLE,
        || vec![Rational::one()],
        m as usize,
        |t| {
            // Σ_{j=0}^{m} C(m+1, j) B_j = 0
            let m = t.len() as u32;
            let s = t.iter().enumerate().fold(Rational::zero(), |acc, (j, b)| {
                acc + Rational::from_integer(binomial(m + 1, j as u32)) * b
            });
            -s / int(m as i64 + 1)
        },
    )
}

/// Rational `z_k` with `ζ(2k) = z_k π^{2k}`.
pub fn zeta_coeff(k: u32) -> Rational {
    debug_assert!(k >= 1);
    let b = bernoulli_any(2 * k);
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    let pow2 = Rational::from_integer(BigInt::one() << (2 * k - 1));
    sign * b * pow2 / factorial_q(2 * k)
}

/// `ζ(2k)` as an exact multiple of `π^{2k}`.
pub fn zeta_even(k: i64) -> Result<PiPoly> {
    if k <= 0 {
        return Err(Error::ZetaOutOfRange);
    }
    Ok(PiPoly::monomial(zeta_coeff(k as u32), k as u32))
}

/// `γ_k = C(2k, k) / 4^k`.
pub fn gamma_binomial(k: u32) -> Rational {
    Rational::new(binomial(2 * k, k), BigInt::one() << (2 * k))
}

/// `k!·γ_k = (2k)! / (k! 4^k)`, continued to negative `k` as the limit of
/// `Γ(2m+1) / (Γ(m+1) 4^m)` at `m → k`, which is
/// `(-1)^k (-k-1)! 4^{-k} / (2 (-2k-1)!)`.
pub fn factorial_times_gamma(k: i64) -> Rational {
    if k >= 0 {
        let k = k as u32;
        return factorial_q(k) * gamma_binomial(k);
    }
    let j = (-k) as u32;
    let sign = if j.is_multiple_of(2) { int(1) } else { int(-1) };
    let four_pow = Rational::from_integer(BigInt::one() << (2 * j));
    sign * factorial_q(j - 1) * four_pow / (int(2) * factorial_q(2 * j - 1))
}

/// A finite sum `Σ_k r_k π^{2k}` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl PiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::monomial(r, 0)
    }

    /// `r · π^{2k}`.
    pub fn monomial(r: Rational, k: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(k, r);
        }
        Self { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, r) in terms {
            out.add_term(k, &r);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(k, r)| (*k, r))
    }

    /// `(r, k)` when the value is exactly `r π^{2k}` with `r ≠ 0`.
    pub fn single_grade(&self) -> Option<(&Rational, u32)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.coeffs.iter().next().map(|(k, r)| (r, *k))
    }

    /// Coefficient at grade `k` if nothing else is present; zero counts as any grade.
    pub fn expect_grade(&self, k: u32) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&k).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, k: u32, r: &Rational) {
        if r.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *slot += r;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Multiplication by `π^{2k}`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(g, c)| (g + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|(k, r)| r.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(2 * *k as i32))
            .sum()
    }
}

impl From<Rational> for PiPoly {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for &PiPoly {
    type Output = PiPoly;
    fn add(self, rhs: &PiPoly) -> PiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PiPoly {
    type Output = PiPoly;
    fn add(mut self, rhs: PiPoly) -> PiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&PiPoly> for PiPoly {
    fn add_assign(&mut self, rhs: &PiPoly) {
        for (k, r) in &rhs.coeffs {
            self.add_term(*k, r);
        }
    }
}

impl AddAssign for PiPoly {
    fn add_assign(&mut self, rhs: PiPoly) {
        *self += &rhs;
    }
}

impl Neg for &PiPoly {
    type Output = PiPoly;
    fn neg(self) -> PiPoly {
        PiPoly {
            coeffs: self.coeffs.iter().map(|(k, r)| (*k, -r)).collect(),
        }
    }
}

impl Neg for PiPoly {
    type Output = PiPoly;
    fn neg(self) -> PiPoly {
        -&self
    }
}

impl Sub for &PiPoly {
    type Output = PiPoly;
    fn sub(self, rhs: &PiPoly) -> PiPoly {
        self + &(-rhs)
    }
}

impl Sub for PiPoly {
    type Output = PiPoly;
    fn sub(self, rhs: PiPoly) -> PiPoly {
        &self - &rhs
    }
}

impl Mul for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &PiPoly) -> PiPoly {
        let mut out = PiPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Mul for PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: PiPoly) -> PiPoly {
        &self * &rhs
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, r) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{r}")?;
            } else {
                write!(f, "{r}*pi^{}", 2 * k)?;
            }
        }
        Ok(())
    }
}

/// Lagrange interpolation through `(x_i, y_i)`, evaluated at `x`.
pub fn lagrange_eval(points: &[(Rational, Rational)], x: &Rational) -> Rational {
    let mut total = Rational::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = yi.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                term = term * (x - xj) / (xi - xj);
            }
        }
        total += term;
    }
    total
}

/// Coefficients (ascending powers) of the interpolating polynomial.
pub fn lagrange_coeffs(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis numerator Π_{j≠i} (x - x_j), built in ascending powers
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let w = yi / denom;
        for (p, c) in basis.iter().enumerate() {
            out[p] += c * &w;
        }
    }
    out
}

/// Horner evaluation of ascending coefficients.
pub fn poly_eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0).unwrap(), int(1));
        assert_eq!(bernoulli_number(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_number(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli_number(12).unwrap(), rat(-691, 2730));
        assert_eq!(bernoulli_number(3), Err(Error::OddBernoulliIndex));
    }

    #[test]
    fn bernoulli_recurrence() {
        for m in 1..30u32 {
            let s = (0..=m).fold(Rational::zero(), |acc, j| {
                acc + Rational::from_integer(binomial(m + 1, j)) * bernoulli_any(j)
            });
            assert!(s.is_zero(), "m={m}");
        }
    }

    #[test]
    fn zeta_small() {
        assert_eq!(zeta_even(1).unwrap(), PiPoly::monomial(rat(1, 6), 1));
        assert_eq!(zeta_even(2).unwrap(), PiPoly::monomial(rat(1, 90), 2));
        assert_eq!(zeta_even(3).unwrap(), PiPoly::monomial(rat(1, 945), 3));
        assert_eq!(zeta_even(0), Err(Error::ZetaOutOfRange));
    }

    #[test]
    fn zeta_against_partial_sums() {
        for k in 1..=12i32 {
            let exact = zeta_even(k as i64).unwrap().to_f64();
            // Euler–Maclaurin tail keeps the direct sum honest for k = 1
            let n = 200_000u32;
            let mut s: f64 = (1..=n).rev().map(|m| (m as f64).powi(-2 * k)).sum();
            let nf = n as f64;
            let p = 2.0 * k as f64;
            s += nf.powf(1.0 - p) / (p - 1.0) - 0.5 * nf.powf(-p) + p / 12.0 * nf.powf(-p - 1.0);
            assert!(((s - exact) / exact).abs() < 1e-10, "k={k}: {s} vs {exact}");
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_binomial(0), int(1));
        assert_eq!(gamma_binomial(2), rat(3, 8));
        assert_eq!(gamma_binomial(4), rat(35, 128));
        assert_eq!(factorial_times_gamma(3), int(6) * gamma_binomial(3));
        assert_eq!(factorial_times_gamma(-1), int(-2));
    }

    #[test]
    fn double_factorial_continuation() {
        assert_eq!(double_factorial(-1), int(1));
        assert_eq!(double_factorial(-3), int(-1));
        assert_eq!(double_factorial(-5), rat(1, 3));
        assert_eq!(double_factorial(-7), rat(-1, 15));
        assert_eq!(double_factorial(7), int(105));
    }

    #[test]
    fn display() {
        let p = PiPoly::from_terms([(1, rat(1, 12)), (0, rat(1, 8))]);
        assert_eq!(p.to_string(), "1/8 + 1/12*pi^2");
        assert_eq!(PiPoly::zero().to_string(), "0");
    }

    #[test]
    fn interpolation_roundtrip() {
        let pts: Vec<_> = (0..4).map(|x| (int(x), int(x * x * x - 2 * x + 5))).collect();
        assert_eq!(lagrange_coeffs(&pts), vec![int(5), int(-2), int(0), int(1)]);
        assert_eq!(lagrange_eval(&pts, &int(7)), int(343 - 14 + 5));
    }

    fn pipoly() -> impl Strategy<Value = PiPoly> {
        proptest::collection::vec((0u32..4, -20i64..20, 1i64..9), 0..4)
            .prop_map(|ts| PiPoly::from_terms(ts.into_iter().map(|(k, p, q)| (k, rat(p, q)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in pipoly(), b in pipoly(), c in pipoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a * &PiPoly::zero()).is_zero());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn no_stored_zeros(a in pipoly(), b in pipoly()) {
            let s = &a - &b;
            prop_assert!(s.terms().all(|(_, r)| !r.is_zero()));
        }
    }
}
