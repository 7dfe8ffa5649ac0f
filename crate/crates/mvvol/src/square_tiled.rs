//! Lattice-point counts of the combinatorial moduli space (discrete
//! topological recursion), `q`-series of square-tiled surfaces with
//! boundary, and numerical checks of their large-length limits.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorial_q, int, lagrange_coeffs, PiPoly, Rational};
use crate::coeff::{dimension, is_stable, EvenPolynomial};
use crate::error::{Error, Result};
use crate::graphs::{enumerate_stable_graphs, StableGraph};
use crate::kontsevich;
use crate::virasoro::mv_polynomial;

/// Truncated power series `Σ_{k ≤ N} c_k q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Σ_{k ≥ 1} ℓ q^{kℓ}`, the expansion of `ℓ q^ℓ / (1 - q^ℓ)`.
    pub fn cylinder(length: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        let w = int(length as i64);
        let mut k = length;
        while k <= order {
            s.coeffs[k] = w.clone();
            k += length;
        }
        s
    }

    pub fn add_scaled(&mut self, other: &QSeries, c: &Rational) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `[x]_+`.
fn pos(x: i64) -> i64 {
    x.max(0)
}

/// Kontsevich `B` kernel restricted to the even-sum integer lattice.
fn kernel_b(l1: i64, l2: i64, l: i64) -> Rational {
    if (l1 + l2 + l) % 2 != 0 {
        return Rational::zero();
    }
    let num = pos(l1 - l2 - l) - pos(-l1 + l2 - l) + pos(l1 + l2 - l);
    Rational::new(num.into(), (2 * l1).into())
}

/// Kontsevich `C` kernel restricted to the even-sum integer lattice.
fn kernel_c(l1: i64, l: i64, lp: i64) -> Rational {
    if (l1 + l + lp) % 2 != 0 {
        return Rational::zero();
    }
    Rational::new(pos(l1 - l - lp).into(), l1.into())
}

/// Pointwise memo of `P_{g,n}`, keyed by genus and sorted lengths.
pub struct Norbury {
    memo: RwLock<HashMap<(u32, Vec<i64>), Rational>>,
}

impl Default for Norbury {
    fn default() -> Self {
        Self::new()
    }
}

impl Norbury {
    pub fn new() -> Self {
        Self {
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// `P_{g,n}(L)` for positive lengths; zero on unstable types.
    pub fn count(&self, g: u32, lengths: &[i64]) -> Rational {
        let n = lengths.len() as u32;
        if !is_stable(g, n) || lengths.iter().sum::<i64>() % 2 != 0 {
            return Rational::zero();
        }
        match (g, n) {
            (0, 3) => return Rational::one(),
            (1, 1) => {
                let l = lengths[0];
                return Rational::new((l * l - 4).into(), 48.into());
            }
            _ => {}
        }
        let mut key = lengths.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(v) = self.memo.read().unwrap().get(&(g, key.clone())) {
            return v.clone();
        }
        let v = self.recurse(g, &key);
        self.memo.write().unwrap().insert((g, key), v.clone());
        v
    }

    fn recurse(&self, g: u32, lengths: &[i64]) -> Rational {
        let l1 = lengths[0];
        let rest = &lengths[1..];
        let mut total = Rational::zero();
        for m in 0..rest.len() {
            let lm = rest[m];
            let mut args = Vec::with_capacity(rest.len());
            args.push(0);
            args.extend(rest.iter().enumerate().filter(|&(i, _)| i != m).map(|(_, &x)| x));
            for l in 1..l1 + lm {
                let b = kernel_b(l1, lm, l);
                if b.is_zero() {
                    continue;
                }
                args[0] = l;
                total += b * int(l) * self.count(g, &args);
            }
        }
        let mut glue = Rational::zero();
        for l in 1..l1 {
            for lp in 1..l1 - l {
                let c = kernel_c(l1, l, lp);
                if c.is_zero() {
                    continue;
                }
                let mut x = Rational::zero();
                if g >= 1 {
                    let mut args = vec![l, lp];
                    args.extend_from_slice(rest);
                    x += self.count(g - 1, &args);
                }
                for mask in 0u32..(1 << rest.len()) {
                    let mut left = vec![l];
                    let mut right = vec![lp];
                    for (i, &r) in rest.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            left.push(r);
                        } else {
                            right.push(r);
                        }
                    }
                    for h in 0..=g {
                        if !is_stable(h, left.len() as u32) || !is_stable(g - h, right.len() as u32) {
                            continue;
                        }
                        let a = self.count(h, &left);
                        if !a.is_zero() {
                            x += a * self.count(g - h, &right);
                        }
                    }
                }
                glue += c * int(l * lp) * x;
            }
        }
        total + glue / int(2)
    }
}

pub fn global() -> &'static Norbury {
    static INSTANCE: OnceLock<Norbury> = OnceLock::new();
    INSTANCE.get_or_init(Norbury::new)
}

fn check_lengths(lengths: &[i64]) -> Result<()> {
    if lengths.iter().any(|&l| l <= 0) {
        return Err(Error::InvalidBoundaryLength);
    }
    Ok(())
}

pub fn norbury_count(g: u32, n: u32, lengths: &[i64]) -> Result<Rational> {
    if lengths.len() != n as usize {
        return Err(Error::ArityMismatch);
    }
    if !is_stable(g, n) {
        return Err(Error::UnstableType);
    }
    check_lengths(lengths)?;
    Ok(global().count(g, lengths))
}

/// Edge slots and the boundary lengths seen by each vertex of a graph.
struct VertexArgs {
    genus: u32,
    leaves: Vec<i64>,
    edges: Vec<usize>,
}

fn vertex_args(graph: &StableGraph, lengths: &[i64]) -> Vec<VertexArgs> {
    let mut out: Vec<VertexArgs> = graph
        .genus
        .iter()
        .map(|&h| VertexArgs {
            genus: h,
            leaves: Vec::new(),
            edges: Vec::new(),
        })
        .collect();
    for (i, &v) in graph.leaves.iter().enumerate() {
        out[v].leaves.push(lengths[i]);
    }
    for (e, (a, b)) in graph.edges().into_iter().enumerate() {
        out[a].edges.push(e);
        out[b].edges.push(e);
    }
    out
}

fn vertex_product(args: &[VertexArgs], edge_lengths: &[i64]) -> Rational {
    let counts = global();
    let mut prod = Rational::one();
    for v in args {
        let mut ls = v.leaves.clone();
        ls.extend(v.edges.iter().map(|&e| edge_lengths[e]));
        let c = counts.count(v.genus, &ls);
        if c.is_zero() {
            return c;
        }
        prod *= c;
    }
    prod
}

/// Generating series of square-tiled surfaces with boundary lengths `L`,
/// truncated at `q^order`.
pub fn sts_series(g: u32, n: u32, lengths: &[i64], order: usize) -> Result<QSeries> {
    if lengths.len() != n as usize {
        return Err(Error::ArityMismatch);
    }
    check_lengths(lengths)?;
    let graphs = enumerate_stable_graphs(g, n)?;
    let mut total = QSeries::zero(order);
    for graph in graphs.iter() {
        let args = vertex_args(graph, lengths);
        let inv_aut = Rational::new(1.into(), graph.aut_count().into());
        let e = graph.edge_count() as usize;
        if e == 0 {
            let c = vertex_product(&args, &[]);
            total.coeffs[0] += c * &inv_aut;
            continue;
        }
        // each edge contributes at least q^{ℓ_e}, so Σ ℓ_e ≤ order
        if e > order {
            continue;
        }
        let mut ell = vec![1i64; e];
        loop {
            let c = vertex_product(&args, &ell);
            if !c.is_zero() {
                let mut term = QSeries::constant(c * &inv_aut, order);
                for &l in &ell {
                    term = term.mul(&QSeries::cylinder(l as usize, order));
                }
                total.add_scaled(&term, &Rational::one());
            }
            if !next_bounded(&mut ell, order as i64) {
                break;
            }
        }
    }
    Ok(total)
}

/// Advances `ell` to the next vector of positive entries with sum at most `bound`.
fn next_bounded(ell: &mut [i64], bound: i64) -> bool {
    for i in 0..ell.len() {
        ell[i] += 1;
        if ell.iter().sum::<i64>() <= bound {
            return true;
        }
        ell[i] = 1;
    }
    false
}

/// Exact and floating distance between `P(TL)/T^{6g-6+2n}` and its
/// polynomial limit `2^{-(2g-3+n)} VΩ^K(L)`.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub scaled_count: Rational,
    pub limit: Rational,
    pub difference: Rational,
    pub delta: f64,
}

/// `VΩ^K_{g,n}(L) = Σ_{|d| = 3g-3+n} F^K[d] Π L_i^{2d_i}/(2d_i+1)!`.
pub fn kontsevich_polynomial(g: u32, n: u32) -> Result<EvenPolynomial> {
    if !is_stable(g, n) {
        return Err(Error::UnstableType);
    }
    let dim = dimension(g, n).unwrap();
    let mut poly = EvenPolynomial::zero(g, n);
    let k = kontsevich::global();
    for d in crate::virasoro::exponent_lists(n, dim) {
        if d.iter().sum::<u32>() == dim {
            poly.add(&d, &PiPoly::from_rational(k.coeff(g, &d)));
        }
    }
    Ok(poly)
}

fn two_power(g: u32, n: u32) -> Rational {
    // 2^{-(2g-3+n)}
    let e = 2 * g as i64 - 3 + n as i64;
    if e >= 0 {
        Rational::new(1.into(), num_bigint::BigInt::one() << e as usize)
    } else {
        Rational::from_integer(num_bigint::BigInt::one() << (-e) as usize)
    }
}

pub fn norbury_asymptotic_check(g: u32, n: u32, lengths: &[i64], t: i64) -> Result<AsymptoticReport> {
    if t <= 0 || t % 2 != 0 {
        return Err(Error::InvalidBoundaryLength);
    }
    let scaled: Vec<i64> = lengths.iter().map(|&l| l * t).collect();
    let count = norbury_count(g, n, &scaled)?;
    let power = 6 * g as i64 - 6 + 2 * n as i64;
    let scaled_count = count / Rational::from_integer(num_bigint::BigInt::from(t).pow(power as u32));
    let poly = kontsevich_polynomial(g, n)?;
    let ls: Vec<PiPoly> = lengths.iter().map(|&l| PiPoly::from_rational(int(l))).collect();
    let limit = crate::coeff::evaluate(&poly, &ls)?.coeff(0) * two_power(g, n);
    let difference = &scaled_count - &limit;
    let delta = difference.to_f64().unwrap_or(f64::NAN).abs();
    Ok(AsymptoticReport {
        scaled_count,
        limit,
        difference,
        delta,
    })
}

/// Floating evaluation of `T^{-(6g-6+2n)} P^{□, q = e^{-1/T}}(TL)` against
/// `2^{-(2g-3+n)} VΩ^{MV}(L)`.
#[derive(Clone, Debug)]
pub struct ScalingReport {
    pub value: f64,
    pub target: f64,
    pub deviation: f64,
    pub relative: f64,
    /// Bound on the neglected tail of one edge sum.
    pub tail_bound: f64,
}

/// `ℓ q^ℓ / (1 - q^ℓ)` at `q = e^{-1/T}`.
fn cylinder_weight(l: i64, t: f64) -> f64 {
    let x = l as f64 / t;
    l as f64 * (-x).exp() / -(-x).exp_m1()
}

pub fn mv_scaling_check(g: u32, n: u32, lengths: &[i64], t: i64) -> Result<ScalingReport> {
    if t <= 0 || t % 2 != 0 {
        return Err(Error::InvalidBoundaryLength);
    }
    if lengths.len() != n as usize {
        return Err(Error::ArityMismatch);
    }
    check_lengths(lengths)?;
    let tf = t as f64;
    let cutoff = 50 * t;
    let scaled: Vec<i64> = lengths.iter().map(|&l| l * t).collect();
    let graphs = enumerate_stable_graphs(g, n)?;
    let mut value = 0.0;
    for graph in graphs.iter() {
        let args = vertex_args(graph, &scaled);
        let inv_aut = 1.0 / graph.aut_count() as f64;
        let e = graph.edge_count() as usize;
        let mut ell = vec![1i64; e];
        loop {
            let c = vertex_product(&args, &ell);
            if !c.is_zero() {
                let w: f64 = ell.iter().map(|&l| cylinder_weight(l, tf)).product();
                value += c.to_f64().unwrap_or(f64::NAN) * w * inv_aut;
            }
            let mut i = 0;
            while i < e {
                ell[i] += 1;
                if ell[i] <= cutoff {
                    break;
                }
                ell[i] = 1;
                i += 1;
            }
            if i == e {
                break;
            }
        }
    }
    value /= tf.powi(6 * g as i32 - 6 + 2 * n as i32);
    let poly = mv_polynomial(g, n)?;
    let ls: Vec<PiPoly> = lengths.iter().map(|&l| PiPoly::from_rational(int(l))).collect();
    let target = crate::coeff::evaluate(&poly, &ls)?.to_f64() * two_power(g, n).to_f64().unwrap();
    // Σ_{ℓ > M} ℓ x^ℓ / (1 - x^ℓ) ≤ x^{M+1}((M+1) - M x) / ((1-x)^2 (1 - x^M)), x = e^{-1/T}
    let x = (-1.0 / tf).exp();
    let m = cutoff as f64;
    let tail_bound = x.powf(m + 1.0) * ((m + 1.0) - m * x) / ((1.0 - x).powi(2) * (1.0 - x.powf(m)));
    let deviation = (value - target).abs();
    Ok(ScalingReport {
        value,
        target,
        deviation,
        relative: deviation / target.abs(),
        tail_bound,
    })
}

/// Piecewise-polynomial form of `P_{g,n}`: one dense polynomial in the
/// lengths per parity pattern with an even number of odd entries.
#[derive(Clone, Debug)]
pub struct QuasiPoly {
    pub g: u32,
    pub n: u32,
    /// Maximal exponent per variable.
    pub width: u32,
    /// Coefficients indexed by the exponent vector in base `width + 1`.
    pub classes: BTreeMap<Vec<bool>, Vec<Rational>>,
}

fn exponent_vector(mut code: usize, n: usize, base: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(code % base);
        code /= base;
    }
    out
}

impl QuasiPoly {
    /// Tensor-grid interpolation of pointwise counts in each parity class,
    /// using points `L_i ∈ {p, p+2, …}` with `p ∈ {1, 2}` the class parity.
    pub fn fit(g: u32, n: u32) -> Result<Self> {
        if !is_stable(g, n) {
            return Err(Error::UnstableType);
        }
        let width = 2 * dimension(g, n).unwrap();
        let base = width as usize + 1;
        let size = base.pow(n);
        let mut classes = BTreeMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let odd: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
            let point = |steps: &[usize]| -> Vec<i64> {
                steps
                    .iter()
                    .zip(&odd)
                    .map(|(&s, &o)| if o { 1 } else { 2 } + 2 * s as i64)
                    .collect()
            };
            let mut grid: Vec<Rational> = (0..size)
                .map(|c| global().count(g, &point(&exponent_vector(c, n as usize, base))))
                .collect();
            // interpolate axis by axis
            for (axis, &odd_axis) in odd.iter().enumerate() {
                let stride = base.pow(axis as u32);
                for c in 0..size {
                    if !(c / stride).is_multiple_of(base) {
                        continue;
                    }
                    let pts: Vec<(Rational, Rational)> = (0..base)
                        .map(|s| {
                            let x = if odd_axis { 1 } else { 2 } + 2 * s as i64;
                            (int(x), grid[c + s * stride].clone())
                        })
                        .collect();
                    for (s, v) in lagrange_coeffs(&pts).into_iter().enumerate() {
                        grid[c + s * stride] = v;
                    }
                }
            }
            classes.insert(odd, grid);
        }
        Ok(Self { g, n, width, classes })
    }

    pub fn evaluate(&self, lengths: &[i64]) -> Rational {
        if lengths.iter().sum::<i64>() % 2 != 0 {
            return Rational::zero();
        }
        let odd: Vec<bool> = lengths.iter().map(|l| l % 2 != 0).collect();
        let coeffs = &self.classes[&odd];
        let base = self.width as usize + 1;
        let mut total = Rational::zero();
        for (c, v) in coeffs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let e = exponent_vector(c, self.n as usize, base);
            let mono = e
                .iter()
                .zip(lengths)
                .fold(Rational::one(), |acc, (&k, &l)| acc * int(l.pow(k as u32)));
            total += v * mono;
        }
        total
    }

    /// Largest total degree with a nonzero coefficient in any class.
    pub fn total_degree(&self) -> usize {
        let base = self.width as usize + 1;
        self.classes
            .values()
            .flat_map(|coeffs| {
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(c, _)| exponent_vector(c, self.n as usize, base).iter().sum::<usize>())
            })
            .max()
            .unwrap_or(0)
    }

    /// Homogeneous part of degree `6g-6+2n` in one parity class, on the
    /// even basis `Π L_i^{2d_i}/(2d_i+1)!`.
    pub fn top_part(&self, odd: &[bool]) -> EvenPolynomial {
        let base = self.width as usize + 1;
        let top = 2 * dimension(self.g, self.n).unwrap() as usize;
        let mut poly = EvenPolynomial::zero(self.g, self.n);
        for (c, v) in self.classes[odd].iter().enumerate() {
            let e = exponent_vector(c, self.n as usize, base);
            if v.is_zero() || e.iter().sum::<usize>() != top {
                continue;
            }
            if e.iter().any(|k| k % 2 != 0) {
                // odd monomials in the top part would break evenness
                poly.add(&vec![u32::MAX; self.n as usize], &PiPoly::from_rational(v.clone()));
                continue;
            }
            let d: Vec<u32> = e.iter().map(|&k| (k / 2) as u32).collect();
            if d.windows(2).all(|w| w[0] >= w[1]) {
                let basis = d.iter().fold(Rational::one(), |acc, &x| acc * factorial_q(2 * x + 1));
                poly.add(&d, &PiPoly::from_rational(v * basis));
            }
        }
        poly
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn sigma1(k: usize) -> i64 {
        (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| d as i64).sum()
    }

    #[test]
    fn count_examples() {
        assert_eq!(norbury_count(0, 3, &[1, 1, 2]).unwrap(), int(1));
        assert_eq!(norbury_count(1, 1, &[4]).unwrap(), rat(1, 4));
        assert_eq!(norbury_count(0, 3, &[1, 2, 2]).unwrap(), int(0));
        assert_eq!(norbury_count(1, 1, &[0]), Err(Error::InvalidBoundaryLength));
        assert_eq!(norbury_count(0, 4, &[2, 2, 2, 2]).unwrap(), int(3));
    }

    #[test]
    fn series_examples() {
        let s = sts_series(1, 1, &[2], 5).unwrap();
        let expect: Vec<Rational> = [0, 1, 3, 4, 7, 6].iter().map(|&x| rat(x, 2)).collect();
        assert_eq!(s.coeffs(), expect.as_slice());
        assert_eq!(s.to_string(), "1/2*q + 3/2*q^2 + 2*q^3 + 7/2*q^4 + 3*q^5");
        assert_eq!(sts_series(0, 3, &[1, 1, 2], 6).unwrap(), QSeries::constant(int(1), 6));
        assert!(sts_series(1, 1, &[3], 6).unwrap().is_zero());
    }

    #[test]
    fn divisor_sums_through_twenty() {
        let s = sts_series(1, 1, &[2], 20).unwrap();
        for k in 1..=20 {
            assert_eq!(s.coeff(k), &rat(sigma1(k), 2));
        }
    }

    #[test]
    fn constant_term_is_lattice_count() {
        for (g, ls) in [
            (0u32, vec![2i64, 2, 2, 2]),
            (0, vec![1, 3, 2, 4]),
            (1, vec![4, 2]),
            (1, vec![6]),
        ] {
            let n = ls.len() as u32;
            let s = sts_series(g, n, &ls, 4).unwrap();
            assert_eq!(s.coeff(0), &norbury_count(g, n, &ls).unwrap());
        }
    }

    #[test]
    fn parity_vanishing() {
        for ls in [vec![1i64, 2, 2, 2], vec![3, 1, 1, 4], vec![1, 2]] {
            let n = ls.len() as u32;
            let g = if n == 2 { 1 } else { 0 };
            assert!(norbury_count(g, n, &ls).unwrap().is_zero());
            assert!(sts_series(g, n, &ls, 6).unwrap().is_zero());
        }
    }

    #[test]
    fn quasi_polynomiality() {
        for (g, n) in [(0u32, 4u32), (1, 1), (1, 2)] {
            let qp = QuasiPoly::fit(g, n).unwrap();
            assert!(qp.total_degree() <= (6 * g + 2 * n - 6) as usize);
            // points beyond the fitting grid
            for a in 1..=9i64 {
                for b in [3i64, 8, 11] {
                    let mut ls = vec![a + 7, b];
                    ls.truncate(n as usize);
                    while ls.len() < n as usize {
                        ls.push(a + b + ls.len() as i64);
                    }
                    assert_eq!(qp.evaluate(&ls), global().count(g, &ls), "g={g} L={ls:?}");
                }
            }
            // top-degree part reproduces the scaled Kontsevich polynomial
            let limit = kontsevich_polynomial(g, n).unwrap().scale(&two_power(g, n));
            for odd in qp.classes.keys() {
                assert_eq!(qp.top_part(odd), limit, "g={g} class={odd:?}");
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        for t in [2i64, 4, 8, 16] {
            let r = norbury_asymptotic_check(1, 1, &[2], t).unwrap();
            assert_eq!(r.difference, Rational::new((-1).into(), (12 * t * t).into()));
            let r = norbury_asymptotic_check(0, 3, &[1, 1, 2], t).unwrap();
            assert!(r.difference.is_zero());
        }
        let deltas: Vec<f64> = [4i64, 8, 16, 32]
            .iter()
            .map(|&t| norbury_asymptotic_check(0, 4, &[1, 1, 1, 1], t).unwrap().delta)
            .collect();
        assert!(deltas.windows(2).all(|w| w[1] < w[0]), "{deltas:?}");
    }

    #[test]
    fn scaling_for_pair_of_pants() {
        let r = mv_scaling_check(0, 3, &[1, 1, 2], 16).unwrap();
        assert!(r.deviation < 1e-12);
    }
}
