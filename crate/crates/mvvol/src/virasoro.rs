//! Masur–Veech coefficients from the twisted Virasoro constraints, the
//! specialized genus-zero one-row recursion, and volume normalizations.
//!
//! Every coefficient `F_{g,n}[d]` is a rational multiple of
//! `π^{2(3g-3+n-Σd)}`, so the recursion runs on rationals and the grade is
//! reattached on the way out.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial_q, int, zeta_coeff, PiPoly, Rational};
use crate::coeff::{dimension, is_stable, CoeffTable, EvenPolynomial, MultiIndex, Theory};
use crate::error::{Error, Result};

/// `u_{a,b} = (2a+2b+1)! / ((2a+1)!(2b+1)!) · ζ(2a+2b+2)`.
pub fn twist_weight(a: u32, b: u32) -> PiPoly {
    PiPoly::monomial(twist_coeff(a, b), a + b + 1)
}

pub(crate) fn twist_coeff(a: u32, b: u32) -> Rational {
    factorial_q(2 * a + 2 * b + 1) / (factorial_q(2 * a + 1) * factorial_q(2 * b + 1)) * zeta_coeff(a + b + 1)
}

/// Rational part of the gluing kernel `C^i_{a,b}`.
fn glue_kernel(i: u32, a: u32, b: u32) -> Rational {
    let mut c = Rational::zero();
    if i == a + b + 2 {
        c += Rational::one();
    }
    if b + 1 >= i {
        c += half_twist(a, b + 1 - i);
    }
    if a + 1 >= i {
        c += half_twist(b, a + 1 - i);
    }
    if i == 0 {
        c += zeta_coeff(a + 1) * zeta_coeff(b + 1);
    }
    c
}

/// `(2a+2j+1)! ζ(2a+2j+2) / ((2a+1)!(2j)!)` without its π-power.
fn half_twist(a: u32, j: u32) -> Rational {
    factorial_q(2 * a + 2 * j + 1) / (factorial_q(2 * a + 1) * factorial_q(2 * j)) * zeta_coeff(a + j + 1)
}

fn without(d: &[u32], pos: usize) -> Vec<u32> {
    d.iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, &x)| x)
        .collect()
}

pub struct MasurVeech {
    table: CoeffTable,
    row0: RwLock<HashMap<(u32, u32), Rational>>,
}

impl Default for MasurVeech {
    fn default() -> Self {
        Self::new()
    }
}

impl MasurVeech {
    pub fn new() -> Self {
        Self {
            table: CoeffTable::new(Theory::MasurVeech),
            row0: RwLock::new(HashMap::new()),
        }
    }

    pub fn table(&self) -> &CoeffTable {
        &self.table
    }

    /// Rational part of `F_{g,n}[d]`; zero for unstable or over-degree input.
    pub fn coeff(&self, g: u32, d: &[u32]) -> Rational {
        let n = d.len() as u32;
        if !is_stable(g, n) {
            return Rational::zero();
        }
        let dim = dimension(g, n).unwrap();
        if d.iter().sum::<u32>() > dim {
            return Rational::zero();
        }
        match (g, n) {
            (0, 3) => return Rational::one(),
            (1, 1) => {
                return match d[0] {
                    0 => zeta_coeff(1) / int(2),
                    _ => Rational::new(1.into(), 8.into()),
                }
            }
            _ => {}
        }
        let idx = MultiIndex::sorted(g, d.to_vec());
        if let Some(v) = self.table.lookup(&idx) {
            return v;
        }
        let v = self.recurse_at(g, idx.exponents(), 0);
        self.table.store(idx, v.clone());
        v
    }

    /// One step of the constraint that removes the exponent at `pos`.
    pub fn recurse_at(&self, g: u32, d: &[u32], pos: usize) -> Rational {
        let n = d.len() as u32;
        let d1 = d[pos];
        let rest = without(d, pos);
        let mut total = Rational::zero();

        let lower_dim = dimension(g, n - 1).unwrap_or(0);
        for m in 0..rest.len() {
            let dm = rest[m];
            let others = without(&rest, m);
            if d1 + dm >= 1 {
                let mut next = vec![d1 + dm - 1];
                next.extend_from_slice(&others);
                total += int(2 * dm as i64 + 1) * self.coeff(g, &next);
            }
            if d1 == 0 && dm == 0 {
                for a in 0..=lower_dim {
                    let mut next = vec![a];
                    next.extend_from_slice(&others);
                    let f = self.coeff(g, &next);
                    if !f.is_zero() {
                        total += zeta_coeff(a + 1) * f;
                    }
                }
            }
        }

        let rest_sum: u32 = rest.iter().sum();
        if let Some(budget) = (3 * g + n).checked_sub(5 + rest_sum) {
            let mut glue = Rational::zero();
            for a in 0..=budget {
                for b in 0..=budget - a {
                    let mut x = Rational::zero();
                    if g >= 1 {
                        let mut next = vec![a, b];
                        next.extend_from_slice(&rest);
                        x += self.coeff(g - 1, &next);
                    }
                    x += self.split_sum(g, a, b, &rest);
                    if x.is_zero() {
                        continue;
                    }
                    glue += glue_kernel(d1, a, b) * x;
                }
            }
            total += glue / int(2);
        }
        total
    }

    fn split_sum(&self, g: u32, a: u32, b: u32, rest: &[u32]) -> Rational {
        let mut total = Rational::zero();
        for mask in 0u32..(1 << rest.len()) {
            let mut left = vec![a];
            let mut right = vec![b];
            for (i, &x) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(x);
                } else {
                    right.push(x);
                }
            }
            for h in 0..=g {
                if !is_stable(h, left.len() as u32) || !is_stable(g - h, right.len() as u32) {
                    continue;
                }
                let l = self.coeff(h, &left);
                if l.is_zero() {
                    continue;
                }
                total += l * self.coeff(g - h, &right);
            }
        }
        total
    }

    /// `F_{g,n}[d]` with its π-power attached.
    pub fn coeff_pi(&self, g: u32, d: &[u32]) -> PiPoly {
        let n = d.len() as u32;
        let grade = dimension(g, n)
            .and_then(|dim| dim.checked_sub(d.iter().sum()))
            .unwrap_or(0);
        PiPoly::monomial(self.coeff(g, d), grade)
    }

    /// `H_n[d]` in genus zero by the one-row recursion, rational part only.
    pub fn genus0_row(&self, n: u32, d: u32) -> Rational {
        if n < 3 || d + 3 > n {
            return Rational::zero();
        }
        if n == 3 {
            return Rational::one();
        }
        if let Some(v) = self.row0.read().unwrap().get(&(n, d)) {
            return v.clone();
        }
        let v = self.genus0_row_step(n, d);
        self.row0.write().unwrap().insert((n, d), v.clone());
        v
    }

    fn genus0_row_step(&self, n: u32, d: u32) -> Rational {
        let mut total = Rational::zero();
        let nm1 = int(n as i64 - 1);
        if d == 0 {
            for a in 0..=n - 4 {
                total += &nm1 * zeta_coeff(a + 1) * self.genus0_row(n - 1, a);
            }
        } else {
            total += &nm1 * self.genus0_row(n - 1, d - 1);
        }
        let mut glue = Rational::zero();
        for j in 2..=n.saturating_sub(3) {
            let choose = Rational::from_integer(binomial(n - 1, j));
            for a in 0..=j - 2 {
                let left = self.genus0_row(1 + j, a);
                for b in 0..=n - j - 3 {
                    let right = self.genus0_row(n - j, b);
                    let w = match d {
                        0 => {
                            factorial_q(2 * a + 2 * b + 4) * zeta_coeff(a + b + 2)
                                / (factorial_q(2 * a + 2) * factorial_q(2 * b + 2))
                                + zeta_coeff(a + 1) * zeta_coeff(b + 1)
                        }
                        1 => {
                            factorial_q(2 * a + 2 * b + 2) * zeta_coeff(a + b + 1)
                                / (factorial_q(2 * a + 1) * factorial_q(2 * b + 1))
                        }
                        _ => {
                            let mut w = Rational::zero();
                            if a + b + 2 == d {
                                w += Rational::new(1.into(), 2.into());
                            }
                            if a + 1 >= d {
                                w += factorial_q(2 * a + 2 * b + 3 - 2 * d) * zeta_coeff(a + b + 2 - d)
                                    / (factorial_q(2 * b + 1) * factorial_q(2 * a + 2 - 2 * d));
                            }
                            w * int(2)
                        }
                    };
                    glue += &choose * w * &left * &right;
                }
            }
        }
        total + glue / int(2)
    }
}

pub fn global() -> &'static MasurVeech {
    static INSTANCE: OnceLock<MasurVeech> = OnceLock::new();
    INSTANCE.get_or_init(MasurVeech::new)
}

pub fn mv_coeff(idx: &MultiIndex) -> PiPoly {
    global().coeff_pi(idx.g(), idx.exponents())
}

/// `H_n[d] = F_{0,n}[d, 0, …, 0]` via the one-row recursion.
pub fn h_row_genus0(n: u32, d: u32) -> PiPoly {
    let grade = (n.saturating_sub(3)).saturating_sub(d);
    PiPoly::monomial(global().genus0_row(n, d), grade)
}

/// `H_{g,n}[d] = F_{g,n}[d, 0, …, 0]` via the full recursion.
pub fn h_row(g: u32, n: u32, d: u32) -> PiPoly {
    if n == 0 {
        return PiPoly::zero();
    }
    let mut idx = vec![0; n as usize];
    idx[0] = d;
    global().coeff_pi(g, &idx)
}

/// Descending exponent lists of length `n` with sum at most `max_sum`.
pub(crate) fn exponent_lists(n: u32, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, cap: u32, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=cap.min(budget) {
            prefix.push(x);
            go(n - 1, x, budget - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_sum, max_sum, &mut Vec::new(), &mut out);
    out
}

/// `VΩ^{MV}_{g,0}`: the constant `F_{g,1}[1] / (3(2g-2))` fixed by the dilaton relation.
fn closed_constant(g: u32) -> PiPoly {
    global()
        .coeff_pi(g, &[1])
        .scale(&(int(1) / int(3 * (2 * g as i64 - 2))))
}

pub fn mv_polynomial(g: u32, n: u32) -> Result<EvenPolynomial> {
    let mut poly = EvenPolynomial::zero(g, n);
    if n == 0 {
        if g < 2 {
            return Err(Error::UnstableType);
        }
        poly.add(&[], &closed_constant(g));
        return Ok(poly);
    }
    if !is_stable(g, n) {
        return Err(Error::UnstableType);
    }
    let mv = global();
    for d in exponent_lists(n, dimension(g, n).unwrap()) {
        poly.add(&d, &mv.coeff_pi(g, &d));
    }
    Ok(poly)
}

/// `VΩ^{MV}_{g,n}(0, …, 0)`; zero on unstable types.
pub fn vomega_at_zero(g: u32, n: u32) -> PiPoly {
    if n == 0 {
        return if g >= 2 { closed_constant(g) } else { PiPoly::zero() };
    }
    if !is_stable(g, n) {
        return PiPoly::zero();
    }
    global().coeff_pi(g, &vec![0; n as usize])
}

/// `2^{4g-2+n} (4g-4+n)! / (6g-7+2n)!`, the factor turning `VΩ(0)` into `MV`.
/// At `(0,3)` both factorials are `(-1)!` and their ratio is taken as the
/// limit value `2`, giving `MV_{0,3} = 4`.
pub fn volume_prefactor(g: u32, n: u32) -> Rational {
    if (g, n) == (0, 3) {
        return int(2) * int(2);
    }
    let pow = Rational::from_integer(BigInt::one() << (4 * g + n - 2));
    pow * factorial_q(4 * g + n - 4) / factorial_q(6 * g + 2 * n - 7)
}

pub fn mv_volume(g: u32, n: u32) -> Result<PiPoly> {
    if n == 0 {
        if g < 2 {
            return Err(Error::UndefinedVolume);
        }
        let pre =
            Rational::from_integer(BigInt::one() << (4 * g - 2)) * factorial_q(4 * g - 4) / factorial_q(6 * g - 6);
        return Ok(global().coeff_pi(g, &[1]).scale(&pre));
    }
    if !is_stable(g, n) {
        return Err(Error::UndefinedVolume);
    }
    if (g, n) == (0, 3) {
        return Ok(PiPoly::from_rational(int(4)));
    }
    Ok(vomega_at_zero(g, n).scale(&volume_prefactor(g, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::kontsevich;

    #[test]
    fn twist_weights() {
        assert_eq!(twist_weight(0, 0), PiPoly::monomial(rat(1, 6), 1));
        assert_eq!(twist_weight(1, 0), PiPoly::monomial(rat(1, 90), 2));
        assert_eq!(twist_weight(1, 1), PiPoly::monomial(rat(2, 567), 3));
    }

    #[test]
    fn coefficient_examples() {
        let mv = global();
        assert_eq!(mv.coeff_pi(1, &[0]), PiPoly::monomial(rat(1, 12), 1));
        assert_eq!(mv.coeff_pi(0, &[0; 4]), PiPoly::monomial(rat(1, 2), 1));
        assert_eq!(mv.coeff_pi(0, &[0; 5]), PiPoly::monomial(rat(3, 4), 2));
        assert_eq!(mv.coeff_pi(2, &[0]), PiPoly::monomial(rat(29, 2560), 4));
    }

    #[test]
    fn polynomial_examples() {
        let p03 = mv_polynomial(0, 3).unwrap();
        assert_eq!(p03.terms().count(), 1);
        assert_eq!(p03.coeff(&[0, 0, 0]), PiPoly::one());
        let p11 = mv_polynomial(1, 1).unwrap();
        assert_eq!(p11.coeff(&[0]), PiPoly::monomial(rat(1, 12), 1));
        assert_eq!(p11.coeff(&[1]), PiPoly::from_rational(rat(1, 8)));
        assert_eq!(mv_polynomial(0, 2), Err(Error::UnstableType));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(mv_volume(1, 1).unwrap(), PiPoly::monomial(rat(2, 3), 1));
        assert_eq!(mv_volume(0, 4).unwrap(), PiPoly::monomial(int(2), 1));
        assert_eq!(mv_volume(2, 0).unwrap(), PiPoly::monomial(rat(1, 15), 3));
        assert_eq!(mv_volume(1, 0), Err(Error::UndefinedVolume));
        assert_eq!(mv_volume(0, 2), Err(Error::UndefinedVolume));
        for n in 4..=9u32 {
            let expect = PiPoly::monomial(rat(32, 1 << n), n - 3);
            assert_eq!(mv_volume(0, n).unwrap(), expect, "n={n}");
        }
    }

    #[test]
    fn genus0_row_matches_full_recursion() {
        for n in 3..=10u32 {
            for d in 0..=n - 3 {
                assert_eq!(h_row_genus0(n, d), h_row(0, n, d), "n={n} d={d}");
            }
        }
        assert_eq!(h_row_genus0(4, 1), PiPoly::from_rational(int(3)));
        assert_eq!(h_row_genus0(5, 2), PiPoly::from_rational(int(15)));
        assert_eq!(h_row_genus0(3, 0), PiPoly::one());
    }

    #[test]
    fn top_degree_is_kontsevich() {
        let k = kontsevich::global();
        for (g, n) in [(0, 5), (0, 6), (1, 3), (2, 2), (3, 1)] {
            let dim = dimension(g, n).unwrap();
            for d in exponent_lists(n, dim) {
                if d.iter().sum::<u32>() == dim {
                    assert_eq!(global().coeff_pi(g, &d), PiPoly::from_rational(k.coeff(g, &d)));
                }
            }
        }
    }

    #[test]
    fn recursion_on_any_slot() {
        let mv = global();
        for (g, n) in [(0, 5), (0, 6), (1, 3), (1, 4), (2, 2)] {
            for d in exponent_lists(n, dimension(g, n).unwrap()) {
                let expect = mv.coeff(g, &d);
                for pos in 0..d.len() {
                    assert_eq!(mv.recurse_at(g, &d, pos), expect, "g={g} d={d:?} pos={pos}");
                }
            }
        }
    }

    #[test]
    fn cached_grades_are_consistent() {
        let _ = mv_polynomial(2, 2).unwrap();
        for (idx, value) in global().table().entries() {
            let grade = Theory::MasurVeech.grade(&idx).unwrap();
            assert!(value.is_zero() || value.single_grade().map(|(_, k)| k) == Some(grade));
        }
    }
}
