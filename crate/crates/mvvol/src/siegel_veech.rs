//! Area Siegel–Veech constants from Goujard's recursion, both in the
//! rescaled `VΩ(0)` form and literally in the volume normalization.

use num_traits::Zero;

use crate::arith::{binomial, factorial_q, int, rat, PiPoly, Rational};
use crate::coeff::is_stable;
use crate::error::{Error, Result};
use crate::virasoro::{mv_volume, vomega_at_zero};

fn check_type(g: u32, n: u32) -> Result<()> {
    if 2 * g + n < 4 {
        return Err(Error::SiegelVeechUndefined);
    }
    Ok(())
}

/// `x / y` for single-graded values, returned with its grade.
fn divide(x: &PiPoly, y: &PiPoly) -> (Rational, i64) {
    let (ry, ky) = y.single_grade().expect("divisor must be a nonzero monomial");
    match x.single_grade() {
        Some((rx, kx)) => (rx / ry, kx as i64 - ky as i64),
        None => {
            assert!(x.is_zero(), "numerator spans several grades");
            (Rational::zero(), 0)
        }
    }
}

/// `SV_{g,n} · VΩ^{MV}_{g,n}(0)`, a multiple of `π^{6g-8+2n}` (or `π^{6g-8}` when `n = 0`).
pub fn sv_times_vomega(g: u32, n: u32) -> PiPoly {
    let mut acc = PiPoly::zero();
    if g >= 1 {
        acc += vomega_at_zero(g - 1, n + 2);
    }
    let mut split = PiPoly::zero();
    for g1 in 0..=g {
        for n1 in 0..=n {
            let (g2, n2) = (g - g1, n - n1);
            let left = vomega_at_zero(g1, 1 + n1);
            if left.is_zero() {
                continue;
            }
            let right = vomega_at_zero(g2, 1 + n2);
            let c = Rational::from_integer(binomial(n, n1));
            split += (&left * &right).scale(&c);
        }
    }
    acc += split.scale(&rat(1, 2));
    acc.scale(&rat(1, 4))
}

/// `π² · SV_{g,n}` as a grade-0 value.
pub fn sv_constant(g: u32, n: u32) -> Result<PiPoly> {
    check_type(g, n)?;
    let (r, grade) = divide(&sv_times_vomega(g, n).shift(1), &vomega_at_zero(g, n));
    assert_eq!(grade, 0, "π²·SV must be rational");
    Ok(PiPoly::from_rational(r))
}

/// `(6g-5+2n)! / (4g-3+n)!` for the factor `MV_{g,1+n}` of the split sum,
/// with the `Γ`-limit value `1/2` at `(0, 2)`.
fn split_factor(g: u32, n: u32) -> Rational {
    if (g, n) == (0, 2) {
        return rat(1, 2);
    }
    factorial_q(6 * g + 2 * n - 5) / factorial_q(4 * g + n - 3)
}

/// `SV_{g,n} · MV_{g,n}` with the combinatorial prefactors of the volume
/// normalization. The first term carries
/// `(4g-4+n)(4g-5+n) / ((6g-7+2n)(6g-8+2n))` with no extra `1/4`: the
/// `2^{4g-2+n}` of the normalization absorbs it.
pub fn sv_times_mv(g: u32, n: u32) -> Result<PiPoly> {
    check_type(g, n)?;
    let top = factorial_q(4 * g + n - 4);
    let bottom = factorial_q(6 * g + 2 * n - 7);
    let mut acc = PiPoly::zero();
    if g >= 1 {
        let num = int((4 * g + n - 4) as i64 * (4 * g + n - 5) as i64);
        let den = int((6 * g + 2 * n - 7) as i64 * (6 * g + 2 * n - 8) as i64);
        let mv = mv_volume(g - 1, n + 2)?;
        acc += mv.scale(&(num / den));
    }
    for g1 in 0..=g {
        for n1 in 0..=n {
            let (g2, n2) = (g - g1, n - n1);
            if !is_stable(g1, 1 + n1) || !is_stable(g2, 1 + n2) {
                continue;
            }
            let c =
                Rational::from_integer(binomial(n, n1)) * &top / &bottom * split_factor(g1, n1) * split_factor(g2, n2);
            let term = &mv_volume(g1, 1 + n1)? * &mv_volume(g2, 1 + n2)?;
            acc += term.scale(&(c * rat(1, 8)));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::virasoro::vomega_at_zero;

    #[test]
    fn examples() {
        assert_eq!(sv_constant(0, 4).unwrap(), PiPoly::from_rational(rat(3, 2)));
        assert_eq!(sv_constant(1, 2).unwrap(), PiPoly::from_rational(rat(7, 3)));
        assert_eq!(sv_constant(2, 0).unwrap(), PiPoly::from_rational(rat(19, 6)));
        assert_eq!(sv_constant(1, 1), Err(Error::SiegelVeechUndefined));
        assert_eq!(sv_constant(0, 3), Err(Error::SiegelVeechUndefined));
        assert_eq!(sv_times_mv(1, 2).unwrap(), PiPoly::monomial(rat(7, 9), 1));
        assert_eq!(sv_times_mv(0, 5).unwrap(), PiPoly::monomial(rat(5, 3), 1));
        assert_eq!(sv_times_mv(2, 0).unwrap(), PiPoly::monomial(rat(19, 90), 2));
        assert_eq!(sv_times_vomega(2, 0), PiPoly::monomial(rat(19, 1152), 2));
    }

    #[test]
    fn genus_zero_closed_form() {
        for n in 4..=10u32 {
            assert_eq!(sv_constant(0, n).unwrap(), PiPoly::from_rational(rat(n as i64 + 5, 6)));
        }
    }

    #[test]
    fn normalizations_agree() {
        for g in 0..=3u32 {
            for n in 0..=4u32 {
                if 2 * g + n < 4 {
                    continue;
                }
                let lhs = sv_times_mv(g, n).unwrap();
                let sv = sv_constant(g, n).unwrap();
                let rhs = (&sv * &mv_volume(g, n).unwrap())
                    .single_grade()
                    .map(|(r, k)| PiPoly::monomial(r.clone(), k - 1))
                    .unwrap();
                assert_eq!(lhs, rhs, "g={g} n={n}");
            }
        }
    }

    /// Truncated series in `x` with coefficients in `x^k / k!` normalization.
    fn egf_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let len = a.len().min(b.len());
        (0..len)
            .map(|n| {
                (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + Rational::from_integer(binomial(n as u32, k as u32)) * &a[k] * &b[n - k]
                })
            })
            .collect()
    }

    #[test]
    fn square_root_partition_function() {
        // F_g(x) = Σ_n VΩ_{g,n}(0)/π^{6g-6+2n} x^n/n!, stored as exponential coefficients
        let order = 9usize;
        let free = |g: u32| -> Vec<Rational> {
            (0..order as u32)
                .map(|n| match vomega_at_zero(g, n).single_grade() {
                    Some((r, _)) if n >= 1 => r.clone(),
                    _ => Rational::zero(),
                })
                .collect()
        };
        let deriv = |s: &[Rational]| -> Vec<Rational> { s[1..].to_vec() };
        let alpha = rat(1, 2);
        for g in 0..=2u32 {
            // α F''_{g-1} + α² Σ F'_{g1} F'_{g2}
            let mut series = vec![Rational::zero(); order - 2];
            if g >= 1 {
                let f2 = deriv(&deriv(&free(g - 1)));
                for (k, c) in f2.iter().enumerate().take(order - 2) {
                    series[k] += &alpha * c;
                }
            }
            for g1 in 0..=g {
                let prod = egf_mul(&deriv(&free(g1)), &deriv(&free(g - g1)));
                for (k, c) in prod.iter().enumerate().take(order - 2) {
                    series[k] += &alpha * &alpha * c;
                }
            }
            for n in 0..order as u32 - 2 {
                if 2 * g + n < 4 {
                    continue;
                }
                let direct = sv_times_vomega(g, n).single_grade().map(|(r, _)| r.clone()).unwrap();
                assert_eq!(series[n as usize].clone() / int(2), direct, "g={g} n={n}");
            }
        }
    }
}
