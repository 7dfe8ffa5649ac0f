//! ψ-class intersection numbers through the DVV recursion, with the
//! genus-one closed formulas kept alongside as an independent check.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::arith::{double_factorial, factorial_q, int, multinomial, Rational};
use crate::coeff::{dimension, is_stable, CoeffTable, MultiIndex, Theory};
use crate::error::Result;

/// Memoized `F^K_{g,n}[d] = Π(2d_i+1)!! ⟨τ_{d_1} … τ_{d_n}⟩_g`.
pub struct Kontsevich {
    table: CoeffTable,
}

impl Default for Kontsevich {
    fn default() -> Self {
        Self::new()
    }
}

impl Kontsevich {
    pub fn new() -> Self {
        Self {
            table: CoeffTable::new(Theory::Kontsevich),
        }
    }

    pub fn table(&self) -> &CoeffTable {
        &self.table
    }

    /// Coefficient for any `(g, d)`; unstable or off-dimension input gives zero.
    pub fn coeff(&self, g: u32, d: &[u32]) -> Rational {
        self.coeff_sorted(MultiIndex::sorted(g, d.to_vec()))
    }

    fn coeff_sorted(&self, idx: MultiIndex) -> Rational {
        let (g, n) = (idx.g(), idx.n());
        if !is_stable(g, n) || dimension(g, n) != Some(idx.degree()) {
            return Rational::zero();
        }
        match (g, n) {
            (0, 3) => return Rational::one(),
            (1, 1) => return Rational::new(1.into(), 8.into()),
            _ => {}
        }
        if let Some(v) = self.table.lookup(&idx) {
            return v;
        }
        let v = self.recurse_at(idx.g(), idx.exponents(), 0);
        self.table.store(idx, v.clone());
        v
    }

    /// One recursion step removing the exponent at `pos`.
    pub fn recurse_at(&self, g: u32, d: &[u32], pos: usize) -> Rational {
        let d1 = d[pos];
        let rest: Vec<u32> = d
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, &x)| x)
            .collect();
        let rest = rest.as_slice();
        let mut total = Rational::zero();

        for m in 0..rest.len() {
            let dm = rest[m];
            if d1 + dm == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(rest.len());
            next.push(d1 + dm - 1);
            next.extend(rest.iter().enumerate().filter(|&(i, _)| i != m).map(|(_, &x)| x));
            total += int(2 * dm as i64 + 1) * self.coeff(g, &next);
        }

        if d1 >= 2 {
            let mut glue = Rational::zero();
            for a in 0..=d1 - 2 {
                let b = d1 - 2 - a;
                if g >= 1 {
                    let mut next = vec![a, b];
                    next.extend_from_slice(rest);
                    glue += self.coeff(g - 1, &next);
                }
                glue += self.split_sum(g, a, b, rest);
            }
            total += glue / int(2);
        }
        total
    }

    /// `Σ_{h, J ⊔ J' = rest} F_{h}[a, J] F_{g-h}[b, J']`.
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
}

pub fn global() -> &'static Kontsevich {
    static INSTANCE: OnceLock<Kontsevich> = OnceLock::new();
    INSTANCE.get_or_init(|| {
        let k = Kontsevich::new();
        assert_eq!(k.coeff(0, &[0, 0, 0]), Rational::one());
        assert_eq!(k.coeff(1, &[1]) / int(3), Rational::new(1.into(), 24.into()));
        k
    })
}

pub fn kontsevich_coeff(idx: &MultiIndex) -> Rational {
    global().coeff(idx.g(), idx.exponents())
}

/// `⟨τ_{d_1} … τ_{d_n}⟩_g`.
pub fn psi_intersection(g: u32, d: &[u32]) -> Result<Rational> {
    let idx = MultiIndex::new(g, d)?;
    let norm = d
        .iter()
        .fold(Rational::one(), |acc, &x| acc * double_factorial(2 * x as i64 + 1));
    Ok(kontsevich_coeff(&idx) / norm)
}

/// Genus-one intersection `∫ ψ_1^{a_1} ⋯ ψ_n^{a_n}` from the closed formula
/// `(1/24)(C(n; a) - Σ_{b ∈ {0,1}^n} (|b| - 2)! C(n - |b|; a - b))`,
/// dropping summands with a negative factorial.
pub fn genus_one_closed(a: &[u32]) -> Rational {
    let n = a.len();
    if n == 0 || a.iter().sum::<u32>() as usize != n {
        return Rational::zero();
    }
    let mut total = Rational::from_integer(multinomial(a));
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones();
        if size < 2 {
            continue;
        }
        let mut shifted = Vec::with_capacity(n);
        let mut ok = true;
        for (i, &x) in a.iter().enumerate() {
            let bi = (mask >> i) & 1;
            if x < bi {
                ok = false;
                break;
            }
            shifted.push(x - bi);
        }
        if ok {
            total -= factorial_q(size - 2) * Rational::from_integer(multinomial(&shifted));
        }
    }
    total / int(24)
}

/// `∫ 1 / Π(1 - ψ_i)` over the genus-one moduli space with `n` points.
pub fn genus_one_total(n: u32) -> Rational {
    let nn = Rational::from_integer(num_bigint::BigInt::from(n).pow(n));
    let mut total = nn;
    for k in 1..n {
        let num = Rational::from_integer(num_bigint::BigInt::from(n).pow(n - k)) * factorial_q(n - 1)
            / factorial_q(n - k - 1);
        total -= num / int((k * (k + 1)) as i64);
    }
    total / int(24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::error::Error;
    use proptest::prelude::*;

    fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        (0..=n)
            .flat_map(|x| {
                compositions(n - x, parts - 1).into_iter().map(move |mut c| {
                    c.insert(0, x);
                    c
                })
            })
            .collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(psi_intersection(0, &[0, 0, 0]).unwrap(), int(1));
        assert_eq!(psi_intersection(1, &[1]).unwrap(), rat(1, 24));
        assert_eq!(psi_intersection(1, &[2, 1, 0]).unwrap(), rat(1, 12));
        assert_eq!(psi_intersection(0, &[2, 0, 0]).unwrap(), int(0));
        assert_eq!(psi_intersection(2, &[4]).unwrap(), rat(1, 1152));
        assert_eq!(psi_intersection(0, &[0, 0]), Err(Error::UnstableType));
        let k = global();
        assert_eq!(k.coeff(1, &[1]), rat(1, 8));
        assert_eq!(k.coeff(0, &[1, 0, 0, 0]), int(3));
        assert_eq!(k.coeff(1, &[1, 1]), rat(3, 8));
    }

    #[test]
    fn genus_one_closed_examples() {
        for n in 1..=6u32 {
            let mut a = vec![0; n as usize];
            a[0] = n;
            assert_eq!(genus_one_closed(&a), rat(1, 24));
            if n >= 2 {
                a[0] = n - 1;
                a[1] = 1;
                assert_eq!(genus_one_closed(&a), rat(n as i64 - 1, 24));
            }
        }
        assert_eq!(genus_one_closed(&[2, 0]), rat(1, 24));
    }

    #[test]
    fn genus_one_oracle() {
        for n in 1..=6u32 {
            let mut sum = Rational::zero();
            for a in compositions(n, n as usize) {
                let closed = genus_one_closed(&a);
                assert_eq!(closed, psi_intersection(1, &a).unwrap(), "a={a:?}");
                sum += closed;
            }
            assert_eq!(genus_one_total(n), sum, "n={n}");
        }
        assert_eq!(genus_one_total(3), rat(17, 24));
    }

    fn stable_index() -> impl Strategy<Value = (u32, Vec<u32>)> {
        (0u32..=3, 1u32..=7)
            .prop_filter("stable, small", |&(g, n)| 2 * g + n > 2 && 3 * g + n <= 11)
            .prop_flat_map(|(g, n)| {
                let dim = 3 * g + n - 3;
                proptest::collection::vec(0u32..=dim, n as usize).prop_map(move |mut d| {
                    // push the exponents onto the dimension
                    let mut s: u32 = d.iter().sum();
                    let mut i = 0;
                    while s > dim {
                        if d[i] > 0 {
                            d[i] -= 1;
                            s -= 1;
                        }
                        i = (i + 1) % d.len();
                    }
                    d[0] += dim - s;
                    (g, d)
                })
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn string_equation((g, d) in stable_index()) {
            let mut with0 = d.clone();
            with0.push(0);
            let lhs = psi_intersection(g, &with0).unwrap();
            let mut rhs = Rational::zero();
            for i in 0..d.len() {
                if d[i] >= 1 {
                    let mut e = d.clone();
                    e[i] -= 1;
                    rhs += psi_intersection(g, &e).unwrap();
                }
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn dilaton_equation((g, d) in stable_index()) {
            let n = d.len() as i64;
            let mut with1 = d.clone();
            with1.push(1);
            let lhs = psi_intersection(g, &with1).unwrap();
            let rhs = int(2 * g as i64 - 2 + n) * psi_intersection(g, &d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn recursion_on_any_slot((g, d) in stable_index(), seed in 0usize..100) {
            prop_assume!((g, d.len()) != (0, 3) && (g, d.len()) != (1, 1));
            let pos = seed % d.len();
            prop_assert_eq!(global().recurse_at(g, &d, pos), global().coeff(g, &d));
        }
    }
}
