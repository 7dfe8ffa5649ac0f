use mvvol::{PiPoly, Rational};
use num_traits::Signed;

/// `p/q * pi^{2k}`, or `p/q` alone at grade zero.
pub fn exact(value: &PiPoly) -> String {
    if value.is_zero() {
        return "0".into();
    }
    value
        .terms()
        .map(|(k, r)| match k {
            0 => r.to_string(),
            _ => format!("{r} * pi^{}", 2 * k),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn latex_rational(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

pub fn latex(value: &PiPoly) -> String {
    if value.is_zero() {
        return "0".into();
    }
    value
        .terms()
        .map(|(k, r)| match k {
            0 => latex_rational(r),
            _ => format!("{}\\pi^{{{}}}", latex_rational(r), 2 * k),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Twelve significant digits.
pub fn decimal(value: &PiPoly) -> String {
    let v = value.to_f64();
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    if (-4..12).contains(&magnitude) {
        format!("{:.*}", (11 - magnitude).max(0) as usize, v)
    } else {
        format!("{v:.11e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mvvol::arith::rat;

    #[test]
    fn formats() {
        let v = PiPoly::monomial(rat(2, 3), 1);
        assert_eq!(exact(&v), "2/3 * pi^2");
        assert_eq!(latex(&v), "\\frac{2}{3}\\pi^{2}");
        assert_eq!(decimal(&v), "6.57973626739");
        assert_eq!(exact(&PiPoly::from_rational(rat(4, 1))), "4");
        assert_eq!(decimal(&PiPoly::monomial(rat(1, 1_000_000), 0)), "1.00000000000e-6");
    }
}
