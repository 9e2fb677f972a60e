//! Quadratic Gauss sums `S(a, b, c) = sum_{r=0}^{|c|-1} e^{pi i (a r^2 + b r)/c}`.

use num_complex::Complex64;

use crate::numeric::{rat, PhaseExp};

/// A Gauss sum kept as its exact exponents together with the float sum:
/// term `r` is `e^{pi i e_r / |c|}` with `e_r` reduced mod `2|c|`.
#[derive(Clone, Debug)]
pub struct GaussSum {
    pub exponents: Vec<i64>,
    pub value: Complex64,
}

/// `e^{pi i e/n}` for `0 <= e < 2n`, exact on the axes.
fn unit(e: i64, n: i64) -> Complex64 {
    if (2 * e) % n == 0 {
        return [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)]
            [((2 * e) / n) as usize];
    }
    let x = if 2 * e > 2 * n { e as f64 / n as f64 - 2.0 } else { e as f64 / n as f64 };
    let (s, c) = (std::f64::consts::PI * x).sin_cos();
    Complex64::new(c, s)
}

pub fn gauss_sum(a: i64, b: i64, c: i64) -> GaussSum {
    assert!(c != 0, "c must be nonzero");
    let n = c.abs();
    let sign = c.signum();
    let exponents: Vec<i64> = (0..n).map(|r| (sign * (a * r * r + b * r)).rem_euclid(2 * n)).collect();
    let value = exponents.iter().map(|&e| unit(e, n)).sum();
    GaussSum { exponents, value }
}

/// Right-hand side of the reciprocity law, valid for `ac != 0`, `ac + b` even:
/// `|c/a|^{1/2} e^{pi i (|ac| - b^2)/(4ac)} S(-c, -b, a)`.
pub fn reciprocity_rhs(a: i64, b: i64, c: i64) -> Complex64 {
    assert!(a != 0 && c != 0 && (a * c + b).rem_euclid(2) == 0);
    let pref = ((c as f64) / (a as f64)).abs().sqrt();
    let ph = PhaseExp::new(rat((a * c).abs() - b * b, 4 * a * c)).to_complex();
    ph * pref * gauss_sum(-c, -b, a).value
}

/// `|S(a,b,c) - rhs|` for one admissible triple.
pub fn reciprocity_residual(a: i64, b: i64, c: i64) -> f64 {
    (gauss_sum(a, b, c).value - reciprocity_rhs(a, b, c)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        // sum e^{2 pi i r^2 / p} = sqrt(p) for p = 1 mod 4
        let s = gauss_sum(2, 0, 5);
        assert!((s.value - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
        let s = gauss_sum(2, 0, 3);
        assert!((s.value - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn reciprocity_small() {
        for a in [-3i64, -1, 1, 2, 5] {
            for c in [-4i64, -2, 1, 3, 7] {
                for b in -6i64..=6 {
                    if (a * c + b).rem_euclid(2) == 0 {
                        assert!(reciprocity_residual(a, b, c) < 1e-9, "{a} {b} {c}");
                    }
                }
            }
        }
    }
}
