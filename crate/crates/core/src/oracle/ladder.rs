//! Casimir element `X^2 + Y^2 + 2 Z T` evaluated on truncated ladder
//! realisations of the irreducible unitary representations.

use num_complex::Complex64;

use super::matrix::DenseMatrix;

/// Infinitesimal data of an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LadderRep {
    /// Character `e^{2 pi i d t}`.
    Character { d: f64 },
    /// `L^2(S^1)` representation with radius `a` and twist `tau`.
    Circle { a: f64, tau: f64 },
    /// Fock representation with central parameter `c != 0`.
    Fock { c: f64, d: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LadderCasimir {
    /// Common value of the untruncated diagonal entries.
    pub value: f64,
    /// Largest deviation from `value * I` on the untruncated block.
    pub residual: f64,
    pub basis_size: usize,
}

struct Generators {
    x: DenseMatrix,
    y: DenseMatrix,
    z: DenseMatrix,
    t: DenseMatrix,
    /// Rows of the basis unaffected by truncation.
    interior: Vec<usize>,
}

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `X = (P + M)/2`, `Y = (P - M)/(2i)` from `P = X + iY`, `M = X - iY`.
fn from_ladder(p: &DenseMatrix, m: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
    let x = p.add(m).scale(Complex64::new(0.5, 0.0));
    let y = p.add(&m.scale(Complex64::new(-1.0, 0.0))).scale(Complex64::new(0.0, -0.5));
    (x, y)
}

fn generators(rep: LadderRep, size: usize) -> Generators {
    use std::f64::consts::PI;
    match rep {
        LadderRep::Character { d } => {
            let mut t = DenseMatrix::zeros(1);
            t.set(0, 0, I * (2.0 * PI * d));
            Generators {
                x: DenseMatrix::zeros(1),
                y: DenseMatrix::zeros(1),
                z: DenseMatrix::zeros(1),
                t,
                interior: vec![0],
            }
        }
        LadderRep::Circle { a, tau } => {
            // basis e^{i n t}, n = -size..=size at positions 0..2 size
            let dim = 2 * size + 1;
            let mut p = DenseMatrix::zeros(dim); // X + iY lowers n
            let mut m = DenseMatrix::zeros(dim); // X - iY raises n
            let mut t = DenseMatrix::zeros(dim);
            for j in 0..dim {
                let n = j as f64 - size as f64;
                t.set(j, j, I * (n + tau));
                if j > 0 {
                    p.set(j - 1, j, I * (2.0 * PI * a));
                }
                if j + 1 < dim {
                    m.set(j + 1, j, I * (2.0 * PI * a));
                }
            }
            let (x, y) = from_ladder(&p, &m);
            Generators { x, y, z: DenseMatrix::zeros(dim), t, interior: (1..dim - 1).collect() }
        }
        LadderRep::Fock { c, d } => {
            let dim = size;
            let ac = c.abs();
            let mut up = DenseMatrix::zeros(dim);
            let mut down = DenseMatrix::zeros(dim);
            let mut t = DenseMatrix::zeros(dim);
            let mut z = DenseMatrix::zeros(dim);
            for j in 0..dim {
                let n = j as f64;
                let tn = if c > 0.0 { 2.0 * PI * d - n } else { 2.0 * PI * d + n };
                t.set(j, j, I * tn);
                z.set(j, j, I * (2.0 * PI * c));
                if j + 1 < dim {
                    up.set(j + 1, j, Complex64::new(2.0 * (PI * ac * (n + 1.0)).sqrt(), 0.0));
                }
                if j > 0 {
                    down.set(j - 1, j, Complex64::new(-2.0 * (PI * ac * n).sqrt(), 0.0));
                }
            }
            // c > 0: up = X + iY, down = X - iY; c < 0 the roles swap
            let (x, y) = if c > 0.0 { from_ladder(&up, &down) } else { from_ladder(&down, &up) };
            Generators { x, y, z, t, interior: (0..dim - 1).collect() }
        }
    }
}

/// Casimir value on a truncated basis of the given size (`size` Fock levels,
/// or Fourier modes `-size..=size`).
pub fn ladder_casimir(rep: LadderRep, size: usize) -> LadderCasimir {
    let g = generators(rep, size);
    let two = Complex64::new(2.0, 0.0);
    let delta = g.x.mul(&g.x).add(&g.y.mul(&g.y)).add(&g.z.mul(&g.t).scale(two));
    let first = g.interior[0];
    let value = delta.get(first, first);
    let mut residual: f64 = value.im.abs();
    for &i in &g.interior {
        for &j in &g.interior {
            let target = if i == j { value } else { Complex64::new(0.0, 0.0) };
            residual = residual.max((delta.get(i, j) - target).norm());
        }
    }
    LadderCasimir { value: value.re, residual, basis_size: delta.n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn fock_positive() {
        let (c, d) = (3.0, 0.25);
        let v = ladder_casimir(LadderRep::Fock { c, d }, 32);
        let expect = -2.0 * PI * c * (4.0 * PI * d + 1.0);
        assert!((v.value - expect).abs() <= 1e-10 * expect.abs());
        assert!(v.residual <= 1e-9);
    }

    #[test]
    fn fock_negative() {
        let (c, d) = (-2.0, -0.75);
        let v = ladder_casimir(LadderRep::Fock { c, d }, 32);
        let expect = -2.0 * PI * c * (4.0 * PI * d - 1.0);
        assert!((v.value - expect).abs() <= 1e-10 * expect.abs());
    }

    #[test]
    fn circle_rep_value() {
        let v = ladder_casimir(LadderRep::Circle { a: 1.5, tau: 0.3 }, 32);
        assert!((v.value + 4.0 * PI * PI * 2.25).abs() < 1e-9);
        assert!(v.residual < 1e-9);
    }
}
