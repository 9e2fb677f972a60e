//! Action of the generator `gamma_4` on the theta-function basis of the
//! `rm`-dimensional space `W_{m,n}` of a straight sublattice.
//!
//! The index `n` is the Fourier index in the circle direction of the straight
//! sublattice, and the multiplicity of the corresponding Fock representation
//! equals the dimension of the `gamma_4`-invariants. Negative `m` is handled
//! through complex conjugation: `conj(theta^{(-m)}_{-k,-n}) = theta^{(m)}_{k,n}`
//! and pullbacks commute with conjugation.

use num_integer::Integer;

use super::matrix::{DenseMatrix, FiniteOperator, GenPermMatrix, OracleError};
use crate::numeric::{rat, rat_int, PhaseExp, Rat};

/// Parameters of a discrete oscillator group relevant to `gamma_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gamma4Case {
    /// Rotation-free generator, translation `iota/r`.
    Order1 { r: i64, iota: (i64, i64) },
    /// Rotation by pi with translation `iota/r` (`iota = 0` for the plain type).
    Order2 { r: i64, iota: (i64, i64) },
    /// Rotation by `pi/2`; `plus` selects the twisted type.
    Order4 { r: i64, plus: bool, lambda_sign: i64 },
    /// Rotation by `2 pi/3`.
    Order3 { r: i64, plus: bool, lambda_sign: i64 },
    /// Rotation by `pi/3`.
    Order6 { r: i64, lambda_sign: i64 },
}

impl Gamma4Case {
    pub fn r(&self) -> i64 {
        match *self {
            Gamma4Case::Order1 { r, .. }
            | Gamma4Case::Order2 { r, .. }
            | Gamma4Case::Order4 { r, .. }
            | Gamma4Case::Order3 { r, .. }
            | Gamma4Case::Order6 { r, .. } => r,
        }
    }

    /// Period of the multiplicity in `n`.
    pub fn period(&self) -> i64 {
        match *self {
            Gamma4Case::Order1 { r, iota } => r / r.gcd(&iota.0).gcd(&iota.1),
            Gamma4Case::Order2 { .. } => 2,
            Gamma4Case::Order4 { .. } => 4,
            Gamma4Case::Order3 { .. } => 3,
            Gamma4Case::Order6 { .. } => 6,
        }
    }
}

fn idx(k: i64, n: i64) -> usize {
    k.rem_euclid(n) as usize
}

/// The generalized permutation for orders 1 and 2; valid for either sign of `m`.
fn perm_case(case: Gamma4Case, m: i64, n: i64) -> GenPermMatrix {
    let (r, iota, order2) = match case {
        Gamma4Case::Order1 { r, iota } => (r, iota, false),
        Gamma4Case::Order2 { r, iota } => (r, iota, true),
        _ => unreachable!(),
    };
    let dim = r * m.abs();
    let (i1, i2) = iota;
    let mut perm = Vec::with_capacity(dim as usize);
    let mut phase = Vec::with_capacity(dim as usize);
    if !order2 {
        let r0 = r.gcd(&i1).gcd(&i2);
        let s0 = r / r0;
        let z0_twice = (r * i1 * i2).rem_euclid(2); // 2 z0
        for k in 0..dim {
            perm.push(idx(k - m * i2, dim));
            let rho: Rat = rat((2 * k - m * i2) * i1, r) + rat_int(r * m * z0_twice) + rat(2 * n, s0);
            phase.push(PhaseExp::new(rho));
        }
    } else {
        for k in 0..dim {
            perm.push(idx(i2 * m - k, dim));
            let rho = rat_int(n) + rat(2 * k * i1, r) - rat(m * i1 * i2, r);
            phase.push(PhaseExp::new(rho));
        }
    }
    GenPermMatrix { perm, phase }
}

/// `S_a`, the twisted finite Fourier transform on `Z_{rm}`, `m > 0`.
pub fn s_matrix(r: i64, m: i64, a: i64) -> DenseMatrix {
    assert!(m > 0);
    let dim = r * m;
    let norm = 1.0 / (dim as f64).sqrt();
    let mut out = DenseMatrix::zeros(dim as usize);
    for k in 0..dim {
        for kb in 0..dim {
            let rho = rat(-a * m, 2 * r) + rat(2 * a * k, r) - rat(2 * k * kb, dim);
            out.set(kb as usize, k as usize, PhaseExp::new(rho).to_complex() * norm);
        }
    }
    out
}

/// `D_b`, the order-six transform on `Z_{rm}`, `m > 0`.
pub fn d_matrix(r: i64, m: i64, b: i64) -> DenseMatrix {
    assert!(m > 0);
    let dim = r * m;
    let norm = 1.0 / (dim as f64).sqrt();
    let mut out = DenseMatrix::zeros(dim as usize);
    for k in 0..dim {
        for kb in 0..dim {
            let rho = rat(-1, 12) + rat(b, r) * (rat_int(k) - rat(m, 4)) + rat(k * k - 2 * k * kb, dim);
            out.set(kb as usize, k as usize, PhaseExp::new(rho).to_complex() * norm);
        }
    }
    out
}

/// `D_b^2` preceded by the diagonal twist of the order-three plus type.
pub fn a_tilde_matrix(r: i64, m: i64, b: i64) -> DenseMatrix {
    let d = d_matrix(r, m, b);
    let d2 = d.mul(&d);
    let dim = (r * m) as usize;
    let mut diag = DenseMatrix::zeros(dim);
    for k in 0..dim as i64 {
        let rho = rat(m * (3 * b - 1), 3 * r) - rat(2 * k, r);
        diag.set(k as usize, k as usize, PhaseExp::new(rho).to_complex());
    }
    d2.mul(&diag)
}

fn dense_positive(case: Gamma4Case, m: i64, n: i64) -> DenseMatrix {
    debug_assert!(m > 0);
    match case {
        Gamma4Case::Order4 { r, plus, lambda_sign } => {
            let s = s_matrix(r, m, plus as i64);
            s.scale(PhaseExp::new(rat(lambda_sign * n, 2)).to_complex())
        }
        Gamma4Case::Order6 { r, lambda_sign } => {
            let b = r.rem_euclid(2);
            d_matrix(r, m, b).scale(PhaseExp::new(rat(lambda_sign * n, 3)).to_complex())
        }
        Gamma4Case::Order3 { r, plus, lambda_sign } => {
            let b = r.rem_euclid(2);
            let base = if plus {
                a_tilde_matrix(r, m, b)
            } else {
                let d = d_matrix(r, m, b);
                d.mul(&d)
            };
            base.scale(PhaseExp::new(rat(2 * lambda_sign * n, 3)).to_complex())
        }
        _ => unreachable!(),
    }
}

/// Matrix of `theta^{(m)}_{k,n}` for `m < 0` assembled from the `|m|, -n` matrix.
pub fn conjugate_negative(pos: &DenseMatrix) -> DenseMatrix {
    let dim = pos.n as i64;
    let mut out = DenseMatrix::zeros(pos.n);
    for i in 0..dim {
        for j in 0..dim {
            out.set(i as usize, j as usize, pos.get(idx(-i, dim), idx(-j, dim)).conj());
        }
    }
    out
}

/// Matrix of `L*_{gamma_4}` on `W_{m,n}`.
pub fn gamma4_matrix(case: Gamma4Case, m: i64, n: i64) -> Result<FiniteOperator, OracleError> {
    if m == 0 {
        return Err(OracleError::Unsupported("m = 0".into()));
    }
    match case {
        Gamma4Case::Order1 { .. } | Gamma4Case::Order2 { .. } => Ok(FiniteOperator::Perm(perm_case(case, m, n))),
        _ if m > 0 => Ok(FiniteOperator::Dense(dense_positive(case, m, n))),
        _ => Ok(FiniteOperator::Dense(conjugate_negative(&dense_positive(case, -m, -n)))),
    }
}

/// Dimension of the `gamma_4`-invariant subspace of `W_{m,n}`.
pub fn gamma4_fixed_dim(case: Gamma4Case, m: i64, n: i64) -> Result<u64, OracleError> {
    super::matrix::invariant_dim(&gamma4_matrix(case, m, n)?)
}
