//! Finite-order operators: generalized permutation matrices with exact phases
//! and dense complex matrices.

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::numeric::{rat_int, PhaseExp, TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("matrix has no finite order up to {0}")]
    NoFiniteOrder(usize),
    #[error("eigenvalue multiplicity {0} is not close to an integer")]
    NonIntegralMultiplicity(f64),
    #[error("unsupported case: {0}")]
    Unsupported(String),
}

/// `M e_k = phase[k] e_{perm[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPermMatrix {
    pub perm: Vec<usize>,
    pub phase: Vec<PhaseExp>,
}

impl GenPermMatrix {
    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Cycles as `(length, product of phases along the cycle)`.
    pub fn cycles(&self) -> Vec<(usize, PhaseExp)> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut k, mut len, mut prod) = (start, 0usize, PhaseExp::one());
            while !seen[k] {
                seen[k] = true;
                prod = prod.mul(&self.phase[k]);
                k = self.perm[k];
                len += 1;
            }
            out.push((len, prod));
        }
        out
    }

    /// Exact multiplicity of the eigenvalue `zeta`: a cycle of length `L`
    /// with phase product `P` carries the `L` roots of `x^L = P` once each.
    pub fn multiplicity(&self, zeta: &PhaseExp) -> u64 {
        self.cycles().iter().filter(|(len, prod)| zeta.pow(*len as i64) == *prod).count() as u64
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim())
            .filter(|&k| self.perm[k] == k)
            .map(|k| self.phase[k].to_complex())
            .sum()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n);
        for k in 0..n {
            m.set(self.perm[k], k, self.phase[k].to_complex());
        }
        m
    }
}

/// Square complex matrix, row major; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    pub n: usize,
    pub data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![Complex64::zero(); n * n] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }
    pub fn mul(&self, o: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        out
    }
    pub fn add(&self, o: &DenseMatrix) -> DenseMatrix {
        DenseMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
    pub fn scale(&self, c: Complex64) -> DenseMatrix {
        DenseMatrix { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }
    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
    pub fn max_abs_diff(&self, o: &DenseMatrix) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
    pub fn conj(&self) -> DenseMatrix {
        DenseMatrix { n: self.n, data: self.data.iter().map(|a| a.conj()).collect() }
    }

    /// Smallest `N <= max` with `M^N = I` within the eigenvalue tolerance.
    pub fn order(&self, max: usize) -> Result<usize, OracleError> {
        let id = Self::identity(self.n);
        let mut p = self.clone();
        for k in 1..=max {
            if p.max_abs_diff(&id) <= TOL.eig_tol {
                return Ok(k);
            }
            p = p.mul(self);
        }
        Err(OracleError::NoFiniteOrder(max))
    }

    /// Multiplicity of the eigenvalue `zeta` of a finite-order matrix, by
    /// averaging `zeta^{-p} tr(M^p)` over one period.
    pub fn multiplicity(&self, zeta: &PhaseExp) -> Result<u64, OracleError> {
        let order = self.order(24)?;
        if !zeta.pow(order as i64).is_one() {
            return Ok(0);
        }
        let mut p = Self::identity(self.n);
        let mut acc = Complex64::zero();
        for k in 0..order {
            acc += zeta.pow(-(k as i64)).to_complex() * p.trace();
            p = p.mul(self);
        }
        let x = acc / order as f64;
        let rounded = x.re.round();
        if (x.re - rounded).abs() > 1e-6 || x.im.abs() > 1e-6 || rounded < 0.0 {
            return Err(OracleError::NonIntegralMultiplicity(x.re));
        }
        Ok(rounded as u64)
    }
}

/// Either representation of a finite-order operator.
#[derive(Clone, Debug)]
pub enum FiniteOperator {
    Perm(GenPermMatrix),
    Dense(DenseMatrix),
}

impl FiniteOperator {
    pub fn dim(&self) -> usize {
        match self {
            FiniteOperator::Perm(p) => p.dim(),
            FiniteOperator::Dense(d) => d.n,
        }
    }
    pub fn to_dense(&self) -> DenseMatrix {
        match self {
            FiniteOperator::Perm(p) => p.to_dense(),
            FiniteOperator::Dense(d) => d.clone(),
        }
    }
}

/// Dimension of the eigenspace of `m` for the eigenvalue `e^{i pi rho}`.
pub fn fixed_dim(m: &FiniteOperator, eigenphase: &PhaseExp) -> Result<u64, OracleError> {
    match m {
        FiniteOperator::Perm(p) => Ok(p.multiplicity(eigenphase)),
        FiniteOperator::Dense(d) => d.multiplicity(eigenphase),
    }
}

/// Dimension of the fixed space.
pub fn invariant_dim(m: &FiniteOperator) -> Result<u64, OracleError> {
    fixed_dim(m, &PhaseExp::one())
}

pub fn phase_of_turn(num: i64, den: i64) -> PhaseExp {
    // e^{2 pi i num/den}
    PhaseExp::new(rat_int(2) * crate::numeric::rat(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn cycle_multiplicities() {
        // 3-cycle with trivial phases: eigenvalues are the cube roots of unity
        let m = GenPermMatrix { perm: vec![1, 2, 0], phase: vec![PhaseExp::one(); 3] };
        assert_eq!(m.multiplicity(&PhaseExp::one()), 1);
        assert_eq!(m.multiplicity(&PhaseExp::from_ratio(2, 3)), 1);
        assert_eq!(m.multiplicity(&PhaseExp::from_ratio(1, 3)), 0);
        let d = FiniteOperator::Dense(m.to_dense());
        for k in 0..6 {
            let z = PhaseExp::from_ratio(k, 3);
            assert_eq!(fixed_dim(&d, &z).unwrap(), m.multiplicity(&z));
        }
    }

    #[test]
    fn phased_swap() {
        // e0 -> i e1, e1 -> i e0: square is -1, eigenvalues +-i
        let m = GenPermMatrix { perm: vec![1, 0], phase: vec![PhaseExp::new(rat(1, 2)); 2] };
        assert_eq!(m.multiplicity(&PhaseExp::from_ratio(1, 2)), 1);
        assert_eq!(m.multiplicity(&PhaseExp::from_ratio(3, 2)), 1);
        assert_eq!(m.multiplicity(&PhaseExp::one()), 0);
    }

    #[test]
    fn no_order() {
        let mut d = DenseMatrix::identity(1);
        d.set(0, 0, Complex64::new(0.6, 0.8));
        assert!(matches!(d.order(24), Err(OracleError::NoFiniteOrder(_))));
    }
}
