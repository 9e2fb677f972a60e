//! Lattice data in adapted basis coordinates and the line-oriented file format.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::group::{rotation_matrix, FrameElement, IntMat2};
use crate::numeric::{fmt_rat, parse_rat, rat, rat_int, rat_mod, rat_to_i64, ModulusPoint, NumericError, PiRat, Rat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("inadmissible rotation angle {0}: expected a positive multiple of pi, or pi/3, pi/2, 2pi/3 modulo 2pi")]
    InadmissibleLambda(String),
    #[error("rotation of order {q} requires modulus {expected}, got {got}")]
    ModulusMismatch { q: u8, expected: String, got: String },
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice is shifted (s_L = {0}); unshift it first")]
    Shifted(String),
    #[error("lattice is not normalised (scale = {0})")]
    NotNormalised(String),
    #[error("basis change {0:?} does not preserve the adapted modulus")]
    BadBasisChange([[i64; 2]; 2]),
    #[error("invariants disagree with direct computation: {0}")]
    Inconsistent(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// `(lambda/pi)` admissibility and the order `q` of `e^{i lambda}`.
pub fn order_of_lambda(lambda: &PiRat) -> Result<u8, LatticeError> {
    let rho = lambda.coeff();
    let bad = || LatticeError::InadmissibleLambda(lambda.to_string());
    if rho.is_integer() {
        if !rho.is_positive() {
            return Err(bad());
        }
        return Ok(if rho.numer().is_even() { 1 } else { 2 });
    }
    let red = rat_mod(rho, &rat_int(2));
    if red == rat(1, 3) {
        Ok(6)
    } else if red == rat(1, 2) {
        Ok(4)
    } else if red == rat(2, 3) {
        Ok(3)
    } else {
        Err(bad())
    }
}

/// `kappa` with `lambda = 2 pi/q + 2 pi kappa` (for `q = 1`, `lambda = 2 pi kappa`).
pub fn kappa_of_lambda(lambda: &PiRat) -> Result<i64, LatticeError> {
    let q = order_of_lambda(lambda)?;
    let base = if q == 1 { Rat::zero() } else { rat(2, q as i64) };
    let k = (lambda.coeff() - base) / rat_int(2);
    rat_to_i64(&k).ok_or_else(|| LatticeError::InadmissibleLambda(lambda.to_string()))
}

/// Coordinates of the generators `alpha = (alpha_bar, z_alpha, 0)`,
/// `beta = (beta_bar, z_beta, 0)` and `delta = (x alpha_bar + y beta_bar, z_delta, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorData {
    pub z_alpha: Rat,
    pub z_beta: Rat,
    pub x_delta: Rat,
    pub y_delta: Rat,
    pub z_delta: Rat,
}

impl GeneratorData {
    pub fn zero() -> Self {
        GeneratorData {
            z_alpha: Rat::zero(),
            z_beta: Rat::zero(),
            x_delta: Rat::zero(),
            y_delta: Rat::zero(),
            z_delta: Rat::zero(),
        }
    }
}

/// A lattice `L` in the oscillator group, given by generators
/// `alpha, beta, gamma = (0, h^2/r, 0), delta` with `[alpha, beta] = gamma^r`.
/// `(alpha_bar, beta_bar)` spans a planar lattice of covolume `h^2` whose
/// modulus is `modulus`; for `q >= 3` the basis is adapted to the rotation.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSpec {
    r: i64,
    lambda: PiRat,
    modulus: ModulusPoint,
    gens: GeneratorData,
    scale: Rat,
    q: u8,
    kl: (i64, i64),
}

impl LatticeSpec {
    pub fn new(r: i64, lambda: PiRat, modulus: ModulusPoint, gens: GeneratorData, scale: Rat) -> Result<Self, LatticeError> {
        if r < 1 {
            return Err(LatticeError::NotALattice(format!("r = {r} must be positive")));
        }
        if !scale.is_positive() {
            return Err(LatticeError::NotALattice("scale must be positive".into()));
        }
        let q = order_of_lambda(&lambda)?;
        let expected = match q {
            4 => Some(ModulusPoint::PointI),
            3 | 6 => Some(ModulusPoint::PointOmega),
            _ => None,
        };
        if let Some(e) = expected {
            if modulus != e {
                return Err(LatticeError::ModulusMismatch { q, expected: e.to_string(), got: modulus.to_string() });
            }
        }
        let mut spec = LatticeSpec { r, lambda, modulus, gens, scale, q, kl: (0, 0) };
        spec.kl = spec.conjugation_exponents()?;
        Ok(spec)
    }

    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn lambda(&self) -> &PiRat {
        &self.lambda
    }
    pub fn modulus(&self) -> &ModulusPoint {
        &self.modulus
    }
    pub fn gens(&self) -> &GeneratorData {
        &self.gens
    }
    pub fn scale(&self) -> &Rat {
        &self.scale
    }
    pub fn q(&self) -> u8 {
        self.q
    }
    /// Exponents with `delta alpha delta^{-1} = alpha^{s11} beta^{s21} gamma^k`,
    /// `delta beta delta^{-1} = alpha^{s12} beta^{s22} gamma^l`.
    pub fn kl(&self) -> (i64, i64) {
        self.kl
    }
    pub fn rotation(&self) -> IntMat2 {
        rotation_matrix(self.q)
    }
    pub fn area(&self) -> Rat {
        &self.scale * &self.scale
    }
    pub fn is_normalised(&self) -> bool {
        self.scale.is_one()
    }

    pub fn with_gens(&self, gens: GeneratorData) -> Result<Self, LatticeError> {
        LatticeSpec::new(self.r, self.lambda.clone(), self.modulus.clone(), gens, self.scale.clone())
    }

    pub(crate) fn with_all(&self, modulus: ModulusPoint, gens: GeneratorData, scale: Rat) -> Result<Self, LatticeError> {
        LatticeSpec::new(self.r, self.lambda.clone(), modulus, gens, scale)
    }

    fn frame(&self, p: [Rat; 2], z: Rat, turns: i64) -> FrameElement {
        FrameElement::new(p, z, turns, self.q, self.area())
    }

    pub fn alpha(&self) -> FrameElement {
        self.frame([Rat::one(), Rat::zero()], self.gens.z_alpha.clone(), 0)
    }
    pub fn beta(&self) -> FrameElement {
        self.frame([Rat::zero(), Rat::one()], self.gens.z_beta.clone(), 0)
    }
    pub fn gamma(&self) -> FrameElement {
        self.frame([Rat::zero(), Rat::zero()], self.area() / rat_int(self.r), 0)
    }
    pub fn delta(&self) -> FrameElement {
        self.frame([self.gens.x_delta.clone(), self.gens.y_delta.clone()], self.gens.z_delta.clone(), 1)
    }

    /// Frame element `alpha^a beta^b`.
    pub fn word(&self, a: i64, b: i64) -> FrameElement {
        let z = rat_int(a) * &self.gens.z_alpha + rat_int(b) * &self.gens.z_beta + rat(a * b, 2) * self.area();
        self.frame([rat_int(a), rat_int(b)], z, 0)
    }

    fn gamma_exponent(&self, g: &FrameElement, a: i64, b: i64) -> Result<i64, LatticeError> {
        let w = self.word(a, b);
        debug_assert_eq!(g.p, w.p);
        let e = (&g.z - &w.z) * rat_int(self.r) / self.area();
        rat_to_i64(&e).ok_or_else(|| {
            LatticeError::NotALattice(format!("conjugation by delta leaves the Heisenberg lattice (gamma exponent {})", fmt_rat(&e)))
        })
    }

    fn conjugation_exponents(&self) -> Result<(i64, i64), LatticeError> {
        let s = self.rotation().0;
        let d = self.delta();
        let ca = self.alpha().conj_by(&d);
        let cb = self.beta().conj_by(&d);
        let k = self.gamma_exponent(&ca, s[0][0], s[1][0])?;
        let l = self.gamma_exponent(&cb, s[0][1], s[1][1])?;
        Ok((k, l))
    }

    /// Rebuilds coordinates from frame elements that are known to be
    /// `alpha`, `beta`, `delta` of a lattice in the same basis.
    pub(crate) fn gens_from_frames(alpha: &FrameElement, beta: &FrameElement, delta: &FrameElement) -> GeneratorData {
        debug_assert!(alpha.p == [Rat::one(), Rat::zero()] && beta.p == [Rat::zero(), Rat::one()]);
        debug_assert_eq!(delta.turns, 1);
        GeneratorData {
            z_alpha: alpha.z.clone(),
            z_beta: beta.z.clone(),
            x_delta: delta.p[0].clone(),
            y_delta: delta.p[1].clone(),
            z_delta: delta.z.clone(),
        }
    }

    /// Parses the `key = value` lattice file format; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        let mut r = None;
        let mut lambda = None;
        let mut modulus = None;
        let mut gens = GeneratorData::zero();
        let mut scale = Rat::one();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| LatticeError::Parse { line: line_no, msg };
            let (key, value) = line.split_once('=').ok_or_else(|| perr(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let rat_val = || parse_rat(value).map_err(|e| perr(e.to_string()));
            match key {
                "r" => {
                    let v: i64 = value.parse().map_err(|_| perr(format!("r must be a positive integer, got {value:?}")))?;
                    r = Some(v);
                }
                "lambda" => lambda = Some(value.parse::<PiRat>().map_err(|e| perr(e.to_string()))?),
                "modulus" => modulus = Some(value.parse::<ModulusPoint>().map_err(|e| perr(e.to_string()))?),
                "z_alpha" => gens.z_alpha = rat_val()?,
                "z_beta" => gens.z_beta = rat_val()?,
                "x_delta" => gens.x_delta = rat_val()?,
                "y_delta" => gens.y_delta = rat_val()?,
                "z_delta" => gens.z_delta = rat_val()?,
                "scale" => scale = rat_val()?,
                other => return Err(perr(format!("unknown key {other:?}"))),
            }
        }
        let missing = |k: &str| LatticeError::Parse { line: last_line, msg: format!("missing key {k:?}") };
        let r = r.ok_or_else(|| missing("r"))?;
        let lambda = lambda.ok_or_else(|| missing("lambda"))?;
        let modulus = match modulus {
            Some(m) => m,
            None => match order_of_lambda(&lambda) {
                Ok(4) => ModulusPoint::PointI,
                Ok(3) | Ok(6) => ModulusPoint::PointOmega,
                Ok(_) => return Err(missing("modulus")),
                Err(e) => return Err(e),
            },
        };
        LatticeSpec::new(r, lambda, modulus, gens, scale)
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r = {}", self.r)?;
        writeln!(f, "lambda = {} pi", fmt_rat(self.lambda.coeff()))?;
        writeln!(f, "modulus = {}", self.modulus)?;
        writeln!(f, "z_alpha = {}", fmt_rat(&self.gens.z_alpha))?;
        writeln!(f, "z_beta = {}", fmt_rat(&self.gens.z_beta))?;
        writeln!(f, "x_delta = {}", fmt_rat(&self.gens.x_delta))?;
        writeln!(f, "y_delta = {}", fmt_rat(&self.gens.y_delta))?;
        writeln!(f, "z_delta = {}", fmt_rat(&self.gens.z_delta))?;
        write!(f, "scale = {}", fmt_rat(&self.scale))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_orders() {
        let q = |n, d| order_of_lambda(&PiRat::from_ratio(n, d));
        assert_eq!(q(2, 1).unwrap(), 1);
        assert_eq!(q(3, 1).unwrap(), 2);
        assert_eq!(q(1, 2).unwrap(), 4);
        assert_eq!(q(-3, 2).unwrap(), 4);
        assert_eq!(q(1, 3).unwrap(), 6);
        assert_eq!(q(-4, 3).unwrap(), 3);
        assert_eq!(q(8, 3).unwrap(), 3);
        assert!(q(4, 3).is_err());
        assert!(q(-1, 1).is_err());
        assert!(q(1, 4).is_err());
        assert_eq!(kappa_of_lambda(&PiRat::from_ratio(-3, 2)).unwrap(), -1);
        assert_eq!(kappa_of_lambda(&PiRat::from_ratio(5, 1)).unwrap(), 2);
    }

    #[test]
    fn parse_file() {
        let text = "# square, quarter turn\nr = 2\nlambda = 1/2 pi\nmodulus = I\nx_delta = 1/2\nz_delta = -1/16\n";
        let l = LatticeSpec::parse(text).unwrap();
        assert_eq!(l.q(), 4);
        assert_eq!(l.kl(), (1, 0));
        assert_eq!(LatticeSpec::parse(&l.to_string()).unwrap(), l);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(LatticeSpec::parse("r = 2\nlambda = 1/2 pi\nfoo = 1"), Err(LatticeError::Parse { line: 3, .. })));
        assert!(matches!(LatticeSpec::parse("r = x"), Err(LatticeError::Parse { line: 1, .. })));
        assert!(matches!(LatticeSpec::parse("r = 1\nlambda = 1/4 pi\nmodulus = I"), Err(LatticeError::InadmissibleLambda(_))));
        assert!(matches!(LatticeSpec::parse("r = 1\nlambda = 1/2 pi\nmodulus = omega"), Err(LatticeError::ModulusMismatch { .. })));
        // a delta translation that does not normalise the Heisenberg lattice
        assert!(matches!(
            LatticeSpec::parse("r = 1\nlambda = 2 pi\nmodulus = I\nx_delta = 1/3"),
            Err(LatticeError::NotALattice(_))
        ));
    }
}
