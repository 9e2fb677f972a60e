//! Exact scalars: rationals, rational multiples of pi, the field Q(sqrt 3),
//! phases `e^{i pi rho}` and points of the upper half plane.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rat = BigRational;

/// Numerical tolerances used wherever floats enter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Eigenvalue clustering and matrix-order detection.
    pub eig_tol: f64,
    /// Phase round trips and trace tables.
    pub phase_tol: f64,
    /// Snapping float moduli onto boundary points of the fundamental domain.
    pub snap_tol: f64,
}

pub const TOL: Tolerances = Tolerances {
    eig_tol: 1e-8,
    phase_tol: 1e-13,
    snap_tol: 1e-12,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("cannot parse scalar from {0:?}")]
    BadScalar(String),
    #[error("cannot parse angle from {0:?}")]
    BadAngle(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus must lie in the upper half plane (nu > 0)")]
    NotInUpperHalfPlane,
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, `-p/q`; whitespace around the slash is allowed.
pub fn parse_rat(s: &str) -> Result<Rat, NumericError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || NumericError::BadRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.as_str(), "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| err())?;
    let d = BigInt::from_str(d).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(n, d))
}

/// `p/q` rendering; integers render as `p/1` only through [`fmt_rat_pq`].
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_rat_pq(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Representative of `x` modulo `m` in `[0, m)`; `m > 0`.
pub fn rat_mod(x: &Rat, m: &Rat) -> Rat {
    let q = (x / m).floor();
    x - q * m
}

pub fn rat_to_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Exact rational value of a finite double.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

// ---------------------------------------------------------------------------

/// `rho * pi` with `rho` rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiRat(pub Rat);

impl PiRat {
    pub fn new(rho: Rat) -> Self {
        PiRat(rho)
    }
    pub fn from_ratio(n: i64, d: i64) -> Self {
        PiRat(rat(n, d))
    }
    pub fn zero() -> Self {
        PiRat(Rat::zero())
    }
    pub fn coeff(&self) -> &Rat {
        &self.0
    }
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.0) * std::f64::consts::PI
    }
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
    pub fn signum(&self) -> i64 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }
    pub fn scale(&self, n: i64) -> Self {
        PiRat(&self.0 * rat_int(n))
    }

    /// Exact cosine and sine when the angle is a multiple of `pi/6`.
    pub fn cos_sin_exact(&self) -> Option<(QuadRat, QuadRat)> {
        let six = &self.0 * rat_int(6);
        if !six.is_integer() {
            return None;
        }
        let k = six.numer().mod_floor(&BigInt::from(12)).to_i64()?;
        let h = rat(1, 2);
        let z = Rat::zero;
        let one = Rat::one;
        // (cos, sin) at k * pi/6, as (rational part, sqrt3 part)
        let (c, s) = match k {
            0 => (QuadRat::from_rat(one()), QuadRat::zero()),
            1 => (QuadRat::new(z(), h.clone()), QuadRat::from_rat(h.clone())),
            2 => (QuadRat::from_rat(h.clone()), QuadRat::new(z(), h.clone())),
            3 => (QuadRat::zero(), QuadRat::from_rat(one())),
            4 => (QuadRat::from_rat(-h.clone()), QuadRat::new(z(), h.clone())),
            5 => (QuadRat::new(z(), -h.clone()), QuadRat::from_rat(h.clone())),
            6 => (QuadRat::from_rat(-one()), QuadRat::zero()),
            7 => (QuadRat::new(z(), -h.clone()), QuadRat::from_rat(-h.clone())),
            8 => (QuadRat::from_rat(-h.clone()), QuadRat::new(z(), -h.clone())),
            9 => (QuadRat::zero(), QuadRat::from_rat(-one())),
            10 => (QuadRat::from_rat(h.clone()), QuadRat::new(z(), -h.clone())),
            _ => (QuadRat::new(z(), h.clone()), QuadRat::from_rat(-h)),
        };
        Some((c, s))
    }
}

impl Add for &PiRat {
    type Output = PiRat;
    fn add(self, o: &PiRat) -> PiRat {
        PiRat(&self.0 + &o.0)
    }
}

impl Neg for &PiRat {
    type Output = PiRat;
    fn neg(self) -> PiRat {
        PiRat(-&self.0)
    }
}

impl fmt::Display for PiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·π", fmt_rat_pq(&self.0))
    }
}

/// Parses `pi`, `-pi`, `3 pi`, `1/2 pi`, `1/2*pi`, `2pi` and plain `0`.
impl FromStr for PiRat {
    type Err = NumericError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('π', "pi");
        if let Some(head) = t.strip_suffix("pi") {
            let head = head.strip_suffix('*').unwrap_or(head);
            let rho = match head {
                "" | "+" => Rat::one(),
                "-" => -Rat::one(),
                h => parse_rat(h).map_err(|_| NumericError::BadAngle(s.to_string()))?,
            };
            return Ok(PiRat(rho));
        }
        match parse_rat(&t) {
            Ok(x) if x.is_zero() => Ok(PiRat::zero()),
            _ => Err(NumericError::BadAngle(s.to_string())),
        }
    }
}

// ---------------------------------------------------------------------------

/// `a + b sqrt(3)` with `a, b` rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    pub a: Rat,
    pub b: Rat,
}

impl QuadRat {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadRat { a, b }
    }
    pub fn from_rat(a: Rat) -> Self {
        QuadRat { a, b: Rat::zero() }
    }
    pub fn from_int(n: i64) -> Self {
        QuadRat::from_rat(rat_int(n))
    }
    pub fn zero() -> Self {
        QuadRat::from_rat(Rat::zero())
    }
    pub fn one() -> Self {
        QuadRat::from_rat(Rat::one())
    }
    pub fn sqrt3() -> Self {
        QuadRat::new(Rat::zero(), Rat::one())
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }
    /// Field norm `a^2 - 3 b^2`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_int(3) * &self.b * &self.b
    }
    pub fn conj(&self) -> Self {
        QuadRat::new(self.a.clone(), -self.b.clone())
    }
    pub fn inv(&self) -> Result<Self, NumericError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(QuadRat::new(&self.a / &n, -&self.b / &n))
    }
    pub fn scale(&self, k: &Rat) -> Self {
        QuadRat::new(&self.a * k, &self.b * k)
    }
    pub fn half(&self) -> Self {
        self.scale(&rat(1, 2))
    }
    pub fn signum(&self) -> i64 {
        match self.cmp(&QuadRat::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * 3f64.sqrt()
    }
}

fn sign_of_sum(a: &Rat, b: &Rat) -> Ordering {
    // sign of a + b*sqrt3
    let sa = a.cmp(&Rat::zero());
    let sb = b.cmp(&Rat::zero());
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // opposite signs: compare a^2 with 3 b^2
    let lhs = a * a;
    let rhs = rat_int(3) * b * b;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_of_sum(&(&self.a - &other.a), &(&self.b - &other.b))
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! quad_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $f(self, o: &QuadRat) -> QuadRat {
                $body(self, o)
            }
        }
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $f(self, o: QuadRat) -> QuadRat {
                $body(&self, &o)
            }
        }
    };
}

quad_binop!(Add, add, |x: &QuadRat, y: &QuadRat| QuadRat::new(&x.a + &y.a, &x.b + &y.b));
quad_binop!(Sub, sub, |x: &QuadRat, y: &QuadRat| QuadRat::new(&x.a - &y.a, &x.b - &y.b));
quad_binop!(Mul, mul, |x: &QuadRat, y: &QuadRat| QuadRat::new(
    &x.a * &y.a + rat_int(3) * &x.b * &y.b,
    &x.a * &y.b + &x.b * &y.a
));

impl Div<&QuadRat> for &QuadRat {
    type Output = QuadRat;
    fn div(self, o: &QuadRat) -> QuadRat {
        self * &o.inv().expect("QuadRat division by zero")
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-&self.a, -&self.b)
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.a)),
            (true, false) => write!(f, "{}*sqrt3", fmt_rat(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*sqrt3", fmt_rat(&self.a), fmt_rat(&-&self.b))
                } else {
                    write!(f, "{}+{}*sqrt3", fmt_rat(&self.a), fmt_rat(&self.b))
                }
            }
        }
    }
}

/// Parses `a`, `b*sqrt3`, `a+b*sqrt3`, `a-b*sqrt3`, `sqrt3`.
impl FromStr for QuadRat {
    type Err = NumericError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || NumericError::BadScalar(s.to_string());
        if !t.contains("sqrt3") {
            return parse_rat(&t).map(QuadRat::from_rat).map_err(|_| err());
        }
        let body = t.strip_suffix("sqrt3").ok_or_else(err)?;
        let body = body.strip_suffix('*').unwrap_or(body);
        // split off the rational part at the last sign that is not leading
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_str, b_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let b = match b_str {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            x => parse_rat(x.strip_prefix('+').unwrap_or(x)).map_err(|_| err())?,
        };
        let a = parse_rat(a_str).map_err(|_| err())?;
        Ok(QuadRat::new(a, b))
    }
}

// ---------------------------------------------------------------------------

/// Phase `e^{i pi rho}`, `rho` kept reduced into `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseExp(Rat);

impl PhaseExp {
    pub fn new(rho: Rat) -> Self {
        PhaseExp(rat_mod(&rho, &rat_int(2)))
    }
    pub fn from_ratio(n: i64, d: i64) -> Self {
        PhaseExp::new(rat(n, d))
    }
    pub fn one() -> Self {
        PhaseExp(Rat::zero())
    }
    pub fn rho(&self) -> &Rat {
        &self.0
    }
    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }
    pub fn mul(&self, o: &PhaseExp) -> PhaseExp {
        PhaseExp::new(&self.0 + &o.0)
    }
    pub fn pow(&self, n: i64) -> PhaseExp {
        PhaseExp::new(&self.0 * rat_int(n))
    }
    pub fn conj(&self) -> PhaseExp {
        PhaseExp::new(-&self.0)
    }

    /// Complex value; multiples of `pi/2` are rendered exactly.
    pub fn to_complex(&self) -> Complex64 {
        let four = &self.0 * rat_int(4);
        if four.is_integer() {
            // rho in [0,2) so 4 rho in 0..8; only even values are axis points
            let k = four.numer().to_i64().unwrap_or(0);
            match k {
                0 => return Complex64::new(1.0, 0.0),
                2 => return Complex64::new(0.0, 1.0),
                4 => return Complex64::new(-1.0, 0.0),
                6 => return Complex64::new(0.0, -1.0),
                _ => {}
            }
        }
        // reduce to (-1, 1] before multiplying by pi
        let mut x = rat_to_f64(&self.0);
        if x > 1.0 {
            x -= 2.0;
        }
        let (s, c) = (std::f64::consts::PI * x).sin_cos();
        Complex64::new(c, s)
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{{iπ·{}}}", fmt_rat_pq(&self.0))
    }
}

// ---------------------------------------------------------------------------

/// A real number that is exact in Q(sqrt 3) or a float fallback.
#[derive(Clone, Debug)]
pub enum RealValue {
    Exact(QuadRat),
    Float(f64),
}

impl RealValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            RealValue::Exact(q) => q.to_f64(),
            RealValue::Float(x) => *x,
        }
    }
    pub fn is_exact(&self) -> bool {
        matches!(self, RealValue::Exact(_))
    }
    pub fn as_exact(&self) -> Option<&QuadRat> {
        match self {
            RealValue::Exact(q) => Some(q),
            RealValue::Float(_) => None,
        }
    }
    pub fn scale(&self, k: &Rat) -> RealValue {
        match self {
            RealValue::Exact(q) => RealValue::Exact(q.scale(k)),
            RealValue::Float(x) => RealValue::Float(x * rat_to_f64(k)),
        }
    }
    pub fn mul(&self, o: &RealValue) -> RealValue {
        match (self, o) {
            (RealValue::Exact(a), RealValue::Exact(b)) => RealValue::Exact(a * b),
            _ => RealValue::Float(self.to_f64() * o.to_f64()),
        }
    }
    pub fn is_zero(&self) -> bool {
        match self {
            RealValue::Exact(q) => q.is_zero(),
            RealValue::Float(x) => *x == 0.0,
        }
    }
}

impl PartialEq for RealValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealValue {}

impl Ord for RealValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealValue::Exact(a), RealValue::Exact(b)) => a.cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl PartialOrd for RealValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealValue::Exact(q) => write!(f, "{q}"),
            RealValue::Float(x) => write!(f, "{x:.12}"),
        }
    }
}

// ---------------------------------------------------------------------------

/// Modulus `mu + i nu` of a planar lattice.
#[derive(Clone, Debug, PartialEq)]
pub enum ModulusPoint {
    ExactRat { mu: Rat, nu: Rat },
    /// `i`
    PointI,
    /// `e^{i pi/3}`
    PointOmega,
    /// Exact point with irrational coordinates in Q(sqrt 3).
    Quad { mu: QuadRat, nu: QuadRat },
    Float { mu: f64, nu: f64 },
}

impl ModulusPoint {
    /// Rational modulus; `(0, 1)` is normalised to [`ModulusPoint::PointI`].
    pub fn rational(mu: Rat, nu: Rat) -> Result<Self, NumericError> {
        if !nu.is_positive() {
            return Err(NumericError::NotInUpperHalfPlane);
        }
        if mu.is_zero() && nu.is_one() {
            return Ok(ModulusPoint::PointI);
        }
        Ok(ModulusPoint::ExactRat { mu, nu })
    }

    /// Canonical form of an exact point: named points first, then rational.
    pub fn from_exact(mu: QuadRat, nu: QuadRat) -> Result<Self, NumericError> {
        if nu.signum() <= 0 {
            return Err(NumericError::NotInUpperHalfPlane);
        }
        if Some((mu.clone(), nu.clone())) == ModulusPoint::PointOmega.exact() {
            return Ok(ModulusPoint::PointOmega);
        }
        match (mu.as_rat(), nu.as_rat()) {
            (Some(m), Some(n)) => ModulusPoint::rational(m.clone(), n.clone()),
            _ => Ok(ModulusPoint::Quad { mu, nu }),
        }
    }

    /// Moebius image `(a tau + b)/(c tau + d)` under an integer matrix of
    /// determinant one.
    pub fn mobius(&self, m: [[i64; 2]; 2]) -> ModulusPoint {
        let [[a, b], [c, d]] = m;
        match self.exact() {
            Some((mu, nu)) => {
                let q = QuadRat::from_int;
                let re_n = &(&q(a) * &mu) + &q(b);
                let im_n = &q(a) * &nu;
                let re_d = &(&q(c) * &mu) + &q(d);
                let im_d = &q(c) * &nu;
                let den = &(&re_d * &re_d) + &(&im_d * &im_d);
                let inv = den.inv().expect("nonzero denominator");
                let re = &(&(&re_n * &re_d) + &(&im_n * &im_d)) * &inv;
                let im = &(&(&im_n * &re_d) - &(&re_n * &im_d)) * &inv;
                ModulusPoint::from_exact(re, im).expect("upper half plane is preserved")
            }
            None => {
                let (mu, nu) = self.to_f64();
                let z = Complex64::new(mu, nu);
                let w = (z * a as f64 + b as f64) / (z * c as f64 + d as f64);
                ModulusPoint::Float { mu: w.re, nu: w.im }
            }
        }
    }

    pub fn float(mu: f64, nu: f64) -> Result<Self, NumericError> {
        if !(nu > 0.0) || !mu.is_finite() || !nu.is_finite() {
            return Err(NumericError::NotInUpperHalfPlane);
        }
        Ok(ModulusPoint::Float { mu, nu })
    }

    /// Exact `(mu, nu)` in Q(sqrt 3), if available.
    pub fn exact(&self) -> Option<(QuadRat, QuadRat)> {
        match self {
            ModulusPoint::ExactRat { mu, nu } => {
                Some((QuadRat::from_rat(mu.clone()), QuadRat::from_rat(nu.clone())))
            }
            ModulusPoint::PointI => Some((QuadRat::zero(), QuadRat::one())),
            ModulusPoint::PointOmega => Some((
                QuadRat::from_rat(rat(1, 2)),
                QuadRat::new(Rat::zero(), rat(1, 2)),
            )),
            ModulusPoint::Quad { mu, nu } => Some((mu.clone(), nu.clone())),
            ModulusPoint::Float { .. } => None,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            ModulusPoint::Float { mu, nu } => (*mu, *nu),
            other => {
                let (m, n) = other.exact().expect("exact modulus");
                (m.to_f64(), n.to_f64())
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ModulusPoint::Float { .. })
    }

    /// `a^2(l, k) = nu k^2 + (l - mu k)^2 / nu`.
    pub fn a_squared(&self, l: i64, k: i64) -> RealValue {
        match self.exact() {
            Some((mu, nu)) => {
                let lk = &QuadRat::from_int(l) - &(&mu * &QuadRat::from_int(k));
                let nu_inv = nu.inv().expect("nu > 0");
                let v = &(&nu * &QuadRat::from_int(k * k)) + &(&(&lk * &lk) * &nu_inv);
                RealValue::Exact(v)
            }
            None => {
                let (mu, nu) = self.to_f64();
                let (l, k) = (l as f64, k as f64);
                RealValue::Float(nu * k * k + (l - mu * k).powi(2) / nu)
            }
        }
    }
}

impl fmt::Display for ModulusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModulusPoint::ExactRat { mu, nu } => write!(f, "rat({}, {})", fmt_rat(mu), fmt_rat(nu)),
            ModulusPoint::PointI => write!(f, "I"),
            ModulusPoint::PointOmega => write!(f, "omega"),
            ModulusPoint::Quad { mu, nu } => write!(f, "quad({mu}, {nu})"),
            ModulusPoint::Float { mu, nu } => write!(f, "float({mu}, {nu})"),
        }
    }
}

/// Parses `I`, `omega`, `rat(mu, nu)`, `quad(mu, nu)` and `float(mu, nu)`.
impl FromStr for ModulusPoint {
    type Err = NumericError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || NumericError::BadScalar(s.to_string());
        match t.as_str() {
            "I" | "i" => return Ok(ModulusPoint::PointI),
            "omega" => return Ok(ModulusPoint::PointOmega),
            _ => {}
        }
        let args = |prefix: &str| -> Option<(String, String)> {
            let inner = t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            let (a, b) = inner.split_once(',')?;
            Some((a.to_string(), b.to_string()))
        };
        if let Some((a, b)) = args("rat") {
            return ModulusPoint::rational(
                parse_rat(&a).map_err(|_| err())?,
                parse_rat(&b).map_err(|_| err())?,
            );
        }
        if let Some((a, b)) = args("quad") {
            return ModulusPoint::from_exact(
                a.parse().map_err(|_| err())?,
                b.parse().map_err(|_| err())?,
            );
        }
        if let Some((a, b)) = args("float") {
            let mu: f64 = a.parse().map_err(|_| err())?;
            let nu: f64 = b.parse().map_err(|_| err())?;
            return ModulusPoint::float(mu, nu);
        }
        Err(err())
    }
}

/// Non-negative gcd of machine integers.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
