//! The oscillator group in two coordinate models, its automorphisms, and a
//! third exact model written in lattice-basis coordinates.
//!
//! Ambient elements `(xi, z, t)` multiply by
//! `(xi1,z1,t1)(xi2,z2,t2) = (xi1 + e^{i t1} xi2, z1 + z2 + omega(xi1, e^{i t1} xi2)/2, t1 + t2)`
//! with `omega(a, b) = Im(conj(a) b)`.

use std::fmt;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::numeric::{rat_int, NumericError, PiRat, QuadRat, Rat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("angle {0} is not a multiple of pi/6; exact rotation unavailable")]
    InexactRotation(String),
    #[error("linear map does not intertwine multiplication by i up to sign")]
    NotConformal,
    #[error("linear map is singular")]
    Singular,
    #[error("malformed element literal: {0}")]
    BadLiteral(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Coordinate field for group elements: exact `Q(sqrt 3)` with angles in
/// `(pi/6) Z`, or `f64`.
pub trait Coord:
    Clone + Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    type Angle: Clone + Debug + PartialEq;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(x: &Rat) -> Self;
    fn signum(&self) -> i64;
    fn recip(&self) -> Option<Self>;

    fn angle_zero() -> Self::Angle;
    fn angle_add(a: &Self::Angle, b: &Self::Angle) -> Self::Angle;
    fn angle_neg(a: &Self::Angle) -> Self::Angle;
    fn angle_admissible(a: &Self::Angle) -> bool;
    /// `(cos t, sin t)`; only called on admissible angles.
    fn cos_sin(a: &Self::Angle) -> (Self, Self);
    /// `u * t`. For exact coordinates `u` is the coefficient of `1/pi`, so the
    /// product with `t = rho pi` stays in the field.
    fn shift_term(u: &Self, t: &Self::Angle) -> Self;
    fn to_f64(&self) -> f64;
    fn angle_to_f64(a: &Self::Angle) -> f64;
    /// Exact zero test, or within `1e-12` for floats.
    fn approx_zero(&self) -> bool;

    fn half(&self) -> Self {
        self.clone() * Self::from_rat(&Rat::new(1.into(), 2.into()))
    }
}

impl Coord for QuadRat {
    type Angle = PiRat;
    fn zero() -> Self {
        QuadRat::zero()
    }
    fn one() -> Self {
        QuadRat::one()
    }
    fn from_rat(x: &Rat) -> Self {
        QuadRat::from_rat(x.clone())
    }
    fn signum(&self) -> i64 {
        QuadRat::signum(self)
    }
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn angle_zero() -> PiRat {
        PiRat::zero()
    }
    fn angle_add(a: &PiRat, b: &PiRat) -> PiRat {
        a + b
    }
    fn angle_neg(a: &PiRat) -> PiRat {
        -a
    }
    fn angle_admissible(a: &PiRat) -> bool {
        a.cos_sin_exact().is_some()
    }
    fn cos_sin(a: &PiRat) -> (Self, Self) {
        a.cos_sin_exact().expect("admissible angle")
    }
    fn shift_term(u: &Self, t: &PiRat) -> Self {
        u.scale(t.coeff())
    }
    fn to_f64(&self) -> f64 {
        QuadRat::to_f64(self)
    }
    fn angle_to_f64(a: &PiRat) -> f64 {
        a.to_f64()
    }
    fn approx_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Coord for f64 {
    type Angle = f64;
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rat(x: &Rat) -> Self {
        crate::numeric::rat_to_f64(x)
    }
    fn signum(&self) -> i64 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
    fn recip(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn angle_zero() -> f64 {
        0.0
    }
    fn angle_add(a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn angle_neg(a: &f64) -> f64 {
        -a
    }
    fn angle_admissible(a: &f64) -> bool {
        a.is_finite()
    }
    fn cos_sin(a: &f64) -> (f64, f64) {
        (a.cos(), a.sin())
    }
    fn shift_term(u: &f64, t: &f64) -> f64 {
        u * t
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn angle_to_f64(a: &f64) -> f64 {
        *a
    }
    fn approx_zero(&self) -> bool {
        self.abs() <= 1e-12
    }
}

/// Common interface of the group models.
pub trait GroupElement: Clone {
    fn identity() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// `g^n` by repeated squaring; negative powers go through the inverse.
pub fn group_power<G: GroupElement>(g: &G, n: i64) -> G {
    let mut base = if n < 0 { g.inverse() } else { g.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = G::identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

fn rotate<S: Coord>(x: &S, y: &S, c: &S, s: &S) -> (S, S) {
    (
        c.clone() * x.clone() - s.clone() * y.clone(),
        s.clone() * x.clone() + c.clone() * y.clone(),
    )
}

/// `omega(a, b) = Im(conj(a) b)` for `a = (ax, ay)`, `b = (bx, by)`.
pub fn omega<S: Coord>(ax: &S, ay: &S, bx: &S, by: &S) -> S {
    ax.clone() * by.clone() - ay.clone() * bx.clone()
}

// ---------------------------------------------------------------------------

/// Point `(xi, z, t)` of the oscillator group, `xi = x + i y`.
#[derive(Clone, Debug, PartialEq)]
pub struct OscElement<S: Coord> {
    x: S,
    y: S,
    z: S,
    t: S::Angle,
}

impl<S: Coord> OscElement<S> {
    pub fn new(x: S, y: S, z: S, t: S::Angle) -> Result<Self, GroupError> {
        if !S::angle_admissible(&t) {
            return Err(GroupError::InexactRotation(format!("{t:?}")));
        }
        Ok(OscElement { x, y, z, t })
    }
    pub fn xi(&self) -> (&S, &S) {
        (&self.x, &self.y)
    }
    pub fn z(&self) -> &S {
        &self.z
    }
    pub fn t(&self) -> &S::Angle {
        &self.t
    }
}

impl<S: Coord> GroupElement for OscElement<S> {
    fn identity() -> Self {
        OscElement { x: S::zero(), y: S::zero(), z: S::zero(), t: S::angle_zero() }
    }

    fn mul(&self, o: &Self) -> Self {
        let (c, s) = S::cos_sin(&self.t);
        let (rx, ry) = rotate(&o.x, &o.y, &c, &s);
        let w = omega(&self.x, &self.y, &rx, &ry);
        OscElement {
            x: self.x.clone() + rx,
            y: self.y.clone() + ry,
            z: self.z.clone() + o.z.clone() + w.half(),
            t: S::angle_add(&self.t, &o.t),
        }
    }

    fn inverse(&self) -> Self {
        let nt = S::angle_neg(&self.t);
        let (c, s) = S::cos_sin(&nt);
        let (rx, ry) = rotate(&self.x, &self.y, &c, &s);
        OscElement { x: -rx, y: -ry, z: -self.z.clone(), t: nt }
    }
}

pub fn osc_mul<S: Coord>(a: &OscElement<S>, b: &OscElement<S>) -> OscElement<S> {
    a.mul(b)
}

// ---------------------------------------------------------------------------

/// Point `M(x, y, z)(t)` of the model `G`, with Heisenberg law
/// `M(x,y,z) M(x',y',z') = M(x+x', y+y', z+z'+x y')`.
#[derive(Clone, Debug, PartialEq)]
pub struct GElement<S: Coord> {
    x: S,
    y: S,
    z: S,
    t: S::Angle,
}

impl<S: Coord> GElement<S> {
    pub fn new(x: S, y: S, z: S, t: S::Angle) -> Result<Self, GroupError> {
        if !S::angle_admissible(&t) {
            return Err(GroupError::InexactRotation(format!("{t:?}")));
        }
        Ok(GElement { x, y, z, t })
    }
    pub fn coords(&self) -> (&S, &S, &S, &S::Angle) {
        (&self.x, &self.y, &self.z, &self.t)
    }

    /// Action of the rotation `l(t)` on the Heisenberg part.
    fn rotate_heis(t: &S::Angle, x: &S, y: &S, z: &S) -> (S, S, S) {
        let (c, s) = S::cos_sin(t);
        let two = S::from_rat(&rat_int(2));
        let c2 = c.clone() * c.clone() - s.clone() * s.clone();
        let s2 = two * s.clone() * c.clone();
        let (nx, ny) = rotate(x, y, &c, &s);
        let xy = x.clone() * y.clone();
        let quarter = S::from_rat(&Rat::new(1.into(), 4.into()));
        let nz = z.clone()
            + xy.half() * (c2 - S::one())
            + (x.clone() * x.clone() - y.clone() * y.clone()) * quarter * s2;
        (nx, ny, nz)
    }
}

impl<S: Coord> GroupElement for GElement<S> {
    fn identity() -> Self {
        GElement { x: S::zero(), y: S::zero(), z: S::zero(), t: S::angle_zero() }
    }

    fn mul(&self, o: &Self) -> Self {
        let (x2, y2, z2) = Self::rotate_heis(&self.t, &o.x, &o.y, &o.z);
        GElement {
            x: self.x.clone() + x2,
            y: self.y.clone() + y2.clone(),
            z: self.z.clone() + z2 + self.x.clone() * y2,
            t: S::angle_add(&self.t, &o.t),
        }
    }

    fn inverse(&self) -> Self {
        // (M(h)(t))^{-1} = l(-t)(M(h)^{-1}) (-t)
        let nt = S::angle_neg(&self.t);
        let hx = -self.x.clone();
        let hy = -self.y.clone();
        let hz = -self.z.clone() + self.x.clone() * self.y.clone();
        let (x, y, z) = Self::rotate_heis(&nt, &hx, &hy, &hz);
        GElement { x, y, z, t: nt }
    }
}

pub fn g_mul<S: Coord>(a: &GElement<S>, b: &GElement<S>) -> GElement<S> {
    a.mul(b)
}

/// `phi(x + i y, z, t) = M(-y, x, z - x y / 2)(t)`.
pub fn phi<S: Coord>(g: &OscElement<S>) -> GElement<S> {
    let xy = g.x.clone() * g.y.clone();
    GElement { x: -g.y.clone(), y: g.x.clone(), z: g.z.clone() - xy.half(), t: g.t.clone() }
}

pub fn phi_inv<S: Coord>(g: &GElement<S>) -> OscElement<S> {
    let xy = g.x.clone() * g.y.clone();
    OscElement { x: g.y.clone(), y: -g.x.clone(), z: g.z.clone() - xy.half(), t: g.t.clone() }
}

// ---------------------------------------------------------------------------

/// Generators of the automorphism group.
#[derive(Clone, Debug, PartialEq)]
pub enum Automorphism<S: Coord> {
    /// `(xi, z, t) -> (xi, z + u t, t)`.
    Shift(S),
    /// Conjugation by `(eta, 0, 0)`.
    InnerConj(S, S),
    /// `(xi, z, t) -> (S xi, det(S) z, mu t)` with `S i = mu i S`.
    Linear(LinearMap<S>),
}

/// Real 2x2 matrix acting on `(Re xi, Im xi)`, checked to be conformal or
/// anticonformal.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<S: Coord> {
    m: [[S; 2]; 2],
}

impl<S: Coord> LinearMap<S> {
    pub fn new(m: [[S; 2]; 2]) -> Result<Self, GroupError> {
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        let mu = det.signum();
        if mu == 0 {
            return Err(GroupError::Singular);
        }
        // S J = mu J S with J = [[0,-1],[1,0]]
        let sj = [[m[0][1].clone(), -m[0][0].clone()], [m[1][1].clone(), -m[1][0].clone()]];
        let js = [[-m[1][0].clone(), -m[1][1].clone()], [m[0][0].clone(), m[0][1].clone()]];
        let sgn = S::from_rat(&rat_int(mu));
        for i in 0..2 {
            for j in 0..2 {
                let lhs = sj[i][j].clone();
                let rhs = sgn.clone() * js[i][j].clone();
                if !(lhs - rhs).approx_zero() {
                    return Err(GroupError::NotConformal);
                }
            }
        }
        Ok(LinearMap { m })
    }

    pub fn scalar(a: S) -> Self {
        LinearMap { m: [[a.clone(), S::zero()], [S::zero(), a]] }
    }

    pub fn matrix(&self) -> &[[S; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> S {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    /// Sign of the determinant; `-1` for orientation reversing maps.
    pub fn mu(&self) -> i64 {
        self.det().signum()
    }

    pub fn inverse(&self) -> Result<Self, GroupError> {
        let d = self.det().recip().ok_or(GroupError::Singular)?;
        let m = &self.m;
        Ok(LinearMap {
            m: [
                [d.clone() * m[1][1].clone(), -(d.clone() * m[0][1].clone())],
                [-(d.clone() * m[1][0].clone()), d * m[0][0].clone()],
            ],
        })
    }

    fn apply_vec(&self, x: &S, y: &S) -> (S, S) {
        let m = &self.m;
        (
            m[0][0].clone() * x.clone() + m[0][1].clone() * y.clone(),
            m[1][0].clone() * x.clone() + m[1][1].clone() * y.clone(),
        )
    }
}

impl<S: Coord> Automorphism<S> {
    pub fn apply(&self, g: &OscElement<S>) -> OscElement<S> {
        match self {
            Automorphism::Shift(u) => OscElement {
                x: g.x.clone(),
                y: g.y.clone(),
                z: g.z.clone() + S::shift_term(u, &g.t),
                t: g.t.clone(),
            },
            Automorphism::InnerConj(ex, ey) => {
                let e = OscElement { x: ex.clone(), y: ey.clone(), z: S::zero(), t: S::angle_zero() };
                e.mul(g).mul(&e.inverse())
            }
            Automorphism::Linear(s) => {
                let (x, y) = s.apply_vec(&g.x, &g.y);
                let t = if s.mu() > 0 { g.t.clone() } else { S::angle_neg(&g.t) };
                OscElement { x, y, z: s.det() * g.z.clone(), t }
            }
        }
    }

    pub fn inverse(&self) -> Result<Self, GroupError> {
        Ok(match self {
            Automorphism::Shift(u) => Automorphism::Shift(-u.clone()),
            Automorphism::InnerConj(x, y) => Automorphism::InnerConj(-x.clone(), -y.clone()),
            Automorphism::Linear(s) => Automorphism::Linear(s.inverse()?),
        })
    }
}

pub fn apply_automorphism<S: Coord>(f: &Automorphism<S>, g: &OscElement<S>) -> OscElement<S> {
    f.apply(g)
}

// ---------------------------------------------------------------------------

fn split_args(s: &str, head: &str) -> Result<Vec<String>, GroupError> {
    let bad = || GroupError::BadLiteral(s.to_string());
    let t = s.trim();
    let inner = t
        .strip_prefix(head)
        .and_then(|r| r.trim_start().strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let parts: Vec<String> = inner.split(',').map(|p| p.trim().to_string()).collect();
    if parts.len() != 4 {
        return Err(bad());
    }
    Ok(parts)
}

/// Parses `osc(x, y, z, t)` with coordinates in `Q(sqrt 3)` and `t` a rational
/// multiple of `pi`.
pub fn parse_osc_exact(s: &str) -> Result<OscElement<QuadRat>, GroupError> {
    let p = split_args(s, "osc")?;
    OscElement::new(p[0].parse()?, p[1].parse()?, p[2].parse()?, p[3].parse()?)
}

/// Parses `g(x, y, z, t)`, same coordinate syntax as [`parse_osc_exact`].
pub fn parse_g_exact(s: &str) -> Result<GElement<QuadRat>, GroupError> {
    let p = split_args(s, "g")?;
    GElement::new(p[0].parse()?, p[1].parse()?, p[2].parse()?, p[3].parse()?)
}

/// Parses `osc(x, y, z, t)` with float coordinates.
pub fn parse_osc_float(s: &str) -> Result<OscElement<f64>, GroupError> {
    let p = split_args(s, "osc")?;
    let f = |v: &str| v.parse::<f64>().map_err(|_| GroupError::BadLiteral(s.to_string()));
    OscElement::new(f(&p[0])?, f(&p[1])?, f(&p[2])?, f(&p[3])?)
}

impl fmt::Display for OscElement<QuadRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "osc({}, {}, {}, {} pi)", self.x, self.y, self.z, crate::numeric::fmt_rat(self.t.coeff()))
    }
}

impl fmt::Display for GElement<QuadRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({}, {}, {}, {} pi)", self.x, self.y, self.z, crate::numeric::fmt_rat(self.t.coeff()))
    }
}

// ---------------------------------------------------------------------------

/// 2x2 integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMat2(pub [[i64; 2]; 2]);

impl IntMat2 {
    pub const IDENTITY: IntMat2 = IntMat2([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
    pub fn mul(&self, o: &IntMat2) -> IntMat2 {
        let (a, b) = (&self.0, &o.0);
        let mut c = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        IntMat2(c)
    }
    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Option<IntMat2> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let m = &self.0;
        Some(IntMat2([[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]]))
    }
    pub fn pow(&self, n: u32) -> IntMat2 {
        (0..n).fold(IntMat2::IDENTITY, |acc, _| acc.mul(self))
    }
    pub fn apply(&self, v: &[Rat; 2]) -> [Rat; 2] {
        let m = &self.0;
        [
            rat_int(m[0][0]) * &v[0] + rat_int(m[0][1]) * &v[1],
            rat_int(m[1][0]) * &v[0] + rat_int(m[1][1]) * &v[1],
        ]
    }
    pub fn apply_int(&self, v: [i64; 2]) -> [i64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }
}

/// Rotation by `2 pi / q` written in an adapted lattice basis.
pub fn rotation_matrix(q: u8) -> IntMat2 {
    match q {
        1 => IntMat2([[1, 0], [0, 1]]),
        2 => IntMat2([[-1, 0], [0, -1]]),
        3 => IntMat2([[0, -1], [1, -1]]),
        4 => IntMat2([[0, -1], [1, 0]]),
        6 => IntMat2([[1, -1], [1, 0]]),
        _ => panic!("no lattice rotation of order {q}"),
    }
}

/// Determinant form on basis coordinates.
pub fn det2(a: &[Rat; 2], b: &[Rat; 2]) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Element of the oscillator group written in the coordinates of a lattice
/// basis `(alpha, beta)`: `xi = p0 alpha + p1 beta`, and `t = turns * lambda`.
/// The rotation `e^{i lambda}` acts on basis coordinates through the integer
/// matrix of order `q`, and `omega` becomes `area * det`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameElement {
    pub p: [Rat; 2],
    pub z: Rat,
    pub turns: i64,
    pub q: u8,
    pub area: Rat,
}

impl FrameElement {
    pub fn new(p: [Rat; 2], z: Rat, turns: i64, q: u8, area: Rat) -> Self {
        FrameElement { p, z, turns, q, area }
    }

    fn rot(&self) -> IntMat2 {
        rotation_matrix(self.q).pow(self.turns.rem_euclid(self.q as i64) as u32)
    }

    pub fn mul(&self, o: &FrameElement) -> FrameElement {
        debug_assert_eq!(self.q, o.q);
        let rp = self.rot().apply(&o.p);
        let w = &self.area * det2(&self.p, &rp);
        FrameElement {
            p: [&self.p[0] + &rp[0], &self.p[1] + &rp[1]],
            z: &self.z + &o.z + w / rat_int(2),
            turns: self.turns + o.turns,
            q: self.q,
            area: self.area.clone(),
        }
    }

    pub fn inverse(&self) -> FrameElement {
        let inv = rotation_matrix(self.q)
            .pow(((-self.turns).rem_euclid(self.q as i64)) as u32);
        let rp = inv.apply(&self.p);
        FrameElement {
            p: [-&rp[0], -&rp[1]],
            z: -&self.z,
            turns: -self.turns,
            q: self.q,
            area: self.area.clone(),
        }
    }

    pub fn conj_by(&self, g: &FrameElement) -> FrameElement {
        g.mul(self).mul(&g.inverse())
    }

    pub fn is_central(&self) -> bool {
        self.p[0].is_zero() && self.p[1].is_zero()
    }
}

/// Element of a fixed frame; needed so [`group_power`] can supply the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramePoint(pub Option<FrameElement>);

impl GroupElement for FramePoint {
    fn identity() -> Self {
        FramePoint(None)
    }
    fn mul(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (None, x) | (x, None) => FramePoint(x.clone()),
            (Some(a), Some(b)) => FramePoint(Some(a.mul(b))),
        }
    }
    fn inverse(&self) -> Self {
        FramePoint(self.0.as_ref().map(|a| a.inverse()))
    }
}

pub fn frame_power(g: &FrameElement, n: i64) -> FrameElement {
    match group_power(&FramePoint(Some(g.clone())), n).0 {
        Some(x) => x,
        None => FrameElement::new(
            [Rat::zero(), Rat::zero()],
            Rat::zero(),
            0,
            g.q,
            g.area.clone(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadRat {
        QuadRat::new(rat(a, 3), rat(b, 5))
    }

    fn osc_exact(v: (i64, i64, i64, i64, i64, i64, i64)) -> OscElement<QuadRat> {
        OscElement::new(q(v.0, v.1), q(v.2, v.3), q(v.4, v.5), PiRat::from_ratio(v.6, 6)).unwrap()
    }

    fn g_exact(v: (i64, i64, i64, i64, i64, i64, i64)) -> GElement<QuadRat> {
        GElement::new(q(v.0, v.1), q(v.2, v.3), q(v.4, v.5), PiRat::from_ratio(v.6, 6)).unwrap()
    }

    fn tuple() -> impl Strategy<Value = (i64, i64, i64, i64, i64, i64, i64)> {
        (-6i64..6, -6i64..6, -6i64..6, -6i64..6, -6i64..6, -6i64..6, -24i64..24)
    }

    #[test]
    fn basic_products() {
        let a = parse_osc_exact("osc(1, 0, 0, 0)").unwrap();
        let b = parse_osc_exact("osc(0, 1, 0, 0)").unwrap();
        let c = a.mul(&b);
        assert_eq!(c, parse_osc_exact("osc(1, 1, 1/2, 0)").unwrap());
        let m = phi(&parse_osc_exact("osc(1, 1, 0, 0)").unwrap());
        assert_eq!(m, parse_g_exact("g(-1, 1, -1/2, 0)").unwrap());
    }

    #[test]
    fn quarter_turn_in_g() {
        // (pi/2) M(x,y,z)(t) = M(-y, x, z - x y)(t + pi/2)
        let r = GElement::new(QuadRat::zero(), QuadRat::zero(), QuadRat::zero(), PiRat::from_ratio(1, 2)).unwrap();
        let m = parse_g_exact("g(2, 3, 5, 1/3 pi)").unwrap();
        assert_eq!(r.mul(&m), parse_g_exact("g(-3, 2, -1, 5/6 pi)").unwrap());
    }

    #[test]
    fn literal_roundtrip() {
        let s = "osc(1/2+sqrt3, -2, 1/3*sqrt3, 5/6 pi)";
        let g = parse_osc_exact(s).unwrap();
        assert_eq!(parse_osc_exact(&g.to_string()).unwrap(), g);
        assert!(parse_osc_exact("osc(1, 0, 0, 1/4 pi)").is_err());
        assert!(parse_osc_exact("osc(1, 0, 0)").is_err());
        let f = parse_osc_float("osc(0.5, 1, 0, 0.3)").unwrap();
        assert_eq!(*f.t(), 0.3);
    }

    #[test]
    fn inner_conj_shifts_z() {
        // conjugating (1, z, 0) by (eta, 0, 0) moves z by -Im(eta)
        let f = Automorphism::InnerConj(QuadRat::from_int(2), QuadRat::from_int(3));
        let a = parse_osc_exact("osc(1, 0, 1/7, 0)").unwrap();
        assert_eq!(f.apply(&a), parse_osc_exact("osc(1, 0, -20/7, 0)").unwrap());
    }

    #[test]
    fn rotations_are_inner() {
        for k in 0..12 {
            let th = PiRat::from_ratio(k, 6);
            let (c, s) = th.cos_sin_exact().unwrap();
            let lin = LinearMap::new([[c.clone(), -s.clone()], [s, c]]).unwrap();
            let f = Automorphism::Linear(lin);
            let w = OscElement::new(QuadRat::zero(), QuadRat::zero(), QuadRat::zero(), th).unwrap();
            let g = parse_osc_exact("osc(1/2, sqrt3, 2, 1/3 pi)").unwrap();
            assert_eq!(f.apply(&g), w.mul(&g).mul(&w.inverse()));
        }
    }

    #[test]
    fn non_conformal_rejected() {
        let m = [[QuadRat::one(), QuadRat::one()], [QuadRat::zero(), QuadRat::one()]];
        assert_eq!(LinearMap::new(m).unwrap_err(), GroupError::NotConformal);
    }

    #[test]
    fn frame_matches_ambient_on_square_lattice() {
        // with modulus i the basis is (1, i) and frame products are ambient products
        let to_osc = |f: &FrameElement| {
            OscElement::new(
                QuadRat::from_rat(f.p[0].clone()),
                QuadRat::from_rat(f.p[1].clone()),
                QuadRat::from_rat(f.z.clone()),
                PiRat::from_ratio(f.turns, 2),
            )
            .unwrap()
        };
        let mk = |a: i64, b: i64, c: i64, n: i64| {
            FrameElement::new([rat(a, 3), rat(b, 2)], rat(c, 5), n, 4, rat_int(1))
        };
        for (a, b) in [(mk(1, 2, 3, 1), mk(-2, 5, 1, 3)), (mk(4, -1, 0, -1), mk(0, 3, 2, 2))] {
            assert_eq!(to_osc(&a.mul(&b)), to_osc(&a).mul(&to_osc(&b)));
            assert_eq!(to_osc(&a.inverse()), to_osc(&a).inverse());
        }
    }

    proptest! {
        #[test]
        fn exact_associativity(a in tuple(), b in tuple(), c in tuple()) {
            let (a, b, c) = (osc_exact(a), osc_exact(b), osc_exact(c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&a.inverse()), OscElement::identity());
        }

        #[test]
        fn g_model_associativity(a in tuple(), b in tuple(), c in tuple()) {
            let (a, b, c) = (g_exact(a), g_exact(b), g_exact(c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&a.inverse()), GElement::identity());
        }

        #[test]
        fn phi_is_homomorphism_exact(a in tuple(), b in tuple()) {
            let (a, b) = (osc_exact(a), osc_exact(b));
            prop_assert_eq!(phi(&a.mul(&b)), phi(&a).mul(&phi(&b)));
            prop_assert_eq!(phi_inv(&phi(&a)), a);
        }

        #[test]
        fn automorphisms_respect_products(a in tuple(), b in tuple(), u in -5i64..5,
                                          e1 in -4i64..4, e2 in -4i64..4, k in 0i64..12, sc in 1i64..4) {
            let (a, b) = (osc_exact(a), osc_exact(b));
            let (c, s) = PiRat::from_ratio(k, 6).cos_sin_exact().unwrap();
            let sc = QuadRat::from_int(sc);
            let rot = LinearMap::new([[&sc * &c, -(&sc * &s)], [&sc * &s, &sc * &c]]).unwrap();
            let refl = LinearMap::new([[QuadRat::one(), QuadRat::zero()], [QuadRat::zero(), -QuadRat::one()]]).unwrap();
            let fs = [
                Automorphism::Shift(QuadRat::new(rat(u, 7), Rat::zero())),
                Automorphism::InnerConj(QuadRat::from_int(e1), QuadRat::new(Rat::zero(), rat(e2, 2))),
                Automorphism::Linear(rot),
                Automorphism::Linear(refl),
            ];
            for f in &fs {
                prop_assert_eq!(f.apply(&a.mul(&b)), f.apply(&a).mul(&f.apply(&b)));
                prop_assert_eq!(f.inverse().unwrap().apply(&f.apply(&a)), a.clone());
            }
        }

        #[test]
        fn phi_is_homomorphism_float(v in proptest::collection::vec(-3.0f64..3.0, 8)) {
            let a = OscElement::new(v[0], v[1], v[2], v[3]).unwrap();
            let b = OscElement::new(v[4], v[5], v[6], v[7]).unwrap();
            let lhs = phi(&a.mul(&b));
            let rhs = phi(&a).mul(&phi(&b));
            let (l, r) = (lhs.coords(), rhs.coords());
            prop_assert!((l.0 - r.0).abs() < 1e-12 && (l.1 - r.1).abs() < 1e-12);
            prop_assert!((l.2 - r.2).abs() < 1e-11 && (l.3 - r.3).abs() < 1e-12);
        }

        #[test]
        fn power_matches_repeated_product(a in tuple(), n in -7i64..8) {
            let a = osc_exact(a);
            let mut acc = OscElement::identity();
            let step = if n < 0 { a.inverse() } else { a.clone() };
            for _ in 0..n.abs() { acc = acc.mul(&step); }
            prop_assert_eq!(group_power(&a, n), acc);
        }
    }
}
