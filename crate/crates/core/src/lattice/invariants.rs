//! The invariant bundle `(q, v, w, a, b, z0, s0, s_L)` of a lattice.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::classify::{classify_presentation, TypeTag};
use super::spec::{LatticeError, LatticeSpec};
use crate::group::{det2, IntMat2};
use crate::numeric::{fmt_rat, rat, rat_int, rat_mod, rat_to_i64, Rat};
use crate::oracle::z0_solve;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub q: u8,
    pub type_tag: TypeTag,
    pub kl: (i64, i64),
    pub vw: [Rat; 2],
    pub ab: [Rat; 2],
    /// `r mod q0`, with `q0` the smallest prime factor of `q` (zero for `q = 1`).
    pub r_tilde: i64,
    pub z0: Rat,
    pub s0: i64,
    /// Representative of the shift invariant in `[0, 1/(s0 r))`.
    pub s_l: Rat,
}

impl InvariantBundle {
    pub fn is_unshifted(&self) -> bool {
        self.s_l.is_zero()
    }

    /// Modulus `1/(s0 r)` of the shift invariant.
    pub fn s_modulus(&self) -> Rat {
        rat(1, self.s0 * self.type_tag.r())
    }
}

fn smallest_prime_factor(q: u8) -> i64 {
    match q {
        2 | 4 | 6 => 2,
        3 => 3,
        _ => 1,
    }
}

fn sub(a: &[Rat; 2], b: &[Rat; 2]) -> [Rat; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn scale(k: &Rat, a: &[Rat; 2]) -> [Rat; 2] {
    [k * &a[0], k * &a[1]]
}

fn plus_identity(m: &IntMat2, sign: i64) -> IntMat2 {
    let s = m.0;
    IntMat2([[s[0][0] + sign, s[0][1]], [s[1][0], s[1][1] + sign]])
}

/// `(v, w) = r (x_delta, y_delta) - r (S_q - I)(-z_beta, z_alpha)` for a
/// normalised lattice.
pub fn vw_of(spec: &LatticeSpec) -> [Rat; 2] {
    let g = spec.gens();
    let r = rat_int(spec.r());
    let zeta = [-g.z_beta.clone(), g.z_alpha.clone()];
    let rot = plus_identity(&spec.rotation(), -1).apply(&zeta);
    sub(&scale(&r, &[g.x_delta.clone(), g.y_delta.clone()]), &scale(&r, &rot))
}

/// `(v, w)` recomputed from the conjugation exponents `(k, l)`.
pub fn vw_from_kl(q: u8, r: i64, k: i64, l: i64) -> [Rat; 2] {
    let s = crate::group::rotation_matrix(q);
    let m = s.0;
    let first = s.apply(&[rat_int(m[0][1] * m[1][1]), rat_int(-m[0][0] * m[1][0])]);
    let second = s.apply(&[rat_int(-l), rat_int(k)]);
    sub(&scale(&rat(r, 2), &first), &second)
}

/// `(a, b)` offsets of `(v, w)` for odd `r` with `q = 3, 6`.
pub fn ab_of(q: u8, r: i64) -> [Rat; 2] {
    match (q, r % 2 != 0) {
        (3, true) => [Rat::one(), rat(1, 2)],
        (6, true) => [rat(1, 2), Rat::zero()],
        _ => [Rat::zero(), Rat::zero()],
    }
}

/// Closed form `z0 = -(c/(2 q r^2)) omega(V, S_q V)`, `c = 1, 2, 6` for
/// `q = 3, 4, 6`; zero for `q = 2`.
pub fn z0_closed_form(q: u8, r: i64, big_v: &[Rat; 2]) -> Rat {
    let c = match q {
        3 => 1,
        4 => 2,
        6 => 6,
        _ => return Rat::zero(),
    };
    let sv = crate::group::rotation_matrix(q).apply(big_v);
    -rat(c, 2 * q as i64 * r * r) * det2(big_v, &sv)
}

/// Invariants of a normalised lattice.
pub fn invariants(spec: &LatticeSpec) -> Result<InvariantBundle, LatticeError> {
    if !spec.is_normalised() {
        return Err(LatticeError::NotNormalised(fmt_rat(spec.scale())));
    }
    let (q, r) = (spec.q(), spec.r());
    let (k, l) = spec.kl();
    let type_tag = classify_presentation(q, r, k, l);
    let vw = vw_of(spec);
    let vw_kl = vw_from_kl(q, r, k, l);
    if vw != vw_kl {
        return Err(LatticeError::Inconsistent(format!(
            "(v, w) = ({}, {}) but conjugation exponents give ({}, {})",
            fmt_rat(&vw[0]),
            fmt_rat(&vw[1]),
            fmt_rat(&vw_kl[0]),
            fmt_rat(&vw_kl[1])
        )));
    }
    let ab = ab_of(q, r);
    let vi = rat_to_i64(&(&vw[0] - &ab[0]));
    let wi = rat_to_i64(&(&vw[1] - &ab[1]));
    let (Some(vi), Some(wi)) = (vi, wi) else {
        return Err(LatticeError::Inconsistent("(v, w) not in Z^2 + (a, b)".into()));
    };
    let g = spec.gens();
    let zeta = [-g.z_beta.clone(), g.z_alpha.clone()];
    let rr = rat_int(r);
    let rot = spec.rotation();

    if q == 1 {
        let s0 = r / r.gcd(&vi).gcd(&wi);
        let s = &g.z_delta - rat(1, 2) * &vw[0] * &vw[1] - det2(&vw, &zeta) / &rr;
        let s_l = rat_mod(&s, &rat(1, s0 * r));
        return Ok(InvariantBundle { q, type_tag, kl: (k, l), vw, ab, r_tilde: 0, z0: Rat::zero(), s0, s_l });
    }

    let q0 = smallest_prime_factor(q);
    let r_tilde = r.rem_euclid(q0);
    let special = q == 4 && r.rem_euclid(4) == 2;
    let common = &g.z_delta
        - det2(&vw, &plus_identity(&rot, 1).apply(&zeta)) / (rat_int(2) * &rr)
        - rat(1, 2) * det2(&rot.apply(&zeta), &zeta);
    let (s0, p, correction) = if type_tag.is_plus() {
        let s0 = if special { 1 } else { q0 };
        (s0, scale(&(Rat::one() / &rr), &vw), Rat::zero())
    } else {
        let s0 = if special { q0 } else { 1 };
        let rt = rat_int(r_tilde);
        let p = [
            &vw[0] / &rr - &rt * &vw[0] + &rt * &ab[0],
            &vw[1] / &rr - &rt * &vw[1] + &rt * &ab[1],
        ];
        let corr = rat(1, 2) * (&vw[0] - &ab[0]) * (&vw[1] - &ab[1]) * &rt * &rt
            + &rt / (rat_int(2) * &rr) * det2(&vw, &ab);
        (s0, p, corr)
    };
    let z0 = z0_closed_form(q, r, &scale(&rr, &p));
    let z0_direct = z0_solve(q, p.clone())
        .ok_or_else(|| LatticeError::Inconsistent("q-th power of the translation part is not central".into()))?;
    if z0 != z0_direct {
        return Err(LatticeError::Inconsistent(format!(
            "z0 closed form {} differs from power computation {}",
            fmt_rat(&z0),
            fmt_rat(&z0_direct)
        )));
    }
    let s = common - correction - &z0;
    let s_l = rat_mod(&s, &rat(1, s0 * r));
    Ok(InvariantBundle { q, type_tag, kl: (k, l), vw, ab, r_tilde, z0, s0, s_l })
}
