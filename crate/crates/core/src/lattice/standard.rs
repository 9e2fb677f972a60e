//! Reduction to standard form: fundamental domain, normalisation,
//! unshifting, and the standard lattice attached to each descriptor.

use std::fmt;

use num_traits::{One, Zero};

use super::classify::TypeTag;
use super::invariants::{invariants, InvariantBundle};
use super::moves::{change_basis, normalise, rotation_stabilizer, shift};
use super::spec::{order_of_lambda, GeneratorData, LatticeError, LatticeSpec};
use crate::group::IntMat2;
use crate::numeric::{fmt_rat, rat, rat_to_i64, ModulusPoint, PiRat, QuadRat, Rat, TOL};

const SHIFT: [[i64; 2]; 2] = [[0, -1], [1, 0]];

fn translate(n: i64) -> IntMat2 {
    IntMat2([[1, n], [0, 1]])
}

/// Maps a modulus into the closed-left fundamental domain
/// `{-1/2 < mu <= 1/2, |tau| >= 1, mu >= 0 on the unit circle}`.
/// Returns the reduced point and `A` in `SL(2, Z)` with `A . tau` reduced.
pub fn fd_reduce(m: &ModulusPoint) -> (ModulusPoint, IntMat2) {
    match m.exact() {
        Some((mu, nu)) => fd_reduce_exact(mu, nu),
        None => {
            let (mu, nu) = m.to_f64();
            fd_reduce_float(mu, nu)
        }
    }
}

fn fd_reduce_exact(mut mu: QuadRat, mut nu: QuadRat) -> (ModulusPoint, IntMat2) {
    let half = QuadRat::from_rat(rat(1, 2));
    let neg_half = -half.clone();
    let one = QuadRat::one();
    let mut acc = IntMat2::IDENTITY;
    loop {
        let mut n = mu.to_f64().round() as i64;
        while &mu - &QuadRat::from_int(n) > half {
            n += 1;
        }
        while &mu - &QuadRat::from_int(n) <= neg_half {
            n -= 1;
        }
        mu = &mu - &QuadRat::from_int(n);
        acc = translate(-n).mul(&acc);
        let abs2 = &(&mu * &mu) + &(&nu * &nu);
        if abs2 < one || (abs2 == one && mu.signum() < 0) {
            let inv = abs2.inv().expect("nonzero modulus");
            mu = -(&mu * &inv);
            nu = &nu * &inv;
            acc = IntMat2(SHIFT).mul(&acc);
            continue;
        }
        break;
    }
    (ModulusPoint::from_exact(mu, nu).expect("upper half plane"), acc)
}

fn fd_reduce_float(mut mu: f64, mut nu: f64) -> (ModulusPoint, IntMat2) {
    let snap = TOL.snap_tol;
    let mut acc = IntMat2::IDENTITY;
    for _ in 0..10_000 {
        let mut n = mu.round() as i64;
        if mu - n as f64 > 0.5 + snap {
            n += 1;
        }
        if mu - (n as f64) < -0.5 + snap {
            n -= 1;
        }
        mu -= n as f64;
        acc = translate(-n).mul(&acc);
        let abs2 = mu * mu + nu * nu;
        if abs2 < 1.0 - snap || ((abs2 - 1.0).abs() <= snap && mu < -snap) {
            mu = -mu / abs2;
            nu /= abs2;
            acc = IntMat2(SHIFT).mul(&acc);
            continue;
        }
        break;
    }
    if (mu - 0.5).abs() <= snap {
        mu = 0.5;
    }
    if (mu * mu + nu * nu - 1.0).abs() <= snap && mu.abs() <= snap {
        return (ModulusPoint::PointI, acc);
    }
    if mu == 0.5 && (nu - 3f64.sqrt() / 2.0).abs() <= snap {
        return (ModulusPoint::PointOmega, acc);
    }
    (ModulusPoint::Float { mu, nu }, acc)
}

/// Point class of a reduced modulus, which fixes the residual symmetry.
fn modulus_symmetry(m: &ModulusPoint) -> Vec<IntMat2> {
    match m {
        ModulusPoint::PointI => rotation_stabilizer(4),
        ModulusPoint::PointOmega => rotation_stabilizer(6),
        _ => rotation_stabilizer(2),
    }
}

/// Isomorphism class of a lattice up to inner automorphisms, after
/// normalising and unshifting.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardDescriptor {
    pub tag: TypeTag,
    pub lambda: PiRat,
    pub modulus: ModulusPoint,
    /// Present for the first-order types and for the plus type of order two.
    pub iota: Option<(i64, i64)>,
}

/// `lambda` as `pi/2`, `2pi`, `-3pi/2`.
pub fn fmt_lambda(l: &PiRat) -> String {
    let c = l.coeff();
    let (n, d) = (c.numer().to_string(), c.denom().to_string());
    let num = match n.as_str() {
        "1" => "pi".to_string(),
        "-1" => "-pi".to_string(),
        "0" => "0".to_string(),
        other => format!("{other}pi"),
    };
    if d == "1" {
        num
    } else {
        format!("{num}/{d}")
    }
}

impl fmt::Display for StandardDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag.to_string();
        let inner = &tag[..tag.len() - 1];
        write!(f, "{inner}, lambda={}", fmt_lambda(&self.lambda))?;
        if self.tag.q() <= 2 {
            write!(f, ", modulus={}", self.modulus)?;
        }
        if let Some((a, b)) = self.iota {
            write!(f, ", iota=({a},{b})")?;
        }
        write!(f, ")")
    }
}

impl StandardDescriptor {
    /// Standard lattice in normalised basis coordinates (`z_alpha = z_beta = 0`).
    pub fn to_spec(&self) -> Result<LatticeSpec, LatticeError> {
        let r = self.tag.r();
        let odd = r % 2 != 0;
        let ri = |n: i64, d: i64| rat(n, d);
        let (x, y, z) = match self.tag {
            TypeTag::T1 { .. } | TypeTag::T2Plus { .. } => {
                let (i1, i2) = self.iota.ok_or_else(|| LatticeError::Inconsistent("missing iota".into()))?;
                let z = if self.tag.q() == 1 && (r * i1 * i2) % 2 != 0 { rat(1, 2) } else { Rat::zero() };
                (ri(i1, r), ri(i2, r), z)
            }
            TypeTag::T2 { .. } | TypeTag::T4 { .. } => (Rat::zero(), Rat::zero(), Rat::zero()),
            TypeTag::T3 { .. } if odd => (ri(1, r), ri(1, 2 * r), ri(-1, 8 * r * r)),
            TypeTag::T3 { .. } => (Rat::zero(), Rat::zero(), Rat::zero()),
            TypeTag::T3Plus { .. } if odd => (Rat::zero(), ri(1, 2 * r), ri(-1, 24 * r * r)),
            TypeTag::T3Plus { .. } => (ri(-1, r), Rat::zero(), ri(-1, 6 * r * r)),
            TypeTag::T4Plus { .. } => (ri(1, r), Rat::zero(), ri(-1, 4 * r * r)),
            TypeTag::T6 { .. } if odd => (ri(1, 2 * r), Rat::zero(), ri(-1, 8 * r * r)),
            TypeTag::T6 { .. } => (Rat::zero(), Rat::zero(), Rat::zero()),
        };
        let gens = GeneratorData { z_alpha: Rat::zero(), z_beta: Rat::zero(), x_delta: x, y_delta: y, z_delta: z };
        LatticeSpec::new(r, self.lambda.clone(), self.modulus.clone(), gens, Rat::one())
    }

    /// Every descriptor with the given `(r, lambda)` at a fixed modulus: one
    /// per type, and per canonical `iota` where present.
    pub fn enumerate(r: i64, lambda: &PiRat, modulus: &ModulusPoint) -> Result<Vec<StandardDescriptor>, LatticeError> {
        let q = order_of_lambda(lambda)?;
        let modulus = match q {
            4 => ModulusPoint::PointI,
            3 | 6 => ModulusPoint::PointOmega,
            _ => modulus.clone(),
        };
        let mut out = Vec::new();
        for tag in TypeTag::candidates(q, r) {
            let iotas: Vec<Option<(i64, i64)>> = match tag {
                TypeTag::T1 { r0, .. } => {
                    let mut v: Vec<(i64, i64)> = (0..r)
                        .flat_map(|a| (0..r).map(move |b| (a, b)))
                        .filter(|&(a, b)| crate::numeric::gcd_i64(crate::numeric::gcd_i64(a, b), r) == r0)
                        .map(|(a, b)| canonical_iota_t1(r, (a, b), &modulus))
                        .collect();
                    v.sort();
                    v.dedup();
                    v.into_iter().map(Some).collect()
                }
                TypeTag::T2Plus { .. } => {
                    let mut v: Vec<(i64, i64)> =
                        [(1, 0), (0, 1), (1, 1)].iter().map(|&i| canonical_iota_t2plus(i, &modulus)).collect();
                    v.sort();
                    v.dedup();
                    v.into_iter().map(Some).collect()
                }
                _ => vec![None],
            };
            for iota in iotas {
                out.push(StandardDescriptor { tag, lambda: lambda.clone(), modulus: modulus.clone(), iota });
            }
        }
        Ok(out)
    }
}

/// Lexicographically least point of the orbit of `iota mod r` under the
/// symmetry group of the modulus.
pub fn canonical_iota_t1(r: i64, iota: (i64, i64), modulus: &ModulusPoint) -> (i64, i64) {
    modulus_symmetry(modulus)
        .iter()
        .map(|m| {
            let [a, b] = m.apply_int([iota.0, iota.1]);
            (a.rem_euclid(r), b.rem_euclid(r))
        })
        .min()
        .expect("nonempty orbit")
}

/// `iota` in `{(1,0), (0,1), (1,1)}`; `(0,1)` folds to `(1,0)` at `i`, and all
/// three fold to `(1,1)` at `omega`.
pub fn canonical_iota_t2plus(iota: (i64, i64), modulus: &ModulusPoint) -> (i64, i64) {
    let i = (iota.0.rem_euclid(2), iota.1.rem_euclid(2));
    match modulus {
        ModulusPoint::PointOmega => (1, 1),
        ModulusPoint::PointI if i == (0, 1) => (1, 0),
        _ => i,
    }
}

/// Descriptor of a normalised, unshifted lattice.
pub fn standardize(spec: &LatticeSpec) -> Result<StandardDescriptor, LatticeError> {
    if !spec.is_normalised() {
        return Err(LatticeError::NotNormalised(fmt_rat(spec.scale())));
    }
    let (reduced, spec) = reduce_modulus(spec)?;
    let inv = invariants(&spec)?;
    if !inv.is_unshifted() {
        return Err(LatticeError::Shifted(fmt_rat(&inv.s_l)));
    }
    Ok(descriptor_from(&spec, &inv, reduced))
}

/// Basis change bringing the modulus into the fundamental domain (`q <= 2`).
fn reduce_modulus(spec: &LatticeSpec) -> Result<(ModulusPoint, LatticeSpec), LatticeError> {
    if spec.q() >= 3 {
        return Ok((spec.modulus().clone(), spec.clone()));
    }
    let (reduced, a) = fd_reduce(spec.modulus());
    let m = a.inverse_unimodular().expect("unimodular");
    let moved = change_basis(spec, &m)?;
    // floats: keep the snapped point
    let moved = if moved.modulus() != &reduced {
        moved.with_all(reduced.clone(), moved.gens().clone(), moved.scale().clone())?
    } else {
        moved
    };
    Ok((reduced, moved))
}

fn descriptor_from(spec: &LatticeSpec, inv: &InvariantBundle, modulus: ModulusPoint) -> StandardDescriptor {
    let vi = rat_to_i64(&inv.vw[0]);
    let wi = rat_to_i64(&inv.vw[1]);
    let iota = match inv.type_tag {
        TypeTag::T1 { r, .. } => Some(canonical_iota_t1(r, (vi.expect("integral v"), wi.expect("integral w")), &modulus)),
        TypeTag::T2Plus { .. } => Some(canonical_iota_t2plus((vi.expect("integral v"), wi.expect("integral w")), &modulus)),
        _ => None,
    };
    StandardDescriptor { tag: inv.type_tag, lambda: spec.lambda().clone(), modulus, iota }
}

/// One automorphism in the chain from the input lattice to its standard form.
#[derive(Clone, Debug, PartialEq)]
pub enum ChainStep {
    /// `xi -> a xi`, `z -> a^2 z`.
    Rescale(Rat),
    /// Basis change; the lattice is unchanged.
    BasisChange(IntMat2),
    /// `z -> z + s t / lambda`; `u_coef` is `u pi` for `z -> z + u t`.
    Shift { s: Rat, u_coef: Rat },
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainStep::Rescale(a) => write!(f, "rescale by {}", fmt_rat(a)),
            ChainStep::BasisChange(m) => write!(f, "basis change {:?}", m.0),
            ChainStep::Shift { s, u_coef } => write!(f, "shift z_delta by {} (u = {}/pi)", fmt_rat(s), fmt_rat(u_coef)),
        }
    }
}

/// Full analysis of an input lattice.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub input: LatticeSpec,
    pub normalised: LatticeSpec,
    pub invariants: InvariantBundle,
    pub unshifted: LatticeSpec,
    pub descriptor: StandardDescriptor,
    pub chain: Vec<ChainStep>,
}

impl Analysis {
    /// Rescaling factor `1/h` applied first.
    pub fn rescale_factor(&self) -> Rat {
        Rat::one() / self.input.scale()
    }

    /// `u pi` of the unshifting automorphism `z -> z + u t`.
    pub fn shift_coef(&self) -> Rat {
        self.chain
            .iter()
            .find_map(|s| match s {
                ChainStep::Shift { u_coef, .. } => Some(u_coef.clone()),
                _ => None,
            })
            .unwrap_or_else(Rat::zero)
    }
}

/// normalise, unshift, reduce the modulus, classify.
pub fn analyze(spec: &LatticeSpec) -> Result<Analysis, LatticeError> {
    let mut chain = Vec::new();
    let normalised = normalise(spec)?;
    if !spec.is_normalised() {
        chain.push(ChainStep::Rescale(Rat::one() / spec.scale()));
    }
    let inv = invariants(&normalised)?;
    let mut unshifted = normalised.clone();
    if !inv.is_unshifted() {
        let s = -inv.s_l.clone();
        unshifted = shift(&normalised, &s)?;
        let u_coef = &s / spec.lambda().coeff();
        chain.push(ChainStep::Shift { s, u_coef });
    }
    let (reduced, moved) = reduce_modulus(&unshifted)?;
    if moved.modulus() != unshifted.modulus() || moved.gens() != unshifted.gens() {
        let (_, a) = fd_reduce(unshifted.modulus());
        chain.push(ChainStep::BasisChange(a.inverse_unimodular().expect("unimodular")));
    }
    let inv2 = invariants(&moved)?;
    debug_assert!(inv2.is_unshifted());
    let descriptor = descriptor_from(&moved, &inv2, reduced);
    Ok(Analysis { input: spec.clone(), normalised, invariants: inv, unshifted: moved, descriptor, chain })
}

/// Orbit of `iota mod r` under the symmetry group of the modulus.
pub fn iota_orbit(r: i64, iota: (i64, i64), modulus: &ModulusPoint) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = modulus_symmetry(modulus)
        .iter()
        .map(|m| {
            let [a, b] = m.apply_int([iota.0, iota.1]);
            (a.rem_euclid(r), b.rem_euclid(r))
        })
        .collect();
    v.sort();
    v.dedup();
    v
}
