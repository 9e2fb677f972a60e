//! Changes of generators (same lattice) and automorphisms of the group
//! (image lattice), all carried out exactly in basis coordinates.

use num_traits::{One, Signed};

use super::spec::{LatticeError, LatticeSpec};
use crate::group::{frame_power, rotation_matrix, FrameElement, IntMat2};
use crate::numeric::{rat_int, Rat};

/// One random-walk step used by the round-trip checks.
#[derive(Clone, Debug, PartialEq)]
pub enum Move {
    /// `delta -> alpha^a beta^b gamma^c delta`
    DeltaLeft { a: i64, b: i64, c: i64 },
    /// `delta -> delta alpha^a beta^b gamma^c`
    DeltaRight { a: i64, b: i64, c: i64 },
    /// `alpha -> alpha gamma^j`
    AlphaGamma(i64),
    /// `beta -> beta gamma^j`
    BetaGamma(i64),
    /// New basis `alpha' = alpha^{m11} beta^{m21}`, `beta' = alpha^{m12} beta^{m22}`.
    BasisChange(IntMat2),
    /// Conjugation by the translation `(p0 alpha_bar + p1 beta_bar, z, 0)`.
    Conjugate { p: [Rat; 2], z: Rat },
    /// `z -> z + s t / lambda`: `z_delta` grows by `s`.
    Shift(Rat),
    /// Dilation by a positive rational factor.
    Rescale(Rat),
}

impl Move {
    pub fn apply(&self, spec: &LatticeSpec) -> Result<LatticeSpec, LatticeError> {
        match self {
            Move::DeltaLeft { a, b, c } => delta_left(spec, *a, *b, *c),
            Move::DeltaRight { a, b, c } => delta_right(spec, *a, *b, *c),
            Move::AlphaGamma(j) => alpha_gamma(spec, *j),
            Move::BetaGamma(j) => beta_gamma(spec, *j),
            Move::BasisChange(m) => change_basis(spec, m),
            Move::Conjugate { p, z } => conjugate(spec, p, z),
            Move::Shift(s) => shift(spec, s),
            Move::Rescale(a) => rescale(spec, a),
        }
    }

    /// Whether the move keeps the lattice itself (not just its isomorphism class).
    pub fn preserves_lattice(&self) -> bool {
        !matches!(self, Move::Conjugate { .. } | Move::Shift(_) | Move::Rescale(_))
    }
}

fn heis_word(spec: &LatticeSpec, a: i64, b: i64, c: i64) -> FrameElement {
    spec.word(a, b).mul(&frame_power(&spec.gamma(), c))
}

fn rebuild(spec: &LatticeSpec, alpha: &FrameElement, beta: &FrameElement, delta: &FrameElement) -> Result<LatticeSpec, LatticeError> {
    spec.with_gens(LatticeSpec::gens_from_frames(alpha, beta, delta))
}

pub fn delta_left(spec: &LatticeSpec, a: i64, b: i64, c: i64) -> Result<LatticeSpec, LatticeError> {
    let d = heis_word(spec, a, b, c).mul(&spec.delta());
    rebuild(spec, &spec.alpha(), &spec.beta(), &d)
}

pub fn delta_right(spec: &LatticeSpec, a: i64, b: i64, c: i64) -> Result<LatticeSpec, LatticeError> {
    let d = spec.delta().mul(&heis_word(spec, a, b, c));
    rebuild(spec, &spec.alpha(), &spec.beta(), &d)
}

pub fn alpha_gamma(spec: &LatticeSpec, j: i64) -> Result<LatticeSpec, LatticeError> {
    let a = spec.alpha().mul(&frame_power(&spec.gamma(), j));
    rebuild(spec, &a, &spec.beta(), &spec.delta())
}

pub fn beta_gamma(spec: &LatticeSpec, j: i64) -> Result<LatticeSpec, LatticeError> {
    let b = spec.beta().mul(&frame_power(&spec.gamma(), j));
    rebuild(spec, &spec.alpha(), &b, &spec.delta())
}

/// Basis change by `M` in `SL(2, Z)`. The modulus moves to `M^{-1} . tau`; for
/// `q >= 3` only matrices commuting with the rotation are allowed.
pub fn change_basis(spec: &LatticeSpec, m: &IntMat2) -> Result<LatticeSpec, LatticeError> {
    let bad = || LatticeError::BadBasisChange(m.0);
    if m.det() != 1 {
        return Err(bad());
    }
    let s = rotation_matrix(spec.q());
    if spec.q() >= 3 && s.mul(m) != m.mul(&s) {
        return Err(bad());
    }
    let inv = m.inverse_unimodular().ok_or_else(bad)?;
    let [[m11, m12], [m21, m22]] = m.0;
    let a = spec.word(m11, m21);
    let b = spec.word(m12, m22);
    let d = spec.delta();
    let g = spec.gens();
    let p = inv.apply(&[g.x_delta.clone(), g.y_delta.clone()]);
    let gens = super::spec::GeneratorData {
        z_alpha: a.z,
        z_beta: b.z,
        x_delta: p[0].clone(),
        y_delta: p[1].clone(),
        z_delta: d.z,
    };
    let modulus = if spec.q() >= 3 { spec.modulus().clone() } else { spec.modulus().mobius(inv.0) };
    spec.with_all(modulus, gens, spec.scale().clone())
}

/// Image under conjugation by a translation.
pub fn conjugate(spec: &LatticeSpec, p: &[Rat; 2], z: &Rat) -> Result<LatticeSpec, LatticeError> {
    let g = FrameElement::new(p.clone(), z.clone(), 0, spec.q(), spec.area());
    rebuild(spec, &spec.alpha().conj_by(&g), &spec.beta().conj_by(&g), &spec.delta().conj_by(&g))
}

pub fn shift(spec: &LatticeSpec, s: &Rat) -> Result<LatticeSpec, LatticeError> {
    let mut gens = spec.gens().clone();
    gens.z_delta += s;
    spec.with_gens(gens)
}

/// Image under `xi -> a xi`, `z -> a^2 z`.
pub fn rescale(spec: &LatticeSpec, a: &Rat) -> Result<LatticeSpec, LatticeError> {
    if !a.is_positive() {
        return Err(LatticeError::NotALattice("rescaling factor must be positive".into()));
    }
    let a2 = a * a;
    let g = spec.gens();
    let gens = super::spec::GeneratorData {
        z_alpha: &g.z_alpha * &a2,
        z_beta: &g.z_beta * &a2,
        x_delta: g.x_delta.clone(),
        y_delta: g.y_delta.clone(),
        z_delta: &g.z_delta * &a2,
    };
    spec.with_all(spec.modulus().clone(), gens, spec.scale() * a)
}

/// Rescales to covolume one.
pub fn normalise(spec: &LatticeSpec) -> Result<LatticeSpec, LatticeError> {
    if spec.scale().is_one() {
        return Ok(spec.clone());
    }
    rescale(spec, &(Rat::one() / spec.scale()))
}

/// Stabilizer of the adapted basis under the rotation, as basis changes.
pub fn rotation_stabilizer(q: u8) -> Vec<IntMat2> {
    let gen = match q {
        4 => rotation_matrix(4),
        3 | 6 => rotation_matrix(6),
        _ => rotation_matrix(2),
    };
    let order = if gen == rotation_matrix(2) { 2 } else if q == 4 { 4 } else { 6 };
    (0..order).map(|k| gen.pow(k)).collect()
}

/// `true` when two lattices generate the same subgroup, checked on
/// generators: each generator of one is a word in the other.
pub fn same_lattice(a: &LatticeSpec, b: &LatticeSpec) -> bool {
    if a.q() != b.q() || a.r() != b.r() || a.lambda() != b.lambda() || a.area() != b.area() || a.modulus() != b.modulus() {
        return false;
    }
    contains_all(a, b) && contains_all(b, a)
}

/// Membership of `x` in the lattice: peel off `delta^turns`, then the
/// translation part must be integral and the centre a multiple of `gamma`.
pub fn contains(spec: &LatticeSpec, x: &FrameElement) -> bool {
    let rest = frame_power(&spec.delta(), -x.turns).mul(x);
    if rest.turns != 0 {
        return false;
    }
    let (Some(a), Some(b)) = (crate::numeric::rat_to_i64(&rest.p[0]), crate::numeric::rat_to_i64(&rest.p[1])) else {
        return false;
    };
    let w = spec.word(a, b);
    let e = (&rest.z - &w.z) * rat_int(spec.r()) / spec.area();
    e.is_integer()
}

fn contains_all(host: &LatticeSpec, other: &LatticeSpec) -> bool {
    [other.alpha(), other.beta(), other.gamma(), other.delta()].iter().all(|g| contains(host, g))
}

/// The generator rewrites used to show that the shift invariant does not
/// depend on the chosen generators. Basis rewrites that do not commute with
/// the rotation are dropped for `q >= 3`.
pub fn rewriting_moves(q: u8) -> Vec<Move> {
    let mut v = vec![
        Move::DeltaLeft { a: 1, b: 0, c: 0 },
        Move::DeltaLeft { a: 0, b: 1, c: 0 },
        Move::DeltaLeft { a: 0, b: 0, c: 1 },
        Move::AlphaGamma(1),
        Move::BetaGamma(1),
    ];
    for m in [IntMat2([[1, 1], [0, 1]]), IntMat2([[0, -1], [1, 0]])] {
        if q <= 2 || rotation_matrix(q).mul(&m) == m.mul(&rotation_matrix(q)) {
            v.push(Move::BasisChange(m));
        }
    }
    v
}

fn small_rat<R: rand::Rng>(rng: &mut R, num: i64, max_den: i64) -> Rat {
    crate::numeric::rat(rng.gen_range(-num..=num), rng.gen_range(1..=max_den))
}

/// A random move. With `inner_only` the result is conjugate to the input by
/// an inner automorphism; otherwise shifts and rescalings are mixed in.
pub fn random_move<R: rand::Rng>(rng: &mut R, q: u8, inner_only: bool) -> Move {
    let choices = if inner_only { 7 } else { 9 };
    match rng.gen_range(0..choices) {
        0 => Move::DeltaLeft { a: rng.gen_range(-2..=2), b: rng.gen_range(-2..=2), c: rng.gen_range(-3..=3) },
        1 => Move::DeltaRight { a: rng.gen_range(-2..=2), b: rng.gen_range(-2..=2), c: rng.gen_range(-3..=3) },
        2 => Move::AlphaGamma(rng.gen_range(-3..=3)),
        3 => Move::BetaGamma(rng.gen_range(-3..=3)),
        4 | 5 => {
            let stab = rotation_stabilizer(q);
            let m = if q >= 3 {
                stab[rng.gen_range(0..stab.len())]
            } else {
                let t = IntMat2([[1, rng.gen_range(-2..=2)], [0, 1]]);
                let s = IntMat2([[0, -1], [1, 0]]);
                if rng.gen_bool(0.5) { t.mul(&s) } else { s.mul(&t) }
            };
            Move::BasisChange(m)
        }
        6 => Move::Conjugate { p: [small_rat(rng, 5, 6), small_rat(rng, 5, 6)], z: small_rat(rng, 5, 7) },
        7 => Move::Shift(small_rat(rng, 3, 12)),
        _ => Move::Rescale(crate::numeric::rat(rng.gen_range(1..=4), rng.gen_range(1..=4))),
    }
}
