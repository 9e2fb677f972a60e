//! Decomposition of the right regular representation of a standard lattice
//! into irreducibles, within a finite window.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::group::rotation_matrix;
use crate::lattice::standard::{Analysis, ChainStep, StandardDescriptor};
use crate::lattice::{kappa_of_lambda, TypeTag};
use crate::numeric::{rat, rat_to_f64, ModulusPoint, Rat, RealValue};
use crate::oracle::Gamma4Case;

use super::irrep::{pullback_rep, IrrRep, Pullback};

/// Window over the infinite decomposition: `|n| <= nmax` for `C` and `F`,
/// `0 < |m| <= mmax` for `F`, `a^2 <= amax` for `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowBounds {
    pub nmax: i64,
    pub mmax: i64,
    pub amax: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Part {
    H0,
    H1,
    #[default]
    All,
}

/// Aggregated irreducibles with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumWindow {
    pub descriptor: StandardDescriptor,
    pub bounds: WindowBounds,
    pub part: Part,
    /// Applied in order: each entry pulls the previous labels back.
    pub pullbacks: Vec<Pullback>,
    pub entries: Vec<(IrrRep, u64)>,
}

impl SpectrumWindow {
    pub fn multiplicity(&self, rep: &IrrRep) -> u64 {
        self.entries.iter().find(|(r, _)| r == rep).map(|(_, m)| *m).unwrap_or(0)
    }
}

fn add(map: &mut BTreeMap<IrrRep, u64>, rep: IrrRep, mult: u64) {
    if mult > 0 {
        *map.entry(rep).or_insert(0) += mult;
    }
}

/// All `(l, k) != (0, 0)` with `a^2(l, k) <= amax`, with their `a^2`.
pub fn lattice_points(modulus: &ModulusPoint, amax: &Rat) -> Vec<((i64, i64), RealValue)> {
    let (mu, nu) = modulus.to_f64();
    let a = rat_to_f64(amax).max(0.0);
    let kmax = (a / nu).sqrt().floor() as i64 + 1;
    let bound = RealValue::Exact(crate::numeric::QuadRat::from_rat(amax.clone()));
    let mut out = Vec::new();
    for k in -kmax..=kmax {
        let centre = mu * k as f64;
        let half = (a * nu).sqrt() + 1.0;
        for l in (centre - half).floor() as i64..=(centre + half).ceil() as i64 {
            if (l, k) == (0, 0) {
                continue;
            }
            let a2 = modulus.a_squared(l, k);
            if a2 <= bound {
                out.push(((l, k), a2));
            }
        }
    }
    out
}

/// Least element of the orbit of `(l, k)` under the rotation of order `q`.
pub fn orbit_representative(q: u8, lk: (i64, i64)) -> (i64, i64) {
    let s = rotation_matrix(q);
    let mut v = [lk.0, lk.1];
    let mut best = lk;
    for _ in 0..q {
        v = s.apply_int(v);
        best = best.min((v[0], v[1]));
    }
    best
}

/// `C`- and `S`-part.
pub fn h0_decomposition(desc: &StandardDescriptor, bounds: &WindowBounds) -> Vec<(IrrRep, u64)> {
    let mut map = BTreeMap::new();
    let rho = desc.lambda.coeff().clone();
    for n in -bounds.nmax..=bounds.nmax {
        add(&mut map, IrrRep::C { d_coef: Rat::from_integer(n.into()) / &rho }, 1);
    }
    let q = desc.tag.q();
    let kappa = kappa_of_lambda(&desc.lambda).expect("admissible lambda");
    let points = lattice_points(&desc.modulus, &bounds.amax);
    if q >= 2 {
        let kp = (1 + q as i64 * kappa).abs();
        for ((l, k), a2) in points {
            if orbit_representative(q, (l, k)) != (l, k) {
                continue;
            }
            for big_k in 0..kp {
                add(&mut map, IrrRep::s(a2.clone(), rat(big_k, kp)), 1);
            }
        }
    } else {
        let r = desc.tag.r();
        let (i1, i2) = desc.iota.unwrap_or((0, 0));
        for ((l, k), a2) in points {
            for j in 0..kappa {
                let big_k = Rat::from_integer(j.into()) - rat(i1 * k - i2 * l, r);
                add(&mut map, IrrRep::s(a2.clone(), big_k / Rat::from_integer(kappa.into())), 1);
            }
        }
    }
    map.into_iter().collect()
}

/// Multiplicity of the Fock representation with index `(m, n)` in the
/// `F`-part; `n` is the Fourier index along the straight sublattice.
pub fn h1_multiplicity(desc: &StandardDescriptor, m: i64, n: i64) -> u64 {
    assert!(m != 0, "m = 0 carries no Fock representations");
    let r = desc.tag.r();
    let q = desc.tag.q() as i64;
    if q == 1 {
        let TypeTag::T1 { r0, .. } = desc.tag else { unreachable!() };
        return (r0 * m.abs()) as u64;
    }
    let sgn_l = desc.lambda.signum();
    let q0 = if q == 3 { 3 } else { 2 };
    let rem = (sgn_l * m.signum() * n).rem_euclid(q);
    let rm = r * m.abs();
    let base = |extra: i64| (rm - rem - extra).div_euclid(q) + 1;
    let v = if desc.tag.is_plus() {
        if m % q0 != 0 && r % q == 0 {
            rm / q
        } else if (m + n) % q0 == 0 {
            base(0)
        } else {
            base(2)
        }
    } else {
        let rbar = if q % 3 == 0 { sgn_l * r * m } else { 0 };
        if (n - rbar) % q0 == 0 {
            base(0)
        } else {
            base(2)
        }
    };
    v.max(0) as u64
}

/// Label of the Fock representation with index `(m, n)`.
pub fn h1_label(desc: &StandardDescriptor, m: i64, n: i64) -> IrrRep {
    let r = desc.tag.r();
    let rho = desc.lambda.coeff().clone();
    let c = Rat::from_integer((r * m).into());
    let d_coef = match desc.tag {
        TypeTag::T1 { r0, .. } => rat(r0 * n, r) / rho,
        _ => Rat::from_integer(n.into()) / (Rat::from_integer((desc.tag.q() as i64).into()) * num_traits::Signed::abs(&rho)),
    };
    IrrRep::F { c, d_coef }
}

/// Period in `n` of the multiplicities.
pub fn h1_period(desc: &StandardDescriptor) -> i64 {
    gamma4_case(desc).period()
}

pub fn h1_window(desc: &StandardDescriptor, bounds: &WindowBounds) -> Vec<(IrrRep, u64)> {
    let mut map = BTreeMap::new();
    for m in -bounds.mmax..=bounds.mmax {
        if m == 0 {
            continue;
        }
        for n in -bounds.nmax..=bounds.nmax {
            add(&mut map, h1_label(desc, m, n), h1_multiplicity(desc, m, n));
        }
    }
    map.into_iter().collect()
}

/// Parameters of the generator matrix used by the brute-force check.
pub fn gamma4_case(desc: &StandardDescriptor) -> Gamma4Case {
    let sign = desc.lambda.signum();
    let iota = desc.iota.unwrap_or((0, 0));
    match desc.tag {
        TypeTag::T1 { r, .. } => Gamma4Case::Order1 { r, iota },
        TypeTag::T2 { r } => Gamma4Case::Order2 { r, iota: (0, 0) },
        TypeTag::T2Plus { r } => Gamma4Case::Order2 { r, iota },
        TypeTag::T3 { r } => Gamma4Case::Order3 { r, plus: false, lambda_sign: sign },
        TypeTag::T3Plus { r } => Gamma4Case::Order3 { r, plus: true, lambda_sign: sign },
        TypeTag::T4 { r } => Gamma4Case::Order4 { r, plus: false, lambda_sign: sign },
        TypeTag::T4Plus { r } => Gamma4Case::Order4 { r, plus: true, lambda_sign: sign },
        TypeTag::T6 { r } => Gamma4Case::Order6 { r, lambda_sign: sign },
    }
}

/// Window of a standard lattice.
pub fn standard_spectrum(desc: &StandardDescriptor, bounds: &WindowBounds, part: Part) -> SpectrumWindow {
    let mut entries = Vec::new();
    if part != Part::H1 {
        entries.extend(h0_decomposition(desc, bounds));
    }
    if part != Part::H0 {
        entries.extend(h1_window(desc, bounds));
    }
    entries.sort();
    SpectrumWindow { descriptor: desc.clone(), bounds: bounds.clone(), part, pullbacks: vec![], entries }
}

/// Applies `F^*` to every label; multiplicities are unchanged.
pub fn pullback_spectrum(w: &SpectrumWindow, f: &Pullback) -> SpectrumWindow {
    let mut map = BTreeMap::new();
    for (rep, m) in &w.entries {
        add(&mut map, pullback_rep(rep, f), *m);
    }
    let mut out = w.clone();
    out.pullbacks.push(f.clone());
    out.entries = map.into_iter().collect();
    out
}

/// Pullbacks taking the standard form's labels to the input lattice's:
/// the input is `F^{-1}` of the unshifted lattice with `F = F_u F_S`, so the
/// shift is pulled back first, then the rescaling.
pub fn chain_pullbacks(a: &Analysis) -> Vec<Pullback> {
    let mut out = Vec::new();
    for step in &a.chain {
        if let ChainStep::Shift { u_coef, .. } = step {
            if !u_coef.is_zero() {
                out.push(Pullback::Shift { u_coef: u_coef.clone() });
            }
        }
    }
    for step in &a.chain {
        if let ChainStep::Rescale(s) = step {
            out.push(Pullback::Scale { s: s.clone() });
        }
    }
    out
}

/// Window of an arbitrary lattice through its standard form.
pub fn lattice_spectrum(a: &Analysis, bounds: &WindowBounds, part: Part) -> SpectrumWindow {
    let mut w = standard_spectrum(&a.descriptor, bounds, part);
    for f in chain_pullbacks(a) {
        w = pullback_spectrum(&w, &f);
    }
    w
}
