//! Spectrum of the wave operator on a window, the closed form for straight
//! lattices, and the accumulation mechanism for irrationally shifted ones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::numeric::{rat_from_f64, rat_int, rat_to_f64, ModulusPoint, QuadRat, Rat, RealValue};

use super::decomposition::{lattice_points, SpectrumWindow};
use super::irrep::{wave_value, CasimirConvention, PiPoly};

/// Distinct wave eigenvalues of a window with their total multiplicities,
/// sorted by value. `xmax` drops values with `|x| > xmax`.
pub fn wave_spectrum(w: &SpectrumWindow, conv: CasimirConvention, xmax: Option<f64>) -> Vec<(PiPoly, u64)> {
    let mut map: BTreeMap<PiPoly, u64> = BTreeMap::new();
    for (rep, m) in &w.entries {
        let x = wave_value(rep, conv);
        if xmax.map_or(true, |b| x.to_f64().abs() <= b) {
            *map.entry(x).or_insert(0) += m;
        }
    }
    map.into_iter().collect()
}

/// The closed-form spectrum of a straight lattice `L_r(2 pi kappa, mu, nu, 0, 0)`
/// under the `-4 pi a^2` normalisation: `c pi (r/kappa) Z` with `c = 4` for even
/// and `c = 2` for odd `kappa`, together with `{4 pi a^2}`. Only `|x| <= xmax`.
pub fn straight_wave_set(r: i64, kappa: i64, modulus: &ModulusPoint, xmax: f64) -> Vec<PiPoly> {
    assert!(r > 0 && kappa > 0);
    let step = Rat::new(BigInt::from(if kappa % 2 == 0 { 4 * r } else { 2 * r }), BigInt::from(kappa));
    let pi = std::f64::consts::PI;
    let jmax = (xmax / (pi * rat_to_f64(&step))).floor() as i64 + 1;
    let zero = RealValue::Exact(QuadRat::zero());
    let mut out = Vec::new();
    for j in -jmax..=jmax {
        let c1 = RealValue::Exact(QuadRat::from_rat(&step * rat_int(j)));
        out.push(PiPoly { c1, c2: zero.clone() });
    }
    let amax = rat_from_f64(xmax / (4.0 * pi)).unwrap_or_else(|| rat_int(0)) + rat_int(1);
    for (_, a2) in lattice_points(modulus, &amax) {
        out.push(PiPoly { c1: a2.scale(&rat_int(4)), c2: zero.clone() });
    }
    out.retain(|x| x.to_f64().abs() <= xmax);
    out.sort();
    out.dedup();
    out
}

/// Result of [`accumulation_demo`].
#[derive(Clone, Debug, PartialEq)]
pub struct AccumulationDemo {
    /// `(n', m)` with `n'/m` a convergent, and the value `4 pi (r/kappa)(n' - u m) m`.
    pub points: Vec<((i64, i64), f64)>,
    /// `[-4 pi r/kappa, 4 pi r/kappa]`
    pub interval: (f64, f64),
    /// The continued fraction terminated before `count` nonzero values were found.
    pub degenerate: bool,
}

impl AccumulationDemo {
    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.1).collect()
    }

    /// Smallest gap between consecutive sorted values.
    pub fn min_gap(&self) -> Option<f64> {
        let mut v = self.values();
        v.sort_by(f64::total_cmp);
        v.windows(2).map(|w| w[1] - w[0]).min_by(f64::total_cmp)
    }
}

/// Wave eigenvalues of `F_u(L)` for a straight lattice `L` with even `kappa`,
/// `u_tilde = 2 pi kappa r u`, taken at the continued-fraction convergents of
/// `u_tilde`. The float is read as the exact binary rational it stores, so the
/// values carry no cancellation error; the expansion then terminates after
/// finitely many steps, which for genuine irrationals is far beyond `count`.
pub fn accumulation_demo(u_tilde: f64, count: usize, r: i64, kappa: i64) -> Option<AccumulationDemo> {
    let u = rat_from_f64(u_tilde)?;
    Some(accumulation_demo_exact(&u, count, r, kappa))
}

pub fn accumulation_demo_exact(u: &Rat, count: usize, r: i64, kappa: i64) -> AccumulationDemo {
    assert!(r > 0 && kappa > 0 && kappa % 2 == 0, "needs an even kappa");
    let scale = 4.0 * std::f64::consts::PI * r as f64 / kappa as f64;
    let mut points = Vec::new();
    // convergents h/k via the standard recurrence
    let (mut h0, mut h1) = (BigInt::from(0), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::from(0));
    let mut x = u.clone();
    let mut terminated = false;
    while points.len() < count {
        let a = x.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = &x - Rat::from_integer(a);
        let v = (Rat::from_integer(h1.clone()) - u * Rat::from_integer(k1.clone())) * Rat::from_integer(k1.clone());
        if !v.is_zero() && k1.is_positive() {
            if let (Some(n), Some(m)) = (h1.to_i64(), k1.to_i64()) {
                points.push(((n, m), scale * rat_to_f64(&v)));
            } else {
                terminated = true;
                break;
            }
        }
        if frac.is_zero() {
            terminated = true;
            break;
        }
        x = frac.recip();
    }
    let degenerate = terminated && points.len() < count;
    AccumulationDemo { points, interval: (-scale, scale), degenerate }
}
