//! Measurement suites that compare the closed forms against the brute-force
//! oracles. Each suite reports raw numbers; judging them against thresholds
//! is left to the caller.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::moves::{random_move, rewriting_moves, same_lattice, shift, Move};
use crate::lattice::{
    abelianization_type, analyze, classify_presentation, invariants, order_of_lambda, GeneratorData, LatticeSpec,
    StandardDescriptor, TypeTag,
};
use crate::numeric::{rat, rat_int, ModulusPoint, PiRat, QuadRat, RealValue};
use crate::oracle::gamma4::{a_tilde_matrix, d_matrix, s_matrix};
use crate::oracle::{gamma4_fixed_dim, gamma4_matrix, gauss_sum, ladder_casimir, reciprocity_rhs, Gamma4Case, LadderRep};
use crate::spectrum::decomposition::gamma4_case;
use crate::spectrum::{
    accumulation_demo, h1_multiplicity, h1_period, lattice_spectrum, standard_spectrum, straight_wave_set,
    wave_spectrum, CasimirConvention, IrrRep, Part, PiPoly, WindowBounds,
};

/// Raw result of one suite.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub cases: usize,
    /// Smallest case count over the groups a suite is split into, if any.
    pub min_group_cases: Option<usize>,
    pub mismatches: Vec<String>,
    pub max_residual: f64,
    /// Suite-specific summary number.
    pub value: Option<f64>,
    pub elapsed: Duration,
}

impl Outcome {
    fn fail(&mut self, msg: String) {
        if self.mismatches.len() < 20 {
            self.mismatches.push(msg);
        } else if self.mismatches.len() == 20 {
            self.mismatches.push("...".into());
        }
    }
    fn residual(&mut self, r: f64) {
        if r.is_nan() {
            self.max_residual = f64::INFINITY;
        } else {
            self.max_residual = self.max_residual.max(r);
        }
    }
}

fn timed(f: impl FnOnce(&mut Outcome)) -> Outcome {
    let t = Instant::now();
    let mut o = Outcome::default();
    f(&mut o);
    o.elapsed = t.elapsed();
    o
}

/// Admissible `lambda = p pi/6` with `|lambda| <= max_turns * pi`.
pub fn admissible_lambdas(max_turns: i64) -> Vec<PiRat> {
    (-6 * max_turns..=6 * max_turns)
        .map(|p| PiRat::from_ratio(p, 6))
        .filter(|l| order_of_lambda(l).is_ok())
        .collect()
}

fn sample_moduli() -> Vec<ModulusPoint> {
    vec![ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap(), ModulusPoint::PointI, ModulusPoint::PointOmega]
}

/// Every standard descriptor with `r <= rmax` over the given rotation angles
/// and the sample moduli (the forced modulus only for `q >= 3`).
pub fn standard_descriptors(rmax: i64, lambdas: &[PiRat]) -> Vec<StandardDescriptor> {
    let mut out = Vec::new();
    for l in lambdas {
        let q = order_of_lambda(l).expect("admissible");
        for m in sample_moduli() {
            if q >= 3 && m != ModulusPoint::PointI {
                continue;
            }
            for r in 1..=rmax {
                out.extend(StandardDescriptor::enumerate(r, l, &m).expect("admissible"));
            }
        }
    }
    out
}

/// One rotation angle of each sign per order.
pub fn signed_lambdas() -> Vec<PiRat> {
    [(2, 1), (4, 1), (1, 1), (3, 1), (1, 2), (-3, 2), (2, 3), (-4, 3), (1, 3), (-5, 3)]
        .iter()
        .map(|&(n, d)| PiRat::from_ratio(n, d))
        .collect()
}

fn family(tag: &TypeTag) -> &'static str {
    match tag {
        TypeTag::T1 { .. } => "L1",
        TypeTag::T2 { .. } => "L2",
        TypeTag::T2Plus { .. } => "L2+",
        TypeTag::T3 { .. } => "L3",
        TypeTag::T3Plus { .. } => "L3+",
        TypeTag::T4 { .. } => "L4",
        TypeTag::T4Plus { .. } => "L4+",
        TypeTag::T6 { .. } => "L6",
    }
}

/// Closed-form multiplicities against the invariant dimension of the
/// generator matrix, `0 < |m| <= mmax`, `n` over one period.
pub fn multiplicity_vs_oracle(rmax: i64, mmax: i64) -> Outcome {
    timed(|o| {
        for d in standard_descriptors(rmax, &signed_lambdas()) {
            let case = gamma4_case(&d);
            for m in (-mmax..=mmax).filter(|&m| m != 0) {
                for n in 0..h1_period(&d) {
                    o.cases += 1;
                    match gamma4_fixed_dim(case, m, n) {
                        Ok(want) => {
                            let got = h1_multiplicity(&d, m, n);
                            if got != want {
                                o.fail(format!("{d} m={m} n={n}: formula {got}, oracle {want}"));
                            }
                        }
                        Err(e) => o.fail(format!("{d} m={m} n={n}: oracle error {e}")),
                    }
                }
            }
        }
    })
}

/// Sum of the multiplicities over one period of `n` against `r |m|`.
pub fn dimension_sums(rmax: i64, mmax: i64) -> Outcome {
    timed(|o| {
        for d in standard_descriptors(rmax, &signed_lambdas()) {
            let r = d.tag.r();
            for m in (-mmax..=mmax).filter(|&m| m != 0) {
                o.cases += 1;
                let total: u64 = (0..h1_period(&d)).map(|n| h1_multiplicity(&d, m, n)).sum();
                if total != (r * m.abs()) as u64 {
                    o.fail(format!("{d} m={m}: sum {total}, expected {}", r * m.abs()));
                }
            }
        }
    })
}

fn cis(turns_times_pi: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * turns_times_pi)
}

/// Closed-form trace tables against traces of the oracle matrices.
pub fn trace_tables(rmax: i64, mmax: i64) -> Outcome {
    let nu = 3f64.sqrt() / 2.0;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    timed(|o| {
        let check = |o: &mut Outcome, what: String, got: Complex64, want: Complex64| {
            o.cases += 1;
            let res = (got - want).norm();
            o.residual(res);
            if res > 1e-6 {
                o.fail(format!("{what}: trace {got}, table {want}"));
            }
        };
        for r in 1..=rmax {
            for m in 1..=mmax {
                let rm = r * m;
                // order two, iota = 0 for all r and the three plus shifts for even r
                let mut iotas = vec![(0, 0)];
                if r % 2 == 0 {
                    iotas.extend([(1, 0), (0, 1), (1, 1)]);
                }
                for (i1, i2) in iotas {
                    let op = gamma4_matrix(Gamma4Case::Order2 { r, iota: (i1, i2) }, m, 0).expect("m != 0");
                    let e = cis((m * i1) as f64);
                    let want = match ((i2 * m) % 2 != 0, rm % 2 != 0) {
                        (true, false) => c(0.0, 0.0),
                        (false, true) => c(1.0, 0.0),
                        (true, true) => e,
                        (false, false) => c(1.0, 0.0) + e,
                    };
                    check(o, format!("tr S_({i1},{i2}) r={r} m={m}"), op.to_dense().trace(), want);
                }
                // order four
                let s0 = s_matrix(r, m, 0);
                let want = [c(1.0, -1.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)][rm.rem_euclid(4) as usize];
                check(o, format!("tr S_0 r={r} m={m}"), s0.trace(), want);
                let want = if rm % 2 == 1 { c(1.0, 0.0) } else { c(2.0, 0.0) };
                check(o, format!("tr S_0^2 r={r} m={m}"), s0.mul(&s0).trace(), want);
                if r % 2 == 0 {
                    let s1 = s_matrix(r, m, 1);
                    let want = if (rm / 2 + m) % 2 == 0 { c(1.0, -1.0) } else { c(0.0, 0.0) };
                    check(o, format!("tr S_1 r={r} m={m}"), s1.trace(), want);
                    let want = if m % 2 == 1 { c(0.0, 0.0) } else { c(2.0, 0.0) };
                    check(o, format!("tr S_1^2 r={r} m={m}"), s1.mul(&s1).trace(), want);
                }
                // orders three and six, b = r mod 2
                let b = r.rem_euclid(2);
                let d = d_matrix(r, m, b);
                let d2 = d.mul(&d);
                check(o, format!("tr D_b r={r} m={m}"), d.trace(), c(0.5, -nu));
                let want = [c(1.5, -nu), c(-0.5, -nu), c(0.5, nu)][rm.rem_euclid(3) as usize];
                check(o, format!("tr D_b^2 r={r} m={m}"), d2.trace(), want);
                let want = if rm % 2 == 0 { c(2.0, 0.0) } else { c(-1.0, 0.0) };
                check(o, format!("tr D_b^3 r={r} m={m}"), d2.mul(&d).trace(), want);
                if r % 3 == 0 {
                    let want = if m % 3 == 0 { c(1.5, -nu) } else { c(0.0, 0.0) };
                    check(o, format!("tr A~_1 r={r} m={m}"), a_tilde_matrix(r, m, b).trace(), want);
                }
            }
        }
    })
}

/// Reciprocity for quadratic Gauss sums on `0 < |a|, |c| <= bound`, with
/// `per_pair` values of `b` drawn from `[-2|ac|, 2|ac|]`, `ac + b` even.
pub fn gauss_reciprocity(bound: i64, per_pair: usize, seed: u64) -> Outcome {
    timed(|o| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in (-bound..=bound).filter(|&a| a != 0) {
            for c in (-bound..=bound).filter(|&c| c != 0) {
                let span = 2 * (a * c).abs();
                for _ in 0..per_pair {
                    let mut b = rng.gen_range(-span..=span);
                    if (a * c + b).rem_euclid(2) != 0 {
                        b += if b < span { 1 } else { -1 };
                    }
                    o.cases += 1;
                    let lhs = gauss_sum(a, b, c).value;
                    let res = (lhs - reciprocity_rhs(a, b, c)).norm();
                    o.residual(res);
                }
            }
        }
    })
}

/// Straight lattices given at a modulus outside the fundamental domain: the
/// pipeline window against the straight-lattice decomposition enumerated
/// directly at the input modulus.
pub fn straight_lattices(rmax: i64, kmax: i64) -> Outcome {
    let moduli = [(rat(5, 2), rat(1, 3)), (rat(-7, 3), rat(2, 5)), (rat(3, 1), rat(1, 2)), (rat(1, 4), rat(3, 1))];
    timed(|o| {
        for r in 1..=rmax {
            for kappa in 1..=kmax {
                for (mu, nu) in &moduli {
                    let modulus = ModulusPoint::rational(mu.clone(), nu.clone()).unwrap();
                    let lambda = PiRat::from_ratio(2 * kappa, 1);
                    let spec = LatticeSpec::new(r, lambda.clone(), modulus.clone(), GeneratorData::zero(), rat_int(1))
                        .expect("straight lattice");
                    let bounds = WindowBounds { nmax: 4, mmax: 3, amax: rat_int(12) };
                    let got = match analyze(&spec) {
                        Ok(a) => lattice_spectrum(&a, &bounds, Part::All).entries,
                        Err(e) => {
                            o.fail(format!("r={r} kappa={kappa} {modulus}: {e}"));
                            continue;
                        }
                    };
                    let want = straight_direct(r, kappa, &modulus, &bounds);
                    o.cases += 1;
                    if got != want {
                        o.fail(format!("r={r} kappa={kappa} {modulus}: window differs"));
                    }
                }
            }
        }
    })
}

/// `C_{n/lambda}`, `S_{a(l,k)}^{K/kappa}` and `|m| r F_{rm, n/lambda}`.
fn straight_direct(r: i64, kappa: i64, modulus: &ModulusPoint, b: &WindowBounds) -> Vec<(IrrRep, u64)> {
    let mut map: BTreeMap<IrrRep, u64> = BTreeMap::new();
    let rho = rat_int(2 * kappa);
    let bound = RealValue::Exact(QuadRat::from_rat(b.amax.clone()));
    for n in -b.nmax..=b.nmax {
        *map.entry(IrrRep::C { d_coef: rat_int(n) / &rho }).or_insert(0) += 1;
        for m in (-b.mmax..=b.mmax).filter(|&m| m != 0) {
            *map.entry(IrrRep::F { c: rat_int(r * m), d_coef: rat_int(n) / &rho }).or_insert(0) += (r * m.abs()) as u64;
        }
    }
    let (mu, nu) = modulus.to_f64();
    let amax = crate::numeric::rat_to_f64(&b.amax);
    // a^2 <= A forces |k| <= sqrt(A/nu) and |l - mu k| <= sqrt(A nu)
    let kmax = (amax / nu).sqrt().ceil() as i64 + 1;
    for k in -kmax..=kmax {
        let half = (amax * nu).sqrt() + 1.0;
        let lo = (mu * k as f64 - half).floor() as i64;
        let hi = (mu * k as f64 + half).ceil() as i64;
        for l in lo..=hi {
            if (l, k) == (0, 0) {
                continue;
            }
            let a2 = modulus.a_squared(l, k);
            if a2 <= bound {
                for big_k in 0..kappa {
                    *map.entry(IrrRep::s(a2.clone(), rat(big_k, kappa))).or_insert(0) += 1;
                }
            }
        }
    }
    map.into_iter().collect()
}

/// Random move sequences on standard lattices: the analysis recovers the
/// descriptor. Also compares the parity classification of the presentation
/// with the type read off its abelianization.
pub fn round_trip(rmax: i64, max_turns: i64, moves: usize, seed: u64) -> Outcome {
    timed(|o| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for d in standard_descriptors(rmax, &admissible_lambdas(max_turns)) {
            let mut spec = d.to_spec().expect("standard lattice");
            for _ in 0..moves {
                let mv = random_move(&mut rng, spec.q(), false);
                match mv.apply(&spec) {
                    Ok(s) => spec = s,
                    Err(e) => o.fail(format!("{d}: move {mv:?} failed: {e}")),
                }
            }
            o.cases += 1;
            match analyze(&spec) {
                Ok(a) if a.descriptor == d => {}
                Ok(a) => o.fail(format!("{d}: recovered {}", a.descriptor)),
                Err(e) => o.fail(format!("{d}: {e}")),
            }
        }
        for q in [1u8, 2, 3, 4, 6] {
            for r in 1..=6 {
                for k in 0..2 * r {
                    for l in 0..2 * r {
                        o.cases += 1;
                        let t = classify_presentation(q, r, k, l);
                        if abelianization_type(q, r, k, l) != Some(t) {
                            o.fail(format!("q={q} r={r} k={k} l={l}: {t} vs abelianization"));
                        }
                    }
                }
            }
        }
    })
}

/// The shift invariant under the rewriting moves and random inner
/// conjugations, on randomly shifted standard lattices. Cases are counted
/// per type family.
pub fn shift_invariance(per_family: usize, seed: u64) -> Outcome {
    timed(|o| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
        let descs = standard_descriptors(4, &signed_lambdas());
        let families: Vec<&'static str> = {
            let mut f: Vec<_> = descs.iter().map(|d| family(&d.tag)).collect();
            f.sort();
            f.dedup();
            f
        };
        let mut round = 0;
        while families.iter().any(|f| counts.get(f).copied().unwrap_or(0) < per_family) && round < 50 {
            round += 1;
            for d in &descs {
                let fam = family(&d.tag);
                if counts.get(fam).copied().unwrap_or(0) >= per_family {
                    continue;
                }
                let s = rat(rng.gen_range(-11..=11), rng.gen_range(1..=12) * d.tag.r());
                let spec = match d.to_spec().and_then(|b| shift(&b, &s)) {
                    Ok(x) => x,
                    Err(e) => {
                        o.fail(format!("{d}: {e}"));
                        continue;
                    }
                };
                let s0 = match invariants(&spec) {
                    Ok(i) => i.s_l,
                    Err(e) => {
                        o.fail(format!("{d}: {e}"));
                        continue;
                    }
                };
                let mut moves = rewriting_moves(spec.q());
                moves.extend((0..3).map(|_| random_move(&mut rng, spec.q(), true)));
                for mv in moves {
                    *counts.entry(fam).or_insert(0) += 1;
                    o.cases += 1;
                    let moved = match mv.apply(&spec) {
                        Ok(x) => x,
                        Err(e) => {
                            o.fail(format!("{d} {mv:?}: {e}"));
                            continue;
                        }
                    };
                    if !matches!(mv, Move::BasisChange(_) | Move::Conjugate { .. }) && !same_lattice(&spec, &moved) {
                        o.fail(format!("{d} {mv:?}: lattice changed"));
                    }
                    match invariants(&moved) {
                        Ok(i) if i.s_l == s0 => {}
                        Ok(i) => o.fail(format!("{d} {mv:?}: s_L {} -> {}", s0, i.s_l)),
                        Err(e) => o.fail(format!("{d} {mv:?}: {e}")),
                    }
                }
            }
        }
        o.min_group_cases = families.iter().map(|f| counts.get(f).copied().unwrap_or(0)).min();
    })
}

/// Ladder Casimir values at the given truncation. `max_residual` is the
/// largest relative deviation (absolute for the zero value on characters);
/// straight-lattice wave sets under the `-4 pi a^2` normalisation are compared
/// exactly and reported as mismatches.
pub fn casimir(size: usize) -> Outcome {
    timed(|o| {
        for d in [-1.5, 0.0, 0.25, 2.0] {
            let v = ladder_casimir(LadderRep::Character { d }, size);
            o.cases += 1;
            o.residual(v.value.abs().max(v.residual));
        }
        for c in [-3.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
            for d in [-0.75, 0.0, 0.125, 1.0] {
                let v = ladder_casimir(LadderRep::Fock { c, d }, size);
                let sign = if c > 0.0 { 1.0 } else { -1.0 };
                let want = -2.0 * PI * c * (4.0 * PI * d + sign);
                o.cases += 1;
                o.residual((v.value - want).abs() / want.abs().max(1.0));
                o.residual(v.residual / want.abs().max(1.0));
            }
        }
        for a in [0.5, 1.0, 3f64.sqrt(), 2.0] {
            for tau in [0.0, 1.0 / 3.0, 0.5] {
                let v = ladder_casimir(LadderRep::Circle { a, tau }, size);
                let want = -4.0 * PI * PI * a * a;
                o.cases += 1;
                o.residual((v.value - want).abs() / want.abs());
                o.residual(v.residual / want.abs());
            }
        }
        let xmax = 60.0;
        for r in 1..=3 {
            for kappa in 1..=3 {
                for modulus in [ModulusPoint::PointI, ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap()] {
                    let d = StandardDescriptor {
                        tag: TypeTag::T1 { r, r0: r },
                        lambda: PiRat::from_ratio(2 * kappa, 1),
                        modulus: modulus.clone(),
                        iota: Some((0, 0)),
                    };
                    let reach = (xmax * kappa as f64 / (2.0 * PI * r as f64)).ceil() as i64 + 1;
                    let amax = rat_int((xmax / (4.0 * PI)).ceil() as i64 + 1);
                    let w = standard_spectrum(&d, &WindowBounds { nmax: reach + kappa, mmax: reach, amax }, Part::All);
                    let got: Vec<PiPoly> =
                        wave_spectrum(&w, CasimirConvention::PaperPrinted, Some(xmax)).into_iter().map(|x| x.0).collect();
                    o.cases += 1;
                    if got != straight_wave_set(r, kappa, &modulus, xmax) {
                        o.fail(format!("straight r={r} kappa={kappa} {modulus}: wave set differs"));
                    }
                }
            }
        }
    })
}

/// Number of ideals of norm `a` in the Gaussian integers, from the
/// factorisation of `a`.
pub fn gaussian_ideal_count(mut a: u64) -> u64 {
    let mut count = 1;
    let mut p = 2;
    while p * p <= a {
        if a % p == 0 {
            let mut e = 0;
            while a % p == 0 {
                a /= p;
                e += 1;
            }
            count *= match p % 4 {
                2 => 1,
                1 => e + 1,
                _ => (e + 1) % 2,
            };
        }
        p += 1;
    }
    if a > 1 {
        count *= match a % 4 {
            2 => 1,
            1 => 2,
            _ => 0,
        };
    }
    count
}

/// `S`-multiplicities of the order-four lattice at `lambda = pi/2` against
/// ideal counts; `value` is the mean multiplicity over `a <= amax`.
pub fn gaussian_density(amax: i64) -> Outcome {
    timed(|o| {
        let d = StandardDescriptor {
            tag: TypeTag::T4 { r: 1 },
            lambda: PiRat::from_ratio(1, 2),
            modulus: ModulusPoint::PointI,
            iota: None,
        };
        let w = standard_spectrum(&d, &WindowBounds { nmax: 0, mmax: 0, amax: rat_int(amax) }, Part::H0);
        let mut mult: BTreeMap<i64, u64> = BTreeMap::new();
        for (rep, m) in &w.entries {
            if let IrrRep::S { a2, tau } = rep {
                let a = a2.as_exact().and_then(|x| x.as_rat().cloned()).filter(|x| x.is_integer());
                match a {
                    Some(a) if tau.is_zero() => *mult.entry(crate::numeric::rat_to_i64(&a).unwrap()).or_insert(0) += m,
                    _ => o.fail(format!("unexpected {rep}")),
                }
            }
        }
        let mut total = 0;
        for a in 1..=amax {
            o.cases += 1;
            let got = mult.get(&a).copied().unwrap_or(0);
            let want = gaussian_ideal_count(a as u64);
            if got != want {
                o.fail(format!("a={a}: multiplicity {got}, ideals {want}"));
            }
            total += got;
        }
        o.value = Some(total as f64 / amax as f64);
    })
}

/// Accumulation demo at `u`; `cases` counts distinct values inside the
/// interval, `value` is the smallest sorted gap over the interval length.
pub fn accumulation(u: f64, count: usize) -> Outcome {
    timed(|o| match accumulation_demo(u, count, 1, 2) {
        None => o.fail("not a finite float".into()),
        Some(demo) => {
            let (lo, hi) = demo.interval;
            let mut v: Vec<f64> = demo.values().into_iter().filter(|x| *x >= lo && *x <= hi).collect();
            v.sort_by(f64::total_cmp);
            v.dedup();
            o.cases = v.len();
            if demo.degenerate {
                o.fail("continued fraction terminated early".into());
            }
            o.value = demo.min_gap().map(|g| g / (hi - lo));
        }
    })
}

/// Suite selector used by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Gauss,
    Multiplicity,
    Casimir,
    Classification,
    All,
}

/// Thresholds applied by [`run_suite`].
pub const RESIDUAL_LIMIT: f64 = 1e-9;
pub const CASIMIR_LIMIT: f64 = 1e-10;

/// Runs a suite with default parameters and judges each part.
pub fn run_suite(s: Suite) -> Vec<(&'static str, Outcome, bool)> {
    let mut out = Vec::new();
    let exact = |o: &Outcome| o.mismatches.is_empty() && o.cases > 0;
    if matches!(s, Suite::Multiplicity | Suite::All) {
        let o = multiplicity_vs_oracle(4, 4);
        let ok = exact(&o);
        out.push(("multiplicity-vs-oracle", o, ok));
        let o = dimension_sums(4, 4);
        let ok = exact(&o);
        out.push(("dimension-sums", o, ok));
        let o = trace_tables(6, 6);
        let ok = exact(&o) && o.max_residual <= RESIDUAL_LIMIT;
        out.push(("trace-tables", o, ok));
        let o = straight_lattices(3, 3);
        let ok = exact(&o);
        out.push(("straight-lattices", o, ok));
        let o = gaussian_density(10_000);
        let ok = exact(&o);
        out.push(("gaussian-ideals", o, ok));
    }
    if matches!(s, Suite::Gauss | Suite::All) {
        let o = gauss_reciprocity(40, 2, 1);
        let ok = o.cases > 0 && o.max_residual <= RESIDUAL_LIMIT;
        out.push(("gauss-reciprocity", o, ok));
    }
    if matches!(s, Suite::Casimir | Suite::All) {
        let o = casimir(32);
        let ok = exact(&o) && o.max_residual <= CASIMIR_LIMIT;
        out.push(("casimir", o, ok));
    }
    if matches!(s, Suite::Classification | Suite::All) {
        let o = round_trip(4, 4, 100, 3);
        let ok = exact(&o);
        out.push(("round-trip", o, ok));
        let o = shift_invariance(500, 5);
        let ok = exact(&o);
        out.push(("shift-invariance", o, ok));
    }
    out
}
