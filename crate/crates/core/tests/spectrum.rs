use osc_spectra::group::rotation_matrix;
use osc_spectra::lattice::moves::shift;
use osc_spectra::lattice::*;
use osc_spectra::numeric::{rat, rat_int, ModulusPoint, PiRat, QuadRat, RealValue};
use osc_spectra::oracle::gamma4_fixed_dim;
use osc_spectra::spectrum::decomposition::gamma4_case;
use osc_spectra::spectrum::wave::accumulation_demo_exact;
use osc_spectra::spectrum::*;

fn descriptors(rmax: i64) -> Vec<StandardDescriptor> {
    let lambdas = [(2, 1), (4, 1), (1, 1), (3, 1), (1, 2), (-3, 2), (2, 3), (-4, 3), (1, 3), (-5, 3)];
    let moduli = [ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap(), ModulusPoint::PointI, ModulusPoint::PointOmega];
    let mut out = Vec::new();
    for (n, d) in lambdas {
        let l = PiRat::from_ratio(n, d);
        let q = order_of_lambda(&l).unwrap();
        for m in &moduli {
            if q >= 3 && *m != ModulusPoint::PointI {
                continue;
            }
            for r in 1..=rmax {
                out.extend(StandardDescriptor::enumerate(r, &l, m).unwrap());
            }
        }
    }
    out
}

#[test]
fn multiplicities_match_the_generator_oracle() {
    let mut cases = 0;
    for d in descriptors(4) {
        let case = gamma4_case(&d);
        for m in (-4..=4).filter(|&m| m != 0) {
            for n in 0..h1_period(&d) {
                let want = gamma4_fixed_dim(case, m, n).unwrap();
                assert_eq!(h1_multiplicity(&d, m, n), want, "{d} m={m} n={n}");
                cases += 1;
            }
        }
    }
    assert!(cases >= 800, "{cases}");
}

#[test]
fn multiplicities_sum_to_the_dimension_and_are_symmetric() {
    for d in descriptors(4) {
        let p = h1_period(&d);
        let r = d.tag.r();
        for m in (-4i64..=4).filter(|&m| m != 0) {
            let total: u64 = (0..p).map(|n| h1_multiplicity(&d, m, n)).sum();
            let expect = (r * m.abs()) as u64;
            assert_eq!(total, expect, "{d} m={m}");
            for n in -6..=6 {
                assert_eq!(h1_multiplicity(&d, m, n), h1_multiplicity(&d, -m, -n), "{d} {m} {n}");
            }
        }
    }
}

#[test]
fn multiplicity_examples() {
    let t2 = StandardDescriptor { tag: TypeTag::T2 { r: 3 }, lambda: PiRat::from_ratio(1, 1), modulus: ModulusPoint::PointI, iota: None };
    assert_eq!(h1_multiplicity(&t2, 1, 0), 2);
    assert_eq!(h1_multiplicity(&t2, 1, 1), 1);
    let t4 = StandardDescriptor { tag: TypeTag::T4 { r: 1 }, lambda: PiRat::from_ratio(1, 2), modulus: ModulusPoint::PointI, iota: None };
    assert_eq!((0..4).map(|n| h1_multiplicity(&t4, 1, n)).collect::<Vec<_>>(), vec![1, 0, 0, 0]);
    let t1 = StandardDescriptor { tag: TypeTag::T1 { r: 2, r0: 1 }, lambda: PiRat::from_ratio(2, 1), modulus: ModulusPoint::PointI, iota: Some((1, 0)) };
    assert!((0..4).all(|n| h1_multiplicity(&t1, 3, n) == 3));
    assert_eq!(h1_label(&t1, 3, 1), IrrRep::F { c: rat_int(6), d_coef: rat(1, 4) });
}

#[test]
fn lambda_sign_covariance() {
    for r in 1..=4 {
        for (pos, neg) in [((1, 2), (-3, 2)), ((2, 3), (-4, 3)), ((1, 3), (-5, 3))] {
            let lp = PiRat::from_ratio(pos.0, pos.1);
            let ln = PiRat::from_ratio(neg.0, neg.1);
            let dp = StandardDescriptor::enumerate(r, &lp, &ModulusPoint::PointI).unwrap();
            let dn = StandardDescriptor::enumerate(r, &ln, &ModulusPoint::PointI).unwrap();
            for (a, b) in dp.iter().zip(&dn) {
                assert_eq!(a.tag, b.tag);
                for m in 1..=4 {
                    for n in 0..6 {
                        assert_eq!(h1_multiplicity(a, m, n), h1_multiplicity(b, m, -n), "{a} {m} {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn a_squared_is_constant_on_rotation_orbits() {
    for (q, m) in [(2u8, ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap()), (4, ModulusPoint::PointI), (3, ModulusPoint::PointOmega), (6, ModulusPoint::PointOmega)] {
        let s = rotation_matrix(q);
        for l in -5..=5 {
            for k in -5..=5 {
                let v = s.apply_int([l, k]);
                assert_eq!(m.a_squared(l, k), m.a_squared(v[0], v[1]), "q={q} ({l},{k})");
            }
        }
    }
}

#[test]
fn gaussian_integers_at_the_square_lattice() {
    let d = StandardDescriptor { tag: TypeTag::T4 { r: 1 }, lambda: PiRat::from_ratio(1, 2), modulus: ModulusPoint::PointI, iota: None };
    let w = standard_spectrum(&d, &WindowBounds { nmax: 0, mmax: 0, amax: rat_int(10) }, Part::H0);
    let five = IrrRep::s(RealValue::Exact(QuadRat::from_int(5)), rat_int(0));
    assert_eq!(w.multiplicity(&five), 2);
    let three = IrrRep::s(RealValue::Exact(QuadRat::from_int(3)), rat_int(0));
    assert_eq!(w.multiplicity(&three), 0);
}

#[test]
fn pullbacks_invert() {
    let d = &descriptors(2)[3];
    let w = standard_spectrum(d, &WindowBounds { nmax: 3, mmax: 2, amax: rat_int(6) }, Part::All);
    for f in [Pullback::Shift { u_coef: rat(2, 7) }, Pullback::Scale { s: rat(3, 2) }] {
        let back = pullback_spectrum(&pullback_spectrum(&w, &f), &f.inverse());
        assert_eq!(back.entries, w.entries);
    }
    // F_S with S = 2I takes a^2 to 4 a^2
    let s = IrrRep::s(RealValue::Exact(QuadRat::from_int(1)), rat(1, 3));
    assert_eq!(pullback_rep(&s, &Pullback::Scale { s: rat_int(2) }), IrrRep::s(RealValue::Exact(QuadRat::from_int(4)), rat(1, 3)));
    assert_eq!(
        pullback_rep(&IrrRep::F { c: rat_int(2), d_coef: rat_int(0) }, &Pullback::Shift { u_coef: rat(1, 4) }),
        IrrRep::F { c: rat_int(2), d_coef: rat(1, 2) }
    );
}

#[test]
fn casimir_values() {
    let conv = CasimirConvention::OracleDerived;
    assert!(casimir_value(&IrrRep::C { d_coef: rat(3, 2) }, conv).to_f64() == 0.0);
    let f = casimir_value(&IrrRep::F { c: rat_int(1), d_coef: rat_int(0) }, conv);
    assert!((f.to_f64() + 2.0 * std::f64::consts::PI).abs() < 1e-12);
    let s = IrrRep::s(RealValue::Exact(QuadRat::from_int(1)), rat_int(0));
    let pi = std::f64::consts::PI;
    assert!((casimir_value(&s, conv).to_f64() + 4.0 * pi * pi).abs() < 1e-12);
    assert!((casimir_value(&s, CasimirConvention::PaperPrinted).to_f64() + 4.0 * pi).abs() < 1e-12);
}

fn straight(r: i64, kappa: i64, modulus: ModulusPoint) -> StandardDescriptor {
    StandardDescriptor { tag: TypeTag::T1 { r, r0: r }, lambda: PiRat::from_ratio(2 * kappa, 1), modulus, iota: Some((0, 0)) }
}

#[test]
fn straight_wave_sets_match_the_closed_form() {
    let xmax = 60.0;
    for r in 1..=3 {
        for kappa in 1..=3 {
            for modulus in [ModulusPoint::PointI, ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap()] {
                let d = straight(r, kappa, modulus.clone());
                let reach = (xmax * kappa as f64 / (2.0 * std::f64::consts::PI * r as f64)).ceil() as i64 + 1;
                let b = WindowBounds { nmax: reach + kappa, mmax: reach, amax: rat_int(6) };
                let w = standard_spectrum(&d, &b, Part::All);
                let got: Vec<PiPoly> = wave_spectrum(&w, CasimirConvention::PaperPrinted, Some(xmax)).into_iter().map(|x| x.0).collect();
                assert_eq!(got, straight_wave_set(r, kappa, &modulus, xmax), "r={r} kappa={kappa} {modulus}");
            }
        }
    }
}

#[test]
fn discrete_on_standard_lattices() {
    for d in descriptors(2) {
        let w = standard_spectrum(&d, &WindowBounds { nmax: 4, mmax: 3, amax: rat_int(5) }, Part::All);
        let x = wave_spectrum(&w, CasimirConvention::OracleDerived, Some(40.0));
        assert!(!x.is_empty() && x.len() < 400, "{d}");
    }
}

#[test]
fn accumulation_demo_golden_ratio() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let demo = accumulation_demo(phi, 20, 1, 2).unwrap();
    assert!(!demo.degenerate);
    assert_eq!(demo.points.len(), 20);
    let (lo, hi) = demo.interval;
    assert!(demo.values().iter().all(|v| *v >= lo && *v <= hi));
    assert!(demo.min_gap().unwrap() < 1e-3 * (hi - lo));
    let sqrt2 = accumulation_demo(2f64.sqrt(), 5, 1, 2).unwrap();
    assert_eq!(sqrt2.points.len(), 5);
    assert!(accumulation_demo(1.5, 10, 1, 2).unwrap().degenerate);
}

/// The demo values for a rational `u_tilde` occur in the spectrum of the
/// shifted straight lattice computed through the pipeline.
#[test]
fn accumulation_demo_agrees_with_the_pipeline() {
    let (r, kappa) = (1, 2);
    let u_tilde = rat(13, 8);
    let demo = accumulation_demo_exact(&u_tilde, 10, r, kappa);
    assert!(demo.degenerate && demo.points.len() == 4);
    // u_tilde = 2 pi kappa r u and the shift is s = u lambda, so s = u_tilde / r
    let base = straight(r, kappa, ModulusPoint::PointI).to_spec().unwrap();
    let shifted = shift(&base, &(&u_tilde / rat_int(r))).unwrap();
    let a = analyze(&shifted).unwrap();
    let w = lattice_spectrum(&a, &WindowBounds { nmax: 20, mmax: 10, amax: rat_int(0) }, Part::H1);
    let got: Vec<f64> = wave_spectrum(&w, CasimirConvention::PaperPrinted, None).iter().map(|x| x.0.to_f64()).collect();
    for v in demo.values() {
        assert!(got.iter().any(|g| (g - v).abs() < 1e-9), "{v} missing");
    }
}
