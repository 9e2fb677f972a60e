use num_traits::Zero;
use osc_spectra::group::IntMat2;
use osc_spectra::lattice::moves::{random_move, rewriting_moves, same_lattice, shift, Move};
use osc_spectra::lattice::standard::{canonical_iota_t1, fd_reduce};
use osc_spectra::lattice::*;
use osc_spectra::numeric::{rat, rat_int, rat_mod, ModulusPoint, PiRat, QuadRat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lambdas() -> Vec<PiRat> {
    [(2, 1), (4, 1), (1, 1), (3, 1), (-1, 1), (1, 2), (-3, 2), (5, 2), (2, 3), (-4, 3), (1, 3), (-5, 3), (7, 3)]
        .iter()
        .map(|&(n, d)| PiRat::from_ratio(n, d))
        .filter(|l| order_of_lambda(l).is_ok())
        .collect()
}

fn moduli() -> Vec<ModulusPoint> {
    vec![
        ModulusPoint::rational(rat(0, 1), rat(2, 1)).unwrap(),
        ModulusPoint::rational(rat(1, 3), rat(3, 2)).unwrap(),
        ModulusPoint::PointI,
        ModulusPoint::PointOmega,
    ]
}

fn all_descriptors(rmax: i64) -> Vec<StandardDescriptor> {
    let mut out = Vec::new();
    for l in lambdas() {
        for m in moduli() {
            let q = order_of_lambda(&l).unwrap();
            if q >= 3 && m != ModulusPoint::PointI {
                continue; // modulus forced; enumerate once
            }
            for r in 1..=rmax {
                out.extend(StandardDescriptor::enumerate(r, &l, &m).unwrap());
            }
        }
    }
    out
}

#[test]
fn standard_lattices_are_unshifted_and_typed() {
    for d in all_descriptors(6) {
        let spec = d.to_spec().unwrap();
        let inv = invariants(&spec).unwrap();
        assert!(inv.s_l.is_zero(), "{d}: s_L = {}", inv.s_l);
        assert_eq!(inv.type_tag, d.tag, "{d}");
        let (k, l) = spec.kl();
        assert_eq!(abelianization_type(spec.q(), spec.r(), k, l), Some(d.tag));
        assert_eq!(standardize(&spec).unwrap(), d);
    }
}

#[test]
fn rewriting_moves_keep_the_lattice_and_the_shift_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in all_descriptors(4) {
        let base = d.to_spec().unwrap();
        let s = rat(1, 5 * d.tag.r());
        let spec = shift(&base, &s).unwrap();
        let inv0 = invariants(&spec).unwrap();
        for mv in rewriting_moves(spec.q()) {
            let moved = mv.apply(&spec).unwrap();
            if !matches!(mv, Move::BasisChange(_)) {
                assert!(same_lattice(&spec, &moved), "{d} {mv:?}");
            }
            let inv = invariants(&moved).unwrap();
            assert_eq!(inv.s_l, inv0.s_l, "{d} {mv:?}");
        }
        for _ in 0..5 {
            let mv = random_move(&mut rng, spec.q(), true);
            let inv = invariants(&mv.apply(&spec).unwrap()).unwrap();
            assert_eq!(inv.s_l, inv0.s_l, "{d} {mv:?}");
        }
    }
}

#[test]
fn shift_rule() {
    for d in all_descriptors(3) {
        let spec = d.to_spec().unwrap();
        for k in 1..4 {
            let eps = rat(k, 7 * d.tag.r());
            let inv = invariants(&shift(&spec, &eps).unwrap()).unwrap();
            assert_eq!(inv.s_l, rat_mod(&eps, &inv.s_modulus()));
        }
    }
}

#[test]
fn round_trip_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in all_descriptors(3) {
        let mut spec = d.to_spec().unwrap();
        for _ in 0..30 {
            spec = random_move(&mut rng, spec.q(), false).apply(&spec).unwrap();
        }
        let a = analyze(&spec).unwrap();
        assert_eq!(a.descriptor, d, "{d} from\n{spec}");
    }
}

#[test]
fn invariant_examples() {
    // q = 1, r = 4, (v, w) = (2, 0)
    let spec = LatticeSpec::parse("r = 4\nlambda = 2 pi\nmodulus = rat(0, 2)\nx_delta = 1/2").unwrap();
    let inv = invariants(&spec).unwrap();
    assert_eq!(inv.s0, 2);
    assert_eq!(inv.type_tag, TypeTag::T1 { r: 4, r0: 2 });
    // z0 for the plus type of order four
    let spec = LatticeSpec::parse("r = 3\nlambda = pi\nmodulus = rat(0, 2)").unwrap();
    assert_eq!(invariants(&spec).unwrap().z0, rat_int(0));
    let d = StandardDescriptor { tag: TypeTag::T4Plus { r: 2 }, lambda: PiRat::from_ratio(1, 2), modulus: ModulusPoint::PointI, iota: None };
    assert_eq!(d.to_string(), "L4+(r=2, lambda=pi/2)");
    assert_eq!(invariants(&d.to_spec().unwrap()).unwrap().z0, rat(-1, 16));
}

#[test]
fn standardize_examples() {
    let spec = LatticeSpec::parse("r = 2\nlambda = 2 pi\nmodulus = rat(0, 2)\nx_delta = 1/2").unwrap();
    let d = standardize(&spec).unwrap();
    assert_eq!(d.iota, Some((1, 0)));
    let spec = LatticeSpec::parse("r = 2\nlambda = pi\nmodulus = rat(1/3, 3/2)\nx_delta = 1/2\ny_delta = 1/2").unwrap();
    let d = standardize(&spec).unwrap();
    assert_eq!(d.tag, TypeTag::T2Plus { r: 2 });
    assert_eq!(d.iota, Some((1, 1)));
    let shifted = LatticeSpec::parse("r = 1\nlambda = 1/2 pi\nz_delta = 1/10").unwrap();
    assert!(matches!(standardize(&shifted), Err(LatticeError::Shifted(_))));
    assert_eq!(canonical_iota_t1(2, (-1, 0), &ModulusPoint::rational(rat(0, 1), rat(2, 1)).unwrap()), (1, 0));
}

fn in_domain(m: &ModulusPoint) -> bool {
    let (mu, nu) = m.exact().unwrap();
    let half = QuadRat::from_rat(rat(1, 2));
    let abs2 = &(&mu * &mu) + &(&nu * &nu);
    mu <= half && mu > -half.clone() && abs2 >= QuadRat::one() && (abs2 > QuadRat::one() || mu.signum() >= 0)
}

#[test]
fn fd_reduce_examples_and_sweep() {
    let m = ModulusPoint::rational(rat(0, 1), rat(2, 1)).unwrap();
    assert_eq!(fd_reduce(&m), (m.clone(), IntMat2::IDENTITY));
    let (p, a) = fd_reduce(&ModulusPoint::rational(rat(5, 1), rat(1, 1)).unwrap());
    assert_eq!(p, ModulusPoint::PointI);
    assert_eq!(a, IntMat2([[1, -5], [0, 1]]));
    let (p, _) = fd_reduce(&ModulusPoint::float(0.5 - 1e-15, 2.0).unwrap());
    assert_eq!(p, ModulusPoint::Float { mu: 0.5, nu: 2.0 });
    let (p, _) = fd_reduce(&ModulusPoint::float(-0.5 + 1e-15, 2.0).unwrap());
    assert_eq!(p, ModulusPoint::Float { mu: 0.5, nu: 2.0 });
    for num in -12..=12 {
        for den in 1..=4 {
            for nu in [rat(1, 7), rat(1, 2), rat(3, 4), rat(1, 1), rat(5, 3)] {
                let m = ModulusPoint::rational(rat(num, den), nu).unwrap();
                let (p, a) = fd_reduce(&m);
                assert!(in_domain(&p), "{m} -> {p}");
                assert_eq!(a.det(), 1);
                assert_eq!(m.mobius(a.0), p);
            }
        }
    }
    // unit circle: the mu < 0 side folds over
    let (p, a) = fd_reduce(&ModulusPoint::float(-0.28, 0.96).unwrap());
    assert_eq!(a, IntMat2([[0, -1], [1, 0]]));
    let (mu, nu) = p.to_f64();
    assert!((mu - 0.28).abs() < 1e-12 && (nu - 0.96).abs() < 1e-12);
}

#[test]
fn basis_change_round_trip() {
    let spec = LatticeSpec::parse("r = 3\nlambda = pi\nmodulus = rat(1/4, 2)\nx_delta = 1/3\ny_delta = 2/3\nz_delta = 1/9").unwrap();
    let m = IntMat2([[2, 1], [1, 1]]);
    let there = Move::BasisChange(m).apply(&spec).unwrap();
    let back = Move::BasisChange(m.inverse_unimodular().unwrap()).apply(&there).unwrap();
    assert!(same_lattice(&spec, &back));
    let (i0, i1) = (invariants(&spec).unwrap(), invariants(&there).unwrap());
    assert_eq!((i0.type_tag, i0.s_l), (i1.type_tag, i1.s_l));
    assert!(matches!(
        Move::BasisChange(IntMat2([[1, 1], [0, 1]])).apply(&LatticeSpec::parse("r = 1\nlambda = 1/2 pi").unwrap()),
        Err(LatticeError::BadBasisChange(_))
    ));
}
