//! Irreducible unitary representations, their Casimir values and pullbacks
//! under the automorphisms used to normalise and unshift a lattice.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::numeric::{fmt_rat, fmt_rat_pq, rat_int, rat_mod, QuadRat, Rat, RealValue};

/// `C_d`, `S_a^tau` or `F_{c,d}`. The parameter `d` is stored through
/// `d_coef = pi d`, which stays rational for every lattice handled here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IrrRep {
    C { d_coef: Rat },
    S { a2: RealValue, tau: Rat },
    F { c: Rat, d_coef: Rat },
}

impl IrrRep {
    pub fn s(a2: RealValue, tau: Rat) -> IrrRep {
        IrrRep::S { a2, tau: rat_mod(&tau, &rat_int(1)) }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            IrrRep::C { .. } => "C",
            IrrRep::S { .. } => "S",
            IrrRep::F { .. } => "F",
        }
    }
}

fn fmt_d(d_coef: &Rat) -> String {
    if d_coef.is_zero() {
        "0".into()
    } else {
        format!("{}/pi", fmt_rat_paren(d_coef))
    }
}

fn fmt_rat_paren(x: &Rat) -> String {
    if x.is_integer() {
        fmt_rat(x)
    } else {
        format!("({})", fmt_rat(x))
    }
}

impl fmt::Display for IrrRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrRep::C { d_coef } => write!(f, "C(d={})", fmt_d(d_coef)),
            IrrRep::S { a2, tau } => write!(f, "S(a2={a2}, tau={})", fmt_rat_pq(tau)),
            IrrRep::F { c, d_coef } => write!(f, "F(c={}, d={})", fmt_rat(c), fmt_d(d_coef)),
        }
    }
}

/// Normalisation of the Casimir value on `S_a^tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CasimirConvention {
    /// `-4 pi^2 a^2`, as computed from the ladder operators.
    #[default]
    OracleDerived,
    /// `-4 pi a^2`.
    PaperPrinted,
}

impl CasimirConvention {
    pub fn name(&self) -> &'static str {
        match self {
            CasimirConvention::OracleDerived => "oracle",
            CasimirConvention::PaperPrinted => "paper",
        }
    }
}

/// `c1 pi + c2 pi^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPoly {
    pub c1: RealValue,
    pub c2: RealValue,
}

fn exact(x: Rat) -> RealValue {
    RealValue::Exact(QuadRat::from_rat(x))
}

fn neg(x: &RealValue) -> RealValue {
    x.scale(&rat_int(-1))
}

impl PiPoly {
    pub fn zero() -> PiPoly {
        PiPoly { c1: exact(Rat::zero()), c2: exact(Rat::zero()) }
    }
    pub fn to_f64(&self) -> f64 {
        let pi = std::f64::consts::PI;
        self.c1.to_f64() * pi + self.c2.to_f64() * pi * pi
    }
    pub fn neg(&self) -> PiPoly {
        PiPoly { c1: neg(&self.c1), c2: neg(&self.c2) }
    }
    pub fn is_exact(&self) -> bool {
        self.c1.is_exact() && self.c2.is_exact()
    }
}

impl Ord for PiPoly {
    fn cmp(&self, o: &Self) -> Ordering {
        if self == o {
            return Ordering::Equal;
        }
        self.to_f64()
            .total_cmp(&o.to_f64())
            .then_with(|| self.c2.cmp(&o.c2))
            .then_with(|| self.c1.cmp(&o.c1))
    }
}

impl PartialOrd for PiPoly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.c1.is_zero() {
            parts.push(format!("({})*pi", self.c1));
        }
        if !self.c2.is_zero() {
            parts.push(format!("({})*pi^2", self.c2));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Casimir operator on an irreducible representation.
pub fn casimir_value(rep: &IrrRep, conv: CasimirConvention) -> PiPoly {
    match rep {
        IrrRep::C { .. } => PiPoly::zero(),
        IrrRep::S { a2, .. } => {
            let v = a2.scale(&rat_int(-4));
            match conv {
                CasimirConvention::OracleDerived => PiPoly { c1: exact(Rat::zero()), c2: v },
                CasimirConvention::PaperPrinted => PiPoly { c1: v, c2: exact(Rat::zero()) },
            }
        }
        IrrRep::F { c, d_coef } => {
            let sign = if c.is_positive() { 1 } else { -1 };
            let c1 = rat_int(-2) * c * (rat_int(4) * d_coef + rat_int(sign));
            PiPoly { c1: exact(c1), c2: exact(Rat::zero()) }
        }
    }
}

/// Wave operator eigenvalue: minus the Casimir value.
pub fn wave_value(rep: &IrrRep, conv: CasimirConvention) -> PiPoly {
    casimir_value(rep, conv).neg()
}

/// Automorphisms whose pullbacks act on the representation labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pullback {
    /// `z -> z + u t`, given by `u_coef = u pi`.
    Shift { u_coef: Rat },
    /// `xi -> s xi`, `z -> s^2 z` with rational `s > 0`.
    Scale { s: Rat },
}

impl Pullback {
    pub fn inverse(&self) -> Pullback {
        match self {
            Pullback::Shift { u_coef } => Pullback::Shift { u_coef: -u_coef.clone() },
            Pullback::Scale { s } => Pullback::Scale { s: rat_int(1) / s },
        }
    }
}

/// `F^* rep`. For `F_u`: `F_{c,d} -> F_{c, d + u c}`. For `F_S`, `S = s I`:
/// `a^2 -> s^2 a^2` (`a^2` scales by `|det S|`), `c -> s^2 c`.
pub fn pullback_rep(rep: &IrrRep, f: &Pullback) -> IrrRep {
    match (rep, f) {
        (IrrRep::F { c, d_coef }, Pullback::Shift { u_coef }) => IrrRep::F { c: c.clone(), d_coef: d_coef + u_coef * c },
        (_, Pullback::Shift { .. }) => rep.clone(),
        (IrrRep::C { .. }, Pullback::Scale { .. }) => rep.clone(),
        (IrrRep::S { a2, tau }, Pullback::Scale { s }) => IrrRep::S { a2: a2.scale(&(s * s)), tau: tau.clone() },
        (IrrRep::F { c, d_coef }, Pullback::Scale { s }) => IrrRep::F { c: c * s * s, d_coef: d_coef.clone() },
    }
}
