//! Isomorphism types of discrete oscillator groups, from the parity rules on
//! `(k, l)` and independently from the abelianization.

use std::fmt;

use num_integer::Integer;

use crate::group::rotation_matrix;
use crate::oracle::snf::{smith_normal_form, IntMatrix};

/// Isomorphism type of `Gamma = <alpha, beta, gamma, delta>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    T1 { r: i64, r0: i64 },
    T2 { r: i64 },
    T2Plus { r: i64 },
    T3 { r: i64 },
    T3Plus { r: i64 },
    T4 { r: i64 },
    T4Plus { r: i64 },
    T6 { r: i64 },
}

impl TypeTag {
    pub fn q(&self) -> u8 {
        match self {
            TypeTag::T1 { .. } => 1,
            TypeTag::T2 { .. } | TypeTag::T2Plus { .. } => 2,
            TypeTag::T3 { .. } | TypeTag::T3Plus { .. } => 3,
            TypeTag::T4 { .. } | TypeTag::T4Plus { .. } => 4,
            TypeTag::T6 { .. } => 6,
        }
    }

    pub fn r(&self) -> i64 {
        match *self {
            TypeTag::T1 { r, .. }
            | TypeTag::T2 { r }
            | TypeTag::T2Plus { r }
            | TypeTag::T3 { r }
            | TypeTag::T3Plus { r }
            | TypeTag::T4 { r }
            | TypeTag::T4Plus { r }
            | TypeTag::T6 { r } => r,
        }
    }

    pub fn is_plus(&self) -> bool {
        matches!(self, TypeTag::T2Plus { .. } | TypeTag::T3Plus { .. } | TypeTag::T4Plus { .. })
    }

    /// All types that occur for a given `q` and `r`.
    pub fn candidates(q: u8, r: i64) -> Vec<TypeTag> {
        match q {
            1 => (1..=r).filter(|d| r % d == 0).map(|r0| TypeTag::T1 { r, r0 }).collect(),
            2 if r % 2 == 0 => vec![TypeTag::T2 { r }, TypeTag::T2Plus { r }],
            2 => vec![TypeTag::T2 { r }],
            3 if r % 3 == 0 => vec![TypeTag::T3 { r }, TypeTag::T3Plus { r }],
            3 => vec![TypeTag::T3 { r }],
            4 if r % 2 == 0 => vec![TypeTag::T4 { r }, TypeTag::T4Plus { r }],
            4 => vec![TypeTag::T4 { r }],
            6 => vec![TypeTag::T6 { r }],
            _ => vec![],
        }
    }

    /// Abelianization as listed cyclic factors and free rank.
    pub fn abelianization(&self) -> (Vec<i64>, usize) {
        let (cyc, rank) = match *self {
            TypeTag::T1 { r0, .. } => (vec![r0], 3),
            TypeTag::T6 { r } => (vec![r], 1),
            TypeTag::T2 { r } => (vec![2, 2, r], 1),
            TypeTag::T2Plus { r } => (vec![2, 2 * r], 1),
            TypeTag::T3 { r } => (vec![3, r], 1),
            TypeTag::T3Plus { r } => (vec![3 * r], 1),
            TypeTag::T4 { r } => (vec![2, r], 1),
            TypeTag::T4Plus { r } => (vec![2 * r], 1),
        };
        (invariant_factors(&cyc), rank)
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TypeTag::T1 { r, r0 } => write!(f, "L1(r={r}, r0={r0})"),
            TypeTag::T2 { r } => write!(f, "L2(r={r})"),
            TypeTag::T2Plus { r } => write!(f, "L2+(r={r})"),
            TypeTag::T3 { r } => write!(f, "L3(r={r})"),
            TypeTag::T3Plus { r } => write!(f, "L3+(r={r})"),
            TypeTag::T4 { r } => write!(f, "L4(r={r})"),
            TypeTag::T4Plus { r } => write!(f, "L4+(r={r})"),
            TypeTag::T6 { r } => write!(f, "L6(r={r})"),
        }
    }
}

/// Invariant factor form (each dividing the next, ones dropped) of a product
/// of cyclic groups.
pub fn invariant_factors(cyclic: &[i64]) -> Vec<i64> {
    let n = cyclic.len();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { cyclic[i] } else { 0 }).collect()).collect();
    if n == 0 {
        return vec![];
    }
    smith_normal_form(&IntMatrix::from_rows(&rows)).abelian_group().0
}

/// Type from the parity rules on the conjugation exponents.
pub fn classify_presentation(q: u8, r: i64, k: i64, l: i64) -> TypeTag {
    match q {
        1 => TypeTag::T1 { r, r0: r.gcd(&k).gcd(&l) },
        2 if r % 2 != 0 || (k % 2 == 0 && l % 2 == 0) => TypeTag::T2 { r },
        2 => TypeTag::T2Plus { r },
        3 if r % 3 != 0 || (k - l) % 3 == 0 => TypeTag::T3 { r },
        3 => TypeTag::T3Plus { r },
        4 if r % 2 != 0 || (k - l) % 2 == 0 => TypeTag::T4 { r },
        4 => TypeTag::T4Plus { r },
        6 => TypeTag::T6 { r },
        _ => panic!("no lattice rotation of order {q}"),
    }
}

/// Abelianization of the presentation: invariant factors and free rank.
/// Relations on `(alpha, beta, gamma)`; `delta` contributes one free factor.
pub fn abelianization_presentation(q: u8, r: i64, k: i64, l: i64) -> (Vec<i64>, usize) {
    let s = rotation_matrix(q).0;
    let rel = IntMatrix::from_rows(&[
        vec![s[0][0] - 1, s[1][0], k],
        vec![s[0][1], s[1][1] - 1, l],
        vec![0, 0, r],
    ]);
    let (tors, rank) = smith_normal_form(&rel).abelian_group();
    (tors, rank + 1)
}

/// Type read off from the abelianization alone, given `r`. The torsion order
/// fixes `q`; the invariant factors then fix the type.
pub fn abelianization_type(q: u8, r: i64, k: i64, l: i64) -> Option<TypeTag> {
    let ab = abelianization_presentation(q, r, k, l);
    let order: i64 = ab.0.iter().product();
    let q_found = match (ab.1, order / r, order % r) {
        (3, _, _) => 1,
        (1, 1, 0) => 6,
        (1, 2, 0) => 4,
        (1, 3, 0) => 3,
        (1, 4, 0) => 2,
        _ => return None,
    };
    TypeTag::candidates(q_found, r).into_iter().find(|t| t.abelianization() == ab)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_example() {
        // k = l = 0, r = 3: Z2 x Z2 x Z3 x Z = Z2 x Z6 x Z
        assert_eq!(abelianization_presentation(2, 3, 0, 0), (vec![2, 6], 1));
        assert_eq!(abelianization_type(2, 3, 0, 0), Some(TypeTag::T2 { r: 3 }));
    }

    #[test]
    fn table_representatives() {
        // presentations listed for each type with r = 6
        let r = 6;
        assert_eq!(classify_presentation(2, r, 1, -1), TypeTag::T2Plus { r });
        assert_eq!(classify_presentation(3, r, r, -r), TypeTag::T3 { r });
        assert_eq!(classify_presentation(3, r, r - 1, 1 - r), TypeTag::T3Plus { r });
        assert_eq!(classify_presentation(4, r, 1, 0), TypeTag::T4Plus { r });
        assert_eq!(classify_presentation(1, r, 2, 4), TypeTag::T1 { r, r0: 2 });
    }

    #[test]
    fn parity_rules_match_abelianization() {
        for q in [1u8, 2, 3, 4, 6] {
            for r in 1..=6 {
                for k in 0..2 * r {
                    for l in 0..2 * r {
                        let a = classify_presentation(q, r, k, l);
                        assert_eq!(abelianization_type(q, r, k, l), Some(a), "q={q} r={r} k={k} l={l}");
                    }
                }
            }
        }
    }
}
