//! The finite–cofinite Boolean subalgebra of P(ℕ): a finitely describable
//! model of a power-set ring over an infinite universe.
//!
//! Elements are symbolic — a finite support set tagged as the member set or
//! the non-member set — and are never materialized as bit-vectors. This is
//! enough to exhibit Fin as a proper non-finitely-generated ideal and to
//! produce, for any finite family of point ideals m_x, a nonzero common
//! member: the reason the zero ideal has no finite reduced decomposition
//! over an infinite universe.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// An element of the finite–cofinite algebra over the natural numbers:
/// either a finite set of points or the complement of one.
///
/// The representation is canonical — a set is never both finite and cofinite
/// over an infinite universe — so structural equality is element equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "support", rename_all = "lowercase")]
pub enum FinCofElem {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

use FinCofElem::{Cofinite, Finite};

fn symmetric_difference(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> BTreeSet<u64> {
    a.symmetric_difference(b).copied().collect()
}

impl FinCofElem {
    /// The ring zero: the empty set.
    pub fn zero() -> Self {
        Finite(BTreeSet::new())
    }

    /// The ring one: the whole universe, i.e. the complement of nothing.
    pub fn one() -> Self {
        Cofinite(BTreeSet::new())
    }

    pub fn finite<I: IntoIterator<Item = u64>>(points: I) -> Self {
        Finite(points.into_iter().collect())
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(points: I) -> Self {
        Cofinite(points.into_iter().collect())
    }

    /// The support: members if finite, non-members if cofinite.
    pub fn support(&self) -> &BTreeSet<u64> {
        match self {
            Finite(s) | Cofinite(s) => s,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Finite(s) if s.is_empty())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Cofinite(s) if s.is_empty())
    }

    /// Symmetric difference, by kind-case analysis on the supports.
    pub fn add(&self, other: &FinCofElem) -> FinCofElem {
        match (self, other) {
            (Finite(s), Finite(t)) => Finite(symmetric_difference(s, t)),
            (Cofinite(s), Cofinite(t)) => Finite(symmetric_difference(s, t)),
            (Finite(s), Cofinite(t)) | (Cofinite(t), Finite(s)) => {
                Cofinite(symmetric_difference(s, t))
            }
        }
    }

    /// Intersection. Anything meets a finite set in a finite set; two
    /// cofinite sets meet in the complement of the union of their co-supports.
    pub fn mul(&self, other: &FinCofElem) -> FinCofElem {
        match (self, other) {
            (Finite(s), Finite(t)) => Finite(s.intersection(t).copied().collect()),
            (Finite(s), Cofinite(t)) | (Cofinite(t), Finite(s)) => {
                Finite(s.difference(t).copied().collect())
            }
            (Cofinite(s), Cofinite(t)) => Cofinite(s.union(t).copied().collect()),
        }
    }

    /// 1 − a: flips the kind, keeping the support.
    pub fn complement(&self) -> FinCofElem {
        match self {
            Finite(s) => Cofinite(s.clone()),
            Cofinite(s) => Finite(s.clone()),
        }
    }

    /// χ at a point: 1 iff the point is a member. For fixed x this is a ring
    /// homomorphism onto the two-element field.
    pub fn member_point(&self, x: u64) -> bool {
        match self {
            Finite(s) => s.contains(&x),
            Cofinite(s) => !s.contains(&x),
        }
    }

    /// Membership in Fin, the ideal of finite sets.
    pub fn in_fin(&self) -> bool {
        matches!(self, Finite(_))
    }

    /// Membership in m_x = { a : x ∉ a }, the kernel of evaluation at x.
    pub fn in_mx(&self, x: u64) -> bool {
        !self.member_point(x)
    }
}

impl fmt::Debug for FinCofElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let points: Vec<String> = self.support().iter().map(u64::to_string).collect();
        match self {
            Finite(_) => write!(f, "{{{}}}", points.join(", ")),
            Cofinite(_) => write!(f, "~{{{}}}", points.join(", ")),
        }
    }
}

/// A verified nonzero common member of the m_x over the given finite point
/// set: the singleton of the least point outside it.
///
/// No finite subfamily of { m_x } can intersect to the zero ideal, which is
/// the computational content of the failure of finite reduced decomposition
/// over an infinite universe.
pub fn witness_nonzero<I: IntoIterator<Item = u64>>(points: I) -> FinCofElem {
    let points: BTreeSet<u64> = points.into_iter().collect();
    let fresh = (0u64..).find(|y| !points.contains(y)).unwrap();
    let witness = FinCofElem::finite([fresh]);
    assert!(!witness.is_zero());
    assert!(points.iter().all(|&x| witness.in_mx(x)));
    witness
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(points: &[u64]) -> FinCofElem {
        FinCofElem::finite(points.iter().copied())
    }

    fn cof(points: &[u64]) -> FinCofElem {
        FinCofElem::cofinite(points.iter().copied())
    }

    // Pointwise probe over a window covering both supports plus a margin.
    fn probe_window(a: &FinCofElem, b: &FinCofElem) -> impl Iterator<Item = u64> {
        let hi = a
            .support()
            .iter()
            .chain(b.support())
            .max()
            .copied()
            .unwrap_or(0);
        0..=hi + 8
    }

    #[test]
    fn add_of_finite_sets_is_symmetric_difference() {
        assert_eq!(fin(&[1, 2]).add(&fin(&[2, 3])), fin(&[1, 3]));
    }

    #[test]
    fn product_of_cofinite_sets_omits_the_union() {
        let lhs = cof(&[1]).mul(&cof(&[2]));
        assert_eq!(lhs, cof(&[1, 2]));
        for x in 0..10 {
            assert_eq!(
                lhs.member_point(x),
                cof(&[1]).member_point(x) && cof(&[2]).member_point(x)
            );
        }
    }

    #[test]
    fn complement_flips_the_kind() {
        assert_eq!(fin(&[5]).complement(), cof(&[5]));
        assert_eq!(FinCofElem::zero().complement(), FinCofElem::one());
    }

    #[test]
    fn mixed_cases_agree_pointwise() {
        let cases = [
            (fin(&[1, 2, 5]), fin(&[2, 3])),
            (fin(&[1, 7]), cof(&[7, 9])),
            (cof(&[0, 4]), fin(&[4, 6])),
            (cof(&[1, 2]), cof(&[2, 8])),
        ];
        for (a, b) in cases {
            let sum = a.add(&b);
            let prod = a.mul(&b);
            for x in probe_window(&a, &b) {
                assert_eq!(sum.member_point(x), a.member_point(x) ^ b.member_point(x));
                assert_eq!(prod.member_point(x), a.member_point(x) && b.member_point(x));
            }
        }
    }

    #[test]
    fn membership_cases() {
        assert!(cof(&[1, 2]).member_point(3));
        assert!(!cof(&[1, 2]).member_point(1));
        assert!(fin(&[2, 3]).in_mx(1));
        assert!(!cof(&[2]).in_mx(1));
        assert!(FinCofElem::zero().in_mx(1));
    }

    #[test]
    fn fin_membership_and_closure() {
        assert!(fin(&[1, 2, 3]).in_fin());
        assert!(!FinCofElem::one().in_fin());
        // Absorption keeps products finite: a cofinite set times a finite one.
        let product = cof(&[7]).mul(&fin(&[1, 7]));
        assert_eq!(product, fin(&[1]));
        assert!(product.in_fin());
        for x in 0..10 {
            assert_eq!(
                product.member_point(x),
                cof(&[7]).member_point(x) && fin(&[1, 7]).member_point(x)
            );
        }
    }

    #[test]
    fn witness_picks_the_least_fresh_point() {
        assert_eq!(witness_nonzero([]), fin(&[0]));
        assert_eq!(witness_nonzero(0..100), fin(&[100]));
        assert_eq!(witness_nonzero([0, 1, 3]), fin(&[2]));

        let w = witness_nonzero([1, 2]);
        assert!(!w.is_zero());
        assert!(w.in_mx(1) && w.in_mx(2));
    }

    #[test]
    fn boolean_ring_laws_on_samples() {
        let samples = [
            FinCofElem::zero(),
            FinCofElem::one(),
            fin(&[1, 4]),
            fin(&[2]),
            cof(&[3]),
            cof(&[1, 2, 9]),
        ];
        for a in &samples {
            assert_eq!(a.add(a), FinCofElem::zero());
            assert_eq!(a.mul(a), *a);
            assert_eq!(a.mul(&FinCofElem::one()), *a);
            assert_eq!(a.add(&FinCofElem::zero()), *a);
            for b in &samples {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn json_shape() {
        let a = fin(&[1, 2]);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"kind":"finite","support":[1,2]}"#
        );
        let b: FinCofElem = serde_json::from_str(r#"{"kind":"cofinite","support":[5]}"#).unwrap();
        assert_eq!(b, cof(&[5]));
    }
}
