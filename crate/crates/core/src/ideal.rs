use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::elem::RingElem;

/// Default ground-size bound for the exhaustive enumeration and search
/// routines; they are exponential in the ground size.
pub const DEFAULT_ORACLE_BOUND: usize = 4;

/// Hard cap on the definitional oracles regardless of the configured bound.
pub const ORACLE_HARD_CAP: usize = 5;

/// A finitely generated ideal of P(X), held in canonical principal form.
///
/// Every finitely generated ideal of a Boolean ring is principal: folding the
/// generators with (g, h) ↦ g + h + gh reduces any list to a single generator,
/// which for subsets is their union. The original generators are retained for
/// reporting; equality compares principal generators only.
#[derive(Clone)]
pub struct Ideal {
    generators: Vec<RingElem>,
    principal: RingElem,
}

/// One reduction step: (g, h) = (g + h + gh).
fn reduce_pair(g: &RingElem, h: &RingElem) -> Result<RingElem> {
    g.add(h)?.add(&g.mul(h)?)
}

impl Ideal {
    /// The ideal (g₁, ..., gₙ), reduced left-to-right to principal form.
    /// An empty generator list yields the zero ideal.
    pub fn from_generators(ground: &GroundSet, generators: Vec<RingElem>) -> Result<Ideal> {
        let mut principal = ground.zero();
        for g in &generators {
            if g.ground() != ground {
                return Err(Error::GroundMismatch);
            }
            principal = reduce_pair(&principal, g)?;
        }
        Ok(Ideal {
            generators,
            principal,
        })
    }

    /// The principal ideal (a).
    pub fn principal(a: RingElem) -> Ideal {
        Ideal {
            generators: vec![a.clone()],
            principal: a,
        }
    }

    /// The zero ideal (∅) = {∅}.
    pub fn zero(ground: &GroundSet) -> Ideal {
        Ideal::principal(ground.zero())
    }

    /// The unit ideal (X) = R.
    pub fn unit(ground: &GroundSet) -> Ideal {
        Ideal::principal(ground.one())
    }

    pub fn ground(&self) -> &GroundSet {
        self.principal.ground()
    }

    /// The generators the ideal was constructed from.
    pub fn generators(&self) -> &[RingElem] {
        &self.generators
    }

    /// The canonical single generator; the union of the original generators.
    pub fn principal_gen(&self) -> &RingElem {
        &self.principal
    }

    /// Ideal membership. As a set of elements (u) equals P(u), so a ∈ (u)
    /// exactly when a ⪯ u.
    pub fn contains(&self, a: &RingElem) -> Result<bool> {
        a.leq(&self.principal)
    }

    /// Containment of ideals: (v) ⊆ (u) iff v ⪯ u.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        other.principal.leq(&self.principal)
    }

    /// I + J, generated by both generator lists; principal form is the union
    /// of the two principal generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        let out = Ideal {
            generators,
            principal: self.principal.union(&other.principal)?,
        };
        Ok(out)
    }

    /// I ∩ J; in P(X) this is the principal ideal of the intersection of the
    /// two principal generators.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal::principal(self.principal.mul(&other.principal)?))
    }

    /// I·J, generated by the pairwise products of the generators. Idempotence
    /// makes this coincide with `intersect`; the two routes are compared in
    /// the verification suites.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ground() != other.ground() {
            return Err(Error::GroundMismatch);
        }
        let mut products = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                products.push(g.mul(h)?);
            }
        }
        Ideal::from_generators(self.ground(), products)
    }

    /// √I. Every element of a Boolean ring satisfies yⁿ = y, so every ideal
    /// is its own radical.
    pub fn radical(&self) -> Ideal {
        self.clone()
    }

    /// A principal ideal (a) is proper exactly when a is not a unit, and the
    /// only unit is 1 = X.
    pub fn is_proper(&self) -> bool {
        !self.principal.is_one()
    }

    /// True iff the principal generator is the complement of an atom, i.e.
    /// X − gen is a singleton; these are exactly the ideals m_x = P(X − {x}).
    pub fn is_maximal(&self) -> Result<bool> {
        if self.ground().is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        Ok(self.principal.complement().count() == 1)
    }

    /// In a Boolean ring the proper prime ideals are exactly the maximal
    /// ones; the unit ideal is neither.
    pub fn is_prime(&self) -> Result<bool> {
        self.is_maximal()
    }

    /// Primary coincides with prime here: yⁿ = y collapses the defining
    /// condition bⁿ ∈ I to b ∈ I.
    pub fn is_primary(&self) -> Result<bool> {
        self.is_maximal()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.principal == other.principal
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.principal)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.principal)
    }
}

/// All 2^size ideals of P(X) — one per subset — in bit-vector value order of
/// the principal generator, under the default bound.
pub fn enumerate_ideals(ground: &GroundSet) -> Result<Vec<Ideal>> {
    enumerate_ideals_bounded(ground, DEFAULT_ORACLE_BOUND)
}

/// As `enumerate_ideals`, with an explicit ground-size bound.
pub fn enumerate_ideals_bounded(ground: &GroundSet, bound: usize) -> Result<Vec<Ideal>> {
    if ground.size() > bound {
        return Err(Error::OracleBoundExceeded {
            size: ground.size(),
            bound,
        });
    }
    Ok(ground.elements().map(Ideal::principal).collect())
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    generators: Vec<RingElem>,
    principal: RingElem,
}

impl From<Ideal> for IdealRepr {
    fn from(ideal: Ideal) -> Self {
        IdealRepr {
            generators: ideal.generators,
            principal: ideal.principal,
        }
    }
}

impl TryFrom<IdealRepr> for Ideal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        let ideal = Ideal::from_generators(repr.principal.ground(), repr.generators)?;
        if *ideal.principal_gen() != repr.principal {
            // Stored canonical form must match the recomputed reduction.
            return Err(Error::GroundMismatch);
        }
        Ok(ideal)
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr::from(self.clone()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        Ideal::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn two_generators_reduce_to_their_union() {
        let g = g3();
        let i = Ideal::from_generators(
            &g,
            vec![g.elem(["a"]).unwrap(), g.elem(["b"]).unwrap()],
        )
        .unwrap();
        assert_eq!(*i.principal_gen(), g.elem(["a", "b"]).unwrap());
    }

    #[test]
    fn empty_generator_list_is_the_zero_ideal() {
        let g = g3();
        let i = Ideal::from_generators(&g, vec![]).unwrap();
        assert!(i.principal_gen().is_zero());
        assert_eq!(i, Ideal::zero(&g));
    }

    #[test]
    fn three_generators_reduce_to_their_union() {
        let g = g3();
        let gens = vec![
            g.elem(["a", "b"]).unwrap(),
            g.elem(["b", "c"]).unwrap(),
            g.elem(["c"]).unwrap(),
        ];
        let i = Ideal::from_generators(&g, gens).unwrap();
        assert_eq!(*i.principal_gen(), g.one());
    }

    #[test]
    fn reduction_is_order_independent() {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let gens = vec![
            g.elem(["a", "d"]).unwrap(),
            g.elem(["b"]).unwrap(),
            g.elem(["b", "c"]).unwrap(),
        ];
        let forward = Ideal::from_generators(&g, gens.clone()).unwrap();
        let mut reversed = gens;
        reversed.reverse();
        let backward = Ideal::from_generators(&g, reversed).unwrap();
        assert_eq!(forward, backward);
    }

    #[test]
    fn membership_is_containment_in_the_generator() {
        let g = g3();
        let i = Ideal::principal(g.elem(["a", "b"]).unwrap());
        assert!(i.contains(&g.elem(["a"]).unwrap()).unwrap());
        assert!(!i.contains(&g.elem(["c"]).unwrap()).unwrap());
        assert!(i.contains(&g.zero()).unwrap());
    }

    #[test]
    fn sum_intersect_product() {
        let g = g3();
        let ia = Ideal::principal(g.elem(["a"]).unwrap());
        let ib = Ideal::principal(g.elem(["b"]).unwrap());
        assert_eq!(
            ia.sum(&ib).unwrap(),
            Ideal::principal(g.elem(["a", "b"]).unwrap())
        );

        let iab = Ideal::principal(g.elem(["a", "b"]).unwrap());
        let ibc = Ideal::principal(g.elem(["b", "c"]).unwrap());
        assert_eq!(
            iab.intersect(&ibc).unwrap(),
            Ideal::principal(g.elem(["b"]).unwrap())
        );

        assert_eq!(iab.product(&Ideal::zero(&g)).unwrap(), Ideal::zero(&g));
    }

    #[test]
    fn radical_is_the_identity() {
        let g = g3();
        let i = Ideal::principal(g.elem(["a", "b"]).unwrap());
        assert_eq!(i.radical(), i);
        assert_eq!(Ideal::zero(&g).radical(), Ideal::zero(&g));
        assert_eq!(Ideal::unit(&g).radical(), Ideal::unit(&g));
    }

    #[test]
    fn properness() {
        let g = g3();
        assert!(Ideal::principal(g.elem(["a", "b"]).unwrap()).is_proper());
        assert!(!Ideal::unit(&g).is_proper());
        assert!(Ideal::zero(&g).is_proper());
    }

    #[test]
    fn maximality_cases() {
        let g = g3();
        // m_a = ({b, c})
        assert!(Ideal::principal(g.elem(["b", "c"]).unwrap())
            .is_maximal()
            .unwrap());
        assert!(!Ideal::principal(g.elem(["c"]).unwrap()).is_maximal().unwrap());
        assert!(!Ideal::unit(&g).is_maximal().unwrap());

        // ({c}) sits strictly between the zero ideal and R: ({c}) ⊊ ({b,c}) ⊊ R.
        let ic = Ideal::principal(g.elem(["c"]).unwrap());
        let ibc = Ideal::principal(g.elem(["b", "c"]).unwrap());
        assert!(ibc.contains_ideal(&ic).unwrap());
        assert_ne!(ic, ibc);
        assert!(ibc.is_proper());
    }

    #[test]
    fn prime_and_primary_match_maximal() {
        let g = g3();
        let ma = Ideal::principal(g.elem(["b", "c"]).unwrap());
        assert!(ma.is_prime().unwrap());
        assert!(ma.is_primary().unwrap());

        let ia = Ideal::principal(g.elem(["a"]).unwrap());
        assert!(!ia.is_prime().unwrap());
        assert!(!ia.is_primary().unwrap());

        // With a single point the zero ideal is P(X − {x}) = {∅}.
        let g1 = GroundSet::new(["x"]).unwrap();
        let z = Ideal::zero(&g1);
        assert!(z.is_prime().unwrap());
        assert!(z.is_primary().unwrap());
        assert!(z.is_maximal().unwrap());
    }

    #[test]
    fn predicates_error_on_the_zero_ring() {
        let g = GroundSet::new(Vec::<String>::new()).unwrap();
        let z = Ideal::zero(&g);
        assert_eq!(z.is_maximal().unwrap_err(), Error::ZeroRing);
        assert_eq!(z.is_prime().unwrap_err(), Error::ZeroRing);
        assert_eq!(z.is_primary().unwrap_err(), Error::ZeroRing);
    }

    #[test]
    fn enumerate_counts_match_subset_count() {
        let g2 = GroundSet::new(["a", "b"]).unwrap();
        assert_eq!(enumerate_ideals(&g2).unwrap().len(), 4);

        let g0 = GroundSet::new(Vec::<String>::new()).unwrap();
        assert_eq!(enumerate_ideals(&g0).unwrap().len(), 1);

        assert_eq!(enumerate_ideals(&g3()).unwrap().len(), 8);

        let g5 = GroundSet::new(["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(
            enumerate_ideals(&g5).unwrap_err(),
            Error::OracleBoundExceeded { size: 5, bound: 4 }
        );
    }

    #[test]
    fn json_round_trip() {
        let g = g3();
        let i = Ideal::from_generators(
            &g,
            vec![g.elem(["a"]).unwrap(), g.elem(["b"]).unwrap()],
        )
        .unwrap();
        let text = serde_json::to_string(&i).unwrap();
        let back: Ideal = serde_json::from_str(&text).unwrap();
        assert_eq!(back, i);
        assert_eq!(back.generators().len(), 2);
    }
}
