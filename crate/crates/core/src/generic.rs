//! Generic finite Boolean rings Z₂ × ... × Z₂ and their identification with
//! power-set rings over their atoms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::elem::RingElem;

/// Default dimension bound for constructing the atom identification; its
/// self-check is quadratic in the element count below dimension 5.
pub const STONE_DEFAULT_BOUND: usize = 16;

/// The direct product of `dimension` copies of the two-element field.
///
/// Elements are the low `dimension` bits of a u64: addition is coordinatewise
/// exclusive-or, multiplication coordinatewise conjunction. Every element is
/// idempotent, so this is a Boolean ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenericBoolRing {
    dimension: usize,
}

impl GenericBoolRing {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension > 64 {
            return Err(Error::DimensionTooLarge(dimension));
        }
        Ok(GenericBoolRing { dimension })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    fn mask(&self) -> u64 {
        if self.dimension == 64 {
            !0
        } else {
            (1u64 << self.dimension) - 1
        }
    }

    pub fn is_element(&self, a: u64) -> bool {
        a & !self.mask() == 0
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        self.mask()
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.is_element(a) && self.is_element(b));
        a ^ b
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.is_element(a) && self.is_element(b));
        a & b
    }

    pub fn complement(&self, a: u64) -> u64 {
        debug_assert!(self.is_element(a));
        !a & self.mask()
    }

    /// a ⪯ b ⟺ ab = a.
    pub fn leq(&self, a: u64, b: u64) -> bool {
        debug_assert!(self.is_element(a) && self.is_element(b));
        a & b == a
    }

    /// All 2^dimension elements; exhaustive enumeration, desk-scale only.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        assert!(self.dimension <= 24, "element enumeration is desk-scale only");
        0..=self.mask()
    }

    /// The minimal nonzero elements under ⪯: the unit coordinate vectors.
    pub fn find_atoms(&self) -> Result<Vec<u64>> {
        if self.dimension == 0 {
            return Err(Error::ZeroRing);
        }
        Ok((0..self.dimension).map(|i| 1u64 << i).collect())
    }

    pub fn is_atom(&self, a: u64) -> bool {
        self.is_element(a) && a.count_ones() == 1
    }

    /// The complement 1 + atom of an atom; the principal ideal it generates
    /// is maximal.
    pub fn maximal_principal_from_atom(&self, atom: u64) -> Result<u64> {
        if !self.is_atom(atom) {
            return Err(Error::NotAnAtom(atom));
        }
        Ok(self.complement(atom))
    }

    /// The identification b ↦ { α atom : αb = α } of this ring with the
    /// power-set ring over its atoms, under the default dimension bound.
    pub fn stone_map(&self) -> Result<StoneMap> {
        self.stone_map_bounded(STONE_DEFAULT_BOUND)
    }

    /// As `stone_map`, with an explicit dimension bound. The constructed map
    /// is self-checked: exhaustively below dimension 5, on seeded random
    /// samples above.
    pub fn stone_map_bounded(&self, bound: usize) -> Result<StoneMap> {
        if self.dimension > bound {
            return Err(Error::OracleBoundExceeded {
                size: self.dimension,
                bound,
            });
        }
        let labels: Vec<String> = (0..self.dimension).map(|i| format!("e{i}")).collect();
        let map = StoneMap {
            ring: *self,
            ground: GroundSet::new(labels)?,
        };
        map.self_check();
        Ok(map)
    }
}

/// The Stone-style identification of a generic Boolean ring with P(atoms):
/// each element maps to the set of atoms below it.
#[derive(Clone, Debug)]
pub struct StoneMap {
    ring: GenericBoolRing,
    ground: GroundSet,
}

impl StoneMap {
    pub fn ring(&self) -> &GenericBoolRing {
        &self.ring
    }

    /// The power-set ground whose label `e_i` stands for the atom 2^i.
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// b ↦ { α atom : αb = α }. Coordinatewise this reads off the set bits
    /// of b, which is why the map is a ring isomorphism.
    pub fn apply(&self, b: u64) -> RingElem {
        debug_assert!(self.ring.is_element(b));
        self.ground.elem(
            (0..self.ring.dimension)
                .filter(|i| {
                    let atom = 1u64 << i;
                    self.ring.mul(atom, b) == atom
                })
                .map(|i| format!("e{i}")),
        )
        .expect("atom labels are in the atom ground")
    }

    /// The unique b with apply(b) = e.
    pub fn preimage(&self, e: &RingElem) -> Result<u64> {
        if e.ground() != &self.ground {
            return Err(Error::GroundMismatch);
        }
        let mut b = 0u64;
        for (i, label) in self.ground.labels().iter().enumerate() {
            if e.char_eval(label)? == 1 {
                b |= 1u64 << i;
            }
        }
        Ok(b)
    }

    fn check_pair(&self, a: u64, b: u64) {
        let add_then = self.apply(self.ring.add(a, b));
        let then_add = self.apply(a).add(&self.apply(b)).unwrap();
        assert_eq!(add_then, then_add, "additivity fails at ({a:#b}, {b:#b})");
        let mul_then = self.apply(self.ring.mul(a, b));
        let then_mul = self.apply(a).mul(&self.apply(b)).unwrap();
        assert_eq!(mul_then, then_mul, "multiplicativity fails at ({a:#b}, {b:#b})");
    }

    fn self_check(&self) {
        if self.ring.dimension <= 4 {
            for a in self.ring.elements() {
                for b in self.ring.elements() {
                    self.check_pair(a, b);
                }
                assert_eq!(self.preimage(&self.apply(a)).unwrap(), a);
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5701e);
            for _ in 0..256 {
                let a = rng.random::<u64>() & self.ring.mask();
                let b = rng.random::<u64>() & self.ring.mask();
                self.check_pair(a, b);
                assert_eq!(self.preimage(&self.apply(a)).unwrap(), a);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_are_coordinate_vectors() {
        let r = GenericBoolRing::new(3).unwrap();
        assert_eq!(r.find_atoms().unwrap(), vec![0b001, 0b010, 0b100]);
        assert_eq!(GenericBoolRing::new(1).unwrap().find_atoms().unwrap(), vec![1]);
        assert_eq!(
            GenericBoolRing::new(2).unwrap().find_atoms().unwrap(),
            vec![0b01, 0b10]
        );
        assert_eq!(
            GenericBoolRing::new(0).unwrap().find_atoms().unwrap_err(),
            Error::ZeroRing
        );
    }

    #[test]
    fn atoms_are_minimal_nonzero_by_definition() {
        for dim in 1..=4usize {
            let r = GenericBoolRing::new(dim).unwrap();
            let definitional: Vec<u64> = r
                .elements()
                .filter(|&a| {
                    a != 0
                        && r.elements()
                            .all(|b| b == 0 || b == a || !r.leq(b, a))
                })
                .collect();
            assert_eq!(r.find_atoms().unwrap(), definitional, "dimension {dim}");
        }
    }

    #[test]
    fn complement_of_an_atom() {
        let r = GenericBoolRing::new(3).unwrap();
        assert_eq!(r.maximal_principal_from_atom(0b100).unwrap(), 0b011);
        let r1 = GenericBoolRing::new(1).unwrap();
        assert_eq!(r1.maximal_principal_from_atom(1).unwrap(), 0);
        assert_eq!(
            r.maximal_principal_from_atom(0b110).unwrap_err(),
            Error::NotAnAtom(0b110)
        );
    }

    #[test]
    fn stone_map_reads_coordinates() {
        let r2 = GenericBoolRing::new(2).unwrap();
        let map = r2.stone_map().unwrap();
        assert_eq!(map.apply(0b11), map.ground().one());

        let r3 = GenericBoolRing::new(3).unwrap();
        let map = r3.stone_map().unwrap();
        assert_eq!(
            map.apply(0b101),
            map.ground().elem(["e0", "e2"]).unwrap()
        );
    }

    #[test]
    fn stone_map_is_a_bijective_homomorphism_at_small_dimensions() {
        for dim in 0..=4usize {
            let r = GenericBoolRing::new(dim).unwrap();
            let map = r.stone_map().unwrap();
            let mut images = std::collections::BTreeSet::new();
            for a in r.elements() {
                images.insert(map.apply(a));
                for b in r.elements() {
                    assert_eq!(
                        map.apply(r.add(a, b)),
                        map.apply(a).add(&map.apply(b)).unwrap()
                    );
                    assert_eq!(
                        map.apply(r.mul(a, b)),
                        map.apply(a).mul(&map.apply(b)).unwrap()
                    );
                }
            }
            assert_eq!(images.len(), 1 << dim, "dimension {dim}");
        }
    }

    #[test]
    fn maximal_principal_image_is_the_point_ideal_generator() {
        // The image of 1 + atom under the atom map is the complement of the
        // corresponding singleton.
        for dim in 1..=3usize {
            let r = GenericBoolRing::new(dim).unwrap();
            let map = r.stone_map().unwrap();
            for (i, atom) in r.find_atoms().unwrap().into_iter().enumerate() {
                let gen = r.maximal_principal_from_atom(atom).unwrap();
                let expected = map
                    .ground()
                    .singleton(&format!("e{i}"))
                    .unwrap()
                    .complement();
                assert_eq!(map.apply(gen), expected);
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let r = GenericBoolRing::new(20).unwrap();
        assert_eq!(
            r.stone_map().unwrap_err(),
            Error::OracleBoundExceeded { size: 20, bound: 16 }
        );
        assert!(r.stone_map_bounded(32).is_ok());
        assert_eq!(
            GenericBoolRing::new(65).unwrap_err(),
            Error::DimensionTooLarge(65)
        );
    }

    #[test]
    fn dimension_64_arithmetic() {
        let r = GenericBoolRing::new(64).unwrap();
        let a = 0xdead_beef_dead_beefu64;
        assert_eq!(r.add(a, a), 0);
        assert_eq!(r.mul(a, a), a);
        assert_eq!(r.add(a, r.complement(a)), r.one());
    }
}
