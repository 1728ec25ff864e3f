use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;

const WORD_BITS: usize = 64;

/// Dynamic-width bit vector; bits at positions >= `len` stay clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut bits = Bits {
            len,
            words: vec![!0u64; len.div_ceil(WORD_BITS)],
        };
        bits.mask_tail();
        bits
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    fn zip_with(&self, rhs: &Bits, op: impl Fn(u64, u64) -> u64) -> Bits {
        debug_assert_eq!(self.len, rhs.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&rhs.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub(crate) fn xor(&self, rhs: &Bits) -> Bits {
        self.zip_with(rhs, |a, b| a ^ b)
    }

    pub(crate) fn and(&self, rhs: &Bits) -> Bits {
        self.zip_with(rhs, |a, b| a & b)
    }

    pub(crate) fn or(&self, rhs: &Bits) -> Bits {
        self.zip_with(rhs, |a, b| a | b)
    }

    pub(crate) fn not(&self) -> Bits {
        let mut out = Bits {
            len: self.len,
            words: self.words.iter().map(|&w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// self & rhs == self, i.e. subset containment of the index sets.
    pub(crate) fn is_subset_of(&self, rhs: &Bits) -> bool {
        debug_assert_eq!(self.len, rhs.len);
        self.words.iter().zip(&rhs.words).all(|(&a, &b)| a & b == a)
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Compares as unsigned integers (bit i has weight 2^i).
    pub(crate) fn cmp_value(&self, rhs: &Bits) -> Ordering {
        debug_assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter().rev().zip(rhs.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Builds from the low bits of `mask`; requires len <= 64.
    pub(crate) fn from_low_u64(len: usize, mask: u64) -> Bits {
        debug_assert!(len <= WORD_BITS);
        debug_assert!(len == WORD_BITS || mask < (1u64 << len));
        let mut bits = Bits::zeros(len);
        if !bits.words.is_empty() {
            bits.words[0] = mask;
        }
        bits
    }

    /// The value as a u64; requires len <= 64.
    pub(crate) fn low_u64(&self) -> u64 {
        debug_assert!(self.len <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }
}

/// An element of the power-set ring R = P(X): a subset of the ground set held
/// as a bit-vector.
///
/// Addition is symmetric difference, multiplication is intersection; the empty
/// set is 0 and the whole ground set is 1. Elements over different ground sets
/// never interoperate.
#[derive(Clone)]
pub struct RingElem {
    ground: GroundSet,
    bits: Bits,
}

impl RingElem {
    pub(crate) fn from_bits(ground: GroundSet, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), ground.size());
        RingElem { ground, bits }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Member labels in ground-set order.
    pub fn members(&self) -> Vec<&str> {
        self.bits.iter_ones().map(|i| self.ground.label(i)).collect()
    }

    /// Cardinality of the subset.
    pub fn count(&self) -> usize {
        self.bits.count_ones()
    }

    /// True for the ring zero, the empty set.
    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// True for the ring one, the whole ground set. In the zero ring this
    /// coincides with `is_zero`.
    pub fn is_one(&self) -> bool {
        self.bits.count_ones() == self.ground.size()
    }

    fn check_ground(&self, other: &RingElem) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// A + B = (A ∪ B) − (A ∩ B), the symmetric difference.
    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ground(other)?;
        Ok(RingElem::from_bits(self.ground.clone(), self.bits.xor(&other.bits)))
    }

    /// AB = A ∩ B, the intersection.
    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ground(other)?;
        Ok(RingElem::from_bits(self.ground.clone(), self.bits.and(&other.bits)))
    }

    /// The complement 1 − A = X − A; equals `one.add(self)` in characteristic 2.
    pub fn complement(&self) -> RingElem {
        RingElem::from_bits(self.ground.clone(), self.bits.not())
    }

    /// The canonical partial order a ⪯ b defined by ab = a; in P(X) this is
    /// subset containment.
    pub fn leq(&self, other: &RingElem) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.bits.is_subset_of(&other.bits))
    }

    /// Set union; equals a + b + ab and is the principal generator of (a, b).
    pub fn union(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ground(other)?;
        Ok(RingElem::from_bits(self.ground.clone(), self.bits.or(&other.bits)))
    }

    /// χ_A(x): 1 if the label is a member of this subset, else 0. For fixed x
    /// this is the evaluation homomorphism onto the two-element field.
    pub fn char_eval(&self, label: &str) -> Result<u8> {
        let i = self.ground.require_index(label)?;
        Ok(self.bits.get(i) as u8)
    }

}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bits == other.bits
    }
}

impl Eq for RingElem {}

impl Hash for RingElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for RingElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground
            .labels()
            .cmp(other.ground.labels())
            .then_with(|| self.bits.cmp_value(&other.bits))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().join(", "))
    }
}

impl GroundSet {
    /// The subset with exactly the given member labels.
    pub fn elem<I, S>(&self, members: I) -> Result<RingElem>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = Bits::zeros(self.size());
        for member in members {
            bits.set(self.require_index(member.as_ref())?);
        }
        Ok(RingElem::from_bits(self.clone(), bits))
    }

    /// The ring zero ∅.
    pub fn zero(&self) -> RingElem {
        RingElem::from_bits(self.clone(), Bits::zeros(self.size()))
    }

    /// The ring one X.
    pub fn one(&self) -> RingElem {
        RingElem::from_bits(self.clone(), Bits::ones(self.size()))
    }

    /// The singleton {x}.
    pub fn singleton(&self, label: &str) -> Result<RingElem> {
        let mut bits = Bits::zeros(self.size());
        bits.set(self.require_index(label)?);
        Ok(RingElem::from_bits(self.clone(), bits))
    }

    /// The atoms of P(X) — the singletons — in label order. Each is minimal
    /// nonzero under the partial order `leq`.
    pub fn atoms(&self) -> Vec<RingElem> {
        (0..self.size())
            .map(|i| {
                let mut bits = Bits::zeros(self.size());
                bits.set(i);
                RingElem::from_bits(self.clone(), bits)
            })
            .collect()
    }

    /// All 2^size elements in bit-vector value order. Exhaustive enumeration
    /// only; callers gate the size.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        assert!(self.size() <= 30, "element enumeration is desk-scale only");
        (0..(1u64 << self.size())).map(|mask| self.elem_from_mask(mask))
    }

    /// The subset whose members are the set bits of `mask`; requires size <= 64.
    pub(crate) fn elem_from_mask(&self, mask: u64) -> RingElem {
        RingElem::from_bits(self.clone(), Bits::from_low_u64(self.size(), mask))
    }
}

#[derive(Serialize, Deserialize)]
struct ElemRepr {
    ground: Vec<String>,
    members: Vec<String>,
}

impl From<RingElem> for ElemRepr {
    fn from(elem: RingElem) -> Self {
        ElemRepr {
            ground: elem.ground().labels().to_vec(),
            members: elem.members().into_iter().map(str::to_string).collect(),
        }
    }
}

impl TryFrom<ElemRepr> for RingElem {
    type Error = Error;

    fn try_from(repr: ElemRepr) -> Result<Self> {
        GroundSet::new(repr.ground)?.elem(repr.members)
    }
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElemRepr::from(self.clone()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElemRepr::deserialize(deserializer)?;
        RingElem::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn elem_sets_the_named_bits() {
        let g = g3();
        let u = g.elem(["a", "c"]).unwrap();
        assert_eq!(u.members(), vec!["a", "c"]);
        assert_eq!(u.bits().low_u64(), 0b101);
    }

    #[test]
    fn empty_member_set_is_zero() {
        let g = g3();
        assert_eq!(g.elem(Vec::<&str>::new()).unwrap(), g.zero());
    }

    #[test]
    fn unknown_member_rejected() {
        let err = g3().elem(["z"]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".to_string()));
    }

    #[test]
    fn add_is_symmetric_difference() {
        let g = g3();
        let ab = g.elem(["a", "b"]).unwrap();
        let bc = g.elem(["b", "c"]).unwrap();
        assert_eq!(ab.add(&bc).unwrap(), g.elem(["a", "c"]).unwrap());
    }

    #[test]
    fn characteristic_two() {
        let g = g3();
        for a in g.elements() {
            assert!(a.add(&a).unwrap().is_zero());
            assert_eq!(a.add(&g.zero()).unwrap(), a);
        }
    }

    #[test]
    fn mul_is_intersection_and_idempotent() {
        let g = g3();
        let ab = g.elem(["a", "b"]).unwrap();
        let bc = g.elem(["b", "c"]).unwrap();
        assert_eq!(ab.mul(&bc).unwrap(), g.elem(["b"]).unwrap());
        for a in g.elements() {
            assert_eq!(a.mul(&a).unwrap(), a);
            assert_eq!(a.mul(&g.one()).unwrap(), a);
        }
    }

    #[test]
    fn complement_cases() {
        let g = g3();
        let a = g.elem(["a"]).unwrap();
        assert_eq!(a.complement(), g.elem(["b", "c"]).unwrap());
        assert_eq!(g.zero().complement(), g.one());
        assert_eq!(g.one().complement(), g.zero());
        // b' = 1 - b = 1 + b in characteristic 2
        assert_eq!(a.complement(), g.one().add(&a).unwrap());
        assert!(a.mul(&a.complement()).unwrap().is_zero());
        assert!(a.add(&a.complement()).unwrap().is_one());
    }

    #[test]
    fn leq_is_subset_containment() {
        let g = g3();
        let a = g.elem(["a"]).unwrap();
        let ab = g.elem(["a", "b"]).unwrap();
        assert!(a.leq(&ab).unwrap());
        assert!(!ab.leq(&a).unwrap());
        for u in g.elements() {
            assert!(g.zero().leq(&u).unwrap());
        }
    }

    #[test]
    fn atoms_are_singletons_in_label_order() {
        let g = g3();
        let atoms = g.atoms();
        assert_eq!(atoms.len(), 3);
        assert_eq!(atoms[0], g.elem(["a"]).unwrap());
        assert_eq!(atoms[1], g.elem(["b"]).unwrap());
        assert_eq!(atoms[2], g.elem(["c"]).unwrap());

        let empty = GroundSet::new(Vec::<String>::new()).unwrap();
        assert!(empty.atoms().is_empty());

        let g1 = GroundSet::new(["x"]).unwrap();
        assert_eq!(g1.atoms(), vec![g1.one()]);
    }

    #[test]
    fn char_eval_cases() {
        let g = g3();
        let a = g.elem(["a"]).unwrap();
        assert_eq!(a.char_eval("a").unwrap(), 1);
        assert_eq!(g.zero().char_eval("a").unwrap(), 0);
        assert_eq!(g.elem(["b", "c"]).unwrap().char_eval("a").unwrap(), 0);
        assert!(a.char_eval("z").is_err());
    }

    #[test]
    fn ground_mismatch_is_rejected() {
        let g = g3();
        let h = GroundSet::new(["x", "y"]).unwrap();
        let a = g.elem(["a"]).unwrap();
        let x = h.elem(["x"]).unwrap();
        assert_eq!(a.add(&x).unwrap_err(), Error::GroundMismatch);
        assert_eq!(a.mul(&x).unwrap_err(), Error::GroundMismatch);
        assert_eq!(a.leq(&x).unwrap_err(), Error::GroundMismatch);
    }

    #[test]
    fn zero_ring_has_zero_equal_one() {
        let g = GroundSet::new(Vec::<String>::new()).unwrap();
        let z = g.zero();
        assert!(z.is_zero() && z.is_one());
        assert_eq!(z.add(&z).unwrap(), z);
        assert_eq!(z.mul(&z).unwrap(), z);
        assert_eq!(z.complement(), z);
    }

    #[test]
    fn wide_grounds_use_multiple_words() {
        let labels: Vec<String> = (0..130).map(|i| format!("x{i}")).collect();
        let g = GroundSet::new(labels).unwrap();
        let a = g.elem(["x0", "x64", "x129"]).unwrap();
        assert_eq!(a.count(), 3);
        assert_eq!(a.complement().count(), 127);
        assert!(a.leq(&g.one()).unwrap());
        assert_eq!(a.add(&a).unwrap(), g.zero());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let g = g3();
        let u = g.elem(["a", "c"]).unwrap();
        let text = serde_json::to_string(&u).unwrap();
        assert_eq!(text, r#"{"ground":["a","b","c"],"members":["a","c"]}"#);
        let back: RingElem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, u);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn json_rejects_members_outside_ground() {
        let bad = r#"{"ground":["a","b"],"members":["z"]}"#;
        assert!(serde_json::from_str::<RingElem>(bad).is_err());
    }
}
