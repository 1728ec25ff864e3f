//! Quotients P(X)/P(A) ≅ P(X − A) and the characteristic-function tables
//! realizing P(X) ≅ Fun(X, Z₂).

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::elem::RingElem;
use crate::ideal::Ideal;

/// The projection P(X) → P(X − A) that drops the members of A from each set.
///
/// It is a surjective ring homomorphism with kernel (A); the target ground
/// set keeps the source's label order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientMap {
    source: GroundSet,
    modulus: RingElem,
    target: GroundSet,
}

/// The quotient of P(X) by the principal ideal of `modulus`.
pub fn quotient(ground: &GroundSet, modulus: &RingElem) -> Result<QuotientMap> {
    if modulus.ground() != ground {
        return Err(Error::GroundMismatch);
    }
    let keep = modulus.complement();
    let target = GroundSet::new(keep.members())?;
    Ok(QuotientMap {
        source: ground.clone(),
        modulus: modulus.clone(),
        target,
    })
}

impl QuotientMap {
    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn modulus(&self) -> &RingElem {
        &self.modulus
    }

    /// The ground set X − A of the quotient ring.
    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    /// The kernel ideal (A).
    pub fn kernel(&self) -> Ideal {
        Ideal::principal(self.modulus.clone())
    }

    /// u ↦ u ∩ (X − A), re-indexed into the target ground set.
    pub fn project(&self, u: &RingElem) -> Result<RingElem> {
        if u.ground() != &self.source {
            return Err(Error::GroundMismatch);
        }
        let kept = u.mul(&self.modulus.complement())?;
        self.target.elem(kept.members())
    }
}

impl Serialize for QuotientMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuotientMap", 2)?;
        s.serialize_field("modulus", &self.modulus)?;
        s.serialize_field("target", self.target.labels())?;
        s.end()
    }
}

/// The characteristic function χ_A as a bit table indexed by label order.
pub fn to_function_table(a: &RingElem) -> Vec<u8> {
    a.ground()
        .labels()
        .iter()
        .map(|label| a.char_eval(label).unwrap())
        .collect()
}

/// Inverse of `to_function_table`: the subset whose members are the labels
/// with a nonzero table entry.
pub fn from_function_table(ground: &GroundSet, bits: &[u8]) -> Result<RingElem> {
    if bits.len() != ground.size() {
        return Err(Error::LengthMismatch {
            got: bits.len(),
            want: ground.size(),
        });
    }
    ground.elem(
        ground
            .labels()
            .iter()
            .zip(bits)
            .filter(|(_, &bit)| bit != 0)
            .map(|(label, _)| label),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn quotient_drops_the_modulus_labels() {
        let g = g3();
        let q = quotient(&g, &g.elem(["a"]).unwrap()).unwrap();
        assert_eq!(q.target().labels(), &["b", "c"]);
    }

    #[test]
    fn quotient_by_zero_is_the_identity() {
        let g = g3();
        let q = quotient(&g, &g.zero()).unwrap();
        assert_eq!(q.target().labels(), g.labels());
        for u in g.elements() {
            assert_eq!(q.project(&u).unwrap().members(), u.members());
        }
    }

    #[test]
    fn quotient_by_one_is_the_zero_ring() {
        let g = g3();
        let q = quotient(&g, &g.one()).unwrap();
        assert_eq!(q.target().size(), 0);
        assert!(q.project(&g.elem(["a", "b"]).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn projection_cases() {
        let g = g3();
        let q = quotient(&g, &g.elem(["a"]).unwrap()).unwrap();
        assert_eq!(
            q.project(&g.elem(["a", "b"]).unwrap()).unwrap(),
            q.target().elem(["b"]).unwrap()
        );
        assert!(q.project(&g.elem(["a"]).unwrap()).unwrap().is_zero());
        assert!(q.project(&g.one()).unwrap().is_one());
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_the_modulus_ideal() {
        let g = g3();
        let a = g.elem(["a", "c"]).unwrap();
        let q = quotient(&g, &a).unwrap();
        let kernel = q.kernel();
        for u in g.elements() {
            for v in g.elements() {
                let add_then = q.project(&u.add(&v).unwrap()).unwrap();
                let then_add = q.project(&u).unwrap().add(&q.project(&v).unwrap()).unwrap();
                assert_eq!(add_then, then_add);
                let mul_then = q.project(&u.mul(&v).unwrap()).unwrap();
                let then_mul = q.project(&u).unwrap().mul(&q.project(&v).unwrap()).unwrap();
                assert_eq!(mul_then, then_mul);
                // u and v agree in the quotient exactly when u + v ∈ (A).
                assert_eq!(
                    q.project(&u).unwrap() == q.project(&v).unwrap(),
                    kernel.contains(&u.add(&v).unwrap()).unwrap()
                );
            }
            assert_eq!(
                q.project(&u).unwrap().is_zero(),
                kernel.contains(&u).unwrap()
            );
        }
    }

    #[test]
    fn table_of_a_subset_reads_off_memberships() {
        let g = g3();
        assert_eq!(to_function_table(&g.elem(["a", "c"]).unwrap()), vec![1, 0, 1]);
        assert_eq!(from_function_table(&g, &[0, 0, 0]).unwrap(), g.zero());
    }

    #[test]
    fn tables_round_trip_on_all_elements() {
        let g = g3();
        for u in g.elements() {
            let table = to_function_table(&u);
            assert_eq!(from_function_table(&g, &table).unwrap(), u);
        }
    }

    #[test]
    fn table_length_is_checked() {
        let g = g3();
        assert_eq!(
            from_function_table(&g, &[1, 0]).unwrap_err(),
            Error::LengthMismatch { got: 2, want: 3 }
        );
    }

    #[test]
    fn quotient_json_shape() {
        let g = g3();
        let q = quotient(&g, &g.elem(["a"]).unwrap()).unwrap();
        let value = serde_json::to_value(&q).unwrap();
        assert_eq!(value["target"], serde_json::json!(["b", "c"]));
        assert_eq!(value["modulus"]["members"], serde_json::json!(["a"]));
    }
}
