use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::elem::RingElem;
use crate::ideal::Ideal;

/// A maximal ideal m_x = P(X − {x}) together with the point x it omits.
///
/// Distinct points give distinct ideals: {x} ∈ m_y for y ≠ x but {x} ∉ m_x.
#[derive(Clone, PartialEq, Eq)]
pub struct MaxIdealDescriptor {
    point: String,
    ideal: Ideal,
}

impl MaxIdealDescriptor {
    /// The maximal ideal omitting `label`, generated by the complement of the
    /// atom {label}.
    pub fn new(ground: &GroundSet, label: &str) -> Result<Self> {
        let atom = ground.singleton(label)?;
        Ok(MaxIdealDescriptor {
            point: label.to_string(),
            ideal: Ideal::principal(atom.complement()),
        })
    }

    pub fn point(&self) -> &str {
        &self.point
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

impl fmt::Debug for MaxIdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m_{} = {}", self.point, self.ideal)
    }
}

/// The maximal spectrum of P(X): one m_x per point, in label order. Every
/// maximal ideal of a finite power-set ring arises this way.
pub fn maximal_ideals(ground: &GroundSet) -> Result<Vec<MaxIdealDescriptor>> {
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    ground
        .labels()
        .iter()
        .map(|label| MaxIdealDescriptor::new(ground, label))
        .collect()
}

/// An intersection of maximal ideals presented for a target ideal, with
/// certification flags.
///
/// `verified` records that the factor intersection was recomputed and equals
/// the target; `reduced` records pairwise-distinct factors none of which
/// contains the intersection of the others.
#[derive(Clone, PartialEq, Eq)]
pub struct Decomposition {
    target: Ideal,
    factors: Vec<MaxIdealDescriptor>,
    reduced: bool,
    verified: bool,
}

impl Decomposition {
    /// An uncertified decomposition candidate; both flags start false.
    pub fn new(target: Ideal, factors: Vec<MaxIdealDescriptor>) -> Result<Self> {
        for f in &factors {
            if f.ideal().ground() != target.ground() {
                return Err(Error::GroundMismatch);
            }
        }
        Ok(Decomposition {
            target,
            factors,
            reduced: false,
            verified: false,
        })
    }

    pub fn target(&self) -> &Ideal {
        &self.target
    }

    pub fn factors(&self) -> &[MaxIdealDescriptor] {
        &self.factors
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Intersection of the factor ideals; the empty intersection is the unit
    /// ideal R by convention.
    pub fn intersection(&self) -> Ideal {
        let mut acc = Ideal::unit(self.target.ground());
        for f in &self.factors {
            acc = acc
                .intersect(f.ideal())
                .expect("factors share the target ground");
        }
        acc
    }

    /// Recomputes the factor intersection, compares it with the target, and
    /// writes the `verified` flag.
    pub fn verify_intersection(&mut self) -> bool {
        self.verified = self.intersection() == self.target;
        self.verified
    }

    /// Checks irredundancy on a verified decomposition and writes the
    /// `reduced` flag: factors pairwise distinct, and for each k the
    /// intersection of the others is not contained in factor k.
    pub fn certify_reduced(&mut self) -> Result<bool> {
        if !self.verified {
            return Err(Error::UnverifiedDecomposition);
        }
        self.reduced = self.check_reduced()?;
        Ok(self.reduced)
    }

    fn check_reduced(&self) -> Result<bool> {
        for (i, f) in self.factors.iter().enumerate() {
            for g in &self.factors[i + 1..] {
                if f.ideal() == g.ideal() {
                    return Ok(false);
                }
            }
        }
        for (k, f) in self.factors.iter().enumerate() {
            let mut rest = Ideal::unit(self.target.ground());
            for (j, g) in self.factors.iter().enumerate() {
                if j != k {
                    rest = rest.intersect(g.ideal())?;
                }
            }
            if f.ideal().contains_ideal(&rest)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let points: Vec<&str> = self.factors.iter().map(|d| d.point()).collect();
        write!(
            f,
            "Decomposition({} = ∩{{m_{}}}; reduced={}, verified={})",
            self.target,
            points.join(", m_"),
            self.reduced,
            self.verified
        )
    }
}

/// The reduced primary decomposition of a proper ideal: the intersection of
/// exactly those m_x that contain it, i.e. the points outside the principal
/// generator, in label order.
///
/// The result is certified: the intersection is recomputed against the target
/// and irredundancy is checked, so both flags are true on return.
pub fn decompose(ideal: &Ideal) -> Result<Decomposition> {
    let ground = ideal.ground();
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let factors = ground
        .labels()
        .iter()
        .filter(|label| ideal.principal_gen().char_eval(label).unwrap() == 0)
        .map(|label| MaxIdealDescriptor::new(ground, label))
        .collect::<Result<Vec<_>>>()?;
    let mut decomposition = Decomposition::new(ideal.clone(), factors)?;
    decomposition.verify_intersection();
    decomposition.certify_reduced()?;
    Ok(decomposition)
}

/// Least index k with factors[k] ⊆ p, for a prime p containing the
/// intersection of the factors. Such a k always exists: were every factor to
/// miss p, a product of witnesses would lie in the intersection but not in p.
pub fn contained_factor_index(p: &Ideal, factors: &[Ideal]) -> Result<usize> {
    if !p.is_prime()? {
        return Err(Error::NotPrime);
    }
    let mut intersection = Ideal::unit(p.ground());
    for f in factors {
        intersection = intersection.intersect(f)?;
    }
    if !p.contains_ideal(&intersection)? {
        return Err(Error::HypothesisFailed);
    }
    for (k, f) in factors.iter().enumerate() {
        if p.contains_ideal(f)? {
            return Ok(k);
        }
    }
    unreachable!("a prime containing an intersection contains one of the factors")
}

/// Exhaustively searches the subfamilies of the maximal spectrum for reduced
/// decompositions whose intersection equals the given proper ideal.
///
/// Maximal ideals are the only primary ideals of a Boolean ring, so the
/// search space covers every candidate primary decomposition. Results come in
/// a canonical order (subfamilies by ascending bitmask over the label order);
/// the expected outcome, asserted by the verification suites, is a single
/// entry equal to `decompose(ideal)`.
pub fn search_reduced_decompositions(ideal: &Ideal, bound: usize) -> Result<Vec<Decomposition>> {
    let ground = ideal.ground();
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    if ground.size() > bound {
        return Err(Error::OracleBoundExceeded {
            size: ground.size(),
            bound,
        });
    }
    let spectrum = maximal_ideals(ground)?;
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << spectrum.len()) {
        let family: Vec<MaxIdealDescriptor> = spectrum
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, d)| d.clone())
            .collect();
        let mut candidate = Decomposition::new(ideal.clone(), family)?;
        if candidate.verify_intersection() && candidate.certify_reduced()? {
            found.push(candidate);
        }
    }
    Ok(found)
}

impl Serialize for MaxIdealDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MaxIdealDescriptor", 2)?;
        s.serialize_field("point", &self.point)?;
        s.serialize_field("principal", self.ideal.principal_gen())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for MaxIdealDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            point: String,
            principal: RingElem,
        }
        let repr = Repr::deserialize(deserializer)?;
        let descriptor = MaxIdealDescriptor::new(repr.principal.ground(), &repr.point)
            .map_err(serde::de::Error::custom)?;
        if *descriptor.ideal().principal_gen() != repr.principal {
            return Err(serde::de::Error::custom(
                "principal generator is not the complement of the point's atom",
            ));
        }
        Ok(descriptor)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Decomposition", 4)?;
        s.serialize_field("target", &self.target)?;
        s.serialize_field("factors", &self.factors)?;
        s.serialize_field("reduced", &self.reduced)?;
        s.serialize_field("verified", &self.verified)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            target: Ideal,
            factors: Vec<MaxIdealDescriptor>,
            reduced: bool,
            verified: bool,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut decomposition =
            Decomposition::new(repr.target, repr.factors).map_err(serde::de::Error::custom)?;
        if repr.verified && !decomposition.verify_intersection() {
            return Err(serde::de::Error::custom(
                "decomposition marked verified but the intersection differs from the target",
            ));
        }
        if repr.reduced {
            match decomposition.certify_reduced() {
                Ok(true) => {}
                _ => {
                    return Err(serde::de::Error::custom(
                        "decomposition marked reduced but fails the irredundancy check",
                    ))
                }
            }
        }
        Ok(decomposition)
    }
}
