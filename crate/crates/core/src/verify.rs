//! Definitional cross-checks and the runnable verification suites.
//!
//! The predicates and constructions elsewhere in this crate take shortcuts
//! justified by Boolean-ring facts: radicals are identities, primary, prime
//! and maximal coincide, generator lists reduce to their union. The oracles
//! here recompute the same answers from the raw definitions — quantifying
//! over element pairs, closing generator sets by hand, filtering all subsets
//! of the ring — and never call the fast path they check. `run_all` executes
//! every suite at the configured bounds and reports per-suite check counts;
//! the CLI's `verify all` command is a thin wrapper around it.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fincof::{witness_nonzero, FinCofElem};
use crate::generic::GenericBoolRing;
use crate::ground::GroundSet;
use crate::elem::RingElem;
use crate::ideal::{enumerate_ideals_bounded, Ideal, ORACLE_HARD_CAP};
use crate::intdemo::{divisibility_cross_check, prime_power_factors};
use crate::quotient::{from_function_table, quotient, to_function_table};
use crate::spectrum::{
    contained_factor_index, decompose, maximal_ideals, search_reduced_decompositions,
};

/// n-th power by honest repeated multiplication.
pub fn power(a: &RingElem, n: u32) -> RingElem {
    assert!(n >= 1);
    let mut acc = a.clone();
    for _ in 1..n {
        acc = acc.mul(a).expect("same ground");
    }
    acc
}

/// The element set of the ideal generated by `gens`, computed by closing
/// {0} ∪ gens under addition and under multiplication by every ring element.
pub fn span_by_definition(ground: &GroundSet, gens: &[RingElem]) -> Result<BTreeSet<RingElem>> {
    if ground.size() > ORACLE_HARD_CAP {
        return Err(Error::OracleBoundExceeded {
            size: ground.size(),
            bound: ORACLE_HARD_CAP,
        });
    }
    for g in gens {
        if g.ground() != ground {
            return Err(Error::GroundMismatch);
        }
    }
    let ring: Vec<RingElem> = ground.elements().collect();
    let mut span: BTreeSet<RingElem> = BTreeSet::new();
    span.insert(ground.zero());
    span.extend(gens.iter().cloned());
    loop {
        let mut next = span.clone();
        for a in &span {
            for b in &span {
                next.insert(a.add(b)?);
            }
            for r in &ring {
                next.insert(a.mul(r)?);
            }
        }
        if next.len() == span.len() {
            return Ok(span);
        }
        span = next;
    }
}

/// A power-set ring with tabulated index arithmetic, small enough to filter
/// all 2^(2^n) subsets. Element index i is the subset whose member bit-mask
/// is i, in bit-vector value order.
struct SmallRing {
    elems: Vec<RingElem>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl SmallRing {
    fn new(ground: &GroundSet) -> Result<Self> {
        if ground.size() > 4 {
            return Err(Error::OracleBoundExceeded {
                size: ground.size(),
                bound: 4,
            });
        }
        let elems: Vec<RingElem> = ground.elements().collect();
        // elements come in bit-vector value order, so the value is the index
        let index_of = |e: &RingElem| e.bits().low_u64() as usize;
        let mut add = vec![vec![0; elems.len()]; elems.len()];
        let mut mul = vec![vec![0; elems.len()]; elems.len()];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i][j] = index_of(&a.add(b)?);
                mul[i][j] = index_of(&a.mul(b)?);
            }
        }
        Ok(SmallRing { elems, add, mul })
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    /// Nonempty, closed under addition, absorbing under multiplication.
    fn is_ideal_mask(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let contains = |i: usize| mask >> i & 1 == 1;
        for i in 0..self.len() {
            if !contains(i) {
                continue;
            }
            for j in 0..self.len() {
                if contains(j) && !contains(self.add[i][j]) {
                    return false;
                }
                if !contains(self.mul[i][j]) {
                    return false;
                }
            }
        }
        true
    }

    fn all_ideal_masks(&self) -> Vec<u32> {
        (0u32..(1u32 << self.len()))
            .filter(|&mask| self.is_ideal_mask(mask))
            .collect()
    }

    fn mask_of(&self, set: &BTreeSet<RingElem>) -> u32 {
        let mut mask = 0u32;
        for (i, e) in self.elems.iter().enumerate() {
            if set.contains(e) {
                mask |= 1 << i;
            }
        }
        mask
    }

    fn set_of(&self, mask: u32) -> BTreeSet<RingElem> {
        self.elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect()
    }
}

/// Every subset of P(X) that is an ideal by definition, found by filtering
/// all 2^(2^n) candidate subsets for additive closure and absorption.
pub fn ideal_sets_by_definition(ground: &GroundSet) -> Result<Vec<BTreeSet<RingElem>>> {
    let ring = SmallRing::new(ground)?;
    Ok(ring
        .all_ideal_masks()
        .into_iter()
        .map(|mask| ring.set_of(mask))
        .collect())
}

/// Quantifies the prime condition over all element pairs: ab ∈ I and a ∉ I
/// imply b ∈ I, for a proper I. Membership comes from the definitional span
/// of the original generators, not from the canonical form.
pub fn is_prime_by_definition(ideal: &Ideal) -> Result<bool> {
    let ground = ideal.ground();
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let span = span_by_definition(ground, ideal.generators())?;
    if span.len() == 1 << ground.size() {
        return Ok(false); // not proper
    }
    for a in ground.elements() {
        for b in ground.elements() {
            if span.contains(&a.mul(&b)?) && !span.contains(&a) && !span.contains(&b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Quantifies the primary condition over all element pairs: ab ∈ I and
/// a ∉ I imply bⁿ ∈ I for some n > 0, with powers computed by repeated
/// multiplication.
pub fn is_primary_by_definition(ideal: &Ideal) -> Result<bool> {
    let ground = ideal.ground();
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let span = span_by_definition(ground, ideal.generators())?;
    if span.len() == 1 << ground.size() {
        return Ok(false);
    }
    let max_power = (1u32 << ground.size()) + 1;
    for a in ground.elements() {
        for b in ground.elements() {
            if span.contains(&a.mul(&b)?) && !span.contains(&a) {
                let some_power_inside =
                    (1..=max_power).any(|n| span.contains(&power(&b, n)));
                if !some_power_inside {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Quantifies maximality over every ideal-by-definition: proper, and no
/// ideal sits strictly between it and the whole ring.
pub fn is_maximal_by_definition(ideal: &Ideal) -> Result<bool> {
    let ground = ideal.ground();
    if ground.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let ring = SmallRing::new(ground)?;
    let span = span_by_definition(ground, ideal.generators())?;
    let own = ring.mask_of(&span);
    let full = (1u32 << ring.len()) - 1;
    if own == full {
        return Ok(false);
    }
    for other in ring.all_ideal_masks() {
        let contains_own = own & other == own;
        if contains_own && other != own && other != full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// { x : xⁿ ∈ I for some n > 0 }, with powers computed honestly.
pub fn radical_set_by_definition(ideal: &Ideal) -> Result<BTreeSet<RingElem>> {
    let ground = ideal.ground();
    let span = span_by_definition(ground, ideal.generators())?;
    let max_power = (1u32 << ground.size()) + 1;
    Ok(ground
        .elements()
        .filter(|x| (1..=max_power).any(|n| span.contains(&power(x, n))))
        .collect())
}

/// Coefficients cₖ = ∏_{j>k}(1 + gⱼ) with Σ cₖ·gₖ equal to the reduction
/// fold of the generators: the explicit linear-combination witness that the
/// principal generator lies in (g₁, ..., gₙ).
pub fn combination_witness(ground: &GroundSet, gens: &[RingElem]) -> Result<Vec<RingElem>> {
    let mut coefficients = vec![ground.one(); gens.len()];
    for k in 0..gens.len() {
        for g in &gens[k + 1..] {
            coefficients[k] = coefficients[k].mul(&ground.one().add(g)?)?;
        }
    }
    Ok(coefficients)
}

/// Bounds and seed for `run_all`.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Ground-size cap for the exhaustive suites (hard-capped internally
    /// where a check is doubly exponential).
    pub oracle_bound: usize,
    /// Seed for the randomized suites; fixed default keeps runs reproducible.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            oracle_bound: crate::ideal::DEFAULT_ORACLE_BOUND,
            seed: 0xb001_ea0,
        }
    }
}

/// Outcome of one named suite: how many individual checks passed and failed.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            passed: 0,
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

/// Results of every suite, in execution order.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn total_passed(&self) -> u64 {
        self.suites.iter().map(|s| s.passed).sum()
    }

    pub fn total_failed(&self) -> u64 {
        self.suites.iter().map(|s| s.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.total_failed() == 0
    }
}

fn test_ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("x{i}"))).expect("generated labels are distinct")
}

fn random_elem(ground: &GroundSet, rng: &mut ChaCha8Rng) -> RingElem {
    let mask = if ground.size() == 64 {
        rng.random::<u64>()
    } else {
        rng.random::<u64>() & ((1u64 << ground.size()) - 1)
    };
    ground.elem_from_mask(mask)
}

/// Runs every verification suite and collects the per-suite counts.
pub fn run_all(config: &VerifyConfig) -> VerifyReport {
    let suites = vec![
        ring_axioms_exhaustive(config),
        ring_axioms_random(config),
        evaluation_and_units(config),
        reduction_soundness(config),
        principal_membership(config),
        radical_fixed_point(config),
        predicate_oracle_agreement(config),
        product_equals_intersection(config),
        ideal_enumeration_filter(config),
        covering_maximals_meet_back(config),
        zero_ideal_factor_per_point(config),
        prime_over_intersection(config),
        decomposition_uniqueness(config),
        integer_intersection_demo(config),
        quotient_kernel_bijection(config),
        characteristic_table_isomorphism(config),
        generic_ring_laws(config),
        atom_identification(config),
        fincof_pointwise(config),
        fincof_ideal_and_witnesses(config),
    ];
    VerifyReport { suites }
}

fn ring_axioms_exhaustive(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("ring axioms (exhaustive, small grounds)");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        let elems: Vec<RingElem> = g.elements().collect();
        for a in &elems {
            suite.check(a.add(&g.zero()).unwrap() == *a);
            suite.check(a.mul(&g.one()).unwrap() == *a);
            suite.check(a.add(a).unwrap().is_zero());
            // n-fold products collapse to the element itself
            for k in 1..=5u32 {
                suite.check(power(a, k) == *a);
            }
            suite.check(a.mul(&a.complement()).unwrap().is_zero());
            suite.check(a.add(&a.complement()).unwrap().is_one());
            suite.check(a.leq(a).unwrap());
            for b in &elems {
                suite.check(a.add(b).unwrap() == b.add(a).unwrap());
                suite.check(a.mul(b).unwrap() == b.mul(a).unwrap());
                // ⪯ is antisymmetric and coincides with its definition ab = a
                suite.check(a.leq(b).unwrap() == (a.mul(b).unwrap() == *a));
                if a.leq(b).unwrap() && b.leq(a).unwrap() {
                    suite.check(a == b);
                }
                for c in &elems {
                    suite.check(
                        a.add(b).unwrap().add(c).unwrap() == a.add(&b.add(c).unwrap()).unwrap(),
                    );
                    suite.check(
                        a.mul(b).unwrap().mul(c).unwrap() == a.mul(&b.mul(c).unwrap()).unwrap(),
                    );
                    suite.check(
                        a.mul(&b.add(c).unwrap()).unwrap()
                            == a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap(),
                    );
                    if a.leq(b).unwrap() && b.leq(c).unwrap() {
                        suite.check(a.leq(c).unwrap());
                    }
                }
            }
        }
    }
    suite
}

fn ring_axioms_random(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("ring axioms (random, ground size 64)");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let g = test_ground(64);
    for _ in 0..10_000 {
        let a = random_elem(&g, &mut rng);
        let b = random_elem(&g, &mut rng);
        suite.check(a.add(&a).unwrap().is_zero());
        suite.check(a.mul(&b).unwrap() == b.mul(&a).unwrap());
        suite.check(a.mul(&a).unwrap() == a);
    }
    for _ in 0..2_000 {
        let a = random_elem(&g, &mut rng);
        let b = random_elem(&g, &mut rng);
        let c = random_elem(&g, &mut rng);
        suite.check(a.add(&b).unwrap().add(&c).unwrap() == a.add(&b.add(&c).unwrap()).unwrap());
        suite.check(
            a.mul(&b.add(&c).unwrap()).unwrap()
                == a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap(),
        );
    }
    suite
}

fn evaluation_and_units(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("evaluation homomorphisms and units (exhaustive)");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        let elems: Vec<RingElem> = g.elements().collect();
        for label in g.labels() {
            suite.check(g.singleton(label).unwrap().char_eval(label).unwrap() == 1);
            suite.check(g.zero().char_eval(label).unwrap() == 0);
            for a in &elems {
                for b in &elems {
                    let eval = |e: &RingElem| e.char_eval(label).unwrap();
                    suite.check(eval(&a.add(b).unwrap()) == eval(a) ^ eval(b));
                    suite.check(eval(&a.mul(b).unwrap()) == eval(a) & eval(b));
                }
            }
        }
        // the only unit is 1 = X
        for a in &elems {
            for b in &elems {
                if a.mul(b).unwrap().is_one() {
                    suite.check(a.is_one() && b.is_one());
                }
            }
        }
    }
    suite
}

fn reduction_soundness(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("generator reduction soundness (random)");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x9e37);
    for _ in 0..1_000 {
        let n = rng.random_range(1..=16usize);
        let g = test_ground(n);
        let len = rng.random_range(0..=6usize);
        let gens: Vec<RingElem> = (0..len).map(|_| random_elem(&g, &mut rng)).collect();
        let ideal = Ideal::from_generators(&g, gens.clone()).unwrap();

        // the canonical generator is the union of the generators
        let mut union = g.zero();
        for gen in &gens {
            union = union.union(gen).unwrap();
        }
        suite.check(*ideal.principal_gen() == union);

        // each generator belongs to the reduced ideal
        suite.check(gens.iter().all(|gen| ideal.contains(gen).unwrap()));

        // and the canonical generator is an explicit linear combination
        let coefficients = combination_witness(&g, &gens).unwrap();
        let mut combination = g.zero();
        for (c, gen) in coefficients.iter().zip(&gens) {
            combination = combination.add(&c.mul(gen).unwrap()).unwrap();
        }
        suite.check(combination == *ideal.principal_gen());
    }
    suite
}

fn principal_membership(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("principal membership = subsets of the generator (exhaustive)");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        for a in g.elements() {
            let ideal = Ideal::principal(a.clone());
            // definitional membership: b ∈ (a) iff b = ba
            for b in g.elements() {
                let definitional = b.mul(&a).unwrap() == b;
                suite.check(ideal.contains(&b).unwrap() == definitional);
                suite.check(ideal.contains(&b).unwrap() == b.leq(&a).unwrap());
            }
            // the span oracle recovers exactly the subsets of the generator
            let span = span_by_definition(&g, std::slice::from_ref(&a)).unwrap();
            let subsets: BTreeSet<RingElem> =
                g.elements().filter(|b| b.leq(&a).unwrap()).collect();
            suite.check(span == subsets);
        }
    }
    suite
}

fn radical_fixed_point(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("radical fixed point (definitional)");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        for ideal in enumerate_ideals_bounded(&g, 4).unwrap() {
            suite.check(ideal.radical() == ideal);
            let radical_set = radical_set_by_definition(&ideal).unwrap();
            let own_set = span_by_definition(&g, ideal.generators()).unwrap();
            suite.check(radical_set == own_set);
        }
    }
    suite
}

fn predicate_oracle_agreement(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("primary/prime/maximal agreement (definitional oracle)");
    let top = config.oracle_bound.min(4);
    for n in 1..=top {
        let g = test_ground(n);
        for ideal in enumerate_ideals_bounded(&g, 4).unwrap() {
            let maximal = ideal.is_maximal().unwrap();
            let prime = ideal.is_prime().unwrap();
            let primary = ideal.is_primary().unwrap();
            suite.check(prime == maximal && primary == maximal);
            suite.check(is_prime_by_definition(&ideal).unwrap() == prime);
            suite.check(is_primary_by_definition(&ideal).unwrap() == primary);
            suite.check(is_maximal_by_definition(&ideal).unwrap() == maximal);
        }
    }
    suite
}

fn product_equals_intersection(_config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("ideal product = ideal intersection (exhaustive)");
    for n in 0..=3usize {
        let g = test_ground(n);
        let ideals = enumerate_ideals_bounded(&g, 3).unwrap();
        for i in &ideals {
            for j in &ideals {
                suite.check(i.product(j).unwrap() == i.intersect(j).unwrap());
            }
        }
    }
    suite
}

fn ideal_enumeration_filter(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("ideal enumeration vs subset-closure filter");
    let top = config.oracle_bound.min(3);
    for n in 0..=top {
        let g = test_ground(n);
        let enumerated = enumerate_ideals_bounded(&g, 3).unwrap();
        suite.check(enumerated.len() == 1 << n);

        let definitional: BTreeSet<BTreeSet<RingElem>> =
            ideal_sets_by_definition(&g).unwrap().into_iter().collect();
        let from_enumeration: BTreeSet<BTreeSet<RingElem>> = enumerated
            .iter()
            .map(|ideal| {
                g.elements()
                    .filter(|b| ideal.contains(b).unwrap())
                    .collect()
            })
            .collect();
        suite.check(definitional == from_enumeration);
        suite.check(definitional.len() == 1 << n);
    }
    suite
}

fn covering_maximals_meet_back(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("ideals meet back from their covering maximals");
    let top = config.oracle_bound.min(4);
    for n in 1..=top {
        let g = test_ground(n);
        let spectrum = maximal_ideals(&g).unwrap();
        for ideal in enumerate_ideals_bounded(&g, 4).unwrap() {
            // brute-force elementwise: in every covering maximal ⟺ in the ideal
            for b in g.elements() {
                let in_all_covering = spectrum
                    .iter()
                    .filter(|m| m.ideal().contains_ideal(&ideal).unwrap())
                    .all(|m| m.ideal().contains(&b).unwrap());
                suite.check(in_all_covering == ideal.contains(&b).unwrap());
            }
            if ideal.is_proper() {
                let d = decompose(&ideal).unwrap();
                suite.check(d.is_verified() && d.is_reduced());
                suite.check(d.intersection() == ideal);
                suite.check(
                    d.factors().len() == g.size() - ideal.principal_gen().count(),
                );
            }
        }
    }
    suite
}

fn zero_ideal_factor_per_point(_config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("zero ideal: one factor per point (sizes 1..10)");
    for n in 1..=10usize {
        let g = test_ground(n);
        let d = decompose(&Ideal::zero(&g)).unwrap();
        suite.check(d.factors().len() == n);
        suite.check(d.is_verified() && d.is_reduced());
        let distinct: BTreeSet<&RingElem> = d
            .factors()
            .iter()
            .map(|f| f.ideal().principal_gen())
            .collect();
        suite.check(distinct.len() == n);
        // elementwise: only the empty set lies in every factor
        for b in g.elements() {
            let in_all = d.factors().iter().all(|f| f.ideal().contains(&b).unwrap());
            suite.check(in_all == b.is_zero());
        }
    }
    suite
}

fn prime_over_intersection(_config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("prime over an intersection contains a factor (exhaustive)");
    for n in 1..=3usize {
        let g = test_ground(n);
        let ideals = enumerate_ideals_bounded(&g, 3).unwrap();
        let primes: Vec<Ideal> = ideals
            .iter()
            .filter(|i| i.is_prime().unwrap())
            .cloned()
            .collect();
        let mut families: Vec<Vec<Ideal>> = Vec::new();
        for i in &ideals {
            families.push(vec![i.clone()]);
            for j in &ideals {
                families.push(vec![i.clone(), j.clone()]);
                for k in &ideals {
                    families.push(vec![i.clone(), j.clone(), k.clone()]);
                }
            }
        }
        for p in &primes {
            for family in &families {
                let mut intersection = Ideal::unit(&g);
                for f in family {
                    intersection = intersection.intersect(f).unwrap();
                }
                let hypothesis = p.contains_ideal(&intersection).unwrap();
                match contained_factor_index(p, family) {
                    Ok(k) => {
                        suite.check(hypothesis);
                        suite.check(p.contains_ideal(&family[k]).unwrap());
                        suite.check(
                            family[..k].iter().all(|f| !p.contains_ideal(f).unwrap()),
                        );
                    }
                    Err(Error::HypothesisFailed) => suite.check(!hypothesis),
                    Err(_) => suite.check(false),
                }
            }
        }
    }
    suite
}

fn decomposition_uniqueness(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("decomposition uniqueness by exhaustive search");
    let top = config.oracle_bound.min(4);
    for n in 1..=top {
        let g = test_ground(n);
        for ideal in enumerate_ideals_bounded(&g, 4).unwrap() {
            if !ideal.is_proper() {
                continue;
            }
            let found = search_reduced_decompositions(&ideal, 4).unwrap();
            suite.check(found.len() == 1);
            let canonical = decompose(&ideal).unwrap();
            suite.check(found[0].factors() == canonical.factors());
        }
    }
    suite
}

fn integer_intersection_demo(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("prime-power intersection demo over the integers");
    suite.check(prime_power_factors(360).unwrap() == vec![8, 9, 5]);
    suite.check(prime_power_factors(7).unwrap() == vec![7]);
    suite.check(prime_power_factors(100).unwrap() == vec![4, 25]);
    suite.check(divisibility_cross_check(360, 10_000).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x1234);
    for _ in 0..200 {
        let m = rng.random_range(2..=100_000u64);
        let factors = prime_power_factors(m).unwrap();
        suite.check(factors.iter().product::<u64>() == m);
        let pairwise_coprime = factors.iter().enumerate().all(|(i, &a)| {
            factors[i + 1..].iter().all(|&b| {
                let (mut x, mut y) = (a, b);
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                x == 1
            })
        });
        suite.check(pairwise_coprime);
    }
    suite
}

fn quotient_kernel_bijection(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("quotient projection: kernel and induced bijection");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        for modulus in g.elements() {
            let q = quotient(&g, &modulus).unwrap();
            let kernel = q.kernel();
            let mut images = BTreeSet::new();
            for u in g.elements() {
                images.insert(q.project(&u).unwrap());
                suite.check(q.project(&u).unwrap().is_zero() == kernel.contains(&u).unwrap());
                for v in g.elements() {
                    suite.check(
                        q.project(&u.add(&v).unwrap()).unwrap()
                            == q.project(&u).unwrap().add(&q.project(&v).unwrap()).unwrap(),
                    );
                    suite.check(
                        q.project(&u.mul(&v).unwrap()).unwrap()
                            == q.project(&u).unwrap().mul(&q.project(&v).unwrap()).unwrap(),
                    );
                    // cosets of the kernel biject with images
                    suite.check(
                        (q.project(&u).unwrap() == q.project(&v).unwrap())
                            == kernel.contains(&u.add(&v).unwrap()).unwrap(),
                    );
                }
            }
            // surjective onto P(X − A)
            suite.check(images.len() == 1 << q.target().size());
        }
    }
    suite
}

fn characteristic_table_isomorphism(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("characteristic-table isomorphism");
    let top = config.oracle_bound.min(4);
    for n in 0..=top {
        let g = test_ground(n);
        let mut tables = BTreeSet::new();
        for a in g.elements() {
            let table = to_function_table(&a);
            suite.check(from_function_table(&g, &table).unwrap() == a);
            tables.insert(table.clone());
            for (i, label) in g.labels().iter().enumerate() {
                suite.check(a.char_eval(label).unwrap() == table[i]);
            }
            for b in g.elements() {
                let sum_table = to_function_table(&a.add(&b).unwrap());
                let prod_table = to_function_table(&a.mul(&b).unwrap());
                let other = to_function_table(&b);
                let expect_sum: Vec<u8> =
                    table.iter().zip(&other).map(|(x, y)| x ^ y).collect();
                let expect_prod: Vec<u8> =
                    table.iter().zip(&other).map(|(x, y)| x & y).collect();
                suite.check(sum_table == expect_sum);
                suite.check(prod_table == expect_prod);
            }
        }
        suite.check(tables.len() == 1 << n);
        // kernel of evaluation at x is exactly the ideal omitting x
        for label in g.labels() {
            let m_x = Ideal::principal(g.singleton(label).unwrap().complement());
            for a in g.elements() {
                suite.check((a.char_eval(label).unwrap() == 0) == m_x.contains(&a).unwrap());
            }
        }
    }
    suite
}

fn generic_ring_laws(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("generic Boolean ring laws (random dimensions)");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xfeed);
    for _ in 0..10_000 {
        let dim = rng.random_range(1..=64usize);
        let r = GenericBoolRing::new(dim).unwrap();
        let a = rng.random::<u64>() & r.one();
        let b = rng.random::<u64>() & r.one();
        suite.check(r.add(a, a) == 0);
        suite.check(r.mul(a, b) == r.mul(b, a));
        suite.check(r.mul(a, a) == a);
        // two-generator reduction lands on the join
        suite.check(r.add(r.add(a, b), r.mul(a, b)) == (a | b));
    }
    for _ in 0..2_000 {
        let dim = rng.random_range(1..=64usize);
        let r = GenericBoolRing::new(dim).unwrap();
        let a = rng.random::<u64>() & r.one();
        let b = rng.random::<u64>() & r.one();
        let c = rng.random::<u64>() & r.one();
        suite.check(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        suite.check(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
    }
    suite
}

fn atom_identification(_config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("atom identification of generic rings");
    for dim in 0..=4usize {
        let r = GenericBoolRing::new(dim).unwrap();
        let map = r.stone_map().unwrap();
        let mut images = BTreeSet::new();
        for a in r.elements() {
            images.insert(map.apply(a));
            suite.check(map.preimage(&map.apply(a)).unwrap() == a);
            for b in r.elements() {
                suite.check(
                    map.apply(r.add(a, b)) == map.apply(a).add(&map.apply(b)).unwrap(),
                );
                suite.check(
                    map.apply(r.mul(a, b)) == map.apply(a).mul(&map.apply(b)).unwrap(),
                );
            }
        }
        suite.check(images.len() == 1 << dim);
    }
    // complements of atoms generate maximal ideals, witnessed through the map
    for dim in 1..=3usize {
        let r = GenericBoolRing::new(dim).unwrap();
        let map = r.stone_map().unwrap();
        for atom in r.find_atoms().unwrap() {
            let generator = r.maximal_principal_from_atom(atom).unwrap();
            let image = map.apply(generator);
            suite.check(image == map.apply(atom).complement());
            suite.check(Ideal::principal(image).is_maximal().unwrap());
        }
    }
    suite
}

fn fincof_pointwise(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("finite-cofinite pointwise arithmetic (random)");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xc0f1);
    let random_fincof = |rng: &mut ChaCha8Rng| {
        let size = rng.random_range(0..=8usize);
        let support: Vec<u64> = (0..size).map(|_| rng.random_range(0..24u64)).collect();
        if rng.random::<bool>() {
            FinCofElem::finite(support)
        } else {
            FinCofElem::cofinite(support)
        }
    };
    for _ in 0..10_000 {
        let a = random_fincof(&mut rng);
        let b = random_fincof(&mut rng);
        let sum = a.add(&b);
        let product = a.mul(&b);
        let hi = a.support().iter().chain(b.support()).max().copied().unwrap_or(0);
        for x in 0..=hi + 8 {
            suite.check(sum.member_point(x) == (a.member_point(x) ^ b.member_point(x)));
            suite.check(product.member_point(x) == (a.member_point(x) && b.member_point(x)));
        }
        suite.check(a.add(&a) == FinCofElem::zero());
        suite.check(a.mul(&a) == a);
        suite.check(a.mul(&b) == b.mul(&a));
        suite.check(a.complement().add(&a) == FinCofElem::one());
    }
    // evaluation at a fixed point is a homomorphism onto the two-element field
    for _ in 0..1_000 {
        let a = random_fincof(&mut rng);
        let b = random_fincof(&mut rng);
        let x = rng.random_range(0..32u64);
        suite.check(a.add(&b).member_point(x) == (a.member_point(x) ^ b.member_point(x)));
        suite.check(a.mul(&b).member_point(x) == (a.member_point(x) && b.member_point(x)));
    }
    suite
}

fn fincof_ideal_and_witnesses(config: &VerifyConfig) -> SuiteResult {
    let mut suite = SuiteResult::new("finite-cofinite ideal and nonzero witnesses");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xf17);

    // Fin is closed under addition, absorbs products, and misses 1
    suite.check(!FinCofElem::one().in_fin());
    for _ in 0..2_000 {
        let support_a: Vec<u64> = (0..rng.random_range(0..=8usize))
            .map(|_| rng.random_range(0..1_000u64))
            .collect();
        let support_b: Vec<u64> = (0..rng.random_range(0..=8usize))
            .map(|_| rng.random_range(0..1_000u64))
            .collect();
        let a = FinCofElem::finite(support_a);
        let other = if rng.random::<bool>() {
            FinCofElem::finite(support_b)
        } else {
            FinCofElem::cofinite(support_b)
        };
        if other.in_fin() {
            suite.check(a.add(&other).in_fin());
        }
        suite.check(a.mul(&other).in_fin());
        suite.check(other.mul(&a).in_fin());
    }

    // no finite subfamily of the point ideals meets to zero
    for _ in 0..1_000 {
        let size = rng.random_range(0..=100usize);
        let points: Vec<u64> = (0..size).map(|_| rng.random_range(0..1_000_000u64)).collect();
        let witness = witness_nonzero(points.iter().copied());
        suite.check(!witness.is_zero());
        suite.check(points.iter().all(|&x| witness.in_mx(x)));
    }

    // each point ideal is prime on this algebra
    for _ in 0..2_000 {
        let support_a: Vec<u64> = (0..rng.random_range(0..=6usize))
            .map(|_| rng.random_range(0..16u64))
            .collect();
        let support_b: Vec<u64> = (0..rng.random_range(0..=6usize))
            .map(|_| rng.random_range(0..16u64))
            .collect();
        let a = if rng.random::<bool>() {
            FinCofElem::finite(support_a)
        } else {
            FinCofElem::cofinite(support_a)
        };
        let b = if rng.random::<bool>() {
            FinCofElem::finite(support_b)
        } else {
            FinCofElem::cofinite(support_b)
        };
        let x = rng.random_range(0..20u64);
        if a.mul(&b).in_mx(x) && !a.in_mx(x) {
            suite.check(b.in_mx(x));
        } else {
            suite.check(true);
        }
    }
    suite
}
