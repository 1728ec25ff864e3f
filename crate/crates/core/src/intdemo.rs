//! The integer warm-up: (m) = (p₁^e₁) ∩ ... ∩ (pₖ^eₖ) in ℤ, mirroring at the
//! level of elements what the Boolean-ring machinery does for ideals.

use crate::error::{Error, Result};

/// Largest accepted input; trial division is meant for pedagogy, not scale.
pub const PRIME_POWER_MAX: u64 = 1_000_000_000_000;

/// The prime-power factors p^e of m in increasing prime order, so that
/// (m) is the intersection of the (p^e).
pub fn prime_power_factors(m: u64) -> Result<Vec<u64>> {
    if m < 2 || m > PRIME_POWER_MAX {
        return Err(Error::OutOfRange(m));
    }
    let mut factors = Vec::new();
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut power = 1u64;
            while rest % p == 0 {
                power *= p;
                rest /= p;
            }
            factors.push(power);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push(rest);
    }
    debug_assert_eq!(factors.iter().product::<u64>(), m);
    Ok(factors)
}

/// Confirms that k ≡ 0 (mod m) exactly when k ≡ 0 (mod p^e) for every
/// prime-power factor, over k in 1..=limit. This is the elementwise content
/// of the intersection (m) = ∩ (p^e).
pub fn divisibility_cross_check(m: u64, limit: u64) -> Result<bool> {
    let factors = prime_power_factors(m)?;
    for k in 1..=limit {
        let by_m = k % m == 0;
        let by_all = factors.iter().all(|f| k % f == 0);
        if by_m != by_all {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_360_example() {
        assert_eq!(prime_power_factors(360).unwrap(), vec![8, 9, 5]);
    }

    #[test]
    fn primes_are_their_own_factor() {
        assert_eq!(prime_power_factors(7).unwrap(), vec![7]);
    }

    #[test]
    fn hundred_splits_into_four_and_twentyfive() {
        // Trial-division oracle: 100 = 2·2·5·5.
        let mut n = 100u64;
        let mut flat = Vec::new();
        let mut d = 2;
        while n > 1 {
            while n % d == 0 {
                flat.push(d);
                n /= d;
            }
            d += 1;
        }
        assert_eq!(flat, vec![2, 2, 5, 5]);
        assert_eq!(prime_power_factors(100).unwrap(), vec![4, 25]);
    }

    #[test]
    fn out_of_range_inputs() {
        assert_eq!(prime_power_factors(0).unwrap_err(), Error::OutOfRange(0));
        assert_eq!(prime_power_factors(1).unwrap_err(), Error::OutOfRange(1));
        assert_eq!(
            prime_power_factors(PRIME_POWER_MAX + 1).unwrap_err(),
            Error::OutOfRange(PRIME_POWER_MAX + 1)
        );
    }

    #[test]
    fn factors_multiply_back_and_are_coprime() {
        for m in 2..500u64 {
            let factors = prime_power_factors(m).unwrap();
            assert_eq!(factors.iter().product::<u64>(), m, "m = {m}");
            for (i, a) in factors.iter().enumerate() {
                for b in &factors[i + 1..] {
                    assert_eq!(gcd(*a, *b), 1, "m = {m}");
                }
            }
        }
    }

    #[test]
    fn divisibility_agrees_on_a_window() {
        assert!(divisibility_cross_check(360, 5_000).unwrap());
        assert!(divisibility_cross_check(97, 1_000).unwrap());
        assert!(divisibility_cross_check(1024, 5_000).unwrap());
    }

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
}
