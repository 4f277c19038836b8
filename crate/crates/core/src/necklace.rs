//! Möbius and totient functions, primitive-necklace counts and a
//! brute-force rotation-class enumerator over binary words.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{full_mask, mask_to_string};
use crate::error::{consistency, domain, Error, Result};

/// Default largest word length the enumerator will touch.
pub const DEFAULT_BRUTE_CAP: usize = 16;

/// The enumerator never goes past this regardless of configuration.
pub const MAX_BRUTE: usize = 24;

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
fn factorize(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut e = 0;
            while d.is_multiple_of(p) {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

pub fn mobius(d: u64) -> Result<i64> {
    if d == 0 {
        return Err(domain("μ(0) is undefined"));
    }
    let f = factorize(d);
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len().is_multiple_of(2) { 1 } else { -1 })
}

pub fn totient(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain("φ(0) is undefined"));
    }
    Ok(factorize(d)
        .into_iter()
        .fold(d, |acc, (p, _)| acc / p * (p - 1)))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn pow(k: u64, e: u64) -> Result<u64> {
    let e = u32::try_from(e).map_err(|_| Error::Overflow("k^(n/d)"))?;
    k.checked_pow(e).ok_or(Error::Overflow("k^(n/d)"))
}

fn check_args(k: u64, n: u64) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(domain(format!(
            "alphabet size and length must be >= 1, got k={k}, n={n}"
        )));
    }
    Ok(())
}

/// Number of primitive necklaces of length `n` over `k` letters:
/// `(1/n) Σ_{d|n} μ(d) k^{n/d}`.
pub fn moreau_aperiodic(k: u64, n: u64) -> Result<u64> {
    check_args(k, n)?;
    let mut sum: i128 = 0;
    for d in divisors(n) {
        sum += i128::from(mobius(d)?) * i128::from(pow(k, n / d)?);
    }
    let n = i128::from(n);
    if sum % n != 0 {
        return Err(consistency(format!(
            "Möbius sum {sum} not divisible by {n}"
        )));
    }
    u64::try_from(sum / n).map_err(|_| consistency(format!("negative aperiodic count {}", sum / n)))
}

/// Total number of necklaces of length `n` over `k` letters, computed by
/// the totient formula and cross-checked against `Σ_{d|n} M(k,d)`.
pub fn necklace_total(k: u64, n: u64) -> Result<u64> {
    check_args(k, n)?;
    let mut sum: u128 = 0;
    for d in divisors(n) {
        sum += u128::from(totient(d)?) * u128::from(pow(k, n / d)?);
    }
    if !sum.is_multiple_of(u128::from(n)) {
        return Err(consistency(format!(
            "totient sum {sum} not divisible by {n}"
        )));
    }
    let by_totient =
        u64::try_from(sum / u128::from(n)).map_err(|_| Error::Overflow("necklace total"))?;
    let by_moreau = divisors(n)
        .into_iter()
        .map(|d| moreau_aperiodic(k, d))
        .sum::<Result<u64>>()?;
    if by_totient != by_moreau {
        return Err(consistency(format!(
            "necklace totals disagree: totient formula {by_totient}, Möbius sum {by_moreau}"
        )));
    }
    Ok(by_totient)
}

/// Primitive-necklace counts for every divisor of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceTally {
    pub n: u64,
    pub k: u64,
    pub aperiodic_by_divisor: BTreeMap<u64, u64>,
    pub total: u64,
}

impl NecklaceTally {
    pub fn compute(k: u64, n: u64) -> Result<Self> {
        let aperiodic_by_divisor = divisors(n)
            .into_iter()
            .map(|d| Ok((d, moreau_aperiodic(k, d)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let total = necklace_total(k, n)?;
        Ok(NecklaceTally {
            n,
            k,
            aperiodic_by_divisor,
            total,
        })
    }

    /// `Σ_{d|n} d·M(k,d) == kⁿ`.
    pub fn partition_identity_holds(&self) -> Result<bool> {
        let lhs: u128 = self
            .aperiodic_by_divisor
            .iter()
            .map(|(&d, &m)| u128::from(d) * u128::from(m))
            .sum();
        Ok(lhs == u128::from(pow(self.k, self.n)?))
    }
}

/// Rotate the low `n` bits of `mask` so that bit `i` moves to `i + k`.
pub fn rotate_mask(mask: u32, n: usize, k: usize) -> u32 {
    let k = k % n;
    if k == 0 {
        return mask;
    }
    ((mask << k) | (mask >> (n - k))) & full_mask(n)
}

/// Bit-reverse over `n` bits, so that numeric order matches the order of
/// the 0/1 strings written coordinate 1 first.
fn string_key(mask: u32, n: usize) -> u32 {
    mask.reverse_bits() >> (32 - n)
}

/// The rotation of `mask` whose string is lexicographically smallest.
pub fn min_rotation(mask: u32, n: usize) -> u32 {
    (0..n)
        .map(|k| rotate_mask(mask, n, k))
        .min_by_key(|&m| string_key(m, n))
        .unwrap_or(mask)
}

/// Smallest `d | n` with `mask` invariant under rotation by `d`.
pub fn mask_period(mask: u32, n: usize) -> usize {
    divisors(n as u64)
        .into_iter()
        .map(|d| d as usize)
        .find(|&d| rotate_mask(mask, n, d) == mask)
        .unwrap_or(n)
}

/// Smallest `d` dividing `|w|` such that `w` equals its rotation by `d`.
pub fn period(w: &str) -> Result<usize> {
    let bytes = w.as_bytes();
    let n = bytes.len();
    if n == 0 {
        return Err(domain("period of the empty word"));
    }
    Ok(divisors(n as u64)
        .into_iter()
        .map(|d| d as usize)
        .find(|&d| (0..n).all(|i| bytes[i] == bytes[(i + d) % n]))
        .unwrap_or(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceClass {
    /// Lexicographically minimal rotation.
    pub representative: String,
    /// Minimal period, which is also the class size.
    pub period: usize,
}

/// Partition all `2ⁿ` binary words into rotation classes by brute force.
/// Classes come out sorted by representative.
pub fn enumerate_necklaces(n: usize, cap: usize) -> Result<Vec<NecklaceClass>> {
    let limit = cap.min(MAX_BRUTE);
    if n == 0 {
        return Err(domain("word length must be >= 1"));
    }
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "brute-force enumeration capped at n = {limit}, asked for {n}"
        )));
    }
    let mut reps: Vec<u32> = (0..=full_mask(n))
        .filter(|&m| min_rotation(m, n) == m)
        .collect();
    reps.sort_unstable_by_key(|&m| string_key(m, n));
    Ok(reps
        .into_iter()
        .map(|m| NecklaceClass {
            representative: mask_to_string(m, n),
            period: mask_period(m, n),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: rotate actual strings, collect distinct classes.
    fn string_classes(n: usize) -> Vec<(String, usize)> {
        let mut seen = std::collections::BTreeMap::new();
        for m in 0u32..(1 << n) {
            let s: String = (0..n)
                .map(|i| if m >> i & 1 == 1 { '1' } else { '0' })
                .collect();
            let rots: std::collections::BTreeSet<String> =
                (0..n).map(|k| format!("{}{}", &s[k..], &s[..k])).collect();
            let rep = rots.iter().next().unwrap().clone();
            seen.insert(rep, rots.len());
        }
        seen.into_iter().collect()
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(7).unwrap(), -1);
        assert!(matches!(mobius(0), Err(Error::Domain(_))));
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(2).unwrap(), 1);
        assert_eq!(totient(6).unwrap(), 2);
        assert_eq!(totient(12).unwrap(), 4);
        assert!(matches!(totient(0), Err(Error::Domain(_))));
    }

    #[test]
    fn totient_matches_gcd_count() {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for d in 1..200u64 {
            let count = (1..=d).filter(|&j| gcd(j, d) == 1).count() as u64;
            assert_eq!(totient(d).unwrap(), count, "d = {d}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn aperiodic_counts() {
        assert_eq!(moreau_aperiodic(2, 1).unwrap(), 2);
        assert_eq!(moreau_aperiodic(2, 3).unwrap(), 2);
        // 54 aperiodic words of length 6 (string oracle), six rotations each
        let aperiodic_words = (0u32..64)
            .filter(|&m| {
                let s = format!("{m:06b}");
                (1..6).all(|k| format!("{}{}", &s[k..], &s[..k]) != s)
            })
            .count();
        assert_eq!(aperiodic_words, 54);
        assert_eq!(moreau_aperiodic(2, 6).unwrap(), 9);
    }

    #[test]
    fn total_counts() {
        assert_eq!(necklace_total(2, 6).unwrap(), 14);
        assert_eq!(necklace_total(2, 1).unwrap(), 2);
        assert_eq!(string_classes(4).len(), 6);
        assert_eq!(necklace_total(2, 4).unwrap(), 6);
        assert!(necklace_total(0, 3).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(moreau_aperiodic(10, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn periods() {
        assert_eq!(period("010101").unwrap(), 2);
        assert_eq!(period("000000").unwrap(), 1);
        assert_eq!(period("001011").unwrap(), 6);
        assert_eq!(period("abcabc").unwrap(), 3);
        assert!(matches!(period(""), Err(Error::Domain(_))));
    }

    #[test]
    fn enumeration_small_cases() {
        let n3 = enumerate_necklaces(3, DEFAULT_BRUTE_CAP).unwrap();
        let got: Vec<(&str, usize)> = n3
            .iter()
            .map(|c| (c.representative.as_str(), c.period))
            .collect();
        assert_eq!(got, [("000", 1), ("001", 3), ("011", 3), ("111", 1)]);
        assert_eq!(enumerate_necklaces(6, DEFAULT_BRUTE_CAP).unwrap().len(), 14);
        assert_eq!(enumerate_necklaces(1, DEFAULT_BRUTE_CAP).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_matches_string_oracle() {
        for n in 1..=10 {
            let got: Vec<(String, usize)> = enumerate_necklaces(n, DEFAULT_BRUTE_CAP)
                .unwrap()
                .into_iter()
                .map(|c| (c.representative, c.period))
                .collect();
            assert_eq!(got, string_classes(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_necklaces(17, DEFAULT_BRUTE_CAP),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            enumerate_necklaces(25, 100),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn tally_for_six() {
        let t = NecklaceTally::compute(2, 6).unwrap();
        let expected: BTreeMap<u64, u64> = [(1, 2), (2, 1), (3, 2), (6, 9)].into_iter().collect();
        assert_eq!(t.aperiodic_by_divisor, expected);
        assert_eq!(t.total, 14);
        assert!(t.partition_identity_holds().unwrap());
    }

    #[test]
    fn rotation_helpers() {
        // "000111" with coordinate i moved to i+1 becomes "100011"
        let m = crate::complex::string_to_mask("000111").unwrap();
        assert_eq!(mask_to_string(rotate_mask(m, 6, 1), 6), "100011");
        assert_eq!(rotate_mask(m, 6, 6), m);
        assert_eq!(mask_to_string(min_rotation(m, 6), 6), "000111");
        assert_eq!(
            mask_period(crate::complex::string_to_mask("010101").unwrap(), 6),
            2
        );
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn min_rotation_is_rotation_invariant(n in 1usize..=20, raw in any::<u32>(), k in 0usize..40) {
                let m = raw & full_mask(n);
                prop_assert_eq!(min_rotation(m, n), min_rotation(rotate_mask(m, n, k), n));
            }

            #[test]
            fn period_divides_length(n in 1usize..=20, raw in any::<u32>()) {
                let m = raw & full_mask(n);
                let p = mask_period(m, n);
                prop_assert_eq!(n % p, 0);
                prop_assert_eq!(period(&mask_to_string(m, n)).unwrap(), p);
            }

            #[test]
            fn two_total_formulas_agree(k in 1u64..=5, n in 1u64..=16) {
                prop_assert!(necklace_total(k, n).is_ok());
                let t = NecklaceTally::compute(k, n).unwrap();
                prop_assert!(t.partition_identity_holds().unwrap());
            }
        }
    }
}
