use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::partition::SetPartition;
use crate::permutability::{correspondent_partition, permutability};
use crate::permutation::Permutation;
use crate::tuples::{tuple_space_size, PermutationTuple};
use crate::{Error, Result};

/// Above this many tuples the certificate checks a random sample instead.
const EXHAUSTIVE_LIMIT: u64 = 10_000;
const RANDOM_SAMPLES: u64 = 1_000;

/// Evidence for `B'_n(π) >= (n/d)!^(d-1)`, `d = pm(π)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    /// The pattern with singleton blocks removed; the bound is stated for it.
    pub pattern: String,
    pub d: usize,
    pub m: usize,
    #[serde(serialize_with = "super::decimal::serialize")]
    pub certified_count: BigUint,
    pub verified_samples: u64,
    pub exhaustive: bool,
}

/// Every `(d−1)`-tuple over `S_m`, `m = n/d`, gives a correspondent partition
/// of `[n]` with all blocks of size `d` and permutability `d − 1`, so none of
/// them contains `π`. This checks that claim, exhaustively when there are at
/// most ten thousand tuples and on a seeded sample of a thousand otherwise.
pub fn lower_bound_certificate(pattern: &SetPartition, n: usize, seed: u64) -> Result<LowerBoundCertificate> {
    let stripped = pattern.without_singletons();
    let d = permutability(&stripped);
    if d < 2 {
        return Err(Error::BadParameter(format!("pm({pattern}) = {d}; the certificate needs pm >= 2")));
    }
    if n == 0 || !n.is_multiple_of(d) {
        return Err(Error::BadParameter(format!("n = {n} is not a positive multiple of pm = {d}")));
    }
    let m = n / d;
    let certified_count = tuple_space_size(m, d - 1);
    let exhaustive = certified_count <= BigUint::from(EXHAUSTIVE_LIMIT);

    let check = |perms: Vec<Permutation>| -> Result<()> {
        let tuple = PermutationTuple::new(perms)?;
        let host = correspondent_partition(&tuple);
        if host.contains(&stripped) {
            return Err(Error::CertificateFailed(format!("[{tuple}] = {host} contains {stripped}")));
        }
        Ok(())
    };

    let mut verified_samples = 0;
    if exhaustive {
        let all: Vec<Permutation> = Permutation::all(m).collect();
        let mut digits = vec![0usize; d - 1];
        loop {
            check(digits.iter().map(|&i| all[i].clone()).collect())?;
            verified_samples += 1;
            match digits.iter().rposition(|&x| x + 1 < all.len()) {
                Some(pos) => {
                    digits[pos] += 1;
                    digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
                }
                None => break,
            }
        }
    } else {
        for k in 0..RANDOM_SAMPLES {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let perms = (0..d - 1).map(|_| random_permutation(&mut rng, m)).collect();
            check(perms)?;
            verified_samples += 1;
        }
    }
    Ok(LowerBoundCertificate {
        pattern: stripped.render(),
        d,
        m,
        certified_count,
        verified_samples,
        exhaustive,
    })
}

fn random_permutation(rng: &mut ChaCha8Rng, m: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=m).collect();
    for i in (1..m).rev() {
        images.swap(i, rng.random_range(0..=i));
    }
    Permutation::from_images_unchecked(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn pattern_123() {
        let c = lower_bound_certificate(&p("123"), 8, 0).unwrap();
        assert_eq!((c.d, c.m, c.verified_samples, c.exhaustive), (2, 4, 24, true));
        assert_eq!(c.certified_count, BigUint::from(24u32));
        let small = lower_bound_certificate(&p("123"), 4, 0).unwrap();
        assert_eq!(small.certified_count, BigUint::from(2u32));
    }

    #[test]
    fn singletons_are_stripped() {
        let c = lower_bound_certificate(&p("124/3"), 6, 0).unwrap();
        assert_eq!(c.pattern, "123");
        assert_eq!(c.d, 2);
    }

    #[test]
    fn sampled_when_large() {
        // pm(1234) = 3; m = 9 gives 9!^2 tuples.
        let c = lower_bound_certificate(&p("1234"), 27, 5).unwrap();
        assert_eq!(c.d, 3);
        assert!(!c.exhaustive);
        assert_eq!(c.verified_samples, RANDOM_SAMPLES);
    }

    #[test]
    fn guards() {
        assert!(matches!(lower_bound_certificate(&p("14/23"), 4, 0), Err(Error::BadParameter(_))));
        assert!(matches!(lower_bound_certificate(&p("1/2"), 4, 0), Err(Error::BadParameter(_))));
        assert!(matches!(lower_bound_certificate(&p("123"), 5, 0), Err(Error::BadParameter(_))));
    }
}
