use std::fmt;

use num_bigint::BigInt;
use num_prime::nt_funcs::{factorize64, is_prime64};
use num_traits::{One, Zero};

use super::LocalizationError;

/// Finitely generated multiplicatively closed subset of Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultSet {
    generators: Vec<i64>,
}

impl MultSet {
    pub fn new(generators: Vec<i64>) -> Result<Self, LocalizationError> {
        if generators.is_empty() {
            return Err(LocalizationError::EmptyMultSet);
        }
        if generators.contains(&0) {
            return Err(LocalizationError::ZeroGenerator);
        }
        Ok(MultSet { generators })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(mut primes: Vec<u64>) -> Result<Self, LocalizationError> {
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime64(p)) {
            return Err(LocalizationError::NotPrime(bad));
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(PrimeSet { primes })
    }

    pub fn single(p: u64) -> Result<Self, LocalizationError> {
        Self::new(vec![p])
    }

    pub fn empty() -> Self {
        PrimeSet::default()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn first_common(&self, other: &PrimeSet) -> Option<u64> {
        self.primes.iter().copied().find(|&p| other.contains(p))
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut primes = self.primes.clone();
        primes.extend_from_slice(&other.primes);
        primes.sort_unstable();
        primes.dedup();
        PrimeSet { primes }
    }

    pub fn without(&self, p: u64) -> PrimeSet {
        PrimeSet {
            primes: self.primes.iter().copied().filter(|&q| q != p).collect(),
        }
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes.iter().all(|&p| other.contains(p))
    }

    /// Splits `n > 0` as `(s, u)` with `s` a product of primes in the set and
    /// `u` coprime to all of them.
    pub(crate) fn split(&self, n: &BigInt) -> (BigInt, BigInt) {
        let mut s = BigInt::one();
        let mut u = n.clone();
        for &p in &self.primes {
            let p = BigInt::from(p);
            while (&u % &p).is_zero() {
                u /= &p;
                s *= &p;
            }
        }
        (s, u)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Primes whose inverses the localization adds; signs are dropped since
/// inverting -1 changes nothing.
pub fn saturate(s: &MultSet) -> PrimeSet {
    let mut primes: Vec<u64> = s
        .generators
        .iter()
        .flat_map(|g| factorize64(g.unsigned_abs()).into_keys())
        .collect();
    primes.sort_unstable();
    primes.dedup();
    PrimeSet { primes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sat(g: &[i64]) -> Vec<u64> {
        saturate(&MultSet::new(g.to_vec()).unwrap())
            .primes()
            .to_vec()
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(sat(&[6, 10]), vec![2, 3, 5]);
        assert_eq!(sat(&[-4]), vec![2]);
        assert_eq!(sat(&[97]), vec![97]);
        assert_eq!(sat(&[-1, 1]), Vec::<u64>::new());
        assert_eq!(sat(&[i64::MIN]), vec![2]);
    }

    #[test]
    fn multset_rejects_degenerate() {
        assert_eq!(MultSet::new(vec![]), Err(LocalizationError::EmptyMultSet));
        assert_eq!(
            MultSet::new(vec![3, 0]),
            Err(LocalizationError::ZeroGenerator)
        );
    }

    #[test]
    fn prime_set_normalises() {
        let s = PrimeSet::new(vec![5, 2, 5, 3]).unwrap();
        assert_eq!(s.primes(), &[2, 3, 5]);
        assert_eq!(s.to_string(), "{2, 3, 5}");
        assert_eq!(
            PrimeSet::new(vec![2, 9]),
            Err(LocalizationError::NotPrime(9))
        );
        assert_eq!(PrimeSet::new(vec![1]), Err(LocalizationError::NotPrime(1)));
    }

    #[test]
    fn split_by_support() {
        let s = PrimeSet::new(vec![2]).unwrap();
        assert_eq!(
            s.split(&BigInt::from(24)),
            (BigInt::from(8), BigInt::from(3))
        );
    }
}
