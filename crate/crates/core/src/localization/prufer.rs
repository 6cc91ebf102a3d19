use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_prime::nt_funcs::factorize;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LocalizationError, PrimeSet};

/// An element `num/den` of `S^-1 Z / Z`, kept reduced with `0 <= num < den`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PruferFrac {
    num: BigInt,
    den: BigInt,
    support: PrimeSet,
}

impl PruferFrac {
    pub fn new(
        num: impl Into<BigInt>,
        den: impl Into<BigInt>,
        support: PrimeSet,
    ) -> Result<Self, LocalizationError> {
        let (num, den) = (num.into(), den.into());
        if !den.is_positive() {
            return Err(LocalizationError::NonPositiveDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) = (num / &g, den / &g);
        let (_, stray) = support.split(&den);
        if !stray.is_one() {
            return Err(LocalizationError::SupportViolation {
                prime: smallest_prime_factor(&stray),
            });
        }
        Ok(PruferFrac {
            num: num.mod_floor(&den),
            den,
            support,
        })
    }

    pub fn zero(support: PrimeSet) -> Self {
        PruferFrac {
            num: BigInt::zero(),
            den: BigInt::one(),
            support,
        }
    }

    pub fn from_rational(r: &BigRational, support: PrimeSet) -> Result<Self, LocalizationError> {
        Self::new(r.numer().clone(), r.denom().clone(), support)
    }

    /// `1/p^k` in `Z[1/p]/Z` viewed inside the localization at `support`.
    pub(crate) fn inverse_prime_power(p: u64, k: u32, support: PrimeSet) -> Self {
        debug_assert!(support.contains(p) || k == 0);
        let den = BigInt::from(p).pow(k);
        let num = if k == 0 {
            BigInt::zero()
        } else {
            BigInt::one()
        };
        PruferFrac { num, den, support }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn support(&self) -> &PrimeSet {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    /// Same element, larger ambient support.
    pub fn with_support(&self, support: PrimeSet) -> Result<Self, LocalizationError> {
        Self::new(self.num.clone(), self.den.clone(), support)
    }

    /// Multiplication by a rational, well defined on the quotient when the
    /// part of its denominator outside the support is invertible there.
    pub fn mul_rational(&self, r: &BigRational) -> Result<Self, LocalizationError> {
        let (ts, tu) = self.support.split(r.denom());
        let den = &self.den * ts;
        let unit_inv = mod_inverse(&tu, &den).expect("coprime by construction");
        Self::new(r.numer() * &self.num * unit_inv, den, self.support.clone())
    }

    pub fn mul_integer(&self, k: &BigInt) -> Self {
        Self::new(k * &self.num, self.den.clone(), self.support.clone())
            .expect("same denominator primes")
    }
}

/// `a^-1 mod m`, or `None` when they share a factor. `m = 1` gives 0.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else if m.is_one() {
        Some(BigInt::zero())
    } else {
        None
    }
}

fn smallest_prime_factor(n: &BigInt) -> BigInt {
    let n = n.magnitude().clone();
    factorize(n)
        .into_keys()
        .next()
        .map(BigInt::from)
        .unwrap_or_else(BigInt::one)
}

impl Add for &PruferFrac {
    type Output = PruferFrac;

    fn add(self, rhs: &PruferFrac) -> PruferFrac {
        let support = self.support.union(&rhs.support);
        let den = self.den.lcm(&rhs.den);
        let num = &self.num * (&den / &self.den) + &rhs.num * (&den / &rhs.den);
        PruferFrac::new(num, den, support).expect("denominator primes lie in the union")
    }
}

impl Neg for &PruferFrac {
    type Output = PruferFrac;

    fn neg(self) -> PruferFrac {
        PruferFrac::new(-&self.num, self.den.clone(), self.support.clone())
            .expect("same denominator")
    }
}

impl fmt::Display for PruferFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} mod 1", self.num, self.den)
    }
}

/// Primary decomposition `S^-1 Z / Z -> (L^-1 Z / Z) x (R^-1 Z / Z)`.
///
/// With `den = n*m`, `n` supported on `left` and `m` on `right`, the parts are
/// `u/n` and `v/m` where `u = num * m^-1 mod n` and `v = num * n^-1 mod m`, so
/// that `u/n + v/m = num/den` modulo 1.
pub fn crt_split(
    x: &PruferFrac,
    left: &PrimeSet,
    right: &PrimeSet,
) -> Result<(PruferFrac, PruferFrac), LocalizationError> {
    if let Some(prime) = left.first_common(right) {
        return Err(LocalizationError::OverlappingSupports { prime });
    }
    let (n, rest) = left.split(&x.den);
    let (m, stray) = right.split(&rest);
    if !stray.is_one() {
        return Err(LocalizationError::SupportViolation {
            prime: smallest_prime_factor(&stray),
        });
    }
    let u = &x.num * mod_inverse(&m, &n).expect("coprime parts");
    let v = &x.num * mod_inverse(&n, &m).expect("coprime parts");
    Ok((
        PruferFrac::new(u, n, left.clone())?,
        PruferFrac::new(v, m, right.clone())?,
    ))
}

/// Inverse of [`crt_split`]: the sum modulo 1 of parts with disjoint supports.
pub fn crt_join(a: &PruferFrac, b: &PruferFrac) -> Result<PruferFrac, LocalizationError> {
    if let Some(prime) = a.support.first_common(&b.support) {
        return Err(LocalizationError::OverlappingSupports { prime });
    }
    Ok(a + b)
}
