use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::prufer::mod_inverse;
use super::{crt_split, LocalizationError, PrimeSet, PruferFrac};

/// A map on `S^-1 Z / Z`, such as a truncated multiplication.
pub type Action<'a> = dyn Fn(&PruferFrac) -> Result<PruferFrac, LocalizationError> + 'a;

/// `p^valuation * U` with the unit part `U` known modulo `p^precision`.
///
/// A zero carries all-zero digits; it is then known to be divisible by
/// `p^(valuation + precision)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicTrunc {
    p: u64,
    valuation: i64,
    digits: Vec<u64>,
}

impl PadicTrunc {
    pub fn new(p: u64, valuation: i64, digits: Vec<u64>) -> Result<Self, LocalizationError> {
        PrimeSet::single(p)?;
        if digits.is_empty() {
            return Err(LocalizationError::NoDigits);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= p) {
            return Err(LocalizationError::InvalidDigit { p, digit });
        }
        if digits[0] == 0 && digits.iter().any(|&d| d != 0) {
            return Err(LocalizationError::LeadingZeroDigit);
        }
        Ok(PadicTrunc {
            p,
            valuation,
            digits,
        })
    }

    pub fn from_integer(
        n: impl Into<BigInt>,
        p: u64,
        precision: u32,
    ) -> Result<Self, LocalizationError> {
        Self::from_rational(&BigRational::from_integer(n.into()), p, precision)
    }

    /// Image of a rational in `Q_p`; zero is recorded with valuation 0.
    pub fn from_rational(
        r: &BigRational,
        p: u64,
        precision: u32,
    ) -> Result<Self, LocalizationError> {
        PrimeSet::single(p)?;
        if precision == 0 {
            return Err(LocalizationError::ZeroPrecision);
        }
        if r.is_zero() {
            return Ok(Self::zero(p, 0, precision));
        }
        let pb = BigInt::from(p);
        let (vn, a) = strip(r.numer(), &pb);
        let (vd, b) = strip(r.denom(), &pb);
        let modulus = pb.pow(precision);
        let unit = a * mod_inverse(&b, &modulus).expect("coprime to p");
        Ok(Self::from_parts(p, vn - vd, unit, precision as u64))
    }

    fn zero(p: u64, valuation: i64, precision: u32) -> Self {
        PadicTrunc {
            p,
            valuation,
            digits: vec![0; precision as usize],
        }
    }

    /// Normalises `p^val * u mod p^(val+len)`.
    fn from_parts(p: u64, mut val: i64, u: BigInt, mut len: u64) -> Self {
        let pb = BigInt::from(p);
        let mut u = u.mod_floor(&pb.pow(len as u32));
        if u.is_zero() {
            return PadicTrunc {
                p,
                valuation: val,
                digits: vec![0; len as usize],
            };
        }
        while (&u % &pb).is_zero() {
            u /= &pb;
            val += 1;
            len -= 1;
        }
        let mut digits = Vec::with_capacity(len as usize);
        for _ in 0..len {
            let (q, d) = u.div_rem(&pb);
            digits.push(d.to_u64().expect("digit below p"));
            u = q;
        }
        PadicTrunc {
            p,
            valuation: val,
            digits,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn precision(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// The unit part as an integer in `[0, p^precision)`.
    pub fn unit(&self) -> BigInt {
        let pb = BigInt::from(self.p);
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * &pb + d)
    }

    /// Exponent `e` such that the value is known modulo `p^e`.
    pub fn absolute_precision(&self) -> i64 {
        self.valuation + self.digits.len() as i64
    }

    fn same_prime(&self, other: &PadicTrunc) -> Result<(), LocalizationError> {
        if self.p != other.p {
            return Err(LocalizationError::PrimeMismatch {
                expected: self.p,
                found: other.p,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PadicTrunc) -> Result<PadicTrunc, LocalizationError> {
        self.same_prime(other)?;
        let pb = BigInt::from(self.p);
        let abs = self.absolute_precision().min(other.absolute_precision());
        let low = self.valuation.min(other.valuation);
        let shift = |x: &PadicTrunc| x.unit() * pb.pow((x.valuation - low) as u32);
        let sum = shift(self) + shift(other);
        Ok(Self::from_parts(self.p, low, sum, (abs - low) as u64))
    }

    pub fn neg(&self) -> PadicTrunc {
        Self::from_parts(
            self.p,
            self.valuation,
            -self.unit(),
            self.digits.len() as u64,
        )
    }

    pub fn mul(&self, other: &PadicTrunc) -> Result<PadicTrunc, LocalizationError> {
        self.same_prime(other)?;
        let len = self.digits.len().min(other.digits.len()) as u64;
        Ok(Self::from_parts(
            self.p,
            self.valuation + other.valuation,
            self.unit() * other.unit(),
            len,
        ))
    }

    /// The multiplication action of this number on `Z[1/p]/Z`.
    pub fn action(&self) -> impl Fn(&PruferFrac) -> Result<PruferFrac, LocalizationError> + '_ {
        move |a| padic_act(self, a)
    }
}

fn strip(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// `v_p` of a nonzero rational.
fn rational_valuation(r: &BigRational, p: &BigInt) -> i64 {
    strip(r.numer(), p).0 - strip(r.denom(), p).0
}

impl fmt::Display for PadicTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p-adic(p={}, val={}, digits=[", self.p, self.valuation)?;
        for d in &self.digits {
            write!(f, "{d},")?;
        }
        f.write_str("...])")
    }
}

/// Exponent `k` with `den = p^k`, or the first foreign prime.
fn prime_power_exponent(den: &BigInt, p: u64) -> Result<u32, LocalizationError> {
    let pb = BigInt::from(p);
    let (k, rest) = strip(den, &pb);
    if !rest.is_one() {
        let found = PrimeSet::empty().split(&rest).1;
        let found = num_prime::nt_funcs::factorize(found.magnitude().clone())
            .into_keys()
            .next()
            .and_then(|q| q.to_u64())
            .unwrap_or(0);
        return Err(LocalizationError::PrimeMismatch { expected: p, found });
    }
    Ok(k as u32)
}

/// `x * a` for `a = num/p^k`, computed from `x` modulo `p^k`.
pub fn padic_act(x: &PadicTrunc, a: &PruferFrac) -> Result<PruferFrac, LocalizationError> {
    let k = prime_power_exponent(a.den(), x.p)? as i64;
    if k <= x.valuation || a.is_zero() {
        return Ok(PruferFrac::zero(a.support().clone()));
    }
    let e = k - x.valuation;
    let len = x.digits.len() as i64;
    if e > len {
        return Err(LocalizationError::PrecisionExhausted {
            needed: e as u64,
            available: len as u64,
        });
    }
    let modulus = BigInt::from(x.p).pow(e as u32);
    let truncated = x.unit().mod_floor(&modulus);
    PruferFrac::new(truncated * a.num(), modulus, a.support().clone())
}

/// Readings of an all-zero action are taken up to level `ZERO_LEVELS * k`.
const ZERO_LEVELS: u32 = 2;

/// Recovers the p-adic number whose multiplication the action is.
///
/// Level `m` reads `x mod p^m` as `p^m * action(1/p^m)`. Consecutive levels
/// must agree modulo the lower power.
pub fn padic_extract(action: &Action<'_>, p: u64, k: u32) -> Result<PadicTrunc, LocalizationError> {
    let support = PrimeSet::single(p)?;
    if k == 0 {
        return Err(LocalizationError::ZeroPrecision);
    }
    let pb = BigInt::from(p);
    let mut prev = BigRational::zero();
    let mut target: Option<i64> = None;
    let mut m: u32 = 1;
    loop {
        let image = action(&PruferFrac::inverse_prime_power(p, m, support.clone()))?;
        prime_power_exponent(image.den(), p)?;
        let reading = image.to_rational() * BigRational::from_integer(pb.pow(m));
        let step = (&reading - &prev) / BigRational::from_integer(pb.pow(m - 1));
        if m > 1 && !step.is_integer() {
            return Err(LocalizationError::IncoherentAction { level: m - 1 });
        }
        if target.is_none() && !reading.is_zero() {
            let v = rational_valuation(&reading, &pb);
            target = Some((v + k as i64).max(1));
        }
        match target {
            Some(t) if m as i64 >= t => {
                let v = rational_valuation(&reading, &pb);
                let scaled = if v >= 0 {
                    reading.to_integer() / pb.pow(v as u32)
                } else {
                    (reading * BigRational::from_integer(pb.pow((-v) as u32))).to_integer()
                };
                return Ok(PadicTrunc::from_parts(p, v, scaled, k as u64));
            }
            None if m >= ZERO_LEVELS * k => {
                return Ok(PadicTrunc::zero(p, (m - k) as i64, k));
            }
            _ => {}
        }
        prev = reading;
        m += 1;
    }
}

/// One p-adic component per prime of the localization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QEndProduct {
    components: Vec<(u64, PadicTrunc)>,
}

impl QEndProduct {
    pub fn components(&self) -> &[(u64, PadicTrunc)] {
        &self.components
    }

    pub fn component(&self, p: u64) -> Option<&PadicTrunc> {
        self.components
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, x)| x)
    }
}

impl fmt::Display for QEndProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (_, x)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Restricts the action to each p-primary part and extracts its p-adic
/// number.
pub fn qend_decompose(
    action: &Action<'_>,
    primes: &PrimeSet,
    k: u32,
) -> Result<QEndProduct, LocalizationError> {
    let mut components = Vec::with_capacity(primes.len());
    for &p in primes.primes() {
        let left = PrimeSet::single(p)?;
        let right = primes.without(p);
        let local = |y: &PruferFrac| -> Result<PruferFrac, LocalizationError> {
            let image = action(&y.with_support(primes.clone())?)?;
            Ok(crt_split(&image, &left, &right)?.0)
        };
        components.push((p, padic_extract(&local, p, k)?));
    }
    Ok(QEndProduct { components })
}

/// Multiplication by a rational on the localization at `support`.
pub fn rational_action(
    r: BigRational,
) -> impl Fn(&PruferFrac) -> Result<PruferFrac, LocalizationError> {
    move |a| a.mul_rational(&r)
}
