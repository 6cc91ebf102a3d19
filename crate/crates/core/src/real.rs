//! Ordered-field operations on near-endomorphisms.
//!
//! Addition is pointwise, multiplication is composition. Order questions
//! are only semi-decidable, so [`sign`] searches under an explicit [`Fuel`]
//! budget and returns either an eternal certificate or a certified bound on
//! the slope's magnitude.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::endo::EndoNode;

pub const DEFAULT_MAX_DIGITS: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("sign is inconclusive (|λ| ≤ {bound}); cannot invert")]
    InconclusiveSign { bound: BigRational },
    #[error("fuel must allow at least one doubling")]
    ZeroFuel,
    #[error("{requested} digits requested; the limit is {limit}")]
    DigitsExceeded { requested: u32, limit: u32 },
}

/// Search budget: sign probes `n = 2^0, 2^1, ..., 2^max_doublings`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fuel {
    max_doublings: u32,
}

impl Fuel {
    pub const DEFAULT_DOUBLINGS: u32 = 64;

    pub fn new(max_doublings: u32) -> Result<Self, RealError> {
        if max_doublings == 0 {
            return Err(RealError::ZeroFuel);
        }
        Ok(Fuel { max_doublings })
    }

    pub fn max_doublings(&self) -> u32 {
        self.max_doublings
    }
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel {
            max_doublings: Self::DEFAULT_DOUBLINGS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignResult {
    /// `f(witness) > c`, hence the slope is at least `slope_floor > 0`.
    Positive {
        witness: BigInt,
        slope_floor: BigRational,
    },
    /// `f(witness) < -c`, hence the slope is at most `slope_ceiling < 0`.
    Negative {
        witness: BigInt,
        slope_ceiling: BigRational,
    },
    /// Not separated from zero within the budget; `|λ| <= bound`.
    Inconclusive { bound: BigRational },
}

impl SignResult {
    pub fn is_positive(&self) -> bool {
        matches!(self, SignResult::Positive { .. })
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, SignResult::Negative { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, SignResult::Inconclusive { .. })
    }
}

impl fmt::Display for SignResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignResult::Positive {
                witness,
                slope_floor,
            } => {
                write!(f, "positive (witness n={witness}, λ ≥ {slope_floor})")
            }
            SignResult::Negative {
                witness,
                slope_ceiling,
            } => {
                write!(f, "negative (witness n={witness}, λ ≤ {slope_ceiling})")
            }
            SignResult::Inconclusive { bound } => write!(f, "inconclusive |λ| ≤ {bound}"),
        }
    }
}

pub fn add(f: &EndoNode, g: &EndoNode) -> EndoNode {
    EndoNode::sum(f, g)
}

pub fn neg(f: &EndoNode) -> EndoNode {
    EndoNode::neg(f)
}

pub fn sub(f: &EndoNode, g: &EndoNode) -> EndoNode {
    EndoNode::sum(f, &EndoNode::neg(g))
}

/// `f * g` is `f(g(x))`.
pub fn mul(f: &EndoNode, g: &EndoNode) -> EndoNode {
    EndoNode::compose(f, g)
}

pub fn sign(f: &EndoNode, fuel: Fuel) -> SignResult {
    let c = f.defect().value();
    let mut n = BigInt::one();
    let mut last = BigInt::zero();
    for k in 0..=fuel.max_doublings() {
        if k > 0 {
            n <<= 1;
        }
        last = f.eval(&n);
        if &last > c {
            let slope_floor = BigRational::new(&last - c, n.clone());
            return SignResult::Positive {
                witness: n,
                slope_floor,
            };
        }
        if last < -c {
            let slope_ceiling = BigRational::new(&last + c, n.clone());
            return SignResult::Negative {
                witness: n,
                slope_ceiling,
            };
        }
    }
    SignResult::Inconclusive {
        bound: BigRational::new(last.abs() + c, n),
    }
}

/// Sign of `f - g`.
pub fn compare(f: &EndoNode, g: &EndoNode, fuel: Fuel) -> SignResult {
    sign(&sub(f, g), fuel)
}

/// Multiplicative inverse; needs a sign certificate within `fuel`.
pub fn invert(f: &EndoNode, fuel: Fuel) -> Result<EndoNode, RealError> {
    invert_certified(f, &sign(f, fuel))
}

/// Inverse of `f` given a sign certificate already obtained for it.
///
/// A negative `f` is inverted as `-(inv(-f))`, which equals the composition
/// of the inverse of `f(-x)` with negation, since every node is odd.
pub fn invert_certified(f: &EndoNode, cert: &SignResult) -> Result<EndoNode, RealError> {
    match cert {
        SignResult::Positive {
            witness,
            slope_floor,
        } => Ok(invert_positive(f, witness, slope_floor)),
        SignResult::Negative {
            witness,
            slope_ceiling,
        } => {
            let flipped = EndoNode::neg(f);
            let g = invert_positive(&flipped, witness, &-slope_ceiling);
            Ok(EndoNode::neg(&g))
        }
        SignResult::Inconclusive { bound } => Err(RealError::InconclusiveSign {
            bound: bound.clone(),
        }),
    }
}

fn invert_positive(f: &EndoNode, witness: &BigInt, slope_floor: &BigRational) -> EndoNode {
    let probe = witness.max(f.defect().value()) << 16u32;
    let estimate = f.approx(&probe).value;
    let guess = if estimate > *slope_floor {
        estimate
    } else {
        slope_floor.clone()
    };
    EndoNode::inverse(f, slope_floor.clone(), guess)
}

/// A truncated decimal `scaled / 10^digits` whose distance to the true
/// slope is below one unit in the last place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedDecimal {
    pub scaled: BigInt,
    pub digits: u32,
}

impl CertifiedDecimal {
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.scaled.clone(), BigInt::from(10).pow(self.digits))
    }
}

impl fmt::Display for CertifiedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scaled.is_negative() {
            f.write_str("-")?;
        }
        let unit = BigInt::from(10).pow(self.digits);
        let (int_part, frac) = self.scaled.abs().div_rem(&unit);
        write!(f, "{int_part}")?;
        if self.digits > 0 {
            let frac = frac.to_string();
            write!(
                f,
                ".{}{frac}",
                "0".repeat(self.digits as usize - frac.len())
            )?;
        }
        write!(f, " ±1e-{}", self.digits)
    }
}

pub fn to_decimal(f: &EndoNode, digits: u32) -> Result<CertifiedDecimal, RealError> {
    to_decimal_limited(f, digits, DEFAULT_MAX_DIGITS)
}

/// Samples at `n = c * 10^(digits+1)`, so the certified interval has radius
/// a tenth of the last place, then floors its upper end to `digits` places.
pub fn to_decimal_limited(
    f: &EndoNode,
    digits: u32,
    limit: u32,
) -> Result<CertifiedDecimal, RealError> {
    if digits > limit {
        return Err(RealError::DigitsExceeded {
            requested: digits,
            limit,
        });
    }
    let c = f.defect().value();
    let n = c * BigInt::from(10).pow(digits + 1);
    // (f(n)/n + c/n) * 10^digits = (f(n) + c) / (10c)
    let scaled = (f.eval(&n) + c).div_floor(&(c * 10));
    Ok(CertifiedDecimal { scaled, digits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> EndoNode {
        EndoNode::rat(p, q).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn fuel(n: u32) -> Fuel {
        Fuel::new(n).unwrap()
    }

    #[test]
    fn sign_of_identity() {
        assert_eq!(
            sign(&EndoNode::int(1), fuel(4)),
            SignResult::Positive {
                witness: 2.into(),
                slope_floor: q(1, 2)
            }
        );
    }

    #[test]
    fn sign_of_zero_class() {
        let bound = BigRational::new(1.into(), BigInt::one() << 20);
        assert_eq!(
            sign(&EndoNode::int(0), fuel(20)),
            SignResult::Inconclusive { bound }
        );
        let f = rat(5, 7);
        let z = add(&f, &neg(&f));
        match sign(&z, fuel(16)) {
            SignResult::Inconclusive { bound } => {
                assert!(
                    bound
                        <= BigRational::new(f.defect().value().clone(), BigInt::one() << 16)
                            * BigInt::from(2)
                );
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn compare_rationals() {
        assert!(compare(&EndoNode::int(3), &EndoNode::int(2), fuel(4)).is_positive());
        assert!(compare(&rat(1, 3), &rat(1, 2), fuel(8)).is_negative());
    }

    #[test]
    fn zero_fuel_rejected() {
        assert_eq!(Fuel::new(0), Err(RealError::ZeroFuel));
    }

    #[test]
    fn invert_small_slopes() {
        let g = invert(&EndoNode::int(2), fuel(8)).unwrap();
        assert_eq!(g.eval_i64(7), BigInt::from(4));
        for x in 1..500i64 {
            let r = EndoNode::int(2).eval(&g.eval_i64(x)) - x;
            assert!(r == BigInt::zero() || r == BigInt::one());
        }
        let h = invert(&EndoNode::int(-2), fuel(8)).unwrap();
        assert_eq!(h.eval_i64(7), BigInt::from(-4));
    }

    #[test]
    fn invert_inconclusive_errors() {
        let err = invert(&EndoNode::int(0), fuel(10)).unwrap_err();
        assert!(matches!(err, RealError::InconclusiveSign { .. }));
    }

    #[test]
    fn invert_one_third() {
        let g = invert(&rat(1, 3), fuel(16)).unwrap();
        assert!(g.approx_u64(10_000).contains(&q(3, 1)));
    }

    #[test]
    fn decimal_formats() {
        assert_eq!(
            to_decimal(&rat(1, 4), 3).unwrap().to_string(),
            "0.250 ±1e-3"
        );
        assert_eq!(
            to_decimal(&EndoNode::int(-3), 2).unwrap().to_string(),
            "-3.00 ±1e-2"
        );
        assert_eq!(
            to_decimal(&rat(-1, 8), 2).unwrap().to_string(),
            "-0.13 ±1e-2"
        );
        assert_eq!(to_decimal(&rat(7, 2), 0).unwrap().to_string(), "3 ±1e-0");
        assert_eq!(
            to_decimal(&rat(1, 3), 5).unwrap().to_string(),
            "0.33333 ±1e-5"
        );
    }

    #[test]
    fn decimal_digit_limit() {
        assert!(matches!(
            to_decimal_limited(&EndoNode::int(1), 11, 10),
            Err(RealError::DigitsExceeded {
                requested: 11,
                limit: 10
            })
        ));
    }

    #[test]
    fn mul_of_integers() {
        let p = mul(&EndoNode::int(2), &EndoNode::int(3));
        for x in -50..50i64 {
            assert_eq!(p.eval_i64(x), BigInt::from(6 * x));
        }
    }
}
