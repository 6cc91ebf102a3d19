//! Continued fractions and their correspondence with near-endomorphisms.
//!
//! A [`CfSeq`] becomes a near-endomorphism through its convergents
//! ([`cf_to_endo`]); in the other direction, [`endo_to_cf`] repeatedly takes
//! integer parts and inverts the fractional remainder.

use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::endo::{EndoNode, NodeKind};
use crate::real::{self, Fuel, SignResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("continued fraction has no terms")]
    Empty,
    #[error("term {index} is {value}; terms after the first must be at least 1")]
    NonPositiveTerm { index: usize, value: BigInt },
    #[error("periodic part is empty")]
    EmptyPeriod,
    #[error("asked for {requested} terms but the sequence has only {available}")]
    FiniteExhausted { requested: usize, available: usize },
}

type Generator = Arc<dyn Fn(usize) -> Option<BigInt> + Send + Sync>;

#[derive(Clone)]
enum Terms {
    Finite(Arc<[BigInt]>),
    Periodic {
        prefix: Arc<[BigInt]>,
        period: Arc<[BigInt]>,
    },
    Generated(Generator),
}

/// Sequence of continued-fraction terms `[a0; a1, a2, ...]`.
///
/// The first term may be any integer; every later term is at least 1.
#[derive(Clone)]
pub struct CfSeq {
    terms: Terms,
}

fn check_tail(terms: &[BigInt], offset: usize) -> Result<(), CfError> {
    for (i, t) in terms.iter().enumerate() {
        if offset + i > 0 && !t.is_positive() {
            return Err(CfError::NonPositiveTerm {
                index: offset + i,
                value: t.clone(),
            });
        }
    }
    Ok(())
}

impl CfSeq {
    pub fn finite(terms: Vec<BigInt>) -> Result<Self, CfError> {
        if terms.is_empty() {
            return Err(CfError::Empty);
        }
        check_tail(&terms, 0)?;
        Ok(CfSeq {
            terms: Terms::Finite(terms.into()),
        })
    }

    pub fn from_i64s(terms: &[i64]) -> Result<Self, CfError> {
        Self::finite(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    /// `prefix` followed by `period` repeated forever. An empty prefix means
    /// the period starts at `a0`.
    pub fn periodic(prefix: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self, CfError> {
        if period.is_empty() {
            return Err(CfError::EmptyPeriod);
        }
        check_tail(&prefix, 0)?;
        check_tail(&period, prefix.len())?;
        if let Some(t) = period.iter().find(|t| !t.is_positive()) {
            // the period comes back around after index 0
            return Err(CfError::NonPositiveTerm {
                index: prefix.len() + period.len(),
                value: t.clone(),
            });
        }
        Ok(CfSeq {
            terms: Terms::Periodic {
                prefix: prefix.into(),
                period: period.into(),
            },
        })
    }

    /// Lazily generated terms. The generator must be deterministic; the
    /// sequence ends at the first `None` or at the first non-positive term
    /// after index 0.
    pub fn from_fn(f: impl Fn(usize) -> Option<BigInt> + Send + Sync + 'static) -> Self {
        CfSeq {
            terms: Terms::Generated(Arc::new(f)),
        }
    }

    /// `cf[1;(2)*]`, the expansion of the square root of 2.
    pub fn sqrt2() -> Self {
        Self::periodic(vec![BigInt::one()], vec![BigInt::from(2)]).expect("valid")
    }

    pub fn term(&self, i: usize) -> Option<BigInt> {
        let t = match &self.terms {
            Terms::Finite(ts) => ts.get(i).cloned(),
            Terms::Periodic { prefix, period } => Some(if i < prefix.len() {
                prefix[i].clone()
            } else {
                period[(i - prefix.len()) % period.len()].clone()
            }),
            Terms::Generated(g) => g(i),
        }?;
        if i > 0 && !t.is_positive() {
            return None;
        }
        Some(t)
    }

    /// Number of terms, or `None` for an infinite (or generated) sequence.
    pub fn finite_len(&self) -> Option<usize> {
        match &self.terms {
            Terms::Finite(ts) => Some(ts.len()),
            _ => None,
        }
    }

    /// Up to `n` leading terms; shorter if the sequence ends first.
    pub fn prefix(&self, n: usize) -> Vec<BigInt> {
        (0..n).map_while(|i| self.term(i)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.term(0).is_none()
    }

    /// Continued fraction of the reciprocal, when the value is positive.
    pub fn reciprocal(&self) -> Option<CfSeq> {
        let a0 = self.term(0)?;
        if a0.is_negative() || (a0.is_zero() && self.term(1).is_none()) {
            return None;
        }
        let this = self.clone();
        if a0.is_zero() {
            Some(CfSeq::from_fn(move |i| this.term(i + 1)))
        } else {
            Some(CfSeq::from_fn(move |i| {
                if i == 0 {
                    Some(BigInt::zero())
                } else {
                    this.term(i - 1)
                }
            }))
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, ts: &[BigInt]) -> fmt::Result {
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

impl fmt::Display for CfSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cf[")?;
        match &self.terms {
            Terms::Finite(ts) => {
                write!(f, "{}", ts[0])?;
                if ts.len() > 1 {
                    f.write_str(";")?;
                    write_terms(f, &ts[1..])?;
                }
            }
            Terms::Periodic { prefix, period } => {
                if let Some((a0, rest)) = prefix.split_first() {
                    write!(f, "{a0};")?;
                    write_terms(f, rest)?;
                    if !rest.is_empty() {
                        f.write_str(",")?;
                    }
                }
                f.write_str("(")?;
                write_terms(f, period)?;
                f.write_str(")*")?;
            }
            Terms::Generated(_) => {
                let shown = self.prefix(9);
                if let Some((a0, rest)) = shown.split_first() {
                    write!(f, "{a0}")?;
                    if !rest.is_empty() {
                        f.write_str(";")?;
                        write_terms(f, rest)?;
                    }
                    if self.term(9).is_some() {
                        f.write_str(",...")?;
                    }
                }
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CfSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The convergent `p/q` at zero-based `index`; consecutive convergents
/// satisfy `p_{k+1} q_k - p_k q_{k+1} = (-1)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub p: BigInt,
    pub q: BigInt,
    pub index: usize,
}

fn next_convergent(a: &BigInt, prev: &Convergent, prev2: (&BigInt, &BigInt)) -> Convergent {
    Convergent {
        p: a * &prev.p + prev2.0,
        q: a * &prev.q + prev2.1,
        index: prev.index + 1,
    }
}

/// The first `n` convergents of `cf`.
pub fn convergents(cf: &CfSeq, n: usize) -> Result<Vec<Convergent>, CfError> {
    let terms = cf.prefix(n);
    if terms.len() < n {
        return Err(CfError::FiniteExhausted {
            requested: n,
            available: terms.len(),
        });
    }
    let mut out: Vec<Convergent> = Vec::with_capacity(n);
    let (one, zero) = (BigInt::one(), BigInt::zero());
    for (i, a) in terms.iter().enumerate() {
        let c = match i {
            0 => Convergent {
                p: a.clone(),
                q: BigInt::one(),
                index: 0,
            },
            1 => next_convergent(a, &out[0], (&one, &zero)),
            _ => {
                let (p2, q2) = (out[i - 2].p.clone(), out[i - 2].q.clone());
                next_convergent(a, &out[i - 1], (&p2, &q2))
            }
        };
        out.push(c);
    }
    Ok(out)
}

/// Convergents computed on demand for a CF-backed node.
pub(crate) struct ConvergentCache {
    seq: CfSeq,
    state: RwLock<CacheState>,
}

struct CacheState {
    convs: Vec<(BigInt, BigInt)>,
    exhausted: bool,
}

impl ConvergentCache {
    pub(crate) fn new(seq: CfSeq) -> Self {
        ConvergentCache {
            seq,
            state: RwLock::new(CacheState {
                convs: Vec::new(),
                exhausted: false,
            }),
        }
    }

    fn covers(state: &CacheState, x: &BigInt) -> bool {
        state.exhausted || state.convs.last().is_some_and(|(_, q)| q > x)
    }

    /// `(P_n, Q_n)` for the largest `n` with `Q_n <= x`; past the end of a
    /// finite sequence the last convergent is used. Requires `x >= 1`.
    pub(crate) fn bracket(&self, x: &BigInt) -> (BigInt, BigInt) {
        {
            let state = self.state.read().unwrap_or_else(|e| e.into_inner());
            if Self::covers(&state, x) {
                return Self::lookup(&state, x);
            }
        }
        let mut state = self.state.write().unwrap_or_else(|e| e.into_inner());
        while !Self::covers(&state, x) {
            let i = state.convs.len();
            let Some(a) = self.seq.term(i) else {
                state.exhausted = true;
                break;
            };
            let next = match i {
                0 => (a, BigInt::one()),
                1 => {
                    let (p1, q1) = &state.convs[0];
                    (&a * p1 + 1, &a * q1)
                }
                _ => {
                    let (p1, q1) = &state.convs[i - 1];
                    let (p2, q2) = &state.convs[i - 2];
                    (&a * p1 + p2, &a * q1 + q2)
                }
            };
            state.convs.push(next);
        }
        Self::lookup(&state, x)
    }

    fn lookup(state: &CacheState, x: &BigInt) -> (BigInt, BigInt) {
        // Q_0 = 1 <= x, and Q is nondecreasing
        let idx = state.convs.partition_point(|(_, q)| q <= x);
        let (p, q) = &state.convs[idx.max(1) - 1];
        (p.clone(), q.clone())
    }
}

pub fn cf_to_endo(cf: &CfSeq) -> EndoNode {
    EndoNode::cf(cf.clone())
}

/// Outcome of an integer-part query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerPart {
    Certified(BigInt),
    Inconclusive,
}

/// Largest integer `a` with `0 <= f - a*id < id`, certified up to the fuel
/// budget.
///
/// A candidate is accepted when `f - a*id` is not certified negative and
/// `(a+1)*id - f` is certified positive; an exactly integral slope is
/// therefore accepted through an inconclusive (zero-class) remainder.
pub fn integer_part(f: &EndoNode, fuel: Fuel) -> IntegerPart {
    let mut candidates = None;
    for k in 0..=fuel.max_doublings() {
        let ap = f.approx(&(BigInt::one() << k));
        let lo = ap.lower().floor().to_integer();
        let hi = ap.upper().floor().to_integer();
        if &hi - &lo <= BigInt::one() {
            candidates = Some((lo, hi));
            break;
        }
    }
    let Some((lo, hi)) = candidates else {
        return IntegerPart::Inconclusive;
    };
    let mut a = hi;
    while a >= lo {
        let below = real::add(f, &EndoNode::int(-&a));
        let above = real::add(&EndoNode::int(&a + 1), &EndoNode::neg(f));
        if !matches!(real::sign(&below, fuel), SignResult::Negative { .. })
            && matches!(real::sign(&above, fuel), SignResult::Positive { .. })
        {
            return IntegerPart::Certified(a);
        }
        a -= 1;
    }
    IntegerPart::Inconclusive
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfStatus {
    /// The requested number of terms was produced and the expansion may go on.
    Prefix,
    /// The remainder after the last term could not be separated from zero
    /// within the fuel budget; the value is rational to that precision.
    Terminated,
    /// The next term could not be certified within the fuel budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub terms: Vec<BigInt>,
    pub status: CfStatus,
}

/// Up to `k` continued-fraction terms of `f`.
///
/// CF-backed nodes return their stored terms verbatim, so a finite
/// sequence ending in 1 is not rewritten; see [`endo_to_cf_extract`] for the
/// general path.
pub fn endo_to_cf(f: &EndoNode, k: usize, fuel: Fuel) -> CfExpansion {
    if let NodeKind::CfPiecewise(cf) = f.kind() {
        let mut terms = cf.prefix(k + 1);
        if terms.len() <= k {
            return CfExpansion {
                terms,
                status: CfStatus::Terminated,
            };
        }
        terms.truncate(k);
        return CfExpansion {
            terms,
            status: CfStatus::Prefix,
        };
    }
    endo_to_cf_extract(f, k, fuel)
}

/// Canonical expansion of a rational: every term after the first is at least
/// 1, and the last is at least 2 unless it is the only one.
pub fn rational_cf(r: &BigRational) -> Vec<BigInt> {
    let (mut p, mut q) = (r.numer().clone(), r.denom().clone());
    let mut terms = Vec::new();
    while !q.is_zero() {
        let (a, rem) = p.div_mod_floor(&q);
        terms.push(a);
        p = std::mem::replace(&mut q, rem);
    }
    terms
}

/// Rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    let up = lo.ceil();
    if &up <= hi {
        return if lo.is_positive() {
            up
        } else if hi.is_negative() {
            hi.floor()
        } else {
            BigRational::zero()
        };
    }
    let base = lo.floor();
    let inner = simplest_between(&(hi - &base).recip(), &(lo - &base).recip());
    base + inner.recip()
}

/// Number of leading terms shared by both expansions and followed by at
/// least one more term in each.
fn certified_prefix(a: &[BigInt], b: &[BigInt]) -> usize {
    let shared = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    shared.min(a.len() - 1).min(b.len() - 1)
}

/// Expansion of an arbitrary node from its certified intervals.
///
/// Every real in an interval whose endpoints share the first `j` terms and
/// continue past them has those `j` terms. When refinement stalls on a term,
/// the simplest rational in the interval is tested with a fuel-bounded sign;
/// an inconclusive remainder ends the expansion there.
pub fn endo_to_cf_extract(f: &EndoNode, k: usize, fuel: Fuel) -> CfExpansion {
    let c = f.defect().value().clone();
    let mut prefix: Vec<BigInt> = Vec::new();
    let mut tested: Option<BigRational> = None;
    for m in 0..=fuel.max_doublings() {
        let ap = f.approx(&(&c << m));
        let (lo, hi) = (ap.lower(), ap.upper());
        let (a, b) = (rational_cf(&lo), rational_cf(&hi));
        let j = certified_prefix(&a, &b);
        if j >= k {
            return CfExpansion {
                terms: a[..k].to_vec(),
                status: CfStatus::Prefix,
            };
        }
        if j > prefix.len() {
            prefix = a[..j].to_vec();
        }
        let r = simplest_between(&lo, &hi);
        if tested.as_ref() == Some(&r) {
            continue;
        }
        let rem = real::sub(f, &EndoNode::from_rational(&r));
        if real::sign(&rem, fuel).is_inconclusive() {
            let mut terms = rational_cf(&r);
            let status = if terms.len() > k {
                CfStatus::Prefix
            } else {
                CfStatus::Terminated
            };
            terms.truncate(k);
            return CfExpansion { terms, status };
        }
        tested = Some(r);
    }
    CfExpansion {
        terms: prefix,
        status: CfStatus::Inconclusive,
    }
}

/// First `n` terms of a sequence differing from `rows[i]` at position `i`
/// wherever that position exists: `|rows[i][i]| + 1`, else 1.
pub fn diagonal(rows: &[CfSeq], n: usize) -> CfSeq {
    let terms = (0..n)
        .map(|i| match rows.get(i).and_then(|row| row.term(i)) {
            Some(t) => t.abs() + 1,
            None => BigInt::one(),
        })
        .collect::<Vec<_>>();
    if terms.is_empty() {
        return CfSeq::from_fn(|_| None);
    }
    CfSeq::finite(terms).expect("diagonal terms are positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&t| BigInt::from(t)).collect()
    }

    #[test]
    fn convergents_of_sqrt2_prefix() {
        let cs = convergents(&CfSeq::from_i64s(&[1, 2, 2, 2]).unwrap(), 4).unwrap();
        let pq: Vec<(i64, i64)> = cs
            .iter()
            .map(|c| {
                (
                    c.p.clone().try_into().unwrap(),
                    c.q.clone().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(pq, vec![(1, 1), (3, 2), (7, 5), (17, 12)]);
        assert_eq!(&cs[3].p * &cs[2].q - &cs[2].p * &cs[3].q, BigInt::one());
    }

    #[test]
    fn single_term_convergent() {
        let cs = convergents(&CfSeq::from_i64s(&[-7]).unwrap(), 1).unwrap();
        assert_eq!(
            cs,
            vec![Convergent {
                p: BigInt::from(-7),
                q: BigInt::one(),
                index: 0
            }]
        );
    }

    #[test]
    fn exhausted_finite() {
        let err = convergents(&CfSeq::from_i64s(&[1, 2]).unwrap(), 3).unwrap_err();
        assert_eq!(
            err,
            CfError::FiniteExhausted {
                requested: 3,
                available: 2
            }
        );
    }

    #[test]
    fn rejects_bad_terms() {
        assert_eq!(CfSeq::finite(vec![]).unwrap_err(), CfError::Empty);
        assert!(matches!(
            CfSeq::from_i64s(&[3, 0]),
            Err(CfError::NonPositiveTerm { index: 1, .. })
        ));
        assert!(CfSeq::from_i64s(&[-3, 1]).is_ok());
        assert!(matches!(
            CfSeq::periodic(big(&[1]), vec![]),
            Err(CfError::EmptyPeriod)
        ));
        assert!(CfSeq::periodic(vec![], big(&[0])).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(CfSeq::from_i64s(&[4]).unwrap().to_string(), "cf[4]");
        assert_eq!(CfSeq::from_i64s(&[3, 2]).unwrap().to_string(), "cf[3;2]");
        assert_eq!(CfSeq::sqrt2().to_string(), "cf[1;(2)*]");
        assert_eq!(
            CfSeq::periodic(big(&[0, 3]), big(&[1, 4]))
                .unwrap()
                .to_string(),
            "cf[0;3,(1,4)*]"
        );
        assert_eq!(
            CfSeq::periodic(vec![], big(&[1])).unwrap().to_string(),
            "cf[(1)*]"
        );
    }

    #[test]
    fn generated_sequence_stops_at_nonpositive() {
        let cf = CfSeq::from_fn(|i| Some(BigInt::from(3 - i as i64)));
        assert_eq!(cf.prefix(10), big(&[3, 2, 1]));
    }

    #[test]
    fn single_term_cf_is_linear() {
        let node = cf_to_endo(&CfSeq::from_i64s(&[2]).unwrap());
        for x in 1..200 {
            assert_eq!(node.eval_i64(x), BigInt::from(2 * x));
        }
    }

    #[test]
    fn diagonal_rule() {
        let rows = [
            CfSeq::periodic(vec![], big(&[1])).unwrap(),
            CfSeq::periodic(vec![], big(&[2])).unwrap(),
            CfSeq::from_i64s(&[5]).unwrap(),
        ];
        assert_eq!(diagonal(&rows, 3).prefix(3), big(&[2, 3, 1]));
        assert_eq!(diagonal(&[], 4).prefix(4), big(&[1, 1, 1, 1]));
    }

    #[test]
    fn diagonal_uses_absolute_value_of_first_term() {
        let rows = [CfSeq::from_i64s(&[-4, 1]).unwrap()];
        assert_eq!(diagonal(&rows, 1).prefix(1), big(&[5]));
    }

    #[test]
    fn fast_path_keeps_stored_terms() {
        let f = cf_to_endo(&CfSeq::from_i64s(&[1, 1]).unwrap());
        let ex = endo_to_cf(&f, 5, Fuel::default());
        assert_eq!(
            ex,
            CfExpansion {
                terms: big(&[1, 1]),
                status: CfStatus::Terminated
            }
        );
        let ex = endo_to_cf(&f, 2, Fuel::default());
        assert_eq!(
            ex,
            CfExpansion {
                terms: big(&[1, 1]),
                status: CfStatus::Terminated
            }
        );
        let g = cf_to_endo(&CfSeq::from_i64s(&[1, 2, 2, 2, 2]).unwrap());
        let ex = endo_to_cf(&g, 3, Fuel::default());
        assert_eq!(
            ex,
            CfExpansion {
                terms: big(&[1, 2, 2]),
                status: CfStatus::Prefix
            }
        );
    }

    #[test]
    fn rational_expansions() {
        let q = |p: i64, d: i64| BigRational::new(p.into(), d.into());
        assert_eq!(rational_cf(&q(7, 2)), big(&[3, 2]));
        assert_eq!(rational_cf(&q(-7, 2)), big(&[-4, 2]));
        assert_eq!(rational_cf(&q(5, 1)), big(&[5]));
        assert_eq!(simplest_between(&q(7, 5), &q(3, 2)), q(3, 2));
        assert_eq!(simplest_between(&q(141, 100), &q(142, 100)), q(17, 12));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 3)), q(0, 1));
        assert_eq!(simplest_between(&q(-7, 3), &q(-9, 4)), q(-7, 3));
    }

    #[test]
    fn extraction_of_general_nodes() {
        let fuel = Fuel::default();
        let seven_halves = EndoNode::rat(7, 2).unwrap();
        assert_eq!(
            endo_to_cf(&seven_halves, 8, fuel),
            CfExpansion {
                terms: big(&[3, 2]),
                status: CfStatus::Terminated
            }
        );
        assert_eq!(
            endo_to_cf(&EndoNode::int(5), 8, fuel),
            CfExpansion {
                terms: big(&[5]),
                status: CfStatus::Terminated
            }
        );
        let r2 = cf_to_endo(&CfSeq::sqrt2());
        let two = &r2 * &r2;
        assert_eq!(
            endo_to_cf(&two, 8, fuel),
            CfExpansion {
                terms: big(&[2]),
                status: CfStatus::Terminated
            }
        );
        let two_r2 = &two * &r2;
        assert_eq!(
            endo_to_cf(&two_r2, 8, fuel),
            CfExpansion {
                terms: big(&[2, 1, 4, 1, 4, 1, 4, 1]),
                status: CfStatus::Prefix
            }
        );
        let shifted = &r2 + &EndoNode::int(3);
        assert_eq!(
            endo_to_cf(&shifted, 5, fuel),
            CfExpansion {
                terms: big(&[4, 2, 2, 2, 2]),
                status: CfStatus::Prefix
            }
        );
    }

    #[test]
    fn low_fuel_stops_at_a_convergent() {
        let r2 = cf_to_endo(&CfSeq::sqrt2());
        let ex = endo_to_cf(&(&r2 + &EndoNode::int(0)), 30, Fuel::new(8).unwrap());
        assert_eq!(ex.status, CfStatus::Terminated);
        assert!(ex.terms.len() < 30);
        assert!(ex.terms.iter().skip(1).all(|t| t == &BigInt::from(2)));
        assert_eq!(ex.terms[0], BigInt::one());
    }

    #[test]
    fn reciprocal_sequences() {
        let cf = CfSeq::from_i64s(&[2, 3]).unwrap();
        assert_eq!(cf.reciprocal().unwrap().prefix(5), big(&[0, 2, 3]));
        assert_eq!(
            cf.reciprocal().unwrap().reciprocal().unwrap().prefix(5),
            big(&[2, 3])
        );
        assert!(CfSeq::from_i64s(&[-1, 2]).unwrap().reciprocal().is_none());
    }
}
