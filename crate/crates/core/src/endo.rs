//! Near-endomorphisms of the integers as an immutable expression DAG.
//!
//! Every node denotes a function `f: Z -> Z` whose additivity defect
//! `|f(a+b) - f(a) - f(b)|` is strictly below a [`DefectBound`] computed when
//! the node is built. Evaluation is odd-normalized: `f(0) = 0` and
//! `f(-x) = -f(x)` for every node kind, so only positive arguments are ever
//! computed and cached.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cf::{CfSeq, ConvergentCache};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("rational slope has a zero denominator")]
    ZeroDenominator,
}

/// Strict upper bound `c >= 1` on the additivity defect of a node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefectBound(BigInt);

impl DefectBound {
    fn new(c: BigInt) -> Self {
        debug_assert!(c >= BigInt::one());
        DefectBound(c)
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for DefectBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A rational value with a rational error radius; the slope of the node it
/// was computed from lies in `[value - radius, value + radius]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedApprox {
    pub value: BigRational,
    pub radius: BigRational,
}

impl CertifiedApprox {
    pub fn lower(&self) -> BigRational {
        &self.value - &self.radius
    }

    pub fn upper(&self) -> BigRational {
        &self.value + &self.radius
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lower() <= *x && *x <= self.upper()
    }

    pub fn intersects(&self, other: &CertifiedApprox) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }
}

impl fmt::Display for CertifiedApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.value, self.radius)
    }
}

/// Read-only view of what a node is built from.
#[derive(Clone)]
pub enum NodeKind {
    IntSlope(BigInt),
    /// `floor(p*x/q)` for `x > 0`; `(p, q)` is reduced and `q >= 2`.
    RatSlope {
        p: BigInt,
        q: BigInt,
    },
    CfPiecewise(CfSeq),
    Sum(EndoNode, EndoNode),
    Neg(EndoNode),
    /// `outer(inner(x))`.
    Compose {
        outer: EndoNode,
        inner: EndoNode,
    },
    /// Minimal-preimage inverse of a node certified positive with slope at
    /// least `slope_floor`.
    Inverse {
        inner: EndoNode,
        slope_floor: BigRational,
    },
}

enum Aux {
    None,
    Convergents(ConvergentCache),
    /// Positive rational near the inner slope, used to seed preimage search.
    SlopeGuess(BigRational),
}

struct Inner {
    kind: NodeKind,
    defect: DefectBound,
    aux: Aux,
    memo: RwLock<BTreeMap<BigInt, BigInt>>,
    memo_cap: AtomicUsize,
}

/// Shared handle to an immutable near-endomorphism node.
#[derive(Clone)]
pub struct EndoNode(Arc<Inner>);

impl fmt::Debug for EndoNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EndoNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            NodeKind::IntSlope(k) => write!(f, "{k}"),
            NodeKind::RatSlope { p, q } => write!(f, "({p}/{q})"),
            NodeKind::CfPiecewise(cf) => write!(f, "{cf}"),
            NodeKind::Sum(a, b) => write!(f, "({a} + {b})"),
            NodeKind::Neg(a) => write!(f, "-{a}"),
            NodeKind::Compose { outer, inner } => write!(f, "({outer} * {inner})"),
            NodeKind::Inverse { inner, .. } => write!(f, "inv({inner})"),
        }
    }
}

impl EndoNode {
    fn build(kind: NodeKind, defect: BigInt, aux: Aux) -> Self {
        EndoNode(Arc::new(Inner {
            kind,
            defect: DefectBound::new(defect),
            aux,
            memo: RwLock::new(BTreeMap::new()),
            memo_cap: AtomicUsize::new(usize::MAX),
        }))
    }

    /// `x -> k*x`, an exact homomorphism.
    pub fn int(k: impl Into<BigInt>) -> Self {
        Self::build(NodeKind::IntSlope(k.into()), BigInt::one(), Aux::None)
    }

    /// `x -> floor(p*x/q)` on positive arguments, odd-extended.
    ///
    /// The fraction is reduced first; an integral slope collapses to
    /// [`NodeKind::IntSlope`].
    pub fn rat(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, EndoError> {
        let (mut p, mut q) = (p.into(), q.into());
        if q.is_zero() {
            return Err(EndoError::ZeroDenominator);
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if q.is_one() {
            return Ok(Self::int(p));
        }
        Ok(Self::build(
            NodeKind::RatSlope { p, q },
            BigInt::from(2),
            Aux::None,
        ))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::rat(r.numer().clone(), r.denom().clone())
            .expect("BigRational has nonzero denominator")
    }

    /// Piecewise convergent function of a continued fraction: for
    /// `Q_n <= x < Q_{n+1}` it is `floor(P_n*x/Q_n)`.
    pub fn cf(cf: CfSeq) -> Self {
        let cache = ConvergentCache::new(cf.clone());
        Self::build(
            NodeKind::CfPiecewise(cf),
            BigInt::from(4),
            Aux::Convergents(cache),
        )
    }

    pub fn sum(f: &EndoNode, g: &EndoNode) -> Self {
        let c = f.defect().value() + g.defect().value();
        Self::build(NodeKind::Sum(f.clone(), g.clone()), c, Aux::None)
    }

    pub fn neg(f: &EndoNode) -> Self {
        let c = f.defect().value().clone();
        Self::build(NodeKind::Neg(f.clone()), c, Aux::None)
    }

    /// `outer(inner(x))`.
    pub fn compose(outer: &EndoNode, inner: &EndoNode) -> Self {
        // g(a+b) = g(a) + g(b) + d with |d| < c_g, and |f(d)| <= |d|(|f(1)| + c_f).
        let cf = outer.defect().value();
        let cg = inner.defect().value();
        let f1 = outer.eval(&BigInt::one()).abs();
        let c = BigInt::from(2) * cf + cg * (f1 + cf) + 1;
        Self::build(
            NodeKind::Compose {
                outer: outer.clone(),
                inner: inner.clone(),
            },
            c,
            Aux::None,
        )
    }

    /// Caller guarantees `inner` is positive with slope at least
    /// `slope_floor > 0`, and that `guess` is a positive rational.
    pub(crate) fn inverse(inner: &EndoNode, slope_floor: BigRational, guess: BigRational) -> Self {
        debug_assert!(slope_floor.is_positive() && guess.is_positive());
        let cf = inner.defect().value();
        let f1 = inner.eval(&BigInt::one()).abs();
        let num = BigRational::from_integer(BigInt::from(5) * cf + BigInt::from(2) * f1);
        let c = (num / &slope_floor).ceil().to_integer() + 2;
        Self::build(
            NodeKind::Inverse {
                inner: inner.clone(),
                slope_floor,
            },
            c,
            Aux::SlopeGuess(guess),
        )
    }

    pub fn kind(&self) -> &NodeKind {
        &self.0.kind
    }

    pub fn defect(&self) -> &DefectBound {
        &self.0.defect
    }

    /// Caps the memo; once exceeded, entries with the largest arguments are
    /// evicted first.
    pub fn set_memo_cap(&self, cap: Option<usize>) {
        self.0
            .memo_cap
            .store(cap.unwrap_or(usize::MAX), Ordering::Relaxed);
        self.trim_memo();
    }

    pub fn memo_len(&self) -> usize {
        self.0.memo.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    fn trim_memo(&self) {
        let cap = self.0.memo_cap.load(Ordering::Relaxed);
        let mut memo = self.0.memo.write().unwrap_or_else(|e| e.into_inner());
        while memo.len() > cap {
            memo.pop_last();
        }
    }

    pub fn ptr_eq(&self, other: &EndoNode) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        match x.sign() {
            Sign::NoSign => BigInt::zero(),
            Sign::Plus => self.eval_positive(x),
            Sign::Minus => -self.eval_positive(&-x),
        }
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    fn eval_positive(&self, x: &BigInt) -> BigInt {
        match &self.0.kind {
            NodeKind::IntSlope(k) => return k * x,
            NodeKind::RatSlope { p, q } => return (p * x).div_floor(q),
            _ => {}
        }
        if let Some(v) = self.0.memo.read().unwrap_or_else(|e| e.into_inner()).get(x) {
            return v.clone();
        }
        let v = self.compute_positive(x);
        let cap = self.0.memo_cap.load(Ordering::Relaxed);
        if cap > 0 {
            let mut memo = self.0.memo.write().unwrap_or_else(|e| e.into_inner());
            memo.insert(x.clone(), v.clone());
            while memo.len() > cap {
                memo.pop_last();
            }
        }
        v
    }

    fn compute_positive(&self, x: &BigInt) -> BigInt {
        match (&self.0.kind, &self.0.aux) {
            (NodeKind::CfPiecewise(_), Aux::Convergents(cache)) => {
                let (p, q) = cache.bracket(x);
                (p * x).div_floor(&q)
            }
            (NodeKind::Sum(f, g), _) => f.eval(x) + g.eval(x),
            (NodeKind::Neg(f), _) => -f.eval(x),
            (NodeKind::Compose { outer, inner }, _) => outer.eval(&inner.eval(x)),
            (NodeKind::Inverse { inner, .. }, Aux::SlopeGuess(guess)) => {
                crossing_preimage(inner, guess, x)
            }
            (NodeKind::IntSlope(k), _) => k * x,
            (NodeKind::RatSlope { p, q }, _) => (p * x).div_floor(q),
            _ => unreachable!("node built without its auxiliary data"),
        }
    }

    /// `f(n)/n` with radius `c/n`.
    ///
    /// Panics if `n < 1`.
    pub fn approx(&self, n: &BigInt) -> CertifiedApprox {
        assert!(n.is_positive(), "approx needs a positive sample point");
        let value = BigRational::new(self.eval(n), n.clone());
        let radius = BigRational::new(self.defect().value().clone(), n.clone());
        CertifiedApprox { value, radius }
    }

    pub fn approx_u64(&self, n: u64) -> CertifiedApprox {
        self.approx(&BigInt::from(n))
    }

    /// Exhaustively scans `|a|, |b| <= range_bound` and returns the largest
    /// observed `|f(a+b) - f(a) - f(b)|`, or the first pair that reaches the
    /// claimed bound.
    pub fn certify_defect(&self, range_bound: u64) -> Result<BigInt, Box<DefectViolation>> {
        let r = range_bound as i64;
        let table: Vec<BigInt> = (-2 * r..=2 * r).map(|x| self.eval_i64(x)).collect();
        let at = |x: i64| (x + 2 * r) as usize;
        let bound = self.defect().value();

        if let (Some(small), Some(limit)) = (
            table
                .iter()
                .map(|v| v.to_i128())
                .collect::<Option<Vec<i128>>>(),
            bound.to_i128(),
        ) {
            if small.iter().all(|v| v.unsigned_abs() < (1u128 << 120)) {
                let mut worst: i128 = 0;
                for a in -r..=r {
                    let fa = small[at(a)];
                    for b in -r..=r {
                        let d = (small[at(a + b)] - fa - small[at(b)]).abs();
                        if d >= limit {
                            return Err(Box::new(DefectViolation {
                                a: BigInt::from(a),
                                b: BigInt::from(b),
                                observed: BigInt::from(d),
                                bound: bound.clone(),
                            }));
                        }
                        worst = worst.max(d);
                    }
                }
                return Ok(BigInt::from(worst));
            }
        }

        let mut worst = BigInt::zero();
        for a in -r..=r {
            for b in -r..=r {
                let d = (&table[at(a + b)] - &table[at(a)] - &table[at(b)]).abs();
                if &d >= bound {
                    return Err(Box::new(DefectViolation {
                        a: BigInt::from(a),
                        b: BigInt::from(b),
                        observed: d,
                        bound: bound.clone(),
                    }));
                }
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }
}

/// A pair of arguments whose defect reaches the node's claimed bound.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("defect {observed} at a={a}, b={b} reaches claimed bound {bound}")]
pub struct DefectViolation {
    pub a: BigInt,
    pub b: BigInt,
    pub observed: BigInt,
    pub bound: BigInt,
}

/// Finds `y` with `f(y) >= x > f(y-1)` for `x > 0`, starting near `x/guess`.
///
/// Such a crossing point is within `2c/slope + 1` of the least preimage and
/// is the value the inverse node takes.
fn crossing_preimage(f: &EndoNode, guess: &BigRational, x: &BigInt) -> BigInt {
    let start = (BigRational::from_integer(x.clone()) / guess)
        .floor()
        .to_integer();
    let start = start.max(BigInt::one());
    let (mut lo, mut hi);
    if &f.eval(&start) >= x {
        hi = start;
        let mut step = BigInt::one();
        loop {
            let cand = &hi - &step;
            if !cand.is_positive() {
                lo = BigInt::zero();
                break;
            }
            if &f.eval(&cand) < x {
                lo = cand;
                break;
            }
            hi = cand;
            step <<= 1;
        }
    } else {
        lo = start;
        let mut step = BigInt::one();
        loop {
            let cand = &lo + &step;
            if &f.eval(&cand) >= x {
                hi = cand;
                break;
            }
            lo = cand;
            step <<= 1;
        }
    }
    // invariant: f(lo) < x <= f(hi)
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if &f.eval(&mid) >= x {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

impl std::ops::Add for &EndoNode {
    type Output = EndoNode;
    fn add(self, rhs: &EndoNode) -> EndoNode {
        EndoNode::sum(self, rhs)
    }
}

impl std::ops::Sub for &EndoNode {
    type Output = EndoNode;
    fn sub(self, rhs: &EndoNode) -> EndoNode {
        EndoNode::sum(self, &EndoNode::neg(rhs))
    }
}

impl std::ops::Neg for &EndoNode {
    type Output = EndoNode;
    fn neg(self) -> EndoNode {
        EndoNode::neg(self)
    }
}

impl std::ops::Mul for &EndoNode {
    type Output = EndoNode;
    fn mul(self, rhs: &EndoNode) -> EndoNode {
        EndoNode::compose(self, rhs)
    }
}
