//! Exact real arithmetic on Eudoxus reals.
//!
//! A real is represented by a near-endomorphism of the integers, a function
//! `f: Z -> Z` with `|f(a+b) - f(a) - f(b)|` bounded. Every node carries a
//! certified bound on that defect, which turns `f(n)/n` into an interval
//! guaranteed to contain the slope.
//!
//! ```
//! use eudoxus::real::{add, invert, sign, to_decimal};
//! use eudoxus::{cf_to_endo, CfSeq, EndoNode, Fuel};
//!
//! let s = cf_to_endo(&CfSeq::sqrt2());
//! let x = invert(&add(&s, &EndoNode::rat(1, 3).unwrap()), Fuel::default()).unwrap();
//! assert_eq!(to_decimal(&x, 6).unwrap().to_string(), "0.572230 ±1e-6");
//! assert!(sign(&x, Fuel::default()).is_positive());
//! ```

pub mod cf;
pub mod cli;
pub mod endo;
pub mod localization;
pub mod real;

pub use cf::{cf_to_endo, diagonal, endo_to_cf, integer_part, CfSeq};
pub use endo::{CertifiedApprox, DefectBound, EndoNode, NodeKind};
pub use real::{Fuel, SignResult};
