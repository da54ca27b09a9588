//! Exact certificates for symmetric quartic forms.
//!
//! This crate decides, with arbitrary-precision rational arithmetic and no
//! numerical tolerance anywhere, two questions about a symmetric homogeneous
//! quartic `f` in `n` variables:
//!
//! 1. **Is `f` nonnegative everywhere?**  For symmetric quartics (`n >= 4`)
//!    it suffices to test points with at most two distinct coordinates, so
//!    the decision reduces to `n + 1` binary quartics handled by exact real
//!    root isolation — see [`psd::check_psd`].
//!
//! 2. **Is `f` a sum of squares?**  One direction is witnessed by verified
//!    explicit identities ([`sos::verify_sos_identity`]); the other by
//!    *zero-forcing certificates*: if the only quadratic vanishing on a
//!    verified set of zeros of `f` is the zero quadratic, no SOS
//!    decomposition can exist — see [`sos::certify_not_sos`].
//!
//! The gap between the two answers is populated by classical families
//! constructed in [`forms`]: the difference quartics `L:<n>` (nonnegative
//! for all `n`, not SOS for odd `n >= 5`), their even relatives `C:<2m>`,
//! the quartic `cl44`, the sextic `robinson`, and degree-raising lifts.
//! [`chart`] renders where psd = sos holds as `n` and the degree grow.
//!
//! # Quick tour
//!
//! ```
//! use symquartic::forms::make_l;
//! use symquartic::psd::check_psd;
//! use symquartic::sos::{certify_not_sos, enumerate_zero_points};
//!
//! // The five-variable difference quartic is nonnegative ...
//! let f = make_l(5)?;
//! assert!(check_psd(&f)?.is_psd());
//!
//! // ... yet not a sum of squares: its 0/1 zeros of weight 2 and 3 admit
//! // no nonzero vanishing quadratic.
//! let zeros = enumerate_zero_points(5, &[2, 3])?;
//! let cert = certify_not_sos(&f, &zeros)?;
//! assert!(cert.is_not_sos());
//! assert_eq!(cert.kernel_dimension(), 0);
//! # Ok::<(), symquartic::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability; the `symq`
//! binary exposes the same operations on the command line.

pub mod chart;
pub mod cli;
mod error;
pub mod forms;
pub mod matrix;
pub mod poly;
pub mod psd;
pub mod sos;
pub mod univariate;

pub use error::Error;
pub use poly::{Monomial, Point, Polynomial, Rational};
