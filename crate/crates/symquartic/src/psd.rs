//! Exact nonnegativity decisions for symmetric quartics.
//!
//! A symmetric quartic in `n >= 4` variables is nonnegative on all of `R^n`
//! if and only if it is nonnegative on every point with at most two distinct
//! coordinates.  Such a point is determined (up to permutation) by a split
//! size `k` and two values `r, s`, so the whole decision collapses to `n+1`
//! binary quartics
//!
//! ```text
//! q_k(r, s) = f(r, ..., r, s, ..., s)      (k leading r's)
//! ```
//!
//! each of which is decided exactly by the univariate machinery in
//! [`crate::univariate`].  The outcome is a [`PsdCertificate`] that either
//! records a nonnegativity witness for every split or reconstructs an
//! explicit rational counterexample point.
//!
//! [`verify_ln_restricted_formula`] checks the closed form the difference
//! quartics `L_n` satisfy under this restriction: the split-`k` binary
//! quartic is `k(n-k)(m-k)(n-m-k) * (r-s)^4` with `m = floor(n/2)`, which
//! makes their nonnegativity visible by inspection (the scalar is a product
//! of two factors of equal sign when `0 <= k <= n`).

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::{format_rational, rat, Point, Polynomial, Rational};
use crate::univariate::RatPoly;

/// The binary quartic obtained from a symmetric quartic by collapsing the
/// variables to `k` copies of `r` and `n-k` copies of `s`.
///
/// Coefficients are stored densely: `coeffs[i]` multiplies `r^(4-i) s^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRestriction {
    k: usize,
    coeffs: [Rational; 5],
}

impl BinaryRestriction {
    /// Builds a restriction directly from its five coefficients
    /// (`coeffs[i]` multiplies `r^(4-i) s^i`).
    pub fn from_coeffs(k: usize, coeffs: [Rational; 5]) -> Self {
        BinaryRestriction { k, coeffs }
    }

    /// The split size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dense coefficients of `r^4, r^3 s, r^2 s^2, r s^3, s^4`.
    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact evaluation at `(r, s)`.
    pub fn eval(&self, r: &Rational, s: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                total += c
                    * crate::poly::rat_pow(r, (4 - i) as u32)
                    * crate::poly::rat_pow(s, i as u32);
            }
        }
        total
    }

    /// The dehomogenization `u(t) = q(t, 1)` as a univariate polynomial.
    fn dehomogenized(&self) -> RatPoly {
        // coeffs[i] multiplies r^(4-i) s^i, i.e. t^(4-i); ascending order
        // therefore reverses the array.
        RatPoly::new(self.coeffs.iter().rev().cloned().collect())
    }
}

impl fmt::Display for BinaryRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "k={} coeffs {}", self.k, parts.join(" "))
    }
}

/// Evidence that a binary quartic is globally nonnegative: the number of
/// distinct real roots of its dehomogenization and the sample points (one
/// per sign-invariant region) at which nonnegativity was confirmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonnegWitness {
    pub distinct_real_roots: usize,
    pub samples: Vec<Rational>,
}

/// Outcome of the exact binary-quartic decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonnegDecision {
    /// The quartic is nonnegative everywhere.
    Nonneg(NonnegWitness),
    /// A rational point with a strictly negative value.
    Counterexample {
        r: Rational,
        s: Rational,
        value: Rational,
    },
}

impl NonnegDecision {
    pub fn is_nonneg(&self) -> bool {
        matches!(self, NonnegDecision::Nonneg(_))
    }
}

/// Verdict of a full symmetric-quartic check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsdVerdict {
    Psd,
    /// A rational point where the form is strictly negative, together with
    /// its exact value.
    NotPsd { witness: Point, value: Rational },
}

/// The complete record of a symmetric-quartic nonnegativity decision: one
/// decided binary restriction per split size, plus the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsdCertificate {
    n: usize,
    restrictions: Vec<(BinaryRestriction, NonnegDecision)>,
    verdict: PsdVerdict,
}

impl PsdCertificate {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The decided restrictions, in ascending split order `k = 0..n`.
    pub fn restrictions(&self) -> &[(BinaryRestriction, NonnegDecision)] {
        &self.restrictions
    }

    pub fn verdict(&self) -> &PsdVerdict {
        &self.verdict
    }

    pub fn is_psd(&self) -> bool {
        matches!(self.verdict, PsdVerdict::Psd)
    }

    /// Deterministic text rendering, stable enough for golden-file tests.
    pub fn to_text(&self) -> String {
        let mut out = String::from("psd certificate\n");
        out.push_str(&format!("n: {}\n", self.n));
        for (restriction, decision) in &self.restrictions {
            out.push_str(&restriction.to_string());
            match decision {
                NonnegDecision::Nonneg(w) => {
                    let samples: Vec<String> =
                        w.samples.iter().map(format_rational).collect();
                    out.push_str(&format!(
                        " nonneg roots={} samples={}\n",
                        w.distinct_real_roots,
                        samples.join(",")
                    ));
                }
                NonnegDecision::Counterexample { r, s, value } => {
                    out.push_str(&format!(
                        " counterexample r={} s={} value={}\n",
                        format_rational(r),
                        format_rational(s),
                        format_rational(value)
                    ));
                }
            }
        }
        match &self.verdict {
            PsdVerdict::Psd => out.push_str("verdict: psd\n"),
            PsdVerdict::NotPsd { witness, value } => {
                out.push_str("verdict: not_psd\n");
                out.push_str(&format!("witness: {witness}\n"));
                out.push_str(&format!("value: {}\n", format_rational(value)));
            }
        }
        out
    }
}

/// Checks that `f` is a nonzero homogeneous quartic.
fn require_quartic(f: &Polynomial) -> Result<(), Error> {
    // The zero polynomial reports homogeneous degree 0, so it is rejected
    // here too — no meaningful quartic certificate exists for it.
    if f.homogeneous_degree() != Some(4) {
        return Err(Error::NotQuartic);
    }
    Ok(())
}

/// Collapses a symmetric quartic to the split-`k` binary quartic
/// `q(r, s) = f(r, ..., r, s, ..., s)` (with `k` leading `r`'s), exactly.
///
/// Symmetry is required because only then is the choice of *which* `k`
/// variables receive `r` immaterial, which is what makes the binary
/// restrictions a faithful test set.
pub fn restrict(f: &Polynomial, k: usize) -> Result<BinaryRestriction, Error> {
    let n = f.var_count();
    if k > n {
        return Err(Error::SplitOutOfRange { k, n });
    }
    require_quartic(f)?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut coeffs: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
    for (mono, c) in f.terms() {
        let r_deg: u32 = mono.exponents()[..k].iter().sum();
        let s_deg = 4 - r_deg as usize;
        coeffs[s_deg] += c;
    }
    Ok(BinaryRestriction { k, coeffs })
}

/// Decides, exactly, whether a binary quartic is nonnegative on all of
/// `R^2`.
///
/// The two axis values `q(1,0)` and `q(0,1)` are checked first (giving the
/// simplest possible counterexamples), then the dehomogenization
/// `u(t) = q(t,1)` is analysed: its real line splits into sign-invariant
/// regions at the roots of its square-free part, and one exact evaluation
/// per region settles the sign everywhere.
pub fn binary_quartic_nonneg(q: &BinaryRestriction) -> NonnegDecision {
    if q.coeffs[0].is_negative() {
        return NonnegDecision::Counterexample {
            r: rat(1),
            s: rat(0),
            value: q.coeffs[0].clone(),
        };
    }
    if q.coeffs[4].is_negative() {
        return NonnegDecision::Counterexample {
            r: rat(0),
            s: rat(1),
            value: q.coeffs[4].clone(),
        };
    }
    let u = q.dehomogenized();
    if u.is_zero() {
        return NonnegDecision::Nonneg(NonnegWitness {
            distinct_real_roots: 0,
            samples: Vec::new(),
        });
    }
    let samples = u.sign_region_samples();
    for t in &samples {
        let value = u.eval(t);
        if value.is_negative() {
            return NonnegDecision::Counterexample {
                r: t.clone(),
                s: rat(1),
                value,
            };
        }
    }
    NonnegDecision::Nonneg(NonnegWitness {
        distinct_real_roots: u.count_distinct_real_roots(),
        samples,
    })
}

/// Decides nonnegativity of a symmetric homogeneous quartic in `n >= 4`
/// variables, exactly, returning the full per-split certificate.
///
/// All `n + 1` splits are decided (not just the first failure), and a
/// failing split is turned back into an explicit `n`-dimensional witness
/// point whose value is re-checked by exact evaluation.
pub fn check_psd(f: &Polynomial) -> Result<PsdCertificate, Error> {
    let n = f.var_count();
    require_quartic(f)?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if n < 4 {
        return Err(Error::TooFewVariables { n, min: 4 });
    }

    let mut restrictions = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let restriction = restrict(f, k)?;
        let decision = binary_quartic_nonneg(&restriction);
        restrictions.push((restriction, decision));
    }

    let failure = restrictions.iter().find_map(|(restriction, decision)| {
        if let NonnegDecision::Counterexample { r, s, .. } = decision {
            Some((restriction.k(), r.clone(), s.clone()))
        } else {
            None
        }
    });

    let verdict = match failure {
        None => PsdVerdict::Psd,
        Some((k, r, s)) => {
            let mut coords = vec![r; k];
            coords.resize(n, s);
            let witness = Point::new(coords);
            let value = f.eval(&witness)?;
            assert!(
                value.is_negative(),
                "internal error: reconstructed witness does not evaluate negative"
            );
            PsdVerdict::NotPsd { witness, value }
        }
    };

    Ok(PsdCertificate {
        n,
        restrictions,
        verdict,
    })
}

/// Checks the closed form of the difference quartic's binary restrictions:
/// for every split `k`, the restriction of the `n`-variable family member
/// equals `k(n-k)(m-k)(n-m-k) * (r-s)^4` with `m = floor(n/2)`, as an exact
/// polynomial identity.
pub fn verify_ln_restricted_formula(n: usize) -> Result<bool, Error> {
    let f = crate::forms::make_l(n)?;
    let m = (n / 2) as i64;
    let n_i = n as i64;
    for k in 0..=n {
        let k_i = k as i64;
        let scalar = k_i * (n_i - k_i) * (m - k_i) * (n_i - m - k_i);
        let expected = BinaryRestriction::from_coeffs(
            k,
            [
                rat(scalar),
                rat(-4 * scalar),
                rat(6 * scalar),
                rat(-4 * scalar),
                rat(scalar),
            ],
        );
        if restrict(&f, k)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{make_c, make_choi_lam_44, make_l};
    use crate::poly::frac;

    fn coeffs_i64(c: [i64; 5]) -> [Rational; 5] {
        std::array::from_fn(|i| rat(c[i]))
    }

    #[test]
    fn restrict_l5_split_1_is_8_times_difference_quartic() {
        let f = make_l(5).unwrap();
        let q = restrict(&f, 1).unwrap();
        assert_eq!(q.coeffs(), &coeffs_i64([8, -32, 48, -32, 8]));
    }

    #[test]
    fn restrict_split_0_has_only_the_pure_s_coefficient() {
        let f = make_l(5).unwrap();
        let q = restrict(&f, 0).unwrap();
        // Collapsing to one value gives f(s,...,s) = f(1,...,1) s^4, and the
        // diagonal is a zero of this family.
        assert_eq!(q.coeffs(), &coeffs_i64([0, 0, 0, 0, 0]));
        let g = make_choi_lam_44();
        let q = restrict(&g, 0).unwrap();
        // cl44(1,1,1,1) = 16.
        assert_eq!(q.coeffs(), &coeffs_i64([0, 0, 0, 0, 16]));
    }

    #[test]
    fn restrict_l4_split_2_vanishes() {
        let f = make_l(4).unwrap();
        let q = restrict(&f, 2).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn restrict_agrees_with_direct_evaluation() {
        let f = make_c(6).unwrap();
        let r = frac(3, 2);
        let s = frac(-1, 3);
        for k in 0..=6 {
            let q = restrict(&f, k).unwrap();
            let mut coords = vec![r.clone(); k];
            coords.resize(6, s.clone());
            assert_eq!(q.eval(&r, &s), f.eval(&Point::new(coords)).unwrap());
        }
    }

    #[test]
    fn restrict_rejects_bad_inputs() {
        let f = make_l(4).unwrap();
        assert_eq!(restrict(&f, 5), Err(Error::SplitOutOfRange { k: 5, n: 4 }));
        let asym = &f + &Polynomial::var(4, 0).pow(4);
        assert_eq!(restrict(&asym, 1), Err(Error::NotSymmetric));
        let cubic = crate::forms::orbit_sum(4, &[2, 1]).unwrap();
        assert_eq!(restrict(&cubic, 1), Err(Error::NotQuartic));
        assert_eq!(restrict(&Polynomial::zero(4), 1), Err(Error::NotQuartic));
    }

    #[test]
    fn nonneg_decision_on_even_power() {
        // (r - s)^4
        let q = BinaryRestriction::from_coeffs(1, coeffs_i64([1, -4, 6, -4, 1]));
        match binary_quartic_nonneg(&q) {
            NonnegDecision::Nonneg(w) => assert_eq!(w.distinct_real_roots, 1),
            other => panic!("expected nonneg, got {other:?}"),
        }
    }

    #[test]
    fn nonneg_decision_fast_paths() {
        // -r^4 fails on the r-axis.
        let q = BinaryRestriction::from_coeffs(0, coeffs_i64([-1, 0, 0, 0, 0]));
        assert_eq!(
            binary_quartic_nonneg(&q),
            NonnegDecision::Counterexample {
                r: rat(1),
                s: rat(0),
                value: rat(-1)
            }
        );
        // -s^4 fails on the s-axis.
        let q = BinaryRestriction::from_coeffs(0, coeffs_i64([0, 0, 0, 0, -1]));
        assert_eq!(
            binary_quartic_nonneg(&q),
            NonnegDecision::Counterexample {
                r: rat(0),
                s: rat(1),
                value: rat(-1)
            }
        );
    }

    #[test]
    fn nonneg_decision_finds_interior_counterexample() {
        // r^2 s^2 - r^4 = r^2 (s - r)(s + r): negative whenever |r| > |s|.
        let q = BinaryRestriction::from_coeffs(0, coeffs_i64([-1, 0, 1, 0, 0]));
        match binary_quartic_nonneg(&q) {
            NonnegDecision::Counterexample { r, s, value } => {
                assert!(value.is_negative());
                assert_eq!(q.eval(&r, &s), value);
                assert!(r.abs() > s.abs());
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn nonneg_decision_handles_zero_and_positive_definite() {
        let zero = BinaryRestriction::from_coeffs(0, coeffs_i64([0; 5]));
        match binary_quartic_nonneg(&zero) {
            NonnegDecision::Nonneg(w) => {
                assert_eq!(w.distinct_real_roots, 0);
                assert!(w.samples.is_empty());
            }
            other => panic!("expected nonneg, got {other:?}"),
        }
        // r^4 + s^4 has no nontrivial real zero at all.
        let pd = BinaryRestriction::from_coeffs(0, coeffs_i64([1, 0, 0, 0, 1]));
        match binary_quartic_nonneg(&pd) {
            NonnegDecision::Nonneg(w) => {
                assert_eq!(w.distinct_real_roots, 0);
                assert_eq!(w.samples.len(), 1);
            }
            other => panic!("expected nonneg, got {other:?}"),
        }
    }

    #[test]
    fn check_psd_certifies_the_difference_quartics() {
        for n in 4..=7 {
            let cert = check_psd(&make_l(n).unwrap()).unwrap();
            assert!(cert.is_psd(), "n = {n}");
            assert_eq!(cert.restrictions().len(), n + 1);
        }
    }

    #[test]
    fn check_psd_finds_witness_for_negated_form() {
        let f = make_l(5).unwrap().neg();
        let cert = check_psd(&f).unwrap();
        let PsdVerdict::NotPsd { witness, value } = cert.verdict() else {
            panic!("expected not_psd");
        };
        assert!(value.is_negative());
        assert_eq!(&f.eval(witness).unwrap(), value);
    }

    #[test]
    fn check_psd_rejects_out_of_scope_inputs() {
        assert_eq!(
            check_psd(&crate::forms::make_robinson()),
            Err(Error::NotQuartic),
            "degree-6 forms are outside the binary-restriction reduction"
        );
        let three_vars = crate::forms::orbit_sum(3, &[4]).unwrap();
        assert_eq!(
            check_psd(&three_vars),
            Err(Error::TooFewVariables { n: 3, min: 4 })
        );
        let asym = Polynomial::var(4, 0).pow(4);
        assert_eq!(check_psd(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn restricted_formula_holds_and_k_coefficients_match() {
        assert!(verify_ln_restricted_formula(4).unwrap());
        assert!(verify_ln_restricted_formula(5).unwrap());
        // Spot-check the scalars for n=5 (m=2): k = 0..5 gives
        // 0, 8, 0, 0, 8, 0.
        let f = make_l(5).unwrap();
        let scalars: Vec<Rational> = (0..=5)
            .map(|k| restrict(&f, k).unwrap().coeffs()[0].clone())
            .collect();
        let expected: Vec<Rational> = [0, 8, 0, 0, 8, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(scalars, expected);
        // And for n=4 (m=2): 0, 3, 0, 3, 0.
        let f = make_l(4).unwrap();
        let scalars: Vec<Rational> = (0..=4)
            .map(|k| restrict(&f, k).unwrap().coeffs()[0].clone())
            .collect();
        let expected: Vec<Rational> = [0, 3, 0, 3, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(scalars, expected);
    }

    #[test]
    fn certificate_text_is_stable() {
        let cert = check_psd(&make_l(4).unwrap()).unwrap();
        let text = cert.to_text();
        assert!(text.starts_with("psd certificate\nn: 4\n"));
        assert!(text.ends_with("verdict: psd\n"));
        assert!(text.contains("k=1 coeffs 3/1 -12/1 18/1 -12/1 3/1 nonneg roots=1"));
        assert!(text.contains("k=2 coeffs 0/1 0/1 0/1 0/1 0/1 nonneg roots=0 samples=\n"));
    }
}
