//! Exact univariate polynomials and real-root isolation.
//!
//! This module supplies the one-variable machinery behind the positivity
//! decisions: square-free parts, Sturm chains, a Cauchy root bound, and
//! bisection-based isolation of all real roots into disjoint rational
//! intervals whose endpoints are not roots.
//!
//! The intended use is exact sign analysis: for a nonzero `u`, the real line
//! splits into finitely many maximal intervals on which `u` has constant
//! sign, separated by the real roots.  [`RatPoly::sign_region_samples`]
//! returns one rational point inside every such region, so checking `u >= 0`
//! everywhere reduces to finitely many exact evaluations.

use num_traits::{One, Signed, Zero};

use crate::poly::{rat, Rational};

/// A univariate polynomial with rational coefficients, stored as an
/// ascending coefficient vector with no trailing zeros (so the zero
/// polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (empty for zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn leading(&self) -> &Rational {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The formal derivative.
    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        RatPoly::new(coeffs)
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let lead = self.leading().clone();
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
        }
    }

    fn divmod(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dlead = d.leading().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let delta = dc * &factor;
                    rem[shift + i] -= delta;
                }
                quot[shift] = factor;
            }
            rem.pop(); // leading entry is now exactly zero
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.divmod(d).1
    }

    /// Quotient of an exact division (panics if the division leaves a
    /// remainder, which would indicate a bug in the caller).
    pub fn div_exact(&self, d: &RatPoly) -> RatPoly {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            // Normalizing each remainder keeps coefficient growth in check.
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// The square-free part `self / gcd(self, self')`, which has the same
    /// real roots, each with multiplicity one.
    pub fn square_free_part(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let g = RatPoly::gcd(self, &self.derivative());
        self.div_exact(&g)
    }

    /// The Sturm chain `p, p', -rem(...), ...` down to a zero remainder.
    pub fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone()];
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                return chain;
            }
            chain.push(r.neg());
        }
    }

    fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// A strict bound `B` with every real root in `(-B, B)`: the classical
    /// `1 + max |c_i| / |c_d|` over the non-leading coefficients.
    ///
    /// # Panics
    ///
    /// Panics on constant (including zero) polynomials, which have no
    /// meaningful root bound.
    pub fn cauchy_root_bound(&self) -> Rational {
        let d = self.degree().expect("zero polynomial");
        assert!(d > 0, "constant polynomial has no root bound");
        let lead = self.leading().abs();
        let mut max = Rational::zero();
        for c in &self.coeffs[..d] {
            let ratio = c.abs() / &lead;
            if ratio > max {
                max = ratio;
            }
        }
        Rational::one() + max
    }

    /// Number of distinct real roots, counted exactly via a Sturm chain on
    /// the square-free part.
    pub fn count_distinct_real_roots(&self) -> usize {
        debug_assert!(!self.is_zero(), "root count of the zero polynomial");
        let v = self.square_free_part();
        if v.degree().map_or(true, |d| d == 0) {
            return 0;
        }
        let chain = v.sturm_chain();
        let bound = v.cauchy_root_bound();
        sign_variations(&chain, &(-&bound)) - sign_variations(&chain, &bound)
    }

    /// Isolates the distinct real roots into disjoint open intervals
    /// `(a, b)` with rational endpoints that are themselves not roots.
    /// Intervals are returned in increasing order, one per root.
    pub fn isolate_real_roots(&self) -> Vec<(Rational, Rational)> {
        debug_assert!(!self.is_zero(), "root isolation of the zero polynomial");
        let v = self.square_free_part();
        if v.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let chain = v.sturm_chain();
        let bound = v.cauchy_root_bound();
        let lo = -&bound;
        let hi = bound;
        let vars_lo = sign_variations(&chain, &lo);
        let vars_hi = sign_variations(&chain, &hi);
        let mut out = Vec::new();
        isolate_rec(&v, &chain, lo, vars_lo, hi, vars_hi, &mut out);
        out
    }

    /// One rational sample point in the interior of every maximal
    /// sign-invariant region of the real line (the open intervals between
    /// consecutive real roots, plus the two unbounded ends).
    ///
    /// For a polynomial with no real roots this is a single point; the
    /// caller must not pass the zero polynomial.
    pub fn sign_region_samples(&self) -> Vec<Rational> {
        assert!(!self.is_zero(), "sign regions of the zero polynomial");
        let intervals = self.isolate_real_roots();
        if intervals.is_empty() {
            return vec![Rational::zero()];
        }
        // The left endpoint of the first interval lies left of every root;
        // each right endpoint b_i lies strictly between root i and root i+1
        // (the intervals are disjoint), and the last lies right of all roots.
        let mut samples = vec![intervals[0].0.clone()];
        for (_, b) in &intervals {
            if samples.last() != Some(b) {
                samples.push(b.clone());
            }
        }
        samples
    }
}

/// Sign changes in the chain's values at `x`, ignoring zeros.
fn sign_variations(chain: &[RatPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None; // Some(is_negative)
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(prev) = last {
            if prev != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

/// A point strictly between `a` and `b` at which `v` does not vanish.
///
/// Tries the midpoint first, then the points `a + (b-a) * j/(d+2)`; since
/// `v` has at most `d` roots, some candidate always survives.
fn non_root_between(v: &RatPoly, a: &Rational, b: &Rational) -> Rational {
    let width = b - a;
    let d = v.degree().unwrap() as i64;
    let mid = a + &width * frac_r(1, 2);
    if !v.eval(&mid).is_zero() {
        return mid;
    }
    for j in 1..=(d + 1) {
        let m = a + &width * frac_r(j, d + 2);
        if !v.eval(&m).is_zero() {
            return m;
        }
    }
    unreachable!("degree-{d} polynomial cannot vanish at {} points", d + 2)
}

fn frac_r(n: i64, d: i64) -> Rational {
    crate::poly::frac(n, d)
}

/// Bisection on Sturm counts: the interval `(a, b)` contains
/// `vars(a) - vars(b)` roots of the square-free `v`; split until each piece
/// holds exactly one.
fn isolate_rec(
    v: &RatPoly,
    chain: &[RatPoly],
    a: Rational,
    vars_a: usize,
    b: Rational,
    vars_b: usize,
    out: &mut Vec<(Rational, Rational)>,
) {
    let count = vars_a - vars_b;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((a, b));
        return;
    }
    let m = non_root_between(v, &a, &b);
    let vars_m = sign_variations(chain, &m);
    isolate_rec(v, chain, a, vars_a, m.clone(), vars_m, out);
    isolate_rec(v, chain, m, vars_m, b, vars_b, out);
}
