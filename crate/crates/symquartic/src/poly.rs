//! Sparse multivariate polynomials over the rationals.
//!
//! Everything in this crate is exact: coefficients are arbitrary-precision
//! rationals and no floating point is used anywhere.  A [`Polynomial`] is a
//! sparse map from monomials to nonzero coefficients, in a ring with a fixed
//! number of variables `x_1, ..., x_n`.
//!
//! Monomials are ordered by total degree first, then lexicographically by
//! exponent vector.  That order is what makes the text serialization
//! canonical: two polynomials are equal if and only if their serialized
//! forms are byte-identical, which is what the certificate checkers rely on.
//!
//! # Text format
//!
//! A polynomial is written as a header line followed by one line per term:
//!
//! ```text
//! poly n=<variables> d=<max degree>
//! <numerator>/<denominator> <e1> <e2> ... <en>
//! ```
//!
//! Terms appear in increasing monomial order and zero coefficients are never
//! written.  The zero polynomial is a lone header with `d=0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a rational.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer power of a rational, with `r^0 = 1`.
pub fn rat_pow(r: &Rational, e: u32) -> Rational {
    match e {
        0 => Rational::one(),
        1 => r.clone(),
        // numer/denom are already coprime, so their powers are too and
        // `Rational::new` has no reduction work to do.
        _ => Rational::new(Pow::pow(r.numer(), e), Pow::pow(r.denom(), e)),
    }
}

/// Renders a rational as `numerator/denominator`, e.g. `-3/1` or `8/5`.
///
/// Integers keep their explicit `/1` so that the output grammar has exactly
/// one shape.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a rational written as `a/b` or as a bare integer `a`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// A power product `x_1^{e_1} ... x_n^{e_n}`, stored as its exponent vector.
///
/// Monomials compare by total degree first, then lexicographically by
/// exponent vector, so iterating a polynomial's term map always yields the
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Monomial with the given exponent vector.
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn constant(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The monomial `x_i` (zero-based `i`) in `n` variables.
    ///
    /// # Panics
    ///
    /// Panics if `i >= n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Number of variables of the ambient ring.
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent of variable `i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// The full exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps }
    }

    fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { exps }
    }

    /// Image under the variable relabeling `x_i -> x_{perm[i]}`.
    fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A rational point, used as an evaluation argument and as a certificate
/// witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    /// Point with the given small-integer coordinates.
    pub fn from_i64(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| rat(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Parses a comma-separated coordinate list such as `1,-2/3,0`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        if coords.is_empty() {
            return Err(Error::Parse("empty point".into()));
        }
        Ok(Point { coords })
    }
}

impl fmt::Display for Point {
    /// Comma-separated coordinates in the same `a/b` shape the parser accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A sparse polynomial with rational coefficients in a ring with a fixed
/// number of variables.
///
/// The term map never stores zero coefficients, so structural equality is
/// polynomial equality.
///
/// ```
/// use symquartic::poly::{rat, Polynomial};
///
/// let n = 2;
/// let x = Polynomial::var(n, 0);
/// let y = Polynomial::var(n, 1);
/// let f = (&x - &y).pow(2);
/// assert_eq!(f.eval_i64(&[3, 1]).unwrap(), rat(4));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    /// The zero polynomial in `n` variables.
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c` in `n` variables.
    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(Monomial::constant(n), c);
        p
    }

    /// The variable `x_i` (zero-based `i`) in `n` variables.
    ///
    /// # Panics
    ///
    /// Panics if `i >= n`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(Monomial::var(n, i), Rational::one());
        p
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs.
    ///
    /// Duplicate monomials are summed; zero coefficients are dropped.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::VarCountMismatch {
                    left: n,
                    right: exps.len(),
                });
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }

    /// Number of variables of the ambient ring.
    pub fn var_count(&self) -> usize {
        self.n
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in canonical (degree, then lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m` in place, dropping the entry if it cancels to zero.
    fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.arity(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Sum of two polynomials in the same ring.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two polynomials in the same ring.
    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Product of two polynomials in the same ring.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// The negation `-f`.
    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c))
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// The scalar multiple `c * f`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// The power `f^e`, with `f^0 = 1`.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.n, Rational::one());
        for _ in 0..e {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, p: &Point) -> Result<Rational, Error> {
        if p.len() != self.n {
            return Err(Error::PointLength {
                expected: self.n,
                got: p.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= rat_pow(p.coord(i), e);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Evaluation at a small-integer point; convenience for tests and
    /// examples.
    pub fn eval_i64(&self, coords: &[i64]) -> Result<Rational, Error> {
        self.eval(&Point::from_i64(coords))
    }

    /// Sets `x_i = 0` and removes the variable, returning a polynomial in
    /// `n - 1` variables.
    pub fn substitute_zero(&self, i: usize) -> Result<Polynomial, Error> {
        if i >= self.n {
            return Err(Error::VarIndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Polynomial::zero(self.n - 1);
        for (m, c) in &self.terms {
            if m.exponent(i) == 0 {
                out.add_term(m.without_var(i), c.clone());
            }
        }
        Ok(out)
    }

    /// Applies the variable relabeling `x_i -> x_{perm[i]}`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &t in perm {
            assert!(t < self.n && !seen[t], "not a permutation of 0..n");
            seen[t] = true;
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.permuted(perm), c.clone());
        }
        out
    }

    /// Largest total degree among the terms (0 for the zero polynomial).
    pub fn max_degree(&self) -> u32 {
        // The term map is ordered by degree first, so the last key is maximal.
        self.terms
            .keys()
            .next_back()
            .map_or(0, |m| m.degree())
    }

    /// `Some(d)` if every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree; it reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut keys = self.terms.keys();
        let first = match keys.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        // Keys ascend by degree, so checking the last one suffices.
        match self.terms.keys().next_back() {
            Some(m) if m.degree() == first => Some(first),
            _ => None,
        }
    }

    /// Whether every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        if self.is_zero() {
            return true;
        }
        self.homogeneous_degree() == Some(d)
    }

    /// Whether the polynomial is invariant under every permutation of its
    /// variables.
    ///
    /// Invariance under the transposition `(x_1 x_2)` and the full cycle
    /// `(x_1 x_2 ... x_n)` implies invariance under the whole symmetric
    /// group, since those two generate it.
    pub fn is_symmetric(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut swap: Vec<usize> = (0..self.n).collect();
        swap.swap(0, 1);
        if self.permute_variables(&swap) != *self {
            return false;
        }
        let cycle: Vec<usize> = (0..self.n).map(|i| (i + 1) % self.n).collect();
        self.permute_variables(&cycle) == *self
    }

    /// Canonical text serialization; see the module docs for the grammar.
    pub fn to_canonical_string(&self) -> String {
        let mut out = format!("poly n={} d={}\n", self.n, self.max_degree());
        for (m, c) in &self.terms {
            out.push_str(&format_rational(c));
            for &e in m.exponents() {
                out.push(' ');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text serialization produced by
    /// [`to_canonical_string`](Self::to_canonical_string).
    ///
    /// Term order is not required on input, but duplicate monomials, zero
    /// coefficients, and a header degree that disagrees with the terms are
    /// all rejected, so that damaged certificate files fail loudly.
    pub fn parse(text: &str) -> Result<Polynomial, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polynomial text".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || Error::Parse(format!("bad header '{header}'"));
        if tokens.len() != 3 || tokens[0] != "poly" {
            return Err(bad_header());
        }
        let n: usize = tokens[1]
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad_header)?;
        let d: u32 = tokens[2]
            .strip_prefix("d=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad_header)?;

        let mut p = Polynomial::zero(n);
        for line in lines {
            let mut parts = line.split_whitespace();
            let coeff = parse_rational(
                parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("bad term line '{line}'")))?,
            )?;
            if coeff.is_zero() {
                return Err(Error::Parse(format!(
                    "zero coefficient in term line '{line}'"
                )));
            }
            let exps: Vec<u32> = parts
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent '{t}'")))
                })
                .collect::<Result<_, _>>()?;
            if exps.len() != n {
                return Err(Error::Parse(format!(
                    "term line '{line}' has {} exponents, expected {n}",
                    exps.len()
                )));
            }
            let m = Monomial::new(exps);
            if p.terms.contains_key(&m) {
                return Err(Error::Parse(format!("duplicate monomial in '{line}'")));
            }
            p.add_term(m, coeff);
        }
        if p.max_degree() != d {
            return Err(Error::Parse(format!(
                "header says d={d} but terms have max degree {}",
                p.max_degree()
            )));
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    /// Human-readable sum of terms, e.g. `3*x1^2*x2 - 1/2*x2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.degree() == 0;
            if mag.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs).expect("operands in different rings")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs).expect("operands in different rings")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs).expect("operands in different rings")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(2, 0), Polynomial::var(2, 1))
    }

    #[test]
    fn monomial_order_is_degree_then_lex() {
        let a = Monomial::new(vec![2, 0]); // x^2
        let b = Monomial::new(vec![0, 1]); // y
        let c = Monomial::new(vec![1, 1]); // xy
        assert!(b < a, "lower degree first");
        assert!(c < a, "same degree: lex on exponent vectors");
        assert!(b < c);
    }

    #[test]
    fn binomial_fourth_power() {
        let (x, y) = xy();
        let f = (&x - &y).pow(4);
        // (x - y)^4 = x^4 - 4x^3y + 6x^2y^2 - 4xy^3 + y^4
        let expected = Polynomial::from_terms(
            2,
            vec![
                (vec![4, 0], rat(1)),
                (vec![3, 1], rat(-4)),
                (vec![2, 2], rat(6)),
                (vec![1, 3], rat(-4)),
                (vec![0, 4], rat(1)),
            ],
        )
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn addition_cancels_to_zero() {
        let (x, y) = xy();
        let f = &x - &y;
        let g = &y - &x;
        assert!((&f + &g).is_zero());
    }

    #[test]
    fn mixed_ring_operations_fail() {
        let f = Polynomial::var(2, 0);
        let g = Polynomial::var(3, 0);
        assert_eq!(
            f.add(&g),
            Err(Error::VarCountMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn eval_matches_hand_computation() {
        let (x, y) = xy();
        // f = 2x^2y - y^3/3
        let f = &x.pow(2).mul(&y).unwrap().scale(&rat(2)) - &y.pow(3).scale(&frac(1, 3));
        let v = f.eval(&Point::new(vec![rat(3), rat(-2)])).unwrap();
        // 2*9*(-2) - (-8)/3 = -36 + 8/3 = -100/3
        assert_eq!(v, frac(-100, 3));
    }

    #[test]
    fn eval_checks_point_length() {
        let f = Polynomial::var(3, 1);
        assert_eq!(
            f.eval(&Point::from_i64(&[1, 2])),
            Err(Error::PointLength { expected: 3, got: 2 })
        );
    }

    #[test]
    fn substitute_zero_drops_terms_and_variable() {
        let n = 3;
        let x = Polynomial::var(n, 0);
        let z = Polynomial::var(n, 2);
        // f = x^2 + xz + z^2; setting z = 0 leaves x^2 in two variables.
        let f = &(&x.pow(2) + &x.mul(&z).unwrap()) + &z.pow(2);
        let g = f.substitute_zero(2).unwrap();
        assert_eq!(g.var_count(), 2);
        assert_eq!(g, Polynomial::var(2, 0).pow(2));
        assert_eq!(
            f.substitute_zero(3),
            Err(Error::VarIndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn homogeneity_detection() {
        let (x, y) = xy();
        let f = (&x - &y).pow(4);
        assert_eq!(f.homogeneous_degree(), Some(4));
        assert!(f.is_homogeneous(4));
        assert!(!f.is_homogeneous(3));
        let g = &f + &x;
        assert_eq!(g.homogeneous_degree(), None);
        assert!(Polynomial::zero(2).is_homogeneous(7));
    }

    #[test]
    fn symmetry_detection() {
        let n = 3;
        let x = Polynomial::var(n, 0);
        let y = Polynomial::var(n, 1);
        let z = Polynomial::var(n, 2);
        let e1 = &(&x + &y) + &z;
        let power_sum = &(&x.pow(3) + &y.pow(3)) + &z.pow(3);
        assert!(e1.pow(2).is_symmetric());
        assert!(power_sum.is_symmetric());
        assert!(!(&e1 + &x).is_symmetric());
    }

    #[test]
    fn serialization_round_trips_and_is_canonical() {
        let (x, y) = xy();
        let f = (&x - &y).pow(4).scale(&frac(1, 2));
        let text = f.to_canonical_string();
        assert_eq!(
            text,
            "poly n=2 d=4\n1/2 0 4\n-2/1 1 3\n3/1 2 2\n-2/1 3 1\n1/2 4 0\n"
        );
        assert_eq!(Polynomial::parse(&text).unwrap(), f);
        // The zero polynomial is a bare header.
        assert_eq!(Polynomial::zero(3).to_canonical_string(), "poly n=3 d=0\n");
        assert_eq!(
            Polynomial::parse("poly n=3 d=0\n").unwrap(),
            Polynomial::zero(3)
        );
    }

    #[test]
    fn parse_rejects_damaged_input() {
        assert!(Polynomial::parse("").is_err());
        assert!(Polynomial::parse("poly n=2\n").is_err());
        assert!(Polynomial::parse("poly n=2 d=1\n1/1 1\n").is_err(), "short exponent row");
        assert!(
            Polynomial::parse("poly n=2 d=1\n0/1 1 0\n").is_err(),
            "zero coefficient"
        );
        assert!(
            Polynomial::parse("poly n=2 d=1\n1/1 1 0\n2/1 1 0\n").is_err(),
            "duplicate monomial"
        );
        assert!(
            Polynomial::parse("poly n=2 d=3\n1/1 1 0\n").is_err(),
            "degree header mismatch"
        );
        assert!(Polynomial::parse("poly n=2 d=1\n1/0 1 0\n").is_err(), "zero denominator");
    }

    #[test]
    fn display_is_readable() {
        let (x, y) = xy();
        let f = &(&x.pow(2) - &x.mul(&y).unwrap().scale(&rat(4))) + &Polynomial::constant(2, frac(1, 2));
        // Canonical order: degree, then lex — so x1*x2 precedes x1^2.
        assert_eq!(f.to_string(), "1/2 - 4*x1*x2 + x1^2");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn point_parse_and_display_round_trip() {
        let p = Point::parse("1,-2/3,0").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coord(1), &frac(-2, 3));
        assert_eq!(p.to_string(), "1/1,-2/3,0/1");
        assert_eq!(Point::parse(&p.to_string()).unwrap(), p);
        assert!(Point::parse("1,,2").is_err());
        assert!(Point::parse("1,1/0").is_err());
    }

    #[test]
    fn permute_variables_relabels() {
        let n = 3;
        let x = Polynomial::var(n, 0);
        let y = Polynomial::var(n, 1);
        let f = x.pow(2).mul(&y).unwrap(); // x1^2 x2
        let g = f.permute_variables(&[2, 0, 1]); // x1 -> x3, x2 -> x1
        let expected = Polynomial::var(n, 2)
            .pow(2)
            .mul(&Polynomial::var(n, 0))
            .unwrap();
        assert_eq!(g, expected);
    }
}
