//! The symmetric form families studied by this crate.
//!
//! All constructors produce exact [`Polynomial`]s:
//!
//! * [`make_l`]: for `n >= 4` and `m = floor(n/2)`, the symmetric quartic
//!
//!   ```text
//!   L_n = m(n-m) * sum_{i<j} (x_i - x_j)^4 - ( sum_{i<j} (x_i - x_j)^2 )^2
//!   ```
//!
//!   These are nonnegative for every `n`, and for odd `n` they are not sums
//!   of squares — the certification pipeline in [`crate::psd`] and
//!   [`crate::sos`] proves both facts exactly.
//!
//! * [`make_c`]: the even-variable relatives `C_{2m}`, obtained from
//!   `L_{2m+1}` by setting its last variable to zero.
//!
//! * [`make_choi_lam_44`], [`make_robinson`], [`make_lax5`]: classical
//!   nonnegative-but-not-sos forms, built from scratch so they can serve as
//!   independent cross-checks.
//!
//! * [`lift`]: degree raising `f -> (x_1 + ... + x_n)^{2i} * f`, which
//!   preserves symmetry, nonnegativity, and (non-)sos-ness with multiplier
//!   denominators cleared.
//!
//! [`orbit_sum`] is the workhorse for writing symmetric polynomials down:
//! it sums one monomial orbit under all variable permutations, visiting each
//! distinct monomial exactly once.

use std::fmt;

use num_traits::One;

use crate::error::Error;
use crate::poly::{rat, Polynomial, Rational};

/// Identifier for a constructible form, with a compact text syntax:
/// `L:<n>`, `C:<2m>`, `cl44`, `robinson`, `lax5`, and `lift:<base>:<i>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormId {
    /// The difference-quartic family `L:<n>`, `n >= 4`.
    L(usize),
    /// The even restriction family `C:<2m>`, `2m >= 4` even.
    C(usize),
    /// The four-variable even quartic `cl44`.
    ChoiLam44,
    /// The ternary sextic `robinson`.
    Robinson,
    /// The five-variable quartic `lax5`.
    Lax5,
    /// `lift:<base>:<i>`: the base form times `(x_1 + ... + x_n)^{2i}`.
    Lifted(Box<FormId>, u32),
}

impl FormId {
    /// Parses the text syntax, validating parameters eagerly.
    pub fn parse(s: &str) -> Result<FormId, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("lift:") {
            let (base, i) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("bad form id '{s}'")))?;
            let i: u32 = i
                .parse()
                .map_err(|_| Error::Parse(format!("bad lift exponent in '{s}'")))?;
            if i == 0 {
                return Err(Error::Parse("lift exponent must be at least 1".into()));
            }
            return Ok(FormId::Lifted(Box::new(FormId::parse(base)?), i));
        }
        if let Some(n) = s.strip_prefix("L:") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad form id '{s}'")))?;
            if n < 4 {
                return Err(Error::Parse("L:<n> requires n >= 4".into()));
            }
            return Ok(FormId::L(n));
        }
        if let Some(v) = s.strip_prefix("C:") {
            let v: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad form id '{s}'")))?;
            if v < 4 || v % 2 != 0 {
                return Err(Error::Parse("C:<2m> requires an even argument >= 4".into()));
            }
            return Ok(FormId::C(v));
        }
        match s {
            "cl44" => Ok(FormId::ChoiLam44),
            "robinson" => Ok(FormId::Robinson),
            "lax5" => Ok(FormId::Lax5),
            _ => Err(Error::Parse(format!("unknown form id '{s}'"))),
        }
    }

    /// Builds the polynomial this id names.
    pub fn construct(&self) -> Result<Polynomial, Error> {
        match self {
            FormId::L(n) => make_l(*n),
            FormId::C(two_m) => make_c(*two_m),
            FormId::ChoiLam44 => Ok(make_choi_lam_44()),
            FormId::Robinson => Ok(make_robinson()),
            FormId::Lax5 => Ok(make_lax5()),
            FormId::Lifted(base, i) => lift(&base.construct()?, *i),
        }
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormId::L(n) => write!(f, "L:{n}"),
            FormId::C(two_m) => write!(f, "C:{two_m}"),
            FormId::ChoiLam44 => write!(f, "cl44"),
            FormId::Robinson => write!(f, "robinson"),
            FormId::Lax5 => write!(f, "lax5"),
            FormId::Lifted(base, i) => write!(f, "lift:{base}:{i}"),
        }
    }
}

/// The symmetric quartic
/// `m(n-m) * sum_{i<j} (x_i - x_j)^4 - (sum_{i<j} (x_i - x_j)^2)^2`
/// in `n` variables, where `m = floor(n/2)`.
///
/// Requires `n >= 4`: with fewer variables the scaling constant no longer
/// dominates and the construction loses its meaning.
pub fn make_l(n: usize) -> Result<Polynomial, Error> {
    if n < 4 {
        return Err(Error::FormParameter(format!("L requires n >= 4, got {n}")));
    }
    let m = n / 2;
    let mut sum4 = Polynomial::zero(n);
    let mut sum2 = Polynomial::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = &Polynomial::var(n, i) - &Polynomial::var(n, j);
            let d2 = d.pow(2);
            sum2 = &sum2 + &d2;
            sum4 = &sum4 + &d2.pow(2);
        }
    }
    let scale = rat((m * (n - m)) as i64);
    Ok(&sum4.scale(&scale) - &sum2.pow(2))
}

/// The even-variable family: `C_{2m}` is `L_{2m+1}` with its last variable
/// set to zero, a symmetric quartic in `2m` variables.
///
/// Requires an even argument `2m >= 4`.
pub fn make_c(two_m: usize) -> Result<Polynomial, Error> {
    if two_m % 2 != 0 {
        return Err(Error::FormParameter(format!(
            "C requires an even argument, got {two_m}"
        )));
    }
    if two_m < 4 {
        return Err(Error::FormParameter(format!(
            "C requires an argument >= 4, got {two_m}"
        )));
    }
    let parent = make_l(two_m + 1)?;
    parent.substitute_zero(two_m)
}

/// Sum of the orbit of one monomial under all variable permutations, with
/// each distinct monomial appearing exactly once (coefficient 1).
///
/// `pattern` lists the nonzero exponents; it is padded with zeros to `n`
/// entries.  For example `orbit_sum(4, &[2, 1, 1])` is the sum of all twelve
/// monomials of shape `x_i^2 x_j x_k`.
pub fn orbit_sum(n: usize, pattern: &[u32]) -> Result<Polynomial, Error> {
    if pattern.len() > n {
        return Err(Error::FormParameter(format!(
            "orbit pattern has {} entries but only {n} variables",
            pattern.len()
        )));
    }
    let mut exps: Vec<u32> = pattern.to_vec();
    exps.resize(n, 0);
    exps.sort_unstable_by(|a, b| b.cmp(a));

    // Count multiplicities, then walk all distinct arrangements in lex order.
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &e in &exps {
        match values.iter_mut().find(|(v, _)| *v == e) {
            Some((_, k)) => *k += 1,
            None => values.push((e, 1)),
        }
    }
    values.sort_unstable();

    let mut out = Polynomial::zero(n);
    let mut current = Vec::with_capacity(n);
    arrangements(&mut values, n, &mut current, &mut |arrangement| {
        out = out
            .add(&Polynomial::from_terms(n, [(arrangement.to_vec(), Rational::one())]).expect("arity matches"))
            .expect("same ring");
    });
    Ok(out)
}

/// Visits every distinct arrangement of the multiset described by
/// `values = [(value, multiplicity), ...]`.
fn arrangements(
    values: &mut Vec<(u32, usize)>,
    n: usize,
    current: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if current.len() == n {
        visit(current);
        return;
    }
    for idx in 0..values.len() {
        if values[idx].1 == 0 {
            continue;
        }
        let v = values[idx].0;
        values[idx].1 -= 1;
        current.push(v);
        arrangements(values, n, current, visit);
        current.pop();
        values[idx].1 += 1;
    }
}

/// The four-variable even quartic
/// `sum x_i^2 x_j^2 + sum x_i^2 x_j x_k - 2 x_1 x_2 x_3 x_4`,
/// where the first sum has 6 terms and the second 12.
pub fn make_choi_lam_44() -> Polynomial {
    let n = 4;
    let squares = orbit_sum(n, &[2, 2]).expect("valid pattern");
    let mixed = orbit_sum(n, &[2, 1, 1]).expect("valid pattern");
    let product = orbit_sum(n, &[1, 1, 1, 1]).expect("valid pattern");
    &(&squares + &mixed) - &product.scale(&rat(2))
}

/// The ternary sextic
/// `sum x_i^6 - sum x_i^4 x_j^2 + 3 x_1^2 x_2^2 x_3^2`
/// (the middle sum runs over all six ordered pairs `i != j`).
pub fn make_robinson() -> Polynomial {
    let n = 3;
    let sixth = orbit_sum(n, &[6]).expect("valid pattern");
    let mixed = orbit_sum(n, &[4, 2]).expect("valid pattern");
    let central = orbit_sum(n, &[2, 2, 2]).expect("valid pattern");
    &(&sixth - &mixed) + &central.scale(&rat(3))
}

/// The five-variable quartic `sum_i prod_{j != i} (x_i - x_j)`.
pub fn make_lax5() -> Polynomial {
    let n = 5;
    let mut total = Polynomial::zero(n);
    for i in 0..n {
        let mut term = Polynomial::constant(n, Rational::one());
        for j in 0..n {
            if j != i {
                term = &term * &(&Polynomial::var(n, i) - &Polynomial::var(n, j));
            }
        }
        total = &total + &term;
    }
    total
}

/// Degree raising: multiplies a homogeneous `f` by `(x_1 + ... + x_n)^{2i}`.
///
/// Requires `i >= 1` and a homogeneous input.  The result has degree
/// `deg f + 2i`, and is symmetric whenever `f` is.
pub fn lift(f: &Polynomial, i: u32) -> Result<Polynomial, Error> {
    if i == 0 {
        return Err(Error::FormParameter("lift exponent must be at least 1".into()));
    }
    if f.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.var_count();
    let mut sum = Polynomial::zero(n);
    for v in 0..n {
        sum = &sum + &Polynomial::var(n, v);
    }
    f.mul(&sum.pow(2 * i))
}
