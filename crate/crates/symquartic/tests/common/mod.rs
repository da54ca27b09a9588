//! Shared generators and predicates for the integration suites.

#![allow(dead_code)]

use proptest::prelude::*;
use symquartic::forms::orbit_sum;
use symquartic::poly::{frac, rat, Point, Polynomial, Rational};
use symquartic::sos::{quadratic_basis_size, QuadraticCoefficientVector};

/// Small nonzero-denominator rationals.
pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(num, den)| frac(num, den))
}

/// A sparse polynomial in `n` variables: up to six terms, exponents up to 3.
pub fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
    let term = (proptest::collection::vec(0u32..=3, n), arb_rational());
    proptest::collection::vec(term, 0..=6)
        .prop_map(move |terms| Polynomial::from_terms(n, terms).expect("arity matches"))
}

/// A rational point with `n` coordinates.
pub fn arb_point(n: usize) -> impl Strategy<Value = Point> {
    proptest::collection::vec(arb_rational(), n).prop_map(Point::new)
}

/// The five degree-4 monomial orbits in `n >= 4` variables.
pub fn quartic_orbit_patterns() -> [&'static [u32]; 5] {
    [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
}

/// A random symmetric quartic: an integer combination of the five degree-4
/// orbit sums (possibly zero).
pub fn arb_symmetric_quartic(n: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-3i64..=3, 5).prop_map(move |cs| {
        let mut f = Polynomial::zero(n);
        for (c, pattern) in cs.iter().zip(quartic_orbit_patterns()) {
            if *c != 0 {
                let orbit = orbit_sum(n, pattern).expect("pattern fits");
                f = f.add(&orbit.scale(&rat(*c))).expect("same ring");
            }
        }
        f
    })
}

/// A random *nonzero* explicit sum of squares: 2..=5 random quadratics with
/// integer coefficients in [-3, 3], squared and summed.  Nonzero because a
/// sum of squares vanishes identically only if every summand does.
pub fn arb_sos_quartic(n: usize) -> impl Strategy<Value = Polynomial> {
    let quad = proptest::collection::vec(-3i64..=3, quadratic_basis_size(n));
    proptest::collection::vec(quad, 2..=5)
        .prop_filter("at least one nonzero quadratic", |quads| {
            quads.iter().any(|q| q.iter().any(|&c| c != 0))
        })
        .prop_map(move |quads| {
            let mut f = Polynomial::zero(n);
            for entries in quads {
                let v = QuadraticCoefficientVector::from_entries(
                    n,
                    entries.into_iter().map(rat).collect(),
                )
                .expect("entry count matches");
                let q = v.to_quadratic_form();
                f = f.add(&q.pow(2)).expect("same ring");
            }
            f
        })
}

/// All integer points of `{lo..=hi}^n`, for exhaustive sampling.
pub fn integer_grid(n: usize, lo: i64, hi: i64) -> Vec<Point> {
    let span = (hi - lo + 1) as usize;
    let total = span.pow(n as u32);
    let mut points = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut coords = vec![0i64; n];
        for c in coords.iter_mut().rev() {
            *c = lo + (idx % span) as i64;
            idx /= span;
        }
        points.push(Point::from_i64(&coords));
    }
    points
}

// ------------------------------------------------------------------
// The three predicates behind the randomized acceptance suites; shared so
// the dedicated acceptance gate and the property tests run the same code.
// ------------------------------------------------------------------

/// Commutative-ring laws for polynomial addition and multiplication.
pub fn ring_axioms_hold(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<(), String> {
    let n = a.var_count();
    let zero = Polynomial::zero(n);
    let one = Polynomial::constant(n, rat(1));
    let check = |name: &str, left: &Polynomial, right: &Polynomial| {
        if left == right {
            Ok(())
        } else {
            Err(format!("{name} violated"))
        }
    };
    check("additive commutativity", &(a + b), &(b + a))?;
    check("additive associativity", &(&(a + b) + c), &(a + &(b + c)))?;
    check("additive identity", &(a + &zero), a)?;
    check("additive inverse", &(a + &a.neg()), &zero)?;
    check("multiplicative commutativity", &(a * b), &(b * a))?;
    check("multiplicative associativity", &(&(a * b) * c), &(a * &(b * c)))?;
    check("multiplicative identity", &(a * &one), a)?;
    check("distributivity", &(a * &(b + c)), &(&(a * b) + &(a * c)))?;
    Ok(())
}

/// Evaluation at a fixed point is a ring homomorphism.
pub fn eval_homomorphism_holds(
    a: &Polynomial,
    b: &Polynomial,
    p: &Point,
    scalar: &Rational,
) -> Result<(), String> {
    let ea = a.eval(p).map_err(|e| e.to_string())?;
    let eb = b.eval(p).map_err(|e| e.to_string())?;
    if (a + b).eval(p).map_err(|e| e.to_string())? != &ea + &eb {
        return Err("eval(a+b) != eval(a) + eval(b)".into());
    }
    if (a * b).eval(p).map_err(|e| e.to_string())? != &ea * &eb {
        return Err("eval(a*b) != eval(a) * eval(b)".into());
    }
    if a.scale(scalar).eval(p).map_err(|e| e.to_string())? != scalar * &ea {
        return Err("eval(c*a) != c * eval(a)".into());
    }
    Ok(())
}

/// A binary restriction evaluated at (r, s) agrees with the full form at
/// the corresponding split point.
pub fn restriction_consistent(
    f: &Polynomial,
    k: usize,
    r: &Rational,
    s: &Rational,
) -> Result<(), String> {
    let q = symquartic::psd::restrict(f, k).map_err(|e| e.to_string())?;
    let mut coords = vec![r.clone(); k];
    coords.resize(f.var_count(), s.clone());
    let direct = f
        .eval(&Point::new(coords))
        .map_err(|e| e.to_string())?;
    if q.eval(r, s) != direct {
        return Err(format!("restriction mismatch at k={k}"));
    }
    Ok(())
}
