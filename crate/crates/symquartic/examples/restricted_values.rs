//! The binary restrictions of the difference quartics in closed form.
//!
//! Collapsing L_n to k coordinates equal to r and n-k equal to s gives
//! k(n-k)(m-k)(n-m-k) * (r-s)^4 with m = floor(n/2).  The scalar vanishes
//! at k in {0, m, n-m, n} and is positive elsewhere (both parenthesized
//! factors change sign together), which is how the family manages to be
//! nonnegative while having a rich set of real zeros.
//!
//! Run with: cargo run --example restricted_values

use symquartic::forms::make_l;
use symquartic::poly::format_rational;
use symquartic::psd::{restrict, verify_ln_restricted_formula};
use symquartic::Error;

fn main() -> Result<(), Error> {
    for n in 4..=12 {
        assert!(verify_ln_restricted_formula(n)?, "closed form must hold for n={n}");
    }
    println!("closed form verified for n = 4..12\n");

    // The scalar k(n-k)(m-k)(n-m-k) by split size, read off the r^4
    // coefficient of the exact restriction.
    for n in [5usize, 8, 11] {
        let f = make_l(n)?;
        let scalars: Vec<String> = (0..=n)
            .map(|k| Ok(format_rational(&restrict(&f, k)?.coeffs()[0])))
            .collect::<Result<_, Error>>()?;
        println!("n={n:2}: r^4 coefficients by k: {}", scalars.join(" "));
    }

    // A single restriction in full: k=1 for n=5 is 8(r-s)^4.
    let q = restrict(&make_l(5)?, 1)?;
    println!("\nrestrict(L:5, 1): {q}");
    assert_eq!(
        q.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
        ["8/1", "-32/1", "48/1", "-32/1", "8/1"]
    );

    // Restrictions agree with direct evaluation at split points.
    let f = make_l(6)?;
    let r = symquartic::poly::frac(7, 3);
    let s = symquartic::poly::frac(-1, 2);
    for k in 0..=6 {
        let q = restrict(&f, k)?;
        let mut coords = vec![r.clone(); k];
        coords.resize(6, s.clone());
        let direct = f.eval(&symquartic::Point::new(coords))?;
        assert_eq!(q.eval(&r, &s), direct);
    }
    println!("restrictions of L:6 agree with direct evaluation at rational split points");
    Ok(())
}
