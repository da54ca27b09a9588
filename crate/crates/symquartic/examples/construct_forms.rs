//! Constructing the named form families and printing their exact values.
//!
//! Run with: cargo run --example construct_forms

use symquartic::forms::{lift, make_c, make_choi_lam_44, make_l, make_lax5, make_robinson, FormId};
use symquartic::poly::format_rational;
use symquartic::Error;

fn main() -> Result<(), Error> {
    // The difference quartics: m(n-m) * sum (x_i-x_j)^4 - (sum (x_i-x_j)^2)^2.
    println!("difference quartics L:<n>");
    for n in 4..=8 {
        let f = make_l(n)?;
        let mut e1 = vec![0i64; n];
        e1[0] = 1;
        println!(
            "  n={n}: {} terms, degree {:?}, symmetric: {}, f(e_1) = {}",
            f.term_count(),
            f.homogeneous_degree().unwrap(),
            f.is_symmetric(),
            format_rational(&f.eval_i64(&e1)?),
        );
    }

    // Their even relatives: C:<2m> is L:<2m+1> with the last variable zeroed.
    println!("\neven relatives C:<2m>");
    for two_m in [4, 6, 8] {
        let c = make_c(two_m)?;
        let parent = make_l(two_m + 1)?;
        assert_eq!(c, parent.substitute_zero(two_m)?);
        println!("  2m={two_m}: {} terms, inherited zeros at 0/1 points", c.term_count());
    }

    // Two classical cross-check forms.
    let cl = make_choi_lam_44();
    println!("\ncl44: {} terms; value at (1,1,1,1) = {}", cl.term_count(), cl.eval_i64(&[1, 1, 1, 1])?);
    let rob = make_robinson();
    println!("robinson: {} terms; zeros include (1,1,1) and (1,1,0)", rob.term_count());
    assert!(rob.eval_i64(&[1, 1, 1])?.eq(&symquartic::poly::rat(0)));

    // The five-variable product form satisfies 8 * lax5 = L_5 exactly.
    let lax = make_lax5();
    let l5 = make_l(5)?;
    assert_eq!(lax.scale(&symquartic::poly::rat(8)), l5);
    println!("lax5: 8 * lax5 == L:5 holds as an exact term-map identity");

    // Degree raising keeps symmetry and nonnegativity.
    let lifted = lift(&l5, 1)?;
    println!(
        "lift:L:5:1 has degree {:?} and {} terms",
        lifted.homogeneous_degree().unwrap(),
        lifted.term_count()
    );

    // Everything above is reachable through the id syntax used by the CLI.
    for id in ["L:6", "C:8", "cl44", "robinson", "lax5", "lift:L:5:2"] {
        let parsed = FormId::parse(id)?;
        let f = parsed.construct()?;
        println!("  {id:12} -> n={}, degree {:?}", f.var_count(), f.homogeneous_degree().unwrap());
    }

    // Canonical serialization is the interchange format for all tools here.
    println!("\ncanonical text of L:4:\n{}", make_l(4)?.to_canonical_string());
    Ok(())
}
