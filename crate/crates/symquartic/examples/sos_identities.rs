//! Verifying explicit sum-of-squares identities with exact expansion.
//!
//! The even difference quartics ARE sums of squares, and the decomposition
//! is fully explicit:
//!
//!   L_2m = sum_{i<j} (x_i - x_j)^2 ( -(x_1+...+x_2m) + m(x_i + x_j) )^2
//!
//! verify_sos_identity expands each squared product with exact rational
//! arithmetic and compares complete term maps, so a passing check is a
//! proof, not an approximation.  Run with: cargo run --example sos_identities

use symquartic::poly::Polynomial;
use symquartic::sos::{even_l_sos_identity, verify_sos_identity, SosIdentity};
use symquartic::Error;

fn main() -> Result<(), Error> {
    for two_m in [4usize, 6, 8, 10] {
        let id = even_l_sos_identity(two_m)?;
        let pairs = id.summands.len();
        assert!(verify_sos_identity(&id));
        println!("L:{two_m:2} = sum of {pairs} squared products  -- verified exactly");
    }

    // The checker is exact, so a single corrupted summand is detected.
    let mut broken = even_l_sos_identity(4)?;
    broken.summands[0].0 = &Polynomial::var(4, 0) + &Polynomial::var(4, 1);
    assert!(!verify_sos_identity(&broken));
    println!("\ncorrupting one factor flips the verdict to false");

    // Identities are just data; any target/summand combination can be
    // checked, e.g. x^4 = (x * x)^2.
    let x = Polynomial::var(1, 0);
    let trivial = SosIdentity {
        target: x.pow(4),
        summands: vec![(x.clone(), x.clone())],
    };
    assert!(verify_sos_identity(&trivial));
    println!("x^4 = (x*x)^2 verified");

    // Summand lists serialize as concatenated canonical polynomial blocks,
    // which is the format the `symq verify-sos` command reads.
    let id = even_l_sos_identity(4)?;
    let text = id.summands_to_text();
    println!(
        "\nthe L:4 summand file has {} lines for {} factor polynomials",
        text.lines().count(),
        2 * id.summands.len()
    );
    Ok(())
}
