//! Machine-checkable proofs that a quartic is not a sum of squares.
//!
//! The argument: SOS summands of a quartic are quadratics; each must vanish
//! at every real zero of the form; if the only quadratic vanishing on a
//! verified zero set is 0, no decomposition exists.  Run with:
//! cargo run --example not_sos_certificates

use symquartic::forms::{make_c, make_l, orbit_sum};
use symquartic::sos::{certify_not_sos, enumerate_zero_points, NonSosVerdict};
use symquartic::Error;

fn main() -> Result<(), Error> {
    // The odd difference quartics are nonnegative but not SOS.
    for n in [5usize, 7, 9, 11] {
        let f = make_l(n)?;
        let m = n / 2;
        let z = enumerate_zero_points(n, &[m, m + 1])?;
        let cert = certify_not_sos(&f, &z)?;
        assert!(cert.is_not_sos());
        println!(
            "L:{n:2} weights {{{},{}}}: {} points, {} unknowns, kernel {} -> not_sos",
            m,
            m + 1,
            cert.point_count(),
            cert.unknowns(),
            cert.kernel_dimension()
        );
    }

    // So are their even relatives.
    for two_m in [4usize, 6, 8, 10] {
        let f = make_c(two_m)?;
        let m = two_m / 2;
        let z = enumerate_zero_points(two_m, &[m, m + 1])?;
        let cert = certify_not_sos(&f, &z)?;
        assert!(cert.is_not_sos());
        println!("C:{two_m:2} weights {{{},{}}}: kernel {} -> not_sos", m, m + 1, cert.kernel_dimension());
    }

    // The engine is sound: on an explicit sum of squares the zero check
    // fails and the verdict is inconclusive -- never a false "not_sos".
    let sos = orbit_sum(4, &[4])?; // x1^4 + x2^4 + x3^4 + x4^4
    let z = enumerate_zero_points(4, &[2, 3])?;
    let cert = certify_not_sos(&sos, &z)?;
    match cert.verdict() {
        NonSosVerdict::Inconclusive(reason) => {
            println!("\nsum of fourth powers -> inconclusive ({reason:?})");
        }
        NonSosVerdict::NotSos => unreachable!("soundness violation"),
    }

    // Certificates serialize deterministically; the replay seed is recorded
    // so the structural cross-check can be reproduced byte-for-byte.
    let f = make_l(5)?;
    let z = enumerate_zero_points(5, &[2, 3])?;
    println!("\nfull certificate for L:5:\n{}", certify_not_sos(&f, &z)?.to_text());
    Ok(())
}
