//! Deciding nonnegativity of symmetric quartics, with full certificates.
//!
//! For a symmetric quartic it is enough to test points with at most two
//! distinct coordinates, so the decision reduces to n+1 exact binary-quartic
//! problems.  Run with: cargo run --example psd_certificates

use symquartic::forms::{make_c, make_choi_lam_44, make_l};
use symquartic::psd::{check_psd, PsdVerdict};
use symquartic::Error;

fn main() -> Result<(), Error> {
    // The whole difference-quartic family is nonnegative.
    for n in 4..=9 {
        let cert = check_psd(&make_l(n)?)?;
        assert!(cert.is_psd());
        println!("L:{n}  -> {} binary restrictions, verdict psd", cert.restrictions().len());
    }
    for two_m in [4, 6, 8] {
        assert!(check_psd(&make_c(two_m)?)?.is_psd());
        println!("C:{two_m}  -> verdict psd");
    }
    assert!(check_psd(&make_choi_lam_44())?.is_psd());
    println!("cl44 -> verdict psd");

    // A negated form yields an explicit rational counterexample whose value
    // is re-checked by exact evaluation before the certificate is issued.
    let neg = make_l(5)?.neg();
    let cert = check_psd(&neg)?;
    match cert.verdict() {
        PsdVerdict::NotPsd { witness, value } => {
            println!("\n-L:5 -> not_psd, witness {witness} with value {value}");
            assert_eq!(&neg.eval(witness)?, value);
        }
        PsdVerdict::Psd => unreachable!("a negated nonzero psd form cannot be psd"),
    }

    // The full certificate is a deterministic text block: every split size k
    // with its five binary-quartic coefficients and its witness or
    // counterexample, then the verdict.
    println!("\nfull certificate for L:4:\n{}", check_psd(&make_l(4)?)?.to_text());
    Ok(())
}
