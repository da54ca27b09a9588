//! The zero-forcing argument, step by step.
//!
//! This example takes apart what certify_not_sos does in one call, using
//! the five-variable difference quartic:
//!
//!   1. enumerate the 0/1 points of weight 2 and 3            (20 points)
//!   2. verify each is an exact zero of the form              (evaluation)
//!   3. build the vanishing-constraint matrix for quadratics  (20 x 15)
//!   4. compute its kernel: only the zero quadratic survives  (dim 0)
//!   5. replay the structural row-subtraction proof           (cross-check)
//!
//! Any SOS decomposition of a quartic has quadratic summands that vanish on
//! all zeros of the form, so steps 2-4 refute every possible decomposition
//! at once.  Run with: cargo run --example zero_forcing_walkthrough

use symquartic::forms::make_l;
use symquartic::matrix::RatMatrix;
use symquartic::sos::{
    enumerate_zero_points, quadratic_basis_size, replay_lemma_subtractions,
    vanishing_constraint_matrix, verify_zeros, QuadraticCoefficientVector,
};
use symquartic::Error;

fn main() -> Result<(), Error> {
    let n = 5;
    let f = make_l(n)?;

    // Step 1: the canonical zero set.
    let z = enumerate_zero_points(n, &[2, 3])?;
    println!("step 1: {} zero-set points, e.g. {} and {}", z.len(), z.points()[0], z.points()[19]);

    // Step 2: all of them are exact zeros of the form.
    assert!(verify_zeros(&f, &z)?);
    println!("step 2: all {} points verified as exact zeros of L:5", z.len());

    // Step 3: one linear constraint per point on the 15 quadratic
    // coefficients (5 squares + 10 cross terms).
    let matrix: RatMatrix = vanishing_constraint_matrix(&z);
    assert_eq!((matrix.rows(), matrix.cols()), (20, quadratic_basis_size(n)));
    println!("step 3: constraint matrix is {} x {}", matrix.rows(), matrix.cols());

    // Step 4: exact elimination leaves nothing.
    assert_eq!(matrix.kernel_dimension(), 0);
    println!("step 4: kernel dimension 0 -- only the zero quadratic vanishes on the set");

    // Step 5: the structural proof re-derived on random index choices.
    assert!(replay_lemma_subtractions(n)?);
    println!("step 5: row-subtraction replay passed");

    // Contrast: drop the weight-3 points and the argument collapses; the
    // kernel becomes visible and every kernel vector is a genuine quadratic
    // vanishing on the remaining points.
    let weak = enumerate_zero_points(n, &[2])?;
    let weak_matrix = vanishing_constraint_matrix(&weak);
    let basis = weak_matrix.kernel_basis();
    println!(
        "\nwith weight {{2}} only: {} constraints, kernel dimension {}",
        weak_matrix.rows(),
        weak_matrix.kernel_dimension()
    );
    let sample = QuadraticCoefficientVector::from_entries(n, basis[0].clone())?.to_quadratic_form();
    println!("a surviving quadratic: {sample}");
    for p in weak.points() {
        assert!(num_traits::Zero::is_zero(&sample.eval(p)?));
    }
    println!("(checked: it vanishes on all {} weight-2 points)", weak.len());
    Ok(())
}
