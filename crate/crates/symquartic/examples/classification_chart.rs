//! Where "nonnegative" and "sum of squares" part ways for symmetric forms.
//!
//! Run with: cargo run --example classification_chart

use symquartic::chart::{chart_entries, psd_equals_sos, render_chart};
use symquartic::Error;

fn main() -> Result<(), Error> {
    println!("psd = sos for symmetric n-ary 2d-ics? (rows: degree 2d, columns: n)\n");
    print!("{}", render_chart(6, 8, false)?);

    println!("\nsame chart with unicode cells:\n");
    print!("{}", render_chart(6, 8, true)?);

    // The exceptional cell and its neighbours.
    assert!(psd_equals_sos(3, 4), "(3,4) is the lone interior yes");
    assert!(!psd_equals_sos(4, 4), "witnessed by cl44 and the lifted families");
    assert!(!psd_equals_sos(3, 6), "witnessed by the robinson sextic");

    // Column n=2 and row 2d=2 are yes forever.
    assert!(psd_equals_sos(2, 100));
    assert!(psd_equals_sos(50, 2));

    // The same boundary, as data.
    let entries = chart_entries(8, 6)?;
    let failures: Vec<String> = entries
        .iter()
        .filter(|e| !e.psd_equals_sos)
        .map(|e| format!("({},{})", e.n, e.two_d))
        .collect();
    println!("\ncells where psd forms need not be sos (n <= 8, 2d <= 6):");
    println!("{}", failures.join(" "));
    Ok(())
}
