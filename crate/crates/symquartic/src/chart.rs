//! The psd-versus-sos classification chart for symmetric forms.
//!
//! For each pair (number of variables `n`, even degree `2d`), the question
//! is whether every nonnegative symmetric `n`-ary `2d`-ic is a sum of
//! squares.  The answer is yes exactly when `n = 2`, or `2d = 2`, or
//! `(n, 2d) = (3, 4)` — the same boundary as in the unrestricted setting,
//! which this crate's certificate machinery witnesses on the symmetric side
//! (the difference-quartic families cover `n >= 4`, degree 4; the lifted
//! families and the classical ternary sextic cover the rest).

use crate::error::Error;

/// One cell of the classification chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChartEntry {
    /// Number of variables, at least 2.
    pub n: usize,
    /// Even degree, at least 2.
    pub two_d: usize,
    /// Whether every psd symmetric `n`-ary `two_d`-ic is sos.
    pub psd_equals_sos: bool,
}

/// The classification rule: equality holds iff `n = 2`, `2d = 2`, or
/// `(n, 2d) = (3, 4)`.
pub fn psd_equals_sos(n: usize, two_d: usize) -> bool {
    n == 2 || two_d == 2 || (n == 3 && two_d == 4)
}

/// All chart entries for `2 <= n <= max_n` and even `2 <= 2d <= max_2d`,
/// in row-major order (degree rows ascending, `n` ascending within a row).
pub fn chart_entries(max_n: usize, max_2d: usize) -> Result<Vec<ChartEntry>, Error> {
    if max_n < 2 {
        return Err(Error::FormParameter(format!(
            "chart needs max_n >= 2, got {max_n}"
        )));
    }
    if max_2d < 2 || max_2d % 2 != 0 {
        return Err(Error::FormParameter(format!(
            "chart needs an even max_2d >= 2, got {max_2d}"
        )));
    }
    let mut entries = Vec::new();
    for two_d in (2..=max_2d).step_by(2) {
        for n in 2..=max_n {
            entries.push(ChartEntry {
                n,
                two_d,
                psd_equals_sos: psd_equals_sos(n, two_d),
            });
        }
    }
    Ok(entries)
}

/// Renders the chart as a fixed-width table; `unicode` selects ✓/× cells
/// instead of the default ASCII `Y`/`N`.
pub fn render_chart(max_n: usize, max_2d: usize, unicode: bool) -> Result<String, Error> {
    let entries = chart_entries(max_n, max_2d)?;
    let (yes, no) = if unicode { ("✓", "×") } else { ("Y", "N") };
    let mut out = String::from("2d\\n");
    for n in 2..=max_n {
        out.push_str(&format!("{n:>4}"));
    }
    out.push('\n');
    let per_row = max_n - 1;
    for (row, chunk) in entries.chunks(per_row).enumerate() {
        let two_d = 2 * (row + 1);
        out.push_str(&format!("{two_d:<4}"));
        for entry in chunk {
            let cell = if entry.psd_equals_sos { yes } else { no };
            out.push_str(&format!("{cell:>4}"));
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_matches_the_classification_boundary() {
        assert!(psd_equals_sos(2, 100), "binary forms always");
        assert!(psd_equals_sos(7, 2), "quadratic forms always");
        assert!(psd_equals_sos(3, 4), "the exceptional cell");
        assert!(!psd_equals_sos(3, 6), "ternary sextics fail");
        assert!(!psd_equals_sos(4, 4), "quaternary quartics fail");
        assert!(!psd_equals_sos(5, 8));
    }

    #[test]
    fn entries_cover_the_grid_in_order() {
        let entries = chart_entries(4, 4).unwrap();
        let got: Vec<(usize, usize, bool)> =
            entries.iter().map(|e| (e.two_d, e.n, e.psd_equals_sos)).collect();
        assert_eq!(
            got,
            vec![
                (2, 2, true),
                (2, 3, true),
                (2, 4, true),
                (4, 2, true),
                (4, 3, true),
                (4, 4, false),
            ]
        );
    }

    #[test]
    fn bad_bounds_are_rejected() {
        assert!(chart_entries(1, 4).is_err());
        assert!(chart_entries(4, 3).is_err(), "odd degree bound");
        assert!(chart_entries(4, 0).is_err());
    }

    #[test]
    fn render_matches_golden_table() {
        let table = render_chart(6, 8, false).unwrap();
        let expected = "\
2d\\n   2   3   4   5   6
2      Y   Y   Y   Y   Y
4      Y   Y   N   N   N
6      Y   N   N   N   N
8      Y   N   N   N   N
";
        assert_eq!(table, expected);
    }

    #[test]
    fn render_unicode_cells() {
        let table = render_chart(4, 4, true).unwrap();
        assert!(table.contains('✓'));
        assert!(table.contains('×'), "(4,4) is the first failing cell");
        assert!(!table.contains('Y'));
    }
}
