use algver_core::diagonalizable::{center_iso_check, example3_criterion, FinGenAbGroup};
use serde_json::json;

use super::Ctx;
use crate::error::{CliError, CliResult};
use crate::fixtures::ToriFixture;
use crate::report::Entry;

pub const GRID: &str = "tori.criterion_grid";
pub const KERNEL: &str = "tori.kernel_dual";
pub const DET: &str = "tori.det_identity";
pub const CENTER: &str = "tori.center_map";

const FILE: &str = "tori.json";

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: ToriFixture = ctx.fixtures.load("tori")?;
    if fx.grid == 0 {
        return Err(CliError::fixture(FILE, "grid must be at least 1"));
    }
    let size = fx.grid;
    let mut table = Vec::new();
    let (mut grid_bad, mut det_bad) = (Vec::new(), Vec::new());
    for n in 1..=size as i128 {
        let mut row = Vec::new();
        for d in 1..=size {
            match example3_criterion(n, d) {
                Ok(ex) => {
                    row.push(ex.iso);
                    if ex.iso != ((n - d as i128).abs() == 1) {
                        grid_bad.push(format!("(n={n}, d={d}) iso={}", ex.iso));
                    }
                    let expected = n.pow(d as u32 - 1) * (d as i128 - n).abs();
                    if ex.det.abs() != expected {
                        det_bad.push(format!("(n={n}, d={d}) |det|={} expected {expected}", ex.det.abs()));
                    }
                }
                Err(e) => {
                    row.push(false);
                    grid_bad.push(format!("(n={n}, d={d}) {e}"));
                }
            }
        }
        table.push(row);
    }
    let case = format!("1 <= n,d <= {size}");
    let mut out = vec![
        Entry::expect(GRID, case.clone(), grid_bad.is_empty(), || grid_bad.join("; ")).with_detail(json!({ "rows_n_cols_d_iso": table })),
        Entry::expect(DET, case, det_bad.is_empty(), || det_bad.join("; ")),
    ];
    for &(n, d) in &fx.kernel_cases {
        let case = format!("n={n}, d={d}");
        if n < 1 || d < 1 {
            return Err(CliError::fixture(FILE, format!("kernel case ({n}, {d}) out of range")));
        }
        let expected = FinGenAbGroup::cyclic_sum(&vec![n; d - 1]);
        out.push(match example3_criterion(n, d) {
            Ok(ex) => Entry::expect(KERNEL, case, ex.kernel_dual.isomorphic(&expected), || format!("{} is not {expected}", ex.kernel_dual))
                .with_detail(json!({ "kernel_dual": ex.kernel_dual.to_string() })),
            Err(e) => Entry::fail(KERNEL, case, e.to_string()),
        });
    }
    for &(n, d) in &fx.center_cases {
        let case = format!("n={n}, d={d}");
        out.push(match center_iso_check(n, d) {
            Ok(c) => Entry::expect(CENTER, case, c.well_defined && c.iso, || format!("{c:?}"))
                .with_detail(json!({ "quotient_order": c.quotient_order, "norm_one_order": c.norm_one_order })),
            Err(e) => Entry::fail(CENTER, case, e.to_string()),
        });
    }
    Ok(out)
}
