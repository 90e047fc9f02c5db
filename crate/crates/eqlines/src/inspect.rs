use std::fmt::Write as _;

use eqlines_core::jacobi::float_eigen_oracle;
use eqlines_core::spectra::shifted_charpoly;
use eqlines_core::{charpoly_fl, seidel_matrix, Family, Graph, Magnitude, SwitchKey};

use crate::error::Result;

/// Text report for one graph: Seidel matrix, characteristic polynomial, the
/// shifted coefficients, verdicts in both modes, switching key and an
/// approximate spectrum.
pub fn inspect(g: &Graph) -> Result<String> {
    let s = seidel_matrix(g);
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "graph {g}").unwrap();
    writeln!(w, "order {} edges {}", g.order(), g.edge_count()).unwrap();
    writeln!(w, "seidel matrix").unwrap();
    for row in s.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        writeln!(w, "  {}", cells.join(" ")).unwrap();
    }
    let p = charpoly_fl(&s)?;
    writeln!(w, "charpoly (c_0..c_n) {:?}", p.coefficients()).unwrap();
    for family in Family::ALL {
        let q = shifted_charpoly(g, family.shift(), &mut Magnitude::default())?;
        let v = q.verdict();
        let coeffs: Vec<String> = q.coefficients().iter().map(ToString::to_string).collect();
        writeln!(w, "{family} shift {}", family.shift()).unwrap();
        writeln!(w, "  shifted coefficients [{}]", coeffs.join(", ")).unwrap();
        writeln!(w, "  psd {} rank {}", v.psd, v.rank).unwrap();
    }
    writeln!(w, "switch key {:?}", SwitchKey::of(g).0).unwrap();
    let spectrum: Vec<String> = float_eigen_oracle(&s)?.iter().map(|x| format!("{x:.6}")).collect();
    writeln!(w, "approximate spectrum [{}]", spectrum.join(", ")).unwrap();
    Ok(out)
}
