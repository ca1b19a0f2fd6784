//! Data tables: limit shape, gap probabilities, q-P_V trajectories.

use qpart_core::gap::{gap_probability, FredholmSize, GapMethod, GapQuery, GapVariant};
use qpart_core::kernels::limit_shape;
use qpart_core::oppainleve::{painleve_trajectory, OpSource, PainleveBranch, TrajectorySource};
use qpart_core::QParams;

use crate::cli::{BranchArg, MethodArg, SourceArg, Variant};
use crate::report::{Cell, Table};

/// Enumeration cutoff for the gap table; the omitted mass is reported by the route.
pub const GAP_ENUMERATION_SIZE: usize = 30;

pub fn limit_shape_table(xi_values: &[f64], grid_points: usize) -> qpart_core::Result<Table> {
    let mut rows = Vec::new();
    for &xi in xi_values {
        let ls = limit_shape(xi)?;
        let mut xs: Vec<f64> = ls.table(grid_points).into_iter().map(|(x, _, _)| x).collect();
        // The endpoints themselves, so ρ(a) = 1 and ρ(b) = 0 appear as rows.
        xs.extend([ls.a, ls.b]);
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        rows.extend(xs.into_iter().map(|x| vec![Cell::from(xi), x.into(), ls.rho(x).into(), ls.omega(x).into()]));
    }
    Ok(Table { columns: vec!["xi", "x", "rho", "omega"], rows })
}

fn gap_method(m: MethodArg) -> GapMethod {
    match m {
        MethodArg::Toeplitz => GapMethod::Toeplitz,
        MethodArg::Fredholm => GapMethod::Fredholm(FredholmSize::Auto),
        MethodArg::Enumeration => GapMethod::Enumeration { max_size: GAP_ENUMERATION_SIZE },
        MethodArg::All => unreachable!("expanded by the caller"),
    }
}

pub fn gap_table(p: &QParams<f64>, variant: Variant, n_max: usize, method: MethodArg) -> qpart_core::Result<Table> {
    let variant = match variant {
        Variant::Length => GapVariant::Length,
        Variant::FirstPart => GapVariant::FirstPart,
    };
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let query = GapQuery { variant, n, params: *p };
        let row = if method == MethodArg::All {
            let v: Vec<f64> = [MethodArg::Toeplitz, MethodArg::Fredholm, MethodArg::Enumeration]
                .into_iter()
                .map(|m| gap_probability(&query, gap_method(m)).map(|e| e.value))
                .collect::<qpart_core::Result<_>>()?;
            let spread = v.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) - v.iter().fold(f64::INFINITY, |a, &b| a.min(b));
            vec![n.into(), v[0].into(), v[1].into(), v[2].into(), spread.into()]
        } else {
            vec![n.into(), gap_probability(&query, gap_method(method))?.value.into()]
        };
        rows.push(row);
    }
    let columns = if method == MethodArg::All {
        vec!["n", "toeplitz", "fredholm", "enumeration", "max_discrepancy"]
    } else {
        vec!["n", "probability"]
    };
    Ok(Table { columns, rows })
}

pub fn painleve_table(p: &QParams<f64>, branch: BranchArg, source: SourceArg, n_max: usize) -> qpart_core::Result<Table> {
    let branch = match branch {
        BranchArg::X => PainleveBranch::X,
        BranchArg::Y => PainleveBranch::Y,
    };
    let source = match source {
        SourceArg::Recurrence => TrajectorySource::Recurrence,
        SourceArg::Determinant => TrajectorySource::Determinant(OpSource::Toeplitz),
        SourceArg::SchurSum => TrajectorySource::Determinant(OpSource::SchurSum),
    };
    // One extra term so the residual and bilinear columns reach n_max.
    let st = painleve_trajectory(branch, source, p, n_max + 1)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        rows.push(vec![
            n.into(),
            st.values[n].into(),
            st.square(n).into(),
            st.bilinear(n).into(),
            st.residual(n).into(),
            st.bessel_ratio(n).ok().into(),
        ]);
    }
    let value = match branch {
        PainleveBranch::X => "x",
        PainleveBranch::Y => "y_tilde",
    };
    Ok(Table { columns: vec!["n", value, "square", "bilinear", "residual", "bessel_ratio"], rows })
}
