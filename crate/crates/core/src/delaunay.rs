//! Delaunay subdivisions via the paraboloid lift.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Signed;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::{int_det_sign, in_sphere_rows, int_rank, paraboloid_int_row, Sign};
use crate::polytope::{facet_planes, facets, simplex_volume, FaceLattice};
use crate::report::Report;

/// Maximal cells of a subdivision, as sorted index sets. `hull_facets` is
/// present only in strict-boundary mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionComplex {
    n: usize,
    cells: Vec<Vec<usize>>,
    hull_facets: Option<Vec<Vec<usize>>>,
}

impl SubdivisionComplex {
    pub fn new(n: usize, cells: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let cells = normalize(n, cells)?;
        Ok(SubdivisionComplex {
            n,
            cells,
            hull_facets: None,
        })
    }

    pub fn with_hull_facets(
        mut self,
        hull_facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        self.hull_facets = Some(normalize(self.n, hull_facets)?);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn hull_facets(&self) -> Option<&[Vec<usize>]> {
        self.hull_facets.as_deref()
    }

    pub fn is_triangulation(&self, d: usize) -> bool {
        self.cells.iter().all(|c| c.len() == d + 1)
    }
}

fn normalize(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for mut s in sets {
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&e| e >= n) {
            return Err(Error::UnknownLabel { label: bad.saturating_add(1), n });
        }
        out.insert(s);
    }
    Ok(out.into_iter().collect())
}

fn check_input(a: &PointConfiguration) -> Result<()> {
    a.require_full_dimensional()?;
    if a.has_duplicates() {
        return Err(Error::Inconsistent("two points coincide".into()));
    }
    Ok(())
}

/// Lower facets of the configuration lifted to the paraboloid. Cospherical
/// points land on one hyperplane and so form a single cell.
pub fn delaunay_subdivision(a: &PointConfiguration) -> Result<SubdivisionComplex> {
    check_input(a)?;
    let d = a.dim();
    let rows: Vec<Vec<BigInt>> = a.points().iter().map(|p| paraboloid_int_row(p)).collect();
    if int_rank(&rows) < d + 2 {
        // All points on one sphere: the lift is flat.
        return SubdivisionComplex::new(a.len(), [(0..a.len()).collect()]);
    }
    let cells = facet_planes(&rows, d + 1)
        .into_iter()
        // The interior lies above a lower facet.
        .filter(|f| f.normal[d].is_positive())
        .map(|f| f.members);
    SubdivisionComplex::new(a.len(), cells)
}

/// [`delaunay_subdivision`] together with the facets of the convex hull.
pub fn delaunay_subdivision_strict(a: &PointConfiguration) -> Result<SubdivisionComplex> {
    let t = delaunay_subdivision(a)?;
    let hull: FaceLattice = facets(a)?;
    t.with_hull_facets(hull.facets().iter().cloned())
}

/// General position and no `d+2` points on a common sphere.
pub fn is_delaunay_triangulation(a: &PointConfiguration) -> bool {
    if !a.is_full_dimensional() || a.has_duplicates() {
        return false;
    }
    let d = a.dim();
    let homog = a.homogeneous_int_rows();
    let lifted: Vec<Vec<BigInt>> = a.points().iter().map(|p| paraboloid_int_row(p)).collect();
    for s in (0..a.len()).combinations(d + 1) {
        let rows: Vec<&[BigInt]> = s.iter().map(|&i| homog[i].as_slice()).collect();
        if int_det_sign(&rows).is_zero() {
            return false;
        }
    }
    for s in (0..a.len()).combinations(d + 2) {
        let rows: Vec<&[BigInt]> = s.iter().map(|&i| lifted[i].as_slice()).collect();
        if int_det_sign(&rows).is_zero() {
            return false;
        }
    }
    true
}

pub fn subdivision_equal(t1: &SubdivisionComplex, t2: &SubdivisionComplex) -> bool {
    t1.n == t2.n && t1.cells == t2.cells
}

/// Equality including the boundary (convex hull facets).
pub fn subdivision_equal_strict(t1: &SubdivisionComplex, t2: &SubdivisionComplex) -> bool {
    subdivision_equal(t1, t2) && t1.hull_facets == t2.hull_facets
}

fn labels(s: &[usize]) -> String {
    s.iter().map(|x| (x + 1).to_string()).join(",")
}

/// For each cell, checks that a sphere passes through its vertices with
/// every other point strictly outside.
pub fn verify_empty_spheres(a: &PointConfiguration, t: &SubdivisionComplex) -> Report {
    let mut report = Report::new();
    if t.n() != a.len() {
        report.check(
            "labels",
            false,
            format!("subdivision has {} labels, configuration {}", t.n(), a.len()),
        );
        return report;
    }
    let d = a.dim();
    let homog = a.homogeneous_int_rows();
    let lifted: Vec<Vec<BigInt>> = a.points().iter().map(|p| paraboloid_int_row(p)).collect();
    for cell in t.cells() {
        let id = format!("cell {}", labels(cell));
        let Some(basis) = affine_basis(cell, &homog, d) else {
            report.check(id, false, "cell does not span");
            return report;
        };
        let brows: Vec<&[BigInt]> = basis.iter().map(|&i| homog[i].as_slice()).collect();
        let orient = int_det_sign(&brows);
        let mut violation = None;
        for q in 0..a.len() {
            if basis.contains(&q) {
                continue;
            }
            let mut rows: Vec<&[BigInt]> = basis.iter().map(|&i| lifted[i].as_slice()).collect();
            rows.push(&lifted[q]);
            let s = in_sphere_rows(&rows, orient);
            let expected = if cell.contains(&q) {
                Sign::Zero
            } else {
                Sign::Positive
            };
            if s != expected {
                violation = Some(format!(
                    "point {} has in_sphere {s}, expected {expected}",
                    q + 1
                ));
                break;
            }
        }
        match violation {
            None => {
                report.check(id, true, "empty circumsphere");
            }
            Some(v) => {
                report.check(id, false, v);
                return report;
            }
        }
    }
    report
}

/// A `d+1`-subset of `cell` spanning its affine hull, chosen greedily.
pub(crate) fn affine_basis(cell: &[usize], homog: &[Vec<BigInt>], d: usize) -> Option<Vec<usize>> {
    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for &i in cell {
        rows.push(homog[i].clone());
        if int_rank(&rows) == rows.len() {
            basis.push(i);
            if basis.len() == d + 1 {
                return Some(basis);
            }
        } else {
            rows.pop();
        }
    }
    None
}

/// Exact volume of each cell, in cell order.
pub fn cell_volumes(
    a: &PointConfiguration,
    t: &SubdivisionComplex,
) -> Result<Vec<crate::exact::Rational>> {
    t.cells()
        .iter()
        .map(|c| {
            let sub = a.reorder(c)?;
            if c.len() == a.dim() + 1 {
                let pts: Vec<&[crate::exact::Rational]> =
                    sub.points().iter().map(Vec::as_slice).collect();
                simplex_volume(&pts)
            } else {
                crate::polytope::volume(&sub)
            }
        })
        .collect()
}
