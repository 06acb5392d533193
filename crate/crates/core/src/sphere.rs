//! Stereographic projection, its inverse, and inscribed configurations.
//!
//! The north pole of the unit sphere in `R^{d+1}` is `N = (0, …, 0, 1)`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::{dot, homogeneous_int_row, int_det_sign, int_rank, norm_squared, Rational, Sign};
use crate::report::Report;

/// Points exactly on the unit sphere, optionally with a marked pole label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InscribedConfiguration {
    base: PointConfiguration,
    marked_pole: Option<usize>,
}

impl InscribedConfiguration {
    pub fn new(base: PointConfiguration) -> Result<Self> {
        if let Some(i) = base
            .points()
            .iter()
            .position(|p| norm_squared(p) != Rational::one())
        {
            return Err(Error::Inconsistent(format!(
                "point {} is not on the unit sphere",
                i + 1
            )));
        }
        Ok(InscribedConfiguration {
            base,
            marked_pole: None,
        })
    }

    pub fn with_pole(mut self, pole: usize) -> Result<Self> {
        self.base.point(pole)?;
        self.marked_pole = Some(pole);
        Ok(self)
    }

    pub fn base(&self) -> &PointConfiguration {
        &self.base
    }

    pub fn into_base(self) -> PointConfiguration {
        self.base
    }

    pub fn marked_pole(&self) -> Option<usize> {
        self.marked_pole
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

pub fn north_pole(ambient: usize) -> Vec<Rational> {
    let mut n = vec![Rational::zero(); ambient];
    if let Some(last) = n.last_mut() {
        *last = Rational::one();
    }
    n
}

/// `σ(x) = x_{1..d} / (1 − x_{d+1})`.
pub fn stereo_point(x: &[Rational]) -> Option<Vec<Rational>> {
    let (last, head) = x.split_last()?;
    let denom = Rational::one() - last;
    if denom.is_zero() {
        return None;
    }
    Some(head.iter().map(|c| c / &denom).collect())
}

/// `σ⁻¹(y) = (2y, |y|² − 1) / (|y|² + 1)`.
pub fn stereo_inverse_point(y: &[Rational]) -> Vec<Rational> {
    let n2 = norm_squared(y);
    let denom = &n2 + Rational::one();
    let two = Rational::from_integer(2.into());
    let mut out: Vec<Rational> = y.iter().map(|c| &two * c / &denom).collect();
    out.push((n2 - Rational::one()) / denom);
    out
}

/// Householder reflection swapping the sphere point `p` with the north pole.
pub fn reflect_to_pole(p: &[Rational], x: &[Rational]) -> Vec<Rational> {
    let n = north_pole(p.len());
    let u: Vec<Rational> = p.iter().zip(&n).map(|(a, b)| a - b).collect();
    let uu = norm_squared(&u);
    if uu.is_zero() {
        return x.to_vec();
    }
    let f = Rational::from_integer(2.into()) * dot(&u, x) / uu;
    x.iter().zip(&u).map(|(xi, ui)| xi - &f * ui).collect()
}

/// Projects every point except `from` to `R^d`, after moving `from` to the
/// north pole. Remaining points keep their relative order.
pub fn stereo_project(a: &InscribedConfiguration, from: usize) -> Result<PointConfiguration> {
    let base = a.base();
    let p = base.point(from)?.to_vec();
    if base.dim() == 0 {
        return Err(Error::Dimension("cannot project from a 0-sphere in R^0".into()));
    }
    let at_pole = p == north_pole(p.len());
    let mut out = Vec::with_capacity(base.len() - 1);
    for (i, x) in base.points().iter().enumerate() {
        if i == from {
            continue;
        }
        let y = if at_pole { x.clone() } else { reflect_to_pole(&p, x) };
        out.push(stereo_point(&y).ok_or(Error::ProjectionUndefined(i + 1))?);
    }
    PointConfiguration::new(base.dim() - 1, out)
}

pub fn stereo_inverse(a: &PointConfiguration) -> InscribedConfiguration {
    let points = a.points().iter().map(|y| stereo_inverse_point(y)).collect();
    InscribedConfiguration {
        base: PointConfiguration::new(a.dim() + 1, points).expect("lifted points share a dimension"),
        marked_pole: None,
    }
}

pub fn is_inscribed(a: &PointConfiguration) -> bool {
    a.points().iter().all(|p| norm_squared(p) == Rational::one())
}

/// Compares circumsphere sidedness in `R^d` with hyperplane sidedness of the
/// lifted points on the sphere, over every `(d+2)`-subset whose first `d+1`
/// points span; and hyperplane sidedness of `a` with that of the lifted
/// points against the hyperplane through `d` lifted points and `N`.
pub fn check_lemma_stereographic(a: &PointConfiguration) -> Report {
    let mut report = Report::new();
    let d = a.dim();
    let lifted = stereo_inverse(a);
    let base_rows = a.homogeneous_int_rows();
    let lifted_rows = lifted.base().homogeneous_int_rows();
    let pole_row = homogeneous_int_row(&north_pole(d + 1));
    let paraboloid: Vec<Vec<BigInt>> = a
        .points()
        .iter()
        .map(|p| crate::exact::paraboloid_int_row(p))
        .collect();
    let n = a.len();

    let mut tested = 0usize;
    let mut mismatches = Vec::new();
    for sphere in (0..n).combinations(d + 1) {
        let rows: Vec<&[BigInt]> = sphere.iter().map(|&i| base_rows[i].as_slice()).collect();
        let orient = int_det_sign(&rows);
        if orient.is_zero() {
            continue;
        }
        let mut up: Vec<&[BigInt]> = sphere.iter().map(|&i| lifted_rows[i].as_slice()).collect();
        up.push(&pole_row);
        let pole_side = int_det_sign(&up);
        for q in (0..n).filter(|q| !sphere.contains(q)) {
            let mut prows: Vec<&[BigInt]> = sphere.iter().map(|&i| paraboloid[i].as_slice()).collect();
            prows.push(&paraboloid[q]);
            let expected = crate::exact::in_sphere_rows(&prows, orient);
            *up.last_mut().unwrap() = &lifted_rows[q];
            let side = int_det_sign(&up) * pole_side;
            up.pop();
            up.push(&pole_row);
            tested += 1;
            if side != expected {
                mismatches.push(format!(
                    "sphere {:?} query {}: in_sphere {expected}, lifted side {side}",
                    sphere.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    q + 1
                ));
            }
        }
    }
    report.check(
        "sphere-sidedness",
        mismatches.is_empty(),
        format!("{tested} subsets, {} mismatches", mismatches.len()),
    );
    for (k, m) in mismatches.into_iter().enumerate() {
        report.check(format!("sphere-sidedness/{}", k + 1), false, m);
    }

    let mut tested = 0usize;
    let mut mismatches = Vec::new();
    for plane in (0..n).combinations(d) {
        let prow: Vec<Vec<BigInt>> = plane.iter().map(|&i| base_rows[i].clone()).collect();
        if int_rank(&prow) < d {
            continue;
        }
        for q in (0..n).filter(|q| !plane.contains(q)) {
            let mut rows: Vec<&[BigInt]> = prow.iter().map(Vec::as_slice).collect();
            rows.push(&base_rows[q]);
            let expected = int_det_sign(&rows);
            let mut up: Vec<&[BigInt]> = plane.iter().map(|&i| lifted_rows[i].as_slice()).collect();
            up.push(&pole_row);
            up.push(&lifted_rows[q]);
            let side = int_det_sign(&up);
            tested += 1;
            if side != expected {
                mismatches.push(format!(
                    "hyperplane {:?} query {}: base {expected}, lifted {side}",
                    plane.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    q + 1
                ));
            }
        }
    }
    report.check(
        "hyperplane-sidedness",
        mismatches.is_empty(),
        format!("{tested} subsets, {} mismatches", mismatches.len()),
    );
    for (k, m) in mismatches.into_iter().enumerate() {
        report.check(format!("hyperplane-sidedness/{}", k + 1), false, m);
    }
    report
}

/// Sign of the lifted query against the hyperplane through the lifted sphere
/// points, taken relative to the side of `N`.
pub fn lifted_side(sphere: &[&[Rational]], query: &[Rational]) -> Sign {
    let rows: Vec<Vec<BigInt>> = sphere
        .iter()
        .map(|p| homogeneous_int_row(&stereo_inverse_point(p)))
        .collect();
    let pole = homogeneous_int_row(&north_pole(query.len() + 1));
    let q = homogeneous_int_row(&stereo_inverse_point(query));
    let mut with_pole: Vec<&[BigInt]> = rows.iter().map(Vec::as_slice).collect();
    with_pole.push(&pole);
    let pole_side = int_det_sign(&with_pole);
    with_pole.pop();
    with_pole.push(&q);
    int_det_sign(&with_pole) * pole_side
}
