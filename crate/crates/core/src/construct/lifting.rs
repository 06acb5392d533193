//! Lexicographic liftings with certified heights.
//!
//! Heights are first chosen in a frame where the apex is the vertical point
//! at infinity: point `i` becomes `(a_i, h_i)` and "same side as the apex"
//! means "above". The projective map `(x, t) ↦ (h·x, h·t) / (h + t)` then
//! fixes `{t = 0}`, sends the vertical direction to `(0, h)` and keeps every
//! sidedness relation as long as `h + t_i > 0` for all points.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::config::{PointConfiguration, VectorConfiguration};
use crate::error::{Error, Result};
use crate::exact::{
    cofactor_normal, homogeneous_int_row, int_det_sign, int_dot, integer_row, norm_squared,
    dot, paraboloid_int_row, Rational, Sign,
};
use crate::matroid::{chirotope_equal, point_chirotope};
use crate::report::Report;

pub const DEFAULT_DOUBLING_CAP: u32 = 256;

/// Signs for the lifted points `d+1, …, n` of an `n`-point configuration in
/// `R^d`. Only `+` and `−` are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.iter().any(|s| s.is_zero()) {
            return Err(Error::Parse("sign vectors contain only + and -".into()));
        }
        Ok(SignVector(signs))
    }

    pub fn positive(len: usize) -> Self {
        SignVector(vec![Sign::Positive; len])
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Positive)
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Positive),
                '-' | '\u{2212}' => Ok(Sign::Negative),
                other => Err(Error::Parse(format!("invalid sign character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftMode {
    Generic,
    Delaunay,
}

impl LiftMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftMode::Generic => "generic",
            LiftMode::Delaunay => "delaunay",
        }
    }
}

impl FromStr for LiftMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(LiftMode::Generic),
            "delaunay" => Ok(LiftMode::Delaunay),
            other => Err(Error::Parse(format!("unknown lift mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftOptions {
    pub doubling_cap: u32,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions {
            doubling_cap: DEFAULT_DOUBLING_CAP,
        }
    }
}

/// Everything needed to rebuild a lifting from its base configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingCertificate {
    pub base_dim: usize,
    pub signs: SignVector,
    pub mode: LiftMode,
    /// Vertical heights of the points `d+1, …, n` (0-based `d..n`).
    pub heights: Vec<Rational>,
    pub apex_h: Rational,
    pub doublings: u32,
    pub checks_passed: Vec<String>,
}

impl LiftingCertificate {
    /// Height of every point, including the `d` fixed ones.
    pub fn all_heights(&self) -> Vec<Rational> {
        let mut h = vec![Rational::zero(); self.base_dim];
        h.extend(self.heights.iter().cloned());
        h
    }
}

/// Hyperplanes and spheres spanned by the points added so far, kept as
/// integer cofactor normals so each test against a new point is one dot
/// product.
struct Incremental {
    dim: usize,
    spheres_enabled: bool,
    homog: Vec<Vec<BigInt>>,
    para: Vec<Vec<BigInt>>,
    planes: Vec<Vec<BigInt>>,
    spheres: Vec<(Vec<BigInt>, Sign)>,
}

impl Incremental {
    fn new(dim: usize, spheres_enabled: bool) -> Self {
        Incremental {
            dim,
            spheres_enabled,
            homog: Vec::new(),
            para: Vec::new(),
            planes: Vec::new(),
            spheres: Vec::new(),
        }
    }

    fn push(&mut self, p: &[Rational]) {
        let row = homogeneous_int_row(p);
        let prow = paraboloid_int_row(p);
        let k = self.homog.len();
        if k + 1 >= self.dim {
            for subset in (0..k).combinations(self.dim - 1) {
                let mut rows: Vec<&[BigInt]> = subset.iter().map(|&j| self.homog[j].as_slice()).collect();
                rows.push(&row);
                self.planes.push(cofactor_normal(&rows));
            }
        }
        if self.spheres_enabled && k >= self.dim {
            for subset in (0..k).combinations(self.dim) {
                let mut rows: Vec<&[BigInt]> = subset.iter().map(|&j| self.homog[j].as_slice()).collect();
                rows.push(&row);
                let orient = int_det_sign(&rows);
                if orient.is_zero() {
                    continue;
                }
                let mut prows: Vec<&[BigInt]> = subset.iter().map(|&j| self.para[j].as_slice()).collect();
                prows.push(&prow);
                self.spheres.push((cofactor_normal(&prows), orient));
            }
        }
        self.homog.push(row);
        self.para.push(prow);
    }

    /// First hyperplane on which `row` fails to have sign `want · side(normal)`.
    fn side_violation(
        &self,
        row: &[BigInt],
        want: Sign,
        reference: impl Fn(&[BigInt]) -> Sign,
    ) -> Option<usize> {
        self.planes.iter().position(|h| {
            let r = reference(h);
            r.is_zero() || Sign::of(&int_dot(h, row)) != want * r
        })
    }

    fn sphere_violation(&self, para_row: &[BigInt]) -> Option<usize> {
        self.spheres
            .iter()
            .position(|(h, orient)| -(Sign::of(&int_dot(h, para_row)) * *orient) != Sign::Positive)
    }
}

fn pow2(k: u32) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

fn check_general_position(a: &PointConfiguration) -> Result<()> {
    let rows = a.homogeneous_int_rows();
    for s in (0..a.len()).combinations(a.dim() + 1) {
        let r: Vec<&[BigInt]> = s.iter().map(|&i| rows[i].as_slice()).collect();
        if int_det_sign(&r).is_zero() {
            return Err(Error::NotGeneralPosition);
        }
    }
    Ok(())
}

/// Applies the projective map with apex height `apex_h` to vertically lifted
/// points and appends the apex `(0, apex_h)`.
pub fn realize(
    a: &PointConfiguration,
    heights: &[Rational],
    apex_h: &Rational,
) -> Result<PointConfiguration> {
    if heights.len() != a.len() {
        return Err(Error::Dimension("one height per point required".into()));
    }
    let mut points = Vec::with_capacity(a.len() + 1);
    for (i, (p, t)) in a.points().iter().zip(heights).enumerate() {
        let w = apex_h + t;
        if !w.is_positive() {
            return Err(Error::Inconsistent(format!(
                "point {} is not below the apex height",
                i + 1
            )));
        }
        let f = apex_h / w;
        let mut q: Vec<Rational> = p.iter().map(|x| x * &f).collect();
        q.push(t * &f);
        points.push(q);
    }
    let mut apex = vec![Rational::zero(); a.dim()];
    apex.push(apex_h.clone());
    points.push(apex);
    PointConfiguration::new(a.dim() + 1, points)
}

/// Lexicographic lifting of `a` with signs `s` for the points `d+1, …, n`.
pub fn lex_lift(
    a: &PointConfiguration,
    s: &SignVector,
    mode: LiftMode,
) -> Result<(PointConfiguration, LiftingCertificate)> {
    lex_lift_with(a, s, mode, &LiftOptions::default())
}

pub fn lex_lift_with(
    a: &PointConfiguration,
    s: &SignVector,
    mode: LiftMode,
    options: &LiftOptions,
) -> Result<(PointConfiguration, LiftingCertificate)> {
    let d = a.dim();
    let n = a.len();
    if n < d + 1 {
        return Err(Error::Precondition(format!(
            "need at least {} points in R^{d}",
            d + 1
        )));
    }
    if s.len() != n - d {
        return Err(Error::Dimension(format!(
            "sign vector has length {}, expected {}",
            s.len(),
            n - d
        )));
    }
    check_general_position(a)?;
    let delaunay = mode == LiftMode::Delaunay;
    let dim = d + 1;

    let mut frame = Incremental::new(dim, delaunay);
    let mut heights: Vec<Rational> = Vec::with_capacity(n);
    let mut doublings = 0u32;
    let lifted_point = |i: usize, t: &Rational| {
        let mut q = a.points()[i].clone();
        q.push(t.clone());
        q
    };
    for i in 0..n {
        let t = if i <= d {
            Rational::zero()
        } else {
            let sign = s.signs()[i - d];
            let mut found = None;
            for k in 0..=options.doubling_cap {
                let t = match sign {
                    Sign::Negative => -pow2(k),
                    _ => pow2(k),
                };
                let q = lifted_point(i, &t);
                let row = homogeneous_int_row(&q);
                // The vertical direction (0, …, 0, 1, 0) pairs with the
                // height component of each normal.
                let ok = frame.side_violation(&row, sign, |h| Sign::of(&h[d])).is_none()
                    && (!delaunay || frame.sphere_violation(&paraboloid_int_row(&q)).is_none());
                if ok {
                    doublings += k;
                    found = Some(t);
                    break;
                }
            }
            found.ok_or_else(|| {
                Error::SearchFailure(format!(
                    "no height for point {} within {} doublings; heights so far: [{}]",
                    i + 1,
                    options.doubling_cap,
                    heights.iter().map(|h| h.to_string()).join(", ")
                ))
            })?
        };
        frame.push(&lifted_point(i, &t));
        heights.push(t);
    }

    let min_t = heights.iter().min().cloned().unwrap_or_else(Rational::zero);
    for k in 0..=options.doubling_cap {
        let apex_h = pow2(k);
        if !(&apex_h + &min_t).is_positive() {
            continue;
        }
        let lifted = realize(a, &heights, &apex_h)?;
        let report = verify_lex_lift(a, &lifted, s, mode);
        if report.passed() {
            let cert = LiftingCertificate {
                base_dim: d,
                signs: s.clone(),
                mode,
                heights: heights[d..].to_vec(),
                apex_h,
                doublings: doublings + k,
                checks_passed: report.checks.iter().map(|c| c.id.clone()).collect(),
            };
            return Ok((lifted, cert));
        }
    }
    Err(Error::SearchFailure(format!(
        "no apex height within {} doublings; heights: [{}]",
        options.doubling_cap,
        heights.iter().map(|h| h.to_string()).join(", ")
    )))
}

/// Rebuilds the lifting from its certificate and re-verifies every
/// constraint from scratch.
pub fn replay(a: &PointConfiguration, cert: &LiftingCertificate) -> Result<PointConfiguration> {
    if cert.base_dim != a.dim() || cert.heights.len() + a.dim() != a.len() {
        return Err(Error::Inconsistent("certificate does not match configuration".into()));
    }
    let lifted = realize(a, &cert.all_heights(), &cert.apex_h)?;
    let report = verify_lex_lift(a, &lifted, &cert.signs, cert.mode);
    if let Some(f) = report.failures().next() {
        return Err(Error::Inconsistent(format!("{}: {}", f.id, f.detail)));
    }
    Ok(lifted)
}

/// Checks the defining conditions of a lexicographic lifting with apex as
/// the last point: fixed base points, points on apex rays, sidedness against
/// earlier hyperplanes, and (in Delaunay mode) empty earlier circumspheres.
pub fn verify_lex_lift(
    a: &PointConfiguration,
    lifted: &PointConfiguration,
    s: &SignVector,
    mode: LiftMode,
) -> Report {
    let mut report = Report::new();
    let d = a.dim();
    let n = a.len();
    if lifted.dim() != d + 1 || lifted.len() != n + 1 || s.len() + d != n {
        report.check("shape", false, "lifted configuration has the wrong shape");
        return report;
    }
    let apex = &lifted.points()[n];
    let fixed = (0..d).all(|i| {
        let p = &lifted.points()[i];
        p[..d] == a.points()[i][..] && p[d].is_zero()
    });
    report.check("fixed", fixed, "first d points at height 0");

    let mut ray_fail = None;
    for i in d..n {
        let target: Vec<Rational> = a.points()[i].iter().cloned().chain([Rational::zero()]).collect();
        if !on_open_ray(apex, &target, &lifted.points()[i]) {
            ray_fail = Some(i);
            break;
        }
    }
    report.check(
        "ray",
        ray_fail.is_none(),
        match ray_fail {
            None => "lifted points on apex rays".to_string(),
            Some(i) => format!("point {} is off its apex ray", i + 1),
        },
    );

    let sides = side_table(lifted, d, s.signs());
    report.check(
        "side",
        sides.is_ok(),
        match &sides {
            Ok(count) => format!("{count} sidedness conditions"),
            Err(e) => e.clone(),
        },
    );

    if mode == LiftMode::Delaunay {
        let mut frame = Incremental::new(d + 1, true);
        let mut fail = None;
        let mut count = 0usize;
        for (i, p) in lifted.points().iter().enumerate() {
            // Points d+3, …, n+1 (1-based) must avoid earlier circumspheres.
            if i >= d + 2 {
                count += frame.spheres.len();
                if let Some(k) = frame.sphere_violation(&paraboloid_int_row(p)) {
                    fail = Some((i, k));
                    break;
                }
            }
            frame.push(p);
        }
        report.check(
            "sphere",
            fail.is_none(),
            match fail {
                None => format!("{count} empty-sphere conditions"),
                Some((i, k)) => format!("point {} inside earlier circumsphere #{}", i + 1, k + 1),
            },
        );
    }
    report
}

/// Verifies sidedness for a configuration whose last point is the apex:
/// each point `i >= d+1` (0-based `i >= d`) lies on the apex side of every
/// hyperplane through earlier points iff `signs[i-d] = +`. Returns the number
/// of conditions checked.
pub fn side_table(
    lifted: &PointConfiguration,
    d: usize,
    signs: &[Sign],
) -> std::result::Result<usize, String> {
    let n = lifted.len() - 1;
    if signs.len() + d != n {
        return Err("sign vector length mismatch".into());
    }
    let apex_row = homogeneous_int_row(&lifted.points()[n]);
    let mut frame = Incremental::new(d + 1, false);
    let mut count = 0usize;
    for i in 0..n {
        let row = homogeneous_int_row(&lifted.points()[i]);
        if i >= d {
            count += frame.planes.len();
            let want = signs[i - d];
            if let Some(k) = frame.side_violation(&row, want, |h| Sign::of(&int_dot(h, &apex_row))) {
                return Err(format!(
                    "point {} violates sign {} against hyperplane #{}",
                    i + 1,
                    want,
                    k + 1
                ));
            }
        }
        frame.push(&lifted.points()[i]);
    }
    Ok(count)
}

/// `q = apex + λ (target − apex)` for some `λ > 0`.
fn on_open_ray(apex: &[Rational], target: &[Rational], q: &[Rational]) -> bool {
    let dir: Vec<Rational> = target.iter().zip(apex).map(|(t, o)| t - o).collect();
    let off: Vec<Rational> = q.iter().zip(apex).map(|(x, o)| x - o).collect();
    let dd = norm_squared(&dir);
    if dd.is_zero() {
        return false;
    }
    let lambda = dot(&off, &dir) / &dd;
    lambda.is_positive() && off.iter().zip(&dir).all(|(x, v)| *x == &lambda * v)
}

/// Orthogonal projection of each vector onto the hyperplane orthogonal to `u`.
pub fn orthogonal_projection(vectors: &[Vec<Rational>], u: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let uu = norm_squared(u);
    if uu.is_zero() {
        return Err(Error::Precondition("apex vector is zero".into()));
    }
    Ok(vectors
        .iter()
        .map(|v| {
            let f = dot(v, u) / &uu;
            v.iter().zip(u).map(|(x, y)| x - &f * y).collect()
        })
        .collect())
}

/// Projects the vectors other than `apex` orthogonally to the apex vector and
/// writes them in coordinates of that hyperplane by dropping the last
/// coordinate `k < skip_limit` where the apex vector is nonzero. The result
/// has rank one less; its chirotope is the contraction at the apex.
pub fn contract(v: &VectorConfiguration, apex: usize, skip_limit: usize) -> Result<VectorConfiguration> {
    let u = v
        .vectors()
        .get(apex)
        .ok_or(Error::UnknownLabel { label: apex.saturating_add(1), n: v.len() })?
        .clone();
    let k = (0..skip_limit.min(u.len()))
        .rev()
        .find(|&k| !u[k].is_zero())
        .ok_or_else(|| Error::Precondition("apex vector has no usable coordinate".into()))?;
    let others: Vec<Vec<Rational>> = v
        .vectors()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != apex)
        .map(|(_, x)| x.clone())
        .collect();
    let projected = orthogonal_projection(&others, &u)?;
    let reduced: Vec<Vec<Rational>> = projected
        .into_iter()
        .map(|mut x| {
            x.remove(k);
            x
        })
        .collect();
    let out = VectorConfiguration::new(v.rank() - 1, reduced)?;
    if out.matrix_rank() < out.rank() {
        return Err(Error::NotFullRank);
    }
    Ok(out)
}

/// Recovers a configuration in `R^d` from a lifted one whose last point is the
/// apex: homogenize, project orthogonally to the apex vector, dehomogenize.
pub fn lift_projection(lifted: &PointConfiguration) -> Result<PointConfiguration> {
    if lifted.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    let v = lifted.homogenize();
    // Keep the homogenizing coordinate so the result can be dehomogenized.
    let contracted = contract(&v, lifted.len() - 1, lifted.dim())?;
    contracted.dehomogenize().map_err(|_| {
        Error::Precondition("a projected vector has zero homogenizing coordinate".into())
    })
}

/// Lifts two realizations of one chirotope with the same signs and compares
/// the lifted chirotopes.
pub fn lift_invariance_check(
    a1: &PointConfiguration,
    a2: &PointConfiguration,
    s: &SignVector,
) -> Result<bool> {
    let c1 = point_chirotope(a1)?;
    let c2 = point_chirotope(a2)?;
    if !chirotope_equal(&c1, &c2) {
        return Err(Error::Precondition("input chirotopes differ".into()));
    }
    let (l1, _) = lex_lift(a1, s, LiftMode::Generic)?;
    let (l2, _) = lex_lift(a2, s, LiftMode::Generic)?;
    Ok(chirotope_equal(&point_chirotope(&l1)?, &point_chirotope(&l2)?))
}

/// Scales vectors to integers; handy for comparing projected vectors.
pub fn integer_vectors(v: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    v.iter().map(|x| integer_row(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, orientation};

    fn cfg(p: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::from_i64(p).unwrap()
    }

    #[test]
    fn parse_signs() {
        let s: SignVector = "++-+".parse().unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string(), "++-+");
        assert!("+0".parse::<SignVector>().is_err());
        assert!(SignVector::positive(3).is_positive());
    }

    #[test]
    fn positive_lift_on_a_line() {
        let a = cfg(&[&[0], &[1], &[3]]);
        let s: SignVector = "++".parse().unwrap();
        let (l, cert) = lex_lift(&a, &s, LiftMode::Generic).unwrap();
        assert_eq!((l.len(), l.dim()), (4, 2));
        assert!(verify_lex_lift(&a, &l, &s, LiftMode::Generic).passed());
        assert_eq!(replay(&a, &cert).unwrap(), l);
        // Point 3 and the apex lie on the same side of the line through 1, 2.
        let p: Vec<&[Rational]> = l.points().iter().map(Vec::as_slice).collect();
        assert_eq!(
            orientation(&[p[0], p[1], p[2]]).unwrap(),
            orientation(&[p[0], p[1], p[3]]).unwrap()
        );
    }

    #[test]
    fn negative_sign_places_point_opposite_the_apex() {
        let a = cfg(&[&[0], &[1], &[3], &[4]]);
        let s: SignVector = "+-+".parse().unwrap();
        let (l, _) = lex_lift(&a, &s, LiftMode::Delaunay).unwrap();
        let p: Vec<&[Rational]> = l.points().iter().map(Vec::as_slice).collect();
        assert_eq!(
            orientation(&[p[0], p[1], p[2]]).unwrap(),
            -orientation(&[p[0], p[1], p[4]]).unwrap()
        );
        assert!(side_table(&l, 1, s.signs()).is_ok());
        let wrong: SignVector = "+++".parse().unwrap();
        assert!(side_table(&l, 1, wrong.signs()).is_err());
    }

    #[test]
    fn delaunay_mode_has_empty_spheres() {
        let a = cfg(&[&[0, 0], &[3, 1], &[1, 4], &[5, 6], &[-2, 3], &[2, 2]]);
        let s: SignVector = "+-+-".parse().unwrap();
        let (l, cert) = lex_lift(&a, &s, LiftMode::Delaunay).unwrap();
        let r = verify_lex_lift(&a, &l, &s, LiftMode::Delaunay);
        assert!(r.passed(), "{r:?}");
        assert!(cert.checks_passed.contains(&"sphere".to_string()));
        assert_eq!(replay(&a, &cert).unwrap(), l);
    }

    #[test]
    fn rejects_bad_input() {
        let a = cfg(&[&[0, 0], &[1, 1], &[2, 2], &[0, 1]]);
        assert!(matches!(
            lex_lift(&a, &"++".parse().unwrap(), LiftMode::Generic),
            Err(Error::NotGeneralPosition)
        ));
        let a = cfg(&[&[0], &[1], &[3]]);
        assert!(lex_lift(&a, &"+".parse().unwrap(), LiftMode::Generic).is_err());
    }

    #[test]
    fn tiny_cap_fails_with_search_failure() {
        let a = cfg(&[&[0], &[1], &[2], &[100]]);
        let opts = LiftOptions { doubling_cap: 0 };
        let err = lex_lift_with(&a, &"+-+".parse().unwrap(), LiftMode::Delaunay, &opts).unwrap_err();
        assert!(err.is_search_failure());
    }

    #[test]
    fn projection_recovers_base_chirotope() {
        let a = cfg(&[&[0, 0], &[3, 1], &[1, 4], &[5, 6], &[-2, 3]]);
        let (l, _) = lex_lift(&a, &"+-+".parse().unwrap(), LiftMode::Generic).unwrap();
        let back = lift_projection(&l).unwrap();
        assert!(chirotope_equal(
            &point_chirotope(&back).unwrap(),
            &point_chirotope(&a).unwrap()
        ));
    }

    #[test]
    fn projection_is_identity_on_orthogonal_vectors() {
        let base = vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(1)]];
        let u = vec![int(-1), int(-1), int(1)];
        assert_eq!(orthogonal_projection(&base, &u).unwrap(), base);
    }

    #[test]
    fn projection_is_total() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[2, 3]]);
        let p = lift_projection(&a).unwrap();
        assert_eq!((p.len(), p.dim()), (3, 1));
    }

    #[test]
    fn invariance_on_affine_images() {
        let a = cfg(&[&[0, 0], &[4, 0], &[5, 3], &[2, 5], &[-1, 3]]);
        let b = a.translate(&[int(7), int(-2)]).unwrap().scale(&int(3));
        assert!(lift_invariance_check(&a, &b, &"+-+".parse().unwrap()).unwrap());
        let c = cfg(&[&[4, 0], &[0, 0], &[5, 3], &[2, 5], &[-1, 3]]);
        assert!(lift_invariance_check(&a, &c, &"+++".parse().unwrap()).is_err());
    }
}
