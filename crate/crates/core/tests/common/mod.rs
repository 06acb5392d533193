//! Independent oracles and random generators shared by the integration tests
//! and the acceptance harness. Nothing here calls into the library's linear
//! algebra: determinants are Laplace expansions over rationals and spheres
//! are located by solving for their centers with Cramer's rule.
#![allow(dead_code)]

use std::collections::BTreeSet;

use inscribed::matroid::point_chirotope;
use inscribed::{PointConfiguration, Rational, Sign};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(p: i64) -> Rational {
    Rational::from_integer(p.into())
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// Numerator in `[-bound, bound]`, denominator in `[1, 9]`.
pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=9))
}

pub fn random_point(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Vec<Rational> {
    (0..d).map(|_| random_rational(rng, bound)).collect()
}

pub fn random_int_point(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Vec<Rational> {
    (0..d).map(|_| r(rng.gen_range(-bound..=bound))).collect()
}

/// Full-dimensional, duplicate-free integer configuration (degeneracies allowed).
pub fn random_configuration(rng: &mut ChaCha8Rng, n: usize, d: usize, bound: i64) -> PointConfiguration {
    loop {
        let pts: Vec<Vec<Rational>> = (0..n).map(|_| random_int_point(rng, d, bound)).collect();
        let a = PointConfiguration::new(d, pts).unwrap();
        if !a.has_duplicates() && a.is_full_dimensional() {
            return a;
        }
    }
}

/// Rational configuration with no `d+1` points on a hyperplane and no `d+2`
/// points on a sphere.
pub fn generic_configuration(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointConfiguration {
    loop {
        let pts: Vec<Vec<Rational>> = (0..n).map(|_| random_point(rng, d, 30)).collect();
        if is_generic(&pts) {
            return PointConfiguration::new(d, pts).unwrap();
        }
    }
}

pub fn is_generic(pts: &[Vec<Rational>]) -> bool {
    let d = pts[0].len();
    let n = pts.len();
    if n > d
        && (0..n)
            .combinations(d + 1)
            .any(|s| orientation_oracle(&s.iter().map(|&i| pts[i].as_slice()).collect::<Vec<_>>()).is_zero())
    {
        return false;
    }
    n < d + 2
        || (0..n).combinations(d + 2).all(|s| {
            let p: Vec<&[Rational]> = s.iter().map(|&i| pts[i].as_slice()).collect();
            !in_sphere_oracle(&p).unwrap().is_zero()
        })
}

/// Convex polygon with vertices in counterclockwise order and no three
/// collinear: every sorted triple is positively oriented.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng, n: usize) -> PointConfiguration {
    loop {
        let pts: Vec<Vec<Rational>> = (0..n).map(|_| random_point(rng, 2, 40)).collect();
        let Some(order) = convex_cyclic_order(&pts) else { continue };
        let shift = rng.gen_range(0..n);
        let pts: Vec<Vec<Rational>> = (0..n).map(|i| pts[order[(i + shift) % n]].clone()).collect();
        return PointConfiguration::new(2, pts).unwrap();
    }
}

/// Counterclockwise order of a strictly convex planar point set, if it is one.
fn convex_cyclic_order(pts: &[Vec<Rational>]) -> Option<Vec<usize>> {
    let n = pts.len();
    let hull = convex_hull_2d(pts);
    if hull.len() != n {
        return None;
    }
    let all_positive = (0..n).combinations(3).all(|t| {
        let p: Vec<&[Rational]> = t.iter().map(|&i| pts[hull[i]].as_slice()).collect();
        orientation_oracle(&p) == Sign::Positive
    });
    all_positive.then_some(hull)
}

pub fn sign_of(x: &Rational) -> Sign {
    if x.is_positive() {
        Sign::Positive
    } else if x.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    match n {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut total = Rational::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * laplace_det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Sign of `det[(p_i, 1)]`.
pub fn orientation_oracle(points: &[&[Rational]]) -> Sign {
    let m: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.iter().cloned().chain([Rational::one()]).collect())
        .collect();
    sign_of(&laplace_det(&m))
}

/// Center of the sphere through `d+1` affinely independent points of `R^d`.
pub fn circumcenter(points: &[&[Rational]]) -> Option<Vec<Rational>> {
    let d = points[0].len();
    let p0 = points[0];
    // 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(x, y)| (x - y) * r(2)).collect())
        .collect();
    let rhs: Vec<Rational> = points[1..].iter().map(|p| sq(p) - sq(p0)).collect();
    let det = laplace_det(&rows);
    if det.is_zero() {
        return None;
    }
    Some(
        (0..d)
            .map(|c| {
                let replaced: Vec<Vec<Rational>> = rows
                    .iter()
                    .zip(&rhs)
                    .map(|(row, b)| {
                        let mut row = row.clone();
                        row[c] = b.clone();
                        row
                    })
                    .collect();
                laplace_det(&replaced) / &det
            })
            .collect(),
    )
}

pub fn sq(p: &[Rational]) -> Rational {
    p.iter().map(|x| x * x).sum()
}

pub fn dist_sq(p: &[Rational], c: &[Rational]) -> Rational {
    p.iter().zip(c).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `+` outside, `0` on, `-` inside the sphere through the first `d+1`
/// points; `None` when they do not span.
pub fn in_sphere_oracle(points: &[&[Rational]]) -> Option<Sign> {
    let d = points[0].len();
    let c = circumcenter(&points[..=d])?;
    let r2 = dist_sq(points[0], &c);
    Some(sign_of(&(dist_sq(points[d + 1], &c) - r2)))
}

/// Reflection of `p` in the hyperplane through `c` orthogonal to `u`.
/// Keeps `|p - c|`, so it produces exact cospherical points.
pub fn reflect(p: &[Rational], c: &[Rational], u: &[Rational]) -> Vec<Rational> {
    let off: Vec<Rational> = p.iter().zip(c).map(|(x, y)| x - y).collect();
    let f = off.iter().zip(u).map(|(x, y)| x * y).sum::<Rational>() * r(2) / sq(u);
    p.iter().zip(u).map(|(x, y)| x - &f * y).collect()
}

/// Cells of the Delaunay subdivision by exhaustive search: every spanning
/// `(d+1)`-subset whose circumsphere has no point strictly inside yields the
/// cell of all points on that sphere.
pub fn brute_force_delaunay(a: &PointConfiguration) -> BTreeSet<Vec<usize>> {
    let d = a.dim();
    let pts = a.points();
    let mut cells = BTreeSet::new();
    for s in (0..a.len()).combinations(d + 1) {
        let p: Vec<&[Rational]> = s.iter().map(|&i| pts[i].as_slice()).collect();
        let Some(c) = circumcenter(&p) else { continue };
        let r2 = dist_sq(p[0], &c);
        let mut cell = Vec::new();
        let mut empty = true;
        for (i, x) in pts.iter().enumerate() {
            let t = dist_sq(x, &c);
            if t < r2 {
                empty = false;
                break;
            }
            if t == r2 {
                cell.push(i);
            }
        }
        if empty {
            cells.insert(cell);
        }
    }
    cells
}

/// Monotone chain; counterclockwise indices of the strict hull vertices.
pub fn convex_hull_2d(pts: &[Vec<Rational>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| pts[i].cmp(&pts[j]));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let cross = |o: usize, a: usize, b: usize| {
        (&pts[a][0] - &pts[o][0]) * (&pts[b][1] - &pts[o][1]) - (&pts[a][1] - &pts[o][1]) * (&pts[b][0] - &pts[o][0])
    };
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for &i in &seq {
            while hull.len() >= start + 2 && !cross(hull[hull.len() - 2], hull[hull.len() - 1], i).is_positive() {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Lebesgue measure of the convex hull for `d <= 2`.
pub fn hull_volume_low_dim(a: &PointConfiguration) -> Rational {
    let pts = a.points();
    match a.dim() {
        1 => {
            let xs: Vec<&Rational> = pts.iter().map(|p| &p[0]).collect();
            xs.iter().copied().max().unwrap() - xs.iter().copied().min().unwrap()
        }
        2 => {
            let h = convex_hull_2d(pts);
            let mut twice = Rational::zero();
            for k in 0..h.len() {
                let (p, s) = (&pts[h[k]], &pts[h[(k + 1) % h.len()]]);
                twice += &p[0] * &s[1] - &p[1] * &s[0];
            }
            twice / r(2)
        }
        _ => panic!("only d <= 2"),
    }
}

/// `n` points on the moment curve `t -> (t, t^2, ..., t^d)` at `t = 1..n`.
pub fn moment_curve(n: usize, d: usize) -> PointConfiguration {
    let pts = (1..=n as i64)
        .map(|t| (1..=d as u32).map(|k| r(t.pow(k))).collect())
        .collect();
    PointConfiguration::new(d, pts).unwrap()
}

/// Facets of the cyclic polytope `C(n, d)` for even `d` by Gale's evenness
/// condition: between any two non-members lies an even number of members.
pub fn gale_evenness_facets(n: usize, d: usize) -> BTreeSet<Vec<usize>> {
    (0..n)
        .combinations(d)
        .filter(|s| {
            let outside: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
            outside
                .windows(2)
                .all(|w| s.iter().filter(|&&x| w[0] < x && x < w[1]).count() % 2 == 0)
        })
        .collect()
}

/// Facets of a simplicial polytope in general position, each checked by a
/// hyperplane through its vertices with every other point strictly on one
/// side; found by brute force over all `d`-subsets.
pub fn brute_force_facets(a: &PointConfiguration) -> BTreeSet<Vec<usize>> {
    let d = a.dim();
    let pts = a.points();
    (0..a.len())
        .combinations(d)
        .filter(|s| {
            let mut sides = BTreeSet::new();
            for q in (0..a.len()).filter(|q| !s.contains(q)) {
                let p: Vec<&[Rational]> = s.iter().map(|&i| pts[i].as_slice()).chain([pts[q].as_slice()]).collect();
                sides.insert(orientation_oracle(&p));
            }
            sides.len() == 1 && !sides.contains(&Sign::Zero)
        })
        .collect()
}

/// Every `d-1`-subset of a facet lies in exactly two facets.
pub fn is_closed_pseudomanifold(facets: &[Vec<usize>]) -> bool {
    let mut count = std::collections::BTreeMap::<Vec<usize>, usize>::new();
    for f in facets {
        for ridge in f.iter().copied().combinations(f.len() - 1) {
            *count.entry(ridge).or_default() += 1;
        }
    }
    !facets.is_empty() && count.values().all(|&c| c == 2)
}

/// Uniform chirotope check used to filter random samples.
pub fn chirotope_is_uniform(a: &PointConfiguration) -> bool {
    point_chirotope(a).map(|c| c.is_uniform()).unwrap_or(false)
}

/// Evaluation at a rational point by Horner's rule.
pub fn eval_rational(coeffs: &[num_bigint::BigInt], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}
