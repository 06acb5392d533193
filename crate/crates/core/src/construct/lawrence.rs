//! Lawrence extensions, Lawrence polytopes, and their inscribed realizations.

use num_traits::{One, Signed, Zero};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::{dot, norm_squared, Matrix, Rational};
use crate::sphere::{north_pole, stereo_inverse_point, InscribedConfiguration};

/// Replaces point `lift` by `(a, 1)` and appends `(a, 2)`; all other points
/// get last coordinate 0.
pub fn lawrence_extension(a: &PointConfiguration, lift: usize) -> Result<PointConfiguration> {
    let p = a.point(lift)?.to_vec();
    let mut b = a.embed(1);
    let d = a.dim();
    let mut lower = p.clone();
    lower.push(Rational::one());
    let mut upper = p;
    upper.push(Rational::from_integer(2.into()));
    let mut points = b.clone().into_points();
    points[lift] = lower;
    points.push(upper);
    b = PointConfiguration::new(d + 1, points)?;
    Ok(b)
}

/// Lawrence extension on every point in order. Element `i < n` is the lower
/// copy of `a_i`, element `n + i` the upper copy.
pub fn lawrence_polytope(a: &PointConfiguration) -> Result<PointConfiguration> {
    let mut b = a.clone();
    for i in 0..a.len() {
        b = lawrence_extension(&b, i)?;
    }
    Ok(b)
}

/// One inscribing step on point `label`: everything is embedded with a new
/// last coordinate 0, the point is replaced by its inverse stereographic
/// image and the north pole is appended as its upper copy.
pub fn inscribe_step(a: &PointConfiguration, label: usize) -> Result<PointConfiguration> {
    let p = a.point(label)?.to_vec();
    let mut points = a.embed(1).into_points();
    points[label] = stereo_inverse_point(&p);
    points.push(north_pole(a.dim() + 1));
    PointConfiguration::new(a.dim() + 1, points)
}

/// Offset `C = 2 (1 + max |coordinate|)` along the first axis; doubled until
/// every translated point has norm greater than 1.
pub fn inscribing_offset(a: &PointConfiguration) -> Result<Vec<Rational>> {
    if a.dim() == 0 {
        return Err(Error::Dimension("cannot translate points of R^0".into()));
    }
    let max = a
        .points()
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let mut c = Rational::from_integer(2.into()) * (Rational::one() + max);
    for _ in 0..64 {
        let mut offset = vec![Rational::zero(); a.dim()];
        offset[0] = c.clone();
        let t = a.translate(&offset)?;
        if t.points().iter().all(|p| norm_squared(p) > Rational::one()) {
            return Ok(offset);
        }
        c *= Rational::from_integer(2.into());
    }
    Err(Error::Inconsistent("no translation moves every point outside the unit sphere".into()))
}

/// Inscribed realization of the Lawrence polytope of `a`, labeled like
/// [`lawrence_polytope`].
pub fn inscribe_lawrence(a: &PointConfiguration) -> Result<InscribedConfiguration> {
    let mut b = a.translate(&inscribing_offset(a)?)?;
    for i in 0..a.len() {
        b = inscribe_step(&b, i)?;
    }
    InscribedConfiguration::new(b)
}

/// Pairs `(lower, upper)` in construction order for a Lawrence polytope on
/// `n` points.
pub fn lawrence_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, n + i)).collect()
}

/// Undoes Lawrence steps, last pair first: the lower copy is replaced by the
/// point where the ray from the upper copy through it meets the affine hull
/// of the remaining points, and the upper copy is removed. A coordinate
/// hyperplane `x_j = 0` is dropped exactly; any other hyperplane is charted by
/// dropping a coordinate on which its normal is nonzero.
pub fn decode_lawrence(b: &PointConfiguration, pairs: &[(usize, usize)]) -> Result<PointConfiguration> {
    let mut cur = b.clone();
    let mut pairs: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((lower, upper)) = pairs.pop() {
        if lower == upper {
            return Err(Error::Precondition("a pair repeats one label".into()));
        }
        let lo = cur.point(lower)?.to_vec();
        let up = cur.point(upper)?.to_vec();
        let k = cur.dim();
        let rest: Vec<Vec<Rational>> = (0..cur.len())
            .filter(|&i| i != lower && i != upper)
            .map(|i| {
                let mut r = cur.points()[i].clone();
                r.push(Rational::one());
                r
            })
            .collect();
        let null = if rest.is_empty() {
            Vec::new()
        } else {
            Matrix::from_rows(rest.clone())?.null_space()
        };
        let plane = if null.len() == 1 {
            null[0].clone()
        } else if rest.iter().all(|r| r[k - 1].is_zero()) {
            // Too few points to fix a hyperplane; use the one the step
            // introduced.
            let mut e = vec![Rational::zero(); k + 1];
            e[k - 1] = Rational::one();
            e
        } else {
            return Err(Error::DecodingDegenerate(format!(
                "remaining points span an affine space of codimension {}",
                null.len()
            )));
        };
        let (normal, offset) = plane.split_at(k);
        let offset = &offset[0];
        // Points x with normal·x + offset = 0; ray up + t (lo − up).
        let dir: Vec<Rational> = lo.iter().zip(&up).map(|(l, u)| l - u).collect();
        let denom = dot(normal, &dir);
        if denom.is_zero() {
            return Err(Error::DecodingDegenerate("ray is parallel to the hyperplane".into()));
        }
        let t = -(dot(normal, &up) + offset) / denom;
        if !t.is_positive() {
            return Err(Error::DecodingDegenerate("ray points away from the hyperplane".into()));
        }
        let hit: Vec<Rational> = up.iter().zip(&dir).map(|(u, v)| u + &t * v).collect();

        let drop = normal
            .iter()
            .rposition(|x| !x.is_zero())
            .expect("hyperplane normal is nonzero");
        let mut points = cur.into_points();
        points[lower] = hit;
        points.remove(upper);
        for p in &mut points {
            p.remove(drop);
        }
        cur = PointConfiguration::new(k - 1, points)?;
        for pair in &mut pairs {
            for l in [&mut pair.0, &mut pair.1] {
                if *l > upper {
                    *l -= 1;
                } else if *l == upper {
                    return Err(Error::Precondition("pairs share a label".into()));
                }
            }
        }
    }
    Ok(cur)
}
