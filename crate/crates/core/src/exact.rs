//! Exact scalars, linear algebra and the two sign predicates.
//!
//! Coordinates are arbitrary-precision rationals. Determinant signs are
//! computed by clearing denominators row by row (a positive rescaling, so the
//! sign is unchanged) and running fraction-free Bareiss elimination on the
//! resulting integer matrix.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`. Non-reduced input is accepted and normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Canonical `"p/q"` (q > 1) or `"p"` form.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Multiplies a rational row by the positive lcm of its denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Determinant of a square integer matrix by Bareiss elimination. Consumes
/// its argument as scratch space.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub fn int_det_sign(rows: &[&[BigInt]]) -> Sign {
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    Sign::of(&bareiss_det(m))
}

/// Rank of an integer matrix (fraction-free elimination).
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    if m == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pr = &top[rank];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &pr[c] - &f * &pr[j];
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Integer normal `h` of the hyperplane through `rows` (k rows of length
/// k+1): `h · x = det[rows; x]` for every `x`.
pub fn cofactor_normal(rows: &[&[BigInt]]) -> Vec<BigInt> {
    let k = rows.len();
    let width = k + 1;
    (0..width)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = bareiss_det(minor);
            if (k + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_squared(a: &[Rational]) -> Rational {
    dot(a, a)
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix dimensions must be at least 1".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        Matrix::new(n, n, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                data.push(
                    (0..self.cols)
                        .map(|k| self.get(r, k) * other.get(k, c))
                        .sum(),
                );
            }
        }
        Matrix::new(self.rows, other.cols, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut scale = BigInt::one();
        let mut int_rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            int_rows.push(
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect::<Vec<_>>(),
            );
            scale *= lcm;
        }
        Ok(Rational::new(bareiss_det(int_rows), scale))
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in 0..self.cols {
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.data[i * self.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }
}

pub fn det(m: &Matrix) -> Result<Rational> {
    m.det()
}

fn check_points(points: &[&[Rational]], count: usize) -> Result<usize> {
    let d = points.first().map_or(0, |p| p.len());
    if points.len() != count {
        return Err(Error::Dimension(format!(
            "expected {count} points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::Dimension("points have different dimensions".into()));
    }
    Ok(d)
}

/// Integer row `(p, 1)` up to a positive factor.
pub fn homogeneous_int_row(p: &[Rational]) -> Vec<BigInt> {
    let mut row = p.to_vec();
    row.push(Rational::one());
    integer_row(&row)
}

/// Integer row `(p, |p|^2, 1)` up to a positive factor.
pub fn paraboloid_int_row(p: &[Rational]) -> Vec<BigInt> {
    let mut row = p.to_vec();
    row.push(norm_squared(p));
    row.push(Rational::one());
    integer_row(&row)
}

/// Sign of the determinant whose i-th row is `(p_i, 1)`; takes `d+1` points
/// of `R^d`.
pub fn orientation(points: &[&[Rational]]) -> Result<Sign> {
    let d = points.first().map_or(0, |p| p.len());
    check_points(points, d + 1)?;
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| homogeneous_int_row(p)).collect();
    Ok(Sign::of(&bareiss_det(rows)))
}

/// Position of the last of `d+2` points relative to the circumsphere of the
/// first `d+1`: `+` outside, `0` on, `-` inside.
pub fn in_sphere(points: &[&[Rational]]) -> Result<Sign> {
    let d = points.first().map_or(0, |p| p.len());
    check_points(points, d + 2)?;
    let orient = orientation(&points[..d + 1])?;
    if orient.is_zero() {
        return Err(Error::DegenerateSphere(d + 1));
    }
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| paraboloid_int_row(p)).collect();
    let lifted = Sign::of(&bareiss_det(rows));
    // For a far-away query the lifted determinant behaves like -|q|^2 * orient.
    Ok(-(lifted * orient))
}

/// [`in_sphere`] on precomputed [`paraboloid_int_row`]s, with the orientation
/// of the first `d+1` supplied by the caller.
pub(crate) fn in_sphere_rows(rows: &[&[BigInt]], orient: Sign) -> Sign {
    -(int_det_sign(rows) * orient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
    }

    fn refs(v: &[Vec<Rational>]) -> Vec<&[Rational]> {
        v.iter().map(Vec::as_slice).collect()
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(3).unwrap().det().unwrap(), int(1));
        let m = Matrix::from_i64(&[&[0, 1], &[1, 1]]).unwrap();
        assert_eq!(m.det().unwrap(), int(-1));
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(2, 5), int(7)]]).unwrap();
        assert_eq!(m.det().unwrap(), rat(7, 2) - rat(2, 15));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = Matrix::from_i64(&[&[0, 1, 2], &[1, 1, 1]]).unwrap();
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn orientation_examples() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(orientation(&refs(&p)).unwrap(), Sign::Positive);
        let p = pts(&[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(orientation(&refs(&p)).unwrap(), Sign::Zero);
        let p = pts(&[&[3, 7], &[1, 0], &[3, 7]]);
        assert_eq!(orientation(&refs(&p)).unwrap(), Sign::Zero);
        let p = pts(&[&[0, 0], &[1, 0]]);
        assert!(orientation(&refs(&p)).is_err());
    }

    #[test]
    fn in_sphere_examples() {
        let tri = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let mut q = tri.clone();
        q.push(vec![int(1), int(1)]);
        assert_eq!(in_sphere(&refs(&q)).unwrap(), Sign::Zero);
        q[3] = vec![int(2), int(0)];
        assert_eq!(in_sphere(&refs(&q)).unwrap(), Sign::Positive);
        q[3] = vec![rat(1, 2), rat(1, 2)];
        assert_eq!(in_sphere(&refs(&q)).unwrap(), Sign::Negative);
        // Order of the first three does not matter.
        let mut r = vec![tri[1].clone(), tri[0].clone(), tri[2].clone()];
        r.push(vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(in_sphere(&refs(&r)).unwrap(), Sign::Negative);
    }

    #[test]
    fn in_sphere_degenerate() {
        let q = pts(&[&[0, 0], &[1, 1], &[2, 2], &[5, 0]]);
        assert!(matches!(in_sphere(&refs(&q)), Err(Error::DegenerateSphere(3))));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn null_space_is_orthogonal() {
        let m = Matrix::from_i64(&[&[0, 1, 2, 3], &[1, 1, 1, 1]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in 0..2 {
                assert!(dot(m.row(r), v).is_zero());
            }
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn cofactor_normal_matches_det() {
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 2.into(), 1.into()],
            vec![3.into(), (-1).into(), 1.into()],
        ];
        let h = cofactor_normal(&[&rows[0], &rows[1]]);
        let x: Vec<BigInt> = vec![5.into(), 7.into(), 1.into()];
        let full = bareiss_det(vec![rows[0].clone(), rows[1].clone(), x.clone()]);
        assert_eq!(int_dot(&h, &x), full);
    }
}
