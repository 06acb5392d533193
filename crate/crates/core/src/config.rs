//! Labeled point and vector configurations.
//!
//! Element `i` of a configuration (0-based) carries the label `i + 1` in every
//! serialized format.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{homogeneous_int_row, integer_row, int_rank, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::Dimension(format!(
                "point {} has {} coordinates, expected {dim}",
                i + 1,
                p.len()
            )));
        }
        Ok(PointConfiguration { dim, points })
    }

    /// Infers the dimension from the first point.
    pub fn from_points(points: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        Self::new(dim, points)
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::from_points(
            points
                .iter()
                .map(|p| p.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, index: usize) -> Result<&[Rational]> {
        self.points
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownLabel {
                label: index.saturating_add(1),
                n: self.len(),
            })
    }

    pub fn into_points(self) -> Vec<Vec<Rational>> {
        self.points
    }

    pub fn homogenize(&self) -> VectorConfiguration {
        VectorConfiguration {
            rank: self.dim + 1,
            vectors: self
                .points
                .iter()
                .map(|p| {
                    let mut v = p.clone();
                    v.push(Rational::one());
                    v
                })
                .collect(),
        }
    }

    /// Rows `(p_i, 1)` scaled to integers.
    pub fn homogeneous_int_rows(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(|p| homogeneous_int_row(p)).collect()
    }

    /// Dimension of the affine hull (`-1` is reported as 0 for empty input).
    pub fn affine_rank(&self) -> usize {
        int_rank(&self.homogeneous_int_rows()).saturating_sub(1)
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.is_empty() && self.affine_rank() == self.dim
    }

    pub fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::NotFullDimensional {
                rank: self.affine_rank(),
                dim: self.dim,
            })
        }
    }

    pub fn translate(&self, offset: &[Rational]) -> Result<Self> {
        if offset.len() != self.dim {
            return Err(Error::Dimension("translation vector has wrong length".into()));
        }
        Ok(PointConfiguration {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().zip(offset).map(|(x, o)| x + o).collect())
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PointConfiguration {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|x| x * factor).collect())
                .collect(),
        }
    }

    /// Appends `extra` zero coordinates to every point.
    pub fn embed(&self, extra: usize) -> Self {
        PointConfiguration {
            dim: self.dim + extra,
            points: self
                .points
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.extend(std::iter::repeat(Rational::zero()).take(extra));
                    q
                })
                .collect(),
        }
    }

    /// Removes the element at `index`; later elements shift down by one.
    pub fn remove(&self, index: usize) -> Result<Self> {
        self.point(index)?;
        let mut points = self.points.clone();
        points.remove(index);
        Ok(PointConfiguration {
            dim: self.dim,
            points,
        })
    }

    /// New configuration whose element `k` is the old element `order[k]`.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        let points = order
            .iter()
            .map(|&i| self.point(i).map(<[Rational]>::to_vec))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointConfiguration {
            dim: self.dim,
            points,
        })
    }

    pub fn push(&mut self, p: Vec<Rational>) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::Dimension("pushed point has wrong length".into()));
        }
        self.points.push(p);
        Ok(())
    }

    pub fn has_duplicates(&self) -> bool {
        let mut sorted: Vec<&Vec<Rational>> = self.points.iter().collect();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    rank: usize,
    vectors: Vec<Vec<Rational>>,
}

impl VectorConfiguration {
    pub fn new(rank: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != rank) {
            return Err(Error::Dimension(format!(
                "vector {} has {} coordinates, expected {rank}",
                i + 1,
                v.len()
            )));
        }
        Ok(VectorConfiguration { rank, vectors })
    }

    /// Length of every vector (the ambient rank `r`).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn int_rows(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| integer_row(v)).collect()
    }

    pub fn matrix_rank(&self) -> usize {
        int_rank(&self.int_rows())
    }

    /// Divides each vector by its last coordinate. Fails on a zero last
    /// coordinate; a negative one flips the element.
    pub fn dehomogenize(&self) -> Result<PointConfiguration> {
        if self.rank == 0 {
            return Err(Error::Dimension("cannot dehomogenize rank-0 vectors".into()));
        }
        let points = self
            .vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let w = &v[self.rank - 1];
                if w.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "vector {} lies at infinity",
                        i + 1
                    )));
                }
                Ok(v[..self.rank - 1].iter().map(|x| x / w).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(self.rank - 1, points)
    }
}

pub fn homogenize(a: &PointConfiguration) -> VectorConfiguration {
    a.homogenize()
}
