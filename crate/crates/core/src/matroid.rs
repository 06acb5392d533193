//! Chirotopes of vector configurations and Gale duality.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::{PointConfiguration, VectorConfiguration};
use crate::error::{Error, Result};
use crate::exact::{bareiss_det, Matrix, Sign};

/// Binomial coefficients `C(n, k)` for `n <= max_n`, `k <= max_k`.
#[derive(Clone, Debug)]
struct Binomials {
    max_k: usize,
    table: Vec<usize>,
}

impl Binomials {
    fn new(max_n: usize, max_k: usize) -> Self {
        let w = max_k + 1;
        let mut table = vec![0usize; (max_n + 1) * w];
        for n in 0..=max_n {
            table[n * w] = 1;
            for k in 1..=max_k.min(n) {
                table[n * w + k] = table[(n - 1) * w + k - 1]
                    + if k < n { table[(n - 1) * w + k] } else { 0 };
            }
        }
        Binomials { max_k, table }
    }

    fn get(&self, n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            self.table[n * (self.max_k + 1) + k]
        }
    }
}

/// Sign map on sorted `r`-tuples of `0..n`.
#[derive(Clone, Debug)]
pub struct Chirotope {
    rank: usize,
    n: usize,
    signs: Vec<Sign>,
    binomials: Binomials,
}

impl PartialEq for Chirotope {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.n == other.n && self.signs == other.signs
    }
}

impl Eq for Chirotope {}

impl Chirotope {
    /// Builds a chirotope from sign values listed for every sorted basis in
    /// lexicographic order.
    pub fn from_lex_signs(rank: usize, n: usize, lex_signs: Vec<Sign>) -> Result<Self> {
        let binomials = Binomials::new(n, rank);
        let total = binomials.get(n, rank);
        if lex_signs.len() != total {
            return Err(Error::Inconsistent(format!(
                "expected {total} basis signs, got {}",
                lex_signs.len()
            )));
        }
        let mut signs = vec![Sign::Zero; total];
        for (tuple, s) in (0..n).combinations(rank).zip(lex_signs) {
            signs[colex_rank(&binomials, &tuple)] = s;
        }
        let c = Chirotope {
            rank,
            n,
            signs,
            binomials,
        };
        if c.signs.iter().all(|s| s.is_zero()) {
            return Err(Error::NotFullRank);
        }
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Sign of a sorted, repetition-free tuple.
    pub fn sorted_sign(&self, tuple: &[usize]) -> Sign {
        self.signs[colex_rank(&self.binomials, tuple)]
    }

    /// Sign of an arbitrary tuple, applying the alternating rule.
    pub fn sign(&self, tuple: &[usize]) -> Result<Sign> {
        if tuple.len() != self.rank {
            return Err(Error::Dimension(format!(
                "tuple of length {} for rank {}",
                tuple.len(),
                self.rank
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&e| e >= self.n) {
            return Err(Error::UnknownLabel {
                label: bad.saturating_add(1),
                n: self.n,
            });
        }
        let mut t = tuple.to_vec();
        let mut parity = false;
        // Insertion sort, counting transpositions.
        for i in 1..t.len() {
            let mut j = i;
            while j > 0 && t[j - 1] > t[j] {
                t.swap(j - 1, j);
                parity = !parity;
                j -= 1;
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Ok(Sign::Zero);
        }
        let s = self.sorted_sign(&t);
        Ok(if parity { -s } else { s })
    }

    /// All sorted bases with their signs, in lexicographic order.
    pub fn bases(&self) -> impl Iterator<Item = (Vec<usize>, Sign)> + '_ {
        (0..self.n)
            .combinations(self.rank)
            .map(move |t| {
                let s = self.sorted_sign(&t);
                (t, s)
            })
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            signs: self.signs.iter().map(|&s| -s).collect(),
            ..self.clone()
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.signs.iter().all(|s| !s.is_zero())
    }

    /// Signed dependence of an `(r+1)`-subset from Cramer's rule:
    /// component `i` is `(-1)^i χ(subset without i)`.
    fn cramer_vector(&self, subset: &[usize]) -> Vec<Sign> {
        (0..subset.len())
            .map(|i| {
                let rest: Vec<usize> = subset
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .collect();
                let s = self.sorted_sign(&rest);
                if i % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .collect()
    }

    /// A positive circuit, if one exists. Every circuit extends to an
    /// `(r+1)`-subset of rank `r` whose dependence space is one-dimensional,
    /// so scanning Cramer vectors of all such subsets is exhaustive.
    pub fn positive_circuit(&self) -> Option<Vec<usize>> {
        (0..self.n).combinations(self.rank + 1).find_map(|subset| {
            let v = self.cramer_vector(&subset);
            let nonzero: Vec<Sign> = v.iter().copied().filter(|s| !s.is_zero()).collect();
            let first = *nonzero.first()?;
            nonzero.iter().all(|&s| s == first).then(|| {
                subset
                    .iter()
                    .zip(&v)
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(&e, _)| e)
                    .collect()
            })
        })
    }

    pub fn is_acyclic(&self) -> bool {
        self.positive_circuit().is_none()
    }
}

fn colex_rank(b: &Binomials, sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &c)| b.get(c, i + 1))
        .sum()
}

/// Chirotope of a vector configuration; bases are ordered by label.
pub fn chirotope(v: &VectorConfiguration) -> Result<Chirotope> {
    let r = v.rank();
    let n = v.len();
    if n < r {
        return Err(Error::NotFullRank);
    }
    let rows = v.int_rows();
    let signs: Vec<Sign> = (0..n)
        .combinations(r)
        .map(|t| {
            let m: Vec<Vec<BigInt>> = t.iter().map(|&i| rows[i].clone()).collect();
            Sign::of(&bareiss_det(m))
        })
        .collect();
    Chirotope::from_lex_signs(r, n, signs)
}

/// Chirotope of the homogenization of a point configuration.
pub fn point_chirotope(a: &PointConfiguration) -> Result<Chirotope> {
    chirotope(&a.homogenize())
}

pub fn is_uniform(c: &Chirotope) -> bool {
    c.is_uniform()
}

/// Point configurations are acyclic: their homogenizing coordinates are all
/// 1, and the chirotope carries no positive circuit.
pub fn is_acyclic_configuration(a: &PointConfiguration) -> bool {
    let v = a.homogenize();
    let unit_last = v
        .vectors()
        .iter()
        .all(|x| x.last().is_some_and(|w| *w == num_traits::One::one()));
    unit_last
        && match chirotope(&v) {
            Ok(c) => c.is_acyclic(),
            // Rank-deficient configurations have no chirotope in this rank;
            // acyclicity still follows from the homogenizing coordinate.
            Err(_) => true,
        }
}

/// Labeled equality, allowing a global sign flip.
pub fn chirotope_equal(c1: &Chirotope, c2: &Chirotope) -> bool {
    if c1.rank != c2.rank || c1.n != c2.n {
        return false;
    }
    c1.signs == c2.signs || c1.signs.iter().zip(&c2.signs).all(|(&a, &b)| a == -b)
}

/// A configuration whose label-ordered matrix spans the null space of the
/// input's label-ordered (transposed) matrix.
pub fn gale_dual(v: &VectorConfiguration) -> Result<VectorConfiguration> {
    let n = v.len();
    let r = v.rank();
    if n < r || v.matrix_rank() < r {
        return Err(Error::NotFullRank);
    }
    if n == r {
        return VectorConfiguration::new(0, vec![Vec::new(); n]);
    }
    let m = Matrix::from_rows(v.vectors().to_vec())?.transpose();
    let basis = m.null_space();
    debug_assert_eq!(basis.len(), n - r);
    let vectors = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    VectorConfiguration::new(n - r, vectors)
}

/// Returns true if `dual^T · primal` vanishes.
pub fn is_orthogonal_pair(primal: &VectorConfiguration, dual: &VectorConfiguration) -> bool {
    primal.len() == dual.len()
        && (0..dual.rank()).all(|a| {
            (0..primal.rank()).all(|b| {
                primal
                    .vectors()
                    .iter()
                    .zip(dual.vectors())
                    .map(|(p, q)| &q[a] * &p[b])
                    .sum::<crate::exact::Rational>()
                    .is_zero()
            })
        })
}
