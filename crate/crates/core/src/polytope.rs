//! Facets, face lattices, convex position, neighborliness and stacking.
//!
//! Facet enumeration is brute force: every affinely independent `d`-subset
//! spans a hyperplane, all points on that hyperplane are merged into one
//! candidate, and the candidate is a facet iff every other point lies
//! strictly on one side.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::{cofactor_normal, int_dot, int_rank, Rational, Sign};
use crate::matroid::Chirotope;

/// A polytope's face lattice, stored by its facets (sorted index sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub fn new(n: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let set: BTreeSet<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        let facets: Vec<Vec<usize>> = set.into_iter().collect();
        for f in &facets {
            if let Some(&bad) = f.iter().find(|&&e| e >= n) {
                return Err(Error::UnknownLabel { label: bad.saturating_add(1), n });
            }
        }
        for (i, f) in facets.iter().enumerate() {
            for (j, g) in facets.iter().enumerate() {
                if i != j && is_subset(f, g) {
                    return Err(Error::Inconsistent(format!(
                        "facet {f:?} is contained in facet {g:?}"
                    )));
                }
            }
        }
        Ok(FaceLattice { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains_facet(&self, facet: &[usize]) -> bool {
        let mut f = facet.to_vec();
        f.sort_unstable();
        self.facets.binary_search(&f).is_ok()
    }

    /// Labels appearing in at least one facet.
    pub fn vertices(&self) -> Vec<usize> {
        self.facets
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Intersection of all facets containing `subset`; the full vertex set
    /// if no facet contains it.
    pub fn closure(&self, subset: &[usize]) -> Vec<usize> {
        let mut acc: Option<Vec<usize>> = None;
        for f in self.facets.iter().filter(|f| is_subset(subset, f)) {
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => intersect(&a, f),
            });
        }
        acc.unwrap_or_else(|| self.vertices())
    }

    pub fn is_face(&self, subset: &[usize]) -> bool {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        self.closure(&s) == s
    }

    /// Every face: all intersections of facets, plus the empty set and the
    /// full vertex set.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut faces: BTreeSet<Vec<usize>> = self.facets.iter().cloned().collect();
        let mut frontier: Vec<Vec<usize>> = self.facets.clone();
        while let Some(face) = frontier.pop() {
            for f in &self.facets {
                let g = intersect(&face, f);
                if faces.insert(g.clone()) {
                    frontier.push(g);
                }
            }
        }
        faces.insert(Vec::new());
        faces.insert(self.vertices());
        faces
    }

    /// Checks that every vertex lies in at least `d` facets.
    pub fn validate_dimension(&self, d: usize) -> Result<()> {
        for v in self.vertices() {
            let count = self.facets.iter().filter(|f| f.contains(&v)).count();
            if count < d {
                return Err(Error::Inconsistent(format!(
                    "vertex {} lies in {count} facets, fewer than {d}",
                    v + 1
                )));
            }
        }
        Ok(())
    }

    /// Maximal proper faces of `facet`.
    pub fn ridges_of(&self, facet: &[usize]) -> Vec<Vec<usize>> {
        let candidates: BTreeSet<Vec<usize>> = self
            .facets
            .iter()
            .filter(|g| g.as_slice() != facet)
            .map(|g| intersect(facet, g))
            .filter(|r| !r.is_empty())
            .collect();
        candidates
            .iter()
            .filter(|r| {
                !candidates
                    .iter()
                    .any(|s| s.len() > r.len() && is_subset(r, s))
            })
            .cloned()
            .collect()
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect()
}

/// A supporting hyperplane found by enumeration: the points on it and an
/// integer normal with `normal · (p, 1) >= 0` on every point.
#[derive(Clone, Debug)]
pub(crate) struct FacetPlane {
    pub members: Vec<usize>,
    pub normal: Vec<BigInt>,
}

/// Enumerates facet hyperplanes of the configuration whose homogeneous
/// integer rows are `rows` (each of length `d+1`).
pub(crate) fn facet_planes(rows: &[Vec<BigInt>], d: usize) -> Vec<FacetPlane> {
    let n = rows.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for subset in (0..n).combinations(d) {
        // A merged hyperplane already handled covers this subset.
        if out
            .iter()
            .any(|f: &FacetPlane| f.members.len() > d && is_subset(&subset, &f.members))
        {
            continue;
        }
        let sub_rows: Vec<&[BigInt]> = subset.iter().map(|&i| rows[i].as_slice()).collect();
        let mut normal = cofactor_normal(&sub_rows);
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let signs: Vec<Sign> = rows.iter().map(|r| Sign::of(&int_dot(&normal, r))).collect();
        let members: Vec<usize> = (0..n).filter(|&j| signs[j].is_zero()).collect();
        if !seen.insert(members.clone()) {
            continue;
        }
        let mut side = Sign::Zero;
        let mut supporting = true;
        for &s in &signs {
            if s.is_zero() {
                continue;
            }
            if side.is_zero() {
                side = s;
            } else if s != side {
                supporting = false;
                break;
            }
        }
        if !supporting || side.is_zero() {
            continue;
        }
        if side == Sign::Negative {
            for x in &mut normal {
                *x = -&*x;
            }
        }
        out.push(FacetPlane { members, normal });
    }
    out
}

/// Facets of `conv(a)` as index sets.
pub fn facets(a: &PointConfiguration) -> Result<FaceLattice> {
    a.require_full_dimensional()?;
    let planes = facet_planes(&a.homogeneous_int_rows(), a.dim());
    FaceLattice::new(a.len(), planes.into_iter().map(|p| p.members))
}

/// Face lattice read off the chirotope of an acyclic vector configuration:
/// facets are the zero sets of nonnegative cocircuits.
pub fn face_lattice_from_chirotope(c: &Chirotope) -> Result<FaceLattice> {
    if let Some(circuit) = c.positive_circuit() {
        return Err(Error::NotAcyclic(circuit));
    }
    let r = c.rank();
    let n = c.ground_size();
    if r == 0 {
        return Err(Error::NotFullRank);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut facets = Vec::new();
    for subset in (0..n).combinations(r - 1) {
        let mut tuple = subset.clone();
        tuple.push(0);
        let mut cocircuit = Vec::with_capacity(n);
        for e in 0..n {
            *tuple.last_mut().unwrap() = e;
            cocircuit.push(c.sign(&tuple)?);
        }
        if cocircuit.iter().all(|s| s.is_zero()) {
            continue;
        }
        let zero_set: Vec<usize> = (0..n).filter(|&e| cocircuit[e].is_zero()).collect();
        if !seen.insert(zero_set.clone()) {
            continue;
        }
        let mut nonzero = cocircuit.iter().filter(|s| !s.is_zero());
        let first = *nonzero.next().unwrap();
        if nonzero.all(|&s| s == first) {
            facets.push(zero_set);
        }
    }
    if facets.is_empty() {
        return Err(Error::Inconsistent("no facet found".into()));
    }
    FaceLattice::new(n, facets)
}

pub fn is_convex_position(a: &PointConfiguration) -> Result<bool> {
    let lattice = facets(a)?;
    Ok(lattice.vertices().len() == a.len())
}

/// Every `k`-subset is a face; false (not an error) when some point is not a
/// vertex and `k >= 1`.
pub fn is_k_neighborly(a: &PointConfiguration, k: usize) -> Result<bool> {
    let lattice = facets(a)?;
    Ok(lattice_is_k_neighborly(&lattice, a.len(), k))
}

pub(crate) fn lattice_is_k_neighborly(lattice: &FaceLattice, n: usize, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if lattice.vertices().len() != n {
        return false;
    }
    (0..n).combinations(k).all(|s| lattice.is_face(&s))
}

/// Every `⌊d/2⌋`-subset of vertices is a face.
pub fn is_neighborly(a: &PointConfiguration) -> Result<bool> {
    let lattice = facets(a)?;
    if lattice.vertices().len() != a.len() {
        return Err(Error::NotConvexPosition);
    }
    Ok(lattice_is_k_neighborly(&lattice, a.len(), a.dim() / 2))
}

pub fn lattice_equal(f1: &FaceLattice, f2: &FaceLattice) -> bool {
    f1 == f2
}

/// A face lattice with one facet replaced by its stellar subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedLattice {
    pub base: FaceLattice,
    pub stacked_facet: Vec<usize>,
    pub new_vertex: usize,
}

impl StackedLattice {
    pub fn new(base: FaceLattice, facet: &[usize]) -> Result<Self> {
        let mut f = facet.to_vec();
        f.sort_unstable();
        if !base.contains_facet(&f) {
            return Err(Error::NotAFacet(f.iter().map(|x| x + 1).collect()));
        }
        let new_vertex = base.n();
        Ok(StackedLattice {
            base,
            stacked_facet: f,
            new_vertex,
        })
    }

    pub fn lattice(&self) -> FaceLattice {
        let mut facets: Vec<Vec<usize>> = self
            .base
            .facets()
            .iter()
            .filter(|g| **g != self.stacked_facet)
            .cloned()
            .collect();
        for mut ridge in self.base.ridges_of(&self.stacked_facet) {
            ridge.push(self.new_vertex);
            facets.push(ridge);
        }
        FaceLattice::new(self.base.n() + 1, facets).expect("stellar subdivision is a valid lattice")
    }
}

/// Replaces `facet` by the cone from a new vertex (index `n`) over its ridges.
pub fn stack_facet(f: &FaceLattice, facet: &[usize]) -> Result<FaceLattice> {
    Ok(StackedLattice::new(f.clone(), facet)?.lattice())
}

/// Pulling triangulation of `conv(a)`: recursively cone the smallest vertex
/// of each face over the faces' facets that miss it.
pub fn pulling_triangulation(a: &PointConfiguration) -> Result<Vec<Vec<usize>>> {
    let lattice = facets(a)?;
    let rows = a.homogeneous_int_rows();
    let mut out = Vec::new();
    pull(&lattice.vertices(), a.dim(), lattice.facets(), &rows, &mut out);
    Ok(out)
}

fn pull(
    face: &[usize],
    dim: usize,
    facets: &[Vec<usize>],
    rows: &[Vec<BigInt>],
    out: &mut Vec<Vec<usize>>,
) {
    if face.len() == dim + 1 {
        out.push(face.to_vec());
        return;
    }
    let apex = face[0];
    let affine_dim = |s: &[usize]| {
        let r: Vec<Vec<BigInt>> = s.iter().map(|&i| rows[i].clone()).collect();
        int_rank(&r).saturating_sub(1)
    };
    let candidates: BTreeSet<Vec<usize>> = facets
        .iter()
        .map(|g| intersect(face, g))
        .filter(|g| g.len() < face.len() && g.len() >= dim && affine_dim(g) + 1 == dim)
        .collect();
    for sub in candidates.iter().filter(|g| !g.contains(&apex)) {
        let mut inner = Vec::new();
        pull(sub, dim - 1, facets, rows, &mut inner);
        for mut simplex in inner {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
}

/// `|det[(p_i, 1)]| / d!` for `d+1` points.
pub fn simplex_volume(points: &[&[Rational]]) -> Result<Rational> {
    let d = points.first().map_or(0, |p| p.len());
    if points.len() != d + 1 {
        return Err(Error::Dimension("simplex needs d+1 points".into()));
    }
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let mut r = p.to_vec();
            r.push(Rational::one());
            r
        })
        .collect();
    let det = crate::exact::Matrix::from_rows(rows)?.det()?;
    let fact: BigInt = (1..=d).map(BigInt::from).product();
    Ok(det.abs() / Rational::from_integer(fact))
}

/// Exact volume of `conv(a)`.
pub fn volume(a: &PointConfiguration) -> Result<Rational> {
    let mut total = Rational::zero();
    for s in pulling_triangulation(a)? {
        let pts: Vec<&[Rational]> = s.iter().map(|&i| a.points()[i].as_slice()).collect();
        total += simplex_volume(&pts)?;
    }
    Ok(total)
}
