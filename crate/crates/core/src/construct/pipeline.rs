//! The inscribed neighborly pipeline and the stacked Delaunay instance.
//!
//! From `n` points in general position in `R^{n−4}`: search a neighborly
//! configuration `A₂` (2n points in `R^{2n−4}`), take a Delaunay
//! lexicographic lifting `Â₂`, and map it onto the sphere with the inverse
//! stereographic projection, adding the north pole. The result is a positive
//! lexicographic lifting of `Â₂`, inscribed and neighborly.

use crate::config::{PointConfiguration, VectorConfiguration};
use crate::delaunay::{delaunay_subdivision_strict, SubdivisionComplex};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::matroid::{chirotope, chirotope_equal, point_chirotope};
use crate::polytope::{facets, is_neighborly, stack_facet};
use crate::report::Report;
use crate::sphere::{is_inscribed, north_pole, stereo_inverse, stereo_project, InscribedConfiguration};

use super::kortenkamp::{kortenkamp_lift, KortenkampResult};
use super::lifting::{contract, lex_lift, side_table, LiftMode, LiftingCertificate, SignVector};

/// Seeds, budgets and certificates of every stage.
#[derive(Clone, Debug)]
pub struct Provenance {
    pub seed: u64,
    pub budget: u64,
    pub kortenkamp: Option<KortenkampResult>,
    pub delaunay_lift: LiftingCertificate,
}

#[derive(Clone, Debug)]
pub struct NeighborlyOutput {
    pub inscribed: InscribedConfiguration,
    pub a2: PointConfiguration,
    /// The Delaunay lexicographic lifting of `a2`.
    pub lifted: PointConfiguration,
    pub provenance: Provenance,
}

/// `σ⁻¹(points) ∪ {N}` with the pole marked.
fn inscribe_with_pole(a: &PointConfiguration) -> Result<InscribedConfiguration> {
    let mut base = stereo_inverse(a).into_base();
    base.push(north_pole(a.dim() + 1))?;
    let pole = base.len() - 1;
    InscribedConfiguration::new(base)?.with_pole(pole)
}

pub fn neighborly_pipeline(a: &PointConfiguration, seed: u64, budget: u64) -> Result<NeighborlyOutput> {
    let k = kortenkamp_lift(a, budget, seed).map_err(|e| e.at_stage("kortenkamp"))?;
    let mut out = neighborly_from(&k.configuration, seed, budget)?;
    out.provenance.kortenkamp = Some(k);
    Ok(out)
}

/// The pipeline after the search, starting from a neighborly `a2`.
pub fn neighborly_from(a2: &PointConfiguration, seed: u64, budget: u64) -> Result<NeighborlyOutput> {
    let s = SignVector::positive(a2.len() - a2.dim());
    let (lifted, cert) =
        lex_lift(a2, &s, LiftMode::Delaunay).map_err(|e| e.at_stage("delaunay-lift"))?;
    let inscribed = inscribe_with_pole(&lifted).map_err(|e| e.at_stage("inscribe"))?;
    Ok(NeighborlyOutput {
        inscribed,
        a2: a2.clone(),
        lifted,
        provenance: Provenance {
            seed,
            budget,
            kortenkamp: None,
            delaunay_lift: cert,
        },
    })
}

/// Projects `b` stereographically from its last point and homogenizes with
/// positive weights: `(λ_i σ(b_i), λ_i)`. Weights default to 1.
pub fn phi(b: &InscribedConfiguration, lambda: Option<&[Rational]>) -> Result<VectorConfiguration> {
    if b.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    let projected = stereo_project(b, b.len() - 1)?;
    let ones;
    let lambda = match lambda {
        Some(l) => l,
        None => {
            ones = vec![Rational::from_integer(1.into()); projected.len()];
            &ones
        }
    };
    if lambda.len() != projected.len() || lambda.iter().any(|l| l <= &Rational::from_integer(0.into())) {
        return Err(Error::Precondition(format!(
            "need {} positive weights",
            projected.len()
        )));
    }
    let vectors = projected
        .points()
        .iter()
        .zip(lambda)
        .map(|(p, l)| p.iter().map(|x| x * l).chain([l.clone()]).collect())
        .collect();
    VectorConfiguration::new(projected.dim() + 1, vectors)
}

/// Orthogonal projection away from the last vector (the lifting apex).
pub fn psi(v: &VectorConfiguration) -> Result<VectorConfiguration> {
    if v.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    contract(v, v.len() - 1, v.rank())
}

/// Size, sphere, neighborliness, positive-lift sign table, and the `φ`/`ψ`
/// round trip for a pipeline output.
pub fn verify_neighborly_output(out: &NeighborlyOutput) -> Report {
    let mut report = Report::new();
    let b = out.inscribed.base();
    let n = out.a2.len() / 2;
    report.check(
        "size",
        b.len() == 2 * n + 2 && b.dim() == 2 * n - 2,
        format!("{} points in R^{}", b.len(), b.dim()),
    );
    report.check("inscribed", is_inscribed(b), "all points on the unit sphere");
    match is_neighborly(b) {
        Ok(ok) => report.check("neighborly", ok, format!("{}-neighborly", b.dim() / 2)),
        Err(e) => report.check("neighborly", false, e.to_string()),
    };
    let signs = SignVector::positive(b.len() - 1 - (b.dim() - 1));
    match side_table(b, b.dim() - 1, signs.signs()) {
        Ok(count) => report.check("positive-lift", true, format!("{count} sidedness conditions")),
        Err(e) => report.check("positive-lift", false, e),
    };
    let round_trip = (|| -> Result<(bool, bool)> {
        let v = phi(&out.inscribed, None)?;
        let lifted_ok = chirotope_equal(&chirotope(&v)?, &point_chirotope(&out.lifted)?);
        let base_ok = chirotope_equal(&chirotope(&psi(&v)?)?, &point_chirotope(&out.a2)?);
        Ok((lifted_ok, base_ok))
    })();
    match round_trip {
        Ok((l, p)) => {
            report.check("phi", l, "stereographic vectors realize the Delaunay lifting");
            report.check("psi", p, "projection away from the apex realizes the base");
        }
        Err(e) => {
            report.check("phi", false, e.to_string());
        }
    }
    report
}

/// Point count and dimension of the Delaunay instance built from `n` points.
pub fn instance_sizes(n: usize) -> (usize, usize) {
    (2 * n + 2, 2 * n - 3)
}

#[derive(Clone, Debug)]
pub struct DelaunayInstance {
    /// The Delaunay lexicographic lifting: `2n+2` points in `R^{2n−3}`.
    pub configuration: PointConfiguration,
    pub subdivision: SubdivisionComplex,
    /// `σ⁻¹(configuration) ∪ {N}`.
    pub inscribed: InscribedConfiguration,
    /// Index of the auxiliary point `a₀`.
    pub auxiliary: usize,
    /// The simplex stacked by `a₀`, as indices into `configuration`.
    pub stacked_simplex: Vec<usize>,
    pub provenance: Provenance,
}

pub fn delaunay_instance(a: &PointConfiguration, seed: u64, budget: u64) -> Result<DelaunayInstance> {
    let k = kortenkamp_lift(a, budget, seed).map_err(|e| e.at_stage("kortenkamp"))?;
    let mut out = delaunay_instance_from(&k.configuration, seed, budget)?;
    out.provenance.kortenkamp = Some(k);
    Ok(out)
}

/// Inserts `a₀`, the barycenter of the first `m+1` points of `a2 ⊂ R^m`,
/// right after them, and takes a positive Delaunay lexicographic lifting.
pub fn delaunay_instance_from(a2: &PointConfiguration, seed: u64, budget: u64) -> Result<DelaunayInstance> {
    let m = a2.dim();
    if a2.len() < m + 2 {
        return Err(Error::Precondition(format!("need at least {} points", m + 2)));
    }
    let count = Rational::from_integer((m + 1).into());
    let a0: Vec<Rational> = (0..m)
        .map(|c| a2.points()[..=m].iter().map(|p| &p[c]).sum::<Rational>() / &count)
        .collect();
    let mut points: Vec<Vec<Rational>> = a2.points()[..=m].to_vec();
    points.push(a0);
    points.extend_from_slice(&a2.points()[m + 1..]);
    let augmented = PointConfiguration::new(m, points).map_err(|e| e.at_stage("augment"))?;

    let s = SignVector::positive(augmented.len() - m);
    let (lifted, cert) =
        lex_lift(&augmented, &s, LiftMode::Delaunay).map_err(|e| e.at_stage("delaunay-lift"))?;
    let subdivision = delaunay_subdivision_strict(&lifted).map_err(|e| e.at_stage("delaunay"))?;
    let inscribed = inscribe_with_pole(&lifted).map_err(|e| e.at_stage("inscribe"))?;
    let auxiliary = m + 1;
    let mut stacked_simplex: Vec<usize> = (0..=m).collect();
    stacked_simplex.push(m + 2);
    Ok(DelaunayInstance {
        configuration: lifted,
        subdivision,
        inscribed,
        auxiliary,
        stacked_simplex,
        provenance: Provenance {
            seed,
            budget,
            kortenkamp: None,
            delaunay_lift: cert,
        },
    })
}

/// Delaunay cells against the inscribed polytope's facets, the stellar
/// subdivision around `a₀`, and the stacked face lattice.
pub fn verify_delaunay_instance(inst: &DelaunayInstance) -> Report {
    let mut report = Report::new();
    let q = inst.inscribed.base();
    let pole = q.len() - 1;
    let lattice = match facets(q) {
        Ok(l) => l,
        Err(e) => {
            report.check("facets", false, e.to_string());
            return report;
        }
    };
    let mut away: Vec<Vec<usize>> = lattice
        .facets()
        .iter()
        .filter(|f| !f.contains(&pole))
        .cloned()
        .collect();
    away.sort();
    let cells = inst.subdivision.cells().to_vec();
    report.check(
        "cells",
        away == cells,
        format!("{} cells, {} facets avoiding the pole", cells.len(), away.len()),
    );
    let mut through: Vec<Vec<usize>> = lattice
        .facets()
        .iter()
        .filter(|f| f.contains(&pole))
        .map(|f| f.iter().copied().filter(|&i| i != pole).collect())
        .collect();
    through.sort();
    let hull = inst.subdivision.hull_facets().map(<[Vec<usize>]>::to_vec);
    report.check(
        "hull",
        hull.as_ref() == Some(&through),
        format!("{} facets through the pole", through.len()),
    );

    let stellar = inst.stacked_simplex.iter().all(|&v| {
        let mut cell: Vec<usize> = inst
            .stacked_simplex
            .iter()
            .copied()
            .filter(|&w| w != v)
            .chain([inst.auxiliary])
            .collect();
        cell.sort_unstable();
        cells.binary_search(&cell).is_ok()
    });
    report.check("stellar", stellar, "the simplex around a0 is stellarly subdivided");

    let stacked = (|| -> Result<bool> {
        let without = q.remove(inst.auxiliary)?;
        let base = facets(&without)?;
        let shift = |i: usize| if i > inst.auxiliary { i - 1 } else { i };
        let simplex: Vec<usize> = inst.stacked_simplex.iter().map(|&i| shift(i)).collect();
        let expected = stack_facet(&base, &simplex)?;
        let mut order: Vec<usize> = (0..q.len()).filter(|&i| i != inst.auxiliary).collect();
        order.push(inst.auxiliary);
        Ok(facets(&q.reorder(&order)?)? == expected)
    })();
    match stacked {
        Ok(ok) => report.check("stacked", ok, "inscribed polytope is stacked on the simplex"),
        Err(e) => report.check("stacked", false, e.to_string()),
    };
    report
}
