//! Search for a sequence of `d+4` lexicographic liftings that turns `d+4`
//! points of `R^d` into a neighborly configuration of `2d+8` points in
//! `R^{2d+4}`.
//!
//! A configuration with four more points than its dimension has a Gale dual
//! of rank 3, and a lexicographic lifting of the primal is a lexicographic
//! extension `[e1^σ1, e2^σ2, e3^σ3]` of the dual. The primal is
//! `k`-neighborly exactly when every open halfspace of the dual holds at
//! least `k+1` elements, and deleting one dual element lowers that count by
//! at most one. So after `j` of the `d+4` steps every halfspace must already
//! hold `j−1` elements. The final configuration has twice as many elements
//! as the input, and the search adds one twin per original element. It runs
//! on the rank-3 sign table, which is cheap; the chosen sequence is then
//! realized as primal liftings and the result checked with the facet-based
//! neighborliness test.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::Sign;
use crate::matroid::{chirotope, gale_dual, Chirotope};
use crate::polytope::is_neighborly;

use super::lifting::{lex_lift, LiftMode, LiftingCertificate, SignVector};

/// Counted in candidate extensions of the dual, about a microsecond each.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// One lifting: the label order it is taken in and its signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftStep {
    pub order: Vec<usize>,
    pub signs: SignVector,
}

#[derive(Clone, Debug)]
pub struct KortenkampResult {
    pub configuration: PointConfiguration,
    pub history: Vec<LiftStep>,
    pub certificates: Vec<LiftingCertificate>,
    pub evaluations: u64,
    pub seed: u64,
    pub budget: u64,
    /// `"lexicographic"` or `"random"`.
    pub phase: &'static str,
}

/// Lexicographic lifting in the label order `order`; the output keeps the
/// input labels and appends the apex.
pub fn lex_lift_ordered(
    a: &PointConfiguration,
    order: &[usize],
    s: &SignVector,
    mode: LiftMode,
) -> Result<(PointConfiguration, LiftingCertificate)> {
    let mut seen = vec![false; a.len()];
    if order.len() != a.len() || order.iter().any(|&i| i >= a.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::Precondition("order is not a permutation".into()));
    }
    let (lifted, cert) = lex_lift(&a.reorder(order)?, s, mode)?;
    let mut points = vec![Vec::new(); a.len() + 1];
    for (k, &i) in order.iter().enumerate() {
        points[i] = lifted.points()[k].clone();
    }
    points[a.len()] = lifted.points()[a.len()].clone();
    Ok((PointConfiguration::new(lifted.dim(), points)?, cert))
}

/// Fully alternating rank-3 sign table with room for `cap` elements.
#[derive(Clone)]
pub(crate) struct Rank3 {
    n: usize,
    cap: usize,
    t: Vec<i8>,
}

impl Rank3 {
    pub(crate) fn from_chirotope(c: &Chirotope, cap: usize) -> Self {
        assert_eq!(c.rank(), 3);
        let n = c.ground_size();
        let mut r = Rank3 {
            n,
            cap,
            t: vec![0; cap * cap * cap],
        };
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    r.set(x, y, z, c.sorted_sign(&[x, y, z]).to_i8());
                }
            }
        }
        r
    }

    fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.cap + y) * self.cap + z
    }

    fn get(&self, x: usize, y: usize, z: usize) -> i8 {
        self.t[self.idx(x, y, z)]
    }

    fn set(&mut self, x: usize, y: usize, z: usize, v: i8) {
        for (p, q, r, s) in [
            (x, y, z, v),
            (y, z, x, v),
            (z, x, y, v),
            (y, x, z, -v),
            (x, z, y, -v),
            (z, y, x, -v),
        ] {
            let i = self.idx(p, q, r);
            self.t[i] = s;
        }
    }

    /// Adds `w = [e1^σ1, e2^σ2, e3^σ3]`.
    pub(crate) fn extend(&self, e: [usize; 3], sigma: [i8; 3]) -> Rank3 {
        let mut out = self.clone();
        let w = self.n;
        out.n += 1;
        for x in 0..w {
            for y in x + 1..w {
                let v = (0..3)
                    .map(|k| sigma[k] * self.get(x, y, e[k]))
                    .find(|&v| v != 0)
                    .unwrap_or(0);
                out.set(x, y, w, v);
            }
        }
        out
    }

    /// Fewest elements in an open halfspace, over halfspaces bounded by the
    /// span of two elements.
    pub(crate) fn min_halfspace(&self) -> usize {
        let mut best = usize::MAX;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let (mut pos, mut neg) = (0, 0);
                for z in 0..self.n {
                    match self.get(x, y, z) {
                        1 => pos += 1,
                        -1 => neg += 1,
                        _ => {}
                    }
                }
                best = best.min(pos).min(neg);
            }
        }
        best
    }

    pub(crate) fn signs(&self) -> Vec<Sign> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                for z in y + 1..self.n {
                    out.push(match self.get(x, y, z) {
                        1 => Sign::Positive,
                        -1 => Sign::Negative,
                        _ => Sign::Zero,
                    });
                }
            }
        }
        out
    }
}

/// Dual signature of a primal step: the last three elements of the order,
/// last first, with negated signs.
fn dual_signature(step: &LiftStep) -> ([usize; 3], [i8; 3]) {
    let n = step.order.len();
    let s = step.signs.signs();
    let m = s.len();
    (
        [step.order[n - 1], step.order[n - 2], step.order[n - 3]],
        [-s[m - 1].to_i8(), -s[m - 2].to_i8(), -s[m - 3].to_i8()],
    )
}

/// The primal step realizing the dual extension `[e1^σ1, e2^σ2, e3^σ3]`.
fn primal_step(n: usize, e: [usize; 3], sigma: [i8; 3]) -> LiftStep {
    let mut order: Vec<usize> = (0..n).filter(|i| !e.contains(i)).collect();
    order.extend([e[2], e[1], e[0]]);
    let sign = |v: i8| if v > 0 { Sign::Negative } else { Sign::Positive };
    LiftStep {
        order,
        signs: SignVector::new(vec![Sign::Positive, sign(sigma[2]), sign(sigma[1]), sign(sigma[0])])
            .expect("nonzero signs"),
    }
}

type Path = Vec<([usize; 3], [i8; 3])>;

enum Outcome {
    Found(Path),
    Exhausted,
    OutOfBudget,
}

const SIGMAS: [[i8; 3]; 8] = {
    // Primal sign vectors (+, s2, s3, s4) in lexicographic order, `+` first,
    // as dual signatures (−s4, −s3, −s2).
    let mut out = [[0i8; 3]; 8];
    let mut bits = 0;
    while bits < 8 {
        let s2 = if bits & 4 == 0 { 1 } else { -1 };
        let s3 = if bits & 2 == 0 { 1 } else { -1 };
        let s4 = if bits & 1 == 0 { 1 } else { -1 };
        out[bits] = [-s4, -s3, -s2];
        bits += 1;
    }
    out
};

/// Each step adds a twin of one original element: `e1` runs through the
/// originals in `order`, and `e2`, `e3` are originals too, so a step is
/// fixed by the side of `±e1` the twin sits on.
struct Search {
    order: Vec<usize>,
    need: usize,
    budget: u64,
    evaluations: u64,
    /// Shuffles candidates instead of ranking them.
    rng: Option<ChaCha8Rng>,
}

impl Search {
    fn dfs(&mut self, dual: &Rank3, path: &mut Path) -> Outcome {
        let k = path.len();
        let n0 = self.order.len();
        if k == n0 {
            return Outcome::Found(path.clone());
        }
        let remaining = n0 - k - 1;
        let e1 = self.order[k];
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for e2 in (0..n0).filter(|&x| x != e1) {
            for e3 in (0..n0).filter(|&x| x != e1 && x != e2) {
                for sigma in SIGMAS {
                    if self.evaluations >= self.budget {
                        return Outcome::OutOfBudget;
                    }
                    self.evaluations += 1;
                    let next = dual.extend([e1, e2, e3], sigma);
                    let score = next.min_halfspace();
                    // A step raises a halfspace count by at most one.
                    if score + remaining < self.need || !seen.insert(next.t.clone()) {
                        continue;
                    }
                    level.push((score, [e1, e2, e3], sigma, next));
                }
            }
        }
        match &mut self.rng {
            Some(rng) => level.shuffle(rng),
            // Best minimum halfspace first; ties keep the lexicographic order.
            None => level.sort_by_key(|c| std::cmp::Reverse(c.0)),
        }
        for (_, e, sigma, next) in level {
            path.push((e, sigma));
            match self.dfs(&next, path) {
                Outcome::Exhausted => {
                    path.pop();
                }
                other => return other,
            }
        }
        Outcome::Exhausted
    }
}

/// Ranked depth-first search over dual signatures with half the budget,
/// then seeded restarts in shuffled order for the rest. The budget counts
/// candidate extensions.
pub fn kortenkamp_lift(a: &PointConfiguration, budget: u64, seed: u64) -> Result<KortenkampResult> {
    let d = a.dim();
    let n = a.len();
    if n != d + 4 {
        return Err(Error::Precondition(format!(
            "expected {} points in R^{d}, got {n}",
            d + 4
        )));
    }
    let dual = gale_dual(&a.homogenize())?;
    let c = chirotope(&dual)?;
    if !c.is_uniform() {
        return Err(Error::NotGeneralPosition);
    }
    let steps = n;
    let start = Rank3::from_chirotope(&c, 2 * n);
    let mut search = Search {
        order: (0..n).collect(),
        need: d + 3,
        budget: budget / 2,
        evaluations: 0,
        rng: None,
    };
    let (signatures, phase) = match search.dfs(&start, &mut Vec::new()) {
        Outcome::Found(p) => (p, "lexicographic"),
        Outcome::Exhausted => {
            return Err(Error::SearchFailure(format!(
                "all signatures exhausted after {} evaluations",
                search.evaluations
            )))
        }
        Outcome::OutOfBudget => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            while found.is_none() && search.evaluations < budget {
                let mut restart = ChaCha8Rng::seed_from_u64(rng.gen());
                search.order.shuffle(&mut restart);
                search.rng = Some(restart);
                // Each restart gets a quarter of what is left.
                search.budget = search.evaluations + (budget - search.evaluations).div_ceil(4);
                if let Outcome::Found(p) = search.dfs(&start, &mut Vec::new()) {
                    found = Some(p);
                }
            }
            match found {
                Some(p) => (p, "random"),
                None => {
                    return Err(Error::SearchFailure(format!(
                        "budget of {budget} evaluations exhausted (seed {seed})"
                    )))
                }
            }
        }
    };

    let mut cur = a.clone();
    let mut history = Vec::with_capacity(steps);
    let mut certificates = Vec::with_capacity(steps);
    for (e, sigma) in signatures {
        let step = primal_step(cur.len(), e, sigma);
        let (lifted, cert) = lex_lift_ordered(&cur, &step.order, &step.signs, LiftMode::Generic)?;
        cur = lifted;
        history.push(step);
        certificates.push(cert);
    }
    if !is_neighborly(&cur)? {
        return Err(Error::Inconsistent(
            "the sequence found on the dual is not neighborly in the primal".into(),
        ));
    }
    Ok(KortenkampResult {
        configuration: cur,
        history,
        certificates,
        evaluations: search.evaluations,
        seed,
        budget,
        phase,
    })
}

/// Re-applies a recorded history.
pub fn replay_history(a: &PointConfiguration, history: &[LiftStep]) -> Result<PointConfiguration> {
    let mut cur = a.clone();
    for step in history {
        cur = lex_lift_ordered(&cur, &step.order, &step.signs, LiftMode::Generic)?.0;
    }
    Ok(cur)
}

/// Whether the Gale dual of `lifted` is the lexicographic extension that
/// `step` induces on the Gale dual of `a` (up to a global sign).
pub fn dual_extension_matches(
    a: &PointConfiguration,
    step: &LiftStep,
    lifted: &PointConfiguration,
) -> Result<bool> {
    let base = chirotope(&gale_dual(&a.homogenize())?)?;
    let up = chirotope(&gale_dual(&lifted.homogenize())?)?;
    if base.rank() != 3 {
        return Err(Error::Precondition("dual rank must be 3".into()));
    }
    let (e, sigma) = dual_signature(step);
    let ext = Rank3::from_chirotope(&base, a.len() + 1).extend(e, sigma);
    let expected = Chirotope::from_lex_signs(3, a.len() + 1, ext.signs())?;
    Ok(crate::matroid::chirotope_equal(&expected, &up))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::from_i64(p).unwrap()
    }

    #[test]
    fn primal_lift_is_dual_extension() {
        let a = cfg(&[&[0, 0], &[7, 1], &[3, 8], &[-4, 5], &[2, -6], &[9, 9]]);
        for (e, sigma) in [([5, 4, 3], [1, 1, 1]), ([0, 2, 5], [-1, 1, -1]), ([3, 1, 4], [1, -1, -1])] {
            let step = primal_step(6, e, sigma);
            assert_eq!(dual_signature(&step), (e, sigma));
            let (lifted, _) = lex_lift_ordered(&a, &step.order, &step.signs, LiftMode::Generic).unwrap();
            assert!(dual_extension_matches(&a, &step, &lifted).unwrap(), "{e:?} {sigma:?}");
        }
    }

    #[test]
    fn ordered_lift_keeps_labels() {
        let a = cfg(&[&[0], &[1], &[3], &[7]]);
        let s: SignVector = "+-+".parse().unwrap();
        let (l, _) = lex_lift_ordered(&a, &[3, 0, 2, 1], &s, LiftMode::Generic).unwrap();
        for i in 0..4 {
            let p = &l.points()[i];
            // Each lifted point projects from the apex onto its base point.
            let apex = &l.points()[4];
            let t = &apex[1] / (&apex[1] - &p[1]);
            assert_eq!(&p[0] * &t, a.points()[i][0]);
        }
        assert!(lex_lift_ordered(&a, &[0, 0, 1, 2], &s, LiftMode::Generic).is_err());
    }

    #[test]
    fn one_dimensional_search() {
        let a = cfg(&[&[0], &[1], &[3], &[7], &[12]]);
        let r = kortenkamp_lift(&a, DEFAULT_SEARCH_BUDGET, 7).unwrap();
        assert_eq!((r.configuration.len(), r.configuration.dim()), (10, 6));
        assert!(is_neighborly(&r.configuration).unwrap());
        assert_eq!(r.history.len(), 5);
        assert_eq!(replay_history(&a, &r.history).unwrap(), r.configuration);
    }

    #[test]
    fn wrong_size_is_rejected() {
        let a = cfg(&[&[0], &[1], &[3]]);
        assert!(matches!(kortenkamp_lift(&a, 10, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn zero_budget_is_a_search_failure() {
        let a = cfg(&[&[0], &[1], &[3], &[7], &[12]]);
        assert!(kortenkamp_lift(&a, 0, 0).unwrap_err().is_search_failure());
    }
}
