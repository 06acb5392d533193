mod common;

use common::*;
use inscribed::construct::{
    fm_polynomial, kortenkamp_lift, lex_lift, replay, replay_history, sturm_root_count, verify_lex_lift,
    IntPolynomial, LiftMode, SignVector,
};
use inscribed::construct::lifting::side_table;
use inscribed::exact::{in_sphere, orientation};
use inscribed::io;
use inscribed::matroid::{chirotope_equal, point_chirotope};
use inscribed::polytope::is_neighborly;
use inscribed::sphere::{check_lemma_stereographic, is_inscribed, north_pole, stereo_inverse, stereo_project};
use inscribed::{PointConfiguration, Rational, Sign};
use itertools::Itertools;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_signs(g: &mut ChaCha8Rng, len: usize) -> SignVector {
    SignVector::new((0..len).map(|_| if g.gen_bool(0.5) { Sign::Positive } else { Sign::Negative }).collect())
        .unwrap()
}

fn refs(v: &[Vec<Rational>]) -> Vec<&[Rational]> {
    v.iter().map(Vec::as_slice).collect()
}

#[test]
fn stereographic_sidedness_against_oracle() {
    let mut g = rng(41);
    for _ in 0..20 {
        let d = g.gen_range(2..=3);
        let n = g.gen_range(d + 2..=7);
        let a = random_configuration(&mut g, n, d, 4);
        assert!(check_lemma_stereographic(&a).passed());
        let lifted = stereo_inverse(&a);
        assert!(is_inscribed(lifted.base()));
        let pole = north_pole(d + 1);
        for s in (0..n).combinations(d + 2) {
            let p: Vec<&[Rational]> = s.iter().map(|&i| a.points()[i].as_slice()).collect();
            let Some(expected) = in_sphere_oracle(&p) else { continue };
            let l: Vec<&[Rational]> = s.iter().map(|&i| lifted.base().points()[i].as_slice()).collect();
            let mut with_pole = l[..=d].to_vec();
            with_pole.push(&pole);
            assert_eq!(orientation_oracle(&l) * orientation_oracle(&with_pole), expected);
        }
        assert_eq!(stereo_project(&lifted, usize::MAX).ok(), None);
    }
}

#[test]
fn lex_lift_only_depends_on_the_oriented_matroid() {
    let mut g = rng(42);
    for k in 0..6 {
        let n = 5 + k % 2;
        let a = random_convex_polygon(&mut g, n);
        let b = random_convex_polygon(&mut g, n);
        assert_ne!(a, b);
        assert!(chirotope_equal(&point_chirotope(&a).unwrap(), &point_chirotope(&b).unwrap()));
        let s = random_signs(&mut g, n - 2);
        let (la, _) = lex_lift(&a, &s, LiftMode::Generic).unwrap();
        let (lb, _) = lex_lift(&b, &s, LiftMode::Generic).unwrap();
        assert!(chirotope_equal(&point_chirotope(&la).unwrap(), &point_chirotope(&lb).unwrap()));
    }
}

/// Empty-circumsphere conditions of a Delaunay lexicographic lifting, checked
/// with the circumcenter oracle.
fn delaunay_lift_oracle(lifted: &PointConfiguration) -> bool {
    let m = lifted.dim();
    let pts = lifted.points();
    (m + 2..pts.len()).all(|i| {
        (0..i).combinations(m + 1).all(|s| {
            let mut p: Vec<&[Rational]> = s.iter().map(|&k| pts[k].as_slice()).collect();
            p.push(&pts[i]);
            in_sphere_oracle(&p).map_or(true, |x| x == Sign::Positive)
        })
    })
}

#[test]
fn delaunay_lift_and_its_inscribed_image() {
    let mut g = rng(43);
    for _ in 0..8 {
        let d = g.gen_range(1..=2);
        let n = g.gen_range(d + 2..=6);
        let a = generic_configuration(&mut g, n, d);
        let s = random_signs(&mut g, n - d);
        let (lifted, cert) = lex_lift(&a, &s, LiftMode::Delaunay).unwrap();
        assert!(verify_lex_lift(&a, &lifted, &s, LiftMode::Delaunay).passed());
        assert!(delaunay_lift_oracle(&lifted));
        assert_eq!(replay(&a, &cert).unwrap(), lifted);

        let mut up = stereo_inverse(&lifted).into_base();
        up.push(north_pole(d + 2)).unwrap();
        let positive = vec![Sign::Positive; up.len() - 1 - (d + 1)];
        assert!(side_table(&up, d + 1, &positive).is_ok());
    }
}

#[test]
fn generic_then_positive_lift_is_neighborly() {
    let hexagon = PointConfiguration::from_i64(&[&[4, 0], &[2, 3], &[-2, 3], &[-4, 0], &[-2, -3], &[2, -4]]).unwrap();
    let cyclic = moment_curve(6, 4);
    let mut g = rng(44);
    for a in [hexagon, cyclic] {
        let d = a.dim();
        let s = random_signs(&mut g, a.len() - d);
        let (once, _) = lex_lift(&a, &s, LiftMode::Generic).unwrap();
        let (twice, _) = lex_lift(&once, &SignVector::positive(once.len() - d - 1), LiftMode::Generic).unwrap();
        assert_eq!((twice.len(), twice.dim()), (a.len() + 2, d + 2));
        assert!(is_neighborly(&twice).unwrap());
        // The oracle agrees: every facet is witnessed and the boundary closes up.
        let brute = brute_force_facets(&twice);
        assert!(is_closed_pseudomanifold(&brute.iter().cloned().collect::<Vec<_>>()));
        let k = twice.dim() / 2;
        assert!((0..twice.len()).combinations(k).all(|t| brute.iter().any(|f| t.iter().all(|x| f.contains(x)))));
    }
}

#[test]
fn search_is_reproducible() {
    let a = PointConfiguration::from_i64(&[&[0], &[2], &[3], &[8], &[13]]).unwrap();
    let first = kortenkamp_lift(&a, 2_000_000, 5).unwrap();
    let second = kortenkamp_lift(&a, 2_000_000, 5).unwrap();
    assert_eq!(first.configuration, second.configuration);
    assert_eq!(first.history, second.history);
    assert_eq!(first.evaluations, second.evaluations);
    assert_eq!(replay_history(&a, &first.history).unwrap(), first.configuration);
    let json = io::kortenkamp_to_json(&first);
    let history = io::history_from_json(&json).unwrap();
    assert_eq!(replay_history(&a, &history).unwrap(), first.configuration);
}

#[test]
fn fm_roots_separated_by_chebyshev_extrema() {
    // With x = 2cos θ, f_m(x) = 2cos(2^{m+1} θ): it takes the values ±2
    // alternately at θ = kπ/2^{m+1}, so consecutive samples bracket a root.
    for m in 0..=4usize {
        let f = fm_polynomial(m);
        let deg = 1usize << (m + 1);
        assert_eq!(f.degree(), deg);
        let mut changes = 0;
        let mut last = None;
        for k in 0..=deg {
            let x = 2.0 * (k as f64 * std::f64::consts::PI / deg as f64).cos();
            let v = eval_rational(f.coefficients(), &Rational::from_float(x).unwrap());
            let s = sign_of(&v);
            assert!(!s.is_zero());
            if last.is_some_and(|l| l != s) {
                changes += 1;
            }
            last = Some(s);
        }
        assert_eq!(changes, deg);
        assert_eq!(sturm_root_count(&f).unwrap(), deg);
    }
}

#[test]
fn sturm_counts_small_polynomials() {
    // (x-1)(x-2)(x+3) and x^2 + 1
    assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[6, -7, 0, 1])).unwrap(), 3);
    assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap(), 0);
    assert!(sturm_root_count(&IntPolynomial::zero()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn replay_reproduces_the_lifting(
        p in prop::collection::vec(prop::collection::vec(-15i64..=15, 2), 4..7),
        bits in prop::collection::vec(any::<bool>(), 5),
        delaunay in any::<bool>(),
    ) {
        let pts: Vec<Vec<Rational>> = p.into_iter().map(|x| x.into_iter().map(r).collect()).collect();
        prop_assume!(is_generic(&pts));
        let a = PointConfiguration::new(2, pts).unwrap();
        let s = SignVector::new(
            bits[..a.len() - 2].iter().map(|&b| if b { Sign::Positive } else { Sign::Negative }).collect(),
        ).unwrap();
        let mode = if delaunay { LiftMode::Delaunay } else { LiftMode::Generic };
        let (lifted, cert) = lex_lift(&a, &s, mode).unwrap();
        prop_assert!(verify_lex_lift(&a, &lifted, &s, mode).passed());
        prop_assert_eq!(replay(&a, &cert).unwrap(), lifted.clone());
        let back = io::certificate_from_json(&io::certificate_to_json(&cert)).unwrap();
        prop_assert_eq!(replay(&a, &back).unwrap(), lifted);
    }

    #[test]
    fn predicates_on_lifted_points(
        p in prop::collection::vec(prop::collection::vec(-9i64..=9, 2), 4),
    ) {
        let pts: Vec<Vec<Rational>> = p.into_iter().map(|x| x.into_iter().map(r).collect()).collect();
        prop_assume!(!orientation_oracle(&refs(&pts[..3])).is_zero());
        let a = PointConfiguration::new(2, pts.clone()).unwrap();
        let lifted = stereo_inverse(&a);
        let l = refs(lifted.base().points());
        let pole = north_pole(3);
        let mut with_pole = l[..3].to_vec();
        with_pole.push(&pole);
        prop_assert_eq!(
            orientation(&l).unwrap() * orientation(&with_pole).unwrap(),
            in_sphere(&refs(&pts)).unwrap()
        );
    }
}
