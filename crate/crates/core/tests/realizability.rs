mod common;

use artin_monodromy::curves::{
    is_realizable, min_genus, surface_of, CurvePattern, InsertionOrder, RibbonStructure,
    SearchConfig, Verdict,
};
use artin_monodromy::standard;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn genus(p: &CurvePattern) -> usize {
    min_genus(p, 64, &cfg()).unwrap().genus().unwrap()
}

fn permuted(p: &CurvePattern, perm: &[usize]) -> CurvePattern {
    let n = p.len();
    let labels = perm.iter().map(|&i| format!("r{}", p.label(i))).collect();
    let inter = (0..n)
        .map(|a| (0..n).map(|b| p.intersection(perm[a], perm[b])).collect())
        .collect();
    CurvePattern::new(labels, inter).unwrap()
}

/// The structure induced on a sub-pattern by dropping curves.
fn restrict_structure(
    p: &CurvePattern,
    s: &RibbonStructure,
    keep: &[usize],
) -> (CurvePattern, RibbonStructure) {
    let sub = p.restrict(keep);
    let local = |x: usize| keep.iter().position(|&k| k == x);
    let visit_order = keep
        .iter()
        .map(|&x| s.visit_order[x].iter().filter_map(|&y| local(y)).collect())
        .collect();
    let all = p.crossings();
    let crossing_bits = sub
        .crossings()
        .iter()
        .map(|&(a, b)| {
            let key = (keep[a].min(keep[b]), keep[a].max(keep[b]));
            s.crossing_bits[all.iter().position(|&c| c == key).unwrap()]
        })
        .collect();
    (
        sub,
        RibbonStructure {
            visit_order,
            crossing_bits,
        },
    )
}

#[test]
fn branch_and_bound_matches_enumeration_on_fifty_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = common::random_pattern(&mut rng, 6, 8);
        assert_eq!(genus(&p), common::naive_min_genus(&p), "{p:?}");
    }
}

#[test]
fn small_named_patterns_match_enumeration() {
    assert_eq!(common::naive_min_genus(&standard::chain7_pattern()), 3);
    assert_eq!(
        genus(&standard::cycle8_pattern()),
        common::naive_min_genus(&standard::cycle8_pattern())
    );
}

#[test]
fn additivity_on_disjoint_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = common::random_pattern(&mut rng, 5, 6);
        let q = common::random_pattern(&mut rng, 5, 6);
        let b = q
            .rename((0..q.len()).map(|i| format!("z{i}")).collect())
            .unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert!(!u.is_connected());
        assert_eq!(genus(&u), genus(&a) + genus(&b));
    }
}

#[test]
fn exceeds_requires_exhaustion_and_budget_matters() {
    let chain = standard::chain7_pattern();
    let r = min_genus(&chain, 2, &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Exceeds { budget: 2 });
    assert!(r.exhausted);
    assert!(is_realizable(&chain, 3, &cfg()).unwrap().0);
}

#[test]
fn ten_curves_on_genus_five() {
    let p = standard::ten_curve_pattern();
    let (ok, w) = is_realizable(&p, 5, &cfg()).unwrap();
    assert!(ok);
    let w = w.unwrap();
    let json = w.to_json(&p);
    let back = RibbonStructure::from_json(&p, &json).unwrap();
    assert_eq!(surface_of(&p, &back).unwrap(), surface_of(&p, &w).unwrap());
    assert!(surface_of(&p, &w).unwrap().genus() <= 5);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let p = standard::twelve_curve_pattern();
    let one = min_genus(
        &p,
        5,
        &SearchConfig {
            threads: Some(1),
            ..cfg()
        },
    )
    .unwrap();
    let four = min_genus(
        &p,
        5,
        &SearchConfig {
            threads: Some(4),
            ..cfg()
        },
    )
    .unwrap();
    assert_eq!(one, four);
}

#[test]
fn cache_resume_reproduces_result() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let p = standard::eleven_curve_pattern();
    let first = min_genus(
        &p,
        5,
        &SearchConfig {
            cache: Some(path.clone()),
            ..cfg()
        },
    )
    .unwrap();
    assert!(path.exists());
    let resumed = min_genus(
        &p,
        5,
        &SearchConfig {
            cache: Some(path.clone()),
            resume: true,
            ..cfg()
        },
    )
    .unwrap();
    assert_eq!(first, resumed);
    let plain = min_genus(&p, 5, &cfg()).unwrap();
    assert_eq!(first.verdict, plain.verdict);
}

#[test]
fn insertion_orders_agree_on_named_patterns() {
    for p in [
        standard::cycle8_pattern(),
        standard::ten_curve_pattern(),
        standard::eleven_curve_pattern(),
    ] {
        let a = min_genus(&p, 6, &cfg()).unwrap().genus();
        let b = min_genus(
            &p,
            6,
            &SearchConfig {
                order: InsertionOrder::DegreeDescending,
                ..cfg()
            },
        )
        .unwrap()
        .genus();
        let mut rev: Vec<String> = p.curves().to_vec();
        rev.reverse();
        let c = min_genus(
            &p,
            6,
            &SearchConfig {
                order: InsertionOrder::Labels(rev),
                ..cfg()
            },
        )
        .unwrap()
        .genus();
        assert_eq!((a, a), (b, c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn at_least_the_f2_bound(seed in any::<u64>()) {
        let p = common::random_pattern(&mut ChaCha8Rng::seed_from_u64(seed), 7, 9);
        prop_assert_eq!(p.f2_genus_lower_bound(), common::independent_f2_bound(&p));
        prop_assert!(genus(&p) >= p.f2_genus_lower_bound());
    }

    #[test]
    fn invariant_under_relabeling_and_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_pattern(&mut rng, 7, 9);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rng);
        let g = genus(&p);
        prop_assert_eq!(genus(&permuted(&p, &perm)), g);
        let by_degree = min_genus(&p, 64, &SearchConfig { order: InsertionOrder::DegreeDescending, ..cfg() }).unwrap();
        prop_assert_eq!(by_degree.genus(), Some(g));
    }

    #[test]
    fn reflection_and_euler_identity(seed in any::<u64>()) {
        let p = common::random_pattern(&mut ChaCha8Rng::seed_from_u64(seed), 7, 10);
        let r = min_genus(&p, 64, &cfg()).unwrap();
        let w = r.witness().unwrap();
        let s = surface_of(&p, w).unwrap();
        let mirrored = surface_of(&p, &w.reversed()).unwrap();
        prop_assert_eq!(s.genus(), mirrored.genus());
        prop_assert_eq!(Some(s.genus()), r.genus());
        prop_assert_eq!(s.euler_char(), -(p.crossing_count() as i64));
        for c in &s.components {
            prop_assert_eq!(2 - 2 * c.genus as i64 - c.boundary_count as i64, c.euler_char);
        }
    }

    #[test]
    fn sub_patterns_never_gain_genus(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_pattern(&mut rng, 7, 10);
        let r = min_genus(&p, 64, &cfg()).unwrap();
        let w = r.witness().unwrap();
        let g = surface_of(&p, w).unwrap().genus();
        let mut keep: Vec<usize> = (0..p.len()).collect();
        keep.shuffle(&mut rng);
        keep.truncate(rand::Rng::gen_range(&mut rng, 1..=p.len()));
        keep.sort_unstable();
        let (sub, s) = restrict_structure(&p, w, &keep);
        // isolated curves in the sub-pattern are fine for tracing, not for validation
        if sub.validate().is_ok() {
            prop_assert!(surface_of(&sub, &s).unwrap().genus() <= g);
        }
    }
}
