use std::collections::BTreeSet;

use fusion_core::analysis::{classify_gen_ty, run_theorem_suite};
use fusion_core::families::{
    abelian_groups_up_to, are_isomorphic, corpus, deligne_product, fingerprint, gen_gen_ty,
    gen_verlinde, CorpusEntry,
};
use fusion_core::group::gcd;
use fusion_core::io::{parse, serialize};
use fusion_core::ring::{is_integral, EPS};
use fusion_core::{FusionRing, GroupTable};
use proptest::prelude::*;

fn entries(max_rank: usize) -> Vec<&'static CorpusEntry> {
    corpus().iter().filter(|e| e.ring.rank() <= max_rank).collect()
}

fn entry(max_rank: usize) -> impl Strategy<Value = &'static CorpusEntry> {
    proptest::sample::select(entries(max_rank))
}

fn ring_and_index(max_rank: usize) -> impl Strategy<Value = (&'static FusionRing, usize)> {
    entry(max_rank).prop_flat_map(|e| (Just(&e.ring), 0..e.ring.rank()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_has_same_dimension((ring, i) in ring_and_index(20)) {
        let a = ring.fpdim_object(i).unwrap();
        let b = ring.fpdim_object(ring.dual(i)).unwrap();
        prop_assert!((a - b).abs() <= 2.0 * EPS);
        prop_assert!(a >= 1.0 - EPS);
    }

    #[test]
    fn invertibles_have_dimension_one((ring, i) in ring_and_index(20)) {
        if ring.is_invertible(i) {
            prop_assert!((ring.fpdim_object(i).unwrap() - 1.0).abs() < EPS);
        }
    }

    #[test]
    fn unit_occurs_once_in_x_times_dual((ring, i) in ring_and_index(20)) {
        prop_assert_eq!(ring.multiplicity(0, &[i, ring.dual(i)]).unwrap(), 1);
        prop_assert_eq!(ring.multiplicity(i, &[i, 0]).unwrap(), 1);
    }

    #[test]
    fn dimension_is_multiplicative(
        (ring, i, j) in entry(20).prop_flat_map(|e| (Just(&e.ring), 0..e.ring.rank(), 0..e.ring.rank()))
    ) {
        let d = ring.fpdims().unwrap();
        let lhs = d[i] * d[j];
        let rhs: f64 = (0..ring.rank()).map(|k| f64::from(ring.n(i, j, k)) * d[k]).sum();
        prop_assert!((lhs - rhs).abs() <= ring.rank() as f64 * 10.0 * EPS * lhs.max(1.0));
    }

    #[test]
    fn order_two_iff_nontrivial_self_dual((ring, i) in ring_and_index(20)) {
        let order = ring.order_of(i).unwrap();
        prop_assert_eq!(order == 2, i != 0 && ring.dual(i) == i);
        prop_assert!(order <= ring.rank());
        prop_assert_eq!(order == 1, i == 0);
    }

    #[test]
    fn universal_grading_invariants(e in entry(20)) {
        let ring = &e.ring;
        let u = ring.universal_grading().unwrap();
        prop_assert!(ring.verify_grading(&u.grading));
        prop_assert!(ring.check_universal_grading(&u).unwrap());
        prop_assert_eq!(&u.components[0], &ring.adjoint_subring());
        let orders = ring.orders().unwrap();
        for i in 0..ring.rank() {
            prop_assert_eq!(orders[i] % u.group().element_order(u.degree(i)), 0);
        }
    }

    #[test]
    fn generating_simples_generate_the_grading_group(
        (e, picks) in entry(12).prop_flat_map(|e| (Just(e), proptest::collection::vec(0..e.ring.rank(), 1..4)))
    ) {
        let ring = &e.ring;
        if ring.generated_subring(picks.iter().copied()).is_full() {
            let u = ring.universal_grading().unwrap();
            let degrees: Vec<usize> = picks.iter().map(|&i| u.degree(i)).collect();
            prop_assert!(u.group().generates(&degrees));
        }
    }

    #[test]
    fn grading_group_is_union_of_images(e in entry(20)) {
        let ring = &e.ring;
        let u = ring.universal_grading().unwrap();
        let mut covered = BTreeSet::new();
        for i in 0..ring.rank() {
            let d = ring.generated_subring([i]);
            let phi = ring.inclusion_homomorphism(&d).unwrap();
            prop_assert!(phi.image() == ring.restrict_grading(&d).unwrap().elements);
            covered.extend(phi.image());
        }
        prop_assert_eq!(covered.len(), u.order());
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(
        (a, b) in (entry(8), entry(8))
    ) {
        let aa = are_isomorphic(&a.ring, &a.ring).unwrap();
        prop_assert!(aa.is_some());
        let ab = are_isomorphic(&a.ring, &b.ring).unwrap();
        let ba = are_isomorphic(&b.ring, &a.ring).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if ab.is_some() {
            let mut fa = fingerprint(&a.ring).unwrap();
            let mut fb = fingerprint(&b.ring).unwrap();
            fa.sort();
            fb.sort();
            prop_assert_eq!(fa, fb);
            let (ua, ub) = (a.ring.universal_grading().unwrap(), b.ring.universal_grading().unwrap());
            prop_assert!(ua.group().is_isomorphic(ub.group()));
            prop_assert_eq!(a.ring.invertibles().unwrap().indices.len(), b.ring.invertibles().unwrap().indices.len());
            prop_assert_eq!(
                a.ring.upper_central_series().nilpotency_class,
                b.ring.upper_central_series().nilpotency_class
            );
        }
    }

    #[test]
    fn shuffled_rings_are_isomorphic(
        (e, perm) in entry(10).prop_flat_map(|e| {
            let rest: Vec<usize> = (1..e.ring.rank()).collect();
            (Just(e), Just(rest).prop_shuffle())
        })
    ) {
        let mut full = vec![0];
        full.extend(perm);
        let shuffled = e.ring.permuted(&full);
        prop_assert!(shuffled.verify().is_ok());
        prop_assert!(are_isomorphic(&e.ring, &shuffled).unwrap().is_some());
    }

    #[test]
    fn deligne_dimension_is_multiplicative((a, b) in (entry(5), entry(4))) {
        let p = deligne_product(&a.ring, &b.ring);
        let lhs = p.fpdim_ring().unwrap();
        let rhs = a.ring.fpdim_ring().unwrap() * b.ring.fpdim_ring().unwrap();
        prop_assert!((lhs - rhs).abs() < 10.0 * EPS * rhs);
    }
}

#[test]
fn every_corpus_ring_round_trips_through_text() {
    for e in corpus() {
        let text = serialize(&e.ring);
        assert_eq!(parse(&text).unwrap(), e.ring, "{}", e.name);
    }
}

#[test]
fn faithful_products_of_coprime_factors() {
    // nilpotent commutative corpus rings with a faithful simple
    let candidates: Vec<&CorpusEntry> = corpus()
        .iter()
        .filter(|e| e.family != "deligne" && e.ring.rank() <= 6)
        .filter(|e| e.ring.is_commutative() && e.ring.upper_central_series().is_nilpotent())
        .filter(|e| !e.ring.faithful_simples().is_empty())
        .collect();
    let mut pairs = 0;
    for a in &candidates {
        for b in &candidates {
            let (ua, ub) = (
                a.ring.universal_grading().unwrap().order(),
                b.ring.universal_grading().unwrap().order(),
            );
            if gcd(ua, ub) != 1 || a.ring.rank() * b.ring.rank() > 24 {
                continue;
            }
            let p = deligne_product(&a.ring, &b.ring);
            let rb = b.ring.rank();
            for x in a.ring.faithful_simples() {
                for y in b.ring.faithful_simples() {
                    assert!(p.generated_subring([x * rb + y]).is_full(), "{} ⊠ {}", a.name, b.name);
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs > 20, "{pairs}");
}

#[test]
fn classifier_recovers_every_generalized_ty_ring() {
    for factors in abelian_groups_up_to(16) {
        let g = GroupTable::abelian(&factors).unwrap();
        for gamma in g.all_subgroups() {
            let mut reps = BTreeSet::new();
            for c in 0..g.order() {
                let rep = gamma.iter().map(|&a| g.mul(c, a)).min().unwrap();
                if !reps.insert(rep) {
                    continue;
                }
                let ring = gen_gen_ty(&g, &gamma, c).unwrap();
                let profile = classify_gen_ty(&ring).unwrap();
                if gamma.len() == 1 {
                    assert!(profile.is_none(), "trivial Γ gives a pointed ring");
                    continue;
                }
                let p = profile.unwrap();
                assert_eq!((p.g_order(), p.gamma_order()), (g.order(), gamma.len()));
                assert!(p.group.is_isomorphic(&g));
                assert_eq!(p.universal_order, 2 * p.index());
                assert_eq!(2 * p.lambda_image.len(), p.universal_order);
                if p.index() % 2 == 1 {
                    assert!(p.has_order_two_non_invertible);
                }
            }
        }
    }
}

#[test]
fn verlinde_dimensions_are_never_integral_beyond_level_one() {
    // X_1 has dimension 2cos(π/(n+2)), an integer only for n = 1
    for n in 1..=8 {
        let d = gen_verlinde(n).fpdim_object(1).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 2.0)).cos();
        assert!((d - expected).abs() < 1e-9, "n = {n}");
        assert_eq!(is_integral(d), n == 1, "n = {n}");
    }
}

#[test]
fn corpus_theorem_suite_has_no_counterexamples() {
    let mut evaluated = 0;
    for e in corpus() {
        let report = run_theorem_suite(&e.ring).unwrap();
        assert!(report.passed(), "{}", e.name);
        evaluated += report.evaluated();
    }
    assert!(evaluated > 0);
}

fn mutate(text: &str, edits: &[(usize, char)]) -> String {
    let mut chars: Vec<char> = text.chars().collect();
    for &(at, c) in edits {
        if chars.is_empty() {
            break;
        }
        let at = at % chars.len();
        match c {
            '\u{0}' => {
                chars.remove(at);
            }
            c => chars[at] = c,
        }
    }
    chars.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parsers_never_panic_on_arbitrary_text(text in "\\PC{0,200}", m in 0usize..8) {
        let _ = parse(&text);
        let _ = fusion_core::io::parse_group_table(&text);
        let _ = fusion_core::io::parse_bichar(m, &text);
        let words: Vec<&str> = text.split_whitespace().collect();
        if let Some((family, params)) = words.split_first() {
            let no_tables = |_: &str| Err(fusion_core::Error::InvalidParameters("no tables".into()));
            let _ = fusion_core::families::FamilySpec::parse(family, params, no_tables);
        }
    }

    #[test]
    fn mutated_documents_parse_or_fail_cleanly(
        e in entry(8),
        edits in proptest::collection::vec((any::<usize>(), prop_oneof![
            Just('\u{0}'), Just('0'), Just('1'), Just('2'), Just(' '), Just('\n'), Just('x')
        ]), 1..6)
    ) {
        let text = mutate(&serialize(&e.ring), &edits);
        if let Ok(ring) = parse(&text) {
            prop_assert!(ring.verify().is_ok());
            prop_assert_eq!(parse(&serialize(&ring)).unwrap(), ring);
        }
    }
}

#[test]
fn subring_lattice_matches_subset_closures() {
    for e in corpus().iter().filter(|e| e.ring.rank() <= 10) {
        let r = &e.ring;
        let by_subsets: BTreeSet<_> = (0u32..1 << r.rank())
            .map(|mask| r.generated_subring((0..r.rank()).filter(|&i| mask & (1 << i) != 0)))
            .collect();
        let lattice: BTreeSet<_> = r.all_subrings(10).unwrap().into_iter().collect();
        assert_eq!(lattice, by_subsets, "{}", e.name);
    }
}
