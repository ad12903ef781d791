//! Generators for the named fusion-rule families, Deligne products, the
//! fixture corpus, and fusion-ring isomorphism.

mod corpus;
mod iso;
mod spec;

pub use corpus::{abelian_groups_up_to, corpus, CorpusEntry};
pub use iso::{are_isomorphic, are_isomorphic_with_budget, fingerprint, Fingerprint, DEFAULT_NODE_BUDGET};
pub use spec::{FamilySpec, GroupSpec, FAMILY_NAMES};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::FusionRing;

/// The group ring `Z[G]`: `g ⊗ h = gh`, duals are inverses.
pub fn gen_pointed(group: &GroupTable) -> FusionRing {
    let n = group.order();
    let dual = (0..n).map(|g| group.inverse(g)).collect();
    FusionRing::from_fn(n, dual, group.labels().to_vec(), |g, h, k| {
        u32::from(group.mul(g, h) == k)
    })
    .expect("group rings satisfy the fusion axioms")
}

/// Tambara-Yamagami rules: `X ⊗ X = ⊕_{g ∈ G} g`.
pub fn gen_ty(group: &GroupTable) -> FusionRing {
    gen_near_group(group, 0)
}

/// Near-group rules of type `(G, κ)`: basis `G ∪ {X}`, `g ⊗ X = X ⊗ g = X`,
/// `X ⊗ X = ⊕_{g ∈ G} g ⊕ κX`, `X* = X`.
pub fn gen_near_group(group: &GroupTable, kappa: u32) -> FusionRing {
    let n = group.order();
    let x = n;
    let mut dual: Vec<usize> = (0..n).map(|g| group.inverse(g)).collect();
    dual.push(x);
    let mut labels = group.labels().to_vec();
    labels.push("X".to_string());
    FusionRing::from_fn(n + 1, dual, labels, |i, j, k| match (i == x, j == x) {
        (false, false) => u32::from(k < n && group.mul(i, j) == k),
        (true, true) => {
            if k == x {
                kappa
            } else {
                1
            }
        }
        _ => u32::from(k == x),
    })
    .expect("near-group rules satisfy the fusion axioms")
}

/// The Ising rules `X ⊗ X = 1 ⊕ a` on the basis `1, a, X`.
pub fn gen_ising() -> FusionRing {
    gen_ty(&GroupTable::cyclic(2)).with_labels(vec!["1".into(), "a".into(), "X".into()])
}

/// The Yang-Lee (Fibonacci) rules `X ⊗ X = 1 ⊕ X`.
pub fn gen_yang_lee() -> FusionRing {
    gen_near_group(&GroupTable::trivial(), 1).with_labels(vec!["1".into(), "X".into()])
}

/// Truncated Clebsch-Gordan rules at level `n`: basis `X0..Xn`, all self-dual,
/// `N_{ij}^l = 1` iff `|i-j| ≤ l ≤ min(i+j, 2n-(i+j))` and `l ≡ i+j (mod 2)`.
pub fn gen_verlinde(n: usize) -> FusionRing {
    let labels = (0..=n).map(|i| format!("X{i}")).collect();
    FusionRing::from_fn(n + 1, (0..=n).collect(), labels, |i, j, l| {
        let lo = i.abs_diff(j);
        let hi = (i + j).min(2 * n - (i + j));
        u32::from(lo <= l && l <= hi && (i + j + l) % 2 == 0)
    })
    .expect("Verlinde rules satisfy the fusion axioms")
}

/// The fermionic Moore-Read rules on `{e, g, g^2, g^3, X, X'}` with
/// `G = Z_4`, `g^2 ⊗ X = X`, `g ⊗ X = X'`, `X ⊗ X' = 1 ⊕ g^2`,
/// `X ⊗ X = X' ⊗ X' = g ⊕ g^3`. Commutative.
pub fn gen_moore_read() -> FusionRing {
    const X: usize = 4;
    let labels = ["e", "g", "g^2", "g^3", "X", "X'"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // products as (sorted) lists of basis indices
    let product = |a: usize, b: usize| -> Vec<usize> {
        match (a >= X, b >= X) {
            (false, false) => vec![(a + b) % 4],
            (false, true) => vec![X + ((b - X) ^ (a % 2))],
            (true, false) => vec![X + ((a - X) ^ (b % 2))],
            (true, true) if a == b => vec![1, 3],
            (true, true) => vec![0, 2],
        }
    };
    FusionRing::from_fn(6, vec![0, 3, 2, 1, 5, 4], labels, |i, j, k| {
        u32::from(product(i, j).contains(&k))
    })
    .expect("Moore-Read rules satisfy the fusion axioms")
}

/// Generalized Tambara-Yamagami rules of type `(G, Γ)` for abelian `G`.
///
/// `gamma_gens` generate `Γ`; `coset_rep` is any element of the coset `c`.
/// The basis is `G` followed by `X_s` for each coset `s ∈ G/Γ` (ordered by
/// smallest member), with
/// `g ⊗ X_s = X_s ⊗ g = X_{gs}`, `X_s ⊗ X_t = ⊕_{a ∈ stc} a`, and
/// `X_s* = X_{s⁻¹c⁻¹}`. The result is re-verified against every axiom.
pub fn gen_gen_ty(group: &GroupTable, gamma_gens: &[usize], coset_rep: usize) -> Result<FusionRing> {
    if !group.is_abelian() {
        return Err(Error::InvalidGroup("generalized TY generator needs an abelian group".into()));
    }
    let n = group.order();
    if coset_rep >= n {
        return Err(Error::InvalidCoset(format!("element {coset_rep} out of range")));
    }
    let gamma = group.subgroup_generated(gamma_gens)?;

    // coset index of every element
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] == usize::MAX {
            for &a in &gamma {
                coset_of[group.mul(g, a)] = reps.len();
            }
            reps.push(g);
        }
    }
    let m = reps.len();
    let rank = n + m;
    let c = coset_rep;
    let x = |s: usize| n + s;

    let mut dual: Vec<usize> = (0..n).map(|g| group.inverse(g)).collect();
    for &rep in &reps {
        // s⁻¹ c⁻¹
        let target = group.mul(group.inverse(rep), group.inverse(c));
        dual.push(x(coset_of[target]));
    }
    let mut labels = group.labels().to_vec();
    labels.extend(reps.iter().map(|&r| format!("X[{}]", group.label(r))));

    let ring = FusionRing::from_fn(rank, dual, labels, |i, j, k| {
        match (i >= n, j >= n) {
            (false, false) => u32::from(k == group.mul(i, j)),
            (false, true) => u32::from(k == x(coset_of[group.mul(i, reps[j - n])])),
            (true, false) => u32::from(k == x(coset_of[group.mul(reps[i - n], j)])),
            (true, true) => {
                let stc = group.mul(group.mul(reps[i - n], reps[j - n]), c);
                u32::from(k < n && coset_of[k] == coset_of[stc])
            }
        }
    })?;
    Ok(ring)
}

/// `R1 ⊠ R2` on index pairs `(i, i')` stored at `i * rank2 + i'`.
pub fn deligne_product(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let rb = b.rank();
    let rank = a.rank() * rb;
    let dual = (0..rank)
        .map(|p| a.dual(p / rb) * rb + b.dual(p % rb))
        .collect();
    let labels = (0..rank)
        .map(|p| format!("{}⊠{}", a.label(p / rb), b.label(p % rb)))
        .collect();
    FusionRing::from_fn(rank, dual, labels, |p, q, s| {
        a.n(p / rb, q / rb, s / rb) * b.n(p % rb, q % rb, s % rb)
    })
    .expect("Deligne product of fusion rings is a fusion ring")
}

/// Character rings of small groups, keyed `S3`, `D4`, `Q8`, `A4`.
pub fn rep_corpus(key: &str) -> Result<FusionRing> {
    // (labels, duals, nonzero products (i, j, [(k, N)]) for i ≤ j; commutative)
    type Table = (&'static [&'static str], &'static [usize], &'static [(usize, usize, &'static [(usize, u32)])]);
    const S3: Table = (
        &["1", "sgn", "V"],
        &[0, 1, 2],
        &[
            (1, 1, &[(0, 1)]),
            (1, 2, &[(2, 1)]),
            (2, 2, &[(0, 1), (1, 1), (2, 1)]),
        ],
    );
    // 1-dimensional characters form a Klein four-group; V is the 2-dimensional irrep.
    const KLEIN_PLUS_2D: &[(usize, usize, &[(usize, u32)])] = &[
        (1, 1, &[(0, 1)]),
        (1, 2, &[(3, 1)]),
        (1, 3, &[(2, 1)]),
        (2, 2, &[(0, 1)]),
        (2, 3, &[(1, 1)]),
        (3, 3, &[(0, 1)]),
        (1, 4, &[(4, 1)]),
        (2, 4, &[(4, 1)]),
        (3, 4, &[(4, 1)]),
        (4, 4, &[(0, 1), (1, 1), (2, 1), (3, 1)]),
    ];
    const D4: Table = (&["1", "a", "b", "c", "V"], &[0, 1, 2, 3, 4], KLEIN_PLUS_2D);
    const Q8: Table = (&["1", "i", "j", "k", "H"], &[0, 1, 2, 3, 4], KLEIN_PLUS_2D);
    const A4: Table = (
        &["1", "w", "w2", "V"],
        &[0, 2, 1, 3],
        &[
            (1, 1, &[(2, 1)]),
            (1, 2, &[(0, 1)]),
            (2, 2, &[(1, 1)]),
            (1, 3, &[(3, 1)]),
            (2, 3, &[(3, 1)]),
            (3, 3, &[(0, 1), (1, 1), (2, 1), (3, 2)]),
        ],
    );
    let (labels, dual, products) = match key {
        "S3" => S3,
        "D4" => D4,
        "Q8" => Q8,
        "A4" => A4,
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    let rank = labels.len();
    let lookup = |i: usize, j: usize, k: usize| -> u32 {
        if i == 0 {
            return u32::from(j == k);
        }
        if j == 0 {
            return u32::from(i == k);
        }
        let (lo, hi) = (i.min(j), i.max(j));
        products
            .iter()
            .find(|(a, b, _)| *a == lo && *b == hi)
            .and_then(|(_, _, terms)| terms.iter().find(|(t, _)| *t == k).map(|(_, m)| *m))
            .unwrap_or(0)
    };
    FusionRing::from_fn(
        rank,
        dual.to_vec(),
        labels.iter().map(|s| s.to_string()).collect(),
        lookup,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::EPS;

    #[test]
    fn pointed_rings() {
        assert_eq!(gen_pointed(&GroupTable::trivial()).rank(), 1);
        let s3 = gen_pointed(&GroupTable::symmetric(3));
        assert_eq!(s3.rank(), 6);
        assert!(!s3.is_commutative());
    }

    #[test]
    fn ty_dimensions() {
        let ising = gen_ty(&GroupTable::cyclic(2));
        assert!(are_isomorphic(&ising, &gen_ising()).unwrap().is_some());
        assert!((ising.fpdim_ring().unwrap() - 4.0).abs() < EPS);
        let k4 = gen_ty(&GroupTable::abelian(&[2, 2]).unwrap());
        assert_eq!(k4.rank(), 5);
        assert!((k4.fpdim_ring().unwrap() - 8.0).abs() < 10.0 * EPS);
        let e8 = gen_ty(&GroupTable::abelian(&[2, 2, 2]).unwrap());
        assert!((e8.fpdim_ring().unwrap() - 16.0).abs() < 10.0 * EPS);
    }

    #[test]
    fn near_group_zero_is_ty() {
        for factors in [&[1][..], &[2], &[3], &[2, 2], &[4]] {
            let g = GroupTable::abelian(factors).unwrap();
            assert_eq!(gen_near_group(&g, 0), gen_ty(&g));
        }
    }

    #[test]
    fn near_group_examples() {
        let yl = gen_near_group(&GroupTable::trivial(), 1);
        assert!(are_isomorphic(&yl, &gen_yang_lee()).unwrap().is_some());
        let s3 = gen_near_group(&GroupTable::cyclic(2), 1);
        assert!(are_isomorphic(&s3, &rep_corpus("S3").unwrap()).unwrap().is_some());
        let z3 = gen_near_group(&GroupTable::cyclic(3), 2);
        assert_eq!(z3.universal_grading().unwrap().order(), 1);
    }

    #[test]
    fn verlinde_rules() {
        assert_eq!(gen_verlinde(0).rank(), 1);
        assert!(are_isomorphic(&gen_verlinde(2), &gen_ising()).unwrap().is_some());
        let v3 = gen_verlinde(3);
        assert_eq!(v3.product(1, 2), &[0, 1, 0, 1]);
    }

    #[test]
    fn verlinde_dimensions_match_sine_formula() {
        for n in 1..=8 {
            let v = gen_verlinde(n);
            let theta = std::f64::consts::PI / (n as f64 + 2.0);
            for j in 0..=n {
                let expected = ((j as f64 + 1.0) * theta).sin() / theta.sin();
                assert!((v.fpdim_object(j).unwrap() - expected).abs() < 1e-8, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn moore_read_structure() {
        let mr = gen_moore_read();
        assert!(mr.verify().is_ok());
        assert!(mr.invertibles().unwrap().group.is_isomorphic(&GroupTable::cyclic(4)));
        let (x, xp) = (mr.index_of("X").unwrap(), mr.index_of("X'").unwrap());
        // oracle: the unit occurs only in X ⊗ X'
        let dual_by_scan = (0..mr.rank()).find(|&j| mr.n(x, j, 0) > 0).unwrap();
        assert_eq!(dual_by_scan, xp);
        assert_eq!(mr.dual(x), xp);
    }

    #[test]
    fn gen_ty_examples() {
        let z4 = GroupTable::cyclic(4);
        let mr_like = gen_gen_ty(&z4, &[2], 1).unwrap();
        assert!(are_isomorphic(&mr_like, &gen_moore_read()).unwrap().is_some());
        for factors in [&[2][..], &[3], &[2, 2], &[4]] {
            let g = GroupTable::abelian(factors).unwrap();
            let all: Vec<usize> = (0..g.order()).collect();
            let (a, b) = (gen_gen_ty(&g, &all, 0).unwrap(), gen_ty(&g));
            assert_eq!((a.constants(), a.duals()), (b.constants(), b.duals()));
        }
    }

    #[test]
    fn gen_ty_rank_and_dimension() {
        for factors in [&[2][..], &[4], &[2, 2], &[6], &[8], &[2, 4], &[3, 3]] {
            let g = GroupTable::abelian(factors).unwrap();
            for gamma in g.all_subgroups() {
                for c in 0..g.order() {
                    let r = gen_gen_ty(&g, &gamma, c).unwrap();
                    let index = g.order() / gamma.len();
                    assert_eq!(r.rank(), index * (1 + gamma.len()));
                    let dim = r.fpdim_ring().unwrap();
                    assert!((dim - 2.0 * g.order() as f64).abs() < 1e-6);
                }
            }
        }
    }

    #[test]
    fn gen_ty_rejects_bad_parameters() {
        let z4 = GroupTable::cyclic(4);
        assert!(matches!(gen_gen_ty(&z4, &[7], 0), Err(Error::InvalidSubgroup(_))));
        assert!(matches!(gen_gen_ty(&z4, &[2], 9), Err(Error::InvalidCoset(_))));
        assert!(matches!(
            gen_gen_ty(&GroupTable::symmetric(3), &[1], 0),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn deligne_products() {
        let p = deligne_product(&gen_ising(), &gen_pointed(&GroupTable::cyclic(2)));
        assert_eq!(p.rank(), 6);
        let trivial = gen_pointed(&GroupTable::trivial());
        for r in [gen_moore_read(), gen_verlinde(3), rep_corpus("A4").unwrap()] {
            assert!(are_isomorphic(&deligne_product(&r, &trivial), &r).unwrap().is_some());
        }
        let a = gen_moore_read();
        let b = gen_verlinde(3);
        let ua = a.universal_grading().unwrap();
        let ub = b.universal_grading().unwrap();
        let uab = deligne_product(&a, &b).universal_grading().unwrap();
        assert!(uab.group().is_isomorphic(&ua.group().direct_product(ub.group())));
    }

    #[test]
    fn character_rings() {
        let s3 = rep_corpus("S3").unwrap();
        assert_eq!(s3.rank(), 3);
        let dims: Vec<f64> = s3.fpdims().unwrap();
        assert!((dims[2] - 2.0).abs() < EPS && (dims[1] - 1.0).abs() < EPS);
        let d4 = rep_corpus("D4").unwrap();
        let q8 = rep_corpus("Q8").unwrap();
        assert_eq!(d4.rank(), 5);
        assert!(are_isomorphic(&d4, &q8).unwrap().is_some());
        let a4 = rep_corpus("A4").unwrap();
        assert_eq!(a4.universal_grading().unwrap().order(), 1);
        assert!(matches!(rep_corpus("S4"), Err(Error::UnknownFamily(_))));
    }
}
